//! Brute-force invariants computed with different mathematics from the
//! R-matrix pipeline: the Kauffman bracket state sum and the reduced Burau
//! determinant.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Signed;
use rayon::prelude::*;

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::ring::{LaurentPoly, VarSet};

/// Largest word length accepted by [`kauffman_jones`].
pub const MAX_BRACKET_CROSSINGS: usize = 24;

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, mut a: usize) -> usize {
        while self.0[a] != a {
            self.0[a] = self.0[self.0[a]];
            a = self.0[a];
        }
        a
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.0[ra] = rb;
        true
    }
}

/// Loops in the closure diagram resolved by `state`: bit `t` set means the
/// crossing at height `t` gets the smoothing that keeps strands vertical.
fn loops(n: usize, word: &[i32], state: u64) -> u32 {
    let len = word.len();
    // Segment (t, p) sits at position p just above crossing t; height len wraps to 0.
    let node = |t: usize, p: usize| (t % len.max(1)) * n + p;
    let total = len.max(1) * n;
    let mut uf = UnionFind::new(total);
    let mut parts = total as u32;
    if len == 0 {
        return n as u32;
    }
    for (t, &g) in word.iter().enumerate() {
        let k = g.unsigned_abs() as usize - 1;
        for p in 0..n {
            if p != k && p != k + 1 && uf.union(node(t, p), node(t + 1, p)) {
                parts -= 1;
            }
        }
        let pairs = if state >> t & 1 == 1 {
            [(node(t, k), node(t + 1, k)), (node(t, k + 1), node(t + 1, k + 1))]
        } else {
            [(node(t, k), node(t, k + 1)), (node(t + 1, k), node(t + 1, k + 1))]
        };
        for (a, b) in pairs {
            if uf.union(a, b) {
                parts -= 1;
            }
        }
    }
    parts
}

/// Writhe-normalized Kauffman bracket `(-A^3)^{-w} ⟨D⟩` of the closure, in `A`.
///
/// A positive crossing contributes `A` for the vertical smoothing and `A^{-1}`
/// for the horizontal one; a negative crossing the reverse. The unknot gives 1.
pub fn kauffman_jones(b: &BraidWord) -> Result<LaurentPoly> {
    let len = b.len();
    if len > MAX_BRACKET_CROSSINGS {
        return Err(Error::ResourceLimit(format!(
            "bracket state sum over {len} crossings exceeds the limit of {MAX_BRACKET_CROSSINGS}"
        )));
    }
    let n = b.strands();
    let word = b.word();
    let states: u64 = 1 << len;
    let chunk = 1u64 << len.saturating_sub(8);
    let counts: BTreeMap<(i32, u32), u64> = (0..states.div_ceil(chunk))
        .into_par_iter()
        .map(|c| {
            let mut local: BTreeMap<(i32, u32), u64> = BTreeMap::new();
            for state in c * chunk..((c + 1) * chunk).min(states) {
                let mut a = 0i32;
                for (t, &g) in word.iter().enumerate() {
                    let vertical = state >> t & 1 == 1;
                    a += if vertical == (g > 0) { 1 } else { -1 };
                }
                *local.entry((a, loops(n, word, state))).or_default() += 1;
            }
            local
        })
        .reduce(BTreeMap::new, |mut x, y| {
            for (k, v) in y {
                *x.entry(k).or_default() += v;
            }
            x
        });
    let av = VarSet::single("A");
    let delta = LaurentPoly::from_terms(&av, [(vec![2], BigInt::from(-1)), (vec![-2], BigInt::from(-1))]);
    let mut powers = vec![LaurentPoly::one(&av)];
    let mut bracket = LaurentPoly::zero(&av);
    for ((a, l), count) in counts {
        while powers.len() < l as usize {
            let next = powers.last().unwrap() * &delta;
            powers.push(next);
        }
        bracket.add_assign_ref(&powers[l as usize - 1].shift(0, a).scale(&BigInt::from(count)));
    }
    let w = b.writhe();
    let sign = if w % 2 == 0 { 1 } else { -1 };
    Ok(bracket.shift(0, -3 * w as i32).scale(&BigInt::from(sign)))
}

/// `A^{2k} ↦ (-1)^k d^k`, the dictionary `d = -A^2`.
pub fn bracket_to_d(p: &LaurentPoly) -> Result<LaurentPoly> {
    let dv = VarSet::single("d");
    let mut terms = Vec::new();
    for (e, c) in p.terms() {
        if e[0] % 2 != 0 {
            return Err(Error::InvalidArgument(format!("odd power of A in {p}")));
        }
        let k = e[0] / 2;
        terms.push((vec![k], if k % 2 == 0 { c.clone() } else { -c }));
    }
    Ok(LaurentPoly::from_terms(&dv, terms))
}

fn identity(r: usize, tv: &VarSet) -> Vec<Vec<LaurentPoly>> {
    (0..r)
        .map(|i| (0..r).map(|j| if i == j { LaurentPoly::one(tv) } else { LaurentPoly::zero(tv) }).collect())
        .collect()
}

fn burau_letter(n: usize, g: i32, tv: &VarSet) -> Vec<Vec<LaurentPoly>> {
    let r = n - 1;
    let mut m = identity(r, tv);
    let i = g.unsigned_abs() as usize - 1;
    let t = |e: i32, c: i64| LaurentPoly::monomial(tv, vec![e], c);
    let (diag, above, below) = if g > 0 { (t(1, -1), t(1, 1), t(0, 1)) } else { (t(-1, -1), t(0, 1), t(-1, 1)) };
    m[i][i] = diag;
    if i > 0 {
        m[i - 1][i] = above;
    }
    if i + 1 < r {
        m[i + 1][i] = below;
    }
    m
}

fn mat_mul(a: &[Vec<LaurentPoly>], b: &[Vec<LaurentPoly>], tv: &VarSet) -> Vec<Vec<LaurentPoly>> {
    let r = a.len();
    (0..r)
        .map(|i| {
            (0..r)
                .map(|j| {
                    let mut s = LaurentPoly::zero(tv);
                    for (k, bk) in b.iter().enumerate() {
                        if !a[i][k].is_zero() && !bk[j].is_zero() {
                            s.add_assign_ref(&(&a[i][k] * &bk[j]));
                        }
                    }
                    s
                })
                .collect()
        })
        .collect()
}

/// Determinant by cofactor expansion along the first row.
fn det(m: &[Vec<LaurentPoly>], tv: &VarSet) -> LaurentPoly {
    let r = m.len();
    if r == 0 {
        return LaurentPoly::one(tv);
    }
    let mut total = LaurentPoly::zero(tv);
    for j in 0..r {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<LaurentPoly>> =
            m[1..].iter().map(|row| row.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, v)| v.clone()).collect()).collect();
        let term = &m[0][j] * &det(&minor, tv);
        total = if j % 2 == 0 { &total + &term } else { &total - &term };
    }
    total
}

/// Reduced Burau matrix of a braid word, in `t`.
pub fn burau_matrix(b: &BraidWord) -> Vec<Vec<LaurentPoly>> {
    let tv = VarSet::single("t");
    let n = b.strands();
    let mut m = identity(n.saturating_sub(1), &tv);
    for &g in b.word() {
        m = mat_mul(&m, &burau_letter(n, g, &tv), &tv);
    }
    m
}

/// Alexander polynomial `det(I - B) / (1 + t + … + t^{n-1})` in symmetric form.
pub fn burau_alexander(b: &BraidWord) -> Result<LaurentPoly> {
    let link = b.close();
    if !link.is_knot() {
        return Err(Error::NotAKnot(link.components));
    }
    let tv = VarSet::single("t");
    let n = b.strands();
    if n == 1 {
        return Ok(LaurentPoly::one(&tv));
    }
    let bm = burau_matrix(b);
    let ib: Vec<Vec<LaurentPoly>> = bm
        .iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(|(j, v)| if i == j { &LaurentPoly::one(&tv) - v } else { -v.clone() })
                .collect()
        })
        .collect();
    let d = det(&ib, &tv);
    let geometric = LaurentPoly::from_terms(&tv, (0..n as i32).map(|k| (vec![k], BigInt::from(1))));
    let delta = d.div_exact(&geometric, 0)?;
    Ok(symmetric_normal_form(&delta))
}

/// Shifts a one-variable polynomial so its exponents are centred at 0 (or
/// at 1/2 when the span is odd) and makes the leading coefficient positive.
pub fn symmetric_normal_form(p: &LaurentPoly) -> LaurentPoly {
    let (Some(lo), Some(hi)) = (p.min_exp(0), p.max_exp(0)) else {
        return p.clone();
    };
    let shift = -(lo + hi).div_euclid(2);
    let q = p.shift(0, shift);
    let lead_negative = q.terms().next_back().is_some_and(|(_, c)| c.is_negative());
    if lead_negative {
        -q
    } else {
        q
    }
}

/// `t ↦ s^2` on a polynomial in `t`.
pub fn alexander_in_s(p: &LaurentPoly) -> Result<LaurentPoly> {
    let sv = VarSet::single("s");
    p.hom(&sv, &[LaurentPoly::var_pow(&sv, "s", 2)?])
}
