//! Weight spaces of tensor powers of the two-variable Verma module and the
//! braid group action through the R-matrix.
//!
//! Basis conventions: `E v_i = v_{i-1}`, `F v_j = [j+1][λ-j] v_{j+1}`, with
//! weight variable `x = d^{-λ}` and `{λ - t} = x^{-1} d^{-t} - x d^t`.
//! A crossing acts on positions `(k, k+1)` and then exchanges the colours.
//! Crossings between strands of different components carry an extra
//! `(x_a x_b)^{±1}`.

use std::collections::{BTreeMap, HashMap};

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::ring::{gauss_table, LaurentPoly, VarSet};

pub type BasisState = Vec<u32>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn of(g: i32) -> Sign {
        if g > 0 {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }
}

/// Enumerated basis of `V_{n,m}`, optionally capped per strand (`e_k < caps[k]`).
#[derive(Clone, Debug)]
pub struct WeightSpace {
    pub n: usize,
    pub m: u32,
    pub caps: Option<Vec<u32>>,
    basis: Vec<BasisState>,
    index: HashMap<BasisState, usize>,
}

impl WeightSpace {
    pub fn basis(&self) -> &[BasisState] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn index_of(&self, s: &[u32]) -> Option<usize> {
        self.index.get(s).copied()
    }
}

/// Lexicographically ordered basis of the weight space.
pub fn enumerate_basis(n: usize, m: u32, caps: Option<&[u32]>) -> WeightSpace {
    fn rec(k: usize, n: usize, left: u32, caps: Option<&[u32]>, cur: &mut Vec<u32>, out: &mut Vec<BasisState>) {
        if k + 1 == n {
            if caps.is_none_or(|c| left < c[k]) {
                cur.push(left);
                out.push(cur.clone());
                cur.pop();
            }
            return;
        }
        let hi = caps.map_or(left, |c| left.min(c[k].saturating_sub(1)));
        if caps.is_some_and(|c| c[k] == 0) {
            return;
        }
        for e in 0..=hi {
            cur.push(e);
            rec(k + 1, n, left - e, caps, cur, out);
            cur.pop();
        }
    }
    let mut basis = Vec::new();
    if n == 0 {
        if m == 0 {
            basis.push(vec![]);
        }
    } else {
        rec(0, n, m, caps, &mut Vec::new(), &mut basis);
    }
    let index = basis.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect();
    WeightSpace { n, m, caps: caps.map(|c| c.to_vec()), basis, index }
}

/// Sparse combination of basis states.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightVector {
    vars: VarSet,
    terms: BTreeMap<BasisState, LaurentPoly>,
}

impl WeightVector {
    pub fn zero(vars: &VarSet) -> Self {
        WeightVector { vars: vars.clone(), terms: BTreeMap::new() }
    }

    pub fn basis(vars: &VarSet, state: BasisState) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(state, LaurentPoly::one(vars));
        WeightVector { vars: vars.clone(), terms }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BasisState, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, s: &[u32]) -> LaurentPoly {
        self.terms.get(s).cloned().unwrap_or_else(|| LaurentPoly::zero(&self.vars))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, s: BasisState, c: &LaurentPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&s) {
            Some(v) => {
                v.add_assign_ref(c);
                if v.is_zero() {
                    self.terms.remove(&s);
                }
            }
            None => {
                self.terms.insert(s, c.clone());
            }
        }
    }

    /// Total weight of the (homogeneous) vector, if nonzero.
    pub fn weight(&self) -> Option<u32> {
        self.terms.keys().next().map(|s| s.iter().sum())
    }
}

/// One entry of an R-matrix row: target `(i', j')` and its coefficient.
#[derive(Clone, Debug)]
pub struct BlockEntry {
    pub target: (u32, u32),
    /// Number of steps transferred between the two strands.
    pub steps: u32,
    pub coeff: LaurentPoly,
}

/// Cached action of one crossing type on `v_i ⊗ v_j`, `i + j <= max_weight`.
#[derive(Clone, Debug)]
pub struct RMatrixBlock {
    pub left: usize,
    pub right: usize,
    pub sign: Sign,
    pub max_weight: u32,
    rows: Vec<Vec<Vec<BlockEntry>>>,
}

impl RMatrixBlock {
    pub fn row(&self, i: u32, j: u32) -> Option<&[BlockEntry]> {
        self.rows.get(i as usize)?.get(j as usize).map(|v| v.as_slice())
    }
}

struct Brackets {
    /// `{λ_c - t}` for colour variable `c` and `t <= max`.
    table: HashMap<usize, Vec<LaurentPoly>>,
}

impl Brackets {
    fn new(vars: &VarSet, d: usize, colours: &[usize], max: u32) -> Self {
        let mut table = HashMap::new();
        for &c in colours {
            let v = (0..=max as i32)
                .map(|t| {
                    let mut a = vec![0; vars.len()];
                    a[c] = -1;
                    a[d] = -t;
                    let mut b = vec![0; vars.len()];
                    b[c] = 1;
                    b[d] = t;
                    &LaurentPoly::monomial(vars, a, 1) - &LaurentPoly::monomial(vars, b, 1)
                })
                .collect();
            table.insert(c, v);
        }
        Brackets { table }
    }

    /// `∏_{k=0}^{n-1} {λ_c - s - k}`.
    fn falling(&self, vars: &VarSet, c: usize, s: u32, n: u32) -> LaurentPoly {
        let mut acc = LaurentPoly::one(vars);
        for k in 0..n {
            acc = &acc * &self.table[&c][(s + k) as usize];
        }
        acc
    }
}

/// Builds the R-matrix block for colours `(left, right)` and checks weight
/// preservation, triangularity and the level-crossing divisibility.
pub fn build_r_block(
    vars: &VarSet,
    d: usize,
    left: usize,
    right: usize,
    sign: Sign,
    max_weight: u32,
) -> Result<RMatrixBlock> {
    let binom = gauss_table(max_weight as usize, vars, vars.name(d))?;
    let br = Brackets::new(vars, d, &[left, right], max_weight);
    build_block_with(vars, d, &binom, &br, left, right, sign, max_weight)
}

#[allow(clippy::too_many_arguments)]
fn build_block_with(
    vars: &VarSet,
    d: usize,
    binom: &[Vec<LaurentPoly>],
    br: &Brackets,
    a: usize,
    b: usize,
    sign: Sign,
    w: u32,
) -> Result<RMatrixBlock> {
    let mono = |pairs: &[(usize, i64)]| {
        let mut e = vec![0i32; vars.len()];
        for &(v, p) in pairs {
            e[v] += p as i32;
        }
        e
    };
    let pair = if a != b { 1 } else { 0 };
    let mut rows = Vec::with_capacity(w as usize + 1);
    for i in 0..=w {
        let mut row = Vec::with_capacity((w - i) as usize + 1);
        for j in 0..=(w - i) {
            let mut entries = Vec::new();
            match sign {
                Sign::Positive => {
                    for n in 0..=i {
                        let (ip, jp) = ((i - n) as i64, (j + n) as i64);
                        let nn = n as i64;
                        let e = mono(&[
                            (d, nn * (nn - 1) / 2 + 2 * ip * jp),
                            (a, jp + pair),
                            (b, ip + pair),
                        ]);
                        let c = &binom[(j + n) as usize][n as usize] * &br.falling(vars, b, j, n);
                        entries.push(BlockEntry {
                            target: ((j + n), (i - n)),
                            steps: n,
                            coeff: c.mul_monomial(&e),
                        });
                    }
                }
                Sign::Negative => {
                    let (p, q) = (i, j);
                    for n in 0..=q {
                        let nn = n as i64;
                        let e = mono(&[
                            (d, -nn * (nn - 1) / 2 - 2 * p as i64 * q as i64),
                            (b, -(p as i64) - pair),
                            (a, -(q as i64) - pair),
                        ]);
                        let mut c = &binom[(p + n) as usize][n as usize] * &br.falling(vars, a, p, n);
                        if n % 2 == 1 {
                            c = -c;
                        }
                        entries.push(BlockEntry {
                            target: (q - n, p + n),
                            steps: n,
                            coeff: c.mul_monomial(&e),
                        });
                    }
                }
            }
            entries.retain(|e| !e.coeff.is_zero());
            row.push(entries);
        }
        rows.push(row);
    }
    let block = RMatrixBlock { left: a, right: b, sign, max_weight: w, rows };
    check_block(vars, d, &block)?;
    Ok(block)
}

fn check_block(vars: &VarSet, d: usize, block: &RMatrixBlock) -> Result<()> {
    let fail = |msg: String| Err(Error::SelfCheck(msg));
    for i in 0..=block.max_weight {
        for j in 0..=(block.max_weight - i) {
            let row = block.row(i, j).unwrap();
            for e in row {
                let (ti, tj) = e.target;
                if ti + tj != i + j {
                    return fail(format!("weight not preserved at ({i},{j})"));
                }
                // The strand moving through the crossing only gains indices.
                let (src, dst) = match block.sign {
                    Sign::Positive => (j, ti),
                    Sign::Negative => (i, tj),
                };
                if dst != src + e.steps {
                    return fail(format!("triangularity broken at ({i},{j})"));
                }
                if i == 0 && j == 0 && !e.coeff.is_unit() {
                    return fail("bottom state not sent to a unit multiple".into());
                }
                let moving = match block.sign {
                    Sign::Positive => block.right,
                    Sign::Negative => block.left,
                };
                for level in (src + 1)..=dst {
                    let img = LaurentPoly::var_index_pow(vars, d, 1 - level as i32);
                    let spec = e.coeff.substitute(vars.name(moving), &img)?;
                    if !spec.is_zero() {
                        return fail(format!(
                            "transition ({i},{j})->({ti},{tj}) does not vanish at level {level}"
                        ));
                    }
                }
            }
        }
    }
    Ok(())
}

/// Braid action engine: R-matrix blocks for a fixed set of colour variables.
#[derive(Clone, Debug)]
pub struct Engine {
    vars: VarSet,
    d: usize,
    colours: Vec<usize>,
    max_weight: u32,
    blocks: HashMap<(usize, usize, Sign), RMatrixBlock>,
}

impl Engine {
    /// Builds all blocks for ordered pairs of `colours` and runs the
    /// self-check (block constraints, exact inverse, Yang–Baxter on small weights).
    pub fn new(vars: &VarSet, d: &str, colour_names: &[&str], max_weight: u32) -> Result<Self> {
        let d = vars.require(d)?;
        let colours: Vec<usize> = colour_names.iter().map(|c| vars.require(c)).collect::<Result<_>>()?;
        let binom = gauss_table(max_weight as usize, vars, vars.name(d))?;
        let br = Brackets::new(vars, d, &colours, max_weight);
        let mut blocks = HashMap::new();
        for &a in &colours {
            for &b in &colours {
                for sign in [Sign::Positive, Sign::Negative] {
                    let blk = build_block_with(vars, d, &binom, &br, a, b, sign, max_weight)?;
                    blocks.insert((a, b, sign), blk);
                }
            }
        }
        let eng = Engine { vars: vars.clone(), d, colours, max_weight, blocks };
        eng.check_inverse()?;
        eng.check_yang_baxter(max_weight.min(2))?;
        Ok(eng)
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn d_index(&self) -> usize {
        self.d
    }

    pub fn max_weight(&self) -> u32 {
        self.max_weight
    }

    pub fn colours(&self) -> &[usize] {
        &self.colours
    }

    pub fn block(&self, left: usize, right: usize, sign: Sign) -> Option<&RMatrixBlock> {
        self.blocks.get(&(left, right, sign))
    }

    /// Applies one crossing at positions `(k, k+1)` with the given colours.
    pub fn apply_letter(
        &self,
        v: &WeightVector,
        k: usize,
        sign: Sign,
        left: usize,
        right: usize,
    ) -> Result<WeightVector> {
        let blk = self
            .blocks
            .get(&(left, right, sign))
            .ok_or_else(|| Error::InvalidArgument("colour not known to the engine".into()))?;
        let mut out = WeightVector::zero(&self.vars);
        for (s, c) in &v.terms {
            let (i, j) = (s[k], s[k + 1]);
            let row = blk.row(i, j).ok_or_else(|| {
                Error::ResourceLimit(format!("pair weight {} above engine bound {}", i + j, self.max_weight))
            })?;
            for e in row {
                let mut ns = s.clone();
                ns[k] = e.target.0;
                ns[k + 1] = e.target.1;
                out.add_term(ns, &(c * &e.coeff));
            }
        }
        Ok(out)
    }

    /// Acts by a braid word on the uncapped weight space. Returns the image and
    /// the colours of the positions after the braid.
    pub fn braid_act(
        &self,
        b: &BraidWord,
        v: &WeightVector,
        colours: &[usize],
    ) -> Result<(WeightVector, Vec<usize>)> {
        self.act_word(b.word(), v, colours, None)
    }

    /// Like [`Engine::braid_act`] but fails if a state leaves the capped space.
    pub fn braid_act_capped(
        &self,
        b: &BraidWord,
        v: &WeightVector,
        colours: &[usize],
        caps: &[u32],
    ) -> Result<(WeightVector, Vec<usize>)> {
        self.act_word(b.word(), v, colours, Some(caps))
    }

    fn act_word(
        &self,
        word: &[i32],
        v: &WeightVector,
        colours: &[usize],
        caps: Option<&[u32]>,
    ) -> Result<(WeightVector, Vec<usize>)> {
        let mut cols = colours.to_vec();
        let mut cur = v.clone();
        // Caps travel with the strands, like colours.
        let mut caps = caps.map(|c| c.to_vec());
        for &g in word {
            let k = g.unsigned_abs() as usize - 1;
            if k + 1 >= cols.len() {
                return Err(Error::GeneratorOutOfRange { gen: g as i64, strands: cols.len() });
            }
            cur = self.apply_letter(&cur, k, Sign::of(g), cols[k], cols[k + 1])?;
            cols.swap(k, k + 1);
            if let Some(c) = caps.as_mut() {
                c.swap(k, k + 1);
                for s in cur.terms.keys() {
                    if s.iter().zip(c.iter()).any(|(e, cap)| e >= cap) {
                        return Err(Error::CapViolation(format!("{s:?}")));
                    }
                }
            }
        }
        Ok((cur, cols))
    }

    /// Matrix of a braid word on `V_{n,m}` (columns are images of basis vectors).
    pub fn action_matrix(&self, word: &[i32], n: usize, m: u32, colours: &[usize]) -> Result<Vec<Vec<LaurentPoly>>> {
        let space = enumerate_basis(n, m, None);
        let mut cols = Vec::with_capacity(space.dim());
        for s in space.basis() {
            let (img, _) = self.act_word(word, &WeightVector::basis(&self.vars, s.clone()), colours, None)?;
            cols.push(space.basis().iter().map(|t| img.coeff(t)).collect());
        }
        Ok(cols)
    }

    fn check_inverse(&self) -> Result<()> {
        for &a in &self.colours {
            for &b in &self.colours {
                for sign in [Sign::Positive, Sign::Negative] {
                    for i in 0..=self.max_weight {
                        for j in 0..=(self.max_weight - i) {
                            let v = WeightVector::basis(&self.vars, vec![i, j]);
                            let w = self.apply_letter(&v, 0, sign, a, b)?;
                            let back = self.apply_letter(&w, 0, sign.flip(), b, a)?;
                            if back != v {
                                return Err(Error::SelfCheck(format!(
                                    "crossing inverse fails on v_{i}⊗v_{j}"
                                )));
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Exact Yang–Baxter check on three strands for all colour triples, weights `<= max_m`.
    pub fn check_yang_baxter(&self, max_m: u32) -> Result<()> {
        for &c1 in &self.colours {
            for &c2 in &self.colours {
                for &c3 in &self.colours {
                    let cols = [c1, c2, c3];
                    for m in 0..=max_m {
                        for sign in [1, -1] {
                            let lhs = self.action_matrix(&[sign, 2 * sign, sign], 3, m, &cols)?;
                            let rhs = self.action_matrix(&[2 * sign, sign, 2 * sign], 3, m, &cols)?;
                            if lhs != rhs {
                                return Err(Error::SelfCheck(format!(
                                    "Yang-Baxter residual nonzero at weight {m}"
                                )));
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::parse_braid;

    fn knot_engine(w: u32) -> Engine {
        Engine::new(&VarSet::xd(), "d", &["x"], w).unwrap()
    }

    #[test]
    fn basis_enumeration() {
        let s = enumerate_basis(2, 1, None);
        assert_eq!(s.basis(), &[vec![0, 1], vec![1, 0]]);
        let c = enumerate_basis(3, 2, Some(&[2, 2, 2]));
        assert_eq!(c.basis(), &[vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]]);
        assert_eq!(enumerate_basis(2, 0, None).basis(), &[vec![0, 0]]);
        assert_eq!(enumerate_basis(4, 3, None).dim(), 20);
    }

    #[test]
    fn bottom_state_is_diagonal() {
        let e = knot_engine(3);
        let blk = e.block(0, 0, Sign::Positive).unwrap();
        let row = blk.row(0, 0).unwrap();
        assert_eq!(row.len(), 1);
        assert_eq!(row[0].target, (0, 0));
        assert!(row[0].coeff.is_unit());
    }

    #[test]
    fn inverse_and_identity_word() {
        let e = knot_engine(3);
        for s in enumerate_basis(2, 3, None).basis() {
            let v = WeightVector::basis(e.vars(), s.clone());
            let b = parse_braid("B2: 1 -1").unwrap();
            assert_eq!(e.braid_act(&b, &v, &[0, 0]).unwrap().0, v);
            let id = parse_braid("B2:").unwrap();
            assert_eq!(e.braid_act(&id, &v, &[0, 0]).unwrap().0, v);
        }
    }

    #[test]
    fn cube_of_generator() {
        let e = knot_engine(2);
        for m in 0..=2 {
            let g = e.action_matrix(&[1], 2, m, &[0, 0]).unwrap();
            let g3 = e.action_matrix(&[1, 1, 1], 2, m, &[0, 0]).unwrap();
            let dim = g.len();
            let mul = |a: &Vec<Vec<LaurentPoly>>, b: &Vec<Vec<LaurentPoly>>| {
                // column-major: (a·b)[col j] = Σ_k b[j][k] · a[k]
                (0..dim)
                    .map(|j| {
                        (0..dim)
                            .map(|r| {
                                let mut acc = LaurentPoly::zero(e.vars());
                                for k in 0..dim {
                                    acc = &acc + &(&a[k][r] * &b[j][k]);
                                }
                                acc
                            })
                            .collect::<Vec<_>>()
                    })
                    .collect::<Vec<_>>()
            };
            assert_eq!(mul(&mul(&g, &g), &g), g3);
        }
    }

    #[test]
    fn capped_action_detects_overflow() {
        let e = knot_engine(2);
        let b = parse_braid("B2: 1").unwrap();
        let v = WeightVector::basis(e.vars(), vec![1, 0]);
        assert!(matches!(
            e.braid_act_capped(&b, &v, &[0, 0], &[1, 1]),
            Err(Error::CapViolation(_))
        ));
        assert!(e.braid_act_capped(&b, &v, &[0, 0], &[2, 2]).is_ok());
    }

    #[test]
    fn two_colour_engine_passes_self_check() {
        let v = VarSet::new(&["x1", "x2", "d"]).unwrap();
        let e = Engine::new(&v, "d", &["x1", "x2"], 3).unwrap();
        e.check_yang_baxter(3).unwrap();
    }
}
