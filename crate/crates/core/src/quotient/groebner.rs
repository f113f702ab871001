//! Buchberger's algorithm over `Q` with degree reverse lexicographic order.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::ring::LaurentPoly;

/// Monomial exponent vector ordered by degrevlex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mono(pub Vec<u32>);

impl Mono {
    fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn divides(&self, o: &Mono) -> bool {
        self.0.iter().zip(&o.0).all(|(a, b)| a <= b)
    }

    fn div(&self, o: &Mono) -> Mono {
        Mono(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }

    fn mul(&self, o: &Mono) -> Mono {
        Mono(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    fn lcm(&self, o: &Mono) -> Mono {
        Mono(self.0.iter().zip(&o.0).map(|(a, b)| *a.max(b)).collect())
    }

    fn coprime(&self, o: &Mono) -> bool {
        self.0.iter().zip(&o.0).all(|(a, b)| *a == 0 || *b == 0)
    }
}

impl Ord for Mono {
    fn cmp(&self, o: &Self) -> Ordering {
        match self.degree().cmp(&o.degree()) {
            Ordering::Equal => {}
            c => return c,
        }
        for (a, b) in self.0.iter().zip(&o.0).rev() {
            if a != b {
                return b.cmp(a);
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

/// Polynomial over `Q`; the last map entry is the leading term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QPoly {
    pub nvars: usize,
    pub terms: BTreeMap<Mono, BigRational>,
}

impl QPoly {
    pub fn zero(nvars: usize) -> Self {
        QPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<(&Mono, &BigRational)> {
        self.terms.iter().next_back()
    }

    fn add_scaled(&mut self, other: &QPoly, c: &BigRational, m: &Mono) {
        for (e, v) in &other.terms {
            let key = e.mul(m);
            let add = v * c;
            match self.terms.get_mut(&key) {
                Some(x) => {
                    *x += add;
                    if x.is_zero() {
                        self.terms.remove(&key);
                    }
                }
                None => {
                    self.terms.insert(key, add);
                }
            }
        }
    }

    fn monic(mut self) -> Self {
        if let Some((_, c)) = self.lead() {
            let inv = c.recip();
            for v in self.terms.values_mut() {
                *v *= &inv;
            }
        }
        self
    }

    /// Integer polynomial with coprime coefficients and positive leading coefficient.
    pub fn content_cleared(&self) -> BTreeMap<Mono, BigInt> {
        let mut lcm = BigInt::one();
        for v in self.terms.values() {
            lcm = lcm.lcm(v.denom());
        }
        let ints: Vec<(Mono, BigInt)> = self
            .terms
            .iter()
            .map(|(m, v)| (m.clone(), (v * BigRational::from_integer(lcm.clone())).to_integer()))
            .collect();
        let mut g = BigInt::zero();
        for (_, v) in &ints {
            g = g.gcd(v);
        }
        let sign = match self.lead() {
            Some((_, c)) if c.is_negative() => -BigInt::one(),
            _ => BigInt::one(),
        };
        if g.is_zero() {
            return BTreeMap::new();
        }
        ints.into_iter().map(|(m, v)| (m, &v / &g * &sign)).collect()
    }
}

/// Converts a Laurent polynomial into `Q[vars]` after clearing negative
/// exponents, placing its variables at positions `offset..`.
pub fn from_laurent(p: &LaurentPoly, nvars: usize, offset: usize) -> QPoly {
    let k = p.vars().len();
    let shifts: Vec<i32> = (0..k).map(|i| p.min_exp(i).unwrap_or(0).min(0)).collect();
    let mut q = QPoly::zero(nvars);
    for (e, c) in p.terms() {
        let mut m = vec![0u32; nvars];
        for i in 0..k {
            m[offset + i] = (e[i] - shifts[i]) as u32;
        }
        q.terms.insert(Mono(m), BigRational::from_integer(c.clone()));
    }
    q
}

/// Limits on the Buchberger loop.
#[derive(Clone, Copy, Debug)]
pub struct GroebnerLimits {
    pub max_basis: usize,
    pub max_pairs: usize,
}

impl Default for GroebnerLimits {
    fn default() -> Self {
        GroebnerLimits { max_basis: 400, max_pairs: 20_000 }
    }
}

#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    pub nvars: usize,
    pub basis: Vec<QPoly>,
}

fn normal_form(f: &QPoly, g: &[QPoly]) -> QPoly {
    let mut p = f.clone();
    let mut r = QPoly::zero(f.nvars);
    while let Some((lm, lc)) = p.lead().map(|(m, c)| (m.clone(), c.clone())) {
        let div = g.iter().find(|gi| gi.lead().unwrap().0.divides(&lm));
        match div {
            Some(gi) => {
                let (gm, gc) = gi.lead().unwrap();
                let c = -(&lc / gc);
                let m = lm.div(gm);
                p.add_scaled(gi, &c, &m);
            }
            None => {
                p.terms.remove(&lm);
                r.terms.insert(lm, lc);
            }
        }
    }
    r
}

fn s_poly(a: &QPoly, b: &QPoly) -> QPoly {
    let (am, ac) = a.lead().unwrap();
    let (bm, bc) = b.lead().unwrap();
    let l = am.lcm(bm);
    let mut s = QPoly::zero(a.nvars);
    s.add_scaled(a, &ac.recip(), &l.div(am));
    s.add_scaled(b, &-bc.recip(), &l.div(bm));
    s
}

impl GroebnerBasis {
    /// Reduced Gröbner basis of the ideal generated by `gens`.
    pub fn compute(gens: &[QPoly], limits: GroebnerLimits) -> Result<Self> {
        let nvars = gens.first().map_or(0, |g| g.nvars);
        let mut basis: Vec<QPoly> = gens.iter().filter(|g| !g.is_zero()).cloned().map(QPoly::monic).collect();
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        for j in 0..basis.len() {
            for i in 0..j {
                pairs.push((i, j));
            }
        }
        let mut processed = 0usize;
        while let Some((i, j)) = pairs.pop() {
            processed += 1;
            if processed > limits.max_pairs {
                return Err(Error::ResourceLimit(format!("Groebner pair budget {} exhausted", limits.max_pairs)));
            }
            let (mi, mj) = (basis[i].lead().unwrap().0, basis[j].lead().unwrap().0);
            if mi.coprime(mj) {
                continue;
            }
            let r = normal_form(&s_poly(&basis[i], &basis[j]), &basis);
            if r.is_zero() {
                continue;
            }
            basis.push(r.monic());
            if basis.len() > limits.max_basis {
                return Err(Error::ResourceLimit(format!("Groebner basis exceeded {} elements", limits.max_basis)));
            }
            let k = basis.len() - 1;
            for i in 0..k {
                pairs.insert(0, (i, k));
            }
        }
        // Minimalize then inter-reduce.
        let mut minimal: Vec<QPoly> = Vec::new();
        for (idx, g) in basis.iter().enumerate() {
            let lm = g.lead().unwrap().0;
            let redundant = basis.iter().enumerate().any(|(j, h)| {
                let hm = h.lead().unwrap().0;
                j != idx && hm.divides(lm) && (hm != lm || j < idx)
            });
            if !redundant {
                minimal.push(g.clone());
            }
        }
        let mut reduced = Vec::with_capacity(minimal.len());
        for i in 0..minimal.len() {
            let others: Vec<QPoly> = minimal.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, g)| g.clone()).collect();
            let (lm, lc) = minimal[i].lead().map(|(m, c)| (m.clone(), c.clone())).unwrap();
            let mut tail = minimal[i].clone();
            tail.terms.remove(&lm);
            let mut nf = normal_form(&tail, &others);
            nf.terms.insert(lm, lc);
            reduced.push(nf.monic());
        }
        reduced.sort_by(|a, b| a.lead().unwrap().0.cmp(b.lead().unwrap().0));
        Ok(GroebnerBasis { nvars, basis: reduced })
    }

    pub fn reduce(&self, f: &QPoly) -> QPoly {
        normal_form(f, &self.basis)
    }

    pub fn contains(&self, f: &QPoly) -> bool {
        self.reduce(f).is_zero()
    }

    /// True if the ideal is the whole ring.
    pub fn is_unit_ideal(&self) -> bool {
        self.basis.iter().any(|g| g.terms.len() == 1 && g.lead().unwrap().0.degree() == 0)
    }
}
