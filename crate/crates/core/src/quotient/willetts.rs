//! Willetts ideals and membership through Gröbner bases over `Q`.

use super::groebner::{from_laurent, GroebnerBasis, GroebnerLimits, QPoly};
use crate::error::{Error, Result};
use crate::ring::{LaurentPoly, VarSet};

/// Generators `(x; d)_k · (d; d)_{N-k}` for `0 <= k <= N`, where
/// `(x; d)_k = ∏_{i=1}^{k} (x d^{i-1} - 1)` and `(d; d)_j = ∏_{i=1}^{j} (d^i - 1)`.
#[derive(Clone, Debug)]
pub struct WillettsIdeal {
    level: u32,
    generators: Vec<LaurentPoly>,
}

fn pochhammer_x(k: u32) -> LaurentPoly {
    let v = VarSet::xd();
    let mut acc = LaurentPoly::one(&v);
    for i in 1..=k {
        let f = &LaurentPoly::monomial(&v, vec![1, i as i32 - 1], 1) - &LaurentPoly::one(&v);
        acc = &acc * &f;
    }
    acc
}

fn d_product(from: u32, to: u32) -> LaurentPoly {
    let v = VarSet::xd();
    let mut acc = LaurentPoly::one(&v);
    for i in from..=to {
        acc = &acc * &(&LaurentPoly::monomial(&v, vec![0, i as i32], 1) - &LaurentPoly::one(&v));
    }
    acc
}

impl WillettsIdeal {
    pub fn new(level: u32) -> Result<Self> {
        if level == 0 {
            return Err(Error::InvalidArgument("level must be at least 1".into()));
        }
        let generators = (0..=level)
            .map(|k| &pochhammer_x(k) * &d_product(1, level - k))
            .collect();
        Ok(WillettsIdeal { level, generators })
    }

    /// The generator list restricted to `1 <= k <= N-1` in the one-based
    /// indexing `∏_{i=1}^{k-1}(x d^{i-1} - 1) ∏_{i=k-1}^{N-1}(d^i - 1)`.
    /// Its first member contains the factor `d^0 - 1 = 0` and is dropped.
    pub fn truncated(level: u32) -> Result<Self> {
        if level == 0 {
            return Err(Error::InvalidArgument("level must be at least 1".into()));
        }
        let generators = (1..level)
            .map(|k| &pochhammer_x(k - 1) * &d_product(k - 1, level - 1))
            .filter(|g| !g.is_zero())
            .collect();
        Ok(WillettsIdeal { level, generators })
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn generators(&self) -> &[LaurentPoly] {
        &self.generators
    }

    /// Gröbner basis in `Q[t, x, d]` of the generators together with `t x d - 1`.
    pub fn groebner(&self, limits: GroebnerLimits) -> Result<GroebnerBasis> {
        let mut gens: Vec<QPoly> = self.generators.iter().map(|g| from_laurent(g, 3, 1)).collect();
        let inv = LaurentPoly::parse(&VarSet::new(&["t", "x", "d"]).unwrap(), "t*x*d - 1").unwrap();
        gens.push(from_laurent(&inv, 3, 0));
        GroebnerBasis::compute(&gens, limits)
    }

    /// Membership of a Laurent polynomial in `{x, d}`; a `Q`-level certificate.
    pub fn contains(&self, p: &LaurentPoly, limits: GroebnerLimits) -> Result<bool> {
        let gb = self.groebner(limits)?;
        contains_with(&gb, p)
    }
}

fn contains_with(gb: &GroebnerBasis, p: &LaurentPoly) -> Result<bool> {
    let xd = VarSet::xd();
    let p = if p.vars() == &xd {
        p.clone()
    } else {
        for v in p.support_vars() {
            if v != "x" && v != "d" {
                return Err(Error::InvalidArgument(format!("foreign variable `{v}`")));
            }
        }
        p.embed(&xd)?
    };
    if p.is_zero() {
        return Ok(true);
    }
    Ok(gb.contains(&from_laurent(&p, 3, 1)))
}

/// Decides `p ∈ Ĩ^W_N` over `Q`.
pub fn willetts_member(p: &LaurentPoly, level: u32) -> Result<bool> {
    willetts_member_with(p, &WillettsIdeal::new(level)?, GroebnerLimits::default())
}

pub fn willetts_member_with(p: &LaurentPoly, ideal: &WillettsIdeal, limits: GroebnerLimits) -> Result<bool> {
    ideal.contains(p, limits)
}
