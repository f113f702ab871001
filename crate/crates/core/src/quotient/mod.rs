//! The quotient rings `Z[x±, d±] / ⟨g_N⟩`, `g_N = ∏_{i=1}^N (x d^{i-1} - 1)`,
//! their projection tower and the Willetts ideals.

pub mod groebner;
mod willetts;

use std::fmt;

use crate::error::{Error, Result};
use crate::ring::{LaurentPoly, VarSet};

pub use willetts::{willetts_member, willetts_member_with, WillettsIdeal};

const X: usize = 0;

/// The principal ideal `⟨g_N⟩` of level `N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelIdealJ {
    level: u32,
    generator: LaurentPoly,
    /// Representative of `x^{-1}` modulo `g_N`.
    x_inverse: LaurentPoly,
}

impl LevelIdealJ {
    pub fn new(level: u32) -> Result<Self> {
        if level == 0 {
            return Err(Error::InvalidArgument("level must be at least 1".into()));
        }
        let v = VarSet::xd();
        let mut g = LaurentPoly::one(&v);
        for i in 1..=level {
            let f = &LaurentPoly::monomial(&v, vec![1, i as i32 - 1], 1) - &LaurentPoly::one(&v);
            g = &g * &f;
        }
        // g = x·h + (-1)^N, so x^{-1} ≡ (-1)^{N+1} h.
        let sign = if level.is_multiple_of(2) { 1 } else { -1 };
        let h = (&g - &LaurentPoly::constant(&v, sign)).shift(X, -1);
        let x_inverse = h.scale(&(-sign).into());
        Ok(LevelIdealJ { level, generator: g, x_inverse })
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn generator(&self) -> &LaurentPoly {
        &self.generator
    }

    /// Canonical remainder: the unique representative with `x`-exponents in `0..N`.
    pub fn reduce(&self, p: &LaurentPoly) -> Result<LaurentPoly> {
        let p = to_xd(p)?;
        let s = p.min_exp(X).unwrap_or(0).min(0);
        let mut r = p.shift(X, -s).div_rem(&self.generator, X)?.1;
        for _ in 0..(-s) {
            r = (&r * &self.x_inverse).div_rem(&self.generator, X)?.1;
        }
        Ok(r)
    }
}

fn to_xd(p: &LaurentPoly) -> Result<LaurentPoly> {
    let xd = VarSet::xd();
    if p.vars() == &xd {
        return Ok(p.clone());
    }
    for v in p.support_vars() {
        if v != "x" && v != "d" {
            return Err(Error::InvalidArgument(format!("foreign variable `{v}` in quotient input")));
        }
    }
    p.embed(&xd)
}

/// A class in `L̂^J_N`, stored as its canonical representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientElemJ {
    level: u32,
    rep: LaurentPoly,
}

impl QuotientElemJ {
    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn representative(&self) -> &LaurentPoly {
        &self.rep
    }

    pub fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }

    pub fn try_add(&self, o: &Self) -> Result<Self> {
        self.same_level(o)?;
        reduce_mod_ij(&(&self.rep + &o.rep), self.level)
    }

    pub fn try_mul(&self, o: &Self) -> Result<Self> {
        self.same_level(o)?;
        reduce_mod_ij(&(&self.rep * &o.rep), self.level)
    }

    fn same_level(&self, o: &Self) -> Result<()> {
        if self.level != o.level {
            return Err(Error::InvalidArgument(format!("levels {} and {} differ", self.level, o.level)));
        }
        Ok(())
    }
}

impl fmt::Display for QuotientElemJ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.rep)
    }
}

/// Quotient map `Z[x±, d±] → L̂^J_N`.
pub fn reduce_mod_ij(p: &LaurentPoly, level: u32) -> Result<QuotientElemJ> {
    let ideal = LevelIdealJ::new(level)?;
    Ok(QuotientElemJ { level, rep: ideal.reduce(p)? })
}

/// Projection `L̂^J_{N+1} → L̂^J_N`.
pub fn tower_project(c: &QuotientElemJ) -> Result<QuotientElemJ> {
    if c.level < 2 {
        return Err(Error::InvalidArgument("level 1 has no lower level".into()));
    }
    reduce_mod_ij(&c.rep, c.level - 1)
}

/// `x ↦ d^{1-M}` on the canonical representative, for `M <= N`.
pub fn specialize_quotient(c: &QuotientElemJ, m: u32) -> Result<LaurentPoly> {
    if m == 0 || m > c.level {
        return Err(Error::InvalidArgument(format!(
            "colour {m} does not factor through level {}",
            c.level
        )));
    }
    jones_specialize(&c.rep, m)
}

/// `x ↦ d^{1-M}` on any polynomial over `{x, d}`.
pub fn jones_specialize(p: &LaurentPoly, m: u32) -> Result<LaurentPoly> {
    let p = to_xd(p)?;
    let dv = VarSet::single("d");
    let images = [
        LaurentPoly::var_pow(&dv, "d", 1 - m as i32)?,
        LaurentPoly::var(&dv, "d")?,
    ];
    p.hom(&dv, &images)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPoly {
        LaurentPoly::parse(&VarSet::xd(), s).unwrap()
    }

    #[test]
    fn generator_shape() {
        let g = LevelIdealJ::new(3).unwrap();
        assert_eq!(g.generator(), &p("(x-1)*(x*d-1)*(x*d^2-1)"));
        assert_eq!(g.generator().max_exp(0), Some(3));
        assert_eq!(g.generator().coefficients_in(0)[&3], p("d^3"));
        assert!(g.generator().coefficients_in(0)[&0] == p("-1"));
    }

    #[test]
    fn reduction_examples() {
        assert!(reduce_mod_ij(&p("(x-1)*(x*d-1)"), 2).unwrap().is_zero());
        assert_eq!(reduce_mod_ij(&p("x^2"), 2).unwrap().representative(), &p("x + x*d^-1 - d^-1"));
        assert_eq!(reduce_mod_ij(&p("7"), 3).unwrap().representative(), &p("7"));
        let inv = reduce_mod_ij(&p("x^-1"), 3).unwrap();
        let back = inv.try_mul(&reduce_mod_ij(&p("x"), 3).unwrap()).unwrap();
        assert_eq!(back.representative(), &p("1"));
        let bad = LaurentPoly::parse(&VarSet::knot(), "u*x").unwrap();
        assert!(reduce_mod_ij(&bad, 2).is_err());
        let fine = LaurentPoly::parse(&VarSet::knot(), "x*d").unwrap();
        assert_eq!(reduce_mod_ij(&fine, 2).unwrap().representative(), &p("x*d"));
    }

    #[test]
    fn tower_examples() {
        let g2 = LevelIdealJ::new(2).unwrap();
        let c = reduce_mod_ij(g2.generator(), 3).unwrap();
        assert!(tower_project(&c).unwrap().is_zero());
        let one = reduce_mod_ij(&p("1"), 3).unwrap();
        assert_eq!(tower_project(&one).unwrap().representative(), &p("1"));
        let x = reduce_mod_ij(&p("x"), 3).unwrap();
        assert_eq!(tower_project(&x).unwrap().representative(), &p("x"));
    }

    #[test]
    fn specialization_examples() {
        let x = reduce_mod_ij(&p("x"), 3).unwrap();
        assert_eq!(specialize_quotient(&x, 2).unwrap().to_string(), "d^-1");
        let g3 = reduce_mod_ij(LevelIdealJ::new(3).unwrap().generator(), 3).unwrap();
        for m in 1..=3 {
            assert!(specialize_quotient(&g3, m).unwrap().is_zero());
        }
        let xd = reduce_mod_ij(&p("x*d"), 2).unwrap();
        assert_eq!(specialize_quotient(&xd, 1).unwrap().to_string(), "d");
        assert!(specialize_quotient(&xd, 3).is_err());
        // raw generator vanishes at every colour up to its level
        for m in 1..=3 {
            assert!(jones_specialize(LevelIdealJ::new(3).unwrap().generator(), m).unwrap().is_zero());
        }
    }
}
