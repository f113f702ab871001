//! Sparse multivariate Laurent polynomials with big-integer coefficients.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::varset::VarSet;
use crate::error::{Error, Result};

pub type Exps = Vec<i32>;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    vars: VarSet,
    terms: BTreeMap<Exps, BigInt>,
}

impl LaurentPoly {
    pub fn zero(vars: &VarSet) -> Self {
        LaurentPoly { vars: vars.clone(), terms: BTreeMap::new() }
    }

    pub fn one(vars: &VarSet) -> Self {
        Self::constant(vars, 1)
    }

    pub fn constant(vars: &VarSet, c: impl Into<BigInt>) -> Self {
        Self::monomial(vars, vec![0; vars.len()], c)
    }

    pub fn monomial(vars: &VarSet, exps: Exps, c: impl Into<BigInt>) -> Self {
        assert_eq!(exps.len(), vars.len(), "exponent vector length");
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        LaurentPoly { vars: vars.clone(), terms }
    }

    /// `name^e` as a polynomial.
    pub fn var_pow(vars: &VarSet, name: &str, e: i32) -> Result<Self> {
        let i = vars.require(name)?;
        Ok(Self::var_index_pow(vars, i, e))
    }

    pub fn var(vars: &VarSet, name: &str) -> Result<Self> {
        Self::var_pow(vars, name, 1)
    }

    pub fn var_index_pow(vars: &VarSet, i: usize, e: i32) -> Self {
        let mut exps = vec![0; vars.len()];
        exps[i] = e;
        Self::monomial(vars, exps, 1)
    }

    /// Builds a polynomial from raw terms, dropping zeros and merging duplicates.
    pub fn from_terms<I>(vars: &VarSet, terms: I) -> Self
    where
        I: IntoIterator<Item = (Exps, BigInt)>,
    {
        let mut map: BTreeMap<Exps, BigInt> = BTreeMap::new();
        for (e, c) in terms {
            assert_eq!(e.len(), vars.len(), "exponent vector length");
            *map.entry(e).or_insert_with(BigInt::zero) += c;
        }
        map.retain(|_, c| !c.is_zero());
        LaurentPoly { vars: vars.clone(), terms: map }
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exps, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && {
            let (e, c) = self.terms.iter().next().unwrap();
            c.is_one() && e.iter().all(|&x| x == 0)
        }
    }

    pub fn coeff(&self, exps: &[i32]) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(&vec![0; self.vars.len()])
    }

    /// Returns `(coefficient, exponents)` when the polynomial is a single term.
    pub fn as_monomial(&self) -> Option<(&BigInt, &Exps)> {
        if self.terms.len() == 1 {
            let (e, c) = self.terms.iter().next().unwrap();
            Some((c, e))
        } else {
            None
        }
    }

    /// True if the polynomial is `±` a monomial, i.e. a unit of the Laurent ring.
    pub fn is_unit(&self) -> bool {
        matches!(self.as_monomial(), Some((c, _)) if c.abs().is_one())
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.vars != other.vars {
            return Err(Error::VarSetMismatch(self.vars.describe(), other.vars.describe()));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            add_term(&mut terms, e, c);
        }
        Ok(LaurentPoly { vars: self.vars.clone(), terms })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            add_term(&mut terms, e, &-c);
        }
        Ok(LaurentPoly { vars: self.vars.clone(), terms })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(&self.vars));
        }
        let mut acc: HashMap<Exps, BigInt> = HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Exps = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                let prod = ca * cb;
                match acc.get_mut(&e) {
                    Some(v) => *v += prod,
                    None => {
                        acc.insert(e, prod);
                    }
                }
            }
        }
        let terms = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Ok(LaurentPoly { vars: self.vars.clone(), terms })
    }

    /// In-place `self += other`.
    pub fn add_assign_ref(&mut self, other: &Self) {
        self.check_same(other).expect("add_assign_ref");
        for (e, c) in &other.terms {
            add_term(&mut self.terms, e, c);
        }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero(&self.vars);
        }
        let terms = self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect();
        LaurentPoly { vars: self.vars.clone(), terms }
    }

    /// Multiplies by the monomial `x^exps`.
    pub fn mul_monomial(&self, exps: &[i32]) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (e.iter().zip(exps).map(|(a, b)| a + b).collect(), c.clone()))
            .collect();
        LaurentPoly { vars: self.vars.clone(), terms }
    }

    /// Multiplies by `vars[i]^k`.
    pub fn shift(&self, i: usize, k: i32) -> Self {
        let mut exps = vec![0; self.vars.len()];
        exps[i] = k;
        self.mul_monomial(&exps)
    }

    /// Integer power; negative powers are only defined for units.
    pub fn pow(&self, k: i64) -> Result<Self> {
        if k < 0 {
            let inv = self.unit_inverse().ok_or_else(|| {
                Error::InexactDivision(format!("negative power of non-unit {self}"))
            })?;
            return inv.pow(-k);
        }
        let mut result = Self::one(&self.vars);
        let mut base = self.clone();
        let mut k = k as u64;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        Ok(result)
    }

    pub fn unit_inverse(&self) -> Option<Self> {
        let (c, e) = self.as_monomial()?;
        if !c.abs().is_one() {
            return None;
        }
        let neg: Exps = e.iter().map(|x| -x).collect();
        Some(Self::monomial(&self.vars, neg, c.clone()))
    }

    pub fn min_exp(&self, i: usize) -> Option<i32> {
        self.terms.keys().map(|e| e[i]).min()
    }

    pub fn max_exp(&self, i: usize) -> Option<i32> {
        self.terms.keys().map(|e| e[i]).max()
    }

    /// Groups the polynomial by powers of variable `i`; coefficients have exponent 0 in `i`.
    pub fn coefficients_in(&self, i: usize) -> BTreeMap<i32, LaurentPoly> {
        let mut out: BTreeMap<i32, BTreeMap<Exps, BigInt>> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            let k = e2[i];
            e2[i] = 0;
            out.entry(k).or_default().insert(e2, c.clone());
        }
        out.into_iter()
            .map(|(k, terms)| (k, LaurentPoly { vars: self.vars.clone(), terms }))
            .collect()
    }

    /// Polynomial division in variable `i`.
    ///
    /// Requires non-negative exponents of `i` in both operands and a unit
    /// leading coefficient of `g` in `i`. Returns `(q, r)` with
    /// `self = q·g + r` and `deg_i r < deg_i g`.
    pub fn div_rem(&self, g: &Self, i: usize) -> Result<(Self, Self)> {
        self.check_same(g)?;
        if g.is_zero() {
            return Err(Error::InvalidArgument("division by zero".into()));
        }
        if self.min_exp(i).unwrap_or(0) < 0 || g.min_exp(i).unwrap() < 0 {
            return Err(Error::InvalidArgument("div_rem needs non-negative exponents".into()));
        }
        let gc = g.coefficients_in(i);
        let (&gdeg, lead) = gc.iter().next_back().unwrap();
        let lead_inv = lead.unit_inverse().ok_or_else(|| {
            Error::InexactDivision(format!("leading coefficient {lead} is not a unit"))
        })?;
        let mut q = Self::zero(&self.vars);
        let mut r = self.clone();
        while let Some(rdeg) = r.max_exp(i) {
            if rdeg < gdeg {
                break;
            }
            let rc = r.coefficients_in(i).remove(&rdeg).unwrap();
            let t = (&rc * &lead_inv).shift(i, rdeg - gdeg);
            r = &r - &(&t * g);
            q = &q + &t;
        }
        Ok((q, r))
    }

    /// Exact Laurent division in variable `i` (`g` need not be a unit).
    pub fn div_exact(&self, g: &Self, i: usize) -> Result<Self> {
        self.check_same(g)?;
        if self.is_zero() {
            return Ok(self.clone());
        }
        let sa = self.min_exp(i).unwrap();
        let sb = g.min_exp(i).ok_or_else(|| Error::InvalidArgument("division by zero".into()))?;
        let a = self.shift(i, -sa);
        let b = g.shift(i, -sb);
        let (q, r) = a.div_rem(&b, i)?;
        if !r.is_zero() {
            return Err(Error::InexactDivision(format!("({self}) / ({g})")));
        }
        Ok(q.shift(i, sa - sb))
    }

    /// Ring homomorphism into `target`: variable `k` is sent to `images[k]`.
    ///
    /// Negative exponents require the image to be a unit.
    pub fn hom(&self, target: &VarSet, images: &[LaurentPoly]) -> Result<Self> {
        if images.len() != self.vars.len() {
            return Err(Error::InvalidArgument("wrong number of images".into()));
        }
        for im in images {
            if im.vars != *target {
                return Err(Error::VarSetMismatch(im.vars.describe(), target.describe()));
            }
        }
        let monomial_images: Option<Vec<(BigInt, Exps)>> = images
            .iter()
            .map(|im| im.as_monomial().map(|(c, e)| (c.clone(), e.clone())))
            .collect();
        if let Some(mons) = monomial_images {
            let mut out: BTreeMap<Exps, BigInt> = BTreeMap::new();
            for (e, c) in &self.terms {
                let mut coeff = c.clone();
                let mut exps = vec![0i32; target.len()];
                for (k, &p) in e.iter().enumerate() {
                    if p == 0 {
                        continue;
                    }
                    let (mc, me) = &mons[k];
                    if p < 0 && !mc.abs().is_one() {
                        return Err(Error::InexactDivision(format!(
                            "negative power of non-unit image for `{}`",
                            self.vars.name(k)
                        )));
                    }
                    if !mc.abs().is_one() {
                        coeff *= num_traits::pow(mc.clone(), p as usize);
                    } else if mc.is_negative() && p.is_odd() {
                        coeff = -coeff;
                    }
                    for (x, y) in exps.iter_mut().zip(me) {
                        *x += p * y;
                    }
                }
                add_term(&mut out, &exps, &coeff);
            }
            return Ok(LaurentPoly { vars: target.clone(), terms: out });
        }
        let mut cache: HashMap<(usize, i32), LaurentPoly> = HashMap::new();
        let mut out = Self::zero(target);
        for (e, c) in &self.terms {
            let mut t = Self::constant(target, c.clone());
            for (k, &p) in e.iter().enumerate() {
                if p == 0 {
                    continue;
                }
                if let std::collections::hash_map::Entry::Vacant(e) = cache.entry((k, p)) {
                    e.insert(images[k].pow(p as i64)?);
                }
                t = &t * &cache[&(k, p)];
            }
            out.add_assign_ref(&t);
        }
        Ok(out)
    }

    /// Substitutes variable `name` by `image` (same variable set).
    pub fn substitute(&self, name: &str, image: &LaurentPoly) -> Result<Self> {
        let i = self.vars.require(name)?;
        let images: Vec<LaurentPoly> = (0..self.vars.len())
            .map(|k| if k == i { image.clone() } else { Self::var_index_pow(&self.vars, k, 1) })
            .collect();
        self.hom(&self.vars, &images)
    }

    /// Re-expresses the polynomial over `target`, matching variables by name.
    /// Variables of `self` absent from `target` must not occur.
    pub fn embed(&self, target: &VarSet) -> Result<Self> {
        let map: Vec<Option<usize>> = self.vars.names().iter().map(|n| target.index(n)).collect();
        let mut out = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut ne = vec![0; target.len()];
            for (k, &p) in e.iter().enumerate() {
                if p == 0 {
                    continue;
                }
                match map[k] {
                    Some(j) => ne[j] += p,
                    None => return Err(Error::UnknownVariable(self.vars.name(k).to_string())),
                }
            }
            add_term(&mut out, &ne, c);
        }
        Ok(LaurentPoly { vars: target.clone(), terms: out })
    }

    /// Names of the variables that actually occur.
    pub fn support_vars(&self) -> Vec<&str> {
        (0..self.vars.len())
            .filter(|&k| self.terms.keys().any(|e| e[k] != 0))
            .map(|k| self.vars.name(k))
            .collect()
    }

    /// Parses the canonical text form (also accepts `*`-products, parentheses and `^`).
    pub fn parse(vars: &VarSet, text: &str) -> Result<Self> {
        super::parse::parse_poly(vars, text)
    }
}

fn add_term(terms: &mut BTreeMap<Exps, BigInt>, e: &[i32], c: &BigInt) {
    if c.is_zero() {
        return;
    }
    match terms.get_mut(e) {
        Some(v) => {
            *v += c;
            if v.is_zero() {
                terms.remove(e);
            }
        }
        None => {
            terms.insert(e.to_vec(), c.clone());
        }
    }
}

pub(crate) fn write_monomial(f: &mut dyn fmt::Write, vars: &VarSet, e: &[i32]) -> fmt::Result {
    let mut first = true;
    for (k, &p) in e.iter().enumerate() {
        if p == 0 {
            continue;
        }
        if !first {
            f.write_char('*')?;
        }
        first = false;
        f.write_str(vars.name(k))?;
        if p != 1 {
            write!(f, "^{p}")?;
        }
    }
    Ok(())
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (e, c)) in self.terms.iter().rev().enumerate() {
            let is_const = e.iter().all(|&p| p == 0);
            let abs = c.abs();
            if idx == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            if is_const {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                write_monomial(f, &self.vars, e)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self} over {:?})", self.vars)
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $try:ident) => {
        impl<'a> $tr<&'a LaurentPoly> for &'a LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &'a LaurentPoly) -> LaurentPoly {
                self.$try(rhs).expect(concat!("LaurentPoly::", stringify!($m)))
            }
        }
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        let terms = self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect();
        LaurentPoly { vars: self.vars.clone(), terms }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xd() -> VarSet {
        VarSet::xd()
    }

    fn p(s: &str) -> LaurentPoly {
        LaurentPoly::parse(&xd(), s).unwrap()
    }

    #[test]
    fn expand_products() {
        assert_eq!(p("(x-1)*(x+1)"), p("x^2 - 1"));
        assert_eq!((&p("x-1") * &p("x*d-1")).to_string(), "x^2*d - x*d - x + 1");
        assert_eq!(&p("x^3*d - 2") + &LaurentPoly::zero(&xd()), p("x^3*d - 2"));
    }

    #[test]
    fn canonical_rendering() {
        assert_eq!(p("-3 + x^2*d^-1").to_string(), "x^2*d^-1 - 3");
        assert_eq!(p("-x").to_string(), "-x");
        assert_eq!(p("0").to_string(), "0");
        assert_eq!(p("2*x*d - d^-2").to_string(), "2*x*d - d^-2");
    }

    #[test]
    fn mismatched_varsets_error() {
        let a = LaurentPoly::one(&xd());
        let b = LaurentPoly::one(&VarSet::knot());
        assert!(matches!(a.try_add(&b), Err(Error::VarSetMismatch(..))));
        assert!(a.try_mul(&b).is_err());
    }

    #[test]
    fn division() {
        let g = p("(x-1)*(x*d-1)");
        let (q, r) = p("x^2").div_rem(&g, 0).unwrap();
        assert_eq!(r.to_string(), "x + x*d^-1 - d^-1");
        assert_eq!(&(&q * &g) + &r, p("x^2"));
        let e = p("x^-1*(x^2 + 1)").div_exact(&p("x^2 - x^3"), 0);
        assert!(e.is_err());
        assert_eq!(p("x^-2 - x").div_exact(&p("x^-1 - 1"), 0).unwrap(), p("x^-1 + 1 + x"));
    }

    #[test]
    fn powers_and_units() {
        assert_eq!(p("x*d^-1").pow(-2).unwrap(), p("x^-2*d^2"));
        assert!(p("x + 1").pow(-1).is_err());
        assert_eq!(p("x + 1").pow(3).unwrap(), p("x^3 + 3*x^2 + 3*x + 1"));
    }

    #[test]
    fn homomorphism_substitution() {
        let v = p("x^2*d + x^-1");
        let img = v.substitute("x", &p("d^-1")).unwrap();
        assert_eq!(img, p("d^-1 + d"));
        let sq = v.substitute("x", &p("x + 1")).unwrap_err();
        assert!(matches!(sq, Error::InexactDivision(_)));
    }
}
