//! Exact arithmetic in `Z[ζ]`, `ζ = e^{2πi/2N}`, and Laurent polynomials over it.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::laurent::{write_monomial, Exps, LaurentPoly};
use super::quantum::cyclotomic_coeffs;
use super::varset::VarSet;
use crate::error::{Error, Result};

/// Level `N` together with the modulus `Φ_{2N}(q)`.
#[derive(Debug, PartialEq, Eq)]
pub struct CycloContext {
    level: u32,
    modulus: Vec<BigInt>,
}

impl CycloContext {
    pub fn new(level: u32) -> Result<Arc<Self>> {
        if level < 2 {
            return Err(Error::InvalidArgument(format!("root-of-unity level {level} < 2")));
        }
        let modulus = cyclotomic_coeffs(2 * level as u64);
        Ok(Arc::new(CycloContext { level, modulus }))
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    /// Order `2N` of `ζ`.
    pub fn order(&self) -> i64 {
        2 * self.level as i64
    }

    /// Degree of the modulus (Euler totient of `2N`).
    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn modulus(&self) -> &[BigInt] {
        &self.modulus
    }

    fn reduce(&self, mut c: Vec<BigInt>) -> Vec<BigInt> {
        let deg = self.degree();
        while c.len() > deg {
            let top = c.pop().unwrap();
            if top.is_zero() {
                continue;
            }
            let shift = c.len() - deg;
            for (k, m) in self.modulus[..deg].iter().enumerate() {
                c[shift + k] -= &top * m;
            }
        }
        c.resize(deg, BigInt::zero());
        c
    }
}

/// Residue class of a polynomial in `ζ` modulo `Φ_{2N}`.
#[derive(Clone, PartialEq, Eq)]
pub struct CycloElem {
    ctx: Arc<CycloContext>,
    c: Vec<BigInt>,
}

impl CycloElem {
    pub fn zero(ctx: &Arc<CycloContext>) -> Self {
        CycloElem { ctx: ctx.clone(), c: vec![BigInt::zero(); ctx.degree()] }
    }

    pub fn from_int(ctx: &Arc<CycloContext>, k: impl Into<BigInt>) -> Self {
        let mut e = Self::zero(ctx);
        e.c[0] = k.into();
        e
    }

    pub fn one(ctx: &Arc<CycloContext>) -> Self {
        Self::from_int(ctx, 1)
    }

    /// `ζ^k` for any integer `k`.
    pub fn zeta_pow(ctx: &Arc<CycloContext>, k: i64) -> Self {
        let k = k.rem_euclid(ctx.order()) as usize;
        let mut v = vec![BigInt::zero(); k + 1];
        v[k] = BigInt::one();
        CycloElem { ctx: ctx.clone(), c: ctx.reduce(v) }
    }

    /// `ζ - ζ^{-1}`.
    pub fn zeta_diff(ctx: &Arc<CycloContext>) -> Self {
        &Self::zeta_pow(ctx, 1) - &Self::zeta_pow(ctx, -1)
    }

    pub fn from_coeffs(ctx: &Arc<CycloContext>, c: Vec<BigInt>) -> Self {
        CycloElem { ctx: ctx.clone(), c: ctx.reduce(c) }
    }

    pub fn ctx(&self) -> &Arc<CycloContext> {
        &self.ctx
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }

    /// `Some(k)` if the element is the rational integer `k`.
    pub fn as_integer(&self) -> Option<BigInt> {
        if self.c[1..].iter().all(|x| x.is_zero()) {
            Some(self.c[0].clone())
        } else {
            None
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut r = Self::one(&self.ctx);
        for _ in 0..k {
            r = &r * self;
        }
        r
    }

    fn check(&self, o: &Self) {
        assert_eq!(self.ctx.level, o.ctx.level, "cyclotomic context mismatch");
    }
}

impl<'a> std::ops::Add<&'a CycloElem> for &'a CycloElem {
    type Output = CycloElem;
    fn add(self, o: &'a CycloElem) -> CycloElem {
        self.check(o);
        let c = self.c.iter().zip(&o.c).map(|(a, b)| a + b).collect();
        CycloElem { ctx: self.ctx.clone(), c }
    }
}

impl<'a> std::ops::Sub<&'a CycloElem> for &'a CycloElem {
    type Output = CycloElem;
    fn sub(self, o: &'a CycloElem) -> CycloElem {
        self.check(o);
        let c = self.c.iter().zip(&o.c).map(|(a, b)| a - b).collect();
        CycloElem { ctx: self.ctx.clone(), c }
    }
}

impl<'a> std::ops::Mul<&'a CycloElem> for &'a CycloElem {
    type Output = CycloElem;
    fn mul(self, o: &'a CycloElem) -> CycloElem {
        self.check(o);
        let mut v = vec![BigInt::zero(); self.c.len() + o.c.len()];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        CycloElem { ctx: self.ctx.clone(), c: self.ctx.reduce(v) }
    }
}

impl std::ops::Neg for &CycloElem {
    type Output = CycloElem;
    fn neg(self) -> CycloElem {
        CycloElem { ctx: self.ctx.clone(), c: self.c.iter().map(|x| -x).collect() }
    }
}

impl fmt::Display for CycloElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = VarSet::single("q");
        let terms = self
            .c
            .iter()
            .enumerate()
            .map(|(k, x)| (vec![k as i32], x.clone()));
        write!(f, "{}", LaurentPoly::from_terms(&v, terms))
    }
}

impl fmt::Debug for CycloElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycloElem[N={}]({self})", self.ctx.level)
    }
}

/// Laurent polynomial in colour variables with `Z[ζ]` coefficients, divided by
/// `(ζ - ζ^{-1})^den`.
#[derive(Clone)]
pub struct CycloPoly {
    ctx: Arc<CycloContext>,
    vars: VarSet,
    terms: BTreeMap<Exps, CycloElem>,
    den: u32,
}

impl CycloPoly {
    pub fn zero(ctx: &Arc<CycloContext>, vars: &VarSet) -> Self {
        CycloPoly { ctx: ctx.clone(), vars: vars.clone(), terms: BTreeMap::new(), den: 0 }
    }

    pub fn constant(ctx: &Arc<CycloContext>, vars: &VarSet, c: CycloElem) -> Self {
        Self::monomial(ctx, vars, vec![0; vars.len()], c)
    }

    pub fn one(ctx: &Arc<CycloContext>, vars: &VarSet) -> Self {
        Self::constant(ctx, vars, CycloElem::one(ctx))
    }

    pub fn monomial(ctx: &Arc<CycloContext>, vars: &VarSet, e: Exps, c: CycloElem) -> Self {
        let mut p = Self::zero(ctx, vars);
        if !c.is_zero() {
            p.terms.insert(e, c);
        }
        p
    }

    pub fn ctx(&self) -> &Arc<CycloContext> {
        &self.ctx
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn den(&self) -> u32 {
        self.den
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exps, &CycloElem)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Same value written over the denominator `(ζ - ζ^{-1})^{den}`, `den >= self.den`.
    pub fn with_den(&self, den: u32) -> Self {
        assert!(den >= self.den);
        let f = CycloElem::zeta_diff(&self.ctx).pow(den - self.den);
        let mut out = self.scale(&f);
        out.den = den;
        out
    }

    /// Divides by `(ζ - ζ^{-1})^k` through the denominator.
    pub fn div_zeta_diff(&self, k: u32) -> Self {
        let mut out = self.clone();
        out.den += k;
        out
    }

    pub fn scale(&self, c: &CycloElem) -> Self {
        let mut terms = BTreeMap::new();
        for (e, x) in &self.terms {
            let y = x * c;
            if !y.is_zero() {
                terms.insert(e.clone(), y);
            }
        }
        CycloPoly { ctx: self.ctx.clone(), vars: self.vars.clone(), terms, den: self.den }
    }

    pub fn mul_monomial(&self, exps: &[i32]) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (e.iter().zip(exps).map(|(a, b)| a + b).collect(), c.clone()))
            .collect();
        CycloPoly { ctx: self.ctx.clone(), vars: self.vars.clone(), terms, den: self.den }
    }

    fn add_num(terms: &mut BTreeMap<Exps, CycloElem>, e: &[i32], c: &CycloElem) {
        match terms.get_mut(e) {
            Some(v) => {
                *v = &*v + c;
                if v.is_zero() {
                    terms.remove(e);
                }
            }
            None => {
                if !c.is_zero() {
                    terms.insert(e.to_vec(), c.clone());
                }
            }
        }
    }

    fn check(&self, o: &Self) -> Result<()> {
        if self.vars != o.vars {
            return Err(Error::VarSetMismatch(self.vars.describe(), o.vars.describe()));
        }
        if self.ctx.level != o.ctx.level {
            return Err(Error::InvalidArgument("cyclotomic level mismatch".into()));
        }
        Ok(())
    }

    pub fn try_add(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        let den = self.den.max(o.den);
        let a = if self.den < den { self.with_den(den) } else { self.clone() };
        let b = if o.den < den { o.with_den(den) } else { o.clone() };
        let mut terms = a.terms;
        for (e, c) in &b.terms {
            Self::add_num(&mut terms, e, c);
        }
        Ok(CycloPoly { ctx: self.ctx.clone(), vars: self.vars.clone(), terms, den })
    }

    pub fn try_sub(&self, o: &Self) -> Result<Self> {
        self.try_add(&o.neg())
    }

    pub fn try_mul(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        let mut terms = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &o.terms {
                let e: Exps = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                Self::add_num(&mut terms, &e, &(ca * cb));
            }
        }
        Ok(CycloPoly { ctx: self.ctx.clone(), vars: self.vars.clone(), terms, den: self.den + o.den })
    }

    pub fn neg(&self) -> Self {
        let terms = self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect();
        CycloPoly { ctx: self.ctx.clone(), vars: self.vars.clone(), terms, den: self.den }
    }

    /// Renames the colour variables through `perm`: variable `i` becomes `perm[i]`.
    pub fn permute_vars(&self, perm: &[usize]) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut ne = vec![0; e.len()];
                for (i, &p) in e.iter().enumerate() {
                    ne[perm[i]] = p;
                }
                (ne, c.clone())
            })
            .collect();
        CycloPoly { ctx: self.ctx.clone(), vars: self.vars.clone(), terms, den: self.den }
    }

    /// Integer Laurent polynomial when every coefficient is a rational integer
    /// and there is no denominator.
    pub fn as_integer_poly(&self) -> Option<LaurentPoly> {
        if self.den != 0 {
            return None;
        }
        let mut out = Vec::new();
        for (e, c) in &self.terms {
            out.push((e.clone(), c.as_integer()?));
        }
        Some(LaurentPoly::from_terms(&self.vars, out))
    }
}

impl PartialEq for CycloPoly {
    fn eq(&self, o: &Self) -> bool {
        if self.vars != o.vars || self.ctx.level != o.ctx.level {
            return false;
        }
        let den = self.den.max(o.den);
        let a = if self.den < den { self.with_den(den) } else { self.clone() };
        let b = if o.den < den { o.with_den(den) } else { o.clone() };
        a.terms == b.terms
    }
}

impl Eq for CycloPoly {}

impl fmt::Display for CycloPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body = if self.terms.is_empty() {
            "0".to_string()
        } else {
            let mut s = String::new();
            for (idx, (e, c)) in self.terms.iter().rev().enumerate() {
                let is_const = e.iter().all(|&p| p == 0);
                let mut mono = String::new();
                write_monomial(&mut mono, &self.vars, e)?;
                match c.as_integer() {
                    Some(k) => {
                        let abs = k.abs();
                        if idx == 0 {
                            if k.is_negative() {
                                s.push('-');
                            }
                        } else {
                            s.push_str(if k.is_negative() { " - " } else { " + " });
                        }
                        if is_const {
                            s.push_str(&abs.to_string());
                        } else {
                            if !abs.is_one() {
                                s.push_str(&format!("{abs}*"));
                            }
                            s.push_str(&mono);
                        }
                    }
                    None => {
                        if idx > 0 {
                            s.push_str(" + ");
                        }
                        s.push_str(&format!("({c})"));
                        if !is_const {
                            s.push('*');
                            s.push_str(&mono);
                        }
                    }
                }
            }
            s
        };
        if self.den == 0 {
            f.write_str(&body)
        } else {
            write!(f, "({body})/(q - q^-1)^{}", self.den)
        }
    }
}

impl fmt::Debug for CycloPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycloPoly[N={}]({self})", self.ctx.level)
    }
}

/// Image of one variable under root-of-unity evaluation: `ζ^zeta · s^colour`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootImage {
    pub zeta: i64,
    pub colour: Exps,
}

/// Applies the ring homomorphism fixed by `assignment` (one monomial image per variable).
pub fn evaluate_at_root(
    p: &LaurentPoly,
    ctx: &Arc<CycloContext>,
    target: &VarSet,
    assignment: &HashMap<String, RootImage>,
) -> Result<CycloPoly> {
    let images: Vec<&RootImage> = p
        .vars()
        .names()
        .iter()
        .map(|n| assignment.get(n).ok_or_else(|| Error::UnassignedVariable(n.clone())))
        .collect::<Result<_>>()?;
    for im in &images {
        if im.colour.len() != target.len() {
            return Err(Error::InvalidArgument("colour image has wrong length".into()));
        }
    }
    let mut terms: BTreeMap<Exps, CycloElem> = BTreeMap::new();
    for (e, c) in p.terms() {
        let mut z = 0i64;
        let mut ce = vec![0i32; target.len()];
        for (k, &pw) in e.iter().enumerate() {
            if pw == 0 {
                continue;
            }
            z += images[k].zeta * pw as i64;
            for (a, b) in ce.iter_mut().zip(&images[k].colour) {
                *a += pw * b;
            }
        }
        let mut coeff = CycloElem::zeta_pow(ctx, z);
        coeff = &coeff * &CycloElem::from_int(ctx, c.clone());
        CycloPoly::add_num(&mut terms, &ce, &coeff);
    }
    Ok(CycloPoly { ctx: ctx.clone(), vars: target.clone(), terms, den: 0 })
}
