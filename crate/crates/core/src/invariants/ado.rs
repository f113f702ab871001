//! ADO (coloured Alexander) invariants at the root of unity `ζ = e^{iπ/N}`.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use super::{a_gamma, j_gamma};
use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::oracles::symmetric_normal_form;
use crate::ring::{evaluate_at_root, CycloContext, CycloElem, CycloPoly, LaurentPoly, RootImage, VarSet};

/// ADO value `value · y_num / y_den` in the colour variables `s_i`.
///
/// For knots `y_num = y_den = 1`. For links the quotient is the modified
/// dimension of the opened colour, kept as a fraction so that all three
/// parts stay in `Z[ζ][s±]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdoValue {
    pub level: u32,
    pub value: CycloPoly,
    pub y_num: CycloPoly,
    pub y_den: CycloPoly,
}

impl AdoValue {
    pub fn is_knot_value(&self) -> bool {
        self.y_num.vars().len() == 1 && self.y_num == self.y_den
    }
}

impl fmt::Display for AdoValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.y_num == self.y_den {
            write!(f, "{}", self.value)
        } else {
            write!(f, "({}) * ({}) / ({})", self.value, self.y_num, self.y_den)
        }
    }
}

fn check_level(level: u32) -> Result<Arc<CycloContext>> {
    if level < 2 {
        return Err(Error::InvalidArgument("ADO needs N >= 2".into()));
    }
    CycloContext::new(level)
}

fn colour_image(l: usize, i: usize, power: i32) -> RootImage {
    let mut colour = vec![0; l];
    colour[i] = power;
    RootImage { zeta: 0, colour }
}

/// Knot ADO invariant: `u ↦ s^{1-N}`, `x ↦ s`, `d ↦ ζ^{-1}`.
pub fn ado(b: &BraidWord, level: u32) -> Result<AdoValue> {
    let ctx = check_level(level)?;
    let a = a_gamma(b, level)?;
    let sv = VarSet::colours(1);
    let mut assignment = HashMap::new();
    assignment.insert("u".to_string(), colour_image(1, 0, 1 - level as i32));
    assignment.insert("x".to_string(), colour_image(1, 0, 1));
    assignment.insert("d".to_string(), RootImage { zeta: -1, colour: vec![0] });
    let value = evaluate_at_root(&a.value, &ctx, &sv, &assignment)?;
    let one = CycloPoly::one(&ctx, &sv);
    Ok(AdoValue { level, value, y_num: one.clone(), y_den: one })
}

/// Link ADO invariant with symbolic colours `s_1..s_l`.
///
/// The modified dimension of the opened colour `s` is
/// `(ζ s - ζ^{-1} s^{-1}) / (ζ^N s^N - ζ^{-N} s^{-N})`: the usual
/// `{λ}/{Nλ}` in the weight convention where `x ↦ s` sits one step below
/// the highest weight.
pub fn ado_link(b: &BraidWord, level: u32) -> Result<AdoValue> {
    let ctx = check_level(level)?;
    let l = b.close().components;
    let j = j_gamma(b, &vec![level; l], None)?;
    let sv = VarSet::colours(l);
    let mut assignment = HashMap::new();
    for i in 0..l {
        assignment.insert(format!("u{}", i + 1), colour_image(l, i, 1 - level as i32));
        assignment.insert(format!("x{}", i + 1), colour_image(l, i, 1));
    }
    assignment.insert("y".to_string(), RootImage { zeta: 0, colour: vec![0; l] });
    assignment.insert("d".to_string(), RootImage { zeta: -1, colour: vec![0; l] });
    let value = evaluate_at_root(&j.value, &ctx, &sv, &assignment)?;
    let opened = b.close().strand_component[0];
    let mono = |power: i32, zeta: i64| {
        let mut e = vec![0; l];
        e[opened] = power;
        CycloPoly::monomial(&ctx, &sv, e, CycloElem::zeta_pow(&ctx, zeta))
    };
    let n = level as i32;
    let y_num = mono(1, 1).try_sub(&mono(-1, -1))?;
    let y_den = mono(n, n as i64).try_sub(&mono(-n, -(n as i64)))?;
    Ok(AdoValue { level, value, y_num, y_den })
}

/// Integer normal form of a knot ADO value: the value is rotated by the power
/// of `ζ` that makes it an integer polynomial, then put in symmetric form.
pub fn alexander_normal_form(v: &AdoValue) -> Result<LaurentPoly> {
    if !v.is_knot_value() {
        return Err(Error::InvalidArgument("normal form is defined for knot values".into()));
    }
    let ctx = v.value.ctx().clone();
    if v.value.is_zero() {
        return Err(Error::Consistency("ADO value is zero".into()));
    }
    let p = (0..ctx.order())
        .find_map(|k| v.value.scale(&CycloElem::zeta_pow(&ctx, k)).as_integer_poly())
        .ok_or_else(|| Error::Consistency("ADO value is not an integer polynomial up to a unit".into()))?;
    Ok(symmetric_normal_form(&p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::parse_braid;

    fn s(t: &str) -> LaurentPoly {
        LaurentPoly::parse(&VarSet::single("s"), t).unwrap()
    }

    #[test]
    fn unknot_is_one() {
        let v = ado(&parse_braid("B1:").unwrap(), 2).unwrap();
        assert_eq!(v.value, CycloPoly::one(v.value.ctx(), &VarSet::single("s")));
        assert!(ado(&parse_braid("B1:").unwrap(), 1).is_err());
    }

    #[test]
    fn level_two_is_alexander_in_s_squared() {
        let t = ado(&parse_braid("B2: 1 1 1").unwrap(), 2).unwrap();
        assert_eq!(alexander_normal_form(&t).unwrap(), s("s^2 - 1 + s^-2"));
        let f = ado(&parse_braid("B3: 1 -2 1 -2").unwrap(), 2).unwrap();
        assert_eq!(alexander_normal_form(&f).unwrap(), s("-s^2 + 3 - s^-2").scale(&(-1).into()));
    }

    #[test]
    fn link_value_has_modified_dimension() {
        let h = ado_link(&parse_braid("B2: 1 1").unwrap(), 2).unwrap();
        assert_eq!(h.value.vars().names(), &["s1".to_string(), "s2".to_string()]);
        assert!(!h.is_knot_value());
    }
}
