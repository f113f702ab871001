//! Quantum integers, Gaussian binomials and cyclotomic polynomials.

use num_bigint::BigInt;
use num_traits::One;

use super::laurent::LaurentPoly;
use super::varset::VarSet;
use crate::error::{Error, Result};

/// `[n] = v^{n-1} + v^{n-3} + ... + v^{1-n}` in variable `var`.
pub fn quantum_bracket(n: i64, vars: &VarSet, var: &str) -> Result<LaurentPoly> {
    if n < 0 {
        return Err(Error::InvalidArgument(format!("quantum bracket of negative {n}")));
    }
    let i = vars.require(var)?;
    let terms = (0..n).map(|k| {
        let mut e = vec![0; vars.len()];
        e[i] = (n - 1 - 2 * k) as i32;
        (e, BigInt::one())
    });
    Ok(LaurentPoly::from_terms(vars, terms))
}

/// `[n]! = [1][2]...[n]`.
pub fn quantum_factorial(n: i64, vars: &VarSet, var: &str) -> Result<LaurentPoly> {
    let mut acc = LaurentPoly::one(vars);
    for k in 1..=n {
        acc = &acc * &quantum_bracket(k, vars, var)?;
    }
    Ok(acc)
}

/// Balanced Gaussian binomial `[n]!/([k]![n-k]!)`, computed by exact division.
pub fn gauss_binomial(n: i64, k: i64, vars: &VarSet, var: &str) -> Result<LaurentPoly> {
    if k < 0 || n < 0 || k > n {
        return Err(Error::InvalidArgument(format!("gauss binomial ({n}, {k})")));
    }
    let i = vars.require(var)?;
    let num = quantum_factorial(n, vars, var)?;
    let den = &quantum_factorial(k, vars, var)? * &quantum_factorial(n - k, vars, var)?;
    num.div_exact(&den, i)
}

/// Table of balanced Gaussian binomials `[n, k]` for `n <= max`, built with
/// the recurrence `[n,k] = d^{-k}[n-1,k] + d^{n-k}[n-1,k-1]`.
pub fn gauss_table(max: usize, vars: &VarSet, var: &str) -> Result<Vec<Vec<LaurentPoly>>> {
    let i = vars.require(var)?;
    let one = LaurentPoly::one(vars);
    let mut rows: Vec<Vec<LaurentPoly>> = vec![vec![one.clone()]];
    for n in 1..=max {
        let prev = &rows[n - 1];
        let mut row = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut acc = LaurentPoly::zero(vars);
            if k < n {
                acc = &acc + &prev[k].shift(i, -(k as i32));
            }
            if k > 0 {
                acc = &acc + &prev[k - 1].shift(i, (n - k) as i32);
            }
            row.push(acc);
        }
        rows.push(row);
    }
    Ok(rows)
}

/// The cyclotomic polynomial `Φ_m` in variable `var`, obtained by dividing
/// `var^m - 1` by `Φ_e` for every proper divisor `e` of `m`.
pub fn cyclotomic_poly(m: u64, vars: &VarSet, var: &str) -> Result<LaurentPoly> {
    if m == 0 {
        return Err(Error::InvalidArgument("cyclotomic index 0".into()));
    }
    let i = vars.require(var)?;
    let mut p = &LaurentPoly::var_index_pow(vars, i, m as i32) - &LaurentPoly::one(vars);
    for e in 1..m {
        if m.is_multiple_of(e) {
            p = p.div_exact(&cyclotomic_poly(e, vars, var)?, i)?;
        }
    }
    Ok(p)
}

/// Coefficients of `Φ_m` in ascending degree.
pub fn cyclotomic_coeffs(m: u64) -> Vec<BigInt> {
    let v = VarSet::single("q");
    let p = cyclotomic_poly(m, &v, "q").expect("cyclotomic");
    let deg = p.max_exp(0).unwrap() as usize;
    (0..=deg).map(|k| p.coeff(&[k as i32])).collect()
}
