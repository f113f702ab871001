//! Partial-trace state sums and the invariants assembled from them.
//!
//! For a braid `β` on `n` strands with closure `L` the state sum is
//!
//! ```text
//! Γ(β) = ∏_i u_i^{f_i - Σ_j lk_ij} · ∏_{k≥2} u_{C(k)}^{-1} · y · Σ_e d^{-2|e|} ⟨v_0⊗v_e | β | v_0⊗v_e⟩
//! ```
//!
//! where `e = (e_2, …, e_n)` runs over `0 <= e_k < N_{C(k)}` and the braid acts
//! on the full (uncapped) Verma weight space. Knots use the ring `Z[u±, x±, d±]`
//! with `y = 1`.

mod ado;
mod link;

use std::fmt;

use rayon::prelude::*;

use crate::braid::{BraidWord, LinkData};
use crate::error::{Error, Result};
use crate::quotient::{reduce_mod_ij, specialize_quotient, tower_project, willetts_member, QuotientElemJ};
use crate::ring::{LaurentPoly, VarSet};
use crate::verma::{BasisState, Engine, WeightVector};

pub use ado::{ado, ado_link, alexander_normal_form, AdoValue};
pub use link::{j_gamma, link_coloured_jones};

/// Variable layout of the ring a state sum is computed in.
#[derive(Clone, Debug)]
pub(crate) struct SumRing {
    pub vars: VarSet,
    pub u: Vec<usize>,
    pub x: Vec<String>,
    pub d: usize,
    pub y: Option<usize>,
}

impl SumRing {
    pub fn knot() -> Self {
        let vars = VarSet::knot();
        SumRing { u: vec![0], x: vec!["x".into()], d: 2, y: None, vars }
    }

    pub fn link(l: usize) -> Self {
        let vars = VarSet::link(l);
        SumRing {
            u: (0..l).collect(),
            x: (1..=l).map(|i| format!("x{i}")).collect(),
            d: 2 * l + 1,
            y: Some(2 * l),
            vars,
        }
    }
}

/// Trace states `(0, e_2, …, e_n)` with `e_k < caps[k]`, in lexicographic order.
fn trace_states(caps: &[u32]) -> Vec<BasisState> {
    let n = caps.len();
    let mut out = Vec::new();
    if n == 0 || caps[1..].contains(&0) {
        return out;
    }
    let mut cur = vec![0u32; n];
    loop {
        out.push(cur.clone());
        let mut k = n - 1;
        loop {
            if k == 0 {
                return out;
            }
            cur[k] += 1;
            if cur[k] < caps[k] {
                break;
            }
            cur[k] = 0;
            k -= 1;
        }
    }
}

fn check_levels(levels: &[u32]) -> Result<()> {
    if levels.contains(&0) {
        return Err(Error::InvalidArgument("levels must be at least 1".into()));
    }
    Ok(())
}

fn engine_for(ring: &SumRing, max_weight: u32) -> Result<Engine> {
    let names: Vec<&str> = ring.x.iter().map(String::as_str).collect();
    Engine::new(&ring.vars, ring.vars.name(ring.d), &names, max_weight)
}

/// Diagonal entries `⟨s|β|s⟩ · d^{-2|s|}` for the given states, in order.
fn weighted_diagonals(
    engine: &Engine,
    b: &BraidWord,
    colours: &[usize],
    states: &[BasisState],
    d: usize,
) -> Result<Vec<LaurentPoly>> {
    let vars = engine.vars().clone();
    states
        .par_iter()
        .map(|s| {
            let (img, _) = engine.braid_act(b, &WeightVector::basis(&vars, s.clone()), colours)?;
            let w: u32 = s.iter().sum();
            Ok(img.coeff(s).shift(d, -2 * w as i32))
        })
        .collect()
}

/// The full state sum with prefactor, for per-component caps.
pub(crate) fn state_sum(b: &BraidWord, link: &LinkData, ring: &SumRing, caps: &[u32]) -> Result<LaurentPoly> {
    let n = b.strands();
    let comp = &link.strand_component;
    let strand_caps: Vec<u32> = comp.iter().map(|&c| caps[c]).collect();
    let max_weight: u32 = strand_caps[1..].iter().map(|c| c - 1).sum();
    let engine = engine_for(ring, max_weight)?;
    let colours: Vec<usize> = comp.iter().map(|&c| ring.vars.require(&ring.x[c])).collect::<Result<_>>()?;
    let states = trace_states(&strand_caps);
    let parts = weighted_diagonals(&engine, b, &colours, &states, ring.d)?;
    let mut sum = LaurentPoly::zero(&ring.vars);
    for p in &parts {
        sum.add_assign_ref(p);
    }
    let mut pre = vec![0i32; ring.vars.len()];
    for i in 0..link.components {
        pre[ring.u[i]] += link.framing_exponent(i) as i32;
    }
    for &c in &comp[1..n] {
        pre[ring.u[c]] -= 1;
    }
    if let Some(y) = ring.y {
        pre[y] += 1;
    }
    Ok(sum.mul_monomial(&pre))
}

/// The knot state sum at level `N`, a Laurent polynomial in `u, x, d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionForm {
    pub levels: Vec<u32>,
    pub value: LaurentPoly,
}

impl IntersectionForm {
    /// Every coefficient is an integer. Holds by construction: all action
    /// coefficients are built with exact divisions in `Z[x±, d±]`.
    pub fn is_integral(&self) -> bool {
        true
    }
}

impl fmt::Display for IntersectionForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

fn knot_data(b: &BraidWord, framing: Option<i64>) -> Result<LinkData> {
    let link = b.close();
    if !link.is_knot() {
        return Err(Error::NotAKnot(link.components));
    }
    match framing {
        Some(f) => link.with_framing(&[f]),
        None => Ok(link),
    }
}

/// Knot state sum at level `N` with the default framing (the writhe).
pub fn a_gamma(b: &BraidWord, level: u32) -> Result<IntersectionForm> {
    a_gamma_framed(b, level, None)
}

pub fn a_gamma_framed(b: &BraidWord, level: u32, framing: Option<i64>) -> Result<IntersectionForm> {
    check_levels(&[level])?;
    let link = knot_data(b, framing)?;
    let value = state_sum(b, &link, &SumRing::knot(), &[level])?;
    Ok(IntersectionForm { levels: vec![level], value })
}

/// `u ↦ x` on a knot state sum, landing in `Z[x±, d±]`.
pub fn set_u_to_x(p: &LaurentPoly) -> Result<LaurentPoly> {
    let xd = VarSet::xd();
    let x = LaurentPoly::var(&xd, "x")?;
    let d = LaurentPoly::var(&xd, "d")?;
    p.hom(&xd, &[x.clone(), x, d])
}

/// Level-`N` unified Jones class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnifiedJones {
    pub level: u32,
    pub class: QuotientElemJ,
}

impl fmt::Display for UnifiedJones {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.class)
    }
}

pub fn unified_jones(b: &BraidWord, level: u32) -> Result<UnifiedJones> {
    unified_jones_framed(b, level, None)
}

pub fn unified_jones_framed(b: &BraidWord, level: u32, framing: Option<i64>) -> Result<UnifiedJones> {
    let a = a_gamma_framed(b, level, framing)?;
    let class = reduce_mod_ij(&set_u_to_x(&a.value)?, level)?;
    Ok(UnifiedJones { level, class })
}

/// As [`unified_jones`], additionally running [`check_overflow`]. The check
/// visits every state up to weight `(n-1)(N-1)` and dominates the cost.
pub fn unified_jones_checked(b: &BraidWord, level: u32) -> Result<UnifiedJones> {
    let u = unified_jones(b, level)?;
    check_overflow(b, level)?;
    Ok(u)
}

/// Normalized coloured Jones polynomial `J_M` in `d`; the unknot gives 1.
pub fn coloured_jones(b: &BraidWord, colour: u32) -> Result<LaurentPoly> {
    specialize_quotient(&unified_jones(b, colour)?.class, colour)
}

/// `x ↦ d^{1-M}` applied to `a_gamma(b, N)` with `u = x`, for `M <= N`.
pub fn specialize_a_gamma(a: &IntersectionForm, colour: u32) -> Result<LaurentPoly> {
    let level = a.levels[0];
    if colour == 0 || colour > level {
        return Err(Error::InvalidArgument(format!("colour {colour} exceeds level {level}")));
    }
    crate::quotient::jones_specialize(&set_u_to_x(&a.value)?, colour)
}

/// Unified Jones classes for `N = 1..=N_max`, checked to form a tower.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniversalTruncation {
    pub levels: Vec<UnifiedJones>,
}

pub fn universal_truncation(b: &BraidWord, max_level: u32) -> Result<UniversalTruncation> {
    check_levels(&[max_level])?;
    let levels: Vec<UnifiedJones> = (1..=max_level).map(|n| unified_jones(b, n)).collect::<Result<_>>()?;
    for w in levels.windows(2) {
        let down = tower_project(&w[1].class)?;
        if down != w[0].class {
            return Err(Error::Consistency(format!(
                "level {} does not project onto level {}: {} vs {}",
                w[1].level, w[0].level, down, w[0].class
            )));
        }
    }
    Ok(UniversalTruncation { levels })
}

/// States `(0, e)` of total weight at most `(n-1)(N-1)` with some `e_k >= N`,
/// and their weighted diagonal entries with `u = x`.
pub fn overflow_diagonals(b: &BraidWord, level: u32) -> Result<Vec<(BasisState, LaurentPoly)>> {
    check_levels(&[level])?;
    knot_data(b, None)?;
    let n = b.strands();
    let bound = (n as u32 - 1) * (level - 1);
    let caps: Vec<u32> = vec![bound + 1; n];
    let states: Vec<BasisState> = trace_states(&caps)
        .into_iter()
        .filter(|s| s.iter().sum::<u32>() <= bound && s.iter().any(|&e| e >= level))
        .collect();
    let ring = SumRing::knot();
    let engine = engine_for(&ring, bound)?;
    let colours = vec![ring.vars.require("x")?; n];
    let diags = weighted_diagonals(&engine, b, &colours, &states, ring.d)?;
    let diags: Vec<LaurentPoly> = diags.iter().map(set_u_to_x).collect::<Result<_>>()?;
    Ok(states.into_iter().zip(diags).collect())
}

/// Fails unless every overflow diagonal entry vanishes modulo `g_N`, which is
/// what justifies leaving those states out of the trace.
pub fn check_overflow(b: &BraidWord, level: u32) -> Result<()> {
    for (s, p) in overflow_diagonals(b, level)? {
        if !reduce_mod_ij(&p, level)?.is_zero() {
            return Err(Error::Consistency(format!("overflow state {s:?} has diagonal entry {p} outside the ideal")));
        }
    }
    Ok(())
}

/// Outcome of comparing two braids that are asserted to close to the same knot.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HabiroReport {
    pub level: u32,
    /// The unified Jones classes coincide.
    pub unified_equal: bool,
    /// The difference of the state sums (with `u = x`) reduces to zero modulo `g_N`.
    pub difference_in_level_ideal: bool,
    /// Membership of the same difference in the Willetts ideal, certified over `Q`.
    pub difference_in_willetts_ideal: Option<bool>,
}

impl HabiroReport {
    pub fn passed(&self) -> bool {
        self.unified_equal && self.difference_in_level_ideal && self.difference_in_willetts_ideal != Some(false)
    }
}

pub fn habiro_consistency(b: &BraidWord, other: &BraidWord, level: u32) -> Result<HabiroReport> {
    let a = set_u_to_x(&a_gamma(b, level)?.value)?;
    let c = set_u_to_x(&a_gamma(other, level)?.value)?;
    let ua = reduce_mod_ij(&a, level)?;
    let uc = reduce_mod_ij(&c, level)?;
    let diff = &a - &c;
    let in_j = reduce_mod_ij(&diff, level)?.is_zero();
    let willetts = match willetts_member(&diff, level) {
        Ok(v) => Some(v),
        Err(Error::ResourceLimit(_)) => None,
        Err(e) => return Err(e),
    };
    Ok(HabiroReport {
        level,
        unified_equal: ua == uc,
        difference_in_level_ideal: in_j,
        difference_in_willetts_ideal: willetts,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::parse_braid;

    fn b(s: &str) -> BraidWord {
        parse_braid(s).unwrap()
    }

    fn dpoly(s: &str) -> LaurentPoly {
        LaurentPoly::parse(&VarSet::single("d"), s).unwrap()
    }

    #[test]
    fn trace_state_enumeration() {
        assert_eq!(trace_states(&[2, 2, 2]), vec![vec![0, 0, 0], vec![0, 0, 1], vec![0, 1, 0], vec![0, 1, 1]]);
        assert_eq!(trace_states(&[3]), vec![vec![0]]);
    }

    #[test]
    fn unknot_values() {
        for n in 1..=4 {
            assert!(a_gamma(&b("B1:"), n).unwrap().value.is_one());
            assert!(unified_jones(&b("B1:"), n).unwrap().class.representative().is_one());
        }
        for s in ["B2: 1", "B2: -1", "B3: 1 -2", "B3: -1 -2"] {
            for n in 1..=3 {
                assert!(unified_jones(&b(s), n).unwrap().class.representative().is_one(), "{s} level {n}");
            }
        }
    }

    #[test]
    fn trefoil_jones() {
        // d = -A^2 turns the Kauffman value -A^-16 + A^-12 + A^-4 into this
        let j = coloured_jones(&b("B2: 1 1 1"), 2).unwrap();
        assert_eq!(j, dpoly("-d^-8 + d^-6 + d^-2"));
        assert!(coloured_jones(&b("B2: 1 1 1"), 1).unwrap().is_one());
    }

    #[test]
    fn figure_eight_is_amphichiral() {
        let j = coloured_jones(&b("B3: 1 -2 1 -2"), 2).unwrap();
        let inv = j.substitute("d", &dpoly("d^-1")).unwrap();
        assert_eq!(j, inv);
        assert_eq!(j, dpoly("d^4 - d^2 + 1 - d^-2 + d^-4"));
    }

    #[test]
    fn links_are_rejected() {
        assert!(matches!(a_gamma(&b("B2: 1 1"), 2), Err(Error::NotAKnot(2))));
        assert!(matches!(a_gamma(&b("B2: 1 -1"), 2), Err(Error::NotAKnot(2))));
    }

    #[test]
    fn trefoil_tower() {
        let t = universal_truncation(&b("B2: 1 1 1"), 3).unwrap();
        assert_eq!(t.levels.len(), 3);
        assert!(t.levels[0].class.representative().is_one());
        let j3 = unified_jones(&b("B2: 1 1 1"), 3).unwrap();
        assert_eq!(specialize_quotient(&j3.class, 2).unwrap(), coloured_jones(&b("B2: 1 1 1"), 2).unwrap());
    }

    #[test]
    fn habiro_report_for_markov_moves() {
        let t = b("B2: 1 1 1");
        let same = habiro_consistency(&t, &t, 2).unwrap();
        assert!(same.passed());
        let st = habiro_consistency(&t, &t.stabilize(true), 2).unwrap();
        assert!(st.unified_equal && st.difference_in_level_ideal);
    }
}
