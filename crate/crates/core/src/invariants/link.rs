//! Link state sums with one level per component and link coloured Jones values.

use super::{check_levels, state_sum, IntersectionForm, SumRing};
use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::ring::{quantum_bracket, LaurentPoly, VarSet};

/// Link state sum over `Z[u_i±, x_i±, y±, d±]`; `levels[i]` caps the trace
/// states on component `i` (components are numbered by their first strand).
pub fn j_gamma(b: &BraidWord, levels: &[u32], framing: Option<&[i64]>) -> Result<IntersectionForm> {
    check_levels(levels)?;
    let mut link = b.close();
    if levels.len() != link.components {
        return Err(Error::InvalidArgument(format!(
            "{} levels given for {} components",
            levels.len(),
            link.components
        )));
    }
    if let Some(f) = framing {
        link = link.with_framing(f)?;
    }
    let value = state_sum(b, &link, &SumRing::link(link.components), levels)?;
    Ok(IntersectionForm { levels: levels.to_vec(), value })
}

/// Coloured Jones polynomial of a link with colour `colours[i]` on component `i`.
///
/// The normalized value sets `y = 1`; otherwise `y` becomes the quantum
/// dimension `[M]` of the colour on the opened component, so the unlink of
/// `k` components gives `[M]^k`.
pub fn link_coloured_jones(b: &BraidWord, colours: &[u32], normalized: bool) -> Result<LaurentPoly> {
    let j = j_gamma(b, colours, None)?;
    let l = colours.len();
    let dv = VarSet::single("d");
    let mut images = Vec::with_capacity(2 * l + 2);
    for &m in colours.iter().chain(colours) {
        images.push(LaurentPoly::var_pow(&dv, "d", 1 - m as i32)?);
    }
    let opened = b.close().strand_component[0];
    images.push(if normalized {
        LaurentPoly::one(&dv)
    } else {
        quantum_bracket(colours[opened] as i64, &dv, "d")?
    });
    images.push(LaurentPoly::var(&dv, "d")?);
    j.value.hom(&dv, &images)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::parse_braid;

    fn dpoly(s: &str) -> LaurentPoly {
        LaurentPoly::parse(&VarSet::single("d"), s).unwrap()
    }

    #[test]
    fn unlinks() {
        let u2 = parse_braid("B2: 1 -1").unwrap();
        assert!(link_coloured_jones(&u2, &[2, 2], true).unwrap() == dpoly("d + d^-1"));
        assert_eq!(link_coloured_jones(&u2, &[2, 2], false).unwrap(), dpoly("(d + d^-1)^2"));
        let u3 = parse_braid("B3:").unwrap();
        assert_eq!(link_coloured_jones(&u3, &[3, 3, 3], true).unwrap(), dpoly("(d^2 + 1 + d^-2)^2"));
    }

    #[test]
    fn knot_agrees_with_link_mode() {
        let t = parse_braid("B2: 1 1 1").unwrap();
        let k = crate::invariants::coloured_jones(&t, 3).unwrap();
        assert_eq!(link_coloured_jones(&t, &[3], true).unwrap(), k);
    }

    #[test]
    fn level_count_must_match() {
        let h = parse_braid("B2: 1 1").unwrap();
        assert!(j_gamma(&h, &[2], None).is_err());
        assert!(j_gamma(&h, &[2, 0], None).is_err());
        assert!(j_gamma(&h, &[2, 3], None).is_ok());
    }
}
