//! Verification suites driven from the command line.

use clap::Subcommand;
use unijones::braid::BraidWord;
use unijones::invariants::{
    a_gamma, ado, alexander_normal_form, check_overflow, coloured_jones, specialize_a_gamma, unified_jones,
    universal_truncation,
};
use unijones::oracles::{alexander_in_s, bracket_to_d, burau_alexander, kauffman_jones, symmetric_normal_form};
use unijones::quotient::{tower_project, willetts_member, LevelIdealJ};
use unijones::ring::{LaurentPoly, VarSet};
use unijones::Error;

use crate::{read_braid, Format, Status};

#[derive(Subcommand, Debug)]
pub enum Suite {
    /// Colour-M specializations agree across levels M <= N <= max-level.
    Unification {
        #[arg(long)]
        braid: String,
        #[arg(long, default_value_t = 3)]
        max_level: u32,
    },
    /// The unified class is unchanged under conjugation and stabilization.
    Markov {
        #[arg(long)]
        braid: String,
        #[arg(long, default_value_t = 2)]
        level: u32,
    },
    /// Level N+1 projects onto level N.
    Tower {
        #[arg(long)]
        braid: String,
        #[arg(long, default_value_t = 3)]
        max_level: u32,
    },
    /// Jones against the bracket, ADO at N = 2 against Burau.
    Oracle {
        #[arg(long)]
        braid: String,
    },
    /// Overflow states of the trace vanish modulo the level ideal.
    Overflow {
        #[arg(long)]
        braid: String,
        #[arg(long, default_value_t = 2)]
        level: u32,
    },
    /// The level generator lies in the Willetts ideal and 1 does not.
    Ideal {
        #[arg(long, default_value_t = 2)]
        level: u32,
    },
}

struct Checks(Vec<(String, bool, String)>);

impl Checks {
    fn push(&mut self, name: String, pass: bool, detail: String) {
        self.0.push((name, pass, detail));
    }

    fn render(&self, format: Format) -> String {
        let mut out = String::new();
        let failed = self.0.iter().filter(|c| !c.1).count();
        for (name, pass, detail) in &self.0 {
            let tag = if *pass { "PASS" } else { "FAIL" };
            match format {
                Format::Text if detail.is_empty() => out += &format!("{tag} {name}\n"),
                Format::Text => out += &format!("{tag} {name}: {detail}\n"),
                Format::Structured => out += &format!("{name}={}\n", tag.to_lowercase()),
            }
        }
        match format {
            Format::Text if failed == 0 => out += &format!("PASS all {} checks\n", self.0.len()),
            Format::Text => out += &format!("FAIL {failed} of {} checks\n", self.0.len()),
            Format::Structured => {
                out += &format!("checks={}\nfailed={failed}\nresult={}\n", self.0.len(), if failed == 0 { "pass" } else { "fail" })
            }
        }
        out
    }
}

/// Conjugates, stabilizations and rotations of `b`, all closing to the same link.
pub fn markov_family(b: &BraidWord) -> Result<Vec<(String, BraidWord)>, Error> {
    let mut out = vec![("original".to_string(), b.clone())];
    for g in 1..b.strands() as i32 {
        for s in [g, -g] {
            out.push((format!("conjugate {s}"), b.conjugate(s)?));
        }
    }
    out.push(("stabilize +".into(), b.stabilize(true)));
    out.push(("stabilize -".into(), b.stabilize(false)));
    out.push(("stabilize + +".into(), b.stabilize(true).stabilize(true)));
    for k in 1..b.len() {
        out.push((format!("rotate {k}"), b.rotate(k)));
    }
    if b.strands() > 1 {
        out.push(("stabilize - then conjugate 1".into(), b.stabilize(false).conjugate(1)?));
    }
    Ok(out)
}

pub fn run(suite: &Suite, format: Format) -> Result<Status, Error> {
    let mut c = Checks(Vec::new());
    match suite {
        Suite::Unification { braid, max_level } => {
            let b = read_braid(braid)?;
            let forms = (1..=*max_level).map(|n| a_gamma(&b, n)).collect::<Result<Vec<_>, _>>()?;
            for n in 2..=*max_level {
                for m in 2..=n {
                    let hi = specialize_a_gamma(&forms[n as usize - 1], m)?;
                    let lo = specialize_a_gamma(&forms[m as usize - 1], m)?;
                    c.push(format!("unification.M{m}.N{n}"), hi == lo, String::new());
                }
            }
            if *max_level >= 2 && b.len() <= unijones::oracles::MAX_BRACKET_CROSSINGS {
                let j = specialize_a_gamma(&forms[1], 2)?;
                let k = bracket_to_d(&kauffman_jones(&b)?)?;
                c.push("bracket.M2".into(), j == k, String::new());
            }
        }
        Suite::Markov { braid, level } => {
            let b = read_braid(braid)?;
            let reference = unified_jones(&b, *level)?;
            for (name, w) in markov_family(&b)? {
                let v = unified_jones(&w, *level)?;
                let detail = if v == reference { w.to_string() } else { format!("{w} gives {v}, expected {reference}") };
                c.push(format!("markov.{}", name.replace(' ', "_")), v == reference, detail);
            }
        }
        Suite::Tower { braid, max_level } => {
            let b = read_braid(braid)?;
            let classes = (1..=*max_level).map(|n| unified_jones(&b, n)).collect::<Result<Vec<_>, _>>()?;
            for n in 2..=*max_level as usize {
                let ok = tower_project(&classes[n - 1].class)? == classes[n - 2].class;
                c.push(format!("tower.N{n}"), ok, String::new());
            }
            let universal = match universal_truncation(&b, *max_level) {
                Ok(_) => (true, String::new()),
                Err(Error::Consistency(e)) => (false, e),
                Err(e) => return Err(e),
            };
            c.push("universal_truncation".into(), universal.0, universal.1);
        }
        Suite::Oracle { braid } => {
            let b = read_braid(braid)?;
            let j = coloured_jones(&b, 2)?;
            let k = bracket_to_d(&kauffman_jones(&b)?)?;
            c.push("jones.bracket".into(), j == k, j.to_string());
            let a = alexander_normal_form(&ado(&b, 2)?)?;
            let d = symmetric_normal_form(&alexander_in_s(&burau_alexander(&b)?)?);
            c.push("ado.alexander".into(), a == d, a.to_string());
        }
        Suite::Overflow { braid, level } => {
            let b = read_braid(braid)?;
            let r = match check_overflow(&b, *level) {
                Ok(()) => (true, String::new()),
                Err(Error::Consistency(e)) => (false, e),
                Err(e) => return Err(e),
            };
            c.push(format!("overflow.N{level}"), r.0, r.1);
        }
        Suite::Ideal { level } => {
            let g = LevelIdealJ::new(*level)?;
            c.push("generator_member".into(), willetts_member(g.generator(), *level)?, g.generator().to_string());
            let one = LaurentPoly::one(&VarSet::xd());
            c.push("one_not_member".into(), !willetts_member(&one, *level)?, String::new());
        }
    }
    print!("{}", c.render(format));
    Ok(if c.0.iter().all(|x| x.1) { Status::Ok } else { Status::ChecksFailed })
}

#[cfg(test)]
mod tests {
    use super::*;
    use unijones::braid::parse_braid;

    #[test]
    fn markov_family_preserves_the_closure_type() {
        for s in ["B1:", "B2: 1 1 1", "B3: 1 -2 1 -2", "B2: 1 1"] {
            let b = parse_braid(s).unwrap();
            let l = b.close().components;
            let fam = markov_family(&b).unwrap();
            assert!(fam.len() >= 4);
            for (name, w) in fam {
                assert_eq!(w.close().components, l, "{s} {name}");
            }
        }
    }

    #[test]
    fn failed_checks_are_reported() {
        let mut c = Checks(Vec::new());
        c.push("a".into(), true, String::new());
        c.push("b".into(), false, "why".into());
        assert_eq!(c.render(Format::Text), "PASS a\nFAIL b: why\nFAIL 1 of 2 checks\n");
    }
}
