//! Acceptance suite: one PASS/FAIL line per criterion.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use unijones::braid::{parse_braid, BraidWord};
use unijones::invariants::*;
use unijones::knots::{lookup, TABLE};
use unijones::oracles::*;
use unijones::quotient::{tower_project, willetts_member, LevelIdealJ};
use unijones::ring::{LaurentPoly, VarSet};
use unijones::verma::{enumerate_basis, Engine, WeightVector};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn b(s: &str) -> BraidWord {
    parse_braid(s).unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|x| x.to_string())
}

fn oracle_jones(br: &BraidWord) -> Result<LaurentPoly, String> {
    e(bracket_to_d(&e(kauffman_jones(br))?))
}

fn within(limit: Duration, start: Instant) -> Result<(), String> {
    ensure(start.elapsed() < limit, || format!("took {:?}, limit {limit:?}", start.elapsed()))
}

fn jones_anchor() -> Outcome {
    let t0 = Instant::now();
    let knots = ["0_1", "3_1", "4_1", "5_2", "6_1", "6_2"];
    for name in knots {
        let br = lookup(name).unwrap().braid();
        let j = e(coloured_jones(&br, 2))?;
        ensure(j == oracle_jones(&br)?, || format!("{name}: {j} differs from the bracket"))?;
    }
    // the two-strand diagram σ1σ1^{-1} closes to a two-component unlink
    let u = b("B2: 1 -1");
    let j = e(link_coloured_jones(&u, &[2, 2], true))?;
    ensure(j == oracle_jones(&u)?, || format!("B2: 1 -1 gives {j}"))?;
    for s in ["B2: 1", "B2: -1", "B3: 1 -2"] {
        ensure(e(coloured_jones(&b(s), 2))?.is_one(), || format!("{s} is not 1"))?;
    }
    within(Duration::from_secs(30), t0)?;
    Ok(format!("{} knots + unlink diagram, {:?}", knots.len(), t0.elapsed()))
}

fn unification() -> Outcome {
    let t0 = Instant::now();
    let mut checks = 0;
    for name in ["3_1", "4_1"] {
        let br = lookup(name).unwrap().braid();
        let forms: Vec<IntersectionForm> = (1..=4).map(|n| e(a_gamma(&br, n))).collect::<Result<_, _>>()?;
        for n in 2..=4usize {
            for m in 2..=n {
                let hi = e(specialize_a_gamma(&forms[n - 1], m as u32))?;
                let lo = e(specialize_a_gamma(&forms[m - 1], m as u32))?;
                ensure(hi == lo, || format!("{name}: colour {m} from level {n} differs"))?;
                checks += 1;
            }
        }
    }
    within(Duration::from_secs(300), t0)?;
    Ok(format!("{checks} (M, N) pairs, {:?}", t0.elapsed()))
}

fn level_invariance() -> Outcome {
    let groups = [
        ("unknot", vec!["B1:", "B2: 1", "B2: -1", "B3: 1 -2", "B3: -2 1", "B4: 1 -2 3"]),
        ("trefoil", vec!["B2: 1 1 1", "B2: -1 1 1 1 1", "B3: 1 1 1 2", "B3: 1 1 1 -2", "B3: 1 2 1 2", "B3: 2 2 2 1"]),
    ];
    let mut count = 0;
    for (name, reps) in &groups {
        for n in 1..=3 {
            let first = e(unified_jones(&b(reps[0]), n))?;
            for r in &reps[1..] {
                let other = e(unified_jones(&b(r), n))?;
                ensure(other == first, || format!("{name} level {n}: {r} gives {other}, expected {first}"))?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} comparisons over {} representatives each", groups[0].1.len()))
}

fn tower() -> Outcome {
    let mut count = 0;
    for k in TABLE {
        let br = k.braid();
        for n in 1..=3 {
            let hi = e(unified_jones(&br, n + 1))?;
            let lo = e(unified_jones(&br, n))?;
            ensure(e(tower_project(&hi.class))? == lo.class, || format!("{} level {}", k.name, n + 1))?;
            count += 1;
        }
    }
    Ok(format!("{count} projections on {} knots", TABLE.len()))
}

fn ado_alexander() -> Outcome {
    for k in TABLE {
        let br = k.braid();
        let a = e(alexander_normal_form(&e(ado(&br, 2))?))?;
        let d = symmetric_normal_form(&e(alexander_in_s(&e(burau_alexander(&br))?))?);
        ensure(a == d, || format!("{}: ADO {a} vs Alexander {d}", k.name))?;
    }
    Ok(format!("{} knots through 7 crossings", TABLE.len()))
}

fn rmatrix_suite() -> Outcome {
    let v = VarSet::new(&["x1", "x2", "d"]).unwrap();
    let eng = e(Engine::new(&v, "d", &["x1", "x2"], 4))?;
    let colourings = |n: usize| -> Vec<Vec<usize>> {
        (0..1usize << n).map(|mask| (0..n).map(|k| (mask >> k) & 1).collect()).collect()
    };
    for cols in colourings(3) {
        for m in 0..=4 {
            for s in [1, -1] {
                let l = e(eng.action_matrix(&[s, 2 * s, s], 3, m, &cols))?;
                let r = e(eng.action_matrix(&[2 * s, s, 2 * s], 3, m, &cols))?;
                ensure(l == r, || format!("Yang-Baxter {cols:?} m={m}"))?;
            }
        }
    }
    for cols in colourings(4) {
        for m in 0..=4 {
            let l = e(eng.action_matrix(&[1, 3], 4, m, &cols))?;
            let r = e(eng.action_matrix(&[3, 1], 4, m, &cols))?;
            ensure(l == r, || format!("far commutation {cols:?} m={m}"))?;
        }
    }
    for n in 2..=4usize {
        for cols in colourings(n) {
            for m in 0..=4 {
                for s in enumerate_basis(n, m, None).basis() {
                    let w = WeightVector::basis(&v, s.clone());
                    for g in 1..n as i32 {
                        let back = e(eng.braid_act(&BraidWord::new(n, vec![g, -g]).unwrap(), &w, &cols))?.0;
                        ensure(back == w, || format!("inverse σ{g} on {s:?}"))?;
                        let img = e(eng.braid_act(&BraidWord::new(n, vec![g]).unwrap(), &w, &cols))?.0;
                        ensure(img.weight() == Some(m), || format!("weight σ{g} on {s:?}"))?;
                    }
                }
            }
        }
    }
    let xd = VarSet::xd();
    let one = e(Engine::new(&xd, "d", &["x"], 4))?;
    let mut entries = 0;
    for n in 2..=3usize {
        let words: Vec<Vec<i32>> = (1..n as i32).flat_map(|g| [vec![g], vec![-g]]).collect();
        for w in words {
            for m in 0..=4 {
                let space = enumerate_basis(n, m, None);
                let mat = e(one.action_matrix(&w, n, m, &vec![0; n]))?;
                for level in 1..=3u32 {
                    for (c, src) in space.basis().iter().enumerate() {
                        for (r, dst) in space.basis().iter().enumerate() {
                            if src.iter().all(|&x| x < level) && dst.iter().any(|&x| x >= level) {
                                let sp = e(unijones::quotient::jones_specialize(&mat[c][r], level))?;
                                ensure(sp.is_zero(), || format!("{w:?} {src:?}->{dst:?} level {level}"))?;
                                entries += 1;
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(format!("YBE, far commutation, inverse, weight on n<=4 m<=4; {entries} vanishing entries"))
}

fn random_words(count: usize, seed: u64) -> Vec<BraidWord> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=4usize);
            let len = if n == 1 { 0 } else { rng.gen_range(0..=8usize) };
            let w = (0..len)
                .map(|_| {
                    let g = rng.gen_range(1..n as i32);
                    if rng.gen_bool(0.5) { g } else { -g }
                })
                .collect();
            BraidWord::new(n, w).unwrap()
        })
        .collect()
}

fn integrality() -> Outcome {
    let words = random_words(120, 7);
    let (mut knots, mut links) = (0, 0);
    for br in &words {
        let l = br.close().components;
        if l == 1 {
            for n in 2..=3 {
                let a = e(a_gamma(br, n))?;
                ensure(a.is_integral(), || format!("{br}: non-integral"))?;
            }
            let j = e(coloured_jones(br, 2))?;
            ensure(j == oracle_jones(br)?, || format!("{br}: colour 2 disagrees with the bracket"))?;
            knots += 1;
        } else {
            let a = e(j_gamma(br, &vec![2; l], None))?;
            ensure(a.is_integral(), || format!("{br}: non-integral"))?;
            let j = e(link_coloured_jones(br, &vec![2; l], true))?;
            ensure(j == oracle_jones(br)?, || format!("{br}: link value disagrees with the bracket"))?;
            links += 1;
        }
    }
    Ok(format!("{} random words ({knots} knots, {links} links), all integral and oracle-consistent", words.len()))
}

fn ideal_structure() -> Outcome {
    let t0 = Instant::now();
    for n in 2..=3 {
        let g = e(LevelIdealJ::new(n))?;
        ensure(e(willetts_member(g.generator(), n))?, || format!("g_{n} is not a member"))?;
        let one = LaurentPoly::one(&VarSet::xd());
        ensure(!e(willetts_member(&one, n))?, || format!("1 is a member at level {n}"))?;
    }
    within(Duration::from_secs(60), t0)?;
    Ok(format!("N = 2, 3, Q-certified, {:?}", t0.elapsed()))
}

fn full_suite_text() -> Result<String, String> {
    let mut out = String::new();
    for k in TABLE {
        let br = k.braid();
        for n in 1..=3 {
            out += &format!("{} {n} {}\n", k.name, e(unified_jones(&br, n))?);
        }
        out += &format!("{} ado {}\n", k.name, e(ado(&br, 3))?);
        out += &format!("{} bracket {}\n", k.name, e(kauffman_jones(&br))?);
    }
    for br in random_words(40, 11) {
        let l = br.close().components;
        out += &format!("{br} {}\n", e(j_gamma(&br, &vec![2; l], None))?);
    }
    Ok(out)
}

fn determinism() -> Outcome {
    let mut outputs = Vec::new();
    for threads in [1, 2, 4, 8] {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().map_err(|x| x.to_string())?;
        outputs.push(pool.install(full_suite_text)?);
    }
    outputs.push(full_suite_text()?);
    ensure(outputs.windows(2).all(|w| w[0] == w[1]), || "outputs differ".into())?;
    Ok(format!("{} runs, {} bytes each, identical", outputs.len(), outputs[0].len()))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("1 Jones anchor", jones_anchor),
        ("2 unification M <= N <= 4", unification),
        ("3 level-N invariance under Markov moves", level_invariance),
        ("4 tower compatibility", tower),
        ("5 ADO at N = 2 equals Alexander", ado_alexander),
        ("6 R-matrix constraint suite", rmatrix_suite),
        ("7 integrality on random words", integrality),
        ("8 level ideal inside the Willetts ideal", ideal_structure),
        ("9 determinism across thread counts", determinism),
    ];
    let mut failed = Vec::new();
    for (name, check) in criteria {
        let t0 = Instant::now();
        match check() {
            Ok(detail) => println!("PASS criterion {name}: {detail} [{:.2?}]", t0.elapsed()),
            Err(why) => {
                println!("FAIL criterion {name}: {why} [{:.2?}]", t0.elapsed());
                failed.push(name);
            }
        }
    }
    if failed.is_empty() {
        println!("acceptance: all {} criteria pass", criteria.len());
    } else {
        println!("acceptance: failed {failed:?}");
        std::process::exit(1);
    }
}
