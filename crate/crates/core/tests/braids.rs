//! Closure combinatorics and braid parsing.

use proptest::prelude::*;
use unijones::braid::{parse_braid, BraidWord};

fn braid_strategy() -> impl Strategy<Value = BraidWord> {
    (1usize..=5).prop_flat_map(|n| {
        let gens: Vec<i32> = (1..n as i32).flat_map(|g| [g, -g]).collect();
        let word = if gens.is_empty() {
            Just(Vec::new()).boxed()
        } else {
            prop::collection::vec(prop::sample::select(gens), 0..=10).boxed()
        };
        word.prop_map(move |w| BraidWord::new(n, w).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn link_data_is_consistent(b in braid_strategy()) {
        let l = b.close();
        let n = b.strands();
        prop_assert_eq!(l.strand_component.len(), n);
        prop_assert_eq!(l.colouring.len(), 2 * n);
        for j in 0..n {
            prop_assert_eq!(l.colouring[j], l.strand_component[j]);
            prop_assert_eq!(l.colouring[n + j], l.strand_component[n - 1 - j]);
        }
        let mut sum: i64 = l.writhe.iter().sum();
        for i in 0..l.components {
            prop_assert_eq!(l.linking[i][i], 0);
            for j in 0..l.components {
                prop_assert_eq!(l.linking[i][j], l.linking[j][i]);
                if i < j {
                    sum += 2 * l.linking[i][j];
                }
            }
        }
        prop_assert_eq!(sum, b.writhe());
    }

    #[test]
    fn display_round_trips(b in braid_strategy()) {
        prop_assert_eq!(parse_braid(&b.to_string()).unwrap(), b);
    }

    #[test]
    fn markov_moves_keep_components(b in braid_strategy(), pos in any::<bool>()) {
        let l = b.close();
        prop_assert_eq!(b.stabilize(pos).close().components, l.components);
        if b.strands() > 1 {
            prop_assert_eq!(b.conjugate(1).unwrap().close().components, l.components);
            prop_assert_eq!(b.rotate(1).close().components, l.components);
        }
        prop_assert_eq!(b.mirror().close().components, l.components);
    }
}
