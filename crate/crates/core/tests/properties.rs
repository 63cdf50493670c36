use gentle_core::generate::{gen_gentle, GeneratorConfig};
use gentle_core::homdim::{gldim_via_polygons, gldim_via_threads, pd_simple};
use gentle_core::io::{parse, serialize};
use gentle_core::oracle::check_equalities;
use gentle_core::strings::{string_of_injective, string_of_projective};
use gentle_core::surface::{ag_invariant, ag_invariant_with_order};
use gentle_core::ThreadSet;
use proptest::prelude::*;

fn presentation() -> impl Strategy<Value = gentle_core::GentlePresentation> {
    (1usize..=8, any::<u64>(), 0usize..=16, any::<bool>()).prop_map(|(n, seed, arrows, cycles)| {
        gen_gentle(&GeneratorConfig {
            vertex_count: n,
            target_arrow_count: arrows,
            seed,
            allow_full_cycles: cycles,
        })
        .unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn serialize_then_parse_is_identity(a in presentation()) {
        prop_assert_eq!(parse(&serialize(&a)).unwrap(), a);
    }

    #[test]
    fn ag_does_not_depend_on_start(a in presentation(), rot in any::<usize>()) {
        let threads = ThreadSet::new(&a);
        let k = threads.permitted.len();
        let order: Vec<usize> = (0..k).rev().cycle().skip(rot % k.max(1)).take(k).collect();
        prop_assert_eq!(ag_invariant_with_order(&threads, &order).unwrap(), ag_invariant(&a).unwrap());
    }

    #[test]
    fn gldim_formulas_agree(a in presentation()) {
        let threads = gldim_via_threads(&a);
        prop_assert_eq!(gldim_via_polygons(&a).unwrap(), threads);
        prop_assert_eq!(a.vertices().map(|v| pd_simple(&a, v)).max().unwrap(), threads);
    }

    #[test]
    fn opposite_swaps_projectives_and_injectives(a in presentation()) {
        let op = a.opposite();
        for v in a.vertices() {
            prop_assert_eq!(string_of_projective(&a, v).dimension(), string_of_injective(&op, v).dimension());
        }
        prop_assert_eq!(op.opposite(), a);
    }

    #[test]
    fn generated_presentations_pass_the_oracle(a in presentation()) {
        let report = check_equalities(&a, 2, None).unwrap();
        let failures: Vec<_> = report.failures().map(|c| c.name.clone()).collect();
        prop_assert!(failures.is_empty(), "{}\n{:?}", serialize(&a), failures);
    }
}
