mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use wilddiag::io::{parse, to_source, CATALOG};
use wilddiag::{compile, dim_oracle, Circle, IrregularClass};

fn seeded_input(seed: u64) -> wilddiag::ProblemInput {
    common::random_input(&mut ChaCha8Rng::seed_from_u64(seed))
}

#[test]
fn catalog_sources_round_trip() {
    for e in CATALOG {
        let input = e.document().unwrap().input;
        let again = parse(&to_source(&input)).unwrap();
        assert_eq!(
            compile(&input).unwrap().cartan.cartan,
            compile(&again).unwrap().cartan.cartan,
            "{}",
            e.name
        );
        assert_eq!(to_source(&again), to_source(&input), "{}", e.name);
    }
}

#[test]
fn catalog_expectations() {
    for e in CATALOG {
        let c = compile(&e.document().unwrap().input).unwrap();
        assert_eq!(c.cartan.dims, e.expected.dims, "{}", e.name);
        assert_eq!(c.cartan.dim_b, e.expected.dim_b, "{}", e.name);
        assert_eq!(c.diagram.rank(), c.rank, "{}", e.name);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn random_inputs_round_trip(seed in any::<u64>()) {
        let input = seeded_input(seed);
        let again = parse(&to_source(&input)).unwrap();
        prop_assert_eq!(to_source(&again), to_source(&input));
    }

    #[test]
    fn dimension_is_even_and_matches_direct_count(seed in any::<u64>()) {
        let input = seeded_input(seed);
        let c = compile(&input).unwrap();
        prop_assert_eq!(c.cartan.dim_b % 2, 0);
        prop_assert_eq!(dim_oracle(&input).unwrap(), c.cartan.dim_b);
        prop_assert_eq!(c.diagram.rank(), input.rank());
    }

    #[test]
    fn untwisted_cores_are_complete_graphs_without_loops(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let input = common::random_input(&mut rng);
        prop_assume!(input.infinity().iter().all(|f| f.circle.ram() == 1));
        let c = compile(&input).unwrap();
        let cores: Vec<usize> = c
            .diagram
            .nodes()
            .iter()
            .filter(|n| n.kind == wilddiag::NodeKind::Core)
            .map(|n| n.id)
            .collect();
        for &i in &cores {
            prop_assert_eq!(c.diagram.loops(i), 0);
        }
    }

    #[test]
    fn hom_class_of_a_circle_with_itself_contains_zero(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = Circle::of(&common::random_factor(&mut rng));
        let end = wilddiag::hom_class(&a, &a).unwrap();
        prop_assert!(end.multiplicity(&Circle::zero()) >= 1);
        let (single, _) = IrregularClass::new(vec![(a.clone(), 1)]);
        prop_assert_eq!(end.irr(), single.end_irr().unwrap());
    }
}
