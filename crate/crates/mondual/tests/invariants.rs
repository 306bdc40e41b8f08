//! Cross-module invariants checked over the whole standard corpus.

use mondual::corpus;
use mondual::dual::{clifford_dual, dual_morphism, enumerate_homs, restricted_duals};
use mondual::reflexivity::{check_reflexive, constructive_preimage, delta, dixmier_check};
use mondual::semilattice::semilattice_characters;
use mondual::MonoidMorphism;

use proptest::prelude::*;

#[test]
fn corpus_verdicts_match_structural_predictions() {
    for (name, s) in corpus::standard_corpus() {
        let report = check_reflexive(&s).unwrap();
        assert_eq!(
            report.verdict, report.predicted,
            "{name}: verdict diverged from the structural prediction"
        );
        let expected = !(name.starts_with("symmetric_inverse_monoid")
            || (name.starts_with("truncated_add") && name != "truncated_add(1)"));
        assert_eq!(report.predicted, expected, "{name}: unexpected structure");
    }
}

#[test]
fn abelian_inverse_duals_agree_across_algorithms() {
    for (name, s) in corpus::standard_corpus() {
        if !s.is_abelian() || !s.is_inverse_semigroup() {
            continue;
        }
        let by_search = enumerate_homs(&s).unwrap();
        let by_structure = clifford_dual(&s).unwrap();
        assert_eq!(
            by_search.value_vectors(),
            by_structure.value_vectors(),
            "{name}: the two dual algorithms disagree"
        );
        assert_eq!(by_search.size(), s.size(), "{name}: |dual| ≠ |S|");
    }
}

#[test]
fn every_dual_base_is_abelian_inverse_with_matching_idempotents() {
    for (name, s) in corpus::standard_corpus() {
        let dual = enumerate_homs(&s).unwrap();
        assert!(dual.base.is_abelian(), "{name}: dual not abelian");
        assert!(
            dual.base.is_inverse_semigroup(),
            "{name}: dual not inverse"
        );
        // restricted_duals internally cross-checks idempotent homs against
        // the base's idempotents
        restricted_duals(&dual).unwrap();
    }
}

#[test]
fn hom_closure_under_pointwise_product() {
    for s in [
        corpus::dot_mu(5).unwrap(),
        corpus::symmetric_inverse_monoid(2).unwrap(),
        corpus::truncated_add(3).unwrap(),
    ] {
        let dual = enumerate_homs(&s).unwrap();
        for a in &dual.homs {
            for b in &dual.homs {
                let product = a.pointwise_mul(b);
                product.verify().unwrap();
                assert!(dual.position(&product.values).is_some());
            }
        }
    }
}

#[test]
fn dixmier_identity_across_the_corpus_sample() {
    for (name, s) in corpus::standard_corpus() {
        if s.size() > 8 {
            continue; // the full sweep runs in the acceptance suite
        }
        assert!(dixmier_check(&s).unwrap(), "{name}: dixmier identity failed");
    }
}

#[test]
fn retraction_dual_splits_the_inclusion_dual() {
    // i: E → S and π: S → E with π∘i = id force i^⊙∘π^⊙ = id on E^:
    for s in [
        corpus::dot_mu(3).unwrap(),
        corpus::strong_semilattice_examples()[2].1.clone(),
    ] {
        let decomposition = s.clifford_decomposition().unwrap();
        let (e_sub, pi) = decomposition.retraction(&s).unwrap();
        let inclusion = e_sub.inclusion(&s).unwrap();
        let dual_s = enumerate_homs(&s).unwrap();
        let dual_e = enumerate_homs(&e_sub.monoid).unwrap();

        let pi_dual = dual_morphism(&pi, &dual_e, &dual_s).unwrap();
        let i_dual = dual_morphism(&inclusion, &dual_s, &dual_e).unwrap();
        let roundtrip = pi_dual.then(&i_dual).unwrap();
        assert!(roundtrip.is_identity());

        // π^⊙ is injective and lands exactly on the idempotent homs
        assert!(pi_dual.is_injective());
        let parts = restricted_duals(&dual_s).unwrap();
        let mut image: Vec<usize> = pi_dual.map.clone();
        image.sort();
        assert_eq!(image, parts.idempotent_part);
    }
}

#[test]
fn idempotent_homs_biject_with_semilattice_characters() {
    for (name, s) in corpus::standard_corpus() {
        if !s.is_abelian() || !s.is_inverse_semigroup() {
            continue;
        }
        let e_sub = s.idempotent_submonoid().unwrap();
        let characters = semilattice_characters(&e_sub.monoid).unwrap();
        let dual = enumerate_homs(&s).unwrap();
        let parts = restricted_duals(&dual).unwrap();
        let inclusion = e_sub.inclusion(&s).unwrap();
        let dual_e = enumerate_homs(&e_sub.monoid).unwrap();
        let restriction = dual_morphism(&inclusion, &dual, &dual_e).unwrap();

        let mut restricted: Vec<Vec<mondual::DotCircle>> = parts
            .idempotent_part
            .iter()
            .map(|&i| dual_e.homs[restriction.apply(i)].values.clone())
            .collect();
        restricted.sort();
        restricted.dedup();
        let expected: Vec<Vec<mondual::DotCircle>> =
            characters.into_iter().map(|h| h.values).collect();
        assert_eq!(restricted, expected, "{name}: restriction misses E^:");
    }
}

#[test]
fn constructive_preimage_inverts_delta_on_small_instances() {
    for s in [
        corpus::dot_mu(3).unwrap(),
        corpus::boolean_semilattice(2).unwrap(),
        corpus::strong_semilattice_examples()[1].1.clone(),
        corpus::cyclic_group(6).unwrap(),
    ] {
        let dual = enumerate_homs(&s).unwrap();
        let (bidual, morphism) = delta(&s, &dual).unwrap();
        assert!(morphism.is_bijective());
        for x in 0..s.size() {
            let recovered =
                constructive_preimage(&s, &dual, &bidual, morphism.apply(x)).unwrap();
            assert_eq!(recovered, x);
        }
    }
}

#[test]
fn strong_semilattice_decomposition_recovers_inputs() {
    // instance 3: a 3-chain carrying C_4, C_2, and the trivial group
    let tower = &corpus::strong_semilattice_examples()[2].1;
    let decomposition = tower.clifford_decomposition().unwrap();
    assert_eq!(decomposition.idempotents.len(), 3);
    let mut group_sizes: Vec<usize> = decomposition.groups.values().map(Vec::len).collect();
    group_sizes.sort();
    assert_eq!(group_sizes, vec![1, 2, 4]);
    // the idempotent order is a chain
    let chain = &decomposition.idempotents;
    for (i, &e) in chain.iter().enumerate() {
        for &f in &chain[i..] {
            assert!(decomposition.le(e, f) || decomposition.le(f, e));
        }
    }
}

#[test]
fn delta_preserves_products_pointwise() {
    // δ(xy) equals δ(x)δ(y) as homs, checked on raw value vectors
    let s = corpus::symmetric_inverse_monoid(2).unwrap();
    let dual = enumerate_homs(&s).unwrap();
    let (bidual, morphism) = delta(&s, &dual).unwrap();
    for x in 0..s.size() {
        for y in 0..s.size() {
            let image = &bidual.homs[morphism.apply(s.mul(x, y))];
            let product = bidual.homs[morphism.apply(x)]
                .pointwise_mul(&bidual.homs[morphism.apply(y)]);
            assert_eq!(image.values, product.values);
        }
    }
}

#[test]
fn morphism_composition_dualizes_contravariantly() {
    // f: C_6 → C_3 (mod 3), g: C_3 → C_3 (doubling)
    let c6 = corpus::cyclic_group(6).unwrap();
    let c3 = corpus::cyclic_group(3).unwrap();
    let f = MonoidMorphism::new(c6.clone(), c3.clone(), vec![0, 1, 2, 0, 1, 2]).unwrap();
    let g = MonoidMorphism::new(c3.clone(), c3.clone(), vec![0, 2, 1]).unwrap();
    let d6 = enumerate_homs(&c6).unwrap();
    let d3 = enumerate_homs(&c3).unwrap();
    let lhs = dual_morphism(&f.then(&g).unwrap(), &d3, &d6).unwrap();
    let rhs = dual_morphism(&g, &d3, &d3)
        .unwrap()
        .then(&dual_morphism(&f, &d3, &d6).unwrap())
        .unwrap();
    assert_eq!(lhs.map, rhs.map);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    // random generator instances all obey the finite-case theorem
    #[test]
    fn random_corpus_instances_satisfy_the_theorem(which in 0usize..6, n in 1usize..7) {
        let s = match which {
            0 => corpus::cyclic_group(n).unwrap(),
            1 => corpus::chain_semilattice(n).unwrap(),
            2 => corpus::boolean_semilattice((n as u32 - 1).min(3)).unwrap(),
            3 => corpus::dot_mu(n as u64).unwrap(),
            4 => corpus::truncated_add(n).unwrap(),
            _ => corpus::adjoin_zero(&corpus::cyclic_group(n).unwrap()).unwrap(),
        };
        let report = check_reflexive(&s).unwrap();
        prop_assert_eq!(report.verdict, report.predicted);
    }

    #[test]
    fn random_products_stay_reflexive(a in 1usize..5, b in 1usize..5) {
        let left = corpus::cyclic_group(a).unwrap();
        let right = corpus::chain_semilattice(b).unwrap();
        let product = corpus::direct_product(&left, &right).unwrap();
        let report = check_reflexive(&product).unwrap();
        prop_assert!(report.verdict);
    }
}
