//! Duality for finite semilattices: every character is the indicator of a
//! principal filter, so the dual is again a semilattice of the same size.

use crate::circle::DotCircle;
use crate::dual::{dual_from_homs, DualMonoid, Hom};
use crate::error::{Error, Result};
use crate::monoid::{FiniteMonoid, MonoidMorphism};

/// A filter of a finite semilattice: an up-closed, product-closed, nonempty
/// subset. Finite filters are principal, so the filter is the upper cone of
/// its minimum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Filter {
    pub base_semilattice: FiniteMonoid,
    /// Sorted member indices; always contains the unit (the top element).
    pub members: Vec<usize>,
    pub min_element: usize,
}

impl Filter {
    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    /// The filter's indicator function as a hom into {0, 1} ⊂ Ṫ.
    pub fn indicator(&self) -> Hom {
        let values = (0..self.base_semilattice.size())
            .map(|x| {
                if self.contains(x) {
                    DotCircle::ONE
                } else {
                    DotCircle::Zero
                }
            })
            .collect();
        Hom {
            source: self.base_semilattice.clone(),
            values,
        }
    }
}

fn require_semilattice(e: &FiniteMonoid) -> Result<()> {
    if let Some((x, _)) = e.abelian_witness() {
        return Err(Error::NotASemilattice { x });
    }
    if let Some(x) = (0..e.size()).find(|&x| !e.is_idempotent(x)) {
        return Err(Error::NotASemilattice { x });
    }
    Ok(())
}

/// The principal filter ↑e = {f : ef = e} of a semilattice element.
pub fn upper_cone(e_lattice: &FiniteMonoid, e: usize) -> Result<Filter> {
    require_semilattice(e_lattice)?;
    let members = (0..e_lattice.size())
        .filter(|&f| e_lattice.mul(e, f) == e)
        .collect();
    Ok(Filter {
        base_semilattice: e_lattice.clone(),
        members,
        min_element: e,
    })
}

/// The join of two elements, computed as the minimum of ↑e ∩ ↑f. Exists in
/// every finite semilattice with a unit; failure to find it indicates a
/// corrupted table rather than bad input.
pub fn join(e_lattice: &FiniteMonoid, e: usize, f: usize) -> Result<usize> {
    require_semilattice(e_lattice)?;
    let cone_e = upper_cone(e_lattice, e)?;
    let cone_f = upper_cone(e_lattice, f)?;
    let intersection: Vec<usize> = cone_e
        .members
        .iter()
        .copied()
        .filter(|&x| cone_f.contains(x))
        .collect();
    let minimum = intersection
        .iter()
        .copied()
        .reduce(|a, b| e_lattice.mul(a, b))
        .ok_or_else(|| Error::Inconsistency("upper cones never meet".into()))?;
    if !intersection.contains(&minimum) {
        return Err(Error::Inconsistency(
            "cone intersection has no minimum".into(),
        ));
    }
    Ok(minimum)
}

/// All characters of a finite semilattice: exactly one per element, the
/// indicator of its upper cone, in canonical order.
pub fn semilattice_characters(e_lattice: &FiniteMonoid) -> Result<Vec<Hom>> {
    require_semilattice(e_lattice)?;
    let mut characters = Vec::with_capacity(e_lattice.size());
    for e in 0..e_lattice.size() {
        let hom = upper_cone(e_lattice, e)?.indicator();
        hom.verify()?;
        characters.push(hom);
    }
    characters.sort_by(|a, b| a.values.cmp(&b.values));
    if characters.windows(2).any(|w| w[0].values == w[1].values) {
        return Err(Error::Inconsistency(
            "distinct elements produced the same character".into(),
        ));
    }
    Ok(characters)
}

/// Recover the filter behind an idempotent-valued hom: its members are
/// h⁻¹(1) and its minimum their product.
pub fn filter_of_character(e_lattice: &FiniteMonoid, hom: &Hom) -> Result<Filter> {
    require_semilattice(e_lattice)?;
    if &hom.source != e_lattice || !hom.is_idempotent_valued() {
        return Err(Error::InvalidParameter(
            "expected a {0,1}-valued hom on the given semilattice".into(),
        ));
    }
    hom.verify()?;
    let members: Vec<usize> = (0..e_lattice.size())
        .filter(|&x| hom.values[x].is_one())
        .collect();
    let min_element = members
        .iter()
        .copied()
        .reduce(|a, b| e_lattice.mul(a, b))
        .ok_or_else(|| Error::Inconsistency("character with empty support".into()))?;
    let cone = upper_cone(e_lattice, min_element)?;
    if cone.members != members {
        return Err(Error::Inconsistency(
            "character support is not an upper cone".into(),
        ));
    }
    Ok(cone)
}

/// The dual semilattice E^: as a monoid, built from the characters.
pub fn semilattice_dual(e_lattice: &FiniteMonoid) -> Result<DualMonoid> {
    let vectors = semilattice_characters(e_lattice)?
        .into_iter()
        .map(|h| h.values)
        .collect();
    dual_from_homs(e_lattice.clone(), vectors)
}

/// The evaluation map E → E^:: with its isomorphism verdict; true for every
/// finite semilattice.
pub fn hms_double_dual_check(e_lattice: &FiniteMonoid) -> Result<(MonoidMorphism, bool)> {
    let first = semilattice_dual(e_lattice)?;
    let second = semilattice_dual(&first.base)?;
    let mut map = Vec::with_capacity(e_lattice.size());
    for x in 0..e_lattice.size() {
        let evaluation: Vec<DotCircle> = first.homs.iter().map(|h| h.values[x]).collect();
        map.push(second.position(&evaluation).ok_or(Error::EvaluationNotAHom)?);
    }
    let morphism = MonoidMorphism::new(e_lattice.clone(), second.base.clone(), map)
        .map_err(|_| Error::EvaluationNotAHom)?;
    let iso = morphism.is_bijective();
    Ok((morphism, iso))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circle::{Turn, Zero};
    use crate::corpus;
    use crate::dual::enumerate_homs;

    /// Oracle: all {0,1} assignments fixing the unit, filtered by the hom
    /// law. 2^(n−1) candidates.
    fn brute_force_01_homs(e: &FiniteMonoid) -> Vec<Vec<DotCircle>> {
        let free: Vec<usize> = (0..e.size()).filter(|&x| x != e.unit()).collect();
        let mut found = Vec::new();
        for mask in 0..(1u32 << free.len()) {
            let mut values = vec![DotCircle::ONE; e.size()];
            for (slot, &x) in free.iter().enumerate() {
                if mask & (1 << slot) == 0 {
                    values[x] = Zero;
                }
            }
            let is_hom = (0..e.size()).all(|x| {
                (0..e.size()).all(|y| values[e.mul(x, y)] == values[x].mul(values[y]))
            });
            if is_hom {
                found.push(values);
            }
        }
        found.sort();
        found
    }

    #[test]
    fn upper_cone_examples() {
        let chain = corpus::chain_semilattice(3).unwrap();
        let top = upper_cone(&chain, chain.unit()).unwrap();
        assert_eq!(top.members, vec![2]);
        let middle = upper_cone(&chain, 1).unwrap();
        assert_eq!(middle.members, vec![1, 2]);
        let bottom = upper_cone(&chain, 0).unwrap();
        assert_eq!(bottom.members, vec![0, 1, 2]);

        let diamond = corpus::boolean_semilattice(2).unwrap();
        let cone = upper_cone(&diamond, 0).unwrap();
        assert_eq!(cone.members, vec![0, 1, 2, 3]);
        assert_eq!(upper_cone(&diamond, 1).unwrap().members, vec![1, 3]);
    }

    #[test]
    fn two_chain_characters() {
        let chain = corpus::chain_semilattice(2).unwrap();
        let chars = semilattice_characters(&chain).unwrap();
        let vectors: Vec<&[DotCircle]> = chars.iter().map(|h| h.values.as_slice()).collect();
        assert_eq!(
            vectors,
            vec![
                &[Zero, DotCircle::ONE][..],          // indicator of {top}
                &[DotCircle::ONE, DotCircle::ONE][..], // constant 1
            ]
        );
    }

    #[test]
    fn characters_match_brute_force() {
        let chain2 = corpus::chain_semilattice(2).unwrap();
        let instances = vec![
            corpus::chain_semilattice(1).unwrap(),
            corpus::chain_semilattice(3).unwrap(),
            corpus::chain_semilattice(5).unwrap(),
            corpus::boolean_semilattice(2).unwrap(),
            corpus::boolean_semilattice(3).unwrap(),
            corpus::direct_product(&chain2, &chain2).unwrap(),
        ];
        for e in instances {
            let structured: Vec<Vec<DotCircle>> = semilattice_characters(&e)
                .unwrap()
                .into_iter()
                .map(|h| h.values)
                .collect();
            assert_eq!(structured, brute_force_01_homs(&e));
            assert_eq!(structured.len(), e.size());
        }
    }

    #[test]
    fn diamond_has_four_characters() {
        let diamond = corpus::boolean_semilattice(2).unwrap();
        assert_eq!(semilattice_characters(&diamond).unwrap().len(), 4);
    }

    #[test]
    fn indicator_products_follow_joins() {
        let diamond = corpus::boolean_semilattice(2).unwrap();
        // masks: ↑1 ∩ ↑2 = {3}, so join(1, 2) = 3
        assert_eq!(join(&diamond, 1, 2).unwrap(), 3);
        let a = upper_cone(&diamond, 1).unwrap().indicator();
        let b = upper_cone(&diamond, 2).unwrap().indicator();
        let product = a.pointwise_mul(&b);
        let joined = upper_cone(&diamond, 3).unwrap().indicator();
        assert_eq!(product.values, joined.values);

        let chain = corpus::chain_semilattice(4).unwrap();
        assert_eq!(join(&chain, 1, 2).unwrap(), 2);
        assert_eq!(join(&chain, 0, 3).unwrap(), 3);
    }

    #[test]
    fn semilattice_dual_equals_full_dual() {
        for e in [
            corpus::chain_semilattice(4).unwrap(),
            corpus::boolean_semilattice(2).unwrap(),
        ] {
            let by_filters = semilattice_dual(&e).unwrap();
            let by_search = enumerate_homs(&e).unwrap();
            assert_eq!(by_filters.value_vectors(), by_search.value_vectors());
        }
    }

    #[test]
    fn double_dual_examples() {
        let (_, iso) = hms_double_dual_check(&corpus::chain_semilattice(1).unwrap()).unwrap();
        assert!(iso);
        let (_, iso) = hms_double_dual_check(&corpus::chain_semilattice(4).unwrap()).unwrap();
        assert!(iso);
        let (morphism, iso) =
            hms_double_dual_check(&corpus::boolean_semilattice(3).unwrap()).unwrap();
        assert!(iso);
        assert_eq!(morphism.map.len(), 8);
    }

    #[test]
    fn filter_recovery_round_trips() {
        let e = corpus::boolean_semilattice(2).unwrap();
        for x in 0..e.size() {
            let cone = upper_cone(&e, x).unwrap();
            let recovered = filter_of_character(&e, &cone.indicator()).unwrap();
            assert_eq!(recovered, cone);
        }
        // a hom with a value outside {0, 1} is rejected
        let circle_valued = Hom {
            source: e.clone(),
            values: vec![Zero, Turn(1, 2), Zero, DotCircle::ONE],
        };
        assert!(filter_of_character(&e, &circle_valued).is_err());
    }

    #[test]
    fn rejects_non_semilattices() {
        let c2 = corpus::cyclic_group(2).unwrap();
        assert!(matches!(
            semilattice_characters(&c2),
            Err(Error::NotASemilattice { .. })
        ));
        let t2 = corpus::truncated_add(2).unwrap();
        assert!(matches!(
            upper_cone(&t2, 0),
            Err(Error::NotASemilattice { x: 1 })
        ));
    }
}
