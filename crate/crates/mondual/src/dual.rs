//! The dual of a finite monoid: all homomorphisms into the circle-with-zero
//! under pointwise multiplication, computed by two independent algorithms.

use std::collections::HashMap;

use crate::characters::character_group;
use crate::circle::DotCircle;
use crate::error::{Error, Result};
use crate::monoid::{FiniteMonoid, MonoidMorphism};

/// A monoid homomorphism from `source` into Ṫ, stored as one value per
/// source element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hom {
    pub source: FiniteMonoid,
    pub values: Vec<DotCircle>,
}

impl Hom {
    pub fn eval(&self, x: usize) -> DotCircle {
        self.values[x]
    }

    /// Check the homomorphism laws: h(1) = 1 and h(xy) = h(x)h(y).
    pub fn verify(&self) -> Result<()> {
        let s = &self.source;
        if self.values.len() != s.size() {
            return Err(Error::Inconsistency("hom has wrong length".into()));
        }
        if !self.values[s.unit()].is_one() {
            return Err(Error::Inconsistency("hom does not fix the unit".into()));
        }
        for x in 0..s.size() {
            for y in 0..s.size() {
                if self.values[s.mul(x, y)] != self.values[x].mul(self.values[y]) {
                    return Err(Error::Inconsistency(format!(
                        "hom is not multiplicative at ({}, {})",
                        s.label(x),
                        s.label(y)
                    )));
                }
            }
        }
        Ok(())
    }

    /// Whether every value lies in {0, 1}, i.e. the hom is an idempotent of
    /// the dual.
    pub fn is_idempotent_valued(&self) -> bool {
        self.values.iter().all(|v| v.is_zero() || v.is_one())
    }

    /// Whether no value is 0, i.e. the hom lands in the circle group.
    pub fn is_zero_free(&self) -> bool {
        self.values.iter().all(|v| !v.is_zero())
    }

    pub fn pointwise_mul(&self, other: &Hom) -> Hom {
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(&a, &b)| a.mul(b))
            .collect();
        Hom {
            source: self.source.clone(),
            values,
        }
    }
}

/// The dual monoid S^⊙: the canonical hom list plus its Cayley structure.
/// `homs[i]` is element i of `base`; homs are sorted lexicographically by
/// value vector so all derived data is deterministic.
#[derive(Clone, Debug)]
pub struct DualMonoid {
    pub source: FiniteMonoid,
    pub base: FiniteMonoid,
    pub homs: Vec<Hom>,
}

impl DualMonoid {
    pub fn size(&self) -> usize {
        self.homs.len()
    }

    pub fn hom(&self, i: usize) -> &Hom {
        &self.homs[i]
    }

    /// Index of the hom with this exact value vector, if present.
    pub fn position(&self, values: &[DotCircle]) -> Option<usize> {
        self.homs
            .binary_search_by(|h| h.values.as_slice().cmp(values))
            .ok()
    }

    pub fn value_vectors(&self) -> Vec<Vec<DotCircle>> {
        self.homs.iter().map(|h| h.values.clone()).collect()
    }
}

/// Smallest i ≥ 1, p ≥ 1 with x^{i+p} = x^i: the tail and cycle of the
/// power sequence of x.
pub fn eventual_period(s: &FiniteMonoid, x: usize) -> (u64, u64) {
    let mut seen: HashMap<usize, u64> = HashMap::new();
    let mut acc = x;
    let mut k = 1u64;
    loop {
        if let Some(&i) = seen.get(&acc) {
            return (i, k - i);
        }
        seen.insert(acc, k);
        acc = s.mul(acc, x);
        k += 1;
    }
}

/// Assemble a dual monoid from a closed set of hom value vectors: sort them
/// canonically, validate each, and build the pointwise-product table. The
/// result is checked to be abelian and inverse, which every complete dual
/// (and every product-closed subset of one) must be.
pub fn dual_from_homs(source: FiniteMonoid, mut vectors: Vec<Vec<DotCircle>>) -> Result<DualMonoid> {
    vectors.sort();
    vectors.dedup();
    let homs: Vec<Hom> = vectors
        .iter()
        .map(|values| Hom {
            source: source.clone(),
            values: values.clone(),
        })
        .collect();
    for h in &homs {
        h.verify()?;
    }
    let index_of = |v: &[DotCircle]| -> Result<usize> {
        vectors
            .binary_search_by(|w| w.as_slice().cmp(v))
            .map_err(|_| Error::HomNotFound)
    };
    let mut table = Vec::with_capacity(homs.len());
    for a in &homs {
        let mut row = Vec::with_capacity(homs.len());
        for b in &homs {
            row.push(index_of(&a.pointwise_mul(b).values)?);
        }
        table.push(row);
    }
    let unit = index_of(&vec![DotCircle::ONE; source.size()])?;
    let labels = (0..homs.len()).map(|i| format!("h{i}")).collect();
    let base = FiniteMonoid::new(labels, unit, table)?;
    if !base.is_abelian() {
        return Err(Error::Inconsistency("dual monoid is not abelian".into()));
    }
    if !base.is_inverse_semigroup() {
        return Err(Error::Inconsistency("dual monoid is not inverse".into()));
    }
    Ok(DualMonoid { source, base, homs })
}

/// All homs S → Ṫ by backtracking over elements in index order. Candidate
/// values for x are Zero (unless x is invertible) plus the p-th roots of
/// unity for p the eventual period of x; partial assignments are pruned by
/// every fully assigned instance of the multiplication law.
pub fn enumerate_homs(s: &FiniteMonoid) -> Result<DualMonoid> {
    let n = s.size();
    let mut candidates: Vec<Vec<DotCircle>> = Vec::with_capacity(n);
    for x in 0..n {
        if x == s.unit() {
            candidates.push(vec![DotCircle::ONE]);
            continue;
        }
        let (_, p) = eventual_period(s, x);
        let mut c = Vec::new();
        if !s.is_invertible(x) {
            c.push(DotCircle::Zero);
        }
        c.extend(DotCircle::roots_of_unity(p));
        candidates.push(c);
    }

    // all products among assigned elements that involve position k and are
    // themselves assigned must satisfy the law
    let consistent_at = |values: &[Option<DotCircle>], k: usize| -> bool {
        for a in 0..n {
            let Some(va) = values[a] else { continue };
            for b in 0..n {
                let Some(vb) = values[b] else { continue };
                let p = s.mul(a, b);
                if a != k && b != k && p != k {
                    continue;
                }
                match values[p] {
                    Some(vp) => {
                        if vp != va.mul(vb) {
                            return false;
                        }
                    }
                    None => continue,
                }
            }
        }
        true
    };

    let mut values: Vec<Option<DotCircle>> = vec![None; n];
    values[s.unit()] = Some(DotCircle::ONE);
    let mut found: Vec<Vec<DotCircle>> = Vec::new();
    fn backtrack(
        s: &FiniteMonoid,
        candidates: &[Vec<DotCircle>],
        consistent_at: &dyn Fn(&[Option<DotCircle>], usize) -> bool,
        values: &mut Vec<Option<DotCircle>>,
        k: usize,
        found: &mut Vec<Vec<DotCircle>>,
    ) {
        if k == s.size() {
            let complete: Option<Vec<DotCircle>> = values.iter().copied().collect();
            found.push(complete.expect("all positions assigned"));
            return;
        }
        if k == s.unit() {
            backtrack(s, candidates, consistent_at, values, k + 1, found);
            return;
        }
        for &candidate in &candidates[k] {
            values[k] = Some(candidate);
            if consistent_at(values, k) {
                backtrack(s, candidates, consistent_at, values, k + 1, found);
            }
        }
        values[k] = None;
    }
    backtrack(s, &candidates, &consistent_at, &mut values, 0, &mut found);
    dual_from_homs(s.clone(), found)
}

/// The dual of an abelian inverse monoid assembled from character theory:
/// for every idempotent e and character h of the maximal subgroup H_e, the
/// extension (Λ_e h)(x) = h(xe) if xe ∈ H_e, else 0. Produces exactly |S|
/// homs and must agree with [`enumerate_homs`].
pub fn clifford_dual(s: &FiniteMonoid) -> Result<DualMonoid> {
    if let Some((x, y)) = s.abelian_witness() {
        return Err(Error::NotAbelian { x, y });
    }
    if let Some((x, count)) = s.inverse_witness() {
        return Err(Error::NotInverse { x, count });
    }
    let decomposition = s.clifford_decomposition()?;
    let mut vectors = Vec::with_capacity(s.size());
    for &e in &decomposition.idempotents {
        let h_e = s.submonoid(&decomposition.groups[&e], e)?;
        let characters = character_group(&h_e.monoid)?;
        for chi in &characters.characters {
            let values: Vec<DotCircle> = (0..s.size())
                .map(|x| match h_e.to_local(s.mul(x, e)) {
                    Some(local) => chi.values[local],
                    None => DotCircle::Zero,
                })
                .collect();
            vectors.push(values);
        }
    }
    if vectors.len() != s.size() {
        return Err(Error::Inconsistency(format!(
            "Λ extension produced {} homs for a {}-element monoid",
            vectors.len(),
            s.size()
        )));
    }
    let dual = dual_from_homs(s.clone(), vectors)?;
    if dual.size() != s.size() {
        return Err(Error::Inconsistency(
            "Λ extensions collided; dual smaller than the source".into(),
        ));
    }
    Ok(dual)
}

/// The two restricted duals carved out of S^⊙ by value shape: hom indices
/// landing in the circle group (the dual group S^∘) and hom indices with
/// values in {0, 1} (the dual idempotent monoid S^:). The latter always
/// coincides with the idempotents of the dual's base monoid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RestrictedDuals {
    pub group_part: Vec<usize>,
    pub idempotent_part: Vec<usize>,
}

pub fn restricted_duals(dual: &DualMonoid) -> Result<RestrictedDuals> {
    let group_part = (0..dual.size())
        .filter(|&i| dual.homs[i].is_zero_free())
        .collect();
    let idempotent_part: Vec<usize> = (0..dual.size())
        .filter(|&i| dual.homs[i].is_idempotent_valued())
        .collect();
    if idempotent_part != dual.base.idempotents() {
        return Err(Error::Inconsistency(
            "idempotent-valued homs differ from the dual's idempotents".into(),
        ));
    }
    Ok(RestrictedDuals {
        group_part,
        idempotent_part,
    })
}

/// The dual of a morphism f: S → M, acting contravariantly by composition:
/// each hom g of M is sent to g∘f in S^⊙.
pub fn dual_morphism(
    f: &MonoidMorphism,
    dual_of_target: &DualMonoid,
    dual_of_source: &DualMonoid,
) -> Result<MonoidMorphism> {
    if f.source != dual_of_source.source || f.target != dual_of_target.source {
        return Err(Error::Inconsistency(
            "dual_morphism: supplied duals do not match the morphism".into(),
        ));
    }
    let mut map = Vec::with_capacity(dual_of_target.size());
    for g in &dual_of_target.homs {
        let composed: Vec<DotCircle> = (0..f.source.size())
            .map(|x| g.values[f.apply(x)])
            .collect();
        map.push(dual_of_source.position(&composed).ok_or(Error::HomNotFound)?);
    }
    MonoidMorphism::new(
        dual_of_target.base.clone(),
        dual_of_source.base.clone(),
        map,
    )
}
