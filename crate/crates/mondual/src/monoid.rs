//! Finite monoids as Cayley tables, and their structural invariants:
//! idempotents, inverses, maximal subgroups, and the Clifford decomposition.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use crate::error::{Error, Result};

/// A finite monoid given by labelled elements and an n×n Cayley table.
///
/// `table[i][j]` is the index of `elements[i]·elements[j]`. Construction via
/// [`FiniteMonoid::new`] checks label uniqueness, table shape and range, the
/// unit laws, and associativity, so every value of this type is a monoid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteMonoid {
    elements: Vec<String>,
    unit: usize,
    table: Vec<Vec<usize>>,
}

impl FiniteMonoid {
    /// Validate a raw table and wrap it. Returns the first violated axiom
    /// with a witness: associativity is checked by the plain triple loop,
    /// which is plenty at desk scale.
    pub fn new(elements: Vec<String>, unit: usize, table: Vec<Vec<usize>>) -> Result<Self> {
        let n = elements.len();
        let mut seen = HashSet::new();
        for label in &elements {
            if !seen.insert(label.as_str()) {
                return Err(Error::DuplicateLabel {
                    label: label.clone(),
                });
            }
        }
        if unit >= n {
            return Err(Error::UnitOutOfRange { unit, size: n });
        }
        if table.len() != n || table.iter().any(|row| row.len() != n) {
            return Err(Error::BadTableShape { size: n });
        }
        for (row, r) in table.iter().enumerate() {
            for (col, &value) in r.iter().enumerate() {
                if value >= n {
                    return Err(Error::IndexOutOfRange {
                        row,
                        col,
                        value,
                        size: n,
                    });
                }
            }
        }
        for i in 0..n {
            if table[unit][i] != i || table[i][unit] != i {
                return Err(Error::UnitLawViolated { i });
            }
        }
        for i in 0..n {
            for j in 0..n {
                let ij = table[i][j];
                for k in 0..n {
                    if table[ij][k] != table[i][table[j][k]] {
                        return Err(Error::NotAssociative { i, j, k });
                    }
                }
            }
        }
        Ok(FiniteMonoid {
            elements,
            unit,
            table,
        })
    }

    pub fn size(&self) -> usize {
        self.elements.len()
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.table[i][j]
    }

    pub fn label(&self, i: usize) -> &str {
        &self.elements[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.elements
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.elements.iter().position(|l| l == label)
    }

    /// x^k with x^0 = unit.
    pub fn pow(&self, x: usize, k: u64) -> usize {
        let mut acc = self.unit;
        for _ in 0..k {
            acc = self.mul(acc, x);
        }
        acc
    }

    pub fn is_abelian(&self) -> bool {
        self.abelian_witness().is_none()
    }

    /// First non-commuting pair in scan order, if any.
    pub fn abelian_witness(&self) -> Option<(usize, usize)> {
        let n = self.size();
        for i in 0..n {
            for j in i + 1..n {
                if self.table[i][j] != self.table[j][i] {
                    return Some((i, j));
                }
            }
        }
        None
    }

    /// Sorted indices of all idempotents; always contains the unit.
    pub fn idempotents(&self) -> Vec<usize> {
        (0..self.size()).filter(|&i| self.mul(i, i) == i).collect()
    }

    pub fn is_idempotent(&self, x: usize) -> bool {
        self.mul(x, x) == x
    }

    /// All semigroup inverses of `x`: the y with xyx = x and yxy = y.
    pub fn inverses_of(&self, x: usize) -> Vec<usize> {
        (0..self.size())
            .filter(|&y| {
                self.mul(self.mul(x, y), x) == x && self.mul(self.mul(y, x), y) == y
            })
            .collect()
    }

    /// The unique inverse of `x` if exactly one exists.
    pub fn try_inverse(&self, x: usize) -> Option<usize> {
        match self.inverses_of(x).as_slice() {
            [y] => Some(*y),
            _ => None,
        }
    }

    pub fn is_inverse_semigroup(&self) -> bool {
        self.inverse_witness().is_none()
    }

    /// First element without a unique inverse, with its inverse count.
    pub fn inverse_witness(&self) -> Option<(usize, usize)> {
        (0..self.size()).find_map(|x| {
            let count = self.inverses_of(x).len();
            (count != 1).then_some((x, count))
        })
    }

    /// Whether `x` has a two-sided group inverse against the unit.
    pub fn is_invertible(&self, x: usize) -> bool {
        (0..self.size()).any(|y| self.mul(x, y) == self.unit && self.mul(y, x) == self.unit)
    }

    /// Whether every element is invertible, i.e. the monoid is a group.
    pub fn is_group(&self) -> bool {
        self.group_witness().is_none()
    }

    pub fn group_witness(&self) -> Option<usize> {
        (0..self.size()).find(|&x| !self.is_invertible(x))
    }

    /// Whether the monoid is an abelian idempotent monoid.
    pub fn is_semilattice(&self) -> bool {
        self.is_abelian() && (0..self.size()).all(|x| self.is_idempotent(x))
    }

    /// Clifford criterion on an inverse monoid: xx⁻¹ = x⁻¹x for all x.
    pub fn is_clifford(&self) -> Result<bool> {
        if let Some((x, count)) = self.inverse_witness() {
            return Err(Error::NotInverse { x, count });
        }
        Ok(self.clifford_witness().is_none())
    }

    fn clifford_witness(&self) -> Option<usize> {
        (0..self.size()).find(|&x| {
            let y = self.try_inverse(x).expect("inverse monoid");
            self.mul(x, y) != self.mul(y, x)
        })
    }

    /// Decompose a Clifford monoid into its idempotent semilattice, the
    /// partial order on it, the maximal subgroups, and the retraction π.
    pub fn clifford_decomposition(&self) -> Result<CliffordDecomposition> {
        if let Some((x, count)) = self.inverse_witness() {
            return Err(Error::NotInverse { x, count });
        }
        if let Some(x) = self.clifford_witness() {
            return Err(Error::NotClifford { x });
        }
        let idempotents = self.idempotents();
        let mut order = BTreeSet::new();
        for &e in &idempotents {
            for &f in &idempotents {
                if self.mul(e, f) == e {
                    order.insert((e, f));
                }
            }
        }
        let mut pi = Vec::with_capacity(self.size());
        let mut groups: BTreeMap<usize, Vec<usize>> =
            idempotents.iter().map(|&e| (e, Vec::new())).collect();
        for x in 0..self.size() {
            let y = self.try_inverse(x).expect("inverse monoid");
            let e = self.mul(x, y);
            pi.push(e);
            groups.get_mut(&e).expect("xx⁻¹ is idempotent").push(x);
        }
        let decomposition = CliffordDecomposition {
            idempotents,
            order,
            groups,
            pi,
        };
        decomposition.verify(self)?;
        Ok(decomposition)
    }

    /// The submonoid on a set of element indices, with `unit` as its unit.
    /// The indices must be closed under the table product.
    pub fn submonoid(&self, indices: &[usize], unit: usize) -> Result<Submonoid> {
        let local: BTreeMap<usize, usize> = indices
            .iter()
            .enumerate()
            .map(|(loc, &glob)| (glob, loc))
            .collect();
        if local.len() != indices.len() {
            return Err(Error::Inconsistency("duplicate submonoid indices".into()));
        }
        let mut table = Vec::with_capacity(indices.len());
        for &i in indices {
            let mut row = Vec::with_capacity(indices.len());
            for &j in indices {
                let p = self.mul(i, j);
                let loc = local.get(&p).ok_or_else(|| {
                    Error::Inconsistency(format!(
                        "submonoid not closed: {}·{} = {} escapes",
                        self.label(i),
                        self.label(j),
                        self.label(p)
                    ))
                })?;
                row.push(*loc);
            }
            table.push(row);
        }
        let labels = indices.iter().map(|&i| self.elements[i].clone()).collect();
        let unit_local = *local
            .get(&unit)
            .ok_or_else(|| Error::Inconsistency("submonoid unit not among indices".into()))?;
        Ok(Submonoid {
            monoid: FiniteMonoid::new(labels, unit_local, table)?,
            global_indices: indices.to_vec(),
        })
    }

    /// The idempotent submonoid E(S). Closed whenever idempotents commute,
    /// in particular for every inverse monoid.
    pub fn idempotent_submonoid(&self) -> Result<Submonoid> {
        self.submonoid(&self.idempotents(), self.unit)
    }
}

/// A submonoid together with the embedding of its elements into the parent.
#[derive(Clone, Debug)]
pub struct Submonoid {
    pub monoid: FiniteMonoid,
    /// `global_indices[local] = parent index`.
    pub global_indices: Vec<usize>,
}

impl Submonoid {
    pub fn to_global(&self, local: usize) -> usize {
        self.global_indices[local]
    }

    pub fn to_local(&self, global: usize) -> Option<usize> {
        self.global_indices.iter().position(|&g| g == global)
    }

    /// The inclusion morphism into the parent monoid.
    pub fn inclusion(&self, parent: &FiniteMonoid) -> Result<MonoidMorphism> {
        MonoidMorphism::new(
            self.monoid.clone(),
            parent.clone(),
            self.global_indices.clone(),
        )
    }
}

/// The structure of a Clifford monoid: idempotents E, the order e ≤ f iff
/// ef = e, the partition into maximal subgroups H_e, and the retraction
/// π(x) = xx⁻¹. All indices are element indices of the decomposed monoid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliffordDecomposition {
    pub idempotents: Vec<usize>,
    /// Pairs (e, f) with e ≤ f.
    pub order: BTreeSet<(usize, usize)>,
    /// For each idempotent e, the maximal subgroup H_e = {x : xx⁻¹ = e}.
    pub groups: BTreeMap<usize, Vec<usize>>,
    pub pi: Vec<usize>,
}

impl CliffordDecomposition {
    pub fn le(&self, e: usize, f: usize) -> bool {
        self.order.contains(&(e, f))
    }

    /// Covering pairs of the order, for Hasse-diagram style reports.
    pub fn hasse_covers(&self) -> Vec<(usize, usize)> {
        let mut covers = Vec::new();
        for &(e, f) in &self.order {
            if e == f {
                continue;
            }
            let between = self.idempotents.iter().any(|&g| {
                g != e && g != f && self.le(e, g) && self.le(g, f)
            });
            if !between {
                covers.push((e, f));
            }
        }
        covers
    }

    /// Internal sanity checks: the groups partition S, each H_e really is a
    /// group with identity e, and π is the retraction onto E.
    fn verify(&self, monoid: &FiniteMonoid) -> Result<()> {
        let total: usize = self.groups.values().map(|g| g.len()).sum();
        if total != monoid.size() {
            return Err(Error::Inconsistency(
                "maximal subgroups do not partition the monoid".into(),
            ));
        }
        for (&e, members) in &self.groups {
            for &x in members {
                if self.pi[x] != e {
                    return Err(Error::Inconsistency("π disagrees with H_e".into()));
                }
                let has_unit_e = members
                    .iter()
                    .any(|&y| monoid.mul(x, y) == e && monoid.mul(y, x) == e);
                if !has_unit_e || monoid.mul(e, x) != x {
                    return Err(Error::Inconsistency(format!(
                        "H_{} is not a group",
                        monoid.label(e)
                    )));
                }
            }
            for &x in members {
                for &y in members {
                    if !members.contains(&monoid.mul(x, y)) {
                        return Err(Error::Inconsistency(format!(
                            "H_{} is not closed",
                            monoid.label(e)
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// π as a morphism S → E(S).
    pub fn retraction(&self, monoid: &FiniteMonoid) -> Result<(Submonoid, MonoidMorphism)> {
        let e_sub = monoid.idempotent_submonoid()?;
        let map = self
            .pi
            .iter()
            .map(|&e| {
                e_sub
                    .to_local(e)
                    .ok_or_else(|| Error::Inconsistency("π image outside E".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        let morphism = MonoidMorphism::new(monoid.clone(), e_sub.monoid.clone(), map)?;
        Ok((e_sub, morphism))
    }
}

/// A monoid homomorphism between two finite monoids, stored as the vector
/// of target indices. Construction checks the unit and multiplication laws.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonoidMorphism {
    pub source: FiniteMonoid,
    pub target: FiniteMonoid,
    pub map: Vec<usize>,
}

impl MonoidMorphism {
    pub fn new(source: FiniteMonoid, target: FiniteMonoid, map: Vec<usize>) -> Result<Self> {
        if map.len() != source.size() {
            return Err(Error::Inconsistency("morphism map has wrong length".into()));
        }
        if let Some(&v) = map.iter().find(|&&v| v >= target.size()) {
            return Err(Error::IndexOutOfRange {
                row: 0,
                col: 0,
                value: v,
                size: target.size(),
            });
        }
        if map[source.unit()] != target.unit() {
            return Err(Error::Inconsistency("morphism does not preserve unit".into()));
        }
        for i in 0..source.size() {
            for j in 0..source.size() {
                if map[source.mul(i, j)] != target.mul(map[i], map[j]) {
                    return Err(Error::Inconsistency(format!(
                        "not a homomorphism at ({}, {})",
                        source.label(i),
                        source.label(j)
                    )));
                }
            }
        }
        Ok(MonoidMorphism {
            source,
            target,
            map,
        })
    }

    pub fn identity(monoid: &FiniteMonoid) -> Self {
        MonoidMorphism {
            source: monoid.clone(),
            target: monoid.clone(),
            map: (0..monoid.size()).collect(),
        }
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn is_injective(&self) -> bool {
        self.injectivity_witness().is_none()
    }

    /// First pair of distinct elements with the same image.
    pub fn injectivity_witness(&self) -> Option<(usize, usize)> {
        for i in 0..self.map.len() {
            for j in i + 1..self.map.len() {
                if self.map[i] == self.map[j] {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn is_surjective(&self) -> bool {
        self.surjectivity_witness().is_none()
    }

    /// First target element missed by the image.
    pub fn surjectivity_witness(&self) -> Option<usize> {
        (0..self.target.size()).find(|t| !self.map.contains(t))
    }

    pub fn is_bijective(&self) -> bool {
        self.is_injective() && self.is_surjective()
    }

    /// `other ∘ self`, defined when targets and sources agree.
    pub fn then(&self, other: &MonoidMorphism) -> Result<MonoidMorphism> {
        if self.target != other.source {
            return Err(Error::Inconsistency(
                "morphism composition: target and source differ".into(),
            ));
        }
        let map = self.map.iter().map(|&x| other.map[x]).collect();
        MonoidMorphism::new(self.source.clone(), other.target.clone(), map)
    }

    pub fn is_identity(&self) -> bool {
        self.source == self.target && self.map.iter().enumerate().all(|(i, &v)| i == v)
    }
}
