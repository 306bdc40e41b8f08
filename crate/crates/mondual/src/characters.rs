//! Characters of finite abelian groups: the Pontryagin sub-engine applied to
//! each maximal subgroup of a Clifford monoid.

use std::cmp::Reverse;

use crate::circle::DotCircle;
use crate::error::{Error, Result};
use crate::monoid::{FiniteMonoid, MonoidMorphism};

/// A homomorphism from a finite group into the circle group T, stored as
/// one root of unity per group element. Values are never Zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Character {
    pub group: FiniteMonoid,
    pub values: Vec<DotCircle>,
}

impl Character {
    pub fn eval(&self, x: usize) -> DotCircle {
        self.values[x]
    }

    /// Check the character laws: χ(1) = 1, χ(xy) = χ(x)χ(y), and each value
    /// an ord(x)-th root of unity (in particular non-zero).
    pub fn verify(&self) -> Result<()> {
        let g = &self.group;
        if self.values.len() != g.size() {
            return Err(Error::Inconsistency("character has wrong length".into()));
        }
        if !self.values[g.unit()].is_one() {
            return Err(Error::Inconsistency("character does not fix the unit".into()));
        }
        for x in 0..g.size() {
            let ord = element_order(g, x)?;
            if !self.values[x].pow(ord).is_one() {
                return Err(Error::Inconsistency(format!(
                    "character value at {} is not an order-{ord} root",
                    g.label(x)
                )));
            }
            for y in 0..g.size() {
                if self.values[g.mul(x, y)] != self.values[x].mul(self.values[y]) {
                    return Err(Error::Inconsistency(format!(
                        "character is not multiplicative at ({}, {})",
                        g.label(x),
                        g.label(y)
                    )));
                }
            }
        }
        Ok(())
    }
}

/// The complete character list of a finite abelian group, in canonical
/// order, together with the dual group they form under pointwise product.
/// `characters[i]` is element i of `dual`.
#[derive(Clone, Debug)]
pub struct CharacterGroup {
    pub characters: Vec<Character>,
    pub dual: FiniteMonoid,
}

fn require_group(g: &FiniteMonoid) -> Result<()> {
    if let Some(x) = g.group_witness() {
        return Err(Error::NotAGroup { x });
    }
    Ok(())
}

fn require_abelian_group(g: &FiniteMonoid) -> Result<()> {
    require_group(g)?;
    if let Some((x, y)) = g.abelian_witness() {
        return Err(Error::NotAbelian { x, y });
    }
    Ok(())
}

/// Least k ≥ 1 with x^k = 1.
pub fn element_order(g: &FiniteMonoid, x: usize) -> Result<u64> {
    require_group(g)?;
    let mut acc = x;
    let mut k = 1;
    while acc != g.unit() {
        acc = g.mul(acc, x);
        k += 1;
    }
    Ok(k)
}

/// lcm of all element orders.
pub fn exponent(g: &FiniteMonoid) -> Result<u64> {
    let mut exp = 1u64;
    for x in 0..g.size() {
        exp = num_integer::lcm(exp, element_order(g, x)?);
    }
    Ok(exp)
}

/// A generating sequence picked greedily: repeatedly the smallest-index
/// element of maximal order outside the span so far. Deterministic, and
/// short (each step at least doubles the span).
pub fn generating_sequence(g: &FiniteMonoid) -> Result<Vec<usize>> {
    require_group(g)?;
    let orders: Vec<u64> = (0..g.size())
        .map(|x| element_order(g, x))
        .collect::<Result<_>>()?;
    let mut in_span = vec![false; g.size()];
    in_span[g.unit()] = true;
    let mut gens = Vec::new();
    while in_span.iter().any(|&b| !b) {
        let pick = (0..g.size())
            .filter(|&x| !in_span[x])
            .min_by_key(|&x| (Reverse(orders[x]), x))
            .expect("span incomplete");
        gens.push(pick);
        loop {
            let mut grew = false;
            let members: Vec<usize> =
                (0..g.size()).filter(|&x| in_span[x]).collect();
            for &a in &members {
                for &b in members.iter().chain(std::iter::once(&pick)) {
                    for p in [g.mul(a, b), g.mul(b, a), g.mul(pick, a)] {
                        if !in_span[p] {
                            in_span[p] = true;
                            grew = true;
                        }
                    }
                }
            }
            if !in_span[pick] {
                in_span[pick] = true;
                grew = true;
            }
            if !grew {
                break;
            }
        }
    }
    Ok(gens)
}

/// Propagate a partial assignment through the multiplication table until
/// stable. Returns false on conflict.
fn close(g: &FiniteMonoid, values: &mut [Option<DotCircle>], seed: usize) -> bool {
    let mut work = vec![seed];
    while let Some(x) = work.pop() {
        let vx = values[x].expect("worklist entries are assigned");
        for y in 0..g.size() {
            let Some(vy) = values[y] else { continue };
            for (p, vp) in [(g.mul(x, y), vx.mul(vy)), (g.mul(y, x), vy.mul(vx))] {
                match values[p] {
                    None => {
                        values[p] = Some(vp);
                        work.push(p);
                    }
                    Some(old) if old != vp => return false,
                    Some(_) => {}
                }
            }
        }
    }
    true
}

fn assign_generators(
    g: &FiniteMonoid,
    gens: &[usize],
    orders: &[u64],
    values: Vec<Option<DotCircle>>,
    out: &mut Vec<Vec<DotCircle>>,
) {
    let Some((&x, rest)) = gens.split_first() else {
        let complete: Option<Vec<DotCircle>> = values.into_iter().collect();
        out.push(complete.expect("generators span the group"));
        return;
    };
    if values[x].is_some() {
        assign_generators(g, rest, orders, values, out);
        return;
    }
    for candidate in DotCircle::roots_of_unity(orders[x]) {
        let mut next = values.clone();
        next[x] = Some(candidate);
        if close(g, &mut next, x) {
            assign_generators(g, rest, orders, next, out);
        }
    }
}

/// All homomorphisms G → T of a finite abelian group, by backtracking over
/// a generating sequence: each generator takes some ord(g)-th root of unity
/// and the rest of the group follows by closure. |characters| = |G|.
pub fn character_group(g: &FiniteMonoid) -> Result<CharacterGroup> {
    require_abelian_group(g)?;
    let gens = generating_sequence(g)?;
    let orders: Vec<u64> = (0..g.size())
        .map(|x| element_order(g, x))
        .collect::<Result<_>>()?;
    let mut seed = vec![None; g.size()];
    seed[g.unit()] = Some(DotCircle::ONE);
    let mut vectors = Vec::new();
    assign_generators(g, &gens, &orders, seed, &mut vectors);
    vectors.sort();
    vectors.dedup();

    let characters: Vec<Character> = vectors
        .into_iter()
        .map(|values| Character {
            group: g.clone(),
            values,
        })
        .collect();
    for c in &characters {
        c.verify()?;
    }
    let dual = dual_table(g, &characters)?;
    Ok(CharacterGroup { characters, dual })
}

/// Build the dual group's table from pointwise products of the (sorted)
/// character list.
fn dual_table(g: &FiniteMonoid, characters: &[Character]) -> Result<FiniteMonoid> {
    let index_of = |values: &[DotCircle]| -> Result<usize> {
        characters
            .iter()
            .position(|c| c.values == values)
            .ok_or(Error::HomNotFound)
    };
    let mut table = Vec::with_capacity(characters.len());
    for a in characters {
        let mut row = Vec::with_capacity(characters.len());
        for b in characters {
            let product: Vec<DotCircle> = (0..g.size())
                .map(|x| a.values[x].mul(b.values[x]))
                .collect();
            row.push(index_of(&product)?);
        }
        table.push(row);
    }
    let unit_vector = vec![DotCircle::ONE; g.size()];
    let unit = index_of(&unit_vector)?;
    let labels = (0..characters.len()).map(|i| format!("chi{i}")).collect();
    FiniteMonoid::new(labels, unit, table)
}

/// The evaluation map G → G^∘∘, x ↦ (χ ↦ χ(x)), with its isomorphism
/// verdict. For every finite abelian group the verdict is true.
pub fn delta_group_iso(g: &FiniteMonoid) -> Result<(MonoidMorphism, bool)> {
    require_abelian_group(g)?;
    let first = character_group(g)?;
    let second = character_group(&first.dual)?;
    let mut map = Vec::with_capacity(g.size());
    for x in 0..g.size() {
        let evaluation: Vec<DotCircle> =
            first.characters.iter().map(|c| c.values[x]).collect();
        let idx = second
            .characters
            .iter()
            .position(|c| c.values == evaluation)
            .ok_or(Error::EvaluationNotAHom)?;
        map.push(idx);
    }
    let morphism = MonoidMorphism::new(g.clone(), second.dual.clone(), map)
        .map_err(|_| Error::EvaluationNotAHom)?;
    let iso = morphism.is_bijective();
    Ok((morphism, iso))
}
