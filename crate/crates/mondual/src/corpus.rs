//! Deterministic generators of test monoids: abelian inverse instances,
//! non-abelian and non-inverse negative instances, and combinators.

use std::collections::BTreeMap;

use crate::circle::DotCircle;
use crate::error::{Error, Result};
use crate::monoid::FiniteMonoid;

/// Generators refuse to build monoids past this size; the engine is meant
/// for desk-scale instances and an n×n table of usize grows quadratically.
pub const MAX_GENERATED_SIZE: usize = 4096;

fn check_size(size: usize) -> Result<()> {
    if size > MAX_GENERATED_SIZE {
        return Err(Error::InvalidParameter(format!(
            "requested size {size} exceeds generator limit {MAX_GENERATED_SIZE}"
        )));
    }
    Ok(())
}

/// The additive group Z_n with labels "0".."n−1" and unit "0".
pub fn cyclic_group(n: usize) -> Result<FiniteMonoid> {
    if n == 0 {
        return Err(Error::InvalidParameter("cyclic_group needs n ≥ 1".into()));
    }
    check_size(n)?;
    let labels = (0..n).map(|i| i.to_string()).collect();
    let table = (0..n)
        .map(|i| (0..n).map(|j| (i + j) % n).collect())
        .collect();
    FiniteMonoid::new(labels, 0, table)
}

/// The chain c_0 < … < c_{n−1} under min-index meet; unit is the top c_{n−1}.
pub fn chain_semilattice(n: usize) -> Result<FiniteMonoid> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "chain_semilattice needs n ≥ 1".into(),
        ));
    }
    check_size(n)?;
    let labels = (0..n).map(|i| format!("c{i}")).collect();
    let table = (0..n)
        .map(|i| (0..n).map(|j| i.min(j)).collect())
        .collect();
    FiniteMonoid::new(labels, n - 1, table)
}

/// Subsets of a k-set under intersection, labelled by their decimal bitmask;
/// unit is the full set.
pub fn boolean_semilattice(k: u32) -> Result<FiniteMonoid> {
    let size = 1usize
        .checked_shl(k)
        .filter(|&s| s <= MAX_GENERATED_SIZE)
        .ok_or_else(|| {
            Error::InvalidParameter(format!(
                "boolean_semilattice(2^{k}) exceeds generator limit {MAX_GENERATED_SIZE}"
            ))
        })?;
    let labels = (0..size).map(|m| m.to_string()).collect();
    let table = (0..size)
        .map(|i| (0..size).map(|j| i & j).collect())
        .collect();
    FiniteMonoid::new(labels, size - 1, table)
}

/// The n-th roots of unity together with an absorbing zero, labelled by the
/// circle rendering ("0", "0/1", "1/n", …); unit is "0/1" at index 1.
pub fn dot_mu(n: u64) -> Result<FiniteMonoid> {
    if n == 0 {
        return Err(Error::InvalidParameter("dot_mu needs n ≥ 1".into()));
    }
    check_size(n as usize + 1)?;
    let mut points = vec![DotCircle::Zero];
    points.extend(DotCircle::roots_of_unity(n));
    let labels = points.iter().map(|p| p.to_string()).collect();
    let index_of = |p: DotCircle| points.iter().position(|&q| q == p).expect("closed");
    let table = points
        .iter()
        .map(|&a| points.iter().map(|&b| index_of(a.mul(b))).collect())
        .collect();
    FiniteMonoid::new(labels, 1, table)
}

/// Componentwise product with labels "(a,b)"; element (i,j) sits at index
/// i·|T| + j.
pub fn direct_product(s: &FiniteMonoid, t: &FiniteMonoid) -> Result<FiniteMonoid> {
    let size = s.size() * t.size();
    check_size(size)?;
    let mut labels = Vec::with_capacity(size);
    for i in 0..s.size() {
        for j in 0..t.size() {
            labels.push(format!("({},{})", s.label(i), t.label(j)));
        }
    }
    let idx = |i: usize, j: usize| i * t.size() + j;
    let mut table = vec![vec![0usize; size]; size];
    for i1 in 0..s.size() {
        for j1 in 0..t.size() {
            for i2 in 0..s.size() {
                for j2 in 0..t.size() {
                    table[idx(i1, j1)][idx(i2, j2)] = idx(s.mul(i1, i2), t.mul(j1, j2));
                }
            }
        }
    }
    FiniteMonoid::new(labels, idx(s.unit(), t.unit()), table)
}

/// A strong semilattice of abelian groups: one group H_e per element e of the
/// semilattice `e_lattice`, glued by linking homomorphisms.
///
/// `links[(e, f)]`, required for every strict order pair f ≤ e (that is,
/// ef = f with e ≠ f), maps H_e into H_f as a vector of H_f indices. Links
/// must commute along chains: φ_{f,g} ∘ φ_{e,f} = φ_{e,g}. The product of
/// x ∈ H_e and y ∈ H_f pushes both into H_{ef} and multiplies there, which
/// yields an abelian inverse monoid whose Clifford decomposition recovers
/// the inputs. Elements are labelled "{e}_{x}".
pub fn strong_semilattice(
    e_lattice: &FiniteMonoid,
    groups: &BTreeMap<usize, FiniteMonoid>,
    links: &BTreeMap<(usize, usize), Vec<usize>>,
) -> Result<FiniteMonoid> {
    if let Some((x, _)) = e_lattice.abelian_witness() {
        return Err(Error::NotASemilattice { x });
    }
    if let Some(x) = (0..e_lattice.size()).find(|&x| !e_lattice.is_idempotent(x)) {
        return Err(Error::NotASemilattice { x });
    }
    for e in 0..e_lattice.size() {
        match groups.get(&e) {
            None => {
                return Err(Error::InvalidParameter(format!(
                    "no group supplied for idempotent {}",
                    e_lattice.label(e)
                )))
            }
            Some(h) => {
                if !h.is_group() || !h.is_abelian() {
                    return Err(Error::NotAbelianComponent { e });
                }
            }
        }
    }
    if let Some(&e) = groups.keys().find(|&&e| e >= e_lattice.size()) {
        return Err(Error::InvalidParameter(format!(
            "group supplied for nonexistent idempotent index {e}"
        )));
    }

    // below[e][f] ⟺ f ≤ e, i.e. the link φ_{e,f} makes sense
    let below =
        |e: usize, f: usize| e_lattice.mul(e, f) == f;
    let link = |e: usize, f: usize| -> Result<Vec<usize>> {
        if e == f {
            return Ok((0..groups[&e].size()).collect());
        }
        links
            .get(&(e, f))
            .cloned()
            .ok_or_else(|| {
                Error::LinkIncompatible(format!(
                    "missing link from H_{} to H_{}",
                    e_lattice.label(e),
                    e_lattice.label(f)
                ))
            })
    };

    for (&(e, f), map) in links {
        if e >= e_lattice.size() || f >= e_lattice.size() || !below(e, f) || e == f {
            return Err(Error::LinkIncompatible(format!(
                "link key ({e}, {f}) is not a strict order pair f < e"
            )));
        }
        let (he, hf) = (&groups[&e], &groups[&f]);
        if map.len() != he.size() || map.iter().any(|&v| v >= hf.size()) {
            return Err(Error::LinkIncompatible(format!(
                "link H_{} → H_{} has wrong shape",
                e_lattice.label(e),
                e_lattice.label(f)
            )));
        }
        if map[he.unit()] != hf.unit() {
            return Err(Error::LinkIncompatible(format!(
                "link H_{} → H_{} does not preserve the unit",
                e_lattice.label(e),
                e_lattice.label(f)
            )));
        }
        for x in 0..he.size() {
            for y in 0..he.size() {
                if map[he.mul(x, y)] != hf.mul(map[x], map[y]) {
                    return Err(Error::LinkIncompatible(format!(
                        "link H_{} → H_{} is not a homomorphism",
                        e_lattice.label(e),
                        e_lattice.label(f)
                    )));
                }
            }
        }
    }
    for e in 0..e_lattice.size() {
        for f in 0..e_lattice.size() {
            if !below(e, f) {
                continue;
            }
            let ef = link(e, f)?;
            for g in 0..e_lattice.size() {
                if !below(f, g) {
                    continue;
                }
                let fg = link(f, g)?;
                let eg = link(e, g)?;
                let composed: Vec<usize> = ef.iter().map(|&x| fg[x]).collect();
                if composed != eg {
                    return Err(Error::LinkIncompatible(format!(
                        "links do not commute along {} ≥ {} ≥ {}",
                        e_lattice.label(e),
                        e_lattice.label(f),
                        e_lattice.label(g)
                    )));
                }
            }
        }
    }

    let mut offset = Vec::with_capacity(e_lattice.size());
    let mut labels = Vec::new();
    let mut component = Vec::new(); // global index → (e, local index)
    for e in 0..e_lattice.size() {
        offset.push(labels.len());
        let h = &groups[&e];
        for x in 0..h.size() {
            labels.push(format!("{}_{}", e_lattice.label(e), h.label(x)));
            component.push((e, x));
        }
    }
    check_size(labels.len())?;

    let size = labels.len();
    let mut table = vec![vec![0usize; size]; size];
    for (gx, &(e, x)) in component.iter().enumerate() {
        for (gy, &(f, y)) in component.iter().enumerate() {
            let m = e_lattice.mul(e, f);
            let px = link(e, m)?[x];
            let py = link(f, m)?[y];
            table[gx][gy] = offset[m] + groups[&m].mul(px, py);
        }
    }
    let top = e_lattice.unit();
    let unit = offset[top] + groups[&top].unit();
    let monoid = FiniteMonoid::new(labels, unit, table)?;
    if !monoid.is_abelian() || !monoid.is_inverse_semigroup() {
        return Err(Error::Inconsistency(
            "strong semilattice construction produced a non-abelian-inverse monoid".into(),
        ));
    }
    Ok(monoid)
}

/// Three fixed strong-semilattice instances used across the test corpus and
/// addressable from the command line:
/// 1. a 2-chain with C_2 over both idempotents and the identity link,
/// 2. a 2-chain with C_2 on top collapsing to a trivial bottom group,
/// 3. a 3-chain with C_4 → C_2 → trivial along the doubling collapses.
pub fn strong_semilattice_examples() -> Vec<(String, FiniteMonoid)> {
    let two_chain = chain_semilattice(2).expect("chain(2)");
    let three_chain = chain_semilattice(3).expect("chain(3)");
    let trivial = cyclic_group(1).expect("C_1");
    let c2 = cyclic_group(2).expect("C_2");
    let c4 = cyclic_group(4).expect("C_4");

    let both_c2 = strong_semilattice(
        &two_chain,
        &BTreeMap::from([(0, c2.clone()), (1, c2.clone())]),
        &BTreeMap::from([((1, 0), vec![0, 1])]),
    )
    .expect("identity-linked 2-chain of C_2");

    let collapse = strong_semilattice(
        &two_chain,
        &BTreeMap::from([(0, trivial.clone()), (1, c2.clone())]),
        &BTreeMap::from([((1, 0), vec![0, 0])]),
    )
    .expect("collapsing 2-chain");

    let tower = strong_semilattice(
        &three_chain,
        &BTreeMap::from([(0, trivial), (1, c2), (2, c4)]),
        &BTreeMap::from([
            ((2, 1), vec![0, 1, 0, 1]),
            ((2, 0), vec![0, 0, 0, 0]),
            ((1, 0), vec![0, 0]),
        ]),
    )
    .expect("C_4 tower");

    vec![
        ("strong_semilattice(1)".into(), both_c2),
        ("strong_semilattice(2)".into(), collapse),
        ("strong_semilattice(3)".into(), tower),
    ]
}

/// All partial bijections of an n-point set under left-to-right composition,
/// (f·g)(i) = g(f(i)). Labels write the image of each point in order, with
/// "-" for undefined; the unit is the identity map. Supported for n ≤ 3
/// (sizes 2, 7, 34).
pub fn symmetric_inverse_monoid(n: usize) -> Result<FiniteMonoid> {
    if !(1..=3).contains(&n) {
        return Err(Error::InvalidParameter(
            "symmetric_inverse_monoid supports n ∈ {1, 2, 3}".into(),
        ));
    }
    let mut maps: Vec<Vec<Option<usize>>> = Vec::new();
    let mut current: Vec<Option<usize>> = Vec::new();
    fn extend(n: usize, current: &mut Vec<Option<usize>>, out: &mut Vec<Vec<Option<usize>>>) {
        if current.len() == n {
            out.push(current.clone());
            return;
        }
        for value in std::iter::once(None).chain((0..n).map(Some)) {
            if value.is_some() && current.contains(&value) {
                continue;
            }
            current.push(value);
            extend(n, current, out);
            current.pop();
        }
    }
    extend(n, &mut current, &mut maps);

    let label = |m: &Vec<Option<usize>>| -> String {
        m.iter()
            .map(|v| match v {
                None => "-".to_string(),
                Some(p) => (p + 1).to_string(),
            })
            .collect()
    };
    let labels = maps.iter().map(label).collect();
    let compose = |f: &Vec<Option<usize>>, g: &Vec<Option<usize>>| -> Vec<Option<usize>> {
        f.iter().map(|&v| v.and_then(|p| g[p])).collect()
    };
    let index_of = |m: &Vec<Option<usize>>| maps.iter().position(|q| q == m).expect("closed");
    let table = maps
        .iter()
        .map(|f| maps.iter().map(|g| index_of(&compose(f, g))).collect())
        .collect();
    let identity: Vec<Option<usize>> = (0..n).map(Some).collect();
    FiniteMonoid::new(labels, index_of(&identity), table)
}

/// {0..n} under capped addition x·y = min(x+y, n); commutative but not
/// inverse once n ≥ 2.
pub fn truncated_add(n: usize) -> Result<FiniteMonoid> {
    if n == 0 {
        return Err(Error::InvalidParameter("truncated_add needs n ≥ 1".into()));
    }
    check_size(n + 1)?;
    let labels = (0..=n).map(|i| i.to_string()).collect();
    let table = (0..=n)
        .map(|i| (0..=n).map(|j| (i + j).min(n)).collect())
        .collect();
    FiniteMonoid::new(labels, 0, table)
}

/// S with a fresh absorbing element appended. The zero's label is "0" when
/// free, otherwise the first free name among "z", "z0", "z1", ….
pub fn adjoin_zero(s: &FiniteMonoid) -> Result<FiniteMonoid> {
    let size = s.size() + 1;
    check_size(size)?;
    let zero = size - 1;
    let mut labels: Vec<String> = s.labels().to_vec();
    let fresh = std::iter::once("0".to_string())
        .chain(std::iter::once("z".to_string()))
        .chain((0..).map(|i| format!("z{i}")))
        .find(|c| !labels.iter().any(|l| l == c))
        .expect("unbounded candidate stream");
    labels.push(fresh);
    let mut table = vec![vec![zero; size]; size];
    for i in 0..s.size() {
        for j in 0..s.size() {
            table[i][j] = s.mul(i, j);
        }
    }
    FiniteMonoid::new(labels, s.unit(), table)
}

/// The standard corpus: the named instances every cross-cutting check runs
/// over. Abelian inverse families, their pairwise products up to size 12,
/// the three strong-semilattice instances, and the two negative families
/// (non-abelian I_2, non-inverse truncated addition).
pub fn standard_corpus() -> Vec<(String, FiniteMonoid)> {
    let mut corpus: Vec<(String, FiniteMonoid)> = Vec::new();
    for n in 1..=8 {
        corpus.push((format!("cyclic_group({n})"), cyclic_group(n).expect("n ≥ 1")));
    }
    for n in 1..=5 {
        corpus.push((
            format!("chain_semilattice({n})"),
            chain_semilattice(n).expect("n ≥ 1"),
        ));
    }
    for k in 0..=3 {
        corpus.push((
            format!("boolean_semilattice({k})"),
            boolean_semilattice(k).expect("k small"),
        ));
    }
    for n in 1..=6 {
        corpus.push((format!("dot_mu({n})"), dot_mu(n).expect("n ≥ 1")));
    }
    let bases = corpus.clone();
    for (i, (name_a, a)) in bases.iter().enumerate() {
        for (name_b, b) in &bases[i..] {
            if a.size() * b.size() <= 12 && a.size() > 1 && b.size() > 1 {
                corpus.push((
                    format!("product({name_a}, {name_b})"),
                    direct_product(a, b).expect("within size limit"),
                ));
            }
        }
    }
    corpus.extend(strong_semilattice_examples());
    corpus.push((
        "symmetric_inverse_monoid(2)".into(),
        symmetric_inverse_monoid(2).expect("n = 2"),
    ));
    for n in 1..=4 {
        corpus.push((
            format!("truncated_add({n})"),
            truncated_add(n).expect("n ≥ 1"),
        ));
    }
    corpus
}
