//! Conjugacy classes of G(p) by orbit closure over the perfect index.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use serde::Serialize;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::bitmap::AtomicBitmap;
use crate::error::Result;
use crate::gate::Gate;
use crate::group::{FamilyGroup, GroupElement, GroupParams};

/// Frontiers smaller than this are expanded on the calling thread.
#[cfg(feature = "parallel")]
const PAR_FRONTIER: usize = 2048;

/// How enumeration-bound work is scheduled. Results do not depend on the choice.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    /// Uses the rayon pool when the `parallel` feature is on; sequential otherwise.
    Parallel,
}

impl Default for Execution {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Execution::Parallel
        } else {
            Execution::Sequential
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ConjugacyClass {
    /// Member with the smallest perfect index.
    pub representative: GroupElement,
    pub rep_index: u64,
    pub size: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassTable {
    pub params: GroupParams,
    pub order: u64,
    /// Sorted by `(size, rep_index)`.
    pub classes: Vec<ConjugacyClass>,
    pub center_order: u64,
}

impl ClassTable {
    /// Distinct sizes of classes outside the centre.
    pub fn noncentral_sizes(&self) -> BTreeSet<u64> {
        self.classes
            .iter()
            .filter(|c| c.size > 1)
            .map(|c| c.size)
            .collect()
    }

    /// Number of classes of each size.
    pub fn size_multiplicities(&self) -> BTreeMap<u64, usize> {
        let mut m = BTreeMap::new();
        for c in &self.classes {
            *m.entry(c.size).or_default() += 1;
        }
        m
    }

    pub fn class_sum(&self) -> u64 {
        self.classes.iter().map(|c| c.size).sum()
    }

    pub fn class_of_index(&self, index: u64) -> Option<&ConjugacyClass> {
        self.classes.iter().find(|c| c.rep_index == index)
    }
}

/// Conjugating elements for orbit closure, paired with their inverses. `n₁` and `z` are
/// central and skipped.
fn conjugators(g: &FamilyGroup) -> Vec<(GroupElement, GroupElement)> {
    let central = [g.n1(), g.z()];
    g.generators()
        .iter()
        .filter(|h| !central.contains(h))
        .map(|h| (*h, g.inverse(h)))
        .collect()
}

/// The class of `u`, by breadth-first closure under the generators.
pub fn conjugacy_class_of(g: &FamilyGroup, u: &GroupElement) -> ConjugacyClass {
    let gens = conjugators(g);
    let mut seen = HashSet::from([g.element_index(u)]);
    let mut frontier = vec![*u];
    let mut rep = (g.element_index(u), *u);
    while let Some(v) = frontier.pop() {
        for (h, h_inv) in &gens {
            let w = g.conjugate_with_inverse(&v, h, h_inv);
            let k = g.element_index(&w);
            if seen.insert(k) {
                rep = rep.min((k, w));
                frontier.push(w);
            }
        }
    }
    ConjugacyClass {
        representative: rep.1,
        rep_index: rep.0,
        size: seen.len() as u64,
    }
}

/// All conjugacy classes of G(p), scheduled per [`Execution::default`].
pub fn class_table(g: &FamilyGroup, gate: &Gate) -> Result<ClassTable> {
    class_table_with(g, gate, Execution::default())
}

pub fn class_table_with(g: &FamilyGroup, gate: &Gate, exec: Execution) -> Result<ClassTable> {
    gate.check(g.p())?;
    let order = g.order();
    let gens = conjugators(g);
    let seen = AtomicBitmap::new(order);
    let mut classes = Vec::new();
    let mut cursor = 0;
    while let Some(k) = seen.next_clear(cursor) {
        seen.insert(k);
        let rep = g.element_from_index_unchecked(k);
        let mut frontier = vec![rep];
        let mut size = 1u64;
        while !frontier.is_empty() {
            frontier = expand(g, &gens, &seen, &frontier, exec);
            size += frontier.len() as u64;
        }
        classes.push(ConjugacyClass {
            representative: rep,
            rep_index: k,
            size,
        });
        cursor = k + 1;
    }
    classes.sort_by_key(|c| (c.size, c.rep_index));
    let center_order = classes.iter().filter(|c| c.size == 1).count() as u64;
    Ok(ClassTable {
        params: g.params(),
        order,
        classes,
        center_order,
    })
}

fn expand(
    g: &FamilyGroup,
    gens: &[(GroupElement, GroupElement)],
    seen: &AtomicBitmap,
    frontier: &[GroupElement],
    exec: Execution,
) -> Vec<GroupElement> {
    #[cfg(feature = "parallel")]
    if exec == Execution::Parallel
        && frontier.len() >= PAR_FRONTIER
        && rayon::current_num_threads() > 1
    {
        return frontier
            .par_iter()
            .flat_map_iter(|v| unseen_neighbours(g, gens, seen, v))
            .collect();
    }
    let _ = exec;
    frontier
        .iter()
        .flat_map(|v| unseen_neighbours(g, gens, seen, v))
        .collect()
}

fn unseen_neighbours<'a>(
    g: &'a FamilyGroup,
    gens: &'a [(GroupElement, GroupElement)],
    seen: &'a AtomicBitmap,
    v: &'a GroupElement,
) -> impl Iterator<Item = GroupElement> + 'a {
    gens.iter().filter_map(move |(h, h_inv)| {
        let w = g.conjugate_with_inverse(v, h, h_inv);
        seen.insert(g.element_index(&w)).then_some(w)
    })
}

/// Number of element indices in `0..order` satisfying `pred`.
fn count_where(order: u64, exec: Execution, pred: impl Fn(u64) -> bool + Sync) -> u64 {
    #[cfg(feature = "parallel")]
    if exec == Execution::Parallel {
        return (0..order).into_par_iter().filter(|&k| pred(k)).count() as u64;
    }
    let _ = exec;
    (0..order).filter(|&k| pred(k)).count() as u64
}

/// `Z(G)`, in ascending index order.
pub fn center(g: &FamilyGroup, gate: &Gate) -> Result<Vec<GroupElement>> {
    gate.check(g.p())?;
    let gens = g.generators();
    let is_central = |u: &GroupElement| gens.iter().all(|h| g.commutes(u, h));
    #[cfg(feature = "parallel")]
    let out = (0..g.order())
        .into_par_iter()
        .map(|k| g.element_from_index_unchecked(k))
        .filter(is_central)
        .collect();
    #[cfg(not(feature = "parallel"))]
    let out = g.enumerate_elements(gate)?.filter(is_central).collect();
    Ok(out)
}

/// `|C_G(u)|` by counting every element that commutes with `u`.
pub fn centralizer_order(g: &FamilyGroup, u: &GroupElement, gate: &Gate) -> Result<u64> {
    gate.check(g.p())?;
    Ok(count_where(g.order(), Execution::default(), |k| {
        g.commutes(u, &g.element_from_index_unchecked(k))
    }))
}

/// `|C_G(u)| = |G| / |u^G|`; available at every `p`.
pub fn centralizer_order_via_class(g: &FamilyGroup, u: &GroupElement) -> u64 {
    g.order() / conjugacy_class_of(g, u).size
}

/// `C_E(b)`, in `E`-index order.
pub fn centralizer_of_b_in_e(g: &FamilyGroup, gate: &Gate) -> Result<Vec<GroupElement>> {
    gate.check(g.p())?;
    let b = g.b();
    Ok(g.e_elements()
        .filter(|e| g.conjugate(e, &b) == *e)
        .collect())
}

/// Subgroup generated by `x_i x_{p−i}`, `y_i y_{p−i}` (`1 <= i <= (p−1)/2`) and `z`.
pub fn paired_span(g: &FamilyGroup) -> BTreeSet<GroupElement> {
    let p = g.p() as usize;
    let mut gens = vec![g.z()];
    for i in 1..=(p - 1) / 2 {
        gens.push(g.multiply(&g.x(i), &g.x(p - i)));
        gens.push(g.multiply(&g.y(i), &g.y(p - i)));
    }
    let mut span = BTreeSet::from([g.identity()]);
    for h in gens {
        let next: Vec<GroupElement> = span.iter().map(|u| g.multiply(u, &h)).collect();
        span.extend(next);
    }
    span
}

/// Orbits of `M = ⟨a, b⟩` acting by conjugation on `E ∖ ⟨z⟩`, as size → count.
pub fn m_orbit_sizes_on_e(g: &FamilyGroup, gate: &Gate) -> Result<BTreeMap<u64, usize>> {
    gate.check(g.p())?;
    let (a, b) = (g.a(), g.b());
    let mut seen = HashSet::new();
    let mut sizes = BTreeMap::new();
    for e in g.e_elements() {
        if e.eps == 0 && e.eta == 0 || seen.contains(&e) {
            continue;
        }
        seen.insert(e);
        let mut frontier = vec![e];
        let mut size = 1u64;
        while let Some(u) = frontier.pop() {
            for h in [&a, &b] {
                let v = g.conjugate(&u, h);
                if seen.insert(v) {
                    size += 1;
                    frontier.push(v);
                }
            }
        }
        *sizes.entry(size).or_default() += 1;
    }
    Ok(sizes)
}

/// The three cosets-of-normal-subgroup strata used to split the noncentral classes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Stratum {
    /// `N ∖ Z(G)`.
    NoncentralN,
    /// `⟨N, a⟩ ∖ N`.
    RotationCoset,
    /// `G ∖ ⟨N, a⟩`.
    ReflectionCoset,
}

impl Stratum {
    pub fn of(u: &GroupElement) -> Self {
        match (u.ai, u.bj) {
            (_, true) => Stratum::ReflectionCoset,
            (0, false) => Stratum::NoncentralN,
            (_, false) => Stratum::RotationCoset,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            Stratum::NoncentralN => "N \\ Z(G)",
            Stratum::RotationCoset => "<N,a> \\ N",
            Stratum::ReflectionCoset => "G \\ <N,a>",
        }
    }
}

/// Class sizes occurring in each stratum, read off a class table. Both `N` and `⟨N, a⟩`
/// are normal, so each class lies in one stratum.
pub fn stratum_sizes(table: &ClassTable) -> BTreeMap<Stratum, BTreeSet<u64>> {
    let mut out: BTreeMap<Stratum, BTreeSet<u64>> = BTreeMap::new();
    for c in table.classes.iter().filter(|c| c.size > 1) {
        out.entry(Stratum::of(&c.representative))
            .or_default()
            .insert(c.size);
    }
    out
}

pub fn coset_stratum_sizes(
    g: &FamilyGroup,
    gate: &Gate,
) -> Result<BTreeMap<Stratum, BTreeSet<u64>>> {
    Ok(stratum_sizes(&class_table(g, gate)?))
}

/// The five noncentral class sizes `2p, 4p, 2^{p−1}p², 2^p p², 2^{2p−1}p`, ascending.
pub fn predicted_sizes(p: u32) -> BTreeSet<u64> {
    let p = p as u64;
    BTreeSet::from([
        2 * p,
        4 * p,
        (1 << (2 * p - 1)) * p,
        (1 << (p - 1)) * p * p,
        (1 << p) * p * p,
    ])
}
