//! Exhaustive subgroup lattice by cyclic extension.
//!
//! Only meant for small groups (order ≤ 64 or so): it is the oracle side of
//! the Frattini and direct-factor computations, and enumerates subgroups of
//! centers for the normal-centralizer check.

use std::collections::HashSet;

use fixedbitset::FixedBitSet;

use crate::group::{Element, FiniteGroup, Subgroup};

/// Every subgroup of `g`, sorted by size and then by member list.
pub fn all_subgroups(g: &FiniteGroup) -> Vec<Subgroup> {
    let mut cyclic: Vec<(Element, FixedBitSet)> = Vec::new();
    let mut seen_cyclic: HashSet<FixedBitSet> = HashSet::new();
    for x in g.elements().skip(1) {
        let mask = g.closure_mask(&[x]);
        if seen_cyclic.insert(mask.clone()) {
            cyclic.push((x, mask));
        }
    }

    let trivial = g.closure_mask(&[]);
    let mut found: HashSet<FixedBitSet> = HashSet::from([trivial.clone()]);
    let mut layer: Vec<(FixedBitSet, Vec<Element>)> = vec![(trivial, Vec::new())];
    let mut head = 0;
    while head < layer.len() {
        let (mask, gens) = layer[head].clone();
        head += 1;
        for (c, cmask) in &cyclic {
            if cmask.is_subset(&mask) {
                continue;
            }
            let mut next_gens = gens.clone();
            next_gens.push(*c);
            let joined = g.closure_mask(&next_gens);
            if found.insert(joined.clone()) {
                layer.push((joined, next_gens));
            }
        }
    }

    let mut out: Vec<Subgroup> = layer.into_iter().map(|(m, _)| Subgroup::from_mask(m)).collect();
    out.sort_by(|a, b| a.size().cmp(&b.size()).then_with(|| a.members().cmp(b.members())));
    out
}

/// Proper subgroups not contained in any other proper subgroup.
pub fn maximal_subgroups(g: &FiniteGroup) -> Vec<Subgroup> {
    let proper: Vec<Subgroup> = all_subgroups(g)
        .into_iter()
        .filter(|s| s.size() < g.order())
        .collect();
    proper
        .iter()
        .filter(|m| {
            !proper
                .iter()
                .any(|k| k.size() > m.size() && m.is_subset(k))
        })
        .cloned()
        .collect()
}

/// Intersection of all maximal subgroups (the whole lattice is enumerated).
pub fn frattini_by_maximal_subgroups(g: &FiniteGroup) -> Subgroup {
    let mut mask = FixedBitSet::with_capacity(g.order());
    mask.insert_range(..);
    for m in maximal_subgroups(g) {
        mask.intersect_with(m.mask());
    }
    Subgroup::from_mask(mask)
}
