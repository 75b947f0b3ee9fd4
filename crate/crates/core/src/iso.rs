//! Isomorphism testing for Cayley-table groups.
//!
//! Cheap invariants are compared first. If they agree, a generating set of the
//! first group is chosen greedily and its images are searched by backtracking,
//! with candidates restricted to elements of the same fingerprint. A partial
//! assignment is extended along a breadth-first spanning tree and rejected as
//! soon as it stops being an injective homomorphism.

use std::collections::BTreeMap;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::group::{spanning_tree, Element, FiniteGroup};

pub const ISOMORPHISM_ORDER_CAP: usize = 512;

/// Per-element invariant preserved by isomorphisms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElementFingerprint {
    pub order: usize,
    pub centralizer_size: usize,
    pub class_size: usize,
    pub square_roots: usize,
}

pub fn element_fingerprints(g: &FiniteGroup) -> Vec<ElementFingerprint> {
    let n = g.order();
    let mut roots = vec![0usize; n];
    for y in g.elements() {
        roots[g.mul(y, y)] += 1;
    }
    g.elements()
        .map(|x| {
            let centralizer_size = g.elements().filter(|&y| g.commutes(x, y)).count();
            ElementFingerprint {
                order: g.element_order(x),
                centralizer_size,
                class_size: n / centralizer_size,
                square_roots: roots[x],
            }
        })
        .collect()
}

fn histogram<T: Ord + Copy>(items: &[T]) -> BTreeMap<T, usize> {
    let mut h = BTreeMap::new();
    for &i in items {
        *h.entry(i).or_insert(0) += 1;
    }
    h
}

pub fn is_isomorphic(a: &FiniteGroup, b: &FiniteGroup) -> Result<bool> {
    for g in [a, b] {
        if g.order() > ISOMORPHISM_ORDER_CAP {
            return Err(Error::TooLarge(g.order()));
        }
    }
    if a.order() != b.order() || a.is_abelian() != b.is_abelian() {
        return Ok(false);
    }
    if a.is_abelian() {
        // Finite abelian groups are determined by their order statistics.
        return Ok(histogram(&a.element_orders()) == histogram(&b.element_orders()));
    }
    Ok(find_isomorphism(a, b)?.is_some())
}

/// An isomorphism `a -> b` as an image vector, or `None`.
pub fn find_isomorphism(a: &FiniteGroup, b: &FiniteGroup) -> Result<Option<Vec<Element>>> {
    for g in [a, b] {
        if g.order() > ISOMORPHISM_ORDER_CAP {
            return Err(Error::TooLarge(g.order()));
        }
    }
    if a.order() != b.order() {
        return Ok(None);
    }
    if a.order() == 1 {
        return Ok(Some(vec![0]));
    }
    if a.center().size() != b.center().size() || a.cent_count() != b.cent_count() {
        return Ok(None);
    }
    let fa = element_fingerprints(a);
    let fb = element_fingerprints(b);
    if histogram(&fa) != histogram(&fb) {
        return Ok(None);
    }

    let mut by_print: BTreeMap<ElementFingerprint, Vec<Element>> = BTreeMap::new();
    for y in b.elements() {
        by_print.entry(fb[y]).or_default().push(y);
    }
    let gens = choose_generators(a, |x| by_print[&fa[x]].len());
    let candidates: Vec<&[Element]> = gens.iter().map(|&g| by_print[&fa[g]].as_slice()).collect();

    let search = Search {
        a,
        b,
        fa: &fa,
        fb: &fb,
        gens: &gens,
        candidates: &candidates,
    };
    let mut images = Vec::with_capacity(gens.len());
    Ok(search.run(&mut images))
}

/// Greedy generating set: repeatedly add the element that enlarges the
/// generated subgroup most, breaking ties by fewest candidate images.
fn choose_generators(g: &FiniteGroup, candidate_count: impl Fn(Element) -> usize) -> Vec<Element> {
    let mut gens: Vec<Element> = Vec::new();
    let mut current = g.closure_mask(&gens);
    while current.count_ones(..) < g.order() {
        let mut best: Option<(usize, usize, Element, FixedBitSet)> = None;
        for x in g.elements() {
            if current.contains(x) {
                continue;
            }
            let mut trial = gens.clone();
            trial.push(x);
            let mask = g.closure_mask(&trial);
            let size = mask.count_ones(..);
            let cands = candidate_count(x);
            let better = match &best {
                None => true,
                Some((bs, bc, _, _)) => size > *bs || (size == *bs && cands < *bc),
            };
            if better {
                best = Some((size, cands, x, mask));
            }
        }
        let (_, _, x, mask) = best.expect("some element lies outside a proper subgroup");
        gens.push(x);
        current = mask;
    }
    gens
}

struct Search<'a> {
    a: &'a FiniteGroup,
    b: &'a FiniteGroup,
    fa: &'a [ElementFingerprint],
    fb: &'a [ElementFingerprint],
    gens: &'a [Element],
    candidates: &'a [&'a [Element]],
}

impl Search<'_> {
    fn run(&self, images: &mut Vec<Element>) -> Option<Vec<Element>> {
        let level = images.len();
        for &h in self.candidates[level] {
            images.push(h);
            if let Some(map) = self.extend(images) {
                if level + 1 == self.gens.len() {
                    return Some(map);
                }
                if let Some(found) = self.run(images) {
                    return Some(found);
                }
            }
            images.pop();
        }
        None
    }

    /// Extends `gens[i] -> images[i]` to the subgroup they generate, or `None`
    /// if the extension is not an injective, fingerprint-preserving homomorphism.
    fn extend(&self, images: &[Element]) -> Option<Vec<Element>> {
        let gens = &self.gens[..images.len()];
        let mut map = vec![usize::MAX; self.a.order()];
        let mut used = FixedBitSet::with_capacity(self.b.order());
        map[0] = 0;
        used.insert(0);
        let tree = spanning_tree(self.a, gens);
        for &(y, parent, k) in &tree {
            let img = self.b.mul(map[parent], images[k]);
            if self.fa[y] != self.fb[img] || used.put(img) {
                return None;
            }
            map[y] = img;
        }
        let members = std::iter::once(0).chain(tree.iter().map(|&(y, _, _)| y));
        for x in members {
            for (k, &g) in gens.iter().enumerate() {
                if map[self.a.mul(x, g)] != self.b.mul(map[x], images[k]) {
                    return None;
                }
            }
        }
        Some(map)
    }
}
