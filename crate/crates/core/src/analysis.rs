//! Equal-centralizer classes and the regularity predicates built on them.
//!
//! `β(x)` is the set of elements whose centralizer equals `C(x)`. These
//! classes are the parts of the non-centralizer graph, so a vertex `x` has
//! degree `|G| - |β(x)|` and the graph is regular exactly when every class has
//! the size of the center.

use std::collections::HashMap;
use std::fmt::Write as _;

use fixedbitset::FixedBitSet;

use crate::arith;
use crate::error::{Error, Result};
use crate::group::{Element, FiniteGroup, PGroup, Subgroup};
use crate::lattice;

/// Largest order accepted by [`brute_force_abelian_factor`].
pub const BRUTE_FORCE_ORDER_CAP: usize = 64;

/// The partition of a group into equal-centralizer classes.
///
/// Class 0 is the center; the remaining classes are ordered by their smallest
/// element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BetaPartition {
    classes: Vec<Vec<Element>>,
    class_of: Vec<usize>,
    centralizers: Vec<Subgroup>,
}

impl BetaPartition {
    pub fn classes(&self) -> &[Vec<Element>] {
        &self.classes
    }

    pub fn class(&self, id: usize) -> &[Element] {
        &self.classes[id]
    }

    pub fn class_of(&self, x: Element) -> usize {
        self.class_of[x]
    }

    /// Number of classes, which is `|Cent(G)|`.
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    /// The common centralizer of the elements of class `id`.
    pub fn centralizer(&self, id: usize) -> &Subgroup {
        &self.centralizers[id]
    }

    pub fn center(&self) -> &[Element] {
        &self.classes[0]
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }

    pub fn order(&self) -> usize {
        self.class_of.len()
    }

    /// Degree of `x` in the non-centralizer graph.
    pub fn degree(&self, x: Element) -> usize {
        self.order() - self.classes[self.class_of[x]].len()
    }

    /// Regular degree `|G| - |Z(G)|` when every class has the size of the
    /// center. Abelian groups have a single class and degree 0.
    pub fn regular_degree(&self) -> Option<usize> {
        let z = self.classes[0].len();
        self.classes
            .iter()
            .all(|c| c.len() == z)
            .then(|| self.order() - z)
    }

    /// Induced degree when all non-central classes have one common size.
    pub fn induced_degree(&self) -> Option<usize> {
        let rest = &self.classes[1..];
        let vertices = self.order() - self.classes[0].len();
        match rest.first() {
            None => Some(0),
            Some(first) => {
                let s = first.len();
                rest.iter().all(|c| c.len() == s).then(|| vertices - s)
            }
        }
    }
}

pub fn beta_partition(g: &FiniteGroup) -> BetaPartition {
    let mut index: HashMap<FixedBitSet, usize> = HashMap::new();
    let mut classes: Vec<Vec<Element>> = Vec::new();
    let mut masks: Vec<FixedBitSet> = Vec::new();
    let mut class_of = vec![0usize; g.order()];
    // the identity comes first, so its class (the center) gets id 0
    for x in g.elements() {
        let mask = g.centralizer_mask(x);
        let id = *index.entry(mask.clone()).or_insert_with(|| {
            classes.push(Vec::new());
            masks.push(mask);
            classes.len() - 1
        });
        classes[id].push(x);
        class_of[x] = id;
    }
    let centralizers = masks.into_iter().map(Subgroup::from_mask).collect();
    BetaPartition {
        classes,
        class_of,
        centralizers,
    }
}

/// `|Cent(G)|`, the number of distinct centralizers.
pub fn cent_count(g: &FiniteGroup) -> usize {
    beta_partition(g).class_count()
}

/// The regular degree of the non-centralizer graph, if it is regular.
pub fn is_regular(g: &FiniteGroup) -> Option<usize> {
    beta_partition(g).regular_degree()
}

/// The degree of the induced graph on `G \ Z(G)`, if it is regular.
pub fn is_induced_regular(g: &FiniteGroup) -> Option<usize> {
    beta_partition(g).induced_degree()
}

/// Proper centralizers not contained in another proper centralizer, keyed by
/// class id.
pub fn maximal_centralizers(g: &FiniteGroup) -> Result<Vec<(usize, Subgroup)>> {
    maximal_centralizers_of(&beta_partition(g))
}

pub(crate) fn maximal_centralizers_of(p: &BetaPartition) -> Result<Vec<(usize, Subgroup)>> {
    if p.class_count() == 1 {
        return Err(Error::AbelianGroup);
    }
    let proper = 1..p.class_count();
    Ok(proper
        .clone()
        .filter(|&i| {
            let c = p.centralizer(i);
            !proper
                .clone()
                .any(|j| j != i && c.size() < p.centralizer(j).size() && c.is_subset(p.centralizer(j)))
        })
        .map(|i| (i, p.centralizer(i).clone()))
        .collect())
}

/// `β(x) ∪ Z(G)` for a class whose centralizer is maximal, checked to be a
/// subgroup.
pub fn h_subgroup(g: &FiniteGroup, class_id: usize) -> Result<Subgroup> {
    let p = beta_partition(g);
    if class_id >= p.class_count() {
        return Err(Error::InvalidParameter(format!("no class {class_id}")));
    }
    let maximal = maximal_centralizers_of(&p)?;
    if !maximal.iter().any(|(i, _)| *i == class_id) {
        return Err(Error::NotMaximal(class_id));
    }
    h_set(g, &p, class_id)
}

pub(crate) fn h_set(g: &FiniteGroup, p: &BetaPartition, class_id: usize) -> Result<Subgroup> {
    let set = p.center().iter().chain(p.class(class_id)).copied();
    Subgroup::from_set(g, set).ok_or(Error::NotASubgroup(class_id))
}

/// For a p-group, a central element generating a cyclic direct factor.
///
/// A central `z` of order `p^a` generates a direct factor exactly when
/// `<z> ∩ G' = 1` and `z^(p^(a-1))` lies outside `G^(p^a) G'`: then the image of
/// `<z>` is a pure cyclic subgroup of the abelianization, hence a direct
/// summand, and its complement pulls back to a normal complement of `<z>`.
/// Every non-trivial abelian direct factor contains such a cyclic one.
pub fn cyclic_direct_factor(g: &FiniteGroup) -> Option<Element> {
    let p = match g.is_p_group() {
        Some(PGroup::Prime(p)) => p,
        _ => return None,
    };
    let derived = g.derived_subgroup();
    let center = g.center();
    let mut agemo: HashMap<usize, Subgroup> = HashMap::new();
    for &z in &center.members()[1..] {
        let o = g.element_order(z);
        let bottom = g.pow(z, (o / p) as i64);
        if derived.contains(bottom) {
            continue;
        }
        let layer = agemo
            .entry(o)
            .or_insert_with(|| g.power_commutator_subgroup(o));
        if !layer.contains(bottom) {
            return Some(z);
        }
    }
    None
}

/// Whether a regular non-abelian 2-group has no non-trivial abelian direct factor.
pub fn is_reduced_regular(g: &FiniteGroup) -> Result<bool> {
    if g.is_abelian() || g.is_p_group() != Some(PGroup::Prime(2)) || is_regular(g).is_none() {
        return Err(Error::NotRegular2Group);
    }
    Ok(cyclic_direct_factor(g).is_none())
}

/// Exhaustive search for an internal direct product `G = H × A` with `A`
/// central and non-trivial. Returns `(H, A)`.
pub fn brute_force_abelian_factor(g: &FiniteGroup) -> Result<Option<(Subgroup, Subgroup)>> {
    if g.order() > BRUTE_FORCE_ORDER_CAP {
        return Err(Error::TooLarge(g.order()));
    }
    let center = g.center();
    let subgroups = lattice::all_subgroups(g);
    for a in subgroups.iter().filter(|s| !s.is_trivial() && s.is_subset(&center)) {
        let want = g.order() / a.size();
        // A is central, so H·A = G with H ∩ A = 1 forces H normal
        if let Some(h) = subgroups
            .iter()
            .find(|h| h.size() == want && h.intersection(a).is_trivial())
        {
            return Ok(Some((h.clone(), a.clone())));
        }
    }
    Ok(None)
}

/// Everything the analysis knows about one group, in a fixed field order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularityReport {
    pub label: String,
    pub order: usize,
    pub center_size: usize,
    pub cent_count: usize,
    pub index: usize,
    /// `(degree, multiplicity)` pairs in ascending degree order.
    pub degree_sequence: Vec<(usize, usize)>,
    pub is_regular: bool,
    pub regular_degree: Option<usize>,
    pub is_induced_regular: bool,
    pub induced_degree: Option<usize>,
    /// Only defined for regular non-abelian 2-groups.
    pub is_reduced: Option<bool>,
    pub class_sizes: Vec<usize>,
}

impl RegularityReport {
    pub fn new(label: &str, g: &FiniteGroup) -> RegularityReport {
        let p = beta_partition(g);
        let mut degrees: Vec<usize> = g.elements().map(|x| p.degree(x)).collect();
        degrees.sort_unstable();
        let mut degree_sequence: Vec<(usize, usize)> = Vec::new();
        for d in degrees {
            match degree_sequence.last_mut() {
                Some((e, k)) if *e == d => *k += 1,
                _ => degree_sequence.push((d, 1)),
            }
        }
        let regular_degree = p.regular_degree();
        let induced_degree = p.induced_degree();
        let is_reduced = (regular_degree.is_some()
            && p.class_count() > 1
            && g.is_p_group() == Some(PGroup::Prime(2)))
        .then(|| cyclic_direct_factor(g).is_none());
        let center_size = p.center().len();
        RegularityReport {
            label: label.to_string(),
            order: g.order(),
            center_size,
            cent_count: p.class_count(),
            index: g.order() / center_size,
            degree_sequence,
            is_regular: regular_degree.is_some(),
            regular_degree,
            is_induced_regular: induced_degree.is_some(),
            induced_degree,
            is_reduced,
            class_sizes: p.sizes(),
        }
    }

    fn fields(&self) -> Vec<(&'static str, String)> {
        let opt = |v: Option<usize>| v.map_or("-".to_string(), |d| d.to_string());
        let seq = self
            .degree_sequence
            .iter()
            .map(|(d, k)| format!("{d}^{k}"))
            .collect::<Vec<_>>()
            .join(",");
        let sizes = self
            .class_sizes
            .iter()
            .map(|s| s.to_string())
            .collect::<Vec<_>>()
            .join(",");
        vec![
            ("label", self.label.clone()),
            ("order", self.order.to_string()),
            ("center_size", self.center_size.to_string()),
            ("cent_count", self.cent_count.to_string()),
            ("index", self.index.to_string()),
            ("degree_sequence", seq),
            ("regular", self.is_regular.to_string()),
            ("degree", opt(self.regular_degree)),
            ("induced_regular", self.is_induced_regular.to_string()),
            ("induced_degree", opt(self.induced_degree)),
            ("reduced", self.is_reduced.map_or("-".to_string(), |r| r.to_string())),
            ("class_sizes", sizes),
        ]
    }

    /// One `key=value` per line.
    pub fn to_key_value(&self) -> String {
        let mut out = String::new();
        for (k, v) in self.fields() {
            let _ = writeln!(out, "{k}={v}");
        }
        out
    }

    /// Aligned, human-readable block.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (k, v) in self.fields() {
            let _ = writeln!(out, "{:<16} {v}", format!("{k}:"));
        }
        out
    }
}

/// `[G:Z(G)]`.
pub fn center_index(g: &FiniteGroup) -> usize {
    g.order() / g.center().size()
}

/// Order of `xZ` in `G/Z(G)`.
pub(crate) fn order_mod(g: &FiniteGroup, center: &Subgroup, x: Element) -> usize {
    let mut y = x;
    let mut k = 1;
    while !center.contains(y) {
        y = g.mul(y, x);
        k += 1;
    }
    k
}

/// Whether `G/Z(G)` is a p-group, returning the prime (or `None` when
/// `G` is abelian or the index is not a prime power).
pub fn central_quotient_prime(g: &FiniteGroup) -> Option<usize> {
    arith::prime_power(center_index(g)).map(|(p, _)| p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn partition_shapes() {
        let d8 = families::dihedral(4).unwrap();
        let p = beta_partition(&d8);
        assert_eq!(p.sizes(), vec![2, 2, 2, 2]);
        assert_eq!(p.center(), &[0, 2]);
        let s3 = families::dihedral(3).unwrap();
        let mut sizes = beta_partition(&s3).sizes();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 1, 1, 1, 2]);
        let c6 = families::cyclic(6).unwrap();
        assert_eq!(beta_partition(&c6).class_count(), 1);
    }

    #[test]
    fn cent_counts() {
        assert_eq!(cent_count(&families::cyclic(5).unwrap()), 1);
        assert_eq!(cent_count(&families::generalized_quaternion(8).unwrap()), 4);
        assert_eq!(cent_count(&families::heisenberg(5).unwrap()), 7);
    }

    #[test]
    fn regularity() {
        assert_eq!(is_regular(&families::dihedral(4).unwrap()), Some(6));
        assert_eq!(is_regular(&families::modular(32).unwrap()), Some(24));
        assert_eq!(is_regular(&families::dihedral(3).unwrap()), None);
        assert_eq!(is_regular(&families::cyclic(6).unwrap()), Some(0));
        assert_eq!(is_induced_regular(&families::dihedral(4).unwrap()), Some(4));
        let h3 = families::heisenberg(3).unwrap();
        let p = beta_partition(&h3);
        assert!(p.induced_degree().is_some());
        assert!(p.classes()[1..].iter().all(|c| c.len() == 6));
    }

    #[test]
    fn maximal_centralizers_and_h() {
        let d8 = families::dihedral(4).unwrap();
        assert_eq!(maximal_centralizers(&d8).unwrap().len(), 3);
        let s3 = families::dihedral(3).unwrap();
        assert_eq!(maximal_centralizers(&s3).unwrap().len(), 4);
        assert!(matches!(
            maximal_centralizers(&families::cyclic(4).unwrap()),
            Err(Error::AbelianGroup)
        ));
        // the class of r in D8 is {r, r^3}; with the center it is <r>
        let p = beta_partition(&d8);
        let h = h_subgroup(&d8, p.class_of(1)).unwrap();
        assert_eq!(h.members(), &[0, 1, 2, 3]);
        let r3 = h_subgroup(&s3, beta_partition(&s3).class_of(1)).unwrap();
        assert_eq!(r3.size(), 3);
        assert!(matches!(h_subgroup(&d8, 0), Err(Error::NotMaximal(0))));
    }

    #[test]
    fn reduced_regular() {
        let d8 = families::dihedral(4).unwrap();
        let q8 = families::generalized_quaternion(8).unwrap();
        assert!(is_reduced_regular(&d8).unwrap());
        assert!(is_reduced_regular(&q8).unwrap());
        let d8c2 = families::from_spec("dihedral:4 x cyclic:2").unwrap();
        assert_eq!(is_regular(&d8c2), Some(12));
        assert!(!is_reduced_regular(&d8c2).unwrap());
        let d8c4 = families::from_spec("dihedral:4 x cyclic:4").unwrap();
        assert!(!is_reduced_regular(&d8c4).unwrap());
        assert!(matches!(
            is_reduced_regular(&families::dihedral(3).unwrap()),
            Err(Error::NotRegular2Group)
        ));
    }

    #[test]
    fn brute_force_factor() {
        assert!(brute_force_abelian_factor(&families::dihedral(4).unwrap())
            .unwrap()
            .is_none());
        let d8c2 = families::from_spec("dihedral:4 x cyclic:2").unwrap();
        let (h, a) = brute_force_abelian_factor(&d8c2).unwrap().unwrap();
        assert_eq!((h.size(), a.size()), (8, 2));
        assert!(brute_force_abelian_factor(&families::elementary_abelian(2, 3).unwrap())
            .unwrap()
            .is_some());
        assert!(matches!(
            brute_force_abelian_factor(&families::cyclic(128).unwrap()),
            Err(Error::TooLarge(128))
        ));
    }

    #[test]
    fn report_formats() {
        let r = RegularityReport::new("dihedral:4", &families::dihedral(4).unwrap());
        let kv = r.to_key_value();
        assert!(kv.contains("regular=true\ndegree=6\n"));
        assert!(kv.contains("degree_sequence=6^8\n"));
        assert!(kv.contains("reduced=true\n"));
        assert!(r.to_text().starts_with("label:"));
        let c6 = RegularityReport::new("cyclic:6", &families::cyclic(6).unwrap());
        assert_eq!(c6.regular_degree, Some(0));
        assert_eq!(c6.is_reduced, None);
    }
}
