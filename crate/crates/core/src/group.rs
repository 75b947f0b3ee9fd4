//! Finite groups given by a multiplication table over indexed elements.
//!
//! Every group in this crate is a [`FiniteGroup`]: element `0` is the identity
//! and `mul(i, j)` is a table lookup. Subgroups and cosets are sorted index
//! sets backed by a bitset for constant-time membership.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use fixedbitset::FixedBitSet;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::arith;
use crate::error::{Error, Result};
use crate::lattice;

pub type Element = usize;

/// Tables up to this order get the full O(n³) associativity check.
pub const FULL_ASSOCIATIVITY_LIMIT: usize = 256;
/// Default bound on the size of a permutation closure.
pub const DEFAULT_CLOSURE_CAP: usize = 10_000;

const ASSOCIATIVITY_SEED: u64 = 0x006e_6f6e_6365_6e74;

#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<u32>,
    inverses: Vec<u32>,
    labels: Vec<String>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("order", &self.order)
            .finish_non_exhaustive()
    }
}

/// Result of [`FiniteGroup::is_p_group`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PGroup {
    /// The trivial group, a p-group for every prime.
    Trivial,
    Prime(usize),
}

impl PGroup {
    /// The prime, or `None` for the trivial group.
    pub fn prime(self) -> Option<usize> {
        match self {
            PGroup::Trivial => None,
            PGroup::Prime(p) => Some(p),
        }
    }
}

impl FiniteGroup {
    /// Validates a Cayley table and builds a group from it.
    ///
    /// If the identity is not at index 0 it is swapped there, labels included.
    /// An empty `labels` vector yields the labels `g0, g1, ...` (after relocation
    /// index 0 is always labeled by the identity's original label).
    pub fn from_table(rows: &[Vec<usize>], labels: Vec<String>) -> Result<FiniteGroup> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::NotAGroup("empty table".into()));
        }
        if n > u32::MAX as usize {
            return Err(Error::TooLarge(n));
        }
        let labels = if labels.is_empty() {
            (0..n).map(|i| format!("g{i}")).collect()
        } else if labels.len() == n {
            labels
        } else {
            return Err(Error::NotAGroup(format!(
                "{} labels for {} elements",
                labels.len(),
                n
            )));
        };
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotAGroup(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            if let Some(&bad) = row.iter().find(|&&v| v >= n) {
                return Err(Error::NotAGroup(format!("row {i} has out-of-range entry {bad}")));
            }
        }

        let mut seen = FixedBitSet::with_capacity(n);
        for (i, row) in rows.iter().enumerate() {
            seen.clear();
            for &v in row {
                if seen.put(v) {
                    return Err(Error::NotAGroup(format!("row {i} is not a permutation")));
                }
            }
        }
        for j in 0..n {
            seen.clear();
            for row in rows {
                if seen.put(row[j]) {
                    return Err(Error::NotAGroup(format!("column {j} is not a permutation")));
                }
            }
        }

        let identity = (0..n)
            .find(|&e| (0..n).all(|j| rows[e][j] == j && rows[j][e] == j))
            .ok_or_else(|| Error::NotAGroup("no identity element".into()))?;

        // Swap the identity into slot 0.
        let relabel = |i: usize| {
            if i == identity {
                0
            } else if i == 0 {
                identity
            } else {
                i
            }
        };
        let mut table = vec![0u32; n * n];
        for i in 0..n {
            for j in 0..n {
                table[relabel(i) * n + relabel(j)] = relabel(rows[i][j]) as u32;
            }
        }
        let mut labels = labels;
        labels.swap(0, identity);

        let mut inverses = vec![0u32; n];
        for i in 0..n {
            let j = (0..n)
                .find(|&j| table[i * n + j] == 0)
                .expect("latin square row contains the identity");
            if table[j * n + i] != 0 {
                return Err(Error::NotAGroup(format!(
                    "element {} has no two-sided inverse",
                    relabel(i)
                )));
            }
            inverses[i] = j as u32;
        }

        let group = FiniteGroup {
            order: n,
            table,
            inverses,
            labels,
        };
        group.check_associativity()?;
        Ok(group)
    }

    /// Builds a group from a table that is known to be valid (identity at 0).
    pub(crate) fn from_raw(order: usize, table: Vec<u32>, labels: Vec<String>) -> FiniteGroup {
        debug_assert_eq!(table.len(), order * order);
        debug_assert_eq!(labels.len(), order);
        let mut inverses = vec![0u32; order];
        for i in 0..order {
            let row = &table[i * order..(i + 1) * order];
            inverses[i] = row.iter().position(|&v| v == 0).expect("identity in row") as u32;
        }
        FiniteGroup {
            order,
            table,
            inverses,
            labels,
        }
    }

    fn check_associativity(&self) -> Result<()> {
        let n = self.order;
        let fail = |a: usize, b: usize, c: usize| {
            Err(Error::NotAGroup(format!(
                "associativity fails for ({a}, {b}, {c})"
            )))
        };
        if n <= FULL_ASSOCIATIVITY_LIMIT {
            for a in 0..n {
                for b in 0..n {
                    let ab = self.mul(a, b);
                    for c in 0..n {
                        if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                            return fail(a, b, c);
                        }
                    }
                }
            }
        } else {
            let mut rng = StdRng::seed_from_u64(ASSOCIATIVITY_SEED);
            for _ in 0..10 * n * n {
                let (a, b, c) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
                if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                    return fail(a, b, c);
                }
            }
        }
        Ok(())
    }

    /// Breadth-first closure of permutations given in image notation.
    ///
    /// The product `x * y` applies `x` first, then `y`. Elements are numbered in
    /// discovery order, multiplying each known element by the generators in
    /// the order given.
    pub fn from_permutations(degree: usize, generators: &[Vec<usize>], cap: usize) -> Result<FiniteGroup> {
        for (k, g) in generators.iter().enumerate() {
            if g.len() != degree {
                return Err(Error::NotAPermutation(format!(
                    "generator {k} has {} images, expected {degree}",
                    g.len()
                )));
            }
            let mut seen = FixedBitSet::with_capacity(degree);
            for &v in g {
                if v >= degree || seen.put(v) {
                    return Err(Error::NotAPermutation(format!(
                        "generator {k} is not a bijection on 0..{degree}"
                    )));
                }
            }
        }

        let compose = |x: &[u32], y: &[u32]| -> Vec<u32> { x.iter().map(|&i| y[i as usize]).collect() };
        let gens: Vec<Vec<u32>> = generators
            .iter()
            .map(|g| g.iter().map(|&v| v as u32).collect())
            .collect();
        let identity: Vec<u32> = (0..degree as u32).collect();

        let mut elements = vec![identity.clone()];
        let mut index: HashMap<Vec<u32>, usize> = HashMap::new();
        index.insert(identity, 0);
        let mut next = 0;
        while next < elements.len() {
            for g in &gens {
                let p = compose(&elements[next], g);
                if !index.contains_key(&p) {
                    if elements.len() == cap {
                        return Err(Error::ClosureExceeded(cap));
                    }
                    index.insert(p.clone(), elements.len());
                    elements.push(p);
                }
            }
            next += 1;
        }

        let n = elements.len();
        let mut table = vec![0u32; n * n];
        for i in 0..n {
            for j in 0..n {
                table[i * n + j] = index[&compose(&elements[i], &elements[j])] as u32;
            }
        }
        let labels = elements.iter().map(|p| cycle_notation(p)).collect();
        Ok(FiniteGroup::from_raw(n, table, labels))
    }

    /// Returns a copy whose element `perm[i]` is this group's element `i`.
    /// `perm` must be a permutation of `0..order`; the identity is moved back to
    /// slot 0 if `perm[0] != 0`.
    pub fn relabeled(&self, perm: &[usize]) -> Result<FiniteGroup> {
        let n = self.order;
        if perm.len() != n {
            return Err(Error::InvalidParameter("relabeling has wrong length".into()));
        }
        let mut rows = vec![vec![0usize; n]; n];
        let mut labels = vec![String::new(); n];
        for i in 0..n {
            labels[perm[i]] = self.labels[i].clone();
            for j in 0..n {
                rows[perm[i]][perm[j]] = perm[self.mul(i, j)];
            }
        }
        FiniteGroup::from_table(&rows, labels)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> Element {
        0
    }

    pub fn elements(&self) -> std::ops::Range<Element> {
        0..self.order
    }

    #[inline]
    pub fn mul(&self, a: Element, b: Element) -> Element {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: Element) -> Element {
        self.inverses[a] as usize
    }

    pub fn label(&self, a: Element) -> &str {
        &self.labels[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// The table as nested rows, e.g. for serialization.
    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table
            .chunks(self.order)
            .map(|r| r.iter().map(|&v| v as usize).collect())
            .collect()
    }

    pub fn pow(&self, x: Element, k: i64) -> Element {
        let base = if k < 0 { self.inv(x) } else { x };
        let mut acc = 0;
        for _ in 0..k.unsigned_abs() {
            acc = self.mul(acc, base);
        }
        acc
    }

    /// `x⁻¹ y⁻¹ x y`.
    pub fn commutator(&self, x: Element, y: Element) -> Element {
        self.mul(self.mul(self.inv(x), self.inv(y)), self.mul(x, y))
    }

    /// `g x g⁻¹`.
    pub fn conjugate(&self, g: Element, x: Element) -> Element {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn commutes(&self, x: Element, y: Element) -> bool {
        self.mul(x, y) == self.mul(y, x)
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|x| (x + 1..self.order).all(|y| self.commutes(x, y)))
    }

    /// Least `k >= 1` with `x^k = e`.
    pub fn element_order(&self, x: Element) -> usize {
        let mut k = 1;
        let mut acc = x;
        while acc != 0 {
            acc = self.mul(acc, x);
            k += 1;
        }
        k
    }

    pub fn element_orders(&self) -> Vec<usize> {
        self.elements().map(|x| self.element_order(x)).collect()
    }

    pub fn exponent(&self) -> usize {
        self.elements()
            .map(|x| self.element_order(x))
            .fold(1, |acc, o| acc / gcd(acc, o) * o)
    }

    pub fn centralizer_mask(&self, x: Element) -> FixedBitSet {
        let mut mask = FixedBitSet::with_capacity(self.order);
        for y in self.elements() {
            if self.commutes(x, y) {
                mask.insert(y);
            }
        }
        mask
    }

    pub fn centralizer(&self, x: Element) -> Subgroup {
        Subgroup::from_mask(self.centralizer_mask(x))
    }

    pub fn center(&self) -> Subgroup {
        let mut mask = FixedBitSet::with_capacity(self.order);
        for x in self.elements() {
            if self.elements().all(|y| self.commutes(x, y)) {
                mask.insert(x);
            }
        }
        Subgroup::from_mask(mask)
    }

    /// Smallest subgroup containing `seeds`.
    pub fn generated_subgroup<I: IntoIterator<Item = Element>>(&self, seeds: I) -> Subgroup {
        let mut gens: Vec<Element> = seeds.into_iter().filter(|&s| s != 0).collect();
        gens.sort_unstable();
        gens.dedup();
        Subgroup::from_mask(self.closure_mask(&gens))
    }

    /// Closure of `{e}` under right multiplication by `gens`.
    pub(crate) fn closure_mask(&self, gens: &[Element]) -> FixedBitSet {
        let mut mask = FixedBitSet::with_capacity(self.order);
        mask.insert(0);
        let mut queue = vec![0];
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            for &g in gens {
                let y = self.mul(x, g);
                if !mask.put(y) {
                    queue.push(y);
                }
            }
        }
        mask
    }

    pub fn is_normal(&self, h: &Subgroup) -> bool {
        h.members()
            .iter()
            .all(|&x| self.elements().all(|g| h.contains(self.conjugate(g, x))))
    }

    /// The left coset `xH`.
    pub fn coset(&self, x: Element, h: &Subgroup) -> Coset {
        let mut members: Vec<Element> = h.members().iter().map(|&s| self.mul(x, s)).collect();
        members.sort_unstable();
        Coset {
            representative: members[0],
            members,
        }
    }

    /// All left cosets of `h`, ordered by smallest member (so `h` itself comes first).
    pub fn cosets(&self, h: &Subgroup) -> Vec<Coset> {
        let mut covered = FixedBitSet::with_capacity(self.order);
        let mut out = Vec::with_capacity(self.order / h.size());
        for x in self.elements() {
            if covered.contains(x) {
                continue;
            }
            let c = self.coset(x, h);
            for &m in &c.members {
                covered.insert(m);
            }
            out.push(c);
        }
        out
    }

    /// `G / N` on the cosets of a normal subgroup. Coset `i` is labeled by its
    /// smallest member in brackets.
    pub fn quotient(&self, n: &Subgroup) -> Result<FiniteGroup> {
        if !self.is_normal(n) {
            return Err(Error::NotNormal);
        }
        let cosets = self.cosets(n);
        let mut coset_of = vec![0usize; self.order];
        for (k, c) in cosets.iter().enumerate() {
            for &m in &c.members {
                coset_of[m] = k;
            }
        }
        let q = cosets.len();
        let mut table = vec![0u32; q * q];
        for i in 0..q {
            for j in 0..q {
                let prod = self.mul(cosets[i].representative, cosets[j].representative);
                table[i * q + j] = coset_of[prod] as u32;
            }
        }
        let labels = cosets
            .iter()
            .map(|c| format!("[{}]", self.label(c.representative)))
            .collect();
        Ok(FiniteGroup::from_raw(q, table, labels))
    }

    /// `A × B` with pairs in a-major lexicographic order.
    pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> FiniteGroup {
        let (na, nb) = (a.order, b.order);
        let n = na * nb;
        let mut table = vec![0u32; n * n];
        for i in 0..n {
            let (ia, ib) = (i / nb, i % nb);
            for j in 0..n {
                let (ja, jb) = (j / nb, j % nb);
                table[i * n + j] = (a.mul(ia, ja) * nb + b.mul(ib, jb)) as u32;
            }
        }
        let labels = (0..n)
            .map(|i| format!("({},{})", a.label(i / nb), b.label(i % nb)))
            .collect();
        FiniteGroup::from_raw(n, table, labels)
    }

    /// `Some(Prime(p))` when `|G| = p^k` with `k >= 1`, `Some(Trivial)` for the trivial group.
    pub fn is_p_group(&self) -> Option<PGroup> {
        if self.order == 1 {
            return Some(PGroup::Trivial);
        }
        arith::prime_power(self.order).map(|(p, _)| PGroup::Prime(p))
    }

    /// `Some(p)` when every non-identity element has order exactly `p`.
    /// Abelianness is not required.
    pub fn is_elementary_p(&self) -> Result<Option<usize>> {
        if self.order == 1 {
            return Err(Error::TrivialGroup);
        }
        let p = self.element_order(1);
        if !arith::is_prime(p) {
            return Ok(None);
        }
        Ok((2..self.order).all(|x| self.element_order(x) == p).then_some(p))
    }

    pub fn is_elementary_abelian(&self) -> Result<Option<usize>> {
        Ok(self.is_elementary_p()?.filter(|_| self.is_abelian()))
    }

    pub fn derived_subgroup(&self) -> Subgroup {
        let comms: Vec<Element> = self
            .elements()
            .flat_map(|x| self.elements().map(move |y| (x, y)))
            .map(|(x, y)| self.commutator(x, y))
            .collect();
        self.generated_subgroup(comms)
    }

    /// Subgroup generated by all `m`-th powers and all commutators, `G^m G'`.
    pub fn power_commutator_subgroup(&self, m: usize) -> Subgroup {
        let mut seeds: Vec<Element> = self.elements().map(|x| self.pow(x, m as i64)).collect();
        for x in self.elements() {
            for y in self.elements() {
                seeds.push(self.commutator(x, y));
            }
        }
        self.generated_subgroup(seeds)
    }

    /// The Frattini subgroup. For p-groups this is `G^p G'`; otherwise the
    /// intersection of the maximal subgroups from the subgroup lattice.
    pub fn frattini(&self) -> Subgroup {
        match self.is_p_group() {
            Some(PGroup::Trivial) => self.generated_subgroup([]),
            Some(PGroup::Prime(p)) => self.power_commutator_subgroup(p),
            None => lattice::frattini_by_maximal_subgroups(self),
        }
    }

    /// Conjugacy classes ordered by smallest member.
    pub fn conjugacy_classes(&self) -> Vec<Vec<Element>> {
        let mut assigned = FixedBitSet::with_capacity(self.order);
        let mut classes = Vec::new();
        for x in self.elements() {
            if assigned.contains(x) {
                continue;
            }
            let mut class: Vec<Element> = Vec::new();
            for g in self.elements() {
                let c = self.conjugate(g, x);
                if !assigned.put(c) {
                    class.push(c);
                }
            }
            class.sort_unstable();
            classes.push(class);
        }
        classes
    }

    /// Number of distinct centralizers `|Cent(G)|`.
    pub fn cent_count(&self) -> usize {
        let mut seen: Vec<FixedBitSet> = self.elements().map(|x| self.centralizer_mask(x)).collect();
        seen.sort_unstable_by(|a, b| a.as_slice().cmp(b.as_slice()));
        seen.dedup();
        seen.len()
    }
}

/// Cycle notation on the points `0..d`, `()` for the identity.
fn cycle_notation(p: &[u32]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] as usize == start {
            continue;
        }
        let mut cycle = vec![start];
        seen[start] = true;
        let mut i = p[start] as usize;
        while i != start {
            seen[i] = true;
            cycle.push(i);
            i = p[i] as usize;
        }
        out.push('(');
        out.push_str(&cycle.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" "));
        out.push(')');
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}

pub(crate) fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// A subgroup as a sorted member list plus membership mask.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subgroup {
    members: Vec<Element>,
    mask: FixedBitSet,
}

impl Subgroup {
    /// Wraps a mask already known to be a subgroup.
    pub(crate) fn from_mask(mask: FixedBitSet) -> Subgroup {
        let members = mask.ones().collect();
        Subgroup { members, mask }
    }

    /// Checks that `set` contains the identity and is closed under products and
    /// inverses in `g`; `None` otherwise.
    pub fn from_set<I: IntoIterator<Item = Element>>(g: &FiniteGroup, set: I) -> Option<Subgroup> {
        let mut mask = FixedBitSet::with_capacity(g.order());
        for x in set {
            mask.insert(x);
        }
        if !mask.contains(0) {
            return None;
        }
        let members: Vec<Element> = mask.ones().collect();
        for &x in &members {
            if !mask.contains(g.inv(x)) {
                return None;
            }
            if members.iter().any(|&y| !mask.contains(g.mul(x, y))) {
                return None;
            }
        }
        debug_assert_eq!(g.order() % members.len(), 0, "Lagrange");
        Some(Subgroup { members, mask })
    }

    pub fn members(&self) -> &[Element] {
        &self.members
    }

    pub fn mask(&self) -> &FixedBitSet {
        &self.mask
    }

    pub fn size(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, x: Element) -> bool {
        self.mask.contains(x)
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    pub fn is_subset(&self, other: &Subgroup) -> bool {
        self.mask.is_subset(&other.mask)
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        let mut mask = self.mask.clone();
        mask.intersect_with(&other.mask);
        Subgroup::from_mask(mask)
    }

    /// The subgroup as a group in its own right; member `k` (in ascending
    /// order) becomes element `k`, so the identity stays at 0.
    pub fn to_group(&self, g: &FiniteGroup) -> FiniteGroup {
        let n = self.members.len();
        let mut local = vec![usize::MAX; g.order()];
        for (k, &m) in self.members.iter().enumerate() {
            local[m] = k;
        }
        let mut table = vec![0u32; n * n];
        for (i, &a) in self.members.iter().enumerate() {
            for (j, &b) in self.members.iter().enumerate() {
                table[i * n + j] = local[g.mul(a, b)] as u32;
            }
        }
        let labels = self.members.iter().map(|&m| g.label(m).to_string()).collect();
        FiniteGroup::from_raw(n, table, labels)
    }
}

/// A left coset `xH`; the representative is its smallest member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coset {
    pub representative: Element,
    pub members: Vec<Element>,
}

/// Breadth-first spanning tree of `<gens>` from the identity, as
/// `(element, parent, generator index)` in discovery order.
pub(crate) fn spanning_tree(g: &FiniteGroup, gens: &[Element]) -> Vec<(Element, Element, usize)> {
    let mut order = Vec::with_capacity(g.order());
    let mut seen = FixedBitSet::with_capacity(g.order());
    seen.insert(0);
    let mut queue = VecDeque::from([0]);
    while let Some(x) = queue.pop_front() {
        for (k, &s) in gens.iter().enumerate() {
            let y = g.mul(x, s);
            if !seen.put(y) {
                order.push((y, x, k));
                queue.push_back(y);
            }
        }
    }
    order
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn d8() -> FiniteGroup {
        families::dihedral(4).unwrap()
    }

    #[test]
    fn trivial_and_c2_tables() {
        let g = FiniteGroup::from_table(&[vec![0]], vec![]).unwrap();
        assert_eq!(g.order(), 1);
        let c2 = FiniteGroup::from_table(&[vec![0, 1], vec![1, 0]], vec![]).unwrap();
        assert_eq!(c2.order(), 2);
        assert_eq!(c2.element_order(1), 2);
    }

    #[test]
    fn rejects_non_latin_rows() {
        let err = FiniteGroup::from_table(&[vec![0, 1], vec![1, 1]], vec![]).unwrap_err();
        assert!(matches!(err, Error::NotAGroup(_)));
    }

    #[test]
    fn rejects_non_associative_loop() {
        // A Latin square with identity 0 that is not associative (order-5 loop).
        let rows = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        let err = FiniteGroup::from_table(&rows, vec![]).unwrap_err();
        assert!(matches!(err, Error::NotAGroup(msg) if msg.contains("associativity")));
    }

    #[test]
    fn relocates_identity() {
        // C2 with the identity stored at index 1.
        let g = FiniteGroup::from_table(&[vec![1, 0], vec![0, 1]], vec!["a".into(), "e".into()]).unwrap();
        assert_eq!(g.label(0), "e");
        assert_eq!(g.mul(1, 1), 0);
    }

    #[test]
    fn permutation_closures() {
        let d8 = FiniteGroup::from_permutations(4, &[vec![1, 2, 3, 0], vec![2, 1, 0, 3]], DEFAULT_CLOSURE_CAP).unwrap();
        assert_eq!(d8.order(), 8);
        assert!(!d8.is_abelian());
        let c3 = FiniteGroup::from_permutations(3, &[vec![1, 2, 0]], DEFAULT_CLOSURE_CAP).unwrap();
        assert_eq!(c3.order(), 3);
        assert!(c3.is_abelian());
        let s3 = FiniteGroup::from_permutations(3, &[vec![1, 0, 2], vec![1, 2, 0]], DEFAULT_CLOSURE_CAP).unwrap();
        assert_eq!(s3.order(), 6);
        assert_eq!(s3.label(0), "()");
    }

    #[test]
    fn permutation_errors() {
        let err = FiniteGroup::from_permutations(3, &[vec![0, 0, 1]], 100).unwrap_err();
        assert!(matches!(err, Error::NotAPermutation(_)));
        let err = FiniteGroup::from_permutations(5, &[vec![1, 2, 3, 4, 0], vec![1, 0, 2, 3, 4]], 50).unwrap_err();
        assert!(matches!(err, Error::ClosureExceeded(50)));
    }

    #[test]
    fn orders_in_d8() {
        let g = d8();
        assert_eq!(g.element_order(0), 1);
        // r is element 1 in the dihedral constructor
        assert_eq!(g.element_order(1), 4);
        let e8 = families::elementary_abelian(2, 3).unwrap();
        assert!((1..8).all(|x| e8.element_order(x) == 2));
    }

    #[test]
    fn centralizers_and_centers() {
        let g = d8();
        assert_eq!(g.centralizer(0).size(), 8);
        let s = 4; // the reflection s
        let c = g.centralizer(s);
        let r2 = g.pow(1, 2);
        let sr2 = g.mul(s, r2);
        let mut expected = vec![0, r2, s, sr2];
        expected.sort_unstable();
        assert_eq!(c.members(), expected.as_slice());

        let q8 = families::generalized_quaternion(8).unwrap();
        assert_eq!(q8.center().size(), 2);
        let s3 = families::dihedral(3).unwrap();
        assert!(s3.center().is_trivial());
        let c6 = families::cyclic(6).unwrap();
        assert_eq!(c6.center().size(), 6);
        assert!(c6.elements().all(|x| c6.centralizer(x).size() == 6));
    }

    #[test]
    fn generated_subgroups() {
        let g = d8();
        assert!(g.generated_subgroup([]).is_trivial());
        assert_eq!(g.generated_subgroup([1]).size(), 4);
        assert_eq!(g.generated_subgroup(g.elements()).size(), 8);
    }

    #[test]
    fn normality() {
        let g = d8();
        assert!(g.is_normal(&g.center()));
        assert!(g.is_normal(&g.generated_subgroup([1])));
        let s3 = families::dihedral(3).unwrap();
        let reflection = s3.generated_subgroup([3]);
        assert_eq!(reflection.size(), 2);
        assert!(!s3.is_normal(&reflection));
        assert!(matches!(s3.quotient(&reflection), Err(Error::NotNormal)));
    }

    #[test]
    fn quotients() {
        let g = d8();
        let all = g.generated_subgroup(g.elements());
        assert_eq!(g.quotient(&all).unwrap().order(), 1);
        let q = g.quotient(&g.center()).unwrap();
        assert_eq!(q.order(), 4);
        assert_eq!(q.is_elementary_abelian().unwrap(), Some(2));
        let same = g.quotient(&g.generated_subgroup([])).unwrap();
        assert!(crate::iso::is_isomorphic(&g, &same).unwrap());
    }

    #[test]
    fn direct_products() {
        let c2 = families::cyclic(2).unwrap();
        let k4 = FiniteGroup::direct_product(&c2, &c2);
        assert_eq!(k4.is_elementary_abelian().unwrap(), Some(2));
        let d8c3 = FiniteGroup::direct_product(&d8(), &families::cyclic(3).unwrap());
        assert_eq!(d8c3.order(), 24);
        assert_eq!(d8c3.center().size(), 6);
        let triv = families::cyclic(1).unwrap();
        assert!(crate::iso::is_isomorphic(&FiniteGroup::direct_product(&d8(), &triv), &d8()).unwrap());
    }

    #[test]
    fn p_groups() {
        assert_eq!(d8().is_p_group(), Some(PGroup::Prime(2)));
        assert_eq!(families::cyclic(12).unwrap().is_p_group(), None);
        assert_eq!(families::elementary_abelian(3, 5).unwrap().is_p_group(), Some(PGroup::Prime(3)));
        assert_eq!(families::cyclic(1).unwrap().is_p_group(), Some(PGroup::Trivial));
    }

    #[test]
    fn elementary_groups() {
        assert_eq!(families::elementary_abelian(2, 3).unwrap().is_elementary_p().unwrap(), Some(2));
        assert_eq!(families::cyclic(4).unwrap().is_elementary_p().unwrap(), None);
        let h27 = families::heisenberg(3).unwrap();
        assert_eq!(h27.is_elementary_p().unwrap(), Some(3));
        assert!(!h27.is_abelian());
        assert_eq!(h27.is_elementary_abelian().unwrap(), None);
        assert!(matches!(families::cyclic(1).unwrap().is_elementary_p(), Err(Error::TrivialGroup)));
    }

    #[test]
    fn frattini_examples() {
        assert!(families::elementary_abelian(2, 3).unwrap().frattini().is_trivial());
        assert_eq!(families::cyclic(4).unwrap().frattini().size(), 2);
        let g = d8();
        assert_eq!(g.frattini(), g.center());
        // non-p-group path: Φ(C6) = 1, Φ(C12) = C2
        assert!(families::cyclic(6).unwrap().frattini().is_trivial());
        assert_eq!(families::cyclic(12).unwrap().frattini().size(), 2);
    }

    #[test]
    fn conjugacy_classes_of_s3() {
        let s3 = families::dihedral(3).unwrap();
        let mut sizes: Vec<usize> = s3.conjugacy_classes().iter().map(|c| c.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 2, 3]);
    }
}
