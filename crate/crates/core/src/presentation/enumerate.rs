//! HLT coset enumeration over the trivial subgroup.
//!
//! Cosets are defined eagerly while scanning relators at each coset in turn.
//! When the coset limit is hit, a lookahead pass scans every live coset
//! without defining anything, which often exposes coincidences and frees
//! space. Coincidences are processed with a union-find queue; the table is
//! compacted after each wave so live cosets stay numbered in definition order.

use std::collections::VecDeque;

use super::Presentation;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;

pub const DEFAULT_MAX_COSETS: usize = 100_000;

const UNDEF: u32 = u32::MAX;

/// A complete coset table: row `c`, column `2g` is `c·g`, column `2g+1` is `c·g⁻¹`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetTable {
    width: usize,
    rows: usize,
    table: Vec<u32>,
}

impl CosetTable {
    pub fn len(&self) -> usize {
        self.rows
    }

    pub fn is_empty(&self) -> bool {
        self.rows == 0
    }

    pub fn generator_count(&self) -> usize {
        self.width / 2
    }

    /// Image of coset `c` under column `col`.
    pub fn get(&self, c: usize, col: usize) -> usize {
        self.table[c * self.width + col] as usize
    }

    /// Every column is a permutation and each inverse column undoes its partner.
    pub fn is_consistent(&self) -> bool {
        for col in 0..self.width {
            let mut seen = vec![false; self.rows];
            for c in 0..self.rows {
                let d = self.table[c * self.width + col];
                if d == UNDEF || seen[d as usize] {
                    return false;
                }
                seen[d as usize] = true;
                if self.get(d as usize, col ^ 1) != c {
                    return false;
                }
            }
        }
        true
    }

    /// Follows `letters` from coset `c`.
    pub fn trace(&self, c: usize, letters: &[usize]) -> usize {
        letters.iter().fold(c, |c, &x| self.get(c, x))
    }
}

struct NoSpace;

struct Enumerator {
    width: usize,
    table: Vec<u32>,
    parent: Vec<u32>,
    max: usize,
}

impl Enumerator {
    fn n(&self) -> usize {
        self.parent.len()
    }

    fn at(&self, c: usize, x: usize) -> u32 {
        self.table[c * self.width + x]
    }

    fn set(&mut self, c: usize, x: usize, d: u32) {
        self.table[c * self.width + x] = d;
    }

    fn live(&self, c: usize) -> bool {
        self.parent[c] as usize == c
    }

    fn define(&mut self, c: usize, x: usize) -> Result<u32, NoSpace> {
        if self.n() >= self.max {
            return Err(NoSpace);
        }
        let d = self.n() as u32;
        self.table.extend(std::iter::repeat_n(UNDEF, self.width));
        self.parent.push(d);
        self.set(c, x, d);
        self.set(d as usize, x ^ 1, c as u32);
        Ok(d)
    }

    fn rep(&mut self, c: u32) -> u32 {
        let mut r = c;
        while self.parent[r as usize] != r {
            r = self.parent[r as usize];
        }
        let mut c = c;
        while self.parent[c as usize] != r {
            let next = self.parent[c as usize];
            self.parent[c as usize] = r;
            c = next;
        }
        r
    }

    fn merge(&mut self, a: u32, b: u32, queue: &mut VecDeque<u32>) {
        let (a, b) = (self.rep(a), self.rep(b));
        if a == b {
            return;
        }
        let (keep, kill) = if a < b { (a, b) } else { (b, a) };
        self.parent[kill as usize] = keep;
        queue.push_back(kill);
    }

    /// Identifies cosets `a` and `b` and everything that follows.
    fn coincidence(&mut self, a: u32, b: u32) {
        let mut queue = VecDeque::new();
        self.merge(a, b, &mut queue);
        while let Some(e) = queue.pop_front() {
            let e = e as usize;
            for x in 0..self.width {
                let f = self.at(e, x);
                if f == UNDEF {
                    continue;
                }
                // drop the back edge from f
                if self.at(f as usize, x ^ 1) == e as u32 {
                    self.set(f as usize, x ^ 1, UNDEF);
                }
                let e1 = self.rep(e as u32);
                let f1 = self.rep(f);
                let cur = self.at(e1 as usize, x);
                if cur != UNDEF {
                    self.merge(f1, cur, &mut queue);
                } else {
                    let back = self.at(f1 as usize, x ^ 1);
                    if back != UNDEF {
                        self.merge(e1, back, &mut queue);
                    } else {
                        self.set(e1 as usize, x, f1);
                        self.set(f1 as usize, x ^ 1, e1);
                    }
                }
            }
        }
    }

    /// Scans `w` at `c`, recording a deduction if exactly one gap remains.
    /// With `fill`, gaps are closed by defining new cosets. Returns whether a
    /// coincidence occurred.
    fn scan(&mut self, c: usize, w: &[usize], fill: bool) -> Result<bool, NoSpace> {
        let c = c as u32;
        let (mut f, mut b) = (c, c);
        let (mut i, mut j) = (0usize, w.len());
        loop {
            while i < j && self.at(f as usize, w[i]) != UNDEF {
                f = self.at(f as usize, w[i]);
                i += 1;
            }
            if i == j {
                if f != b {
                    self.coincidence(f, b);
                    return Ok(true);
                }
                return Ok(false);
            }
            while j > i && self.at(b as usize, w[j - 1] ^ 1) != UNDEF {
                b = self.at(b as usize, w[j - 1] ^ 1);
                j -= 1;
            }
            if j < i {
                self.coincidence(f, b);
                return Ok(true);
            }
            if j == i + 1 {
                self.set(f as usize, w[i], b);
                self.set(b as usize, w[i] ^ 1, f);
                return Ok(false);
            }
            if i == j {
                if f != b {
                    self.coincidence(f, b);
                    return Ok(true);
                }
                return Ok(false);
            }
            if !fill {
                return Ok(false);
            }
            self.define(f as usize, w[i])?;
        }
    }

    /// Renumbers live cosets consecutively; returns the old-to-new map.
    fn compact(&mut self) -> Vec<u32> {
        let n = self.n();
        let mut remap = vec![UNDEF; n];
        let mut k = 0u32;
        for c in 0..n {
            if self.live(c) {
                remap[c] = k;
                k += 1;
            }
        }
        if k as usize == n {
            return remap;
        }
        let mut table = Vec::with_capacity(k as usize * self.width);
        for c in 0..n {
            if !self.live(c) {
                continue;
            }
            for x in 0..self.width {
                let d = self.at(c, x);
                table.push(if d == UNDEF { UNDEF } else { remap[d as usize] });
            }
        }
        self.table = table;
        self.parent = (0..k).collect();
        remap
    }

    /// New position for the coset pointer after a compaction: the first
    /// live coset at or after the old position.
    fn shift(remap: &[u32], old: usize) -> usize {
        remap[..old].iter().filter(|&&r| r != UNDEF).count()
    }

    fn lookahead(&mut self, relators: &[Vec<usize>]) {
        let mut c = 0;
        while c < self.n() {
            if self.live(c) {
                for r in relators {
                    if !self.live(c) {
                        break;
                    }
                    // scans without filling never run out of space
                    let _ = self.scan(c, r, false);
                }
            }
            c += 1;
        }
    }

    fn run(&mut self, relators: &[Vec<usize>]) -> Result<()> {
        let mut current = 0usize;
        'outer: while current < self.n() {
            let mut k = 0;
            while k < relators.len() {
                match self.scan(current, &relators[k], true) {
                    Ok(false) => k += 1,
                    Ok(true) => {
                        let alive = self.live(current);
                        let remap = self.compact();
                        if alive {
                            current = remap[current] as usize;
                            k += 1;
                        } else {
                            current = Self::shift(&remap, current);
                            continue 'outer;
                        }
                    }
                    Err(NoSpace) => {
                        self.lookahead(relators);
                        let alive = self.live(current);
                        let remap = self.compact();
                        if self.n() >= self.max {
                            return Err(Error::CosetLimitExceeded(self.max));
                        }
                        if alive {
                            current = remap[current] as usize;
                        } else {
                            current = Self::shift(&remap, current);
                            continue 'outer;
                        }
                    }
                }
            }
            for x in 0..self.width {
                if self.at(current, x) == UNDEF
                    && self.define(current, x).is_err() {
                        self.lookahead(relators);
                        let alive = self.live(current);
                        let remap = self.compact();
                        if self.n() >= self.max {
                            return Err(Error::CosetLimitExceeded(self.max));
                        }
                        current = if alive {
                            remap[current] as usize
                        } else {
                            Self::shift(&remap, current)
                        };
                        continue 'outer;
                    }
            }
            current += 1;
        }
        Ok(())
    }

    fn closes(&self, relators: &[Vec<usize>]) -> bool {
        (0..self.n()).all(|c| {
            relators.iter().all(|r| {
                let end = r.iter().try_fold(c as u32, |d, &x| {
                    let e = self.at(d as usize, x);
                    (e != UNDEF).then_some(e)
                });
                end == Some(c as u32)
            })
        })
    }
}

/// Enumerates the cosets of the trivial subgroup of the presented group.
pub fn coset_table(p: &Presentation, max_cosets: usize) -> Result<CosetTable> {
    let width = 2 * p.generators().len();
    let relators: Vec<Vec<usize>> = p.relators().iter().map(|r| r.letters()).collect();
    let mut e = Enumerator {
        width,
        table: vec![UNDEF; width],
        parent: vec![0],
        max: max_cosets.max(1),
    };
    loop {
        e.run(&relators)?;
        if e.closes(&relators) {
            break;
        }
    }
    Ok(CosetTable {
        width,
        rows: e.n(),
        table: e.table,
    })
}

/// Builds the Cayley table of a finite presentation. Elements are numbered by
/// a breadth-first walk of the coset table and labelled by the word reaching them.
pub fn enumerate(p: &Presentation, max_cosets: usize) -> Result<FiniteGroup> {
    let ct = coset_table(p, max_cosets)?;
    let n = ct.len();
    let width = ct.width;

    // breadth-first relabelling, recording the letter path to each coset
    let mut order = vec![0usize];
    let mut index = vec![usize::MAX; n];
    let mut via: Vec<(usize, usize)> = vec![(0, 0); n];
    index[0] = 0;
    let mut head = 0;
    while head < order.len() {
        let c = order[head];
        head += 1;
        for x in 0..width {
            let d = ct.get(c, x);
            if index[d] == usize::MAX {
                index[d] = order.len();
                via[d] = (c, x);
                order.push(d);
            }
        }
    }

    let words: Vec<Vec<usize>> = order
        .iter()
        .map(|&c| {
            let mut letters = Vec::new();
            let mut d = c;
            while d != 0 {
                let (parent, x) = via[d];
                letters.push(x);
                d = parent;
            }
            letters.reverse();
            letters
        })
        .collect();

    // element i acts on cosets by following its word from any start
    let rows: Vec<Vec<usize>> = (0..n)
        .map(|i| {
            let ci = order[i];
            (0..n).map(|j| index[ct.trace(ci, &words[j])]).collect()
        })
        .collect();

    let labels = words.iter().map(|w| label(p, w)).collect();
    FiniteGroup::from_table(&rows, labels)
}

fn label(p: &Presentation, letters: &[usize]) -> String {
    if letters.is_empty() {
        return "1".to_string();
    }
    let mut syllables: Vec<(usize, i64)> = Vec::new();
    for &x in letters {
        let g = x / 2;
        let e = if x % 2 == 0 { 1 } else { -1 };
        match syllables.last_mut() {
            Some((h, f)) if *h == g => *f += e,
            _ => syllables.push((g, e)),
        }
    }
    p.format_word(&super::Word::new(syllables))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::parse;

    fn order_of(text: &str) -> usize {
        enumerate(&parse(text).unwrap(), DEFAULT_MAX_COSETS).unwrap().order()
    }

    #[test]
    fn small_orders() {
        assert_eq!(order_of("< a | a^4 >"), 4);
        assert_eq!(order_of("< a,b | a^4, b^2, b*a*b^-1 = a^-1 >"), 8);
        assert_eq!(order_of("< a,b | a^4, a^2 = b^2, b*a*b^-1 = a^-1 >"), 8);
        assert_eq!(order_of("< a,b | a^2, b^3, (a*b)^5 >"), 60);
        assert_eq!(order_of("< a,b | a^8, b^2, b*a*b = a^5 >"), 16);
        assert_eq!(order_of("< | >"), 1);
        assert_eq!(order_of("< a | a >"), 1);
    }

    #[test]
    fn dihedral_table_structure() {
        let g = enumerate(&parse("< a,b | a^4, b^2, b*a*b^-1 = a^-1 >").unwrap(), 1000).unwrap();
        assert_eq!(g.center().size(), 2);
        assert!(!g.is_abelian());
        assert_eq!(g.label(0), "1");
    }

    #[test]
    fn infinite_group_hits_the_limit() {
        let err = enumerate(&parse("< a,b | a^2 >").unwrap(), 1000).unwrap_err();
        assert!(matches!(err, Error::CosetLimitExceeded(1000)));
    }

    #[test]
    fn deterministic_output() {
        let p = parse("< a,b | a^2, b^3, (a*b)^4 >").unwrap();
        let g = enumerate(&p, DEFAULT_MAX_COSETS).unwrap();
        let h = enumerate(&p, DEFAULT_MAX_COSETS).unwrap();
        assert_eq!(g.order(), 24);
        assert_eq!(g.rows(), h.rows());
        assert_eq!(g.labels(), h.labels());
    }

    #[test]
    fn coset_table_is_consistent() {
        let p = parse("< a,b | a^2, b^3, (a*b)^5 >").unwrap();
        let ct = coset_table(&p, DEFAULT_MAX_COSETS).unwrap();
        assert_eq!(ct.len(), 60);
        assert!(ct.is_consistent());
        for r in p.relators() {
            for c in 0..ct.len() {
                assert_eq!(ct.trace(c, &r.letters()), c);
            }
        }
    }

    #[test]
    fn tight_limit_succeeds_with_lookahead() {
        // the group has 8 elements; lookahead must reclaim temporary cosets
        let p = parse("< a,b | a^4, b^2, b*a*b^-1 = a^-1 >").unwrap();
        assert_eq!(enumerate(&p, 8).unwrap().order(), 8);
    }
}
