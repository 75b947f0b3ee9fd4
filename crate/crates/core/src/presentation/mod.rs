//! Finitely presented groups: the `< gens | relators >` grammar and coset
//! enumeration over the trivial subgroup.
//!
//! ```text
//! presentation := '<' generators '|' relators '>'
//! generators   := ident ((',' | whitespace) ident)*
//! relators     := relator (',' relator)*
//! relator      := word ('=' word)?
//! word         := term ('*' term)*
//! term         := factor ('^' integer)?
//! factor       := ident | '1' | '(' word ')'
//! ```
//!
//! An equation `w1 = w2` is stored as the relator `w1 w2⁻¹`.

mod enumerate;
mod parse;

use std::fmt;

pub use enumerate::{coset_table, enumerate, CosetTable, DEFAULT_MAX_COSETS};
pub use parse::parse;

/// A word in the generators: `(generator index, exponent)` syllables.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<(usize, i64)>);

impl Word {
    pub fn new(syllables: Vec<(usize, i64)>) -> Word {
        let mut w = Word(syllables);
        w.reduce();
        w
    }

    pub fn identity() -> Word {
        Word(Vec::new())
    }

    pub fn syllables(&self) -> &[(usize, i64)] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|&(g, e)| (g, -e)).collect())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut s = self.0.clone();
        s.extend_from_slice(&other.0);
        Word::new(s)
    }

    pub fn pow(&self, k: i64) -> Word {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut s = Vec::new();
        for _ in 0..k.unsigned_abs() {
            s.extend_from_slice(&base.0);
        }
        Word::new(s)
    }

    /// Free reduction: merge adjacent syllables in the same generator and
    /// drop zero exponents.
    fn reduce(&mut self) {
        let mut out: Vec<(usize, i64)> = Vec::with_capacity(self.0.len());
        for &(g, e) in &self.0 {
            if e == 0 {
                continue;
            }
            match out.last_mut() {
                Some((h, f)) if *h == g => {
                    *f += e;
                    if *f == 0 {
                        out.pop();
                    }
                }
                _ => out.push((g, e)),
            }
        }
        self.0 = out;
    }

    /// Letters for the coset table: generator `g` is column `2g`, its inverse `2g + 1`.
    pub(crate) fn letters(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for &(g, e) in &self.0 {
            let col = if e > 0 { 2 * g } else { 2 * g + 1 };
            out.extend(std::iter::repeat_n(col, e.unsigned_abs() as usize));
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    generators: Vec<String>,
    relators: Vec<Word>,
}

impl Presentation {
    /// Relators are freely reduced; empty ones are dropped.
    pub fn new(generators: Vec<String>, relators: Vec<Word>) -> Presentation {
        let relators = relators.into_iter().filter(|r| !r.is_empty()).collect();
        Presentation {
            generators,
            relators,
        }
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn format_word(&self, w: &Word) -> String {
        if w.is_empty() {
            return "1".to_string();
        }
        w.syllables()
            .iter()
            .map(|&(g, e)| {
                if e == 1 {
                    self.generators[g].clone()
                } else {
                    format!("{}^{}", self.generators[g], e)
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rels: Vec<String> = self.relators.iter().map(|r| self.format_word(r)).collect();
        write!(f, "< {} | {} >", self.generators.join(","), rels.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn free_reduction() {
        let w = Word::new(vec![(0, 2), (1, 1), (1, -1), (0, -2), (1, 3)]);
        assert_eq!(w.syllables(), &[(1, 3)]);
        assert!(Word::new(vec![(0, 1), (0, -1)]).is_empty());
        assert_eq!(w.inverse().syllables(), &[(1, -3)]);
        assert_eq!(Word::new(vec![(0, 1), (1, 1)]).pow(-2).syllables(), &[(1, -1), (0, -1), (1, -1), (0, -1)]);
    }

    #[test]
    fn letters_use_inverse_columns() {
        let w = Word::new(vec![(1, 2), (0, -1)]);
        assert_eq!(w.letters(), vec![2, 2, 1]);
    }
}
