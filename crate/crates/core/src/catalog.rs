//! Labeled group catalogs: a small line-oriented text format, fingerprints
//! for fast non-isomorphism, duplicate detection, and the shipped files.
//!
//! ```text
//! # comment
//! name: [8,3]
//! kind: presentation
//! order: 8
//! pres: < a,b | a^4, b^2, b*a*b^-1 = a^-1 >
//! ```
//!
//! Entries are separated by blank lines. `kind: table` entries are followed by
//! `order` rows of indices, `kind: perm` entries by `degree: d` and one
//! `gen: ...` line per generator in image notation.
//!
//! Header comments of the form `# table1 n=<n>: <labels>` and
//! `# control <tag>: <labels>` are kept as annotations.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::path::Path;
use std::sync::OnceLock;

use rayon::prelude::*;

use crate::analysis::{beta_partition, is_reduced_regular};
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, PGroup, DEFAULT_CLOSURE_CAP};
use crate::iso::is_isomorphic;
use crate::presentation::{self, DEFAULT_MAX_COSETS};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EntryKind {
    Table,
    Perm,
    Presentation,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Payload {
    Table(Vec<Vec<usize>>),
    Perm { degree: usize, generators: Vec<Vec<usize>> },
    Presentation(String),
}

#[derive(Debug)]
pub struct CatalogEntry {
    pub label: String,
    pub kind: EntryKind,
    pub order: usize,
    pub payload: Payload,
    /// Comment lines directly above the entry, `#` stripped.
    pub description: Option<String>,
    pub source: String,
    pub line: usize,
    group: OnceLock<FiniteGroup>,
}

impl Clone for CatalogEntry {
    fn clone(&self) -> CatalogEntry {
        CatalogEntry {
            label: self.label.clone(),
            kind: self.kind,
            order: self.order,
            payload: self.payload.clone(),
            description: self.description.clone(),
            source: self.source.clone(),
            line: self.line,
            group: self.group.clone(),
        }
    }
}

impl CatalogEntry {
    /// Builds (once) and returns the group, checking the declared order.
    pub fn group(&self) -> Result<&FiniteGroup> {
        self.group_with_limit(DEFAULT_MAX_COSETS)
    }

    /// As [`CatalogEntry::group`], with an explicit coset limit for presentations.
    pub fn group_with_limit(&self, max_cosets: usize) -> Result<&FiniteGroup> {
        if let Some(g) = self.group.get() {
            return Ok(g);
        }
        let g = match &self.payload {
            Payload::Table(rows) => FiniteGroup::from_table(rows, Vec::new())?,
            Payload::Perm { degree, generators } => {
                FiniteGroup::from_permutations(*degree, generators, DEFAULT_CLOSURE_CAP.max(self.order))?
            }
            Payload::Presentation(text) => presentation::enumerate(&presentation::parse(text)?, max_cosets)?,
        };
        if g.order() != self.order {
            return Err(Error::OrderMismatch {
                label: self.label.clone(),
                declared: self.order,
                actual: g.order(),
            });
        }
        let _ = self.group.set(g);
        Ok(self.group.get().expect("just set"))
    }
}

#[derive(Clone, Debug, Default)]
pub struct Catalog {
    pub source: String,
    pub entries: Vec<CatalogEntry>,
    /// `table1 n=<n>` rows from the header, keyed by degree.
    pub table1: BTreeMap<usize, Vec<String>>,
    /// `control <tag>` lists from the header.
    pub controls: BTreeMap<String, Vec<String>>,
}

impl Catalog {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, label: &str) -> Option<&CatalogEntry> {
        self.entries.iter().find(|e| e.label == label)
    }

    /// Materializes every entry (in parallel) as `(label, group)` pairs.
    pub fn groups(&self) -> Result<Vec<(String, FiniteGroup)>> {
        self.groups_with_limit(DEFAULT_MAX_COSETS)
    }

    pub fn groups_with_limit(&self, max_cosets: usize) -> Result<Vec<(String, FiniteGroup)>> {
        self.entries
            .par_iter()
            .map(|e| Ok((e.label.clone(), e.group_with_limit(max_cosets)?.clone())))
            .collect()
    }
}

pub fn load(path: impl AsRef<Path>) -> Result<Catalog> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_catalog(&text, &path.display().to_string())
}

fn format_err(source: &str, line: usize, reason: impl Into<String>) -> Error {
    Error::Format {
        source_name: source.to_string(),
        line,
        reason: reason.into(),
    }
}

fn parse_indices(source: &str, line: usize, text: &str) -> Result<Vec<usize>> {
    text.split_whitespace()
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| format_err(source, line, format!("`{t}` is not a non-negative integer")))
        })
        .collect()
}

fn parse_annotation(catalog: &mut Catalog, comment: &str) {
    let Some((head, labels)) = comment.split_once(':') else { return };
    let labels: Vec<String> = labels.split_whitespace().map(str::to_string).collect();
    let head = head.trim();
    if let Some(n) = head.strip_prefix("table1 n=") {
        if let Ok(n) = n.trim().parse::<usize>() {
            catalog.table1.entry(n).or_default().extend(labels);
        }
    } else if let Some(tag) = head.strip_prefix("control ") {
        catalog.controls.entry(tag.trim().to_string()).or_default().extend(labels);
    }
}

/// Parses catalog text; `source` names it in error messages.
pub fn parse_catalog(text: &str, source: &str) -> Result<Catalog> {
    let mut catalog = Catalog {
        source: source.to_string(),
        ..Catalog::default()
    };
    let lines: Vec<(usize, &str)> = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).collect();
    let mut blocks: Vec<&[(usize, &str)]> = Vec::new();
    let mut start = 0;
    for i in 0..=lines.len() {
        if i == lines.len() || lines[i].1.is_empty() {
            if i > start {
                blocks.push(&lines[start..i]);
            }
            start = i + 1;
        }
    }
    for block in blocks {
        for &(_, l) in block {
            if let Some(c) = l.strip_prefix('#') {
                parse_annotation(&mut catalog, c.trim());
            }
        }
        if let Some(entry) = parse_block(block, source)? {
            if catalog.get(&entry.label).is_some() {
                return Err(Error::DuplicateLabel(entry.label));
            }
            catalog.entries.push(entry);
        }
    }
    Ok(catalog)
}

fn parse_block(block: &[(usize, &str)], source: &str) -> Result<Option<CatalogEntry>> {
    let mut description: Vec<&str> = Vec::new();
    let mut label: Option<(usize, String)> = None;
    let mut kind: Option<EntryKind> = None;
    let mut order: Option<usize> = None;
    let mut degree: Option<usize> = None;
    let mut generators: Vec<Vec<usize>> = Vec::new();
    let mut pres: Option<String> = None;
    let mut rows: Vec<Vec<usize>> = Vec::new();
    let mut last_line = 0;

    for &(n, l) in block {
        last_line = n;
        if let Some(c) = l.strip_prefix('#') {
            if label.is_none() {
                description.push(c.trim());
            }
            continue;
        }
        if l.starts_with(|c: char| c.is_ascii_digit()) {
            if kind != Some(EntryKind::Table) {
                return Err(format_err(source, n, "table row outside a `kind: table` entry"));
            }
            rows.push(parse_indices(source, n, l)?);
            continue;
        }
        let Some((key, value)) = l.split_once(':') else {
            return Err(format_err(source, n, format!("expected `key: value`, found `{l}`")));
        };
        let value = value.trim();
        if label.is_none() && key != "name" {
            return Err(format_err(source, n, "entry must start with `name:`"));
        }
        match key.trim() {
            "name" => {
                if label.is_some() {
                    return Err(format_err(source, n, "second `name:` in one entry (missing blank line?)"));
                }
                if value.is_empty() {
                    return Err(format_err(source, n, "empty label"));
                }
                label = Some((n, value.to_string()));
            }
            "kind" => {
                kind = Some(match value {
                    "table" => EntryKind::Table,
                    "perm" => EntryKind::Perm,
                    "presentation" => EntryKind::Presentation,
                    _ => return Err(format_err(source, n, format!("unknown kind `{value}`"))),
                })
            }
            "order" => {
                let v = value
                    .parse::<usize>()
                    .ok()
                    .filter(|&v| v > 0)
                    .ok_or_else(|| format_err(source, n, format!("bad order `{value}`")))?;
                order = Some(v);
            }
            "degree" => {
                degree = Some(
                    value
                        .parse::<usize>()
                        .map_err(|_| format_err(source, n, format!("bad degree `{value}`")))?,
                )
            }
            "gen" => generators.push(parse_indices(source, n, value)?),
            "pres" => pres = Some(value.to_string()),
            other => return Err(format_err(source, n, format!("unknown key `{other}`"))),
        }
    }

    let Some((line, label)) = label else {
        return Ok(None);
    };
    let kind = kind.ok_or_else(|| format_err(source, line, format!("entry `{label}` has no `kind:`")))?;
    let order = order.ok_or_else(|| format_err(source, line, format!("entry `{label}` has no `order:`")))?;
    let payload = match kind {
        EntryKind::Table => {
            if rows.len() != order {
                return Err(Error::OrderMismatch {
                    label,
                    declared: order,
                    actual: rows.len(),
                });
            }
            if let Some(r) = rows.iter().position(|r| r.len() != order) {
                return Err(format_err(
                    source,
                    last_line,
                    format!("row {r} of `{label}` has {} entries, expected {order}", rows[r].len()),
                ));
            }
            Payload::Table(rows)
        }
        EntryKind::Perm => {
            let degree = degree.ok_or_else(|| format_err(source, line, format!("perm entry `{label}` has no `degree:`")))?;
            if let Some(g) = generators.iter().find(|g| g.len() != degree) {
                return Err(format_err(
                    source,
                    line,
                    format!("generator of `{label}` has {} points, expected {degree}", g.len()),
                ));
            }
            Payload::Perm { degree, generators }
        }
        EntryKind::Presentation => {
            let text = pres.ok_or_else(|| format_err(source, line, format!("entry `{label}` has no `pres:`")))?;
            presentation::parse(&text)?;
            Payload::Presentation(text)
        }
    };
    Ok(Some(CatalogEntry {
        label,
        kind,
        order,
        payload,
        description: (!description.is_empty()).then(|| description.join("\n")),
        source: source.to_string(),
        line,
        group: OnceLock::new(),
    }))
}

/// Isomorphism invariants; equal for isomorphic groups.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fingerprint {
    pub order: usize,
    pub abelian: bool,
    /// `(element order, count)` pairs.
    pub order_histogram: Vec<(usize, usize)>,
    pub center_size: usize,
    pub cent_count: usize,
    pub beta_sizes: Vec<usize>,
    pub class_sizes: Vec<usize>,
}

pub fn fingerprint(g: &FiniteGroup) -> Fingerprint {
    let mut hist: BTreeMap<usize, usize> = BTreeMap::new();
    for o in g.element_orders() {
        *hist.entry(o).or_insert(0) += 1;
    }
    let p = beta_partition(g);
    let mut beta_sizes = p.sizes();
    beta_sizes.sort_unstable();
    let mut class_sizes: Vec<usize> = g.conjugacy_classes().iter().map(Vec::len).collect();
    class_sizes.sort_unstable();
    Fingerprint {
        order: g.order(),
        abelian: p.class_count() == 1,
        order_histogram: hist.into_iter().collect(),
        center_size: p.center().len(),
        cent_count: p.class_count(),
        beta_sizes,
        class_sizes,
    }
}

/// For each group, the label of an earlier isomorphic group, if any.
pub fn dedup(groups: &[(String, FiniteGroup)]) -> Result<Vec<Option<String>>> {
    let prints: Vec<Fingerprint> = groups.par_iter().map(|(_, g)| fingerprint(g)).collect();
    let mut seen: HashMap<&Fingerprint, Vec<usize>> = HashMap::new();
    let mut out = vec![None; groups.len()];
    for (i, print) in prints.iter().enumerate() {
        let bucket = seen.entry(print).or_default();
        for &j in bucket.iter() {
            if is_isomorphic(&groups[j].1, &groups[i].1)? {
                out[i] = Some(groups[j].0.clone());
                break;
            }
        }
        if out[i].is_none() {
            bucket.push(i);
        }
    }
    Ok(out)
}

/// Reduced regular 2-groups grouped by degree, labels in natural order.
pub fn table1_search(groups: &[(String, FiniteGroup)]) -> Vec<(usize, Vec<String>)> {
    let hits: Vec<(usize, String)> = groups
        .par_iter()
        .filter_map(|(label, g)| {
            if g.is_abelian() || g.is_p_group() != Some(PGroup::Prime(2)) {
                return None;
            }
            let n = beta_partition(g).regular_degree()?;
            is_reduced_regular(g).ok()?.then(|| (n, label.clone()))
        })
        .collect();
    let mut rows: BTreeMap<usize, Vec<String>> = BTreeMap::new();
    for (n, label) in hits {
        rows.entry(n).or_default().push(label);
    }
    rows.into_iter()
        .map(|(n, mut labels)| {
            labels.sort_by(|a, b| natural_cmp(a, b));
            (n, labels)
        })
        .collect()
}

/// Compares strings treating digit runs as numbers, so `[32,9] < [32,10]`.
pub fn natural_cmp(a: &str, b: &str) -> Ordering {
    let (mut a, mut b) = (a.as_bytes(), b.as_bytes());
    loop {
        match (a.first(), b.first()) {
            (None, None) => return Ordering::Equal,
            (None, Some(_)) => return Ordering::Less,
            (Some(_), None) => return Ordering::Greater,
            (Some(x), Some(y)) if x.is_ascii_digit() && y.is_ascii_digit() => {
                let da = a.iter().take_while(|c| c.is_ascii_digit()).count();
                let db = b.iter().take_while(|c| c.is_ascii_digit()).count();
                let (na, nb) = (&a[..da], &b[..db]);
                let trim = |s: &[u8]| -> usize { s.iter().take_while(|&&c| c == b'0').count() };
                let (ta, tb) = (&na[trim(na)..], &nb[trim(nb)..]);
                let ord = ta.len().cmp(&tb.len()).then_with(|| ta.cmp(tb)).then_with(|| da.cmp(&db));
                if ord != Ordering::Equal {
                    return ord;
                }
                a = &a[da..];
                b = &b[db..];
            }
            (Some(x), Some(y)) => {
                if x != y {
                    return x.cmp(y);
                }
                a = &a[1..];
                b = &b[1..];
            }
        }
    }
}

/// Catalogs compiled into the library, by file name.
pub const SHIPPED: &[(&str, &str)] = &[
    ("small.cat", include_str!("../catalogs/small.cat")),
    ("order8.cat", include_str!("../catalogs/order8.cat")),
    ("order16.cat", include_str!("../catalogs/order16.cat")),
    ("order32.cat", include_str!("../catalogs/order32.cat")),
    ("order64.cat", include_str!("../catalogs/order64.cat")),
    ("odd.cat", include_str!("../catalogs/odd.cat")),
    ("perm/order8.cat", include_str!("../catalogs/perm/order8.cat")),
    ("perm/order16.cat", include_str!("../catalogs/perm/order16.cat")),
    ("perm/order32.cat", include_str!("../catalogs/perm/order32.cat")),
    ("perm/order64.cat", include_str!("../catalogs/perm/order64.cat")),
];

/// A shipped catalog by file name; the `.cat` suffix is optional.
pub fn shipped(name: &str) -> Option<Catalog> {
    let name = name.strip_suffix(".cat").unwrap_or(name);
    SHIPPED
        .iter()
        .find(|(n, _)| n.strip_suffix(".cat") == Some(name))
        .map(|(n, text)| parse_catalog(text, n).expect("shipped catalogs are well formed"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn table_entry() {
        let c = parse_catalog("name: C2\nkind: table\norder: 2\n0 1\n1 0\n", "t").unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c.entries[0].group().unwrap().order(), 2);
    }

    #[test]
    fn order_mismatch_on_short_table() {
        let mut text = String::from("name: bad\nkind: table\norder: 8\n");
        for i in 0..6 {
            let row: Vec<String> = (0..6).map(|j| ((i + j) % 6).to_string()).collect();
            text.push_str(&row.join(" "));
            text.push('\n');
        }
        assert!(matches!(
            parse_catalog(&text, "t"),
            Err(Error::OrderMismatch { declared: 8, actual: 6, .. })
        ));
    }

    #[test]
    fn lazy_order_mismatch() {
        let c = parse_catalog("name: x\nkind: presentation\norder: 6\npres: < a | a^5 >\n", "t").unwrap();
        assert!(matches!(
            c.entries[0].group(),
            Err(Error::OrderMismatch { declared: 6, actual: 5, .. })
        ));
    }

    #[test]
    fn format_errors() {
        let e = parse_catalog("name: x\nkind: blob\norder: 2\n", "f.cat").unwrap_err();
        assert!(matches!(e, Error::Format { line: 2, .. }));
        let e = parse_catalog("kind: perm\n", "f.cat").unwrap_err();
        assert!(matches!(e, Error::Format { line: 1, .. }));
        let dup = "name: a\nkind: presentation\norder: 2\npres: < x | x^2 >\n\nname: a\nkind: presentation\norder: 2\npres: < y | y^2 >\n";
        assert!(matches!(parse_catalog(dup, "f"), Err(Error::DuplicateLabel(_))));
    }

    #[test]
    fn annotations() {
        let c = shipped("order8").unwrap();
        assert_eq!(c.table1.get(&6).unwrap(), &vec!["[8,3]".to_string(), "[8,4]".to_string()]);
        assert_eq!(c.len(), 5);
        assert!(c.get("[8,4]").unwrap().description.as_deref() == Some("Q8"));
    }

    #[test]
    fn fingerprints() {
        let d8 = families::dihedral(4).unwrap();
        let q8 = families::generalized_quaternion(8).unwrap();
        assert_ne!(fingerprint(&d8), fingerprint(&q8));
        let c4 = families::cyclic(4).unwrap();
        let k4 = families::elementary_abelian(2, 2).unwrap();
        assert_ne!(fingerprint(&c4), fingerprint(&k4));
        let d8p = presentation::enumerate(
            &presentation::parse("< a,b | a^4, b^2, b*a*b^-1 = a^-1 >").unwrap(),
            100,
        )
        .unwrap();
        assert_eq!(fingerprint(&d8), fingerprint(&d8p));
    }

    #[test]
    fn dedup_flags_second_copy() {
        let groups = vec![
            ("D8".to_string(), families::dihedral(4).unwrap()),
            ("Q8".to_string(), families::generalized_quaternion(8).unwrap()),
            ("D8 again".to_string(), families::dihedral(4).unwrap()),
        ];
        assert_eq!(dedup(&groups).unwrap(), vec![None, None, Some("D8".to_string())]);
    }

    #[test]
    fn natural_order() {
        assert_eq!(natural_cmp("[32,9]", "[32,10]"), Ordering::Less);
        assert_eq!(natural_cmp("[8,3]", "[16,1]"), Ordering::Less);
        assert_eq!(natural_cmp("a", "a"), Ordering::Equal);
        assert_eq!(natural_cmp("dihedral:4", "dihedral:12"), Ordering::Less);
    }
}
