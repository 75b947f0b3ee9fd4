//! Executable checks of statements about centralizers and regularity.
//!
//! Each check takes a group and returns a [`CheckResult`]: whether its
//! hypotheses apply, whether the conclusion held, and a witness when it did
//! not. Failures are data, not panics, so the same code doubles as a
//! falsifier on user catalogs. The two conjecture scans (`tconj`, `lco`) are
//! reported like checks but never make a suite fail.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rayon::prelude::*;

use crate::analysis::{beta_partition, h_set, maximal_centralizers_of, order_mod, BetaPartition};
use crate::arith;
use crate::catalog::natural_cmp;
use crate::error::{Error, Result};
use crate::families;
use crate::group::{Element, FiniteGroup, Subgroup};
use crate::lattice;

/// Check ids in canonical order.
pub const CHECKS: &[&str] = &[
    "be0",
    "be",
    "ba",
    "ereg1",
    "ereg2",
    "creg",
    "ccreg_c2c2",
    "ccreg_c2cubed",
    "ncen",
    "preg",
    "bound",
    "big",
    "lg",
    "lg1",
    "lg2",
    "mg",
    "pq_index",
    "cmg",
    "pp",
    "big1",
];

/// Conjecture scans: reported, never asserted.
pub const CONJECTURES: &[&str] = &["tconj", "lco"];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub check: String,
    pub label: String,
    pub order: usize,
    /// Whether the hypotheses held. Inapplicable checks pass vacuously.
    pub applicable: bool,
    pub passed: bool,
    /// Elements (or computed values) explaining a failure; empty on success.
    pub witness: Vec<usize>,
    /// Measured quantities, or the reason a check did not apply.
    pub details: String,
}

impl CheckResult {
    pub fn is_conjecture(&self) -> bool {
        CONJECTURES.contains(&self.check.as_str())
    }

    /// An applicable, non-conjecture check that failed.
    pub fn is_failure(&self) -> bool {
        self.applicable && !self.passed && !self.is_conjecture()
    }

    pub fn status(&self) -> &'static str {
        match (self.applicable, self.passed) {
            (false, _) => "n/a",
            (true, true) => "pass",
            (true, false) if self.is_conjecture() => "flag",
            (true, false) => "FAIL",
        }
    }

    pub fn to_key_value(&self) -> String {
        let witness = self
            .witness
            .iter()
            .map(|w| w.to_string())
            .collect::<Vec<_>>()
            .join(",");
        format!(
            "check={} label={} order={} applicable={} passed={} witness={} details={}",
            self.check, self.label, self.order, self.applicable, self.passed, witness, self.details
        )
    }
}

struct Outcome {
    applicable: bool,
    passed: bool,
    witness: Vec<usize>,
    details: String,
}

fn na(reason: impl Into<String>) -> Outcome {
    Outcome {
        applicable: false,
        passed: true,
        witness: Vec::new(),
        details: reason.into(),
    }
}

fn verdict(passed: bool, witness: Vec<usize>, details: impl Into<String>) -> Outcome {
    Outcome {
        applicable: true,
        passed,
        witness: if passed { Vec::new() } else { witness },
        details: details.into(),
    }
}

/// Quantities shared by all checks on one group.
struct Facts<'a> {
    g: &'a FiniteGroup,
    p: BetaPartition,
    center: Subgroup,
    index: usize,
    abelian: bool,
    regular: Option<usize>,
    induced: Option<usize>,
    quotient: FiniteGroup,
}

impl<'a> Facts<'a> {
    fn new(g: &'a FiniteGroup) -> Facts<'a> {
        let p = beta_partition(g);
        let center = Subgroup::from_set(g, p.center().iter().copied()).expect("the center is a subgroup");
        let quotient = g.quotient(&center).expect("the center is normal");
        Facts {
            g,
            index: g.order() / center.size(),
            abelian: p.class_count() == 1,
            regular: p.regular_degree(),
            induced: p.induced_degree(),
            center,
            quotient,
            p,
        }
    }

    /// `Some(p)` when `G/Z(G)` is elementary abelian of exponent `p`.
    fn quotient_elementary_abelian(&self) -> Option<usize> {
        self.quotient.is_elementary_abelian().ok().flatten()
    }

    /// `Some(p)` when every non-trivial element of `G/Z(G)` has order `p`.
    fn quotient_elementary(&self) -> Option<usize> {
        self.quotient.is_elementary_p().ok().flatten()
    }

    fn order_mod(&self, x: Element) -> usize {
        order_mod(self.g, &self.center, x)
    }

    fn maximal_classes(&self) -> Vec<usize> {
        maximal_centralizers_of(&self.p)
            .map(|v| v.into_iter().map(|(i, _)| i).collect())
            .unwrap_or_default()
    }

    fn rep(&self, class: usize) -> Element {
        self.p.class(class)[0]
    }

    /// Whether `C(x) = β(x) ∪ Z(G)` for class `i`.
    fn centralizer_is_h(&self, i: usize) -> bool {
        self.p.centralizer(i).size() == self.p.class(i).len() + self.center.size()
    }

    fn nonabelian_required(&self) -> Option<Outcome> {
        self.abelian.then(|| na("abelian"))
    }
}

fn run(id: &str, f: &Facts) -> Outcome {
    match id {
        "be0" => be0(f),
        "be" => be(f),
        "ba" => ba(f),
        "ereg1" => ereg1(f),
        "ereg2" => ereg2(f),
        "creg" => creg(f),
        "ccreg_c2c2" => ccreg_c2c2(f),
        "ccreg_c2cubed" => ccreg_c2cubed(f),
        "ncen" => ncen(f),
        "preg" => preg(f),
        "bound" => bound(f),
        "big" => big(f),
        "lg" => lg(f),
        "lg1" => lg1(f),
        "lg2" => lg2(f),
        "mg" => mg(f),
        "pq_index" => pq_index(f),
        "cmg" => cmg(f),
        "pp" => pp(f),
        "big1" => big1(f),
        "tconj" => tconj(f),
        "lco" => lco(f),
        _ => unreachable!("check ids are validated before dispatch"),
    }
}

fn be0(f: &Facts) -> Outcome {
    if let Some(o) = f.nonabelian_required() {
        return o;
    }
    let c = f.p.class_count();
    verdict(c >= 4, vec![c], format!("cent_count={c}"))
}

fn be(f: &Facts) -> Outcome {
    let p = match arith::prime_power(f.index) {
        Some((p, 2)) if f.quotient_elementary_abelian() == Some(p) => p,
        _ => return na("G/Z is not C_p x C_p"),
    };
    let c = f.p.class_count();
    verdict(c == p + 2, vec![c], format!("p={p} cent_count={c}"))
}

fn ba(f: &Facts) -> Outcome {
    if let Some(o) = f.nonabelian_required() {
        return o;
    }
    let p = arith::smallest_prime_factor(f.g.order()).expect("non-abelian groups are non-trivial");
    if f.index != p * p * p {
        return na(format!("[G:Z] = {} is not p^3 for p = {p}", f.index));
    }
    let all_p2 = (1..f.p.class_count()).all(|i| f.g.order() / f.p.centralizer(i).size() == p * p);
    let expected = if all_p2 { p * p + p + 2 } else { p * p + 2 };
    let c = f.p.class_count();
    verdict(
        c == expected,
        vec![c, expected],
        format!("p={p} all_index_p2={all_p2} cent_count={c} expected={expected}"),
    )
}

fn ereg1(f: &Facts) -> Outcome {
    // graph regularity from degrees, against "every class is a single coset"
    let degree_regular = {
        let d0 = f.p.degree(0);
        f.g.elements().all(|x| f.p.degree(x) == d0)
    };
    let mut bad = None;
    for x in f.g.elements() {
        let coset = f.g.coset(x, &f.center);
        let mut class = f.p.class(f.p.class_of(x)).to_vec();
        class.sort_unstable();
        if class != coset.members {
            bad = Some(x);
            break;
        }
    }
    let cosets = bad.is_none();
    verdict(
        degree_regular == cosets,
        bad.into_iter().collect(),
        format!("regular={degree_regular} classes_are_cosets={cosets}"),
    )
}

fn ereg2(f: &Facts) -> Outcome {
    let d0 = f.p.degree(0);
    let degree_regular = f.g.elements().all(|x| f.p.degree(x) == d0);
    let c = f.p.class_count();
    verdict(
        degree_regular == (c == f.index),
        vec![c, f.index],
        format!("regular={degree_regular} cent_count={c} index={}", f.index),
    )
}

fn creg(f: &Facts) -> Outcome {
    if let Some(o) = f.nonabelian_required() {
        return o;
    }
    if f.regular.is_none() {
        return na("not regular");
    }
    let e = f.quotient_elementary_abelian();
    verdict(e == Some(2), vec![f.index], format!("quotient_elementary_abelian={e:?}"))
}

fn ccreg_c2c2(f: &Facts) -> Outcome {
    if f.abelian || f.index != 4 || f.quotient_elementary_abelian() != Some(2) {
        return na("G/Z is not C2 x C2");
    }
    verdict(f.regular.is_some(), vec![f.p.class_count()], format!("regular={}", f.regular.is_some()))
}

fn ccreg_c2cubed(f: &Facts) -> Outcome {
    if f.abelian || f.index != 8 || f.quotient_elementary_abelian() != Some(2) {
        return na("G/Z is not C2 x C2 x C2");
    }
    let off = (1..f.p.class_count()).find(|&i| f.g.order() / f.p.centralizer(i).size() != 4);
    let all4 = off.is_none();
    let regular = f.regular.is_some();
    verdict(
        regular == all4,
        off.map(|i| f.rep(i)).into_iter().collect(),
        format!("regular={regular} all_index_4={all4}"),
    )
}

fn order_histogram(g: &FiniteGroup) -> BTreeMap<usize, usize> {
    let mut h = BTreeMap::new();
    for o in g.element_orders() {
        *h.entry(o).or_insert(0) += 1;
    }
    h
}

fn ncen(f: &Facts) -> Outcome {
    if let Some(o) = f.nonabelian_required() {
        return o;
    }
    if f.regular.is_none() {
        return na("not regular");
    }
    let z = f.center.to_group(f.g);
    let z_subgroups: Vec<(usize, BTreeMap<usize, usize>)> = lattice::all_subgroups(&z)
        .iter()
        .map(|s| (s.size(), order_histogram(&s.to_group(&z))))
        .collect();
    for i in 1..f.p.class_count() {
        let c = f.p.centralizer(i);
        let x = f.rep(i);
        if !f.g.is_normal(c) {
            return verdict(false, vec![x], format!("C(x) not normal for x={x}"));
        }
        let q = f.g.quotient(c).expect("normal");
        // both sides are abelian, where order statistics decide isomorphism
        let embeds = q.is_abelian() && {
            let h = order_histogram(&q);
            z_subgroups.iter().any(|(s, hs)| *s == q.order() && *hs == h)
        };
        if !embeds {
            return verdict(false, vec![x], format!("G/C(x) of order {} does not embed in Z(G)", q.order()));
        }
    }
    verdict(true, vec![], format!("classes={}", f.p.class_count() - 1))
}

fn preg(f: &Facts) -> Outcome {
    if let Some(o) = f.nonabelian_required() {
        return o;
    }
    match f.regular {
        None => na("not regular"),
        Some(n) => verdict(!arith::is_prime_power(n), vec![n], format!("degree={n}")),
    }
}

fn bound(f: &Facts) -> Outcome {
    if let Some(o) = f.nonabelian_required() {
        return o;
    }
    let n = match f.regular {
        None => return na("not regular"),
        Some(n) => n,
    };
    let order = f.g.order();
    let ok = n % 2 == 0 && order.is_multiple_of(8) && n + 2 <= order && 3 * order <= 4 * n;
    verdict(ok, vec![n, order], format!("degree={n} order={order}"))
}

/// `G = H × A` with `H` the p-elements and `A` the central elements of order
/// prime to `p`, if both are subgroups of complementary order.
fn sylow_decomposition(f: &Facts, p: usize) -> Option<(Subgroup, Subgroup)> {
    let orders = f.g.element_orders();
    let p_part = f.g.elements().filter(|&x| {
        let o = orders[x];
        o == 1 || arith::prime_power(o).map(|(q, _)| q) == Some(p)
    });
    let h = Subgroup::from_set(f.g, p_part)?;
    let coprime = f.center.members().iter().copied().filter(|&x| !orders[x].is_multiple_of(p));
    let a = Subgroup::from_set(f.g, coprime)?;
    (h.size() * a.size() == f.g.order()).then_some((h, a))
}

fn big(f: &Facts) -> Outcome {
    let order = f.g.order();
    let k = order.trailing_zeros();
    if k < 3 {
        return na(format!("order {order} is not 2^k m with k >= 3"));
    }
    let odd = order >> k;
    let decomposition = sylow_decomposition(f, 2);
    match (f.regular, decomposition) {
        (Some(_), None) => verdict(false, vec![order], "regular but no H x A decomposition"),
        (Some(_), Some((h, a))) => {
            let hg = h.to_group(f.g);
            let h_regular = beta_partition(&hg).regular_degree().is_some();
            if !h_regular || a.size() != odd {
                return verdict(false, vec![h.size(), a.size()], "Sylow 2-subgroup not regular");
            }
            // rebuild with an odd cyclic factor
            if odd == 1 {
                let c3 = families::cyclic(3).expect("small");
                let prod = FiniteGroup::direct_product(f.g, &c3);
                if beta_partition(&prod).regular_degree().is_none() {
                    return verdict(false, vec![order * 3], "G x C3 not regular");
                }
            }
            verdict(true, vec![], format!("H={} A={}", h.size(), a.size()))
        }
        (None, Some((h, a))) => {
            let h_regular = beta_partition(&h.to_group(f.g)).regular_degree().is_some();
            verdict(
                !h_regular,
                vec![h.size(), a.size()],
                format!("not regular, H={} regular={h_regular}", h.size()),
            )
        }
        (None, None) => verdict(true, vec![], "not regular, no H x A decomposition"),
    }
}

fn lg(f: &Facts) -> Outcome {
    if let Some(o) = f.nonabelian_required() {
        return o;
    }
    let maximal = f.maximal_classes();
    for &i in &maximal {
        if h_set(f.g, &f.p, i).is_err() {
            return verdict(false, vec![f.rep(i)], format!("class {i} with Z(G) is not a subgroup"));
        }
    }
    verdict(true, vec![], format!("maximal={}", maximal.len()))
}

/// Elements of `C(x) \ β(x)` for class `i`.
fn centralizer_minus_class<'a>(f: &'a Facts, i: usize) -> impl Iterator<Item = Element> + 'a {
    f.p.centralizer(i)
        .members()
        .iter()
        .copied()
        .filter(move |&y| f.p.class_of(y) != i)
}

fn induced_nonabelian(f: &Facts) -> Option<Outcome> {
    if f.abelian {
        return Some(na("abelian"));
    }
    if f.induced.is_none() {
        return Some(na("not induced regular"));
    }
    None
}

fn lg1(f: &Facts) -> Outcome {
    if let Some(o) = induced_nonabelian(f) {
        return o;
    }
    let targets: Vec<usize> = f
        .maximal_classes()
        .into_iter()
        .filter(|&i| !f.centralizer_is_h(i))
        .collect();
    if targets.is_empty() {
        return na("every maximal centralizer equals its H");
    }
    for &i in &targets {
        if !centralizer_minus_class(f, i).any(|y| arith::is_prime(f.order_mod(y))) {
            return verdict(false, vec![f.rep(i)], format!("no prime coset order in class {i}"));
        }
    }
    verdict(true, vec![], format!("classes={}", targets.len()))
}

fn lg2(f: &Facts) -> Outcome {
    if let Some(o) = induced_nonabelian(f) {
        return o;
    }
    let mut tested = 0;
    for i in f.maximal_classes() {
        let witness = centralizer_minus_class(f, i)
            .map(|y| f.order_mod(y))
            .find(|&o| o != 2 && arith::is_prime(o));
        let Some(p) = witness else { continue };
        tested += 1;
        if let Some(&w) = f.p.class(i).iter().find(|&&w| f.order_mod(w) != p) {
            return verdict(false, vec![f.rep(i), w], format!("H/Z not elementary {p}-group"));
        }
    }
    if tested == 0 {
        return na("no odd prime coset order in a maximal centralizer");
    }
    verdict(true, vec![], format!("classes={tested}"))
}

fn mg(f: &Facts) -> Outcome {
    if let Some(o) = induced_nonabelian(f) {
        return o;
    }
    let pp = arith::prime_power(f.index);
    verdict(pp.is_some(), vec![f.index], format!("index={}", f.index))
}

fn pq_index(f: &Facts) -> Outcome {
    if let Some(o) = induced_nonabelian(f) {
        return o;
    }
    let (p, q) = match arith::prime_power(f.index) {
        Some((p, q)) if arith::is_prime(q as usize) => (p, q),
        _ => return na(format!("index {} is not p^q with q prime", f.index)),
    };
    let z = f.center.size();
    let elementary = f.quotient_elementary() == Some(p);
    let bad = (1..f.p.class_count()).find(|&i| f.p.class(i).len() != (p - 1) * z);
    verdict(
        elementary && bad.is_none(),
        bad.map(|i| f.rep(i)).into_iter().collect(),
        format!("p={p} q={q} elementary={elementary}"),
    )
}

fn cmg(f: &Facts) -> Outcome {
    if let Some(o) = induced_nonabelian(f) {
        return o;
    }
    if f.g.order().is_multiple_of(2) {
        return na("even order");
    }
    if (1..f.p.class_count()).any(|i| f.centralizer_is_h(i)) {
        return na("some C(x) equals beta(x) with Z(G)");
    }
    let e = f.quotient_elementary();
    verdict(e.is_some(), vec![f.index], format!("quotient_elementary={e:?}"))
}

fn pp(f: &Facts) -> Outcome {
    if f.abelian {
        return na("abelian");
    }
    match arith::prime_power(f.index) {
        Some((p, 2)) if f.quotient_elementary_abelian() == Some(p) => verdict(
            f.induced.is_some(),
            vec![f.index],
            format!("p={p} induced_regular={}", f.induced.is_some()),
        ),
        _ => na("G/Z is not C_p x C_p"),
    }
}

fn big1(f: &Facts) -> Outcome {
    if f.abelian {
        return na("abelian");
    }
    let order = f.g.order();
    match f.induced {
        Some(_) => {
            let Some((p, _)) = arith::prime_power(f.index) else {
                return verdict(false, vec![f.index], "G/Z is not a p-group");
            };
            let Some((h, a)) = sylow_decomposition(f, p) else {
                return verdict(false, vec![p], format!("no Sylow {p} decomposition"));
            };
            let hg = h.to_group(f.g);
            if beta_partition(&hg).induced_degree().is_none() {
                return verdict(false, vec![h.size()], "Sylow factor not induced regular");
            }
            // rebuild: a p-group times a cyclic group of another prime order
            if a.size() == 1 {
                let q = if p == 2 { 3 } else { 2 };
                let prod = FiniteGroup::direct_product(f.g, &families::cyclic(q).expect("small"));
                if beta_partition(&prod).induced_degree().is_none() {
                    return verdict(false, vec![order * q], format!("G x C{q} not induced regular"));
                }
            }
            verdict(true, vec![], format!("p={p} H={} A={}", h.size(), a.size()))
        }
        None => {
            for (p, _) in arith::factorize(order) {
                if let Some((h, a)) = sylow_decomposition(f, p) {
                    let hg = h.to_group(f.g);
                    if !hg.is_abelian() && beta_partition(&hg).induced_degree().is_some() {
                        return verdict(false, vec![p, h.size(), a.size()], "decomposes with induced regular H");
                    }
                }
            }
            verdict(true, vec![], "not induced regular, no decomposition")
        }
    }
}

fn tconj(f: &Facts) -> Outcome {
    if let Some(o) = f.nonabelian_required() {
        return o;
    }
    match f.regular {
        None => na("not regular"),
        Some(n) => verdict(!arith::is_prime(n), vec![n], format!("degree={n}")),
    }
}

fn lco(f: &Facts) -> Outcome {
    if let Some(o) = induced_nonabelian(f) {
        return o;
    }
    let e = f.quotient_elementary();
    verdict(
        e.is_some(),
        vec![f.index],
        format!("index={} quotient_elementary={e:?} regular={}", f.index, f.regular.is_some()),
    )
}

fn is_known(id: &str) -> bool {
    CHECKS.contains(&id) || CONJECTURES.contains(&id)
}

/// Runs one check on one group.
pub fn check(id: &str, label: &str, g: &FiniteGroup) -> Result<CheckResult> {
    if !is_known(id) {
        return Err(Error::InvalidParameter(format!("unknown check `{id}`")));
    }
    let facts = Facts::new(g);
    Ok(result(id, label, &facts))
}

fn result(id: &str, label: &str, facts: &Facts) -> CheckResult {
    let o = run(id, facts);
    CheckResult {
        check: id.to_string(),
        label: label.to_string(),
        order: facts.g.order(),
        applicable: o.applicable,
        passed: o.passed,
        witness: o.witness,
        details: o.details,
    }
}

/// Runs `ids` (every check and conjecture when empty) over labeled groups.
/// Output is sorted by order, then label (natural order), then check id.
pub fn run_suite(groups: &[(String, FiniteGroup)], ids: &[&str]) -> Result<Vec<CheckResult>> {
    let ids: Vec<&str> = if ids.is_empty() {
        CHECKS.iter().chain(CONJECTURES).copied().collect()
    } else {
        ids.to_vec()
    };
    if let Some(bad) = ids.iter().find(|id| !is_known(id)) {
        return Err(Error::InvalidParameter(format!("unknown check `{bad}`")));
    }
    let mut out: Vec<CheckResult> = groups
        .par_iter()
        .flat_map_iter(|(label, g)| {
            let facts = Facts::new(g);
            ids.iter().map(|id| result(id, label, &facts)).collect::<Vec<_>>()
        })
        .collect();
    out.sort_by(|a, b| {
        a.order
            .cmp(&b.order)
            .then_with(|| natural_cmp(&a.label, &b.label))
            .then_with(|| a.check.cmp(&b.check))
    });
    Ok(out)
}

/// Whether any applicable non-conjecture check failed.
pub fn suite_failed(results: &[CheckResult]) -> bool {
    results.iter().any(CheckResult::is_failure)
}

/// Regular groups of prime degree (expected: none).
pub fn scan_conjecture_tconj(groups: &[(String, FiniteGroup)]) -> Vec<CheckResult> {
    run_suite(groups, &["tconj"]).expect("known id")
}

/// Status of the elementary-quotient conjecture per induced regular group.
pub fn scan_conjecture_lco(groups: &[(String, FiniteGroup)]) -> Vec<CheckResult> {
    run_suite(groups, &["lco"]).expect("known id")
}

/// Plain-text table plus a summary line.
pub fn format_table(results: &[CheckResult]) -> String {
    let width = results.iter().map(|r| r.label.len()).max().unwrap_or(5).max(5);
    let mut out = String::new();
    let _ = writeln!(out, "{:>5}  {:<width$}  {:<14} {:<5} details", "order", "group", "check", "status");
    for r in results {
        let _ = writeln!(
            out,
            "{:>5}  {:<width$}  {:<14} {:<5} {}",
            r.order,
            r.label,
            r.check,
            r.status(),
            r.details
        );
    }
    let _ = writeln!(out, "{}", summary(results));
    out
}

pub fn summary(results: &[CheckResult]) -> String {
    let applicable = results.iter().filter(|r| r.applicable).count();
    let failed = results.iter().filter(|r| r.is_failure()).count();
    let flagged = results
        .iter()
        .filter(|r| r.applicable && !r.passed && r.is_conjecture())
        .count();
    format!(
        "{} results, {applicable} applicable, {failed} failed, {flagged} conjecture flags",
        results.len()
    )
}

/// The family instances the suite is routinely run over: dihedral groups of
/// order up to 32, generalized quaternion groups up to 32, `M(2^k)` for
/// `3 <= k <= 6`, Heisenberg groups for p = 3, 5, and each of these times
/// `C_m` for `2 <= m <= 5`.
pub fn family_instances() -> Vec<(String, FiniteGroup)> {
    let mut base: Vec<String> = Vec::new();
    base.extend((3..=16).map(|m| format!("dihedral:{m}")));
    base.extend([8, 16, 32].map(|n| format!("quaternion:{n}")));
    base.extend([8, 16, 32, 64].map(|n| format!("M:{n}")));
    base.extend([3, 5].map(|p| format!("heisenberg:{p}")));
    let mut specs = base.clone();
    for b in &base {
        specs.extend((2..=5).map(|m| format!("{b} x cyclic:{m}")));
    }
    specs
        .into_iter()
        .map(|s| {
            let g = families::from_spec(&s).expect("documented family parameters are valid");
            (s, g)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn one(id: &str, spec: &str) -> CheckResult {
        check(id, spec, &families::from_spec(spec).unwrap()).unwrap()
    }

    #[test]
    fn creg_on_d8() {
        let r = one("creg", "dihedral:4");
        assert!(r.applicable && r.passed && r.witness.is_empty());
    }

    #[test]
    fn ccreg_on_modular() {
        let r = one("ccreg_c2c2", "M:16");
        assert!(r.applicable && r.passed);
    }

    #[test]
    fn inapplicable_checks_pass_vacuously() {
        let r = one("creg", "dihedral:3");
        assert!(!r.applicable && r.passed);
        assert_eq!(r.status(), "n/a");
        assert!(!one("be0", "cyclic:4").applicable);
    }

    #[test]
    fn be_and_pp_on_heisenberg() {
        let r = one("be", "heisenberg:5");
        assert!(r.applicable && r.passed, "{r:?}");
        assert!(one("pp", "heisenberg:3").passed);
        assert!(one("pq_index", "heisenberg:3").passed);
    }

    #[test]
    fn ba_on_dihedral_16() {
        // [G:Z] = 8 with an index-2 centralizer, so |Cent| = 6
        let r = one("ba", "dihedral:8");
        assert!(r.applicable && r.passed, "{r:?}");
        assert!(r.details.contains("cent_count=6"));
    }

    #[test]
    fn big_forward_and_rebuild() {
        let r = one("big", "dihedral:4 x cyclic:3");
        assert!(r.applicable && r.passed, "{r:?}");
        assert!(one("big", "quaternion:8").passed);
    }

    #[test]
    fn unknown_check_is_an_error() {
        let g = families::cyclic(2).unwrap();
        assert!(check("nope", "c2", &g).is_err());
        assert!(run_suite(&[("c2".into(), g)], &["nope"]).is_err());
    }

    #[test]
    fn suite_is_sorted_and_green_on_small_families() {
        let groups: Vec<(String, FiniteGroup)> = ["quaternion:8", "dihedral:3", "dihedral:4", "heisenberg:3"]
            .iter()
            .map(|s| (s.to_string(), families::from_spec(s).unwrap()))
            .collect();
        let results = run_suite(&groups, &[]).unwrap();
        assert_eq!(results.len(), 4 * (CHECKS.len() + CONJECTURES.len()));
        assert!(!suite_failed(&results), "{}", format_table(&results));
        assert_eq!(results[0].label, "dihedral:3");
        assert!(results.windows(2).all(|w| w[0].order <= w[1].order));
    }
}
