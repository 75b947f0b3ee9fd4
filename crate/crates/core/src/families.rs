//! Direct table constructions of the standard families, plus the flat
//! `name:arg` mini-grammar the CLI uses to name them.
//!
//! These never go through coset enumeration, so they can serve as the
//! reference side when testing the presentation module.

use crate::arith;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;

/// Largest order a family constructor will build.
pub const FAMILY_ORDER_CAP: usize = 4096;

fn check_cap(n: usize) -> Result<()> {
    if n > FAMILY_ORDER_CAP {
        return Err(Error::TooLarge(n));
    }
    Ok(())
}

fn build(n: usize, mul: impl Fn(usize, usize) -> usize, label: impl Fn(usize) -> String) -> FiniteGroup {
    let mut table = vec![0u32; n * n];
    for i in 0..n {
        for j in 0..n {
            table[i * n + j] = mul(i, j) as u32;
        }
    }
    FiniteGroup::from_raw(n, table, (0..n).map(label).collect())
}

fn power_label(name: &str, k: usize) -> String {
    match k {
        0 => String::new(),
        1 => name.to_string(),
        _ => format!("{name}^{k}"),
    }
}

fn word_label(parts: &[String]) -> String {
    let parts: Vec<&str> = parts.iter().map(String::as_str).filter(|p| !p.is_empty()).collect();
    if parts.is_empty() {
        "e".to_string()
    } else {
        parts.join("")
    }
}

/// `C_n` as addition mod `n`.
pub fn cyclic(n: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::InvalidParameter("cyclic group needs n >= 1".into()));
    }
    check_cap(n)?;
    Ok(build(n, |i, j| (i + j) % n, |i| word_label(&[power_label("a", i)])))
}

/// `(C_p)^k`.
pub fn elementary_abelian(p: usize, k: usize) -> Result<FiniteGroup> {
    if !arith::is_prime(p) || k == 0 {
        return Err(Error::InvalidParameter(format!(
            "elementary abelian group needs a prime and k >= 1, got ({p}, {k})"
        )));
    }
    let n = p
        .checked_pow(k as u32)
        .filter(|&n| n <= FAMILY_ORDER_CAP)
        .ok_or(Error::TooLarge(usize::MAX))?;
    let cp = cyclic(p)?;
    let mut g = cp.clone();
    for _ in 1..k {
        g = FiniteGroup::direct_product(&g, &cp);
    }
    debug_assert_eq!(g.order(), n);
    Ok(g)
}

/// Dihedral group of order `2m`; element `i + m*j` is `r^i s^j`.
pub fn dihedral(m: usize) -> Result<FiniteGroup> {
    if m < 2 {
        return Err(Error::InvalidParameter("dihedral group needs m >= 2".into()));
    }
    check_cap(2 * m)?;
    Ok(build(
        2 * m,
        |x, y| {
            let (a, b) = (x % m, x / m);
            let (c, d) = (y % m, y / m);
            // s r^c = r^-c s
            let rot = if b == 0 { (a + c) % m } else { (a + m - c) % m };
            rot + m * ((b + d) % 2)
        },
        |x| word_label(&[power_label("r", x % m), power_label("s", x / m)]),
    ))
}

/// Generalized quaternion group of order `n = 2^k`, `k >= 3`:
/// `<a, b | a^(n/2), b^2 = a^(n/4), b a b^-1 = a^-1>`. Element `i + (n/2)*j` is `a^i b^j`.
pub fn generalized_quaternion(n: usize) -> Result<FiniteGroup> {
    match arith::prime_power(n) {
        Some((2, k)) if k >= 3 => {}
        _ => {
            return Err(Error::InvalidParameter(format!(
                "quaternion group order must be 2^k with k >= 3, got {n}"
            )))
        }
    }
    check_cap(n)?;
    let m = n / 2;
    Ok(build(
        n,
        |x, y| {
            let (i, j) = (x % m, x / m);
            let (c, d) = (y % m, y / m);
            match (j, d) {
                (0, _) => (i + c) % m + m * d,
                (_, 0) => (i + m - c) % m + m,
                _ => (i + m - c + m / 2) % m,
            }
        },
        |x| word_label(&[power_label("a", x % m), power_label("b", x / m)]),
    ))
}

/// Modular group `M(n)` of order `n = 2^k`, `k >= 3`:
/// `<a, b | a^(n/2), b^2, b a b = a^(n/4 + 1)>`. Element `i + (n/2)*j` is `a^i b^j`.
pub fn modular(n: usize) -> Result<FiniteGroup> {
    match arith::prime_power(n) {
        Some((2, k)) if k >= 3 => {}
        _ => {
            return Err(Error::InvalidParameter(format!(
                "modular group order must be 2^k with k >= 3, got {n}"
            )))
        }
    }
    check_cap(n)?;
    let m = n / 2;
    let t = m / 2 + 1;
    Ok(build(
        n,
        |x, y| {
            let (i, j) = (x % m, x / m);
            let (c, d) = (y % m, y / m);
            // b a^c = a^(t c) b
            let shift = if j == 0 { c } else { (t * c) % m };
            (i + shift) % m + m * ((j + d) % 2)
        },
        |x| word_label(&[power_label("a", x % m), power_label("b", x / m)]),
    ))
}

/// Upper unitriangular 3×3 matrices over `F_p`, `p` an odd prime.
/// Element `x + p*y + p²*z` is the matrix with entries `(1,2) = x`, `(2,3) = y`, `(1,3) = z`.
pub fn heisenberg(p: usize) -> Result<FiniteGroup> {
    if !arith::is_prime(p) || p == 2 {
        return Err(Error::InvalidParameter(format!(
            "heisenberg group needs an odd prime, got {p}"
        )));
    }
    let n = p * p * p;
    check_cap(n)?;
    let split = |e: usize| (e % p, (e / p) % p, e / (p * p));
    Ok(build(
        n,
        |u, v| {
            let (x1, y1, z1) = split(u);
            let (x2, y2, z2) = split(v);
            let x = (x1 + x2) % p;
            let y = (y1 + y2) % p;
            let z = (z1 + z2 + x1 * y2) % p;
            x + p * y + p * p * z
        },
        |e| {
            let (x, y, z) = split(e);
            format!("[{x},{y},{z}]")
        },
    ))
}

/// Builds a group from a family spec such as `dihedral:4`, `elem:2:3` or
/// `dihedral:4 x cyclic:3`.
///
/// Recognized names: `cyclic:n`, `elem:p:k`, `dihedral:m` (order 2m),
/// `quaternion:n`, `M:n` (orders), `heisenberg:p`.
pub fn from_spec(spec: &str) -> Result<FiniteGroup> {
    let factors: Vec<&str> = spec.split_whitespace().filter(|t| *t != "x").collect();
    let tokens = spec.split_whitespace().count();
    if factors.is_empty() || tokens != 2 * factors.len() - 1 {
        return Err(Error::InvalidParameter(format!("malformed family spec `{spec}`")));
    }
    let mut group: Option<FiniteGroup> = None;
    for f in factors {
        let g = single_spec(f)?;
        group = Some(match group {
            None => g,
            Some(acc) => {
                check_cap(acc.order() * g.order())?;
                FiniteGroup::direct_product(&acc, &g)
            }
        });
    }
    Ok(group.expect("at least one factor"))
}

fn single_spec(spec: &str) -> Result<FiniteGroup> {
    let mut parts = spec.split(':');
    let name = parts.next().unwrap_or_default();
    let args: Vec<usize> = parts
        .map(|a| {
            a.parse::<usize>()
                .map_err(|_| Error::InvalidParameter(format!("bad argument `{a}` in `{spec}`")))
        })
        .collect::<Result<_>>()?;
    match (name, args.as_slice()) {
        ("cyclic", &[n]) => cyclic(n),
        ("elem", &[p, k]) => elementary_abelian(p, k),
        ("dihedral", &[m]) => dihedral(m),
        ("quaternion", &[n]) => generalized_quaternion(n),
        ("M", &[n]) => modular(n),
        ("heisenberg", &[p]) => heisenberg(p),
        _ => Err(Error::InvalidParameter(format!("unknown family spec `{spec}`"))),
    }
}
