//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use eo_core::algebra::{Poly, Rational, RationalFunction, Var};
use eo_core::catalan::CatalanTable;
use eo_core::hurwitz::HurwitzTable;
use num_bigint::BigInt;

/// `binom(2m, m)/(m+1)`.
pub fn catalan_number(m: u32) -> BigInt {
    let mut c = BigInt::from(1);
    for k in 0..m {
        c = c * BigInt::from(2 * (2 * k + 1)) / BigInt::from(k + 2);
    }
    c
}

/// Counts gluings of labeled vertices with cyclically ordered half-edges into connected
/// genus-`g` surfaces by trying every perfect matching.
pub fn pairing_count(g: u32, mu: &[u32]) -> u64 {
    let total: u32 = mu.iter().sum();
    if total % 2 == 1 || mu.contains(&0) {
        return 0;
    }
    let h = total as usize;
    let mut vertex = Vec::with_capacity(h);
    let mut next = Vec::with_capacity(h);
    let mut start = 0;
    for (v, &m) in mu.iter().enumerate() {
        for k in 0..m as usize {
            vertex.push(v);
            next.push(start + (k + 1) % m as usize);
        }
        start += m as usize;
    }
    let mut partner = vec![usize::MAX; h];
    let mut count = 0;
    matchings(&mut partner, &mut |pairing| {
        if let Some(genus) = surface_genus(pairing, &next, &vertex, mu.len()) {
            if genus == g as i64 {
                count += 1;
            }
        }
    });
    count
}

fn matchings(partner: &mut Vec<usize>, visit: &mut impl FnMut(&[usize])) {
    let Some(first) = partner.iter().position(|&p| p == usize::MAX) else {
        visit(partner);
        return;
    };
    for other in first + 1..partner.len() {
        if partner[other] == usize::MAX {
            partner[first] = other;
            partner[other] = first;
            matchings(partner, visit);
            partner[first] = usize::MAX;
            partner[other] = usize::MAX;
        }
    }
}

/// Genus from `V − E + F`, or `None` when the gluing is disconnected.
fn surface_genus(partner: &[usize], next: &[usize], vertex: &[usize], n: usize) -> Option<i64> {
    let h = partner.len();
    let mut root: Vec<usize> = (0..n).collect();
    fn find(root: &mut [usize], mut a: usize) -> usize {
        while root[a] != a {
            root[a] = root[root[a]];
            a = root[a];
        }
        a
    }
    for (a, &b) in partner.iter().enumerate() {
        let (ra, rb) = (find(&mut root, vertex[a]), find(&mut root, vertex[b]));
        root[ra] = rb;
    }
    let r0 = find(&mut root, 0);
    if (0..n).any(|v| find(&mut root, v) != r0) {
        return None;
    }
    let mut seen = vec![false; h];
    let mut faces = 0i64;
    for s in 0..h {
        if seen[s] {
            continue;
        }
        faces += 1;
        let mut a = s;
        while !seen[a] {
            seen[a] = true;
            a = next[partner[a]];
        }
    }
    let chi = n as i64 - h as i64 / 2 + faces;
    Some((2 - chi) / 2)
}

/// Bernoulli numbers `B_0..B_n` with `B_1 = −1/2`.
fn bernoulli(n: usize) -> Vec<Rational> {
    let mut b = vec![Rational::one()];
    for m in 1..=n {
        let mut acc = Rational::zero();
        let mut binom = Rational::one();
        for (k, bk) in b.iter().enumerate() {
            acc += &binom * bk;
            binom = binom * Rational::from((m + 1 - k) as i64) / Rational::from((k + 1) as i64);
        }
        b.push(-acc / Rational::from((m + 1) as i64));
    }
    b
}

/// Orbifold Euler characteristic of the moduli space of genus-`g` curves with `n` marked points:
/// `ζ(1−2g)` at `n = 1` for `g ≥ 1`, then `χ_{g,n+1} = (2 − 2g − n) χ_{g,n}`.
pub fn harer_zagier_chi(g: u32, n: u32) -> Rational {
    assert!(2 * g + n > 2);
    let (mut chi, mut k) = if g == 0 {
        (Rational::one(), 3)
    } else {
        let b = bernoulli(2 * g as usize);
        (-&b[2 * g as usize] / Rational::from(2 * g as i64), 1)
    };
    while k < n {
        chi *= Rational::from(2 - 2 * g as i64 - k as i64);
        k += 1;
    }
    chi
}

/// Positive integer vectors of length `n` with entry sum `≤ max_total`.
pub fn bounded_vectors(n: usize, max_total: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 1..=max_total {
        for mut rest in bounded_vectors(n - 1, max_total - first) {
            if rest.len() + 1 == n {
                rest.insert(0, first);
                out.push(rest);
            }
        }
    }
    out
}

/// `Σ_{μ ∈ ℤ₊ⁿ, |μ| ≤ max_total} D_{g,n}(μ) ∏ x_i^{−μ_i}`.
pub fn catalan_laplace(table: &CatalanTable, g: u32, xs: &[f64], max_total: u32) -> f64 {
    bounded_vectors(xs.len(), max_total)
        .iter()
        .filter(|mu| mu.iter().sum::<u32>() % 2 == 0)
        .map(|mu| {
            let d = table.dessin_number(g, mu).unwrap().to_f64();
            d * mu.iter().zip(xs).map(|(&m, &x)| x.powi(-(m as i32))).product::<f64>()
        })
        .sum()
}

/// `t = (z+1)/(z−1)` at the small root `z` of `z + 1/z = x`.
pub fn catalan_t(x: f64) -> f64 {
    let z = (x - (x * x - 4.0).sqrt()) / 2.0;
    (z + 1.0) / (z - 1.0)
}

/// `Σ_{μ ∈ ℤ₊ⁿ, |μ| ≤ max_total} H_{g,n}(μ) e^{−⟨μ, w⟩}`.
pub fn hurwitz_laplace(table: &HurwitzTable, g: u32, ws: &[f64], max_total: u32) -> f64 {
    bounded_vectors(ws.len(), max_total)
        .iter()
        .map(|mu| {
            let h = table.number(g, mu).unwrap().to_f64();
            h * mu.iter().zip(ws).map(|(&m, &w)| (-(m as f64) * w).exp()).product::<f64>()
        })
        .sum()
}

/// `t = 1/(1−z)` where `z e^{−z} = e^{−w}` on the branch through `z = 0`.
pub fn hurwitz_t(w: f64) -> f64 {
    let target = (-w).exp();
    let mut z = target;
    for _ in 0..60 {
        let f = z * (-z).exp() - target;
        let df = (1.0 - z) * (-z).exp();
        z -= f / df;
    }
    1.0 / (1.0 - z)
}

pub fn relative_error(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(f64::MIN_POSITIVE)
}

fn zpoly(c: &[i64]) -> Poly {
    Poly::from_ints(c)
}

/// `z^k`-sparse helper: coefficients given for even powers only.
fn even(c: &[(usize, i64)]) -> Poly {
    let deg = c.iter().map(|(k, _)| *k).max().unwrap_or(0);
    let mut v = vec![0i64; deg + 1];
    for (k, x) in c {
        v[*k] = *x;
    }
    zpoly(&v)
}

/// Closed forms of `S_2..S_4` in `z`.
pub fn printed_catalan_s(m: u32) -> RationalFunction {
    let z2m1 = zpoly(&[-1, 0, 1]);
    match m {
        2 => RationalFunction::new(
            even(&[(4, 9), (6, 1)]),
            zpoly(&[1, 0, -1]).pow(3).scale(&Rational::from(12)),
            Var::Z,
        ),
        3 => RationalFunction::new(
            even(&[(6, 5), (8, 5)]),
            z2m1.pow(6).scale(&Rational::from(2)),
            Var::Z,
        ),
        4 => RationalFunction::new(
            even(&[(8, -4725), (10, -12879), (12, -4524), (14, 36), (16, -9), (18, 1)]),
            z2m1.pow(9).scale(&Rational::from(360)),
            Var::Z,
        ),
        _ => unreachable!(),
    }
    .unwrap()
}

/// Closed forms of `x dS_m/dx` in `z` for `m = 2, 3, 4` on the Lambert curve.
pub fn printed_hurwitz_s_prime(m: u32) -> RationalFunction {
    let one_minus = zpoly(&[1, -1]);
    let minus_one = zpoly(&[-1, 1]);
    match m {
        2 => RationalFunction::new(zpoly(&[0, 0, 0, 4, 0, 1]), one_minus.pow(5).scale(&Rational::from(8)), Var::Z),
        3 => RationalFunction::new(
            zpoly(&[0, 0, 0, 0, -12, -8, -9, 0, -1]),
            minus_one.pow(8).scale(&Rational::from(16)),
            Var::Z,
        ),
        4 => RationalFunction::new(
            zpoly(&[0, 0, 0, 0, 0, 192, 352, 376, 104, 76, 0, 5]),
            one_minus.pow(11).scale(&Rational::from(128)),
            Var::Z,
        ),
        _ => unreachable!(),
    }
    .unwrap()
}
