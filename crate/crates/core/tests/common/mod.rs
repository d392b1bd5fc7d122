//! Brute-force oracles over plain coordinate vectors.
//!
//! Nothing here calls into the library: groups are order sequences, elements
//! are `Vec<u64>`, automorphisms are row matrices, and every quantity is
//! recomputed straight from its definition.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

pub type Word = Vec<u64>;
pub type Matrix = Vec<Vec<u64>>;

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn exponent(orders: &[u64]) -> u64 {
    orders.iter().fold(1, |l, &d| l / gcd(l, d) * d)
}

pub fn power_orders(orders: &[u64], n: usize) -> Vec<u64> {
    orders.iter().copied().cycle().take(orders.len() * n).collect()
}

/// Lexicographic order, last coordinate fastest.
pub fn elements(orders: &[u64]) -> Vec<Word> {
    let mut out = vec![vec![]];
    for &d in orders {
        out = out
            .into_iter()
            .flat_map(|w: Word| {
                (0..d).map(move |c| {
                    let mut w = w.clone();
                    w.push(c);
                    w
                })
            })
            .collect();
    }
    out
}

pub fn rank_of(orders: &[u64], a: &[u64]) -> usize {
    a.iter().zip(orders).fold(0, |acc, (&c, &d)| acc * d as usize + c as usize)
}

pub fn add(orders: &[u64], a: &[u64], b: &[u64]) -> Word {
    a.iter().zip(b).zip(orders).map(|((x, y), d)| (x + y) % d).collect()
}

/// `aτ`, with row `i` of `τ` the image of generator `i`.
pub fn image(orders: &[u64], tau: &[Vec<u64>], a: &[u64]) -> Word {
    (0..orders.len())
        .map(|j| (0..orders.len()).map(|i| a[i] * tau[i][j]).sum::<u64>() % orders[j])
        .collect()
}

/// Exponent of `ζ_m` in `⟨π_e, a⟩ = Π_i ζ_{d_i}^{e_i a_i}`.
pub fn pairing(orders: &[u64], e: &[u64], a: &[u64]) -> u64 {
    let m = exponent(orders);
    orders.iter().enumerate().map(|(i, &d)| (m / d) * e[i] * a[i]).sum::<u64>() % m
}

/// `Φ_τ(a, b) = ⟨φ_0(aτ), b⟩`.
pub fn form(orders: &[u64], tau: &[Vec<u64>], a: &[u64], b: &[u64]) -> u64 {
    pairing(orders, &image(orders, tau, a), b)
}

/// The coordinatewise extension to `A^n`: the product over blocks.
pub fn form_n(orders: &[u64], tau: &[Vec<u64>], x: &[u64], y: &[u64]) -> u64 {
    let k = orders.len();
    let m = exponent(orders);
    x.chunks(k).zip(y.chunks(k)).map(|(a, b)| form(orders, tau, a, b)).sum::<u64>() % m
}

pub fn left_dual(orders: &[u64], tau: &[Vec<u64>], n: usize, code: &[Word]) -> BTreeSet<Word> {
    elements(&power_orders(orders, n))
        .into_iter()
        .filter(|x| code.iter().all(|c| form_n(orders, tau, x, c) == 0))
        .collect()
}

pub fn right_dual(orders: &[u64], tau: &[Vec<u64>], n: usize, code: &[Word]) -> BTreeSet<Word> {
    elements(&power_orders(orders, n))
        .into_iter()
        .filter(|y| code.iter().all(|c| form_n(orders, tau, c, y) == 0))
        .collect()
}

/// Every row matrix whose rows respect the generator orders and whose map
/// is a bijection.
pub fn automorphisms(orders: &[u64]) -> Vec<Matrix> {
    let k = orders.len();
    let all = elements(orders);
    let admissible: Vec<Vec<Word>> = orders
        .iter()
        .map(|&d| {
            all.iter()
                .filter(|r| r.iter().zip(orders).all(|(&c, &dj)| (c * d) % dj == 0))
                .cloned()
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    let mut rows: Vec<Word> = Vec::with_capacity(k);
    fn rec(orders: &[u64], all: &[Word], admissible: &[Vec<Word>], rows: &mut Vec<Word>, out: &mut Vec<Matrix>) {
        if rows.len() == orders.len() {
            let images: BTreeSet<Word> = all.iter().map(|a| image(orders, rows, a)).collect();
            if images.len() == all.len() {
                out.push(rows.clone());
            }
            return;
        }
        for r in &admissible[rows.len()] {
            rows.push(r.clone());
            rec(orders, all, admissible, rows, out);
            rows.pop();
        }
    }
    rec(orders, &all, &admissible, &mut rows, &mut out);
    out
}

pub fn is_symmetric(orders: &[u64], tau: &[Vec<u64>]) -> bool {
    let all = elements(orders);
    all.iter()
        .all(|a| all.iter().all(|b| form(orders, tau, a, b) == form(orders, tau, b, a)))
}

/// The matrix `σ` with `Φ_σ(a, b) = Φ_τ(b, a)`.
pub fn adjoint(orders: &[u64], tau: &[Vec<u64>]) -> Matrix {
    let all = elements(orders);
    automorphisms(orders)
        .into_iter()
        .find(|s| {
            all.iter()
                .all(|a| all.iter().all(|b| form(orders, s, a, b) == form(orders, tau, b, a)))
        })
        .expect("every duality has an adjoint")
}

/// `Φ_σ(a, b) = Φ_τ(aρ, bρ)` for some automorphism `ρ`.
pub fn congruent(orders: &[u64], auts: &[Matrix], tau: &[Vec<u64>], sigma: &[Vec<u64>]) -> bool {
    let all = elements(orders);
    auts.iter().any(|rho| {
        all.iter().all(|a| {
            let ar = image(orders, rho, a);
            all.iter()
                .all(|b| form(orders, sigma, a, b) == form(orders, tau, &ar, &image(orders, rho, b)))
        })
    })
}

/// The subgroup generated by `gens`.
pub fn span(orders: &[u64], gens: &[Word]) -> BTreeSet<Word> {
    let mut set: BTreeSet<Word> = BTreeSet::new();
    set.insert(vec![0; orders.len()]);
    loop {
        let mut grown = set.clone();
        for x in &set {
            for g in gens {
                grown.insert(add(orders, x, g));
            }
        }
        if grown.len() == set.len() {
            return set;
        }
        set = grown;
    }
}

pub fn weight_distribution(orders: &[u64], n: usize, code: &[Word]) -> Vec<u64> {
    let k = orders.len();
    let mut dist = vec![0u64; n + 1];
    for c in code {
        let w = c.chunks(k).filter(|b| b.iter().any(|&x| x != 0)).count();
        dist[w] += 1;
    }
    dist
}

/// Count vectors (indexed by the rank of a block value) with multiplicities.
pub fn complete_counts(orders: &[u64], n: usize, code: &[Word]) -> BTreeMap<Vec<u64>, u64> {
    let k = orders.len();
    let size: u64 = orders.iter().product();
    let mut out = BTreeMap::new();
    for c in code {
        let mut counts = vec![0u64; size as usize];
        for b in c.chunks(k) {
            counts[rank_of(orders, b)] += 1;
        }
        debug_assert_eq!(counts.iter().sum::<u64>(), n as u64);
        *out.entry(counts).or_insert(0) += 1;
    }
    out
}

fn poly_mul(a: &[i128], b: &[i128]) -> Vec<i128> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// `|C|^{-1} Σ_w A_w (X + (q−1)Y)^{n−w} (X − Y)^w`, as coefficients of
/// `X^{n−i} Y^i`; `None` if a coefficient is not an integer.
pub fn hamming_transform(dist: &[u64], q: u64, size_code: u64) -> Option<Vec<u64>> {
    let n = dist.len() - 1;
    let mut acc = vec![0i128; n + 1];
    for (w, &a) in dist.iter().enumerate() {
        let mut p = vec![1i128];
        for _ in 0..n - w {
            p = poly_mul(&p, &[1, q as i128 - 1]);
        }
        for _ in 0..w {
            p = poly_mul(&p, &[1, -1]);
        }
        for (i, c) in p.iter().enumerate() {
            acc[i] += a as i128 * c;
        }
    }
    acc.into_iter()
        .map(|c| {
            let s = size_code as i128;
            (c % s == 0 && c >= 0).then(|| (c / s) as u64)
        })
        .collect()
}

/// Whether an `n × n` matrix over `F_p` is invertible, by elimination.
pub fn invertible_mod_p(mut m: Vec<Vec<u64>>, p: u64) -> bool {
    let n = m.len();
    let inv = |x: u64| (1..p).find(|y| x * y % p == 1).expect("nonzero residue");
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| m[r][col] % p != 0) else {
            return false;
        };
        m.swap(col, pivot);
        let s = inv(m[col][col] % p);
        for r in 0..n {
            if r != col && m[r][col] % p != 0 {
                let f = m[r][col] * s % p;
                for c in 0..n {
                    m[r][c] = (m[r][c] + p * p - f * m[col][c] % p) % p;
                }
            }
        }
    }
    true
}

/// `(|GL(n, F_q)|, #symmetric members)` by listing every matrix.
pub fn gl_census(n: usize, q: u64) -> (u64, u64) {
    let cells = n * n;
    let total = q.pow(cells as u32);
    let (mut gl, mut sym) = (0, 0);
    for code in 0..total {
        let mut c = code;
        let mut m = vec![vec![0u64; n]; n];
        for cell in 0..cells {
            m[cell / n][cell % n] = c % q;
            c /= q;
        }
        let symmetric = (0..n).all(|i| (0..n).all(|j| m[i][j] == m[j][i]));
        if invertible_mod_p(m, q) {
            gl += 1;
            if symmetric {
                sym += 1;
            }
        }
    }
    (gl, sym)
}

pub fn to_i64(m: &[Vec<u64>]) -> Vec<Vec<i64>> {
    m.iter().map(|r| r.iter().map(|&x| x as i64).collect()).collect()
}
