//! Weight enumerators, the Fourier transform on `A^n`, and the MacWilliams
//! identities.
//!
//! Everything is exact. Transforms accumulate, for each output monomial, how
//! often each root `ζ_m^e` contributes; the resulting element of `Z[ζ_m]`
//! must be an integer divisible by the code size, and anything else is an
//! error.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::characters::{raw_pairing, Character};
use crate::codes::{AdditiveCode, PowerGroup, Side};
use crate::cyclotomic::CycInt;
use crate::duality::Duality;
use crate::group::{GroupElement, GroupSpec, Subgroup};
use crate::limits;
use crate::{Error, Result};

/// Number of nonzero coordinates of a word of `A^n`.
pub fn hamming_weight(power: &PowerGroup, x: &GroupElement) -> usize {
    let k = power.base().rank();
    x.coords().chunks(k).filter(|block| block.iter().any(|&c| c != 0)).count()
}

/// `Σ_w c_w X^{n−w} Y^w`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct HammingEnumerator {
    n: usize,
    coeffs: Vec<u64>,
}

impl HammingEnumerator {
    pub fn new(n: usize, coeffs: Vec<u64>) -> Result<Self> {
        if coeffs.len() != n + 1 {
            return Err(Error::Arity {
                expected: n + 1,
                got: coeffs.len(),
            });
        }
        Ok(HammingEnumerator { n, coeffs })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    /// `Σ c_w`, the size of the code.
    pub fn total(&self) -> u64 {
        self.coeffs.iter().sum()
    }
}

impl fmt::Display for HammingEnumerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (w, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let mut vars = Vec::new();
            for (name, e) in [("X", self.n - w), ("Y", w)] {
                match e {
                    0 => {}
                    1 => vars.push(name.to_string()),
                    _ => vars.push(format!("{name}^{e}")),
                }
            }
            let mono = vars.join("·");
            terms.push(match (c, mono.is_empty()) {
                (_, true) => c.to_string(),
                (1, false) => mono,
                _ => format!("{c}·{mono}"),
            });
        }
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join(" + "))
        }
    }
}

/// `Σ_k c_k Π_a Z_a^{k_a}`, keyed by count vectors indexed by the canonical
/// rank of `a ∈ A`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CompleteEnumerator {
    base: GroupSpec,
    n: usize,
    terms: BTreeMap<Vec<u64>, u64>,
}

impl CompleteEnumerator {
    pub fn new(base: &GroupSpec, n: usize, terms: BTreeMap<Vec<u64>, u64>) -> Result<Self> {
        let size = base.cardinality() as usize;
        for counts in terms.keys() {
            if counts.len() != size {
                return Err(Error::Arity {
                    expected: size,
                    got: counts.len(),
                });
            }
            if counts.iter().sum::<u64>() != n as u64 {
                return Err(Error::Internal(format!("monomial degree differs from n = {n}")));
            }
        }
        let terms = terms.into_iter().filter(|(_, c)| *c != 0).collect();
        Ok(CompleteEnumerator {
            base: base.clone(),
            n,
            terms,
        })
    }

    pub fn base(&self) -> &GroupSpec {
        &self.base
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u64>, u64> {
        &self.terms
    }

    pub fn total(&self) -> u64 {
        self.terms.values().sum()
    }

    /// `Z_0 ↦ X`, `Z_a ↦ Y` for `a ≠ 0`.
    pub fn hamming(&self) -> HammingEnumerator {
        let mut coeffs = vec![0u64; self.n + 1];
        for (counts, &c) in &self.terms {
            coeffs[self.n - counts[0] as usize] += c;
        }
        HammingEnumerator { n: self.n, coeffs }
    }
}

impl fmt::Display for CompleteEnumerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let names: Vec<String> = self.base.elements().map(|a| format!("Z_{a}")).collect();
        // Terms in descending count order, so Z_0-heavy monomials lead.
        let terms: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(counts, &c)| {
                let vars: Vec<String> = counts
                    .iter()
                    .enumerate()
                    .filter(|(_, &k)| k > 0)
                    .map(|(i, &k)| if k == 1 { names[i].clone() } else { format!("{}^{k}", names[i]) })
                    .collect();
                if c == 1 {
                    vars.join("·")
                } else {
                    format!("{c}·{}", vars.join("·"))
                }
            })
            .collect();
        f.write_str(&terms.join(" + "))
    }
}

pub fn hwe(code: &AdditiveCode) -> HammingEnumerator {
    let n = code.power().n();
    let mut coeffs = vec![0u64; n + 1];
    for x in code.subgroup().elements() {
        coeffs[hamming_weight(code.power(), x)] += 1;
    }
    HammingEnumerator { n, coeffs }
}

fn count_vector(power: &PowerGroup, x: &GroupElement) -> Vec<u64> {
    let base = power.base();
    let mut counts = vec![0u64; base.cardinality() as usize];
    for block in power.blocks(x) {
        counts[base.index_of(&block) as usize] += 1;
    }
    counts
}

pub fn cwe(code: &AdditiveCode) -> CompleteEnumerator {
    let mut terms = BTreeMap::new();
    for x in code.subgroup().elements() {
        *terms.entry(count_vector(code.power(), x)).or_insert(0) += 1;
    }
    CompleteEnumerator {
        base: code.power().base().clone(),
        n: code.power().n(),
        terms,
    }
}

/// `X ← X + (|A|−1)Y`, `Y ← X − Y`, then exact division by `size_code`, the
/// order of the code whose enumerator is given.
pub fn mw_hamming_transform(e: &HammingEnumerator, size_a: u64, size_code: u64) -> Result<HammingEnumerator> {
    let n = e.n;
    let binom = binomials(n);
    let q1: BigInt = BigInt::from(size_a) - 1;
    let mut out = vec![BigInt::zero(); n + 1];
    for (w, &c) in e.coeffs.iter().enumerate() {
        if c == 0 {
            continue;
        }
        // (X + (q−1)Y)^{n−w} (X − Y)^w
        let first: Vec<BigInt> = (0..=n - w).map(|j| &binom[n - w][j] * q1.pow(j as u32)).collect();
        let second: Vec<BigInt> = (0..=w)
            .map(|j| if j % 2 == 0 { binom[w][j].clone() } else { -binom[w][j].clone() })
            .collect();
        for (i, x) in first.iter().enumerate() {
            for (j, y) in second.iter().enumerate() {
                out[i + j] += x * y * BigInt::from(c);
            }
        }
    }
    let divisor = BigInt::from(size_code);
    let coeffs = out
        .into_iter()
        .map(|v| {
            if !(&v % &divisor).is_zero() {
                return Err(Error::NotDivisible(format!("{v} by {size_code}")));
            }
            (v / &divisor)
                .to_u64()
                .ok_or_else(|| Error::Internal("negative enumerator coefficient".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    HammingEnumerator::new(n, coeffs)
}

fn binomials(n: usize) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = vec![vec![BigInt::from(1)]];
    for i in 1..=n {
        let prev = &rows[i - 1];
        let row = (0..=i)
            .map(|j| {
                let left = if j > 0 { prev[j - 1].clone() } else { BigInt::zero() };
                let right = if j < i { prev[j].clone() } else { BigInt::zero() };
                left + right
            })
            .collect();
        rows.push(row);
    }
    rows
}

/// Which side of the complete MacWilliams identity is being applied.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    /// From the enumerator of a dual code back to the code:
    /// `𝔷_b ← Σ_a Φ(b, a) Z_a` (left) or `Σ_a Φ(a, b) Z_a` (right).
    FromDual,
    /// From a code to its dual:
    /// `Z_b ← Σ_a Φ(a, b) 𝔷_a` (left) or `Σ_a Φ(b, a) 𝔷_a` (right).
    ToDual,
}

/// Applies the complete MacWilliams substitution and divides by the size of
/// the code whose enumerator is given.
pub fn mw_complete_transform(
    e: &CompleteEnumerator,
    phi: &Duality,
    direction: Direction,
    side: Side,
) -> Result<CompleteEnumerator> {
    let base = &e.base;
    if phi.parent() != base {
        return Err(Error::ParentMismatch);
    }
    let size = base.cardinality() as usize;
    let work = (e.total() as u128).saturating_mul((size as u128).saturating_pow(e.n as u32));
    limits::check_scan("complete transform", work)?;
    let m = base.exponent() as usize;
    let elements: Vec<GroupElement> = base.elements().collect();
    // exps[b][a] is the exponent of the root replacing b's variable at a.
    let forward = matches!((direction, side), (Direction::FromDual, Side::Left) | (Direction::ToDual, Side::Right));
    let exps: Vec<Vec<usize>> = elements
        .iter()
        .map(|b| {
            elements
                .iter()
                .map(|a| {
                    let (x, y) = if forward { (b, a) } else { (a, b) };
                    phi.raw_iexp(x.coords(), y.coords()) as usize
                })
                .collect()
        })
        .collect();

    let mut acc: HashMap<Vec<u64>, Vec<u64>> = HashMap::new();
    for (counts, &coeff) in &e.terms {
        let mut start = vec![0u64; m];
        start[0] = coeff;
        let mut partial: HashMap<Vec<u64>, Vec<u64>> = HashMap::from([(vec![0u64; size], start)]);
        for (b, &k) in counts.iter().enumerate() {
            for _ in 0..k {
                let mut next: HashMap<Vec<u64>, Vec<u64>> = HashMap::new();
                for (mono, hist) in &partial {
                    for a in 0..size {
                        let mut key = mono.clone();
                        key[a] += 1;
                        let shift = exps[b][a];
                        let slot = next.entry(key).or_insert_with(|| vec![0; m]);
                        for (e, &h) in hist.iter().enumerate() {
                            slot[(e + shift) % m] += h;
                        }
                    }
                }
                partial = next;
            }
        }
        for (mono, hist) in partial {
            let slot = acc.entry(mono).or_insert_with(|| vec![0; m]);
            for (s, h) in slot.iter_mut().zip(hist) {
                *s += h;
            }
        }
    }

    let divisor = BigInt::from(e.total());
    let mut terms = BTreeMap::new();
    for (mono, hist) in acc {
        let counts: Vec<BigInt> = hist.into_iter().map(BigInt::from).collect();
        let value = CycInt::from_root_counts(m as u64, &counts).divide_exact(&divisor)?;
        let int = value
            .as_integer()
            .ok_or_else(|| Error::NotDivisible(format!("coefficient {value} is not an integer")))?;
        let c = int
            .to_u64()
            .ok_or_else(|| Error::Internal("negative enumerator coefficient".into()))?;
        if c != 0 {
            terms.insert(mono, c);
        }
    }
    Ok(CompleteEnumerator {
        base: base.clone(),
        n: e.n,
        terms,
    })
}

/// A polynomial with coefficients in `Z[ζ_m]`, keyed by exponent vectors.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly {
    modulus: u64,
    terms: BTreeMap<Vec<u32>, CycInt>,
}

impl Poly {
    pub fn zero(m: u64) -> Self {
        Poly {
            modulus: m,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(exps: Vec<u32>, coeff: CycInt) -> Self {
        let mut p = Poly::zero(coeff.modulus());
        if !coeff.is_zero() {
            p.terms.insert(exps, coeff);
        }
        p
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, CycInt> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn checked_add(&self, other: &Poly) -> Result<Poly> {
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch(self.modulus, other.modulus));
        }
        let mut out = self.clone();
        for (k, v) in &other.terms {
            let sum = match out.terms.get(k) {
                Some(c) => c + v,
                None => v.clone(),
            };
            if sum.is_zero() {
                out.terms.remove(k);
            } else {
                out.terms.insert(k.clone(), sum);
            }
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Poly) -> Result<Poly> {
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch(self.modulus, other.modulus));
        }
        let mut out = Poly::zero(self.modulus);
        for (k1, v1) in &self.terms {
            for (k2, v2) in &other.terms {
                let len = k1.len().max(k2.len());
                let key: Vec<u32> = (0..len)
                    .map(|i| k1.get(i).copied().unwrap_or(0) + k2.get(i).copied().unwrap_or(0))
                    .collect();
                out = out.checked_add(&Poly::monomial(key, v1 * v2))?;
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &CycInt) -> Result<Poly> {
        let mut out = Poly::zero(self.modulus);
        for (k, v) in &self.terms {
            let prod = v.checked_mul(c)?;
            if !prod.is_zero() {
                out.terms.insert(k.clone(), prod);
            }
        }
        Ok(out)
    }

    pub fn divide_exact(&self, n: &BigInt) -> Result<Poly> {
        let mut out = Poly::zero(self.modulus);
        for (k, v) in &self.terms {
            out.terms.insert(k.clone(), v.divide_exact(n)?);
        }
        Ok(out)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(k, v)| {
                let vars: Vec<String> = k
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(i, &e)| if e == 1 { format!("x{i}") } else { format!("x{i}^{e}") })
                    .collect();
                format!("({v})·{}", vars.join("·"))
            })
            .collect();
        f.write_str(&terms.join(" + "))
    }
}

/// `f̂(π) = Σ_a ⟨π, a⟩ f(a)`; `f` and the result are indexed by canonical
/// rank in `A` and `Â`.
pub fn fourier_transform(group: &GroupSpec, f: &[Poly]) -> Result<Vec<Poly>> {
    transform(group, f, 1)
}

/// `f(a) = |A|^{-1} Σ_π ⟨π, −a⟩ f̂(π)`.
pub fn inverse_fourier_transform(group: &GroupSpec, fhat: &[Poly]) -> Result<Vec<Poly>> {
    let raw = transform(group, fhat, -1)?;
    let size = BigInt::from(group.cardinality());
    raw.iter().map(|p| p.divide_exact(&size)).collect()
}

fn transform(group: &GroupSpec, f: &[Poly], sign: i64) -> Result<Vec<Poly>> {
    let size = group.cardinality() as usize;
    if f.len() != size {
        return Err(Error::Arity {
            expected: size,
            got: f.len(),
        });
    }
    limits::check_scan("Fourier transform", (size as u128) * (size as u128))?;
    let m = group.exponent();
    let elements: Vec<GroupElement> = group.elements().collect();
    elements
        .iter()
        .map(|pi| {
            let mut acc = Poly::zero(m);
            for (a, fa) in elements.iter().zip(f) {
                let e = raw_pairing(group, pi.coords(), a.coords()) as i64;
                acc = acc.checked_add(&fa.scale(&CycInt::root_power(m, sign * e))?)?;
            }
            Ok(acc)
        })
        .collect()
}

/// Checks `Σ_{a∈H} f(a) = |(Â:H)|^{-1} Σ_{π∈(Â:H)} f̂(π)` exactly.
pub fn poisson_check(h: &Subgroup, f: &[Poly]) -> Result<bool> {
    let group = h.parent();
    let m = group.exponent();
    let size = group.cardinality() as usize;
    if f.len() != size {
        return Err(Error::Arity {
            expected: size,
            got: f.len(),
        });
    }
    let mut lhs = Poly::zero(m);
    for a in h.elements() {
        lhs = lhs.checked_add(&f[group.index_of(a) as usize])?;
    }
    let ann = crate::characters::annihilator(h);
    let mut rhs = Poly::zero(m);
    for pi in ann.elements() {
        for (a, fa) in group.elements().zip(f) {
            let e = raw_pairing(group, pi.coords(), a.coords()) as i64;
            rhs = rhs.checked_add(&fa.scale(&CycInt::root_power(m, e))?)?;
        }
    }
    let rhs = rhs.divide_exact(&BigInt::from(ann.order()))?;
    Ok(lhs == rhs)
}

/// `x ↦ X^{n−h(x)} Y^{h(x)}` on `A^n`, with `X, Y` the variables 0 and 1.
pub fn hamming_monomials(power: &PowerGroup) -> Vec<Poly> {
    let m = power.spec().exponent();
    let n = power.n() as u32;
    power
        .spec()
        .elements()
        .map(|x| {
            let w = hamming_weight(power, &x) as u32;
            Poly::monomial(vec![n - w, w], CycInt::one(m))
        })
        .collect()
}

/// `x ↦ Π_i Z_{x_i}` on `A^n`, with `Z_a` the variable of rank `a` in `A`.
pub fn complete_monomials(power: &PowerGroup) -> Vec<Poly> {
    let m = power.spec().exponent();
    power
        .spec()
        .elements()
        .map(|x| {
            let exps = count_vector(power, &x).into_iter().map(|c| c as u32).collect();
            Poly::monomial(exps, CycInt::one(m))
        })
        .collect()
}

/// `X + (|A|−1)Y` at the trivial character and `X − Y` elsewhere.
pub fn ft_hamming_single(group: &GroupSpec, pi: &Character) -> Result<Poly> {
    if pi.parent() != group {
        return Err(Error::ParentMismatch);
    }
    let m = group.exponent();
    let x = Poly::monomial(vec![1, 0], CycInt::one(m));
    let y_coeff = if pi.is_trivial() {
        CycInt::from_int(m, group.cardinality() - 1)
    } else {
        CycInt::from_int(m, -1)
    };
    x.checked_add(&Poly::monomial(vec![0, 1], y_coeff))
}
