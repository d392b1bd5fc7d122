//! Exact arithmetic in the cyclotomic integers `Z[ζ_m] = Z[x]/Φ_m(x)`.
//!
//! Every [`CycInt`] is stored in canonical form: the remainder of its
//! representing polynomial modulo `Φ_m`, as exactly `φ(m)` big-integer
//! coefficients. Equality and zero tests are therefore plain coefficient
//! comparisons.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Integer polynomial, coefficients from the constant term upward.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycPoly {
    coeffs: Vec<BigInt>,
}

impl CycPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.len() > 1 && coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        CycPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        CycPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    pub fn mul(&self, other: &CycPoly) -> CycPoly {
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        CycPoly::new(out)
    }

    /// Exact division by a monic polynomial; `None` if a remainder is left.
    pub fn div_exact(&self, divisor: &CycPoly) -> Option<CycPoly> {
        assert!(divisor.is_monic());
        let dd = divisor.degree();
        if self.degree() < dd {
            return self.coeffs.iter().all(|c| c.is_zero()).then(|| CycPoly::from_i64(&[0]));
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); self.degree() - dd + 1];
        for i in (dd..rem.len()).rev() {
            let c = rem[i].clone();
            if c.is_zero() {
                continue;
            }
            quot[i - dd] = c.clone();
            for (j, dj) in divisor.coeffs.iter().enumerate() {
                rem[i - dd + j] -= &c * dj;
            }
        }
        rem.iter().all(|c| c.is_zero()).then(|| CycPoly::new(quot))
    }
}

impl fmt::Display for CycPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let body = match (i, mag.is_one()) {
                (0, _) => mag.to_string(),
                (1, true) => "x".to_string(),
                (1, false) => format!("{mag}x"),
                (_, true) => format!("x^{i}"),
                (_, false) => format!("{mag}x^{i}"),
            };
            terms.push((c.is_negative(), body));
        }
        write_signed_terms(f, &terms)
    }
}

fn write_signed_terms(f: &mut fmt::Formatter<'_>, terms: &[(bool, String)]) -> fmt::Result {
    if terms.is_empty() {
        return f.write_str("0");
    }
    for (k, (neg, body)) in terms.iter().enumerate() {
        match (k, neg) {
            (0, true) => write!(f, "-{body}")?,
            (0, false) => write!(f, "{body}")?,
            (_, true) => write!(f, " - {body}")?,
            (_, false) => write!(f, " + {body}")?,
        }
    }
    Ok(())
}

fn cache() -> &'static RwLock<HashMap<u64, Arc<CycPoly>>> {
    static CACHE: OnceLock<RwLock<HashMap<u64, Arc<CycPoly>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// `Φ_m(x)`, computed as `(x^m − 1) / ∏_{d|m, d<m} Φ_d(x)` and memoized.
pub fn cyclotomic_poly(m: u64) -> Arc<CycPoly> {
    assert!(m >= 1, "cyclotomic polynomial index must be positive");
    if let Some(p) = cache().read().expect("cache poisoned").get(&m) {
        return p.clone();
    }
    let mut numerator = vec![BigInt::zero(); m as usize + 1];
    numerator[0] = BigInt::from(-1);
    numerator[m as usize] = BigInt::one();
    let mut poly = CycPoly::new(numerator);
    for d in (1..m).filter(|d| m % d == 0) {
        poly = poly
            .div_exact(&cyclotomic_poly(d))
            .expect("x^m - 1 is divisible by every Φ_d with d | m");
    }
    let poly = Arc::new(poly);
    // Concurrent fills compute the same value; the first insert wins.
    cache()
        .write()
        .expect("cache poisoned")
        .entry(m)
        .or_insert(poly)
        .clone()
}

/// Euler's totient.
pub fn totient(m: u64) -> u64 {
    (1..=m).filter(|k| k.gcd(&m) == 1).count() as u64
}

/// An element of `Z[ζ_m]` in canonical reduced form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycInt {
    modulus: u64,
    coeffs: Vec<BigInt>,
}

impl CycInt {
    pub fn zero(m: u64) -> Self {
        let phi = cyclotomic_poly(m);
        CycInt {
            modulus: m,
            coeffs: vec![BigInt::zero(); phi.degree()],
        }
    }

    pub fn from_int(m: u64, n: impl Into<BigInt>) -> Self {
        let mut out = CycInt::zero(m);
        out.coeffs[0] = n.into();
        out
    }

    pub fn one(m: u64) -> Self {
        CycInt::from_int(m, 1)
    }

    /// `ζ_m^e`, with `e` taken modulo `m`.
    pub fn root_power(m: u64, e: i64) -> Self {
        let e = e.rem_euclid(m as i64) as usize;
        let mut poly = vec![BigInt::zero(); e + 1];
        poly[e] = BigInt::one();
        CycInt::from_poly(m, poly)
    }

    /// Reduces an arbitrary polynomial in `ζ_m` to canonical form.
    pub fn from_poly(m: u64, mut poly: Vec<BigInt>) -> Self {
        let phi = cyclotomic_poly(m);
        let deg = phi.degree();
        for i in (deg..poly.len()).rev() {
            let c = std::mem::take(&mut poly[i]);
            if c.is_zero() {
                continue;
            }
            for (j, pj) in phi.coeffs()[..deg].iter().enumerate() {
                poly[i - deg + j] -= &c * pj;
            }
        }
        poly.resize(deg, BigInt::zero());
        CycInt {
            modulus: m,
            coeffs: poly,
        }
    }

    /// `Σ_e counts[e] ζ_m^e` for a length-`m` histogram of exponents.
    pub fn from_root_counts(m: u64, counts: &[BigInt]) -> Self {
        assert_eq!(counts.len() as u64, m, "histogram length must equal the modulus");
        CycInt::from_poly(m, counts.to_vec())
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Canonical coefficients against the basis `1, ζ_m, …, ζ_m^{φ(m)−1}`.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// The rational integer this element equals, if it lies in `Z`.
    pub fn as_integer(&self) -> Option<BigInt> {
        self.coeffs[1..]
            .iter()
            .all(|c| c.is_zero())
            .then(|| self.coeffs[0].clone())
    }

    fn check(&self, other: &CycInt) -> Result<()> {
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch(self.modulus, other.modulus));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &CycInt) -> Result<CycInt> {
        self.check(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(CycInt {
            modulus: self.modulus,
            coeffs,
        })
    }

    pub fn checked_sub(&self, other: &CycInt) -> Result<CycInt> {
        self.check(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        Ok(CycInt {
            modulus: self.modulus,
            coeffs,
        })
    }

    pub fn checked_mul(&self, other: &CycInt) -> Result<CycInt> {
        self.check(other)?;
        let n = self.coeffs.len();
        let mut prod = vec![BigInt::zero(); 2 * n - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                prod[i + j] += a * b;
            }
        }
        Ok(CycInt::from_poly(self.modulus, prod))
    }

    pub fn scale(&self, k: &BigInt) -> CycInt {
        CycInt {
            modulus: self.modulus,
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    /// `self · ζ_m^e`.
    pub fn mul_root(&self, e: i64) -> CycInt {
        let e = e.rem_euclid(self.modulus as i64) as usize;
        if e == 0 {
            return self.clone();
        }
        let mut poly = vec![BigInt::zero(); e];
        poly.extend(self.coeffs.iter().cloned());
        CycInt::from_poly(self.modulus, poly)
    }

    /// Coefficientwise division by `n`; fails unless every coefficient is a
    /// multiple of `n`.
    pub fn divide_exact(&self, n: &BigInt) -> Result<CycInt> {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            let (q, r) = c.div_rem(n);
            if !r.is_zero() {
                return Err(Error::NotDivisible(format!("{self} by {n}")));
            }
            coeffs.push(q);
        }
        Ok(CycInt {
            modulus: self.modulus,
            coeffs,
        })
    }

    /// Re-expresses the element in `Z[ζ_M]` for a multiple `M` of the
    /// modulus, using `ζ_m = ζ_M^{M/m}`.
    pub fn embed(&self, target: u64) -> Result<CycInt> {
        if target % self.modulus != 0 {
            return Err(Error::ModulusMismatch(self.modulus, target));
        }
        let step = (target / self.modulus) as usize;
        let mut poly = vec![BigInt::zero(); step * self.coeffs.len().max(1)];
        for (i, c) in self.coeffs.iter().enumerate() {
            poly[i * step] = c.clone();
        }
        Ok(CycInt::from_poly(target, poly))
    }
}

impl fmt::Display for CycInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let root = match i {
                1 => format!("ζ{}", self.modulus),
                _ => format!("ζ{}^{i}", self.modulus),
            };
            let body = match (i, mag.is_one()) {
                (0, _) => mag.to_string(),
                (_, true) => root,
                (_, false) => format!("{mag}·{root}"),
            };
            terms.push((c.is_negative(), body));
        }
        write_signed_terms(f, &terms)
    }
}

impl fmt::Debug for CycInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Add for &CycInt {
    type Output = CycInt;
    fn add(self, rhs: &CycInt) -> CycInt {
        self.checked_add(rhs).expect("cyclotomic moduli must agree")
    }
}

impl Sub for &CycInt {
    type Output = CycInt;
    fn sub(self, rhs: &CycInt) -> CycInt {
        self.checked_sub(rhs).expect("cyclotomic moduli must agree")
    }
}

impl Mul for &CycInt {
    type Output = CycInt;
    fn mul(self, rhs: &CycInt) -> CycInt {
        self.checked_mul(rhs).expect("cyclotomic moduli must agree")
    }
}

impl Neg for &CycInt {
    type Output = CycInt;
    fn neg(self) -> CycInt {
        self.scale(&BigInt::from(-1))
    }
}
