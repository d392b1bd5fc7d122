//! Dualities `φ: A → Â` and their inner products.
//!
//! Every duality is written `φ(a) = φ_0(aτ)` for a unique automorphism `τ`,
//! where `φ_0` is the weighted diagonal duality
//! `⟨φ_0(a), b⟩ = ζ_m^{Σ w_i a_i b_i}`. The inner product
//! `Φ(a, b) = ⟨φ(a), b⟩` is handled through its exponent
//! `iexp(a, b) ∈ Z/m`, cached as a Gram matrix on the generators.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow};

use crate::characters::{raw_pairing, Character};
use crate::group::{automorphism_group, Automorphism, GroupElement, GroupSpec, Homomorphism};
use crate::{Error, Result};

/// Pairs `(a, b)` beyond which verification falls back to generator pairs.
const EXHAUSTIVE_PAIRS: u128 = 1 << 20;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Duality {
    tau: Automorphism,
    gram: Vec<Vec<u64>>,
}

impl Duality {
    pub fn from_automorphism(tau: Automorphism) -> Self {
        let spec = tau.group().clone();
        let k = spec.rank();
        let gram = (0..k)
            .map(|i| {
                let row = tau.apply(&spec.generator(i));
                (0..k).map(|j| raw_pairing(&spec, row.coords(), spec.generator(j).coords())).collect()
            })
            .collect();
        Duality { tau, gram }
    }

    pub fn from_rows(group: &GroupSpec, rows: &[Vec<i64>]) -> Result<Self> {
        Ok(Self::from_automorphism(Automorphism::from_rows(group, rows)?))
    }

    /// The weighted diagonal duality `φ_0`.
    pub fn canonical(group: &GroupSpec) -> Self {
        Self::from_automorphism(Automorphism::identity(group))
    }

    /// The duality with `iexp(a, b) = form(a, b)`.
    ///
    /// `form` must be biadditive and nondegenerate with values in `Z/m`;
    /// the result is checked against `form` on all pairs at desk scale and on
    /// generator pairs beyond that.
    pub fn from_inner_product<F>(group: &GroupSpec, form: F) -> Result<Self>
    where
        F: Fn(&GroupElement, &GroupElement) -> u64,
    {
        let gens = group.generators();
        let m = group.exponent();
        let gram: Vec<Vec<u64>> = gens
            .iter()
            .map(|gi| gens.iter().map(|gj| form(gi, gj) % m).collect())
            .collect();
        let phi = Self::from_gram(group, &gram)?;
        let exhaustive = (group.cardinality() as u128).pow(2) <= EXHAUSTIVE_PAIRS;
        let points: Vec<GroupElement> = if exhaustive { group.elements().collect() } else { gens };
        for a in &points {
            for b in &points {
                if phi.raw_iexp(a.coords(), b.coords()) != form(a, b) % m {
                    return Err(Error::InvalidForm);
                }
            }
        }
        Ok(phi)
    }

    /// Builds the duality from its Gram matrix `G[i][j] = iexp(g_i, g_j)`,
    /// using `τ[i][j] = G[i][j] / w_j`.
    pub(crate) fn from_gram(group: &GroupSpec, gram: &[Vec<u64>]) -> Result<Self> {
        let rows = gram
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .map(|(j, &v)| {
                        let w = group.weight(j);
                        if v % w != 0 {
                            return Err(Error::InvalidForm);
                        }
                        Ok((v / w) as i64)
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let hom = Homomorphism::new(group, group, &rows).map_err(|_| Error::InvalidForm)?;
        let tau = Automorphism::new(hom).map_err(|_| Error::InvalidForm)?;
        Ok(Self::from_automorphism(tau))
    }

    pub fn parent(&self) -> &GroupSpec {
        self.tau.group()
    }

    pub fn tau(&self) -> &Automorphism {
        &self.tau
    }

    /// `G[i][j] = iexp(g_i, g_j)`.
    pub fn gram(&self) -> &[Vec<u64>] {
        &self.gram
    }

    /// `φ(a)`.
    pub fn apply(&self, a: &GroupElement) -> Character {
        Character::from_element(&self.tau.apply(a))
    }

    /// `e` with `Φ(a, b) = ⟨φ(a), b⟩ = ζ_m^e`.
    pub fn iexp(&self, a: &GroupElement, b: &GroupElement) -> Result<u64> {
        if a.parent() != self.parent() || b.parent() != self.parent() {
            return Err(Error::ParentMismatch);
        }
        Ok(self.raw_iexp(a.coords(), b.coords()))
    }

    pub(crate) fn raw_iexp(&self, a: &[u64], b: &[u64]) -> u64 {
        let m = self.parent().exponent() as u128;
        let mut acc = 0u128;
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            let mut row = 0u128;
            for (j, &bj) in b.iter().enumerate() {
                row += self.gram[i][j] as u128 * bj as u128;
            }
            acc = (acc + (row % m) * ai as u128) % m;
        }
        acc as u64
    }

    /// `φ*` with `⟨φ*(a), b⟩ = ⟨φ(b), a⟩`.
    pub fn adjoint(&self) -> Duality {
        let k = self.parent().rank();
        let gram: Vec<Vec<u64>> = (0..k).map(|i| (0..k).map(|j| self.gram[j][i]).collect()).collect();
        let adj = Self::from_gram(self.parent(), &gram).expect("the transposed form is a duality");
        adj.verify_adjoint_of(self);
        adj
    }

    fn verify_adjoint_of(&self, phi: &Duality) {
        let spec = self.parent();
        let exhaustive = (spec.cardinality() as u128).pow(2) <= EXHAUSTIVE_PAIRS;
        let points: Vec<GroupElement> = if exhaustive { spec.elements().collect() } else { spec.generators() };
        for a in &points {
            for b in &points {
                assert_eq!(
                    self.raw_iexp(a.coords(), b.coords()),
                    phi.raw_iexp(b.coords(), a.coords()),
                    "adjoint identity fails at ({a}, {b})"
                );
            }
        }
    }

    pub fn is_symmetric(&self) -> bool {
        let k = self.gram.len();
        (0..k).all(|i| (0..k).all(|j| self.gram[i][j] == self.gram[j][i]))
    }

    /// `φ̄(a) = φ(−a)`.
    pub fn negated(&self) -> Duality {
        let spec = self.parent();
        let neg = Automorphism::new(Homomorphism::scalar(spec, -1)).expect("−1 is an automorphism");
        Self::from_automorphism(neg.then(&self.tau))
    }

    /// `φ^m = φ ∘ (m·id)` on a p-group, `gcd(m, p) = 1`.
    pub fn power(&self, mexp: i64) -> Result<Duality> {
        let spec = self.parent();
        let p = spec.p_group_prime().ok_or(Error::NotPGroup)?;
        if mexp.rem_euclid(p as i64) == 0 {
            return Err(Error::NotCoprime { mult: mexp, p });
        }
        let scale = Automorphism::new(Homomorphism::scalar(spec, mexp)).expect("units act bijectively");
        let out = Self::from_automorphism(scale.then(&self.tau));
        debug_assert_eq!(
            out.adjoint(),
            Self::from_automorphism(scale.then(self.adjoint().tau())),
            "(φ^m)* = (φ*)^m"
        );
        Ok(out)
    }

    /// The duality `a ↦ τ*(φ(aτ))`, whose form is `(a, b) ↦ Φ(aτ, bτ)`.
    pub fn transport(&self, tau: &Automorphism) -> Duality {
        let spec = self.parent();
        let images: Vec<GroupElement> = spec.generators().iter().map(|g| tau.apply(g)).collect();
        let gram: Vec<Vec<u64>> = images
            .iter()
            .map(|x| images.iter().map(|y| self.raw_iexp(x.coords(), y.coords())).collect())
            .collect();
        Self::from_gram(spec, &gram).expect("transport of a duality is a duality")
    }

    pub fn display_matrix(&self) -> String {
        self.tau.display_matrix()
    }
}

impl PartialOrd for Duality {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Duality {
    fn cmp(&self, other: &Self) -> Ordering {
        self.tau.cmp(&other.tau)
    }
}

impl fmt::Debug for Duality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "φ{}", self.tau.display_matrix())
    }
}

/// One duality per automorphism, in canonical (lexicographic) order.
pub fn all_dualities(group: &GroupSpec) -> Result<Vec<Duality>> {
    Ok(automorphism_group(group)?.into_iter().map(Duality::from_automorphism).collect())
}

/// Some `τ` with `Φ_2(a, b) = Φ_1(aτ, bτ)`, if one exists.
pub fn congruent(phi1: &Duality, phi2: &Duality) -> Result<Option<Automorphism>> {
    if phi1.parent() != phi2.parent() {
        return Err(Error::ParentMismatch);
    }
    if phi1 == phi2 {
        return Ok(Some(Automorphism::identity(phi1.parent())));
    }
    Ok(automorphism_group(phi1.parent())?
        .into_iter()
        .find(|tau| phi1.transport(tau) == *phi2))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CongruenceClass {
    pub representative: Duality,
    pub members: Vec<Duality>,
}

impl CongruenceClass {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, phi: &Duality) -> bool {
        self.members.binary_search(phi).is_ok()
    }
}

/// The orbits of `Aut(A)` on dualities, each led by its least member; classes
/// are ordered by representative.
pub fn congruence_classes(group: &GroupSpec) -> Result<Vec<CongruenceClass>> {
    let auts = automorphism_group(group)?;
    let mut remaining: BTreeSet<Duality> = auts.iter().cloned().map(Duality::from_automorphism).collect();
    let mut classes = Vec::new();
    while let Some(rep) = remaining.pop_first() {
        let orbit: BTreeSet<Duality> = auts.iter().map(|tau| rep.transport(tau)).collect();
        for phi in &orbit {
            remaining.remove(phi);
        }
        classes.push(CongruenceClass {
            representative: rep,
            members: orbit.into_iter().collect(),
        });
    }
    Ok(classes)
}

/// Some unit `m` with `φ_2 = φ_1^m`, which happens exactly when the two
/// dualities have the same left and right duals on every subgroup.
pub fn same_duals_everywhere(phi1: &Duality, phi2: &Duality) -> Result<Option<u64>> {
    if phi1.parent() != phi2.parent() {
        return Err(Error::ParentMismatch);
    }
    let spec = phi1.parent();
    let p = spec.p_group_prime().ok_or(Error::NotPGroup)?;
    for mexp in 1..spec.exponent().max(2) {
        if mexp % p != 0 && phi1.power(mexp as i64)? == *phi2 {
            return Ok(Some(mexp));
        }
    }
    Ok(None)
}

/// `N(n)`, the number of symmetric invertible `n × n` matrices over `F_q`.
pub fn count_symmetric_invertible(n: u32, q: u64) -> BigInt {
    let q = BigInt::from(q);
    let t = n / 2;
    let top = q.clone().pow(2 * t + 1);
    let start = if n % 2 == 0 { 1 } else { 0 };
    (start..=t).fold(BigInt::one(), |acc, i| acc * (&top - q.clone().pow(2 * i)))
}

/// `|GL(n, F_q)|`.
pub fn gl_order(n: u32, q: u64) -> BigInt {
    let q = BigInt::from(q);
    let qn = q.clone().pow(n);
    (0..n).fold(BigInt::one(), |acc, i| acc * (&qn - q.clone().pow(i)))
}

/// `N(n) / |GL(n, F_q)|`, in lowest terms.
pub fn symmetric_ratio(n: u32, q: u64) -> BigRational {
    BigRational::new(count_symmetric_invertible(n, q), gl_order(n, q))
}
