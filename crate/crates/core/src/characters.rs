//! The character group `Â` and the pairing `⟨π, a⟩`.
//!
//! A character is stored as an exponent tuple `e` against the weights
//! `w_i = m / d_i`: it sends `b` to `ζ_m^{Σ w_i e_i b_i}`. Multiplying
//! characters adds exponent tuples, so `Â` carries the same order sequence as
//! `A` and subgroups of `Â` are ordinary [`Subgroup`]s of that spec.

use std::collections::HashMap;
use std::fmt;

use crate::cyclotomic::CycInt;
use crate::group::{GroupElement, GroupSpec, Homomorphism, Subgroup};
use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Character {
    parent: GroupSpec,
    etuple: Vec<u64>,
}

impl Character {
    pub fn new(parent: &GroupSpec, etuple: &[u64]) -> Result<Self> {
        let e = parent.element(etuple)?;
        Ok(Character {
            parent: parent.clone(),
            etuple: e.coords().to_vec(),
        })
    }

    pub fn trivial(parent: &GroupSpec) -> Self {
        Character {
            parent: parent.clone(),
            etuple: vec![0; parent.rank()],
        }
    }

    /// The character whose exponent tuple is the coordinate tuple of `e`.
    pub fn from_element(e: &GroupElement) -> Self {
        Character {
            parent: e.parent().clone(),
            etuple: e.coords().to_vec(),
        }
    }

    /// The exponent tuple viewed as an element of `Â`'s order sequence.
    pub fn as_element(&self) -> GroupElement {
        self.parent.element(&self.etuple).expect("etuple has the right arity")
    }

    pub fn parent(&self) -> &GroupSpec {
        &self.parent
    }

    pub fn etuple(&self) -> &[u64] {
        &self.etuple
    }

    pub fn is_trivial(&self) -> bool {
        self.etuple.iter().all(|&e| e == 0)
    }

    /// Pointwise product `π₁π₂`.
    pub fn mul(&self, other: &Character) -> Character {
        Character::from_element(&self.as_element().add(&other.as_element()))
    }
}

impl fmt::Debug for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "π[{}]", self.parent.format_coords(&self.etuple))
    }
}

/// `Â` as a group spec; it has the same order sequence as `A`.
pub fn character_group(group: &GroupSpec) -> GroupSpec {
    group.clone()
}

pub fn all_characters(group: &GroupSpec) -> impl Iterator<Item = Character> + '_ {
    group.elements().map(|e| Character::from_element(&e))
}

pub(crate) fn raw_pairing(spec: &GroupSpec, e: &[u64], a: &[u64]) -> u64 {
    let m = spec.exponent() as u128;
    let mut acc = 0u128;
    for (i, (&ei, &ai)) in e.iter().zip(a).enumerate() {
        acc = (acc + spec.weight(i) as u128 * ei as u128 * ai as u128) % m;
    }
    acc as u64
}

/// The exponent `e` with `⟨π, a⟩ = ζ_m^e`.
pub fn pairing_exponent(pi: &Character, a: &GroupElement) -> Result<u64> {
    if &pi.parent != a.parent() {
        return Err(Error::ParentMismatch);
    }
    Ok(raw_pairing(&pi.parent, &pi.etuple, a.coords()))
}

/// `⟨π, a⟩` as an exact cyclotomic integer.
pub fn evaluate(pi: &Character, a: &GroupElement) -> Result<CycInt> {
    let e = pairing_exponent(pi, a)?;
    Ok(CycInt::root_power(pi.parent.exponent(), e as i64))
}

/// `(Â : H)`, the characters trivial on `H`, as a subgroup of `Â`.
///
/// Only the generators of `H` are tested; biadditivity covers the rest.
pub fn annihilator(subgroup: &Subgroup) -> Subgroup {
    let spec = subgroup.parent();
    let elements = spec
        .elements()
        .filter(|pi| {
            subgroup
                .generators()
                .iter()
                .all(|h| raw_pairing(spec, pi.coords(), h.coords()) == 0)
        })
        .collect();
    Subgroup::from_elements(&character_group(spec), elements)
}

/// `(A : E)` for a subgroup `E ⊆ Â`, identifying `A` with its double dual
/// through evaluation `a ↦ (π ↦ ⟨π, a⟩)`.
pub fn annihilator_in_group(chars: &Subgroup) -> Subgroup {
    let spec = chars.parent();
    let elements = spec
        .elements()
        .filter(|a| {
            chars
                .generators()
                .iter()
                .all(|pi| raw_pairing(spec, pi.coords(), a.coords()) == 0)
        })
        .collect();
    Subgroup::from_elements(spec, elements)
}

/// Checks `(A : (Â : H)) = H`.
pub fn double_annihilator_check(subgroup: &Subgroup) -> bool {
    annihilator_in_group(&annihilator(subgroup)) == *subgroup
}

/// A character of a subgroup `H ⊆ A`, given by `θ(h_i) = ζ_m^{exponents[i]}`
/// on the generators `h_i` of `H`, where `m` is the exponent of `A`.
#[derive(Clone, Debug)]
pub struct SubgroupCharacter {
    subgroup: Subgroup,
    exponents: Vec<u64>,
}

impl SubgroupCharacter {
    pub fn new(subgroup: &Subgroup, exponents: &[u64]) -> Result<Self> {
        if exponents.len() != subgroup.generators().len() {
            return Err(Error::Arity {
                expected: subgroup.generators().len(),
                got: exponents.len(),
            });
        }
        let m = subgroup.parent().exponent();
        Ok(SubgroupCharacter {
            subgroup: subgroup.clone(),
            exponents: exponents.iter().map(|e| e % m).collect(),
        })
    }

    pub fn subgroup(&self) -> &Subgroup {
        &self.subgroup
    }

    pub fn exponents(&self) -> &[u64] {
        &self.exponents
    }

    /// Values on every element of `H`; fails if the generator values are
    /// inconsistent with the relations of `H`.
    fn value_table(&self) -> Result<HashMap<GroupElement, u64>> {
        let spec = self.subgroup.parent();
        let m = spec.exponent();
        let mut values = HashMap::new();
        values.insert(spec.zero(), 0u64);
        let mut queue = vec![spec.zero()];
        while let Some(x) = queue.pop() {
            let vx = values[&x];
            for (g, &t) in self.subgroup.generators().iter().zip(&self.exponents) {
                let y = x.add(g);
                let vy = (vx + t) % m;
                match values.get(&y) {
                    Some(&existing) if existing != vy => return Err(Error::NotAHomomorphism),
                    Some(_) => {}
                    None => {
                        values.insert(y.clone(), vy);
                        queue.push(y);
                    }
                }
            }
        }
        Ok(values)
    }
}

/// `π|_H` in generator-exponent form.
pub fn restrict(pi: &Character, subgroup: &Subgroup) -> Result<SubgroupCharacter> {
    let exps = subgroup
        .generators()
        .iter()
        .map(|h| pairing_exponent(pi, h))
        .collect::<Result<Vec<_>>>()?;
    SubgroupCharacter::new(subgroup, &exps)
}

/// Extends a character of `H` to all of `A`.
///
/// Repeatedly adjoins the least element `g` outside the current subgroup
/// `P`; with `k` minimal such that `kg ∈ P`, the value at `g` is the
/// smallest `ζ_m^s` with `ζ_m^{ks} = θ(kg)`.
pub fn extend_character(theta: &SubgroupCharacter) -> Result<Character> {
    let spec = theta.subgroup.parent().clone();
    let m = spec.exponent();
    let mut values = theta.value_table()?;
    while (values.len() as u64) < spec.cardinality() {
        let g = spec
            .elements()
            .find(|e| !values.contains_key(e))
            .expect("some element lies outside the current subgroup");
        let mut k = 1i64;
        let mut kg = g.clone();
        while !values.contains_key(&kg) {
            k += 1;
            kg = kg.add(&g);
        }
        let target = values[&kg];
        let s = (0..m)
            .find(|s| (k as u64 * s) % m == target)
            .ok_or_else(|| Error::Internal("no k-th root of the restricted value".into()))?;
        let base: Vec<(GroupElement, u64)> = values.iter().map(|(e, &v)| (e.clone(), v)).collect();
        for j in 1..k {
            let shift = g.scale(j);
            let shift_value = (j as u64 * s) % m;
            for (p, vp) in &base {
                values.insert(p.add(&shift), (vp + shift_value) % m);
            }
        }
    }
    let etuple = (0..spec.rank())
        .map(|i| {
            let v = values[&spec.generator(i)];
            let w = spec.weight(i);
            if v % w != 0 {
                return Err(Error::Internal("generator value of wrong order".into()));
            }
            Ok(v / w)
        })
        .collect::<Result<Vec<_>>>()?;
    Character::new(&spec, &etuple)
}

/// `α*: Â_2 → Â_1`, `⟨α*(π), a⟩ = ⟨π, α(a)⟩`.
///
/// Row `j` is the exponent tuple of `π_j ∘ α` for the `j`-th unit character
/// of `Â_2`; its `i`-th entry is `d_i(A_1) · T[i][j] / d_j(A_2)`.
pub fn induced_hom(alpha: &Homomorphism) -> Result<Homomorphism> {
    let a1 = alpha.source();
    let a2 = alpha.target();
    let rows: Vec<Vec<i64>> = (0..a2.rank())
        .map(|j| {
            (0..a1.rank())
                .map(|i| {
                    let t = alpha.matrix()[i][j] as u128;
                    let d1 = a1.orders()[i] as u128;
                    let d2 = a2.orders()[j] as u128;
                    ((d1 * t / d2) % d1) as i64
                })
                .collect()
        })
        .collect();
    let dual = Homomorphism::new(&character_group(a2), &character_group(a1), &rows)?;
    verify_induced(alpha, &dual)?;
    Ok(dual)
}

/// `e1/m1 ≡ e2/m2 (mod 1)`.
fn same_root(e1: u64, m1: u64, e2: u64, m2: u64) -> bool {
    (e1 as u128 * m2 as u128) % (m1 as u128 * m2 as u128) == (e2 as u128 * m1 as u128) % (m1 as u128 * m2 as u128)
}

fn verify_induced(alpha: &Homomorphism, dual: &Homomorphism) -> Result<()> {
    let a1 = alpha.source();
    let a2 = alpha.target();
    let exhaustive = (a1.cardinality() as u128) * (a2.cardinality() as u128) <= 1_000_000;
    let chars: Vec<GroupElement> = if exhaustive { a2.elements().collect() } else { a2.generators() };
    let points: Vec<GroupElement> = if exhaustive { a1.elements().collect() } else { a1.generators() };
    for pi in &chars {
        let pulled = dual.apply(pi);
        for a in &points {
            let lhs = raw_pairing(a1, pulled.coords(), a.coords());
            let rhs = raw_pairing(a2, pi.coords(), alpha.apply(a).coords());
            if !same_root(lhs, a1.exponent(), rhs, a2.exponent()) {
                return Err(Error::Internal(format!("induced map fails at π={pi}, a={a}")));
            }
        }
    }
    Ok(())
}
