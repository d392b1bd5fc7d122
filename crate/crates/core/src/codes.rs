//! Additive codes `C ⊆ A^n` and their left and right duals.
//!
//! `𝔏_φ(C) = {x : Φ(x, c) = 1 for all c ∈ C}` and
//! `𝔕_φ(C) = {x : Φ(c, x) = 1 for all c ∈ C}`. Both are computed by a full
//! scan of the ambient group against the generators of `C`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;

use crate::cyclotomic::CycInt;
use crate::duality::{all_dualities, Duality};
use crate::group::{is_characteristic, stabilizer, Automorphism, GroupElement, GroupSpec, Homomorphism, Subgroup};
use crate::limits;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Left,
    Right,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}

/// `A^n`, presented with the order sequence of `A` repeated `n` times; block
/// `i` of width `rank(A)` is coordinate `i`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PowerGroup {
    base: GroupSpec,
    n: usize,
    spec: GroupSpec,
}

impl PowerGroup {
    pub fn new(base: &GroupSpec, n: usize) -> Result<Self> {
        Ok(PowerGroup {
            base: base.clone(),
            n,
            spec: base.power(n)?,
        })
    }

    pub fn base(&self) -> &GroupSpec {
        &self.base
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    /// The `i`-th coordinate of a word, as an element of `A`.
    pub fn block(&self, word: &GroupElement, i: usize) -> GroupElement {
        let k = self.base.rank();
        self.base
            .element(&word.coords()[i * k..(i + 1) * k])
            .expect("block has the base arity")
    }

    pub fn blocks(&self, word: &GroupElement) -> Vec<GroupElement> {
        (0..self.n).map(|i| self.block(word, i)).collect()
    }

    pub fn word(&self, blocks: &[GroupElement]) -> Result<GroupElement> {
        if blocks.len() != self.n {
            return Err(Error::Arity {
                expected: self.n,
                got: blocks.len(),
            });
        }
        let mut coords = Vec::with_capacity(self.spec.rank());
        for b in blocks {
            if b.parent() != &self.base {
                return Err(Error::ParentMismatch);
            }
            coords.extend_from_slice(b.coords());
        }
        self.spec.element(&coords)
    }

    /// Blocks joined by `:`, e.g. `10:01`.
    pub fn format_word(&self, word: &GroupElement) -> String {
        let parts: Vec<String> = self.blocks(word).iter().map(|b| b.to_string()).collect();
        parts.join(":")
    }
}

impl fmt::Debug for PowerGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})^{}", self.base, self.n)
    }
}

/// A subgroup of `A^n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AdditiveCode {
    power: PowerGroup,
    subgroup: Subgroup,
}

impl AdditiveCode {
    pub fn new(power: &PowerGroup, generators: &[GroupElement]) -> Result<Self> {
        Ok(AdditiveCode {
            power: power.clone(),
            subgroup: Subgroup::closure(power.spec(), generators)?,
        })
    }

    pub fn from_subgroup(power: &PowerGroup, subgroup: Subgroup) -> Result<Self> {
        if subgroup.parent() != power.spec() {
            return Err(Error::ParentMismatch);
        }
        Ok(AdditiveCode {
            power: power.clone(),
            subgroup,
        })
    }

    pub fn power(&self) -> &PowerGroup {
        &self.power
    }

    pub fn subgroup(&self) -> &Subgroup {
        &self.subgroup
    }

    pub fn order(&self) -> u64 {
        self.subgroup.order()
    }

    /// `φ` extended to `A^n` when given on `A`, otherwise checked to live on
    /// `A^n` already.
    pub fn ambient_duality(&self, phi: &Duality) -> Result<Duality> {
        if phi.parent() == self.power.spec() {
            Ok(phi.clone())
        } else if phi.parent() == self.power.base() {
            extend_duality(phi, self.power.n())
        } else {
            Err(Error::ParentMismatch)
        }
    }

    pub fn left_dual(&self, phi: &Duality) -> Result<AdditiveCode> {
        self.dual(phi, Side::Left)
    }

    pub fn right_dual(&self, phi: &Duality) -> Result<AdditiveCode> {
        self.dual(phi, Side::Right)
    }

    pub fn dual(&self, phi: &Duality, side: Side) -> Result<AdditiveCode> {
        let ambient = self.ambient_duality(phi)?;
        AdditiveCode::from_subgroup(&self.power, dual(&self.subgroup, &ambient, side)?)
    }
}

impl fmt::Debug for AdditiveCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let words: Vec<String> = self.subgroup.elements().iter().map(|w| self.power.format_word(w)).collect();
        write!(f, "{{{}}}", words.join(", "))
    }
}

/// The coordinatewise extension of `φ` to `A^n`: block-diagonal `τ`.
pub fn extend_duality(phi: &Duality, n: usize) -> Result<Duality> {
    let base = phi.parent();
    let power = base.power(n)?;
    let k = base.rank();
    let mut matrix = vec![vec![0u64; k * n]; k * n];
    for b in 0..n {
        for (i, row) in phi.tau().matrix().iter().enumerate() {
            matrix[b * k + i][b * k..(b + 1) * k].copy_from_slice(row);
        }
    }
    let hom = Homomorphism::from_rows_unchecked(&power, &power, matrix);
    Ok(Duality::from_automorphism(Automorphism::from_hom_unchecked(hom)))
}

/// `𝔏_φ(C)`; `C` and `φ` share the ambient group.
pub fn left_dual(code: &Subgroup, phi: &Duality) -> Result<Subgroup> {
    dual(code, phi, Side::Left)
}

/// `𝔕_φ(C)`.
pub fn right_dual(code: &Subgroup, phi: &Duality) -> Result<Subgroup> {
    dual(code, phi, Side::Right)
}

pub fn dual(code: &Subgroup, phi: &Duality, side: Side) -> Result<Subgroup> {
    let spec = code.parent();
    if spec != phi.parent() {
        return Err(Error::ParentMismatch);
    }
    limits::check_scan("dual-code scan", spec.cardinality() as u128)?;
    let m = spec.exponent() as u128;
    let gram = phi.gram();
    let k = spec.rank();
    // Each generator c turns into the functional x ↦ Φ(x, c) or Φ(c, x).
    let functionals: Vec<Vec<u128>> = code
        .generators()
        .iter()
        .map(|c| {
            let c = c.coords();
            (0..k)
                .map(|i| {
                    let s: u128 = (0..k)
                        .map(|j| match side {
                            Side::Left => gram[i][j] as u128 * c[j] as u128,
                            Side::Right => c[j] as u128 * gram[j][i] as u128,
                        })
                        .sum();
                    s % m
                })
                .collect()
        })
        .collect();
    let elements: Vec<GroupElement> = spec
        .elements()
        .filter(|x| {
            functionals.iter().all(|f| {
                x.coords().iter().zip(f).map(|(&a, &b)| a as u128 * b).sum::<u128>() % m == 0
            })
        })
        .collect();
    Ok(Subgroup::from_elements(spec, elements))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SelfDualKind {
    None,
    SelfOrthogonal,
    SelfDual,
}

impl fmt::Display for SelfDualKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SelfDualKind::None => "none",
            SelfDualKind::SelfOrthogonal => "self-orthogonal",
            SelfDualKind::SelfDual => "self-dual",
        })
    }
}

/// Left and right self-orthogonality (and self-duality) always agree; the
/// agreement is checked.
pub fn self_dual_kind(code: &Subgroup, phi: &Duality) -> Result<SelfDualKind> {
    let kind = |d: &Subgroup| {
        if d == code {
            SelfDualKind::SelfDual
        } else if code.is_subset_of(d) {
            SelfDualKind::SelfOrthogonal
        } else {
            SelfDualKind::None
        }
    };
    let left = kind(&left_dual(code, phi)?);
    let right = kind(&right_dual(code, phi)?);
    if left != right {
        return Err(Error::Internal(format!("left kind {left} differs from right kind {right}")));
    }
    Ok(left)
}

/// `Σ_{y ∈ C} Φ(x, y)`, which is `|C|` when `x ∈ 𝔏_φ(C)` and `0` otherwise.
pub fn dual_sum_check(code: &Subgroup, phi: &Duality, x: &GroupElement) -> Result<CycInt> {
    side_sum(code, phi, x, Side::Left)
}

/// The same sum with `x` in the given slot: `Σ Φ(x, y)` for `Left`,
/// `Σ Φ(y, x)` for `Right`.
pub fn side_sum(code: &Subgroup, phi: &Duality, x: &GroupElement, side: Side) -> Result<CycInt> {
    if code.parent() != phi.parent() || x.parent() != phi.parent() {
        return Err(Error::ParentMismatch);
    }
    let m = phi.parent().exponent();
    let mut counts = vec![BigInt::from(0); m as usize];
    for y in code.elements() {
        let e = match side {
            Side::Left => phi.iexp(x, y)?,
            Side::Right => phi.iexp(y, x)?,
        };
        counts[e as usize] += 1;
    }
    Ok(CycInt::from_root_counts(m, &counts))
}

/// Subgroups of a `p`-group, viewed as `F_p`-spaces when elementary abelian,
/// are spanned greedily: the least element outside the running span is
/// adjoined until the span reaches `target`.
fn extend_basis(parent: &GroupSpec, mut basis: Vec<GroupElement>, target: &Subgroup) -> Result<Vec<GroupElement>> {
    let mut span = Subgroup::closure(parent, &basis)?;
    for x in target.elements() {
        if span.order() == target.order() {
            break;
        }
        if !span.contains(x) {
            basis.push(x.clone());
            span = Subgroup::closure(parent, &basis)?;
        }
    }
    Ok(basis)
}

/// Writes every element of `A` in terms of a basis `(e_j)` with orders
/// `(o_j)`; fails unless the basis is free and spans.
fn coordinates(parent: &GroupSpec, basis: &[GroupElement]) -> Result<HashMap<GroupElement, Vec<u64>>> {
    let orders: Vec<u64> = basis.iter().map(GroupElement::order).collect();
    let mut map = HashMap::new();
    let mut coeffs = vec![0u64; basis.len()];
    loop {
        let mut x = parent.zero();
        for (c, e) in coeffs.iter().zip(basis) {
            x = x.add(&e.scale(*c as i64));
        }
        if map.insert(x, coeffs.clone()).is_some() {
            return Err(Error::Internal("basis is not free".into()));
        }
        let mut pos = 0;
        loop {
            if pos == coeffs.len() {
                if map.len() as u64 != parent.cardinality() {
                    return Err(Error::Internal("basis does not span".into()));
                }
                return Ok(map);
            }
            coeffs[pos] += 1;
            if coeffs[pos] < orders[pos] {
                break;
            }
            coeffs[pos] = 0;
            pos += 1;
        }
    }
}

/// A basis of `H` as a direct sum of cyclic subgroups, by depth-first search
/// over elements in canonical order.
fn cyclic_basis(h: &Subgroup) -> Result<Vec<GroupElement>> {
    fn search(h: &Subgroup, chosen: &mut Vec<GroupElement>, span: &Subgroup) -> Result<bool> {
        if span.order() == h.order() {
            return Ok(true);
        }
        for x in h.elements() {
            if span.contains(x) {
                continue;
            }
            chosen.push(x.clone());
            let next = Subgroup::closure(h.parent(), chosen)?;
            if next.order() == span.order() * x.order() && search(h, chosen, &next)? {
                return Ok(true);
            }
            chosen.pop();
        }
        Ok(false)
    }
    let mut chosen = Vec::new();
    if search(h, &mut chosen, &Subgroup::trivial(h.parent()))? {
        Ok(chosen)
    } else {
        Err(Error::Internal("no cyclic basis found".into()))
    }
}

/// A symmetric duality under which `H` and `K` are each other's left and
/// right duals.
///
/// Handles elementary abelian groups with `|H|·|K| = |A|` by completing a
/// basis through `H ∩ K`, direct sums `A = H ⊕ K` through diagonal forms on
/// each summand, and cyclic `p`-groups, where every duality works. Anything
/// else is reported as unsupported; such pairs need not be duals under any
/// duality.
pub fn construct_duality_for_pair(h: &Subgroup, k: &Subgroup) -> Result<Duality> {
    let a = h.parent();
    if k.parent() != a {
        return Err(Error::ParentMismatch);
    }
    if h.order() * k.order() != a.cardinality() {
        return Err(Error::Unsupported(format!(
            "|H|·|K| = {} but |A| = {}",
            h.order() * k.order(),
            a.cardinality()
        )));
    }
    let phi = if (h.is_trivial() || k.is_trivial()) || (a.rank() == 1 && a.p_group_prime().is_some()) {
        Duality::canonical(a)
    } else if let Some(p) = a.elementary_abelian_prime() {
        elementary_construction(h, k, p)?
    } else if h.intersection(k).is_trivial() {
        direct_sum_construction(h, k)?
    } else {
        return Err(Error::Unsupported(format!(
            "{a} is neither elementary abelian nor the direct sum of the two subgroups"
        )));
    };
    if !phi.is_symmetric()
        || left_dual(h, &phi)? != *k
        || right_dual(h, &phi)? != *k
        || left_dual(k, &phi)? != *h
        || right_dual(k, &phi)? != *h
    {
        return Err(Error::Internal("constructed duality misses the pair".into()));
    }
    Ok(phi)
}

fn elementary_construction(h: &Subgroup, k: &Subgroup, p: u64) -> Result<Duality> {
    let a = h.parent();
    let meet = h.intersection(k);
    let base = extend_basis(a, Vec::new(), &meet)?;
    let i = base.len();
    let with_h = extend_basis(a, base.clone(), h)?;
    let hd = with_h.len();
    let with_k = extend_basis(a, base, k)?;
    let mut basis = with_h;
    basis.extend_from_slice(&with_k[i..]);
    let c = basis.len();
    let basis = extend_basis(a, basis, &Subgroup::whole(a))?;
    debug_assert_eq!(c + i, basis.len());
    debug_assert_eq!(hd + (with_k.len()), basis.len());
    // φ(e_j) = π_{σ(j)} for the dual basis (π_l) of (e_l), 1-based:
    // j ≤ i ↦ c + j, i < j ≤ c ↦ j, j > c ↦ j − c.
    let sigma = |j: usize| {
        if j <= i {
            c + j
        } else if j <= c {
            j
        } else {
            j - c
        }
    };
    let coords = coordinates(a, &basis)?;
    Duality::from_inner_product(a, |x, y| {
        let (cx, cy) = (&coords[x], &coords[y]);
        (1..=basis.len()).map(|j| cx[j - 1] * cy[sigma(j) - 1]).sum::<u64>() % p
    })
}

fn direct_sum_construction(h: &Subgroup, k: &Subgroup) -> Result<Duality> {
    let a = h.parent();
    let m = a.exponent();
    let mut basis = cyclic_basis(h)?;
    basis.extend(cyclic_basis(k)?);
    let orders: Vec<u64> = basis.iter().map(GroupElement::order).collect();
    let coords = coordinates(a, &basis)?;
    Duality::from_inner_product(a, |x, y| {
        let (cx, cy) = (&coords[x], &coords[y]);
        orders
            .iter()
            .enumerate()
            .map(|(j, &o)| (m / o) * ((cx[j] * cy[j]) % o))
            .sum::<u64>()
            % m
    })
}

/// Every duality (in canonical order) under which `H` and `K` are each
/// other's left and right duals.
pub fn dualities_for_pair(h: &Subgroup, k: &Subgroup) -> Result<Vec<Duality>> {
    let mut out = Vec::new();
    for phi in all_dualities(h.parent())? {
        if left_dual(h, &phi)? == *k
            && right_dual(h, &phi)? == *k
            && left_dual(k, &phi)? == *h
            && right_dual(k, &phi)? == *h
        {
            out.push(phi);
        }
    }
    Ok(out)
}

/// Left and right duals of the chosen subgroups under each listed duality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualsTable {
    pub dualities: Vec<Duality>,
    pub subgroups: Vec<Subgroup>,
    /// `cells[r][s] = (𝔏_{φ_r}(H_s), 𝔕_{φ_r}(H_s))`.
    pub cells: Vec<Vec<(Subgroup, Subgroup)>>,
}

pub fn duals_table(dualities: &[Duality], subgroups: &[Subgroup]) -> Result<DualsTable> {
    let cells = dualities
        .iter()
        .map(|phi| {
            subgroups
                .iter()
                .map(|h| Ok((left_dual(h, phi)?, right_dual(h, phi)?)))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(DualsTable {
        dualities: dualities.to_vec(),
        subgroups: subgroups.to_vec(),
        cells,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiltrationStep {
    pub j: u32,
    pub kernel: Subgroup,
    pub image: Subgroup,
}

/// `(ker f^j, im f^j)` for `f(a) = pa`, `j = 0, …, N` with `N` minimal such
/// that `f^N = 0`. Every subgroup is checked to be characteristic.
pub fn mult_by_p_filtration(group: &GroupSpec, p: u64) -> Result<Vec<FiltrationStep>> {
    if group.p_group_prime() != Some(p) {
        return Err(Error::NotPGroup);
    }
    let mut steps = Vec::new();
    let mut j = 0u32;
    let mut scale = 1u64;
    loop {
        let f = Homomorphism::scalar(group, scale as i64);
        let image = f.image();
        let kernel_elems: Vec<GroupElement> = group.elements().filter(|x| f.apply(x).is_zero()).collect();
        let kernel = Subgroup::from_elements(group, kernel_elems);
        if !is_characteristic(&kernel)? || !is_characteristic(&image)? {
            return Err(Error::Internal(format!("filtration step {j} is not characteristic")));
        }
        let done = image.is_trivial();
        steps.push(FiltrationStep { j, kernel, image });
        if done {
            return Ok(steps);
        }
        j += 1;
        scale *= p;
    }
}

/// Checks `im f^j = 𝔏_φ(ker f^j) = 𝔕_φ(ker f^j)` for every duality and `j`.
pub fn verify_filtration_duality(group: &GroupSpec, p: u64) -> Result<bool> {
    let steps = mult_by_p_filtration(group, p)?;
    for phi in all_dualities(group)? {
        for step in &steps {
            if left_dual(&step.kernel, &phi)? != step.image || right_dual(&step.kernel, &phi)? != step.image {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// How the duals of a fixed subgroup vary with the duality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DependenceReport {
    pub subgroup: Subgroup,
    pub characteristic: bool,
    /// Distinct values of `𝔏_φ(H)` with the dualities producing each.
    pub left_classes: BTreeMap<Subgroup, Vec<Duality>>,
    /// Distinct values of `𝔕_φ(H)` with the dualities producing each.
    pub right_classes: BTreeMap<Subgroup, Vec<Duality>>,
}

/// Partitions all dualities by the duals of `H`.
///
/// Checked along the way: the `𝔕`-classes are the cosets
/// `{φ ∘ τ : τ ∈ stab(H)}`, the `𝔏`-classes are their images under the
/// adjoint, and there is a single class exactly when `H` is characteristic.
pub fn duality_dependence(h: &Subgroup) -> Result<DependenceReport> {
    let a = h.parent();
    let dualities = all_dualities(a)?;
    let mut left_classes: BTreeMap<Subgroup, Vec<Duality>> = BTreeMap::new();
    let mut right_classes: BTreeMap<Subgroup, Vec<Duality>> = BTreeMap::new();
    for phi in &dualities {
        left_classes.entry(left_dual(h, phi)?).or_default().push(phi.clone());
        right_classes.entry(right_dual(h, phi)?).or_default().push(phi.clone());
    }
    let stab = stabilizer(h)?;
    for members in right_classes.values() {
        let phi = &members[0];
        let mut coset: Vec<Duality> = stab
            .iter()
            .map(|tau| Duality::from_automorphism(tau.then(phi.tau())))
            .collect();
        coset.sort();
        coset.dedup();
        if coset != *members {
            return Err(Error::Internal("right-dual class is not a stabilizer coset".into()));
        }
    }
    for members in left_classes.values() {
        let mut adjoints: Vec<Duality> = members.iter().map(Duality::adjoint).collect();
        adjoints.sort();
        if !right_classes.values().any(|class| *class == adjoints) {
            return Err(Error::Internal("left-dual class is not an adjoint right-dual class".into()));
        }
    }
    let characteristic = is_characteristic(h)?;
    if characteristic != (right_classes.len() == 1) || characteristic != (left_classes.len() == 1) {
        return Err(Error::Internal("class count disagrees with characteristic test".into()));
    }
    Ok(DependenceReport {
        subgroup: h.clone(),
        characteristic,
        left_classes,
        right_classes,
    })
}

/// The number of self-dual subgroups of `φ`'s parent among `subgroups`.
pub fn count_self_dual(subgroups: &[Subgroup], phi: &Duality) -> Result<usize> {
    let mut count = 0;
    for c in subgroups {
        if left_dual(c, phi)? == *c {
            count += 1;
        }
    }
    Ok(count)
}
