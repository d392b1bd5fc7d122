//! Finite abelian groups presented as products of cyclic groups.
//!
//! A [`GroupSpec`] fixes the order sequence `d_1, …, d_k` and with it the
//! generator basis `g_1, …, g_k`. Elements are residue tuples, homomorphisms
//! are integer matrices whose row `i` is the image of `g_i`, and maps act on
//! the right: `a ↦ aT`.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use num_integer::Integer;

use crate::limits;
use crate::{Error, Result};

/// `Z/d_1 × … × Z/d_k` with the order sequence kept verbatim.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupSpec {
    orders: Arc<[u64]>,
    exponent: u64,
    cardinality: u64,
}

impl GroupSpec {
    pub fn new(orders: &[u64]) -> Result<Self> {
        if orders.is_empty() {
            return Err(Error::EmptyGroup);
        }
        let mut exponent = 1u64;
        let mut cardinality = 1u64;
        for &d in orders {
            if d < 2 {
                return Err(Error::BadOrder(d));
            }
            exponent = exponent.lcm(&d);
            cardinality = cardinality.checked_mul(d).ok_or(Error::GroupTooLarge)?;
        }
        Ok(GroupSpec {
            orders: orders.into(),
            exponent,
            cardinality,
        })
    }

    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    /// Number of cyclic factors.
    pub fn rank(&self) -> usize {
        self.orders.len()
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn cardinality(&self) -> u64 {
        self.cardinality
    }

    /// `m / d_i`, the weight of factor `i` in the canonical pairing.
    pub fn weight(&self, i: usize) -> u64 {
        self.exponent / self.orders[i]
    }

    /// The order sequence repeated `n` times, i.e. `A^n`.
    pub fn power(&self, n: usize) -> Result<GroupSpec> {
        if n == 0 {
            return Err(Error::EmptyGroup);
        }
        let orders: Vec<u64> = (0..n).flat_map(|_| self.orders.iter().copied()).collect();
        GroupSpec::new(&orders)
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement {
            parent: self.clone(),
            coords: vec![0; self.rank()],
        }
    }

    /// Element with the given coordinates, each reduced modulo its factor.
    pub fn element(&self, coords: &[u64]) -> Result<GroupElement> {
        if coords.len() != self.rank() {
            return Err(Error::Arity {
                expected: self.rank(),
                got: coords.len(),
            });
        }
        let coords = coords
            .iter()
            .zip(self.orders.iter())
            .map(|(&c, &d)| c % d)
            .collect();
        Ok(GroupElement {
            parent: self.clone(),
            coords,
        })
    }

    /// Like [`GroupSpec::element`], accepting negative coordinates.
    pub fn element_signed(&self, coords: &[i64]) -> Result<GroupElement> {
        if coords.len() != self.rank() {
            return Err(Error::Arity {
                expected: self.rank(),
                got: coords.len(),
            });
        }
        let coords = coords
            .iter()
            .zip(self.orders.iter())
            .map(|(&c, &d)| c.rem_euclid(d as i64) as u64)
            .collect();
        Ok(GroupElement {
            parent: self.clone(),
            coords,
        })
    }

    /// The `i`-th basis generator `g_i`.
    pub fn generator(&self, i: usize) -> GroupElement {
        let mut coords = vec![0; self.rank()];
        coords[i] = 1;
        GroupElement {
            parent: self.clone(),
            coords,
        }
    }

    pub fn generators(&self) -> Vec<GroupElement> {
        (0..self.rank()).map(|i| self.generator(i)).collect()
    }

    /// All elements in lexicographic order of their coordinates.
    pub fn elements(&self) -> Elements {
        Elements {
            spec: self.clone(),
            next: Some(vec![0; self.rank()]),
        }
    }

    /// Position of an element in [`GroupSpec::elements`] order.
    pub fn index_of(&self, element: &GroupElement) -> u64 {
        element
            .coords
            .iter()
            .zip(self.orders.iter())
            .fold(0u64, |acc, (&c, &d)| acc * d + c)
    }

    pub fn element_at(&self, mut index: u64) -> GroupElement {
        let mut coords = vec![0; self.rank()];
        for (slot, &d) in coords.iter_mut().zip(self.orders.iter()).rev() {
            *slot = index % d;
            index /= d;
        }
        GroupElement {
            parent: self.clone(),
            coords,
        }
    }

    /// Canonical text form: digits concatenated when every `d_i ≤ 10`,
    /// comma-joined otherwise.
    pub fn format_coords(&self, coords: &[u64]) -> String {
        if self.orders.iter().all(|&d| d <= 10) {
            coords.iter().map(|c| c.to_string()).collect()
        } else {
            coords
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(",")
        }
    }

    /// Parses the canonical text form. Comma-joined input is accepted for
    /// every group. Power-group words can be written block by block, with `:`
    /// or `|` between blocks (`10:01`, `1,10:0,3`).
    pub fn parse_element(&self, text: &str) -> Result<GroupElement> {
        let err = || Error::Parse {
            input: text.to_string(),
            group: self.to_string(),
        };
        let commas = text.contains(',');
        let cleaned: String = text
            .chars()
            .filter_map(|c| match c {
                ':' | '|' if commas => Some(','),
                ':' | '.' | '|' | '(' | ')' | ' ' => None,
                c => Some(c),
            })
            .collect();
        let coords: Vec<u64> = if cleaned.contains(',') {
            cleaned
                .split(',')
                .map(|s| s.trim().parse::<u64>().map_err(|_| err()))
                .collect::<Result<_>>()?
        } else {
            cleaned
                .chars()
                .map(|c| c.to_digit(10).map(u64::from).ok_or_else(err))
                .collect::<Result<_>>()?
        };
        if coords.len() != self.rank() {
            return Err(err());
        }
        if coords.iter().zip(self.orders.iter()).any(|(&c, &d)| c >= d) {
            return Err(err());
        }
        self.element(&coords)
    }

    /// The single prime dividing `|A|`, if `A` is a `p`-group.
    pub fn p_group_prime(&self) -> Option<u64> {
        let primes = prime_factors(self.cardinality);
        (primes.len() == 1).then(|| primes[0])
    }

    /// `Some(p)` when every factor equals the same prime `p`.
    pub fn elementary_abelian_prime(&self) -> Option<u64> {
        let p = self.orders[0];
        (is_prime(p) && self.orders.iter().all(|&d| d == p)).then_some(p)
    }

    /// For each prime `p | |A|`, the `p`-part of every factor (trivial
    /// factors dropped).
    pub fn primary_decomposition(&self) -> BTreeMap<u64, GroupSpec> {
        let mut parts = BTreeMap::new();
        for p in prime_factors(self.cardinality) {
            let orders: Vec<u64> = self
                .orders
                .iter()
                .map(|&d| p_part(d, p))
                .filter(|&q| q > 1)
                .collect();
            parts.insert(p, GroupSpec::new(&orders).expect("p-part is nontrivial"));
        }
        parts
    }

    pub(crate) fn add_coords(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        a.iter()
            .zip(b)
            .zip(self.orders.iter())
            .map(|((&x, &y), &d)| (x + y) % d)
            .collect()
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.orders.iter().map(|d| format!("Z/{d}")).collect();
        write!(f, "{}", parts.join(" × "))
    }
}

impl fmt::Debug for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupSpec{:?}", &*self.orders)
    }
}

/// Iterator over all elements of a group, see [`GroupSpec::elements`].
pub struct Elements {
    spec: GroupSpec,
    next: Option<Vec<u64>>,
}

impl Iterator for Elements {
    type Item = GroupElement;

    fn next(&mut self) -> Option<GroupElement> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let mut i = succ.len();
        let mut carry = true;
        while carry && i > 0 {
            i -= 1;
            succ[i] += 1;
            if succ[i] == self.spec.orders[i] {
                succ[i] = 0;
            } else {
                carry = false;
            }
        }
        if !carry {
            self.next = Some(succ);
        }
        Some(GroupElement {
            parent: self.spec.clone(),
            coords: current,
        })
    }
}

/// A residue tuple `(a_1, …, a_k)` with `0 ≤ a_i < d_i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    parent: GroupSpec,
    coords: Vec<u64>,
}

impl GroupElement {
    pub fn parent(&self) -> &GroupSpec {
        &self.parent
    }

    pub fn coords(&self) -> &[u64] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    pub fn add(&self, other: &GroupElement) -> GroupElement {
        assert_eq!(self.parent, other.parent, "adding elements of different groups");
        GroupElement {
            parent: self.parent.clone(),
            coords: self.parent.add_coords(&self.coords, &other.coords),
        }
    }

    pub fn neg(&self) -> GroupElement {
        self.scale(-1)
    }

    pub fn sub(&self, other: &GroupElement) -> GroupElement {
        self.add(&other.neg())
    }

    pub fn scale(&self, k: i64) -> GroupElement {
        let coords = self
            .coords
            .iter()
            .zip(self.parent.orders.iter())
            .map(|(&c, &d)| {
                let d = d as i128;
                ((c as i128 * k as i128).rem_euclid(d)) as u64
            })
            .collect();
        GroupElement {
            parent: self.parent.clone(),
            coords,
        }
    }

    /// Additive order of the element.
    pub fn order(&self) -> u64 {
        self.coords
            .iter()
            .zip(self.parent.orders.iter())
            .fold(1u64, |acc, (&c, &d)| acc.lcm(&(d / d.gcd(&c))))
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.parent.format_coords(&self.coords))
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// An enumerated subgroup: a generating list plus the full sorted element
/// set. Equality ignores the generators.
#[derive(Clone)]
pub struct Subgroup {
    parent: GroupSpec,
    generators: Vec<GroupElement>,
    elements: Vec<GroupElement>,
}

impl Subgroup {
    /// Smallest subgroup of `parent` containing `gens`.
    pub fn closure(parent: &GroupSpec, gens: &[GroupElement]) -> Result<Subgroup> {
        if gens.iter().any(|g| &g.parent != parent) {
            return Err(Error::ParentMismatch);
        }
        let mut set: HashSet<Vec<u64>> = HashSet::new();
        let mut elems = vec![vec![0; parent.rank()]];
        set.insert(elems[0].clone());
        for g in gens {
            extend_closure(parent, &mut set, &mut elems, &g.coords);
        }
        Ok(Subgroup::from_coord_set(parent, gens.to_vec(), elems))
    }

    pub fn trivial(parent: &GroupSpec) -> Subgroup {
        Subgroup {
            parent: parent.clone(),
            generators: Vec::new(),
            elements: vec![parent.zero()],
        }
    }

    pub fn whole(parent: &GroupSpec) -> Subgroup {
        Subgroup {
            parent: parent.clone(),
            generators: parent.generators(),
            elements: parent.elements().collect(),
        }
    }

    /// Wraps an element set that is already known to be a subgroup,
    /// choosing a short generating list greedily in canonical order.
    pub(crate) fn from_elements(parent: &GroupSpec, mut elements: Vec<GroupElement>) -> Subgroup {
        elements.sort();
        elements.dedup();
        let mut set: HashSet<Vec<u64>> = HashSet::new();
        let mut span = vec![vec![0; parent.rank()]];
        set.insert(span[0].clone());
        let mut generators = Vec::new();
        for e in &elements {
            if span.len() == elements.len() {
                break;
            }
            if !set.contains(&e.coords) {
                extend_closure(parent, &mut set, &mut span, &e.coords);
                generators.push(e.clone());
            }
        }
        debug_assert_eq!(span.len(), elements.len());
        Subgroup {
            parent: parent.clone(),
            generators,
            elements,
        }
    }

    fn from_coord_set(parent: &GroupSpec, generators: Vec<GroupElement>, coords: Vec<Vec<u64>>) -> Subgroup {
        let mut elements: Vec<GroupElement> = coords
            .into_iter()
            .map(|c| GroupElement {
                parent: parent.clone(),
                coords: c,
            })
            .collect();
        elements.sort();
        Subgroup {
            parent: parent.clone(),
            generators,
            elements,
        }
    }

    pub fn parent(&self) -> &GroupSpec {
        &self.parent
    }

    pub fn generators(&self) -> &[GroupElement] {
        &self.generators
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn contains(&self, element: &GroupElement) -> bool {
        self.elements.binary_search(element).is_ok()
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.parent == other.parent && self.elements.iter().all(|e| other.contains(e))
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    /// `Hτ`, the image under an automorphism.
    pub fn image(&self, tau: &Automorphism) -> Subgroup {
        let elements = self.elements.iter().map(|e| tau.apply(e)).collect();
        let mut image = Subgroup::from_elements(&self.parent, elements);
        image.generators = self.generators.iter().map(|g| tau.apply(g)).collect();
        image
    }

    /// `H ∩ K`.
    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        let elements = self
            .elements
            .iter()
            .filter(|e| other.contains(e))
            .cloned()
            .collect();
        Subgroup::from_elements(&self.parent, elements)
    }

    /// `H + K`.
    pub fn join(&self, other: &Subgroup) -> Subgroup {
        let gens: Vec<GroupElement> = self
            .generators
            .iter()
            .chain(other.generators.iter())
            .cloned()
            .collect();
        Subgroup::closure(&self.parent, &gens).expect("same parent")
    }

    /// Element list in canonical text form, e.g. `{00, 10}`.
    pub fn display_elements(&self) -> String {
        let parts: Vec<String> = self.elements.iter().map(|e| e.to_string()).collect();
        format!("{{{}}}", parts.join(", "))
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.parent == other.parent && self.elements == other.elements
    }
}

impl Eq for Subgroup {}

impl Hash for Subgroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.parent.hash(state);
        self.elements.hash(state);
    }
}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.elements.len(), &self.elements).cmp(&(other.elements.len(), &other.elements))
    }
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_elements())
    }
}

/// Adds `⟨g⟩` to the subgroup held in `set`/`elems`.
fn extend_closure(spec: &GroupSpec, set: &mut HashSet<Vec<u64>>, elems: &mut Vec<Vec<u64>>, g: &[u64]) {
    if set.contains(g) {
        return;
    }
    let base = elems.clone();
    let mut shift = g.to_vec();
    while !set.contains(&shift) {
        for e in &base {
            let s = spec.add_coords(e, &shift);
            if set.insert(s.clone()) {
                elems.push(s);
            }
        }
        shift = spec.add_coords(&shift, g);
    }
}

/// Every subgroup of `A` exactly once, sorted by order and element list.
pub fn all_subgroups(group: &GroupSpec) -> Result<Vec<Subgroup>> {
    limits::check_enumeration("subgroup enumeration", group.cardinality() as u128)?;
    let all: Vec<GroupElement> = group.elements().collect();
    let trivial = Subgroup::trivial(group);
    let mut seen: HashSet<Vec<GroupElement>> = HashSet::new();
    seen.insert(trivial.elements.clone());
    let mut found = vec![trivial];
    let mut frontier = 0;
    while frontier < found.len() {
        let current = found[frontier].clone();
        frontier += 1;
        if current.order() == group.cardinality() {
            continue;
        }
        let set: HashSet<Vec<u64>> = current.elements.iter().map(|e| e.coords.clone()).collect();
        let base_coords: Vec<Vec<u64>> = current.elements.iter().map(|e| e.coords.clone()).collect();
        for x in &all {
            if set.contains(&x.coords) {
                continue;
            }
            let mut local_set = set.clone();
            let mut elems = base_coords.clone();
            extend_closure(group, &mut local_set, &mut elems, &x.coords);
            let mut gens = current.generators.clone();
            gens.push(x.clone());
            let candidate = Subgroup::from_coord_set(group, gens, elems);
            if seen.insert(candidate.elements.clone()) {
                found.push(candidate);
            }
        }
    }
    found.sort();
    Ok(found)
}

/// A homomorphism `A_1 → A_2` as a `k_1 × k_2` matrix; row `i` is the image
/// of the generator `g_i`, entry `(i, j)` is reduced modulo `d_j` of the
/// target.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Homomorphism {
    source: GroupSpec,
    target: GroupSpec,
    matrix: Vec<Vec<u64>>,
}

impl Homomorphism {
    pub fn new(source: &GroupSpec, target: &GroupSpec, rows: &[Vec<i64>]) -> Result<Self> {
        if rows.len() != source.rank() {
            return Err(Error::Arity {
                expected: source.rank(),
                got: rows.len(),
            });
        }
        let mut matrix = Vec::with_capacity(rows.len());
        for (i, row) in rows.iter().enumerate() {
            let image = target.element_signed(row)?;
            let d_i = source.orders()[i];
            let compatible = image
                .coords
                .iter()
                .zip(target.orders())
                .all(|(&t, &d_j)| (d_i as u128 * t as u128) % d_j as u128 == 0);
            if !compatible {
                return Err(Error::InvalidHomomorphism { row: i });
            }
            matrix.push(image.coords);
        }
        Ok(Homomorphism {
            source: source.clone(),
            target: target.clone(),
            matrix,
        })
    }

    pub(crate) fn from_rows_unchecked(source: &GroupSpec, target: &GroupSpec, matrix: Vec<Vec<u64>>) -> Self {
        Homomorphism {
            source: source.clone(),
            target: target.clone(),
            matrix,
        }
    }

    pub fn identity(group: &GroupSpec) -> Self {
        Self::scalar(group, 1)
    }

    /// Multiplication by an integer, `a ↦ k·a`.
    pub fn scalar(group: &GroupSpec, k: i64) -> Self {
        let matrix = (0..group.rank())
            .map(|i| group.generator(i).scale(k).coords)
            .collect();
        Homomorphism {
            source: group.clone(),
            target: group.clone(),
            matrix,
        }
    }

    pub fn zero(source: &GroupSpec, target: &GroupSpec) -> Self {
        Homomorphism {
            source: source.clone(),
            target: target.clone(),
            matrix: vec![vec![0; target.rank()]; source.rank()],
        }
    }

    pub fn source(&self) -> &GroupSpec {
        &self.source
    }

    pub fn target(&self) -> &GroupSpec {
        &self.target
    }

    pub fn matrix(&self) -> &[Vec<u64>] {
        &self.matrix
    }

    /// `aT = Σ_i a_i · row_i`.
    pub fn apply(&self, a: &GroupElement) -> GroupElement {
        assert_eq!(a.parent, self.source, "element outside the source group");
        let mut out = vec![0u64; self.target.rank()];
        for (&ai, row) in a.coords.iter().zip(&self.matrix) {
            if ai == 0 {
                continue;
            }
            for ((slot, &t), &d) in out.iter_mut().zip(row).zip(self.target.orders()) {
                *slot = ((*slot as u128 + ai as u128 * t as u128) % d as u128) as u64;
            }
        }
        GroupElement {
            parent: self.target.clone(),
            coords: out,
        }
    }

    /// `self` followed by `next` (right action: `a ↦ (aS)T`).
    pub fn then(&self, next: &Homomorphism) -> Result<Homomorphism> {
        if self.target != next.source {
            return Err(Error::ParentMismatch);
        }
        let matrix = self
            .matrix
            .iter()
            .map(|row| {
                let image = GroupElement {
                    parent: self.target.clone(),
                    coords: row.clone(),
                };
                next.apply(&image).coords
            })
            .collect();
        Ok(Homomorphism {
            source: self.source.clone(),
            target: next.target.clone(),
            matrix,
        })
    }

    pub fn image(&self) -> Subgroup {
        let rows: Vec<GroupElement> = self
            .matrix
            .iter()
            .map(|r| GroupElement {
                parent: self.target.clone(),
                coords: r.clone(),
            })
            .collect();
        Subgroup::closure(&self.target, &rows).expect("rows lie in target")
    }

    pub fn display_matrix(&self) -> String {
        format_matrix(&self.matrix)
    }
}

impl fmt::Debug for Homomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_matrix())
    }
}

pub fn format_matrix(matrix: &[Vec<u64>]) -> String {
    let rows: Vec<String> = matrix
        .iter()
        .map(|r| {
            let cells: Vec<String> = r.iter().map(|c| c.to_string()).collect();
            format!("[{}]", cells.join(","))
        })
        .collect();
    format!("[{}]", rows.join(","))
}

/// A bijective endomorphism. Ordering is lexicographic on the matrix.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Automorphism(Homomorphism);

impl Automorphism {
    pub fn new(hom: Homomorphism) -> Result<Self> {
        if hom.source != hom.target {
            return Err(Error::NotBijective);
        }
        if hom.image().order() != hom.source.cardinality() {
            return Err(Error::NotBijective);
        }
        Ok(Automorphism(hom))
    }

    pub fn from_rows(group: &GroupSpec, rows: &[Vec<i64>]) -> Result<Self> {
        Automorphism::new(Homomorphism::new(group, group, rows)?)
    }

    pub(crate) fn from_hom_unchecked(hom: Homomorphism) -> Self {
        Automorphism(hom)
    }

    pub fn identity(group: &GroupSpec) -> Self {
        Automorphism(Homomorphism::identity(group))
    }

    pub fn group(&self) -> &GroupSpec {
        &self.0.source
    }

    pub fn as_hom(&self) -> &Homomorphism {
        &self.0
    }

    pub fn matrix(&self) -> &[Vec<u64>] {
        &self.0.matrix
    }

    pub fn apply(&self, a: &GroupElement) -> GroupElement {
        self.0.apply(a)
    }

    /// `self` followed by `next`; the matrix is the product `self · next`.
    pub fn then(&self, next: &Automorphism) -> Automorphism {
        Automorphism(self.0.then(&next.0).expect("same group"))
    }

    pub fn is_identity(&self) -> bool {
        self.0 == Homomorphism::identity(self.group())
    }

    /// Order under composition.
    pub fn order(&self) -> u64 {
        let mut power = self.clone();
        let mut k = 1;
        while !power.is_identity() {
            power = power.then(self);
            k += 1;
        }
        k
    }

    pub fn inverse(&self) -> Automorphism {
        let mut inv = Automorphism::identity(self.group());
        for _ in 1..self.order() {
            inv = inv.then(self);
        }
        inv
    }

    pub fn pow(&self, k: u64) -> Automorphism {
        let mut out = Automorphism::identity(self.group());
        for _ in 0..k {
            out = out.then(self);
        }
        out
    }

    pub fn display_matrix(&self) -> String {
        self.0.display_matrix()
    }
}

impl fmt::Debug for Automorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_matrix())
    }
}

/// All automorphisms of `A` in lexicographic matrix order.
///
/// Rows are chosen one generator at a time among elements `t` with
/// `d_i · t = 0`; a partial choice survives only while the span of the rows
/// chosen so far has order `d_1 ⋯ d_i`, which is injectivity on
/// `⟨g_1, …, g_i⟩`.
pub fn automorphism_group(group: &GroupSpec) -> Result<Vec<Automorphism>> {
    limits::check_enumeration("automorphism enumeration", group.cardinality() as u128)?;
    let candidates: Vec<Vec<Vec<u64>>> = group
        .orders()
        .iter()
        .map(|&d_i| {
            group
                .elements()
                .filter(|t| {
                    t.coords
                        .iter()
                        .zip(group.orders())
                        .all(|(&c, &d_j)| (d_i * c) % d_j == 0)
                })
                .map(|t| t.coords)
                .collect()
        })
        .collect();

    let mut out = Vec::new();
    let mut rows: Vec<Vec<u64>> = Vec::new();
    let mut set = HashSet::new();
    set.insert(vec![0; group.rank()]);
    let span = vec![vec![0; group.rank()]];
    search_automorphisms(group, &candidates, &mut rows, set, span, &mut out);
    Ok(out)
}

fn search_automorphisms(
    group: &GroupSpec,
    candidates: &[Vec<Vec<u64>>],
    rows: &mut Vec<Vec<u64>>,
    set: HashSet<Vec<u64>>,
    span: Vec<Vec<u64>>,
    out: &mut Vec<Automorphism>,
) {
    let i = rows.len();
    if i == group.rank() {
        let hom = Homomorphism::from_rows_unchecked(group, group, rows.clone());
        out.push(Automorphism(hom));
        return;
    }
    let d_i = group.orders()[i] as usize;
    for t in &candidates[i] {
        let mut next_set = set.clone();
        let mut next_span = span.clone();
        extend_closure(group, &mut next_set, &mut next_span, t);
        if next_span.len() != span.len() * d_i {
            continue;
        }
        rows.push(t.clone());
        search_automorphisms(group, candidates, rows, next_set, next_span, out);
        rows.pop();
    }
}

/// `{τ ∈ Aut(A) : Hτ = H}`.
pub fn stabilizer(subgroup: &Subgroup) -> Result<Vec<Automorphism>> {
    let autos = automorphism_group(subgroup.parent())?;
    Ok(autos
        .into_iter()
        .filter(|tau| subgroup.elements().iter().all(|h| subgroup.contains(&tau.apply(h))))
        .collect())
}

/// Invariant under every automorphism of the parent group.
pub fn is_characteristic(subgroup: &Subgroup) -> Result<bool> {
    let autos = automorphism_group(subgroup.parent())?;
    Ok(autos
        .iter()
        .all(|tau| subgroup.generators().iter().all(|h| subgroup.contains(&tau.apply(h)))))
}

pub(crate) fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|k| k * k <= n).all(|k| n % k != 0)
}

pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut k = 2;
    while k * k <= n {
        if n % k == 0 {
            out.push(k);
            while n % k == 0 {
                n /= k;
            }
        }
        k += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Largest power of `p` dividing `n`.
pub(crate) fn p_part(mut n: u64, p: u64) -> u64 {
    let mut out = 1;
    while n % p == 0 {
        n /= p;
        out *= p;
    }
    out
}
