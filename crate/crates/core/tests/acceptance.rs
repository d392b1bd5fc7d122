//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
//! failure.

mod common;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Display;
use std::panic::{self, AssertUnwindSafe};
use std::path::Path;
use std::sync::atomic::{AtomicU64, Ordering};
use std::time::Instant;

use abdual::codes::{self, AdditiveCode, PowerGroup, Side};
use abdual::duality::{self, Duality};
use abdual::enumerators::{self, Direction, HammingEnumerator, Poly};
use abdual::group::{all_subgroups, GroupSpec, Subgroup};
use abdual::tables;
use abdual::{CycInt, Error};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{Matrix, Word};

type Outcome = Result<String, String>;

static TRANSFORMS: AtomicU64 = AtomicU64::new(0);
static INEXACT: AtomicU64 = AtomicU64::new(0);

fn fail(e: impl Display) -> String {
    e.to_string()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn spec(orders: &[u64]) -> Result<GroupSpec, String> {
    GroupSpec::new(orders).map_err(fail)
}

fn mat(rows: &[&[u64]]) -> Matrix {
    rows.iter().map(|r| r.to_vec()).collect()
}

fn duality_of(a: &GroupSpec, m: &Matrix) -> Result<Duality, String> {
    Duality::from_rows(a, &common::to_i64(m)).map_err(fail)
}

fn words(h: &Subgroup) -> Vec<Word> {
    h.elements().iter().map(|x| x.coords().to_vec()).collect()
}

fn word_set(h: &Subgroup) -> BTreeSet<Word> {
    words(h).into_iter().collect()
}

fn parse_set(a: &GroupSpec, text: &[&str]) -> BTreeSet<Word> {
    text.iter()
        .map(|t| a.parse_element(t).expect("literal element").coords().to_vec())
        .collect()
}

fn subgroup_of(a: &GroupSpec, text: &[&str]) -> Result<Subgroup, String> {
    let gens = text.iter().map(|t| a.parse_element(t)).collect::<Result<Vec<_>, _>>().map_err(fail)?;
    Subgroup::closure(a, &gens).map_err(fail)
}

// 1. Duality census and adjoint pairings.
fn duality_census() -> Outcome {
    let cases: [(&[u64], usize, usize); 3] = [(&[2, 2], 6, 4), (&[2, 4], 8, 4), (&[3, 3], 48, 18)];
    for (orders, total, sym) in cases {
        let auts = common::automorphisms(orders);
        let oracle_sym = auts.iter().filter(|t| common::is_symmetric(orders, t)).count();
        ensure(auts.len() == total && oracle_sym == sym, || {
            format!("oracle census of {orders:?}: ({}, {oracle_sym})", auts.len())
        })?;
        let a = spec(orders)?;
        let lib = duality::all_dualities(&a).map_err(fail)?;
        let lib_sym = lib.iter().filter(|p| p.is_symmetric()).count();
        ensure(lib.len() == total && lib_sym == sym, || {
            format!("library census of {orders:?}: ({}, {lib_sym})", lib.len())
        })?;
        let lib_set: BTreeSet<Matrix> = lib.iter().map(|p| p.tau().matrix().to_vec()).collect();
        let oracle_set: BTreeSet<Matrix> = auts.into_iter().collect();
        ensure(lib_set == oracle_set, || format!("duality matrices of {orders:?} differ from the oracle"))?;
    }
    let pairs: [(&[u64], Matrix, Matrix); 3] = [
        (&[2, 2], mat(&[&[1, 1], &[0, 1]]), mat(&[&[1, 0], &[1, 1]])),
        (&[2, 4], mat(&[&[1, 0], &[1, 1]]), mat(&[&[1, 2], &[0, 1]])),
        (&[2, 4], mat(&[&[1, 2], &[0, 3]]), mat(&[&[1, 0], &[1, 3]])),
    ];
    for (orders, p, q) in pairs {
        ensure(common::adjoint(orders, &p) == q && common::adjoint(orders, &q) == p, || {
            format!("oracle adjoint of {p:?} over {orders:?} is not {q:?}")
        })?;
        let a = spec(orders)?;
        let phi = duality_of(&a, &p)?;
        ensure(phi.adjoint().tau().matrix() == q.as_slice(), || {
            format!("library adjoint of {p:?} is {}", phi.adjoint().display_matrix())
        })?;
        ensure(phi.adjoint().adjoint() == phi, || "adjoint is not an involution".into())?;
    }
    Ok("(6,4) (8,4) (48,18); φ_4*=φ_5 on F_2^2; φ_4*=φ_7, φ_5*=φ_6 on Z/2×Z/4".into())
}

// 2. Symmetric invertible matrices.
fn symmetric_count_formula() -> Outcome {
    let cases = [(1, 2), (2, 2), (3, 2), (4, 2), (1, 3), (2, 3), (3, 3), (2, 5)];
    let mut seen = Vec::new();
    for (n, q) in cases {
        let (gl, sym) = common::gl_census(n, q);
        let formula = duality::count_symmetric_invertible(n as u32, q);
        ensure(formula == BigInt::from(sym), || format!("N({n}) at q={q}: formula {formula}, census {sym}"))?;
        ensure(duality::gl_order(n as u32, q) == BigInt::from(gl), || format!("|GL({n},{q})| disagrees"))?;
        seen.push(format!("N({n},{q})={sym}"));
    }
    ensure(duality::count_symmetric_invertible(3, 2) == BigInt::from(28), || "N(3) at q=2 is not 28".into())?;
    Ok(seen.join(" "))
}

/// Checks library and oracle duals of each named subgroup against a table
/// row of `(left, right)` names, then the rendered table cells.
fn check_dual_rows(
    orders: &[u64],
    names: &[(&str, &[&str])],
    columns: &[&str],
    rows: &[(Matrix, &[&str])],
    table_id: &str,
) -> Result<usize, String> {
    let a = spec(orders)?;
    let named: Vec<(String, Subgroup)> = names
        .iter()
        .map(|(n, gens)| Ok((n.to_string(), subgroup_of(&a, gens)?)))
        .collect::<Result<_, String>>()?;
    let lookup = |name: &str| -> &Subgroup { &named.iter().find(|(n, _)| n == name).expect("named subgroup").1 };
    let mut cells = 0;
    for (tau, expected) in rows {
        let phi = duality_of(&a, tau)?;
        for (j, col) in columns.iter().enumerate() {
            let h = lookup(col);
            let (want_l, want_r) = (lookup(expected[2 * j]), lookup(expected[2 * j + 1]));
            let l = codes::left_dual(h, &phi).map_err(fail)?;
            let r = codes::right_dual(h, &phi).map_err(fail)?;
            ensure(l == *want_l && r == *want_r, || {
                format!("{table_id}: duals of {col} under {tau:?} are not {}/{}", expected[2 * j], expected[2 * j + 1])
            })?;
            let hw = words(h);
            ensure(
                common::left_dual(orders, tau, 1, &hw) == word_set(want_l)
                    && common::right_dual(orders, tau, 1, &hw) == word_set(want_r),
                || format!("{table_id}: oracle disagrees with the expected table at {col} under {tau:?}"),
            )?;
            cells += 2;
        }
    }
    let table = tables::paper_table(table_id).map_err(fail)?;
    let section = table
        .sections
        .iter()
        .find(|s| s.rows.len() == rows.len() && s.header.len() >= 2 + 2 * columns.len())
        .ok_or_else(|| format!("{table_id}: no dual-code section"))?;
    for ((tau, expected), row) in rows.iter().zip(&section.rows) {
        let phi = duality_of(&a, tau)?;
        ensure(row[1] == phi.display_matrix(), || format!("{table_id}: row order differs at {}", row[1]))?;
        for (k, name) in expected.iter().enumerate() {
            ensure(row[2 + k] == *name, || format!("{table_id}: rendered cell {} is {}, not {name}", k, row[2 + k]))?;
        }
    }
    Ok(cells)
}

// 3. Dual-code tables.
fn dual_code_tables() -> Outcome {
    let mut cells = 0;

    let klein: [(&str, &[&str]); 3] = [("C_0", &["10"]), ("C_1", &["11"]), ("C_∞", &["01"])];
    let klein_rows: Vec<(Matrix, &[&str])> = vec![
        (mat(&[&[1, 0], &[0, 1]]), &["C_∞", "C_∞", "C_1", "C_1", "C_0", "C_0"]),
        (mat(&[&[0, 1], &[1, 1]]), &["C_0", "C_0", "C_∞", "C_∞", "C_1", "C_1"]),
        (mat(&[&[1, 1], &[1, 0]]), &["C_1", "C_1", "C_0", "C_0", "C_∞", "C_∞"]),
        (mat(&[&[0, 1], &[1, 0]]), &["C_0", "C_0", "C_1", "C_1", "C_∞", "C_∞"]),
        (mat(&[&[1, 1], &[0, 1]]), &["C_∞", "C_1", "C_0", "C_∞", "C_1", "C_0"]),
        (mat(&[&[1, 0], &[1, 1]]), &["C_1", "C_∞", "C_∞", "C_0", "C_0", "C_1"]),
    ];
    cells += check_dual_rows(&[2, 2], &klein, &["C_0", "C_1", "C_∞"], &klein_rows, "4.4")?;
    let a = spec(&[2, 2])?;
    let mut self_dual_sets = Vec::new();
    for (tau, _) in &klein_rows {
        let phi = duality_of(&a, tau)?;
        let sd: Vec<&str> = klein
            .iter()
            .filter(|(_, g)| {
                let h = subgroup_of(&a, g).expect("literal subgroup");
                codes::left_dual(&h, &phi).expect("dual") == h
            })
            .map(|(n, _)| *n)
            .collect();
        self_dual_sets.push(sd);
    }
    ensure(
        self_dual_sets[..3].iter().all(|s| s.len() == 1)
            && self_dual_sets[0] != self_dual_sets[1]
            && self_dual_sets[1] != self_dual_sets[2]
            && self_dual_sets[0] != self_dual_sets[2]
            && self_dual_sets[3].len() == 3
            && self_dual_sets[4].is_empty()
            && self_dual_sets[5].is_empty(),
        || format!("self-dual pattern over F_2^2 is {self_dual_sets:?}"),
    )?;

    let f8 = [2u64, 2, 2];
    let a = spec(&f8)?;
    let p = mat(&[&[0, 0, 1], &[1, 1, 0], &[1, 0, 0]]);
    let phi = duality_of(&a, &p)?;
    let c = subgroup_of(&a, &["100"])?;
    let l = codes::left_dual(&c, &phi).map_err(fail)?;
    let r = codes::right_dual(&c, &phi).map_err(fail)?;
    let want_l = parse_set(&a, &["000", "100", "011", "111"]);
    let want_r = parse_set(&a, &["000", "100", "010", "110"]);
    ensure(word_set(&l) == want_l && word_set(&r) == want_r, || "F_2^3 duals of {000,100} differ".into())?;
    let cw = words(&c);
    ensure(
        common::left_dual(&f8, &p, 1, &cw) == want_l && common::right_dual(&f8, &p, 1, &cw) == want_r,
        || "F_2^3 oracle duals differ".into(),
    )?;
    ensure(l.intersection(&r) == c && l != r && !phi.is_symmetric(), || "F_2^3 intersection facts fail".into())?;
    ensure(
        codes::self_dual_kind(&c, &phi).map_err(fail)? == codes::SelfDualKind::SelfOrthogonal,
        || "{000,100} is not reported self-orthogonal".into(),
    )?;
    let all8 = duality::all_dualities(&a).map_err(fail)?;
    ensure(
        all8.len() == 168 && all8.iter().filter(|p| p.is_symmetric()).count() == 28,
        || "F_2^3 census is not (168, 28)".into(),
    )?;
    cells += 2;

    let z2z4: [(&str, &[&str]); 6] = [
        ("ℓ_0", &["10"]),
        ("ℓ_1", &["12"]),
        ("ℓ_∞", &["02"]),
        ("C_1", &["01"]),
        ("C_2", &["11"]),
        ("S", &["10", "02"]),
    ];
    let z2z4_rows: Vec<(Matrix, &[&str])> = vec![
        (mat(&[&[1, 0], &[0, 1]]), &["C_1", "C_1", "C_2", "C_2", "S", "S"]),
        (mat(&[&[1, 2], &[1, 1]]), &["C_2", "C_2", "C_1", "C_1", "S", "S"]),
        (mat(&[&[1, 0], &[0, 3]]), &["C_1", "C_1", "C_2", "C_2", "S", "S"]),
        (mat(&[&[1, 2], &[1, 3]]), &["C_2", "C_2", "C_1", "C_1", "S", "S"]),
        (mat(&[&[1, 0], &[1, 1]]), &["C_2", "C_1", "C_1", "C_2", "S", "S"]),
        (mat(&[&[1, 2], &[0, 3]]), &["C_1", "C_2", "C_2", "C_1", "S", "S"]),
        (mat(&[&[1, 0], &[1, 3]]), &["C_2", "C_1", "C_1", "C_2", "S", "S"]),
        (mat(&[&[1, 2], &[0, 1]]), &["C_1", "C_2", "C_2", "C_1", "S", "S"]),
    ];
    cells += check_dual_rows(&[2, 4], &z2z4, &["ℓ_0", "ℓ_1", "ℓ_∞"], &z2z4_rows, "4.11")?;
    let a = spec(&[2, 4])?;
    let l_inf = subgroup_of(&a, &["02"])?;
    let c1 = subgroup_of(&a, &["01"])?;
    ensure(l_inf.order() * c1.order() == a.cardinality(), || "size condition fails".into())?;
    for tau in common::automorphisms(&[2, 4]) {
        let oracle = common::left_dual(&[2, 4], &tau, 1, &words(&l_inf));
        ensure(oracle != word_set(&c1), || format!("oracle finds 𝔏(ℓ_∞) = C_1 under {tau:?}"))?;
        let phi = duality_of(&a, &tau)?;
        ensure(codes::left_dual(&l_inf, &phi).map_err(fail)? != c1, || format!("library finds 𝔏(ℓ_∞) = C_1 under {tau:?}"))?;
    }

    let lines: [(&str, &[&str]); 4] = [("ℓ_0", &["10"]), ("ℓ_1", &["11"]), ("ℓ_2", &["12"]), ("ℓ_∞", &["01"])];
    let f9_rows: Vec<(Matrix, &[&str])> = vec![
        (mat(&[&[1, 0], &[0, 1]]), &["ℓ_∞", "ℓ_∞", "ℓ_2", "ℓ_2", "ℓ_1", "ℓ_1", "ℓ_0", "ℓ_0"]),
        (mat(&[&[1, 0], &[0, 2]]), &["ℓ_∞", "ℓ_∞", "ℓ_1", "ℓ_1", "ℓ_2", "ℓ_2", "ℓ_0", "ℓ_0"]),
        (mat(&[&[1, 1], &[0, 1]]), &["ℓ_∞", "ℓ_2", "ℓ_1", "ℓ_1", "ℓ_0", "ℓ_∞", "ℓ_2", "ℓ_0"]),
        (mat(&[&[0, 2], &[1, 0]]), &["ℓ_0", "ℓ_0", "ℓ_1", "ℓ_1", "ℓ_2", "ℓ_2", "ℓ_∞", "ℓ_∞"]),
        (mat(&[&[2, 1], &[0, 1]]), &["ℓ_∞", "ℓ_1", "ℓ_0", "ℓ_2", "ℓ_1", "ℓ_∞", "ℓ_2", "ℓ_0"]),
        (mat(&[&[2, 2], &[0, 2]]), &["ℓ_∞", "ℓ_2", "ℓ_1", "ℓ_1", "ℓ_0", "ℓ_∞", "ℓ_2", "ℓ_0"]),
    ];
    cells += check_dual_rows(&[3, 3], &lines, &["ℓ_0", "ℓ_1", "ℓ_2", "ℓ_∞"], &f9_rows, "6.3-duals")?;
    Ok(format!("{cells} cells; no duality of Z/2×Z/4 has 𝔏(ℓ_∞) = C_1 (8 scanned)"))
}

fn oracle_classes(orders: &[u64]) -> Vec<BTreeSet<Matrix>> {
    let auts = common::automorphisms(orders);
    let mut classes: Vec<BTreeSet<Matrix>> = Vec::new();
    for tau in &auts {
        match classes
            .iter_mut()
            .find(|c| common::congruent(orders, &auts, c.iter().next().expect("nonempty"), tau))
        {
            Some(c) => {
                c.insert(tau.clone());
            }
            None => classes.push(BTreeSet::from([tau.clone()])),
        }
    }
    classes
}

fn oracle_subgroups(orders: &[u64]) -> BTreeSet<BTreeSet<Word>> {
    let all = common::elements(orders);
    let mut out = BTreeSet::new();
    for x in &all {
        for y in &all {
            out.insert(common::span(orders, &[x.clone(), y.clone()]));
        }
    }
    out
}

// 4. Congruence classes.
fn congruence_classes() -> Outcome {
    let mut report = Vec::new();
    let expected: [(&[u64], Vec<(Matrix, usize)>); 2] = [
        (
            &[2, 2],
            vec![
                (mat(&[&[1, 0], &[0, 1]]), 3),
                (mat(&[&[0, 1], &[1, 0]]), 1),
                (mat(&[&[1, 1], &[0, 1]]), 2),
            ],
        ),
        (
            &[3, 3],
            vec![
                (mat(&[&[1, 0], &[0, 1]]), 6),
                (mat(&[&[1, 0], &[0, 2]]), 12),
                (mat(&[&[1, 1], &[0, 1]]), 8),
                (mat(&[&[0, 2], &[1, 0]]), 2),
                (mat(&[&[2, 1], &[0, 1]]), 12),
                (mat(&[&[2, 2], &[0, 2]]), 8),
            ],
        ),
    ];
    for (orders, reps) in expected {
        let oracle = oracle_classes(orders);
        let a = spec(orders)?;
        let lib: BTreeSet<BTreeSet<Matrix>> = duality::congruence_classes(&a)
            .map_err(fail)?
            .into_iter()
            .map(|c| c.members.iter().map(|p| p.tau().matrix().to_vec()).collect())
            .collect();
        ensure(lib == oracle.iter().cloned().collect(), || format!("library partition of {orders:?} differs from the oracle"))?;
        let mut sizes: Vec<usize> = oracle.iter().map(BTreeSet::len).collect();
        let mut want: Vec<usize> = reps.iter().map(|r| r.1).collect();
        sizes.sort();
        want.sort();
        ensure(sizes == want, || format!("class sizes of {orders:?} are {sizes:?}"))?;
        let mut used = BTreeSet::new();
        for (rep, size) in &reps {
            let k = oracle.iter().position(|c| c.contains(rep)).expect("every matrix is classified");
            ensure(oracle[k].len() == *size && used.insert(k), || format!("{rep:?} is not alone in a class of size {size}"))?;
        }
        let subgroups = oracle_subgroups(orders);
        let lib_subgroups = all_subgroups(&a).map_err(fail)?;
        for class in &oracle {
            let sym: BTreeSet<bool> = class.iter().map(|t| common::is_symmetric(orders, t)).collect();
            ensure(sym.len() == 1, || format!("symmetry varies in a class of {orders:?}"))?;
            let mut counts = BTreeSet::new();
            for tau in class {
                let oracle_count = subgroups
                    .iter()
                    .filter(|h| {
                        let hw: Vec<Word> = h.iter().cloned().collect();
                        common::left_dual(orders, tau, 1, &hw) == **h
                    })
                    .count();
                let lib_count = codes::count_self_dual(&lib_subgroups, &duality_of(&a, tau)?).map_err(fail)?;
                ensure(oracle_count == lib_count, || format!("self-dual count of {tau:?}: {lib_count} vs {oracle_count}"))?;
                counts.insert(oracle_count);
            }
            ensure(counts.len() == 1, || format!("self-dual counts vary within a class of {orders:?}: {counts:?}"))?;
        }
        report.push(format!("{orders:?} sizes {sizes:?}"));
    }
    ensure(
        {
            let klein = oracle_classes(&[2, 2]);
            let three = klein.iter().find(|c| c.len() == 3).expect("class of three");
            [mat(&[&[1, 0], &[0, 1]]), mat(&[&[1, 1], &[1, 0]]), mat(&[&[0, 1], &[1, 1]])]
                .iter()
                .all(|m| three.contains(m))
        },
        || "φ_0, φ_1, φ_2 of F_2^2 are not congruent".into(),
    )?;
    Ok(report.join("; "))
}

const SUITE: [&[u64]; 5] = [&[2, 2], &[2, 4], &[3, 3], &[8], &[9]];

/// Every (group, n, code, duality) of the property matrix.
fn for_each_case(mut visit: impl FnMut(&[u64], &PowerGroup, &Subgroup, &Matrix, &Duality) -> Result<(), String>) -> Result<usize, String> {
    let mut cases = 0;
    for orders in SUITE {
        let a = spec(orders)?;
        let dualities = duality::all_dualities(&a).map_err(fail)?;
        for n in 1..=2 {
            let power = PowerGroup::new(&a, n).map_err(fail)?;
            for c in all_subgroups(power.spec()).map_err(fail)? {
                for phi in &dualities {
                    visit(orders, &power, &c, &phi.tau().matrix().to_vec(), phi)?;
                    cases += 1;
                }
            }
        }
    }
    Ok(cases)
}

// 5. Size, double duality, adjoint swap, sum oracle.
fn property_suite() -> Outcome {
    let mut sums = 0u64;
    let cases = for_each_case(|orders, power, c, tau, phi| {
        let n = power.n();
        let total = power.spec().cardinality();
        let ext = codes::extend_duality(phi, n).map_err(fail)?;
        let l = codes::left_dual(c, &ext).map_err(fail)?;
        let r = codes::right_dual(c, &ext).map_err(fail)?;
        let cw = words(c);
        let where_ = || format!("{orders:?}^{n}, C = {}, τ = {tau:?}", c.display_elements());
        ensure(
            word_set(&l) == common::left_dual(orders, tau, n, &cw) && word_set(&r) == common::right_dual(orders, tau, n, &cw),
            || format!("duals disagree with the oracle at {}", where_()),
        )?;
        ensure(l.order() * c.order() == total && r.order() * c.order() == total, || {
            format!("size condition fails at {}", where_())
        })?;
        ensure(
            codes::left_dual(&r, &ext).map_err(fail)? == *c && codes::right_dual(&l, &ext).map_err(fail)? == *c,
            || format!("double duality fails at {}", where_()),
        )?;
        let adj = ext.adjoint();
        ensure(
            codes::left_dual(c, &adj).map_err(fail)? == r && codes::right_dual(c, &adj).map_err(fail)? == l,
            || format!("adjoint swap fails at {}", where_()),
        )?;
        let m = power.spec().exponent();
        let size = CycInt::from_int(m, c.order());
        let zero = CycInt::zero(m);
        for x in power.spec().elements() {
            let left = codes::side_sum(c, &ext, &x, Side::Left).map_err(fail)?;
            let right = codes::side_sum(c, &ext, &x, Side::Right).map_err(fail)?;
            let want_l = if l.contains(&x) { &size } else { &zero };
            let want_r = if r.contains(&x) { &size } else { &zero };
            ensure(left == *want_l && right == *want_r, || format!("sum oracle fails at x = {x}, {}", where_()))?;
            sums += 2;
        }
        Ok(())
    })?;
    Ok(format!("{cases} (code, duality) cases, {sums} character sums"))
}

// 6. Filtrations.
fn filtration_duality() -> Outcome {
    let groups: [(&[u64], u64); 4] = [(&[2, 4], 2), (&[8], 2), (&[9], 3), (&[2, 2, 2], 2)];
    let mut steps_seen = 0;
    for (orders, p) in groups {
        let a = spec(orders)?;
        let steps = codes::mult_by_p_filtration(&a, p).map_err(fail)?;
        let auts = common::automorphisms(orders);
        let all = common::elements(orders);
        let mut scale = 1u64;
        for step in &steps {
            let kernel: BTreeSet<Word> = all
                .iter()
                .filter(|x| x.iter().zip(orders.iter()).all(|(&c, &d)| (c * scale) % d == 0))
                .cloned()
                .collect();
            let image: BTreeSet<Word> = all
                .iter()
                .map(|x| x.iter().zip(orders.iter()).map(|(&c, &d)| (c * scale) % d).collect())
                .collect();
            ensure(word_set(&step.kernel) == kernel && word_set(&step.image) == image, || {
                format!("filtration step {} of {orders:?} differs from p^j scaling", step.j)
            })?;
            for set in [&kernel, &image] {
                for tau in &auts {
                    ensure(set.iter().all(|x| set.contains(&common::image(orders, tau, x))), || {
                        format!("step {} of {orders:?} is not characteristic", step.j)
                    })?;
                }
            }
            let kw: Vec<Word> = kernel.iter().cloned().collect();
            for tau in &auts {
                ensure(
                    common::left_dual(orders, tau, 1, &kw) == image && common::right_dual(orders, tau, 1, &kw) == image,
                    || format!("im f^{} is not the dual of ker f^{} under {tau:?}", step.j, step.j),
                )?;
            }
            scale *= p;
            steps_seen += 1;
        }
        ensure(steps.last().map(|s| s.image.is_trivial()) == Some(true), || "filtration does not reach 0".into())?;
        ensure(codes::verify_filtration_duality(&a, p).map_err(fail)?, || format!("library check fails on {orders:?}"))?;
    }
    Ok(format!("{steps_seen} filtration steps over Z/2×Z/4, Z/8, Z/9, F_2^3"))
}

// 7. Constructive dualities for pairs.
fn constructive_pairs() -> Outcome {
    let mut pairs = 0;
    for orders in [&[2u64, 2, 2][..], &[3, 3]] {
        let a = spec(orders)?;
        let subs = all_subgroups(&a).map_err(fail)?;
        for h in &subs {
            for k in &subs {
                if h.order() * k.order() != a.cardinality() {
                    continue;
                }
                let phi = codes::construct_duality_for_pair(h, k).map_err(fail)?;
                let tau = phi.tau().matrix().to_vec();
                ensure(common::is_symmetric(orders, &tau), || format!("construction for {h:?}, {k:?} is not symmetric"))?;
                let (hw, kw) = (words(h), words(k));
                ensure(
                    common::left_dual(orders, &tau, 1, &hw) == word_set(k)
                        && common::right_dual(orders, &tau, 1, &hw) == word_set(k)
                        && common::left_dual(orders, &tau, 1, &kw) == word_set(h)
                        && common::right_dual(orders, &tau, 1, &kw) == word_set(h),
                    || format!("construction misses the pair {}, {}", h.display_elements(), k.display_elements()),
                )?;
                let found = codes::dualities_for_pair(h, k).map_err(fail)?;
                ensure(found.contains(&phi), || "exhaustive search does not contain the construction".into())?;
                let oracle_found = common::automorphisms(orders)
                    .into_iter()
                    .filter(|t| {
                        common::left_dual(orders, t, 1, &hw) == word_set(k) && common::right_dual(orders, t, 1, &hw) == word_set(k)
                    })
                    .count();
                ensure(oracle_found == found.len(), || {
                    format!("search finds {} dualities, oracle {oracle_found}", found.len())
                })?;
                pairs += 1;
            }
        }
    }
    Ok(format!("{pairs} pairs over F_2^3 and F_3^2"))
}

fn transform<T>(result: abdual::Result<T>) -> Result<T, String> {
    TRANSFORMS.fetch_add(1, Ordering::Relaxed);
    if let Err(Error::NotDivisible(_)) = &result {
        INEXACT.fetch_add(1, Ordering::Relaxed);
    }
    result.map_err(fail)
}

fn poisson_instances(count: usize) -> Result<usize, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x6d61_6377);
    let groups: [&[u64]; 7] = [&[2, 2], &[2, 4], &[3, 3], &[8], &[9], &[2, 2, 2], &[6]];
    for instance in 0..count {
        let orders = groups[rng.gen_range(0..groups.len())];
        let a = spec(orders)?;
        let m = a.exponent();
        let subs = all_subgroups(&a).map_err(fail)?;
        let h = &subs[rng.gen_range(0..subs.len())];
        let all = common::elements(orders);
        let mut f: Vec<Poly> = Vec::with_capacity(all.len());
        let mut values: Vec<BTreeMap<Vec<u32>, CycInt>> = Vec::with_capacity(all.len());
        for _ in &all {
            let mut value = BTreeMap::new();
            let mut poly = Poly::zero(m);
            for _ in 0..rng.gen_range(0..=2) {
                let key = vec![rng.gen_range(0..3u32), rng.gen_range(0..3u32)];
                let counts: Vec<BigInt> = (0..m).map(|_| BigInt::from(rng.gen_range(-3i64..=3))).collect();
                let coeff = CycInt::from_root_counts(m, &counts);
                poly = poly.checked_add(&Poly::monomial(key.clone(), coeff.clone())).map_err(fail)?;
                let slot = value.entry(key).or_insert_with(|| CycInt::zero(m));
                *slot = slot.checked_add(&coeff).map_err(fail)?;
            }
            f.push(poly);
            values.push(value);
        }
        ensure(transform(enumerators::poisson_check(h, &f))?, || format!("Poisson check fails on instance {instance}"))?;
        let hw = words(h);
        let ann: Vec<&Word> = all
            .iter()
            .filter(|e| hw.iter().all(|x| common::pairing(orders, e, x) == 0))
            .collect();
        ensure(ann.len() as u64 * h.order() == a.cardinality(), || "|ann|·|H| ≠ |A|".into())?;
        let keys: BTreeSet<&Vec<u32>> = values.iter().flat_map(|v| v.keys()).collect();
        for key in keys {
            let coeff = |i: usize| values[i].get(key).cloned().unwrap_or_else(|| CycInt::zero(m));
            let mut lhs = CycInt::zero(m);
            for x in &hw {
                lhs = lhs.checked_add(&coeff(common::rank_of(orders, x))).map_err(fail)?;
            }
            let mut rhs = CycInt::zero(m);
            for e in &ann {
                for (i, x) in all.iter().enumerate() {
                    let term = coeff(i).mul_root(common::pairing(orders, e, x) as i64);
                    rhs = rhs.checked_add(&term).map_err(fail)?;
                }
            }
            ensure(rhs == lhs.scale(&BigInt::from(ann.len())), || {
                format!("oracle Poisson sides differ on instance {instance}")
            })?;
        }
    }
    Ok(count)
}

// 8. MacWilliams identities.
fn macwilliams() -> Outcome {
    let mut identities = 0u64;
    let cases = for_each_case(|orders, power, c, tau, phi| {
        let n = power.n();
        let size_a = power.base().cardinality();
        let ext = codes::extend_duality(phi, n).map_err(fail)?;
        let l = codes::left_dual(c, &ext).map_err(fail)?;
        let r = codes::right_dual(c, &ext).map_err(fail)?;
        let code = AdditiveCode::from_subgroup(power, c.clone()).map_err(fail)?;
        let left = AdditiveCode::from_subgroup(power, l.clone()).map_err(fail)?;
        let right = AdditiveCode::from_subgroup(power, r.clone()).map_err(fail)?;
        let where_ = || format!("{orders:?}^{n}, C = {}, τ = {tau:?}", c.display_elements());

        let (hc, hl, hr) = (enumerators::hwe(&code), enumerators::hwe(&left), enumerators::hwe(&right));
        ensure(
            hc.coeffs() == common::weight_distribution(orders, n, &words(c)).as_slice()
                && hl.coeffs() == common::weight_distribution(orders, n, &words(&l)).as_slice(),
            || format!("hwe differs from the weight census at {}", where_()),
        )?;
        ensure(hl == hr, || format!("left and right duals have different hwe at {}", where_()))?;
        let back = transform(enumerators::mw_hamming_transform(&hl, size_a, l.order()))?;
        let there = transform(enumerators::mw_hamming_transform(&hc, size_a, c.order()))?;
        let oracle = common::hamming_transform(hl.coeffs(), size_a, l.order())
            .ok_or_else(|| format!("oracle Hamming transform is not integral at {}", where_()))?;
        ensure(back == hc && back.coeffs() == oracle.as_slice() && there == hl, || {
            format!("Hamming identity fails at {}", where_())
        })?;

        let (cc, cl, cr) = (enumerators::cwe(&code), enumerators::cwe(&left), enumerators::cwe(&right));
        ensure(
            cc.terms() == &common::complete_counts(orders, n, &words(c)) && cl.terms() == &common::complete_counts(orders, n, &words(&l)),
            || format!("cwe differs from the count census at {}", where_()),
        )?;
        ensure(cc.hamming() == hc, || format!("cwe does not specialize to hwe at {}", where_()))?;
        let checks = [
            (&cl, Direction::FromDual, Side::Left, &cc),
            (&cr, Direction::FromDual, Side::Right, &cc),
            (&cc, Direction::ToDual, Side::Left, &cl),
            (&cc, Direction::ToDual, Side::Right, &cr),
        ];
        for (input, direction, side, want) in checks {
            let got = transform(enumerators::mw_complete_transform(input, phi, direction, side))?;
            ensure(got == *want, || format!("complete identity {direction:?}/{side} fails at {}", where_()))?;
        }
        identities += 6;
        Ok(())
    })?;
    let poisson = poisson_instances(200)?;
    Ok(format!("{identities} identities over {cases} cases; {poisson} Poisson instances"))
}

fn rust_sources(dir: &Path, out: &mut Vec<std::path::PathBuf>) {
    for entry in std::fs::read_dir(dir).expect("readable source dir").flatten() {
        let path = entry.path();
        if path.is_dir() {
            rust_sources(&path, out);
        } else if path.extension().is_some_and(|e| e == "rs") {
            out.push(path);
        }
    }
}

// 9. Exactness.
fn exactness_gate() -> Outcome {
    let root = Path::new(env!("CARGO_MANIFEST_DIR"));
    let mut files = Vec::new();
    rust_sources(&root.join("src"), &mut files);
    rust_sources(&root.join("tests"), &mut files);
    let banned = [format!("f{}", 32), format!("f{}", 64)];
    for path in &files {
        let text = std::fs::read_to_string(path).map_err(fail)?;
        for token in &banned {
            let hit = text.match_indices(token.as_str()).any(|(i, _)| {
                let before = text[..i].chars().next_back();
                let after = text[i + token.len()..].chars().next();
                let ident = |c: Option<char>| c.is_some_and(|c| c.is_alphanumeric() || c == '_');
                !ident(before) && !ident(after)
            });
            ensure(!hit, || format!("{} uses {token}", path.display()))?;
        }
    }
    let transforms = TRANSFORMS.load(Ordering::Relaxed);
    let inexact = INEXACT.load(Ordering::Relaxed);
    ensure(transforms > 0, || "no exact divisions were recorded".into())?;
    ensure(inexact == 0, || format!("{inexact} of {transforms} divisions were not exact"))?;
    let probe = HammingEnumerator::new(1, vec![1, 1]).map_err(fail)?;
    ensure(
        matches!(enumerators::mw_hamming_transform(&probe, 2, 3), Err(Error::NotDivisible(_))),
        || "a non-genuine divisor was not reported".into(),
    )?;
    Ok(format!("{} source files free of floating point; {transforms} exact divisions", files.len()))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("duality census", duality_census),
        ("symmetric-count formula", symmetric_count_formula),
        ("dual-code tables", dual_code_tables),
        ("congruence classes", congruence_classes),
        ("property suite", property_suite),
        ("filtration duality", filtration_duality),
        ("constructive duality", constructive_pairs),
        ("MacWilliams end-to-end", macwilliams),
        ("exactness gate", exactness_gate),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        let ms = start.elapsed().as_millis();
        match outcome {
            Ok(detail) => println!("criterion {} {name}: PASS ({detail}) [{ms} ms]", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {} {name}: FAIL ({why}) [{ms} ms]", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
