//! The worked tables for the Klein four-group, `Z/2 × Z/4`, `F_2^3` and
//! `F_3^2`.
//!
//! Row order, matrices and subgroup names follow the published layout; every
//! cell is computed.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::characters::{all_characters, pairing_exponent};
use crate::codes::{duals_table, left_dual, right_dual, self_dual_kind};
use crate::duality::{all_dualities, congruence_classes, count_symmetric_invertible, gl_order, symmetric_ratio, Duality};
use crate::group::{Automorphism, GroupSpec, Subgroup};
use crate::{Error, Result};

pub const TABLE_IDS: [&str; 8] = ["3.3", "3.4", "4.4", "4.5", "4.11", "6.3-classes", "6.3-duals", "6.3"];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Section {
    pub caption: String,
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PaperTable {
    pub id: String,
    pub title: String,
    pub sections: Vec<Section>,
}

impl PaperTable {
    pub fn section(&self, caption_prefix: &str) -> Option<&Section> {
        self.sections.iter().find(|s| s.caption.starts_with(caption_prefix))
    }

    /// Aligned plain-text rendering; byte-stable for fixed input.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "{}", self.title).unwrap();
        for section in &self.sections {
            writeln!(out).unwrap();
            out.push_str(&section.render_text());
        }
        out
    }
}

impl Section {
    /// Caption, header, a dash rule and the rows, columns padded to a common
    /// width and separated by two spaces.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        if !self.caption.is_empty() {
            writeln!(out, "{}", self.caption).unwrap();
        }
        let cols = self.header.len();
        let mut widths = vec![0usize; cols];
        for row in std::iter::once(&self.header).chain(&self.rows) {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.chars().count());
            }
        }
        let line = |row: &[String]| {
            let cells: Vec<String> = row
                .iter()
                .zip(&widths)
                .map(|(c, &w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
                .collect();
            cells.join("  ").trim_end().to_string()
        };
        writeln!(out, "{}", line(&self.header)).unwrap();
        let total: usize = widths.iter().sum::<usize>() + 2 * cols.saturating_sub(1);
        writeln!(out, "{}", "-".repeat(total)).unwrap();
        for row in &self.rows {
            writeln!(out, "{}", line(row)).unwrap();
        }
        out
    }
}

/// Accepts the plain ids and `example-` prefixed forms.
pub fn normalize_id(id: &str) -> Option<&'static str> {
    let id = id.strip_prefix("example-").unwrap_or(id);
    TABLE_IDS.iter().copied().find(|&t| t == id)
}

pub fn paper_table(id: &str) -> Result<PaperTable> {
    match normalize_id(id) {
        Some("3.3") => table_3_3(),
        Some("3.4") => table_3_4(),
        Some("4.4") => table_4_4(),
        Some("4.5") => table_4_5(),
        Some("4.11") => table_4_11(),
        Some("6.3-classes") => table_6_3_classes(),
        Some("6.3-duals") => table_6_3_duals(),
        Some("6.3") => {
            let mut classes = table_6_3_classes()?;
            classes.sections.extend(table_6_3_duals()?.sections);
            classes.id = "6.3".into();
            Ok(classes)
        }
        _ => Err(Error::Unsupported(format!(
            "unknown table id {id:?}; known ids: {}",
            TABLE_IDS.join(", ")
        ))),
    }
}

/// The matrices of the Klein four-group table, in row order.
pub const KLEIN_ROWS: [[[i64; 2]; 2]; 6] = [
    [[1, 0], [0, 1]],
    [[1, 1], [1, 0]],
    [[0, 1], [1, 1]],
    [[0, 1], [1, 0]],
    [[1, 1], [0, 1]],
    [[1, 0], [1, 1]],
];

/// The matrices of the `Z/2 × Z/4` table, in row order.
pub const Z2Z4_ROWS: [[[i64; 2]; 2]; 8] = [
    [[1, 0], [0, 1]],
    [[1, 2], [1, 1]],
    [[1, 0], [0, 3]],
    [[1, 2], [1, 3]],
    [[1, 0], [1, 1]],
    [[1, 2], [0, 3]],
    [[1, 0], [1, 3]],
    [[1, 2], [0, 1]],
];

/// Row order of the Klein four-group dual-code table.
pub const KLEIN_DUAL_ROWS: [[[i64; 2]; 2]; 6] = [
    [[1, 0], [0, 1]],
    [[0, 1], [1, 1]],
    [[1, 1], [1, 0]],
    [[0, 1], [1, 0]],
    [[1, 1], [0, 1]],
    [[1, 0], [1, 1]],
];

/// Class representatives over `F_3^2`, in table order.
pub const F3_CLASS_REPS: [[[i64; 2]; 2]; 6] = [
    [[1, 0], [0, 1]],
    [[1, 0], [0, 2]],
    [[1, 1], [0, 1]],
    [[0, 2], [1, 0]],
    [[2, 1], [0, 1]],
    [[2, 2], [0, 2]],
];

pub const F4_SIGMA: [[i64; 2]; 2] = [[1, 0], [1, 1]];
pub const F4_TAU: [[i64; 2]; 2] = [[1, 2], [1, 1]];

fn spec(orders: &[u64]) -> GroupSpec {
    GroupSpec::new(orders).expect("fixed table groups are valid")
}

pub(crate) fn dualities_from(group: &GroupSpec, rows: &[[[i64; 2]; 2]]) -> Vec<Duality> {
    rows.iter()
        .map(|m| Duality::from_rows(group, &[m[0].to_vec(), m[1].to_vec()]).expect("table matrices are automorphisms"))
        .collect()
}

fn named(group: &GroupSpec, entries: &[(&str, &[&str])]) -> Vec<(String, Subgroup)> {
    entries
        .iter()
        .map(|(name, gens)| {
            let gens: Vec<_> = gens.iter().map(|g| group.parse_element(g).expect("fixed element")).collect();
            (name.to_string(), Subgroup::closure(group, &gens).expect("fixed subgroup"))
        })
        .collect()
}

/// The three order-2 subgroups of the Klein four-group.
pub fn klein_subgroups() -> Vec<(String, Subgroup)> {
    named(&spec(&[2, 2]), &[("C_0", &["10"]), ("C_1", &["11"]), ("C_∞", &["01"])])
}

/// Named subgroups of `Z/2 × Z/4` of orders 2 and 4.
pub fn z2z4_subgroups() -> Vec<(String, Subgroup)> {
    named(
        &spec(&[2, 4]),
        &[
            ("ℓ_0", &["10"]),
            ("ℓ_1", &["12"]),
            ("ℓ_∞", &["02"]),
            ("C_1", &["01"]),
            ("C_2", &["11"]),
            ("S", &["10", "02"]),
        ],
    )
}

/// The four lines of `F_3^2`.
pub fn f3_lines() -> Vec<(String, Subgroup)> {
    named(
        &spec(&[3, 3]),
        &[("ℓ_0", &["10"]), ("ℓ_1", &["11"]), ("ℓ_2", &["12"]), ("ℓ_∞", &["01"])],
    )
}

fn label(names: &[(String, Subgroup)], h: &Subgroup) -> String {
    names
        .iter()
        .find(|(_, s)| s == h)
        .map(|(n, _)| n.clone())
        .unwrap_or_else(|| h.display_elements())
}

fn phi_label(list: &[Duality], phi: &Duality) -> String {
    list.iter()
        .position(|p| p == phi)
        .map(|i| format!("φ_{i}"))
        .unwrap_or_else(|| phi.display_matrix())
}

fn root_text(m: u64, e: u64) -> String {
    match (m, e) {
        (_, 0) => "1".into(),
        (2, 1) | (4, 2) => "-1".into(),
        (4, 1) => "i".into(),
        (4, 3) => "-i".into(),
        _ => format!("ζ{m}^{e}"),
    }
}

fn character_section(group: &GroupSpec) -> Section {
    let mut header = vec!["π".to_string(), "ab".to_string()];
    header.extend(group.elements().map(|x| format!("⟨π,{x}⟩")));
    let rows = all_characters(group)
        .enumerate()
        .map(|(j, pi)| {
            let mut row = vec![format!("π_{j}"), pi.as_element().to_string()];
            row.extend(
                group
                    .elements()
                    .map(|x| root_text(group.exponent(), pairing_exponent(&pi, &x).expect("same group"))),
            );
            row
        })
        .collect();
    Section {
        caption: "characters π_j = φ_0(ab)".into(),
        header,
        rows,
    }
}

fn pi_label(group: &GroupSpec, phi: &Duality, x: &str) -> String {
    let x = group.parse_element(x).expect("fixed element");
    format!("π_{}", group.index_of(&phi.apply(&x).as_element()))
}

fn table_3_3() -> Result<PaperTable> {
    let group = spec(&[2, 2]);
    let rows_phi = dualities_from(&group, &KLEIN_ROWS);
    check_complete(&group, &rows_phi)?;
    let mut header = vec!["φ_i".to_string(), "P".to_string()];
    header.extend(["00", "01", "10", "11"].iter().map(|x| format!("φ_P({x})")));
    header.extend(["φ*_P".to_string(), "o(P)".to_string(), "symmetric".to_string()]);
    let rows = rows_phi
        .iter()
        .enumerate()
        .map(|(i, phi)| {
            let mut row = vec![format!("φ_{i}"), phi.display_matrix()];
            row.extend(["00", "01", "10", "11"].iter().map(|x| pi_label(&group, phi, x)));
            row.push(phi_label(&rows_phi, &phi.adjoint()));
            row.push(phi.tau().order().to_string());
            row.push(yes_no(phi.is_symmetric()));
            row
        })
        .collect();
    Ok(PaperTable {
        id: "3.3".into(),
        title: format!("Dualities of the Klein four-group {group}"),
        sections: vec![
            character_section(&group),
            Section {
                caption: "dualities φ_P(ab) = φ_0(abP)".into(),
                header,
                rows,
            },
        ],
    })
}

fn yes_no(b: bool) -> String {
    if b { "yes" } else { "no" }.into()
}

/// Errors unless `rows` lists every duality of `group` exactly once.
fn check_complete(group: &GroupSpec, rows: &[Duality]) -> Result<()> {
    let mut sorted = rows.to_vec();
    sorted.sort();
    sorted.dedup();
    if sorted != all_dualities(group)? {
        return Err(Error::Internal("table rows do not list every duality once".into()));
    }
    Ok(())
}

/// `σ^ε τ^j` for `P`, searched over `ε ∈ {0, 1}`, `0 ≤ j < 4`.
pub fn dihedral_word(p: &Automorphism) -> Option<String> {
    let group = p.group();
    let sigma = Automorphism::from_rows(group, &[F4_SIGMA[0].to_vec(), F4_SIGMA[1].to_vec()]).ok()?;
    let tau = Automorphism::from_rows(group, &[F4_TAU[0].to_vec(), F4_TAU[1].to_vec()]).ok()?;
    for eps in 0..2u64 {
        for j in 0..4u64 {
            if sigma.pow(eps).then(&tau.pow(j)) == *p {
                let t = match j {
                    0 => String::new(),
                    1 => "τ".into(),
                    _ => format!("τ^{j}"),
                };
                return Some(match (eps, j) {
                    (0, 0) => "I".into(),
                    (0, _) => t,
                    _ => format!("σ{t}"),
                });
            }
        }
    }
    None
}

fn table_3_4() -> Result<PaperTable> {
    let group = spec(&[2, 4]);
    let rows_phi = dualities_from(&group, &Z2Z4_ROWS);
    check_complete(&group, &rows_phi)?;
    let header: Vec<String> = ["φ_i", "σ^ε τ^j", "P", "φ_P(01)", "φ_P(10)", "φ*_P", "symmetric"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    let rows = rows_phi
        .iter()
        .enumerate()
        .map(|(i, phi)| {
            vec![
                format!("φ_{i}"),
                dihedral_word(phi.tau()).unwrap_or_else(|| "?".into()),
                phi.display_matrix(),
                pi_label(&group, phi, "01"),
                pi_label(&group, phi, "10"),
                phi_label(&rows_phi, &phi.adjoint()),
                yes_no(phi.is_symmetric()),
            ]
        })
        .collect();
    Ok(PaperTable {
        id: "3.4".into(),
        title: format!("Dualities of {group}"),
        sections: vec![
            character_section(&group),
            Section {
                caption: "dualities φ_P(ab) = φ_0(abP)".into(),
                header,
                rows,
            },
        ],
    })
}

fn dual_section(
    caption: &str,
    first: &str,
    rows_phi: &[Duality],
    row_labels: &[String],
    subgroups: &[(String, Subgroup)],
    names: &[(String, Subgroup)],
) -> Result<Section> {
    let subs: Vec<Subgroup> = subgroups.iter().map(|(_, s)| s.clone()).collect();
    let table = duals_table(rows_phi, &subs)?;
    let mut header = vec![first.to_string(), "P".to_string()];
    for (name, _) in subgroups {
        header.push(format!("𝔏({name})"));
        header.push(format!("𝔕({name})"));
    }
    let rows = table
        .cells
        .iter()
        .zip(rows_phi)
        .zip(row_labels)
        .map(|((cells, phi), lab)| {
            let mut row = vec![lab.clone(), phi.display_matrix()];
            for (l, r) in cells {
                row.push(label(names, l));
                row.push(label(names, r));
            }
            row
        })
        .collect();
    Ok(Section {
        caption: caption.into(),
        header,
        rows,
    })
}

fn table_4_4() -> Result<PaperTable> {
    let group = spec(&[2, 2]);
    let rows_phi = dualities_from(&group, &KLEIN_DUAL_ROWS);
    check_complete(&group, &rows_phi)?;
    let labels: Vec<String> = rows_phi.iter().map(|p| phi_label(&dualities_from(&group, &KLEIN_ROWS), p)).collect();
    let names = klein_subgroups();
    let mut duals = dual_section("left and right duals", "φ", &rows_phi, &labels, &names, &names)?;
    let subs: Vec<Subgroup> = names.iter().map(|(_, s)| s.clone()).collect();
    duals.header.push("self-dual".into());
    for (row, phi) in duals.rows.iter_mut().zip(&rows_phi) {
        let selfdual: Vec<String> = subs
            .iter()
            .zip(&names)
            .filter(|(s, _)| left_dual(s, phi).map(|l| l == **s).unwrap_or(false))
            .map(|(_, (n, _))| n.clone())
            .collect();
        row.push(if selfdual.is_empty() { "-".into() } else { selfdual.join(",") });
    }
    let subgroup_rows = names.iter().map(|(n, s)| vec![n.clone(), s.display_elements()]).collect();
    Ok(PaperTable {
        id: "4.4".into(),
        title: format!("Dual codes of the order-2 subgroups of {group}"),
        sections: vec![
            Section {
                caption: "subgroups".into(),
                header: vec!["name".into(), "elements".into()],
                rows: subgroup_rows,
            },
            duals,
        ],
    })
}

fn table_4_5() -> Result<PaperTable> {
    let group = spec(&[2, 2, 2]);
    let phi = Duality::from_rows(&group, &[vec![0, 0, 1], vec![1, 1, 0], vec![1, 0, 0]])?;
    let c = Subgroup::closure(&group, &[group.parse_element("100")?])?;
    let l = left_dual(&c, &phi)?;
    let r = right_dual(&c, &phi)?;
    let all = all_dualities(&group)?;
    let symmetric = all.iter().filter(|p| p.is_symmetric()).count();
    let rows = vec![
        vec!["P".into(), phi.display_matrix()],
        vec!["symmetric".into(), yes_no(phi.is_symmetric())],
        vec!["C".into(), c.display_elements()],
        vec!["𝔏(C)".into(), l.display_elements()],
        vec!["𝔕(C)".into(), r.display_elements()],
        vec!["𝔏(C) ∩ 𝔕(C)".into(), l.intersection(&r).display_elements()],
        vec!["kind".into(), self_dual_kind(&c, &phi)?.to_string()],
    ];
    let census = vec![
        vec!["dualities".into(), all.len().to_string()],
        vec!["|GL(3,F_2)|".into(), gl_order(3, 2).to_string()],
        vec!["symmetric".into(), symmetric.to_string()],
        vec!["N(3) at q=2".into(), count_symmetric_invertible(3, 2).to_string()],
        vec!["symmetric fraction".into(), symmetric_ratio(3, 2).to_string()],
    ];
    Ok(PaperTable {
        id: "4.5".into(),
        title: format!("A nonsymmetric duality of {group}"),
        sections: vec![
            Section {
                caption: "census".into(),
                header: vec!["quantity".into(), "value".into()],
                rows: census,
            },
            Section {
                caption: "left and right duals".into(),
                header: vec!["quantity".into(), "value".into()],
                rows,
            },
        ],
    })
}

fn table_4_11() -> Result<PaperTable> {
    let group = spec(&[2, 4]);
    let rows_phi = dualities_from(&group, &Z2Z4_ROWS);
    check_complete(&group, &rows_phi)?;
    let labels: Vec<String> = (0..rows_phi.len()).map(|i| format!("φ_{i}")).collect();
    let names = z2z4_subgroups();
    let lines: Vec<(String, Subgroup)> = names[..3].to_vec();
    let duals = dual_section("left and right duals", "φ", &rows_phi, &labels, &lines, &names)?;
    let linf = &names[2].1;
    let c1 = &names[3].1;
    let mut hits = 0;
    for phi in &rows_phi {
        if left_dual(linf, phi)? == *c1 {
            hits += 1;
        }
    }
    let subgroup_rows = names.iter().map(|(n, s)| vec![n.clone(), s.display_elements()]).collect();
    Ok(PaperTable {
        id: "4.11".into(),
        title: format!("Dual codes of the order-2 subgroups of {group}"),
        sections: vec![
            Section {
                caption: "subgroups".into(),
                header: vec!["name".into(), "elements".into()],
                rows: subgroup_rows,
            },
            duals,
            Section {
                caption: "size condition without duality".into(),
                header: vec!["quantity".into(), "value".into()],
                rows: vec![
                    vec!["|ℓ_∞|·|C_1|".into(), (linf.order() * c1.order()).to_string()],
                    vec!["dualities with 𝔏(ℓ_∞) = C_1".into(), hits.to_string()],
                ],
            },
        ],
    })
}

fn table_6_3_classes() -> Result<PaperTable> {
    let group = spec(&[3, 3]);
    let reps = dualities_from(&group, &F3_CLASS_REPS);
    let classes = congruence_classes(&group)?;
    let mut rows = Vec::new();
    let mut seen = Vec::new();
    for (i, rep) in reps.iter().enumerate() {
        let idx = classes
            .iter()
            .position(|c| c.contains(rep))
            .ok_or_else(|| Error::Internal("representative outside every class".into()))?;
        if seen.contains(&idx) {
            return Err(Error::Internal("two representatives share a class".into()));
        }
        seen.push(idx);
        rows.push(vec![
            format!("φ_{i}"),
            rep.display_matrix(),
            classes[idx].len().to_string(),
            yes_no(rep.is_symmetric()),
        ]);
    }
    let total: usize = classes.iter().map(|c| c.len()).sum();
    let symmetric = classes.iter().flat_map(|c| &c.members).filter(|p| p.is_symmetric()).count();
    Ok(PaperTable {
        id: "6.3-classes".into(),
        title: format!("Congruence classes of dualities of {group}"),
        sections: vec![
            Section {
                caption: format!("{} classes, {total} dualities, {symmetric} symmetric", classes.len()),
                header: vec!["φ".into(), "representative".into(), "number".into(), "symmetric".into()],
                rows,
            },
        ],
    })
}

fn table_6_3_duals() -> Result<PaperTable> {
    let group = spec(&[3, 3]);
    let reps = dualities_from(&group, &F3_CLASS_REPS);
    let labels: Vec<String> = (0..reps.len()).map(|i| format!("φ_{i}")).collect();
    let names = f3_lines();
    let duals = dual_section("left and right duals of the lines", "φ", &reps, &labels, &names, &names)?;
    Ok(PaperTable {
        id: "6.3-duals".into(),
        title: format!("Dual codes of the lines of {group} under the class representatives"),
        sections: vec![duals],
    })
}
