//! The `abdual` command line.
//!
//! Every subcommand prints to `out`; diagnostics go to `err`. Exit code 0 is
//! success, 1 a domain error (bad group, bound exceeded, failed check), 2 a
//! usage error.

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::codes::{self, AdditiveCode, PowerGroup, SelfDualKind, Side};
use crate::duality::{self, Duality};
use crate::enumerators::{self, Direction};
use crate::group::{self, GroupElement, GroupSpec, Subgroup};
use crate::json::{CweJson, DualityJson, GroupJson, HweJson, SubgroupJson};
use crate::tables::{self, Section};
use crate::{limits, Error, Result};

/// Codes with at most this many words are printed in full.
const SHOW_ELEMENTS: u64 = 64;

#[derive(Parser, Debug)]
#[command(name = "abdual", version, about = "Dualities, dual codes and MacWilliams identities over finite abelian groups")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Bound on |A|^n for scans of A^n; overrides ADK_LIMIT.
    #[arg(long, global = true)]
    limit: Option<u64>,
    /// Bound on |A| for subgroup and automorphism enumeration.
    #[arg(long, global = true)]
    max_order: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Describe a group, optionally listing subgroups and automorphisms.
    Group(GroupArgs),
    /// List or count the dualities of a group.
    Dualities(DualitiesArgs),
    /// Left and right duals of an additive code.
    Dual(DualArgs),
    /// Left and right duals of every subgroup under every duality.
    DualsTable(DualsTableArgs),
    /// Congruence classes of dualities, or a test of two of them.
    Congruence(CongruenceArgs),
    /// The multiplication-by-p filtrations and their duality.
    Filtration(FiltrationArgs),
    /// MacWilliams identities.
    #[command(subcommand)]
    Macwilliams(MacWilliamsCommand),
    /// Print one of the reference tables.
    #[command(alias = "table")]
    PaperTable(PaperTableArgs),
    /// A symmetric duality making two subgroups each other's duals.
    ConstructPair(ConstructPairArgs),
}

#[derive(Clone, Debug)]
struct Orders(Vec<u64>);

fn parse_orders(s: &str) -> std::result::Result<Orders, String> {
    s.split(',')
        .map(|t| t.trim().parse::<u64>().map_err(|_| format!("expected comma-separated cyclic orders, got {s:?}")))
        .collect::<std::result::Result<Vec<_>, _>>()
        .map(Orders)
}

#[derive(Args, Debug)]
struct GroupOpt {
    /// Cyclic orders, e.g. `2,4` for Z/2 × Z/4.
    #[arg(long, value_parser = parse_orders)]
    group: Orders,
}

impl GroupOpt {
    fn spec(&self) -> Result<GroupSpec> {
        GroupSpec::new(&self.group.0)
    }
}

#[derive(Args, Debug)]
struct DualityOpt {
    /// Position in the canonical duality list (see `dualities`).
    #[arg(long, default_value_t = 0)]
    duality_index: usize,
    /// Automorphism matrix instead of an index: rows separated by `;`,
    /// entries by `,`, e.g. `1,1;0,1`.
    #[arg(long, conflicts_with = "duality_index")]
    tau: Option<String>,
}

impl DualityOpt {
    fn resolve(&self, a: &GroupSpec) -> Result<(Option<usize>, Duality)> {
        match &self.tau {
            Some(text) => {
                let rows = parse_matrix(text).ok_or_else(|| Error::Parse {
                    input: text.clone(),
                    group: format!("an automorphism matrix of {a}"),
                })?;
                let phi = Duality::from_rows(a, &rows)?;
                let index = duality::all_dualities(a).ok().and_then(|all| all.binary_search(&phi).ok());
                Ok((index, phi))
            }
            None => {
                let all = duality::all_dualities(a)?;
                let len = all.len();
                let phi = all.into_iter().nth(self.duality_index).ok_or(Error::IndexOutOfRange {
                    index: self.duality_index,
                    len,
                })?;
                Ok((Some(self.duality_index), phi))
            }
        }
    }
}

fn parse_matrix(text: &str) -> Option<Vec<Vec<i64>>> {
    text.split(';')
        .map(|row| row.split(',').map(|x| x.trim().parse::<i64>().ok()).collect())
        .collect()
}

#[derive(Args, Debug)]
struct CodeOpt {
    #[command(flatten)]
    group: GroupOpt,
    /// Code length n; the code lives in A^n.
    #[arg(long, default_value_t = 1)]
    n: usize,
    /// Generating words, separated by spaces or `;`. Blocks may be
    /// separated by `:`. Omit for the zero code.
    #[arg(long = "code-gens", num_args = 1..)]
    code_gens: Vec<String>,
}

impl CodeOpt {
    fn code(&self) -> Result<(GroupSpec, AdditiveCode)> {
        let a = self.group.spec()?;
        let power = PowerGroup::new(&a, self.n)?;
        let words = parse_words(power.spec(), &self.code_gens)?;
        let code = AdditiveCode::new(&power, &words)?;
        Ok((a, code))
    }
}

fn parse_words(spec: &GroupSpec, texts: &[String]) -> Result<Vec<GroupElement>> {
    texts
        .iter()
        .flat_map(|t| t.split(|c: char| c == ';' || c.is_whitespace()))
        .filter(|t| !t.is_empty())
        .map(|t| spec.parse_element(t))
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SideArg {
    Left,
    Right,
    Both,
}

impl SideArg {
    fn sides(self) -> Vec<Side> {
        match self {
            SideArg::Left => vec![Side::Left],
            SideArg::Right => vec![Side::Right],
            SideArg::Both => vec![Side::Left, Side::Right],
        }
    }
}

#[derive(Args, Debug)]
struct GroupArgs {
    #[command(flatten)]
    group: GroupOpt,
    /// List every subgroup.
    #[arg(long)]
    subgroups: bool,
    /// List every automorphism.
    #[arg(long)]
    automorphisms: bool,
}

#[derive(Args, Debug)]
struct DualitiesArgs {
    #[command(flatten)]
    group: GroupOpt,
    /// Only print the total and the number of symmetric dualities.
    #[arg(long, conflicts_with = "list")]
    count_only: bool,
    /// List every duality with its index (the default).
    #[arg(long)]
    list: bool,
}

#[derive(Args, Debug)]
struct DualArgs {
    #[command(flatten)]
    code: CodeOpt,
    #[command(flatten)]
    duality: DualityOpt,
    #[arg(long, value_enum, default_value_t = SideArg::Both)]
    side: SideArg,
}

#[derive(Args, Debug)]
struct DualsTableArgs {
    #[command(flatten)]
    group: GroupOpt,
    /// Only tabulate subgroups of this order.
    #[arg(long)]
    order: Option<u64>,
    /// Only tabulate these dualities (repeatable); default all.
    #[arg(long = "duality-index")]
    duality_index: Vec<usize>,
}

#[derive(Args, Debug)]
struct CongruenceArgs {
    #[command(flatten)]
    group: GroupOpt,
    /// Test two dualities, given by index, instead of listing classes.
    #[arg(long, num_args = 2, value_names = ["I", "J"])]
    pair: Option<Vec<usize>>,
}

#[derive(Args, Debug)]
struct FiltrationArgs {
    #[command(flatten)]
    group: GroupOpt,
}

#[derive(Subcommand, Debug)]
enum MacWilliamsCommand {
    /// Check the identity for a code and its dual.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum EnumeratorKind {
    Hamming,
    Complete,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[command(flatten)]
    code: CodeOpt,
    #[command(flatten)]
    duality: DualityOpt,
    #[arg(long, value_enum, default_value_t = EnumeratorKind::Hamming)]
    enumerator: EnumeratorKind,
    #[arg(long, value_enum, default_value_t = SideArg::Left)]
    side: SideArg,
}

#[derive(Args, Debug)]
struct PaperTableArgs {
    /// One of 3.3, 3.4, 4.4, 4.5, 4.11, 6.3-classes, 6.3-duals, 6.3; an
    /// `example-` prefix is accepted.
    id: String,
}

#[derive(Args, Debug)]
struct ConstructPairArgs {
    #[command(flatten)]
    group: GroupOpt,
    /// Generators of H, separated by spaces or `;`.
    #[arg(long, num_args = 1..)]
    h: Vec<String>,
    /// Generators of K, separated by spaces or `;`.
    #[arg(long, num_args = 1..)]
    k: Vec<String>,
    /// Fall back to an exhaustive search when no construction applies.
    #[arg(long)]
    search: bool,
}

/// Parses `args` (program name first), runs the command and returns the exit
/// code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return if code == 0 { 0 } else { 2 };
        }
    };
    let saved = (limits::scan_bound(), limits::enumeration_bound());
    let env_limit = std::env::var("ADK_LIMIT").ok();
    let result = match (cli.limit, env_limit) {
        (Some(l), _) => Ok(Some(l)),
        (None, Some(text)) => text
            .trim()
            .parse::<u64>()
            .map(Some)
            .map_err(|_| format!("ADK_LIMIT must be a non-negative integer, got {text:?}")),
        (None, None) => Ok(None),
    };
    let scan = match result {
        Ok(scan) => scan,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            return 2;
        }
    };
    if let Some(l) = scan {
        limits::set_scan_bound(l);
    }
    if let Some(l) = cli.max_order {
        limits::set_enumeration_bound(l);
    }
    let outcome = dispatch(&cli);
    limits::set_scan_bound(saved.0);
    limits::set_enumeration_bound(saved.1);
    match outcome {
        Ok(report) => {
            let _ = write!(out, "{}", report.text);
            if report.ok {
                0
            } else {
                let _ = writeln!(err, "error: check failed");
                1
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

struct Report {
    text: String,
    ok: bool,
}

impl Report {
    fn ok(text: String) -> Self {
        Report { text, ok: true }
    }
}

fn emit(format: Format, text: impl FnOnce() -> String, value: impl FnOnce() -> Value) -> String {
    match format {
        Format::Text => text(),
        Format::Json => format!("{}\n", serde_json::to_string_pretty(&value()).expect("JSON values serialize")),
    }
}

fn dispatch(cli: &Cli) -> Result<Report> {
    let f = cli.format;
    match &cli.command {
        Command::Group(args) => group_cmd(f, args).map(Report::ok),
        Command::Dualities(args) => dualities_cmd(f, args).map(Report::ok),
        Command::Dual(args) => dual_cmd(f, args).map(Report::ok),
        Command::DualsTable(args) => duals_table_cmd(f, args).map(Report::ok),
        Command::Congruence(args) => congruence_cmd(f, args).map(Report::ok),
        Command::Filtration(args) => filtration_cmd(f, args),
        Command::Macwilliams(MacWilliamsCommand::Verify(args)) => verify_cmd(f, args),
        Command::PaperTable(args) => {
            let table = tables::paper_table(&args.id)?;
            Ok(Report::ok(emit(f, || table.render_text(), || json!(table))))
        }
        Command::ConstructPair(args) => construct_pair_cmd(f, args).map(Report::ok),
    }
}

fn label(index: Option<usize>) -> String {
    index.map_or_else(|| "φ".to_string(), |i| format!("φ_{i}"))
}

/// `{w, …}` for small subgroups, `⟨g, …⟩` otherwise.
fn show_subgroup(power: &PowerGroup, h: &Subgroup) -> String {
    let words = |xs: &[GroupElement]| xs.iter().map(|x| power.format_word(x)).collect::<Vec<_>>().join(", ");
    if h.order() <= SHOW_ELEMENTS {
        format!("{{{}}}", words(h.elements()))
    } else {
        format!("⟨{}⟩", words(h.generators()))
    }
}

fn subgroup_json(power: &PowerGroup, h: &Subgroup) -> Value {
    let mut v = json!(SubgroupJson::from_subgroup(h));
    if h.order() <= SHOW_ELEMENTS {
        v["elements"] = json!(h.elements().iter().map(|x| power.format_word(x)).collect::<Vec<_>>());
    }
    v
}

fn group_cmd(f: Format, args: &GroupArgs) -> Result<String> {
    let a = args.group.spec()?;
    let power = PowerGroup::new(&a, 1)?;
    let subgroups = if args.subgroups { Some(group::all_subgroups(&a)?) } else { None };
    let auts = if args.automorphisms { Some(group::automorphism_group(&a)?) } else { None };
    let primary = a.primary_decomposition();
    Ok(emit(
        f,
        || {
            let mut s = format!("{a}: order {}, exponent {}\n", a.cardinality(), a.exponent());
            if primary.len() > 1 {
                let parts: Vec<String> = primary.iter().map(|(p, g)| format!("{p}: {g}")).collect();
                s += &format!("primary components: {}\n", parts.join("; "));
            }
            if let Some(subs) = &subgroups {
                let rows = subs
                    .iter()
                    .enumerate()
                    .map(|(i, h)| vec![format!("H_{i}"), h.order().to_string(), show_subgroup(&power, h)])
                    .collect();
                s += &format!("\n{}", table(&format!("{} subgroups", subs.len()), &["", "order", "elements"], rows));
            }
            if let Some(auts) = &auts {
                let rows = auts
                    .iter()
                    .enumerate()
                    .map(|(i, t)| vec![format!("α_{i}"), t.display_matrix(), t.order().to_string()])
                    .collect();
                s += &format!("\n{}", table(&format!("{} automorphisms", auts.len()), &["", "matrix", "order"], rows));
            }
            s
        },
        || {
            let mut v = json!({
                "group": GroupJson::from_spec(&a),
                "order": a.cardinality(),
                "exponent": a.exponent(),
                "primary": primary
                    .iter()
                    .map(|(p, g)| (p.to_string(), json!(GroupJson::from_spec(g))))
                    .collect::<serde_json::Map<_, _>>(),
            });
            if let Some(subs) = &subgroups {
                v["subgroups"] = subs.iter().map(|h| subgroup_json(&power, h)).collect();
            }
            if let Some(auts) = &auts {
                v["automorphisms"] = auts.iter().map(|t| json!({"tau": t.matrix(), "order": t.order()})).collect();
            }
            v
        },
    ))
}

fn table(caption: &str, header: &[&str], rows: Vec<Vec<String>>) -> String {
    Section {
        caption: caption.to_string(),
        header: header.iter().map(|h| h.to_string()).collect(),
        rows,
    }
    .render_text()
}

fn dualities_cmd(f: Format, args: &DualitiesArgs) -> Result<String> {
    let a = args.group.spec()?;
    let all = duality::all_dualities(&a)?;
    let symmetric = all.iter().filter(|phi| phi.is_symmetric()).count();
    if args.count_only {
        return Ok(emit(
            f,
            || format!("{} total, {symmetric} symmetric\n", all.len()),
            || json!({"total": all.len(), "symmetric": symmetric}),
        ));
    }
    let adjoint_index = |phi: &Duality| all.binary_search(&phi.adjoint()).expect("adjoint is a duality");
    Ok(emit(
        f,
        || {
            let rows = all
                .iter()
                .enumerate()
                .map(|(i, phi)| {
                    vec![
                        format!("φ_{i}"),
                        phi.display_matrix(),
                        format!("φ_{}", adjoint_index(phi)),
                        if phi.is_symmetric() { "yes" } else { "no" }.to_string(),
                    ]
                })
                .collect();
            let caption = format!("{} dualities of {a}, {symmetric} symmetric", all.len());
            table(&caption, &["index", "tau", "adjoint", "symmetric"], rows)
        },
        || {
            json!(all
                .iter()
                .enumerate()
                .map(|(i, phi)| json!({
                    "index": i,
                    "tau": DualityJson::from_duality(phi).tau,
                    "adjoint": adjoint_index(phi),
                    "symmetric": phi.is_symmetric(),
                }))
                .collect::<Vec<_>>())
        },
    ))
}

fn kind_name(kind: SelfDualKind) -> &'static str {
    match kind {
        SelfDualKind::None => "neither",
        SelfDualKind::SelfOrthogonal => "self-orthogonal",
        SelfDualKind::SelfDual => "self-dual",
    }
}

fn dual_cmd(f: Format, args: &DualArgs) -> Result<String> {
    let (a, code) = args.code.code()?;
    let (index, phi) = args.duality.resolve(&a)?;
    let power = code.power().clone();
    let ambient = code.ambient_duality(&phi)?;
    let kind = codes::self_dual_kind(code.subgroup(), &ambient)?;
    let duals = args
        .side
        .sides()
        .into_iter()
        .map(|side| Ok((side, code.dual(&phi, side)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(emit(
        f,
        || {
            let mut s = format!("duality {} = {}\n", label(index), phi.display_matrix());
            s += &format!("{:<10} order {:<4} {}\n", "code", code.order(), show_subgroup(&power, code.subgroup()));
            for (side, d) in &duals {
                s += &format!("{:<10} order {:<4} {}\n", format!("{side} dual"), d.order(), show_subgroup(&power, d.subgroup()));
            }
            s += &format!("code is {}\n", kind_name(kind));
            s
        },
        || {
            let mut v = json!({
                "group": GroupJson::from_spec(&a),
                "n": power.n(),
                "duality": DualityJson::from_duality(&phi),
                "code": subgroup_json(&power, code.subgroup()),
                "kind": kind_name(kind),
            });
            if let Some(i) = index {
                v["duality_index"] = json!(i);
            }
            for (side, d) in &duals {
                v[side.to_string()] = subgroup_json(&power, d.subgroup());
            }
            v
        },
    ))
}

fn duals_table_cmd(f: Format, args: &DualsTableArgs) -> Result<String> {
    let a = args.group.spec()?;
    let power = PowerGroup::new(&a, 1)?;
    let subgroups = group::all_subgroups(&a)?;
    let all = duality::all_dualities(&a)?;
    let chosen: Vec<usize> = if args.duality_index.is_empty() {
        (0..all.len()).collect()
    } else {
        args.duality_index.clone()
    };
    for &i in &chosen {
        if i >= all.len() {
            return Err(Error::IndexOutOfRange { index: i, len: all.len() });
        }
    }
    let columns: Vec<usize> = (0..subgroups.len())
        .filter(|&s| args.order.map_or(true, |o| subgroups[s].order() == o))
        .collect();
    let phis: Vec<Duality> = chosen.iter().map(|&i| all[i].clone()).collect();
    let hs: Vec<Subgroup> = columns.iter().map(|&s| subgroups[s].clone()).collect();
    let t = codes::duals_table(&phis, &hs)?;
    let pos = |h: &Subgroup| subgroups.iter().position(|x| x == h).expect("duals are subgroups");
    Ok(emit(
        f,
        || {
            let legend = columns
                .iter()
                .map(|&s| vec![format!("H_{s}"), subgroups[s].order().to_string(), show_subgroup(&power, &subgroups[s])])
                .collect();
            let mut header = vec!["duality".to_string(), "tau".to_string()];
            header.extend(columns.iter().map(|s| format!("H_{s}")));
            let rows = chosen
                .iter()
                .zip(&t.cells)
                .map(|(&i, cells)| {
                    let mut row = vec![format!("φ_{i}"), all[i].display_matrix()];
                    row.extend(cells.iter().map(|(l, r)| format!("H_{} H_{}", pos(l), pos(r))));
                    row
                })
                .collect();
            let mut s = table("subgroups", &["", "order", "elements"], legend);
            s += "\n";
            s += &Section {
                caption: "left and right duals".to_string(),
                header,
                rows,
            }
            .render_text();
            s
        },
        || {
            json!({
                "group": GroupJson::from_spec(&a),
                "subgroups": subgroups.iter().map(|h| subgroup_json(&power, h)).collect::<Vec<_>>(),
                "columns": columns,
                "rows": chosen.iter().zip(&t.cells).map(|(&i, cells)| json!({
                    "duality_index": i,
                    "tau": DualityJson::from_duality(&all[i]).tau,
                    "duals": cells.iter().map(|(l, r)| json!({"left": pos(l), "right": pos(r)})).collect::<Vec<_>>(),
                })).collect::<Vec<_>>(),
            })
        },
    ))
}

fn congruence_cmd(f: Format, args: &CongruenceArgs) -> Result<String> {
    let a = args.group.spec()?;
    let all = duality::all_dualities(&a)?;
    let get = |i: usize| all.get(i).cloned().ok_or(Error::IndexOutOfRange { index: i, len: all.len() });
    if let Some(pair) = &args.pair {
        let (i, j) = (pair[0], pair[1]);
        let (p1, p2) = (get(i)?, get(j)?);
        let via = duality::congruent(&p1, &p2)?;
        let power = match duality::same_duals_everywhere(&p1, &p2) {
            Ok(m) => m,
            Err(Error::NotPGroup) => None,
            Err(e) => return Err(e),
        };
        return Ok(emit(
            f,
            || {
                let mut s = match &via {
                    Some(tau) => format!("φ_{i} and φ_{j} are congruent via {}\n", tau.display_matrix()),
                    None => format!("φ_{i} and φ_{j} are not congruent\n"),
                };
                if let Some(m) = power {
                    s += &format!("φ_{j} = φ_{i}^{m}: same duals on every subgroup\n");
                }
                s
            },
            || json!({"congruent": via.as_ref().map(|t| t.matrix().to_vec()), "power": power}),
        ));
    }
    let classes = duality::congruence_classes(&a)?;
    let subgroups = group::all_subgroups(&a)?;
    let index = |phi: &Duality| all.binary_search(phi).expect("listed duality");
    let info = classes
        .iter()
        .map(|c| {
            let symmetric = c.members.iter().filter(|p| p.is_symmetric()).count();
            let self_dual = codes::count_self_dual(&subgroups, &c.representative)?;
            Ok((symmetric, self_dual))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(emit(
        f,
        || {
            let rows = classes
                .iter()
                .zip(&info)
                .enumerate()
                .map(|(k, (c, (sym, sd)))| {
                    let members: Vec<String> = c.members.iter().map(|p| format!("φ_{}", index(p))).collect();
                    vec![
                        k.to_string(),
                        c.representative.display_matrix(),
                        c.len().to_string(),
                        sym.to_string(),
                        sd.to_string(),
                        members.join(" "),
                    ]
                })
                .collect();
            let caption = format!("{} congruence classes of the {} dualities of {a}", classes.len(), all.len());
            table(&caption, &["class", "representative", "size", "symmetric", "self-dual codes", "members"], rows)
        },
        || {
            json!(classes
                .iter()
                .zip(&info)
                .map(|(c, (sym, sd))| json!({
                    "representative": DualityJson::from_duality(&c.representative).tau,
                    "size": c.len(),
                    "symmetric": sym,
                    "self_dual_codes": sd,
                    "members": c.members.iter().map(index).collect::<Vec<_>>(),
                }))
                .collect::<Vec<_>>())
        },
    ))
}

fn filtration_cmd(f: Format, args: &FiltrationArgs) -> Result<Report> {
    let a = args.group.spec()?;
    let p = a.p_group_prime().ok_or(Error::NotPGroup)?;
    let power = PowerGroup::new(&a, 1)?;
    let steps = codes::mult_by_p_filtration(&a, p)?;
    let holds = codes::verify_filtration_duality(&a, p)?;
    let text = emit(
        f,
        || {
            let rows = steps
                .iter()
                .map(|s| vec![s.j.to_string(), show_subgroup(&power, &s.kernel), show_subgroup(&power, &s.image)])
                .collect();
            let mut out = table(&format!("multiplication by {p} on {a}"), &["j", "ker f^j", "im f^j"], rows);
            out += &format!(
                "im f^j is the left and right dual of ker f^j under every duality: {}\n",
                if holds { "yes" } else { "no" }
            );
            out
        },
        || {
            json!({
                "p": p,
                "steps": steps.iter().map(|s| json!({
                    "j": s.j,
                    "kernel": subgroup_json(&power, &s.kernel),
                    "image": subgroup_json(&power, &s.image),
                })).collect::<Vec<_>>(),
                "duality_holds": holds,
            })
        },
    );
    Ok(Report { text, ok: holds })
}

fn verify_cmd(f: Format, args: &VerifyArgs) -> Result<Report> {
    let (a, code) = args.code.code()?;
    let (index, phi) = args.duality.resolve(&a)?;
    let mut checks: Vec<(Side, String, String, bool)> = Vec::new();
    let mut values: Vec<Value> = Vec::new();
    for side in args.side.sides() {
        let dual = code.dual(&phi, side)?;
        match args.enumerator {
            EnumeratorKind::Hamming => {
                let (ec, ed) = (enumerators::hwe(&code), enumerators::hwe(&dual));
                let there = enumerators::mw_hamming_transform(&ec, a.cardinality(), code.order())?;
                let back = enumerators::mw_hamming_transform(&ed, a.cardinality(), dual.order())?;
                let ok = there == ed && back == ec;
                checks.push((side, ec.to_string(), ed.to_string(), ok));
                values.push(json!({
                    "side": side.to_string(),
                    "code": HweJson::from_enumerator(&ec),
                    "dual": HweJson::from_enumerator(&ed),
                    "holds": ok,
                }));
            }
            EnumeratorKind::Complete => {
                let (ec, ed) = (enumerators::cwe(&code), enumerators::cwe(&dual));
                let there = enumerators::mw_complete_transform(&ec, &phi, Direction::ToDual, side)?;
                let back = enumerators::mw_complete_transform(&ed, &phi, Direction::FromDual, side)?;
                let ok = there == ed && back == ec;
                checks.push((side, ec.to_string(), ed.to_string(), ok));
                values.push(json!({
                    "side": side.to_string(),
                    "code": CweJson::from_enumerator(&ec),
                    "dual": CweJson::from_enumerator(&ed),
                    "holds": ok,
                }));
            }
        }
    }
    let ok = checks.iter().all(|c| c.3);
    let text = emit(
        f,
        || {
            let mut s = format!("duality {} = {}\n", label(index), phi.display_matrix());
            for (side, ec, ed, ok) in &checks {
                s += &format!("code:       {ec}\n{:<11} {ed}\n", format!("{side} dual:"));
                s += &format!("{side} identity: {}\n", if *ok { "holds" } else { "FAILS" });
            }
            s
        },
        || {
            json!({
                "duality": DualityJson::from_duality(&phi),
                "checks": values,
                "holds": ok,
            })
        },
    );
    Ok(Report { text, ok })
}

fn construct_pair_cmd(f: Format, args: &ConstructPairArgs) -> Result<String> {
    let a = args.group.spec()?;
    let h = Subgroup::closure(&a, &parse_words(&a, &args.h)?)?;
    let k = Subgroup::closure(&a, &parse_words(&a, &args.k)?)?;
    let (phi, how) = match codes::construct_duality_for_pair(&h, &k) {
        Ok(phi) => (Some(phi), "construction"),
        Err(Error::Unsupported(_)) if args.search => {
            let found = codes::dualities_for_pair(&h, &k)?;
            (found.into_iter().next(), "search")
        }
        Err(e) => return Err(e),
    };
    let power = PowerGroup::new(&a, 1)?;
    Ok(emit(
        f,
        || {
            let mut s = format!("H = {}\nK = {}\n", show_subgroup(&power, &h), show_subgroup(&power, &k));
            match &phi {
                Some(phi) => {
                    s += &format!("found by {how}: {}\n", phi.display_matrix());
                    s += &format!("symmetric: {}\n", if phi.is_symmetric() { "yes" } else { "no" });
                }
                None => s += "no duality makes H and K each other's duals\n",
            }
            s
        },
        || {
            json!({
                "h": subgroup_json(&power, &h),
                "k": subgroup_json(&power, &k),
                "method": how,
                "duality": phi.as_ref().map(DualityJson::from_duality),
                "symmetric": phi.as_ref().map(Duality::is_symmetric),
            })
        },
    ))
}
