//! Command-line front end. `run` is the whole program; the binary only wires
//! it to the process streams.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde::Serialize;
use serde_json::Value;

use crate::error::{OrbitError, Result};
use crate::infchar::{infinitesimal_character, InfinitesimalCharacter};
use crate::multiplicity::{
    multiplicity_table, normality_by_multiplicity, MultiplicityTable, WData,
};
use crate::normality::{Caveat, KpChain, NormalityReport, WDifference};
use crate::oracle::{composition_counts, is_unimodal, oracle_table};
use crate::orbit::{
    enumerate_orbits, validate_orbit, Family, GroupKind, InputForm, OrbitLabel,
    DEFAULT_ENUMERATION_BOUND,
};
use crate::partition::dominance_leq;

pub const SCHEMA_VERSION: &str = "1";

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID_INPUT: i32 = 1;
pub const EXIT_INTERNAL: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "nilorbit",
    version,
    about = "Fundamental-representation multiplicities and closure normality for classical nilpotent orbits"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Multiplicities of the fundamental representations in R[O]
    Mult {
        #[command(flatten)]
        orbit: OrbitArgs,
        /// Recompute the table by composition counting and fail on mismatch
        #[arg(long)]
        verify: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Kraft–Procesi and multiplicity-drop normality criteria
    Normality {
        #[command(flatten)]
        orbit: OrbitArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Side-by-side multiplicities of O and its sharp orbit
    Compare {
        #[command(flatten)]
        orbit: OrbitArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Infinitesimal character of the spherical unipotent representation
    Infchar {
        #[command(flatten)]
        orbit: OrbitArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Every orbit of a family up to a dimension
    Enumerate {
        /// `sp` or `o`
        family: String,
        #[arg(long)]
        max_dim: u32,
        /// Check oracle equivalence and agreement of the two normality criteria
        #[arg(long)]
        cross_check: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Debug, Args)]
struct OrbitArgs {
    /// `sp:<2m>` or `o:<n>`
    group: String,
    /// Column sizes (or row sizes with --rows)
    #[arg(required = true, num_args = 1..)]
    parts: Vec<u32>,
    /// Parts are Jordan block sizes rather than column sizes
    #[arg(long)]
    rows: bool,
}

impl OrbitArgs {
    fn label(&self) -> Result<OrbitLabel> {
        let kind: GroupKind = self.group.parse()?;
        let form = if self.rows {
            InputForm::Rows
        } else {
            InputForm::Columns
        };
        validate_orbit(kind, &self.parts, form)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug)]
enum Failure {
    Input(String),
    Internal(String),
}

impl From<OrbitError> for Failure {
    fn from(e: OrbitError) -> Self {
        if e.is_internal() {
            Failure::Internal(e.to_string())
        } else {
            Failure::Input(e.to_string())
        }
    }
}

/// Parses `args` (program name first), writes results to `out` and
/// diagnostics to `err`, and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                EXIT_INVALID_INPUT
            } else {
                let _ = write!(out, "{}", e.render());
                EXIT_OK
            };
            return code;
        }
    };
    let mut buffer = String::new();
    let outcome = dispatch(cli.command, &mut buffer);
    let _ = out.write_all(buffer.as_bytes());
    match outcome {
        Ok(()) => EXIT_OK,
        Err(Failure::Input(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_INVALID_INPUT
        }
        Err(Failure::Internal(msg)) => {
            let _ = writeln!(err, "internal error: {msg}");
            EXIT_INTERNAL
        }
    }
}

fn dispatch(command: Command, out: &mut String) -> std::result::Result<(), Failure> {
    match command {
        Command::Mult {
            orbit,
            verify,
            format,
        } => mult(&orbit.label()?, verify, format, out),
        Command::Normality { orbit, format } => normality(&orbit.label()?, format, out),
        Command::Compare { orbit, format } => compare(&orbit.label()?, format, out),
        Command::Infchar { orbit, format } => infchar(&orbit.label()?, format, out),
        Command::Enumerate {
            family,
            max_dim,
            cross_check,
            format,
        } => enumerate(family.parse()?, max_dim, cross_check, format, out),
    }
}

// ---------------------------------------------------------------------------
// JSON document

#[derive(Debug, Serialize)]
struct OutputDocument {
    schema_version: &'static str,
    command: &'static str,
    orbit: OrbitEcho,
    #[serde(skip_serializing_if = "Option::is_none")]
    w_data: Option<WData>,
    #[serde(skip_serializing_if = "Option::is_none")]
    multiplicities: Option<Vec<Entry>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    verified: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    kp: Option<KpSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    sharp: Option<SharpSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    comparison: Option<Vec<ComparisonRow>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    verdicts: Option<Verdicts>,
    #[serde(skip_serializing_if = "Option::is_none")]
    caveats: Option<Vec<&'static str>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    conjecture: Option<Conjecture>,
    #[serde(skip_serializing_if = "Option::is_none")]
    infchar: Option<InfcharSection>,
}

impl OutputDocument {
    fn new(command: &'static str, orbit: &OrbitLabel) -> Self {
        OutputDocument {
            schema_version: SCHEMA_VERSION,
            command,
            orbit: OrbitEcho::from(orbit),
            w_data: None,
            multiplicities: None,
            verified: None,
            kp: None,
            sharp: None,
            comparison: None,
            verdicts: None,
            caveats: None,
            conjecture: None,
            infchar: None,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct OrbitEcho {
    pub group: GroupKind,
    pub family: Family,
    pub dimension: u32,
    pub columns: Vec<u32>,
    pub rows: Vec<u32>,
}

impl From<&OrbitLabel> for OrbitEcho {
    fn from(o: &OrbitLabel) -> Self {
        OrbitEcho {
            group: o.kind(),
            family: o.kind().family(),
            dimension: o.kind().dimension(),
            columns: o.columns().to_vec(),
            rows: o.rows().parts().to_vec(),
        }
    }
}

#[derive(Debug, Serialize)]
struct Entry {
    i: usize,
    multiplicity: Value,
}

#[derive(Debug, Serialize)]
struct KpSection {
    verdict: &'static str,
    chains: Vec<ChainEcho>,
}

#[derive(Debug, Serialize)]
struct ChainEcho {
    top_pair_index: u32,
    bottom_pair_index: u32,
    top_column: usize,
    bottom_column: usize,
    value: u32,
    witness: OrbitEcho,
}

#[derive(Debug, Serialize)]
struct SharpSection {
    orbit: OrbitEcho,
    w_data: WData,
    multiplicities: Vec<Entry>,
}

#[derive(Debug, Serialize)]
struct ComparisonRow {
    i: usize,
    sharp: Value,
    orbit: Value,
    drop: bool,
}

#[derive(Debug, Serialize)]
struct Verdicts {
    kraft_procesi: &'static str,
    multiplicity: &'static str,
    multiplicity_proven: bool,
    agree: bool,
    drops: Vec<u32>,
    w_first_difference: Option<WDifference>,
}

#[derive(Debug, Serialize)]
struct Conjecture {
    statement: &'static str,
    closure_multiplicities: Vec<Entry>,
}

#[derive(Debug, Serialize)]
struct InfcharSection {
    display: String,
    raw: String,
    coordinate_count: usize,
    character: InfinitesimalCharacter,
}

const CONJECTURE: &str =
    "conjectural: [R[closure(O)]:mu_i] = [R[O#]:mu_i] for fundamental mu_i (no counterexample known)";

fn big(n: &BigUint) -> Value {
    serde_json::from_str(&n.to_string()).expect("decimal integers are valid JSON")
}

fn entries(table: &MultiplicityTable) -> Vec<Entry> {
    table
        .display_indices()
        .into_iter()
        .map(|i| Entry {
            i,
            multiplicity: big(&table.entries()[i]),
        })
        .collect()
}

fn verdict_word(normal: bool) -> &'static str {
    if normal {
        "normal"
    } else {
        "not_normal"
    }
}

fn push_json(doc: &impl Serialize, out: &mut String) {
    out.push_str(&serde_json::to_string_pretty(doc).expect("documents serialize"));
    out.push('\n');
}

// ---------------------------------------------------------------------------
// text helpers

fn list(values: &[u32]) -> String {
    values
        .iter()
        .map(u32::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn orbit_line(out: &mut String, label: &str, o: &OrbitLabel) {
    let _ = writeln!(
        out,
        "{label:<14}{} columns {} rows {}",
        o.kind(),
        o,
        o.rows()
    );
}

/// Wide table: a header row of indices and one row per series.
fn table_text(out: &mut String, indices: &[usize], rows: &[(&str, Vec<String>)]) {
    let label_width = rows.iter().map(|(l, _)| l.len()).max().unwrap_or(0).max(1);
    let widths: Vec<usize> = indices
        .iter()
        .enumerate()
        .map(|(col, i)| {
            rows.iter()
                .map(|(_, cells)| cells[col].len())
                .chain([i.to_string().len()])
                .max()
                .unwrap_or(1)
        })
        .collect();
    let mut line = format!("{:<label_width$}", "i");
    for (i, w) in indices.iter().zip(&widths) {
        let _ = write!(line, " | {i:>w$}");
    }
    let _ = writeln!(out, "{}", line.trim_end());
    for (label, cells) in rows {
        let mut line = format!("{label:<label_width$}");
        for (cell, w) in cells.iter().zip(&widths) {
            let _ = write!(line, " | {cell:>w$}");
        }
        let _ = writeln!(out, "{}", line.trim_end());
    }
}

fn cells(table: &MultiplicityTable, indices: &[usize]) -> Vec<String> {
    indices
        .iter()
        .map(|&i| table.entries()[i].to_string())
        .collect()
}

fn w_line(w: &WData) -> String {
    format!(
        "{{{}}} (removed {{{}}}, half-sums {{{}}}), k = {}",
        list(&w.w),
        list(&w.removed),
        list(&w.half_sums),
        w.k
    )
}

fn series_label(kind: GroupKind, of: &str) -> String {
    let mu = if kind.is_symplectic() {
        "mu_i"
    } else {
        "mu'_i"
    };
    format!("[R[{of}]:{mu}]")
}

fn chain_text(chain: &KpChain) -> String {
    format!(
        "c_{}..c_{} = {} (i = {}, j = {})",
        chain.top_column(),
        chain.bottom_column(),
        chain.value,
        chain.top_pair_index,
        chain.bottom_pair_index
    )
}

fn unsupported(format: Format, command: &str) -> Failure {
    Failure::Input(format!("--format {format:?} is not available for `{command}`").to_lowercase())
}

// ---------------------------------------------------------------------------
// subcommands

fn mult(
    orbit: &OrbitLabel,
    verify: bool,
    format: Format,
    out: &mut String,
) -> std::result::Result<(), Failure> {
    let table = multiplicity_table(orbit)?;
    if verify {
        let oracle = oracle_table(orbit)?;
        if oracle.entries() != table.entries() {
            return Err(Failure::Internal(format!(
                "oracle mismatch for {} {orbit}: engine {:?}, oracle {:?}",
                orbit.kind(),
                table.entries(),
                oracle.entries()
            )));
        }
    }
    let indices = table.display_indices();
    match format {
        Format::Text => {
            orbit_line(out, "orbit", orbit);
            let _ = writeln!(out, "{:<14}{}", "W", w_line(table.w_data()));
            if verify {
                let _ = writeln!(out, "{:<14}oracle agrees", "verified");
            }
            table_text(
                out,
                &indices,
                &[(&series_label(orbit.kind(), "O"), cells(&table, &indices))],
            );
        }
        Format::Csv => {
            out.push_str("i,multiplicity\n");
            for i in indices {
                let _ = writeln!(out, "{i},{}", table.entries()[i]);
            }
        }
        Format::Json => {
            let mut doc = OutputDocument::new("mult", orbit);
            doc.w_data = Some(table.w_data().clone());
            doc.multiplicities = Some(entries(&table));
            doc.verified = verify.then_some(true);
            push_json(&doc, out);
        }
    }
    Ok(())
}

fn normality(
    orbit: &OrbitLabel,
    format: Format,
    out: &mut String,
) -> std::result::Result<(), Failure> {
    let report = normality_by_multiplicity(orbit)?;
    match format {
        Format::Text => normality_text(&report, out),
        Format::Json => {
            let mut doc = OutputDocument::new("normality", orbit);
            doc.w_data = Some(report.orbit_table.w_data().clone());
            doc.multiplicities = Some(entries(&report.orbit_table));
            doc.kp = Some(KpSection {
                verdict: verdict_word(report.kp_normal),
                chains: report
                    .chains
                    .iter()
                    .zip(&report.witnesses)
                    .map(|(c, w)| ChainEcho {
                        top_pair_index: c.top_pair_index,
                        bottom_pair_index: c.bottom_pair_index,
                        top_column: c.top_column(),
                        bottom_column: c.bottom_column(),
                        value: c.value,
                        witness: OrbitEcho::from(w),
                    })
                    .collect(),
            });
            doc.sharp = Some(SharpSection {
                orbit: OrbitEcho::from(&report.sharp),
                w_data: report.sharp_table.w_data().clone(),
                multiplicities: entries(&report.sharp_table),
            });
            doc.verdicts = Some(verdicts(&report));
            doc.caveats = Some(caveats(&report));
            doc.conjecture = Some(Conjecture {
                statement: CONJECTURE,
                closure_multiplicities: entries(&report.sharp_table),
            });
            push_json(&doc, out);
        }
        Format::Csv => return Err(unsupported(format, "normality")),
    }
    Ok(())
}

fn verdicts(report: &NormalityReport) -> Verdicts {
    Verdicts {
        kraft_procesi: verdict_word(report.kp_normal),
        multiplicity: verdict_word(report.mult_verdict.is_normal()),
        multiplicity_proven: report.mult_verdict_proven(),
        agree: report.criteria_agree(),
        drops: report.drops.clone(),
        w_first_difference: report.w_difference,
    }
}

fn caveats(report: &NormalityReport) -> Vec<&'static str> {
    match report.caveat {
        Caveat::None => vec![],
        Caveat::OrthogonalEqualTopColumns => vec!["orthogonal_equal_top_columns"],
    }
}

fn normality_text(report: &NormalityReport, out: &mut String) {
    orbit_line(out, "orbit", &report.orbit);
    let _ = writeln!(out, "{:<14}{}", "kraft-procesi", report.kp_verdict());
    for (chain, witness) in report.chains.iter().zip(&report.witnesses) {
        let _ = writeln!(out, "  chain {}  witness {}", chain_text(chain), witness);
    }
    orbit_line(out, "sharp", &report.sharp);
    let _ = writeln!(
        out,
        "{:<14}orbit {{{}}}  sharp {{{}}}",
        "W",
        list(&report.orbit_table.w_data().w),
        list(&report.sharp_table.w_data().w)
    );
    if let Some(d) = report.w_difference {
        let show = |v: Option<u32>| v.map_or("-".to_string(), |v| v.to_string());
        let _ = writeln!(
            out,
            "{:<14}at {}: sharp {} vs orbit {}",
            "first diff",
            d.index,
            show(d.sharp),
            show(d.orbit)
        );
    }
    let mut verdict = report.mult_verdict.to_string();
    if !report.drops.is_empty() {
        let _ = write!(verdict, " (drops at i = {})", list(&report.drops));
    }
    if !report.mult_verdict_proven() {
        verdict.push_str(" [unproven here: b_{2k+1} = b_{2k}]");
    }
    let _ = writeln!(out, "{:<14}{}", "multiplicity", verdict);
    let caveat = match report.caveat {
        Caveat::None => "none",
        Caveat::OrthogonalEqualTopColumns => "orthogonal equal top columns",
    };
    let _ = writeln!(out, "{:<14}{}", "caveat", caveat);
    let _ = writeln!(out, "{:<14}{}", "conjecture", CONJECTURE);
}

fn compare(
    orbit: &OrbitLabel,
    format: Format,
    out: &mut String,
) -> std::result::Result<(), Failure> {
    let report = normality_by_multiplicity(orbit)?;
    let indices = report.orbit_table.display_indices();
    let is_drop = |i: usize| report.drops.contains(&(i as u32));
    match format {
        Format::Text => {
            orbit_line(out, "orbit", orbit);
            orbit_line(out, "sharp", &report.sharp);
            let marks = indices
                .iter()
                .map(|&i| {
                    if is_drop(i) {
                        "*".to_string()
                    } else {
                        String::new()
                    }
                })
                .collect();
            table_text(
                out,
                &indices,
                &[
                    (
                        &series_label(orbit.kind(), "O#"),
                        cells(&report.sharp_table, &indices),
                    ),
                    (
                        &series_label(orbit.kind(), "O"),
                        cells(&report.orbit_table, &indices),
                    ),
                    ("drop", marks),
                ],
            );
        }
        Format::Csv => {
            out.push_str("i,sharp,orbit,drop\n");
            for i in indices {
                let _ = writeln!(
                    out,
                    "{i},{},{},{}",
                    report.sharp_table.entries()[i],
                    report.orbit_table.entries()[i],
                    is_drop(i)
                );
            }
        }
        Format::Json => {
            let mut doc = OutputDocument::new("compare", orbit);
            doc.sharp = Some(SharpSection {
                orbit: OrbitEcho::from(&report.sharp),
                w_data: report.sharp_table.w_data().clone(),
                multiplicities: entries(&report.sharp_table),
            });
            doc.comparison = Some(
                indices
                    .into_iter()
                    .map(|i| ComparisonRow {
                        i,
                        sharp: big(&report.sharp_table.entries()[i]),
                        orbit: big(&report.orbit_table.entries()[i]),
                        drop: is_drop(i),
                    })
                    .collect(),
            );
            doc.verdicts = Some(verdicts(&report));
            doc.caveats = Some(caveats(&report));
            push_json(&doc, out);
        }
    }
    Ok(())
}

fn infchar(
    orbit: &OrbitLabel,
    format: Format,
    out: &mut String,
) -> std::result::Result<(), Failure> {
    let chi = infinitesimal_character(orbit)?;
    match format {
        Format::Text => {
            orbit_line(out, "orbit", orbit);
            let _ = writeln!(out, "{:<14}{}", "chi", chi.display_string());
            let _ = writeln!(out, "{:<14}{}", "signed", chi.raw_string());
        }
        Format::Json => {
            let mut doc = OutputDocument::new("infchar", orbit);
            doc.infchar = Some(InfcharSection {
                display: chi.display_string(),
                raw: chi.raw_string(),
                coordinate_count: chi.coordinate_count(),
                character: chi,
            });
            push_json(&doc, out);
        }
        Format::Csv => return Err(unsupported(format, "infchar")),
    }
    Ok(())
}

/// Tallies from `enumerate --cross-check`.
#[derive(Debug, Default, Clone, PartialEq, Eq, Serialize)]
pub struct CrossCheckSummary {
    pub orbits: usize,
    pub kp_non_normal: usize,
    pub oracle_mismatches: usize,
    pub criterion_mismatches: usize,
    pub caveat_skipped: usize,
    /// Caveat orbits where the two criteria disagree (reported only).
    pub caveat_disagreements: usize,
    pub sharp_not_dominating: usize,
    pub w_direction_failures: usize,
    /// Orbits where `O♯` has a larger multiplicity at some index (reported only).
    pub sharp_exceeds_orbit: usize,
    /// Orbits where `O♯` is both above and below `O` somewhere (reported only).
    pub mixed_comparisons: usize,
    /// W-sequences whose composition counts are not unimodal (reported only).
    pub non_unimodal: usize,
}

impl CrossCheckSummary {
    pub fn passed(&self) -> bool {
        self.oracle_mismatches == 0
            && self.criterion_mismatches == 0
            && self.sharp_not_dominating == 0
    }
}

/// Cross-checks one orbit and folds the outcome into `summary`.
pub fn cross_check_orbit(
    orbit: &OrbitLabel,
    summary: &mut CrossCheckSummary,
) -> Result<NormalityReport> {
    let report = normality_by_multiplicity(orbit)?;
    summary.orbits += 1;
    if !report.kp_normal {
        summary.kp_non_normal += 1;
    }
    if oracle_table(orbit)?.entries() != report.orbit_table.entries() {
        summary.oracle_mismatches += 1;
    }
    if !is_unimodal(&composition_counts(&report.orbit_table.w_data().w)?) {
        summary.non_unimodal += 1;
    }
    if !dominance_leq(&orbit.rows(), &report.sharp.rows())? {
        summary.sharp_not_dominating += 1;
    }
    let rises = report.rises();
    if !rises.is_empty() {
        summary.sharp_exceeds_orbit += 1;
        if !report.drops.is_empty() {
            summary.mixed_comparisons += 1;
        }
    }
    if report.caveat != Caveat::None {
        summary.caveat_skipped += 1;
        if !report.criteria_agree() {
            summary.caveat_disagreements += 1;
        }
    } else {
        if !report.criteria_agree() {
            summary.criterion_mismatches += 1;
        }
        if !report.kp_normal && !report.w_difference.is_some_and(|d| d.sharp_is_smaller()) {
            summary.w_direction_failures += 1;
        }
    }
    Ok(report)
}

fn enumerate(
    family: Family,
    max_dim: u32,
    cross_check: bool,
    format: Format,
    out: &mut String,
) -> std::result::Result<(), Failure> {
    if max_dim > DEFAULT_ENUMERATION_BOUND {
        return Err(OrbitError::BoundExceeded {
            dimension: max_dim,
            bound: DEFAULT_ENUMERATION_BOUND,
        }
        .into());
    }
    let mut summary = CrossCheckSummary::default();
    let mut listed = Vec::new();
    if format == Format::Csv {
        out.push_str("group,columns,rows,kp_normal\n");
    }
    for dim in 1..=max_dim {
        let Ok(kind) = GroupKind::new(family, dim) else {
            continue;
        };
        for orbit in enumerate_orbits(kind)? {
            let kp_normal = if cross_check {
                cross_check_orbit(&orbit, &mut summary)?.kp_normal
            } else {
                crate::normality::kp_chains(&orbit).is_empty()
            };
            match format {
                Format::Text => {
                    let _ = writeln!(
                        out,
                        "{} {} rows {} kp={}",
                        kind,
                        orbit,
                        orbit.rows(),
                        verdict_word(kp_normal)
                    );
                }
                Format::Csv => {
                    let cols = orbit
                        .columns()
                        .iter()
                        .map(u32::to_string)
                        .collect::<Vec<_>>();
                    let rows = orbit
                        .rows()
                        .parts()
                        .iter()
                        .map(u32::to_string)
                        .collect::<Vec<_>>();
                    let _ = writeln!(
                        out,
                        "{kind},{},{},{kp_normal}",
                        cols.join(" "),
                        rows.join(" ")
                    );
                }
                Format::Json => listed.push(EnumeratedOrbit {
                    orbit: OrbitEcho::from(&orbit),
                    kp_normal,
                }),
            }
        }
    }
    match format {
        Format::Json => {
            let doc = EnumerationDocument {
                schema_version: SCHEMA_VERSION,
                command: "enumerate",
                family,
                max_dim,
                orbits: listed,
                cross_check: cross_check.then(|| summary.clone()),
            };
            push_json(&doc, out);
        }
        Format::Text if cross_check => {
            let _ = writeln!(
                out,
                "summary: orbits={} kp_non_normal={} oracle_mismatches={} criterion_mismatches={} \
                 caveat_skipped={} caveat_disagreements={} sharp_not_dominating={} w_direction_failures={} \
                 sharp_exceeds_orbit={} mixed_comparisons={} non_unimodal={}",
                summary.orbits,
                summary.kp_non_normal,
                summary.oracle_mismatches,
                summary.criterion_mismatches,
                summary.caveat_skipped,
                summary.caveat_disagreements,
                summary.sharp_not_dominating,
                summary.w_direction_failures,
                summary.sharp_exceeds_orbit,
                summary.mixed_comparisons,
                summary.non_unimodal
            );
        }
        _ => {}
    }
    if cross_check && !summary.passed() {
        return Err(Failure::Internal(format!(
            "cross-check failed: {summary:?}"
        )));
    }
    Ok(())
}

#[derive(Debug, Serialize)]
struct EnumeratedOrbit {
    orbit: OrbitEcho,
    kp_normal: bool,
}

#[derive(Debug, Serialize)]
struct EnumerationDocument {
    schema_version: &'static str,
    command: &'static str,
    family: Family,
    max_dim: u32,
    orbits: Vec<EnumeratedOrbit>,
    #[serde(skip_serializing_if = "Option::is_none")]
    cross_check: Option<CrossCheckSummary>,
}
