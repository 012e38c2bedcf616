use std::fmt::Write;

use foldlift::lifting::brute_force_report;
use foldlift::schubert::{expand_in_basis, schubert_class};
use foldlift::{
    CoxeterGroup, FoldingData, GroupElement, LiftReport, Lifter, MomentGraph, Parabolic, SweepVerdict, Word,
};
use rayon::prelude::*;
use serde::Serialize;

use crate::args::{Cli, Command, Format};
use crate::resolve::{self, folded_word, original_word};
use crate::{golden, CliError, CliResult};

/// Run a parsed command. On failure the partial stdout is returned with the
/// error.
pub fn execute(cli: &Cli) -> Result<String, (String, CliError)> {
    let plain = |r: CliResult<String>| r.map_err(|e| (String::new(), e));
    match &cli.command {
        Command::Catalog { format } => plain(catalog(*format)),
        Command::MomentGraph { type_name, parabolic, format } => plain(moment_graph(type_name, parabolic, *format)),
        Command::Schubert { type_name, w, parabolic, format } => plain(schubert(type_name, w, parabolic, *format)),
        Command::Fold { folding, w, parabolic, format } => plain(fold(folding, w, parabolic, *format)),
        Command::Liftings { folding, u, parabolic, oracle, format, length_cap } => {
            plain(liftings(folding, u.as_deref(), parabolic, *oracle, *format, *length_cap))
        }
        Command::Sweep { folding, parabolic, format, length_cap } => {
            plain(sweep(folding, parabolic.as_deref(), *format, *length_cap))
        }
        Command::VerifyTables { golden } => golden::verify(golden.as_deref()),
    }
}

fn json<T: Serialize>(value: &T) -> CliResult<String> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

fn no_dot(cmd: &str) -> CliError {
    CliError::Usage(format!("`{cmd}` has no dot output"))
}

#[derive(Serialize)]
struct CatalogEntry {
    folding: String,
    original: String,
    folded: String,
    ring: &'static str,
    phi: Vec<usize>,
    checks: Vec<CheckEntry>,
}

#[derive(Serialize)]
struct CheckEntry {
    name: String,
    passed: bool,
}

fn catalog(format: Format) -> CliResult<String> {
    let mut entries = Vec::new();
    for id in foldlift::FoldingId::CATALOG {
        let fd = FoldingData::build(id)?;
        entries.push(CatalogEntry {
            folding: id.to_string(),
            original: id.original_name(),
            folded: id.folded_name(),
            ring: if fd.ring().is_split() { "split" } else { "golden" },
            phi: fd.phi_map().iter().map(|j| j + 1).collect(),
            checks: fd
                .invariant_checks()
                .iter()
                .map(|c| CheckEntry { name: c.name.to_string(), passed: c.passed })
                .collect(),
        });
    }
    match format {
        Format::Json => json(&entries),
        Format::Dot => Err(no_dot("catalog")),
        Format::Table => {
            let mut out = String::new();
            for e in &entries {
                let phi: Vec<String> = e.phi.iter().enumerate().map(|(i, j)| format!("s{}->R{j}", i + 1)).collect();
                let passed = e.checks.iter().filter(|c| c.passed).count();
                let _ = writeln!(
                    out,
                    "{}\t{} -> {}\t{}\t{}\tchecks {}/{}",
                    e.folding,
                    e.original,
                    e.folded,
                    e.ring,
                    phi.join(" "),
                    passed,
                    e.checks.len()
                );
            }
            Ok(out)
        }
    }
}

#[derive(Serialize)]
struct GraphJson {
    vertices: Vec<String>,
    edges: Vec<EdgeJson>,
}

#[derive(Serialize)]
struct EdgeJson {
    from: String,
    to: String,
    label_coords: Vec<String>,
}

fn moment_graph(type_name: &str, parabolic: &str, format: Format) -> CliResult<String> {
    let g = resolve::group(type_name)?;
    let p = resolve::parabolic(parabolic, g.rank())?;
    let m = MomentGraph::build(&g, p)?;
    let name = |i: usize| m.words()[i].render(g.rank());
    match format {
        Format::Dot => Ok(m.to_dot("a")),
        Format::Json => json(&GraphJson {
            vertices: (0..m.len()).map(name).collect(),
            edges: m
                .edges()
                .iter()
                .map(|e| EdgeJson { from: name(e.source), to: name(e.target), label_coords: m.label_coords(e) })
                .collect(),
        }),
        Format::Table => {
            let mut out = String::new();
            for e in m.edges() {
                let _ = writeln!(out, "{}\t{}\t{}", name(e.source), name(e.target), m.label(e).render("a"));
            }
            Ok(out)
        }
    }
}

#[derive(Serialize)]
struct ValueJson {
    vertex: String,
    value: String,
}

#[derive(Serialize)]
struct SchubertJson {
    #[serde(rename = "type")]
    type_name: String,
    w: String,
    parabolic: Vec<usize>,
    values: Vec<ValueJson>,
}

fn element(g: &CoxeterGroup, s: &str) -> CliResult<GroupElement> {
    let word = resolve::word(s, g.rank())?;
    if !g.is_reduced(&word) {
        return Err(CliError::Compute(foldlift::Error::NotReduced));
    }
    Ok(g.element_of(&word)?)
}

fn value_rows(words: &[Word], values: &[foldlift::Poly], rank: usize, prefix: &str) -> Vec<ValueJson> {
    words.iter().zip(values).map(|(w, v)| ValueJson { vertex: w.render(rank), value: v.render(prefix) }).collect()
}

fn rows_table(rows: &[ValueJson]) -> String {
    let mut out = String::new();
    for r in rows {
        let _ = writeln!(out, "{}\t{}", r.vertex, r.value);
    }
    out
}

fn schubert(type_name: &str, w: &str, parabolic: &str, format: Format) -> CliResult<String> {
    let g = resolve::group(type_name)?;
    let p = resolve::parabolic(parabolic, g.rank())?;
    let w = element(&g, w)?;
    let m = MomentGraph::build(&g, p)?;
    let y = schubert_class(&g, &w, &m)?;
    let rows = value_rows(m.words(), y.values(), g.rank(), "a");
    match format {
        Format::Json => json(&SchubertJson {
            type_name: type_name.to_string(),
            w: g.lex_least_word(&w).render(g.rank()),
            parabolic: p.one_based(),
            values: rows,
        }),
        Format::Dot => Err(no_dot("schubert")),
        Format::Table => Ok(rows_table(&rows)),
    }
}

#[derive(Serialize)]
struct FoldJson {
    folding: String,
    w: String,
    parabolic: Vec<usize>,
    values: Vec<ValueJson>,
    expansion: Vec<ValueJson>,
}

fn fold(folding: &str, w: &str, parabolic: &str, format: Format) -> CliResult<String> {
    let fd = resolve::folding(folding)?;
    let orig = fd.original();
    let p = resolve::parabolic(parabolic, orig.rank())?;
    let q = fd.folded_parabolic(p)?;
    let w = element(orig, w)?;
    let big = MomentGraph::build(orig, p)?;
    let small = MomentGraph::build(fd.folded(), q)?;
    let y = schubert_class(orig, &w, &big)?;
    let folded = fd.fold_class(&y, &small)?;
    let rank = fd.folded().rank();
    let rows = value_rows(small.words(), folded.values(), rank, "b");
    let expansion: Vec<ValueJson> = expand_in_basis(fd.folded(), &folded)?
        .into_iter()
        .map(|(i, c)| ValueJson { vertex: small.words()[i].render(rank), value: c.render("b") })
        .collect();
    match format {
        Format::Json => json(&FoldJson {
            folding: fd.id().to_string(),
            w: orig.lex_least_word(&w).render(orig.rank()),
            parabolic: p.one_based(),
            values: rows,
            expansion,
        }),
        Format::Dot => Err(no_dot("fold")),
        Format::Table => {
            let mut out = rows_table(&rows);
            out.push_str("expansion\n");
            for r in &expansion {
                let _ = writeln!(out, "Y[{}]\t{}", r.vertex, r.value);
            }
            Ok(out)
        }
    }
}

#[derive(Serialize)]
pub struct LiftingJson {
    pub word: Vec<usize>,
    pub exponent_m: u32,
}

#[derive(Serialize)]
pub struct ReportJson {
    pub folding: String,
    pub parabolic: Vec<usize>,
    pub u_word: Vec<usize>,
    pub liftable: bool,
    pub liftings: Vec<LiftingJson>,
}

fn report_json(fd: &FoldingData, p: Parabolic, r: &LiftReport) -> ReportJson {
    ReportJson {
        folding: fd.id().to_string(),
        parabolic: p.one_based(),
        u_word: r.u_word.one_based(),
        liftable: r.is_liftable(),
        liftings: r
            .words
            .iter()
            .zip(&r.exponents)
            .map(|(w, &m)| LiftingJson { word: w.one_based(), exponent_m: m })
            .collect(),
    }
}

/// One row of a lifting table: `len | u | liftings`.
pub fn report_row(r: &LiftReport) -> String {
    let lifts = if r.words.is_empty() {
        "(none)".to_string()
    } else {
        r.words.iter().map(original_word).collect::<Vec<_>>().join(", ")
    };
    format!("{} | {} | {}", r.u_word.len(), folded_word(&r.u_word), lifts)
}

fn apply_cap(fd: &mut FoldingData, cap: Option<usize>) {
    if let Some(c) = cap {
        fd.original_mut().set_length_cap(c);
        fd.folded_mut().set_length_cap(c);
    }
}

fn liftings(
    folding: &str,
    u: Option<&str>,
    parabolic: &str,
    oracle: bool,
    format: Format,
    cap: Option<usize>,
) -> CliResult<String> {
    let mut fd = resolve::folding(folding)?;
    apply_cap(&mut fd, cap);
    let p = resolve::parabolic(parabolic, fd.original().rank())?;
    let q = fd.folded_parabolic(p)?;
    let targets = match u {
        Some(s) => vec![element(fd.folded(), s)?],
        None => {
            let limit = fd.folded().length_cap();
            fd.folded().enumerate_quotient(q)?.into_iter().filter(|u| u.length() <= limit).collect()
        }
    };
    let fd = &fd;
    let reports: Vec<LiftReport> = targets
        .par_iter()
        .map_init(
            || Lifter::new(fd),
            |lifter, u| -> CliResult<LiftReport> {
                let mut r = if oracle { brute_force_report(fd, u, p)? } else { lifter.liftings_of(u, p)? };
                r.exponents = r
                    .liftings
                    .iter()
                    .map(|w| foldlift::lifting::lifting_exponent(fd, w, u))
                    .collect::<foldlift::Result<Vec<_>>>()?;
                Ok(r)
            },
        )
        .collect::<CliResult<Vec<_>>>()?;
    match format {
        Format::Json => {
            let out: Vec<ReportJson> = reports.iter().map(|r| report_json(fd, p, r)).collect();
            if u.is_some() {
                json(&out[0])
            } else {
                json(&out)
            }
        }
        Format::Dot => Err(no_dot("liftings")),
        Format::Table => {
            let mut out = String::from("l(u) | u | liftings\n");
            for r in &reports {
                out.push_str(&report_row(r));
                out.push('\n');
            }
            Ok(out)
        }
    }
}

#[derive(Serialize)]
struct SweepJson {
    folding: String,
    parabolic: Vec<usize>,
    verdict: &'static str,
    checked: Option<usize>,
    cap: Option<usize>,
    witness: Option<Vec<usize>>,
}

/// Parallel sweep over the folded quotient; the reported witness is the
/// first nonliftable element in (length, lex) order.
pub fn parallel_sweep(fd: &FoldingData, p: Parabolic, cap: usize) -> CliResult<SweepVerdict> {
    let q = fd.folded_parabolic(p)?;
    let quotient = fd.folded().enumerate_quotient(q)?;
    let within: Vec<&GroupElement> = quotient.iter().filter(|u| u.length() <= cap).collect();
    let truncated = within.len() < quotient.len();
    let results: Vec<foldlift::Result<bool>> =
        within.par_iter().map_init(|| Lifter::new(fd), |l, u| l.liftings_of(u, p).map(|r| r.is_liftable())).collect();
    for (u, r) in within.iter().zip(results) {
        if !r? {
            return Ok(SweepVerdict::Witness { u: (*u).clone(), word: fd.folded().lex_least_word(u) });
        }
    }
    let checked = within.len();
    Ok(if truncated { SweepVerdict::HoldsUpToCap { cap, checked } } else { SweepVerdict::Holds { checked } })
}

fn sweep(folding: &str, parabolic: Option<&str>, format: Format, cap: Option<usize>) -> CliResult<String> {
    let mut fd = resolve::folding(folding)?;
    apply_cap(&mut fd, cap);
    let cap = fd.folded().length_cap();
    let ps = match parabolic {
        Some(s) => vec![resolve::parabolic(s, fd.original().rank())?],
        None => fd.theta_stable_parabolics(),
    };
    let mut rows = Vec::new();
    for p in ps {
        let v = parallel_sweep(&fd, p, cap)?;
        let row = match v {
            SweepVerdict::Holds { checked } => SweepJson {
                folding: fd.id().to_string(),
                parabolic: p.one_based(),
                verdict: "holds",
                checked: Some(checked),
                cap: None,
                witness: None,
            },
            SweepVerdict::HoldsUpToCap { cap, checked } => SweepJson {
                folding: fd.id().to_string(),
                parabolic: p.one_based(),
                verdict: "holds-up-to-cap",
                checked: Some(checked),
                cap: Some(cap),
                witness: None,
            },
            SweepVerdict::Witness { word, .. } => SweepJson {
                folding: fd.id().to_string(),
                parabolic: p.one_based(),
                verdict: "witness",
                checked: None,
                cap: None,
                witness: Some(word.one_based()),
            },
        };
        rows.push(row);
    }
    match format {
        Format::Json => json(&rows),
        Format::Dot => Err(no_dot("sweep")),
        Format::Table => {
            let mut out = String::new();
            for r in &rows {
                let p = format!("{}", Parabolic::from_one_based(&r.parabolic));
                let detail = match r.verdict {
                    "holds" => format!("holds ({} checked)", r.checked.unwrap_or(0)),
                    "holds-up-to-cap" => {
                        format!("holds up to length {} ({} checked)", r.cap.unwrap_or(0), r.checked.unwrap_or(0))
                    }
                    _ => format!("fails: {}", folded_word(&Word::from_one_based(r.witness.as_deref().unwrap_or(&[])))),
                };
                let _ = writeln!(out, "{}\tP={p}\t{detail}", r.folding);
            }
            Ok(out)
        }
    }
}
