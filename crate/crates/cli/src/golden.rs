//! Golden data for the lifting tables and the lifting-property
//! classification, and the `verify-tables` comparison.

use std::collections::BTreeSet;
use std::fmt::Write;
use std::path::Path;

use foldlift::{FoldingData, Lifter, Parabolic, SweepVerdict};
use serde::Deserialize;

use crate::commands::parallel_sweep;
use crate::resolve::{self, folded_word, original_word};
use crate::{CliError, CliResult};

pub const TABLE1: &str = include_str!("../data/table1.json");
pub const TABLE2: &str = include_str!("../data/table2.json");
pub const LIFTING_PROPERTY: &str = include_str!("../data/lifting_property.json");

#[derive(Debug, Clone, Deserialize)]
pub struct LiftTable {
    pub folding: String,
    pub parabolic: Vec<usize>,
    pub rows: Vec<LiftRow>,
}

#[derive(Debug, Clone, Deserialize)]
pub struct LiftRow {
    pub u: String,
    pub liftings: Vec<String>,
}

#[derive(Debug, Clone, Deserialize)]
pub struct Classification {
    pub folding: String,
    /// Exactly the stable parabolic subsets with the lifting property.
    pub holds_for: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, Deserialize)]
pub struct Witness {
    pub folding: String,
    pub folded_parabolic: Vec<usize>,
    pub u: String,
}

#[derive(Debug, Clone, Deserialize)]
pub struct QuotientCount {
    pub folding: String,
    pub parabolic: Vec<usize>,
    pub size: usize,
}

#[derive(Debug, Clone, Deserialize)]
pub struct LiftingProperty {
    pub classifications: Vec<Classification>,
    pub witnesses: Vec<Witness>,
    pub counts: Vec<QuotientCount>,
}

#[derive(Debug, Clone)]
pub struct Golden {
    pub table1: LiftTable,
    pub table2: LiftTable,
    pub lifting_property: LiftingProperty,
}

impl Golden {
    pub fn embedded() -> CliResult<Self> {
        Ok(Golden {
            table1: serde_json::from_str(TABLE1)?,
            table2: serde_json::from_str(TABLE2)?,
            lifting_property: serde_json::from_str(LIFTING_PROPERTY)?,
        })
    }

    pub fn from_dir(dir: &Path) -> CliResult<Self> {
        let read = |name: &str| std::fs::read_to_string(dir.join(name));
        Ok(Golden {
            table1: serde_json::from_str(&read("table1.json")?)?,
            table2: serde_json::from_str(&read("table2.json")?)?,
            lifting_property: serde_json::from_str(&read("lifting_property.json")?)?,
        })
    }
}

/// One line of the verification log.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub label: String,
    pub ok: bool,
    pub detail: String,
}

fn normalize(words: &[String], rank: usize) -> CliResult<BTreeSet<String>> {
    words.iter().map(|w| Ok(original_word(&resolve::word(w, rank)?))).collect()
}

pub fn check_table(table: &LiftTable, name: &str) -> CliResult<Vec<Check>> {
    let fd = resolve::folding(&table.folding)?;
    let p = Parabolic::from_one_based(&table.parabolic);
    let mut lifter = Lifter::new(&fd);
    let mut out = Vec::new();
    for row in &table.rows {
        let word = resolve::word(&row.u, fd.folded().rank())?;
        let u = fd.folded().element_of(&word)?;
        let report = lifter.liftings_of(&u, p)?;
        let got: BTreeSet<String> = report.words.iter().map(original_word).collect();
        let want = normalize(&row.liftings, fd.original().rank())?;
        let ok = got == want;
        let fmt = |s: &BTreeSet<String>| s.iter().cloned().collect::<Vec<_>>().join(", ");
        out.push(Check {
            label: format!("{name} {} u={}", table.folding, folded_word(&word)),
            ok,
            detail: if ok { String::new() } else { format!("expected {{{}}} got {{{}}}", fmt(&want), fmt(&got)) },
        });
    }
    Ok(out)
}

pub fn check_classification(c: &Classification) -> CliResult<Vec<Check>> {
    let fd = resolve::folding(&c.folding)?;
    let expected: BTreeSet<Parabolic> = c.holds_for.iter().map(|p| Parabolic::from_one_based(p)).collect();
    let mut out = Vec::new();
    for p in fd.theta_stable_parabolics() {
        let verdict = parallel_sweep(&fd, p, usize::MAX)?;
        let holds = matches!(verdict, SweepVerdict::Holds { .. });
        let want = expected.contains(&p);
        let detail = match (&verdict, holds == want) {
            (_, true) => String::new(),
            (SweepVerdict::Witness { word, .. }, false) => format!("expected to hold, witness {}", folded_word(word)),
            _ => "expected a witness, lifting property holds".to_string(),
        };
        out.push(Check { label: format!("classification {} P={p}", c.folding), ok: holds == want, detail });
    }
    Ok(out)
}

pub fn check_witness(w: &Witness) -> CliResult<Check> {
    let fd: FoldingData = resolve::folding(&w.folding)?;
    let q = Parabolic::from_one_based(&w.folded_parabolic);
    let word = resolve::word(&w.u, fd.folded().rank())?;
    let u = fd.folded().element_of(&word)?;
    let reduced = u.length() == word.len();
    let in_quotient = fd.folded().is_min_coset_rep(&u, q);
    let liftable = Lifter::new(&fd).liftings_of(&u, fd.original_parabolic(q))?.is_liftable();
    let ok = reduced && in_quotient && !liftable;
    Ok(Check {
        label: format!("witness {} P_tau={q} u={}", w.folding, folded_word(&word)),
        ok,
        detail: if ok {
            String::new()
        } else {
            format!("reduced={reduced} in_quotient={in_quotient} liftable={liftable}")
        },
    })
}

pub fn check_count(c: &QuotientCount) -> CliResult<Check> {
    let fd = resolve::folding(&c.folding)?;
    let q = fd.folded_parabolic(Parabolic::from_one_based(&c.parabolic))?;
    let size = fd.folded().enumerate_quotient(q)?.len();
    Ok(Check {
        label: format!("count {} P={}", c.folding, Parabolic::from_one_based(&c.parabolic)),
        ok: size == c.size,
        detail: if size == c.size { String::new() } else { format!("expected {} got {size}", c.size) },
    })
}

pub fn all_checks(g: &Golden) -> CliResult<Vec<Check>> {
    let mut out = check_table(&g.table1, "table1")?;
    out.extend(check_table(&g.table2, "table2")?);
    for c in &g.lifting_property.classifications {
        out.extend(check_classification(c)?);
    }
    for w in &g.lifting_property.witnesses {
        out.push(check_witness(w)?);
    }
    for c in &g.lifting_property.counts {
        out.push(check_count(c)?);
    }
    Ok(out)
}

pub fn verify(dir: Option<&Path>) -> Result<String, (String, CliError)> {
    let golden = match dir {
        Some(d) => Golden::from_dir(d),
        None => Golden::embedded(),
    }
    .map_err(|e| (String::new(), e))?;
    let checks = all_checks(&golden).map_err(|e| (String::new(), e))?;
    let mut out = String::new();
    let mut failed = 0;
    for c in &checks {
        if c.ok {
            let _ = writeln!(out, "ok\t{}", c.label);
        } else {
            failed += 1;
            let _ = writeln!(out, "MISMATCH\t{}\t{}", c.label, c.detail);
        }
    }
    let _ = writeln!(out, "{} checks, {} mismatches", checks.len(), failed);
    if failed > 0 {
        Err((out, CliError::Mismatch(format!("{failed} of {} checks differ from the golden data", checks.len()))))
    } else {
        Ok(out)
    }
}
