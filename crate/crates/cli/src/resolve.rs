//! Flag parsing shared by the subcommands.

use foldlift::{CoxeterGroup, FoldingData, FoldingId, Parabolic, RootDatum, Word};

use crate::{CliError, CliResult};

/// Foldings reachable by name, including parametric instances.
pub fn known_foldings() -> Vec<FoldingId> {
    let mut ids: Vec<FoldingId> = FoldingId::CATALOG.to_vec();
    for n in 2..=5 {
        for id in [FoldingId::AC(n), FoldingId::DB(n)] {
            if !ids.contains(&id) {
                ids.push(id);
            }
        }
    }
    ids
}

pub fn folding(name: &str) -> CliResult<FoldingData> {
    let id: FoldingId = name.parse().map_err(|_| CliError::Usage(format!("unknown folding `{name}`")))?;
    Ok(FoldingData::build(id)?)
}

/// A simply-laced type, or the target of a catalog folding.
pub fn group(name: &str) -> CliResult<CoxeterGroup> {
    if let Ok(d) = RootDatum::simply_laced_type(name) {
        return Ok(CoxeterGroup::new(d)?);
    }
    for id in known_foldings() {
        if id.folded_name() == name {
            return Ok(FoldingData::build(id)?.folded().clone());
        }
    }
    Err(CliError::Usage(format!("unknown type `{name}`")))
}

/// Words as digits (`121`), comma lists (`1,2,1`), generator names
/// (`R1R2R1`, `s1s2`) or `e`.
pub fn word(s: &str, rank: usize) -> CliResult<Word> {
    let cleaned: String = s.trim().replace(['R', 's'], ",");
    let cleaned = cleaned.trim_start_matches(',');
    Word::parse(cleaned, rank).map_err(|e| CliError::Usage(format!("bad word `{s}`: {e}")))
}

pub fn parabolic(s: &str, rank: usize) -> CliResult<Parabolic> {
    Parabolic::parse(s, rank).map_err(|e| CliError::Usage(format!("bad parabolic subset `{s}`: {e}")))
}

/// Render a folded word as `R1R2`, the identity as `e`.
pub fn folded_word(w: &Word) -> String {
    w.render_with("R")
}

pub fn original_word(w: &Word) -> String {
    w.render_with("s")
}
