use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "foldlift", version, about = "Schubert classes, foldings and liftings of moment graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Dot,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the catalog foldings and their build-time checks.
    Catalog {
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Parabolic moment graph of a type.
    MomentGraph {
        /// Simply-laced type (A3, D5, E8, ...) or a folded type (C2, B4, F4, H3, ...).
        #[arg(long = "type")]
        type_name: String,
        #[arg(long, default_value = "")]
        parabolic: String,
        #[arg(long, value_enum, default_value = "dot")]
        format: Format,
    },
    /// Values of a Schubert class at every vertex.
    Schubert {
        #[arg(long = "type")]
        type_name: String,
        #[arg(long)]
        w: String,
        #[arg(long, default_value = "")]
        parabolic: String,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Push a Schubert class of the original type to the folded type.
    Fold {
        #[arg(long)]
        folding: String,
        #[arg(long)]
        w: String,
        /// Stable parabolic subset of original generators.
        #[arg(long, default_value = "")]
        parabolic: String,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Liftings of one folded element, or of the whole folded quotient.
    Liftings {
        #[arg(long)]
        folding: String,
        /// Folded word; omit to list every element of the quotient.
        #[arg(long)]
        u: Option<String>,
        /// Stable parabolic subset of original generators.
        #[arg(long, default_value = "")]
        parabolic: String,
        /// Use the Bruhat-order oracle instead of the folding-set search.
        #[arg(long)]
        oracle: bool,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
        #[arg(long)]
        length_cap: Option<usize>,
    },
    /// Decide the lifting property for stable parabolic subsets.
    Sweep {
        #[arg(long)]
        folding: String,
        /// One stable parabolic subset; omit to sweep all of them.
        #[arg(long)]
        parabolic: Option<String>,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
        #[arg(long)]
        length_cap: Option<usize>,
    },
    /// Recompute the golden tables and compare.
    VerifyTables {
        /// Directory with table1.json, table2.json and lifting_property.json to use
        /// instead of the embedded copies.
        #[arg(long)]
        golden: Option<PathBuf>,
    },
}
