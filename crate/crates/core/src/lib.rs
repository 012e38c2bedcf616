//! Exact root systems, quadratic foldings, parabolic moment graphs and the
//! lifting problem for combinatorial Schubert classes.
//!
//! The crate is `no_std` and only needs `alloc`. All arithmetic is exact:
//! scalars live in the quadratic algebra `L = Q[t]/(t^2 - c1 t - 1)` and group
//! elements are integer matrices over `Z[t]`.
#![no_std]

extern crate alloc;

pub mod coxeter;
pub mod error;
pub mod folding;
pub mod lifting;
pub mod momentgraph;
pub mod poly;
pub mod qring;
pub mod rootsys;
pub mod schubert;

pub use coxeter::{CoxeterGroup, GroupElement, Parabolic, Word};
pub use error::Error;
pub use folding::{FoldingData, FoldingId};
pub use lifting::{LiftMethod, LiftReport, Lifter, SweepVerdict};

pub use momentgraph::MomentGraph;
pub use poly::Poly;
pub use qring::{GoldenInt, QElem, QuadraticRing};
pub use rootsys::RootDatum;
pub use schubert::StructClass;

pub type Result<T> = core::result::Result<T, Error>;
