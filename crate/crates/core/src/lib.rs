//! Clifford basis groups on signed bitmask blades.
//!
//! - [`blade`]: signed blades of Cl(n,0) and their geometric product.
//! - [`set`]: set product and union of blade sets, and groups generated
//!   from blade generators.
//! - [`taxonomy`]: choir/band classification, disorder, chord and beat, and
//!   the isomorphic / similar / equivalent / equal relations.
//! - [`enumerate`]: exhaustive enumeration into similarity classes, modes
//!   and rhythms.
//! - [`tables`]: the ten Cl(3,0) reference tables.
//! - [`cli`]: the `basis-groups` command.

pub mod blade;
pub mod cli;
pub mod enumerate;
pub mod error;
pub mod pattern;
pub mod set;
pub mod tables;
pub mod taxonomy;

pub use blade::{naive_reorder_sign, Blade, Sign, SignedBlade};
pub use enumerate::{enumerate, mode_partition, rhythm_partition, Block, Counts, TaxonomyReport};
pub use error::{Error, Result};
pub use pattern::PatternName;
pub use set::{ElementSet, GeneratorList};
pub use tables::{table_rows, Table};
pub use taxonomy::{
    beat, chord, classify, disorder, equal, equivalent, presentation_isomorphic, similar, Beat,
    CliffordTarget, GroupRecord, Relations, Verdict,
};
