//! Exhaustive laboratory: enumeration of spaces and maps, the theorem
//! registry, counterexample search, and the fixture discrepancy report.

pub mod enumerate;
pub mod query;
pub mod registry;
pub mod report;
pub mod sweep;

pub use enumerate::{
    canonical_form, enumerate_maps, enumerate_topologies, spaces_up_to, topologies_naive, topologies_preorder,
    CanonicalForm,
};
pub use query::{check_implication, SearchQuery, Tag};
pub use registry::{registry, theorem, TheoremId};
pub use report::{paper_report, DiscrepancyReport};
pub use sweep::{replay, verify_all, verify_theorem, SweepOptions, TheoremReport, Witness};
