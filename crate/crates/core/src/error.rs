use crate::subset::Subset;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("point count {0} outside 1..=16")]
    PointCount(usize),
    #[error("subset {0:#x} has an index outside 0..{1}")]
    SubsetOutOfRange(u32, usize),
    #[error("family must contain the empty set and the full set: {0} is missing")]
    MissingEmptyOrFull(Subset),
    #[error("family is not closed under union: {0} ∪ {1} is missing")]
    NotUnionClosed(Subset, Subset),
    #[error("family is not closed under intersection: {0} ∩ {1} is missing")]
    NotIntersectionClosed(Subset, Subset),
    #[error("subspace carrier is empty")]
    EmptyCarrier,
    #[error("unknown point label `{0}`")]
    UnknownLabel(String),
    #[error("duplicate point label `{0}`")]
    DuplicatePoint(String),
    #[error("no assignment for domain point `{0}`")]
    MissingAssignment(String),
    #[error("assignment targets unknown codomain point `{0}`")]
    UnknownCodomainPoint(String),
    #[error("enumeration bound {0} exceeds the supported maximum {1}")]
    BoundExceeded(usize, usize),
    #[error("unknown theorem `{0}`")]
    UnknownTheorem(String),
    #[error("unknown tag `{0}`")]
    UnknownTag(String),
    #[error("query mixes incompatible tag levels: {0}")]
    MixedLevels(String),
    #[error("malformed document: {0}")]
    Document(String),
    #[error("i/o error on {path}: {message}")]
    Io { path: String, message: String },
}

impl Error {
    /// Renders the diagnostic with subsets spelled by point label.
    pub fn render(&self, labels: &[String]) -> String {
        match self {
            Error::NotUnionClosed(u, v) => format!(
                "family is not closed under union: {} ∪ {} is missing",
                u.display_with(labels),
                v.display_with(labels)
            ),
            Error::NotIntersectionClosed(u, v) => format!(
                "family is not closed under intersection: {} ∩ {} is missing",
                u.display_with(labels),
                v.display_with(labels)
            ),
            Error::MissingEmptyOrFull(s) => format!(
                "family must contain the empty set and the full set: {} is missing",
                s.display_with(labels)
            ),
            other => other.to_string(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
