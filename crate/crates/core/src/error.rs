use std::fmt;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// A failed group axiom, with the element(s) witnessing it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupViolation {
    NotAssociative(usize, usize, usize),
    NoIdentity(usize),
    NoInverse(usize),
}

impl fmt::Display for GroupViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupViolation::NotAssociative(a, b, c) => {
                write!(f, "not associative at ({a}, {b}, {c})")
            }
            GroupViolation::NoIdentity(x) => write!(f, "0 is not an identity for {x}"),
            GroupViolation::NoInverse(x) => write!(f, "{x} has no inverse"),
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed input: {0}")]
    Malformed(String),

    #[error("group axioms violated: {}", .0.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
    InvalidGroup(Vec<GroupViolation>),

    #[error("{what}: {needed} exceeds cap {cap}")]
    CapExceeded {
        what: &'static str,
        needed: u128,
        cap: u128,
    },

    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),

    #[error("module action is not a homomorphism: {0}")]
    ActionNotHomomorphic(String),

    #[error("cochain is not a cocycle: coboundary nonzero at {0:?}")]
    NotACocycle(Vec<usize>),

    #[error("crossed module axiom (i) fails for g = {g}, h = {h}")]
    AxiomIViolated { g: usize, h: usize },

    #[error("crossed module axiom (ii) fails for h~ = {h_tilde}, h = {h}")]
    AxiomIIViolated { h_tilde: usize, h: usize },

    #[error("invalid crossed module action: {0}")]
    ActionInvalid(String),

    #[error("presentation cannot be realized as a finite table: {0}")]
    PresentationNotRealizable(String),

    #[error("target group is not abelian ({0} and {1} do not commute)")]
    NonAbelianTarget(usize, usize),

    #[error("module map is not equivariant at p = {p}, generator {generator}")]
    NotEquivariant { p: usize, generator: usize },

    #[error("k-invariant is not cohomologous to zero")]
    KNotTrivial,
}

impl Error {
    pub fn malformed(msg: impl Into<String>) -> Self {
        Error::Malformed(msg.into())
    }

    pub fn is_cap(&self) -> bool {
        matches!(self, Error::CapExceeded { .. })
    }
}
