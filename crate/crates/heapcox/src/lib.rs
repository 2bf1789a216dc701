//! Full heaps over affine Dynkin diagrams.
//!
//! A full heap is an infinite labelled poset over a Dynkin diagram whose
//! proper order ideals form a distributive lattice carrying a faithful
//! action of the corresponding affine Weyl group.  This crate builds the
//! catalog of full heaps (types A, B, C, D, twisted variants, E6 and E7),
//! validates the heap axioms, computes the induced permutation
//! representations, and reproduces their concrete realizations:
//! permutations of the integers, sign-string actions, the 27 lines on a
//! cubic surface, and edge-labelled ideal lattices.
//!
//! All arithmetic is exact integer arithmetic; there is no floating point
//! anywhere in the crate.

pub mod cartan;
pub mod heap;
pub mod lattice;
pub mod realize;
pub mod weyl;

pub use cartan::{CartanMatrix, CatalogTag, DynkinDiagram, RootClass, RootVector};
pub use heap::{FiniteHeap, HeapElement, MotifTag, PeriodicHeap};
pub use lattice::{Frontier, GradedIdeal};
pub use weyl::WeylWord;

use thiserror::Error;

/// Errors reported by constructors, parsers and operations with
/// preconditions.  Operations whose "failure" is a defined answer (the
/// zero action of a raising operator, a validation report carrying
/// violations) do not use this type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix is not a generalized Cartan matrix: {0}")]
    NotCartan(String),
    #[error("entry {0} out of range for a doubly laced matrix")]
    EntryOutOfRange(i64),
    #[error("rank {rank} out of range for catalog type {tag}")]
    RankOutOfRange { tag: String, rank: usize },
    #[error("unknown catalog tag `{0}`")]
    UnknownTag(String),
    #[error("diagram is not of affine type: {0}")]
    NotAffine(String),
    #[error("diagram of indefinite type is unsupported")]
    Indefinite,
    #[error("root classification is disabled for this diagram")]
    ClassificationDisabled,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("invalid generator index {0}")]
    BadGenerator(usize),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("motif is inconsistent: {0}")]
    BadMotif(String),
    #[error("folding rejected: {0}")]
    BadFold(String),
    #[error("search budget exhausted: {0}")]
    BudgetExhausted(String),
    #[error("operation requires t_0 = 1, but the distinguished chain has period {0}")]
    BasePeriod(i64),
    #[error("{0}")]
    Unsupported(String),
    #[error("frontier is not an ideal")]
    NotAnIdeal,
    #[error("restrict requires a height-0 ideal (height is {0})")]
    NotHeightZero(i64),
}

pub type Result<T> = std::result::Result<T, Error>;
