use thiserror::Error;

use super::vector::Vector;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LieError {
    #[error("Jacobi identity fails on basis triple ({i}, {j}, {k}): defect {defect}")]
    JacobiViolation {
        i: usize,
        j: usize,
        k: usize,
        defect: Vector,
    },
    #[error("structure constants are not antisymmetric at ({i}, {j}, {k})")]
    AntisymmetryViolation { i: usize, j: usize, k: usize },
    #[error("basis index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("nonzero self-bracket [e{i}, e{i}] on e{k}")]
    SelfBracket { i: usize, k: usize },
    #[error("conflicting values given for [e{i}, e{j}] on e{k}")]
    ConflictingEntry { i: usize, j: usize, k: usize },
    #[error("expected {expected} basis labels, found {found}")]
    LabelCount { expected: usize, found: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("an algebra must have positive dimension")]
    EmptyAlgebra,
    #[error("Gram matrix is not symmetric")]
    NotSymmetric,
    #[error("bilinear form is degenerate")]
    DegenerateForm,
    #[error("subspace is not a subalgebra: [{x}, {y}] = {bracket}")]
    NotASubalgebra {
        x: Vector,
        y: Vector,
        bracket: Vector,
    },
    #[error("algebra is not of compact type: {0}")]
    NotCompactType(String),
    #[error("ideal of dimension {0} does not split into simple ideals over the rationals")]
    IrrationalSplitting(usize),
}
