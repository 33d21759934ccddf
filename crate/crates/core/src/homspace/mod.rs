//! Reductive decompositions `g = h ⊕ m`: construction, classification
//! (normal, naturally reductive, effective) and the isotropy action.

mod checks;
mod metric;
mod pair;
mod probe;

use thiserror::Error;

use crate::liealg::{Definiteness, InvarianceWitness, LieError, Vector};

pub use checks::{
    isotropy_fixed_subspace, naturally_reductive_check, normalizer_invariance_check,
    NormalizerCheck, TripleWitness,
};
pub(crate) use checks::skew_scan;
pub use metric::{build_metric, MetricMode, MetricSpec};
pub use pair::{normal_decomposition, PairFlags, ReductivePair};
pub use probe::{isotropy_irreducibility_probe, ProbeKind, ProbeVerdict};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomError {
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error("metric is not positive-definite ({0:?})")]
    MetricNotPositiveDefinite(Definiteness),
    #[error("metric is not ad-invariant: triple ({}, {}, {}) has defect {}", .0.i, .0.j, .0.k, .0.defect)]
    MetricNotAdInvariant(InvarianceWitness),
    #[error("h (dim {h}) and m (dim {m}) are not complementary in dimension {ambient}")]
    NotComplementary { h: usize, m: usize, ambient: usize },
    #[error("decomposition is not reductive: [{x}, {y}] = {bracket} leaves m")]
    NotReductive { x: Vector, y: Vector, bracket: Vector },
    #[error("expected {expected} scale factors (one per simple ideal), found {found}")]
    ScaleCount { expected: usize, found: usize },
    #[error("scale factor {0} is not positive")]
    NonPositiveScale(usize),
    #[error("Gram matrix must be {expected}x{expected}, found {rows}x{cols}")]
    GramShape { expected: usize, rows: usize, cols: usize },
    #[error("center Gram matrix is not positive-definite")]
    CenterGramNotPositiveDefinite,
}
