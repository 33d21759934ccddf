//! Exact-rational linear algebra and Lie algebra calculus over structure
//! constants.

mod algebra;
mod error;
mod form;
mod matrix;
pub mod poly;
pub mod scalar;
mod structure;
mod subspace;
mod vector;

pub use algebra::{bracket, make_lie_algebra, LieAlgebra, StructureEntry};
pub use error::LieError;
pub use form::{
    ad_invariance_check, inertia, killing_form, orthogonal_complement, BilinearForm, Definiteness,
    Inertia, InvarianceWitness,
};
pub use matrix::Matrix;
pub use scalar::Scalar;
pub use structure::{
    center, centralizer, commutant, commute, derived_subalgebra, ensure_compact_type,
    ideal_generated_by, largest_ideal_in, normalizer, simple_ideal_decomposition, span_closure,
    IdealDecomposition,
};
pub(crate) use structure::scalar_multiple_of_identity;
pub use subspace::SubspaceBasis;
pub use vector::Vector;

/// Outcome of an exhaustive identity check: either it holds everywhere or
/// the first counterexample is returned.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict<W> {
    Holds,
    Violated(W),
}

impl<W> Verdict<W> {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn witness(&self) -> Option<&W> {
        match self {
            Verdict::Holds => None,
            Verdict::Violated(w) => Some(w),
        }
    }
}
