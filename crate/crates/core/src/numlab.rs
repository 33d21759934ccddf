//! Floating-point sanity checks on matrix realizations of catalog entries.
//!
//! Exact data flows in here and is converted to `f64`; nothing computed
//! here is fed back into the symbolic engine.

use nalgebra::DMatrix;
use thiserror::Error;

use crate::catalog::{CatalogEntry, MatrixBasis};
use crate::homspace::{isotropy_fixed_subspace, HomError};
use crate::liealg::{scalar, Matrix, Vector};

pub type FloatMatrix = DMatrix<f64>;

pub const DEFAULT_TOLERANCE: f64 = 1e-9;
pub const MAX_STEP: f64 = 2.0;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum NumError {
    #[error("matrix has non-finite entries")]
    NonFinite,
    #[error("matrix is not square ({0}x{1})")]
    NotSquare(usize, usize),
    #[error("X = {0} is not in the isotropy fixed subspace")]
    NotInFixedSubspace(Vector),
    #[error("Y = {0} is not in m")]
    NotInM(Vector),
    #[error("step {0} exceeds {MAX_STEP} in absolute value")]
    StepOutOfRange(f64),
    #[error("realization is not a homomorphism at basis pair ({0}, {1})")]
    NotAHomomorphism(usize, usize),
    #[error(transparent)]
    Hom(#[from] HomError),
}

/// `exp(A)` by Padé approximation with scaling and squaring. The zero matrix
/// maps to the identity exactly.
pub fn matrix_exp(a: &DMatrix<f64>) -> Result<DMatrix<f64>, NumError> {
    if !a.is_square() {
        return Err(NumError::NotSquare(a.nrows(), a.ncols()));
    }
    if a.iter().any(|x| !x.is_finite()) {
        return Err(NumError::NonFinite);
    }
    if a.iter().all(|x| *x == 0.0) {
        return Ok(DMatrix::identity(a.nrows(), a.ncols()));
    }
    let e = a.exp();
    if e.iter().any(|x| !x.is_finite()) {
        return Err(NumError::NonFinite);
    }
    Ok(e)
}

/// Maximum absolute row sum.
pub fn inf_norm(a: &DMatrix<f64>) -> f64 {
    a.row_iter()
        .map(|r| r.iter().map(|x| x.abs()).sum::<f64>())
        .fold(0.0, f64::max)
}

/// `‖RᵀR - I‖∞`
pub fn orthogonality_residual(r: &DMatrix<f64>) -> f64 {
    let n = r.nrows();
    inf_norm(&(r.transpose() * r - DMatrix::identity(n, n)))
}

pub fn to_f64(m: &Matrix) -> DMatrix<f64> {
    DMatrix::from_fn(m.nrows(), m.ncols(), |i, j| scalar::to_f64(&m[(i, j)]))
}

#[derive(Debug, Clone)]
pub struct MatrixRealization {
    basis: MatrixBasis,
    pub tolerance: f64,
}

impl MatrixRealization {
    /// Checks `[M_i, M_j] = Σ c_ij^k M_k` exactly before any float appears.
    pub fn new(entry: &CatalogEntry) -> Result<Self, NumError> {
        let basis = entry.realization.clone();
        let alg = &entry.algebra;
        for i in 0..alg.dim() {
            for j in i + 1..alg.dim() {
                let (a, b) = (&basis.mats[i], &basis.mats[j]);
                if a.mul(b).sub(&b.mul(a)) != basis.realize(&alg.basis_bracket(i, j)) {
                    return Err(NumError::NotAHomomorphism(i, j));
                }
            }
        }
        Ok(MatrixRealization {
            basis,
            tolerance: DEFAULT_TOLERANCE,
        })
    }

    pub fn size(&self) -> usize {
        self.basis.size
    }

    pub fn exact(&self, x: &Vector) -> Matrix {
        self.basis.realize(x)
    }

    pub fn to_matrix(&self, x: &Vector) -> DMatrix<f64> {
        to_f64(&self.basis.realize(x))
    }

    pub fn exp(&self, x: &Vector, t: f64) -> Result<DMatrix<f64>, NumError> {
        matrix_exp(&(self.to_matrix(x) * t))
    }
}

fn check_step(v: f64) -> Result<(), NumError> {
    if !v.is_finite() {
        return Err(NumError::NonFinite);
    }
    if v.abs() > MAX_STEP {
        return Err(NumError::StepOutOfRange(v));
    }
    Ok(())
}

/// Commutation of an invariant-field flow with the left action.
///
/// The flow of the invariant field generated by `X ∈ m^h` is modeled on
/// coset representatives as `g ↦ g·Exp(tX)`. Applied to the point
/// `Exp(sY)·p` through the representatives `Exp(sY)·Exp(ρ)`, `ρ` running over
/// a basis of `h`, it must land in the same coset as `Exp(sY)·Exp(tX)`, so
/// the residual is `max_ρ ‖Exp(sY)Exp(ρ)Exp(tX) - Exp(sY)Exp(tX)Exp(ρ)‖∞`.
/// With `h = 0` the representative is unique and the residual is 0.
pub fn flow_commutation_check(
    entry: &CatalogEntry,
    x: &Vector,
    y: &Vector,
    t: f64,
    s: f64,
) -> Result<f64, NumError> {
    check_step(t)?;
    check_step(s)?;
    let pair = entry.pair()?;
    if !isotropy_fixed_subspace(&pair)?.contains(x) {
        return Err(NumError::NotInFixedSubspace(x.clone()));
    }
    if !pair.m().contains(y) {
        return Err(NumError::NotInM(y.clone()));
    }
    let real = MatrixRealization::new(entry)?;
    let g = real.exp(y, s)?;
    let flow = real.exp(x, t)?;
    let g_flow = &g * &flow;
    let mut residual: f64 = 0.0;
    for rho in pair.h().basis() {
        let k = real.exp(&rho, 1.0)?;
        let lhs = &g * &k * &flow;
        let rhs = &g_flow * &k;
        residual = residual.max(inf_norm(&(lhs - rhs)));
    }
    Ok(residual)
}

/// Residual of [`flow_commutation_check`] over every pair of basis vectors
/// `X ∈ m^h`, `Y ∈ m` at the given steps; 0 for a zero fixed subspace.
pub fn flow_commutation_sweep(entry: &CatalogEntry, t: f64, s: f64) -> Result<f64, NumError> {
    let pair = entry.pair()?;
    let fixed = isotropy_fixed_subspace(&pair)?;
    let mut worst: f64 = 0.0;
    for x in fixed.basis() {
        for y in pair.m().basis() {
            worst = worst.max(flow_commutation_check(entry, &x, &y, t, s)?);
        }
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::construct;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use std::f64::consts::PI;

    #[test]
    fn zero_maps_to_identity_exactly() {
        let e = matrix_exp(&DMatrix::zeros(4, 4)).unwrap();
        assert_eq!(e, DMatrix::identity(4, 4));
    }

    #[test]
    fn pi_rotation() {
        let a = DMatrix::from_row_slice(2, 2, &[0.0, PI, -PI, 0.0]);
        let r = matrix_exp(&a).unwrap();
        let expected = DMatrix::from_row_slice(2, 2, &[-1.0, 0.0, 0.0, -1.0]);
        assert!(inf_norm(&(r - expected)) < 1e-12);
    }

    #[test]
    fn closed_form_rotation() {
        for theta in [0.1, 1.0, 2.5, -3.0] {
            let a = DMatrix::from_row_slice(2, 2, &[0.0, theta, -theta, 0.0]);
            let r = matrix_exp(&a).unwrap();
            let (c, s) = (f64::cos(theta), f64::sin(theta));
            let expected = DMatrix::from_row_slice(2, 2, &[c, s, -s, c]);
            assert!(inf_norm(&(r - expected)) < 1e-13);
        }
    }

    #[test]
    fn random_skew_is_orthogonal() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let n = rng.random_range(3..=6);
            let mut a = DMatrix::zeros(n, n);
            for i in 0..n {
                for j in i + 1..n {
                    let v: f64 = rng.random_range(-3.0..3.0);
                    a[(i, j)] = v;
                    a[(j, i)] = -v;
                }
            }
            assert!(orthogonality_residual(&matrix_exp(&a).unwrap()) < 1e-9);
        }
    }

    #[test]
    fn non_finite_and_non_square_rejected() {
        let a = DMatrix::from_row_slice(2, 2, &[0.0, f64::NAN, 0.0, 0.0]);
        assert_eq!(matrix_exp(&a), Err(NumError::NonFinite));
        assert_eq!(matrix_exp(&DMatrix::zeros(2, 3)), Err(NumError::NotSquare(2, 3)));
    }

    #[test]
    fn so4_mod_so2_flow() {
        let entry = construct("so4_mod_so2").unwrap();
        // E34 is index 5, E13 index 1
        let x = Vector::basis(6, 5);
        let y = Vector::basis(6, 1);
        assert!(flow_commutation_check(&entry, &x, &y, 1.0, 1.0).unwrap() < 1e-9);
        assert_eq!(flow_commutation_check(&entry, &Vector::zeros(6), &y, 1.0, 1.0).unwrap(), 0.0);
        assert_eq!(flow_commutation_check(&entry, &x, &y, 0.0, 1.0).unwrap(), 0.0);
    }

    #[test]
    fn flow_preconditions() {
        let entry = construct("so4_mod_so2").unwrap();
        let y = Vector::basis(6, 1);
        assert!(matches!(
            flow_commutation_check(&entry, &y, &y, 1.0, 1.0),
            Err(NumError::NotInFixedSubspace(_))
        ));
        assert!(matches!(
            flow_commutation_check(&entry, &Vector::basis(6, 5), &Vector::basis(6, 0), 1.0, 1.0),
            Err(NumError::NotInM(_))
        ));
        assert_eq!(
            flow_commutation_check(&entry, &Vector::basis(6, 5), &y, 2.5, 1.0),
            Err(NumError::StepOutOfRange(2.5))
        );
    }

    #[test]
    fn moving_x_off_the_fixed_subspace_breaks_commutation() {
        // E13 does not commute with E12, so the raw residual is large
        let entry = construct("so4_mod_so2").unwrap();
        let real = MatrixRealization::new(&entry).unwrap();
        let g = real.exp(&Vector::basis(6, 3), 1.0).unwrap();
        let flow = real.exp(&Vector::basis(6, 1), 1.0).unwrap();
        let k = real.exp(&Vector::basis(6, 0), 1.0).unwrap();
        assert!(inf_norm(&(&g * &k * &flow - &g * &flow * &k)) > 1e-3);
    }
}
