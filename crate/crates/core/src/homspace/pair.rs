use serde::Serialize;

use crate::liealg::{
    ad_invariance_check, largest_ideal_in, orthogonal_complement, BilinearForm, LieAlgebra, Matrix,
    Scalar, SubspaceBasis, Vector,
};

use super::HomError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PairFlags {
    pub reductive: bool,
    pub normal: bool,
    pub naturally_reductive: bool,
    pub effective: bool,
}

/// A decomposition `g = h ⊕ m` with a metric and both projections.
#[derive(Debug, Clone)]
pub struct ReductivePair {
    algebra: LieAlgebra,
    h: SubspaceBasis,
    m: SubspaceBasis,
    metric: BilinearForm,
    flags: PairFlags,
    proj_h: Matrix,
    proj_m: Matrix,
}

impl ReductivePair {
    /// Validates `h` as a subalgebra complementary to `m` and computes every
    /// flag. The metric must be positive-definite; it need not be
    /// ad-invariant (such pairs are simply not normal).
    pub fn new(
        algebra: LieAlgebra,
        h: SubspaceBasis,
        m: SubspaceBasis,
        metric: BilinearForm,
    ) -> Result<Self, HomError> {
        let n = algebra.dim();
        algebra.ensure_subalgebra(&h)?;
        if m.ambient_dim() != n || metric.dim() != n {
            return Err(HomError::Lie(crate::liealg::LieError::DimensionMismatch {
                expected: n,
                found: if m.ambient_dim() != n { m.ambient_dim() } else { metric.dim() },
            }));
        }
        if h.dim() + m.dim() != n || !h.intersection(&m).is_zero() {
            return Err(HomError::NotComplementary {
                h: h.dim(),
                m: m.dim(),
                ambient: n,
            });
        }
        if !metric.is_positive_definite() {
            return Err(HomError::MetricNotPositiveDefinite(metric.definiteness()));
        }

        let mut rows = h.basis();
        rows.extend(m.basis());
        let q = Matrix::from_rows(&rows, n)
            .transpose()
            .inverse()
            .expect("h and m are complementary");
        let mut keep_h = vec![crate::liealg::scalar::zero(); n];
        for x in keep_h.iter_mut().take(h.dim()) {
            *x = crate::liealg::scalar::one();
        }
        let basis_t = Matrix::from_rows(&rows, n).transpose();
        let proj_h = basis_t.mul(&Matrix::diagonal(&keep_h)).mul(&q);
        let proj_m = Matrix::identity(n).sub(&proj_h);

        let mut pair = ReductivePair {
            algebra,
            h,
            m,
            metric,
            flags: PairFlags {
                reductive: false,
                normal: false,
                naturally_reductive: false,
                effective: false,
            },
            proj_h,
            proj_m,
        };
        pair.flags = pair.compute_flags()?;
        Ok(pair)
    }

    fn compute_flags(&self) -> Result<PairFlags, HomError> {
        let reductive = self.first_non_invariant_bracket().is_none();
        let ad_invariant = ad_invariance_check(&self.algebra, &self.metric).holds();
        let normal = ad_invariant
            && reductive
            && orthogonal_complement(&self.h, &self.metric)? == self.m;
        let naturally_reductive = reductive && super::checks::natural_reductivity(self).holds();
        let effective = largest_ideal_in(&self.algebra, &self.h)?.is_zero();
        Ok(PairFlags {
            reductive,
            normal,
            naturally_reductive,
            effective,
        })
    }

    /// First basis pair `(x ∈ h, y ∈ m)` with `[x, y] ∉ m`.
    pub fn first_non_invariant_bracket(&self) -> Option<(Vector, Vector, Vector)> {
        for x in self.h.basis() {
            for y in self.m.basis() {
                let z = self.algebra.bracket(&x, &y);
                if !self.m.contains(&z) {
                    return Some((x, y, z));
                }
            }
        }
        None
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn h(&self) -> &SubspaceBasis {
        &self.h
    }

    pub fn m(&self) -> &SubspaceBasis {
        &self.m
    }

    pub fn metric(&self) -> &BilinearForm {
        &self.metric
    }

    pub fn flags(&self) -> PairFlags {
        self.flags
    }

    pub fn proj_h(&self) -> &Matrix {
        &self.proj_h
    }

    pub fn proj_m(&self) -> &Matrix {
        &self.proj_m
    }

    pub fn project_h(&self, x: &Vector) -> Vector {
        self.proj_h.mul_vec(x)
    }

    pub fn project_m(&self, x: &Vector) -> Vector {
        self.proj_m.mul_vec(x)
    }

    pub fn bracket(&self, x: &Vector, y: &Vector) -> Vector {
        self.algebra.bracket(x, y)
    }

    /// `[x, y]_m`
    pub fn bracket_m(&self, x: &Vector, y: &Vector) -> Vector {
        self.project_m(&self.algebra.bracket(x, y))
    }

    /// `[x, y]_h`
    pub fn bracket_h(&self, x: &Vector, y: &Vector) -> Vector {
        self.project_h(&self.algebra.bracket(x, y))
    }

    pub fn inner(&self, x: &Vector, y: &Vector) -> Scalar {
        self.metric.eval(x, y)
    }

    pub(crate) fn require_reductive(&self) -> Result<(), HomError> {
        if self.flags.reductive {
            Ok(())
        } else {
            let (x, y, bracket) = self
                .first_non_invariant_bracket()
                .expect("non-reductive pair has a witness");
            Err(HomError::NotReductive { x, y, bracket })
        }
    }
}

/// `m = h^⊥` for the metric built from `spec`; every flag is verified.
pub fn normal_decomposition(
    algebra: &LieAlgebra,
    h: &SubspaceBasis,
    spec: &super::MetricSpec,
) -> Result<ReductivePair, HomError> {
    algebra.ensure_subalgebra(h)?;
    let metric = super::build_metric(algebra, spec)?;
    let m = orthogonal_complement(h, &metric)?;
    ReductivePair::new(algebra.clone(), h.clone(), m, metric)
}
