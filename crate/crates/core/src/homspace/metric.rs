use num_traits::Zero;

use crate::liealg::{
    ad_invariance_check, killing_form, simple_ideal_decomposition, BilinearForm, LieAlgebra, Matrix,
    Scalar, Verdict,
};

use super::HomError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MetricMode {
    /// `-B` on every simple ideal, a user Gram on the center.
    NegativeKilling,
    /// Full Gram matrix in the ambient basis.
    Custom(Matrix),
}

/// Recipe for the bi-invariant inner product of a normal decomposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MetricSpec {
    pub mode: MetricMode,
    /// Gram on the center in its echelon basis; identity when absent.
    pub center_gram: Option<Matrix>,
    /// One positive factor per simple ideal, in decomposition order.
    pub scale_factors: Option<Vec<Scalar>>,
}

impl MetricSpec {
    pub fn negative_killing() -> Self {
        MetricSpec {
            mode: MetricMode::NegativeKilling,
            center_gram: None,
            scale_factors: None,
        }
    }

    pub fn custom(gram: Matrix) -> Self {
        MetricSpec {
            mode: MetricMode::Custom(gram),
            center_gram: None,
            scale_factors: None,
        }
    }

    pub fn with_center_gram(mut self, gram: Matrix) -> Self {
        self.center_gram = Some(gram);
        self
    }

    pub fn with_scale_factors(mut self, scales: Vec<Scalar>) -> Self {
        self.scale_factors = Some(scales);
        self
    }
}

impl Default for MetricSpec {
    fn default() -> Self {
        Self::negative_killing()
    }
}

/// Assembles the Gram matrix described by `spec` and verifies it is
/// positive-definite and ad-invariant.
pub fn build_metric(algebra: &LieAlgebra, spec: &MetricSpec) -> Result<BilinearForm, HomError> {
    let n = algebra.dim();
    let form = match &spec.mode {
        MetricMode::Custom(gram) => {
            if gram.nrows() != n || gram.ncols() != n {
                return Err(HomError::GramShape {
                    expected: n,
                    rows: gram.nrows(),
                    cols: gram.ncols(),
                });
            }
            BilinearForm::new(gram.clone())?
        }
        MetricMode::NegativeKilling => negative_killing_metric(algebra, spec)?,
    };
    if !form.is_positive_definite() {
        return Err(HomError::MetricNotPositiveDefinite(form.definiteness()));
    }
    if let Verdict::Violated(w) = ad_invariance_check(algebra, &form) {
        return Err(HomError::MetricNotAdInvariant(w));
    }
    Ok(form)
}

fn negative_killing_metric(algebra: &LieAlgebra, spec: &MetricSpec) -> Result<BilinearForm, HomError> {
    let n = algebra.dim();
    let decomposition = simple_ideal_decomposition(algebra)?;
    let ideals = &decomposition.simple_ideals;
    let scales = match &spec.scale_factors {
        Some(s) => {
            if s.len() != ideals.len() {
                return Err(HomError::ScaleCount {
                    expected: ideals.len(),
                    found: s.len(),
                });
            }
            if let Some(bad) = s.iter().position(|x| *x <= Scalar::zero()) {
                return Err(HomError::NonPositiveScale(bad));
            }
            s.clone()
        }
        None => vec![crate::liealg::scalar::one(); ideals.len()],
    };
    let zdim = decomposition.center.dim();
    let center_gram = match &spec.center_gram {
        Some(g) => {
            if g.nrows() != zdim || g.ncols() != zdim {
                return Err(HomError::GramShape {
                    expected: zdim,
                    rows: g.nrows(),
                    cols: g.ncols(),
                });
            }
            let f = BilinearForm::new(g.clone())?;
            if zdim > 0 && !f.is_positive_definite() {
                return Err(HomError::CenterGramNotPositiveDefinite);
            }
            g.clone()
        }
        None => Matrix::identity(zdim),
    };
    let neg_killing = killing_form(algebra).negated();

    // rows of `basis`: center basis, then each ideal's basis
    let mut rows = decomposition.center.basis();
    let mut blocks: Vec<Matrix> = vec![center_gram];
    for (ideal, scale) in ideals.iter().zip(&scales) {
        rows.extend(ideal.basis());
        blocks.push(neg_killing.restrict(ideal).gram().scale(scale));
    }
    let basis = Matrix::from_rows(&rows, n);
    let mut block_gram = Matrix::zeros(n, n);
    let mut offset = 0;
    for b in &blocks {
        for i in 0..b.nrows() {
            for j in 0..b.ncols() {
                block_gram[(offset + i, offset + j)] = b[(i, j)].clone();
            }
        }
        offset += b.nrows();
    }
    // x = basisᵀ y, so y = (basisᵀ)⁻¹ x and G = Qᵀ D Q with Q = (basisᵀ)⁻¹
    let q = basis
        .transpose()
        .inverse()
        .expect("center and simple ideals span the algebra");
    let gram = q.transpose().mul(&block_gram).mul(&q);
    Ok(BilinearForm::new(gram)?)
}
