use num_traits::Zero;
use serde::Serialize;

use super::algebra::LieAlgebra;
use super::error::LieError;
use super::matrix::Matrix;
use super::scalar::{self, Scalar};
use super::subspace::SubspaceBasis;
use super::vector::Vector;
use super::Verdict;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Definiteness {
    PositiveDefinite,
    NegativeDefinite,
    Indefinite,
    Degenerate,
}

/// Signature counts of a symmetric form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Inertia {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

/// Symmetric bilinear form given by its Gram matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BilinearForm {
    gram: Matrix,
    inertia: Inertia,
    definiteness: Definiteness,
}

impl BilinearForm {
    pub fn new(gram: Matrix) -> Result<Self, LieError> {
        if !gram.is_symmetric() {
            return Err(LieError::NotSymmetric);
        }
        let inertia = inertia(&gram);
        let definiteness = if inertia.zero > 0 {
            Definiteness::Degenerate
        } else if inertia.negative == 0 {
            Definiteness::PositiveDefinite
        } else if inertia.positive == 0 {
            Definiteness::NegativeDefinite
        } else {
            Definiteness::Indefinite
        };
        Ok(BilinearForm {
            gram,
            inertia,
            definiteness,
        })
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn dim(&self) -> usize {
        self.gram.nrows()
    }

    pub fn definiteness(&self) -> Definiteness {
        self.definiteness
    }

    pub fn inertia(&self) -> Inertia {
        self.inertia
    }

    pub fn is_positive_definite(&self) -> bool {
        self.definiteness == Definiteness::PositiveDefinite
    }

    pub fn is_degenerate(&self) -> bool {
        self.definiteness == Definiteness::Degenerate
    }

    pub fn eval(&self, x: &Vector, y: &Vector) -> Scalar {
        x.dot(&self.gram.mul_vec(y))
    }

    pub fn negated(&self) -> BilinearForm {
        BilinearForm::new(self.gram.scale(&scalar::int(-1))).expect("negation keeps symmetry")
    }

    /// Gram matrix of the form restricted to `sub`, in its echelon basis.
    pub fn restrict(&self, sub: &SubspaceBasis) -> BilinearForm {
        let b = sub.rows();
        let g = b.mul(&self.gram).mul(&b.transpose());
        BilinearForm::new(g).expect("restriction keeps symmetry")
    }

    /// Kernel of the Gram matrix.
    pub fn radical(&self) -> SubspaceBasis {
        SubspaceBasis::span(self.dim(), &self.gram.kernel())
    }
}

/// Inertia by symmetric Gaussian elimination (rational congruence
/// diagonalization).
pub fn inertia(gram: &Matrix) -> Inertia {
    let n = gram.nrows();
    let mut a = gram.clone();
    let mut result = Inertia {
        positive: 0,
        negative: 0,
        zero: 0,
    };
    let mut k = 0;
    while k < n {
        let pivot = (k..n).find(|&i| !a[(i, i)].is_zero());
        let pivot = match pivot {
            Some(p) => p,
            None => {
                // all remaining diagonal entries vanish; use an off-diagonal pair
                let pair = (k..n)
                    .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                    .find(|&(i, j)| !a[(i, j)].is_zero());
                match pair {
                    None => {
                        result.zero += n - k;
                        break;
                    }
                    Some((i, j)) => {
                        // row/col i += row/col j makes a[i][i] = 2 a[i][j] != 0
                        add_congruent(&mut a, i, j);
                        i
                    }
                }
            }
        };
        swap_congruent(&mut a, k, pivot);
        let d = a[(k, k)].clone();
        match scalar::sign(&d) {
            1 => result.positive += 1,
            _ => result.negative += 1,
        }
        for i in k + 1..n {
            if a[(i, k)].is_zero() {
                continue;
            }
            let f = &a[(i, k)] / &d;
            for j in k..n {
                let v = &f * &a[(k, j)];
                a[(i, j)] -= v;
            }
            for j in k..n {
                let v = &f * &a[(j, k)];
                a[(j, i)] -= v;
            }
        }
        k += 1;
    }
    result
}

fn swap_congruent(a: &mut Matrix, p: usize, q: usize) {
    if p == q {
        return;
    }
    let n = a.nrows();
    for j in 0..n {
        let t = a[(p, j)].clone();
        a[(p, j)] = a[(q, j)].clone();
        a[(q, j)] = t;
    }
    for i in 0..n {
        let t = a[(i, p)].clone();
        a[(i, p)] = a[(i, q)].clone();
        a[(i, q)] = t;
    }
}

fn add_congruent(a: &mut Matrix, target: usize, source: usize) {
    let n = a.nrows();
    for j in 0..n {
        let v = a[(source, j)].clone();
        a[(target, j)] += v;
    }
    for i in 0..n {
        let v = a[(i, source)].clone();
        a[(i, target)] += v;
    }
}

/// `B(x, y) = tr(ad x ∘ ad y)`.
pub fn killing_form(algebra: &LieAlgebra) -> BilinearForm {
    let n = algebra.dim();
    let ads: Vec<Matrix> = (0..n).map(|i| algebra.ad_basis(i)).collect();
    let mut gram = Matrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let mut t = Scalar::zero();
            for k in 0..n {
                for l in 0..n {
                    let a = &ads[i][(k, l)];
                    if a.is_zero() {
                        continue;
                    }
                    let b = &ads[j][(l, k)];
                    if !b.is_zero() {
                        t += a * b;
                    }
                }
            }
            gram[(j, i)] = t.clone();
            gram[(i, j)] = t;
        }
    }
    BilinearForm::new(gram).expect("Killing form is symmetric")
}

/// Failing basis triple for `<[e_i,e_j], e_k> + <e_j, [e_i,e_k]> = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvarianceWitness {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub defect: Scalar,
}

/// Exhaustive infinitesimal ad-invariance check over basis triples; the
/// witness is the lexicographically first failing triple.
pub fn ad_invariance_check(algebra: &LieAlgebra, form: &BilinearForm) -> Verdict<InvarianceWitness> {
    let n = algebra.dim();
    assert_eq!(form.dim(), n, "form dimension mismatch");
    let ads: Vec<Matrix> = (0..n).map(|i| algebra.ad_basis(i)).collect();
    let g = form.gram();
    for (i, ad) in ads.iter().enumerate() {
        // <ad(e_i) e_j, e_k> + <e_j, ad(e_i) e_k> = (ad^T G + G ad)[j][k]
        let m = ad.transpose().mul(g).add(&g.mul(ad));
        for j in 0..n {
            for k in 0..n {
                if !m[(j, k)].is_zero() {
                    return Verdict::Violated(InvarianceWitness {
                        i,
                        j,
                        k,
                        defect: m[(j, k)].clone(),
                    });
                }
            }
        }
    }
    Verdict::Holds
}

/// `{x : form(s, x) = 0 for all s in sub}`.
pub fn orthogonal_complement(
    sub: &SubspaceBasis,
    form: &BilinearForm,
) -> Result<SubspaceBasis, LieError> {
    if form.is_degenerate() {
        return Err(LieError::DegenerateForm);
    }
    Ok(orthogonal_within(sub, form))
}

/// Orthogonal space without the non-degeneracy requirement.
pub(crate) fn orthogonal_within(sub: &SubspaceBasis, form: &BilinearForm) -> SubspaceBasis {
    let constraints = sub.rows().mul(form.gram());
    SubspaceBasis::span(sub.ambient_dim(), &constraints.kernel())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::scalar::int;

    fn diag(values: &[i64]) -> BilinearForm {
        let d: Vec<Scalar> = values.iter().map(|&v| int(v)).collect();
        BilinearForm::new(Matrix::diagonal(&d)).unwrap()
    }

    #[test]
    fn definiteness_from_inertia() {
        assert_eq!(diag(&[1, 2, 3]).definiteness(), Definiteness::PositiveDefinite);
        assert_eq!(diag(&[-1, -2]).definiteness(), Definiteness::NegativeDefinite);
        assert_eq!(diag(&[1, -2]).definiteness(), Definiteness::Indefinite);
        assert_eq!(diag(&[1, 0]).definiteness(), Definiteness::Degenerate);
    }

    #[test]
    fn inertia_handles_zero_diagonal() {
        // hyperbolic plane: [[0,1],[1,0]]
        let g = Matrix::from_int_rows(&[&[0, 1], &[1, 0]]);
        let f = BilinearForm::new(g).unwrap();
        assert_eq!(
            f.inertia(),
            Inertia {
                positive: 1,
                negative: 1,
                zero: 0
            }
        );
    }

    #[test]
    fn rejects_asymmetric_gram() {
        let g = Matrix::from_int_rows(&[&[1, 2], &[0, 1]]);
        assert_eq!(BilinearForm::new(g), Err(LieError::NotSymmetric));
    }

    #[test]
    fn complement_requires_nondegenerate() {
        let sub = SubspaceBasis::coordinate(2, &[0]);
        assert_eq!(
            orthogonal_complement(&sub, &diag(&[1, 0])),
            Err(LieError::DegenerateForm)
        );
        let full = SubspaceBasis::full(2);
        assert!(orthogonal_complement(&full, &diag(&[1, 1])).unwrap().is_zero());
    }
}
