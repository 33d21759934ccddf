use num_traits::Zero;

use super::matrix::Matrix;
use super::scalar::Scalar;
use super::vector::Vector;

/// A linear subspace stored by its reduced row-echelon basis.
///
/// The echelon form is canonical, so two values compare equal exactly when
/// they span the same subspace.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SubspaceBasis {
    ambient_dim: usize,
    rows: Matrix,
    pivots: Vec<usize>,
}

impl SubspaceBasis {
    pub fn span(ambient_dim: usize, vectors: &[Vector]) -> Self {
        let m = Matrix::from_rows(vectors, ambient_dim);
        let (rows, pivots) = m.rref();
        SubspaceBasis {
            ambient_dim,
            rows,
            pivots,
        }
    }

    pub fn zero(ambient_dim: usize) -> Self {
        Self::span(ambient_dim, &[])
    }

    pub fn full(ambient_dim: usize) -> Self {
        let basis: Vec<Vector> = (0..ambient_dim).map(|i| Vector::basis(ambient_dim, i)).collect();
        Self::span(ambient_dim, &basis)
    }

    /// Span of the listed standard basis vectors.
    pub fn coordinate(ambient_dim: usize, indices: &[usize]) -> Self {
        let basis: Vec<Vector> = indices.iter().map(|&i| Vector::basis(ambient_dim, i)).collect();
        Self::span(ambient_dim, &basis)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.rows.nrows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim
    }

    pub fn rows(&self) -> &Matrix {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis(&self) -> Vec<Vector> {
        self.rows.row_vectors()
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        self.rows.row(i)
    }

    /// Coordinates of `v` in the echelon basis, or `None` if `v` lies
    /// outside the subspace. Reads the pivot entries, then checks.
    pub fn coordinates_of(&self, v: &Vector) -> Option<Vec<Scalar>> {
        let coeffs: Vec<Scalar> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let recon = self.combine(&coeffs);
        (recon == *v).then_some(coeffs)
    }

    /// `Σ coeffs[i] * basis[i]`
    pub fn combine(&self, coeffs: &[Scalar]) -> Vector {
        assert_eq!(coeffs.len(), self.dim());
        let mut out = Vector::zeros(self.ambient_dim);
        for (i, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                out.add_scaled(c, &self.rows.row(i));
            }
        }
        out
    }

    pub fn contains(&self, v: &Vector) -> bool {
        self.coordinates_of(v).is_some()
    }

    pub fn contains_subspace(&self, other: &SubspaceBasis) -> bool {
        other.basis().iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &SubspaceBasis) -> SubspaceBasis {
        let mut vecs = self.basis();
        vecs.extend(other.basis());
        SubspaceBasis::span(self.ambient_dim, &vecs)
    }

    /// Euclidean annihilator `{x : <row, x> = 0 for every basis row}`.
    pub fn annihilator(&self) -> SubspaceBasis {
        SubspaceBasis::span(self.ambient_dim, &self.rows.kernel())
    }

    pub fn intersection(&self, other: &SubspaceBasis) -> SubspaceBasis {
        self.annihilator().sum(&other.annihilator()).annihilator()
    }

    /// Matrix whose kernel is exactly this subspace.
    pub fn constraint_matrix(&self) -> Matrix {
        let ann = self.annihilator();
        ann.rows.clone()
    }

    /// Image of the subspace under a linear map given as a matrix.
    pub fn image_under(&self, map: &Matrix) -> SubspaceBasis {
        let images: Vec<Vector> = self.basis().iter().map(|v| map.mul_vec(v)).collect();
        SubspaceBasis::span(map.nrows(), &images)
    }

    pub fn to_strings(&self) -> Vec<Vec<String>> {
        self.rows.to_strings()
    }
}
