use num_traits::Zero;

use super::error::LieError;
use super::matrix::Matrix;
use super::scalar::Scalar;
use super::subspace::SubspaceBasis;
use super::vector::Vector;

/// One structure constant: `[e_i, e_j]` has coefficient `value` on `e_k`.
pub type StructureEntry = (usize, usize, usize, Scalar);

/// A finite-dimensional real Lie algebra given by rational structure
/// constants on a labeled basis.
///
/// Only the brackets `[e_i, e_j]` with `i < j` are stored; the rest follow
/// from antisymmetry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    dim: usize,
    labels: Vec<String>,
    // indexed by `pair_index(i, j)` for i < j; each a sparse list (k, c_ijk)
    structure: Vec<Vec<(usize, Scalar)>>,
}

fn pair_index(dim: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < dim);
    i * dim - i * (i + 1) / 2 + (j - i - 1)
}

impl LieAlgebra {
    /// Builds and validates an algebra from sparse structure constants.
    ///
    /// Entries with `i > j` are folded in as `(j, i, k, -value)`. Repeated
    /// entries must agree. Jacobi is checked over every basis triple.
    pub fn new(
        dim: usize,
        labels: Vec<String>,
        entries: &[StructureEntry],
    ) -> Result<Self, LieError> {
        if dim == 0 {
            return Err(LieError::EmptyAlgebra);
        }
        if labels.len() != dim {
            return Err(LieError::LabelCount {
                expected: dim,
                found: labels.len(),
            });
        }
        let npairs = dim * (dim - 1) / 2;
        let mut dense: Vec<Vec<Option<Scalar>>> = vec![vec![None; dim]; npairs];
        for (i, j, k, value) in entries {
            let (i, j, k) = (*i, *j, *k);
            for index in [i, j, k] {
                if index >= dim {
                    return Err(LieError::IndexOutOfRange { index, dim });
                }
            }
            if i == j {
                if value.is_zero() {
                    continue;
                }
                return Err(LieError::SelfBracket { i, k });
            }
            let (a, b, v) = if i < j { (i, j, value.clone()) } else { (j, i, -value.clone()) };
            let slot = &mut dense[pair_index(dim, a, b)][k];
            match slot {
                Some(existing) if *existing != v => {
                    return Err(LieError::ConflictingEntry { i: a, j: b, k });
                }
                _ => *slot = Some(v),
            }
        }
        let structure = dense
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .enumerate()
                    .filter_map(|(k, c)| c.filter(|c| !c.is_zero()).map(|c| (k, c)))
                    .collect()
            })
            .collect();
        let algebra = LieAlgebra {
            dim,
            labels,
            structure,
        };
        algebra.check_jacobi()?;
        Ok(algebra)
    }

    /// Builds an algebra from a full table `table[i][j][k]`, checking the
    /// Jacobi identity on the raw table over all `dim³` triples before
    /// antisymmetry. A table with one sign flipped is therefore reported
    /// through the Jacobi defect it causes.
    pub fn from_dense(
        labels: Vec<String>,
        table: &[Vec<Vec<Scalar>>],
    ) -> Result<Self, LieError> {
        let dim = table.len();
        for (i, row) in table.iter().enumerate() {
            if row.len() != dim || row.iter().any(|c| c.len() != dim) {
                return Err(LieError::DimensionMismatch {
                    expected: dim,
                    found: if row.len() != dim { row.len() } else { i },
                });
            }
        }
        let bracket = |x: &Vector, j: usize| -> Vector {
            // [x, e_j] from the raw table
            let mut out = Vector::zeros(dim);
            for (l, xl) in x.support() {
                for (m, c) in table[l][j].iter().enumerate() {
                    if !c.is_zero() {
                        out[m] += xl * c;
                    }
                }
            }
            out
        };
        let basis_bracket = |i: usize, j: usize| Vector::new(table[i][j].clone());
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    let mut defect = bracket(&basis_bracket(i, j), k);
                    defect = &defect + &bracket(&basis_bracket(j, k), i);
                    defect = &defect + &bracket(&basis_bracket(k, i), j);
                    if !defect.is_zero() {
                        return Err(LieError::JacobiViolation { i, j, k, defect });
                    }
                }
            }
        }
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    if table[i][j][k] != -table[j][i][k].clone() {
                        return Err(LieError::AntisymmetryViolation { i, j, k });
                    }
                }
            }
        }
        let mut entries = Vec::new();
        for i in 0..dim {
            for j in i + 1..dim {
                for k in 0..dim {
                    if !table[i][j][k].is_zero() {
                        entries.push((i, j, k, table[i][j][k].clone()));
                    }
                }
            }
        }
        Self::new(dim, labels, &entries)
    }

    /// Abelian algebra of the given dimension.
    pub fn abelian(dim: usize, labels: Vec<String>) -> Result<Self, LieError> {
        Self::new(dim, labels, &[])
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Sorted list of the stored (i < j) structure constants.
    pub fn structure_entries(&self) -> Vec<StructureEntry> {
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                for (k, c) in &self.structure[pair_index(self.dim, i, j)] {
                    out.push((i, j, *k, c.clone()));
                }
            }
        }
        out
    }

    /// Dense table `c[i][j][k]`.
    pub fn dense_table(&self) -> Vec<Vec<Vec<Scalar>>> {
        let mut t = vec![vec![vec![Scalar::zero(); self.dim]; self.dim]; self.dim];
        for (i, j, k, c) in self.structure_entries() {
            t[j][i][k] = -c.clone();
            t[i][j][k] = c;
        }
        t
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        Vector::basis(self.dim, i)
    }

    /// `[e_i, e_j]`
    pub fn basis_bracket(&self, i: usize, j: usize) -> Vector {
        let mut out = Vector::zeros(self.dim);
        if i == j {
            return out;
        }
        let (a, b, sign) = if i < j { (i, j, 1) } else { (j, i, -1) };
        for (k, c) in &self.structure[pair_index(self.dim, a, b)] {
            out[*k] = if sign > 0 { c.clone() } else { -c.clone() };
        }
        out
    }

    fn check_dim(&self, v: &Vector) -> Result<(), LieError> {
        if v.dim() != self.dim {
            return Err(LieError::DimensionMismatch {
                expected: self.dim,
                found: v.dim(),
            });
        }
        Ok(())
    }

    /// Checked bracket.
    pub fn try_bracket(&self, x: &Vector, y: &Vector) -> Result<Vector, LieError> {
        self.check_dim(x)?;
        self.check_dim(y)?;
        Ok(self.bracket(x, y))
    }

    /// `[x, y]`. Panics on a dimension mismatch; see [`Self::try_bracket`].
    pub fn bracket(&self, x: &Vector, y: &Vector) -> Vector {
        assert!(x.dim() == self.dim && y.dim() == self.dim, "dimension mismatch");
        let mut out = Vector::zeros(self.dim);
        for (i, xi) in x.support() {
            for (j, yj) in y.support() {
                if i == j {
                    continue;
                }
                let (a, b, coeff) = if i < j { (i, j, xi * yj) } else { (j, i, -(xi * yj)) };
                for (k, c) in &self.structure[pair_index(self.dim, a, b)] {
                    out[*k] += &coeff * c;
                }
            }
        }
        out
    }

    /// Matrix of `ad(x)`: column `j` holds `[x, e_j]`.
    pub fn ad(&self, x: &Vector) -> Matrix {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for j in 0..self.dim {
            let col = self.bracket(x, &self.basis_vector(j));
            m.set_column(j, &col);
        }
        m
    }

    pub fn ad_basis(&self, i: usize) -> Matrix {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for j in 0..self.dim {
            m.set_column(j, &self.basis_bracket(i, j));
        }
        m
    }

    /// Jacobi defect `[[x,y],z] + [[y,z],x] + [[z,x],y]`.
    pub fn jacobi_defect(&self, x: &Vector, y: &Vector, z: &Vector) -> Vector {
        let a = self.bracket(&self.bracket(x, y), z);
        let b = self.bracket(&self.bracket(y, z), x);
        let c = self.bracket(&self.bracket(z, x), y);
        &(&a + &b) + &c
    }

    /// First basis triple `i < j < k` (lexicographic) violating Jacobi.
    /// Triples with a repeated index satisfy Jacobi by antisymmetry.
    pub fn check_jacobi(&self) -> Result<(), LieError> {
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                for k in j + 1..self.dim {
                    let defect = self.jacobi_defect(
                        &self.basis_vector(i),
                        &self.basis_vector(j),
                        &self.basis_vector(k),
                    );
                    if !defect.is_zero() {
                        return Err(LieError::JacobiViolation { i, j, k, defect });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn is_abelian(&self) -> bool {
        self.structure.iter().all(Vec::is_empty)
    }

    /// First pair of basis vectors of `sub` whose bracket leaves `sub`.
    pub fn subalgebra_violation(&self, sub: &SubspaceBasis) -> Option<(Vector, Vector, Vector)> {
        let basis = sub.basis();
        for (a, x) in basis.iter().enumerate() {
            for y in &basis[a + 1..] {
                let z = self.bracket(x, y);
                if !sub.contains(&z) {
                    return Some((x.clone(), y.clone(), z));
                }
            }
        }
        None
    }

    pub fn is_subalgebra(&self, sub: &SubspaceBasis) -> bool {
        self.subalgebra_violation(sub).is_none()
    }

    pub fn ensure_subalgebra(&self, sub: &SubspaceBasis) -> Result<(), LieError> {
        if sub.ambient_dim() != self.dim {
            return Err(LieError::DimensionMismatch {
                expected: self.dim,
                found: sub.ambient_dim(),
            });
        }
        match self.subalgebra_violation(sub) {
            Some((x, y, bracket)) => Err(LieError::NotASubalgebra { x, y, bracket }),
            None => Ok(()),
        }
    }

    pub fn is_ideal(&self, sub: &SubspaceBasis) -> bool {
        sub.basis().iter().all(|x| {
            (0..self.dim).all(|i| sub.contains(&self.bracket(&self.basis_vector(i), x)))
        })
    }

    /// The subalgebra `sub` as an algebra in its own right, on its echelon
    /// basis. Labels are `prefix0, prefix1, ...`.
    pub fn restrict(&self, sub: &SubspaceBasis, prefix: &str) -> Result<LieAlgebra, LieError> {
        self.ensure_subalgebra(sub)?;
        let basis = sub.basis();
        let mut entries = Vec::new();
        for a in 0..basis.len() {
            for b in a + 1..basis.len() {
                let z = self.bracket(&basis[a], &basis[b]);
                let coords = sub.coordinates_of(&z).expect("closed under bracket");
                for (c, value) in coords.into_iter().enumerate() {
                    if !value.is_zero() {
                        entries.push((a, b, c, value));
                    }
                }
            }
        }
        let labels = (0..basis.len()).map(|i| format!("{prefix}{i}")).collect();
        if basis.is_empty() {
            return Err(LieError::EmptyAlgebra);
        }
        LieAlgebra::new(basis.len(), labels, &entries)
    }

    /// Direct sum with componentwise bracket; `other`'s basis follows ours.
    pub fn direct_sum(&self, other: &LieAlgebra) -> LieAlgebra {
        let shift = self.dim;
        let mut entries = self.structure_entries();
        entries.extend(
            other
                .structure_entries()
                .into_iter()
                .map(|(i, j, k, c)| (i + shift, j + shift, k + shift, c)),
        );
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().cloned());
        LieAlgebra::new(self.dim + other.dim, labels, &entries)
            .expect("direct sum of valid algebras is valid")
    }

    /// Algebra with the same basis and bracket `[x, y]' = -[x, y]`.
    pub fn opposite(&self) -> LieAlgebra {
        let entries: Vec<StructureEntry> = self
            .structure_entries()
            .into_iter()
            .map(|(i, j, k, c)| (i, j, k, -c))
            .collect();
        LieAlgebra::new(self.dim, self.labels.clone(), &entries).expect("opposite algebra is valid")
    }
}

/// Builds and validates an algebra; see [`LieAlgebra::new`].
pub fn make_lie_algebra(
    dim: usize,
    labels: Vec<String>,
    entries: &[StructureEntry],
) -> Result<LieAlgebra, LieError> {
    LieAlgebra::new(dim, labels, entries)
}

pub fn bracket(algebra: &LieAlgebra, x: &Vector, y: &Vector) -> Result<Vector, LieError> {
    algebra.try_bracket(x, y)
}
