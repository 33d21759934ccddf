use num_traits::Zero;
use serde::Serialize;

use crate::liealg::{commutant, poly, scalar_multiple_of_identity, Matrix, SubspaceBasis, Vector};

use super::{isotropy_fixed_subspace, HomError, ReductivePair};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProbeVerdict {
    Irreducible,
    /// A proper nonzero `ad(h)`-invariant subspace of `m`.
    Reducible(SubspaceBasis),
    Inconclusive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ProbeKind {
    Irreducible,
    Reducible,
    Inconclusive,
}

impl ProbeVerdict {
    pub fn kind(&self) -> ProbeKind {
        match self {
            ProbeVerdict::Irreducible => ProbeKind::Irreducible,
            ProbeVerdict::Reducible(_) => ProbeKind::Reducible,
            ProbeVerdict::Inconclusive => ProbeKind::Inconclusive,
        }
    }
}

/// Matrices of `ad(y)|_m` in the echelon coordinates of `m`, one per basis
/// vector `y` of `h`.
fn isotropy_matrices(pair: &ReductivePair) -> Vec<Matrix> {
    let m = pair.m();
    let k = m.dim();
    pair.h()
        .basis()
        .iter()
        .map(|y| {
            let mut a = Matrix::zeros(k, k);
            for c in 0..k {
                let image = pair.bracket(y, &m.basis_vector(c));
                let coords = m.coordinates_of(&image).expect("pair is reductive");
                a.set_column(c, &Vector::new(coords));
            }
            a
        })
        .collect()
}

/// Looks for a proper invariant subspace of the isotropy representation.
///
/// Irreducibility is only certified when the isotropy acts by
/// skew-adjoint maps (so the module is completely reducible) and the
/// commutant is either the scalars or a two-dimensional field with
/// negative discriminant (complex type). A commutant that is nontrivial but
/// offers no rational eigenvalue split is reported inconclusive.
pub fn isotropy_irreducibility_probe(pair: &ReductivePair) -> Result<ProbeVerdict, HomError> {
    pair.require_reductive()?;
    let m = pair.m();
    let k = m.dim();
    if k == 0 {
        return Ok(ProbeVerdict::Inconclusive);
    }
    if k == 1 {
        return Ok(ProbeVerdict::Irreducible);
    }
    let fixed = isotropy_fixed_subspace(pair)?;
    if !fixed.is_zero() && fixed.dim() < k {
        return Ok(ProbeVerdict::Reducible(fixed));
    }

    let mats = isotropy_matrices(pair);
    let gram = pair.metric().restrict(m).gram().clone();
    let skew = mats
        .iter()
        .all(|a| a.transpose().mul(&gram).add(&gram.mul(a)).is_zero());
    let comm = commutant(&mats, k);

    let candidates = comm
        .iter()
        .cloned()
        .chain(comm.windows(2).map(|p| p[0].add(&p[1])));
    for t in candidates {
        if scalar_multiple_of_identity(&t).is_some() {
            continue;
        }
        let Some(roots) = poly::rational_roots(&poly::char_poly(&t)) else {
            continue;
        };
        for lambda in roots {
            let ker = t.sub(&Matrix::identity(k).scale(&lambda)).kernel();
            if !ker.is_empty() && ker.len() < k {
                let vecs: Vec<Vector> = ker.iter().map(|c| m.combine(c.coords())).collect();
                return Ok(ProbeVerdict::Reducible(SubspaceBasis::span(m.ambient_dim(), &vecs)));
            }
        }
    }

    if skew && comm.len() == 1 {
        return Ok(ProbeVerdict::Irreducible);
    }
    if skew && comm.len() == 2 && is_complex_type(&comm) {
        return Ok(ProbeVerdict::Irreducible);
    }
    Ok(ProbeVerdict::Inconclusive)
}

/// For a two-dimensional commutant `span(I, T)`: `T² = αT + βI` with
/// `α² + 4β < 0` means the commutant is a copy of C.
fn is_complex_type(comm: &[Matrix]) -> bool {
    let Some(t) = comm.iter().find(|t| scalar_multiple_of_identity(t).is_none()) else {
        return false;
    };
    let n = t.nrows();
    let t2 = t.mul(t);
    // solve t2 = α t + β I entrywise
    let mut system = Matrix::zeros(n * n, 2);
    let mut rhs = Vector::zeros(n * n);
    for i in 0..n {
        for j in 0..n {
            let row = i * n + j;
            system[(row, 0)] = t[(i, j)].clone();
            if i == j {
                system[(row, 1)] = crate::liealg::scalar::one();
            }
            rhs[row] = t2[(i, j)].clone();
        }
    }
    match system.solve(&rhs) {
        Some(sol) => {
            let disc = &sol[0] * &sol[0] + crate::liealg::scalar::int(4) * &sol[1];
            disc < crate::liealg::Scalar::zero()
        }
        None => false,
    }
}
