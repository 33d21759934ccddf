//! Canonical-connection and Levi-Civita data at the basepoint.
//!
//! Sign conventions, for `X, Y, Z` in `m`:
//!
//! * `∇ᶜ_X Y = -[X, Y]_m`, and `∇_X Y = -½ [X, Y]_m` on naturally reductive pairs
//! * torsion `Tᶜ(X, Y) = -[X, Y]_m`
//! * curvature `Rᶜ(X, Y) Z = -[[X, Y]_h, Z]`
//!
//! Every table is indexed over the echelon basis of `m` and holds ambient
//! coordinates.

use thiserror::Error;

use crate::homspace::{HomError, ReductivePair};
use crate::liealg::{scalar, Vector, Verdict};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConnectionError {
    #[error(transparent)]
    Hom(#[from] HomError),
    #[error("Levi-Civita formula requires a naturally reductive pair")]
    NotNaturallyReductive,
    #[error("vector {0} does not lie in m")]
    NotInM(Vector),
}

pub type Table2 = Vec<Vec<Vector>>;
pub type Table3 = Vec<Vec<Vec<Vector>>>;

#[derive(Debug, Clone)]
pub struct ConnectionTensors {
    basis: Vec<Vector>,
    lc: Option<Table2>,
    canonical: Table2,
    torsion: Table2,
    curvature: Table3,
}

impl ConnectionTensors {
    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn lc_table(&self) -> Result<&Table2, ConnectionError> {
        self.lc.as_ref().ok_or(ConnectionError::NotNaturallyReductive)
    }

    pub fn canonical_table(&self) -> &Table2 {
        &self.canonical
    }

    pub fn torsion_table(&self) -> &Table2 {
        &self.torsion
    }

    pub fn curvature_table(&self) -> &Table3 {
        &self.curvature
    }

    pub fn torsion_is_antisymmetric(&self) -> bool {
        antisymmetric(&self.torsion)
    }

    pub fn curvature_is_antisymmetric(&self) -> bool {
        let k = self.basis.len();
        (0..k).all(|a| {
            (0..k).all(|b| (0..k).all(|c| (&self.curvature[a][b][c] + &self.curvature[b][a][c]).is_zero()))
        })
    }

    /// `canonical = 2 · lc` entrywise; `None` without an lc table.
    pub fn canonical_is_twice_lc(&self) -> Option<bool> {
        let lc = self.lc.as_ref()?;
        let two = scalar::int(2);
        Some(
            self.canonical
                .iter()
                .zip(lc)
                .all(|(cr, lr)| cr.iter().zip(lr).all(|(c, l)| *c == l.scale(&two))),
        )
    }

    /// Whether the diagonal entries of the connection tables vanish.
    pub fn diagonal_vanishes(&self) -> bool {
        let k = self.basis.len();
        (0..k).all(|a| {
            self.canonical[a][a].is_zero()
                && self.lc.as_ref().is_none_or(|lc| lc[a][a].is_zero())
        })
    }

    /// First Bianchi identity with torsion:
    /// `Σ_cyc Rᶜ(X,Y)Z = Σ_cyc Tᶜ(Tᶜ(X,Y), Z)`, checked on all basis
    /// triples. The witness carries the triple and the difference.
    pub fn bianchi_check(&self, pair: &ReductivePair) -> Verdict<((usize, usize, usize), Vector)> {
        let k = self.basis.len();
        for a in 0..k {
            for b in 0..k {
                for c in 0..k {
                    let r = &(&self.curvature[a][b][c] + &self.curvature[b][c][a])
                        + &self.curvature[c][a][b];
                    let tt = |i: usize, j: usize, l: usize| {
                        torsion(pair, &self.torsion[i][j], &self.basis[l])
                    };
                    let t = &(&tt(a, b, c) + &tt(b, c, a)) + &tt(c, a, b);
                    let diff = &r - &t;
                    if !diff.is_zero() {
                        return Verdict::Violated(((a, b, c), diff));
                    }
                }
            }
        }
        Verdict::Holds
    }
}

fn antisymmetric(table: &Table2) -> bool {
    let k = table.len();
    (0..k).all(|a| (0..k).all(|b| (&table[a][b] + &table[b][a]).is_zero()))
}

fn torsion(pair: &ReductivePair, x: &Vector, y: &Vector) -> Vector {
    -&pair.bracket_m(x, y)
}

fn curvature(pair: &ReductivePair, x: &Vector, y: &Vector, z: &Vector) -> Vector {
    -&pair.bracket(&pair.bracket_h(x, y), z)
}

/// Builds every table. The Levi-Civita table is only present for
/// naturally reductive pairs; see [`ConnectionTensors::lc_table`].
pub fn connection_tensors_at_basepoint(pair: &ReductivePair) -> Result<ConnectionTensors, ConnectionError> {
    pair_reductive(pair)?;
    let basis = pair.m().basis();
    let k = basis.len();
    let half = scalar::frac(1, 2);
    let mut canonical = vec![vec![Vector::zeros(0); k]; k];
    let mut torsion_t = canonical.clone();
    let mut curvature_t = vec![vec![vec![Vector::zeros(0); k]; k]; k];
    for a in 0..k {
        for b in 0..k {
            let bm = pair.bracket_m(&basis[a], &basis[b]);
            canonical[a][b] = -&bm;
            torsion_t[a][b] = torsion(pair, &basis[a], &basis[b]);
            for c in 0..k {
                curvature_t[a][b][c] = curvature(pair, &basis[a], &basis[b], &basis[c]);
            }
        }
    }
    let lc = pair.flags().naturally_reductive.then(|| {
        canonical
            .iter()
            .map(|row| row.iter().map(|v| v.scale(&half)).collect())
            .collect()
    });
    Ok(ConnectionTensors {
        basis,
        lc,
        canonical,
        torsion: torsion_t,
        curvature: curvature_t,
    })
}

fn pair_reductive(pair: &ReductivePair) -> Result<(), ConnectionError> {
    if pair.flags().reductive {
        return Ok(());
    }
    let (x, y, bracket) = pair
        .first_non_invariant_bracket()
        .expect("non-reductive pair has a witness");
    Err(HomError::NotReductive { x, y, bracket }.into())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Curve {
    /// `t ↦ p`
    Constant,
    /// `t ↦ Exp(tX) · p`
    OneParameterOrbit,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Transport {
    Identity,
    /// Parallel transport along the curve is the differential of `Exp(tX)`.
    DifferentialOfExp,
}

/// Symbolic description of the ∇ᶜ-geodesic through the basepoint with
/// initial velocity `generator`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeodesicDescriptor {
    pub generator: Vector,
    pub curve: Curve,
    pub transport: Transport,
}

pub fn geodesic_and_transport_descriptors(
    pair: &ReductivePair,
    x: &Vector,
) -> Result<GeodesicDescriptor, ConnectionError> {
    if x.dim() != pair.algebra().dim() || pair.project_m(x) != *x {
        return Err(ConnectionError::NotInM(x.clone()));
    }
    let (curve, transport) = if x.is_zero() {
        (Curve::Constant, Transport::Identity)
    } else {
        (Curve::OneParameterOrbit, Transport::DifferentialOfExp)
    };
    Ok(GeodesicDescriptor {
        generator: x.clone(),
        curve,
        transport,
    })
}
