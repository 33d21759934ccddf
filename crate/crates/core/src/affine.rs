//! Transvection algebra, the algebra of invariant fields, the affine
//! algebra `g₁ ⊕ k`, the fixed-point torus and the gated isometry report.
//!
//! The bracket on invariant fields is `[X, Y]_k := -[X, Y]_m`. The opposite
//! sign gives an anti-isomorphic, hence isomorphic, algebra; comparisons
//! across presentations only use isomorphism invariants.

use serde::Serialize;
use thiserror::Error;

use crate::homspace::{
    isotropy_fixed_subspace, isotropy_irreducibility_probe, skew_scan, HomError, ProbeKind,
    ReductivePair, TripleWitness,
};
use crate::liealg::{
    ad_invariance_check, center, centralizer, orthogonal_complement, simple_ideal_decomposition,
    BilinearForm, Inertia, LieAlgebra, LieError, SubspaceBasis, Vector, Verdict,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AffineError {
    #[error(transparent)]
    Hom(#[from] HomError),
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error("pair is not normal")]
    NotNormal,
    #[error("pair is not effective")]
    NotEffective,
    #[error("invariant fields are not closed: -[{x}, {y}]_m = {bracket}")]
    ClosureFailure { x: Vector, y: Vector, bracket: Vector },
    #[error("[m, m] + m is not a subalgebra: [{x}, {y}] = {bracket}")]
    TransvectionNotSubalgebra { x: Vector, y: Vector, bracket: Vector },
    #[error("center of the invariant-field algebra is not abelian")]
    TorusNotAbelian,
}

fn require_reductive(pair: &ReductivePair) -> Result<(), AffineError> {
    if pair.flags().reductive {
        return Ok(());
    }
    let (x, y, bracket) = pair.first_non_invariant_bracket().expect("witness exists");
    Err(HomError::NotReductive { x, y, bracket }.into())
}

fn require_normal(pair: &ReductivePair) -> Result<(), AffineError> {
    if pair.flags().normal {
        Ok(())
    } else {
        Err(AffineError::NotNormal)
    }
}

/// `span([m, m]) + m`, verified to be a subalgebra.
pub fn transvection_algebra(pair: &ReductivePair) -> Result<SubspaceBasis, AffineError> {
    require_reductive(pair)?;
    let basis = pair.m().basis();
    let mut vecs = basis.clone();
    for a in 0..basis.len() {
        for b in a + 1..basis.len() {
            vecs.push(pair.bracket(&basis[a], &basis[b]));
        }
    }
    let tr = SubspaceBasis::span(pair.algebra().dim(), &vecs);
    if let Some((x, y, bracket)) = pair.algebra().subalgebra_violation(&tr) {
        return Err(AffineError::TransvectionNotSubalgebra { x, y, bracket });
    }
    Ok(tr)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransvectionVerdict {
    pub transvection: SubspaceBasis,
    pub equals_g: bool,
    pub is_ideal: bool,
    /// Metric-orthogonal complement of the transvection algebra.
    pub complement: SubspaceBasis,
    pub complement_in_h: bool,
}

/// Whether the transvection algebra is all of `g`; otherwise exhibits its
/// orthogonal complement, which must sit inside `h`.
pub fn transvection_equals_g_check(pair: &ReductivePair) -> Result<TransvectionVerdict, AffineError> {
    require_normal(pair)?;
    let tr = transvection_algebra(pair)?;
    let complement = orthogonal_complement(&tr, pair.metric())?;
    Ok(TransvectionVerdict {
        equals_g: tr.is_full(),
        is_ideal: pair.algebra().is_ideal(&tr),
        complement_in_h: pair.h().contains_subspace(&complement),
        complement,
        transvection: tr,
    })
}

/// The Lie algebra of invariant fields, carried by `m^h` with bracket
/// `-[X, Y]_m`.
#[derive(Debug, Clone)]
pub struct InvariantFieldAlgebra {
    carrier: SubspaceBasis,
    // on the carrier's echelon basis; absent for a zero carrier
    algebra: Option<LieAlgebra>,
    center: SubspaceBasis,
    metric: Option<BilinearForm>,
    metric_invariant: bool,
}

impl InvariantFieldAlgebra {
    pub fn carrier(&self) -> &SubspaceBasis {
        &self.carrier
    }

    pub fn dim(&self) -> usize {
        self.carrier.dim()
    }

    pub fn algebra(&self) -> Option<&LieAlgebra> {
        self.algebra.as_ref()
    }

    /// Center, in ambient coordinates.
    pub fn center(&self) -> &SubspaceBasis {
        &self.center
    }

    pub fn metric_invariant(&self) -> bool {
        self.metric_invariant
    }

    /// Restricted metric positive-definite and invariant.
    pub fn compact_type(&self) -> bool {
        self.metric_invariant
            && self.metric.as_ref().is_none_or(BilinearForm::is_positive_definite)
    }

    pub fn is_semisimple(&self) -> bool {
        self.center.is_zero()
    }

    /// Structure constants in carrier coordinates, `(i, j, k, "p/q")`.
    pub fn bracket_table(&self) -> Vec<(usize, usize, usize, String)> {
        self.algebra
            .as_ref()
            .map(|a| {
                a.structure_entries()
                    .into_iter()
                    .map(|(i, j, k, c)| (i, j, k, crate::liealg::scalar::format(&c)))
                    .collect()
            })
            .unwrap_or_default()
    }
}

pub fn invariant_field_algebra(pair: &ReductivePair) -> Result<InvariantFieldAlgebra, AffineError> {
    let carrier = isotropy_fixed_subspace(pair)?;
    let n = pair.algebra().dim();
    let basis = carrier.basis();
    let mut entries = Vec::new();
    for a in 0..basis.len() {
        for b in a + 1..basis.len() {
            let z = -&pair.bracket_m(&basis[a], &basis[b]);
            let Some(coords) = carrier.coordinates_of(&z) else {
                return Err(AffineError::ClosureFailure {
                    x: basis[a].clone(),
                    y: basis[b].clone(),
                    bracket: z,
                });
            };
            for (c, value) in coords.into_iter().enumerate() {
                if value != crate::liealg::scalar::zero() {
                    entries.push((a, b, c, value));
                }
            }
        }
    }
    if basis.is_empty() {
        return Ok(InvariantFieldAlgebra {
            center: SubspaceBasis::zero(n),
            carrier,
            algebra: None,
            metric: None,
            metric_invariant: true,
        });
    }
    let labels = (0..basis.len()).map(|i| format!("k{i}")).collect();
    let algebra = LieAlgebra::new(basis.len(), labels, &entries)?;
    let metric = pair.metric().restrict(&carrier);
    let metric_invariant = ad_invariance_check(&algebra, &metric).holds();
    let center_vecs: Vec<Vector> = center(&algebra)
        .basis()
        .iter()
        .map(|c| carrier.combine(c.coords()))
        .collect();
    Ok(InvariantFieldAlgebra {
        center: SubspaceBasis::span(n, &center_vecs),
        carrier,
        algebra: Some(algebra),
        metric: Some(metric),
        metric_invariant,
    })
}

/// `<[X,Y]_m, Z> + <Y, [X,Z]_m> = 0` for `X ∈ m^h` and `Y, Z ∈ m`.
pub fn invariant_field_killing_check(pair: &ReductivePair) -> Result<Verdict<TripleWitness>, AffineError> {
    let carrier = isotropy_fixed_subspace(pair)?;
    Ok(skew_scan(pair, &carrier.basis()))
}

#[derive(Debug, Clone)]
pub struct AffineAlgebra {
    pub g1: SubspaceBasis,
    pub k: InvariantFieldAlgebra,
    pub total_dim: usize,
    /// `g₁ ⊕ k` with componentwise bracket; absent when both are zero.
    pub assembled: Option<LieAlgebra>,
    pub cross_brackets_vanish: bool,
    /// The m-projection maps the center of `g` injectively into `m^h`.
    pub center_embeds: bool,
    /// No nonzero carrier vector lies in `g₁` and centralizes `g₁`.
    pub g1_meets_k_trivially: bool,
}

impl AffineAlgebra {
    pub fn assembled_inertia(&self) -> Option<Inertia> {
        self.assembled
            .as_ref()
            .map(|a| crate::liealg::killing_form(a).inertia())
    }
}

pub fn affine_algebra(pair: &ReductivePair) -> Result<AffineAlgebra, AffineError> {
    require_normal(pair)?;
    if !pair.flags().effective {
        return Err(AffineError::NotEffective);
    }
    let algebra = pair.algebra();
    let n = algebra.dim();
    let decomposition = simple_ideal_decomposition(algebra)?;
    let g1 = decomposition.semisimple_part();
    let k = invariant_field_algebra(pair)?;

    let g1_alg = (!g1.is_zero()).then(|| algebra.restrict(&g1, "g")).transpose()?;
    let assembled = match (&g1_alg, k.algebra()) {
        (Some(a), Some(b)) => Some(a.direct_sum(b)),
        (Some(a), None) => Some(a.clone()),
        (None, Some(b)) => Some(b.clone()),
        (None, None) => None,
    };
    let split = g1.dim();
    let cross_brackets_vanish = assembled.as_ref().is_none_or(|a| {
        (0..split).all(|i| (split..a.dim()).all(|j| a.basis_bracket(i, j).is_zero()))
    });

    let z = &decomposition.center;
    let projected: Vec<Vector> = z.basis().iter().map(|v| pair.project_m(v)).collect();
    let center_embeds = projected.iter().all(|v| k.carrier().contains(v))
        && SubspaceBasis::span(n, &projected).dim() == z.dim();

    let g1_meets_k_trivially = k
        .carrier()
        .intersection(&g1)
        .intersection(&centralizer(algebra, &g1))
        .is_zero();

    Ok(AffineAlgebra {
        total_dim: g1.dim() + k.dim(),
        g1,
        k,
        assembled,
        cross_brackets_vanish,
        center_embeds,
        g1_meets_k_trivially,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedTorus {
    pub dim: usize,
    pub basis: SubspaceBasis,
}

/// Center of the invariant-field algebra, checked abelian.
pub fn fixed_torus(pair: &ReductivePair) -> Result<FixedTorus, AffineError> {
    require_normal(pair)?;
    let k = invariant_field_algebra(pair)?;
    let basis = k.center().clone();
    let vecs = basis.basis();
    for a in 0..vecs.len() {
        for b in a + 1..vecs.len() {
            if !pair.bracket_m(&vecs[a], &vecs[b]).is_zero() {
                return Err(AffineError::TorusNotAbelian);
            }
        }
    }
    Ok(FixedTorus {
        dim: basis.dim(),
        basis,
    })
}

/// User-supplied global facts the engine cannot decide.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct UserAssertions {
    pub locally_irreducible: Option<bool>,
    pub is_sphere_or_rp: Option<bool>,
}

pub const CAVEAT_LOCAL_IRREDUCIBILITY: &str = "local irreducibility of M is a Riemannian condition; the engine only certifies the sufficient case of an irreducible isotropy representation, otherwise it relies on the user's assertion";
pub const CAVEAT_ALMOST_DIRECT: &str = "the product G1 x K is almost direct: it is modeled as a direct sum of commuting Lie algebras, and the discrete intersection of the global groups is not computed";
pub const CAVEAT_NOT_CERTIFIED: &str = "isometry group not certified: the gate requires local irreducibility (probe or assertion) and an assertion that M is neither a sphere nor a real projective space; only the affine algebra is reported";

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IsometryReport {
    pub probe: ProbeKind,
    pub gate_passed: bool,
    pub affine_dim: usize,
    /// Dimension of the identity component of the isometry group, when
    /// certified.
    pub iso_dim: Option<usize>,
    pub k_semisimple: bool,
    pub iso_semisimple: Option<bool>,
    pub statement: String,
    pub caveats: Vec<String>,
}

pub fn isometry_report(pair: &ReductivePair, user: UserAssertions) -> Result<IsometryReport, AffineError> {
    let affine = affine_algebra(pair)?;
    let probe = isotropy_irreducibility_probe(pair)?.kind();
    let irreducible = probe == ProbeKind::Irreducible || user.locally_irreducible == Some(true);
    let gate_passed = irreducible && user.is_sphere_or_rp == Some(false);
    let k_semisimple = affine.k.is_semisimple();
    let mut caveats = vec![
        CAVEAT_LOCAL_IRREDUCIBILITY.to_string(),
        CAVEAT_ALMOST_DIRECT.to_string(),
    ];
    let (iso_dim, iso_semisimple, statement) = if gate_passed {
        (
            Some(affine.total_dim),
            Some(k_semisimple),
            format!(
                "Iso0 = G1 x K, dim {}; Iso(M) semisimple iff K semisimple: {}",
                affine.total_dim,
                if k_semisimple { "semisimple" } else { "not semisimple" }
            ),
        )
    } else {
        caveats.push(CAVEAT_NOT_CERTIFIED.to_string());
        (
            None,
            None,
            format!("Aff0 = G1 x K, dim {}", affine.total_dim),
        )
    };
    Ok(IsometryReport {
        probe,
        gate_passed,
        affine_dim: affine.total_dim,
        iso_dim,
        k_semisimple,
        iso_semisimple,
        statement,
        caveats,
    })
}
