//! Named desk-scale algebras, subalgebra embeddings and homogeneous-space
//! presentations.
//!
//! Entry names read `<algebra>_mod_<subalgebra>`. The algebra is a direct
//! sum of factors `so<n>`, `su<n>` and `r<d>` (`r` alone means `r1`), for
//! instance `so3so3` or `so3r`. The subalgebra is one of
//!
//! * `0`: the trivial subalgebra
//! * `so<k>`: corner `so(k)` in the first factor, which must be `so<n>`
//! * `su2`, `u1`: corner `su(2)` or `span(H1)` in a first factor `su<n>`
//! * `diag`: the diagonal of two equal factors
//! * `second_factor`: the second of two factors
//!
//! Bases: `so(n)` uses `E_ij = e_i e_jᵀ - e_j e_iᵀ` for `i < j` in
//! lexicographic order. `su(n)` is realified as `2n × 2n` real matrices
//! through `a + ib ↦ [[a, -b], [b, a]]`, with basis `A_ij = E_ij - E_ji`,
//! then `S_ij = i(E_ij + E_ji)`, then `H_k = i(E_kk - E_{k+1,k+1})`.
//! `ℝ^d` is realized by diagonal matrix units. Direct sums are block
//! diagonal and suffix labels with `_1`, `_2`, ...

use std::sync::OnceLock;

use serde::Deserialize;
use thiserror::Error;

use crate::affine::UserAssertions;
use crate::homspace::{normal_decomposition, HomError, MetricSpec, ReductivePair};
use crate::liealg::{scalar, LieAlgebra, LieError, Matrix, StructureEntry, SubspaceBasis, Vector};

pub const MAX_N: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("unknown catalog name `{0}`")]
    UnknownName(String),
    #[error("parameter {param} = {value} out of range in `{name}` (allowed {min}..={max})")]
    ParamOutOfRange {
        name: String,
        param: &'static str,
        value: usize,
        min: usize,
        max: usize,
    },
    #[error(transparent)]
    Lie(#[from] LieError),
}

/// The curated entries, in listing order.
pub const CATALOG: &[&str] = &[
    "so3_mod_so2",
    "so4_mod_so2",
    "so4_mod_so3",
    "so5_mod_so4",
    "so6_mod_so5",
    "so5_mod_so3",
    "so3_mod_0",
    "so4_mod_0",
    "su2_mod_u1",
    "su3_mod_su2",
    "so3so3_mod_diag",
    "so4so4_mod_diag",
    "so3so3_mod_second_factor",
    "so3r_mod_so2",
    "r2_mod_0",
];

/// A basis of real matrices closed under the commutator.
#[derive(Debug, Clone)]
pub struct MatrixBasis {
    pub size: usize,
    pub mats: Vec<Matrix>,
    pub labels: Vec<String>,
}

impl MatrixBasis {
    pub fn so(n: usize) -> Self {
        let mut mats = Vec::new();
        let mut labels = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let mut e = Matrix::zeros(n, n);
                e[(i, j)] = scalar::one();
                e[(j, i)] = -scalar::one();
                mats.push(e);
                labels.push(format!("E{}{}", i + 1, j + 1));
            }
        }
        MatrixBasis { size: n, mats, labels }
    }

    pub fn su(n: usize) -> Self {
        // complex entries as (re, im) pairs
        let realify = |entries: &[(usize, usize, i64, i64)]| {
            let mut m = Matrix::zeros(2 * n, 2 * n);
            for &(i, j, re, im) in entries {
                m[(2 * i, 2 * j)] = scalar::int(re);
                m[(2 * i, 2 * j + 1)] = scalar::int(-im);
                m[(2 * i + 1, 2 * j)] = scalar::int(im);
                m[(2 * i + 1, 2 * j + 1)] = scalar::int(re);
            }
            m
        };
        let mut mats = Vec::new();
        let mut labels = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                mats.push(realify(&[(i, j, 1, 0), (j, i, -1, 0)]));
                labels.push(format!("A{}{}", i + 1, j + 1));
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                mats.push(realify(&[(i, j, 0, 1), (j, i, 0, 1)]));
                labels.push(format!("S{}{}", i + 1, j + 1));
            }
        }
        for k in 0..n - 1 {
            mats.push(realify(&[(k, k, 0, 1), (k + 1, k + 1, 0, -1)]));
            labels.push(format!("H{}", k + 1));
        }
        MatrixBasis { size: 2 * n, mats, labels }
    }

    pub fn abelian(d: usize) -> Self {
        let mats = (0..d)
            .map(|i| {
                let mut m = Matrix::zeros(d, d);
                m[(i, i)] = scalar::one();
                m
            })
            .collect();
        let labels = (0..d).map(|i| format!("Z{}", i + 1)).collect();
        MatrixBasis { size: d, mats, labels }
    }

    /// Block-diagonal direct sum; labels get `_1`, `_2`, ... suffixes.
    pub fn direct_sum(factors: &[MatrixBasis]) -> Self {
        if factors.len() == 1 {
            return factors[0].clone();
        }
        let size = factors.iter().map(|f| f.size).sum();
        let mut mats = Vec::new();
        let mut labels = Vec::new();
        let mut offset = 0;
        for (idx, f) in factors.iter().enumerate() {
            for (m, label) in f.mats.iter().zip(&f.labels) {
                let mut big = Matrix::zeros(size, size);
                for i in 0..f.size {
                    for j in 0..f.size {
                        big[(offset + i, offset + j)] = m[(i, j)].clone();
                    }
                }
                mats.push(big);
                labels.push(format!("{label}_{}", idx + 1));
            }
            offset += f.size;
        }
        MatrixBasis { size, mats, labels }
    }

    pub fn dim(&self) -> usize {
        self.mats.len()
    }

    /// `Σ x_i M_i`
    pub fn realize(&self, x: &Vector) -> Matrix {
        let mut out = Matrix::zeros(self.size, self.size);
        for (c, m) in x.iter().zip(&self.mats) {
            if *c != scalar::zero() {
                out = out.add(&m.scale(c));
            }
        }
        out
    }

    fn flatten(m: &Matrix) -> Vector {
        Vector::new(m.entries().to_vec())
    }

    /// Structure constants from matrix commutators, validated by
    /// [`LieAlgebra::new`].
    pub fn lie_algebra(&self) -> Result<LieAlgebra, LieError> {
        let d = self.dim();
        let flat: Vec<Vector> = self.mats.iter().map(Self::flatten).collect();
        let span = SubspaceBasis::span(self.size * self.size, &flat);
        if span.dim() != d {
            return Err(LieError::DimensionMismatch {
                expected: d,
                found: span.dim(),
            });
        }
        // echelon coordinates -> coordinates in `mats`
        let p = Matrix::from_rows(
            &flat
                .iter()
                .map(|v| Vector::new(span.coordinates_of(v).expect("in span")))
                .collect::<Vec<_>>(),
            d,
        );
        let to_basis = p.inverse().expect("independent").transpose();
        let mut entries: Vec<StructureEntry> = Vec::new();
        for i in 0..d {
            for j in i + 1..d {
                let a = &self.mats[i];
                let b = &self.mats[j];
                let c = a.mul(b).sub(&b.mul(a));
                if c.is_zero() {
                    continue;
                }
                let echelon = span.coordinates_of(&Self::flatten(&c)).ok_or(
                    LieError::DimensionMismatch {
                        expected: d,
                        found: d + 1,
                    },
                )?;
                let coords = to_basis.mul_vec(&Vector::new(echelon));
                for (k, v) in coords.into_coords().into_iter().enumerate() {
                    if v != scalar::zero() {
                        entries.push((i, j, k, v));
                    }
                }
            }
        }
        LieAlgebra::new(d, self.labels.clone(), &entries)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Factor {
    So(usize),
    Su(usize),
    R(usize),
}

impl Factor {
    fn basis(self) -> MatrixBasis {
        match self {
            Factor::So(n) => MatrixBasis::so(n),
            Factor::Su(n) => MatrixBasis::su(n),
            Factor::R(d) => MatrixBasis::abelian(d),
        }
    }

    fn dim(self) -> usize {
        match self {
            Factor::So(n) => n * (n - 1) / 2,
            Factor::Su(n) => n * n - 1,
            Factor::R(d) => d,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Sub {
    Trivial,
    SoCorner(usize),
    Su2Corner,
    U1,
    Diagonal,
    SecondFactor,
}

/// Corner `so(k) ⊂ so(n)`: the `E_ij` with `i < j < k`.
pub fn so_corner(n: usize, k: usize) -> SubspaceBasis {
    let mut indices = Vec::new();
    let mut idx = 0;
    for i in 0..n {
        for j in i + 1..n {
            if j < k {
                indices.push(idx);
            }
            idx += 1;
        }
    }
    SubspaceBasis::coordinate(n * (n - 1) / 2, &indices)
}

/// Corner `su(2) ⊂ su(n)`: `A12, S12, H1`.
pub fn su2_corner(n: usize) -> SubspaceBasis {
    let pairs = n * (n - 1) / 2;
    SubspaceBasis::coordinate(n * n - 1, &[0, pairs, 2 * pairs])
}

/// `Δ = {(x, x)} ⊂ g ⊕ g` for `dim g = d`.
pub fn diagonal(d: usize) -> SubspaceBasis {
    let vecs: Vec<Vector> = (0..d)
        .map(|i| &Vector::basis(2 * d, i) + &Vector::basis(2 * d, d + i))
        .collect();
    SubspaceBasis::span(2 * d, &vecs)
}

pub fn second_factor(d1: usize, d2: usize) -> SubspaceBasis {
    SubspaceBasis::coordinate(d1 + d2, &(d1..d1 + d2).collect::<Vec<_>>())
}

/// Partial report checked against the engine in regression tests. Every
/// field is optional; only present fields are compared.
#[derive(Debug, Clone, Default, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExpectedReport {
    pub dims: ExpectedDims,
    pub flags: ExpectedFlags,
    pub torus_dim: Option<usize>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExpectedDims {
    pub g: Option<usize>,
    pub h: Option<usize>,
    pub m: Option<usize>,
    pub m_h: Option<usize>,
    pub k: Option<usize>,
    pub k_center: Option<usize>,
    pub transvection: Option<usize>,
    pub g1: Option<usize>,
    pub affine: Option<usize>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExpectedFlags {
    pub reductive: Option<bool>,
    pub normal: Option<bool>,
    pub naturally_reductive: Option<bool>,
    pub effective: Option<bool>,
    pub transvection_equals_g: Option<bool>,
}

fn expected_table() -> &'static std::collections::BTreeMap<String, ExpectedReport> {
    static TABLE: OnceLock<std::collections::BTreeMap<String, ExpectedReport>> = OnceLock::new();
    TABLE.get_or_init(|| {
        serde_json::from_str(include_str!("../data/catalog_expected.json"))
            .expect("bundled catalog expectations parse")
    })
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: String,
    pub realization: MatrixBasis,
    pub algebra: LieAlgebra,
    pub h: SubspaceBasis,
    pub metric_spec: MetricSpec,
    pub assertions: UserAssertions,
    /// Present for curated entries.
    pub expected: Option<ExpectedReport>,
}

impl CatalogEntry {
    /// `m = h^⊥` for the entry's metric.
    pub fn pair(&self) -> Result<ReductivePair, HomError> {
        normal_decomposition(&self.algebra, &self.h, &self.metric_spec)
    }
}

fn parse_number(
    name: &str,
    digits: &str,
    param: &'static str,
    min: usize,
    max: usize,
) -> Result<usize, CatalogError> {
    let value: usize = digits
        .parse()
        .map_err(|_| CatalogError::UnknownName(name.to_string()))?;
    if value < min || value > max {
        return Err(CatalogError::ParamOutOfRange {
            name: name.to_string(),
            param,
            value,
            min,
            max,
        });
    }
    Ok(value)
}

fn parse_factors(name: &str, mut rest: &str) -> Result<Vec<Factor>, CatalogError> {
    let unknown = || CatalogError::UnknownName(name.to_string());
    let mut factors = Vec::new();
    while !rest.is_empty() {
        let (kind, tail) = if let Some(t) = rest.strip_prefix("so") {
            ("so", t)
        } else if let Some(t) = rest.strip_prefix("su") {
            ("su", t)
        } else if let Some(t) = rest.strip_prefix('r') {
            ("r", t)
        } else {
            return Err(unknown());
        };
        let len = tail.bytes().take_while(u8::is_ascii_digit).count();
        let (digits, tail) = tail.split_at(len);
        let factor = match kind {
            "so" if digits.is_empty() => return Err(unknown()),
            "so" => Factor::So(parse_number(name, digits, "n", 2, MAX_N)?),
            "su" if digits.is_empty() => return Err(unknown()),
            "su" => Factor::Su(parse_number(name, digits, "n", 2, MAX_N)?),
            _ if digits.is_empty() => Factor::R(1),
            _ => Factor::R(parse_number(name, digits, "d", 1, MAX_N)?),
        };
        factors.push(factor);
        rest = tail;
    }
    if factors.is_empty() || factors.len() > 2 {
        return Err(unknown());
    }
    Ok(factors)
}

fn parse_sub(name: &str, text: &str, factors: &[Factor]) -> Result<Sub, CatalogError> {
    let unknown = || CatalogError::UnknownName(name.to_string());
    let sub = match text {
        "0" => Sub::Trivial,
        "su2" => Sub::Su2Corner,
        "u1" => Sub::U1,
        "diag" => Sub::Diagonal,
        "second_factor" => Sub::SecondFactor,
        _ => {
            let digits = text.strip_prefix("so").ok_or_else(unknown)?;
            let Factor::So(n) = factors[0] else {
                return Err(unknown());
            };
            Sub::SoCorner(parse_number(name, digits, "k", 2, n - 1)?)
        }
    };
    let ok = match sub {
        Sub::Su2Corner => matches!(factors[0], Factor::Su(n) if n >= 3),
        Sub::U1 => matches!(factors[0], Factor::Su(_)),
        Sub::Diagonal => factors.len() == 2 && factors[0] == factors[1],
        Sub::SecondFactor => factors.len() == 2,
        Sub::Trivial | Sub::SoCorner(_) => true,
    };
    if ok {
        Ok(sub)
    } else {
        Err(unknown())
    }
}

fn default_assertions(factors: &[Factor], sub: Sub) -> UserAssertions {
    let sphere = UserAssertions {
        locally_irreducible: Some(true),
        is_sphere_or_rp: Some(true),
    };
    match (factors, sub) {
        // S^{n-1}
        ([Factor::So(n)], Sub::SoCorner(k)) if k + 1 == *n => sphere,
        // SO(3) = RP^3, SU(2) = S^3, SU(2)/U(1) = S^2
        ([Factor::So(3)], Sub::Trivial) | ([Factor::Su(2)], Sub::Trivial) => sphere,
        ([Factor::Su(2)], Sub::U1) => sphere,
        ([f, _], Sub::Diagonal) if matches!(f, Factor::So(3)) => sphere,
        _ => UserAssertions::default(),
    }
}

/// Builds any family member; curated names also carry their expected
/// partial report.
pub fn construct(name: &str) -> Result<CatalogEntry, CatalogError> {
    let (left, right) = name
        .split_once("_mod_")
        .ok_or_else(|| CatalogError::UnknownName(name.to_string()))?;
    let factors = parse_factors(name, left)?;
    let sub = parse_sub(name, right, &factors)?;

    let bases: Vec<MatrixBasis> = factors.iter().map(|f| f.basis()).collect();
    let realization = MatrixBasis::direct_sum(&bases);
    let algebra = realization.lie_algebra()?;
    let n = algebra.dim();
    let d0 = factors[0].dim();

    let embed_first = |s: SubspaceBasis| -> SubspaceBasis {
        let vecs: Vec<Vector> = s
            .basis()
            .iter()
            .map(|v| {
                let mut coords = v.coords().to_vec();
                coords.resize(n, scalar::zero());
                Vector::new(coords)
            })
            .collect();
        SubspaceBasis::span(n, &vecs)
    };
    let h = match (sub, factors[0]) {
        (Sub::Trivial, _) => SubspaceBasis::zero(n),
        (Sub::SoCorner(k), Factor::So(m)) => embed_first(so_corner(m, k)),
        (Sub::Su2Corner, Factor::Su(m)) => embed_first(su2_corner(m)),
        (Sub::U1, Factor::Su(m)) => {
            let pairs = m * (m - 1) / 2;
            SubspaceBasis::coordinate(n, &[2 * pairs])
        }
        (Sub::Diagonal, _) => diagonal(d0),
        (Sub::SecondFactor, _) => second_factor(d0, n - d0),
        _ => unreachable!("validated by parse_sub"),
    };
    algebra.ensure_subalgebra(&h)?;

    Ok(CatalogEntry {
        name: name.to_string(),
        realization,
        algebra,
        h,
        metric_spec: MetricSpec::negative_killing(),
        assertions: default_assertions(&factors, sub),
        expected: expected_table().get(name).cloned(),
    })
}

pub fn list() -> &'static [&'static str] {
    CATALOG
}
