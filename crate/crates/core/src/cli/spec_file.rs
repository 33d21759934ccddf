//! The JSON space-specification format.
//!
//! ```json
//! {
//!   "basis": ["L1", "L2", "L3"],
//!   "brackets": [[0, 1, 2, "1"], [1, 2, 0, "1"], [2, 0, 1, "1"]],
//!   "subalgebra": [["0", "0", "1"]],
//!   "metric": { "mode": "negative_killing" },
//!   "assertions": { "locally_irreducible": true, "is_sphere_or_rp": true }
//! }
//! ```
//!
//! Indices are 0-based. `metric.mode` is `negative_killing` (with optional
//! `center_gram` and `scales`) or `custom` (with `gram`). An optional
//! `complement` lists a basis of `m`; without it `m = h^⊥`. A custom metric
//! only needs to be ad-invariant when `complement` is absent.

use serde::de::{self, Deserializer};
use serde::Deserialize;

use crate::affine::UserAssertions;
use crate::homspace::{
    build_metric, normal_decomposition, HomError, MetricMode, MetricSpec, ReductivePair,
};
use crate::liealg::{scalar, BilinearForm, LieAlgebra, LieError, Matrix, Scalar, SubspaceBasis, Vector};

/// A rational written as `"p/q"` or `"p"`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rational(pub Scalar);

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        scalar::parse(&text)
            .map(Rational)
            .ok_or_else(|| de::Error::custom(format!("invalid rational `{text}`")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketEntry(pub usize, pub usize, pub usize, pub Rational);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum MetricModeName {
    #[default]
    NegativeKilling,
    Custom,
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize, Default)]
#[serde(deny_unknown_fields)]
pub struct MetricSection {
    #[serde(default)]
    pub mode: MetricModeName,
    pub gram: Option<Vec<Vec<Rational>>>,
    pub center_gram: Option<Vec<Vec<Rational>>>,
    pub scales: Option<Vec<Rational>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize, Default)]
#[serde(deny_unknown_fields)]
pub struct AssertionSection {
    pub locally_irreducible: Option<bool>,
    pub is_sphere_or_rp: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceSpecFile {
    pub basis: Vec<String>,
    #[serde(default)]
    pub brackets: Vec<BracketEntry>,
    #[serde(default)]
    pub subalgebra: Vec<Vec<Rational>>,
    pub complement: Option<Vec<Vec<Rational>>>,
    #[serde(default)]
    pub metric: MetricSection,
    #[serde(default)]
    pub assertions: AssertionSection,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SpecError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{field}: {message}")]
    Invalid { field: &'static str, message: String },
    #[error("{op}: {source}")]
    Engine {
        op: &'static str,
        source: HomError,
    },
}

fn matrix(rows: &[Vec<Rational>], field: &'static str) -> Result<Matrix, SpecError> {
    let n = rows.first().map_or(0, Vec::len);
    if rows.iter().any(|r| r.len() != n) {
        return Err(SpecError::Invalid {
            field,
            message: "rows have different lengths".into(),
        });
    }
    let vecs: Vec<Vector> = rows.iter().map(|r| vector(r)).collect();
    Ok(Matrix::from_rows(&vecs, n))
}

fn vector(coords: &[Rational]) -> Vector {
    Vector::new(coords.iter().map(|r| r.0.clone()).collect())
}

fn vectors(rows: &[Vec<Rational>], dim: usize, field: &'static str) -> Result<Vec<Vector>, SpecError> {
    rows.iter()
        .enumerate()
        .map(|(i, r)| {
            if r.len() == dim {
                Ok(vector(r))
            } else {
                Err(SpecError::Invalid {
                    field,
                    message: format!("vector {i} has {} coordinates, expected {dim}", r.len()),
                })
            }
        })
        .collect()
}

impl SpaceSpecFile {
    pub fn parse(text: &str) -> Result<Self, SpecError> {
        serde_json::from_str(text).map_err(|e| SpecError::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })
    }

    pub fn assertions(&self) -> UserAssertions {
        UserAssertions {
            locally_irreducible: self.assertions.locally_irreducible,
            is_sphere_or_rp: self.assertions.is_sphere_or_rp,
        }
    }

    pub fn algebra(&self) -> Result<LieAlgebra, SpecError> {
        let entries: Vec<_> = self
            .brackets
            .iter()
            .map(|BracketEntry(i, j, k, c)| (*i, *j, *k, c.0.clone()))
            .collect();
        LieAlgebra::new(self.basis.len(), self.basis.clone(), &entries).map_err(|e| SpecError::Engine {
            op: "make_lie_algebra",
            source: e.into(),
        })
    }

    pub fn metric_spec(&self) -> Result<MetricSpec, SpecError> {
        let m = &self.metric;
        let mut spec = match m.mode {
            MetricModeName::NegativeKilling => {
                if m.gram.is_some() {
                    return Err(SpecError::Invalid {
                        field: "metric.gram",
                        message: "only allowed with mode `custom`".into(),
                    });
                }
                MetricSpec::negative_killing()
            }
            MetricModeName::Custom => {
                let gram = m.gram.as_ref().ok_or(SpecError::Invalid {
                    field: "metric.gram",
                    message: "required with mode `custom`".into(),
                })?;
                MetricSpec::custom(matrix(gram, "metric.gram")?)
            }
        };
        if let Some(g) = &m.center_gram {
            spec = spec.with_center_gram(matrix(g, "metric.center_gram")?);
        }
        if let Some(s) = &m.scales {
            spec = spec.with_scale_factors(s.iter().map(|r| r.0.clone()).collect());
        }
        Ok(spec)
    }

    /// Runs validation through to a [`ReductivePair`].
    pub fn pair(&self) -> Result<ReductivePair, SpecError> {
        let algebra = self.algebra()?;
        let n = algebra.dim();
        let h = SubspaceBasis::span(n, &vectors(&self.subalgebra, n, "subalgebra")?);
        let spec = self.metric_spec()?;
        let engine = |op| move |source| SpecError::Engine { op, source };
        match &self.complement {
            None => normal_decomposition(&algebra, &h, &spec).map_err(engine("normal_decomposition")),
            Some(rows) => {
                let m = SubspaceBasis::span(n, &vectors(rows, n, "complement")?);
                let metric = match &spec.mode {
                    MetricMode::Custom(gram) => {
                        if gram.nrows() != n || gram.ncols() != n {
                            return Err(engine("build_metric")(HomError::GramShape {
                                expected: n,
                                rows: gram.nrows(),
                                cols: gram.ncols(),
                            }));
                        }
                        BilinearForm::new(gram.clone())
                            .map_err(|e: LieError| engine("build_metric")(e.into()))?
                    }
                    MetricMode::NegativeKilling => build_metric(&algebra, &spec).map_err(engine("build_metric"))?,
                };
                ReductivePair::new(algebra, h, m, metric).map_err(engine("reductive_pair"))
            }
        }
    }
}
