use serde::Serialize;

use crate::affine::{
    affine_algebra, fixed_torus, invariant_field_algebra, invariant_field_killing_check,
    isometry_report, transvection_algebra, transvection_equals_g_check, IsometryReport,
    UserAssertions,
};
use crate::catalog::CatalogEntry;
use crate::connection::connection_tensors_at_basepoint;
use crate::homspace::{
    isotropy_irreducibility_probe, naturally_reductive_check, normalizer_invariance_check, ProbeKind,
    ReductivePair,
};
use crate::liealg::{scalar, SubspaceBasis, Vector};
use crate::numlab::{self, DEFAULT_TOLERANCE};

pub const ENGINE_NAME: &str = "reductive-workbench";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CheckLevel {
    #[default]
    All,
    Fast,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ReportOptions {
    pub checks: CheckLevel,
    pub numeric: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Engine {
    pub name: &'static str,
    pub version: &'static str,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Conventions {
    pub canonical_connection: &'static str,
    pub levi_civita: &'static str,
    pub torsion: &'static str,
    pub curvature: &'static str,
    pub invariant_field_bracket: &'static str,
    pub metric: &'static str,
    pub rationals: &'static str,
}

const CONVENTIONS: Conventions = Conventions {
    canonical_connection: "nabla^c_X Y = -[X,Y]_m",
    levi_civita: "nabla_X Y = -1/2 [X,Y]_m (naturally reductive pairs)",
    torsion: "T(X,Y) = -[X,Y]_m",
    curvature: "R(X,Y)Z = -[[X,Y]_h, Z]",
    invariant_field_bracket: "[X,Y]_k = -[X,Y]_m",
    metric: "-Killing on each simple ideal times its scale, user Gram on the center",
    rationals: "exact, written p/q",
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Dims {
    pub g: usize,
    pub h: usize,
    pub m: usize,
    pub m_h: usize,
    pub k: Option<usize>,
    pub k_center: Option<usize>,
    pub transvection: Option<usize>,
    pub g1: Option<usize>,
    pub affine: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Flags {
    pub reductive: bool,
    pub normal: bool,
    pub naturally_reductive: bool,
    pub effective: bool,
    pub normalizer_invariant: Option<bool>,
    pub transvection_equals_g: Option<bool>,
    pub isotropy_probe: Option<ProbeKind>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConnectionSummary {
    pub torsion_antisymmetric: bool,
    pub curvature_antisymmetric: Option<bool>,
    pub canonical_is_twice_levi_civita: Option<bool>,
    pub bianchi_with_torsion: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TransvectionSection {
    pub equals_g: bool,
    pub is_ideal: bool,
    pub complement: Vec<Vec<String>>,
    pub complement_in_h: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantFieldSection {
    /// `k`, or `upper bound candidate for k` on pairs that are not normal.
    pub label: &'static str,
    pub carrier: Vec<Vec<String>>,
    pub brackets: Vec<(usize, usize, usize, String)>,
    pub center: Vec<Vec<String>>,
    pub metric_invariant: bool,
    pub compact_type: bool,
    pub killing_check: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MainTheoremSection {
    pub g1: usize,
    pub k: usize,
    pub affine: usize,
    pub cross_brackets_vanish: bool,
    pub center_embeds: bool,
    pub g1_meets_k_trivially: bool,
    pub assembled_killing_inertia: Option<[usize; 3]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremVerdicts {
    pub transvection: Option<TransvectionSection>,
    pub invariant_fields: Option<InvariantFieldSection>,
    pub thm_main_dims: Option<MainTheoremSection>,
    pub torus_dim: Option<usize>,
    pub isometry_report: Option<IsometryReport>,
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NumericSection {
    pub tolerance: f64,
    pub t: f64,
    pub s: f64,
    pub flow_commutation_residual: f64,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub check: &'static str,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpaceReport {
    pub engine: Engine,
    pub conventions: Conventions,
    pub source: String,
    pub basis: Vec<String>,
    pub assertions: UserAssertions,
    pub dims: Dims,
    pub flags: Flags,
    pub connection: ConnectionSummary,
    pub theorem_verdicts: TheoremVerdicts,
    pub numeric: Option<NumericSection>,
    pub witnesses: Vec<Witness>,
    /// Theorem-level checks that failed; nonempty means exit code 2.
    pub failures: Vec<String>,
}

impl SpaceReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn strings(s: &SubspaceBasis) -> Vec<Vec<String>> {
    s.to_strings()
}

fn vec_str(v: &Vector) -> String {
    format!("({})", v.to_strings().join(", "))
}

#[derive(Debug, thiserror::Error)]
#[error("{op}: {message}")]
pub struct ReportError {
    pub op: &'static str,
    pub message: String,
}

fn op<E: std::fmt::Display>(op: &'static str) -> impl FnOnce(E) -> ReportError {
    move |e| ReportError {
        op,
        message: e.to_string(),
    }
}

/// Runs the full pipeline on a validated pair.
pub fn run_report(
    pair: &ReductivePair,
    source: &str,
    assertions: UserAssertions,
    options: ReportOptions,
    entry: Option<&CatalogEntry>,
) -> Result<SpaceReport, ReportError> {
    let flags = pair.flags();
    let full = options.checks == CheckLevel::All;
    let mut witnesses = Vec::new();
    let mut failures = Vec::new();
    let mut notes = Vec::new();
    let mut fail = |msg: &str| failures.push(msg.to_string());

    let probe = if flags.reductive {
        Some(isotropy_irreducibility_probe(pair).map_err(op("isotropy_irreducibility_probe"))?)
    } else {
        None
    };
    if let Some((x, y, b)) = pair.first_non_invariant_bracket() {
        witnesses.push(Witness {
            check: "reductive",
            detail: format!("[{}, {}] = {} leaves m", vec_str(&x), vec_str(&y), vec_str(&b)),
        });
    }

    let mut normalizer_invariant = None;
    let mut connection = ConnectionSummary {
        torsion_antisymmetric: false,
        curvature_antisymmetric: None,
        canonical_is_twice_levi_civita: None,
        bianchi_with_torsion: None,
    };
    let mut m_h = 0;
    let mut verdicts = TheoremVerdicts {
        transvection: None,
        invariant_fields: None,
        thm_main_dims: None,
        torus_dim: None,
        isometry_report: None,
        notes: Vec::new(),
    };
    let mut dims = Dims {
        g: pair.algebra().dim(),
        h: pair.h().dim(),
        m: pair.m().dim(),
        m_h: 0,
        k: None,
        k_center: None,
        transvection: None,
        g1: None,
        affine: None,
    };
    let mut transvection_equals_g = None;

    if flags.reductive {
        let nr = naturally_reductive_check(pair).map_err(op("naturally_reductive_check"))?;
        if let Some(w) = nr.witness() {
            witnesses.push(Witness {
                check: "naturally_reductive",
                detail: format!("basis triple {:?}: defect {}", w.indices, scalar::format(&w.defect)),
            });
            if flags.normal {
                fail("naturally reductive identity fails on a normal pair");
            }
        }

        let nc = normalizer_invariance_check(pair).map_err(op("normalizer_invariance_check"))?;
        normalizer_invariant = Some(nc.verdict.holds());
        if let Some((x, y, b)) = nc.verdict.witness() {
            witnesses.push(Witness {
                check: "normalizer_invariance",
                detail: format!("[{}, {}] = {} leaves m", vec_str(x), vec_str(y), vec_str(b)),
            });
            if flags.normal {
                fail("normalizer does not preserve m on a normal pair");
            }
        }

        let tensors = connection_tensors_at_basepoint(pair).map_err(op("connection_tensors"))?;
        connection.torsion_antisymmetric = tensors.torsion_is_antisymmetric();
        connection.canonical_is_twice_levi_civita = tensors.canonical_is_twice_lc();
        if !connection.torsion_antisymmetric {
            fail("torsion is not antisymmetric");
        }
        if connection.canonical_is_twice_levi_civita == Some(false) {
            fail("canonical connection table is not twice the Levi-Civita table");
        }
        if full {
            connection.curvature_antisymmetric = Some(tensors.curvature_is_antisymmetric());
            let bianchi = tensors.bianchi_check(pair);
            connection.bianchi_with_torsion = Some(bianchi.holds());
            if let Some((t, d)) = bianchi.witness() {
                witnesses.push(Witness {
                    check: "bianchi_with_torsion",
                    detail: format!("basis triple {t:?}: difference {}", vec_str(d)),
                });
                fail("first Bianchi identity with torsion fails");
            }
            if connection.curvature_antisymmetric == Some(false) {
                fail("curvature is not antisymmetric");
            }
        }

        let tr = transvection_algebra(pair).map_err(op("transvection_algebra"))?;
        dims.transvection = Some(tr.dim());
        if flags.normal {
            let tv = transvection_equals_g_check(pair).map_err(op("transvection_equals_g_check"))?;
            transvection_equals_g = Some(tv.equals_g);
            if !tv.is_ideal {
                fail("transvection algebra is not an ideal on a normal pair");
            }
            if flags.effective && !tv.equals_g {
                fail("transvection algebra differs from g on an effective normal pair");
            }
            if !tv.complement_in_h {
                fail("complement of the transvection algebra is not inside h");
            }
            verdicts.transvection = Some(TransvectionSection {
                equals_g: tv.equals_g,
                is_ideal: tv.is_ideal,
                complement: strings(&tv.complement),
                complement_in_h: tv.complement_in_h,
            });
        }

        let k = invariant_field_algebra(pair).map_err(op("invariant_field_algebra"))?;
        m_h = k.dim();
        dims.k = Some(k.dim());
        dims.k_center = Some(k.center().dim());
        let killing_check = if full {
            let v = invariant_field_killing_check(pair).map_err(op("invariant_field_killing_check"))?;
            if let Some(w) = v.witness() {
                witnesses.push(Witness {
                    check: "invariant_field_killing",
                    detail: format!("triple {:?}: defect {}", w.indices, scalar::format(&w.defect)),
                });
                if flags.normal {
                    fail("an invariant field is not Killing on a normal pair");
                }
            }
            Some(v.holds())
        } else {
            None
        };
        if flags.normal && !k.compact_type() {
            fail("invariant-field algebra is not of compact type on a normal pair");
        }
        verdicts.invariant_fields = Some(InvariantFieldSection {
            label: if flags.normal { "k" } else { "upper bound candidate for k" },
            carrier: strings(k.carrier()),
            brackets: k.bracket_table(),
            center: strings(k.center()),
            metric_invariant: k.metric_invariant(),
            compact_type: k.compact_type(),
            killing_check,
        });

        if flags.normal {
            let torus = fixed_torus(pair).map_err(op("fixed_torus"))?;
            verdicts.torus_dim = Some(torus.dim);
            if flags.effective {
                let aff = affine_algebra(pair).map_err(op("affine_algebra"))?;
                dims.g1 = Some(aff.g1.dim());
                dims.affine = Some(aff.total_dim);
                if !(aff.cross_brackets_vanish && aff.center_embeds && aff.g1_meets_k_trivially) {
                    fail("affine algebra structure checks fail");
                }
                verdicts.thm_main_dims = Some(MainTheoremSection {
                    g1: aff.g1.dim(),
                    k: aff.k.dim(),
                    affine: aff.total_dim,
                    cross_brackets_vanish: aff.cross_brackets_vanish,
                    center_embeds: aff.center_embeds,
                    g1_meets_k_trivially: aff.g1_meets_k_trivially,
                    assembled_killing_inertia: aff
                        .assembled_inertia()
                        .map(|i| [i.positive, i.negative, i.zero]),
                });
                let iso = isometry_report(pair, assertions).map_err(op("isometry_report"))?;
                verdicts.isometry_report = Some(iso);
            } else {
                notes.push("pair is not effective: affine algebra and isometry report skipped".to_string());
            }
        } else {
            notes.push("pair is not normal: affine algebra, torus and isometry report skipped".to_string());
        }
    } else {
        notes.push("pair is not reductive: only flags are reported".to_string());
    }
    dims.m_h = m_h;
    verdicts.notes = notes;

    let numeric = match entry {
        Some(e) if options.numeric && flags.reductive => {
            let (t, s) = (1.0, 1.0);
            let residual = numlab::flow_commutation_sweep(e, t, s).map_err(op("flow_commutation_check"))?;
            let passed = residual < DEFAULT_TOLERANCE;
            if !passed {
                fail("flow commutation residual exceeds tolerance");
            }
            Some(NumericSection {
                tolerance: DEFAULT_TOLERANCE,
                t,
                s,
                flow_commutation_residual: residual,
                passed,
            })
        }
        None if options.numeric => {
            notes_push(&mut verdicts, "numeric checks need a matrix realization; only catalog entries have one");
            None
        }
        _ => None,
    };

    Ok(SpaceReport {
        engine: Engine {
            name: ENGINE_NAME,
            version: env!("CARGO_PKG_VERSION"),
        },
        conventions: CONVENTIONS,
        source: source.to_string(),
        basis: pair.algebra().labels().to_vec(),
        assertions,
        dims,
        flags: Flags {
            reductive: flags.reductive,
            normal: flags.normal,
            naturally_reductive: flags.naturally_reductive,
            effective: flags.effective,
            normalizer_invariant,
            transvection_equals_g,
            isotropy_probe: probe.map(|p| p.kind()),
        },
        connection,
        theorem_verdicts: verdicts,
        numeric,
        witnesses,
        failures,
    })
}

fn notes_push(v: &mut TheoremVerdicts, note: &str) {
    v.notes.push(note.to_string());
}

pub fn catalog_report(entry: &CatalogEntry, options: ReportOptions) -> Result<SpaceReport, ReportError> {
    let pair = entry.pair().map_err(op("normal_decomposition"))?;
    run_report(
        &pair,
        &format!("catalog:{}", entry.name),
        entry.assertions,
        options,
        Some(entry),
    )
}
