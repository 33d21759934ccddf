//! Every curated entry's expected partial report, produced by the sympy
//! oracle in `oracles/`, against the engine's full report.

use reductive_workbench::catalog::{construct, CATALOG};
use reductive_workbench::cli::{catalog_report, ReportOptions};

fn check<T: PartialEq + std::fmt::Debug>(name: &str, field: &str, expected: Option<T>, actual: Option<T>) {
    if let Some(e) = expected {
        assert_eq!(Some(e), actual, "{name}: {field}");
    }
}

#[test]
fn expected_reports_match() {
    for name in CATALOG {
        let entry = construct(name).unwrap();
        let exp = entry.expected.clone().expect("curated entries carry expectations");
        let r = catalog_report(&entry, ReportOptions::default()).unwrap();
        assert!(r.passed(), "{name}: {:?}", r.failures);
        let (d, e) = (&r.dims, &exp.dims);
        check(name, "g", e.g, Some(d.g));
        check(name, "h", e.h, Some(d.h));
        check(name, "m", e.m, Some(d.m));
        check(name, "m_h", e.m_h, Some(d.m_h));
        check(name, "k", e.k, d.k);
        check(name, "k_center", e.k_center, d.k_center);
        check(name, "transvection", e.transvection, d.transvection);
        check(name, "g1", e.g1, d.g1);
        check(name, "affine", e.affine, d.affine);
        let (f, e) = (&r.flags, &exp.flags);
        check(name, "reductive", e.reductive, Some(f.reductive));
        check(name, "normal", e.normal, Some(f.normal));
        check(name, "naturally_reductive", e.naturally_reductive, Some(f.naturally_reductive));
        check(name, "effective", e.effective, Some(f.effective));
        check(name, "transvection_equals_g", e.transvection_equals_g, f.transvection_equals_g);
        check(name, "torus_dim", exp.torus_dim, r.theorem_verdicts.torus_dim);
    }
}
