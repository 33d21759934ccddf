//! Algebra-level examples checked against independent computations: plain
//! integer matrix commutators, brute-force traces and exhaustive triples.

use reductive_workbench::catalog::MatrixBasis;
use reductive_workbench::liealg::scalar::{frac, int};
use reductive_workbench::liealg::{
    ad_invariance_check, bracket, center, derived_subalgebra, killing_form, largest_ideal_in,
    make_lie_algebra, orthogonal_complement, simple_ideal_decomposition, BilinearForm, LieAlgebra,
    LieError, Matrix, Scalar, SubspaceBasis, Vector, Verdict,
};

type M3 = [[i64; 3]; 3];

fn commutator(a: &M3, b: &M3) -> M3 {
    let mut c = [[0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            for k in 0..3 {
                c[i][j] += a[i][k] * b[k][j] - b[i][k] * a[k][j];
            }
        }
    }
    c
}

// L1 = rotation about x, L2 about y, L3 about z
const L: [M3; 3] = [
    [[0, 0, 0], [0, 0, -1], [0, 1, 0]],
    [[0, 0, 1], [0, 0, 0], [-1, 0, 0]],
    [[0, -1, 0], [1, 0, 0], [0, 0, 0]],
];

fn skew_coords(m: &M3) -> [i64; 3] {
    [m[2][1], m[0][2], m[1][0]]
}

fn so3_cyclic() -> LieAlgebra {
    // (3,1,2,1) is given with i > j on purpose
    make_lie_algebra(
        3,
        vec!["L1".into(), "L2".into(), "L3".into()],
        &[(0, 1, 2, int(1)), (1, 2, 0, int(1)), (2, 0, 1, int(1))],
    )
    .unwrap()
}

#[test]
fn so3_brackets_match_matrix_commutators() {
    let so3 = so3_cyclic();
    for i in 0..3 {
        for j in 0..3 {
            let expected = skew_coords(&commutator(&L[i], &L[j]));
            assert_eq!(so3.basis_bracket(i, j), Vector::from_ints(&expected), "[L{}, L{}]", i + 1, j + 1);
        }
    }
    let l1 = Vector::basis(3, 0);
    let l2 = Vector::basis(3, 1);
    assert_eq!(bracket(&so3, &l1, &l2).unwrap(), Vector::basis(3, 2));
    assert!(bracket(&so3, &l1, &l1).unwrap().is_zero());
}

#[test]
fn input_with_reversed_indices_matches_canonical_input() {
    let labels = || vec!["L1".to_string(), "L2".into(), "L3".into()];
    let canonical =
        make_lie_algebra(3, labels(), &[(0, 1, 2, int(1)), (1, 2, 0, int(1)), (0, 2, 1, int(-1))]).unwrap();
    assert_eq!(canonical.dense_table(), so3_cyclic().dense_table());
}

#[test]
fn abelian_and_heisenberg() {
    let r2 = make_lie_algebra(2, vec!["a".into(), "b".into()], &[]).unwrap();
    assert!(bracket(&r2, &Vector::basis(2, 0), &Vector::basis(2, 1)).unwrap().is_zero());
    let heis = make_lie_algebra(3, vec!["X".into(), "Y".into(), "Z".into()], &[(0, 1, 2, int(1))]).unwrap();
    let mut checked = 0;
    for i in 0..3 {
        for j in 0..3 {
            for k in 0..3 {
                let (x, y, z) = (Vector::basis(3, i), Vector::basis(3, j), Vector::basis(3, k));
                assert!(heis.jacobi_defect(&x, &y, &z).is_zero());
                checked += 1;
            }
        }
    }
    assert_eq!(checked, 27);
}

#[test]
fn construction_errors() {
    let labels = || vec!["a".to_string(), "b".into(), "c".into()];
    assert_eq!(
        make_lie_algebra(3, labels(), &[(0, 3, 1, int(1))]).unwrap_err(),
        LieError::IndexOutOfRange { index: 3, dim: 3 }
    );
    assert!(matches!(
        make_lie_algebra(3, labels(), &[(1, 1, 0, int(1))]),
        Err(LieError::SelfBracket { .. })
    ));
    assert!(matches!(
        make_lie_algebra(3, labels(), &[(0, 1, 2, int(1)), (1, 0, 2, int(1))]),
        Err(LieError::ConflictingEntry { .. })
    ));
    assert!(matches!(make_lie_algebra(0, vec![], &[]), Err(LieError::EmptyAlgebra)));
    assert!(matches!(
        make_lie_algebra(2, labels(), &[]),
        Err(LieError::LabelCount { expected: 2, found: 3 })
    ));
}

#[test]
fn corrupted_dense_so3_reports_witness() {
    let mut table = so3_cyclic().dense_table();
    table[0][1][2] = -table[0][1][2].clone();
    let err = LieAlgebra::from_dense(vec!["L1".into(), "L2".into(), "L3".into()], &table).unwrap_err();
    let LieError::JacobiViolation { i, j, k, defect } = err else {
        panic!("{err:?}");
    };
    // [[e0,e0],e1] + [[e0,e1],e0] + [[e1,e0],e0] = 2 [-e2, e0] = -2 e1
    assert_eq!((i, j, k), (0, 0, 1));
    assert_eq!(defect, Vector::from_ints(&[0, -2, 0]));
}

#[test]
fn corrupted_sparse_so4_is_rejected() {
    let so4 = MatrixBasis::so(4).lie_algebra().unwrap();
    let mut entries = so4.structure_entries();
    entries[0].3 = -entries[0].3.clone();
    assert!(matches!(
        make_lie_algebra(6, so4.labels().to_vec(), &entries),
        Err(LieError::JacobiViolation { .. })
    ));
}

/// `B_ij = Σ_{k,l} c_ik^l c_jl^k` straight from the dense table.
fn brute_force_killing(alg: &LieAlgebra) -> Matrix {
    let c = alg.dense_table();
    let n = alg.dim();
    let mut b = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            let mut s = Scalar::from_integer(0.into());
            for k in 0..n {
                for l in 0..n {
                    s += &c[i][k][l] * &c[j][l][k];
                }
            }
            b[(i, j)] = s;
        }
    }
    b
}

#[test]
fn killing_forms() {
    let so3 = so3_cyclic();
    assert_eq!(*killing_form(&so3).gram(), Matrix::identity(3).scale(&int(-2)));
    assert_eq!(*killing_form(&so3).gram(), brute_force_killing(&so3));

    let r2 = make_lie_algebra(2, vec!["a".into(), "b".into()], &[]).unwrap();
    assert!(killing_form(&r2).gram().is_zero());
    assert!(killing_form(&r2).is_degenerate());

    let double = so3.direct_sum(&so3);
    assert_eq!(*killing_form(&double).gram(), Matrix::identity(6).scale(&int(-2)));
    for n in 3..=5 {
        let so = MatrixBasis::so(n).lie_algebra().unwrap();
        assert_eq!(*killing_form(&so).gram(), brute_force_killing(&so), "so({n})");
    }
    let su3 = MatrixBasis::su(3).lie_algebra().unwrap();
    assert_eq!(*killing_form(&su3).gram(), brute_force_killing(&su3));
}

#[test]
fn invariance_checks() {
    let so3 = so3_cyclic();
    assert!(ad_invariance_check(&so3, &killing_form(&so3).negated()).holds());
    let skewed = BilinearForm::new(Matrix::diagonal(&[int(1), int(1), int(2)])).unwrap();
    let Verdict::Violated(w) = ad_invariance_check(&so3, &skewed) else {
        panic!("expected a witness");
    };
    // recompute the defect <[e_i, e_j], e_k> + <e_j, [e_i, e_k]> directly
    let (ei, ej, ek) = (Vector::basis(3, w.i), Vector::basis(3, w.j), Vector::basis(3, w.k));
    let direct = skewed.eval(&so3.bracket(&ei, &ej), &ek) + skewed.eval(&ej, &so3.bracket(&ei, &ek));
    assert_eq!(w.defect, direct);
    assert_ne!(direct, int(0));

    let r2 = make_lie_algebra(2, vec!["a".into(), "b".into()], &[]).unwrap();
    let any = BilinearForm::new(Matrix::from_rows(&[Vector::new(vec![int(3), frac(1, 2)]), Vector::new(vec![frac(1, 2), int(1)])], 2)).unwrap();
    assert!(ad_invariance_check(&r2, &any).holds());
}

#[test]
fn orthogonal_complements() {
    let so3 = so3_cyclic();
    let neg = killing_form(&so3).negated();
    let l3 = SubspaceBasis::coordinate(3, &[2]);
    assert_eq!(orthogonal_complement(&l3, &neg).unwrap(), SubspaceBasis::coordinate(3, &[0, 1]));
    assert!(orthogonal_complement(&SubspaceBasis::full(3), &neg).unwrap().is_zero());
    let so4 = MatrixBasis::so(4).lie_algebra().unwrap();
    let e12 = SubspaceBasis::coordinate(6, &[0]);
    assert_eq!(
        orthogonal_complement(&e12, &killing_form(&so4).negated()).unwrap(),
        SubspaceBasis::coordinate(6, &[1, 2, 3, 4, 5])
    );
    let r2 = make_lie_algebra(2, vec!["a".into(), "b".into()], &[]).unwrap();
    assert_eq!(
        orthogonal_complement(&SubspaceBasis::coordinate(2, &[0]), &killing_form(&r2)),
        Err(LieError::DegenerateForm)
    );
}

#[test]
fn centers_derived_and_ideals() {
    let so3 = so3_cyclic();
    let r1 = LieAlgebra::abelian(1, vec!["Z".into()]).unwrap();
    let r2 = LieAlgebra::abelian(2, vec!["a".into(), "b".into()]).unwrap();
    assert!(center(&so3).is_zero());
    assert!(center(&r2).is_full());
    assert!(derived_subalgebra(&so3).is_full());
    assert!(derived_subalgebra(&r2).is_zero());
    assert_eq!(derived_subalgebra(&so3.direct_sum(&r1)), SubspaceBasis::coordinate(4, &[0, 1, 2]));

    assert!(largest_ideal_in(&so3, &SubspaceBasis::coordinate(3, &[2])).unwrap().is_zero());
    let double = so3.direct_sum(&so3);
    let second = SubspaceBasis::coordinate(6, &[3, 4, 5]);
    assert_eq!(largest_ideal_in(&double, &second).unwrap(), second);
    let so4 = MatrixBasis::so(4).lie_algebra().unwrap();
    assert!(largest_ideal_in(&so4, &SubspaceBasis::coordinate(6, &[0])).unwrap().is_zero());

    let big = so3.direct_sum(&so3).direct_sum(&r1);
    let d = simple_ideal_decomposition(&big).unwrap();
    assert_eq!(d.center, SubspaceBasis::coordinate(7, &[6]));
    assert_eq!(d.simple_ideals, vec![SubspaceBasis::coordinate(7, &[0, 1, 2]), SubspaceBasis::coordinate(7, &[3, 4, 5])]);
    let d = simple_ideal_decomposition(&r2).unwrap();
    assert!(d.center.is_full() && d.simple_ideals.is_empty());
}
