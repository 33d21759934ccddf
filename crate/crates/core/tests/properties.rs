use nalgebra::DMatrix;
use proptest::prelude::*;

use reductive_workbench::catalog::{construct, MatrixBasis};
use reductive_workbench::connection::connection_tensors_at_basepoint;
use reductive_workbench::homspace::ReductivePair;
use reductive_workbench::liealg::scalar::{self, frac};
use reductive_workbench::liealg::{
    ad_invariance_check, ideal_generated_by, killing_form, largest_ideal_in, orthogonal_complement,
    simple_ideal_decomposition, span_closure, BilinearForm, LieAlgebra, Matrix, Scalar, StructureEntry,
    SubspaceBasis, Vector,
};
use reductive_workbench::numlab::{matrix_exp, orthogonality_residual};

fn rational() -> impl Strategy<Value = Scalar> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| frac(n, d))
}

fn vector(dim: usize) -> impl Strategy<Value = Vector> {
    prop::collection::vec(rational(), dim).prop_map(Vector::new)
}

fn vectors(dim: usize, max: usize) -> impl Strategy<Value = Vec<Vector>> {
    prop::collection::vec(vector(dim), 0..=max)
}

const ALGEBRAS: &[&str] = &["so3", "so4", "su3", "so3r", "so3so3"];

fn algebra(name: &str) -> LieAlgebra {
    construct(&format!("{name}_mod_0")).unwrap().algebra
}

/// The same algebra in the basis `f_i = Σ_j p[j][i] e_j`.
fn change_basis(alg: &LieAlgebra, p: &Matrix) -> Option<LieAlgebra> {
    let n = alg.dim();
    let inv = p.inverse()?;
    let f: Vec<Vector> = (0..n).map(|i| p.column(i)).collect();
    let mut entries: Vec<StructureEntry> = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let c = inv.mul_vec(&alg.bracket(&f[i], &f[j]));
            for (k, v) in c.iter().enumerate() {
                if *v != scalar::zero() {
                    entries.push((i, j, k, v.clone()));
                }
            }
        }
    }
    Some(LieAlgebra::new(n, alg.labels().to_vec(), &entries).expect("isomorphic algebra is valid"))
}

fn random_presentation() -> impl Strategy<Value = LieAlgebra> {
    prop::sample::select(vec!["so3", "so4", "so3r"]).prop_flat_map(|name| {
        let alg = algebra(name);
        let n = alg.dim();
        prop::collection::vec(-2i64..=2, n * n).prop_filter_map("singular", move |entries| {
            let rows: Vec<Vector> = entries
                .chunks(n)
                .enumerate()
                // diagonally dominant keeps most samples invertible
                .map(|(i, r)| {
                    let mut v: Vec<Scalar> = r.iter().map(|&x| scalar::int(x)).collect();
                    v[i] += scalar::int(5);
                    Vector::new(v)
                })
                .collect();
            change_basis(&alg, &Matrix::from_rows(&rows, n))
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn bracket_is_antisymmetric_and_satisfies_jacobi(
        (alg, xs) in prop::sample::select(ALGEBRAS).prop_flat_map(|name| {
            let alg = algebra(name);
            let n = alg.dim();
            (Just(alg), prop::collection::vec(vector(n), 3))
        }),
    ) {
        let (x, y, z) = (&xs[0], &xs[1], &xs[2]);
        prop_assert_eq!(alg.bracket(x, y), -&alg.bracket(y, x));
        prop_assert!(alg.jacobi_defect(x, y, z).is_zero());
    }

    #[test]
    fn killing_form_is_invariant_in_any_basis(alg in random_presentation()) {
        prop_assert!(ad_invariance_check(&alg, &killing_form(&alg)).holds());
    }

    #[test]
    fn simple_ideals_span_and_commute(alg in random_presentation()) {
        let d = simple_ideal_decomposition(&alg).unwrap();
        let total = d.simple_ideals.iter().fold(d.center.clone(), |acc, s| acc.sum(s));
        prop_assert!(total.is_full());
        prop_assert_eq!(d.center.dim() + d.simple_ideals.iter().map(SubspaceBasis::dim).sum::<usize>(), alg.dim());
        for (a, s) in d.simple_ideals.iter().enumerate() {
            prop_assert!(alg.is_ideal(s));
            for t in &d.simple_ideals[a + 1..] {
                for x in s.basis() {
                    for y in t.basis() {
                        prop_assert!(alg.bracket(&x, &y).is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn subspace_dimension_formula(u in vectors(5, 4), w in vectors(5, 4)) {
        let u = SubspaceBasis::span(5, &u);
        let w = SubspaceBasis::span(5, &w);
        prop_assert_eq!(u.sum(&w).dim() + u.intersection(&w).dim(), u.dim() + w.dim());
        prop_assert!(u.contains_subspace(&u.intersection(&w)));
        prop_assert!(u.sum(&w).contains_subspace(&w));
    }

    #[test]
    fn echelon_form_is_canonical(u in vectors(4, 3), coeffs in prop::collection::vec(rational(), 3)) {
        let s = SubspaceBasis::span(4, &u);
        let mut extended = u.clone();
        let mut combo = Vector::zeros(4);
        for (v, c) in u.iter().zip(&coeffs) {
            combo.add_scaled(c, v);
        }
        extended.push(combo);
        extended.reverse();
        prop_assert_eq!(SubspaceBasis::span(4, &extended), s);
    }

    #[test]
    fn orthogonal_complement_is_involutive(u in vectors(6, 6)) {
        let form = killing_form(&algebra("so4")).negated();
        let s = SubspaceBasis::span(6, &u);
        let c = orthogonal_complement(&s, &form).unwrap();
        prop_assert_eq!(s.dim() + c.dim(), 6);
        prop_assert_eq!(orthogonal_complement(&c, &form).unwrap(), s);
    }

    #[test]
    fn largest_ideal_dominates_generated_ideals(seeds in vectors(7, 2)) {
        let g = algebra("so3so3").direct_sum(&LieAlgebra::abelian(1, vec!["Z".into()]).unwrap());
        let h = span_closure(&g, &SubspaceBasis::span(7, &seeds));
        let ideal = largest_ideal_in(&g, &h).unwrap();
        prop_assert!(g.is_ideal(&ideal));
        prop_assert!(h.contains_subspace(&ideal));
        for v in h.basis() {
            let j = ideal_generated_by(&g, &SubspaceBasis::span(7, &[v]));
            if h.contains_subspace(&j) {
                prop_assert!(ideal.contains_subspace(&j));
            }
        }
    }

    #[test]
    fn naturally_reductive_identity_on_random_vectors(
        name in prop::sample::select(vec!["so4_mod_so2", "so5_mod_so3", "su3_mod_su2", "so3r_mod_so2"]),
        coeffs in prop::collection::vec(rational(), 21),
    ) {
        let pair = construct(name).unwrap().pair().unwrap();
        let basis = pair.m().basis();
        let k = basis.len();
        let pick = |offset: usize| {
            let mut v = Vector::zeros(pair.algebra().dim());
            for (b, c) in basis.iter().zip(coeffs[offset..].iter().cycle()) {
                v.add_scaled(c, b);
            }
            v
        };
        let (x, y, z) = (pick(0), pick(k.min(7)), pick(2 * k.min(7)));
        let lhs = pair.inner(&pair.bracket_m(&x, &y), &z) + pair.inner(&y, &pair.bracket_m(&x, &z));
        prop_assert_eq!(lhs, scalar::zero());
    }

    #[test]
    fn skew_matrix_exponential_is_orthogonal(n in 3usize..=6, entries in prop::collection::vec(-3.0f64..3.0, 15)) {
        let mut a = DMatrix::zeros(n, n);
        let mut it = entries.iter();
        for i in 0..n {
            for j in i + 1..n {
                let v = *it.next().unwrap();
                a[(i, j)] = v;
                a[(j, i)] = -v;
            }
        }
        prop_assert!(orthogonality_residual(&matrix_exp(&a).unwrap()) < 1e-9);
    }

    #[test]
    fn rationals_round_trip(x in rational()) {
        prop_assert_eq!(scalar::parse(&scalar::format(&x)), Some(x));
    }
}

fn all_pairs() -> Vec<(String, ReductivePair)> {
    reductive_workbench::catalog::CATALOG
        .iter()
        .map(|n| (n.to_string(), construct(n).unwrap().pair().unwrap()))
        .collect()
}

#[test]
fn connection_invariants_on_catalog() {
    for (name, pair) in all_pairs() {
        let t = connection_tensors_at_basepoint(&pair).unwrap();
        assert!(t.torsion_is_antisymmetric(), "{name}");
        assert!(t.curvature_is_antisymmetric(), "{name}");
        assert!(t.diagonal_vanishes(), "{name}");
        assert_eq!(t.canonical_is_twice_lc(), Some(true), "{name}");
        for row in t.curvature_table() {
            for col in row {
                assert!(col.iter().all(|v| pair.m().contains(v)), "{name}");
            }
        }
    }
}

#[test]
fn invariant_field_metric_is_bi_invariant_on_normal_pairs() {
    use reductive_workbench::affine::invariant_field_algebra;
    for (name, pair) in all_pairs() {
        let k = invariant_field_algebra(&pair).unwrap();
        assert!(k.metric_invariant() && k.compact_type(), "{name}");
        // <[X,Y]_k, Z> totally antisymmetric on the carrier
        let b = k.carrier().basis();
        for x in &b {
            for y in &b {
                for z in &b {
                    let bxy = -&pair.bracket_m(x, y);
                    let byz = -&pair.bracket_m(y, z);
                    assert_eq!(pair.inner(&bxy, z), pair.inner(x, &byz), "{name}");
                }
            }
        }
    }
}

#[test]
fn matrix_generated_algebras_match_commutators() {
    for basis in [MatrixBasis::so(5), MatrixBasis::su(3), MatrixBasis::direct_sum(&[MatrixBasis::so(3), MatrixBasis::abelian(2)])] {
        let alg = basis.lie_algebra().unwrap();
        for i in 0..alg.dim() {
            for j in 0..alg.dim() {
                let (a, b) = (&basis.mats[i], &basis.mats[j]);
                assert_eq!(a.mul(b).sub(&b.mul(a)), basis.realize(&alg.basis_bracket(i, j)));
            }
        }
    }
}

#[test]
fn metric_forms_are_positive_definite() {
    for (name, pair) in all_pairs() {
        let m: &BilinearForm = pair.metric();
        assert!(m.is_positive_definite(), "{name}");
    }
}
