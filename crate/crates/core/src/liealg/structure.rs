//! Centralizers, normalizers, ideals and the simple-ideal decomposition.

use num_traits::Zero;

use super::algebra::LieAlgebra;
use super::error::LieError;
use super::form::{killing_form, orthogonal_within, BilinearForm};
use super::matrix::Matrix;
use super::poly;
use super::scalar::Scalar;
use super::subspace::SubspaceBasis;
use super::vector::Vector;

fn stack(n: usize, blocks: impl IntoIterator<Item = Matrix>) -> Matrix {
    blocks
        .into_iter()
        .fold(Matrix::zeros(0, n), |acc, b| acc.vstack(&b).rref().0)
}

/// `{x : [s, x] = 0 for all s in sub}`.
pub fn centralizer(algebra: &LieAlgebra, sub: &SubspaceBasis) -> SubspaceBasis {
    let n = algebra.dim();
    let system = stack(n, sub.basis().iter().map(|s| algebra.ad(s)));
    SubspaceBasis::span(n, &system.kernel())
}

pub fn center(algebra: &LieAlgebra) -> SubspaceBasis {
    centralizer(algebra, &SubspaceBasis::full(algebra.dim()))
}

/// `{x : [x, h] ⊆ h}`.
pub fn normalizer(algebra: &LieAlgebra, h: &SubspaceBasis) -> SubspaceBasis {
    let n = algebra.dim();
    let ann = h.constraint_matrix();
    let system = stack(n, h.basis().iter().map(|y| ann.mul(&algebra.ad(y))));
    SubspaceBasis::span(n, &system.kernel())
}

/// Span of all `[e_i, e_j]`.
pub fn derived_subalgebra(algebra: &LieAlgebra) -> SubspaceBasis {
    let n = algebra.dim();
    let brackets: Vec<Vector> = algebra
        .structure_entries()
        .iter()
        .map(|&(i, j, _, _)| (i, j))
        .collect::<std::collections::BTreeSet<_>>()
        .into_iter()
        .map(|(i, j)| algebra.basis_bracket(i, j))
        .collect();
    SubspaceBasis::span(n, &brackets)
}

/// Smallest subalgebra containing `seed`.
pub fn span_closure(algebra: &LieAlgebra, seed: &SubspaceBasis) -> SubspaceBasis {
    let mut current = seed.clone();
    loop {
        let basis = current.basis();
        let mut vecs = basis.clone();
        for a in 0..basis.len() {
            for b in a + 1..basis.len() {
                vecs.push(algebra.bracket(&basis[a], &basis[b]));
            }
        }
        let next = SubspaceBasis::span(algebra.dim(), &vecs);
        if next.dim() == current.dim() {
            return current;
        }
        current = next;
    }
}

/// Smallest ideal containing `seed`.
pub fn ideal_generated_by(algebra: &LieAlgebra, seed: &SubspaceBasis) -> SubspaceBasis {
    let n = algebra.dim();
    let mut current = seed.clone();
    loop {
        let mut vecs = current.basis();
        for x in current.basis() {
            for i in 0..n {
                vecs.push(algebra.bracket(&algebra.basis_vector(i), &x));
            }
        }
        let next = SubspaceBasis::span(n, &vecs);
        if next.dim() == current.dim() {
            return current;
        }
        current = next;
    }
}

/// Largest ideal of the algebra contained in the subalgebra `h`, as the
/// fixpoint of `h_{k+1} = {x ∈ h_k : [g, x] ⊆ h_k}`.
pub fn largest_ideal_in(algebra: &LieAlgebra, h: &SubspaceBasis) -> Result<SubspaceBasis, LieError> {
    algebra.ensure_subalgebra(h)?;
    let n = algebra.dim();
    let mut current = h.clone();
    loop {
        if current.is_zero() {
            return Ok(current);
        }
        let basis_t = current.rows().transpose();
        let ann = current.constraint_matrix();
        let k = current.dim();
        let system = stack(
            k,
            (0..n).map(|i| ann.mul(&algebra.ad_basis(i)).mul(&basis_t)),
        );
        let coeffs = system.kernel();
        let next_vecs: Vec<Vector> = coeffs.iter().map(|a| basis_t.mul_vec(a)).collect();
        let next = SubspaceBasis::span(n, &next_vecs);
        if next == current {
            return Ok(current);
        }
        current = next;
    }
}

/// Basis of `{T : T A = A T for every A}` for square matrices of size `n`.
pub fn commutant(mats: &[Matrix], n: usize) -> Vec<Matrix> {
    let unknowns = n * n;
    let mut system = Matrix::zeros(0, unknowns);
    for a in mats {
        let mut block = Matrix::zeros(n * n, unknowns);
        // (T A - A T)[p][q] = Σ_r T[p][r] A[r][q] - Σ_r A[p][r] T[r][q]
        for p in 0..n {
            for q in 0..n {
                let row = p * n + q;
                for r in 0..n {
                    if !a[(r, q)].is_zero() {
                        block[(row, p * n + r)] += &a[(r, q)];
                    }
                    if !a[(p, r)].is_zero() {
                        block[(row, r * n + q)] -= &a[(p, r)];
                    }
                }
            }
        }
        system = system.vstack(&block).rref().0;
    }
    system
        .kernel()
        .into_iter()
        .map(|v| {
            let mut t = Matrix::zeros(n, n);
            for (idx, x) in v.iter().enumerate() {
                t[(idx / n, idx % n)] = x.clone();
            }
            t
        })
        .collect()
}

/// `g = center ⊕ simple_ideals[0] ⊕ simple_ideals[1] ⊕ ...`
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealDecomposition {
    pub center: SubspaceBasis,
    pub simple_ideals: Vec<SubspaceBasis>,
}

impl IdealDecomposition {
    pub fn semisimple_part(&self) -> SubspaceBasis {
        self.simple_ideals
            .iter()
            .fold(SubspaceBasis::zero(self.center.ambient_dim()), |acc, s| acc.sum(s))
    }
}

/// Checks that the Killing form is negative semi-definite with radical
/// equal to the center.
pub fn ensure_compact_type(algebra: &LieAlgebra, killing: &BilinearForm) -> Result<SubspaceBasis, LieError> {
    let inertia = killing.inertia();
    if inertia.positive > 0 {
        return Err(LieError::NotCompactType(format!(
            "Killing form has {} positive directions",
            inertia.positive
        )));
    }
    let z = center(algebra);
    let radical = killing.radical();
    if radical != z {
        return Err(LieError::NotCompactType(format!(
            "Killing radical has dimension {} but the center has dimension {}",
            radical.dim(),
            z.dim()
        )));
    }
    Ok(z)
}

/// Splits a compact-type algebra into its center and simple ideals.
///
/// A seed vector whose generated ideal is proper splits the current ideal
/// against its Killing-orthogonal complement. When every seed generates the
/// whole ideal, the centroid (maps commuting with the adjoint action) is
/// computed; a single dimension certifies simplicity, otherwise a centroid
/// element with rational eigenvalues yields eigenspace ideals.
pub fn simple_ideal_decomposition(algebra: &LieAlgebra) -> Result<IdealDecomposition, LieError> {
    let killing = killing_form(algebra);
    let center = ensure_compact_type(algebra, &killing)?;
    let semisimple = derived_subalgebra(algebra);
    let mut simple_ideals = Vec::new();
    split_ideal(algebra, &killing, &semisimple, &mut simple_ideals)?;
    simple_ideals.sort_by(|a, b| a.pivots().cmp(b.pivots()));
    Ok(IdealDecomposition {
        center,
        simple_ideals,
    })
}

fn split_ideal(
    algebra: &LieAlgebra,
    killing: &BilinearForm,
    ideal: &SubspaceBasis,
    out: &mut Vec<SubspaceBasis>,
) -> Result<(), LieError> {
    if ideal.is_zero() {
        return Ok(());
    }
    let n = algebra.dim();
    for seed in ideal.basis() {
        let generated = ideal_generated_by(algebra, &SubspaceBasis::span(n, &[seed]));
        if generated.dim() < ideal.dim() {
            return split_pair(algebra, killing, ideal, generated, out);
        }
    }
    let centroid = Centroid::new(algebra, ideal);
    if centroid.dim() == 1 {
        out.push(ideal.clone());
        return Ok(());
    }
    match centroid.rational_eigenspace() {
        Some(part) => split_pair(algebra, killing, ideal, part, out),
        None => Err(LieError::IrrationalSplitting(ideal.dim())),
    }
}

fn split_pair(
    algebra: &LieAlgebra,
    killing: &BilinearForm,
    ideal: &SubspaceBasis,
    part: SubspaceBasis,
    out: &mut Vec<SubspaceBasis>,
) -> Result<(), LieError> {
    let rest = ideal.intersection(&orthogonal_within(&part, killing));
    debug_assert_eq!(part.dim() + rest.dim(), ideal.dim());
    split_ideal(algebra, killing, &part, out)?;
    split_ideal(algebra, killing, &rest, out)
}

/// Centroid of an ideal `S` generated (as an ideal) by a single vector
/// `x0`. Every centroid element `T` is fixed by `w = T x0`: each vector of
/// a spanning set `b_a = W_a(x0)` (with `W_a` a word in `ad`) maps to
/// `W_a(w)`. The admissible `w` form a linear space.
struct Centroid<'a> {
    algebra: &'a LieAlgebra,
    ideal: &'a SubspaceBasis,
    words: Vec<Vec<usize>>,
    generators: Vec<Vector>,
    // row a: echelon coordinates of b_a; inverse transpose maps coords -> word weights
    to_words: Matrix,
    elements: Vec<Vector>,
}

impl<'a> Centroid<'a> {
    fn new(algebra: &'a LieAlgebra, ideal: &'a SubspaceBasis) -> Self {
        let n = algebra.dim();
        let generators = algebra_generators(algebra, ideal);
        let x0 = ideal.basis_vector(0);
        let mut spanning = vec![x0.clone()];
        let mut words: Vec<Vec<usize>> = vec![Vec::new()];
        let mut span = SubspaceBasis::span(n, &[x0]);
        let mut idx = 0;
        while idx < spanning.len() && span.dim() < ideal.dim() {
            for (g, gen) in generators.iter().enumerate() {
                let v = algebra.bracket(gen, &spanning[idx]);
                if !span.contains(&v) {
                    span = span.sum(&SubspaceBasis::span(n, &[v.clone()]));
                    let mut word = vec![g];
                    word.extend(words[idx].iter().copied());
                    spanning.push(v);
                    words.push(word);
                }
            }
            idx += 1;
        }
        assert_eq!(span.dim(), ideal.dim(), "seed must generate the ideal");
        let d = ideal.dim();
        let mut coords = Matrix::zeros(d, d);
        for (a, b) in spanning.iter().enumerate() {
            let c = ideal.coordinates_of(b).expect("spanning vector lies in ideal");
            for (j, x) in c.into_iter().enumerate() {
                coords[(a, j)] = x;
            }
        }
        let to_words = coords.transpose().inverse().expect("spanning set is a basis");
        let mut centroid = Centroid {
            algebra,
            ideal,
            words,
            generators,
            to_words,
            elements: Vec::new(),
        };
        centroid.elements = centroid.solve();
        centroid
    }

    fn dim(&self) -> usize {
        self.elements.len()
    }

    fn apply_word(&self, word: &[usize], w: &Vector) -> Vector {
        word.iter()
            .rev()
            .fold(w.clone(), |acc, &g| self.algebra.bracket(&self.generators[g], &acc))
    }

    /// Weights `κ` with `v = Σ κ_a b_a`.
    fn word_weights(&self, v: &Vector) -> Vector {
        let c = self.ideal.coordinates_of(v).expect("vector lies in ideal");
        self.to_words.mul_vec(&Vector::new(c))
    }

    /// `T_w(v)` given the precomputed images `W_a(w)`.
    fn apply(&self, images: &[Vector], v: &Vector) -> Vector {
        let kappa = self.word_weights(v);
        let mut out = Vector::zeros(self.algebra.dim());
        for (a, k) in kappa.iter().enumerate() {
            out.add_scaled(k, &images[a]);
        }
        out
    }

    fn images(&self, w: &Vector) -> Vec<Vector> {
        self.words.iter().map(|word| self.apply_word(word, w)).collect()
    }

    fn solve(&self) -> Vec<Vector> {
        let d = self.ideal.dim();
        let n = self.algebra.dim();
        let basis = self.ideal.basis();
        let images: Vec<Vec<Vector>> = basis.iter().map(|s| self.images(s)).collect();
        let mut system = Matrix::zeros(0, d);
        for gen in &self.generators {
            let mut block = Matrix::zeros(0, d);
            for a in 0..self.words.len() {
                let b_a = self.apply_word(&self.words[a], &self.ideal.basis_vector(0));
                let u = self.algebra.bracket(gen, &b_a);
                let mut constraint = Matrix::zeros(n, d);
                for (c, img) in images.iter().enumerate() {
                    let lhs = self.apply(img, &u);
                    let rhs = self.algebra.bracket(gen, &img[a]);
                    constraint.set_column(c, &(&lhs - &rhs));
                }
                block = block.vstack(&constraint).rref().0;
            }
            system = system.vstack(&block).rref().0;
        }
        system
            .kernel()
            .iter()
            .map(|omega| self.ideal.combine(omega.coords()))
            .collect()
    }

    /// Matrix of `T_w` on the ideal's echelon coordinates.
    fn operator(&self, w: &Vector) -> Matrix {
        let d = self.ideal.dim();
        let images = self.images(w);
        let mut m = Matrix::zeros(d, d);
        for c in 0..d {
            let v = self.apply(&images, &self.ideal.basis_vector(c));
            let coords = self.ideal.coordinates_of(&v).expect("centroid preserves ideal");
            m.set_column(c, &Vector::new(coords));
        }
        m
    }

    /// A proper nonzero eigenspace of some centroid element, if one has a
    /// rational eigenvalue that splits the ideal.
    fn rational_eigenspace(&self) -> Option<SubspaceBasis> {
        let candidates = self.elements.iter().cloned().chain(
            self.elements
                .windows(2)
                .map(|p| &p[0] + &p[1]),
        );
        let v_space = SubspaceBasis::span(self.algebra.dim(), &self.elements);
        for w in candidates {
            // eigenvalues agree with those of T_w restricted to span(elements)
            let images = self.images(&w);
            let r = v_space.dim();
            let mut small = Matrix::zeros(r, r);
            for c in 0..r {
                let v = self.apply(&images, &v_space.basis_vector(c));
                let coords = v_space.coordinates_of(&v)?;
                small.set_column(c, &Vector::new(coords));
            }
            let roots = poly::rational_roots(&poly::char_poly(&small))?;
            if roots.len() < 2 {
                continue;
            }
            let t = self.operator(&w);
            let d = self.ideal.dim();
            for lambda in roots {
                let shifted = t.sub(&Matrix::identity(d).scale(&lambda));
                let ker = shifted.kernel();
                if !ker.is_empty() && ker.len() < d {
                    let vecs: Vec<Vector> =
                        ker.iter().map(|c| self.ideal.combine(c.coords())).collect();
                    return Some(SubspaceBasis::span(self.algebra.dim(), &vecs));
                }
            }
        }
        None
    }
}

/// Greedy generating set of `sub` as a Lie algebra, drawn from its echelon
/// basis.
fn algebra_generators(algebra: &LieAlgebra, sub: &SubspaceBasis) -> Vec<Vector> {
    let n = algebra.dim();
    let mut gens = Vec::new();
    let mut closure = SubspaceBasis::zero(n);
    for v in sub.basis() {
        if closure.contains(&v) {
            continue;
        }
        gens.push(v.clone());
        closure = span_closure(algebra, &closure.sum(&SubspaceBasis::span(n, &[v])));
        if closure.dim() == sub.dim() {
            break;
        }
    }
    gens
}

/// Whether every bracket between the two subspaces vanishes.
pub fn commute(algebra: &LieAlgebra, a: &SubspaceBasis, b: &SubspaceBasis) -> bool {
    a.basis()
        .iter()
        .all(|x| b.basis().iter().all(|y| algebra.bracket(x, y).is_zero()))
}

pub(crate) fn scalar_multiple_of_identity(m: &Matrix) -> Option<Scalar> {
    let n = m.nrows();
    if n == 0 {
        return Some(Scalar::zero());
    }
    let c = m[(0, 0)].clone();
    (*m == Matrix::identity(n).scale(&c)).then_some(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::MatrixBasis;
    use crate::liealg::scalar::int;

    fn heisenberg() -> LieAlgebra {
        LieAlgebra::new(3, vec!["X".into(), "Y".into(), "Z".into()], &[(0, 1, 2, int(1))]).unwrap()
    }

    #[test]
    fn heisenberg_center_and_derived() {
        let h = heisenberg();
        assert_eq!(center(&h), SubspaceBasis::coordinate(3, &[2]));
        assert_eq!(derived_subalgebra(&h), SubspaceBasis::coordinate(3, &[2]));
        assert!(matches!(simple_ideal_decomposition(&h), Err(LieError::NotCompactType(_))));
    }

    #[test]
    fn so4_splits_into_two_so3() {
        let so4 = MatrixBasis::so(4).lie_algebra().unwrap();
        let d = simple_ideal_decomposition(&so4).unwrap();
        assert!(d.center.is_zero());
        assert_eq!(d.simple_ideals.len(), 2);
        assert!(d.simple_ideals.iter().all(|s| s.dim() == 3 && so4.is_ideal(s)));
        assert!(commute(&so4, &d.simple_ideals[0], &d.simple_ideals[1]));
        // E12 + E34 and E12 - E34
        let plus = Vector::from_ints(&[1, 0, 0, 0, 0, 1]);
        let minus = Vector::from_ints(&[1, 0, 0, 0, 0, -1]);
        assert!(d.simple_ideals.iter().any(|s| s.contains(&plus)));
        assert!(d.simple_ideals.iter().any(|s| s.contains(&minus)));
    }

    #[test]
    fn su3_is_simple() {
        let su3 = MatrixBasis::su(3).lie_algebra().unwrap();
        let d = simple_ideal_decomposition(&su3).unwrap();
        assert_eq!(d.simple_ideals, vec![SubspaceBasis::full(8)]);
    }

    #[test]
    fn center_of_direct_sum_with_abelian() {
        let g = MatrixBasis::direct_sum(&[MatrixBasis::so(3), MatrixBasis::abelian(2)])
            .lie_algebra()
            .unwrap();
        let d = simple_ideal_decomposition(&g).unwrap();
        assert_eq!(d.center, SubspaceBasis::coordinate(5, &[3, 4]));
        assert_eq!(d.semisimple_part(), SubspaceBasis::coordinate(5, &[0, 1, 2]));
    }

    #[test]
    fn centralizer_and_normalizer_in_so4() {
        let so4 = MatrixBasis::so(4).lie_algebra().unwrap();
        let e12 = SubspaceBasis::coordinate(6, &[0]);
        assert_eq!(centralizer(&so4, &e12), SubspaceBasis::coordinate(6, &[0, 5]));
        assert_eq!(normalizer(&so4, &e12), SubspaceBasis::coordinate(6, &[0, 5]));
    }

    #[test]
    fn largest_ideal() {
        let g = MatrixBasis::direct_sum(&[MatrixBasis::so(3), MatrixBasis::so(3)])
            .lie_algebra()
            .unwrap();
        let second = SubspaceBasis::coordinate(6, &[3, 4, 5]);
        assert_eq!(largest_ideal_in(&g, &second).unwrap(), second);
        let mixed = SubspaceBasis::coordinate(6, &[0, 3, 4, 5]);
        assert_eq!(largest_ideal_in(&g, &mixed).unwrap(), second);
        let so3 = MatrixBasis::so(3).lie_algebra().unwrap();
        assert!(largest_ideal_in(&so3, &SubspaceBasis::coordinate(3, &[0])).unwrap().is_zero());
    }

    #[test]
    fn ideal_generation_and_closure() {
        let so4 = MatrixBasis::so(4).lie_algebra().unwrap();
        let e12 = SubspaceBasis::coordinate(6, &[0]);
        assert!(ideal_generated_by(&so4, &e12).is_full());
        let pair = SubspaceBasis::coordinate(6, &[0, 1]);
        // E12, E13 generate so(3) on indices 1..3
        assert_eq!(span_closure(&so4, &pair), SubspaceBasis::coordinate(6, &[0, 1, 3]));
    }

    #[test]
    fn commutant_of_rotation_is_complex_numbers() {
        let j = Matrix::from_int_rows(&[&[0, -1], &[1, 0]]);
        assert_eq!(commutant(&[j], 2).len(), 2);
        assert_eq!(commutant(&[], 2).len(), 4);
    }
}
