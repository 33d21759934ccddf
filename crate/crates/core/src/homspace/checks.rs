use crate::liealg::{centralizer, normalizer, Scalar, SubspaceBasis, Vector, Verdict};

use super::{HomError, ReductivePair};

/// Failing triple for `<[X,Y]_m, Z> + <Y, [X,Z]_m> = 0`, indexed in the
/// echelon basis of `m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TripleWitness {
    pub indices: (usize, usize, usize),
    pub x: Vector,
    pub y: Vector,
    pub z: Vector,
    pub defect: Scalar,
}

/// `<[X,Y]_m, Z> + <Y, [X,Z]_m>` scanned over `xs × m × m`, first failure in
/// lexicographic order.
pub(crate) fn skew_scan(pair: &ReductivePair, xs: &[Vector]) -> Verdict<TripleWitness> {
    let basis = pair.m().basis();
    // [X, e]_m is reused across the inner loops
    for (a, x) in xs.iter().enumerate() {
        let images: Vec<Vector> = basis.iter().map(|y| pair.bracket_m(x, y)).collect();
        for (b, y) in basis.iter().enumerate() {
            for (c, z) in basis.iter().enumerate() {
                let defect = pair.inner(&images[b], z) + pair.inner(y, &images[c]);
                if defect != crate::liealg::scalar::zero() {
                    return Verdict::Violated(TripleWitness {
                        indices: (a, b, c),
                        x: x.clone(),
                        y: y.clone(),
                        z: z.clone(),
                        defect,
                    });
                }
            }
        }
    }
    Verdict::Holds
}

pub(crate) fn natural_reductivity(pair: &ReductivePair) -> Verdict<TripleWitness> {
    skew_scan(pair, &pair.m().basis())
}

/// Exhaustive check of the naturally reductive identity on a basis of `m`.
pub fn naturally_reductive_check(pair: &ReductivePair) -> Result<Verdict<TripleWitness>, HomError> {
    pair.require_reductive()?;
    Ok(natural_reductivity(pair))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalizerCheck {
    /// `n = {X : [X, h] ⊆ h}`
    pub normalizer: SubspaceBasis,
    /// First `(X ∈ n, Y ∈ m)` with `[X, Y] ∉ m`, with the bracket.
    pub verdict: Verdict<(Vector, Vector, Vector)>,
}

/// Whether the normalizer algebra of `h` preserves `m`.
pub fn normalizer_invariance_check(pair: &ReductivePair) -> Result<NormalizerCheck, HomError> {
    pair.require_reductive()?;
    let n = normalizer(pair.algebra(), pair.h());
    let mut verdict = Verdict::Holds;
    'outer: for x in n.basis() {
        for y in pair.m().basis() {
            let z = pair.bracket(&x, &y);
            if !pair.m().contains(&z) {
                verdict = Verdict::Violated((x, y, z));
                break 'outer;
            }
        }
    }
    Ok(NormalizerCheck {
        normalizer: n,
        verdict,
    })
}

/// `m^h = {X ∈ m : [h, X] = 0}`
pub fn isotropy_fixed_subspace(pair: &ReductivePair) -> Result<SubspaceBasis, HomError> {
    pair.require_reductive()?;
    Ok(pair.m().intersection(&centralizer(pair.algebra(), pair.h())))
}
