//! Characteristic polynomials and rational roots over Q.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::matrix::Matrix;
use super::scalar::Scalar;

/// Coefficients in increasing degree.
pub type Poly = Vec<Scalar>;

/// Characteristic polynomial `det(x I - A)` by Faddeev–LeVerrier.
pub fn char_poly(a: &Matrix) -> Poly {
    assert!(a.is_square());
    let n = a.nrows();
    let mut coeffs = vec![Scalar::zero(); n + 1];
    coeffs[n] = Scalar::one();
    let mut m = Matrix::zeros(n, n);
    for k in 1..=n {
        let mut next = a.mul(&m);
        let c = coeffs[n - k + 1].clone();
        for i in 0..n {
            next[(i, i)] += &c;
        }
        m = next;
        let t = a.mul(&m).trace();
        coeffs[n - k] = -t / Scalar::from_integer(BigInt::from(k));
    }
    coeffs
}

pub fn eval(p: &Poly, x: &Scalar) -> Scalar {
    p.iter().rev().fold(Scalar::zero(), |acc, c| acc * x + c)
}

/// Distinct rational roots in increasing order.
///
/// Candidates come from the rational root theorem; `None` means a
/// coefficient was too large to factor by trial division.
pub fn rational_roots(p: &Poly) -> Option<Vec<Scalar>> {
    let mut ints = integer_coeffs(p);
    while ints.len() > 1 && ints.last().is_some_and(Zero::is_zero) {
        ints.pop();
    }
    if ints.len() <= 1 {
        return Some(Vec::new());
    }
    let mut roots = Vec::new();
    if ints[0].is_zero() {
        roots.push(Scalar::zero());
        let shift = ints.iter().take_while(|c| c.is_zero()).count();
        ints.drain(..shift);
    }
    if ints.len() > 1 {
        let lead = ints.last().unwrap().abs();
        let constant = ints[0].abs();
        let ps = divisors(&constant)?;
        let qs = divisors(&lead)?;
        let poly: Poly = ints.iter().map(|c| Scalar::from_integer(c.clone())).collect();
        for p in &ps {
            for q in &qs {
                for sign in [1, -1] {
                    let cand = Scalar::new(BigInt::from(sign) * p, q.clone());
                    if eval(&poly, &cand).is_zero() && !roots.contains(&cand) {
                        roots.push(cand);
                    }
                }
            }
        }
    }
    roots.sort();
    Some(roots)
}

fn integer_coeffs(p: &Poly) -> Vec<BigInt> {
    let lcm = p
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p
        .iter()
        .map(|c| (c * Scalar::from_integer(lcm.clone())).to_integer())
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if g.is_zero() || g.is_one() {
        ints
    } else {
        ints.into_iter().map(|c| c / &g).collect()
    }
}

const TRIAL_LIMIT: u64 = 1_000_000;

/// Positive divisors of `n > 0` by trial division.
fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let mut rest = n.to_u128()?;
    let mut factors: Vec<(u128, u32)> = Vec::new();
    let mut d: u128 = 2;
    while d * d <= rest {
        if d as u64 > TRIAL_LIMIT {
            return None;
        }
        let mut e = 0;
        while rest % d == 0 {
            rest /= d;
            e += 1;
        }
        if e > 0 {
            factors.push((d, e));
        }
        d += 1;
    }
    if rest > 1 {
        factors.push((rest, 1));
    }
    let mut divs: Vec<u128> = vec![1];
    for (p, e) in factors {
        let current = divs.clone();
        let mut pk = 1;
        for _ in 0..e {
            pk *= p;
            divs.extend(current.iter().map(|d| d * pk));
        }
    }
    divs.sort_unstable();
    Some(divs.into_iter().map(BigInt::from).collect())
}
