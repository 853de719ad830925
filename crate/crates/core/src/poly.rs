//! Just enough univariate polynomial arithmetic to find rational eigenvalues.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::linalg::{Matrix, Scalar};

/// Coefficients above this size are not factored; callers treat the answer as unknown.
const MAX_FACTOR: u64 = 1_000_000_000_000;

/// Characteristic polynomial `det(tI - A)`, coefficients from constant term up.
/// Faddeev-LeVerrier, exact over the rationals.
pub(crate) fn char_poly(a: &Matrix) -> Vec<Scalar> {
    let n = a.rows();
    let mut coeffs = vec![Scalar::zero(); n + 1];
    coeffs[n] = Scalar::one();
    let mut m = Matrix::zeros(n, n);
    for k in 1..=n {
        m = a.mul(&m).add(&Matrix::identity(n).scale(&coeffs[n - k + 1]));
        let am = a.mul(&m);
        coeffs[n - k] = -am.trace() / Scalar::from_integer(BigInt::from(k));
    }
    coeffs
}

pub(crate) fn eval(coeffs: &[Scalar], x: &Scalar) -> Scalar {
    coeffs.iter().rev().fold(Scalar::zero(), |acc, c| acc * x + c)
}

/// All rational roots, or `None` when the coefficients are too large to
/// enumerate divisors of.
pub(crate) fn rational_roots(coeffs: &[Scalar]) -> Option<Vec<Scalar>> {
    let lcm = coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let mut ints: Vec<BigInt> = coeffs
        .iter()
        .map(|c| (c * Scalar::from_integer(lcm.clone())).to_integer())
        .collect();
    while ints.last().is_some_and(Zero::is_zero) {
        ints.pop();
    }
    let mut roots = Vec::new();
    if ints.len() <= 1 {
        return Some(roots);
    }
    let low = ints.iter().position(|c| !c.is_zero()).unwrap();
    if low > 0 {
        roots.push(Scalar::zero());
        ints.drain(..low);
    }
    if ints.len() <= 1 {
        return Some(roots);
    }
    let constant = ints[0].abs().to_u64().filter(|&c| c <= MAX_FACTOR)?;
    let leading = ints.last().unwrap().abs().to_u64().filter(|&c| c <= MAX_FACTOR)?;
    let coeffs: Vec<Scalar> = ints.into_iter().map(Scalar::from_integer).collect();
    for p in divisors(constant) {
        for q in divisors(leading) {
            for sign in [1i64, -1] {
                let cand = Scalar::new(BigInt::from(p) * sign, BigInt::from(q));
                if eval(&coeffs, &cand).is_zero() && !roots.contains(&cand) {
                    roots.push(cand);
                }
            }
        }
    }
    Some(roots)
}

fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}
