//! Exact Routh–Hurwitz test for the open left half-plane.

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{RatPoly, Rational};
use crate::error::{Error, Result};

/// Three-valued outcome of an exact test.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Verdict {
    #[serde(rename = "true")]
    Yes,
    #[serde(rename = "false")]
    No,
    #[serde(rename = "inconclusive")]
    Inconclusive,
}

/// Whether all roots of `p` satisfy `Re < 0`.
///
/// Mixed coefficient signs give `No` immediately. Otherwise the Routh array is
/// built over the rationals; a sign change in the first column gives `No`,
/// a zero pivot (including a vanishing row) gives `Inconclusive`.
pub fn routh_hurwitz_all_roots_left(p: &RatPoly) -> Result<Verdict> {
    let n = p.degree().ok_or(Error::ZeroPolynomial)?;
    if n == 0 {
        return Ok(Verdict::Yes);
    }
    let has_pos = p.coeffs().iter().any(Signed::is_positive);
    let has_neg = p.coeffs().iter().any(Signed::is_negative);
    if has_pos && has_neg {
        return Ok(Verdict::No);
    }

    let width = n / 2 + 1;
    let row_from = |start: usize| -> Vec<Rational> {
        (0..width)
            .map(|j| {
                start
                    .checked_sub(2 * j)
                    .map(|k| p.coeff(k))
                    .unwrap_or_else(Rational::zero)
            })
            .collect()
    };
    let mut prev = row_from(n);
    let mut cur = row_from(n - 1);
    let reference_positive = prev[0].is_positive();

    for _ in 1..=n {
        let pivot = cur[0].clone();
        if pivot.is_zero() {
            return Ok(Verdict::Inconclusive);
        }
        if pivot.is_positive() != reference_positive {
            return Ok(Verdict::No);
        }
        let next: Vec<Rational> = (0..width)
            .map(|j| {
                let a = prev.get(j + 1).cloned().unwrap_or_else(Rational::zero);
                let b = cur.get(j + 1).cloned().unwrap_or_else(Rational::zero);
                (&pivot * a - &prev[0] * b) / &pivot
            })
            .collect();
        prev = std::mem::replace(&mut cur, next);
    }
    Ok(Verdict::Yes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratpoly::int;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> RatPoly {
        RatPoly::from_i64s(c)
    }

    #[test]
    fn examples() {
        assert_eq!(routh_hurwitz_all_roots_left(&p(&[1, 1])).unwrap(), Verdict::Yes);
        assert_eq!(routh_hurwitz_all_roots_left(&p(&[-1, 0, 1])).unwrap(), Verdict::No);
        assert_eq!(
            routh_hurwitz_all_roots_left(&p(&[1, 0, 1])).unwrap(),
            Verdict::Inconclusive
        );
        assert_eq!(routh_hurwitz_all_roots_left(&RatPoly::zero()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn classic_third_order() {
        // t^3 + t^2 + 2t + 8 has roots -2 and 0.5 +- i*1.936
        assert_eq!(routh_hurwitz_all_roots_left(&p(&[8, 2, 1, 1])).unwrap(), Verdict::No);
        // (t+1)(t+2)(t+3)
        assert_eq!(routh_hurwitz_all_roots_left(&p(&[6, 11, 6, 1])).unwrap(), Verdict::Yes);
        // -(t+1)^2 : negative leading coefficient still stable
        assert_eq!(routh_hurwitz_all_roots_left(&p(&[-1, -2, -1])).unwrap(), Verdict::Yes);
    }

    proptest! {
        // Roots in the left half-plane planted as real roots and complex pairs.
        #[test]
        fn planted_left_roots_are_accepted(
            reals in prop::collection::vec(1i64..6, 0..3),
            pairs in prop::collection::vec((1i64..5, 1i64..5), 0..3),
        ) {
            prop_assume!(!reals.is_empty() || !pairs.is_empty());
            let mut f = RatPoly::one();
            for r in &reals {
                f = f * p(&[*r, 1]);
            }
            for (a, b) in &pairs {
                // (t + a)^2 + b^2
                f = f * RatPoly::new(vec![int(a * a + b * b), int(2 * a), int(1)]);
            }
            prop_assert_eq!(routh_hurwitz_all_roots_left(&f).unwrap(), Verdict::Yes);
            // mirror one real factor into the right half-plane
            let g = f * p(&[-1, 1]);
            prop_assert_eq!(routh_hurwitz_all_roots_left(&g).unwrap(), Verdict::No);
        }
    }
}
