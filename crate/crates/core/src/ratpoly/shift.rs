//! Polynomials in the shift operator `S: g(t) -> g(t - 1)`.

use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::{int, RatPoly, Rational};
use crate::error::{Error, Result};

/// `sum_i a_i S^i`, stored with the same normalization as [`RatPoly`].
#[derive(Clone, Default, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ShiftPoly(RatPoly);

impl ShiftPoly {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        ShiftPoly(RatPoly::new(coeffs))
    }

    pub fn one() -> Self {
        ShiftPoly(RatPoly::one())
    }

    pub fn coeffs(&self) -> &[Rational] {
        self.0.coeffs()
    }

    pub fn as_poly(&self) -> &RatPoly {
        &self.0
    }

    /// `f(S^k)`: the same operator with every exponent multiplied by `k`.
    pub fn dilate(&self, k: usize) -> Result<ShiftPoly> {
        if k == 0 {
            return Err(Error::ZeroStep);
        }
        let Some(deg) = self.0.degree() else {
            return Ok(ShiftPoly::default());
        };
        let mut coeffs = vec![Rational::zero(); deg * k + 1];
        for (i, c) in self.coeffs().iter().enumerate() {
            coeffs[i * k] = c.clone();
        }
        Ok(ShiftPoly::new(coeffs))
    }

    /// `f(S^k) g`, i.e. `sum_i a_i g(t - k i)`.
    pub fn apply(&self, step: usize, g: &RatPoly) -> Result<RatPoly> {
        if step == 0 {
            return Err(Error::ZeroStep);
        }
        let mut out = RatPoly::zero();
        for (i, a) in self.coeffs().iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let shifted = g.translate(&-int((step * i) as u64));
            out += &shifted.scale(a);
        }
        Ok(out)
    }
}

impl From<RatPoly> for ShiftPoly {
    fn from(p: RatPoly) -> Self {
        ShiftPoly(p)
    }
}

impl fmt::Display for ShiftPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.display_in('S').fmt(f)
    }
}

/// `sum_i f_i g(t - k i)`.
pub fn apply_shift(f: &ShiftPoly, step: usize, g: &RatPoly) -> Result<RatPoly> {
    f.apply(step, g)
}

/// `g(M - t)`.
pub fn reflect(g: &RatPoly, m: &Rational) -> RatPoly {
    g.translate(m).negate_var()
}
