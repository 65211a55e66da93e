//! Exact rationals and dense univariate polynomials over them.
//!
//! Every coefficient is a [`Rational`] (arbitrary precision, always reduced).
//! Polynomials are stored densely in ascending order and trimmed so that the
//! highest stored coefficient is nonzero; the zero polynomial has no
//! coefficients. Equality is therefore structural.

mod routh;
mod shift;
mod sturm;

pub use routh::{routh_hurwitz_all_roots_left, Verdict};
pub use shift::{apply_shift, reflect, ShiftPoly};
pub use sturm::{
    all_roots_real_nonpositive, square_free_factorization, square_free_part, sturm_real_root_count,
    sturm_sequence, Endpoint,
};

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, normalized on construction (`den > 0`, lowest terms).
pub type Rational = BigRational;

/// `n/d` as a [`Rational`]. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int<T: Into<BigInt>>(n: T) -> Rational {
    Rational::from_integer(n.into())
}

/// Nearest `f64` to an exact rational, robust to huge numerators and denominators.
pub fn rational_to_f64(x: &Rational) -> f64 {
    if let Some(v) = x.to_f64() {
        if v.is_finite() {
            return v;
        }
    }
    let n = x.numer();
    let d = x.denom();
    let shift = n.bits() as i64 - d.bits() as i64;
    // bring the quotient near 1 before converting
    let (n, d) = if shift > 0 {
        (n.clone(), d << (shift as u64))
    } else {
        (n << ((-shift) as u64), d.clone())
    };
    let q = Rational::new(n, d).to_f64().unwrap_or(f64::NAN);
    q * 2f64.powi(shift as i32)
}

#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct RatPoly {
    coeffs: Vec<Rational>,
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `c * t^k`
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.push(c);
        Self::new(coeffs)
    }

    /// The identity polynomial `t`.
    pub fn var() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    /// `prod (t - r)` over the given roots.
    pub fn from_roots(roots: &[Rational]) -> Self {
        roots.iter().fold(Self::one(), |acc, r| {
            acc * Self::new(vec![-r.clone(), Rational::one()])
        })
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// Coefficient of `t^j` (zero past the degree).
    pub fn coeff(&self, j: usize) -> Rational {
        self.coeffs.get(j).cloned().unwrap_or_else(Rational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// True when every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RatPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(j, c)| c * int(j as u64))
                .collect(),
        )
    }

    /// `p(t + a)` by repeated Horner steps.
    pub fn translate(&self, a: &Rational) -> Self {
        if a.is_zero() {
            return self.clone();
        }
        let mut out: Vec<Rational> = Vec::with_capacity(self.coeffs.len());
        for c in self.coeffs.iter().rev() {
            // out <- out * (t + a) + c
            out.insert(0, Rational::zero());
            for j in 0..out.len() - 1 {
                let carry = &out[j + 1] * a;
                out[j] += carry;
            }
            out[0] += c;
        }
        Self::new(out)
    }

    /// `p(c * t)`
    pub fn dilate(&self, c: &Rational) -> Self {
        let mut power = Rational::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            out.push(a * &power);
            power *= c;
        }
        Self::new(out)
    }

    /// `p(-t)`
    pub fn negate_var(&self) -> Self {
        RatPoly {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(j, c)| if j % 2 == 1 { -c } else { c.clone() })
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| acc * self)
    }

    pub fn div_rem(&self, divisor: &RatPoly) -> Result<(RatPoly, RatPoly)> {
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lc_inv = divisor.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree().filter(|&n| n >= dd) else {
            return Ok((RatPoly::zero(), self.clone()));
        };
        let mut quot = vec![Rational::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let q = &rem[k + dd] * &lc_inv;
            if q.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &q * dc;
            }
            quot[k] = q;
        }
        rem.truncate(dd);
        Ok((RatPoly::new(quot), RatPoly::new(rem)))
    }

    /// Exact quotient; errors if the division leaves a remainder.
    pub fn div_exact(&self, divisor: &RatPoly) -> Result<RatPoly> {
        let (q, r) = self.div_rem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::Parse("polynomial division is not exact".into()))
        }
    }

    /// Monic greatest common divisor (zero iff both inputs are zero).
    pub fn gcd(&self, other: &RatPoly) -> RatPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).expect("nonzero divisor").1;
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    pub fn to_f64_coeffs(&self) -> Vec<f64> {
        self.coeffs.iter().map(rational_to_f64).collect()
    }

    /// Human-readable form in descending powers of `var`.
    pub fn display_in(&self, var: char) -> PolyDisplay<'_> {
        PolyDisplay { poly: self, var }
    }
}

impl fmt::Debug for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatPoly({})", self.display_in('t'))
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.display_in('t').fmt(f)
    }
}

pub struct PolyDisplay<'a> {
    poly: &'a RatPoly,
    var: char,
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (j, c) in self.poly.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            let unit = mag.is_one();
            if j == 0 || !unit {
                if mag.is_integer() {
                    write!(f, "{}", mag.numer())?;
                } else if j == 0 {
                    write!(f, "{}/{}", mag.numer(), mag.denom())?;
                } else {
                    write!(f, "({}/{})", mag.numer(), mag.denom())?;
                }
            }
            match j {
                0 => {}
                1 => write!(f, "{}", self.var)?,
                _ => write!(f, "{}^{}", self.var, j)?,
            }
        }
        Ok(())
    }
}

impl Add<&RatPoly> for &RatPoly {
    type Output = RatPoly;
    fn add(self, rhs: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RatPoly::new((0..n).map(|j| self.coeff(j) + rhs.coeff(j)).collect())
    }
}

impl Sub<&RatPoly> for &RatPoly {
    type Output = RatPoly;
    fn sub(self, rhs: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RatPoly::new((0..n).map(|j| self.coeff(j) - rhs.coeff(j)).collect())
    }
}

impl Mul<&RatPoly> for &RatPoly {
    type Output = RatPoly;
    fn mul(self, rhs: &RatPoly) -> RatPoly {
        if self.is_zero() || rhs.is_zero() {
            return RatPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RatPoly::new(out)
    }
}

impl Neg for &RatPoly {
    type Output = RatPoly;
    fn neg(self) -> RatPoly {
        RatPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for RatPoly {
    type Output = RatPoly;
    fn neg(self) -> RatPoly {
        -&self
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<RatPoly> for RatPoly {
            type Output = RatPoly;
            fn $method(self, rhs: RatPoly) -> RatPoly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&RatPoly> for RatPoly {
            type Output = RatPoly;
            fn $method(self, rhs: &RatPoly) -> RatPoly {
                (&self).$method(rhs)
            }
        }
        impl $tr<RatPoly> for &RatPoly {
            type Output = RatPoly;
            fn $method(self, rhs: RatPoly) -> RatPoly {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl AddAssign<&RatPoly> for RatPoly {
    fn add_assign(&mut self, rhs: &RatPoly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), Rational::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }
}

impl SubAssign<&RatPoly> for RatPoly {
    fn sub_assign(&mut self, rhs: &RatPoly) {
        *self += &(-rhs);
    }
}

impl std::iter::Sum for RatPoly {
    fn sum<I: Iterator<Item = RatPoly>>(iter: I) -> RatPoly {
        iter.fold(RatPoly::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}

// Canonical JSON: {"coeffs": [["num","den"], ...]}, ascending, decimal strings.

#[derive(Serialize, Deserialize)]
struct PolyRepr {
    coeffs: Vec<(String, String)>,
}

pub(crate) fn rational_to_pair(c: &Rational) -> (String, String) {
    (c.numer().to_string(), c.denom().to_string())
}

pub(crate) fn rational_from_pair(num: &str, den: &str) -> Result<Rational> {
    let n: BigInt = num
        .parse()
        .map_err(|_| Error::Parse(format!("bad integer `{num}`")))?;
    let d: BigInt = den
        .parse()
        .map_err(|_| Error::Parse(format!("bad integer `{den}`")))?;
    if d.is_zero() {
        return Err(Error::Parse("zero denominator".into()));
    }
    Ok(Rational::new(n, d))
}

impl Serialize for RatPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        PolyRepr {
            coeffs: self.coeffs.iter().map(rational_to_pair).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RatPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = PolyRepr::deserialize(deserializer)?;
        let coeffs = repr
            .coeffs
            .iter()
            .map(|(n, d)| rational_from_pair(n, d))
            .collect::<Result<Vec<_>>>()
            .map_err(D::Error::custom)?;
        Ok(RatPoly::new(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> RatPoly {
        RatPoly::from_i64s(c)
    }

    #[test]
    fn normalizes_trailing_zeros() {
        let a = RatPoly::new(vec![int(1), int(0), int(0)]);
        assert_eq!(a, RatPoly::one());
        assert_eq!(RatPoly::from_i64s(&[0, 0]).degree(), None);
        assert_eq!(rat(2, -4), rat(-1, 2));
        assert_eq!(rat(0, 7), Rational::zero());
        assert!(rat(0, 7).denom().is_one());
    }

    #[test]
    fn arithmetic() {
        let a = p(&[1, 1]);
        let b = p(&[-1, 1]);
        assert_eq!(&a * &b, p(&[-1, 0, 1]));
        assert_eq!(&a - &a, RatPoly::zero());
        assert_eq!(a.pow(3), p(&[1, 3, 3, 1]));
        assert_eq!(p(&[-1, 0, 1]).derivative(), p(&[0, 2]));
    }

    #[test]
    fn division_and_gcd() {
        let f = p(&[-1, 0, 1]) * p(&[2, 1]);
        let (q, r) = f.div_rem(&p(&[1, 1])).unwrap();
        assert_eq!(q, p(&[-2, 1, 1]));
        assert!(r.is_zero());
        assert_eq!(f.gcd(&p(&[1, 2, 1])), p(&[1, 1]));
        assert_eq!(p(&[1, 2]).div_rem(&RatPoly::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn translate_matches_direct_substitution() {
        let f = p(&[11, -6, 1]);
        let g = f.translate(&int(3));
        assert_eq!(g, p(&[2, 0, 1]));
        assert_eq!(f.dilate(&int(2)), p(&[11, -12, 4]));
        assert_eq!(p(&[0, 1, 1, 1]).negate_var(), p(&[0, -1, 1, -1]));
    }

    #[test]
    fn display_descending() {
        assert_eq!(p(&[11, -6, 1]).to_string(), "t^2 - 6t + 11");
        assert_eq!(p(&[0, 1, 3]).display_in('x').to_string(), "3x^2 + x");
        let half = RatPoly::new(vec![rat(-1, 2), rat(1, 12)]);
        assert_eq!(half.to_string(), "(1/12)t - 1/2");
        assert_eq!(RatPoly::zero().to_string(), "0");
    }

    #[test]
    fn canonical_json() {
        let f = p(&[11, -6, 1]);
        let s = serde_json::to_string(&f).unwrap();
        assert_eq!(s, r#"{"coeffs":[["11","1"],["-6","1"],["1","1"]]}"#);
        let back: RatPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(back, f);
        let bad = serde_json::from_str::<RatPoly>(r#"{"coeffs":[["1","0"]]}"#);
        assert!(bad.is_err());
    }

    #[test]
    fn huge_rational_to_f64() {
        let big = Rational::new(BigInt::from(10).pow(400) * 3, BigInt::from(10).pow(399));
        assert!((rational_to_f64(&big) - 30.0).abs() < 1e-12);
    }

    fn arb_poly() -> impl Strategy<Value = RatPoly> {
        prop::collection::vec((-50i64..50, 1i64..6), 0..7)
            .prop_map(|v| RatPoly::new(v.into_iter().map(|(n, d)| rat(n, d)).collect()))
    }

    proptest! {
        #[test]
        fn json_round_trip(f in arb_poly()) {
            let s = serde_json::to_string(&f).unwrap();
            let back: RatPoly = serde_json::from_str(&s).unwrap();
            prop_assert_eq!(serde_json::to_string(&back).unwrap(), s);
            prop_assert_eq!(back, f);
        }

        #[test]
        fn division_identity(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!b.is_zero());
            let (q, r) = a.div_rem(&b).unwrap();
            prop_assert_eq!(&(&q * &b) + &r, a);
            prop_assert!(r.degree() < b.degree() || r.is_zero());
        }

        #[test]
        fn translate_evaluates_consistently(f in arb_poly(), a in -5i64..5, x in -5i64..5) {
            let g = f.translate(&int(a));
            prop_assert_eq!(g.eval(&int(x)), f.eval(&int(x + a)));
        }
    }
}
