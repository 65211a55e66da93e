//! Exact real-root counting with Sturm sequences.

use std::cmp::Ordering;

use num_traits::{Signed, Zero};

use super::{RatPoly, Rational};
use crate::error::{Error, Result};

/// Interval endpoint; infinite ends are evaluated as sign limits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Endpoint {
    NegInfinity,
    Finite(Rational),
    PosInfinity,
}

impl Endpoint {
    fn cmp_to(&self, other: &Endpoint) -> Ordering {
        use Endpoint::*;
        match (self, other) {
            (NegInfinity, NegInfinity) | (PosInfinity, PosInfinity) => Ordering::Equal,
            (NegInfinity, _) | (_, PosInfinity) => Ordering::Less,
            (_, NegInfinity) | (PosInfinity, _) => Ordering::Greater,
            (Finite(a), Finite(b)) => a.cmp(b),
        }
    }

    /// Sign of `p` at this endpoint: -1, 0 or 1.
    fn sign_of(&self, p: &RatPoly) -> i32 {
        let Some(deg) = p.degree() else { return 0 };
        let lc = if p.leading().unwrap().is_positive() { 1 } else { -1 };
        match self {
            Endpoint::PosInfinity => lc,
            Endpoint::NegInfinity => {
                if deg % 2 == 0 {
                    lc
                } else {
                    -lc
                }
            }
            Endpoint::Finite(x) => {
                let v = p.eval(x);
                if v.is_zero() {
                    0
                } else if v.is_positive() {
                    1
                } else {
                    -1
                }
            }
        }
    }
}

/// `p / gcd(p, p')`, made monic. Constants map to `1`.
pub fn square_free_part(p: &RatPoly) -> Result<RatPoly> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let g = p.gcd(&p.derivative());
    Ok(p.div_exact(&g)?.monic())
}

/// Yun's algorithm: pairs `(a_i, i)` with `p = lc * prod a_i^i`, each `a_i`
/// monic, square-free and pairwise coprime. Trivial factors are omitted.
pub fn square_free_factorization(p: &RatPoly) -> Result<Vec<(RatPoly, usize)>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut out = Vec::new();
    if p.is_constant() {
        return Ok(out);
    }
    let dp = p.derivative();
    let a0 = p.gcd(&dp);
    let mut b = p.div_exact(&a0)?;
    let c = dp.div_exact(&a0)?;
    let mut d = &c - &b.derivative();
    let mut i = 1;
    while !b.is_constant() {
        let a = b.gcd(&d);
        let nb = b.div_exact(&a)?;
        let nc = d.div_exact(&a)?;
        d = &nc - &nb.derivative();
        b = nb;
        if !a.is_constant() {
            out.push((a, i));
        }
        i += 1;
    }
    Ok(out)
}

/// Sturm chain of the square-free part of `p`. Each remainder is rescaled by
/// a positive constant, which leaves all sign patterns unchanged.
pub fn sturm_sequence(p: &RatPoly) -> Result<Vec<RatPoly>> {
    let p0 = square_free_part(p)?;
    let p1 = p0.derivative();
    let mut seq = vec![p0];
    if p1.is_zero() {
        return Ok(seq);
    }
    seq.push(p1.scale(&p1.leading().unwrap().abs().recip()));
    loop {
        let n = seq.len();
        let r = seq[n - 2].div_rem(&seq[n - 1])?.1;
        if r.is_zero() {
            break;
        }
        let r = -r.scale(&r.leading().unwrap().abs().recip());
        seq.push(r);
    }
    Ok(seq)
}

fn variations(seq: &[RatPoly], at: &Endpoint) -> usize {
    let signs: Vec<i32> = seq
        .iter()
        .map(|q| at.sign_of(q))
        .filter(|&s| s != 0)
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Number of distinct real roots of `p` in the half-open interval `(lower, upper]`.
pub fn sturm_real_root_count(p: &RatPoly, lower: &Endpoint, upper: &Endpoint) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if lower.cmp_to(upper) != Ordering::Less {
        return Ok(0);
    }
    let seq = sturm_sequence(p)?;
    let va = variations(&seq, lower);
    let vb = variations(&seq, upper);
    Ok(va.saturating_sub(vb))
}

/// Whether every complex root of `p` (with multiplicity) is real and `<= 0`.
pub fn all_roots_real_nonpositive(p: &RatPoly) -> Result<bool> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let zero = Endpoint::Finite(Rational::zero());
    for (factor, _) in square_free_factorization(p)? {
        let deg = factor.degree().unwrap_or(0);
        if sturm_real_root_count(&factor, &Endpoint::NegInfinity, &zero)? != deg {
            return Ok(false);
        }
    }
    Ok(true)
}
