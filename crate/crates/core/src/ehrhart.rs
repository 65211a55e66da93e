//! Quasi-polynomials and the Ehrhart quasi-polynomial of the fundamental alcove.
//!
//! In coweight coordinates the closed alcove dilated by `q` contains exactly
//! the points `(m_1, ..., m_l) in Z_{>=0}^l` with `sum c_i m_i <= q`, so
//! `L_Phi(q)` is a denumerant count and its generating function is
//! `1 / prod_{i=0}^{l} (1 - z^{c_i})`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ratpoly::{int, RatPoly, Rational, ShiftPoly};
use crate::rootdata::{lookup, RootSystemId};

/// A function on `Z` given by one polynomial per residue class mod `period`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "QuasiPolyRepr")]
pub struct QuasiPoly {
    period: usize,
    constituents: Vec<RatPoly>,
}

#[derive(Deserialize)]
struct QuasiPolyRepr {
    period: usize,
    constituents: Vec<RatPoly>,
}

impl TryFrom<QuasiPolyRepr> for QuasiPoly {
    type Error = Error;
    fn try_from(r: QuasiPolyRepr) -> Result<Self> {
        if r.period != r.constituents.len() {
            return Err(Error::Parse(format!(
                "period {} but {} constituents",
                r.period,
                r.constituents.len()
            )));
        }
        QuasiPoly::new(r.constituents)
    }
}

impl QuasiPoly {
    /// Period is the number of constituents; index `d` is the residue class `d`.
    pub fn new(constituents: Vec<RatPoly>) -> Result<Self> {
        if constituents.is_empty() {
            return Err(Error::Parse("a quasi-polynomial needs at least one constituent".into()));
        }
        Ok(QuasiPoly {
            period: constituents.len(),
            constituents,
        })
    }

    /// The same polynomial in every residue class.
    pub fn uniform(p: RatPoly, period: usize) -> Self {
        QuasiPoly {
            period,
            constituents: vec![p; period.max(1)],
        }
    }

    pub fn period(&self) -> usize {
        self.period
    }

    pub fn constituents(&self) -> &[RatPoly] {
        &self.constituents
    }

    /// Residue of `q` in `0..period`, also for negative `q`.
    pub fn residue(&self, q: i64) -> usize {
        q.rem_euclid(self.period as i64) as usize
    }

    pub fn constituent(&self, q: i64) -> &RatPoly {
        &self.constituents[self.residue(q)]
    }

    pub fn value(&self, q: i64) -> Rational {
        self.constituent(q).eval(&int(q))
    }

    /// All constituents share one degree and one leading coefficient.
    pub fn has_constant_leading_term(&self) -> bool {
        let first = &self.constituents[0];
        first.degree().is_some()
            && self
                .constituents
                .iter()
                .all(|c| c.degree() == first.degree() && c.leading() == first.leading())
    }

    /// Smallest period dividing the stored one under which the constituents repeat.
    pub fn minimal_period(&self) -> usize {
        (1..=self.period)
            .filter(|p| self.period.is_multiple_of(*p))
            .find(|&p| (0..self.period).all(|d| self.constituents[d] == self.constituents[d % p]))
            .unwrap_or(self.period)
    }

    /// Constituent-wise map.
    pub fn map(&self, f: impl Fn(usize, &RatPoly) -> RatPoly) -> QuasiPoly {
        QuasiPoly {
            period: self.period,
            constituents: self
                .constituents
                .iter()
                .enumerate()
                .map(|(d, c)| f(d, c))
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GcdPropertyReport {
    pub holds: bool,
    /// Two residues with equal gcd against the period but different constituents.
    pub witness: Option<(usize, usize)>,
}

pub fn gcd_property(l: &QuasiPoly) -> GcdPropertyReport {
    let n = l.period;
    for i in 0..n {
        for j in i + 1..n {
            if i.gcd(&n) == j.gcd(&n) && l.constituents[i] != l.constituents[j] {
                return GcdPropertyReport {
                    holds: false,
                    witness: Some((i, j)),
                };
            }
        }
    }
    GcdPropertyReport {
        holds: true,
        witness: None,
    }
}

/// `#{m in Z_{>=0}^l : sum c_i m_i <= q}` for `q = 0..=upto`, by counting
/// solutions of `sum_{i>=1} c_i m_i = k` (coin-change table) and taking
/// prefix sums, which accounts for the slack variable of mark `c_0 = 1`.
pub fn lattice_counts(marks: &[u32], upto: usize) -> Vec<BigInt> {
    let mut exact = vec![BigInt::zero(); upto + 1];
    exact[0] = BigInt::one();
    for &c in &marks[1..] {
        let c = c as usize;
        for k in c..=upto {
            let prev = exact[k - c].clone();
            exact[k] += prev;
        }
    }
    let mut acc = BigInt::zero();
    exact
        .into_iter()
        .map(|e| {
            acc += e;
            acc.clone()
        })
        .collect()
}

/// Unique polynomial of degree `< points.len()` through the points.
pub fn lagrange_interpolate(points: &[(Rational, Rational)]) -> RatPoly {
    let mut out = RatPoly::zero();
    for (j, (xj, yj)) in points.iter().enumerate() {
        if yj.is_zero() {
            continue;
        }
        let mut basis = RatPoly::one();
        let mut denom = Rational::one();
        for (k, (xk, _)) in points.iter().enumerate() {
            if k != j {
                basis = basis * RatPoly::new(vec![-xk.clone(), Rational::one()]);
                denom *= xj - xk;
            }
        }
        out += &basis.scale(&(yj / denom));
    }
    out
}

/// Ehrhart quasi-polynomial of the closed fundamental alcove, period `n~`.
pub fn ehrhart_qp(id: RootSystemId) -> Result<QuasiPoly> {
    let data = lookup(id)?;
    let n = data.period as usize;
    let l = data.rank;
    let check_upto = 3 * n * (l + 1);
    let counts = lattice_counts(&data.marks, check_upto);
    let constituents = (0..n)
        .map(|d| {
            let pts: Vec<(Rational, Rational)> = (0..=l)
                .map(|j| {
                    let q = d + j * n;
                    (int(q as u64), Rational::from_integer(counts[q].clone()))
                })
                .collect();
            let poly = lagrange_interpolate(&pts);
            for q in (d..=check_upto).step_by(n) {
                if poly.eval(&int(q as u64)) != Rational::from_integer(counts[q].clone()) {
                    return Err(Error::PeriodMismatch {
                        residue: d,
                        q: q as i64,
                    });
                }
            }
            Ok(poly)
        })
        .collect::<Result<Vec<_>>>()?;
    QuasiPoly::new(constituents)
}

/// First `n` coefficients of `1 / prod_{i=0}^{l} (1 - z^{c_i})` by power-series division.
pub fn series_coeffs(id: RootSystemId, n: usize) -> Result<Vec<BigInt>> {
    let data = lookup(id)?;
    // denominator expanded as an integer polynomial
    let mut den = vec![BigInt::one()];
    for &c in &data.marks {
        let c = c as usize;
        let mut next = vec![BigInt::zero(); den.len() + c];
        for (k, a) in den.iter().enumerate() {
            next[k] += a;
            next[k + c] -= a;
        }
        den = next;
    }
    // den[0] == 1, so each step is an exact integer recurrence
    let mut out: Vec<BigInt> = Vec::with_capacity(n);
    for k in 0..n {
        let mut v = if k == 0 { BigInt::one() } else { BigInt::zero() };
        for j in 1..=k.min(den.len() - 1) {
            v -= &den[j] * &out[k - j];
        }
        out.push(v);
    }
    Ok(out)
}

/// `L(-q) = (-1)^l L(q - h)` checked as an identity between constituents.
pub fn check_reciprocity(lq: &QuasiPoly, l: usize, h: usize) -> bool {
    let n = lq.period as i64;
    let sign = if l.is_multiple_of(2) { Rational::one() } else { -Rational::one() };
    let h_rat = int(h as u64);
    (0..n).all(|d| {
        let lhs = lq.constituent(-d).negate_var();
        let rhs = lq.constituent(d - h as i64).translate(&-h_rat.clone()).scale(&sign);
        lhs == rhs
    })
}

/// `f(S^k) L`: constituent `d` is `sum_i f_i L_{(d - k i) mod n}(t - k i)`.
pub fn apply_shift_qp(f: &ShiftPoly, step: usize, lq: &QuasiPoly) -> Result<QuasiPoly> {
    if step == 0 {
        return Err(Error::ZeroStep);
    }
    let constituents = (0..lq.period as i64)
        .map(|d| shifted_constituent(f, step, lq, d))
        .collect();
    Ok(QuasiPoly {
        period: lq.period,
        constituents,
    })
}

/// A single constituent of `f(S^k) L`, without building the others.
pub fn shifted_constituent(f: &ShiftPoly, step: usize, lq: &QuasiPoly, d: i64) -> RatPoly {
    let mut out = RatPoly::zero();
    for (i, a) in f.coeffs().iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        let s = (step * i) as i64;
        let term = lq.constituent(d - s).translate(&-int(s)).scale(a);
        out += &term;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratpoly::rat;

    fn p(c: &[i64]) -> RatPoly {
        RatPoly::from_i64s(c)
    }

    fn g2_constituents() -> Vec<RatPoly> {
        let twelfth = rat(1, 12);
        let f = |c: &[i64]| p(c).scale(&twelfth);
        vec![
            f(&[12, 6, 1]),
            f(&[5, 6, 1]),
            f(&[8, 6, 1]),
            f(&[9, 6, 1]),
            f(&[8, 6, 1]),
            f(&[5, 6, 1]),
        ]
    }

    #[test]
    fn g2_alcove() {
        let l = ehrhart_qp(RootSystemId::G2).unwrap();
        assert_eq!(l.period(), 6);
        assert_eq!(l.constituents(), g2_constituents().as_slice());
        assert!(gcd_property(&l).holds);
        assert!(check_reciprocity(&l, 2, 6));
    }

    #[test]
    fn counts_and_series() {
        let g2 = lookup(RootSystemId::G2).unwrap();
        let counts: Vec<i64> = lattice_counts(&g2.marks, 7)
            .iter()
            .map(|c| i64::try_from(c).unwrap())
            .collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 4, 5, 7, 8]);
        let series = series_coeffs(RootSystemId::G2, 8).unwrap();
        assert_eq!(series, counts.iter().map(|&c| BigInt::from(c)).collect::<Vec<_>>());
        let a1 = series_coeffs(RootSystemId::a(1).unwrap(), 4).unwrap();
        assert_eq!(a1, (1..=4).map(BigInt::from).collect::<Vec<_>>());
    }

    #[test]
    fn e8_small_values() {
        let l = ehrhart_qp(RootSystemId::E8).unwrap();
        assert_eq!(l.value(0), int(1));
        assert_eq!(l.value(1), int(1));
        assert_eq!(l.value(2), int(3));
    }

    #[test]
    fn reciprocity_a1_and_mutation() {
        let a1 = QuasiPoly::uniform(p(&[1, 1]), 1);
        assert!(check_reciprocity(&a1, 1, 2));
        let mut bad = g2_constituents();
        bad[2] = &bad[2] + &RatPoly::one();
        assert!(!check_reciprocity(&QuasiPoly::new(bad).unwrap(), 2, 6));
    }

    #[test]
    fn gcd_property_reports_witness() {
        assert!(gcd_property(&QuasiPoly::uniform(p(&[3]), 4)).holds);
        let mut c = g2_constituents();
        c[5] = p(&[0, 1]);
        let report = gcd_property(&QuasiPoly::new(c).unwrap());
        assert_eq!(report, GcdPropertyReport { holds: false, witness: Some((1, 5)) });
    }

    #[test]
    fn negative_residues_wrap() {
        let l = QuasiPoly::new(g2_constituents()).unwrap();
        assert_eq!(l.residue(-1), 5);
        assert_eq!(l.residue(-6), 0);
        assert_eq!(l.value(-1), rat(0, 1));
    }

    #[test]
    fn worpitzky_g2() {
        let l = ehrhart_qp(RootSystemId::G2).unwrap();
        let r = ShiftPoly::from(p(&[0, 1, 3, 4, 3, 1]));
        let out = apply_shift_qp(&r, 1, &l).unwrap();
        assert!(out.constituents().iter().all(|c| *c == p(&[0, 0, 1])));
        let id = apply_shift_qp(&ShiftPoly::one(), 3, &l).unwrap();
        assert_eq!(id, l);
    }

    #[test]
    fn half_shift_g2_mod_three() {
        let l = ehrhart_qp(RootSystemId::G2).unwrap();
        let r = ShiftPoly::from(p(&[0, 1, 3, 2]));
        let out = apply_shift_qp(&r, 1, &l).unwrap();
        let twelfth = rat(1, 12);
        let by_mod3 = [p(&[0, 10, 6]), p(&[-4, 10, 6]), p(&[4, 10, 6])];
        for d in 0..6 {
            assert_eq!(out.constituents()[d], by_mod3[d % 3].scale(&twelfth), "d = {d}");
        }
        assert_eq!(out.minimal_period(), 3);
    }

    #[test]
    fn json_rejects_inconsistent_period() {
        let s = r#"{"period":2,"constituents":[{"coeffs":[["1","1"]]}]}"#;
        assert!(serde_json::from_str::<QuasiPoly>(s).is_err());
        let q = QuasiPoly::uniform(p(&[1, 2]), 2);
        let json = serde_json::to_string(&q).unwrap();
        assert_eq!(serde_json::from_str::<QuasiPoly>(&json).unwrap(), q);
    }
}
