//! Root localization: numeric roots, exact line and half-plane certificates,
//! limit polynomials, asymptotic tracking and the enumeration oracle.
//!
//! Membership of all roots in the line `Re t = M/2` and strict half-plane
//! bounds are decided over the rationals. Floating point is only used for
//! reporting root coordinates.

use std::f64::consts::PI;

use num_complex::Complex64;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::eulerian::{generalized_eulerian, truncate_half};
use crate::linial::LinialFamily;
use crate::ratpoly::{
    all_roots_real_nonpositive, apply_shift, int, rat, rational_to_f64, routh_hurwitz_all_roots_left,
    square_free_factorization, sturm_real_root_count, Endpoint, RatPoly, Rational, ShiftPoly, Verdict,
};
use crate::rootdata::{lookup, positive_roots, RootSystemId};

const MAX_ITERATIONS: usize = 200;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ComplexRootSet {
    /// Sorted by real part, then imaginary part.
    pub roots: Vec<Complex64>,
    /// `max_i |p(z_i)| / sum_k |a_k| |z_i|^k`, a relative backward error.
    pub residual_bound: f64,
    /// Radius of an inclusion disk around each root.
    pub certified_radius: Vec<f64>,
    pub converged: bool,
    pub iterations: usize,
}

impl ComplexRootSet {
    pub fn max_real_part(&self) -> f64 {
        self.roots.iter().map(|z| z.re).fold(f64::NEG_INFINITY, f64::max)
    }

    pub fn min_real_part(&self) -> f64 {
        self.roots.iter().map(|z| z.re).fold(f64::INFINITY, f64::min)
    }
}

fn horner(coeffs: &[f64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::zero();
    let mut dp = Complex64::zero();
    for &c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}

fn abs_horner(coeffs: &[f64], r: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, c| acc * r + c.abs())
}

/// Unique positive root of `x^n - sum_{k<n} |a_k| x^k` for a monic polynomial.
fn cauchy_radius(monic: &[f64]) -> f64 {
    let n = monic.len() - 1;
    let h = |x: f64| -> f64 {
        x.powi(n as i32) - monic[..n].iter().enumerate().map(|(k, a)| a.abs() * x.powi(k as i32)).sum::<f64>()
    };
    let mut hi = 1.0 + monic[..n].iter().fold(0.0f64, |m, a| m.max(a.abs()));
    if h(0.0) >= 0.0 {
        return f64::MIN_POSITIVE;
    }
    let mut lo = 0.0;
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if h(mid) > 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    hi
}

/// Aberth–Ehrlich iteration on `p`. Never fails; `converged` is false when the
/// iteration limit was hit.
///
/// The polynomial is first translated exactly so that its roots have mean
/// zero and made monic, which keeps the double-precision coefficients small.
pub fn aberth_roots(p: &RatPoly) -> Result<ComplexRootSet> {
    let n = match p.degree() {
        None => return Err(Error::ZeroPolynomial),
        Some(0) => {
            return Err(Error::DegreeMismatch {
                expected: 1,
                found: Some(0),
            })
        }
        Some(n) => n,
    };
    let lc = p.leading().unwrap();
    let center = -p.coeff(n - 1) / (lc * int(n as u64));
    let centered = p.translate(&center).scale(&lc.recip());
    let coeffs = centered.to_f64_coeffs();
    let center_f = rational_to_f64(&center);

    let radius = cauchy_radius(&coeffs).max(1e-300);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(radius, 2.0 * PI * k as f64 / n as f64 + 0.7))
        .collect();

    let at_precision = |z: &[Complex64]| {
        z.iter().all(|&zi| {
            let (v, _) = horner(&coeffs, zi);
            v.norm() <= 4.0 * n as f64 * f64::EPSILON * abs_horner(&coeffs, zi.norm())
        })
    };

    let mut converged = false;
    let mut iterations = 0;
    while iterations < MAX_ITERATIONS {
        iterations += 1;
        let mut max_corr: f64 = 0.0;
        for k in 0..n {
            let (v, dv) = horner(&coeffs, z[k]);
            if v.is_zero() {
                continue;
            }
            let w = v / dv;
            let repulsion: Complex64 = (0..n)
                .filter(|&j| j != k)
                .map(|j| (z[k] - z[j]).inv())
                .sum();
            let corr = w / (Complex64::one() - w * repulsion);
            if corr.is_finite() {
                z[k] -= corr;
                max_corr = max_corr.max(corr.norm());
            }
        }
        if max_corr < 1e-13 * radius || at_precision(&z) {
            converged = true;
            break;
        }
    }

    let mut residual_bound: f64 = 0.0;
    let mut certified_radius = Vec::with_capacity(n);
    for (i, &zi) in z.iter().enumerate() {
        let (v, _) = horner(&coeffs, zi);
        let scale = abs_horner(&coeffs, zi.norm());
        residual_bound = residual_bound.max(if scale > 0.0 { v.norm() / scale } else { 0.0 });
        let sep: f64 = z
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, &zj)| (zi - zj).norm())
            .product();
        certified_radius.push(if sep > 0.0 { n as f64 * v.norm() / sep } else { f64::INFINITY });
    }

    let mut pairs: Vec<(Complex64, f64)> = z
        .into_iter()
        .map(|zi| zi + center_f)
        .zip(certified_radius)
        .collect();
    pairs.sort_by(|a, b| a.0.re.total_cmp(&b.0.re).then(a.0.im.total_cmp(&b.0.im)));
    let (roots, certified_radius) = pairs.into_iter().unzip();
    Ok(ComplexRootSet {
        roots,
        residual_bound,
        certified_radius,
        converged,
        iterations,
    })
}

/// All complex roots of `p`; errors with `NonConvergence` if the iteration stalls.
pub fn find_roots(p: &RatPoly) -> Result<ComplexRootSet> {
    let set = aberth_roots(p)?;
    if set.converged {
        Ok(set)
    } else {
        Err(Error::NonConvergence {
            iterations: set.iterations,
        })
    }
}

pub fn max_real_part(p: &RatPoly) -> Result<f64> {
    Ok(find_roots(p)?.max_real_part())
}

/// `R^{1/2}(S) t^l = sum a'_i (t - i)^l`.
pub fn limit_poly(id: RootSystemId) -> Result<RatPoly> {
    let data = lookup(id)?;
    let half = truncate_half(&generalized_eulerian(id)?, data.coxeter_number as usize)?;
    let tl = RatPoly::monomial(Rational::one(), data.rank);
    apply_shift(&ShiftPoly::from(half), 1, &tl)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    ExactSturm,
    ExactRouth,
    Numeric,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SturmFactor {
    pub degree: usize,
    pub multiplicity: usize,
    /// Distinct real roots in `(-inf, 0]`.
    pub nonpositive_real_roots: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LineCheckReport {
    pub on_line: bool,
    /// `M / 2` as `[num, den]`.
    #[serde(with = "rational_pair")]
    pub center: Rational,
    pub method: Method,
    /// Exact path: whether `g(s) = p(M/2 + s)` has the parity of its degree.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub parity: Option<bool>,
    /// Exact path: `G` with `g(s) = s^e G(s^2)`.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub reduced: Option<RatPoly>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub sturm: Vec<SturmFactor>,
    /// Numeric path: the roots and their largest distance from the line.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub roots: Option<ComplexRootSet>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub max_deviation: Option<f64>,
}

mod rational_pair {
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    use crate::ratpoly::{rational_from_pair, rational_to_pair, Rational};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        rational_to_pair(r).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let (n, den) = <(String, String)>::deserialize(d)?;
        rational_from_pair(&n, &den).map_err(serde::de::Error::custom)
    }
}

/// Exact test that every root of `p` has real part `M/2`.
///
/// With `g(s) = p(M/2 + s)`, all roots lie on the line iff `g` has the parity
/// of its degree and, writing `g(s) = s^e G(s^2)`, every root of `G` is real
/// and non-positive.
pub fn check_on_line_exact(p: &RatPoly, center_times_2: i64) -> Result<LineCheckReport> {
    let center = rat(center_times_2, 2);
    let mut report = LineCheckReport {
        on_line: true,
        center: center.clone(),
        method: Method::ExactSturm,
        parity: None,
        reduced: None,
        sturm: Vec::new(),
        roots: None,
        max_deviation: None,
    };
    let deg = p.degree().ok_or(Error::ZeroPolynomial)?;
    if deg == 0 {
        return Ok(report);
    }
    let g = p.translate(&center);
    let mirrored = g.negate_var();
    let parity_ok = if deg % 2 == 0 { mirrored == g } else { mirrored == -&g };
    report.parity = Some(parity_ok);
    if !parity_ok {
        report.on_line = false;
        return Ok(report);
    }
    let eps = deg % 2;
    let reduced = RatPoly::new(g.coeffs().iter().skip(eps).step_by(2).cloned().collect());
    let zero = Endpoint::Finite(Rational::zero());
    for (factor, multiplicity) in square_free_factorization(&reduced)? {
        report.sturm.push(SturmFactor {
            degree: factor.degree().unwrap_or(0),
            multiplicity,
            nonpositive_real_roots: sturm_real_root_count(&factor, &Endpoint::NegInfinity, &zero)?,
        });
    }
    report.on_line = all_roots_real_nonpositive(&reduced)?;
    report.reduced = Some(reduced);
    Ok(report)
}

/// Numeric counterpart: roots by Aberth iteration, on the line when every root
/// is within `tol * (1 + |M/2|)` of it.
pub fn check_on_line_numeric(p: &RatPoly, center_times_2: i64, tol: f64) -> Result<LineCheckReport> {
    let center = rat(center_times_2, 2);
    let c = center_times_2 as f64 / 2.0;
    let roots = find_roots(p)?;
    let dev = roots.roots.iter().map(|z| (z.re - c).abs()).fold(0.0, f64::max);
    Ok(LineCheckReport {
        on_line: dev <= tol * (1.0 + c.abs()),
        center,
        method: Method::Numeric,
        parity: None,
        reduced: None,
        sturm: Vec::new(),
        roots: Some(roots),
        max_deviation: Some(dev),
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HalfPlaneReport {
    /// Exact Routh–Hurwitz verdict for `Re < H/2`.
    pub verdict: Verdict,
    pub method: Method,
    /// `H/2 - max Re` from the numeric roots.
    pub numeric_margin: f64,
}

impl HalfPlaneReport {
    /// Exact verdict, or the numeric margin when the exact test was inconclusive.
    pub fn holds_with_margin(&self, min_margin: f64) -> bool {
        match self.verdict {
            Verdict::Yes => true,
            Verdict::No => false,
            Verdict::Inconclusive => self.numeric_margin > min_margin,
        }
    }
}

/// Whether every root of `p` satisfies `Re < H/2`, via the Routh array of `p(H/2 + z)`.
pub fn halfplane_exact(p: &RatPoly, bound_times_2: i64) -> Result<HalfPlaneReport> {
    let shift = rat(bound_times_2, 2);
    let moved = p.translate(&shift);
    let verdict = routh_hurwitz_all_roots_left(&moved)?;
    let numeric_margin = if p.is_constant() {
        f64::INFINITY
    } else {
        bound_times_2 as f64 / 2.0 - aberth_roots(p)?.max_real_part()
    };
    Ok(HalfPlaneReport {
        verdict,
        method: if verdict == Verdict::Inconclusive {
            Method::Numeric
        } else {
            Method::ExactRouth
        },
        numeric_margin,
    })
}

/// `#{x in (Z/q)^l : alpha(x) mod q not in {1..m} for every positive root}`.
pub fn bruteforce_modq(id: RootSystemId, m: usize, q: u64, allow_small_q: bool) -> Result<u64> {
    let forms = positive_roots(id)?;
    let h = lookup(id)?.coxeter_number as u64;
    let bound = m as u64 * h;
    if q == 0 || (!allow_small_q && q <= bound) {
        return Err(Error::QTooSmall { q, bound });
    }
    let mut forbidden = vec![false; q as usize];
    for k in 1..=m as u64 {
        forbidden[(k % q) as usize] = true;
    }
    let qi = q as i64;
    let l = forms.rank();
    let mut x = vec![0i64; l];
    let mut count = 0u64;
    loop {
        let free = forms.roots.iter().all(|root| {
            let v: i64 = root.iter().zip(&x).map(|(a, b)| a * b).sum();
            !forbidden[v.rem_euclid(qi) as usize]
        });
        if free {
            count += 1;
        }
        // odometer
        let mut i = 0;
        loop {
            if i == l {
                return Ok(count);
            }
            x[i] += 1;
            if x[i] < qi {
                break;
            }
            x[i] = 0;
            i += 1;
        }
    }
}

/// Smallest over all pairings of the largest paired distance.
pub fn bottleneck_distance(a: &[Complex64], b: &[Complex64]) -> f64 {
    fn search(a: &[Complex64], b: &[Complex64], used: &mut [bool], i: usize, cur: f64, best: &mut f64) {
        if cur >= *best {
            return;
        }
        if i == a.len() {
            *best = cur;
            return;
        }
        for j in 0..b.len() {
            if !used[j] {
                used[j] = true;
                search(a, b, used, i + 1, cur.max((a[i] - b[j]).norm()), best);
                used[j] = false;
            }
        }
    }
    if a.len() != b.len() {
        return f64::INFINITY;
    }
    let mut best = f64::INFINITY;
    search(a, b, &mut vec![false; b.len()], 0, 0.0, &mut best);
    best
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TrackPoint {
    pub m: usize,
    /// Bottleneck distance between scaled roots and limit roots.
    pub distance: f64,
    pub scaled_roots: Vec<Complex64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TrackReport {
    pub residue: usize,
    /// Roots of `F(t) + (-1)^l F(h - t)`.
    pub limit_roots: Vec<Complex64>,
    pub points: Vec<TrackPoint>,
}

/// `F(t) + (-1)^l F(h - t)` for the limit polynomial `F`.
pub fn symmetric_limit_poly(family: &LinialFamily) -> Result<RatPoly> {
    let f = limit_poly(family.id())?;
    Ok(family.symmetrize(&f, &int(family.coxeter_number() as u64)))
}

/// Roots of constituent `d` of `chi_quasi(L^m)`, divided by `m`, against the
/// roots of the symmetric limit polynomial.
pub fn asymptotic_track(family: &LinialFamily, d: usize, m_list: &[usize]) -> Result<TrackReport> {
    if d >= family.period() {
        return Err(Error::Parse(format!("residue {d} outside 0..{}", family.period())));
    }
    let limit_roots = find_roots(&symmetric_limit_poly(family)?)?.roots;
    let points = m_list
        .iter()
        .map(|&m| {
            if m == 0 {
                return Err(Error::Parse("m must be positive for scaling".into()));
            }
            let scaled = family.char_constituent(m, d as i64).dilate(&int(m as u64));
            let roots = find_roots(&scaled)?.roots;
            Ok(TrackPoint {
                m,
                distance: bottleneck_distance(&roots, &limit_roots),
                scaled_roots: roots,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(TrackReport {
        residue: d,
        limit_roots,
        points,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LineScanEntry {
    pub m: usize,
    pub on_line: bool,
}

/// Exact line verdict for `char_poly(m)` at each `m`.
pub fn scan_line(family: &LinialFamily, ms: impl IntoIterator<Item = usize>) -> Result<Vec<LineScanEntry>> {
    ms.into_iter()
        .map(|m| {
            let mh = (m * family.coxeter_number()) as i64;
            let rep = check_on_line_exact(&family.char_poly(m), mh)?;
            Ok(LineScanEntry { m, on_line: rep.on_line })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> RatPoly {
        RatPoly::from_i64s(c)
    }

    fn close(z: Complex64, re: f64, im: f64, tol: f64) -> bool {
        (z.re - re).abs() < tol && (z.im - im).abs() < tol
    }

    #[test]
    fn quadratic_roots() {
        let set = find_roots(&p(&[11, -6, 1])).unwrap();
        let s2 = 2f64.sqrt();
        assert!(close(set.roots[0], 3.0, -s2, 1e-10));
        assert!(close(set.roots[1], 3.0, s2, 1e-10));
        assert!(set.residual_bound < 1e-12);
        assert!(set.certified_radius.iter().all(|&r| r < 1e-10));

        let f = find_roots(&p(&[31, -26, 6])).unwrap();
        let im = 17f64.sqrt() / 6.0;
        assert!(close(f.roots[0], 13.0 / 6.0, -im, 1e-10));
        assert!(close(f.roots[1], 13.0 / 6.0, im, 1e-10));
    }

    #[test]
    fn multiple_roots_still_converge() {
        let f = p(&[1, 1]).pow(3) * p(&[-2, 1]);
        let set = find_roots(&f).unwrap();
        assert!((set.max_real_part() - 2.0).abs() < 1e-9);
        assert!((set.min_real_part() + 1.0).abs() < 1e-4);
        assert!(find_roots(&p(&[4])).is_err());
    }

    #[test]
    fn line_examples() {
        let ok = check_on_line_exact(&p(&[11, -6, 1]), 6).unwrap();
        assert!(ok.on_line);
        assert_eq!(ok.reduced, Some(p(&[2, 1])));
        assert!(!check_on_line_exact(&p(&[8, -6, 1]), 6).unwrap().on_line);
        assert!(check_on_line_exact(&p(&[5]), 6).unwrap().on_line);
        assert!(check_on_line_exact(&p(&[-3, 1]), 6).unwrap().on_line);
        // odd M: roots 5/2 +- i
        let f = RatPoly::new(vec![rat(29, 4), int(-5), int(1)]);
        assert!(check_on_line_exact(&f, 5).unwrap().on_line);
        // parity failure
        let bad = check_on_line_exact(&p(&[1, 1, 1]), 6).unwrap();
        assert_eq!(bad.parity, Some(false));
        assert!(!bad.on_line);
    }

    #[test]
    fn halfplane_examples() {
        let g2 = limit_poly(RootSystemId::G2).unwrap();
        assert_eq!(g2, p(&[31, -26, 6]));
        assert_eq!(halfplane_exact(&g2, 6).unwrap().verdict, Verdict::Yes);
        assert_eq!(halfplane_exact(&p(&[-4, 1]), 6).unwrap().verdict, Verdict::No);
        // roots exactly on the boundary are inconclusive
        let rep = halfplane_exact(&p(&[10, -6, 1]), 6).unwrap();
        assert_eq!(rep.verdict, Verdict::Inconclusive);
        assert!(!rep.holds_with_margin(0.0));
    }

    #[test]
    fn bruteforce_guards() {
        assert!(matches!(
            bruteforce_modq(RootSystemId::G2, 1, 6, false),
            Err(Error::QTooSmall { .. })
        ));
        assert!(bruteforce_modq(RootSystemId::G2, 1, 6, true).is_ok());
        assert!(matches!(
            bruteforce_modq(RootSystemId::E6, 1, 50, false),
            Err(Error::UnsupportedRank(_))
        ));
        assert_eq!(bruteforce_modq(RootSystemId::G2, 0, 9, false).unwrap(), 81);
        assert_eq!(bruteforce_modq(RootSystemId::G2, 1, 7, false).unwrap(), 49 - 42 + 11);
        assert_eq!(bruteforce_modq(RootSystemId::G2, 1, 8, false).unwrap(), 64 - 48 + 14);
    }

    #[test]
    fn bottleneck() {
        let a = [Complex64::new(0.0, 0.0), Complex64::new(10.0, 0.0)];
        let b = [Complex64::new(10.5, 0.0), Complex64::new(0.25, 0.0)];
        assert!((bottleneck_distance(&a, &b) - 0.5).abs() < 1e-15);
    }
}
