//! Characteristic quasi-polynomials of extended Linial arrangements.
//!
//! `chi_quasi(L^m, q) = R(S^{m+1}) L(q)` where `R` is the generalized Eulerian
//! polynomial and `L` the alcove's Ehrhart quasi-polynomial. Replacing `R` by
//! its lower half gives the half quasi-polynomial, whose reflection about
//! `mh/2` recovers the full one.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::ehrhart::{apply_shift_qp, ehrhart_qp, shifted_constituent, QuasiPoly};
use crate::error::{Error, Result};
use crate::eulerian::{generalized_eulerian, truncate_half};
use crate::ratpoly::{int, reflect, RatPoly, Rational, ShiftPoly};
use crate::rootdata::{lookup, RootSystemData, RootSystemId};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdmissibleReport {
    /// Admissible residues in `0..n~`.
    pub residues: Vec<usize>,
    /// Divisors of `n~` whose residue class is admissible (`0` listed as `n~`).
    pub divisors: Vec<usize>,
    pub m0: usize,
}

/// Everything needed to evaluate the arrangement family `L_Phi^m` for any `m`.
#[derive(Clone, Debug)]
pub struct LinialFamily {
    data: RootSystemData,
    eulerian: ShiftPoly,
    half: ShiftPoly,
    ehrhart: QuasiPoly,
}

impl LinialFamily {
    pub fn new(id: RootSystemId) -> Result<Self> {
        let data = lookup(id)?;
        let r = generalized_eulerian(id)?;
        let half = truncate_half(&r, data.coxeter_number as usize)?;
        Ok(LinialFamily {
            eulerian: r.into(),
            half: half.into(),
            ehrhart: ehrhart_qp(id)?,
            data,
        })
    }

    pub fn id(&self) -> RootSystemId {
        self.data.id
    }

    pub fn data(&self) -> &RootSystemData {
        &self.data
    }

    pub fn rank(&self) -> usize {
        self.data.rank
    }

    pub fn coxeter_number(&self) -> usize {
        self.data.coxeter_number as usize
    }

    pub fn period(&self) -> usize {
        self.data.period as usize
    }

    pub fn eulerian(&self) -> &ShiftPoly {
        &self.eulerian
    }

    pub fn half_eulerian(&self) -> &ShiftPoly {
        &self.half
    }

    pub fn ehrhart(&self) -> &QuasiPoly {
        &self.ehrhart
    }

    fn sign(&self) -> Rational {
        if self.rank().is_multiple_of(2) {
            Rational::one()
        } else {
            -Rational::one()
        }
    }

    /// `m * h` as a rational, the reflection center times two.
    pub fn mh(&self, m: usize) -> Rational {
        int((m * self.coxeter_number()) as u64)
    }

    pub fn char_quasi(&self, m: usize) -> QuasiPoly {
        apply_shift_qp(&self.eulerian, m + 1, &self.ehrhart).expect("positive step")
    }

    /// Constituent `d` of `chi_quasi(L^m)` alone.
    pub fn char_constituent(&self, m: usize, d: i64) -> RatPoly {
        shifted_constituent(&self.eulerian, m + 1, &self.ehrhart, d)
    }

    /// The characteristic polynomial: the constituent of residue 1.
    pub fn char_poly(&self, m: usize) -> RatPoly {
        self.char_constituent(m, 1)
    }

    pub fn half_char_quasi(&self, m: usize) -> QuasiPoly {
        apply_shift_qp(&self.half, m + 1, &self.ehrhart).expect("positive step")
    }

    pub fn half_constituent(&self, m: usize, d: i64) -> RatPoly {
        shifted_constituent(&self.half, m + 1, &self.ehrhart, d)
    }

    /// Weyl arrangement: constituent `d` is `(-1)^l (|W|/f) L_{-d}(-t)`.
    pub fn weyl_char_quasi(&self) -> QuasiPoly {
        let scale = self.sign() * Rational::from_integer(BigInt::from(self.data.weyl_order_over_f()));
        self.ehrhart.map(|d, _| {
            self.ehrhart
                .constituent(-(d as i64))
                .negate_var()
                .scale(&scale)
        })
    }

    /// `n~ / gcd(h, n~)`
    pub fn m0(&self) -> usize {
        let n = self.period();
        n / self.coxeter_number().gcd(&n)
    }

    fn is_admissible_by_gcd(&self, d: usize) -> bool {
        let n = self.period();
        let h = self.coxeter_number();
        let g = d.gcd(&n);
        (0..self.m0()).all(|k| ((d + k * h) % n).gcd(&n) == g)
    }

    /// Admissible residues by the gcd criterion.
    pub fn admissible_residues(&self) -> AdmissibleReport {
        let n = self.period();
        let residues: Vec<usize> = (0..n).filter(|&d| self.is_admissible_by_gcd(d)).collect();
        let mut divisors: Vec<usize> = residues
            .iter()
            .map(|&d| if d == 0 { n } else { d })
            .filter(|&d| n.is_multiple_of(d))
            .collect();
        divisors.sort_unstable();
        AdmissibleReport {
            residues,
            divisors,
            m0: self.m0(),
        }
    }

    /// Residues `d` with `L_d = L_{d+kh} = L_{-d+kh}` (constituents of
    /// `chi_quasi(L^m)`) for every `m` in `ms` and `k = 0..m0-1`, checked
    /// directly on the polynomials.
    pub fn admissible_residues_direct(&self, ms: impl IntoIterator<Item = usize> + Clone) -> Vec<usize> {
        let n = self.period() as i64;
        let h = self.coxeter_number() as i64;
        let m0 = self.m0() as i64;
        let quasis: Vec<QuasiPoly> = ms.into_iter().map(|m| self.char_quasi(m)).collect();
        (0..n)
            .filter(|&d| {
                quasis.iter().all(|q| {
                    let base = q.constituent(d);
                    (0..m0).all(|k| q.constituent(d + k * h) == base && q.constituent(-d + k * h) == base)
                })
            })
            .map(|d| d as usize)
            .collect()
    }

    /// `F_d^{(m)} = (1/2m0) sum_{k<m0} (L'_{d+kh} + L'_{-d+kh})` built from the
    /// half quasi-polynomial's constituents.
    pub fn averaged_half(&self, m: usize, d: usize) -> Result<RatPoly> {
        if d >= self.period() || !self.is_admissible_by_gcd(d) {
            return Err(Error::NotAdmissible {
                system: self.id().to_string(),
                residue: d,
            });
        }
        let h = self.coxeter_number() as i64;
        let m0 = self.m0();
        let d = d as i64;
        let sum: RatPoly = (0..m0 as i64)
            .flat_map(|k| [d + k * h, -d + k * h])
            .map(|r| self.half_constituent(m, r))
            .sum();
        Ok(sum.scale(&Rational::new(BigInt::one(), BigInt::from(2 * m0))))
    }

    /// Default symmetric test polynomial `prod (t + e_i)`.
    pub fn default_toy_g(&self) -> RatPoly {
        let roots: Vec<Rational> = self.data.exponents.iter().map(|&e| -int(e)).collect();
        RatPoly::from_roots(&roots)
    }

    /// `R(S^{m+1}) g` for `g` of degree `l` with `g(t - h) = (-1)^l g(-t)`.
    pub fn toy_poly(&self, m: usize, g: Option<&RatPoly>) -> Result<RatPoly> {
        let default = self.default_toy_g();
        let g = g.unwrap_or(&default);
        if g.degree() != Some(self.rank()) {
            return Err(Error::DegreeMismatch {
                expected: self.rank(),
                found: g.degree(),
            });
        }
        let h = int(self.coxeter_number() as u64);
        if g.translate(&-h) != g.negate_var().scale(&self.sign()) {
            return Err(Error::SymmetryViolation);
        }
        self.eulerian.apply(m + 1, g)
    }

    /// `F(t) + (-1)^l F(M - t)`
    pub fn symmetrize(&self, f: &RatPoly, m_times_h: &Rational) -> RatPoly {
        f + &reflect(f, m_times_h).scale(&self.sign())
    }
}

pub fn char_quasi(id: RootSystemId, m: usize) -> Result<QuasiPoly> {
    Ok(LinialFamily::new(id)?.char_quasi(m))
}

pub fn char_poly(id: RootSystemId, m: usize) -> Result<RatPoly> {
    Ok(LinialFamily::new(id)?.char_poly(m))
}

pub fn half_char_quasi(id: RootSystemId, m: usize) -> Result<QuasiPoly> {
    Ok(LinialFamily::new(id)?.half_char_quasi(m))
}

pub fn weyl_char_quasi(id: RootSystemId) -> Result<QuasiPoly> {
    Ok(LinialFamily::new(id)?.weyl_char_quasi())
}

pub fn admissible_residues(id: RootSystemId) -> Result<AdmissibleReport> {
    Ok(LinialFamily::new(id)?.admissible_residues())
}

pub fn averaged_half(id: RootSystemId, m: usize, d: usize) -> Result<RatPoly> {
    LinialFamily::new(id)?.averaged_half(m, d)
}

pub fn toy_poly(id: RootSystemId, m: usize, g: Option<&RatPoly>) -> Result<RatPoly> {
    LinialFamily::new(id)?.toy_poly(m, g)
}

/// True when every constituent is monic with integer coefficients.
pub fn is_monic_integral(q: &QuasiPoly) -> bool {
    q.constituents()
        .iter()
        .all(|c| c.is_integral() && c.leading().is_some_and(|lc| lc.is_one()))
}

/// Checks `c_d(t) = (-1)^l c_{(mh - d) mod n}(mh - t)` for every residue.
pub fn functional_equation_holds(family: &LinialFamily, q: &QuasiPoly, m: usize) -> bool {
    let mh = family.mh(m);
    let mh_i = (m * family.coxeter_number()) as i64;
    (0..q.period() as i64).all(|d| {
        let lhs = q.constituent(d);
        let rhs = reflect(q.constituent(mh_i - d), &mh).scale(&family.sign());
        *lhs == rhs
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratpoly::rat;

    fn p(c: &[i64]) -> RatPoly {
        RatPoly::from_i64s(c)
    }

    #[test]
    fn g2_linial_collapse() {
        let g2 = LinialFamily::new(RootSystemId::G2).unwrap();
        let q = g2.char_quasi(1);
        for d in 0..6 {
            let expect = if d % 2 == 1 { p(&[11, -6, 1]) } else { p(&[14, -6, 1]) };
            assert_eq!(q.constituents()[d], expect, "d = {d}");
        }
        assert_eq!(q.minimal_period(), 2);
        assert_eq!(g2.char_poly(1), p(&[11, -6, 1]));
    }

    #[test]
    fn empty_arrangement() {
        for id in [RootSystemId::G2, RootSystemId::a(3).unwrap(), RootSystemId::F4] {
            let fam = LinialFamily::new(id).unwrap();
            let q = fam.char_quasi(0);
            let tl = RatPoly::monomial(Rational::one(), fam.rank());
            assert!(q.constituents().iter().all(|c| *c == tl));
        }
    }

    #[test]
    fn g2_half_quasi() {
        let g2 = LinialFamily::new(RootSystemId::G2).unwrap();
        let half = g2.half_char_quasi(1);
        let sixth = rat(1, 6);
        for (d, c) in [12, 5, 10, 3, 14, 1].into_iter().enumerate() {
            assert_eq!(half.constituents()[d], p(&[c, -8, 3]).scale(&sixth));
        }
        assert!(!crate::ehrhart::gcd_property(&half).holds);
    }

    #[test]
    fn g2_weyl() {
        let w = weyl_char_quasi(RootSystemId::G2).unwrap();
        let c = w.constituents();
        assert_eq!(c[1], p(&[5, -6, 1]));
        assert_eq!(c[5], p(&[5, -6, 1]));
        assert_eq!(c[2], p(&[8, -6, 1]));
        assert_eq!(c[3], p(&[9, -6, 1]));
        assert_eq!(c[0], p(&[12, -6, 1]));
        let a2 = weyl_char_quasi(RootSystemId::a(2).unwrap()).unwrap();
        assert_eq!(a2.constituents()[0], p(&[2, -3, 1]));
    }

    #[test]
    fn admissible_tables() {
        let rep = admissible_residues(RootSystemId::E7).unwrap();
        assert_eq!((rep.divisors.clone(), rep.m0), (vec![1, 3], 2));
        assert!(rep.residues.contains(&1));
        let g2 = admissible_residues(RootSystemId::G2).unwrap();
        assert_eq!(g2.residues, (0..6).collect::<Vec<_>>());
        assert_eq!(g2.divisors, vec![1, 2, 3, 6]);
    }

    #[test]
    fn averaged_half_g2() {
        let g2 = LinialFamily::new(RootSystemId::G2).unwrap();
        let f = g2.averaged_half(1, 1).unwrap();
        assert_eq!(g2.symmetrize(&f, &int(6)), p(&[11, -6, 1]));
        // 2F - chi is odd about t = 3
        let odd = (f.scale(&int(2)) - p(&[11, -6, 1])).translate(&int(3));
        assert_eq!(odd.negate_var(), -odd);
        let e7 = LinialFamily::new(RootSystemId::E7).unwrap();
        assert!(matches!(e7.averaged_half(1, 2), Err(Error::NotAdmissible { .. })));
        assert!(matches!(e7.averaged_half(1, 12), Err(Error::NotAdmissible { .. })));
    }

    #[test]
    fn toy_defaults_and_symmetry() {
        let e6 = LinialFamily::new(RootSystemId::E6).unwrap();
        let g = e6.default_toy_g();
        let expect = [1, 4, 5, 7, 8, 11]
            .iter()
            .fold(RatPoly::one(), |acc, &e| acc * p(&[e, 1]));
        assert_eq!(g, expect);
        let t0 = e6.toy_poly(0, None).unwrap();
        assert_eq!(t0.degree(), Some(6));
        assert_eq!(t0.leading(), Some(&int(51840 / 3)));
        assert_eq!(e6.toy_poly(1, Some(&p(&[1, 0, 0, 0, 0, 0, 1]))), Err(Error::SymmetryViolation));
        assert!(matches!(e6.toy_poly(1, Some(&p(&[1, 1]))), Err(Error::DegreeMismatch { .. })));
    }
}
