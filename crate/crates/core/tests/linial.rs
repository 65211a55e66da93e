use num_integer::Integer;
use linial_core::ehrhart::gcd_property;
use linial_core::linial::{is_monic_integral, functional_equation_holds, LinialFamily};
use linial_core::ratpoly::{int, reflect, RatPoly, Rational};
use linial_core::rootdata::{catalog, exceptional, RootSystemId};
use linial_core::verify::bruteforce_modq;
use linial_core::Error;
use proptest::prelude::*;

fn families(ids: impl IntoIterator<Item = RootSystemId>) -> Vec<LinialFamily> {
    ids.into_iter().map(|id| LinialFamily::new(id).unwrap()).collect()
}

fn sign(l: usize) -> Rational {
    if l.is_multiple_of(2) {
        int(1)
    } else {
        int(-1)
    }
}

#[test]
fn empty_arrangement_at_m_zero() {
    for fam in families(catalog()) {
        let q = fam.char_quasi(0);
        assert!(q.constituents().iter().all(|c| *c == RatPoly::monomial(int(1), fam.rank())), "{}", fam.id());
    }
}

#[test]
fn weyl_arrangement_factors_for_coprime_residues() {
    for fam in families(catalog()) {
        let w = fam.weyl_char_quasi();
        let roots: Vec<Rational> = fam.data().exponents.iter().map(|&e| int(e)).collect();
        let expected = RatPoly::from_roots(&roots);
        for d in 0..w.period() {
            if d.gcd(&w.period()) == 1 {
                assert_eq!(w.constituents()[d], expected, "{} residue {d}", fam.id());
            }
        }
    }
}

#[test]
fn char_quasi_is_monic_integral_with_gcd_property() {
    for fam in families(catalog()) {
        for m in 1..=3 {
            let q = fam.char_quasi(m);
            assert!(is_monic_integral(&q), "{} m={m}", fam.id());
            assert!(gcd_property(&q).holds, "{} m={m}", fam.id());
            assert!(q.constituents().iter().all(|c| c.degree() == Some(fam.rank())));
        }
    }
}

#[test]
fn functional_equation_across_catalog() {
    for fam in families(catalog()) {
        for m in 0..=3 {
            assert!(functional_equation_holds(&fam, &fam.char_quasi(m), m), "{} m={m}", fam.id());
        }
    }
}

#[test]
fn half_quasi_reflects_to_full() {
    for fam in families(exceptional()) {
        let l = fam.rank();
        for m in 0..=4 {
            let mh = fam.mh(m);
            let mh_i = (m * fam.coxeter_number()) as i64;
            for d in 0..fam.period() as i64 {
                let lhs = fam.char_constituent(m, d);
                let rhs = &fam.half_constituent(m, d) + &reflect(&fam.half_constituent(m, mh_i - d), &mh).scale(&sign(l));
                assert_eq!(lhs, rhs, "{} m={m} d={d}", fam.id());
            }
        }
    }
}

#[test]
fn admissible_residues_direct_agree_with_gcd_criterion() {
    for fam in families(exceptional()) {
        let report = fam.admissible_residues();
        assert_eq!(fam.admissible_residues_direct(1..=4), report.residues, "{}", fam.id());
    }
}

#[test]
fn averaged_half_recovers_constituent() {
    for fam in families(exceptional()) {
        let report = fam.admissible_residues();
        for m in 0..=3 {
            let mh = fam.mh(m);
            for &d in &report.residues {
                let f = fam.averaged_half(m, d).unwrap();
                assert_eq!(fam.symmetrize(&f, &mh), fam.char_constituent(m, d as i64), "{} m={m} d={d}", fam.id());
            }
        }
    }
}

#[test]
fn averaged_half_rejects_inadmissible_residue() {
    let fam = LinialFamily::new(RootSystemId::E7).unwrap();
    let bad = (0..fam.period()).find(|d| !fam.admissible_residues().residues.contains(d)).unwrap();
    assert!(matches!(fam.averaged_half(1, bad), Err(Error::NotAdmissible { .. })));
    assert!(matches!(fam.averaged_half(1, fam.period()), Err(Error::NotAdmissible { .. })));
}

#[test]
fn toy_poly_validates_input() {
    let fam = LinialFamily::new(RootSystemId::G2).unwrap();
    assert!(matches!(fam.toy_poly(1, Some(&RatPoly::var())), Err(Error::DegreeMismatch { .. })));
    assert!(matches!(fam.toy_poly(1, Some(&RatPoly::from_i64s(&[0, 0, 1]))), Err(Error::SymmetryViolation)));
    let g = RatPoly::from_i64s(&[7, 6, 1]);
    let t = fam.toy_poly(2, Some(&g)).unwrap();
    assert_eq!(t.degree(), Some(2));
    // toy output keeps the symmetry about m h / 2
    assert_eq!(reflect(&t, &fam.mh(2)), t);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn char_quasi_counts_complement_points(idx in 0usize..3, m in 0usize..3, extra in 1u64..25) {
        let id: RootSystemId = ["A2", "B2", "G2"][idx].parse().unwrap();
        let fam = LinialFamily::new(id).unwrap();
        let q = (m * fam.coxeter_number()) as u64 + extra;
        let count = bruteforce_modq(id, m, q, false).unwrap();
        prop_assert_eq!(fam.char_quasi(m).value(q as i64), int(count));
    }

    #[test]
    fn char_constituent_matches_full_quasi(idx in 0usize..5, m in 0usize..6, d in -40i64..40) {
        let fam = LinialFamily::new(exceptional()[idx]).unwrap();
        let full = fam.char_quasi(m);
        prop_assert_eq!(&fam.char_constituent(m, d), full.constituent(d));
    }
}
