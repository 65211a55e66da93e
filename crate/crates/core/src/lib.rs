//! Exact characteristic quasi-polynomials of extended Linial arrangements
//! `L_Phi^m = { alpha = k : alpha in Phi^+, k = 1..m }` over irreducible root
//! systems, together with tools that certify where their roots lie.
//!
//! The pipeline is
//!
//! * [`rootdata`]: exponents, marks, Coxeter number and friends per root system;
//! * [`eulerian`]: generalized Eulerian polynomials `R_Phi` and their halves;
//! * [`ehrhart`]: the alcove's Ehrhart quasi-polynomial `L_Phi` and the
//!   shift-operator action on quasi-polynomials;
//! * [`linial`]: `chi_quasi(L^m) = R_Phi(S^{m+1}) L_Phi` and derived objects;
//! * [`verify`]: exact line/half-plane certificates and numeric roots.
//! * [`suite`]: the end-to-end acceptance checks.
//!
//! All algebra is exact over the rationals ([`ratpoly`]).

pub mod ehrhart;
pub mod error;
pub mod eulerian;
pub mod linial;
pub mod ratpoly;
pub mod rootdata;
pub mod suite;
pub mod verify;

pub use error::{Error, Result};
pub use ratpoly::{RatPoly, Rational, ShiftPoly};
pub use rootdata::RootSystemId;
