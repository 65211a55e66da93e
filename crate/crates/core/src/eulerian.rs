//! Generalized Eulerian polynomials `R_Phi(x)` and their truncation.

use std::collections::{BTreeMap, HashSet};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ratpoly::{int, rat, RatPoly, Rational};
use crate::rootdata::{lookup, positive_roots, RootSystemId};

/// Rows of the Eulerian triangle `A(n, k)`, `k = 0..n-1`, for `n = 1..=max_n`.
pub fn eulerian_numbers(max_n: usize) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(max_n);
    if max_n == 0 {
        return rows;
    }
    rows.push(vec![BigInt::one()]);
    for n in 2..=max_n {
        let prev = &rows[n - 2];
        let row = (0..n)
            .map(|k| {
                let stay = prev.get(k).map(|a| a * (k + 1)).unwrap_or_default();
                let climb = k
                    .checked_sub(1)
                    .and_then(|j| prev.get(j))
                    .map(|a| a * (n - k))
                    .unwrap_or_default();
                stay + climb
            })
            .collect();
        rows.push(row);
    }
    rows
}

/// `R_{A_l}(x) = x * A_l(x)`: lowest term `x`, degree `l`.
pub fn classical_eulerian(l: usize) -> RatPoly {
    assert!(l >= 1, "rank must be positive");
    let row = eulerian_numbers(l).pop().unwrap();
    let mut coeffs = vec![Rational::zero()];
    coeffs.extend(row.into_iter().map(Rational::from_integer));
    RatPoly::new(coeffs)
}

/// `[c]_x = 1 + x + ... + x^{c-1}`
fn q_integer(c: u32) -> RatPoly {
    RatPoly::new(vec![Rational::one(); c as usize])
}

/// Product formula `[c_0]_x [c_1]_x ... [c_l]_x R_{A_l}(x)`.
pub fn generalized_eulerian(id: RootSystemId) -> Result<RatPoly> {
    let data = lookup(id)?;
    Ok(data
        .marks
        .iter()
        .fold(classical_eulerian(data.rank), |acc, &c| acc * q_integer(c)))
}

/// Lower half of `R` (indices `< h/2`, plus half the middle term when `h` is even).
pub fn truncate_half(r: &RatPoly, h: usize) -> Result<RatPoly> {
    let expected = h.checked_sub(1).ok_or(Error::DegreeMismatch {
        expected: 0,
        found: r.degree(),
    })?;
    if r.degree() != Some(expected) {
        return Err(Error::DegreeMismatch {
            expected,
            found: r.degree(),
        });
    }
    let mut coeffs: Vec<Rational> = (0..h.div_ceil(2)).map(|i| r.coeff(i)).collect();
    if h.is_multiple_of(2) {
        coeffs.push(r.coeff(h / 2) * rat(1, 2));
    }
    Ok(RatPoly::new(coeffs))
}

type Matrix = Vec<Vec<i64>>;

fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum())
                .collect()
        })
        .collect()
}

fn mat_vec(a: &Matrix, v: &[i64]) -> Vec<i64> {
    a.iter()
        .map(|row| row.iter().zip(v).map(|(x, y)| x * y).sum())
        .collect()
}

/// `(1/f) sum_{w in W} x^{asc(w)}` by enumerating the Weyl group (rank <= 3).
///
/// `asc(w)` sums `c_i` over `i in 0..=l` with `w(alpha_i) > 0`, where
/// `alpha_0 = -highest` and `c_0 = 1`.
pub fn asc_oracle(id: RootSystemId) -> Result<RatPoly> {
    let forms = positive_roots(id)?;
    let data = lookup(id)?;
    let l = forms.rank();
    let highest = forms.highest().to_vec();

    // columns of a reflection matrix are the images of the simple roots
    let reflections: Vec<Matrix> = (0..l)
        .map(|i| {
            let mut m = vec![vec![0; l]; l];
            for j in 0..l {
                let mut e = vec![0; l];
                e[j] = 1;
                for (r, v) in forms.reflect(i, &e).into_iter().enumerate() {
                    m[r][j] = v;
                }
            }
            m
        })
        .collect();

    let identity: Matrix = (0..l)
        .map(|i| (0..l).map(|j| i64::from(i == j)).collect())
        .collect();
    let mut group: HashSet<Matrix> = HashSet::from([identity.clone()]);
    let mut frontier = vec![identity];
    while let Some(w) = frontier.pop() {
        for s in &reflections {
            let ws = mat_mul(&w, s);
            if group.insert(ws.clone()) {
                frontier.push(ws);
            }
        }
    }
    debug_assert_eq!(BigInt::from(group.len()), BigInt::from(data.weyl_order.clone()));

    let is_positive = |v: &[i64]| v.iter().all(|&n| n >= 0) && v.iter().any(|&n| n > 0);
    let alpha0: Vec<i64> = highest.iter().map(|n| -n).collect();
    let mut counts: BTreeMap<usize, u64> = BTreeMap::new();
    for w in &group {
        let mut asc = 0usize;
        if is_positive(&mat_vec(w, &alpha0)) {
            asc += 1;
        }
        for i in 0..l {
            let col: Vec<i64> = (0..l).map(|r| w[r][i]).collect();
            if is_positive(&col) {
                asc += highest[i] as usize;
            }
        }
        *counts.entry(asc).or_default() += 1;
    }

    let f = data.index_of_connection as u64;
    let top = counts.keys().next_back().copied().unwrap_or(0);
    let mut coeffs = vec![Rational::zero(); top + 1];
    for (k, n) in counts {
        if n % f != 0 {
            return Err(Error::InexactDivision(data.index_of_connection));
        }
        coeffs[k] = int(n / f);
    }
    Ok(RatPoly::new(coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> RatPoly {
        RatPoly::from_i64s(c)
    }

    #[test]
    fn classical_rows() {
        assert_eq!(classical_eulerian(1), p(&[0, 1]));
        assert_eq!(classical_eulerian(2), p(&[0, 1, 1]));
        assert_eq!(classical_eulerian(6), p(&[0, 1, 57, 302, 302, 57, 1]));
    }

    #[test]
    fn product_formula_g2_e6() {
        assert_eq!(generalized_eulerian(RootSystemId::G2).unwrap(), p(&[0, 1, 3, 4, 3, 1]));
        assert_eq!(
            generalized_eulerian(RootSystemId::E6).unwrap(),
            p(&[0, 1, 61, 537, 1916, 3782, 4686, 3782, 1916, 537, 61, 1])
        );
    }

    #[test]
    fn truncation() {
        let g2 = generalized_eulerian(RootSystemId::G2).unwrap();
        assert_eq!(truncate_half(&g2, 6).unwrap(), p(&[0, 1, 3, 2]));
        let e6 = generalized_eulerian(RootSystemId::E6).unwrap();
        assert_eq!(
            truncate_half(&e6, 12).unwrap(),
            p(&[0, 1, 61, 537, 1916, 3782, 2343])
        );
        assert_eq!(truncate_half(&p(&[0, 1, 1]), 3).unwrap(), p(&[0, 1]));
        // A1: the only term sits in the middle and is halved
        assert_eq!(
            truncate_half(&p(&[0, 1]), 2).unwrap(),
            RatPoly::new(vec![Rational::zero(), rat(1, 2)])
        );
        assert!(matches!(truncate_half(&g2, 5), Err(Error::DegreeMismatch { .. })));
    }

    #[test]
    fn oracle_small_ranks() {
        assert_eq!(asc_oracle(RootSystemId::a(1).unwrap()).unwrap(), p(&[0, 1]));
        assert_eq!(asc_oracle(RootSystemId::a(2).unwrap()).unwrap(), p(&[0, 1, 1]));
        assert_eq!(asc_oracle(RootSystemId::G2).unwrap(), p(&[0, 1, 3, 4, 3, 1]));
        assert!(matches!(asc_oracle(RootSystemId::E6), Err(Error::UnsupportedRank(_))));
    }
}
