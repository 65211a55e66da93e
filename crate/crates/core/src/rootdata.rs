//! Catalog of irreducible crystallographic root systems.
//!
//! Each record carries the exponents, the marks `c_0 = 1, c_1, ..., c_l` of the
//! highest root, the Coxeter number, the index of connection `f`, the Weyl
//! group order and the period of the alcove's Ehrhart quasi-polynomial. For
//! rank at most 3 the positive roots are available explicitly, expanded in
//! simple roots, together with the Cartan matrix used to generate them.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E6,
    E7,
    E8,
    F4,
    G2,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootSystemId {
    family: Family,
    rank: usize,
}

impl RootSystemId {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E6 => rank == 6,
            Family::E7 => rank == 7,
            Family::E8 => rank == 8,
            Family::F4 => rank == 4,
            Family::G2 => rank == 2,
        };
        if ok {
            Ok(RootSystemId { family, rank })
        } else {
            Err(Error::InvalidRank {
                family: format!("{family:?}"),
                rank,
            })
        }
    }

    pub const E6: RootSystemId = RootSystemId { family: Family::E6, rank: 6 };
    pub const E7: RootSystemId = RootSystemId { family: Family::E7, rank: 7 };
    pub const E8: RootSystemId = RootSystemId { family: Family::E8, rank: 8 };
    pub const F4: RootSystemId = RootSystemId { family: Family::F4, rank: 4 };
    pub const G2: RootSystemId = RootSystemId { family: Family::G2, rank: 2 };

    pub fn a(rank: usize) -> Result<Self> {
        Self::new(Family::A, rank)
    }
    pub fn b(rank: usize) -> Result<Self> {
        Self::new(Family::B, rank)
    }
    pub fn c(rank: usize) -> Result<Self> {
        Self::new(Family::C, rank)
    }
    pub fn d(rank: usize) -> Result<Self> {
        Self::new(Family::D, rank)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_exceptional(&self) -> bool {
        !matches!(self.family, Family::A | Family::B | Family::C | Family::D)
    }
}

impl fmt::Display for RootSystemId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::A => write!(f, "A{}", self.rank),
            Family::B => write!(f, "B{}", self.rank),
            Family::C => write!(f, "C{}", self.rank),
            Family::D => write!(f, "D{}", self.rank),
            other => write!(f, "{other:?}"),
        }
    }
}

impl FromStr for RootSystemId {
    type Err = Error;

    /// `E6|E7|E8|F4|G2|A<k>|B<k>|C<k>|D<k>`
    fn from_str(s: &str) -> Result<Self> {
        let unknown = || Error::UnknownRootSystem(s.to_string());
        match s {
            "E6" => return Ok(Self::E6),
            "E7" => return Ok(Self::E7),
            "E8" => return Ok(Self::E8),
            "F4" => return Ok(Self::F4),
            "G2" => return Ok(Self::G2),
            _ => {}
        }
        let mut chars = s.chars();
        let family = match chars.next() {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            _ => return Err(unknown()),
        };
        let digits = chars.as_str();
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(unknown());
        }
        let rank = digits.parse().map_err(|_| unknown())?;
        Self::new(family, rank)
    }
}

impl Serialize for RootSystemId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for RootSystemId {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootSystemData {
    pub id: RootSystemId,
    pub rank: usize,
    /// Sorted ascending.
    pub exponents: Vec<u32>,
    /// `c_0, c_1, ..., c_l` with `c_0 = 1`; `c_1..` in table order (ascending).
    pub marks: Vec<u32>,
    pub coxeter_number: u32,
    pub index_of_connection: u32,
    /// Serialized as a decimal string.
    #[serde(with = "decimal")]
    pub weyl_order: BigUint,
    pub period: u32,
    pub rad_period: u32,
}

impl RootSystemData {
    /// `|W| / f`, the value of the generalized Eulerian polynomial at 1.
    pub fn weyl_order_over_f(&self) -> BigUint {
        &self.weyl_order / self.index_of_connection
    }
}

mod decimal {
    use num_bigint::BigUint;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(n: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(n)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

fn factorial(n: usize) -> BigUint {
    (1..=n as u64).map(BigUint::from).product()
}

fn radical(mut n: u32) -> u32 {
    let mut rad = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            rad *= p;
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        rad *= n;
    }
    rad
}

/// Table entry for `id`. Classical families use the closed-form rows.
pub fn lookup(id: RootSystemId) -> Result<RootSystemData> {
    let l = id.rank;
    let pow2 = |k: usize| BigUint::from(1u32) << k;
    let (exponents, tail_marks, f, weyl): (Vec<u32>, Vec<u32>, u32, BigUint) = match id.family {
        Family::A => (
            (1..=l as u32).collect(),
            vec![1; l],
            l as u32 + 1,
            factorial(l + 1),
        ),
        Family::B | Family::C => (
            (1..=l as u32).map(|i| 2 * i - 1).collect(),
            std::iter::once(1).chain(std::iter::repeat_n(2, l - 1)).collect(),
            2,
            pow2(l) * factorial(l),
        ),
        Family::D => {
            let mut e: Vec<u32> = (1..l as u32).map(|i| 2 * i - 1).collect();
            e.push(l as u32 - 1);
            let m: Vec<u32> = std::iter::repeat_n(1, 3.min(l))
                .chain(std::iter::repeat_n(2, l.saturating_sub(3)))
                .collect();
            (e, m, 4, pow2(l - 1) * factorial(l))
        }
        Family::E6 => (
            vec![1, 4, 5, 7, 8, 11],
            vec![1, 1, 2, 2, 2, 3],
            3,
            BigUint::from(2u32.pow(7) * 3u32.pow(4) * 5),
        ),
        Family::E7 => (
            vec![1, 5, 7, 9, 11, 13, 17],
            vec![1, 2, 2, 2, 3, 3, 4],
            2,
            BigUint::from(2u64.pow(10) * 3u64.pow(4) * 5 * 7),
        ),
        Family::E8 => (
            vec![1, 7, 11, 13, 17, 19, 23, 29],
            vec![2, 2, 3, 3, 4, 4, 5, 6],
            1,
            BigUint::from(2u64.pow(14) * 3u64.pow(5) * 5u64.pow(2) * 7),
        ),
        Family::F4 => (vec![1, 5, 7, 11], vec![2, 2, 3, 4], 1, BigUint::from(2u32.pow(7) * 9)),
        Family::G2 => (vec![1, 5], vec![2, 3], 1, BigUint::from(12u32)),
    };
    let mut exponents = exponents;
    exponents.sort_unstable();
    let marks: Vec<u32> = std::iter::once(1).chain(tail_marks).collect();
    let h = marks.iter().sum();
    let period = marks[1..].iter().fold(1, |acc: u32, &c| acc.lcm(&c));
    Ok(RootSystemData {
        id,
        rank: l,
        exponents,
        marks,
        coxeter_number: h,
        index_of_connection: f,
        weyl_order: weyl,
        period,
        rad_period: radical(period),
    })
}

/// Every system covered by the table checks: A2..A8, B2..B8, C2..C8, D4..D8
/// and the five exceptional types.
pub fn catalog() -> Vec<RootSystemId> {
    let mut ids = Vec::new();
    for l in 2..=8 {
        ids.push(RootSystemId::a(l).unwrap());
    }
    for l in 2..=8 {
        ids.push(RootSystemId::b(l).unwrap());
    }
    for l in 2..=8 {
        ids.push(RootSystemId::c(l).unwrap());
    }
    for l in 4..=8 {
        ids.push(RootSystemId::d(l).unwrap());
    }
    ids.extend(exceptional());
    ids
}

pub fn exceptional() -> [RootSystemId; 5] {
    [
        RootSystemId::E6,
        RootSystemId::E7,
        RootSystemId::E8,
        RootSystemId::F4,
        RootSystemId::G2,
    ]
}

/// Positive roots as coefficient vectors in the simple roots, i.e. the linear
/// forms `alpha(x)` in coweight coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PositiveRootForms {
    /// `cartan[i][j] = <alpha_j, alpha_i^vee>`, so that
    /// `s_i(beta) = beta - (sum_j n_j cartan[i][j]) alpha_i`.
    pub cartan: Vec<Vec<i64>>,
    /// Sorted by height; within a height, simple-root index order.
    pub roots: Vec<Vec<i64>>,
}

impl PositiveRootForms {
    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn highest(&self) -> &[i64] {
        self.roots.last().expect("nonempty root system")
    }

    /// Simple reflection `s_i` applied to a coefficient vector.
    pub fn reflect(&self, i: usize, beta: &[i64]) -> Vec<i64> {
        let pairing: i64 = beta.iter().zip(&self.cartan[i]).map(|(n, a)| n * a).sum();
        let mut out = beta.to_vec();
        out[i] -= pairing;
        out
    }
}

pub fn cartan_matrix(id: RootSystemId) -> Result<Vec<Vec<i64>>> {
    let m = match (id.family, id.rank) {
        (Family::A, 1) => vec![vec![2]],
        (Family::A, 2) => vec![vec![2, -1], vec![-1, 2]],
        (Family::A, 3) | (Family::D, 3) => {
            vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]]
        }
        // alpha_1 short: highest root 2a1 + a2
        (Family::B, 2) => vec![vec![2, -2], vec![-1, 2]],
        // alpha_1 long: highest root a1 + 2a2
        (Family::C, 2) => vec![vec![2, -1], vec![-2, 2]],
        (Family::B, 3) => vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -2, 2]],
        (Family::C, 3) => vec![vec![2, -1, 0], vec![-1, 2, -2], vec![0, -1, 2]],
        // alpha_1 short: highest root 3a1 + 2a2
        (Family::G2, 2) => vec![vec![2, -3], vec![-1, 2]],
        _ => return Err(Error::UnsupportedRank(id.to_string())),
    };
    Ok(m)
}

/// The `l h / 2` positive roots, generated as the Weyl orbit of the simple roots.
pub fn positive_roots(id: RootSystemId) -> Result<PositiveRootForms> {
    let cartan = cartan_matrix(id)?;
    let l = cartan.len();
    let mut forms = PositiveRootForms {
        cartan,
        roots: Vec::new(),
    };
    let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut frontier: Vec<Vec<i64>> = (0..l)
        .map(|i| {
            let mut e = vec![0; l];
            e[i] = 1;
            e
        })
        .collect();
    seen.extend(frontier.iter().cloned());
    while let Some(beta) = frontier.pop() {
        for i in 0..l {
            let img = forms.reflect(i, &beta);
            if seen.insert(img.clone()) {
                frontier.push(img);
            }
        }
    }
    let mut roots: Vec<Vec<i64>> = seen
        .into_iter()
        .filter(|r| r.iter().all(|&n| n >= 0))
        .collect();
    roots.sort_by_key(|r| (r.iter().sum::<i64>(), std::cmp::Reverse(r.clone())));
    forms.roots = roots;
    Ok(forms)
}
