//! Exact arithmetic in the circle-with-zero monoid.
//!
//! Values are either the absorbing zero or a rational rotation `p/q`,
//! standing for the root of unity `e^(2πi·p/q)`. Every value that arises
//! from a finite monoid has finite order, so this representation is
//! lossless and equality is decidable without tolerances.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use crate::error::{Error, Result};

/// An element of the circle group with an absorbing zero adjoined.
///
/// `Turn(p, q)` is kept reduced: `gcd(p, q) = 1` and `0 ≤ p < q`. Construct
/// turns through [`DotCircle::turn`] so the invariant holds; `Turn(0, 1)` is
/// the multiplicative unit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DotCircle {
    Zero,
    Turn(u64, u64),
}

pub use DotCircle::{Turn, Zero};

impl DotCircle {
    /// The multiplicative unit `1 = e^0`.
    pub const ONE: DotCircle = Turn(0, 1);

    /// Rotation by `num/den` of a full turn, reduced into `[0, 1)`.
    pub fn turn(num: u64, den: u64) -> DotCircle {
        assert!(den > 0, "rotation denominator must be positive");
        let num = num % den;
        let g = num.gcd(&den);
        Turn(num / g, den / g)
    }

    pub fn is_zero(self) -> bool {
        matches!(self, Zero)
    }

    pub fn is_one(self) -> bool {
        self == Self::ONE
    }

    /// Complex multiplication: zero is absorbing, turns add rotations.
    pub fn mul(self, other: DotCircle) -> DotCircle {
        match (self, other) {
            (Zero, _) | (_, Zero) => Zero,
            (Turn(p1, q1), Turn(p2, q2)) => {
                // p1/q1 + p2/q2 mod 1, over the common denominator
                let den = q1 * q2;
                DotCircle::turn(p1 * q2 + p2 * q1, den)
            }
        }
    }

    /// The unique semigroup inverse: conjugation on turns, zero on zero.
    ///
    /// Satisfies `a·inv(a)·a = a` and `inv(a)·a·inv(a) = inv(a)`.
    pub fn inv(self) -> DotCircle {
        match self {
            Zero => Zero,
            Turn(0, 1) => Self::ONE,
            Turn(p, q) => Turn(q - p, q),
        }
    }

    /// Repeated multiplication. `pow(a, 0)` is `1` by convention even for
    /// zero; callers must special-case `Zero` where `0⁰` matters.
    pub fn pow(self, k: u64) -> DotCircle {
        match self {
            _ if k == 0 => Self::ONE,
            Zero => Zero,
            Turn(p, q) => {
                // (p/q)·k mod 1; reduce through q first so the product fits
                let p = ((p as u128 * k as u128) % q as u128) as u64;
                DotCircle::turn(p, q)
            }
        }
    }

    /// Multiplicative order of a turn (`None` for zero, which has none).
    pub fn order(self) -> Option<u64> {
        match self {
            Zero => None,
            Turn(_, q) => Some(q),
        }
    }

    /// All q-th roots of unity in ascending rotation order.
    pub fn roots_of_unity(q: u64) -> Vec<DotCircle> {
        (0..q).map(|k| DotCircle::turn(k, q)).collect()
    }
}

/// Total order used for canonical sorting: zero first, then turns by
/// rotation value.
impl Ord for DotCircle {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Zero, Zero) => Ordering::Equal,
            (Zero, Turn(..)) => Ordering::Less,
            (Turn(..), Zero) => Ordering::Greater,
            (Turn(p1, q1), Turn(p2, q2)) => (p1 * q2).cmp(&(p2 * q1)),
        }
    }
}

impl PartialOrd for DotCircle {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for DotCircle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Zero => write!(f, "0"),
            Turn(p, q) => write!(f, "{p}/{q}"),
        }
    }
}

impl FromStr for DotCircle {
    type Err = Error;

    fn from_str(s: &str) -> Result<DotCircle> {
        if s == "0" {
            return Ok(Zero);
        }
        let (p, q) = s
            .split_once('/')
            .ok_or_else(|| bad_value(s, "expected \"0\" or \"p/q\""))?;
        let p: u64 = p.parse().map_err(|_| bad_value(s, "bad numerator"))?;
        let q: u64 = q.parse().map_err(|_| bad_value(s, "bad denominator"))?;
        if q == 0 {
            return Err(bad_value(s, "zero denominator"));
        }
        let v = DotCircle::turn(p, q);
        // reject non-canonical spellings so parsing is the exact inverse
        // of rendering
        if v != Turn(p, q) {
            return Err(bad_value(s, "rotation not reduced"));
        }
        Ok(v)
    }
}

fn bad_value(s: &str, why: &str) -> Error {
    Error::InvalidParameter(format!("circle value {s:?}: {why}"))
}
