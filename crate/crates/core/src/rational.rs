//! Exact rational scalars.
//!
//! Entries are `i128` fractions with overflow-checked arithmetic. An overflow
//! panics with a clear message instead of wrapping silently; in practice the
//! matrices handled here stay tiny (mostly 0 and ±1).

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, CheckedSub, One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Q(Ratio<i128>);

impl Q {
    pub const fn from_int(n: i128) -> Q {
        Q(Ratio::new_raw(n, 1))
    }

    pub fn new(num: i128, den: i128) -> Q {
        assert!(den != 0, "zero denominator");
        Q(Ratio::new(num, den))
    }

    pub fn zero() -> Q {
        Q::from_int(0)
    }

    pub fn one() -> Q {
        Q::from_int(1)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn numer(&self) -> i128 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i128 {
        *self.0.denom()
    }

    pub fn abs(&self) -> Q {
        Q(self.0.abs())
    }

    pub fn recip(&self) -> Q {
        assert!(!self.is_zero(), "division by zero");
        Q(self.0.recip())
    }
}

impl From<i64> for Q {
    fn from(n: i64) -> Q {
        Q::from_int(n as i128)
    }
}

impl From<i32> for Q {
    fn from(n: i32) -> Q {
        Q::from_int(n as i128)
    }
}

impl Add for Q {
    type Output = Q;
    fn add(self, rhs: Q) -> Q {
        Q(self.0.checked_add(&rhs.0).expect("rational overflow in add"))
    }
}

impl Sub for Q {
    type Output = Q;
    fn sub(self, rhs: Q) -> Q {
        Q(self.0.checked_sub(&rhs.0).expect("rational overflow in sub"))
    }
}

impl Mul for Q {
    type Output = Q;
    fn mul(self, rhs: Q) -> Q {
        if self.is_zero() || rhs.is_zero() {
            return Q::zero();
        }
        Q(self.0.checked_mul(&rhs.0).expect("rational overflow in mul"))
    }
}

impl Div for Q {
    type Output = Q;
    fn div(self, rhs: Q) -> Q {
        assert!(!rhs.is_zero(), "division by zero");
        Q(self.0.checked_div(&rhs.0).expect("rational overflow in div"))
    }
}

impl Neg for Q {
    type Output = Q;
    fn neg(self) -> Q {
        Q(-self.0)
    }
}

impl AddAssign for Q {
    fn add_assign(&mut self, rhs: Q) {
        *self = *self + rhs;
    }
}

impl SubAssign for Q {
    fn sub_assign(&mut self, rhs: Q) {
        *self = *self - rhs;
    }
}

impl MulAssign for Q {
    fn mul_assign(&mut self, rhs: Q) {
        *self = *self * rhs;
    }
}

impl Sum for Q {
    fn sum<I: Iterator<Item = Q>>(iter: I) -> Q {
        iter.fold(Q::zero(), |a, b| a + b)
    }
}

impl fmt::Display for Q {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom() == 1 {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for Q {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, thiserror::Error)]
#[error("invalid rational literal {0:?}")]
pub struct ParseQError(String);

impl FromStr for Q {
    type Err = ParseQError;
    fn from_str(s: &str) -> Result<Q, ParseQError> {
        let err = || ParseQError(s.to_string());
        let s = s.trim();
        match s.split_once('/') {
            None => s.parse::<i128>().map(Q::from_int).map_err(|_| err()),
            Some((n, d)) => {
                let n = n.trim().parse::<i128>().map_err(|_| err())?;
                let d = d.trim().parse::<i128>().map_err(|_| err())?;
                if d == 0 {
                    return Err(err());
                }
                Ok(Q::new(n, d))
            }
        }
    }
}

// Rationals travel as "p/q" strings.
impl Serialize for Q {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Q {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Q, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_is_exact() {
        let a = Q::new(1, 3);
        let b = Q::new(1, 6);
        assert_eq!(a + b, Q::new(1, 2));
        assert_eq!(a * b, Q::new(1, 18));
        assert_eq!(a / b, Q::from_int(2));
        assert_eq!(-(a - b), Q::new(-1, 6));
    }

    #[test]
    fn string_round_trip() {
        for s in ["0", "-7", "3/4", "-22/7"] {
            let q: Q = s.parse().unwrap();
            assert_eq!(q.to_string(), s);
        }
        assert!("1/0".parse::<Q>().is_err());
        assert!("x".parse::<Q>().is_err());
    }

    fn q() -> impl proptest::strategy::Strategy<Value = Q> {
        use proptest::prelude::*;
        (-50i128..50, 1i128..50).prop_map(|(n, d)| Q::new(n, d))
    }

    proptest::proptest! {
        #[test]
        fn field_laws(a in q(), b in q(), c in q()) {
            proptest::prop_assert_eq!(a + b, b + a);
            proptest::prop_assert_eq!((a * b) * c, a * (b * c));
            proptest::prop_assert_eq!(a * (b + c), a * b + a * c);
            proptest::prop_assert_eq!(a - a, Q::zero());
            if !a.is_zero() {
                proptest::prop_assert_eq!(a * (Q::one() / a), Q::one());
            }
        }
    }
}
