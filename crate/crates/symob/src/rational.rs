//! Exact rational coefficients serialized as "p/q" strings.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::str::FromStr;

pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn to_exact_string(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn from_exact_string(s: &str) -> Option<BigRational> {
    match s.split_once('/') {
        Some((n, d)) => {
            let numer = BigInt::from_str(n.trim()).ok()?;
            let denom = BigInt::from_str(d.trim()).ok()?;
            if denom.is_zero() {
                return None;
            }
            Some(BigRational::new(numer, denom))
        }
        None => Some(BigRational::from_integer(BigInt::from_str(s.trim()).ok()?)),
    }
}

pub fn is_one(r: &BigRational) -> bool {
    r.is_one()
}
