//! Scalar arithmetic in two modes: exact arbitrary-precision rationals and
//! double-precision floats.
//!
//! The mode is a property of the containing space, not of individual values;
//! mixing modes in one arithmetic expression is a programming error and
//! panics. Public entry points validate mode consistency up front and return
//! [`HeisError::ModeMismatch`](crate::HeisError) instead.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Arithmetic mode of a space and everything constructed from it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ScalarMode {
    Exact,
    Float,
}

impl fmt::Display for ScalarMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScalarMode::Exact => write!(f, "exact"),
            ScalarMode::Float => write!(f, "float"),
        }
    }
}

/// A number in one of the two modes.
///
/// Exact scalars serialize as `"num/den"` strings, floats as JSON numbers.
#[derive(Debug, Clone, PartialEq)]
pub enum Scalar {
    Exact(BigRational),
    Float(f64),
}

impl Scalar {
    pub fn zero(mode: ScalarMode) -> Self {
        match mode {
            ScalarMode::Exact => Scalar::Exact(BigRational::zero()),
            ScalarMode::Float => Scalar::Float(0.0),
        }
    }

    pub fn one(mode: ScalarMode) -> Self {
        match mode {
            ScalarMode::Exact => Scalar::Exact(BigRational::one()),
            ScalarMode::Float => Scalar::Float(1.0),
        }
    }

    pub fn from_int(value: i64, mode: ScalarMode) -> Self {
        match mode {
            ScalarMode::Exact => Scalar::Exact(BigRational::from_integer(BigInt::from(value))),
            ScalarMode::Float => Scalar::Float(value as f64),
        }
    }

    /// Exact rational `num/den`. Panics if `den == 0`.
    pub fn from_ratio(num: i64, den: i64) -> Self {
        Scalar::Exact(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn mode(&self) -> ScalarMode {
        match self {
            Scalar::Exact(_) => ScalarMode::Exact,
            Scalar::Float(_) => ScalarMode::Float,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Exact(r) => r.is_zero(),
            Scalar::Float(x) => *x == 0.0,
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Scalar::Exact(r) => r.to_f64().unwrap_or(f64::NAN),
            Scalar::Float(x) => *x,
        }
    }

    pub fn abs(&self) -> Scalar {
        match self {
            Scalar::Exact(r) => Scalar::Exact(r.abs()),
            Scalar::Float(x) => Scalar::Float(x.abs()),
        }
    }

    /// Non-negative integer power, exact in rational mode.
    pub fn powi(&self, exp: u32) -> Scalar {
        match self {
            Scalar::Exact(r) => Scalar::Exact(num::pow::pow(r.clone(), exp as usize)),
            Scalar::Float(x) => Scalar::Float(x.powi(exp as i32)),
        }
    }

    /// |self - other| <= tol, mode-agnostic.
    pub fn approx_eq(&self, other: &Scalar, tol: f64) -> bool {
        (self.to_f64() - other.to_f64()).abs() <= tol
    }

    fn binop(
        a: &Scalar,
        b: &Scalar,
        exact: impl Fn(&BigRational, &BigRational) -> BigRational,
        float: impl Fn(f64, f64) -> f64,
    ) -> Scalar {
        match (a, b) {
            (Scalar::Exact(x), Scalar::Exact(y)) => Scalar::Exact(exact(x, y)),
            (Scalar::Float(x), Scalar::Float(y)) => Scalar::Float(float(*x, *y)),
            _ => panic!("scalar mode mismatch in arithmetic; validate inputs first"),
        }
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        Scalar::binop(self, rhs, |x, y| x + y, |x, y| x + y)
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        Scalar::binop(self, rhs, |x, y| x - y, |x, y| x - y)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        Scalar::binop(self, rhs, |x, y| x * y, |x, y| x * y)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Exact(r) => Scalar::Exact(-r),
            Scalar::Float(x) => Scalar::Float(-x),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Exact(r) => write!(f, "{}/{}", r.numer(), r.denom()),
            Scalar::Float(x) => write!(f, "{x}"),
        }
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Scalar::Exact(r) => serializer.serialize_str(&format!("{}/{}", r.numer(), r.denom())),
            Scalar::Float(x) => serializer.serialize_f64(*x),
        }
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let value = serde_json::Value::deserialize(deserializer)?;
        match value {
            serde_json::Value::Number(n) => {
                let x = n.as_f64().ok_or_else(|| D::Error::custom("non-finite float"))?;
                Ok(Scalar::Float(x))
            }
            serde_json::Value::String(s) => {
                let (num, den) = s
                    .split_once('/')
                    .ok_or_else(|| D::Error::custom("expected \"num/den\""))?;
                let num: BigInt = num.parse().map_err(D::Error::custom)?;
                let den: BigInt = den.parse().map_err(D::Error::custom)?;
                if den.is_zero() {
                    return Err(D::Error::custom("zero denominator"));
                }
                Ok(Scalar::Exact(BigRational::new(num, den)))
            }
            _ => Err(D::Error::custom("expected number or \"num/den\" string")),
        }
    }
}
