use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::de::{self, Deserializer};
use serde::ser::{SerializeMap, Serializer};
use serde::{Deserialize, Serialize};

use super::algebraic::AlgebraicReal;
use super::poly::IntPoly;
use super::ExactError;

/// An exact real number: rational, or an irrational algebraic number.
///
/// Rational values are always stored in the `Rational` variant, so two
/// scalars in different variants are never equal.
#[derive(Clone, Debug)]
pub enum Scalar {
    Rational(BigRational),
    Algebraic(Arc<AlgebraicReal>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Applies a binary operation; division by zero is an error.
pub fn scalar_arith(x: &Scalar, y: &Scalar, op: ArithOp) -> Result<Scalar, ExactError> {
    Ok(match op {
        ArithOp::Add => x + y,
        ArithOp::Sub => x - y,
        ArithOp::Mul => x * y,
        ArithOp::Div => x.checked_div(y)?,
    })
}

pub fn scalar_compare(x: &Scalar, y: &Scalar) -> Ordering {
    x.cmp(y)
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar::Rational(BigRational::one())
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        Scalar::Rational(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    pub fn from_algebraic(a: AlgebraicReal) -> Self {
        Scalar::Algebraic(Arc::new(a))
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(r) => Some(r),
            Scalar::Algebraic(_) => None,
        }
    }

    pub fn is_rational(&self) -> bool {
        matches!(self, Scalar::Rational(_))
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Algebraic(_) => false,
        }
    }

    /// The integer value, if this scalar is an integer.
    pub fn as_integer(&self) -> Option<BigInt> {
        match self {
            Scalar::Rational(r) if r.is_integer() => Some(r.to_integer()),
            _ => None,
        }
    }

    pub fn signum(&self) -> i8 {
        match self {
            Scalar::Rational(r) => super::algebraic::rational_sign(r),
            Scalar::Algebraic(a) => a.signum(),
        }
    }

    pub fn is_positive(&self) -> bool {
        self.signum() > 0
    }

    pub fn is_negative(&self) -> bool {
        self.signum() < 0
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar, ExactError> {
        if other.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        Ok(self * &other.recip_nonzero())
    }

    fn recip_nonzero(&self) -> Scalar {
        match self {
            Scalar::Rational(r) => Scalar::Rational(r.recip()),
            Scalar::Algebraic(a) => Scalar::from_algebraic(a.recip()),
        }
    }

    pub fn recip(&self) -> Result<Scalar, ExactError> {
        if self.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        Ok(self.recip_nonzero())
    }

    pub fn pow(&self, e: u32) -> Scalar {
        let mut acc = Scalar::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn abs(&self) -> Scalar {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    /// Floating-point approximation, for display only.
    pub fn approx_f64(&self) -> f64 {
        match self {
            Scalar::Rational(r) => r.to_f64().unwrap_or(f64::NAN),
            Scalar::Algebraic(a) => a.approx_f64(),
        }
    }

    /// Human-oriented rendering used by table output.
    pub fn display_table(&self) -> String {
        match self {
            Scalar::Rational(r) => format_rational(r),
            Scalar::Algebraic(a) => {
                let (lo, hi) = a.interval();
                format!(
                    "root of {} in [{}, {}] ≈ {:.6}",
                    a.minimal_polynomial(),
                    format_rational(lo),
                    format_rational(hi),
                    a.approx_f64()
                )
            }
        }
    }
}

pub fn format_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<BigRational, ExactError> {
    let s = s.trim();
    let bad = || ExactError::Parse(format!("not a rational: {s:?}"));
    match s.split_once('/') {
        None => Ok(BigRational::from_integer(BigInt::from_str(s).map_err(|_| bad())?)),
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
            let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
            if d.is_zero() {
                return Err(ExactError::DivisionByZero);
            }
            Ok(BigRational::new(n, d))
        }
    }
}

impl From<i64> for Scalar {
    fn from(v: i64) -> Self {
        Scalar::Rational(BigRational::from_integer(BigInt::from(v)))
    }
}

impl From<BigInt> for Scalar {
    fn from(v: BigInt) -> Self {
        Scalar::Rational(BigRational::from_integer(v))
    }
}

impl From<&BigInt> for Scalar {
    fn from(v: &BigInt) -> Self {
        Scalar::Rational(BigRational::from_integer(v.clone()))
    }
}

impl From<BigRational> for Scalar {
    fn from(v: BigRational) -> Self {
        Scalar::Rational(v)
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Scalar {}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => a.cmp(b),
            (Scalar::Algebraic(a), Scalar::Rational(b)) => a.cmp_rational(b),
            (Scalar::Rational(a), Scalar::Algebraic(b)) => b.cmp_rational(a).reverse(),
            (Scalar::Algebraic(a), Scalar::Algebraic(b)) => {
                if Arc::ptr_eq(a, b) {
                    Ordering::Equal
                } else {
                    a.cmp_algebraic(b)
                }
            }
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(r) => Scalar::Rational(-r),
            Scalar::Algebraic(a) => Scalar::from_algebraic(a.neg()),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Algebraic(a), Scalar::Rational(b))
            | (Scalar::Rational(b), Scalar::Algebraic(a)) => {
                if b.is_zero() {
                    Scalar::Algebraic(a.clone())
                } else {
                    Scalar::from_algebraic(a.add_rational(b))
                }
            }
            (Scalar::Algebraic(a), Scalar::Algebraic(b)) => a.add_algebraic(b),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        if let (Scalar::Algebraic(a), Scalar::Algebraic(b)) = (self, rhs) {
            if Arc::ptr_eq(a, b) {
                return Scalar::zero();
            }
        }
        self + &(-rhs)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Algebraic(a), Scalar::Rational(b))
            | (Scalar::Rational(b), Scalar::Algebraic(a)) => {
                if b.is_zero() {
                    Scalar::zero()
                } else if b.is_one() {
                    Scalar::Algebraic(a.clone())
                } else {
                    Scalar::from_algebraic(a.mul_rational(b))
                }
            }
            (Scalar::Algebraic(a), Scalar::Algebraic(b)) => a.mul_algebraic(b),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl std::iter::Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |a, b| a + b)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => write!(f, "{}", format_rational(r)),
            Scalar::Algebraic(a) => write!(f, "{a}"),
        }
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Scalar::Rational(r) => s.serialize_str(&format_rational(r)),
            Scalar::Algebraic(a) => {
                let poly: Vec<String> = a
                    .minimal_polynomial()
                    .coeffs()
                    .iter()
                    .map(|c| c.to_string())
                    .collect();
                let (lo, hi) = a.interval();
                let mut m = s.serialize_map(Some(2))?;
                m.serialize_entry("min_poly", &poly)?;
                m.serialize_entry("interval", &[format_rational(lo), format_rational(hi)])?;
                m.end()
            }
        }
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum ScalarRepr {
    Text(String),
    Algebraic {
        min_poly: Vec<String>,
        interval: [String; 2],
    },
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        match ScalarRepr::deserialize(d)? {
            ScalarRepr::Text(t) => parse_rational(&t).map(Scalar::Rational).map_err(de::Error::custom),
            ScalarRepr::Algebraic { min_poly, interval } => {
                let coeffs = min_poly
                    .iter()
                    .map(|c| BigInt::from_str(c.trim()))
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(de::Error::custom)?;
                let lo = parse_rational(&interval[0]).map_err(de::Error::custom)?;
                let hi = parse_rational(&interval[1]).map_err(de::Error::custom)?;
                AlgebraicReal::new(IntPoly::new(coeffs), lo, hi)
                    .map(Scalar::from_algebraic)
                    .map_err(de::Error::custom)
            }
        }
    }
}
