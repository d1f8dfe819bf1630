//! Exact scalar arithmetic: rationals and real algebraic numbers.
//!
//! Every equality test in the spectral pipeline goes through [`Scalar`]
//! comparison, which is decided symbolically. No floating point is used on
//! the decision path; [`Scalar::approx_f64`] exists only for display.

mod algebraic;
mod factor;
pub mod poly;
mod scalar;

use num_rational::BigRational;
use thiserror::Error;

pub use algebraic::{isolate_irreducible, AlgebraicReal};
pub use factor::{irreducible_factors, is_irreducible};
pub use poly::{IntPoly, RatPoly};
pub use scalar::{format_rational, parse_rational, scalar_arith, scalar_compare, ArithOp, Scalar};

/// Arbitrary-precision rational in lowest terms with positive denominator.
pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("the zero polynomial has no well-defined roots")]
    ZeroPolynomial,
    #[error("invalid algebraic number: {0}")]
    InvalidAlgebraic(String),
    #[error("parse error: {0}")]
    Parse(String),
}

/// All real roots of `p`, distinct, in strictly decreasing order.
///
/// Rational roots come out of the irreducible factorization as linear
/// factors and are returned exactly; every other root is returned as an
/// [`AlgebraicReal`] over its irreducible factor.
pub fn real_roots(p: &IntPoly) -> Result<Vec<Scalar>, ExactError> {
    if p.is_zero() {
        return Err(ExactError::ZeroPolynomial);
    }
    let mut roots = Vec::new();
    for f in irreducible_factors(p) {
        if f.deg() == 1 {
            let c = f.coeffs();
            roots.push(Scalar::Rational(BigRational::new(-c[0].clone(), c[1].clone())));
        } else {
            roots.extend(isolate_irreducible(&f).into_iter().map(Scalar::from_algebraic));
        }
    }
    roots.sort_by(|a, b| b.cmp(a));
    Ok(roots)
}

/// Evaluates an integer polynomial at a scalar.
pub fn eval_at_scalar(p: &IntPoly, x: &Scalar) -> Scalar {
    match x {
        Scalar::Rational(r) => Scalar::Rational(p.eval(r)),
        Scalar::Algebraic(a) => a.eval_poly(&p.to_rat()),
    }
}

/// Evaluates a rational polynomial at a scalar.
pub fn eval_rat_at_scalar(p: &RatPoly, x: &Scalar) -> Scalar {
    match x {
        Scalar::Rational(r) => Scalar::Rational(p.eval(r)),
        Scalar::Algebraic(a) => a.eval_poly(p),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::cmp::Ordering;

    fn sqrt2() -> Scalar {
        let lo = BigRational::from_integer(1.into());
        let hi = BigRational::from_integer(2.into());
        Scalar::from_algebraic(AlgebraicReal::new(IntPoly::from_i64(&[-2, 0, 1]), lo, hi).unwrap())
    }

    #[test]
    fn rational_arith() {
        let s = scalar_arith(&Scalar::ratio(1, 2), &Scalar::ratio(1, 3), ArithOp::Add).unwrap();
        assert_eq!(s, Scalar::ratio(5, 6));
        let x = sqrt2();
        assert_eq!(scalar_arith(&x, &Scalar::one(), ArithOp::Mul).unwrap(), x);
        assert_eq!(
            scalar_arith(&x, &Scalar::zero(), ArithOp::Div),
            Err(ExactError::DivisionByZero)
        );
    }

    #[test]
    fn sqrt2_squared_is_two() {
        let x = sqrt2();
        let sq = &x * &x;
        assert!(sq.is_rational());
        assert_eq!(sq, Scalar::from(2));
    }

    #[test]
    fn compare_examples() {
        assert_eq!(scalar_compare(&Scalar::ratio(5, 6), &Scalar::ratio(5, 6)), Ordering::Equal);
        assert_eq!(scalar_compare(&sqrt2(), &Scalar::ratio(3, 2)), Ordering::Less);
        // −k/(a1+1) with k = 42, a1 = 1
        assert_eq!(scalar_compare(&Scalar::from(-21), &Scalar::ratio(-42, 2)), Ordering::Equal);
    }

    #[test]
    fn real_roots_examples() {
        assert_eq!(
            real_roots(&IntPoly::from_i64(&[2, -3, 1])).unwrap(),
            vec![Scalar::from(2), Scalar::from(1)]
        );
        let r = real_roots(&IntPoly::from_i64(&[0, -2, 0, 1])).unwrap();
        assert_eq!(r.len(), 3);
        assert_eq!(r[0], sqrt2());
        assert_eq!(r[1], Scalar::zero());
        assert_eq!(r[2], -sqrt2());
        assert!(!r[0].is_rational());
        assert_eq!(real_roots(&IntPoly::zero()), Err(ExactError::ZeroPolynomial));
    }

    #[test]
    fn json_encoding() {
        let v = serde_json::to_value(Scalar::ratio(-2, 5)).unwrap();
        assert_eq!(v, serde_json::json!("-2/5"));
        let v = serde_json::to_value(sqrt2()).unwrap();
        assert_eq!(v["min_poly"], serde_json::json!(["-2", "0", "1"]));
        let back: Scalar = serde_json::from_value(v).unwrap();
        assert_eq!(back, sqrt2());
    }
}
