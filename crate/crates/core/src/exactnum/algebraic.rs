//! Real algebraic numbers as (irreducible polynomial, isolating interval).

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::factor::{irreducible_factors, is_irreducible};
use super::poly::{interpolate_at_naturals, resultant, sign_of_rat, IntPoly, RatPoly, SturmChain};
use super::{ExactError, Scalar};

/// An irrational real algebraic number.
///
/// The polynomial is irreducible over the rationals, primitive, has positive
/// leading coefficient and degree at least two; the closed interval
/// `[lo, hi]` (with `lo < hi`) contains exactly one of its real roots. Since
/// the polynomial has no rational roots the endpoints are never roots.
#[derive(Clone, Debug)]
pub struct AlgebraicReal {
    poly: IntPoly,
    lo: BigRational,
    hi: BigRational,
}

fn two() -> BigRational {
    BigRational::from_integer(BigInt::from(2))
}

impl AlgebraicReal {
    /// Validating constructor.
    pub fn new(poly: IntPoly, lo: BigRational, hi: BigRational) -> Result<Self, ExactError> {
        if poly.deg() < 2 {
            return Err(ExactError::InvalidAlgebraic(
                "defining polynomial must have degree at least 2".into(),
            ));
        }
        if lo >= hi {
            return Err(ExactError::InvalidAlgebraic("empty isolating interval".into()));
        }
        let poly = poly.primitive();
        if !is_irreducible(&poly) {
            return Err(ExactError::InvalidAlgebraic(format!(
                "polynomial {poly} is not irreducible over Q"
            )));
        }
        if poly.sign_at(&lo) == 0 || poly.sign_at(&hi) == 0 {
            return Err(ExactError::InvalidAlgebraic("interval endpoint is a root".into()));
        }
        let roots = SturmChain::new(&poly).count_roots(&lo, &hi);
        if roots != 1 {
            return Err(ExactError::InvalidAlgebraic(format!(
                "interval contains {roots} roots, expected exactly one"
            )));
        }
        Ok(AlgebraicReal { poly, lo, hi })
    }

    pub(crate) fn from_parts(poly: IntPoly, lo: BigRational, hi: BigRational) -> Self {
        debug_assert!(lo < hi);
        AlgebraicReal { poly, lo, hi }
    }

    pub fn minimal_polynomial(&self) -> &IntPoly {
        &self.poly
    }

    pub fn interval(&self) -> (&BigRational, &BigRational) {
        (&self.lo, &self.hi)
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn degree(&self) -> usize {
        self.poly.deg()
    }

    /// One bisection step.
    pub fn bisect(&self) -> Self {
        let mid = (&self.lo + &self.hi) / two();
        let s_lo = self.poly.sign_at(&self.lo);
        let s_mid = self.poly.sign_at(&mid);
        if s_mid == s_lo {
            AlgebraicReal::from_parts(self.poly.clone(), mid, self.hi.clone())
        } else {
            AlgebraicReal::from_parts(self.poly.clone(), self.lo.clone(), mid)
        }
    }

    /// Bisects until the interval width is below `width`.
    pub fn refine_to_width(&self, width: &BigRational) -> Self {
        let mut cur = self.clone();
        while &cur.width() >= width {
            cur = cur.bisect();
        }
        cur
    }

    /// Exact comparison against a rational. Never loops: a rational strictly
    /// inside the interval is not a root, so the sign of the polynomial there
    /// locates the root.
    pub fn cmp_rational(&self, r: &BigRational) -> Ordering {
        if r <= &self.lo {
            return Ordering::Greater;
        }
        if r >= &self.hi {
            return Ordering::Less;
        }
        let s_lo = self.poly.sign_at(&self.lo);
        let s_r = self.poly.sign_at(r);
        debug_assert!(s_r != 0);
        if s_r == s_lo {
            // root lies in (r, hi)
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }

    /// Exact comparison against another algebraic number.
    pub fn cmp_algebraic(&self, other: &AlgebraicReal) -> Ordering {
        let mut a = self.clone();
        let mut b = other.clone();
        let same_poly = a.poly == b.poly;
        let sturm = if same_poly {
            Some(SturmChain::new(&a.poly))
        } else {
            None
        };
        loop {
            if a.hi < b.lo {
                return Ordering::Less;
            }
            if b.hi < a.lo {
                return Ordering::Greater;
            }
            if let Some(s) = &sturm {
                let lo = std::cmp::max(&a.lo, &b.lo).clone();
                let hi = std::cmp::min(&a.hi, &b.hi).clone();
                // Both intervals isolate one root of the same polynomial; a
                // root in their overlap is therefore both numbers.
                if lo < hi && s.count_roots(&lo, &hi) == 1 {
                    return Ordering::Equal;
                }
            }
            a = a.bisect();
            b = b.bisect();
        }
    }

    /// Refines until zero lies outside the interval.
    pub fn away_from_zero(&self) -> Self {
        let mut cur = self.clone();
        while !cur.lo.is_positive() && !cur.hi.is_negative() {
            cur = cur.bisect();
        }
        cur
    }

    pub fn signum(&self) -> i8 {
        match self.cmp_rational(&BigRational::zero()) {
            Ordering::Less => -1,
            Ordering::Equal => 0,
            Ordering::Greater => 1,
        }
    }

    pub fn neg(&self) -> Self {
        AlgebraicReal::from_parts(self.poly.negate_roots(), -&self.hi, -&self.lo)
    }

    pub fn add_rational(&self, r: &BigRational) -> Self {
        AlgebraicReal::from_parts(self.poly.shift_roots(r), &self.lo + r, &self.hi + r)
    }

    /// Product with a nonzero rational.
    pub fn mul_rational(&self, r: &BigRational) -> Self {
        debug_assert!(!r.is_zero());
        let poly = self.poly.scale_roots(r);
        let (a, b) = (&self.lo * r, &self.hi * r);
        if r.is_positive() {
            AlgebraicReal::from_parts(poly, a, b)
        } else {
            AlgebraicReal::from_parts(poly, b, a)
        }
    }

    pub fn recip(&self) -> Self {
        let cur = self.away_from_zero();
        AlgebraicReal::from_parts(
            cur.poly.reciprocal_roots(),
            cur.hi.recip(),
            cur.lo.recip(),
        )
    }

    pub fn approx_f64(&self) -> f64 {
        let eps = BigRational::new(BigInt::one(), BigInt::from(1u64 << 52));
        let r = self.refine_to_width(&eps);
        ((&r.lo + &r.hi) / two()).to_f64().unwrap_or(f64::NAN)
    }

    /// `self = u + v√Δ` for a quadratic number, `Δ` its discriminant.
    fn quadratic_form(&self) -> Option<(BigRational, BigRational, BigInt)> {
        if self.poly.deg() != 2 {
            return None;
        }
        let c = self.poly.coeffs();
        let disc = &c[1] * &c[1] - BigInt::from(4) * &c[2] * &c[0];
        let two_a = BigInt::from(2) * &c[2];
        let u = BigRational::new(-c[1].clone(), two_a.clone());
        let mut v = BigRational::new(BigInt::one(), two_a);
        if self.cmp_rational(&u) == Ordering::Less {
            v = -v;
        }
        Some((u, v, disc))
    }

    /// Sum or product computed inside `Q(√Δ)` when both operands are
    /// quadratic over the same field; skips the resultant entirely.
    fn same_quadratic_field(&self, other: &AlgebraicReal, mul: bool) -> Option<Scalar> {
        let (u1, v1, d1) = self.quadratic_form()?;
        let (u2, v2, d2) = other.quadratic_form()?;
        let prod = &d1 * &d2;
        let root = prod.sqrt();
        if &root * &root != prod {
            return None;
        }
        // √Δ₂ = (√(Δ₁Δ₂)/Δ₁)·√Δ₁
        let v2 = v2 * BigRational::new(root, d1.clone());
        let (r, w) = if mul {
            let d = BigRational::from_integer(d1.clone());
            (&u1 * &u2 + &v1 * &v2 * d, &u1 * &v2 + &v1 * &u2)
        } else {
            (u1 + u2, v1 + v2)
        };
        if w.is_zero() {
            return Some(Scalar::Rational(r));
        }
        // (t - r)² - w²Δ₁
        let c0 = &r * &r - &w * &w * BigRational::from_integer(d1);
        let f = RatPoly::new(vec![c0, -(&r + &r), BigRational::one()]).to_primitive_int().primitive();
        let mut roots = isolate_irreducible(&f);
        let pick = if w.is_positive() { roots.pop() } else { roots.into_iter().next() };
        pick.map(Scalar::from_algebraic)
    }

    /// `self + other` via the resultant `Res_t(p(t), q(z - t))`.
    pub fn add_algebraic(&self, other: &AlgebraicReal) -> Scalar {
        if let Some(s) = self.same_quadratic_field(other, false) {
            return s;
        }
        let p = &self.poly;
        let q = &other.poly;
        let n = p.deg() * q.deg();
        let values: Vec<BigInt> = (0..=n)
            .map(|z| {
                let shifted = q.compose_linear(&BigInt::from(z), &BigInt::from(-1));
                resultant(p, &shifted)
            })
            .collect();
        let r = interpolate_at_naturals(&values).to_primitive_int();
        let mut a = self.clone();
        let mut b = other.clone();
        pick_root(&r, |_| {
            let enc = (&a.lo + &b.lo, &a.hi + &b.hi);
            a = a.bisect();
            b = b.bisect();
            enc
        })
    }

    /// `self * other` via the resultant `Res_t(p(t), t^m q(z / t))`.
    pub fn mul_algebraic(&self, other: &AlgebraicReal) -> Scalar {
        if let Some(s) = self.same_quadratic_field(other, true) {
            return s;
        }
        let p = &self.poly;
        let q = &other.poly;
        let m = q.deg();
        let n = p.deg() * m;
        let values: Vec<BigInt> = (0..=n)
            .map(|z| {
                let z = BigInt::from(z);
                // Σ b_i z^i t^(m-i)
                let coeffs: Vec<BigInt> = (0..=m)
                    .map(|j| {
                        let i = m - j;
                        &q.coeffs()[i] * num_traits::pow(z.clone(), i)
                    })
                    .collect();
                resultant(p, &IntPoly::new(coeffs))
            })
            .collect();
        let r = interpolate_at_naturals(&values).to_primitive_int();
        let mut a = self.clone();
        let mut b = other.clone();
        pick_root(&r, |_| {
            let enc = interval_mul(&a.lo, &a.hi, &b.lo, &b.hi);
            a = a.bisect();
            b = b.bisect();
            enc
        })
    }

    /// Evaluates a rational polynomial at this number, i.e. an element of
    /// `Q(self)` given in the power basis.
    pub fn eval_poly(&self, g: &RatPoly) -> Scalar {
        let f = self.poly.to_rat();
        let g = g.rem(&f);
        if let Some(c) = g.as_constant() {
            return Scalar::Rational(c);
        }
        let (gi, l) = g.clear_denominators();
        let d = self.poly.deg();
        // Res_t(f(t), L z - G(t)) is a power of the minimal polynomial of g(θ).
        let values: Vec<BigInt> = (0..=d)
            .map(|z| {
                let lin = IntPoly::constant(&l * BigInt::from(z)).sub(&gi);
                resultant(&self.poly, &lin)
            })
            .collect();
        let charpoly = interpolate_at_naturals(&values).to_primitive_int();
        let minpoly = charpoly.squarefree();
        let mut a = self.clone();
        pick_root_among(vec![minpoly], |_| {
            let enc = interval_horner(&g, &a.lo, &a.hi);
            a = a.bisect();
            enc
        })
    }
}

fn interval_mul(
    alo: &BigRational,
    ahi: &BigRational,
    blo: &BigRational,
    bhi: &BigRational,
) -> (BigRational, BigRational) {
    let c = [alo * blo, alo * bhi, ahi * blo, ahi * bhi];
    let lo = c.iter().min().unwrap().clone();
    let hi = c.iter().max().unwrap().clone();
    (lo, hi)
}

fn interval_horner(g: &RatPoly, lo: &BigRational, hi: &BigRational) -> (BigRational, BigRational) {
    let mut acc = (BigRational::zero(), BigRational::zero());
    for c in g.coeffs().iter().rev() {
        let (l, h) = interval_mul(&acc.0, &acc.1, lo, hi);
        acc = (l + c, h + c);
    }
    acc
}

/// Selects the root of `candidate` that the shrinking enclosures converge to.
fn pick_root<F>(candidate: &IntPoly, enclose: F) -> Scalar
where
    F: FnMut(u32) -> (BigRational, BigRational),
{
    pick_root_among(irreducible_factors(&candidate.squarefree()), enclose)
}

fn pick_root_among<F>(factors: Vec<IntPoly>, mut enclose: F) -> Scalar
where
    F: FnMut(u32) -> (BigRational, BigRational),
{
    let sturms: Vec<Option<SturmChain>> = factors
        .iter()
        .map(|f| (f.deg() >= 2).then(|| SturmChain::new(f)))
        .collect();
    for level in 0.. {
        assert!(level < 100_000, "root selection failed to converge");
        let (lo, hi) = enclose(level);
        let mut hits: Vec<(usize, usize)> = Vec::new();
        for (i, f) in factors.iter().enumerate() {
            let count = match &sturms[i] {
                None => {
                    let root = BigRational::new(-f.coeffs()[0].clone(), f.coeffs()[1].clone());
                    usize::from(root >= lo && root <= hi)
                }
                Some(s) => {
                    if lo == hi {
                        0
                    } else {
                        s.count_roots(&lo, &hi)
                    }
                }
            };
            if count > 0 {
                hits.push((i, count));
            }
        }
        if hits.len() == 1 && hits[0].1 == 1 {
            let f = &factors[hits[0].0];
            if f.deg() == 1 {
                return Scalar::Rational(BigRational::new(
                    -f.coeffs()[0].clone(),
                    f.coeffs()[1].clone(),
                ));
            }
            if lo < hi {
                return Scalar::from_algebraic(AlgebraicReal::from_parts(f.clone(), lo, hi));
            }
        }
    }
    unreachable!()
}

/// Isolating intervals for the real roots of an irreducible polynomial of
/// degree ≥ 2, in increasing order.
pub fn isolate_irreducible(f: &IntPoly) -> Vec<AlgebraicReal> {
    let sturm = SturmChain::new(f);
    let bound = f.root_bound();
    let mut stack = vec![(-bound.clone(), bound)];
    let mut out = Vec::new();
    while let Some((lo, hi)) = stack.pop() {
        match sturm.count_roots(&lo, &hi) {
            0 => {}
            1 => out.push(AlgebraicReal::from_parts(f.clone(), lo, hi)),
            _ => {
                let mid = (&lo + &hi) / two();
                stack.push((lo, mid.clone()));
                stack.push((mid, hi));
            }
        }
    }
    out.sort_by(|a, b| a.lo.cmp(&b.lo));
    out
}

impl fmt::Display for AlgebraicReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "root of {} in [{}, {}] (~{:.6})",
            self.poly,
            self.lo,
            self.hi,
            self.approx_f64()
        )
    }
}

pub(crate) fn rational_sign(r: &BigRational) -> i8 {
    sign_of_rat(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn sqrt2() -> AlgebraicReal {
        AlgebraicReal::new(IntPoly::from_i64(&[-2, 0, 1]), r(1, 1), r(2, 1)).unwrap()
    }

    #[test]
    fn rejects_bad_data() {
        assert!(AlgebraicReal::new(IntPoly::from_i64(&[-4, 0, 1]), r(1, 1), r(3, 1)).is_err());
        assert!(AlgebraicReal::new(IntPoly::from_i64(&[-2, 0, 1]), r(-2, 1), r(2, 1)).is_err());
        assert!(AlgebraicReal::new(IntPoly::from_i64(&[-2, 1]), r(1, 1), r(3, 1)).is_err());
    }

    #[test]
    fn same_quadratic_field_shortcut() {
        let s2 = sqrt2();
        let s8 = AlgebraicReal::new(IntPoly::from_i64(&[-8, 0, 1]), r(2, 1), r(3, 1)).unwrap();
        assert_eq!(s2.mul_algebraic(&s8), Scalar::from(4));
        let three_s2 = Scalar::from_algebraic(s2.mul_rational(&r(3, 1)));
        assert_eq!(s2.add_algebraic(&s8), three_s2);
        let neg = s8.neg();
        assert_eq!(s2.add_algebraic(&neg), Scalar::from_algebraic(s2.neg()));
        // sqrt 2 * sqrt 3 leaves the field and takes the resultant path
        let s3 = AlgebraicReal::new(IntPoly::from_i64(&[-3, 0, 1]), r(1, 1), r(2, 1)).unwrap();
        let s6 = AlgebraicReal::new(IntPoly::from_i64(&[-6, 0, 1]), r(2, 1), r(3, 1)).unwrap();
        assert_eq!(s2.mul_algebraic(&s3), Scalar::from_algebraic(s6));
    }

    #[test]
    fn compare_with_rationals() {
        let s = sqrt2();
        assert_eq!(s.cmp_rational(&r(3, 2)), Ordering::Less);
        assert_eq!(s.cmp_rational(&r(7, 5)), Ordering::Greater);
        assert_eq!(s.cmp_rational(&r(1, 1)), Ordering::Greater);
    }

    #[test]
    fn same_root_different_intervals() {
        let a = sqrt2();
        let b = AlgebraicReal::new(IntPoly::from_i64(&[-2, 0, 1]), r(13, 10), r(3, 2)).unwrap();
        assert_eq!(a.cmp_algebraic(&b), Ordering::Equal);
        assert_eq!(a.cmp_algebraic(&a.neg()), Ordering::Greater);
    }

    #[test]
    fn sqrt2_plus_sqrt3() {
        let s3 = AlgebraicReal::new(IntPoly::from_i64(&[-3, 0, 1]), r(1, 1), r(2, 1)).unwrap();
        let sum = sqrt2().add_algebraic(&s3);
        match sum {
            Scalar::Algebraic(a) => {
                assert_eq!(a.minimal_polynomial(), &IntPoly::from_i64(&[1, 0, -10, 0, 1]));
                assert!((a.approx_f64() - (2f64.sqrt() + 3f64.sqrt())).abs() < 1e-12);
            }
            other => panic!("expected algebraic, got {other}"),
        }
    }

    #[test]
    fn isolation_finds_all_roots() {
        let roots = isolate_irreducible(&IntPoly::from_i64(&[-1, -1, 0, 1]));
        assert_eq!(roots.len(), 1);
        let roots = isolate_irreducible(&IntPoly::from_i64(&[1, -4, 0, 1]));
        assert_eq!(roots.len(), 3);
    }

    #[test]
    fn eval_in_number_field() {
        // (1 + θ)^2 = 3 + 2√2 with θ = √2; minimal polynomial t^2 - 6t + 1
        let g = RatPoly::new(vec![r(3, 1), r(2, 1)]);
        match sqrt2().eval_poly(&g) {
            Scalar::Algebraic(a) => {
                assert_eq!(a.minimal_polynomial(), &IntPoly::from_i64(&[1, -6, 1]));
                assert!((a.approx_f64() - (3.0 + 2.0 * 2f64.sqrt())).abs() < 1e-12);
            }
            other => panic!("expected algebraic, got {other}"),
        }
        // θ^2 reduces to 2
        let g = RatPoly::new(vec![r(0, 1), r(0, 1), r(1, 1)]);
        assert_eq!(sqrt2().eval_poly(&g), Scalar::from(2));
    }
}
