//! Dense univariate polynomials over the integers and the rationals.
//!
//! Coefficients are stored in ascending order of degree with no trailing
//! zeros, so the zero polynomial is the empty vector.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Polynomial with arbitrary-precision integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

/// Polynomial with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatPoly {
    coeffs: Vec<BigRational>,
}

fn trim<T: Zero>(v: &mut Vec<T>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        trim(&mut coeffs);
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `a + b t`.
    pub fn linear(a: BigInt, b: BigInt) -> Self {
        Self::new(vec![a, b])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree, treating the zero polynomial as degree 0.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Sign of `p(x)` computed on the homogenized integer form, avoiding
    /// rational normalization.
    pub fn sign_at(&self, x: &BigRational) -> i8 {
        let num = x.numer();
        let den = x.denom();
        let d = match self.degree() {
            Some(d) => d,
            None => return 0,
        };
        let mut acc = BigInt::zero();
        let mut den_pow = BigInt::one();
        // Σ a_i num^i den^(d-i), accumulated from the top coefficient down.
        for c in self.coeffs.iter().rev() {
            acc = acc * num + c * &den_pow;
            den_pow *= den;
        }
        let _ = d;
        sign_of(&acc)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut g = self.content();
        if self.leading().is_negative() {
            g = -g;
        }
        Self::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    pub fn neg(&self) -> Self {
        Self::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![BigInt::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] += c;
        }
        Self::new(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, s: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    /// `p(a + b t)`.
    pub fn compose_linear(&self, a: &BigInt, b: &BigInt) -> Self {
        let lin = IntPoly::linear(a.clone(), b.clone());
        let mut acc = IntPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&lin).add(&IntPoly::constant(c.clone()));
        }
        acc
    }

    /// Integer polynomial whose roots are `root + r` for each root of `self`.
    pub fn shift_roots(&self, r: &BigRational) -> Self {
        // p(t - u/v) * v^d = Σ a_i (v t - u)^i v^(d-i)
        let d = self.deg();
        let u = r.numer();
        let v = r.denom();
        let lin = IntPoly::linear(-u.clone(), v.clone());
        let mut acc = IntPoly::zero();
        let mut lin_pow = IntPoly::constant(BigInt::one());
        for (i, c) in self.coeffs.iter().enumerate() {
            let vp = num_traits::pow(v.clone(), d - i);
            acc = acc.add(&lin_pow.scale(&(c * vp)));
            lin_pow = lin_pow.mul(&lin);
        }
        acc.primitive()
    }

    /// Integer polynomial whose roots are `root * r` (r ≠ 0).
    pub fn scale_roots(&self, r: &BigRational) -> Self {
        let d = self.deg();
        let u = r.numer();
        let v = r.denom();
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c * num_traits::pow(u.clone(), d - i) * num_traits::pow(v.clone(), i))
            .collect();
        IntPoly::new(coeffs).primitive()
    }

    /// Integer polynomial whose roots are the negated roots.
    pub fn negate_roots(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
            .collect();
        IntPoly::new(coeffs).primitive()
    }

    /// Reversed polynomial `t^d p(1/t)`, whose roots are the reciprocals.
    pub fn reciprocal_roots(&self) -> Self {
        let mut c = self.coeffs.clone();
        c.reverse();
        IntPoly::new(c).primitive()
    }

    pub fn to_rat(&self) -> RatPoly {
        RatPoly::new(
            self.coeffs
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        )
    }

    /// Squarefree part, primitive with positive leading coefficient.
    pub fn squarefree(&self) -> Self {
        if self.deg() == 0 {
            return self.primitive();
        }
        let p = self.to_rat();
        let g = p.gcd(&p.derivative());
        if g.deg() == 0 {
            return self.primitive();
        }
        p.div_rem(&g).0.to_primitive_int()
    }

    /// Cauchy bound: every real root has absolute value strictly below it.
    pub fn root_bound(&self) -> BigRational {
        let lc = self.leading().abs();
        let max = self
            .coeffs
            .iter()
            .take(self.coeffs.len().saturating_sub(1))
            .map(|c| c.abs())
            .max()
            .unwrap_or_default();
        BigRational::one() + BigRational::new(max, lc) + BigRational::one()
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_mag = i == 0 || !mag.is_one();
            match (i, show_mag) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "{mag}t")?,
                (1, false) => write!(f, "t")?,
                (_, true) => write!(f, "{mag}t^{i}")?,
                (_, false) => write!(f, "t^{i}")?,
            }
        }
        Ok(())
    }
}

pub(crate) fn sign_of(x: &BigInt) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

pub(crate) fn sign_of_rat(x: &BigRational) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        trim(&mut coeffs);
        RatPoly { coeffs }
    }

    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    /// `a + b t`.
    pub fn linear(a: BigRational, b: BigRational) -> Self {
        Self::new(vec![a, b])
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    /// The constant term if the polynomial has degree ≤ 0.
    pub fn as_constant(&self) -> Option<BigRational> {
        match self.coeffs.len() {
            0 => Some(BigRational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![BigRational::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] += c;
        }
        Self::new(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-BigRational::one()))
    }

    pub fn scale(&self, s: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    /// Euclidean division. Panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "polynomial division by zero");
        let dd = divisor.deg();
        let lc = divisor.coeffs.last().unwrap().clone();
        let mut rem = self.coeffs.clone();
        if rem.len() < divisor.coeffs.len() {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![BigRational::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + dd] / &lc;
            if !c.is_zero() {
                for (j, dc) in divisor.coeffs.iter().enumerate() {
                    rem[i + j] -= &c * dc;
                }
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        (Self::new(quot), Self::new(rem))
    }

    pub fn rem(&self, divisor: &Self) -> Self {
        self.div_rem(divisor).1
    }

    pub fn monic(&self) -> Self {
        match self.coeffs.last() {
            None => self.clone(),
            Some(lc) => {
                let inv = lc.recip();
                self.scale(&inv)
            }
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r.to_primitive_int().to_rat();
        }
        a.monic()
    }

    /// Clears denominators and content; leading coefficient positive.
    pub fn to_primitive_int(&self) -> IntPoly {
        let (ip, _) = self.clear_denominators();
        ip.primitive()
    }

    /// Returns `(L * self, L)` with `L` the lcm of the coefficient denominators.
    pub fn clear_denominators(&self) -> (IntPoly, BigInt) {
        let l = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ip = IntPoly::new(
            self.coeffs
                .iter()
                .map(|c| (c * BigRational::from_integer(l.clone())).to_integer())
                .collect(),
        );
        (ip, l)
    }

    /// Modular inverse in `Q[t]/(modulus)`; `None` when not coprime.
    pub fn inverse_mod(&self, modulus: &Self) -> Option<Self> {
        // Extended Euclid: track s with s*self ≡ r (mod modulus).
        let mut r0 = modulus.clone();
        let mut r1 = self.rem(modulus);
        let mut s0 = Self::zero();
        let mut s1 = Self::constant(BigRational::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s = s0.sub(&q.mul(&s1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
        }
        let c = r0.as_constant()?;
        if c.is_zero() {
            return None;
        }
        Some(s0.scale(&c.recip()).rem(modulus))
    }
}

/// Sturm chain of a squarefree integer polynomial.
#[derive(Clone, Debug)]
pub struct SturmChain {
    chain: Vec<IntPoly>,
}

impl SturmChain {
    pub fn new(p: &IntPoly) -> Self {
        let mut chain = vec![p.clone()];
        let d = p.derivative();
        if !d.is_zero() {
            chain.push(d.primitive_sign_preserving());
        }
        while chain.len() >= 2 {
            let n = chain.len();
            let r = chain[n - 2].to_rat().rem(&chain[n - 1].to_rat());
            if r.is_zero() {
                break;
            }
            // -rem scaled by a positive constant
            let (ri, _) = r.clear_denominators();
            chain.push(ri.neg().primitive_sign_preserving());
        }
        SturmChain { chain }
    }

    fn variations_at(&self, x: &BigRational) -> usize {
        let mut last = 0i8;
        let mut count = 0;
        for p in &self.chain {
            let s = p.sign_at(x);
            if s == 0 {
                continue;
            }
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// Number of distinct roots in the half-open interval `(lo, hi]`.
    pub fn count_roots(&self, lo: &BigRational, hi: &BigRational) -> usize {
        let a = self.variations_at(lo);
        let b = self.variations_at(hi);
        a.saturating_sub(b)
    }
}

impl IntPoly {
    /// Divides out the absolute content but keeps the sign of every coefficient.
    fn primitive_sign_preserving(&self) -> Self {
        let g = self.content();
        if g.is_zero() {
            return self.clone();
        }
        Self::new(self.coeffs.iter().map(|c| c / &g).collect())
    }
}

/// Determinant of a square integer matrix by fraction-free Bareiss elimination.
pub fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * m[n - 1][n - 1].clone()
}

/// Resultant of two integer polynomials via the Sylvester matrix.
pub fn resultant(p: &IntPoly, q: &IntPoly) -> BigInt {
    if p.is_zero() || q.is_zero() {
        return BigInt::zero();
    }
    let m = p.deg();
    let n = q.deg();
    if m == 0 {
        return num_traits::pow(p.leading(), n);
    }
    if n == 0 {
        return num_traits::pow(q.leading(), m);
    }
    let size = m + n;
    let mut rows = vec![vec![BigInt::zero(); size]; size];
    // rows hold coefficients from the highest degree down
    for r in 0..n {
        for (i, c) in p.coeffs().iter().rev().enumerate() {
            rows[r][r + i] = c.clone();
        }
    }
    for r in 0..m {
        for (i, c) in q.coeffs().iter().rev().enumerate() {
            rows[n + r][r + i] = c.clone();
        }
    }
    bareiss_det(rows)
}

/// Interpolates the integer polynomial through `(i, values[i])`, `i = 0..len`.
pub fn interpolate_at_naturals(values: &[BigInt]) -> RatPoly {
    // Newton divided differences on nodes 0, 1, 2, ...
    let n = values.len();
    let mut dd: Vec<BigRational> = values
        .iter()
        .map(|v| BigRational::from_integer(v.clone()))
        .collect();
    for level in 1..n {
        for i in (level..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / BigRational::from_integer(BigInt::from(level));
        }
    }
    let mut acc = RatPoly::zero();
    for i in (0..n).rev() {
        // acc = acc * (t - i) + dd[i]
        let lin = RatPoly::linear(
            -BigRational::from_integer(BigInt::from(i)),
            BigRational::one(),
        );
        acc = acc.mul(&lin).add(&RatPoly::constant(dd[i].clone()));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn resultant_of_linear_factors() {
        // Res(t - 2, t - 5) = 2 - 5 = -3 (up to convention sign for degree 1)
        let p = IntPoly::from_i64(&[-2, 1]);
        let q = IntPoly::from_i64(&[-5, 1]);
        assert_eq!(resultant(&p, &q).abs(), BigInt::from(3));
        // Res(t^2 - 2, t) = -2 · ... = p(0) up to sign
        let p = IntPoly::from_i64(&[-2, 0, 1]);
        let q = IntPoly::from_i64(&[0, 1]);
        assert_eq!(resultant(&p, &q).abs(), BigInt::from(2));
    }

    #[test]
    fn sturm_counts_roots() {
        // (t-1)(t-2)(t+3)
        let p = IntPoly::from_i64(&[6, -7, 0, 1]);
        let s = SturmChain::new(&p);
        assert_eq!(s.count_roots(&r(-10, 1), &r(10, 1)), 3);
        assert_eq!(s.count_roots(&r(0, 1), &r(3, 2)), 1);
        assert_eq!(s.count_roots(&r(-5, 2), &r(0, 1)), 0);
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        let p = IntPoly::from_i64(&[3, -1, 0, 2]);
        let vals: Vec<BigInt> = (0..5).map(|i| p.eval_int(&BigInt::from(i))).collect();
        assert_eq!(interpolate_at_naturals(&vals).to_primitive_int(), p);
    }

    #[test]
    fn squarefree_and_gcd() {
        // (t-1)^2 (t+2)
        let p = IntPoly::from_i64(&[2, -3, 0, 1]);
        assert_eq!(p.squarefree(), IntPoly::from_i64(&[-2, 1, 1]));
    }

    #[test]
    fn root_transforms() {
        let p = IntPoly::from_i64(&[-2, 0, 1]); // ±√2
        let shifted = p.shift_roots(&r(1, 2)); // roots ±√2 + 1/2
        assert_eq!(shifted.sign_at(&(r(1, 2) + r(14142, 10000))), -1 * shifted.sign_at(&(r(1, 2) + r(14143, 10000))));
        let scaled = p.scale_roots(&r(3, 1)); // t^2 - 18
        assert_eq!(scaled, IntPoly::from_i64(&[-18, 0, 1]));
        let inv = p.reciprocal_roots(); // 2t^2 - 1 up to sign
        assert_eq!(inv, IntPoly::from_i64(&[-1, 0, 2]));
    }

    #[test]
    fn inverse_mod_field() {
        let f = RatPoly::new(vec![r(-2, 1), r(0, 1), r(1, 1)]);
        let g = RatPoly::new(vec![r(1, 1), r(1, 1)]); // 1 + t
        let inv = g.inverse_mod(&f).unwrap();
        let prod = g.mul(&inv).rem(&f);
        assert_eq!(prod.as_constant(), Some(r(1, 1)));
    }
}
