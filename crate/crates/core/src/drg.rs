//! Intersection arrays, their derived parameters and exact spectra.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::exactnum::{eval_rat_at_scalar, real_roots, IntPoly, RatPoly, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArrayError {
    #[error("malformed array text: {0}")]
    Malformed(String),
    #[error("diameter must be at least 1")]
    EmptyArray,
    #[error("expected {expected} c-values for {b_len} b-values, found {found}")]
    LengthMismatch {
        b_len: usize,
        expected: usize,
        found: usize,
    },
    #[error("c_1 must be 1, found {0}")]
    FirstCNotOne(u64),
    #[error("{name}_{index} must be positive")]
    NonPositive { name: &'static str, index: usize },
    #[error("a_{index} = k - b_{index} - c_{index} is negative ({value})")]
    NegativeA { index: usize, value: i128 },
    #[error("c-sequence not non-decreasing at c_{index}")]
    CNotMonotone { index: usize },
    #[error("b-sequence not non-increasing at b_{index}")]
    BNotMonotone { index: usize },
    #[error("k_{index} not integral ({numerator}/{denominator})")]
    NonIntegralValency {
        index: usize,
        numerator: BigInt,
        denominator: u64,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpectrumError {
    #[error("not a feasible array: characteristic polynomial has {found} distinct real roots, expected {expected}")]
    RootCount { found: usize, expected: usize },
    #[error("not a feasible array: multiplicity of eigenvalue {index} is {value}, not a positive integer")]
    NonIntegralMultiplicity { index: usize, value: String },
    #[error("not a feasible array: multiplicity of eigenvalue {index} is not rational")]
    IrrationalMultiplicity { index: usize },
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SequenceError {
    #[error("{0} is not an eigenvalue of the array: the terminal recurrence identity fails")]
    NotAnEigenvalue(String),
}

/// A validated intersection array `{b_0, …, b_{D-1}; c_1, …, c_D}`.
#[derive(Clone)]
pub struct IntersectionArray {
    b: Vec<u64>,
    c: Vec<u64>,
    a: Vec<u64>,
    valencies: Vec<BigInt>,
    n: BigInt,
    spectral: OnceLock<Result<Arc<SpectralData>, SpectrumError>>,
}

impl IntersectionArray {
    /// Builds and validates an array from `b_0..b_{D-1}` and `c_1..c_D`.
    pub fn new(b: Vec<u64>, c: Vec<u64>) -> Result<Self, ArrayError> {
        if b.is_empty() {
            return Err(ArrayError::EmptyArray);
        }
        if c.len() != b.len() {
            return Err(ArrayError::LengthMismatch {
                b_len: b.len(),
                expected: b.len(),
                found: c.len(),
            });
        }
        if c[0] != 1 {
            return Err(ArrayError::FirstCNotOne(c[0]));
        }
        if let Some(i) = b.iter().position(|&x| x == 0) {
            return Err(ArrayError::NonPositive { name: "b", index: i });
        }
        if let Some(i) = c.iter().position(|&x| x == 0) {
            return Err(ArrayError::NonPositive { name: "c", index: i + 1 });
        }
        let d = b.len();
        let k = b[0];
        let mut a = Vec::with_capacity(d + 1);
        for i in 0..=d {
            let bi = if i < d { b[i] } else { 0 };
            let ci = if i == 0 { 0 } else { c[i - 1] };
            let ai = i128::from(k) - i128::from(bi) - i128::from(ci);
            if ai < 0 {
                return Err(ArrayError::NegativeA { index: i, value: ai });
            }
            a.push(ai as u64);
        }
        for i in 1..d {
            if c[i] < c[i - 1] {
                return Err(ArrayError::CNotMonotone { index: i + 1 });
            }
            if b[i] > b[i - 1] {
                return Err(ArrayError::BNotMonotone { index: i });
            }
        }
        let mut valencies = vec![BigInt::one()];
        for i in 1..=d {
            let num = &valencies[i - 1] * BigInt::from(b[i - 1]);
            let (q, r) = num.div_rem(&BigInt::from(c[i - 1]));
            if !r.is_zero() {
                return Err(ArrayError::NonIntegralValency {
                    index: i,
                    numerator: num,
                    denominator: c[i - 1],
                });
            }
            valencies.push(q);
        }
        let n = valencies.iter().sum();
        Ok(IntersectionArray {
            b,
            c,
            a,
            valencies,
            n,
            spectral: OnceLock::new(),
        })
    }

    pub fn diameter(&self) -> usize {
        self.b.len()
    }

    pub fn valency(&self) -> u64 {
        self.b[0]
    }

    /// `b_i` for `0 ≤ i ≤ D`, with `b_D = 0`.
    pub fn b(&self, i: usize) -> u64 {
        self.b.get(i).copied().unwrap_or(0)
    }

    /// `c_i` for `0 ≤ i ≤ D`, with `c_0 = 0`.
    pub fn c(&self, i: usize) -> u64 {
        if i == 0 {
            0
        } else {
            self.c[i - 1]
        }
    }

    pub fn a(&self, i: usize) -> u64 {
        self.a[i]
    }

    pub fn b_seq(&self) -> &[u64] {
        &self.b
    }

    pub fn c_seq(&self) -> &[u64] {
        &self.c
    }

    pub fn a_seq(&self) -> &[u64] {
        &self.a
    }

    /// Distance valency `k_i`.
    pub fn k_i(&self, i: usize) -> &BigInt {
        &self.valencies[i]
    }

    pub fn valencies(&self) -> &[BigInt] {
        &self.valencies
    }

    pub fn vertex_count(&self) -> &BigInt {
        &self.n
    }

    /// True when every `a_i` vanishes, the array-level bipartite criterion.
    pub fn is_bipartite(&self) -> bool {
        self.a.iter().all(|&x| x == 0)
    }

    /// Canonical text form `b0,...;c1,...`.
    pub fn to_text(&self) -> String {
        let join = |v: &[u64]| v.iter().map(u64::to_string).collect::<Vec<_>>().join(",");
        format!("{};{}", join(&self.b), join(&self.c))
    }

    /// Exact spectral data, computed once per array.
    pub fn spectral(&self) -> Result<Arc<SpectralData>, SpectrumError> {
        self.spectral
            .get_or_init(|| spectrum(self).map(Arc::new))
            .clone()
    }
}

impl PartialEq for IntersectionArray {
    fn eq(&self, other: &Self) -> bool {
        self.b == other.b && self.c == other.c
    }
}

impl Eq for IntersectionArray {}

impl Hash for IntersectionArray {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.b.hash(state);
        self.c.hash(state);
    }
}

impl PartialOrd for IntersectionArray {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for IntersectionArray {
    fn cmp(&self, other: &Self) -> Ordering {
        self.to_text().cmp(&other.to_text())
    }
}

impl fmt::Debug for IntersectionArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.to_text())
    }
}

impl fmt::Display for IntersectionArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.to_text())
    }
}

impl Serialize for IntersectionArray {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("IntersectionArray", 7)?;
        st.serialize_field("text", &self.to_text())?;
        st.serialize_field("b", &self.b)?;
        st.serialize_field("c", &self.c)?;
        st.serialize_field("a", &self.a)?;
        st.serialize_field("diameter", &self.diameter())?;
        let ks: Vec<String> = self.valencies.iter().map(BigInt::to_string).collect();
        st.serialize_field("k_i", &ks)?;
        st.serialize_field("n", &self.n.to_string())?;
        st.end()
    }
}

/// Parses `"b0,b1,...;c1,...,cD"`; whitespace and surrounding braces are ignored.
pub fn parse_array(text: &str) -> Result<IntersectionArray, ArrayError> {
    let cleaned: String = text.chars().filter(|ch| !ch.is_whitespace()).collect();
    let cleaned = cleaned
        .strip_prefix('{')
        .and_then(|s| s.strip_suffix('}'))
        .unwrap_or(&cleaned);
    let (bs, cs) = cleaned
        .split_once(';')
        .ok_or_else(|| ArrayError::Malformed(format!("missing ';' in {text:?}")))?;
    let parse_list = |s: &str| -> Result<Vec<u64>, ArrayError> {
        if s.is_empty() {
            return Ok(Vec::new());
        }
        s.split(',')
            .map(|t| {
                t.parse::<u64>()
                    .map_err(|_| ArrayError::Malformed(format!("bad entry {t:?} in {text:?}")))
            })
            .collect()
    };
    IntersectionArray::new(parse_list(bs)?, parse_list(cs)?)
}

/// Tridiagonal intersection matrix with row `i` equal to `(c_i, a_i, b_i)`.
pub fn intersection_matrix(arr: &IntersectionArray) -> Vec<Vec<i64>> {
    let d = arr.diameter();
    let mut m = vec![vec![0i64; d + 1]; d + 1];
    for i in 0..=d {
        if i > 0 {
            m[i][i - 1] = arr.c(i) as i64;
        }
        m[i][i] = arr.a(i) as i64;
        if i < d {
            m[i][i + 1] = arr.b(i) as i64;
        }
    }
    m
}

/// `det(tI - L)` via the three-term recurrence of leading principal minors.
pub fn characteristic_polynomial(arr: &IntersectionArray) -> IntPoly {
    let d = arr.diameter();
    let mut prev = IntPoly::constant(BigInt::one());
    let mut cur = IntPoly::linear(-BigInt::from(arr.a(0)), BigInt::one());
    for i in 1..=d {
        let lin = IntPoly::linear(-BigInt::from(arr.a(i)), BigInt::one());
        let off = BigInt::from(arr.b(i - 1)) * BigInt::from(arr.c(i));
        let next = lin.mul(&cur).sub(&prev.scale(&off));
        prev = cur;
        cur = next;
    }
    cur
}

/// The polynomials `U_j` with `u_j(θ) = U_j(θ)` for every eigenvalue θ.
pub fn standard_sequence_polys(arr: &IntersectionArray) -> Vec<RatPoly> {
    let d = arr.diameter();
    let k = BigRational::from_integer(BigInt::from(arr.valency()));
    let t = RatPoly::linear(BigRational::zero(), BigRational::one());
    let mut u = vec![RatPoly::constant(BigRational::one()), t.scale(&k.recip())];
    for j in 1..d {
        let aj = BigRational::from_integer(BigInt::from(arr.a(j)));
        let cj = BigRational::from_integer(BigInt::from(arr.c(j)));
        let bj = BigRational::from_integer(BigInt::from(arr.b(j)));
        let lin = RatPoly::linear(-aj, BigRational::one());
        let next = lin.mul(&u[j]).sub(&u[j - 1].scale(&cj)).scale(&bj.recip());
        u.push(next);
    }
    u.truncate(d + 1);
    u
}

/// `c_D U_{D-1}(t) + (a_D - t) U_D(t)`, vanishing exactly at the eigenvalues.
fn terminal_residual(arr: &IntersectionArray, u: &[RatPoly]) -> RatPoly {
    let d = arr.diameter();
    let cd = BigRational::from_integer(BigInt::from(arr.c(d)));
    let ad = BigRational::from_integer(BigInt::from(arr.a(d)));
    u[d - 1]
        .scale(&cd)
        .add(&RatPoly::linear(ad, -BigRational::one()).mul(&u[d]))
}

/// Standard sequence `(u_0(θ), …, u_D(θ))`, validated by the terminal identity.
pub fn standard_sequence(
    arr: &IntersectionArray,
    theta: &Scalar,
) -> Result<Vec<Scalar>, SequenceError> {
    let d = arr.diameter();
    if let Scalar::Rational(t) = theta {
        let k = BigRational::from_integer(BigInt::from(arr.valency()));
        let mut u = vec![BigRational::one(), t / &k];
        for j in 1..d {
            let next = ((t - BigRational::from_integer(BigInt::from(arr.a(j)))) * &u[j]
                - BigRational::from_integer(BigInt::from(arr.c(j))) * &u[j - 1])
                / BigRational::from_integer(BigInt::from(arr.b(j)));
            u.push(next);
        }
        u.truncate(d + 1);
        let lhs = BigRational::from_integer(BigInt::from(arr.c(d))) * &u[d - 1]
            + BigRational::from_integer(BigInt::from(arr.a(d))) * &u[d];
        if lhs != t * &u[d] {
            return Err(SequenceError::NotAnEigenvalue(theta.to_string()));
        }
        return Ok(u.into_iter().map(Scalar::Rational).collect());
    }
    let polys = standard_sequence_polys(arr);
    if !eval_rat_at_scalar(&terminal_residual(arr, &polys), theta).is_zero() {
        return Err(SequenceError::NotAnEigenvalue(theta.to_string()));
    }
    Ok(polys.iter().map(|p| eval_rat_at_scalar(p, theta)).collect())
}

/// Exact spectral data of an intersection array.
#[derive(Debug, Clone, Serialize)]
pub struct SpectralData {
    /// `θ_0 > θ_1 > … > θ_D`.
    pub eigenvalues: Vec<Scalar>,
    #[serde(serialize_with = "ser_bigints")]
    pub multiplicities: Vec<BigInt>,
    /// `u[i][j] = u_j(θ_i)`.
    pub u: Vec<Vec<Scalar>>,
    /// `p[j][i] = k_i u_i(θ_j)`.
    pub p: Vec<Vec<Scalar>>,
    /// `q[j][i] = m_i u_j(θ_i)`.
    pub q: Vec<Vec<Scalar>>,
    #[serde(serialize_with = "ser_bigint")]
    pub n: BigInt,
    #[serde(skip)]
    pub valencies: Vec<BigInt>,
}

fn ser_bigints<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(BigInt::to_string))
}

fn ser_bigint<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

impl SpectralData {
    pub fn diameter(&self) -> usize {
        self.eigenvalues.len() - 1
    }

    pub fn theta(&self, i: usize) -> &Scalar {
        &self.eigenvalues[i]
    }

    pub fn smallest(&self) -> &Scalar {
        self.eigenvalues.last().unwrap()
    }

    pub fn multiplicity(&self, i: usize) -> Scalar {
        Scalar::from(&self.multiplicities[i])
    }

    /// Index of the eigenvalue equal to `theta`, if any.
    pub fn index_of(&self, theta: &Scalar) -> Option<usize> {
        self.eigenvalues.iter().position(|x| x == theta)
    }
}

/// Computes eigenvalues, multiplicities, standard sequences and `P`, `Q`.
pub fn spectrum(arr: &IntersectionArray) -> Result<SpectralData, SpectrumError> {
    let d = arr.diameter();
    let charpoly = characteristic_polynomial(arr);
    let eigenvalues = real_roots(&charpoly).map_err(|e| SpectrumError::Inconsistent(e.to_string()))?;
    if eigenvalues.len() != d + 1 {
        return Err(SpectrumError::RootCount {
            found: eigenvalues.len(),
            expected: d + 1,
        });
    }
    let polys = standard_sequence_polys(arr);
    let kv: Vec<BigRational> = arr
        .valencies()
        .iter()
        .map(|k| BigRational::from_integer(k.clone()))
        .collect();
    let norm_poly = polys
        .iter()
        .zip(&kv)
        .fold(RatPoly::zero(), |acc, (p, k)| acc.add(&p.mul(p).scale(k)));
    let n = arr.vertex_count().clone();
    let nq = BigRational::from_integer(n.clone());

    let mut multiplicities = Vec::with_capacity(d + 1);
    let mut u = Vec::with_capacity(d + 1);
    for (i, theta) in eigenvalues.iter().enumerate() {
        let norm = match theta {
            Scalar::Rational(t) => norm_poly.eval(t),
            Scalar::Algebraic(a) => {
                let reduced = norm_poly.rem(&a.minimal_polynomial().to_rat());
                reduced
                    .as_constant()
                    .ok_or(SpectrumError::IrrationalMultiplicity { index: i })?
            }
        };
        if !norm.is_positive() {
            return Err(SpectrumError::Inconsistent(format!(
                "non-positive norm for eigenvalue {i}"
            )));
        }
        let m = &nq / norm;
        if !m.is_integer() || !m.is_positive() {
            return Err(SpectrumError::NonIntegralMultiplicity {
                index: i,
                value: crate::exactnum::format_rational(&m),
            });
        }
        multiplicities.push(m.to_integer());
        u.push(
            polys
                .iter()
                .map(|p| eval_rat_at_scalar(p, theta))
                .collect::<Vec<_>>(),
        );
    }

    let p: Vec<Vec<Scalar>> = (0..=d)
        .map(|j| (0..=d).map(|i| &u[j][i] * &Scalar::from(arr.k_i(i))).collect())
        .collect();
    let q: Vec<Vec<Scalar>> = (0..=d)
        .map(|j| {
            (0..=d)
                .map(|i| &u[i][j] * &Scalar::from(&multiplicities[i]))
                .collect()
        })
        .collect();

    let data = SpectralData {
        eigenvalues,
        multiplicities,
        u,
        p,
        q,
        n,
        valencies: arr.valencies().to_vec(),
    };
    check_spectral_invariants(arr, &data)?;
    Ok(data)
}

fn check_spectral_invariants(
    arr: &IntersectionArray,
    s: &SpectralData,
) -> Result<(), SpectrumError> {
    let d = arr.diameter();
    let bad = |m: &str| Err(SpectrumError::Inconsistent(m.to_string()));
    if s.eigenvalues[0] != Scalar::from(arr.valency() as i64) || !s.multiplicities[0].is_one() {
        return bad("θ_0 = k with m_0 = 1 violated");
    }
    let total: BigInt = s.multiplicities.iter().sum();
    if total != s.n {
        return bad("Σ m_i = n violated");
    }
    let trace: Scalar = (0..=d).map(|i| &s.eigenvalues[i] * &s.multiplicity(i)).sum();
    if !trace.is_zero() {
        return bad("Σ m_i θ_i = 0 violated");
    }
    let n = Scalar::from(&s.n);
    for j in 0..=d {
        for l in 0..=d {
            let entry: Scalar = (0..=d).map(|i| &s.p[j][i] * &s.q[i][l]).sum();
            let expected = if j == l { n.clone() } else { Scalar::zero() };
            if entry != expected {
                return bad(&format!("P·Q = nI violated at ({j}, {l})"));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<Scalar> {
        v.iter().map(|&x| Scalar::from(x)).collect()
    }

    #[test]
    fn parse_examples() {
        let a = parse_array("10,8;1,5").unwrap();
        assert_eq!(a.diameter(), 2);
        assert_eq!(a.valency(), 10);
        assert_eq!(a.a_seq(), &[0, 1, 5]);
        assert_eq!(
            a.valencies(),
            &[BigInt::from(1), BigInt::from(10), BigInt::from(16)]
        );
        assert_eq!(a.vertex_count(), &BigInt::from(27));
        let cube = parse_array(" { 3, 2, 1 ; 1, 2, 3 } ").unwrap();
        assert_eq!(cube.vertex_count(), &BigInt::from(8));
        assert!(matches!(
            parse_array("10,8;1,6"),
            Err(ArrayError::NonIntegralValency { index: 2, .. })
        ));
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse_array("10,8,1,5"), Err(ArrayError::Malformed(_))));
        assert!(matches!(parse_array("10,8;2,5"), Err(ArrayError::FirstCNotOne(2))));
        assert!(matches!(parse_array("3,4;1,1"), Err(ArrayError::NegativeA { index: 1, .. })));
        assert!(matches!(parse_array("4,1,2;1,1,1"), Err(ArrayError::BNotMonotone { index: 2 })));
        assert!(matches!(parse_array("4,3,1;1,3,2"), Err(ArrayError::CNotMonotone { index: 3 })));
        assert!(matches!(parse_array("3,2;1"), Err(ArrayError::LengthMismatch { .. })));
        assert!(matches!(parse_array(";"), Err(ArrayError::EmptyArray)));
        assert!(matches!(parse_array("3,x;1,1"), Err(ArrayError::Malformed(_))));
    }

    #[test]
    fn intersection_matrix_examples() {
        let m = intersection_matrix(&parse_array("10,8;1,5").unwrap());
        assert_eq!(m, vec![vec![0, 10, 0], vec![1, 1, 8], vec![0, 5, 5]]);
        let m = intersection_matrix(&parse_array("3,2,1;1,2,3").unwrap());
        assert_eq!(
            m,
            vec![vec![0, 3, 0, 0], vec![1, 0, 2, 0], vec![0, 2, 0, 1], vec![0, 0, 3, 0]]
        );
        let m = intersection_matrix(&parse_array("42,40,32;1,5,21").unwrap());
        assert_eq!(
            m,
            vec![
                vec![0, 42, 0, 0],
                vec![1, 1, 40, 0],
                vec![0, 5, 5, 32],
                vec![0, 0, 21, 21]
            ]
        );
    }

    #[test]
    fn characteristic_polynomial_matches_determinant() {
        // det(tI - L) for [[0,10,0],[1,1,8],[0,5,5]] expanded by hand:
        // t^3 - 6t^2 - 45t + 50 = (t - 10)(t - 1)(t + 5)
        let p = characteristic_polynomial(&parse_array("10,8;1,5").unwrap());
        assert_eq!(p, IntPoly::from_i64(&[50, -45, -6, 1]));
        assert_eq!(real_roots(&p).unwrap(), ints(&[10, 1, -5]));
    }

    #[test]
    fn cube_spectrum() {
        let s = spectrum(&parse_array("3,2,1;1,2,3").unwrap()).unwrap();
        assert_eq!(s.eigenvalues, ints(&[3, 1, -1, -3]));
        let m: Vec<i64> = s.multiplicities.iter().map(|m| m.try_into().unwrap()).collect();
        assert_eq!(m, vec![1, 3, 3, 1]);
    }

    #[test]
    fn standard_sequence_examples() {
        let arr = parse_array("10,8;1,5").unwrap();
        let u = standard_sequence(&arr, &Scalar::from(-5)).unwrap();
        assert_eq!(u, vec![Scalar::one(), Scalar::ratio(-1, 2), Scalar::ratio(1, 4)]);
        let u = standard_sequence(&arr, &Scalar::from(10)).unwrap();
        assert_eq!(u, ints(&[1, 1, 1]));
        assert!(standard_sequence(&arr, &Scalar::from(2)).is_err());
        let arr = parse_array("42,40,32;1,5,21").unwrap();
        let u = standard_sequence(&arr, &Scalar::from(-21)).unwrap();
        assert_eq!(
            u,
            vec![Scalar::one(), Scalar::ratio(-1, 2), Scalar::ratio(1, 4), Scalar::ratio(-1, 8)]
        );
    }

    #[test]
    fn irrational_spectrum_heawood() {
        // Heawood graph: eigenvalues 3, √2, -√2, -3 with multiplicities 1, 6, 6, 1
        let arr = parse_array("3,2,2;1,1,3").unwrap();
        let s = arr.spectral().unwrap();
        assert!(!s.eigenvalues[1].is_rational());
        assert_eq!(&s.eigenvalues[1] * &s.eigenvalues[1], Scalar::from(2));
        let m: Vec<i64> = s.multiplicities.iter().map(|m| m.try_into().unwrap()).collect();
        assert_eq!(m, vec![1, 6, 6, 1]);
        let u = standard_sequence(&arr, &s.eigenvalues[1]).unwrap();
        assert_eq!(u, s.u[1]);
    }

    #[test]
    fn infeasible_multiplicity() {
        // valid k_i but non-integral multiplicities
        let arr = parse_array("5,4;1,1").unwrap();
        assert!(arr.spectral().is_err());
    }
}
