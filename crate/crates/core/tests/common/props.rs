use std::sync::OnceLock;

use drgkit::drg::IntersectionArray;
use drgkit::exactnum::{isolate_irreducible, IntPoly, Scalar};
use drgkit::krein::krein_tensor;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRunner};

/// Real roots of `x² - 2`, `x² - 3`, `x² - 5`, grouped by field.
fn surds() -> &'static [Vec<Scalar>] {
    static POOL: OnceLock<Vec<Vec<Scalar>>> = OnceLock::new();
    POOL.get_or_init(|| {
        [2, 3, 5]
            .iter()
            .map(|&d| {
                isolate_irreducible(&IntPoly::from_i64(&[-d, 0, 1]))
                    .into_iter()
                    .map(Scalar::from_algebraic)
                    .collect()
            })
            .collect()
    })
}

fn frac() -> impl Strategy<Value = Scalar> + Clone {
    (-30i64..=30, 1i64..=12).prop_map(|(n, d)| Scalar::ratio(n, d))
}

/// `p/q`, or `p/q + (r/s)·σ` with `σ` a square root in field `f`.
fn in_field(f: usize) -> impl Strategy<Value = Scalar> {
    prop_oneof![
        1 => frac(),
        2 => (frac(), frac(), 0..2usize).prop_map(move |(a, b, i)| &a + &(&b * &surds()[f][i])),
    ]
}

/// Triples from one random quadratic field (rationals included).
pub fn triple() -> impl Strategy<Value = (Scalar, Scalar, Scalar)> {
    (0..3usize).prop_flat_map(|f| (in_field(f), in_field(f), in_field(f)))
}

/// Triples whose entries may come from different quadratic fields.
pub fn mixed_triple() -> impl Strategy<Value = (Scalar, Scalar, Scalar)> {
    (in_field(0), in_field(1), in_field(2))
}

fn ensure(ok: bool, what: &str, a: &Scalar, b: &Scalar, c: &Scalar) -> Result<(), TestCaseError> {
    if ok {
        Ok(())
    } else {
        Err(TestCaseError::fail(format!("{what} fails for ({a}, {b}, {c})")))
    }
}

#[allow(clippy::eq_op)]
pub fn field_axioms(a: &Scalar, b: &Scalar, c: &Scalar) -> Result<(), TestCaseError> {
    let zero = Scalar::zero();
    let one = Scalar::one();
    ensure(&(a + b) + c == a + &(b + c), "additive associativity", a, b, c)?;
    ensure(&(a * b) * c == a * &(b * c), "multiplicative associativity", a, b, c)?;
    ensure(a + b == b + a && a * b == b * a, "commutativity", a, b, c)?;
    ensure(a * &(b + c) == &(a * b) + &(a * c), "distributivity", a, b, c)?;
    ensure(a + &zero == *a && a * &one == *a, "identities", a, b, c)?;
    ensure((a - a).is_zero() && (a + &(-a)).is_zero(), "additive inverse", a, b, c)?;
    ensure(&(a - b) + b == *a, "subtraction", a, b, c)?;
    if a.is_zero() {
        ensure(a.recip().is_err(), "reciprocal of zero", a, b, c)?;
    } else {
        ensure(a * &a.recip().unwrap() == one, "multiplicative inverse", a, b, c)?;
        ensure(&b.checked_div(a).unwrap() * a == *b, "division", a, b, c)?;
    }
    Ok(())
}

pub fn order_axioms(a: &Scalar, b: &Scalar, c: &Scalar) -> Result<(), TestCaseError> {
    use std::cmp::Ordering::*;
    let ab = a.cmp(b);
    ensure(ab == b.cmp(a).reverse(), "antisymmetry", a, b, c)?;
    ensure((ab == Equal) == (a == b), "equality agrees with order", a, b, c)?;
    let sign = match (a - b).signum() {
        1 => Greater,
        -1 => Less,
        _ => Equal,
    };
    ensure(ab == sign, "order agrees with sign of difference", a, b, c)?;
    if a <= b && b <= c {
        ensure(a <= c, "transitivity", a, b, c)?;
    }
    ensure((a + c).cmp(&(b + c)) == ab, "translation invariance", a, b, c)?;
    if c.is_positive() {
        ensure((a * c).cmp(&(b * c)) == ab, "positive scaling", a, b, c)?;
    }
    let gap = a.approx_f64() - b.approx_f64();
    if gap.abs() > 1e-9 {
        ensure((gap > 0.0) == (ab == Greater), "order agrees with approximation", a, b, c)?;
    }
    Ok(())
}

/// Runs both scalar property families on `cases` random triples each.
pub fn run_scalar_properties(cases: u32) -> Result<(), String> {
    let mut runner = TestRunner::new(Config { cases, ..Config::default() });
    runner
        .run(&triple(), |(a, b, c)| field_axioms(&a, &b, &c))
        .map_err(|e| e.to_string())?;
    runner
        .run(&triple(), |(a, b, c)| order_axioms(&a, &b, &c))
        .map_err(|e| e.to_string())
}

/// `P·Q = nI`, the three-term recurrence, and weighted orthogonality
/// `Σ_l k_l u_l(θ_i) u_l(θ_j) = δ_ij n / m_i`.
pub fn check_eigenmatrices(arr: &IntersectionArray) -> Result<(), String> {
    let s = arr.spectral().map_err(|e| e.to_string())?;
    let d = arr.diameter();
    let n = Scalar::from(arr.vertex_count());
    let k: Vec<Scalar> = arr.valencies().iter().map(Scalar::from).collect();
    for a in 0..=d {
        for b in 0..=d {
            let pq: Scalar = (0..=d).map(|i| &s.p[a][i] * &s.q[i][b]).sum();
            let want = if a == b { n.clone() } else { Scalar::zero() };
            if pq != want {
                return Err(format!("{arr}: (PQ)[{a}][{b}] = {pq}"));
            }
        }
    }
    for (i, u) in s.u.iter().enumerate() {
        let th = s.theta(i);
        if u[0] != Scalar::one() {
            return Err(format!("{arr}: u_0(θ_{i}) ≠ 1"));
        }
        for j in 0..=d {
            let mut lhs = Scalar::from(arr.a(j) as i64) * &u[j];
            if j > 0 {
                lhs = lhs + Scalar::from(arr.c(j) as i64) * &u[j - 1];
            }
            if j < d {
                lhs = lhs + Scalar::from(arr.b(j) as i64) * &u[j + 1];
            }
            if lhs != th * &u[j] {
                return Err(format!("{arr}: recurrence fails at θ_{i}, j = {j}"));
            }
        }
    }
    for i in 0..=d {
        for j in i..=d {
            let ip: Scalar = (0..=d).map(|l| &(&k[l] * &s.u[i][l]) * &s.u[j][l]).sum();
            let want = if i == j { n.checked_div(&s.multiplicity(i)).unwrap() } else { Scalar::zero() };
            if ip != want {
                return Err(format!("{arr}: ⟨u(θ_{i}), u(θ_{j})⟩ = {ip}"));
            }
        }
    }
    Ok(())
}

/// Krein nonnegativity and `q_ij^0 = δ_ij m_j`.
pub fn check_krein(arr: &IntersectionArray) -> Result<(), String> {
    let s = arr.spectral().map_err(|e| e.to_string())?;
    let kt = krein_tensor(&s).map_err(|e| e.to_string())?;
    let d = arr.diameter();
    for i in 0..=d {
        for j in 0..=d {
            for h in 0..=d {
                if kt.get(i, j, h).is_negative() {
                    return Err(format!("{arr}: q_{i}{j}^{h} = {} < 0", kt.get(i, j, h)));
                }
            }
            let want = if i == j { s.multiplicity(j) } else { Scalar::zero() };
            if *kt.get(i, j, 0) != want {
                return Err(format!("{arr}: q_{i}{j}^0 = {}", kt.get(i, j, 0)));
            }
        }
    }
    Ok(())
}
