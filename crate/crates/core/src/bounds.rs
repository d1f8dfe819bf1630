//! Eigenvalue and multiplicity bounds whose equality cases detect light tails.

use std::cmp::Ordering;

use serde::Serialize;
use thiserror::Error;

use crate::drg::{IntersectionArray, SpectralData};
use crate::exactnum::Scalar;
use crate::krein::light_tail_at;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum BoundName {
    MultiplicityLowerBound,
    Theta1LowerBound,
    Theta1UpperBound,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Relation {
    LT,
    EQ,
    GT,
}

impl From<Ordering> for Relation {
    fn from(o: Ordering) -> Self {
        match o {
            Ordering::Less => Relation::LT,
            Ordering::Equal => Relation::EQ,
            Ordering::Greater => Relation::GT,
        }
    }
}

/// The auxiliary estimate `m_D ≥ a_1 k/(a_1+1) + 1`, available when the
/// eigenvalue is `-k/(a_1+1)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AuxiliaryBound {
    pub lhs: Scalar,
    pub rhs: Scalar,
    pub relation: Relation,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundReport {
    pub bound_name: BoundName,
    pub eigenvalue_index: usize,
    pub lhs: Scalar,
    pub rhs: Scalar,
    pub relation: Relation,
    pub equality_semantics: String,
    /// Hypotheses taken on trust rather than derived from the array.
    pub assumptions: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub auxiliary: Option<AuxiliaryBound>,
}

impl BoundReport {
    pub fn is_equality(&self) -> bool {
        self.relation == Relation::EQ
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundError {
    #[error("hypothesis violated: {}", .0.join("; "))]
    Hypothesis(Vec<String>),
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}

fn int(v: u64) -> Scalar {
    Scalar::from(v as i64)
}

fn div(a: &Scalar, b: &Scalar) -> Scalar {
    a.checked_div(b).expect("nonzero denominator")
}

fn basic_hypotheses(arr: &IntersectionArray) -> Vec<String> {
    let mut v = Vec::new();
    if arr.valency() < 3 {
        v.push(format!("valency k = {} < 3", arr.valency()));
    }
    if arr.diameter() < 2 {
        v.push(format!("diameter D = {} < 2", arr.diameter()));
    }
    v
}

/// `-k/(a_1+1)`.
pub fn geometric_smallest(arr: &IntersectionArray) -> Scalar {
    div(&-int(arr.valency()), &int(arr.a(1) + 1))
}

/// `(m_i-k)/k ≥ -(θ_i+1)² a_1(a_1+1) / (((a_1+1)θ_i+k)² + k a_1 b_1)`,
/// with equality iff `E_i` is a light tail.
pub fn multiplicity_bound(
    arr: &IntersectionArray,
    spec: &SpectralData,
    i: usize,
) -> Result<BoundReport, BoundError> {
    let mut bad = basic_hypotheses(arr);
    let k = int(arr.valency());
    let theta = spec.theta(i);
    if *theta == k || *theta == -&k {
        bad.push(format!("θ_{i} = ±k"));
    }
    if !bad.is_empty() {
        return Err(BoundError::Hypothesis(bad));
    }
    let a1 = int(arr.a(1));
    let a1p = &a1 + &Scalar::one();
    let b1 = int(arr.b(1));
    let m = spec.multiplicity(i);
    let lhs = div(&(&m - &k), &k);
    let t1 = theta + &Scalar::one();
    let num = &(&(&t1 * &t1) * &a1) * &a1p;
    let s = &(&a1p * theta) + &k;
    let den = &(&s * &s) + &(&(&k * &a1) * &b1);
    let rhs = -div(&num, &den);
    let auxiliary = (*theta == geometric_smallest(arr)).then(|| {
        let rhs = &div(&(&a1 * &k), &a1p) + &Scalar::one();
        AuxiliaryBound {
            relation: m.cmp(&rhs).into(),
            lhs: m.clone(),
            rhs,
        }
    });
    Ok(BoundReport {
        bound_name: BoundName::MultiplicityLowerBound,
        eigenvalue_index: i,
        relation: lhs.cmp(&rhs).into(),
        lhs,
        rhs,
        equality_semantics: format!("equality iff E_{i} is a light tail"),
        assumptions: Vec::new(),
        auxiliary,
    })
}

/// `θ_1 ≥ (k-(a_1+1)(a_1+2))/(a_1+1)²` under `a_1 ≠ 0`, `θ_D = -k/(a_1+1)`.
pub fn theta1_lower_bound(
    arr: &IntersectionArray,
    spec: &SpectralData,
) -> Result<BoundReport, BoundError> {
    let mut bad = basic_hypotheses(arr);
    if arr.a(1) == 0 {
        bad.push("a_1 = 0".into());
    }
    if *spec.smallest() != geometric_smallest(arr) {
        bad.push("θ_D ≠ -k/(a_1+1)".into());
    }
    if !bad.is_empty() {
        return Err(BoundError::Hypothesis(bad));
    }
    let k = arr.valency() as i64;
    let a1p = arr.a(1) as i64 + 1;
    let rhs = Scalar::ratio(k - a1p * (a1p + 1), a1p * a1p);
    let lhs = spec.theta(1).clone();
    Ok(BoundReport {
        bound_name: BoundName::Theta1LowerBound,
        eigenvalue_index: 1,
        relation: lhs.cmp(&rhs).into(),
        lhs,
        rhs,
        equality_semantics: "equality iff E_D is a light tail with associated idempotent E_1".into(),
        assumptions: Vec::new(),
        auxiliary: None,
    })
}

/// `θ_1 ≤ (k-(a_1+1))/(c_2-1) - 1`, given an induced `GQ(s, c_2-1)`.
pub fn theta1_upper_bound(
    arr: &IntersectionArray,
    spec: &SpectralData,
    gq_assumed: bool,
) -> Result<BoundReport, BoundError> {
    let mut bad = basic_hypotheses(arr);
    if arr.diameter() >= 2 && arr.c(2) == 1 {
        bad.push("c_2 = 1".into());
    }
    if !bad.is_empty() {
        return Err(BoundError::Hypothesis(bad));
    }
    let k = arr.valency() as i64;
    let a1p = arr.a(1) as i64 + 1;
    let c2m = arr.c(2) as i64 - 1;
    let rhs = &Scalar::ratio(k - a1p, c2m) - &Scalar::one();
    let lhs = spec.theta(1).clone();
    let assumption = if gq_assumed {
        "contains an induced GQ(s, c_2-1) (assumed)"
    } else {
        "contains an induced GQ(s, c_2-1) (not established; bound unproven for this array)"
    };
    Ok(BoundReport {
        bound_name: BoundName::Theta1UpperBound,
        eigenvalue_index: 1,
        relation: lhs.cmp(&rhs).into(),
        lhs,
        rhs,
        equality_semantics: String::new(),
        assumptions: vec![assumption.into()],
        auxiliary: None,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SufficiencyReport {
    pub holds: bool,
    pub lower: BoundReport,
    pub upper: BoundReport,
}

/// Squeezes `θ_1` between the two bounds; when both are tight, `E_D` must be
/// a light tail with associate `E_1`, which is confirmed against the Krein row.
pub fn light_tail_sufficiency(
    arr: &IntersectionArray,
    spec: &SpectralData,
    gq_assumed: bool,
) -> Result<SufficiencyReport, BoundError> {
    let mut bad = basic_hypotheses(arr);
    if arr.a(1) == 0 {
        bad.push("a_1 = 0".into());
    }
    if *spec.smallest() != geometric_smallest(arr) {
        bad.push("θ_D ≠ -k/(a_1+1)".into());
    }
    let a1p = arr.a(1) + 1;
    if arr.diameter() >= 2 && arr.c(2) != a1p * a1p + 1 {
        bad.push(format!("c_2 = {} ≠ (a_1+1)²+1 = {}", arr.c(2), a1p * a1p + 1));
    }
    if !gq_assumed {
        bad.push("induced GQ(a_1+1, c_2-1) not established".into());
    }
    if !bad.is_empty() {
        return Err(BoundError::Hypothesis(bad));
    }
    let lower = theta1_lower_bound(arr, spec)?;
    let upper = theta1_upper_bound(arr, spec, gq_assumed)?;
    let holds = lower.is_equality() && upper.is_equality();
    if holds {
        let lt = light_tail_at(spec, arr.diameter());
        if !(lt.is_light_tail && lt.associated_index == Some(1)) {
            return Err(BoundError::Inconsistent(
                "both θ_1 bounds tight but the Krein row of E_D is not a light tail with associate 1"
                    .into(),
            ));
        }
    }
    Ok(SufficiencyReport { holds, lower, upper })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ProfileReport {
    pub holds: bool,
    pub alpha: Scalar,
    pub beta: Scalar,
    /// `(u_j(θ_D)², α + β u_j(θ_1))` for each `j`.
    pub values: Vec<(Scalar, Scalar)>,
    pub diagnostics: Vec<String>,
}

/// `u_j(θ_D)² = α + β u_j(θ_1)` with `α = (a_1+1)/(a_1 k+a_1+1)`,
/// `β = a_1 k/(a_1 k+a_1+1)`.
pub fn profile_identity(arr: &IntersectionArray, spec: &SpectralData) -> ProfileReport {
    let d = arr.diameter();
    let k = arr.valency() as i64;
    let a1 = arr.a(1) as i64;
    let den = a1 * k + a1 + 1;
    let alpha = Scalar::ratio(a1 + 1, den);
    let beta = Scalar::ratio(a1 * k, den);
    let mut diagnostics = Vec::new();
    let lt = light_tail_at(spec, d);
    if !lt.is_light_tail {
        diagnostics.push("E_D is not a light tail".into());
    } else if lt.associated_index != Some(1) {
        diagnostics.push(format!(
            "associated idempotent is E_{}, not E_1",
            lt.associated_index.unwrap()
        ));
    }
    let values: Vec<(Scalar, Scalar)> = (0..=d)
        .map(|j| {
            let u = &spec.u[d][j];
            (u * u, &alpha + &(&beta * &spec.u[1][j]))
        })
        .collect();
    if diagnostics.is_empty() {
        for (j, (l, r)) in values.iter().enumerate() {
            if l != r {
                diagnostics.push(format!("identity fails at j = {j}"));
            }
        }
    }
    ProfileReport {
        holds: diagnostics.is_empty(),
        alpha,
        beta,
        values,
        diagnostics,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::drg::parse_array;

    #[test]
    fn multiplicity_bound_examples() {
        let arr = parse_array("10,8;1,5").unwrap();
        let spec = arr.spectral().unwrap();
        let r = multiplicity_bound(&arr, &spec, 2).unwrap();
        assert_eq!(r.lhs, Scalar::ratio(-2, 5));
        assert_eq!(r.rhs, Scalar::ratio(-2, 5));
        assert_eq!(r.relation, Relation::EQ);
        let aux = r.auxiliary.unwrap();
        assert_eq!(aux.rhs, Scalar::from(6));
        assert!(multiplicity_bound(&arr, &spec, 0).is_err());

        let arr = parse_array("42,40,32;1,5,21").unwrap();
        let spec = arr.spectral().unwrap();
        let r = multiplicity_bound(&arr, &spec, 3).unwrap();
        assert_eq!(r.lhs, Scalar::ratio(-10, 21));
        assert_eq!(r.rhs, Scalar::ratio(-10, 21));

        // a_1 = 0: m_i ≥ k
        let arr = parse_array("3,2,1;1,2,3").unwrap();
        let spec = arr.spectral().unwrap();
        let r = multiplicity_bound(&arr, &spec, 1).unwrap();
        assert!(r.rhs.is_zero());
        assert_eq!(r.relation, Relation::EQ);
    }

    #[test]
    fn theta1_bounds() {
        for (text, t1) in [("10,8;1,5", 1), ("42,40,32;1,5,21", 9)] {
            let arr = parse_array(text).unwrap();
            let spec = arr.spectral().unwrap();
            let lo = theta1_lower_bound(&arr, &spec).unwrap();
            assert_eq!(lo.rhs, Scalar::from(t1));
            assert!(lo.is_equality());
            let hi = theta1_upper_bound(&arr, &spec, true).unwrap();
            assert_eq!(hi.rhs, Scalar::from(t1));
            assert!(hi.is_equality());
            assert!(light_tail_sufficiency(&arr, &spec, true).unwrap().holds);
        }
        let h23 = parse_array("4,2;1,2").unwrap();
        let spec = h23.spectral().unwrap();
        assert!(light_tail_sufficiency(&h23, &spec, true).is_err());
        let petersen = parse_array("3,2;1,1").unwrap();
        let spec = petersen.spectral().unwrap();
        assert!(theta1_upper_bound(&petersen, &spec, true).is_err());
        assert!(theta1_lower_bound(&petersen, &spec).is_err());
    }

    #[test]
    fn profile_examples() {
        let arr = parse_array("42,40,32;1,5,21").unwrap();
        let spec = arr.spectral().unwrap();
        let p = profile_identity(&arr, &spec);
        assert!(p.holds, "{:?}", p.diagnostics);
        assert_eq!(p.alpha, Scalar::ratio(1, 22));
        assert_eq!(p.beta, Scalar::ratio(21, 22));
        assert_eq!(p.values[1].0, Scalar::ratio(1, 4));
        let arr = parse_array("10,8;1,5").unwrap();
        let p = profile_identity(&arr, &arr.spectral().unwrap());
        assert!(p.holds);
        assert_eq!(p.alpha, Scalar::ratio(1, 6));
        assert_eq!(&p.alpha + &p.beta, Scalar::one());
        let cube = parse_array("3,2,1;1,2,3").unwrap();
        assert!(!profile_identity(&cube, &cube.spectral().unwrap()).holds);
    }
}
