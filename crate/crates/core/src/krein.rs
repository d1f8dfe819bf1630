//! Krein parameters and light-tail detection.

use num_bigint::BigInt;
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::drg::SpectralData;
use crate::exactnum::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KreinError {
    #[error("Krein-infeasible array: q_{{{i}{j}}}^{h} = {value} < 0")]
    Infeasible {
        i: usize,
        j: usize,
        h: usize,
        value: String,
    },
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}

/// All `q_ij^h`, stored densely.
#[derive(Debug, Clone)]
pub struct KreinTensor {
    d: usize,
    q: Vec<Scalar>,
}

impl KreinTensor {
    pub fn diameter(&self) -> usize {
        self.d
    }

    pub fn get(&self, i: usize, j: usize, h: usize) -> &Scalar {
        let s = self.d + 1;
        &self.q[(i * s + j) * s + h]
    }

    /// `(q_ii^0, …, q_ii^D)`.
    pub fn row(&self, i: usize) -> Vec<Scalar> {
        (0..=self.d).map(|h| self.get(i, i, h).clone()).collect()
    }

    /// Nonzero entries in lexicographic `(i, j, h)` order.
    pub fn nonzero_entries(&self) -> impl Iterator<Item = (usize, usize, usize, &Scalar)> {
        let s = self.d + 1;
        self.q.iter().enumerate().filter(|(_, v)| !v.is_zero()).map(move |(idx, v)| {
            (idx / (s * s), (idx / s) % s, idx % s, v)
        })
    }
}

#[derive(Serialize)]
struct SparseEntry<'a> {
    i: usize,
    j: usize,
    h: usize,
    value: &'a Scalar,
}

impl Serialize for KreinTensor {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(None)?;
        for (i, j, h, value) in self.nonzero_entries() {
            seq.serialize_element(&SparseEntry { i, j, h, value })?;
        }
        seq.end()
    }
}

/// `Σ_l k_l u_l(θ_i) u_l(θ_j) u_l(θ_h)`.
fn triple_sum(spec: &SpectralData, i: usize, j: usize, h: usize) -> Scalar {
    (0..=spec.diameter())
        .map(|l| {
            let uij = &spec.u[i][l] * &spec.u[j][l];
            let w = &uij * &Scalar::from(&spec.valencies[l]);
            &w * &spec.u[h][l]
        })
        .sum()
}

fn scale(spec: &SpectralData, i: usize, j: usize, s: &Scalar) -> Scalar {
    let f = Scalar::from(&spec.multiplicities[i] * &spec.multiplicities[j]);
    let f = f.checked_div(&Scalar::from(&spec.n)).expect("n > 0");
    &f * s
}

/// Computes the full tensor, checking nonnegativity, `q_ij^0 = δ_ij m_j`
/// and `Σ_h q_ij^h m_h = m_i m_j`.
pub fn krein_tensor(spec: &SpectralData) -> Result<KreinTensor, KreinError> {
    let d = spec.diameter();
    let s = d + 1;
    let mut sym = vec![Scalar::zero(); s * s * s];
    for i in 0..s {
        for j in i..s {
            for h in j..s {
                let v = triple_sum(spec, i, j, h);
                for (a, b, c) in [(i, j, h), (i, h, j), (j, i, h), (j, h, i), (h, i, j), (h, j, i)] {
                    sym[(a * s + b) * s + c] = v.clone();
                }
            }
        }
    }
    let mut q = Vec::with_capacity(s * s * s);
    for i in 0..s {
        for j in 0..s {
            for h in 0..s {
                q.push(scale(spec, i, j, &sym[(i * s + j) * s + h]));
            }
        }
    }
    let kt = KreinTensor { d, q };
    for i in 0..s {
        for j in 0..s {
            for h in 0..s {
                let v = kt.get(i, j, h);
                if v.is_negative() {
                    return Err(KreinError::Infeasible {
                        i,
                        j,
                        h,
                        value: v.to_string(),
                    });
                }
            }
            let expect0 = if i == j {
                spec.multiplicity(j)
            } else {
                Scalar::zero()
            };
            if *kt.get(i, j, 0) != expect0 {
                return Err(KreinError::Inconsistent(format!("q_{i}{j}^0 ≠ δ_ij m_j")));
            }
            let total: Scalar = (0..s).map(|h| kt.get(i, j, h) * &spec.multiplicity(h)).sum();
            if total != Scalar::from(&spec.multiplicities[i] * &spec.multiplicities[j]) {
                return Err(KreinError::Inconsistent(format!("Σ_h q_{i}{j}^h m_h ≠ m_i m_j")));
            }
        }
    }
    Ok(kt)
}

/// `(q_ii^0, …, q_ii^D)` without building the full tensor.
pub fn krein_row(spec: &SpectralData, i: usize) -> Vec<Scalar> {
    (0..=spec.diameter())
        .map(|h| scale(spec, i, i, &triple_sum(spec, i, i, h)))
        .collect()
}

/// The form `(n/m_i E_i)∘(n/m_i E_i) = (1/m_i) J + ((m_i-1)/m_i) Ẽ`,
/// `Ẽ = Σ_h α_h (n/m_h) E_h`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RescaledView {
    pub j_coeff: Scalar,
    pub tail_coeff: Scalar,
    /// `α_h` for `h = 1..=D`; nonnegative and summing to 1.
    pub alpha: Vec<Scalar>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LightTailReport {
    pub eigenvalue_index: usize,
    pub eigenvalue: Scalar,
    pub is_light_tail: bool,
    /// The `F` in `E∘E = aE_0 + bF`.
    pub associated_index: Option<usize>,
    pub a_coeff: Option<Scalar>,
    pub b_coeff: Option<Scalar>,
    /// `m_i = 1`: the Schur square collapses onto `E_0`.
    pub multiplicity_one: bool,
    pub rescaled: Option<RescaledView>,
}

fn report_from_row(spec: &SpectralData, i: usize, row: &[Scalar]) -> LightTailReport {
    let d = spec.diameter();
    let m = spec.multiplicity(i);
    let n = Scalar::from(&spec.n);
    let support: Vec<usize> = (1..=d).filter(|&h| !row[h].is_zero()).collect();
    let is_lt = i != 0 && support.len() == 1;
    let multiplicity_one = i != 0 && spec.multiplicities[i] == BigInt::from(1);
    let (associated_index, a_coeff, b_coeff) = if is_lt {
        let h = support[0];
        (
            Some(h),
            Some(m.checked_div(&n).unwrap()),
            Some(row[h].checked_div(&n).unwrap()),
        )
    } else {
        (None, None, None)
    };
    let rescaled = if i != 0 && !multiplicity_one {
        let m1 = &m - &Scalar::one();
        let denom = &m * &m1;
        Some(RescaledView {
            j_coeff: m.recip().unwrap(),
            tail_coeff: m1.checked_div(&m).unwrap(),
            alpha: (1..=d)
                .map(|h| (&spec.multiplicity(h) * &row[h]).checked_div(&denom).unwrap())
                .collect(),
        })
    } else {
        None
    };
    LightTailReport {
        eigenvalue_index: i,
        eigenvalue: spec.eigenvalues[i].clone(),
        is_light_tail: is_lt,
        associated_index,
        a_coeff,
        b_coeff,
        multiplicity_one,
        rescaled,
    }
}

/// One report per eigenvalue index `0..=D`.
pub fn light_tail_scan(spec: &SpectralData, kt: &KreinTensor) -> Vec<LightTailReport> {
    (0..=spec.diameter())
        .map(|i| report_from_row(spec, i, &kt.row(i)))
        .collect()
}

/// Light-tail report for a single index, computing only the needed row.
pub fn light_tail_at(spec: &SpectralData, i: usize) -> LightTailReport {
    report_from_row(spec, i, &krein_row(spec, i))
}
