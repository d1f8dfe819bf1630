use std::collections::BTreeSet;

use serde::Serialize;

use super::graph::FiniteGraph;
use super::measure::measure_array;
use super::FiniteGeomError;
use crate::drg::SpectralData;
use crate::exactnum::Scalar;
use crate::krein::light_tail_at;

#[derive(Debug, Clone, Serialize)]
pub struct GraphLightTailReport {
    pub is_light_tail: bool,
    /// `x_h` in `u_j(θ_D)² = Σ_h x_h u_j(θ_h)`, measured over distance classes.
    pub coefficients: Vec<Scalar>,
    pub associated_index: Option<usize>,
    /// First distance class where the decomposition does not reproduce the square.
    pub mismatch_class: Option<usize>,
    /// Base vertices whose column passed `A v = θ_D v`.
    pub eigenvector_checked: Vec<usize>,
    pub krein_agrees: bool,
    pub diagnostics: Vec<String>,
}

/// Checks `E_D ∘ E_D = (1/n)E_0 + b F` on the graph, with `E_D` read off the
/// measured distance classes.
pub fn verify_light_tail_on_graph(
    g: &FiniteGraph,
    spec: &SpectralData,
) -> Result<GraphLightTailReport, FiniteGeomError> {
    let arr = measure_array(g)?;
    let d = arr.diameter();
    if d != spec.diameter() || *arr.vertex_count() != spec.n {
        return Err(FiniteGeomError::Precondition(format!(
            "graph array {arr} does not match the spectrum"
        )));
    }
    let measured = arr
        .spectral()
        .map_err(|e| FiniteGeomError::Precondition(e.to_string()))?;
    if measured.eigenvalues != spec.eigenvalues || measured.multiplicities != spec.multiplicities {
        return Err(FiniteGeomError::Precondition(format!(
            "graph array {arr} does not match the spectrum"
        )));
    }
    let n = Scalar::from(&spec.n);
    // k_j straight from the graph.
    let mut k = vec![0i64; d + 1];
    for y in 0..g.n() {
        k[g.dist(0, y)] += 1;
    }
    let u_d = &spec.u[d];
    let w: Vec<Scalar> = u_d.iter().map(|x| x * x).collect();
    let coefficients: Vec<Scalar> = (0..=d)
        .map(|h| {
            let s: Scalar = (0..=d)
                .map(|j| &(&Scalar::from(k[j]) * &w[j]) * &spec.u[h][j])
                .sum();
            (&Scalar::from(&spec.multiplicities[h]) * &s).checked_div(&n).unwrap()
        })
        .collect();
    let mut diagnostics = Vec::new();
    let mismatch_class = (0..=d).find(|&j| {
        let rebuilt: Scalar = (0..=d).map(|h| &coefficients[h] * &spec.u[h][j]).sum();
        rebuilt != w[j]
    });
    if let Some(j) = mismatch_class {
        diagnostics.push(format!("Schur square not reproduced at distance {j}"));
    }
    let m_d = Scalar::from(&spec.multiplicities[d]);
    let inv_m = m_d.recip().unwrap();
    if coefficients[0] != inv_m {
        diagnostics.push(format!("E_0 coefficient {} ≠ 1/m_D", coefficients[0]));
    }
    let nonzero: Vec<usize> = (1..=d).filter(|&h| !coefficients[h].is_zero()).collect();
    let associated_index = match nonzero.as_slice() {
        [h] => Some(*h),
        [] => {
            diagnostics.push("Schur square lies on E_0 alone".into());
            None
        }
        many => {
            diagnostics.push(format!("Schur square meets {} nontrivial idempotents", many.len()));
            None
        }
    };
    let is_light_tail =
        mismatch_class.is_none() && coefficients[0] == inv_m && associated_index.is_some();

    let theta = spec.theta(d);
    let mut eigenvector_checked = Vec::new();
    for base in BTreeSet::from([0, g.n() - 1]) {
        let mut patterns: BTreeSet<(usize, Vec<i64>)> = BTreeSet::new();
        for x in 0..g.n() {
            let mut counts = vec![0i64; d + 1];
            for &y in g.neighbours(x) {
                counts[g.dist(base, y as usize)] += 1;
            }
            patterns.insert((g.dist(base, x), counts));
        }
        let ok = patterns.iter().all(|(i, counts)| {
            let lhs: Scalar = counts
                .iter()
                .enumerate()
                .map(|(j, &c)| &Scalar::from(c) * &u_d[j])
                .sum();
            lhs == theta * &u_d[*i]
        });
        if ok {
            eigenvector_checked.push(base);
        } else {
            diagnostics.push(format!("A v ≠ θ_D v for the column of vertex {base}"));
        }
    }
    let krein = light_tail_at(spec, d);
    let krein_agrees = krein.is_light_tail == is_light_tail
        && (!is_light_tail || krein.associated_index == associated_index);
    if !krein_agrees {
        diagnostics.push("graph decomposition disagrees with the Krein row".into());
    }
    Ok(GraphLightTailReport {
        is_light_tail: is_light_tail && eigenvector_checked.len() == BTreeSet::from([0, g.n() - 1]).len(),
        coefficients,
        associated_index,
        mismatch_class,
        eigenvector_checked,
        krein_agrees,
        diagnostics,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finitegeom::construct::{build_hamming, build_hermitian_dual_polar};

    #[test]
    fn gq_light_tail() {
        let g = build_hermitian_dual_polar(2, 2).unwrap();
        let arr = crate::drg::parse_array("10,8;1,5").unwrap();
        let r = verify_light_tail_on_graph(&g, &arr.spectral().unwrap()).unwrap();
        assert!(r.is_light_tail);
        assert_eq!(r.associated_index, Some(1));
        assert_eq!(r.coefficients[0], Scalar::ratio(1, 6));
        assert!(r.krein_agrees);
    }

    #[test]
    fn cube_is_not() {
        let g = build_hamming(3, 2).unwrap();
        let arr = crate::drg::parse_array("3,2,1;1,2,3").unwrap();
        let r = verify_light_tail_on_graph(&g, &arr.spectral().unwrap()).unwrap();
        assert!(!r.is_light_tail);
        assert_eq!(r.coefficients, vec![Scalar::one(), Scalar::zero(), Scalar::zero(), Scalar::zero()]);
        assert_eq!(r.eigenvector_checked, vec![0, 7]);
    }

    #[test]
    fn mismatched_spectrum() {
        let g = build_hamming(2, 3).unwrap();
        let arr = crate::drg::parse_array("10,8;1,5").unwrap();
        assert!(verify_light_tail_on_graph(&g, &arr.spectral().unwrap()).is_err());
    }
}
