use serde::Serialize;

use super::graph::FiniteGraph;
use super::measure::{is_k112_free, measure_array};
use super::FiniteGeomError;
use crate::drg::IntersectionArray;

#[derive(Debug, Clone, Serialize)]
pub struct GqReport {
    pub is_gq: bool,
    pub pair: (usize, usize),
    pub s: u64,
    pub t: u64,
    /// Vertices of the closure, sorted.
    pub vertices: Vec<usize>,
    pub expected_array: IntersectionArray,
    pub measured_array: Option<IntersectionArray>,
    pub subgraph_diameter: usize,
    pub k112_free: bool,
    /// The closure is the least strongly closed set containing the pair.
    pub minimal: bool,
    pub diagnostics: Vec<String>,
}

/// Least vertex set containing `seed` such that every `z` with
/// `d(u,z) + d(z,v) ≤ d(u,v) + 1` for `u, v` in the set is also in it.
pub fn strongly_closed_closure(g: &FiniteGraph, seed: &[usize]) -> Vec<usize> {
    let n = g.n();
    let mut inside = vec![false; n];
    let mut members: Vec<usize> = Vec::new();
    for &s in seed {
        if !inside[s] {
            inside[s] = true;
            members.push(s);
        }
    }
    // Pairs (members[i], members[j]) with j < done are already processed.
    let mut done = 0;
    while done < members.len() {
        let end = members.len();
        let mut added = Vec::new();
        for j in done..end {
            for i in 0..j {
                let (u, v) = (members[i], members[j]);
                let duv = g.dist(u, v);
                for z in 0..n {
                    if !inside[z] && g.dist(u, z) + g.dist(z, v) <= duv + 1 {
                        inside[z] = true;
                        added.push(z);
                    }
                }
            }
        }
        done = end;
        members.extend(added);
    }
    members.sort_unstable();
    members
}

/// Closure of the distance-2 pair `(x, y)` compared with `GQ(s, t)`.
pub fn find_induced_gq_at(
    g: &FiniteGraph,
    s: u64,
    t: u64,
    x: usize,
    y: usize,
) -> Result<GqReport, FiniteGeomError> {
    if x >= g.n() || y >= g.n() || g.dist(x, y) != 2 {
        return Err(FiniteGeomError::Precondition(format!(
            "({x}, {y}) is not a pair at distance 2"
        )));
    }
    let expected_array = IntersectionArray::new(vec![(t + 1) * s, t * s], vec![1, t + 1])
        .map_err(|e| FiniteGeomError::Precondition(format!("GQ({s},{t}) array: {e}")))?;
    let vertices = strongly_closed_closure(g, &[x, y]);
    let sub = g.induced(&vertices)?;
    let mut diagnostics = Vec::new();
    let measured_array = match measure_array(&sub) {
        Ok(a) => Some(a),
        Err(e) => {
            diagnostics.push(format!("closure on {} vertices: {e}", vertices.len()));
            None
        }
    };
    let k112_free = is_k112_free(&sub);
    if !k112_free {
        diagnostics.push("closure contains an induced K_{2,1,1}".into());
    }
    if sub.diameter() != 2 {
        diagnostics.push(format!("closure has diameter {}", sub.diameter()));
    }
    let matches = measured_array.as_ref() == Some(&expected_array);
    if let (false, Some(a)) = (matches, &measured_array) {
        diagnostics.push(format!("closure has array {a}, GQ({s},{t}) has {expected_array}"));
    }
    Ok(GqReport {
        is_gq: matches && k112_free && sub.diameter() == 2,
        pair: (x, y),
        s,
        t,
        vertices,
        expected_array,
        measured_array,
        subgraph_diameter: sub.diameter(),
        k112_free,
        minimal: true,
        diagnostics,
    })
}

/// Looks for an induced `GQ(s, t)` as the closure of the first distance-2 pair.
pub fn find_induced_gq(g: &FiniteGraph, s: u64, t: u64) -> Result<GqReport, FiniteGeomError> {
    let arr = measure_array(g)?;
    if arr.diameter() < 2 {
        return Err(FiniteGeomError::Precondition("diameter below 2".into()));
    }
    if arr.a(1) == 0 || arr.c(2) == 1 {
        return Err(FiniteGeomError::Precondition(format!(
            "need a_1 ≠ 0 and c_2 ≠ 1, have a_1 = {}, c_2 = {}",
            arr.a(1),
            arr.c(2)
        )));
    }
    if s != arr.a(1) + 1 || t != arr.c(2) - 1 {
        return Err(FiniteGeomError::Precondition(format!(
            "expected s = {}, t = {}",
            arr.a(1) + 1,
            arr.c(2) - 1
        )));
    }
    let y = (0..g.n()).find(|&y| g.dist(0, y) == 2).unwrap();
    find_induced_gq_at(g, s, t, 0, y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finitegeom::construct::{build_hamming, build_hermitian_dual_polar};

    #[test]
    fn gq_is_its_own_closure() {
        let g = build_hermitian_dual_polar(2, 2).unwrap();
        let r = find_induced_gq(&g, 2, 4).unwrap();
        assert!(r.is_gq);
        assert_eq!(r.vertices.len(), 27);
    }

    #[test]
    fn hamming_grid() {
        let g = build_hamming(3, 3).unwrap();
        let r = find_induced_gq(&g, 2, 1).unwrap();
        assert_eq!(r.vertices.len(), 9);
        assert_eq!(r.measured_array.unwrap().to_text(), "4,2;1,2");
        assert!(r.is_gq);
        assert!(find_induced_gq(&g, 2, 4).is_err());
        assert!(find_induced_gq(&build_hamming(3, 2).unwrap(), 1, 1).is_err());
    }

    #[test]
    fn closure_of_edge_is_line() {
        let g = build_hamming(2, 3).unwrap();
        assert_eq!(strongly_closed_closure(&g, &[0, 1]), vec![0, 1, 2]);
        assert_eq!(strongly_closed_closure(&g, &[4]), vec![4]);
    }
}
