use std::collections::HashSet;

use rayon::prelude::*;

use super::field::Field;
use super::graph::FiniteGraph;
use super::FiniteGeomError;
use crate::geometric::hermitian_dual_polar_array;

/// All vectors of `GF(q²)^len` whose first nonzero entry is 1.
fn projective_points(f: &Field, len: usize) -> Vec<Vec<u8>> {
    let order = f.order();
    let mut out = Vec::new();
    let total = order.pow(len as u32);
    for code in 1..total {
        let mut v = Vec::with_capacity(len);
        let mut c = code;
        for _ in 0..len {
            v.push((c % order) as u8);
            c /= order;
        }
        if v.iter().find(|&&x| x != 0) == Some(&1) {
            out.push(v);
        }
    }
    out
}

/// Maximal totally isotropic subspaces of `Σ x_i y_i^r` on `GF(r²)^{2D}`,
/// each as its reduced row-echelon basis, in sorted order.
pub fn maximal_isotropic_subspaces(f: &Field, d: usize) -> Vec<Vec<Vec<u8>>> {
    let len = 2 * d;
    let points: Vec<Vec<u8>> = projective_points(f, len)
        .into_iter()
        .filter(|p| f.hermitian(p, p) == 0)
        .collect();
    let mut level: Vec<Vec<Vec<u8>>> = points.iter().map(|p| vec![p.clone()]).collect();
    for _ in 1..d {
        let next: HashSet<Vec<Vec<u8>>> = level
            .par_iter()
            .flat_map_iter(|u| {
                let mut found = Vec::new();
                for p in &points {
                    if u.iter().all(|b| f.hermitian(b, p) == 0) {
                        let mut rows = u.clone();
                        rows.push(p.clone());
                        if f.rref(&mut rows) == u.len() + 1 {
                            found.push(rows);
                        }
                    }
                }
                found
            })
            .collect();
        level = next.into_iter().collect();
        level.sort();
    }
    level
}

fn label_subspace(f: &Field, basis: &[Vec<u8>]) -> String {
    basis
        .iter()
        .map(|r| r.iter().map(|&x| f.render(x)).collect::<Vec<_>>().join(" "))
        .collect::<Vec<_>>()
        .join("; ")
}

/// The dual polar graph on maximal totally isotropic subspaces, adjacent
/// when they meet in codimension 1.
pub fn build_hermitian_dual_polar(d: usize, r: u64) -> Result<FiniteGraph, FiniteGeomError> {
    if !matches!((d, r), (2, 2) | (3, 2) | (2, 3)) {
        return Err(FiniteGeomError::Unsupported(format!(
            "Hermitian dual polar graph with D = {d}, r = {r}"
        )));
    }
    let f = Field::new(r as u8).map_err(|e| FiniteGeomError::Invalid(e.to_string()))?;
    let subspaces = maximal_isotropic_subspaces(&f, d);
    let expected = hermitian_dual_polar_array(d, r)
        .map_err(|e| FiniteGeomError::Invalid(e.to_string()))?;
    if num_bigint::BigInt::from(subspaces.len()) != *expected.vertex_count() {
        return Err(FiniteGeomError::Invalid(format!(
            "enumerated {} subspaces, array predicts {}",
            subspaces.len(),
            expected.vertex_count()
        )));
    }
    let n = subspaces.len();
    let edges: Vec<(usize, usize)> = (0..n)
        .into_par_iter()
        .flat_map_iter(|i| {
            let subspaces = &subspaces;
            let f = &f;
            (i + 1..n).filter_map(move |j| {
                let mut m = subspaces[i].clone();
                m.extend(subspaces[j].iter().cloned());
                (f.rref(&mut m) == d + 1).then_some((i, j))
            })
        })
        .collect();
    let labels = subspaces.iter().map(|b| label_subspace(&f, b)).collect();
    FiniteGraph::from_edges(n, &edges, labels)
}

/// Largest allowed `q^D` for Hamming graphs.
pub const HAMMING_CAP: usize = 100_000;

/// Words of length `d` over `q` symbols, adjacent at Hamming distance 1.
pub fn build_hamming(d: usize, q: usize) -> Result<FiniteGraph, FiniteGeomError> {
    if d == 0 || q < 2 {
        return Err(FiniteGeomError::Unsupported(format!("H({d},{q})")));
    }
    let n = (q as u128).checked_pow(d as u32).unwrap_or(u128::MAX);
    if n > HAMMING_CAP as u128 {
        return Err(FiniteGeomError::SizeCap {
            n: usize::try_from(n).unwrap_or(usize::MAX),
            cap: HAMMING_CAP,
        });
    }
    let n = n as usize;
    let mut edges = Vec::new();
    let mut labels = Vec::with_capacity(n);
    for w in 0..n {
        let mut digits = Vec::with_capacity(d);
        let mut c = w;
        let mut place = 1;
        for _ in 0..d {
            let digit = c % q;
            digits.push(digit.to_string());
            for s in digit + 1..q {
                edges.push((w, w + (s - digit) * place));
            }
            c /= q;
            place *= q;
        }
        digits.reverse();
        labels.push(digits.join(if q > 10 { "," } else { "" }));
    }
    FiniteGraph::from_edges(n, &edges, labels)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gq_2_4() {
        let g = build_hermitian_dual_polar(2, 2).unwrap();
        assert_eq!(g.n(), 27);
        assert_eq!(g.edge_count(), 135);
        assert!((0..27).all(|v| g.degree(v) == 10));
    }

    #[test]
    fn hermitian_2_3_counts() {
        let g = build_hermitian_dual_polar(2, 3).unwrap();
        assert_eq!(g.n(), 112);
        assert!((0..112).all(|v| g.degree(v) == 30));
    }

    #[test]
    fn unsupported() {
        assert!(build_hermitian_dual_polar(3, 3).is_err());
        assert!(build_hamming(20, 3).is_err());
    }

    #[test]
    fn hamming_small() {
        let g = build_hamming(2, 3).unwrap();
        assert_eq!(g.n(), 9);
        assert_eq!(g.edge_count(), 18);
        let k3 = build_hamming(1, 3).unwrap();
        assert_eq!(k3.edge_count(), 3);
        let cube = build_hamming(3, 2).unwrap();
        assert_eq!(cube.diameter(), 3);
        assert_eq!(cube.labels()[5], "101");
    }
}
