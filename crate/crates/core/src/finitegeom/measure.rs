use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use super::graph::FiniteGraph;
use super::FiniteGeomError;
use crate::drg::IntersectionArray;
use crate::exactnum::Scalar;

/// Parameters read off a constructed graph.
#[derive(Debug, Clone, Serialize)]
pub struct MeasuredParameters {
    pub intersection_array: IntersectionArray,
    /// `γ_0..γ_{D-1}` over Delsarte cliques, when constant.
    pub gamma_measured: Option<Vec<u64>>,
    /// Neighbourhood clique sizes, counted over all vertices.
    pub locally_clique_sizes: BTreeMap<usize, usize>,
    /// Every neighbourhood is a disjoint union of `(a_1+1)`-cliques.
    pub locally_disjoint_cliques: bool,
    pub is_k112_free: bool,
    /// Sizes of all maximal cliques.
    pub maximal_clique_sizes: BTreeMap<usize, usize>,
    pub clique_bound: Scalar,
    pub delsarte_clique_count: usize,
    /// Every maximal clique attains the clique bound.
    pub delsarte_complete: bool,
    pub diagnostics: Vec<String>,
}

/// Verifies distance-regularity over every ordered pair and returns the array.
pub fn measure_array(g: &FiniteGraph) -> Result<IntersectionArray, FiniteGeomError> {
    let n = g.n();
    let d = g.diameter();
    if d == 0 {
        return Err(FiniteGeomError::Invalid("single vertex".into()));
    }
    // Per source: (c_i, b_i) for each i, or the first violating pair.
    let per_source: Vec<Result<Vec<(u32, u32)>, String>> = (0..n)
        .into_par_iter()
        .map(|x| {
            let mut seen: Vec<Option<(u32, u32)>> = vec![None; d + 1];
            for y in 0..n {
                let i = g.dist(x, y);
                let (mut c, mut b) = (0u32, 0u32);
                for &z in g.neighbours(y) {
                    let j = g.dist(x, z as usize);
                    if j + 1 == i {
                        c += 1;
                    } else if j == i + 1 {
                        b += 1;
                    }
                }
                match seen[i] {
                    None => seen[i] = Some((c, b)),
                    Some(prev) if prev != (c, b) => {
                        return Err(format!(
                            "pair ({x}, {y}) at distance {i} has (c, b) = ({c}, {b}), expected {prev:?}"
                        ))
                    }
                    _ => {}
                }
            }
            seen.into_iter()
                .enumerate()
                .map(|(i, v)| v.ok_or_else(|| format!("vertex {x} has no vertex at distance {i}")))
                .collect()
        })
        .collect();
    let mut reference: Option<Vec<(u32, u32)>> = None;
    for (x, r) in per_source.into_iter().enumerate() {
        let v = r.map_err(FiniteGeomError::NotDistanceRegular)?;
        match &reference {
            None => reference = Some(v),
            Some(rv) if *rv != v => {
                return Err(FiniteGeomError::NotDistanceRegular(format!(
                    "vertex {x} sees parameters {v:?}, vertex 0 sees {rv:?}"
                )))
            }
            _ => {}
        }
    }
    let p = reference.unwrap();
    let b = (0..d).map(|i| p[i].1 as u64).collect();
    let c = (1..=d).map(|i| p[i].0 as u64).collect();
    IntersectionArray::new(b, c).map_err(|e| FiniteGeomError::NotDistanceRegular(e.to_string()))
}

fn bits_iter(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(w, &bits)| {
        (0..64).filter(move |b| bits >> b & 1 == 1).map(move |b| w * 64 + b)
    })
}

/// All maximal cliques (Bron–Kerbosch with pivoting), each sorted.
pub fn maximal_cliques(g: &FiniteGraph) -> Vec<Vec<usize>> {
    let n = g.n();
    let words = n.div_ceil(64);
    let mut out = Vec::new();
    // Degeneracy-free outer loop: vertex v with P = later neighbours, X = earlier.
    for v in 0..n {
        let mut p = vec![0u64; words];
        let mut x = vec![0u64; words];
        for &w in g.neighbours(v) {
            let w = w as usize;
            if w > v {
                p[w / 64] |= 1 << (w % 64);
            } else {
                x[w / 64] |= 1 << (w % 64);
            }
        }
        let mut r = vec![v];
        bron_kerbosch(g, &mut r, p, x, &mut out);
    }
    out
}

fn bron_kerbosch(
    g: &FiniteGraph,
    r: &mut Vec<usize>,
    p: Vec<u64>,
    x: Vec<u64>,
    out: &mut Vec<Vec<usize>>,
) {
    if p.iter().all(|&w| w == 0) {
        if x.iter().all(|&w| w == 0) {
            let mut c = r.clone();
            c.sort_unstable();
            out.push(c);
        }
        return;
    }
    let pivot = bits_iter(&p)
        .chain(bits_iter(&x))
        .max_by_key(|&u| {
            g.row(u)
                .iter()
                .zip(&p)
                .map(|(a, b)| (a & b).count_ones())
                .sum::<u32>()
        })
        .unwrap();
    let candidates: Vec<usize> = bits_iter(&p)
        .filter(|&v| !g.adjacent(pivot, v))
        .collect();
    let mut p = p;
    let mut x = x;
    for v in candidates {
        let row = g.row(v);
        let np: Vec<u64> = p.iter().zip(row).map(|(a, b)| a & b).collect();
        let nx: Vec<u64> = x.iter().zip(row).map(|(a, b)| a & b).collect();
        r.push(v);
        bron_kerbosch(g, r, np, nx, out);
        r.pop();
        p[v / 64] &= !(1 << (v % 64));
        x[v / 64] |= 1 << (v % 64);
    }
}

/// No edge whose common neighbours contain a non-adjacent pair.
pub fn is_k112_free(g: &FiniteGraph) -> bool {
    (0..g.n()).into_par_iter().all(|u| {
        g.neighbours(u).iter().all(|&v| {
            let v = v as usize;
            if v < u {
                return true;
            }
            let common: Vec<usize> = g
                .neighbours(u)
                .iter()
                .map(|&w| w as usize)
                .filter(|&w| g.adjacent(v, w))
                .collect();
            common
                .iter()
                .enumerate()
                .all(|(i, &a)| common[i + 1..].iter().all(|&b| g.adjacent(a, b)))
        })
    })
}

/// Component sizes of each neighbourhood, and whether every component is a clique.
fn local_structure(g: &FiniteGraph) -> (BTreeMap<usize, usize>, bool) {
    let per: Vec<(Vec<usize>, bool)> = (0..g.n())
        .into_par_iter()
        .map(|u| {
            let nb: Vec<usize> = g.neighbours(u).iter().map(|&w| w as usize).collect();
            let mut seen = vec![false; nb.len()];
            let mut sizes = Vec::new();
            let mut all_cliques = true;
            for s in 0..nb.len() {
                if seen[s] {
                    continue;
                }
                let mut comp = vec![s];
                seen[s] = true;
                let mut k = 0;
                while k < comp.len() {
                    let a = nb[comp[k]];
                    for t in 0..nb.len() {
                        if !seen[t] && g.adjacent(a, nb[t]) {
                            seen[t] = true;
                            comp.push(t);
                        }
                    }
                    k += 1;
                }
                let is_clique = comp.iter().enumerate().all(|(i, &a)| {
                    comp[i + 1..].iter().all(|&b| g.adjacent(nb[a], nb[b]))
                });
                all_cliques &= is_clique;
                sizes.push(comp.len());
            }
            (sizes, all_cliques)
        })
        .collect();
    let mut hist = BTreeMap::new();
    let mut ok = true;
    for (sizes, c) in per {
        ok &= c;
        for s in sizes {
            *hist.entry(s).or_insert(0) += 1;
        }
    }
    (hist, ok)
}

pub fn distance_to_set(g: &FiniteGraph, x: usize, set: &[usize]) -> usize {
    set.iter().map(|&c| g.dist(x, c)).min().unwrap_or(usize::MAX)
}

/// `γ_i = |Γ_i(x) ∩ C|` for `d(x, C) = i`, if constant over all pairs.
fn measure_gamma(g: &FiniteGraph, cliques: &[&Vec<usize>], d: usize) -> Result<Vec<u64>, String> {
    let per: Vec<Result<Vec<Option<u64>>, String>> = cliques
        .par_iter()
        .map(|c| {
            let mut gam: Vec<Option<u64>> = vec![None; d + 1];
            for x in 0..g.n() {
                let i = distance_to_set(g, x, c);
                let cnt = c.iter().filter(|&&y| g.dist(x, y) == i).count() as u64;
                match gam[i] {
                    None => gam[i] = Some(cnt),
                    Some(p) if p != cnt => return Err(format!("γ_{i} not constant on clique {c:?}")),
                    _ => {}
                }
            }
            Ok(gam)
        })
        .collect();
    let mut acc: Vec<Option<u64>> = vec![None; d + 1];
    for r in per {
        for (i, v) in r?.into_iter().enumerate() {
            match (acc[i], v) {
                (_, None) => {}
                (None, Some(x)) => acc[i] = Some(x),
                (Some(a), Some(b)) if a != b => return Err(format!("γ_{i} differs between cliques")),
                _ => {}
            }
        }
    }
    (0..d)
        .map(|i| acc[i].ok_or_else(|| format!("no vertex at distance {i} from a clique")))
        .collect()
}

pub fn measure_parameters(g: &FiniteGraph) -> Result<MeasuredParameters, FiniteGeomError> {
    let arr = measure_array(g)?;
    let d = arr.diameter();
    let spec = arr
        .spectral()
        .map_err(|e| FiniteGeomError::Invalid(format!("measured array infeasible: {e}")))?;
    let clique_bound = crate::geometric::delsarte_bound(&arr, &spec);
    let cliques = maximal_cliques(g);
    let mut sizes = BTreeMap::new();
    for c in &cliques {
        *sizes.entry(c.len()).or_insert(0) += 1;
    }
    let delsarte: Vec<&Vec<usize>> = cliques
        .iter()
        .filter(|c| Scalar::from(c.len() as i64) == clique_bound)
        .collect();
    let delsarte_complete = !cliques.is_empty() && delsarte.len() == cliques.len();
    let mut diagnostics = Vec::new();
    let gamma_measured = if delsarte.is_empty() {
        diagnostics.push("no Delsarte cliques: γ not measured".into());
        None
    } else {
        match measure_gamma(g, &delsarte, d) {
            Ok(v) => Some(v),
            Err(e) => {
                diagnostics.push(e);
                None
            }
        }
    };
    let (local, all_cliques) = local_structure(g);
    let target = arr.a(1) as usize + 1;
    let locally_disjoint_cliques = all_cliques && local.keys().all(|&s| s == target);
    Ok(MeasuredParameters {
        intersection_array: arr,
        gamma_measured,
        locally_clique_sizes: local,
        locally_disjoint_cliques,
        is_k112_free: is_k112_free(g),
        maximal_clique_sizes: sizes,
        clique_bound,
        delsarte_clique_count: delsarte.len(),
        delsarte_complete,
        diagnostics,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CompletelyRegularReport {
    pub is_completely_regular: bool,
    pub covering_radius: usize,
    /// Cell of the distance partition where equitability first fails.
    pub violating_cell: Option<usize>,
    /// Neighbour counts `α_ij` when equitable.
    pub parameters: Option<Vec<Vec<usize>>>,
}

/// Distance partition of `clique` must be equitable with covering radius `D-1`.
pub fn verify_delsarte_completely_regular(
    g: &FiniteGraph,
    clique: &[usize],
    clique_bound: &Scalar,
) -> Result<CompletelyRegularReport, FiniteGeomError> {
    if Scalar::from(clique.len() as i64) != *clique_bound {
        return Err(FiniteGeomError::Precondition(format!(
            "clique of size {} does not attain the bound {}",
            clique.len(),
            clique_bound
        )));
    }
    let n = g.n();
    let cell: Vec<usize> = (0..n).map(|x| distance_to_set(g, x, clique)).collect();
    let rho = cell.iter().copied().max().unwrap_or(0);
    let mut alpha: Vec<Vec<Option<usize>>> = vec![vec![None; rho + 1]; rho + 1];
    let mut violating = None;
    'outer: for x in 0..n {
        let mut counts = vec![0usize; rho + 1];
        for &y in g.neighbours(x) {
            counts[cell[y as usize]] += 1;
        }
        let i = cell[x];
        for j in 0..=rho {
            match alpha[i][j] {
                None => alpha[i][j] = Some(counts[j]),
                Some(a) if a != counts[j] => {
                    violating = Some(i);
                    break 'outer;
                }
                _ => {}
            }
        }
    }
    let equitable = violating.is_none();
    let ok = equitable && rho + 1 == g.diameter();
    Ok(CompletelyRegularReport {
        is_completely_regular: ok,
        covering_radius: rho,
        violating_cell: violating.or((!ok).then_some(rho)),
        parameters: equitable.then(|| {
            alpha
                .into_iter()
                .map(|r| r.into_iter().map(|v| v.unwrap_or(0)).collect())
                .collect()
        }),
    })
}
