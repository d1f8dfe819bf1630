//! Exhaustive enumeration of feasible intersection arrays in a box.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::bounds::geometric_smallest;
use crate::drg::IntersectionArray;
use crate::krein::{krein_tensor, light_tail_at};

pub const MAX_K_CAP: u64 = 200;
pub const MAX_D_CAP: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Hypothesis {
    /// `a_1 = 1`, `c_2 ≥ 5`, `θ_D = -k/2`.
    Thm12,
    /// `a_1 ≠ 0`, `c_2 = (a_1+1)²+1`, `θ_D = -k/(a_1+1)`, `E_D` a light tail with `F = E_1`.
    Lt,
}

impl FromStr for Hypothesis {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "thm12" => Ok(Hypothesis::Thm12),
            "lt" => Ok(Hypothesis::Lt),
            _ => Err(format!("unknown hypothesis set {s:?}; expected thm12 or lt")),
        }
    }
}

impl fmt::Display for Hypothesis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Hypothesis::Thm12 => "thm12",
            Hypothesis::Lt => "lt",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("max-k {0} exceeds the cap of {MAX_K_CAP}")]
    KCap(u64),
    #[error("max-D {0} exceeds the cap of {MAX_D_CAP}")]
    DCap(usize),
    #[error("max-D must be at least 2")]
    SmallD,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchParams {
    pub max_k: u64,
    pub max_d: usize,
    pub min_k: u64,
    pub a1: Option<u64>,
    pub hypothesis: Option<Hypothesis>,
}

impl SearchParams {
    pub fn new(max_k: u64, max_d: usize) -> Self {
        SearchParams {
            max_k,
            max_d,
            min_k: 3,
            a1: None,
            hypothesis: None,
        }
    }
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct SearchStats {
    /// Arrays reaching the spectral stage.
    pub candidates: usize,
    pub rejected_multiplicity: usize,
    pub rejected_krein: usize,
    pub rejected_hypothesis: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct SearchOutcome {
    /// Sorted by array text.
    pub hits: Vec<IntersectionArray>,
    pub stats: SearchStats,
}

/// Scaled leading minors `s^{i+1} det(θ I - L_i)` at `θ = -k/s`, kept as a
/// pair so the next one follows from the three-term recurrence.
#[derive(Clone)]
struct Minors {
    prev: BigInt,
    cur: BigInt,
}

struct Branch {
    k: u64,
    /// `a_1 + 1` when the smallest eigenvalue is pinned to `-k/(a_1+1)`.
    s: Option<u64>,
    b: Vec<u64>,
    c: Vec<u64>,
    ki: Vec<u128>,
    minors: Option<Minors>,
}

impl Branch {
    fn level(&self) -> usize {
        self.b.len()
    }

    /// Minor after appending `(c_i, a_i)`; `None` if the pinned sign fails.
    fn step(&self, c: u64, a: u64) -> Option<Option<Minors>> {
        let (Some(s), Some(m)) = (self.s, &self.minors) else {
            return Some(None);
        };
        let i = self.level();
        let s = BigInt::from(s);
        let lead = -BigInt::from(self.k) - &s * a;
        let next = &lead * &m.cur - &s * &s * BigInt::from(self.b[i - 1]) * c * &m.prev;
        // p_i(θ) must have sign (-1)^{i+1}: all roots of L_i lie above θ.
        let want_negative = i.is_multiple_of(2);
        if next.is_zero() || next.is_negative() != want_negative {
            return None;
        }
        let g = next.gcd(&m.cur);
        Some(Some(Minors {
            prev: &m.cur / &g,
            cur: next / g,
        }))
    }
}

fn pinned_c_d(br: &Branch) -> Option<u64> {
    let (s, m) = (br.s?, br.minors.as_ref()?);
    let d = br.level();
    let s = BigInt::from(s);
    let k = BigInt::from(br.k);
    // (-k - s(k - c_D)) P_{D-1} - s² b_{D-1} c_D P_{D-2} = 0
    let num = &k * (BigInt::from(1) + &s) * &m.cur;
    let den = &s * (&m.cur - &s * BigInt::from(br.b[d - 1]) * &m.prev);
    if den.is_zero() {
        return None;
    }
    let (q, r) = num.div_rem(&den);
    if !r.is_zero() || q.is_negative() {
        return None;
    }
    u64::try_from(q).ok()
}

fn grow(br: &mut Branch, p: &SearchParams, out: &mut Vec<(Vec<u64>, Vec<u64>)>) {
    let i = br.level();
    let k = br.k;
    let c_prev = *br.c.last().unwrap();
    let b_prev = br.b[i - 1];
    let k_prev = br.ki[i - 1];
    let last_c_ok = |c: u64| {
        c >= c_prev && c <= k && (k_prev * b_prev as u128).is_multiple_of(c as u128)
    };
    // Terminate with D = i.
    if i >= 2 {
        let terminals: Vec<u64> = match br.s {
            Some(_) => pinned_c_d(br).into_iter().collect(),
            None => (c_prev..=k).collect(),
        };
        for c in terminals {
            if last_c_ok(c) && level2_ok(p, i, c, br) {
                let mut cs = br.c.clone();
                cs.push(c);
                out.push((br.b.clone(), cs));
            }
        }
    }
    if i >= p.max_d {
        return;
    }
    for c in c_prev..=k {
        if !last_c_ok(c) {
            continue;
        }
        let k_next = k_prev * b_prev as u128 / c as u128;
        for b in 1..=b_prev.min(k - c) {
            let a = k - b - c;
            if !level2_ok(p, i, c, br) {
                continue;
            }
            let Some(minors) = br.step(c, a) else { continue };
            let saved = std::mem::replace(&mut br.minors, minors);
            br.b.push(b);
            br.c.push(c);
            br.ki.push(k_next);
            grow(br, p, out);
            br.b.pop();
            br.c.pop();
            br.ki.pop();
            br.minors = saved;
        }
    }
}

/// Hypothesis-specific constraints on `c_2`.
fn level2_ok(p: &SearchParams, i: usize, c: u64, br: &Branch) -> bool {
    if i != 2 {
        return true;
    }
    let a1 = br.k - br.b[1] - 1;
    match p.hypothesis {
        Some(Hypothesis::Thm12) => c >= 5,
        Some(Hypothesis::Lt) => c == (a1 + 1) * (a1 + 1) + 1,
        None => true,
    }
}

fn enumerate(p: &SearchParams) -> Vec<(Vec<u64>, Vec<u64>)> {
    let roots: Vec<(u64, u64)> = (p.min_k.max(2)..=p.max_k)
        .flat_map(|k| (0..k - 1).map(move |a1| (k, a1)))
        .filter(|&(_, a1)| p.a1.is_none_or(|x| x == a1))
        .filter(|&(_, a1)| match p.hypothesis {
            Some(Hypothesis::Thm12) => a1 == 1,
            Some(Hypothesis::Lt) => a1 >= 1,
            None => true,
        })
        .collect();
    roots
        .into_par_iter()
        .flat_map_iter(|(k, a1)| {
            let s = p.hypothesis.map(|_| a1 + 1);
            let b1 = k - 1 - a1;
            let minors = s.map(|s| {
                let (kk, ss) = (BigInt::from(k), BigInt::from(s));
                let p0 = -kk.clone();
                let p1 = (-&kk - &ss * a1) * &p0 - &ss * &ss * &kk;
                Minors { prev: p0, cur: p1 }
            });
            if minors.as_ref().is_some_and(|m| !m.cur.is_positive()) {
                return Vec::new();
            }
            let mut br = Branch {
                k,
                s,
                b: vec![k, b1],
                c: vec![1],
                ki: vec![1, k as u128],
                minors,
            };
            let mut out = Vec::new();
            if b1 > 0 {
                grow(&mut br, p, &mut out);
            }
            out
        })
        .collect()
}

fn satisfies(h: Hypothesis, arr: &IntersectionArray) -> bool {
    let Ok(spec) = arr.spectral() else { return false };
    let d = arr.diameter();
    if arr.valency() < 3 || d < 2 {
        return false;
    }
    let a1 = arr.a(1);
    match h {
        Hypothesis::Thm12 => {
            a1 == 1 && arr.c(2) >= 5 && *spec.smallest() == geometric_smallest(arr)
        }
        Hypothesis::Lt => {
            a1 >= 1
                && arr.c(2) == (a1 + 1) * (a1 + 1) + 1
                && *spec.smallest() == geometric_smallest(arr)
                && light_tail_at(&spec, d).associated_index == Some(1)
        }
    }
}

/// Runs the enumeration and the spectral, Krein and hypothesis filters.
pub fn search(p: &SearchParams) -> Result<SearchOutcome, SearchError> {
    if p.max_k > MAX_K_CAP {
        return Err(SearchError::KCap(p.max_k));
    }
    if p.max_d > MAX_D_CAP {
        return Err(SearchError::DCap(p.max_d));
    }
    if p.max_d < 2 {
        return Err(SearchError::SmallD);
    }
    let raw = enumerate(p);
    enum Fate {
        Hit(IntersectionArray),
        Multiplicity,
        Krein,
        Hypothesis,
        Invalid,
    }
    let fates: Vec<Fate> = raw
        .into_par_iter()
        .map(|(b, c)| {
            let b = b[..c.len()].to_vec();
            let Ok(arr) = IntersectionArray::new(b, c) else { return Fate::Invalid };
            let Ok(spec) = arr.spectral() else { return Fate::Multiplicity };
            if let Some(h) = p.hypothesis {
                if !satisfies(h, &arr) {
                    return Fate::Hypothesis;
                }
            }
            if krein_tensor(&spec).is_err() {
                return Fate::Krein;
            }
            Fate::Hit(arr)
        })
        .collect();
    let mut stats = SearchStats::default();
    let mut hits = Vec::new();
    for f in fates {
        match f {
            Fate::Invalid => continue,
            Fate::Hit(a) => hits.push(a),
            Fate::Multiplicity => stats.rejected_multiplicity += 1,
            Fate::Krein => stats.rejected_krein += 1,
            Fate::Hypothesis => stats.rejected_hypothesis += 1,
        }
        stats.candidates += 1;
    }
    hits.sort_by_key(|a| a.to_text());
    Ok(SearchOutcome { hits, stats })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::drg::parse_array;

    #[test]
    fn caps() {
        assert_eq!(search(&SearchParams::new(201, 3)).unwrap_err(), SearchError::KCap(201));
        assert_eq!(search(&SearchParams::new(10, 7)).unwrap_err(), SearchError::DCap(7));
    }

    #[test]
    fn cubic_arrays() {
        let out = search(&SearchParams::new(3, 6)).unwrap();
        let texts: Vec<String> = out.hits.iter().map(|a| a.to_text()).collect();
        for known in ["3,2,1;1,2,3", "3,2;1,1", "3,2,2,1;1,1,1,2", "3,2,1,1,1;1,1,1,2,3", "3,2,2;1,1,3"] {
            assert!(texts.contains(&known.to_string()), "{known} missing");
        }
        let mut p = SearchParams::new(3, 6);
        p.hypothesis = Some(Hypothesis::Thm12);
        assert!(search(&p).unwrap().hits.is_empty());
    }

    #[test]
    fn light_tail_small() {
        let mut p = SearchParams::new(11, 2);
        p.hypothesis = Some(Hypothesis::Lt);
        let out = search(&p).unwrap();
        assert!(out.hits.contains(&parse_array("10,8;1,5").unwrap()));
    }

    #[test]
    fn pinned_matches_unpinned() {
        // Every unpinned hit with the thm12 properties must show up in the pinned run.
        let mut p = SearchParams::new(12, 3);
        p.a1 = Some(1);
        let all = search(&p).unwrap().hits;
        let expect: Vec<_> = all.into_iter().filter(|a| satisfies(Hypothesis::Thm12, a)).collect();
        p.hypothesis = Some(Hypothesis::Thm12);
        assert_eq!(search(&p).unwrap().hits, expect);
    }
}
