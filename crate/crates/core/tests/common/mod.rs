#![allow(dead_code)]

pub mod props;

use drgkit::drg::{parse_array, IntersectionArray};
use drgkit::geometric::hermitian_dual_polar_array;
use drgkit::search::{search, SearchParams};

/// Named arrays of known graphs plus standard families.
pub const NAMED: &[(&str, &str)] = &[
    ("Petersen", "3,2;1,1"),
    ("K33", "3,2;1,3"),
    ("Heawood", "3,2,2;1,1,3"),
    ("dodecahedron", "3,2,1,1,1;1,1,1,2,3"),
    ("Pappus", "3,2,2,1;1,1,2,3"),
    ("Coxeter", "3,2,2,1;1,1,1,2"),
    ("Tutte 8-cage", "3,2,2,2;1,1,1,3"),
    ("Desargues", "3,2,2,1,1;1,1,2,2,3"),
    ("Tutte 12-cage", "3,2,2,2,2,2;1,1,1,1,1,3"),
    ("octahedron", "4,1;1,4"),
    ("line graph of Petersen", "4,2,1;1,1,4"),
    ("odd graph O4", "4,3,3;1,1,2"),
    ("icosahedron", "5,2,1;1,2,5"),
    ("Clebsch", "5,4;1,2"),
    ("Wells", "5,4,1,1;1,1,4,5"),
    ("GQ(2,2)", "6,4;1,3"),
    ("Shrikhande", "6,3;1,2"),
    ("Hoffman-Singleton", "7,6;1,1"),
    ("J(6,3)", "9,4,1;1,4,9"),
    ("Gewirtz", "10,9;1,2"),
    ("halved 6-cube", "15,6,1;1,6,15"),
    ("Schlaefli", "16,5;1,8"),
    ("J(8,4)", "16,9,4,1;1,4,9,16"),
    ("Higman-Sims", "22,21;1,6"),
    ("Gosset", "27,10,1;1,10,27"),
];

pub fn hamming(d: u64, q: u64) -> IntersectionArray {
    let b = (0..d).map(|i| (d - i) * (q - 1)).collect();
    let c = (1..=d).collect();
    IntersectionArray::new(b, c).unwrap()
}

pub fn generators() -> Vec<IntersectionArray> {
    let mut v = Vec::new();
    for d in 2..=4 {
        for r in [2, 3] {
            v.push(hermitian_dual_polar_array(d, r).unwrap());
        }
    }
    v
}

/// Every feasible array with k ≤ 5 and D ≤ 3 from the exhaustive search.
pub fn searched() -> Vec<IntersectionArray> {
    search(&SearchParams::new(5, 3)).unwrap().hits
}

pub fn corpus() -> Vec<(String, IntersectionArray)> {
    let mut v: Vec<(String, IntersectionArray)> = NAMED
        .iter()
        .map(|(n, t)| (n.to_string(), parse_array(t).unwrap()))
        .collect();
    for g in generators() {
        v.push((format!("hermitian {g}"), g));
    }
    for d in 2..=4 {
        v.push((format!("H({d},3)"), hamming(d, 3)));
    }
    v.push(("H(3,4)".into(), hamming(3, 4)));
    for d in 3..=6 {
        v.push((format!("Q{d}"), hamming(d, 2)));
    }
    for a in searched() {
        if !v.iter().any(|(_, b)| *b == a) {
            v.push((format!("searched {a}"), a));
        }
    }
    v
}
