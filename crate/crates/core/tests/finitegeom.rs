use std::time::Instant;

use drgkit::drg::parse_array;
use drgkit::exactnum::Scalar;
use drgkit::finitegeom::*;
use drgkit::geometric::{gamma_sequence, hermitian_dual_polar_array};

#[test]
fn hermitian_3_2_full_verification() {
    let t = Instant::now();
    let g = build_hermitian_dual_polar(3, 2).unwrap();
    assert_eq!(g.n(), 891);
    assert!((0..g.n()).all(|v| g.degree(v) == 42));
    let m = measure_parameters(&g).unwrap();
    assert_eq!(m.intersection_array, hermitian_dual_polar_array(3, 2).unwrap());
    assert_eq!(m.gamma_measured, Some(vec![1, 1, 1]));
    assert_eq!(m.maximal_clique_sizes.keys().copied().collect::<Vec<_>>(), vec![3]);
    assert!(m.delsarte_complete && m.is_k112_free && m.locally_disjoint_cliques);
    assert_eq!(m.locally_clique_sizes.get(&2), Some(&(891 * 21)));
    let cliques = maximal_cliques(&g);
    assert_eq!(cliques.len(), 891 * 42 / 6);
    for c in cliques.iter().step_by(97) {
        let r = verify_delsarte_completely_regular(&g, c, &m.clique_bound).unwrap();
        assert!(r.is_completely_regular);
        assert_eq!(r.covering_radius, 2);
    }
    let spec = m.intersection_array.spectral().unwrap();
    let lt = verify_light_tail_on_graph(&g, &spec).unwrap();
    assert!(lt.is_light_tail && lt.krein_agrees);
    let gq = find_induced_gq(&g, 2, 4).unwrap();
    assert!(gq.is_gq);
    assert_eq!(gq.vertices.len(), 27);
    assert_eq!(gq.measured_array, Some(parse_array("10,8;1,5").unwrap()));
    eprintln!("891-vertex verification in {:?}", t.elapsed());
}

#[test]
fn measured_gamma_matches_array_level() {
    for g in [build_hermitian_dual_polar(2, 2).unwrap(), build_hamming(3, 3).unwrap()] {
        let m = measure_parameters(&g).unwrap();
        let arr = &m.intersection_array;
        let spec = arr.spectral().unwrap();
        let gamma = gamma_sequence(arr, &spec).gamma.unwrap();
        let measured: Vec<Scalar> = m.gamma_measured.unwrap().into_iter().map(|x| Scalar::from(x as i64)).collect();
        assert_eq!(gamma[..measured.len()], measured[..]);
    }
}

#[test]
fn hermitian_2_3() {
    let g = build_hermitian_dual_polar(2, 3).unwrap();
    let m = measure_parameters(&g).unwrap();
    assert_eq!(m.intersection_array.to_text(), "30,27;1,10");
    assert_eq!(m.gamma_measured, Some(vec![1, 1]));
    let lt = verify_light_tail_on_graph(&g, &m.intersection_array.spectral().unwrap()).unwrap();
    assert!(lt.is_light_tail);
}

#[test]
fn hamming_light_tail_is_reported() {
    let g = build_hamming(2, 3).unwrap();
    let arr = parse_array("4,2;1,2").unwrap();
    let r = verify_light_tail_on_graph(&g, &arr.spectral().unwrap()).unwrap();
    assert!(r.krein_agrees);
}
