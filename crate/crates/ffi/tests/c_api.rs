use std::ffi::{CStr, CString};
use std::ptr;

use drgkit_ffi::*;

unsafe fn take(s: *mut std::ffi::c_char) -> String {
    let out = CStr::from_ptr(s).to_str().unwrap().to_string();
    drg_string_free(s);
    out
}

fn parse(text: &str) -> (DrgStatus, *mut DrgArray) {
    let c = CString::new(text).unwrap();
    let mut a = ptr::null_mut();
    let st = unsafe { drg_array_parse(c.as_ptr(), &mut a) };
    (st, a)
}

#[test]
fn array_round_trip() {
    let (st, a) = parse("{42, 40, 32; 1, 5, 21}");
    assert_eq!(st, DrgStatus::Ok);
    unsafe {
        let mut d = 0usize;
        assert_eq!(drg_array_diameter(a, &mut d), DrgStatus::Ok);
        assert_eq!(d, 3);
        let mut s = ptr::null_mut();
        assert_eq!(drg_array_text(a, &mut s), DrgStatus::Ok);
        assert_eq!(take(s), "42,40,32;1,5,21");
        assert_eq!(drg_array_vertex_count(a, &mut s), DrgStatus::Ok);
        assert_eq!(take(s), "891");
        let expect = [("42", "1"), ("9", "252"), ("-3", "616"), ("-21", "22")];
        for (i, (t, m)) in expect.iter().enumerate() {
            assert_eq!(drg_array_eigenvalue(a, i, &mut s), DrgStatus::Ok);
            assert_eq!(take(s), format!("\"{t}\""));
            assert_eq!(drg_array_multiplicity(a, i, &mut s), DrgStatus::Ok);
            assert_eq!(take(s), *m);
        }
        assert_eq!(drg_array_eigenvalue(a, 4, &mut s), DrgStatus::OutOfRange);
        let (mut lt, mut f) = (0, 0i64);
        assert_eq!(drg_array_light_tail(a, 3, &mut lt, &mut f), DrgStatus::Ok);
        assert_eq!((lt, f), (1, 1));
        assert_eq!(drg_array_report_json(a, DRG_REPORT_ASSUME_2_BOUNDED, &mut s), DrgStatus::Ok);
        let r: serde_json::Value = serde_json::from_str(&take(s)).unwrap();
        assert_eq!(r["classification"]["hermitian"]["verdict"]["kind"], "IsHermitianDualPolar");
        drg_array_free(a);
    }
}

#[test]
fn errors_and_messages() {
    let (st, a) = parse("10,8;1,6");
    assert_eq!(st, DrgStatus::InvalidInput);
    assert!(a.is_null());
    let msg = unsafe { CStr::from_ptr(drg_last_error()) }.to_str().unwrap();
    assert!(msg.contains("k_2 not integral"));
    unsafe {
        let mut a = ptr::null_mut();
        assert_eq!(drg_array_parse(ptr::null(), &mut a), DrgStatus::NullPointer);
        let mut d = 0usize;
        assert_eq!(drg_array_diameter(ptr::null(), &mut d), DrgStatus::NullPointer);
        let bad = [0xffu8, 0];
        assert_eq!(drg_array_parse(bad.as_ptr().cast(), &mut a), DrgStatus::InvalidUtf8);
        let mut g = ptr::null_mut();
        assert_eq!(drg_graph_hermitian(3, 3, &mut g), DrgStatus::Unsupported);
        assert!(g.is_null());
        drg_array_free(ptr::null_mut());
        drg_graph_free(ptr::null_mut());
        drg_string_free(ptr::null_mut());
        let v = CStr::from_ptr(drg_version()).to_str().unwrap();
        assert_eq!(v, env!("CARGO_PKG_VERSION"));
    }
}

#[test]
fn graph_handles() {
    unsafe {
        let mut g = ptr::null_mut();
        assert_eq!(drg_graph_hermitian(2, 2, &mut g), DrgStatus::Ok);
        let mut n = 0usize;
        assert_eq!(drg_graph_vertex_count(g, &mut n), DrgStatus::Ok);
        assert_eq!(n, 27);
        assert_eq!(drg_graph_edge_count(g, &mut n), DrgStatus::Ok);
        assert_eq!(n, 135);
        let mut a = ptr::null_mut();
        assert_eq!(drg_graph_measure(g, &mut a), DrgStatus::Ok);
        let mut s = ptr::null_mut();
        assert_eq!(drg_array_text(a, &mut s), DrgStatus::Ok);
        assert_eq!(take(s), "10,8;1,5");
        let mut lt = -1;
        assert_eq!(drg_graph_light_tail(g, a, &mut lt), DrgStatus::Ok);
        assert_eq!(lt, 1);
        assert_eq!(drg_graph_edge_list(g, &mut s), DrgStatus::Ok);
        assert_eq!(take(s).lines().count(), 135);
        drg_array_free(a);
        drg_graph_free(g);

        assert_eq!(drg_graph_hamming(3, 2, &mut g), DrgStatus::Ok);
        assert_eq!(drg_graph_measure(g, &mut a), DrgStatus::Ok);
        assert_eq!(drg_graph_light_tail(g, a, &mut lt), DrgStatus::Ok);
        assert_eq!(lt, 0);
        let (_, other) = parse("10,8;1,5");
        assert_eq!(drg_graph_light_tail(g, other, &mut lt), DrgStatus::InvalidInput);
        drg_array_free(other);
        drg_array_free(a);
        drg_graph_free(g);
    }
}

#[test]
fn header_declares_every_export() {
    let header = include_str!("../include/drgkit.h");
    let src = include_str!("../src/lib.rs");
    for line in src.lines().filter(|l| l.contains("extern \"C\" fn ")) {
        let name = line.split("fn ").nth(1).unwrap().split('(').next().unwrap();
        assert!(header.contains(&format!("{name}(")), "{name} missing from header");
    }
    assert!(header.contains("typedef struct DrgArray DrgArray;"));
}
