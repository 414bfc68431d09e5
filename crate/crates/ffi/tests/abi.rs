use std::ffi::{c_char, CStr, CString};
use std::path::Path;
use std::process::Command;
use std::ptr;

use schemeforge_ffi::*;

fn catalog(name: &str) -> *mut SfScheme {
    let c = CString::new(name).unwrap();
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { sf_scheme_from_catalog(c.as_ptr(), &mut s) }, SfStatus::Ok);
    s
}

#[test]
fn dodecahedron_multiplicities() {
    let s = catalog("dodecahedron");
    let (mut n, mut r) = (0, 0);
    let mut buf = [0usize; 8];
    let mut w = 0;
    unsafe {
        assert_eq!(sf_scheme_size(s, &mut n, &mut r), SfStatus::Ok);
        assert_eq!(sf_scheme_multiplicities(s, buf.as_mut_ptr(), buf.len(), &mut w), SfStatus::Ok);
        sf_scheme_free(s);
    }
    assert_eq!((n, r), (20, 6));
    assert_eq!(&buf[..w], &[1, 3, 5, 4, 4, 3]);
}

#[test]
fn intersection_numbers_and_range_checks() {
    let s = catalog("cube");
    let mut p = 0;
    unsafe {
        assert_eq!(sf_scheme_intersection_number(s, 1, 1, 2, &mut p), SfStatus::Ok);
        assert_eq!(p, 2);
        assert_eq!(sf_scheme_intersection_number(s, 9, 1, 2, &mut p), SfStatus::InvalidArgument);
        assert_eq!(sf_scheme_intersection_number(ptr::null_mut(), 0, 0, 0, &mut p), SfStatus::NullPointer);
        sf_scheme_free(s);
    }
}

#[test]
fn graph_text_and_scheme_text() {
    let g = CString::new("4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n").unwrap();
    let bad = CString::new("4 6\n0 1\nx y\n").unwrap();
    let mut s = ptr::null_mut();
    let (mut n, mut r) = (0, 0);
    unsafe {
        assert_eq!(sf_scheme_from_graph_text(g.as_ptr(), &mut s), SfStatus::Ok);
        assert_eq!(sf_scheme_size(s, &mut n, &mut r), SfStatus::Ok);
        sf_scheme_free(s);
        assert_eq!(sf_scheme_from_graph_text(bad.as_ptr(), &mut s), SfStatus::Parse);
        let msg = CStr::from_ptr(sf_last_error()).to_string_lossy().into_owned();
        assert!(msg.contains("line 3"), "{msg}");
        let t = CString::new("2 1\nrel 1\n0 1\n").unwrap();
        assert_eq!(sf_scheme_parse(t.as_ptr(), &mut s), SfStatus::Ok);
        sf_scheme_free(s);
    }
    assert_eq!((n, r), (4, 2));
}

#[test]
fn spectral_json_round_trip() {
    let s = catalog("petersen");
    let mut out: *mut c_char = ptr::null_mut();
    let json = unsafe {
        assert_eq!(sf_scheme_spectral_json(s, &mut out), SfStatus::Ok);
        let v = CStr::from_ptr(out).to_string_lossy().into_owned();
        sf_string_free(out);
        sf_scheme_free(s);
        v
    };
    assert!(json.contains("\"multiplicities\":[1,5,4]"), "{json}");
}

#[test]
fn suites_through_the_abi() {
    let good = CString::new("feasibility").unwrap();
    let bad = CString::new("nothing").unwrap();
    let mut failed = usize::MAX;
    unsafe {
        assert_eq!(sf_verify_suite(good.as_ptr(), &mut failed), SfStatus::Ok);
        assert_eq!(sf_verify_suite(bad.as_ptr(), &mut failed), SfStatus::InvalidArgument);
    }
    assert_eq!(failed, 0);
}

#[test]
fn header_declares_every_export() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR"));
    let header = std::fs::read_to_string(dir.join("include/schemeforge.h")).unwrap();
    let src = std::fs::read_to_string(dir.join("src/lib.rs")).unwrap();
    let exported: Vec<&str> = src
        .lines()
        .filter_map(|l| l.split("extern \"C\" fn ").nth(1))
        .map(|l| l.split('(').next().unwrap())
        .collect();
    assert!(exported.len() >= 10);
    for f in exported {
        assert!(header.contains(&format!("{f}(")), "{f} missing from header");
    }
    // syntax check with the system C compiler when there is one
    if Command::new("cc").arg("--version").output().is_ok() {
        let main = dir.join("tests/header_check.c");
        let status = Command::new("cc").arg("-fsyntax-only").arg("-Wall").arg("-Werror").arg("-I").arg(dir.join("include")).arg(&main).status().unwrap();
        assert!(status.success());
    }
}
