use std::ffi::{CStr, CString};
use std::ptr;

use spgcd_ffi::*;

fn parse(text: &str) -> *mut SpgcdPoly {
    let c = CString::new(text).unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(
        unsafe { spgcd_poly_parse(c.as_ptr(), &mut out) },
        SpgcdStatus::Ok
    );
    out
}

fn render(p: *const SpgcdPoly) -> String {
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { spgcd_poly_render(p, &mut s) }, SpgcdStatus::Ok);
    let text = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { spgcd_string_free(s) };
    text
}

fn last_error() -> String {
    let e = spgcd_last_error();
    assert!(!e.is_null());
    unsafe { CStr::from_ptr(e) }.to_string_lossy().into_owned()
}

// (x1 + x2)(x1 + 2) and (x1 + x2)(x2 + 3) over F_11
const A: &str = "p 11\nn 2\n1 2 0\n1 1 1\n2 1 0\n2 0 1\n";
const B: &str = "p 11\nn 2\n1 1 1\n3 1 0\n1 0 2\n3 0 1\n";

#[test]
fn gcd_round_trip() {
    let (a, b) = (parse(A), parse(B));
    let mut opts = spgcd_options_default();
    opts.extension = SpgcdExtension::BaseField;
    opts.seed = 5;
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { spgcd_gcd(a, b, &opts, &mut g) }, SpgcdStatus::Ok);
    unsafe {
        assert_eq!(spgcd_poly_modulus(g), 11);
        assert_eq!(spgcd_poly_nvars(g), 2);
        assert_eq!(spgcd_poly_len(g), 2);
    }
    let mut terms = Vec::new();
    for i in 0..2 {
        let (mut c, mut e) = (0u64, [0u32; 2]);
        assert_eq!(
            unsafe { spgcd_poly_term(g, i, &mut c, e.as_mut_ptr()) },
            SpgcdStatus::Ok
        );
        terms.push((c, e));
    }
    terms.sort();
    assert_eq!(terms, vec![(1, [0, 1]), (1, [1, 0])]);

    let mut divides = false;
    let mut q = ptr::null_mut();
    assert_eq!(
        unsafe { spgcd_divides(g, a, &mut divides, &mut q) },
        SpgcdStatus::Ok
    );
    assert!(divides);
    assert_eq!(unsafe { spgcd_poly_len(q) }, 2);

    let mut again = ptr::null_mut();
    assert_eq!(
        unsafe { spgcd_gcd(a, b, ptr::null(), &mut again) },
        SpgcdStatus::Ok
    );
    assert_eq!(render(again), render(g));

    for p in [a, b, g, q, again] {
        unsafe { spgcd_poly_free(p) };
    }
}

#[test]
fn from_terms_matches_parse() {
    let coeffs = [1u64, 12, 2, 2];
    let exps = [2u32, 0, 1, 1, 1, 0, 0, 1];
    let mut built = ptr::null_mut();
    let st = unsafe { spgcd_poly_from_terms(11, 2, 4, coeffs.as_ptr(), exps.as_ptr(), &mut built) };
    assert_eq!(st, SpgcdStatus::Ok);
    let parsed = parse(A);
    assert_eq!(render(built), render(parsed));
    unsafe {
        spgcd_poly_free(built);
        spgcd_poly_free(parsed);
    }
}

#[test]
fn errors_are_reported() {
    let mut out = ptr::null_mut();
    let bad = CString::new("p 11\nn 2\n1 2\n").unwrap();
    assert_eq!(
        unsafe { spgcd_poly_parse(bad.as_ptr(), &mut out) },
        SpgcdStatus::Parse
    );
    assert!(last_error().contains("line"));
    assert!(out.is_null());

    assert_eq!(
        unsafe { spgcd_poly_parse(ptr::null(), &mut out) },
        SpgcdStatus::NullPointer
    );
    assert_eq!(
        unsafe { spgcd_poly_from_terms(12, 1, 0, ptr::null(), ptr::null(), &mut out) },
        SpgcdStatus::InvalidInput
    );

    let a = parse(A);
    let other = parse("p 7\nn 2\n1 1 0\n");
    let mut g = ptr::null_mut();
    assert_eq!(
        unsafe { spgcd_gcd(a, other, ptr::null(), &mut g) },
        SpgcdStatus::InvalidInput
    );
    assert!(last_error().contains("different rings"));

    let (mut c, mut e) = (0u64, [0u32; 2]);
    assert_eq!(
        unsafe { spgcd_poly_term(a, 9, &mut c, e.as_mut_ptr()) },
        SpgcdStatus::OutOfRange
    );

    let zero = parse("p 11\nn 2\n");
    let mut divides = true;
    assert_eq!(
        unsafe { spgcd_divides(zero, a, &mut divides, ptr::null_mut()) },
        SpgcdStatus::InvalidInput
    );
    unsafe {
        spgcd_poly_free(a);
        spgcd_poly_free(other);
        spgcd_poly_free(zero);
        spgcd_poly_free(ptr::null_mut());
        assert_eq!(spgcd_poly_len(ptr::null()), 0);
    }
}

#[test]
fn header_is_generated() {
    let h =
        std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/spgcd.h")).unwrap();
    for sym in [
        "spgcd_gcd",
        "spgcd_poly_parse",
        "SPGCD_STATUS_OK",
        "typedef struct SpgcdPoly SpgcdPoly",
    ] {
        assert!(h.contains(sym), "{sym}");
    }
}
