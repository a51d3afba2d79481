use std::ffi::{CStr, CString};
use std::ptr;

use ck_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

fn last_error() -> String {
    let p = ck_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_string()
}

#[test]
fn builtin_algebra_round_trip() {
    unsafe {
        let mut g = ptr::null_mut();
        assert_eq!(ck_algebra_builtin(c("so22").as_ptr(), true, &mut g), CkStatus::Ok);
        let mut dim = 0usize;
        assert_eq!(ck_algebra_dim(g, &mut dim), CkStatus::Ok);
        assert_eq!(dim, 6);
        let mut passed = false;
        assert_eq!(ck_algebra_verify(g, &mut passed), CkStatus::Ok);
        assert!(passed);

        let mut json = ptr::null_mut();
        assert_eq!(ck_algebra_to_json(g, &mut json), CkStatus::Ok);
        let mut h = ptr::null_mut();
        assert_eq!(ck_algebra_from_json(json, &mut h), CkStatus::Ok);
        let mut same = false;
        assert_eq!(ck_algebra_same_structure(g, h, &mut same), CkStatus::Ok);
        assert!(same);
        ck_string_free(json);
        ck_algebra_free(h);
        ck_algebra_free(g);
    }
}

#[test]
fn contraction_matches_builtin() {
    unsafe {
        let mut g = ptr::null_mut();
        let mut flat = ptr::null_mut();
        assert_eq!(ck_algebra_builtin(c("so31-ds").as_ptr(), false, &mut g), CkStatus::Ok);
        assert_eq!(ck_algebra_builtin(c("poincare").as_ptr(), false, &mut flat), CkStatus::Ok);
        let mut h = ptr::null_mut();
        assert_eq!(ck_algebra_contract(g, CkContraction::SpaceTime, &mut h), CkStatus::Ok);
        let mut same = false;
        assert_eq!(ck_algebra_same_structure(h, flat, &mut same), CkStatus::Ok);
        assert!(same);
        for p in [g, flat, h] {
            ck_algebra_free(p);
        }
    }
}

#[test]
fn expansion_report() {
    unsafe {
        let mut r = ptr::null_mut();
        let status = ck_expand(c("poincare").as_ptr(), c("so31-ds").as_ptr(), 1, true, &mut r);
        assert_eq!(status, CkStatus::Ok);
        let mut v = CkVerdict::Fail;
        assert_eq!(ck_report_verdict(r, &mut v), CkStatus::Ok);
        assert_eq!(v, CkVerdict::Pass);
        let json = CStr::from_ptr(ck_report_json(r)).to_str().unwrap();
        assert!(json.contains("4*w2*c1*a1^2 + w1 = 0"));
        ck_report_free(r);

        let mut r = ptr::null_mut();
        let status = ck_expand(c("galilei").as_ptr(), c("nh-plus").as_ptr(), 1, true, &mut r);
        assert_eq!(status, CkStatus::Ok);
        assert_eq!(ck_report_verdict(r, &mut v), CkStatus::Ok);
        assert_eq!(v, CkVerdict::ExpectedFail);
        ck_report_free(r);
    }
}

#[test]
fn atlas_passes() {
    unsafe {
        let mut r = ptr::null_mut();
        assert_eq!(ck_atlas(true, &mut r), CkStatus::Ok);
        let mut v = CkVerdict::Fail;
        assert_eq!(ck_report_verdict(r, &mut v), CkStatus::Ok);
        assert_eq!(v, CkVerdict::Pass);
        ck_report_free(r);
    }
}

#[test]
fn errors_are_reported() {
    unsafe {
        let mut g = ptr::null_mut();
        assert_eq!(ck_algebra_builtin(ptr::null(), true, &mut g), CkStatus::NullPointer);
        assert!(last_error().contains("null"));
        assert_eq!(ck_algebra_builtin(c("so5").as_ptr(), true, &mut g), CkStatus::NotFound);
        assert!(last_error().contains("so5"));
        assert!(g.is_null());
        assert_eq!(ck_algebra_from_json(c("{").as_ptr(), &mut g), CkStatus::InvalidArgument);
        let mut r = ptr::null_mut();
        assert_eq!(
            ck_expand(c("poincare").as_ptr(), c("so22").as_ptr(), 3, true, &mut r),
            CkStatus::InvalidArgument
        );
        assert_eq!(
            ck_expand(c("poincare").as_ptr(), c("poincare").as_ptr(), 1, true, &mut r),
            CkStatus::InvalidArgument
        );
        assert!(ck_report_json(ptr::null()).is_null());
        // success clears the message
        assert_eq!(ck_algebra_builtin(c("so4").as_ptr(), true, &mut g), CkStatus::Ok);
        assert!(ck_last_error().is_null());
        ck_algebra_free(g);
        ck_algebra_free(ptr::null_mut());
    }
}

#[test]
fn header_declares_the_api() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/ck.h")).unwrap();
    for name in [
        "ck_last_error",
        "ck_algebra_builtin",
        "ck_algebra_from_json",
        "ck_algebra_free",
        "ck_algebra_verify",
        "ck_algebra_contract",
        "ck_expand",
        "ck_atlas",
        "ck_report_json",
        "ck_report_free",
        "ck_string_free",
        "typedef struct CkAlgebra CkAlgebra",
        "CK_STATUS_OK = 0",
    ] {
        assert!(header.contains(name), "{name} missing from ck.h");
    }
}
