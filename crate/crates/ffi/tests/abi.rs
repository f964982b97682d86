use std::ffi::{CStr, CString};
use std::ptr;

use gsf_ffi::*;

fn parse(text: &str) -> *mut GsfSemigroup {
    let c = CString::new(text).unwrap();
    let mut h = ptr::null_mut();
    assert_eq!(unsafe { gsf_semigroup_parse(c.as_ptr(), &mut h) }, GsfStatus::Ok);
    h
}

fn last_error() -> String {
    let p = gsf_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn round_trip() {
    let h = parse("0 0\n2 2\n");
    unsafe {
        let mut dim = 0;
        assert_eq!(gsf_semigroup_dim(h, &mut dim), GsfStatus::Ok);
        assert_eq!(dim, 2);
        let mut c = [0u32; 2];
        assert_eq!(gsf_semigroup_conductor(h, c.as_mut_ptr(), 2), GsfStatus::Ok);
        assert_eq!(c, [2, 2]);
        assert_eq!(gsf_semigroup_conductor(h, c.as_mut_ptr(), 1), GsfStatus::BufferTooSmall);

        let mut inside = false;
        assert_eq!(gsf_semigroup_contains(h, [3, 2].as_ptr(), 2, &mut inside), GsfStatus::Ok);
        assert!(inside);
        assert_eq!(gsf_semigroup_contains(h, [1, 1].as_ptr(), 2, &mut inside), GsfStatus::Ok);
        assert!(!inside);
        assert_eq!(gsf_semigroup_contains(h, [1].as_ptr(), 1, &mut inside), GsfStatus::Invalid);

        let mut m = GsfMetrics::default();
        assert_eq!(gsf_semigroup_metrics(h, &mut m), GsfStatus::Ok);
        assert_eq!((m.genus, m.conductor_sum), (3, 4));

        let mut s = ptr::null_mut();
        assert_eq!(gsf_semigroup_to_string(h, &mut s), GsfStatus::Ok);
        assert!(CStr::from_ptr(s).to_str().unwrap().contains("(2,2)"));
        gsf_string_free(s);
        gsf_semigroup_free(h);
    }
}

#[test]
fn wilf_example() {
    let h = parse(include_str!("../../core/fixtures/wilf23.sgp"));
    let mut w = GsfWilf::default();
    assert_eq!(unsafe { gsf_wilf_check(h, &mut w) }, GsfStatus::Ok);
    assert_eq!((w.genus, w.c_s, w.rhs_num, w.rhs_den), (23, 34, 34, 11));
    assert_eq!(w.holds, w.edim * 11 >= 34);
    unsafe { gsf_semigroup_free(h) };
}

#[test]
fn errors_are_reported() {
    let c = CString::new("0 0\n1 2\n2 1\n").unwrap();
    let mut h = ptr::null_mut();
    assert_eq!(unsafe { gsf_semigroup_parse(c.as_ptr(), &mut h) }, GsfStatus::Invalid);
    assert!(h.is_null());
    assert!(!last_error().is_empty());

    let c = CString::new("0 zero\n").unwrap();
    assert_eq!(unsafe { gsf_semigroup_parse(c.as_ptr(), &mut h) }, GsfStatus::Syntax);
    assert_eq!(unsafe { gsf_semigroup_parse(ptr::null(), &mut h) }, GsfStatus::NullPointer);
    assert_eq!(last_error(), "null pointer argument");
    unsafe { gsf_semigroup_free(ptr::null_mut()) };

    let ok = parse("0 0\n");
    assert!(gsf_last_error().is_null());
    unsafe { gsf_semigroup_free(ok) };
}

#[test]
fn counts() {
    let mut buf = [0u64; 6];
    assert_eq!(unsafe { gsf_count_by_genus(6, 2, buf.as_mut_ptr(), 6) }, GsfStatus::Ok);
    assert_eq!(buf, [1, 3, 10, 29, 78, 211]);
    assert_eq!(
        unsafe { gsf_count_by_genus(6, 2, buf.as_mut_ptr(), 5) },
        GsfStatus::BufferTooSmall
    );
}

#[test]
fn header_declares_every_entry_point() {
    let h = include_str!("../include/gsf.h");
    for f in [
        "gsf_last_error", "gsf_semigroup_parse", "gsf_semigroup_free", "gsf_semigroup_dim",
        "gsf_semigroup_conductor", "gsf_semigroup_contains", "gsf_semigroup_to_string",
        "gsf_string_free", "gsf_semigroup_metrics", "gsf_wilf_check", "gsf_count_by_genus",
    ] {
        assert!(h.contains(&format!("{f}(")), "{f}");
    }
}
