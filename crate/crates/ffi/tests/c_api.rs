use std::ffi::{c_char, CStr, CString};
use std::path::Path;
use std::process::Command;
use std::ptr;

use ribbondm_ffi::*;

fn cstr(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take(s: *mut c_char) -> String {
    let out = CStr::from_ptr(s).to_str().unwrap().to_string();
    rdm_string_free(s);
    out
}

unsafe fn ribbon(src: &str) -> *mut RdmRibbon {
    let mut g = ptr::null_mut();
    assert_eq!(rdm_ribbon_parse(cstr(src).as_ptr(), &mut g), RdmStatus::Ok);
    g
}

fn last_error() -> String {
    unsafe {
        CStr::from_ptr(rdm_last_error())
            .to_str()
            .unwrap()
            .to_string()
    }
}

#[test]
fn parse_serialize_and_stats() {
    unsafe {
        let g = ribbon("ribbon v1\nvertex a+ b- a+ c+\nvertex b+ c-\n");
        let mut s = ptr::null_mut();
        assert_eq!(rdm_ribbon_serialize(g, &mut s), RdmStatus::Ok);
        assert_eq!(take(s), "ribbon v1\nvertex a+ b- a+ c+\nvertex b+ c-\n");
        let mut st = RdmStats::default();
        assert_eq!(rdm_ribbon_stats(g, &mut st), RdmStatus::Ok);
        assert_eq!((st.vertices, st.edges, st.components), (2, 3, 1));
        rdm_ribbon_free(g);
    }
}

#[test]
fn delta_matroid_text() {
    unsafe {
        let g = ribbon("vertex e+ e-");
        let mut d = ptr::null_mut();
        assert_eq!(rdm_ribbon_delta_matroid(g, &mut d), RdmStatus::Ok);
        let mut s = ptr::null_mut();
        assert_eq!(rdm_set_system_text(d, &mut s), RdmStatus::Ok);
        assert_eq!(take(s), "ground e\nfeasible -\nfeasible e\n");
        let mut parsed = ptr::null_mut();
        let src = cstr("ground x\nfeasible -\nfeasible x\n");
        assert_eq!(
            rdm_set_system_parse(src.as_ptr(), &mut parsed),
            RdmStatus::Ok
        );
        assert_eq!(rdm_set_system_isomorphic(d, parsed), RdmStatus::Ok);
        rdm_set_system_free(parsed);
        rdm_set_system_free(d);
        rdm_ribbon_free(g);
    }
}

#[test]
fn dual_petrial_and_isomorphism() {
    unsafe {
        let g = ribbon("a+ b+ a+ b+");
        let mut h = ptr::null_mut();
        assert_eq!(
            rdm_ribbon_partial_dual(g, cstr("a").as_ptr(), &mut h),
            RdmStatus::Ok
        );
        let mut back = ptr::null_mut();
        assert_eq!(
            rdm_ribbon_partial_dual(h, cstr("a").as_ptr(), &mut back),
            RdmStatus::Ok
        );
        assert_eq!(rdm_ribbon_isomorphic(g, back), RdmStatus::Ok);
        assert_eq!(rdm_ribbon_isomorphic(g, h), RdmStatus::False);
        let mut p = ptr::null_mut();
        assert_eq!(
            rdm_ribbon_partial_petrial(g, cstr("a, b").as_ptr(), &mut p),
            RdmStatus::Ok
        );
        for x in [h, back, p, g] {
            rdm_ribbon_free(x);
        }
    }
}

#[test]
fn two_isomorphism_and_polynomial() {
    unsafe {
        let a = ribbon("e+ e+");
        let b = ribbon("e+ e-");
        let mut report = ptr::null_mut();
        assert_eq!(rdm_two_isomorphic(a, b, &mut report), RdmStatus::False);
        assert!(take(report).contains("evenness"));
        let c = ribbon("a+ a+ / b+ c+ / b+ c+");
        let d = ribbon("a+ a+ b+ c+ / b+ c+");
        assert_eq!(rdm_two_isomorphic(c, d, ptr::null_mut()), RdmStatus::Ok);
        let mut poly = ptr::null_mut();
        assert_eq!(rdm_ribbon_polynomial(b, &mut poly), RdmStatus::Ok);
        assert_eq!(take(poly), "1*y*z - 1*z + 1");
        for x in [a, b, c, d] {
            rdm_ribbon_free(x);
        }
    }
}

#[test]
fn errors_set_status_and_message() {
    unsafe {
        let mut g = ptr::null_mut();
        assert_eq!(
            rdm_ribbon_parse(cstr("vertex a+").as_ptr(), &mut g),
            RdmStatus::Parse
        );
        assert!(g.is_null());
        assert!(last_error().contains("once"));
        assert_eq!(
            rdm_ribbon_parse(ptr::null(), &mut g),
            RdmStatus::NullArgument
        );
        let h = ribbon("a+ a+");
        let mut out = ptr::null_mut();
        assert_eq!(
            rdm_ribbon_partial_dual(h, cstr("zz").as_ptr(), &mut out),
            RdmStatus::UnknownLabel
        );
        let disconnected = ribbon("a+ a+ / b+ b+");
        assert_eq!(
            rdm_two_isomorphic(h, disconnected, ptr::null_mut()),
            RdmStatus::False
        );
        assert_eq!(rdm_ribbon_isomorphic(h, h), RdmStatus::Ok);
        assert_eq!(last_error(), "");
        rdm_ribbon_free(h);
        rdm_ribbon_free(disconnected);
        rdm_ribbon_free(ptr::null_mut());
        rdm_string_free(ptr::null_mut());
        assert!(!CStr::from_ptr(rdm_version()).to_bytes().is_empty());
    }
}

#[test]
fn header_declares_every_export() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR"));
    let header = std::fs::read_to_string(dir.join("include/ribbondm.h")).unwrap();
    let source = std::fs::read_to_string(dir.join("src/lib.rs")).unwrap();
    let exported: Vec<&str> = source
        .lines()
        .filter_map(|l| l.split("extern \"C\" fn ").nth(1))
        .map(|rest| rest.split('(').next().unwrap())
        .collect();
    assert!(exported.len() >= 15);
    for name in exported {
        assert!(
            header.contains(&format!("{name}(")),
            "{name} missing from header"
        );
    }
    assert!(header.contains("typedef struct RdmRibbon RdmRibbon;"));
    assert!(header.contains("RDM_STATUS_FALSE = 1"));
}

#[test]
fn header_compiles_as_c() {
    let Ok(cc) = Command::new("cc").arg("--version").output() else {
        return;
    };
    if !cc.status.success() {
        return;
    }
    let dir = Path::new(env!("CARGO_MANIFEST_DIR"));
    let out = Command::new("cc")
        .args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only", "-x", "c"])
        .arg(dir.join("include/ribbondm.h"))
        .output()
        .unwrap();
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
}
