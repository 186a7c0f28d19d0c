use std::ffi::{c_char, CStr, CString};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::ptr;

use ramseyforge_ffi::*;

unsafe fn take_string(s: *mut c_char) -> String {
    let out = CStr::from_ptr(s).to_str().unwrap().to_owned();
    rf_string_free(s);
    out
}

fn last_error() -> String {
    let p = rf_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned()
}

#[test]
fn chi_key_values() {
    let mut color = 0u8;
    unsafe {
        assert_eq!(
            rf_chi_key([0, 0, 0, 0].as_ptr(), 4, &mut color),
            RfStatus::Ok
        );
        assert_eq!(color, 1);
        assert_eq!(
            rf_chi_key([0, 0, 1, 0].as_ptr(), 4, &mut color),
            RfStatus::Ok
        );
        assert_eq!(color, 2);
        assert_eq!(
            rf_chi_key([0, 0, 3, 0].as_ptr(), 4, &mut color),
            RfStatus::Parameter
        );
        assert!(!last_error().is_empty());
        assert_eq!(
            rf_chi_key(ptr::null(), 4, &mut color),
            RfStatus::NullPointer
        );
    }
}

#[test]
fn key_coloring_has_no_mono_bridge() {
    unsafe {
        let key = rf_vector_coloring_key();
        assert_eq!(rf_vector_coloring_len(key), 81);
        let mut found = true;
        assert_eq!(
            rf_has_mono_bridge(key, 2, &mut found, ptr::null_mut(), ptr::null_mut()),
            RfStatus::Ok
        );
        assert!(!found);
        rf_vector_coloring_free(key);

        let mut all_one = ptr::null_mut();
        assert_eq!(
            rf_vector_coloring_new(4, 3, [1u8; 81].as_ptr(), 81, &mut all_one),
            RfStatus::Ok
        );
        let (mut a, mut b) = ([9u8; 4], [9u8; 4]);
        assert_eq!(
            rf_has_mono_bridge(all_one, 1, &mut found, a.as_mut_ptr(), b.as_mut_ptr()),
            RfStatus::Ok
        );
        assert!(found);
        assert!(a.iter().zip(&b).all(|(x, y)| x != y && *x < 3 && *y < 3));
        rf_vector_coloring_free(all_one);

        let mut bad = ptr::null_mut();
        assert_eq!(
            rf_vector_coloring_new(4, 3, [1u8; 80].as_ptr(), 80, &mut bad),
            RfStatus::Parameter
        );
    }
}

#[test]
fn bridge_colorability_and_dimacs() {
    unsafe {
        let mut colorable = true;
        let mut cert = ptr::null_mut();
        assert_eq!(
            rf_bridge_2colorable(3, 3, &mut colorable, &mut cert),
            RfStatus::Ok
        );
        assert!(!colorable && cert.is_null());
        assert_eq!(
            rf_bridge_2colorable(4, 3, &mut colorable, &mut cert),
            RfStatus::Ok
        );
        assert!(colorable && !cert.is_null());
        let mut found = true;
        rf_has_mono_bridge(cert, 1, &mut found, ptr::null_mut(), ptr::null_mut());
        assert!(!found);
        let mut colors = [0u8; 81];
        assert_eq!(
            rf_vector_coloring_colors(cert, colors.as_mut_ptr(), 81),
            RfStatus::Ok
        );
        assert!(colors.iter().all(|&c| c == 1 || c == 2));
        rf_vector_coloring_free(cert);

        let mut text = ptr::null_mut();
        assert_eq!(rf_bridge_dimacs(2, 3, &mut text), RfStatus::Ok);
        let text = take_string(text);
        assert!(text.starts_with("p cnf 9 72\n"), "{text}");
        assert_eq!(
            rf_bridge_2colorable(9, 3, &mut colorable, ptr::null_mut()),
            RfStatus::SizeLimit
        );
    }
}

#[test]
fn shift_colorings() {
    unsafe {
        let mut h = ptr::null_mut();
        assert_eq!(rf_shift_coloring_find(8, 2, 3, &mut h), RfStatus::Ok);
        assert!(!h.is_null());
        assert_eq!(rf_shift_coloring_len(h), 28);
        let mut text = ptr::null_mut();
        assert_eq!(rf_shift_coloring_to_text(h, &mut text), RfStatus::Ok);
        let text = take_string(text);
        assert!(text.starts_with("shiftcoloring 8 2 3\n"));
        rf_shift_coloring_free(h);

        let c_text = CString::new(text).unwrap();
        let mut back = ptr::null_mut();
        assert_eq!(
            rf_shift_coloring_from_text(c_text.as_ptr(), &mut back),
            RfStatus::Ok
        );
        rf_shift_coloring_free(back);

        let improper = CString::new("shiftcoloring 3 2 2\n1 2 0\n1 3 1\n2 3 0\n").unwrap();
        assert_eq!(
            rf_shift_coloring_from_text(improper.as_ptr(), &mut back),
            RfStatus::NotProper
        );

        assert_eq!(rf_shift_coloring_find(9, 2, 3, &mut h), RfStatus::Ok);
        assert!(h.is_null());

        assert_eq!(rf_shift_coloring_bit_pairs(8, &mut h), RfStatus::Ok);
        let mut colors = [9u8; 28];
        assert_eq!(
            rf_shift_coloring_colors(h, colors.as_mut_ptr(), 28),
            RfStatus::Ok
        );
        assert_eq!(colors[0], 0);
        assert!(colors.iter().all(|&c| c < 3));
        rf_shift_coloring_free(h);
    }
}

#[test]
fn towers_and_bounds() {
    unsafe {
        let mut s = ptr::null_mut();
        assert_eq!(rf_tower_render(4, 2, &mut s), RfStatus::Ok);
        assert_eq!(take_string(s), "65536");
        assert_eq!(rf_tower_render(6, 2, &mut s), RfStatus::Ok);
        assert_eq!(take_string(s), "2^2^65536");
        let diag = CString::new("diag").unwrap();
        assert_eq!(rf_bound_render(16, diag.as_ptr(), &mut s), RfStatus::Ok);
        assert_eq!(take_string(s), "8");
        assert_eq!(rf_bound_render(3, diag.as_ptr(), &mut s), RfStatus::Domain);
        let nonsense = CString::new("nonsense").unwrap();
        assert_eq!(
            rf_bound_render(16, nonsense.as_ptr(), &mut s),
            RfStatus::Parameter
        );
        assert_eq!(
            rf_tower_render(4, 2, ptr::null_mut()),
            RfStatus::NullPointer
        );
    }
    let v = unsafe { CStr::from_ptr(rf_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}

fn target_dir() -> PathBuf {
    let exe = std::env::current_exe().unwrap();
    exe.parent().unwrap().parent().unwrap().to_path_buf()
}

#[test]
fn header_declares_the_api() {
    let header = std::fs::read_to_string(
        Path::new(env!("CARGO_MANIFEST_DIR")).join("include/ramseyforge.h"),
    )
    .unwrap();
    for name in [
        "RF_STATUS_OK = 0",
        "typedef struct RfVectorColoring RfVectorColoring;",
        "rf_last_error",
        "rf_string_free",
        "rf_chi_key",
        "rf_has_mono_bridge",
        "rf_bridge_2colorable",
        "rf_bridge_dimacs",
        "rf_shift_coloring_find",
        "rf_tower_render",
    ] {
        assert!(header.contains(name), "header lacks {name}");
    }
}

#[test]
fn c_program_links_against_the_static_library() {
    let lib = target_dir().join("libramseyforge_ffi.a");
    assert!(lib.exists(), "{} not built", lib.display());
    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join("main.c");
    std::fs::write(
        &src,
        r#"#include <stdio.h>
#include "ramseyforge.h"

int main(void) {
    RfVectorColoring *key = rf_vector_coloring_key();
    bool found = true;
    if (rf_has_mono_bridge(key, 1, &found, NULL, NULL) != RF_STATUS_OK || found) return 1;
    rf_vector_coloring_free(key);
    char *s = NULL;
    if (rf_tower_render(3, 2, &s) != RF_STATUS_OK) return 2;
    printf("%s\n", s);
    rf_string_free(s);
    if (rf_tower_render(0, 2, &s) != RF_STATUS_PARAMETER) return 3;
    printf("%s\n", rf_last_error());
    return 0;
}
"#,
    )
    .unwrap();
    let exe = dir.path().join("main");
    let include = Path::new(env!("CARGO_MANIFEST_DIR")).join("include");
    let status = Command::new("cc")
        .arg(&src)
        .arg("-I")
        .arg(&include)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .expect("cc runs");
    assert!(status.success());
    let out = Command::new(&exe).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.starts_with("16\n"), "{stdout}");
}
