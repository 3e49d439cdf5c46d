use std::ffi::{CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use octant_cover_capi::*;

#[test]
fn color_and_verify_through_handles() {
    let xs = [1u32, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12];
    unsafe {
        let mut set = ptr::null_mut();
        assert_eq!(oc_pointset_from_ranks(xs.as_ptr(), xs.as_ptr(), xs.len(), &mut set), OcStatus::Ok);
        assert_eq!(oc_pointset_len(set), 12);

        let mut col = ptr::null_mut();
        assert_eq!(oc_color_set(set, 2, 1_000_000, &mut col), OcStatus::Ok);
        assert_eq!(oc_coloring_len(col), 12);
        let mut bad = usize::MAX;
        assert_eq!(oc_verify(set, col, 12, 2, &mut bad), OcStatus::Ok);
        assert_eq!(bad, 0);
        let mut emp = 0;
        assert_eq!(oc_empirical_min_threshold(set, col, 2, &mut emp), OcStatus::Ok);
        assert!((2..=12).contains(&emp));

        let mut c = 0u32;
        assert_eq!(oc_coloring_get(col, 0, &mut c), OcStatus::Ok);
        assert!(c == 1 || c == 2);
        assert_eq!(oc_coloring_get(col, 99, &mut c), OcStatus::NotFound);

        let mut four = ptr::null_mut();
        assert_eq!(oc_wedge_four_color(set, &mut four), OcStatus::Ok);
        assert_eq!(oc_verify(set, four, 2, 2, &mut bad), OcStatus::Ok);
        assert_eq!(bad, 0);

        oc_coloring_free(four);
        oc_coloring_free(col);
        oc_pointset_free(set);
    }
}

#[test]
fn errors_are_reported() {
    unsafe {
        let mut set = ptr::null_mut();
        let dup = [1u32, 1];
        assert_eq!(oc_pointset_from_ranks(dup.as_ptr(), dup.as_ptr(), 2, &mut set), OcStatus::InvalidInput);
        assert!(set.is_null());
        assert!(!CStr::from_ptr(oc_last_error()).to_bytes().is_empty());

        let text = CString::new("1 2 3\n4 x 6\n").unwrap();
        assert_eq!(oc_pointset_parse(text.as_ptr(), &mut set), OcStatus::InvalidInput);
        let msg = CStr::from_ptr(oc_last_error()).to_str().unwrap();
        assert!(msg.contains("line 2"), "{msg}");

        let mut n = 0usize;
        assert_eq!(oc_verify(ptr::null(), ptr::null(), 2, 2, &mut n), OcStatus::NullPointer);
        assert_eq!(oc_color_set(ptr::null(), 2, 10, ptr::null_mut()), OcStatus::NullPointer);

        let mut m = 0u64;
        assert_eq!(oc_threshold(0, &mut m), OcStatus::InvalidInput);
        assert_eq!(oc_threshold(4, &mut m), OcStatus::Ok);
        assert_eq!(m, 52030522369);
        assert_eq!(oc_threshold(5, &mut m), OcStatus::Overflow);

        let s = oc_threshold_string(3);
        assert_eq!(CStr::from_ptr(s).to_str().unwrap(), "19009");
        oc_string_free(s);
        assert!(oc_threshold_string(0).is_null());

        // freeing null is a no-op
        oc_pointset_free(ptr::null_mut());
        oc_coloring_free(ptr::null_mut());
    }
}

#[test]
fn c_program_links_against_the_static_library() {
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    // target/<profile>/deps/<test binary>
    let profile_dir = std::env::current_exe().unwrap().parent().unwrap().parent().unwrap().to_path_buf();
    let lib = profile_dir.join("liboctant_cover_capi.a");
    assert!(lib.exists(), "static library not found at {}", lib.display());
    let exe = profile_dir.join("octant_cover_smoke");
    let status = Command::new("cc")
        .arg(manifest.join("tests/smoke.c"))
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .expect("a C compiler on PATH");
    assert!(status.success());
    let out = Command::new(&exe).output().unwrap();
    assert!(out.status.success(), "exit {:?}", out.status.code());
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "ok");
}
