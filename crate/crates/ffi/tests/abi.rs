use std::ffi::{c_char, CStr, CString};
use std::ptr;

use uhsl2_ffi::*;

fn take(s: *mut c_char) -> String {
    assert!(!s.is_null());
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { uhsl2_string_free(s) };
    out
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(uhsl2_last_error()) }.to_str().unwrap().to_owned()
}

#[test]
fn irrep_round_trip() {
    let mut irrep = ptr::null_mut();
    assert_eq!(unsafe { uhsl2_irrep_new(2, &mut irrep) }, Uhsl2Status::Ok);
    assert_eq!(unsafe { uhsl2_irrep_dim(irrep) }, 3);
    let name = CString::new("Y").unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { uhsl2_irrep_generator_json(irrep, name.as_ptr(), &mut out) }, Uhsl2Status::Ok);
    let json: serde_json::Value = serde_json::from_str(&take(out)).unwrap();
    assert_eq!(json["shape"], serde_json::json!([3, 3]));
    let bad = CString::new("Q").unwrap();
    assert_eq!(unsafe { uhsl2_irrep_generator_json(irrep, bad.as_ptr(), &mut out) }, Uhsl2Status::InvalidArgument);
    assert!(last_error().contains("unknown generator"));
    unsafe { uhsl2_irrep_free(irrep) };
}

#[test]
fn scalars_as_text() {
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { uhsl2_alpha(1, 1, 1, 1, 1, -1, &mut out) }, Uhsl2Status::Ok);
    assert_eq!(take(out), "-(1/2)*h");
    assert_eq!(unsafe { uhsl2_decompose(1, 1, &mut out) }, Uhsl2Status::Ok);
    assert_eq!(take(out), "1 ⊕ 0");
    assert_eq!(unsafe { uhsl2_cgc(1, 1, 0, 1, -1, 0, &mut out) }, Uhsl2Status::Ok);
    assert_eq!(take(out), "(1/2)*sqrt(2)");
}

#[test]
fn error_codes() {
    let mut irrep = ptr::null_mut();
    assert_eq!(unsafe { uhsl2_irrep_new(-1, &mut irrep) }, Uhsl2Status::InvalidArgument);
    assert!(irrep.is_null());
    assert_eq!(unsafe { uhsl2_irrep_new(2, ptr::null_mut()) }, Uhsl2Status::NullPointer);
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { uhsl2_cgc(2, 2, 6, 2, 2, 4, &mut out) }, Uhsl2Status::SelectionRule);
    assert!(!last_error().is_empty());
    assert_eq!(unsafe { uhsl2_family_twice_rank(ptr::null()) }, -1);
    assert_eq!(unsafe { uhsl2_family_verify(ptr::null(), ptr::null_mut()) }, Uhsl2Status::NullPointer);
    let mut fam = ptr::null_mut();
    assert_eq!(unsafe { uhsl2_family_new(Uhsl2FamilyKind::BosonLowering, 0, &mut fam) }, Uhsl2Status::Domain);
    unsafe { uhsl2_string_free(ptr::null_mut()) };
    unsafe { uhsl2_family_free(ptr::null_mut()) };
}

#[test]
fn boson_family_and_reduced_element() {
    let mut fam = ptr::null_mut();
    assert_eq!(unsafe { uhsl2_family_new(Uhsl2FamilyKind::BosonRaising, 1, &mut fam) }, Uhsl2Status::Ok);
    assert_eq!(unsafe { uhsl2_family_twice_rank(fam) }, 1);
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { uhsl2_family_verify(fam, &mut out) }, Uhsl2Status::Ok);
    let report: serde_json::Value = serde_json::from_str(&take(out)).unwrap();
    assert!(report["checks"].as_array().is_some_and(|c| !c.is_empty()));
    assert_eq!(unsafe { uhsl2_family_component_json(fam, 1, &mut out) }, Uhsl2Status::Ok);
    let m: serde_json::Value = serde_json::from_str(&take(out)).unwrap();
    assert_eq!(m["shape"], serde_json::json!([3, 2]));
    assert_eq!(unsafe { uhsl2_family_component_json(fam, 3, &mut out) }, Uhsl2Status::Domain);
    assert_eq!(unsafe { uhsl2_reduced_matrix_element(fam, 1, 2, &mut out) }, Uhsl2Status::Ok);
    assert_eq!(take(out), "1*sqrt(2)");
    unsafe { uhsl2_family_free(fam) };
}

#[test]
fn fermion_restriction() {
    let mut fam = ptr::null_mut();
    assert_eq!(unsafe { uhsl2_family_new(Uhsl2FamilyKind::FermionFirst, 0, &mut fam) }, Uhsl2Status::Ok);
    let mut sub = ptr::null_mut();
    assert_eq!(unsafe { uhsl2_family_restrict(fam, 0, 1, &mut sub) }, Uhsl2Status::Ok);
    let mut out = ptr::null_mut();
    let status = unsafe { uhsl2_reduced_matrix_element(sub, 1, 0, &mut out) };
    assert_eq!(status, Uhsl2Status::Ok, "{}", last_error());
    take(out);
    assert_eq!(unsafe { uhsl2_family_restrict(fam, 0, 7, &mut sub) }, Uhsl2Status::InvalidArgument);
    let mut rank1 = ptr::null_mut();
    assert_eq!(unsafe { uhsl2_family_new(Uhsl2FamilyKind::Rank1, 0, &mut rank1) }, Uhsl2Status::Ok);
    assert_eq!(unsafe { uhsl2_reduced_matrix_element(rank1, 0, 0, &mut out) }, Uhsl2Status::SelectionRule);
    unsafe {
        uhsl2_family_free(rank1);
        uhsl2_family_free(sub);
        uhsl2_family_free(fam);
    }
}

#[test]
fn verify_all_small() {
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { uhsl2_verify_all(1, &mut out) }, Uhsl2Status::Ok);
    let stages: serde_json::Value = serde_json::from_str(&take(out)).unwrap();
    assert_eq!(stages.as_array().unwrap().len(), 4);
    assert_eq!(unsafe { uhsl2_verify_all(0, ptr::null_mut()) }, Uhsl2Status::Ok);
}

#[test]
fn version_string() {
    let v = unsafe { CStr::from_ptr(uhsl2_version()) }.to_str().unwrap();
    assert_eq!(v, env!("CARGO_PKG_VERSION"));
}

#[test]
fn header_compiles_as_c() {
    let header = concat!(env!("CARGO_MANIFEST_DIR"), "/include/uhsl2.h");
    let Ok(out) = std::process::Command::new("cc").args(["-fsyntax-only", "-x", "c", header]).output() else {
        eprintln!("no C compiler; header syntax not checked");
        return;
    };
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
}

/// Compiles `examples/demo.c` against the static library built for this test run.
#[test]
fn c_program_links_and_runs() {
    let manifest = env!("CARGO_MANIFEST_DIR");
    let exe = std::env::current_exe().unwrap();
    let profile_dir = exe.parent().and_then(|d| d.parent()).unwrap();
    let lib = profile_dir.join("libuhsl2_ffi.a");
    if !lib.exists() {
        eprintln!("static library not found at {}; skipping", lib.display());
        return;
    }
    let bin = std::path::PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("uhsl2_demo");
    let cc = std::process::Command::new("cc")
        .arg(format!("{manifest}/examples/demo.c"))
        .arg(format!("-I{manifest}/include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&bin)
        .output();
    let Ok(cc) = cc else {
        eprintln!("no C compiler; skipping");
        return;
    };
    assert!(cc.status.success(), "{}", String::from_utf8_lossy(&cc.stderr));
    let run = std::process::Command::new(&bin).output().unwrap();
    let stdout = String::from_utf8_lossy(&run.stdout);
    assert!(run.status.success(), "{stdout}");
    assert!(stdout.contains("W(1/2) x W(1/2) = 1 ⊕ 0"));
    assert!(stdout.contains("I(1/2, 1/2, 1) = 1*sqrt(2)"));
    assert!(stdout.contains("rejected: selection rule"));
}
