use std::ffi::CStr;
use std::path::{Path, PathBuf};
use std::process::Command;
use std::ptr;

use hahn_ffi::*;

fn family(alpha: f64, beta: f64, n: usize) -> *mut HahnFamily {
    let mut f = ptr::null_mut();
    assert_eq!(unsafe { hahn_family_new(alpha, beta, n, &mut f) }, HahnStatus::Ok);
    assert!(!f.is_null());
    f
}

fn last_error() -> String {
    let mut buf = [0 as std::ffi::c_char; 256];
    let len = unsafe { hahn_last_error_message(buf.as_mut_ptr(), buf.len()) };
    assert!(len > 0);
    unsafe { CStr::from_ptr(buf.as_ptr()) }.to_string_lossy().into_owned()
}

#[test]
fn invalid_parameters_report_domain() {
    let mut f = ptr::null_mut();
    assert_eq!(unsafe { hahn_family_new(-1.5, 0.0, 30, &mut f) }, HahnStatus::Domain);
    assert!(f.is_null());
    assert!(last_error().contains("alpha"));
    assert_eq!(unsafe { hahn_family_new(0.0, 0.0, 0, &mut f) }, HahnStatus::Domain);
    assert_eq!(unsafe { hahn_family_new(0.0, 0.0, 3, ptr::null_mut()) }, HahnStatus::NullPointer);
}

#[test]
fn weights_norms_and_values() {
    let f = family(5.0, 0.0, 30);
    unsafe {
        assert_eq!(hahn_family_grid_len(f), 31);
        let mut w = vec![0.0; 31];
        assert_eq!(hahn_family_weights(f, w.as_mut_ptr(), w.len()), HahnStatus::Ok);
        assert_eq!(w[0], 1.0);
        assert_eq!(w[1], 6.0);
        let mut short = vec![0.0; 30];
        assert_eq!(hahn_family_weights(f, short.as_mut_ptr(), short.len()), HahnStatus::LengthMismatch);

        let mut v = f64::NAN;
        assert_eq!(hahn_family_eval(f, 0, 7.3, false, &mut v), HahnStatus::Ok);
        assert_eq!(v, 1.0);
        assert_eq!(hahn_family_eval(f, 31, 0.0, false, &mut v), HahnStatus::DegreeOutOfRange);
        assert_eq!(v, 1.0, "output untouched on failure");

        let mut norm = 0.0;
        assert_eq!(hahn_family_norm_sq(f, 4, &mut norm), HahnStatus::Ok);
        let mut q = 0.0;
        let mut total = 0.0;
        for (x, wx) in w.iter().enumerate() {
            hahn_family_eval(f, 4, x as f64, false, &mut q);
            total += q * q * wx;
        }
        assert!((total - norm).abs() <= 1e-10 * norm);
        assert_eq!(hahn_family_eval(f, 4, 3.0, true, &mut v), HahnStatus::Ok);
        hahn_family_eval(f, 4, 3.0, false, &mut q);
        assert!((v - q / norm.sqrt()).abs() <= 1e-14 * v.abs().max(1e-300) * 10.0);
        hahn_family_free(f);
    }
}

#[test]
fn projection_round_trip() {
    let f = family(0.0, 0.0, 30);
    let u: Vec<f64> = (0..=30).map(|i| (std::f64::consts::PI * (-1.0 + i as f64 / 15.0)).sin()).collect();
    unsafe {
        let mut e = ptr::null_mut();
        assert_eq!(hahn_family_project(f, u.as_ptr(), u.len(), 10, &mut e), HahnStatus::Ok);
        assert_eq!(hahn_expansion_degree(e), 10);
        let mut c = vec![0.0; 11];
        assert_eq!(hahn_expansion_coeffs(e, true, c.as_mut_ptr(), c.len()), HahnStatus::Ok);
        let max = c.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        for n in (0..=10).step_by(2) {
            assert!(c[n].abs() <= 1e-12 * max);
        }
        let mut raw = vec![0.0; 11];
        assert_eq!(hahn_expansion_coeffs(e, false, raw.as_mut_ptr(), raw.len()), HahnStatus::Ok);
        let mut norm = 0.0;
        hahn_family_norm_sq(f, 3, &mut norm);
        assert!((raw[3] - c[3] / norm.sqrt()).abs() <= 1e-14 * raw[3].abs());
        hahn_expansion_free(e);

        let mut full = ptr::null_mut();
        assert_eq!(hahn_family_project(f, u.as_ptr(), u.len(), 30, &mut full), HahnStatus::Ok);
        for (i, ui) in u.iter().enumerate() {
            let mut v = 0.0;
            assert_eq!(hahn_expansion_eval(full, i as f64, &mut v), HahnStatus::Ok);
            assert!((v - ui).abs() <= 1e-10);
        }
        hahn_expansion_free(full);

        let mut e = ptr::null_mut();
        assert_eq!(hahn_family_project(f, u.as_ptr(), 30, 10, &mut e), HahnStatus::LengthMismatch);
        assert_eq!(hahn_family_project(f, u.as_ptr(), u.len(), 31, &mut e), HahnStatus::DegreeOutOfRange);
        assert!(e.is_null());
        hahn_family_free(f);
    }
}

#[test]
fn null_handles_are_rejected() {
    unsafe {
        let mut v = 0.0;
        assert_eq!(hahn_family_eval(ptr::null(), 0, 0.0, false, &mut v), HahnStatus::NullPointer);
        assert_eq!(hahn_expansion_eval(ptr::null(), 0.0, &mut v), HahnStatus::NullPointer);
        assert_eq!(hahn_family_grid_len(ptr::null()), 0);
        hahn_family_free(ptr::null_mut());
        hahn_expansion_free(ptr::null_mut());
    }
}

fn manifest_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

fn have_cc() -> bool {
    Command::new("cc").arg("--version").output().is_ok()
}

#[test]
fn header_declares_every_export() {
    let header = std::fs::read_to_string(manifest_dir().join("include/hahn.h")).unwrap();
    for name in [
        "hahn_family_new",
        "hahn_family_free",
        "hahn_family_grid_len",
        "hahn_family_eval",
        "hahn_family_weights",
        "hahn_family_norm_sq",
        "hahn_family_project",
        "hahn_expansion_free",
        "hahn_expansion_degree",
        "hahn_expansion_coeffs",
        "hahn_expansion_eval",
        "hahn_last_error_message",
        "HAHN_STATUS_DEGREE_OUT_OF_RANGE",
    ] {
        assert!(header.contains(name), "{name} missing from header");
    }
}

fn static_lib() -> Option<PathBuf> {
    // target/<profile>/deps/<this test> -> target/<profile>/libhahn_ffi.a
    let exe = std::env::current_exe().ok()?;
    let lib = exe.parent()?.parent()?.join("libhahn_ffi.a");
    lib.exists().then_some(lib)
}

#[test]
fn c_program_links_and_runs() {
    if !have_cc() {
        eprintln!("cc not found; skipping C link check");
        return;
    }
    let Some(lib) = static_lib() else {
        eprintln!("static library not built in this profile; skipping C link check");
        return;
    };
    let dir = manifest_dir();
    let out = Path::new(env!("CARGO_TARGET_TMPDIR")).join("hahn_smoke");
    let status = Command::new("cc")
        .args(["-std=c11", "-Wall", "-Werror", "-D_DEFAULT_SOURCE", "-o"])
        .arg(&out)
        .arg(dir.join("tests/c/smoke.c"))
        .arg("-I")
        .arg(dir.join("include"))
        .arg(&lib)
        .args(["-lm", "-lpthread", "-ldl"])
        .status()
        .unwrap();
    assert!(status.success(), "C compile failed");
    let run = Command::new(&out).output().unwrap();
    assert!(run.status.success(), "C smoke test exited with {:?}", run.status.code());
    assert_eq!(String::from_utf8_lossy(&run.stdout).trim(), "ok");
}
