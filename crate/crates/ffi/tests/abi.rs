use std::ffi::CStr;
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use circlelab_ffi::*;

fn last_error() -> String {
    unsafe { CStr::from_ptr(cl_last_error()) }.to_string_lossy().into_owned()
}

#[test]
fn r2_and_counts() {
    // SAFETY: every pointer passed is null or points at a live local or handle.
    unsafe {
        let mut v = 0u64;
        assert_eq!(cl_r2(25, &mut v), ClStatus::Ok);
        assert_eq!(v, 12);
        assert_eq!(cl_r2(0, &mut v), ClStatus::Ok);
        assert_eq!(v, 1);
        for m in [ClSumMethod::Enumerate, ClSumMethod::Sieve, ClSumMethod::FloorIdentity] {
            assert_eq!(cl_lattice_count(100.0, m as u32, &mut v), ClStatus::Ok);
            assert_eq!(v, 317);
        }
        assert_eq!(cl_lattice_count(100.0, 7, &mut v), ClStatus::Domain);
        assert!(last_error().contains("method"));
    }
}

#[test]
fn errors_and_null_pointers() {
    // SAFETY: every pointer passed is null or points at a live local or handle.
    unsafe {
        let (mut d, mut n) = (0.0, 0.0);
        assert_eq!(cl_delta(-1.0, &mut d, &mut n), ClStatus::Domain);
        assert!(!last_error().is_empty());
        assert_eq!(cl_delta(1.0, &mut d, &mut n), ClStatus::Ok);
        assert!(last_error().is_empty());
        assert!((n - (5.0 - std::f64::consts::PI)).abs() < 1e-15);
        assert_eq!(cl_delta(1.0, ptr::null_mut(), &mut n), ClStatus::NullPointer);
        assert_eq!(cl_lattice_count(2e12, ClSumMethod::FloorIdentity as u32, &mut 0), ClStatus::Domain);
    }
}

#[test]
fn table_handle_lifecycle() {
    // SAFETY: every pointer passed is null or points at a live local or handle.
    unsafe {
        let mut t: *mut ClR2Table = ptr::null_mut();
        assert_eq!(cl_r2_table_new(1000, &mut t), ClStatus::Ok);
        let (mut limit, mut r) = (0u64, 0u32);
        assert_eq!(cl_r2_table_limit(t, &mut limit), ClStatus::Ok);
        assert_eq!(limit, 1000);
        assert_eq!(cl_r2_table_get(t, 65, &mut r), ClStatus::Ok);
        assert_eq!(r, 16);
        assert_eq!(cl_r2_table_get(t, 1001, &mut r), ClStatus::Domain);

        let mut v = 0.0;
        assert_eq!(cl_voronoi_partial(10.5, 1000, t, &mut v), ClStatus::Ok);
        assert!((v - 37.0).abs() < 0.5);
        assert_eq!(cl_voronoi_partial(10.5, 2000, t, &mut v), ClStatus::Domain);
        assert_eq!(cl_s_partial(10.5, 1, t, &mut v), ClStatus::Ok);
        let expect = 4.0 * (2.0 * std::f64::consts::PI * 10.5f64.sqrt() + std::f64::consts::FRAC_PI_4).cos();
        assert!((v - expect).abs() < 1e-14);
        cl_r2_table_free(t);
        cl_r2_table_free(ptr::null_mut());
        assert_eq!(cl_r2_table_limit(ptr::null(), &mut limit), ClStatus::NullPointer);
    }
}

#[test]
fn special_functions() {
    // SAFETY: every pointer passed is null or points at a live local or handle.
    unsafe {
        let mut v = 0.0;
        assert_eq!(cl_bessel_j1(1.0, &mut v), ClStatus::Ok);
        assert!((v - 0.440_050_585_744_933_5).abs() < 1e-15);
        assert_eq!(cl_bessel_j1(f64::NAN, &mut v), ClStatus::Domain);
        let (mut c, mut s) = (0.0, 0.0);
        assert_eq!(cl_fresnel(1e4, &mut c, &mut s), ClStatus::Ok);
        assert!((c - 0.5).abs() < 1e-4 && (s - 0.5).abs() < 1e-4);
        let (mut re, mut im) = (0.0, 0.0);
        assert_eq!(cl_expint(1.0, 1.0, 0.0, &mut re, &mut im), ClStatus::Ok);
        assert!((re - 0.219_383_934_395_520_27).abs() < 1e-14 && im == 0.0);
        assert_eq!(cl_d_partial(2.0, 1, 0.3, &mut v), ClStatus::Domain);
    }
}

#[test]
fn closed_forms() {
    // SAFETY: every pointer passed is null or points at a live local or handle.
    unsafe {
        let mut r = ClClosedForm::default();
        assert_eq!(cl_fresnel_closed_form(2.0, 1, &mut r), ClStatus::Ok);
        assert!(r.residual.abs() < 1e-14);
        assert_eq!(cl_sqrt_closed_form(2.0, 100, &mut r), ClStatus::Ok);
        assert_eq!(r.residual, r.lhs - r.rhs);
        assert_eq!(cl_expint_closed_form(1.0, 1.0, 1.0, &mut r), ClStatus::Ok);
        assert_eq!(cl_expint_closed_form(0.0, 1.0, 1.0, &mut r), ClStatus::Domain);
    }
}

#[test]
fn sweep_handle() {
    // SAFETY: every pointer passed is null or points at a live local or handle.
    unsafe {
        let mut h: *mut ClSweep = ptr::null_mut();
        assert_eq!(cl_sweep_new(1.0, 100.0, ClSampling::Integers as u32, 0.0, 2, &mut h), ClStatus::Ok);
        let mut len = 0;
        assert_eq!(cl_sweep_len(h, &mut len), ClStatus::Ok);
        assert_eq!(len, 100);
        let mut rec = ClLatticeRecord::default();
        assert_eq!(cl_sweep_record(h, 99, &mut rec), ClStatus::Ok);
        assert_eq!((rec.x, rec.count, rec.has_normalized), (100.0, 317, 1));
        assert_eq!(cl_sweep_record(h, 100, &mut rec), ClStatus::Domain);
        let (mut m, mut x) = (0.0, 0.0);
        assert_eq!(cl_sweep_max(h, &mut m, &mut x), ClStatus::Ok);
        assert!(m > 0.0 && (1.0..=100.0).contains(&x));
        cl_sweep_free(h);

        assert_eq!(cl_sweep_new(1.0, 10.0, 9, 0.0, 1, &mut h), ClStatus::Domain);
        assert!(h.is_null());
        assert_eq!(cl_sweep_new(1.0, 1e11, ClSampling::Integers as u32, 0.0, 1, &mut h), ClStatus::Resource);
    }
}

#[test]
fn version_string() {
    let v = unsafe { CStr::from_ptr(cl_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}

/// Compiles and runs a small C program against the static library when a C
/// compiler is available.
#[test]
fn c_smoke() {
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let exe = std::env::current_exe().unwrap();
    let profile_dir = exe.parent().and_then(|d| d.parent()).unwrap().to_path_buf();
    let lib = profile_dir.join("libcirclelab_ffi.a");
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    if !lib.exists() || Command::new(&cc).arg("--version").output().is_err() {
        eprintln!("skipping C smoke test: no static library or C compiler");
        return;
    }
    let out_dir = std::env::temp_dir().join(format!("circlelab-ffi-{}", std::process::id()));
    std::fs::create_dir_all(&out_dir).unwrap();
    let bin = out_dir.join("smoke");
    let status = Command::new(&cc)
        .arg(manifest.join("tests/smoke.c"))
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&bin)
        .status()
        .unwrap();
    assert!(status.success(), "C compile failed");
    let run = Command::new(&bin).output().unwrap();
    assert!(run.status.success(), "{}", String::from_utf8_lossy(&run.stderr));
    assert_eq!(String::from_utf8_lossy(&run.stdout).trim(), "r2(25)=12 count(100)=317 ok");
    std::fs::remove_dir_all(&out_dir).unwrap();
}
