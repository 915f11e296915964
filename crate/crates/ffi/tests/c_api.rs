use std::ffi::{c_char, CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use okounkov_ffi::*;

fn take(s: *mut c_char) -> String {
    assert!(!s.is_null());
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_string();
    unsafe { ok_string_free(s) };
    out
}

fn last_error() -> String {
    let p = ok_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn toric_handle_round_trip() {
    let json = CString::new(r#"{"vertices": [[0,0],[1,0],[1,1],[0,1]], "chosen": [0,1,2,3]}"#).unwrap();
    let mut h: *mut OkToric = ptr::null_mut();
    assert_eq!(unsafe { ok_toric_new(json.as_ptr(), &mut h) }, OkStatus::Ok);
    let mut n = 0usize;
    assert_eq!(unsafe { ok_toric_num_points(h, &mut n) }, OkStatus::Ok);
    assert_eq!(n, 4);
    let mut s: *mut c_char = ptr::null_mut();
    assert_eq!(unsafe { ok_toric_seshadri(h, &mut s) }, OkStatus::Ok);
    assert_eq!(take(s), "1/2");
    assert_eq!(unsafe { ok_toric_xi(h, &mut s) }, OkStatus::Ok);
    assert_eq!(take(s), "1/2");
    assert_eq!(unsafe { ok_toric_body_volume(h, 2, &mut s) }, OkStatus::Ok);
    assert_eq!(take(s), "1/4");
    assert_eq!(unsafe { ok_toric_body_json(h, 0, &mut s) }, OkStatus::Ok);
    let body: serde_json::Value = serde_json::from_str(&take(s)).unwrap();
    assert_eq!(body["dim"], 2);
    let mut eq = false;
    assert_eq!(unsafe { ok_toric_volume_check(h, &mut eq) }, OkStatus::Ok);
    assert!(eq);
    assert_eq!(unsafe { ok_toric_body_json(h, 9, &mut s) }, OkStatus::Precondition);
    assert!(last_error().contains("out of range"));
    unsafe { ok_toric_free(h) };
}

#[test]
fn status_codes() {
    let mut h: *mut OkToric = ptr::null_mut();
    assert_eq!(unsafe { ok_toric_new(ptr::null(), &mut h) }, OkStatus::NullPointer);
    let bad = CString::new("{").unwrap();
    assert_eq!(unsafe { ok_toric_new(bad.as_ptr(), &mut h) }, OkStatus::InvalidInput);
    let non_smooth = CString::new(r#"{"vertices": [[0,0],[2,0],[0,1]], "chosen": [0]}"#).unwrap();
    assert_eq!(unsafe { ok_toric_new(non_smooth.as_ptr(), &mut h) }, OkStatus::Precondition);
    assert!(h.is_null());
    let mut n = 0usize;
    assert_eq!(unsafe { ok_toric_num_points(ptr::null(), &mut n) }, OkStatus::NullPointer);
    unsafe { ok_toric_free(ptr::null_mut()) };
    unsafe { ok_string_free(ptr::null_mut()) };
}

#[test]
fn surface_handle() {
    let json = CString::new(r#"{"N": 2, "curves": "delpezzo", "L": [1, 0, 0]}"#).unwrap();
    let mut h: *mut OkSurface = ptr::null_mut();
    assert_eq!(unsafe { ok_surface_new(json.as_ptr(), &mut h) }, OkStatus::Ok);
    let mut s: *mut c_char = ptr::null_mut();
    assert_eq!(unsafe { ok_surface_xi(h, &mut s) }, OkStatus::Ok);
    assert_eq!(take(s), "1/2");
    assert_eq!(unsafe { ok_surface_zariski_json(h, &mut s) }, OkStatus::Ok);
    let z: serde_json::Value = serde_json::from_str(&take(s)).unwrap();
    assert_eq!(z["volume"], "1");
    assert_eq!(unsafe { ok_surface_body_json(h, 1, &mut s) }, OkStatus::Ok);
    let b: serde_json::Value = serde_json::from_str(&take(s)).unwrap();
    assert_eq!(b["breakpoints"], serde_json::json!(["0", "1/2", "1"]));
    unsafe { ok_surface_free(h) };
}

#[test]
fn pipeline_report() {
    let mode = CString::new("toric").unwrap();
    let json = CString::new(r#"{"vertices": [[0,0],[1,0],[0,1]], "chosen": [0,1,2]}"#).unwrap();
    let mut s: *mut c_char = ptr::null_mut();
    assert_eq!(unsafe { ok_run_json(mode.as_ptr(), json.as_ptr(), 4, &mut s) }, OkStatus::Ok);
    let report: serde_json::Value = serde_json::from_str(&take(s)).unwrap();
    assert_eq!(report["xi"], "1/2");
    let unknown = CString::new("plot").unwrap();
    assert_eq!(unsafe { ok_run_json(unknown.as_ptr(), json.as_ptr(), 0, &mut s) }, OkStatus::InvalidInput);
}

#[test]
fn header_declares_every_export() {
    let header = std::fs::read_to_string(PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("include/okounkov.h")).unwrap();
    for name in [
        "ok_last_error",
        "ok_string_free",
        "ok_toric_new",
        "ok_toric_free",
        "ok_toric_seshadri",
        "ok_surface_new",
        "ok_surface_xi",
        "ok_run_json",
        "typedef struct OkToric OkToric",
        "OK_STATUS_PRECONDITION = 3",
    ] {
        assert!(header.contains(name), "{name} missing from header");
    }
}

/// Compiles and runs a small C program against the header and static library
/// when a C compiler is available.
#[test]
fn c_program_links() {
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let exe = std::env::current_exe().unwrap();
    let profile_dir = exe.parent().and_then(|p| p.parent()).unwrap().to_path_buf();
    let lib = profile_dir.join("libokounkov_ffi.a");
    if !lib.exists() || Command::new("cc").arg("--version").output().is_err() {
        eprintln!("skipping: no static library or C compiler");
        return;
    }
    let dir = tempfile_dir();
    let src = dir.join("smoke.c");
    std::fs::write(
        &src,
        r#"#include <stdio.h>
#include <string.h>
#include "okounkov.h"
int main(void) {
    OkToric *h = NULL;
    if (ok_toric_new("{\"vertices\": [[0,0],[1,0],[0,1]], \"chosen\": [0]}", &h) != OK_STATUS_OK) return 1;
    char *s = NULL;
    if (ok_toric_seshadri(h, &s) != OK_STATUS_OK) return 2;
    int ok = strcmp(s, "1") == 0;
    ok_string_free(s);
    ok_toric_free(h);
    if (ok_toric_new("{", &h) != OK_STATUS_INVALID_INPUT) return 3;
    printf("%s\n", ok_last_error());
    return ok ? 0 : 4;
}
"#,
    )
    .unwrap();
    let bin = dir.join("smoke");
    let status = Command::new("cc")
        .arg(&src)
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&bin)
        .status()
        .unwrap();
    assert!(status.success(), "C compilation failed");
    let run = Command::new(&bin).output().unwrap();
    assert!(run.status.success(), "exit {:?}", run.status.code());
}

fn tempfile_dir() -> PathBuf {
    let d = std::env::temp_dir().join(format!("okounkov-ffi-{}", std::process::id()));
    std::fs::create_dir_all(&d).unwrap();
    d
}
