use std::ffi::{c_char, CStr, CString};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::ptr;

use hurwitz_ffi::*;

fn take(s: *mut c_char) -> String {
    assert!(!s.is_null());
    let text = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_string();
    unsafe { hurwitz_string_free(s) };
    text
}

fn last_error() -> String {
    let p = hurwitz_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_string()
}

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

#[test]
fn scalar_functions() {
    let mut out = ptr::null_mut();
    unsafe {
        assert_eq!(
            hurwitz_character_value(c("2,1").as_ptr(), c("3").as_ptr(), &mut out),
            HurwitzStatus::Ok
        );
        assert_eq!(take(out), "-1");
        assert_eq!(hurwitz_genus0(2, &mut out), HurwitzStatus::Ok);
        assert_eq!(take(out), "1/2");
        assert_eq!(hurwitz_gw_invariant(4, 0, &mut out), HurwitzStatus::Ok);
        assert_eq!(take(out), "620");
        assert_eq!(hurwitz_kontsevich(5, &mut out), HurwitzStatus::Ok);
        assert_eq!(take(out), "87304");
        let kron = hurwitz_kronecker_coefficient(c("2,1").as_ptr(), c("2,1").as_ptr(), c("2,1").as_ptr(), &mut out);
        assert_eq!(kron, HurwitzStatus::Ok);
        assert_eq!(take(out), "1");

        let mut lr = 0u64;
        let status = hurwitz_lr_coefficient(c("2,1").as_ptr(), c("2,1").as_ptr(), c("3,2,1").as_ptr(), &mut lr);
        assert_eq!(status, HurwitzStatus::Ok);
        assert_eq!(lr, 2);

        let mut genus = 0u64;
        let mults = [1u32; 6];
        assert_eq!(
            hurwitz_cover_genus(2, mults.as_ptr(), mults.len(), &mut genus),
            HurwitzStatus::Ok
        );
        assert_eq!(genus, 2);

        let config = c(r#"{"n":2,"s":3,"generators":[{"perm":[0,1],"exponents":[1,2]}]}"#);
        assert_eq!(
            hurwitz_molien_series_json(config.as_ptr(), 3, &mut out),
            HurwitzStatus::Ok
        );
        assert_eq!(take(out), r#"["1","0","1","2"]"#);
    }
}

#[test]
fn error_codes() {
    let mut out = ptr::null_mut();
    unsafe {
        assert_eq!(
            hurwitz_character_value(ptr::null(), c("3").as_ptr(), &mut out),
            HurwitzStatus::NullPointer
        );
        assert!(last_error().contains("lambda"));
        assert_eq!(
            hurwitz_character_value(c("2,1").as_ptr(), c("3").as_ptr(), ptr::null_mut()),
            HurwitzStatus::NullPointer
        );
        assert_eq!(
            hurwitz_character_value(c("2,1").as_ptr(), c("x").as_ptr(), &mut out),
            HurwitzStatus::InvalidArgument
        );
        assert_eq!(hurwitz_gw_invariant(3, 2, &mut out), HurwitzStatus::InvalidArgument);
        assert!(last_error().contains("genus"));
        assert_eq!(hurwitz_gw_invariant(9, 0, &mut out), HurwitzStatus::SizeLimit);
        assert_eq!(hurwitz_kontsevich(9, &mut out), HurwitzStatus::SizeLimit);
        // a success clears the message
        assert_eq!(hurwitz_kontsevich(2, &mut out), HurwitzStatus::Ok);
        take(out);
        assert!(hurwitz_last_error_message().is_null());
        hurwitz_string_free(ptr::null_mut());
    }
}

#[test]
fn character_table_handle() {
    let mut table = ptr::null_mut();
    let mut out = ptr::null_mut();
    unsafe {
        assert_eq!(hurwitz_char_table_new(4, &mut table), HurwitzStatus::Ok);
        let mut n = 0usize;
        assert_eq!(hurwitz_char_table_size(table, &mut n), HurwitzStatus::Ok);
        assert_eq!(n, 5);
        assert_eq!(hurwitz_char_table_label(table, 1, &mut out), HurwitzStatus::Ok);
        assert_eq!(take(out), "3,1");
        // χ^{(3,1)} on a transposition
        assert_eq!(hurwitz_char_table_value(table, 1, 3, &mut out), HurwitzStatus::Ok);
        assert_eq!(take(out), "1");
        assert_eq!(
            hurwitz_char_table_value(table, 5, 0, &mut out),
            HurwitzStatus::InvalidArgument
        );
        assert_eq!(hurwitz_char_table_json(table, &mut out), HurwitzStatus::Ok);
        assert!(take(out).starts_with(r#"{"d":4,"#));
        hurwitz_char_table_free(table);
        hurwitz_char_table_free(ptr::null_mut());
        assert_eq!(hurwitz_char_table_size(ptr::null(), &mut n), HurwitzStatus::NullPointer);
        assert_eq!(hurwitz_char_table_new(30, &mut table), HurwitzStatus::SizeLimit);
    }
}

#[test]
fn covering_handle() {
    let mut cov = ptr::null_mut();
    let mut out = ptr::null_mut();
    unsafe {
        assert_eq!(hurwitz_covering_new(0, &mut cov), HurwitzStatus::InvalidArgument);
        assert_eq!(hurwitz_covering_new(3, &mut cov), HurwitzStatus::Ok);
        for _ in 0..3 {
            assert_eq!(hurwitz_covering_add_profile(cov, c("3").as_ptr()), HurwitzStatus::Ok);
        }
        assert_eq!(
            hurwitz_covering_add_profile(cov, c("2,1,1").as_ptr()),
            HurwitzStatus::InvalidArgument
        );
        assert_eq!(hurwitz_covering_disconnected(cov, &mut out), HurwitzStatus::Ok);
        assert_eq!(take(out), "1/3");
        assert_eq!(hurwitz_covering_connected(cov, &mut out), HurwitzStatus::Ok);
        assert_eq!(take(out), "1/3");
        hurwitz_covering_free(cov);
    }
}

fn target_dir() -> PathBuf {
    // <target>/<profile>/deps/<test binary>
    let exe = std::env::current_exe().unwrap();
    exe.parent().unwrap().parent().unwrap().to_path_buf()
}

#[test]
fn header_declares_every_export() {
    let header = std::fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("include/hurwitz.h")).unwrap();
    let source = std::fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("src/lib.rs")).unwrap();
    let exports: Vec<&str> = source
        .lines()
        .filter_map(|l| l.split("extern \"C\" fn ").nth(1))
        .map(|rest| rest.split('(').next().unwrap())
        .collect();
    assert!(exports.len() >= 20);
    for name in exports {
        assert!(header.contains(&format!("{name}(")), "{name} missing from header");
    }
}

#[test]
fn c_program_links_against_static_library() {
    let lib = target_dir().join("libhurwitz_ffi.a");
    if !lib.exists() || Command::new("cc").arg("--version").output().is_err() {
        eprintln!("skipping: no static library or C compiler");
        return;
    }
    let manifest = Path::new(env!("CARGO_MANIFEST_DIR"));
    let exe = std::env::temp_dir().join(format!("hurwitz-ffi-smoke-{}", std::process::id()));
    let status = Command::new("cc")
        .arg(manifest.join("tests/smoke.c"))
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .unwrap();
    assert!(status.success(), "C smoke program failed to compile");
    let run = Command::new(&exe).output().unwrap();
    std::fs::remove_file(&exe).ok();
    assert!(run.status.success(), "{}", String::from_utf8_lossy(&run.stderr));
}
