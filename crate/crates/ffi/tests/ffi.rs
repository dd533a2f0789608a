use std::ffi::{CStr, CString};
use std::process::Command;
use std::ptr;

use isoblock_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take(s: *mut std::ffi::c_char) -> String {
    let out = CStr::from_ptr(s).to_str().unwrap().to_string();
    isoblock_string_free(s);
    out
}

unsafe fn symbol(t: i64, a: &str, b: &str) -> *mut IsoblockSymbol {
    let mut out = ptr::null_mut();
    assert_eq!(isoblock_symbol_from_bipartition(t, c(a).as_ptr(), c(b).as_ptr(), &mut out), IsoblockStatus::Ok);
    out
}

#[test]
fn context_lifecycle_and_errors() {
    unsafe {
        let mut ctx = ptr::null_mut();
        assert_eq!(isoblock_context_new(3, 13, &mut ctx), IsoblockStatus::Ok);
        let (mut d, mut linear) = (0u32, false);
        assert_eq!(isoblock_context_info(ctx, &mut d, &mut linear), IsoblockStatus::Ok);
        assert_eq!((d, linear), (3, true));
        isoblock_context_free(ctx);

        let mut bad = ptr::null_mut();
        assert_eq!(isoblock_context_new(3, 3, &mut bad), IsoblockStatus::InvalidInput);
        assert!(bad.is_null());
        let msg = CStr::from_ptr(isoblock_last_error()).to_str().unwrap();
        assert!(msg.contains("divides"), "{msg}");
        assert_eq!(isoblock_context_new(3, 13, ptr::null_mut()), IsoblockStatus::NullPointer);
        isoblock_context_free(ptr::null_mut());
    }
}

#[test]
fn symbols_roundtrip() {
    unsafe {
        let s = symbol(1, "2,1", "");
        let (mut defect, mut rank) = (0i64, 0u64);
        assert_eq!(isoblock_symbol_invariants(s, &mut defect, &mut rank), IsoblockStatus::Ok);
        assert_eq!((defect, rank), (3, 5));
        let mut text = ptr::null_mut();
        assert_eq!(isoblock_symbol_to_string(s, &mut text), IsoblockStatus::Ok);
        let text = take(text);
        let mut parsed = ptr::null_mut();
        assert_eq!(isoblock_symbol_parse(c(&text).as_ptr(), &mut parsed), IsoblockStatus::Ok);
        let mut again = ptr::null_mut();
        assert_eq!(isoblock_symbol_to_string(parsed, &mut again), IsoblockStatus::Ok);
        assert_eq!(take(again), text);
        let mut core = ptr::null_mut();
        assert_eq!(isoblock_symbol_core(s, 2, true, &mut core), IsoblockStatus::Ok);
        assert_eq!(isoblock_symbol_invariants(core, &mut defect, &mut rank), IsoblockStatus::Ok);
        assert_eq!(defect, 1);
        for h in [s, parsed, core] {
            isoblock_symbol_free(h);
        }
        let mut none = ptr::null_mut();
        assert_eq!(isoblock_symbol_parse(c("nonsense").as_ptr(), &mut none), IsoblockStatus::InvalidInput);
        assert_eq!(isoblock_symbol_parse(ptr::null(), &mut none), IsoblockStatus::NullPointer);
    }
}

#[test]
fn partition_core_json() {
    unsafe {
        let mut out = ptr::null_mut();
        assert_eq!(isoblock_partition_core_json(c("3,1").as_ptr(), 2, 0, &mut out), IsoblockStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(&take(out)).unwrap();
        assert_eq!(v["core"], serde_json::json!([]));
        assert_eq!(v["quotient"]["components"][0], serde_json::json!([2]));
    }
}

#[test]
fn blocks_trees_and_rock() {
    unsafe {
        let mut ctx = ptr::null_mut();
        assert_eq!(isoblock_context_new(3, 13, &mut ctx), IsoblockStatus::Ok);
        let plus = symbol(0, "3", "");
        let minus = symbol(0, "", "");
        let mut out = ptr::null_mut();
        assert_eq!(isoblock_block_of_json(ctx, plus, minus, &mut out), IsoblockStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(&take(out)).unwrap();
        assert_eq!((v["block"]["w_plus"].as_u64(), v["defect"]["cyclic"].as_bool()), (Some(1), Some(true)));
        assert_eq!(isoblock_brauer_tree_json(ctx, plus, minus, &mut out), IsoblockStatus::Ok);
        let tree: serde_json::Value = serde_json::from_str(&take(out)).unwrap();
        assert_eq!(tree["nodes"].as_array().unwrap().len(), 7);
        assert_eq!(tree["edges"].as_array().unwrap().len(), 6);
        let mut rock = false;
        assert_eq!(isoblock_is_rock(ctx, plus, minus, &mut rock), IsoblockStatus::Ok);
        assert!(rock);
        let mut count = 0u64;
        assert_eq!(isoblock_block_count(ctx, 1, &mut count), IsoblockStatus::Ok);
        assert_eq!(count, 4);
        // the trivial character lies in a block of defect zero
        assert_eq!(isoblock_brauer_tree_json(ctx, minus, minus, &mut out), IsoblockStatus::InvalidInput);

        let mut unitary = ptr::null_mut();
        assert_eq!(isoblock_context_new(3, 5, &mut unitary), IsoblockStatus::Ok);
        assert_eq!(isoblock_is_rock(unitary, plus, minus, &mut rock), IsoblockStatus::Unsupported);
        for h in [plus, minus] {
            isoblock_symbol_free(h);
        }
        isoblock_context_free(ctx);
        isoblock_context_free(unitary);
    }
}

#[test]
fn header_compiles_as_c() {
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR"));
    let header = dir.join("include").join("isoblock.h");
    let text = std::fs::read_to_string(&header).expect("header written by the build script");
    assert!(text.contains("isoblock_brauer_tree_json") && text.contains("ISOBLOCK_STATUS_PANIC"));
    let Ok(status) = Command::new("cc")
        .args(["-fsyntax-only", "-Wall", "-Werror", "-x", "c", "-std=c99"])
        .arg(&header)
        .status()
    else {
        eprintln!("no C compiler found; syntax check skipped");
        return;
    };
    assert!(status.success());
}
