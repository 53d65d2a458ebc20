use std::ffi::{CStr, CString};
use std::path::Path;
use std::process::Command;
use std::ptr;

use ikforge_ffi::*;

unsafe fn take_string(p: *mut std::ffi::c_char) -> String {
    let s = CStr::from_ptr(p).to_str().unwrap().to_owned();
    ik_string_free(p);
    s
}

unsafe fn catalog(name: &str) -> *mut IkGraph {
    let c = CString::new(name).unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(ik_catalog_graph(c.as_ptr(), &mut g), IkStatus::Ok);
    g
}

#[test]
fn heawood_roundtrip_and_reduce() {
    unsafe {
        let g = catalog("heawood");
        assert_eq!(ik_graph_order(g), 14);
        assert_eq!(ik_graph_edge_count(g), 21);
        let mut b = false;
        assert_eq!(ik_graph_is_bipartite(g, &mut b), IkStatus::Ok);
        assert!(b);
        assert_eq!(ik_graph_is_planar(g, &mut b), IkStatus::Ok);
        assert!(!b);

        let mut s = ptr::null_mut();
        assert_eq!(ik_graph_to_graph6(g, &mut s), IkStatus::Ok);
        let text = CString::new(take_string(s)).unwrap();
        let mut h = ptr::null_mut();
        assert_eq!(ik_graph_from_graph6(text.as_ptr(), &mut h), IkStatus::Ok);

        let (mut c1, mut c2) = (ptr::null_mut(), ptr::null_mut());
        assert_eq!(ik_graph_canonical_hex(g, &mut c1), IkStatus::Ok);
        assert_eq!(ik_graph_canonical_hex(h, &mut c2), IkStatus::Ok);
        assert_eq!(take_string(c1), take_string(c2));

        let mut r = IkReduction {
            edge_count: 0,
            predicted: 0,
            eliminates: false,
            rule: IkRule::None,
        };
        let mut reduced = ptr::null_mut();
        assert_eq!(ik_reduce(g, 0, 1, &mut r, &mut reduced), IkStatus::Ok);
        assert_eq!(r.edge_count, 12);
        assert_eq!(r.predicted, 12);
        assert_eq!(ik_graph_edge_count(reduced), 12);
        ik_graph_free(reduced);

        // Heawood is intrinsically knotted, so no pair eliminates it
        let (mut a, mut bb) = (0usize, 0usize);
        assert_eq!(ik_obstruction_scan(g, &mut a, &mut bb, &mut r), IkStatus::NotFound);

        let k = catalog("k33tilde");
        assert_eq!(ik_obstruction_scan(k, &mut a, &mut bb, &mut r), IkStatus::Ok);
        assert!(r.eliminates);
        assert_eq!(r.rule, IkRule::EdgeCount);
        assert!(a < bb);
        ik_graph_free(k);

        ik_graph_free(h);
        ik_graph_free(g);
    }
}

#[test]
fn survivors_have_no_eliminating_pair() {
    unsafe {
        for name in ["cousin110", "cousin89"] {
            let g = catalog(name);
            let mut r = std::mem::MaybeUninit::<IkReduction>::uninit();
            let (mut a, mut b) = (0usize, 0usize);
            assert_eq!(ik_obstruction_scan(g, &mut a, &mut b, r.as_mut_ptr()), IkStatus::NotFound);
            let msg = CStr::from_ptr(ik_last_error()).to_str().unwrap();
            assert!(msg.contains("no vertex pair"), "{msg}");
            ik_graph_free(g);
        }
    }
}

#[test]
fn edge_arrays_allow_parallel_edges() {
    unsafe {
        let pairs: [u32; 6] = [0, 1, 1, 0, 1, 2];
        let mut g = ptr::null_mut();
        assert_eq!(ik_graph_from_edges(3, pairs.as_ptr(), 3, &mut g), IkStatus::Ok);
        assert_eq!(ik_graph_edge_count(g), 3);
        let mut d = 0;
        assert_eq!(ik_graph_degree(g, 1, &mut d), IkStatus::Ok);
        assert_eq!(d, 3);
        assert_eq!(ik_graph_degree(g, 3, &mut d), IkStatus::OutOfRange);
        let mut s = ptr::null_mut();
        assert_eq!(ik_graph_to_graph6(g, &mut s), IkStatus::Unsupported);
        assert!(s.is_null());
        ik_graph_free(g);
    }
}

#[test]
fn error_codes() {
    unsafe {
        let mut g = ptr::null_mut();
        let bad = CString::new("nope").unwrap();
        assert_eq!(ik_catalog_graph(bad.as_ptr(), &mut g), IkStatus::UnknownName);
        assert!(CStr::from_ptr(ik_last_error()).to_str().unwrap().contains("nope"));
        let junk = CString::new("~~~~").unwrap();
        assert_eq!(ik_graph_from_graph6(junk.as_ptr(), &mut g), IkStatus::ParseError);
        assert_eq!(ik_graph_from_graph6(ptr::null(), &mut g), IkStatus::NullPointer);
        let loop_edge: [u32; 2] = [1, 1];
        assert_eq!(ik_graph_from_edges(2, loop_edge.as_ptr(), 1, &mut g), IkStatus::InvalidGraph);
        let far: [u32; 2] = [0, 5];
        assert_eq!(ik_graph_from_edges(2, far.as_ptr(), 1, &mut g), IkStatus::OutOfRange);
        assert!(g.is_null());

        let k = catalog("k33");
        let mut r = std::mem::MaybeUninit::<IkReduction>::uninit();
        assert_eq!(ik_reduce(k, 0, 0, r.as_mut_ptr(), ptr::null_mut()), IkStatus::OutOfRange);
        assert_eq!(ik_reduce(k, 0, 9, r.as_mut_ptr(), ptr::null_mut()), IkStatus::OutOfRange);
        ik_graph_free(k);
    }
}

#[test]
fn header_declares_every_export() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/ikforge.h")).unwrap();
    for f in [
        "ik_last_error",
        "ik_status_message",
        "ik_version",
        "ik_graph_from_graph6",
        "ik_graph_from_edges",
        "ik_catalog_graph",
        "ik_graph_free",
        "ik_graph_order",
        "ik_graph_edge_count",
        "ik_graph_degree",
        "ik_graph_is_planar",
        "ik_graph_is_bipartite",
        "ik_graph_canonical_hex",
        "ik_graph_to_graph6",
        "ik_string_free",
        "ik_reduce",
        "ik_obstruction_scan",
    ] {
        assert!(header.contains(&format!("{f}(")), "{f} missing from header");
    }
    assert!(header.contains("typedef struct IkGraph IkGraph;"));
    assert!(header.contains("IK_STATUS_NOT_FOUND = 7"));
}

#[test]
fn c_program_links_against_staticlib() {
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    if Command::new(&cc).arg("--version").output().is_err() {
        eprintln!("no C compiler; skipping");
        return;
    }
    let manifest = Path::new(env!("CARGO_MANIFEST_DIR"));
    // target/<profile>/deps/abi-xxxx -> target/<profile>
    let exe = std::env::current_exe().unwrap();
    let profile_dir = exe.parent().unwrap().parent().unwrap();
    let lib = profile_dir.join("libikforge_ffi.a");
    assert!(lib.exists(), "{} not built", lib.display());
    let dir = tempfile_dir();
    let bin = dir.join("smoke");
    let status = Command::new(&cc)
        .arg("-std=c99")
        .arg("-Wall")
        .arg("-Werror")
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(manifest.join("tests/c/smoke.c"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&bin)
        .status()
        .unwrap();
    assert!(status.success(), "C compile failed");
    let out = Command::new(&bin).output().unwrap();
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(out.status.success(), "{stdout}{}", String::from_utf8_lossy(&out.stderr));
    assert!(stdout.contains("heawood 14 21 reduce(0,1)=12"), "{stdout}");
    assert!(stdout.contains("cousin110 survives"), "{stdout}");
    let _ = std::fs::remove_dir_all(dir);
}

fn tempfile_dir() -> std::path::PathBuf {
    let d = std::env::temp_dir().join(format!("ikforge-ffi-{}", std::process::id()));
    std::fs::create_dir_all(&d).unwrap();
    d
}
