use std::ffi::{CStr, CString};
use std::ptr;

use linecolour_ffi::*;

fn last_error() -> String {
    let p = lc_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn colour_a_fat_triangle() {
    let g = lc_multigraph_new(3);
    unsafe {
        for _ in 0..3 {
            for (u, v) in [(0, 1), (1, 2), (0, 2)] {
                assert_eq!(lc_multigraph_add_edge(g, u, v, ptr::null_mut()), LcStatus::Ok);
            }
        }
        assert_eq!(lc_multigraph_edge_count(g), 9);
        let mut gamma = 0;
        assert_eq!(lc_local_edge_bound(g, &mut gamma), LcStatus::Ok);
        assert_eq!(gamma, 9);

        let mut c = ptr::null_mut();
        assert_eq!(lc_edge_colour(g, 0, &mut c), LcStatus::Ok);
        assert_eq!(lc_edge_colouring_colours_used(c), 9);

        let mut needed = 0;
        let mut short = [0u32; 4];
        assert_eq!(lc_edge_colouring_get(c, short.as_mut_ptr(), 4, &mut needed), LcStatus::BufferTooSmall);
        assert_eq!(needed, 9);
        let mut buf = vec![0u32; needed];
        assert_eq!(lc_edge_colouring_get(c, buf.as_mut_ptr(), buf.len(), &mut needed), LcStatus::Ok);
        buf.sort_unstable();
        assert_eq!(buf, (1..=9).collect::<Vec<u32>>());

        lc_edge_colouring_free(c);
        lc_multigraph_free(g);
    }
}

#[test]
fn errors_map_to_codes() {
    unsafe {
        let mut g = ptr::null_mut();
        let bad = CString::new("p mgraph 2 1\ne 0 5\n").unwrap();
        assert_eq!(lc_multigraph_parse(bad.as_ptr(), &mut g), LcStatus::Parse);
        assert!(last_error().contains("line 2"), "{}", last_error());
        assert!(g.is_null());

        let ok = CString::new("p mgraph 3 3\ne 0 1\ne 1 2\ne 0 2\n").unwrap();
        assert_eq!(lc_multigraph_parse(ok.as_ptr(), &mut g), LcStatus::Ok);
        assert!(lc_last_error().is_null());
        let mut c = ptr::null_mut();
        assert_eq!(lc_edge_colour(g, 2, &mut c), LcStatus::Infeasible);
        assert!(last_error().contains("below the local bound"));
        assert_eq!(lc_multigraph_add_edge(g, 1, 1, ptr::null_mut()), LcStatus::InvalidArgument);
        assert_eq!(lc_multigraph_add_edge(ptr::null_mut(), 0, 1, ptr::null_mut()), LcStatus::NullPointer);
        assert_eq!(lc_edge_colour(g, 0, ptr::null_mut()), LcStatus::NullPointer);
        lc_multigraph_free(g);
        lc_multigraph_free(ptr::null_mut());
    }
}

#[test]
fn quasiline_tree_through_c() {
    let tree = CString::new(
        "p qltree\nleaf line inline 3 2\ne 0 1\ne 1 2\nnode join 0 X1:0 Y1:1 V2:2@0,3@1,4@2;0..1,1..2 X2:2 Y2:4\n",
    )
    .unwrap();
    let (mut needed, mut used, mut gamma) = (0, 0, 0);
    let mut buf = [0u32; 5];
    let s = unsafe { lc_quasiline_colour(tree.as_ptr(), buf.as_mut_ptr(), 5, &mut needed, &mut used, &mut gamma) };
    assert_eq!(s, LcStatus::Ok);
    assert_eq!((needed, used, gamma), (5, 3, 3));
    for i in 0..5 {
        assert_ne!(buf[i], buf[(i + 1) % 5], "C5 edge {i}");
    }
}

#[test]
fn header_is_valid_c() {
    let dir = env!("CARGO_MANIFEST_DIR");
    let header = format!("{dir}/include/linecolour.h");
    let text = std::fs::read_to_string(&header).unwrap();
    for name in ["lc_edge_colour", "lc_quasiline_colour", "LC_STATUS_BUFFER_TOO_SMALL", "typedef struct LcMultigraph"] {
        assert!(text.contains(name), "{name} missing from header");
    }
    let Ok(out) = std::process::Command::new("cc")
        .args(["-fsyntax-only", "-x", "c", "-std=c99", "-Wall", "-Werror", &header])
        .output()
    else {
        eprintln!("no C compiler; skipped syntax check");
        return;
    };
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
}
