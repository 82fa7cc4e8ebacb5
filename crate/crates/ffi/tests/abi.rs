use std::ffi::{CStr, CString};
use std::ptr;

use cdgraph_ffi::*;

fn cstr(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take_string(p: *mut std::ffi::c_char) -> String {
    let s = CStr::from_ptr(p).to_str().unwrap().to_string();
    cdg_string_free(p);
    s
}

unsafe fn last_error() -> String {
    let p = cdg_last_error_message();
    assert!(!p.is_null());
    CStr::from_ptr(p).to_str().unwrap().to_string()
}

#[test]
fn group_to_degrees_to_graph() {
    unsafe {
        let mut g = ptr::null_mut();
        assert_eq!(cdg_group_parse(cstr("(1 2 3 4),(1 2)").as_ptr(), 10_000, &mut g), CdgStatus::Ok);
        let mut order = 0;
        assert_eq!(cdg_group_order(g, &mut order), CdgStatus::Ok);
        assert_eq!(order, 24);
        let mut solvable = false;
        assert_eq!(cdg_group_is_solvable(g, &mut solvable), CdgStatus::Ok);
        assert!(solvable);

        let mut d = ptr::null_mut();
        assert_eq!(cdg_degrees_of_group(g, &mut d), CdgStatus::Ok);
        let mut len = 0;
        assert_eq!(cdg_degrees_values(d, ptr::null_mut(), 0, &mut len), CdgStatus::Ok);
        let mut buf = vec![0u64; len];
        assert_eq!(cdg_degrees_values(d, buf.as_mut_ptr(), len, &mut len), CdgStatus::Ok);
        assert_eq!(buf, [1, 1, 2, 3, 3]);
        let mut s = ptr::null_mut();
        assert_eq!(cdg_degrees_to_json(d, &mut s), CdgStatus::Ok);
        assert_eq!(take_string(s), "[1,1,2,3,3]");

        let mut graph = ptr::null_mut();
        assert_eq!(cdg_graph_from_degrees(d, &mut graph), CdgStatus::Ok);
        let (mut n, mut m) = (0, 0);
        cdg_graph_vertex_count(graph, &mut n);
        cdg_graph_edge_count(graph, &mut m);
        assert_eq!((n, m), (2, 0));
        let mut s = ptr::null_mut();
        assert_eq!(cdg_graph_to_edge_list(graph, &mut s), CdgStatus::Ok);
        assert_eq!(take_string(s), "2;3");

        let mut r = ptr::null_mut();
        assert_eq!(cdg_analyze_group(g, CdgSolvability::Auto, &mut r), CdgStatus::Ok);
        let mut passed = false;
        cdg_report_passed(r, &mut passed);
        assert!(passed);
        let mut first = ptr::null_mut();
        assert_eq!(cdg_report_first_failure(r, &mut first), CdgStatus::Ok);
        assert!(first.is_null());

        cdg_report_free(r);
        cdg_graph_free(graph);
        cdg_degrees_free(d);
        cdg_group_free(g);
    }
}

#[test]
fn screening_reports_first_failure() {
    unsafe {
        let mut graph = ptr::null_mut();
        assert_eq!(cdg_graph_parse_edge_list(cstr("3-5;2;17").as_ptr(), &mut graph), CdgStatus::Ok);
        let mut r = ptr::null_mut();
        assert_eq!(cdg_screen_graph(graph, &mut r), CdgStatus::Ok);
        let mut first = ptr::null_mut();
        cdg_report_first_failure(r, &mut first);
        assert_eq!(take_string(first), "palfy");
        let mut json = ptr::null_mut();
        assert_eq!(cdg_report_to_json(r, &mut json), CdgStatus::Ok);
        assert!(take_string(json).contains("\"outcome\": \"fail\""));
        cdg_report_free(r);

        let mut count = 0;
        assert_eq!(cdg_graph_distinct_eigenvalues(graph, &mut count), CdgStatus::Ok);
        assert_eq!(count, 3);
        cdg_graph_free(graph);
    }
}

#[test]
fn degree_and_fixture_entry_points() {
    unsafe {
        let mut d = ptr::null_mut();
        assert_eq!(cdg_degrees_parse(cstr("1,15,16,17").as_ptr(), &mut d), CdgStatus::Ok);
        let mut r = ptr::null_mut();
        assert_eq!(cdg_analyze_degrees(d, CdgSolvability::Nonsolvable, &mut r), CdgStatus::Ok);
        let mut passed = false;
        cdg_report_passed(r, &mut passed);
        assert!(passed);
        cdg_report_free(r);
        assert_eq!(cdg_analyze_degrees(d, CdgSolvability::Auto, &mut r), CdgStatus::InvalidArgument);
        cdg_degrees_free(d);

        assert_eq!(cdg_analyze_fixture(cstr("star").as_ptr(), 10_000, &mut r), CdgStatus::Ok);
        cdg_report_passed(r, &mut passed);
        assert!(!passed);
        let mut dot = ptr::null_mut();
        cdg_report_to_dot(r, &mut dot);
        assert!(take_string(dot).contains("doublecircle"));
        cdg_report_free(r);
    }
}

#[test]
fn error_codes_and_messages() {
    unsafe {
        let mut g = ptr::null_mut();
        assert_eq!(cdg_group_parse(ptr::null(), 10, &mut g), CdgStatus::NullPointer);
        assert_eq!(cdg_group_parse(cstr("(1 2").as_ptr(), 10, &mut g), CdgStatus::Parse);
        assert!(!last_error().is_empty());
        assert_eq!(
            cdg_group_parse(cstr("(1 2 3 4 5 6 7)").as_ptr(), 3, &mut g),
            CdgStatus::ResourceLimit
        );
        assert!(last_error().contains("cap"));
        assert!(g.is_null());

        let bad = [0x66u8, 0xff, 0];
        let mut graph = ptr::null_mut();
        assert_eq!(cdg_graph_parse_edge_list(bad.as_ptr().cast(), &mut graph), CdgStatus::InvalidUtf8);
        assert_eq!(cdg_graph_parse_json(cstr("{}").as_ptr(), &mut graph), CdgStatus::Parse);

        let mut r = ptr::null_mut();
        assert_eq!(cdg_analyze_fixture(cstr("nope").as_ptr(), 10, &mut r), CdgStatus::InvalidArgument);
        assert_eq!(cdg_report_passed(ptr::null(), ptr::null_mut()), CdgStatus::NullPointer);

        assert_eq!(cdg_degrees_parse(cstr("1,2").as_ptr(), ptr::null_mut()), CdgStatus::NullPointer);
        assert!(cdg_last_error_message().is_null() || !last_error().is_empty());
        cdg_string_free(ptr::null_mut());
        cdg_group_free(ptr::null_mut());
    }
}

#[test]
fn errors_are_per_thread() {
    unsafe {
        let mut g = ptr::null_mut();
        assert_eq!(cdg_group_parse(cstr("(1 2").as_ptr(), 10, &mut g), CdgStatus::Parse);
        let other = std::thread::spawn(|| cdg_last_error_message().is_null()).join().unwrap();
        assert!(other);
        assert!(!cdg_last_error_message().is_null());
    }
}
