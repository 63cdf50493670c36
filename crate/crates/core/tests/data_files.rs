use std::path::PathBuf;

use gentle_core::fixtures;
use gentle_core::io::{parse, ParseError};
use gentle_core::{PresentationError, Violation};

fn read(stem: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join(format!("../../data/{stem}.gentle"));
    std::fs::read_to_string(path).unwrap()
}

#[test]
fn shipped_files_match_fixtures() {
    for (stem, a) in fixtures::all() {
        assert_eq!(parse(&read(&stem)).unwrap(), a, "{stem}");
    }
}

#[test]
fn ex72_shape() {
    let a = parse(&read("ex72")).unwrap();
    assert_eq!(
        (a.vertex_count(), a.arrow_count(), a.relations().len()),
        (14, 15, 8)
    );
}

#[test]
fn cyc4_has_four_vertices() {
    assert_eq!(parse(&read("cyc4")).unwrap().vertex_count(), 4);
}

#[test]
fn single_loop_without_relation_is_rejected() {
    let err = parse(&read("cyc1")).unwrap_err();
    assert_eq!(err.exit_code(), 1);
    let ParseError::Invalid(PresentationError::NotGentle(violations)) = err else {
        panic!("expected a gentleness violation");
    };
    assert!(violations
        .iter()
        .any(|v| matches!(v, Violation::RelationFreeCycle { .. })));
}
