//! Named presentations used throughout the tests and shipped under `data/`.
//!
//! * `cycle(n)`: oriented n-cycle `g0 -> g1 -> ... -> g{n-1} -> g0` with arrows
//!   `al1..al{n}` and relations `al{i} al{i+1}` for `i < n` (the wrap-around
//!   composition is not a relation).
//! * `nakayama(l)`: the same cycle with every composition a relation.
//! * `t9`: nine vertices, a 3-cycle `a b c` with full relations and a
//!   two-arrow tail hanging off each of its vertices.
//! * `ex72`, `ex74`: the fourteen- and ten-vertex examples with finite and
//!   infinite global dimension respectively.
//! * `a2`, `point`, `kronecker`: the smallest cases.

use crate::presentation::{validate_gentle, GentlePresentation, RawPresentation};

pub fn cycle_raw(n: usize) -> RawPresentation {
    assert!(n >= 1);
    let mut raw = RawPresentation::new();
    for i in 0..n {
        raw = raw.vertex(format!("g{i}"));
    }
    for i in 1..=n {
        raw = raw.arrow(format!("al{i}"), format!("g{}", i - 1), format!("g{}", i % n));
    }
    for i in 1..n {
        raw = raw.relation(format!("al{i}"), format!("al{}", i + 1));
    }
    raw
}

pub fn nakayama_raw(len: usize) -> RawPresentation {
    cycle_raw(len).relation(format!("al{len}"), "al1")
}

pub fn t9_raw() -> RawPresentation {
    let mut raw = RawPresentation::new();
    for v in 1..=9 {
        raw = raw.vertex(v.to_string());
    }
    raw.arrow("a", "1", "2")
        .arrow("b", "2", "3")
        .arrow("c", "3", "1")
        .arrow("d", "1", "4")
        .arrow("e", "4", "5")
        .arrow("f", "2", "6")
        .arrow("g", "6", "7")
        .arrow("h", "3", "8")
        .arrow("i", "8", "9")
        .relation("a", "b")
        .relation("b", "c")
        .relation("c", "a")
}

pub fn ex72_raw() -> RawPresentation {
    let mut raw = RawPresentation::new();
    for v in 1..=14 {
        raw = raw.vertex(v.to_string());
    }
    raw.arrow("a1", "1", "3")
        .arrow("a2", "3", "2")
        .arrow("a3", "3", "4")
        .arrow("a4", "5", "4")
        .arrow("a5", "6", "5")
        .arrow("a6", "7", "6")
        .arrow("a7", "8", "7")
        .arrow("a8", "9", "8")
        .arrow("a9", "9", "10")
        .arrow("a10", "10", "3")
        .arrow("a10'", "10", "14")
        .arrow("a11", "11", "8")
        .arrow("a12", "12", "11")
        .arrow("a13", "13", "12")
        .arrow("a14", "14", "13")
        .relation("a1", "a3")
        .relation("a5", "a4")
        .relation("a8", "a7")
        .relation("a7", "a6")
        .relation("a10", "a2")
        .relation("a9", "a10'")
        .relation("a10'", "a14")
        .relation("a14", "a13")
}

pub fn ex74_raw() -> RawPresentation {
    let mut raw = RawPresentation::new();
    for v in 1..=10 {
        raw = raw.vertex(v.to_string());
    }
    let arrows = [
        (1, 2),
        (2, 3),
        (3, 4),
        (4, 5),
        (5, 6),
        (6, 3),
        (5, 7),
        (7, 8),
        (8, 5),
        (7, 9),
        (10, 7),
    ];
    for (s, t) in arrows {
        raw = raw.arrow(format!("a{s}_{t}"), s.to_string(), t.to_string());
    }
    raw.relation("a3_4", "a4_5")
        .relation("a4_5", "a5_6")
        .relation("a5_6", "a6_3")
        .relation("a6_3", "a3_4")
        .relation("a5_7", "a7_8")
        .relation("a7_8", "a8_5")
        .relation("a8_5", "a5_7")
        .relation("a10_7", "a7_9")
}

pub fn a2_raw() -> RawPresentation {
    RawPresentation::new()
        .vertex("1")
        .vertex("2")
        .arrow("al", "1", "2")
}

pub fn point_raw() -> RawPresentation {
    RawPresentation::new().vertex("v")
}

pub fn kronecker_raw() -> RawPresentation {
    RawPresentation::new()
        .vertex("u")
        .vertex("v")
        .arrow("b1", "u", "v")
        .arrow("b2", "u", "v")
}

fn build(raw: RawPresentation) -> GentlePresentation {
    validate_gentle(&raw).expect("fixture is gentle")
}

/// Panics for `n == 1`: a loop without relations is infinite-dimensional.
pub fn cycle(n: usize) -> GentlePresentation {
    build(cycle_raw(n))
}

pub fn nakayama(len: usize) -> GentlePresentation {
    build(nakayama_raw(len))
}

pub fn t9() -> GentlePresentation {
    build(t9_raw())
}

pub fn ex72() -> GentlePresentation {
    build(ex72_raw())
}

pub fn ex74() -> GentlePresentation {
    build(ex74_raw())
}

pub fn a2() -> GentlePresentation {
    build(a2_raw())
}

pub fn point() -> GentlePresentation {
    build(point_raw())
}

pub fn kronecker() -> GentlePresentation {
    build(kronecker_raw())
}

/// Every valid fixture with the file stem it is shipped under.
pub fn all_raw() -> Vec<(String, RawPresentation)> {
    let mut out = Vec::new();
    for n in 2..=8 {
        out.push((format!("cyc{n}"), cycle_raw(n)));
    }
    for l in 1..=5 {
        out.push((format!("nak{l}"), nakayama_raw(l)));
    }
    out.push(("t9".into(), t9_raw()));
    out.push(("ex72".into(), ex72_raw()));
    out.push(("ex74".into(), ex74_raw()));
    out.push(("a2".into(), a2_raw()));
    out.push(("pt".into(), point_raw()));
    out.push(("kron".into(), kronecker_raw()));
    out
}

pub fn all() -> Vec<(String, GentlePresentation)> {
    all_raw()
        .into_iter()
        .map(|(name, raw)| (name, build(raw)))
        .collect()
}
