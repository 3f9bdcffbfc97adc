#![allow(dead_code)]

use cacd_core::representation::{parse_rational, CatchRepresentation, Rational};
use cacd_core::{BinaryMatrix, Digraph};

/// Augmented adjacency rows of the seven-vertex golden example, listed in the
/// row order `v2, v4, v3, v1, v5, v7, v6` over columns `v1..v7`.
pub const GOLDEN_ROWS: [&str; 7] = ["1111100", "0011100", "0011110", "1111111", "1111111", "1100011", "1110011"];
/// Vertex (0-based) of each row of [`GOLDEN_ROWS`].
pub const GOLDEN_ROW_VERTICES: [usize; 7] = [1, 3, 2, 0, 4, 6, 5];

/// Monotone matrix whose endpoint profile is tabulated exactly; differs from
/// [`GOLDEN_ROWS`] only in the first row.
pub const PROFILE_ROWS: [&str; 7] = ["1111000", "0011100", "0011110", "1111111", "1111111", "1100011", "1110011"];

pub fn golden_matrix() -> BinaryMatrix {
    BinaryMatrix::from_strs(&GOLDEN_ROWS).unwrap()
}

pub fn golden_digraph() -> Digraph {
    let mut g = Digraph::empty(7).unwrap();
    for (row, &u) in GOLDEN_ROWS.iter().zip(&GOLDEN_ROW_VERTICES) {
        for (v, c) in row.chars().enumerate() {
            if c == '1' && u != v {
                g.set_edge(u, v, true).unwrap();
            }
        }
    }
    g
}

fn rep(l: &str, triples: &[(&str, &str, &str)]) -> CatchRepresentation {
    let p = |s: &str| -> Rational { parse_rational(s).unwrap() };
    let t: Vec<_> = triples.iter().map(|&(a, b, q)| (p(a), p(b), p(q))).collect();
    CatchRepresentation::from_triples(p(l), &t).unwrap()
}

/// Oriented example whose underlying graph is the complement of the 6-cycle.
pub fn six_vertex_example() -> CatchRepresentation {
    rep(
        "7",
        &[("3", "6", "5"), ("1.9", "2.1", "2"), ("2.9", "3.1", "3"), ("5.9", "2", "6"), ("2", "4.1", "4"), ("0.9", "3", "1")],
    )
}

/// Oriented example whose underlying graph is the complement of the 7-cycle.
pub fn seven_vertex_example() -> CatchRepresentation {
    rep(
        "8",
        &[
            ("4.9", "7.1", "5"),
            ("0.9", "3.1", "1"),
            ("3.9", "6.1", "4"),
            ("6.9", "2.1", "7"),
            ("2.9", "5.1", "3"),
            ("5.9", "1.1", "6"),
            ("1.9", "4.1", "2"),
        ],
    )
}

pub fn d3() -> Digraph {
    Digraph::from_edges(4, &[(0, 1), (1, 2), (2, 0), (3, 0), (3, 1), (3, 2)]).unwrap()
}
