mod common;

use cacd_core::circular_ones::Permutation;
use cacd_core::proper::{proper_pipeline, recognize_proper_cacd_traced};
use cacd_core::representation::rat;
use cacd_core::Digraph;

use common::*;

#[test]
fn golden_pipeline_exact_values() {
    let g = golden_digraph();
    let (verdict, trace, tally) = recognize_proper_cacd_traced(&g).unwrap();
    assert!(verdict.is_accepted());
    assert_eq!(tally.candidates, 1);
    let trace = trace.unwrap();
    assert_eq!(trace.ordering, Permutation::identity(7));
    assert_eq!(trace.representation.circumference(), rat(15, 1));
    assert_eq!(trace.m, golden_matrix());
    // v1 wraps from just past v3's end back to v2's point
    let (a, b) = trace.arcs[3];
    assert_eq!((a, b), (rat(11, 3), rat(11, 4)));
    assert_eq!(trace.representation.point(3).value(), rat(4, 1));
    assert_eq!(trace.representation.point(6).value(), rat(10, 1));
}

#[test]
fn golden_trace_is_reproducible_from_ordering() {
    let g = golden_digraph();
    let a = proper_pipeline(&g, &Permutation::identity(7)).unwrap();
    let b = proper_pipeline(&g, &Permutation::identity(7)).unwrap();
    assert_eq!(a, b);
    assert!(a.conditions.hold());
}

#[test]
fn complement_cycle_examples_are_catch_digraphs() {
    for rep in [six_vertex_example(), seven_vertex_example()] {
        let g = rep.realize();
        assert!(rep.verify(&g));
        assert!(g.is_oriented());
        assert!(cacd_core::recognition::recognize_cacd(&g).is_accepted());
    }
}

#[test]
fn six_vertex_example_edges() {
    let g = six_vertex_example().realize();
    assert_eq!(g.undirected_edge_count(), 9);
    assert_eq!(g.underlying_graph().canonical_form().unwrap(), Digraph::complement_cycle(6).unwrap().canonical_form().unwrap());
}
