use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::digraph::Digraph;
use crate::error::{Error, Result};

pub const TOURNAMENT_MAX_N: usize = 7;
pub const ORIENTED_MAX_N: usize = 6;
pub const LABELED_MAX_N: usize = 4;

/// Extends every class on `n - 1` vertices by a new vertex in every allowed
/// relation to the old ones, keeping one representative per canonical form.
fn augment(base: &[Digraph], relations: u32) -> Vec<Digraph> {
    let found: BTreeMap<Vec<u8>, Digraph> = base
        .par_iter()
        .flat_map_iter(|g| {
            let k = g.n();
            let total = (relations as usize).pow(k as u32);
            (0..total).map(move |mut code| {
                let mut h = Digraph::empty(k + 1).expect("nonempty");
                for (u, v) in g.edges() {
                    h.set_edge(u, v, true).expect("in range");
                }
                for u in 0..k {
                    // 0: no edge, 1: u -> new, 2: new -> u; tournaments skip 0
                    let rel = code % relations as usize + (3 - relations as usize);
                    match rel {
                        0 => {}
                        1 => h.set_edge(u, k, true).expect("in range"),
                        _ => h.set_edge(k, u, true).expect("in range"),
                    }
                    code /= relations as usize;
                }
                (h.canonical_form().expect("n <= 8"), h)
            })
        })
        .collect::<Vec<_>>()
        .into_iter()
        .collect();
    found.into_values().collect()
}

/// One tournament per isomorphism class, ordered by canonical form.
pub fn tournaments(n: usize) -> Result<Vec<Digraph>> {
    if n > TOURNAMENT_MAX_N {
        return Err(Error::TooLarge { what: "tournament enumeration", max: TOURNAMENT_MAX_N, got: n });
    }
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut level = vec![Digraph::empty(1)?];
    for _ in 1..n {
        level = augment(&level, 2);
    }
    Ok(level)
}

/// One oriented digraph per isomorphism class, ordered by canonical form.
pub fn oriented_graphs(n: usize) -> Result<Vec<Digraph>> {
    if n > ORIENTED_MAX_N {
        return Err(Error::TooLarge { what: "oriented enumeration", max: ORIENTED_MAX_N, got: n });
    }
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut level = vec![Digraph::empty(1)?];
    for _ in 1..n {
        level = augment(&level, 3);
    }
    Ok(level)
}

/// Every labeled digraph on `n` vertices, indexed by an adjacency bit mask.
pub fn labeled_digraphs(n: usize) -> Result<impl Iterator<Item = Digraph>> {
    if n > LABELED_MAX_N {
        return Err(Error::TooLarge { what: "labeled enumeration", max: LABELED_MAX_N, got: n });
    }
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let pairs: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v))).collect();
    let total = 1u64 << pairs.len();
    Ok((0..total).map(move |mask| labeled_digraph(n, &pairs, mask)))
}

fn labeled_digraph(n: usize, pairs: &[(usize, usize)], mask: u64) -> Digraph {
    let edges: Vec<_> = pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &e)| e).collect();
    Digraph::from_edges(n, &edges).expect("valid edges")
}

/// The labeled digraph with bit `k` of `mask` selecting the `k`-th ordered pair.
pub fn labeled_digraph_from_mask(n: usize, mask: u64) -> Result<Digraph> {
    let pairs: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v))).collect();
    if pairs.len() < 64 && mask >> pairs.len() != 0 {
        return Err(Error::Parse(format!("mask {mask} exceeds {} pairs", pairs.len())));
    }
    Ok(labeled_digraph(n, &pairs, mask))
}
