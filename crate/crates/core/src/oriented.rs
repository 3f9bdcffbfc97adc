//! Oriented circular-arc catch digraphs: sinks, Hamiltonian paths, the
//! quadruple condition on circular vertex orders, and complement-cycle search.

use crate::circular_ones::Permutation;
use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::proper::{proper_pipeline, recognize_proper_cacd};
use crate::recognition::{Certificate, Verdict, Witness};

/// Largest vertex count for the quadruple-condition search.
pub const ORIENTED_PROPER_MAX_N: usize = 9;
/// Largest vertex count for the Hamiltonian cycle dynamic program.
pub const HAMILTONIAN_MAX_N: usize = 20;

/// A vertex of out-degree zero.
pub fn outdegree_zero_witness(g: &Digraph) -> Result<usize> {
    (0..g.n()).find(|&v| g.out_degree(v) == 0).ok_or(Error::NoSink)
}

/// Directed cycle through every vertex of the induced subgraph on `verts`, if any.
pub fn hamiltonian_cycle(g: &Digraph, verts: &[usize]) -> Result<Option<Vec<usize>>> {
    let k = verts.len();
    if k > HAMILTONIAN_MAX_N {
        return Err(Error::TooLarge { what: "hamiltonian cycle search", max: HAMILTONIAN_MAX_N, got: k });
    }
    if k < 2 {
        return Ok(None);
    }
    let full = (1usize << k) - 1;
    // reach[mask][v]: a path from verts[0] through exactly `mask` ending at v
    let mut prev = vec![vec![usize::MAX; k]; 1 << k];
    prev[1][0] = 0;
    for mask in 1..=full {
        if mask & 1 == 0 {
            continue;
        }
        for v in 0..k {
            if prev[mask][v] == usize::MAX || mask >> v & 1 == 0 {
                continue;
            }
            for w in 0..k {
                if mask >> w & 1 == 0 && g.has_edge(verts[v], verts[w]) {
                    let next = mask | 1 << w;
                    if prev[next][w] == usize::MAX {
                        prev[next][w] = v;
                    }
                }
            }
        }
    }
    let Some(end) = (1..k).find(|&v| prev[full][v] != usize::MAX && g.has_edge(verts[v], verts[0])) else {
        return Ok(None);
    };
    let mut cycle = Vec::with_capacity(k);
    let (mut mask, mut v) = (full, end);
    while v != 0 || mask != 1 {
        cycle.push(verts[v]);
        let p = prev[mask][v];
        mask &= !(1 << v);
        v = p;
    }
    cycle.push(verts[0]);
    cycle.reverse();
    Ok(Some(cycle))
}

/// Consecutive vertices are edges and every vertex appears once.
pub fn is_hamiltonian_path(g: &Digraph, path: &[usize]) -> bool {
    let mut seen = vec![false; g.n()];
    path.len() == g.n()
        && path.iter().all(|&v| v < g.n() && !std::mem::replace(&mut seen[v], true))
        && path.windows(2).all(|w| g.has_edge(w[0], w[1]))
}

/// Directed Hamiltonian path of a unilateral oriented catch digraph.
///
/// If a Hamiltonian cycle exists it is cut; otherwise a sink is peeled off,
/// the rest is solved recursively so that it ends at an in-neighbour of the
/// sink, and the sink is appended.
pub fn hamiltonian_path(g: &Digraph) -> Result<Vec<usize>> {
    let all: Vec<usize> = (0..g.n()).collect();
    let path = path_ending_before(g, &all, None)?;
    if !is_hamiltonian_path(g, &path) {
        return Err(Error::HamiltonianPath(format!("assembled sequence {path:?} is not a path")));
    }
    Ok(path)
}

fn path_ending_before(g: &Digraph, verts: &[usize], target: Option<usize>) -> Result<Vec<usize>> {
    if verts.len() == 1 {
        let v = verts[0];
        return match target {
            Some(t) if !g.has_edge(v, t) => Err(Error::HamiltonianPath(format!("vertex {v} has no edge to {t}"))),
            _ => Ok(vec![v]),
        };
    }
    if let Some(cycle) = hamiltonian_cycle(g, verts)? {
        let k = cycle.len();
        let cut = match target {
            None => k - 1,
            Some(t) => cycle.iter().position(|&v| g.has_edge(v, t)).ok_or_else(|| {
                Error::HamiltonianPath(format!("no vertex of the spanning cycle has an edge to {t}"))
            })?,
        };
        return Ok((0..k).map(|i| cycle[(cut + 1 + i) % k]).collect());
    }
    let sink = verts
        .iter()
        .copied()
        .find(|&v| verts.iter().all(|&w| !g.has_edge(v, w)))
        .ok_or_else(|| Error::HamiltonianPath(format!("no spanning cycle and no sink among {verts:?}")))?;
    if let Some(t) = target {
        if !g.has_edge(sink, t) {
            return Err(Error::HamiltonianPath(format!("peeled sink {sink} has no edge to {t}")));
        }
    }
    let rest: Vec<usize> = verts.iter().copied().filter(|&v| v != sink).collect();
    let mut path = path_ending_before(g, &rest, Some(sink))?;
    path.push(sink);
    Ok(path)
}

fn quadruple_ok(g: &Digraph, u: usize, v: usize, w: usize, x: usize) -> bool {
    !g.has_edge(u, w) || (g.has_edge(u, v) && g.has_edge(v, w)) || (g.has_edge(u, x) && g.has_edge(x, w))
}

/// A quadruple `(u, v, w, x)`, in this cyclic order along `order`, with
/// `u -> w` but neither `u -> v -> w` nor `u -> x -> w`.
pub fn quadruple_violation(g: &Digraph, order: &Permutation) -> Option<[usize; 4]> {
    let n = order.len();
    let s = order.as_slice();
    for p in 0..n {
        for ov in 1..n {
            for ow in ov + 1..n {
                for ox in ow + 1..n {
                    let q = [s[p], s[(p + ov) % n], s[(p + ow) % n], s[(p + ox) % n]];
                    if !quadruple_ok(g, q[0], q[1], q[2], q[3]) {
                        return Some(q);
                    }
                }
            }
        }
    }
    None
}

pub fn check_quadruple_condition(g: &Digraph, order: &Permutation) -> bool {
    quadruple_violation(g, order).is_none()
}

/// First circular order (vertex 0 first, lexicographic) satisfying the quadruple condition.
pub fn find_quadruple_order(g: &Digraph) -> Result<Option<Permutation>> {
    let n = g.n();
    if n > ORIENTED_PROPER_MAX_N {
        return Err(Error::TooLarge { what: "oriented proper search", max: ORIENTED_PROPER_MAX_N, got: n });
    }
    let mut prefix = vec![0];
    let mut used = vec![false; n];
    used[0] = true;
    Ok(extend_order(g, &mut prefix, &mut used).then(|| Permutation::new(prefix).expect("permutation")))
}

fn extend_order(g: &Digraph, prefix: &mut Vec<usize>, used: &mut [bool]) -> bool {
    let n = g.n();
    if prefix.len() == n {
        return true;
    }
    for c in 0..n {
        if used[c] || !closes_valid_quadruples(g, prefix, c) {
            continue;
        }
        used[c] = true;
        prefix.push(c);
        if extend_order(g, prefix, used) {
            return true;
        }
        prefix.pop();
        used[c] = false;
    }
    false
}

fn closes_valid_quadruples(g: &Digraph, prefix: &[usize], d: usize) -> bool {
    let k = prefix.len();
    for i in 0..k {
        for j in i + 1..k {
            for l in j + 1..k {
                let (a, b, c) = (prefix[i], prefix[j], prefix[l]);
                if !(quadruple_ok(g, a, b, c, d)
                    && quadruple_ok(g, b, c, d, a)
                    && quadruple_ok(g, c, d, a, b)
                    && quadruple_ok(g, d, a, b, c))
                {
                    return false;
                }
            }
        }
    }
    true
}

/// Decides oriented proper catch digraphs through the quadruple condition.
///
/// An accepted verdict carries the circular order found and a proper
/// representation built with that order as column order; if the
/// construction does not succeed on that order the general proper search is
/// used, and a rejection there is reported as [`Error::Inconsistent`].
pub fn recognize_oriented_proper_cacd(g: &Digraph) -> Result<Verdict> {
    if !g.is_oriented() {
        return Err(Error::NotOriented);
    }
    let Some(order) = find_quadruple_order(g)? else {
        let count: usize = (1..g.n()).product();
        return Ok(Verdict::Rejected(Witness::Exhausted {
            candidates: count,
            detail: "every circular order violates the quadruple condition".into(),
        }));
    };
    if let Ok(trace) = proper_pipeline(g, &order) {
        if trace.representation.verify(g) && trace.representation.is_proper() {
            return Ok(Verdict::Accepted(Certificate::Representation {
                ordering: order,
                representation: trace.representation,
            }));
        }
    }
    match recognize_proper_cacd(g)? {
        Verdict::Accepted(Certificate::Representation { representation, .. }) => {
            Ok(Verdict::Accepted(Certificate::Representation { ordering: order, representation }))
        }
        _ => Err(Error::Inconsistent(format!(
            "order {:?} satisfies the quadruple condition but no proper representation was found",
            order.as_slice()
        ))),
    }
}

/// Vertices inducing a copy of the complement of the `k`-cycle in the underlying graph.
pub fn contains_complement_cycle(g: &Digraph, k: usize) -> Result<Option<Vec<usize>>> {
    let pattern = Digraph::complement_cycle(k)?;
    Ok(g.underlying_graph().find_induced(&pattern))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sink_examples() {
        assert_eq!(outdegree_zero_witness(&Digraph::transitive_tournament(4).unwrap()).unwrap(), 3);
        assert_eq!(outdegree_zero_witness(&Digraph::directed_path(3).unwrap()).unwrap(), 2);
        assert_eq!(outdegree_zero_witness(&Digraph::directed_cycle(3).unwrap()), Err(Error::NoSink));
    }

    #[test]
    fn path_examples() {
        let c3 = Digraph::directed_cycle(3).unwrap();
        let p = hamiltonian_path(&c3).unwrap();
        assert!(is_hamiltonian_path(&c3, &p));
        let p4 = Digraph::directed_path(4).unwrap();
        assert_eq!(hamiltonian_path(&p4).unwrap(), vec![0, 1, 2, 3]);
        let t5 = Digraph::transitive_tournament(5).unwrap();
        assert_eq!(hamiltonian_path(&t5).unwrap(), vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn path_fails_without_unilaterality() {
        let g = Digraph::from_edges(3, &[(0, 1)]).unwrap();
        assert!(matches!(hamiltonian_path(&g), Err(Error::HamiltonianPath(_))));
    }

    #[test]
    fn quadruple_examples() {
        let c3 = Digraph::directed_cycle(3).unwrap();
        for p in [vec![0, 1, 2], vec![0, 2, 1]] {
            assert!(check_quadruple_condition(&c3, &Permutation::new(p).unwrap()));
        }
        let g = Digraph::from_edges(4, &[(0, 2)]).unwrap();
        assert_eq!(quadruple_violation(&g, &Permutation::identity(4)), Some([0, 1, 2, 3]));
    }

    #[test]
    fn quadruple_rotation_invariant() {
        let g = Digraph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 0), (2, 3)]).unwrap();
        let base = Permutation::new(vec![0, 1, 2, 3, 4]).unwrap();
        let expected = check_quadruple_condition(&g, &base);
        for s in 0..5 {
            assert_eq!(check_quadruple_condition(&g, &base.rotated(s)), expected);
        }
    }

    #[test]
    fn oriented_proper_examples() {
        let c3 = Digraph::directed_cycle(3).unwrap();
        assert!(recognize_oriented_proper_cacd(&c3).unwrap().is_accepted());
        let two = Digraph::from_edges(2, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(recognize_oriented_proper_cacd(&two), Err(Error::NotOriented));
    }

    #[test]
    fn transitive_tournament_has_no_complement_cycle() {
        let t8 = Digraph::transitive_tournament(8).unwrap();
        assert_eq!(contains_complement_cycle(&t8, 8).unwrap(), None);
    }
}
