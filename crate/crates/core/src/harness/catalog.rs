//! Minimal non-catch tournaments, derived by exhaustive enumeration.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::digraph::Digraph;
use crate::error::Result;
use crate::harness::enumerate::tournaments;
use crate::recognition::recognize_cacd;

/// Membership of the vertices outside a directed triangle `(c0, c1, c2)`,
/// with `c0 -> c1 -> c2 -> c0`. Index `i` is taken mod 3.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetSystem {
    pub cycle: [usize; 3],
    /// `S'_i`: `c_i -> v`, `c_{i+2} -> v`, `v -> c_{i+1}`.
    pub s_prime: [Vec<usize>; 3],
    /// `S''_i`: `c_i -> v`, `v -> c_{i+1}`, `v -> c_{i+2}`.
    pub s_double: [Vec<usize>; 3],
    /// All three triangle vertices point to `v`.
    pub s4: Vec<usize>,
    /// Vertices pointing to all three triangle vertices.
    pub dominating: Vec<usize>,
}

impl SetSystem {
    /// Requires a tournament and a directed triangle in it.
    pub fn new(g: &Digraph, cycle: [usize; 3]) -> Self {
        let mut out = SetSystem {
            cycle,
            s_prime: Default::default(),
            s_double: Default::default(),
            s4: Vec::new(),
            dominating: Vec::new(),
        };
        for v in (0..g.n()).filter(|v| !cycle.contains(v)) {
            let ins: Vec<usize> = (0..3).filter(|&i| g.has_edge(cycle[i], v)).collect();
            match ins.len() {
                0 => out.dominating.push(v),
                3 => out.s4.push(v),
                1 => out.s_double[ins[0]].push(v),
                _ => {
                    let missing = (0..3).find(|i| !ins.contains(i)).expect("two of three");
                    out.s_prime[(missing + 2) % 3].push(v);
                }
            }
        }
        out
    }

    fn sizes(&self) -> ([usize; 3], [usize; 3], usize) {
        (
            [self.s_prime[0].len(), self.s_prime[1].len(), self.s_prime[2].len()],
            [self.s_double[0].len(), self.s_double[1].len(), self.s_double[2].len()],
            self.s4.len(),
        )
    }
}

/// Directed triangles `(a, b, c)` with `a -> b -> c -> a`, each listed once with `a` smallest.
pub fn directed_triangles(g: &Digraph) -> Vec<[usize; 3]> {
    let n = g.n();
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in a + 1..n {
                if b != c && g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(c, a) {
                    out.push([a, b, c]);
                }
            }
        }
    }
    out
}

/// Names of the structural descriptions a tournament satisfies.
///
/// `D3` is a directed triangle plus a vertex dominating it. The 7-vertex
/// names use the set system of some directed triangle, each with one vertex in
/// `S4` and one vertex in each of: `D4` the three `S'_i`; `D5` the three
/// `S''_i`; `D6` `S'_{i+2}`, `S''_{i+2}`, `S''_i`; `D7` `S'_{i+2}`, `S'_i`, `S''_i`.
pub fn structural_names(g: &Digraph) -> Vec<String> {
    let mut names = Vec::new();
    let triangles = directed_triangles(g);
    if g.n() == 4 && triangles.iter().any(|t| SetSystem::new(g, *t).dominating.len() == 1) {
        names.push("D3".to_string());
    }
    if g.n() == 7 {
        for t in &triangles {
            for rot in 0..3 {
                let cycle = [t[rot], t[(rot + 1) % 3], t[(rot + 2) % 3]];
                let (sp, sd, s4) = SetSystem::new(g, cycle).sizes();
                if s4 != 1 {
                    continue;
                }
                let only = |want_p: [usize; 3], want_d: [usize; 3]| sp == want_p && sd == want_d;
                let unit = |idx: &[usize]| {
                    let mut a = [0; 3];
                    for &i in idx {
                        a[i % 3] += 1;
                    }
                    a
                };
                let mut found = Vec::new();
                if only([1, 1, 1], [0, 0, 0]) {
                    found.push("D4");
                }
                if only([0, 0, 0], [1, 1, 1]) {
                    found.push("D5");
                }
                for i in 0..3 {
                    if only(unit(&[i + 2]), unit(&[i + 2, i])) {
                        found.push("D6");
                    }
                    if only(unit(&[i + 2, i]), unit(&[i])) {
                        found.push("D7");
                    }
                }
                for f in found {
                    if !names.iter().any(|x| x == f) {
                        names.push(f.to_string());
                    }
                }
            }
        }
    }
    names.sort();
    names
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogMember {
    pub graph: Digraph,
    pub canonical: Vec<u8>,
    /// Every structural description the member satisfies.
    pub matches: Vec<String>,
}

impl CatalogMember {
    /// The unique structural name, or a positional label when there is none or several.
    pub fn label(&self, index: usize) -> String {
        match self.matches.as_slice() {
            [one] => one.clone(),
            _ => format!("M{}-{}", self.graph.n(), index),
        }
    }
}

/// Minimal non-catch tournaments up to isomorphism, with scan statistics.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ForbiddenCatalog {
    pub members: Vec<CatalogMember>,
    /// Number of tournament classes scanned per vertex count.
    pub classes_scanned: BTreeMap<usize, usize>,
}

impl ForbiddenCatalog {
    pub fn members_on(&self, n: usize) -> usize {
        self.members.iter().filter(|m| m.graph.n() == n).count()
    }

    /// First member, smallest first, occurring as an induced subdigraph of `g`.
    pub fn find_in(&self, g: &Digraph) -> Option<(String, Vec<usize>)> {
        self.members
            .iter()
            .enumerate()
            .find_map(|(idx, m)| g.find_induced(&m.graph).map(|map| (m.label(idx), map)))
    }

    /// Line-per-size summary.
    pub fn summary(&self) -> String {
        let mut lines = Vec::new();
        for (&n, &classes) in &self.classes_scanned {
            let names: Vec<String> = self
                .members
                .iter()
                .enumerate()
                .filter(|(_, m)| m.graph.n() == n)
                .map(|(i, m)| m.label(i))
                .collect();
            lines.push(format!("n={n}: {classes} tournament classes, {} minimal forbidden {names:?}", names.len()));
        }
        lines.join("\n")
    }
}

/// Scans every tournament class up to `max_n` vertices and keeps those that are
/// rejected while all their one-vertex-deleted subtournaments are accepted.
pub fn derive_forbidden_catalog(max_n: usize) -> Result<ForbiddenCatalog> {
    let mut catalog = ForbiddenCatalog::default();
    for n in 1..=max_n {
        let classes = tournaments(n)?;
        catalog.classes_scanned.insert(n, classes.len());
        let mut members: Vec<CatalogMember> = classes
            .par_iter()
            .filter(|g| is_minimal_forbidden(g))
            .map(|g| CatalogMember {
                graph: g.clone(),
                canonical: g.canonical_form().expect("n <= 7"),
                matches: structural_names(g),
            })
            .collect();
        members.sort_by(|a, b| a.canonical.cmp(&b.canonical));
        catalog.members.extend(members);
    }
    Ok(catalog)
}

fn is_minimal_forbidden(g: &Digraph) -> bool {
    if recognize_cacd(g).is_accepted() {
        return false;
    }
    (0..g.n()).all(|drop| {
        let keep: Vec<usize> = (0..g.n()).filter(|&v| v != drop).collect();
        g.n() == 1 || recognize_cacd(&g.induced(&keep).expect("distinct vertices")).is_accepted()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_system_partitions_triangle_neighbours() {
        let g = Digraph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (1, 3), (2, 3), (0, 4), (4, 1), (4, 2)]).unwrap();
        let s = SetSystem::new(&g, [0, 1, 2]);
        assert_eq!(s.s4, vec![3]);
        assert_eq!(s.s_double[0], vec![4]);
        let d3 = Digraph::from_edges(4, &[(0, 1), (1, 2), (2, 0), (3, 0), (3, 1), (3, 2)]).unwrap();
        assert_eq!(SetSystem::new(&d3, [0, 1, 2]).dominating, vec![3]);
        assert_eq!(structural_names(&d3), vec!["D3".to_string()]);
    }

    #[test]
    fn s_prime_index() {
        // v has in-neighbours c0 and c2 and points to c1: S'_0
        let g = Digraph::from_edges(4, &[(0, 1), (1, 2), (2, 0), (0, 3), (2, 3), (3, 1)]).unwrap();
        assert_eq!(SetSystem::new(&g, [0, 1, 2]).s_prime[0], vec![3]);
    }

    #[test]
    fn small_catalog() {
        let c = derive_forbidden_catalog(5).unwrap();
        assert_eq!(c.members_on(4), 1);
        assert_eq!(c.members_on(5), 0);
        assert_eq!(c.members[0].matches, vec!["D3".to_string()]);
    }
}
