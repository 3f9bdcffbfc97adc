use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::matrix::BinaryMatrix;

/// Largest vertex count accepted by [`Digraph::canonical_form`].
pub const CANONICAL_MAX_N: usize = 8;

/// Dense directed graph on vertices `0..n` without self-loops.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    n: usize,
    adj: Vec<bool>,
}

impl Digraph {
    /// Edgeless digraph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        Ok(Self { n, adj: vec![false; n * n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if g.has_edge(u, v) {
                return Err(Error::DuplicateEdge(u, v));
            }
            g.adj[u * n + v] = true;
        }
        Ok(g)
    }

    /// Reads the off-diagonal entries of a square matrix as adjacency.
    pub fn from_matrix(m: &BinaryMatrix) -> Result<Self> {
        if m.rows() != m.cols() {
            return Err(Error::Construction(format!(
                "adjacency matrix must be square, got {}x{}",
                m.rows(),
                m.cols()
            )));
        }
        let n = m.rows();
        let mut g = Self::empty(n)?;
        for u in 0..n {
            for v in 0..n {
                if u != v && m.get(u, v) {
                    g.adj[u * n + v] = true;
                }
            }
        }
        Ok(g)
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.n + v]
    }

    /// Adds or removes `u -> v`. Self-loops are rejected.
    pub fn set_edge(&mut self, u: usize, v: usize, present: bool) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.adj[u * self.n + v] = present;
        Ok(())
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in 0..self.n {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().filter(|&&b| b).count()
    }

    pub fn out_neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&v| self.has_edge(u, v))
    }

    pub fn in_neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&u| self.has_edge(u, v))
    }

    pub fn out_degree(&self, u: usize) -> usize {
        self.out_neighbors(u).count()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.in_neighbors(v).count()
    }

    /// Adjacency matrix with ones on the diagonal.
    pub fn augmented_adjacency(&self) -> BinaryMatrix {
        let mut bits = self.adj.clone();
        for v in 0..self.n {
            bits[v * self.n + v] = true;
        }
        BinaryMatrix::new(self.n, self.n, bits).expect("n >= 1")
    }

    /// Symmetric digraph with `u -> v` whenever `u -> v` or `v -> u` is an edge.
    pub fn underlying_graph(&self) -> Self {
        let mut g = self.clone();
        for u in 0..self.n {
            for v in 0..self.n {
                if self.has_edge(v, u) {
                    g.adj[u * self.n + v] = true;
                }
            }
        }
        g
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|u| (0..self.n).all(|v| self.has_edge(u, v) == self.has_edge(v, u)))
    }

    pub fn is_oriented(&self) -> bool {
        (0..self.n).all(|u| (u + 1..self.n).all(|v| !(self.has_edge(u, v) && self.has_edge(v, u))))
    }

    pub fn is_tournament(&self) -> bool {
        (0..self.n).all(|u| (u + 1..self.n).all(|v| self.has_edge(u, v) != self.has_edge(v, u)))
    }

    /// Vertices reachable from `s` along directed edges, including `s`.
    pub fn reachable_from(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.n];
        let mut stack = vec![s];
        seen[s] = true;
        while let Some(u) = stack.pop() {
            for v in self.out_neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        seen
    }

    /// Every pair is joined by a directed path in at least one direction.
    pub fn is_unilateral(&self) -> bool {
        let reach: Vec<Vec<bool>> = (0..self.n).map(|s| self.reachable_from(s)).collect();
        (0..self.n).all(|u| (u + 1..self.n).all(|v| reach[u][v] || reach[v][u]))
    }

    /// Connectivity of the underlying undirected graph.
    pub fn is_connected(&self) -> bool {
        self.underlying_graph().reachable_from(0).iter().all(|&b| b)
    }

    /// Vertex sets of the connected components of the underlying graph.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let u = self.underlying_graph();
        let mut assigned = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if assigned[s] {
                continue;
            }
            let reach = u.reachable_from(s);
            let comp: Vec<usize> = (0..self.n).filter(|&v| reach[v]).collect();
            for &v in &comp {
                assigned[v] = true;
            }
            out.push(comp);
        }
        out
    }

    /// Induced subdigraph; vertex `k` of the result is `vertices[k]`.
    pub fn induced(&self, vertices: &[usize]) -> Result<Self> {
        let distinct: BTreeSet<_> = vertices.iter().collect();
        if distinct.len() != vertices.len() {
            return Err(Error::Construction("induced subgraph vertices repeat".into()));
        }
        for &v in vertices {
            self.check_vertex(v)?;
        }
        let k = vertices.len();
        let mut g = Self::empty(k)?;
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate() {
                if self.has_edge(u, v) {
                    g.adj[i * k + j] = true;
                }
            }
        }
        Ok(g)
    }

    /// Relabels so that old vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::NotAPermutation(self.n));
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n || seen[p] {
                return Err(Error::NotAPermutation(self.n));
            }
            seen[p] = true;
        }
        let mut g = Self::empty(self.n)?;
        for (u, v) in self.edges() {
            g.adj[perm[u] * self.n + perm[v]] = true;
        }
        Ok(g)
    }

    /// Induced copy of `pattern` inside `self`, as the map `pattern vertex -> host vertex`.
    pub fn find_induced(&self, pattern: &Digraph) -> Option<Vec<usize>> {
        if pattern.n > self.n {
            return None;
        }
        let mut order: Vec<usize> = (0..pattern.n).collect();
        order.sort_by_key(|&v| std::cmp::Reverse(pattern.out_degree(v) + pattern.in_degree(v)));
        let host_deg: Vec<(usize, usize)> =
            (0..self.n).map(|v| (self.out_degree(v), self.in_degree(v))).collect();
        let pat_deg: Vec<(usize, usize)> =
            (0..pattern.n).map(|v| (pattern.out_degree(v), pattern.in_degree(v))).collect();
        let mut map = vec![usize::MAX; pattern.n];
        let mut used = vec![false; self.n];
        if self.extend_embedding(pattern, &order, 0, &host_deg, &pat_deg, &mut map, &mut used) {
            Some(map)
        } else {
            None
        }
    }

    #[allow(clippy::too_many_arguments)]
    fn extend_embedding(
        &self,
        pattern: &Digraph,
        order: &[usize],
        depth: usize,
        host_deg: &[(usize, usize)],
        pat_deg: &[(usize, usize)],
        map: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        let p = order[depth];
        for h in 0..self.n {
            if used[h] || host_deg[h].0 < pat_deg[p].0 || host_deg[h].1 < pat_deg[p].1 {
                continue;
            }
            let consistent = order[..depth].iter().all(|&q| {
                let hq = map[q];
                self.has_edge(h, hq) == pattern.has_edge(p, q)
                    && self.has_edge(hq, h) == pattern.has_edge(q, p)
            });
            if !consistent {
                continue;
            }
            map[p] = h;
            used[h] = true;
            if self.extend_embedding(pattern, order, depth + 1, host_deg, pat_deg, map, used) {
                return true;
            }
            used[h] = false;
            map[p] = usize::MAX;
        }
        false
    }

    /// Isomorphism-invariant byte string: `[n]` followed by the minimum adjacency code.
    ///
    /// The code lists, for `j = 1..n` and `i < j`, the bits `i -> j` then `j -> i`
    /// of the relabeled graph; the minimum is taken over relabelings that sort
    /// vertices by `(out-degree, in-degree)`.
    pub fn canonical_form(&self) -> Result<Vec<u8>> {
        if self.n > CANONICAL_MAX_N {
            return Err(Error::TooLarge { what: "canonical form", max: CANONICAL_MAX_N, got: self.n });
        }
        let n = self.n;
        let total_bits = n * (n - 1);
        let mut verts: Vec<usize> = (0..n).collect();
        let key = |v: usize| (self.out_degree(v), self.in_degree(v));
        verts.sort_by_key(|&v| key(v));
        let class_of_slot: Vec<(usize, usize)> = verts.iter().map(|&v| key(v)).collect();
        let mut search = CanonSearch {
            g: self,
            total_bits,
            class_of_slot,
            key: (0..n).map(key).collect(),
            slots: Vec::with_capacity(n),
            used: vec![false; n],
            best: u64::MAX,
            found: false,
        };
        search.descend(0, 0);
        let mut out = vec![n as u8];
        let bytes = total_bits.div_ceil(8);
        let value = if total_bits == 0 { 0 } else { search.best };
        out.extend_from_slice(&value.to_be_bytes()[8 - bytes..]);
        Ok(out)
    }

    /// Directed cycle `0 -> 1 -> ... -> n-1 -> 0`.
    pub fn directed_cycle(n: usize) -> Result<Self> {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        if n < 2 {
            return Err(Error::TooSmall { what: "directed cycle", min: 2, got: n });
        }
        if n == 2 {
            return Self::from_edges(2, &[(0, 1), (1, 0)]);
        }
        Self::from_edges(n, &edges)
    }

    /// Directed path `0 -> 1 -> ... -> n-1`.
    pub fn directed_path(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_edges(n, &edges)
    }

    /// Transitive tournament with `i -> j` for all `i < j`.
    pub fn transitive_tournament(n: usize) -> Result<Self> {
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                edges.push((i, j));
            }
        }
        Self::from_edges(n, &edges)
    }

    /// Every ordered pair of distinct vertices is an edge.
    pub fn complete_symmetric(n: usize) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for u in 0..n {
            for v in 0..n {
                if u != v {
                    g.adj[u * n + v] = true;
                }
            }
        }
        Ok(g)
    }

    /// Symmetric complement of the `n`-cycle: `i`, `j` adjacent unless consecutive mod `n`.
    pub fn complement_cycle(n: usize) -> Result<Self> {
        if n < 4 {
            return Err(Error::TooSmall { what: "complement cycle", min: 4, got: n });
        }
        let mut g = Self::empty(n)?;
        for u in 0..n {
            for v in 0..n {
                let d = (v + n - u) % n;
                if u != v && d != 1 && d != n - 1 {
                    g.adj[u * n + v] = true;
                }
            }
        }
        Ok(g)
    }

    /// Orientation of a symmetric graph: edge `k` (in `u < v` order) points `u -> v`
    /// when bit `k` of `mask` is clear and `v -> u` when set.
    pub fn orientation(&self, mask: u64) -> Result<Self> {
        if !self.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        let mut g = Self::empty(self.n)?;
        let mut k = 0;
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.has_edge(u, v) {
                    if mask >> k & 1 == 0 {
                        g.adj[u * self.n + v] = true;
                    } else {
                        g.adj[v * self.n + u] = true;
                    }
                    k += 1;
                }
            }
        }
        Ok(g)
    }

    /// Number of unordered adjacent pairs of a symmetric graph.
    pub fn undirected_edge_count(&self) -> usize {
        (0..self.n)
            .map(|u| (u + 1..self.n).filter(|&v| self.has_edge(u, v) || self.has_edge(v, u)).count())
            .sum()
    }
}

struct CanonSearch<'a> {
    g: &'a Digraph,
    total_bits: usize,
    class_of_slot: Vec<(usize, usize)>,
    key: Vec<(usize, usize)>,
    slots: Vec<usize>,
    used: Vec<bool>,
    best: u64,
    found: bool,
}

impl CanonSearch<'_> {
    fn descend(&mut self, depth: usize, prefix: u64) {
        let n = self.g.n;
        if depth == n {
            if !self.found || prefix < self.best {
                self.best = prefix;
                self.found = true;
            }
            return;
        }
        for v in 0..n {
            if self.used[v] || self.key[v] != self.class_of_slot[depth] {
                continue;
            }
            let mut code = prefix;
            for &u in &self.slots {
                code = code << 2 | (self.g.has_edge(u, v) as u64) << 1 | self.g.has_edge(v, u) as u64;
            }
            let bits_so_far = depth * (depth + 1);
            if self.found {
                let best_prefix = self.best >> (self.total_bits - bits_so_far);
                if code > best_prefix {
                    continue;
                }
            }
            self.used[v] = true;
            self.slots.push(v);
            self.descend(depth + 1, code);
            self.slots.pop();
            self.used[v] = false;
        }
    }
}

impl std::fmt::Debug for Digraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Digraph(n={}, edges={:?})", self.n, self.edges())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rows(m: &BinaryMatrix) -> Vec<String> {
        (0..m.rows()).map(|r| m.row_string(r)).collect()
    }

    #[test]
    fn augmented_adjacency_examples() {
        let g = Digraph::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(rows(&g.augmented_adjacency()), ["11", "01"]);
        let g = Digraph::empty(1).unwrap();
        assert_eq!(rows(&g.augmented_adjacency()), ["1"]);
        let g = Digraph::directed_cycle(3).unwrap();
        assert_eq!(rows(&g.augmented_adjacency()), ["110", "011", "101"]);
    }

    #[test]
    fn underlying_graph_examples() {
        let g = Digraph::from_edges(2, &[(0, 1)]).unwrap().underlying_graph();
        assert!(g.has_edge(0, 1) && g.has_edge(1, 0));
        let t = Digraph::directed_cycle(3).unwrap().underlying_graph();
        assert_eq!(t, Digraph::complete_symmetric(3).unwrap());
        let e = Digraph::empty(3).unwrap();
        assert_eq!(e.underlying_graph(), e);
    }

    #[test]
    fn predicate_examples() {
        let c = Digraph::directed_cycle(3).unwrap();
        assert!(c.is_oriented() && c.is_tournament() && c.is_unilateral());
        let two = Digraph::from_edges(2, &[(0, 1), (1, 0)]).unwrap();
        assert!(!two.is_oriented());
        let g = Digraph::from_edges(3, &[(0, 1)]).unwrap();
        assert!(!g.is_unilateral());
        assert!(!g.is_connected());
    }

    #[test]
    fn rejects_invalid_edges() {
        assert_eq!(Digraph::from_edges(2, &[(0, 0)]), Err(Error::SelfLoop(0)));
        assert_eq!(Digraph::from_edges(2, &[(0, 1), (0, 1)]), Err(Error::DuplicateEdge(0, 1)));
        assert!(matches!(Digraph::from_edges(2, &[(0, 2)]), Err(Error::VertexOutOfRange { .. })));
        assert_eq!(Digraph::empty(0), Err(Error::EmptyGraph));
    }

    #[test]
    fn find_induced_examples() {
        let t4 = Digraph::transitive_tournament(4).unwrap();
        let c3 = Digraph::directed_cycle(3).unwrap();
        assert!(t4.find_induced(&c3).is_none());
        let c4 = Digraph::directed_cycle(4).unwrap();
        let p = Digraph::directed_path(2).unwrap();
        let map = c4.find_induced(&p).unwrap();
        assert!(c4.has_edge(map[0], map[1]));
    }

    #[test]
    fn canonical_form_examples() {
        let c3 = Digraph::directed_cycle(3).unwrap();
        let relabeled = c3.relabel(&[2, 0, 1]).unwrap();
        assert_eq!(c3.canonical_form().unwrap(), relabeled.canonical_form().unwrap());
        let t3 = Digraph::transitive_tournament(3).unwrap();
        assert_ne!(c3.canonical_form().unwrap(), t3.canonical_form().unwrap());
        let big = Digraph::empty(9).unwrap();
        assert!(matches!(big.canonical_form(), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn complement_cycle_examples() {
        let c4 = Digraph::complement_cycle(4).unwrap();
        assert_eq!(c4.undirected_edge_count(), 2);
        assert!(c4.has_edge(0, 2) && c4.has_edge(1, 3));
        let c5 = Digraph::complement_cycle(5).unwrap();
        assert!((0..5).all(|v| c5.out_degree(v) == 2));
        let c8 = Digraph::complement_cycle(8).unwrap();
        assert_eq!(c8.undirected_edge_count(), 20);
        assert!((0..8).all(|v| c8.out_degree(v) == 5));
        assert!(Digraph::complement_cycle(3).is_err());
    }

    #[test]
    fn orientation_covers_each_edge_once() {
        let c6 = Digraph::complement_cycle(6).unwrap();
        let o = c6.orientation(0b101).unwrap();
        assert!(o.is_oriented());
        assert_eq!(o.underlying_graph(), c6);
    }
}
