use crate::circular_ones::{
    classify_bits, find_row_cop_ordering, find_row_cop_ordering_pq, has_row_cop, Permutation, RowStretch,
    EXHAUSTIVE_MAX_COLS,
};
use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::harness::catalog::ForbiddenCatalog;
use crate::representation::{CatchRepresentation, Rational};

/// Evidence attached to an accepted verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    /// A vertex ordering together with the representation built from it.
    Representation { ordering: Permutation, representation: CatchRepresentation },
    /// A directed Hamiltonian path.
    Path(Vec<usize>),
}

/// Evidence attached to a rejected verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// Every candidate was examined and none succeeded.
    Exhausted { candidates: usize, detail: String },
    /// An induced copy of a forbidden digraph; `vertices[k]` hosts pattern vertex `k`.
    Forbidden { name: String, vertices: Vec<usize> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Accepted(Certificate),
    Rejected(Witness),
}

impl Verdict {
    pub fn is_accepted(&self) -> bool {
        matches!(self, Verdict::Accepted(_))
    }

    pub fn representation(&self) -> Option<&CatchRepresentation> {
        match self {
            Verdict::Accepted(Certificate::Representation { representation, .. }) => Some(representation),
            _ => None,
        }
    }

    pub fn ordering(&self) -> Option<&Permutation> {
        match self {
            Verdict::Accepted(Certificate::Representation { ordering, .. }) => Some(ordering),
            _ => None,
        }
    }
}

/// Builds a representation on a circle of circumference `n + 1` from a row-COP vertex ordering.
///
/// The vertex at position `i` (1-based) gets point `i`; its arc runs over the
/// positions covered by its row of the reordered augmented adjacency matrix.
pub fn representation_from_ordering(g: &Digraph, order: &Permutation) -> Result<CatchRepresentation> {
    let n = g.n();
    if order.len() != n {
        return Err(Error::NotAPermutation(n));
    }
    let l = Rational::from_integer(n as i64 + 1);
    let int = |x: usize| Rational::from_integer(x as i64);
    let inv = order.inverse();
    let mut triples = vec![(Rational::default(), Rational::default(), Rational::default()); n];
    for v in 0..n {
        let bits: Vec<bool> = order.as_slice().iter().map(|&w| v == w || g.has_edge(v, w)).collect();
        let (a, b) = match classify_bits(&bits) {
            RowStretch::Type1 { i1, i2 } => (i1, i2),
            RowStretch::Type2 { i3, i4 } => (i3, i4),
            RowStretch::Full => (1, n),
            RowStretch::Zero | RowStretch::NotCircular => return Err(Error::NotCircularRow { row: v }),
        };
        triples[v] = (int(a), int(b), int(inv.as_slice()[v] + 1));
    }
    CatchRepresentation::from_triples(l, &triples)
}

/// Decides membership by searching for a row-COP ordering of the augmented adjacency matrix.
///
/// Up to ten vertices the exhaustive backend supplies the first ordering in
/// enumeration order; larger inputs go through the PQ-tree backend.
pub fn recognize_cacd(g: &Digraph) -> Verdict {
    let a = g.augmented_adjacency();
    let (found, backend) = if g.n() <= EXHAUSTIVE_MAX_COLS {
        (find_row_cop_ordering(&a).expect("within bound"), "exhaustive")
    } else {
        (find_row_cop_ordering_pq(&a), "pq-tree")
    };
    match found {
        Some(ordering) => {
            let representation = representation_from_ordering(g, &ordering).expect("ordering has row-COP");
            debug_assert!(representation.verify(g));
            Verdict::Accepted(Certificate::Representation { ordering, representation })
        }
        None => Verdict::Rejected(Witness::Exhausted {
            candidates: 0,
            detail: format!("no column ordering gives circular ones ({backend} search)"),
        }),
    }
}

/// Fast decision through the PQ-tree backend only.
pub fn is_cacd(g: &Digraph) -> bool {
    find_row_cop_ordering_pq(&g.augmented_adjacency()).is_some()
}

/// Direct check of every vertex ordering; independent of the pruned search.
pub fn is_cacd_brute_force(g: &Digraph) -> bool {
    fn perms(k: usize, prefix: &mut Vec<usize>, used: &mut [bool], f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if prefix.len() == k {
            return f(prefix);
        }
        for c in 0..k {
            if !used[c] {
                used[c] = true;
                prefix.push(c);
                let hit = perms(k, prefix, used, f);
                prefix.pop();
                used[c] = false;
                if hit {
                    return true;
                }
            }
        }
        false
    }
    let a = g.augmented_adjacency();
    let n = g.n();
    perms(n, &mut Vec::new(), &mut vec![false; n], &mut |p| {
        has_row_cop(&a, &Permutation::new(p.to_vec()).expect("permutation"))
    })
}

/// Decides a connected tournament by forbidden induced subdigraphs.
///
/// The verdict must coincide with [`recognize_cacd`]; a disagreement is
/// reported as [`Error::Inconsistent`].
pub fn recognize_tournament_cacd(g: &Digraph, catalog: &ForbiddenCatalog) -> Result<Verdict> {
    if !g.is_tournament() {
        return Err(Error::NotTournament);
    }
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    if let Some((name, vertices)) = catalog.find_in(g) {
        if is_cacd(g) {
            return Err(Error::Inconsistent(format!("contains {name} but has circular ones")));
        }
        return Ok(Verdict::Rejected(Witness::Forbidden { name, vertices }));
    }
    match recognize_cacd(g) {
        v @ Verdict::Accepted(_) => Ok(v),
        Verdict::Rejected(_) => Err(Error::Inconsistent("no forbidden subdigraph yet no circular ordering".into())),
    }
}
