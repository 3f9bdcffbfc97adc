//! Named exhaustive checks with deterministic reports.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;

use crate::circular_ones::RowCopOrderings;
use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::harness::catalog::derive_forbidden_catalog;
use crate::harness::enumerate::{labeled_digraph_from_mask, oriented_graphs, tournaments, LABELED_MAX_N};
use crate::harness::oracles::{grid_representation_oracle, round_enumeration_oracle};
use crate::oriented::{hamiltonian_cycle, hamiltonian_path, is_hamiltonian_path, outdegree_zero_witness, recognize_oriented_proper_cacd};
use crate::proper::{check_conditions, recognize_proper_cacd};
use crate::recognition::{is_cacd, is_cacd_brute_force, recognize_cacd, recognize_tournament_cacd};

/// Stored counterexamples are capped at this many per report.
pub const MAX_STORED: usize = 50;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Check {
    /// Oriented catch digraphs without a Hamiltonian cycle have a sink.
    OutdegreeZero,
    /// Unilateral oriented catch digraphs have a Hamiltonian path.
    HamiltonianPath,
    /// Proper acceptance implies general acceptance, with valid certificates.
    ProperSubsetCacd,
    /// The proper recognizer agrees with the grid oracle.
    ProperGridOracle,
    /// The pruned and PQ-tree searches agree with trying every ordering.
    CacdBruteForce,
    /// The quadruple condition agrees with proper recognition on oriented inputs.
    OrientedProper,
    /// Oriented proper catch digraphs have round underlying graphs.
    RoundUnderlying,
    /// Forbidden-subdigraph recognition agrees with the general recognizer on tournaments.
    TournamentForbidden,
    /// Orientations of the complement of the `n`-cycle; none may be accepted for `n >= 8`.
    ComplementCycle,
}

impl Check {
    pub const ALL: [Check; 9] = [
        Check::OutdegreeZero,
        Check::HamiltonianPath,
        Check::ProperSubsetCacd,
        Check::ProperGridOracle,
        Check::CacdBruteForce,
        Check::OrientedProper,
        Check::RoundUnderlying,
        Check::TournamentForbidden,
        Check::ComplementCycle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::OutdegreeZero => "outdegree-zero",
            Check::HamiltonianPath => "hamiltonian-path",
            Check::ProperSubsetCacd => "proper-subset-cacd",
            Check::ProperGridOracle => "proper-grid-oracle",
            Check::CacdBruteForce => "cacd-brute-force",
            Check::OrientedProper => "oriented-proper",
            Check::RoundUnderlying => "round-underlying",
            Check::TournamentForbidden => "tournament-forbidden",
            Check::ComplementCycle => "complement-cycle",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Check::ALL.into_iter().find(|c| c.name() == s).ok_or_else(|| Error::UnknownCheck(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub graph: Digraph,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepReport {
    pub check: String,
    pub n: usize,
    pub instances: u64,
    /// Total number of failing instances; at most [`MAX_STORED`] are kept below.
    pub failures: u64,
    pub counterexamples: Vec<Counterexample>,
    pub stats: BTreeMap<String, u64>,
    pub elapsed_ms: u128,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

/// Outcome of one instance: an optional failure message and the statistics keys it counts toward.
type Outcome = (Option<String>, Vec<&'static str>);

fn run_over(check: Check, n: usize, instances: Vec<Digraph>, f: impl Fn(&Digraph) -> Outcome + Sync) -> SweepReport {
    let start = Instant::now();
    let outcomes: Vec<(usize, Outcome)> = instances.par_iter().enumerate().map(|(i, g)| (i, f(g))).collect();
    let mut stats = BTreeMap::new();
    let mut failing = Vec::new();
    for (i, (fail, keys)) in outcomes {
        for k in keys {
            *stats.entry(k.to_string()).or_insert(0) += 1;
        }
        if let Some(detail) = fail {
            failing.push((instances[i].canonical_form().unwrap_or_default(), Counterexample { graph: instances[i].clone(), detail }));
        }
    }
    failing.sort_by(|a, b| a.0.cmp(&b.0));
    let failures = failing.len() as u64;
    SweepReport {
        check: check.name().to_string(),
        n,
        instances: instances.len() as u64,
        failures,
        counterexamples: failing.into_iter().take(MAX_STORED).map(|(_, c)| c).collect(),
        stats,
        elapsed_ms: start.elapsed().as_millis(),
    }
}

fn labeled(n: usize) -> Result<Vec<Digraph>> {
    if n > LABELED_MAX_N {
        return Err(Error::TooLarge { what: "labeled sweep", max: LABELED_MAX_N, got: n });
    }
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let pairs = n * (n - 1);
    (0..1u64 << pairs).map(|m| labeled_digraph_from_mask(n, m)).collect()
}

fn err_text(e: &Error) -> Option<String> {
    Some(format!("error: {e}"))
}

/// Applies `check` to every instance of its domain on `n` vertices.
///
/// Labeled checks cover all digraphs with `n <= 4`; oriented checks cover
/// oriented digraphs with `n <= 6` up to isomorphism; the tournament check
/// covers tournaments with `n <= 7`; the complement-cycle check enumerates
/// every orientation of the complement of the `n`-cycle.
pub fn sweep_digraphs(check: Check, n: usize) -> Result<SweepReport> {
    match check {
        Check::OutdegreeZero => Ok(run_over(check, n, oriented_graphs(n)?, |g| {
            if !is_cacd(g) {
                return (None, vec![]);
            }
            let all: Vec<usize> = (0..g.n()).collect();
            match hamiltonian_cycle(g, &all) {
                Ok(Some(_)) => (None, vec!["cacd", "hamiltonian-cycle"]),
                Ok(None) => match outdegree_zero_witness(g) {
                    Ok(_) => (None, vec!["cacd", "sink-found"]),
                    Err(e) => (err_text(&e), vec!["cacd"]),
                },
                Err(e) => (err_text(&e), vec!["cacd"]),
            }
        })),
        Check::HamiltonianPath => Ok(run_over(check, n, oriented_graphs(n)?, |g| {
            if !g.is_unilateral() || !is_cacd(g) {
                return (None, vec![]);
            }
            match hamiltonian_path(g) {
                Ok(p) if is_hamiltonian_path(g, &p) => (None, vec!["unilateral-cacd"]),
                Ok(p) => (Some(format!("invalid path {p:?}")), vec!["unilateral-cacd"]),
                Err(e) => (err_text(&e), vec!["unilateral-cacd"]),
            }
        })),
        Check::ProperSubsetCacd => Ok(run_over(check, n, labeled(n)?, |g| match recognize_proper_cacd(g) {
            Err(e) => (err_text(&e), vec![]),
            Ok(v) if !v.is_accepted() => (None, vec![]),
            Ok(v) => {
                let rep = v.representation().expect("accepted with representation");
                if !rep.verify(g) || !rep.is_proper() {
                    (Some("proper certificate fails verification".into()), vec!["proper"])
                } else if !recognize_cacd(g).is_accepted() {
                    (Some("proper but rejected as a catch digraph".into()), vec!["proper"])
                } else {
                    (None, vec!["proper"])
                }
            }
        })),
        Check::ProperGridOracle => {
            if n > crate::harness::oracles::GRID_MAX_N {
                return Err(Error::TooLarge { what: "grid oracle sweep", max: crate::harness::oracles::GRID_MAX_N, got: n });
            }
            Ok(run_over(check, n, labeled(n)?, |g| {
                let oracle = match grid_representation_oracle(g) {
                    Ok(b) => b,
                    Err(e) => return (err_text(&e), vec![]),
                };
                let mut keys = if oracle { vec!["proper"] } else { vec![] };
                keys.extend(condition_dependence(g));
                match recognize_proper_cacd(g) {
                    Err(e) => (err_text(&e), keys),
                    Ok(v) if v.is_accepted() == oracle => (None, keys),
                    Ok(v) => (Some(format!("recognizer {} but oracle {}", v.is_accepted(), oracle)), keys),
                }
            }))
        }
        Check::CacdBruteForce => Ok(run_over(check, n, labeled(n)?, |g| {
            let brute = is_cacd_brute_force(g);
            let verdict = recognize_cacd(g);
            let pq = is_cacd(g);
            if verdict.is_accepted() != brute || pq != brute {
                return (Some(format!("brute force {brute}, search {}, pq-tree {pq}", verdict.is_accepted())), vec![]);
            }
            if let Some(rep) = verdict.representation() {
                if !rep.verify(g) {
                    return (Some("certificate fails verification".into()), vec!["cacd"]);
                }
            }
            (None, if brute { vec!["cacd"] } else { vec![] })
        })),
        Check::OrientedProper => Ok(run_over(check, n, oriented_graphs(n)?, |g| {
            let general = match recognize_proper_cacd(g) {
                Ok(v) => v.is_accepted(),
                Err(e) => return (err_text(&e), vec![]),
            };
            match recognize_oriented_proper_cacd(g) {
                Err(e) => (err_text(&e), vec![]),
                Ok(v) if v.is_accepted() != general => {
                    (Some(format!("quadruple condition {} but proper recognizer {general}", v.is_accepted())), vec![])
                }
                Ok(v) => match v.representation() {
                    Some(rep) if !(rep.verify(g) && rep.is_proper()) => {
                        (Some("certificate fails verification".into()), vec!["oriented-proper"])
                    }
                    Some(_) => (None, vec!["oriented-proper"]),
                    None => (None, vec![]),
                },
            }
        })),
        Check::RoundUnderlying => Ok(run_over(check, n, oriented_graphs(n)?, |g| match recognize_oriented_proper_cacd(g) {
            Err(e) => (err_text(&e), vec![]),
            Ok(v) if !v.is_accepted() => (None, vec![]),
            Ok(_) => match round_enumeration_oracle(&g.underlying_graph()) {
                Ok(true) => (None, vec!["oriented-proper"]),
                Ok(false) => (Some("underlying graph is not round".into()), vec!["oriented-proper"]),
                Err(e) => (err_text(&e), vec!["oriented-proper"]),
            },
        })),
        Check::TournamentForbidden => {
            let catalog = derive_forbidden_catalog(n)?;
            Ok(run_over(check, n, tournaments(n)?, |g| {
                let general = recognize_cacd(g).is_accepted();
                match recognize_tournament_cacd(g, &catalog) {
                    Err(e) => (err_text(&e), vec![]),
                    Ok(v) if v.is_accepted() != general => {
                        (Some(format!("forbidden-subdigraph test {} but recognizer {general}", v.is_accepted())), vec![])
                    }
                    Ok(_) => (None, if general { vec!["cacd"] } else { vec!["forbidden"] }),
                }
            }))
        }
        Check::ComplementCycle => complement_cycle_orientation_sweep(n),
    }
}

/// Whether the row-difference conditions hold on all, some or none of the row-COP orderings.
fn condition_dependence(g: &Digraph) -> Option<&'static str> {
    let a = g.augmented_adjacency();
    let (mut hold, mut fail) = (0, 0);
    for order in RowCopOrderings::new(&a).ok()? {
        let b = a.select_rows(order.as_slice()).ok()?.permute_columns(&order);
        match check_conditions(&b) {
            Ok(c) if c.hold() => hold += 1,
            _ => fail += 1,
        }
    }
    match (hold, fail) {
        (0, 0) => None,
        (_, 0) => Some("conditions-all-orderings"),
        (0, _) => Some("conditions-no-ordering"),
        _ => Some("conditions-some-orderings"),
    }
}

/// Tests every orientation of the complement of the `k`-cycle with the PQ-tree backend.
///
/// For `k >= 8` every acceptance is a counterexample; for smaller `k` the
/// acceptances are only counted.
pub fn complement_cycle_orientation_sweep(k: usize) -> Result<SweepReport> {
    let base = Digraph::complement_cycle(k)?;
    let m = base.undirected_edge_count();
    if m > 30 {
        return Err(Error::TooLarge { what: "orientation sweep edges", max: 30, got: m });
    }
    let start = Instant::now();
    let accepted: Vec<u64> = (0..1u64 << m)
        .into_par_iter()
        .filter(|&mask| is_cacd(&base.orientation(mask).expect("mask fits edge count")))
        .collect();
    let mut stats = BTreeMap::new();
    stats.insert("accepted".to_string(), accepted.len() as u64);
    let forbidden = k >= 8;
    let counterexamples: Vec<Counterexample> = if forbidden {
        accepted
            .iter()
            .take(MAX_STORED)
            .map(|&mask| Counterexample {
                graph: base.orientation(mask).expect("mask fits edge count"),
                detail: format!("orientation mask {mask} accepted"),
            })
            .collect()
    } else {
        Vec::new()
    };
    Ok(SweepReport {
        check: Check::ComplementCycle.name().to_string(),
        n: k,
        instances: 1u64 << m,
        failures: if forbidden { accepted.len() as u64 } else { 0 },
        counterexamples,
        stats,
        elapsed_ms: start.elapsed().as_millis(),
    })
}

/// The exhaustive orientation sweep of the complement of the 8-cycle.
pub fn cbar8_orientation_sweep() -> Result<SweepReport> {
    complement_cycle_orientation_sweep(8)
}
