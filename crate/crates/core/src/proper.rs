//! Proper circular-arc catch digraphs.
//!
//! For a candidate column ordering the pipeline is: permute the augmented
//! adjacency matrix into `B`, check the pairwise set-difference conditions,
//! sort the nontrivial rows into `D`, insert the full rows to obtain a
//! monotone matrix `M`, number the upper stair of `M`, and read arcs and
//! points off the stair numbers. Recognition tries every row-COP ordering.

use std::cmp::max;

use crate::circular_ones::{
    classify_bits, classify_row, find_row_cop_ordering, has_row_cop, Permutation, RowCopOrderings, RowStretch,
    EXHAUSTIVE_MAX_COLS,
};
use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::matrix::BinaryMatrix;
use crate::recognition::{Certificate, Verdict, Witness};
use crate::representation::{CatchRepresentation, Rational};

/// Effective stretch of a nontrivial or full row, 1-based columns.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RowShape {
    Type1 { i1: usize, i2: usize },
    Type2 { i3: usize, i4: usize },
}

impl RowShape {
    /// Column where the stretch starts.
    pub fn start(self) -> usize {
        match self {
            RowShape::Type1 { i1, .. } => i1,
            RowShape::Type2 { i3, .. } => i3,
        }
    }

    /// Column where the stretch ends.
    pub fn end(self) -> usize {
        match self {
            RowShape::Type1 { i2, .. } => i2,
            RowShape::Type2 { i4, .. } => i4,
        }
    }
}

/// Start and end profile of a matrix's rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LambdaMu {
    pub lambda: Vec<usize>,
    pub mu: Vec<usize>,
    /// Shape each row is treated as, with full rows resolved.
    pub shapes: Vec<RowShape>,
}

/// Computes `λ`, `μ` for each row.
///
/// Type 1 rows give `(i1, i2)` and type 2 rows `(i3, i4 + n)`. A leading full
/// row is `(1, n)`; a full row after a full row copies it; a full row after a
/// nontrivial row `p` takes `λ = λ_p`, and `μ = n` when `p` starts at column 1,
/// otherwise `μ = λ_p - 1 + n`.
pub fn compute_lambda_mu(m: &BinaryMatrix) -> Result<LambdaMu> {
    let n = m.cols();
    let mut lambda = Vec::with_capacity(m.rows());
    let mut mu = Vec::with_capacity(m.rows());
    let mut shapes: Vec<RowShape> = Vec::with_capacity(m.rows());
    let mut prev_full = false;
    for r in 0..m.rows() {
        let (shape, is_full) = match classify_row(m, r) {
            RowStretch::Type1 { i1, i2 } => (RowShape::Type1 { i1, i2 }, false),
            RowStretch::Type2 { i3, i4 } => (RowShape::Type2 { i3, i4 }, false),
            RowStretch::Full if r == 0 => (RowShape::Type1 { i1: 1, i2: n }, true),
            RowStretch::Full if prev_full => (shapes[r - 1], true),
            RowStretch::Full => {
                let start = shapes[r - 1].start();
                if start == 1 {
                    (RowShape::Type1 { i1: 1, i2: n }, true)
                } else {
                    (RowShape::Type2 { i3: start, i4: start - 1 }, true)
                }
            }
            RowStretch::Zero => return Err(Error::ZeroRow { row: r }),
            RowStretch::NotCircular => return Err(Error::NotCircularRow { row: r }),
        };
        prev_full = is_full;
        let (l, u) = match shape {
            RowShape::Type1 { i1, i2 } => (i1, i2),
            RowShape::Type2 { i3, i4 } => (i3, i4 + n),
        };
        lambda.push(l);
        mu.push(u);
        shapes.push(shape);
    }
    Ok(LambdaMu { lambda, mu, shapes })
}

/// Row-COP and column-COP under the identity orders, no zero rows, and
/// non-decreasing `λ` and `μ`.
pub fn is_monotone_circular_ordering(m: &BinaryMatrix) -> bool {
    if !has_row_cop(m, &Permutation::identity(m.cols())) {
        return false;
    }
    if !has_row_cop(&m.transpose(), &Permutation::identity(m.rows())) {
        return false;
    }
    match compute_lambda_mu(m) {
        Ok(lm) => lm.lambda.windows(2).all(|w| w[0] <= w[1]) && lm.mu.windows(2).all(|w| w[0] <= w[1]),
        Err(_) => false,
    }
}

/// Outcome of the pairwise conditions on `B`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Conditions {
    /// Rows `(r, s)` with `r - s` not circularly consecutive.
    pub cond2_violation: Option<(usize, usize)>,
    /// Rows `(r, s, t)`, `r` full, with `r - s - t` not circularly consecutive.
    pub cond3_violation: Option<(usize, usize, usize)>,
}

impl Conditions {
    pub fn cond2(&self) -> bool {
        self.cond2_violation.is_none()
    }

    pub fn cond3(&self) -> bool {
        self.cond3_violation.is_none()
    }

    pub fn hold(&self) -> bool {
        self.cond2() && self.cond3()
    }
}

fn stretches(b: &BinaryMatrix) -> Result<Vec<RowStretch>> {
    (0..b.rows())
        .map(|r| match classify_row(b, r) {
            RowStretch::NotCircular => Err(Error::NotCircularRow { row: r }),
            s => Ok(s),
        })
        .collect()
}

/// `(start, end)` of a nontrivial stretch.
fn bounds(s: RowStretch) -> Option<(usize, usize)> {
    match s {
        RowStretch::Type1 { i1, i2 } => Some((i1, i2)),
        RowStretch::Type2 { i3, i4 } => Some((i3, i4)),
        _ => None,
    }
}

fn difference_is_circular(r: RowStretch, s: RowStretch, n: usize) -> bool {
    let (Some((r0, r1)), Some((s0, s1))) = (bounds(r), bounds(s)) else {
        return true;
    };
    let off = |x: usize| (x + n - r0) % n;
    let len_r = off(r1);
    let len_s = (s1 + n - s0) % n;
    let inside = off(s0) + len_s <= len_r;
    !(inside && s0 != r0 && s1 != r1)
}

fn union_is_circular(s: RowStretch, t: RowStretch, n: usize) -> bool {
    match (s, t) {
        (RowStretch::Type1 { i1: s1, i2: s2 }, RowStretch::Type1 { i1: t1, i2: t2 }) => {
            let ((a1, a2), (b1, b2)) = if s1 <= t1 { ((s1, s2), (t1, t2)) } else { ((t1, t2), (s1, s2)) };
            b1 as i64 - a2 as i64 <= 1 || (a1 == 1 && b2 == n)
        }
        (RowStretch::Type2 { i3, i4 }, RowStretch::Type1 { i1, i2 })
        | (RowStretch::Type1 { i1, i2 }, RowStretch::Type2 { i3, i4 }) => {
            i1 as i64 - i4 as i64 <= 1 || i3 as i64 - i2 as i64 <= 1
        }
        _ => true,
    }
}

/// Conditions 2 and 3 through the endpoint arithmetic.
pub fn check_conditions(b: &BinaryMatrix) -> Result<Conditions> {
    let st = stretches(b)?;
    let n = b.cols();
    let mut out = Conditions::default();
    'outer: for r in 0..st.len() {
        for s in 0..st.len() {
            if r != s && !difference_is_circular(st[r], st[s], n) {
                out.cond2_violation = Some((r, s));
                break 'outer;
            }
        }
    }
    let fulls: Vec<usize> = (0..st.len()).filter(|&r| st[r] == RowStretch::Full).collect();
    if let Some(&r) = fulls.first() {
        'outer3: for s in 0..st.len() {
            for t in s + 1..st.len() {
                if st[s].is_nontrivial() && st[t].is_nontrivial() && !union_is_circular(st[s], st[t], n) {
                    out.cond3_violation = Some((r, s, t));
                    break 'outer3;
                }
            }
        }
    }
    Ok(out)
}

/// Conditions 2 and 3 by explicit set computation.
pub fn check_conditions_direct(b: &BinaryMatrix) -> Result<Conditions> {
    stretches(b)?;
    let mut out = Conditions::default();
    let rows = b.rows();
    'outer: for r in 0..rows {
        for s in 0..rows {
            if r == s {
                continue;
            }
            let diff: Vec<bool> = (0..b.cols()).map(|c| b.get(r, c) && !b.get(s, c)).collect();
            if !classify_bits(&diff).is_circular() {
                out.cond2_violation = Some((r, s));
                break 'outer;
            }
        }
    }
    let full = |r: usize| b.is_full_row(r);
    let nontrivial = |r: usize| !b.is_full_row(r) && !b.is_zero_row(r);
    'outer3: for r in (0..rows).filter(|&r| full(r)) {
        for s in (0..rows).filter(|&s| s != r && nontrivial(s)) {
            for t in (s + 1..rows).filter(|&t| t != r && nontrivial(t)) {
                let diff: Vec<bool> = (0..b.cols()).map(|c| !b.get(s, c) && !b.get(t, c)).collect();
                if !classify_bits(&diff).is_circular() {
                    out.cond3_violation = Some((r, s, t));
                    break 'outer3;
                }
            }
        }
    }
    Ok(out)
}

/// Row landmarks of `D`, as row indices of `B`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Landmarks {
    /// First row of `S1`.
    pub i: Option<usize>,
    /// Last row of `S1`.
    pub i_prime: Option<usize>,
    /// First row of `S2`.
    pub j: Option<usize>,
    /// Last row of `S2`.
    pub j_prime: Option<usize>,
    /// Last row of `S3`.
    pub k: Option<usize>,
    /// First row of `D2`.
    pub m: Option<usize>,
}

/// Rows of `B` sorted into type 1 rows, type 2 rows and full rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowBlocks {
    pub n: usize,
    pub stretches: Vec<RowStretch>,
    /// Type 1 rows sorted by `(i1, i2)`.
    pub d1: Vec<usize>,
    /// Type 2 rows sorted by `(i3, i4)`.
    pub d2: Vec<usize>,
    pub fulls: Vec<usize>,
    /// Rows of `d1` with `i1 = 1`.
    pub s1: Vec<usize>,
    /// Rows of `d1` with `i1 > 1` and `i2 < n`.
    pub s2: Vec<usize>,
    /// Rows of `d1` with `i2 = n`.
    pub s3: Vec<usize>,
    pub landmarks: Landmarks,
}

impl RowBlocks {
    /// `D1` followed by `D2`.
    pub fn d(&self) -> Vec<usize> {
        self.d1.iter().chain(&self.d2).copied().collect()
    }

    fn first(&self, r: usize) -> i64 {
        bounds(self.stretches[r]).expect("nontrivial").0 as i64
    }

    fn last(&self, r: usize) -> i64 {
        bounds(self.stretches[r]).expect("nontrivial").1 as i64
    }
}

/// Splits `B` into sorted type 1 rows, sorted type 2 rows and full rows.
pub fn build_d(b: &BinaryMatrix) -> Result<RowBlocks> {
    let st = stretches(b)?;
    let n = b.cols();
    let mut d1 = Vec::new();
    let mut d2 = Vec::new();
    let mut fulls = Vec::new();
    for (r, s) in st.iter().enumerate() {
        match s {
            RowStretch::Type1 { .. } => d1.push(r),
            RowStretch::Type2 { .. } => d2.push(r),
            RowStretch::Full => fulls.push(r),
            RowStretch::Zero => return Err(Error::ZeroRow { row: r }),
            RowStretch::NotCircular => unreachable!("filtered by stretches"),
        }
    }
    let key = |r: &usize| (bounds(st[*r]).expect("nontrivial"), *r);
    d1.sort_by_key(key);
    d2.sort_by_key(key);
    let in_s = |pred: &dyn Fn(usize, usize) -> bool| -> Vec<usize> {
        d1.iter()
            .copied()
            .filter(|&r| {
                let (a, z) = bounds(st[r]).expect("nontrivial");
                pred(a, z)
            })
            .collect()
    };
    let s1 = in_s(&|a, _| a == 1);
    let s2 = in_s(&|a, z| a > 1 && z < n);
    let s3 = in_s(&|_, z| z == n);
    let landmarks = Landmarks {
        i: s1.first().copied(),
        i_prime: s1.last().copied(),
        j: s2.first().copied(),
        j_prime: s2.last().copied(),
        k: s3.last().copied(),
        m: d2.first().copied(),
    };
    let blocks = RowBlocks { n, stretches: st, d1, d2, fulls, s1, s2, s3, landmarks };
    if !blocks.d().is_empty() {
        let d = b.select_rows(&blocks.d())?;
        if !has_row_cop(&d.transpose(), &Permutation::identity(d.rows())) {
            return Err(Error::NotMonotone("sorted nontrivial rows lack circular ones along columns".into()));
        }
    }
    Ok(blocks)
}

/// Where the block of full rows goes relative to `D`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Placement {
    Before(usize),
    After(usize),
    End,
}

/// Chosen placement and the case of the insertion procedure that chose it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Insertion {
    pub case: &'static str,
    pub placement: Placement,
    /// Rows of `B` in the order of `M`.
    pub order: Vec<usize>,
}

fn f1_failure(case: &'static str, detail: &str) -> Error {
    Error::Insertion { case, detail: format!("F1 pattern expected: {detail}") }
}

fn choose_placement(bl: &RowBlocks) -> Result<(&'static str, Placement)> {
    let lm = bl.landmarks;
    let Some(m) = lm.m else {
        if bl.s1.is_empty() || bl.s3.is_empty() {
            return Ok(("D2 empty, S1 or S3 empty", Placement::End));
        }
        if bl.s2.is_empty() {
            return Ok(("D2 empty, S2 empty", Placement::After(lm.i_prime.expect("S1 nonempty"))));
        }
        let (i, k) = (lm.i.expect("S1"), lm.k.expect("S3"));
        if bl.first(k) <= bl.last(i) + 1 {
            return Ok(("D2 empty, all of S1, S2, S3", Placement::End));
        }
        return Err(f1_failure("D2 empty, all of S1, S2, S3", "k1 > i2 + 1"));
    };
    let search = |case: &'static str, hi: usize, lo: usize| -> Result<(&'static str, Placement)> {
        if bl.first(hi) - bl.last(m) <= 1 {
            return Ok((case, Placement::Before(m)));
        }
        let bound = bl.last(lo) + 1;
        match bl.d2.iter().copied().find(|&r| bl.first(r) > bound) {
            None => Ok((case, Placement::End)),
            Some(mp) if bl.first(hi) - bl.last(mp) > 1 => Err(f1_failure(case, "no row of D2 bounds the full rows")),
            Some(mp) => Ok((case, Placement::Before(mp))),
        }
    };
    match (!bl.s1.is_empty(), !bl.s2.is_empty(), !bl.s3.is_empty()) {
        (true, true, false) => search("case 1", lm.j_prime.expect("S2"), lm.i.expect("S1")),
        (false, true, true) => search("case 2", lm.k.expect("S3"), lm.j.expect("S2")),
        (false, true, false) => search("case 3", lm.j_prime.expect("S2"), lm.j.expect("S2")),
        (true, false, _) => Ok(("case 4", Placement::After(lm.i_prime.expect("S1")))),
        (false, false, _) => Ok(("case 5", Placement::End)),
        (true, true, true) => {
            let (i, k) = (lm.i.expect("S1"), lm.k.expect("S3"));
            if bl.first(k) - bl.last(m) > 1 && bl.first(k) > bl.last(i) + 1 {
                return Err(f1_failure("case 6", "k1 > i2 + 1"));
            }
            search("case 6", k, i)
        }
    }
}

/// Places the full rows of `B` as one block in `D`, giving the row order of `M`.
///
/// The result is checked to be a monotone circular ordering; a failure
/// carries whichever of the column obstructions `F1`, `F2`, `F3` occurs in
/// the attempted matrix.
pub fn insert_full_rows(b: &BinaryMatrix, blocks: &RowBlocks) -> Result<Insertion> {
    let d = blocks.d();
    let order = if blocks.fulls.is_empty() {
        return finish_insertion(b, "no full rows", Placement::End, d);
    } else {
        d
    };
    let (case, placement) = choose_placement(blocks)?;
    let at = match placement {
        Placement::Before(r) => order.iter().position(|&x| x == r).expect("landmark in D"),
        Placement::After(r) => order.iter().position(|&x| x == r).expect("landmark in D") + 1,
        Placement::End => order.len(),
    };
    let mut out = order[..at].to_vec();
    out.extend_from_slice(&blocks.fulls);
    out.extend_from_slice(&order[at..]);
    finish_insertion(b, case, placement, out)
}

fn finish_insertion(b: &BinaryMatrix, case: &'static str, placement: Placement, order: Vec<usize>) -> Result<Insertion> {
    let m = b.select_rows(&order)?;
    if !is_monotone_circular_ordering(&m) {
        let detail = match find_f_pattern(&m) {
            Some(f) => format!("result is not monotone; {} found at rows {:?}, columns {:?}", f.name, f.rows, f.cols),
            None => "result is not monotone; no F1/F2/F3 pattern present".to_string(),
        };
        return Err(Error::Insertion { case, detail });
    }
    Ok(Insertion { case, placement, order })
}

/// An occurrence of one of the column obstructions in a matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FPattern {
    pub name: &'static str,
    /// Matrix row matched to each pattern row.
    pub rows: Vec<usize>,
    /// Matrix columns, in increasing order.
    pub cols: Vec<usize>,
}

pub fn f_matrices() -> [(&'static str, BinaryMatrix); 3] {
    [
        ("F1", BinaryMatrix::from_strs(&["100", "010", "001", "111"]).expect("valid")),
        ("F2", BinaryMatrix::from_strs(&["1100", "0110", "0011", "1001", "1111"]).expect("valid")),
        ("F3", BinaryMatrix::from_strs(&["11100", "01110", "00111", "10011", "11001", "11111"]).expect("valid")),
    ]
}

/// First `F1`, `F2` or `F3` submatrix: columns keep their order, rows may be permuted.
pub fn find_f_pattern(m: &BinaryMatrix) -> Option<FPattern> {
    for (name, f) in f_matrices() {
        if f.cols() > m.cols() || f.rows() > m.rows() {
            continue;
        }
        let mut cols = Vec::with_capacity(f.cols());
        if let Some(found) = search_cols(m, &f, 0, &mut cols) {
            return Some(FPattern { name, rows: found, cols });
        }
    }
    None
}

fn search_cols(m: &BinaryMatrix, f: &BinaryMatrix, from: usize, cols: &mut Vec<usize>) -> Option<Vec<usize>> {
    if cols.len() == f.cols() {
        let mut rows = Vec::with_capacity(f.rows());
        let mut used = vec![false; m.rows()];
        return match_rows(m, f, cols, &mut rows, &mut used).then_some(rows);
    }
    for c in from..m.cols() {
        cols.push(c);
        if let Some(rows) = search_cols(m, f, c + 1, cols) {
            return Some(rows);
        }
        cols.pop();
    }
    None
}

fn match_rows(m: &BinaryMatrix, f: &BinaryMatrix, cols: &[usize], rows: &mut Vec<usize>, used: &mut [bool]) -> bool {
    let k = rows.len();
    if k == f.rows() {
        return true;
    }
    for r in 0..m.rows() {
        if used[r] || !cols.iter().enumerate().all(|(j, &c)| m.get(r, c) == f.get(k, j)) {
            continue;
        }
        used[r] = true;
        rows.push(r);
        if match_rows(m, f, cols, rows, used) {
            return true;
        }
        rows.pop();
        used[r] = false;
    }
    false
}

/// Upper-stair numbers: `l[j]` for columns, `r[i]` for rows, jointly `1..=rows+cols`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StairNumbering {
    pub l: Vec<usize>,
    pub r: Vec<usize>,
}

/// Numbers the upper stair of a monotone matrix.
///
/// Walking from the top of column 1, column `j` is numbered when the walk
/// crosses it and row `i` when the walk turns down past the last column in
/// which that row can hold a one.
pub fn stair_numbering(m: &BinaryMatrix) -> Result<StairNumbering> {
    if !is_monotone_circular_ordering(m) {
        return Err(Error::NotMonotone("stair numbering needs a monotone matrix".into()));
    }
    let lm = compute_lambda_mu(m)?;
    let n = m.cols();
    #[derive(Clone, Copy)]
    enum Item {
        Col(usize),
        Row(usize),
    }
    let mut items: Vec<((usize, u8, usize), Item)> = (0..n).map(|j| ((j + 1, 0, j), Item::Col(j))).collect();
    items.extend((0..m.rows()).map(|i| ((lm.mu[i].min(n), 1, i), Item::Row(i))));
    items.sort_by_key(|(k, _)| *k);
    let mut l = vec![0; n];
    let mut r = vec![0; m.rows()];
    for (num, (_, item)) in items.iter().enumerate() {
        match *item {
            Item::Col(j) => l[j] = num + 1,
            Item::Row(i) => r[i] = num + 1,
        }
    }
    for i in 0..m.rows() {
        for j in 0..n {
            if m.get(i, j) && r[i] <= l[j] {
                return Err(Error::Construction(format!("stair numbers violate r > l at row {i}, column {j}")));
            }
        }
    }
    Ok(StairNumbering { l, r })
}

/// Per-row indices feeding the arc formulas; absent where the formula does not apply.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArcIndices {
    pub s: Vec<Option<usize>>,
    pub s_prime: Vec<Option<usize>>,
    pub k: Vec<Option<usize>>,
}

/// Computes `s`, `s'`, `k` from the effective row shapes of `M`.
pub fn arc_indices(shapes: &[RowShape], n: usize) -> ArcIndices {
    let last_row = |pred: &dyn Fn(RowShape) -> bool| -> Option<usize> {
        shapes.iter().enumerate().filter(|(_, &s)| pred(s)).map(|(j, _)| n + j + 1).max()
    };
    let mut out = ArcIndices { s: vec![None; shapes.len()], s_prime: vec![None; shapes.len()], k: vec![None; shapes.len()] };
    for (i, shape) in shapes.iter().enumerate() {
        match *shape {
            RowShape::Type1 { i1, .. } => {
                out.s[i] = last_row(&|s| match s {
                    RowShape::Type1 { i1: j1, .. } => j1 == i1,
                    RowShape::Type2 { i3: j3, i4: j4 } => j3 == i1 || j4 == i1,
                });
            }
            RowShape::Type2 { i3, i4 } => {
                out.s_prime[i] = last_row(&|s| matches!(s, RowShape::Type2 { i3: j3, i4: j4 } if j3 == i3 || j4 == i3));
                out.k[i] = last_row(&|s| matches!(s, RowShape::Type2 { i4: j4, .. } if j4 == i4));
            }
        }
    }
    out
}

fn int(x: usize) -> Rational {
    Rational::from_integer(x as i64)
}

/// Arc `(a, b)` for each row of `M`.
pub fn construct_arcs(shapes: &[RowShape], stairs: &StairNumbering, indices: &ArcIndices) -> Vec<(Rational, Rational)> {
    let n = stairs.l.len();
    let frac = |i: usize, c: usize, idx: usize| int(n + i - c) / int(idx + 1 - c);
    shapes
        .iter()
        .enumerate()
        .map(|(row, shape)| {
            let i = row + 1;
            match *shape {
                RowShape::Type1 { i1, .. } => {
                    let s = indices.s[row].expect("type 1 index");
                    (int(stairs.l[i1 - 1]) + frac(i, i1, s), int(stairs.r[row]))
                }
                RowShape::Type2 { i3, i4 } => {
                    let sp = indices.s_prime[row].expect("type 2 index");
                    let k = indices.k[row].expect("type 2 index");
                    (int(stairs.l[i3 - 1]) + frac(i, i3, sp), int(stairs.l[i4 - 1]) + frac(i, i4, k))
                }
            }
        })
        .collect()
}

/// Point for each column of `M`: the largest of `l_j`, the latest arc start at
/// `j`, and the earliest type 2 arc end at `j`.
pub fn construct_points(shapes: &[RowShape], stairs: &StairNumbering, arcs: &[(Rational, Rational)]) -> Vec<Rational> {
    (0..stairs.l.len())
        .map(|col| {
            let j = col + 1;
            let mut p = int(stairs.l[col]);
            let s_max = shapes.iter().zip(arcs).filter(|(s, _)| s.start() == j).map(|(_, a)| a.0).max();
            let q_min = shapes
                .iter()
                .zip(arcs)
                .filter(|(s, _)| matches!(s, RowShape::Type2 { i4, .. } if *i4 == j))
                .map(|(_, a)| a.1)
                .min();
            for x in [s_max, q_min].into_iter().flatten() {
                p = max(p, x);
            }
            p
        })
        .collect()
}

/// Every intermediate object of one run of the construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProperTrace {
    /// Column order of `B`; column `k` and row `k` of `B` are vertex `ordering[k]`.
    pub ordering: Permutation,
    pub b: BinaryMatrix,
    pub conditions: Conditions,
    pub blocks: RowBlocks,
    pub insertion: Insertion,
    /// Vertex of each row of `M`.
    pub m_vertices: Vec<usize>,
    pub m: BinaryMatrix,
    pub lambda_mu: LambdaMu,
    pub stairs: StairNumbering,
    pub indices: ArcIndices,
    /// Arc of each row of `M`.
    pub arcs: Vec<(Rational, Rational)>,
    /// Point of each column of `M`.
    pub points: Vec<Rational>,
    pub representation: CatchRepresentation,
}

/// Runs the construction for one column ordering of the augmented adjacency matrix.
pub fn proper_pipeline(g: &Digraph, ordering: &Permutation) -> Result<ProperTrace> {
    let n = g.n();
    if ordering.len() != n {
        return Err(Error::NotAPermutation(n));
    }
    let a = g.augmented_adjacency();
    let b = a.select_rows(ordering.as_slice())?.permute_columns(ordering);
    let conditions = check_conditions(&b)?;
    if let Some((r, s)) = conditions.cond2_violation {
        return Err(Error::Construction(format!("difference of rows {r} and {s} is not circular")));
    }
    if let Some((r, s, t)) = conditions.cond3_violation {
        return Err(Error::Construction(format!("full row {r} minus rows {s}, {t} is not circular")));
    }
    let blocks = build_d(&b)?;
    let insertion = insert_full_rows(&b, &blocks)?;
    let m = b.select_rows(&insertion.order)?;
    let lambda_mu = compute_lambda_mu(&m)?;
    let stairs = stair_numbering(&m)?;
    let indices = arc_indices(&lambda_mu.shapes, n);
    let arcs = construct_arcs(&lambda_mu.shapes, &stairs, &indices);
    let points = construct_points(&lambda_mu.shapes, &stairs, &arcs);
    let m_vertices: Vec<usize> = insertion.order.iter().map(|&r| ordering.as_slice()[r]).collect();
    let mut triples = vec![(Rational::default(), Rational::default(), Rational::default()); n];
    for (row, &v) in m_vertices.iter().enumerate() {
        triples[v].0 = arcs[row].0;
        triples[v].1 = arcs[row].1;
    }
    for (col, &v) in ordering.as_slice().iter().enumerate() {
        triples[v].2 = points[col];
    }
    let representation = CatchRepresentation::from_triples(int(2 * n + 1), &triples)?;
    Ok(ProperTrace {
        ordering: ordering.clone(),
        b,
        conditions,
        blocks,
        insertion,
        m_vertices,
        m,
        lambda_mu,
        stairs,
        indices,
        arcs,
        points,
        representation,
    })
}

/// Failure tallies over the candidate orderings of one recognition run.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CandidateTally {
    pub candidates: usize,
    pub conditions: usize,
    pub insertion: usize,
    pub construction: usize,
    pub verification: usize,
}

/// Searches row-COP orderings for one on which the construction yields a
/// verified proper representation.
pub fn recognize_proper_cacd(g: &Digraph) -> Result<Verdict> {
    Ok(recognize_proper_cacd_traced(g)?.0)
}

/// As [`recognize_proper_cacd`], also returning the accepted trace and the failure tallies.
pub fn recognize_proper_cacd_traced(g: &Digraph) -> Result<(Verdict, Option<ProperTrace>, CandidateTally)> {
    if g.n() > EXHAUSTIVE_MAX_COLS {
        return Err(Error::TooLarge { what: "proper recognition", max: EXHAUSTIVE_MAX_COLS, got: g.n() });
    }
    let a = g.augmented_adjacency();
    let mut tally = CandidateTally::default();
    if find_row_cop_ordering(&a.transpose())?.is_none() {
        let w = Witness::Exhausted { candidates: 0, detail: "augmented adjacency lacks circular ones along columns".into() };
        return Ok((Verdict::Rejected(w), None, tally));
    }
    for ordering in RowCopOrderings::new(&a)? {
        tally.candidates += 1;
        match proper_pipeline(g, &ordering) {
            Ok(trace) => {
                let rep = &trace.representation;
                if rep.verify(g) && rep.is_proper() {
                    let cert = Certificate::Representation { ordering, representation: rep.clone() };
                    return Ok((Verdict::Accepted(cert), Some(trace), tally));
                }
                tally.verification += 1;
            }
            Err(Error::Construction(msg)) if msg.contains("not circular") => tally.conditions += 1,
            Err(Error::Insertion { .. }) | Err(Error::NotMonotone(_)) => tally.insertion += 1,
            Err(_) => tally.construction += 1,
        }
    }
    let detail = format!(
        "{} orderings tried: {} failed the row conditions, {} failed full-row insertion, {} failed construction, {} failed verification",
        tally.candidates, tally.conditions, tally.insertion, tally.construction, tally.verification
    );
    Ok((Verdict::Rejected(Witness::Exhausted { candidates: tally.candidates, detail }), None, tally))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&str]) -> BinaryMatrix {
        BinaryMatrix::from_strs(rows).unwrap()
    }

    #[test]
    fn lambda_mu_small_cases() {
        let lm = compute_lambda_mu(&m(&["1"])).unwrap();
        assert_eq!((lm.lambda, lm.mu), (vec![1], vec![1]));
        let lm = compute_lambda_mu(&m(&["101"])).unwrap();
        assert_eq!((lm.lambda, lm.mu), (vec![3], vec![4]));
        assert_eq!(compute_lambda_mu(&m(&["000"])), Err(Error::ZeroRow { row: 0 }));
    }

    #[test]
    fn condition_examples() {
        let c = check_conditions(&m(&["01100", "00111"])).unwrap();
        assert!(c.cond2());
        let b = m(&["111111", "110000", "000110"]);
        let c = check_conditions(&b).unwrap();
        assert_eq!(c.cond3_violation, Some((0, 1, 2)));
        assert_eq!(check_conditions_direct(&b).unwrap().cond3_violation, Some((0, 1, 2)));
    }

    #[test]
    fn stair_small_cases() {
        assert_eq!(stair_numbering(&m(&["1"])).unwrap(), StairNumbering { l: vec![1], r: vec![2] });
        assert_eq!(stair_numbering(&m(&["11", "11"])).unwrap(), StairNumbering { l: vec![1, 2], r: vec![3, 4] });
    }

    #[test]
    fn no_full_rows_keeps_d() {
        let b = m(&["0110", "1100", "0011"]);
        let blocks = build_d(&b).unwrap();
        assert!(blocks.fulls.is_empty());
        assert_eq!(blocks.d(), vec![1, 0, 2]);
        assert_eq!(insert_full_rows(&b, &blocks).unwrap().order, vec![1, 0, 2]);
    }

    #[test]
    fn case_four_places_after_last_s1() {
        let b = m(&["1100", "1111", "0111", "1110"]);
        let blocks = build_d(&b).unwrap();
        assert!(blocks.d2.is_empty() && blocks.s2.is_empty());
        let ins = insert_full_rows(&b, &blocks).unwrap();
        assert_eq!(ins.placement, Placement::After(3));
        assert_eq!(ins.order, vec![0, 3, 1, 2]);
    }

    #[test]
    fn complete_symmetric_is_proper() {
        for n in 1..=5 {
            let g = Digraph::complete_symmetric(n).unwrap();
            let v = recognize_proper_cacd(&g).unwrap();
            let rep = v.representation().expect("accepted");
            assert!(rep.verify(&g) && rep.is_proper());
        }
    }

    #[test]
    fn f_pattern_found_in_f1() {
        let (_, f1) = f_matrices().into_iter().next().unwrap();
        let found = find_f_pattern(&f1).unwrap();
        assert_eq!(found.name, "F1");
        assert_eq!(found.cols, vec![0, 1, 2]);
    }
}
