//! Circular-ones testing and column-ordering search.
//!
//! Two backends are provided. [`find_row_cop_ordering`] and
//! [`RowCopOrderings`] search orderings exhaustively with the first column
//! fixed and per-row prefix pruning; [`find_row_cop_ordering_pq`] reduces the
//! circular problem to the linear consecutive-ones problem and solves that
//! with a PQ-tree.

use pq_tree::PQTree;

use crate::error::{Error, Result};
use crate::matrix::BinaryMatrix;

/// Largest column count accepted by the exhaustive backend.
pub const EXHAUSTIVE_MAX_COLS: usize = 10;

/// Shape of the ones in a row, with 1-based column indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RowStretch {
    /// Ones exactly in `i1..=i2`, neither full nor wrapping.
    Type1 { i1: usize, i2: usize },
    /// Ones exactly in `i3..=cols` and `1..=i4`, with `i4 < i3`.
    Type2 { i3: usize, i4: usize },
    Full,
    Zero,
    NotCircular,
}

impl RowStretch {
    pub fn is_circular(self) -> bool {
        !matches!(self, RowStretch::NotCircular)
    }

    pub fn is_nontrivial(self) -> bool {
        matches!(self, RowStretch::Type1 { .. } | RowStretch::Type2 { .. })
    }
}

/// Classifies a row given as bits in column order.
pub fn classify_bits(bits: &[bool]) -> RowStretch {
    let n = bits.len();
    let ones = bits.iter().filter(|&&b| b).count();
    if ones == 0 {
        return RowStretch::Zero;
    }
    if ones == n {
        return RowStretch::Full;
    }
    let changes = bits.windows(2).filter(|w| w[0] != w[1]).count();
    if changes > 2 {
        return RowStretch::NotCircular;
    }
    if bits[0] && bits[n - 1] {
        let i4 = bits.iter().position(|&b| !b).expect("not full");
        let i3 = bits.iter().rposition(|&b| !b).expect("not full") + 2;
        RowStretch::Type2 { i3, i4 }
    } else {
        let i1 = bits.iter().position(|&b| b).expect("not zero") + 1;
        let i2 = bits.iter().rposition(|&b| b).expect("not zero") + 1;
        RowStretch::Type1 { i1, i2 }
    }
}

/// Classifies row `row` of `m` under the identity column order.
pub fn classify_row(m: &BinaryMatrix, row: usize) -> RowStretch {
    classify_bits(m.row(row))
}

/// A bijection on `0..k`; entry `p[i]` is the original index placed at position `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(perm: Vec<usize>) -> Result<Self> {
        let k = perm.len();
        let mut seen = vec![false; k];
        for &p in &perm {
            if p >= k || seen[p] {
                return Err(Error::NotAPermutation(k));
            }
            seen[p] = true;
        }
        Ok(Self(perm))
    }

    pub fn identity(k: usize) -> Self {
        Self((0..k).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    /// Position of each original index.
    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.0.len()];
        for (pos, &x) in self.0.iter().enumerate() {
            inv[x] = pos;
        }
        Self(inv)
    }

    /// Cyclic shift so that position `shift` becomes position 0.
    pub fn rotated(&self, shift: usize) -> Self {
        let k = self.0.len();
        Self((0..k).map(|i| self.0[(i + shift) % k]).collect())
    }

    pub fn reversed(&self) -> Self {
        Self(self.0.iter().rev().copied().collect())
    }
}

/// Every row of `m` is circularly consecutive once columns are laid out in `order`.
pub fn has_row_cop(m: &BinaryMatrix, order: &Permutation) -> bool {
    assert_eq!(order.len(), m.cols(), "column order length");
    let mut buf = vec![false; m.cols()];
    (0..m.rows()).all(|r| {
        let row = m.row(r);
        for (slot, &c) in buf.iter_mut().zip(order.as_slice()) {
            *slot = row[c];
        }
        classify_bits(&buf).is_circular()
    })
}

/// Column orderings with row-COP, column 0 fixed first, in lexicographic order.
///
/// The iterator is lazy; it explores a depth-first tree whose nodes are
/// column prefixes and prunes any prefix that puts three value changes into
/// some row.
pub struct RowCopOrderings<'a> {
    m: &'a BinaryMatrix,
    prefix: Vec<usize>,
    used: Vec<bool>,
    // per depth, per row: (last bit, change count)
    states: Vec<Vec<(bool, u8)>>,
    next_candidate: Vec<usize>,
    done: bool,
}

impl<'a> RowCopOrderings<'a> {
    pub fn new(m: &'a BinaryMatrix) -> Result<Self> {
        if m.cols() > EXHAUSTIVE_MAX_COLS {
            return Err(Error::TooLarge { what: "exhaustive ordering search", max: EXHAUSTIVE_MAX_COLS, got: m.cols() });
        }
        let mut used = vec![false; m.cols()];
        used[0] = true;
        let first: Vec<(bool, u8)> = (0..m.rows()).map(|r| (m.get(r, 0), 0)).collect();
        Ok(Self {
            m,
            prefix: vec![0],
            used,
            states: vec![first],
            next_candidate: vec![0],
            done: false,
        })
    }

    fn extend_state(&self, col: usize) -> Option<Vec<(bool, u8)>> {
        let last = self.states.last().expect("root state");
        let mut next = Vec::with_capacity(last.len());
        for (r, &(bit, changes)) in last.iter().enumerate() {
            let b = self.m.get(r, col);
            let c = changes + u8::from(b != bit);
            if c > 2 {
                return None;
            }
            next.push((b, c));
        }
        Some(next)
    }
}

impl Iterator for RowCopOrderings<'_> {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let k = self.m.cols();
        if self.done {
            return None;
        }
        if k == 1 {
            self.done = true;
            return Some(Permutation::identity(1));
        }
        loop {
            let depth = self.prefix.len();
            if depth == k {
                let out = Permutation(self.prefix.clone());
                self.backtrack();
                return Some(out);
            }
            let start = self.next_candidate[depth - 1];
            let mut advanced = false;
            for c in start..k {
                if self.used[c] {
                    continue;
                }
                self.next_candidate[depth - 1] = c + 1;
                if let Some(state) = self.extend_state(c) {
                    self.used[c] = true;
                    self.prefix.push(c);
                    self.states.push(state);
                    self.next_candidate.push(0);
                    advanced = true;
                    break;
                }
            }
            if !advanced {
                if depth == 1 {
                    self.done = true;
                    return None;
                }
                self.backtrack();
            }
        }
    }
}

impl RowCopOrderings<'_> {
    fn backtrack(&mut self) {
        let c = self.prefix.pop().expect("nonempty prefix");
        self.used[c] = false;
        self.states.pop();
        self.next_candidate.pop();
    }
}

/// Result of a budgeted enumeration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Enumeration {
    pub orderings: Vec<Permutation>,
    /// The budget ran out before the search finished.
    pub truncated: bool,
}

/// Collects up to `budget` orderings from [`RowCopOrderings`].
pub fn enumerate_row_cop_orderings(m: &BinaryMatrix, budget: usize) -> Result<Enumeration> {
    let mut it = RowCopOrderings::new(m)?;
    let orderings: Vec<Permutation> = it.by_ref().take(budget).collect();
    let truncated = orderings.len() == budget && it.next().is_some();
    Ok(Enumeration { orderings, truncated })
}

/// First row-COP column ordering in enumeration order, by exhaustive search.
pub fn find_row_cop_ordering(m: &BinaryMatrix) -> Result<Option<Permutation>> {
    Ok(RowCopOrderings::new(m)?.next())
}

/// Row-COP column ordering by reduction to the linear consecutive-ones problem.
///
/// Rows with a one in column 0 are complemented; the matrix has row-COP iff
/// the resulting matrix has the consecutive-ones property.
pub fn find_row_cop_ordering_pq(m: &BinaryMatrix) -> Option<Permutation> {
    let k = m.cols();
    let leaves: Vec<usize> = (0..k).collect();
    let mut tree = PQTree::from_leaves(&leaves).expect("distinct leaves");
    for r in 0..m.rows() {
        let flip = m.get(r, 0);
        let set: Vec<usize> = (0..k).filter(|&c| m.get(r, c) != flip).collect();
        if set.len() < 2 || set.len() == k {
            continue;
        }
        tree = tree.reduction(&set).ok()?;
    }
    let order = Permutation::new(tree.frontier()).expect("frontier is a permutation");
    debug_assert!(has_row_cop(m, &order));
    has_row_cop(m, &order).then_some(order)
}

/// Decision version of the PQ backend.
pub fn has_some_row_cop(m: &BinaryMatrix) -> bool {
    find_row_cop_ordering_pq(m).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&str]) -> BinaryMatrix {
        BinaryMatrix::from_strs(rows).unwrap()
    }

    #[test]
    fn classify_examples() {
        let b = |s: &str| s.chars().map(|c| c == '1').collect::<Vec<_>>();
        assert_eq!(classify_bits(&b("11001")), RowStretch::Type2 { i3: 5, i4: 2 });
        assert_eq!(classify_bits(&b("01110")), RowStretch::Type1 { i1: 2, i2: 4 });
        assert_eq!(classify_bits(&b("10101")), RowStretch::NotCircular);
        assert_eq!(classify_bits(&b("111")), RowStretch::Full);
        assert_eq!(classify_bits(&b("000")), RowStretch::Zero);
        assert_eq!(classify_bits(&b("101")), RowStretch::Type2 { i3: 3, i4: 1 });
    }

    #[test]
    fn has_row_cop_examples() {
        let c3 = m(&["110", "011", "101"]);
        assert!(has_row_cop(&c3, &Permutation::identity(3)));
        let single = m(&["1010"]);
        assert!(!has_row_cop(&single, &Permutation::identity(4)));
        assert!(has_row_cop(&single, &Permutation::new(vec![0, 2, 1, 3]).unwrap()));
    }

    #[test]
    fn enumeration_starts_at_zero_and_is_lex() {
        let c3 = m(&["110", "011", "101"]);
        let e = enumerate_row_cop_orderings(&c3, 100).unwrap();
        assert!(!e.truncated);
        assert_eq!(e.orderings, vec![Permutation::identity(3), Permutation::new(vec![0, 2, 1]).unwrap()]);
        let one = m(&["1"]);
        assert_eq!(enumerate_row_cop_orderings(&one, 10).unwrap().orderings, vec![Permutation::identity(1)]);
    }

    #[test]
    fn budget_marks_truncation() {
        let c3 = m(&["110", "011", "101"]);
        let e = enumerate_row_cop_orderings(&c3, 1).unwrap();
        assert!(e.truncated);
        assert_eq!(e.orderings.len(), 1);
    }

    #[test]
    fn pq_backend_matches_on_small_cases() {
        let yes = m(&["1010", "0101"]);
        assert!(find_row_cop_ordering_pq(&yes).is_some());
        // column 3 would need three circular neighbours
        let star = m(&["1001", "0101", "0011"]);
        assert!(find_row_cop_ordering(&star).unwrap().is_none());
        assert!(find_row_cop_ordering_pq(&star).is_none());
        let no = m(&["1100", "0110", "0011", "1001", "1010"]).transpose();
        let ex = find_row_cop_ordering(&no).unwrap();
        assert_eq!(ex.is_some(), find_row_cop_ordering_pq(&no).is_some());
    }

    #[test]
    fn rotations_and_reversal() {
        let p = Permutation::new(vec![2, 0, 1]).unwrap();
        assert_eq!(p.rotated(1).as_slice(), &[0, 1, 2]);
        assert_eq!(p.reversed().as_slice(), &[1, 0, 2]);
        assert_eq!(p.inverse().as_slice(), &[1, 2, 0]);
    }
}
