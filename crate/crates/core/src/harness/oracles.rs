//! Brute-force deciders that share no code with the recognizers they check.

use crate::digraph::Digraph;
use crate::error::{Error, Result};

pub const GRID_MAX_N: usize = 5;
pub const ROUND_MAX_N: usize = 8;

fn for_each_permutation<T>(items: &mut Vec<T>, k: usize, f: &mut dyn FnMut(&[T]) -> bool) -> bool {
    if k == items.len() {
        return f(items);
    }
    for i in k..items.len() {
        items.swap(k, i);
        if for_each_permutation(items, k + 1, f) {
            items.swap(k, i);
            return true;
        }
        items.swap(k, i);
    }
    false
}

/// Circular orders of `0..n` with vertex 0 in front; stops when `f` returns true.
fn for_each_circular_order(n: usize, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    let mut rest: Vec<usize> = (1..n).collect();
    for_each_permutation(&mut rest, 0, &mut |tail| {
        let mut order = Vec::with_capacity(n);
        order.push(0);
        order.extend_from_slice(tail);
        f(&order)
    })
}

#[derive(Clone, Copy)]
enum Span {
    /// Covers point slots `start..=end` circularly, not all of them.
    Part { start: usize, end: usize },
    All,
}

fn span_of(slots: &[bool]) -> Option<Span> {
    let n = slots.len();
    let count = slots.iter().filter(|&&b| b).count();
    if count == n {
        return Some(Span::All);
    }
    let start = (0..n).find(|&i| slots[i] && !slots[(i + n - 1) % n])?;
    let run = (0..n).take_while(|&d| slots[(start + d) % n]).count();
    (run == count).then_some(Span::Part { start, end: (start + run - 1) % n })
}

/// Decides proper catch representability by enumerating endpoint layouts.
///
/// Points are placed in every circular order. In general position an arc's
/// start lies in the gap just before its first caught point and its end in
/// the gap just after its last one; an arc catching every point has both ends
/// in one gap, end before start. Every relative order of the endpoints inside
/// each gap is tried on an integer circle, and containment is tested on
/// half-integer samples.
pub fn grid_representation_oracle(g: &Digraph) -> Result<bool> {
    let n = g.n();
    if n > GRID_MAX_N {
        return Err(Error::TooLarge { what: "grid oracle", max: GRID_MAX_N, got: n });
    }
    Ok(for_each_circular_order(n, &mut |order| layout_exists(g, order)))
}

fn layout_exists(g: &Digraph, order: &[usize]) -> bool {
    let n = g.n();
    let mut slot_of = vec![0; n];
    for (k, &v) in order.iter().enumerate() {
        slot_of[v] = k;
    }
    let mut spans = Vec::with_capacity(n);
    for v in 0..n {
        let mut slots = vec![false; n];
        for w in 0..n {
            if w == v || g.has_edge(v, w) {
                slots[slot_of[w]] = true;
            }
        }
        match span_of(&slots) {
            Some(s) => spans.push(s),
            None => return false,
        }
    }
    let full: Vec<usize> = (0..n).filter(|&v| matches!(spans[v], Span::All)).collect();
    let mut gap_choice = vec![0usize; full.len()];
    loop {
        // endpoint items per gap: (vertex, is_start)
        let mut gaps: Vec<Vec<(usize, bool)>> = vec![Vec::new(); n];
        let mut fi = 0;
        for v in 0..n {
            match spans[v] {
                Span::Part { start, end } => {
                    gaps[start].push((v, true));
                    gaps[(end + 1) % n].push((v, false));
                }
                Span::All => {
                    gaps[gap_choice[fi]].push((v, false));
                    gaps[gap_choice[fi]].push((v, true));
                    fi += 1;
                }
            }
        }
        let mut layout = Layout { n, slot_of: slot_of.clone(), a: vec![0; n], b: vec![0; n] };
        if arrange_gaps(g, &mut gaps, 0, &mut layout, &spans) {
            return true;
        }
        // next gap choice for full arcs
        let mut i = 0;
        loop {
            if i == gap_choice.len() {
                return false;
            }
            gap_choice[i] += 1;
            if gap_choice[i] < n {
                break;
            }
            gap_choice[i] = 0;
            i += 1;
        }
    }
}

struct Layout {
    n: usize,
    slot_of: Vec<usize>,
    a: Vec<u32>,
    b: Vec<u32>,
}

impl Layout {
    fn width(&self) -> u32 {
        2 * self.n as u32 + 2
    }

    fn circumference(&self) -> u32 {
        self.n as u32 * self.width()
    }

    fn point(&self, v: usize) -> u32 {
        self.slot_of[v] as u32 * self.width() + 2 * self.n as u32 + 1
    }

    fn samples(&self, a: u32, b: u32) -> u128 {
        let total = 2 * self.circumference();
        let (sa, sb) = (2 * a, 2 * b);
        let mut mask = 0u128;
        let mut s = sa;
        loop {
            mask |= 1u128 << s;
            if s == sb {
                break;
            }
            s = (s + 1) % total;
        }
        mask
    }
}

fn arrange_gaps(g: &Digraph, gaps: &mut [Vec<(usize, bool)>], gap: usize, layout: &mut Layout, spans: &[Span]) -> bool {
    if gap == gaps.len() {
        return layout_realizes(g, layout);
    }
    let mut items = gaps[gap].clone();
    let base = gap as u32 * layout.width() + 1;
    for_each_permutation(&mut items, 0, &mut |perm| {
        for (idx, &(v, is_start)) in perm.iter().enumerate() {
            if matches!(spans[v], Span::All) && !is_start {
                let start_idx = perm.iter().position(|&(w, s)| w == v && s).expect("both ends");
                if start_idx < idx {
                    return false;
                }
            }
        }
        for (idx, &(v, is_start)) in perm.iter().enumerate() {
            let c = base + idx as u32;
            if is_start {
                layout.a[v] = c;
            } else {
                layout.b[v] = c;
            }
        }
        arrange_gaps(g, gaps, gap + 1, layout, spans)
    })
}

fn layout_realizes(g: &Digraph, layout: &Layout) -> bool {
    let n = g.n();
    let sets: Vec<u128> = (0..n).map(|v| layout.samples(layout.a[v], layout.b[v])).collect();
    for u in 0..n {
        for v in 0..n {
            let caught = sets[u] >> (2 * layout.point(v)) & 1 == 1;
            if caught != (u == v || g.has_edge(u, v)) {
                return false;
            }
            if u != v && sets[u] != sets[v] && sets[u] & !sets[v] == 0 {
                return false;
            }
        }
    }
    true
}

/// Decides whether a symmetric graph has a round orientation, componentwise.
///
/// A circular order with an orientation is round when every vertex's
/// in-neighbours immediately precede it and its out-neighbours immediately
/// follow it (either side may be empty), and every edge `v_i -> v_j` spans a
/// segment `v_i, ..., v_j` inducing a transitive tournament.
pub fn round_enumeration_oracle(u: &Digraph) -> Result<bool> {
    if !u.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    if u.n() > ROUND_MAX_N {
        return Err(Error::TooLarge { what: "round oracle", max: ROUND_MAX_N, got: u.n() });
    }
    for comp in u.components() {
        let h = u.induced(&comp)?;
        if !round_connected(&h) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn round_connected(h: &Digraph) -> bool {
    let k = h.n();
    if k <= 2 {
        return true;
    }
    for_each_circular_order(k, &mut |order| round_with_order(h, order))
}

fn round_with_order(h: &Digraph, order: &[usize]) -> bool {
    let k = order.len();
    let adj = |i: usize, j: usize| h.has_edge(order[i], order[j]);
    // possible out-run lengths per position
    let mut options: Vec<Vec<usize>> = Vec::with_capacity(k);
    for i in 0..k {
        let offsets: Vec<bool> = (0..k).map(|d| d != 0 && adj(i, (i + d) % k)).collect();
        let d_i = offsets.iter().filter(|&&b| b).count();
        if d_i == k - 1 {
            options.push((0..k).collect());
            continue;
        }
        let r = (1..k).take_while(|&d| offsets[d]).count();
        let l = d_i - r;
        if (k - l..k).all(|d| offsets[d]) {
            options.push(vec![r]);
        } else {
            return false;
        }
    }
    let mut r = vec![0; k];
    assign_runs(h, order, &options, 0, &mut r)
}

fn assign_runs(h: &Digraph, order: &[usize], options: &[Vec<usize>], p: usize, r: &mut [usize]) -> bool {
    let k = order.len();
    if p == k {
        return segments_transitive(h, order, r);
    }
    'next: for &choice in &options[p] {
        r[p] = choice;
        for q in 0..p {
            if !h.has_edge(order[q], order[p]) {
                continue;
            }
            let d = p - q;
            let q_to_p = d <= r[q];
            let p_to_q = k - d <= r[p];
            if q_to_p == p_to_q {
                continue 'next;
            }
        }
        if assign_runs(h, order, options, p + 1, r) {
            return true;
        }
    }
    false
}

fn segments_transitive(h: &Digraph, order: &[usize], r: &[usize]) -> bool {
    let k = order.len();
    let arc = |i: usize, j: usize| {
        let d = (j + k - i) % k;
        d != 0 && d <= r[i] && h.has_edge(order[i], order[j])
    };
    for i in 0..k {
        for d in 2..=r[i] {
            let seg: Vec<usize> = (0..=d).map(|t| (i + t) % k).collect();
            for (x, &a) in seg.iter().enumerate() {
                for &b in &seg[x + 1..] {
                    if !(arc(a, b) || arc(b, a)) {
                        return false;
                    }
                }
            }
            for &a in &seg {
                for &b in &seg {
                    for &c in &seg {
                        if arc(a, b) && arc(b, c) && arc(c, a) {
                            return false;
                        }
                    }
                }
            }
        }
    }
    true
}
