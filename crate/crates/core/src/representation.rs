use std::fmt;

use num_rational::Ratio;
use num_traits::{Signed, Zero};

use crate::digraph::Digraph;
use crate::error::{Error, Result};

pub type Rational = Ratio<i64>;

/// Parses `"3"`, `"-2/5"` or `"5.875"` into an exact rational.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid rational `{s}`"));
    if let Some((num, den)) = s.split_once('/') {
        let num: i64 = num.trim().parse().map_err(|_| bad())?;
        let den: i64 = den.trim().parse().map_err(|_| bad())?;
        if den == 0 {
            return Err(bad());
        }
        return Ok(Rational::new(num, den));
    }
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s.strip_prefix('+').unwrap_or(s)),
    };
    let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad());
    }
    let digits_ok = |p: &str| p.chars().all(|c| c.is_ascii_digit());
    if !digits_ok(int_part) || !digits_ok(frac_part) || frac_part.len() > 15 {
        return Err(bad());
    }
    let int: i64 = if int_part.is_empty() { 0 } else { int_part.parse().map_err(|_| bad())? };
    let den = 10i64.pow(frac_part.len() as u32);
    let frac: i64 = if frac_part.is_empty() { 0 } else { frac_part.parse().map_err(|_| bad())? };
    let num = int.checked_mul(den).and_then(|x| x.checked_add(frac)).ok_or_else(bad)?;
    let r = Rational::new(num, den);
    Ok(if neg { -r } else { r })
}

/// Always `num/den`, with the denominator printed even when it is 1.
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn rational_to_f64(r: &Rational) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

/// A position on a circle of circumference `circumference`, with `0 <= value < circumference`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CirclePos {
    value: Rational,
    circumference: Rational,
}

impl CirclePos {
    pub fn new(value: Rational, circumference: Rational) -> Result<Self> {
        if !circumference.is_positive() || value.is_negative() || value >= circumference {
            return Err(Error::PositionOutOfRange {
                value: format_rational(&value),
                circumference: format_rational(&circumference),
            });
        }
        Ok(Self { value, circumference })
    }

    pub fn value(&self) -> Rational {
        self.value
    }

    pub fn circumference(&self) -> Rational {
        self.circumference
    }

    /// Clockwise distance from `origin` to `self`, in `[0, L)`.
    fn offset_from(&self, origin: Rational) -> Rational {
        let d = self.value - origin;
        if d.is_negative() {
            d + self.circumference
        } else {
            d
        }
    }

    /// Shifted clockwise by `delta` modulo the circumference.
    pub fn shifted(&self, delta: Rational) -> Self {
        let l = self.circumference;
        let mut v = (self.value + delta) % l;
        if v.is_negative() {
            v += l;
        }
        Self { value: v, circumference: l }
    }
}

impl fmt::Display for CirclePos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_rational(&self.value))
    }
}

/// Closed clockwise arc from `a` to `b`; `a == b` is the single point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CircularArc {
    a: CirclePos,
    b: CirclePos,
}

impl CircularArc {
    pub fn new(a: CirclePos, b: CirclePos) -> Result<Self> {
        if a.circumference != b.circumference {
            return Err(Error::CircumferenceMismatch(
                format_rational(&a.circumference),
                format_rational(&b.circumference),
            ));
        }
        Ok(Self { a, b })
    }

    pub fn a(&self) -> CirclePos {
        self.a
    }

    pub fn b(&self) -> CirclePos {
        self.b
    }

    /// Clockwise length from `a` to `b`.
    pub fn length(&self) -> Rational {
        self.b.offset_from(self.a.value)
    }

    pub fn contains(&self, p: &CirclePos) -> Result<bool> {
        if p.circumference != self.a.circumference {
            return Err(Error::CircumferenceMismatch(
                format_rational(&self.a.circumference),
                format_rational(&p.circumference),
            ));
        }
        Ok(self.contains_unchecked(p.value))
    }

    fn contains_unchecked(&self, p: Rational) -> bool {
        let (a, b) = (self.a.value, self.b.value);
        if a <= b {
            a <= p && p <= b
        } else {
            p >= a || p <= b
        }
    }

    /// Point-set inclusion `self ⊆ other`.
    pub fn is_subset_of(&self, other: &CircularArc) -> bool {
        self.a.offset_from(other.a.value) + self.length() <= other.length()
    }

    pub fn shifted(&self, delta: Rational) -> Self {
        Self { a: self.a.shifted(delta), b: self.b.shifted(delta) }
    }
}

/// Membership test with endpoints inclusive.
pub fn arc_contains(arc: &CircularArc, p: &CirclePos) -> Result<bool> {
    arc.contains(p)
}

/// Per-vertex arc and point on a circle with an explicit circumference.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatchRepresentation {
    circumference: Rational,
    arcs: Vec<CircularArc>,
    points: Vec<CirclePos>,
}

impl CatchRepresentation {
    /// Validates that each point lies in its own arc and that points are distinct.
    pub fn new(circumference: Rational, arcs: Vec<CircularArc>, points: Vec<CirclePos>) -> Result<Self> {
        if arcs.len() != points.len() {
            return Err(Error::Construction(format!("{} arcs but {} points", arcs.len(), points.len())));
        }
        if arcs.is_empty() {
            return Err(Error::EmptyGraph);
        }
        for (v, (arc, p)) in arcs.iter().zip(&points).enumerate() {
            for pos in [arc.a, arc.b, *p] {
                if pos.circumference != circumference {
                    return Err(Error::CircumferenceMismatch(
                        format_rational(&circumference),
                        format_rational(&pos.circumference),
                    ));
                }
            }
            if !arc.contains_unchecked(p.value) {
                return Err(Error::PointOutsideArc(v));
            }
        }
        let mut sorted: Vec<(Rational, usize)> = points.iter().enumerate().map(|(v, p)| (p.value, v)).collect();
        sorted.sort();
        for w in sorted.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(Error::SharedPoint(w[0].1, w[1].1));
            }
        }
        Ok(Self { circumference, arcs, points })
    }

    /// Builds from raw `(a, b, p)` triples.
    pub fn from_triples(circumference: Rational, triples: &[(Rational, Rational, Rational)]) -> Result<Self> {
        let mut arcs = Vec::with_capacity(triples.len());
        let mut points = Vec::with_capacity(triples.len());
        for &(a, b, p) in triples {
            arcs.push(CircularArc::new(CirclePos::new(a, circumference)?, CirclePos::new(b, circumference)?)?);
            points.push(CirclePos::new(p, circumference)?);
        }
        Self::new(circumference, arcs, points)
    }

    pub fn n(&self) -> usize {
        self.arcs.len()
    }

    pub fn circumference(&self) -> Rational {
        self.circumference
    }

    pub fn arcs(&self) -> &[CircularArc] {
        &self.arcs
    }

    pub fn points(&self) -> &[CirclePos] {
        &self.points
    }

    pub fn arc(&self, v: usize) -> &CircularArc {
        &self.arcs[v]
    }

    pub fn point(&self, v: usize) -> &CirclePos {
        &self.points[v]
    }

    pub fn catches(&self, u: usize, v: usize) -> bool {
        u != v && self.arcs[u].contains_unchecked(self.points[v].value)
    }

    /// Digraph with `u -> v` iff `u != v` and `p_v ∈ I_u`.
    pub fn realize(&self) -> Digraph {
        let n = self.n();
        let mut g = Digraph::empty(n).expect("n >= 1");
        for u in 0..n {
            for v in 0..n {
                if self.catches(u, v) {
                    g.set_edge(u, v, true).expect("valid edge");
                }
            }
        }
        g
    }

    /// Ordered pairs `(u, v, expected, realized)` where the two digraphs disagree.
    pub fn mismatched_edges(&self, g: &Digraph) -> Result<Vec<(usize, usize, bool, bool)>> {
        if g.n() != self.n() {
            return Err(Error::SizeMismatch { rep: self.n(), graph: g.n() });
        }
        let mut out = Vec::new();
        for u in 0..g.n() {
            for v in 0..g.n() {
                if u != v && g.has_edge(u, v) != self.catches(u, v) {
                    out.push((u, v, g.has_edge(u, v), self.catches(u, v)));
                }
            }
        }
        Ok(out)
    }

    /// Realizes exactly `g`.
    pub fn verify(&self, g: &Digraph) -> bool {
        self.mismatched_edges(g).map(|m| m.is_empty()).unwrap_or(false)
    }

    /// No arc is a proper subset of another.
    pub fn is_proper(&self) -> bool {
        self.proper_violation().is_none()
    }

    /// A pair `(inner, outer)` with `I_inner ⊊ I_outer`, if any.
    pub fn proper_violation(&self) -> Option<(usize, usize)> {
        for (u, x) in self.arcs.iter().enumerate() {
            for (v, y) in self.arcs.iter().enumerate() {
                if u != v && x != y && x.is_subset_of(y) {
                    return Some((u, v));
                }
            }
        }
        None
    }

    /// Every position shifted clockwise by `delta`.
    pub fn rotated(&self, delta: Rational) -> Self {
        Self {
            circumference: self.circumference,
            arcs: self.arcs.iter().map(|a| a.shifted(delta)).collect(),
            points: self.points.iter().map(|p| p.shifted(delta)).collect(),
        }
    }

    /// Vertices sorted by the position of their points.
    pub fn point_order(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.n()).collect();
        order.sort_by_key(|&v| self.points[v].value);
        order
    }
}

/// Constructs a rational, panicking on a zero denominator.
pub fn rat(num: i64, den: i64) -> Rational {
    assert!(!den.is_zero(), "zero denominator");
    Rational::new(num, den)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pos(s: &str, l: i64) -> CirclePos {
        CirclePos::new(parse_rational(s).unwrap(), Rational::from_integer(l)).unwrap()
    }

    fn arc(a: &str, b: &str, l: i64) -> CircularArc {
        CircularArc::new(pos(a, l), pos(b, l)).unwrap()
    }

    #[test]
    fn parses_rationals() {
        assert_eq!(parse_rational("5.9").unwrap(), rat(59, 10));
        assert_eq!(parse_rational("-2/4").unwrap(), rat(-1, 2));
        assert_eq!(parse_rational("7").unwrap(), rat(7, 1));
        assert_eq!(parse_rational(".5").unwrap(), rat(1, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
        assert!(parse_rational("").is_err());
        assert_eq!(format_rational(&rat(6, 1)), "6/1");
    }

    #[test]
    fn containment_examples() {
        assert!(arc("5.9", "2", 7).contains(&pos("1", 7)).unwrap());
        assert!(arc("3", "6", 7).contains(&pos("5", 7)).unwrap());
        assert!(!arc("3", "6", 7).contains(&pos("2", 7)).unwrap());
        let single = arc("3", "3", 7);
        assert!(single.contains(&pos("3", 7)).unwrap());
        assert!(!single.contains(&pos("4", 7)).unwrap());
        assert!(arc("3", "6", 7).contains(&pos("1", 8)).is_err());
    }

    #[test]
    fn subset_handles_wrapping() {
        assert!(arc("2", "3", 10).is_subset_of(&arc("1", "4", 10)));
        assert!(!arc("1", "4", 10).is_subset_of(&arc("2", "3", 10)));
        assert!(!arc("4", "1", 10).is_subset_of(&arc("0", "5", 10)));
        assert!(arc("9", "1", 10).is_subset_of(&arc("8", "2", 10)));
        assert!(arc("9", "1", 10).is_subset_of(&arc("9", "1", 10)));
    }

    #[test]
    fn proper_examples() {
        let l = Rational::from_integer(10);
        let r = CatchRepresentation::from_triples(l, &[(rat(1, 1), rat(3, 1), rat(2, 1)), (rat(2, 1), rat(4, 1), rat(3, 1))]).unwrap();
        assert!(r.is_proper());
        let r = CatchRepresentation::from_triples(l, &[(rat(1, 1), rat(4, 1), rat(2, 1)), (rat(2, 1), rat(3, 1), rat(3, 1))]).unwrap();
        assert!(!r.is_proper());
    }

    #[test]
    fn validation_errors() {
        let l = Rational::from_integer(10);
        let outside = CatchRepresentation::from_triples(l, &[(rat(1, 1), rat(3, 1), rat(5, 1))]);
        assert_eq!(outside, Err(Error::PointOutsideArc(0)));
        let shared = CatchRepresentation::from_triples(l, &[(rat(1, 1), rat(3, 1), rat(2, 1)), (rat(1, 1), rat(3, 1), rat(2, 1))]);
        assert_eq!(shared, Err(Error::SharedPoint(0, 1)));
        assert!(CirclePos::new(rat(10, 1), l).is_err());
    }

    #[test]
    fn single_vertex_realizes_edgeless() {
        let r = CatchRepresentation::from_triples(rat(2, 1), &[(rat(1, 1), rat(1, 1), rat(1, 1))]).unwrap();
        assert_eq!(r.realize(), Digraph::empty(1).unwrap());
    }
}
