//! Seeded random catch representations.

use rand::seq::index::sample;
use rand::Rng;

use crate::representation::{CatchRepresentation, Rational};

fn half(x: i64) -> Rational {
    Rational::new(x, 2)
}

/// Random representation on `n` vertices with half-integer positions on a circle of length `4n`.
pub fn random_representation<R: Rng>(rng: &mut R, n: usize) -> CatchRepresentation {
    let slots = 8 * n as i64;
    let points: Vec<i64> = sample(rng, slots as usize, n).into_iter().map(|x| x as i64).collect();
    let triples: Vec<_> = points
        .iter()
        .map(|&p| {
            let back = rng.gen_range(0..slots / 2);
            let fwd = rng.gen_range(0..slots / 2);
            let a = (p - back).rem_euclid(slots);
            let b = (p + fwd).rem_euclid(slots);
            (half(a), half(b), half(p))
        })
        .collect();
    CatchRepresentation::from_triples(half(slots), &triples).expect("points distinct and inside their arcs")
}

/// Random proper representation on `n` vertices.
///
/// Starts and ends are drawn as two increasing sequences so that no arc
/// strictly contains another; `max_len` bounds each arc's length in slots.
pub fn random_proper_representation<R: Rng>(rng: &mut R, n: usize, max_len: i64) -> CatchRepresentation {
    let slots = 8 * n as i64;
    let max_len = max_len.clamp(1, slots - 1);
    loop {
        let mut starts: Vec<i64> = sample(rng, slots as usize, n).into_iter().map(|x| x as i64).collect();
        starts.sort_unstable();
        let mut ends = Vec::with_capacity(n);
        let mut ok = true;
        let mut prev_end = i64::MIN;
        for &a in &starts {
            let lo = a.max(prev_end + 1);
            let hi = a + max_len;
            if lo > hi {
                ok = false;
                break;
            }
            let e = rng.gen_range(lo..=hi);
            ends.push(e);
            prev_end = e;
        }
        if !ok || ends[n - 1] >= ends[0] + slots {
            continue;
        }
        let mut points = Vec::with_capacity(n);
        for (&a, &e) in starts.iter().zip(&ends) {
            points.push(rng.gen_range(a..=e).rem_euclid(slots));
        }
        let mut sorted = points.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != n {
            continue;
        }
        let triples: Vec<_> = (0..n)
            .map(|i| (half(starts[i]), half(ends[i].rem_euclid(slots)), half(points[i])))
            .collect();
        let rep = CatchRepresentation::from_triples(half(slots), &triples).expect("valid by construction");
        if rep.is_proper() {
            return rep;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn generators_produce_valid_representations() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 1..=8 {
            let r = random_representation(&mut rng, n);
            assert_eq!(r.n(), n);
            let p = random_proper_representation(&mut rng, n, 6);
            assert!(p.is_proper());
        }
    }
}
