use std::collections::HashMap;

use super::{degree_of, triple_admissible, CountScalar, Profile};

/// Memoized evaluator of the degree recursion. The memo is keyed by the
/// ordered index sequence and may be reused across profiles with the same `p`.
pub struct RecursiveCounter<C> {
    p: u32,
    memo: HashMap<Vec<u32>, C>,
}

impl<C: CountScalar> RecursiveCounter<C> {
    pub fn new(p: u32) -> Self {
        RecursiveCounter {
            p,
            memo: HashMap::new(),
        }
    }

    pub fn count(&mut self, profile: &Profile) -> C {
        assert_eq!(profile.p(), self.p, "counter built for a different prime");
        self.eval(profile.indices())
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    // Internal sequences may carry a last index >= p; such entries can never
    // sit in an admissible triple and contribute 0 at the base.
    fn eval(&mut self, seq: &[u32]) -> C {
        let n = seq.len();
        if n == 3 {
            return if triple_admissible(seq[0], seq[1], seq[2], self.p) {
                C::one()
            } else {
                C::zero()
            };
        }
        if let Some(v) = self.memo.get(seq) {
            return v.clone();
        }
        let d = degree_of(seq) as i64;
        let (e1, e2) = (seq[n - 2] as i64, seq[n - 1] as i64);
        let lo = (d - e1 + 1).max(d - e2 + 1);
        let hi = d.min(self.p as i64 + d - e1 - e2);
        let mut total = C::zero();
        let mut next: Vec<u32> = seq[..n - 2].to_vec();
        next.push(0);
        for d_prime in lo..=hi {
            let e = 2 * d_prime - 2 * d + e1 + e2 - 1;
            if e < 1 {
                continue;
            }
            *next.last_mut().unwrap() = e as u32;
            total = total + self.eval(&next);
        }
        self.memo.insert(seq.to_vec(), total.clone());
        total
    }
}

/// The count via the degree recursion, summing over
/// `max(d - e_{n-1} + 1, d - e_n + 1) <= d' <= min(d, p + d - e_{n-1} - e_n)`
/// with new last index `e = 2d' - 2d + e_{n-1} + e_n - 1`.
pub fn n_gen_recursive<C: CountScalar>(profile: &Profile) -> C {
    RecursiveCounter::new(profile.p()).count(profile)
}
