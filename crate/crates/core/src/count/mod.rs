//! Counting tame self-maps of `P^1` with prescribed ramification.
//!
//! `N(e_1, ..., e_n)` counts separable maps of degree
//! `d = (sum (e_i - 1) + 2) / 2` ramified to order `e_i` at `n` general
//! points, modulo automorphisms of the target. It is computed two ways:
//!
//! * [`n_gen_recursive`]: peel off `e_{n-1}, e_n`, sum over the degree `d'`
//!   of the remaining piece, down to the three-point base case.
//! * [`n_gen_chain`]: count insertion chains
//!   `(e_1, e_2, x_1, e_3, x_2, ..., x_{n-3}, e_{n-1}, e_n)` whose component
//!   triples are all admissible, i.e. assignments of radii to the nodes of a
//!   chain of three-pointed lines.

mod chain;
mod closed_form;
mod parity;
mod recursive;

pub use chain::{enumerate_chains, n_gen_chain, n_gen_chain_enumerated, InsertionChain};
pub use closed_form::{dormant_3pt_count, genus2_frobenius_count, selfmap_total};
pub use parity::{parity_variants, RadiusIndexPair};
pub use recursive::{n_gen_recursive, RecursiveCounter};

use std::fmt;
use std::ops::Add;

use num_traits::{FromPrimitive, One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::field::is_prime;

/// Exact counts: anything with `0`, `1`, `+` and conversion from machine
/// integers. Implemented for `u64`, `u128` and `BigUint`.
pub trait CountScalar:
    Clone + Zero + One + Add<Output = Self> + FromPrimitive + PartialEq + fmt::Debug
{
}

impl<T> CountScalar for T where
    T: Clone + Zero + One + Add<Output = T> + FromPrimitive + PartialEq + fmt::Debug
{
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CountError {
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("a profile needs at least 3 indices, got {0}")]
    TooFewIndices(usize),
    #[error("index {index} at position {position} is outside [1, p - 1] for p = {p}")]
    IndexOutOfRange { index: u32, position: usize, p: u32 },
    #[error("profile violates Riemann-Hurwitz parity: sum of (e_i - 1) is {0}, which is odd")]
    OddRamification(u64),
    #[error("index {index} at position {position} is even and has no radius")]
    EvenIndex { index: u32, position: usize },
    #[error("radius {rho} is outside (0, p/2) for p = {p}")]
    RadiusOutOfRange { rho: u32, p: u32 },
    #[error("index {index} must be odd with 1 <= e <= p - 2 for p = {p}")]
    IndexHasNoRadius { index: u32, p: u32 },
    #[error("need at least 3 marked points, got {0}")]
    TooFewPoints(u32),
}

/// A ramification profile `(e_1, ..., e_n)` for the prime `p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Profile {
    p: u32,
    indices: Vec<u32>,
}

impl Profile {
    /// Requires `p` an odd prime, `n >= 3`, `1 <= e_i < p` and
    /// `sum (e_i - 1)` even.
    pub fn new(p: u32, indices: Vec<u32>) -> Result<Profile, CountError> {
        if p == 2 || !is_prime(p as u64) {
            return Err(CountError::NotOddPrime(p as u64));
        }
        if indices.len() < 3 {
            return Err(CountError::TooFewIndices(indices.len()));
        }
        if let Some((position, &index)) =
            indices.iter().enumerate().find(|(_, &e)| e == 0 || e >= p)
        {
            return Err(CountError::IndexOutOfRange { index, position, p });
        }
        let excess: u64 = indices.iter().map(|&e| e as u64 - 1).sum();
        if excess % 2 == 1 {
            return Err(CountError::OddRamification(excess));
        }
        Ok(Profile { p, indices })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn indices(&self) -> &[u32] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    /// `d = (sum (e_i - 1) + 2) / 2`.
    pub fn degree(&self) -> u64 {
        degree_of(&self.indices)
    }
}

impl fmt::Display for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.indices.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

pub(crate) fn degree_of(indices: &[u32]) -> u64 {
    (indices.iter().map(|&e| e as u64 - 1).sum::<u64>() + 2) / 2
}

/// A three-pointed component is admissible iff its indices satisfy the
/// strict triangle inequality and their sum is odd and below `2p + 1`.
///
/// Equivalently, with `d = (e + e' + e'' - 1) / 2`: `d` is an integer,
/// every index is at most `d`, and `p > d`.
pub fn triple_admissible(e: u32, e2: u32, e3: u32, p: u32) -> bool {
    let s = e as u64 + e2 as u64 + e3 as u64;
    let twice_max = 2 * e.max(e2).max(e3) as u64;
    twice_max < s && s % 2 == 1 && s < 2 * p as u64 + 1
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triple_examples() {
        assert!(triple_admissible(3, 3, 3, 7));
        assert!(!triple_admissible(3, 1, 1, 5));
        assert!(!triple_admissible(3, 3, 5, 5));
        assert!(triple_admissible(1, 1, 1, 3));
        assert!(!triple_admissible(2, 2, 2, 7)); // even sum
    }

    #[test]
    fn triple_matches_base_case_reading() {
        for p in [3u32, 5, 7, 11] {
            for a in 1..2 * p {
                for b in 1..2 * p {
                    for c in 1..2 * p {
                        let s = a + b + c;
                        let base = s % 2 == 1 && {
                            let d = (s - 1) / 2;
                            a <= d && b <= d && c <= d && p > d
                        };
                        assert_eq!(triple_admissible(a, b, c, p), base, "({a},{b},{c}) p={p}");
                    }
                }
            }
        }
    }

    #[test]
    fn profile_validation() {
        assert_eq!(Profile::new(7, vec![3, 3, 3]).unwrap().degree(), 4);
        assert_eq!(
            Profile::new(9, vec![3, 3, 3]).unwrap_err(),
            CountError::NotOddPrime(9)
        );
        assert_eq!(
            Profile::new(5, vec![3, 3]).unwrap_err(),
            CountError::TooFewIndices(2)
        );
        assert_eq!(
            Profile::new(5, vec![3, 3, 5]).unwrap_err(),
            CountError::IndexOutOfRange {
                index: 5,
                position: 2,
                p: 5
            }
        );
        assert_eq!(
            Profile::new(5, vec![2, 2, 2]).unwrap_err(),
            CountError::OddRamification(3)
        );
    }

    mod props {
        use super::super::*;
        use crate::Count;
        use proptest::prelude::*;

        fn profile_strategy() -> impl Strategy<Value = Profile> {
            (prop::sample::select(vec![3u32, 5, 7, 11]), 3usize..=7)
                .prop_flat_map(|(p, n)| (Just(p), prop::collection::vec(1..p, n)))
                .prop_filter_map("parity", |(p, e)| Profile::new(p, e).ok())
        }

        proptest! {
            #[test]
            fn methods_agree(pr in profile_strategy()) {
                let r: Count = n_gen_recursive(&pr);
                prop_assert_eq!(&r, &n_gen_chain::<Count>(&pr));
                prop_assert_eq!(&r, &n_gen_chain_enumerated::<Count>(&pr));
            }

            #[test]
            fn order_of_marked_points_is_irrelevant(pr in profile_strategy(), seed in any::<u64>()) {
                use rand::seq::SliceRandom;
                use rand::SeedableRng;
                let mut e = pr.indices().to_vec();
                e.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
                let shuffled = Profile::new(pr.p(), e).unwrap();
                prop_assert_eq!(n_gen_chain::<u64>(&pr), n_gen_chain::<u64>(&shuffled));
            }

            #[test]
            fn nonzero_counts_respect_index_bound(pr in profile_strategy()) {
                if n_gen_chain::<u64>(&pr) > 0 {
                    let d = pr.degree();
                    prop_assert!(pr.indices().iter().all(|&e| e as u64 <= d));
                }
            }
        }
    }
}
