//! Exact characteristic-`p` computations around tame self-maps of the
//! projective line and rank-2 logarithmic connections.
//!
//! * [`field`], [`poly`], [`ratfunc`], [`moebius`]: arithmetic in `F_{p^k}`,
//!   polynomials, rational functions and `PGL_2` acting on `P^1`.
//! * [`connection`]: residues, radii, p-curvature, dormancy, Kodaira–Spencer
//!   data and level of a connection `d/dt + A(t)`.
//! * [`census`]: brute-force enumeration of maps `P^1 -> P^1` with prescribed
//!   tame ramification, counted up to automorphisms of the target.
//! * [`count`]: the recursive count of such maps, the equivalent chain
//!   dynamic program, parity variants and closed-form dormant counts.

pub mod census;
pub mod connection;
pub mod count;
pub mod error;
pub mod field;
pub mod moebius;
pub mod poly;
pub mod ratfunc;

pub use error::AlgebraError;
pub use field::{field_inverse, FieldElement, GaloisField};
pub use moebius::{moebius_conjugate, Moebius, Side};
pub use poly::{poly_gcd, Poly};
pub use ratfunc::{proj_eval, PointLabel, ProjPoint, RatFunc};

/// Exact count type used throughout; every counting routine is generic over
/// [`count::CountScalar`], this is the default instantiation.
pub type Count = num_bigint::BigUint;
/// Fixed-width count for hot loops where overflow is impossible.
pub type SmallCount = u64;
