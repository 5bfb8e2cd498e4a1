use rand::seq::SliceRandom;
use rand::Rng;

use super::{LogConnection, Matrix2};
use crate::field::{FieldElement, GaloisField};
use crate::poly::Poly;
use crate::ratfunc::RatFunc;

fn random_poly(rng: &mut impl Rng, field: &'static GaloisField, max_degree: usize) -> Poly {
    let len = rng.gen_range(0..=max_degree + 1);
    let p = field.characteristic() as i64;
    Poly::from_ints(
        field,
        &(0..len).map(|_| rng.gen_range(0..p)).collect::<Vec<_>>(),
    )
}

/// A random logarithmic entry: random numerator over the product of a random
/// subset of `(t - P_i)`.
fn random_log_entry(
    rng: &mut impl Rng,
    field: &'static GaloisField,
    points: &[FieldElement],
) -> RatFunc {
    let poles: Vec<FieldElement> = points
        .iter()
        .copied()
        .filter(|_| rng.gen_bool(0.6))
        .collect();
    let den = Poly::from_roots(field, &poles);
    let num = random_poly(rng, field, poles.len() + 1);
    RatFunc::new(num, den).expect("product of linear factors is nonzero")
}

/// A random connection over `F_p` with 1 to `max_points` marked points,
/// simple poles at random subsets of them, and a random splitting type.
pub fn random_connection(
    rng: &mut impl Rng,
    field: &'static GaloisField,
    max_points: usize,
) -> LogConnection {
    let mut all: Vec<FieldElement> = field.elements().collect();
    all.shuffle(rng);
    let r = rng.gen_range(1..=max_points.min(all.len()));
    let points: Vec<FieldElement> = all.into_iter().take(r).collect();
    let matrix: Matrix2<RatFunc> =
        [0, 1].map(|_| [0, 1].map(|_| random_log_entry(rng, field, &points)));
    let b = rng.gen_range(-2..=1);
    let a = b + rng.gen_range(0..=3);
    LogConnection::new(points, matrix, (a, b)).expect("random entries are logarithmic")
}

/// A random scalar function with at most simple poles at the marked points.
pub fn random_scalar_twist(rng: &mut impl Rng, conn: &LogConnection) -> RatFunc {
    random_log_entry(rng, conn.field(), conn.points())
}
