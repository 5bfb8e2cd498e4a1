use num_bigint::BigUint;

use super::CountError;
use crate::field::is_prime;
use crate::Count;

fn check_prime(p: u64) -> Result<(), CountError> {
    if p == 2 || !is_prime(p) {
        return Err(CountError::NotOddPrime(p));
    }
    Ok(())
}

fn p_cubed_minus_p(p: u64) -> Count {
    let p = BigUint::from(p);
    &p * &p * &p - &p
}

/// Dormant indigenous bundles on a general three-pointed line: `(p^3 - p) / 24`.
pub fn dormant_3pt_count(p: u64) -> Result<Count, CountError> {
    check_prime(p)?;
    Ok(p_cubed_minus_p(p) / 24u32)
}

/// Frobenius-unstable bundles on a general genus-2 curve: `2 (p^3 - p) / 3`.
/// Panics if this ever differs from sixteen times the three-point count.
pub fn genus2_frobenius_count(p: u64) -> Result<Count, CountError> {
    let three_point = dormant_3pt_count(p)?;
    let value = p_cubed_minus_p(p) * 2u32 / 3u32;
    assert_eq!(
        &three_point * 16u32,
        value,
        "genus-2 count is not 16 times the three-point count"
    );
    Ok(value)
}

/// Total number of tame self-maps over all parity variants:
/// `2^(r-1)` times the dormant count.
pub fn selfmap_total(r: u32, dormant_count: &Count) -> Result<Count, CountError> {
    if r < 3 {
        return Err(CountError::TooFewPoints(r));
    }
    Ok(dormant_count << (r as usize - 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formula_values() {
        let three: Vec<u64> = [3u64, 5, 7, 11]
            .iter()
            .map(|&p| dormant_3pt_count(p).unwrap().try_into().unwrap())
            .collect();
        assert_eq!(three, vec![1, 5, 14, 55]);
        let g2: Vec<u64> = [3u64, 5, 7]
            .iter()
            .map(|&p| genus2_frobenius_count(p).unwrap().try_into().unwrap())
            .collect();
        assert_eq!(g2, vec![16, 80, 224]);
        assert!(dormant_3pt_count(9).is_err());
        assert!(dormant_3pt_count(2).is_err());
    }

    #[test]
    fn divisibility_holds_for_many_primes() {
        for p in (3u64..2000).filter(|&p| is_prime(p)) {
            let raw = p_cubed_minus_p(p);
            assert_eq!(&raw % 24u32, BigUint::from(0u32), "p = {p}");
            genus2_frobenius_count(p).unwrap();
        }
    }

    #[test]
    fn totals() {
        assert_eq!(
            selfmap_total(3, &Count::from(5u32)).unwrap(),
            Count::from(20u32)
        );
        assert_eq!(
            selfmap_total(3, &Count::from(1u32)).unwrap(),
            Count::from(4u32)
        );
        assert_eq!(
            selfmap_total(4, &Count::from(0u32)).unwrap(),
            Count::from(0u32)
        );
        assert!(selfmap_total(2, &Count::from(1u32)).is_err());
    }
}
