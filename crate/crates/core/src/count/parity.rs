use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::{CountError, Profile};

/// All profiles obtained by replacing `e_i` with `p - e_i` on an
/// even-size subset of positions. Every index must be odd.
pub fn parity_variants(profile: &Profile) -> Result<BTreeSet<Profile>, CountError> {
    let p = profile.p();
    let e = profile.indices();
    if let Some((position, &index)) = e.iter().enumerate().find(|(_, &x)| x % 2 == 0) {
        return Err(CountError::EvenIndex { index, position });
    }
    let n = e.len();
    let mut out = BTreeSet::new();
    for mask in 0u64..(1u64 << n) {
        if mask.count_ones() % 2 == 1 {
            continue;
        }
        let indices = (0..n)
            .map(|i| if mask >> i & 1 == 1 { p - e[i] } else { e[i] })
            .collect();
        out.insert(Profile::new(p, indices)?);
    }
    Ok(out)
}

/// A radius `rho` in `(0, p/2)` and its odd ramification index `p - 2 rho`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RadiusIndexPair {
    pub p: u32,
    pub rho: u32,
    pub index: u32,
}

impl RadiusIndexPair {
    pub fn from_radius(rho: u32, p: u32) -> Result<Self, CountError> {
        if rho == 0 || 2 * rho >= p {
            return Err(CountError::RadiusOutOfRange { rho, p });
        }
        Ok(RadiusIndexPair {
            p,
            rho,
            index: p - 2 * rho,
        })
    }

    pub fn from_index(index: u32, p: u32) -> Result<Self, CountError> {
        if index.is_multiple_of(2) || index + 2 > p {
            return Err(CountError::IndexHasNoRadius { index, p });
        }
        Ok(RadiusIndexPair {
            p,
            rho: (p - index) / 2,
            index,
        })
    }

    /// The even index `2 rho = p - e` used by parity replacement.
    pub fn partner(&self) -> u32 {
        2 * self.rho
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn variants_of_three_threes() {
        let v = parity_variants(&Profile::new(5, vec![3, 3, 3]).unwrap()).unwrap();
        let got: Vec<Vec<u32>> = v.iter().map(|p| p.indices().to_vec()).collect();
        assert_eq!(
            got,
            vec![vec![2, 2, 3], vec![2, 3, 2], vec![3, 2, 2], vec![3, 3, 3]]
        );
    }

    #[test]
    fn cardinality_doubles() {
        for n in 3..=8 {
            let pr = Profile::new(7, vec![3; n]).unwrap();
            assert_eq!(parity_variants(&pr).unwrap().len(), 1 << (pr.len() - 1));
        }
        for n in 3..=8 {
            // mixed entries so no two subsets collide
            let mut idx: Vec<u32> = (0..n).map(|i| [1, 3, 5, 7, 9][i % 5]).collect();
            if idx.iter().map(|e| e - 1).sum::<u32>() % 2 == 1 {
                idx[0] = 1;
            }
            let pr = Profile::new(23, idx).unwrap();
            assert_eq!(parity_variants(&pr).unwrap().len(), 1 << (n - 1), "n = {n}");
        }
    }

    #[test]
    fn identity_variant_present() {
        let pr = Profile::new(11, vec![5, 3, 7, 9]).unwrap();
        assert!(parity_variants(&pr).unwrap().contains(&pr));
    }

    #[test]
    fn even_entry_rejected() {
        let pr = Profile::new(5, vec![2, 2, 3]).unwrap();
        assert_eq!(
            parity_variants(&pr).unwrap_err(),
            CountError::EvenIndex {
                index: 2,
                position: 0
            }
        );
    }

    #[test]
    fn radius_conversion() {
        assert_eq!(RadiusIndexPair::from_radius(1, 5).unwrap().index, 3);
        assert_eq!(RadiusIndexPair::from_index(3, 7).unwrap().rho, 2);
        assert!(RadiusIndexPair::from_index(2, 5).is_err());
        assert!(RadiusIndexPair::from_index(5, 5).is_err());
        assert!(RadiusIndexPair::from_radius(3, 5).is_err());
        assert!(RadiusIndexPair::from_radius(0, 5).is_err());
        for p in [3u32, 5, 7, 11, 13] {
            for rho in 1..=(p - 1) / 2 {
                let pair = RadiusIndexPair::from_radius(rho, p).unwrap();
                assert_eq!(RadiusIndexPair::from_index(pair.index, p).unwrap(), pair);
                assert_eq!(pair.partner(), p - pair.index);
            }
        }
    }
}
