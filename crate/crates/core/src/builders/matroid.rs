//! Matroids given by their independent sets, and the geometric lattice of
//! their flats.

use std::collections::HashSet;

use super::subset_label;
use super::subspace::{is_prime, rref_mod};
use crate::error::{Error, Result};
use crate::lattice::Lattice;

/// Largest ground set accepted; validation scans all pairs of subsets.
pub const MAX_GROUND: usize = 12;

/// A matroid on `{0..ground_size}` described by its independent sets, stored
/// as bit masks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatroidSpec {
    ground_size: usize,
    independents: Vec<u32>,
}

impl MatroidSpec {
    /// Validates both matroid axioms exhaustively.
    pub fn new(ground_size: usize, independents: &[Vec<usize>]) -> Result<Self> {
        if ground_size > MAX_GROUND {
            return Err(Error::TooLarge(format!(
                "ground set of {ground_size} elements (limit {MAX_GROUND})"
            )));
        }
        let mut masks = Vec::with_capacity(independents.len());
        for set in independents {
            let mut m = 0u32;
            for &e in set {
                if e >= ground_size {
                    return Err(Error::NotAMatroid(format!(
                        "element {e} outside ground set of size {ground_size}"
                    )));
                }
                m |= 1 << e;
            }
            masks.push(m);
        }
        masks.sort_unstable();
        masks.dedup();
        let spec = Self {
            ground_size,
            independents: masks,
        };
        spec.validate()?;
        Ok(spec)
    }

    /// Every subset independent; its flats form the Boolean lattice.
    pub fn free(ground_size: usize) -> Result<Self> {
        Self::from_predicate(ground_size, |_| true)
    }

    /// Subsets of size at most `rank` are independent.
    pub fn uniform(rank: usize, ground_size: usize) -> Result<Self> {
        Self::from_predicate(ground_size, |m| m.count_ones() as usize <= rank)
    }

    /// Column vectors over `F_q`; a set is independent when its vectors are
    /// linearly independent.
    pub fn linear(q: u32, vectors: &[Vec<u32>]) -> Result<Self> {
        if !is_prime(q) {
            return Err(Error::NotPrime(q));
        }
        Self::from_predicate(vectors.len(), |m| {
            let rows: Vec<Vec<u32>> = (0..vectors.len())
                .filter(|i| m >> i & 1 == 1)
                .map(|i| vectors[i].clone())
                .collect();
            rows.is_empty() || rref_mod(rows, q).len() == m.count_ones() as usize
        })
    }

    fn from_predicate(ground_size: usize, independent: impl Fn(u32) -> bool) -> Result<Self> {
        if ground_size > MAX_GROUND {
            return Err(Error::TooLarge(format!(
                "ground set of {ground_size} elements (limit {MAX_GROUND})"
            )));
        }
        let independents = (0..1u32 << ground_size)
            .filter(|&m| independent(m))
            .collect();
        let spec = Self {
            ground_size,
            independents,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn ground_size(&self) -> usize {
        self.ground_size
    }

    /// Independent sets as sorted element lists.
    pub fn independents(&self) -> Vec<Vec<usize>> {
        self.independents
            .iter()
            .map(|&m| (0..self.ground_size).filter(|i| m >> i & 1 == 1).collect())
            .collect()
    }

    fn validate(&self) -> Result<()> {
        if self.independents.is_empty() {
            return Err(Error::NotAMatroid("no independent sets".into()));
        }
        let set: HashSet<u32> = self.independents.iter().copied().collect();
        for &m in &self.independents {
            for i in 0..self.ground_size {
                if m >> i & 1 == 1 && !set.contains(&(m & !(1 << i))) {
                    return Err(Error::NotAMatroid(format!(
                        "not downward closed: {} is independent but {} is not",
                        show(m),
                        show(m & !(1 << i))
                    )));
                }
            }
        }
        for &a in &self.independents {
            for &b in &self.independents {
                if a.count_ones() >= b.count_ones() {
                    continue;
                }
                let extends = (0..self.ground_size)
                    .any(|i| b >> i & 1 == 1 && a >> i & 1 == 0 && set.contains(&(a | 1 << i)));
                if !extends {
                    return Err(Error::NotAMatroid(format!(
                        "exchange fails: {} cannot be extended from {}",
                        show(a),
                        show(b)
                    )));
                }
            }
        }
        Ok(())
    }

    /// Size of the largest independent subset of `mask`.
    pub fn rank_of(&self, mask: u32) -> usize {
        self.independents
            .iter()
            .filter(|&&m| m & !mask == 0)
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    /// Flats (rank-closed subsets), sorted by rank and then by mask.
    pub fn flats(&self) -> Vec<u32> {
        let ranks: Vec<usize> = (0..1u32 << self.ground_size)
            .map(|m| self.rank_of(m))
            .collect();
        let mut flats: Vec<u32> = (0..1u32 << self.ground_size)
            .filter(|&m| {
                (0..self.ground_size)
                    .all(|i| m >> i & 1 == 1 || ranks[(m | 1 << i) as usize] > ranks[m as usize])
            })
            .collect();
        flats.sort_by_key(|&m| (ranks[m as usize], m));
        flats
    }
}

fn show(mask: u32) -> String {
    let items: Vec<String> = (0..32)
        .filter(|i| mask >> i & 1 == 1)
        .map(|i| i.to_string())
        .collect();
    format!("{{{}}}", items.join(","))
}

/// The geometric lattice of flats ordered by inclusion. Flats are labeled like
/// Boolean-lattice elements (`∅`, `1`, `12`, ...), elements numbered from 1.
pub fn from_matroid(m: &MatroidSpec) -> Result<Lattice> {
    let flats = m.flats();
    let ranks: Vec<usize> = flats.iter().map(|&f| m.rank_of(f)).collect();
    let mut covers = Vec::new();
    for (i, &a) in flats.iter().enumerate() {
        for (j, &b) in flats.iter().enumerate() {
            if ranks[j] == ranks[i] + 1 && a & !b == 0 {
                covers.push((i, j));
            }
        }
    }
    let names = flats
        .iter()
        .map(|&f| subset_label(f as u64, m.ground_size))
        .collect();
    Lattice::from_covers(names, &covers)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::boolean;
    use crate::canon::is_isomorphic;

    #[test]
    fn free_is_boolean() {
        let l = from_matroid(&MatroidSpec::free(3).unwrap()).unwrap();
        let b = boolean(3).unwrap();
        assert!(is_isomorphic(&l, &b));
        let mut names = l.names().to_vec();
        names.sort();
        let mut expected = b.names().to_vec();
        expected.sort();
        assert_eq!(names, expected);
    }

    #[test]
    fn uniform_2_3_is_diamond() {
        let l = from_matroid(&MatroidSpec::uniform(2, 3).unwrap()).unwrap();
        assert_eq!(l.len(), 5);
        assert_eq!(l.rank_profile().unwrap(), vec![1, 3, 1]);
    }

    #[test]
    fn rejects_non_matroids() {
        let err = MatroidSpec::new(2, &[vec![], vec![0, 1]]).unwrap_err();
        assert!(matches!(err, Error::NotAMatroid(ref s) if s.contains("downward")));
        // {0} and {1,2} violate exchange
        let err =
            MatroidSpec::new(3, &[vec![], vec![0], vec![1], vec![2], vec![1, 2]]).unwrap_err();
        assert!(matches!(err, Error::NotAMatroid(ref s) if s.contains("exchange")));
        assert!(MatroidSpec::new(2, &[]).is_err());
        assert!(MatroidSpec::new(2, &[vec![5]]).is_err());
    }

    #[test]
    fn linear_matroid_gives_subspace_lattice() {
        let vectors: Vec<Vec<u32>> = (1..8u32)
            .map(|v| (0..3).map(|i| v >> (2 - i) & 1).collect())
            .collect();
        let l = from_matroid(&MatroidSpec::linear(2, &vectors).unwrap()).unwrap();
        let s = crate::builders::subspace_lattice(2, 3).unwrap();
        assert!(is_isomorphic(&l, &s));
    }
}
