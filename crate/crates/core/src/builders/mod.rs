//! Constructors for concrete lattices: Boolean lattices, chains, subspace
//! lattices over prime fields, geometric lattices of matroids, the hard-coded
//! example lattices and q-binomial quantities.

mod critical;
mod figures;
mod matroid;
mod qbinom;
mod subspace;

pub use critical::{critical_family, CriticalFamily};
pub use figures::{fig1, fig2, fig3b};
pub use matroid::{from_matroid, MatroidSpec};
pub use qbinom::{qbinom, qbinom_bounds, qbinom_bounds_check, QBinomBounds};
pub use subspace::{subspace_lattice, subspace_lattice_with_subspaces, Subspace};

use crate::error::{Error, Result};
use crate::lattice::Lattice;

/// Largest `n` accepted by [`boolean`]; `2^12` is the element limit.
pub const MAX_BOOLEAN_RANK: usize = 12;

/// Label for a subset of `{1..ground}` given as a bit mask: `∅`, `1`, `12`, or
/// dot-separated (`1.2.10`) when the ground set has more than nine elements.
pub(crate) fn subset_label(mask: u64, ground: usize) -> String {
    if mask == 0 {
        return "∅".to_string();
    }
    let parts: Vec<String> = (0..ground)
        .filter(|i| mask >> i & 1 == 1)
        .map(|i| (i + 1).to_string())
        .collect();
    parts.join(if ground > 9 { "." } else { "" })
}

/// The lattice of subsets of `{1..n}`; element index is the subset's bit mask.
pub fn boolean(n: usize) -> Result<Lattice> {
    if n > MAX_BOOLEAN_RANK {
        return Err(Error::TooLarge(format!(
            "boolean lattice of rank {n} (limit {MAX_BOOLEAN_RANK})"
        )));
    }
    let size = 1usize << n;
    let names = (0..size).map(|m| subset_label(m as u64, n)).collect();
    let mut covers = Vec::with_capacity(size * n / 2);
    for m in 0..size {
        for i in 0..n {
            if m >> i & 1 == 0 {
                covers.push((m, m | 1 << i));
            }
        }
    }
    Lattice::from_covers(names, &covers)
}

/// The chain `0 < 1 < ... < k`.
pub fn chain(k: usize) -> Result<Lattice> {
    let names = (0..=k).map(|i| i.to_string()).collect();
    let covers: Vec<(usize, usize)> = (0..k).map(|i| (i, i + 1)).collect();
    Lattice::from_covers(names, &covers)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mobius::MobiusTable;
    use num_bigint::BigInt;

    #[test]
    fn boolean_shapes() {
        assert_eq!(boolean(0).unwrap().len(), 1);
        let b3 = boolean(3).unwrap();
        assert_eq!(b3.len(), 8);
        assert_eq!(b3.count_by_rank(2).unwrap(), 3);
        assert_eq!(b3.name(0b101), "13");
        let b4 = boolean(4).unwrap();
        assert_eq!(MobiusTable::new(&b4).get(0, 15), Some(&BigInt::from(1)));
        assert!(matches!(boolean(13), Err(Error::TooLarge(_))));
        assert_eq!(subset_label(0b10_0000_0011, 10), "1.2.10");
    }

    #[test]
    fn chains() {
        assert_eq!(chain(0).unwrap().len(), 1);
        let c = chain(2).unwrap();
        assert_eq!(c.height().unwrap(), 2);
        assert_eq!(c.names(), ["0", "1", "2"]);
    }
}
