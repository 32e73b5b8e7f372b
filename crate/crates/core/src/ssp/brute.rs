//! Exhaustive family enumeration over lattices with at most 64 elements.
//!
//! Families are `u64` masks. The search walks the subset tree in which a node
//! `I` with next index `k` owns every `I ∪ T`, `T ⊆ {k..n}`. Since `Str` is
//! monotone, every family in that subtree shatters at least `|Str(I)|`
//! elements and has at most `|I| + (n - k)` members, so the subtree is skipped
//! whenever `|Str(I)| >= |I| + n - k`.
//!
//! The first `PREFIX_BITS` elements fix a partition of the search space; the
//! partitions are independent and run in parallel. Their boundaries do not
//! depend on the thread count, so results are reproducible.

use rayon::prelude::*;

use crate::lattice::Lattice;

const PREFIX_BITS: usize = 8;

/// Precomputed meet structure for fast `Str(F)` on masks.
#[derive(Clone, Debug)]
pub struct ShatterEngine {
    n: usize,
    order: Vec<usize>,
    lower: Vec<u64>,
    /// For each `y`: one mask `{z : z ∧ y = x}` per `x <= y`.
    preimages: Vec<Vec<u64>>,
}

impl ShatterEngine {
    /// `None` when the lattice has more than 64 elements.
    pub fn new(lattice: &Lattice) -> Option<Self> {
        let n = lattice.len();
        if n > 64 {
            return None;
        }
        let mut lower = vec![0u64; n];
        let mut preimages = vec![Vec::new(); n];
        for y in 0..n {
            for &c in lattice.lower_covers(y) {
                lower[y] |= 1 << c;
            }
            for x in lattice.down_set(y) {
                let mut mask = 0u64;
                for z in 0..n {
                    if lattice.meet(z, y) == x {
                        mask |= 1 << z;
                    }
                }
                preimages[y].push(mask);
            }
        }
        Some(Self {
            n,
            order: lattice.linear_extension().to_vec(),
            lower,
            preimages,
        })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// `Str(family)` as a mask.
    pub fn shattered(&self, family: u64) -> u64 {
        self.extend(family, 0)
    }

    /// `Str(family)` given `known ⊆ Str(family)`, e.g. the shattered set of a
    /// subfamily.
    #[inline]
    pub fn extend(&self, family: u64, known: u64) -> u64 {
        let mut s = known;
        for &y in &self.order {
            let bit = 1u64 << y;
            if s & bit != 0 || self.lower[y] & !s != 0 {
                continue;
            }
            if self.preimages[y].iter().all(|&m| m & family != 0) {
                s |= bit;
            }
        }
        s
    }

    /// Whether `|Str(family)| < |family|`.
    pub fn violates(&self, family: u64) -> bool {
        self.shattered(family).count_ones() < family.count_ones()
    }
}

/// Result of one or more partitions of the search.
#[derive(Clone, Debug, Default)]
pub struct SearchOutcome {
    /// Families evaluated or skipped by a sound bound.
    pub covered: u64,
    /// Violating families found, as masks.
    pub violations: Vec<u64>,
}

/// Searches all `2^n` families. With `stop_at_first`, each partition stops at
/// its first violation; otherwise every violation is collected.
pub fn search(engine: &ShatterEngine, stop_at_first: bool) -> SearchOutcome {
    let n = engine.n;
    let p = n.min(PREFIX_BITS);
    let parts: Vec<SearchOutcome> = (0..1u64 << p)
        .into_par_iter()
        .map(|prefix| {
            let mut out = SearchOutcome::default();
            let s = engine.shattered(prefix);
            descend(engine, prefix, p, s, stop_at_first, &mut out);
            out
        })
        .collect();
    let mut merged = SearchOutcome::default();
    for part in parts {
        merged.covered += part.covered;
        merged.violations.extend(part.violations);
    }
    merged.violations.sort_by_key(|&m| (m.count_ones(), m));
    merged
}

/// Returns `true` when the search should stop.
fn descend(
    engine: &ShatterEngine,
    family: u64,
    next: usize,
    shattered: u64,
    stop_at_first: bool,
    out: &mut SearchOutcome,
) -> bool {
    let n = engine.n;
    let remaining = n - next;
    let size = family.count_ones() as usize;
    let str_size = shattered.count_ones() as usize;
    if str_size >= size + remaining {
        out.covered += 1 << remaining;
        return false;
    }
    out.covered += 1;
    if str_size < size {
        out.violations.push(family);
        if stop_at_first {
            return true;
        }
    }
    for j in next..n {
        let child = family | 1 << j;
        let s = engine.extend(child, shattered);
        if descend(engine, child, j + 1, s, stop_at_first, out) {
            return true;
        }
    }
    false
}

/// Unpruned enumeration in size-then-value order; reference for the pruned
/// search.
pub fn naive_violations(engine: &ShatterEngine) -> Vec<u64> {
    let n = engine.n;
    let mut all: Vec<u64> = (0..1u64 << n).filter(|&f| engine.violates(f)).collect();
    all.sort_by_key(|&m| (m.count_ones(), m));
    all
}
