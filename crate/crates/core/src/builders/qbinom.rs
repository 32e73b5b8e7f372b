//! Gaussian binomial coefficients and the level-count bounds built from them.

use num_bigint::BigUint;
use num_traits::{One, Pow, Zero};

use crate::error::{Error, Result};

/// `[n d]_q = Σ_{A ⊆ {1..n}, |A| = d} q^{Σ A − d(d+1)/2}`, evaluated by counting
/// `d`-subsets per element sum.
pub fn qbinom(n: usize, d: usize, q: u32) -> Result<BigUint> {
    if d > n {
        return Err(Error::OutOfRange(format!("d = {d} exceeds n = {n}")));
    }
    if q < 2 {
        return Err(Error::OutOfRange(format!("q = {q} must be at least 2")));
    }
    let max_sum = n * (n + 1) / 2;
    // ways[k][s]: k-subsets of {1..i} with sum s
    let mut ways = vec![vec![BigUint::zero(); max_sum + 1]; d + 1];
    ways[0][0] = BigUint::one();
    for i in 1..=n {
        for k in (1..=d.min(i)).rev() {
            for s in (i..=max_sum).rev() {
                if !ways[k - 1][s - i].is_zero() {
                    let add = ways[k - 1][s - i].clone();
                    ways[k][s] += add;
                }
            }
        }
    }
    let offset = d * (d + 1) / 2;
    let q = BigUint::from(q);
    let mut total = BigUint::zero();
    for (s, count) in ways[d].iter().enumerate() {
        if !count.is_zero() {
            total += count * Pow::pow(&q, (s - offset) as u32);
        }
    }
    Ok(total)
}

/// Exact values entering the level-count bounds for `F_q^n` at level `d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QBinomBounds {
    /// `q^{d(n−d)}`
    pub lower: BigUint,
    /// `Σ_{e ≤ d} [n e]_q`
    pub up_to: BigUint,
    /// `2 n^d q^{dn}`
    pub upper: BigUint,
    /// `|L| = Σ_{e ≤ n} [n e]_q`
    pub lattice_size: BigUint,
    /// `q^{n²−1}`, compared against `|L|^4`.
    pub size_floor_pow4: BigUint,
}

impl QBinomBounds {
    pub fn holds(&self) -> bool {
        self.lower <= self.up_to
            && self.up_to <= self.upper
            && Pow::pow(&self.lattice_size, 4u32) >= self.size_floor_pow4
    }
}

pub fn qbinom_bounds(n: usize, d: usize, q: u32) -> Result<QBinomBounds> {
    if n == 0 {
        return Err(Error::OutOfRange("n must be at least 1".into()));
    }
    if d > n {
        return Err(Error::OutOfRange(format!("d = {d} exceeds n = {n}")));
    }
    let mut up_to = BigUint::zero();
    let mut lattice_size = BigUint::zero();
    for e in 0..=n {
        let c = qbinom(n, e, q)?;
        if e <= d {
            up_to += &c;
        }
        lattice_size += c;
    }
    let qb = BigUint::from(q);
    Ok(QBinomBounds {
        lower: Pow::pow(&qb, (d * (n - d)) as u32),
        up_to,
        upper: BigUint::from(2u32)
            * Pow::pow(&BigUint::from(n), d as u32)
            * Pow::pow(&qb, (d * n) as u32),
        lattice_size,
        size_floor_pow4: Pow::pow(&qb, (n * n - 1) as u32),
    })
}

/// Whether `q^{d(n−d)} <= Σ_{e≤d} [n e]_q <= 2 n^d q^{dn}` and
/// `|L| >= q^{(n²−1)/4}`. Invalid arguments give `false`.
pub fn qbinom_bounds_check(n: usize, d: usize, q: u32) -> bool {
    qbinom_bounds(n, d, q).is_ok_and(|b| b.holds())
}
