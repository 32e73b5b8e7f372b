//! Exact Möbius functions of finite posets.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::Lattice;

/// `mu(x, y)` for every comparable pair `x <= y`, as exact integers.
#[derive(Clone, Debug)]
pub struct MobiusTable {
    /// Row `x` holds `(y, mu(x, y))` for every `y >= x`, sorted by `y`.
    rows: Vec<Vec<(usize, BigInt)>>,
}

impl MobiusTable {
    /// Fills the table with `mu(x,x) = 1` and
    /// `mu(x,y) = -sum_{x <= z < y} mu(x,z)`, walking a linear extension.
    pub fn new(lattice: &Lattice) -> Self {
        let rows = (0..lattice.len())
            .map(|x| row_i128(lattice, x).unwrap_or_else(|| row_big(lattice, x)))
            .collect();
        Self { rows }
    }

    pub fn get(&self, x: usize, y: usize) -> Option<&BigInt> {
        let row = self.rows.get(x)?;
        row.binary_search_by_key(&y, |(k, _)| *k)
            .ok()
            .map(|i| &row[i].1)
    }

    /// Iterates over `(y, mu(x, y))` for all `y >= x`.
    pub fn row(&self, x: usize) -> impl Iterator<Item = (usize, &BigInt)> {
        self.rows[x].iter().map(|(y, v)| (*y, v))
    }

    /// All comparable pairs with `mu = 0`, sorted.
    pub fn vanishing_pairs(&self) -> Vec<(usize, usize)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(x, row)| {
                row.iter()
                    .filter(|(_, v)| v.is_zero())
                    .map(move |(y, _)| (x, *y))
            })
            .collect()
    }

    pub fn is_nonvanishing(&self) -> bool {
        self.rows.iter().flatten().all(|(_, v)| !v.is_zero())
    }
}

pub fn mobius_table(lattice: &Lattice) -> MobiusTable {
    MobiusTable::new(lattice)
}

pub fn vanishing_pairs(lattice: &Lattice) -> Vec<(usize, usize)> {
    MobiusTable::new(lattice).vanishing_pairs()
}

fn up_in_order(lattice: &Lattice, x: usize) -> Vec<usize> {
    let up = lattice.up_set(x);
    lattice
        .linear_extension()
        .iter()
        .copied()
        .filter(|&y| up.contains(y))
        .collect()
}

fn row_i128(lattice: &Lattice, x: usize) -> Option<Vec<(usize, BigInt)>> {
    let n = lattice.len();
    let mut value = vec![0i128; n];
    for y in up_in_order(lattice, x) {
        if y == x {
            value[y] = 1;
            continue;
        }
        let mut sum = 0i128;
        for z in lattice
            .down_set(y)
            .iter()
            .filter(|&z| z != y && lattice.leq(x, z))
        {
            sum = sum.checked_add(value[z])?;
        }
        value[y] = sum.checked_neg()?;
    }
    let mut row: Vec<(usize, BigInt)> = lattice
        .up_set(x)
        .iter()
        .map(|y| (y, BigInt::from(value[y])))
        .collect();
    row.sort_by_key(|(y, _)| *y);
    Some(row)
}

fn row_big(lattice: &Lattice, x: usize) -> Vec<(usize, BigInt)> {
    let n = lattice.len();
    let mut value = vec![BigInt::zero(); n];
    for y in up_in_order(lattice, x) {
        if y == x {
            value[y] = BigInt::one();
            continue;
        }
        let mut sum = BigInt::zero();
        for z in lattice
            .down_set(y)
            .iter()
            .filter(|&z| z != y && lattice.leq(x, z))
        {
            sum += &value[z];
        }
        value[y] = -sum;
    }
    lattice
        .up_set(x)
        .iter()
        .map(|y| (y, std::mem::take(&mut value[y])))
        .collect()
}

/// Checks both Möbius inversion formulas on `g`:
/// `f(x) = sum_{y >= x} g(y)` recovers `g(x) = sum_{y >= x} mu(x,y) f(y)`, and
/// `f(y) = sum_{x <= y} g(x)` recovers `g(y) = sum_{x <= y} mu(x,y) f(x)`.
pub fn check_inversion(lattice: &Lattice, g: &[BigRational]) -> bool {
    check_inversion_with(lattice, &MobiusTable::new(lattice), g)
}

pub fn check_inversion_with(lattice: &Lattice, mu: &MobiusTable, g: &[BigRational]) -> bool {
    let n = lattice.len();
    if g.len() != n {
        return false;
    }
    let mu_at =
        |x: usize, y: usize| BigRational::from_integer(mu.get(x, y).cloned().unwrap_or_default());

    let f_up: Vec<BigRational> = (0..n)
        .map(|x| lattice.up_set(x).iter().map(|y| &g[y]).sum())
        .collect();
    let recovered_up = (0..n).all(|x| {
        let back: BigRational = lattice
            .up_set(x)
            .iter()
            .map(|y| mu_at(x, y) * &f_up[y])
            .sum();
        back == g[x]
    });

    let f_down: Vec<BigRational> = (0..n)
        .map(|y| lattice.down_set(y).iter().map(|x| &g[x]).sum())
        .collect();
    let recovered_down = (0..n).all(|y| {
        let back: BigRational = lattice
            .down_set(y)
            .iter()
            .map(|x| mu_at(x, y) * &f_down[x])
            .sum();
        back == g[y]
    });

    recovered_up && recovered_down
}

/// Whether `(-1)^(r(y) - r(x)) * mu(x, y) > 0` for every `x <= y`.
pub fn weisner_check(lattice: &Lattice) -> Result<bool> {
    let ranks = lattice.ranks().ok_or(Error::NotRanked)?;
    let mu = MobiusTable::new(lattice);
    Ok((0..lattice.len()).all(|x| {
        mu.row(x).all(|(y, v)| {
            let odd = (ranks[y] - ranks[x]) % 2 == 1;
            if odd {
                v.is_negative()
            } else {
                v.is_positive()
            }
        })
    }))
}
