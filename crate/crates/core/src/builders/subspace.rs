//! Subspaces of `F_q^n` for prime `q`, represented by reduced row-echelon
//! bases so that equal subspaces have equal representations.

use std::fmt;

use num_traits::ToPrimitive;

use super::qbinom::qbinom;
use crate::error::{Error, Result};
use crate::lattice::{Lattice, MAX_ELEMENTS};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subspace {
    q: u32,
    n: usize,
    basis: Vec<Vec<u32>>,
}

impl Subspace {
    /// The span of `vectors` (entries reduced mod `q`).
    pub fn span(q: u32, n: usize, vectors: &[Vec<u32>]) -> Result<Self> {
        if !is_prime(q) {
            return Err(Error::NotPrime(q));
        }
        if let Some(v) = vectors.iter().find(|v| v.len() != n) {
            return Err(Error::OutOfRange(format!(
                "vector of length {} in dimension {n}",
                v.len()
            )));
        }
        Ok(Self {
            q,
            n,
            basis: rref_mod(vectors.to_vec(), q),
        })
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<u32>] {
        &self.basis
    }

    pub fn contains_vector(&self, v: &[u32]) -> bool {
        let mut rows = self.basis.clone();
        rows.push(v.to_vec());
        rref_mod(rows, self.q).len() == self.dim()
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.dim() <= other.dim() && self.basis.iter().all(|v| other.contains_vector(v))
    }

    /// `0` for the zero subspace, otherwise `<r1.r2...>` with one digit string
    /// per basis row (digits separated by `:` when `q > 10`).
    pub fn label(&self) -> String {
        if self.basis.is_empty() {
            return "0".to_string();
        }
        let sep = if self.q > 10 { ":" } else { "" };
        let rows: Vec<String> = self
            .basis
            .iter()
            .map(|r| {
                r.iter()
                    .map(|d| d.to_string())
                    .collect::<Vec<_>>()
                    .join(sep)
            })
            .collect();
        format!("<{}>", rows.join("."))
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

pub(crate) fn is_prime(q: u32) -> bool {
    q >= 2
        && (2..)
            .take_while(|d| d * d <= q)
            .all(|d| !q.is_multiple_of(d))
}

fn inverse_mod(a: u32, q: u32) -> u32 {
    // q is prime, so a^(q-2) is the inverse
    let (mut base, mut exp, mut acc) = (a as u64 % q as u64, q - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % q as u64;
        }
        base = base * base % q as u64;
        exp >>= 1;
    }
    acc as u32
}

/// Nonzero rows of the reduced row-echelon form of `rows` over `F_q`.
pub(crate) fn rref_mod(mut rows: Vec<Vec<u32>>, q: u32) -> Vec<Vec<u32>> {
    let cols = rows.first().map_or(0, Vec::len);
    for row in rows.iter_mut() {
        for x in row.iter_mut() {
            *x %= q;
        }
    }
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, p);
        let inv = inverse_mod(rows[r][c], q) as u64;
        for x in rows[r].iter_mut() {
            *x = (*x as u64 * inv % q as u64) as u32;
        }
        for i in 0..rows.len() {
            let f = rows[i][c] as u64;
            if i == r || f == 0 {
                continue;
            }
            let pivot = rows[r].clone();
            for (x, &p) in rows[i].iter_mut().zip(&pivot) {
                let sub = f * p as u64 % q as u64;
                *x = ((*x as u64 + q as u64 - sub) % q as u64) as u32;
            }
        }
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    rows
}

/// All reduced echelon bases of dimension `d` in `F_q^n`.
fn echelon_forms(q: u32, n: usize, d: usize) -> Vec<Vec<Vec<u32>>> {
    let mut out = Vec::new();
    let mut pivots = Vec::with_capacity(d);
    pivot_sets(n, d, 0, &mut pivots, &mut |pivots| {
        // free positions: row i, column j > pivots[i], j not a pivot
        let free: Vec<(usize, usize)> = (0..d)
            .flat_map(|i| ((pivots[i] + 1)..n).map(move |j| (i, j)))
            .filter(|(_, j)| !pivots.contains(j))
            .collect();
        let mut digits = vec![0u32; free.len()];
        loop {
            let mut m = vec![vec![0u32; n]; d];
            for (i, &p) in pivots.iter().enumerate() {
                m[i][p] = 1;
            }
            for (k, &(i, j)) in free.iter().enumerate() {
                m[i][j] = digits[k];
            }
            out.push(m);
            let Some(k) = digits.iter().rposition(|&x| x + 1 < q) else {
                break;
            };
            digits[k] += 1;
            digits[k + 1..].iter_mut().for_each(|x| *x = 0);
        }
    });
    out.sort();
    out
}

fn pivot_sets(
    n: usize,
    d: usize,
    start: usize,
    acc: &mut Vec<usize>,
    f: &mut impl FnMut(&[usize]),
) {
    if acc.len() == d {
        f(acc);
        return;
    }
    for c in start..n {
        acc.push(c);
        pivot_sets(n, d, c + 1, acc, f);
        acc.pop();
    }
}

/// The lattice of subspaces of `F_q^n` ordered by inclusion, together with the
/// subspace behind each element. Elements are sorted by dimension, then by
/// basis.
pub fn subspace_lattice_with_subspaces(q: u32, n: usize) -> Result<(Lattice, Vec<Subspace>)> {
    if !is_prime(q) {
        return Err(Error::NotPrime(q));
    }
    let mut total: usize = 0;
    for d in 0..=n {
        let c = qbinom(n, d, q)?.to_usize().unwrap_or(usize::MAX);
        total = total.saturating_add(c);
    }
    if total > MAX_ELEMENTS {
        return Err(Error::TooLarge(format!(
            "subspace lattice of F_{q}^{n} has {total} elements (limit {MAX_ELEMENTS})"
        )));
    }

    let mut subspaces = Vec::with_capacity(total);
    let mut by_dim: Vec<std::ops::Range<usize>> = Vec::with_capacity(n + 1);
    for d in 0..=n {
        let start = subspaces.len();
        subspaces.extend(
            echelon_forms(q, n, d)
                .into_iter()
                .map(|basis| Subspace { q, n, basis }),
        );
        by_dim.push(start..subspaces.len());
    }

    let mut covers = Vec::new();
    for d in 0..n {
        for lo in by_dim[d].clone() {
            for hi in by_dim[d + 1].clone() {
                if subspaces[lo].is_subspace_of(&subspaces[hi]) {
                    covers.push((lo, hi));
                }
            }
        }
    }
    let names = subspaces.iter().map(Subspace::label).collect();
    Ok((Lattice::from_covers(names, &covers)?, subspaces))
}

pub fn subspace_lattice(q: u32, n: usize) -> Result<Lattice> {
    Ok(subspace_lattice_with_subspaces(q, n)?.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mobius::weisner_check;

    #[test]
    fn small_fields() {
        let l = subspace_lattice(2, 2).unwrap();
        assert_eq!(l.len(), 5);
        assert_eq!(l.name(0), "0");
        let l = subspace_lattice(2, 3).unwrap();
        assert_eq!(l.rank_profile().unwrap(), vec![1, 7, 7, 1]);
        assert!(weisner_check(&l).unwrap());
        assert_eq!(subspace_lattice(3, 2).unwrap().len(), 6);
    }

    #[test]
    fn errors() {
        assert_eq!(subspace_lattice(4, 2).unwrap_err(), Error::NotPrime(4));
        assert!(matches!(subspace_lattice(2, 7), Err(Error::TooLarge(_))));
    }

    #[test]
    fn spans_and_labels() {
        let s = Subspace::span(3, 3, &[vec![2, 1, 0], vec![1, 2, 0]]).unwrap();
        assert_eq!(s.dim(), 1);
        assert_eq!(s.label(), "<120>");
        assert!(s.contains_vector(&[2, 1, 0]));
        assert!(!s.contains_vector(&[0, 0, 1]));
        let plane = Subspace::span(3, 3, &[vec![1, 0, 0], vec![0, 1, 0]]).unwrap();
        assert!(s.is_subspace_of(&plane));
        assert_eq!(plane.label(), "<100.010>");
    }

    #[test]
    fn meets_are_intersections() {
        let (l, subs) = subspace_lattice_with_subspaces(2, 3).unwrap();
        for x in 0..l.len() {
            for y in 0..l.len() {
                let m = &subs[l.meet(x, y)];
                assert!(m.is_subspace_of(&subs[x]) && m.is_subspace_of(&subs[y]));
                let j = &subs[l.join(x, y).unwrap()];
                assert_eq!(j.dim() + m.dim(), subs[x].dim() + subs[y].dim());
            }
        }
    }
}
