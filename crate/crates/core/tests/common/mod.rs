//! Reference implementations shared by the integration tests.

#![allow(dead_code)]

use std::collections::HashSet;

/// Labeled partial orders on `n` points given as `leq[i][j]`.
pub fn labeled_posets(n: usize) -> Vec<Vec<Vec<bool>>> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect();
    let mut out = Vec::new();
    for bits in 0u64..1 << pairs.len() {
        let mut r = vec![vec![false; n]; n];
        for (i, row) in r.iter_mut().enumerate() {
            row[i] = true;
        }
        for (k, &(i, j)) in pairs.iter().enumerate() {
            r[i][j] = bits >> k & 1 == 1;
        }
        let antisymmetric = (0..n).all(|i| (0..n).all(|j| i == j || !(r[i][j] && r[j][i])));
        let transitive =
            (0..n).all(|i| (0..n).all(|j| !r[i][j] || (0..n).all(|k| !r[j][k] || r[i][k])));
        if antisymmetric && transitive {
            out.push(r);
        }
    }
    out
}

pub fn is_lattice_order(r: &[Vec<bool>]) -> bool {
    let n = r.len();
    let has_extremum = |lower: bool| {
        (0..n).all(|a| {
            (0..n).all(|b| {
                let bounds: Vec<usize> = (0..n)
                    .filter(|&c| {
                        if lower {
                            r[c][a] && r[c][b]
                        } else {
                            r[a][c] && r[b][c]
                        }
                    })
                    .collect();
                bounds.iter().any(|&m| {
                    bounds
                        .iter()
                        .all(|&c| if lower { r[c][m] } else { r[m][c] })
                })
            })
        })
    };
    n > 0 && has_extremum(true) && has_extremum(false)
}

/// Smallest relation encoding over all relabelings.
pub fn brute_canonical(r: &[Vec<bool>]) -> Vec<bool> {
    let n = r.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best: Option<Vec<bool>> = None;
    loop {
        let code: Vec<bool> = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .map(|(i, j)| r[perm[i]][perm[j]])
            .collect();
        if best.as_ref().is_none_or(|b| code < *b) {
            best = Some(code);
        }
        // next permutation
        let Some(i) = (0..n.saturating_sub(1))
            .rev()
            .find(|&i| perm[i] < perm[i + 1])
        else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| perm[j] > perm[i]).unwrap();
        perm.swap(i, j);
        perm[i + 1..].reverse();
    }
    best.unwrap_or_default()
}

/// Lattices on `n` elements up to isomorphism, by brute force over labeled
/// partial orders.
pub fn oracle_lattice_count(n: usize) -> usize {
    labeled_posets(n)
        .into_iter()
        .filter(|r| is_lattice_order(r))
        .map(|r| brute_canonical(&r))
        .collect::<HashSet<_>>()
        .len()
}
