//! Canonical labeling of finite posets by partition refinement with
//! individualization.
//!
//! The refinement splits cells by the multiset of cells of each element's
//! strict up-set and strict down-set. When refinement stalls, every member of
//! the first non-singleton cell is tried as a singleton and the search
//! recurses. Each discrete partition yields a relabeling; the canonical form
//! is the lexicographically smallest order-matrix encoding among them.

use crate::lattice::Lattice;
use crate::set::ElementSet;

/// Isomorphism-invariant encoding of a poset's order relation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    n: usize,
    code: Vec<u64>,
}

impl CanonicalForm {
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Whether `i <= j` holds between canonical positions `i` and `j`.
    pub fn leq(&self, i: usize, j: usize) -> bool {
        let bit = i * self.n + j;
        self.code[bit / 64] >> (63 - bit % 64) & 1 == 1
    }
}

pub fn canonical_form(lattice: &Lattice) -> CanonicalForm {
    canonical_labeling(lattice).0
}

/// Canonical form plus the relabeling that produces it: `order[i]` is the
/// element placed at canonical position `i`.
pub fn canonical_labeling(lattice: &Lattice) -> (CanonicalForm, Vec<usize>) {
    let rows: Vec<ElementSet> = (0..lattice.len())
        .map(|x| lattice.up_set(x).clone())
        .collect();
    relation_canonical_labeling(&rows)
}

pub fn is_isomorphic(a: &Lattice, b: &Lattice) -> bool {
    a.len() == b.len()
        && a.covers().len() == b.covers().len()
        && canonical_form(a) == canonical_form(b)
}

/// Canonical labeling of a reflexive partial order given by rows
/// `rows[x] = {y : x <= y}`.
pub fn relation_canonical_labeling(rows: &[ElementSet]) -> (CanonicalForm, Vec<usize>) {
    let n = rows.len();
    let mut cols = vec![ElementSet::empty(n); n];
    for (x, row) in rows.iter().enumerate() {
        for y in row {
            cols[y].insert(x);
        }
    }
    let ctx = Context {
        n,
        above: rows,
        below: &cols,
    };
    let mut best: Option<(Vec<u64>, Vec<usize>)> = None;
    let cells = if n == 0 {
        Vec::new()
    } else {
        vec![(0..n).collect()]
    };
    ctx.search(cells, &mut best);
    let (code, order) = best.unwrap_or_default();
    (CanonicalForm { n, code }, order)
}

struct Context<'a> {
    n: usize,
    above: &'a [ElementSet],
    below: &'a [ElementSet],
}

impl Context<'_> {
    fn search(&self, cells: Vec<Vec<usize>>, best: &mut Option<(Vec<u64>, Vec<usize>)>) {
        let cells = self.refine(cells);
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            let order: Vec<usize> = cells.into_iter().flatten().collect();
            let code = self.encode(&order);
            if best.as_ref().is_none_or(|(b, _)| code < *b) {
                *best = Some((code, order));
            }
            return;
        };
        for &v in &cells[target] {
            let mut next = Vec::with_capacity(cells.len() + 1);
            next.extend_from_slice(&cells[..target]);
            next.push(vec![v]);
            next.push(cells[target].iter().copied().filter(|&w| w != v).collect());
            next.extend_from_slice(&cells[target + 1..]);
            self.search(next, best);
        }
    }

    fn refine(&self, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
        let mut cell_of = vec![0usize; self.n];
        loop {
            for (i, cell) in cells.iter().enumerate() {
                for &v in cell {
                    cell_of[v] = i;
                }
            }
            let signature = |v: usize| -> (Vec<usize>, Vec<usize>) {
                let mut up: Vec<usize> = self.above[v]
                    .iter()
                    .filter(|&w| w != v)
                    .map(|w| cell_of[w])
                    .collect();
                let mut down: Vec<usize> = self.below[v]
                    .iter()
                    .filter(|&w| w != v)
                    .map(|w| cell_of[w])
                    .collect();
                up.sort_unstable();
                down.sort_unstable();
                (up, down)
            };
            let mut next = Vec::with_capacity(cells.len());
            for cell in &cells {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<_> = cell.iter().map(|&v| (signature(v), v)).collect();
                keyed.sort();
                let mut start = 0;
                for i in 1..=keyed.len() {
                    if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                        next.push(keyed[start..i].iter().map(|(_, v)| *v).collect());
                        start = i;
                    }
                }
            }
            if next.len() == cells.len() {
                return next;
            }
            cells = next;
        }
    }

    fn encode(&self, order: &[usize]) -> Vec<u64> {
        let n = self.n;
        let mut code = vec![0u64; (n * n).div_ceil(64)];
        for (i, &x) in order.iter().enumerate() {
            for (j, &y) in order.iter().enumerate() {
                if self.above[x].contains(y) {
                    let bit = i * n + j;
                    code[bit / 64] |= 1 << (63 - bit % 64);
                }
            }
        }
        code
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relabeled_diamonds_agree() {
        let a = Lattice::from_covers_unlabeled(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap();
        let b = Lattice::from_covers_unlabeled(4, &[(3, 2), (3, 0), (2, 1), (0, 1)]).unwrap();
        assert!(is_isomorphic(&a, &b));
        let chain = Lattice::from_covers_unlabeled(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(!is_isomorphic(&a, &chain));
    }

    #[test]
    fn labeling_reproduces_form() {
        let l =
            Lattice::from_covers_unlabeled(5, &[(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)]).unwrap();
        let (form, order) = canonical_labeling(&l);
        for i in 0..5 {
            for j in 0..5 {
                assert_eq!(form.leq(i, j), l.leq(order[i], order[j]));
            }
        }
    }
}
