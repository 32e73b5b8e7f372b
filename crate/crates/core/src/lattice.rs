//! Finite meet-semilattices and lattices with precomputed order, meet/join
//! tables and (when it exists) a rank function.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap};

use crate::error::{Error, Result};
use crate::set::ElementSet;

/// Upper bound on element count for any constructed lattice. Every table is
/// dense (`n * n`), so this keeps memory in the tens of megabytes.
pub const MAX_ELEMENTS: usize = 4096;

/// An immutable finite meet-semilattice, optionally a lattice.
///
/// Elements are dense indices `0..len()`. All order information is computed at
/// construction time; queries are table lookups.
#[derive(Clone, Debug)]
pub struct Lattice {
    names: Vec<String>,
    index: HashMap<String, usize>,
    down: Vec<ElementSet>,
    up: Vec<ElementSet>,
    covers: Vec<(usize, usize)>,
    lower_covers: Vec<Vec<usize>>,
    upper_covers: Vec<Vec<usize>>,
    meet: Vec<u16>,
    join: Option<Vec<u16>>,
    bottom: usize,
    top: Option<usize>,
    rank: Option<Vec<usize>>,
    linear_extension: Vec<usize>,
}

/// A closed interval `[lo, hi]` of a lattice together with its embedding.
#[derive(Clone, Debug)]
pub struct Interval {
    pub lattice: Lattice,
    /// `embedding[i]` is the index in the parent lattice of element `i`.
    pub embedding: Vec<usize>,
}

impl Lattice {
    /// Builds a lattice from its Hasse diagram.
    ///
    /// `covers` holds `(child, parent)` pairs. Pairs implied by transitivity
    /// are accepted and dropped from the stored cover relation.
    pub fn from_covers(names: Vec<String>, covers: &[(usize, usize)]) -> Result<Self> {
        let n = names.len();
        if n == 0 {
            return Err(Error::NoBottom);
        }
        if n > MAX_ELEMENTS {
            return Err(Error::TooLarge(format!(
                "{n} elements exceeds the limit of {MAX_ELEMENTS}"
            )));
        }

        let mut parents: Vec<Vec<usize>> = vec![Vec::new(); n];
        let mut children: Vec<Vec<usize>> = vec![Vec::new(); n];
        for &(c, p) in covers {
            for i in [c, p] {
                if i >= n {
                    return Err(Error::IndexOutOfRange { index: i, len: n });
                }
            }
            if c == p {
                return Err(Error::NotAPoset(c));
            }
            if !parents[c].contains(&p) {
                parents[c].push(p);
                children[p].push(c);
            }
        }

        // Kahn's algorithm, smallest index first so the extension is stable.
        let mut indegree: Vec<usize> = children.iter().map(Vec::len).collect();
        let mut heap: BinaryHeap<Reverse<usize>> =
            (0..n).filter(|&v| indegree[v] == 0).map(Reverse).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(Reverse(v)) = heap.pop() {
            order.push(v);
            for &p in &parents[v] {
                indegree[p] -= 1;
                if indegree[p] == 0 {
                    heap.push(Reverse(p));
                }
            }
        }
        if order.len() < n {
            let culprit = (0..n).find(|&v| indegree[v] > 0).unwrap_or(0);
            return Err(Error::NotAPoset(culprit));
        }

        let mut down = vec![ElementSet::empty(n); n];
        for &v in &order {
            let mut set = ElementSet::empty(n);
            set.insert(v);
            for &c in &children[v] {
                set.union_with(&down[c]);
            }
            down[v] = set;
        }

        // A listed edge c -> p is a cover unless another listed child of p
        // already lies above c.
        let mut lower_covers: Vec<Vec<usize>> = vec![Vec::new(); n];
        for p in 0..n {
            for &c in &children[p] {
                let redundant = children[p]
                    .iter()
                    .any(|&other| other != c && down[other].contains(c));
                if !redundant {
                    lower_covers[p].push(c);
                }
            }
            lower_covers[p].sort_unstable();
        }
        let mut upper_covers: Vec<Vec<usize>> = vec![Vec::new(); n];
        let mut cover_list = Vec::new();
        for (p, cs) in lower_covers.iter().enumerate() {
            for &c in cs {
                upper_covers[c].push(p);
                cover_list.push((c, p));
            }
        }
        for list in &mut upper_covers {
            list.sort_unstable();
        }
        cover_list.sort_unstable();

        let minimal: Vec<usize> = (0..n).filter(|&v| lower_covers[v].is_empty()).collect();
        if minimal.len() != 1 {
            return Err(Error::NoBottom);
        }
        let bottom = minimal[0];

        let mut up = vec![ElementSet::empty(n); n];
        for (y, d) in down.iter().enumerate() {
            for x in d {
                up[x].insert(y);
            }
        }

        let meet = bound_table(n, &order, &lower_covers, &down)
            .map_err(|(x, y)| Error::NotMeetSemilattice(x, y))?;

        let maximal: Vec<usize> = (0..n).filter(|&v| upper_covers[v].is_empty()).collect();
        let (top, join) = if maximal.len() == 1 {
            let reversed: Vec<usize> = order.iter().rev().copied().collect();
            let join = bound_table(n, &reversed, &upper_covers, &up).ok();
            (Some(maximal[0]), join)
        } else {
            (None, None)
        };

        let rank = compute_rank(n, bottom, &order, &lower_covers);

        let index = names
            .iter()
            .enumerate()
            .map(|(i, name)| (name.clone(), i))
            .collect();

        Ok(Self {
            names,
            index,
            down,
            up,
            covers: cover_list,
            lower_covers,
            upper_covers,
            meet,
            join,
            bottom,
            top,
            rank,
            linear_extension: order,
        })
    }

    /// Same as [`Lattice::from_covers`] with labels `"0"`, `"1"`, ...
    pub fn from_covers_unlabeled(n: usize, covers: &[(usize, usize)]) -> Result<Self> {
        Self::from_covers((0..n).map(|i| i.to_string()).collect(), covers)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, x: usize) -> &str {
        &self.names[x]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.down[y].contains(x)
    }

    #[inline]
    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq(x, y)
    }

    /// `{z : z <= x}`.
    pub fn down_set(&self, x: usize) -> &ElementSet {
        &self.down[x]
    }

    /// `{z : z >= x}`.
    pub fn up_set(&self, x: usize) -> &ElementSet {
        &self.up[x]
    }

    #[inline]
    pub fn meet(&self, x: usize, y: usize) -> usize {
        self.meet[x * self.len() + y] as usize
    }

    #[inline]
    pub fn join(&self, x: usize, y: usize) -> Option<usize> {
        self.join
            .as_ref()
            .map(|table| table[x * self.len() + y] as usize)
    }

    /// True when every pair has a join, i.e. the structure is a lattice.
    pub fn is_lattice(&self) -> bool {
        self.join.is_some()
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> Option<usize> {
        self.top
    }

    /// Cover pairs `(child, parent)`, sorted.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn lower_covers(&self, x: usize) -> &[usize] {
        &self.lower_covers[x]
    }

    pub fn upper_covers(&self, x: usize) -> &[usize] {
        &self.upper_covers[x]
    }

    /// A linear extension: `x < y` implies `x` appears before `y`.
    pub fn linear_extension(&self) -> &[usize] {
        &self.linear_extension
    }

    pub fn is_ranked(&self) -> bool {
        self.rank.is_some()
    }

    pub fn rank(&self, x: usize) -> Option<usize> {
        self.rank.as_ref().map(|r| r[x])
    }

    pub fn ranks(&self) -> Option<&[usize]> {
        self.rank.as_deref()
    }

    /// Maximum rank of an element.
    pub fn height(&self) -> Result<usize> {
        let ranks = self.rank.as_ref().ok_or(Error::NotRanked)?;
        Ok(ranks.iter().copied().max().unwrap_or(0))
    }

    /// Number of elements at each rank `0..=height`.
    pub fn rank_profile(&self) -> Result<Vec<usize>> {
        let ranks = self.rank.as_ref().ok_or(Error::NotRanked)?;
        let mut profile = vec![0; self.height()? + 1];
        for &r in ranks {
            profile[r] += 1;
        }
        Ok(profile)
    }

    /// Number of elements of rank exactly `d`.
    pub fn count_by_rank(&self, d: usize) -> Result<usize> {
        let ranks = self.rank.as_ref().ok_or(Error::NotRanked)?;
        Ok(ranks.iter().filter(|&&r| r == d).count())
    }

    /// Number of elements of rank at most `d`.
    pub fn count_up_to(&self, d: usize) -> Result<usize> {
        let ranks = self.rank.as_ref().ok_or(Error::NotRanked)?;
        Ok(ranks.iter().filter(|&&r| r <= d).count())
    }

    /// Elements covering the bottom.
    pub fn atoms(&self) -> ElementSet {
        ElementSet::from_indices(self.len(), self.upper_covers[self.bottom].iter().copied())
    }

    /// Whether the top is the join of all atoms.
    pub fn is_atomic(&self) -> Result<bool> {
        let top = self.top.ok_or(Error::NoTop)?;
        let mut acc = self.bottom;
        for a in &self.atoms() {
            acc = self.join(acc, a).ok_or(Error::NotALattice)?;
        }
        Ok(acc == top)
    }

    /// The sublattice on `{z : lo <= z <= hi}`.
    pub fn interval(&self, lo: usize, hi: usize) -> Result<Interval> {
        self.check_index(lo)?;
        self.check_index(hi)?;
        if !self.leq(lo, hi) {
            return Err(Error::NotComparable(lo, hi));
        }
        let members = self.up[lo].intersection(&self.down[hi]);
        let embedding: Vec<usize> = members.iter().collect();
        let mut local = vec![usize::MAX; self.len()];
        for (i, &x) in embedding.iter().enumerate() {
            local[x] = i;
        }
        let covers: Vec<(usize, usize)> = self
            .covers
            .iter()
            .filter(|&&(c, p)| members.contains(c) && members.contains(p))
            .map(|&(c, p)| (local[c], local[p]))
            .collect();
        let names = embedding.iter().map(|&x| self.names[x].clone()).collect();
        let lattice = Lattice::from_covers(names, &covers)?;
        Ok(Interval { lattice, embedding })
    }

    /// Cartesian product with the componentwise order. Element `(i, j)` gets
    /// index `i * other.len() + j` and label `(a;b)`.
    pub fn product(&self, other: &Lattice) -> Result<Lattice> {
        let (n, m) = (self.len(), other.len());
        if n * m > MAX_ELEMENTS {
            return Err(Error::TooLarge(format!(
                "product has {} elements, limit is {MAX_ELEMENTS}",
                n * m
            )));
        }
        let mut names = Vec::with_capacity(n * m);
        for a in &self.names {
            for b in &other.names {
                names.push(format!("({a};{b})"));
            }
        }
        let mut covers = Vec::new();
        for &(c, p) in &self.covers {
            for j in 0..m {
                covers.push((c * m + j, p * m + j));
            }
        }
        for i in 0..n {
            for &(c, p) in &other.covers {
                covers.push((i * m + c, i * m + p));
            }
        }
        Lattice::from_covers(names, &covers)
    }

    pub(crate) fn check_index(&self, x: usize) -> Result<()> {
        if x < self.len() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: x,
                len: self.len(),
            })
        }
    }
}

/// Greatest-lower-bound table (or least-upper-bound when called with the
/// reversed order, upper covers and up-sets). The bound of `x` and `y` for
/// incomparable pairs is the unique maximum of the bounds of `y` with the
/// lower covers of `x`, which are already known because `order` is a linear
/// extension.
fn bound_table(
    n: usize,
    order: &[usize],
    below: &[Vec<usize>],
    down: &[ElementSet],
) -> std::result::Result<Vec<u16>, (usize, usize)> {
    const UNSET: u16 = u16::MAX;
    let mut table = vec![UNSET; n * n];
    for &x in order {
        for y in 0..n {
            let value = if down[y].contains(x) {
                x
            } else if down[x].contains(y) {
                y
            } else {
                let candidates: Vec<usize> = below[x]
                    .iter()
                    .map(|&c| table[c * n + y] as usize)
                    .collect();
                *candidates
                    .iter()
                    .find(|&&b| candidates.iter().all(|&c| down[b].contains(c)))
                    .ok_or((x, y))?
            };
            table[x * n + y] = value as u16;
        }
    }
    Ok(table)
}

fn compute_rank(
    n: usize,
    bottom: usize,
    order: &[usize],
    lower_covers: &[Vec<usize>],
) -> Option<Vec<usize>> {
    let mut rank = vec![0usize; n];
    for &v in order {
        if v == bottom {
            continue;
        }
        let mut it = lower_covers[v].iter().map(|&c| rank[c] + 1);
        let first = it.next()?;
        if it.any(|r| r != first) {
            return None;
        }
        rank[v] = first;
    }
    Some(rank)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain(k: usize) -> Lattice {
        let covers: Vec<_> = (0..k).map(|i| (i, i + 1)).collect();
        Lattice::from_covers_unlabeled(k + 1, &covers).unwrap()
    }

    fn diamond() -> Lattice {
        Lattice::from_covers_unlabeled(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn path_lattice() {
        let l = chain(2);
        assert_eq!(l.bottom(), 0);
        assert_eq!(l.top(), Some(2));
        assert_eq!(l.ranks(), Some(&[0, 1, 2][..]));
        assert_eq!(l.meet(1, 2), 1);
        assert_eq!(l.join(0, 1), Some(1));
    }

    #[test]
    fn single_element() {
        let l = Lattice::from_covers_unlabeled(1, &[]).unwrap();
        assert_eq!(l.bottom(), 0);
        assert_eq!(l.top(), Some(0));
        assert_eq!(l.rank(0), Some(0));
        assert!(l.atoms().is_empty());
        assert!(l.is_atomic().unwrap());
    }

    #[test]
    fn errors() {
        assert_eq!(
            Lattice::from_covers_unlabeled(2, &[(0, 1), (1, 0)]).unwrap_err(),
            Error::NotAPoset(0)
        );
        assert_eq!(
            Lattice::from_covers_unlabeled(2, &[(0, 0)]).unwrap_err(),
            Error::NotAPoset(0)
        );
        // two minimal elements
        assert_eq!(
            Lattice::from_covers_unlabeled(3, &[(0, 2), (1, 2)]).unwrap_err(),
            Error::NoBottom
        );
        assert_eq!(
            Lattice::from_covers(vec![], &[]).unwrap_err(),
            Error::NoBottom
        );
        // bowtie: 0 < a,b < c,d; c and d have two maximal common lower bounds
        let err =
            Lattice::from_covers_unlabeled(5, &[(0, 1), (0, 2), (1, 3), (2, 3), (1, 4), (2, 4)])
                .unwrap_err();
        assert!(matches!(err, Error::NotMeetSemilattice(_, _)));
        assert!(matches!(
            Lattice::from_covers_unlabeled(2, &[(0, 5)]).unwrap_err(),
            Error::IndexOutOfRange { .. }
        ));
    }

    #[test]
    fn meet_semilattice_without_top() {
        // 0 < 1, 0 < 2: a "V"
        let l = Lattice::from_covers_unlabeled(3, &[(0, 1), (0, 2)]).unwrap();
        assert_eq!(l.top(), None);
        assert!(!l.is_lattice());
        assert_eq!(l.meet(1, 2), 0);
        assert_eq!(l.is_atomic().unwrap_err(), Error::NoTop);
    }

    #[test]
    fn redundant_edges_are_reduced() {
        let l = Lattice::from_covers_unlabeled(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(l.covers(), &[(0, 1), (1, 2)]);
    }

    #[test]
    fn unranked_pentagon() {
        // N5: 0 < a < b < 1 and 0 < c < 1
        let l =
            Lattice::from_covers_unlabeled(5, &[(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)]).unwrap();
        assert!(!l.is_ranked());
        assert!(l.is_lattice());
        assert_eq!(l.count_by_rank(1).unwrap_err(), Error::NotRanked);
        assert_eq!(l.join(1, 3), Some(4));
        assert_eq!(l.meet(2, 3), 0);
    }

    #[test]
    fn interval_and_product() {
        let d = diamond();
        let iv = d.interval(1, 3).unwrap();
        assert_eq!(iv.embedding, vec![1, 3]);
        assert_eq!(iv.lattice.len(), 2);
        assert_eq!(d.interval(3, 3).unwrap().lattice.len(), 1);
        assert_eq!(d.interval(1, 2).unwrap_err(), Error::NotComparable(1, 2));

        let p = chain(2).product(&chain(1)).unwrap();
        assert_eq!(p.len(), 6);
        assert_eq!(p.height().unwrap(), 3);
        assert_eq!(p.name(3), "(1;1)");
    }

    #[test]
    fn atomicity() {
        assert!(diamond().is_atomic().unwrap());
        assert!(!chain(2).is_atomic().unwrap());
        assert_eq!(chain(2).atoms().iter().collect::<Vec<_>>(), vec![1]);
    }
}
