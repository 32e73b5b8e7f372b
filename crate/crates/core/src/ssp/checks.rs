use crate::error::{Error, Result};
use crate::lattice::Lattice;
use crate::mobius::MobiusTable;
use crate::set::{ElementSet, Family};
use crate::shattering::{shattered_set, shatters};

use super::{is_rc, is_ssp, Outcome, Strategy, DEFAULT_BUDGET};

/// Outcome of the antichain bound `|F| <= |F_A|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AntichainReport {
    /// `F_A = {x : x < a for some a in A}`.
    pub below: ElementSet,
    pub family_size: usize,
    pub bound_holds: bool,
    /// `F_A` shatters no element of `A`.
    pub below_shatters_none: bool,
}

impl AntichainReport {
    pub fn holds(&self) -> bool {
        self.bound_holds && self.below_shatters_none
    }
}

/// Checks the antichain bound for a family that shatters no element of the
/// maximal antichain `antichain`, on a lattice with nonvanishing Möbius
/// function.
pub fn antichain_check(
    lattice: &Lattice,
    antichain: &ElementSet,
    family: &Family,
) -> Result<AntichainReport> {
    if !MobiusTable::new(lattice).is_nonvanishing() {
        return Err(Error::PreconditionViolated(
            "Mobius function vanishes on some pair".into(),
        ));
    }
    let members: Vec<usize> = antichain.iter().collect();
    let pairwise_incomparable = members.iter().enumerate().all(|(i, &a)| {
        members[i + 1..]
            .iter()
            .all(|&b| !lattice.leq(a, b) && !lattice.leq(b, a))
    });
    let maximal = (0..lattice.len()).all(|x| {
        members
            .iter()
            .any(|&a| lattice.leq(a, x) || lattice.leq(x, a))
    });
    if members.is_empty() || !pairwise_incomparable || !maximal {
        return Err(Error::NotMaximalAntichain);
    }
    if let Some(&a) = members.iter().find(|&&a| shatters(lattice, family, a)) {
        return Err(Error::PreconditionViolated(format!(
            "family shatters antichain element {}",
            lattice.name(a)
        )));
    }
    let mut below = ElementSet::empty(lattice.len());
    for &a in &members {
        let mut strict = lattice.down_set(a).clone();
        strict.remove(a);
        below.union_with(&strict);
    }
    let below_shatters_none = !members.iter().any(|&a| shatters(lattice, &below, a));
    Ok(AntichainReport {
        family_size: family.len(),
        bound_holds: family.len() <= below.len(),
        below_shatters_none,
        below,
    })
}

/// Product `K × L` of two lattices already certified SSP, for building the
/// shattered set `J` of product families.
#[derive(Clone, Debug)]
pub struct ProductSsp<'a> {
    k: &'a Lattice,
    l: &'a Lattice,
    product: Lattice,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductWitness {
    /// `J = ⊔_l J_l × {l}`, indexed in the product lattice.
    pub j: ElementSet,
    pub family_size: usize,
    /// `|J| >= |F|`.
    pub bound_holds: bool,
    /// The family shatters every element of `J`.
    pub all_shattered: bool,
}

impl ProductWitness {
    pub fn holds(&self) -> bool {
        self.bound_holds && self.all_shattered
    }
}

impl<'a> ProductSsp<'a> {
    /// Verifies both factors with [`is_ssp`] (automatic strategy, default
    /// budget) before accepting them.
    pub fn new(k: &'a Lattice, l: &'a Lattice) -> Result<Self> {
        if is_ssp(k, Strategy::Auto, DEFAULT_BUDGET).outcome != Outcome::CertifiedSsp {
            return Err(Error::FactorNotSsp("K"));
        }
        if is_ssp(l, Strategy::Auto, DEFAULT_BUDGET).outcome != Outcome::CertifiedSsp {
            return Err(Error::FactorNotSsp("L"));
        }
        Ok(Self {
            k,
            l,
            product: k.product(l)?,
        })
    }

    /// The product lattice; element `(k, l)` has index `k * |L| + l`.
    pub fn product(&self) -> &Lattice {
        &self.product
    }

    pub fn witness(&self, family: &Family) -> ProductWitness {
        let (nk, nl) = (self.k.len(), self.l.len());
        let idx = |k: usize, l: usize| k * nl + l;

        // I_k = Str_L(F_k) where F_k = {l : (k,l) in F}
        let i_sets: Vec<ElementSet> = (0..nk)
            .map(|k| {
                let f_k =
                    ElementSet::from_indices(nl, (0..nl).filter(|&l| family.contains(idx(k, l))));
                shattered_set(self.l, &f_k)
            })
            .collect();

        let mut j = ElementSet::empty(nk * nl);
        for l in 0..nl {
            // G_l = {k : l in I_k}, J_l = Str_K(G_l)
            let g_l = ElementSet::from_indices(nk, (0..nk).filter(|&k| i_sets[k].contains(l)));
            for k in &shattered_set(self.k, &g_l) {
                j.insert(idx(k, l));
            }
        }
        let all_shattered = j.iter().all(|x| shatters(&self.product, family, x));
        ProductWitness {
            family_size: family.len(),
            bound_holds: j.len() >= family.len(),
            all_shattered,
            j,
        }
    }
}

/// Builds `J` for a family on `K × L` after certifying both factors.
pub fn product_ssp_witness(k: &Lattice, l: &Lattice, family: &Family) -> Result<ProductWitness> {
    Ok(ProductSsp::new(k, l)?.witness(family))
}

/// The injection from the non-shattered set into a set disjoint from the
/// family, for families whose non-shattered set has one minimal element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OneMinimalReport {
    /// Unique minimal non-shattered element.
    pub x: usize,
    /// First `y <= x` (linear-extension order) with no `u` in `F`, `u ∧ x = y`.
    pub y: usize,
    /// `N = L \ Str(F) = [x)`.
    pub non_shattered: ElementSet,
    /// `D = {u : x ∧ u = y}`.
    pub disjoint: ElementSet,
    /// `(a, c(a))` with `c(a)` a complement of `x` in `[y, a]`.
    pub complements: Vec<(usize, usize)>,
    pub family_size: usize,
    pub shattered_size: usize,
    /// Complements lie in `D`, the map is injective and `D` misses `F`.
    pub injection_verified: bool,
}

impl OneMinimalReport {
    pub fn holds(&self) -> bool {
        self.injection_verified && self.family_size <= self.shattered_size
    }
}

pub fn one_minimal_check(lattice: &Lattice, family: &Family) -> Result<OneMinimalReport> {
    if !lattice.is_lattice() {
        return Err(Error::NotALattice);
    }
    if !is_rc(lattice).is_rc() {
        return Err(Error::NotRc);
    }
    let shattered = shattered_set(lattice, family);
    let non_shattered = shattered.complement();
    let minimal: Vec<usize> = non_shattered
        .iter()
        .filter(|&v| {
            lattice
                .lower_covers(v)
                .iter()
                .all(|&c| shattered.contains(c))
        })
        .collect();
    let &[x] = minimal.as_slice() else {
        return Err(Error::NotOneMinimal(minimal.len()));
    };

    let mut realized = ElementSet::empty(lattice.len());
    for u in family {
        realized.insert(lattice.meet(u, x));
    }
    let y = lattice
        .linear_extension()
        .iter()
        .copied()
        .find(|&v| lattice.leq(v, x) && !realized.contains(v))
        .expect("x is not shattered, so some y <= x is not realized");

    let disjoint = ElementSet::from_indices(
        lattice.len(),
        (0..lattice.len()).filter(|&u| lattice.meet(x, u) == y),
    );

    let mut complements = Vec::new();
    for a in &non_shattered {
        let c = lattice
            .linear_extension()
            .iter()
            .copied()
            .find(|&c| {
                lattice.leq(y, c)
                    && lattice.leq(c, a)
                    && lattice.meet(c, x) == y
                    && lattice.join(c, x) == Some(a)
            })
            .ok_or_else(|| {
                Error::PreconditionViolated(format!(
                    "no complement of {} in [{}, {}]",
                    lattice.name(x),
                    lattice.name(y),
                    lattice.name(a)
                ))
            })?;
        complements.push((a, c));
    }

    let images = ElementSet::from_indices(lattice.len(), complements.iter().map(|&(_, c)| c));
    let injection_verified = non_shattered == *lattice.up_set(x)
        && images.len() == complements.len()
        && images.is_subset(&disjoint)
        && !disjoint.intersects(family);

    Ok(OneMinimalReport {
        x,
        y,
        non_shattered,
        disjoint,
        complements,
        family_size: family.len(),
        shattered_size: shattered.len(),
        injection_verified,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b1() -> Lattice {
        Lattice::from_covers_unlabeled(2, &[(0, 1)]).unwrap()
    }

    fn b2() -> Lattice {
        Lattice::from_covers_unlabeled(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn product_of_two_points() {
        let k = b1();
        let l = b1();
        let p = ProductSsp::new(&k, &l).unwrap();
        // (0,1) -> 1, (1,0) -> 2
        let f = ElementSet::from_indices(4, [1, 2]);
        let w = p.witness(&f);
        assert_eq!(w.j.iter().collect::<Vec<_>>(), vec![0, 2]);
        assert!(w.holds());
        assert!(p.witness(&ElementSet::empty(4)).j.is_empty());
        assert_eq!(p.witness(&ElementSet::full(4)).j.len(), 4);
    }

    #[test]
    fn product_rejects_non_ssp_factor() {
        let chain = Lattice::from_covers_unlabeled(3, &[(0, 1), (1, 2)]).unwrap();
        let f = ElementSet::empty(6);
        assert_eq!(
            product_ssp_witness(&chain, &b1(), &f).unwrap_err(),
            Error::FactorNotSsp("K")
        );
    }

    #[test]
    fn one_minimal_on_b2() {
        let l = b2();
        let f = ElementSet::from_indices(4, [1, 2, 3]);
        let r = one_minimal_check(&l, &f).unwrap();
        assert_eq!((r.x, r.y), (3, 0));
        assert_eq!(r.disjoint.iter().collect::<Vec<_>>(), vec![0]);
        assert_eq!(r.complements, vec![(3, 0)]);
        assert!(r.holds());
        assert_eq!(r.shattered_size, 3);

        assert_eq!(
            one_minimal_check(&l, &ElementSet::full(4)).unwrap_err(),
            Error::NotOneMinimal(0)
        );
    }

    #[test]
    fn antichain_on_b2() {
        let l = b2();
        let a = ElementSet::from_indices(4, [1, 2]);
        let r = antichain_check(&l, &a, &ElementSet::from_indices(4, [0])).unwrap();
        assert_eq!(r.below.len(), 1);
        assert!(r.holds());
        assert_eq!(
            antichain_check(&l, &ElementSet::from_indices(4, [1]), &ElementSet::empty(4))
                .unwrap_err(),
            Error::NotMaximalAntichain
        );
        assert!(matches!(
            antichain_check(&l, &a, &ElementSet::full(4)).unwrap_err(),
            Error::PreconditionViolated(_)
        ));
    }
}
