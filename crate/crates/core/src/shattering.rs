//! Shattering, VC dimension, characteristic functions and the elimination
//! certificates that express a non-shattered `chi_z` through lower `chi_y`.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lattice::Lattice;
use crate::linalg::RationalMatrix;
use crate::mobius::MobiusTable;
use crate::set::{ElementSet, Family};

/// Whether every `x <= y` equals `z ∧ y` for some `z` in the family.
pub fn shatters(lattice: &Lattice, family: &Family, y: usize) -> bool {
    lattice.down_set(y).is_subset(&realized(lattice, family, y))
}

/// `{z ∧ y : z in family}`.
fn realized(lattice: &Lattice, family: &Family, y: usize) -> ElementSet {
    let mut set = ElementSet::empty(lattice.len());
    for z in family {
        set.insert(lattice.meet(z, y));
    }
    set
}

/// The set of all elements shattered by the family. Always down-closed.
pub fn shattered_set(lattice: &Lattice, family: &Family) -> ElementSet {
    let mut out = ElementSet::empty(lattice.len());
    for &y in lattice.linear_extension() {
        if lattice.lower_covers(y).iter().all(|&c| out.contains(c)) && shatters(lattice, family, y)
        {
            out.insert(y);
        }
    }
    out
}

/// Maximum rank of a shattered element.
pub fn vc_dim(lattice: &Lattice, family: &Family) -> Result<usize> {
    let ranks = lattice.ranks().ok_or(Error::NotRanked)?;
    if family.is_empty() {
        return Err(Error::EmptyFamily);
    }
    Ok(shattered_set(lattice, family)
        .iter()
        .map(|y| ranks[y])
        .max()
        .unwrap_or(0))
}

/// `F_d`: all elements of rank at most `d`.
pub fn level_family(lattice: &Lattice, d: usize) -> Result<Family> {
    let ranks = lattice.ranks().ok_or(Error::NotRanked)?;
    Ok(ElementSet::from_indices(
        lattice.len(),
        (0..lattice.len()).filter(|&x| ranks[x] <= d),
    ))
}

/// The characteristic functions `chi_x(y) = [y >= x]`, one row per element.
#[derive(Clone, Debug)]
pub struct CharMatrix {
    rows: Vec<ElementSet>,
}

impl CharMatrix {
    pub fn new(lattice: &Lattice) -> Self {
        Self {
            rows: (0..lattice.len())
                .map(|x| lattice.up_set(x).clone())
                .collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn entry(&self, x: usize, y: usize) -> bool {
        self.rows[x].contains(y)
    }

    /// Support of `chi_x`.
    pub fn row(&self, x: usize) -> &ElementSet {
        &self.rows[x]
    }

    /// Rows `row_elems` restricted to the columns in `columns`, both taken in
    /// increasing index order.
    pub fn restricted(&self, row_elems: &ElementSet, columns: &ElementSet) -> RationalMatrix {
        let rs: Vec<usize> = row_elems.iter().collect();
        let cs: Vec<usize> = columns.iter().collect();
        RationalMatrix::indicator(rs.len(), cs.len(), |i, j| self.entry(rs[i], cs[j]))
    }

    /// Full matrix with rows and columns permuted by `order`.
    pub fn ordered(&self, order: &[usize]) -> RationalMatrix {
        RationalMatrix::indicator(order.len(), order.len(), |i, j| {
            self.entry(order[i], order[j])
        })
    }
}

pub fn char_matrix(lattice: &Lattice) -> CharMatrix {
    CharMatrix::new(lattice)
}

/// Whether `{chi_x}` is linearly independent, i.e. the characteristic matrix
/// has full rank over the rationals.
pub fn basis_check(lattice: &Lattice) -> bool {
    let n = lattice.len();
    let all = ElementSet::full(n);
    CharMatrix::new(lattice).restricted(&all, &all).rank() == n
}

/// Coefficients `gamma_y` with `chi_z(p) = sum_{y < z} gamma_y chi_y(p)` for
/// every `p` in a family that does not shatter `z`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EliminationCert {
    pub z: usize,
    /// An element `x <= z` with `p ∧ z != x` for all `p` in the family.
    pub witness_x: usize,
    /// Nonzero coefficients only.
    pub coeffs: BTreeMap<usize, BigRational>,
}

impl EliminationCert {
    /// Checks the defining identity at every `p` in the family.
    pub fn verify(&self, lattice: &Lattice, family: &Family) -> bool {
        if self.coeffs.keys().any(|&y| !lattice.lt(y, self.z)) {
            return false;
        }
        family.iter().all(|p| {
            let lhs = indicator(lattice.leq(self.z, p));
            let rhs: BigRational = self
                .coeffs
                .iter()
                .filter(|(&y, _)| lattice.leq(y, p))
                .map(|(_, c)| c.clone())
                .sum();
            lhs == rhs
        })
    }
}

fn indicator(b: bool) -> BigRational {
    if b {
        BigRational::one()
    } else {
        BigRational::zero()
    }
}

/// Elements `x <= z` not of the form `p ∧ z`, in linear-extension order.
fn missing_witnesses(lattice: &Lattice, family: &Family, z: usize) -> Vec<usize> {
    let got = realized(lattice, family, z);
    let down = lattice.down_set(z);
    lattice
        .linear_extension()
        .iter()
        .copied()
        .filter(|&x| down.contains(x) && !got.contains(x))
        .collect()
}

/// Inclusion-exclusion elimination of `chi_z` using the first non-realized
/// witness `x` with `mu(x, z) != 0`:
/// `gamma_y = -mu(x,y) / mu(x,z)` for `x <= y < z`.
pub fn elimination(
    lattice: &Lattice,
    mu: &MobiusTable,
    family: &Family,
    z: usize,
) -> Result<EliminationCert> {
    lattice.check_index(z)?;
    let witnesses = missing_witnesses(lattice, family, z);
    if witnesses.is_empty() {
        return Err(Error::ElementIsShattered(z));
    }
    let mu_at = |a: usize, b: usize| mu.get(a, b).cloned().unwrap_or_default();
    let x = witnesses
        .into_iter()
        .find(|&x| !mu_at(x, z).is_zero())
        .ok_or(Error::NoNonvanishingWitness(z))?;
    let denom = mu_at(x, z);
    let mut coeffs = BTreeMap::new();
    for (y, v) in mu.row(x) {
        if y != z && lattice.leq(y, z) && !v.is_zero() {
            coeffs.insert(y, -BigRational::new(v.clone(), denom.clone()));
        }
    }
    let cert = EliminationCert {
        z,
        witness_x: x,
        coeffs,
    };
    if cert.verify(lattice, family) {
        Ok(cert)
    } else {
        Err(Error::PreconditionViolated(format!(
            "elimination identity failed at z = {z}"
        )))
    }
}

/// Elimination for lattices whose Möbius function may vanish at `(0, e)`.
///
/// Outside the `z = e`, `mu(0,e) = 0` case this is [`elimination`]. In that
/// case the coefficients come from solving `sum_{y<e} lambda_y chi_y|F =
/// chi_e|F` exactly; the columns `{v_p : p in F}` are independent whenever `F`
/// misses some nonzero element, so a solution exists.
pub fn elimination_rc(
    lattice: &Lattice,
    mu: &MobiusTable,
    family: &Family,
    z: usize,
) -> Result<EliminationCert> {
    lattice.check_index(z)?;
    let n = lattice.len();
    let top = lattice.top().ok_or(Error::NoTop)?;
    let bottom = lattice.bottom();
    let mut without_bottom = ElementSet::full(n);
    without_bottom.remove(bottom);
    if family.len() == n || *family == without_bottom {
        return Err(Error::ForbiddenFamily);
    }
    let witnesses = missing_witnesses(lattice, family, z);
    if witnesses.is_empty() {
        return Err(Error::ElementIsShattered(z));
    }
    let mu_0e = mu.get(bottom, top).cloned().unwrap_or_default();
    if z != top || !mu_0e.is_zero() {
        return elimination(lattice, mu, family, z);
    }

    let members: Vec<usize> = family.iter().collect();
    let lower: Vec<usize> = (0..n).filter(|&y| y != top).collect();
    let system = RationalMatrix::indicator(members.len(), lower.len(), |i, j| {
        lattice.leq(lower[j], members[i])
    });
    let rhs: Vec<BigRational> = members.iter().map(|&p| indicator(p == top)).collect();
    let solution = system.solve(&rhs).ok_or_else(|| {
        Error::PreconditionViolated("chi_e is not in the span of lower rows on this family".into())
    })?;
    let coeffs = lower
        .iter()
        .zip(solution)
        .filter(|(_, c)| !c.is_zero())
        .map(|(&y, c)| (y, c))
        .collect();
    let cert = EliminationCert {
        z,
        witness_x: witnesses[0],
        coeffs,
    };
    if cert.verify(lattice, family) {
        Ok(cert)
    } else {
        Err(Error::PreconditionViolated(
            "solved coefficients failed verification".into(),
        ))
    }
}

/// Basis of the linear dependencies `sum_a c_a v_a = 0` among the columns
/// `v_p(y) = [y <= p]`, `y` ranging over `L \ e`. Each basis vector is indexed
/// by element.
pub fn column_dependencies(lattice: &Lattice) -> Result<Vec<Vec<BigRational>>> {
    let top = lattice.top().ok_or(Error::NoTop)?;
    let n = lattice.len();
    let lower: Vec<usize> = (0..n).filter(|&y| y != top).collect();
    let m = RationalMatrix::indicator(lower.len(), n, |i, p| lattice.leq(lower[i], p));
    Ok(m.nullspace())
}

/// Rank of `{chi_y|F : y in Str(F)}`. When it equals `|F|` these rows span all
/// functions on `F`, which proves `|Str(F)| >= |F|` for this family.
pub fn spanning_certificate(lattice: &Lattice, family: &Family) -> usize {
    let shattered = shattered_set(lattice, family);
    CharMatrix::new(lattice)
        .restricted(&shattered, family)
        .rank()
}
