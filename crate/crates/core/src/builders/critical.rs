//! An inclusion-maximal family of VC dimension 1 in a subspace lattice that is
//! smaller than the level bound.

use super::subspace::{subspace_lattice_with_subspaces, Subspace};
use crate::error::{Error, Result};
use crate::lattice::Lattice;
use crate::set::Family;
use crate::shattering::vc_dim;

#[derive(Clone, Debug)]
pub struct CriticalFamily {
    pub lattice: Lattice,
    pub subspaces: Vec<Subspace>,
    /// `{0, F_q^n}` together with every line outside the hyperplane `x_n = 0`.
    pub family: Family,
    pub vc: usize,
    /// Adding any absent element raises the VC dimension above 1.
    pub inclusion_maximal: bool,
    /// Number of subspaces of dimension at most 1.
    pub count_up_to_1: usize,
}

pub fn critical_family(q: u32, n: usize) -> Result<CriticalFamily> {
    if n < 2 {
        return Err(Error::DimensionTooSmall(n));
    }
    let (lattice, subspaces) = subspace_lattice_with_subspaces(q, n)?;
    let mut family = Family::empty(lattice.len());
    family.insert(lattice.bottom());
    family.insert(lattice.top().expect("subspace lattices are bounded"));
    for (i, s) in subspaces.iter().enumerate() {
        if s.dim() == 1 && s.basis()[0][n - 1] != 0 {
            family.insert(i);
        }
    }
    let vc = vc_dim(&lattice, &family)?;
    let mut inclusion_maximal = true;
    for x in family.complement().iter() {
        let mut bigger = family.clone();
        bigger.insert(x);
        if vc_dim(&lattice, &bigger)? <= 1 {
            inclusion_maximal = false;
            break;
        }
    }
    let count_up_to_1 = lattice.count_up_to(1)?;
    Ok(CriticalFamily {
        lattice,
        subspaces,
        family,
        vc,
        inclusion_maximal,
        count_up_to_1,
    })
}
