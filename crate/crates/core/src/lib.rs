//! Shattering, VC dimension and the Sauer-Shelah-Perles property on finite
//! lattices.
//!
//! A family `F` of lattice elements shatters `y` when every `x <= y` is the
//! meet `y ∧ f` of some `f` in `F`. A lattice is SSP when every family
//! shatters at least as many elements as it has members.

pub mod builders;
pub mod canon;
pub mod error;
pub mod format;
pub mod lattice;
pub mod linalg;
pub mod mobius;
pub mod search;
pub mod set;
pub mod shattering;
pub mod ssp;

pub use canon::{canonical_form, is_isomorphic, CanonicalForm};
pub use error::{Error, Result};
pub use format::{parse_lattice, to_text};
pub use lattice::{Interval, Lattice, MAX_ELEMENTS};
pub use mobius::{check_inversion, mobius_table, vanishing_pairs, weisner_check, MobiusTable};
pub use search::{conjecture_scan, enumerate_lattices, ScanReport};
pub use set::{ElementSet, Family};
pub use shattering::{
    basis_check, char_matrix, column_dependencies, elimination, elimination_rc, level_family,
    shattered_set, shatters, spanning_certificate, vc_dim, EliminationCert,
};
pub use ssp::{
    antichain_check, is_rc, is_ssp, non_rc_family, one_minimal_check, product_ssp_witness,
    violating_families, CertificateKind, Outcome, RcVerdict, RcWitness, SspVerdict, Strategy,
};
