//! The SSP property `|Str(F)| >= |F|`: certificates, exhaustive search,
//! relative complementation and the constructive checks that accompany them.

pub mod brute;
mod checks;

use std::fmt;

pub use brute::ShatterEngine;
pub use checks::{
    antichain_check, one_minimal_check, product_ssp_witness, AntichainReport, OneMinimalReport,
    ProductSsp, ProductWitness,
};

use crate::error::{Error, Result};
use crate::lattice::Lattice;
use crate::mobius::MobiusTable;
use crate::set::{ElementSet, Family};
use crate::shattering::shattered_set;

/// Default family-count limit for exhaustive search.
pub const DEFAULT_BUDGET: u64 = 1 << 22;

/// A 3-element interval `x < z < y` with nothing else strictly between.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RcWitness {
    pub x: usize,
    pub z: usize,
    pub y: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RcVerdict {
    RelativelyComplemented,
    Witness(RcWitness),
}

impl RcVerdict {
    pub fn is_rc(&self) -> bool {
        matches!(self, RcVerdict::RelativelyComplemented)
    }

    pub fn witness(&self) -> Option<RcWitness> {
        match self {
            RcVerdict::Witness(w) => Some(*w),
            RcVerdict::RelativelyComplemented => None,
        }
    }
}

/// Decides relative complementation by scanning for 3-element intervals.
/// Reports the smallest witness in `(x, z, y)` order.
pub fn is_rc(lattice: &Lattice) -> RcVerdict {
    let n = lattice.len();
    let mut best: Option<RcWitness> = None;
    for x in 0..n {
        for y in lattice.up_set(x).iter().filter(|&y| y != x) {
            let mut between = lattice.up_set(x).intersection(lattice.down_set(y));
            between.remove(x);
            between.remove(y);
            if between.len() == 1 {
                let z = between.iter().next().unwrap_or(x);
                let w = RcWitness { x, z, y };
                if best.is_none_or(|b| w < b) {
                    best = Some(w);
                }
            }
        }
        if best.is_some() {
            break;
        }
    }
    match best {
        Some(w) => RcVerdict::Witness(w),
        None => RcVerdict::RelativelyComplemented,
    }
}

/// The family `{w : w <= y} \ {x}` built from a 3-element interval. It
/// shatters nothing outside `[0, y]` and neither `z` nor `y`.
pub fn non_rc_family(lattice: &Lattice, w: RcWitness) -> Result<Family> {
    for i in [w.x, w.z, w.y] {
        lattice.check_index(i)?;
    }
    let mut between = lattice.up_set(w.x).intersection(lattice.down_set(w.y));
    between.remove(w.x);
    between.remove(w.y);
    if !lattice.lt(w.x, w.y) || between.len() != 1 || !between.contains(w.z) {
        return Err(Error::PreconditionViolated(format!(
            "({}, {}, {}) is not a 3-element interval",
            w.x, w.z, w.y
        )));
    }
    let mut family = lattice.down_set(w.y).clone();
    family.remove(w.x);
    Ok(family)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Strategy {
    /// 3-element-interval shortcut, then exhaustive search when the budget
    /// allows, then certificates.
    #[default]
    Auto,
    Brute,
    Certificate,
}

impl std::str::FromStr for Strategy {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "auto" => Ok(Strategy::Auto),
            "brute" => Ok(Strategy::Brute),
            "certificate" => Ok(Strategy::Certificate),
            other => Err(format!("unknown strategy `{other}`")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    CertifiedSsp,
    Violated,
    Inconclusive,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CertificateKind {
    /// Möbius function nonzero on every comparable pair.
    NonvanishingMu,
    /// RC lattice whose Möbius function vanishes at most at `(0, e)`.
    RcMuVanishingOnce,
    /// Every family examined or skipped by a sound bound.
    BruteForce,
}

impl fmt::Display for CertificateKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CertificateKind::NonvanishingMu => "NonvanishingMu",
            CertificateKind::RcMuVanishingOnce => "RcMuVanishingOnce",
            CertificateKind::BruteForce => "BruteForce",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SspVerdict {
    pub outcome: Outcome,
    pub certificate: Option<CertificateKind>,
    /// Present iff `outcome == Violated`.
    pub witness: Option<Family>,
    pub families_examined: u64,
}

impl SspVerdict {
    fn certified(kind: CertificateKind, examined: u64) -> Self {
        Self {
            outcome: Outcome::CertifiedSsp,
            certificate: Some(kind),
            witness: None,
            families_examined: examined,
        }
    }

    fn violated(witness: Family, examined: u64) -> Self {
        Self {
            outcome: Outcome::Violated,
            certificate: None,
            witness: Some(witness),
            families_examined: examined,
        }
    }

    fn inconclusive(examined: u64) -> Self {
        Self {
            outcome: Outcome::Inconclusive,
            certificate: None,
            witness: None,
            families_examined: examined,
        }
    }

    /// One-line report using element labels, e.g.
    /// `Violated, witness {1,2}, |F|=2, |Str|=1`.
    pub fn describe(&self, lattice: &Lattice) -> String {
        match self.outcome {
            Outcome::CertifiedSsp => {
                let kind = self.certificate.map(|k| k.to_string()).unwrap_or_default();
                if self.certificate == Some(CertificateKind::BruteForce) {
                    format!("CertifiedSSP ({kind}), families={}", self.families_examined)
                } else {
                    format!("CertifiedSSP ({kind})")
                }
            }
            Outcome::Violated => {
                let w = self
                    .witness
                    .as_ref()
                    .expect("violated verdict carries a witness");
                format!(
                    "Violated, witness {}, |F|={}, |Str|={}",
                    format_set(lattice, w),
                    w.len(),
                    shattered_set(lattice, w).len()
                )
            }
            Outcome::Inconclusive => {
                format!("Inconclusive, families={}", self.families_examined)
            }
        }
    }
}

/// `{a,b,c}` using element labels.
pub fn format_set(lattice: &Lattice, set: &ElementSet) -> String {
    let names: Vec<&str> = set.iter().map(|x| lattice.name(x)).collect();
    format!("{{{}}}", names.join(","))
}

/// Certificate-only SSP proof, if one applies.
pub fn certify(lattice: &Lattice, mu: &MobiusTable) -> Option<CertificateKind> {
    let vanishing = mu.vanishing_pairs();
    if vanishing.is_empty() {
        return Some(CertificateKind::NonvanishingMu);
    }
    let top = lattice.top()?;
    if vanishing == [(lattice.bottom(), top)] && is_rc(lattice).is_rc() {
        return Some(CertificateKind::RcMuVanishingOnce);
    }
    None
}

/// Whether exhaustive search over `2^n` families fits in `budget`.
pub fn fits_budget(n: usize, budget: u64) -> bool {
    n < 64 && (1u64 << n) <= budget
}

/// Decides (or fails to decide) the SSP property.
///
/// Resource exhaustion is reported as [`Outcome::Inconclusive`]. A returned
/// witness is always re-checked against [`shattered_set`].
pub fn is_ssp(lattice: &Lattice, strategy: Strategy, budget: u64) -> SspVerdict {
    match strategy {
        Strategy::Certificate => certificate_verdict(lattice),
        Strategy::Brute => brute_verdict(lattice, budget),
        Strategy::Auto => {
            if let RcVerdict::Witness(w) = is_rc(lattice) {
                let family = non_rc_family(lattice, w).expect("scanner produced a valid witness");
                return checked_violation(lattice, family, 1);
            }
            if fits_budget(lattice.len(), budget) {
                return brute_verdict(lattice, budget);
            }
            certificate_verdict(lattice)
        }
    }
}

fn certificate_verdict(lattice: &Lattice) -> SspVerdict {
    match certify(lattice, &MobiusTable::new(lattice)) {
        Some(kind) => SspVerdict::certified(kind, 0),
        None => SspVerdict::inconclusive(0),
    }
}

fn brute_verdict(lattice: &Lattice, budget: u64) -> SspVerdict {
    let n = lattice.len();
    if !fits_budget(n, budget) {
        return SspVerdict::inconclusive(0);
    }
    let engine = ShatterEngine::new(lattice).expect("budget check bounds n by 63");
    let out = brute::search(&engine, true);
    match out.violations.first() {
        Some(&mask) => checked_violation(lattice, ElementSet::from_mask(n, mask), out.covered),
        None => SspVerdict::certified(CertificateKind::BruteForce, out.covered),
    }
}

fn checked_violation(lattice: &Lattice, family: Family, examined: u64) -> SspVerdict {
    let shattered = shattered_set(lattice, &family).len();
    assert!(
        shattered < family.len(),
        "search reported a non-violating family {family:?}"
    );
    SspVerdict::violated(family, examined)
}

/// Every family with `|Str(F)| < |F|`, ordered by size and then by the integer
/// whose bits are the members.
pub fn violating_families(lattice: &Lattice, budget: u64) -> Result<Vec<Family>> {
    let n = lattice.len();
    if !fits_budget(n, budget) {
        return Err(Error::BudgetExceeded {
            elements: n,
            budget,
        });
    }
    let engine = ShatterEngine::new(lattice).expect("budget check bounds n by 63");
    Ok(brute::search(&engine, false)
        .violations
        .into_iter()
        .map(|m| ElementSet::from_mask(n, m))
        .collect())
}
