//! Isomorph-free enumeration of small lattices and the scan comparing
//! relative complementation with the SSP property.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rayon::prelude::*;

use crate::canon::{canonical_form, relation_canonical_labeling, CanonicalForm};
use crate::error::{Error, Result};
use crate::format::to_text;
use crate::lattice::Lattice;
use crate::set::{ElementSet, Family};
use crate::shattering::shattered_set;
use crate::ssp::{format_set, is_rc, is_ssp, non_rc_family, Outcome, RcVerdict, Strategy};

/// Largest element count accepted by [`enumerate_lattices`].
pub const MAX_ENUMERATION: usize = 8;

/// A poset on `0..len` stored as strict down-set masks.
#[derive(Clone, Debug)]
struct Poset {
    below: Vec<u16>,
}

impl Poset {
    fn len(&self) -> usize {
        self.below.len()
    }

    fn up_rows(&self) -> Vec<ElementSet> {
        let n = self.len();
        (0..n)
            .map(|x| {
                ElementSet::from_indices(
                    n,
                    (0..n).filter(|&y| y == x || self.below[y] >> x & 1 == 1),
                )
            })
            .collect()
    }

    fn from_form(form: &CanonicalForm) -> Self {
        let n = form.len();
        let below = (0..n)
            .map(|y| {
                (0..n)
                    .filter(|&x| x != y && form.leq(x, y))
                    .fold(0u16, |m, x| m | 1 << x)
            })
            .collect();
        Self { below }
    }

    /// Strict down-sets that may sit under a new maximal element.
    fn ideals(&self) -> Vec<u16> {
        let n = self.len();
        (0..1u16 << n)
            .filter(|&m| (0..n).all(|x| m >> x & 1 == 0 || self.below[x] & !m == 0))
            .collect()
    }

    fn extend(&self, ideal: u16) -> Self {
        let mut below = self.below.clone();
        below.push(ideal);
        Self { below }
    }

    /// Adds a bottom and a top; the result has `len() + 2` elements with the
    /// bottom at index 0 and the top last.
    fn bounded(&self) -> Result<Lattice> {
        let m = self.len();
        let top = m + 1;
        // transitively implied pairs are dropped by `from_covers`
        let mut covers = vec![(0, top)];
        for y in 0..m {
            covers.push((0, y + 1));
            covers.push((y + 1, top));
            for x in 0..m {
                if self.below[y] >> x & 1 == 1 {
                    covers.push((x + 1, y + 1));
                }
            }
        }
        Lattice::from_covers_unlabeled(m + 2, &covers)
    }
}

/// All posets on `m` elements up to isomorphism, in canonical-form order.
fn posets(m: usize) -> Vec<Poset> {
    let mut level = vec![Poset { below: Vec::new() }];
    for _ in 0..m {
        let children: Vec<(CanonicalForm, ())> = level
            .par_iter()
            .flat_map_iter(|p| {
                p.ideals()
                    .into_iter()
                    .map(|ideal| {
                        (
                            relation_canonical_labeling(&p.extend(ideal).up_rows()).0,
                            (),
                        )
                    })
                    .collect::<Vec<_>>()
            })
            .collect();
        let unique: BTreeMap<CanonicalForm, ()> = children.into_iter().collect();
        level = unique.keys().map(Poset::from_form).collect();
    }
    level
}

/// Every lattice on `n` elements exactly once up to isomorphism, sorted by
/// canonical form. Labels are `0..n`; the bottom is `0` and the top `n-1`.
pub fn enumerate_lattices(n: usize) -> Result<Vec<Lattice>> {
    if n == 0 || n > MAX_ENUMERATION {
        return Err(Error::TooLarge(format!(
            "lattice enumeration supports 1..={MAX_ENUMERATION} elements, got {n}"
        )));
    }
    if n == 1 {
        return Lattice::from_covers_unlabeled(1, &[]).map(|l| vec![l]);
    }
    let mut found: Vec<(CanonicalForm, Lattice)> = posets(n - 2)
        .par_iter()
        .filter_map(|p| p.bounded().ok().filter(Lattice::is_lattice))
        .map(|l| (canonical_form(&l), l))
        .collect();
    found.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(found.into_iter().map(|(_, l)| l).collect())
}

#[derive(Clone, Debug)]
pub enum Counterexample {
    /// Relatively complemented, yet some family shatters fewer elements than
    /// it has members.
    RcNotSsp { lattice: Lattice, witness: Family },
    /// Not relatively complemented, but the 3-element-interval family failed
    /// to violate the bound. Indicates a bug rather than a discovery.
    NonRcNotFalsified { lattice: Lattice, family: Family },
}

impl Counterexample {
    pub fn lattice(&self) -> &Lattice {
        match self {
            Counterexample::RcNotSsp { lattice, .. }
            | Counterexample::NonRcNotFalsified { lattice, .. } => lattice,
        }
    }

    fn describe(&self) -> String {
        let (kind, lattice, family) = match self {
            Counterexample::RcNotSsp { lattice, witness } => ("rc-not-ssp", lattice, witness),
            Counterexample::NonRcNotFalsified { lattice, family } => {
                ("non-rc-not-falsified", lattice, family)
            }
        };
        format!(
            "counterexample {kind}: family {} (|F|={}, |Str|={})\n{}",
            format_set(lattice, family),
            family.len(),
            shattered_set(lattice, family).len(),
            to_text(lattice)
        )
    }
}

#[derive(Clone, Debug)]
pub struct ScanReport {
    pub n: usize,
    pub total_lattices: usize,
    pub rc_count: usize,
    pub ssp_count: usize,
    /// Lattices where the RC verdict and the SSP verdict agree.
    pub agreements: usize,
    /// Non-RC lattices whose 3-element-interval family violates the bound.
    pub non_rc_falsified: usize,
    pub counterexamples: Vec<Counterexample>,
    /// RC lattices that neither fit the budget nor carry a certificate.
    pub inconclusive: Vec<Lattice>,
}

impl ScanReport {
    pub const TSV_HEADER: &'static str = "n\ttotal\trc\tssp\tinconclusive\tcounterexamples";

    pub fn tsv_row(&self) -> String {
        format!(
            "{}\t{}\t{}\t{}\t{}\t{}",
            self.n,
            self.total_lattices,
            self.rc_count,
            self.ssp_count,
            self.inconclusive.len(),
            self.counterexamples.len()
        )
    }

    /// Summary line followed by every counterexample and inconclusive lattice.
    pub fn to_text(&self) -> String {
        let mut out = format!(
            "n={} total={} rc={} ssp={} agreements={} inconclusive={} counterexamples={}\n",
            self.n,
            self.total_lattices,
            self.rc_count,
            self.ssp_count,
            self.agreements,
            self.inconclusive.len(),
            self.counterexamples.len()
        );
        for c in &self.counterexamples {
            out.push_str(&c.describe());
        }
        for l in &self.inconclusive {
            let _ = write!(out, "inconclusive\n{}", to_text(l));
        }
        out
    }
}

pub fn scan_to_tsv(reports: &[ScanReport]) -> String {
    let mut out = format!("{}\n", ScanReport::TSV_HEADER);
    for r in reports {
        out.push_str(&r.tsv_row());
        out.push('\n');
    }
    out
}

enum Verdict {
    NonRc { unfalsified: Option<Family> },
    Ssp,
    Violated(Family),
    Inconclusive,
}

fn classify(lattice: &Lattice, budget: u64) -> Verdict {
    match is_rc(lattice) {
        RcVerdict::Witness(w) => {
            let family = non_rc_family(lattice, w).expect("scanner produced a valid witness");
            let violated = shattered_set(lattice, &family).len() < family.len();
            Verdict::NonRc {
                unfalsified: (!violated).then_some(family),
            }
        }
        RcVerdict::RelativelyComplemented => {
            let v = is_ssp(lattice, Strategy::Auto, budget);
            match v.outcome {
                Outcome::CertifiedSsp => Verdict::Ssp,
                Outcome::Violated => {
                    Verdict::Violated(v.witness.expect("violated verdict carries a witness"))
                }
                Outcome::Inconclusive => Verdict::Inconclusive,
            }
        }
    }
}

/// Scans every lattice with `1..=n_max` elements. Output is independent of the
/// thread count.
pub fn conjecture_scan(n_max: usize, budget: u64) -> Result<Vec<ScanReport>> {
    (1..=n_max).map(|n| scan_size(n, budget)).collect()
}

pub fn scan_size(n: usize, budget: u64) -> Result<ScanReport> {
    let lattices = enumerate_lattices(n)?;
    let verdicts: Vec<Verdict> = lattices.par_iter().map(|l| classify(l, budget)).collect();
    let mut report = ScanReport {
        n,
        total_lattices: lattices.len(),
        rc_count: 0,
        ssp_count: 0,
        agreements: 0,
        non_rc_falsified: 0,
        counterexamples: Vec::new(),
        inconclusive: Vec::new(),
    };
    for (lattice, verdict) in lattices.into_iter().zip(verdicts) {
        match verdict {
            Verdict::NonRc { unfalsified: None } => {
                report.non_rc_falsified += 1;
                report.agreements += 1;
            }
            Verdict::NonRc {
                unfalsified: Some(family),
            } => {
                report
                    .counterexamples
                    .push(Counterexample::NonRcNotFalsified { lattice, family });
            }
            Verdict::Ssp => {
                report.rc_count += 1;
                report.ssp_count += 1;
                report.agreements += 1;
            }
            Verdict::Violated(witness) => {
                report.rc_count += 1;
                report
                    .counterexamples
                    .push(Counterexample::RcNotSsp { lattice, witness });
            }
            Verdict::Inconclusive => {
                report.rc_count += 1;
                report.inconclusive.push(lattice);
            }
        }
    }
    Ok(report)
}
