//! Verdicts on binomials `x^d1 + x^d2` with `n = 2m`: maximality of the
//! bent-component count, the structural consequences of maximality, the
//! nonlinearity and differential bounds, equivalence fingerprints, the
//! known families and the exhaustive search.

mod bounds;
mod catalog;
mod equiv;
mod search;
mod structure;

use alloc::vec::Vec;

pub use bounds::{bounds_report, BoundCheck, Relation};
pub use catalog::{family_catalog, CatalogEntry, Family};
pub use equiv::{
    equivalence_fingerprint, witness_search, EquivalenceReport, EquivalenceWitness, Fingerprint,
    FingerprintVerdict, WITNESS_MAX_DEGREE,
};
pub use search::{canonical_pair, search_binomials, SearchHit, SearchOptions, SearchPath};
pub use structure::{structure_checks, StructureCheck};

use crate::boolfun::{check_sf_subspace, DiffReport, ImageReport, SpectralSummary, VectorialFn};
use crate::ellmap::{ell_n_lattice, EllRecord};
use crate::gf2n::FieldContext;
use crate::quadratic::nonbent_set_quadratic;
use crate::stickelberger::{gcd_ledger, nu_and_minimizers, wt2, GcdLedger, StickelbergerRecord};
use crate::{Error, Result};

/// Largest degree for which canonical fingerprints are built without
/// `long_run`.
pub const CANONICAL_MAX_DEGREE: u32 = 12;
/// Largest degree for which the `nu` scan runs inside an analysis without
/// `long_run`.
pub const NU_ANALYSIS_MAX_DEGREE: u32 = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckStatus {
    Holds,
    Violated,
    /// Hypotheses not met; the check was not evaluated as a pass.
    Inapplicable(&'static str),
}

impl CheckStatus {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            CheckStatus::Holds
        } else {
            CheckStatus::Violated
        }
    }

    pub fn is_violated(self) -> bool {
        self == CheckStatus::Violated
    }

    pub fn as_str(self) -> &'static str {
        match self {
            CheckStatus::Holds => "holds",
            CheckStatus::Violated => "violated",
            CheckStatus::Inapplicable(_) => "inapplicable",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaximalityReport {
    pub sf_size: usize,
    /// `#S_F = 2^m`.
    pub maximal: bool,
    pub sf_is_subspace: bool,
    pub sf_dimension: Option<u32>,
    /// `S_F = GF(2^k)` for some `k | n`.
    pub sf_is_subfield: bool,
    pub sf_equals_subfield: bool,
    pub frobenius_commuting: bool,
    pub ell_exceeds_m: bool,
    /// `#S_F >= 2^m`.
    pub lower_bound_holds: bool,
    /// `maximal` iff `S_F` is a subspace of dimension `m`.
    pub subspace_criterion_holds: bool,
    /// `S_F = GF(2^m)` whenever `l(n) > m`, `F` commutes with squaring and
    /// `F` is maximal.
    pub subfield_law: CheckStatus,
}

impl MaximalityReport {
    pub fn holds(&self) -> bool {
        self.lower_bound_holds && self.subspace_criterion_holds && !self.subfield_law.is_violated()
    }
}

pub fn maximality_check(f: &VectorialFn<'_>, summary: &SpectralSummary, ell_n: u32) -> Result<MaximalityReport> {
    let ctx = f.ctx();
    let m = ctx.m().ok_or(Error::OddDegree("maximality check"))?;
    let sf = summary.sf().unwrap_or(&[]);
    let sf_size = sf.len();
    let maximal = sf_size == 1 << m;
    let sub = check_sf_subspace(sf);
    let sf_dimension = sub.is_subspace.then_some(sub.basis.len() as u32);
    let sf_is_subfield = match sf_dimension {
        Some(k) if k > 0 && ctx.n() % k == 0 => sf == ctx.subfield_elements(k).as_slice(),
        _ => false,
    };
    let sf_equals_subfield = summary.sf_equals_subfield() == Some(true);
    let frobenius_commuting = f.commutes_with_frobenius();
    let ell_exceeds_m = ell_n > m;
    let subfield_law = if !ell_exceeds_m {
        CheckStatus::Inapplicable("l(n) <= m")
    } else if !frobenius_commuting {
        CheckStatus::Inapplicable("F does not commute with squaring")
    } else if !maximal {
        CheckStatus::Inapplicable("not maximal")
    } else {
        CheckStatus::from_bool(sf_equals_subfield)
    };
    Ok(MaximalityReport {
        sf_size,
        maximal,
        sf_is_subspace: sub.is_subspace,
        sf_dimension,
        sf_is_subfield,
        sf_equals_subfield,
        frobenius_commuting,
        ell_exceeds_m,
        lower_bound_holds: sf_size >= 1 << m,
        subspace_criterion_holds: maximal == (sf_dimension == Some(m)),
        subfield_law,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassLabel {
    /// EA-invariants of `x^(2^m+1)`.
    Monomial,
    /// EA-invariants of `x^(2^i+1) + x^(2^i+2^m)` for some `0 < i < m`.
    Binomial,
    Unclassified,
}

impl ClassLabel {
    pub fn as_str(self) -> &'static str {
        match self {
            ClassLabel::Monomial => "monomial-class",
            ClassLabel::Binomial => "binomial-class",
            ClassLabel::Unclassified => "unclassified",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub label: ClassLabel,
    /// The least `i` whose family member matches, for the binomial class.
    pub member: Option<u32>,
    /// Whether the image size also matches that member. A mismatch rules out
    /// affine (but not EA) equivalence.
    pub image_matches: Option<bool>,
}

impl Classification {
    fn unclassified() -> Self {
        Classification { label: ClassLabel::Unclassified, member: None, image_matches: None }
    }
}

#[derive(Clone, Debug)]
pub struct CanonicalMember {
    pub label: ClassLabel,
    pub member: Option<u32>,
    pub exponents: (u64, u64),
    pub fingerprint: Fingerprint,
}

#[derive(Clone, Debug)]
pub struct AnalysisReport {
    pub n: u32,
    pub modulus: u64,
    pub exponents: Option<(u64, u64)>,
    pub maximality: MaximalityReport,
    /// Kernel-rank bentness agrees with Walsh bentness on every component
    /// (binomials of 2-adic weight at most 2 only).
    pub quadratic_agrees: Option<bool>,
    pub nonlinearity: u64,
    pub max_abs_walsh: u32,
    pub delta: u32,
    pub delta_set_size: usize,
    pub is_apn: bool,
    pub image: ImageReport,
    pub t: Option<u32>,
    pub nu: Option<u32>,
    pub ledger: Option<GcdLedger>,
    pub structure: Vec<StructureCheck>,
    pub bounds: Vec<BoundCheck>,
    pub classification: Classification,
    pub fingerprint: Fingerprint,
}

impl AnalysisReport {
    /// Names of every failed check.
    pub fn violations(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if !self.maximality.holds() {
            out.push("maximality");
        }
        if self.quadratic_agrees == Some(false) {
            out.push("quadratic-cross-check");
        }
        out.extend(self.structure.iter().filter(|c| c.status.is_violated()).map(|c| c.name));
        out.extend(self.bounds.iter().filter(|c| c.status.is_violated()).map(|c| c.name));
        out
    }

    pub fn all_checks_hold(&self) -> bool {
        self.violations().is_empty()
    }
}

/// Per-degree state shared by all analyses: `l(n)` and the canonical
/// family fingerprints.
#[derive(Debug)]
pub struct Classifier<'a> {
    ctx: &'a FieldContext,
    ell: EllRecord,
    canonical: Vec<CanonicalMember>,
    long_run: bool,
}

impl<'a> Classifier<'a> {
    pub fn new(ctx: &'a FieldContext, long_run: bool) -> Result<Self> {
        let n = ctx.n();
        let m = ctx.m().ok_or(Error::OddDegree("classification"))?;
        let ell = ell_n_lattice(ctx)?;
        let mut canonical = Vec::new();
        if n <= CANONICAL_MAX_DEGREE || (long_run && n <= crate::boolfun::DEFAULT_ANALYSIS_MAX_DEGREE) {
            let q = 1u64 << m;
            let mono = VectorialFn::monomial(ctx, q + 1)?;
            canonical.push(CanonicalMember {
                label: ClassLabel::Monomial,
                member: None,
                exponents: (q + 1, 0),
                fingerprint: Fingerprint::compute(&mono, long_run)?,
            });
            for i in 1..m {
                let (d1, d2) = ((1u64 << i) + 1, (1u64 << i) + q);
                let g = VectorialFn::binomial(ctx, d1, d2)?;
                canonical.push(CanonicalMember {
                    label: ClassLabel::Binomial,
                    member: Some(i),
                    exponents: (d1, d2),
                    fingerprint: Fingerprint::compute(&g, long_run)?,
                });
            }
        }
        Ok(Classifier { ctx, ell, canonical, long_run })
    }

    pub fn ctx(&self) -> &'a FieldContext {
        self.ctx
    }

    pub fn ell_n(&self) -> u32 {
        self.ell.ell_n
    }

    pub fn long_run(&self) -> bool {
        self.long_run
    }

    pub fn canonical(&self) -> &[CanonicalMember] {
        &self.canonical
    }

    /// Matches the EA-invariant part of a fingerprint against the canonical
    /// members.
    pub fn classify(&self, fp: &Fingerprint) -> Classification {
        self.canonical
            .iter()
            .find(|c| c.fingerprint.ea_part_eq(fp))
            .map_or_else(Classification::unclassified, |c| Classification {
                label: c.label,
                member: c.member,
                image_matches: Some(c.fingerprint.image_size == fp.image_size),
            })
    }

    /// The full pipeline on one function.
    pub fn analyze(&self, f: &VectorialFn<'_>) -> Result<AnalysisReport> {
        let ctx = f.ctx();
        if ctx.n() != self.ctx.n() {
            return Err(Error::DegreeMismatch(ctx.n(), self.ctx.n()));
        }
        let n = ctx.n();
        let summary = SpectralSummary::compute(f, self.long_run)?;
        let diff = DiffReport::compute(f, self.long_run)?;
        let image = ImageReport::compute(f);
        let maximality = maximality_check(f, &summary, self.ell_n())?;
        let exponents = f.exponents();
        let quadratic_agrees = match exponents {
            Some((d1, d2)) if wt2(d1 as i64, n) <= 2 && wt2(d2 as i64, n) <= 2 => {
                let scan = nonbent_set_quadratic(f)?;
                Some(ctx.elements().all(|a| {
                    (scan.kernel_dims[a.0 as usize] == 0) == summary.component(a).is_bent(n)
                }))
            }
            _ => None,
        };
        let rec = self.stickelberger_record(f)?;
        let ledger = match (&rec, exponents) {
            (Some(rec), Some((d1, d2)))
                if maximality.maximal && wt2(d1 as i64, n) == 2 && wt2(d2 as i64, n) == 2 =>
            {
                gcd_ledger(ctx, rec)
            }
            _ => None,
        };
        let structure = structure_checks(f, &summary, &maximality, rec.as_ref(), self.ell_n());
        let bounds = bounds_report(f, &summary, &diff, &image, &maximality);
        let fingerprint = Fingerprint::from_parts(&summary, &diff, &image);
        let classification = self.classify(&fingerprint);
        Ok(AnalysisReport {
            n,
            modulus: ctx.modulus().0,
            exponents,
            quadratic_agrees,
            nonlinearity: summary.nonlinearity(),
            max_abs_walsh: summary.max_abs_walsh(),
            delta: diff.delta,
            delta_set_size: diff.delta_set.len(),
            is_apn: diff.is_apn,
            t: summary.t(),
            nu: rec.as_ref().map(|r| r.nu),
            ledger,
            structure,
            bounds,
            classification,
            fingerprint,
            image,
            maximality,
        })
    }

    fn stickelberger_record(&self, f: &VectorialFn<'_>) -> Result<Option<StickelbergerRecord>> {
        let n = f.ctx().n();
        match f.exponents() {
            Some((d1, d2)) if n <= NU_ANALYSIS_MAX_DEGREE || self.long_run => {
                match nu_and_minimizers(f.ctx(), d1, d2) {
                    Ok(r) => Ok(Some(r)),
                    Err(Error::ResourceGate { .. }) => Ok(None),
                    Err(e) => Err(e),
                }
            }
            _ => Ok(None),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn analyze(n: u32, d1: u64, d2: u64) -> AnalysisReport {
        let ctx = FieldContext::new(n).unwrap();
        let cl = Classifier::new(&ctx, false).unwrap();
        let f = VectorialFn::binomial(&ctx, d1, d2).unwrap();
        cl.analyze(&f).unwrap()
    }

    #[test]
    fn pott_member_at_six() {
        let r = analyze(6, 3, 10);
        assert!(r.maximality.maximal);
        assert!(r.maximality.sf_equals_subfield);
        assert!(r.maximality.sf_is_subfield);
        assert_eq!(r.maximality.sf_size, 8);
        assert_eq!(r.classification.label, ClassLabel::Binomial);
        assert_eq!(r.classification.member, Some(1));
        assert_eq!(r.quadratic_agrees, Some(true));
        assert!(r.all_checks_hold(), "{:?}", r.violations());
    }

    #[test]
    fn qua_member_not_maximal() {
        let r = analyze(6, 3, 24);
        assert!(!r.maximality.maximal);
        assert!(r.maximality.sf_size > 8);
        assert_eq!(r.classification.label, ClassLabel::Unclassified);
        assert!(r.all_checks_hold());
    }

    #[test]
    fn monomial_at_four() {
        let ctx = FieldContext::new(4).unwrap();
        let cl = Classifier::new(&ctx, false).unwrap();
        let f = VectorialFn::monomial(&ctx, 5).unwrap();
        let r = cl.analyze(&f).unwrap();
        assert!(r.maximality.maximal && r.maximality.sf_equals_subfield);
        assert_eq!(r.classification.label, ClassLabel::Monomial);
    }

    #[test]
    fn i_zero_member_is_monomial_class() {
        let r = analyze(6, 2, 9);
        assert!(r.maximality.maximal);
        assert_eq!(r.classification.label, ClassLabel::Monomial);
        assert_eq!(r.classification.image_matches, Some(false));
    }
}
