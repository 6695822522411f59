//! Equivalence fingerprints and a search for explicit transforms inside a
//! small subgroup of the EA group.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::boolfun::{DiffReport, ImageReport, SpectralSummary, VectorialFn};
use crate::gf2n::{FieldContext, FieldElem};
use crate::{Error, Result};

/// Witness search runs up to this degree without `long_run`.
pub const WITNESS_MAX_DEGREE: u32 = 10;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fingerprint {
    /// `|W_{F_a}(b)|` over `a != 0` and all `b`, with multiplicities.
    pub walsh_multiset: BTreeMap<u32, u64>,
    /// DDT entries over `a != 0`, with multiplicities.
    pub diff_spectrum: BTreeMap<u32, u64>,
    /// Invariant under affine equivalence only.
    pub image_size: u64,
}

impl Fingerprint {
    pub fn compute(f: &VectorialFn<'_>, long_run: bool) -> Result<Self> {
        let summary = SpectralSummary::compute(f, long_run)?;
        let diff = DiffReport::compute(f, long_run)?;
        Ok(Self::from_parts(&summary, &diff, &ImageReport::compute(f)))
    }

    pub fn from_parts(summary: &SpectralSummary, diff: &DiffReport, image: &ImageReport) -> Self {
        Fingerprint {
            walsh_multiset: summary.abs_histogram().clone(),
            diff_spectrum: diff.spectrum.clone(),
            image_size: image.image_size,
        }
    }

    /// Equality of the EA-invariant parts.
    pub fn ea_part_eq(&self, other: &Fingerprint) -> bool {
        self.walsh_multiset == other.walsh_multiset && self.diff_spectrum == other.diff_spectrum
    }

    pub fn compare(&self, other: &Fingerprint) -> FingerprintVerdict {
        if !self.ea_part_eq(other) {
            FingerprintVerdict::DistinguishedEa
        } else if self.image_size != other.image_size {
            FingerprintVerdict::DistinguishedAffine
        } else {
            FingerprintVerdict::Consistent
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FingerprintVerdict {
    Consistent,
    /// Walsh or DDT multisets differ: not EA-equivalent.
    DistinguishedEa,
    /// Only the image size differs: not affine-equivalent, EA undecided.
    DistinguishedAffine,
}

impl FingerprintVerdict {
    pub fn as_str(self) -> &'static str {
        match self {
            FingerprintVerdict::Consistent => "consistent",
            FingerprintVerdict::DistinguishedEa => "distinguished-ea",
            FingerprintVerdict::DistinguishedAffine => "distinguished-affine",
        }
    }
}

/// `G(x) = outer * F(inner * x^(2^inner_frob))^(2^outer_frob) + linear * x^(2^linear_frob)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EquivalenceWitness {
    pub inner_coeff: FieldElem,
    pub inner_frobenius: u32,
    pub outer_coeff: FieldElem,
    pub outer_frobenius: u32,
    pub linear_coeff: FieldElem,
    pub linear_frobenius: u32,
}

impl EquivalenceWitness {
    /// No linear summand, so the transform is an affine equivalence.
    pub fn is_affine(&self) -> bool {
        self.linear_coeff.is_zero()
    }

    pub fn apply(&self, f: &VectorialFn<'_>, x: FieldElem) -> FieldElem {
        let ctx = f.ctx();
        let inner = ctx.mul(self.inner_coeff, ctx.frobenius(x, self.inner_frobenius));
        let y = ctx.frobenius(f.eval(inner), self.outer_frobenius);
        ctx.mul(self.outer_coeff, y) + ctx.mul(self.linear_coeff, ctx.frobenius(x, self.linear_frobenius))
    }
}

impl fmt::Display for EquivalenceWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "G(x) = {:#x} * F({:#x} * x^(2^{}))^(2^{})",
            self.outer_coeff.0, self.inner_coeff.0, self.inner_frobenius, self.outer_frobenius
        )?;
        if !self.is_affine() {
            write!(f, " + {:#x} * x^(2^{})", self.linear_coeff.0, self.linear_frobenius)?;
        }
        Ok(())
    }
}

/// First witness in the order (inner Frobenius, inner coefficient by
/// discrete log, outer Frobenius, linear Frobenius), or `None`.
pub fn witness_search(f: &VectorialFn<'_>, g: &VectorialFn<'_>, long_run: bool) -> Result<Option<EquivalenceWitness>> {
    let ctx = f.ctx();
    let n = ctx.n();
    if g.ctx().n() != n {
        return Err(Error::DegreeMismatch(n, g.ctx().n()));
    }
    if n > WITNESS_MAX_DEGREE && !long_run {
        return Err(Error::ResourceGate { what: "equivalence witness search", n });
    }
    let probes: Vec<FieldElem> = (1..4.min(ctx.order() as u64)).map(|i| ctx.exp(i)).collect();
    let mut inner = alloc::vec![FieldElem::ZERO; ctx.size()];
    for ji in 0..n {
        for li in 0..ctx.order() as u64 {
            let ci = ctx.exp(li);
            for x in ctx.elements() {
                inner[x.0 as usize] = f.eval(ctx.mul(ci, ctx.frobenius(x, ji)));
            }
            for jo in 0..n {
                let h = |x: FieldElem| ctx.frobenius(inner[x.0 as usize], jo);
                for jl in 0..n {
                    if let Some((co, cl)) = solve(ctx, g, &h, jl, &probes) {
                        return Ok(Some(EquivalenceWitness {
                            inner_coeff: ci,
                            inner_frobenius: ji,
                            outer_coeff: co,
                            outer_frobenius: jo,
                            linear_coeff: cl,
                            linear_frobenius: jl,
                        }));
                    }
                }
            }
        }
    }
    Ok(None)
}

/// Solves `G(x) = co H(x) + cl x^(2^jl)` from `x = 1` and one probe point,
/// then verifies it everywhere.
fn solve(
    ctx: &FieldContext,
    g: &VectorialFn<'_>,
    h: &impl Fn(FieldElem) -> FieldElem,
    jl: u32,
    probes: &[FieldElem],
) -> Option<(FieldElem, FieldElem)> {
    let (g1, h1) = (g.eval(FieldElem::ONE), h(FieldElem::ONE));
    for &x2 in probes {
        let t = ctx.frobenius(x2, jl);
        let det = h(x2) + ctx.mul(t, h1);
        if det.is_zero() {
            continue;
        }
        let co = ctx.mul(g.eval(x2) + ctx.mul(t, g1), ctx.inv(det)?);
        if co.is_zero() {
            return None;
        }
        let cl = g1 + ctx.mul(co, h1);
        let ok = ctx
            .elements()
            .all(|x| g.eval(x) == ctx.mul(co, h(x)) + ctx.mul(cl, ctx.frobenius(x, jl)));
        return ok.then_some((co, cl));
    }
    None
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceReport {
    pub verdict: FingerprintVerdict,
    /// `None` when searched without success or when the search was gated.
    pub witness: Option<EquivalenceWitness>,
    pub searched: bool,
}

impl EquivalenceReport {
    /// Both invariant agreement and an explicit transform.
    pub fn classified(&self) -> bool {
        self.verdict != FingerprintVerdict::DistinguishedEa && self.witness.is_some()
    }

    /// A witness never coexists with an invariant that rules it out.
    pub fn sound(&self) -> bool {
        match self.witness {
            None => true,
            Some(w) if w.is_affine() => self.verdict == FingerprintVerdict::Consistent,
            Some(_) => self.verdict != FingerprintVerdict::DistinguishedEa,
        }
    }
}

pub fn equivalence_fingerprint(f: &VectorialFn<'_>, g: &VectorialFn<'_>, long_run: bool) -> Result<EquivalenceReport> {
    let verdict = Fingerprint::compute(f, long_run)?.compare(&Fingerprint::compute(g, long_run)?);
    let (witness, searched) = match witness_search(f, g, long_run) {
        Ok(w) => (w, true),
        Err(Error::ResourceGate { .. }) => (None, false),
        Err(e) => return Err(e),
    };
    Ok(EquivalenceReport { verdict, witness, searched })
}
