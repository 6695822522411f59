//! `analyze` and `search`: full analysis records, optionally cached.

use std::io::Write;

use anyhow::Result;
use rayon::prelude::*;

use quadbent_core::boolfun::VectorialFn;
use quadbent_core::classify::{
    search_binomials, witness_search, ClassLabel, Classifier, EquivalenceWitness, SearchOptions,
};
use quadbent_core::{Error, FieldContext};

use crate::cache::{spot_check, Cache};
use crate::format::emit;
use crate::record::AnalysisRecord;
use crate::{Env, Outcome};

fn make_fn(ctx: &FieldContext, d1: u64, d2: Option<u64>) -> Result<VectorialFn<'_>> {
    Ok(match d2 {
        Some(d2) => VectorialFn::binomial(ctx, d1, d2)?,
        None => VectorialFn::monomial(ctx, d1)?,
    })
}

/// Transform from the matched canonical member onto `f`, when the witness
/// search is within its gate.
fn witness_for(cl: &Classifier<'_>, f: &VectorialFn<'_>, member: (ClassLabel, Option<u32>)) -> Result<Option<EquivalenceWitness>> {
    let ctx = cl.ctx();
    let Some(c) = cl.canonical().iter().find(|c| (c.label, c.member) == member) else {
        return Ok(None);
    };
    let g = match c.exponents {
        (d, 0) => VectorialFn::monomial(ctx, d)?,
        (d1, d2) => VectorialFn::binomial(ctx, d1, d2)?,
    };
    match witness_search(&g, f, cl.long_run()) {
        Ok(w) => Ok(w),
        Err(Error::ResourceGate { .. }) => Ok(None),
        Err(e) => Err(e.into()),
    }
}

fn analyze_one(cl: &Classifier<'_>, d1: u64, d2: Option<u64>, with_witness: bool) -> Result<AnalysisRecord> {
    let f = make_fn(cl.ctx(), d1, d2)?;
    let report = cl.analyze(&f)?;
    let c = &report.classification;
    let witness = if with_witness && c.label != ClassLabel::Unclassified {
        witness_for(cl, &f, (c.label, c.member))?
    } else {
        None
    };
    Ok(AnalysisRecord::from_report(&report, d1, d2, witness.as_ref()))
}

fn cached(cache: Option<&Cache>, ctx: &FieldContext, d1: u64, d2: Option<u64>) -> Result<Option<AnalysisRecord>> {
    let Some(cache) = cache else { return Ok(None) };
    let Some(rec) = cache.get(ctx.n(), &format!("{:#x}", ctx.modulus().0), d1, d2) else {
        return Ok(None);
    };
    let f = make_fn(ctx, d1, d2)?;
    Ok(spot_check(&f, rec).then(|| rec.clone()))
}

fn open_cache(env: &Env, o: &mut Outcome) -> Result<Option<Cache>> {
    let Some(dir) = &env.cache else { return Ok(None) };
    let cache = Cache::open(dir)?;
    if cache.skipped_lines > 0 {
        writeln!(o.err, "warning: skipped {} unreadable cache lines", cache.skipped_lines)?;
    }
    Ok(Some(cache))
}

fn report_violations(o: &mut Outcome, records: &[AnalysisRecord]) -> Result<bool> {
    let mut ok = true;
    for r in records.iter().filter(|r| !r.checks_hold) {
        ok = false;
        writeln!(o.err, "violated: n={} d1={} d2={:?}: {}", r.n, r.d1, r.d2, r.violations().join(", "))?;
    }
    Ok(ok)
}

pub fn analyze(env: &Env, o: &mut Outcome, d1: u64, d2: Option<u64>, with_witness: bool) -> Result<bool> {
    let ctx = env.ctx()?;
    let mut cache = open_cache(env, o)?;
    let rec = match cached(cache.as_ref(), &ctx, d1, d2)? {
        Some(rec) => rec,
        None => {
            let cl = Classifier::new(&ctx, env.long_run)?;
            let rec = analyze_one(&cl, d1, d2, with_witness)?;
            if let Some(c) = cache.as_mut() {
                c.append(std::slice::from_ref(&rec))?;
            }
            rec
        }
    };
    emit(&mut o.out, env.format, std::slice::from_ref(&rec))?;
    report_violations(o, std::slice::from_ref(&rec))
}

pub fn search(env: &Env, o: &mut Outcome, max_weight: Option<u32>) -> Result<bool> {
    let ctx = env.ctx()?;
    let mut cache = open_cache(env, o)?;
    let cl = Classifier::new(&ctx, env.long_run)?;
    let hits = search_binomials(&cl, SearchOptions { max_weight, analyze_hits: false })?;
    let mut ok = true;
    for h in hits.iter().filter(|h| h.cross_checked == Some(false)) {
        ok = false;
        writeln!(o.err, "violated: kernel and Walsh verdicts differ for ({}, {})", h.d1, h.d2)?;
    }
    let maximal: Vec<(u64, u64)> = hits.iter().filter(|h| h.maximal).map(|h| (h.d1, h.d2)).collect();
    let results: Vec<Result<(AnalysisRecord, bool)>> = maximal
        .par_iter()
        .map(|&(d1, d2)| match cached(cache.as_ref(), &ctx, d1, Some(d2))? {
            Some(rec) => Ok((rec, false)),
            None => Ok((analyze_one(&cl, d1, Some(d2), true)?, true)),
        })
        .collect();
    let mut records = Vec::with_capacity(results.len());
    let mut fresh = Vec::new();
    for r in results {
        let (rec, is_fresh) = r?;
        if is_fresh {
            fresh.push(rec.clone());
        }
        records.push(rec);
    }
    if let Some(c) = cache.as_mut() {
        c.append(&fresh)?;
    }
    writeln!(o.err, "searched {} orbit pairs, {} maximal", hits.len(), records.len())?;
    emit(&mut o.out, env.format, &records)?;
    Ok(report_violations(o, &records)? && ok)
}
