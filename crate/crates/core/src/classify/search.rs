//! Exhaustive search over binomials `x^d1 + x^d2`, one pair per orbit of
//! `(d1, d2) -> (2 d1, 2 d2) mod N`.

use alloc::vec::Vec;

use super::{AnalysisReport, Classifier};
use crate::boolfun::{count_nonbent_up_to, VectorialFn};
use crate::par;
use crate::quadratic::nonbent_set_from_exponents;
use crate::stickelberger::wt2;
use crate::{Error, Result};

/// Largest degree for the Walsh-based path (all weights).
pub const WALSH_SEARCH_MAX_DEGREE: u32 = 10;
pub const WALSH_SEARCH_LONG_RUN_MAX_DEGREE: u32 = 14;
/// Largest degree for the kernel-rank path (weights at most 2).
pub const QUADRATIC_SEARCH_MAX_DEGREE: u32 = 12;
pub const QUADRATIC_SEARCH_LONG_RUN_MAX_DEGREE: u32 = 20;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchOptions {
    /// Only exponents with `wt2(d) <= max_weight`.
    pub max_weight: Option<u32>,
    /// Run the full analysis on every maximal hit.
    pub analyze_hits: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchPath {
    Quadratic,
    Walsh,
}

#[derive(Clone, Debug)]
pub struct SearchHit {
    pub d1: u64,
    pub d2: u64,
    pub maximal: bool,
    pub path: SearchPath,
    /// Exact on the kernel path; on the Walsh path only when it is `2^m`.
    pub sf_size: Option<usize>,
    /// Walsh verdict agrees with the kernel verdict (kernel path only, when
    /// the Walsh path is within its gate).
    pub cross_checked: Option<bool>,
    pub report: Option<AnalysisReport>,
}

/// Least representative of the doubling orbit of `{d1, d2}`, as an ordered
/// pair.
pub fn canonical_pair(n: u32, d1: u64, d2: u64) -> (u64, u64) {
    let order = (1u64 << n) - 1;
    let (mut a, mut b) = (d1 % order, d2 % order);
    let mut best = (a.min(b), a.max(b));
    for _ in 1..n {
        a = (2 * a) % order;
        b = (2 * b) % order;
        best = best.min((a.min(b), a.max(b)));
    }
    best
}

pub fn search_binomials(cl: &Classifier<'_>, opts: SearchOptions) -> Result<Vec<SearchHit>> {
    let ctx = cl.ctx();
    let n = ctx.n();
    let m = ctx.m().ok_or(Error::OddDegree("binomial search"))?;
    let long_run = cl.long_run();
    let quadratic_only = opts.max_weight.is_some_and(|w| w <= 2);
    let walsh_cap = if long_run { WALSH_SEARCH_LONG_RUN_MAX_DEGREE } else { WALSH_SEARCH_MAX_DEGREE };
    let quad_cap = if long_run { QUADRATIC_SEARCH_LONG_RUN_MAX_DEGREE } else { QUADRATIC_SEARCH_MAX_DEGREE };
    if n > walsh_cap && !(quadratic_only && n <= quad_cap) {
        return Err(Error::ResourceGate { what: "binomial search", n });
    }
    let walsh_ok = n <= walsh_cap;

    let order = ctx.order() as u64;
    let exps: Vec<u64> = (1..order)
        .filter(|&d| opts.max_weight.map_or(true, |w| wt2(d as i64, n) <= w))
        .collect();
    let mut pairs = Vec::new();
    for (k, &d1) in exps.iter().enumerate() {
        for &d2 in &exps[k + 1..] {
            if canonical_pair(n, d1, d2) == (d1, d2) {
                pairs.push((d1, d2));
            }
        }
    }
    let target = 1usize << m;
    let hits = par::map_range(pairs.len(), |k| -> Result<SearchHit> {
        let (d1, d2) = pairs[k];
        let quadratic = wt2(d1 as i64, n) <= 2 && wt2(d2 as i64, n) <= 2;
        let walsh_count = |f: &VectorialFn<'_>| count_nonbent_up_to(f, target);
        let (path, sf_size, cross_checked) = if quadratic {
            let scan = nonbent_set_from_exponents(ctx, &[d1, d2])?;
            let cross = if walsh_ok {
                let f = VectorialFn::binomial(ctx, d1, d2)?;
                Some((walsh_count(&f) == Some(target)) == (scan.sf_size() == target))
            } else {
                None
            };
            (SearchPath::Quadratic, Some(scan.sf_size()), cross)
        } else {
            let f = VectorialFn::binomial(ctx, d1, d2)?;
            (SearchPath::Walsh, walsh_count(&f).filter(|&c| c == target), None)
        };
        let maximal = sf_size == Some(target);
        let report = if maximal && opts.analyze_hits {
            Some(cl.analyze(&VectorialFn::binomial(ctx, d1, d2)?)?)
        } else {
            None
        };
        Ok(SearchHit { d1, d2, maximal, path, sf_size, cross_checked, report })
    });
    hits.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::super::ClassLabel;
    use super::*;
    use crate::gf2n::FieldContext;

    #[test]
    fn canonical_orbit_minimum() {
        assert_eq!(canonical_pair(6, 10, 3), (3, 10));
        assert_eq!(canonical_pair(6, 6, 20), (3, 10));
        assert_eq!(canonical_pair(6, 24, 3), (3, 24));
    }

    #[test]
    fn quadratic_search_at_six() {
        let ctx = FieldContext::new(6).unwrap();
        let cl = Classifier::new(&ctx, false).unwrap();
        let opts = SearchOptions { max_weight: Some(2), analyze_hits: true };
        let hits = search_binomials(&cl, opts).unwrap();
        assert!(hits.iter().all(|h| h.cross_checked == Some(true)));
        let maximal: Vec<(u64, u64)> = hits.iter().filter(|h| h.maximal).map(|h| (h.d1, h.d2)).collect();
        for p in [(2, 9), (3, 10), (5, 12)] {
            assert!(maximal.contains(&canonical_pair(6, p.0, p.1)), "{p:?} in {maximal:?}");
        }
        assert!(!maximal.contains(&canonical_pair(6, 3, 24)));
        for h in hits.iter().filter(|h| h.maximal) {
            let r = h.report.as_ref().unwrap();
            assert_ne!(r.classification.label, ClassLabel::Unclassified, "({}, {})", h.d1, h.d2);
            assert!(r.all_checks_hold(), "({}, {}): {:?}", h.d1, h.d2, r.violations());
        }
    }
}
