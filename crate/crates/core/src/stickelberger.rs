//! 2-adic weight bookkeeping for binomials `x^d1 + x^d2`.
//!
//! With `V(j1, j2) = wt2(j1) + wt2(j2) + wt2(-d1 j1 - d2 j2)` over pairs
//! `(j1, j2) != (0, 0)` in `Z_N^2`, `nu` is the minimum of `V` and `J` the set
//! of minimizers. Every Walsh value of the binomial has 2-adic valuation at
//! least `nu`, with equality exactly where
//! `g_a(b) = sum_{(j1,j2) in J} a^(j1+j2) b^((-d1 j1 - d2 j2) mod N)` is 1.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::arith::{gcd, gcd3, residue, v2};
use crate::boolfun::VectorialFn;
use crate::gf2n::{FieldContext, FieldElem};
use crate::par;
use crate::{Error, Result};

/// Hamming weight of `j mod (2^n - 1)`; `wt2(0) = 0`.
pub fn wt2(j: i64, n: u32) -> u32 {
    residue(j, (1u64 << n) - 1).count_ones()
}

/// `ceil(n / max(wt2(d1), wt2(d2)))`, a lower bound for `nu`.
pub fn nu_lower_bound(n: u32, d1: u64, d2: u64) -> u32 {
    let w = wt2(d1 as i64, n).max(wt2(d2 as i64, n)).max(1);
    n.div_ceil(w)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StickelbergerRecord {
    pub n: u32,
    pub d1: u64,
    pub d2: u64,
    pub nu: u32,
    pub lower_bound: u32,
    /// The minimizer set `J`, sorted.
    pub minimizers: Vec<(u32, u32)>,
    /// `J^0`: minimizers with `d1 j1 + d2 j2 = 0 mod N`.
    pub j0_slice: Vec<(u32, u32)>,
}

fn validate(ctx: &FieldContext, d: u64) -> Result<()> {
    let max = ctx.order() as u64 - 1;
    if d == 0 || d > max {
        return Err(Error::ExponentOutOfRange { exponent: d, max });
    }
    Ok(())
}

fn build_record(n: u32, d1: u64, d2: u64, lower_bound: u32, rows: Vec<(u32, Vec<(u32, u32)>)>) -> StickelbergerRecord {
    let nu = rows.iter().map(|r| r.0).min().unwrap_or(u32::MAX);
    let minimizers: Vec<(u32, u32)> = rows.into_iter().filter(|r| r.0 == nu).flat_map(|r| r.1).collect();
    let order = (1u64 << n) - 1;
    let j0_slice = minimizers
        .iter()
        .copied()
        .filter(|&(j1, j2)| (d1 * j1 as u64 + d2 * j2 as u64) % order == 0)
        .collect();
    StickelbergerRecord { n, d1, d2, nu, lower_bound, minimizers, j0_slice }
}

/// Exact `nu` and minimizer set by exhaustive scan over `Z_N^2`.
pub fn nu_and_minimizers(ctx: &FieldContext, d1: u64, d2: u64) -> Result<StickelbergerRecord> {
    validate(ctx, d1)?;
    validate(ctx, d2)?;
    let n = ctx.n();
    if n > 16 {
        return Err(Error::ResourceGate { what: "nu scan", n });
    }
    let order = ctx.order() as u64;
    let (s1, s2) = (d1 % order, d2 % order);
    let rows = par::map_range(order as usize, |j1| {
        let w1 = (j1 as u32).count_ones();
        // r = -(d1 j1 + d2 j2) mod N, updated by subtracting d2 as j2 grows.
        let mut r = (order - (s1 * j1 as u64) % order) % order;
        let mut best = u32::MAX;
        let mut hits = Vec::new();
        for j2 in 0..order as u32 {
            if j1 != 0 || j2 != 0 {
                let v = w1 + j2.count_ones() + (r as u32).count_ones();
                if v < best {
                    best = v;
                    hits.clear();
                }
                if v == best {
                    hits.push((j1 as u32, j2));
                }
            }
            r = if r >= s2 { r - s2 } else { r + order - s2 };
        }
        (best, hits)
    });
    Ok(build_record(n, d1, d2, nu_lower_bound(n, d1, d2), rows))
}

/// The monomial analogue: `j2` fixed to 0, `V(j1) = wt2(j1) + wt2(-d j1)`.
pub fn nu_monomial(ctx: &FieldContext, d: u64) -> Result<StickelbergerRecord> {
    validate(ctx, d)?;
    let n = ctx.n();
    if n > 16 {
        return Err(Error::ResourceGate { what: "nu scan", n });
    }
    let order = ctx.order() as u64;
    let step = d % order;
    let row: Vec<(u32, u32)> = (1..order)
        .map(|j| {
            let r = (order - step * j % order) % order;
            ((j as u32).count_ones() + (r as u32).count_ones(), j as u32)
        })
        .collect();
    let nu = row.iter().map(|r| r.0).min().unwrap_or(u32::MAX);
    let rows = alloc::vec![(nu, row.into_iter().filter(|r| r.0 == nu).map(|r| (r.1, 0)).collect())];
    let w = wt2(d as i64, n).max(1);
    Ok(build_record(n, d, 0, n.div_ceil(w), rows))
}

impl StickelbergerRecord {
    pub fn is_doubling_closed(&self) -> bool {
        let order = (1u64 << self.n) - 1;
        self.minimizers.iter().all(|&(j1, j2)| {
            let dbl = (((2 * j1 as u64) % order) as u32, ((2 * j2 as u64) % order) as u32);
            self.minimizers.binary_search(&dbl).is_ok()
        })
    }

    /// Exponents of `h_{J^0}(x) = sum_{J^0} x^(j1 + j2)` with F_2 coefficients
    /// (unreduced integer exponents), sorted.
    pub fn h_exponents(&self) -> Vec<u64> {
        let mut coeffs: BTreeMap<u64, bool> = BTreeMap::new();
        for &(j1, j2) in &self.j0_slice {
            let e = coeffs.entry(j1 as u64 + j2 as u64).or_insert(false);
            *e = !*e;
        }
        coeffs.into_iter().filter(|(_, c)| *c).map(|(e, _)| e).collect()
    }

    /// `{j1 + j2 : (j1, j2) in J^0}` as integers, sorted.
    pub fn sumset(&self) -> Vec<u64> {
        let mut v: Vec<u64> = self.j0_slice.iter().map(|&(a, b)| a as u64 + b as u64).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    /// Minimizers grouped by `e = (-d1 j1 - d2 j2) mod N`, each with the list
    /// of exponent sums `j1 + j2`.
    fn grouped_by_b_exponent(&self) -> BTreeMap<u64, Vec<u64>> {
        let order = (1u64 << self.n) - 1;
        let mut groups: BTreeMap<u64, Vec<u64>> = BTreeMap::new();
        for &(j1, j2) in &self.minimizers {
            let e = residue(-((self.d1 * j1 as u64 + self.d2 * j2 as u64) as i64), order);
            groups.entry(e).or_default().push(j1 as u64 + j2 as u64);
        }
        groups
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ValuationViolation {
    /// `v2(W) < nu`.
    BelowNu { a: FieldElem, b: FieldElem, walsh: i32 },
    /// Strictness of the valuation and vanishing of `g_a(b)` disagree.
    Strictness { a: FieldElem, b: FieldElem, walsh: i32, g: FieldElem },
    /// `g_a(b)` is not in GF(2).
    NotBinary { a: FieldElem, b: FieldElem, g: FieldElem },
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValuationReport {
    pub pairs_checked: u64,
    /// Pairs with `v2(W) > nu` (including `W = 0`).
    pub strict: u64,
    pub violations: Vec<ValuationViolation>,
}

impl ValuationReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks the valuation law on every `a != 0` and every `b`.
pub fn verify_valuation_law(f: &VectorialFn<'_>, rec: &StickelbergerRecord) -> ValuationReport {
    let ctx = f.ctx();
    let groups: Vec<(u64, Vec<u64>)> = rec.grouped_by_b_exponent().into_iter().collect();
    let per_a = par::map_range(ctx.size() - 1, |i| {
        let a = FieldElem(i as u32 + 1);
        let row = f.walsh_row(a);
        let coeffs: Vec<(u64, FieldElem)> = groups
            .iter()
            .map(|(e, sums)| (*e, sums.iter().fold(FieldElem::ZERO, |acc, &s| acc + ctx.pow_u(a, s))))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        let mut strict = 0u64;
        let mut bad = Vec::new();
        for b in ctx.elements() {
            let w = row[b.0 as usize];
            let g = coeffs.iter().fold(FieldElem::ZERO, |acc, &(e, c)| acc + ctx.mul(c, ctx.pow_u(b, e)));
            let val = v2(w as i64);
            let is_strict = val.map_or(true, |v| v > rec.nu);
            if is_strict {
                strict += 1;
            }
            if val.is_some_and(|v| v < rec.nu) {
                bad.push(ValuationViolation::BelowNu { a, b, walsh: w });
            }
            if g.0 > 1 {
                bad.push(ValuationViolation::NotBinary { a, b, g });
            } else if is_strict != g.is_zero() {
                bad.push(ValuationViolation::Strictness { a, b, walsh: w, g });
            }
        }
        (strict, bad)
    });
    let mut report = ValuationReport { pairs_checked: ((ctx.size() - 1) * ctx.size()) as u64, ..Default::default() };
    for (s, bad) in per_a {
        report.strict += s;
        report.violations.extend(bad);
    }
    report
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HComparison {
    /// `h_{J^0} - 1 = (x^(2^n) - x) / (x^(2^m) - x)` coefficientwise.
    pub identity_holds: bool,
    pub degree_ok: bool,
    /// `V` contains `{i (2^m - 1) : 1 <= i <= 2^m}`.
    pub sumset_contains: bool,
    /// Terms of `h` that differ from the expected exponent set.
    pub mismatched: Vec<u64>,
    /// Whether reducing the exponents mod `N` changes the exponent set.
    pub reduction_mismatch: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HReport {
    pub exponents: Vec<u64>,
    pub degree: Option<u64>,
    pub sumset: Vec<u64>,
    /// `None` when the comparison's hypotheses are not met.
    pub comparison: Option<HComparison>,
}

/// `h_{J^0}` and, when `compare` is set (maximal binomial under the
/// structural hypotheses), its comparison with the expected quotient.
pub fn h_polynomial(rec: &StickelbergerRecord, compare: bool) -> HReport {
    let exponents = rec.h_exponents();
    let sumset = rec.sumset();
    let comparison = (compare && rec.n % 2 == 0).then(|| {
        let m = rec.n / 2;
        let q = (1u64 << m) - 1;
        // (x^(2^n) - x) / (x^(2^m) - x) = sum_{i=0}^{2^m} x^(i q); subtracting
        // the constant 1 of h leaves exactly the exponents i q with i >= 1.
        let expected: Vec<u64> = (1..=1u64 << m).map(|i| i * q).collect();
        let mut mismatched: Vec<u64> = exponents
            .iter()
            .filter(|e| expected.binary_search(e).is_err())
            .chain(expected.iter().filter(|e| exponents.binary_search(e).is_err()))
            .copied()
            .collect();
        mismatched.sort_unstable();
        let order = (1u64 << rec.n) - 1;
        let mut reduced: Vec<u64> = exponents.iter().map(|e| e % order).collect();
        reduced.sort_unstable();
        reduced.dedup();
        HComparison {
            identity_holds: mismatched.is_empty(),
            degree_ok: exponents.last() == Some(&((1u64 << rec.n) - (1u64 << m))),
            sumset_contains: expected.iter().all(|e| sumset.binary_search(e).is_ok()),
            mismatched,
            reduction_mismatch: reduced.len() != exponents.len()
                || reduced.iter().zip(&exponents).any(|(a, b)| a != b),
        }
    });
    HReport { degree: exponents.last().copied(), exponents, sumset, comparison }
}

/// The integers `s, t, k, u, r` attached to a witness `j` with
/// `(j 2^i, (2^m - 1 - j) 2^i) in J` for some `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GcdLedger {
    pub s: u64,
    pub j_witness: u64,
    pub t: u64,
    /// `(d2 - d1) / ((2^m - 1) / t)`, signed; `None` if not integral.
    pub k: Option<i64>,
    pub u: Option<u64>,
    pub r: Option<u64>,
    pub all_witnesses: Vec<u64>,
    /// `(d2 - d1) j = d2 (2^m - 1) mod N`.
    pub congruence_holds: bool,
    /// `gcd(d2 - d1, N)`.
    pub gcd_diff_n: u64,
    pub coprime_u_r: bool,
    /// `gcd(d2 - d1, N) = ((2^m - 1) / t) u r`.
    pub gcd_identity_holds: bool,
}

impl GcdLedger {
    pub fn holds(&self) -> bool {
        self.congruence_holds && self.k.is_some() && self.coprime_u_r && self.gcd_identity_holds
    }
}

/// Builds the ledger from the least witness `j`; `None` when no witness
/// exists.
pub fn gcd_ledger(ctx: &FieldContext, rec: &StickelbergerRecord) -> Option<GcdLedger> {
    let m = ctx.m()?;
    let n = ctx.n();
    let order = ctx.order() as u64;
    let q = (1u64 << m) - 1;
    let (d1, d2) = (rec.d1, rec.d2);
    let in_orbit = |j: u64| {
        (0..n).any(|i| {
            let p = (((j << i) % order) as u32, (((q - j) << i) % order) as u32);
            rec.minimizers.binary_search(&p).is_ok()
        })
    };
    let all_witnesses: Vec<u64> = (0..=q).filter(|&j| in_orbit(j)).collect();
    let j = *all_witnesses.first()?;
    let t = gcd(j, q);
    let diff = d2 as i64 - d1 as i64;
    let step = (q / t) as i64;
    let k = (diff % step == 0).then_some(diff / step);
    let u = k.map(|k| gcd(t, k.unsigned_abs()));
    let r = k.map(|k| gcd(k.unsigned_abs(), (1u64 << m) + 1));
    let gcd_diff_n = gcd(diff.unsigned_abs(), order);
    let congruence_holds = residue(diff * j as i64, order) == residue((d2 * q) as i64, order);
    let (coprime_u_r, gcd_identity_holds) = match (u, r) {
        (Some(u), Some(r)) => (gcd(u, r) == 1, gcd_diff_n == (q / t) * u * r),
        _ => (false, false),
    };
    Some(GcdLedger {
        s: gcd3(d1, d2, order),
        j_witness: j,
        t,
        k,
        u,
        r,
        all_witnesses,
        congruence_holds,
        gcd_diff_n,
        coprime_u_r,
        gcd_identity_holds,
    })
}
