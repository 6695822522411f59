//! Consequences of maximality for quadratic binomials (both exponents of
//! 2-adic weight 2, `l(n) > m`).

use alloc::vec::Vec;

use super::{CheckStatus, MaximalityReport};
use crate::arith::{gcd, gcd3};
use crate::boolfun::{SpectralSummary, VectorialFn};
use crate::stickelberger::{gcd_ledger, h_polynomial, wt2, StickelbergerRecord};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureCheck {
    pub name: &'static str,
    pub status: CheckStatus,
}

/// Every check is returned, with the unmet hypothesis as the reason when it
/// was skipped. Checks needing `s = gcd(d1, d2, N) > 1` are skipped for
/// `s = 1`; the `h` identity and the ledger only need the general
/// hypotheses.
pub fn structure_checks(
    f: &VectorialFn<'_>,
    summary: &SpectralSummary,
    maximality: &MaximalityReport,
    rec: Option<&StickelbergerRecord>,
    ell_n: u32,
) -> Vec<StructureCheck> {
    let ctx = f.ctx();
    let n = ctx.n();
    let m = n / 2;
    let q = (1u64 << m) - 1;
    let general: Result<(u64, u64), &'static str> = match f.exponents() {
        None => Err("not a binomial"),
        Some(_) if !maximality.maximal => Err("not maximal"),
        Some(_) if ell_n <= m => Err("l(n) <= m"),
        Some((d1, d2)) if wt2(d1 as i64, n) != 2 || wt2(d2 as i64, n) != 2 => {
            Err("requires wt2(d1) = wt2(d2) = 2")
        }
        Some(p) => Ok(p),
    };
    let with_s = general.and_then(|(d1, d2)| {
        let s = gcd3(d1, d2, ctx.order() as u64);
        if s > 1 {
            Ok((d1, d2, s))
        } else {
            Err("s = gcd(d1, d2, N) = 1")
        }
    });
    let rec_gate = |g: Result<(), &'static str>| {
        g.and_then(|()| rec.ok_or("nu scan not run at this degree (long-run gate)"))
    };

    let mut out = Vec::new();
    let mut push = |name: &'static str, r: Result<bool, &'static str>| {
        let status = match r {
            Ok(ok) => CheckStatus::from_bool(ok),
            Err(why) => CheckStatus::Inapplicable(why),
        };
        out.push(StructureCheck { name, status });
    };

    push("s-divides-2^m-1", with_s.map(|(_, _, s)| q % s == 0));
    push(
        "walsh-zero-outside-subfield",
        with_s.map(|_| {
            let plus = 1i32 << m;
            ctx.elements()
                .filter(|&a| !ctx.in_subfield(a, m))
                .all(|a| summary.component(a).walsh_zero == plus)
        }),
    );
    push(
        "walsh-zero-mod-s",
        with_s.map(|(_, _, s)| {
            ctx.elements()
                .all(|a| (summary.component(a).walsh_zero as i64 - 1).rem_euclid(s as i64) == 0)
        }),
    );
    push("difference-divisible", with_s.map(|(d1, d2, _)| (d2 as i64 - d1 as i64) % q as i64 == 0));
    push("s-equals-gcd-d1", with_s.map(|(d1, _, s)| s == gcd(d1, q)));
    push(
        "ledger-witness",
        rec_gate(general.map(|_| ())).map(|rec| gcd_ledger(ctx, rec).is_some_and(|l| l.holds())),
    );
    push(
        "h-polynomial",
        rec_gate(general.map(|_| ())).map(|rec| {
            h_polynomial(rec, true)
                .comparison
                .is_some_and(|c| c.identity_holds && c.sumset_contains)
        }),
    );
    out
}
