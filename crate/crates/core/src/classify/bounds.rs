//! Nonlinearity and differential-uniformity bounds, each compared in exact
//! integer form (denominators cleared, square roots squared away).

use alloc::vec::Vec;

use super::{CheckStatus, MaximalityReport};
use crate::arith::gcd;
use crate::boolfun::{DiffReport, ImageReport, SpectralSummary, VectorialFn};
use crate::stickelberger::wt2;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    AtLeast,
    Equal,
}

impl Relation {
    pub fn symbol(self) -> &'static str {
        match self {
            Relation::AtLeast => ">=",
            Relation::Equal => "=",
        }
    }
}

/// `lhs >= rhs` (or `lhs = rhs`) for measured integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundCheck {
    pub name: &'static str,
    pub relation: Relation,
    pub lhs: i128,
    pub rhs: i128,
    pub status: CheckStatus,
}

impl BoundCheck {
    fn new(name: &'static str, relation: Relation, lhs: i128, rhs: i128, gate: Result<(), &'static str>) -> Self {
        let status = match gate {
            Err(reason) => CheckStatus::Inapplicable(reason),
            Ok(()) => CheckStatus::from_bool(match relation {
                Relation::AtLeast => lhs >= rhs,
                Relation::Equal => lhs == rhs,
            }),
        };
        BoundCheck { name, relation, lhs, rhs, status }
    }
}

fn gate(ok: bool, reason: &'static str) -> Result<(), &'static str> {
    if ok {
        Ok(())
    } else {
        Err(reason)
    }
}

#[allow(clippy::vec_init_then_push)]
pub fn bounds_report(
    f: &VectorialFn<'_>,
    summary: &SpectralSummary,
    diff: &DiffReport,
    image: &ImageReport,
    maximality: &MaximalityReport,
) -> Vec<BoundCheck> {
    let ctx = f.ctx();
    let n = ctx.n();
    let m = n / 2;
    let p = |e: u32| 1i128 << e;
    let size = p(n);

    let core = gate(maximality.ell_exceeds_m, "requires l(n) > m")
        .and(gate(maximality.frobenius_commuting, "requires F(x^2) = F(x)^2"))
        .and(gate(maximality.maximal, "requires #S_F = 2^m"));

    let nl = summary.nonlinearity() as i128;
    let max_w = size - 2 * nl;
    let max_sq = max_w * max_w;
    let im = image.image_size as i128;
    let coll = image.collisions as i128;
    let delta = diff.delta as i128;
    let delta_set = diff.delta_set.len() as i128;
    let t = summary.t().unwrap_or(0) as i128;

    let mut out = Vec::new();

    out.push(BoundCheck::new(
        "lower-bound-max",
        Relation::AtLeast,
        summary.max_sq_subfield().unwrap_or(0) as i128,
        size * (p(m) + 2),
        core,
    ));
    // N_F <= 2^(n-1) - sqrt(2^n (2^m + 2)) / 2  <=>  (2^n - 2 N_F)^2 >= 2^n (2^m + 2).
    out.push(BoundCheck::new("bd1", Relation::AtLeast, max_sq, size * (p(m) + 2), core));
    out.push(BoundCheck::new(
        "plateaued",
        Relation::AtLeast,
        p(n - 1) - p(3 * n / 4),
        nl,
        core.and(gate(summary.is_plateaued_fn(), "F is not plateaued")),
    ));
    // maxW^2 >= 2^(3m)/T (2^(3m)/#Im - 2^(m+1) + 1), times T #Im.
    out.push(BoundCheck::new(
        "bd2",
        Relation::AtLeast,
        max_sq * t * im,
        p(3 * n) - (p(2 * n + 1) - p(n + m)) * im,
        core.and(gate(t != 0, "T = 0")),
    ));
    // delta >= 2^n / #Delta (2^n / #Im - 1), times #Delta #Im.
    out.push(BoundCheck::new(
        "bound-delta",
        Relation::AtLeast,
        delta * delta_set * im,
        size * (size - im),
        gate(im < size, "F is injective"),
    ));
    // #Delta <= (#{F(x) = F(y)} - 2^n) / 2, from the definition of Delta.
    out.push(BoundCheck::new("delta-set-size", Relation::AtLeast, coll - size, 2 * delta_set, Ok(())));
    // 2^n (#{F(x) = F(y)} - 2^n) = sum_{a != 0} W_{F_a}(0)^2.
    let zero_col = f.walsh_zero_column();
    let zero_sq: i128 = zero_col[1..].iter().map(|&w| (w as i128) * (w as i128)).sum();
    out.push(BoundCheck::new("collision-walsh-identity", Relation::Equal, size * (coll - size), zero_sq, Ok(())));

    let exps = f.exponents();
    let q = (1u64 << m) - 1;

    // Remark after bound-delta: gcd(d1, 2^m - 1) = 1 makes W_{F_a}(0) vanish
    // on GF(2^m)^*, hence #Delta <= 2^(n-1) - 2^(m-1).
    let coprime = exps.is_some_and(|(d1, _)| gcd(d1, q) == 1);
    let remark = core.and(gate(exps.is_some(), "not a binomial")).and(gate(coprime, "gcd(d1, 2^m - 1) > 1"));
    let subfield_zero = ctx
        .subfield_elements(m)
        .iter()
        .filter(|u| !u.is_zero())
        .filter(|u| zero_col[u.0 as usize] != 0)
        .count() as i128;
    out.push(BoundCheck::new("delta-remark-premise", Relation::Equal, subfield_zero, 0, remark));
    out.push(BoundCheck::new(
        "delta-remark-size",
        Relation::AtLeast,
        p(n - 1) - p(m - 1),
        delta_set,
        remark,
    ));
    out.push(BoundCheck::new(
        "delta-remark-bound",
        Relation::AtLeast,
        delta * (p(n - 1) - p(m - 1)) * im,
        size * (size - im),
        remark,
    ));

    // Image size (2^m - 1) c / s + 1 and the bounds built on it.
    let s = image.s.unwrap_or(1) as i128;
    let wt22 = exps.is_some_and(|(d1, d2)| wt2(d1 as i64, n) == 2 && wt2(d2 as i64, n) == 2);
    let img_gate = core
        .and(gate(exps.is_some(), "not a binomial"))
        .and(gate(wt22, "requires wt2(d1) = wt2(d2) = 2"))
        .and(gate(s > 1, "requires s > 1"));
    out.push(BoundCheck::new(
        "image-size-formula",
        Relation::Equal,
        im,
        image.formula_size.map_or(-1, |v| v as i128),
        img_gate,
    ));
    let c = image.c.unwrap_or(0) as i128;
    let d = s + (p(m) - 1) * c;
    let img_defined = img_gate.and(gate(image.c.is_some(), "c undefined (s does not divide 2^m - 1)"));
    out.push(BoundCheck::new(
        "imgbd-nonlinearity",
        Relation::AtLeast,
        max_sq * t * d,
        p(3 * m) * (p(3 * m) * s - (p(m + 1) - 1) * d),
        img_defined.and(gate(t != 0, "T = 0")),
    ));
    out.push(BoundCheck::new(
        "imgbd-delta",
        Relation::AtLeast,
        delta * delta_set * d,
        size * (size * s - d),
        img_defined,
    ));
    out.push(BoundCheck::new("delta-at-least-s-minus-1", Relation::AtLeast, delta, s - 1, img_gate));
    out
}

#[cfg(test)]
mod tests {
    use super::super::Classifier;
    use super::*;
    use crate::gf2n::FieldContext;

    fn checks(n: u32, d1: u64, d2: u64) -> Vec<BoundCheck> {
        let ctx = FieldContext::new(n).unwrap();
        let cl = Classifier::new(&ctx, false).unwrap();
        cl.analyze(&VectorialFn::binomial(&ctx, d1, d2).unwrap()).unwrap().bounds
    }

    fn find<'a>(v: &'a [BoundCheck], name: &str) -> &'a BoundCheck {
        v.iter().find(|c| c.name == name).unwrap()
    }

    #[test]
    fn pott_six_bounds() {
        let v = checks(6, 3, 10);
        let bd1 = find(&v, "bd1");
        assert_eq!(bd1.status, CheckStatus::Holds);
        assert_eq!(bd1.rhs, 640);
        // N_F <= 19 from bd1 and <= 16 from the plateaued form.
        assert!((64 - bd1.lhs.isqrt()) / 2 <= 19);
        let pl = find(&v, "plateaued");
        assert_eq!((pl.lhs, pl.status), (16, CheckStatus::Holds));
        assert!(matches!(find(&v, "imgbd-delta").status, CheckStatus::Inapplicable(_)));
        assert!(v.iter().all(|c| !c.status.is_violated()), "{v:?}");
    }

    #[test]
    fn delta_at_least_four_at_eight() {
        let v = checks(8, 5, 20);
        let c = find(&v, "delta-at-least-s-minus-1");
        assert_eq!((c.rhs, c.status), (4, CheckStatus::Holds));
        assert_eq!(find(&v, "image-size-formula").status, CheckStatus::Holds);
        assert!(v.iter().all(|c| !c.status.is_violated()), "{v:?}");
    }
}
