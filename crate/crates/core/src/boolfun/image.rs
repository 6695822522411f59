use super::{FnKind, VectorialFn};
use crate::arith::{gcd, gcd3, v2};
use crate::gf2n::{FieldContext, FieldElem};
use crate::Result;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ImageReport {
    pub image_size: u64,
    /// `#{(x, y) : F(x) = F(y)}`.
    pub collisions: u64,
    /// `gcd(d1, d2, N)` for binomials.
    pub s: Option<u64>,
    /// `#{F(alpha^i)^((2^m-1)/s) : 1 <= i <= 2^m}`, defined when `s | 2^m - 1`.
    pub c: Option<u64>,
    /// `(2^m - 1) c / s + 1` when `s > 1` and the quotient is integral.
    pub formula_size: Option<u64>,
    pub agrees: Option<bool>,
}

impl ImageReport {
    pub fn compute(f: &VectorialFn<'_>) -> Self {
        let ctx = f.ctx();
        let mut counts = alloc::vec![0u32; ctx.size()];
        for y in f.table() {
            counts[y.0 as usize] += 1;
        }
        let image_size = counts.iter().filter(|&&c| c > 0).count() as u64;
        let collisions = counts.iter().map(|&c| (c as u64) * (c as u64)).sum();
        let (s, c) = match (f.kind(), ctx.m()) {
            (FnKind::Binomial { d1, d2 }, m) => {
                let s = gcd3(d1, d2, ctx.order() as u64);
                (Some(s), m.and_then(|m| subfield_count(f, m, s)))
            }
            _ => (None, None),
        };
        let formula_size = match (s, c, ctx.m()) {
            (Some(s), Some(c), Some(m)) if s > 1 => {
                let num = ((1u64 << m) - 1) * c;
                (num % s == 0).then(|| num / s + 1)
            }
            _ => None,
        };
        ImageReport {
            image_size,
            collisions,
            s,
            c,
            formula_size,
            agrees: formula_size.map(|v| v == image_size),
        }
    }
}

fn subfield_count(f: &VectorialFn<'_>, m: u32, s: u64) -> Option<u64> {
    let ctx = f.ctx();
    let q1 = (1u64 << m) - 1;
    if q1 % s != 0 {
        return None;
    }
    let mut seen: alloc::vec::Vec<FieldElem> = (1..=1u64 << m)
        .map(|i| ctx.pow_u(f.eval(ctx.exp(i)), q1 / s))
        .collect();
    seen.sort();
    seen.dedup();
    Some(seen.len() as u64)
}

/// Direct count of `#Im(x^(2^l+1) + x^(2^l+2^m))` against
/// `1 + (2^n - 2^m) / gcd(2^l + 1, 2^m - 1)`, plus the two-case
/// simplification of that gcd (1 when `v2(m) <= v2(l)`, else 3), which is
/// flagged whenever it disagrees with the true gcd.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExplicitImageCheck {
    pub n: u32,
    pub l: u32,
    pub direct: u64,
    pub gcd: u64,
    pub predicted: u64,
    pub holds: bool,
    pub branch_gcd: u64,
    pub branch_predicted: u64,
    pub branch_flagged: bool,
}

pub fn explicit_image_check(ctx: &FieldContext, l: u32) -> Result<ExplicitImageCheck> {
    let m = ctx.m().ok_or(crate::Error::OddDegree("explicit image family"))?;
    let n = ctx.n();
    let f = VectorialFn::binomial(ctx, (1u64 << l) + 1, (1u64 << l) + (1u64 << m))?;
    let direct = ImageReport::compute(&f).image_size;
    let g = gcd((1u64 << l) + 1, (1u64 << m) - 1);
    let span = (1u64 << n) - (1u64 << m);
    // v2(0) is +infinity, so l = 0 always takes the first branch.
    let first_branch = match v2(l as i64) {
        None => true,
        Some(vl) => m.trailing_zeros() <= vl,
    };
    let branch_gcd = if first_branch { 1 } else { 3 };
    Ok(ExplicitImageCheck {
        n,
        l,
        direct,
        gcd: g,
        predicted: 1 + span / g,
        holds: direct == 1 + span / g,
        branch_gcd,
        branch_predicted: 1 + span / branch_gcd,
        branch_flagged: branch_gcd != g,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_images() {
        let f4 = FieldContext::new(4).unwrap();
        let g = VectorialFn::binomial(&f4, 3, 6).unwrap();
        assert_eq!(ImageReport::compute(&g).image_size, 5);
        let f6 = FieldContext::new(6).unwrap();
        let g = VectorialFn::binomial(&f6, 3, 10).unwrap();
        let r = ImageReport::compute(&g);
        assert_eq!((r.image_size, r.s, r.formula_size), (57, Some(1), None));
    }
}
