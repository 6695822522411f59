//! Known families of maximal and non-maximal power functions and binomials,
//! checked against an exhaustive Walsh computation.

use alloc::vec::Vec;

use crate::boolfun::{SpectralSummary, VectorialFn};
use crate::gf2n::FieldContext;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// `x^(2^i+1) + x^(2^i+2^m)`, `0 < i < m`: maximal.
    Binomial { i: u32 },
    /// The `i = 0` member `x^2 + x^(2^m+1)`: maximal, outside `0 < i < m`
    /// and only checked numerically.
    BinomialZero,
    /// `x^(1+2^i) + x^(1+2^(m+i))`, `0 < i < m`: maximal, the image of the
    /// `m - i` binomial member under `x -> x^(2^(m+i))`.
    Swapped { i: u32 },
    /// `x^(2^i+1) + x^(2^(m+i)+2^m)`, `0 < i < m`: not maximal.
    NonMaximal { i: u32 },
    /// `x^((2^m+1) 2^i)`, `0 <= i < m`: maximal.
    Monomial { i: u32 },
    /// `x^(3 (2^m+1))`: not maximal, since `3` is not a power of two.
    MonomialOddMultiple,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Binomial { .. } => "binomial",
            Family::BinomialZero => "binomial-i0",
            Family::Swapped { .. } => "swapped",
            Family::NonMaximal { .. } => "non-maximal",
            Family::Monomial { .. } => "monomial",
            Family::MonomialOddMultiple => "monomial-odd-multiple",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub family: Family,
    /// `(d1, d2)`, with `d2 = 0` for monomials.
    pub exponents: (u64, u64),
    pub expected_maximal: bool,
    pub sf_size: usize,
    pub maximal: bool,
    pub sf_equals_subfield: bool,
    /// Measured verdict matches; maximal members must also have
    /// `S_F = GF(2^m)`.
    pub agrees: bool,
    /// For [`Family::Swapped`], whether composing the `m - i` binomial member
    /// with `x^(2^(m+i))` reproduces this member's truth table.
    pub witness_verified: Option<bool>,
}

fn members(n: u32) -> Vec<(Family, (u64, u64), bool)> {
    let m = n / 2;
    let order = (1u64 << n) - 1;
    let p = |e: u32| 1u64 << e;
    let mut out = Vec::new();
    for i in 1..m {
        out.push((Family::Binomial { i }, (p(i) + 1, p(i) + p(m)), true));
    }
    out.push((Family::BinomialZero, (2, p(m) + 1), true));
    for i in 1..m {
        out.push((Family::Swapped { i }, (1 + p(i), 1 + p(m + i)), true));
    }
    for i in 1..m {
        out.push((Family::NonMaximal { i }, (p(i) + 1, p(m + i) + p(m)), false));
    }
    for i in 0..m {
        out.push((Family::Monomial { i }, (((p(m) + 1) << i) % order, 0), true));
    }
    let odd = 3 * (p(m) + 1) % order;
    if odd != 0 {
        out.push((Family::MonomialOddMultiple, (odd, 0), false));
    }
    out
}

pub fn family_catalog(ctx: &FieldContext, long_run: bool) -> Result<Vec<CatalogEntry>> {
    let m = ctx.m().ok_or(Error::OddDegree("family catalog"))?;
    let mut out = Vec::new();
    for (family, (d1, d2), expected_maximal) in members(ctx.n()) {
        let f = if d2 == 0 {
            VectorialFn::monomial(ctx, d1)?
        } else {
            VectorialFn::binomial(ctx, d1, d2)?
        };
        let summary = SpectralSummary::compute(&f, long_run)?;
        let maximal = summary.is_maximal();
        let sf_equals_subfield = summary.sf_equals_subfield() == Some(true);
        let witness_verified = match family {
            Family::Swapped { i } => {
                let j = m - i;
                let src = VectorialFn::binomial(ctx, (1u64 << j) + 1, (1u64 << j) + (1u64 << m))?;
                Some(ctx.elements().all(|x| src.eval(ctx.frobenius(x, m + i)) == f.eval(x)))
            }
            _ => None,
        };
        out.push(CatalogEntry {
            family,
            exponents: (d1, d2),
            expected_maximal,
            sf_size: summary.sf_size().unwrap_or(0),
            maximal,
            sf_equals_subfield,
            agrees: maximal == expected_maximal && (!maximal || sf_equals_subfield),
            witness_verified,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_at_six() {
        let ctx = FieldContext::new(6).unwrap();
        let cat = family_catalog(&ctx, false).unwrap();
        assert!(cat.iter().all(|e| e.agrees), "{cat:?}");
        assert!(cat.iter().all(|e| e.witness_verified != Some(false)));
        let exps: Vec<(u64, u64)> = cat.iter().map(|e| e.exponents).collect();
        for want in [(3, 10), (5, 12), (2, 9), (9, 0), (18, 0), (36, 0), (27, 0), (3, 24)] {
            assert!(exps.contains(&want), "{want:?}");
        }
    }
}
