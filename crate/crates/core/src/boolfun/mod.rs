//! Vectorial Boolean functions `F: GF(2^n) -> GF(2^n)` stored as truth
//! tables, with their component Walsh spectra, difference tables and image
//! sets.
//!
//! The component of `F` at `a` is `F_a(x) = Tr(a F(x))` and its Walsh
//! transform is `W_{F_a}(b) = sum_x (-1)^{F_a(x) + Tr(b x)}`.

mod diff;
mod image;
mod spectrum;

use alloc::vec::Vec;

use crate::gf2n::{FieldContext, FieldElem};
use crate::walsh;
use crate::{Error, Result};

pub use diff::DiffReport;
pub use image::{explicit_image_check, ExplicitImageCheck, ImageReport};
pub use spectrum::{check_sf_subspace, count_nonbent_up_to, ComponentStats, SpectralSummary, SubspaceCheck};

/// Largest degree for which full truth tables are built.
pub const TABLE_MAX_DEGREE: u32 = 24;
/// Largest degree handled by the quadratic-cost analyses without an
/// explicit long-run opt-in.
pub const DEFAULT_ANALYSIS_MAX_DEGREE: u32 = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FnKind {
    Binomial { d1: u64, d2: u64 },
    Monomial { d: u64 },
    Table,
}

#[derive(Clone, Debug)]
pub struct VectorialFn<'a> {
    ctx: &'a FieldContext,
    kind: FnKind,
    table: Vec<FieldElem>,
}

fn check_exponent(ctx: &FieldContext, d: u64) -> Result<()> {
    let max = ctx.order() as u64 - 1;
    if d == 0 || d > max {
        return Err(Error::ExponentOutOfRange { exponent: d, max });
    }
    Ok(())
}

fn check_table_size(ctx: &FieldContext) -> Result<()> {
    if ctx.n() > TABLE_MAX_DEGREE {
        return Err(Error::ResourceGate { what: "truth table", n: ctx.n() });
    }
    Ok(())
}

impl<'a> VectorialFn<'a> {
    /// `x^d1 + x^d2` with `d1 != d2`, both in `[1, N-1]`.
    pub fn binomial(ctx: &'a FieldContext, d1: u64, d2: u64) -> Result<Self> {
        check_exponent(ctx, d1)?;
        check_exponent(ctx, d2)?;
        if d1 == d2 {
            return Err(Error::DegenerateBinomial(d1));
        }
        check_table_size(ctx)?;
        let mut table = ctx.power_map(d1);
        for (t, y) in table.iter_mut().zip(ctx.power_map(d2)) {
            *t += y;
        }
        Ok(VectorialFn { ctx, kind: FnKind::Binomial { d1, d2 }, table })
    }

    pub fn monomial(ctx: &'a FieldContext, d: u64) -> Result<Self> {
        check_exponent(ctx, d)?;
        check_table_size(ctx)?;
        Ok(VectorialFn { ctx, kind: FnKind::Monomial { d }, table: ctx.power_map(d) })
    }

    pub fn from_table(ctx: &'a FieldContext, table: Vec<FieldElem>) -> Result<Self> {
        if table.len() != ctx.size() {
            return Err(Error::TableLength { got: table.len(), expected: ctx.size() });
        }
        if let Some(bad) = table.iter().find(|y| !ctx.contains(**y)) {
            return Err(Error::TableValue { value: bad.0, n: ctx.n() });
        }
        Ok(VectorialFn { ctx, kind: FnKind::Table, table })
    }

    pub fn from_fn(ctx: &'a FieldContext, f: impl Fn(FieldElem) -> FieldElem) -> Result<Self> {
        check_table_size(ctx)?;
        let table = ctx.elements().map(f).collect();
        Self::from_table(ctx, table)
    }

    pub fn ctx(&self) -> &'a FieldContext {
        self.ctx
    }

    pub fn kind(&self) -> FnKind {
        self.kind
    }

    /// `(d1, d2)` for binomials.
    pub fn exponents(&self) -> Option<(u64, u64)> {
        match self.kind {
            FnKind::Binomial { d1, d2 } => Some((d1, d2)),
            _ => None,
        }
    }

    pub fn table(&self) -> &[FieldElem] {
        &self.table
    }

    pub fn eval(&self, x: FieldElem) -> FieldElem {
        self.table[x.0 as usize]
    }

    /// `F(x^2) = F(x)^2` for every `x`.
    pub fn commutes_with_frobenius(&self) -> bool {
        self.ctx.elements().all(|x| self.eval(self.ctx.square(x)) == self.ctx.square(self.eval(x)))
    }

    /// Walsh transform of `F_a` indexed by the raw dual coordinate `w`,
    /// i.e. `raw[w] = sum_x (-1)^{F_a(x) + <w, x>}`. The true spectrum is
    /// `W_{F_a}(b) = raw[trace_dual(b)]`; value multisets coincide.
    pub(crate) fn raw_walsh_into(&self, a: FieldElem, buf: &mut Vec<i32>) {
        buf.resize(self.table.len(), 0);
        walsh::fill_signs(buf, self.table.iter().map(|y| y.0), self.ctx.trace_dual(a));
        walsh::fwht(buf);
    }

    /// `W_{F_a}(b)` for every `b`, indexed by `b`.
    pub fn walsh_row(&self, a: FieldElem) -> Vec<i32> {
        let mut raw = Vec::new();
        self.raw_walsh_into(a, &mut raw);
        self.ctx.elements().map(|b| raw[self.ctx.trace_dual(b) as usize]).collect()
    }

    /// `W_{F_a}(0)` for every `a`, indexed by `a`.
    pub fn walsh_zero_column(&self) -> Vec<i32> {
        let size = self.table.len();
        let mut counts = alloc::vec![0i32; size];
        for y in &self.table {
            counts[y.0 as usize] += 1;
        }
        // sum_x (-1)^{Tr(a F(x))} = sum_y #F^{-1}(y) (-1)^{<dual(a), y>}
        walsh::fwht(&mut counts);
        self.ctx.elements().map(|a| counts[self.ctx.trace_dual(a) as usize]).collect()
    }

    pub fn zero_preimage_count(&self) -> usize {
        self.table.iter().filter(|y| y.is_zero()).count()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructors_validate() {
        let f = FieldContext::new(4).unwrap();
        assert_eq!(VectorialFn::binomial(&f, 3, 3).unwrap_err(), Error::DegenerateBinomial(3));
        assert!(matches!(VectorialFn::binomial(&f, 0, 3), Err(Error::ExponentOutOfRange { .. })));
        assert!(matches!(VectorialFn::binomial(&f, 3, 15), Err(Error::ExponentOutOfRange { .. })));
        assert!(matches!(
            VectorialFn::from_table(&f, alloc::vec![FieldElem::ZERO; 15]),
            Err(Error::TableLength { .. })
        ));
        assert!(matches!(
            VectorialFn::from_table(&f, alloc::vec![FieldElem(16); 16]),
            Err(Error::TableValue { .. })
        ));
    }

    #[test]
    fn binomial_table_and_frobenius() {
        let f = FieldContext::new(6).unwrap();
        let g = VectorialFn::binomial(&f, 3, 10).unwrap();
        for x in f.elements() {
            assert_eq!(g.eval(x), f.pow_u(x, 3) + f.pow_u(x, 10));
        }
        assert!(g.commutes_with_frobenius());
        let h = VectorialFn::from_fn(&f, |x| f.pow_u(x, 3) + FieldElem(5)).unwrap();
        assert!(!h.commutes_with_frobenius());
    }

    #[test]
    fn walsh_row_against_direct_sum() {
        let f = FieldContext::new(4).unwrap();
        let g = VectorialFn::binomial(&f, 3, 6).unwrap();
        for a in f.elements() {
            let row = g.walsh_row(a);
            for b in f.elements() {
                let direct: i32 = f
                    .elements()
                    .map(|x| {
                        let e = f.trace(f.mul(a, g.eval(x))) ^ f.trace(f.mul(b, x));
                        1 - 2 * e as i32
                    })
                    .sum();
                assert_eq!(row[b.0 as usize], direct);
            }
        }
        let col = g.walsh_zero_column();
        for a in f.elements() {
            assert_eq!(col[a.0 as usize], g.walsh_row(a)[0]);
        }
    }
}
