//! Bentness of quadratic components through the linearized polynomial of
//! their polar bilinear form.
//!
//! For a quadratic component `F_a`, `F_a(x+z) + F_a(x) + F_a(z) = Tr(z L_a(x))`
//! for a linearized polynomial `L_a`. `F_a` is bent iff `ker L_a = {0}`, and
//! in general it is plateaued with amount `dim ker L_a`.

use alloc::vec::Vec;

use crate::bitmat;
use crate::boolfun::VectorialFn;
use crate::gf2n::{FieldContext, FieldElem};
use crate::par;
use crate::{Error, Result};

/// `x -> sum_i coeffs[i] x^(2^i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearizedPoly {
    pub coeffs: Vec<FieldElem>,
}

impl LinearizedPoly {
    pub fn zero(n: u32) -> Self {
        LinearizedPoly { coeffs: alloc::vec![FieldElem::ZERO; n as usize] }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn eval(&self, ctx: &FieldContext, x: FieldElem) -> FieldElem {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .fold(FieldElem::ZERO, |acc, (i, &c)| acc + ctx.mul(c, ctx.frobenius(x, i as u32)))
    }

    /// Images of the polynomial basis `t^0, ..., t^(n-1)`.
    pub fn columns(&self, ctx: &FieldContext) -> Vec<u32> {
        (0..ctx.n()).map(|j| self.eval(ctx, FieldElem(1 << j)).0).collect()
    }

    pub fn kernel_dim(&self, ctx: &FieldContext) -> u32 {
        ctx.n() - bitmat::rank(&self.columns(ctx)) as u32
    }

    pub fn kernel(&self, ctx: &FieldContext) -> Vec<FieldElem> {
        bitmat::kernel_basis(&self.columns(ctx)).into_iter().map(FieldElem).collect()
    }
}

/// Splits `d` into `(u, v)` with `d = 2^u + 2^v`, `u < v`; weight-one
/// exponents give `None`.
pub fn quadratic_terms(ctx: &FieldContext, d: u64) -> Result<Option<(u32, u32)>> {
    let d = d % ctx.order() as u64;
    match d.count_ones() {
        1 => Ok(None),
        2 => {
            let u = d.trailing_zeros();
            let v = 63 - d.leading_zeros();
            Ok(Some((u, v)))
        }
        _ => Err(Error::NotQuadratic(d)),
    }
}

fn exponents_of(f: &VectorialFn<'_>) -> Result<Vec<u64>> {
    match f.kind() {
        crate::boolfun::FnKind::Binomial { d1, d2 } => Ok(alloc::vec![d1, d2]),
        crate::boolfun::FnKind::Monomial { d } => Ok(alloc::vec![d]),
        crate::boolfun::FnKind::Table => Err(Error::NotBinomial("quadratic kernel analysis")),
    }
}

/// The linearized polynomial of the component `F_a`.
pub fn derive_la(f: &VectorialFn<'_>, a: FieldElem) -> Result<LinearizedPoly> {
    let terms = exponents_of(f)?
        .into_iter()
        .map(|d| quadratic_terms(f.ctx(), d))
        .collect::<Result<Vec<_>>>()?;
    Ok(la_from_terms(f.ctx(), &terms, a))
}

fn la_from_terms(ctx: &FieldContext, terms: &[Option<(u32, u32)>], a: FieldElem) -> LinearizedPoly {
    let n = ctx.n();
    let mut l = LinearizedPoly::zero(n);
    // a x^(2^u + 2^v) contributes (a x^(2^u))^(2^(n-v)) + (a x^(2^v))^(2^(n-u)).
    for &(u, v) in terms.iter().flatten() {
        l.coeffs[((n + u - v) % n) as usize] += ctx.frobenius(a, n - v);
        l.coeffs[((v - u) % n) as usize] += ctx.frobenius(a, n - u);
    }
    l
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticScan {
    /// `dim ker L_a`, indexed by `a`; equal to the plateau amount of `F_a`.
    pub kernel_dims: Vec<u32>,
    /// Components with nontrivial kernel (the non-bent ones), sorted.
    pub sf: Vec<FieldElem>,
}

impl QuadraticScan {
    pub fn sf_size(&self) -> usize {
        self.sf.len()
    }
}

/// `S_F` and plateau amounts of every component of a quadratic binomial.
pub fn nonbent_set_quadratic(f: &VectorialFn<'_>) -> Result<QuadraticScan> {
    let terms = exponents_of(f)?
        .into_iter()
        .map(|d| quadratic_terms(f.ctx(), d))
        .collect::<Result<Vec<_>>>()?;
    Ok(scan_terms(f.ctx(), &terms))
}

/// Same as [`nonbent_set_quadratic`] from the exponents alone, without a
/// truth table (so it also works beyond the table size limit).
pub fn nonbent_set_from_exponents(ctx: &FieldContext, exponents: &[u64]) -> Result<QuadraticScan> {
    let terms = exponents
        .iter()
        .map(|&d| quadratic_terms(ctx, d))
        .collect::<Result<Vec<_>>>()?;
    Ok(scan_terms(ctx, &terms))
}

fn scan_terms(ctx: &FieldContext, terms: &[Option<(u32, u32)>]) -> QuadraticScan {
    let kernel_dims = par::map_range(ctx.size(), |a| la_from_terms(ctx, terms, FieldElem(a as u32)).kernel_dim(ctx));
    let sf = kernel_dims
        .iter()
        .enumerate()
        .filter(|(_, &k)| k > 0)
        .map(|(a, _)| FieldElem(a as u32))
        .collect();
    QuadraticScan { kernel_dims, sf }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polar_form_matches_definition() {
        let f = FieldContext::new(6).unwrap();
        let g = VectorialFn::binomial(&f, 3, 24).unwrap();
        for a in f.elements().step_by(5) {
            let l = derive_la(&g, a).unwrap();
            let comp = |x: FieldElem| f.trace(f.mul(a, g.eval(x)));
            for x in f.elements() {
                assert_eq!(comp(x) ^ comp(x), 0);
                for z in f.elements().step_by(7) {
                    let polar = comp(x + z) ^ comp(x) ^ comp(z);
                    assert_eq!(polar, f.trace(f.mul(z, l.eval(&f, x))));
                }
            }
        }
    }

    #[test]
    fn rejects_cubic_exponents() {
        let f = FieldContext::new(6).unwrap();
        let g = VectorialFn::binomial(&f, 7, 10).unwrap();
        assert_eq!(derive_la(&g, FieldElem::ONE), Err(Error::NotQuadratic(7)));
    }

    #[test]
    fn zero_component_has_full_kernel() {
        let f = FieldContext::new(6).unwrap();
        let scan = nonbent_set_from_exponents(&f, &[3, 10]).unwrap();
        assert_eq!(scan.kernel_dims[0], 6);
        assert_eq!(scan.sf, f.subfield_elements(3));
    }
}
