//! The unramified extension `Z_2[xi]` of degree `n` truncated at precision
//! `2^kappa`, realised as `(Z / 2^kappa)[X] / (f)` where `f` is the field
//! modulus read with integer coefficients.
//!
//! Reduction mod 2 recovers GF(2^n) with the same polynomial basis, so the
//! Teichmüller lift `omega` satisfies `omega(a) mod 2 = a`.

use alloc::vec::Vec;
use core::fmt;

use crate::gf2n::{FieldContext, FieldElem};
use crate::stickelberger::wt2;
use crate::{par, Error, Result};

pub const MAX_DEGREE: u32 = 16;
pub const MAX_PRECISION: u32 = 64;

const D: usize = MAX_DEGREE as usize;

/// Ring element: coefficients in the basis `1, X, ..., X^(n-1)`, each a
/// residue mod `2^kappa` stored in a `u64`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct PadicElem {
    coeffs: [u64; D],
}

impl fmt::Debug for PadicElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let last = self.coeffs.iter().rposition(|&c| c != 0).map_or(1, |i| i + 1);
        f.debug_list().entries(&self.coeffs[..last]).finish()
    }
}

impl PadicElem {
    pub const ZERO: PadicElem = PadicElem { coeffs: [0; D] };

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }
}

#[derive(Clone, Debug)]
pub struct PadicContext<'a> {
    base: &'a FieldContext,
    kappa: u32,
    mask: u64,
    // Indices i < n with f_i = 1, so X^n = -sum X^i.
    tail: Vec<usize>,
    // omega(alpha)^i for 0 <= i < N.
    omega_powers: Vec<PadicElem>,
}

impl<'a> PadicContext<'a> {
    pub fn new(base: &'a FieldContext, kappa: u32) -> Result<Self> {
        if !(2..=MAX_PRECISION).contains(&kappa) {
            return Err(Error::Precision(kappa));
        }
        if base.n() > MAX_DEGREE {
            return Err(Error::ResourceGate { what: "2-adic ring", n: base.n() });
        }
        let n = base.n();
        let mut ctx = PadicContext {
            base,
            kappa,
            mask: if kappa == 64 { u64::MAX } else { (1u64 << kappa) - 1 },
            tail: (0..n).filter(|&i| base.modulus().coeff(i)).map(|i| i as usize).collect(),
            omega_powers: Vec::new(),
        };
        let w = ctx.teichmuller_by_iteration(base.primitive());
        let mut powers = Vec::with_capacity(base.order() as usize);
        let mut p = ctx.one();
        for _ in 0..base.order() {
            powers.push(p);
            p = ctx.mul(&p, &w);
        }
        debug_assert_eq!(p, ctx.one());
        ctx.omega_powers = powers;
        Ok(ctx)
    }

    /// Default precision `n + 2`.
    pub fn with_default_precision(base: &'a FieldContext) -> Result<Self> {
        Self::new(base, base.n() + 2)
    }

    pub fn base(&self) -> &'a FieldContext {
        self.base
    }

    pub fn kappa(&self) -> u32 {
        self.kappa
    }

    pub fn from_int(&self, v: i64) -> PadicElem {
        let mut e = PadicElem::ZERO;
        e.coeffs[0] = (v as u64) & self.mask;
        e
    }

    pub fn one(&self) -> PadicElem {
        self.from_int(1)
    }

    /// Coefficientwise lift of the bits of `x` to 0/1 integers.
    pub fn naive_lift(&self, x: FieldElem) -> PadicElem {
        let mut e = PadicElem::ZERO;
        for i in 0..self.base.n() as usize {
            e.coeffs[i] = ((x.0 >> i) & 1) as u64;
        }
        e
    }

    pub fn reduce_mod2(&self, e: &PadicElem) -> FieldElem {
        FieldElem((0..self.base.n() as usize).fold(0, |acc, i| acc | (((e.coeffs[i] & 1) as u32) << i)))
    }

    pub fn add(&self, a: &PadicElem, b: &PadicElem) -> PadicElem {
        let mut out = PadicElem::ZERO;
        for i in 0..D {
            out.coeffs[i] = a.coeffs[i].wrapping_add(b.coeffs[i]) & self.mask;
        }
        out
    }

    pub fn sub(&self, a: &PadicElem, b: &PadicElem) -> PadicElem {
        let mut out = PadicElem::ZERO;
        for i in 0..D {
            out.coeffs[i] = a.coeffs[i].wrapping_sub(b.coeffs[i]) & self.mask;
        }
        out
    }

    pub fn neg(&self, a: &PadicElem) -> PadicElem {
        self.sub(&PadicElem::ZERO, a)
    }

    pub fn mul(&self, a: &PadicElem, b: &PadicElem) -> PadicElem {
        let n = self.base.n() as usize;
        let mut prod = [0u64; 2 * D];
        for i in 0..n {
            if a.coeffs[i] == 0 {
                continue;
            }
            for j in 0..n {
                prod[i + j] = prod[i + j].wrapping_add(a.coeffs[i].wrapping_mul(b.coeffs[j]));
            }
        }
        for k in (n..2 * n - 1).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            prod[k] = 0;
            for &i in &self.tail {
                prod[k - n + i] = prod[k - n + i].wrapping_sub(c);
            }
        }
        let mut out = PadicElem::ZERO;
        for (o, &c) in out.coeffs[..n].iter_mut().zip(&prod[..n]) {
            *o = c & self.mask;
        }
        out
    }

    pub fn pow(&self, a: &PadicElem, mut e: u64) -> PadicElem {
        let mut acc = self.one();
        let mut base = *a;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// 2-adic valuation (minimum over coefficients); `None` when the element
    /// vanishes at this precision.
    pub fn valuation(&self, a: &PadicElem) -> Option<u32> {
        a.coeffs.iter().filter(|&&c| c != 0).map(|c| c.trailing_zeros()).min()
    }

    /// `a = b mod 2^k` (for `k <= kappa`).
    pub fn congruent(&self, a: &PadicElem, b: &PadicElem, k: u32) -> bool {
        debug_assert!(k <= self.kappa);
        self.valuation(&self.sub(a, b)).map_or(true, |v| v >= k)
    }

    /// Teichmüller lift by iterating `y -> y^(2^n)` from the naive lift.
    pub fn teichmuller_by_iteration(&self, x: FieldElem) -> PadicElem {
        let mut y = self.naive_lift(x);
        for _ in 0..=self.kappa {
            let mut z = y;
            for _ in 0..self.base.n() {
                z = self.mul(&z, &z);
            }
            if z == y {
                return y;
            }
            y = z;
        }
        unreachable!("Teichmüller iteration gains one bit per step")
    }

    /// `omega(x)`, from the power table of `omega(alpha)`.
    pub fn teichmuller(&self, x: FieldElem) -> PadicElem {
        match self.base.log(x) {
            None => PadicElem::ZERO,
            Some(l) => self.omega_powers[l as usize],
        }
    }

    /// `omega(alpha)^i`.
    pub fn omega_power(&self, i: i64) -> PadicElem {
        let order = self.base.order() as i64;
        self.omega_powers[i.rem_euclid(order) as usize]
    }

    /// `G(omega^-j) = sum_{x != 0} (-1)^Tr(x) omega(x)^-j`.
    pub fn gauss_sum(&self, j: u64) -> GaussSumValue {
        let order = self.base.order() as u64;
        let j = j % order;
        let mut value = PadicElem::ZERO;
        for i in 0..order {
            let term = self.omega_powers[((order - i * j % order) % order) as usize];
            value = if self.base.trace(self.base.exp(i)) == 1 {
                self.sub(&value, &term)
            } else {
                self.add(&value, &term)
            };
        }
        let weight = wt2(j as i64, self.base.n());
        GaussSumValue { j, value, valuation: self.valuation(&value), conclusive: self.kappa >= weight + 2 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaussSumValue {
    pub j: u64,
    pub value: PadicElem,
    pub valuation: Option<u32>,
    /// Precision suffices to pin the valuation (`kappa >= wt2(j) + 2`).
    pub conclusive: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct StickelbergerCheck {
    pub n: u32,
    pub kappa: u32,
    pub characters: u64,
    /// `i` with `G(omega^-i) != 2^wt2(i) mod 2^(wt2(i)+1)`.
    pub congruence_failures: Vec<u64>,
    /// `i` whose Gauss sum valuation differs from `wt2(i)` (or, for `i = 0`,
    /// whose sum is not exactly -1).
    pub valuation_failures: Vec<u64>,
    /// `i != 0` with `G(omega^-i) G(omega^i) != 2^n mod 2^kappa`.
    pub product_failures: Vec<u64>,
    /// `x != 0` where Fourier inversion fails mod `2^kappa`.
    pub fourier_failures: Vec<FieldElem>,
    pub inconclusive: Vec<u64>,
}

impl StickelbergerCheck {
    pub fn holds(&self) -> bool {
        self.congruence_failures.is_empty()
            && self.valuation_failures.is_empty()
            && self.product_failures.is_empty()
            && self.fourier_failures.is_empty()
            && self.inconclusive.is_empty()
    }
}

/// Stickelberger congruence, valuations, the product identity and Fourier
/// inversion for every character.
pub fn verify_stickelberger_and_fourier(p: &PadicContext<'_>) -> StickelbergerCheck {
    let base = p.base();
    let n = base.n();
    let order = base.order() as u64;
    let sums = par::map_range(order as usize, |j| p.gauss_sum(j as u64));
    let mut report = StickelbergerCheck { n, kappa: p.kappa(), characters: order, ..Default::default() };
    for g in &sums {
        let w = wt2(g.j as i64, n);
        if !g.conclusive {
            report.inconclusive.push(g.j);
            continue;
        }
        if !p.congruent(&g.value, &p.from_int(1 << w), w + 1) {
            report.congruence_failures.push(g.j);
        }
        let valuation_ok = if g.j == 0 { g.value == p.from_int(-1) } else { g.valuation == Some(w) };
        if !valuation_ok {
            report.valuation_failures.push(g.j);
        }
        if g.j != 0 {
            let conj = &sums[(order - g.j) as usize].value;
            if p.mul(&g.value, conj) != p.from_int(1 << n) {
                report.product_failures.push(g.j);
            }
        }
    }
    for k in 0..order {
        let x = base.exp(k);
        let mut acc = PadicElem::ZERO;
        for g in &sums {
            acc = p.add(&acc, &p.mul(&g.value, &p.omega_power((k * g.j % order) as i64)));
        }
        let psi = if base.trace(x) == 1 { -1 } else { 1 };
        if acc != p.from_int(order as i64 * psi) {
            report.fourier_failures.push(x);
        }
    }
    report.fourier_failures.sort();
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precision_is_validated() {
        let f = FieldContext::new(4).unwrap();
        assert_eq!(PadicContext::new(&f, 1).unwrap_err(), Error::Precision(1));
        assert!(PadicContext::new(&f, 64).is_ok());
    }

    #[test]
    fn reduction_is_a_ring_map() {
        for n in [2, 4, 6] {
            let f = FieldContext::new(n).unwrap();
            let p = PadicContext::new(&f, 9).unwrap();
            for a in f.elements() {
                for b in f.elements() {
                    // Perturb the lifts by multiples of 2 so carries are exercised.
                    let la = p.add(&p.naive_lift(a), &p.from_int(6));
                    let lb = p.sub(&p.naive_lift(b), &p.from_int(2));
                    assert_eq!(p.reduce_mod2(&p.mul(&la, &lb)), f.mul(a, b));
                }
            }
        }
    }

    #[test]
    fn teichmuller_lift() {
        let f = FieldContext::new(4).unwrap();
        let p = PadicContext::new(&f, 6).unwrap();
        assert_eq!(p.teichmuller(FieldElem::ZERO), PadicElem::ZERO);
        assert_eq!(p.teichmuller(FieldElem::ONE), p.one());
        for a in f.elements() {
            let w = p.teichmuller(a);
            assert_eq!(p.reduce_mod2(&w), a);
            assert_eq!(w, p.teichmuller_by_iteration(a));
            assert_eq!(p.pow(&w, 16), w);
            if let Some(inv) = f.inv(a) {
                assert_eq!(p.mul(&w, &p.teichmuller(inv)), p.one());
            }
            for b in f.elements() {
                assert_eq!(p.mul(&w, &p.teichmuller(b)), p.teichmuller(f.mul(a, b)));
            }
        }
    }

    #[test]
    fn gauss_sum_examples() {
        let f = FieldContext::new(4).unwrap();
        let p = PadicContext::new(&f, 6).unwrap();
        assert_eq!(p.gauss_sum(0).value, p.from_int(-1));
        let g1 = p.gauss_sum(1);
        assert_eq!(g1.valuation, Some(1));
        for j in 1..15 {
            let prod = p.mul(&p.gauss_sum(j).value, &p.gauss_sum(15 - j).value);
            assert_eq!(prod, p.from_int(16));
        }
    }

    #[test]
    fn small_fields_pass_the_full_check() {
        for n in [2, 4] {
            let f = FieldContext::new(n).unwrap();
            let p = PadicContext::with_default_precision(&f).unwrap();
            assert!(verify_stickelberger_and_fourier(&p).holds());
        }
    }

    #[test]
    fn low_precision_is_inconclusive() {
        let f = FieldContext::new(4).unwrap();
        let p = PadicContext::new(&f, 3).unwrap();
        let r = verify_stickelberger_and_fourier(&p);
        assert!(r.inconclusive.contains(&14));
        assert!(!r.holds());
    }
}
