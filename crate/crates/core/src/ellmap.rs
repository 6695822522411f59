//! Linear complexity of Frobenius orbits.
//!
//! `l(gamma)` is the F_2-dimension of the span of `gamma, gamma^2, gamma^4, ...`,
//! equivalently the degree of the least `f` with `f(sigma) gamma = 0`, where
//! `sigma` is the Frobenius. `l(n)` is the least `l(gamma)` over generators
//! of GF(2^n) over GF(2).
//!
//! GF(2^n) is a cyclic F_2[x]-module under `sigma` (normal basis theorem), so
//! `ker f(sigma)` has dimension `deg f` for every `f | x^n - 1`, and
//! `ker f(sigma) ∩ ker g(sigma) = ker gcd(f, g)(sigma)`. The lattice method
//! counts elements with exact annihilator `f` that lie in no maximal
//! subfield purely from these dimensions.

use alloc::vec::Vec;

use crate::arith::{is_prime, mult_order, prime_factors};
use crate::bitmat::{self, Echelon};
use crate::gf2n::{FieldContext, FieldElem};
use crate::par;
use crate::poly2::Poly2;
use crate::{Error, Result};

/// Published values of `l(n)` for even `4 <= n <= 26`.
pub const TABLE1: [(u32, u32); 12] = [
    (4, 3),
    (6, 4),
    (8, 5),
    (10, 6),
    (12, 5),
    (14, 5),
    (16, 9),
    (18, 8),
    (20, 7),
    (22, 12),
    (24, 7),
    (26, 14),
];

pub fn table1_expected(n: u32) -> Option<u32> {
    TABLE1.iter().find(|p| p.0 == n).map(|p| p.1)
}

/// Brute force without `long_run` stops here.
pub const BRUTE_DEFAULT_MAX: u32 = 20;
pub const BRUTE_LONG_RUN_MAX: u32 = 26;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EllGamma {
    pub ell: u32,
    /// Least-degree monic `f` with `f(sigma) gamma = 0`.
    pub annihilator: Poly2,
}

pub fn ell_gamma(ctx: &FieldContext, gamma: FieldElem) -> EllGamma {
    let mut echelon = Echelon::new();
    let mut v = gamma;
    for k in 0..=ctx.n() {
        if let Some(combo) = echelon.insert(v.0) {
            debug_assert_eq!(combo >> k, 1);
            return EllGamma { ell: k, annihilator: Poly2(combo) };
        }
        v = ctx.square(v);
    }
    unreachable!("x^n - 1 annihilates every element")
}

/// `f(sigma) x`.
pub fn apply_poly(ctx: &FieldContext, f: Poly2, x: FieldElem) -> FieldElem {
    let mut acc = FieldElem::ZERO;
    let mut y = x;
    for i in 0..=f.deg() {
        if f.coeff(i) {
            acc += y;
        }
        y = ctx.square(y);
    }
    acc
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EllMethod {
    Brute,
    Lattice,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EllRecord {
    pub n: u32,
    pub ell_n: u32,
    pub method: EllMethod,
    /// The least generator attaining `l(n)`.
    pub witness: FieldElem,
    pub f_gamma: Poly2,
}

pub fn ell_n(ctx: &FieldContext, method: EllMethod, long_run: bool) -> Result<EllRecord> {
    match method {
        EllMethod::Brute => ell_n_brute(ctx, long_run),
        EllMethod::Lattice => ell_n_lattice(ctx),
    }
}

/// Minimum over Frobenius-orbit representatives (the least element of each
/// orbit of size `n`).
pub fn ell_n_brute(ctx: &FieldContext, long_run: bool) -> Result<EllRecord> {
    let n = ctx.n();
    let cap = if long_run { BRUTE_LONG_RUN_MAX } else { BRUTE_DEFAULT_MAX };
    if n > cap {
        return Err(Error::ResourceGate { what: "brute-force l(n)", n });
    }
    const CHUNK: usize = 1 << 12;
    let size = ctx.size();
    let best = par::map_range(size.div_ceil(CHUNK), |c| {
        let mut best: Option<(u32, u32)> = None;
        for x in (c * CHUNK).max(1)..((c + 1) * CHUNK).min(size) {
            let gamma = FieldElem(x as u32);
            let mut y = ctx.square(gamma);
            let mut orbit = 1;
            let mut least = true;
            while y != gamma {
                if y < gamma {
                    least = false;
                    break;
                }
                orbit += 1;
                y = ctx.square(y);
            }
            if !least || orbit != n {
                continue;
            }
            let l = ell_gamma(ctx, gamma).ell;
            if best.map_or(true, |b| (l, x as u32) < b) {
                best = Some((l, x as u32));
            }
        }
        best
    });
    let (ell, w) = best.into_iter().flatten().min().expect("the primitive element generates the field");
    let witness = FieldElem(w);
    Ok(EllRecord { n, ell_n: ell, method: EllMethod::Brute, witness, f_gamma: ell_gamma(ctx, witness).annihilator })
}

/// Monic divisors of `x^n - 1`, sorted by `(degree, bits)`.
pub fn divisors_of_x_n_minus_one(n: u32) -> Vec<Poly2> {
    let (a, b) = (n.trailing_zeros(), n >> n.trailing_zeros());
    let factors = Poly2::x_pow_minus_one(b).factor_squarefree();
    let cap = 1u32 << a;
    let mut out = alloc::vec![Poly2::ONE];
    for p in factors {
        let mut next = Vec::with_capacity(out.len() * (cap as usize + 1));
        for &d in &out {
            let mut q = d;
            next.push(q);
            for _ in 0..cap {
                q = q.mul(p);
                next.push(q);
            }
        }
        out = next;
    }
    out.sort_by_key(|p| (p.deg(), p.0));
    out
}

/// Number of `gamma` with annihilator exactly `f` that generate GF(2^n).
pub fn count_exact_generators(n: u32, f: Poly2) -> u64 {
    let full = Poly2::x_pow_minus_one(n);
    debug_assert!(f.divides(full));
    // Kernels to exclude: maximal proper divisors of f and maximal subfields.
    let mut excluded: Vec<Poly2> = irreducible_factors(n, f).into_iter().map(|p| f.div_rem(p).0).collect();
    excluded.extend(prime_factors(n as u64).into_iter().map(|p| Poly2::x_pow_minus_one(n / p as u32)));
    let k = excluded.len();
    let mut total: i128 = 0;
    for mask in 0u32..(1 << k) {
        let g = (0..k).filter(|i| mask >> i & 1 == 1).fold(f, |acc, i| acc.gcd(excluded[i]));
        let term = 1i128 << g.deg();
        total += if mask.count_ones() % 2 == 0 { term } else { -term };
    }
    total as u64
}

// Distinct irreducible factors of a divisor of x^n - 1.
fn irreducible_factors(n: u32, f: Poly2) -> Vec<Poly2> {
    Poly2::x_pow_minus_one(n >> n.trailing_zeros())
        .factor_squarefree()
        .into_iter()
        .filter(|p| p.divides(f))
        .collect()
}

/// Elements of `ker f(sigma)`.
pub fn kernel_elements(ctx: &FieldContext, f: Poly2) -> Vec<FieldElem> {
    let cols: Vec<u32> = (0..ctx.n()).map(|j| apply_poly(ctx, f, FieldElem(1 << j)).0).collect();
    let basis = bitmat::kernel_basis(&cols);
    let mut out = Vec::with_capacity(1 << basis.len());
    for mask in 0u32..(1 << basis.len()) {
        let v = (0..basis.len()).filter(|i| mask >> i & 1 == 1).fold(0, |acc, i| acc ^ basis[i]);
        out.push(FieldElem(v));
    }
    out.sort();
    out
}

/// Divisor-lattice computation of `l(n)`; the witness is the least element
/// over all minimal-degree divisors, so it matches the brute-force witness.
pub fn ell_n_lattice(ctx: &FieldContext) -> Result<EllRecord> {
    let n = ctx.n();
    let divisors = divisors_of_x_n_minus_one(n);
    let ell = divisors
        .iter()
        .find(|&&f| count_exact_generators(n, f) > 0)
        .map(|f| f.deg())
        .expect("x^n - 1 itself annihilates a normal element");
    let (witness, f_gamma) = divisors
        .iter()
        .filter(|f| f.deg() == ell && count_exact_generators(n, **f) > 0)
        .filter_map(|&f| {
            kernel_elements(ctx, f)
                .into_iter()
                .find(|&g| ctx.is_field_generator(g) && ell_gamma(ctx, g).annihilator == f)
                .map(|g| (g, f))
        })
        .min()
        .expect("a positive count has an element");
    Ok(EllRecord { n, ell_n: ell, method: EllMethod::Lattice, witness, f_gamma })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SufficientReason {
    /// `n = 2p`, `p` an odd prime with 2 primitive mod `p`.
    TwicePrime { p: u32 },
    PowerOfTwo { k: u32 },
    Neither,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SufficientCondition {
    pub n: u32,
    pub guaranteed: bool,
    pub reason: SufficientReason,
    /// Lower bound on `l(n)` implied by the condition.
    pub implied_lower_bound: Option<u32>,
}

impl SufficientCondition {
    /// Whether a computed `l(n)` respects the implication `l(n) > n/2`.
    pub fn consistent_with(&self, ell_n: u32) -> bool {
        !self.guaranteed || ell_n > self.n / 2
    }
}

/// Conditions under which `l(n) > n/2` is known in advance.
pub fn sufficient_condition(n: u32) -> SufficientCondition {
    let (reason, bound) = if n.is_power_of_two() && n >= 2 {
        let k = n.trailing_zeros();
        (SufficientReason::PowerOfTwo { k }, Some(n / 2 + 1))
    } else if n % 2 == 0 && is_prime(n as u64 / 2) && n / 2 > 2 && mult_order(2, n as u64 / 2) == Some(n as u64 / 2 - 1) {
        (SufficientReason::TwicePrime { p: n / 2 }, Some(n / 2 + 1))
    } else {
        (SufficientReason::Neither, None)
    };
    SufficientCondition { n, guaranteed: reason != SufficientReason::Neither, reason, implied_lower_bound: bound }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_gammas() {
        let f = FieldContext::new(6).unwrap();
        assert_eq!(ell_gamma(&f, FieldElem::ZERO), EllGamma { ell: 0, annihilator: Poly2::ONE });
        assert_eq!(ell_gamma(&f, FieldElem::ONE), EllGamma { ell: 1, annihilator: Poly2(0b11) });
    }

    #[test]
    fn annihilators_divide_x_n_minus_one() {
        for n in [4, 6, 8] {
            let f = FieldContext::new(n).unwrap();
            for g in f.elements() {
                let e = ell_gamma(&f, g);
                assert_eq!(e.annihilator.deg(), e.ell);
                assert!(e.annihilator.divides(Poly2::x_pow_minus_one(n)));
                assert!(apply_poly(&f, e.annihilator, g).is_zero());
                assert_eq!(e.ell, ell_gamma(&f, f.square(g)).ell);
            }
        }
    }

    #[test]
    fn kernel_dimension_equals_degree() {
        for n in [6, 8, 12] {
            let f = FieldContext::new(n).unwrap();
            for d in divisors_of_x_n_minus_one(n) {
                assert_eq!(kernel_elements(&f, d).len(), 1 << d.deg(), "n={n} f={d}");
            }
        }
    }

    fn orbit_brute_count(ctx: &FieldContext, f: Poly2) -> u64 {
        ctx.elements()
            .filter(|&g| ctx.is_field_generator(g) && ell_gamma(ctx, g).annihilator == f)
            .count() as u64
    }

    #[test]
    fn lattice_counts_match_enumeration() {
        for n in [4, 6, 8, 10] {
            let f = FieldContext::new(n).unwrap();
            for d in divisors_of_x_n_minus_one(n) {
                assert_eq!(count_exact_generators(n, d), orbit_brute_count(&f, d), "n={n} f={d}");
            }
        }
    }

    #[test]
    fn small_table_entries() {
        for (n, expected) in [(4, 3), (6, 4), (8, 5), (10, 6)] {
            let f = FieldContext::new(n).unwrap();
            let b = ell_n_brute(&f, false).unwrap();
            let l = ell_n_lattice(&f).unwrap();
            assert_eq!((b.ell_n, l.ell_n), (expected, expected));
            assert_eq!(b.witness, l.witness);
            assert_eq!(b.f_gamma, l.f_gamma);
        }
    }

    #[test]
    fn sufficient_conditions() {
        assert!(sufficient_condition(6).guaranteed);
        assert!(!sufficient_condition(12).guaranteed);
        let c = sufficient_condition(16);
        assert_eq!((c.guaranteed, c.implied_lower_bound), (true, Some(9)));
        // 2 is not primitive mod 7.
        assert!(!sufficient_condition(14).guaranteed);
        assert!(sufficient_condition(10).guaranteed);
    }
}
