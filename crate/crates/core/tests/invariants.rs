use proptest::prelude::*;

use quadbent_core::boolfun::{DiffReport, ImageReport, SpectralSummary, VectorialFn};
use quadbent_core::classify::{canonical_pair, Fingerprint, FingerprintVerdict};
use quadbent_core::ellmap::{ell_n_brute, ell_n_lattice};
use quadbent_core::gf2n::FieldIso;
use quadbent_core::padic::PadicContext;
use quadbent_core::quadratic::nonbent_set_from_exponents;
use quadbent_core::stickelberger::{nu_and_minimizers, wt2};
use quadbent_core::suite::alternative_modulus;
use quadbent_core::{FieldContext, FieldElem, ModulusSpec};

fn elem(ctx: &FieldContext, raw: u32) -> FieldElem {
    FieldElem(raw & (ctx.size() as u32 - 1))
}

/// An exponent pair in `[1, N-1]` with `d1 != d2`, or `None` if the draw
/// collapses.
fn pair(n: u32, a: u64, b: u64) -> Option<(u64, u64)> {
    let order = (1u64 << n) - 1;
    let (d1, d2) = (a % (order - 1) + 1, b % (order - 1) + 1);
    (d1 != d2).then_some((d1, d2))
}

fn quadratic_exponent(n: u32, i: u32, j: u32) -> u64 {
    let (i, j) = (i % n, j % n);
    (1u64 << i) + (1u64 << j)
}

proptest! {
    #[test]
    fn field_ring_axioms(n in 2u32..=30, a in any::<u32>(), b in any::<u32>(), c in any::<u32>()) {
        let ctx = FieldContext::new(n).unwrap();
        let (a, b, c) = (elem(&ctx, a), elem(&ctx, b), elem(&ctx, c));
        prop_assert_eq!(ctx.mul(a, b), ctx.mul(b, a));
        prop_assert_eq!(ctx.mul(ctx.mul(a, b), c), ctx.mul(a, ctx.mul(b, c)));
        prop_assert_eq!(ctx.mul(a, b + c), ctx.mul(a, b) + ctx.mul(a, c));
        if let Some(inv) = ctx.inv(a) {
            prop_assert_eq!(ctx.mul(a, inv), FieldElem::ONE);
        } else {
            prop_assert!(a.is_zero());
        }
    }

    #[test]
    fn frobenius_and_trace_are_additive(n in 2u32..=30, a in any::<u32>(), b in any::<u32>(), k in 0u32..30) {
        let ctx = FieldContext::new(n).unwrap();
        let (a, b) = (elem(&ctx, a), elem(&ctx, b));
        prop_assert_eq!(ctx.frobenius(a + b, k), ctx.frobenius(a, k) + ctx.frobenius(b, k));
        prop_assert_eq!(ctx.frobenius(a, n), a);
        prop_assert_eq!(ctx.trace(a + b), ctx.trace(a) ^ ctx.trace(b));
        prop_assert_eq!(ctx.trace(ctx.square(a)), ctx.trace(a));
        prop_assert_eq!(ctx.square(a), ctx.pow_u(a, 2));
    }

    #[test]
    fn two_adic_weight_of_negation(n in 2u32..=30, j in any::<u64>()) {
        let order = (1u64 << n) - 1;
        let j = j % (order - 1) + 1;
        prop_assert_eq!(wt2(j as i64, n) + wt2(-(j as i64), n), n);
        prop_assert_eq!(wt2((2 * j % order) as i64, n), wt2(j as i64, n));
    }

    #[test]
    fn canonical_pair_is_a_doubling_invariant(n in 3u32..=20, a in any::<u64>(), b in any::<u64>(), k in 0u32..20) {
        let order = (1u64 << n) - 1;
        let (d1, d2) = (a % order + 1, b % order + 1);
        let c = canonical_pair(n, d1, d2);
        let shift = |d: u64| ((d as u128 * (1u128 << (k % n))) % order as u128) as u64;
        prop_assert_eq!(canonical_pair(n, shift(d1), shift(d2)), c);
        prop_assert_eq!(canonical_pair(n, d2, d1), c);
        prop_assert_eq!(canonical_pair(n, c.0, c.1), c);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn walsh_rows_satisfy_parseval_and_row_sums(n in 2u32..=10, a in any::<u64>(), b in any::<u64>(), comp in any::<u32>()) {
        let Some((d1, d2)) = pair(n, a, b) else { return Ok(()) };
        let ctx = FieldContext::new(n).unwrap();
        let f = VectorialFn::binomial(&ctx, d1, d2).unwrap();
        let comp = elem(&ctx, comp);
        let row = f.walsh_row(comp);
        let size = ctx.size() as i64;
        prop_assert_eq!(row.iter().map(|&w| (w as i64) * (w as i64)).sum::<i64>(), size * size);
        // sum_b W(b) = 2^n (-1)^{Tr(c F(0))} and F(0) = 0.
        prop_assert_eq!(row.iter().map(|&w| w as i64).sum::<i64>(), size);
    }

    #[test]
    fn ddt_rows_are_even_and_sum_to_size(n in 2u32..=9, a in any::<u64>(), b in any::<u64>()) {
        let Some((d1, d2)) = pair(n, a, b) else { return Ok(()) };
        let ctx = FieldContext::new(n).unwrap();
        let f = VectorialFn::binomial(&ctx, d1, d2).unwrap();
        let d = DiffReport::compute(&f, false).unwrap();
        prop_assert!(d.all_entries_even && d.rows_sum_to_size);
        prop_assert_eq!(d.spectrum.values().sum::<u64>(), ((ctx.size() - 1) * ctx.size()) as u64);
    }

    #[test]
    fn kernel_rank_matches_walsh_bentness(m in 2u32..=5, i1 in 0u32..10, j1 in 0u32..10, i2 in 0u32..10, j2 in 0u32..10) {
        let n = 2 * m;
        let (d1, d2) = (quadratic_exponent(n, i1, j1), quadratic_exponent(n, i2, j2));
        prop_assume!(d1 != d2 && d1 < (1 << n) - 1 && d2 < (1 << n) - 1);
        let ctx = FieldContext::new(n).unwrap();
        let scan = nonbent_set_from_exponents(&ctx, &[d1, d2]).unwrap();
        let f = VectorialFn::binomial(&ctx, d1, d2).unwrap();
        let summary = SpectralSummary::compute(&f, false).unwrap();
        for a in ctx.elements() {
            prop_assert_eq!(scan.kernel_dims[a.0 as usize] == 0, summary.component(a).is_bent(n));
        }
    }

    #[test]
    fn fingerprint_is_invariant_under_doubling(n in 3u32..=8, a in any::<u64>(), b in any::<u64>()) {
        let Some((d1, d2)) = pair(n, a, b) else { return Ok(()) };
        let ctx = FieldContext::new(n).unwrap();
        let order = ctx.order() as u64;
        let (e1, e2) = (2 * d1 % order, 2 * d2 % order);
        let f = VectorialFn::binomial(&ctx, d1, d2).unwrap();
        let g = VectorialFn::binomial(&ctx, e1, e2).unwrap();
        let (ff, fg) = (Fingerprint::compute(&f, false).unwrap(), Fingerprint::compute(&g, false).unwrap());
        prop_assert_eq!(ff.compare(&fg), FingerprintVerdict::Consistent);
        prop_assert_eq!(ff.compare(&ff), FingerprintVerdict::Consistent);
        prop_assert_eq!(ff.compare(&fg), fg.compare(&ff));
    }

    #[test]
    fn invariants_do_not_depend_on_the_modulus(n in 3u32..=8, a in any::<u64>(), b in any::<u64>()) {
        let Some((d1, d2)) = pair(n, a, b) else { return Ok(()) };
        let x = FieldContext::new(n).unwrap();
        let Some(alt) = alternative_modulus(n, x.modulus()) else { return Ok(()) };
        let y = FieldContext::make(n, ModulusSpec::Explicit(alt.0)).unwrap();
        let f = VectorialFn::binomial(&x, d1, d2).unwrap();
        let g = VectorialFn::binomial(&y, d1, d2).unwrap();
        prop_assert_eq!(Fingerprint::compute(&f, false).unwrap(), Fingerprint::compute(&g, false).unwrap());
        let iso = FieldIso::new(&x, &y).unwrap();
        for v in x.elements() {
            prop_assert_eq!(iso.apply(f.eval(v)), g.eval(iso.apply(v)));
        }
        prop_assert_eq!(ImageReport::compute(&f).collisions, ImageReport::compute(&g).collisions);
    }

    #[test]
    fn nu_respects_its_lower_bound_and_doubling(n in 3u32..=7, a in any::<u64>(), b in any::<u64>()) {
        let Some((d1, d2)) = pair(n, a, b) else { return Ok(()) };
        let ctx = FieldContext::new(n).unwrap();
        let order = ctx.order() as u64;
        let rec = nu_and_minimizers(&ctx, d1, d2).unwrap();
        prop_assert!(rec.nu >= rec.lower_bound);
        prop_assert!(!rec.minimizers.is_empty());
        let doubled = nu_and_minimizers(&ctx, 2 * d1 % order, 2 * d2 % order).unwrap();
        prop_assert_eq!(doubled.nu, rec.nu);
        prop_assert_eq!(doubled.minimizers.len(), rec.minimizers.len());
    }

    #[test]
    fn gauss_sum_valuation_is_the_two_adic_weight(n in 2u32..=8, j in any::<u64>()) {
        let ctx = FieldContext::new(n).unwrap();
        let p = PadicContext::with_default_precision(&ctx).unwrap();
        let j = j % ctx.order() as u64;
        let g = p.gauss_sum(j);
        let w = wt2(j as i64, n);
        prop_assert!(g.conclusive);
        prop_assert!(p.congruent(&g.value, &p.from_int(1 << w), w + 1));
        if j != 0 {
            prop_assert_eq!(g.valuation, Some(w));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn orbit_dimension_methods_agree(n in 2u32..=14) {
        let ctx = FieldContext::new(n).unwrap();
        prop_assert_eq!(ell_n_brute(&ctx, false).unwrap().ell_n, ell_n_lattice(&ctx).unwrap().ell_n);
    }
}
