use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::{VectorialFn, DEFAULT_ANALYSIS_MAX_DEGREE};
use crate::gf2n::FieldElem;
use crate::par;
use crate::{Error, Result};

/// Walsh data of a single component `F_a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentStats {
    pub max_abs: u32,
    /// `k` when every Walsh value lies in `{0, +-2^((n+k)/2)}`.
    pub plateau: Option<u32>,
    pub walsh_zero: i32,
    /// `nu(F_a) = 2^-n * sum_b W_{F_a}(b)^4`.
    pub sos: u128,
    /// Distinct `|W|` values and their multiplicities.
    pub abs_values: Vec<(u32, u32)>,
}

impl ComponentStats {
    fn from_raw(n: u32, raw: &[i32]) -> Self {
        let mut abs: Vec<u32> = raw.iter().map(|w| w.unsigned_abs()).collect();
        let sos = abs.iter().map(|&w| (w as u128).pow(4)).sum::<u128>() >> n;
        abs.sort_unstable();
        let mut abs_values: Vec<(u32, u32)> = Vec::new();
        for w in abs {
            match abs_values.last_mut() {
                Some((v, c)) if *v == w => *c += 1,
                _ => abs_values.push((w, 1)),
            }
        }
        let max_abs = abs_values.last().map_or(0, |p| p.0);
        let nonzero: Vec<u32> = abs_values.iter().map(|p| p.0).filter(|&v| v != 0).collect();
        let plateau = match nonzero.as_slice() {
            [v] if v.is_power_of_two() && 2 * v.trailing_zeros() >= n => Some(2 * v.trailing_zeros() - n),
            _ => None,
        };
        ComponentStats { max_abs, plateau, walsh_zero: raw[0], sos, abs_values }
    }

    pub fn is_bent(&self, n: u32) -> bool {
        n % 2 == 0 && self.abs_values.len() == 1 && self.max_abs == 1 << (n / 2)
    }
}

#[derive(Clone, Debug)]
pub struct SpectralSummary {
    n: u32,
    components: Vec<ComponentStats>,
    sf: Option<Vec<FieldElem>>,
    sf_equals_subfield: Option<bool>,
    max_abs_walsh: u32,
    t: Option<u32>,
    max_sq_subfield: Option<u64>,
    abs_histogram: BTreeMap<u32, u64>,
}

impl SpectralSummary {
    /// Full spectral data of every component. Degrees above 16 require
    /// `long_run`.
    pub fn compute(f: &VectorialFn<'_>, long_run: bool) -> Result<Self> {
        let ctx = f.ctx();
        let n = ctx.n();
        if n > DEFAULT_ANALYSIS_MAX_DEGREE && !long_run {
            return Err(Error::ResourceGate { what: "full Walsh spectrum", n });
        }
        let components = par::map_range(ctx.size(), |a| {
            let mut buf = Vec::new();
            f.raw_walsh_into(FieldElem(a as u32), &mut buf);
            ComponentStats::from_raw(n, &buf)
        });
        let sf = (n % 2 == 0).then(|| {
            ctx.elements().filter(|a| !components[a.0 as usize].is_bent(n)).collect::<Vec<_>>()
        });
        let subfield = ctx.m().map(|m| ctx.subfield_elements(m));
        let sf_equals_subfield = match (&sf, &subfield) {
            (Some(s), Some(sub)) => Some(s == sub),
            _ => None,
        };
        let max_abs_walsh = components[1..].iter().map(|c| c.max_abs).max().unwrap_or(0);
        let (t, max_sq_subfield) = match &subfield {
            Some(sub) => {
                let nonzero = sub.iter().filter(|u| !u.is_zero());
                let t = nonzero.clone().filter(|u| components[u.0 as usize].walsh_zero != 0).count() as u32;
                let mx = nonzero.map(|u| (components[u.0 as usize].max_abs as u64).pow(2)).max().unwrap_or(0);
                (Some(t), Some(mx))
            }
            None => (None, None),
        };
        let mut abs_histogram = BTreeMap::new();
        for c in &components[1..] {
            for &(v, k) in &c.abs_values {
                *abs_histogram.entry(v).or_insert(0u64) += k as u64;
            }
        }
        Ok(SpectralSummary {
            n,
            components,
            sf,
            sf_equals_subfield,
            max_abs_walsh,
            t,
            max_sq_subfield,
            abs_histogram,
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Non-bent components, sorted; `None` for odd `n` (no bent components
    /// exist there, so the classification is not meaningful).
    pub fn sf(&self) -> Option<&[FieldElem]> {
        self.sf.as_deref()
    }

    pub fn sf_size(&self) -> Option<usize> {
        self.sf.as_ref().map(Vec::len)
    }

    /// `#S_F = 2^m`.
    pub fn is_maximal(&self) -> bool {
        self.sf_size() == Some(1 << (self.n / 2))
    }

    /// `S_F = GF(2^m)` as sets.
    pub fn sf_equals_subfield(&self) -> Option<bool> {
        self.sf_equals_subfield
    }

    pub fn component(&self, a: FieldElem) -> &ComponentStats {
        &self.components[a.0 as usize]
    }

    pub fn components(&self) -> &[ComponentStats] {
        &self.components
    }

    /// `max_{a != 0, b} |W_{F_a}(b)|`.
    pub fn max_abs_walsh(&self) -> u32 {
        self.max_abs_walsh
    }

    /// `N_F = 2^(n-1) - max|W| / 2`.
    pub fn nonlinearity(&self) -> u64 {
        (1u64 << (self.n - 1)) - self.max_abs_walsh as u64 / 2
    }

    /// `T = #{u in GF(2^m)^* : W_{F_u}(0) != 0}`.
    pub fn t(&self) -> Option<u32> {
        self.t
    }

    /// `max_{u in GF(2^m)^*, v} W_{F_u}(v)^2`.
    pub fn max_sq_subfield(&self) -> Option<u64> {
        self.max_sq_subfield
    }

    pub fn plateau(&self, a: FieldElem) -> Option<u32> {
        self.components[a.0 as usize].plateau
    }

    /// Every nonzero component is plateaued.
    pub fn is_plateaued_fn(&self) -> bool {
        self.components[1..].iter().all(|c| c.plateau.is_some())
    }

    pub fn sos(&self, a: FieldElem) -> u128 {
        self.components[a.0 as usize].sos
    }

    /// `sum_{u != 0} nu(F_u)`.
    pub fn sos_total(&self) -> u128 {
        self.components[1..].iter().map(|c| c.sos).sum()
    }

    /// Multiset of `|W_{F_a}(b)|` over `a != 0` and all `b`.
    pub fn abs_histogram(&self) -> &BTreeMap<u32, u64> {
        &self.abs_histogram
    }

    /// Sorted `(plateau amount, multiplicity)` over nonzero components, with
    /// `None` counting the non-plateaued ones.
    pub fn plateau_multiset(&self) -> Vec<(Option<u32>, u64)> {
        let mut m: BTreeMap<Option<u32>, u64> = BTreeMap::new();
        for c in &self.components[1..] {
            *m.entry(c.plateau).or_insert(0) += 1;
        }
        m.into_iter().collect()
    }
}

/// Number of non-bent components, or `None` as soon as it exceeds `limit`.
/// Used for cheap maximality screening.
pub fn count_nonbent_up_to(f: &VectorialFn<'_>, limit: usize) -> Option<usize> {
    let ctx = f.ctx();
    let n = ctx.n();
    par::count_up_to(ctx.size(), limit, |a| {
        let mut buf = Vec::new();
        f.raw_walsh_into(FieldElem(a as u32), &mut buf);
        let bent = 1i32 << (n / 2);
        n % 2 == 1 || buf.iter().any(|w| w.abs() != bent)
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubspaceCheck {
    pub is_subspace: bool,
    /// Elements of the set that are linearly independent and span it when
    /// `is_subspace` holds.
    pub basis: Vec<FieldElem>,
}

/// Whether `set` is an F_2-subspace (contains 0 and is closed under +).
pub fn check_sf_subspace(set: &[FieldElem]) -> SubspaceCheck {
    let mut elems = set.to_vec();
    elems.sort();
    elems.dedup();
    let mut echelon = crate::bitmat::Echelon::new();
    let mut basis = Vec::new();
    for &x in &elems {
        if echelon.insert_independent(x.0) {
            basis.push(x);
        }
    }
    let is_subspace = elems.first() == Some(&FieldElem::ZERO)
        && basis.len() < 64
        && elems.len() == 1usize << basis.len();
    SubspaceCheck { is_subspace, basis }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2n::FieldContext;

    #[test]
    fn subspace_check_examples() {
        let one = check_sf_subspace(&[FieldElem(0), FieldElem(1)]);
        assert!(one.is_subspace);
        assert_eq!(one.basis.len(), 1);
        let f = FieldContext::new(4).unwrap();
        let a = f.primitive();
        let s = [FieldElem::ZERO, a, f.square(a)];
        assert!(!check_sf_subspace(&s).is_subspace);
        assert!(!check_sf_subspace(&[FieldElem(1), FieldElem(2), FieldElem(3)]).is_subspace);
    }

    #[test]
    fn zero_component_is_trivial() {
        let f = FieldContext::new(6).unwrap();
        let g = VectorialFn::binomial(&f, 3, 24).unwrap();
        let s = SpectralSummary::compute(&g, false).unwrap();
        let c0 = s.component(FieldElem::ZERO);
        assert_eq!((c0.max_abs, c0.plateau, c0.walsh_zero), (64, Some(6), 64));
        assert_eq!(s.sf().unwrap()[0], FieldElem::ZERO);
    }

    #[test]
    fn plateau_detection() {
        let raw = [8, -8, 0, 0, 8, 0, 0, -8, 0, 0, 0, 0, 0, 0, 0, 0];
        assert_eq!(ComponentStats::from_raw(4, &raw).plateau, Some(2));
        let raw = [4; 16];
        assert_eq!(ComponentStats::from_raw(4, &raw).plateau, Some(0));
        let raw = [6, 2, 2, 2, -2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2];
        assert_eq!(ComponentStats::from_raw(4, &raw).plateau, None);
    }

    #[test]
    fn odd_degree_has_no_bent_classification() {
        let f = FieldContext::new(5).unwrap();
        let g = VectorialFn::monomial(&f, 3).unwrap();
        let s = SpectralSummary::compute(&g, false).unwrap();
        assert!(s.sf().is_none());
        assert!(!s.is_maximal());
        assert_eq!(s.max_abs_walsh(), 8);
    }

    #[test]
    fn large_degree_is_gated() {
        let f = FieldContext::new(18).unwrap();
        let g = VectorialFn::monomial(&f, 3).unwrap();
        assert!(matches!(SpectralSummary::compute(&g, false), Err(Error::ResourceGate { .. })));
    }
}
