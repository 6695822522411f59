use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::{VectorialFn, DEFAULT_ANALYSIS_MAX_DEGREE};
use crate::gf2n::FieldElem;
use crate::par;
use crate::{Error, Result};

/// Difference distribution data `delta_{a,b} = #{x : F(x+a) + F(x) = b}`
/// over `a != 0`.
#[derive(Clone, Debug)]
pub struct DiffReport {
    pub delta: u32,
    /// `{x + y : x != y, F(x) = F(y)}`, i.e. the `a != 0` with `delta_{a,0} > 0`.
    pub delta_set: Vec<FieldElem>,
    /// `max_b delta_{a,b}`, indexed by `a` (entry 0 unused and set to `2^n`).
    pub row_max: Vec<u32>,
    pub is_apn: bool,
    /// Multiset of all entries `delta_{a,b}`, `a != 0`.
    pub spectrum: BTreeMap<u32, u64>,
    pub all_entries_even: bool,
    pub rows_sum_to_size: bool,
}

struct Row {
    max: u32,
    zero: u32,
    hist: BTreeMap<u32, u64>,
    even: bool,
    sum: u64,
}

impl DiffReport {
    pub fn compute(f: &VectorialFn<'_>, long_run: bool) -> Result<Self> {
        let ctx = f.ctx();
        let n = ctx.n();
        if n > DEFAULT_ANALYSIS_MAX_DEGREE && !long_run {
            return Err(Error::ResourceGate { what: "difference distribution table", n });
        }
        let size = ctx.size();
        let table = f.table();
        let rows = par::map_range(size - 1, |i| {
            let a = i + 1;
            let mut counts = alloc::vec![0u32; size];
            for x in 0..size {
                counts[(table[x ^ a].0 ^ table[x].0) as usize] += 1;
            }
            let mut hist = BTreeMap::new();
            for &c in &counts {
                *hist.entry(c).or_insert(0u64) += 1;
            }
            Row {
                max: counts.iter().copied().max().unwrap_or(0),
                zero: counts[0],
                even: counts.iter().all(|c| c % 2 == 0),
                sum: counts.iter().map(|&c| c as u64).sum(),
                hist,
            }
        });
        let mut spectrum = BTreeMap::new();
        for r in &rows {
            for (&k, &v) in &r.hist {
                *spectrum.entry(k).or_insert(0) += v;
            }
        }
        let delta = rows.iter().map(|r| r.max).max().unwrap_or(0);
        let mut row_max = Vec::with_capacity(size);
        row_max.push(size as u32);
        row_max.extend(rows.iter().map(|r| r.max));
        Ok(DiffReport {
            delta,
            delta_set: (1..size)
                .filter(|&a| rows[a - 1].zero > 0)
                .map(|a| FieldElem(a as u32))
                .collect(),
            row_max,
            is_apn: delta == 2,
            spectrum,
            all_entries_even: rows.iter().all(|r| r.even),
            rows_sum_to_size: rows.iter().all(|r| r.sum == size as u64),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2n::FieldContext;

    #[test]
    fn linear_map_has_full_uniformity() {
        let f = FieldContext::new(5).unwrap();
        let sq = VectorialFn::from_fn(&f, |x| f.square(x)).unwrap();
        let d = DiffReport::compute(&sq, false).unwrap();
        assert_eq!(d.delta, 32);
        assert!(d.delta_set.is_empty());
        assert!(d.all_entries_even && d.rows_sum_to_size);
    }
}
