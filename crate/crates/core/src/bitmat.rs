// Dense GF(2) linear algebra on at most 32-dimensional vectors packed in u32.

use alloc::vec::Vec;

/// Incremental echelon basis that remembers, for each reduced vector, which
/// inserted vectors were combined to produce it.
#[derive(Debug, Default)]
pub(crate) struct Echelon {
    rows: Vec<(u32, u64)>,
    inserted: u32,
}

impl Echelon {
    pub(crate) fn new() -> Self {
        Self::default()
    }

    pub(crate) fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Inserts `v` without tracking combinations; returns whether it was
    /// independent. Unlike `insert`, any number of vectors may be added.
    pub(crate) fn insert_independent(&mut self, v: u32) -> bool {
        let mut v = v;
        for &(row, _) in &self.rows {
            let lead = 31 - row.leading_zeros();
            if (v >> lead) & 1 == 1 {
                v ^= row;
            }
        }
        if v == 0 {
            return false;
        }
        let lead = 31 - v.leading_zeros();
        let pos = self.rows.partition_point(|&(r, _)| 31 - r.leading_zeros() > lead);
        self.rows.insert(pos, (v, 0));
        true
    }

    /// Inserts `v`; at most 64 vectors in total. Returns `None` if it was independent of the previous
    /// vectors, otherwise the mask of inserted indices summing to zero
    /// (always including the index of `v`).
    pub(crate) fn insert(&mut self, v: u32) -> Option<u64> {
        let idx = self.inserted;
        self.inserted += 1;
        let mut v = v;
        let mut combo = 1u64 << idx;
        for &(row, row_combo) in &self.rows {
            let lead = 31 - row.leading_zeros();
            if (v >> lead) & 1 == 1 {
                v ^= row;
                combo ^= row_combo;
            }
        }
        if v == 0 {
            return Some(combo);
        }
        // Keep rows sorted by decreasing leading bit so one pass reduces fully.
        let lead = 31 - v.leading_zeros();
        let pos = self.rows.partition_point(|&(r, _)| 31 - r.leading_zeros() > lead);
        self.rows.insert(pos, (v, combo));
        None
    }
}

pub(crate) fn rank(vectors: &[u32]) -> usize {
    let mut e = Echelon::new();
    for &v in vectors {
        e.insert_independent(v);
    }
    e.rank()
}

/// Basis of `{x : sum_{j in x} columns[j] = 0}`.
pub(crate) fn kernel_basis(columns: &[u32]) -> Vec<u32> {
    let mut e = Echelon::new();
    columns.iter().filter_map(|&c| e.insert(c)).map(|m| m as u32).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_and_kernel() {
        let cols = [0b011, 0b101, 0b110, 0b000];
        assert_eq!(rank(&cols), 2);
        let ker = kernel_basis(&cols);
        assert_eq!(ker.len(), 2);
        for k in ker {
            let sum = (0..4).filter(|j| (k >> j) & 1 == 1).fold(0, |acc, j| acc ^ cols[j]);
            assert_eq!(sum, 0);
        }
    }

    #[test]
    fn rank_of_many_vectors() {
        // Every element of a 7-dimensional space: far more than 64 inserts.
        let span: Vec<u32> = (0..128u32).map(|x| x << 3).collect();
        assert_eq!(rank(&span), 7);
    }
}
