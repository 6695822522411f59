//! In-place fast Walsh–Hadamard transform over `(Z/2)^n`.

/// Replaces `buf[w]` by `sum_x buf[x] * (-1)^<w, x>`. The length must be a
/// power of two.
pub fn fwht(buf: &mut [i32]) {
    let len = buf.len();
    assert!(len.is_power_of_two(), "transform length must be a power of two");
    let mut h = 1;
    while h < len {
        for chunk in buf.chunks_exact_mut(2 * h) {
            let (lo, hi) = chunk.split_at_mut(h);
            for (x, y) in lo.iter_mut().zip(hi.iter_mut()) {
                let (a, b) = (*x, *y);
                *x = a + b;
                *y = a - b;
            }
        }
        h *= 2;
    }
}

/// Fills `buf` with `(-1)^f(x)` where `f(x)` is the parity of `values[x] & mask`.
pub fn fill_signs(buf: &mut [i32], values: impl Iterator<Item = u32>, mask: u32) {
    for (slot, v) in buf.iter_mut().zip(values) {
        *slot = 1 - 2 * ((v & mask).count_ones() & 1) as i32;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;
    use proptest::prelude::*;

    fn naive(input: &[i32]) -> Vec<i32> {
        (0..input.len())
            .map(|w| {
                input
                    .iter()
                    .enumerate()
                    .map(|(x, &v)| if (w & x).count_ones() % 2 == 0 { v } else { -v })
                    .sum()
            })
            .collect()
    }

    #[test]
    fn constant_input_concentrates_at_zero() {
        let mut buf = alloc::vec![1; 16];
        fwht(&mut buf);
        assert_eq!(buf[0], 16);
        assert!(buf[1..].iter().all(|&v| v == 0));
    }

    proptest! {
        #[test]
        fn matches_naive_sum(input in proptest::collection::vec(-3i32..4, 32)) {
            let mut buf = input.clone();
            fwht(&mut buf);
            prop_assert_eq!(buf, naive(&input));
        }

        #[test]
        fn involution_up_to_scale(input in proptest::collection::vec(-5i32..6, 64)) {
            let mut buf = input.clone();
            fwht(&mut buf);
            fwht(&mut buf);
            let scaled: Vec<i32> = input.iter().map(|v| v * 64).collect();
            prop_assert_eq!(buf, scaled);
        }
    }
}
