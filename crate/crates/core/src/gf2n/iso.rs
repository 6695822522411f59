use alloc::vec::Vec;

use super::{FieldContext, FieldElem};
use crate::{Error, Result};

/// Explicit isomorphism between two models of GF(2^n), obtained by sending
/// the source generator `t` to the least root of the source modulus in the
/// target field.
#[derive(Clone, Debug)]
pub struct FieldIso {
    images: Vec<u32>,
}

impl FieldIso {
    pub fn new(src: &FieldContext, dst: &FieldContext) -> Result<Self> {
        if src.n() != dst.n() {
            return Err(Error::DegreeMismatch(src.n(), dst.n()));
        }
        let modulus = src.modulus();
        let root = dst
            .elements()
            .find(|&beta| {
                let mut acc = FieldElem::ZERO;
                for i in (0..=src.n()).rev() {
                    acc = dst.mul(acc, beta);
                    if modulus.coeff(i) {
                        acc += FieldElem::ONE;
                    }
                }
                acc.is_zero()
            })
            .expect("an irreducible polynomial of degree n splits in GF(2^n)");
        let mut images = Vec::with_capacity(src.n() as usize);
        let mut p = FieldElem::ONE;
        for _ in 0..src.n() {
            images.push(p.0);
            p = dst.mul(p, root);
        }
        Ok(FieldIso { images })
    }

    pub fn apply(&self, x: FieldElem) -> FieldElem {
        let mut acc = 0;
        let mut bits = x.0;
        while bits != 0 {
            acc ^= self.images[bits.trailing_zeros() as usize];
            bits &= bits - 1;
        }
        FieldElem(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly2::Poly2;

    fn second_modulus(n: u32) -> u64 {
        let first = FieldContext::new(n).unwrap().modulus().0;
        ((1u64 << n) | 1..)
            .step_by(2)
            .find(|&f| f != first && Poly2(f).is_irreducible())
            .unwrap()
    }

    #[test]
    fn iso_is_a_ring_homomorphism() {
        for n in [4, 6, 8] {
            let a = FieldContext::new(n).unwrap();
            let b = FieldContext::with_modulus(n, second_modulus(n)).unwrap();
            let iso = FieldIso::new(&a, &b).unwrap();
            let mut seen = alloc::vec![false; a.size()];
            for x in a.elements() {
                seen[iso.apply(x).0 as usize] = true;
                for y in a.elements().step_by(3) {
                    assert_eq!(iso.apply(a.mul(x, y)), b.mul(iso.apply(x), iso.apply(y)));
                    assert_eq!(iso.apply(x + y), iso.apply(x) + iso.apply(y));
                }
                assert_eq!(a.trace(x), b.trace(iso.apply(x)));
            }
            assert!(seen.iter().all(|&s| s));
        }
    }
}
