//! Polynomials over GF(2) packed into a `u64` (bit `i` is the coefficient of
//! `x^i`), so degrees up to 63 are representable.
//!
//! Products are formed in `u128` and must fit back into 64 bits; every
//! caller in this crate works with degrees at most 30.

use alloc::vec::Vec;
use core::fmt;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Poly2(pub u64);

#[allow(clippy::should_implement_trait)]
impl Poly2 {
    pub const ZERO: Poly2 = Poly2(0);
    pub const ONE: Poly2 = Poly2(1);
    pub const X: Poly2 = Poly2(2);

    /// `x^n - 1` (equal to `x^n + 1` in characteristic 2).
    pub fn x_pow_minus_one(n: u32) -> Poly2 {
        Poly2((1u64 << n) | 1)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(self) -> Option<u32> {
        if self.0 == 0 {
            None
        } else {
            Some(63 - self.0.leading_zeros())
        }
    }

    /// Degree with `deg 0 = 0`, convenient where zero cannot occur.
    pub fn deg(self) -> u32 {
        self.degree().unwrap_or(0)
    }

    pub fn coeff(self, i: u32) -> bool {
        i < 64 && (self.0 >> i) & 1 == 1
    }

    pub fn add(self, other: Poly2) -> Poly2 {
        Poly2(self.0 ^ other.0)
    }

    pub fn mul(self, other: Poly2) -> Poly2 {
        let wide = clmul64(self.0, other.0);
        assert!(wide >> 64 == 0, "GF(2)[x] product overflows 64 bits");
        Poly2(wide as u64)
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn div_rem(self, divisor: Poly2) -> (Poly2, Poly2) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let mut rem = self.0;
        let mut quot = 0u64;
        while rem != 0 {
            let dr = 63 - rem.leading_zeros();
            if dr < dd {
                break;
            }
            let shift = dr - dd;
            quot |= 1 << shift;
            rem ^= divisor.0 << shift;
        }
        (Poly2(quot), Poly2(rem))
    }

    pub fn rem(self, divisor: Poly2) -> Poly2 {
        self.div_rem(divisor).1
    }

    pub fn divides(self, other: Poly2) -> bool {
        other.rem(self).is_zero()
    }

    pub fn gcd(self, other: Poly2) -> Poly2 {
        let (mut a, mut b) = (self, other);
        while !b.is_zero() {
            let r = a.rem(b);
            a = b;
            b = r;
        }
        a
    }

    pub fn mul_mod(self, other: Poly2, modulus: Poly2) -> Poly2 {
        Poly2(rem_wide(clmul64(self.0, other.0), modulus))
    }

    pub fn pow(self, mut e: u32) -> Poly2 {
        let mut acc = Poly2::ONE;
        let mut base = self;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(base);
            }
        }
        acc
    }

    /// `self^(2^k) mod modulus`.
    pub fn frobenius_mod(self, k: u32, modulus: Poly2) -> Poly2 {
        let mut p = self.rem(modulus);
        for _ in 0..k {
            p = p.mul_mod(p, modulus);
        }
        p
    }

    /// Ben-Or irreducibility test.
    pub fn is_irreducible(self) -> bool {
        let d = match self.degree() {
            None | Some(0) => return false,
            Some(d) => d,
        };
        if d == 1 {
            return true;
        }
        let mut h = Poly2::X;
        for _ in 1..=d / 2 {
            h = h.mul_mod(h, self);
            if self.gcd(h.add(Poly2::X)) != Poly2::ONE {
                return false;
            }
        }
        true
    }

    /// Irreducible factors of a square-free polynomial, sorted increasingly.
    ///
    /// Distinct-degree splitting followed by equal-degree splitting with the
    /// trace map `a + a^2 + ... + a^(2^(d-1))`; candidate `a` values are tried
    /// in increasing order so the result is deterministic.
    pub fn factor_squarefree(self) -> Vec<Poly2> {
        let mut out = Vec::new();
        let mut rest = self;
        if rest.deg() == 0 {
            return out;
        }
        let mut h = Poly2::X.rem(rest);
        let mut d = 1;
        while rest.deg() >= 2 * d {
            h = h.mul_mod(h, rest);
            let g = rest.gcd(h.add(Poly2::X));
            if g != Poly2::ONE {
                equal_degree_split(g, d, &mut out);
                rest = rest.div_rem(g).0;
                h = h.rem(rest);
            }
            d += 1;
        }
        if rest.deg() > 0 {
            out.push(rest);
        }
        out.sort();
        out
    }
}

fn equal_degree_split(g: Poly2, d: u32, out: &mut Vec<Poly2>) {
    if g.deg() == d {
        out.push(g);
        return;
    }
    let dg = g.deg();
    for a in 2u64..(1u64 << dg) {
        let a = Poly2(a);
        let mut t = a;
        let mut acc = a;
        for _ in 1..d {
            t = t.mul_mod(t, g);
            acc = acc.add(t);
        }
        let u = g.gcd(acc);
        if u.deg() > 0 && u.deg() < dg {
            equal_degree_split(u, d, out);
            equal_degree_split(g.div_rem(u).0, d, out);
            return;
        }
    }
    unreachable!("equal-degree splitting found no separating element");
}

pub(crate) fn clmul64(a: u64, b: u64) -> u128 {
    let a = a as u128;
    let mut b = b;
    let mut acc = 0u128;
    while b != 0 {
        let i = b.trailing_zeros();
        acc ^= a << i;
        b &= b - 1;
    }
    acc
}

fn rem_wide(mut x: u128, modulus: Poly2) -> u64 {
    let dm = modulus.degree().expect("zero modulus");
    let m = modulus.0 as u128;
    while x != 0 {
        let dx = 127 - x.leading_zeros();
        if dx < dm {
            break;
        }
        x ^= m << (dx - dm);
    }
    x as u64
}

/// The numerically least irreducible polynomial of exact degree `n`.
pub fn least_irreducible(n: u32) -> Poly2 {
    assert!((1..=62).contains(&n));
    let mut f = (1u64 << n) | 1;
    if n == 1 {
        return Poly2(2);
    }
    loop {
        if Poly2(f).is_irreducible() {
            return Poly2(f);
        }
        f += 2;
    }
}

impl fmt::Debug for Poly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Poly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            return f.write_str("0");
        }
        let mut first = true;
        for i in (0..64).rev() {
            if self.coeff(i) {
                if !first {
                    f.write_str("+")?;
                }
                first = false;
                match i {
                    0 => f.write_str("1")?,
                    1 => f.write_str("x")?,
                    _ => write!(f, "x^{i}")?,
                }
            }
        }
        Ok(())
    }
}

impl fmt::LowerHex for Poly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::LowerHex::fmt(&self.0, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn trial_division_irreducible(f: Poly2) -> bool {
        let d = f.deg();
        d >= 1 && (2u64..(1 << (d / 2 + 1))).all(|g| Poly2(g).deg() > d / 2 || !Poly2(g).divides(f))
    }

    #[test]
    fn irreducibility_matches_trial_division() {
        for f in 2u64..(1 << 11) {
            assert_eq!(Poly2(f).is_irreducible(), trial_division_irreducible(Poly2(f)), "{f:#x}");
        }
    }

    #[test]
    fn known_factorizations() {
        // x^4 + x^2 + 1 = (x^2 + x + 1)^2
        assert!(!Poly2(0b10101).is_irreducible());
        assert_eq!(Poly2(0b111).pow(2), Poly2(0b10101));
        let f = Poly2::x_pow_minus_one(7).factor_squarefree();
        assert_eq!(f, [Poly2(0b11), Poly2(0b1011), Poly2(0b1101)]);
        let f = Poly2::x_pow_minus_one(15).factor_squarefree();
        assert_eq!(f.len(), 5);
        assert_eq!(f.iter().fold(Poly2::ONE, |acc, p| acc.mul(*p)), Poly2::x_pow_minus_one(15));
    }

    #[test]
    fn factorization_of_x_b_minus_one() {
        for b in (1u32..=29).step_by(2) {
            let fs = Poly2::x_pow_minus_one(b).factor_squarefree();
            assert!(fs.iter().all(|p| p.is_irreducible()));
            let prod = fs.iter().fold(Poly2::ONE, |acc, p| acc.mul(*p));
            assert_eq!(prod, Poly2::x_pow_minus_one(b), "b={b}");
        }
    }

    #[test]
    fn display() {
        assert_eq!(alloc::format!("{}", Poly2(0b1011)), "x^3+x+1");
        assert_eq!(alloc::format!("{}", Poly2::ZERO), "0");
    }

    proptest! {
        #[test]
        fn div_rem_reconstructs(a in 0u64..(1 << 30), b in 1u64..(1 << 20)) {
            let (q, r) = Poly2(a).div_rem(Poly2(b));
            prop_assert_eq!(q.mul(Poly2(b)).add(r), Poly2(a));
            prop_assert!(r.is_zero() || r.deg() < Poly2(b).deg());
        }

        #[test]
        fn gcd_divides_both(a in 1u64..(1 << 24), b in 1u64..(1 << 24)) {
            let g = Poly2(a).gcd(Poly2(b));
            prop_assert!(g.divides(Poly2(a)) && g.divides(Poly2(b)));
        }
    }
}
