//! Arithmetic in GF(2^n) with elements packed as polynomial-basis bit
//! vectors.
//!
//! For `n <= 20` the context carries log/antilog tables over a fixed
//! primitive element and a table for the trace dual map; larger fields use
//! carry-less multiplication with reduction by the sparse tail of the
//! modulus. A [`FieldContext`] never changes after construction.

mod iso;
pub mod registry;

use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign};

use crate::arith;
use crate::poly2::Poly2;
use crate::{Error, Result};

pub use iso::FieldIso;

pub const MIN_DEGREE: u32 = 2;
pub const MAX_DEGREE: u32 = 30;
/// Largest degree for which log/antilog tables are built.
pub const TABLE_MAX_DEGREE: u32 = 20;

/// An element of GF(2^n): bit `i` is the coefficient of `t^i`, where `t` is
/// a root of the context's modulus.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FieldElem(pub u32);

impl FieldElem {
    pub const ZERO: FieldElem = FieldElem(0);
    pub const ONE: FieldElem = FieldElem(1);

    pub fn value(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

// Addition in characteristic 2 is XOR.
#[allow(clippy::suspicious_arithmetic_impl)]
impl Add for FieldElem {
    type Output = FieldElem;
    fn add(self, rhs: FieldElem) -> FieldElem {
        FieldElem(self.0 ^ rhs.0)
    }
}

#[allow(clippy::suspicious_op_assign_impl)]
impl AddAssign for FieldElem {
    fn add_assign(&mut self, rhs: FieldElem) {
        self.0 ^= rhs.0;
    }
}

impl fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:#x}", self.0)
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:#x}", self.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModulusSpec {
    /// The registry entry: the least irreducible polynomial of degree `n`.
    Default,
    /// An explicit degree-`n` polynomial, bit `i` = coefficient of `x^i`.
    Explicit(u64),
}

#[derive(Clone)]
struct LogTables {
    log: Vec<u32>,
    // exp[i] = alpha^i for 0 <= i < 2N, so sums of two logs need no reduction.
    exp: Vec<u32>,
}

#[derive(Clone)]
pub struct FieldContext {
    n: u32,
    modulus: Poly2,
    tail: u64,
    mask: u32,
    order: u32,
    trace_mask: u32,
    dual_basis: Vec<u32>,
    primitive: FieldElem,
    tables: Option<LogTables>,
    dual_table: Option<Vec<u32>>,
}

impl fmt::Debug for FieldContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldContext")
            .field("n", &self.n)
            .field("modulus", &format_args!("{:#x}", self.modulus.0))
            .field("order", &self.order)
            .field("primitive", &self.primitive)
            .field("tables", &self.tables.is_some())
            .finish()
    }
}

impl FieldContext {
    /// Field with the registry modulus for `n`.
    pub fn new(n: u32) -> Result<Self> {
        Self::make(n, ModulusSpec::Default)
    }

    pub fn with_modulus(n: u32, modulus: u64) -> Result<Self> {
        Self::make(n, ModulusSpec::Explicit(modulus))
    }

    pub fn make(n: u32, spec: ModulusSpec) -> Result<Self> {
        if !(MIN_DEGREE..=MAX_DEGREE).contains(&n) {
            return Err(Error::DegreeOutOfRange(n));
        }
        let modulus = match spec {
            ModulusSpec::Default => registry::default_modulus(n)?,
            ModulusSpec::Explicit(bits) => Poly2(bits),
        };
        if modulus.degree() != Some(n) {
            return Err(Error::WrongModulusDegree { n, modulus: modulus.0 });
        }
        if !modulus.is_irreducible() {
            return Err(Error::ReducibleModulus(modulus.0));
        }
        let mask = ((1u64 << n) - 1) as u32;
        let mut ctx = FieldContext {
            n,
            modulus,
            tail: modulus.0 & mask as u64,
            mask,
            order: mask,
            trace_mask: 0,
            dual_basis: Vec::new(),
            primitive: FieldElem::ONE,
            tables: None,
            dual_table: None,
        };
        // Tr(t^k) for k < 2n - 1 determines both the trace mask and the dual map.
        let tr_pow: Vec<u32> = (0..2 * n - 1)
            .map(|k| {
                let x = ctx.reduce(1u64 << k);
                let mut acc = 0u32;
                let mut y = x;
                for _ in 0..n {
                    acc ^= y;
                    y = ctx.mul_raw(y, y);
                }
                debug_assert!(acc <= 1);
                acc
            })
            .collect();
        ctx.trace_mask = (0..n).fold(0, |m, i| m | (tr_pow[i as usize] << i));
        ctx.dual_basis = (0..n)
            .map(|j| (0..n).fold(0, |m, i| m | (tr_pow[(i + j) as usize] << i)))
            .collect();
        ctx.primitive = ctx.find_primitive();
        if n <= TABLE_MAX_DEGREE {
            ctx.build_tables();
        }
        Ok(ctx)
    }

    fn find_primitive(&self) -> FieldElem {
        let primes = arith::prime_factors(self.order as u64);
        (1..=self.mask)
            .map(FieldElem)
            .find(|&g| {
                self.order == 1
                    || primes.iter().all(|&p| self.pow_raw(g.0, self.order as u64 / p) != 1)
            })
            .expect("the multiplicative group is cyclic")
    }

    fn build_tables(&mut self) {
        let order = self.order as usize;
        let mut exp = Vec::with_capacity(2 * order);
        let mut log = alloc::vec![0u32; order + 1];
        let mut x = 1u32;
        for i in 0..order {
            exp.push(x);
            log[x as usize] = i as u32;
            x = self.mul_raw(x, self.primitive.0);
        }
        debug_assert_eq!(x, 1);
        exp.extend_from_within(0..order);
        let mut dual = alloc::vec![0u32; order + 1];
        for b in 1..=order {
            dual[b] = dual[b & (b - 1)] ^ self.dual_basis[b.trailing_zeros() as usize];
        }
        self.tables = Some(LogTables { log, exp });
        self.dual_table = Some(dual);
    }

    /// Corrupts one antilog entry. Only for fault-injection tests of the
    /// verification suites; the result is no longer a field.
    #[doc(hidden)]
    pub fn with_corrupted_table(mut self, index: usize) -> Self {
        if let Some(t) = self.tables.as_mut() {
            let order = self.order as usize;
            let i = index % order;
            let bad = t.exp[i] ^ 1;
            t.exp[i] = bad;
            t.exp[i + order] = bad;
        }
        self
    }

    /// Log/antilog tables agree with carry-less multiplication: `alpha^log(x)
    /// = x` for all `x`, and table products match on a fixed sample (all
    /// pairs up to `n = 10`). Always true without tables.
    pub fn tables_consistent(&self) -> bool {
        let Some(t) = &self.tables else { return true };
        let order = self.order as usize;
        let roundtrip = (1..=order).all(|x| t.exp[t.log[x] as usize] as usize == x)
            && (0..order).all(|i| t.exp[i] == t.exp[i + order] && t.exp[i] == self.pow_raw(self.primitive.0, i as u64));
        let step = if self.n <= 10 { 1 } else { order / 1024 + 1 };
        roundtrip
            && (1..=order).step_by(step).all(|a| {
                (1..=order)
                    .step_by(step)
                    .all(|b| self.mul(FieldElem(a as u32), FieldElem(b as u32)).0 == self.mul_raw(a as u32, b as u32))
            })
    }

    fn reduce(&self, mut x: u64) -> u32 {
        let n = self.n;
        while x >> n != 0 {
            let hi = x >> n;
            x &= self.mask as u64;
            let mut tail = self.tail;
            while tail != 0 {
                x ^= hi << tail.trailing_zeros();
                tail &= tail - 1;
            }
        }
        x as u32
    }

    fn mul_raw(&self, a: u32, b: u32) -> u32 {
        let (a64, mut b) = (a as u64, b);
        let mut acc = 0u64;
        while b != 0 {
            acc ^= a64 << b.trailing_zeros();
            b &= b - 1;
        }
        self.reduce(acc)
    }

    fn square_raw(&self, a: u32) -> u32 {
        self.reduce(spread_bits(a))
    }

    fn pow_raw(&self, a: u32, mut e: u64) -> u32 {
        let mut acc = 1u32;
        let mut base = a;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_raw(acc, base);
            }
            e >>= 1;
            if e > 0 {
                base = self.square_raw(base);
            }
        }
        acc
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// `m = n / 2` for even `n`.
    pub fn m(&self) -> Option<u32> {
        (self.n % 2 == 0).then_some(self.n / 2)
    }

    /// Order `N = 2^n - 1` of the multiplicative group.
    pub fn order(&self) -> u32 {
        self.order
    }

    /// Number of field elements, `2^n`.
    pub fn size(&self) -> usize {
        1usize << self.n
    }

    pub fn modulus(&self) -> Poly2 {
        self.modulus
    }

    /// The least primitive element; the fixed generator `alpha` of GF(2^n)*.
    pub fn primitive(&self) -> FieldElem {
        self.primitive
    }

    pub fn has_tables(&self) -> bool {
        self.tables.is_some()
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElem> {
        (0..=self.mask).map(FieldElem)
    }

    pub fn contains(&self, x: FieldElem) -> bool {
        x.0 <= self.mask
    }

    pub fn mul(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        if a.0 == 0 || b.0 == 0 {
            return FieldElem::ZERO;
        }
        match &self.tables {
            Some(t) => FieldElem(t.exp[(t.log[a.0 as usize] + t.log[b.0 as usize]) as usize]),
            None => FieldElem(self.mul_raw(a.0, b.0)),
        }
    }

    pub fn square(&self, a: FieldElem) -> FieldElem {
        match &self.tables {
            Some(_) => self.mul(a, a),
            None => FieldElem(self.square_raw(a.0)),
        }
    }

    /// `alpha^i` for the fixed primitive element.
    pub fn exp(&self, i: u64) -> FieldElem {
        let i = i % self.order as u64;
        match &self.tables {
            Some(t) => FieldElem(t.exp[i as usize]),
            None => FieldElem(self.pow_raw(self.primitive.0, i)),
        }
    }

    /// Discrete logarithm to base `alpha`; `None` for zero. Without tables
    /// this is a linear scan, so it is only meant for small fields.
    pub fn log(&self, a: FieldElem) -> Option<u32> {
        if a.0 == 0 {
            return None;
        }
        match &self.tables {
            Some(t) => Some(t.log[a.0 as usize]),
            None => {
                let mut x = 1u32;
                for i in 0..self.order {
                    if x == a.0 {
                        return Some(i);
                    }
                    x = self.mul_raw(x, self.primitive.0);
                }
                None
            }
        }
    }

    /// `x^e` for a non-negative exponent, with `0^0 = 1`.
    pub fn pow_u(&self, x: FieldElem, e: u64) -> FieldElem {
        if x.0 == 0 {
            return if e == 0 { FieldElem::ONE } else { FieldElem::ZERO };
        }
        let e = e % self.order as u64;
        match &self.tables {
            Some(t) => {
                let l = t.log[x.0 as usize] as u64;
                FieldElem(t.exp[((l * e) % self.order as u64) as usize])
            }
            None => FieldElem(self.pow_raw(x.0, e)),
        }
    }

    /// `x^e` for any integer exponent; negative exponents of zero fail.
    pub fn pow(&self, x: FieldElem, e: i64) -> Result<FieldElem> {
        if e >= 0 {
            return Ok(self.pow_u(x, e as u64));
        }
        if x.0 == 0 {
            return Err(Error::ZeroToNegativePower);
        }
        Ok(self.pow_u(x, arith::residue(e, self.order as u64)))
    }

    pub fn inv(&self, x: FieldElem) -> Option<FieldElem> {
        (x.0 != 0).then(|| self.pow_u(x, self.order as u64 - 1))
    }

    /// `x^(2^k)`, the k-th power of the Frobenius.
    pub fn frobenius(&self, x: FieldElem, k: u32) -> FieldElem {
        let k = k % self.n;
        if x.0 == 0 || k == 0 {
            return x;
        }
        match &self.tables {
            Some(t) => {
                let l = t.log[x.0 as usize] as u64;
                FieldElem(t.exp[((l << k) % self.order as u64) as usize])
            }
            None => {
                let mut y = x.0;
                for _ in 0..k {
                    y = self.square_raw(y);
                }
                FieldElem(y)
            }
        }
    }

    /// Absolute trace `Tr(x) = sum_{i<n} x^(2^i)` in {0, 1}.
    pub fn trace(&self, x: FieldElem) -> u32 {
        (x.0 & self.trace_mask).count_ones() & 1
    }

    /// Bit mask of the trace (`Tr(x)` = parity of `x & mask`).
    pub fn trace_mask(&self) -> u32 {
        self.trace_mask
    }

    /// The vector `w` with `Tr(b * x) = <w, x>` for every `x`.
    pub fn trace_dual(&self, b: FieldElem) -> u32 {
        match &self.dual_table {
            Some(t) => t[b.0 as usize],
            None => {
                let mut acc = 0;
                let mut bits = b.0;
                while bits != 0 {
                    acc ^= self.dual_basis[bits.trailing_zeros() as usize];
                    bits &= bits - 1;
                }
                acc
            }
        }
    }

    /// Relative trace from GF(2^n) down to GF(2^k), for `k | n`.
    pub fn relative_trace(&self, x: FieldElem, k: u32) -> FieldElem {
        debug_assert!(k > 0 && self.n % k == 0);
        let mut acc = FieldElem::ZERO;
        let mut y = x;
        for _ in 0..self.n / k {
            acc += y;
            y = self.frobenius(y, k);
        }
        acc
    }

    /// Whether `x` lies in GF(2^gcd(k, n)), i.e. `x^(2^k) = x`.
    pub fn in_subfield(&self, x: FieldElem, k: u32) -> bool {
        self.frobenius(x, k) == x
    }

    /// Elements of GF(2^k) for `k | n`, in increasing order.
    pub fn subfield_elements(&self, k: u32) -> Vec<FieldElem> {
        assert!(k > 0 && self.n % k == 0, "GF(2^{k}) is not a subfield of GF(2^{})", self.n);
        let sub_order = (1u64 << k) - 1;
        let step = self.order as u64 / sub_order;
        let mut out: Vec<FieldElem> = core::iter::once(FieldElem::ZERO)
            .chain((0..sub_order).map(|i| self.exp(i * step)))
            .collect();
        out.sort();
        out
    }

    /// True iff `gamma` lies in no maximal proper subfield, i.e.
    /// `GF(2)(gamma) = GF(2^n)`.
    pub fn is_field_generator(&self, gamma: FieldElem) -> bool {
        arith::prime_factors(self.n as u64)
            .into_iter()
            .all(|p| self.frobenius(gamma, self.n / p as u32) != gamma)
    }

    /// The full power map `x -> x^d` as a table indexed by `x`.
    pub fn power_map(&self, d: u64) -> Vec<FieldElem> {
        let size = self.size();
        let order = self.order as u64;
        let mut out = alloc::vec![FieldElem::ZERO; size];
        out[0] = if d == 0 { FieldElem::ONE } else { FieldElem::ZERO };
        let step = d % order;
        match &self.tables {
            Some(t) => {
                let mut k = 0u64;
                for i in 0..order as usize {
                    out[t.exp[i] as usize] = FieldElem(t.exp[k as usize]);
                    k += step;
                    if k >= order {
                        k -= order;
                    }
                }
            }
            None => {
                let ad = self.pow_raw(self.primitive.0, step);
                let (mut x, mut y) = (1u32, 1u32);
                for _ in 0..order {
                    out[x as usize] = FieldElem(y);
                    x = self.mul_raw(x, self.primitive.0);
                    y = self.mul_raw(y, ad);
                }
            }
        }
        out
    }
}

// Interleaves zero bits: the square of a GF(2)[x] polynomial.
fn spread_bits(a: u32) -> u64 {
    let mut x = a as u64;
    x = (x | (x << 16)) & 0x0000_FFFF_0000_FFFF;
    x = (x | (x << 8)) & 0x00FF_00FF_00FF_00FF;
    x = (x | (x << 4)) & 0x0F0F_0F0F_0F0F_0F0F;
    x = (x | (x << 2)) & 0x3333_3333_3333_3333;
    x = (x | (x << 1)) & 0x5555_5555_5555_5555;
    x
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_contexts() {
        let f4 = FieldContext::new(4).unwrap();
        assert_eq!((f4.order(), f4.m()), (15, Some(2)));
        let f6 = FieldContext::new(6).unwrap();
        assert_eq!((f6.order(), f6.m()), (63, Some(3)));
        assert_eq!(FieldContext::new(5).unwrap().m(), None);
    }

    #[test]
    fn rejects_bad_moduli() {
        assert_eq!(
            FieldContext::with_modulus(4, 0b10101).unwrap_err(),
            Error::ReducibleModulus(0b10101)
        );
        assert!(matches!(
            FieldContext::with_modulus(4, 0b1011),
            Err(Error::WrongModulusDegree { n: 4, .. })
        ));
        assert_eq!(FieldContext::new(1).unwrap_err(), Error::DegreeOutOfRange(1));
        assert_eq!(FieldContext::new(31).unwrap_err(), Error::DegreeOutOfRange(31));
    }

    #[test]
    fn pow_conventions() {
        let f = FieldContext::new(4).unwrap();
        for x in f.elements().skip(1) {
            assert_eq!(f.pow_u(x, 15), FieldElem::ONE);
            assert_eq!(f.pow_u(x, 16), x);
            assert_eq!(f.mul(f.pow(x, -1).unwrap(), x), FieldElem::ONE);
        }
        assert_eq!(f.pow_u(FieldElem::ZERO, 5), FieldElem::ZERO);
        assert_eq!(f.pow_u(FieldElem::ZERO, 0), FieldElem::ONE);
        assert_eq!(f.pow_u(FieldElem::ZERO, 16), FieldElem::ZERO);
        assert_eq!(f.pow(FieldElem::ZERO, -3), Err(Error::ZeroToNegativePower));
    }

    #[test]
    fn table_and_carryless_paths_agree() {
        // Same modulus, tables on one side only: compare against raw ops.
        let f = FieldContext::new(9).unwrap();
        for a in f.elements().step_by(7) {
            for b in f.elements().step_by(11) {
                assert_eq!(f.mul(a, b).0, if a.0 == 0 || b.0 == 0 { 0 } else { f.mul_raw(a.0, b.0) });
            }
            assert_eq!(f.square(a).0, f.square_raw(a.0));
        }
        let big = FieldContext::new(23).unwrap();
        assert!(!big.has_tables());
        let x = FieldElem(0x12345);
        assert_eq!(big.pow_u(x, big.order() as u64), FieldElem::ONE);
        assert_eq!(big.frobenius(x, 23), x);
        assert_eq!(big.mul(x, big.inv(x).unwrap()), FieldElem::ONE);
    }

    #[test]
    fn trace_basics() {
        for n in [4, 6, 7, 8, 10] {
            let f = FieldContext::new(n).unwrap();
            assert_eq!(f.trace(FieldElem::ONE), n & 1);
            let zeros = f.elements().filter(|&x| f.trace(x) == 0).count();
            assert_eq!(zeros, f.size() / 2);
            for x in f.elements() {
                assert_eq!(f.trace(x), f.trace(f.square(x)));
                let direct = (0..n).fold(FieldElem::ZERO, |acc, i| acc + f.frobenius(x, i));
                assert_eq!(direct.0, f.trace(x));
            }
        }
    }

    #[test]
    fn trace_dual_is_the_trace_form() {
        let f = FieldContext::new(6).unwrap();
        for b in f.elements() {
            let w = f.trace_dual(b);
            for x in f.elements() {
                assert_eq!(f.trace(f.mul(b, x)), (w & x.0).count_ones() & 1);
            }
        }
    }

    #[test]
    fn generators_and_subfields() {
        let f = FieldContext::new(4).unwrap();
        assert!(!f.is_field_generator(FieldElem::ZERO));
        assert!(!f.is_field_generator(FieldElem::ONE));
        assert!(f.is_field_generator(f.primitive()));
        let f4 = f.subfield_elements(2);
        assert_eq!(f4.len(), 4);
        for &x in &f4 {
            assert!(f.in_subfield(x, 2));
            assert!(!f.is_field_generator(x));
        }
        assert_eq!(f.elements().filter(|&x| f.is_field_generator(x)).count(), 12);
    }

    #[test]
    fn power_map_matches_pow() {
        for n in [6, 21] {
            let f = FieldContext::new(n).unwrap();
            let d = 10;
            let table = f.power_map(d);
            for x in f.elements().step_by(if n > 20 { 4099 } else { 1 }) {
                assert_eq!(table[x.0 as usize], f.pow_u(x, d));
            }
        }
    }

    #[test]
    fn corrupted_table_breaks_the_field() {
        let f = FieldContext::new(4).unwrap().with_corrupted_table(5);
        let broken = f.elements().any(|a| {
            f.elements().any(|b| f.elements().any(|c| f.mul(a, b + c) != f.mul(a, b) + f.mul(a, c)))
        });
        assert!(broken);
        assert!(!f.tables_consistent());
        assert!(FieldContext::new(4).unwrap().tables_consistent());
    }
}
