use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default characteristic.
pub const DEFAULT_PRIME: u32 = 32003;

/// The prime field `Z/pZ`. Elements are plain `u32` residues in `[0, p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PrimeField {
    p: u32,
}

/// A residue modulo the field's prime.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PrimeScalar(pub u32);

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScalarOp {
    Add,
    Mul,
    Inv,
    Neg,
}

impl Default for PrimeField {
    fn default() -> Self {
        PrimeField { p: DEFAULT_PRIME }
    }
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= n as u64 {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl PrimeField {
    /// Builds the field of `p` elements. `p` must be an odd prime below 2^31.
    pub fn new(p: u32) -> Result<Self> {
        if p == 2 || p >= (1 << 31) || !is_prime(p) {
            return Err(Error::InvalidInput(format!(
                "{p} is not an odd prime below 2^31"
            )));
        }
        Ok(PrimeField { p })
    }

    #[inline]
    pub fn characteristic(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    pub fn inv(&self, a: u32) -> Result<u32> {
        if a.is_multiple_of(self.p) {
            return Err(Error::DivisionByZero);
        }
        // extended Euclid on (a, p)
        let (mut r0, mut r1) = (self.p as i64, a as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        Ok(t0.rem_euclid(self.p as i64) as u32)
    }

    /// Reduces an arbitrary signed integer into the field.
    pub fn from_i64(&self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }

    /// Symmetric representative in `(-p/2, p/2]`, used for printing.
    pub fn to_signed(&self, a: u32) -> i64 {
        if a > self.p / 2 {
            a as i64 - self.p as i64
        } else {
            a as i64
        }
    }

    /// Generic entry point mirroring the four field operations.
    pub fn apply(&self, op: ScalarOp, a: PrimeScalar, b: Option<PrimeScalar>) -> Result<PrimeScalar> {
        let b = || {
            b.map(|s| s.0)
                .ok_or_else(|| Error::InvalidInput("binary scalar op needs two operands".into()))
        };
        Ok(PrimeScalar(match op {
            ScalarOp::Add => self.add(a.0 % self.p, b()? % self.p),
            ScalarOp::Mul => self.mul(a.0, b()?),
            ScalarOp::Neg => self.neg(a.0 % self.p),
            ScalarOp::Inv => self.inv(a.0)?,
        }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn small_field_examples() {
        let f = PrimeField::new(7).unwrap();
        assert_eq!(f.apply(ScalarOp::Add, PrimeScalar(5), Some(PrimeScalar(4))).unwrap(), PrimeScalar(2));
        assert_eq!(f.apply(ScalarOp::Inv, PrimeScalar(3), None).unwrap(), PrimeScalar(5));
        assert_eq!(f.apply(ScalarOp::Inv, PrimeScalar(0), None), Err(Error::DivisionByZero));
        assert_eq!(f.apply(ScalarOp::Neg, PrimeScalar(3), None).unwrap(), PrimeScalar(4));
    }

    #[test]
    fn rejects_non_primes() {
        assert!(PrimeField::new(2).is_err());
        assert!(PrimeField::new(15).is_err());
        assert!(PrimeField::new(32003).is_ok());
    }

    #[test]
    fn field_axioms_on_seeded_triples() {
        let f = PrimeField::default();
        let mut rng = ChaCha8Rng::seed_from_u64(2024);
        for _ in 0..1000 {
            let p = f.characteristic();
            let (a, b, c) = (rng.gen_range(0..p), rng.gen_range(0..p), rng.gen_range(0..p));
            assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
            assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
            assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
            assert_eq!(f.add(a, f.neg(a)), 0);
            assert_eq!(f.sub(a, b), f.add(a, f.neg(b)));
            if a != 0 {
                assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
            }
        }
    }
}
