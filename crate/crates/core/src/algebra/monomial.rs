use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Upper bound on the number of ring variables.
pub const MAX_VARS: usize = 16;

/// A power product `x_1^e_1 ... x_n^e_n` with exponents stored inline.
///
/// `Ord` is degree reverse lexicographic: higher total degree first, and
/// among equal degrees the monomial with the smaller exponent in the last
/// differing variable is the larger one.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: [u8; MAX_VARS],
    degree: u16,
}

impl Monomial {
    pub const fn one() -> Self {
        Monomial {
            exps: [0; MAX_VARS],
            degree: 0,
        }
    }

    pub fn var(i: usize) -> Self {
        let mut m = Self::one();
        m.exps[i] = 1;
        m.degree = 1;
        m
    }

    pub fn from_exponents(exps: &[u32]) -> Result<Self> {
        if exps.len() > MAX_VARS {
            return Err(Error::InvalidInput(format!(
                "at most {MAX_VARS} variables are supported"
            )));
        }
        let mut m = Self::one();
        for (i, &e) in exps.iter().enumerate() {
            if e > u8::MAX as u32 {
                return Err(Error::InvalidInput(format!("exponent {e} too large")));
            }
            m.exps[i] = e as u8;
            m.degree += e as u16;
        }
        Ok(m)
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.degree as u32
    }

    #[inline]
    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i] as u32
    }

    pub fn exponents(&self, nvars: usize) -> Vec<u32> {
        self.exps[..nvars].iter().map(|&e| e as u32).collect()
    }

    #[inline]
    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    /// Product; panics if an exponent leaves the `u8` range.
    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let exps = std::array::from_fn(|i| {
            self.exps[i]
                .checked_add(other.exps[i])
                .expect("monomial exponent overflow")
        });
        Monomial {
            exps,
            degree: self.degree + other.degree,
        }
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        if self.degree > other.degree {
            return false;
        }
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    #[inline]
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let exps = std::array::from_fn(|i| other.exps[i] - self.exps[i]);
        Some(Monomial {
            exps,
            degree: other.degree - self.degree,
        })
    }

    #[inline]
    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps: [u8; MAX_VARS] = std::array::from_fn(|i| self.exps[i].max(other.exps[i]));
        let degree = exps.iter().map(|&e| e as u16).sum();
        Monomial { exps, degree }
    }

    #[inline]
    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(other.exps.iter())
            .all(|(&a, &b)| a == 0 || b == 0)
    }

    /// Index of the last variable with positive exponent.
    pub fn last_var(&self) -> Option<usize> {
        (0..MAX_VARS).rev().find(|&i| self.exps[i] > 0)
    }

    /// Sum of the exponents of the variables whose bit is set in `mask`.
    #[inline]
    pub fn masked_degree(&self, mask: u32) -> u32 {
        if mask == 0 {
            return 0;
        }
        let mut d = 0;
        for i in 0..MAX_VARS {
            if mask & (1 << i) != 0 {
                d += self.exps[i] as u32;
            }
        }
        d
    }

    /// Bit `i` set iff variable `i` occurs.
    pub fn support_mask(&self) -> u32 {
        let mut mask = 0u32;
        for i in 0..MAX_VARS {
            if self.exps[i] > 0 {
                mask |= 1 << i;
            }
        }
        mask
    }

    /// Divides by the variable `i` once, if possible.
    pub fn div_var(&self, i: usize) -> Option<Monomial> {
        if self.exps[i] == 0 {
            return None;
        }
        let mut m = *self;
        m.exps[i] -= 1;
        m.degree -= 1;
        Some(m)
    }

    pub fn mul_var(&self, i: usize) -> Monomial {
        let mut m = *self;
        m.exps[i] = m.exps[i].checked_add(1).expect("monomial exponent overflow");
        m.degree += 1;
        m
    }

    /// Renders with the given variable names, `1` for the unit monomial.
    pub fn display<'a>(&'a self, names: &'a [String]) -> impl fmt::Display + 'a {
        DisplayMonomial { m: self, names }
    }

    /// Every monomial of the given degree in `nvars` variables, in
    /// descending degrevlex order.
    pub fn all_of_degree(nvars: usize, degree: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut exps = vec![0u32; nvars];
        fn rec(i: usize, left: u32, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
            if i + 1 == exps.len() {
                exps[i] = left;
                out.push(Monomial::from_exponents(exps).unwrap());
                return;
            }
            for e in (0..=left).rev() {
                exps[i] = e;
                rec(i + 1, left - e, exps, out);
            }
        }
        if nvars == 0 {
            if degree == 0 {
                out.push(Monomial::one());
            }
            return out;
        }
        rec(0, degree, &mut exps, &mut out);
        out.sort_by(|a, b| b.cmp(a));
        out
    }
}

struct DisplayMonomial<'a> {
    m: &'a Monomial,
    names: &'a [String],
}

impl fmt::Display for DisplayMonomial<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.m.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, name) in self.names.iter().enumerate() {
            let e = self.m.exponent(i);
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{name}")?;
            } else {
                write!(f, "{name}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.last_var().map_or(0, |i| i + 1);
        write!(f, "{:?}", &self.exps[..n])
    }
}

impl Ord for Monomial {
    #[inline]
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree.cmp(&other.degree) {
            Ordering::Equal => {}
            o => return o,
        }
        for i in (0..MAX_VARS).rev() {
            let (a, b) = (self.exps[i], other.exps[i]);
            if a != b {
                return b.cmp(&a);
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Total comparison used throughout the engine.
pub fn monomial_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    a.cmp(b)
}
