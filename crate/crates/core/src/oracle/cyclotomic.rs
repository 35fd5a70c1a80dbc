//! Exact arithmetic in `Z[ζ_p]`, stored in the basis `1, ζ, …, ζ^{p-2}`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CyclotomicInt {
    p: u32,
    coeffs: Vec<BigInt>,
}

impl CyclotomicInt {
    pub fn zero(p: u32) -> Self {
        CyclotomicInt { p, coeffs: vec![BigInt::zero(); (p - 1) as usize] }
    }

    pub fn from_int(p: u32, k: impl Into<BigInt>) -> Self {
        let mut z = Self::zero(p);
        z.coeffs[0] = k.into();
        z
    }

    pub fn one(p: u32) -> Self {
        Self::from_int(p, 1)
    }

    /// `ζ^e` for any integer exponent.
    pub fn zeta_pow(p: u32, e: i64) -> Self {
        let mut full = vec![BigInt::zero(); p as usize];
        full[e.rem_euclid(p as i64) as usize] = BigInt::one();
        Self::reduce(p, full)
    }

    /// Folds a vector over `1, ζ, …, ζ^{p-1}` using `Σ ζ^i = 0`.
    fn reduce(p: u32, mut full: Vec<BigInt>) -> Self {
        let top = full.pop().unwrap_or_default();
        if !top.is_zero() {
            for c in &mut full {
                *c -= &top;
            }
        }
        CyclotomicInt { p, coeffs: full }
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// The rational integer this equals, if any.
    pub fn as_integer(&self) -> Option<BigInt> {
        self.coeffs[1..].iter().all(Zero::is_zero).then(|| self.coeffs[0].clone())
    }

    /// Complex conjugation `ζ ↦ ζ^{-1}`.
    pub fn conj(&self) -> Self {
        let p = self.p as usize;
        let mut full = vec![BigInt::zero(); p];
        for (i, c) in self.coeffs.iter().enumerate() {
            full[(p - i) % p] += c;
        }
        Self::reduce(self.p, full)
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        CyclotomicInt { p: self.p, coeffs: self.coeffs.iter().map(|c| c * k).collect() }
    }

    /// `self += k * other`.
    pub fn add_scaled(&mut self, k: &BigInt, other: &Self) {
        assert_eq!(self.p, other.p);
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a += k * b;
        }
    }
}

impl Add<&CyclotomicInt> for &CyclotomicInt {
    type Output = CyclotomicInt;
    fn add(self, o: &CyclotomicInt) -> CyclotomicInt {
        assert_eq!(self.p, o.p);
        CyclotomicInt { p: self.p, coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a + b).collect() }
    }
}

impl AddAssign<&CyclotomicInt> for CyclotomicInt {
    fn add_assign(&mut self, o: &CyclotomicInt) {
        assert_eq!(self.p, o.p);
        for (a, b) in self.coeffs.iter_mut().zip(&o.coeffs) {
            *a += b;
        }
    }
}

impl Sub<&CyclotomicInt> for &CyclotomicInt {
    type Output = CyclotomicInt;
    fn sub(self, o: &CyclotomicInt) -> CyclotomicInt {
        self + &(-o)
    }
}

impl Neg for &CyclotomicInt {
    type Output = CyclotomicInt;
    fn neg(self) -> CyclotomicInt {
        CyclotomicInt { p: self.p, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul<&CyclotomicInt> for &CyclotomicInt {
    type Output = CyclotomicInt;
    fn mul(self, o: &CyclotomicInt) -> CyclotomicInt {
        assert_eq!(self.p, o.p);
        let p = self.p as usize;
        let mut full = vec![BigInt::zero(); p];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    full[(i + j) % p] += a * b;
                }
            }
        }
        CyclotomicInt::reduce(self.p, full)
    }
}

impl fmt::Display for CyclotomicInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            terms.push(match i {
                0 => c.to_string(),
                1 => format!("{c}ζ"),
                _ => format!("{c}ζ^{i}"),
            });
        }
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}
