//! Arithmetic in the prime field F_p.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest admissible modulus.
pub const MAX_MODULUS: u64 = 1 << 31;

/// A prime modulus `p` with `2 <= p <= 2^31`, checked at construction.
///
/// Residues are carried as `u64` values in `[0, p)`; the bound on `p` keeps
/// every product of two residues inside `u64`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u64", into = "u64")]
pub struct PrimeModulus(u64);

impl PrimeModulus {
    pub fn new(p: u64) -> Result<Self> {
        if !(2..=MAX_MODULUS).contains(&p) || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeModulus(p))
    }

    #[inline]
    pub fn get(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn reduce(self, x: u64) -> u64 {
        x % self.0
    }

    /// Maps a signed integer to its residue.
    #[inline]
    pub fn from_i64(self, x: i64) -> u64 {
        x.rem_euclid(self.0 as i64) as u64
    }

    #[inline]
    pub fn add(self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.0 {
            s - self.0
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.0 - b
        }
    }

    #[inline]
    pub fn neg(self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.0 - a
        }
    }

    #[inline]
    pub fn mul(self, a: u64, b: u64) -> u64 {
        (a * b) % self.0
    }

    pub fn pow(self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1 % self.0;
        base %= self.0;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(self, a: u64) -> u64 {
        assert!(!a.is_multiple_of(self.0), "inverse of zero mod {}", self.0);
        self.pow(a, self.0 - 2)
    }

    /// `acc += c * v` componentwise.
    pub fn axpy(self, acc: &mut [u64], c: u64, v: &[u64]) {
        if c == 0 {
            return;
        }
        debug_assert_eq!(acc.len(), v.len());
        for (a, &x) in acc.iter_mut().zip(v) {
            if x != 0 {
                *a = self.add(*a, self.mul(c, x));
            }
        }
    }

    pub fn scale(self, c: u64, v: &[u64]) -> Vec<u64> {
        v.iter().map(|&x| self.mul(c, x)).collect()
    }

    pub fn add_vec(self, a: &[u64], b: &[u64]) -> Vec<u64> {
        a.iter().zip(b).map(|(&x, &y)| self.add(x, y)).collect()
    }

    pub fn sub_vec(self, a: &[u64], b: &[u64]) -> Vec<u64> {
        a.iter().zip(b).map(|(&x, &y)| self.sub(x, y)).collect()
    }
}

impl TryFrom<u64> for PrimeModulus {
    type Error = Error;

    fn try_from(p: u64) -> Result<Self> {
        PrimeModulus::new(p)
    }
}

impl From<PrimeModulus> for u64 {
    fn from(p: PrimeModulus) -> u64 {
        p.0
    }
}

impl std::fmt::Display for PrimeModulus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_composites_and_out_of_range() {
        assert!(PrimeModulus::new(0).is_err());
        assert!(PrimeModulus::new(1).is_err());
        assert!(PrimeModulus::new(9).is_err());
        assert!(PrimeModulus::new((1 << 31) + 11).is_err());
        assert!(PrimeModulus::new(2).is_ok());
        assert!(PrimeModulus::new(2_147_483_647).is_ok());
    }

    #[test]
    fn inverse_round_trips() {
        let p = PrimeModulus::new(2_147_483_647).unwrap();
        for a in [1u64, 2, 12345, 2_147_483_646] {
            assert_eq!(p.mul(a, p.inv(a)), 1);
        }
        let five = PrimeModulus::new(5).unwrap();
        assert_eq!(five.from_i64(-1), 4);
        assert_eq!(five.inv(2), 3);
    }
}
