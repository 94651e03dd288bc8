//! The prime field F_p for a small odd prime p.
//!
//! Everything downstream works at desk scale: p is an odd prime with
//! 3 <= p <= 101, so a residue always fits comfortably in a machine word
//! and schoolbook arithmetic with word-sized accumulators never overflows.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::AlgebraError;

/// Largest supported prime. The experiments of interest use p <= 13; the cap
/// leaves headroom without pulling in arbitrary-precision arithmetic.
pub const MAX_PRIME: u64 = 101;

/// An odd prime modulus p with 3 <= p <= 101.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Fp {
    p: u64,
}

impl Fp {
    /// Validates that `p` is an odd prime in the supported range.
    pub fn new(p: u64) -> Result<Fp, AlgebraError> {
        if p < 3 || p > MAX_PRIME || p % 2 == 0 || !is_prime_u64(p) {
            return Err(AlgebraError::InvalidModulus(p));
        }
        Ok(Fp { p })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    /// Reduces an arbitrary signed integer into `[0, p)`.
    pub fn elem(&self, v: i64) -> FpElem {
        let p = self.p as i64;
        FpElem {
            v: v.rem_euclid(p) as u64,
            p: self.p,
        }
    }

    pub fn zero(&self) -> FpElem {
        FpElem { v: 0, p: self.p }
    }

    pub fn one(&self) -> FpElem {
        FpElem { v: 1, p: self.p }
    }

    /// All field elements `0, 1, ..., p-1` in order.
    pub fn elems(&self) -> impl Iterator<Item = FpElem> + '_ {
        let p = self.p;
        (0..p).map(move |v| FpElem { v, p })
    }

    /// All nonzero field elements in order.
    pub fn units(&self) -> impl Iterator<Item = FpElem> + '_ {
        let p = self.p;
        (1..p).map(move |v| FpElem { v, p })
    }
}

impl fmt::Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.p)
    }
}

/// A canonical residue in `[0, p)`, carrying its modulus.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FpElem {
    v: u64,
    p: u64,
}

impl FpElem {
    pub fn value(&self) -> u64 {
        self.v
    }

    pub fn field(&self) -> Fp {
        Fp { p: self.p }
    }

    pub fn is_zero(&self) -> bool {
        self.v == 0
    }

    pub fn is_one(&self) -> bool {
        self.v == 1
    }

    /// The symmetric representative in `(-p/2, p/2)`, handy for display.
    pub fn symmetric(&self) -> i64 {
        if self.v * 2 > self.p {
            self.v as i64 - self.p as i64
        } else {
            self.v as i64
        }
    }

    pub fn inv(&self) -> Result<FpElem, AlgebraError> {
        if self.v == 0 {
            return Err(AlgebraError::NotInvertible);
        }
        // Fermat: v^(p-2) mod p.
        Ok(self.pow(self.p - 2))
    }

    pub fn pow(&self, mut e: u64) -> FpElem {
        let mut base = *self;
        let mut acc = FpElem { v: 1, p: self.p };
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }
}

impl fmt::Debug for FpElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.v)
    }
}

impl fmt::Display for FpElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.v)
    }
}

impl std::ops::Add for FpElem {
    type Output = FpElem;
    fn add(self, rhs: FpElem) -> FpElem {
        debug_assert_eq!(self.p, rhs.p);
        let mut v = self.v + rhs.v;
        if v >= self.p {
            v -= self.p;
        }
        FpElem { v, p: self.p }
    }
}

impl std::ops::Sub for FpElem {
    type Output = FpElem;
    fn sub(self, rhs: FpElem) -> FpElem {
        debug_assert_eq!(self.p, rhs.p);
        let v = if self.v >= rhs.v {
            self.v - rhs.v
        } else {
            self.v + self.p - rhs.v
        };
        FpElem { v, p: self.p }
    }
}

impl std::ops::Mul for FpElem {
    type Output = FpElem;
    fn mul(self, rhs: FpElem) -> FpElem {
        debug_assert_eq!(self.p, rhs.p);
        FpElem {
            v: (self.v * rhs.v) % self.p,
            p: self.p,
        }
    }
}

impl std::ops::Neg for FpElem {
    type Output = FpElem;
    fn neg(self) -> FpElem {
        FpElem {
            v: if self.v == 0 { 0 } else { self.p - self.v },
            p: self.p,
        }
    }
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modulus_validation() {
        assert!(Fp::new(3).is_ok());
        assert!(Fp::new(101).is_ok());
        assert!(Fp::new(2).is_err());
        assert!(Fp::new(9).is_err());
        assert!(Fp::new(103).is_err());
    }

    #[test]
    fn arithmetic_round_trip() {
        let f = Fp::new(13).unwrap();
        for a in f.elems() {
            for b in f.units() {
                assert_eq!((a * b * b.inv().unwrap()).value(), a.value());
                assert_eq!((a + b - b).value(), a.value());
            }
        }
    }

    #[test]
    fn negative_reduction() {
        let f = Fp::new(7).unwrap();
        assert_eq!(f.elem(-1).value(), 6);
        assert_eq!(f.elem(-15).value(), 6);
        assert_eq!(f.elem(-1).symmetric(), -1);
    }
}
