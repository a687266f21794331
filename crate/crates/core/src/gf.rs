//! Arithmetic in prime fields `F_q`.
//!
//! Elements are plain `u32` values in `[0, q)`. The context only carries the
//! modulus, so it is `Copy` and can be shared freely between workers.

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// A field element, always reduced into `[0, q)`.
pub type Elem = u32;

/// Largest supported modulus.
pub const MAX_MODULUS: u32 = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("modulus {0} is not prime")]
    NotPrime(u32),
    #[error("modulus {0} exceeds the supported maximum {MAX_MODULUS}")]
    TooLarge(u32),
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
}

/// Prime field context.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FieldCtx {
    q: u32,
}

fn is_prime(q: u32) -> bool {
    if q < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= q {
        if q.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl FieldCtx {
    pub fn new(q: u32) -> Result<Self, FieldError> {
        if q > MAX_MODULUS {
            return Err(FieldError::TooLarge(q));
        }
        if !is_prime(q) {
            return Err(FieldError::NotPrime(q));
        }
        Ok(FieldCtx { q })
    }

    /// The two-element field.
    pub const fn f2() -> Self {
        FieldCtx { q: 2 }
    }

    #[inline]
    pub fn q(&self) -> u32 {
        self.q
    }

    #[inline]
    pub fn is_binary(&self) -> bool {
        self.q == 2
    }

    /// Reduces an arbitrary integer into the field.
    #[inline]
    pub fn reduce(&self, a: i64) -> Elem {
        a.rem_euclid(self.q as i64) as Elem
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        let s = a + b;
        if s >= self.q {
            s - self.q
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        if a >= b {
            a - b
        } else {
            a + self.q - b
        }
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        if a == 0 {
            0
        } else {
            self.q - a
        }
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        ((a as u64 * b as u64) % self.q as u64) as Elem
    }

    /// `a + b * c`, the elimination workhorse.
    #[inline]
    pub fn mul_add(&self, a: Elem, b: Elem, c: Elem) -> Elem {
        ((a as u64 + b as u64 * c as u64) % self.q as u64) as Elem
    }

    pub fn pow(&self, mut base: Elem, mut exp: u64) -> Elem {
        let mut acc = 1 % self.q;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse via Fermat's little theorem.
    pub fn inv(&self, a: Elem) -> Result<Elem, FieldError> {
        if a == 0 {
            return Err(FieldError::ZeroInverse);
        }
        Ok(self.pow(a, self.q as u64 - 2))
    }

    /// All field elements in increasing order.
    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.q
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_examples() {
        let f2 = FieldCtx::new(2).unwrap();
        let f3 = FieldCtx::new(3).unwrap();
        let f5 = FieldCtx::new(5).unwrap();
        let f7 = FieldCtx::new(7).unwrap();
        assert_eq!(f2.add(1, 1), 0);
        assert_eq!(f5.add(3, 4), 2);
        assert_eq!(f3.add(0, 2), 2);
        assert_eq!(f2.mul(1, 1), 1);
        assert_eq!(f5.mul(2, 3), 1);
        assert_eq!(f3.neg(1), 2);
        assert_eq!(f2.inv(1).unwrap(), 1);
        assert_eq!(f5.inv(2).unwrap(), 3);
        assert_eq!(f7.inv(3).unwrap(), 5);
    }

    #[test]
    fn inverse_matches_exhaustive_search() {
        for q in [2u32, 3, 5, 7, 11, 13] {
            let f = FieldCtx::new(q).unwrap();
            for a in 1..q {
                let brute = (1..q).find(|&b| (a * b) % q == 1).unwrap();
                assert_eq!(f.inv(a).unwrap(), brute, "q={q} a={a}");
            }
        }
    }

    #[test]
    fn inverse_all_primes_up_to_257() {
        for q in 2u32..=257 {
            let Ok(f) = FieldCtx::new(q) else { continue };
            for a in 1..q {
                assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
            }
        }
    }

    #[test]
    fn zero_inverse_is_an_error() {
        assert_eq!(FieldCtx::f2().inv(0), Err(FieldError::ZeroInverse));
    }

    #[test]
    fn rejects_bad_moduli() {
        assert_eq!(FieldCtx::new(4), Err(FieldError::NotPrime(4)));
        assert_eq!(FieldCtx::new(1), Err(FieldError::NotPrime(1)));
        assert!(matches!(FieldCtx::new(65537), Err(FieldError::TooLarge(_))));
        assert!(FieldCtx::new(65521).is_ok());
    }

    #[test]
    fn field_axioms_exhaustive() {
        for q in [2u32, 3, 5, 7] {
            let f = FieldCtx::new(q).unwrap();
            for a in 0..q {
                assert_eq!(f.add(a, 0), a);
                assert_eq!(f.mul(a, 1), a);
                assert_eq!(f.add(a, f.neg(a)), 0);
                for b in 0..q {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    assert_eq!(f.sub(a, b), f.add(a, f.neg(b)));
                    for c in 0..q {
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                        assert_eq!(f.mul_add(a, b, c), f.add(a, f.mul(b, c)));
                    }
                }
            }
        }
    }
}
