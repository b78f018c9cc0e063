//! Prime fields `F_p` with the modulus fixed at the type level.
//!
//! Everything above this module is generic over [`PrimeField`], so a
//! subspace over `F_2` and one over `F_3` are different types and can never
//! be mixed. The command-line layer picks the concrete field at runtime with
//! [`crate::with_prime_field!`].

use std::fmt;
use std::hash::Hash;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_traits::{Inv, One, Zero};

/// The primes supported by the enumeration kernels.
pub const SUPPORTED_PRIMES: [u32; 4] = [2, 3, 5, 7];

/// A finite field of prime order.
pub trait PrimeField:
    Copy
    + Eq
    + Ord
    + Hash
    + Default
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Div<Output = Self>
    + Inv<Output = Self>
    + AddAssign
    + SubAssign
    + MulAssign
{
    /// The characteristic (and order) of the field.
    const CHARACTERISTIC: u32;

    /// Reduces an arbitrary integer modulo `p`.
    fn from_i64(value: i64) -> Self;

    /// The canonical representative in `0..p`.
    fn value(self) -> u32;

    /// Multiplicative inverse, `None` for zero.
    fn try_inverse(self) -> Option<Self>;

    /// All field elements in increasing order of representative.
    fn elements() -> impl Iterator<Item = Self> {
        (0..Self::CHARACTERISTIC).map(|v| Self::from_i64(v as i64))
    }

    /// Representative in `(-p/2, p/2]`, handy for printing `-1` instead of `p-1`.
    fn signed_value(self) -> i64 {
        let v = self.value() as i64;
        let p = Self::CHARACTERISTIC as i64;
        if 2 * v > p {
            v - p
        } else {
            v
        }
    }
}

const fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An element of `F_P`, stored as its representative in `0..P`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Fp<const P: u32>(u8);

impl<const P: u32> Fp<P> {
    const VALID: () = assert!(is_prime(P) && P < 256, "Fp requires a prime modulus below 256");

    /// Builds an element from a representative that is already reduced.
    ///
    /// Panics if `value >= P`.
    pub fn new(value: u32) -> Self {
        #[allow(clippy::let_unit_value)]
        let () = Self::VALID;
        assert!(value < P, "{value} is not reduced modulo {P}");
        Fp(value as u8)
    }

    fn pow(self, mut exp: u32) -> Self {
        let mut base = self;
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc *= base;
            }
            base *= base;
            exp >>= 1;
        }
        acc
    }
}

impl<const P: u32> PrimeField for Fp<P> {
    const CHARACTERISTIC: u32 = P;

    fn from_i64(value: i64) -> Self {
        Self::new(value.rem_euclid(P as i64) as u32)
    }

    fn value(self) -> u32 {
        self.0 as u32
    }

    fn try_inverse(self) -> Option<Self> {
        // Fermat: a^(p-2) is the inverse of a nonzero a.
        (!self.is_zero()).then(|| self.pow(P - 2))
    }
}

impl<const P: u32> fmt::Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u32> fmt::Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u32> Zero for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }

    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u32> One for Fp<P> {
    fn one() -> Self {
        Fp(1)
    }
}

impl<const P: u32> Add for Fp<P> {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        let s = self.0 as u32 + rhs.0 as u32;
        Fp(if s >= P { s - P } else { s } as u8)
    }
}

impl<const P: u32> Sub for Fp<P> {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        let s = self.0 as u32 + P - rhs.0 as u32;
        Fp(if s >= P { s - P } else { s } as u8)
    }
}

impl<const P: u32> Neg for Fp<P> {
    type Output = Self;

    fn neg(self) -> Self {
        Self::zero() - self
    }
}

impl<const P: u32> Mul for Fp<P> {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        Fp(((self.0 as u32 * rhs.0 as u32) % P) as u8)
    }
}

impl<const P: u32> Inv for Fp<P> {
    type Output = Self;

    fn inv(self) -> Self {
        self.try_inverse().expect("attempt to invert zero in a prime field")
    }
}

impl<const P: u32> Div for Fp<P> {
    type Output = Self;

    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Self) -> Self {
        self * rhs.inv()
    }
}

impl<const P: u32> AddAssign for Fp<P> {
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl<const P: u32> SubAssign for Fp<P> {
    fn sub_assign(&mut self, rhs: Self) {
        *self = *self - rhs;
    }
}

impl<const P: u32> MulAssign for Fp<P> {
    fn mul_assign(&mut self, rhs: Self) {
        *self = *self * rhs;
    }
}

/// Converts a slice of integers into field elements.
pub fn vector<F: PrimeField>(coords: &[i64]) -> Vec<F> {
    coords.iter().map(|&c| F::from_i64(c)).collect()
}

/// Runs `$body` with `$F` bound to the concrete field type for the runtime
/// prime `$p`. Evaluates to `Err(Error::UnsupportedPrime)` for other primes.
#[macro_export]
macro_rules! with_prime_field {
    ($p:expr, $F:ident => $body:expr) => {
        match $p {
            2 => {
                type $F = $crate::F2;
                Ok($body)
            }
            3 => {
                type $F = $crate::F3;
                Ok($body)
            }
            5 => {
                type $F = $crate::F5;
                Ok($body)
            }
            7 => {
                type $F = $crate::F7;
                Ok($body)
            }
            other => Err($crate::Error::UnsupportedPrime(other)),
        }
    };
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{F2, F3, F5, F7};

    fn field_axioms<F: PrimeField>() {
        let all: Vec<F> = F::elements().collect();
        assert_eq!(all.len() as u32, F::CHARACTERISTIC);
        for &a in &all {
            assert_eq!(a + F::zero(), a);
            assert_eq!(a * F::one(), a);
            assert_eq!(a + (-a), F::zero());
            if !a.is_zero() {
                assert_eq!(a * a.inv(), F::one());
            }
            for &b in &all {
                assert_eq!(a + b, b + a);
                assert_eq!(a * b, b * a);
                assert_eq!((a - b) + b, a);
                for &c in &all {
                    assert_eq!((a + b) + c, a + (b + c));
                    assert_eq!((a * b) * c, a * (b * c));
                    assert_eq!(a * (b + c), a * b + a * c);
                }
            }
        }
        assert_eq!(F::zero().try_inverse(), None);
    }

    #[test]
    fn axioms_hold_exhaustively() {
        field_axioms::<F2>();
        field_axioms::<F3>();
        field_axioms::<F5>();
        field_axioms::<F7>();
    }

    #[test]
    fn reduction_and_signed_values() {
        assert_eq!(F3::from_i64(-1).value(), 2);
        assert_eq!(F3::from_i64(-1).signed_value(), -1);
        assert_eq!(F7::from_i64(10).value(), 3);
        assert_eq!(F5::from_i64(3).signed_value(), -2);
        assert_eq!(F2::from_i64(-3).value(), 1);
    }

    #[test]
    fn dispatch_macro() {
        fn order<F: PrimeField>() -> u32 {
            F::CHARACTERISTIC
        }
        for p in SUPPORTED_PRIMES {
            let got: Result<u32, crate::Error> = with_prime_field!(p, F => order::<F>());
            assert_eq!(got.unwrap(), p);
        }
        let bad: Result<u32, crate::Error> = with_prime_field!(4, F => order::<F>());
        assert!(bad.is_err());
    }

    #[test]
    #[should_panic]
    fn unreduced_new_panics() {
        let _ = F3::new(3);
    }
}
