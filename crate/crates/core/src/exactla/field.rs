//! Exact scalar domains: prime fields of small characteristic and rationals.
//!
//! All arithmetic in this crate is exact; there is no floating point anywhere.

use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};

/// An exact field. `Ord` is required so that sets of matrices and subspaces
/// iterate in a deterministic order.
pub trait Field:
    Copy
    + Eq
    + Ord
    + Hash
    + fmt::Debug
    + fmt::Display
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + 'static
{
    fn zero() -> Self;
    fn one() -> Self;

    /// Multiplicative inverse. Panics on zero.
    fn inv(self) -> Self;

    fn from_int(n: i64) -> Self;

    fn is_zero(self) -> bool {
        self == Self::zero()
    }
}

/// A field with finitely many elements, all of which can be listed.
pub trait FiniteField: Field {
    const ORDER: u64;

    /// Every element exactly once, in a fixed order starting with zero.
    fn elements() -> Vec<Self>;
}

/// The field with `P` elements, `P` a prime. The representative is always
/// reduced to `0..P`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Gf<const P: u64>(u64);

impl<const P: u64> Gf<P> {
    pub fn new(value: u64) -> Self {
        Gf(value % P)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Gf::<P>(1 % P);
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

impl<const P: u64> Add for Gf<P> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Gf((self.0 + rhs.0) % P)
    }
}

impl<const P: u64> Sub for Gf<P> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Gf((self.0 + P - rhs.0) % P)
    }
}

impl<const P: u64> Mul for Gf<P> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Gf(self.0 * rhs.0 % P)
    }
}

impl<const P: u64> Neg for Gf<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Gf((P - self.0) % P)
    }
}

impl<const P: u64> fmt::Debug for Gf<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.0, P)
    }
}

impl<const P: u64> fmt::Display for Gf<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Field for Gf<P> {
    fn zero() -> Self {
        Gf(0)
    }

    fn one() -> Self {
        Gf(1 % P)
    }

    fn inv(self) -> Self {
        assert!(self.0 != 0, "inverse of zero in GF({P})");
        // Fermat: x^(P-2) for prime P.
        self.pow(P - 2)
    }

    fn from_int(n: i64) -> Self {
        Gf(n.rem_euclid(P as i64) as u64)
    }
}

impl<const P: u64> FiniteField for Gf<P> {
    const ORDER: u64 = P;

    fn elements() -> Vec<Self> {
        (0..P).map(Gf).collect()
    }
}

/// A rational number in lowest terms with positive denominator.
///
/// Intermediate products are computed in `i128` and narrowed back, so the
/// small instances this crate works with never wrap silently.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rat {
    num: i64,
    den: i64,
}

impl Rat {
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Self::reduce(num as i128, den as i128)
    }

    pub fn integer(n: i64) -> Self {
        Rat { num: n, den: 1 }
    }

    pub fn numer(self) -> i64 {
        self.num
    }

    pub fn denom(self) -> i64 {
        self.den
    }

    fn reduce(mut num: i128, mut den: i128) -> Self {
        if den < 0 {
            num = -num;
            den = -den;
        }
        let g = gcd(num.unsigned_abs(), den.unsigned_abs()).max(1);
        num /= g as i128;
        den /= g as i128;
        Rat {
            num: i64::try_from(num).expect("rational overflow"),
            den: i64::try_from(den).expect("rational overflow"),
        }
    }
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl Add for Rat {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Rat::reduce(
            self.num as i128 * rhs.den as i128 + rhs.num as i128 * self.den as i128,
            self.den as i128 * rhs.den as i128,
        )
    }
}

impl Sub for Rat {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Mul for Rat {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Rat::reduce(
            self.num as i128 * rhs.num as i128,
            self.den as i128 * rhs.den as i128,
        )
    }
}

impl Neg for Rat {
    type Output = Self;
    fn neg(self) -> Self {
        Rat {
            num: -self.num,
            den: self.den,
        }
    }
}

impl PartialOrd for Rat {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rat {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.num as i128 * other.den as i128).cmp(&(other.num as i128 * self.den as i128))
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl Field for Rat {
    fn zero() -> Self {
        Rat::integer(0)
    }

    fn one() -> Self {
        Rat::integer(1)
    }

    fn inv(self) -> Self {
        assert!(self.num != 0, "inverse of zero rational");
        Rat::reduce(self.den as i128, self.num as i128)
    }

    fn from_int(n: i64) -> Self {
        Rat::integer(n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf_inverse_tables() {
        fn check<const P: u64>() {
            for x in Gf::<P>::elements() {
                if !x.is_zero() {
                    assert_eq!(x * x.inv(), Gf::<P>::one(), "x={x} in GF({P})");
                }
            }
        }
        check::<2>();
        check::<3>();
        check::<5>();
        check::<7>();
        check::<11>();
        check::<13>();
    }

    #[test]
    fn gf_field_axioms_small() {
        type F = Gf<5>;
        for a in F::elements() {
            for b in F::elements() {
                assert_eq!(a + b, b + a);
                assert_eq!(a * b, b * a);
                assert_eq!(a - b, a + (-b));
                for c in F::elements() {
                    assert_eq!(a * (b + c), a * b + a * c);
                }
            }
        }
    }

    #[test]
    fn rat_reduction_and_order() {
        assert_eq!(Rat::new(2, 4), Rat::new(1, 2));
        assert_eq!(Rat::new(1, -2), Rat::new(-1, 2));
        assert!(Rat::new(1, 3) < Rat::new(1, 2));
        assert!(Rat::new(-1, 2) < Rat::zero());
        assert_eq!(Rat::new(3, 6).to_string(), "1/2");
        assert_eq!(Rat::integer(-4).to_string(), "-4");
    }

    #[test]
    fn rat_arithmetic() {
        let a = Rat::new(1, 2);
        let b = Rat::new(1, 3);
        assert_eq!(a + b, Rat::new(5, 6));
        assert_eq!(a * b, Rat::new(1, 6));
        assert_eq!(a - b, Rat::new(1, 6));
        assert_eq!(a.inv(), Rat::integer(2));
        assert_eq!((a - a), Rat::zero());
    }
}
