//! Arbitrary-precision rationals.
//!
//! `Rat` wraps `num_rational::BigRational`, which already keeps the
//! canonical form (reduced, positive denominator) we rely on.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

/// An exact rational number with gcd-reduced representation.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rat(pub BigRational);

impl Rat {
    pub fn zero() -> Self {
        Rat(BigRational::zero())
    }

    pub fn one() -> Self {
        Rat(BigRational::one())
    }

    pub fn from_i64(n: i64) -> Self {
        Rat(BigRational::from_integer(BigInt::from(n)))
    }

    /// `n/d`, panicking on a zero denominator.
    pub fn new(n: i64, d: i64) -> Self {
        assert!(d != 0, "zero denominator");
        Rat(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    /// True when the reduced denominator equals `d`.
    pub fn has_denominator(&self, d: u64) -> bool {
        *self.0.denom() == BigInt::from(d)
    }

    /// True for integers.
    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn inv(&self) -> Option<Rat> {
        if self.is_zero() {
            None
        } else {
            Some(Rat(self.0.recip()))
        }
    }

    pub fn pow(&self, e: i32) -> Rat {
        if e == 0 {
            return Rat::one();
        }
        if e < 0 {
            return Rat(self.0.pow(e));
        }
        Rat(self.0.pow(e))
    }

    /// Exact n! as a rational.
    pub fn factorial(n: u64) -> Rat {
        let mut acc = BigInt::one();
        for k in 2..=n {
            acc *= BigInt::from(k);
        }
        Rat(BigRational::from_integer(acc))
    }

    /// Binomial coefficient C(n, k), zero outside the usual range.
    pub fn binomial(n: i64, k: i64) -> Rat {
        if k < 0 || k > n || n < 0 {
            return Rat::zero();
        }
        let mut acc = BigRational::one();
        for j in 0..k {
            acc *= BigRational::new(BigInt::from(n - j), BigInt::from(j + 1));
        }
        Rat(acc)
    }

    /// Falling factorial ratio a!/(a-m)! = a(a-1)...(a-m+1) for m >= 0.
    pub fn falling(a: i64, m: u32) -> Rat {
        let mut acc = BigInt::one();
        for j in 0..m as i64 {
            acc *= BigInt::from(a - j);
        }
        Rat(BigRational::from_integer(acc))
    }

    /// Decimal string with enough digits for reports; exact values print as fractions.
    pub fn to_f64(&self) -> f64 {
        let n = self.0.numer();
        let d = self.0.denom();
        let fn_ = n.to_string().parse::<f64>().unwrap_or(f64::NAN);
        let fd = d.to_string().parse::<f64>().unwrap_or(f64::NAN);
        fn_ / fd
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat((self.0).$method(rhs.0))
            }
        }
        impl<'a> $trait<&'a Rat> for &'a Rat {
            type Output = Rat;
            fn $method(self, rhs: &'a Rat) -> Rat {
                Rat((&self.0).$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Div for Rat {
    type Output = Rat;
    fn div(self, rhs: Rat) -> Rat {
        assert!(!rhs.is_zero(), "division by zero");
        Rat(self.0 / rhs.0)
    }
}

impl<'a> Div<&'a Rat> for &'a Rat {
    type Output = Rat;
    fn div(self, rhs: &'a Rat) -> Rat {
        assert!(!rhs.is_zero(), "division by zero");
        Rat(&self.0 / &rhs.0)
    }
}

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl AddAssign for Rat {
    fn add_assign(&mut self, rhs: Rat) {
        self.0 += rhs.0;
    }
}

impl SubAssign for Rat {
    fn sub_assign(&mut self, rhs: Rat) {
        self.0 -= rhs.0;
    }
}

impl MulAssign for Rat {
    fn mul_assign(&mut self, rhs: Rat) {
        self.0 *= rhs.0;
    }
}

impl From<i64> for Rat {
    fn from(n: i64) -> Self {
        Rat::from_i64(n)
    }
}
