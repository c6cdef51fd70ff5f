//! The field Q(i, sqrt2) as a fixed 4-dimensional Q-algebra.
//!
//! An element is stored as c0 + c1*i + c2*s + c3*i*s with s = sqrt(2).
//! Inversion goes through the two commuting conjugations i -> -i and
//! s -> -s: the product of all four conjugates is a rational number,
//! nonzero exactly when the element is nonzero.

use crate::rat::Rat;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

/// Element of Q(i, sqrt2): coefficients of (1, i, sqrt2, i*sqrt2).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct CycScalar {
    pub c: [Rat; 4],
}

impl CycScalar {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        CycScalar { c: [Rat::one(), Rat::zero(), Rat::zero(), Rat::zero()] }
    }

    pub fn i() -> Self {
        CycScalar { c: [Rat::zero(), Rat::one(), Rat::zero(), Rat::zero()] }
    }

    pub fn sqrt2() -> Self {
        CycScalar { c: [Rat::zero(), Rat::zero(), Rat::one(), Rat::zero()] }
    }

    pub fn from_rat(r: Rat) -> Self {
        CycScalar { c: [r, Rat::zero(), Rat::zero(), Rat::zero()] }
    }

    pub fn from_i64(n: i64) -> Self {
        Self::from_rat(Rat::from_i64(n))
    }

    /// a + b*i with rational a, b.
    pub fn gaussian(a: Rat, b: Rat) -> Self {
        CycScalar { c: [a, b, Rat::zero(), Rat::zero()] }
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Rat::is_zero)
    }

    pub fn is_rational(&self) -> bool {
        self.c[1].is_zero() && self.c[2].is_zero() && self.c[3].is_zero()
    }

    /// The rational part, when `is_rational` holds.
    pub fn as_rat(&self) -> Option<Rat> {
        if self.is_rational() {
            Some(self.c[0].clone())
        } else {
            None
        }
    }

    /// True when the element lies in Q(i) (no sqrt2 component).
    pub fn in_gaussian_field(&self) -> bool {
        self.c[2].is_zero() && self.c[3].is_zero()
    }

    /// Complex conjugation i -> -i.
    pub fn conj(&self) -> Self {
        CycScalar {
            c: [
                self.c[0].clone(),
                -self.c[1].clone(),
                self.c[2].clone(),
                -self.c[3].clone(),
            ],
        }
    }

    /// The Galois twist sqrt2 -> -sqrt2.
    pub fn twist_sqrt2(&self) -> Self {
        CycScalar {
            c: [
                self.c[0].clone(),
                self.c[1].clone(),
                -self.c[2].clone(),
                -self.c[3].clone(),
            ],
        }
    }

    /// Field norm down to Q: product of the four Galois conjugates.
    pub fn norm(&self) -> Rat {
        let z = self * &self.conj();
        let n = &z * &z.twist_sqrt2();
        debug_assert!(n.is_rational());
        n.c[0].clone()
    }

    pub fn inv(&self) -> Option<Self> {
        let n = self.norm();
        if n.is_zero() {
            return None;
        }
        let adj = &(&self.conj() * &self.twist_sqrt2()) * &self.conj().twist_sqrt2();
        Some(adj.scale(&(Rat::one() / n)))
    }

    pub fn scale(&self, r: &Rat) -> Self {
        CycScalar {
            c: [
                r * &self.c[0],
                r * &self.c[1],
                r * &self.c[2],
                r * &self.c[3],
            ],
        }
    }

    /// (2i)^e for any integer e.
    pub fn two_i_pow(e: i32) -> Self {
        let base = CycScalar::gaussian(Rat::zero(), Rat::from_i64(2));
        base.powi(e)
    }

    pub fn powi(&self, e: i32) -> Self {
        if e < 0 {
            let inv = self.inv().expect("inverse of zero");
            return inv.powi(-e);
        }
        let mut acc = CycScalar::one();
        let mut base = self.clone();
        let mut k = e as u32;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            k >>= 1;
        }
        acc
    }
}

impl Add for &CycScalar {
    type Output = CycScalar;
    fn add(self, rhs: &CycScalar) -> CycScalar {
        CycScalar {
            c: [
                &self.c[0] + &rhs.c[0],
                &self.c[1] + &rhs.c[1],
                &self.c[2] + &rhs.c[2],
                &self.c[3] + &rhs.c[3],
            ],
        }
    }
}

impl Sub for &CycScalar {
    type Output = CycScalar;
    fn sub(self, rhs: &CycScalar) -> CycScalar {
        CycScalar {
            c: [
                &self.c[0] - &rhs.c[0],
                &self.c[1] - &rhs.c[1],
                &self.c[2] - &rhs.c[2],
                &self.c[3] - &rhs.c[3],
            ],
        }
    }
}

impl Mul for &CycScalar {
    type Output = CycScalar;
    fn mul(self, rhs: &CycScalar) -> CycScalar {
        // (a0 + a1 i + a2 s + a3 is)(b0 + b1 i + b2 s + b3 is), s^2 = 2, i^2 = -1
        let a = &self.c;
        let b = &rhs.c;
        let two = Rat::from_i64(2);
        let c0 = &(&(a[0].clone() * b[0].clone()) - &(a[1].clone() * b[1].clone()))
            + &(&two * &(&(a[2].clone() * b[2].clone()) - &(a[3].clone() * b[3].clone())));
        let c1 = &(&(a[0].clone() * b[1].clone()) + &(a[1].clone() * b[0].clone()))
            + &(&two * &(&(a[2].clone() * b[3].clone()) + &(a[3].clone() * b[2].clone())));
        let c2 = &(&(a[0].clone() * b[2].clone()) + &(a[2].clone() * b[0].clone()))
            - &(&(a[1].clone() * b[3].clone()) + &(a[3].clone() * b[1].clone()));
        let c3 = &(&(a[0].clone() * b[3].clone()) + &(a[3].clone() * b[0].clone()))
            + &(&(a[1].clone() * b[2].clone()) + &(a[2].clone() * b[1].clone()));
        CycScalar { c: [c0, c1, c2, c3] }
    }
}

macro_rules! owned_ops {
    ($trait:ident, $method:ident) => {
        impl $trait for CycScalar {
            type Output = CycScalar;
            fn $method(self, rhs: CycScalar) -> CycScalar {
                (&self).$method(&rhs)
            }
        }
    };
}
owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);

impl Neg for CycScalar {
    type Output = CycScalar;
    fn neg(self) -> CycScalar {
        CycScalar {
            c: [
                -self.c[0].clone(),
                -self.c[1].clone(),
                -self.c[2].clone(),
                -self.c[3].clone(),
            ],
        }
    }
}

impl AddAssign for CycScalar {
    fn add_assign(&mut self, rhs: CycScalar) {
        *self = &*self + &rhs;
    }
}

impl SubAssign for CycScalar {
    fn sub_assign(&mut self, rhs: CycScalar) {
        *self = &*self - &rhs;
    }
}

impl MulAssign for CycScalar {
    fn mul_assign(&mut self, rhs: CycScalar) {
        *self = &*self * &rhs;
    }
}

impl fmt::Display for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, label) in ["", "i", "r2", "i*r2"].iter().enumerate() {
            if self.c[k].is_zero() {
                continue;
            }
            let coef = &self.c[k];
            if first {
                first = false;
            } else if !coef.is_negative() {
                write!(f, "+")?;
            }
            if label.is_empty() {
                write!(f, "{}", coef)?;
            } else if coef.is_one() {
                write!(f, "{}", label)?;
            } else if *coef == -Rat::one() {
                write!(f, "-{}", label)?;
            } else {
                write!(f, "{}*{}", coef, label)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s() -> CycScalar {
        CycScalar::sqrt2()
    }

    #[test]
    fn squares() {
        assert_eq!(&CycScalar::i() * &CycScalar::i(), -CycScalar::one());
        assert_eq!(&s() * &s(), CycScalar::from_i64(2));
    }

    #[test]
    fn inverse_of_mixed_element() {
        // (1 + i + sqrt2) * inv = 1
        let z = &(&CycScalar::one() + &CycScalar::i()) + &s();
        let inv = z.inv().unwrap();
        assert_eq!(&z * &inv, CycScalar::one());
    }

    #[test]
    fn two_i_powers() {
        // (2i)^-1 = -i/2
        let v = CycScalar::two_i_pow(-1);
        assert_eq!(v, CycScalar::gaussian(Rat::zero(), Rat::new(-1, 2)));
        assert_eq!(CycScalar::two_i_pow(4), CycScalar::from_i64(16));
    }
}
