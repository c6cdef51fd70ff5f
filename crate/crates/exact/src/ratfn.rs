//! Rational functions as unreduced numerator/denominator pairs.
//!
//! No gcd machinery: equality is decided by cross-multiplication, which
//! is all the downstream identities need.

use crate::laurent::LaurentPoly;
use crate::ExactError;

/// A quotient of Laurent polynomials over the same variable list.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalFn {
    pub num: LaurentPoly,
    pub den: LaurentPoly,
}

impl RationalFn {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, ExactError> {
        if den.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        if num.vars() != den.vars() {
            return Err(ExactError::VariableMismatch {
                left: num.vars().to_vec(),
                right: den.vars().to_vec(),
            });
        }
        Ok(RationalFn { num, den })
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        let den = LaurentPoly::constant(
            &p.vars().iter().map(|s| s.as_str()).collect::<Vec<_>>(),
            crate::CycScalar::one(),
        );
        RationalFn { num: p, den }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, other: &Self) -> Result<Self, ExactError> {
        let num = self
            .num
            .mul(&other.den)?
            .add(&other.num.mul(&self.den)?)?;
        RationalFn::new(num, self.den.mul(&other.den)?)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, ExactError> {
        let num = self
            .num
            .mul(&other.den)?
            .sub(&other.num.mul(&self.den)?)?;
        RationalFn::new(num, self.den.mul(&other.den)?)
    }

    pub fn mul(&self, other: &Self) -> Result<Self, ExactError> {
        RationalFn::new(self.num.mul(&other.num)?, self.den.mul(&other.den)?)
    }

    pub fn div(&self, other: &Self) -> Result<Self, ExactError> {
        if other.num.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        RationalFn::new(self.num.mul(&other.den)?, self.den.mul(&other.num)?)
    }

    pub fn neg(&self) -> Self {
        RationalFn { num: self.num.neg(), den: self.den.clone() }
    }
}

/// Equality by cross-multiplication: a/b = c/d iff ad - cb = 0.
pub fn rf_equal(a: &RationalFn, b: &RationalFn) -> Result<bool, ExactError> {
    let lhs = a.num.mul(&b.den)?;
    let rhs = b.num.mul(&a.den)?;
    Ok(lhs.sub(&rhs)?.is_zero())
}

impl std::fmt::Display for RationalFn {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{}] / [{}]", self.num, self.den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::CycScalar;

    #[test]
    fn factored_equality() {
        // (1 - T^2)/(1 - T) = (1 + T)/1
        let vars = ["T"];
        let one = LaurentPoly::one(&vars);
        let t = LaurentPoly::var(&vars, "T").unwrap();
        let t2 = t.mul(&t).unwrap();
        let a = RationalFn::new(one.sub(&t2).unwrap(), one.sub(&t).unwrap()).unwrap();
        let b = RationalFn::from_poly(one.add(&t).unwrap());
        assert!(rf_equal(&a, &b).unwrap());
    }

    #[test]
    fn trivial_unit_quotients() {
        // 1/1 = T/T
        let vars = ["T"];
        let one = LaurentPoly::one(&vars);
        let t = LaurentPoly::var(&vars, "T").unwrap();
        let a = RationalFn::new(one.clone(), one.clone()).unwrap();
        let b = RationalFn::new(t.clone(), t).unwrap();
        assert!(rf_equal(&a, &b).unwrap());
    }

    #[test]
    fn zero_denominator_rejected() {
        let vars = ["T"];
        let z = LaurentPoly::zero(&vars);
        let one = LaurentPoly::one(&vars);
        assert!(matches!(
            RationalFn::new(one, z),
            Err(ExactError::DivisionByZero)
        ));
        let _ = CycScalar::one();
    }
}
