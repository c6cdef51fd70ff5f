//! The unramified one-dimensional local factor as a closed geometric
//! series, with its truncated valuation-sum witness.

use crate::LocalError;
use spin4_exact::{rf_equal, series_of, CycScalar, LaurentPoly, RationalFn};

/// Descriptor of the unramified factor 1/(1 - x) where the single
/// symbol x stands for the character value at the prime times the
/// prime raised to minus the target exponent.
pub struct TateFactor {
    /// the evaluation exponent carried by x
    pub target_exponent: i64,
    /// the closed-form factor 1/(1 - x)
    pub factor: RationalFn,
    /// truncated valuation sum 1 + x + ... + x^depth
    pub witness_depth: usize,
}

const XVARS: [&str; 1] = ["x"];

pub fn tate_unramified(target_exponent: i64) -> Result<TateFactor, LocalError> {
    let one = LaurentPoly::one(&XVARS);
    let x = LaurentPoly::var(&XVARS, "x").unwrap();
    let factor = RationalFn::new(one.sub(&x)?.mul(&LaurentPoly::one(&XVARS))?, one.clone())?;
    // factor is (1 - x); the descriptor stores 1/(1 - x)
    let factor = RationalFn::new(one, factor.num)?;
    Ok(TateFactor { target_exponent, factor, witness_depth: 30 })
}

impl TateFactor {
    /// Check that the truncated valuation sum agrees with the closed
    /// form modulo x^(depth+1).
    pub fn witness_holds(&self) -> Result<bool, LocalError> {
        let s = series_of(&self.factor, "x", self.witness_depth)?;
        let one_rf = RationalFn::from_poly(LaurentPoly::one(&[]));
        for c in &s.coeffs {
            if !rf_equal(c, &one_rf)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Formal substitution of the zero character value.
    pub fn at_zero(&self) -> Result<CycScalar, LocalError> {
        let n = self.factor.num.eval(&[CycScalar::zero()])?;
        let d = self.factor.den.eval(&[CycScalar::zero()])?;
        Ok(&n * &d.inv().ok_or(LocalError::DegenerateParameters("pole at zero".into()))?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factor_and_witness() {
        let f = tate_unramified(11).unwrap();
        assert_eq!(f.target_exponent, 11);
        assert!(f.witness_holds().unwrap());
        assert_eq!(f.at_zero().unwrap(), CycScalar::one());
    }
}
