//! Truncated formal power series in one designated variable.
//!
//! The coefficients are rational functions in the remaining variables;
//! expansion of f = num/den proceeds by the usual coefficient recursion
//! once the denominator is a unit at T = 0.

use crate::laurent::LaurentPoly;
use crate::ratfn::{rf_equal, RationalFn};
use crate::ExactError;

/// Coefficients 0..=order of a power series in `var`.
#[derive(Clone, Debug)]
pub struct TruncSeries {
    pub var: String,
    pub order: usize,
    pub coeffs: Vec<RationalFn>,
}

impl TruncSeries {
    pub fn coeff(&self, m: usize) -> &RationalFn {
        &self.coeffs[m]
    }

    /// Compare with another series coefficient-by-coefficient.
    pub fn equal(&self, other: &TruncSeries) -> Result<bool, ExactError> {
        if self.order != other.order || self.var != other.var {
            return Ok(false);
        }
        for (a, b) in self.coeffs.iter().zip(&other.coeffs) {
            if !rf_equal(a, b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Split a polynomial into (exponent in `var`, coefficient poly without `var`).
fn in_var(p: &LaurentPoly, var: &str) -> Result<Vec<(i64, LaurentPoly)>, ExactError> {
    p.coefficients_in(var)
}

/// Expand `f` as a power series in `var` to the given order.
///
/// Requires the denominator to be a unit at `var` = 0: its minimum
/// degree in `var` must be exactly zero and the numerator must hold no
/// negative powers of `var`.
pub fn series_of(f: &RationalFn, var: &str, order: usize) -> Result<TruncSeries, ExactError> {
    let den_min = f.den.min_degree_in(var)?.ok_or(ExactError::DivisionByZero)?;
    let num_min = f.num.min_degree_in(var)?.unwrap_or(0);
    if den_min != 0 || num_min < 0 {
        return Err(ExactError::SingularExpansion);
    }

    let num_parts = in_var(&f.num, var)?;
    let den_parts = in_var(&f.den, var)?;
    let rest_vars: Vec<String> = f
        .num
        .vars()
        .iter()
        .filter(|v| v.as_str() != var)
        .cloned()
        .collect();
    let rest_refs: Vec<&str> = rest_vars.iter().map(|s| s.as_str()).collect();
    let zero_poly = LaurentPoly::zero(&rest_refs);

    let pick = |parts: &[(i64, LaurentPoly)], d: i64| -> LaurentPoly {
        parts
            .iter()
            .find(|(e, _)| *e == d)
            .map(|(_, p)| p.clone())
            .unwrap_or_else(|| zero_poly.clone())
    };

    let d0 = pick(&den_parts, 0);
    debug_assert!(!d0.is_zero());
    let d0_rf = RationalFn::from_poly(d0.clone());

    // c_m = (n_m - sum_{j=1..m} d_j c_{m-j}) / d_0
    let mut coeffs: Vec<RationalFn> = Vec::with_capacity(order + 1);
    for m in 0..=order {
        let mut acc = RationalFn::from_poly(pick(&num_parts, m as i64));
        for j in 1..=m {
            let dj = pick(&den_parts, j as i64);
            if dj.is_zero() {
                continue;
            }
            let prod = RationalFn::from_poly(dj).mul(&coeffs[m - j])?;
            acc = acc.sub(&prod)?;
        }
        coeffs.push(acc.div(&d0_rf)?);
    }

    Ok(TruncSeries { var: var.to_string(), order, coeffs })
}

/// Check that `series` really is `f` modulo T^(order+1): multiply the
/// series by the denominator and compare with the numerator termwise.
pub fn series_matches(f: &RationalFn, series: &TruncSeries) -> Result<bool, ExactError> {
    let var = series.var.as_str();
    let num_parts = in_var(&f.num, var)?;
    let den_parts = in_var(&f.den, var)?;
    for m in 0..=series.order {
        // sum_{j} den_j * c_{m-j} must equal num_m
        let mut acc: Option<RationalFn> = None;
        for (j, dp) in &den_parts {
            let j = *j as usize;
            if j > m {
                continue;
            }
            let term = RationalFn::from_poly(dp.clone()).mul(&series.coeffs[m - j])?;
            acc = Some(match acc {
                None => term,
                Some(a) => a.add(&term)?,
            });
        }
        let lhs = acc.unwrap_or_else(|| {
            RationalFn::from_poly(
                den_parts
                    .first()
                    .map(|(_, p)| {
                        LaurentPoly::zero_with(p.shared_vars())
                    })
                    .unwrap(),
            )
        });
        let rhs = RationalFn::from_poly(
            num_parts
                .iter()
                .find(|(e, _)| *e == m as i64)
                .map(|(_, p)| p.clone())
                .unwrap_or_else(|| {
                    let vars: Vec<&str> = lhs
                        .num
                        .vars()
                        .iter()
                        .map(|s| s.as_str())
                        .collect();
                    LaurentPoly::zero(&vars)
                }),
        );
        if !rf_equal(&lhs, &rhs)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::CycScalar;

    fn t_poly(vars: &[&str]) -> LaurentPoly {
        LaurentPoly::var(vars, "T").unwrap()
    }

    #[test]
    fn geometric_series() {
        // 1/(1-T) to order 2 -> 1 + T + T^2
        let vars = ["T"];
        let one = LaurentPoly::one(&vars);
        let f = RationalFn::new(one.clone(), one.sub(&t_poly(&vars)).unwrap()).unwrap();
        let s = series_of(&f, "T", 2).unwrap();
        for m in 0..=2 {
            let c = &s.coeffs[m];
            assert!(rf_equal(c, &RationalFn::from_poly(LaurentPoly::one(&[]))).unwrap());
        }
        assert!(series_matches(&f, &s).unwrap());
    }

    #[test]
    fn polynomial_input_truncates_to_itself() {
        let vars = ["T"];
        let one = LaurentPoly::one(&vars);
        let p = one.add(&t_poly(&vars)).unwrap();
        let f = RationalFn::from_poly(p);
        let s = series_of(&f, "T", 3).unwrap();
        let one_rf = RationalFn::from_poly(LaurentPoly::one(&[]));
        let zero_rf = RationalFn::from_poly(LaurentPoly::zero(&[]));
        assert!(rf_equal(&s.coeffs[0], &one_rf).unwrap());
        assert!(rf_equal(&s.coeffs[1], &one_rf).unwrap());
        assert!(rf_equal(&s.coeffs[2], &zero_rf).unwrap());
        assert!(rf_equal(&s.coeffs[3], &zero_rf).unwrap());
    }

    #[test]
    fn singular_expansion_rejected() {
        let vars = ["T"];
        let one = LaurentPoly::one(&vars);
        let f = RationalFn::new(one, t_poly(&vars)).unwrap();
        assert!(matches!(
            series_of(&f, "T", 2),
            Err(ExactError::SingularExpansion)
        ));
    }

    #[test]
    fn two_factor_denominator() {
        // 1/((1-aT)(1-bT)) -> 1 + (a+b)T + (a^2+ab+b^2)T^2, expanded by hand
        let vars = ["a", "b", "T"];
        let one = LaurentPoly::one(&vars);
        let a = LaurentPoly::var(&vars, "a").unwrap();
        let b = LaurentPoly::var(&vars, "b").unwrap();
        let t = LaurentPoly::var(&vars, "T").unwrap();
        let den = one
            .sub(&a.mul(&t).unwrap())
            .unwrap()
            .mul(&one.sub(&b.mul(&t).unwrap()).unwrap())
            .unwrap();
        let f = RationalFn::new(one.clone(), den).unwrap();
        let s = series_of(&f, "T", 2).unwrap();

        let cvars = ["a", "b"];
        let ca = LaurentPoly::var(&cvars, "a").unwrap();
        let cb = LaurentPoly::var(&cvars, "b").unwrap();
        let want1 = RationalFn::from_poly(ca.add(&cb).unwrap());
        let a2 = ca.mul(&ca).unwrap();
        let ab = ca.mul(&cb).unwrap();
        let b2 = cb.mul(&cb).unwrap();
        let want2 = RationalFn::from_poly(a2.add(&ab).unwrap().add(&b2).unwrap());
        assert!(rf_equal(&s.coeffs[1], &want1).unwrap());
        assert!(rf_equal(&s.coeffs[2], &want2).unwrap());
        let _ = CycScalar::one();
    }
}
