//! The degree-four local factor, the alternating-sum values of the
//! spherical functional, and the fully symbolic series identity
//! connecting them.

use crate::satake::{alpha, antisymmetrize, b_monomial, VARS};
#[cfg(test)]
use crate::satake::symbol_group;
use crate::LocalError;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use spin4_exact::{rf_equal, series_of, CycScalar, LaurentPoly, Rat, RationalFn};

/// Denominator of the degree-four factor: prod (1 - a_i T).
pub fn spin_denominator() -> LaurentPoly {
    let one = LaurentPoly::one(&VARS);
    let t = LaurentPoly::var(&VARS, "T").unwrap();
    let mut den = one.clone();
    for i in 1..=4 {
        den = den
            .mul(&one.sub(&alpha(i).mul(&t).unwrap()).unwrap())
            .unwrap();
    }
    den
}

/// The degree-four local factor 1 / prod (1 - a_i T).
pub fn spin_lfactor() -> RationalFn {
    RationalFn::new(LaurentPoly::one(&VARS), spin_denominator()).unwrap()
}

/// The alternating-sum value: numerator and denominator of
/// A(a3^(m+2) a4^-1) / A(a3^2 a4^-1), with the half-power of the prime
/// carried separately as -3m/2.
pub struct BesselValue {
    pub m: usize,
    pub value: RationalFn,
    /// exponent of the prime, times two (so -3m here)
    pub double_p_exponent: i64,
}

pub fn bessel_value(m: usize) -> Result<BesselValue, LocalError> {
    let num = antisymmetrize(&b_monomial(m as i64 + 1, 0, -1))?;
    let den = antisymmetrize(&b_monomial(1, 0, -1))?;
    if den.is_zero() {
        return Err(LocalError::DegenerateParameters(
            "alternating normalizer vanishes identically".into(),
        ));
    }
    Ok(BesselValue {
        m,
        value: RationalFn::new(num, den)?,
        double_p_exponent: -3 * (m as i64),
    })
}

/// Outcome of one verification run.
#[derive(Debug, Clone)]
pub struct UnramifiedOutcome {
    pub checks: usize,
    pub failures: Vec<String>,
}

impl UnramifiedOutcome {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// The six stated alternating-sum vanishings.
pub fn stated_vanishings() -> Vec<(&'static str, LaurentPoly)> {
    let a = |i: usize| alpha(i);
    let m = |x: &LaurentPoly, y: &LaurentPoly| x.mul(y).unwrap();
    let a2a3 = m(&a(2), &a(3));
    let a3sq = m(&a(3), &a(3));
    let a2a3sq_a4inv = m(&m(&a(2), &a3sq), &inv_alpha4());
    let a3sq_a1 = m(&a3sq, &a(1));
    let a1a2a3sq = m(&m(&a(1), &a(2)), &a3sq);
    let sym = m(&a(2), &a3sq)
        .add(&m(&m(&a(2), &a(2)), &a(3)))
        .unwrap();
    vec![
        ("A(a2 a3)", a2a3),
        ("A(a2 a3^2 a4^-1)", a2a3sq_a4inv),
        ("A(a3^2)", a3sq),
        ("A(a3^2 a1)", a3sq_a1),
        ("A(a1 a2 a3^2)", a1a2a3sq),
        ("A(a2 a3^2 + a2^2 a3)", sym),
    ]
}

fn inv_alpha4() -> LaurentPoly {
    b_monomial(-1, 0, -1)
}

/// Fully symbolic verification: the series of the degree-four factor
/// against the alternating-sum coefficients, the intermediate identity,
/// and the six stated vanishings.
pub fn verify_unramified_symbolic(order: usize) -> Result<UnramifiedOutcome, LocalError> {
    let mut failures = Vec::new();
    let mut checks = 0usize;

    // 1. the six vanishings
    for (label, f) in stated_vanishings() {
        checks += 1;
        if !antisymmetrize(&f)?.is_zero() {
            failures.push(format!("{} is not zero", label));
        }
    }

    // 2. intermediate identity: A(a3^2 a4^-1 (1-a1 T)(1-a2 T)(1-a4 T))
    //    equals A(a3^2 a4^-1) as a polynomial in T
    checks += 1;
    let one = LaurentPoly::one(&VARS);
    let t = LaurentPoly::var(&VARS, "T").unwrap();
    let mut prod = b_monomial(1, 0, -1);
    for i in [1usize, 2, 4] {
        prod = prod
            .mul(&one.sub(&alpha(i).mul(&t).unwrap()).unwrap())
            .unwrap();
    }
    let lhs = antisymmetrize(&prod)?;
    let rhs = antisymmetrize(&b_monomial(1, 0, -1))?;
    if lhs.sub(&rhs)?.is_zero() {
        // the T-degree > 0 part cancelled exactly
    } else {
        failures.push("intermediate alternating identity failed".into());
    }

    // 3. series identity to the requested order
    let series = series_of(&spin_lfactor(), "T", order)?;
    for m in 0..=order {
        checks += 1;
        let bv = bessel_value_without_t(m)?;
        if !rf_equal(&series.coeffs[m], &bv)? {
            failures.push(format!("series coefficient {} differs", m));
        }
    }

    Ok(UnramifiedOutcome { checks, failures })
}

/// The alternating-sum value over the three symbols only (the series
/// variable stripped), for comparison against series coefficients.
pub fn bessel_value_without_t(m: usize) -> Result<RationalFn, LocalError> {
    let bv = bessel_value(m)?;
    Ok(RationalFn::new(drop_t(&bv.value.num)?, drop_t(&bv.value.den)?)?)
}

/// Strip the series variable from a polynomial that does not use it.
fn drop_t(p: &LaurentPoly) -> Result<LaurentPoly, LocalError> {
    let parts = p.coefficients_in("T")?;
    match parts.len() {
        0 => Ok(LaurentPoly::zero(&["b0", "b1", "b2"])),
        1 if parts[0].0 == 0 => Ok(parts[0].1.clone()),
        _ => Err(LocalError::Exact("polynomial depends on the series variable".into())),
    }
}

/// Numeric instantiation: evaluate both sides at random rational
/// parameter triples, rejecting the degenerate locus, and compare
/// exactly.
pub fn verify_unramified_numeric(
    order: usize,
    samples: usize,
    seed: u64,
) -> Result<UnramifiedOutcome, LocalError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    let mut checks = 0usize;
    let series = series_of(&spin_lfactor(), "T", order)?;
    let dens = antisymmetrize(&b_monomial(1, 0, -1))?;

    let mut made = 0usize;
    let mut attempts = 0usize;
    while made < samples {
        attempts += 1;
        if attempts > samples * 200 {
            return Err(LocalError::DegenerateParameters(
                "rejection sampling failed to find generic parameters".into(),
            ));
        }
        let draw = |rng: &mut ChaCha8Rng| -> CycScalar {
            let n = rng.gen_range(1i64..=9) * if rng.gen_bool(0.5) { 1 } else { -1 };
            let d = rng.gen_range(1i64..=6);
            CycScalar::from_rat(Rat::new(n, d))
        };
        let vals = [draw(&mut rng), draw(&mut rng), draw(&mut rng), CycScalar::zero()];
        // reject the degenerate locus
        let dval = dens.eval(&vals);
        let Ok(dval) = dval else { continue };
        if dval.is_zero() {
            continue;
        }
        made += 1;
        for m in 0..=order {
            checks += 1;
            let bv = bessel_value(m)?;
            let lhs_n = bv.value.num.eval(&vals)?;
            let lhs_d = bv.value.den.eval(&vals)?;
            let rhs_n = series.coeffs[m].num.eval_without_t(&vals)?;
            let rhs_d = series.coeffs[m].den.eval_without_t(&vals)?;
            // cross-multiplied equality
            if &lhs_n * &rhs_d != &rhs_n * &lhs_d {
                failures.push(format!("numeric sample {} coefficient {} differs", made, m));
            }
        }
    }
    Ok(UnramifiedOutcome { checks, failures })
}

/// Helper for evaluating T-free rational-function coefficients at
/// numeric parameter triples. The series coefficients live over the
/// three symbols only.
trait EvalWithoutT {
    fn eval_without_t(&self, vals: &[CycScalar; 4]) -> Result<CycScalar, LocalError>;
}

impl EvalWithoutT for LaurentPoly {
    fn eval_without_t(&self, vals: &[CycScalar; 4]) -> Result<CycScalar, LocalError> {
        // the coefficient polynomials carry variables (b0, b1, b2)
        let n = self.vars().len();
        Ok(self.eval(&vals[0..n].to_vec())?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalization_and_first_coefficients() {
        // m = 0 gives 1
        let b0 = bessel_value(0).unwrap();
        let one = RationalFn::from_poly(LaurentPoly::one(&VARS));
        assert!(rf_equal(&b0.value, &one).unwrap());
        assert_eq!(b0.double_p_exponent, 0);
        // m = 1 gives a1 + a2 + a3 + a4
        let b1 = bessel_value(1).unwrap();
        let e1 = alpha(1)
            .add(&alpha(2))
            .unwrap()
            .add(&alpha(3))
            .unwrap()
            .add(&alpha(4))
            .unwrap();
        assert!(rf_equal(&b1.value, &RationalFn::from_poly(e1)).unwrap());
        assert_eq!(b1.double_p_exponent, -3);
    }

    #[test]
    fn lfactor_specializes_to_fourth_power() {
        // all symbols at 1: denominator becomes (1 - T)^4
        let den = spin_denominator();
        let grouped = den.coefficients_in("T").unwrap();
        let one = CycScalar::one();
        for (deg, poly) in grouped {
            let v = poly.eval(&[one.clone(), one.clone(), one.clone()]).unwrap();
            let want = [1i64, -4, 6, -4, 1][deg as usize];
            assert_eq!(v, CycScalar::from_i64(want));
        }
    }

    #[test]
    fn lfactor_is_group_invariant() {
        let den = spin_denominator();
        for w in symbol_group() {
            assert_eq!(w.apply(&den).unwrap(), den);
        }
    }

    #[test]
    fn linear_coefficient_of_denominator() {
        let den = spin_denominator();
        let grouped = den.coefficients_in("T").unwrap();
        let lin = grouped.iter().find(|(d, _)| *d == 1).unwrap();
        let want = alpha(1)
            .add(&alpha(2))
            .unwrap()
            .add(&alpha(3))
            .unwrap()
            .add(&alpha(4))
            .unwrap()
            .neg();
        // compare after dropping the T slot
        let want_flat = want.coefficients_in("T").unwrap();
        assert_eq!(lin.1, want_flat[0].1);
    }

    #[test]
    fn symbolic_verification_small_order() {
        let out = verify_unramified_symbolic(6).unwrap();
        assert!(out.passed(), "{:?}", out.failures);
        assert!(out.checks >= 13);
    }

    #[test]
    fn numeric_verification_small() {
        let out = verify_unramified_numeric(5, 5, 1234).unwrap();
        assert!(out.passed(), "{:?}", out.failures);
    }

    #[test]
    fn bessel_values_are_group_invariant() {
        for m in 0..=4usize {
            let bv = bessel_value(m).unwrap();
            for w in symbol_group() {
                let num_w = w.apply(&bv.value.num).unwrap();
                let den_w = w.apply(&bv.value.den).unwrap();
                let moved = RationalFn::new(num_w, den_w).unwrap();
                assert!(rf_equal(&moved, &bv.value).unwrap(), "m={}", m);
            }
        }
    }
}
