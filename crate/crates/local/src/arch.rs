//! The archimedean one-dimensional zeta integrals of the two
//! polynomial-weighted Gaussian test functions, compared against the
//! closed sign-pi-gamma product.
//!
//! The characters here carry absolute-value exponents q-2 and p-2: the
//! unique normalization under which the stated closed form is the true
//! value of the pair of integrals at evaluation point p+q+3/2. (The
//! source text states two other normalizations in different places,
//! neither of which reproduces its own closed form; see the repository
//! notes.)

use crate::gammaz::gamma_real;
use crate::real::{f, fi, integrate_real, pi, NumericResult};
use crate::LocalError;
use rug::Float;

/// Report of the archimedean zeta product verification.
#[derive(Debug, Clone)]
pub struct TateArchReport {
    pub product: NumericResult,
    pub closed_form: Float,
    pub relative_difference: Float,
    pub tolerance: f64,
}

impl TateArchReport {
    pub fn passed(&self) -> bool {
        self.relative_difference.to_f64().abs() <= self.tolerance
    }
}

/// One factor: int over t != 0 of Phi(0, t) |t|^(p+q+2) chi(t) dt/|t|
/// with Phi(0, t) = (it*0 + t)^((n-r)/2) (it*0 - t)^((n+r)/2) e^(-pi t^2)
/// = (-1)^((n+r)/2) t^n e^(-pi t^2), and chi = | |^E sgn^n.
///
/// On the positive half-line with t = e^u the integrand is
/// e^((n + p + q + 2 + E) u) e^(-pi e^(2u)); the negative half doubles
/// it because the signs pair evenly.
fn zeta_factor(
    n: i64,
    r: i64,
    e_abs: i64,
    pq2: i64,
    prec: u32,
) -> Result<NumericResult, LocalError> {
    if (n + r).rem_euclid(2) != 0 {
        return Err(LocalError::Hypothesis("index parity mismatch".into()));
    }
    let a = f(prec, (n + pq2 + e_abs) as f64);
    let pival = pi(prec);
    let g = |u: &Float| -> Float {
        let t2 = (u.clone() * f(prec, 2.0)).exp();
        (u.clone() * &a).exp() * (-(pival.clone() * t2)).exp()
    };
    // decay: e^(a u) downward needs a > 0
    if n + pq2 + e_abs <= 0 {
        return Err(LocalError::Hypothesis("integral diverges at zero".into()));
    }
    let u_lo = f(prec, -60.0 / ((n + pq2 + e_abs) as f64).max(1.0));
    let u_hi = f(prec, 2.2);
    let coarse = integrate_real(&g, &u_lo, &u_hi, 40, 12, prec);
    let fine = integrate_real(&g, &u_lo, &u_hi, 52, 14, prec);
    let est = (fine.clone() - &coarse).abs();
    let sign = if ((n + r) / 2).rem_euclid(2) == 1 { -1.0 } else { 1.0 };
    Ok(NumericResult {
        value: fine * f(prec, 2.0 * sign),
        est_error: est * 2u32,
    })
}

/// Verify that the product of the two archimedean zeta integrals equals
/// (-1)^((p+q+r+s)/2) pi^(-2(p+q)) G(p+q)^2 to the given tolerance.
pub fn tate_arch_verify(
    p: i64,
    q: i64,
    r: i64,
    s: i64,
    prec: u32,
    tolerance: f64,
) -> Result<TateArchReport, LocalError> {
    if (p + r).rem_euclid(2) != 0 || (q + s).rem_euclid(2) != 0 {
        return Err(LocalError::Hypothesis(
            "need r = p and s = q mod 2".into(),
        ));
    }
    if p + q < 1 {
        return Err(LocalError::Hypothesis("need p + q >= 1".into()));
    }
    let pq2 = p + q + 2;
    let z1 = zeta_factor(p, r, q - 2, pq2, prec)?;
    let z2 = zeta_factor(q, s, p - 2, pq2, prec)?;
    let product = NumericResult {
        value: z1.value.clone() * &z2.value,
        est_error: z1.est_error.clone() * z2.value.clone().abs()
            + z2.est_error * z1.value.abs(),
    };
    // closed form
    let sign = if ((p + q + r + s) / 2).rem_euclid(2) == 1 {
        -1.0
    } else {
        1.0
    };
    let g = gamma_real(&fi(prec, p + q), prec)?;
    let pival = pi(prec);
    let closed = f(prec, sign) * (pival.ln() * f(prec, (-2 * (p + q)) as f64)).exp() * g.clone() * g;
    let denom = closed.clone().abs().max(&f(prec, 1e-280));
    let rel = (product.value.clone() - &closed).abs() / denom;
    Ok(TateArchReport { product, closed_form: closed, relative_difference: rel, tolerance })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_tuple() {
        // (p, q, r, s) = (6, 3, -8, 3): product = + pi^-18 G(9)^2
        let rep = tate_arch_verify(6, 3, -8, 3, 192, 1e-8).unwrap();
        assert!(rep.passed(), "rel {:?}", rep.relative_difference.to_f64());
        assert!(rep.product.value > 0);
    }

    #[test]
    fn sign_flips_with_r_shift_by_two() {
        let a = tate_arch_verify(6, 3, -8, 3, 160, 1e-8).unwrap();
        let b = tate_arch_verify(6, 3, -6, 3, 160, 1e-8).unwrap();
        assert!(a.passed() && b.passed());
        assert!(a.product.value.clone() * &b.product.value < 0);
    }

    #[test]
    fn parity_is_enforced() {
        assert!(tate_arch_verify(6, 3, -7, 3, 128, 1e-8).is_err());
    }
}
