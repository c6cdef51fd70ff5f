//! The transform identity connecting the kernel to its closed gamma
//! form: quadrature of the radial profile against the closed-form
//! product evaluated at the special shift.

use crate::gammaz::gamma_rat;
use crate::meijer::{meijer_g_series, meijer_params, MeijerParams};
use crate::real::{f, from_rat, integrate_real, pi, NumericResult};
use crate::LocalError;
use rug::Float;
use spin4_exact::Rat;

/// Report of one transform verification.
#[derive(Debug, Clone)]
pub struct MellinReport {
    pub quadrature: NumericResult,
    pub closed_form: Float,
    pub relative_difference: Float,
    pub tolerance: f64,
}

impl MellinReport {
    pub fn passed(&self) -> bool {
        self.relative_difference.to_f64().abs() <= self.tolerance
    }
}

/// The closed form: (1/2) pi^-(3(p+q)+6)/2 * prod G(c_j + sig) / prod
/// G(a_j + sig) with sig = (3(p+q)+6)/4.
pub fn mellin_closed_form(mp: &MeijerParams, p: i64, q: i64, prec: u32) -> Result<Float, LocalError> {
    let sigma = Rat::new(3 * (p + q) + 6, 4);
    let mut acc = f(prec, 0.5);
    let exp_pi = Rat::new(-(3 * (p + q) + 6), 2);
    let pival = pi(prec);
    let lnpi = pival.ln();
    acc *= (lnpi * from_rat(prec, &exp_pi)).exp();
    for c in mp.cs() {
        acc *= gamma_rat(&(c + &sigma), prec)?;
    }
    for a in mp.az() {
        acc /= gamma_rat(&(a + &sigma), prec)?;
    }
    Ok(acc)
}

/// Quadrature of the radial integral int_0^inf x^(3(p+q)/2 + 2)
/// G((pi x)^2) dx on a log grid, with refinement-based error estimate.
///
/// The contour kernel is sampled once per refinement level and reused
/// across all radial nodes.
pub fn mellin_quadrature(
    mp: &MeijerParams,
    p: i64,
    q: i64,
    prec: u32,
) -> Result<NumericResult, LocalError> {
    // substitute x = e^u: integrand e^(A u) G(pi^2 e^(2u)) with
    // A = 3(p+q)/2 + 3 (the measure dx contributes one power).
    let a = 3.0 * ((p + q) as f64) / 2.0 + 3.0;
    let two_pi = 2.0 * std::f64::consts::PI;
    // peak of A u - 2 pi e^u, and the height u_hi where the integrand
    // has dropped 18 digits below the peak
    let u_peak = (a / two_pi).ln();
    let peak = a * u_peak - a;
    let drop = peak - 18.0 * std::f64::consts::LN_10;
    let mut u_hi = u_peak.max(0.0) + 0.5;
    for _ in 0..400 {
        if a * u_hi - two_pi * u_hi.exp() < drop {
            break;
        }
        u_hi += 0.05;
    }
    let a_exp = f(prec, a);
    let pival = pi(prec);
    let pisq = pival.clone() * &pival;
    let u_lo = f(prec, -6.0);
    let u_hi_f = f(prec, u_hi);
    let g = |u: &Float| -> Float {
        let z = pisq.clone() * (u.clone() * f(prec, 2.0)).exp();
        match meijer_g_series(&z, mp, prec) {
            Ok(r) => (u.clone() * &a_exp).exp() * r.value,
            Err(_) => f(prec, 0.0),
        }
    };
    let panels = (u_hi + 7.0).ceil() as usize * 2;
    let coarse = integrate_real(&g, &u_lo, &u_hi_f, panels, 10, prec);
    let fine = integrate_real(&g, &u_lo, &u_hi_f, panels + panels / 2, 12, prec);
    let est = (fine.clone() - &coarse).abs();
    Ok(NumericResult { value: fine, est_error: est })
}

/// Verify the transform identity for the surviving-term parameters of
/// one weight pair (k odd, k' even, k > k' > 0).
pub fn mellin_verify(k: i64, kp: i64, prec: u32, tolerance: f64) -> Result<MellinReport, LocalError> {
    if !(k > kp && kp > 0) || (k + 1).rem_euclid(2) != 0 || kp.rem_euclid(2) != 0 {
        return Err(LocalError::Hypothesis(
            "need k odd, k' even, k > k' > 0".into(),
        ));
    }
    let (p, q) = (k - 1, kp - 1);
    let (l1, l2) = (k + 3, -kp - 1);
    let t = kp + p + 3;
    let mp = meijer_params(l1, l2, t, p, q);
    mellin_verify_params(&mp, p, q, prec, tolerance)
}

/// Verify the transform identity for explicit parameters.
pub fn mellin_verify_params(
    mp: &MeijerParams,
    p: i64,
    q: i64,
    prec: u32,
    tolerance: f64,
) -> Result<MellinReport, LocalError> {
    let quad = mellin_quadrature(mp, p, q, prec)?;
    let closed = mellin_closed_form(mp, p, q, prec)?;
    let denom = closed.clone().abs().max(&f(prec, 1e-280));
    let rel = (quad.value.clone() - &closed).abs() / denom;
    Ok(MellinReport {
        quadrature: quad,
        closed_form: closed,
        relative_difference: rel,
        tolerance,
    })
}
