//! The hypergeometric kernel with four upper and two lower gamma
//! factors: exact parameter bookkeeping, a vertical-contour integral as
//! the primary evaluation route, and a residue power series as the
//! independent cross-check away from the degenerate locus.

use crate::gammaz::{gamma_real, ln_gamma_complex};
use crate::real::{f, from_rat, pi, Cx, NumericResult};
use crate::LocalError;
use rug::Float;
use spin4_exact::Rat;

/// The six exact kernel parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MeijerParams {
    pub a1: Rat,
    pub a2: Rat,
    pub c1: Rat,
    pub c2: Rat,
    pub c3: Rat,
    pub c4: Rat,
}

impl MeijerParams {
    pub fn cs(&self) -> [&Rat; 4] {
        [&self.c1, &self.c2, &self.c3, &self.c4]
    }

    pub fn az(&self) -> [&Rat; 2] {
        [&self.a1, &self.a2]
    }

    /// True when some pair of upper parameters differs by an integer,
    /// which degenerates the residue series.
    pub fn has_integer_c_differences(&self) -> bool {
        let cs = self.cs();
        for i in 0..4 {
            for j in (i + 1)..4 {
                let d = cs[i] - cs[j];
                if d.is_integer() {
                    return true;
                }
            }
        }
        false
    }
}

/// Exact parameters from the minimal-type pair, the ladder index, and
/// the two symmetric-power degrees:
/// a1 = (t - l2 - (q-p)/2 + 2)/2,  a2 = (2 l1 + l2 - t + (q-p)/2 + 2)/2,
/// c = (l1 +- l2 + {4, 2})/4.
pub fn meijer_params(lambda1: i64, lambda2: i64, t: i64, p: i64, q: i64) -> MeijerParams {
    MeijerParams {
        a1: Rat::new(2 * (t - lambda2 + 2) - (q - p), 4),
        a2: Rat::new(2 * (2 * lambda1 + lambda2 - t + 2) + (q - p), 4),
        c1: Rat::new(lambda1 + lambda2 + 4, 4),
        c2: Rat::new(lambda1 - lambda2 + 4, 4),
        c3: Rat::new(lambda1 + lambda2 + 2, 4),
        c4: Rat::new(lambda1 - lambda2 + 2, 4),
    }
}

/// The archimedean weight rule: the local integral vanishes unless
/// both t + l2 + r and -t + l1 + s are zero.
pub fn arch_vanishing(t: i64, lambda1: i64, lambda2: i64, r: i64, s: i64) -> bool {
    spin4_core::pairing::integrand_vanishes(t, lambda1, lambda2, r, s)
}

fn min_c(mp: &MeijerParams) -> Rat {
    let mut m = mp.c1.clone();
    for c in [&mp.c2, &mp.c3, &mp.c4] {
        if *c < m {
            m = c.clone();
        }
    }
    m
}

/// Contour abscissa: strictly left of every upper parameter, bounded
/// away from the lower parameters so the integrand stays benign.
fn contour_abscissa(mp: &MeijerParams, prec: u32) -> Float {
    let mut x0 = &min_c(mp) - &Rat::new(1, 2);
    let too_close = |x: &Rat, mp: &MeijerParams| {
        mp.az().iter().any(|a| (*a - x).to_f64().abs() < 0.125)
    };
    let mut guard = 0;
    while too_close(&x0, mp) && guard < 64 {
        x0 = &x0 - &Rat::new(1, 7);
        guard += 1;
    }
    from_rat(prec, &x0)
}

/// ln of the kernel K(s) = prod G(c_j - s) / prod G(a_j - s).
fn ln_kernel(mp: &MeijerParams, s: &Cx, prec: u32) -> Result<Cx, LocalError> {
    let mut acc = Cx::real(prec, 0.0);
    for c in mp.cs() {
        let z = Cx::new(from_rat(prec, c) - &s.re, -s.im.clone());
        acc = acc.add(&ln_gamma_complex(&z, prec)?);
    }
    for a in mp.az() {
        let z = Cx::new(from_rat(prec, a) - &s.re, -s.im.clone());
        acc = acc.sub(&ln_gamma_complex(&z, prec)?);
    }
    Ok(acc)
}


/// Precomputed contour data: kernel values at quadrature heights. The
/// kernel does not depend on the transform argument, so one plan serves
/// any number of evaluations.
pub struct ContourPlan {
    x0: Float,
    /// (height, combined weight, kernel value)
    samples: Vec<(Float, Float, Cx)>,
    tail_magnitude: Float,
    prec: u32,
}

impl ContourPlan {
    /// Build a plan with the given nodes-per-unit refinement level and
    /// truncation height sized from the working precision.
    pub fn build(mp: &MeijerParams, prec: u32, nodes: usize) -> Result<ContourPlan, LocalError> {
        let digits = (prec as f64) * 0.3010;
        let height = ((digits * std::f64::consts::LN_10) / std::f64::consts::PI + 10.0).ceil();
        Self::build_with_height(mp, prec, nodes, height)
    }

    /// Build a plan with an explicit truncation height.
    pub fn build_with_height(
        mp: &MeijerParams,
        prec: u32,
        nodes: usize,
        height: f64,
    ) -> Result<ContourPlan, LocalError> {
        let x0 = contour_abscissa(mp, prec);
        let panels = (2.0 * height).ceil() as usize;
        let gl = crate::real::gauss_legendre(nodes, prec);
        let lo = f(prec, -height);
        let width = (f(prec, height) - &lo) / f(prec, panels as f64);
        let half = width.clone() / 2u32;
        let mut samples = Vec::with_capacity(panels * nodes);
        for p in 0..panels {
            let center = lo.clone() + width.clone() * f(prec, p as f64) + &half;
            for (xn, wn) in &gl {
                let y = center.clone() + half.clone() * xn;
                let s = Cx::new(x0.clone(), y.clone());
                let k = ln_kernel(mp, &s, prec)?.exp();
                samples.push((y, wn.clone() * &half, k));
            }
        }
        let tail_magnitude = {
            let s = Cx::new(x0.clone(), f(prec, height));
            ln_kernel(mp, &s, prec)?.exp().abs()
        };
        Ok(ContourPlan { x0, samples, tail_magnitude, prec })
    }

    /// Evaluate the transform at z > 0 using the stored kernel values.
    pub fn eval(&self, z: &Float) -> Cx {
        let prec = self.prec;
        let lnz = z.clone().ln();
        let mut acc = Cx::real(prec, 0.0);
        for (y, w, k) in &self.samples {
            // z^s = exp((x0 + iy) ln z)
            let zs = Cx::new(self.x0.clone() * &lnz, y.clone() * &lnz).exp();
            acc = acc.add(&k.mul(&zs).scale(w));
        }
        let two_pi = pi(prec) * 2u32;
        acc.scale(&(f(prec, 1.0) / two_pi))
    }

    /// Magnitude bound for the truncated tail at argument z.
    pub fn tail_estimate(&self, z: &Float) -> Float {
        let prec = self.prec;
        let lnz = z.clone().ln();
        self.tail_magnitude.clone() * (self.x0.clone() * lnz).exp() / pi(prec)
    }
}

/// Vertical-contour evaluation of the kernel transform at z > 0.
///
/// The integrand decays like exp(-pi |y|) in the contour height, so the
/// truncation height comes from the target precision; the estimated
/// error combines a tail bound with a node-refinement difference.
pub fn meijer_g(z: &Float, mp: &MeijerParams, prec: u32) -> Result<NumericResult, LocalError> {
    let coarse_plan = ContourPlan::build(mp, prec, 12)?;
    let fine_plan = ContourPlan::build(mp, prec, 18)?;
    let coarse = coarse_plan.eval(z);
    let value = fine_plan.eval(z);
    let node_err = value.sub(&coarse).abs();
    let est = node_err + fine_plan.tail_estimate(z);
    if !value.is_finite() {
        return Err(LocalError::PrecisionFailure("contour integral overflowed".into()));
    }
    let im_ratio = value.im.clone().abs() / value.re.clone().abs().max(&f(prec, 1e-280));
    if im_ratio > f(prec, 1e-12) {
        return Err(LocalError::PrecisionFailure(format!(
            "imaginary part too large: {:?}",
            im_ratio.to_f64()
        )));
    }
    Ok(NumericResult { value: value.re, est_error: est })
}

/// Residue power series: sum over the poles of the four upper gamma
/// factors, with terms updated by the one-step gamma recursion.
///
/// When two upper parameters differ by an integer the raw series
/// degenerates; the parameters are then shifted by distinct exact
/// dyadic offsets j * 2^-64 and the working precision is raised to
/// absorb the induced near-cancellation, which approximates the limit
/// value to well below the reporting tolerance.
pub fn meijer_g_series(
    z: &Float,
    mp: &MeijerParams,
    prec: u32,
) -> Result<NumericResult, LocalError> {
    let zf = z.to_f64();
    if zf <= 0.0 {
        return Err(LocalError::UnsupportedArgument("argument must be positive".into()));
    }
    // cancellation budget: the alternating sum peaks exp(2 sqrt z)
    // above the result
    let cancel_bits = (2.0 * zf.sqrt() * 1.4427).ceil() as u32;
    let degenerate = mp.has_integer_c_differences();
    let eps_bits: u32 = 64;
    let work = prec + cancel_bits + if degenerate { 2 * eps_bits } else { 0 } + 32;

    // perturbed parameters as exact rationals
    let eps = if degenerate {
        Rat::one() / Rat::from_i64(2).pow(eps_bits as i32)
    } else {
        Rat::zero()
    };
    let cs: Vec<Rat> = mp
        .cs()
        .iter()
        .enumerate()
        .map(|(j, c)| *c + &(&eps * &Rat::from_i64(j as i64 + 1)))
        .collect();
    let az = [mp.a1.clone(), mp.a2.clone()];

    let lnz = Float::with_val(work, z).ln();
    let mut total = f(work, 0.0);
    let mut peak = f(work, 0.0);
    for j in 0..4 {
        let cj = &cs[j];
        // t_0 = z^c_j prod_{l != j} G(c_l - c_j) / prod_m G(a_m - c_j)
        let mut t = (lnz.clone() * from_rat(work, cj)).exp();
        let mut dl: Vec<Float> = Vec::new(); // c_l - c_j - n trackers
        for (l, cl) in cs.iter().enumerate() {
            if l == j {
                continue;
            }
            let d = cl - cj;
            t *= gamma_real(&from_rat(work, &d), work)?;
            dl.push(from_rat(work, &d));
        }
        let mut em: Vec<Float> = Vec::new();
        for a in &az {
            let e = a - cj;
            let ef = from_rat(work, &e);
            // a pole of a lower gamma makes the whole branch start at a
            // later index; handle by zeroing through the recursion
            match gamma_real(&ef, work) {
                Ok(g) => t /= g,
                Err(_) => t = f(work, 0.0),
            }
            em.push(ef);
        }
        // term recursion:
        // t_{n+1} = t_n * (-z) / (n+1) * prod_m (e_m - n - 1)
        //           / prod_l (d_l - n - 1)
        let mut branch = t.clone();
        let mut t_abs = t.clone().abs();
        if t_abs > peak {
            peak = t_abs.clone();
        }
        let zneg = -Float::with_val(work, z);
        let n_min = (2.4 * zf.sqrt()) as i64 + 12;
        let mut n = 0i64;
        loop {
            let mut factor = zneg.clone() / f(work, (n + 1) as f64);
            for e in &em {
                factor *= e.clone() - f(work, (n + 1) as f64);
            }
            for d in &dl {
                let den = d.clone() - f(work, (n + 1) as f64);
                if den.is_zero() {
                    return Err(LocalError::DegenerateParameters(
                        "residue series hit an exact pole".into(),
                    ));
                }
                factor /= den;
            }
            t *= factor;
            branch += &t;
            t_abs = t.clone().abs();
            if t_abs > peak {
                peak = t_abs.clone();
            }
            n += 1;
            if n > n_min {
                let cutoff = {
                    let mut c = peak.clone();
                    c >>= work - 8;
                    c
                };
                if t_abs < cutoff {
                    break;
                }
            }
            if n > 2_000_000 {
                return Err(LocalError::PrecisionFailure(
                    "residue series did not converge".into(),
                ));
            }
        }
        total += branch;
    }
    // error: truncation is below the working noise floor; report the
    // cancellation-adjusted roundoff level plus the perturbation bias
    let mut noise = peak.clone();
    noise >>= work - 16;
    if degenerate {
        let mut bias = total.clone().abs();
        bias >>= eps_bits - 12;
        noise += bias;
    }
    let out = Float::with_val(prec, &total);
    if !out.is_finite() {
        return Err(LocalError::PrecisionFailure("series overflowed".into()));
    }
    let est = Float::with_val(prec, &noise);
    Ok(NumericResult { value: out, est_error: est })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parameter_formulas() {
        // worked values at (l1, l2, t, p, q) = (10, -5, 13, 6, 3)
        let mp = meijer_params(10, -5, 13, 6, 3);
        assert_eq!(mp.a1, Rat::new(43, 4));
        assert_eq!(mp.c1, Rat::new(9, 4));
        assert_eq!(&mp.c2 - &mp.c4, Rat::new(1, 2));
        assert_eq!(&mp.c1 - &mp.c3, Rat::new(1, 2));
        assert_eq!(mp.a2, Rat::new(5, 4));
    }

    #[test]
    fn vanishing_rule() {
        assert!(!arch_vanishing(13, 10, -5, -8, 3)); // survivor
        assert!(arch_vanishing(13, 10, -5, -6, 3));
        assert!(arch_vanishing(12, 10, -5, -8, 3));
    }

    #[test]
    fn contour_and_series_agree_on_generic_parameters() {
        let prec = 160;
        let mp = MeijerParams {
            a1: Rat::new(17, 3),
            a2: Rat::new(7, 5),
            c1: Rat::new(11, 7),
            c2: Rat::new(9, 4),
            c3: Rat::new(6, 5),
            c4: Rat::new(5, 3),
        };
        assert!(!mp.has_integer_c_differences());
        for zv in [0.5f64, 2.0, 9.87] {
            let z = f(prec, zv);
            let a = meijer_g(&z, &mp, prec).unwrap();
            let b = meijer_g_series(&z, &mp, prec).unwrap();
            let denom = a.value.clone().abs();
            let rel = (a.value.clone() - &b.value).abs() / denom;
            assert!(rel < f(prec, 1e-10), "z={} rel={:?}", zv, rel.to_f64());
        }
    }

    #[test]
    fn degenerate_parameters_use_the_perturbed_series() {
        let mp = meijer_params(10, -5, 13, 6, 3);
        // c1 - c4 = (9 - 17)/4 = -2: integer difference present
        assert!(mp.has_integer_c_differences());
        let prec = 160;
        let z = f(prec, 3.0);
        let a = meijer_g(&z, &mp, prec).unwrap();
        let b = meijer_g_series(&z, &mp, prec).unwrap();
        let rel = (a.value.clone() - &b.value).abs() / a.value.clone().abs();
        assert!(rel < f(prec, 1e-10), "rel={:?}", rel.to_f64());
    }
}
