//! Gamma function at controlled precision: the asymptotic series with
//! exact Bernoulli coefficients, argument shifting into the validity
//! region, and real reflection for negative arguments.

use crate::real::{f, fi, from_rat, pi, Cx};
use crate::LocalError;
use rug::Float;
use spin4_exact::Rat;
use std::sync::OnceLock;

/// Exact even-index Bernoulli numbers B_2, B_4, ..., up to index 200.
fn bernoulli_even() -> &'static Vec<Rat> {
    static CELL: OnceLock<Vec<Rat>> = OnceLock::new();
    CELL.get_or_init(|| {
        let top = 200usize;
        let mut b: Vec<Rat> = Vec::with_capacity(top + 1);
        b.push(Rat::one());
        for m in 1..=top {
            // B_m = -1/(m+1) sum_{j<m} C(m+1, j) B_j
            let mut acc = Rat::zero();
            for (j, bj) in b.iter().enumerate() {
                acc += &Rat::binomial(m as i64 + 1, j as i64) * bj;
            }
            let v = -(Rat::one() / Rat::from_i64(m as i64 + 1)) * acc;
            b.push(v);
        }
        (1..=top / 2).map(|n| b[2 * n].clone()).collect()
    })
}

fn series_terms_for(prec: u32) -> (f64, usize) {
    // threshold and term count chosen so the first omitted term is
    // below 2^-(prec+8) for |z| at the threshold
    if prec <= 160 {
        (32.0, 40)
    } else if prec <= 256 {
        (48.0, 56)
    } else if prec <= 384 {
        (64.0, 72)
    } else {
        (96.0, 96)
    }
}

/// Principal log-gamma for complex z with Re(z) > 0 (after internal
/// shifting). Accurate to roughly the working precision.
pub fn ln_gamma_complex(z: &Cx, prec: u32) -> Result<Cx, LocalError> {
    let (threshold, nterms) = series_terms_for(prec);
    let mut shift = 0u32;
    let mut zs = z.clone();
    // shift until |z| is comfortably inside the asymptotic region; for
    // contour arguments the imaginary part already helps
    while zs.re < f(prec, threshold) && zs.abs() < f(prec, threshold) {
        shift += 1;
        zs = Cx::new(z.re.clone() + fi(prec, shift as i64), z.im.clone());
        if shift > 4000 {
            return Err(LocalError::PrecisionFailure("gamma shift diverged".into()));
        }
    }
    if zs.abs() < f(prec, 1e-40) {
        return Err(LocalError::UnsupportedArgument("log-gamma at a pole".into()));
    }
    // Stirling: (z-1/2) ln z - z + ln(2 pi)/2 + sum B_2n / (2n(2n-1) z^(2n-1))
    let lnz = zs.ln();
    let half = f(prec, 0.5);
    let zmh = Cx::new(zs.re.clone() - &half, zs.im.clone());
    let mut acc = zmh.mul(&lnz).sub(&zs);
    let two_pi = (pi(prec) * f(prec, 2.0)).ln() / 2u32;
    acc = acc.add(&Cx::new(two_pi, f(prec, 0.0)));
    let zinv = zs.inv();
    let zinv2 = zinv.mul(&zinv);
    let mut zpow = zinv.clone();
    let bern = bernoulli_even();
    for n in 1..=nterms {
        let b = from_rat(prec, &bern[n - 1]);
        let denom = fi(prec, (2 * n as i64) * (2 * n as i64 - 1));
        let term = zpow.scale(&(b / denom));
        acc = acc.add(&term);
        zpow = zpow.mul(&zinv2);
    }
    // undo the shift: ln G(z) = ln G(z + m) - sum ln(z + j)
    for j in 0..shift {
        let zj = Cx::new(z.re.clone() + fi(prec, j as i64), z.im.clone());
        if zj.abs() < f(prec, 1e-200) {
            return Err(LocalError::UnsupportedArgument("log-gamma at a pole".into()));
        }
        acc = acc.sub(&zj.ln());
    }
    Ok(acc)
}

/// Real gamma for any non-pole real argument, via the complex series
/// and the reflection formula on the negative axis.
pub fn gamma_real(x: &Float, prec: u32) -> Result<Float, LocalError> {
    if *x > 0 {
        let lg = ln_gamma_complex(&Cx::new(x.clone(), f(prec, 0.0)), prec)?;
        return Ok(lg.re.exp());
    }
    // poles at non-positive integers
    let nearest = x.clone().round();
    if (x.clone() - &nearest).abs() < f(prec, 1e-60) {
        return Err(LocalError::UnsupportedArgument(format!(
            "gamma pole at {}",
            x.to_f64()
        )));
    }
    // reflection: G(x) = pi / (sin(pi x) G(1 - x))
    let p = pi(prec);
    let sinpix = (p.clone() * x).sin();
    let one_minus = f(prec, 1.0) - x;
    let g = gamma_real(&one_minus, prec)?;
    Ok(p / (sinpix * g))
}

/// Gamma at an exact rational argument.
pub fn gamma_rat(r: &Rat, prec: u32) -> Result<Float, LocalError> {
    gamma_real(&from_rat(prec, r), prec)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matches_factorials_and_half_integers() {
        let prec = 256;
        // integers: G(n) = (n-1)!
        for n in 1..=30u64 {
            let g = gamma_real(&fi(prec, n as i64), prec).unwrap();
            let want = from_rat(prec, &Rat::factorial(n - 1));
            let rel = ((g.clone() - &want) / &want).abs();
            assert!(rel < f(prec, 1e-60), "n={} rel={:?}", n, rel);
        }
        // half-integers: G(n + 1/2) = (2n)! sqrt(pi) / (4^n n!)
        let sqrt_pi = pi(prec).sqrt();
        for n in 0..=29u64 {
            let x = fi(prec, n as i64) + f(prec, 0.5);
            let g = gamma_real(&x, prec).unwrap();
            let coef = &(&Rat::factorial(2 * n) / &Rat::from_i64(4).pow(n as i32))
                / &Rat::factorial(n);
            let want = from_rat(prec, &coef) * &sqrt_pi;
            let rel = ((g.clone() - &want) / &want).abs();
            assert!(rel < f(prec, 1e-60), "n={} rel={:?}", n, rel);
        }
    }

    #[test]
    fn reflection_on_negative_axis() {
        let prec = 192;
        // G(-1/2) = -2 sqrt(pi)
        let g = gamma_real(&f(prec, -0.5), prec).unwrap();
        let want = pi(prec).sqrt() * f(prec, -2.0);
        let rel = ((g.clone() - &want) / &want).abs();
        assert!(rel < f(prec, 1e-45));
        assert!(gamma_real(&f(prec, -3.0), prec).is_err());
    }

    #[test]
    fn complex_recurrence_consistency() {
        // ln G(z+1) - ln G(z) = ln z (mod 2 pi i; arguments here stay
        // principal)
        let prec = 192;
        let z = Cx::new(f(prec, 2.3), f(prec, 7.1));
        let z1 = Cx::new(f(prec, 3.3), f(prec, 7.1));
        let a = ln_gamma_complex(&z, prec).unwrap();
        let b = ln_gamma_complex(&z1, prec).unwrap();
        let d = b.sub(&a).sub(&z.ln());
        assert!(d.abs() < f(prec, 1e-45), "{:?}", d.abs());
    }

    #[test]
    fn complex_conjugate_symmetry() {
        let prec = 160;
        let z = Cx::new(f(prec, 1.75), f(prec, 3.25));
        let zc = Cx::new(f(prec, 1.75), f(prec, -3.25));
        let a = ln_gamma_complex(&z, prec).unwrap();
        let b = ln_gamma_complex(&zc, prec).unwrap();
        assert!((a.re.clone() - b.re.clone()).abs() < f(prec, 1e-40));
        assert!((a.im.clone() + b.im.clone()).abs() < f(prec, 1e-40));
    }
}
