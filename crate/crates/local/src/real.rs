//! Thin arbitrary-precision layer: real numbers from MPFR, a complex
//! pair type on top, and Gauss-Legendre panel quadrature with cached
//! nodes. Precision is explicit everywhere; results carry estimated
//! errors from refinement differences, never guesses.

use rug::float::Constant;
use rug::Float;
use spin4_exact::Rat;
use std::collections::HashMap;
use std::sync::Mutex;
use std::sync::OnceLock;

pub fn f(prec: u32, v: f64) -> Float {
    Float::with_val(prec, v)
}

pub fn fi(prec: u32, v: i64) -> Float {
    Float::with_val(prec, v)
}

pub fn pi(prec: u32) -> Float {
    Float::with_val(prec, Constant::Pi)
}

pub fn from_rat(prec: u32, r: &Rat) -> Float {
    let n = Float::with_val(prec, Float::parse(r.numer().to_string()).unwrap());
    let d = Float::with_val(prec, Float::parse(r.denom().to_string()).unwrap());
    n / d
}

/// Complex number as a pair of floats at a common precision.
#[derive(Debug, Clone)]
pub struct Cx {
    pub re: Float,
    pub im: Float,
}

impl Cx {
    pub fn new(re: Float, im: Float) -> Self {
        Cx { re, im }
    }

    pub fn real(prec: u32, v: f64) -> Self {
        Cx { re: f(prec, v), im: f(prec, 0.0) }
    }

    pub fn prec(&self) -> u32 {
        self.re.prec()
    }

    pub fn add(&self, o: &Cx) -> Cx {
        Cx::new(self.re.clone() + &o.re, self.im.clone() + &o.im)
    }

    pub fn sub(&self, o: &Cx) -> Cx {
        Cx::new(self.re.clone() - &o.re, self.im.clone() - &o.im)
    }

    pub fn mul(&self, o: &Cx) -> Cx {
        let re = self.re.clone() * &o.re - self.im.clone() * &o.im;
        let im = self.re.clone() * &o.im + self.im.clone() * &o.re;
        Cx::new(re, im)
    }

    pub fn scale(&self, s: &Float) -> Cx {
        Cx::new(self.re.clone() * s, self.im.clone() * s)
    }

    pub fn neg(&self) -> Cx {
        Cx::new(-self.re.clone(), -self.im.clone())
    }

    pub fn div(&self, o: &Cx) -> Cx {
        let d = o.norm_sq();
        let re = (self.re.clone() * &o.re + self.im.clone() * &o.im) / &d;
        let im = (self.im.clone() * &o.re - self.re.clone() * &o.im) / &d;
        Cx::new(re, im)
    }

    pub fn norm_sq(&self) -> Float {
        self.re.clone() * &self.re + self.im.clone() * &self.im
    }

    pub fn abs(&self) -> Float {
        self.norm_sq().sqrt()
    }

    /// Principal logarithm.
    pub fn ln(&self) -> Cx {
        let r = self.norm_sq().ln() / 2u32;
        let theta = self.im.clone().atan2(&self.re);
        Cx::new(r, theta)
    }

    pub fn exp(&self) -> Cx {
        let m = self.re.clone().exp();
        let c = self.im.clone().cos();
        let s = self.im.clone().sin();
        Cx::new(m.clone() * c, m * s)
    }

    pub fn inv(&self) -> Cx {
        let d = self.norm_sq();
        Cx::new(self.re.clone() / &d, -(self.im.clone() / &d))
    }

    pub fn is_finite(&self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }
}

/// Gauss-Legendre nodes and weights on [-1, 1], cached per (n, prec).
pub fn gauss_legendre(n: usize, prec: u32) -> Vec<(Float, Float)> {
    static HP: OnceLock<Mutex<HashMap<(usize, u32), Vec<(Float, Float)>>>> = OnceLock::new();
    let cache = HP.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(v) = cache.lock().unwrap().get(&(n, prec)) {
        return v.clone();
    }
    let mut out = Vec::with_capacity(n);
    let pi_v = pi(prec);
    let eps = {
        let mut e = f(prec, 1.0);
        e >>= (prec - 8) as u32; // 2^-(prec-8)
        e
    };
    for i in 1..=n {
        let mut x = -(pi_v.clone() * f(prec, (i as f64) - 0.25) / f(prec, n as f64 + 0.5)).cos();
        for _ in 0..80 {
            let (p, dp) = legendre_and_derivative(n, &x, prec);
            let step = p / dp;
            x -= &step;
            if step.abs() < eps {
                break;
            }
        }
        let (_, dp) = legendre_and_derivative(n, &x, prec);
        let one_minus = f(prec, 1.0) - x.clone() * &x;
        let w = f(prec, 2.0) / (one_minus * dp.clone() * dp);
        out.push((x, w));
    }
    cache.lock().unwrap().insert((n, prec), out.clone());
    out
}

fn legendre_and_derivative(n: usize, x: &Float, prec: u32) -> (Float, Float) {
    let mut p0 = f(prec, 1.0);
    let mut p1 = x.clone();
    for k in 1..n {
        let a = (p1.clone() * x * f(prec, (2 * k + 1) as f64) - p0.clone() * f(prec, k as f64))
            / f(prec, (k + 1) as f64);
        p0 = p1;
        p1 = a;
    }
    // P'_n = n (x P_n - P_{n-1}) / (x^2 - 1)
    let num = (x.clone() * &p1 - &p0) * f(prec, n as f64);
    let den = x.clone() * x - f(prec, 1.0);
    (p1, num / den)
}

/// Composite Gauss-Legendre integral of a complex-valued function over
/// [lo, hi] with `panels` panels of `nodes` nodes each.
pub fn integrate_complex<F: Fn(&Float) -> Cx>(
    g: &F,
    lo: &Float,
    hi: &Float,
    panels: usize,
    nodes: usize,
    prec: u32,
) -> Cx {
    let gl = gauss_legendre(nodes, prec);
    let width = (hi.clone() - lo) / f(prec, panels as f64);
    let half = width.clone() / 2u32;
    let mut acc = Cx::real(prec, 0.0);
    for p in 0..panels {
        let center = lo.clone() + width.clone() * f(prec, p as f64) + &half;
        for (x, w) in &gl {
            let t = center.clone() + half.clone() * x;
            let v = g(&t);
            acc = acc.add(&v.scale(&(w.clone() * &half)));
        }
    }
    acc
}

/// Composite Gauss-Legendre integral of a real function.
pub fn integrate_real<F: Fn(&Float) -> Float>(
    g: &F,
    lo: &Float,
    hi: &Float,
    panels: usize,
    nodes: usize,
    prec: u32,
) -> Float {
    let gl = gauss_legendre(nodes, prec);
    let width = (hi.clone() - lo) / f(prec, panels as f64);
    let half = width.clone() / 2u32;
    let mut acc = f(prec, 0.0);
    for p in 0..panels {
        let center = lo.clone() + width.clone() * f(prec, p as f64) + &half;
        for (x, w) in &gl {
            let t = center.clone() + half.clone() * x;
            acc += g(&t) * (w.clone() * &half);
        }
    }
    acc
}

/// A numeric value with a refinement-based error estimate.
#[derive(Debug, Clone)]
pub struct NumericResult {
    pub value: Float,
    pub est_error: Float,
}

impl NumericResult {
    pub fn relative_error_below(&self, tol: f64) -> bool {
        let denom = self.value.clone().abs().max(&f(self.value.prec(), 1e-300));
        (self.est_error.clone() / denom) < f(self.value.prec(), tol)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gauss_legendre_integrates_polynomials_exactly() {
        let prec = 128;
        // integral of x^6 over [0, 1] = 1/7
        let v = integrate_real(
            &|x: &Float| {
                let x2 = x.clone() * x;
                x2.clone() * &x2 * x2
            },
            &f(prec, 0.0),
            &f(prec, 1.0),
            2,
            8,
            prec,
        );
        let want = f(prec, 1.0) / f(prec, 7.0);
        let diff = (v - want).abs();
        assert!(diff < f(prec, 1e-30), "{:?}", diff);
    }

    #[test]
    fn gaussian_normalization() {
        // integral of exp(-pi y^2) over R is 1
        let prec = 192;
        let p = pi(prec);
        let v = integrate_real(
            &|y: &Float| (-(y.clone() * y * &p)).exp(),
            &f(prec, -12.0),
            &f(prec, 12.0),
            48,
            16,
            prec,
        );
        let diff = (v - f(prec, 1.0)).abs();
        assert!(diff < f(prec, 1e-30), "{:?}", diff);
    }

    #[test]
    fn complex_exp_ln_roundtrip() {
        let prec = 128;
        let z = Cx::new(f(prec, 1.25), f(prec, -2.5));
        let w = z.ln().exp();
        assert!((w.re - z.re).abs() < f(prec, 1e-30));
        assert!((w.im - z.im).abs() < f(prec, 1e-30));
    }
}
