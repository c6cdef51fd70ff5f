//! Irreducible unitary modules in their standard basis.
//!
//! The module with highest pair (a, b) has dimension d + 1 = a - b + 1
//! and a basis v_0..v_d on which the four generators act by the integer
//! coefficient formulas below; these exact integers drive the factorial
//! identities used by the pairing constants.

use crate::CoreError;
use spin4_exact::Rat;

/// A standard-basis module for the maximal compact group.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KTypeModule {
    pub a: i64,
    pub b: i64,
}

/// A vector in the module: coefficients over v_0..v_d.
pub type KVec = Vec<Rat>;

impl KTypeModule {
    pub fn new(a: i64, b: i64) -> Result<Self, CoreError> {
        if a < b {
            return Err(CoreError::NotDominant { k: a, kp: b });
        }
        Ok(KTypeModule { a, b })
    }

    pub fn dim(&self) -> usize {
        (self.a - self.b + 1) as usize
    }

    fn d(&self) -> i64 {
        self.a - self.b
    }

    pub fn basis_vector(&self, s: usize) -> KVec {
        let mut v = vec![Rat::zero(); self.dim()];
        v[s] = Rat::one();
        v
    }

    /// Weight of v_s under the two torus generators: (s + b, a - s).
    pub fn weight_of(&self, s: usize) -> (i64, i64) {
        (s as i64 + self.b, self.a - s as i64)
    }

    /// Raising: v_s -> (s + 1) v_{s+1}.
    pub fn raise(&self, v: &KVec) -> KVec {
        let mut out = vec![Rat::zero(); self.dim()];
        for (s, c) in v.iter().enumerate() {
            if !c.is_zero() && s + 1 < self.dim() {
                out[s + 1] = &out[s + 1] + &(c * &Rat::from_i64(s as i64 + 1));
            }
        }
        out
    }

    /// Lowering: v_s -> (d - s + 1) v_{s-1}.
    pub fn lower(&self, v: &KVec) -> KVec {
        let mut out = vec![Rat::zero(); self.dim()];
        for (s, c) in v.iter().enumerate() {
            if !c.is_zero() && s >= 1 {
                out[s - 1] = &out[s - 1] + &(c * &Rat::from_i64(self.d() - s as i64 + 1));
            }
        }
        out
    }

    /// First torus generator: v_s -> (s + b) v_s.
    pub fn torus1(&self, v: &KVec) -> KVec {
        v.iter()
            .enumerate()
            .map(|(s, c)| c * &Rat::from_i64(s as i64 + self.b))
            .collect()
    }

    /// Second torus generator: v_s -> (a - s) v_s.
    pub fn torus2(&self, v: &KVec) -> KVec {
        v.iter()
            .enumerate()
            .map(|(s, c)| c * &Rat::from_i64(self.a - s as i64))
            .collect()
    }
}

/// The i-th raising power applied to v_0, by iterated standard-basis
/// action: returns the coefficient vector of raise^i(v_0).
pub fn lowering_power(m: &KTypeModule, i: usize) -> Result<KVec, CoreError> {
    if i >= m.dim() {
        return Err(CoreError::IndexOutOfRange(format!(
            "power {} outside 0..={}",
            i,
            m.dim() - 1
        )));
    }
    let mut v = m.basis_vector(0);
    for _ in 0..i {
        v = m.raise(&v);
    }
    Ok(v)
}

/// The composite lower^mm raise^n applied to v_0 equals
/// [n!/(n-mm)!] [(d-n+mm)!/(d-n)!] raise^(n-mm) v_0; this evaluates the
/// coefficient on the left by matrix iteration.
pub fn raise_then_lower(m: &KTypeModule, n: usize, mm: usize) -> Result<KVec, CoreError> {
    if n >= m.dim() {
        return Err(CoreError::IndexOutOfRange(format!("n = {} too large", n)));
    }
    let mut v = m.basis_vector(0);
    for _ in 0..n {
        v = m.raise(&v);
    }
    for _ in 0..mm {
        v = m.lower(&v);
    }
    Ok(v)
}

/// The exact factorial coefficient in the identity above.
pub fn raise_lower_coefficient(d: i64, n: i64, mm: i64) -> Rat {
    // n!/(n-mm)! * (d-n+mm)!/(d-n)!
    let a = Rat::falling(n, mm as u32);
    let b = Rat::falling(d - n + mm, mm as u32);
    &a * &b
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_step_identity() {
        // lower(raise(v0)) = d v0
        let m = KTypeModule::new(7, -3).unwrap(); // d = 10
        let v = raise_then_lower(&m, 1, 1).unwrap();
        assert_eq!(v[0], Rat::from_i64(10));
        for c in &v[1..] {
            assert!(c.is_zero());
        }
    }

    #[test]
    fn zero_step_is_identity() {
        let m = KTypeModule::new(4, 0).unwrap();
        let v = raise_then_lower(&m, 2, 0).unwrap();
        let w = lowering_power(&m, 2).unwrap();
        assert_eq!(v, w);
    }

    #[test]
    fn factorial_identity_holds_everywhere() {
        for (a, b) in [(5i64, -5i64), (8, 0), (10, -4)] {
            let m = KTypeModule::new(a, b).unwrap();
            let d = a - b;
            for n in 0..m.dim() {
                for mm in 0..=n {
                    let lhs = raise_then_lower(&m, n, mm).unwrap();
                    let coef = raise_lower_coefficient(d, n as i64, mm as i64);
                    let base = lowering_power(&m, n - mm).unwrap();
                    let want: KVec = base.iter().map(|c| c * &coef).collect();
                    assert_eq!(lhs, want, "d={} n={} m={}", d, n, mm);
                }
            }
        }
    }

    #[test]
    fn two_step_example() {
        // d = 10, n = m = 2: coefficient 2!/0! * (10)!/(8)! = 2 * 90 = 180
        let m = KTypeModule::new(5, -5).unwrap();
        let v = raise_then_lower(&m, 2, 2).unwrap();
        assert_eq!(v[0], Rat::from_i64(180));
        assert_eq!(raise_lower_coefficient(10, 2, 2), Rat::from_i64(180));
    }

    #[test]
    fn out_of_range_power() {
        let m = KTypeModule::new(2, 0).unwrap();
        assert!(lowering_power(&m, 3).is_err());
    }

    #[test]
    fn weights_follow_the_ladder() {
        let m = KTypeModule::new(3, -1).unwrap();
        assert_eq!(m.weight_of(0), (-1, 3));
        assert_eq!(m.weight_of(4), (3, -1));
        // raising shifts weight by (1, -1)
        for s in 0..m.dim() - 1 {
            let (w1, w2) = m.weight_of(s);
            assert_eq!(m.weight_of(s + 1), (w1 + 1, w2 - 1));
        }
    }
}
