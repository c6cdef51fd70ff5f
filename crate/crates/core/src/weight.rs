//! Characters of the diagonal torus and of the compact torus.
//!
//! Both are triples of integers subject to the parity constraint
//! k + k' = c (mod 2); the half-integer twist exponent (c-k-k')/2 is
//! stored implicitly by that constraint. Parity violation is a
//! constructor error, never a silent normalization.

use crate::CoreError;

/// Algebraic torus character lambda(k, k', c).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    k: i64,
    kp: i64,
    c: i64,
}

impl Weight {
    pub fn new(k: i64, kp: i64, c: i64) -> Result<Self, CoreError> {
        if (k + kp - c).rem_euclid(2) != 0 {
            return Err(CoreError::ParityViolation { k, kp, c });
        }
        Ok(Weight { k, kp, c })
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    pub fn kp(&self) -> i64 {
        self.kp
    }

    pub fn c(&self) -> i64 {
        self.c
    }

    pub fn is_dominant(&self) -> bool {
        self.k >= self.kp && self.kp >= 0
    }

    pub fn is_strictly_dominant(&self) -> bool {
        self.k > self.kp && self.kp > 0
    }

    /// Twist exponent (c - k - k')/2 of the similitude character.
    pub fn twist(&self) -> i64 {
        (self.c - self.k - self.kp) / 2
    }
}

impl std::fmt::Display for Weight {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "lambda({}, {}, {})", self.k, self.kp, self.c)
    }
}

/// Compact torus character lambda'(n, n', c).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CompactWeight {
    n: i64,
    np: i64,
    c: i64,
}

impl CompactWeight {
    pub fn new(n: i64, np: i64, c: i64) -> Result<Self, CoreError> {
        if (n + np - c).rem_euclid(2) != 0 {
            return Err(CoreError::ParityViolation { k: n, kp: np, c });
        }
        Ok(CompactWeight { n, np, c })
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    pub fn np(&self) -> i64 {
        self.np
    }

    pub fn c(&self) -> i64 {
        self.c
    }
}

impl std::fmt::Display for CompactWeight {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "lambda'({}, {}, {})", self.n, self.np, self.c)
    }
}

/// Contragredient: a dominant lambda(k, k', c) dualizes to lambda(k, k', -c).
pub fn contragredient(lam: Weight) -> Result<Weight, CoreError> {
    if !lam.is_dominant() {
        return Err(CoreError::NotDominant { k: lam.k, kp: lam.kp });
    }
    Weight::new(lam.k, lam.kp, -lam.c)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parity_is_enforced() {
        assert!(Weight::new(1, 0, 0).is_err());
        assert!(Weight::new(1, 0, 1).is_ok());
        assert!(CompactWeight::new(2, 1, 0).is_err());
    }

    #[test]
    fn contragredient_negates_central_exponent() {
        let w = Weight::new(5, 2, 11).unwrap();
        assert_eq!(contragredient(w).unwrap(), Weight::new(5, 2, -11).unwrap());
        let sd = Weight::new(0, 0, 0).unwrap();
        assert_eq!(contragredient(sd).unwrap(), sd);
        let std_rep = Weight::new(1, 0, 1).unwrap();
        assert_eq!(
            contragredient(std_rep).unwrap(),
            Weight::new(1, 0, -1).unwrap()
        );
        assert!(contragredient(Weight::new(1, 2, 1).unwrap()).is_err());
    }
}
