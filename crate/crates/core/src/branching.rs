//! The two-factor branching law: the five-case inequality list, and the
//! independent character-theoretic multiplicity that validates it.

use crate::character::restriction_multiplicity;
use crate::weight::Weight;
use crate::weyl::require_dominant;
use crate::CoreError;

/// A branching question: does (Sym^p x Sym^q)(3) embed in the
/// restriction of the irreducible with highest weight `w`?
#[derive(Debug, Clone, Copy)]
pub struct BranchQuery {
    pub p: i64,
    pub q: i64,
    pub w: Weight,
}

impl BranchQuery {
    /// Builds the query with the coefficient normalization c = p+q+6
    /// and the parity constraint k + k' = p + q (mod 2).
    pub fn new(p: i64, q: i64, k: i64, kp: i64) -> Result<Self, CoreError> {
        if p < 0 || q < 0 {
            return Err(CoreError::IndexOutOfRange("p, q must be non-negative".into()));
        }
        if (k + kp - p - q).rem_euclid(2) != 0 {
            return Err(CoreError::ParityViolation { k, kp, c: p + q });
        }
        let w = Weight::new(k, kp, p + q + 6)?;
        Ok(BranchQuery { p, q, w })
    }
}

/// The inequality list, evaluated verbatim.
pub fn branching_admissible(bq: &BranchQuery) -> Result<bool, CoreError> {
    let w = require_dominant(bq.w)?;
    let (k, kp) = (w.k(), w.kp());
    let (p, q) = (bq.p, bq.q);
    if p > k {
        return Ok(false);
    }
    let ok = if p < kp {
        if p < k - kp {
            k - kp - p <= q && q <= k - kp + p
        } else {
            p - k + kp <= q && q <= p + k - kp
        }
    } else {
        // kp <= p <= k
        if kp < k - p {
            k - kp - p <= q && q <= k + kp - p
        } else {
            p - k + kp <= q && q <= k + kp - p
        }
    };
    Ok(ok)
}

/// Character-theoretic multiplicity of (Sym^p x Sym^q)(3) in the
/// restriction; fully independent of the inequality list.
pub fn branching_multiplicity(bq: &BranchQuery) -> Result<i64, CoreError> {
    let w = require_dominant(bq.w)?;
    restriction_multiplicity(w, bq.p, bq.q)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quoted_example_is_admissible() {
        // (p,q,k,k') = (6,3,7,4): p between k' and k, k-p <= k', bounds 3 <= q <= 5
        let bq = BranchQuery::new(6, 3, 7, 4).unwrap();
        assert!(branching_admissible(&bq).unwrap());
        let bq2 = BranchQuery::new(6, 7, 7, 4).unwrap();
        assert!(!branching_admissible(&bq2).unwrap());
    }

    #[test]
    fn p_larger_than_k_fails() {
        let bq = BranchQuery::new(8, 1, 7, 4).unwrap();
        assert!(!branching_admissible(&bq).unwrap());
    }

    #[test]
    fn boundary_pair_is_admissible() {
        // (p, q) = (k-1, k'-1) sits on the boundary q = p - k + k'
        for (k, kp) in [(2, 1), (4, 3), (5, 2), (7, 4)] {
            let bq = BranchQuery::new(k - 1, kp - 1, k, kp).unwrap();
            assert!(branching_admissible(&bq).unwrap(), "({}, {})", k, kp);
        }
    }

    #[test]
    fn multiplicity_of_standard_block() {
        // restriction of the standard module contains the (1,0) block once
        let w = Weight::new(1, 0, 1).unwrap();
        assert_eq!(
            crate::character::restriction_multiplicity(w, 1, 0).unwrap(),
            1
        );
    }
}
