//! Hodge bidegrees of the middle cohomology for a coefficient weight,
//! and the rank bookkeeping under the stability hypothesis.

use crate::weight::Weight;
use crate::CoreError;

/// The four ordered bidegrees, each summing to 3 - c.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HodgeType {
    pub t: i64,
    pub pairs: [(i64, i64); 4],
}

pub fn hodge_types(lam: Weight) -> HodgeType {
    let (k, kp, c) = (lam.k(), lam.kp(), lam.c());
    let t = (c - k - kp) / 2;
    HodgeType {
        t,
        pairs: [
            (3 - t, -k - kp - t),
            (2 - kp - t, 1 - k - t),
            (1 - k - t, 2 - kp - t),
            (-k - kp - t, 3 - t),
        ],
    }
}

impl HodgeType {
    /// Every bidegree sums to 3 - c.
    pub fn pair_sums_ok(&self, lam: Weight) -> bool {
        self.pairs.iter().all(|(r, s)| r + s == 3 - lam.c())
    }

    /// The list is stable under swapping coordinates.
    pub fn swap_closed(&self) -> bool {
        self.pairs
            .iter()
            .all(|(r, s)| self.pairs.contains(&(*s, *r)))
    }
}

/// Ranks (minus part, filtered part, extension part) in the stable case.
///
/// All four multiplicities are one under stability, and the constraint
/// 2 - k' - t < 0 places the filtered piece in a single bidegree, so
/// the ranks are (2, 1, 1). Inputs violating the constraint are refused
/// with the inequality named.
pub fn stable_ranks(p: i64, q: i64, k: i64, kp: i64) -> Result<(u32, u32, u32), CoreError> {
    let c = p + q + 6;
    let t = (c - k - kp) / 2;
    if (c - k - kp).rem_euclid(2) != 0 {
        return Err(CoreError::ParityViolation { k, kp, c });
    }
    if 2 - kp - t >= 0 {
        return Err(CoreError::HypothesisViolation(format!(
            "need 2 - k' - t < 0, got 2 - {} - {} = {}",
            kp,
            t,
            2 - kp - t
        )));
    }
    Ok((2, 1, 1))
}

/// Per-member cohomology dimension in the packet (always one).
pub fn cohomology_dimension_per_member() -> u32 {
    1
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn example_five_two_eleven() {
        let lam = Weight::new(5, 2, 11).unwrap();
        let h = hodge_types(lam);
        assert_eq!(h.t, 2);
        assert_eq!(h.pairs, [(1, -9), (-2, -6), (-6, -2), (-9, 1)]);
        assert!(h.pair_sums_ok(lam));
        assert!(h.swap_closed());
    }

    #[test]
    fn cohomological_normalization_has_t_two() {
        // c = k + k' + 4 forces t = 2
        for (k, kp) in [(1, 1), (5, 2), (9, 4)] {
            let lam = Weight::new(k, kp, k + kp + 4).unwrap();
            assert_eq!(hodge_types(lam).t, 2);
        }
    }

    #[test]
    fn pair_sums_for_a_grid() {
        for k in -20..=20i64 {
            for kp in -20..=20i64 {
                let c = k + kp + 6;
                let lam = Weight::new(k, kp, c).unwrap();
                let h = hodge_types(lam);
                assert!(h.pair_sums_ok(lam));
                assert!(h.swap_closed());
            }
        }
    }

    #[test]
    fn dual_twist_bookkeeping() {
        // the dual coefficient system carries t' = -(k + k' + p + q)/2
        for (k, kp, p, q) in [(7i64, 4i64, 6i64, 3i64), (5, 2, 4, 1)] {
            let lam_dual = Weight::new(k, kp, -p - q).unwrap();
            let h = hodge_types(lam_dual);
            assert_eq!(h.t, -(k + kp + p + q) / 2);
            assert!(h.pair_sums_ok(lam_dual));
        }
    }

    #[test]
    fn stable_ranks_and_exactness() {
        let (a, b, c) = stable_ranks(6, 3, 7, 4).unwrap();
        assert_eq!((a, b, c), (2, 1, 1));
        assert_eq!(a, b + c); // exact sequence rank check
        assert_eq!(cohomology_dimension_per_member(), 1);
        // violated constraint is named
        let err = stable_ranks(0, 0, 8, 0).unwrap_err();
        match err {
            CoreError::HypothesisViolation(s) => assert!(s.contains("2 - k' - t")),
            _ => panic!("wrong error kind"),
        }
    }
}
