//! Discrete-series packet bookkeeping: the infinitesimal parameter and
//! the four minimal types attached to a dominant highest weight.

use crate::weight::Weight;
use crate::weyl::require_dominant;
use crate::CoreError;

/// Labels of the four packet members, in Hodge order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Member {
    Holomorphic,
    Whittaker,
    WhittakerBar,
    HolomorphicBar,
}

/// The packet attached to a dominant weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PacketInfo {
    pub highest_weight: Weight,
    /// infinitesimal parameter (k+2, k'+1)
    pub hc_parameter: (i64, i64),
    /// the four members with their minimal types
    pub members: [(Member, (i64, i64)); 4],
}

pub fn lpacket(lam: Weight) -> Result<PacketInfo, CoreError> {
    let lam = require_dominant(lam)?;
    let (k, kp) = (lam.k(), lam.kp());
    Ok(PacketInfo {
        highest_weight: lam,
        hc_parameter: (k + 2, kp + 1),
        members: [
            (Member::Holomorphic, (k + 3, kp + 3)),
            (Member::Whittaker, (k + 3, -kp - 1)),
            (Member::WhittakerBar, (kp + 1, -k - 3)),
            (Member::HolomorphicBar, (-kp - 3, -k - 3)),
        ],
    })
}

impl PacketInfo {
    /// Minimal type of one member.
    pub fn minimal_type(&self, m: Member) -> (i64, i64) {
        self.members.iter().find(|(x, _)| *x == m).unwrap().1
    }

    /// The four minimal types are pairwise distinct when k > k' > 0.
    pub fn types_distinct(&self) -> bool {
        for i in 0..4 {
            for j in (i + 1)..4 {
                if self.members[i].1 == self.members[j].1 {
                    return false;
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn packet_for_five_two() {
        let p = lpacket(Weight::new(5, 2, 7).unwrap()).unwrap();
        assert_eq!(p.hc_parameter, (7, 3));
        assert_eq!(p.minimal_type(Member::Holomorphic), (8, 5));
        assert_eq!(p.minimal_type(Member::Whittaker), (8, -3));
        assert_eq!(p.minimal_type(Member::WhittakerBar), (3, -8));
        assert_eq!(p.minimal_type(Member::HolomorphicBar), (-5, -8));
        assert!(p.types_distinct());
    }

    #[test]
    fn small_parameter() {
        let p = lpacket(Weight::new(1, 0, 1).unwrap()).unwrap();
        assert_eq!(p.hc_parameter, (3, 1));
        assert_eq!(p.minimal_type(Member::Holomorphic), (4, 3));
    }

    #[test]
    fn distinctness_for_strictly_dominant() {
        for k in 1..=20 {
            for kp in 1..k {
                let p = lpacket(Weight::new(k, kp, k + kp).unwrap()).unwrap();
                assert!(p.types_distinct(), "({}, {})", k, kp);
            }
        }
    }

    #[test]
    fn non_dominant_rejected() {
        assert!(lpacket(Weight::new(1, 2, 1).unwrap()).is_err());
    }
}
