//! The eight-element Weyl group of type C2 acting on torus characters.
//!
//! Generators: s1 swaps the two entries, s2 negates the second; the
//! central exponent is always fixed. Elements are canonicalized by
//! their action, with a stored reduced word for lengths and signs.

use crate::weight::Weight;
use crate::CoreError;

/// One of the two simple reflections.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Gen {
    S1,
    S2,
}

/// A Weyl group element, stored as a reduced word in s1, s2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylElement {
    word: Vec<Gen>,
}

impl WeylElement {
    pub fn identity() -> Self {
        WeylElement { word: Vec::new() }
    }

    pub fn s1() -> Self {
        WeylElement { word: vec![Gen::S1] }
    }

    pub fn s2() -> Self {
        WeylElement { word: vec![Gen::S2] }
    }

    pub fn from_word(word: &[Gen]) -> Self {
        // canonicalize through the action table
        let target = action_of_word(word);
        all_elements()
            .into_iter()
            .find(|w| action_of_word(&w.word) == target)
            .expect("every word reduces to one of the eight elements")
    }

    pub fn word(&self) -> &[Gen] {
        &self.word
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    /// Sign (-1)^length.
    pub fn sign(&self) -> i64 {
        if self.length() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Group multiplication: (self * other) acts as self after other.
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        let mut w = self.word.clone();
        w.extend_from_slice(&other.word);
        WeylElement::from_word(&w)
    }
}

fn action_of_word(word: &[Gen]) -> (i64, i64) {
    // image of the generic pair (10, 1): enough to separate all eight actions
    let (mut k, mut kp) = (10i64, 1i64);
    for g in word.iter().rev() {
        let (a, b) = match g {
            Gen::S1 => (kp, k),
            Gen::S2 => (k, -kp),
        };
        k = a;
        kp = b;
    }
    (k, kp)
}

/// All eight elements with reduced words, in length order.
pub fn all_elements() -> Vec<WeylElement> {
    use Gen::{S1, S2};
    let words: [&[Gen]; 8] = [
        &[],
        &[S1],
        &[S2],
        &[S1, S2],
        &[S2, S1],
        &[S1, S2, S1],
        &[S2, S1, S2],
        &[S1, S2, S1, S2],
    ];
    words
        .iter()
        .map(|w| WeylElement { word: w.to_vec() })
        .collect()
}

/// Action on a torus character; the central exponent is untouched.
pub fn weyl_act(w: &WeylElement, lam: Weight) -> Weight {
    let (mut k, mut kp) = (lam.k(), lam.kp());
    for g in w.word.iter().rev() {
        let (a, b) = match g {
            Gen::S1 => (kp, k),
            Gen::S2 => (k, -kp),
        };
        k = a;
        kp = b;
    }
    Weight::new(k, kp, lam.c()).expect("signed permutation preserves parity")
}

/// Action on the bare pair (used by character code).
pub fn weyl_act_pair(w: &WeylElement, k: i64, kp: i64) -> (i64, i64) {
    let lam = Weight::new(k, kp, (k + kp).rem_euclid(2)).unwrap();
    let img = weyl_act(w, lam);
    (img.k(), img.kp())
}

/// Orbit of a weight under the full group, deduplicated.
pub fn weyl_orbit(lam: Weight) -> Vec<Weight> {
    let mut out: Vec<Weight> = Vec::new();
    for w in all_elements() {
        let img = weyl_act(&w, lam);
        if !out.contains(&img) {
            out.push(img);
        }
    }
    out
}

/// Dominance check helper for operations restricted to dominant weights.
pub fn require_dominant(lam: Weight) -> Result<Weight, CoreError> {
    if lam.is_dominant() {
        Ok(lam)
    } else {
        Err(CoreError::NotDominant { k: lam.k(), kp: lam.kp() })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_act_as_stated() {
        let lam = Weight::new(5, 2, 7).unwrap();
        assert_eq!(weyl_act(&WeylElement::s1(), lam), Weight::new(2, 5, 7).unwrap());
        assert_eq!(weyl_act(&WeylElement::s2(), lam), Weight::new(5, -2, 7).unwrap());
        assert_eq!(weyl_act(&WeylElement::identity(), lam), lam);
    }

    #[test]
    fn group_has_exactly_eight_elements_and_braid_relation() {
        let els = all_elements();
        assert_eq!(els.len(), 8);
        // all actions distinct
        let mut imgs: Vec<(i64, i64)> = els.iter().map(|w| action_of_word(w.word())).collect();
        imgs.sort();
        imgs.dedup();
        assert_eq!(imgs.len(), 8);
        // (s1 s2)^4 = identity
        let s1s2 = WeylElement::s1().compose(&WeylElement::s2());
        let mut acc = WeylElement::identity();
        for _ in 0..4 {
            acc = acc.compose(&s1s2);
        }
        assert_eq!(acc, WeylElement::identity());
    }

    #[test]
    fn action_is_a_group_action() {
        let lam = Weight::new(7, 4, 11).unwrap();
        for a in all_elements() {
            for b in all_elements() {
                let ab = a.compose(&b);
                assert_eq!(weyl_act(&ab, lam), weyl_act(&a, weyl_act(&b, lam)));
            }
        }
    }

    #[test]
    fn orbit_of_strictly_dominant_weight_has_size_eight() {
        let lam = Weight::new(5, 2, 7).unwrap();
        assert_eq!(weyl_orbit(lam).len(), 8);
        // non-strict: smaller orbit
        let lam2 = Weight::new(3, 3, 6).unwrap();
        assert!(weyl_orbit(lam2).len() < 8);
    }

    #[test]
    fn parity_and_central_exponent_preserved() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..100 {
            let k: i64 = rng.gen_range(-9..=9);
            let kp: i64 = rng.gen_range(-9..=9);
            let c = k + kp - 2 * rng.gen_range(-4i64..=4);
            let lam = Weight::new(k, kp, c).unwrap();
            for w in all_elements() {
                let img = weyl_act(&w, lam);
                assert_eq!(img.c(), c);
                assert_eq!((img.k() + img.kp()).rem_euclid(2), (c).rem_euclid(2));
            }
        }
    }
}
