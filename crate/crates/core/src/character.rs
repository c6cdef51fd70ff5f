//! Torus characters of irreducible representations via the Weyl
//! character formula for type C2, and their decomposition under the
//! embedded two-factor subgroup.
//!
//! Characters are integer Laurent polynomials in the two torus
//! coordinates; the similitude coordinate is implicit because every
//! weight of an irreducible carries the same central exponent.

use crate::weight::Weight;
use crate::CoreError;
use std::collections::BTreeMap;

/// Integer Laurent polynomial in two variables, keyed (a, b) in lex order.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct IntPoly2 {
    pub terms: BTreeMap<(i64, i64), i64>,
}

impl IntPoly2 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn add_term(&mut self, key: (i64, i64), c: i64) {
        if c == 0 {
            return;
        }
        let e = self.terms.entry(key).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.remove(&key);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<((i64, i64), i64)> {
        self.terms.iter().next_back().map(|(k, v)| (*k, *v))
    }

    pub fn mul(&self, other: &IntPoly2) -> IntPoly2 {
        let mut out = IntPoly2::zero();
        for ((a1, b1), c1) in &self.terms {
            for ((a2, b2), c2) in &other.terms {
                out.add_term((a1 + a2, b1 + b2), c1 * c2);
            }
        }
        out
    }

    pub fn sub_scaled(&mut self, other: &IntPoly2, scale: i64, shift: (i64, i64)) {
        for ((a, b), c) in &other.terms {
            self.add_term((a + shift.0, b + shift.1), -c * scale);
        }
    }
}

/// Signed orbit sum over the eight-element group for the pair (m, n):
/// (x^m - x^-m)(y^n - y^-n) - (x^n - x^-n)(y^m - y^-m).
fn alternating_sum(m: i64, n: i64) -> IntPoly2 {
    let mut p = IntPoly2::zero();
    for &(a, b, s) in &[
        (m, n, 1i64),
        (-m, n, -1),
        (m, -n, -1),
        (-m, -n, 1),
        (n, m, -1),
        (-n, m, 1),
        (n, -m, 1),
        (-n, -m, -1),
    ] {
        p.add_term((a, b), s);
    }
    p
}

/// Exact Laurent division, valid when the quotient is a polynomial in
/// the lattice; leading coefficients of the divisor are +-1 monomials.
fn exact_divide(mut num: IntPoly2, den: &IntPoly2) -> Result<IntPoly2, CoreError> {
    let (dk, dc) = den
        .leading()
        .ok_or_else(|| CoreError::Internal("division by zero character".into()))?;
    let mut q = IntPoly2::zero();
    let mut steps = 0usize;
    while let Some((nk, nc)) = num.leading() {
        if nc % dc != 0 {
            return Err(CoreError::Internal("non-exact character division".into()));
        }
        let coef = nc / dc;
        let shift = (nk.0 - dk.0, nk.1 - dk.1);
        q.add_term(shift, coef);
        num.sub_scaled(den, coef, shift);
        steps += 1;
        if steps > 4_000_000 {
            return Err(CoreError::Internal("character division diverged".into()));
        }
    }
    Ok(q)
}

/// Weyl dimension of the irreducible with highest weight (k, k'):
/// with a = k - k', b = k': (a+1)(b+1)(a+b+2)(a+2b+3)/6.
pub fn weyl_dimension(k: i64, kp: i64) -> i64 {
    let a = k - kp;
    let b = kp;
    (a + 1) * (b + 1) * (a + b + 2) * (a + 2 * b + 3) / 6
}

/// Character of the irreducible of highest weight (k, k') as a Laurent
/// polynomial in the two torus coordinates (central exponent implicit).
pub fn irreducible_character(k: i64, kp: i64) -> Result<IntPoly2, CoreError> {
    if !(k >= kp && kp >= 0) {
        return Err(CoreError::NotDominant { k, kp });
    }
    let num = alternating_sum(k + 2, kp + 1);
    let den = alternating_sum(2, 1);
    let chi = exact_divide(num, &den)?;
    let dim: i64 = chi.terms.values().sum();
    if dim != weyl_dimension(k, kp) {
        return Err(CoreError::Internal(format!(
            "character dimension {} mismatches Weyl formula {}",
            dim,
            weyl_dimension(k, kp)
        )));
    }
    Ok(chi)
}

/// Character of the two-factor irreducible with highest pair (p, q):
/// product of the two principal characters in separate variables.
fn factor_character(p: i64, q: i64) -> IntPoly2 {
    let mut out = IntPoly2::zero();
    for i in 0..=p {
        for j in 0..=q {
            out.add_term((p - 2 * i, q - 2 * j), 1);
        }
    }
    out
}

/// Decompose a restricted character into two-factor irreducibles by
/// greedy top-corner subtraction. Returns multiplicities keyed (p, q).
///
/// A negative coefficient during subtraction signals corruption of the
/// input character, never bad user input.
pub fn decompose_restriction(chi: &IntPoly2) -> Result<BTreeMap<(i64, i64), i64>, CoreError> {
    let mut rem = chi.clone();
    let mut out: BTreeMap<(i64, i64), i64> = BTreeMap::new();
    while let Some(((a, b), c)) = rem.leading() {
        if a < 0 || b < 0 || c < 0 {
            return Err(CoreError::Internal(format!(
                "greedy decomposition hit invalid corner ({}, {}) x {}",
                a, b, c
            )));
        }
        out.insert((a, b), c);
        rem.sub_scaled(&factor_character(a, b), c, (0, 0));
        if rem.terms.values().any(|v| *v < 0) {
            return Err(CoreError::Internal(
                "greedy decomposition produced a negative multiplicity".into(),
            ));
        }
    }
    Ok(out)
}

/// Multiplicity of the two-factor type (p, q) (with the central twist
/// forced by the central exponent) inside the restriction of the
/// irreducible with highest weight `lam`.
pub fn restriction_multiplicity(lam: Weight, p: i64, q: i64) -> Result<i64, CoreError> {
    if !(lam.k() >= lam.kp() && lam.kp() >= 0) {
        return Err(CoreError::NotDominant { k: lam.k(), kp: lam.kp() });
    }
    if (lam.c() - p - q).rem_euclid(2) != 0 {
        return Err(CoreError::ParityViolation { k: p, kp: q, c: lam.c() });
    }
    let chi = irreducible_character(lam.k(), lam.kp())?;
    let dec = decompose_restriction(&chi)?;
    Ok(*dec.get(&(p, q)).unwrap_or(&0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_dimensions() {
        assert_eq!(weyl_dimension(1, 0), 4);
        assert_eq!(weyl_dimension(1, 1), 5);
        assert_eq!(weyl_dimension(2, 0), 10);
        assert_eq!(weyl_dimension(2, 1), 16);
        for (k, kp) in [(1, 0), (1, 1), (2, 0), (3, 2), (4, 4)] {
            let chi = irreducible_character(k, kp).unwrap();
            let dim: i64 = chi.terms.values().sum();
            assert_eq!(dim, weyl_dimension(k, kp));
        }
    }

    #[test]
    fn standard_rep_restriction() {
        // the 4-dim standard module restricts to (1,0) + (0,1)
        let chi = irreducible_character(1, 0).unwrap();
        let dec = decompose_restriction(&chi).unwrap();
        assert_eq!(dec.get(&(1, 0)), Some(&1));
        assert_eq!(dec.get(&(0, 1)), Some(&1));
        assert_eq!(dec.len(), 2);
    }

    #[test]
    fn character_weights_are_weyl_symmetric() {
        let chi = irreducible_character(3, 1).unwrap();
        for ((a, b), c) in &chi.terms {
            for w in crate::weyl::all_elements() {
                let (a2, b2) = crate::weyl::weyl_act_pair(&w, *a, *b);
                assert_eq!(chi.terms.get(&(a2, b2)), Some(c));
            }
        }
    }
}
