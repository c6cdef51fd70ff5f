//! The unramified parameter symbols, the four spin monomials, and the
//! signed eight-element group acting on the symbol lattice.
//!
//! The action is implemented on the free monomials in the three symbols
//! (an exponent-lattice map), so the quadratic relation among the spin
//! monomials is a theorem to check, not a representation constraint.

use crate::LocalError;
use spin4_exact::{CycScalar, LaurentPoly};

/// Variable list shared by all symbolic local-factor computations.
pub const VARS: [&str; 4] = ["b0", "b1", "b2", "T"];

/// Index of the series variable inside `VARS`.
pub const T_IDX: usize = 3;

/// The four spin monomials as exponent vectors in (b0, b1, b2, T).
pub const ALPHA_EXPS: [[i64; 4]; 4] = [
    [1, 1, 1, 0], // a1 = b0 b1 b2
    [1, 1, 0, 0], // a2 = b0 b1
    [1, 0, 0, 0], // a3 = b0
    [1, 0, 1, 0], // a4 = b0 b2
];

pub fn alpha(i: usize) -> LaurentPoly {
    LaurentPoly::monomial(&VARS, &ALPHA_EXPS[i - 1], CycScalar::one())
}

/// Monomial with the given exponents in (b0, b1, b2) and zero T power.
pub fn b_monomial(e0: i64, e1: i64, e2: i64) -> LaurentPoly {
    LaurentPoly::monomial(&VARS, &[e0, e1, e2, 0], CycScalar::one())
}

/// One element of the signed symbol group: images of the four variables
/// as exponent vectors, plus the word length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolAction {
    pub images: [[i64; 4]; 4],
    pub length: usize,
}

impl SymbolAction {
    fn identity() -> Self {
        SymbolAction {
            images: [
                [1, 0, 0, 0],
                [0, 1, 0, 0],
                [0, 0, 1, 0],
                [0, 0, 0, 1],
            ],
            length: 0,
        }
    }

    fn compose_gen(&self, g: &[[i64; 4]; 4]) -> [[i64; 4]; 4] {
        // (g after self): variable v maps through self then through g
        let mut out = [[0i64; 4]; 4];
        for v in 0..4 {
            for (k, e) in self.images[v].iter().enumerate() {
                for (t, m) in g[k].iter().enumerate() {
                    out[v][t] += e * m;
                }
            }
        }
        out
    }

    pub fn apply(&self, f: &LaurentPoly) -> Result<LaurentPoly, LocalError> {
        let imgs: Vec<Vec<i64>> = self.images.iter().map(|e| e.to_vec()).collect();
        Ok(f.substitute_monomials(&imgs)?)
    }

    pub fn sign(&self) -> i64 {
        if self.length % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

/// First generator: b0 -> b0 b2, b1 -> b1, b2 -> 1/b2.
fn gen1() -> [[i64; 4]; 4] {
    [
        [1, 0, 1, 0],
        [0, 1, 0, 0],
        [0, 0, -1, 0],
        [0, 0, 0, 1],
    ]
}

/// Second generator: b1 <-> b2.
fn gen2() -> [[i64; 4]; 4] {
    [
        [1, 0, 0, 0],
        [0, 0, 1, 0],
        [0, 1, 0, 0],
        [0, 0, 0, 1],
    ]
}

/// All eight elements, found by breadth-first closure from the two
/// generators, so stored lengths are geodesic word lengths.
pub fn symbol_group() -> Vec<SymbolAction> {
    let gens = [gen1(), gen2()];
    let mut out = vec![SymbolAction::identity()];
    let mut head = 0usize;
    while head < out.len() {
        let el = out[head].clone();
        head += 1;
        for g in &gens {
            let imgs = el.compose_gen(g);
            if !out.iter().any(|x| x.images == imgs) {
                out.push(SymbolAction { images: imgs, length: el.length + 1 });
            }
        }
    }
    out.sort_by_key(|e| (e.length, e.images));
    out
}

/// The signed sum over the eight-element group.
pub fn antisymmetrize(f: &LaurentPoly) -> Result<LaurentPoly, LocalError> {
    let mut acc = LaurentPoly::zero(&VARS);
    for w in symbol_group() {
        let img = w.apply(f)?;
        let signed = if w.sign() < 0 { img.neg() } else { img };
        acc = acc.add(&signed)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_has_order_eight_with_word_lengths() {
        let g = symbol_group();
        assert_eq!(g.len(), 8);
        let mut lens: Vec<usize> = g.iter().map(|e| e.length).collect();
        lens.sort();
        assert_eq!(lens, vec![0, 1, 1, 2, 2, 3, 3, 4]);
    }

    #[test]
    fn generators_permute_the_spin_monomials_as_stated() {
        let g = symbol_group();
        let s1 = g.iter().find(|e| e.length == 1 && e.images == gen1()).unwrap();
        let s2 = g.iter().find(|e| e.length == 1 && e.images == gen2()).unwrap();
        // s1: a1 <-> a2, a3 <-> a4
        assert_eq!(s1.apply(&alpha(1)).unwrap(), alpha(2));
        assert_eq!(s1.apply(&alpha(2)).unwrap(), alpha(1));
        assert_eq!(s1.apply(&alpha(3)).unwrap(), alpha(4));
        assert_eq!(s1.apply(&alpha(4)).unwrap(), alpha(3));
        // s2: a2 <-> a4, fixes a1 and a3
        assert_eq!(s2.apply(&alpha(1)).unwrap(), alpha(1));
        assert_eq!(s2.apply(&alpha(2)).unwrap(), alpha(4));
        assert_eq!(s2.apply(&alpha(3)).unwrap(), alpha(3));
        assert_eq!(s2.apply(&alpha(4)).unwrap(), alpha(2));
    }

    #[test]
    fn quadratic_relation_is_preserved() {
        // a1 a3 = a2 a4 identically, and every group element preserves it
        let lhs = alpha(1).mul(&alpha(3)).unwrap();
        let rhs = alpha(2).mul(&alpha(4)).unwrap();
        assert_eq!(lhs, rhs);
        for w in symbol_group() {
            assert_eq!(w.apply(&lhs).unwrap(), w.apply(&rhs).unwrap());
        }
    }

    #[test]
    fn all_products_match_word_composition() {
        // closure: composing any two elements lands back in the set with
        // compatible sign behavior on a test monomial
        let g = symbol_group();
        let f = b_monomial(2, 1, -1);
        for a in &g {
            for b in &g {
                let ab = SymbolAction {
                    images: a.compose_gen(&b.images),
                    length: 0, // unused below
                };
                let via_words = b.apply(&a.apply(&f).unwrap()).unwrap();
                let direct = ab.apply(&f).unwrap();
                assert_eq!(via_words, direct);
                assert!(g.iter().any(|x| x.images == ab.images));
            }
        }
    }

    #[test]
    fn antisymmetrization_basics() {
        // constant kills itself: equal counts of even and odd lengths
        let one = LaurentPoly::one(&VARS);
        assert!(antisymmetrize(&one).unwrap().is_zero());
        // equivariance with sign: A(w f) = sign(w) A(f)
        let f = b_monomial(3, 1, 2);
        let af = antisymmetrize(&f).unwrap();
        for w in symbol_group() {
            let awf = antisymmetrize(&w.apply(&f).unwrap()).unwrap();
            let want = if w.sign() < 0 { af.neg() } else { af.clone() };
            assert_eq!(awf, want);
        }
    }
}
