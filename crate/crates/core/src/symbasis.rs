//! The symmetric-power bases a_j / b_j.
//!
//! b_j = (iX - Y)^j (iX + Y)^(n-j) inside the n-th symmetric power of
//! the standard two-dimensional module, and a_j is the dual basis. The
//! two facts needed downstream are the rotation weight of a_j and its
//! behavior under coefficientwise complex conjugation.

use crate::CoreError;
use spin4_exact::{CycScalar, Rat};

/// The change-of-basis data for one symmetric power.
#[derive(Debug, Clone)]
pub struct SymBasis {
    pub n: usize,
    /// b[j][m] = coefficient of X^(n-m) Y^m in b_j.
    pub b: Vec<Vec<CycScalar>>,
    /// a[j][m] = coefficient of the dual monomial basis in a_j: the
    /// inverse-transpose of the b-matrix.
    pub a: Vec<Vec<CycScalar>>,
}

/// Expand (iX - Y)^j (iX + Y)^(n-j) in the monomial basis X^(n-m) Y^m.
fn expand_b(n: usize, j: usize) -> Vec<CycScalar> {
    // (iX - Y)^j = sum_r C(j,r) (iX)^(j-r) (-Y)^r
    // (iX + Y)^(n-j) = sum_s C(n-j,s) (iX)^(n-j-s) Y^s
    let mut out = vec![CycScalar::zero(); n + 1];
    for r in 0..=j {
        for s in 0..=(n - j) {
            let m = r + s;
            let ipow = CycScalar::i().powi((n - m) as i32);
            let sign = if r % 2 == 1 { -Rat::one() } else { Rat::one() };
            let coef = &(&Rat::binomial(j as i64, r as i64)
                * &Rat::binomial((n - j) as i64, s as i64))
                * &sign;
            out[m] = &out[m] + &ipow.scale(&coef);
        }
    }
    out
}

impl SymBasis {
    pub fn new(n: usize) -> Result<Self, CoreError> {
        let b: Vec<Vec<CycScalar>> = (0..=n).map(|j| expand_b(n, j)).collect();
        // invert the (n+1)x(n+1) matrix b (rows = j, cols = m) exactly
        let dim = n + 1;
        let mut mat: Vec<Vec<CycScalar>> = b.clone();
        let mut inv: Vec<Vec<CycScalar>> = (0..dim)
            .map(|r| {
                (0..dim)
                    .map(|c| {
                        if r == c {
                            CycScalar::one()
                        } else {
                            CycScalar::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        for col in 0..dim {
            let piv = (col..dim)
                .find(|r| !mat[*r][col].is_zero())
                .ok_or_else(|| CoreError::Internal("singular symmetric basis".into()))?;
            mat.swap(col, piv);
            inv.swap(col, piv);
            let f = mat[col][col].inv().unwrap();
            for c in 0..dim {
                mat[col][c] = &mat[col][c] * &f;
                inv[col][c] = &inv[col][c] * &f;
            }
            for r in 0..dim {
                if r != col && !mat[r][col].is_zero() {
                    let g = mat[r][col].clone();
                    for c in 0..dim {
                        mat[r][c] = &mat[r][c] - &(&g * &mat[col][c]);
                        inv[r][c] = &inv[r][c] - &(&g * &inv[col][c]);
                    }
                }
            }
        }
        // a_j in the dual monomial basis: a_j(v) = sum_m a[j][m] * (coefficient
        // of X^(n-m) Y^m in v); duality a_j(b_k) = delta needs a = (b^T)^-1,
        // i.e. a[j][m] = inv[m][j] transposed.
        let mut a = vec![vec![CycScalar::zero(); dim]; dim];
        for j in 0..dim {
            for m in 0..dim {
                a[j][m] = inv[m][j].clone();
            }
        }
        Ok(SymBasis { n, b, a })
    }

    /// Infinitesimal rotation weight of a_j: must be n - 2j.
    ///
    /// The generator [[0, 1], [-1, 0]] acts on the monomial coefficients
    /// of the symmetric power; on the dual side the sign flips. The
    /// returned value w satisfies (rotation action on a_j) = i w a_j.
    pub fn rotation_weight(&self, j: usize) -> Result<i64, CoreError> {
        // action on Sym^n: X -> -Y, Y -> X (derivative of the rotation
        // X -> xX - yY, Y -> yX + xY at the identity).
        // On a monomial X^(n-m) Y^m the derivative produces
        // -(n-m) X^(n-m-1) Y^(m+1) + m X^(n-m+1) Y^(m-1), and the dual
        // action on coefficient functionals is minus the transpose:
        // (D* a)_m = (n-m) a_{m+1} - m a_{m-1}.
        let dim = self.n + 1;
        let mut image = vec![CycScalar::zero(); dim];
        for m in 0..dim {
            let mut acc = CycScalar::zero();
            if m + 1 < dim {
                acc = &acc
                    + &self.a[j][m + 1].scale(&Rat::from_i64((self.n - m) as i64));
            }
            if m >= 1 {
                acc = &acc - &self.a[j][m - 1].scale(&Rat::from_i64(m as i64));
            }
            image[m] = acc;
        }
        // expect image = i * w * a_j
        let mut weight: Option<CycScalar> = None;
        for m in 0..dim {
            match (self.a[j][m].is_zero(), image[m].is_zero()) {
                (true, true) => continue,
                (false, _) => {
                    let r = &image[m] * &self.a[j][m].inv().unwrap();
                    match &weight {
                        None => weight = Some(r),
                        Some(v) => {
                            if *v != r {
                                return Err(CoreError::Internal(
                                    "dual vector is not a rotation eigenvector".into(),
                                ));
                            }
                        }
                    }
                }
                (true, false) => {
                    return Err(CoreError::Internal(
                        "dual vector is not a rotation eigenvector".into(),
                    ))
                }
            }
        }
        let w = weight.ok_or_else(|| CoreError::Internal("zero dual vector".into()))?;
        let over_i = &w * &CycScalar::i().inv().unwrap();
        let r = over_i
            .as_rat()
            .ok_or_else(|| CoreError::Internal("non-integral rotation weight".into()))?;
        if !r.is_integer() {
            return Err(CoreError::Internal("non-integral rotation weight".into()));
        }
        Ok(r.numer().to_string().parse().unwrap())
    }

    /// Coefficientwise complex conjugation sends a_j to (-1)^n a_(n-j).
    ///
    /// The index flip is forced: conjugation exchanges the two isotropic
    /// factors of b_j, so b_j maps to (-1)^n b_(n-j) and dually likewise.
    pub fn conjugation_sign_holds(&self, j: usize) -> bool {
        let sign = if self.n % 2 == 0 {
            CycScalar::one()
        } else {
            -CycScalar::one()
        };
        (0..=self.n).all(|m| self.a[j][m].conj() == &self.a[self.n - j][m] * &sign)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn duality_holds() {
        for n in [1usize, 2, 3, 5] {
            let sb = SymBasis::new(n).unwrap();
            for j in 0..=n {
                for k in 0..=n {
                    let mut pair = CycScalar::zero();
                    for m in 0..=n {
                        pair = &pair + &(&sb.a[j][m] * &sb.b[k][m]);
                    }
                    let want = if j == k {
                        CycScalar::one()
                    } else {
                        CycScalar::zero()
                    };
                    assert_eq!(pair, want, "n={} j={} k={}", n, j, k);
                }
            }
        }
    }

    #[test]
    fn rotation_weights() {
        for n in [1usize, 2, 4, 6] {
            let sb = SymBasis::new(n).unwrap();
            for j in 0..=n {
                assert_eq!(
                    sb.rotation_weight(j).unwrap(),
                    n as i64 - 2 * j as i64,
                    "n={} j={}",
                    n,
                    j
                );
            }
        }
    }

    #[test]
    fn conjugation_sign_up_to_twelve() {
        for n in 0..=12usize {
            let sb = SymBasis::new(n).unwrap();
            for j in 0..=n {
                assert!(sb.conjugation_sign_holds(j), "n={} j={}", n, j);
            }
        }
    }
}
