//! Concrete 4x4 models over Q(i, sqrt2): the symplectic form, the
//! compact Cartan pair, non-compact root vectors, the Cayley element J,
//! the conjugation element N, the two-factor embedding, and linear
//! algebra over the field (brackets, conjugation, Cartan splitting).

use crate::CoreError;
use spin4_exact::{CycScalar, Rat};

/// Dense 4x4 matrix over Q(i, sqrt2).
#[derive(Clone, PartialEq, Eq)]
pub struct LieMatrix {
    pub m: [[CycScalar; 4]; 4],
}

fn z() -> CycScalar {
    CycScalar::zero()
}

fn one() -> CycScalar {
    CycScalar::one()
}

fn i() -> CycScalar {
    CycScalar::i()
}

fn ni() -> CycScalar {
    -CycScalar::i()
}

impl LieMatrix {
    pub fn zero() -> Self {
        LieMatrix { m: Default::default() }
    }

    pub fn identity() -> Self {
        let mut a = Self::zero();
        for k in 0..4 {
            a.m[k][k] = one();
        }
        a
    }

    pub fn from_rows(rows: [[CycScalar; 4]; 4]) -> Self {
        LieMatrix { m: rows }
    }

    /// Integer matrix helper.
    pub fn from_i64(rows: [[i64; 4]; 4]) -> Self {
        let mut a = Self::zero();
        for r in 0..4 {
            for c in 0..4 {
                a.m[r][c] = CycScalar::from_i64(rows[r][c]);
            }
        }
        a
    }

    pub fn is_zero(&self) -> bool {
        self.m.iter().all(|row| row.iter().all(CycScalar::is_zero))
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut a = Self::zero();
        for r in 0..4 {
            for c in 0..4 {
                a.m[r][c] = &self.m[r][c] + &o.m[r][c];
            }
        }
        a
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut a = Self::zero();
        for r in 0..4 {
            for c in 0..4 {
                a.m[r][c] = &self.m[r][c] - &o.m[r][c];
            }
        }
        a
    }

    pub fn neg(&self) -> Self {
        self.scale(&(-one()))
    }

    pub fn scale(&self, s: &CycScalar) -> Self {
        let mut a = Self::zero();
        for r in 0..4 {
            for c in 0..4 {
                a.m[r][c] = &self.m[r][c] * s;
            }
        }
        a
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut a = Self::zero();
        for r in 0..4 {
            for c in 0..4 {
                let mut acc = z();
                for k in 0..4 {
                    acc = &acc + &(&self.m[r][k] * &o.m[k][c]);
                }
                a.m[r][c] = acc;
            }
        }
        a
    }

    pub fn transpose(&self) -> Self {
        let mut a = Self::zero();
        for r in 0..4 {
            for c in 0..4 {
                a.m[r][c] = self.m[c][r].clone();
            }
        }
        a
    }

    /// Entrywise complex conjugation i -> -i.
    pub fn conj(&self) -> Self {
        let mut a = Self::zero();
        for r in 0..4 {
            for c in 0..4 {
                a.m[r][c] = self.m[r][c].conj();
            }
        }
        a
    }

    /// Exact inverse by Gaussian elimination; None when singular.
    pub fn inverse(&self) -> Option<Self> {
        let mut a = self.m.clone();
        let mut b = Self::identity().m;
        for col in 0..4 {
            let pivot = (col..4).find(|r| !a[*r][col].is_zero())?;
            a.swap(col, pivot);
            b.swap(col, pivot);
            let inv = a[col][col].inv()?;
            for c in 0..4 {
                a[col][c] = &a[col][c] * &inv;
                b[col][c] = &b[col][c] * &inv;
            }
            for r in 0..4 {
                if r != col && !a[r][col].is_zero() {
                    let f = a[r][col].clone();
                    for c in 0..4 {
                        a[r][c] = &a[r][c] - &(&f * &a[col][c]);
                        b[r][c] = &b[r][c] - &(&f * &b[col][c]);
                    }
                }
            }
        }
        Some(LieMatrix { m: b })
    }

    pub fn trace(&self) -> CycScalar {
        let mut t = z();
        for k in 0..4 {
            t = &t + &self.m[k][k];
        }
        t
    }
}

impl std::fmt::Debug for LieMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for r in 0..4 {
            writeln!(
                f,
                "[{}, {}, {}, {}]",
                self.m[r][0], self.m[r][1], self.m[r][2], self.m[r][3]
            )?;
        }
        Ok(())
    }
}

/// Commutator xy - yx.
pub fn bracket(x: &LieMatrix, y: &LieMatrix) -> LieMatrix {
    x.mul(y).sub(&y.mul(x))
}

/// Conjugation g x g^-1 by an invertible group element.
pub fn ad_conjugate(g: &LieMatrix, x: &LieMatrix) -> Result<LieMatrix, CoreError> {
    let gi = g
        .inverse()
        .ok_or_else(|| CoreError::BadMatrix("conjugating element is singular".into()))?;
    Ok(g.mul(x).mul(&gi))
}

/// The symplectic form [[0, I], [-I, 0]].
pub fn psi() -> LieMatrix {
    LieMatrix::from_i64([[0, 0, 1, 0], [0, 0, 0, 1], [-1, 0, 0, 0], [0, -1, 0, 0]])
}

/// Compact Cartan generator T1.
pub fn t1() -> LieMatrix {
    LieMatrix::from_i64([[0, 0, 1, 0], [0, 0, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 0]])
}

/// Compact Cartan generator T2.
pub fn t2() -> LieMatrix {
    LieMatrix::from_i64([[0, 0, 0, 0], [0, 0, 0, 1], [0, 0, 0, 0], [0, -1, 0, 0]])
}

/// The complex-linear extension of the maximal-compact embedding
/// differential: Z = K + S splits into skew and symmetric parts, and
/// dkappa(Z) = [[K, -iS], [iS, K]] in 2x2 blocks.
pub fn dkappa(zm: &[[CycScalar; 2]; 2]) -> LieMatrix {
    let half = CycScalar::from_rat(Rat::new(1, 2));
    let mut out = LieMatrix::zero();
    for r in 0..2 {
        for c in 0..2 {
            let kpart = &(&zm[r][c] - &zm[c][r]) * &half;
            let spart = &(&zm[r][c] + &zm[c][r]) * &half;
            out.m[r][c] = kpart.clone();
            out.m[r + 2][c + 2] = kpart;
            out.m[r][c + 2] = &(-i()) * &spart;
            out.m[r + 2][c] = &i() * &spart;
        }
    }
    out
}

/// Compact raising root vector for the root (1, -1).
pub fn x_compact_raise() -> LieMatrix {
    let mut zm: [[CycScalar; 2]; 2] = Default::default();
    zm[0][1] = one();
    dkappa(&zm)
}

/// Compact lowering root vector for the root (-1, 1).
pub fn x_compact_lower() -> LieMatrix {
    let mut zm: [[CycScalar; 2]; 2] = Default::default();
    zm[1][0] = one();
    dkappa(&zm)
}

/// p_{+-}(Z) = [[Z, +-iZ], [+-iZ, -Z]] for symmetric 2x2 Z.
fn p_pm(zm: [[i64; 2]; 2], plus: bool) -> LieMatrix {
    let s = if plus { i() } else { ni() };
    let mut out = LieMatrix::zero();
    for r in 0..2 {
        for c in 0..2 {
            let v = CycScalar::from_i64(zm[r][c]);
            out.m[r][c] = v.clone();
            out.m[r + 2][c + 2] = -v.clone();
            out.m[r][c + 2] = &s * &v;
            out.m[r + 2][c] = &s * &v;
        }
    }
    out
}

/// Labels of the six non-compact roots.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NcRoot {
    P20,
    P11,
    P02,
    M20,
    M11,
    M02,
}

impl NcRoot {
    pub fn weight(&self) -> (i64, i64) {
        match self {
            NcRoot::P20 => (2, 0),
            NcRoot::P11 => (1, 1),
            NcRoot::P02 => (0, 2),
            NcRoot::M20 => (-2, 0),
            NcRoot::M11 => (-1, -1),
            NcRoot::M02 => (0, -2),
        }
    }

    pub fn all() -> [NcRoot; 6] {
        [
            NcRoot::P20,
            NcRoot::P11,
            NcRoot::P02,
            NcRoot::M20,
            NcRoot::M11,
            NcRoot::M02,
        ]
    }
}

/// Root vector attached to a non-compact root label.
pub fn nc_root_vector(r: NcRoot) -> LieMatrix {
    match r {
        NcRoot::P20 => p_pm([[1, 0], [0, 0]], true),
        NcRoot::P11 => p_pm([[0, 1], [1, 0]], true),
        NcRoot::P02 => p_pm([[0, 0], [0, 1]], true),
        NcRoot::M20 => p_pm([[1, 0], [0, 0]], false),
        NcRoot::M11 => p_pm([[0, 1], [1, 0]], false),
        NcRoot::M02 => p_pm([[0, 0], [0, 1]], false),
    }
}

/// The Cayley element: (1/sqrt2) [[I, iI], [iI, I]].
pub fn cayley_j() -> LieMatrix {
    let h = CycScalar::from_rat(Rat::new(1, 2));
    let s = &CycScalar::sqrt2() * &h; // 1/sqrt2
    let is = &i() * &s;
    let mut out = LieMatrix::zero();
    for k in 0..2 {
        out.m[k][k] = s.clone();
        out.m[k + 2][k + 2] = s.clone();
        out.m[k][k + 2] = is.clone();
        out.m[k + 2][k] = is.clone();
    }
    out
}

/// The conjugation element with similitude factor -1.
pub fn conj_n() -> LieMatrix {
    LieMatrix::from_i64([[0, -1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]])
}

/// Similitude factor: tX psi X = nu(X) psi, or None when X is not a
/// similitude of the form.
pub fn similitude_factor(g: &LieMatrix) -> Option<CycScalar> {
    let lhs = g.transpose().mul(&psi()).mul(g);
    let p = psi();
    let mut nu: Option<CycScalar> = None;
    for r in 0..4 {
        for c in 0..4 {
            if p.m[r][c].is_zero() {
                if !lhs.m[r][c].is_zero() {
                    return None;
                }
            } else {
                let ratio = &lhs.m[r][c] * &p.m[r][c].inv().unwrap();
                match &nu {
                    None => nu = Some(ratio),
                    Some(v) => {
                        if *v != ratio {
                            return None;
                        }
                    }
                }
            }
        }
    }
    nu
}

/// Membership in the complexified symplectic Lie algebra:
/// tX psi + psi X = 0.
pub fn in_sp4(x: &LieMatrix) -> bool {
    x.transpose().mul(&psi()).add(&psi().mul(x)).is_zero()
}

/// Membership up to the similitude line: tX psi + psi X = c psi.
pub fn in_gsp4(x: &LieMatrix) -> Option<CycScalar> {
    let s = x.transpose().mul(&psi()).add(&psi().mul(x));
    let p = psi();
    let mut c: Option<CycScalar> = None;
    for r in 0..4 {
        for cc in 0..4 {
            if p.m[r][cc].is_zero() {
                if !s.m[r][cc].is_zero() {
                    return None;
                }
            } else {
                let ratio = &s.m[r][cc] * &p.m[r][cc].inv().unwrap();
                match &c {
                    None => c = Some(ratio),
                    Some(v) => {
                        if *v != ratio {
                            return None;
                        }
                    }
                }
            }
        }
    }
    c
}

/// Ordered 10-element basis of the symplectic algebra used by the
/// Cartan splitting: compact part first, then p+, then p-.
pub fn sp4_basis() -> Vec<(String, LieMatrix)> {
    let mut v: Vec<(String, LieMatrix)> = vec![
        ("T1".into(), t1()),
        ("T2".into(), t2()),
        ("Xc+".into(), x_compact_raise()),
        ("Xc-".into(), x_compact_lower()),
    ];
    for r in NcRoot::all() {
        v.push((format!("{:?}", r), nc_root_vector(r)));
    }
    v
}

/// Exact coordinates of x in the 10-element basis, or an error when x
/// is outside the algebra.
pub fn sp4_coordinates(x: &LieMatrix) -> Result<Vec<CycScalar>, CoreError> {
    if !in_sp4(x) {
        return Err(CoreError::BadMatrix("matrix outside the symplectic algebra".into()));
    }
    // Solve the 16x10 system by elimination over the field.
    let basis = sp4_basis();
    let mut rows: Vec<(Vec<CycScalar>, CycScalar)> = Vec::with_capacity(16);
    for r in 0..4 {
        for c in 0..4 {
            let coeffs: Vec<CycScalar> = basis.iter().map(|(_, b)| b.m[r][c].clone()).collect();
            rows.push((coeffs, x.m[r][c].clone()));
        }
    }
    let n = basis.len();
    let mut sol = vec![CycScalar::zero(); n];
    let mut used = vec![false; 16];
    for col in 0..n {
        let pr = (0..16)
            .find(|r| !used[*r] && !rows[*r].0[col].is_zero())
            .ok_or_else(|| CoreError::Internal("degenerate basis".into()))?;
        used[pr] = true;
        let inv = rows[pr].0[col].inv().unwrap();
        for k in 0..n {
            rows[pr].0[k] = &rows[pr].0[k] * &inv;
        }
        rows[pr].1 = &rows[pr].1 * &inv;
        let pivot_row = rows[pr].clone();
        for r in 0..16 {
            if r != pr && !rows[r].0[col].is_zero() {
                let f = rows[r].0[col].clone();
                for k in 0..n {
                    rows[r].0[k] = &rows[r].0[k] - &(&f * &pivot_row.0[k]);
                }
                rows[r].1 = &rows[r].1 - &(&f * &pivot_row.1);
            }
        }
        sol[col] = CycScalar::zero(); // filled below from the pivot rows
    }
    // After full elimination each pivot row reads off one coordinate.
    for (r, row) in rows.iter().enumerate() {
        let nonzero: Vec<usize> = (0..n).filter(|k| !row.0[*k].is_zero()).collect();
        match nonzero.len() {
            0 => {
                if !row.1.is_zero() {
                    return Err(CoreError::BadMatrix(format!(
                        "inconsistent system at row {}",
                        r
                    )));
                }
            }
            1 => sol[nonzero[0]] = row.1.clone(),
            _ => {
                return Err(CoreError::Internal("elimination left a mixed row".into()));
            }
        }
    }
    Ok(sol)
}

/// Cartan splitting x = k-part + p+ part + p- part.
pub fn cartan_split(x: &LieMatrix) -> Result<(LieMatrix, LieMatrix, LieMatrix), CoreError> {
    let coords = sp4_coordinates(x)?;
    let basis = sp4_basis();
    let mut kp = LieMatrix::zero();
    let mut pp = LieMatrix::zero();
    let mut pm = LieMatrix::zero();
    for (idx, (_, b)) in basis.iter().enumerate() {
        let part = b.scale(&coords[idx]);
        if idx < 4 {
            kp = kp.add(&part);
        } else if idx < 7 {
            pp = pp.add(&part);
        } else {
            pm = pm.add(&part);
        }
    }
    Ok((kp, pp, pm))
}

/// Block-interleaved embedding of a pair of 2x2 matrices: the first
/// factor occupies rows and columns {0, 2}, the second {1, 3}.
pub fn iota_embed(a: &[[CycScalar; 2]; 2], b: &[[CycScalar; 2]; 2]) -> LieMatrix {
    let mut out = LieMatrix::zero();
    let idx = [0usize, 2];
    let jdx = [1usize, 3];
    for r in 0..2 {
        for c in 0..2 {
            out.m[idx[r]][idx[c]] = a[r][c].clone();
            out.m[jdx[r]][jdx[c]] = b[r][c].clone();
        }
    }
    out
}

/// The four tangent-frame components of the two-factor symmetric space,
/// in the order used for the volume form: (v+, 0), (0, v+), (v-, 0), (0, v-).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Tangent {
    FirstPlus,
    SecondPlus,
    FirstMinus,
    SecondMinus,
}

/// Pushforward normalization of the tangent frame: first-factor
/// holomorphic vectors land on the (+-2, 0) root vectors, second-factor
/// ones on (0, +-2).
pub fn iota_push(t: Tangent) -> LieMatrix {
    match t {
        Tangent::FirstPlus => nc_root_vector(NcRoot::P20),
        Tangent::SecondPlus => nc_root_vector(NcRoot::P02),
        Tangent::FirstMinus => nc_root_vector(NcRoot::M20),
        Tangent::SecondMinus => nc_root_vector(NcRoot::M02),
    }
}

/// Linear extension of `iota_push` over the four frame components.
pub fn iota_push_linear(coeffs: &[CycScalar; 4]) -> LieMatrix {
    let mut out = LieMatrix::zero();
    for (c, t) in coeffs.iter().zip([
        Tangent::FirstPlus,
        Tangent::SecondPlus,
        Tangent::FirstMinus,
        Tangent::SecondMinus,
    ]) {
        out = out.add(&iota_push(t).scale(c));
    }
    out
}

// ---- algebraic (diagonal-torus) picture ----

/// Torus generator reading the first weight coordinate.
pub fn h1() -> LieMatrix {
    LieMatrix::from_i64([[1, 0, 0, 0], [0, 0, 0, 0], [0, 0, -1, 0], [0, 0, 0, 0]])
}

/// Torus generator reading the second weight coordinate.
pub fn h2() -> LieMatrix {
    LieMatrix::from_i64([[0, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 0], [0, 0, 0, -1]])
}

/// Simple short-root raising vector (weight (1, -1)).
pub fn x_short_raise() -> LieMatrix {
    LieMatrix::from_i64([[0, 1, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0], [0, 0, -1, 0]])
}

/// Simple short-root lowering vector (weight (-1, 1)).
pub fn x_short_lower() -> LieMatrix {
    LieMatrix::from_i64([[0, 0, 0, 0], [1, 0, 0, 0], [0, 0, 0, -1], [0, 0, 0, 0]])
}

/// Simple long-root raising vector (weight (0, 2)).
pub fn x_long_raise() -> LieMatrix {
    LieMatrix::from_i64([[0, 0, 0, 0], [0, 0, 0, 1], [0, 0, 0, 0], [0, 0, 0, 0]])
}

/// Simple long-root lowering vector (weight (0, -2)).
pub fn x_long_lower() -> LieMatrix {
    LieMatrix::from_i64([[0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0], [0, 1, 0, 0]])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn weight_relation(h: &LieMatrix, x: &LieMatrix, a: i64, b: i64, coef: (i64, i64)) -> bool {
        // [h, x] = i*(a*w1 + b*w2) x for h = w1 T1 + w2 T2 evaluated on coef
        let lhs = bracket(h, x);
        let scalar = &CycScalar::i() * &CycScalar::from_i64(a * coef.0 + b * coef.1);
        lhs == x.scale(&scalar)
    }

    #[test]
    fn cartan_is_abelian() {
        assert!(bracket(&t1(), &t2()).is_zero());
    }

    #[test]
    fn noncompact_root_vectors_have_stated_weights() {
        for r in NcRoot::all() {
            let (a, b) = r.weight();
            let x = nc_root_vector(r);
            assert!(weight_relation(&t1(), &x, a, b, (1, 0)), "{:?} vs T1", r);
            assert!(weight_relation(&t2(), &x, a, b, (0, 1)), "{:?} vs T2", r);
            assert!(in_sp4(&x), "{:?} in sp4", r);
        }
    }

    #[test]
    fn compact_pair_weights_and_bracket() {
        let xr = x_compact_raise();
        let xl = x_compact_lower();
        assert!(weight_relation(&t1(), &xr, 1, -1, (1, 0)));
        assert!(weight_relation(&t2(), &xr, 1, -1, (0, 1)));
        assert!(weight_relation(&t1(), &xl, -1, 1, (1, 0)));
        // frozen oracle value: [X_(1,-1), X_(-1,1)] = -i T1 + i T2
        let br = bracket(&xr, &xl);
        let want = t1().scale(&(-CycScalar::i())).add(&t2().scale(&CycScalar::i()));
        assert_eq!(br, want);
    }

    #[test]
    fn cayley_element_is_symplectic() {
        let j = cayley_j();
        assert_eq!(similitude_factor(&j), Some(CycScalar::one()));
        // J^-1 exists and conjugates compact torus to diagonal
        let ji = j.inverse().unwrap();
        let d = ji.mul(&t1()).mul(&j);
        // expected: diag(i, 0, -i, 0)
        let mut want = LieMatrix::zero();
        want.m[0][0] = CycScalar::i();
        want.m[2][2] = -CycScalar::i();
        assert_eq!(d, want);
    }

    #[test]
    fn conjugation_element_swaps_cartan_generators() {
        let n = conj_n();
        assert_eq!(similitude_factor(&n), Some(-CycScalar::one()));
        assert_eq!(ad_conjugate(&n, &t1()).unwrap(), t2().neg());
        assert_eq!(ad_conjugate(&n, &t2()).unwrap(), t1().neg());
    }

    #[test]
    fn rotation_block_diagonalizes_under_cayley() {
        // J^-1 (interleaved rotation block) J = diag(x+iy, x'+iy', x-iy, x'-iy')
        let (x, y) = (Rat::new(3, 5), Rat::new(4, 5));
        let (xp, yp) = (Rat::new(5, 13), Rat::new(12, 13));
        let rot = |x: &Rat, y: &Rat| -> [[CycScalar; 2]; 2] {
            [
                [CycScalar::from_rat(x.clone()), CycScalar::from_rat(y.clone())],
                [CycScalar::from_rat(-y.clone()), CycScalar::from_rat(x.clone())],
            ]
        };
        let g = iota_embed(&rot(&x, &y), &rot(&xp, &yp));
        let j = cayley_j();
        let d = ad_conjugate(&j.inverse().unwrap(), &g).unwrap();
        let diag = |a: usize| d.m[a][a].clone();
        assert_eq!(diag(0), CycScalar::gaussian(x.clone(), y.clone()));
        assert_eq!(diag(1), CycScalar::gaussian(xp.clone(), yp.clone()));
        assert_eq!(diag(2), CycScalar::gaussian(x.clone(), -y.clone()));
        assert_eq!(diag(3), CycScalar::gaussian(xp, -yp));
        for r in 0..4 {
            for c in 0..4 {
                if r != c {
                    assert!(d.m[r][c].is_zero());
                }
            }
        }
    }

    #[test]
    fn cartan_split_recombines() {
        // random-ish algebra element: combination of all ten basis vectors
        let mut x = LieMatrix::zero();
        for (idx, (_, b)) in sp4_basis().into_iter().enumerate() {
            x = x.add(&b.scale(&CycScalar::from_i64(idx as i64 + 1)));
        }
        let (kp, pp, pm) = cartan_split(&x).unwrap();
        assert_eq!(kp.add(&pp).add(&pm), x);
        // basis element goes to its own slot
        let (kp2, pp2, pm2) = cartan_split(&nc_root_vector(NcRoot::P20)).unwrap();
        assert!(kp2.is_zero() && pm2.is_zero());
        assert_eq!(pp2, nc_root_vector(NcRoot::P20));
        let (kp3, pp3, pm3) = cartan_split(&t1()).unwrap();
        assert!(pp3.is_zero() && pm3.is_zero());
        assert_eq!(kp3, t1());
        // dimensions: 4 + 3 + 3 = 10
        assert_eq!(sp4_basis().len(), 10);
    }

    #[test]
    fn outside_algebra_is_rejected() {
        let bad = LieMatrix::from_i64([[1, 0, 0, 0]; 4]);
        assert!(cartan_split(&bad).is_err());
    }

    #[test]
    fn conjugated_compact_raise_is_algebraic_short_root() {
        // frozen oracle: Ad_{J^-1}(X_(1,-1)) = E12 - E43
        let j = cayley_j();
        let y = ad_conjugate(&j.inverse().unwrap(), &x_compact_raise()).unwrap();
        assert_eq!(y, x_short_raise());
    }

    #[test]
    fn algebraic_root_vectors_in_sp4() {
        for x in [x_short_raise(), x_short_lower(), x_long_raise(), x_long_lower()] {
            assert!(in_sp4(&x));
        }
        // weights under h1, h2
        let check = |x: &LieMatrix, a: i64, b: i64| {
            assert_eq!(bracket(&h1(), x), x.scale(&CycScalar::from_i64(a)));
            assert_eq!(bracket(&h2(), x), x.scale(&CycScalar::from_i64(b)));
        };
        check(&x_short_raise(), 1, -1);
        check(&x_short_lower(), -1, 1);
        check(&x_long_raise(), 0, 2);
        check(&x_long_lower(), 0, -2);
    }

    #[test]
    fn tangent_pushforward_linearity() {
        let one = CycScalar::one();
        let v = iota_push_linear(&[one.clone(), CycScalar::zero(), one, CycScalar::zero()]);
        assert_eq!(
            v,
            nc_root_vector(NcRoot::P20).add(&nc_root_vector(NcRoot::M20))
        );
    }
}
