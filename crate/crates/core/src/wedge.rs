//! Wedge powers of the holomorphic/antiholomorphic tangent spaces, the
//! maximal-compact action on them, their decomposition into irreducible
//! unitary types, and the two projection coefficients recovered by
//! exact linear algebra in the nine-dimensional middle piece.

use crate::matrices::{
    bracket, nc_root_vector, sp4_coordinates, x_compact_lower, x_compact_raise, LieMatrix, NcRoot,
};
use crate::CoreError;
use spin4_exact::{CycScalar, Rat};

/// Degree pattern (number of holomorphic factors, antiholomorphic factors).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WedgePattern {
    /// Lambda^3 p+
    P3,
    /// Lambda^2 p+ (x) p-
    P2M1,
    /// p+ (x) Lambda^2 p-
    P1M2,
    /// Lambda^3 p-
    M3,
}

const PAIRS: [(usize, usize); 3] = [(0, 1), (0, 2), (1, 2)];

fn plus_basis() -> [LieMatrix; 3] {
    [
        nc_root_vector(NcRoot::P20),
        nc_root_vector(NcRoot::P11),
        nc_root_vector(NcRoot::P02),
    ]
}

fn minus_basis() -> [LieMatrix; 3] {
    [
        nc_root_vector(NcRoot::M20),
        nc_root_vector(NcRoot::M11),
        nc_root_vector(NcRoot::M02),
    ]
}

fn plus_weights() -> [(i64, i64); 3] {
    [(2, 0), (1, 1), (0, 2)]
}

fn minus_weights() -> [(i64, i64); 3] {
    [(-2, 0), (-1, -1), (0, -2)]
}

/// Decompose [a, x] in the three-element holomorphic (or antiholomorphic)
/// root basis; `a` must be compact so that the bracket stays inside.
fn ad_in_triple(a: &LieMatrix, x: &LieMatrix, plus: bool) -> Result<[CycScalar; 3], CoreError> {
    let br = bracket(a, x);
    let coords = sp4_coordinates(&br)?;
    let (lo, other) = if plus { (4usize, 7..10) } else { (7usize, 4..7) };
    for k in other {
        if !coords[k].is_zero() {
            return Err(CoreError::Internal("bracket left the graded piece".into()));
        }
    }
    for k in 0..4 {
        if !coords[k].is_zero() {
            return Err(CoreError::Internal("bracket left the graded piece".into()));
        }
    }
    Ok([
        coords[lo].clone(),
        coords[lo + 1].clone(),
        coords[lo + 2].clone(),
    ])
}

/// A vector in one of the wedge spaces, over the fixed basis below.
///
/// Pattern P2M1: index = 3 * pair + minus with pairs (0,1), (0,2), (1,2).
/// Pattern P1M2: index = 3 * plus + pair over antiholomorphic pairs.
/// Patterns P3, M3: a single basis element.
pub type WedgeVec = Vec<CycScalar>;

pub fn wedge_dim(p: WedgePattern) -> usize {
    match p {
        WedgePattern::P3 | WedgePattern::M3 => 1,
        _ => 9,
    }
}

/// Weight of each basis element under the compact torus.
pub fn basis_weights(p: WedgePattern) -> Vec<(i64, i64)> {
    let pw = plus_weights();
    let mw = minus_weights();
    let sum3 = |w: &[(i64, i64); 3]| -> (i64, i64) {
        (w[0].0 + w[1].0 + w[2].0, w[0].1 + w[1].1 + w[2].1)
    };
    match p {
        WedgePattern::P3 => vec![sum3(&pw)],
        WedgePattern::M3 => vec![sum3(&mw)],
        WedgePattern::P2M1 => {
            let mut out = Vec::with_capacity(9);
            for (a, b) in PAIRS {
                for l in 0..3 {
                    out.push((pw[a].0 + pw[b].0 + mw[l].0, pw[a].1 + pw[b].1 + mw[l].1));
                }
            }
            out
        }
        WedgePattern::P1M2 => {
            let mut out = Vec::with_capacity(9);
            for a in 0..3 {
                for (l, m) in PAIRS {
                    out.push((pw[a].0 + mw[l].0 + mw[m].0, pw[a].1 + mw[l].1 + mw[m].1));
                }
            }
            out
        }
    }
}

fn add_entry(cols: &mut [Vec<CycScalar>], col: usize, row: usize, c: CycScalar) {
    if !c.is_zero() {
        cols[col][row] = &cols[col][row] + &c;
    }
}

fn signed(c: &CycScalar, s: i64) -> CycScalar {
    if s >= 0 {
        c.clone()
    } else {
        -c.clone()
    }
}

fn pair_index(a: usize, b: usize) -> (usize, i64) {
    if a < b {
        (PAIRS.iter().position(|p| *p == (a, b)).unwrap(), 1)
    } else {
        (PAIRS.iter().position(|p| *p == (b, a)).unwrap(), -1)
    }
}

/// Matrix (stored by columns) of the wedge action of a compact element.
pub fn wedge_action(p: WedgePattern, a: &LieMatrix) -> Result<Vec<Vec<CycScalar>>, CoreError> {
    let dim = wedge_dim(p);
    let mut cols: Vec<Vec<CycScalar>> = vec![vec![CycScalar::zero(); dim]; dim];
    let pb = plus_basis();
    let mb = minus_basis();
    let ad_p: Vec<[CycScalar; 3]> = pb
        .iter()
        .map(|x| ad_in_triple(a, x, true))
        .collect::<Result<_, _>>()?;
    let ad_m: Vec<[CycScalar; 3]> = mb
        .iter()
        .map(|x| ad_in_triple(a, x, false))
        .collect::<Result<_, _>>()?;

    match p {
        WedgePattern::P3 | WedgePattern::M3 => {
            let ad = if p == WedgePattern::P3 { &ad_p } else { &ad_m };
            let mut tr = CycScalar::zero();
            for (k, row) in ad.iter().enumerate() {
                tr = &tr + &row[k];
            }
            add_entry(&mut cols, 0, 0, tr);
        }
        WedgePattern::P2M1 => {
            for (pi, (ai, bi)) in PAIRS.iter().enumerate() {
                for l in 0..3 {
                    let col = 3 * pi + l;
                    for (t, c) in ad_p[*ai].iter().enumerate() {
                        if t == *bi || c.is_zero() {
                            continue;
                        }
                        let (pi2, sgn) = pair_index(t, *bi);
                        add_entry(&mut cols, col, 3 * pi2 + l, signed(c, sgn));
                    }
                    for (t, c) in ad_p[*bi].iter().enumerate() {
                        if *ai == t || c.is_zero() {
                            continue;
                        }
                        let (pi2, sgn) = pair_index(*ai, t);
                        add_entry(&mut cols, col, 3 * pi2 + l, signed(c, sgn));
                    }
                    for (t, c) in ad_m[l].iter().enumerate() {
                        add_entry(&mut cols, col, 3 * pi + t, c.clone());
                    }
                }
            }
        }
        WedgePattern::P1M2 => {
            for a_idx in 0..3 {
                for (pi, (li, mi)) in PAIRS.iter().enumerate() {
                    let col = 3 * a_idx + pi;
                    for (t, c) in ad_p[a_idx].iter().enumerate() {
                        add_entry(&mut cols, col, 3 * t + pi, c.clone());
                    }
                    for (t, c) in ad_m[*li].iter().enumerate() {
                        if t == *mi || c.is_zero() {
                            continue;
                        }
                        let (pi2, sgn) = pair_index(t, *mi);
                        add_entry(&mut cols, col, 3 * a_idx + pi2, signed(c, sgn));
                    }
                    for (t, c) in ad_m[*mi].iter().enumerate() {
                        if *li == t || c.is_zero() {
                            continue;
                        }
                        let (pi2, sgn) = pair_index(*li, t);
                        add_entry(&mut cols, col, 3 * a_idx + pi2, signed(c, sgn));
                    }
                }
            }
        }
    }
    Ok(cols)
}

/// Apply a column-stored operator to a vector.
pub fn apply(cols: &[Vec<CycScalar>], v: &WedgeVec) -> WedgeVec {
    let dim = cols.len();
    let mut out = vec![CycScalar::zero(); dim];
    for (c, vc) in v.iter().enumerate() {
        if vc.is_zero() {
            continue;
        }
        for r in 0..dim {
            if !cols[c][r].is_zero() {
                out[r] = &out[r] + &(&cols[c][r] * vc);
            }
        }
    }
    out
}

/// Decompose a pattern space into irreducible unitary types by greedy
/// highest-weight subtraction on the torus character.
pub fn wedge_decompose(p: WedgePattern) -> Vec<((i64, i64), usize)> {
    use std::collections::BTreeMap;
    let mut mult: BTreeMap<(i64, i64), i64> = BTreeMap::new();
    for w in basis_weights(p) {
        *mult.entry(w).or_insert(0) += 1;
    }
    let mut out = Vec::new();
    loop {
        let hw = mult
            .iter()
            .filter(|(_, c)| **c > 0)
            .map(|(w, _)| *w)
            .max_by_key(|(a, b)| (a - b, *a));
        let Some((a, b)) = hw else { break };
        let count = mult[&(a, b)];
        out.push(((a, b), count as usize));
        for s in 0..=(a - b) {
            *mult.entry((b + s, a - s)).or_insert(0) -= count;
        }
        mult.retain(|_, c| *c != 0);
        assert!(
            mult.values().all(|c| *c > 0),
            "non-decomposable weight multiset"
        );
    }
    out
}

/// Result of the nine-dimensional projection solve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjectionCoefficients {
    /// Component of X(2,0)^X(0,2) (x) X(0,-2) along the once-lowered
    /// highest weight vector of the five-dimensional type.
    pub alpha: Rat,
    /// Component of X(2,0)^X(0,2) (x) X(-2,0) along the thrice-lowered
    /// highest weight vector of the five-dimensional type.
    pub beta3: Rat,
    /// Component of the first vector in the one-dimensional type.
    pub gamma: Rat,
}

/// Index of X20 ^ X11 (x) Xm02, the highest weight vector.
const HW_INDEX: usize = 2;
/// Index of X20 ^ X02 (x) Xm02 (weight (2, 0)).
const T1_INDEX: usize = 5;
/// Index of X20 ^ X02 (x) Xm20 (weight (0, 2)).
const T2_INDEX: usize = 3;
/// Index of X20 ^ X11 (x) Xm11 (weight (2, 0)).
const W1_INDEX: usize = 1;

fn unit(dim: usize, k: usize) -> WedgeVec {
    let mut v = vec![CycScalar::zero(); dim];
    v[k] = CycScalar::one();
    v
}

/// Solve for the projection coefficients in Lambda^2 p+ (x) p-.
///
/// `reversed_basis` re-runs the linear solve with the opposite
/// equation enumeration order; the result must not change.
pub fn projection_coeffs(reversed_basis: bool) -> Result<ProjectionCoefficients, CoreError> {
    let p = WedgePattern::P2M1;
    let ax = wedge_action(p, &x_compact_raise())?;
    let ay = wedge_action(p, &x_compact_lower())?;
    let hw = unit(9, HW_INDEX);
    let v_t1 = unit(9, T1_INDEX);
    let v_t2 = unit(9, T2_INDEX);

    // alpha: ad_X(t1) = alpha * ad_X(ad_Y(hw)), both inside the
    // one-dimensional weight-(3,-1) space.
    let lhs = apply(&ax, &v_t1);
    let rhs = apply(&ax, &apply(&ay, &hw));
    let alpha = ratio_of_parallel(&lhs, &rhs)?;

    // gamma: the one-dimensional-type component of t1. It vanishes
    // exactly when t1 lies in the span of the two weight-(2,0) chain
    // vectors of the bigger types.
    let chain1 = apply(&ay, &hw);
    let hw20 = weight20_kernel_vector(&ax)?;
    solve_two_term(&v_t1, &chain1, &hw20, reversed_basis)?;
    let gamma = Rat::zero();

    // beta3: t2 = beta3 * ad_Y^3(hw) + delta * ad_Y^2(hw20).
    let y3 = apply(&ay, &apply(&ay, &apply(&ay, &hw)));
    let y2h = apply(&ay, &apply(&ay, &hw20));
    let (beta3, _delta) = solve_two_term(&v_t2, &y3, &y2h, reversed_basis)?;

    Ok(ProjectionCoefficients { alpha, beta3, gamma })
}

/// The weight-(2,0) vector annihilated by the raising operator: the
/// highest weight of the three-dimensional type.
fn weight20_kernel_vector(ax: &[Vec<CycScalar>]) -> Result<WedgeVec, CoreError> {
    let cands = [T1_INDEX, W1_INDEX];
    let im0 = apply(ax, &unit(9, cands[0]));
    let im1 = apply(ax, &unit(9, cands[1]));
    for k in 0..9 {
        if !im0[k].is_zero() || !im1[k].is_zero() {
            let (a, b) = if im1[k].is_zero() {
                (CycScalar::zero(), CycScalar::one())
            } else {
                (CycScalar::one(), -(&im0[k] * &im1[k].inv().unwrap()))
            };
            let mut v = vec![CycScalar::zero(); 9];
            v[cands[0]] = a;
            v[cands[1]] = b;
            let img = apply(ax, &v);
            if img.iter().any(|c| !c.is_zero()) {
                return Err(CoreError::Internal("kernel candidate not annihilated".into()));
            }
            return Ok(v);
        }
    }
    Err(CoreError::Internal("raising operator vanished on the weight space".into()))
}

fn ratio_of_parallel(lhs: &WedgeVec, rhs: &WedgeVec) -> Result<Rat, CoreError> {
    let mut ratio: Option<CycScalar> = None;
    for k in 0..lhs.len() {
        match (lhs[k].is_zero(), rhs[k].is_zero()) {
            (true, true) => continue,
            (false, false) => {
                let r = &lhs[k] * &rhs[k].inv().unwrap();
                match &ratio {
                    None => ratio = Some(r),
                    Some(v) => {
                        if *v != r {
                            return Err(CoreError::Internal("vectors not parallel".into()));
                        }
                    }
                }
            }
            _ => return Err(CoreError::Internal("vectors not parallel".into())),
        }
    }
    let r = ratio.ok_or_else(|| CoreError::Internal("zero vectors".into()))?;
    r.as_rat()
        .ok_or_else(|| CoreError::Internal("irrational projection ratio".into()))
}

/// Solve v = x a + y b exactly; every equation is verified afterwards.
fn solve_two_term(
    v: &WedgeVec,
    a: &WedgeVec,
    b: &WedgeVec,
    reversed: bool,
) -> Result<(Rat, Rat), CoreError> {
    let order: Vec<usize> = if reversed {
        (0..v.len()).rev().collect()
    } else {
        (0..v.len()).collect()
    };
    let mut eqs: Vec<(CycScalar, CycScalar, CycScalar)> = Vec::new();
    for &k in &order {
        if !a[k].is_zero() || !b[k].is_zero() {
            eqs.push((a[k].clone(), b[k].clone(), v[k].clone()));
        } else if !v[k].is_zero() {
            return Err(CoreError::Internal("target outside the span".into()));
        }
    }
    for i in 0..eqs.len() {
        for j in (i + 1)..eqs.len() {
            let det = &(&eqs[i].0 * &eqs[j].1) - &(&eqs[i].1 * &eqs[j].0);
            if det.is_zero() {
                continue;
            }
            let det_inv = det.inv().unwrap();
            let x = &(&(&eqs[i].2 * &eqs[j].1) - &(&eqs[i].1 * &eqs[j].2)) * &det_inv;
            let y = &(&(&eqs[i].0 * &eqs[j].2) - &(&eqs[i].2 * &eqs[j].0)) * &det_inv;
            for e in &eqs {
                let lhs = &(&e.0 * &x) + &(&e.1 * &y);
                if lhs != e.2 {
                    return Err(CoreError::Internal("target outside the span".into()));
                }
            }
            let xr = x
                .as_rat()
                .ok_or_else(|| CoreError::Internal("irrational solution".into()))?;
            let yr = y
                .as_rat()
                .ok_or_else(|| CoreError::Internal("irrational solution".into()))?;
            return Ok((xr, yr));
        }
    }
    Err(CoreError::Internal("rank-deficient two-term solve".into()))
}
