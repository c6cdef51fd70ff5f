//! Decomposition of a module under the embedded two-factor subgroup,
//! projection onto one isotypic component, and the scan for non-vanishing
//! of the projected lowered transport vectors.
//!
//! Everything runs in the algebraic picture: the compact-root ladder is
//! conjugated by the Cayley element into the short-root ladder, which
//! acts through the stored module operators. The projection onto an
//! isotypic type is computed per torus weight space, where the chains
//! from the highest-weight kernels of the two raising operators span
//! everything.

use crate::branching::{branching_admissible, BranchQuery};
use crate::irrep::{OpLabel, RepModule};
use crate::CoreError;
use spin4_exact::CycScalar;
use std::collections::BTreeMap;

/// All highest-weight vectors of two-factor type (p', q') in the module:
/// kernel of both raising operators inside the (p', q') weight space,
/// as module-coordinate vectors.
pub fn factor_highest_vectors(
    m: &RepModule,
    p: i64,
    q: i64,
) -> Result<Vec<Vec<CycScalar>>, CoreError> {
    let idxs: Vec<usize> = (0..m.dim()).filter(|i| m.weights[*i] == (p, q)).collect();
    if idxs.is_empty() {
        return Ok(Vec::new());
    }
    // images of the two raising operators on each candidate basis vector
    let mut images: Vec<Vec<CycScalar>> = Vec::new(); // stacked image coordinates
    for &i in &idxs {
        let mut unit = vec![CycScalar::zero(); m.dim()];
        unit[i] = CycScalar::one();
        let im1 = m.apply_op(OpLabel::FirstFactorRaise, &unit);
        let im2 = m.apply_op(OpLabel::LongRaise, &unit);
        let mut stacked = im1;
        stacked.extend(im2);
        images.push(stacked);
    }
    // kernel of the (2 dim) x (candidates) system by column elimination
    let rows = 2 * m.dim();
    let cols = idxs.len();
    let mut mat: Vec<Vec<CycScalar>> = (0..rows)
        .map(|r| (0..cols).map(|c| images[c][r].clone()).collect())
        .collect();
    // row-reduce, tracking pivot columns
    let mut pivots: Vec<usize> = Vec::new();
    let mut rr = 0usize;
    for c in 0..cols {
        let Some(pr) = (rr..rows).find(|r| !mat[*r][c].is_zero()) else {
            continue;
        };
        mat.swap(rr, pr);
        let inv = mat[rr][c].inv().unwrap();
        for cc in 0..cols {
            mat[rr][cc] = &mat[rr][cc] * &inv;
        }
        for r in 0..rows {
            if r != rr && !mat[r][c].is_zero() {
                let f = mat[r][c].clone();
                for cc in 0..cols {
                    mat[r][cc] = &mat[r][cc] - &(&f * &mat[rr][cc]);
                }
            }
        }
        pivots.push(c);
        rr += 1;
        if rr == rows {
            break;
        }
    }
    // free columns give the kernel basis
    let mut out = Vec::new();
    for free in 0..cols {
        if pivots.contains(&free) {
            continue;
        }
        let mut sol = vec![CycScalar::zero(); cols];
        sol[free] = CycScalar::one();
        for (prow, pc) in pivots.iter().enumerate() {
            sol[*pc] = -mat[prow][free].clone();
        }
        let mut vec = vec![CycScalar::zero(); m.dim()];
        for (c, s) in sol.iter().enumerate() {
            if !s.is_zero() {
                vec[idxs[c]] = s.clone();
            }
        }
        out.push(vec);
    }
    Ok(out)
}

/// Internal: per-weight-space decomposition data.
struct WeightSpaceSplit {
    /// spanning vectors, each tagged with its originating type (p', q')
    vectors: Vec<((i64, i64), Vec<CycScalar>)>,
    /// indices of the weight space in the module basis
    support: Vec<usize>,
}

fn lower_power(
    m: &RepModule,
    l: OpLabel,
    v: &[CycScalar],
    times: i64,
) -> Vec<CycScalar> {
    let mut out = v.to_vec();
    for _ in 0..times {
        out = m.apply_op(l, &out);
    }
    out
}

fn weight_space_split(m: &RepModule, w: (i64, i64)) -> Result<WeightSpaceSplit, CoreError> {
    let support: Vec<usize> = (0..m.dim()).filter(|i| m.weights[*i] == w).collect();
    let mut vectors = Vec::new();
    if support.is_empty() {
        return Ok(WeightSpaceSplit { vectors, support });
    }
    // candidate types: (p', q') = (|w0| + 2a, |w1| + 2b)
    let max1 = m.highest_weight.k() + m.highest_weight.kp();
    for p in 0..=max1 {
        if (p - w.0).rem_euclid(2) != 0 || p < w.0.abs() {
            continue;
        }
        for q in 0..=max1 {
            if (q - w.1).rem_euclid(2) != 0 || q < w.1.abs() {
                continue;
            }
            let hws = factor_highest_vectors(m, p, q)?;
            let a = (p - w.0) / 2;
            let b = (q - w.1) / 2;
            for hw in hws {
                let lowered = lower_power(
                    m,
                    OpLabel::LongLower,
                    &lower_power(m, OpLabel::FirstFactorLower, &hw, a),
                    b,
                );
                if lowered.iter().any(|c| !c.is_zero()) {
                    vectors.push(((p, q), lowered));
                }
            }
        }
    }
    Ok(WeightSpaceSplit { vectors, support })
}

/// Result of projecting onto the (p, q)-isotypic component.
pub struct IsotypicProjection {
    /// the projected vector in module coordinates
    pub component: Vec<CycScalar>,
    /// true when the pair (p, q) is branching-inadmissible: the
    /// component is then identically zero
    pub inadmissible: bool,
}

/// Project a module vector onto the full (p, q)-isotypic component of
/// the two-factor action.
pub fn isotypic_project(
    m: &RepModule,
    p: i64,
    q: i64,
    vec: &[CycScalar],
) -> Result<IsotypicProjection, CoreError> {
    let bq = BranchQuery::new(
        p,
        q,
        m.highest_weight.k(),
        m.highest_weight.kp(),
    );
    let admissible = match bq {
        Ok(b) => branching_admissible(&b)?,
        Err(_) => false, // parity mismatch: component trivially zero
    };
    if !admissible {
        return Ok(IsotypicProjection {
            component: vec![CycScalar::zero(); m.dim()],
            inadmissible: true,
        });
    }
    // split the vector into weight components and project each
    let mut by_weight: BTreeMap<(i64, i64), Vec<CycScalar>> = BTreeMap::new();
    for (i, c) in vec.iter().enumerate() {
        if !c.is_zero() {
            by_weight
                .entry(m.weights[i])
                .or_insert_with(|| vec![CycScalar::zero(); m.dim()])[i] = c.clone();
        }
    }
    let mut out = vec![CycScalar::zero(); m.dim()];
    for (w, comp) in by_weight {
        let split = weight_space_split(m, w)?;
        let part = project_in_weight_space(m, &split, &comp, (p, q))?;
        for (i, c) in part.iter().enumerate() {
            if !c.is_zero() {
                out[i] = &out[i] + c;
            }
        }
    }
    Ok(IsotypicProjection { component: out, inadmissible: false })
}

/// Solve comp = sum of tagged spanning vectors, return the partial sum
/// over vectors tagged (p, q).
fn project_in_weight_space(
    m: &RepModule,
    split: &WeightSpaceSplit,
    comp: &[CycScalar],
    target: (i64, i64),
) -> Result<Vec<CycScalar>, CoreError> {
    let cols = split.vectors.len();
    if cols == 0 {
        return Err(CoreError::Internal("empty weight-space span".into()));
    }
    let rows: Vec<usize> = split.support.clone();
    // Gaussian solve: possibly overdetermined consistent system
    let mut aug: Vec<Vec<CycScalar>> = rows
        .iter()
        .map(|r| {
            let mut row: Vec<CycScalar> = split
                .vectors
                .iter()
                .map(|(_, v)| v[*r].clone())
                .collect();
            row.push(comp[*r].clone());
            row
        })
        .collect();
    let nrows = aug.len();
    let mut pivots: Vec<(usize, usize)> = Vec::new(); // (row, col)
    let mut rr = 0usize;
    for c in 0..cols {
        let Some(pr) = (rr..nrows).find(|r| !aug[*r][c].is_zero()) else {
            continue;
        };
        aug.swap(rr, pr);
        let inv = aug[rr][c].inv().unwrap();
        for cc in 0..=cols {
            aug[rr][cc] = &aug[rr][cc] * &inv;
        }
        for r in 0..nrows {
            if r != rr && !aug[r][c].is_zero() {
                let f = aug[r][c].clone();
                for cc in 0..=cols {
                    aug[r][cc] = &aug[r][cc] - &(&f * &aug[rr][cc]);
                }
            }
        }
        pivots.push((rr, c));
        rr += 1;
    }
    // consistency
    for r in rr..nrows {
        if !aug[r][cols].is_zero() {
            return Err(CoreError::Internal(
                "weight-space span does not cover the component".into(),
            ));
        }
    }
    let mut coeffs = vec![CycScalar::zero(); cols];
    for (r, c) in pivots {
        coeffs[c] = aug[r][cols].clone();
    }
    // assemble the target-tagged part
    let mut out = vec![CycScalar::zero(); m.dim()];
    for (cidx, ((tag, v), co)) in split.vectors.iter().zip(&coeffs).enumerate() {
        let _ = cidx;
        if *tag == target && !co.is_zero() {
            for (i, x) in v.iter().enumerate() {
                if !x.is_zero() {
                    out[i] = &out[i] + &(x * co);
                }
            }
        }
    }
    Ok(out)
}

/// One line of the scan report.
#[derive(Debug, Clone)]
pub struct ScanEntry {
    pub i: i64,
    /// dual-basis pair matched by weight, when the parity admits one
    pub matched_pair: Option<(i64, i64)>,
    /// true when the isotypic component of the i-th lowered transport
    /// vector is non-zero
    pub nonzero: bool,
}

/// Scan the lowered transports of the weight-(-k, k') vector for
/// non-vanishing isotypic components.
///
/// The compact-root ladder applied to the transported vector equals the
/// Cayley transport of the short-root ladder applied to the original
/// vector, and the projection commutes with the transport, so the scan
/// runs entirely in the algebraic picture.
pub fn lambda_scan(
    m: &RepModule,
    p: i64,
    q: i64,
    i_max: i64,
) -> Result<Vec<ScanEntry>, CoreError> {
    let k = m.highest_weight.k();
    let kp = m.highest_weight.kp();
    let w = m.weight_vector((-k, kp))?;
    let mut out = Vec::new();
    let mut current = w;
    for i in 0..=i_max {
        if i > 0 {
            current = m.apply_op(OpLabel::ShortRaise, &current);
        }
        // weight of the i-th vector: (-k + i, k' - i)
        let matched = {
            let r2 = p + k - i; // 2r
            let s2 = q - kp + i; // 2s
            if r2.rem_euclid(2) == 0
                && s2.rem_euclid(2) == 0
                && (0..=2 * p).contains(&r2)
                && (0..=2 * q).contains(&s2)
            {
                Some((r2 / 2, s2 / 2))
            } else {
                None
            }
        };
        let nonzero = if current.iter().all(|c| c.is_zero()) {
            false
        } else {
            let proj = isotypic_project(m, p, q, &current)?;
            proj.component.iter().any(|c| !c.is_zero())
        };
        out.push(ScanEntry { i, matched_pair: matched, nonzero });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::irrep::build_irrep;
    use crate::weight::Weight;
    use rand::{Rng, SeedableRng};

    #[test]
    fn projection_is_idempotent_and_equivariant() {
        let m = build_irrep(Weight::new(2, 1, 1).unwrap()).unwrap();
        let (p, q) = (1, 0);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..200 {
            let v: Vec<CycScalar> = (0..m.dim())
                .map(|_| CycScalar::from_i64(rng.gen_range(-3i64..=3)))
                .collect();
            let pr = isotypic_project(&m, p, q, &v).unwrap();
            let pr2 = isotypic_project(&m, p, q, &pr.component).unwrap();
            assert_eq!(pr.component, pr2.component);
            // commutes with the subgroup action generators
            for l in [
                OpLabel::FirstFactorRaise,
                OpLabel::FirstFactorLower,
                OpLabel::LongRaise,
                OpLabel::LongLower,
            ] {
                let av = m.apply_op(l, &v);
                let p_av = isotypic_project(&m, p, q, &av).unwrap().component;
                let a_pv = m.apply_op(l, &pr.component);
                assert_eq!(p_av, a_pv);
            }
        }
    }

    #[test]
    fn inadmissible_pair_gives_flagged_zero() {
        let m = build_irrep(Weight::new(2, 1, 1).unwrap()).unwrap();
        // p = 3 > k = 2 violates the first inequality
        let v = vec![CycScalar::one(); m.dim()];
        let pr = isotypic_project(&m, 3, 0, &v).unwrap();
        assert!(pr.inadmissible);
        assert!(pr.component.iter().all(|c| c.is_zero()));
    }

    #[test]
    fn scan_small_case() {
        // (k, k') = (2, 1), p = k-1 = 1, q = k'-1 = 0
        let m = build_irrep(Weight::new(2, 1, -1).unwrap()).unwrap();
        let scan = lambda_scan(&m, 1, 0, 2).unwrap();
        // i = 1: matched pair (p, 0), non-zero
        assert_eq!(scan[1].matched_pair, Some((1, 0)));
        assert!(scan[1].nonzero);
        // i = 0 and i = 2: parity mismatch, no matched pair
        assert_eq!(scan[0].matched_pair, None);
        assert_eq!(scan[2].matched_pair, None);
    }

    #[test]
    fn parity_blocked_transport_projects_to_zero() {
        let m = build_irrep(Weight::new(2, 1, -1).unwrap()).unwrap();
        let w = m.weight_vector((-2, 1)).unwrap();
        // the untouched vector (i = 0) has weight (-2, 1); for (p, q) =
        // (1, 0) the weights in the isotypic component have odd first
        // coordinate, so the projection vanishes
        let pr = isotypic_project(&m, 1, 0, &w).unwrap();
        assert!(!pr.inadmissible);
        assert!(pr.component.iter().all(|c| c.is_zero()));
    }
}
