//! Exact Hausdorff distances between polars, on squared values.

use crate::gauge::{gauge_with, shifted_offsets, translate};
use crate::CutError;
use latcut_geometry::linalg::solve;
use latcut_geometry::rat::{dot, norm_sq, sub, to_f64, Rat, RatVec};
use latcut_geometry::{polar, Polyhedron};
use num_traits::{One, Signed, Zero};

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Squared distance from `x` to the affine hull of `pts` when its
/// projection has nonnegative barycentric coordinates.
fn face_candidate(x: &[Rat], pts: &[&RatVec]) -> Option<Rat> {
    let s0 = pts[0];
    let dirs: Vec<RatVec> = pts[1..].iter().map(|p| sub(p, s0)).collect();
    let d = sub(x, s0);
    if dirs.is_empty() {
        return Some(norm_sq(&d));
    }
    let gram: Vec<RatVec> = dirs.iter().map(|u| dirs.iter().map(|v| dot(u, v)).collect()).collect();
    let rhs: RatVec = dirs.iter().map(|u| dot(u, &d)).collect();
    let mu = solve(&gram, &rhs)?;
    let lambda0 = Rat::one() - mu.iter().sum::<Rat>();
    if lambda0.is_negative() || mu.iter().any(|m| m.is_negative()) {
        return None;
    }
    let mut proj_off = vec![Rat::zero(); x.len()];
    for (m, u) in mu.iter().zip(&dirs) {
        for (p, ui) in proj_off.iter_mut().zip(u) {
            *p += m * ui;
        }
    }
    Some(norm_sq(&sub(&d, &proj_off)))
}

/// Exact squared Euclidean distance from `x` to `conv(verts)`.
pub fn dist_sq_to_hull(x: &[Rat], verts: &[RatVec]) -> Rat {
    let n = x.len();
    let mut best: Option<Rat> = None;
    for k in 1..=verts.len().min(n + 1) {
        for idx in combinations(verts.len(), k) {
            let pts: Vec<&RatVec> = idx.iter().map(|&i| &verts[i]).collect();
            if let Some(d) = face_candidate(x, &pts) {
                if best.as_ref().is_none_or(|b| d < *b) {
                    best = Some(d);
                }
            }
        }
        if best.as_ref().is_some_and(|b| b.is_zero()) {
            break;
        }
    }
    best.expect("nonempty vertex set")
}

/// Squared Hausdorff distance between two polytopes given by vertices.
pub fn hausdorff_sq(a: &[RatVec], b: &[RatVec]) -> Rat {
    let one_way = |p: &[RatVec], q: &[RatVec]| p.iter().map(|v| dist_sq_to_hull(v, q)).max().unwrap_or_else(Rat::zero);
    one_way(a, b).max(one_way(b, a))
}

/// `(B - f)°`
pub fn polar_at(b: &Polyhedron, f: &[Rat]) -> Result<Polyhedron, CutError> {
    shifted_offsets(b, f)?;
    Ok(polar(&translate(b, f))?)
}

#[derive(Clone, Debug, PartialEq)]
pub struct FMetric {
    pub dist_sq: Rat,
    pub dist: f64,
}

pub fn f_metric(b1: &Polyhedron, b2: &Polyhedron, f: &[Rat]) -> Result<FMetric, CutError> {
    let p1 = polar_at(b1, f)?;
    let p2 = polar_at(b2, f)?;
    let dist_sq = hausdorff_sq(&p1.vertices, &p2.vertices);
    let dist = to_f64(&dist_sq).sqrt();
    Ok(FMetric { dist_sq, dist })
}

/// Decides `√a ≤ √b + √c` exactly for nonnegative rationals.
pub fn sqrt_le_sum(a: &Rat, b: &Rat, c: &Rat) -> bool {
    let d = a - b - c;
    if !d.is_positive() {
        return true;
    }
    let four = Rat::from_integer(4.into());
    &d * &d <= four * b * c
}

#[derive(Clone, Debug, PartialEq)]
pub struct ConvergenceStep {
    pub dist_sq: Rat,
    pub max_deviation: Rat,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ConvergenceReport {
    pub steps: Vec<ConvergenceStep>,
    /// Every strict decrease in distance comes with a non-increase in
    /// maximal gauge deviation.
    pub monotone: bool,
}

/// Tracks `max_r |ψ_{B_t−f}(r) − ψ_{B−f}(r)|` over sample directions along
/// a sequence, next to `d_f(B_t, B)`.
pub fn gauge_convergence_check(
    seq: &[Polyhedron],
    b: &Polyhedron,
    f: &[Rat],
    dirs: &[RatVec],
) -> Result<ConvergenceReport, CutError> {
    let cb = shifted_offsets(b, f)?;
    let base: Vec<Rat> = dirs.iter().map(|r| gauge_with(b, &cb, r)).collect();
    let mut steps = Vec::with_capacity(seq.len());
    for bt in seq {
        let ct = shifted_offsets(bt, f)?;
        let max_deviation = dirs
            .iter()
            .zip(&base)
            .map(|(r, g)| (gauge_with(bt, &ct, r) - g).abs())
            .max()
            .unwrap_or_else(Rat::zero);
        let dist_sq = f_metric(bt, b, f)?.dist_sq;
        steps.push(ConvergenceStep { dist_sq, max_deviation });
    }
    let monotone = steps
        .windows(2)
        .all(|w| w[1].dist_sq >= w[0].dist_sq || w[1].max_deviation <= w[0].max_deviation);
    Ok(ConvergenceReport { steps, monotone })
}

#[cfg(test)]
mod tests {
    use super::*;
    use latcut_geometry::rat::{frac, fvec, int, ivec};
    use latcut_geometry::vrep_to_hrep;

    #[test]
    fn point_to_triangle() {
        let tri = vec![ivec(&[0, 0]), ivec(&[2, 0]), ivec(&[0, 2])];
        assert_eq!(dist_sq_to_hull(&ivec(&[2, 2]), &tri), int(2));
        assert_eq!(dist_sq_to_hull(&ivec(&[-1, -1]), &tri), int(2));
        assert_eq!(dist_sq_to_hull(&fvec(&[(1, 2), (1, 2)]), &tri), int(0));
        assert_eq!(dist_sq_to_hull(&ivec(&[1, -3]), &tri), int(9));
    }

    #[test]
    fn hausdorff_segments() {
        let a = vec![ivec(&[-2, 0]), ivec(&[2, 0])];
        let b = vec![ivec(&[-2, 0]), ivec(&[2, 0]), ivec(&[0, -1])];
        assert_eq!(hausdorff_sq(&a, &b), int(1));
        assert_eq!(hausdorff_sq(&a, &a), int(0));
    }

    #[test]
    fn metric_identity_and_symmetry() {
        let f = fvec(&[(1, 2), (1, 2)]);
        let sq = vrep_to_hrep(&[ivec(&[0, 0]), ivec(&[1, 0]), ivec(&[0, 1]), ivec(&[1, 1])], &[], 2).unwrap();
        let tri = vrep_to_hrep(&[ivec(&[0, 0]), ivec(&[2, 0]), ivec(&[0, 2])], &[], 2).unwrap();
        assert_eq!(f_metric(&sq, &sq, &f).unwrap().dist_sq, int(0));
        let d1 = f_metric(&sq, &tri, &f).unwrap();
        let d2 = f_metric(&tri, &sq, &f).unwrap();
        assert_eq!(d1, d2);
        assert!(d1.dist_sq.is_positive());
    }

    #[test]
    fn split_polar_is_segment() {
        let f = fvec(&[(1, 2), (1, 2)]);
        let slab = vrep_to_hrep(&[ivec(&[0, 0]), ivec(&[1, 0])], &[ivec(&[0, 1]), ivec(&[0, -1])], 2).unwrap();
        let mut v = polar_at(&slab, &f).unwrap().vertices;
        v.sort();
        assert_eq!(v, vec![ivec(&[-2, 0]), ivec(&[2, 0])]);
    }

    #[test]
    fn exact_sqrt_comparison() {
        assert!(sqrt_le_sum(&int(4), &int(1), &int(1)));
        assert!(!sqrt_le_sum(&int(5), &int(1), &int(1)));
        assert!(!sqrt_le_sum(&int(2), &int(1), &int(0)));
        assert!(sqrt_le_sum(&frac(9, 4), &int(1), &frac(1, 4)));
    }

    #[test]
    fn constant_sequence_has_zero_deviation() {
        let f = fvec(&[(1, 2), (1, 2)]);
        let sq = vrep_to_hrep(&[ivec(&[0, 0]), ivec(&[1, 0]), ivec(&[0, 1]), ivec(&[1, 1])], &[], 2).unwrap();
        let rep = gauge_convergence_check(&[sq.clone(), sq.clone()], &sq, &f, &[ivec(&[1, 0]), ivec(&[1, 1])]).unwrap();
        assert!(rep.monotone);
        assert!(rep.steps.iter().all(|s| s.max_deviation.is_zero() && s.dist_sq.is_zero()));
    }
}
