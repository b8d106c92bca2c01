use crate::cone::{caratheodory_subset, truncated_cone_shrink, TruncatedCone};
use crate::util::{embed_at, slice_at};
use crate::{ConstructionError, Hypothesis};
use latcut_geometry::linalg::solve;
use latcut_geometry::lp::{simplex_ineq, LpOutcome};
use latcut_geometry::rat::{dot, frac, scale, Rat, RatVec};
use latcut_geometry::{contains, homothety, minkowski_scale_shift, GeomError, HalfSpace, Polyhedron};
use latcut_lattice::{check_lattice_free, width_along, Width};
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LiftCase {
    /// The shrunken body avoids the middle hyperplane and a split suffices.
    Split,
    /// The separators and the slab already have few enough facets.
    Direct,
    /// One facet was removed through a truncated-cone shrink.
    Shrunk { mu: Rat },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftOutcome {
    pub b: Polyhedron,
    pub case: LiftCase,
    /// Facet count of the base set `D`.
    pub m: usize,
}

fn unit(n: usize, k: usize) -> RatVec {
    let mut e = vec![Rat::zero(); n];
    e[k] = Rat::one();
    e
}

fn last_range(p: &Polyhedron) -> (Rat, Rat) {
    let n = p.dim;
    let lo = p.vertices.iter().map(|v| v[n - 1].clone()).min().expect("nonempty");
    let hi = p.vertices.iter().map(|v| v[n - 1].clone()).max().expect("nonempty");
    (lo, hi)
}

fn slab(n: usize, lo: i64, hi: i64) -> Result<Polyhedron, GeomError> {
    let e = unit(n, n - 1);
    Polyhedron::from_hrep(
        vec![HalfSpace::new(e.clone(), Rat::from_integer(hi.into()))?, HalfSpace::new(scale(&-Rat::one(), &e), Rat::from_integer((-lo).into()))?],
        n,
    )
}

/// Separator `{a·x + s·x_n ≤ c}` of the body from `{(x, 0) : a·x ≥ b}` with
/// maximal slack at `f`, returned as `(s, c)`.
fn separator(body: &Polyhedron, a: &[Rat], b: &Rat, f: &[Rat]) -> Result<(Rat, Rat), ConstructionError> {
    let n = body.dim;
    let mut rows = vec![vec![Rat::zero(), Rat::one()]];
    let mut rhs = vec![b.clone()];
    for v in &body.vertices {
        rows.push(vec![v[n - 1].clone(), -Rat::one()]);
        rhs.push(-dot(a, &v[..n - 1]));
    }
    for r in &body.rays {
        rows.push(vec![r[n - 1].clone(), Rat::zero()]);
        rhs.push(-dot(a, &r[..n - 1]));
    }
    match simplex_ineq(&rows, &rhs, &[-f[n - 1].clone(), Rat::one()]) {
        LpOutcome::Optimal(s) => Ok((s.argopt[0].clone(), s.argopt[1].clone())),
        _ => Err(ConstructionError::CheckFailed("separator LP has no optimum")),
    }
}

/// `y` with `a_j·y = r_j` for all `j`, given a consistent system whose rows
/// span `rows.len() - 1` dimensions with any proper subset independent.
fn solve_in_span(rows: &[RatVec], rhs: &[Rat]) -> Option<RatVec> {
    let k = rows.len() - 1;
    let gram: Vec<RatVec> = (0..k).map(|i| (0..k).map(|j| dot(&rows[i], &rows[j])).collect()).collect();
    let kappa = solve(&gram, &rhs[..k])?;
    let d = rows[0].len();
    let y = (0..k).fold(vec![Rat::zero(); d], |acc, i| {
        acc.iter().zip(&rows[i]).map(|(x, a)| x + &kappa[i] * a).collect()
    });
    rows.iter().zip(rhs).all(|(a, r)| dot(a, &y) == *r).then_some(y)
}

fn check(ok: bool, which: Hypothesis) -> Result<(), ConstructionError> {
    if ok {
        Ok(())
    } else {
        Err(ConstructionError::HypothesisViolated(which))
    }
}

/// Lattice-free `B` with at most `m + 1` facets containing `(γ/4)(L - f) + f`,
/// where `D ⊆ ℝ^{n-1}` is lattice-free with `m` facets, `L ∩ U_t ⊆ D × {t}`,
/// the copy `γ(L - f) + f` has width at most one along `e_n` and meets `U_t`.
pub fn lift_to_nplus1(
    l: &Polyhedron,
    f: &[Rat],
    gamma: &Rat,
    d: &Polyhedron,
    t: i64,
) -> Result<LiftOutcome, ConstructionError> {
    let n = l.dim;
    check(gamma.is_positive() && *gamma <= Rat::one(), Hypothesis::GammaRange)?;
    check(f.len() == n && l.interior_contains(f), Hypothesis::PointNotInterior)?;
    check(n >= 2 && d.dim == n - 1 && d.fulldim, Hypothesis::BaseDimension)?;
    let tr = Rat::from_integer(t.into());
    check(
        check_lattice_free(d).is_ok_and(|c| c.is_lattice_free()),
        Hypothesis::BaseNotLatticeFree,
    )?;
    match slice_at(l, &tr) {
        Ok(s) => check(contains(d, &s), Hypothesis::SliceOutsideBase)?,
        Err(GeomError::EmptySet) => {}
        Err(e) => return Err(e.into()),
    }
    let lp = homothety(l, f, gamma)?;
    check(
        matches!(width_along(&lp, &unit(n, n - 1)), Width::Finite(w) if w <= Rat::one()),
        Hypothesis::WidthTooLarge,
    )?;
    check(slice_at(&lp, &tr).is_ok(), Hypothesis::EmptySlice)?;

    let m = d.n_facets();
    let down = scale(&-tr.clone(), &unit(n, n - 1));
    let body = minkowski_scale_shift(&lp, &Rat::one(), &down)?;
    let fs: RatVec = f.iter().zip(&down).map(|(a, b)| a + b).collect();
    let quarter = homothety(&body, &fs, &frac(1, 4))?;

    let (lo, hi) = last_range(&quarter);
    let (b, case) = if !hi.is_positive() {
        (slab(n, -1, 0)?, LiftCase::Split)
    } else if !lo.is_negative() {
        (slab(n, 0, 1)?, LiftCase::Split)
    } else {
        shrink_or_direct(&body, &fs, d)?
    };
    let b = minkowski_scale_shift(&b, &Rat::one(), &scale(&-Rat::one(), &down))?;

    let cert = check_lattice_free(&b)?;
    if !cert.is_lattice_free() {
        return Err(ConstructionError::CheckFailed("lifted set is not lattice-free"));
    }
    if b.n_facets() > m + 1 {
        return Err(ConstructionError::CheckFailed("lifted set has too many facets"));
    }
    if !contains(&b, &homothety(l, f, &(gamma / Rat::from_integer(4.into())))?) {
        return Err(ConstructionError::CheckFailed("lifted set misses the shrunken body"));
    }
    Ok(LiftOutcome { b, case, m })
}

/// The middle-hyperplane case, with the body already shifted to `t = 0`.
fn shrink_or_direct(body: &Polyhedron, f: &[Rat], d: &Polyhedron) -> Result<(Polyhedron, LiftCase), ConstructionError> {
    let n = body.dim;
    let m = d.n_facets();
    let mut seps = Vec::with_capacity(m);
    for h in &d.hrep {
        let (s, c) = separator(body, &h.normal, &h.offset, f)?;
        seps.push((h.normal.clone(), s, c));
    }
    let halfspace = |(a, s, c): &(RatVec, Rat, Rat)| {
        let mut w = a.clone();
        w.push(s.clone());
        HalfSpace::new(w, c.clone())
    };
    let mut hs = seps.iter().map(halfspace).collect::<Result<Vec<_>, _>>()?;
    hs.extend(slab(n, -1, 1)?.hrep);
    let wide = Polyhedron::from_hrep(hs, n)?;
    if wide.n_facets() <= m + 1 {
        return Ok((wide, LiftCase::Direct));
    }

    let normals: Vec<RatVec> = seps.iter().map(|(a, _, _)| a.clone()).collect();
    let (chosen, weights) = caratheodory_subset(&normals)?;
    let level = |j: usize, w: &Rat| &seps[j].2 - &seps[j].1 * w;
    let size = |w: &Rat| chosen.iter().zip(&weights).fold(Rat::zero(), |acc, (&j, l)| acc + l * level(j, w));
    let (one, minus) = (Rat::one(), -Rat::one());
    let (t0, t1) = if size(&one) <= size(&minus) { (one, minus) } else { (minus, one) };
    let ratio = size(&t1) / size(&t0);
    let alpha = &ratio - Rat::one();
    let sel: Vec<RatVec> = chosen.iter().map(|&j| normals[j].clone()).collect();
    let rhs: Vec<Rat> = chosen.iter().map(|&j| level(j, &t1) - &ratio * level(j, &t0)).collect();
    let y = solve_in_span(&sel, &rhs).ok_or(ConstructionError::CheckFailed("base copies are not homothetic"))?;
    let mut shift = y;
    shift.push(&t1 - &ratio * &t0);

    let base_hs = chosen
        .iter()
        .map(|&j| HalfSpace::new(normals[j].clone(), level(j, &t0)))
        .collect::<Result<Vec<_>, _>>()?;
    let base = embed_at(&Polyhedron::from_hrep(base_hs, n - 1)?, &t0)?;
    let cone = TruncatedCone::new(base, alpha, shift)?;
    let shrunk = truncated_cone_shrink(&cone, f)?;
    if shrunk.mu < frac(3, 8) {
        return Err(ConstructionError::CheckFailed("decomposition parameter below 3/8"));
    }
    let rest = seps
        .iter()
        .enumerate()
        .filter(|(j, _)| !chosen.contains(j))
        .map(|(_, s)| halfspace(s))
        .collect::<Result<Vec<_>, _>>()?;
    let b = shrunk.polytope.intersect_halfspaces(&rest)?;
    Ok((b, LiftCase::Shrunk { mu: shrunk.mu }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use latcut_geometry::rat::{fvec, int, ivec};
    use latcut_geometry::vrep_to_hrep;

    fn unit_interval() -> Polyhedron {
        Polyhedron::from_inequalities(&[(ivec(&[1]), int(1)), (ivec(&[-1]), int(0))]).unwrap()
    }

    #[test]
    fn diamond_through_level_zero() {
        let d = crate::cubeface::cube_face_construction(2, 4).unwrap();
        let f = fvec(&[(1, 2), (1, 20)]);
        let out = lift_to_nplus1(&d, &f, &frac(1, 2), &unit_interval(), 0).unwrap();
        assert_ne!(out.case, LiftCase::Split);
        assert!(out.b.n_facets() <= 3);
        assert!(check_lattice_free(&out.b).unwrap().is_lattice_free());
        assert!(contains(&out.b, &homothety(&d, &f, &frac(1, 8)).unwrap()));
    }

    #[test]
    fn off_center_body_gets_a_split() {
        let tri = vrep_to_hrep(&[ivec(&[0, 0]), ivec(&[2, 0]), ivec(&[0, 2])], &[], 2).unwrap();
        let f = fvec(&[(1, 2), (3, 4)]);
        let out = lift_to_nplus1(&tri, &f, &frac(1, 4), &unit_interval(), 1).unwrap();
        assert_eq!(out.case, LiftCase::Split);
        let split = slab(2, 0, 1).unwrap();
        assert!(out.b.same_set(&split));
    }

    #[test]
    fn triangle_through_the_middle() {
        let tri = vrep_to_hrep(&[ivec(&[0, 0]), ivec(&[2, 0]), ivec(&[0, 2])], &[], 2).unwrap();
        let f = fvec(&[(1, 2), (1, 1)]);
        let out = lift_to_nplus1(&tri, &f, &frac(1, 4), &unit_interval(), 1).unwrap();
        assert_ne!(out.case, LiftCase::Split);
        assert!(out.b.n_facets() <= 3);
        assert!(check_lattice_free(&out.b).unwrap().is_lattice_free());
        assert!(contains(&out.b, &homothety(&tri, &f, &frac(1, 16)).unwrap()));
    }

    #[test]
    fn three_dimensional_with_triangle_base() {
        // a tetrahedron-like body whose middle slice sits in the triangle conv{(0,0),(2,0),(0,2)}
        let l = vrep_to_hrep(
            &[fvec(&[(1, 4), (1, 4), (-1, 1)]), fvec(&[(1, 4), (1, 4), (1, 1)]), fvec(&[(3, 2), (1, 4), (0, 1)]), fvec(&[(1, 4), (3, 2), (0, 1)])],
            &[],
            3,
        )
        .unwrap();
        let f = l.vertex_centroid();
        let d = vrep_to_hrep(&[ivec(&[0, 0]), ivec(&[2, 0]), ivec(&[0, 2])], &[], 2).unwrap();
        let out = lift_to_nplus1(&l, &f, &frac(1, 2), &d, 0).unwrap();
        assert!(out.b.n_facets() <= 4);
        assert!(contains(&out.b, &homothety(&l, &f, &frac(1, 8)).unwrap()));
    }

    #[test]
    fn hypotheses_are_checked() {
        let tri = vrep_to_hrep(&[ivec(&[0, 0]), ivec(&[2, 0]), ivec(&[0, 2])], &[], 2).unwrap();
        let f = fvec(&[(1, 2), (1, 1)]);
        let iv = unit_interval();
        let err = |g: Rat, d: &Polyhedron, t: i64, f: &RatVec| match lift_to_nplus1(&tri, f, &g, d, t) {
            Err(ConstructionError::HypothesisViolated(h)) => h,
            other => panic!("{other:?}"),
        };
        assert_eq!(err(int(0), &iv, 1, &f), Hypothesis::GammaRange);
        assert_eq!(err(int(2), &iv, 1, &f), Hypothesis::GammaRange);
        assert_eq!(err(frac(1, 4), &iv, 1, &ivec(&[3, 3])), Hypothesis::PointNotInterior);
        assert_eq!(err(frac(1, 4), &tri, 1, &f), Hypothesis::BaseDimension);
        let wide = Polyhedron::from_inequalities(&[(ivec(&[1]), int(2)), (ivec(&[-1]), int(0))]).unwrap();
        assert_eq!(err(frac(1, 4), &wide, 1, &f), Hypothesis::BaseNotLatticeFree);
        assert_eq!(err(frac(1, 4), &iv, 0, &f), Hypothesis::SliceOutsideBase);
        assert_eq!(err(int(1), &iv, 1, &f), Hypothesis::WidthTooLarge);
        let far = Polyhedron::from_inequalities(&[(ivec(&[1]), int(5)), (ivec(&[-1]), int(-4))]).unwrap();
        assert_eq!(err(frac(1, 4), &far, 3, &f), Hypothesis::EmptySlice);
    }

    #[test]
    fn gram_solve_recovers_shift() {
        let rows = vec![ivec(&[1, 0]), ivec(&[0, 1]), ivec(&[-1, -1])];
        let y = ivec(&[3, -2]);
        let rhs: Vec<Rat> = rows.iter().map(|a| dot(a, &y)).collect();
        assert_eq!(solve_in_span(&rows, &rhs), Some(y));
        assert_eq!(solve_in_span(&rows, &[int(0), int(0), int(1)]), None);
    }
}
