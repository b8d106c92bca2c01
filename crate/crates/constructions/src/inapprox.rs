use crate::util::{embed_at, segment_meets, slice_at};
use crate::ConstructionError;
use latcut_cuts::gauge::{gauge_with, shifted_offsets};
use latcut_geometry::rat::{ceil, floor, frac, is_integral, lerp, sub, Rat, RatVec};
use latcut_geometry::{contains, homothety, transform, vrep_to_hrep, HalfSpace, Polyhedron};
use latcut_lattice::unimodular::{completion_with_last_row, primitive_annihilator};
use latcut_lattice::cert::relint_facet;
use latcut_lattice::check_lattice_free;
use num_traits::{One, Signed, Zero};

/// Half of the gap between `1` and the largest gauge of a witness midpoint.
pub fn shrink_epsilon(b: &Polyhedron, c: &[Rat], zs: &[RatVec]) -> Result<Rat, ConstructionError> {
    if zs.len() < 2 {
        return Err(ConstructionError::InvalidParameter("at least two witnesses are needed"));
    }
    let offsets = shifted_offsets(b, c).map_err(|_| ConstructionError::NotInterior)?;
    let half = frac(1, 2);
    let mut worst = Rat::zero();
    for (i, zi) in zs.iter().enumerate() {
        for zj in &zs[i + 1..] {
            let mid = lerp(&half, zi, zj);
            let g = gauge_with(b, &offsets, &sub(&mid, c));
            if g >= Rat::one() {
                return Err(ConstructionError::WitnessOnBoundary);
            }
            worst = worst.max(g);
        }
    }
    Ok(half * (Rat::one() - worst))
}

/// A pyramid with one more facet than its base whose shrunken copies defeat
/// every lattice-free set with as many facets as the base.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InapproxPyramid {
    pub base: Polyhedron,
    pub c: RatVec,
    pub zs: Vec<RatVec>,
    pub eps: Rat,
    pub mu: Rat,
    /// Apex point `(c, εμ)`.
    pub f: RatVec,
    /// `conv({f} ∪ F)` with `F` the enlarged base at height `-1`.
    pub pyramid: Polyhedron,
    pub lambda: Rat,
    /// The pyramid scaled about `(c, -1)` until its middle section is the base.
    pub lp: Polyhedron,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PyramidCheck {
    pub cross_section: bool,
    pub middle_section: bool,
    pub shrunken_base: bool,
    pub q_points: bool,
    pub segments: bool,
    pub nested: bool,
    pub lattice_free: bool,
    pub maximal: bool,
    pub facets: bool,
    pub f_interior: bool,
}

impl PyramidCheck {
    pub fn all(&self) -> bool {
        let PyramidCheck { cross_section, middle_section, shrunken_base, q_points, segments, nested, lattice_free, maximal, facets, f_interior } = self;
        [cross_section, middle_section, shrunken_base, q_points, segments, nested, lattice_free, maximal, facets, f_interior]
            .into_iter()
            .all(|b| *b)
    }
}

fn pushed(v: &[Rat], last: Rat) -> RatVec {
    let mut w = v.to_vec();
    w.push(last);
    w
}

pub fn inapprox_pyramid(
    l: &Polyhedron,
    c: &[Rat],
    zs: &[RatVec],
    eps: &Rat,
    mu: &Rat,
) -> Result<InapproxPyramid, ConstructionError> {
    let open_unit = |x: &Rat| x.is_positive() && *x < Rat::one();
    if !open_unit(eps) || !open_unit(mu) {
        return Err(ConstructionError::InvalidParameter("eps and mu must lie in (0, 1)"));
    }
    if !l.is_bounded() {
        return Err(ConstructionError::InvalidParameter("the base must be bounded"));
    }
    if !l.interior_contains(c) {
        return Err(ConstructionError::NotInterior);
    }
    let n = l.dim + 1;
    let k = eps * mu;
    let f = pushed(c, k.clone());
    let wide = embed_at(&homothety(l, c, &(Rat::one() / &k))?, &-Rat::one())?;
    let mut verts = wide.vertices.clone();
    verts.push(f.clone());
    let pyramid = vrep_to_hrep(&verts, &[], n)?;
    let lambda = (&k * (&k + Rat::one()) + Rat::one()) / (&k + Rat::one());
    let lp = homothety(&pyramid, &pushed(c, -Rat::one()), &lambda)?;
    Ok(InapproxPyramid {
        base: l.clone(),
        c: c.to_vec(),
        zs: zs.to_vec(),
        eps: eps.clone(),
        mu: mu.clone(),
        f,
        pyramid,
        lambda,
        lp,
    })
}

impl InapproxPyramid {
    pub fn verify(&self) -> Result<PyramidCheck, ConstructionError> {
        let l = &self.base;
        let k = &self.eps * &self.mu;
        let k2 = &k * &k;
        let zero = Rat::zero();
        let same = |p: Result<Polyhedron, _>, q: &Polyhedron| p.is_ok_and(|p: Polyhedron| p.same_set(q));
        let cross_section = same(slice_at(&self.pyramid, &zero), &homothety(l, &self.c, &(Rat::one() / (&k + Rat::one())))?);
        let middle_section = same(slice_at(&self.lp, &zero), l);
        let small = homothety(&self.pyramid, &self.f, &k)?;
        let low = embed_at(l, &-k2.clone())?;
        let shrunken_base = contains(&small, &low) && same(slice_at(&small, &-k2.clone()), l);
        let z1 = pushed(&self.zs[0], -Rat::one());
        let q_points = self.zs[1..].iter().all(|z| {
            let q = lerp(&k2, &z1, &pushed(z, zero.clone()));
            q[l.dim] == -k2.clone() && small.contains_point(&q)
        });
        let inner = homothety(l, &self.c, &(Rat::one() - &self.eps))?;
        let segments = self
            .zs
            .iter()
            .enumerate()
            .all(|(i, a)| self.zs[i + 1..].iter().all(|b| segment_meets(&inner, a, b, true)))
            && same(slice_at(&small, &zero), &slice_at(&self.pyramid, &zero)?)
            && contains(&slice_at(&small, &zero)?, &inner);
        let nested = contains(&self.lp, &self.pyramid) && contains(&self.pyramid, &small);
        let cert = check_lattice_free(&self.lp)?;
        Ok(PyramidCheck {
            cross_section,
            middle_section,
            shrunken_base,
            q_points,
            segments,
            nested,
            lattice_free: cert.is_lattice_free(),
            maximal: cert.is_maximal(),
            facets: self.lp.n_facets() == l.n_facets() + 1,
            f_interior: self.lp.interior_contains(&self.f),
        })
    }
}

/// A maximal lattice-free simplex around `f` whose facet witnesses are
/// pairwise joined through the copy shrunk by `α` about `f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplexTower {
    pub l: Polyhedron,
    pub zs: Vec<RatVec>,
    pub f: RatVec,
    pub alpha: Rat,
    /// Section and base identities held at every level of the recursion.
    pub layers_ok: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TowerCheck {
    pub maximal: bool,
    pub facets: bool,
    pub f_interior: bool,
    pub distinct_facets: bool,
    pub segments: bool,
    pub layers: bool,
}

impl TowerCheck {
    pub fn all(&self) -> bool {
        self.maximal && self.facets && self.f_interior && self.distinct_facets && self.segments && self.layers
    }
}

pub fn simplex_tower(f: &[Rat], alpha: &Rat) -> Result<SimplexTower, ConstructionError> {
    if f.is_empty() {
        return Err(ConstructionError::UnsupportedDimension(0));
    }
    if is_integral(f) {
        return Err(ConstructionError::IntegralPoint);
    }
    if *alpha <= Rat::one() {
        return Err(ConstructionError::InvalidParameter("alpha must exceed 1"));
    }
    let (l, zs, layers_ok) = tower(f, alpha)?;
    Ok(SimplexTower { l, zs, f: f.to_vec(), alpha: alpha.clone(), layers_ok })
}

fn tower(f: &[Rat], alpha: &Rat) -> Result<(Polyhedron, Vec<RatVec>, bool), ConstructionError> {
    let n = f.len();
    if n == 1 {
        let (lo, hi) = (Rat::from_integer(floor(&f[0])), Rat::from_integer(ceil(&f[0])));
        let l = Polyhedron::from_hrep(
            vec![HalfSpace::new(vec![Rat::one()], hi.clone())?, HalfSpace::new(vec![-Rat::one()], -lo.clone())?],
            1,
        )?;
        return Ok((l, vec![vec![lo], vec![hi]], true));
    }
    let r = primitive_annihilator(f).ok_or(ConstructionError::UnsupportedDimension(n))?;
    let map = completion_with_last_row(&r);
    let fh = map.apply(f);
    let fp = &fh[..n - 1];
    let (lower, lower_zs, lower_ok) = tower(fp, alpha)?;
    let apex = pushed(fp, Rat::one() / (alpha - Rat::one()));
    let spread = homothety(&lower, fp, alpha)?;
    let base = embed_at(&spread, &-Rat::one())?;
    let mut verts = base.vertices.clone();
    verts.push(apex);
    let lh = vrep_to_hrep(&verts, &[], n)?;

    let section_ok = slice_at(&lh, &Rat::zero()).is_ok_and(|s| s.same_set(&lower));
    let inv_alpha = Rat::one() / alpha;
    let shrunk_base = slice_at(&homothety(&base, &fh, &inv_alpha)?, &-inv_alpha.clone());
    let base_ok = shrunk_base.is_ok_and(|s| s.same_set(&lower));

    let mut zs: Vec<RatVec> = lower_zs.iter().map(|z| pushed(z, Rat::zero())).collect();
    zs.push(pushed(&lower_zs[0], -Rat::one()));
    let back = map.inverse();
    let l = transform(&lh, &back)?;
    let zs = zs.iter().map(|z| back.apply(z)).collect();
    Ok((l, zs, lower_ok && section_ok && base_ok))
}

impl SimplexTower {
    pub fn shrunk(&self) -> Result<Polyhedron, ConstructionError> {
        Ok(homothety(&self.l, &self.f, &(Rat::one() / &self.alpha))?)
    }

    pub fn verify(&self) -> Result<TowerCheck, ConstructionError> {
        let n = self.l.dim;
        let cert = check_lattice_free(&self.l)?;
        let mut seen: Vec<usize> = self.zs.iter().filter_map(|z| relint_facet(&self.l, z)).collect();
        let all_found = seen.len() == self.zs.len();
        seen.sort_unstable();
        seen.dedup();
        let la = self.shrunk()?;
        let segments = self
            .zs
            .iter()
            .enumerate()
            .all(|(i, a)| self.zs[i + 1..].iter().all(|b| segment_meets(&la, a, b, false)));
        Ok(TowerCheck {
            maximal: cert.is_lattice_free() && cert.is_maximal(),
            facets: self.l.n_facets() == n + 1 && self.zs.len() == n + 1,
            f_interior: self.l.interior_contains(&self.f),
            distinct_facets: all_found && seen.len() == self.zs.len() && self.zs.iter().all(|z| is_integral(z)),
            segments,
            layers: self.layers_ok,
        })
    }
}

/// `L × ℝ^{n-i}` and `(f', 0, …, 0)`.
pub fn cylinder_lift_witness(l: &Polyhedron, f: &[Rat], n: usize) -> Result<(Polyhedron, RatVec), ConstructionError> {
    let i = l.dim;
    if i >= n || f.len() != i {
        return Err(ConstructionError::InvalidParameter("the cylinder must add at least one dimension"));
    }
    let pad = |v: &[Rat]| {
        let mut w = v.to_vec();
        w.resize(n, Rat::zero());
        w
    };
    let hs = l.hrep.iter().map(|h| HalfSpace::new(pad(&h.normal), h.offset.clone())).collect::<Result<Vec<_>, _>>()?;
    Ok((Polyhedron::from_hrep(hs, n)?, pad(f)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cubeface::cube_face_construction;
    use latcut_geometry::rat::{fvec, int, ivec};
    use latcut_lattice::Maximality;
    use latcut_strength::rho_f;

    fn diamond_witnesses() -> (Polyhedron, Vec<RatVec>) {
        let d = cube_face_construction(2, 4).unwrap();
        let Maximality::Yes { facet_witnesses } = check_lattice_free(&d).unwrap().maximal else { panic!() };
        (d, facet_witnesses)
    }

    #[test]
    fn epsilon_for_diamond() {
        let (d, zs) = diamond_witnesses();
        let c = fvec(&[(1, 2), (1, 2)]);
        let eps = shrink_epsilon(&d, &c, &zs).unwrap();
        assert!(eps.is_positive() && eps < int(1));
        let inner = homothety(&d, &c, &(Rat::one() - &eps)).unwrap();
        for (i, a) in zs.iter().enumerate() {
            for b in &zs[i + 1..] {
                assert!(segment_meets(&inner, a, b, true));
            }
        }
    }

    #[test]
    fn epsilon_rejects_boundary_midpoints() {
        let d = cube_face_construction(2, 4).unwrap();
        let c = fvec(&[(1, 2), (1, 2)]);
        // (0,0) and (2,0)'s midpoint (1,0) is a vertex of the diamond
        assert_eq!(shrink_epsilon(&d, &c, &[ivec(&[0, 0]), ivec(&[2, 0])]), Err(ConstructionError::WitnessOnBoundary));
    }

    #[test]
    fn pyramid_over_unit_interval() {
        let iv = Polyhedron::from_inequalities(&[(ivec(&[1]), int(1)), (ivec(&[-1]), int(0))]).unwrap();
        let c = fvec(&[(1, 2)]);
        let zs = vec![ivec(&[0]), ivec(&[1])];
        let eps = shrink_epsilon(&iv, &c, &zs).unwrap();
        assert_eq!(eps, frac(1, 2));
        let p = inapprox_pyramid(&iv, &c, &zs, &eps, &frac(1, 3)).unwrap();
        assert_eq!(p.lp.n_facets(), 3);
        let chk = p.verify().unwrap();
        assert!(chk.all(), "{chk:?}");
    }

    #[test]
    fn pyramid_over_diamond() {
        let (d, zs) = diamond_witnesses();
        let c = fvec(&[(1, 2), (1, 2)]);
        let eps = shrink_epsilon(&d, &c, &zs).unwrap();
        let p = inapprox_pyramid(&d, &c, &zs, &eps, &frac(1, 2)).unwrap();
        let chk = p.verify().unwrap();
        assert!(chk.all(), "{chk:?}");
    }

    #[test]
    fn tower_in_one_dimension() {
        let t = simplex_tower(&fvec(&[(7, 3)]), &int(2)).unwrap();
        assert_eq!(t.zs, vec![ivec(&[2]), ivec(&[3])]);
        assert!(t.verify().unwrap().all());
    }

    #[test]
    fn towers_verify() {
        for f in [fvec(&[(1, 2), (1, 2)]), fvec(&[(1, 3), (2, 3)]), fvec(&[(1, 2), (1, 3), (1, 5)])] {
            for a in [2, 10] {
                let t = simplex_tower(&f, &int(a)).unwrap();
                let chk = t.verify().unwrap();
                assert!(chk.all(), "f={f:?} alpha={a}: {chk:?}");
            }
        }
    }

    #[test]
    fn tower_beats_splits() {
        let f = fvec(&[(1, 2), (1, 2)]);
        let t = simplex_tower(&f, &int(3)).unwrap();
        for (u, k) in [(ivec(&[1, 0]), 0), (ivec(&[0, 1]), 0), (ivec(&[1, 1]), 0), (ivec(&[1, -1]), -1), (ivec(&[1, 2]), 1)] {
            let neg: RatVec = u.iter().map(|x| -x).collect();
            let split = Polyhedron::from_inequalities(&[(u.clone(), int(k + 1)), (neg, int(-k))]).unwrap();
            if !split.interior_contains(&f) {
                continue;
            }
            let r = rho_f(&split, &t.l, &f).unwrap().value;
            assert!(r >= latcut_strength::StrengthValue::Finite(int(3)), "{u:?}: {r:?}");
        }
    }

    #[test]
    fn tower_rejects_bad_input() {
        assert_eq!(simplex_tower(&ivec(&[1, 2]), &int(2)), Err(ConstructionError::IntegralPoint));
        assert!(matches!(simplex_tower(&fvec(&[(1, 2)]), &int(1)), Err(ConstructionError::InvalidParameter(_))));
    }

    #[test]
    fn cylinder_of_interval() {
        let iv = Polyhedron::from_inequalities(&[(ivec(&[1]), int(1)), (ivec(&[-1]), int(0))]).unwrap();
        let (c, f) = cylinder_lift_witness(&iv, &fvec(&[(1, 2)]), 2).unwrap();
        assert_eq!(f, fvec(&[(1, 2), (0, 1)]));
        assert_eq!(c.n_facets(), 2);
        let slab = Polyhedron::from_inequalities(&[(ivec(&[1, 0]), int(1)), (ivec(&[-1, 0]), int(0))]).unwrap();
        assert!(c.same_set(&slab));
        let mu = frac(1, 3);
        let shrunk = homothety(&c, &f, &mu).unwrap();
        assert!(shrunk.has_recession(&ivec(&[0, 1])) && shrunk.has_recession(&ivec(&[0, -1])));
        assert!(shrunk.contains_point(&f));
    }
}
