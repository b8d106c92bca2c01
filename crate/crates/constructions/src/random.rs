//! Seeded generators for randomized checks.

use crate::cone::TruncatedCone;
use crate::cubeface::cube_face_construction;
use crate::util::embed_at;
use crate::ConstructionError;
use latcut_geometry::linalg::identity;
use latcut_geometry::rat::{add, floor, frac, int, is_integral, scale, Rat, RatVec};
use latcut_geometry::{transform, vrep_to_hrep, HalfSpace, Polyhedron, UnimodularMap};
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::Rng;

/// Product of a few elementary integer row operations.
pub fn random_unimodular<R: Rng>(rng: &mut R, n: usize, steps: usize) -> UnimodularMap {
    let mut m = identity(n);
    if n < 2 {
        return UnimodularMap::new(m, vec![Rat::zero(); n]).expect("identity");
    }
    for _ in 0..steps {
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n - 1);
        if j >= i {
            j += 1;
        }
        if rng.gen_bool(0.2) {
            m.swap(i, j);
        } else {
            let c = int(if rng.gen_bool(0.5) { 1 } else { -1 });
            let row = scale(&c, &m[j]);
            m[i] = add(&m[i], &row);
        }
    }
    UnimodularMap::new(m, vec![Rat::zero(); n]).expect("elementary operations are unimodular")
}

fn with_shift(map: UnimodularMap, shift: RatVec) -> UnimodularMap {
    UnimodularMap::new(map.matrix, shift).expect("integral shift")
}

fn random_shift<R: Rng>(rng: &mut R, n: usize) -> RatVec {
    (0..n).map(|_| int(rng.gen_range(-2..=2))).collect()
}

/// A cube-face polyhedron with a random facet count under a random
/// unimodular map and integral translation.
pub fn random_maximal_lattice_free<R: Rng>(rng: &mut R, n: usize) -> Result<Polyhedron, ConstructionError> {
    let i = rng.gen_range(2..=1usize << n);
    let base = cube_face_construction(n, i)?;
    let shift = random_shift(rng, n);
    let map = with_shift(random_unimodular(rng, n, n + 1), shift);
    Ok(transform(&base, &map)?)
}

/// A rational point in the interior, built from positive weights on the
/// vertices plus random multiples of the rays.
pub fn random_interior_point<R: Rng>(rng: &mut R, p: &Polyhedron, den: i64) -> Option<RatVec> {
    for _ in 0..64 {
        let w: Vec<i64> = p.vertices.iter().map(|_| rng.gen_range(1..=den)).collect();
        let total = int(w.iter().sum());
        let mut x = vec![Rat::zero(); p.dim];
        for (v, wi) in p.vertices.iter().zip(&w) {
            x = add(&x, &scale(&(int(*wi) / &total), v));
        }
        for r in &p.rays {
            x = add(&x, &scale(&frac(rng.gen_range(0..=den), den), r));
        }
        if p.interior_contains(&x) {
            return Some(x);
        }
    }
    None
}

fn random_point<R: Rng>(rng: &mut R, n: usize, range: i64, den: i64) -> RatVec {
    (0..n).map(|_| frac(rng.gen_range(-range * den..=range * den), den)).collect()
}

/// A truncated cone with its base in a hyperplane together with a point
/// decomposing with `μ ∈ [1/3, 1]`, both under a random unimodular map.
pub fn random_truncated_cone<R: Rng>(rng: &mut R, n: usize) -> Result<(TruncatedCone, RatVec), ConstructionError> {
    if n < 2 {
        return Err(ConstructionError::UnsupportedDimension(n));
    }
    let flat = loop {
        let k = rng.gen_range(n..n + 4);
        let pts: Vec<RatVec> = (0..k).map(|_| random_point(rng, n - 1, 3, 2)).collect();
        if let Ok(q) = vrep_to_hrep(&pts, &[], n - 1) {
            if q.fulldim {
                break q;
            }
        }
    };
    let x0 = random_interior_point(rng, &flat, 6).ok_or(ConstructionError::CheckFailed("no interior point"))?;
    let alpha = [int(0), frac(1, 2), int(1), int(2), int(3)].choose(rng).cloned().expect("nonempty");
    let mut p = random_point(rng, n - 1, 2, 2);
    p.push(int(*[-2i64, -1, 1, 2].choose(rng).expect("nonempty")));
    let mu = frac(rng.gen_range(4..=12), 12);
    let mut x = x0;
    x.push(Rat::zero());
    let f = add(&scale(&(Rat::one() + &mu * &alpha), &x), &scale(&mu, &p));

    let map = random_unimodular(rng, n, n + 1);
    let base = transform(&embed_at(&flat, &Rat::zero())?, &map)?;
    let cone = TruncatedCone::new(base, alpha, map.apply_linear(&p))?;
    Ok((cone, map.apply(&f)))
}

fn slab_along(u: &[Rat], k: &Rat) -> Result<Polyhedron, ConstructionError> {
    let neg: RatVec = u.iter().map(|x| -x).collect();
    let hs = vec![HalfSpace::new(u.to_vec(), k + Rat::one())?, HalfSpace::new(neg, -k.clone())?];
    Ok(Polyhedron::from_hrep(hs, u.len())?)
}

/// A lattice-free set with at most `n` facets and `f` in its interior: a
/// split for `n = 2`, a split or a triangular prism for `n = 3`.
pub fn random_small_lattice_free<R: Rng>(rng: &mut R, n: usize, f: &[Rat]) -> Result<Polyhedron, ConstructionError> {
    if is_integral(f) || f.len() != n || !(2..=3).contains(&n) {
        return Err(ConstructionError::InvalidParameter("need a non-integral point in dimension 2 or 3"));
    }
    for _ in 0..256 {
        let map = random_unimodular(rng, n, n + 2);
        let g = map.apply(f);
        if n == 3 && rng.gen_bool(0.5) {
            let w: RatVec = vec![Rat::from_integer(floor(&g[0])), Rat::from_integer(floor(&g[1])), Rat::zero()];
            let local: RatVec = g.iter().zip(&w).map(|(a, b)| a - b).collect();
            if local[0].is_zero() || local[1].is_zero() {
                continue;
            }
            let tri = vrep_to_hrep(&[vec![int(0), int(0)], vec![int(2), int(0)], vec![int(0), int(2)]], &[], 2)?;
            let hs = tri
                .hrep
                .iter()
                .map(|h| {
                    let mut a = h.normal.clone();
                    a.push(Rat::zero());
                    HalfSpace::new(a, h.offset.clone())
                })
                .collect::<Result<Vec<_>, _>>()?;
            let prism = Polyhedron::from_hrep(hs, 3)?;
            let placed = transform(&prism, &with_shift(UnimodularMap::identity(3), w))?;
            let out = transform(&placed, &map.inverse())?;
            if out.interior_contains(f) {
                return Ok(out);
            }
            continue;
        }
        let u = map.matrix[n - 1].clone();
        let k = Rat::from_integer(floor(&g[n - 1]));
        if g[n - 1].is_integer() {
            continue;
        }
        let out = slab_along(&u, &k)?;
        if out.interior_contains(f) {
            return Ok(out);
        }
    }
    Err(ConstructionError::CheckFailed("no small lattice-free set found around f"))
}

/// Inputs `(L, f, γ, D, t)` for the lifting step whose shrunken copy crosses
/// the level `t`: `D` is an integral translate of `[0, 1]` or of the triangle
/// `conv{0, 2e_1, 2e_2}` under a unimodular map, and `L` is spanned by
/// points over `D` at heights within `1/2` of `t`, half of the time with
/// matching top and bottom sections.
#[allow(clippy::type_complexity)]
pub fn random_lift_input<R: Rng>(
    rng: &mut R,
    n: usize,
) -> Result<(Polyhedron, RatVec, Rat, Polyhedron, i64), ConstructionError> {
    if !(2..=3).contains(&n) {
        return Err(ConstructionError::UnsupportedDimension(n));
    }
    let base = if n == 2 {
        vrep_to_hrep(&[vec![int(0)], vec![int(1)]], &[], 1)?
    } else {
        vrep_to_hrep(&[vec![int(0), int(0)], vec![int(2), int(0)], vec![int(0), int(2)]], &[], 2)?
    };
    let map = with_shift(random_unimodular(rng, n - 1, n), random_shift(rng, n - 1));
    let d = transform(&base, &map)?;
    let t = rng.gen_range(-2i64..=2);
    loop {
        let k = rng.gen_range(n..n + 4);
        let prism = rng.gen_bool(0.5);
        let mut pts = Vec::with_capacity(2 * k);
        for j in 0..k {
            let x = random_interior_point(rng, &d, 8).ok_or(ConstructionError::CheckFailed("no interior point"))?;
            let h = frac(rng.gen_range(1..=4), 8);
            for up in [true, false] {
                if prism || up == (j % 2 == 0) {
                    let mut p = x.clone();
                    p.push(if up { int(t) + &h } else { int(t) - &h });
                    pts.push(p);
                }
            }
        }
        let l = vrep_to_hrep(&pts, &[], n)?;
        if l.fulldim {
            let f = l.vertex_centroid();
            return Ok((l, f, Rat::one(), d, t));
        }
    }
}
