use crate::lifting::{lift_to_nplus1, LiftCase};
use crate::util::slice_at;
use crate::ConstructionError;
use latcut_geometry::rat::{ceil, floor, is_integral, Rat, RatVec};
use latcut_geometry::{homothety, transform, HalfSpace, Polyhedron, UnimodularMap};
use latcut_lattice::unimodular::completion_with_last_row;
use latcut_lattice::{check_lattice_free, denominator, flatness_bound, lattice_width, maximalize, Width};
use latcut_strength::{rho_f, StrengthValue};
use num_bigint::BigInt;
use num_traits::{One, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Route {
    Identity,
    Split,
    Lifted(LiftCase),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Approximation {
    pub b: Polyhedron,
    /// Exact `ρ_f(B, L)`.
    pub factor: Rat,
    /// The guaranteed upper bound on `factor`.
    pub bound: Rat,
    pub facets: usize,
    pub route: Route,
}

/// A hypothesis-satisfying input for the lifting step, in normalized coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftInstance {
    pub l: Polyhedron,
    pub f: RatVec,
    pub gamma: Rat,
    pub d: Polyhedron,
    pub t: i64,
    /// Maps original coordinates to normalized ones.
    pub map: UnimodularMap,
}

const MAX_ENUM_BOUND: u64 = 32;

fn pow4(k: u32) -> Rat {
    Rat::from_integer(BigInt::from(4u32).pow(k))
}

/// A unimodular map sending a direction of width at most `limit` to `e_n`.
fn flatten(l: &Polyhedron, limit: &Rat) -> Result<UnimodularMap, ConstructionError> {
    let mut k = 1;
    while k <= MAX_ENUM_BOUND {
        let w = lattice_width(l, k);
        if matches!(&w.width, Width::Finite(x) if x <= limit) {
            return Ok(completion_with_last_row(&w.direction));
        }
        k *= 2;
    }
    Err(ConstructionError::WidthNotFound)
}

fn split(n: usize, k: &BigInt) -> Result<Polyhedron, ConstructionError> {
    let mut e = vec![Rat::zero(); n];
    e[n - 1] = Rat::one();
    let lo = Rat::from_integer(k.clone());
    let hs = vec![HalfSpace::new(e.clone(), &lo + Rat::one())?, HalfSpace::new(e.iter().map(|x| -x).collect(), -lo)?];
    Ok(Polyhedron::from_hrep(hs, n)?)
}

fn last_range(p: &Polyhedron) -> (Rat, Rat) {
    let n = p.dim;
    let it = || p.vertices.iter().map(|v| v[n - 1].clone());
    (it().min().expect("nonempty"), it().max().expect("nonempty"))
}

fn to_i64(k: &BigInt) -> Result<i64, ConstructionError> {
    i64::try_from(k).map_err(|_| ConstructionError::InvalidParameter("slice level out of range"))
}

fn validate(l: &Polyhedron, f: &[Rat]) -> Result<(), ConstructionError> {
    let n = l.dim;
    if n == 0 || n > 3 {
        return Err(ConstructionError::UnsupportedDimension(n));
    }
    if f.len() != n || !l.interior_contains(f) {
        return Err(ConstructionError::NotInterior);
    }
    if !check_lattice_free(l)?.is_lattice_free() {
        return Err(ConstructionError::NotLatticeFreeInput);
    }
    Ok(())
}

fn finish(l: &Polyhedron, f: &[Rat], b: Polyhedron, bound: Rat, route: Route) -> Result<Approximation, ConstructionError> {
    let factor = match rho_f(&b, l, f)?.value {
        StrengthValue::Finite(x) => x,
        _ => return Err(ConstructionError::CheckFailed("approximating set does not cover a shrunken copy")),
    };
    if factor > bound {
        return Err(ConstructionError::CheckFailed("approximation factor exceeds its bound"));
    }
    Ok(Approximation { facets: b.n_facets(), b, factor, bound, route })
}

/// Either a split around the shrunken copy or the data for a lift.
enum Plan {
    Split(Polyhedron),
    Lift(Box<LiftInstance>),
}

fn plan_any(l: &Polyhedron, f: &[Rat]) -> Result<Plan, ConstructionError> {
    let n = l.dim;
    let flt = flatness_bound(n as u64);
    let map = flatten(l, &flt)?;
    let lh = transform(l, &map)?;
    let fh = map.apply(f);
    let gamma = Rat::one() / &flt;
    let (lo, hi) = last_range(&homothety(&lh, &fh, &gamma)?);
    let t = ceil(&lo);
    if Rat::from_integer(t.clone()) > hi {
        return Ok(Plan::Split(transform(&split(n, &floor(&lo))?, &map.inverse())?));
    }
    let d = maximalize(&slice_at(&lh, &Rat::from_integer(t.clone()))?)?;
    Ok(Plan::Lift(Box::new(LiftInstance { l: lh, f: fh, gamma, d, t: to_i64(&t)?, map })))
}

/// Normalized lifting input for `(L, f)`, or `None` when a split already works.
pub fn prepare_lift(l: &Polyhedron, f: &[Rat]) -> Result<Option<LiftInstance>, ConstructionError> {
    validate(l, f)?;
    if l.dim < 2 {
        return Ok(None);
    }
    Ok(match plan_any(l, f)? {
        Plan::Split(_) => None,
        Plan::Lift(inst) => Some(*inst),
    })
}

/// `B` with at most `2^{n-1} + 1` facets and `ρ_f(B, L) ≤ 4·Flt(n)`.
pub fn approximate_any_f(l: &Polyhedron, f: &[Rat]) -> Result<Approximation, ConstructionError> {
    validate(l, f)?;
    let n = l.dim;
    let bound = Rat::from_integer(4.into()) * flatness_bound(n as u64);
    if l.n_facets() <= (1 << (n - 1)) + 1 {
        return finish(l, f, l.clone(), bound, Route::Identity);
    }
    match plan_any(l, f)? {
        Plan::Split(b) => finish(l, f, b, bound, Route::Split),
        Plan::Lift(inst) => {
            let out = lift_to_nplus1(&inst.l, &inst.f, &inst.gamma, &inst.d, inst.t)?;
            let b = transform(&out.b, &inst.map.inverse())?;
            finish(l, f, b, bound, Route::Lifted(out.case))
        }
    }
}

/// `B` with at most `n + 1` facets and `ρ_f(B, L) ≤ Flt(n)·4^{n-1}·s`, where
/// `s` is the denominator of the non-integral point `f`.
pub fn approximate_fixed_f(l: &Polyhedron, f: &[Rat]) -> Result<Approximation, ConstructionError> {
    if is_integral(f) {
        return Err(ConstructionError::IntegralPoint);
    }
    validate(l, f)?;
    let n = l.dim;
    let s = Rat::from_integer(denominator(f));
    let bound = flatness_bound(n as u64) * pow4(n as u32 - 1) * &s;
    let (b, route) = fixed_core(l, f, &s)?;
    finish(l, f, b, bound, route)
}

fn fixed_core(l: &Polyhedron, f: &[Rat], s: &Rat) -> Result<(Polyhedron, Route), ConstructionError> {
    let n = l.dim;
    if n == 1 || l.n_facets() <= n + 1 {
        return Ok((l.clone(), Route::Identity));
    }
    let flt = flatness_bound(n as u64);
    let map = flatten(l, &flt)?;
    let back = map.inverse();
    let lh = transform(l, &map)?;
    let fh = map.apply(f);
    let fn_ = &fh[n - 1];
    if !fn_.is_integer() {
        return Ok((transform(&split(n, &floor(fn_))?, &back)?, Route::Split));
    }
    let base = maximalize(&slice_at(&lh, fn_)?)?;
    let (d, _) = fixed_core(&base, &fh[..n - 1], s)?;
    let gamma = Rat::one() / (flt * pow4(n as u32 - 2) * s);
    let inner = homothety(&lh, &fh, &gamma)?;
    let out = lift_to_nplus1(&inner, &fh, &Rat::one(), &d, to_i64(&fn_.to_integer())?)?;
    Ok((transform(&out.b, &back)?, Route::Lifted(out.case)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cubeface::cube_face_construction;
    use latcut_geometry::rat::{fvec, int, ivec};
    use latcut_geometry::{contains, vrep_to_hrep};

    fn half() -> RatVec {
        fvec(&[(1, 2), (1, 2)])
    }

    #[test]
    fn diamond_any_f() {
        let d = cube_face_construction(2, 4).unwrap();
        let a = approximate_any_f(&d, &half()).unwrap();
        assert!(a.facets <= 3);
        assert_eq!(a.bound, int(24));
        assert!(a.factor <= int(24));
        assert!(check_lattice_free(&a.b).unwrap().is_lattice_free());
        assert!(contains(&a.b, &homothety(&d, &half(), &(Rat::one() / &a.factor)).unwrap()));
    }

    #[test]
    fn diamond_fixed_f() {
        let d = cube_face_construction(2, 4).unwrap();
        let a = approximate_fixed_f(&d, &half()).unwrap();
        assert!(a.facets <= 3);
        assert_eq!(a.bound, int(48));
        assert!(a.factor <= int(48));
    }

    #[test]
    fn split_is_kept() {
        let slab = Polyhedron::from_inequalities(&[(ivec(&[0, 1]), int(1)), (ivec(&[0, -1]), int(0))]).unwrap();
        let a = approximate_any_f(&slab, &half()).unwrap();
        assert_eq!((a.route, a.factor), (Route::Identity, int(1)));
    }

    #[test]
    fn fractional_last_coordinate_gives_a_split() {
        let d = cube_face_construction(2, 4).unwrap();
        let f = fvec(&[(1, 2), (1, 3)]);
        let a = approximate_fixed_f(&d, &f).unwrap();
        assert_eq!(a.route, Route::Split);
        assert_eq!(a.facets, 2);
    }

    #[test]
    fn one_dimensional_is_identity() {
        let iv = Polyhedron::from_inequalities(&[(ivec(&[1]), int(1)), (ivec(&[-1]), int(0))]).unwrap();
        let a = approximate_fixed_f(&iv, &fvec(&[(1, 3)])).unwrap();
        assert_eq!((a.route, a.factor), (Route::Identity, int(1)));
    }

    #[test]
    fn three_dimensional_cube_faces() {
        let f = fvec(&[(1, 2), (1, 3), (1, 2)]);
        for i in [6, 8] {
            let l = cube_face_construction(3, i).unwrap();
            if !l.interior_contains(&f) {
                continue;
            }
            let a = approximate_any_f(&l, &f).unwrap();
            assert!(a.facets <= 5 && a.factor <= int(64), "i={i}: {a:?}");
            let a = approximate_fixed_f(&l, &f).unwrap();
            assert!(a.facets <= 4 && a.factor <= int(16 * 16 * 6), "i={i}: {a:?}");
        }
    }

    #[test]
    fn rejects_bad_input() {
        let sq = vrep_to_hrep(&[ivec(&[0, 0]), ivec(&[2, 0]), ivec(&[0, 2]), ivec(&[2, 2])], &[], 2).unwrap();
        assert_eq!(approximate_any_f(&sq, &half()), Err(ConstructionError::NotLatticeFreeInput));
        let d = cube_face_construction(2, 4).unwrap();
        assert_eq!(approximate_any_f(&d, &ivec(&[5, 5])), Err(ConstructionError::NotInterior));
        let tri = vrep_to_hrep(&[ivec(&[-1, -1]), ivec(&[3, -1]), ivec(&[-1, 3])], &[], 2).unwrap();
        assert_eq!(approximate_fixed_f(&tri, &ivec(&[0, 0])), Err(ConstructionError::IntegralPoint));
    }
}
