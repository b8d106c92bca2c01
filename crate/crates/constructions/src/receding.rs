use crate::ConstructionError;
use latcut_geometry::rat::{frac, int, Rat, RatVec};
use latcut_geometry::{vrep_to_hrep, HalfSpace, Polyhedron};
use num_traits::One;

/// The vertical split `{0 ≤ x_1 ≤ 1}` in the plane.
pub fn split_slab() -> Polyhedron {
    let hs = vec![
        HalfSpace::new(vec![int(1), int(0)], int(1)).expect("nonzero"),
        HalfSpace::new(vec![int(-1), int(0)], int(0)).expect("nonzero"),
    ];
    Polyhedron::from_hrep(hs, 2).expect("a slab")
}

/// `B_t = {0 ≤ x ≤ 1, (2t+1)x + y ≤ 2t + 1}`: a three-facet subset of the
/// split whose slanted facet recedes as `t` grows.
pub fn receding_apex_body(t: u64) -> Result<Polyhedron, ConstructionError> {
    if t == 0 {
        return Err(ConstructionError::InvalidParameter("t must be positive"));
    }
    let t = Rat::from_integer(t.into());
    let slope = &t * int(2) + Rat::one();
    let hs = vec![
        HalfSpace::new(vec![int(1), int(0)], int(1))?,
        HalfSpace::new(vec![int(-1), int(0)], int(0))?,
        HalfSpace::new(vec![slope.clone(), int(1)], slope)?,
    ];
    Ok(Polyhedron::from_hrep(hs, 2)?)
}

fn triangle(pts: [RatVec; 3]) -> Polyhedron {
    vrep_to_hrep(&pts, &[], 2).expect("a triangle")
}

/// Image of a point under symmetry `k` of the unit square: bit 0 reflects
/// `x`, bit 1 reflects `y`, bit 2 swaps the coordinates.
fn square_symmetry(p: &RatVec, k: u8) -> RatVec {
    let reflect = |x: &Rat, on: bool| if on { Rat::one() - x } else { x.clone() };
    let (x, y) = (reflect(&p[0], k & 1 != 0), reflect(&p[1], k & 2 != 0));
    if k & 4 != 0 {
        vec![y, x]
    } else {
        vec![x, y]
    }
}

fn symmetric_images(pts: [RatVec; 3], out: &mut Vec<Polyhedron>) {
    for k in 0..8 {
        let t = triangle(pts.clone().map(|p| square_symmetry(&p, k)));
        if !out.iter().any(|q| q.same_set(&t)) {
            out.push(t);
        }
    }
}

/// Lattice-free triangles with `(1/2, 1/2)` in their interior.
///
/// The family is `conv{(-a, -1), (1+a, -1), (1/2, h)}` with `a = 1/(2h)` for
/// growing heights `h`, under the symmetries of the unit square, preceded by
/// the images of `conv{(0,0), (2,0), (0,2)}`.
pub fn triangles_around_half(count: usize) -> Vec<Polyhedron> {
    let mut out = Vec::new();
    symmetric_images([vec![int(0), int(0)], vec![int(2), int(0)], vec![int(0), int(2)]], &mut out);
    let mut k = 1i64;
    while out.len() < count {
        let h = frac(k + 1, 2);
        let a = Rat::one() / (int(2) * &h);
        symmetric_images([vec![-a.clone(), int(-1)], vec![Rat::one() + &a, int(-1)], vec![frac(1, 2), h]], &mut out);
        k += 1;
    }
    out.truncate(count);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use latcut_geometry::rat::fvec;
    use latcut_geometry::contains;
    use latcut_lattice::check_lattice_free;

    #[test]
    fn triangles_are_lattice_free_around_half() {
        let f = fvec(&[(1, 2), (1, 2)]);
        let ts = triangles_around_half(24);
        assert_eq!(ts.len(), 24);
        for t in &ts {
            assert_eq!(t.n_facets(), 3);
            assert!(t.interior_contains(&f));
            let c = check_lattice_free(t).unwrap();
            assert!(c.is_lattice_free() && c.is_maximal(), "{t:?}");
        }
        for (i, a) in ts.iter().enumerate() {
            assert!(ts[i + 1..].iter().all(|b| !a.same_set(b)));
        }
    }

    #[test]
    fn receding_body_shape() {
        let s = split_slab();
        for t in 1..=8 {
            let b = receding_apex_body(t).unwrap();
            assert_eq!(b.n_facets(), 3);
            assert!(contains(&s, &b));
            assert!(b.interior_contains(&fvec(&[(1, 2), (1, 2)])));
            assert!(check_lattice_free(&b).is_err_and(|e| e == latcut_lattice::LatticeError::UnsupportedShape));
        }
        assert!(receding_apex_body(0).is_err());
    }
}
