use latcut_geometry::rat::{dot, sub, Rat, RatVec};
use latcut_geometry::{vrep_to_hrep, GeomError, HalfSpace, Polyhedron};
use num_traits::{Signed, Zero};
use std::cmp::Ordering;

/// `{x ∈ ℝ^{n-1} : (x, t) ∈ P}`.
pub fn slice_at(p: &Polyhedron, t: &Rat) -> Result<Polyhedron, GeomError> {
    let n = p.dim;
    let mut hs = Vec::new();
    for h in &p.hrep {
        let a: RatVec = h.normal[..n - 1].to_vec();
        let b = &h.offset - &h.normal[n - 1] * t;
        if a.iter().all(Zero::is_zero) {
            if b.is_negative() {
                return Err(GeomError::EmptySet);
            }
            continue;
        }
        hs.push(HalfSpace::new(a, b)?);
    }
    Polyhedron::from_hrep(hs, n - 1)
}

/// `S × {t}` as a (lower-dimensional) polyhedron in one more dimension.
pub fn embed_at(s: &Polyhedron, t: &Rat) -> Result<Polyhedron, GeomError> {
    let lift = |v: &RatVec, last: Rat| {
        let mut w = v.clone();
        w.push(last);
        w
    };
    let verts: Vec<RatVec> = s.vertices.iter().map(|v| lift(v, t.clone())).collect();
    let rays: Vec<RatVec> = s.rays.iter().map(|r| lift(r, Rat::zero())).collect();
    vrep_to_hrep(&verts, &rays, s.dim + 1)
}

/// Whether the segment `[p, q]` meets `K`, or its interior when `strict`.
pub fn segment_meets(k: &Polyhedron, p: &[Rat], q: &[Rat], strict: bool) -> bool {
    let d = sub(q, p);
    let (mut lo, mut lo_open) = (Rat::zero(), false);
    let (mut hi, mut hi_open) = (Rat::from_integer(1.into()), false);
    for h in &k.hrep {
        let a = dot(&h.normal, &d);
        let b = &h.offset - dot(&h.normal, p);
        if a.is_zero() {
            if b.is_negative() || (strict && b.is_zero()) {
                return false;
            }
            continue;
        }
        let bound = &b / &a;
        if a.is_positive() {
            match bound.cmp(&hi) {
                Ordering::Less => {
                    hi = bound;
                    hi_open = strict;
                }
                Ordering::Equal => hi_open |= strict,
                Ordering::Greater => {}
            }
        } else {
            match bound.cmp(&lo) {
                Ordering::Greater => {
                    lo = bound;
                    lo_open = strict;
                }
                Ordering::Equal => lo_open |= strict,
                Ordering::Less => {}
            }
        }
    }
    lo < hi || (lo == hi && !lo_open && !hi_open)
}

#[cfg(test)]
mod tests {
    use super::*;
    use latcut_geometry::rat::{frac, fvec, int, ivec};

    fn square() -> Polyhedron {
        vrep_to_hrep(&[ivec(&[0, 0]), ivec(&[1, 0]), ivec(&[0, 1]), ivec(&[1, 1])], &[], 2).unwrap()
    }

    #[test]
    fn slicing_a_square() {
        let s = slice_at(&square(), &frac(1, 2)).unwrap();
        let mut v = s.vertices.clone();
        v.sort();
        assert_eq!(v, vec![ivec(&[0]), ivec(&[1])]);
        assert_eq!(slice_at(&square(), &int(2)).unwrap_err(), GeomError::EmptySet);
    }

    #[test]
    fn embedding_round_trips_through_slice() {
        let tri = vrep_to_hrep(&[ivec(&[0, 0]), ivec(&[2, 0]), ivec(&[0, 2])], &[], 2).unwrap();
        let e = embed_at(&tri, &int(3)).unwrap();
        assert!(!e.fulldim);
        assert!(slice_at(&e, &int(3)).unwrap().same_set(&tri));
    }

    #[test]
    fn segments() {
        let sq = square();
        assert!(segment_meets(&sq, &ivec(&[-1, 0]), &ivec(&[2, 1]), true));
        assert!(segment_meets(&sq, &ivec(&[-1, 1]), &ivec(&[3, 1]), false));
        assert!(!segment_meets(&sq, &ivec(&[-1, 1]), &ivec(&[3, 1]), true));
        assert!(!segment_meets(&sq, &ivec(&[2, 0]), &ivec(&[3, 3]), false));
        assert!(segment_meets(&sq, &fvec(&[(1, 2), (1, 2)]), &fvec(&[(1, 2), (1, 2)]), true));
        assert!(segment_meets(&sq, &ivec(&[1, 1]), &ivec(&[2, 2]), false));
        assert!(!segment_meets(&sq, &ivec(&[1, 1]), &ivec(&[2, 2]), true));
    }
}
