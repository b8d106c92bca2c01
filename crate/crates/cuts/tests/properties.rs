use latcut_cuts::{cut_dominates, f_metric, gauge, intersection_cut, sqrt_le_sum};
use latcut_geometry::rat::{add, frac, lerp, scale, sub, Rat, RatVec};
use latcut_geometry::{contains, homothety, vrep_to_hrep, Polyhedron};
use num_traits::{One, Zero};
use proptest::prelude::*;

fn point(n: usize, lo: i64, hi: i64, den: i64) -> impl Strategy<Value = RatVec> {
    prop::collection::vec((lo..=hi).prop_map(move |p| frac(p, den)), n)
}

/// A polytope together with an interior point (its vertex centroid).
fn body(n: usize) -> impl Strategy<Value = (Polyhedron, RatVec)> {
    prop::collection::vec(point(n, -8, 8, 2), n + 1..n + 6).prop_filter_map("full-dimensional", move |pts| {
        let p = vrep_to_hrep(&pts, &[], n).ok()?;
        if !p.fulldim {
            return None;
        }
        let f = p.vertex_centroid();
        Some((p, f))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn gauge_is_positively_homogeneous(((b, f), r, lam) in (2usize..=3).prop_flat_map(|n| (body(n), point(n, -5, 5, 3), 0i64..20))) {
        let l = frac(lam, 7);
        prop_assert_eq!(gauge(&b, &f, &scale(&l, &r)).unwrap(), &l * gauge(&b, &f, &r).unwrap());
    }

    #[test]
    fn gauge_is_subadditive(((b, f), r1, r2) in (2usize..=3).prop_flat_map(|n| (body(n), point(n, -5, 5, 3), point(n, -5, 5, 3)))) {
        let lhs = gauge(&b, &f, &add(&r1, &r2)).unwrap();
        prop_assert!(lhs <= gauge(&b, &f, &r1).unwrap() + gauge(&b, &f, &r2).unwrap());
    }

    #[test]
    fn gauge_scaling(((b, f), r, lam) in (2usize..=3).prop_flat_map(|n| (body(n), point(n, -5, 5, 3), 1i64..9))) {
        // λ ψ_{B-f}(r) = ψ_{(1/λ)(B-f)}(r)
        let l = frac(lam, 3);
        let shrunk = homothety(&b, &f, &(Rat::one() / &l)).unwrap();
        prop_assert_eq!(gauge(&shrunk, &f, &r).unwrap(), &l * gauge(&b, &f, &r).unwrap());
    }

    #[test]
    fn gauge_membership_duality(((b, f), x) in (2usize..=3).prop_flat_map(|n| (body(n), point(n, -10, 10, 2)))) {
        let g = gauge(&b, &f, &sub(&x, &f)).unwrap();
        prop_assert_eq!(g <= Rat::one(), b.contains_point(&x));
        prop_assert_eq!(g < Rat::one(), b.interior_contains(&x));
    }

    #[test]
    fn dominance_matches_sampled_cut_implication(
        ((b1, f), (b2, _), cols, t) in (2usize..=3).prop_flat_map(|n| (
            body(n), body(n),
            prop::collection::vec(point(n, -4, 4, 1), 1..5),
            1i64..4,
        ))
    ) {
        // shrink b2 toward f so that f is interior to both
        let b2 = latcut_geometry::minkowski_scale_shift(&b2, &Rat::one(), &sub(&f, &b2.vertex_centroid())).unwrap();
        let b2 = homothety(&b2, &f, &frac(t, 4)).unwrap();
        prop_assume!(b1.interior_contains(&f) && b2.interior_contains(&f));
        let dom = cut_dominates(&b1, &b2, &f).unwrap();
        prop_assert_eq!(dom, contains(&b1, &b2));
        if dom {
            let c1 = intersection_cut(&b1, &cols, &f).unwrap();
            let c2 = intersection_cut(&b2, &cols, &f).unwrap();
            // points on the boundary of the first cut satisfy the second
            for (i, ci) in c1.coeffs.iter().enumerate() {
                if ci.is_zero() { continue; }
                let mut s = vec![Rat::zero(); cols.len()];
                s[i] = Rat::one() / ci;
                prop_assert!(c2.member(&s));
            }
        }
    }

    #[test]
    fn f_metric_axioms(
        ((a, f), (b, _), (c, _)) in (2usize..=2).prop_flat_map(|n| (body(n), body(n), body(n)))
    ) {
        let recenter = |p: &Polyhedron| {
            latcut_geometry::minkowski_scale_shift(p, &Rat::one(), &sub(&f, &p.vertex_centroid())).unwrap()
        };
        let (b, c) = (recenter(&b), recenter(&c));
        let ab = f_metric(&a, &b, &f).unwrap().dist_sq;
        let ba = f_metric(&b, &a, &f).unwrap().dist_sq;
        let bc = f_metric(&b, &c, &f).unwrap().dist_sq;
        let ac = f_metric(&a, &c, &f).unwrap().dist_sq;
        prop_assert!(ab >= Rat::zero());
        prop_assert_eq!(&ab, &ba);
        prop_assert!(f_metric(&a, &a, &f).unwrap().dist_sq.is_zero());
        prop_assert!(sqrt_le_sum(&ac, &ab, &bc));
        if ab.is_zero() {
            prop_assert!(a.same_set(&b));
        }
    }
}

#[test]
fn lerp_keeps_interior() {
    let b = vrep_to_hrep(&[latcut_geometry::rat::ivec(&[0, 0]), latcut_geometry::rat::ivec(&[4, 0]), latcut_geometry::rat::ivec(&[0, 4])], &[], 2).unwrap();
    let f = b.vertex_centroid();
    let x = lerp(&frac(1, 2), &f, &b.vertices[0]);
    assert_eq!(gauge(&b, &f, &sub(&x, &f)).unwrap(), frac(1, 2));
}
