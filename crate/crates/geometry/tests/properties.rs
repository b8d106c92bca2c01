use latcut_geometry::rat::{dot, frac, int, Rat, RatVec};
use latcut_geometry::{
    contains, dd_convert, homothety, lp_solve, polar, transform, vrep_to_hrep, HalfSpace, Polyhedron, Sense,
    UnimodularMap,
};
use num_traits::Signed;
use proptest::prelude::*;

fn point(n: usize, lo: i64, hi: i64, den: i64) -> impl Strategy<Value = RatVec> {
    prop::collection::vec((lo..=hi).prop_map(move |p| frac(p, den)), n)
}

fn polytope(n: usize) -> impl Strategy<Value = Polyhedron> {
    prop::collection::vec(point(n, -6, 6, 2), n + 1..n + 7).prop_filter_map("full-dimensional", move |pts| {
        let p = vrep_to_hrep(&pts, &[], n).ok()?;
        p.fulldim.then_some(p)
    })
}

fn dims() -> impl Strategy<Value = usize> {
    2usize..=3
}

fn unimodular(n: usize) -> impl Strategy<Value = UnimodularMap> {
    // product of elementary shears and a shift
    prop::collection::vec((0..n, 0..n, -2i64..=2), 1..5).prop_flat_map(move |ops| {
        prop::collection::vec(-3i64..=3, n).prop_map(move |shift| {
            let mut m: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| (i == j) as i64).collect()).collect();
            for &(i, j, k) in &ops {
                if i != j {
                    let src = m[j].clone();
                    for (dst, x) in m[i].iter_mut().zip(src) {
                        *dst += k * x;
                    }
                }
            }
            UnimodularMap::from_ints(&m, &shift).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn hrep_vrep_roundtrip(p in dims().prop_flat_map(polytope)) {
        let from_h = dd_convert(&p.hrep, p.dim).unwrap();
        let back = vrep_to_hrep(&from_h.vertices, &from_h.rays, p.dim).unwrap();
        let mut a = p.hrep.clone();
        let mut b = back.hrep.clone();
        a.sort();
        b.sort();
        prop_assert_eq!(a, b);
        prop_assert!(from_h.is_consistent());
    }

    #[test]
    fn bipolar_identity(p in dims().prop_flat_map(polytope)) {
        let c = p.vertex_centroid();
        let neg_c: RatVec = c.iter().map(|x| -x).collect();
        let centered = latcut_geometry::minkowski_scale_shift(&p, &int(1), &neg_c).unwrap();
        let bb = polar(&polar(&centered).unwrap()).unwrap();
        prop_assert_eq!(bb.sorted(), centered.sorted());
    }

    #[test]
    fn lp_matches_vertex_scan(
        (p, obj) in dims().prop_flat_map(|n| (polytope(n), point(n, -5, 5, 1)))
    ) {
        let brute_max = p.vertices.iter().map(|v| dot(&obj, v)).max().unwrap();
        let brute_min = p.vertices.iter().map(|v| dot(&obj, v)).min().unwrap();
        prop_assert_eq!(lp_solve(&obj, &p, Sense::Max).unwrap().optimum, brute_max);
        prop_assert_eq!(lp_solve(&obj, &p, Sense::Min).unwrap().optimum, brute_min);
    }

    #[test]
    fn containment_agrees_with_samples(
        (p, q, weights) in dims().prop_flat_map(|n| (
            polytope(n),
            polytope(n),
            prop::collection::vec(prop::collection::vec(0i64..5, 10), 20),
        ))
    ) {
        let verdict = contains(&p, &q);
        let k = q.vertices.len();
        for w in &weights {
            let tot: i64 = w.iter().take(k).sum::<i64>().max(1);
            let mut x = vec![Rat::from_integer(0.into()); q.dim];
            let mut used = 0;
            for (i, v) in q.vertices.iter().enumerate() {
                let wi = if i < w.len() { w[i] } else { 0 };
                used += wi;
                for (xc, vc) in x.iter_mut().zip(v) {
                    *xc += frac(wi, tot) * vc;
                }
            }
            if used == 0 {
                x = q.vertices[0].clone();
            }
            if verdict {
                prop_assert!(p.contains_point(&x));
            }
        }
        let violator = q.vertices.iter().any(|v| !p.contains_point(v));
        prop_assert_eq!(verdict, !violator);
    }

    #[test]
    fn unimodular_maps_preserve_structure(
        (p, t, lat) in dims().prop_flat_map(|n| (polytope(n), unimodular(n), point(n, -4, 4, 1)))
    ) {
        let img = transform(&p, &t).unwrap();
        prop_assert_eq!(img.n_facets(), p.n_facets());
        prop_assert!(img.is_consistent());
        prop_assert_eq!(p.contains_point(&lat), img.contains_point(&t.apply(&lat)));
        prop_assert!(img.same_set(&dd_convert(&img.hrep, img.dim).unwrap()));
        let c = p.vertex_centroid();
        let inner = homothety(&p, &c, &frac(1, 2)).unwrap();
        prop_assert_eq!(contains(&p, &inner), contains(&img, &transform(&inner, &t).unwrap()));
        prop_assert!(t.apply(&lat).iter().all(|x| x.is_integer()));
    }

    #[test]
    fn halfspace_normal_is_primitive(a in point(3, -9, 9, 6), b in -9i64..9) {
        prop_assume!(a.iter().any(|x| !x.is_zero()));
        let h = HalfSpace::new(a.clone(), int(b)).unwrap();
        prop_assert!(h.normal.iter().all(|x| x.is_integer()));
        let g = h.normal.iter().fold(num_bigint::BigInt::from(0), |acc, x| num_integer::Integer::gcd(&acc, &x.to_integer()));
        prop_assert_eq!(g, num_bigint::BigInt::from(1));
        // same half-space: ratio of normals is positive and offsets scale alike
        let i = a.iter().position(|x| !x.is_zero()).unwrap();
        let ratio = &h.normal[i] / &a[i];
        prop_assert!(ratio.is_positive());
        prop_assert_eq!(&h.offset, &(ratio * int(b)));
    }
}

use num_traits::Zero;
