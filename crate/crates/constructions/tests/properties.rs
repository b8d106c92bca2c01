use latcut_constructions::random::{
    random_interior_point, random_lift_input, random_maximal_lattice_free, random_small_lattice_free,
    random_truncated_cone,
};
use latcut_constructions::*;
use latcut_geometry::rat::{frac, int, Rat, RatVec};
use latcut_geometry::{contains, homothety, Polyhedron};
use latcut_lattice::{check_lattice_free, denominator, flatness_bound};
use latcut_strength::{rho_f, StrengthValue};
use num_traits::One;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn instance(seed: u64, n: usize) -> (Polyhedron, RatVec) {
    let mut r = rng(seed);
    loop {
        let l = random_maximal_lattice_free(&mut r, n).unwrap();
        if let Some(f) = random_interior_point(&mut r, &l, 7) {
            return (l, f);
        }
    }
}

#[test]
fn cube_face_census() {
    for n in 1..=3usize {
        for i in 2..=1usize << n {
            let p = cube_face_construction(n, i).unwrap();
            assert_eq!(p.n_facets(), i, "n={n} i={i}");
            let c = check_lattice_free(&p).unwrap();
            assert!(c.is_lattice_free() && c.is_maximal(), "n={n} i={i}");
        }
        assert_eq!(cube_face_construction(n, 1), Err(ConstructionError::OutOfRange));
        assert_eq!(cube_face_construction(n, (1 << n) + 1), Err(ConstructionError::OutOfRange));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn shrink_is_sandwiched(seed in any::<u64>(), n in 2usize..=3) {
        let (t, f) = random_truncated_cone(&mut rng(seed), n).unwrap();
        let s = truncated_cone_shrink(&t, &f).unwrap();
        prop_assert!(s.mu >= frac(1, 3) && s.mu <= Rat::one());
        prop_assert!(contains(&t.hull, &s.polytope));
        prop_assert!(contains(&s.polytope, &homothety(&t.hull, &f, &frac(1, 4)).unwrap()));
    }

    #[test]
    fn lifts_keep_their_guarantees(seed in any::<u64>(), n in 2usize..=3) {
        let (l, f) = instance(seed, n);
        if let Some(inst) = prepare_lift(&l, &f).unwrap() {
            let out = lift_to_nplus1(&inst.l, &inst.f, &inst.gamma, &inst.d, inst.t).unwrap();
            prop_assert!(out.b.n_facets() <= out.m + 1);
            prop_assert!(check_lattice_free(&out.b).unwrap().is_lattice_free());
            let quarter = &inst.gamma / int(4);
            prop_assert!(contains(&out.b, &homothety(&inst.l, &inst.f, &quarter).unwrap()));
        }
        let (l, f, gamma, d, t) = random_lift_input(&mut rng(seed), n).unwrap();
        let out = lift_to_nplus1(&l, &f, &gamma, &d, t).unwrap();
        prop_assert!(out.b.n_facets() <= d.n_facets() + 1);
        prop_assert!(check_lattice_free(&out.b).unwrap().is_lattice_free());
        prop_assert!(contains(&out.b, &homothety(&l, &f, &(gamma / int(4))).unwrap()));
    }

    #[test]
    fn approximation_factors_are_bounded(seed in any::<u64>(), n in 2usize..=3) {
        let (l, f) = instance(seed, n);
        let flt = flatness_bound(n as u64);
        let a = approximate_any_f(&l, &f).unwrap();
        prop_assert!(a.facets <= (1 << (n - 1)) + 1);
        prop_assert!(a.factor <= int(4) * &flt);
        prop_assert_eq!(rho_f(&a.b, &l, &f).unwrap().value, StrengthValue::Finite(a.factor.clone()));
        let a = approximate_fixed_f(&l, &f).unwrap();
        prop_assert!(a.facets <= n + 1);
        let s = Rat::from_integer(denominator(&f));
        prop_assert!(a.factor <= flt * int(4i64.pow(n as u32 - 1)) * s);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn towers_defeat_small_sets(num in 1i64..6, den in 2i64..7, alpha in 2i64..8, seed in any::<u64>()) {
        prop_assume!(num % den != 0);
        let f = vec![frac(num, den), frac(1, 2)];
        let alpha = int(alpha);
        let t = simplex_tower(&f, &alpha).unwrap();
        prop_assert!(t.verify().unwrap().all());
        let mut r = rng(seed);
        for _ in 0..4 {
            let b = random_small_lattice_free(&mut r, 2, &f).unwrap();
            prop_assert!(rho_f(&b, &t.l, &f).unwrap().value >= StrengthValue::Finite(alpha.clone()));
        }
    }

    #[test]
    fn pyramids_defeat_sets_with_few_facets(mu_num in 1i64..9, seed in any::<u64>()) {
        let iv = Polyhedron::from_inequalities(&[(vec![int(1)], int(1)), (vec![int(-1)], int(0))]).unwrap();
        let c = vec![frac(1, 2)];
        let zs = vec![vec![int(0)], vec![int(1)]];
        let eps = shrink_epsilon(&iv, &c, &zs).unwrap();
        let p = inapprox_pyramid(&iv, &c, &zs, &eps, &frac(mu_num, 10)).unwrap();
        prop_assert!(p.verify().unwrap().all());
        let small = homothety(&p.pyramid, &p.f, &(&eps * &p.mu)).unwrap();
        let mut r = rng(seed);
        for _ in 0..4 {
            let m = random_small_lattice_free(&mut r, 2, &p.f).unwrap();
            prop_assert!(m.n_facets() <= iv.n_facets());
            prop_assert!(!small.vertices.iter().all(|v| m.interior_contains(v)));
        }
    }
}

