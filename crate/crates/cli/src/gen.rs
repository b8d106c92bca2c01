//! Seeded random instances for the scenario runner.

use latcut_geometry::rat::{frac, sub, Rat, RatVec};
use latcut_geometry::{minkowski_scale_shift, vrep_to_hrep, Polyhedron};
use num_traits::One;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

/// Stream `i` of the generator seeded with `seed`.
pub fn stream(seed: u64, i: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(i);
    r
}

pub fn point<R: Rng>(rng: &mut R, n: usize, range: i64, den: i64) -> RatVec {
    (0..n).map(|_| frac(rng.gen_range(-range * den..=range * den), den)).collect()
}

/// A full-dimensional polytope spanned by a handful of half-integral points.
pub fn polytope<R: Rng>(rng: &mut R, n: usize) -> Polyhedron {
    loop {
        let k = rng.gen_range(n + 1..n + 6);
        let pts: Vec<RatVec> = (0..k).map(|_| point(rng, n, 4, 2)).collect();
        if let Ok(p) = vrep_to_hrep(&pts, &[], n) {
            if p.fulldim {
                return p;
            }
        }
    }
}

/// `p` translated so that its vertex centroid is `f`.
pub fn centered_at(p: &Polyhedron, f: &[Rat]) -> Polyhedron {
    minkowski_scale_shift(p, &Rat::one(), &sub(f, &p.vertex_centroid())).expect("translation")
}

/// `(B, L, f)` with `f` the vertex centroid of `L` and of the shifted `B`.
pub fn triple<R: Rng>(rng: &mut R, n: usize) -> (Polyhedron, Polyhedron, RatVec) {
    let l = polytope(rng, n);
    let f = l.vertex_centroid();
    let b = centered_at(&polytope(rng, n), &f);
    (b, l, f)
}

pub fn dim<R: Rng>(rng: &mut R) -> usize {
    rng.gen_range(2..=3)
}
