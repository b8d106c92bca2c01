use latcut_geometry::lp::{simplex_ineq, LpOutcome};
use latcut_geometry::rat::{dot, lcm_denominators, Rat, RatVec};
use latcut_geometry::Polyhedron;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::cmp::Reverse;

/// Lattice width, finite or unbounded.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Width {
    Finite(Rat),
    Infinite,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WidthResult {
    pub direction: RatVec,
    pub width: Width,
    pub is_certified_min: bool,
    pub enum_bound: u64,
}

/// `max u·x - min u·x` over `p`.
pub fn width_along(p: &Polyhedron, u: &[Rat]) -> Width {
    if p.rays.iter().any(|w| !dot(u, w).is_zero()) {
        return Width::Infinite;
    }
    let vals: Vec<Rat> = p.vertices.iter().map(|v| dot(u, v)).collect();
    let hi = vals.iter().max().unwrap();
    let lo = vals.iter().min().unwrap();
    Width::Finite(hi - lo)
}

/// Primitive integer vectors with `‖u‖∞ ≤ k` and first nonzero entry
/// positive, shortest first.
pub fn primitive_directions(n: usize, k: u64) -> Vec<RatVec> {
    let k = k as i64;
    let mut out: Vec<Vec<i64>> = Vec::new();
    let mut cur = vec![-k; n];
    loop {
        let first = cur.iter().find(|&&x| x != 0);
        if first.is_some_and(|&x| x > 0) {
            let g = cur.iter().fold(0i64, |acc, &x| acc.gcd(&x));
            if g == 1 {
                out.push(cur.clone());
            }
        }
        let mut i = n;
        loop {
            if i == 0 {
                out.sort_by_key(|u| {
                    let inf = u.iter().map(|x| x.abs()).max().unwrap();
                    let one: i64 = u.iter().map(|x| x.abs()).sum();
                    (inf, one, Reverse(u.clone()))
                });
                return out.iter().map(|u| latcut_geometry::rat::ivec(u)).collect();
            }
            i -= 1;
            if cur[i] < k {
                cur[i] += 1;
                for c in cur.iter_mut().skip(i + 1) {
                    *c = -k;
                }
                break;
            }
        }
    }
}

/// Half side length of the largest axis-parallel cube inside `p`;
/// `None` when arbitrarily large cubes fit.
pub fn inscribed_cube_halfside(p: &Polyhedron) -> Option<Rat> {
    let n = p.dim;
    // variables (c, s): a·c + s‖a‖₁ ≤ b
    let a: Vec<RatVec> = p
        .hrep
        .iter()
        .map(|h| {
            let mut r = h.normal.clone();
            r.push(h.normal.iter().map(|x| x.abs()).sum());
            r
        })
        .collect();
    let b: RatVec = p.hrep.iter().map(|h| h.offset.clone()).collect();
    let mut c = vec![Rat::zero(); n + 1];
    c[n] = Rat::one();
    match simplex_ineq(&a, &b, &c) {
        LpOutcome::Optimal(s) => Some(s.optimum),
        _ => None,
    }
}

/// Minimum width over primitive directions with `‖u‖∞ ≤ enum_bound`.
///
/// Every direction satisfies `w(P,u) ≥ 2s‖u‖∞` where `s` is the half side
/// of a cube inside `P`, so the search is exhaustive once
/// `enum_bound ≥ best / (2s)`.
pub fn lattice_width(p: &Polyhedron, enum_bound: u64) -> WidthResult {
    let k = enum_bound.max(1);
    let mut best: Option<(RatVec, Width)> = None;
    for u in primitive_directions(p.dim, k) {
        let w = width_along(p, &u);
        if best.as_ref().is_none_or(|(_, b)| w < *b) {
            best = Some((u, w));
        }
    }
    let (direction, width) = best.expect("at least one direction");
    let is_certified_min = match (&width, inscribed_cube_halfside(p)) {
        (Width::Infinite, None) => true,
        (Width::Infinite, Some(_)) => false,
        (Width::Finite(_), None) => false,
        (Width::Finite(w), Some(s)) => {
            s.is_positive() && Rat::from_integer(BigInt::from(k)) * (Rat::from_integer(2.into()) * s) >= *w
        }
    };
    WidthResult { direction, width, is_certified_min, enum_bound: k }
}

/// `⌈n^{5/2}⌉`
pub fn flatness_bound(n: u64) -> Rat {
    let n5 = BigInt::from(n).pow(5);
    let mut m = n5.sqrt();
    if &m * &m < n5 {
        m += 1;
    }
    Rat::from_integer(m)
}

/// Least `s ≥ 1` with `s·f` integral.
pub fn denominator(f: &[Rat]) -> BigInt {
    lcm_denominators(f)
}
