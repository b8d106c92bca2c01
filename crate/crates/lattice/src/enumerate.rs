use crate::unimodular::lineality_normalizer;
use crate::LatticeError;
use latcut_geometry::lp::{simplex_ineq, LpOutcome};
use latcut_geometry::rat::{ceil, dot, floor, neg, Rat, RatVec};
use latcut_geometry::{dd_convert, transform, HalfSpace, Polyhedron, UnimodularMap};
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

/// Refuses boxes with more integer points than this.
pub const MAX_BOX_POINTS: u64 = 20_000_000;

/// Refuses polytopes with more integer points than this.
pub const MAX_FIBER_POINTS: usize = 2_000_000;

/// True when every ray comes with its opposite.
pub fn recession_is_subspace(p: &Polyhedron) -> bool {
    p.rays.iter().all(|w| p.rays.contains(&neg(w)))
}

/// Integer points in the axis box spanned by `pts`.
pub fn box_points(pts: &[RatVec]) -> Result<Vec<RatVec>, LatticeError> {
    let n = pts.first().map_or(0, |p| p.len());
    let mut ranges: Vec<(BigInt, BigInt)> = Vec::with_capacity(n);
    let mut total: u64 = 1;
    for i in 0..n {
        let lo = pts.iter().map(|p| ceil(&p[i])).min().unwrap();
        let hi = pts.iter().map(|p| floor(&p[i])).max().unwrap();
        if hi < lo {
            return Ok(Vec::new());
        }
        let span = (&hi - &lo + 1u32).to_u64().unwrap_or(u64::MAX);
        total = total.saturating_mul(span);
        if total > MAX_BOX_POINTS {
            return Err(LatticeError::EnumerationTooLarge);
        }
        ranges.push((lo, hi));
    }
    let mut out = Vec::new();
    let mut cur: Vec<BigInt> = ranges.iter().map(|r| r.0.clone()).collect();
    if n == 0 {
        return Ok(out);
    }
    loop {
        out.push(cur.iter().map(|x| Rat::from_integer(x.clone())).collect());
        let mut i = n;
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            if cur[i] < ranges[i].1 {
                cur[i] += 1;
                for (j, c) in cur.iter_mut().enumerate().skip(i + 1) {
                    *c = ranges[j].0.clone();
                }
                break;
            }
        }
    }
}

/// Range of `x_i` over `{x : A x ≤ b, x_j = prefix_j for j < i}`, or `None`
/// when that set is empty.
fn coordinate_range(p: &Polyhedron, prefix: &[Rat]) -> Option<(Rat, Rat)> {
    let i = prefix.len();
    let rows: Vec<RatVec> = p.hrep.iter().map(|h| h.normal[i..].to_vec()).collect();
    let rhs: Vec<Rat> = p.hrep.iter().map(|h| &h.offset - dot(&h.normal[..i], prefix)).collect();
    if i + 1 == p.dim {
        let (mut lo, mut hi): (Option<Rat>, Option<Rat>) = (None, None);
        for (a, b) in rows.iter().zip(&rhs) {
            let c = &a[0];
            if c.is_zero() {
                if b.is_negative() {
                    return None;
                }
            } else if c.is_positive() {
                let v = b / c;
                hi = Some(hi.map_or(v.clone(), |h| h.min(v)));
            } else {
                let v = b / c;
                lo = Some(lo.map_or(v.clone(), |l| l.max(v)));
            }
        }
        let (lo, hi) = (lo.expect("bounded"), hi.expect("bounded"));
        return (lo <= hi).then_some((lo, hi));
    }
    let mut obj = vec![Rat::zero(); p.dim - i];
    obj[0] = Rat::from_integer(1.into());
    let hi = match simplex_ineq(&rows, &rhs, &obj) {
        LpOutcome::Optimal(s) => s.optimum,
        _ => return None,
    };
    obj[0] = Rat::from_integer((-1).into());
    let lo = match simplex_ineq(&rows, &rhs, &obj) {
        LpOutcome::Optimal(s) => -s.optimum,
        _ => return None,
    };
    Some((lo, hi))
}

/// Integer points of a polytope, one coordinate at a time over the fibers
/// that are actually nonempty.
pub fn fiber_points(p: &Polyhedron) -> Result<Vec<RatVec>, LatticeError> {
    if p.vertices.is_empty() || p.dim == 0 {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(p.dim);
    fiber_rec(p, &mut prefix, &mut out)?;
    Ok(out)
}

fn fiber_rec(p: &Polyhedron, prefix: &mut Vec<Rat>, out: &mut Vec<RatVec>) -> Result<(), LatticeError> {
    let range = if prefix.is_empty() {
        let it = || p.vertices.iter().map(|v| v[0].clone());
        Some((it().min().expect("nonempty"), it().max().expect("nonempty")))
    } else {
        coordinate_range(p, prefix)
    };
    let Some((lo, hi)) = range else { return Ok(()) };
    let (mut k, hi) = (ceil(&lo), floor(&hi));
    while k <= hi {
        prefix.push(Rat::from_integer(k.clone()));
        if prefix.len() == p.dim {
            if out.len() >= MAX_FIBER_POINTS {
                return Err(LatticeError::EnumerationTooLarge);
            }
            out.push(prefix.clone());
        } else {
            fiber_rec(p, prefix, out)?;
        }
        prefix.pop();
        k += 1;
    }
    Ok(())
}

/// A polyhedron whose lineality lies along trailing axes, as produced by
/// [`normalize_lineality`]: the bounded factor lives in the leading
/// `dim - lineality` coordinates.
pub struct Normalized {
    pub map: UnimodularMap,
    pub image: Polyhedron,
    pub lineality: usize,
}

pub fn normalize_lineality(p: &Polyhedron) -> Result<Normalized, LatticeError> {
    if !recession_is_subspace(p) {
        return Err(LatticeError::UnboundedEnumeration);
    }
    let lin = p.lineality();
    let map = lineality_normalizer(&lin, p.dim);
    let image = transform(p, &map)?;
    Ok(Normalized { map, image, lineality: lin.len() })
}

/// Drops the trailing coordinates of a polyhedron whose lineality lies
/// along those axes.
pub fn bounded_factor(norm: &Normalized) -> Result<Option<Polyhedron>, LatticeError> {
    let n = norm.image.dim;
    let m = n - norm.lineality;
    if m == 0 {
        return Ok(None);
    }
    let hs = norm
        .image
        .hrep
        .iter()
        .map(|h| HalfSpace::new(h.normal[..m].to_vec(), h.offset.clone()))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Some(dd_convert(&hs, m)?))
}

/// Integer points of `p` (strict: of its interior). For sets with a
/// nontrivial lineality space only a fundamental slice is listed: one
/// representative per class modulo the integer points of the lineality.
pub fn lattice_points_in(p: &Polyhedron, strict: bool) -> Result<Vec<RatVec>, LatticeError> {
    if strict && !p.fulldim {
        return Ok(Vec::new());
    }
    let keep = |x: &RatVec| if strict { p.interior_contains(x) } else { p.contains_point(x) };
    if p.rays.is_empty() {
        return Ok(fiber_points(p)?.into_iter().filter(keep).collect());
    }
    let norm = normalize_lineality(p)?;
    let n = p.dim;
    let inv = norm.map.inverse();
    let lift = |z: &RatVec| -> RatVec {
        let mut full = z.clone();
        full.resize(n, Rat::zero());
        inv.apply(&full)
    };
    let candidates: Vec<RatVec> = match bounded_factor(&norm)? {
        None => vec![Vec::new()],
        Some(q) => fiber_points(&q)?,
    };
    Ok(candidates.iter().map(lift).filter(keep).collect())
}
