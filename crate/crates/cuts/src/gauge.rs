use crate::CutError;
use latcut_geometry::rat::{dot, Rat, RatVec};
use latcut_geometry::Polyhedron;
use num_traits::{Signed, Zero};

/// Offsets `c_i = b_i - a_i·f` of `B - f`, all positive when `f ∈ int(B)`.
pub fn shifted_offsets(b: &Polyhedron, f: &[Rat]) -> Result<Vec<Rat>, CutError> {
    if f.len() != b.dim {
        return Err(CutError::DimensionMismatch);
    }
    if !b.interior_contains(f) {
        return Err(CutError::PointNotInterior);
    }
    Ok(b.hrep.iter().map(|h| -h.slack(f)).collect())
}

/// Minkowski gauge of `B - f` at `r`: `max(0, max_i a_i·r / c_i)`.
pub fn gauge(b: &Polyhedron, f: &[Rat], r: &[Rat]) -> Result<Rat, CutError> {
    let c = shifted_offsets(b, f)?;
    Ok(gauge_with(b, &c, r))
}

/// Gauge with precomputed shifted offsets.
pub fn gauge_with(b: &Polyhedron, offsets: &[Rat], r: &[Rat]) -> Rat {
    let mut best = Rat::zero();
    for (h, c) in b.hrep.iter().zip(offsets) {
        let v = dot(&h.normal, r) / c;
        if v > best {
            best = v;
        }
    }
    best
}

/// Index of a half-space attaining the gauge, if the gauge is positive.
pub fn gauge_argmax(b: &Polyhedron, offsets: &[Rat], r: &[Rat]) -> Option<usize> {
    let mut best: Option<(usize, Rat)> = None;
    for (i, (h, c)) in b.hrep.iter().zip(offsets).enumerate() {
        let v = dot(&h.normal, r) / c;
        if v.is_positive() && best.as_ref().is_none_or(|(_, bv)| v > *bv) {
            best = Some((i, v));
        }
    }
    best.map(|(i, _)| i)
}

/// `B - f` as a polyhedron.
pub fn translate(b: &Polyhedron, f: &[Rat]) -> Polyhedron {
    let neg: RatVec = f.iter().map(|x| -x).collect();
    latcut_geometry::minkowski_scale_shift(b, &Rat::from_integer(1.into()), &neg).expect("positive factor")
}
