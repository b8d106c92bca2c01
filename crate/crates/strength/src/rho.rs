use crate::StrengthError;
use latcut_cuts::gauge::{gauge_with, shifted_offsets};
use latcut_geometry::rat::{sub, Rat, RatVec};
use latcut_geometry::{contains, homothety, Polyhedron};
use num_traits::{One, Signed, Zero};

/// Ordered as `Zero < Finite(_) < Infinite`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum StrengthValue {
    Zero,
    Finite(Rat),
    Infinite,
}

impl StrengthValue {
    pub fn finite(&self) -> Option<&Rat> {
        match self {
            StrengthValue::Finite(a) => Some(a),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StrengthWitness {
    None,
    /// Vertex of `L` attaining the maximal gauge.
    Vertex(RatVec),
    /// Recession direction of `L` on which the gauge of `B - f` is positive.
    Ray(RatVec),
    /// `f` lies in the interior of `L` but not of `B`.
    FNotInterior,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrengthReport {
    pub value: StrengthValue,
    pub witness: StrengthWitness,
}

/// Smallest `α` with `αB + (1-α)f ⊇ L`, from the gauge of `B - f` on the
/// generators of `L - f`.
pub fn rho_f(b: &Polyhedron, l: &Polyhedron, f: &[Rat]) -> Result<StrengthReport, StrengthError> {
    if b.dim != l.dim || f.len() != l.dim {
        return Err(StrengthError::DimensionMismatch);
    }
    if !l.interior_contains(f) {
        return Ok(StrengthReport { value: StrengthValue::Zero, witness: StrengthWitness::None });
    }
    let offsets = match shifted_offsets(b, f) {
        Ok(c) => c,
        Err(_) => {
            return Ok(StrengthReport { value: StrengthValue::Infinite, witness: StrengthWitness::FNotInterior });
        }
    };
    if let Some(w) = l.rays.iter().find(|w| gauge_with(b, &offsets, w).is_positive()) {
        return Ok(StrengthReport { value: StrengthValue::Infinite, witness: StrengthWitness::Ray(w.clone()) });
    }
    let mut best: Option<(Rat, &RatVec)> = None;
    for v in &l.vertices {
        let g = gauge_with(b, &offsets, &sub(v, f));
        if best.as_ref().is_none_or(|(bg, _)| g > *bg) {
            best = Some((g, v));
        }
    }
    let (g, v) = best.expect("polyhedron has a vertex");
    Ok(StrengthReport { value: StrengthValue::Finite(g), witness: StrengthWitness::Vertex(v.clone()) })
}

/// Bisects for the least `α` with `contains(homothety(B, f, α), L)` until
/// the bracket is within `rel_tol` of its upper end, and returns that upper
/// end. `None` when no positive `α` works.
pub fn containment_threshold(b: &Polyhedron, l: &Polyhedron, f: &[Rat], rel_tol: &Rat) -> Option<Rat> {
    if l.rays.iter().any(|w| !b.has_recession(w)) {
        return None;
    }
    let holds = |a: &Rat| homothety(b, f, a).map(|h| contains(&h, l)).unwrap_or(false);
    let two = Rat::from_integer(2.into());
    let mut hi = Rat::one();
    let mut doublings = 0;
    while !holds(&hi) {
        hi *= &two;
        doublings += 1;
        if doublings > 128 {
            return None;
        }
    }
    let mut lo = Rat::zero();
    while &hi - &lo > rel_tol * &hi {
        let mid = (&lo + &hi) / &two;
        if holds(&mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Some(hi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use latcut_geometry::rat::{frac, fvec, int, ivec};
    use latcut_geometry::vrep_to_hrep;

    fn boxed(lo: (i64, i64), hi: (i64, i64)) -> Polyhedron {
        let (a, b) = (frac(lo.0, lo.1), frac(hi.0, hi.1));
        vrep_to_hrep(
            &[vec![a.clone(), a.clone()], vec![b.clone(), a.clone()], vec![a.clone(), b.clone()], vec![b.clone(), b.clone()]],
            &[],
            2,
        )
        .unwrap()
    }

    fn slab() -> Polyhedron {
        vrep_to_hrep(&[ivec(&[0, 0]), ivec(&[1, 0])], &[ivec(&[0, 1]), ivec(&[0, -1])], 2).unwrap()
    }

    fn half() -> RatVec {
        fvec(&[(1, 2), (1, 2)])
    }

    #[test]
    fn self_strength_is_one() {
        let sq = boxed((0, 1), (1, 1));
        assert_eq!(rho_f(&sq, &sq, &half()).unwrap().value, StrengthValue::Finite(int(1)));
        assert_eq!(rho_f(&slab(), &slab(), &half()).unwrap().value, StrengthValue::Finite(int(1)));
    }

    #[test]
    fn square_against_inner_square() {
        let sq = boxed((0, 1), (1, 1));
        let inner = boxed((1, 4), (3, 4));
        // oracle: each inner vertex sits halfway from f to a corner of the square
        let rep = rho_f(&sq, &inner, &half()).unwrap();
        assert_eq!(rep.value, StrengthValue::Finite(frac(1, 2)));
        assert!(matches!(rep.witness, StrengthWitness::Vertex(_)));
        assert!(contains(&homothety(&sq, &half(), &frac(1, 2)).unwrap(), &inner));
        assert!(!contains(&homothety(&sq, &half(), &frac(499, 1000)).unwrap(), &inner));
    }

    #[test]
    fn triangle_against_split_is_infinite() {
        let tri = vrep_to_hrep(&[ivec(&[0, 0]), ivec(&[2, 0]), ivec(&[0, 2])], &[], 2).unwrap();
        let rep = rho_f(&tri, &slab(), &half()).unwrap();
        assert_eq!(rep.value, StrengthValue::Infinite);
        match rep.witness {
            StrengthWitness::Ray(w) => assert!(w == ivec(&[0, 1]) || w == ivec(&[0, -1])),
            other => panic!("unexpected witness {other:?}"),
        }
    }

    #[test]
    fn degenerate_cases() {
        let sq = boxed((0, 1), (1, 1));
        assert_eq!(rho_f(&sq, &sq, &ivec(&[0, 0])).unwrap().value, StrengthValue::Zero);
        let shifted = boxed((1, 1), (2, 1));
        let big = boxed((0, 1), (2, 1));
        let rep = rho_f(&shifted, &big, &half()).unwrap();
        assert_eq!(rep, StrengthReport { value: StrengthValue::Infinite, witness: StrengthWitness::FNotInterior });
    }

    #[test]
    fn threshold_brackets_closed_form() {
        let sq = boxed((0, 1), (1, 1));
        let inner = boxed((1, 4), (3, 4));
        let t = containment_threshold(&sq, &inner, &half(), &frac(1, 1000)).unwrap();
        assert!(t >= frac(1, 2) && t <= frac(1, 2) * frac(1001, 1000));
        assert_eq!(containment_threshold(&boxed((0, 1), (1, 1)), &slab(), &half(), &frac(1, 1000)), None);
    }

    #[test]
    fn ordering() {
        assert!(StrengthValue::Zero < StrengthValue::Finite(int(0)));
        assert!(StrengthValue::Finite(int(5)) < StrengthValue::Infinite);
        assert!(StrengthValue::Finite(int(1)) < StrengthValue::Finite(int(2)));
    }
}
