use crate::gauge::{gauge_with, shifted_offsets};
use crate::CutError;
use latcut_geometry::rat::{Rat, RatVec};
use latcut_geometry::{contains, Polyhedron};
use num_traits::{One, Signed, Zero};

/// The inequality `Σ s_i·coeffs[i] ≥ 1` on `s ≥ 0`, or no restriction
/// when `trivial`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutSystem {
    pub f: RatVec,
    pub columns: Vec<RatVec>,
    pub coeffs: Vec<Rat>,
    pub trivial: bool,
}

impl CutSystem {
    pub fn member(&self, s: &[Rat]) -> bool {
        if s.len() != self.columns.len() || s.iter().any(|x| x.is_negative()) {
            return false;
        }
        if self.trivial {
            return true;
        }
        let lhs: Rat = s.iter().zip(&self.coeffs).map(|(a, b)| a * b).sum();
        lhs >= Rat::one()
    }

    /// `Σ s_i·coeffs[i]`, the left-hand side of the cut.
    pub fn lhs(&self, s: &[Rat]) -> Rat {
        s.iter().zip(&self.coeffs).map(|(a, b)| a * b).sum()
    }
}

pub fn intersection_cut(b: &Polyhedron, columns: &[RatVec], f: &[Rat]) -> Result<CutSystem, CutError> {
    if f.len() != b.dim || columns.iter().any(|r| r.len() != b.dim) {
        return Err(CutError::DimensionMismatch);
    }
    match shifted_offsets(b, f) {
        Ok(c) => Ok(CutSystem {
            f: f.to_vec(),
            columns: columns.to_vec(),
            coeffs: columns.iter().map(|r| gauge_with(b, &c, r)).collect(),
            trivial: false,
        }),
        Err(CutError::PointNotInterior) => Ok(CutSystem {
            f: f.to_vec(),
            columns: columns.to_vec(),
            coeffs: vec![Rat::zero(); columns.len()],
            trivial: true,
        }),
        Err(e) => Err(e),
    }
}

/// Intersection of the cuts from a finite family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosureSystem {
    pub cuts: Vec<CutSystem>,
}

pub fn closure(family: &[Polyhedron], columns: &[RatVec], f: &[Rat]) -> Result<ClosureSystem, CutError> {
    let cuts = family
        .iter()
        .map(|b| intersection_cut(b, columns, f))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(ClosureSystem { cuts })
}

pub fn cut_point_member(sys: &ClosureSystem, s: &[Rat]) -> bool {
    if s.iter().any(|x| x.is_negative()) {
        return false;
    }
    sys.cuts.iter().all(|c| c.member(s))
}

/// Whether the cut from `b1` is at least as strong as the cut from `b2`
/// for every choice of columns.
pub fn cut_dominates(b1: &Polyhedron, b2: &Polyhedron, f: &[Rat]) -> Result<bool, CutError> {
    shifted_offsets(b1, f)?;
    shifted_offsets(b2, f)?;
    Ok(contains(b1, b2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use latcut_geometry::rat::{frac, fvec, int, ivec};
    use latcut_geometry::vrep_to_hrep;

    fn square() -> Polyhedron {
        vrep_to_hrep(&[ivec(&[0, 0]), ivec(&[1, 0]), ivec(&[0, 1]), ivec(&[1, 1])], &[], 2).unwrap()
    }

    fn slab() -> Polyhedron {
        vrep_to_hrep(&[ivec(&[0, 0]), ivec(&[1, 0])], &[ivec(&[0, 1]), ivec(&[0, -1])], 2).unwrap()
    }

    fn f() -> RatVec {
        fvec(&[(1, 2), (1, 2)])
    }

    #[test]
    fn slab_cut_coefficients() {
        let cols = vec![ivec(&[1, 0]), ivec(&[-1, 0]), ivec(&[0, 1])];
        // oracle: three independent gauge evaluations
        let expect: Vec<Rat> = cols.iter().map(|r| crate::gauge::gauge(&slab(), &f(), r).unwrap()).collect();
        let cut = intersection_cut(&slab(), &cols, &f()).unwrap();
        assert_eq!(cut.coeffs, expect);
        assert_eq!(cut.coeffs, vec![int(2), int(2), int(0)]);
        assert!(!cut.trivial);
    }

    #[test]
    fn outside_gives_trivial_cut() {
        let cut = intersection_cut(&square(), &[ivec(&[1, 0])], &ivec(&[2, 2])).unwrap();
        assert!(cut.trivial);
        assert!(cut.member(&[int(0)]));
    }

    #[test]
    fn square_diagonal() {
        let cut = intersection_cut(&square(), &[ivec(&[1, 1])], &f()).unwrap();
        assert_eq!(cut.coeffs, vec![int(2)]);
    }

    #[test]
    fn closure_semantics() {
        let sys = closure(&[slab()], &[ivec(&[0, 1])], &f()).unwrap();
        for s in [int(0), int(1), int(1000)] {
            assert!(!cut_point_member(&sys, &[s]));
        }
        let empty = closure(&[], &[ivec(&[1, 0])], &f()).unwrap();
        assert!(cut_point_member(&empty, &[int(0)]));
        let sq = closure(&[square()], &[ivec(&[1, 0]), ivec(&[0, 1])], &f()).unwrap();
        let c1 = sq.cuts[0].coeffs[0].clone();
        assert!(cut_point_member(&sq, &[Rat::one() / c1, int(0)]));
        assert!(!cut_point_member(&sq, &[frac(1, 4), int(0)]));
    }

    #[test]
    fn dominance() {
        assert!(cut_dominates(&slab(), &square(), &f()).unwrap());
        assert!(!cut_dominates(&square(), &slab(), &f()).unwrap());
        assert!(cut_dominates(&square(), &square(), &f()).unwrap());
        assert_eq!(cut_dominates(&square(), &slab(), &ivec(&[0, 0])), Err(CutError::PointNotInterior));
    }
}
