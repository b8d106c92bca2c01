//! Affine images of polyhedra.

use crate::error::GeomError;
use crate::linalg::{determinant, inverse, mat_vec, transpose};
use crate::polyhedron::{HalfSpace, Polyhedron};
use crate::rat::{add, dot, primitive, Rat, RatVec};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// `x ↦ M x + shift` with integer `M`, `|det M| = 1`, integer shift.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnimodularMap {
    pub matrix: Vec<RatVec>,
    pub shift: RatVec,
}

impl UnimodularMap {
    pub fn new(matrix: Vec<RatVec>, shift: RatVec) -> Result<Self, GeomError> {
        let n = matrix.len();
        if shift.len() != n || matrix.iter().any(|r| r.len() != n) {
            return Err(GeomError::DimensionMismatch { expected: n, found: shift.len() });
        }
        let integral = matrix.iter().flatten().chain(&shift).all(|x| x.is_integer());
        if !integral || determinant(&matrix).abs() != Rat::one() {
            return Err(GeomError::NotUnimodular);
        }
        Ok(UnimodularMap { matrix, shift })
    }

    pub fn from_ints(matrix: &[Vec<i64>], shift: &[i64]) -> Result<Self, GeomError> {
        let m = matrix.iter().map(|r| crate::rat::ivec(r)).collect();
        Self::new(m, crate::rat::ivec(shift))
    }

    pub fn identity(n: usize) -> Self {
        UnimodularMap { matrix: crate::linalg::identity(n), shift: vec![Rat::zero(); n] }
    }

    pub fn dim(&self) -> usize {
        self.shift.len()
    }

    pub fn apply(&self, x: &[Rat]) -> RatVec {
        add(&mat_vec(&self.matrix, x), &self.shift)
    }

    pub fn apply_linear(&self, w: &[Rat]) -> RatVec {
        mat_vec(&self.matrix, w)
    }

    pub fn inverse(&self) -> UnimodularMap {
        let inv = inverse(&self.matrix).expect("unimodular matrix is invertible");
        let shift = mat_vec(&inv, &self.shift).iter().map(|x| -x).collect();
        UnimodularMap { matrix: inv, shift }
    }

    /// `self ∘ other`
    pub fn compose(&self, other: &UnimodularMap) -> UnimodularMap {
        let cols = transpose(&other.matrix);
        let prod_t: Vec<RatVec> = cols.iter().map(|c| mat_vec(&self.matrix, c)).collect();
        UnimodularMap { matrix: transpose(&prod_t), shift: self.apply(&other.shift) }
    }

    pub fn integer_matrix(&self) -> Vec<Vec<BigInt>> {
        self.matrix.iter().map(|r| r.iter().map(|x| x.to_integer()).collect()).collect()
    }
}

/// Image of `p` under `x ↦ M x + shift` for invertible rational `M`.
/// Facets map one-to-one, so no re-conversion is needed.
pub fn affine_image(p: &Polyhedron, m: &[RatVec], shift: &[Rat]) -> Result<Polyhedron, GeomError> {
    let inv = inverse(m).ok_or(GeomError::NotUnimodular)?;
    let inv_t = transpose(&inv);
    let hrep = p
        .hrep
        .iter()
        .map(|h| {
            let a = mat_vec(&inv_t, &h.normal);
            let b = &h.offset + dot(&a, shift);
            HalfSpace::new(a, b)
        })
        .collect::<Result<Vec<_>, _>>()?;
    let vertices = p.vertices.iter().map(|v| add(&mat_vec(m, v), shift)).collect();
    let rays = p.rays.iter().map(|w| primitive(&mat_vec(m, w))).collect();
    Ok(Polyhedron { dim: p.dim, hrep, vertices, rays, fulldim: p.fulldim })
}

pub fn transform(p: &Polyhedron, t: &UnimodularMap) -> Result<Polyhedron, GeomError> {
    if t.dim() != p.dim {
        return Err(GeomError::DimensionMismatch { expected: p.dim, found: t.dim() });
    }
    affine_image(p, &t.matrix, &t.shift)
}

/// `λ P + v`
pub fn minkowski_scale_shift(p: &Polyhedron, lambda: &Rat, v: &[Rat]) -> Result<Polyhedron, GeomError> {
    if !lambda.is_positive() {
        return Err(GeomError::NonPositiveFactor);
    }
    if v.len() != p.dim {
        return Err(GeomError::DimensionMismatch { expected: p.dim, found: v.len() });
    }
    let hrep = p
        .hrep
        .iter()
        .map(|h| HalfSpace { normal: h.normal.clone(), offset: lambda * &h.offset + dot(&h.normal, v) })
        .collect();
    let vertices = p
        .vertices
        .iter()
        .map(|x| x.iter().zip(v).map(|(a, b)| lambda * a + b).collect())
        .collect();
    Ok(Polyhedron { dim: p.dim, hrep, vertices, rays: p.rays.clone(), fulldim: p.fulldim })
}

/// `factor (P - center) + center`
pub fn homothety(p: &Polyhedron, center: &[Rat], factor: &Rat) -> Result<Polyhedron, GeomError> {
    let shift: RatVec = center.iter().map(|c| (Rat::one() - factor) * c).collect();
    minkowski_scale_shift(p, factor, &shift)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyhedron::{contains, dd_convert, vrep_to_hrep};
    use crate::rat::{frac, fvec, int, ivec};

    fn unit_square() -> Polyhedron {
        vrep_to_hrep(&[ivec(&[0, 0]), ivec(&[1, 0]), ivec(&[0, 1]), ivec(&[1, 1])], &[], 2).unwrap()
    }

    #[test]
    fn homothety_square() {
        let h = homothety(&unit_square(), &fvec(&[(1, 2), (1, 2)]), &frac(1, 2)).unwrap();
        let expect = vrep_to_hrep(
            &[fvec(&[(1, 4), (1, 4)]), fvec(&[(3, 4), (1, 4)]), fvec(&[(1, 4), (3, 4)]), fvec(&[(3, 4), (3, 4)])],
            &[],
            2,
        )
        .unwrap();
        assert!(h.same_set(&expect));
        assert_eq!(h.sorted(), dd_convert(&h.hrep, 2).unwrap().sorted());
        let same = homothety(&unit_square(), &fvec(&[(1, 3), (2, 5)]), &int(1)).unwrap();
        assert_eq!(same, unit_square());
        assert_eq!(homothety(&unit_square(), &ivec(&[0, 0]), &int(0)), Err(GeomError::NonPositiveFactor));
    }

    #[test]
    fn shear_roundtrip() {
        let slab = dd_convert(&[HalfSpace::new(ivec(&[-1, 0]), int(0)).unwrap(), HalfSpace::new(ivec(&[1, 0]), int(1)).unwrap()], 2).unwrap();
        let u = UnimodularMap::from_ints(&[vec![1, 1], vec![0, 1]], &[0, 0]).unwrap();
        let img = transform(&slab, &u).unwrap();
        assert!(img.is_consistent());
        assert_eq!(img.n_facets(), 2);
        let back = transform(&img, &u.inverse()).unwrap();
        assert!(back.same_set(&slab));
        assert!(UnimodularMap::from_ints(&[vec![2, 0], vec![0, 1]], &[0, 0]).is_err());
    }

    #[test]
    fn compose_and_inverse() {
        let u = UnimodularMap::from_ints(&[vec![2, 1], vec![1, 1]], &[3, -1]).unwrap();
        let x = fvec(&[(1, 3), (-2, 7)]);
        assert_eq!(u.inverse().apply(&u.apply(&x)), x);
        assert_eq!(u.compose(&u.inverse()).apply(&x), x);
        let sq = unit_square();
        assert!(contains(&transform(&sq, &u).unwrap(), &transform(&homothety(&sq, &fvec(&[(1, 2), (1, 2)]), &frac(1, 2)).unwrap(), &u).unwrap()));
    }
}
