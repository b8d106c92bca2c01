//! Polyhedra kept in both H- and V-representation.

use crate::dd::cone_generators;
use crate::error::GeomError;
use crate::linalg::{canonical_basis, orthogonal_basis, project_out, rank};
use crate::rat::{dot, is_zero_vec, neg, primitive, primitive_scale, Rat, RatVec};
use num_traits::{One, Signed, Zero};

/// The inequality `normal · x ≤ offset`, stored with a primitive integer normal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfSpace {
    pub normal: RatVec,
    pub offset: Rat,
}

impl HalfSpace {
    pub fn new(normal: RatVec, offset: Rat) -> Result<Self, GeomError> {
        if is_zero_vec(&normal) {
            return Err(GeomError::ZeroNormal);
        }
        let (normal, f) = primitive_scale(&normal);
        Ok(HalfSpace { normal, offset: offset * f })
    }

    pub fn dim(&self) -> usize {
        self.normal.len()
    }

    /// `normal·x - offset`; nonpositive inside.
    pub fn slack(&self, x: &[Rat]) -> Rat {
        dot(&self.normal, x) - &self.offset
    }

    pub fn contains(&self, x: &[Rat]) -> bool {
        !self.slack(x).is_positive()
    }

    pub fn contains_strictly(&self, x: &[Rat]) -> bool {
        self.slack(x).is_negative()
    }

    pub fn is_recession(&self, w: &[Rat]) -> bool {
        !dot(&self.normal, w).is_positive()
    }

    pub fn negated(&self) -> HalfSpace {
        HalfSpace { normal: neg(&self.normal), offset: -self.offset.clone() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polyhedron {
    pub dim: usize,
    pub hrep: Vec<HalfSpace>,
    pub vertices: Vec<RatVec>,
    pub rays: Vec<RatVec>,
    pub fulldim: bool,
}

fn homog_point(v: &[Rat]) -> RatVec {
    let mut g = v.to_vec();
    g.push(Rat::one());
    g
}

fn homog_dir(w: &[Rat]) -> RatVec {
    let mut g = w.to_vec();
    g.push(Rat::zero());
    g
}

fn push_unique<T: PartialEq>(v: &mut Vec<T>, x: T) {
    if !v.contains(&x) {
        v.push(x);
    }
}

/// H-representation to full double description.
pub fn dd_convert(hrep: &[HalfSpace], dim: usize) -> Result<Polyhedron, GeomError> {
    if hrep.is_empty() {
        return Err(GeomError::WholeSpace);
    }
    for h in hrep {
        if h.dim() != dim {
            return Err(GeomError::DimensionMismatch { expected: dim, found: h.dim() });
        }
    }
    let mut rows: Vec<RatVec> = hrep
        .iter()
        .map(|h| {
            let mut r = h.normal.clone();
            r.push(-h.offset.clone());
            r
        })
        .collect();
    let mut t_row = vec![Rat::zero(); dim + 1];
    t_row[dim] = -Rat::one();
    rows.push(t_row);
    let gens = cone_generators(&rows, dim + 1);

    let lin_x: Vec<RatVec> = gens.lineality.iter().map(|l| l[..dim].to_vec()).collect();
    let lin_basis = canonical_basis(&lin_x);
    let orth = orthogonal_basis(&lin_basis);

    let mut vertices: Vec<RatVec> = Vec::new();
    let mut pointed: Vec<RatVec> = Vec::new();
    for g in &gens.rays {
        let t = &g[dim];
        if t.is_positive() {
            let x: RatVec = g[..dim].iter().map(|c| c / t).collect();
            push_unique(&mut vertices, project_out(&x, &orth));
        } else {
            let w = primitive(&project_out(&g[..dim], &orth));
            if !is_zero_vec(&w) {
                push_unique(&mut pointed, w);
            }
        }
    }
    if vertices.is_empty() {
        return Err(GeomError::EmptySet);
    }

    // Tightness against every generator decides equalities and facets.
    let gens_h: Vec<RatVec> = vertices
        .iter()
        .map(|v| homog_point(v))
        .chain(pointed.iter().map(|w| homog_dir(w)))
        .collect();
    let lin_h: Vec<RatVec> = lin_basis.iter().map(|l| homog_dir(l)).collect();
    let tight: Vec<Vec<bool>> = hrep
        .iter()
        .zip(&rows)
        .map(|(_, row)| gens_h.iter().map(|g| dot(row, g).is_zero()).collect())
        .collect();

    let mut eq_rows: Vec<RatVec> = Vec::new();
    let mut out: Vec<HalfSpace> = Vec::new();
    for (i, h) in hrep.iter().enumerate() {
        if tight[i].iter().all(|&b| b) {
            let mut trial = eq_rows.clone();
            trial.push(rows[i].clone());
            if rank(&trial) > eq_rows.len() {
                eq_rows.push(rows[i].clone());
                push_unique(&mut out, h.clone());
                push_unique(&mut out, HalfSpace::new(neg(&h.normal), -h.offset.clone())?);
            }
        }
    }
    let fulldim = eq_rows.is_empty();
    let cone_dim = dim + 1 - eq_rows.len();
    let mut seen_tight: Vec<&Vec<bool>> = Vec::new();
    for (i, h) in hrep.iter().enumerate() {
        if tight[i].iter().all(|&b| b) {
            continue;
        }
        let mut face: Vec<RatVec> = lin_h.clone();
        face.extend(gens_h.iter().zip(&tight[i]).filter(|(_, &t)| t).map(|(g, _)| g.clone()));
        if rank(&face) + 1 != cone_dim {
            continue;
        }
        if seen_tight.contains(&&tight[i]) {
            continue;
        }
        seen_tight.push(&tight[i]);
        push_unique(&mut out, h.clone());
    }

    let mut rays = pointed;
    for l in &lin_basis {
        rays.push(l.clone());
        rays.push(neg(l));
    }
    Ok(Polyhedron { dim, hrep: out, vertices, rays, fulldim })
}

/// V-representation (points + directions) to full double description.
pub fn vrep_to_hrep(vertices: &[RatVec], rays: &[RatVec], dim: usize) -> Result<Polyhedron, GeomError> {
    if vertices.is_empty() {
        return Err(GeomError::EmptySet);
    }
    for v in vertices.iter().chain(rays) {
        if v.len() != dim {
            return Err(GeomError::DimensionMismatch { expected: dim, found: v.len() });
        }
    }
    let rows: Vec<RatVec> = vertices
        .iter()
        .map(|v| homog_point(v))
        .chain(rays.iter().filter(|w| !is_zero_vec(w)).map(|w| homog_dir(w)))
        .collect();
    let dual = cone_generators(&rows, dim + 1);
    let mut hs: Vec<HalfSpace> = Vec::new();
    let to_hs = |y: &RatVec| -> Option<HalfSpace> {
        let a = y[..dim].to_vec();
        if is_zero_vec(&a) {
            None
        } else {
            HalfSpace::new(a, -y[dim].clone()).ok()
        }
    };
    for y in &dual.lineality {
        if let Some(h) = to_hs(y) {
            hs.push(h.negated());
            hs.push(h);
        }
    }
    for y in &dual.rays {
        if let Some(h) = to_hs(y) {
            push_unique(&mut hs, h);
        }
    }
    dd_convert(&hs, dim)
}

impl Polyhedron {
    pub fn from_hrep(hrep: Vec<HalfSpace>, dim: usize) -> Result<Self, GeomError> {
        dd_convert(&hrep, dim)
    }

    pub fn from_vrep(vertices: Vec<RatVec>, rays: Vec<RatVec>, dim: usize) -> Result<Self, GeomError> {
        vrep_to_hrep(&vertices, &rays, dim)
    }

    /// Convenience: builds from `(normal, offset)` pairs.
    pub fn from_inequalities(ineqs: &[(RatVec, Rat)]) -> Result<Self, GeomError> {
        let dim = ineqs.first().map(|(a, _)| a.len()).ok_or(GeomError::WholeSpace)?;
        let hs = ineqs
            .iter()
            .map(|(a, b)| HalfSpace::new(a.clone(), b.clone()))
            .collect::<Result<Vec<_>, _>>()?;
        dd_convert(&hs, dim)
    }

    pub fn n_facets(&self) -> usize {
        self.hrep.len()
    }

    pub fn is_bounded(&self) -> bool {
        self.rays.is_empty()
    }

    /// Basis of the lineality space (directions `w` with `-w` also a ray).
    pub fn lineality(&self) -> Vec<RatVec> {
        let lines: Vec<RatVec> = self
            .rays
            .iter()
            .filter(|w| self.rays.contains(&neg(w)))
            .cloned()
            .collect();
        canonical_basis(&lines)
    }

    pub fn contains_point(&self, x: &[Rat]) -> bool {
        self.hrep.iter().all(|h| h.contains(x))
    }

    /// Strict interior membership; false for lower-dimensional sets.
    pub fn interior_contains(&self, x: &[Rat]) -> bool {
        self.fulldim && self.hrep.iter().all(|h| h.contains_strictly(x))
    }

    pub fn has_recession(&self, w: &[Rat]) -> bool {
        self.hrep.iter().all(|h| h.is_recession(w))
    }

    /// Sum of vertices divided by their count; an interior point for
    /// full-dimensional polytopes.
    pub fn vertex_centroid(&self) -> RatVec {
        let k = Rat::from_integer(self.vertices.len().into());
        let mut c = vec![Rat::zero(); self.dim];
        for v in &self.vertices {
            for (ci, vi) in c.iter_mut().zip(v) {
                *ci += vi;
            }
        }
        c.iter().map(|x| x / &k).collect()
    }

    /// A point in the relative interior: vertex centroid plus the ray sum.
    pub fn relative_interior_point(&self) -> RatVec {
        let mut c = self.vertex_centroid();
        for w in &self.rays {
            for (ci, wi) in c.iter_mut().zip(w) {
                *ci += wi;
            }
        }
        c
    }

    /// Intersection with further half-spaces.
    pub fn intersect_halfspaces(&self, extra: &[HalfSpace]) -> Result<Polyhedron, GeomError> {
        let mut hs = self.hrep.clone();
        hs.extend_from_slice(extra);
        dd_convert(&hs, self.dim)
    }

    pub fn intersect(&self, other: &Polyhedron) -> Result<Polyhedron, GeomError> {
        if self.dim != other.dim {
            return Err(GeomError::DimensionMismatch { expected: self.dim, found: other.dim });
        }
        self.intersect_halfspaces(&other.hrep)
    }

    /// Convex hull of the union.
    pub fn hull_with(&self, other: &Polyhedron) -> Result<Polyhedron, GeomError> {
        if self.dim != other.dim {
            return Err(GeomError::DimensionMismatch { expected: self.dim, found: other.dim });
        }
        let mut v = self.vertices.clone();
        v.extend(other.vertices.iter().cloned());
        let mut r = self.rays.clone();
        r.extend(other.rays.iter().cloned());
        vrep_to_hrep(&v, &r, self.dim)
    }

    /// The same set with its half-space list in a canonical order.
    pub fn sorted(&self) -> Polyhedron {
        let mut p = self.clone();
        p.hrep.sort();
        p.vertices.sort();
        p.rays.sort();
        p
    }

    /// Set equality via mutual containment.
    pub fn same_set(&self, other: &Polyhedron) -> bool {
        contains(self, other) && contains(other, self)
    }

    /// Checks that every generator satisfies every half-space.
    pub fn is_consistent(&self) -> bool {
        self.vertices.iter().all(|v| self.contains_point(v))
            && self.rays.iter().all(|w| self.has_recession(w))
    }
}

/// `Q ⊆ P`, decided on the V-representation of `Q`.
pub fn contains(p: &Polyhedron, q: &Polyhedron) -> bool {
    p.dim == q.dim
        && q.vertices.iter().all(|v| p.contains_point(v))
        && q.rays.iter().all(|w| p.has_recession(w))
}

/// `P° = {r : v·r ≤ 1 for vertices v, w·r ≤ 0 for rays w}`.
pub fn polar(p: &Polyhedron) -> Result<Polyhedron, GeomError> {
    let origin = vec![Rat::zero(); p.dim];
    if !p.interior_contains(&origin) {
        return Err(GeomError::OriginNotInterior);
    }
    let mut hs = Vec::new();
    for v in &p.vertices {
        if !is_zero_vec(v) {
            push_unique(&mut hs, HalfSpace::new(v.clone(), Rat::one())?);
        }
    }
    for w in &p.rays {
        push_unique(&mut hs, HalfSpace::new(w.clone(), Rat::zero())?);
    }
    dd_convert(&hs, p.dim)
}
