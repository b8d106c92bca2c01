use crate::ConstructionError;
use latcut_geometry::linalg::null_space;
use latcut_geometry::lp::{simplex_standard, LpOutcome};
use latcut_geometry::rat::{add, dot, primitive, scale, sub, Rat, RatVec};
use latcut_geometry::{minkowski_scale_shift, vrep_to_hrep, Polyhedron};
use num_traits::{One, Signed, Zero};

/// `conv(M ∪ M')` with `M' = (1+α)M + p` in a parallel hyperplane.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedCone {
    pub base: Polyhedron,
    pub alpha: Rat,
    pub shift: RatVec,
    pub hull: Polyhedron,
    normal: RatVec,
    level: Rat,
}

impl TruncatedCone {
    /// `base` must span a hyperplane.
    pub fn new(base: Polyhedron, alpha: Rat, shift: RatVec) -> Result<Self, ConstructionError> {
        let n = base.dim;
        if alpha.is_negative() || shift.len() != n {
            return Err(ConstructionError::InvalidParameter("alpha must be nonnegative and shift must match the dimension"));
        }
        let v0 = &base.vertices[0];
        let dirs: Vec<RatVec> =
            base.vertices[1..].iter().map(|v| sub(v, v0)).chain(base.rays.iter().cloned()).collect();
        let normals = null_space(&dirs, n);
        if normals.len() != 1 {
            return Err(ConstructionError::DegenerateBase);
        }
        let normal = primitive(&normals[0]);
        let level = dot(&normal, v0);
        if (&alpha * &level + dot(&normal, &shift)).is_zero() {
            return Err(ConstructionError::DegenerateBase);
        }
        let top = minkowski_scale_shift(&base, &(Rat::one() + &alpha), &shift)?;
        let verts: Vec<RatVec> = base.vertices.iter().chain(&top.vertices).cloned().collect();
        let rays: Vec<RatVec> = base.rays.iter().chain(&top.rays).cloned().collect();
        let hull = vrep_to_hrep(&verts, &rays, n)?;
        Ok(TruncatedCone { base, alpha, shift, hull, normal, level })
    }

    /// `(1+μα)M + μp`
    pub fn layer(&self, mu: &Rat) -> Result<Polyhedron, ConstructionError> {
        let factor = Rat::one() + mu * &self.alpha;
        Ok(minkowski_scale_shift(&self.base, &factor, &scale(mu, &self.shift))?)
    }

    pub fn top(&self) -> Result<Polyhedron, ConstructionError> {
        self.layer(&Rat::one())
    }

    /// The unique `(μ, x)` with `f = (1+μα)x + μp`, read off the coordinate
    /// transverse to the base.
    pub fn decompose(&self, f: &[Rat]) -> Result<(Rat, RatVec), ConstructionError> {
        let denom = &self.alpha * &self.level + dot(&self.normal, &self.shift);
        let mu = (dot(&self.normal, f) - &self.level) / denom;
        if mu.is_negative() || mu > Rat::one() {
            return Err(ConstructionError::PointOutside);
        }
        let x = scale(&(Rat::one() / (Rat::one() + &mu * &self.alpha)), &sub(f, &scale(&mu, &self.shift)));
        if !self.base.contains_point(&x) {
            return Err(ConstructionError::PointOutside);
        }
        Ok((mu, x))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShrinkResult {
    /// `conv({x} ∪ M')`
    pub polytope: Polyhedron,
    pub mu: Rat,
    pub x: RatVec,
}

/// `conv({x} ∪ M')`, which lies between `(1/4)P + (3/4)f` and `P` when `μ ≥ 1/3`.
pub fn truncated_cone_shrink(t: &TruncatedCone, f: &[Rat]) -> Result<ShrinkResult, ConstructionError> {
    let (mu, x) = t.decompose(f)?;
    if mu < Rat::new(1.into(), 3.into()) {
        return Err(ConstructionError::MuTooSmall(mu));
    }
    let top = t.top()?;
    let mut verts = top.vertices.clone();
    verts.push(x.clone());
    let polytope = vrep_to_hrep(&verts, &top.rays, t.base.dim)?;
    Ok(ShrinkResult { polytope, mu, x })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FacetSubsetResult {
    /// Indices into the facet list, increasing.
    pub indices: Vec<usize>,
    /// Convex weights on the chosen normals summing them to zero.
    pub weights: RatVec,
    pub simplex_dim: usize,
    pub lineality_dim: usize,
}

/// Affinely independent normals with the origin in their convex hull.
pub fn caratheodory_subset(normals: &[RatVec]) -> Result<(Vec<usize>, RatVec), ConstructionError> {
    let m = normals.len();
    if m == 0 {
        return Err(ConstructionError::NotLatticeFreeInput);
    }
    let d = normals[0].len();
    let mut rows: Vec<RatVec> = (0..d).map(|k| normals.iter().map(|a| a[k].clone()).collect()).collect();
    rows.push(vec![Rat::one(); m]);
    let mut rhs = vec![Rat::zero(); d];
    rhs.push(Rat::one());
    let lambda = match simplex_standard(&rows, &rhs, &vec![Rat::zero(); m]) {
        LpOutcome::Optimal(s) => s.argopt,
        _ => return Err(ConstructionError::NotLatticeFreeInput),
    };
    let mut support: Vec<(usize, Rat)> =
        lambda.into_iter().enumerate().filter(|(_, l)| l.is_positive()).collect();
    loop {
        let mut lifted: Vec<RatVec> =
            (0..d).map(|k| support.iter().map(|(i, _)| normals[*i][k].clone()).collect()).collect();
        lifted.push(vec![Rat::one(); support.len()]);
        let kernel = null_space(&lifted, support.len());
        let Some(mut mu) = kernel.into_iter().next() else { break };
        if !mu.iter().any(|x| x.is_positive()) {
            mu = mu.iter().map(|x| -x).collect();
        }
        let theta = support
            .iter()
            .zip(&mu)
            .filter(|(_, m)| m.is_positive())
            .map(|((_, l), m)| l / m)
            .min()
            .expect("a positive entry");
        for ((_, l), m) in support.iter_mut().zip(&mu) {
            *l -= &theta * m;
        }
        support.retain(|(_, l)| l.is_positive());
    }
    Ok(support.into_iter().unzip())
}

/// Caratheodory subset of the facet normals of a full-dimensional lattice-free `M`.
pub fn caratheodory_facet_subset(m: &Polyhedron) -> Result<FacetSubsetResult, ConstructionError> {
    if !m.fulldim {
        return Err(ConstructionError::InvalidParameter("polyhedron must be full-dimensional"));
    }
    let normals: Vec<RatVec> = m.hrep.iter().map(|h| h.normal.clone()).collect();
    let (indices, weights) = caratheodory_subset(&normals)?;
    let k = indices.len();
    Ok(FacetSubsetResult { simplex_dim: k - 1, lineality_dim: m.dim + 1 - k, indices, weights })
}

/// Sum of `weights[i]·normals[indices[i]]`.
pub fn weighted_sum(normals: &[RatVec], indices: &[usize], weights: &[Rat]) -> RatVec {
    let d = normals[indices[0]].len();
    indices.iter().zip(weights).fold(vec![Rat::zero(); d], |acc, (&i, w)| add(&acc, &scale(w, &normals[i])))
}
