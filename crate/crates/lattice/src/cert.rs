use crate::enumerate::{box_points, lattice_points_in, recession_is_subspace};
use crate::LatticeError;
use latcut_geometry::rat::{ceil, dot, floor, Rat, RatVec};
use latcut_geometry::{dd_convert, HalfSpace, Polyhedron};
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LatticeStatus {
    LatticeFree,
    NotLatticeFree { witness: RatVec },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Maximality {
    /// One integer point per facet, in the order of `hrep`.
    Yes { facet_witnesses: Vec<RatVec> },
    No { facet: Option<usize>, reason: String },
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeFreeCert {
    pub status: LatticeStatus,
    pub maximal: Maximality,
}

impl LatticeFreeCert {
    pub fn is_lattice_free(&self) -> bool {
        self.status == LatticeStatus::LatticeFree
    }
    pub fn is_maximal(&self) -> bool {
        matches!(self.maximal, Maximality::Yes { .. })
    }
}

/// Index of the facet `z` lies on, provided it is strictly inside all others.
pub fn relint_facet(p: &Polyhedron, z: &[Rat]) -> Option<usize> {
    let mut on = None;
    for (i, h) in p.hrep.iter().enumerate() {
        let s = h.slack(z);
        if s.is_zero() {
            if on.is_some() {
                return None;
            }
            on = Some(i);
        } else if s.is_positive() {
            return None;
        }
    }
    on
}

pub fn check_lattice_free(p: &Polyhedron) -> Result<LatticeFreeCert, LatticeError> {
    if !p.fulldim {
        return Err(LatticeError::NotFullDimensional);
    }
    if !recession_is_subspace(p) {
        return Err(LatticeError::UnsupportedShape);
    }
    let pts = lattice_points_in(p, false)?;
    if let Some(w) = pts.iter().find(|z| p.interior_contains(z)) {
        return Ok(LatticeFreeCert {
            status: LatticeStatus::NotLatticeFree { witness: w.clone() },
            maximal: Maximality::No { facet: None, reason: "interior contains an integer point".into() },
        });
    }
    let mut witnesses: Vec<Option<RatVec>> = vec![None; p.hrep.len()];
    for z in &pts {
        if let Some(i) = relint_facet(p, z) {
            if witnesses[i].is_none() {
                witnesses[i] = Some(z.clone());
            }
        }
    }
    let maximal = match witnesses.iter().position(Option::is_none) {
        Some(i) => Maximality::No {
            facet: Some(i),
            reason: format!("facet {i} has no integer point in its relative interior"),
        },
        None => Maximality::Yes { facet_witnesses: witnesses.into_iter().map(Option::unwrap).collect() },
    };
    Ok(LatticeFreeCert { status: LatticeStatus::LatticeFree, maximal })
}

/// Re-checks a certificate against the polyhedron it was issued for.
pub fn verify_cert(p: &Polyhedron, cert: &LatticeFreeCert) -> bool {
    match &cert.status {
        LatticeStatus::NotLatticeFree { witness } => {
            return witness.iter().all(|x| x.is_integer()) && p.interior_contains(witness);
        }
        LatticeStatus::LatticeFree => {}
    }
    match &cert.maximal {
        Maximality::Yes { facet_witnesses } => {
            facet_witnesses.len() == p.hrep.len()
                && facet_witnesses
                    .iter()
                    .enumerate()
                    .all(|(i, z)| z.iter().all(|x| x.is_integer()) && relint_facet(p, z) == Some(i))
        }
        _ => true,
    }
}

/// Least offset `b*` to which facet `i` can be pushed while keeping the
/// interior free of integer points; `None` when it can be dropped entirely.
fn relaxed_offset(p: &Polyhedron, i: usize) -> Result<Option<Rat>, LatticeError> {
    let n = p.dim;
    let fi = &p.hrep[i];
    // Integer points strictly inside the other facets, on or beyond facet i.
    // For integer normals `a·z < b` is `a·z <= ceil(b) - 1`.
    let mut hs: Vec<HalfSpace> = Vec::new();
    for (j, h) in p.hrep.iter().enumerate() {
        if j != i {
            let b = Rat::from_integer(ceil(&h.offset)) - Rat::one();
            hs.push(HalfSpace::new(h.normal.clone(), b)?);
        }
    }
    hs.push(HalfSpace::new(fi.normal.iter().map(|x| -x).collect(), -Rat::from_integer(ceil(&fi.offset)))?);
    let region = match dd_convert(&hs, n) {
        Ok(r) => r,
        Err(latcut_geometry::GeomError::EmptySet) => return Ok(None),
        Err(e) => return Err(e.into()),
    };
    if region.rays.iter().any(|w| !dot(&fi.normal, w).is_positive()) {
        return Err(LatticeError::UnsupportedShape);
    }
    // A minimizer never needs a full step along any ray, so it lies in
    // conv(vertices) + sum of [0,1) multiples of the rays.
    let mut corners = region.vertices.clone();
    for w in &region.rays {
        let shifted: Vec<RatVec> = corners.iter().map(|c| latcut_geometry::rat::add(c, w)).collect();
        corners.extend(shifted);
    }
    let best = box_points(&corners)?
        .into_iter()
        .filter(|z| region.contains_point(z))
        .map(|z| dot(&fi.normal, &z))
        .min();
    Ok(best)
}

/// Smallest split `{k <= u·x <= k+1}` containing an unbounded lattice-free
/// planar set.
fn enclosing_split(p: &Polyhedron) -> Result<Polyhedron, LatticeError> {
    let w = &p.rays[0];
    if p.rays.iter().any(|r| !(w[0].clone() * &r[1] - &w[1] * &r[0]).is_zero()) {
        return Err(LatticeError::NotLatticeFree);
    }
    let u = latcut_geometry::rat::primitive(&[-w[1].clone(), w[0].clone()]);
    let lo = p.vertices.iter().map(|v| dot(&u, v)).min().unwrap();
    let k = Rat::from_integer(floor(&lo));
    let hs = vec![
        HalfSpace::new(u.clone(), &k + Rat::one())?,
        HalfSpace::new(u.iter().map(|x| -x).collect(), -k)?,
    ];
    Ok(dd_convert(&hs, 2)?)
}

/// Grows a lattice-free set in dimension 1 or 2 to a maximal one.
pub fn maximalize(p: &Polyhedron) -> Result<Polyhedron, LatticeError> {
    if p.dim >= 3 {
        return Err(LatticeError::UnsupportedDimension(p.dim));
    }
    if !p.fulldim {
        return Err(LatticeError::NotFullDimensional);
    }
    if p.dim == 1 {
        if !p.rays.is_empty() {
            return Err(LatticeError::NotLatticeFree);
        }
        let lo = p.vertices.iter().map(|v| v[0].clone()).min().unwrap();
        let k = Rat::from_integer(floor(&lo));
        let m = Polyhedron::from_inequalities(&[(vec![Rat::one()], &k + Rat::one()), (vec![-Rat::one()], -k)])?;
        if !latcut_geometry::contains(&m, p) {
            return Err(LatticeError::NotLatticeFree);
        }
        return Ok(m);
    }
    let mut cur = p.clone();
    loop {
        if !cur.rays.is_empty() {
            let split = enclosing_split(&cur)?;
            if !latcut_geometry::contains(&split, &cur) {
                return Err(LatticeError::NotLatticeFree);
            }
            return Ok(split);
        }
        let cert = check_lattice_free(&cur)?;
        if !cert.is_lattice_free() {
            return Err(LatticeError::NotLatticeFree);
        }
        let i = match cert.maximal {
            Maximality::No { facet: Some(i), .. } => i,
            _ => return Ok(cur),
        };
        let mut hs = cur.hrep.clone();
        match relaxed_offset(&cur, i)? {
            Some(b) => hs[i] = HalfSpace::new(hs[i].normal.clone(), b)?,
            None => {
                hs.remove(i);
            }
        }
        cur = dd_convert(&hs, 2)?;
    }
}
