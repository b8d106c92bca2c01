use crate::rho::{rho_f, StrengthValue};
use crate::StrengthError;
use latcut_cuts::gauge::{gauge_with, shifted_offsets};
use latcut_geometry::lp::{simplex_ineq, LpOutcome};
use latcut_geometry::rat::{add, scale, sub, Rat, RatVec};
use latcut_geometry::{contains, homothety, vrep_to_hrep, Polyhedron};
use num_traits::{One, Zero};
use rayon::prelude::*;

/// Minimum of `ρ_f(B, L)` over the family, with the index of the first
/// member attaining it. An empty family gives `Infinite`.
pub fn rho_family_upper(
    family: &[Polyhedron],
    l: &Polyhedron,
    f: &[Rat],
) -> Result<(StrengthValue, Option<usize>), StrengthError> {
    let values = family
        .par_iter()
        .map(|b| rho_f(b, l, f).map(|r| r.value))
        .collect::<Result<Vec<_>, _>>()?;
    let mut best: (StrengthValue, Option<usize>) = (StrengthValue::Infinite, None);
    for (i, v) in values.into_iter().enumerate() {
        if best.1.is_none() || v < best.0 {
            best = (v, Some(i));
        }
    }
    Ok(best)
}

/// A lower bound on the strength of the whole family, certified by one
/// point `point` of the family's cut closure on the columns `columns`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LowerWitness {
    pub bound: StrengthValue,
    pub columns: Vec<RatVec>,
    pub point: RatVec,
}

/// Takes the columns to be the vertices of `L - f` followed by the rays of
/// `L`, and finds the closure point minimizing the left-hand side of the
/// cut from `L`. Its reciprocal bounds the family strength from below.
pub fn rho_family_lower_witness(
    family: &[Polyhedron],
    l: &Polyhedron,
    f: &[Rat],
) -> Result<LowerWitness, StrengthError> {
    if f.len() != l.dim || family.iter().any(|b| b.dim != l.dim) {
        return Err(StrengthError::DimensionMismatch);
    }
    if !l.interior_contains(f) {
        return Ok(LowerWitness { bound: StrengthValue::Zero, columns: Vec::new(), point: Vec::new() });
    }
    let columns: Vec<RatVec> = l.vertices.iter().map(|v| sub(v, f)).chain(l.rays.iter().cloned()).collect();
    let k = columns.len();
    let l_off = shifted_offsets(l, f)?;
    let l_coeffs: RatVec = columns.iter().map(|r| gauge_with(l, &l_off, r)).collect();

    let mut a: Vec<RatVec> = (0..k)
        .map(|i| (0..k).map(|j| if i == j { -Rat::one() } else { Rat::zero() }).collect())
        .collect();
    let mut b: RatVec = vec![Rat::zero(); k];
    for body in family {
        if let Ok(off) = shifted_offsets(body, f) {
            a.push(columns.iter().map(|r| -gauge_with(body, &off, r)).collect());
            b.push(-Rat::one());
        }
    }
    let cost: RatVec = l_coeffs.iter().map(|c| -c).collect();
    let sol = match simplex_ineq(&a, &b, &cost) {
        LpOutcome::Optimal(s) => s,
        LpOutcome::Infeasible => return Err(StrengthError::EmptyClosure),
        LpOutcome::Unbounded(_) => unreachable!("objective is bounded below by zero"),
    };
    let lhs = -sol.optimum;
    let bound = if lhs.is_zero() { StrengthValue::Infinite } else { StrengthValue::Finite(Rat::one() / lhs) };
    Ok(LowerWitness { bound, columns, point: sol.argopt })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SandwichReport {
    pub upper: StrengthValue,
    pub upper_index: Option<usize>,
    pub lower: LowerWitness,
    /// `|V| + |W| + 1` for the generators of `L`.
    pub n: usize,
}

impl SandwichReport {
    /// `lower ≤ upper` and, for finite `upper`, `upper ≤ N · lower`.
    pub fn consistent(&self) -> bool {
        if self.lower.bound > self.upper {
            return false;
        }
        match (&self.upper, &self.lower.bound) {
            (StrengthValue::Finite(u), StrengthValue::Finite(lo)) => *u <= Rat::from_integer(self.n.into()) * lo,
            (StrengthValue::Finite(u), StrengthValue::Zero) => u.is_zero(),
            _ => true,
        }
    }
}

pub fn sandwich(family: &[Polyhedron], l: &Polyhedron, f: &[Rat]) -> Result<SandwichReport, StrengthError> {
    let (upper, upper_index) = rho_family_upper(family, l, f)?;
    let lower = rho_family_lower_witness(family, l, f)?;
    Ok(SandwichReport { upper, upper_index, lower, n: l.vertices.len() + l.rays.len() + 1 })
}

/// `conv(V ∪ (f + tW))` for the vertices `V` and rays `W` of `L`, `t ≥ 1`.
pub fn inner_polytope_sequence(l: &Polyhedron, f: &[Rat], t: u64) -> Result<Polyhedron, StrengthError> {
    if f.len() != l.dim {
        return Err(StrengthError::DimensionMismatch);
    }
    if l.rays.is_empty() {
        return Err(StrengthError::NoRays);
    }
    if t == 0 {
        return Err(StrengthError::InvalidFactor);
    }
    if !l.interior_contains(f) {
        return Err(StrengthError::PointNotInterior);
    }
    let tt = Rat::from_integer(t.into());
    let pts: Vec<RatVec> = l.vertices.iter().cloned().chain(l.rays.iter().map(|w| add(f, &scale(&tt, w)))).collect();
    Ok(vrep_to_hrep(&pts, &[], l.dim)?)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OneForAll {
    pub satisfied: bool,
    pub witness: Option<usize>,
}

/// Looks for a member containing `μL + (1-μ)f`, `0 < μ < 1`.
pub fn one_for_all_criterion(
    family: &[Polyhedron],
    l: &Polyhedron,
    f: &[Rat],
    mu: &Rat,
) -> Result<OneForAll, StrengthError> {
    if *mu <= Rat::zero() || *mu >= Rat::one() {
        return Err(StrengthError::InvalidFactor);
    }
    if f.len() != l.dim {
        return Err(StrengthError::DimensionMismatch);
    }
    let shrunk = homothety(l, f, mu)?;
    let witness = family.iter().position(|b| contains(b, &shrunk));
    Ok(OneForAll { satisfied: witness.is_some(), witness })
}
