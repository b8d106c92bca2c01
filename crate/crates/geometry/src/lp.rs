//! Exact two-phase simplex with Bland's rule, and separation.

use crate::error::GeomError;
use crate::polyhedron::{HalfSpace, Polyhedron};
use crate::rat::{dot, neg, Rat, RatVec};
use num_traits::{One, Signed, Zero};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sense {
    Max,
    Min,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LpSolution {
    pub optimum: Rat,
    pub argopt: RatVec,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal(LpSolution),
    Unbounded(RatVec),
    Infeasible,
}

struct Tableau {
    rows: Vec<RatVec>,
    rhs: RatVec,
    basis: Vec<usize>,
}

enum Step {
    Optimal,
    Unbounded(usize),
}

impl Tableau {
    fn pivot(&mut self, r: usize, c: usize) {
        let inv = Rat::one() / &self.rows[r][c];
        for x in self.rows[r].iter_mut() {
            *x *= &inv;
        }
        self.rhs[r] *= &inv;
        let prow = self.rows[r].clone();
        let prhs = self.rhs[r].clone();
        for i in 0..self.rows.len() {
            if i == r || self.rows[i][c].is_zero() {
                continue;
            }
            let f = self.rows[i][c].clone();
            for (x, y) in self.rows[i].iter_mut().zip(&prow) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
            self.rhs[i] -= &f * &prhs;
        }
        self.basis[r] = c;
    }

    /// Maximizes `cost` over columns `0..ncols` from the current feasible basis.
    fn run(&mut self, cost: &[Rat], ncols: usize) -> Step {
        loop {
            let mut entering = None;
            for j in 0..ncols {
                if self.basis.contains(&j) {
                    continue;
                }
                let mut rc = cost[j].clone();
                for (i, &bi) in self.basis.iter().enumerate() {
                    if !self.rows[i][j].is_zero() {
                        rc -= &cost[bi] * &self.rows[i][j];
                    }
                }
                if rc.is_positive() {
                    entering = Some(j);
                    break;
                }
            }
            let Some(j) = entering else {
                return Step::Optimal;
            };
            let mut leave: Option<(usize, Rat)> = None;
            for i in 0..self.rows.len() {
                if self.rows[i][j].is_positive() {
                    let ratio = &self.rhs[i] / &self.rows[i][j];
                    let better = match &leave {
                        None => true,
                        Some((li, lr)) => ratio < *lr || (ratio == *lr && self.basis[i] < self.basis[*li]),
                    };
                    if better {
                        leave = Some((i, ratio));
                    }
                }
            }
            match leave {
                Some((i, _)) => self.pivot(i, j),
                None => return Step::Unbounded(j),
            }
        }
    }

    fn solution(&self, nvars: usize) -> RatVec {
        let mut x = vec![Rat::zero(); nvars];
        for (i, &b) in self.basis.iter().enumerate() {
            if b < nvars {
                x[b] = self.rhs[i].clone();
            }
        }
        x
    }
}

/// Maximizes `c·x` subject to `A x = b`, `x ≥ 0`. An unbounded outcome
/// carries a direction `d ≥ 0` with `A d = 0` and `c·d > 0`.
pub fn simplex_standard(a: &[RatVec], b: &[Rat], c: &[Rat]) -> LpOutcome {
    let n = c.len();
    let m = a.len();
    let mut rows = Vec::with_capacity(m);
    let mut rhs = Vec::with_capacity(m);
    for (i, (row, bi)) in a.iter().zip(b).enumerate() {
        let flip = bi.is_negative();
        let mut r: RatVec = row.iter().map(|x| if flip { -x } else { x.clone() }).collect();
        r.extend((0..m).map(|k| if k == i { Rat::one() } else { Rat::zero() }));
        rows.push(r);
        rhs.push(if flip { -bi.clone() } else { bi.clone() });
    }
    let mut t = Tableau { rows, rhs, basis: (n..n + m).collect() };
    let mut phase1 = vec![Rat::zero(); n + m];
    for x in phase1[n..].iter_mut() {
        *x = -Rat::one();
    }
    t.run(&phase1, n + m);
    let infeas: Rat = t.basis.iter().zip(&t.rhs).filter(|(&bi, _)| bi >= n).map(|(_, v)| v.clone()).sum();
    if infeas.is_positive() {
        return LpOutcome::Infeasible;
    }
    // Drive zero-level artificials out, dropping redundant rows.
    let mut i = 0;
    while i < t.rows.len() {
        if t.basis[i] >= n {
            if let Some(j) = (0..n).find(|&j| !t.rows[i][j].is_zero() && !t.basis.contains(&j)) {
                t.pivot(i, j);
            } else {
                t.rows.remove(i);
                t.rhs.remove(i);
                t.basis.remove(i);
                continue;
            }
        }
        i += 1;
    }
    let mut cost = c.to_vec();
    cost.extend((0..m).map(|_| Rat::zero()));
    match t.run(&cost, n) {
        Step::Optimal => {
            let x = t.solution(n);
            LpOutcome::Optimal(LpSolution { optimum: dot(c, &x), argopt: x })
        }
        Step::Unbounded(j) => {
            let mut d = vec![Rat::zero(); n];
            d[j] = Rat::one();
            for (i, &bi) in t.basis.iter().enumerate() {
                if bi < n {
                    d[bi] = -t.rows[i][j].clone();
                }
            }
            LpOutcome::Unbounded(d)
        }
    }
}

/// Maximizes `c·x` subject to `A x ≤ b` with `x` free.
pub fn simplex_ineq(a: &[RatVec], b: &[Rat], c: &[Rat]) -> LpOutcome {
    let n = c.len();
    let m = a.len();
    let std_rows: Vec<RatVec> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: RatVec = row.clone();
            r.extend(neg(row));
            r.extend((0..m).map(|k| if k == i { Rat::one() } else { Rat::zero() }));
            r
        })
        .collect();
    let mut cost = c.to_vec();
    cost.extend(neg(c));
    cost.extend((0..m).map(|_| Rat::zero()));
    let fold = |v: &RatVec| -> RatVec { (0..n).map(|i| &v[i] - &v[n + i]).collect() };
    match simplex_standard(&std_rows, b, &cost) {
        LpOutcome::Optimal(s) => {
            let x = fold(&s.argopt);
            LpOutcome::Optimal(LpSolution { optimum: dot(c, &x), argopt: x })
        }
        LpOutcome::Unbounded(d) => LpOutcome::Unbounded(fold(&d)),
        LpOutcome::Infeasible => LpOutcome::Infeasible,
    }
}

/// Optimizes a linear objective over the H-representation of `p`.
pub fn lp_solve(objective: &[Rat], p: &Polyhedron, sense: Sense) -> Result<LpSolution, GeomError> {
    if objective.len() != p.dim {
        return Err(GeomError::DimensionMismatch { expected: p.dim, found: objective.len() });
    }
    let c = match sense {
        Sense::Max => objective.to_vec(),
        Sense::Min => neg(objective),
    };
    let a: Vec<RatVec> = p.hrep.iter().map(|h| h.normal.clone()).collect();
    let b: RatVec = p.hrep.iter().map(|h| h.offset.clone()).collect();
    match simplex_ineq(&a, &b, &c) {
        LpOutcome::Optimal(s) => {
            let optimum = dot(objective, &s.argopt);
            Ok(LpSolution { optimum, argopt: s.argopt })
        }
        LpOutcome::Unbounded(d) => Err(GeomError::Unbounded { ray: crate::rat::primitive(&d) }),
        LpOutcome::Infeasible => Err(GeomError::EmptySet),
    }
}

/// Half-space `H ⊇ P` whose interior misses `Q`; requires `int(P) ∩ Q = ∅`.
///
/// Searches for a convex combination of the facet inequalities of `P` that
/// is reversed on every generator of `Q`.
pub fn separate(p: &Polyhedron, q: &Polyhedron) -> Result<HalfSpace, GeomError> {
    if p.dim != q.dim {
        return Err(GeomError::DimensionMismatch { expected: p.dim, found: q.dim });
    }
    let k = p.hrep.len();
    let mut a_rows: Vec<RatVec> = Vec::new();
    let mut b: RatVec = Vec::new();
    // λ·(b_i - a_i·u) ≤ 0 for vertices u of Q
    for u in &q.vertices {
        a_rows.push(p.hrep.iter().map(|h| -h.slack(u)).collect());
        b.push(Rat::zero());
    }
    // -λ·(a_i·w) ≤ 0 for rays w of Q
    for w in &q.rays {
        a_rows.push(p.hrep.iter().map(|h| -dot(&h.normal, w)).collect());
        b.push(Rat::zero());
    }
    a_rows.push(vec![Rat::one(); k]);
    b.push(Rat::one());
    a_rows.push(vec![-Rat::one(); k]);
    b.push(-Rat::one());
    // λ ≥ 0 as explicit rows
    for i in 0..k {
        let mut r = vec![Rat::zero(); k];
        r[i] = -Rat::one();
        a_rows.push(r);
        b.push(Rat::zero());
    }
    match simplex_ineq(&a_rows, &b, &vec![Rat::zero(); k]) {
        LpOutcome::Optimal(s) => {
            let lam = s.argopt;
            let mut normal = vec![Rat::zero(); p.dim];
            let mut offset = Rat::zero();
            for (l, h) in lam.iter().zip(&p.hrep) {
                if l.is_zero() {
                    continue;
                }
                for (x, y) in normal.iter_mut().zip(&h.normal) {
                    *x += l * y;
                }
                offset += l * &h.offset;
            }
            HalfSpace::new(normal, offset).map_err(|_| GeomError::NotSeparable)
        }
        _ => Err(GeomError::NotSeparable),
    }
}
