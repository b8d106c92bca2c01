//! Exact dense linear algebra over the rationals.

use crate::rat::{dot, primitive, scale, sub, Rat, RatVec};
use num_traits::{One, Zero};

/// Reduced row echelon form. Returns the nonzero rows and pivot columns.
pub fn rref(rows: &[RatVec]) -> (Vec<RatVec>, Vec<usize>) {
    let mut m: Vec<RatVec> = rows.to_vec();
    let ncols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = Rat::one() / &m[r][c];
        m[r] = scale(&inv, &m[r]);
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                let row_r = m[r].clone();
                for (x, y) in m[i].iter_mut().zip(&row_r) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    m.truncate(r);
    (m, pivots)
}

pub fn rank(rows: &[RatVec]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    rref(rows).0.len()
}

/// Canonical primitive-integer basis of the row space.
pub fn canonical_basis(rows: &[RatVec]) -> Vec<RatVec> {
    if rows.is_empty() {
        return Vec::new();
    }
    rref(rows).0.iter().map(|r| primitive(r)).collect()
}

/// Orthogonal (not normalized) basis of the span via Gram-Schmidt.
pub fn orthogonal_basis(rows: &[RatVec]) -> Vec<RatVec> {
    let mut basis: Vec<RatVec> = Vec::new();
    for v in rows {
        let mut w = v.clone();
        for u in &basis {
            let c = dot(&w, u) / dot(u, u);
            w = sub(&w, &scale(&c, u));
        }
        if !w.iter().all(|x| x.is_zero()) {
            basis.push(w);
        }
    }
    basis
}

/// Orthogonal projection of `x` onto the complement of span(`orth`), where
/// `orth` is an orthogonal basis.
pub fn project_out(x: &[Rat], orth: &[RatVec]) -> RatVec {
    let mut w = x.to_vec();
    for u in orth {
        let c = dot(&w, u) / dot(u, u);
        w = sub(&w, &scale(&c, u));
    }
    w
}

/// Solves the square system `m x = b`; `None` when singular.
pub fn solve(m: &[RatVec], b: &[Rat]) -> Option<RatVec> {
    let n = m.len();
    let aug: Vec<RatVec> = m
        .iter()
        .zip(b)
        .map(|(r, bi)| {
            let mut r = r.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let (red, piv) = rref(&aug);
    if piv.len() != n || piv.iter().enumerate().any(|(i, &c)| c != i) {
        return None;
    }
    Some(red.iter().map(|r| r[n].clone()).collect())
}

pub fn mat_vec(m: &[RatVec], x: &[Rat]) -> RatVec {
    m.iter().map(|r| dot(r, x)).collect()
}

pub fn transpose(m: &[RatVec]) -> Vec<RatVec> {
    if m.is_empty() {
        return Vec::new();
    }
    (0..m[0].len()).map(|j| m.iter().map(|r| r[j].clone()).collect()).collect()
}

pub fn identity(n: usize) -> Vec<RatVec> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { Rat::one() } else { Rat::zero() }).collect())
        .collect()
}

pub fn inverse(m: &[RatVec]) -> Option<Vec<RatVec>> {
    let n = m.len();
    let id = identity(n);
    let aug: Vec<RatVec> = m
        .iter()
        .zip(&id)
        .map(|(r, e)| r.iter().chain(e).cloned().collect())
        .collect();
    let (red, piv) = rref(&aug);
    if red.len() != n || piv.iter().take(n).enumerate().any(|(i, &c)| c != i) {
        return None;
    }
    Some(red.iter().map(|r| r[n..].to_vec()).collect())
}

pub fn determinant(m: &[RatVec]) -> Rat {
    let n = m.len();
    let mut a = m.to_vec();
    let mut det = Rat::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return Rat::zero();
        };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        det *= &a[c][c];
        for i in c + 1..n {
            let f = &a[i][c] / &a[c][c];
            if !f.is_zero() {
                let rc = a[c].clone();
                for (x, y) in a[i].iter_mut().zip(&rc) {
                    *x -= &f * y;
                }
            }
        }
    }
    det
}

/// Basis of the null space `{x : m x = 0}`.
pub fn null_space(m: &[RatVec], ncols: usize) -> Vec<RatVec> {
    if m.is_empty() {
        return crate::linalg::identity(ncols);
    }
    let (red, piv) = rref(m);
    let free: Vec<usize> = (0..ncols).filter(|c| !piv.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut x = vec![Rat::zero(); ncols];
            x[fc] = Rat::one();
            for (row, &pc) in red.iter().zip(&piv) {
                x[pc] = -row[fc].clone();
            }
            x
        })
        .collect()
}
