//! Unimodular normal forms built from extended-gcd column operations.

use latcut_geometry::linalg::{canonical_basis, null_space};
use latcut_geometry::rat::{primitive, Rat, RatVec};
use latcut_geometry::UnimodularMap;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

type IMat = Vec<Vec<BigInt>>;

fn to_rat(m: &IMat) -> Vec<RatVec> {
    m.iter().map(|r| r.iter().map(|x| Rat::from_integer(x.clone())).collect()).collect()
}

fn int_rows(rows: &[RatVec]) -> IMat {
    rows.iter().map(|r| primitive(r).iter().map(|x| x.to_integer()).collect()).collect()
}

fn identity(n: usize) -> IMat {
    (0..n).map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect()).collect()
}

/// Column-reduces `a` (k×n, independent rows): returns unimodular `v` with
/// `a·v = [H | 0]`, `H` lower triangular.
pub fn column_reduce(a: &IMat, n: usize) -> IMat {
    let mut a = a.clone();
    let mut v = identity(n);
    let combine = |m: &mut IMat, i: usize, j: usize, s: &BigInt, t: &BigInt, p: &BigInt, q: &BigInt| {
        for row in m.iter_mut() {
            let (ci, cj) = (row[i].clone(), row[j].clone());
            row[i] = s * &ci + t * &cj;
            row[j] = p * &ci + q * &cj;
        }
    };
    for i in 0..a.len().min(n) {
        if a[i][i].is_zero() {
            if let Some(j) = (i + 1..n).find(|&j| !a[i][j].is_zero()) {
                for m in [&mut a, &mut v] {
                    for row in m.iter_mut() {
                        row.swap(i, j);
                    }
                }
            }
        }
        for j in i + 1..n {
            if a[i][j].is_zero() {
                continue;
            }
            let (x, y) = (a[i][i].clone(), a[i][j].clone());
            let e = x.extended_gcd(&y);
            let g = e.gcd;
            let (s, t) = (e.x, e.y);
            let p = -(&y / &g);
            let q = &x / &g;
            combine(&mut a, i, j, &s, &t, &p, &q);
            combine(&mut v, i, j, &s, &t, &p, &q);
        }
        if a[i][i].is_negative() {
            for m in [&mut a, &mut v] {
                for row in m.iter_mut() {
                    row[i] = -row[i].clone();
                }
            }
        }
    }
    v
}

fn inverse_int(v: &IMat) -> IMat {
    let inv = latcut_geometry::linalg::inverse(&to_rat(v)).expect("unimodular");
    inv.iter().map(|r| r.iter().map(|x| x.to_integer()).collect()).collect()
}

/// Unimodular map sending the rational subspace spanned by `lineality` onto
/// the span of the trailing coordinate axes.
pub fn lineality_normalizer(lineality: &[RatVec], n: usize) -> UnimodularMap {
    let basis = canonical_basis(lineality);
    if basis.is_empty() {
        return UnimodularMap::identity(n);
    }
    // Rows spanning the orthogonal complement; the integer kernel of those
    // rows is the lattice of integer points in the subspace.
    let perp = null_space(&basis, n);
    if perp.is_empty() {
        return UnimodularMap::identity(n);
    }
    let v = column_reduce(&int_rows(&perp), n);
    let u = inverse_int(&v);
    UnimodularMap::new(to_rat(&u), vec![Rat::zero(); n]).expect("unimodular")
}

/// Unimodular matrix whose last row is the primitive integer vector `r`.
pub fn completion_with_last_row(r: &[Rat]) -> UnimodularMap {
    let n = r.len();
    let row = int_rows(&[r.to_vec()]);
    let v = column_reduce(&row, n);
    let mut u = inverse_int(&v);
    // first row of v^{-1} equals r; move it to the end
    let first = u.remove(0);
    u.push(first);
    UnimodularMap::new(to_rat(&u), vec![Rat::zero(); n]).expect("unimodular")
}

/// A primitive integer vector `r` with `r·f = 0`, preferring short ones.
pub fn primitive_annihilator(f: &[Rat]) -> Option<RatVec> {
    let n = f.len();
    if n < 2 {
        return None;
    }
    let fi = int_rows(&[f.to_vec()]);
    if fi[0].iter().all(|x| x.is_zero()) {
        let mut e = vec![Rat::zero(); n];
        e[n - 1] = Rat::one();
        return Some(e);
    }
    let v = column_reduce(&fi, n);
    // columns 1.. of v span the integer kernel of f
    let mut best: Option<RatVec> = None;
    for c in 1..n {
        let col: RatVec = v.iter().map(|r| Rat::from_integer(r[c].clone())).collect();
        let col = primitive(&col);
        let norm = latcut_geometry::rat::max_abs(&col);
        if best.as_ref().is_none_or(|b| norm < latcut_geometry::rat::max_abs(b)) {
            best = Some(col);
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use latcut_geometry::rat::{dot, fvec, ivec};

    #[test]
    fn normalizer_maps_line_to_last_axis() {
        let u = lineality_normalizer(&[ivec(&[2, 3])], 2);
        let img = u.apply_linear(&ivec(&[2, 3]));
        assert!(img[0].is_zero());
        assert!(!img[1].is_zero());
        let u = lineality_normalizer(&[ivec(&[1, 1, 0]), ivec(&[0, 1, 1])], 3);
        for w in [ivec(&[1, 1, 0]), ivec(&[0, 1, 1])] {
            assert!(u.apply_linear(&w)[0].is_zero());
        }
    }

    #[test]
    fn completion_has_row() {
        let u = completion_with_last_row(&ivec(&[3, 5, 7]));
        assert_eq!(u.matrix[2], ivec(&[3, 5, 7]));
    }

    #[test]
    fn annihilator() {
        let f = fvec(&[(1, 2), (1, 3), (1, 5)]);
        let r = primitive_annihilator(&f).unwrap();
        assert!(dot(&r, &f).is_zero());
        assert!(r.iter().all(|x| x.is_integer()));
        let u = completion_with_last_row(&r);
        assert!(u.apply(&f)[2].is_zero());
    }
}
