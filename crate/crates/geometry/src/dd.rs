//! Incremental double description for homogeneous cones `{y : h·y ≤ 0}`.

use crate::rat::{dot, primitive, scale, sub, Rat, RatVec};
use num_traits::{Signed, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
struct BitSet(Vec<u64>);

impl BitSet {
    fn new(n: usize) -> Self {
        BitSet(vec![0; n.div_ceil(64).max(1)])
    }
    fn full(n: usize) -> Self {
        let mut s = Self::new(n);
        for i in 0..n {
            s.insert(i);
        }
        s
    }
    fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    fn and(&self, o: &Self) -> Self {
        BitSet(self.0.iter().zip(&o.0).map(|(a, b)| a & b).collect())
    }
    fn subset_of(&self, o: &Self) -> bool {
        self.0.iter().zip(&o.0).all(|(a, b)| a & !b == 0)
    }
    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }
}

struct Gen {
    v: RatVec,
    zero: BitSet,
}

/// Generators of a polyhedral cone: a lineality basis plus extreme rays of
/// the pointed part.
#[derive(Clone, Debug, Default)]
pub struct ConeGens {
    pub lineality: Vec<RatVec>,
    pub rays: Vec<RatVec>,
}

pub fn cone_generators(rows: &[RatVec], d: usize) -> ConeGens {
    let m = rows.len();
    let mut lin: Vec<RatVec> = (0..d)
        .map(|i| (0..d).map(|j| if i == j { Rat::from_integer(1.into()) } else { Rat::zero() }).collect())
        .collect();
    let mut rays: Vec<Gen> = Vec::new();

    for (k, h) in rows.iter().enumerate() {
        if let Some(j) = lin.iter().position(|l| !dot(h, l).is_zero()) {
            let mut l = lin.swap_remove(j);
            let mut hl = dot(h, &l);
            if hl.is_positive() {
                l = l.iter().map(|x| -x).collect();
                hl = -hl;
            }
            for other in lin.iter_mut() {
                let c = dot(h, other);
                if !c.is_zero() {
                    *other = primitive(&sub(other, &scale(&(c / &hl), &l)));
                }
            }
            for r in rays.iter_mut() {
                let c = dot(h, &r.v);
                if !c.is_zero() {
                    r.v = primitive(&sub(&r.v, &scale(&(c / &hl), &l)));
                }
                r.zero.insert(k);
            }
            rays.push(Gen { v: primitive(&l), zero: BitSet::full(k).resized(m) });
            continue;
        }

        let vals: Vec<Rat> = rays.iter().map(|r| dot(h, &r.v)).collect();
        let pos: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_positive()).collect();
        if pos.is_empty() {
            for (r, v) in rays.iter_mut().zip(&vals) {
                if v.is_zero() {
                    r.zero.insert(k);
                }
            }
            continue;
        }
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_negative()).collect();
        let need = d.saturating_sub(lin.len()).saturating_sub(2);
        let mut fresh = Vec::new();
        for &p in &pos {
            for &q in &neg {
                let common = rays[p].zero.and(&rays[q].zero);
                if common.count() < need {
                    continue;
                }
                let adjacent = rays
                    .iter()
                    .enumerate()
                    .all(|(i, r)| i == p || i == q || !common.subset_of(&r.zero));
                if !adjacent {
                    continue;
                }
                let v: RatVec = rays[q]
                    .v
                    .iter()
                    .zip(&rays[p].v)
                    .map(|(a, b)| &vals[p] * a - &vals[q] * b)
                    .collect();
                let mut zero = common;
                zero.insert(k);
                fresh.push(Gen { v: primitive(&v), zero });
            }
        }
        let mut kept: Vec<Gen> = Vec::with_capacity(rays.len() + fresh.len());
        for (i, mut r) in rays.into_iter().enumerate() {
            if vals[i].is_positive() {
                continue;
            }
            if vals[i].is_zero() {
                r.zero.insert(k);
            }
            kept.push(r);
        }
        kept.extend(fresh);
        rays = kept;
    }

    ConeGens { lineality: lin, rays: rays.into_iter().map(|g| g.v).collect() }
}

impl BitSet {
    fn resized(mut self, n: usize) -> Self {
        self.0.resize(n.div_ceil(64).max(1), 0);
        self
    }
}
