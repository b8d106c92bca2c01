//! JSON encoding with rationals written as `"p/q"` strings.

use crate::error::GeomError;
use crate::polyhedron::{dd_convert, vrep_to_hrep, HalfSpace, Polyhedron};
use crate::rat::{fmt_rat, parse_rat, Rat, RatVec};
use serde::de::{self, DeserializeOwned, Visitor};
use serde::{Deserialize, Deserializer, Serialize};
use std::fmt;
use std::marker::PhantomData;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("parse error at byte {offset}: {message}")]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

/// Chooses whether non-reduced forms such as `"2/4"` are accepted.
pub trait Strictness {
    const STRICT: bool;
}
#[derive(Debug)]
pub struct Strict;
#[derive(Debug)]
pub struct Lax;
impl Strictness for Strict {
    const STRICT: bool = true;
}
impl Strictness for Lax {
    const STRICT: bool = false;
}

/// A rational read from a JSON string or integer literal; floats are refused.
#[derive(Debug)]
pub struct JRat<S>(pub Rat, PhantomData<S>);

impl<'de, S: Strictness> Deserialize<'de> for JRat<S> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V<S>(PhantomData<S>);
        impl<S: Strictness> Visitor<'_> for V<S> {
            type Value = JRat<S>;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a rational string \"p/q\" or an integer")
            }
            fn visit_str<E: de::Error>(self, s: &str) -> Result<Self::Value, E> {
                parse_rat(s, S::STRICT).map(|r| JRat(r, PhantomData)).map_err(E::custom)
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> Result<Self::Value, E> {
                Ok(JRat(crate::rat::int(v), PhantomData))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> Result<Self::Value, E> {
                Ok(JRat(Rat::from_integer(v.into()), PhantomData))
            }
            fn visit_f64<E: de::Error>(self, v: f64) -> Result<Self::Value, E> {
                Err(E::custom(format!("float literal {v} is not exact; write rationals as \"p/q\"")))
            }
        }
        d.deserialize_any(V(PhantomData))
    }
}

pub fn rat_str(x: &Rat) -> String {
    fmt_rat(x)
}

pub fn vec_strs(v: &[Rat]) -> Vec<String> {
    v.iter().map(fmt_rat).collect()
}

pub fn unwrap_vec<S>(v: Vec<JRat<S>>) -> RatVec {
    v.into_iter().map(|r| r.0).collect()
}

/// Byte offset of a serde_json error position within `src`.
pub fn byte_offset(src: &str, line: usize, column: usize) -> usize {
    if line == 0 {
        return 0;
    }
    let line_start: usize = src.split_inclusive('\n').take(line - 1).map(str::len).sum();
    (line_start + column.saturating_sub(1)).min(src.len())
}

/// Deserializes `src`, turning errors into byte-positioned [`ParseError`]s.
pub fn from_json<T: DeserializeOwned>(src: &str) -> Result<T, ParseError> {
    serde_json::from_str(src).map_err(|e| ParseError {
        offset: byte_offset(src, e.line(), e.column()),
        message: e.to_string(),
    })
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields, bound = "S: Strictness")]
struct HalfSpaceIn<S: Strictness> {
    a: Vec<JRat<S>>,
    b: JRat<S>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields, bound = "S: Strictness")]
struct VrepIn<S: Strictness> {
    #[serde(default = "Vec::new")]
    vertices: Vec<Vec<JRat<S>>>,
    #[serde(default = "Vec::new")]
    rays: Vec<Vec<JRat<S>>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields, bound = "S: Strictness")]
struct PolyIn<S: Strictness> {
    dim: usize,
    hrep: Option<Vec<HalfSpaceIn<S>>>,
    vrep: Option<VrepIn<S>>,
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
pub struct HalfSpaceOut {
    pub a: Vec<String>,
    pub b: String,
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
pub struct VrepOut {
    pub vertices: Vec<Vec<String>>,
    pub rays: Vec<Vec<String>>,
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
pub struct PolyOut {
    pub dim: usize,
    pub hrep: Vec<HalfSpaceOut>,
    pub vrep: VrepOut,
}

pub fn poly_out(p: &Polyhedron) -> PolyOut {
    PolyOut {
        dim: p.dim,
        hrep: p.hrep.iter().map(|h| HalfSpaceOut { a: vec_strs(&h.normal), b: rat_str(&h.offset) }).collect(),
        vrep: VrepOut {
            vertices: p.vertices.iter().map(|v| vec_strs(v)).collect(),
            rays: p.rays.iter().map(|w| vec_strs(w)).collect(),
        },
    }
}

fn geom_err(e: GeomError) -> ParseError {
    ParseError { offset: 0, message: e.to_string() }
}

fn build<S: Strictness>(raw: PolyIn<S>) -> Result<Polyhedron, ParseError> {
    let dim = raw.dim;
    let hrep = raw
        .hrep
        .map(|hs| {
            hs.into_iter()
                .map(|h| HalfSpace::new(unwrap_vec(h.a), h.b.0))
                .collect::<Result<Vec<_>, _>>()
        })
        .transpose()
        .map_err(geom_err)?;
    let vrep = raw.vrep.map(|v| {
        (
            v.vertices.into_iter().map(unwrap_vec).collect::<Vec<_>>(),
            v.rays.into_iter().map(unwrap_vec).collect::<Vec<_>>(),
        )
    });
    match (hrep, vrep) {
        (Some(h), None) => dd_convert(&h, dim).map_err(geom_err),
        (None, Some((v, r))) => vrep_to_hrep(&v, &r, dim).map_err(geom_err),
        (Some(h), Some((v, r))) => {
            let from_h = dd_convert(&h, dim).map_err(geom_err)?;
            let given = Polyhedron { dim, hrep: h, vertices: v, rays: r.iter().map(|w| crate::rat::primitive(w)).collect(), fulldim: from_h.fulldim };
            if given.hrep.len() != from_h.hrep.len() || !given.same_set(&from_h) {
                return Err(ParseError { offset: 0, message: "hrep and vrep describe different sets".into() });
            }
            Ok(given)
        }
        (None, None) => Err(ParseError { offset: 0, message: "polyhedron needs hrep or vrep".into() }),
    }
}

/// Reads a polyhedron; reduced rational forms are required when `strict`.
pub fn parse_polyhedron(src: &str, strict: bool) -> Result<Polyhedron, ParseError> {
    if strict {
        build(from_json::<PolyIn<Strict>>(src)?)
    } else {
        build(from_json::<PolyIn<Lax>>(src)?)
    }
}

pub fn emit_polyhedron(p: &Polyhedron) -> String {
    let mut s = serde_json::to_string_pretty(&poly_out(p)).expect("serializable");
    s.push('\n');
    s
}

/// Reads a bare rational vector such as `["1/2","1/3"]` or `1/2,1/3`.
pub fn parse_point(src: &str) -> Result<RatVec, ParseError> {
    let t = src.trim();
    if t.starts_with('[') {
        return from_json::<Vec<JRat<Lax>>>(t).map(unwrap_vec);
    }
    let mut out = Vec::new();
    let mut pos = 0;
    for part in src.split(',') {
        let r = parse_rat(part, false).map_err(|e| ParseError { offset: pos, message: e.to_string() })?;
        out.push(r);
        pos += part.len() + 1;
    }
    Ok(out)
}
