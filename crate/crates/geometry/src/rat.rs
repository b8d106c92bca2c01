//! Rational scalars and vectors.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Rat = BigRational;
pub type RatVec = Vec<Rat>;

pub fn int(v: i64) -> Rat {
    Rat::from_integer(BigInt::from(v))
}

pub fn frac(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

pub fn zero() -> Rat {
    Rat::zero()
}

pub fn one() -> Rat {
    Rat::one()
}

pub fn ivec(v: &[i64]) -> RatVec {
    v.iter().map(|&x| int(x)).collect()
}

pub fn fvec(v: &[(i64, i64)]) -> RatVec {
    v.iter().map(|&(p, q)| frac(p, q)).collect()
}

pub fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    debug_assert_eq!(a.len(), b.len());
    let mut s = Rat::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            s += x * y;
        }
    }
    s
}

pub fn add(a: &[Rat], b: &[Rat]) -> RatVec {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[Rat], b: &[Rat]) -> RatVec {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale(s: &Rat, a: &[Rat]) -> RatVec {
    a.iter().map(|x| s * x).collect()
}

pub fn neg(a: &[Rat]) -> RatVec {
    a.iter().map(|x| -x).collect()
}

/// `s*a + (1-s)*b`
pub fn lerp(s: &Rat, a: &[Rat], b: &[Rat]) -> RatVec {
    let t = Rat::one() - s;
    a.iter().zip(b).map(|(x, y)| s * x + &t * y).collect()
}

pub fn is_zero_vec(a: &[Rat]) -> bool {
    a.iter().all(|x| x.is_zero())
}

pub fn norm_sq(a: &[Rat]) -> Rat {
    dot(a, a)
}

pub fn is_integral(a: &[Rat]) -> bool {
    a.iter().all(|x| x.is_integer())
}

pub fn lcm_denominators(a: &[Rat]) -> BigInt {
    a.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}

/// Positive multiple of `a` that is a primitive integer vector; zero stays zero.
/// Returns the vector and the positive factor applied.
pub fn primitive_scale(a: &[Rat]) -> (RatVec, Rat) {
    if is_zero_vec(a) {
        return (a.to_vec(), Rat::one());
    }
    let l = lcm_denominators(a);
    let g = a
        .iter()
        .map(|x| (x * Rat::from_integer(l.clone())).to_integer())
        .fold(BigInt::zero(), |acc, v| acc.gcd(&v));
    let factor = Rat::new(l, g);
    (scale(&factor, a), factor)
}

pub fn primitive(a: &[Rat]) -> RatVec {
    primitive_scale(a).0
}

pub fn to_f64(x: &Rat) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

pub fn floor(x: &Rat) -> BigInt {
    x.floor().to_integer()
}

pub fn ceil(x: &Rat) -> BigInt {
    x.ceil().to_integer()
}

pub fn abs(x: &Rat) -> Rat {
    x.abs()
}

pub fn max_abs(a: &[Rat]) -> Rat {
    a.iter().map(|x| x.abs()).max().unwrap_or_else(Rat::zero)
}

/// Renders a rational as `p/q`, or `p` when integral.
pub fn fmt_rat(x: &Rat) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn fmt_vec(a: &[Rat]) -> String {
    let parts: Vec<String> = a.iter().map(fmt_rat).collect();
    format!("({})", parts.join(", "))
}

/// Formats a float with 12 significant digits.
pub fn fmt_float(x: f64) -> String {
    if !x.is_finite() {
        return if x.is_nan() { "nan".into() } else if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return "0".into();
    }
    let s = format!("{:.11e}", x);
    let v: f64 = s.parse().unwrap();
    let mag = v.abs().log10().floor() as i32;
    if (-5..12).contains(&mag) {
        let decimals = (11 - mag).max(0) as usize;
        let out = format!("{:.*}", decimals, v);
        if out.contains('.') {
            out.trim_end_matches('0').trim_end_matches('.').to_string()
        } else {
            out
        }
    } else {
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RatParseError {
    #[error("empty rational")]
    Empty,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("malformed rational {0:?}")]
    Malformed(String),
    #[error("rational {0:?} is not in lowest terms")]
    NotReduced(String),
}

fn parse_int(s: &str) -> Option<BigInt> {
    let digits = s.strip_prefix('-').unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

/// Parses `p` or `p/q` with integer `p`, positive `q`. With `strict`, rejects
/// forms that are not fully reduced (`2/4`, `3/1`).
pub fn parse_rat(s: &str, strict: bool) -> Result<Rat, RatParseError> {
    let s = s.trim();
    if s.is_empty() {
        return Err(RatParseError::Empty);
    }
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p, Some(q)),
        None => (s, None),
    };
    let num = parse_int(p).ok_or_else(|| RatParseError::Malformed(s.into()))?;
    let den = match q {
        Some(q) => {
            if q.starts_with('-') {
                return Err(RatParseError::Malformed(s.into()));
            }
            parse_int(q).ok_or_else(|| RatParseError::Malformed(s.into()))?
        }
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(RatParseError::ZeroDenominator);
    }
    let r = Rat::new(num.clone(), den.clone());
    if strict && (r.numer() != &num || r.denom() != &den) {
        return Err(RatParseError::NotReduced(s.into()));
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!(parse_rat("3/4", true).unwrap(), frac(3, 4));
        assert_eq!(parse_rat("-7", true).unwrap(), int(-7));
        assert_eq!(parse_rat("1/0", false), Err(RatParseError::ZeroDenominator));
        assert!(matches!(parse_rat("0.5", false), Err(RatParseError::Malformed(_))));
        assert!(matches!(parse_rat("1e3", false), Err(RatParseError::Malformed(_))));
        assert!(matches!(parse_rat("2/4", true), Err(RatParseError::NotReduced(_))));
        assert_eq!(parse_rat("2/4", false).unwrap(), frac(1, 2));
        assert!(parse_rat("1/-2", false).is_err());
    }

    #[test]
    fn primitive_vectors() {
        assert_eq!(primitive(&fvec(&[(1, 2), (-3, 4)])), ivec(&[2, -3]));
        assert_eq!(primitive(&ivec(&[0, 6, 4])), ivec(&[0, 3, 2]));
        let (v, f) = primitive_scale(&ivec(&[0, 0]));
        assert_eq!((v, f), (ivec(&[0, 0]), int(1)));
    }

    #[test]
    fn formatting() {
        assert_eq!(fmt_rat(&frac(-6, 4)), "-3/2");
        assert_eq!(fmt_rat(&int(5)), "5");
        assert_eq!(fmt_float(1.0 / 3.0), "0.333333333333");
        assert_eq!(fmt_float(2.0), "2");
        assert_eq!(fmt_float(123456.0), "123456");
    }

    #[test]
    fn lerp_endpoints() {
        let a = ivec(&[1, 2]);
        let b = ivec(&[3, -1]);
        assert_eq!(lerp(&one(), &a, &b), a);
        assert_eq!(lerp(&zero(), &a, &b), b);
        assert_eq!(lerp(&frac(1, 2), &a, &b), fvec(&[(2, 1), (1, 2)]));
    }
}
