//! Named experiments with per-assertion pass/fail reports.

use crate::gen::{centered_at, dim, point, polytope, stream, triple};
use crate::json::{cert_json, rat_json, strength_json, strength_str, vec_json};
use crate::CliError;
use latcut_constructions::random::{
    random_interior_point, random_lift_input, random_maximal_lattice_free, random_small_lattice_free,
    random_truncated_cone,
};
use latcut_constructions::{
    approximate_any_f, approximate_fixed_f, cube_face_construction, inapprox_pyramid, lift_to_nplus1, prepare_lift,
    receding_apex_body, shrink_epsilon, simplex_tower, split_slab, triangles_around_half, truncated_cone_shrink,
};
use latcut_cuts::{f_metric, gauge, intersection_cut, sqrt_le_sum};
use latcut_geometry::io::rat_str;
use latcut_geometry::rat::{add, frac, fvec, int, ivec, parse_rat, scale, sub, Rat, RatVec};
use latcut_geometry::{contains, homothety, Polyhedron};
use latcut_lattice::{check_lattice_free, denominator, flatness_bound, Maximality};
use latcut_strength::{containment_threshold, rho_f, sandwich, StrengthValue, StrengthWitness};
use num_traits::{One, Signed, Zero};
use rand::Rng;
use rayon::prelude::*;
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::time::Instant;

type Fallible<T> = Result<T, Box<dyn std::error::Error + Send + Sync>>;

#[derive(Clone, Debug, PartialEq)]
pub struct Assertion {
    pub name: String,
    pub passed: bool,
    pub detail: Value,
}

impl Assertion {
    fn new(name: impl Into<String>, passed: bool, detail: Value) -> Self {
        Assertion { name: name.into(), passed, detail }
    }

    /// Runs `check`, turning an error into a failed assertion.
    fn attempt(name: impl Into<String>, check: impl FnOnce() -> Fallible<(bool, Value)>) -> Self {
        match check() {
            Ok((passed, detail)) => Assertion::new(name, passed, detail),
            Err(e) => Assertion::new(name, false, json!({ "error": e.to_string() })),
        }
    }
}

pub type Params = BTreeMap<String, Rat>;

fn param_int(p: &Params, key: &str) -> Fallible<i64> {
    let v = p.get(key).ok_or_else(|| format!("missing parameter {key}"))?;
    if !v.is_integer() {
        return Err(format!("parameter {key} must be an integer").into());
    }
    i64::try_from(v.to_integer()).map_err(|_| format!("parameter {key} is out of range").into())
}

fn param_count(p: &Params, key: &str) -> Fallible<u64> {
    let v = param_int(p, key)?;
    u64::try_from(v).map_err(|_| format!("parameter {key} must be nonnegative").into())
}

pub struct Scenario {
    pub name: &'static str,
    /// Acceptance criterion reproduced by this scenario.
    pub criterion: u8,
    pub about: &'static str,
    pub defaults: &'static [(&'static str, &'static str)],
    run: fn(&Params, u64) -> Fallible<Vec<Assertion>>,
}

pub fn scenarios() -> &'static [Scenario] {
    &SCENARIOS
}

static SCENARIOS: [Scenario; 9] = [
    Scenario {
        name: "cubeface-census",
        criterion: 1,
        about: "cube-face polyhedra are maximal lattice-free with the requested facet count (n = 0 runs n = 2 and 3)",
        defaults: &[("n", "0")],
        run: cubeface_census,
    },
    Scenario {
        name: "split-vs-triangles",
        criterion: 2,
        about: "triangles are infinitely weak against the split; receding bodies converge to it",
        defaults: &[("t_max", "64"), ("triangles", "20")],
        run: split_vs_triangles,
    },
    Scenario {
        name: "rho-vs-threshold",
        criterion: 3,
        about: "closed-form strength agrees with a bisected containment threshold",
        defaults: &[("count", "200"), ("tol", "1/1000")],
        run: rho_vs_threshold,
    },
    Scenario {
        name: "sandwich",
        criterion: 4,
        about: "family strength lower witness and upper bound obey the sandwich chain",
        defaults: &[("count", "50"), ("max_family", "5")],
        run: sandwich_chain,
    },
    Scenario {
        name: "truncated-cone",
        criterion: 5,
        about: "truncated-cone shrink is sandwiched between the quarter copy and the cone",
        defaults: &[("count", "50")],
        run: truncated_cones,
    },
    Scenario {
        name: "lifting",
        criterion: 6,
        about: "lifted sets are lattice-free, have few facets and contain the shrunken body",
        defaults: &[("count", "20"), ("attempts", "400")],
        run: lifting,
    },
    Scenario {
        name: "approximation",
        criterion: 7,
        about: "approximations with few facets stay within the guaranteed factors",
        defaults: &[("count", "30")],
        run: approximation,
    },
    Scenario {
        name: "inapprox",
        criterion: 8,
        about: "simplex towers and pyramids defeat sets with fewer facets",
        defaults: &[("samples", "20")],
        run: inapprox,
    },
    Scenario {
        name: "gauge-metric",
        criterion: 9,
        about: "gauge homogeneity, subadditivity, membership duality and f-metric axioms",
        defaults: &[("count", "1000")],
        run: gauge_metric,
    },
];

#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub scenario: String,
    pub criterion: u8,
    pub seed: u64,
    pub params: Params,
    pub assertions: Vec<Assertion>,
    pub wall_ms: u128,
}

impl Report {
    pub fn passed(&self) -> bool {
        !self.assertions.is_empty() && self.assertions.iter().all(|a| a.passed)
    }

    pub fn failed(&self) -> usize {
        self.assertions.iter().filter(|a| !a.passed).count()
    }

    /// The report as JSON; `timing` adds the wall-clock field.
    pub fn to_json(&self, timing: bool) -> Value {
        let mut v = json!({
            "scenario": self.scenario,
            "criterion": self.criterion,
            "seed": self.seed,
            "params": self.params.iter().map(|(k, v)| (k.clone(), Value::String(rat_str(v)))).collect::<serde_json::Map<_, _>>(),
            "passed": self.passed(),
            "total": self.assertions.len(),
            "failed": self.failed(),
            "assertions": self.assertions.iter().map(|a| json!({ "name": a.name, "passed": a.passed, "detail": a.detail })).collect::<Vec<_>>(),
        });
        if timing {
            v["wall_ms"] = json!(self.wall_ms);
        }
        v
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for a in &self.assertions {
            let tag = if a.passed { "PASS" } else { "FAIL" };
            out.push_str(&format!("{tag} {}", a.name));
            if !a.passed {
                out.push_str(&format!(" {}", a.detail));
            }
            out.push('\n');
        }
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        out.push_str(&format!(
            "{verdict} scenario {} (criterion {}): {}/{} assertions passed, seed {}, {} ms\n",
            self.scenario,
            self.criterion,
            self.assertions.len() - self.failed(),
            self.assertions.len(),
            self.seed,
            self.wall_ms
        ));
        out
    }
}

pub fn find(name: &str) -> Result<&'static Scenario, CliError> {
    SCENARIOS.iter().find(|s| s.name == name).ok_or_else(|| CliError::UnknownScenario(name.into()))
}

/// Runs the named scenario with its defaults updated by `overrides`.
pub fn run_scenario(name: &str, overrides: &[(String, String)], seed: u64) -> Result<Report, CliError> {
    let sc = find(name)?;
    let mut params = Params::new();
    for (k, v) in sc.defaults {
        params.insert(k.to_string(), parse_rat(v, false).expect("valid default"));
    }
    for (k, v) in overrides {
        if !params.contains_key(k) {
            return Err(CliError::UnknownParam(k.clone(), name.into()));
        }
        let r = parse_rat(v, false).map_err(|e| CliError::InvalidParam(k.clone(), e.to_string()))?;
        params.insert(k.clone(), r);
    }
    let start = Instant::now();
    let assertions = (sc.run)(&params, seed).map_err(|e| CliError::InvalidParam(name.into(), e.to_string()))?;
    Ok(Report {
        scenario: name.into(),
        criterion: sc.criterion,
        seed,
        params,
        assertions,
        wall_ms: start.elapsed().as_millis(),
    })
}

fn cubeface_census(p: &Params, _seed: u64) -> Fallible<Vec<Assertion>> {
    let dims: Vec<usize> = match param_int(p, "n")? {
        0 => vec![2, 3],
        n @ 1..=3 => vec![n as usize],
        _ => return Err("n must be 0, 1, 2 or 3".into()),
    };
    let cases: Vec<(usize, usize)> = dims.iter().flat_map(|&n| (2..=1usize << n).map(move |i| (n, i))).collect();
    Ok(cases
        .par_iter()
        .map(|&(n, i)| {
            Assertion::attempt(format!("cubeface n={n} i={i}"), || {
                let b = cube_face_construction(n, i)?;
                let c = check_lattice_free(&b)?;
                let ok = b.n_facets() == i && c.is_lattice_free() && c.is_maximal();
                Ok((ok, json!({ "facets": b.n_facets(), "certificate": cert_json(&c) })))
            })
        })
        .collect())
}

fn split_vs_triangles(p: &Params, _seed: u64) -> Fallible<Vec<Assertion>> {
    let count = param_count(p, "triangles")? as usize;
    let t_max = param_count(p, "t_max")?;
    if t_max < 2 {
        return Err("t_max must be at least 2".into());
    }
    let f = fvec(&[(1, 2), (1, 2)]);
    let split = split_slab();
    let mut out: Vec<Assertion> = triangles_around_half(count)
        .par_iter()
        .enumerate()
        .map(|(k, tri)| {
            Assertion::attempt(format!("triangle {k} is infinitely weak against the split"), || {
                let c = check_lattice_free(tri)?;
                let r = rho_f(tri, &split, &f)?;
                let ok = tri.interior_contains(&f)
                    && c.is_lattice_free()
                    && r.value == StrengthValue::Infinite
                    && matches!(r.witness, StrengthWitness::Ray(_));
                let verts: Vec<Value> = tri.vertices.iter().map(|v| vec_json(v)).collect();
                Ok((ok, json!({ "vertices": verts, "rho": strength_json(&r) })))
            })
        })
        .collect();

    let cols = vec![ivec(&[0, 1]), ivec(&[1, 0]), ivec(&[-1, 0])];
    let steps: Vec<Fallible<(Rat, RatVec, bool)>> = (1..=t_max)
        .into_par_iter()
        .map(|t| {
            let b = receding_apex_body(t)?;
            let d = f_metric(&b, &split, &f)?.dist_sq;
            let c = intersection_cut(&b, &cols, &f)?.coeffs;
            Ok((d, c, contains(&split, &b) && b.n_facets() == 3))
        })
        .collect();
    let limit = intersection_cut(&split, &cols, &f)?.coeffs;
    let steps: Vec<(Rat, RatVec, bool)> = steps.into_iter().collect::<Fallible<_>>()?;
    let dists: Vec<&Rat> = steps.iter().map(|s| &s.0).collect();
    out.push(Assertion::new(
        "receding bodies are three-facet subsets of the split",
        steps.iter().all(|s| s.2),
        json!({ "t_max": t_max }),
    ));
    out.push(Assertion::new(
        "f-distance to the split strictly decreases",
        dists.windows(2).all(|w| w[1] < w[0]),
        json!({ "dist_sq_first": rat_json(dists[0]), "dist_sq_last": rat_json(dists[dists.len() - 1]) }),
    ));
    let dev: Vec<RatVec> = steps.iter().map(|s| s.1.iter().zip(&limit).map(|(a, b)| (a - b).abs()).collect()).collect();
    let coordinatewise = dev.windows(2).all(|w| w[1].iter().zip(&w[0]).all(|(a, b)| a <= b));
    let max_dev: Vec<Rat> = dev.iter().map(|d| d.iter().max().cloned().unwrap_or_else(Rat::zero)).collect();
    let shrinking = max_dev.windows(2).all(|w| w[1] < w[0]);
    let last = &max_dev[max_dev.len() - 1];
    let vanishing = last * Rat::from_integer(t_max.into()) <= max_dev[0];
    out.push(Assertion::new(
        "cut coefficients converge monotonically to the split cut",
        coordinatewise && shrinking && vanishing,
        json!({
            "limit": vec_json(&limit),
            "first": vec_json(&steps[0].1),
            "last": vec_json(&steps[steps.len() - 1].1),
            "max_deviation_last": rat_json(last),
        }),
    ));
    Ok(out)
}

fn rho_vs_threshold(p: &Params, seed: u64) -> Fallible<Vec<Assertion>> {
    let count = param_count(p, "count")?;
    let tol = p["tol"].clone();
    if !tol.is_positive() || tol >= Rat::one() {
        return Err("tol must lie in (0, 1)".into());
    }
    Ok((0..count)
        .into_par_iter()
        .map(|i| {
            Assertion::attempt(format!("triple {i}"), || {
                let mut rng = stream(seed, i);
                let n = dim(&mut rng);
                let (b, l, f) = triple(&mut rng, n);
                let rho = rho_f(&b, &l, &f)?.value.finite().cloned().ok_or("strength is not finite")?;
                let thr = containment_threshold(&b, &l, &f, &tol).ok_or("no containment threshold")?;
                let close = (&thr - &rho).abs() <= &tol * &rho;
                let exact = contains(&homothety(&b, &f, &rho)?, &l);
                Ok((close && exact, json!({ "n": n, "rho": rat_json(&rho), "threshold": rat_json(&thr) })))
            })
        })
        .collect())
}

fn sandwich_chain(p: &Params, seed: u64) -> Fallible<Vec<Assertion>> {
    let count = param_count(p, "count")?;
    let max_family = param_count(p, "max_family")?.max(1) as usize;
    Ok((0..count)
        .into_par_iter()
        .map(|i| {
            Assertion::attempt(format!("family {i}"), || {
                let mut rng = stream(seed, i);
                let n = dim(&mut rng);
                let l = polytope(&mut rng, n);
                let f = l.vertex_centroid();
                let k = rng.gen_range(1..=max_family);
                let family: Vec<Polyhedron> = (0..k).map(|_| centered_at(&polytope(&mut rng, n), &f)).collect();
                let rep = sandwich(&family, &l, &f)?;
                Ok((
                    rep.consistent(),
                    json!({
                        "n": n,
                        "family": k,
                        "upper": strength_str(&rep.upper),
                        "lower": strength_str(&rep.lower.bound),
                        "N": rep.n,
                    }),
                ))
            })
        })
        .collect())
}

fn truncated_cones(p: &Params, seed: u64) -> Fallible<Vec<Assertion>> {
    let count = param_count(p, "count")?;
    Ok((0..count)
        .into_par_iter()
        .map(|i| {
            Assertion::attempt(format!("truncated cone {i}"), || {
                let mut rng = stream(seed, i);
                let n = dim(&mut rng);
                let (t, f) = random_truncated_cone(&mut rng, n)?;
                let s = truncated_cone_shrink(&t, &f)?;
                let inner = contains(&s.polytope, &homothety(&t.hull, &f, &frac(1, 4))?);
                let outer = contains(&t.hull, &s.polytope);
                let ok = s.mu >= frac(1, 3) && inner && outer;
                Ok((ok, json!({ "n": n, "mu": rat_json(&s.mu), "alpha": rat_json(&t.alpha), "facets": s.polytope.n_facets() })))
            })
        })
        .collect())
}

fn lift_report(n: usize, source: &str, l: &Polyhedron, f: &[Rat], gamma: &Rat, d: &Polyhedron, t: i64) -> Fallible<(bool, Value)> {
    let out = lift_to_nplus1(l, f, gamma, d, t)?;
    let free = check_lattice_free(&out.b)?.is_lattice_free();
    let few = out.b.n_facets() <= out.m + 1;
    let inside = contains(&out.b, &homothety(l, f, &(gamma / int(4)))?);
    Ok((
        free && few && inside,
        json!({
            "n": n,
            "source": source,
            "m": out.m,
            "facets": out.b.n_facets(),
            "case": format!("{:?}", out.case),
            "gamma": rat_json(gamma),
            "t": t,
        }),
    ))
}

/// Even indices take the normalized input of the approximation pipeline,
/// odd ones a body whose shrunken copy crosses the slicing level.
fn lifting(p: &Params, seed: u64) -> Fallible<Vec<Assertion>> {
    let count = param_count(p, "count")?;
    let attempts = param_count(p, "attempts")?;
    Ok((0..count)
        .into_par_iter()
        .map(|i| {
            Assertion::attempt(format!("lift {i}"), || {
                let mut rng = stream(seed, i);
                let n = 2 + (i / 2 % 2) as usize;
                if i % 2 == 1 {
                    let (l, f, gamma, d, t) = random_lift_input(&mut rng, n)?;
                    return lift_report(n, "crossing", &l, &f, &gamma, &d, t);
                }
                for _ in 0..attempts {
                    let l = random_maximal_lattice_free(&mut rng, n)?;
                    let Some(f) = random_interior_point(&mut rng, &l, 7) else { continue };
                    let Some(inst) = prepare_lift(&l, &f)? else { continue };
                    return lift_report(n, "pipeline", &inst.l, &inst.f, &inst.gamma, &inst.d, inst.t);
                }
                Err("no instance needing a lift was drawn".into())
            })
        })
        .collect())
}

fn approximation(p: &Params, seed: u64) -> Fallible<Vec<Assertion>> {
    let count = param_count(p, "count")?;
    let per: Vec<Vec<Assertion>> = (0..count)
        .into_par_iter()
        .map(|i| {
            let mut rng = stream(seed, i);
            let n = dim(&mut rng);
            let drawn = (|| -> Fallible<(Polyhedron, RatVec)> {
                for _ in 0..64 {
                    let l = random_maximal_lattice_free(&mut rng, n)?;
                    if let Some(f) = random_interior_point(&mut rng, &l, 7) {
                        return Ok((l, f));
                    }
                }
                Err("no interior point drawn".into())
            })();
            let (l, f) = match drawn {
                Ok(x) => x,
                Err(e) => return vec![Assertion::new(format!("instance {i}"), false, json!({ "error": e.to_string() }))],
            };
            let flt = flatness_bound(n as u64);
            let any = Assertion::attempt(format!("instance {i} any-f"), || {
                let a = approximate_any_f(&l, &f)?;
                let bound = int(4) * &flt;
                let ok = a.facets <= (1 << (n - 1)) + 1 && a.factor <= bound;
                Ok((ok, json!({ "n": n, "L_facets": l.n_facets(), "f": vec_json(&f), "facets": a.facets, "factor": rat_json(&a.factor), "bound": rat_json(&bound) })))
            });
            let fixed = Assertion::attempt(format!("instance {i} fixed-f"), || {
                let a = approximate_fixed_f(&l, &f)?;
                let s = Rat::from_integer(denominator(&f));
                let bound = &flt * Rat::from_integer(4i64.pow(n as u32 - 1).into()) * &s;
                let ok = a.facets <= n + 1 && a.factor <= bound;
                Ok((ok, json!({ "n": n, "L_facets": l.n_facets(), "f": vec_json(&f), "facets": a.facets, "factor": rat_json(&a.factor), "bound": rat_json(&bound) })))
            });
            vec![any, fixed]
        })
        .collect();
    Ok(per.into_iter().flatten().collect())
}

fn inapprox(p: &Params, seed: u64) -> Fallible<Vec<Assertion>> {
    let samples = param_count(p, "samples")?;
    let points = [fvec(&[(1, 2), (1, 2)]), fvec(&[(1, 3), (2, 3)]), fvec(&[(1, 2), (1, 3), (1, 5)])];
    let cases: Vec<(usize, RatVec, i64)> =
        points.iter().enumerate().flat_map(|(k, f)| [2i64, 10].map(|a| (k, f.clone(), a))).collect();
    let per: Vec<Vec<Assertion>> = cases
        .par_iter()
        .map(|(k, f, a)| {
            let alpha = int(*a);
            let label = format!("tower f={} alpha={a}", latcut_geometry::rat::fmt_vec(f));
            let tower = match simplex_tower(f, &alpha) {
                Ok(t) => t,
                Err(e) => return vec![Assertion::new(label, false, json!({ "error": e.to_string() }))],
            };
            let n = f.len();
            let structure = Assertion::attempt(format!("{label}: segments meet the shrunken copy"), || {
                let chk = tower.verify()?;
                let cert = check_lattice_free(&tower.l)?;
                let ok = chk.all() && cert.is_maximal() && tower.l.n_facets() == n + 1 && chk.segments;
                let zs: Vec<Value> = tower.zs.iter().map(|z| vec_json(z)).collect();
                Ok((ok, json!({ "check": format!("{chk:?}"), "facets": tower.l.n_facets(), "witnesses": zs })))
            });
            let sampled = Assertion::attempt(format!("{label}: sampled sets with {n} facets have strength at least alpha"), || {
                let mut rng = stream(seed, *k as u64 * 100 + *a as u64);
                let mut weakest = StrengthValue::Infinite;
                for _ in 0..samples {
                    let b = random_small_lattice_free(&mut rng, n, f)?;
                    let r = rho_f(&b, &tower.l, f)?.value;
                    weakest = weakest.min(r);
                }
                let ok = weakest >= StrengthValue::Finite(alpha.clone());
                Ok((ok, json!({ "samples": samples, "min_rho": strength_str(&weakest) })))
            });
            vec![structure, sampled]
        })
        .collect();
    let mut out: Vec<Assertion> = per.into_iter().flatten().collect();

    let interval = Polyhedron::from_inequalities(&[(ivec(&[1]), int(1)), (ivec(&[-1]), int(0))])?;
    let diamond = cube_face_construction(2, 4)?;
    let diamond_witnesses = match check_lattice_free(&diamond)?.maximal {
        Maximality::Yes { facet_witnesses } => facet_witnesses,
        _ => return Err("diamond is not certified maximal".into()),
    };
    let bases = [
        ("unit interval", interval, fvec(&[(1, 2)]), vec![ivec(&[0]), ivec(&[1])], frac(1, 3)),
        ("diamond", diamond, fvec(&[(1, 2), (1, 2)]), diamond_witnesses, frac(1, 2)),
    ];
    for (name, base, c, zs, mu) in bases {
        out.push(Assertion::attempt(format!("pyramid over the {name}: cross-section and q-point identities"), || {
            let eps = shrink_epsilon(&base, &c, &zs)?;
            let pyr = inapprox_pyramid(&base, &c, &zs, &eps, &mu)?;
            let chk = pyr.verify()?;
            let ok = chk.all() && pyr.lp.n_facets() == base.n_facets() + 1;
            Ok((ok, json!({ "eps": rat_json(&eps), "mu": rat_json(&mu), "lambda": rat_json(&pyr.lambda), "check": format!("{chk:?}") })))
        }));
    }
    Ok(out)
}

fn body<R: Rng>(rng: &mut R, n: usize) -> (Polyhedron, RatVec) {
    let b = polytope(rng, n);
    let f = b.vertex_centroid();
    (b, f)
}

fn gauge_metric(p: &Params, seed: u64) -> Fallible<Vec<Assertion>> {
    let count = param_count(p, "count")?;
    type Check = fn(&mut rand_chacha::ChaCha8Rng) -> Fallible<bool>;
    let checks: [(&str, u64, Check); 4] = [
        ("gauge homogeneity", 1, |rng| {
            let n = dim(rng);
            let (b, f) = body(rng, n);
            let r = point(rng, n, 5, 3);
            let lam = frac(rng.gen_range(0..40), 7);
            Ok(gauge(&b, &f, &scale(&lam, &r))? == &lam * gauge(&b, &f, &r)?)
        }),
        ("gauge subadditivity", 2, |rng| {
            let n = dim(rng);
            let (b, f) = body(rng, n);
            let (r1, r2) = (point(rng, n, 5, 3), point(rng, n, 5, 3));
            Ok(gauge(&b, &f, &add(&r1, &r2))? <= gauge(&b, &f, &r1)? + gauge(&b, &f, &r2)?)
        }),
        ("membership duality", 3, |rng| {
            let n = dim(rng);
            let (b, f) = body(rng, n);
            let x = point(rng, n, 5, 2);
            let g = gauge(&b, &f, &sub(&x, &f))?;
            Ok((g <= Rat::one()) == b.contains_point(&x) && (g < Rat::one()) == b.interior_contains(&x))
        }),
        ("f-metric axioms", 4, |rng| {
            let (a, f) = body(rng, 2);
            let b = centered_at(&polytope(rng, 2), &f);
            let c = centered_at(&polytope(rng, 2), &f);
            let ab = f_metric(&a, &b, &f)?.dist_sq;
            let ba = f_metric(&b, &a, &f)?.dist_sq;
            let bc = f_metric(&b, &c, &f)?.dist_sq;
            let ac = f_metric(&a, &c, &f)?.dist_sq;
            let aa = f_metric(&a, &a, &f)?.dist_sq;
            let identity = aa.is_zero() && (ab.is_zero() == a.same_set(&b));
            Ok(!ab.is_negative() && ab == ba && identity && sqrt_le_sum(&ac, &ab, &bc))
        }),
    ];
    Ok(checks
        .iter()
        .map(|(name, tag, check)| {
            let results: Vec<(u64, Result<bool, String>)> = (0..count)
                .into_par_iter()
                .map(|i| {
                    let mut rng = stream(seed ^ (tag << 56), i);
                    (i, check(&mut rng).map_err(|e| e.to_string()))
                })
                .collect();
            let bad: Vec<&(u64, Result<bool, String>)> = results.iter().filter(|(_, r)| !matches!(r, Ok(true))).collect();
            let first = bad.first().map(|(i, r)| json!({ "index": i, "error": r.as_ref().err() }));
            Assertion::new(
                format!("{name}: {count} exact checks"),
                bad.is_empty(),
                json!({ "checks": count, "violations": bad.len(), "first_violation": first }),
            )
        })
        .collect())
}
