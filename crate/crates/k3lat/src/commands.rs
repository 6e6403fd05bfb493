//! Subcommand bodies. Each returns the JSON document that the binary prints.

use k3lat_core::exactmath::parse_rational;
use k3lat_core::gradedring::{hilbert_coeffs, solve_branch_degree, BranchDegreeProblem, GradedPresentation};
use k3lat_core::lattice::{self, discriminant_group};
use k3lat_core::modulimap::{self, TriplePoint};
use k3lat_core::sextic::{self, Point};
use k3lat_core::weierstrass::{self, Place};
use k3lat_core::{BigInt, BigRational, Lattice, MultiPoly, Vars};
use serde_json::{json, Value};

use crate::error::{CliError, Result};
use crate::jsonio::{int_to_json, matrix_to_json, vector_from_json, vector_to_json, vectors_from_json};
use crate::latexpr::parse_lattice;
use crate::polytext::{identifiers, parse_poly};

fn strings<T: ToString>(items: impl IntoIterator<Item = T>) -> Vec<String> {
    items.into_iter().map(|x| x.to_string()).collect()
}

fn lattice_json(l: &Lattice) -> Result<Value> {
    let group = discriminant_group(l).ok();
    let nikulin = lattice::nikulin_triple(l)
        .ok()
        .map(|t| json!({ "delta": t.delta, "ell": t.ell, "signature": [t.signature.0, t.signature.1] }));
    Ok(json!({
        "rank": l.rank(),
        "gram": matrix_to_json(l.gram()),
        "det": int_to_json(&l.det()),
        "even": l.is_even(),
        "signature": l.signature().ok().map(|(p, n)| [p, n]),
        "discriminant_group": group.map(|g| json!({ "order": int_to_json(&g.order()), "divisors": strings(&g.divisors) })),
        "nikulin": nikulin,
    }))
}

pub fn lattice_info(expr: &str) -> Result<Value> {
    lattice_json(&parse_lattice(expr)?)
}

pub fn lattice_gram(expr: &str) -> Result<Value> {
    Ok(matrix_to_json(parse_lattice(expr)?.gram()))
}

pub fn lattice_roots(expr: &str) -> Result<Value> {
    let roots = lattice::roots(&parse_lattice(expr)?)?;
    Ok(json!({ "count": roots.len(), "roots": roots.iter().map(|r| vector_to_json(r)).collect::<Vec<_>>() }))
}

pub fn lattice_isometric(a: &str, b: &str) -> Result<Value> {
    let (la, lb) = (parse_lattice(a)?, parse_lattice(b)?);
    Ok(json!({
        "isometric": lattice::classify_even_2elem_isometric(&la, &lb)?,
        "left": lattice_json(&la)?["nikulin"],
        "right": lattice_json(&lb)?["nikulin"],
    }))
}

pub fn lattice_complement(expr: &str, vectors: &str) -> Result<Value> {
    let l = parse_lattice(expr)?;
    let v = crate::jsonio::parse(vectors)?;
    // a single vector or a list of vectors
    let vs = if v.as_array().is_some_and(|a| a.iter().all(|x| !x.is_array())) {
        vec![vector_from_json(&v)?]
    } else {
        vectors_from_json(&v)?
    };
    let c = lattice::orthogonal_complement(&l, &vs)?;
    Ok(json!({
        "basis": c.basis.iter().map(|b| vector_to_json(b)).collect::<Vec<_>>(),
        "complement": lattice_json(&c.lattice)?,
    }))
}

fn point_from_json(v: &Value) -> Result<Point> {
    let p: [BigInt; 3] = vector_from_json(v)?
        .try_into()
        .map_err(|_| CliError::Input(format!("a point needs three coordinates, found `{v}`")))?;
    sextic::validate_point(&p)?;
    Ok(p)
}

fn point_json(p: &Point) -> Value {
    vector_to_json(p)
}

pub fn sextic_sb_dim(points: &str) -> Result<Value> {
    let pts = vectors_from_json(&crate::jsonio::parse(points)?)?
        .iter()
        .map(|p| point_from_json(&vector_to_json(p)))
        .collect::<Result<Vec<_>>>()?;
    let space = sextic::sb_space(&pts)?;
    Ok(json!({
        "points": pts.iter().map(point_json).collect::<Vec<_>>(),
        "dimension": space.dimension(),
        "basis": strings(space.basis()),
    }))
}

const INDEXED: [&str; 3] = ["x1", "x2", "x3"];

/// Parses a plane sextic written in `x, y, z` or in `x1, x2, x3`.
pub fn parse_plane_poly(text: &str) -> Result<MultiPoly> {
    let u = sextic::vars();
    let ids = identifiers(text);
    if !ids.is_empty() && ids.iter().all(|i| INDEXED.contains(&i.as_str())) {
        let p = parse_poly(text, &Vars::new(&INDEXED))?;
        let terms = p.terms().map(|(m, c)| (m.exponents().to_vec(), c.clone())).collect::<Vec<_>>();
        return Ok(MultiPoly::from_terms(&u, terms)?);
    }
    Ok(parse_poly(text, &u)?)
}

fn indexed_form(p: &MultiPoly) -> String {
    let terms = p.terms().map(|(m, c)| (m.exponents().to_vec(), c.clone())).collect::<Vec<_>>();
    MultiPoly::from_terms(&Vars::new(&INDEXED), terms).expect("three variables").to_string()
}

pub fn sextic_d4_check(poly: &str, point: &str) -> Result<Value> {
    let f = parse_plane_poly(poly)?;
    let p = point_from_json(&crate::jsonio::parse(point)?)?;
    let d4 = sextic::d4_at(&f, &p)?;
    Ok(json!({
        "poly": f.to_string(),
        "poly_indexed": indexed_form(&f),
        "point": point_json(&p),
        "d4": d4,
    }))
}

fn linear_form(coeffs: &[BigRational], names: &[String]) -> String {
    let u = Vars::new(&names.iter().map(String::as_str).collect::<Vec<_>>());
    let terms = coeffs.iter().enumerate().map(|(i, c)| {
        let mut e = vec![0; names.len()];
        e[i] = 1;
        (e, c.clone())
    });
    MultiPoly::from_terms(&u, terms.collect::<Vec<_>>()).expect("matching arity").to_string()
}

pub fn sextic_general_position() -> Result<Value> {
    let r = sextic::general_position_check()?;
    let names: Vec<String> = r.family.iter().map(sextic::coefficient_name).collect();
    Ok(json!({
        "family": names,
        "relations": r.relations.iter().map(|v| linear_form(v, &names)).collect::<Vec<_>>(),
        "expected": r.expected.iter().map(|e| json!({ "relation": e.label, "forced": e.forced })).collect::<Vec<_>>(),
        "surviving": strings(&r.surviving),
        "surviving_over_z2": r.quotients.iter().map(|q| q.as_ref().map(ToString::to_string)).collect::<Vec<_>>(),
        "holds": r.holds(),
    }))
}

pub fn sextic_conic_product(q1: &str, q2: &str, q3: &str) -> Result<Value> {
    let qs = [sextic::parse_conic(q1)?, sextic::parse_conic(q2)?, sextic::parse_conic(q3)?];
    let cp = sextic::conic_product_coords(&qs[0], &qs[1], &qs[2]);
    let coords = sextic::base_space()?.coordinates(&cp.product)?;
    Ok(json!({
        "conics": qs.iter().map(|q| q.polynomial().to_string()).collect::<Vec<_>>(),
        "coords": {
            "y^3*z^3": cp.coords[0].to_string(),
            "x^3*z^3": cp.coords[1].to_string(),
            "x^3*y^3": cp.coords[2].to_string(),
            "permanent": cp.coords[3].to_string(),
        },
        "product": cp.product.to_string(),
        "in_base_space": coords.is_some(),
        "base_coordinates": coords.map(strings),
    }))
}

pub fn modulimap_eval(triple: &str) -> Result<Value> {
    let t = TriplePoint::parse(triple)?;
    let u = modulimap::u_map(&t);
    Ok(json!({
        "triple": t.pairs().iter().map(strings).collect::<Vec<_>>(),
        "u": u.to_string(),
    }))
}

pub fn modulimap_verify() -> Result<Value> {
    let r = modulimap::verify_contractions()?;
    let contractions: Vec<Value> = r
        .contractions
        .iter()
        .map(|c| {
            json!({
                "case": c.label,
                "images": strings(&c.images),
                "claimed": strings(&c.claimed),
                "factor": c.factor.as_ref().map(ToString::to_string),
                "holds": c.holds(),
            })
        })
        .collect();
    Ok(json!({
        "contractions": contractions,
        "quadric": r.quadric.to_string(),
        "quadric_factors": strings(&r.quadric_factors),
        "quadric_holds": r.quadric_holds,
        "holds": r.holds(),
    }))
}

fn rational_arg(name: &str, s: &str) -> Result<BigRational> {
    parse_rational(s).ok_or_else(|| CliError::Input(format!("--{name}: expected a rational, found `{s}`")))
}

fn place_factor(place: &Place) -> Option<String> {
    let g = place.polynomial()?;
    let u = Vars::new(&["X"]);
    let terms = g.coeffs().iter().enumerate().map(|(k, c)| (vec![k as u32], c.clone()));
    Some(MultiPoly::from_terms(&u, terms.collect::<Vec<_>>()).expect("arity 1").to_string())
}

pub fn weierstrass_classify(t: [&str; 4]) -> Result<Value> {
    let mut vals = Vec::with_capacity(4);
    for (name, s) in weierstrass::PARAMETERS.iter().zip(t) {
        vals.push(rational_arg(name, s)?);
    }
    let vals: [BigRational; 4] = vals.try_into().expect("four parameters");
    let fibers = weierstrass::classify(&weierstrass::family_at(&vals)?)?;
    let rows: Vec<Value> = fibers
        .iter()
        .map(|f| {
            json!({
                "place": f.place.to_string(),
                "factor": place_factor(&f.place),
                "degree": f.place.degree(),
                "va": f.va.to_string(),
                "vb": f.vb.to_string(),
                "vd": f.vd,
                "type": f.kind.to_string(),
            })
        })
        .collect();
    let params: serde_json::Map<String, Value> =
        weierstrass::PARAMETERS.iter().zip(&vals).map(|(n, v)| (n.to_string(), Value::String(v.to_string()))).collect();
    Ok(json!({ "parameters": params, "fibers": rows, "summary": weierstrass::fiber_summary(&fibers) }))
}

pub fn weierstrass_family_invariants(emit_polys: bool) -> Result<Value> {
    let inv = weierstrass::family_invariants()?;
    let deg = |p: &MultiPoly| p.weighted_degree(&weierstrass::PARAMETER_WEIGHTS).ok();
    let mut out = json!({
        "x_valuation": inv.x_valuation,
        "w_exponent": inv.w_exponent,
        "r20": inv.r20.to_string(),
        "weighted_degrees": { "delta120": deg(&inv.delta120), "r20": deg(&inv.r20), "k60": deg(&inv.k60) },
        "checks": inv.checks().into_iter().map(|(n, ok)| json!({ "check": n, "holds": ok })).collect::<Vec<_>>(),
        "holds": inv.holds(),
    });
    if emit_polys {
        out["polynomials"] = json!({
            "delta": inv.delta.to_string(),
            "quintic": inv.quintic.to_string(),
            "delta120": inv.delta120.to_string(),
            "r20_resultant": inv.r20_resultant.to_string(),
            "k60": inv.k60.to_string(),
        });
    }
    Ok(out)
}

pub fn gradedring_hilbert(weights: &[u32], relations: &[u32], upto: usize) -> Result<Value> {
    let p = GradedPresentation::new(weights.to_vec(), relations.to_vec())?;
    let h = hilbert_coeffs(&p, upto)?;
    Ok(json!({ "weights": weights, "relations": relations, "upto": upto, "coefficients": strings(&h) }))
}

pub fn gradedring_branch_degree(orb: i64, coarse: i64, scale: i64) -> Result<Value> {
    let d = solve_branch_degree(&BranchDegreeProblem { orb_can: orb, coarse_can: coarse, pullback_scale: scale })?;
    Ok(json!({ "orb": orb, "coarse": coarse, "scale": scale, "degH": d }))
}
