//! Named verification checks and the harness that runs them.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use k3lat_core::gradedring::{component_degree_sum, hilbert_coeffs, solve_branch_degree, BranchDegreeProblem, GradedPresentation};
use k3lat_core::lattice::{self, d4_quartet, NikulinTriple};
use k3lat_core::modulimap::verify_contractions;
use k3lat_core::sextic::{self, ConicInPencil};
use k3lat_core::weierstrass::{self, kodaira_from_orders, KodairaType, Place, Valuation};
use k3lat_core::{BigInt, BigRational, Lattice, MultiPoly};
use num_traits::{One, Signed, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::{CliError, Result};

/// Seed for the sampled checks, fixed so that reports are reproducible.
pub const SAMPLE_SEED: u64 = 0x006b_336c_6174;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Options {
    /// Truncation degree for the Hilbert series checks.
    pub upto: usize,
}

impl Default for Options {
    fn default() -> Self {
        Options { upto: 100 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Error,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Error => "ERROR",
        }
    }
}

#[derive(Clone, Debug)]
pub struct CheckResult {
    pub name: &'static str,
    pub status: Status,
    /// Computed and expected values plus the `claim` being checked.
    pub details: Value,
    pub elapsed_ms: u64,
}

impl CheckResult {
    pub fn to_json(&self) -> Value {
        json!({
            "name": self.name,
            "status": self.status.as_str(),
            "details": self.details,
            "elapsed_ms": self.elapsed_ms,
        })
    }
}

struct Outcome {
    passed: bool,
    details: Value,
}

pub struct Check {
    pub name: &'static str,
    pub claim: &'static str,
    run: fn(&Options) -> Result<Outcome>,
}

pub static REGISTRY: &[Check] = &[
    Check { name: "sb-dim", claim: "sextics with D4 points at the four base points form a 4-dimensional space; 10 for three points, 22 for one", run: sb_dim },
    Check { name: "general-position", claim: "a fourth D4 point collinear with two coordinate points forces four relations and a factor z^2", run: general_position },
    Check { name: "conic-product", claim: "products of three pencil conics have coordinates (column products, permanent), symmetric in the factors", run: conic_product },
    Check { name: "lattice-P", claim: "the glued lattice is even of rank 17, |det| 32, signature (1,16), delta 1, l 5", run: lattice_p },
    Check { name: "lattice-Q", claim: "I(2,3)(2) is even of signature (2,3) with delta 1 and l 5", run: lattice_q },
    Check { name: "e8e8-isometry", claim: "<2>+E8+E8 and U+E8+E7 have equal (delta, l, signature)", run: e8e8_isometry },
    Check { name: "complement-e3", claim: "the complement of e3 in I(2,3)(2) has delta 1, l 4, signature (2,2)", run: complement_e3 },
    Check { name: "complement-u2u2", claim: "some (-2)-vector of I(2,3)(2) has complement with the invariants of U(2)+U(2)", run: complement_u2u2 },
    Check { name: "modulimap-contractions", claim: "the three contractions of the big diagonal hold up to a common polynomial factor", run: modulimap_contractions },
    Check { name: "quadric-factorization", claim: "u1*u4 - u2*u3 is the product of three 2x2 minors", run: quadric_factorization },
    Check { name: "kodaira-conditions", claim: "orders (3,>=5) give III*, (>=4,5) give II*, (>=4,>=6) are not rational double points", run: kodaira_conditions },
    Check { name: "rdp-locus", claim: "non-RDP fibers occur exactly on t10 = t12 = 0, at x = 0", run: rdp_locus },
    Check { name: "family-invariants", claim: "discriminant of the family factors as r20^3 * k60 with weighted degrees 120, 20, 60", run: family_invariants },
    Check { name: "hilbert-main", claim: "dimensions of the (2,2,2,2,11)/(22) ring are C(m+3,3) in degrees 2m and 2m+11", run: hilbert_main },
    Check { name: "hilbert-siegel", claim: "the (4,6,10,12,35)/(70) ring has one form of weight 35 and 70 = 10 + 60", run: hilbert_siegel },
    Check { name: "branch-degree-11", claim: "the branch divisor of the quotient map has degree 11 = 9*1 + 2", run: branch_degree_11 },
    Check { name: "branch-degree-70", claim: "the branch divisor of the weighted model has degree 70 = 10 + 60", run: branch_degree_70 },
    Check { name: "roots-d4", claim: "A1 has 2 roots and D4 has 24", run: roots_d4 },
    Check { name: "roots-e8", claim: "E8 has 240 roots", run: roots_e8 },
    Check { name: "k3-lattice", claim: "E8+E8+U+U+U is even, unimodular, of signature (3,19)", run: k3_lattice },
];

/// Checks named in `only`, in registry order; all checks for `None`.
pub fn select(only: Option<&[String]>) -> Result<Vec<&'static Check>> {
    let Some(names) = only else {
        return Ok(REGISTRY.iter().collect());
    };
    if let Some(bad) = names.iter().find(|n| !REGISTRY.iter().any(|c| c.name == n.as_str())) {
        return Err(CliError::UnknownCheck(bad.clone()));
    }
    Ok(REGISTRY.iter().filter(|c| names.iter().any(|n| n == c.name)).collect())
}

/// Runs the checks in parallel; results come back in input order.
pub fn run_checks(checks: &[&'static Check], opts: &Options) -> Vec<CheckResult> {
    checks.par_iter().map(|c| run_one(c, opts)).collect()
}

pub fn run_one(check: &'static Check, opts: &Options) -> CheckResult {
    let start = Instant::now();
    let outcome = catch_unwind(AssertUnwindSafe(|| (check.run)(opts)));
    let elapsed_ms = start.elapsed().as_millis() as u64;
    let (status, mut details) = match outcome {
        Ok(Ok(o)) => (if o.passed { Status::Pass } else { Status::Fail }, o.details),
        Ok(Err(e)) => (Status::Error, json!({ "error": e.to_string() })),
        Err(panic) => {
            let msg = panic
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| panic.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            (Status::Error, json!({ "error": msg }))
        }
    };
    if let Value::Object(m) = &mut details {
        m.insert("claim".into(), Value::String(check.claim.into()));
    }
    CheckResult { name: check.name, status, details, elapsed_ms }
}

/// 0 if every check passed, 1 otherwise.
pub fn exit_code(results: &[CheckResult]) -> i32 {
    if results.iter().all(|r| r.status == Status::Pass) {
        0
    } else {
        1
    }
}

fn count(results: &[CheckResult], s: Status) -> usize {
    results.iter().filter(|r| r.status == s).count()
}

pub fn render_json(results: &[CheckResult]) -> Value {
    json!({
        "schema": 1,
        "results": results.iter().map(CheckResult::to_json).collect::<Vec<_>>(),
        "summary": {
            "passed": count(results, Status::Pass),
            "failed": count(results, Status::Fail),
            "errors": count(results, Status::Error),
        },
    })
}

/// One line per check; failing checks are followed by their details.
/// Timings are left out so that the text is reproducible.
pub fn render_text(results: &[CheckResult]) -> String {
    let mut out = String::new();
    for r in results {
        let claim = r.details.get("claim").and_then(Value::as_str).unwrap_or("");
        out.push_str(&format!("{:<5} {:<23} {}\n", r.status.as_str(), r.name, claim));
        if r.status != Status::Pass {
            let mut d = r.details.clone();
            if let Value::Object(m) = &mut d {
                m.remove("claim");
            }
            out.push_str(&format!("      {d}\n"));
        }
    }
    out.push_str(&format!(
        "{} passed, {} failed, {} errors\n",
        count(results, Status::Pass),
        count(results, Status::Fail),
        count(results, Status::Error)
    ));
    out
}

fn outcome(passed: bool, details: Value) -> Result<Outcome> {
    Ok(Outcome { passed, details })
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

/// Numerator in `[-20, 20]`, denominator in `[1, 9]`.
pub fn random_rational(rng: &mut impl Rng) -> BigRational {
    BigRational::new(rng.gen_range(-20i64..=20).into(), rng.gen_range(1i64..=9).into())
}

fn triple_json(t: &NikulinTriple) -> Value {
    json!({ "delta": t.delta, "ell": t.ell, "signature": [t.signature.0, t.signature.1] })
}

fn lattice_summary(l: &Lattice) -> Result<Value> {
    let (p, n) = l.signature()?;
    Ok(json!({
        "rank": l.rank(),
        "even": l.is_even(),
        "det": l.det().to_string(),
        "signature": [p, n],
    }))
}

fn sb_dim(_: &Options) -> Result<Outcome> {
    let pts = sextic::base_points();
    let four = sextic::sb_space(&pts)?.dimension();
    let three = sextic::sb_space(&pts[..3])?;
    let one = sextic::sb_space(&pts[..1])?.dimension();
    // singular of order three at every coordinate point: no exponent above 3
    let expected_support: Vec<[u32; 3]> = sextic::monomials().into_iter().filter(|e| e.iter().all(|&k| k <= 3)).collect();
    let monomial_basis = three.basis().iter().all(|b| b.num_terms() == 1) && three.support() == expected_support;
    let names = |v: &[[u32; 3]]| v.iter().map(sextic::coefficient_name).collect::<Vec<_>>();
    outcome(
        four == 4 && three.dimension() == 10 && monomial_basis && one == 22,
        json!({
            "dimension": four,
            "three_point_dimension": three.dimension(),
            "three_point_support": names(&three.support()),
            "three_point_basis_is_monomial": monomial_basis,
            "one_point_dimension": one,
            "expected": {
                "dimension": 4,
                "three_point_dimension": 10,
                "three_point_support": names(&expected_support),
                "one_point_dimension": 22,
            },
        }),
    )
}

fn general_position(_: &Options) -> Result<Outcome> {
    let report = sextic::general_position_check()?;
    let forced: Vec<Value> = report.expected.iter().map(|r| json!({ "relation": r.label, "forced": r.forced })).collect();
    let quotients: Vec<Value> = report
        .quotients
        .iter()
        .map(|q| q.as_ref().map_or(Value::Null, |q| Value::String(q.to_string())))
        .collect();
    outcome(
        report.holds(),
        json!({
            "forced_relations": forced,
            "surviving_dimension": report.surviving.len(),
            "surviving_over_z2": quotients,
        }),
    )
}

fn random_conic(rng: &mut impl Rng) -> ConicInPencil {
    loop {
        let (a1, a2) = (random_rational(rng), random_rational(rng));
        let a3 = -(&a1 + &a2);
        if let Ok(q) = ConicInPencil::new(a1, a2, a3) {
            return q;
        }
    }
}

fn conic_product(_: &Options) -> Result<Outcome> {
    const SAMPLES: usize = 100;
    let mut rng = StdRng::seed_from_u64(SAMPLE_SEED);
    let space = sextic::sb_space(&sextic::base_points())?;
    let read = [[0, 3, 3], [3, 0, 3], [3, 3, 0], [2, 2, 2]];
    let (mut mismatches, mut asymmetric, mut outside) = (0, 0, 0);
    for _ in 0..SAMPLES {
        let qs = [random_conic(&mut rng), random_conic(&mut rng), random_conic(&mut rng)];
        let got = sextic::conic_product_coords(&qs[0], &qs[1], &qs[2]);
        let expanded = qs.iter().fold(MultiPoly::one(&sextic::vars()), |acc, q| &acc * &q.polynomial());
        if read.iter().zip(&got.coords).any(|(e, c)| expanded.coefficient(e) != *c) || expanded != got.product {
            mismatches += 1;
        }
        for [i, j, k] in [[0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]] {
            if sextic::conic_product_coords(&qs[i], &qs[j], &qs[k]) != got {
                asymmetric += 1;
            }
        }
        if !space.contains(&got.product)? {
            outside += 1;
        }
    }
    let example = sextic::conic_product_coords(
        &ConicInPencil::from_i64(1, -1, 0)?,
        &ConicInPencil::from_i64(0, 1, -1)?,
        &ConicInPencil::from_i64(1, 0, -1)?,
    );
    outcome(
        mismatches == 0 && asymmetric == 0 && outside == 0,
        json!({
            "samples": SAMPLES,
            "seed": SAMPLE_SEED,
            "coordinate_mismatches": mismatches,
            "asymmetric_permutations": asymmetric,
            "products_outside_space": outside,
            "example": {
                "conics": ["1,-1,0", "0,1,-1", "1,0,-1"],
                "coords": example.coords.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            },
        }),
    )
}

fn lattice_p(_: &Options) -> Result<Outcome> {
    let p = d4_quartet::p()?;
    let l = &p.lattice;
    let t = lattice::nikulin_triple(l)?;
    let passed = l.is_even()
        && l.rank() == 17
        && l.det().abs() == BigInt::from(32)
        && l.signature()? == (1, 16)
        && (t.delta, t.ell) == (1, 5);
    outcome(
        passed,
        json!({
            "lattice": lattice_summary(l)?,
            "index_over_base": p.index.to_string(),
            "nikulin": triple_json(&t),
            "expected": { "rank": 17, "abs_det": 32, "signature": [1, 16], "delta": 1, "ell": 5 },
        }),
    )
}

fn lattice_q(_: &Options) -> Result<Outcome> {
    let q = d4_quartet::q();
    let t = lattice::nikulin_triple(&q)?;
    outcome(
        q.is_even() && q.signature()? == (2, 3) && (t.delta, t.ell) == (1, 5),
        json!({
            "lattice": lattice_summary(&q)?,
            "nikulin": triple_json(&t),
            "expected": { "signature": [2, 3], "delta": 1, "ell": 5 },
        }),
    )
}

fn e8e8_isometry(_: &Options) -> Result<Outcome> {
    let a = Lattice::span(2).direct_sum(&Lattice::e8()).direct_sum(&Lattice::e8());
    let b = Lattice::u().direct_sum(&Lattice::e8()).direct_sum(&Lattice::e7());
    let same = lattice::classify_even_2elem_isometric(&a, &b)?;
    outcome(
        same,
        json!({
            "isometric": same,
            "left": triple_json(&lattice::nikulin_triple(&a)?),
            "right": triple_json(&lattice::nikulin_triple(&b)?),
        }),
    )
}

fn complement_e3(_: &Options) -> Result<Outcome> {
    let q = d4_quartet::q();
    let e3: Vec<BigInt> = [0, 0, 1, 0, 0].map(BigInt::from).to_vec();
    let c = lattice::orthogonal_complement(&q, &[e3])?.lattice;
    let t = lattice::nikulin_triple(&c)?;
    let reference = lattice::nikulin_triple(&Lattice::odd_unimodular(2, 2).rescale(2)?)?;
    outcome(
        c.is_even() && (t.delta, t.ell, t.signature) == (1, 4, (2, 2)) && t == reference,
        json!({
            "complement": lattice_summary(&c)?,
            "nikulin": triple_json(&t),
            "I(2,2)(2)": triple_json(&reference),
        }),
    )
}

/// Norm −2 vectors of `I_{2,3}(2)` with entries in `[−3, 3]`, in lexicographic order.
pub fn q_roots_in_box() -> Vec<Vec<BigInt>> {
    let mut out = Vec::new();
    let range = -3i64..=3;
    for a in range.clone() {
        for b in range.clone() {
            for c in range.clone() {
                for d in range.clone() {
                    for e in range.clone() {
                        if 2 * (a * a + b * b - c * c - d * d - e * e) == -2 {
                            out.push([a, b, c, d, e].map(BigInt::from).to_vec());
                        }
                    }
                }
            }
        }
    }
    out
}

fn complement_u2u2(_: &Options) -> Result<Outcome> {
    let q = d4_quartet::q();
    let u2 = Lattice::u().rescale(2)?;
    let target = lattice::nikulin_triple(&u2.direct_sum(&u2))?;
    let candidates = q_roots_in_box();
    let mut tried = 0;
    let mut witness = None;
    for v in &candidates {
        tried += 1;
        let c = lattice::orthogonal_complement(&q, std::slice::from_ref(v))?.lattice;
        if c.is_even() && lattice::nikulin_triple(&c)? == target {
            witness = Some((v.clone(), c));
            break;
        }
    }
    let found = witness.as_ref().map(|(v, c)| {
        json!({
            "vector": v.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
            "complement_gram": crate::jsonio::matrix_to_json(c.gram()),
        })
    });
    outcome(
        witness.is_some() && (target.delta, target.ell, target.signature) == (0, 4, (2, 2)),
        json!({
            "roots_in_box": candidates.len(),
            "roots_tried": tried,
            "witness": found,
            "U(2)+U(2)": triple_json(&target),
        }),
    )
}

fn modulimap_contractions(_: &Options) -> Result<Outcome> {
    let report = verify_contractions()?;
    let rows: Vec<Value> = report
        .contractions
        .iter()
        .map(|c| {
            json!({
                "case": c.label,
                "holds": c.holds(),
                "factor": c.factor.as_ref().map(|f| f.to_string()),
            })
        })
        .collect();
    outcome(report.contractions.iter().all(|c| c.holds()) && report.contractions.len() == 3, json!({ "contractions": rows }))
}

fn quadric_factorization(_: &Options) -> Result<Outcome> {
    let report = verify_contractions()?;
    outcome(
        report.quadric_holds,
        json!({
            "u1*u4 - u2*u3": report.quadric.to_string(),
            "factors": report.quadric_factors.iter().map(|f| f.to_string()).collect::<Vec<_>>(),
        }),
    )
}

/// Discriminant order forced by `(va, vb)` when no cancellation occurs.
fn generic_vd(va: Valuation, vb: Valuation) -> Valuation {
    let scale = |v: Valuation, k: u32| match v {
        Valuation::Finite(n) => Valuation::Finite(n * k),
        Valuation::Infinite => Valuation::Infinite,
    };
    scale(va, 3).min(scale(vb, 2))
}

fn kodaira_conditions(_: &Options) -> Result<Outcome> {
    use Valuation::{Finite, Infinite};
    let orders = |lo: u32, hi: u32| (lo..=hi).map(Finite).chain([Infinite]).collect::<Vec<_>>();
    let mut cases = Vec::new();
    for vb in orders(5, 9) {
        cases.push((Finite(3), vb, KodairaType::IIIStar));
    }
    for va in orders(4, 9) {
        cases.push((va, Finite(5), KodairaType::IIStar));
    }
    for va in orders(4, 9) {
        for vb in orders(6, 10) {
            if (va, vb) != (Infinite, Infinite) {
                cases.push((va, vb, KodairaType::NonRdp));
            }
        }
    }
    // just below the thresholds
    cases.push((Finite(3), Finite(4), KodairaType::IVStar));
    cases.push((Finite(2), Finite(5), KodairaType::I0Star));
    let mut mismatches = Vec::new();
    for &(va, vb, ref want) in &cases {
        let got = kodaira_from_orders(va, vb, generic_vd(va, vb));
        if got.as_ref() != Ok(want) {
            mismatches.push(json!({
                "va": va.to_string(),
                "vb": vb.to_string(),
                "expected": want.to_string(),
                "computed": got.map(|k| k.to_string()).unwrap_or_else(|e| e.to_string()),
            }));
        }
    }
    // vΔ can exceed 12 when 4A³ and 27B² cancel; the type is unchanged
    let cancelled = kodaira_from_orders(Finite(4), Finite(6), Finite(15)) == Ok(KodairaType::NonRdp);
    outcome(
        mismatches.is_empty() && cancelled,
        json!({ "cases": cases.len(), "mismatches": mismatches, "cancellation_case": cancelled }),
    )
}

fn has_non_rdp_at_zero(fibers: &[weierstrass::Fiber]) -> bool {
    fibers.iter().any(|f| f.kind == KodairaType::NonRdp && f.place == Place::Rational(BigRational::zero()))
}

/// Fifty parameter points with `(t10, t12) ≠ (0, 0)`; each coordinate is
/// zero with probability 1/4 so that the coordinate hyperplanes are hit.
pub fn sample_parameters(rng: &mut impl Rng, n: usize) -> Vec<[BigRational; 4]> {
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let t: [BigRational; 4] =
            std::array::from_fn(|_| if rng.gen_ratio(1, 4) { BigRational::zero() } else { random_rational(rng) });
        if !(t[2].is_zero() && t[3].is_zero()) {
            out.push(t);
        }
    }
    out
}

fn rdp_locus(_: &Options) -> Result<Outcome> {
    let mut rng = StdRng::seed_from_u64(SAMPLE_SEED);
    let mut on_locus = vec![[rat(0), rat(0)], [rat(1), rat(1)], [rat(-2), rat(3)]];
    on_locus.extend((0..5).map(|_| [random_rational(&mut rng), random_rational(&mut rng)]));
    let mut locus_misses = Vec::new();
    for [t4, t6] in &on_locus {
        let t = [t4.clone(), t6.clone(), rat(0), rat(0)];
        let fibers = weierstrass::classify(&weierstrass::family_at(&t)?)?;
        if !has_non_rdp_at_zero(&fibers) {
            locus_misses.push(json!({ "t4": t4.to_string(), "t6": t6.to_string(), "fibers": weierstrass::fiber_summary(&fibers) }));
        }
    }
    let samples = sample_parameters(&mut rng, 50);
    let mut off_locus_hits = Vec::new();
    for t in &samples {
        let fibers = weierstrass::classify(&weierstrass::family_at(t)?)?;
        if fibers.iter().any(|f| f.kind == KodairaType::NonRdp) {
            off_locus_hits.push(json!({
                "t": t.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                "fibers": weierstrass::fiber_summary(&fibers),
            }));
        }
    }
    outcome(
        locus_misses.is_empty() && off_locus_hits.is_empty(),
        json!({
            "seed": SAMPLE_SEED,
            "points_on_locus": on_locus.len(),
            "points_off_locus": samples.len(),
            "on_locus_without_non_rdp_at_zero": locus_misses,
            "off_locus_with_non_rdp": off_locus_hits,
        }),
    )
}

fn family_invariants(_: &Options) -> Result<Outcome> {
    let inv = weierstrass::family_invariants()?;
    let checks: Vec<Value> = inv.checks().into_iter().map(|(name, ok)| json!({ "check": name, "holds": ok })).collect();
    let deg = |p: &MultiPoly| p.weighted_degree(&weierstrass::PARAMETER_WEIGHTS).ok();
    outcome(
        inv.holds(),
        json!({
            "x_valuation": inv.x_valuation,
            "r20": inv.r20.to_string(),
            "weighted_degrees": [deg(&inv.delta120), deg(&inv.r20), deg(&inv.k60)],
            "k60_terms": inv.k60.num_terms(),
            "checks": checks,
        }),
    )
}

fn binomial(n: u64, k: u64) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * BigInt::from(n - i) / BigInt::from(i + 1))
}

fn hilbert_main(opts: &Options) -> Result<Outcome> {
    let upto = opts.upto.max(22);
    let p = GradedPresentation::new(vec![2, 2, 2, 2, 11], vec![22])?;
    let h = hilbert_coeffs(&p, upto)?;
    let mut mismatches = Vec::new();
    for (k, c) in h.iter().enumerate() {
        let k64 = k as u64;
        let expect = if k % 2 == 0 {
            binomial(k64 / 2 + 3, 3)
        } else if k >= 11 {
            binomial((k64 - 11) / 2 + 3, 3)
        } else {
            BigInt::zero()
        };
        if *c != expect {
            mismatches.push(json!({ "degree": k, "computed": c.to_string(), "expected": expect.to_string() }));
        }
    }
    outcome(
        mismatches.is_empty() && h[2] == BigInt::from(4) && h[11] == BigInt::one(),
        json!({
            "upto": upto,
            "dim_2": h[2].to_string(),
            "dim_11": h[11].to_string(),
            "dim_22": h[22].to_string(),
            "mismatches": mismatches,
        }),
    )
}

/// Monomials in generators of weights 4, 6, 10, 12 of each degree up to `n`.
fn weight_monomials(n: usize) -> Vec<u64> {
    let mut c = vec![0u64; n + 1];
    for a in (0..=n).step_by(4) {
        for b in (a..=n).step_by(6) {
            for d in (b..=n).step_by(10) {
                for e in (d..=n).step_by(12) {
                    c[e] += 1;
                }
            }
        }
    }
    c
}

fn hilbert_siegel(opts: &Options) -> Result<Outcome> {
    let upto = opts.upto.max(70);
    let p = GradedPresentation::new(vec![4, 6, 10, 12, 35], vec![70])?;
    let h = hilbert_coeffs(&p, upto)?;
    // the square of the weight-35 form is eliminated, so every form is
    // f + s·g with f, g polynomial in the even generators
    let even = weight_monomials(upto);
    let mismatches: Vec<usize> = (0..=upto)
        .filter(|&k| h[k] != BigInt::from(even[k] + if k >= 35 { even[k - 35] } else { 0 }))
        .collect();
    let rel = p.relation_degrees()[0];
    let split = rel == 2 * 35 && p.is_attained(10) && p.is_attained(rel - 10);
    outcome(
        mismatches.is_empty() && h[35] == BigInt::one() && split,
        json!({
            "upto": upto,
            "dim_35": h[35].to_string(),
            "relation_degree": rel,
            "relation_split": [10, rel - 10],
            "mismatched_degrees": mismatches,
        }),
    )
}

fn branch_degree(orb: i64, coarse: i64, scale: i64, components: &[(String, i64)], expected: i64) -> Result<Outcome> {
    let d = solve_branch_degree(&BranchDegreeProblem { orb_can: orb, coarse_can: coarse, pullback_scale: scale })?;
    let (sum, ok) = component_degree_sum(components, expected);
    outcome(
        d == expected && ok,
        json!({
            "degH": d,
            "expected": expected,
            "components": components.iter().map(|(n, k)| json!({ "name": n, "degree": k })).collect::<Vec<_>>(),
            "component_sum": sum,
        }),
    )
}

fn branch_degree_11(_: &Options) -> Result<Outcome> {
    let comps: Vec<(String, i64)> = (1..=9).map(|i| (format!("H{i}"), 1)).chain([("H10".to_string(), 2)]).collect();
    branch_degree(-3, -4, -2, &comps, 11)
}

fn branch_degree_70(_: &Options) -> Result<Outcome> {
    branch_degree(-3, -32, -1, &[("t10 = 0".into(), 10), ("k60 = 0".into(), 60)], 70)
}

fn roots_d4(_: &Options) -> Result<Outcome> {
    let a1 = lattice::roots(&Lattice::a1())?.len();
    let d4 = lattice::roots(&Lattice::d4())?.len();
    outcome(a1 == 2 && d4 == 24, json!({ "A1": a1, "D4": d4, "expected": { "A1": 2, "D4": 24 } }))
}

fn roots_e8(_: &Options) -> Result<Outcome> {
    let e8 = lattice::roots(&Lattice::e8())?.len();
    outcome(e8 == 240, json!({ "E8": e8, "expected": 240 }))
}

fn k3_lattice(_: &Options) -> Result<Outcome> {
    let k3 = Lattice::k3();
    let det = k3.det();
    outcome(
        k3.is_even() && det.abs() == BigInt::one() && k3.signature()? == (3, 19) && k3.rank() == 22,
        json!({ "lattice": lattice_summary(&k3)?, "expected": { "rank": 22, "abs_det": 1, "signature": [3, 19] } }),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_names() {
        let names: Vec<&str> = REGISTRY.iter().map(|c| c.name).collect();
        assert_eq!(names.len(), 20);
        let mut sorted = names.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), 20);
    }

    #[test]
    fn selection_keeps_registry_order() {
        let picked = select(Some(&["roots-e8".into(), "sb-dim".into()])).unwrap();
        assert_eq!(picked.iter().map(|c| c.name).collect::<Vec<_>>(), ["sb-dim", "roots-e8"]);
        assert!(matches!(select(Some(&["nope".into()])), Err(CliError::UnknownCheck(n)) if n == "nope"));
    }

    #[test]
    fn weight_monomial_counts() {
        let c = weight_monomials(24);
        let brute = (0..=6).flat_map(|a| (0..=4).flat_map(move |b| (0..=2).flat_map(move |d| (0..=2).map(move |e| 4 * a + 6 * b + 10 * d + 12 * e))));
        let n24 = brute.filter(|&w| w == 24).count() as u64;
        assert_eq!(c[24], n24);
        assert_eq!(&c[..7], &[1, 0, 0, 0, 1, 0, 1]);
    }

    #[test]
    fn failing_result_renders_details() {
        let r = CheckResult { name: "x", status: Status::Fail, details: json!({ "claim": "c", "got": 1 }), elapsed_ms: 3 };
        let text = render_text(std::slice::from_ref(&r));
        assert!(text.starts_with("FAIL  x"));
        assert!(text.contains("{\"got\":1}"));
        assert_eq!(exit_code(&[r]), 1);
    }
}
