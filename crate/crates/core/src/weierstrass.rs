//! Kodaira fibers of Weierstrass models `y² = x³ + A·x + B` over `P¹`.
//!
//! Models are given as binary forms `A(x, w)`, `B(x, w)` either of degrees
//! `(8, 12)` with weights `(1, 1)` or of degrees `(28, 42)` with weights
//! `(6, 1)`. The second kind is read in the affine coordinate `x/w⁶`; both
//! are classified through the same degree `(8, 12)` binary model.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::multipoly::{determinant, discriminant_poly, resultant, MultiPoly, Vars};
use crate::unipoly::UniPoly;

/// Order of vanishing, with `Infinite` for an identically zero form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Valuation {
    Finite(u32),
    Infinite,
}

impl Valuation {
    fn at_least(self, k: u32) -> bool {
        match self {
            Valuation::Finite(v) => v >= k,
            Valuation::Infinite => true,
        }
    }

    fn is(self, k: u32) -> bool {
        self == Valuation::Finite(k)
    }

    fn scaled(self, k: u32) -> Valuation {
        match self {
            Valuation::Finite(v) => Valuation::Finite(v * k),
            Valuation::Infinite => Valuation::Infinite,
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinite => f.write_str("inf"),
        }
    }
}

impl From<u32> for Valuation {
    fn from(v: u32) -> Self {
        Valuation::Finite(v)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum KodairaType {
    I0,
    I(u32),
    II,
    III,
    IV,
    I0Star,
    IStar(u32),
    IVStar,
    IIIStar,
    IIStar,
    /// Not minimal: the surface has a singularity worse than a rational
    /// double point on this fiber.
    NonRdp,
}

impl fmt::Display for KodairaType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KodairaType::I0 => f.write_str("I0"),
            KodairaType::I(n) => write!(f, "I{n}"),
            KodairaType::II => f.write_str("II"),
            KodairaType::III => f.write_str("III"),
            KodairaType::IV => f.write_str("IV"),
            KodairaType::I0Star => f.write_str("I0*"),
            KodairaType::IStar(n) => write!(f, "I{n}*"),
            KodairaType::IVStar => f.write_str("IV*"),
            KodairaType::IIIStar => f.write_str("III*"),
            KodairaType::IIStar => f.write_str("II*"),
            KodairaType::NonRdp => f.write_str("NON_RDP"),
        }
    }
}

/// Fiber type from the orders of `A`, `B` and `4A³ + 27B²` at a place.
pub fn kodaira_from_orders(va: Valuation, vb: Valuation, vd: Valuation) -> Result<KodairaType> {
    let inconsistent = || Error::InconsistentValuations { va: va.to_string(), vb: vb.to_string(), vd: vd.to_string() };
    let Valuation::Finite(d) = vd else {
        return Err(Error::DegenerateDiscriminant);
    };
    // 4A³ and 27B² can only cancel when their orders agree
    let consistent = match (va.scaled(3), vb.scaled(2)) {
        (Valuation::Infinite, Valuation::Infinite) => false,
        (a, b) if a == b => vd >= a,
        (a, b) => vd == a.min(b),
    };
    if !consistent {
        return Err(inconsistent());
    }
    use KodairaType::*;
    let t = if d == 0 {
        I0
    } else if va.is(0) && vb.is(0) {
        I(d)
    } else if va.at_least(4) && vb.at_least(6) {
        NonRdp
    } else if vb.is(1) {
        II
    } else if va.is(1) {
        III
    } else if vb.is(2) {
        IV
    } else if va.is(2) && vb.is(3) {
        if d == 6 {
            I0Star
        } else {
            IStar(d - 6)
        }
    } else if vb.is(3) || va.is(2) {
        I0Star
    } else if vb.is(4) {
        IVStar
    } else if va.is(3) {
        IIIStar
    } else if vb.is(5) {
        IIStar
    } else {
        return Err(inconsistent());
    };
    Ok(t)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Profile {
    /// Degrees `(8, 12)`, weights `(1, 1)`.
    Degree8,
    /// Degrees `(28, 42)`, weights `(6, 1)`.
    Degree28,
}

impl Profile {
    pub fn degrees(self) -> (i64, i64) {
        match self {
            Profile::Degree8 => (8, 12),
            Profile::Degree28 => (28, 42),
        }
    }

    pub fn x_weight(self) -> i64 {
        match self {
            Profile::Degree8 => 1,
            Profile::Degree28 => 6,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeierstrassModel {
    a: MultiPoly,
    b: MultiPoly,
    profile: Profile,
}

fn xw_weights(vars: &Vars, x_weight: i64) -> Result<Vec<i64>> {
    let x = vars.index_of("x")?;
    let w = vars.index_of("w")?;
    let mut weights = vec![0; vars.len()];
    weights[x] = x_weight;
    weights[w] = 1;
    Ok(weights)
}

impl WeierstrassModel {
    /// `A`, `B` must share a universe containing `x` and `w`; any other
    /// variables are parameters of weight zero.
    pub fn new(a: MultiPoly, b: MultiPoly, profile: Profile) -> Result<Self> {
        if a.vars() != b.vars() {
            return Err(Error::UniverseMismatch);
        }
        let weights = xw_weights(a.vars(), profile.x_weight())?;
        let (da, db) = profile.degrees();
        for (name, p, d) in [("A", &a, da), ("B", &b, db)] {
            if !p.is_homogeneous_of(&weights, d) {
                return Err(Error::BadProfile(format!("{name} is not of weighted degree {d}")));
            }
        }
        Ok(WeierstrassModel { a, b, profile })
    }

    pub fn a(&self) -> &MultiPoly {
        &self.a
    }

    pub fn b(&self) -> &MultiPoly {
        &self.b
    }

    pub fn profile(&self) -> Profile {
        self.profile
    }

    /// `4A³ + 27B²`.
    pub fn discriminant(&self) -> MultiPoly {
        let u = self.a.vars();
        let four = MultiPoly::constant(u, BigRational::from_integer(4.into()));
        let twenty_seven = MultiPoly::constant(u, BigRational::from_integer(27.into()));
        &(&four * &self.a.pow(3)) + &(&twenty_seven * &self.b.pow(2))
    }

    /// Replaces named parameters by values.
    pub fn specialize(&self, values: &[(&str, BigRational)]) -> Result<Self> {
        Ok(WeierstrassModel {
            a: self.a.specialize_named(values)?,
            b: self.b.specialize_named(values)?,
            profile: self.profile,
        })
    }

    /// `A(x, 1)` and `B(x, 1)`; fails if a parameter is left.
    pub fn affine(&self) -> Result<(UniPoly, UniPoly)> {
        let u = self.a.vars();
        let (x, w) = (u.index_of("x")?, u.index_of("w")?);
        let one = [(w, BigRational::one())];
        let mut out = Vec::with_capacity(2);
        for p in [&self.a, &self.b] {
            let q = p.specialize(&one);
            let f = UniPoly::from_multipoly(&q, x).ok_or_else(|| {
                let names: Vec<&str> = u
                    .names()
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != x && i != w && q.involves(i))
                    .map(|(_, n)| n.as_str())
                    .collect();
                Error::Parametric(names.join(","))
            })?;
            out.push(f);
        }
        let b = out.pop().expect("two forms");
        let a = out.pop().expect("two forms");
        Ok((a, b))
    }
}

/// The universe of the parametric family.
pub fn family_vars() -> Vars {
    Vars::new(&["x", "w", "t4", "t6", "t10", "t12"])
}

pub const PARAMETERS: [&str; 4] = ["t4", "t6", "t10", "t12"];
pub const PARAMETER_WEIGHTS: [i64; 4] = [4, 6, 10, 12];

/// `A = t4·x⁴w⁴ + t10·x³w¹⁰`, `B = x⁷ + t6·x⁶w⁶ + t12·x⁵w¹²`.
pub fn family() -> WeierstrassModel {
    let u = family_vars();
    let one = BigRational::one();
    let term = |e: [u32; 6]| MultiPoly::term(&u, e.to_vec(), one.clone());
    let a = &term([4, 4, 1, 0, 0, 0]) + &term([3, 10, 0, 0, 1, 0]);
    let b = &(&term([7, 0, 0, 0, 0, 0]) + &term([6, 6, 0, 1, 0, 0])) + &term([5, 12, 0, 0, 0, 1]);
    WeierstrassModel::new(a, b, Profile::Degree28).expect("homogeneous family")
}

pub fn family_at(t: &[BigRational; 4]) -> Result<WeierstrassModel> {
    let values: Vec<(&str, BigRational)> = PARAMETERS.iter().copied().zip(t.iter().cloned()).collect();
    family().specialize(&values)
}

/// A point of the base, in the affine coordinate `x/w` (resp. `x/w⁶`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Place {
    Infinity,
    Rational(BigRational),
    /// All roots of a monic square-free polynomial of degree at least two,
    /// sharing one valuation triple.
    Roots(UniPoly),
}

impl Place {
    pub fn degree(&self) -> usize {
        match self {
            Place::Infinity | Place::Rational(_) => 1,
            Place::Roots(g) => g.degree().unwrap_or(0),
        }
    }

    /// The monic polynomial in the affine coordinate vanishing at the place.
    pub fn polynomial(&self) -> Option<UniPoly> {
        match self {
            Place::Infinity => None,
            Place::Rational(r) => Some(UniPoly::linear_root(r.clone())),
            Place::Roots(g) => Some(g.clone()),
        }
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Infinity => f.write_str("inf"),
            Place::Rational(r) => write!(f, "{r}"),
            Place::Roots(g) => {
                let u = Vars::new(&["X"]);
                let terms = g.coeffs().iter().enumerate().map(|(k, c)| (vec![k as u32], c.clone()));
                let p = MultiPoly::from_terms(&u, terms).expect("arity 1");
                write!(f, "roots of {p}")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fiber {
    pub place: Place,
    pub va: Valuation,
    pub vb: Valuation,
    pub vd: u32,
    pub kind: KodairaType,
}

/// Multiplicity of the affine place `g` (or infinity) in a binary form of
/// degree `degree` whose dehomogenization is `f`.
fn affine_order(f: &UniPoly, g: Option<&UniPoly>, degree: usize) -> Valuation {
    match (f.degree(), g) {
        (None, _) => Valuation::Infinite,
        (Some(d), None) => Valuation::Finite((degree - d) as u32),
        (Some(_), Some(g)) => Valuation::Finite(f.multiplicity(g).expect("nonzero")),
    }
}

/// Splits the square-free `p` by the exact order of `f` at its roots.
fn split_by_order(p: &UniPoly, f: &UniPoly) -> Vec<(UniPoly, Valuation)> {
    if f.is_zero() {
        return vec![(p.clone(), Valuation::Infinite)];
    }
    let mut out = Vec::new();
    let mut rest = p.clone();
    let mut deriv = f.clone();
    let mut k = 0;
    while rest.degree().is_some_and(|d| d > 0) {
        // roots of `rest` where `f` vanishes to order > k
        let deeper = rest.gcd(&deriv);
        let exact = rest.div_exact(&deeper).expect("gcd divides");
        if exact.degree().is_some_and(|d| d > 0) {
            out.push((exact, Valuation::Finite(k)));
        }
        rest = deeper;
        deriv = deriv.derivative();
        k += 1;
    }
    out
}

/// Fibers at infinity and at every root of the discriminant.
///
/// Roots are grouped by a coprime refinement of the square-free
/// decomposition of `Δ(x, 1)` such that each group has a single valuation
/// triple; the root `x = 0` and linear groups are reported as rational
/// places.
pub fn classify(model: &WeierstrassModel) -> Result<Vec<Fiber>> {
    let (a, b) = model.affine()?;
    let d = a.pow(3).scale(&BigRational::from_integer(4.into())).add(&b.pow(2).scale(&BigRational::from_integer(27.into())));
    if d.is_zero() {
        return Err(Error::DegenerateDiscriminant);
    }
    let mut fibers = Vec::new();
    let (va, vb) = (affine_order(&a, None, 8), affine_order(&b, None, 12));
    let vd = affine_order(&d, None, 24);
    let kind = kodaira_from_orders(va, vb, vd)?;
    let Valuation::Finite(vd) = vd else { unreachable!("d is nonzero") };
    fibers.push(Fiber { place: Place::Infinity, va, vb, vd, kind });

    let x = UniPoly::from_i64(&[0, 1]);
    for (part, mult) in d.square_free() {
        let mut pieces = Vec::new();
        match part.div_exact(&x) {
            Some(rest) => {
                pieces.push(x.clone());
                if rest.degree().is_some_and(|n| n > 0) {
                    pieces.push(rest);
                }
            }
            None => pieces.push(part),
        }
        for piece in pieces {
            for (pa, va) in split_by_order(&piece, &a) {
                for (g, vb) in split_by_order(&pa, &b) {
                    let kind = kodaira_from_orders(va, vb, Valuation::Finite(mult))?;
                    let place = match g.linear_zero() {
                        Some(r) => Place::Rational(r),
                        None => Place::Roots(g),
                    };
                    fibers.push(Fiber { place, va, vb, vd: mult, kind });
                }
            }
        }
    }
    let total: usize = fibers.iter().map(|f| f.vd as usize * f.place.degree()).sum();
    if total != 24 {
        return Err(Error::Verification(format!("discriminant orders sum to {total}, not 24")));
    }
    Ok(fibers)
}

/// A place of `P¹` for [`ord_at`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BinaryPlace {
    /// `[α : β]`.
    Point(BigRational, BigRational),
    /// The roots of a polynomial in `x/w` (homogenized internally).
    Factor(UniPoly),
}

/// Multiplicity of a place in a nonzero binary form `F(x, w)`, by repeated
/// exact division by the form defining the place.
pub fn ord_at(f: &MultiPoly, place: &BinaryPlace) -> Result<u32> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let u = f.vars();
    let (xi, wi) = (u.index_of("x")?, u.index_of("w")?);
    let mut weights = vec![0; u.len()];
    weights[xi] = 1;
    weights[wi] = 1;
    f.weighted_degree(&weights)?;
    let form = match place {
        BinaryPlace::Point(alpha, beta) => {
            if alpha.is_zero() && beta.is_zero() {
                return Err(Error::InvalidPoint("[0:0]".into()));
            }
            &MultiPoly::var(u, "x")?.scale(beta) - &MultiPoly::var(u, "w")?.scale(alpha)
        }
        BinaryPlace::Factor(g) => {
            let n = g.degree().filter(|&n| n > 0).ok_or(Error::DegreeTooSmall(0))?;
            let terms = g.coeffs().iter().enumerate().map(|(k, c)| {
                let mut e = vec![0; u.len()];
                e[xi] = k as u32;
                e[wi] = (n - k) as u32;
                (e, c.clone())
            });
            MultiPoly::from_terms(u, terms)?
        }
    };
    let mut k = 0;
    let mut cur = f.clone();
    while let Ok(q) = cur.div_exact(&form) {
        cur = q;
        k += 1;
    }
    Ok(k)
}

/// Discriminant data of the parametric family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyInvariants {
    /// `4A³ + 27B²` in `x, w, t`.
    pub delta: MultiPoly,
    /// Largest power of `x` dividing `delta`.
    pub x_valuation: u32,
    /// `delta = x^k · w^m · p(x/w⁶)`; this is `m`.
    pub w_exponent: u32,
    /// `p(X, t)`.
    pub quintic: MultiPoly,
    /// Product of squared root differences of the quintic.
    pub delta120: MultiPoly,
    /// The 3×3 determinant in `t`.
    pub r20: MultiPoly,
    /// `Res_X(t4·X + t10, X² + t6·X + t12)`.
    pub r20_resultant: MultiPoly,
    /// `delta120 / r20³`.
    pub k60: MultiPoly,
}

pub fn parameter_vars() -> Vars {
    Vars::new(&PARAMETERS)
}

pub fn quintic_vars() -> Vars {
    Vars::new(&["X", "t4", "t6", "t10", "t12"])
}

/// The 3×3 matrix whose determinant defines `r20`.
pub fn r20_matrix() -> Vec<Vec<MultiPoly>> {
    let u = parameter_vars();
    let t = |n: &str| MultiPoly::var(&u, n).expect("parameter");
    let zero = MultiPoly::zero(&u);
    vec![
        vec![t("t4"), t("t10"), zero.clone()],
        vec![zero, t("t4"), t("t10")],
        vec![MultiPoly::one(&u), t("t6"), t("t12")],
    ]
}

pub fn family_invariants() -> Result<FamilyInvariants> {
    let model = family();
    let delta = model.discriminant();
    let u = family_vars();
    let (xi, wi) = (u.index_of("x")?, u.index_of("w")?);
    let x_valuation = delta.valuation_in(xi).ok_or(Error::ZeroPolynomial)?;
    let reduced = delta.div_var_power(xi, x_valuation)?;
    let w_exponent = reduced
        .weighted_degree(&[6, 1, 0, 0, 0, 0])
        .map_err(|e| Error::Verification(format!("x-free part is not weighted homogeneous: {e}")))?;

    let qv = quintic_vars();
    let terms = reduced.terms().map(|(m, c)| {
        let e = m.exponents();
        let mut out = vec![e[xi]];
        out.extend(e.iter().enumerate().filter(|&(i, _)| i != xi && i != wi).map(|(_, &k)| k));
        (out, c.clone())
    });
    let quintic = MultiPoly::from_terms(&qv, terms.collect::<Vec<_>>())?;

    let pv = parameter_vars();
    let delta120 = discriminant_poly(&quintic, "X")?.to_universe(&pv)?;

    let r20 = determinant(&r20_matrix(), &pv)?;
    let t = |n: &str| MultiPoly::var(&qv, n).expect("parameter");
    let big_x = t("X");
    let linear = &(&t("t4") * &big_x) + &t("t10");
    let quadratic = &(&(&big_x * &big_x) + &(&t("t6") * &big_x)) + &t("t12");
    let r20_resultant = resultant(&linear, &quadratic, "X")?.to_universe(&pv)?;

    let k60 = delta120
        .div_exact(&r20.pow(3))
        .map_err(|_| Error::Verification("r20^3 does not divide delta120".into()))?;
    Ok(FamilyInvariants {
        delta,
        x_valuation,
        w_exponent: w_exponent as u32,
        quintic,
        delta120,
        r20,
        r20_resultant,
        k60,
    })
}

impl FamilyInvariants {
    /// Named checks of the expected shape of the invariants.
    pub fn checks(&self) -> Vec<(&'static str, bool)> {
        let w = &PARAMETER_WEIGHTS;
        let deg = |p: &MultiPoly| p.weighted_degree(w).ok();
        let qv = quintic_vars();
        let lead = self.quintic.coefficients_in(0);
        let expected_r20 = {
            let u = parameter_vars();
            let t = |n: &str| MultiPoly::var(&u, n).expect("parameter");
            &(&(&t("t4").pow(2) * &t("t12")) - &(&(&t("t4") * &t("t6")) * &t("t10"))) + &t("t10").pow(2)
        };
        vec![
            ("x-adic valuation of the discriminant is 9", self.x_valuation == 9),
            (
                "quintic has degree 5 with leading coefficient 27",
                lead.len() == 6 && lead[5] == MultiPoly::constant(&qv, BigRational::from_integer(BigInt::from(27))),
            ),
            ("r20 = t4^2*t12 - t4*t6*t10 + t10^2", self.r20 == expected_r20),
            ("r20 equals the Sylvester resultant", self.r20 == self.r20_resultant),
            ("delta120 has weighted degree 120", deg(&self.delta120) == Some(120)),
            ("r20 has weighted degree 20", deg(&self.r20) == Some(20)),
            ("k60 has weighted degree 60", deg(&self.k60) == Some(60)),
            ("delta120 = r20^3 * k60", self.delta120 == &self.r20.pow(3) * &self.k60),
        ]
    }

    pub fn holds(&self) -> bool {
        self.checks().iter().all(|(_, ok)| *ok)
    }
}

pub fn fiber_summary(fibers: &[Fiber]) -> String {
    fibers.iter().map(|f| format!("{}@{}", f.kind, f.place)).collect::<Vec<_>>().join(", ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::sync::OnceLock;
    use KodairaType::*;
    use Valuation::{Finite as F, Infinite as Inf};

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn invariants() -> &'static FamilyInvariants {
        static CELL: OnceLock<FamilyInvariants> = OnceLock::new();
        CELL.get_or_init(|| family_invariants().unwrap())
    }

    #[test]
    fn kodaira_table() {
        let k = |a, b, d| kodaira_from_orders(a, b, d);
        assert_eq!(k(F(3), F(5), F(9)), Ok(IIIStar));
        assert_eq!(k(F(3), Inf, F(9)), Ok(IIIStar));
        assert_eq!(k(F(4), F(5), F(10)), Ok(IIStar));
        assert_eq!(k(Inf, F(5), F(10)), Ok(IIStar));
        assert_eq!(k(F(4), F(6), F(12)), Ok(NonRdp));
        assert_eq!(k(F(5), F(6), F(12)), Ok(NonRdp));
        assert_eq!(k(F(0), F(0), F(0)), Ok(I0));
        assert_eq!(k(F(0), F(0), F(3)), Ok(I(3)));
        assert_eq!(k(F(1), F(1), F(2)), Ok(II));
        assert_eq!(k(F(1), F(2), F(3)), Ok(III));
        assert_eq!(k(F(2), F(2), F(4)), Ok(IV));
        assert_eq!(k(F(2), F(3), F(6)), Ok(I0Star));
        assert_eq!(k(F(2), F(3), F(8)), Ok(IStar(2)));
        assert_eq!(k(F(3), F(4), F(8)), Ok(IVStar));
        assert!(k(Inf, Inf, F(3)).is_err());
        assert!(k(F(3), F(5), F(10)).is_err());
        assert_eq!(k(F(0), F(0), Inf), Err(Error::DegenerateDiscriminant));
    }

    #[test]
    fn kodaira_euler_numbers() {
        // oracle: the Euler number of each fiber equals vD in characteristic 0
        let euler = |t: KodairaType| match t {
            I0 => 0,
            I(n) => n,
            II => 2,
            III => 3,
            IV => 4,
            I0Star => 6,
            IStar(n) => n + 6,
            IVStar => 8,
            IIIStar => 9,
            IIStar => 10,
            NonRdp => unreachable!(),
        };
        for a in 0..6u32 {
            for b in 0..8u32 {
                let m = (3 * a).min(2 * b);
                let ds: Vec<u32> = if 3 * a == 2 * b { (m..m + 4).collect() } else { vec![m] };
                for d in ds {
                    match kodaira_from_orders(F(a), F(b), F(d)) {
                        Ok(NonRdp) => assert!(a >= 4 && b >= 6),
                        Ok(t) => assert_eq!(euler(t), d, "{a} {b} {d}"),
                        Err(e) => panic!("{a} {b} {d}: {e:?}"),
                    }
                }
            }
        }
    }

    #[test]
    fn orders_at_places() {
        let u = Vars::new(&["x", "w"]);
        let x = MultiPoly::var(&u, "x").unwrap();
        let w = MultiPoly::var(&u, "w").unwrap();
        let f = &(&x.pow(3) * &w.pow(5)) * &(&x - &w);
        assert_eq!(ord_at(&f, &BinaryPlace::Point(q(0), q(1))), Ok(3));
        assert_eq!(ord_at(&f, &BinaryPlace::Point(q(1), q(0))), Ok(5));
        assert_eq!(ord_at(&f, &BinaryPlace::Point(q(1), q(1))), Ok(1));
        assert_eq!(ord_at(&f, &BinaryPlace::Point(q(2), q(1))), Ok(0));
        let g8 = &(&x.pow(4) * &w.pow(4)).scale(&q(2)) + &(&x.pow(3) * &w.pow(5)).scale(&q(-3));
        assert_eq!(ord_at(&g8, &BinaryPlace::Point(q(0), q(1))), Ok(3));
        let irr = UniPoly::from_i64(&[-2, 0, 1]);
        let h = &(&(&x * &x) - &(&w * &w).scale(&q(2))).pow(2) * &w;
        assert_eq!(ord_at(&h, &BinaryPlace::Factor(irr)), Ok(2));
        assert_eq!(ord_at(&MultiPoly::zero(&u), &BinaryPlace::Point(q(0), q(1))), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn degree8_models() {
        let u = Vars::new(&["x", "w"]);
        let m = |e: [u32; 2], c: i64| MultiPoly::term(&u, e.to_vec(), q(c));
        // A = x·w⁷, B = x²·w¹⁰: type III at x = 0
        let model = WeierstrassModel::new(m([1, 7], 1), m([2, 10], 1), Profile::Degree8).unwrap();
        let fibers = classify(&model).unwrap();
        let at0 = fibers.iter().find(|f| f.place == Place::Rational(q(0))).unwrap();
        assert_eq!((at0.va, at0.vb, at0.vd, at0.kind), (F(1), F(2), 3, III));
        assert!(WeierstrassModel::new(m([1, 6], 1), m([2, 10], 1), Profile::Degree8).is_err());
        // A = 0 gives infinite vA
        let model = WeierstrassModel::new(MultiPoly::zero(&u), &m([5, 7], 1) + &m([7, 5], -1), Profile::Degree8).unwrap();
        for f in classify(&model).unwrap() {
            assert_eq!(f.va, Inf);
        }
        let zero = WeierstrassModel::new(MultiPoly::zero(&u), MultiPoly::zero(&u), Profile::Degree8).unwrap();
        assert_eq!(classify(&zero), Err(Error::DegenerateDiscriminant));
        assert!(matches!(family().affine(), Err(Error::Parametric(_))));
    }

    #[test]
    fn family_boundary() {
        let fibers = classify(&family_at(&[q(0), q(0), q(0), q(0)]).unwrap()).unwrap();
        let at0 = fibers.iter().find(|f| f.place == Place::Rational(q(0))).unwrap();
        assert_eq!(at0.kind, NonRdp);
        assert_eq!(fibers.iter().filter(|f| f.kind == NonRdp).count(), 1);
        assert_eq!(fibers[0].kind, IIStar);

        let fibers = classify(&family_at(&[q(1), q(1), q(1), q(1)]).unwrap()).unwrap();
        assert_eq!(fibers[0].place, Place::Infinity);
        assert_eq!(fibers[0].kind, IIStar);
        assert!(fibers.iter().all(|f| f.kind != NonRdp));
        let at0 = fibers.iter().find(|f| f.place == Place::Rational(q(0))).unwrap();
        assert_eq!(at0.kind, IIIStar);

        // t10 = 0: II* at 0
        let fibers = classify(&family_at(&[q(1), q(2), q(0), q(3)]).unwrap()).unwrap();
        let at0 = fibers.iter().find(|f| f.place == Place::Rational(q(0))).unwrap();
        assert_eq!(at0.kind, IIStar);
    }

    #[test]
    fn family_invariant_values() {
        let inv = invariants();
        for (name, ok) in inv.checks() {
            assert!(ok, "{name}");
        }
        assert_eq!(inv.w_exponent, 30);
        // independent expansion of the quintic
        let qv = quintic_vars();
        let t = |n: &str| MultiPoly::var(&qv, n).unwrap();
        let x = t("X");
        let expect = &(&(&t("t4") * &x) + &t("t10")).pow(3).scale(&q(4))
            + &(&x * &(&(&(&x * &x) + &(&t("t6") * &x)) + &t("t12")).pow(2)).scale(&q(27));
        assert_eq!(inv.quintic, expect);
    }

    fn t_point() -> impl Strategy<Value = [BigRational; 4]> {
        prop::array::uniform4((-5i64..=5, 1i64..=3)).prop_map(|v| v.map(|(n, d)| BigRational::new(n.into(), d.into())))
    }

    fn eval_t(p: &MultiPoly, t: &[BigRational; 4]) -> BigRational {
        p.evaluate(t).unwrap()
    }

    fn quintic_at(t: &[BigRational; 4]) -> UniPoly {
        let inv = invariants();
        let s = inv.quintic.specialize(&[(1, t[0].clone()), (2, t[1].clone()), (3, t[2].clone()), (4, t[3].clone())]);
        UniPoly::from_multipoly(&s, 0).unwrap()
    }

    #[test]
    fn planted_degenerations() {
        let inv = invariants();
        // common root ρ of t4·X + t10 and X² + t6·X + t12
        for (t4, t6, rho) in [(1, 2, 3), (-2, 1, -1), (3, 0, 2)] {
            let (t4, t6, rho) = (q(t4), q(t6), q(rho));
            let t = [t4.clone(), t6.clone(), -(&t4 * &rho), -(&rho * &rho) - &t6 * &rho];
            assert!(eval_t(&inv.r20, &t).is_zero());
            assert!(eval_t(&inv.delta120, &t).is_zero());
        }
        // a double root of the quintic with t4 = 0 and r20 ≠ 0
        for (rho, c) in [(1, 1), (2, -1), (-1, 2)] {
            let (rho, c) = (q(rho), q(c));
            let t6 = &c * &c * &c - &rho * q(2);
            let t12 = -(&rho * &rho * q(5)) - &t6 * &rho * q(3);
            let t10 = -(&rho * &c * &c * q(3));
            let t = [q(0), t6, t10, t12];
            let p = quintic_at(&t);
            assert!(p.eval(&rho).is_zero() && p.derivative().eval(&rho).is_zero());
            assert!(!eval_t(&inv.r20, &t).is_zero());
            assert!(eval_t(&inv.k60, &t).is_zero());
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]

        #[test]
        fn generic_members(t in t_point()) {
            let inv = invariants();
            let p = quintic_at(&t);
            let repeated = p.gcd(&p.derivative()).degree().is_some_and(|d| d > 0);
            prop_assert_eq!(eval_t(&inv.delta120, &t).is_zero(), repeated);

            let lin = UniPoly::new(vec![t[2].clone(), t[0].clone()]);
            let quad = UniPoly::new(vec![t[3].clone(), t[1].clone(), q(1)]);
            let common = !lin.is_zero() && lin.gcd(&quad).degree().is_some_and(|d| d > 0);
            let r = eval_t(&inv.r20, &t);
            if !t[0].is_zero() {
                prop_assert_eq!(r.is_zero(), common);
            }

            let model = family_at(&t).unwrap();
            if t[2].is_zero() && t[3].is_zero() {
                return Ok(());
            }
            let fibers = classify(&model).unwrap();
            prop_assert_eq!(fibers[0].kind, IIStar);
            prop_assert!(fibers.iter().all(|f| f.kind != NonRdp));
            if !t[2].is_zero() {
                let at0 = fibers.iter().find(|f| f.place == Place::Rational(q(0))).unwrap();
                prop_assert_eq!(at0.kind, IIIStar);
            }
            // recompute vD with binary-form division
            let delta = model.discriminant().to_universe(&Vars::new(&["x", "w"])).unwrap();
            // the (28, 42) discriminant has terms x^i·w^(84−6i); read it as
            // the degree-24 binary form with terms x^i·w^(24−i)
            let u = Vars::new(&["x", "w"]);
            let terms: Vec<_> = delta.terms().map(|(m, c)| {
                let e = m.exponents();
                assert_eq!(e[1], 84 - 6 * e[0]);
                (vec![e[0], 24 - e[0]], c.clone())
            }).collect();
            let homog = MultiPoly::from_terms(&u, terms).unwrap();
            for f in &fibers {
                let place = match &f.place {
                    Place::Infinity => BinaryPlace::Point(q(1), q(0)),
                    Place::Rational(r) => BinaryPlace::Point(r.clone(), q(1)),
                    Place::Roots(g) => BinaryPlace::Factor(g.clone()),
                };
                prop_assert_eq!(ord_at(&homog, &place).unwrap(), f.vd);
            }
        }
    }
}
