//! The rational map from triples of conics in the pencil to `P³`.
//!
//! A conic of the pencil is a pair `[s:t]`; a triple maps to
//!
//! ```text
//! [s1s2t3 − t1s2s3 : s1t2t3 − t1t2s3 : s1s2t3 − s1t2s3 : t1s2t3 − t1t2s3]
//! ```

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exactmath::parse_rational;
use crate::multipoly::{MultiPoly, Vars};

pub type Pair = [BigRational; 2];

/// Three points `[s_i : t_i]` of `P¹`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TriplePoint([Pair; 3]);

impl TriplePoint {
    pub fn new(pairs: [Pair; 3]) -> Result<Self> {
        for (i, p) in pairs.iter().enumerate() {
            if p[0].is_zero() && p[1].is_zero() {
                return Err(Error::InvalidPoint(format!("pair {} is [0:0]", i + 1)));
            }
        }
        Ok(TriplePoint(pairs))
    }

    pub fn from_i64(pairs: [[i64; 2]; 3]) -> Result<Self> {
        TriplePoint::new(pairs.map(|p| p.map(|c| BigRational::from_integer(c.into()))))
    }

    /// Parses `s1,t1;s2,t2;s3,t3` with rational entries.
    pub fn parse(s: &str) -> Result<Self> {
        let bad = || Error::InvalidPoint(format!("expected `s1,t1;s2,t2;s3,t3`, got `{s}`"));
        let pairs = s
            .split(';')
            .map(|p| {
                let (a, b) = p.split_once(',').ok_or_else(bad)?;
                Ok([parse_rational(a).ok_or_else(bad)?, parse_rational(b).ok_or_else(bad)?])
            })
            .collect::<Result<Vec<Pair>>>()?;
        TriplePoint::new(pairs.try_into().map_err(|_| bad())?)
    }

    pub fn pairs(&self) -> &[Pair; 3] {
        &self.0
    }
}

/// A point of `P³` in canonical form, or the indeterminacy marker.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum UPoint {
    /// Primitive integer vector whose first nonzero entry is positive.
    Point([BigInt; 4]),
    Indeterminate,
}

impl UPoint {
    pub fn from_rational(v: &[BigRational; 4]) -> Self {
        if v.iter().all(Zero::is_zero) {
            return UPoint::Indeterminate;
        }
        let l = v.iter().fold(BigInt::from(1), |l, c| l.lcm(c.denom()));
        let ints = v.clone().map(|c| (c * &l).to_integer());
        let g = ints.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
        let mut out = ints.map(|c| c / &g);
        if out.iter().find(|c| !c.is_zero()).is_some_and(Signed::is_negative) {
            out = out.map(|c| -c);
        }
        UPoint::Point(out)
    }

    pub fn from_i64(v: [i64; 4]) -> Self {
        UPoint::from_rational(&v.map(|c| BigRational::from_integer(c.into())))
    }
}

impl core::fmt::Display for UPoint {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            UPoint::Indeterminate => f.write_str("INDETERMINATE"),
            UPoint::Point([a, b, c, d]) => write!(f, "[{a}:{b}:{c}:{d}]"),
        }
    }
}

/// The four coordinates before normalization.
pub fn u_raw(t: &TriplePoint) -> [BigRational; 4] {
    let [p1, p2, p3] = &t.0;
    let s = [&p1[0], &p2[0], &p3[0]];
    let t = [&p1[1], &p2[1], &p3[1]];
    let [s1, s2, s3] = s;
    let [t1, t2, t3] = t;
    [
        s1 * s2 * t3 - t1 * s2 * s3,
        s1 * t2 * t3 - t1 * t2 * s3,
        s1 * s2 * t3 - s1 * t2 * s3,
        t1 * s2 * t3 - t1 * t2 * s3,
    ]
}

pub fn u_map(t: &TriplePoint) -> UPoint {
    UPoint::from_rational(&u_raw(t))
}

/// Whether two pairs define the same point of `P¹`.
pub fn same_pair(a: &Pair, b: &Pair) -> bool {
    &a[0] * &b[1] == &a[1] * &b[0]
}

/// Projective equality of two vectors via their 2×2 minors.
pub fn projectively_equal(a: &[BigRational], b: &[BigRational]) -> bool {
    a.len() == b.len()
        && (0..a.len()).all(|i| (i + 1..a.len()).all(|j| &a[i] * &b[j] == &a[j] * &b[i]))
}

/// `s1, t1, s2, t2, s3, t3`.
pub fn vars() -> Vars {
    Vars::new(&["s1", "t1", "s2", "t2", "s3", "t3"])
}

fn symbol(name: &str) -> MultiPoly {
    MultiPoly::var(&vars(), name).expect("declared variable")
}

/// The four coordinates as polynomials in `s1, t1, s2, t2, s3, t3`.
pub fn u_polys() -> [MultiPoly; 4] {
    let s = ["s1", "s2", "s3"].map(symbol);
    let t = ["t1", "t2", "t3"].map(symbol);
    let m = |a: &MultiPoly, b: &MultiPoly, c: &MultiPoly| &(a * b) * c;
    [
        &m(&s[0], &s[1], &t[2]) - &m(&t[0], &s[1], &s[2]),
        &m(&s[0], &t[1], &t[2]) - &m(&t[0], &t[1], &s[2]),
        &m(&s[0], &s[1], &t[2]) - &m(&s[0], &t[1], &s[2]),
        &m(&t[0], &s[1], &t[2]) - &m(&t[0], &t[1], &s[2]),
    ]
}

/// `s_i t_j − t_i s_j` for pair indices `i, j` in `1..=3`.
pub fn minor(i: usize, j: usize) -> MultiPoly {
    let s = |k: usize| symbol(&format!("s{k}"));
    let t = |k: usize| symbol(&format!("t{k}"));
    &(&s(i) * &t(j)) - &(&t(i) * &s(j))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Contraction {
    pub label: String,
    /// The pair index that gets replaced, and the pair it is replaced by.
    pub replaced: (usize, usize),
    pub images: [MultiPoly; 4],
    pub claimed: [MultiPoly; 4],
    /// `images = factor · claimed`, when such a factor exists.
    pub factor: Option<MultiPoly>,
}

impl Contraction {
    pub fn holds(&self) -> bool {
        self.factor.as_ref().is_some_and(|f| !f.is_zero())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContractionReport {
    pub contractions: Vec<Contraction>,
    /// `u1u4 − u2u3`.
    pub quadric: MultiPoly,
    /// `(s1t3 − t1s3)(s2t3 − t2s3)(s2t1 − s1t2)`.
    pub quadric_factors: [MultiPoly; 3],
    pub quadric_holds: bool,
}

impl ContractionReport {
    pub fn holds(&self) -> bool {
        self.quadric_holds && self.contractions.iter().all(Contraction::holds)
    }
}

/// Checks the three contractions of the big diagonal and the factorization
/// of `u1u4 − u2u3` as polynomial identities.
pub fn verify_contractions() -> Result<ContractionReport> {
    let u = u_polys();
    let zero = MultiPoly::zero(&vars());
    let cases = [
        ("Q3=Q1", (3, 1), [zero.clone(), zero.clone(), symbol("s1"), symbol("t1")]),
        ("Q3=Q2", (3, 2), [symbol("s2"), symbol("t2"), zero.clone(), zero.clone()]),
        ("Q2=Q1", (2, 1), [symbol("s1"), symbol("t1"), symbol("s1"), symbol("t1")]),
    ];
    let mut contractions = Vec::new();
    for (label, (from, to), claimed) in cases {
        let images = u
            .clone()
            .map(|p| {
                let p = p.substitute(&format!("s{from}"), &symbol(&format!("s{to}")))?;
                p.substitute(&format!("t{from}"), &symbol(&format!("t{to}")))
            })
            .into_iter()
            .collect::<Result<Vec<_>>>()?;
        let images: [MultiPoly; 4] = images.try_into().expect("four coordinates");
        let factor = common_factor(&images, &claimed);
        contractions.push(Contraction { label: label.into(), replaced: (from, to), images, claimed, factor });
    }
    let quadric = &(&u[0] * &u[3]) - &(&u[1] * &u[2]);
    let quadric_factors = [minor(1, 3), minor(2, 3), minor(2, 1)];
    let product = quadric_factors.iter().fold(MultiPoly::one(&vars()), |acc, f| &acc * f);
    let quadric_holds = quadric == product;
    Ok(ContractionReport { contractions, quadric, quadric_factors, quadric_holds })
}

/// The polynomial `g` with `images[i] = g · claimed[i]` for every `i`.
fn common_factor(images: &[MultiPoly; 4], claimed: &[MultiPoly; 4]) -> Option<MultiPoly> {
    let k = claimed.iter().position(|c| !c.is_zero())?;
    let g = images[k].div_exact(&claimed[k]).ok()?;
    images.iter().zip(claimed).all(|(im, c)| *im == c * &g).then_some(g)
}
