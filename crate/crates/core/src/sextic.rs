//! Plane sextics whose double cover acquires `D4`-or-worse points over a
//! given point set, detected by vanishing of the Hessian.
//!
//! Coordinates are `x, y, z` (also written `x1, x2, x3`); `a_ijk` is the
//! coefficient of `x^i y^j z^k`.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactmath::{inverse_rational, nullspace_rational, parse_rational, rref, RatMatrix};
use crate::multipoly::{hessian, MultiPoly, Vars};

pub const DEGREE: u32 = 6;

/// The coordinate monomials `y³z³, x³z³, x³y³, x²y²z²`.
pub const FIRST_LINE: [[u32; 3]; 4] = [[0, 3, 3], [3, 0, 3], [3, 3, 0], [2, 2, 2]];

/// Monomials whose coefficients coordinatize the four-point space. The
/// coefficients on [`FIRST_LINE`] do not: on that space they satisfy
/// `a222 = 2(a033 + a303 + a330)`, and the six lines through pairs of base
/// points give a nonzero member on which all four vanish.
pub const BASE_COORDINATES: [[u32; 3]; 4] = [[0, 3, 3], [3, 0, 3], [3, 3, 0], [3, 2, 1]];

/// The remaining six monomials supported by sextics singular at the
/// three coordinate points.
pub const SECOND_LINE: [[u32; 3]; 6] = [[3, 2, 1], [2, 3, 1], [3, 1, 2], [2, 1, 3], [1, 3, 2], [1, 2, 3]];

/// A projective point given by a primitive integer triple.
pub type Point = [BigInt; 3];

pub fn vars() -> Vars {
    Vars::new(&["x", "y", "z"])
}

pub fn point(x: i64, y: i64, z: i64) -> Point {
    [x.into(), y.into(), z.into()]
}

/// `[0:0:1], [0:1:0], [1:0:0], [1:1:1]`.
pub fn base_points() -> Vec<Point> {
    vec![point(0, 0, 1), point(0, 1, 0), point(1, 0, 0), point(1, 1, 1)]
}

/// All 28 exponent triples of degree six, in descending lex order.
pub fn monomials() -> Vec<[u32; 3]> {
    let mut out = Vec::with_capacity(28);
    for i in (0..=DEGREE).rev() {
        for j in (0..=DEGREE - i).rev() {
            out.push([i, j, DEGREE - i - j]);
        }
    }
    out
}

pub fn coefficient_name(e: &[u32; 3]) -> String {
    format!("a{}{}{}", e[0], e[1], e[2])
}

fn monomial_index(e: &[u32; 3]) -> usize {
    monomials().iter().position(|m| m == e).expect("degree-six exponent")
}

pub fn validate_point(p: &Point) -> Result<()> {
    let g = p.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    if g.is_zero() {
        return Err(Error::InvalidPoint("all coordinates are zero".into()));
    }
    if !g.is_one() {
        return Err(Error::InvalidPoint(format!("[{}:{}:{}] is not primitive", p[0], p[1], p[2])));
    }
    Ok(())
}

/// Projective equality via vanishing of all 2×2 minors.
pub fn same_point(p: &Point, q: &Point) -> bool {
    (0..3).all(|i| (i + 1..3).all(|j| &p[i] * &q[j] == &p[j] * &q[i]))
}

/// `∂²(x^e)/∂v_a∂v_b` at `p`.
fn second_partial_at(e: &[u32; 3], a: usize, b: usize, p: &Point) -> BigInt {
    let mut e = *e;
    let mut c = BigInt::one();
    for v in [a, b] {
        if e[v] == 0 {
            return BigInt::zero();
        }
        c *= e[v];
        e[v] -= 1;
    }
    for (x, k) in p.iter().zip(e) {
        c *= num_traits::pow(x.clone(), k as usize);
    }
    c
}

/// The six linear conditions `Hess(f)(p) = 0` as rows over the 28 `a_ijk`.
pub fn hessian_conditions(p: &Point) -> Vec<Vec<BigRational>> {
    let ms = monomials();
    let mut rows = Vec::with_capacity(6);
    for a in 0..3 {
        for b in a..3 {
            rows.push(ms.iter().map(|e| BigRational::from_integer(second_partial_at(e, a, b, p))).collect());
        }
    }
    rows
}

/// Coefficient vector of a sextic over [`monomials`].
pub fn coefficient_vector(f: &MultiPoly) -> Result<Vec<BigRational>> {
    check_sextic(f)?;
    Ok(monomials().iter().map(|e| f.coefficient(e)).collect())
}

pub fn from_coefficients(c: &[BigRational]) -> MultiPoly {
    let terms = monomials().into_iter().zip(c.iter().cloned()).map(|(e, a)| (e.to_vec(), a));
    MultiPoly::from_terms(&vars(), terms).expect("arity 3")
}

fn check_sextic(f: &MultiPoly) -> Result<()> {
    if f.vars() != &vars() {
        return Err(Error::UniverseMismatch);
    }
    if !f.is_homogeneous_of(&[1, 1, 1], DEGREE.into()) {
        return Err(Error::NotSextic);
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SexticSpace {
    points: Vec<Point>,
    basis: Vec<MultiPoly>,
}

impl SexticSpace {
    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn basis(&self) -> &[MultiPoly] {
        &self.basis
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    /// Monomials on which some basis element has a nonzero coefficient.
    pub fn support(&self) -> Vec<[u32; 3]> {
        monomials()
            .into_iter()
            .filter(|e| self.basis.iter().any(|b| !b.coefficient(e).is_zero()))
            .collect()
    }

    /// The matrix of basis coefficients on the given monomials (one row per
    /// basis element).
    pub fn coordinate_block(&self, coords: &[[u32; 3]]) -> RatMatrix {
        let rows = self.basis.iter().map(|b| coords.iter().map(|e| b.coefficient(e)).collect()).collect();
        RatMatrix::from_rows(rows).unwrap_or_else(|_| RatMatrix::zeros(0, coords.len()))
    }

    /// Re-bases so that basis element `i` has coefficient vector `e_i` on
    /// `coords`; fails unless those coefficients coordinatize the space.
    pub fn with_coordinates(&self, coords: &[[u32; 3]]) -> Result<SexticSpace> {
        if coords.len() != self.dimension() {
            return Err(Error::Dimension(format!(
                "{} coordinates for a space of dimension {}",
                coords.len(),
                self.dimension()
            )));
        }
        let inv = inverse_rational(&self.coordinate_block(coords))?;
        let vectors = self.basis.iter().map(coefficient_vector).collect::<Result<Vec<_>>>()?;
        let mut basis = Vec::with_capacity(vectors.len());
        for i in 0..inv.rows() {
            let mut c = vec![BigRational::zero(); 28];
            for (k, v) in vectors.iter().enumerate() {
                for (acc, x) in c.iter_mut().zip(v) {
                    *acc += &inv[(i, k)] * x;
                }
            }
            basis.push(from_coefficients(&c));
        }
        Ok(SexticSpace { points: self.points.clone(), basis })
    }

    /// Coordinates of `f` in the basis, or `None` if `f` is outside the space.
    pub fn coordinates(&self, f: &MultiPoly) -> Result<Option<Vec<BigRational>>> {
        let target = coefficient_vector(f)?;
        let vectors = self.basis.iter().map(coefficient_vector).collect::<Result<Vec<_>>>()?;
        let d = vectors.len();
        let mut aug = RatMatrix::zeros(28, d + 1);
        for r in 0..28 {
            for (k, v) in vectors.iter().enumerate() {
                aug[(r, k)] = v[r].clone();
            }
            aug[(r, d)] = target[r].clone();
        }
        let (red, pivots) = rref(&aug);
        if pivots.contains(&d) {
            return Ok(None);
        }
        let mut x = vec![BigRational::zero(); d];
        for (row, &pc) in pivots.iter().enumerate() {
            x[pc] = red[(row, d)].clone();
        }
        Ok(Some(x))
    }

    pub fn contains(&self, f: &MultiPoly) -> Result<bool> {
        Ok(self.coordinates(f)?.is_some())
    }
}

/// Sextics with vanishing Hessian at every given point.
pub fn sb_space(points: &[Point]) -> Result<SexticSpace> {
    for (i, p) in points.iter().enumerate() {
        validate_point(p)?;
        if points[..i].iter().any(|q| same_point(p, q)) {
            return Err(Error::InvalidPoint(format!("[{}:{}:{}] repeated", p[0], p[1], p[2])));
        }
    }
    let rows: Vec<Vec<BigRational>> = points.iter().flat_map(hessian_conditions).collect();
    let basis = if rows.is_empty() {
        (0..28)
            .map(|k| {
                let mut c = vec![BigRational::zero(); 28];
                c[k] = BigRational::one();
                from_coefficients(&c)
            })
            .collect()
    } else {
        nullspace_rational(&RatMatrix::from_rows(rows)?).iter().map(|c| from_coefficients(c)).collect()
    };
    Ok(SexticSpace { points: points.to_vec(), basis })
}

/// The space for the four base points, with basis dual to [`BASE_COORDINATES`].
pub fn base_space() -> Result<SexticSpace> {
    sb_space(&base_points())?.with_coordinates(&BASE_COORDINATES)
}

/// `xyz(x − y)(y − z)(z − x)`: the product of the three singular conics
/// of the pencil.
pub fn six_lines() -> MultiPoly {
    let u = vars();
    let v = |n| MultiPoly::var(&u, n).expect("coordinate");
    let (x, y, z) = (v("x"), v("y"), v("z"));
    &(&(&x * &y) * &z) * &(&(&(&x - &y) * &(&y - &z)) * &(&z - &x))
}

/// Whether all second partials of the sextic `f` vanish at `p`.
pub fn d4_at(f: &MultiPoly, p: &Point) -> Result<bool> {
    check_sextic(f)?;
    validate_point(p)?;
    let pt: Vec<BigRational> = p.iter().map(|c| BigRational::from_integer(c.clone())).collect();
    for row in hessian(f, &["x", "y", "z"])? {
        for h in row {
            if !h.evaluate(&pt)?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForcedRelation {
    pub label: String,
    /// Coefficients over the ten-monomial family.
    pub vector: Vec<BigRational>,
    pub forced: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneralPositionReport {
    /// The ten monomials singular at the coordinate points.
    pub family: Vec<[u32; 3]>,
    /// Reduced relations among the family coefficients.
    pub relations: Vec<Vec<BigRational>>,
    pub expected: Vec<ForcedRelation>,
    /// Basis of the constrained family.
    pub surviving: Vec<MultiPoly>,
    /// `surviving[i] / z²`, or `None` where division fails.
    pub quotients: Vec<Option<MultiPoly>>,
}

impl GeneralPositionReport {
    pub fn holds(&self) -> bool {
        self.expected.iter().all(|r| r.forced) && self.quotients.iter().all(Option::is_some)
    }
}

/// Imposes a fourth `D4` point at `[1:1:0]`, collinear with `[0:1:0]` and
/// `[1:0:0]`, on the sextics singular at the three coordinate points.
pub fn general_position_check() -> Result<GeneralPositionReport> {
    let three = sb_space(&base_points()[..3])?;
    let family = three.support();
    if family.len() != three.dimension() {
        return Err(Error::Verification("three-point space is not monomial".into()));
    }
    let extra = point(1, 1, 0);
    let idx: Vec<usize> = family.iter().map(monomial_index).collect();
    let rows: Vec<Vec<BigRational>> = hessian_conditions(&extra)
        .into_iter()
        .map(|r| idx.iter().map(|&k| r[k].clone()).collect())
        .collect();
    let m = RatMatrix::from_rows(rows)?;
    let (red, pivots) = rref(&m);
    let relations: Vec<Vec<BigRational>> = (0..pivots.len()).map(|i| red.row(i).to_vec()).collect();

    let unit = |e: [u32; 3]| {
        let mut v = vec![BigRational::zero(); family.len()];
        if let Some(k) = family.iter().position(|f| *f == e) {
            v[k] = BigRational::one();
        }
        v
    };
    let mut expected = Vec::new();
    for e in [[3, 2, 1], [2, 3, 1], [3, 3, 0]] {
        expected.push((coefficient_name(&e), unit(e)));
    }
    let sum = [[2, 2, 2], [3, 1, 2], [1, 3, 2]]
        .into_iter()
        .map(unit)
        .reduce(|a, b| a.iter().zip(&b).map(|(x, y)| x + y).collect())
        .expect("three terms");
    expected.push(("a222+a312+a132".into(), sum));
    let expected = expected
        .into_iter()
        .map(|(label, vector)| {
            let forced = in_row_space(&m, &vector);
            ForcedRelation { label, vector, forced }
        })
        .collect();

    let z = vars().index_of("z")?;
    let surviving: Vec<MultiPoly> = nullspace_rational(&m)
        .iter()
        .map(|c| {
            let terms = family.iter().zip(c).map(|(e, a)| (e.to_vec(), a.clone()));
            MultiPoly::from_terms(&vars(), terms).expect("arity 3")
        })
        .collect();
    let quotients = surviving.iter().map(|f| f.div_var_power(z, 2).ok()).collect();
    Ok(GeneralPositionReport { family, relations, expected, surviving, quotients })
}

fn in_row_space(m: &RatMatrix, v: &[BigRational]) -> bool {
    let mut rows = m.to_rows();
    rows.push(v.to_vec());
    let stacked = RatMatrix::from_rows(rows).expect("equal widths");
    rref(&stacked).1.len() == rref(m).1.len()
}

/// `a1·yz + a2·xz + a3·xy` with `a1 + a2 + a3 = 0`, not all zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ConicInPencil([BigRational; 3]);

impl ConicInPencil {
    pub fn new(a1: BigRational, a2: BigRational, a3: BigRational) -> Result<Self> {
        if !(&a1 + &a2 + &a3).is_zero() {
            return Err(Error::InvalidConic(format!("coefficients {a1}, {a2}, {a3} do not sum to zero")));
        }
        if a1.is_zero() && a2.is_zero() && a3.is_zero() {
            return Err(Error::InvalidConic("all coefficients are zero".into()));
        }
        Ok(ConicInPencil([a1, a2, a3]))
    }

    pub fn from_i64(a1: i64, a2: i64, a3: i64) -> Result<Self> {
        let r = |n: i64| BigRational::from_integer(n.into());
        ConicInPencil::new(r(a1), r(a2), r(a3))
    }

    pub fn coefficients(&self) -> &[BigRational; 3] {
        &self.0
    }

    pub fn polynomial(&self) -> MultiPoly {
        let u = vars();
        let [a1, a2, a3] = &self.0;
        MultiPoly::from_terms(
            &u,
            [(vec![0, 1, 1], a1.clone()), (vec![1, 0, 1], a2.clone()), (vec![1, 1, 0], a3.clone())],
        )
        .expect("arity 3")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConicProduct {
    /// Coefficients of `y³z³, x³z³, x³y³, x²y²z²`.
    pub coords: [BigRational; 4],
    pub product: MultiPoly,
}

/// Column products and the permanent of the coefficient matrix, together
/// with the expanded product sextic.
pub fn conic_product_coords(q1: &ConicInPencil, q2: &ConicInPencil, q3: &ConicInPencil) -> ConicProduct {
    let a = [&q1.0, &q2.0, &q3.0];
    let column = |j: usize| &(&a[0][j] * &a[1][j]) * &a[2][j];
    let permanent = PERMUTATIONS
        .iter()
        .map(|s| &(&a[0][s[0]] * &a[1][s[1]]) * &a[2][s[2]])
        .fold(BigRational::zero(), |acc, t| acc + t);
    let product = &(&q1.polynomial() * &q2.polynomial()) * &q3.polynomial();
    ConicProduct { coords: [column(0), column(1), column(2), permanent], product }
}

const PERMUTATIONS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];

/// Parses `a,b,c` into a conic of the pencil.
pub fn parse_conic(s: &str) -> Result<ConicInPencil> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != 3 {
        return Err(Error::InvalidConic(format!("expected three coefficients, got `{s}`")));
    }
    let mut c = Vec::with_capacity(3);
    for p in parts {
        c.push(parse_rational(p).ok_or_else(|| Error::InvalidConic(format!("bad rational `{p}`")))?);
    }
    let [a1, a2, a3]: [BigRational; 3] = c.try_into().expect("three entries");
    ConicInPencil::new(a1, a2, a3)
}

/// Sign-normalized primitive form of a nonzero integer point.
pub fn primitive(p: [BigInt; 3]) -> Result<Point> {
    let g = p.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    if g.is_zero() {
        return Err(Error::InvalidPoint("all coordinates are zero".into()));
    }
    let mut q = p.map(|c| c / &g);
    if q.iter().find(|c| !c.is_zero()).is_some_and(|c| c.is_negative()) {
        q = q.map(|c| -c);
    }
    Ok(q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn mono(e: [u32; 3]) -> MultiPoly {
        MultiPoly::term(&vars(), e.to_vec(), BigRational::one())
    }

    #[test]
    fn one_point() {
        let s = sb_space(&base_points()[..1]).unwrap();
        assert_eq!(s.dimension(), 22);
        let killed: Vec<_> = monomials().into_iter().filter(|e| !s.support().contains(e)).collect();
        let expect: Vec<_> = monomials().into_iter().filter(|e| e[0] + e[1] <= 2).collect();
        assert_eq!(killed, expect);
    }

    #[test]
    fn three_points_give_the_ten_monomials() {
        let s = sb_space(&base_points()[..3]).unwrap();
        assert_eq!(s.dimension(), 10);
        let mut support = s.support();
        let mut expect: Vec<[u32; 3]> = FIRST_LINE.iter().chain(&SECOND_LINE).copied().collect();
        support.sort();
        expect.sort();
        assert_eq!(support, expect);
        // each basis vector is a single monomial
        assert!(s.basis().iter().all(|b| b.num_terms() == 1));
    }

    #[test]
    fn four_points() {
        let s = base_space().unwrap();
        assert_eq!(s.dimension(), 4);
        for (i, b) in s.basis().iter().enumerate() {
            for (j, e) in BASE_COORDINATES.iter().enumerate() {
                assert_eq!(b.coefficient(e), r(i64::from(i == j)));
            }
            for p in base_points() {
                assert!(d4_at(b, &p).unwrap());
            }
        }
        assert!(s.support().iter().all(|e| FIRST_LINE.contains(e) || SECOND_LINE.contains(e)));
        // a fifth point in general position cuts the space down
        let mut pts = base_points();
        pts.push(point(1, 2, 3));
        assert!(sb_space(&pts).unwrap().dimension() < 4);
    }

    #[test]
    fn first_line_coefficients_are_dependent() {
        let s = sb_space(&base_points()).unwrap();
        assert_eq!(s.dimension(), 4);
        assert_eq!(crate::exactmath::rank_rational(&s.coordinate_block(&FIRST_LINE)), 3);
        assert_eq!(s.with_coordinates(&FIRST_LINE), Err(Error::Degenerate));
        let f = six_lines();
        assert!(s.contains(&f).unwrap());
        assert!(FIRST_LINE.iter().all(|e| f.coefficient(e).is_zero()));
        for b in s.basis() {
            let c: Vec<_> = FIRST_LINE.iter().map(|e| b.coefficient(e)).collect();
            assert_eq!(&c[3], &((&c[0] + &c[1] + &c[2]) * r(2)));
        }
        // the singular members of the pencil multiply to the six lines
        let d = [(0, -1, 1), (-1, 0, 1), (-1, 1, 0)].map(|(a, b, c)| ConicInPencil::from_i64(a, b, c).unwrap());
        let cp = conic_product_coords(&d[0], &d[1], &d[2]);
        assert_eq!(cp.product, -f);
        assert_eq!(cp.coords, [r(0), r(0), r(0), r(0)]);
    }

    #[test]
    fn point_validation() {
        assert!(matches!(sb_space(&[point(0, 0, 2)]), Err(Error::InvalidPoint(_))));
        assert!(matches!(sb_space(&[point(0, 0, 0)]), Err(Error::InvalidPoint(_))));
        assert!(matches!(sb_space(&[point(1, 1, 1), point(-1, -1, -1)]), Err(Error::InvalidPoint(_))));
        assert_eq!(primitive(point(0, -4, 6)).unwrap(), point(0, 2, -3));
    }

    #[test]
    fn d4_examples() {
        let p1 = point(0, 0, 1);
        assert!(d4_at(&mono([3, 3, 0]), &p1).unwrap());
        assert!(!d4_at(&mono([0, 0, 6]), &p1).unwrap());
        let not_sextic = &mono([3, 3, 0]) + &MultiPoly::term(&vars(), vec![1, 0, 0], r(1));
        assert_eq!(d4_at(&not_sextic, &p1), Err(Error::NotSextic));
    }

    #[test]
    fn general_position() {
        let rep = general_position_check().unwrap();
        assert_eq!(rep.family.len(), 10);
        for rel in &rep.expected {
            assert!(rel.forced, "{} not forced", rel.label);
        }
        assert!(!rep.surviving.is_empty());
        assert!(rep.holds());
        let z = vars().index_of("z").unwrap();
        for f in &rep.surviving {
            assert!(f.valuation_in(z).unwrap() >= 2);
            assert!(d4_at(f, &point(1, 1, 0)).unwrap());
        }
    }

    #[test]
    fn conic_products() {
        let q = ConicInPencil::from_i64(1, -1, 0).unwrap();
        let cp = conic_product_coords(&q, &q, &q);
        assert_eq!(cp.coords, [r(1), r(-1), r(0), r(0)]);
        // (yz − xz)³ by the binomial theorem
        let expect = &(&(&mono([0, 3, 3]) - (&mono([1, 2, 3]).scale(&r(3)))) + &mono([2, 1, 3]).scale(&r(3)))
            - &mono([3, 0, 3]);
        assert_eq!(cp.product, expect);
        assert!(ConicInPencil::from_i64(1, 1, 1).is_err());
        assert!(ConicInPencil::from_i64(0, 0, 0).is_err());
        assert_eq!(parse_conic("1/2, -1/2, 0").unwrap(), ConicInPencil::new(r(1) / r(2), r(-1) / r(2), r(0)).unwrap());
        assert!(parse_conic("1,2").is_err());
    }

    fn conic() -> impl Strategy<Value = ConicInPencil> {
        (-7i64..=7, 1i64..=5, -7i64..=7, 1i64..=5)
            .prop_filter_map("nonzero", |(n1, d1, n2, d2)| {
                let a1 = BigRational::new(n1.into(), d1.into());
                let a2 = BigRational::new(n2.into(), d2.into());
                let a3 = -(&a1 + &a2);
                ConicInPencil::new(a1, a2, a3).ok()
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn products_land_in_the_space(q1 in conic(), q2 in conic(), q3 in conic()) {
            let space = base_space().unwrap();
            let cp = conic_product_coords(&q1, &q2, &q3);
            let direct: Vec<BigRational> = FIRST_LINE.iter().map(|e| cp.product.coefficient(e)).collect();
            prop_assert_eq!(direct.as_slice(), cp.coords.as_slice());
            let coords: Vec<BigRational> = BASE_COORDINATES.iter().map(|e| cp.product.coefficient(e)).collect();
            prop_assert_eq!(space.coordinates(&cp.product).unwrap(), Some(coords));
            for p in base_points() {
                prop_assert!(d4_at(&cp.product, &p).unwrap());
            }
            prop_assert_eq!(conic_product_coords(&q2, &q3, &q1).coords, cp.coords.clone());
            prop_assert_eq!(conic_product_coords(&q3, &q2, &q1).coords, cp.coords);
        }

        #[test]
        fn d4_points_are_singular(c in prop::collection::vec(-3i64..=3, 4), x in -3i64..=3, y in -3i64..=3, z in -3i64..=3) {
            let space = base_space().unwrap();
            let f = space.basis().iter().zip(&c).fold(MultiPoly::zero(&vars()), |acc, (b, &k)| &acc + &b.scale(&r(k)));
            let p = match primitive(point(x, y, z)) { Ok(p) => p, Err(_) => return Ok(()) };
            if d4_at(&f, &p).unwrap() {
                let pt: Vec<BigRational> = p.iter().map(|v| BigRational::from_integer(v.clone())).collect();
                for v in ["x", "y", "z"] {
                    prop_assert!(f.derivative(v).unwrap().evaluate(&pt).unwrap().is_zero());
                }
            }
        }
    }
}
