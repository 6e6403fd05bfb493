//! Integral lattices, discriminant groups and forms, 2-elementary
//! invariants, overlattices, orthogonal complements and roots.
//!
//! Root lattices are negative definite (Gram = −Cartan) so that roots have
//! self-intersection −2, matching the K3 sign conventions.

use alloc::format;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exactmath::{
    det_exact, det_rational, hermite_normal_form, integer_kernel, signature, smith_normal_form,
    IntMatrix, RatMatrix,
};

/// Largest discriminant group that [`discriminant_form`] will enumerate.
pub const ENUMERATION_BOUND: u64 = 1 << 16;

/// Largest rank accepted by [`roots`].
pub const ROOT_RANK_LIMIT: usize = 10;

/// A free abelian group with a symmetric integral bilinear form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Lattice {
    gram: IntMatrix,
}

/// Named lattices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Standard {
    A1,
    D4,
    E7,
    E8,
    U,
    /// `I_{m,n}`: diagonal form with `m` entries `+1` and `n` entries `−1`.
    I(usize, usize),
    /// `I_{m,n}(k)`.
    ScaledI(usize, usize, i64),
    /// `⟨k⟩`: rank one, generator of self-intersection `k`.
    Span(i64),
    /// `E8 ⊥ E8 ⊥ U ⊥ U ⊥ U`.
    K3,
}

fn from_edges(rank: usize, edges: &[(usize, usize)]) -> Lattice {
    let mut g = IntMatrix::zeros(rank, rank);
    for i in 0..rank {
        g[(i, i)] = BigInt::from(-2);
    }
    for &(a, b) in edges {
        g[(a, b)] = BigInt::one();
        g[(b, a)] = BigInt::one();
    }
    Lattice { gram: g }
}

impl Lattice {
    pub fn new(gram: IntMatrix) -> Result<Self> {
        if !gram.is_square() {
            return Err(Error::NonSquare { rows: gram.rows(), cols: gram.cols() });
        }
        if !gram.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        Ok(Lattice { gram })
    }

    pub fn standard(name: &Standard) -> Result<Self> {
        Ok(match *name {
            Standard::A1 => Lattice::a1(),
            Standard::D4 => Lattice::d4(),
            Standard::E7 => Lattice::e7(),
            Standard::E8 => Lattice::e8(),
            Standard::U => Lattice::u(),
            Standard::I(m, n) => Lattice::odd_unimodular(m, n),
            Standard::ScaledI(m, n, k) => Lattice::odd_unimodular(m, n).rescale(k)?,
            Standard::Span(k) => Lattice::span(k),
            Standard::K3 => Lattice::k3(),
        })
    }

    pub fn a1() -> Self {
        from_edges(1, &[])
    }

    /// Nodes 0, 1, 2 are the ends and node 3 is the centre.
    pub fn d4() -> Self {
        from_edges(4, &[(0, 3), (1, 3), (2, 3)])
    }

    /// Bourbaki numbering: chain 1–3–4–5–6–7 with node 2 on node 4.
    pub fn e7() -> Self {
        from_edges(7, &[(0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (1, 3)])
    }

    /// Bourbaki numbering: chain 1–3–4–5–6–7–8 with node 2 on node 4.
    pub fn e8() -> Self {
        from_edges(8, &[(0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (1, 3)])
    }

    pub fn u() -> Self {
        Lattice { gram: IntMatrix::from_i64(&[&[0, 1], &[1, 0]]) }
    }

    pub fn odd_unimodular(m: usize, n: usize) -> Self {
        let diag = core::iter::repeat_n(BigInt::one(), m)
            .chain(core::iter::repeat_n(-BigInt::one(), n))
            .collect();
        Lattice { gram: IntMatrix::diagonal(diag) }
    }

    pub fn span(k: i64) -> Self {
        Lattice { gram: IntMatrix::from_i64(&[&[k]]) }
    }

    pub fn k3() -> Self {
        let u = Lattice::u();
        Lattice::e8()
            .direct_sum(&Lattice::e8())
            .direct_sum(&u)
            .direct_sum(&u)
            .direct_sum(&u)
    }

    pub fn gram(&self) -> &IntMatrix {
        &self.gram
    }

    pub fn rank(&self) -> usize {
        self.gram.rows()
    }

    /// `L(k)`: same group, form multiplied by `k`.
    pub fn rescale(&self, k: i64) -> Result<Self> {
        if k == 0 {
            return Err(Error::ZeroScale);
        }
        Ok(Lattice { gram: self.gram.scaled(&BigInt::from(k)) })
    }

    pub fn direct_sum(&self, other: &Lattice) -> Self {
        Lattice { gram: self.gram.block_diag(&other.gram) }
    }

    /// `L^{⊥n}`.
    pub fn power(&self, n: usize) -> Self {
        let mut out = Lattice { gram: IntMatrix::zeros(0, 0) };
        for _ in 0..n {
            out = out.direct_sum(self);
        }
        out
    }

    pub fn is_even(&self) -> bool {
        (0..self.rank()).all(|i| self.gram[(i, i)].is_even())
    }

    pub fn det(&self) -> BigInt {
        det_exact(&self.gram).expect("gram is square")
    }

    pub fn is_nondegenerate(&self) -> bool {
        !self.det().is_zero()
    }

    pub fn signature(&self) -> Result<(usize, usize)> {
        signature(&self.gram.to_rational())
    }

    pub fn pairing(&self, x: &[BigInt], y: &[BigInt]) -> BigInt {
        self.gram.bilinear(x, y)
    }

    /// Pairing of two vectors of `L ⊗ ℚ`, in lattice coordinates.
    pub fn pairing_rational(&self, x: &[BigRational], y: &[BigRational]) -> BigRational {
        self.gram.to_rational().bilinear(x, y)
    }

    fn ensure_nondegenerate(&self) -> Result<()> {
        if self.is_nondegenerate() {
            Ok(())
        } else {
            Err(Error::Degenerate)
        }
    }
}

/// `D_L = L∨/L` with explicit generator lifts in `L ⊗ ℚ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiscriminantGroup {
    /// Elementary divisors greater than one, in divisibility order.
    pub divisors: Vec<BigInt>,
    /// One lift per divisor, in lattice coordinates.
    pub generators: Vec<Vec<BigRational>>,
}

impl DiscriminantGroup {
    pub fn order(&self) -> BigInt {
        self.divisors.iter().product()
    }

    /// Minimal number of generators.
    pub fn ell(&self) -> usize {
        self.divisors.len()
    }

    pub fn is_two_elementary(&self) -> bool {
        let two = BigInt::from(2);
        self.divisors.iter().all(|d| *d == two)
    }
}

/// Order of the class of `v ∈ L ⊗ ℚ` modulo `L` (the lcm of denominators).
pub fn class_order(v: &[BigRational]) -> BigInt {
    v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}

/// Whether `a − b ∈ L`.
pub fn same_class(a: &[BigRational], b: &[BigRational]) -> bool {
    a.iter().zip(b).all(|(x, y)| (x - y).is_integer())
}

/// Elementary divisors via Smith form; generators are columns of `V`
/// divided by the matching divisor.
pub fn discriminant_group(l: &Lattice) -> Result<DiscriminantGroup> {
    l.ensure_nondegenerate()?;
    let snf = smith_normal_form(&l.gram);
    let g = l.gram.to_rational();
    let mut divisors = Vec::new();
    let mut generators = Vec::new();
    for (i, d) in snf.diagonal().into_iter().enumerate() {
        if d.is_one() {
            continue;
        }
        let dq = BigRational::from_integer(d.clone());
        let lift: Vec<BigRational> = snf
            .v
            .column(i)
            .into_iter()
            .map(|x| BigRational::from_integer(x) / &dq)
            .collect();
        if !g.apply(&lift).iter().all(BigRational::is_integer) {
            return Err(Error::Verification("generator lift is not in the dual".into()));
        }
        if class_order(&lift) != d {
            return Err(Error::Verification(format!("generator of order {d} has wrong order")));
        }
        divisors.push(d);
        generators.push(lift);
    }
    Ok(DiscriminantGroup { divisors, generators })
}

/// `x mod 2` into `[0, 2)`.
fn mod2(x: &BigRational) -> BigRational {
    let two = BigRational::from_integer(BigInt::from(2));
    x - &two * (x / &two).floor()
}

fn mod1(x: &BigRational) -> BigRational {
    x - x.floor()
}

/// Finite quadratic form `q_L : D_L → ℚ/2ℤ` on an even lattice.
#[derive(Clone, Debug)]
pub struct DiscriminantForm {
    pub group: DiscriminantGroup,
    /// Every element as a coefficient vector on the generators, with `q` in `[0, 2)`.
    pub q_values: Vec<(Vec<u64>, BigRational)>,
    /// `b(gᵢ, gⱼ)` in `[0, 1)`.
    pub b_values: RatMatrix,
    pub signature: (usize, usize),
}

/// Parity, ℓ-invariant and signature of an even 2-elementary lattice.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct NikulinTriple {
    pub delta: u8,
    pub ell: usize,
    pub signature: (usize, usize),
}

impl DiscriminantForm {
    /// 0 iff `q` takes only integral values.
    pub fn delta(&self) -> u8 {
        if self.q_values.iter().all(|(_, q)| q.is_integer()) {
            0
        } else {
            1
        }
    }

    pub fn ell(&self) -> usize {
        self.group.ell()
    }

    pub fn is_two_elementary(&self) -> bool {
        self.group.is_two_elementary()
    }

    pub fn nikulin_triple(&self) -> Option<NikulinTriple> {
        self.is_two_elementary().then(|| NikulinTriple {
            delta: self.delta(),
            ell: self.ell(),
            signature: self.signature,
        })
    }

    /// Index of the element with the given coefficients in `q_values`.
    pub fn index_of(&self, coeffs: &[u64]) -> usize {
        let mut idx = 0usize;
        for (c, d) in coeffs.iter().zip(&self.group.divisors).rev() {
            idx = idx * d.to_usize().expect("bounded") + *c as usize;
        }
        idx
    }

    /// Sum of two elements given as coefficient vectors.
    pub fn add(&self, x: &[u64], y: &[u64]) -> Vec<u64> {
        x.iter()
            .zip(y)
            .zip(&self.group.divisors)
            .map(|((a, b), d)| (a + b) % d.to_u64().expect("bounded"))
            .collect()
    }

    /// `b(x, y)` mod 1 for coefficient vectors.
    pub fn bilinear(&self, x: &[u64], y: &[u64]) -> BigRational {
        let mut acc = BigRational::zero();
        for (i, a) in x.iter().enumerate() {
            for (j, b) in y.iter().enumerate() {
                acc += &self.b_values[(i, j)] * BigRational::from_integer(BigInt::from(a * b));
            }
        }
        mod1(&acc)
    }
}

/// Enumerates `D_L` (at most [`ENUMERATION_BOUND`] elements) and evaluates
/// `q` on each element through a rational lift.
pub fn discriminant_form(l: &Lattice) -> Result<DiscriminantForm> {
    if !l.is_even() {
        return Err(Error::OddLattice);
    }
    let group = discriminant_group(l)?;
    let order = group.order();
    if order > BigInt::from(ENUMERATION_BOUND) {
        return Err(Error::GroupTooLarge(order.to_string()));
    }
    let radices: Vec<u64> = group.divisors.iter().map(|d| d.to_u64().expect("bounded")).collect();
    let k = radices.len();
    let g = l.gram.to_rational();
    let mut gens = RatMatrix::zeros(k, k);
    for i in 0..k {
        for j in 0..k {
            gens[(i, j)] = g.bilinear(&group.generators[i], &group.generators[j]);
        }
    }
    let b_values = gens.map(mod1);

    let total = order.to_u64().expect("bounded");
    let mut q_values = Vec::with_capacity(total as usize);
    let mut coeffs = vec![0u64; k];
    for _ in 0..total {
        let c: Vec<BigRational> =
            coeffs.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect();
        q_values.push((coeffs.clone(), mod2(&gens.bilinear(&c, &c))));
        for (digit, radix) in coeffs.iter_mut().zip(&radices) {
            *digit += 1;
            if *digit < *radix {
                break;
            }
            *digit = 0;
        }
    }
    let signature = l.signature()?;
    Ok(DiscriminantForm { group, q_values, b_values, signature })
}

/// Isometry test for even indefinite 2-elementary lattices through their
/// `(δ, ℓ, signature)` triples. Anything outside that domain is an error.
pub fn classify_even_2elem_isometric(a: &Lattice, b: &Lattice) -> Result<bool> {
    Ok(nikulin_triple(a)? == nikulin_triple(b)?)
}

pub fn nikulin_triple(l: &Lattice) -> Result<NikulinTriple> {
    let inapplicable = |why: &str| Error::ClassificationInapplicable(why.into());
    if !l.is_even() {
        return Err(inapplicable("lattice is odd"));
    }
    if !l.is_nondegenerate() {
        return Err(inapplicable("lattice is degenerate"));
    }
    let form = discriminant_form(l)?;
    let triple = form.nikulin_triple().ok_or_else(|| inapplicable("lattice is not 2-elementary"))?;
    let (p, n) = triple.signature;
    if p == 0 || n == 0 {
        return Err(inapplicable("lattice is definite"));
    }
    Ok(triple)
}

/// Saturated sublattice orthogonal to some vectors, with its basis.
#[derive(Clone, Debug)]
pub struct Complement {
    pub lattice: Lattice,
    /// Basis vectors in the ambient lattice's coordinates.
    pub basis: Vec<Vec<BigInt>>,
}

pub fn orthogonal_complement(l: &Lattice, vectors: &[Vec<BigInt>]) -> Result<Complement> {
    let n = l.rank();
    if let Some(v) = vectors.iter().find(|v| v.len() != n) {
        return Err(Error::Dimension(format!("vector of length {} in rank {n}", v.len())));
    }
    let basis: Vec<Vec<BigInt>> = if vectors.is_empty() {
        IntMatrix::identity(n).to_rows()
    } else {
        let pairing = IntMatrix::from_rows(
            vectors.iter().map(|v| l.gram.transpose().apply(v)).collect(),
        )?;
        integer_kernel(&pairing)
    };
    let k = basis.len();
    let mut gram = IntMatrix::zeros(k, k);
    for i in 0..k {
        for j in 0..k {
            gram[(i, j)] = l.pairing(&basis[i], &basis[j]);
        }
    }
    Ok(Complement { lattice: Lattice::new(gram)?, basis })
}

/// An even overlattice together with its basis in `L ⊗ ℚ`.
#[derive(Clone, Debug)]
pub struct Overlattice {
    pub lattice: Lattice,
    /// Rows are basis vectors in the coordinates of the original lattice.
    pub basis: RatMatrix,
    pub index: BigInt,
}

/// The even overlattice generated by `L` and the glue vectors.
pub fn overlattice(l: &Lattice, glue: &[Vec<BigRational>]) -> Result<Overlattice> {
    let n = l.rank();
    if !l.is_even() {
        return Err(Error::NotEvenOverlattice("base lattice is odd".into()));
    }
    l.ensure_nondegenerate()?;
    let g = l.gram.to_rational();
    for (i, v) in glue.iter().enumerate() {
        if v.len() != n {
            return Err(Error::Dimension(format!("glue vector of length {} in rank {n}", v.len())));
        }
        if !g.apply(v).iter().all(BigRational::is_integer) {
            return Err(Error::NotEvenOverlattice(format!("glue {i} pairs non-integrally with L")));
        }
        for (j, w) in glue.iter().enumerate().skip(i) {
            let p = g.bilinear(v, w);
            if !p.is_integer() {
                return Err(Error::NotEvenOverlattice(format!("glue {i} and {j} pair to {p}")));
            }
            if i == j && !p.to_integer().is_even() {
                return Err(Error::NotEvenOverlattice(format!("glue {i} has odd norm {p}")));
            }
        }
    }

    let denom = glue.iter().fold(BigInt::one(), |acc, v| acc.lcm(&class_order(v)));
    let dq = BigRational::from_integer(denom.clone());
    let mut rows: Vec<Vec<BigInt>> = IntMatrix::identity(n).scaled(&denom).to_rows();
    for v in glue {
        rows.push(v.iter().map(|x| (x * &dq).to_integer()).collect());
    }
    let hnf = hermite_normal_form(&IntMatrix::from_rows(rows)?);
    debug_assert_eq!(hnf.rows(), n);
    let basis = hnf.to_rational().map(|x| x / &dq);
    let gram = basis.mul(&g)?.mul(&basis.transpose())?;
    let gram = gram
        .to_integer()
        .ok_or_else(|| Error::Verification("overlattice Gram is not integral".into()))?;
    let covolume = det_rational(&basis)?.abs();
    let index = covolume.recip();
    if !index.is_integer() {
        return Err(Error::Verification("non-integral overlattice index".into()));
    }
    Ok(Overlattice { lattice: Lattice::new(gram)?, basis, index: index.to_integer() })
}

/// All `v` with `(v, v) = −2`. Positive-definite lattices have none.
///
/// Fincke–Pohst enumeration on the positive form `−G` with exact rational
/// completion of squares.
pub fn roots(l: &Lattice) -> Result<Vec<Vec<BigInt>>> {
    let n = l.rank();
    if n > ROOT_RANK_LIMIT {
        return Err(Error::RankTooLarge(n));
    }
    let (p, m) = l.signature()?;
    if p > 0 && m > 0 {
        return Err(Error::Indefinite);
    }
    if m == 0 {
        return Ok(Vec::new());
    }
    let neg = l.gram.to_rational().map(|x| -x);
    let q = completed_squares(&neg);
    let mut out = Vec::new();
    let mut x = vec![BigInt::zero(); n];
    let target = BigRational::from_integer(BigInt::from(2));
    enumerate_level(&q, n, &target, &mut x, &mut out);
    Ok(out)
}

// q[i][i] = dᵢ and q[i][j] (j > i) = μᵢⱼ with Q(x) = Σ dᵢ (xᵢ + Σⱼ μᵢⱼ xⱼ)².
fn completed_squares(a: &RatMatrix) -> RatMatrix {
    let n = a.rows();
    let mut q = a.clone();
    for i in 0..n {
        for j in i + 1..n {
            let v = q[(i, j)].clone();
            q[(j, i)] = v;
            let mu = &q[(i, j)] / &q[(i, i)];
            q[(i, j)] = mu;
        }
        for k in i + 1..n {
            for l in k..n {
                let delta = &q[(k, i)] * &q[(i, l)];
                q[(k, l)] -= delta;
            }
        }
    }
    q
}

fn enumerate_level(
    q: &RatMatrix,
    level: usize,
    remaining: &BigRational,
    x: &mut Vec<BigInt>,
    out: &mut Vec<Vec<BigInt>>,
) {
    if level == 0 {
        if remaining.is_zero() {
            out.push(x.clone());
        }
        return;
    }
    let i = level - 1;
    let n = q.rows();
    let mut centre = BigRational::zero();
    for j in i + 1..n {
        centre -= &q[(i, j)] * BigRational::from_integer(x[j].clone());
    }
    let d = &q[(i, i)];
    let cost = |xi: &BigInt| {
        let t = BigRational::from_integer(xi.clone()) - &centre;
        d * &t * &t
    };
    let start = centre.floor().to_integer();
    let mut xi = start.clone();
    loop {
        let c = cost(&xi);
        if &c > remaining {
            break;
        }
        x[i] = xi.clone();
        enumerate_level(q, i, &(remaining - &c), x, out);
        xi -= 1;
    }
    let mut xi = start + 1;
    loop {
        let c = cost(&xi);
        if &c > remaining {
            break;
        }
        x[i] = xi.clone();
        enumerate_level(q, i, &(remaining - &c), x, out);
        xi += 1;
    }
    x[i] = BigInt::zero();
}

/// The lattices around four `D4` points on a degree-2 K3 surface.
pub mod d4_quartet {
    use super::*;

    /// Coordinate of `E_{point, node}` in `⟨2⟩ ⊥ D4^{⊥4}` (both 1-based);
    /// coordinate 0 is the hyperplane class `ℓ`. Node 4 is the centre.
    pub fn e_index(point: usize, node: usize) -> usize {
        assert!((1..=4).contains(&point) && (1..=4).contains(&node));
        1 + 4 * (point - 1) + (node - 1)
    }

    /// `P₀ = ⟨2⟩ ⊥ D4^{⊥4}`.
    pub fn p0() -> Lattice {
        Lattice::span(2).direct_sum(&Lattice::d4().power(4))
    }

    /// Half the strict transform of the `i`-th conic,
    /// `(2ℓ − Σⱼ (E_{j,i} + E_{j,1} + E_{j,2} + E_{j,3} + 2E_{j,4})) / 2`.
    pub fn conic_glue(i: usize) -> Vec<BigRational> {
        assert!((1..=3).contains(&i));
        let mut v = vec![BigInt::zero(); 17];
        v[0] = BigInt::from(2);
        for j in 1..=4 {
            v[e_index(j, i)] -= 1;
            for k in 1..=3 {
                v[e_index(j, k)] -= 1;
            }
            v[e_index(j, 4)] -= 2;
        }
        let two = BigInt::from(2);
        v.into_iter().map(|x| BigRational::new(x, two.clone())).collect()
    }

    /// `P`: the overlattice of `P₀` glued by the first two conic classes.
    pub fn p() -> Result<Overlattice> {
        overlattice(&p0(), &[conic_glue(1), conic_glue(2)])
    }

    /// `Q = I_{2,3}(2)`.
    pub fn q() -> Lattice {
        Lattice::odd_unimodular(2, 3).rescale(2).expect("nonzero scale")
    }
}
