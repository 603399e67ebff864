//! Explicit witnesses for a certified pair: quotient maps by each group
//! and the plane rational curve they parametrize together.
//!
//! For `G ⊂ PGL(2, F_p)` the coefficients of `∏_{g∈G} (X - g(t))` are
//! `G`-invariant rational functions of `t`; any nonconstant one has degree
//! exactly `|G|` and generates the invariant field. Sending the shared
//! regular orbit to infinity on both targets gives two maps `A/D`, `B/D`
//! over a common denominator, hence the curve `t ↦ (A : B : D)`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::criterion::PairCertificate;
use crate::error::{Error, Result};
use crate::exec::{self, Jobs};
use crate::field::PrimeModulus;
use crate::group::Subgroup;
use crate::poly::{self, ExtElem, ExtensionField, Field};
use crate::projective::{enumerate_points, ProjectiveMatrix, ProjectivePoint};

/// Dense polynomial over `F_p`, lowest degree first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    p: PrimeModulus,
    coeffs: Vec<u32>,
}

impl Polynomial {
    pub fn new(p: PrimeModulus, coeffs: &[i64]) -> Self {
        Self::from_residues(p, coeffs.iter().map(|&c| p.reduce(c)).collect())
    }

    pub(crate) fn from_residues(p: PrimeModulus, coeffs: Vec<u32>) -> Self {
        Polynomial {
            p,
            coeffs: poly::trim(&p, coeffs),
        }
    }

    pub fn zero(p: PrimeModulus) -> Self {
        Polynomial { p, coeffs: Vec::new() }
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.p
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        poly::degree(&self.coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval(&self, x: u32) -> u32 {
        poly::eval(&self.p, &self.coeffs, x)
    }

    pub fn leading(&self) -> u32 {
        poly::lead(&self.p, &self.coeffs)
    }

    /// Affine roots in `F_p`, ascending.
    pub fn rational_roots(&self) -> Vec<u32> {
        (0..self.p.get()).filter(|&x| self.eval(x) == 0).collect()
    }

    /// Monic `∏ (t - r)`.
    pub fn vanishing(p: PrimeModulus, roots: impl IntoIterator<Item = u32>) -> Self {
        let coeffs = roots
            .into_iter()
            .fold(vec![1u32], |acc, r| poly::mul(&p, &acc, &[p.neg(r), 1]));
        Self::from_residues(p, coeffs)
    }

    fn with(&self, coeffs: Vec<u32>) -> Self {
        Self::from_residues(self.p, coeffs)
    }
}

/// A reduced fraction with monic denominator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

/// Value of a rational function at a point of `P¹(F_p)`; `None` is infinity.
pub type ProjectiveValue = Option<u32>;

impl RationalFunction {
    /// Reduces `num/den`; `den` must be nonzero.
    pub fn new(num: Polynomial, den: Polynomial) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let p = num.p;
        let g = poly::gcd(&p, &num.coeffs, &den.coeffs);
        let mut n = poly::divrem(&p, &num.coeffs, &g).0;
        let mut d = poly::divrem(&p, &den.coeffs, &g).0;
        let c = p.inv(poly::lead(&p, &d)).expect("nonzero denominator");
        n = poly::scale(&p, &n, c);
        d = poly::scale(&p, &d, c);
        RationalFunction {
            num: num.with(n),
            den: den.with(d),
        }
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.den
    }

    /// `max(deg num, deg den)`.
    pub fn degree(&self) -> usize {
        self.num.degree().unwrap_or(0).max(self.den.degree().unwrap_or(0))
    }

    pub fn is_constant(&self) -> bool {
        self.degree() == 0
    }

    /// Value at a rational point; `(0:1)` is `t = ∞`.
    pub fn eval(&self, q: ProjectivePoint) -> ProjectiveValue {
        let p = self.num.p;
        match q.affine_coord() {
            Some(t) => {
                let d = self.den.eval(t);
                if d == 0 {
                    None
                } else {
                    Some(p.mul(self.num.eval(t), p.inv(d).unwrap()))
                }
            }
            None => {
                let dn = self.num.degree();
                let dd = self.den.degree().expect("nonzero denominator");
                match dn {
                    None => Some(0),
                    Some(n) if n > dd => None,
                    Some(n) if n == dd => Some(p.mul(self.num.leading(), p.inv(self.den.leading()).unwrap())),
                    Some(_) => Some(0),
                }
            }
        }
    }

    /// Poles in `P¹(F_p)`.
    pub fn rational_poles(&self) -> Vec<ProjectivePoint> {
        enumerate_points(self.num.p)
            .into_iter()
            .filter(|&q| self.eval(q).is_none())
            .collect()
    }

    /// True iff `f∘g = f` as rational functions, where `g` acts on the affine
    /// coordinate by `t ↦ (b + d·t)/(a + c·t)` (the row action on `(1:t)`).
    pub fn is_invariant_under(&self, g: &ProjectiveMatrix) -> bool {
        let p = self.num.p;
        let [a, b, c, d] = g.entries();
        let m = self.degree();
        let top = [b, d];
        let bottom = [a, c];
        let num_g = poly::eval_homogeneous(&p, &self.num.coeffs, m, &top, &bottom);
        let den_g = poly::eval_homogeneous(&p, &self.den.coeffs, m, &top, &bottom);
        poly::mul(&p, &num_g, &self.den.coeffs) == poly::mul(&p, &self.num.coeffs, &den_g)
    }
}

/// Image point of the affine coordinate under `g`, as `(numerator, denominator)`
/// linear polynomials in `t`.
fn moebius_parts(g: &ProjectiveMatrix) -> ([u32; 2], [u32; 2]) {
    let [a, b, c, d] = g.entries();
    ([b, d], [a, c])
}

/// A degree-`|G|` rational function constant on `G`-orbits.
///
/// Expands `∏_g (X·den_g(t) - num_g(t))` and returns the first elementary
/// symmetric function `e_j(g(t) : g ∈ G)` of full degree; if none has full
/// degree, linear combinations `e_j + λ·e_k` are scanned.
pub fn invariant_generator(g: &Subgroup) -> Result<RationalFunction> {
    let p = g.modulus();
    let n = g.order();
    // coeffs[k] is the coefficient of X^k, a polynomial in t
    let mut coeffs: Vec<Vec<u32>> = vec![vec![1]];
    for elem in g.elements() {
        let (num, den) = moebius_parts(elem);
        let (num, den) = (poly::trim(&p, num.to_vec()), poly::trim(&p, den.to_vec()));
        let mut next = vec![Vec::new(); coeffs.len() + 1];
        for (k, c) in coeffs.iter().enumerate() {
            next[k + 1] = poly::add(&p, &next[k + 1], &poly::mul(&p, c, &den));
            next[k] = poly::sub(&p, &next[k], &poly::mul(&p, c, &num));
        }
        coeffs = next;
    }
    let top = Polynomial::from_residues(p, coeffs[n].clone());
    // e_j = (-1)^j · coeffs[n - j] / coeffs[n]
    let elementary: Vec<Polynomial> = (1..=n)
        .map(|j| {
            let c = &coeffs[n - j];
            let c = if j % 2 == 1 { poly::scale(&p, c, p.neg(1)) } else { c.clone() };
            Polynomial::from_residues(p, c)
        })
        .collect();
    for e in &elementary {
        let f = RationalFunction::new(e.clone(), top.clone());
        if f.degree() == n {
            return Ok(f);
        }
    }
    for (j, ej) in elementary.iter().enumerate() {
        for ek in &elementary[j + 1..] {
            for lambda in 1..p.get() {
                let combo = poly::add(&p, &ej.coeffs, &poly::scale(&p, &ek.coeffs, lambda));
                let f = RationalFunction::new(Polynomial::from_residues(p, combo), top.clone());
                if f.degree() == n {
                    return Ok(f);
                }
            }
        }
    }
    Err(Error::DegenerateInvariant { expected: n })
}

/// Moves the fiber through `q` to infinity: `h = 1/(f - f(q))`, or `h = f`
/// when `q` is already a pole of `f`. The poles of `h` are then exactly the
/// orbit of `q`, each simple.
pub fn moebius_adjust(f: &RationalFunction, g: &Subgroup, q: ProjectivePoint) -> Result<RationalFunction> {
    let p = g.modulus();
    let orbit = g.orbit(q)?;
    if orbit.len() != g.order() {
        return Err(Error::IrregularOrbit {
            point: q,
            length: orbit.len(),
            order: g.order(),
        });
    }
    let h = match f.eval(q) {
        None => f.clone(),
        Some(c) => {
            let shifted = poly::sub(&p, &f.num.coeffs, &poly::scale(&p, &f.den.coeffs, c));
            RationalFunction::new(f.den.clone(), Polynomial::from_residues(p, shifted))
        }
    };
    let poles: std::collections::BTreeSet<_> = h.rational_poles().into_iter().collect();
    let affine = orbit.iter().filter(|q| !q.is_infinity()).count();
    if poles != orbit || h.den.degree() != Some(affine) {
        return Err(Error::EvaluationAtPole(format!(
            "poles of the adjusted map at {q} do not form a simple orbit"
        )));
    }
    Ok(h)
}

/// The plane curve `t ↦ (A(t) : B(t) : D(t))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveParametrization {
    pub p: PrimeModulus,
    pub a: Polynomial,
    pub b: Polynomial,
    pub d: Polynomial,
    pub degree: usize,
}

/// Curve wire format.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveJson {
    pub p: u64,
    pub degree: usize,
    #[serde(rename = "A")]
    pub a: Vec<u32>,
    #[serde(rename = "B")]
    pub b: Vec<u32>,
    #[serde(rename = "D")]
    pub d: Vec<u32>,
}

impl CurveParametrization {
    /// Builds a parametrization from components; `degree` is their max degree.
    pub fn new(a: Polynomial, b: Polynomial, d: Polynomial) -> Self {
        let degree = [&a, &b, &d]
            .iter()
            .filter_map(|x| x.degree())
            .max()
            .unwrap_or(0);
        CurveParametrization {
            p: a.p,
            a,
            b,
            d,
            degree,
        }
    }

    pub fn max_component_degree(&self) -> usize {
        [&self.a, &self.b, &self.d]
            .iter()
            .filter_map(|x| x.degree())
            .max()
            .unwrap_or(0)
    }

    pub fn first_map(&self) -> RationalFunction {
        RationalFunction::new(self.a.clone(), self.d.clone())
    }

    pub fn second_map(&self) -> RationalFunction {
        RationalFunction::new(self.b.clone(), self.d.clone())
    }

    pub fn to_json(&self) -> CurveJson {
        CurveJson {
            p: self.p.get() as u64,
            degree: self.degree,
            a: self.a.coeffs.clone(),
            b: self.b.coeffs.clone(),
            d: self.d.coeffs.clone(),
        }
    }

    pub fn from_json(json: &CurveJson) -> Result<Self> {
        let p = PrimeModulus::new(json.p)?;
        let lift = |c: &[u32]| Polynomial::new(p, &c.iter().map(|&x| x as i64).collect::<Vec<_>>());
        Ok(CurveParametrization {
            p,
            a: lift(&json.a),
            b: lift(&json.b),
            d: lift(&json.d),
            degree: json.degree,
        })
    }
}

/// Quotient maps for both groups, aligned on the certificate's base orbit.
pub fn emit_parametrization(cert: &PairCertificate, jobs: Jobs) -> Result<CurveParametrization> {
    if !cert.passed() {
        return Err(Error::PairFails(cert.failures.join("; ")));
    }
    let (g1, g2) = cert.subgroups()?;
    let q = cert.base_point;
    let maps = exec::map(&[g1, g2], jobs, |g| {
        invariant_generator(g).and_then(|f| moebius_adjust(&f, g, q))
    });
    let mut maps = maps.into_iter();
    let h1 = maps.next().unwrap()?;
    let h2 = maps.next().unwrap()?;
    // both denominators are the monic vanishing polynomial of the shared orbit
    debug_assert_eq!(h1.den, h2.den);
    let curve = CurveParametrization {
        p: cert.p,
        a: h1.num,
        b: h2.num,
        d: h1.den,
        degree: cert.degree,
    };
    debug_assert_eq!(curve.max_component_degree(), curve.degree);
    Ok(curve)
}

/// Degree of the reduced implicit equation of the image curve.
///
/// The resultant `R(x, y) = Res_t(A - x·D, B - y·D)` equals `c·F^k`, where
/// `F` is the implicit equation and `k` the degree of the parametrization
/// onto its image. Restricting `R` to random lines over an extension field
/// and counting distinct roots recovers `deg F`, which equals the component
/// degree exactly when the parametrization is birational.
pub fn implicit_degree(curve: &CurveParametrization) -> Result<usize> {
    let p = curve.p;
    let common = poly::gcd(&p, &poly::gcd(&p, &curve.a.coeffs, &curve.b.coeffs), &curve.d.coeffs);
    if poly::degree(&common).is_some_and(|d| d > 0) || curve.d.is_zero() {
        return Err(Error::ResultantVanishes);
    }
    let k = ExtensionField::with_min_size(p, 1 << 24);
    let size = (p.get() as u64).saturating_pow(k.degree() as u32);
    let lift = |c: &Polynomial| -> Vec<ExtElem> { c.coeffs.iter().map(|&x| k.embed(x)).collect() };
    let (a, b, d) = (lift(&curve.a), lift(&curve.b), lift(&curve.d));
    let deg = |v: &Vec<ExtElem>| poly::degree(v).unwrap_or(0);
    let n = deg(&a).max(deg(&d));
    let m = deg(&b).max(deg(&d));
    let nodes: Vec<ExtElem> = (0..=(n + m) as u64).map(|i| k.from_index(i)).collect();

    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_1dea);
    let mut best: Option<usize> = None;
    for _ in 0..3 {
        let mut pick = || k.from_index(rng.gen_range(0..size));
        let (x0, y0, dx, dy) = (pick(), pick(), pick(), pick());
        let values: Vec<ExtElem> = nodes
            .iter()
            .map(|&u| {
                let x = k.add(x0, k.mul(u, dx));
                let y = k.add(y0, k.mul(u, dy));
                let f = poly::sub(&k, &a, &poly::scale(&k, &d, x));
                let g = poly::sub(&k, &b, &poly::scale(&k, &d, y));
                poly::resultant_formal(&k, &f, n, &g, m)
            })
            .collect();
        let restricted = poly::interpolate(&k, &nodes, &values);
        if restricted.is_empty() {
            continue;
        }
        let count = poly::distinct_root_count(&k, &restricted);
        best = Some(best.map_or(count, |b| b.max(count)));
    }
    best.ok_or(Error::ResultantVanishes)
}

/// True iff every level set of `h` on `P¹(F_p)` is a union of `G`-orbits.
pub fn fibers_are_orbit_unions(h: &RationalFunction, g: &Subgroup) -> bool {
    enumerate_points(g.modulus()).into_iter().all(|q| {
        let v = h.eval(q);
        g.elements().iter().all(|a| h.eval(q.apply(a)) == v)
    })
}
