//! Dense univariate polynomial arithmetic over a finite field.
//!
//! Polynomials are coefficient vectors, lowest degree first, with no
//! trailing zeros (the zero polynomial is the empty vector). All routines
//! are generic over a [`Field`] context so the same code serves `F_p` and
//! the small extension fields used for generic-point evaluation.

use std::fmt::Debug;

use crate::field::{prime_factors, PrimeModulus};

/// Arithmetic context for a finite field.
pub trait Field: Clone + Send + Sync {
    type Elem: Copy + PartialEq + Eq + Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn of_int(&self, x: u64) -> Self::Elem;
    fn add(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem;
    fn sub(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem;
    fn mul(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem;
    fn neg(&self, a: Self::Elem) -> Self::Elem;
    fn inv(&self, a: Self::Elem) -> Option<Self::Elem>;
    fn characteristic(&self) -> u32;
    /// The unique `b` with `b^p = a`.
    fn pth_root(&self, a: Self::Elem) -> Self::Elem;

    fn is_zero(&self, a: Self::Elem) -> bool {
        a == self.zero()
    }

    fn pow(&self, a: Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a;
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }
}

impl Field for PrimeModulus {
    type Elem = u32;

    fn zero(&self) -> u32 {
        0
    }
    fn one(&self) -> u32 {
        1
    }
    fn of_int(&self, x: u64) -> u32 {
        (x % self.get() as u64) as u32
    }
    fn add(&self, a: u32, b: u32) -> u32 {
        PrimeModulus::add(*self, a, b)
    }
    fn sub(&self, a: u32, b: u32) -> u32 {
        PrimeModulus::sub(*self, a, b)
    }
    fn mul(&self, a: u32, b: u32) -> u32 {
        PrimeModulus::mul(*self, a, b)
    }
    fn neg(&self, a: u32) -> u32 {
        PrimeModulus::neg(*self, a)
    }
    fn inv(&self, a: u32) -> Option<u32> {
        PrimeModulus::inv(*self, a).ok()
    }
    fn characteristic(&self) -> u32 {
        self.get()
    }
    fn pth_root(&self, a: u32) -> u32 {
        a
    }
}

pub fn trim<F: Field>(f: &F, mut a: Vec<F::Elem>) -> Vec<F::Elem> {
    while a.last().is_some_and(|&c| f.is_zero(c)) {
        a.pop();
    }
    a
}

/// Degree, or `None` for the zero polynomial.
pub fn degree<E>(a: &[E]) -> Option<usize> {
    a.len().checked_sub(1)
}

pub fn lead<F: Field>(f: &F, a: &[F::Elem]) -> F::Elem {
    a.last().copied().unwrap_or_else(|| f.zero())
}

pub fn constant<F: Field>(f: &F, c: F::Elem) -> Vec<F::Elem> {
    trim(f, vec![c])
}

pub fn add<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    let n = a.len().max(b.len());
    let z = f.zero();
    trim(
        f,
        (0..n)
            .map(|i| f.add(*a.get(i).unwrap_or(&z), *b.get(i).unwrap_or(&z)))
            .collect(),
    )
}

pub fn sub<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    let n = a.len().max(b.len());
    let z = f.zero();
    trim(
        f,
        (0..n)
            .map(|i| f.sub(*a.get(i).unwrap_or(&z), *b.get(i).unwrap_or(&z)))
            .collect(),
    )
}

pub fn scale<F: Field>(f: &F, a: &[F::Elem], c: F::Elem) -> Vec<F::Elem> {
    trim(f, a.iter().map(|&x| f.mul(x, c)).collect())
}

pub fn mul<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![f.zero(); a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if f.is_zero(x) {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = f.add(out[i + j], f.mul(x, y));
        }
    }
    trim(f, out)
}

/// Quotient and remainder; panics on division by zero.
pub fn divrem<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> (Vec<F::Elem>, Vec<F::Elem>) {
    let db = degree(b).expect("division by the zero polynomial");
    let inv_lead = f.inv(lead(f, b)).expect("nonzero leading coefficient");
    let mut r = a.to_vec();
    if r.len() <= db {
        return (Vec::new(), r);
    }
    let mut q = vec![f.zero(); r.len() - db];
    for i in (0..q.len()).rev() {
        let c = f.mul(r[i + db], inv_lead);
        q[i] = c;
        if f.is_zero(c) {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            r[i + j] = f.sub(r[i + j], f.mul(c, y));
        }
    }
    r.truncate(db);
    (trim(f, q), trim(f, r))
}

pub fn rem<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    divrem(f, a, b).1
}

pub fn monic<F: Field>(f: &F, a: &[F::Elem]) -> Vec<F::Elem> {
    match a.last() {
        None => Vec::new(),
        Some(&c) => scale(f, a, f.inv(c).expect("nonzero leading coefficient")),
    }
}

/// Monic gcd by the Euclidean algorithm; `gcd(0, 0) = 0`.
pub fn gcd<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    let (mut x, mut y) = (a.to_vec(), b.to_vec());
    while !y.is_empty() {
        let r = rem(f, &x, &y);
        x = y;
        y = r;
    }
    monic(f, &x)
}

pub fn derivative<F: Field>(f: &F, a: &[F::Elem]) -> Vec<F::Elem> {
    trim(
        f,
        a.iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| f.mul(c, f.of_int(i as u64)))
            .collect(),
    )
}

pub fn eval<F: Field>(f: &F, a: &[F::Elem], x: F::Elem) -> F::Elem {
    a.iter().rev().fold(f.zero(), |acc, &c| f.add(f.mul(acc, x), c))
}

/// Homogenized evaluation `v^n · a(u/v)` for a chosen formal degree `n >= deg a`.
pub fn eval_homogeneous<F: Field>(f: &F, a: &[F::Elem], n: usize, u: &[F::Elem], v: &[F::Elem]) -> Vec<F::Elem> {
    debug_assert!(a.len() <= n + 1);
    let mut upow = vec![f.one()];
    let mut out = Vec::new();
    // v powers from the top down
    let mut vpows = vec![vec![f.one()]];
    for _ in 0..n {
        let next = mul(f, vpows.last().unwrap(), v);
        vpows.push(next);
    }
    for (i, &c) in a.iter().enumerate() {
        if !f.is_zero(c) {
            let term = scale(f, &mul(f, &upow, &vpows[n - i]), c);
            out = add(f, &out, &term);
        }
        upow = mul(f, &upow, u);
    }
    out
}

/// Resultant of `a` and `b` with respect to their actual degrees.
///
/// Uses `Res(a, b) = (-1)^{deg a · deg b} · lc(b)^{deg a - deg r} · Res(b, r)`
/// with `r = a mod b`. Zero if either input is zero.
pub fn resultant<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> F::Elem {
    let (mut a, mut b) = (a.to_vec(), b.to_vec());
    let mut acc = f.one();
    loop {
        let (Some(n), Some(m)) = (degree(&a), degree(&b)) else {
            return f.zero();
        };
        if m == 0 {
            return f.mul(acc, f.pow(b[0], n as u64));
        }
        if n == 0 {
            return f.mul(acc, f.pow(a[0], m as u64));
        }
        let r = rem(f, &a, &b);
        let Some(dr) = degree(&r) else {
            return f.zero();
        };
        if (n * m) % 2 == 1 {
            acc = f.neg(acc);
        }
        acc = f.mul(acc, f.pow(lead(f, &b), (n - dr) as u64));
        a = b;
        b = r;
    }
}

/// Sylvester resultant for formal degrees `n >= deg a`, `m >= deg b`.
pub fn resultant_formal<F: Field>(f: &F, a: &[F::Elem], n: usize, b: &[F::Elem], m: usize) -> F::Elem {
    if m == 0 {
        return f.pow(b.first().copied().unwrap_or_else(|| f.zero()), n as u64);
    }
    if n == 0 {
        return f.pow(a.first().copied().unwrap_or_else(|| f.zero()), m as u64);
    }
    let (Some(da), Some(db)) = (degree(a), degree(b)) else {
        return f.zero();
    };
    debug_assert!(da <= n && db <= m);
    if da < n && db < m {
        return f.zero();
    }
    let core = resultant(f, a, b);
    if da < n {
        // expanding along the first column peels one (-1)^m·lc(b) per missing degree
        let mut c = f.pow(lead(f, b), (n - da) as u64);
        if (m * (n - da)) % 2 == 1 {
            c = f.neg(c);
        }
        f.mul(c, core)
    } else if db < m {
        f.mul(f.pow(lead(f, a), (m - db) as u64), core)
    } else {
        core
    }
}

/// Inverse Frobenius applied coefficientwise to `a(x^p)`, giving `b` with `b^p = a`.
fn pth_root_poly<F: Field>(f: &F, a: &[F::Elem]) -> Vec<F::Elem> {
    let p = f.characteristic() as usize;
    trim(f, a.iter().step_by(p).map(|&c| f.pth_root(c)).collect())
}

/// Number of distinct roots over the algebraic closure.
///
/// Handles multiplicities divisible by the characteristic by peeling off
/// `p`-th powers.
pub fn distinct_root_count<F: Field>(f: &F, a: &[F::Elem]) -> usize {
    match degree(a) {
        None | Some(0) => return 0,
        _ => {}
    }
    let da = derivative(f, a);
    if da.is_empty() {
        return distinct_root_count(f, &pth_root_poly(f, a));
    }
    let g = gcd(f, a, &da);
    // s holds each root whose multiplicity is prime to p exactly once
    let s = divrem(f, &monic(f, a), &g).0;
    let mut rest = g;
    loop {
        let common = gcd(f, &rest, &s);
        if degree(&common) == Some(0) {
            break;
        }
        rest = divrem(f, &rest, &common).0;
    }
    degree(&s).unwrap_or(0) + distinct_root_count(f, &rest)
}

/// Interpolating polynomial through `(xs[i], ys[i])` by Newton divided differences.
pub fn interpolate<F: Field>(f: &F, xs: &[F::Elem], ys: &[F::Elem]) -> Vec<F::Elem> {
    assert_eq!(xs.len(), ys.len());
    let n = xs.len();
    let mut coef = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            let num = f.sub(coef[i], coef[i - 1]);
            let den = f.sub(xs[i], xs[i - j]);
            coef[i] = f.mul(num, f.inv(den).expect("distinct nodes"));
        }
    }
    let mut out: Vec<F::Elem> = Vec::new();
    for i in (0..n).rev() {
        out = mul(f, &out, &[f.neg(xs[i]), f.one()]);
        out = add(f, &out, &[coef[i]]);
    }
    out
}

pub const MAX_EXTENSION_DEGREE: usize = 12;

/// `F_{p^e}` as `F_p[x]/(m(x))` for a monic irreducible `m` of degree `e`.
#[derive(Clone, Debug)]
pub struct ExtensionField {
    p: PrimeModulus,
    degree: usize,
    modulus: Vec<u32>,
}

pub type ExtElem = [u32; MAX_EXTENSION_DEGREE];

impl ExtensionField {
    /// The field of degree `e` over `F_p` defined by the lexicographically
    /// first monic irreducible polynomial.
    pub fn new(p: PrimeModulus, e: usize) -> Self {
        assert!((1..=MAX_EXTENSION_DEGREE).contains(&e));
        let q = p.get() as u64;
        let mut tail = 0u64;
        loop {
            let mut m: Vec<u32> = (0..e).map(|i| ((tail / q.pow(i as u32)) % q) as u32).collect();
            m.push(1);
            if is_irreducible(p, &m) {
                return ExtensionField { p, degree: e, modulus: m };
            }
            tail += 1;
        }
    }

    /// Smallest degree with at least `min_size` elements, capped at
    /// [`MAX_EXTENSION_DEGREE`].
    pub fn with_min_size(p: PrimeModulus, min_size: u64) -> Self {
        let q = p.get() as u64;
        let mut e = 1usize;
        let mut size = q;
        while size < min_size && e < MAX_EXTENSION_DEGREE {
            e += 1;
            size = size.saturating_mul(q);
        }
        Self::new(p, e)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn base(&self) -> PrimeModulus {
        self.p
    }

    pub fn embed(&self, x: u32) -> ExtElem {
        let mut out = [0; MAX_EXTENSION_DEGREE];
        out[0] = x % self.p.get();
        out
    }

    /// Element whose coordinates are the base-`p` digits of `n`.
    pub fn from_index(&self, mut n: u64) -> ExtElem {
        let q = self.p.get() as u64;
        let mut out = [0; MAX_EXTENSION_DEGREE];
        for slot in out.iter_mut().take(self.degree) {
            *slot = (n % q) as u32;
            n /= q;
        }
        out
    }

    fn to_poly(&self, a: &ExtElem) -> Vec<u32> {
        trim(&self.p, a[..self.degree].to_vec())
    }

    fn embed_poly(&self, a: &[u32]) -> ExtElem {
        let mut out = [0; MAX_EXTENSION_DEGREE];
        out[..a.len()].copy_from_slice(a);
        out
    }
}

fn is_irreducible(p: PrimeModulus, m: &[u32]) -> bool {
    let e = m.len() - 1;
    if e == 1 {
        return true;
    }
    let q = p.get() as u64;
    let x = vec![0, 1];
    // x^(p^k) mod m for k = 0..=e
    let mut frob = vec![rem(&p, &x, m)];
    for _ in 0..e {
        let prev = frob.last().unwrap().clone();
        frob.push(pow_mod(&p, &prev, q, m));
    }
    if sub(&p, &frob[e], &frob[0]) != Vec::<u32>::new() {
        return false;
    }
    prime_factors(e as u64).into_iter().all(|r| {
        let k = e / r as usize;
        let diff = sub(&p, &frob[k], &frob[0]);
        degree(&gcd(&p, &diff, m)) == Some(0)
    })
}

fn pow_mod<F: Field>(f: &F, a: &[F::Elem], mut e: u64, m: &[F::Elem]) -> Vec<F::Elem> {
    let mut base = rem(f, a, m);
    let mut acc = constant(f, f.one());
    while e > 0 {
        if e & 1 == 1 {
            acc = rem(f, &mul(f, &acc, &base), m);
        }
        base = rem(f, &mul(f, &base, &base), m);
        e >>= 1;
    }
    acc
}

impl Field for ExtensionField {
    type Elem = ExtElem;

    fn zero(&self) -> ExtElem {
        [0; MAX_EXTENSION_DEGREE]
    }

    fn one(&self) -> ExtElem {
        self.embed(1)
    }

    fn of_int(&self, x: u64) -> ExtElem {
        self.embed((x % self.p.get() as u64) as u32)
    }

    fn add(&self, a: ExtElem, b: ExtElem) -> ExtElem {
        let mut out = a;
        for i in 0..self.degree {
            out[i] = self.p.add(a[i], b[i]);
        }
        out
    }

    fn sub(&self, a: ExtElem, b: ExtElem) -> ExtElem {
        let mut out = a;
        for i in 0..self.degree {
            out[i] = self.p.sub(a[i], b[i]);
        }
        out
    }

    fn neg(&self, a: ExtElem) -> ExtElem {
        let mut out = a;
        for i in 0..self.degree {
            out[i] = self.p.neg(a[i]);
        }
        out
    }

    fn mul(&self, a: ExtElem, b: ExtElem) -> ExtElem {
        let e = self.degree;
        let q = self.p.get() as u64;
        let mut wide = [0u64; 2 * MAX_EXTENSION_DEGREE];
        for i in 0..e {
            if a[i] == 0 {
                continue;
            }
            for j in 0..e {
                wide[i + j] = (wide[i + j] + a[i] as u64 * b[j] as u64) % q;
            }
        }
        // reduce by the monic modulus from the top
        for k in (e..2 * e - 1).rev() {
            let c = wide[k];
            if c == 0 {
                continue;
            }
            wide[k] = 0;
            for i in 0..e {
                let sub = c * self.modulus[i] as u64 % q;
                wide[k - e + i] = (wide[k - e + i] + q - sub) % q;
            }
        }
        let mut out = [0; MAX_EXTENSION_DEGREE];
        for i in 0..e {
            out[i] = wide[i] as u32;
        }
        out
    }

    fn inv(&self, a: ExtElem) -> Option<ExtElem> {
        let p = self.p;
        let a = self.to_poly(&a);
        if a.is_empty() {
            return None;
        }
        // extended Euclid on (modulus, a), tracking the coefficient of a
        let (mut r0, mut r1) = (self.modulus.clone(), a);
        let (mut t0, mut t1): (Vec<u32>, Vec<u32>) = (Vec::new(), vec![1]);
        while !r1.is_empty() {
            let (q, r) = divrem(&p, &r0, &r1);
            let t = sub(&p, &t0, &mul(&p, &q, &t1));
            r0 = r1;
            r1 = r;
            t0 = t1;
            t1 = t;
        }
        let c = p.inv(r0[0]).ok()?;
        Some(self.embed_poly(&scale(&p, &t0, c)))
    }

    fn characteristic(&self) -> u32 {
        self.p.get()
    }

    fn pth_root(&self, a: ExtElem) -> ExtElem {
        // Frobenius has order e, so its inverse is the (e-1)-th iterate.
        let q = self.p.get() as u64;
        let mut out = a;
        for _ in 1..self.degree {
            out = self.pow(out, q);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fp(p: u64) -> PrimeModulus {
        PrimeModulus::new(p).unwrap()
    }

    /// Sylvester determinant by Gaussian elimination, independent of the
    /// Euclidean resultant.
    fn sylvester_oracle(p: PrimeModulus, a: &[u32], n: usize, b: &[u32], m: usize) -> u32 {
        let size = n + m;
        if size == 0 {
            return 1;
        }
        let coeff = |v: &[u32], d: usize, k: usize| -> u32 {
            // k-th entry from the top of a degree-d formal polynomial
            let idx = d - k;
            *v.get(idx).unwrap_or(&0)
        };
        let mut mat = vec![vec![0u32; size]; size];
        for r in 0..m {
            for k in 0..=n {
                mat[r][r + k] = coeff(a, n, k);
            }
        }
        for r in 0..n {
            for k in 0..=m {
                mat[m + r][r + k] = coeff(b, m, k);
            }
        }
        let mut det = 1u32;
        for col in 0..size {
            let Some(piv) = (col..size).find(|&r| mat[r][col] != 0) else {
                return 0;
            };
            if piv != col {
                mat.swap(piv, col);
                det = p.neg(det);
            }
            det = p.mul(det, mat[col][col]);
            let inv = p.inv(mat[col][col]).unwrap();
            let (done, rest) = mat.split_at_mut(col + 1);
            let pivot_row = &done[col];
            for row in rest.iter_mut().take(size - col - 1) {
                let factor = p.mul(row[col], inv);
                for (x, &y) in row.iter_mut().zip(pivot_row).take(size).skip(col) {
                    *x = p.sub(*x, p.mul(factor, y));
                }
            }
        }
        det
    }

    #[test]
    fn divrem_and_gcd() {
        let p = fp(11);
        // (x - 1)(x - 2) = x² - 3x + 2 and (x - 1)(x + 4)
        let a = vec![2, 8, 1];
        let b = vec![p.reduce(-4), 3, 1];
        assert_eq!(gcd(&p, &a, &b), vec![10, 1]);
        let (q, r) = divrem(&p, &a, &b);
        assert_eq!(add(&p, &mul(&p, &q, &b), &r), a);
        assert_eq!(gcd(&p, &[], &[]), Vec::<u32>::new());
        assert_eq!(gcd(&p, &a, &[]), a);
    }

    #[test]
    fn resultant_matches_sylvester() {
        let p = fp(13);
        let polys: Vec<Vec<u32>> = vec![
            vec![1],
            vec![3, 1],
            vec![2, 0, 1],
            vec![5, 7, 0, 4],
            vec![1, 1, 1, 1, 1],
            vec![0, 0, 3],
            vec![12, 4, 9, 0, 0, 2],
        ];
        for a in &polys {
            for b in &polys {
                let (n, m) = (degree(a).unwrap(), degree(b).unwrap());
                assert_eq!(resultant(&p, a, b), sylvester_oracle(p, a, n, b, m), "{a:?} {b:?}");
                for (en, em) in [(n + 1, m), (n, m + 2), (n + 2, m + 1)] {
                    assert_eq!(
                        resultant_formal(&p, a, en, b, em),
                        sylvester_oracle(p, a, en, b, em),
                        "{a:?}/{en} {b:?}/{em}"
                    );
                }
            }
        }
        // common root x = 0
        assert_eq!(resultant(&p, &[0, 1], &[0, 0, 3]), 0);
    }

    #[test]
    fn distinct_roots_handles_characteristic_powers() {
        let p = fp(3);
        // (x - 1)^3 (x - 2)^2 (x^2 + 1): roots 1, 2 and a conjugate pair
        let mut a = vec![1u32];
        for _ in 0..3 {
            a = mul(&p, &a, &[2, 1]);
        }
        for _ in 0..2 {
            a = mul(&p, &a, &[1, 1]);
        }
        a = mul(&p, &a, &[1, 0, 1]);
        assert_eq!(distinct_root_count(&p, &a), 4);
        // x^9 - 1 = (x - 1)^9
        let mut b = vec![0u32; 10];
        b[0] = 2;
        b[9] = 1;
        assert_eq!(distinct_root_count(&p, &b), 1);
        assert_eq!(distinct_root_count(&p, &[5]), 0);
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        let p = fp(59);
        let target: Vec<u32> = vec![3, 0, 58, 17, 1];
        let xs: Vec<u32> = (0..5).collect();
        let ys: Vec<u32> = xs.iter().map(|&x| eval(&p, &target, x)).collect();
        assert_eq!(interpolate(&p, &xs, &ys), target);
    }

    #[test]
    fn extension_field_axioms() {
        for (p, e) in [(2u64, 5usize), (11, 4), (59, 3)] {
            let k = ExtensionField::new(fp(p), e);
            let size = p.pow(e as u32);
            let a = k.from_index(size / 3 + 1);
            let b = k.from_index(size / 7 + 2);
            let ai = k.inv(a).unwrap();
            assert_eq!(k.mul(a, ai), k.one());
            assert_eq!(k.mul(a, b), k.mul(b, a));
            // Fermat in F_{p^e}
            assert_eq!(k.pow(a, size - 1), k.one());
            assert_eq!(k.pow(k.pth_root(a), p), a);
            assert_eq!(k.inv(k.zero()), None);
        }
        assert_eq!(ExtensionField::with_min_size(fp(11), 1_000_000).degree(), 6);
    }
}
