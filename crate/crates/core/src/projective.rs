//! Points of the projective line over `F_p` and canonical classes in
//! `PGL(2, F_p)`.
//!
//! The action is on row vectors: a matrix `A` sends `(s:t)` to `(s,t)·A`.
//! Consequently `apply(apply(q, a), b) == apply(q, a.compose(&b))`, and the
//! transformation "first `a`, then `b`" is the matrix product `a·b`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{PrimeFieldElement, PrimeModulus};

/// A point `(s:t)` in canonical form: `s = 1`, or `(s, t) = (0, 1)`.
///
/// In the affine coordinate `t/s`, the point `(0:1)` is infinity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjectivePoint {
    s: u32,
    t: u32,
    p: PrimeModulus,
}

impl ProjectivePoint {
    /// Canonicalizes `(s:t)`; fails on `(0:0)`.
    pub fn new(p: PrimeModulus, s: i64, t: i64) -> Result<Self> {
        let (s, t) = (p.reduce(s), p.reduce(t));
        Self::from_residues(p, s, t)
    }

    pub(crate) fn from_residues(p: PrimeModulus, s: u32, t: u32) -> Result<Self> {
        if s == 0 {
            if t == 0 {
                return Err(Error::InvalidPartition("(0:0) is not a point".into()));
            }
            Ok(ProjectivePoint { s: 0, t: 1, p })
        } else {
            let inv = p.inv(s)?;
            Ok(ProjectivePoint {
                s: 1,
                t: p.mul(t, inv),
                p,
            })
        }
    }

    /// The point `(1:t)`.
    pub fn affine(p: PrimeModulus, t: i64) -> Self {
        ProjectivePoint {
            s: 1,
            t: p.reduce(t),
            p,
        }
    }

    /// The point `(0:1)`.
    pub fn infinity(p: PrimeModulus) -> Self {
        ProjectivePoint { s: 0, t: 1, p }
    }

    pub fn s(self) -> PrimeFieldElement {
        self.p.element(self.s as i64)
    }

    pub fn t(self) -> PrimeFieldElement {
        self.p.element(self.t as i64)
    }

    pub fn modulus(self) -> PrimeModulus {
        self.p
    }

    pub fn coords(self) -> [u32; 2] {
        [self.s, self.t]
    }

    pub fn is_infinity(self) -> bool {
        self.s == 0
    }

    /// Affine coordinate `t`, or `None` for `(0:1)`.
    pub fn affine_coord(self) -> Option<u32> {
        (self.s == 1).then_some(self.t)
    }

    /// Position in [`enumerate_points`] order.
    pub fn index(self) -> usize {
        if self.s == 0 {
            0
        } else {
            1 + self.t as usize
        }
    }

    /// Image under the row action `(s,t) ↦ (s,t)·A`.
    pub fn apply(self, a: &ProjectiveMatrix) -> ProjectivePoint {
        debug_assert_eq!(self.p, a.p);
        let p = self.p;
        let [m11, m12, m21, m22] = a.e;
        let s = p.add(p.mul(self.s, m11), p.mul(self.t, m21));
        let t = p.add(p.mul(self.s, m12), p.mul(self.t, m22));
        Self::from_residues(p, s, t).expect("invertible matrices map points to points")
    }
}

impl fmt::Display for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}:{})", self.s, self.t)
    }
}

/// All `p + 1` points: `(0:1)` followed by `(1:t)` for `t = 0..p`.
pub fn enumerate_points(p: PrimeModulus) -> Vec<ProjectivePoint> {
    std::iter::once(ProjectivePoint::infinity(p))
        .chain((0..p.get()).map(|t| ProjectivePoint { s: 1, t, p }))
        .collect()
}

/// A class in `PGL(2, F_p)`, stored as the representative whose first
/// nonzero entry (reading order `a, b, c, d`) is 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjectiveMatrix {
    p: PrimeModulus,
    e: [u32; 4],
}

/// Wire form of a matrix: `[[a, b], [c, d]]` with arbitrary signed entries.
pub type MatrixLiteral = [[i64; 2]; 2];

impl ProjectiveMatrix {
    /// Canonical class of `[[a, b], [c, d]]`; entries are reduced mod `p`.
    pub fn new(p: PrimeModulus, rows: MatrixLiteral) -> Result<Self> {
        let [[a, b], [c, d]] = rows;
        let e = [p.reduce(a), p.reduce(b), p.reduce(c), p.reduce(d)];
        Self::from_residues(p, e).map_err(|_| Error::SingularMatrix(a, b, c, d, p.get()))
    }

    pub(crate) fn from_residues(p: PrimeModulus, e: [u32; 4]) -> Result<Self> {
        let det = p.sub(p.mul(e[0], e[3]), p.mul(e[1], e[2]));
        if det == 0 {
            return Err(Error::SingularMatrix(
                e[0] as i64,
                e[1] as i64,
                e[2] as i64,
                e[3] as i64,
                p.get(),
            ));
        }
        let lead = *e.iter().find(|&&x| x != 0).expect("nonzero determinant");
        let inv = p.inv(lead)?;
        Ok(ProjectiveMatrix {
            p,
            e: e.map(|x| p.mul(x, inv)),
        })
    }

    pub fn identity(p: PrimeModulus) -> Self {
        ProjectiveMatrix { p, e: [1, 0, 0, 1] }
    }

    /// `diag(c, 1)`; `c` must be nonzero.
    pub fn diag(p: PrimeModulus, c: i64) -> Result<Self> {
        Self::new(p, [[c, 0], [0, 1]])
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.p
    }

    pub fn entries(&self) -> [u32; 4] {
        self.e
    }

    pub fn rows(&self) -> [[u32; 2]; 2] {
        [[self.e[0], self.e[1]], [self.e[2], self.e[3]]]
    }

    pub fn literal(&self) -> MatrixLiteral {
        let [a, b, c, d] = self.e.map(|x| x as i64);
        [[a, b], [c, d]]
    }

    pub fn entry(&self, row: usize, col: usize) -> PrimeFieldElement {
        self.p.element(self.e[2 * row + col] as i64)
    }

    pub fn is_identity(&self) -> bool {
        self.e == [1, 0, 0, 1]
    }

    /// Canonical class of the matrix product `self · rhs`.
    pub fn compose(&self, rhs: &ProjectiveMatrix) -> ProjectiveMatrix {
        debug_assert_eq!(self.p, rhs.p);
        let p = self.p;
        let [a, b, c, d] = self.e;
        let [e, f, g, h] = rhs.e;
        let dot = |x: u32, y: u32, z: u32, w: u32| p.add(p.mul(x, y), p.mul(z, w));
        Self::from_residues(p, [dot(a, e, b, g), dot(a, f, b, h), dot(c, e, d, g), dot(c, f, d, h)])
            .expect("product of invertible matrices is invertible")
    }

    /// Inverse class via the adjugate.
    pub fn inverse(&self) -> ProjectiveMatrix {
        let p = self.p;
        let [a, b, c, d] = self.e;
        Self::from_residues(p, [d, p.neg(b), p.neg(c), a]).expect("adjugate of invertible matrix")
    }

    /// `self^n` for any integer `n`.
    pub fn pow(&self, n: i64) -> ProjectiveMatrix {
        let mut base = if n < 0 { self.inverse() } else { *self };
        let mut n = n.unsigned_abs();
        let mut acc = Self::identity(self.p);
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.compose(&base);
            }
            base = base.compose(&base);
            n >>= 1;
        }
        acc
    }

    /// `c⁻¹ · self · c`, which realizes the transformation `ι∘γ∘ι⁻¹` for
    /// `γ = self`, `ι = c` under the row action.
    pub fn conjugate_by(&self, c: &ProjectiveMatrix) -> ProjectiveMatrix {
        c.inverse().compose(self).compose(c)
    }

    /// Least `n >= 1` with `self^n ∼ I`, by iterated composition.
    pub fn order(&self) -> u64 {
        let bound = self.p.pgl_order();
        let mut acc = *self;
        let mut n = 1u64;
        while !acc.is_identity() {
            acc = acc.compose(self);
            n += 1;
            assert!(n <= bound, "element order exceeds |PGL(2, p)|");
        }
        n
    }

    pub fn apply(&self, q: ProjectivePoint) -> ProjectivePoint {
        q.apply(self)
    }
}

impl fmt::Display for ProjectiveMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.e;
        write!(f, "[[{a},{b}],[{c},{d}]]")
    }
}

impl Serialize for ProjectiveMatrix {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.rows().serialize(serializer)
    }
}

/// Every class of `PGL(2, F_p)` in lexicographic order of canonical entries.
pub fn enumerate_pgl(p: PrimeModulus) -> impl Iterator<Item = ProjectiveMatrix> {
    let q = p.get();
    let lower = (0..q).flat_map(move |c| (0..q).map(move |d| [0, 1, c, d]));
    let upper = (0..q).flat_map(move |b| {
        (0..q).flat_map(move |c| (0..q).map(move |d| [1, b, c, d]))
    });
    lower
        .chain(upper)
        .filter_map(move |e| ProjectiveMatrix::from_residues(p, e).ok())
}

/// Wire form of a point, `[s, t]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointLiteral(pub [i64; 2]);

#[cfg(test)]
mod tests {
    use super::*;

    fn fp(p: u64) -> PrimeModulus {
        PrimeModulus::new(p).unwrap()
    }

    fn m(p: u64, rows: MatrixLiteral) -> ProjectiveMatrix {
        ProjectiveMatrix::new(fp(p), rows).unwrap()
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(m(11, [[2, 0], [0, 2]]), ProjectiveMatrix::identity(fp(11)));
        assert_eq!(m(11, [[4, 4], [4, 7]]).rows(), [[1, 1], [1, 10]]);
        // 12⁻¹ = 2 mod 23, so [[0,12],[2,0]] scales to [[0,1],[4,0]].
        assert_eq!(fp(23).inv(12), Ok(2));
        assert_eq!(m(23, [[0, 12], [2, 0]]).rows(), [[0, 1], [4, 0]]);
        assert_eq!(
            ProjectiveMatrix::new(fp(11), [[1, 2], [2, 4]]),
            Err(Error::SingularMatrix(1, 2, 2, 4, 11))
        );
        assert_eq!(m(11, [[-1, 0], [0, 1]]).rows(), [[1, 0], [0, 10]]);
    }

    #[test]
    fn compose_and_inverse_examples() {
        let p = fp(11);
        let sigma = m(11, [[0, 2], [1, 0]]);
        let tau = m(11, [[1, 2], [-1, -1]]);
        let id = ProjectiveMatrix::identity(p);
        assert_eq!(id.compose(&sigma), sigma);
        // direct product [[0,2],[1,0]]·[[1,2],[10,10]] = [[20,20],[1,2]]
        assert_eq!(sigma.compose(&tau), m(11, [[20, 20], [1, 2]]));
        assert_eq!(sigma.compose(&tau), tau.compose(&sigma));

        assert!(sigma.pow(0).is_identity());
        let tau_prime = m(11, [[4, 1], [4, 16]]);
        let t3 = tau_prime.pow(3);
        assert_eq!(t3.compose(&sigma), m(11, [[2, 9], [1, 5]]));
        assert_eq!(sigma.compose(&t3), m(11, [[6, 9], [1, 9]]));

        assert!(id.inverse().is_identity());
        assert_eq!(sigma.inverse(), sigma);
        let xi = m(11, [[2, 1], [1, 0]]);
        assert!(xi.compose(&xi.inverse()).is_identity());
        assert_eq!(xi.pow(-1), xi.inverse());
        assert_eq!(xi.pow(6).rows(), [[1, 1], [1, 10]]);
        assert_eq!(xi.pow(4), m(11, [[7, 1], [1, 5]]));
    }

    #[test]
    fn apply_examples() {
        let p = fp(23);
        let q = ProjectivePoint::infinity(p);
        assert_eq!(q.apply(&ProjectiveMatrix::identity(p)), q);
        let xi = m(23, [[0, -1], [-1, 1]]);
        let alpha = p.primitive_element();
        assert_eq!(alpha.pow(7).unwrap().value(), 17);
        assert_eq!(q.apply(&xi.pow(8)), ProjectivePoint::affine(p, 17));
        // ξ¹² ∼ [[1,2],[2,22]] sends (0:1) to (1:11) = (1:α⁹).
        assert_eq!(xi.pow(12).rows(), [[1, 2], [2, 22]]);
        assert_eq!(q.apply(&xi.pow(12)), ProjectivePoint::affine(p, 11));
        assert_eq!(alpha.pow(9).unwrap().value(), 11);
    }

    #[test]
    fn order_examples() {
        assert_eq!(ProjectiveMatrix::identity(fp(11)).order(), 1);
        assert_eq!(m(11, [[2, 1], [1, 0]]).order(), 12);
        let p = fp(59);
        let a = p.primitive_element();
        let tau_prime = ProjectiveMatrix::new(
            p,
            [[a.pow(2).unwrap().value() as i64, a.pow(3).unwrap().value() as i64], [-1, -1]],
        )
        .unwrap();
        assert_eq!(tau_prime.order(), 30);
    }

    #[test]
    fn points() {
        let p2 = enumerate_points(fp(2));
        assert_eq!(p2.len(), 3);
        assert_eq!(p2[0].coords(), [0, 1]);
        assert_eq!(p2[1].coords(), [1, 0]);
        assert_eq!(p2[2].coords(), [1, 1]);
        let p11 = enumerate_points(fp(11));
        assert_eq!(p11.len(), 12);
        for (i, q) in p11.iter().enumerate() {
            assert_eq!(q.index(), i);
        }
        assert_eq!(ProjectivePoint::new(fp(11), 0, 5).unwrap(), ProjectivePoint::infinity(fp(11)));
        assert_eq!(ProjectivePoint::new(fp(11), 2, 4).unwrap(), ProjectivePoint::affine(fp(11), 2));
        assert!(ProjectivePoint::new(fp(11), 0, 11).is_err());
    }

    #[test]
    fn pgl_enumeration_has_full_order() {
        for p in [2u64, 3, 5, 7] {
            let all: Vec<_> = enumerate_pgl(fp(p)).collect();
            assert_eq!(all.len() as u64, fp(p).pgl_order());
            let mut sorted = all.clone();
            sorted.sort();
            sorted.dedup();
            assert_eq!(sorted, all);
        }
    }
}
