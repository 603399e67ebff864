//! The two-subgroup criterion for a pair of outer Galois points.
//!
//! Two different subgroups `G1, G2` of equal order `d` certify a plane
//! rational curve of degree `d` with two outer Galois points when
//! `G1 ∩ G2 = {1}` and some point `Q` has regular orbits `G1·Q = G2·Q`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exec::{self, Jobs};
use crate::field::PrimeModulus;
use crate::group::{GroupKind, Subgroup, DEFAULT_CLOSURE_CAP};
use crate::projective::{enumerate_points, MatrixLiteral, ProjectiveMatrix, ProjectivePoint};

pub const NOT_DIFFERENT: &str = "groups not different";
pub const ORDERS_DIFFER: &str = "group orders differ";
pub const NONTRIVIAL_INTERSECTION: &str = "intersection not trivial";
pub const ORBIT1_NOT_REGULAR: &str = "orbit of G1 not regular";
pub const ORBIT2_NOT_REGULAR: &str = "orbit of G2 not regular";
pub const ORBITS_DIFFER: &str = "orbits differ";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

/// Evidence for (or against) a pair, with every condition evaluated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairCertificate {
    pub p: PrimeModulus,
    pub g1: Vec<ProjectiveMatrix>,
    pub g2: Vec<ProjectiveMatrix>,
    pub kind1: GroupKind,
    pub kind2: GroupKind,
    /// Degree of the promised plane curve, `|G1|`.
    pub degree: usize,
    pub base_point: ProjectivePoint,
    pub intersection_size: usize,
    pub orbit1: BTreeSet<ProjectivePoint>,
    pub orbit2: BTreeSet<ProjectivePoint>,
    pub verdict: Verdict,
    pub failures: Vec<String>,
}

impl PairCertificate {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn orbit_equal(&self) -> bool {
        self.orbit1 == self.orbit2
    }

    pub fn to_json(&self) -> CertificateJson {
        CertificateJson {
            p: self.p.get() as u64,
            g1: self.g1.iter().map(|m| m.literal()).collect(),
            g2: self.g2.iter().map(|m| m.literal()).collect(),
            kind1: self.kind1.to_string(),
            kind2: self.kind2.to_string(),
            degree: self.degree,
            base_point: self.base_point.coords().map(|x| x as i64),
            intersection_size: self.intersection_size,
            orbit_equal: self.orbit_equal(),
            orbit_length: self.orbit1.len(),
            verdict: self.verdict,
            failures: self.failures.clone(),
        }
    }

    /// Rebuilds both groups from the stored generators.
    pub fn subgroups(&self) -> Result<(Subgroup, Subgroup)> {
        Ok((
            Subgroup::generate(self.p, &self.g1, DEFAULT_CLOSURE_CAP)?,
            Subgroup::generate(self.p, &self.g2, DEFAULT_CLOSURE_CAP)?,
        ))
    }
}

/// Certificate wire format; field names are part of the external contract.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateJson {
    pub p: u64,
    pub g1: Vec<MatrixLiteral>,
    pub g2: Vec<MatrixLiteral>,
    pub kind1: String,
    pub kind2: String,
    pub degree: usize,
    pub base_point: [i64; 2],
    pub intersection_size: usize,
    pub orbit_equal: bool,
    pub orbit_length: usize,
    pub verdict: Verdict,
    pub failures: Vec<String>,
}

impl CertificateJson {
    /// Deterministic rendering with sorted keys.
    pub fn to_string_sorted(&self) -> String {
        let value = serde_json::to_value(self).expect("certificate serializes");
        serde_json::to_string_pretty(&value).expect("value renders")
    }

    /// Re-derives the certificate from `p`, the generators and the base point.
    pub fn reverify(&self) -> Result<PairCertificate> {
        let p = PrimeModulus::new(self.p)?;
        let parse = |gens: &[MatrixLiteral]| -> Result<Vec<ProjectiveMatrix>> {
            gens.iter().map(|&m| ProjectiveMatrix::new(p, m)).collect()
        };
        let g1 = Subgroup::generate(p, &parse(&self.g1)?, DEFAULT_CLOSURE_CAP)?;
        let g2 = Subgroup::generate(p, &parse(&self.g2)?, DEFAULT_CLOSURE_CAP)?;
        let q = ProjectivePoint::new(p, self.base_point[0], self.base_point[1])?;
        check_pair(&g1, &g2, q)
    }
}

/// Evaluates every condition at base point `q` without short-circuiting.
pub fn check_pair(g1: &Subgroup, g2: &Subgroup, q: ProjectivePoint) -> Result<PairCertificate> {
    let p = g1.modulus();
    if g2.modulus() != p {
        return Err(Error::ModulusMismatch(p.get(), g2.modulus().get()));
    }
    let intersection = g1.intersect(g2)?;
    let orbit1 = g1.orbit(q)?;
    let orbit2 = g2.orbit(q)?;
    let degree = g1.order();

    let mut failures = Vec::new();
    if g1.same_elements(g2) {
        failures.push(NOT_DIFFERENT.to_string());
    }
    if g1.order() != g2.order() {
        failures.push(ORDERS_DIFFER.to_string());
    }
    if intersection.order() != 1 {
        failures.push(NONTRIVIAL_INTERSECTION.to_string());
    }
    if orbit1.len() != degree {
        failures.push(ORBIT1_NOT_REGULAR.to_string());
    }
    if orbit2.len() != g2.order() {
        failures.push(ORBIT2_NOT_REGULAR.to_string());
    }
    if orbit1 != orbit2 {
        failures.push(ORBITS_DIFFER.to_string());
    }

    Ok(PairCertificate {
        p,
        g1: g1.generators().to_vec(),
        g2: g2.generators().to_vec(),
        kind1: g1.recognize(),
        kind2: g2.recognize(),
        degree,
        base_point: q,
        intersection_size: intersection.order(),
        orbit1,
        orbit2,
        verdict: if failures.is_empty() {
            Verdict::Pass
        } else {
            Verdict::Fail
        },
        failures,
    })
}

/// Runs [`check_pair`] at every rational base point.
///
/// The result passes iff every base point passes. Its base point is `(0:1)`
/// on success and the first failing point otherwise; failures are tagged
/// with the points at which they occur.
pub fn check_pair_all_basepoints(g1: &Subgroup, g2: &Subgroup, jobs: Jobs) -> Result<PairCertificate> {
    let p = g1.modulus();
    if g2.modulus() != p {
        return Err(Error::ModulusMismatch(p.get(), g2.modulus().get()));
    }
    let points = enumerate_points(p);
    let certs = exec::map(&points, jobs, |&q| check_pair(g1, g2, q));
    let certs: Vec<PairCertificate> = certs.into_iter().collect::<Result<_>>()?;

    let first_fail = certs.iter().find(|c| !c.passed());
    let mut summary = match first_fail {
        Some(c) => c.clone(),
        None => certs[0].clone(),
    };
    let mut failures: Vec<String> = Vec::new();
    for c in &certs {
        for f in &c.failures {
            let tagged = format!("{f} at {}", c.base_point);
            if f == NOT_DIFFERENT || f == ORDERS_DIFFER || f == NONTRIVIAL_INTERSECTION {
                if !failures.contains(f) {
                    failures.push(f.clone());
                }
            } else {
                failures.push(tagged);
            }
        }
    }
    summary.verdict = if failures.is_empty() {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    summary.failures = failures;
    Ok(summary)
}
