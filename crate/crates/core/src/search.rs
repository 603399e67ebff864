//! Discovering new pairs: scalar conjugates, seeded random sampling and
//! scans for Singer-type cyclic subgroups.
//!
//! Every strategy evaluates candidates through
//! [`check_pair_all_basepoints`], so a hit always carries a certificate
//! that re-verifies from its generators. Because that check quantifies over
//! every base point, hits only exist for kinds of order `p + 1`.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::criterion::{check_pair_all_basepoints, PairCertificate};
use crate::error::{Error, Result};
use crate::exec::{self, Jobs};
use crate::field::PrimeModulus;
use crate::group::{GroupKind, Subgroup};
use crate::projective::{enumerate_pgl, ProjectiveMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Scaling,
    Random,
    ExhaustiveCyclic,
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Strategy::Scaling => "scaling",
            Strategy::Random => "random",
            Strategy::ExhaustiveCyclic => "exhaustive-cyclic",
        })
    }
}

impl FromStr for Strategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "scaling" => Ok(Strategy::Scaling),
            "random" => Ok(Strategy::Random),
            "exhaustive-cyclic" => Ok(Strategy::ExhaustiveCyclic),
            _ => Err(Error::InvalidConfig(format!("unknown strategy {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub p: PrimeModulus,
    pub kind1: GroupKind,
    pub kind2: GroupKind,
    pub strategy: Strategy,
    pub seed: u64,
    /// Maximum number of candidates evaluated.
    pub limit: usize,
    pub jobs: Jobs,
}

impl SearchConfig {
    pub fn new(
        p: PrimeModulus,
        kind1: GroupKind,
        kind2: GroupKind,
        strategy: Strategy,
        seed: u64,
        limit: usize,
        jobs: Jobs,
    ) -> Result<Self> {
        if limit == 0 {
            return Err(Error::InvalidConfig("limit must be at least 1".into()));
        }
        if kind1.order() != kind2.order() {
            return Err(Error::InvalidConfig(format!(
                "kinds {kind1} and {kind2} have different orders {} and {}",
                kind1.order(),
                kind2.order()
            )));
        }
        for k in [kind1, kind2] {
            if matches!(k, GroupKind::Other(_)) {
                return Err(Error::InvalidConfig(format!("cannot sample groups of kind {k}")));
            }
        }
        match strategy {
            Strategy::Scaling if kind1 != kind2 => {
                return Err(Error::InvalidConfig("scaling needs kind1 == kind2".into()));
            }
            Strategy::ExhaustiveCyclic
                if !matches!(kind1, GroupKind::Cyclic(_)) && !matches!(kind2, GroupKind::Cyclic(_)) =>
            {
                return Err(Error::InvalidConfig("exhaustive-cyclic needs a cyclic kind".into()));
            }
            _ => {}
        }
        Ok(SearchConfig {
            p,
            kind1,
            kind2,
            strategy,
            seed,
            limit,
            jobs,
        })
    }
}

/// Scalars `c ∉ {0, 1}` whose conjugate `diag(c,1)⁻¹·G·diag(c,1)` meets `G`
/// trivially (and, for regular `G` of order `p + 1`, passes the criterion
/// at every base point). Ascending; empty when `|G| < 2`.
pub fn find_scaling_conjugates(g: &Subgroup, jobs: Jobs) -> Vec<u32> {
    let p = g.modulus();
    if g.order() < 2 {
        return Vec::new();
    }
    let regular = g.order() == p.get() as usize + 1 && g.is_transitive();
    let scalars: Vec<u32> = (2..p.get()).collect();
    let keep = exec::map(&scalars, jobs, |&c| {
        let iota = ProjectiveMatrix::diag(p, c as i64).expect("nonzero scalar");
        let h = g.conjugate(&iota);
        let trivial = g.intersect(&h).is_ok_and(|i| i.is_trivial());
        trivial && (!regular || check_pair_all_basepoints(g, &h, Jobs::SEQUENTIAL).is_ok_and(|c| c.passed()))
    });
    scalars.into_iter().zip(keep).filter_map(|(c, k)| k.then_some(c)).collect()
}

/// The first element of order `p + 1` in enumeration order, as a cyclic
/// subgroup acting regularly on the `p + 1` rational points.
pub fn find_cyclic_regular(p: PrimeModulus) -> Result<Subgroup> {
    let n = p.get() as u64 + 1;
    enumerate_pgl(p)
        .find(|a| a.order() == n)
        .map(Subgroup::cyclic)
        .filter(|g| g.is_transitive())
        .ok_or(Error::NotFound { p: p.get(), order: n })
}

/// Runs the configured strategy; `None` when `limit` candidates are exhausted.
pub fn search(cfg: &SearchConfig) -> Result<Option<PairCertificate>> {
    match cfg.strategy {
        Strategy::Random => random_pair_search(cfg),
        Strategy::Scaling => scaling_search(cfg),
        Strategy::ExhaustiveCyclic => exhaustive_cyclic_search(cfg),
    }
}

/// Candidate `i` samples both groups from the stream `(seed, i)`.
pub fn random_pair_search(cfg: &SearchConfig) -> Result<Option<PairCertificate>> {
    let hit = exec::first_hit(cfg.limit, cfg.jobs, |i| {
        let mut rng = candidate_rng(cfg.seed, i);
        let g1 = sample_group(cfg.p, cfg.kind1, &mut rng)?;
        let g2 = sample_group(cfg.p, cfg.kind2, &mut rng)?;
        passing(&g1, &g2)
    });
    Ok(hit.map(|(_, cert)| cert))
}

fn scaling_search(cfg: &SearchConfig) -> Result<Option<PairCertificate>> {
    let Some(g) = sample_base(cfg, cfg.kind1) else {
        return Ok(None);
    };
    for c in find_scaling_conjugates(&g, cfg.jobs) {
        let h = g.conjugate(&ProjectiveMatrix::diag(cfg.p, c as i64)?);
        if let Some(cert) = passing(&g, &h) {
            return Ok(Some(cert));
        }
    }
    Ok(None)
}

fn exhaustive_cyclic_search(cfg: &SearchConfig) -> Result<Option<PairCertificate>> {
    let (cyclic_first, n, other) = match (cfg.kind1, cfg.kind2) {
        (k, GroupKind::Cyclic(n)) => (false, n, k),
        (GroupKind::Cyclic(n), k) => (true, n, k),
        _ => unreachable!("validated by SearchConfig::new"),
    };
    let Some(g) = sample_base(cfg, other) else {
        return Ok(None);
    };
    let candidates: Vec<ProjectiveMatrix> = enumerate_pgl(cfg.p)
        .filter(|a| a.order() == n as u64)
        .take(cfg.limit)
        .collect();
    let hit = exec::first_hit(candidates.len(), cfg.jobs, |i| {
        let c = Subgroup::cyclic(candidates[i]);
        if cyclic_first {
            passing(&c, &g)
        } else {
            passing(&g, &c)
        }
    });
    Ok(hit.map(|(_, cert)| cert))
}

fn passing(g1: &Subgroup, g2: &Subgroup) -> Option<PairCertificate> {
    check_pair_all_basepoints(g1, g2, Jobs::SEQUENTIAL)
        .ok()
        .filter(|c| c.passed())
}

/// First group of `kind` sampled from streams `(seed, 0), (seed, 1), ...`
/// that acts regularly on the rational points.
fn sample_base(cfg: &SearchConfig, kind: GroupKind) -> Option<Subgroup> {
    exec::first_hit(cfg.limit, cfg.jobs, |i| {
        sample_group(cfg.p, kind, &mut candidate_rng(cfg.seed, i)).filter(|g| g.is_transitive())
    })
    .map(|(_, g)| g)
}

fn candidate_rng(seed: u64, index: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    rng
}

fn random_matrix(p: PrimeModulus, rng: &mut impl Rng) -> ProjectiveMatrix {
    loop {
        let mut row = || [rng.gen_range(0..p.get() as i64), rng.gen_range(0..p.get() as i64)];
        if let Ok(m) = ProjectiveMatrix::new(p, [row(), row()]) {
            return m;
        }
    }
}

/// Rejection-samples an element of order `n`, giving up after a number of
/// tries proportional to `|PGL(2, p)|`.
fn random_of_order(p: PrimeModulus, n: u64, rng: &mut impl Rng) -> Option<ProjectiveMatrix> {
    // element orders in PGL(2, p) are the divisors of p - 1 and p + 1, and p
    let q = p.get() as u64;
    if n == 0 || (!(q - 1).is_multiple_of(n) && !(q + 1).is_multiple_of(n) && n != q) {
        return None;
    }
    let tries = 4 * p.pgl_order();
    (0..tries).map(|_| random_matrix(p, rng)).find(|m| m.order() == n)
}

/// One attempt at a subgroup of `kind` from generators of the orders that
/// generate it; `None` if the closure is not of that kind.
pub fn sample_group(p: PrimeModulus, kind: GroupKind, rng: &mut impl Rng) -> Option<Subgroup> {
    let n = kind.order();
    let gens = match kind {
        GroupKind::Cyclic(n) => vec![random_of_order(p, n as u64, rng)?],
        GroupKind::Dihedral(n) => {
            let r = random_of_order(p, (n / 2) as u64, rng)?;
            let r_inv = r.inverse();
            let tries = 4 * p.pgl_order();
            let s = (0..tries)
                .map(|_| random_matrix(p, rng))
                .find(|s| s.order() == 2 && s.compose(&r).compose(s) == r_inv && *s != r)?;
            vec![r, s]
        }
        GroupKind::Alt4 | GroupKind::Alt5 => {
            vec![random_of_order(p, 2, rng)?, random_of_order(p, 3, rng)?]
        }
        GroupKind::Sym4 => vec![random_of_order(p, 4, rng)?, random_of_order(p, 3, rng)?],
        GroupKind::Other(_) => return None,
    };
    let g = Subgroup::generate(p, &gens, n).ok()?;
    (g.recognize() == kind).then_some(g)
}
