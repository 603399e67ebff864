//! Brute-force isomorphism oracle against permutation models, plus seeded
//! sampling of small subgroups.

#![allow(dead_code)]

use std::collections::HashMap;

use galois_core::{GroupKind, PrimeModulus, ProjectiveMatrix, Subgroup};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A finite group as a Cayley table; element 0 is the identity.
pub struct Model {
    pub kind: GroupKind,
    table: Vec<Vec<usize>>,
    orders: Vec<usize>,
}

type Perm = Vec<u8>;

fn compose(a: &Perm, b: &Perm) -> Perm {
    // apply a, then b
    a.iter().map(|&i| b[i as usize]).collect()
}

impl Model {
    fn from_generators(kind: GroupKind, degree: usize, gens: &[Perm]) -> Model {
        let id: Perm = (0..degree as u8).collect();
        let mut elems = vec![id.clone()];
        let mut index: HashMap<Perm, usize> = HashMap::from([(id, 0)]);
        let mut i = 0;
        while i < elems.len() {
            for g in gens {
                let next = compose(&elems[i], g);
                if !index.contains_key(&next) {
                    index.insert(next.clone(), elems.len());
                    elems.push(next);
                }
            }
            i += 1;
        }
        let table: Vec<Vec<usize>> = elems
            .iter()
            .map(|a| elems.iter().map(|b| index[&compose(a, b)]).collect())
            .collect();
        let orders = (0..elems.len())
            .map(|a| {
                let (mut x, mut n) = (a, 1);
                while x != 0 {
                    x = table[x][a];
                    n += 1;
                }
                n
            })
            .collect();
        let model = Model { kind, table, orders };
        assert_eq!(model.order(), kind.order(), "model for {kind}");
        model
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }
}

fn cycle(n: usize, shift: usize) -> Perm {
    (0..n).map(|i| ((i + shift) % n) as u8).collect()
}

fn perm(images: &[u8]) -> Perm {
    images.to_vec()
}

/// Permutation models of every classical kind of order `n`.
pub fn models_of_order(n: usize) -> Vec<Model> {
    let mut out = vec![Model::from_generators(GroupKind::Cyclic(n), n, &[cycle(n, 1)])];
    if n == 4 {
        out.push(Model::from_generators(
            GroupKind::Dihedral(4),
            4,
            &[perm(&[1, 0, 3, 2]), perm(&[2, 3, 0, 1])],
        ));
    } else if n >= 6 && n.is_multiple_of(2) {
        let m = n / 2;
        let reflection: Perm = (0..m).map(|i| ((m - i) % m) as u8).collect();
        out.push(Model::from_generators(GroupKind::Dihedral(n), m, &[cycle(m, 1), reflection]));
    }
    match n {
        12 => out.push(Model::from_generators(
            GroupKind::Alt4,
            4,
            &[perm(&[1, 2, 0, 3]), perm(&[1, 0, 3, 2])],
        )),
        24 => out.push(Model::from_generators(
            GroupKind::Sym4,
            4,
            &[perm(&[1, 2, 3, 0]), perm(&[1, 0, 2, 3])],
        )),
        60 => out.push(Model::from_generators(
            GroupKind::Alt5,
            5,
            &[perm(&[1, 2, 3, 4, 0]), perm(&[1, 2, 0, 3, 4])],
        )),
        _ => {}
    }
    out
}

/// Tries every assignment of generator images with matching orders and
/// extends it along the Cayley graph; succeeds iff some assignment is a
/// well-defined bijective homomorphism.
pub fn isomorphic(h: &Subgroup, model: &Model) -> bool {
    if h.order() != model.order() {
        return false;
    }
    let elems = h.elements();
    let index: HashMap<ProjectiveMatrix, usize> = elems.iter().enumerate().map(|(i, &m)| (m, i)).collect();
    let identity = index[&ProjectiveMatrix::identity(h.modulus())];
    let gens: Vec<usize> = h.generators().iter().map(|g| index[g]).collect();
    let gen_orders: Vec<usize> = h.generators().iter().map(|g| g.order() as usize).collect();
    let candidates: Vec<Vec<usize>> = gen_orders
        .iter()
        .map(|&o| (0..model.order()).filter(|&x| model.orders[x] == o).collect())
        .collect();

    let mut images = vec![0usize; gens.len()];
    fn assign(
        k: usize,
        images: &mut Vec<usize>,
        candidates: &[Vec<usize>],
        check: &dyn Fn(&[usize]) -> bool,
    ) -> bool {
        if k == images.len() {
            return check(images);
        }
        for &c in &candidates[k] {
            images[k] = c;
            if assign(k + 1, images, candidates, check) {
                return true;
            }
        }
        false
    }
    let check = |imgs: &[usize]| -> bool {
        let mut phi = vec![usize::MAX; elems.len()];
        let mut used = vec![false; model.order()];
        phi[identity] = 0;
        used[0] = true;
        let mut queue = vec![identity];
        while let Some(x) = queue.pop() {
            for (gi, &g) in gens.iter().enumerate() {
                let y = index[&elems[x].compose(&elems[g])];
                let target = model.table[phi[x]][imgs[gi]];
                if phi[y] == usize::MAX {
                    if used[target] {
                        return false;
                    }
                    phi[y] = target;
                    used[target] = true;
                    queue.push(y);
                } else if phi[y] != target {
                    return false;
                }
            }
        }
        phi.iter().all(|&v| v != usize::MAX)
    };
    assign(0, &mut images, &candidates, &check)
}

/// The kinds among the permutation models that `h` is isomorphic to.
pub fn oracle_kinds(h: &Subgroup) -> Vec<GroupKind> {
    models_of_order(h.order())
        .iter()
        .filter(|m| isomorphic(h, m))
        .map(|m| m.kind)
        .collect()
}

/// What `recognize` must return according to the oracle.
pub fn oracle_kind(h: &Subgroup) -> GroupKind {
    match oracle_kinds(h).as_slice() {
        [] => GroupKind::Other(h.order()),
        [k] => *k,
        many => panic!("non-isomorphic models both matched: {many:?}"),
    }
}

pub fn random_matrix(p: PrimeModulus, rng: &mut impl Rng) -> ProjectiveMatrix {
    loop {
        let mut e = || rng.gen_range(0..p.get() as i64);
        if let Ok(m) = ProjectiveMatrix::new(p, [[e(), e()], [e(), e()]]) {
            return m;
        }
    }
}

/// `count` seeded random 2-generator subgroups whose closure stays within `cap`.
pub fn small_subgroups(p: u64, count: usize, seed: u64, cap: usize) -> Vec<Subgroup> {
    let p = PrimeModulus::new(p).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let gens = [random_matrix(p, &mut rng), random_matrix(p, &mut rng)];
        if let Ok(g) = Subgroup::generate(p, &gens, cap) {
            out.push(g);
        }
    }
    out
}

pub const PAPER_PRIMES: [u64; 3] = [11, 23, 59];
pub const CASES: [char; 3] = ['a', 'b', 'c'];

pub fn fp(p: u64) -> PrimeModulus {
    PrimeModulus::new(p).unwrap()
}

pub fn pgl(p: u64) -> Vec<ProjectiveMatrix> {
    galois_core::projective::enumerate_pgl(fp(p)).collect()
}

/// Every subgroup appearing in the nine published pairs.
pub fn suite_subgroups() -> Vec<(String, Subgroup)> {
    let mut out = Vec::new();
    for p in PAPER_PRIMES {
        for case in CASES {
            let (g1, g2) = galois_core::load_case(p, case).unwrap().subgroups().unwrap();
            out.push((format!("p={p} {case} G1"), g1));
            out.push((format!("p={p} {case} G2"), g2));
        }
    }
    out
}

pub fn check(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

/// `Q·A·B = (Q·A)·B` for every point and every pair of group elements.
pub fn right_action_law(p: u64) -> Result<(), String> {
    let points = galois_core::enumerate_points(fp(p));
    let group = pgl(p);
    for a in &group {
        let images: Vec<_> = points.iter().map(|q| q.apply(a)).collect();
        for b in &group {
            let ab = a.compose(b);
            for (q, qa) in points.iter().zip(&images) {
                check(q.apply(&ab) == qa.apply(b), || format!("p={p}: {q:?} under {a:?}, {b:?}"))?;
            }
        }
    }
    Ok(())
}

/// Every invertible raw matrix normalizes like each of its scalar multiples,
/// and normal forms are fixed points.
pub fn scalar_invariance(p: u64) -> Result<(), String> {
    let m = fp(p);
    let n = p as i64;
    for e in 0..n.pow(4) {
        let rows = [[e % n, e / n % n], [e / n.pow(2) % n, e / n.pow(3)]];
        let Ok(base) = ProjectiveMatrix::new(m, rows) else { continue };
        check(ProjectiveMatrix::new(m, base.literal()) == Ok(base), || format!("p={p}: {rows:?} not idempotent"))?;
        for c in 2..n {
            let scaled = rows.map(|r| r.map(|x| x * c));
            check(ProjectiveMatrix::new(m, scaled) == Ok(base), || format!("p={p}: {rows:?} scaled by {c}"))?;
        }
    }
    Ok(())
}

/// Every group element permutes the projective line.
pub fn bijectivity(p: u64) -> Result<(), String> {
    let points = galois_core::enumerate_points(fp(p));
    for a in pgl(p) {
        let mut seen = vec![false; points.len()];
        for q in &points {
            seen[q.apply(&a).index()] = true;
        }
        check(seen.iter().all(|&s| s), || format!("p={p}: {a:?} is not a bijection"))?;
    }
    Ok(())
}

/// Lagrange for orders and pairwise intersections, and regularity of every
/// transitive subgroup of order `p + 1`.
pub fn lagrange_and_regularity(groups: &[(String, Subgroup)]) -> Result<(), String> {
    for (name, g) in groups {
        let p = g.modulus();
        check(p.pgl_order() % g.order() as u64 == 0, || format!("{name}: order {}", g.order()))?;
        for (other_name, h) in groups.iter().filter(|(_, h)| h.modulus() == p) {
            let k = g.intersect(h).unwrap().order();
            check(g.order() % k == 0 && h.order() % k == 0, || format!("{name} ∩ {other_name}: {k}"))?;
        }
        let points = galois_core::enumerate_points(p);
        let q = points[0];
        if g.order() == points.len() && g.orbit(q).unwrap().len() == points.len() {
            for &r in &points {
                check(g.stabilizer(r).unwrap().is_trivial(), || format!("{name}: {r:?} has a stabilizer"))?;
            }
        }
    }
    Ok(())
}

/// Recognition agrees with the oracle on seeded random subgroups of
/// PGL(2, 7) and PGL(2, 11); returns how many were compared.
pub fn recognition_agrees(per_prime: usize, seed: u64) -> Result<usize, String> {
    let mut compared = 0;
    for p in [7, 11] {
        for g in small_subgroups(p, per_prime, seed, 120) {
            let want = oracle_kind(&g);
            check(g.recognize() == want, || {
                format!("p={p} {:?}: recognized {} but oracle says {want}", g.generators(), g.recognize())
            })?;
            compared += 1;
        }
    }
    Ok(compared)
}

/// Report items known to disagree with the published text.
pub fn errata(p: u64) -> &'static [&'static str] {
    match p {
        11 => &["g1-order3-list", "g4-order3-list"],
        23 => &[
            "o4-t1-cell",
            "o4-t2-cell",
            "xi12-at-alpha",
            "xi12-at-alpha-block",
            "xi12-at-infinity",
            "xi12-at-infinity-block",
            "xi12-class",
            "xi8-at-alpha3",
            "xi8-at-alpha3-block",
        ],
        _ => &[],
    }
}

/// The all-basepoint certificate of a published pair, checked against its
/// expected kinds and degree.
pub fn paper_certificate(p: u64, case: char) -> Result<galois_core::PairCertificate, String> {
    let c = galois_core::load_case(p, case).map_err(|e| e.to_string())?;
    let (g1, g2) = c.subgroups().map_err(|e| e.to_string())?;
    let cert = galois_core::check_pair_all_basepoints(&g1, &g2, galois_core::Jobs::DEFAULT).map_err(|e| e.to_string())?;
    check(cert.passed(), || format!("p={p} {case}: {:?}", cert.failures))?;
    check(cert.degree == p as usize + 1, || format!("p={p} {case}: degree {}", cert.degree))?;
    check((cert.kind1, cert.kind2) == (c.kind1, c.kind2), || {
        format!("p={p} {case}: kinds {} {}", cert.kind1, cert.kind2)
    })?;
    Ok(cert)
}

/// Scaling conjugates of G1 that must appear, each re-checked at every base point.
pub fn scaling_conjugates(p: u64, required: u32) -> Result<Vec<u32>, String> {
    let m = fp(p);
    let g1 = galois_core::load_case(p, 'a').unwrap().subgroups().unwrap().0;
    let found = galois_core::find_scaling_conjugates(&g1, galois_core::Jobs::DEFAULT);
    check(found.contains(&required), || format!("p={p}: {required} missing from {found:?}"))?;
    for &c in &found {
        let h = g1.conjugate(&ProjectiveMatrix::diag(m, c as i64).unwrap());
        let cert = galois_core::check_pair_all_basepoints(&g1, &h, galois_core::Jobs::DEFAULT).unwrap();
        check(cert.passed(), || format!("p={p}: c={c} fails: {:?}", cert.failures))?;
    }
    Ok(found)
}

/// Degree, invariance, fiber and implicit-degree checks on the emitted curve.
pub fn curve_checks(p: u64, case: char) -> Result<usize, String> {
    use galois_core::curve::fibers_are_orbit_unions;
    let cert = paper_certificate(p, case)?;
    let (g1, g2) = cert.subgroups().unwrap();
    let d = cert.degree;
    let curve = galois_core::emit_parametrization(&cert, galois_core::Jobs::DEFAULT).map_err(|e| e.to_string())?;
    check(curve.max_component_degree() == d, || format!("p={p} {case}: components of degree {}", curve.max_component_degree()))?;
    for (label, h, g) in [("first", curve.first_map(), &g1), ("second", curve.second_map(), &g2)] {
        check(h.degree() == d, || format!("p={p} {case}: {label} map of degree {}", h.degree()))?;
        check(g.elements().iter().all(|a| h.is_invariant_under(a)), || format!("p={p} {case}: {label} map not invariant"))?;
        check(fibers_are_orbit_unions(&h, g), || format!("p={p} {case}: {label} map splits an orbit"))?;
        let poles: std::collections::BTreeSet<_> = h.rational_poles().into_iter().collect();
        let orbit = g.orbit(cert.base_point).unwrap();
        check(poles == orbit, || format!("p={p} {case}: {label} map poles are not the shared orbit"))?;
    }
    let implicit = galois_core::implicit_degree(&curve).map_err(|e| e.to_string())?;
    check(implicit == d, || format!("p={p} {case}: implicit degree {implicit}, expected {d}"))?;
    Ok(d)
}

/// Search configurations exercised for determinism: (p, kind1, kind2, strategy, seed, limit).
pub const SEARCHES: [(u64, &str, &str, &str, u64, usize); 4] = [
    (11, "A4", "C12", "exhaustive-cyclic", 0, 1000),
    (11, "A4", "A4", "scaling", 0, 1000),
    (23, "S4", "D24", "random", 7, 500),
    (59, "A5", "D60", "random", 3, 500),
];

/// Repeated and sequential runs print identical certificates, and each
/// printed certificate re-verifies from its generators.
pub fn search_determinism() -> Result<usize, String> {
    use galois_core::{search, CertificateJson, Jobs, SearchConfig};
    for (p, k1, k2, strategy, seed, limit) in SEARCHES {
        let label = format!("p={p} {k1}/{k2} {strategy}");
        let run = |jobs| -> Result<String, String> {
            let cfg = SearchConfig::new(
                fp(p),
                k1.parse().unwrap(),
                k2.parse().unwrap(),
                strategy.parse().unwrap(),
                seed,
                limit,
                jobs,
            )
            .map_err(|e| e.to_string())?;
            let cert = search(&cfg).map_err(|e| e.to_string())?.ok_or(format!("{label}: nothing found"))?;
            Ok(cert.to_json().to_string_sorted())
        };
        let first = run(Jobs::DEFAULT)?;
        check(first == run(Jobs::DEFAULT)?, || format!("{label}: repeated run differs"))?;
        check(first == run(Jobs::SEQUENTIAL)?, || format!("{label}: sequential run differs"))?;
        let parsed: CertificateJson = serde_json::from_str(&first).map_err(|e| e.to_string())?;
        let again = parsed.reverify().map_err(|e| e.to_string())?;
        check(again.passed(), || format!("{label}: re-verification fails"))?;
        check(again.to_json().to_string_sorted() == first, || format!("{label}: re-verified certificate differs"))?;
    }
    Ok(SEARCHES.len())
}
