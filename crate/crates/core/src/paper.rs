//! Reference data for the nine published pairs over `F_11`, `F_23` and
//! `F_59`, and an item-by-item verification of every printed claim.
//!
//! Matrices and point sets are stored as printed, with `α^k` expanded via
//! the stated primitive element. Each claim becomes one [`ReportItem`];
//! failing items carry a detail line with the computed value.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::{self, Write as _};

use serde::Serialize;

use crate::criterion::check_pair_all_basepoints;
use crate::error::{Error, Result};
use crate::exec::{self, Jobs};
use crate::field::PrimeModulus;
use crate::group::{GroupKind, Partition, Subgroup, DEFAULT_CLOSURE_CAP};
use crate::projective::{MatrixLiteral, ProjectiveMatrix, ProjectivePoint};

/// Primes with published data.
pub const PRIMES: [u64; 3] = [11, 23, 59];
/// Case labels, one per pair.
pub const CASES: [char; 3] = ['a', 'b', 'c'];

/// All printed data for one prime.
#[derive(Clone, Debug)]
pub struct Section {
    pub p: PrimeModulus,
    /// The stated primitive element.
    pub alpha: u32,
    /// Named matrices: `sigma`, `tau`, `eta`, `mu`, `xi`, `sigma'`, `tau'`, `iota`.
    pub matrices: BTreeMap<&'static str, ProjectiveMatrix>,
    /// Names of the generators of the first group.
    pub g1_names: Vec<&'static str>,
    /// Printed element lists of `G1` and `G4` by order, possibly with misprints.
    pub g1_lists: BTreeMap<u64, Vec<MatrixLiteral>>,
    pub g4_lists: BTreeMap<u64, Vec<MatrixLiteral>>,
    /// `O1..O4`, `T1, T2` and the printed images `ι(O1)..ι(O4)` (p = 23 only).
    pub o_blocks: Vec<BTreeSet<ProjectivePoint>>,
    pub t_blocks: Vec<BTreeSet<ProjectivePoint>>,
    pub iota_o_blocks: Vec<BTreeSet<ProjectivePoint>>,
}

impl Section {
    pub fn matrix(&self, name: &str) -> &ProjectiveMatrix {
        &self.matrices[name]
    }

    pub fn g1_generators(&self) -> Vec<ProjectiveMatrix> {
        self.g1_names.iter().map(|n| self.matrices[n]).collect()
    }

    pub fn conjugator(&self) -> &ProjectiveMatrix {
        self.matrix("iota")
    }

    /// `(1 : α^k)`.
    pub fn alpha_point(&self, k: i64) -> ProjectivePoint {
        ProjectivePoint::affine(self.p, self.alpha_pow(k) as i64)
    }

    fn alpha_pow(&self, k: i64) -> u32 {
        self.p.pow(self.alpha, k).expect("alpha is a unit")
    }

    /// Sort key following the printed order: `(0:1)`, `(1:0)`, `(1:1)`, then by exponent.
    fn exponent(&self, q: ProjectivePoint) -> (u32, u32) {
        match q.affine_coord() {
            None => (0, 0),
            Some(0) => (1, 0),
            Some(t) => (2, (0..self.p.get() - 1).find(|&k| self.alpha_pow(k as i64) == t).unwrap()),
        }
    }

    /// Renders a point the way the tables print it.
    pub fn point_name(&self, q: ProjectivePoint) -> String {
        match q.affine_coord() {
            None => "(0:1)".into(),
            Some(0) => "(1:0)".into(),
            Some(1) => "(1:1)".into(),
            Some(t) if t == self.alpha => "(1:α)".into(),
            Some(t) => {
                let k = (1..self.p.get() - 1).find(|&k| self.alpha_pow(k as i64) == t).unwrap();
                format!("(1:α^{k})")
            }
        }
    }

    fn set_name(&self, set: &BTreeSet<ProjectivePoint>) -> String {
        let mut points: Vec<_> = set.iter().copied().collect();
        points.sort_by_key(|&q| self.exponent(q));
        let names: Vec<_> = points.iter().map(|&q| self.point_name(q)).collect();
        format!("{{{}}}", names.join(", "))
    }
}

/// One published pair.
#[derive(Clone, Debug)]
pub struct PaperCase {
    pub p: PrimeModulus,
    pub case: char,
    pub g1: Vec<ProjectiveMatrix>,
    pub g2: Vec<ProjectiveMatrix>,
    pub kind1: GroupKind,
    pub kind2: GroupKind,
    pub degree: usize,
    pub section: Section,
}

impl PaperCase {
    pub fn subgroups(&self) -> Result<(Subgroup, Subgroup)> {
        Ok((
            Subgroup::generate(self.p, &self.g1, DEFAULT_CLOSURE_CAP)?,
            Subgroup::generate(self.p, &self.g2, DEFAULT_CLOSURE_CAP)?,
        ))
    }
}

fn unknown(p: u64, case: impl Into<String>) -> Error {
    Error::UnknownCase { p, case: case.into() }
}

/// Printed data for `p ∈ {11, 23, 59}`.
pub fn section(p: u64) -> Result<Section> {
    match p {
        11 => Ok(section_11()),
        23 => Ok(section_23()),
        59 => Ok(section_59()),
        _ => Err(unknown(p, "*")),
    }
}

pub fn load_case(p: u64, case: char) -> Result<PaperCase> {
    let s = section(p)?;
    let g1 = s.g1_generators();
    let (g2, kind2) = match case {
        'a' => (vec![*s.matrix("xi")], GroupKind::Cyclic(s.p.get() as usize + 1)),
        'b' => (
            vec![*s.matrix("sigma'"), *s.matrix("tau'")],
            GroupKind::Dihedral(s.p.get() as usize + 1),
        ),
        'c' => {
            let iota = s.conjugator();
            (g1.iter().map(|g| g.conjugate_by(iota)).collect(), kind1_of(p))
        }
        _ => return Err(unknown(p, case.to_string())),
    };
    Ok(PaperCase {
        p: s.p,
        case,
        g1,
        g2,
        kind1: kind1_of(p),
        kind2,
        degree: s.p.get() as usize + 1,
        section: s,
    })
}

fn kind1_of(p: u64) -> GroupKind {
    match p {
        11 => GroupKind::Alt4,
        23 => GroupKind::Sym4,
        _ => GroupKind::Alt5,
    }
}

/// Parses a case label such as `a` or `B`.
pub fn parse_case(p: u64, label: &str) -> Result<char> {
    let mut chars = label.chars();
    match (chars.next().map(|c| c.to_ascii_lowercase()), chars.next()) {
        (Some(c), None) if CASES.contains(&c) => Ok(c),
        _ => Err(unknown(p, label)),
    }
}

struct Builder {
    p: PrimeModulus,
    alpha: u32,
}

impl Builder {
    fn new(p: u64, alpha: u32) -> Self {
        Builder {
            p: PrimeModulus::new(p).unwrap(),
            alpha,
        }
    }

    /// `α^k` as an integer representative.
    fn a(&self, k: i64) -> i64 {
        self.p.pow(self.alpha, k).unwrap() as i64
    }

    fn m(&self, rows: MatrixLiteral) -> ProjectiveMatrix {
        ProjectiveMatrix::new(self.p, rows).expect("printed generator is invertible")
    }

    fn pt(&self, k: i64) -> ProjectivePoint {
        ProjectivePoint::affine(self.p, self.a(k))
    }

    fn inf(&self) -> ProjectivePoint {
        ProjectivePoint::infinity(self.p)
    }

    fn zero(&self) -> ProjectivePoint {
        ProjectivePoint::affine(self.p, 0)
    }

    fn one(&self) -> ProjectivePoint {
        ProjectivePoint::affine(self.p, 1)
    }

    fn set(&self, specials: &[ProjectivePoint], exps: &[i64]) -> BTreeSet<ProjectivePoint> {
        specials.iter().copied().chain(exps.iter().map(|&k| self.pt(k))).collect()
    }

    fn finish(
        self,
        matrices: Vec<(&'static str, ProjectiveMatrix)>,
        g1_names: Vec<&'static str>,
    ) -> Section {
        Section {
            p: self.p,
            alpha: self.alpha,
            matrices: matrices.into_iter().collect(),
            g1_names,
            g1_lists: BTreeMap::new(),
            g4_lists: BTreeMap::new(),
            o_blocks: Vec::new(),
            t_blocks: Vec::new(),
            iota_o_blocks: Vec::new(),
        }
    }
}

fn section_11() -> Section {
    let b = Builder::new(11, 2);
    let a = |k| b.a(k);
    let matrices = vec![
        ("sigma", b.m([[0, a(1)], [1, 0]])),
        ("tau", b.m([[1, a(1)], [-1, -1]])),
        ("eta", b.m([[a(1), a(4)], [1, a(2)]])),
        ("xi", b.m([[a(1), 1], [1, 0]])),
        ("sigma'", b.m([[0, a(3)], [1, 0]])),
        ("tau'", b.m([[a(2), 1], [a(2), a(4)]])),
        ("iota", b.m([[a(1), 0], [0, 1]])),
    ];
    let mut s = b.finish(matrices, vec!["sigma", "tau", "eta"]);
    s.g1_lists.insert(2, vec![[[0, 2], [1, 0]], [[10, 9], [1, 1]], [[9, 9], [1, 2]]]);
    s.g1_lists.insert(
        3,
        vec![
            [[2, 5], [1, 4]],
            [[7, 5], [1, 9]],
            [[4, 1], [1, 6]],
            [[3, 4], [1, 10]],
            [[1, 4], [1, 8]],
            [[8, 3], [1, 5]],
            [[6, 3], [1, 3]],
            [[5, 4], [1, 7]],
        ],
    );
    s.g4_lists.insert(2, vec![[[0, 6], [1, 0]], [[5, 5], [1, 6]], [[10, 5], [1, 1]]]);
    s.g4_lists.insert(
        3,
        vec![
            [[1, 4], [1, 2]],
            [[9, 4], [1, 10]],
            [[2, 3], [1, 3]],
            [[7, 1], [1, 5]],
            [[6, 2], [1, 4]],
            [[4, 9], [1, 8]],
            [[3, 9], [1, 7]],
            [[8, 3], [1, 9]],
        ],
    );
    s
}

fn section_23() -> Section {
    let b = Builder::new(23, 5);
    let a = |k| b.a(k);
    let matrices = vec![
        ("sigma", b.m([[0, 1], [a(7), 0]])),
        ("tau", b.m([[a(12), a(7)], [1, a(3)]])),
        ("eta", b.m([[1, a(10)], [a(6), a(15)]])),
        ("mu", b.m([[-1, 1], [-a(7), 1]])),
        ("xi", b.m([[0, -1], [-1, 1]])),
        ("sigma'", b.m([[0, a(10)], [a(9), 0]])),
        ("tau'", b.m([[a(15), a(1)], [-1, a(7)]])),
        ("iota", b.m([[a(7), 0], [0, 1]])),
    ];
    let o_blocks = vec![
        b.set(&[b.inf()], &[1, 3, 6, 7, 18]),
        b.set(&[b.zero()], &[8, 9, 12, 14, 19]),
        b.set(&[b.one()], &[2, 4, 10, 17, 21]),
        b.set(&[], &[5, 11, 13, 15, 16, 20]),
    ];
    let t_blocks = vec![
        b.set(&[b.inf(), b.one()], &[18, 3, 11, 4, 9, 21, 13, 16, 17, 15]),
        b.set(&[b.zero()], &[8, 6, 7, 10, 2, 1, 14, 19, 12, 20, 5]),
    ];
    let iota_o_blocks = vec![
        b.set(&[b.inf(), b.one()], &[16, 18, 21, 11]),
        b.set(&[b.zero()], &[1, 2, 5, 7, 12]),
        b.set(&[], &[15, 17, 19, 3, 10, 14]),
        b.set(&[], &[20, 4, 6, 8, 9, 13]),
    ];
    let mut s = b.finish(matrices, vec!["sigma", "tau", "eta", "mu"]);
    s.o_blocks = o_blocks;
    s.t_blocks = t_blocks;
    s.iota_o_blocks = iota_o_blocks;
    s
}

fn section_59() -> Section {
    let b = Builder::new(59, 2);
    let a = |k| b.a(k);
    let matrices = vec![
        ("sigma", b.m([[-a(26), 1], [a(27), a(26)]])),
        ("tau", b.m([[1, a(1)], [a(6), a(34)]])),
        ("xi", b.m([[1, 1], [a(12), 0]])),
        ("sigma'", b.m([[0, a(2)], [a(-1), 0]])),
        ("tau'", b.m([[a(2), a(3)], [-1, -1]])),
        ("iota", b.m([[1, a(30)], [0, -a(15)]])),
    ];
    b.finish(matrices, vec!["sigma", "tau"])
}

/// One checked claim.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReportItem {
    pub id: String,
    pub claim: String,
    pub pass: bool,
    /// Computed values, set only for failing items.
    #[serde(skip)]
    pub detail: Option<String>,
    /// The pair this item belongs to; `None` for shared data of the first group.
    #[serde(skip)]
    pub case: Option<char>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub p: u64,
    pub items: Vec<ReportItem>,
    pub pass: bool,
}

impl Report {
    fn new(p: u64, items: Vec<ReportItem>) -> Self {
        let pass = items.iter().all(|i| i.pass);
        Report { p, items, pass }
    }

    /// Items shared by all pairs plus those of `case`.
    pub fn for_case(&self, case: char) -> Report {
        let items = self
            .items
            .iter()
            .filter(|i| i.case.is_none_or(|c| c == case))
            .cloned()
            .collect();
        Report::new(self.p, items)
    }

    pub fn failures(&self) -> impl Iterator<Item = &ReportItem> {
        self.items.iter().filter(|i| !i.pass)
    }

    /// Deterministic JSON with sorted keys.
    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("report serializes");
        serde_json::to_string_pretty(&value).expect("value renders")
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "p = {}", self.p)?;
        let width = self.items.iter().map(|i| i.id.len()).max().unwrap_or(0);
        for item in &self.items {
            let mark = if item.pass { "PASS" } else { "FAIL" };
            writeln!(f, "{mark}  {:width$}  {}", item.id, item.claim)?;
            if let Some(d) = &item.detail {
                writeln!(f, "      {:width$}  computed: {d}", "")?;
            }
        }
        let ok = self.items.iter().filter(|i| i.pass).count();
        let verdict = if self.pass { "PASS" } else { "FAIL" };
        write!(f, "overall: {verdict} ({ok}/{} items pass)", self.items.len())
    }
}

struct Items<'a> {
    s: &'a Section,
    case: Option<char>,
    items: Vec<ReportItem>,
}

impl<'a> Items<'a> {
    fn push(&mut self, id: &str, claim: impl Into<String>, pass: bool, detail: impl FnOnce() -> String) {
        self.items.push(ReportItem {
            id: id.to_string(),
            claim: claim.into(),
            pass,
            detail: (!pass).then(detail),
            case: self.case,
        });
    }

    fn order(&mut self, id: &str, name: &str, expected: u64) {
        let actual = self.s.matrix(name).order();
        self.push(id, format!("{} has order {expected}", greek(name)), actual == expected, || {
            format!("order {actual}")
        });
    }

    /// `actual ∼ printed`.
    fn class(&mut self, id: &str, claim: impl Into<String>, actual: &ProjectiveMatrix, printed: MatrixLiteral) {
        let p = self.s.p;
        let (pass, detail) = match ProjectiveMatrix::new(p, printed) {
            Ok(m) => (m == *actual, printed_form(actual)),
            Err(_) => (false, format!("printed matrix is singular mod {p}; actual class {}", printed_form(actual))),
        };
        self.push(id, claim, pass, || detail);
    }

    fn relation(&mut self, id: &str, claim: &str, lhs: ProjectiveMatrix, rhs: ProjectiveMatrix) {
        self.push(id, claim, lhs == rhs, || {
            format!("left {} vs right {}", printed_form(&lhs), printed_form(&rhs))
        });
    }

    fn kind(&mut self, id: &str, label: &str, g: &Subgroup, expected: GroupKind) {
        let actual = g.recognize();
        self.push(
            id,
            format!("{label} ≅ {expected} (order {})", expected.order()),
            actual == expected && g.order() == expected.order(),
            || format!("{actual}, order {}", g.order()),
        );
    }

    fn transitive(&mut self, id: &str, label: &str, g: &Subgroup) {
        let n = self.s.p.get() + 1;
        self.push(id, format!("{label} acts transitively on the {n} rational points"), g.is_transitive(), || {
            "not transitive".into()
        });
    }

    /// Printed element list equals the set of elements of that order.
    fn element_list(&mut self, id: &str, label: &str, g: &Subgroup, order: u64, printed: &[MatrixLiteral]) {
        let p = self.s.p;
        let actual: BTreeSet<ProjectiveMatrix> = g.elements_of_order(order).into_iter().collect();
        let mut extra = Vec::new();
        let mut listed = BTreeSet::new();
        for &lit in printed {
            match ProjectiveMatrix::new(p, lit) {
                Ok(m) if actual.contains(&m) => {
                    listed.insert(m);
                }
                Ok(m) => extra.push(format!("{} is not an element of order {order}", printed_form(&m))),
                Err(_) => extra.push(format!("{} is singular", literal_form(lit))),
            }
        }
        let missing: Vec<String> = actual.difference(&listed).map(printed_form).collect();
        let pass = extra.is_empty() && missing.is_empty() && listed.len() == printed.len();
        self.push(
            id,
            format!("the {} printed matrices are all elements of order {order} in {label}", printed.len()),
            pass,
            || {
                let mut d = extra.join("; ");
                if !missing.is_empty() {
                    let _ = write!(d, "; unlisted: {}", missing.join(", "));
                }
                d
            },
        );
    }

    fn point_image(&mut self, id: &str, g: (&str, &ProjectiveMatrix), q: ProjectivePoint, printed: ProjectivePoint) {
        let actual = q.apply(g.1);
        let s = self.s;
        self.push(
            id,
            format!("{}{} = {}", g.0, s.point_name(q), s.point_name(printed)),
            actual == printed,
            || s.point_name(actual),
        );
    }

    /// `label ∈ set_label`, where `q` is the computed value of `label`.
    fn membership(&mut self, id: &str, label: &str, q: ProjectivePoint, set_label: &str, set: &BTreeSet<ProjectivePoint>) {
        let s = self.s;
        self.push(id, format!("{label} ∈ {set_label}"), set.contains(&q), || {
            format!("{label} = {} ∉ {set_label}", s.point_name(q))
        });
    }

    fn pair(&mut self, id: &str, label: &str, g1: &Subgroup, g2: &Subgroup, jobs: Jobs) {
        let cert = check_pair_all_basepoints(g1, g2, jobs);
        let (pass, detail) = match cert {
            Ok(c) => (c.passed(), c.failures.join("; ")),
            Err(e) => (false, e.to_string()),
        };
        self.push(
            id,
            format!("G1 ∩ {label} = {{1}} and G1·Q = P¹ = {label}·Q for every rational Q"),
            pass,
            || detail,
        );
    }
}

fn greek(name: &str) -> String {
    let base = match name.trim_end_matches('\'') {
        "sigma" => "σ",
        "tau" => "τ",
        "eta" => "η",
        "mu" => "μ",
        "xi" => "ξ",
        "iota" => "ι",
        other => other,
    };
    format!("{base}{}", if name.ends_with('\'') { "′" } else { "" })
}

/// The printed normal form: bottom-left entry 1 when nonzero.
pub fn printed_form(m: &ProjectiveMatrix) -> String {
    let p = m.modulus();
    let [a, b, c, d] = m.entries();
    if c == 0 {
        return m.to_string();
    }
    let k = p.inv(c).unwrap();
    format!("[[{},{}],[1,{}]]", p.mul(a, k), p.mul(b, k), p.mul(d, k))
}

fn literal_form(m: MatrixLiteral) -> String {
    format!("[[{},{}],[{},{}]]", m[0][0], m[0][1], m[1][0], m[1][1])
}

fn gen(p: PrimeModulus, gens: &[ProjectiveMatrix]) -> Subgroup {
    Subgroup::generate(p, gens, DEFAULT_CLOSURE_CAP).expect("printed groups are small")
}

/// Verifies every printed claim for `p` on the default thread pool.
pub fn verify_section(p: u64) -> Result<Report> {
    verify_section_with(p, Jobs::DEFAULT)
}

pub fn verify_section_with(p: u64, jobs: Jobs) -> Result<Report> {
    let s = section(p)?;
    // the three pair checks dominate the cost; run them side by side
    let pairs = exec::map(&CASES, jobs, |&case| {
        let c = load_case(p, case).expect("known case");
        let (g1, g2) = c.subgroups().expect("printed groups are small");
        let mut items = Items { s: &s, case: Some(case), items: Vec::new() };
        let label = match case {
            'a' => "G2",
            'b' => "G3",
            _ => "G4",
        };
        items.pair(&format!("pair-{case}"), label, &g1, &g2, Jobs::SEQUENTIAL);
        items.push(
            &format!("pair-{case}-degree"),
            format!("the pair has kinds ({}, {}) and degree {}", c.kind1, c.kind2, c.degree),
            g1.recognize() == c.kind1 && g2.recognize() == c.kind2 && g1.order() == c.degree,
            || format!("kinds ({}, {}), order {}", g1.recognize(), g2.recognize(), g1.order()),
        );
        items.items
    });
    let mut items = match p {
        11 => items_11(&s),
        23 => items_23(&s),
        _ => items_59(&s),
    };
    // keep each pair's summary right after that pair's items
    for (case, extra) in CASES.iter().zip(pairs) {
        let at = items.iter().rposition(|i| i.case == Some(*case)).map_or(items.len(), |i| i + 1);
        items.splice(at..at, extra);
    }
    Ok(Report::new(p, items))
}

fn items_11(s: &Section) -> Vec<ReportItem> {
    let p = s.p;
    let m = |n: &str| *s.matrix(n);
    let (sigma, tau, eta, xi, sp, tp, iota) = (m("sigma"), m("tau"), m("eta"), m("xi"), m("sigma'"), m("tau'"), m("iota"));
    let g1 = gen(p, &s.g1_generators());
    let mut it = Items { s, case: None, items: Vec::new() };

    it.order("sigma-order", "sigma", 2);
    it.order("tau-order", "tau", 2);
    it.order("eta-order", "eta", 3);
    it.relation("sigma-tau-commute", "A_σA_τ ∼ A_τA_σ", sigma.compose(&tau), tau.compose(&sigma));
    it.relation("eta-conj-sigma", "A_η⁻¹A_σA_η ∼ A_τ", sigma.conjugate_by(&eta), tau);
    it.relation("eta-conj-tau", "A_η⁻¹A_τA_η ∼ A_σA_τ", tau.conjugate_by(&eta), sigma.compose(&tau));
    it.kind("g1-kind", "G1 = ⟨σ, τ, η⟩", &g1, GroupKind::Alt4);
    it.element_list("g1-order2-list", "G1", &g1, 2, &s.g1_lists[&2]);
    it.element_list("g1-order3-list", "G1", &g1, 3, &s.g1_lists[&3]);
    it.transitive("g1-transitive", "G1", &g1);

    it.case = Some('a');
    let g2 = Subgroup::cyclic(xi);
    it.order("xi-order", "xi", 12);
    it.transitive("g2-transitive", "G2 = ⟨ξ⟩", &g2);
    it.class("xi6-class", "A_ξ⁶ ∼ [[1,1],[1,10]]", &xi.pow(6), [[1, 1], [1, 10]]);
    it.class("xi4-class", "A_ξ⁴ ∼ [[7,1],[1,5]]", &xi.pow(4), [[7, 1], [1, 5]]);
    it.push("xi6-not-in-g1", "ξ⁶ ∉ G1", !g1.contains(&xi.pow(6)), || "ξ⁶ ∈ G1".into());
    it.push("xi4-not-in-g1", "ξ⁴ ∉ G1", !g1.contains(&xi.pow(4)), || "ξ⁴ ∈ G1".into());

    it.case = Some('b');
    let g3 = gen(p, &[sp, tp]);
    it.order("sigma'-order", "sigma'", 2);
    it.order("tau'-order", "tau'", 6);
    it.relation("dihedral-relation", "A_σ′⁻¹A_τ′A_σ′ ∼ A_τ′⁻¹", tp.conjugate_by(&sp), tp.inverse());
    it.kind("g3-kind", "G3 = ⟨σ′, τ′⟩", &g3, GroupKind::Dihedral(12));
    it.transitive("g3-transitive", "G3", &g3);
    let tp2 = tp.pow(2);
    let tp3 = tp.pow(3);
    it.class("tau'2-class", "A_τ′² ∼ [[3,3],[1,6]]", &tp2, [[3, 3], [1, 6]]);
    it.push("tau'2-not-in-g1", "τ′² ∉ G1", !g1.contains(&tp2), || "τ′² ∈ G1".into());
    it.class("tau'3-class", "A_τ′³ ∼ [[4,3],[1,7]]", &tp3, [[4, 3], [1, 7]]);
    let st = sigma.compose(&tau);
    let products: [(&str, &str, ProjectiveMatrix, MatrixLiteral, MatrixLiteral); 3] = [
        ("sigma", "σ", sigma, [[6, 9], [1, 9]], [[2, 9], [1, 5]]),
        ("tau", "τ", tau, [[1, 1], [1, 2]], [[9, 1], [1, 10]]),
        ("sigma-tau", "στ", st, [[2, 4], [1, 1]], [[10, 4], [1, 9]]),
    ];
    for (id, name, x, left, right) in products {
        let l = x.compose(&tp3);
        let r = tp3.compose(&x);
        it.class(
            &format!("{id}-tau'3-product"),
            format!("A_{name}A_τ′³ ∼ {}", literal_form(left)),
            &l,
            left,
        );
        it.class(
            &format!("tau'3-{id}-product"),
            format!("A_τ′³A_{name} ∼ {}", literal_form(right)),
            &r,
            right,
        );
        it.push(
            &format!("{id}-tau'3-noncommuting"),
            format!("{name}τ′³ ≠ τ′³{name}"),
            l != r,
            || "the products coincide".into(),
        );
    }

    it.case = Some('c');
    let g4 = g1.conjugate(&iota);
    it.element_list("g4-order2-list", "G4 = ιG1ι⁻¹", &g4, 2, &s.g4_lists[&2]);
    it.element_list("g4-order3-list", "G4 = ιG1ι⁻¹", &g4, 3, &s.g4_lists[&3]);
    it.kind("g4-kind", "G4", &g4, GroupKind::Alt4);
    it.items
}

fn items_23(s: &Section) -> Vec<ReportItem> {
    let p = s.p;
    let m = |n: &str| *s.matrix(n);
    let (sigma, tau, eta, mu, xi, sp, tp, iota) =
        (m("sigma"), m("tau"), m("eta"), m("mu"), m("xi"), m("sigma'"), m("tau'"), m("iota"));
    let g1 = gen(p, &s.g1_generators());
    let mut it = Items { s, case: None, items: Vec::new() };

    it.order("sigma-order", "sigma", 2);
    it.order("mu-order", "mu", 2);
    it.order("tau-order", "tau", 3);
    it.order("eta-order", "eta", 4);
    it.relation("mu-is-eta-squared", "A_μ ∼ A_η²", mu, eta.pow(2));
    it.relation("sigma-mu-commute", "A_σA_μ ∼ A_μA_σ", sigma.compose(&mu), mu.compose(&sigma));
    it.relation("tau-conj-sigma", "A_τ⁻¹A_σA_τ ∼ A_μ", sigma.conjugate_by(&tau), mu);
    it.relation("tau-conj-mu", "A_τ⁻¹A_μA_τ ∼ A_σA_μ", mu.conjugate_by(&tau), sigma.compose(&mu));
    it.relation("eta-conj-sigma", "A_η⁻¹A_σA_η ∼ A_σA_μ", sigma.conjugate_by(&eta), sigma.compose(&mu));
    it.relation("eta-conj-mu", "A_η⁻¹A_μA_η ∼ A_μ", mu.conjugate_by(&eta), mu);
    it.relation(
        "eta-conj-tau",
        "A_η⁻¹A_τA_η ∼ A_σA_μA_τ²",
        tau.conjugate_by(&eta),
        sigma.compose(&mu).compose(&tau.pow(2)),
    );
    it.relation("eta-conj-tau2", "A_η⁻¹A_τ²A_η ∼ A_μA_τ", tau.pow(2).conjugate_by(&eta), mu.compose(&tau));
    it.kind("a4-subgroup-kind", "⟨σ, μ, τ⟩", &gen(p, &[sigma, mu, tau]), GroupKind::Alt4);
    it.kind("g1-kind", "G1 = ⟨σ, τ, η, μ⟩", &g1, GroupKind::Sym4);
    it.transitive("g1-transitive", "G1", &g1);

    let sizes: Vec<usize> = s.o_blocks.iter().map(|b| b.len()).collect();
    let o = Partition::new(p, s.o_blocks.clone());
    it.push(
        "o-partition",
        "O1, O2, O3, O4 have six points each and partition P¹(F_23)",
        o.is_ok() && sizes == [6; 4],
        || format!("sizes {sizes:?}, {:?}", o.as_ref().err()),
    );
    let o = o.expect("printed partition is valid");
    for (id, name, g, printed) in [
        ("sigma-on-o-blocks", "σ", sigma, [2, 1, 4, 3]),
        ("tau-on-o-blocks", "τ", tau, [1, 3, 4, 2]),
        ("eta-on-o-blocks", "η", eta, [2, 3, 4, 1]),
    ] {
        let actual = o.block_action(&g).map(|v| v.iter().map(|i| i + 1).collect::<Vec<_>>());
        let claim = (1..=4)
            .map(|i| format!("{name}(O{i}) = O{}", printed[i - 1]))
            .collect::<Vec<_>>()
            .join(", ");
        it.push(id, claim, actual.as_deref() == Ok(&printed[..]), || format!("{actual:?}"));
    }
    it.push(
        "o-blocks-faithful",
        "G1 acts faithfully on {O1, O2, O3, O4}",
        o.is_faithful(&g1) == Ok(true),
        || "not faithful".into(),
    );

    it.case = Some('a');
    let g2 = Subgroup::cyclic(xi);
    it.order("xi-order", "xi", 24);
    it.transitive("g2-transitive", "G2 = ⟨ξ⟩", &g2);
    let (xi12, xi8) = (xi.pow(12), xi.pow(8));
    it.class("xi12-class", "A_ξ¹² ∼ [[-1,-3],[-3,1]]", &xi12, [[-1, -3], [-3, 1]]);
    it.class("xi8-class", "A_ξ⁸ ∼ [[13,2],[2,11]]", &xi8, [[13, 2], [2, 11]]);
    let inf = ProjectivePoint::infinity(p);
    it.point_image("xi12-at-infinity", ("ξ¹²", &xi12), inf, s.alpha_point(17));
    it.membership("xi12-at-infinity-block", "ξ¹²(0:1)", inf.apply(&xi12), "O3", &s.o_blocks[2]);
    it.point_image("xi8-at-infinity", ("ξ⁸", &xi8), inf, s.alpha_point(7));
    it.membership("xi8-at-infinity-block", "ξ⁸(0:1)", inf.apply(&xi8), "O1", &s.o_blocks[0]);
    it.point_image("xi12-at-alpha", ("ξ¹²", &xi12), s.alpha_point(1), s.alpha_point(5));
    it.membership("xi12-at-alpha-block", "ξ¹²(1:α)", s.alpha_point(1).apply(&xi12), "O4", &s.o_blocks[3]);
    it.point_image("xi8-at-alpha3", ("ξ⁸", &xi8), s.alpha_point(3), s.alpha_point(16));
    it.membership("xi8-at-alpha3-block", "ξ⁸(1:α^3)", s.alpha_point(3).apply(&xi8), "O4", &s.o_blocks[3]);
    for (id, name, g) in [("xi12-not-block-preserving", "ξ¹²", xi12), ("xi8-not-block-preserving", "ξ⁸", xi8)] {
        it.push(
            id,
            format!("{name} does not permute the O-blocks, so {name} ∉ G1"),
            o.block_action(&g).is_err() && !g1.contains(&g),
            || format!("{name} preserves the blocks"),
        );
    }

    it.case = Some('b');
    let g3 = gen(p, &[sp, tp]);
    it.order("sigma'-order", "sigma'", 2);
    it.order("tau'-order", "tau'", 12);
    it.relation("dihedral-relation", "A_σ′⁻¹A_τ′A_σ′ ∼ A_τ′⁻¹", tp.conjugate_by(&sp), tp.inverse());
    it.kind("g3-kind", "G3 = ⟨σ′, τ′⟩", &g3, GroupKind::Dihedral(24));
    it.transitive("g3-transitive", "G3", &g3);
    let t_sizes: Vec<usize> = s.t_blocks.iter().map(|b| b.len()).collect();
    let t = Partition::new(p, s.t_blocks.clone());
    it.push(
        "t-partition",
        "T1, T2 have twelve points each and partition P¹(F_23)",
        t.is_ok() && t_sizes == [12, 12],
        || format!("sizes {t_sizes:?}"),
    );
    let t = t.expect("printed partition is valid");
    for (id, claim, g, printed) in [
        ("sigma'-on-t-blocks", "σ′(T1) = T2, σ′(T2) = T1", sp, [2, 1]),
        ("tau'-on-t-blocks", "τ′(T1) = T1, τ′(T2) = T2", tp, [1, 2]),
    ] {
        let actual = t.block_action(&g).map(|v| v.iter().map(|i| i + 1).collect::<Vec<_>>());
        it.push(id, claim, actual.as_deref() == Ok(&printed[..]), || format!("{actual:?}"));
    }
    let table: [[(&[ProjectivePoint], &[i64]); 2]; 4] = [
        [(&[inf], &[3, 18]), (&[], &[1, 6, 7])],
        [(&[], &[9]), (&[ProjectivePoint::affine(p, 0)], &[8, 12, 14, 19])],
        [(&[ProjectivePoint::affine(p, 1)], &[4, 17, 21]), (&[], &[2, 10])],
        [(&[], &[5, 20]), (&[], &[11, 13, 15, 16])],
    ];
    let mut singletons = Vec::new();
    for (i, row) in table.iter().enumerate() {
        for (j, (specials, exps)) in row.iter().enumerate() {
            let printed: BTreeSet<_> = specials
                .iter()
                .copied()
                .chain(exps.iter().map(|&k| s.alpha_point(k)))
                .collect();
            let actual: BTreeSet<_> = s.o_blocks[i].intersection(&s.t_blocks[j]).copied().collect();
            if actual.len() == 1 {
                singletons.push((i + 1, j + 1, *actual.first().unwrap()));
            }
            it.push(
                &format!("o{}-t{}-cell", i + 1, j + 1),
                format!("O{} ∩ T{} = {} ({} points)", i + 1, j + 1, s.set_name(&printed), printed.len()),
                printed == actual,
                || format!("{} ({} points)", s.set_name(&actual), actual.len()),
            );
        }
    }
    let unique = s.alpha_point(9);
    it.push(
        "unique-singleton-cell",
        "the only single-point cell is O2 ∩ T1 = {(1:α^9)}",
        singletons == [(2, 1, unique)],
        || {
            singletons
                .iter()
                .map(|(i, j, q)| format!("O{i} ∩ T{j} = {{{}}}", s.point_name(*q)))
                .collect::<Vec<_>>()
                .join(", ")
        },
    );

    it.case = Some('c');
    let images: Vec<BTreeSet<ProjectivePoint>> = s
        .o_blocks
        .iter()
        .map(|b| b.iter().map(|q| q.apply(&iota)).collect())
        .collect();
    for (j, (printed, actual)) in s.iota_o_blocks.iter().zip(&images).enumerate() {
        it.push(
            &format!("iota-o{}", j + 1),
            format!("ι(O{}) = {}", j + 1, s.set_name(printed)),
            printed == actual,
            || s.set_name(actual),
        );
    }
    let empty: Vec<(usize, usize)> = (0..4)
        .flat_map(|i| (0..4).map(move |j| (i, j)))
        .filter(|&(i, j)| s.o_blocks[i].is_disjoint(&images[j]))
        .map(|(i, j)| (i + 1, j + 1))
        .collect();
    it.push(
        "iota-unique-empty-cell",
        "O_i ∩ ι(O_j) = ∅ only for (i, j) = (2, 1)",
        empty == [(2, 1)],
        || format!("empty cells {empty:?}"),
    );
    let g4 = g1.conjugate(&iota);
    it.kind("g4-kind", "G4 = ιG1ι⁻¹", &g4, GroupKind::Sym4);

    let tau2 = tau.pow(2);
    it.class("sigma-printed", "A_σ ∼ [[0,1],[17,0]]", &sigma, [[0, 1], [17, 0]]);
    it.class("tau2-printed", "A_τ² ∼ [[-4,-7],[5,2]]", &tau2, [[-4, -7], [5, 2]]);
    it.class("tau-printed", "A_τ ∼ [[-5,-6],[1,10]]", &tau, [[-5, -6], [1, 10]]);
    it.class("eta-printed", "A_η ∼ [[1,9],[8,-4]]", &eta, [[1, 9], [8, -4]]);
    it.class("eta2-printed", "A_η² ∼ [[4,-4],[-1,-4]]", &eta.pow(2), [[4, -4], [-1, -4]]);
    let g_a = sigma.compose(&tau2).compose(&sigma);
    let g_b = tau.compose(&eta).compose(&sigma).compose(&tau2);
    let g_c = eta.compose(&sigma).compose(&eta.pow(2));
    let g_d = tau2.compose(&g_c).compose(&tau);
    it.class("order3-candidate", "A_σA_τ²A_σ ∼ [[11,5],[1,1]]", &g_a, [[11, 5], [1, 1]]);
    it.class("fixing-o1-candidate", "A_τA_ηA_σA_τ² ∼ [[-10,1],[6,10]]", &g_b, [[-10, 1], [6, 10]]);
    it.class("fixing-o4-candidate", "A_ηA_σA_η² ∼ [[-10,5],[-4,10]]", &g_c, [[-10, 5], [-4, 10]]);
    it.class("fixing-o3-candidate", "A_τ²A_{η²ση}A_τ ∼ [[7,3],[-10,-7]]", &g_d, [[7, 3], [-10, -7]]);
    let zero = ProjectivePoint::affine(p, 0);
    let one = ProjectivePoint::affine(p, 1);
    let checks: [(&str, &str, ProjectiveMatrix, ProjectivePoint, i64, usize); 8] = [
        ("order3-candidate-at-0", "γ", g_a, zero, 14, 2),
        ("order3-candidate-at-alpha2", "γ", g_a, s.alpha_point(2), 5, 1),
        ("fixing-o1-candidate-at-infinity", "γ", g_b, inf, 7, 1),
        ("fixing-o1-candidate-at-1", "γ", g_b, one, 16, 0),
        ("fixing-o4-candidate-at-infinity", "γ", g_c, inf, 10, 2),
        ("fixing-o4-candidate-at-1", "γ", g_c, one, 7, 1),
        ("fixing-o3-candidate-at-infinity", "γ", g_d, inf, 16, 0),
        ("fixing-o3-candidate-at-1", "γ", g_d, one, 10, 2),
    ];
    for (id, name, g, q, k, block) in checks {
        let target = s.alpha_point(k);
        it.point_image(id, (name, &g), q, target);
        let label = s.point_name(target);
        it.membership(&format!("{id}-block"), &label, target, &format!("ι(O{})", block + 1), &s.iota_o_blocks[block]);
    }
    it.items
}

fn items_59(s: &Section) -> Vec<ReportItem> {
    let p = s.p;
    let m = |n: &str| *s.matrix(n);
    let (xi, sp, tp, iota) = (m("xi"), m("sigma'"), m("tau'"), m("iota"));
    let g1 = gen(p, &s.g1_generators());
    let mut it = Items { s, case: None, items: Vec::new() };

    it.order("sigma-order", "sigma", 2);
    it.order("tau-order", "tau", 3);
    it.kind("g1-kind", "G1 = ⟨σ, τ⟩", &g1, GroupKind::Alt5);
    it.transitive("g1-transitive", "G1", &g1);

    it.case = Some('a');
    let g2 = Subgroup::cyclic(xi);
    it.order("xi-order", "xi", 60);
    it.transitive("g2-transitive", "G2 = ⟨ξ⟩", &g2);

    it.case = Some('b');
    let g3 = gen(p, &[sp, tp]);
    it.order("sigma'-order", "sigma'", 2);
    it.order("tau'-order", "tau'", 30);
    it.relation("dihedral-relation", "A_σ′⁻¹A_τ′A_σ′ ∼ A_τ′⁻¹", tp.conjugate_by(&sp), tp.inverse());
    it.kind("g3-kind", "G3 = ⟨σ′, τ′⟩", &g3, GroupKind::Dihedral(60));
    it.transitive("g3-transitive", "G3", &g3);

    it.case = Some('c');
    let g4 = g1.conjugate(&iota);
    it.kind("g4-kind", "G4 = ιG1ι⁻¹", &g4, GroupKind::Alt5);
    it.items
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn case_lookup() {
        let c = load_case(11, 'a').unwrap();
        assert_eq!((c.kind1, c.kind2), (GroupKind::Alt4, GroupKind::Cyclic(12)));
        let c = load_case(23, 'b').unwrap();
        assert_eq!((c.kind1, c.kind2), (GroupKind::Sym4, GroupKind::Dihedral(24)));
        let c = load_case(59, 'c').unwrap();
        let p = c.p;
        assert_eq!(
            *c.section.conjugator(),
            ProjectiveMatrix::new(p, [[1, p.pow(2, 30).unwrap() as i64], [0, -(p.pow(2, 15).unwrap() as i64)]]).unwrap()
        );
        assert!(matches!(load_case(13, 'a'), Err(Error::UnknownCase { p: 13, .. })));
        assert!(matches!(load_case(11, 'd'), Err(Error::UnknownCase { .. })));
        assert_eq!(parse_case(11, "B"), Ok('b'));
        assert!(parse_case(11, "ab").is_err());
    }

    #[test]
    fn point_names() {
        let s = section(23).unwrap();
        assert_eq!(s.point_name(s.alpha_point(9)), "(1:α^9)");
        assert_eq!(s.point_name(ProjectivePoint::infinity(s.p)), "(0:1)");
        assert_eq!(s.point_name(ProjectivePoint::affine(s.p, 0)), "(1:0)");
    }

    #[test]
    fn printed_form_puts_one_bottom_left() {
        let s = section(11).unwrap();
        assert_eq!(printed_form(&s.matrix("xi").pow(4)), "[[7,1],[1,5]]");
        assert_eq!(printed_form(s.matrix("iota")), "[[1,0],[0,6]]");
    }
}
