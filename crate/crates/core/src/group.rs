//! Finite subgroups of `PGL(2, F_p)` held as fully enumerated element sets.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::field::PrimeModulus;
use crate::projective::{enumerate_points, ProjectiveMatrix, ProjectivePoint};

/// Closure cap used when callers have no better bound.
pub const DEFAULT_CLOSURE_CAP: usize = 600;

/// A subgroup with its generators and its sorted element list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgroup {
    p: PrimeModulus,
    generators: Vec<ProjectiveMatrix>,
    elements: Vec<ProjectiveMatrix>,
}

impl Subgroup {
    pub fn trivial(p: PrimeModulus) -> Self {
        Subgroup {
            p,
            generators: vec![ProjectiveMatrix::identity(p)],
            elements: vec![ProjectiveMatrix::identity(p)],
        }
    }

    /// Breadth-first closure of `gens` under right multiplication.
    ///
    /// Fails with [`Error::ClosureCapExceeded`] as soon as more than `cap`
    /// elements have been found.
    pub fn generate(p: PrimeModulus, gens: &[ProjectiveMatrix], cap: usize) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::NoGenerators);
        }
        if let Some(g) = gens.iter().find(|g| g.modulus() != p) {
            return Err(Error::ModulusMismatch(p.get(), g.modulus().get()));
        }
        let id = ProjectiveMatrix::identity(p);
        let mut seen: BTreeSet<ProjectiveMatrix> = BTreeSet::from([id]);
        let mut frontier = vec![id];
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for x in &frontier {
                for g in gens {
                    let y = x.compose(g);
                    if seen.insert(y) {
                        if seen.len() > cap {
                            return Err(Error::ClosureCapExceeded { cap });
                        }
                        next.push(y);
                    }
                }
            }
            frontier = next;
        }
        Ok(Subgroup {
            p,
            generators: gens.to_vec(),
            elements: seen.into_iter().collect(),
        })
    }

    /// `⟨g⟩`.
    pub fn cyclic(g: ProjectiveMatrix) -> Self {
        let mut elements = Vec::new();
        let mut x = ProjectiveMatrix::identity(g.modulus());
        loop {
            elements.push(x);
            x = x.compose(&g);
            if x.is_identity() {
                break;
            }
        }
        elements.sort();
        Subgroup {
            p: g.modulus(),
            generators: vec![g],
            elements,
        }
    }

    fn from_elements(
        p: PrimeModulus,
        generators: Vec<ProjectiveMatrix>,
        mut elements: Vec<ProjectiveMatrix>,
    ) -> Self {
        elements.sort();
        elements.dedup();
        Subgroup {
            p,
            generators,
            elements,
        }
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.p
    }

    pub fn generators(&self) -> &[ProjectiveMatrix] {
        &self.generators
    }

    /// Elements in canonical sorted order.
    pub fn elements(&self) -> &[ProjectiveMatrix] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn contains(&self, a: &ProjectiveMatrix) -> bool {
        self.elements.binary_search(a).is_ok()
    }

    /// Same element set, regardless of generators.
    pub fn same_elements(&self, other: &Subgroup) -> bool {
        self.p == other.p && self.elements == other.elements
    }

    /// Element-order statistics: order ↦ number of elements of that order.
    pub fn order_multiset(&self) -> BTreeMap<u64, usize> {
        let mut out = BTreeMap::new();
        for a in &self.elements {
            *out.entry(a.order()).or_insert(0) += 1;
        }
        out
    }

    /// Elements of exactly the given order.
    pub fn elements_of_order(&self, n: u64) -> Vec<ProjectiveMatrix> {
        self.elements.iter().copied().filter(|a| a.order() == n).collect()
    }

    pub fn intersect(&self, other: &Subgroup) -> Result<Subgroup> {
        self.same_modulus(other.p)?;
        let common: Vec<_> = self
            .elements
            .iter()
            .copied()
            .filter(|a| other.contains(a))
            .collect();
        let gens: Vec<_> = common.iter().copied().filter(|a| !a.is_identity()).collect();
        let gens = if gens.is_empty() {
            vec![ProjectiveMatrix::identity(self.p)]
        } else {
            gens
        };
        Ok(Subgroup::from_elements(self.p, gens, common))
    }

    /// `{c⁻¹·a·c : a ∈ G}`, the subgroup `ι G ι⁻¹` for `ι = c` in the row action.
    pub fn conjugate(&self, c: &ProjectiveMatrix) -> Subgroup {
        let map = |a: &ProjectiveMatrix| a.conjugate_by(c);
        Subgroup::from_elements(
            self.p,
            self.generators.iter().map(map).collect(),
            self.elements.iter().map(map).collect(),
        )
    }

    pub fn orbit(&self, q: ProjectivePoint) -> Result<BTreeSet<ProjectivePoint>> {
        self.same_modulus(q.modulus())?;
        Ok(self.elements.iter().map(|a| q.apply(a)).collect())
    }

    pub fn stabilizer(&self, q: ProjectivePoint) -> Result<Subgroup> {
        self.same_modulus(q.modulus())?;
        let fix: Vec<_> = self
            .elements
            .iter()
            .copied()
            .filter(|a| q.apply(a) == q)
            .collect();
        let gens: Vec<_> = fix.iter().copied().filter(|a| !a.is_identity()).collect();
        let gens = if gens.is_empty() {
            vec![ProjectiveMatrix::identity(self.p)]
        } else {
            gens
        };
        Ok(Subgroup::from_elements(self.p, gens, fix))
    }

    /// Transitive on all `p + 1` rational points.
    pub fn is_transitive(&self) -> bool {
        self.orbit(ProjectivePoint::infinity(self.p))
            .map(|o| o.len() == self.p.get() as usize + 1)
            .unwrap_or(false)
    }

    /// Isomorphism type among cyclic, dihedral, `A4`, `S4`, `A5`.
    ///
    /// Orders are examined first (cyclic), then an index-2 cyclic subgroup
    /// inverted by an outside involution (dihedral), then the element-order
    /// statistics of the three polyhedral groups.
    pub fn recognize(&self) -> GroupKind {
        let n = self.order();
        let orders: Vec<u64> = self.elements.iter().map(|a| a.order()).collect();
        if orders.iter().any(|&o| o as usize == n) {
            return GroupKind::Cyclic(n);
        }
        if n >= 4 && n.is_multiple_of(2) && self.is_dihedral(&orders) {
            return GroupKind::Dihedral(n);
        }
        let mut stats = BTreeMap::new();
        for &o in &orders {
            *stats.entry(o).or_insert(0usize) += 1;
        }
        let matches = |want: &[(u64, usize)]| {
            let mut want: BTreeMap<u64, usize> = want.iter().copied().collect();
            want.insert(1, 1);
            want == stats
        };
        match n {
            12 if matches(&[(2, 3), (3, 8)]) => GroupKind::Alt4,
            24 if matches(&[(2, 9), (3, 8), (4, 6)]) => GroupKind::Sym4,
            60 if matches(&[(2, 15), (3, 20), (5, 24)]) => GroupKind::Alt5,
            _ => GroupKind::Other(n),
        }
    }

    fn is_dihedral(&self, orders: &[u64]) -> bool {
        let half = (self.order() / 2) as u64;
        let involutions: Vec<_> = self
            .elements
            .iter()
            .zip(orders)
            .filter(|(_, &o)| o == 2)
            .map(|(a, _)| *a)
            .collect();
        self.elements
            .iter()
            .zip(orders)
            .filter(|(_, &o)| o == half)
            .any(|(r, _)| {
                let rotations = Subgroup::cyclic(*r);
                let r_inv = r.inverse();
                involutions
                    .iter()
                    .any(|s| !rotations.contains(s) && s.compose(r).compose(&s.inverse()) == r_inv)
            })
    }

    fn same_modulus(&self, q: PrimeModulus) -> Result<()> {
        if self.p == q {
            Ok(())
        } else {
            Err(Error::ModulusMismatch(self.p.get(), q.get()))
        }
    }
}

/// Isomorphism type of a subgroup. Dihedral groups are named by their order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupKind {
    Cyclic(usize),
    Dihedral(usize),
    Alt4,
    Sym4,
    Alt5,
    Other(usize),
}

impl GroupKind {
    pub fn order(self) -> usize {
        match self {
            GroupKind::Cyclic(n) | GroupKind::Dihedral(n) | GroupKind::Other(n) => n,
            GroupKind::Alt4 => 12,
            GroupKind::Sym4 => 24,
            GroupKind::Alt5 => 60,
        }
    }
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupKind::Cyclic(n) => write!(f, "C{n}"),
            GroupKind::Dihedral(n) => write!(f, "D{n}"),
            GroupKind::Alt4 => f.write_str("A4"),
            GroupKind::Sym4 => f.write_str("S4"),
            GroupKind::Alt5 => f.write_str("A5"),
            GroupKind::Other(n) => write!(f, "Other({n})"),
        }
    }
}

impl FromStr for GroupKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::UnknownKind(s.to_string());
        let number = |rest: &str| rest.parse::<usize>().ok().filter(|&n| n >= 1);
        match s {
            "A4" => Ok(GroupKind::Alt4),
            "S4" => Ok(GroupKind::Sym4),
            "A5" => Ok(GroupKind::Alt5),
            _ if s.starts_with('C') => number(&s[1..]).map(GroupKind::Cyclic).ok_or_else(bad),
            _ if s.starts_with('D') => number(&s[1..])
                .filter(|n| n % 2 == 0 && *n >= 4)
                .map(GroupKind::Dihedral)
                .ok_or_else(bad),
            _ => s
                .strip_prefix("Other(")
                .and_then(|r| r.strip_suffix(')'))
                .and_then(number)
                .map(GroupKind::Other)
                .ok_or_else(bad),
        }
    }
}

/// A partition of `P¹(F_p)` into disjoint blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    blocks: Vec<BTreeSet<ProjectivePoint>>,
    block_of: Vec<usize>,
}

impl Partition {
    pub fn new(p: PrimeModulus, blocks: Vec<BTreeSet<ProjectivePoint>>) -> Result<Self> {
        let n = p.get() as usize + 1;
        let mut block_of = vec![usize::MAX; n];
        for (i, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::InvalidPartition(format!("block {i} is empty")));
            }
            for q in block {
                if q.modulus() != p {
                    return Err(Error::ModulusMismatch(p.get(), q.modulus().get()));
                }
                let slot = &mut block_of[q.index()];
                if *slot != usize::MAX {
                    return Err(Error::InvalidPartition(format!(
                        "{q} lies in blocks {} and {i}",
                        *slot
                    )));
                }
                *slot = i;
            }
        }
        if let Some(missing) = block_of.iter().position(|&b| b == usize::MAX) {
            return Err(Error::InvalidPartition(format!(
                "{} is not covered",
                enumerate_points(p)[missing]
            )));
        }
        Ok(Partition { blocks, block_of })
    }

    pub fn blocks(&self) -> &[BTreeSet<ProjectivePoint>] {
        &self.blocks
    }

    pub fn block_of(&self, q: ProjectivePoint) -> usize {
        self.block_of[q.index()]
    }

    /// The permutation `i ↦ j` with `a(block i) = block j`.
    pub fn block_action(&self, a: &ProjectiveMatrix) -> Result<Vec<usize>> {
        self.blocks
            .iter()
            .enumerate()
            .map(|(i, block)| {
                let mut images = block.iter().map(|q| self.block_of(q.apply(a)));
                let j = images.next().expect("blocks are nonempty");
                if images.all(|k| k == j) && self.blocks[j].len() == block.len() {
                    Ok(j)
                } else {
                    Err(Error::NotBlockPreserving { block: i })
                }
            })
            .collect()
    }

    /// True iff only the identity fixes every block.
    pub fn is_faithful(&self, g: &Subgroup) -> Result<bool> {
        let identity: Vec<usize> = (0..self.blocks.len()).collect();
        let mut kernel = 0usize;
        for a in g.elements() {
            if self.block_action(a)? == identity {
                kernel += 1;
            }
        }
        Ok(kernel == 1)
    }
}
