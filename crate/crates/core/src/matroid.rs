//! Matroids given by an explicit basis family over at most 64 points.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::path::Path;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groups::perm::{PermGroup, Permutation};
use crate::subset::{self, Subset, MAX_POINTS};

/// Ground sets up to this size get an exhaustive basis-exchange check.
pub const EXHAUSTIVE_LIMIT: usize = 12;
const EXCHANGE_SAMPLES: usize = 20_000;

/// A matroid on the points of `ground` (0-based bit positions), stored as
/// its sorted list of bases.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matroid {
    ground: Subset,
    rank: usize,
    bases: Vec<Subset>,
}

impl Matroid {
    /// Builds and validates a matroid.
    pub fn from_bases(ground: Subset, rank: usize, bases: impl IntoIterator<Item = Subset>) -> Result<Self> {
        let m = Self::from_bases_unchecked(ground, rank, bases);
        m.validate()?;
        Ok(m)
    }

    pub(crate) fn from_bases_unchecked(ground: Subset, rank: usize, bases: impl IntoIterator<Item = Subset>) -> Self {
        let mut bases: Vec<Subset> = bases.into_iter().collect();
        bases.sort_unstable();
        bases.dedup();
        Matroid { ground, rank, bases }
    }

    pub fn uniform(k: usize, n: usize) -> Result<Self> {
        if k > n || n > MAX_POINTS {
            return Err(Error::InvalidParameters(format!("uniform matroid needs k <= n <= 64, got k={k}, n={n}")));
        }
        Ok(Self::from_bases_unchecked(subset::full(n), k, subset::k_subsets_of(subset::full(n), k)))
    }

    pub fn boolean(n: usize) -> Result<Self> {
        Self::uniform(n, n)
    }

    /// The Vámos matroid: rank 4 on eight points, every 4-set a basis
    /// except `1234, 1256, 3456, 3478, 5678`.
    pub fn vamos() -> Self {
        let circuit_hyperplanes = Self::vamos_circuit_hyperplanes();
        let bases = subset::k_subsets_of(subset::full(8), 4).into_iter().filter(|b| !circuit_hyperplanes.contains(b));
        Self::from_bases_unchecked(subset::full(8), 4, bases)
    }

    pub fn vamos_circuit_hyperplanes() -> Vec<Subset> {
        [[1, 2, 3, 4], [1, 2, 5, 6], [3, 4, 5, 6], [3, 4, 7, 8], [5, 6, 7, 8]]
            .iter()
            .map(|h| subset::from_labels(h).expect("labels in range"))
            .collect()
    }

    /// Direct sum with `other`'s points placed after this matroid's.
    pub fn direct_sum(&self, other: &Matroid) -> Result<Self> {
        let (n1, n2) = (self.size(), other.size());
        if self.ground != subset::full(n1) || other.ground != subset::full(n2) || n1 + n2 > MAX_POINTS {
            return Err(Error::InvalidParameters("direct sum needs ground sets 1..n with n1 + n2 <= 64".into()));
        }
        let mut bases = Vec::with_capacity(self.bases.len() * other.bases.len());
        for &a in &self.bases {
            for &b in &other.bases {
                bases.push(a | (b << n1));
            }
        }
        Ok(Self::from_bases_unchecked(subset::full(n1 + n2), self.rank + other.rank, bases))
    }

    pub fn ground(&self) -> Subset {
        self.ground
    }

    pub fn size(&self) -> usize {
        subset::size(self.ground)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn bases(&self) -> &[Subset] {
        &self.bases
    }

    pub fn is_basis(&self, s: Subset) -> bool {
        self.bases.binary_search(&s).is_ok()
    }

    pub fn rank_of(&self, s: Subset) -> usize {
        let s = s & self.ground;
        let mut best = 0;
        for &b in &self.bases {
            best = best.max(subset::size(b & s));
            if best == self.rank {
                break;
            }
        }
        best
    }

    pub fn is_independent(&self, s: Subset) -> bool {
        let size = subset::size(s);
        if s & !self.ground != 0 || size > self.rank {
            return false;
        }
        if size == self.rank {
            return self.is_basis(s);
        }
        if size + 1 == self.rank {
            return subset::points(self.ground & !s).any(|e| self.is_basis(s | (1 << e)));
        }
        self.bases.iter().any(|&b| b & s == s)
    }

    /// `cl(S)`: all points whose addition does not raise the rank.
    pub fn closure(&self, s: Subset) -> Subset {
        let r = self.rank_of(s);
        s | subset::points(self.ground & !s).filter(|&e| self.rank_of(s | (1 << e)) == r).fold(0, |m, e| m | (1 << e))
    }

    /// The contraction `M / S` on `ground ∖ S`.
    pub fn contract(&self, s: Subset) -> Matroid {
        let s = s & self.ground;
        let r = self.rank_of(s);
        let bases = self.bases.iter().filter(|&&b| subset::size(b & s) == r).map(|&b| b & !s);
        Self::from_bases_unchecked(self.ground & !s, self.rank - r, bases)
    }

    /// The restriction `M | S` on `S`.
    pub fn restrict(&self, s: Subset) -> Matroid {
        let s = s & self.ground;
        let r = self.rank_of(s);
        let bases = self.bases.iter().filter(|&&b| subset::size(b & s) == r).map(|&b| b & s);
        Self::from_bases_unchecked(s, r, bases)
    }

    pub fn loops(&self) -> Subset {
        self.ground & !self.bases.iter().fold(0, |m, &b| m | b)
    }

    pub fn is_loopless(&self) -> bool {
        self.loops() == 0
    }

    /// Closure of an independent set of size `rank - 1`.
    fn hyperplane_through(&self, i: Subset) -> Subset {
        i | subset::points(self.ground & !i).filter(|&e| !self.is_basis(i | (1 << e))).fold(0, |m, e| m | (1 << e))
    }

    /// All hyperplanes, in increasing bitmask order.
    pub fn hyperplanes(&self) -> Vec<Subset> {
        if self.rank == 0 {
            return Vec::new();
        }
        let mut independent = HashSet::new();
        for &b in &self.bases {
            for e in subset::points(b) {
                independent.insert(b & !(1 << e));
            }
        }
        let set: BTreeSet<Subset> = independent.into_iter().map(|i| self.hyperplane_through(i)).collect();
        set.into_iter().collect()
    }

    /// A hyperplane `H` is stressed when every `(k-1)`-subset of `H` is
    /// independent; for a closed set of rank `k-1` this is the same as
    /// every `k`-subset of `H` being a circuit.
    pub fn is_stressed(&self, h: Subset) -> bool {
        if self.rank == 0 || h & !self.ground != 0 || subset::size(h) + 1 < self.rank {
            return false;
        }
        let subs = subset::k_subsets_of(h, self.rank - 1);
        if !subs.iter().all(|&i| self.is_independent(i)) {
            return false;
        }
        self.hyperplane_through(subs[0]) == h
    }

    /// Definitional form: `H` is a closed set of rank `k-1` and every
    /// `k`-subset of `H` is a circuit.
    pub fn is_stressed_by_circuits(&self, h: Subset) -> bool {
        if self.rank == 0 || self.rank_of(h) + 1 != self.rank || self.closure(h) != h {
            return false;
        }
        subset::k_subsets_of(h, self.rank).into_iter().all(|c| self.is_circuit(c))
    }

    pub fn is_circuit(&self, c: Subset) -> bool {
        !self.is_independent(c) && subset::points(c).all(|e| self.is_independent(c & !(1 << e)))
    }

    /// Every circuit has at least `rank` elements.
    pub fn is_paving(&self) -> bool {
        self.rank == 0 || subset::k_subsets_of(self.ground, self.rank - 1).into_iter().all(|i| self.is_independent(i))
    }

    pub fn is_uniform(&self) -> bool {
        self.bases.len() == subset::k_subsets_of(self.ground, self.rank).len()
    }

    /// Adds every `k`-subset of each listed stressed hyperplane as a basis.
    pub fn relax(&self, hyperplanes: &[Subset]) -> Result<Matroid> {
        let mut bases = self.bases.clone();
        for &h in hyperplanes {
            if !self.is_stressed(h) {
                return Err(Error::NotStressed(subset::labels(h)));
            }
            bases.extend(subset::k_subsets_of(h, self.rank));
        }
        Ok(Self::from_bases_unchecked(self.ground, self.rank, bases))
    }

    /// Whether `g` maps bases to bases.
    pub fn is_preserved_by(&self, g: &Permutation) -> bool {
        g.degree() >= subset::points(self.ground).max().map_or(0, |p| p + 1)
            && g.apply_subset(self.ground) == self.ground
            && self.bases.iter().all(|&b| self.is_basis(g.apply_subset(b)))
    }

    pub fn check_preserved(&self, group: &PermGroup) -> Result<()> {
        match group.generators().iter().find(|g| !self.is_preserved_by(g)) {
            Some(g) => Err(Error::NotPreserved(format!("{g} does not preserve the matroid"))),
            None => Ok(()),
        }
    }

    /// Orbits of stressed hyperplanes with at least `rank` elements, each
    /// as an orbit transversal. Relaxing all of them gives the uniform
    /// matroid when the matroid is paving.
    pub fn stressed_orbits(&self, group: &PermGroup) -> Result<Vec<Vec<(Subset, Permutation)>>> {
        self.check_preserved(group)?;
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for h in self.hyperplanes() {
            if subset::size(h) < self.rank || seen.contains(&h) || !self.is_stressed(h) {
                continue;
            }
            let orbit = group.orbit_transversal(h);
            seen.extend(orbit.iter().map(|(s, _)| *s));
            out.push(orbit);
        }
        Ok(out)
    }

    /// Adds a new point parallel to `e`, labelled after the current points.
    pub fn parallel_extension(&self, e: usize) -> Result<Matroid> {
        let n = self.size();
        if self.ground != subset::full(n) || e >= n || n + 1 > MAX_POINTS {
            return Err(Error::InvalidParameters("parallel extension needs ground 1..n and e in range".into()));
        }
        let new = 1u64 << n;
        let bit = 1u64 << e;
        let bases = self.bases.iter().flat_map(|&b| if b & bit != 0 { vec![b, (b & !bit) | new] } else { vec![b] });
        Ok(Self::from_bases_unchecked(subset::full(n + 1), self.rank, bases))
    }

    /// Checks equal basis sizes, containment in the ground set and the
    /// exchange axiom (exhaustively up to [`EXHAUSTIVE_LIMIT`] points,
    /// by seeded sampling above).
    pub fn validate(&self) -> Result<()> {
        if self.bases.is_empty() {
            return Err(Error::InvalidMatroid("no bases".into()));
        }
        if let Some(b) = self.bases.iter().find(|&&b| subset::size(b) != self.rank || b & !self.ground != 0) {
            return Err(Error::InvalidMatroid(format!(
                "{:?} is not a {}-subset of the ground set",
                subset::labels(*b),
                self.rank
            )));
        }
        let check = |b1: Subset, b2: Subset| -> Result<()> {
            for x in subset::points(b1 & !b2) {
                let base = b1 & !(1 << x);
                if !subset::points(b2 & !b1).any(|y| self.is_basis(base | (1 << y))) {
                    return Err(Error::InvalidMatroid(format!(
                        "exchange fails for {:?}, {:?} at {}",
                        subset::labels(b1),
                        subset::labels(b2),
                        x + 1
                    )));
                }
            }
            Ok(())
        };
        if self.size() <= EXHAUSTIVE_LIMIT {
            for &b1 in &self.bases {
                for &b2 in &self.bases {
                    check(b1, b2)?;
                }
            }
        } else {
            let mut rng = StdRng::seed_from_u64(0x5eed);
            for _ in 0..EXCHANGE_SAMPLES {
                let b1 = self.bases[rng.gen_range(0..self.bases.len())];
                let b2 = self.bases[rng.gen_range(0..self.bases.len())];
                check(b1, b2)?;
            }
        }
        Ok(())
    }
}

/// A Steiner system `S(d, block_size, n)` on points `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SteinerSystem {
    pub d: usize,
    pub block_size: usize,
    pub n: usize,
    pub blocks: Vec<Subset>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SteinerReport {
    pub blocks: usize,
    pub d_subsets: usize,
}

impl SteinerSystem {
    /// Checks that every `d`-subset lies in exactly one block; the error
    /// carries a violating `d`-subset (1-based) and its block count.
    pub fn validate(&self) -> Result<SteinerReport> {
        if self.d == 0 || self.block_size < self.d || self.n > MAX_POINTS || self.block_size > self.n {
            return Err(Error::InvalidParameters(format!(
                "Steiner parameters d={}, block_size={}, n={}",
                self.d, self.block_size, self.n
            )));
        }
        let ground = subset::full(self.n);
        if let Some(b) = self.blocks.iter().find(|&&b| subset::size(b) != self.block_size || b & !ground != 0) {
            return Err(Error::Schema(format!("block {:?} has the wrong size or points", subset::labels(*b))));
        }
        let mut count: HashMap<Subset, usize> = HashMap::new();
        for &b in &self.blocks {
            for s in subset::k_subsets_of(b, self.d) {
                *count.entry(s).or_default() += 1;
            }
        }
        let all = subset::k_subsets_of(ground, self.d);
        for &s in &all {
            let c = count.get(&s).copied().unwrap_or(0);
            if c != 1 {
                return Err(Error::Steiner { witness: subset::labels(s), count: c });
            }
        }
        Ok(SteinerReport { blocks: self.blocks.len(), d_subsets: all.len() })
    }

    /// Paving matroid of rank `d + 1` whose large hyperplanes are the
    /// blocks: bases are the `(d+1)`-subsets inside no block.
    pub fn matroid(&self) -> Result<Matroid> {
        self.validate()?;
        let mut block_of: HashMap<Subset, Subset> = HashMap::new();
        for &b in &self.blocks {
            for s in subset::k_subsets_of(b, self.d) {
                block_of.insert(s, b);
            }
        }
        let ground = subset::full(self.n);
        let bases = subset::k_subsets_of(ground, self.d + 1).into_iter().filter(|&s| {
            let first_d = s & !(1u64 << (63 - s.leading_zeros()));
            block_of[&first_d] & s != s
        });
        Ok(Matroid::from_bases_unchecked(ground, self.d + 1, bases))
    }

    /// Whether every generator maps blocks to blocks.
    pub fn check_preserved(&self, group: &PermGroup) -> Result<()> {
        let blocks: HashSet<Subset> = self.blocks.iter().copied().collect();
        if group.degree() != self.n {
            return Err(Error::NotPreserved(format!("group degree {} differs from n = {}", group.degree(), self.n)));
        }
        for g in group.generators() {
            if let Some(b) = self.blocks.iter().find(|&&b| !blocks.contains(&g.apply_subset(b))) {
                return Err(Error::NotPreserved(format!("{g} moves block {:?} off the system", subset::labels(*b))));
            }
        }
        Ok(())
    }
}

/// Matroid file formats.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum MatroidFile {
    Bases { n: usize, rank: usize, bases: Vec<Vec<usize>> },
    Uniform { k: usize, n: usize },
    Steiner { d: usize, block_size: usize, n: usize, blocks: Vec<Vec<usize>> },
    Vamos,
}

fn labels_to_mask(labels: &[usize], n: usize) -> Result<Subset> {
    if let Some(&l) = labels.iter().find(|&&l| l == 0 || l > n) {
        return Err(Error::Schema(format!("point {l} outside 1..={n}")));
    }
    let mask = subset::from_labels(labels).ok_or_else(|| Error::Schema(format!("bad labels {labels:?}")))?;
    if subset::size(mask) != labels.len() {
        return Err(Error::Schema(format!("repeated point in {labels:?}")));
    }
    Ok(mask)
}

impl MatroidFile {
    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    pub fn steiner(&self) -> Result<Option<SteinerSystem>> {
        match self {
            MatroidFile::Steiner { d, block_size, n, blocks } => {
                if *n > MAX_POINTS {
                    return Err(Error::Schema(format!("n = {n} exceeds {MAX_POINTS}")));
                }
                let blocks = blocks.iter().map(|b| labels_to_mask(b, *n)).collect::<Result<_>>()?;
                Ok(Some(SteinerSystem { d: *d, block_size: *block_size, n: *n, blocks }))
            }
            _ => Ok(None),
        }
    }

    pub fn matroid(&self) -> Result<Matroid> {
        match self {
            MatroidFile::Bases { n, rank, bases } => {
                if *n > MAX_POINTS {
                    return Err(Error::Schema(format!("n = {n} exceeds {MAX_POINTS}")));
                }
                let bases = bases.iter().map(|b| labels_to_mask(b, *n)).collect::<Result<Vec<_>>>()?;
                Matroid::from_bases(subset::full(*n), *rank, bases)
            }
            MatroidFile::Uniform { k, n } => Matroid::uniform(*k, *n),
            MatroidFile::Steiner { .. } => self.steiner()?.expect("steiner variant").matroid(),
            MatroidFile::Vamos => Ok(Matroid::vamos()),
        }
    }
}
