use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::sync::Arc;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groups::table::ClassList;
use crate::partitions::CycleType;
use crate::subset::{self, Subset};

/// Default cap on the number of elements a group may be enumerated to.
pub const DEFAULT_ENUM_BOUND: usize = 10_000_000;

/// A permutation of the points `0..n`, written 1-based in text.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n as u8).collect() }
    }

    /// From a 0-based image list; fails unless it is a bijection.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        if n > 255 {
            return Err(Error::Parse(format!("degree {n} is too large")));
        }
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || std::mem::replace(&mut seen[i], true) {
                return Err(Error::Parse(format!("{images:?} is not a bijection")));
            }
        }
        Ok(Permutation { images: images.into_iter().map(|i| i as u8).collect() })
    }

    /// Parses 1-based disjoint cycle notation such as `(1,2)(3,4)`;
    /// the identity is `()`.
    pub fn parse_cycles(s: &str, degree: usize) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut seen = vec![false; degree];
        let s = s.trim();
        let mut rest = s;
        while !rest.is_empty() {
            let body_end = rest
                .find(')')
                .filter(|_| rest.starts_with('('))
                .ok_or_else(|| Error::Parse(format!("malformed cycle string {s:?}")))?;
            let body = &rest[1..body_end];
            rest = rest[body_end + 1..].trim_start();
            if body.trim().is_empty() {
                continue;
            }
            let cycle = body
                .split(',')
                .map(|t| {
                    let p: usize = t.trim().parse().map_err(|e| Error::Parse(format!("{t:?}: {e}")))?;
                    if p == 0 || p > degree {
                        return Err(Error::Parse(format!("point {p} outside 1..={degree}")));
                    }
                    Ok(p - 1)
                })
                .collect::<Result<Vec<_>>>()?;
            for (i, &p) in cycle.iter().enumerate() {
                if std::mem::replace(&mut seen[p], true) {
                    return Err(Error::Parse(format!("point {} repeated in {s:?}", p + 1)));
                }
                images[p] = cycle[(i + 1) % cycle.len()];
            }
        }
        Self::from_images(images)
    }

    /// Largest point mentioned in a cycle string (1-based), or 0.
    pub fn max_label(s: &str) -> usize {
        s.split(|c: char| !c.is_ascii_digit()).filter_map(|t| t.parse::<usize>().ok()).max().unwrap_or(0)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn images(&self) -> impl Iterator<Item = usize> + '_ {
        self.images.iter().map(|&i| i as usize)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation { images: other.images.iter().map(|&i| self.images[i as usize]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j as usize] = i as u8;
        }
        Permutation { images: inv }
    }

    /// `x⁻¹ ∘ self ∘ x`.
    pub fn conjugate_by(&self, x: &Permutation) -> Permutation {
        x.inverse().compose(self).compose(x)
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j as usize)
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut p = self.apply(start);
            while p != start {
                seen[p] = true;
                cycle.push(p);
                p = self.apply(p);
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_type(&self) -> CycleType {
        CycleType::from_cycle_lengths(self.cycles().iter().map(|c| c.len() as u32).collect())
    }

    /// Cycle type of the permutation induced on `mask`, which it must
    /// stabilize setwise.
    pub fn cycle_type_on(&self, mask: Subset) -> CycleType {
        debug_assert_eq!(self.apply_subset(mask), mask);
        let mut seen: Subset = 0;
        let mut lengths = Vec::new();
        for start in subset::points(mask) {
            if seen & (1 << start) != 0 {
                continue;
            }
            let mut len = 0;
            let mut p = start;
            loop {
                seen |= 1 << p;
                len += 1;
                p = self.apply(p);
                if p == start {
                    break;
                }
            }
            lengths.push(len);
        }
        CycleType::from_cycle_lengths(lengths)
    }

    pub fn order(&self) -> u64 {
        self.cycle_type().element_order()
    }

    pub fn apply_subset(&self, mask: Subset) -> Subset {
        subset::points(mask).fold(0, |m, p| m | (1u64 << self.apply(p)))
    }

    /// The permutation induced on the sorted points of `mask`, relabelled
    /// `0..|mask|`; fails unless `mask` is stabilized.
    pub fn restrict_to(&self, mask: Subset) -> Result<Permutation> {
        if self.apply_subset(mask) != mask {
            return Err(Error::NotPreserved(format!("{self} does not stabilize {:?}", subset::labels(mask))));
        }
        let pts: Vec<usize> = subset::points(mask).collect();
        let pos: HashMap<usize, usize> = pts.iter().enumerate().map(|(i, &p)| (p, i)).collect();
        Self::from_images(pts.iter().map(|&p| pos[&self.apply(p)]).collect())
    }

    /// Extends to a larger degree, fixing the new points.
    pub fn extend(&self, degree: usize) -> Permutation {
        let mut images = self.images.clone();
        images.extend(self.degree() as u8..degree as u8);
        Permutation { images }
    }

    /// Moves point `i` to `map[i]`; the result has degree `degree`.
    pub fn relabel(&self, map: &[usize], degree: usize) -> Result<Permutation> {
        let mut images: Vec<usize> = (0..degree).collect();
        for i in 0..self.degree() {
            images[map[i]] = map[self.apply(i)];
        }
        Self::from_images(images)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles: Vec<_> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let body: Vec<String> = c.iter().map(|p| (p + 1).to_string()).collect();
            write!(f, "({})", body.join(","))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A permutation group given by generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
}

#[derive(Serialize, Deserialize)]
struct GroupFile {
    degree: usize,
    generators: Vec<String>,
}

impl PermGroup {
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(Error::Parse(format!("generator {g} has degree {}, expected {degree}", g.degree())));
        }
        Ok(PermGroup { degree, generators })
    }

    pub fn trivial(degree: usize) -> Self {
        PermGroup { degree, generators: Vec::new() }
    }

    /// The full symmetric group on `degree` points.
    pub fn symmetric(degree: usize) -> Self {
        let mut generators = Vec::new();
        if degree >= 2 {
            let mut swap: Vec<usize> = (0..degree).collect();
            swap.swap(0, 1);
            generators.push(Permutation::from_images(swap).expect("transposition"));
        }
        if degree >= 3 {
            let cycle: Vec<usize> = (0..degree).map(|i| (i + 1) % degree).collect();
            generators.push(Permutation::from_images(cycle).expect("cycle"));
        }
        PermGroup { degree, generators }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: GroupFile = serde_json::from_str(text)?;
        let gens = file.generators.iter().map(|g| Permutation::parse_cycles(g, file.degree)).collect::<Result<_>>()?;
        Self::new(file.degree, gens)
    }

    pub fn load(path: impl AsRef<std::path::Path>) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    pub fn to_json(&self) -> String {
        let file =
            GroupFile { degree: self.degree, generators: self.generators.iter().map(|g| g.to_string()).collect() };
        serde_json::to_string(&file).expect("group file serializes")
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// Every element exactly once, in breadth-first order from the identity.
    pub fn enumerate(&self, bound: usize) -> Result<Vec<Permutation>> {
        let id = Permutation::identity(self.degree);
        let mut seen: HashSet<Permutation> = HashSet::from([id.clone()]);
        let mut out = vec![id];
        let mut i = 0;
        while i < out.len() {
            for g in &self.generators {
                let next = g.compose(&out[i]);
                if !seen.contains(&next) {
                    if out.len() >= bound {
                        return Err(Error::BoundExceeded { bound });
                    }
                    seen.insert(next.clone());
                    out.push(next);
                }
            }
            i += 1;
        }
        Ok(out)
    }

    pub fn order(&self, bound: usize) -> Result<usize> {
        Ok(self.enumerate(bound)?.len())
    }

    /// A base and strong generating set, for the exact order and membership
    /// of groups too large to enumerate.
    pub fn stab_chain(&self) -> StabChain {
        StabChain::new(self)
    }

    /// Orbit of a subset, each member paired with an element mapping the
    /// seed onto it.
    pub fn orbit_transversal(&self, seed: Subset) -> Vec<(Subset, Permutation)> {
        let mut index: HashMap<Subset, usize> = HashMap::from([(seed, 0)]);
        let mut out = vec![(seed, Permutation::identity(self.degree))];
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for g in &self.generators {
                let image = g.apply_subset(out[i].0);
                if let std::collections::hash_map::Entry::Vacant(e) = index.entry(image) {
                    e.insert(out.len());
                    let witness = g.compose(&out[i].1);
                    out.push((image, witness));
                    queue.push_back(out.len() - 1);
                }
            }
        }
        out
    }

    /// Setwise stabilizer of `seed`, generated by Schreier generators.
    pub fn stabilizer(&self, seed: Subset) -> PermGroup {
        let orbit = self.orbit_transversal(seed);
        let index: HashMap<Subset, usize> = orbit.iter().enumerate().map(|(i, (s, _))| (*s, i)).collect();
        let mut gens: Vec<Permutation> = Vec::new();
        let mut seen = HashSet::new();
        for (set, witness) in &orbit {
            for g in &self.generators {
                let image = g.apply_subset(*set);
                let back = orbit[index[&image]].1.inverse();
                let schreier = back.compose(g).compose(witness);
                if !schreier.is_identity() && seen.insert(schreier.clone()) {
                    gens.push(schreier);
                }
            }
        }
        gens.sort();
        PermGroup { degree: self.degree, generators: gens }
    }

    /// Conjugacy classes as (representative, size), ordered by first
    /// appearance in [`PermGroup::enumerate`].
    pub fn conjugacy_classes(&self, bound: usize) -> Result<Vec<(Permutation, usize)>> {
        let group = EnumeratedGroup::new(self, bound)?;
        Ok(group.class_reps())
    }

    /// Size of the conjugacy class of `g`, by closing under conjugation by
    /// the generators.
    pub fn class_size_of(&self, g: &Permutation, bound: usize) -> Result<usize> {
        let mut seen: HashSet<Permutation> = HashSet::from([g.clone()]);
        let mut queue = VecDeque::from([g.clone()]);
        while let Some(x) = queue.pop_front() {
            for s in &self.generators {
                let y = s.compose(&x).compose(&s.inverse());
                if seen.insert(y.clone()) {
                    if seen.len() > bound {
                        return Err(Error::BoundExceeded { bound });
                    }
                    queue.push_back(y);
                }
            }
        }
        Ok(seen.len())
    }
}

/// A base and strong generating set, built by deterministic
/// Schreier-Sims.
#[derive(Clone, Debug)]
pub struct StabChain {
    degree: usize,
    base: Vec<usize>,
    strong: Vec<Permutation>,
    transversals: Vec<HashMap<usize, Permutation>>,
}

impl StabChain {
    pub fn new(group: &PermGroup) -> Self {
        let mut chain =
            StabChain { degree: group.degree, base: Vec::new(), strong: Vec::new(), transversals: Vec::new() };
        for g in group.generators.iter().filter(|g| !g.is_identity()) {
            if chain.base.iter().all(|&b| g.apply(b) == b) {
                chain.base.push(first_moved(g));
            }
            chain.strong.push(g.clone());
        }
        chain.rebuild();
        let mut level = chain.base.len();
        while level > 0 {
            let l = level - 1;
            match chain.failing_schreier_generator(l) {
                Some((h, drop)) => {
                    if drop == chain.base.len() {
                        chain.base.push(first_moved(&h));
                    }
                    chain.strong.push(h);
                    chain.rebuild();
                    level = drop + 1;
                }
                None => level -= 1,
            }
        }
        chain
    }

    fn rebuild(&mut self) {
        self.transversals = (0..self.base.len()).map(|l| self.transversal(l)).collect();
    }

    fn level_generators(&self, l: usize) -> impl Iterator<Item = &Permutation> {
        self.strong.iter().filter(move |g| self.base[..l].iter().all(|&b| g.apply(b) == b))
    }

    /// `u[p]` maps the `l`-th base point to `p`.
    fn transversal(&self, l: usize) -> HashMap<usize, Permutation> {
        let b = self.base[l];
        let gens: Vec<&Permutation> = self.level_generators(l).collect();
        let mut out = HashMap::from([(b, Permutation::identity(self.degree))]);
        let mut queue = VecDeque::from([b]);
        while let Some(p) = queue.pop_front() {
            for g in &gens {
                let q = g.apply(p);
                if !out.contains_key(&q) {
                    let u = g.compose(&out[&p]);
                    out.insert(q, u);
                    queue.push_back(q);
                }
            }
        }
        out
    }

    /// Sifts `g` through levels `from..`; returns the residue and the
    /// level it stopped at (`base.len()` if it passed every level).
    fn sift(&self, mut g: Permutation, from: usize) -> (Permutation, usize) {
        for l in from..self.base.len() {
            match self.transversals[l].get(&g.apply(self.base[l])) {
                Some(u) => g = u.inverse().compose(&g),
                None => return (g, l),
            }
        }
        (g, self.base.len())
    }

    fn failing_schreier_generator(&self, l: usize) -> Option<(Permutation, usize)> {
        let gens: Vec<&Permutation> = self.level_generators(l).collect();
        let trans = &self.transversals[l];
        let mut points: Vec<&usize> = trans.keys().collect();
        points.sort();
        for p in points {
            for s in &gens {
                let schreier = trans[&s.apply(*p)].inverse().compose(s).compose(&trans[p]);
                let (h, drop) = self.sift(schreier, l + 1);
                if drop < self.base.len() || !h.is_identity() {
                    return Some((h, drop));
                }
            }
        }
        None
    }

    pub fn base(&self) -> &[usize] {
        &self.base
    }

    pub fn order(&self) -> BigUint {
        self.transversals.iter().map(|t| BigUint::from(t.len())).product()
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let (h, drop) = self.sift(g.clone(), 0);
        drop == self.base.len() && h.is_identity()
    }
}

fn first_moved(g: &Permutation) -> usize {
    (0..g.degree()).find(|&p| g.apply(p) != p).expect("non-identity permutation")
}

/// A fully enumerated finite group with its conjugacy classes.
#[derive(Debug)]
pub struct EnumeratedGroup {
    degree: usize,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    class_of: Vec<usize>,
    classes: Arc<ClassList>,
}

impl EnumeratedGroup {
    pub fn new(group: &PermGroup, bound: usize) -> Result<Self> {
        let elements = group.enumerate(bound)?;
        Ok(Self::from_elements(group.degree, elements))
    }

    /// From the full element list of a group (closed under products);
    /// the identity must come first.
    pub fn from_elements(degree: usize, elements: Vec<Permutation>) -> Self {
        debug_assert!(elements[0].is_identity());
        let index: HashMap<Permutation, usize> = elements.iter().enumerate().map(|(i, g)| (g.clone(), i)).collect();
        let mut class_of = vec![usize::MAX; elements.len()];
        let mut reps = Vec::new();
        let mut sizes = Vec::new();
        let inverses: Vec<Permutation> = elements.iter().map(Permutation::inverse).collect();
        for i in 0..elements.len() {
            if class_of[i] != usize::MAX {
                continue;
            }
            let c = reps.len();
            let mut size = 0;
            for (x, xinv) in elements.iter().zip(&inverses) {
                let y = index[&x.compose(&elements[i]).compose(xinv)];
                if class_of[y] == usize::MAX {
                    class_of[y] = c;
                    size += 1;
                }
            }
            reps.push(elements[i].clone());
            sizes.push(size as u64);
        }
        let classes = ClassList::from_representatives(elements.len() as u64, reps, sizes);
        EnumeratedGroup { degree, elements, index, class_of, classes: Arc::new(classes) }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn classes(&self) -> &Arc<ClassList> {
        &self.classes
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        self.index.contains_key(g)
    }

    /// Class index of an element of the group.
    pub fn class_of(&self, g: &Permutation) -> Option<usize> {
        self.index.get(g).map(|&i| self.class_of[i])
    }

    pub fn class_of_index(&self, i: usize) -> usize {
        self.class_of[i]
    }

    pub fn class_reps(&self) -> Vec<(Permutation, usize)> {
        (0..self.classes.len())
            .map(|c| {
                (self.classes.rep(c).expect("enumerated classes carry reps").clone(), self.classes.size(c) as usize)
            })
            .collect()
    }

    /// Elements stabilizing `mask` setwise, as a group.
    pub fn subset_stabilizer(&self, mask: Subset) -> EnumeratedGroup {
        let elements = self.elements.iter().filter(|g| g.apply_subset(mask) == mask).cloned().collect();
        EnumeratedGroup::from_elements(self.degree, elements)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str, n: usize) -> Permutation {
        Permutation::parse_cycles(s, n).unwrap()
    }

    fn vamos_w() -> PermGroup {
        let gens = ["(1,2)", "(1,7)(2,8)", "(3,4)", "(3,5)(4,6)"].iter().map(|s| perm(s, 8)).collect();
        PermGroup::new(8, gens).unwrap()
    }

    #[test]
    fn stabilizer_chain_orders() {
        for n in 1..=9 {
            let expected: usize = (1..=n).product();
            assert_eq!(PermGroup::symmetric(n).stab_chain().order(), BigUint::from(expected));
        }
        let w = vamos_w();
        let chain = w.stab_chain();
        assert_eq!(chain.order(), BigUint::from(64u32));
        for g in w.enumerate(100).unwrap() {
            assert!(chain.contains(&g));
        }
        assert!(!chain.contains(&perm("(1,3)", 8)));
        assert_eq!(PermGroup::trivial(5).stab_chain().order(), BigUint::from(1u32));
        let cyclic = PermGroup::new(12, vec![perm("(1,2,3,4,5,6,7,8,9,10,11,12)", 12)]).unwrap();
        assert_eq!(cyclic.stab_chain().order(), BigUint::from(12u32));
    }

    #[test]
    fn cycle_notation_round_trip() {
        let p = perm("(1,2)(3,4,5)", 6);
        assert_eq!(p.to_string(), "(1,2)(3,4,5)");
        assert_eq!(perm("()", 4).to_string(), "()");
        assert!(Permutation::parse_cycles("(1,2", 3).is_err());
        assert!(Permutation::parse_cycles("(1,7)", 3).is_err());
        assert!(Permutation::parse_cycles("(1,2)(2,3)", 3).is_err());
        assert_eq!(p.order(), 6);
        assert_eq!(p.compose(&p.inverse()), Permutation::identity(6));
    }

    #[test]
    fn composition_applies_right_factor_first() {
        let a = perm("(1,2)", 3);
        let b = perm("(2,3)", 3);
        // (a∘b)(2) = a(3) = 3
        assert_eq!(a.compose(&b).apply(1), 2);
    }

    #[test]
    fn enumerate_examples() {
        let g = PermGroup::new(2, vec![perm("(1,2)", 2)]).unwrap();
        assert_eq!(g.enumerate(DEFAULT_ENUM_BOUND).unwrap().len(), 2);
        assert_eq!(vamos_w().order(DEFAULT_ENUM_BOUND).unwrap(), 64);
        assert_eq!(PermGroup::symmetric(5).order(DEFAULT_ENUM_BOUND).unwrap(), 120);
        assert!(matches!(PermGroup::symmetric(6).enumerate(100), Err(Error::BoundExceeded { bound: 100 })));
    }

    #[test]
    fn vamos_orbits_and_stabilizers() {
        let w = vamos_w();
        let h = subset::from_labels(&[1, 2, 3, 4]).unwrap();
        let orbit = w.orbit_transversal(h);
        let mut sets: Vec<Vec<usize>> = orbit.iter().map(|(s, _)| subset::labels(*s)).collect();
        sets.sort();
        assert_eq!(sets, vec![vec![1, 2, 3, 4], vec![1, 2, 5, 6], vec![3, 4, 7, 8], vec![5, 6, 7, 8]]);
        for (s, x) in &orbit {
            assert_eq!(x.apply_subset(h), *s);
        }
        let fixed = subset::from_labels(&[3, 4, 5, 6]).unwrap();
        assert_eq!(w.orbit_transversal(fixed).len(), 1);

        let stab = w.stabilizer(h);
        let elems: HashSet<_> = stab.enumerate(DEFAULT_ENUM_BOUND).unwrap().into_iter().collect();
        let want_gens = ["(1,2)", "(3,4)", "(5,6)", "(7,8)"].iter().map(|s| perm(s, 8)).collect();
        let want: HashSet<_> =
            PermGroup::new(8, want_gens).unwrap().enumerate(DEFAULT_ENUM_BOUND).unwrap().into_iter().collect();
        assert_eq!(elems, want);
        assert_eq!(elems.len(), 16);
    }

    #[test]
    fn stabilizer_edge_cases() {
        let s3 = PermGroup::symmetric(3);
        let full = subset::full(3);
        assert_eq!(s3.stabilizer(full).order(100).unwrap(), 6);
        let st = s3.stabilizer(subset::from_points([0]));
        let elems = st.enumerate(100).unwrap();
        assert_eq!(elems.len(), 2);
        assert!(elems.contains(&perm("(2,3)", 3)));
    }

    #[test]
    fn conjugacy_class_examples() {
        let cls = PermGroup::symmetric(3).conjugacy_classes(100).unwrap();
        let mut sizes: Vec<usize> = cls.iter().map(|c| c.1).collect();
        assert_eq!(sizes[0], 1);
        sizes.sort();
        assert_eq!(sizes, vec![1, 2, 3]);
        assert_eq!(vamos_w().conjugacy_classes(100).unwrap().len(), 25);
    }

    #[test]
    fn restriction_to_subset() {
        let g = perm("(1,5)(2,3)", 6);
        let mask = subset::from_labels(&[2, 3]).unwrap();
        assert_eq!(g.restrict_to(mask).unwrap(), perm("(1,2)", 2));
        assert!(g.restrict_to(subset::from_labels(&[1, 2]).unwrap()).is_err());
        assert_eq!(g.cycle_type_on(subset::from_labels(&[1, 5, 4]).unwrap()).0.parts(), &[2, 1]);
    }
}
