//! Integer partitions and skew shapes.
//!
//! Schur-basis combinatorics for the symmetric groups: Littlewood-Richardson
//! expansion of skew shapes and products, the Pieri and branching rules, the
//! hook-length formula and the Murnaghan-Nakayama rule.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
///
/// Trailing zeros are stripped on construction, so `[3,1,0]` and `[3,1]`
/// are the same partition. Ordering is lexicographic on the parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has an interior zero")));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The one-row partition `[n]`.
    pub fn row(n: u32) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition(vec![n])
        }
    }

    /// The one-column partition `[1^n]`.
    pub fn column(n: u32) -> Self {
        Partition(vec![1; n as usize])
    }

    /// Builds a partition from exponent notation such as `[a, b^i, 1^j]`,
    /// given as `(value, multiplicity)` blocks.
    ///
    /// Returns `None` when the notation does not describe a partition
    /// (a negative value or multiplicity, or a sequence that is not weakly
    /// decreasing); such a shape indexes the zero module.
    pub fn from_blocks(blocks: &[(i64, i64)]) -> Option<Self> {
        let mut parts = Vec::new();
        for &(value, mult) in blocks {
            if mult < 0 {
                return None;
            }
            if mult == 0 {
                continue;
            }
            if value < 0 {
                return None;
            }
            parts.extend(std::iter::repeat_n(value as u32, mult as usize));
        }
        Partition::new(parts).ok()
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part `i`, or zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Whether the Young diagram of `self` fits inside that of `other`.
    pub fn fits_in(&self, other: &Partition) -> bool {
        self.len() <= other.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.part(0) as usize;
        let parts = (0..cols).map(|c| self.0.iter().filter(|&&p| p as usize > c).count() as u32).collect();
        Partition(parts)
    }

    fn from_raw(parts: Vec<u32>) -> Self {
        Partition::new(parts).expect("internal construction keeps parts weakly decreasing")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("partition must be bracketed: {s:?}")))?;
        if inner.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|t| t.trim().parse::<u32>().map_err(|e| Error::Parse(format!("{t:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// Cycle type of a permutation, as a partition of its degree.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CycleType(pub Partition);

impl CycleType {
    pub fn from_cycle_lengths(mut lengths: Vec<u32>) -> Self {
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        CycleType(Partition::from_raw(lengths))
    }

    pub fn degree(&self) -> usize {
        self.0.size()
    }

    /// Number of permutations of this cycle type, `n! / z_mu`.
    pub fn class_size(&self) -> BigUint {
        let n = self.degree();
        let mut z = BigUint::one();
        let mut counts: BTreeMap<u32, u32> = BTreeMap::new();
        for &p in self.0.parts() {
            *counts.entry(p).or_default() += 1;
            z *= p;
        }
        for (_, m) in counts {
            z *= factorial(m as usize);
        }
        factorial(n) / z
    }

    /// Sign of any permutation of this cycle type.
    pub fn sign(&self) -> i64 {
        let odd = self.0.parts().iter().filter(|&&p| p % 2 == 0).count();
        if odd % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Order of any permutation of this cycle type.
    pub fn element_order(&self) -> u64 {
        self.0.parts().iter().fold(1u64, |acc, &p| num_integer::lcm(acc, p as u64))
    }
}

pub(crate) fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

/// All partitions of `n`, in reverse lexicographic order (`[n]` first).
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn rec(rem: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            cur.push(p);
            rec(rem - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n as u32, n as u32, &mut Vec::new(), &mut out);
    out
}

/// A skew shape `outer/inner`.
///
/// When `inner` does not fit inside `outer` the shape is the zero shape: it
/// has no standard tableaux and an empty Littlewood-Richardson expansion.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SkewShape {
    pub outer: Partition,
    pub inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Self {
        SkewShape { outer, inner }
    }

    pub fn straight(outer: Partition) -> Self {
        SkewShape { outer, inner: Partition::empty() }
    }

    pub fn is_valid(&self) -> bool {
        self.inner.fits_in(&self.outer)
    }

    /// Number of boxes; zero for the zero shape.
    pub fn size(&self) -> usize {
        if self.is_valid() {
            self.outer.size() - self.inner.size()
        } else {
            0
        }
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}

impl FromStr for SkewShape {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.split_once('/') {
            Some((o, i)) => Ok(SkewShape::new(o.parse()?, i.parse()?)),
            None => Ok(SkewShape::straight(s.parse()?)),
        }
    }
}

/// Littlewood-Richardson expansion of the skew Schur function of `shape`:
/// the map `nu -> c^{outer}_{inner, nu}` with zero entries omitted.
pub fn lr_expand(shape: &SkewShape) -> BTreeMap<Partition, u64> {
    let mut out = BTreeMap::new();
    if !shape.is_valid() {
        return out;
    }
    let rows = shape.outer.len();
    let outer: Vec<usize> = shape.outer.parts().iter().map(|&p| p as usize).collect();
    let inner: Vec<usize> = (0..rows).map(|r| shape.inner.part(r) as usize).collect();
    let cells: Vec<(usize, usize)> = (0..rows).flat_map(|r| (inner[r]..outer[r]).rev().map(move |c| (r, c))).collect();
    let mut grid: Vec<Vec<u32>> = outer.iter().map(|&w| vec![0; w]).collect();
    let mut content = vec![0u32; rows + 1];

    fn fill(
        idx: usize,
        cells: &[(usize, usize)],
        inner: &[usize],
        outer: &[usize],
        grid: &mut Vec<Vec<u32>>,
        content: &mut Vec<u32>,
        out: &mut BTreeMap<Partition, u64>,
    ) {
        let Some(&(r, c)) = cells.get(idx) else {
            let parts: Vec<u32> = content.iter().skip(1).copied().collect();
            *out.entry(Partition::from_raw(parts)).or_default() += 1;
            return;
        };
        // weakly increasing along rows: bounded by the entry to the right
        let hi = if c + 1 < outer[r] { grid[r][c + 1] } else { (r + 1) as u32 };
        // strictly increasing down columns, when the cell above is in the shape
        let lo = if r > 0 && c >= inner[r - 1] { grid[r - 1][c] + 1 } else { 1 };
        for v in lo..=hi.min((r + 1) as u32) {
            let v_us = v as usize;
            if v > 1 && content[v_us] + 1 > content[v_us - 1] {
                continue;
            }
            content[v_us] += 1;
            grid[r][c] = v;
            fill(idx + 1, cells, inner, outer, grid, content, out);
            content[v_us] -= 1;
        }
        grid[r][c] = 0;
    }

    fill(0, &cells, &inner, &outer, &mut grid, &mut content, &mut out);
    out
}

/// Littlewood-Richardson product: `s_mu * s_nu = sum_lambda c^lambda_{mu,nu} s_lambda`.
pub fn lr_product(mu: &Partition, nu: &Partition) -> BTreeMap<Partition, u64> {
    let mut out = BTreeMap::new();
    // strips[l][r]: number of boxes labelled l+1 added to row r
    let mut strips: Vec<Vec<u32>> = Vec::new();

    fn lattice_ok(strips: &[Vec<u32>], label: usize) -> bool {
        // reading word: rows top to bottom, each row right to left (larger labels first)
        if label == 0 {
            return true;
        }
        let rows = strips[label].len();
        let (mut upper, mut lower) = (0i64, 0i64);
        for r in 0..rows {
            upper += strips[label][r] as i64;
            if upper > lower {
                return false;
            }
            lower += strips[label - 1].get(r).copied().unwrap_or(0) as i64;
        }
        true
    }

    fn rec(
        label: usize,
        shape: Vec<u32>,
        nu: &Partition,
        strips: &mut Vec<Vec<u32>>,
        out: &mut BTreeMap<Partition, u64>,
    ) {
        if label == nu.len() {
            *out.entry(Partition::from_raw(shape)).or_default() += 1;
            return;
        }
        let count = nu.part(label);
        for (next, added) in horizontal_strips(&shape, count) {
            strips.push(added);
            if lattice_ok(strips, label) {
                rec(label + 1, next, nu, strips, out);
            }
            strips.pop();
        }
    }

    rec(0, mu.parts().to_vec(), nu, &mut strips, &mut out);
    out
}

/// All ways to add a horizontal strip of `count` boxes to `shape`, returned
/// as (new shape, boxes added per row).
fn horizontal_strips(shape: &[u32], count: u32) -> Vec<(Vec<u32>, Vec<u32>)> {
    let rows = shape.len() + 1;
    let mut out = Vec::new();
    let mut added = vec![0u32; rows];

    fn rec(r: usize, rem: u32, shape: &[u32], added: &mut Vec<u32>, out: &mut Vec<(Vec<u32>, Vec<u32>)>) {
        let rows = added.len();
        if r == rows {
            if rem == 0 {
                let new: Vec<u32> =
                    (0..rows).map(|i| shape.get(i).copied().unwrap_or(0) + added[i]).filter(|&p| p > 0).collect();
                out.push((new, added.clone()));
            }
            return;
        }
        let cur = shape.get(r).copied().unwrap_or(0);
        let cap = if r == 0 { rem } else { (shape[r - 1] - cur).min(rem) };
        for a in 0..=cap {
            added[r] = a;
            rec(r + 1, rem - a, shape, added, out);
        }
        added[r] = 0;
    }

    rec(0, count, shape, &mut added, &mut out);
    out
}

/// Partitions obtained from `lambda` by adding a horizontal strip of `i` boxes.
pub fn pieri_row(lambda: &Partition, i: u32) -> BTreeSet<Partition> {
    horizontal_strips(lambda.parts(), i).into_iter().map(|(p, _)| Partition::from_raw(p)).collect()
}

/// Partitions obtained from `lambda` by removing one corner box.
pub fn branch_remove_box(lambda: &Partition) -> Result<BTreeSet<Partition>> {
    if lambda.is_empty() {
        return Err(Error::EmptyPartition);
    }
    let parts = lambda.parts();
    Ok((0..parts.len())
        .filter(|&r| r + 1 == parts.len() || parts[r + 1] < parts[r])
        .map(|r| {
            let mut p = parts.to_vec();
            p[r] -= 1;
            Partition::from_raw(p)
        })
        .collect())
}

/// Shapes `outer/mu'` where `mu'` is `inner` plus one addable box that
/// still fits inside `outer`.
pub fn branch_skew_add_inner_box(shape: &SkewShape) -> BTreeSet<SkewShape> {
    if !shape.is_valid() {
        return BTreeSet::new();
    }
    let inner = shape.inner.parts();
    (0..=inner.len())
        .filter(|&r| r == 0 || shape.inner.part(r) < inner[r - 1])
        .filter(|&r| shape.inner.part(r) < shape.outer.part(r))
        .map(|r| {
            let mut p = inner.to_vec();
            if r == p.len() {
                p.push(1);
            } else {
                p[r] += 1;
            }
            SkewShape::new(shape.outer.clone(), Partition::from_raw(p))
        })
        .collect()
}

/// Dimension of the Specht module `V_lambda` by the hook-length formula.
pub fn dim_specht(lambda: &Partition) -> u64 {
    let conj = lambda.conjugate();
    let mut hooks = BigUint::one();
    for (r, &row) in lambda.parts().iter().enumerate() {
        for c in 0..row as usize {
            let arm = row as usize - c - 1;
            let leg = conj.part(c) as usize - r - 1;
            hooks *= (arm + leg + 1) as u64;
        }
    }
    (factorial(lambda.size()) / hooks).to_u64().expect("Specht module dimension fits in u64 for the supported sizes")
}

type MnKey = (Partition, Partition);

fn mn_cache() -> &'static RwLock<HashMap<MnKey, i64>> {
    static CACHE: OnceLock<RwLock<HashMap<MnKey, i64>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Character of the Specht module `V_lambda` at a permutation of cycle
/// type `mu`, by the Murnaghan-Nakayama rule.
pub fn mn_character(lambda: &Partition, mu: &CycleType) -> Result<i64> {
    if lambda.size() != mu.degree() {
        return Err(Error::SizeMismatch { expected: lambda.size(), found: mu.degree() });
    }
    let key = (lambda.clone(), mu.0.clone());
    if let Some(&v) = mn_cache().read().expect("cache lock").get(&key) {
        return Ok(v);
    }
    let len = lambda.len();
    let beta: Vec<usize> = lambda.parts().iter().enumerate().map(|(j, &p)| p as usize + (len - 1 - j)).collect();
    let mut memo = HashMap::new();
    let v = mn_beta(beta, mu.0.parts(), &mut memo);
    mn_cache().write().expect("cache lock").insert(key, v);
    Ok(v)
}

/// Beta-set recursion: removing a rim hook of length `r` moves one bead
/// from position `b` to the empty position `b - r`, with sign given by the
/// parity of the beads jumped over.
fn mn_beta(beta: Vec<usize>, cycles: &[u32], memo: &mut HashMap<(Vec<usize>, usize), i64>) -> i64 {
    let Some((&r, rest)) = cycles.split_first() else {
        return 1;
    };
    let key = (beta, cycles.len());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let beta = &key.0;
    let r = r as usize;
    let mut total = 0i64;
    for (i, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let target = b - r;
        let jumped = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut next: Vec<usize> = beta.clone();
        next[i] = target;
        next.sort_unstable_by(|a, b| b.cmp(a));
        let sign = if jumped % 2 == 0 { 1 } else { -1 };
        total += sign * mn_beta(next, rest, memo);
    }
    memo.insert(key, total);
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn ct(parts: &[u32]) -> CycleType {
        CycleType::from_cycle_lengths(parts.to_vec())
    }

    #[test]
    fn canonical_construction() {
        assert_eq!(p(&[3, 1, 0, 0]), p(&[3, 1]));
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!(p(&[5, 3, 1]).size(), 9);
        assert_eq!(Partition::empty().size(), 0);
    }

    #[test]
    fn exponent_notation() {
        assert_eq!(Partition::from_blocks(&[(4, 1), (2, 2), (1, 3)]), Some(p(&[4, 2, 2, 1, 1, 1])));
        // [1, 2^1, 1^1] is not weakly decreasing
        assert_eq!(Partition::from_blocks(&[(1, 1), (2, 1), (1, 1)]), None);
        assert_eq!(Partition::from_blocks(&[(3, 1), (2, -1)]), None);
        assert_eq!(Partition::from_blocks(&[(3, 1), (0, 2)]), Some(p(&[3])));
    }

    #[test]
    fn text_form() {
        assert_eq!(p(&[5, 3, 1]).to_string(), "[5,3,1]");
        assert_eq!("[5,3,1]".parse::<Partition>().unwrap(), p(&[5, 3, 1]));
        let s: SkewShape = "[5,3,1]/[2,1]".parse().unwrap();
        assert_eq!(s.to_string(), "[5,3,1]/[2,1]");
        assert_eq!(s.size(), 6);
        assert!("5,3".parse::<Partition>().is_err());
    }

    #[test]
    fn lr_expand_examples() {
        let e = lr_expand(&SkewShape::new(p(&[3, 3]), p(&[2])));
        assert_eq!(e, BTreeMap::from([(p(&[3, 1]), 1)]));
        let e = lr_expand(&SkewShape::straight(p(&[4, 2, 1])));
        assert_eq!(e, BTreeMap::from([(p(&[4, 2, 1]), 1)]));
        let e = lr_expand(&SkewShape::new(p(&[2, 1]), p(&[1])));
        assert_eq!(e, BTreeMap::from([(p(&[2]), 1), (p(&[1, 1]), 1)]));
        // inner not contained in outer
        assert!(lr_expand(&SkewShape::new(p(&[2]), p(&[1, 1]))).is_empty());
    }

    #[test]
    fn lr_product_small() {
        // s_1 * s_1 = s_2 + s_11
        let e = lr_product(&p(&[1]), &p(&[1]));
        assert_eq!(e, BTreeMap::from([(p(&[2]), 1), (p(&[1, 1]), 1)]));
        // s_21 * s_21 contains s_321 with coefficient 2
        assert_eq!(lr_product(&p(&[2, 1]), &p(&[2, 1]))[&p(&[3, 2, 1])], 2);
    }

    #[test]
    fn pieri_examples() {
        let got = pieri_row(&p(&[2, 2]), 2);
        let want: BTreeSet<_> = [p(&[4, 2]), p(&[3, 2, 1]), p(&[2, 2, 2])].into();
        assert_eq!(got, want);
        assert_eq!(pieri_row(&p(&[3, 1]), 0), BTreeSet::from([p(&[3, 1])]));
        let got = pieri_row(&p(&[3, 1]), 2);
        let want: BTreeSet<_> = [p(&[5, 1]), p(&[4, 2]), p(&[4, 1, 1]), p(&[3, 3]), p(&[3, 2, 1])].into();
        assert_eq!(got, want);
        assert_eq!(pieri_row(&Partition::empty(), 3), BTreeSet::from([p(&[3])]));
    }

    #[test]
    fn branching_examples() {
        assert_eq!(branch_remove_box(&p(&[2, 1])).unwrap(), BTreeSet::from([p(&[2]), p(&[1, 1])]));
        assert_eq!(branch_remove_box(&p(&[6])).unwrap(), BTreeSet::from([p(&[5])]));
        assert_eq!(branch_remove_box(&p(&[2, 2])).unwrap(), BTreeSet::from([p(&[2, 1])]));
        assert!(matches!(branch_remove_box(&Partition::empty()), Err(Error::EmptyPartition)));

        let s = |o: &[u32], i: &[u32]| SkewShape::new(p(o), p(i));
        assert_eq!(
            branch_skew_add_inner_box(&s(&[3, 3], &[1])),
            BTreeSet::from([s(&[3, 3], &[2]), s(&[3, 3], &[1, 1])])
        );
        assert_eq!(branch_skew_add_inner_box(&s(&[3, 3], &[3])), BTreeSet::from([s(&[3, 3], &[3, 1])]));
        assert_eq!(branch_skew_add_inner_box(&s(&[4, 2], &[])), BTreeSet::from([s(&[4, 2], &[1])]));
    }

    #[test]
    fn specht_dimensions() {
        assert_eq!(dim_specht(&p(&[7])), 1);
        assert_eq!(dim_specht(&p(&[2, 1])), 2);
        assert_eq!(dim_specht(&p(&[5, 3])), 28);
        assert_eq!(dim_specht(&Partition::empty()), 1);
    }

    #[test]
    fn murnaghan_nakayama_examples() {
        for n in 1..=6u32 {
            for mu in partitions_of(n as usize) {
                let mu = CycleType(mu);
                assert_eq!(mn_character(&Partition::column(n), &mu).unwrap(), mu.sign());
                assert_eq!(mn_character(&Partition::row(n), &mu).unwrap(), 1);
            }
        }
        assert_eq!(mn_character(&p(&[2, 1]), &ct(&[3])).unwrap(), -1);
        assert_eq!(mn_character(&p(&[2, 1]), &ct(&[2, 1])).unwrap(), 0);
        assert_eq!(mn_character(&p(&[5, 3]), &ct(&[1; 8])).unwrap(), 28);
        assert!(mn_character(&p(&[2, 1]), &ct(&[2])).is_err());
    }

    #[test]
    fn cycle_type_data() {
        assert_eq!(ct(&[2, 1]).class_size(), BigUint::from(3u32));
        assert_eq!(ct(&[3]).class_size(), BigUint::from(2u32));
        assert_eq!(ct(&[4, 2]).element_order(), 4);
        assert_eq!(ct(&[2, 2, 1]).sign(), 1);
        assert_eq!(partitions_of(5).len(), 7);
        assert_eq!(partitions_of(5)[0], p(&[5]));
    }
}
