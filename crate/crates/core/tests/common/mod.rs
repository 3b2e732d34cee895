#![allow(dead_code)]

use std::collections::HashMap;
use std::path::PathBuf;
use std::sync::Arc;

use eqkl::equivariant::{symmetric_restriction, EquivPoly};
use eqkl::groups::ClassList;
use eqkl::matroid::Matroid;
use eqkl::subset;
use eqkl::symrep::SymmPoly;

pub fn asset(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../assets").join(name)
}

/// A closed form sampled on `classes`, acting on `m`'s ground set.
pub fn restrict(poly: &SymmPoly, classes: &Arc<ClassList>, m: &Matroid) -> EquivPoly {
    symmetric_restriction(poly, classes, m.ground()).unwrap()
}

/// Non-equivariant `P` and `Z` from the lattice of flats, using the
/// characteristic-polynomial recursion
/// `t^rk P(1/t) = Σ_F χ(M|F) P(M/F)` over all flats `F`.
pub struct FlatLattice {
    flats: Vec<u64>,
    ranks: Vec<usize>,
    mobius: HashMap<(usize, usize), i64>,
    p_memo: HashMap<usize, Vec<i64>>,
}

fn rank_of(bases: &[u64], s: u64) -> usize {
    bases.iter().map(|b| (b & s).count_ones() as usize).max().unwrap_or(0)
}

impl FlatLattice {
    pub fn new(m: &Matroid) -> Self {
        let bases = m.bases().to_vec();
        let ground = m.ground();
        let mut flats = Vec::new();
        for s in subset::subsets_of(ground) {
            let r = rank_of(&bases, s);
            let closed = subset::points(ground & !s).all(|e| rank_of(&bases, s | (1 << e)) > r);
            if closed {
                flats.push(s);
            }
        }
        flats.sort_by_key(|f| (f.count_ones(), *f));
        let ranks = flats.iter().map(|&f| rank_of(&bases, f)).collect();
        let mut lattice = FlatLattice { flats, ranks, mobius: HashMap::new(), p_memo: HashMap::new() };
        let n = lattice.flats.len();
        for a in 0..n {
            for b in a..n {
                if lattice.leq(a, b) {
                    let value = if a == b {
                        1
                    } else {
                        -(a..b)
                            .filter(|&c| lattice.leq(a, c) && lattice.leq(c, b))
                            .map(|c| lattice.mobius[&(a, c)])
                            .sum::<i64>()
                    };
                    lattice.mobius.insert((a, b), value);
                }
            }
        }
        lattice
    }

    fn leq(&self, a: usize, b: usize) -> bool {
        self.flats[a] & !self.flats[b] == 0
    }

    fn top(&self) -> usize {
        self.flats.len() - 1
    }

    /// `χ` of the interval `[a, b]`, low degree first.
    fn chi(&self, a: usize, b: usize) -> Vec<i64> {
        let mut out = vec![0; self.ranks[b] - self.ranks[a] + 1];
        for c in a..=b {
            if self.leq(a, c) && self.leq(c, b) {
                out[self.ranks[b] - self.ranks[c]] += self.mobius[&(a, c)];
            }
        }
        out
    }

    /// `P` of the contraction by flat `a`.
    fn p_from(&mut self, a: usize) -> Vec<i64> {
        if let Some(p) = self.p_memo.get(&a) {
            return p.clone();
        }
        let top = self.top();
        let k = self.ranks[top] - self.ranks[a];
        let mut rhs = vec![0i64; k + 1];
        for f in a + 1..self.flats.len() {
            if !self.leq(a, f) {
                continue;
            }
            let chi = self.chi(a, f);
            let p = self.p_from(f);
            for (i, x) in chi.iter().enumerate() {
                for (j, y) in p.iter().enumerate() {
                    rhs[i + j] += x * y;
                }
            }
        }
        // t^k P(1/t) - P(t) = rhs, with deg P < k/2
        let mut p = vec![0i64; k.div_ceil(2).max(1)];
        if k == 0 {
            p[0] = 1;
        } else {
            for (i, slot) in p.iter_mut().enumerate().take(k.div_ceil(2)) {
                *slot = -rhs[i];
            }
        }
        while p.len() > 1 && p.last() == Some(&0) {
            p.pop();
        }
        self.p_memo.insert(a, p.clone());
        p
    }

    pub fn p(&mut self) -> Vec<i64> {
        self.p_from(0)
    }

    pub fn z(&mut self) -> Vec<i64> {
        let k = self.ranks[self.top()];
        let mut z = vec![0i64; k + 1];
        for f in 0..self.flats.len() {
            let shift = self.ranks[f] - self.ranks[0];
            for (j, c) in self.p_from(f).iter().enumerate() {
                z[shift + j] += c;
            }
        }
        while z.len() > 1 && z.last() == Some(&0) {
            z.pop();
        }
        z
    }

    pub fn flat_count(&self) -> usize {
        self.flats.len()
    }
}

/// Dimensions of a result, with the zero polynomial as `[0]`.
pub fn dims(poly: &EquivPoly) -> Vec<i64> {
    let d = poly.dims();
    if d.is_empty() {
        vec![0]
    } else {
        d
    }
}

/// Small matroids on at most `8` points.
pub fn sample_matroids() -> Vec<(String, Matroid)> {
    let mut out = vec![("vamos".to_string(), Matroid::vamos())];
    for (k, n) in [(2, 4), (3, 5), (3, 6), (4, 7), (2, 5)] {
        out.push((format!("U{k},{n}"), Matroid::uniform(k, n).unwrap()));
    }
    let b = Matroid::boolean(2).unwrap();
    let u = Matroid::uniform(1, 2).unwrap();
    out.push(("U1,2+B2".into(), u.direct_sum(&b).unwrap()));
    out.push(("U1,2+U1,2".into(), u.direct_sum(&u).unwrap()));
    out.push(("U2,3+U1,2".into(), Matroid::uniform(2, 3).unwrap().direct_sum(&u).unwrap()));
    out
}
