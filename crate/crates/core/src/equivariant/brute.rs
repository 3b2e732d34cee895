use std::collections::HashMap;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::{Arc, Mutex};

use rayon::prelude::*;

use crate::equivariant::{EquivPoly, Which};
use crate::error::{Error, Result};
use crate::groups::{EnumeratedGroup, PermGroup, Permutation, DEFAULT_ENUM_BOUND};
use crate::matroid::Matroid;
use crate::subset::{self, Subset};
use crate::symrep::{palindromic_completion, Additive};

/// Largest ground set the subset recursion accepts.
pub const MAX_BRUTE_POINTS: usize = 16;

#[derive(Clone, Copy, Debug)]
pub struct BruteOptions {
    pub bound: usize,
    /// Sum only over flats; the other subsets contribute zero.
    pub flats_only: bool,
}

impl Default for BruteOptions {
    fn default() -> Self {
        BruteOptions { bound: DEFAULT_ENUM_BOUND, flats_only: true }
    }
}

/// `rows[i][c]`: coefficient of `t^i` at class `c`.
type Rows = Vec<Vec<i64>>;

#[derive(Clone)]
struct Row(Vec<i64>);

impl Additive for Row {
    fn zero_like(&self) -> Self {
        Row(vec![0; self.0.len()])
    }
    fn is_zero(&self) -> bool {
        self.0.iter().all(|&v| v == 0)
    }
    fn plus(&self, other: &Self) -> Self {
        Row(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
    fn minus(&self, other: &Self) -> Self {
        Row(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }
}

fn trim(rows: &mut Rows) {
    while rows.last().is_some_and(|r| r.iter().all(|&v| v == 0)) {
        rows.pop();
    }
}

fn accumulate(acc: &mut Rows, term: &Rows, shift: usize, sign: i64) {
    for (i, row) in term.iter().enumerate() {
        while acc.len() <= i + shift {
            acc.push(vec![0; row.len()]);
        }
        for (a, v) in acc[i + shift].iter_mut().zip(row) {
            *a += sign * v;
        }
    }
}

/// Acts as `w` on `mask` and fixes every other point.
fn image_on(w: &Permutation, mask: Subset) -> Permutation {
    let images = (0..w.degree()).map(|p| if mask >> p & 1 == 1 { w.apply(p) } else { p }).collect();
    Permutation::from_images(images).expect("w stabilizes mask")
}

struct Interned {
    id: usize,
    group: EnumeratedGroup,
}

impl Interned {
    fn classes(&self) -> usize {
        self.group.classes().len()
    }

    /// Class of the image of `w` on `mask`.
    fn class_of_image(&self, w: &Permutation, mask: Subset) -> usize {
        self.group.class_of(&image_on(w, mask)).expect("image lies in the interned group")
    }
}

struct Orbit {
    rep: Subset,
    members: Vec<(Subset, Permutation)>,
    stabilizer: Vec<Permutation>,
}

/// Orbits of the subsets of `ground` under `group`, with witnesses and
/// stabilizers, for the subsets accepted by `keep`.
fn subset_orbits(group: &EnumeratedGroup, ground: Subset, keep: impl Fn(Subset) -> bool) -> Vec<Orbit> {
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for s in subset::subsets_of(ground) {
        if seen.contains(&s) {
            continue;
        }
        let mut witness: HashMap<Subset, Permutation> = HashMap::new();
        let mut stabilizer = Vec::new();
        for y in group.elements() {
            let t = y.apply_subset(s);
            if t == s {
                stabilizer.push(y.clone());
            }
            witness.entry(t).or_insert_with(|| y.clone());
        }
        seen.extend(witness.keys().copied());
        if keep(s) {
            let mut members: Vec<_> = witness.into_iter().collect();
            members.sort_by_key(|(t, _)| *t);
            out.push(Orbit { rep: s, members, stabilizer });
        }
    }
    out
}

/// `Ind` from the stabilizer of an orbit's representative: at class `c`
/// the sum of `f(y⁻¹ x y)` over members `y(S)` fixed by the representative
/// `x` of `c`.
fn induce(group: &EnumeratedGroup, orbit: &Orbit, f: impl Fn(&Permutation) -> Vec<i64>) -> Rows {
    let classes = group.classes();
    let mut columns: Vec<Vec<i64>> = Vec::with_capacity(classes.len());
    for c in 0..classes.len() {
        let x = classes.rep(c).expect("enumerated classes carry representatives");
        let mut total: Vec<i64> = Vec::new();
        for (t, y) in &orbit.members {
            if x.apply_subset(*t) == *t {
                let v = f(&x.conjugate_by(y));
                if total.len() < v.len() {
                    total.resize(v.len(), 0);
                }
                for (a, b) in total.iter_mut().zip(v) {
                    *a += b;
                }
            }
        }
        columns.push(total);
    }
    let len = columns.iter().map(Vec::len).max().unwrap_or(0);
    let mut rows: Rows =
        (0..len).map(|i| columns.iter().map(|col| col.get(i).copied().unwrap_or(0)).collect()).collect();
    trim(&mut rows);
    rows
}

type Key = (Matroid, usize);

/// The defining recursions for `P`, `Q` and `Z` over orbits of subsets,
/// for matroids preserved by a fixed enumerable group `W`. Sub-results
/// are memoized by (minor, image of the stabilizer on its ground set).
pub struct BruteEngine {
    group: PermGroup,
    top: EnumeratedGroup,
    options: BruteOptions,
    next_id: AtomicUsize,
    groups: Mutex<HashMap<Vec<Permutation>, Arc<Interned>>>,
    pz_memo: Mutex<HashMap<Key, Arc<(Rows, Rows)>>>,
    q_memo: Mutex<HashMap<Key, Arc<Rows>>>,
}

impl BruteEngine {
    pub fn new(group: &PermGroup, options: BruteOptions) -> Result<Self> {
        let top = EnumeratedGroup::new(group, options.bound)?;
        Ok(BruteEngine {
            group: group.clone(),
            top,
            options,
            next_id: AtomicUsize::new(0),
            groups: Mutex::new(HashMap::new()),
            pz_memo: Mutex::new(HashMap::new()),
            q_memo: Mutex::new(HashMap::new()),
        })
    }

    /// The enumerated acting group; results live on its class list.
    pub fn group(&self) -> &EnumeratedGroup {
        &self.top
    }

    pub fn compute(&self, m: &Matroid, which: Which) -> Result<EquivPoly> {
        let (img, ground) = self.prepare(m)?;
        let rows = match which {
            Which::P => self.pz(m, &img).0.clone(),
            Which::Z => self.pz(m, &img).1.clone(),
            Which::Q => (*self.q(m, &img)).clone(),
        };
        self.pull_back(&rows, &img, ground)
    }

    /// `R = Z - P`: the sum over nonempty subset orbits.
    pub fn r(&self, m: &Matroid) -> Result<EquivPoly> {
        let (img, ground) = self.prepare(m)?;
        let rows = self.r_rows(m, &img);
        self.pull_back(&rows, &img, ground)
    }

    /// The left side of the defining relation for `Q`, summed over every
    /// subset orbit with the computed `Q` and `P`; zero when they are right.
    pub fn q_residual(&self, m: &Matroid) -> Result<EquivPoly> {
        let (img, ground) = self.prepare(m)?;
        let mut total = Rows::new();
        if m.ground() != 0 {
            let orbits = subset_orbits(&img.group, ground, |_| true);
            for orbit in &orbits {
                let term = self.q_term(m, &img, orbit);
                accumulate(&mut total, &term, 0, sign(m.rank_of(orbit.rep)));
            }
        }
        trim(&mut total);
        self.pull_back(&total, &img, ground)
    }

    fn prepare(&self, m: &Matroid) -> Result<(Arc<Interned>, Subset)> {
        if m.size() > MAX_BRUTE_POINTS {
            return Err(Error::InvalidParameters(format!(
                "{} points exceed the subset recursion limit of {MAX_BRUTE_POINTS}; use the paving fast path",
                m.size()
            )));
        }
        let ground = m.ground();
        if subset::points(ground).any(|p| p >= self.group.degree()) {
            return Err(Error::NotPreserved("matroid has points outside the group's degree".into()));
        }
        m.check_preserved(&self.group)?;
        let img = self.image_group(self.top.elements(), ground);
        Ok((img, ground))
    }

    fn pull_back(&self, rows: &Rows, img: &Interned, ground: Subset) -> Result<EquivPoly> {
        let classes = self.top.classes();
        let map: Vec<usize> =
            (0..classes.len()).map(|c| img.class_of_image(classes.rep(c).expect("enumerated"), ground)).collect();
        let lifted: Rows = rows.iter().map(|r| map.iter().map(|&c| r[c]).collect()).collect();
        EquivPoly::from_integer_rows(classes.clone(), &lifted)
    }

    fn image_group<'a>(&self, elements: impl IntoIterator<Item = &'a Permutation>, mask: Subset) -> Arc<Interned> {
        let mut images: Vec<Permutation> = elements.into_iter().map(|w| image_on(w, mask)).collect();
        images.sort();
        images.dedup();
        if let Some(g) = self.groups.lock().expect("group cache").get(&images) {
            return g.clone();
        }
        let degree = images[0].degree();
        let group = EnumeratedGroup::from_elements(degree, images.clone());
        let mut cache = self.groups.lock().expect("group cache");
        cache
            .entry(images)
            .or_insert_with(|| Arc::new(Interned { id: self.next_id.fetch_add(1, Ordering::Relaxed), group }))
            .clone()
    }

    fn r_rows(&self, m: &Matroid, g: &Arc<Interned>) -> Rows {
        let flats_only = self.options.flats_only;
        let orbits = subset_orbits(&g.group, m.ground(), |s| s != 0 && (!flats_only || m.closure(s) == s));
        let terms: Vec<(usize, Rows)> = orbits
            .par_iter()
            .map(|orbit| {
                let c = m.contract(orbit.rep);
                let sub = self.image_group(&orbit.stabilizer, c.ground());
                let pc = self.pz(&c, &sub).0.clone();
                if pc.is_empty() {
                    return (0, Rows::new());
                }
                let rows = induce(&g.group, orbit, |w| {
                    let cls = sub.class_of_image(w, c.ground());
                    pc.iter().map(|r| r[cls]).collect()
                });
                (m.rank_of(orbit.rep), rows)
            })
            .collect();
        let mut total = Rows::new();
        for (shift, rows) in &terms {
            accumulate(&mut total, rows, *shift, 1);
        }
        trim(&mut total);
        total
    }

    fn pz(&self, m: &Matroid, g: &Arc<Interned>) -> Arc<(Rows, Rows)> {
        let key = (m.clone(), g.id);
        if let Some(v) = self.pz_memo.lock().expect("memo").get(&key) {
            return v.clone();
        }
        let nc = g.classes();
        let result = if m.ground() == 0 {
            (vec![vec![1; nc]], vec![vec![1; nc]])
        } else {
            let r = self.r_rows(m, g);
            if !m.is_loopless() {
                (Rows::new(), r)
            } else {
                let zero = Row(vec![0; nc]);
                let r: Vec<Row> = r.into_iter().map(Row).collect();
                let (p, z) = palindromic_completion(&r, m.rank(), &zero).expect("deg R <= rank");
                let mut p: Rows = p.into_iter().map(|r| r.0).collect();
                let mut z: Rows = z.into_iter().map(|r| r.0).collect();
                trim(&mut p);
                trim(&mut z);
                (p, z)
            }
        };
        let result = Arc::new(result);
        self.pz_memo.lock().expect("memo").entry(key).or_insert(result).clone()
    }

    /// `Ind (Q_{M|S} ⊗ P_{M/S})` for one orbit, without the sign.
    fn q_term(&self, m: &Matroid, g: &Arc<Interned>, orbit: &Orbit) -> Rows {
        let s = orbit.rep;
        let restriction = m.restrict(s);
        let contraction = m.contract(s);
        let sub_r = self.image_group(&orbit.stabilizer, restriction.ground());
        let sub_c = self.image_group(&orbit.stabilizer, contraction.ground());
        let q = self.q(&restriction, &sub_r);
        let p = self.pz(&contraction, &sub_c).0.clone();
        if q.is_empty() || p.is_empty() {
            return Rows::new();
        }
        induce(&g.group, orbit, |w| {
            let cq = sub_r.class_of_image(w, restriction.ground());
            let cp = sub_c.class_of_image(w, contraction.ground());
            let mut out = vec![0; q.len() + p.len() - 1];
            for (i, qi) in q.iter().enumerate() {
                for (j, pj) in p.iter().enumerate() {
                    out[i + j] += qi[cq] * pj[cp];
                }
            }
            out
        })
    }

    fn q(&self, m: &Matroid, g: &Arc<Interned>) -> Arc<Rows> {
        let key = (m.clone(), g.id);
        if let Some(v) = self.q_memo.lock().expect("memo").get(&key) {
            return v.clone();
        }
        let nc = g.classes();
        let result = if m.ground() == 0 {
            vec![vec![1; nc]]
        } else if !m.is_loopless() {
            Rows::new()
        } else {
            let flats_only = self.options.flats_only;
            let ground = m.ground();
            let orbits = subset_orbits(&g.group, ground, |s| s != ground && (!flats_only || m.closure(s) == s));
            let terms: Vec<(i64, Rows)> =
                orbits.par_iter().map(|orbit| (sign(m.rank_of(orbit.rep)), self.q_term(m, g, orbit))).collect();
            let mut total = Rows::new();
            for (sg, rows) in &terms {
                accumulate(&mut total, rows, 0, sg * sign(m.rank() + 1));
            }
            trim(&mut total);
            total
        };
        let result = Arc::new(result);
        self.q_memo.lock().expect("memo").entry(key).or_insert(result).clone()
    }
}

fn sign(e: usize) -> i64 {
    if e.is_multiple_of(2) {
        1
    } else {
        -1
    }
}
