use std::path::Path;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groups::perm::{EnumeratedGroup, PermGroup, Permutation};
use crate::groups::quadratic::{QuadraticEntry, QuadraticSum, QuadraticValue};
use crate::partitions::{mn_character, partitions_of, CycleType};

/// Conjugacy classes of a group: names, sizes, element orders and
/// (optionally) a representative permutation per class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassList {
    group_order: u64,
    names: Vec<String>,
    sizes: Vec<u64>,
    orders: Vec<u64>,
    reps: Vec<Option<Permutation>>,
}

impl ClassList {
    pub fn new(
        group_order: u64,
        names: Vec<String>,
        sizes: Vec<u64>,
        orders: Vec<u64>,
        reps: Vec<Option<Permutation>>,
    ) -> Result<Self> {
        let n = names.len();
        if sizes.len() != n || orders.len() != n || reps.len() != n {
            return Err(Error::Schema("class list fields have different lengths".into()));
        }
        Ok(ClassList { group_order, names, sizes, orders, reps })
    }

    /// Ad-hoc class list named `c1, c2, ...` from enumerated classes.
    pub fn from_representatives(group_order: u64, reps: Vec<Permutation>, sizes: Vec<u64>) -> Self {
        let names = (1..=reps.len()).map(|i| format!("c{i}")).collect();
        let orders = reps.iter().map(Permutation::order).collect();
        ClassList { group_order, names, sizes, orders, reps: reps.into_iter().map(Some).collect() }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn group_order(&self) -> u64 {
        self.group_order
    }

    pub fn name(&self, c: usize) -> &str {
        &self.names[c]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn size(&self, c: usize) -> u64 {
        self.sizes[c]
    }

    pub fn element_order(&self, c: usize) -> u64 {
        self.orders[c]
    }

    pub fn rep(&self, c: usize) -> Option<&Permutation> {
        self.reps[c].as_ref()
    }

    /// All representatives, or an error naming the first missing class.
    pub fn reps(&self) -> Result<Vec<&Permutation>> {
        self.reps
            .iter()
            .enumerate()
            .map(|(c, r)| r.as_ref().ok_or_else(|| Error::MissingRepresentatives(self.names[c].clone())))
            .collect()
    }

    pub fn identity_class(&self) -> Option<usize> {
        self.orders.iter().position(|&o| o == 1)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Irreducible {
    pub name: String,
    pub values: Vec<QuadraticValue>,
}

/// Exact irreducible characters of a finite group.
#[derive(Clone, Debug, PartialEq)]
pub struct CharacterTable {
    classes: Arc<ClassList>,
    irreducibles: Vec<Irreducible>,
}

#[derive(Serialize, Deserialize)]
struct TableFile {
    group_order: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    degree: Option<usize>,
    classes: Vec<ClassEntry>,
    irreducibles: Vec<IrreducibleEntry>,
}

#[derive(Serialize, Deserialize)]
struct ClassEntry {
    name: String,
    size: u64,
    order: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    rep: Option<String>,
}

#[derive(Serialize, Deserialize)]
struct IrreducibleEntry {
    name: String,
    values: Vec<QuadraticEntry>,
}

/// Outcome of [`CharacterTable::validate`].
#[derive(Clone, Debug, Default)]
pub struct TableReport {
    pub group_order: u64,
    pub classes: usize,
    pub failures: Vec<String>,
    pub notes: Vec<String>,
}

impl TableReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl CharacterTable {
    pub fn new(classes: Arc<ClassList>, irreducibles: Vec<Irreducible>) -> Result<Self> {
        if let Some(bad) = irreducibles.iter().find(|i| i.values.len() != classes.len()) {
            return Err(Error::Schema(format!(
                "{} has {} values for {} classes",
                bad.name,
                bad.values.len(),
                classes.len()
            )));
        }
        Ok(CharacterTable { classes, irreducibles })
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: TableFile = serde_json::from_str(text)?;
        let degree = file.degree.unwrap_or_else(|| {
            file.classes.iter().filter_map(|c| c.rep.as_deref()).map(Permutation::max_label).max().unwrap_or(0)
        });
        let reps = file
            .classes
            .iter()
            .map(|c| c.rep.as_deref().map(|r| Permutation::parse_cycles(r, degree)).transpose())
            .collect::<Result<Vec<_>>>()?;
        let classes = ClassList::new(
            file.group_order,
            file.classes.iter().map(|c| c.name.clone()).collect(),
            file.classes.iter().map(|c| c.size).collect(),
            file.classes.iter().map(|c| c.order).collect(),
            reps,
        )?;
        let irreducibles = file
            .irreducibles
            .iter()
            .map(|e| {
                let values = e.values.iter().map(QuadraticValue::try_from).collect::<Result<_>>()?;
                Ok(Irreducible { name: e.name.clone(), values })
            })
            .collect::<Result<_>>()?;
        Self::new(Arc::new(classes), irreducibles)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    pub fn to_json(&self) -> String {
        let c = &self.classes;
        let degree = c.reps.iter().flatten().map(Permutation::degree).max();
        let file = TableFile {
            group_order: c.group_order,
            degree,
            classes: (0..c.len())
                .map(|i| ClassEntry {
                    name: c.names[i].clone(),
                    size: c.sizes[i],
                    order: c.orders[i],
                    rep: c.reps[i].as_ref().map(|r| r.to_string()),
                })
                .collect(),
            irreducibles: self
                .irreducibles
                .iter()
                .map(|i| IrreducibleEntry {
                    name: i.name.clone(),
                    values: i.values.iter().map(QuadraticEntry::from).collect(),
                })
                .collect(),
        };
        serde_json::to_string(&file).expect("table serializes")
    }

    pub fn classes(&self) -> &Arc<ClassList> {
        &self.classes
    }

    pub fn irreducibles(&self) -> &[Irreducible] {
        &self.irreducibles
    }

    pub fn group_order(&self) -> u64 {
        self.classes.group_order
    }

    pub fn irreducible(&self, name: &str) -> Option<&Irreducible> {
        self.irreducibles.iter().find(|i| i.name == name)
    }

    /// Exact checks of the table invariants. When `group` is supplied and
    /// its order is within `bound`, representatives are also checked for
    /// membership, distinct classes and class sizes.
    pub fn validate(&self, group: Option<&PermGroup>, bound: usize) -> TableReport {
        let c = &self.classes;
        let mut report = TableReport { group_order: c.group_order, classes: c.len(), ..Default::default() };
        let fail = |r: &mut TableReport, msg: String| r.failures.push(msg);

        let total: u64 = c.sizes.iter().sum();
        if total != c.group_order {
            fail(&mut report, format!("class sizes sum to {total}, group order is {}", c.group_order));
        }
        if self.irreducibles.len() != c.len() {
            fail(&mut report, format!("{} irreducibles for {} classes", self.irreducibles.len(), c.len()));
        }
        match c.identity_class() {
            Some(id) if c.sizes[id] == 1 => {
                for irr in &self.irreducibles {
                    let deg = irr.values[id].as_integer();
                    if !deg.as_ref().is_some_and(|d| d > &BigInt::zero()) {
                        fail(&mut report, format!("{} has non-positive degree", irr.name));
                    }
                }
            }
            _ => fail(&mut report, "no identity class of size 1".into()),
        }
        for (i, &s) in c.sizes.iter().enumerate() {
            if s == 0 || !c.group_order.is_multiple_of(s) {
                fail(&mut report, format!("class {} size {s} does not divide the group order", c.names[i]));
            }
        }

        for (i, a) in self.irreducibles.iter().enumerate() {
            for (j, b) in self.irreducibles.iter().enumerate().skip(i) {
                match class_inner_product(c, &a.values, &b.values) {
                    Ok(v) => {
                        let want = QuadraticValue::integer((i == j) as i64);
                        if v != want {
                            fail(&mut report, format!("<{}, {}> = {v}, expected {want}", a.name, b.name));
                        }
                    }
                    Err(e) => fail(&mut report, format!("<{}, {}>: {e}", a.name, b.name)),
                }
            }
        }

        for (i, rep) in c.reps.iter().enumerate() {
            if let Some(r) = rep {
                if r.order() != c.orders[i] {
                    fail(
                        &mut report,
                        format!("representative of {} has order {}, declared {}", c.names[i], r.order(), c.orders[i]),
                    );
                }
            }
        }

        if let Some(g) = group {
            self.validate_against_group(g, bound, &mut report);
        }
        report.notes.push(
            "irreducible numbering is the row order of the table data; agreement with any external \
             numbering is a property of the data, not of this check"
                .into(),
        );
        report
    }

    fn validate_against_group(&self, group: &PermGroup, bound: usize, report: &mut TableReport) {
        let c = &self.classes;
        if c.reps.iter().any(Option::is_none) {
            report.notes.push("some classes have no representative; membership not checked".into());
            return;
        }
        if c.reps.iter().flatten().any(|r| r.degree() != group.degree()) {
            report.failures.push("representative degree differs from the group degree".into());
            return;
        }
        if c.group_order as usize > bound {
            let chain = group.stab_chain();
            if chain.order() != c.group_order.into() {
                report.failures.push(format!("group has order {}, table declares {}", chain.order(), c.group_order));
                return;
            }
            for (i, r) in c.reps.iter().flatten().enumerate() {
                if !chain.contains(r) {
                    report.failures.push(format!("representative of {} is not in the group", c.names[i]));
                }
            }
            report.notes.push(format!(
                "group order {} exceeds the enumeration bound {bound}; representatives checked for \
                 membership and element order only, algebraically conjugate class pairs are not distinguished",
                c.group_order
            ));
            return;
        }
        let enumerated = match EnumeratedGroup::new(group, bound) {
            Ok(e) => e,
            Err(e) => {
                report.failures.push(format!("group enumeration failed: {e}"));
                return;
            }
        };
        if enumerated.order() as u64 != c.group_order {
            report.failures.push(format!("group has order {}, table declares {}", enumerated.order(), c.group_order));
            return;
        }
        let mut seen = vec![false; enumerated.classes().len()];
        for (i, r) in c.reps.iter().flatten().enumerate() {
            match enumerated.class_of(r) {
                None => report.failures.push(format!("representative of {} is not in the group", c.names[i])),
                Some(k) => {
                    if std::mem::replace(&mut seen[k], true) {
                        report.failures.push(format!("representative of {} repeats a class", c.names[i]));
                    }
                    let size = enumerated.classes().size(k);
                    if size != c.sizes[i] {
                        report
                            .failures
                            .push(format!("class {} has {size} elements, table declares {}", c.names[i], c.sizes[i]));
                    }
                }
            }
        }
    }

    /// Moves representative points `i -> map[i]` (0-based) into a group of
    /// degree `degree`.
    pub fn relabel(&self, map: &[usize], degree: usize) -> Result<CharacterTable> {
        let mut classes = (*self.classes).clone();
        classes.reps = classes
            .reps
            .iter()
            .map(|r| r.as_ref().map(|p| p.relabel(map, degree)).transpose())
            .collect::<Result<_>>()?;
        Self::new(Arc::new(classes), self.irreducibles.clone())
    }
}

/// `(1/|G|) Σ_C |C| f(C) conj(g(C))` over a class list.
pub(crate) fn class_inner_product(
    classes: &ClassList,
    f: &[QuadraticValue],
    g: &[QuadraticValue],
) -> Result<QuadraticValue> {
    let mut sum = QuadraticSum::default();
    for (c, (a, b)) in f.iter().zip(g).enumerate() {
        let term = a.checked_mul(&b.conj())?;
        let size = QuadraticValue::integer(classes.sizes[c] as i64);
        sum.add(&term.checked_mul(&size)?);
    }
    sum.scale(&BigRational::new(BigInt::one(), BigInt::from(classes.group_order)));
    sum.value()
}

/// Table of the direct product. Classes and irreducibles are pairs, first
/// factor outermost; representatives act on `n1 + n2` points with the
/// second factor shifted past the first.
pub fn product_table(t1: &CharacterTable, t2: &CharacterTable) -> CharacterTable {
    let (c1, c2) = (&t1.classes, &t2.classes);
    let n1 = c1.reps.iter().flatten().map(Permutation::degree).max().unwrap_or(0);
    let n2 = c2.reps.iter().flatten().map(Permutation::degree).max().unwrap_or(0);
    let mut names = Vec::new();
    let mut sizes = Vec::new();
    let mut orders = Vec::new();
    let mut reps = Vec::new();
    for i in 0..c1.len() {
        for j in 0..c2.len() {
            names.push(if c2.len() == 1 {
                c1.names[i].clone()
            } else if c1.len() == 1 {
                c2.names[j].clone()
            } else {
                format!("{}.{}", c1.names[i], c2.names[j])
            });
            sizes.push(c1.sizes[i] * c2.sizes[j]);
            orders.push(num_integer::lcm(c1.orders[i], c2.orders[j]));
            reps.push(match (&c1.reps[i], &c2.reps[j]) {
                (Some(a), Some(b)) => {
                    let mut images: Vec<usize> = a.extend(n1).images().collect();
                    images.extend(b.extend(n2).images().map(|p| p + n1));
                    Some(Permutation::from_images(images).expect("product of bijections"))
                }
                _ => None,
            });
        }
    }
    let classes = ClassList { group_order: c1.group_order * c2.group_order, names, sizes, orders, reps };
    let mut irreducibles = Vec::new();
    for a in &t1.irreducibles {
        for b in &t2.irreducibles {
            let name = if t2.irreducibles.len() == 1 {
                a.name.clone()
            } else if t1.irreducibles.len() == 1 {
                b.name.clone()
            } else {
                format!("{}*{}", a.name, b.name)
            };
            let values = a.values.iter().flat_map(|x| b.values.iter().map(move |y| x * y)).collect();
            irreducibles.push(Irreducible { name, values });
        }
    }
    CharacterTable { classes: Arc::new(classes), irreducibles }
}

/// Character table of the symmetric group on `n` points by the
/// Murnaghan-Nakayama rule. Classes are cycle types in increasing
/// lexicographic order (identity first); irreducibles are `V[lambda]`
/// with `V[n]` first.
pub fn symmetric_table(n: usize) -> CharacterTable {
    let mut types = partitions_of(n);
    types.reverse();
    let mut names = Vec::new();
    let mut sizes = Vec::new();
    let mut orders = Vec::new();
    let mut reps = Vec::new();
    for mu in &types {
        let ct = CycleType(mu.clone());
        names.push(mu.to_string());
        sizes.push(ct.class_size().to_u64().expect("class size fits in u64"));
        orders.push(ct.element_order());
        let mut images = Vec::with_capacity(n);
        let mut start = 0;
        for &len in mu.parts() {
            let len = len as usize;
            images.extend((0..len).map(|i| start + (i + 1) % len));
            start += len;
        }
        reps.push(Some(Permutation::from_images(images).expect("cycle-type representative")));
    }
    let order = crate::partitions::factorial(n).to_u64().expect("n! fits in u64");
    let classes = ClassList { group_order: order, names, sizes, orders, reps };
    let irreducibles = partitions_of(n)
        .into_iter()
        .map(|lambda| {
            let values = types
                .iter()
                .map(|mu| QuadraticValue::integer(mn_character(&lambda, &CycleType(mu.clone())).expect("sizes agree")))
                .collect();
            Irreducible { name: format!("V{lambda}"), values }
        })
        .collect();
    CharacterTable { classes: Arc::new(classes), irreducibles }
}

/// Table of the trivial group acting on `degree` points.
pub fn trivial_table(degree: usize) -> CharacterTable {
    let classes = ClassList {
        group_order: 1,
        names: vec!["1a".into()],
        sizes: vec![1],
        orders: vec![1],
        reps: vec![Some(Permutation::identity(degree))],
    };
    CharacterTable {
        classes: Arc::new(classes),
        irreducibles: vec![Irreducible { name: "chi1".into(), values: vec![QuadraticValue::integer(1)] }],
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const D4: &str = include_str!("../../../../assets/d4.json");

    #[test]
    fn symmetric_tables_are_valid() {
        for n in 1..=6 {
            let t = symmetric_table(n);
            let g = PermGroup::symmetric(n);
            let report = t.validate(Some(&g), 100_000);
            assert!(report.passed(), "S_{n}: {:?}", report.failures);
        }
    }

    #[test]
    fn d4_table_valid_and_corruption_detected() {
        let t = CharacterTable::from_json(D4).unwrap();
        assert!(t.validate(None, 1000).passed());
        assert_eq!(CharacterTable::from_json(&t.to_json()).unwrap(), t);

        let mut bad = t.clone();
        let v = &bad.irreducibles[2].values[1];
        bad.irreducibles[2].values[1] = v + &QuadraticValue::integer(1);
        let report = bad.validate(None, 1000);
        assert!(!report.passed());
        assert!(report.failures.iter().any(|f| f.contains("<")));
    }

    #[test]
    fn product_table_shapes() {
        let d4 = CharacterTable::from_json(D4).unwrap();
        let p = product_table(&d4, &d4);
        assert_eq!(p.classes().len(), 25);
        assert_eq!(p.irreducibles().len(), 25);
        let id = p.classes().identity_class().unwrap();
        let mut dims: Vec<i64> =
            p.irreducibles().iter().map(|i| i64::try_from(i.values[id].as_integer().unwrap()).unwrap()).collect();
        dims.sort();
        assert_eq!(dims, [vec![1; 16], vec![2; 8], vec![4]].concat());
        assert!(p.validate(None, 1000).passed());

        let same = product_table(&d4, &trivial_table(0));
        assert_eq!(same.irreducibles(), d4.irreducibles());
        assert_eq!(same.classes().names(), d4.classes().names());
    }

    #[test]
    fn size_sum_failure() {
        let t = CharacterTable::from_json(D4).unwrap();
        let mut classes = (**t.classes()).clone();
        classes.sizes[1] += 1;
        let bad = CharacterTable::new(Arc::new(classes), t.irreducibles().to_vec()).unwrap();
        assert!(bad.validate(None, 1000).failures.iter().any(|f| f.contains("sum")));
    }
}
