use std::sync::Arc;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::groups::perm::Permutation;
use crate::groups::quadratic::QuadraticValue;
use crate::groups::table::{class_inner_product, CharacterTable, ClassList};
use crate::subset::Subset;
use crate::symrep::{Additive, SymmRep};

/// A (virtual) character stored as exact values on a class list.
#[derive(Clone, Debug)]
pub struct ClassFunction {
    classes: Arc<ClassList>,
    values: Vec<QuadraticValue>,
}

impl PartialEq for ClassFunction {
    fn eq(&self, other: &Self) -> bool {
        same_classes(&self.classes, &other.classes) && self.values == other.values
    }
}

fn same_classes(a: &Arc<ClassList>, b: &Arc<ClassList>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

impl ClassFunction {
    pub fn new(classes: Arc<ClassList>, values: Vec<QuadraticValue>) -> Result<Self> {
        if values.len() != classes.len() {
            return Err(Error::SizeMismatch { expected: classes.len(), found: values.len() });
        }
        Ok(ClassFunction { classes, values })
    }

    pub fn from_integers(classes: Arc<ClassList>, values: &[i64]) -> Result<Self> {
        Self::new(classes, values.iter().map(|&v| QuadraticValue::integer(v)).collect())
    }

    pub fn zero(classes: Arc<ClassList>) -> Self {
        let values = vec![QuadraticValue::zero(); classes.len()];
        ClassFunction { classes, values }
    }

    pub fn constant(classes: Arc<ClassList>, v: i64) -> Self {
        let values = vec![QuadraticValue::integer(v); classes.len()];
        ClassFunction { classes, values }
    }

    /// Samples `f` at each class representative.
    pub fn from_fn(
        classes: Arc<ClassList>,
        f: &(dyn Fn(&Permutation) -> Result<QuadraticValue> + Sync),
    ) -> Result<Self> {
        let reps = classes.reps()?;
        let values = reps.par_iter().map(|g| f(g)).collect::<Result<Vec<_>>>()?;
        Ok(ClassFunction { classes, values })
    }

    pub fn classes(&self) -> &Arc<ClassList> {
        &self.classes
    }

    pub fn values(&self) -> &[QuadraticValue] {
        &self.values
    }

    pub fn value(&self, c: usize) -> &QuadraticValue {
        &self.values[c]
    }

    /// Value at the identity class, when it is an integer.
    pub fn dimension(&self) -> Option<i64> {
        let id = self.classes.identity_class()?;
        self.values[id].as_integer().and_then(|v| i64::try_from(v).ok())
    }

    pub fn as_integers(&self) -> Option<Vec<i64>> {
        self.values.iter().map(|v| v.as_integer().and_then(|v| i64::try_from(v).ok())).collect()
    }

    pub fn is_integral(&self) -> bool {
        self.as_integers().is_some()
    }

    fn check(&self, other: &Self) -> Result<()> {
        if same_classes(&self.classes, &other.classes) {
            Ok(())
        } else {
            Err(Error::ClassListMismatch)
        }
    }

    fn zip_with(
        &self,
        other: &Self,
        op: impl Fn(&QuadraticValue, &QuadraticValue) -> Result<QuadraticValue>,
    ) -> Result<Self> {
        self.check(other)?;
        let values = self.values.iter().zip(&other.values).map(|(a, b)| op(a, b)).collect::<Result<_>>()?;
        Ok(ClassFunction { classes: self.classes.clone(), values })
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a.checked_add(b))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a.checked_add(&-b))
    }

    /// Pointwise product (the character of the tensor product).
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a.checked_mul(b))
    }

    pub fn scale(&self, s: i64) -> Self {
        let s = QuadraticValue::integer(s);
        ClassFunction { classes: self.classes.clone(), values: self.values.iter().map(|v| v * &s).collect() }
    }

    /// Moves the values onto another class list; `lookup` sends each
    /// representative of `target` to its class here.
    pub fn transfer(
        &self,
        target: &Arc<ClassList>,
        lookup: impl Fn(&Permutation) -> Option<usize>,
    ) -> Result<ClassFunction> {
        let values = target
            .reps()?
            .into_iter()
            .map(|g| {
                lookup(g)
                    .map(|c| self.values[c].clone())
                    .ok_or_else(|| Error::Table(format!("representative {g} not found in the source group")))
            })
            .collect::<Result<_>>()?;
        Ok(ClassFunction { classes: target.clone(), values })
    }
}

impl Additive for ClassFunction {
    fn zero_like(&self) -> Self {
        Self::zero(self.classes.clone())
    }

    fn is_zero(&self) -> bool {
        self.values.iter().all(QuadraticValue::is_zero)
    }

    fn plus(&self, other: &Self) -> Self {
        self.checked_add(other).expect("adding class functions on different class lists")
    }

    fn minus(&self, other: &Self) -> Self {
        self.checked_sub(other).expect("subtracting class functions on different class lists")
    }
}

/// `(1/|G|) Σ_C |C| f(C) conj(g(C))`.
pub fn inner_product(f: &ClassFunction, g: &ClassFunction) -> Result<QuadraticValue> {
    f.check(g)?;
    class_inner_product(&f.classes, &f.values, &g.values)
}

/// Multiplicities of the irreducibles of `table` in `f`, omitting zeros,
/// in table order. Fails on a non-integer multiplicity or if the
/// multiplicities do not rebuild `f` exactly.
pub fn decompose(f: &ClassFunction, table: &CharacterTable) -> Result<Vec<(String, i64)>> {
    if !same_classes(&f.classes, table.classes()) {
        return Err(Error::ClassListMismatch);
    }
    let mut out = Vec::new();
    let mut rebuilt = ClassFunction::zero(f.classes.clone());
    for irr in table.irreducibles() {
        let m = class_inner_product(&f.classes, &f.values, &irr.values)?;
        let mult = m
            .as_integer()
            .and_then(|v| i64::try_from(v).ok())
            .ok_or_else(|| Error::NonIntegerMultiplicity { irreducible: irr.name.clone(), value: m.to_string() })?;
        if mult != 0 {
            let chi = ClassFunction { classes: f.classes.clone(), values: irr.values.clone() };
            rebuilt = rebuilt.checked_add(&chi.scale(mult))?;
            out.push((irr.name.clone(), mult));
        }
    }
    if rebuilt != *f {
        return Err(Error::Reconstruction);
    }
    Ok(out)
}

/// Pulls a symmetric-group representation back along `action`, a
/// homomorphism from the group into `S_h`, sampled at the class
/// representatives. The homomorphism property is checked on all pairs of
/// `generators`.
pub fn restrict_symmetric(
    rep: &SymmRep,
    classes: &Arc<ClassList>,
    action: &(dyn Fn(&Permutation) -> Result<Permutation> + Sync),
    generators: &[Permutation],
) -> Result<ClassFunction> {
    for a in generators {
        for b in generators {
            let lhs = action(&a.compose(b))?;
            let rhs = action(a)?.compose(&action(b)?);
            if lhs != rhs {
                return Err(Error::NotAHomomorphism(format!("images of {a} and {b} do not compose")));
            }
        }
    }
    ClassFunction::from_fn(classes.clone(), &|g| {
        let image = action(g)?;
        if image.degree() != rep.degree() {
            return Err(Error::SizeMismatch { expected: rep.degree(), found: image.degree() });
        }
        Ok(QuadraticValue::integer(rep.character(&image.cycle_type())?))
    })
}

/// Induces a character from the stabilizer of an orbit seed. The value at
/// `g` is the sum over orbit members `O` fixed by `g` of
/// `chi(x_O⁻¹ g x_O)`, where `x_O` maps the seed onto `O`.
pub fn induce_from_stabilizer(
    chi: &(dyn Fn(&Permutation) -> Result<QuadraticValue> + Sync),
    orbit: &[(Subset, Permutation)],
    classes: &Arc<ClassList>,
) -> Result<ClassFunction> {
    ClassFunction::from_fn(classes.clone(), &|g| {
        let mut total = QuadraticValue::zero();
        for (set, x) in orbit {
            if g.apply_subset(*set) == *set {
                total = total.checked_add(&chi(&g.conjugate_by(x))?)?;
            }
        }
        Ok(total)
    })
}

/// Induces the pullback of a symmetric-group representation on the orbit
/// members: an element fixing `O` contributes the character of `rep` at
/// its cycle type on `O`. Returns one class function per entry of `reps`.
pub fn induce_symmetric_on_orbit(
    reps: &[SymmRep],
    orbit: &[Subset],
    classes: &Arc<ClassList>,
) -> Result<Vec<ClassFunction>> {
    let all = classes.reps()?;
    let columns = all
        .par_iter()
        .map(|g| {
            let mut totals = vec![0i64; reps.len()];
            for &set in orbit {
                if g.apply_subset(set) == set {
                    let ct = g.cycle_type_on(set);
                    for (t, r) in totals.iter_mut().zip(reps) {
                        *t += r.character(&ct)?;
                    }
                }
            }
            Ok(totals)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((0..reps.len())
        .map(|i| ClassFunction {
            classes: classes.clone(),
            values: columns.iter().map(|col| QuadraticValue::integer(col[i])).collect(),
        })
        .collect())
}

/// The trivial character on a class list.
pub fn trivial(classes: &Arc<ClassList>) -> ClassFunction {
    ClassFunction::constant(classes.clone(), 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::perm::{EnumeratedGroup, PermGroup};
    use crate::groups::table::symmetric_table;
    use crate::partitions::Partition;
    use crate::subset;

    fn s3() -> (EnumeratedGroup, CharacterTable) {
        let g = EnumeratedGroup::new(&PermGroup::symmetric(3), 100).unwrap();
        (g, symmetric_table(3))
    }

    #[test]
    fn permutation_character_of_s3() {
        let (_, table) = s3();
        let classes = table.classes().clone();
        let orbit = PermGroup::symmetric(3).orbit_transversal(subset::from_points([0]));
        let f = induce_from_stabilizer(&|_| Ok(QuadraticValue::integer(1)), &orbit, &classes).unwrap();
        // classes of the S_3 table: [1,1,1], [2,1], [3]
        assert_eq!(f.as_integers().unwrap(), vec![3, 1, 0]);
        assert_eq!(inner_product(&f, &trivial(&classes)).unwrap(), QuadraticValue::integer(1));
        let d = decompose(&f, &table).unwrap();
        assert_eq!(d, vec![("V[3]".to_string(), 1), ("V[2,1]".to_string(), 1)]);
        assert!(decompose(&ClassFunction::zero(classes), &table).unwrap().is_empty());
    }

    #[test]
    fn restriction_along_cyclic_action() {
        let c3 = PermGroup::new(3, vec![Permutation::parse_cycles("(1,2,3)", 3).unwrap()]).unwrap();
        let g = EnumeratedGroup::new(&c3, 100).unwrap();
        let rep = SymmRep::irreducible(Partition::new(vec![2, 1]).unwrap());
        let f = restrict_symmetric(&rep, g.classes(), &|p| Ok(p.clone()), c3.generators()).unwrap();
        let mut vals = f.as_integers().unwrap();
        assert_eq!(vals.remove(0), 2);
        assert_eq!(vals, vec![-1, -1]);

        let sign = SymmRep::sign(3);
        let s = restrict_symmetric(&sign, g.classes(), &|p| Ok(p.clone()), c3.generators()).unwrap();
        assert!(s.as_integers().unwrap().iter().all(|&v| v == 1));

        let bad = restrict_symmetric(
            &rep,
            g.classes(),
            &|p| Ok(if p.is_identity() { p.clone() } else { Permutation::parse_cycles("(1,2)", 3).unwrap() }),
            c3.generators(),
        );
        assert!(matches!(bad, Err(Error::NotAHomomorphism(_))));
    }

    #[test]
    fn regular_character() {
        let (g, table) = s3();
        let classes = table.classes().clone();
        let regular = ClassFunction::from_fn(classes.clone(), &|p| {
            Ok(QuadraticValue::integer(if p.is_identity() { 6 } else { 0 }))
        })
        .unwrap();
        for irr in table.irreducibles() {
            let chi = ClassFunction::new(classes.clone(), irr.values.clone()).unwrap();
            let dim = chi.dimension().unwrap();
            assert_eq!(inner_product(&regular, &chi).unwrap(), QuadraticValue::integer(dim));
        }
        assert_eq!(g.order(), 6);
    }

    #[test]
    fn mismatched_lists() {
        let a = trivial(symmetric_table(3).classes());
        let b = trivial(symmetric_table(4).classes());
        assert!(matches!(inner_product(&a, &b), Err(Error::ClassListMismatch)));
    }

    #[test]
    fn non_integer_multiplicity() {
        let table = symmetric_table(3);
        let f = ClassFunction::from_integers(table.classes().clone(), &[1, 0, 0]).unwrap();
        assert!(matches!(decompose(&f, &table), Err(Error::NonIntegerMultiplicity { .. })));
    }
}
