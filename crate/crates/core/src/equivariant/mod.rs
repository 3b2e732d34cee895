//! Equivariant `P`, `Q` and `Z` polynomials: the defining recursions, the
//! paving fast path and the honesty check.

mod brute;
mod doc;
mod fast;

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

pub use brute::{BruteEngine, BruteOptions, MAX_BRUTE_POINTS};
pub use doc::{format_decomposition, CoefficientDoc, ResultDoc, TermDoc, ValueDoc};
pub use fast::{
    correction, fast_paving, gedeon_check, relaxation_delta, symmetric_restriction, uniform, FastResult, GedeonReport,
    OrbitSummary,
};

use crate::error::{Error, Result};
use crate::groups::{decompose, CharacterTable, ClassFunction, ClassList, Permutation};
use crate::symrep::{palindromic_completion, Additive};

/// Which of the three polynomials.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Which {
    P,
    Q,
    Z,
}

impl FromStr for Which {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "P" | "p" => Ok(Which::P),
            "Q" | "q" => Ok(Which::Q),
            "Z" | "z" => Ok(Which::Z),
            other => Err(Error::Parse(format!("unknown polynomial {other:?}, expected P, Q or Z"))),
        }
    }
}

impl fmt::Display for Which {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Which::P => "P",
            Which::Q => "Q",
            Which::Z => "Z",
        };
        f.write_str(s)
    }
}

/// A polynomial in `t` whose coefficients are class functions on one
/// class list. Trailing zero coefficients are trimmed.
#[derive(Clone, Debug, PartialEq)]
pub struct EquivPoly {
    classes: Arc<ClassList>,
    coeffs: Vec<ClassFunction>,
}

impl EquivPoly {
    pub fn new(classes: Arc<ClassList>, coeffs: Vec<ClassFunction>) -> Result<Self> {
        if coeffs.iter().any(|c| !Arc::ptr_eq(c.classes(), &classes) && **c.classes() != *classes) {
            return Err(Error::ClassListMismatch);
        }
        let mut poly = EquivPoly { classes, coeffs };
        poly.trim();
        Ok(poly)
    }

    pub fn zero(classes: Arc<ClassList>) -> Self {
        EquivPoly { classes, coeffs: Vec::new() }
    }

    /// The trivial character as a constant polynomial.
    pub fn one(classes: Arc<ClassList>) -> Self {
        let c = ClassFunction::constant(classes.clone(), 1);
        EquivPoly { classes, coeffs: vec![c] }
    }

    pub fn from_integer_rows(classes: Arc<ClassList>, rows: &[Vec<i64>]) -> Result<Self> {
        let coeffs = rows.iter().map(|r| ClassFunction::from_integers(classes.clone(), r)).collect::<Result<_>>()?;
        Self::new(classes, coeffs)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Additive::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn classes(&self) -> &Arc<ClassList> {
        &self.classes
    }

    pub fn coeffs(&self) -> &[ClassFunction] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> ClassFunction {
        self.coeffs.get(i).cloned().unwrap_or_else(|| ClassFunction::zero(self.classes.clone()))
    }

    pub fn t_degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Values at the identity: the non-equivariant coefficients.
    pub fn dims(&self) -> Vec<i64> {
        self.coeffs.iter().map(|c| c.dimension().expect("integer value at the identity")).collect()
    }

    pub fn is_palindromic(&self, k: usize) -> bool {
        self.coeffs.len() <= k + 1 && (0..=k).all(|i| self.coeff(i) == self.coeff(k - i))
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(ClassFunction::is_integral)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.combine(other, |a, b| a.checked_add(b))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.combine(other, |a, b| a.checked_sub(b))
    }

    fn combine(
        &self,
        other: &Self,
        op: impl Fn(&ClassFunction, &ClassFunction) -> Result<ClassFunction>,
    ) -> Result<Self> {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|i| op(&self.coeff(i), &other.coeff(i))).collect::<Result<_>>()?;
        Self::new(self.classes.clone(), coeffs)
    }

    /// Polynomial product with pointwise products of coefficients.
    pub fn tensor_mul(&self, other: &Self) -> Result<Self> {
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.classes.clone()));
        }
        let mut coeffs = vec![ClassFunction::zero(self.classes.clone()); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].checked_add(&a.checked_mul(b)?)?;
            }
        }
        Self::new(self.classes.clone(), coeffs)
    }

    pub fn shift(&self, power: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![ClassFunction::zero(self.classes.clone()); power];
        coeffs.extend(self.coeffs.iter().cloned());
        EquivPoly { classes: self.classes.clone(), coeffs }
    }

    /// Moves every coefficient to `target`; see [`ClassFunction::transfer`].
    pub fn transfer(
        &self,
        target: &Arc<ClassList>,
        lookup: impl Fn(&Permutation) -> Option<usize>,
    ) -> Result<EquivPoly> {
        let coeffs = self.coeffs.iter().map(|c| c.transfer(target, &lookup)).collect::<Result<_>>()?;
        Self::new(target.clone(), coeffs)
    }

    /// Irreducible multiplicities of each coefficient.
    pub fn decompose(&self, table: &CharacterTable) -> Result<Vec<Vec<(String, i64)>>> {
        self.coeffs.iter().map(|c| decompose(c, table)).collect()
    }

    /// Splits `R` into `(P, Z)` with `deg P < k/2` and `Z = P + R`
    /// palindromic of degree `k`.
    pub fn palindromic_completion(&self, k: usize) -> Result<(EquivPoly, EquivPoly)> {
        let zero = ClassFunction::zero(self.classes.clone());
        let (p, z) = palindromic_completion(&self.coeffs, k, &zero)?;
        Ok((Self::new(self.classes.clone(), p)?, Self::new(self.classes.clone(), z)?))
    }
}

/// `X_{M1 ⊕ M2} = X_{M1} · X_{M2}` with both factors on one class list.
pub fn direct_sum_poly(x1: &EquivPoly, x2: &EquivPoly) -> Result<EquivPoly> {
    x1.tensor_mul(x2)
}
