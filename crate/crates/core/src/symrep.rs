//! Virtual representations of symmetric groups and polynomials with such
//! coefficients, including the closed forms for uniform matroids and the
//! per-hyperplane relaxation corrections.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::partitions::{
    branch_remove_box, dim_specht, lr_expand, lr_product, mn_character, partitions_of, pieri_row, CycleType, Partition,
    SkewShape,
};

/// An abelian group of polynomial coefficients.
pub trait Additive: Clone {
    fn zero_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
}

/// Splits `r` into the unique `p` of degree `< k/2` such that `z = p + r`
/// is palindromic of degree `k`. Returns `(p, z)`.
///
/// `zero` fixes the coefficient context (degree, class list) for indices
/// past the end of `r`.
pub fn palindromic_completion<C: Additive>(r: &[C], k: usize, zero: &C) -> Result<(Vec<C>, Vec<C>)> {
    if r.iter().skip(k + 1).any(|c| !c.is_zero()) {
        return Err(Error::InvalidParameters(format!(
            "polynomial of degree {} exceeds the completion degree {k}",
            r.len() - 1
        )));
    }
    let coeff = |i: usize| r.get(i).cloned().unwrap_or_else(|| zero.zero_like());
    let mut p = Vec::new();
    for i in 0..k + 1 {
        if 2 * i < k {
            p.push(coeff(k - i).minus(&coeff(i)));
        }
    }
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    let z = (0..=k)
        .map(|i| match p.get(i) {
            Some(pi) => pi.plus(&coeff(i)),
            None => coeff(i),
        })
        .collect();
    Ok((p, z))
}

/// A virtual representation of the symmetric group of `degree` points.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SymmRep {
    degree: usize,
    coeffs: BTreeMap<Partition, i64>,
}

impl SymmRep {
    pub fn zero(degree: usize) -> Self {
        SymmRep { degree, coeffs: BTreeMap::new() }
    }

    pub fn irreducible(lambda: Partition) -> Self {
        let degree = lambda.size();
        SymmRep { degree, coeffs: BTreeMap::from([(lambda, 1)]) }
    }

    pub fn trivial(degree: usize) -> Self {
        Self::irreducible(Partition::row(degree as u32))
    }

    pub fn sign(degree: usize) -> Self {
        Self::irreducible(Partition::column(degree as u32))
    }

    /// The skew Specht module of `shape`, expanded into irreducibles.
    /// The zero shape gives the zero representation of `degree`.
    pub fn skew(shape: &SkewShape, degree: usize) -> Self {
        let mut rep = Self::zero(degree);
        for (nu, c) in lr_expand(shape) {
            debug_assert_eq!(nu.size(), degree);
            rep.add_term(nu, c as i64);
        }
        rep
    }

    /// Irreducible from exponent notation; an invalid shape is zero.
    pub fn from_blocks(blocks: &[(i64, i64)], degree: usize) -> Self {
        match Partition::from_blocks(blocks) {
            Some(lambda) if lambda.size() == degree => Self::irreducible(lambda),
            _ => Self::zero(degree),
        }
    }

    pub fn from_terms(degree: usize, terms: impl IntoIterator<Item = (Partition, i64)>) -> Result<Self> {
        let mut rep = Self::zero(degree);
        for (lambda, c) in terms {
            if lambda.size() != degree {
                return Err(Error::SizeMismatch { expected: degree, found: lambda.size() });
            }
            rep.add_term(lambda, c);
        }
        Ok(rep)
    }

    fn add_term(&mut self, lambda: Partition, c: i64) {
        if c == 0 {
            return;
        }
        let e = self.coeffs.entry(lambda.clone()).or_insert(0);
        *e += c;
        if *e == 0 {
            self.coeffs.remove(&lambda);
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, i64)> {
        self.coeffs.iter().map(|(p, &c)| (p, c))
    }

    pub fn multiplicity(&self, lambda: &Partition) -> i64 {
        self.coeffs.get(lambda).copied().unwrap_or(0)
    }

    pub fn dim(&self) -> i64 {
        self.coeffs.iter().map(|(p, &c)| c * dim_specht(p) as i64).sum()
    }

    /// True when every multiplicity is nonnegative.
    pub fn is_honest(&self) -> bool {
        self.coeffs.values().all(|&c| c >= 0)
    }

    pub fn scale(&self, s: i64) -> Self {
        let mut out = Self::zero(self.degree);
        for (p, &c) in &self.coeffs {
            out.add_term(p.clone(), c * s);
        }
        out
    }

    /// Character value at a permutation of cycle type `mu`.
    pub fn character(&self, mu: &CycleType) -> Result<i64> {
        self.coeffs.iter().map(|(p, &c)| mn_character(p, mu).map(|v| c * v)).sum()
    }

    /// Induction product `Ind_{S_i x S_j}^{S_{i+j}} (a ⊠ b)`.
    pub fn induct_product(&self, other: &SymmRep) -> SymmRep {
        let mut out = Self::zero(self.degree + other.degree);
        for (mu, &a) in &self.coeffs {
            for (nu, &b) in &other.coeffs {
                if mu.len() == 1 || mu.is_empty() {
                    for lambda in pieri_row(nu, mu.part(0)) {
                        out.add_term(lambda, a * b);
                    }
                } else {
                    for (lambda, c) in lr_product(mu, nu) {
                        out.add_term(lambda, a * b * c as i64);
                    }
                }
            }
        }
        out
    }

    /// Restriction from `S_n` to `S_{n-1}` by the branching rule.
    pub fn restrict_one(&self) -> Result<SymmRep> {
        if self.degree == 0 {
            return Err(Error::EmptyPartition);
        }
        let mut out = Self::zero(self.degree - 1);
        for (lambda, &c) in &self.coeffs {
            for mu in branch_remove_box(lambda)? {
                out.add_term(mu, c);
            }
        }
        Ok(out)
    }

    /// Internal tensor product, computed through characters of `S_n`.
    pub fn tensor(&self, other: &SymmRep) -> Result<SymmRep> {
        if self.degree != other.degree {
            return Err(Error::SizeMismatch { expected: self.degree, found: other.degree });
        }
        let n = self.degree;
        let classes: Vec<CycleType> = partitions_of(n).into_iter().map(CycleType).collect();
        let product: Vec<i64> =
            classes.iter().map(|mu| Ok(self.character(mu)? * other.character(mu)?)).collect::<Result<_>>()?;
        let order = crate::partitions::factorial(n);
        let mut out = Self::zero(n);
        for lambda in partitions_of(n) {
            let mut acc = num_bigint::BigInt::from(0);
            for (mu, &v) in classes.iter().zip(&product) {
                let chi = mn_character(&lambda, mu)?;
                acc += num_bigint::BigInt::from(mu.class_size()) * v * chi;
            }
            let m = acc / num_bigint::BigInt::from(order.clone());
            let m: i64 = i64::try_from(m).map_err(|_| Error::InvalidParameters("overflow".into()))?;
            out.add_term(lambda, m);
        }
        Ok(out)
    }
}

impl Additive for SymmRep {
    fn zero_like(&self) -> Self {
        Self::zero(self.degree)
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn plus(&self, other: &Self) -> Self {
        assert_eq!(self.degree, other.degree, "adding representations of different degrees");
        let mut out = self.clone();
        for (p, &c) in &other.coeffs {
            out.add_term(p.clone(), c);
        }
        out
    }

    fn minus(&self, other: &Self) -> Self {
        self.plus(&other.scale(-1))
    }
}

fn write_rep_terms(f: &mut fmt::Formatter<'_>, rep: &SymmRep, power: usize, first: &mut bool) -> fmt::Result {
    for (lambda, &c) in rep.coeffs.iter().rev() {
        let sep = match (*first, c < 0) {
            (true, false) => "",
            (true, true) => "-",
            (false, false) => " + ",
            (false, true) => " - ",
        };
        write!(f, "{sep}")?;
        if c.abs() != 1 {
            write!(f, "{}*", c.abs())?;
        }
        write!(f, "V{lambda}")?;
        match power {
            0 => {}
            1 => write!(f, "*t")?,
            _ => write!(f, "*t^{power}")?,
        }
        *first = false;
    }
    Ok(())
}

impl fmt::Display for SymmRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        write_rep_terms(f, self, 0, &mut true)
    }
}

/// A polynomial in `t` whose coefficients are virtual representations of
/// one symmetric group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmPoly {
    degree: usize,
    coeffs: Vec<SymmRep>,
}

impl SymmPoly {
    pub fn zero(degree: usize) -> Self {
        SymmPoly { degree, coeffs: Vec::new() }
    }

    pub fn constant(rep: SymmRep) -> Self {
        Self::from_coeffs(rep.degree(), vec![rep])
    }

    pub fn from_coeffs(degree: usize, coeffs: Vec<SymmRep>) -> Self {
        assert!(coeffs.iter().all(|c| c.degree() == degree), "coefficient degree mismatch");
        let mut poly = SymmPoly { degree, coeffs };
        poly.trim();
        poly
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    /// Degree `n` of the symmetric group.
    pub fn group_degree(&self) -> usize {
        self.degree
    }

    pub fn coeffs(&self) -> &[SymmRep] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> SymmRep {
        self.coeffs.get(i).cloned().unwrap_or_else(|| SymmRep::zero(self.degree))
    }

    /// Degree in `t`, or `None` for the zero polynomial.
    pub fn t_degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn dims(&self) -> Vec<i64> {
        self.coeffs.iter().map(SymmRep::dim).collect()
    }

    pub fn is_honest(&self) -> bool {
        self.coeffs.iter().all(SymmRep::is_honest)
    }

    /// Whether `t^k f(1/t) = f(t)`.
    pub fn is_palindromic(&self, k: usize) -> bool {
        if self.coeffs.len() > k + 1 {
            return false;
        }
        (0..=k).all(|i| self.coeff(i) == self.coeff(k - i))
    }

    pub fn shift(&self, power: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![SymmRep::zero(self.degree); power];
        coeffs.extend(self.coeffs.iter().cloned());
        Self::from_coeffs(self.degree, coeffs)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.degree, other.degree);
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::from_coeffs(self.degree, (0..len).map(|i| self.coeff(i).plus(&other.coeff(i))).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.degree, other.degree);
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::from_coeffs(self.degree, (0..len).map(|i| self.coeff(i).minus(&other.coeff(i))).collect())
    }

    pub fn restrict_one(&self) -> Result<Self> {
        if self.degree == 0 {
            return Err(Error::EmptyPartition);
        }
        let coeffs = self.coeffs.iter().map(SymmRep::restrict_one).collect::<Result<_>>()?;
        Ok(Self::from_coeffs(self.degree - 1, coeffs))
    }

    /// Coefficientwise `Ind (rep ⊠ c)`.
    pub fn induct_left(&self, rep: &SymmRep) -> Self {
        Self::from_coeffs(self.degree + rep.degree(), self.coeffs.iter().map(|c| rep.induct_product(c)).collect())
    }

    /// Product of polynomials with internal tensor products of coefficients
    /// (both factors carry the same symmetric-group action).
    pub fn tensor_mul(&self, other: &Self) -> Result<Self> {
        if self.degree != other.degree {
            return Err(Error::SizeMismatch { expected: self.degree, found: other.degree });
        }
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.degree));
        }
        let mut coeffs = vec![SymmRep::zero(self.degree); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].plus(&a.tensor(b)?);
            }
        }
        Ok(Self::from_coeffs(self.degree, coeffs))
    }

    /// Multiplication by `(1 + t)`.
    pub fn times_one_plus_t(&self) -> Self {
        self.add(&self.shift(1))
    }
}

impl fmt::Display for SymmPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (power, c) in self.coeffs.iter().enumerate().rev() {
            write_rep_terms(f, c, power, &mut first)?;
        }
        Ok(())
    }
}

fn check_rank(k: usize, n: usize) -> Result<()> {
    if k < 1 || k > n {
        return Err(Error::InvalidParameters(format!("need 1 <= k <= n, got k={k}, n={n}")));
    }
    Ok(())
}

fn i(x: usize) -> i64 {
    x as i64
}

/// `P` of the uniform matroid `U_{k,n}` under the full symmetric group.
pub fn uniform_p(k: usize, n: usize) -> Result<SymmPoly> {
    check_rank(k, n)?;
    Ok(uniform_p_any(k, n))
}

/// As [`uniform_p`], extended to `k = 0` (all loops, or empty).
fn uniform_p_any(k: usize, n: usize) -> SymmPoly {
    if k == 0 {
        return if n == 0 { SymmPoly::constant(SymmRep::trivial(0)) } else { SymmPoly::zero(n) };
    }
    let (k, n_) = (i(k), i(n));
    let coeffs = (0..)
        .take_while(|&j| 2 * j < k)
        .map(|j| {
            let outer = Partition::from_blocks(&[(n_ - 2 * j, 1), (k - 2 * j + 1, j)]);
            let inner = Partition::from_blocks(&[(k - 2 * j - 1, j)]);
            match (outer, inner) {
                (Some(o), Some(inn)) => SymmRep::skew(&SkewShape::new(o, inn), n),
                _ => SymmRep::zero(n),
            }
        })
        .collect();
    SymmPoly::from_coeffs(n, coeffs)
}

/// `Q` of the uniform matroid `U_{k,n}` under the full symmetric group.
pub fn uniform_q(k: usize, n: usize) -> Result<SymmPoly> {
    check_rank(k, n)?;
    let (k_, n_) = (i(k), i(n));
    let coeffs = (0..)
        .take_while(|&j| 2 * j < k_)
        .map(|j| SymmRep::from_blocks(&[(n_ - k_ + 1, 1), (2, j), (1, k_ - 2 * j - 1)], n))
        .collect();
    Ok(SymmPoly::from_coeffs(n, coeffs))
}

/// `Z` of the uniform matroid `U_{k,n}` under the full symmetric group.
pub fn uniform_z(k: usize, n: usize) -> Result<SymmPoly> {
    check_rank(k, n)?;
    Ok(uniform_z_any(k, n))
}

fn uniform_z_any(k: usize, n: usize) -> SymmPoly {
    // subsets of size i < k have rank i and contract to U_{k-i,n-i};
    // larger proper subsets contract to matroids with loops
    let mut z = SymmPoly::constant(SymmRep::trivial(n)).shift(k);
    for size in 0..k {
        let term = uniform_p_any(k - size, n - size).induct_left(&SymmRep::trivial(size));
        z = z.add(&term.shift(size));
    }
    z
}

fn check_hyperplane(k: usize, h: usize) -> Result<()> {
    if k < 1 || k > h {
        return Err(Error::InvalidParameters(format!("need 1 <= k <= h, got k={k}, h={h}")));
    }
    Ok(())
}

/// Change in `P` from relaxing one stressed hyperplane of size `h` in a
/// rank-`k` matroid, as a polynomial over `S_h`.
pub fn correction_p(k: usize, h: usize) -> Result<SymmPoly> {
    check_hyperplane(k, h)?;
    if k == 1 {
        return Ok(SymmPoly::constant(SymmRep::trivial(h)));
    }
    let (k_, h_) = (i(k), i(h));
    let mut coeffs = vec![SymmRep::zero(h)];
    for j in (1..).take_while(|&j| 2 * j < k_) {
        let outer = Partition::from_blocks(&[(h_ - 2 * j + 1, 1), (k_ - 2 * j + 1, j)]);
        let inner = Partition::from_blocks(&[(k_ - 2 * j, 1), (k_ - 2 * j - 1, j - 1)]);
        coeffs.push(match (outer, inner) {
            (Some(o), Some(inn)) => SymmRep::skew(&SkewShape::new(o, inn), h),
            _ => SymmRep::zero(h),
        });
    }
    Ok(SymmPoly::from_coeffs(h, coeffs))
}

/// Change in `Q` from relaxing one stressed hyperplane of size `h` in a
/// rank-`k` matroid.
pub fn correction_q(k: usize, h: usize) -> Result<SymmPoly> {
    check_hyperplane(k, h)?;
    if k == 1 {
        return Ok(SymmPoly::constant(SymmRep::trivial(h)));
    }
    let (k_, h_) = (i(k), i(h));
    let coeffs = (0..)
        .take_while(|&j| 2 * j < k_)
        .map(|j| {
            let mut c = SymmRep::zero(h);
            if j > 0 {
                c = c.plus(&SymmRep::from_blocks(&[(h_ - k_ + 2, 1), (2, j - 1), (1, k_ - 2 * j)], h));
            }
            if j == 0 || k != h {
                c = c.plus(&SymmRep::from_blocks(&[(h_ - k_ + 1, 1), (2, j), (1, k_ - 2 * j - 1)], h));
            }
            c
        })
        .collect();
    Ok(SymmPoly::from_coeffs(h, coeffs))
}

/// Change in `Z` from relaxing one stressed hyperplane of size `h` in a
/// rank-`k` matroid, as the difference `Res Z(U_{k,h+1}) - (1+t) Z(U_{k-1,h})`
/// on the model matroid `U_{k-1,h} ⊕ B_1`.
pub fn correction_z(k: usize, h: usize) -> Result<SymmPoly> {
    check_hyperplane(k, h)?;
    let relaxed = uniform_z_any(k, h + 1).restrict_one()?;
    let model = uniform_z_any(k - 1, h).times_one_plus_t();
    Ok(relaxed.sub(&model))
}

fn correction_p_any(k: i64, h: usize) -> Result<SymmPoly> {
    match k {
        k if k <= 0 => Ok(SymmPoly::zero(h)),
        1 => Ok(SymmPoly::constant(SymmRep::trivial(h))),
        k => correction_p(k as usize, h),
    }
}

/// Change in `R = Z - P` from relaxing one stressed hyperplane; its
/// palindromic completion to degree `k` recovers `correction_p` and
/// `correction_z`.
pub fn correction_r(k: usize, h: usize) -> Result<SymmPoly> {
    if k < 2 || k > h {
        return Err(Error::InvalidParameters(format!("need 2 <= k <= h, got k={k}, h={h}")));
    }
    let mut r = SymmPoly::constant(SymmRep::trivial(h).scale(-1)).shift(k - 1);
    for size in 1..h {
        let p = correction_p_any(i(k) - i(size), h - size)?;
        let term = p.induct_left(&SymmRep::trivial(size)).shift(size.min(k - 1));
        r = r.add(&term);
    }
    Ok(r)
}

/// Palindromic completion of a symmetric-group polynomial.
pub fn complete_symm(r: &SymmPoly, k: usize) -> Result<(SymmPoly, SymmPoly)> {
    let zero = SymmRep::zero(r.group_degree());
    let (p, z) = palindromic_completion(r.coeffs(), k, &zero)?;
    Ok((SymmPoly::from_coeffs(r.group_degree(), p), SymmPoly::from_coeffs(r.group_degree(), z)))
}
