use std::sync::Arc;

use crate::equivariant::{EquivPoly, Which};
use crate::error::{Error, Result};
use crate::groups::{induce_symmetric_on_orbit, CharacterTable, ClassFunction, ClassList, PermGroup, QuadraticValue};
use crate::matroid::Matroid;
use crate::subset::{self, Subset};
use crate::symrep::{self, SymmPoly, SymmRep};

/// Closed form for `U_{k,n}` under `S_n`; `k = 0` is allowed.
pub fn uniform(which: Which, k: usize, n: usize) -> Result<SymmPoly> {
    if k == 0 {
        let tau = SymmPoly::constant(SymmRep::trivial(n));
        return Ok(match which {
            Which::Z => tau,
            _ if n == 0 => tau,
            _ => SymmPoly::zero(n),
        });
    }
    match which {
        Which::P => symrep::uniform_p(k, n),
        Which::Q => symrep::uniform_q(k, n),
        Which::Z => symrep::uniform_z(k, n),
    }
}

/// The per-hyperplane correction `p_{k,h}`, `q_{k,h}` or `z_{k,h}`.
pub fn correction(which: Which, k: usize, h: usize) -> Result<SymmPoly> {
    match which {
        Which::P => symrep::correction_p(k, h),
        Which::Q => symrep::correction_q(k, h),
        Which::Z => symrep::correction_z(k, h),
    }
}

/// Pulls a symmetric-group polynomial on the points of `ground` back to a
/// group stabilizing `ground`, sampled at the class representatives.
pub fn symmetric_restriction(poly: &SymmPoly, classes: &Arc<ClassList>, ground: Subset) -> Result<EquivPoly> {
    let reps = classes.reps()?;
    if let Some(g) = reps.iter().find(|g| g.apply_subset(ground) != ground) {
        return Err(Error::NotPreserved(format!("class representative {g} moves the ground set")));
    }
    let coeffs = poly
        .coeffs()
        .iter()
        .map(|c| {
            ClassFunction::from_fn(classes.clone(), &|g| {
                Ok(QuadraticValue::integer(c.character(&g.cycle_type_on(ground))?))
            })
        })
        .collect::<Result<_>>()?;
    EquivPoly::new(classes.clone(), coeffs)
}

fn delta_on_orbit(k: usize, orbit: &[Subset], which: Which, classes: &Arc<ClassList>) -> Result<EquivPoly> {
    let h = subset::size(orbit[0]);
    let poly = correction(which, k, h)?;
    let coeffs = induce_symmetric_on_orbit(poly.coeffs(), orbit, classes)?;
    EquivPoly::new(classes.clone(), coeffs)
}

/// `Ind_{W_H}^W Res_{W_H}^{S_h}` of the correction for one stressed
/// hyperplane `hyperplane` of a rank-`k` matroid: the change in the chosen
/// polynomial when the whole `W`-orbit of `hyperplane` is relaxed.
pub fn relaxation_delta(
    k: usize,
    group: &PermGroup,
    hyperplane: Subset,
    which: Which,
    classes: &Arc<ClassList>,
) -> Result<EquivPoly> {
    if subset::size(hyperplane) < k {
        return Err(Error::InvalidParameters(format!(
            "hyperplane of size {} is smaller than the rank {k}",
            subset::size(hyperplane)
        )));
    }
    let orbit: Vec<Subset> = group.orbit_transversal(hyperplane).into_iter().map(|(s, _)| s).collect();
    delta_on_orbit(k, &orbit, which, classes)
}

#[derive(Clone, Debug)]
pub struct OrbitSummary {
    pub representative: Vec<usize>,
    pub orbit_size: usize,
    pub hyperplane_size: usize,
    pub delta: EquivPoly,
}

#[derive(Clone, Debug)]
pub struct FastResult {
    pub poly: EquivPoly,
    pub uniform: EquivPoly,
    pub orbits: Vec<OrbitSummary>,
}

/// For a paving matroid: the uniform matroid's polynomial restricted to
/// `W`, minus one induced correction per `W`-orbit of stressed hyperplanes
/// with at least `rank` elements.
pub fn fast_paving(m: &Matroid, group: &PermGroup, which: Which, classes: &Arc<ClassList>) -> Result<FastResult> {
    if !m.is_paving() {
        return Err(Error::NotPaving);
    }
    classes.reps()?;
    let (k, n) = (m.rank(), m.size());
    let uniform_poly = symmetric_restriction(&uniform(which, k, n)?, classes, m.ground())?;
    let mut poly = uniform_poly.clone();
    let mut orbits = Vec::new();
    for orbit in m.stressed_orbits(group)? {
        let members: Vec<Subset> = orbit.iter().map(|(s, _)| *s).collect();
        let delta = delta_on_orbit(k, &members, which, classes)?;
        poly = poly.sub(&delta)?;
        orbits.push(OrbitSummary {
            representative: subset::labels(members[0]),
            orbit_size: members.len(),
            hyperplane_size: subset::size(members[0]),
            delta,
        });
    }
    Ok(FastResult { poly, uniform: uniform_poly, orbits })
}

#[derive(Clone, Debug)]
pub struct GedeonReport {
    pub difference: EquivPoly,
    pub decomposition: Vec<Vec<(String, i64)>>,
    pub passed: bool,
}

/// Decomposes `P_{U_{k,E}} - P_M` over the table; passes when every
/// multiplicity is a nonnegative integer. `p_m` must live on the table's
/// class list.
pub fn gedeon_check(m: &Matroid, p_m: &EquivPoly, table: &CharacterTable) -> Result<GedeonReport> {
    let classes = table.classes();
    let p_u = symmetric_restriction(&uniform(Which::P, m.rank(), m.size())?, classes, m.ground())?;
    let difference = p_u.sub(p_m)?;
    let decomposition = difference.decompose(table)?;
    let passed = decomposition.iter().flatten().all(|(_, mult)| *mult >= 0);
    Ok(GedeonReport { difference, decomposition, passed })
}
