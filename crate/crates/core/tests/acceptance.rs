//! One PASS/FAIL line per acceptance criterion.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use eqkl::assets::{vamos_group, vamos_table};
use eqkl::equivariant::{
    fast_paving, format_decomposition, gedeon_check, symmetric_restriction, uniform, BruteEngine, BruteOptions,
    EquivPoly, Which,
};
use eqkl::groups::{
    induce_from_stabilizer, induce_symmetric_on_orbit, symmetric_table, CharacterTable, ClassFunction, EnumeratedGroup,
    PermGroup, Permutation, QuadraticValue,
};
use eqkl::matroid::{Matroid, MatroidFile};
use eqkl::subset::{self, Subset};
use eqkl::symrep::{
    complete_symm, correction_p, correction_q, correction_r, correction_z, uniform_p, uniform_q, SymmRep,
};

use common::{asset, FlatLattice};

/// Criteria whose expected data cannot be met, with the reason.
const UNATTAINABLE: &[(usize, &str)] =
    &[(3, "expected M24 linear term chi8 + chi9 has dimension 253 + 483 = 736, but the required dimension is 735")];

struct Check {
    ok: bool,
    lines: Vec<String>,
}

impl Check {
    fn new() -> Self {
        Check { ok: true, lines: Vec::new() }
    }

    fn expect(&mut self, ok: bool, line: impl Into<String>) {
        let line = line.into();
        self.lines.push(if ok { line } else { format!("MISMATCH {line}") });
        self.ok &= ok;
    }

    fn within(&mut self, what: &str, took: Duration, limit: Duration) {
        self.expect(took <= limit, format!("{what} took {:.2?} (limit {limit:?})", took));
    }
}

const STEINER: [(&str, &str, &[i64], &str); 5] = [
    ("s_4_5_11", "m11", &[1, 55, 55], "chi1 + (chi5 + chi8)*t + (chi5 + chi8)*t^2"),
    (
        "s_5_6_12",
        "m12",
        &[1, 120, 429],
        "chi1 + (chi3 + chi7 + chi8)*t + (chi3 + chi7 + chi8 + chi11 + chi12 + chi14)*t^2",
    ),
    ("s_3_6_22", "m22", &[1, 55], "chi1 + chi5*t"),
    ("s_4_7_23", "m23", &[1, 230, 253], "chi1 + chi5*t + chi9*t^2"),
    ("s_5_8_24", "m24", &[1, 735, 4830], "chi1 + (chi8 + chi9)*t + (chi9 + chi14 + chi21)*t^2"),
];

struct Mathieu {
    steiner: &'static str,
    group: &'static str,
    dims: &'static [i64],
    row: &'static str,
    matroid: Matroid,
    w: PermGroup,
    table: CharacterTable,
    p: EquivPoly,
    took: Duration,
}

fn mathieu() -> Vec<Mathieu> {
    STEINER
        .iter()
        .map(|&(steiner, group, dims, row)| {
            let start = Instant::now();
            let system = MatroidFile::load(asset(&format!("{steiner}.json"))).unwrap().steiner().unwrap().unwrap();
            let matroid = system.matroid().unwrap();
            let w = PermGroup::load(asset(&format!("{group}.json"))).unwrap();
            let table = CharacterTable::load(asset(&format!("{group}_table.json"))).unwrap();
            let p = fast_paving(&matroid, &w, Which::P, table.classes()).unwrap().poly;
            Mathieu { steiner, group, dims, row, matroid, w, table, p, took: start.elapsed() }
        })
        .collect()
}

fn int(v: &QuadraticValue) -> i64 {
    i64::try_from(v.as_integer().expect("integer value")).expect("fits in i64")
}

fn degree(table: &CharacterTable, name: &str) -> i64 {
    int(&table.irreducible(name).expect("irreducible exists").values[0])
}

fn criterion_1(residuals: &mut Vec<(String, bool)>) -> Check {
    let mut c = Check::new();
    let m = Matroid::vamos();
    let w = vamos_group();
    let table = vamos_table().unwrap();

    let start = Instant::now();
    let fast = fast_paving(&m, &w, Which::P, table.classes()).unwrap().poly;
    c.within("fast path", start.elapsed(), Duration::from_secs(30));
    c.expect(fast.dims() == [1, 33], format!("fast path dimensions {:?}", fast.dims()));

    let start = Instant::now();
    let engine = BruteEngine::new(&w, BruteOptions::default()).unwrap();
    let brute = engine.compute(&m, Which::P).unwrap();
    c.within("brute path", start.elapsed(), Duration::from_secs(30));
    c.expect(brute.dims() == [1, 33], format!("brute path dimensions {:?}", brute.dims()));
    let moved = brute.transfer(table.classes(), |g| engine.group().class_of(g)).unwrap();
    c.expect(moved == fast, "brute and fast class functions agree");
    residuals.push(("Vamos under D4 x D4".into(), engine.q_residual(&m).unwrap().is_zero()));

    let d = fast.decompose(&table).unwrap();
    let linear = &d[1];
    let honest = linear.iter().all(|(_, m)| *m > 0);
    let total: i64 = linear.iter().map(|(name, mult)| mult * degree(&table, name)).sum();
    c.expect(honest && total == 33, format!("linear term honest, dimension {total}"));
    c.lines.push(format!("computed: P(t) = {}", format_decomposition(&d)));

    // the reference sum lists chi5*chi5 where chi5*chi4 belongs
    let printed: [(&str, i64); 15] = [
        ("chi1*chi1", 3),
        ("chi1*chi2", 1),
        ("chi1*chi4", 1),
        ("chi2*chi1", 2),
        ("chi2*chi2", 1),
        ("chi2*chi4", 1),
        ("chi4*chi1", 1),
        ("chi4*chi2", 1),
        ("chi1*chi5", 1),
        ("chi2*chi5", 1),
        ("chi4*chi5", 1),
        ("chi5*chi1", 2),
        ("chi5*chi2", 1),
        ("chi5*chi5", 1),
        ("chi5*chi5", 2),
    ];
    let printed_dim: i64 = printed.iter().map(|(name, mult)| mult * degree(&table, name)).sum();
    c.lines.push(format!("known discrepancy: the reference linear-term sum has dimension {printed_dim}, not 33"));
    c
}

fn criterion_2(rows: &[Mathieu]) -> Check {
    let mut c = Check::new();
    for r in rows {
        let limit = if r.group == "m11" || r.group == "m12" { 120 } else { 600 };
        c.expect(r.p.dims() == r.dims, format!("{}/{}: {:?}", r.steiner, r.group, r.p.dims()));
        c.within(r.group, r.took, Duration::from_secs(limit));
    }
    c
}

fn criterion_3(rows: &[Mathieu]) -> Check {
    let mut c = Check::new();
    for r in rows {
        let got = format_decomposition(&r.p.decompose(&r.table).unwrap());
        let ok = got == r.row;
        c.expect(ok, format!("{}: {got}", r.group));
        if !ok {
            c.lines.push(format!("expected: {}", r.row));
        }
    }
    c
}

fn criterion_4(residuals: &mut Vec<(String, bool)>) -> Check {
    let mut c = Check::new();
    let start = Instant::now();
    let mut compared = 0;
    let mut agree = true;
    for n in 1..=7 {
        for (label, group) in [("trivial", PermGroup::trivial(n)), ("symmetric", PermGroup::symmetric(n))] {
            let engine = BruteEngine::new(&group, BruteOptions::default()).unwrap();
            let classes = engine.group().classes().clone();
            for k in 1..=n {
                let m = Matroid::uniform(k, n).unwrap();
                for which in [Which::P, Which::Q, Which::Z] {
                    let closed = symmetric_restriction(&uniform(which, k, n).unwrap(), &classes, m.ground()).unwrap();
                    let ok = engine.compute(&m, which).unwrap() == closed;
                    if !ok {
                        c.lines.push(format!("MISMATCH {which} of U{k},{n} under {label}"));
                    }
                    agree &= ok;
                    compared += 1;
                }
                residuals.push((format!("U{k},{n} under {label}"), engine.q_residual(&m).unwrap().is_zero()));
            }
        }
    }
    c.expect(agree, format!("{compared} brute/closed-form comparisons"));
    c.within("suite", start.elapsed(), Duration::from_secs(300));
    c
}

fn criterion_5() -> Check {
    let mut c = Check::new();
    let start = Instant::now();
    let mut count = 0;
    for h in 2..=7 {
        for k in 2..=h {
            let p = uniform_p(k, h + 1).unwrap().restrict_one().unwrap().sub(&uniform_p(k - 1, h).unwrap());
            let q = uniform_q(k, h + 1).unwrap().restrict_one().unwrap().sub(&uniform_q(k - 1, h).unwrap());
            let (cp, cz) = complete_symm(&correction_r(k, h).unwrap(), k).unwrap();
            let ok = p == correction_p(k, h).unwrap()
                && q == correction_q(k, h).unwrap()
                && cp == correction_p(k, h).unwrap()
                && cz == correction_z(k, h).unwrap();
            if !ok {
                c.lines.push(format!("MISMATCH k={k} h={h}"));
            }
            c.ok &= ok;
            count += 1;
        }
    }
    c.lines.push(format!("{count} (k, h) pairs"));
    c.within("suite", start.elapsed(), Duration::from_secs(60));
    c
}

fn criterion_6(residuals: &[(String, bool)]) -> Check {
    let mut c = Check::new();
    let bad: Vec<&str> = residuals.iter().filter(|(_, ok)| !ok).map(|(name, _)| name.as_str()).collect();
    c.expect(bad.is_empty(), format!("{} instances, nonzero: {bad:?}", residuals.len()));
    c
}

fn sparse_paving(rng: &mut StdRng) -> Matroid {
    let n = rng.gen_range(4..=7);
    let k = rng.gen_range(2..n);
    let all = subset::k_subsets_of(subset::full(n), k);
    let mut chosen: Vec<Subset> = Vec::new();
    for _ in 0..rng.gen_range(0..6) {
        let c = all[rng.gen_range(0..all.len())];
        if chosen.iter().all(|&d| subset::size(c & d) + 2 <= k) {
            chosen.push(c);
        }
    }
    Matroid::from_bases(subset::full(n), k, all.into_iter().filter(|b| !chosen.contains(b))).unwrap()
}

fn induction_agrees(w: &PermGroup, set: Subset) -> bool {
    let g = EnumeratedGroup::new(w, 10_000).unwrap();
    let classes = g.classes().clone();
    let h = g.subset_stabilizer(set);
    let sign = SymmRep::sign(subset::size(set));
    let phi = |x: &Permutation| sign.character(&x.cycle_type_on(set)).unwrap();
    let orbit = w.orbit_transversal(set);
    let members: Vec<Subset> = orbit.iter().map(|(s, _)| *s).collect();
    let by_orbit = induce_symmetric_on_orbit(std::slice::from_ref(&sign), &members, &classes).unwrap().remove(0);
    let by_transversal = induce_from_stabilizer(&|x| Ok(QuadraticValue::integer(phi(x))), &orbit, &classes).unwrap();
    // Frobenius: <Ind phi, 1_G> = <phi, 1_H>
    let on_g: i64 = (0..classes.len()).map(|c| classes.size(c) as i64 * int(by_orbit.value(c))).sum();
    let on_h: i64 = h.elements().iter().map(&phi).sum();
    let coset_ok = (0..classes.len()).all(|c| {
        let x = classes.rep(c).unwrap();
        let total: i64 = g
            .elements()
            .iter()
            .map(|y| x.conjugate_by(y))
            .filter(|y| y.apply_subset(set) == set)
            .map(|y| phi(&y))
            .sum();
        QuadraticValue::integer(total) == by_orbit.value(c) * &QuadraticValue::integer(h.order() as i64)
    });
    by_orbit == by_transversal && on_g * h.order() as i64 == on_h * g.order() as i64 && coset_ok
}

fn criterion_7() -> Check {
    let mut c = Check::new();
    let mut rng = StdRng::seed_from_u64(7);
    let (mut shape, mut loops, mut simple) = (true, true, true);
    for _ in 0..30 {
        let m = sparse_paving(&mut rng);
        let n = m.size();
        let engine = BruteEngine::new(&PermGroup::trivial(n), BruteOptions::default()).unwrap();
        let classes = engine.group().classes().clone();
        let (k, p, z) = (m.rank(), engine.compute(&m, Which::P).unwrap(), engine.compute(&m, Which::Z).unwrap());
        shape &= z.is_palindromic(k)
            && 2 * p.t_degree().unwrap() < k
            && p.coeff(0) == ClassFunction::constant(classes.clone(), 1);

        let looped = m.direct_sum(&Matroid::uniform(0, 1).unwrap()).unwrap();
        let e = BruteEngine::new(&PermGroup::trivial(n + 1), BruteOptions::default()).unwrap();
        loops &= e.compute(&looped, Which::P).unwrap().is_zero() && e.compute(&looped, Which::Q).unwrap().is_zero();

        if n < 7 {
            let ext = m.parallel_extension(rng.gen_range(0..n)).unwrap();
            simple &= e.compute(&ext, Which::Z).unwrap().dims() == z.dims() && FlatLattice::new(&ext).z() == z.dims();
        }
    }
    c.expect(shape, "Z palindromic, deg P < k/2, P(0) trivial on 30 sparse paving matroids");
    c.expect(loops, "P = Q = 0 with a loop");
    c.expect(simple, "Z unchanged by parallel extension");

    let m11 = PermGroup::load(asset("m11.json")).unwrap();
    let groups = [(vamos_group(), 8), (PermGroup::symmetric(6), 6), (m11, 11)];
    let mut induction = true;
    for (w, degree) in &groups {
        for _ in 0..3 {
            let set = rng.gen_range(1..(1u64 << degree));
            induction &= induction_agrees(w, set);
        }
    }
    c.expect(induction, "Frobenius reciprocity and coset formula on D4 x D4, S6, M11");

    let orth = (1..=8).all(|n| symmetric_table(n).validate(Some(&PermGroup::symmetric(n)), 100_000).passed());
    c.expect(orth, "S_n character tables orthonormal for n <= 8");

    let mut blocks = Vec::new();
    for (steiner, ..) in STEINER {
        let system = MatroidFile::load(asset(&format!("{steiner}.json"))).unwrap().steiner().unwrap().unwrap();
        match system.validate() {
            Ok(r) => blocks.push(r.blocks),
            Err(_) => c.ok = false,
        }
    }
    c.expect(blocks.last() == Some(&759), format!("Steiner block lists valid, block counts {blocks:?}"));
    c
}

fn criterion_8(rows: &[Mathieu]) -> Check {
    let mut c = Check::new();
    let table = vamos_table().unwrap();
    let m = Matroid::vamos();
    let p = fast_paving(&m, &vamos_group(), Which::P, table.classes()).unwrap().poly;
    c.expect(gedeon_check(&m, &p, &table).unwrap().passed, "Vamos");
    for r in rows {
        let ok = r.matroid.check_preserved(&r.w).is_ok() && gedeon_check(&r.matroid, &r.p, &r.table).unwrap().passed;
        c.expect(ok, r.steiner);
    }
    c
}

type Runner<'a> = Box<dyn FnOnce(&mut Vec<(String, bool)>) -> Check + 'a>;

fn main() -> ExitCode {
    let mut residuals = Vec::new();
    let rows = mathieu();
    let criteria: Vec<(usize, &str, Runner)> = vec![
        (1, "Vamos P = 1 + 33t, fast and brute", Box::new(criterion_1)),
        (2, "Steiner/Mathieu dimension vectors", Box::new(|_| criterion_2(&rows))),
        (3, "Mathieu decompositions", Box::new(|_| criterion_3(&rows))),
        (4, "brute recursion vs closed forms, k <= n <= 7", Box::new(criterion_4)),
        (5, "corrections vs uniform differences", Box::new(|_| criterion_5())),
        (6, "Q defining-relation residual", Box::new(|r| criterion_6(r))),
        (7, "property suites", Box::new(|_| criterion_7())),
        (8, "honesty of P_U - P_M", Box::new(|_| criterion_8(&rows))),
    ];
    let mut unexpected = 0;
    for (n, name, run) in criteria {
        let start = Instant::now();
        let check = run(&mut residuals);
        let verdict = if check.ok { "PASS" } else { "FAIL" };
        println!("criterion {n}: {verdict} {name} ({:.2?})", start.elapsed());
        for line in &check.lines {
            println!("    {line}");
        }
        if !check.ok {
            match UNATTAINABLE.iter().find(|(c, _)| *c == n) {
                Some((_, why)) => println!("    unattainable: {why}"),
                None => unexpected += 1,
            }
        }
    }
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
