use std::process::ExitCode;

use clap::Args;
use serde_json::json;

use eqkl::equivariant::{
    fast_paving, format_decomposition, gedeon_check, symmetric_restriction, uniform, BruteEngine, BruteOptions,
    EquivPoly, ResultDoc, TermDoc, Which,
};
use eqkl::groups::{CharacterTable, EnumeratedGroup, PermGroup};
use eqkl::matroid::{Matroid, MatroidFile};
use eqkl::symrep::{correction_p, correction_q, correction_r, correction_z};
use eqkl::{subset, Error};

use crate::{input, CorrectionKind, Format, Method, Poly, ValidateTarget};

#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Invalid(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Invalid(e.to_string())
    }
}

impl Failure {
    pub fn report(&self) -> ExitCode {
        let (kind, message, code) = match self {
            Failure::Usage(m) => ("usage", m, 2),
            Failure::Invalid(m) => ("failure", m, 1),
        };
        eprintln!("{}", json!({ "error": kind, "message": message }));
        ExitCode::from(code)
    }
}

type Outcome = Result<ExitCode, Failure>;

#[derive(Args)]
pub struct ComputeArgs {
    #[arg(long, value_enum, ignore_case = true)]
    poly: Poly,
    /// `vamos`, `uniform:K,N`, inline JSON or a matroid file.
    #[arg(long)]
    matroid: String,
    /// `trivial`, `symmetric`, `vamos` or a group file.
    #[arg(long, default_value = "trivial")]
    group: String,
    /// Character table file; built in for the named groups.
    #[arg(long)]
    table: Option<String>,
    #[arg(long, value_enum, default_value_t = Method::Auto)]
    method: Method,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
pub struct GedeonArgs {
    #[arg(long)]
    matroid: String,
    #[arg(long, default_value = "trivial")]
    group: String,
    #[arg(long)]
    table: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

struct Inputs {
    matroid: Matroid,
    group: PermGroup,
    table: Option<CharacterTable>,
}

fn load(matroid: &str, group: &str, table: Option<&str>, bound: usize) -> Result<Inputs, Failure> {
    let m = input::matroid(matroid)?;
    eprintln!("eqkl: matroid of rank {} on {} points", m.rank(), m.size());
    let g = input::group(group, m.size())?;
    m.check_preserved(&g)?;
    let table = input::table(table, group, m.size())?;
    if let Some(t) = &table {
        let report = t.validate(Some(&g), bound);
        if !report.passed() {
            return Err(Failure::Invalid(format!("character table: {}", report.failures.join("; "))));
        }
        eprintln!("eqkl: table with {} classes, group order {}", report.classes, report.group_order);
    }
    Ok(Inputs { matroid: m, group: g, table })
}

fn resolve(method: Method, m: &Matroid) -> Result<Method, Failure> {
    match method {
        Method::Auto if m.is_paving() => Ok(Method::Paving),
        Method::Auto => Ok(Method::Brute),
        Method::Uniform if !m.is_uniform() => Err(Failure::Usage("--method uniform needs a uniform matroid".into())),
        Method::Paving if !m.is_paving() => Err(Failure::Usage("--method paving needs a paving matroid".into())),
        other => Ok(other),
    }
}

fn evaluate(inputs: &Inputs, which: Which, method: Method, bound: usize) -> Result<EquivPoly, Failure> {
    let m = &inputs.matroid;
    let classes = || -> Result<_, Failure> {
        Ok(match &inputs.table {
            Some(t) => t.classes().clone(),
            None => EnumeratedGroup::new(&inputs.group, bound)?.classes().clone(),
        })
    };
    let poly = match method {
        Method::Uniform => symmetric_restriction(&uniform(which, m.rank(), m.size())?, &classes()?, m.ground())?,
        Method::Paving => {
            let result = fast_paving(m, &inputs.group, which, &classes()?)?;
            eprintln!("eqkl: {} orbit(s) of stressed hyperplanes", result.orbits.len());
            for o in &result.orbits {
                eprintln!(
                    "eqkl:   {:?}: {} hyperplane(s) of size {}",
                    o.representative, o.orbit_size, o.hyperplane_size
                );
            }
            result.poly
        }
        Method::Brute | Method::Auto => {
            let engine = BruteEngine::new(&inputs.group, BruteOptions { bound, ..BruteOptions::default() })?;
            eprintln!("eqkl: group of order {}", engine.group().order());
            let poly = engine.compute(m, which)?;
            match &inputs.table {
                Some(t) => poly.transfer(t.classes(), |g| engine.group().class_of(g))?,
                None => poly,
            }
        }
    };
    Ok(poly)
}

fn method_name(method: Method) -> &'static str {
    match method {
        Method::Auto => "auto",
        Method::Brute => "brute",
        Method::Paving => "paving",
        Method::Uniform => "uniform",
    }
}

pub fn compute(args: &ComputeArgs, bound: usize) -> Outcome {
    let inputs = load(&args.matroid, &args.group, args.table.as_deref(), bound)?;
    let method = resolve(args.method, &inputs.matroid)?;
    eprintln!("eqkl: method {}", method_name(method));
    let which = Which::from(args.poly);
    let poly = evaluate(&inputs, which, method, bound)?;
    let decomposition = inputs.table.as_ref().map(|t| poly.decompose(t)).transpose()?;
    match args.format {
        Format::Json => {
            println!("{}", ResultDoc::new(which, &poly, decomposition.as_deref(), method_name(method)).to_json());
        }
        Format::Text => {
            println!("polynomial: {which}");
            println!("method: {}", method_name(method));
            println!("dimensions: {:?}", poly.dims());
            match &decomposition {
                Some(d) => println!("{which}(t) = {}", format_decomposition(d)),
                None => {
                    println!("classes: {}", poly.classes().names().join(" "));
                    for (i, c) in poly.coeffs().iter().enumerate() {
                        let values: Vec<String> = c.values().iter().map(ToString::to_string).collect();
                        println!("t^{i}: {}", values.join(" "));
                    }
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

pub fn correction(kind: CorrectionKind, k: usize, h: usize) -> Outcome {
    let poly = match kind {
        CorrectionKind::P => correction_p(k, h),
        CorrectionKind::Q => correction_q(k, h),
        CorrectionKind::Z => correction_z(k, h),
        CorrectionKind::R => correction_r(k, h),
    };
    match poly {
        Ok(p) => {
            println!("{p}");
            Ok(ExitCode::SUCCESS)
        }
        Err(Error::InvalidParameters(m)) => Err(Failure::Usage(m)),
        Err(e) => Err(e.into()),
    }
}

fn verdict(lines: &[String], passed: bool) -> ExitCode {
    for line in lines {
        println!("{line}");
    }
    if passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

pub fn validate(target: ValidateTarget, path: &str, group: Option<&str>, bound: usize) -> Outcome {
    match target {
        ValidateTarget::Steiner => validate_steiner(path, group),
        ValidateTarget::Table => {
            let table = CharacterTable::load(path).map_err(missing(path))?;
            let degree = table.classes().reps()?.first().map_or(0, |g| g.degree());
            let g = group.map(|spec| input::group(spec, degree)).transpose()?;
            let report = table.validate(g.as_ref(), bound);
            let mut lines: Vec<String> = report.failures.iter().map(|f| format!("FAIL: {f}")).collect();
            if report.passed() {
                lines.push(format!(
                    "PASS: order {}, {} classes, {} irreducibles, orthogonality exact",
                    report.group_order,
                    report.classes,
                    table.irreducibles().len()
                ));
            }
            lines.extend(report.notes.iter().map(|n| format!("note: {n}")));
            Ok(verdict(&lines, report.passed()))
        }
        ValidateTarget::Group => {
            let g = PermGroup::load(path).map_err(missing(path))?;
            let order = g.stab_chain().order();
            let classes = if order <= bound.into() {
                format!("{} classes", EnumeratedGroup::new(&g, bound)?.classes().len())
            } else {
                format!("classes not enumerated above {bound} elements")
            };
            let line =
                format!("PASS: degree {}, {} generators, order {order}, {classes}", g.degree(), g.generators().len());
            Ok(verdict(&[line], true))
        }
        ValidateTarget::Matroid => {
            let m = input::matroid(path)?;
            let paving = m.is_paving();
            let stressed = if paving {
                m.hyperplanes().into_iter().filter(|&h| m.is_stressed(h) && subset::size(h) >= m.rank()).count()
            } else {
                0
            };
            let line = format!(
                "PASS: rank {} on {} points, {} bases, paving: {}, uniform: {}, stressed hyperplanes of size >= rank: {stressed}",
                m.rank(),
                m.size(),
                m.bases().len(),
                if paving { "yes" } else { "no" },
                if m.is_uniform() { "yes" } else { "no" },
            );
            Ok(verdict(&[line], true))
        }
    }
}

fn missing(path: &str) -> impl Fn(Error) -> Failure + '_ {
    move |e| match e {
        Error::Io(_) if !std::path::Path::new(path).exists() => Failure::Usage(format!("no such file: {path}")),
        other => other.into(),
    }
}

fn validate_steiner(path: &str, group: Option<&str>) -> Outcome {
    let file = MatroidFile::load(path).map_err(missing(path))?;
    let Some(system) = file.steiner()? else {
        return Err(Failure::Usage(format!("{path} is not a Steiner system file")));
    };
    let name = format!("S({},{},{})", system.d, system.block_size, system.n);
    let report = match system.validate() {
        Ok(r) => r,
        Err(Error::Steiner { witness, count }) => {
            let line = format!("FAIL: {name}: the {}-subset {witness:?} lies in {count} blocks", witness.len());
            return Ok(verdict(&[line], false));
        }
        Err(e) => return Err(e.into()),
    };
    let mut lines = vec![format!(
        "PASS: {name}, {} blocks, each of the {} {}-subsets in exactly one block",
        report.blocks, report.d_subsets, system.d
    )];
    if let Some(spec) = group {
        let g = input::group(spec, system.n)?;
        match system.check_preserved(&g) {
            Ok(()) => lines.push(format!("PASS: all {} generators preserve the blocks", g.generators().len())),
            Err(e) => {
                lines.push(format!("FAIL: {e}"));
                return Ok(verdict(&lines, false));
            }
        }
    }
    Ok(verdict(&lines, true))
}

pub fn gedeon(args: &GedeonArgs, bound: usize) -> Outcome {
    let inputs = load(&args.matroid, &args.group, args.table.as_deref(), bound)?;
    let Some(table) = &inputs.table else {
        return Err(Failure::Usage("gedeon needs --table for this group".into()));
    };
    let method = resolve(Method::Auto, &inputs.matroid)?;
    eprintln!("eqkl: method {}", method_name(method));
    let p = evaluate(&inputs, Which::P, method, bound)?;
    let report = gedeon_check(&inputs.matroid, &p, table)?;
    match args.format {
        Format::Json => {
            let terms: Vec<Vec<TermDoc>> = report
                .decomposition
                .iter()
                .map(|d| d.iter().map(|(n, m)| TermDoc { irreducible: n.clone(), multiplicity: *m }).collect())
                .collect();
            let doc = json!({
                "passed": report.passed,
                "dimensions": report.difference.dims(),
                "decomposition": terms,
            });
            println!("{doc}");
        }
        Format::Text => {
            println!("dimensions of P_U - P_M: {:?}", report.difference.dims());
            for (i, terms) in report.decomposition.iter().enumerate() {
                let row: Vec<String> = terms.iter().map(|(n, m)| format!("{m}*{n}")).collect();
                println!("t^{i}: {}", if row.is_empty() { "0".to_string() } else { row.join(" + ") });
            }
            println!("{}", if report.passed { "PASS" } else { "FAIL" });
        }
    }
    Ok(if report.passed { ExitCode::SUCCESS } else { ExitCode::from(1) })
}
