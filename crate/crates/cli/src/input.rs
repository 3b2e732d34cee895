use std::path::Path;

use eqkl::assets;
use eqkl::groups::{symmetric_table, trivial_table, CharacterTable, PermGroup};
use eqkl::matroid::{Matroid, MatroidFile};

use crate::commands::Failure;

/// `vamos`, `uniform:K,N`, inline JSON, or a matroid file.
pub fn matroid(spec: &str) -> Result<Matroid, Failure> {
    let spec = spec.trim();
    if spec == "vamos" {
        return Ok(Matroid::vamos());
    }
    if let Some(rest) = spec.strip_prefix("uniform:") {
        let parts: Vec<&str> = rest.split(',').map(str::trim).collect();
        let parsed: Option<Vec<usize>> = parts.iter().map(|p| p.parse().ok()).collect();
        return match parsed.as_deref() {
            Some(&[k, n]) => Ok(Matroid::uniform(k, n)?),
            _ => Err(Failure::Usage(format!("expected uniform:K,N, got {spec:?}"))),
        };
    }
    let file = if spec.starts_with('{') { MatroidFile::from_json(spec)? } else { MatroidFile::load(existing(spec)?)? };
    Ok(file.matroid()?)
}

/// `trivial`, `symmetric`, `vamos`, or a group file.
pub fn group(spec: &str, degree: usize) -> Result<PermGroup, Failure> {
    let g = match spec.trim() {
        "trivial" => PermGroup::trivial(degree),
        "symmetric" => PermGroup::symmetric(degree),
        "vamos" => assets::vamos_group(),
        path => PermGroup::load(existing(path)?)?,
    };
    if g.degree() != degree {
        return Err(Failure::Usage(format!("group has degree {}, the matroid has {degree} points", g.degree())));
    }
    Ok(g)
}

/// An explicit table, or the built-in one matching a named group.
pub fn table(spec: Option<&str>, group_spec: &str, degree: usize) -> Result<Option<CharacterTable>, Failure> {
    let spec = match (spec, group_spec.trim()) {
        (Some(s), _) => s,
        (None, named @ ("trivial" | "symmetric" | "vamos")) => named,
        (None, _) => return Ok(None),
    };
    Ok(Some(match spec {
        "trivial" => trivial_table(degree),
        "symmetric" => symmetric_table(degree),
        "vamos" => assets::vamos_table()?,
        path => CharacterTable::load(existing(path)?)?,
    }))
}

fn existing(path: &str) -> Result<&str, Failure> {
    if Path::new(path).exists() {
        Ok(path)
    } else {
        Err(Failure::Usage(format!("no such file: {path}")))
    }
}
