//! JSON and text inputs shared by the command-line tool and tests.

use std::path::Path;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::group::builtins::builtin;
use crate::group::PermGroup;
use crate::perm::Permutation;

/// A permutation written either as a JSON object or as 1-based cycle notation.
#[derive(Deserialize)]
#[serde(untagged)]
enum PermEntry {
    Text(String),
    Json(Permutation),
}

impl PermEntry {
    fn resolve(self, n: Option<usize>) -> Result<Permutation> {
        match (self, n) {
            (PermEntry::Json(p), _) => Ok(p),
            (PermEntry::Text(s), Some(n)) => Permutation::parse(n, &s),
            (PermEntry::Text(s), None) => Permutation::parse_auto(&s),
        }
    }
}

#[derive(Deserialize)]
struct GroupFile {
    n: usize,
    generators: Vec<PermEntry>,
    name: Option<String>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum SetFile {
    List(Vec<PermEntry>),
    Object {
        n: Option<usize>,
        #[serde(alias = "generators")]
        set: Vec<PermEntry>,
    },
}

fn resolve_all(entries: Vec<PermEntry>, n: Option<usize>) -> Result<Vec<Permutation>> {
    let perms = entries.into_iter().map(|e| e.resolve(n)).collect::<Result<Vec<_>>>()?;
    let n = n.or_else(|| perms.iter().map(Permutation::degree).max()).unwrap_or(1);
    perms
        .into_iter()
        .map(|p| if p.degree() <= n { Ok(p.extend(n)) } else { Err(Error::DegreeMismatch(p.degree(), n)) })
        .collect()
}

pub fn parse_group_json(text: &str) -> Result<PermGroup> {
    let file: GroupFile = serde_json::from_str(text).map_err(|e| Error::InvalidInput(format!("group file: {e}")))?;
    let gens = resolve_all(file.generators, Some(file.n))?;
    let g = PermGroup::new(file.n, gens)?;
    Ok(match file.name {
        Some(name) => g.named(name),
        None => g,
    })
}

/// `builtin:NAME`, a bare builtin name such as `A5`, or the path of a JSON group file.
pub fn load_group(spec: &str) -> Result<PermGroup> {
    if let Some(name) = spec.strip_prefix("builtin:") {
        return Ok(builtin(name)?.named(name));
    }
    if !Path::new(spec).exists() {
        if let Ok(g) = builtin(spec) {
            return Ok(g.named(spec));
        }
    }
    parse_group_json(&read(spec)?)
}

/// A JSON array of permutations, or an object with `set` (or `generators`) and optional `n`.
pub fn parse_set_json(text: &str) -> Result<Vec<Permutation>> {
    let file: SetFile = serde_json::from_str(text).map_err(|e| Error::InvalidInput(format!("set file: {e}")))?;
    match file {
        SetFile::List(entries) => resolve_all(entries, None),
        SetFile::Object { n, set } => resolve_all(set, n),
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum VectorsFile {
    List(Vec<Vec<PermEntry>>),
    Object { n: Option<usize>, vectors: Vec<Vec<PermEntry>> },
}

/// Elements of `S^k`, each a list of `k` coordinates: a JSON array of arrays, or an object
/// with `vectors` and optional `n`.
pub fn parse_vectors_json(text: &str) -> Result<Vec<Vec<Permutation>>> {
    let file: VectorsFile =
        serde_json::from_str(text).map_err(|e| Error::InvalidInput(format!("vectors file: {e}")))?;
    let (n, vectors) = match file {
        VectorsFile::List(v) => (None, v),
        VectorsFile::Object { n, vectors } => (n, vectors),
    };
    let sizes: Vec<usize> = vectors.iter().map(Vec::len).collect();
    let flat = resolve_all(vectors.into_iter().flatten().collect(), n)?;
    let mut it = flat.into_iter();
    Ok(sizes.into_iter().map(|k| it.by_ref().take(k).collect()).collect())
}

pub fn load_vectors(path: &str) -> Result<Vec<Vec<Permutation>>> {
    parse_vectors_json(&read(path)?)
}

pub fn load_set(path: &str) -> Result<Vec<Permutation>> {
    parse_set_json(&read(path)?)
}

/// Comma- or space-separated 1-based points, converted to 0-based.
pub fn parse_points(text: &str) -> Result<Vec<usize>> {
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| match s.parse::<usize>() {
            Ok(x) if x >= 1 => Ok(x - 1),
            _ => Err(Error::InvalidInput(format!("bad point {s:?}"))),
        })
        .collect()
}

fn read(path: &str) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::InvalidInput(format!("{path}: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_files() {
        let g =
            parse_group_json(r#"{"n": 4, "generators": ["(1 2 3 4)", {"n": 4, "cycles": [[1, 2]]}], "name": "S4"}"#)
                .unwrap();
        assert_eq!(g.order_u64(), Some(24));
        assert_eq!(g.name(), Some("S4"));
        assert_eq!(load_group("builtin:A5").unwrap().order_u64(), Some(60));
        assert_eq!(load_group("PSL2(7)").unwrap().order_u64(), Some(168));
        assert!(parse_group_json(r#"{"n": 3, "generators": ["(1 4)"]}"#).is_err());
    }

    #[test]
    fn set_files() {
        let s = parse_set_json(r#"["(1 2)", "(2 3 4)"]"#).unwrap();
        assert!(s.iter().all(|p| p.degree() == 4));
        let s = parse_set_json(r#"{"n": 6, "set": ["(1 2)"]}"#).unwrap();
        assert_eq!(s[0].degree(), 6);
        assert_eq!(parse_points("1, 3 5").unwrap(), vec![0, 2, 4]);
        assert!(parse_points("0").is_err());
        let v = parse_vectors_json(r#"[["(1 2 3)", "(1 2 3 4 5)"], ["(1 2)(3 4)", "()"]]"#).unwrap();
        assert_eq!(v.len(), 2);
        assert!(v.iter().flatten().all(|p| p.degree() == 5));
    }
}
