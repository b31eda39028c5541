//! Reading rings, posets and codes from JSON, files, or short names.
//!
//! Every `parse_*` function accepts, in order of precedence: inline JSON
//! (text starting with `{` or `[`), a path to an existing file holding either
//! JSON or a short name, or a short name directly.

use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::code::{LinearCode, Word};
use crate::corpus::named_code;
use crate::error::{Error, Result};
use crate::poset::PosetKind;
use crate::ring::{Elem, RingKind, RingSpec};

/// The JSON code schema: `{"length": 4, "generators": [[1,0,1,0], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CodeSpec {
    pub length: usize,
    pub generators: Vec<Word>,
}

impl CodeSpec {
    pub fn build(&self, ring: Arc<RingSpec>, cap: u64) -> Result<LinearCode> {
        LinearCode::span_with_cap(ring, self.length, self.generators.clone(), cap)
    }
}

fn looks_like_json(s: &str) -> bool {
    matches!(s.trim_start().chars().next(), Some('{' | '['))
}

/// Resolves the file-or-inline convention into the text to parse.
fn resolve(input: &str) -> Result<String> {
    let trimmed = input.trim();
    if looks_like_json(trimmed) {
        return Ok(trimmed.to_string());
    }
    let path = Path::new(trimmed);
    if path.is_file() {
        return std::fs::read_to_string(path)
            .map(|s| s.trim().to_string())
            .map_err(|e| Error::input(format!("{}: {e}", path.display())));
    }
    Ok(trimmed.to_string())
}

/// Syntax errors carry a line and column; schema errors name the field.
fn from_json<T: for<'de> Deserialize<'de>>(what: &str, text: &str) -> Result<T> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| Error::input(format!("{what} JSON syntax: {e}")))?;
    T::deserialize(value).map_err(|e| Error::input(format!("{what} JSON schema: {e}")))
}

/// `F2`, `F3`, `F4`, `F8`, `F9`, ... (fields of prime-power order), `Z4`,
/// `Z6`, ... (integers mod m), `F2u` / `F2+uF2`, `F2v` / `F2+vF2`, or JSON.
pub fn parse_ring(input: &str) -> Result<RingKind> {
    let text = resolve(input)?;
    if looks_like_json(&text) {
        return from_json("ring", &text);
    }
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    match compact.as_str() {
        "F2u" | "F2+uF2" => return Ok(RingKind::F2u),
        "F2v" | "F2+vF2" => return Ok(RingKind::F2v),
        _ => {}
    }
    let bad = || Error::input(format!("unknown ring {text:?}"));
    if let Some(m) = compact.strip_prefix('Z') {
        let m: usize = m.parse().map_err(|_| bad())?;
        return Ok(RingKind::Zm { m });
    }
    if let Some(q) = compact
        .strip_prefix('F')
        .or_else(|| compact.strip_prefix("GF"))
    {
        let q: usize = q.parse().map_err(|_| bad())?;
        let (p, k) = prime_power(q).ok_or_else(|| {
            Error::input(format!("{q} is not a prime power, so F{q} is not a field"))
        })?;
        return Ok(if k == 1 {
            RingKind::Zm { m: p }
        } else {
            RingKind::Gf {
                p,
                k,
                modulus: None,
            }
        });
    }
    Err(bad())
}

fn prime_power(q: usize) -> Option<(usize, usize)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut rest = q;
    let mut k = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        k += 1;
    }
    (rest == 1).then_some((p, k))
}

/// `chain3`, `chain:3`, `antichain:4`, `leveled:2,1,1`, or JSON.
pub fn parse_poset(input: &str) -> Result<PosetKind> {
    let text = resolve(input)?;
    if looks_like_json(&text) {
        return from_json("poset", &text);
    }
    let bad = || Error::input(format!("unknown poset {text:?}"));
    let split_at = text
        .find(|c: char| c.is_ascii_digit() || c == ':')
        .ok_or_else(bad)?;
    let (name, rest) = text.split_at(split_at);
    let rest = rest.strip_prefix(':').unwrap_or(rest);
    let number = || rest.trim().parse::<usize>().map_err(|_| bad());
    match name.trim() {
        "chain" => Ok(PosetKind::Chain { n: number()? }),
        "antichain" => Ok(PosetKind::Antichain { n: number()? }),
        "leveled" | "levels" => Ok(PosetKind::Leveled {
            levels: parse_usize_list(rest)?,
        }),
        _ => Err(bad()),
    }
}

/// Comma-separated non-negative integers.
pub fn parse_usize_list(text: &str) -> Result<Vec<usize>> {
    text.split(',')
        .map(|s| {
            s.trim()
                .parse()
                .map_err(|_| Error::input(format!("expected a list of integers, got {text:?}")))
        })
        .collect()
}

/// A named code (`C1`, `C2`, `ex51`, `hamming74`), comma-separated words
/// written one digit per element index (`1010,0111`), or JSON: either the
/// code schema or a bare list of generator words.
pub fn parse_code(input: &str) -> Result<CodeSpec> {
    let text = resolve(input)?;
    if looks_like_json(&text) {
        if text.starts_with('[') {
            let generators: Vec<Word> = from_json("code", &text)?;
            let length = match generators.first() {
                Some(g) => g.len(),
                None => {
                    return Err(Error::input(
                        "code needs at least one generator to fix its length",
                    ))
                }
            };
            return Ok(CodeSpec { length, generators });
        }
        return from_json("code", &text);
    }
    if let Some(spec) = named_code(&text) {
        return Ok(spec);
    }
    let generators = parse_words(&text)?;
    let length = generators[0].len();
    Ok(CodeSpec { length, generators })
}

/// `0111,1010` → `[[0,1,1,1],[1,0,1,0]]`; each character is one element
/// index, so only rings with at most ten elements can be written this way.
pub fn parse_words(text: &str) -> Result<Vec<Word>> {
    let words: Vec<Word> = text
        .split(',')
        .map(|w| {
            w.trim()
                .chars()
                .map(|c| {
                    c.to_digit(10).map(|d| d as Elem).ok_or_else(|| {
                        Error::input(format!("unknown code {text:?}: {c:?} is not a digit"))
                    })
                })
                .collect::<Result<Word>>()
        })
        .collect::<Result<_>>()?;
    if words.iter().any(Vec::is_empty) {
        return Err(Error::input(format!("empty word in {text:?}")));
    }
    Ok(words)
}

/// Renders a word one element name per position, comma-separated when some
/// name is longer than one character.
pub fn format_word(ring: &RingSpec, w: &[Elem]) -> String {
    let names: Vec<&str> = w.iter().map(|&a| ring.name(a)).collect();
    if names.iter().all(|n| n.chars().count() == 1) {
        names.concat()
    } else {
        format!("({})", names.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ring_shorthands() {
        assert_eq!(parse_ring("F2").unwrap(), RingKind::Zm { m: 2 });
        assert_eq!(parse_ring("F3").unwrap(), RingKind::Zm { m: 3 });
        assert_eq!(
            parse_ring("F4").unwrap(),
            RingKind::Gf {
                p: 2,
                k: 2,
                modulus: None
            }
        );
        assert_eq!(parse_ring("Z4").unwrap(), RingKind::Zm { m: 4 });
        assert_eq!(parse_ring("F2 + uF2").unwrap(), RingKind::F2u);
        assert_eq!(parse_ring("F2v").unwrap(), RingKind::F2v);
        assert_eq!(
            parse_ring(r#"{"kind":"GF","p":2,"k":2,"modulus":[1,1,1]}"#).unwrap(),
            RingKind::Gf {
                p: 2,
                k: 2,
                modulus: Some(vec![1, 1, 1])
            }
        );
        assert!(parse_ring("F6").is_err());
        assert!(parse_ring("Q").is_err());
        assert!(parse_ring(r#"{"kind":"Zq"}"#).is_err());
    }

    #[test]
    fn poset_shorthands() {
        assert_eq!(parse_poset("chain3").unwrap(), PosetKind::Chain { n: 3 });
        assert_eq!(parse_poset("chain:3").unwrap(), PosetKind::Chain { n: 3 });
        assert_eq!(
            parse_poset("antichain:4").unwrap(),
            PosetKind::Antichain { n: 4 }
        );
        assert_eq!(
            parse_poset("leveled:2,1,1").unwrap(),
            PosetKind::Leveled {
                levels: vec![2, 1, 1]
            }
        );
        assert_eq!(
            parse_poset(r#"{"kind":"cover","n":4,"covers":[[1,3],[2,3],[3,4]]}"#).unwrap(),
            PosetKind::Cover {
                n: 4,
                covers: vec![[1, 3], [2, 3], [3, 4]]
            }
        );
        // parses; rejected later when the poset is built
        assert_eq!(
            parse_poset("antichain:0").unwrap(),
            PosetKind::Antichain { n: 0 }
        );
        assert!(parse_poset("tree:3").is_err());
        assert!(parse_poset("chain:x").is_err());
    }

    #[test]
    fn code_inputs() {
        assert_eq!(
            parse_code("C1").unwrap(),
            CodeSpec {
                length: 3,
                generators: vec![vec![0, 0, 1]]
            }
        );
        assert_eq!(parse_code("1010, 0111").unwrap().generators.len(), 2);
        assert_eq!(
            parse_code(r#"{"length":4,"generators":[[1,0,1,0],[0,1,1,1]]}"#).unwrap(),
            parse_code("[[1,0,1,0],[0,1,1,1]]").unwrap()
        );
        assert!(parse_code(r#"{"length":4,"gens":[]}"#).is_err());
        assert!(parse_code("10a0").is_err());
        assert!(parse_code("[]").is_err());
    }

    #[test]
    fn files_are_read() {
        let dir = std::env::temp_dir().join(format!("pwe-io-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("ring.json");
        std::fs::write(&path, r#"{"kind":"Zm","m":4}"#).unwrap();
        assert_eq!(
            parse_ring(path.to_str().unwrap()).unwrap(),
            RingKind::Zm { m: 4 }
        );
        std::fs::remove_dir_all(&dir).unwrap();
    }

    #[test]
    fn word_rendering() {
        let f2 = RingSpec::new(RingKind::Zm { m: 2 }).unwrap();
        assert_eq!(format_word(&f2, &[1, 0, 1]), "101");
        let f2u = RingSpec::new(RingKind::F2u).unwrap();
        assert_eq!(format_word(&f2u, &[1, 3]), "(1,1+u)");
    }
}
