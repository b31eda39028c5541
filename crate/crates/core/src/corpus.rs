//! Worked examples with known answers, checked against golden text
//! fixtures, plus the named codes the CLI accepts.
//!
//! Fixtures are `key: value` lines in the usual `z_{1:10}` notation. An
//! expected polynomial is parsed and compared structurally with the computed
//! one, so term order in a fixture does not matter.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde_json::{json, Value};

use crate::code::{LinearCode, Word};
use crate::enumerators::{
    byte_enumerator, complete_level_enumerator, level_enumerator, mspotty_enumerator,
    poset_weight_enumerator, WeightSpectrum,
};
use crate::error::{Error, Result, DEFAULT_CAP};
use crate::io::{format_word, parse_words, CodeSpec};
use crate::macwilliams::{
    byte_transform, complete_transform, level_transform, mspotty_transform, poset_negative_control,
};
use crate::poly::{parse_poly, VarStyle};
use crate::poset::{LevelStructure, Poset};
use crate::ring::{Character, RingKind, RingSpec};
use crate::{Int, Poly};

/// Codes reachable by name from the command line.
pub fn named_code(name: &str) -> Option<CodeSpec> {
    let (length, generators): (usize, Vec<Word>) = match name {
        "C1" => (3, vec![vec![0, 0, 1]]),
        "C2" => (3, vec![vec![1, 1, 1]]),
        "ex51" => (4, vec![vec![1, 0, 1, 0], vec![0, 1, 1, 1]]),
        "hamming74" => (
            7,
            vec![
                vec![1, 0, 0, 0, 1, 1, 0],
                vec![0, 1, 0, 0, 1, 0, 1],
                vec![0, 0, 1, 0, 0, 1, 1],
                vec![0, 0, 0, 1, 1, 1, 1],
            ],
        ),
        _ => return None,
    };
    Some(CodeSpec { length, generators })
}

pub const NAMED_CODES: [&str; 4] = ["C1", "C2", "ex51", "hamming74"];

/// One comparison within an example.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    /// Fixture text, verbatim.
    pub expected: String,
    /// Canonical rendering of the computed value.
    pub actual: String,
    pub pass: bool,
}

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub id: &'static str,
    pub description: &'static str,
    pub checks: Vec<Check>,
}

impl CorpusEntry {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "id": self.id,
            "description": self.description,
            "pass": self.passed(),
            "checks": self.checks.iter().map(|c| json!({
                "name": c.name,
                "expected": c.expected,
                "actual": c.actual,
                "pass": c.pass,
            })).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for CorpusEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = |ok: bool| if ok { "PASS" } else { "FAIL" };
        writeln!(
            f,
            "{} {} — {}",
            mark(self.passed()),
            self.id,
            self.description
        )?;
        for c in &self.checks {
            writeln!(f, "  {} {}", mark(c.pass), c.name)?;
            if !c.pass {
                writeln!(f, "    expected: {}", c.expected)?;
                writeln!(f, "    actual:   {}", c.actual)?;
            }
        }
        Ok(())
    }
}

struct Fixture {
    file: &'static str,
    values: BTreeMap<&'static str, &'static str>,
}

impl Fixture {
    fn load(file: &'static str, text: &'static str) -> Result<Self> {
        let mut values = BTreeMap::new();
        for line in text.lines().map(str::trim) {
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line
                .split_once(':')
                .filter(|(k, _)| !k.contains('{'))
                .ok_or_else(|| Error::input(format!("{file}: malformed line {line:?}")))?;
            values.insert(key.trim(), value.trim());
        }
        Ok(Fixture { file, values })
    }

    fn get(&self, key: &str) -> Result<&'static str> {
        self.values
            .get(key)
            .copied()
            .ok_or_else(|| Error::input(format!("{}: missing key {key:?}", self.file)))
    }

    fn poly(&self, key: &str, style: VarStyle, actual: &Poly) -> Result<Check> {
        let expected = self.get(key)?;
        let parsed: Poly = parse_poly(expected, style)?;
        Ok(Check {
            name: key.to_string(),
            expected: expected.to_string(),
            actual: actual.to_string(),
            pass: &parsed == actual && parsed.to_string() == actual.to_string(),
        })
    }

    fn words(&self, key: &str, ring: &RingSpec, code: &LinearCode) -> Result<Check> {
        let expected = self.get(key)?;
        let mut parsed = parse_words(expected)?;
        parsed.sort();
        let actual: Vec<String> = code
            .codewords()
            .iter()
            .map(|w| format_word(ring, w))
            .collect();
        Ok(Check {
            name: key.to_string(),
            expected: expected.to_string(),
            actual: actual.join(","),
            pass: parsed == code.codewords(),
        })
    }

    fn text(&self, key: &str, actual: String) -> Result<Check> {
        let expected = self.get(key)?;
        Ok(Check {
            name: key.to_string(),
            expected: expected.to_string(),
            pass: expected == actual,
            actual,
        })
    }
}

fn f2() -> Arc<RingSpec> {
    Arc::new(RingSpec::new(RingKind::Zm { m: 2 }).expect("F2 is a ring"))
}

fn code(name: &str) -> Result<LinearCode> {
    named_code(name)
        .expect("corpus codes are named")
        .build(f2(), DEFAULT_CAP)
}

fn with_suffix(name: &str, suffix: &str) -> String {
    format!("{name} {suffix}")
}

fn level_split() -> Result<CorpusEntry> {
    let fx = Fixture::load(
        "level_split.txt",
        include_str!("../fixtures/level_split.txt"),
    )?;
    let ring = f2();
    let levels = Poset::leveled(&[2, 1, 3])?.level_structure()?;
    let u = [1, 0, 1, 1, 0, 0];
    let parts: Vec<String> = levels
        .split(&u)?
        .into_iter()
        .map(|p| format_word(&ring, p))
        .collect();
    Ok(CorpusEntry {
        id: "level-split",
        description: "level representation of a word over a 3-level poset",
        checks: vec![fx.text("split", format!("({})", parts.join(",")))?],
    })
}

fn chain_pair() -> Result<CorpusEntry> {
    let fx = Fixture::load("chain_pair.txt", include_str!("../fixtures/chain_pair.txt"))?;
    let ring = f2();
    let chain = Poset::chain(3)?;
    let levels = chain.level_structure()?;
    let (c1, c2) = (code("C1")?, code("C2")?);
    let (d1, d2) = (c1.dual()?, c2.dual()?);
    let w = |c: &LinearCode| poset_weight_enumerator::<Int>(c, &chain);
    let p = |c: &LinearCode| level_enumerator::<Int>(c, &levels);
    let mut checks = vec![
        fx.words("C1⊥", &ring, &d1)?,
        fx.words("C2⊥", &ring, &d2)?,
        fx.poly("W(C1)", VarStyle::Weight, &w(&c1)?)?,
        fx.poly("W(C2)", VarStyle::Weight, &w(&c2)?)?,
        fx.poly("W(C1⊥)", VarStyle::Weight, &w(&d1)?)?,
        fx.poly("W(C2⊥)", VarStyle::Weight, &w(&d2)?)?,
        fx.poly("P_W(C1)", VarStyle::Weight, &p(&c1)?)?,
        fx.poly("P_W(C2)", VarStyle::Weight, &p(&c2)?)?,
        fx.poly("P_W(C1⊥)", VarStyle::Weight, &p(&d1)?)?,
        fx.poly("P_W(C2⊥)", VarStyle::Weight, &p(&d2)?)?,
    ];
    for (name, c) in [("P_W(C1⊥)", &c1), ("P_W(C2⊥)", &c2)] {
        let spectrum = WeightSpectrum::of_code(c, &levels)?;
        let via: Poly = level_transform(&spectrum, 2, c.size() as u64)?;
        let mut check = fx.poly(name, VarStyle::Weight, &via)?;
        check.name = with_suffix(name, "via transform");
        checks.push(check);
    }
    let nc = poset_negative_control::<Int>(&c1, &c2, &chain, DEFAULT_CAP)?;
    checks.push(Check {
        name: "expected negative: W(C1) = W(C2) but W(C1⊥) ≠ W(C2⊥)".to_string(),
        expected: "equal, then unequal".to_string(),
        actual: format!(
            "{}, then {}",
            if nc.primal_equal() {
                "equal"
            } else {
                "unequal"
            },
            if nc.dual_equal() { "equal" } else { "unequal" }
        ),
        pass: nc.is_witness(),
    });
    Ok(CorpusEntry {
        id: "chain-pair",
        description: "two codes on a 3-chain with equal enumerators and different duals",
        checks,
    })
}

struct FourWord {
    code: LinearCode,
    dual: LinearCode,
    levels: LevelStructure,
    spectrum: WeightSpectrum,
}

fn four_word() -> Result<FourWord> {
    let code = code("ex51")?;
    let dual = code.dual()?;
    let poset = Poset::from_covers(4, &[[1, 3], [2, 3], [3, 4]])?;
    let levels = poset.level_structure()?;
    let spectrum = WeightSpectrum::of_code(&code, &levels)?;
    Ok(FourWord {
        code,
        dual,
        levels,
        spectrum,
    })
}

fn byte() -> Result<CorpusEntry> {
    let fx = Fixture::load("byte.txt", include_str!("../fixtures/byte.txt"))?;
    let ex = four_word()?;
    let ring = ex.code.ring().clone();
    let chi = Character::default_for(ring.clone())?;
    let via: Poly = byte_transform(&ex.code, &ex.levels, &chi, DEFAULT_CAP)?;
    let mut via_check = fx.poly("B_W(C⊥)", VarStyle::Byte, &via)?;
    via_check.name = with_suffix("B_W(C⊥)", "via transform");
    Ok(CorpusEntry {
        id: "byte",
        description: "byte enumerators of a four-word code and its dual",
        checks: vec![
            fx.words("C⊥", &ring, &ex.dual)?,
            fx.poly(
                "B_W(C)",
                VarStyle::Byte,
                &byte_enumerator(&ex.code, &ex.levels)?,
            )?,
            fx.poly(
                "B_W(C⊥)",
                VarStyle::Byte,
                &byte_enumerator(&ex.dual, &ex.levels)?,
            )?,
            via_check,
        ],
    })
}

fn complete() -> Result<CorpusEntry> {
    let fx = Fixture::load("complete.txt", include_str!("../fixtures/complete.txt"))?;
    let ex = four_word()?;
    let via: Poly = complete_transform(&ex.spectrum, 2, ex.code.size() as u64)?;
    let mut via_check = fx.poly("C_W(C⊥)", VarStyle::Weight, &via)?;
    via_check.name = with_suffix("C_W(C⊥)", "via transform");
    Ok(CorpusEntry {
        id: "complete",
        description: "complete level enumerators of the same code and its dual",
        checks: vec![
            fx.poly(
                "C_W(C)",
                VarStyle::Weight,
                &complete_level_enumerator(&ex.code, &ex.levels)?,
            )?,
            fx.poly(
                "C_W(C⊥)",
                VarStyle::Weight,
                &complete_level_enumerator(&ex.dual, &ex.levels)?,
            )?,
            via_check,
        ],
    })
}

fn level_mspotty() -> Result<CorpusEntry> {
    let fx = Fixture::load(
        "level_mspotty.txt",
        include_str!("../fixtures/level_mspotty.txt"),
    )?;
    let ex = four_word()?;
    let t = [2, 1, 1];
    let size = ex.code.size() as u64;
    let level: Poly = level_transform(&ex.spectrum, 2, size)?;
    let spotty: Poly = mspotty_transform(&ex.spectrum, &t, 2, size)?;
    let mut checks = vec![
        fx.poly("P_W(C⊥)", VarStyle::Weight, &level)?,
        fx.poly("M_W(C⊥)", VarStyle::Weight, &spotty)?,
    ];
    let mut direct_level = fx.poly(
        "P_W(C⊥)",
        VarStyle::Weight,
        &level_enumerator(&ex.dual, &ex.levels)?,
    )?;
    direct_level.name = with_suffix("P_W(C⊥)", "direct");
    let mut direct_spotty = fx.poly(
        "M_W(C⊥)",
        VarStyle::Weight,
        &mspotty_enumerator(&ex.dual, &ex.levels, &t)?,
    )?;
    direct_spotty.name = with_suffix("M_W(C⊥)", "direct");
    checks.extend([direct_level, direct_spotty]);
    Ok(CorpusEntry {
        id: "level-mspotty",
        description: "level and m-spotty enumerators of the dual, t = (2,1,1)",
        checks,
    })
}

/// Runs every bundled example.
pub fn run_corpus() -> Result<Vec<CorpusEntry>> {
    Ok(vec![
        level_split()?,
        chain_pair()?,
        byte()?,
        complete()?,
        level_mspotty()?,
    ])
}
