//! Weight enumerators computed directly from a code's codewords, and the
//! per-level weights they are built from.

use std::collections::BTreeMap;

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::poly::{EnumeratorPoly, Monomial, VarKey, VarKind};
use crate::poset::{LevelStructure, Poset};
use crate::ring::Elem;
use crate::scalar::Coeff;

/// Number of nonzero coordinates.
pub fn hamming_weight(v: &[Elem]) -> usize {
    v.iter().filter(|&&x| x != 0).count()
}

pub fn hamming_distance(u: &[Elem], v: &[Elem]) -> usize {
    u.iter().zip(v).filter(|(a, b)| a != b).count()
}

fn from_counts<T: Coeff>(counts: BTreeMap<Monomial, u64>) -> EnumeratorPoly<T> {
    let mut p = EnumeratorPoly::zero();
    for (m, c) in counts {
        p.add_term(m, T::from_u64_exact(c));
    }
    p
}

fn tally<T: Coeff>(code: &LinearCode, mut f: impl FnMut(&[Elem]) -> Monomial) -> EnumeratorPoly<T> {
    let mut counts: BTreeMap<Monomial, u64> = BTreeMap::new();
    for u in code.codewords() {
        *counts.entry(f(u)).or_default() += 1;
    }
    from_counts(counts)
}

fn check_levels(code: &LinearCode, levels: &LevelStructure) -> Result<()> {
    levels.check_length(code.length())
}

/// `W_{C,P}(x) = Σ_{u∈C} x^{w_P(u)}`.
pub fn poset_weight_enumerator<T: Coeff>(
    code: &LinearCode,
    poset: &Poset,
) -> Result<EnumeratorPoly<T>> {
    if poset.size() != code.length() {
        return Err(Error::input(format!(
            "poset of size {} for a code of length {}",
            poset.size(),
            code.length()
        )));
    }
    Ok(tally(code, |u| {
        Monomial::power(VarKey::x(), poset.weight_unchecked(u) as u32)
    }))
}

/// Classical Hamming weight enumerator `Σ_{u∈C} x^{w(u)}`.
pub fn hamming_enumerator<T: Coeff>(code: &LinearCode) -> EnumeratorPoly<T> {
    tally(code, |u| {
        Monomial::power(VarKey::x(), hamming_weight(u) as u32)
    })
}

/// Indicator that the level-`k` word `w` is the byte `pattern` of level
/// `s`; zero whenever `s ≠ k`.
pub fn eta(s: usize, pattern: &[Elem], k: usize, w: &[Elem]) -> u8 {
    u8::from(s == k && pattern == w)
}

/// `μ_{S:pattern}(u) = Σ_k η_{S:pattern}(u^k)`, which is 1 exactly when the
/// level-`S` slice of `u` equals `pattern`.
pub fn mu(s: usize, pattern: &[Elem], u: &[Elem], levels: &LevelStructure) -> Result<u8> {
    let parts = levels.split(u)?;
    if s == 0 || s > parts.len() {
        return Err(Error::input(format!(
            "level {s} out of range 1..={}",
            parts.len()
        )));
    }
    if pattern.len() != levels.sizes()[s - 1] {
        return Err(Error::input(format!(
            "pattern length {} does not match level {s} size {}",
            pattern.len(),
            levels.sizes()[s - 1]
        )));
    }
    Ok(parts
        .iter()
        .enumerate()
        .map(|(k, w)| eta(s, pattern, k + 1, w))
        .sum())
}

fn byte_monomial(levels: &LevelStructure, u: &[Elem]) -> Monomial {
    Monomial::from_factors(
        levels
            .ranges()
            .enumerate()
            .map(|(i, r)| (VarKey::byte(i + 1, u[r].to_vec()), 1)),
    )
}

/// `B_W(C) = Σ_{u∈C} Π_S z_{S:u^S}`.
pub fn byte_enumerator<T: Coeff>(
    code: &LinearCode,
    levels: &LevelStructure,
) -> Result<EnumeratorPoly<T>> {
    check_levels(code, levels)?;
    Ok(tally(code, |u| byte_monomial(levels, u)))
}

/// Per-level Hamming weights `(w(u^1), …, w(u^s))`.
pub fn level_weights(levels: &LevelStructure, u: &[Elem]) -> Vec<usize> {
    levels.ranges().map(|r| hamming_weight(&u[r])).collect()
}

/// Counts `A_l` of codewords by per-level Hamming weight vector `l`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightSpectrum {
    levels: LevelStructure,
    counts: BTreeMap<Vec<usize>, u64>,
}

impl WeightSpectrum {
    pub fn new(levels: LevelStructure, counts: BTreeMap<Vec<usize>, u64>) -> Result<Self> {
        for l in counts.keys() {
            if l.len() != levels.levels() || l.iter().zip(levels.sizes()).any(|(w, n)| w > n) {
                return Err(Error::input(format!(
                    "weight vector {l:?} does not fit level sizes {:?}",
                    levels.sizes()
                )));
            }
        }
        let counts = counts.into_iter().filter(|(_, c)| *c > 0).collect();
        Ok(WeightSpectrum { levels, counts })
    }

    pub fn of_code(code: &LinearCode, levels: &LevelStructure) -> Result<Self> {
        check_levels(code, levels)?;
        let mut counts: BTreeMap<Vec<usize>, u64> = BTreeMap::new();
        for u in code.codewords() {
            *counts.entry(level_weights(levels, u)).or_default() += 1;
        }
        Ok(WeightSpectrum {
            levels: levels.clone(),
            counts,
        })
    }

    pub fn levels(&self) -> &LevelStructure {
        &self.levels
    }

    pub fn get(&self, l: &[usize]) -> u64 {
        self.counts.get(l).copied().unwrap_or(0)
    }

    /// Nonzero entries in lexicographic order of `l`.
    pub fn iter(&self) -> impl Iterator<Item = (&Vec<usize>, u64)> {
        self.counts.iter().map(|(l, c)| (l, *c))
    }

    /// `Σ_l A_l`, which is `|C|` for a code's own spectrum.
    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }
}

fn weight_monomial(l: &[usize]) -> Monomial {
    Monomial::from_factors(
        l.iter()
            .enumerate()
            .map(|(i, &w)| (VarKey::weight(i + 1, w), 1)),
    )
}

/// `C_W(C) = Σ_l A_l Π_j z_{j:l_j}`.
pub fn complete_level_enumerator<T: Coeff>(
    code: &LinearCode,
    levels: &LevelStructure,
) -> Result<EnumeratorPoly<T>> {
    Ok(spectrum_enumerator(&WeightSpectrum::of_code(code, levels)?))
}

/// The complete level enumerator of a weight spectrum.
pub fn spectrum_enumerator<T: Coeff>(spectrum: &WeightSpectrum) -> EnumeratorPoly<T> {
    let mut p = EnumeratorPoly::zero();
    for (l, c) in spectrum.iter() {
        p.add_term(weight_monomial(l), T::from_u64_exact(c));
    }
    p
}

fn plain_monomial(exps: impl Iterator<Item = usize>) -> Monomial {
    Monomial::from_factors(
        exps.enumerate()
            .map(|(i, e)| (VarKey::plain(i + 1), e as u32)),
    )
}

/// `P_W(C) = Σ_{u∈C} Π_i z_i^{w(u^i)}`.
pub fn level_enumerator<T: Coeff>(
    code: &LinearCode,
    levels: &LevelStructure,
) -> Result<EnumeratorPoly<T>> {
    check_levels(code, levels)?;
    Ok(tally(code, |u| {
        plain_monomial(level_weights(levels, u).into_iter())
    }))
}

/// Checks `1 ≤ t_i ≤ n_i` for every level.
pub fn check_spotty_bounds(levels: &LevelStructure, t: &[usize]) -> Result<()> {
    if t.len() != levels.levels() {
        return Err(Error::input(format!(
            "{} spotty bounds for {} levels",
            t.len(),
            levels.levels()
        )));
    }
    for (i, (&ti, &ni)) in t.iter().zip(levels.sizes()).enumerate() {
        if ti == 0 || ti > ni {
            return Err(Error::input(format!(
                "spotty bound t_{} = {ti} outside 1..={ni}",
                i + 1
            )));
        }
    }
    Ok(())
}

fn spotty_levels(t: &[usize], weights: impl Iterator<Item = usize>) -> Vec<usize> {
    weights.zip(t).map(|(w, &ti)| w.div_ceil(ti)).collect()
}

/// `w_MP(v) = Σ_i ⌈w(v^i)/t_i⌉`.
pub fn mspotty_weight(v: &[Elem], levels: &LevelStructure, t: &[usize]) -> Result<usize> {
    check_spotty_bounds(levels, t)?;
    levels.check_length(v.len())?;
    Ok(spotty_levels(t, level_weights(levels, v).into_iter())
        .iter()
        .sum())
}

/// `d_MP(u, v) = Σ_i ⌈d(u^i, v^i)/t_i⌉`.
pub fn mspotty_distance(
    u: &[Elem],
    v: &[Elem],
    levels: &LevelStructure,
    t: &[usize],
) -> Result<usize> {
    check_spotty_bounds(levels, t)?;
    levels.check_length(u.len())?;
    levels.check_length(v.len())?;
    let dists = levels
        .ranges()
        .map(|r| hamming_distance(&u[r.clone()], &v[r]));
    Ok(spotty_levels(t, dists).iter().sum())
}

/// `M_W(C) = Σ_{u∈C} Π_i z_i^{⌈w(u^i)/t_i⌉}`.
pub fn mspotty_enumerator<T: Coeff>(
    code: &LinearCode,
    levels: &LevelStructure,
    t: &[usize],
) -> Result<EnumeratorPoly<T>> {
    check_levels(code, levels)?;
    check_spotty_bounds(levels, t)?;
    Ok(tally(code, |u| {
        plain_monomial(spotty_levels(t, level_weights(levels, u).into_iter()).into_iter())
    }))
}

/// Variable substitutions linking the enumerators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Substitution {
    /// `z_{j:p} ↦ z_j^p`.
    CompleteToLevel,
    /// `z_{j:p} ↦ z_j^{⌈p/t_j⌉}`.
    CompleteToSpotty(Vec<usize>),
    /// `z_{S:ā} ↦ z_{S:w(ā)}`.
    ByteToComplete,
    /// `z_{j:p} ↦ x^p`, forgetting the levels.
    CompleteToHamming,
}

/// Applies a [`Substitution`]; every variable must be of the rule's source
/// kind.
pub fn substitute<T: Coeff>(
    p: &EnumeratorPoly<T>,
    rule: &Substitution,
) -> Result<EnumeratorPoly<T>> {
    p.substitute(|key| match (rule, &key.kind) {
        (Substitution::CompleteToLevel, VarKind::Weight(w)) => {
            Ok(Monomial::power(VarKey::plain(key.level), *w as u32))
        }
        (Substitution::CompleteToSpotty(t), VarKind::Weight(w)) => {
            let tj = key
                .level
                .checked_sub(1)
                .and_then(|i| t.get(i))
                .copied()
                .ok_or_else(|| Error::input(format!("no spotty bound for level {}", key.level)))?;
            if tj == 0 {
                return Err(Error::input("spotty bounds must be positive"));
            }
            Ok(Monomial::power(
                VarKey::plain(key.level),
                w.div_ceil(tj) as u32,
            ))
        }
        (Substitution::CompleteToHamming, VarKind::Weight(w)) => {
            Ok(Monomial::power(VarKey::x(), *w as u32))
        }
        (Substitution::ByteToComplete, VarKind::Byte(pattern)) => Ok(Monomial::var(
            VarKey::weight(key.level, hamming_weight(pattern)),
        )),
        _ => Err(Error::input(format!(
            "substitution {rule:?} does not apply to variable {key}"
        ))),
    })
}
