//! Seeded random instances for checking the transforms end to end.
//!
//! Each instance is drawn from its own generator, seeded from the run seed
//! and the instance index, so any single failure can be replayed alone.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::code::{LinearCode, Word};
use crate::cyclotomic::CycInt;
use crate::enumerators::{substitute, Substitution, WeightSpectrum};
use crate::error::{Error, Result};
use crate::macwilliams::{
    byte_transform, complete_transform, hadamard_check, verify_identity, IdentityKind,
    IdentityReport, Instance,
};
use crate::poset::LevelStructure;
use crate::ring::{Character, Elem, RingKind, RingSpec};
use crate::{Int, Poly};

/// The rings instances are drawn from: F2, F3, F4, Z4, F2+uF2, F2+vF2.
pub fn catalog() -> Vec<RingKind> {
    vec![
        RingKind::Zm { m: 2 },
        RingKind::Zm { m: 3 },
        RingKind::Gf {
            p: 2,
            k: 2,
            modulus: None,
        },
        RingKind::Zm { m: 4 },
        RingKind::F2u,
        RingKind::F2v,
    ]
}

#[derive(Clone, Debug)]
pub struct FuzzConfig {
    pub seed: u64,
    pub iters: usize,
    /// Bound on `q^N` for sampled instances.
    pub max_space: u64,
    /// Cap passed to every exhaustive loop.
    pub cap: u64,
}

impl Default for FuzzConfig {
    fn default() -> Self {
        FuzzConfig {
            seed: 0,
            iters: 500,
            max_space: 1 << 14,
            cap: crate::DEFAULT_CAP,
        }
    }
}

/// Per-instance generator: a SplitMix64 step over `(seed, index)`.
pub fn instance_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut z = seed ^ index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    ChaCha8Rng::seed_from_u64(z ^ (z >> 31))
}

#[derive(Clone, Debug)]
pub struct FuzzInstance {
    pub seed: u64,
    pub index: u64,
    pub chi: Character,
    pub levels: LevelStructure,
    pub t: Vec<usize>,
    pub code: LinearCode,
}

impl FuzzInstance {
    /// Ring uniform over [`catalog`], `s` and every `n_i` uniform in
    /// `1..=3` (redrawn until `q^N ≤ max_space`), up to three uniformly
    /// random generators, and `t_i` uniform in `1..=n_i`.
    pub fn sample(seed: u64, index: u64, max_space: u64) -> Result<Self> {
        let mut rng = instance_rng(seed, index);
        let kind = catalog()
            .choose(&mut rng)
            .cloned()
            .expect("catalog is not empty");
        let ring = Arc::new(RingSpec::new(kind)?);
        let q = ring.size() as u64;
        let sizes = loop {
            let s = rng.gen_range(1..=3);
            let sizes: Vec<usize> = (0..s).map(|_| rng.gen_range(1..=3)).collect();
            let n: u32 = sizes.iter().sum::<usize>() as u32;
            if q.checked_pow(n).is_some_and(|space| space <= max_space) {
                break sizes;
            }
        };
        let levels = LevelStructure::new(sizes)?;
        let t = levels
            .sizes()
            .iter()
            .map(|&n| rng.gen_range(1..=n))
            .collect();
        let n = levels.total();
        let k = rng.gen_range(0..=3);
        let generators: Vec<Word> = (0..k)
            .map(|_| (0..n).map(|_| rng.gen_range(0..q) as Elem).collect())
            .collect();
        let code = LinearCode::span(ring.clone(), n, generators)?;
        Ok(FuzzInstance {
            seed,
            index,
            chi: Character::default_for(ring)?,
            levels,
            t,
            code,
        })
    }

    pub fn descriptor(&self) -> Instance {
        let mut inst = Instance::of_code(&self.code);
        inst.levels = Some(self.levels.sizes().to_vec());
        inst.t = Some(self.t.clone());
        inst.seed = Some(self.seed);
        inst
    }
}

/// Everything checked on one instance.
#[derive(Clone, Debug)]
pub struct FuzzOutcome {
    pub index: u64,
    pub instance: Instance,
    /// Transform vs direct dual enumeration, per identity.
    pub identities: Vec<(IdentityKind, bool)>,
    /// `byte→complete` applied to the byte transform equals the complete
    /// transform.
    pub self_consistent: bool,
    /// The complete transform applied to `C⊥` gives back `C_W(C)`.
    pub involution: bool,
    /// `|C|·|C⊥| = q^N` and `(C⊥)⊥ = C`.
    pub duality: bool,
    /// An integrity error: a non-integer or non-divisible coefficient.
    pub integrity_error: Option<String>,
    /// Any other error.
    pub error: Option<String>,
}

impl FuzzOutcome {
    pub fn identities_hold(&self) -> bool {
        self.identities.len() == IdentityKind::ENUMERATORS.len()
            && self.identities.iter().all(|(_, ok)| *ok)
    }

    pub fn passed(&self) -> bool {
        self.identities_hold()
            && self.self_consistent
            && self.involution
            && self.duality
            && self.integrity_error.is_none()
            && self.error.is_none()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "index": self.index,
            "pass": self.passed(),
            "identities": self.identities.iter()
                .map(|(k, ok)| json!({"kind": k.name(), "equal": ok}))
                .collect::<Vec<_>>(),
            "self_consistent": self.self_consistent,
            "involution": self.involution,
            "duality": self.duality,
            "integrity_error": self.integrity_error,
            "error": self.error,
            "instance": self.instance.to_json(),
        })
    }
}

pub fn check_instance(inst: &FuzzInstance, cap: u64) -> FuzzOutcome {
    let mut out = FuzzOutcome {
        index: inst.index,
        instance: inst.descriptor(),
        identities: Vec::new(),
        self_consistent: false,
        involution: false,
        duality: false,
        integrity_error: None,
        error: None,
    };
    if let Err(e) = run_checks(inst, cap, &mut out) {
        match e {
            Error::Integrity(msg) => out.integrity_error = Some(msg),
            other => out.error = Some(other.to_string()),
        }
    }
    out
}

fn run_checks(inst: &FuzzInstance, cap: u64, out: &mut FuzzOutcome) -> Result<()> {
    let code = &inst.code;
    let q = code.ring().size();
    let dual = code.dual_with_cap(cap)?;
    let space = (q as u128).pow(code.length() as u32);
    out.duality =
        (code.size() as u128) * (dual.size() as u128) == space && dual.dual_with_cap(cap)? == *code;

    for kind in IdentityKind::ENUMERATORS {
        let report: IdentityReport<Int> =
            verify_identity(kind, code, &inst.levels, &inst.chi, Some(&inst.t), cap)?;
        out.identities.push((kind, report.equal));
    }

    let spectrum = WeightSpectrum::of_code(code, &inst.levels)?;
    let complete: Poly = complete_transform(&spectrum, q, code.size() as u64)?;
    let byte: Poly = byte_transform(code, &inst.levels, &inst.chi, cap)?;
    out.self_consistent = substitute(&byte, &Substitution::ByteToComplete)? == complete;

    let dual_spectrum = WeightSpectrum::of_code(&dual, &inst.levels)?;
    let back: Poly = complete_transform(&dual_spectrum, q, dual.size() as u64)?;
    out.involution = back == crate::enumerators::spectrum_enumerator(&spectrum);
    Ok(())
}

#[derive(Clone, Debug, Default)]
pub struct FuzzSummary {
    pub seed: u64,
    pub instances: usize,
    pub identity_failures: usize,
    pub consistency_failures: usize,
    pub duality_failures: usize,
    pub integrity_failures: usize,
    pub errors: usize,
    /// Instances per ring name.
    pub per_ring: std::collections::BTreeMap<String, usize>,
    pub failures: Vec<FuzzOutcome>,
}

impl FuzzSummary {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "seed": self.seed,
            "instances": self.instances,
            "identity_failures": self.identity_failures,
            "consistency_failures": self.consistency_failures,
            "duality_failures": self.duality_failures,
            "integrity_failures": self.integrity_failures,
            "errors": self.errors,
            "per_ring": self.per_ring,
            "pass": self.passed(),
            "failures": self.failures.iter().map(FuzzOutcome::to_json).collect::<Vec<_>>(),
        })
    }
}

fn ring_label(kind: &RingKind) -> String {
    match kind {
        RingKind::Zm { m } if (2..*m).all(|d| m % d != 0) => format!("F{m}"),
        RingKind::Zm { m } => format!("Z{m}"),
        RingKind::Gf { p, k, .. } => format!("F{}", p.pow(*k as u32)),
        RingKind::F2u => "F2+uF2".to_string(),
        RingKind::F2v => "F2+vF2".to_string(),
    }
}

pub fn run(config: &FuzzConfig) -> FuzzSummary {
    let mut summary = FuzzSummary {
        seed: config.seed,
        ..FuzzSummary::default()
    };
    for index in 0..config.iters as u64 {
        let outcome = match FuzzInstance::sample(config.seed, index, config.max_space) {
            Ok(inst) => {
                *summary
                    .per_ring
                    .entry(ring_label(inst.code.ring().kind()))
                    .or_default() += 1;
                check_instance(&inst, config.cap)
            }
            Err(e) => FuzzOutcome {
                index,
                instance: Instance {
                    ring: RingKind::Zm { m: 2 },
                    levels: None,
                    generators: vec![],
                    t: None,
                    seed: Some(config.seed),
                },
                identities: vec![],
                self_consistent: false,
                involution: false,
                duality: false,
                integrity_error: None,
                error: Some(e.to_string()),
            },
        };
        summary.instances += 1;
        if outcome.error.is_some() {
            summary.errors += 1;
        }
        if outcome.integrity_error.is_some() {
            summary.integrity_failures += 1;
        }
        if outcome.error.is_none() && outcome.integrity_error.is_none() {
            summary.identity_failures += usize::from(!outcome.identities_hold());
            summary.consistency_failures +=
                usize::from(!(outcome.self_consistent && outcome.involution));
            summary.duality_failures += usize::from(!outcome.duality);
        }
        if !outcome.passed() {
            summary.failures.push(outcome);
        }
    }
    summary
}

/// A random test function `R^N → Z[ζ_e]`, as a table in lexicographic word
/// order, with small coordinates.
pub fn random_test_function(
    rng: &mut impl Rng,
    order: u32,
    q: usize,
    n: usize,
) -> Vec<CycInt<Int>> {
    let len = q.pow(n as u32);
    (0..len)
        .map(|_| {
            // sparse: most words get zero, as in an indicator-like function
            if rng.gen_bool(0.5) {
                CycInt::zero(order).expect("order within range")
            } else {
                let coeffs: Vec<Int> = (0..order)
                    .map(|_| Int::from(rng.gen_range(-3i64..=3)))
                    .collect();
                CycInt::from_power_coeffs(order, coeffs).expect("order within range")
            }
        })
        .collect()
}

pub(crate) fn word_index(q: usize, w: &[Elem]) -> usize {
    w.iter().fold(0, |acc, &a| acc * q + a as usize)
}

/// `trials` Hadamard checks with random test functions and random codes
/// of length `1..=max_len`.
pub fn hadamard_trials(
    kind: &RingKind,
    trials: usize,
    max_len: usize,
    seed: u64,
    cap: u64,
) -> Result<Vec<IdentityReport<Int>>> {
    let ring = Arc::new(RingSpec::new(kind.clone())?);
    let chi = Character::default_for(ring.clone())?;
    let q = ring.size();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..trials)
        .map(|_| {
            let n = rng.gen_range(1..=max_len);
            let k = rng.gen_range(0..=2);
            let gens: Vec<Word> = (0..k)
                .map(|_| (0..n).map(|_| rng.gen_range(0..q) as Elem).collect())
                .collect();
            let code = LinearCode::span(ring.clone(), n, gens)?;
            let table = random_test_function(&mut rng, chi.order(), q, n);
            hadamard_check(&chi, &code, |v| table[word_index(q, v)].clone(), cap)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sampling_is_reproducible() {
        let a = FuzzInstance::sample(7, 3, 1 << 14).unwrap();
        let b = FuzzInstance::sample(7, 3, 1 << 14).unwrap();
        assert_eq!(a.code, b.code);
        assert_eq!(a.levels, b.levels);
        assert_eq!(a.t, b.t);
    }

    #[test]
    fn sampled_instances_respect_bounds() {
        for i in 0..60 {
            let inst = FuzzInstance::sample(1, i, 1 << 14).unwrap();
            let q = inst.code.ring().size() as u64;
            assert!(q.pow(inst.code.length() as u32) <= 1 << 14);
            assert!(inst.levels.levels() <= 3);
            assert!(inst.levels.sizes().iter().all(|&n| (1..=3).contains(&n)));
            assert!(inst
                .t
                .iter()
                .zip(inst.levels.sizes())
                .all(|(&t, &n)| t >= 1 && t <= n));
            assert!(inst.code.generators().len() <= 3);
        }
    }

    #[test]
    fn short_run_passes() {
        let summary = run(&FuzzConfig {
            iters: 25,
            ..FuzzConfig::default()
        });
        assert_eq!(summary.instances, 25);
        assert!(summary.passed(), "{}", summary.to_json());
    }

    #[test]
    fn hadamard_trials_pass() {
        for kind in catalog() {
            for rep in hadamard_trials(&kind, 5, 2, 11, crate::DEFAULT_CAP).unwrap() {
                assert!(rep.equal, "{kind:?}: {} vs {}", rep.lhs, rep.rhs);
            }
        }
    }

    #[test]
    fn lexicographic_index() {
        assert_eq!(word_index(3, &[0, 0]), 0);
        assert_eq!(word_index(3, &[1, 2]), 5);
        assert_eq!(word_index(2, &[1, 1, 1]), 7);
    }
}
