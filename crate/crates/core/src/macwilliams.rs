//! MacWilliams-type transforms: each computes an enumerator of `C⊥` from
//! data about `C` alone, without ever listing `C⊥`. [`verify_identity`]
//! compares a transform against direct enumeration of the dual.

use std::fmt;

use serde_json::{json, Value};

use crate::code::{dot, AmbientWords, LinearCode, Word};
use crate::cyclotomic::CycInt;
use crate::enumerators::{
    byte_enumerator, check_spotty_bounds, complete_level_enumerator, level_enumerator,
    mspotty_enumerator, poset_weight_enumerator, substitute, Substitution, WeightSpectrum,
};
use crate::error::{check_cap, saturating_pow, Error, Result};
use crate::poly::{integer_json, EnumeratorPoly, Monomial, VarKey};
use crate::poset::{LevelStructure, Poset};
use crate::ring::{Character, Elem, RingKind};
use crate::scalar::{binomial, pow, Coeff};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IdentityKind {
    Byte,
    Complete,
    Level,
    Mspotty,
    Hadamard,
}

impl IdentityKind {
    pub const ENUMERATORS: [IdentityKind; 4] = [
        IdentityKind::Byte,
        IdentityKind::Complete,
        IdentityKind::Level,
        IdentityKind::Mspotty,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdentityKind::Byte => "byte",
            IdentityKind::Complete => "complete",
            IdentityKind::Level => "level",
            IdentityKind::Mspotty => "mspotty",
            IdentityKind::Hadamard => "hadamard",
        }
    }
}

impl fmt::Display for IdentityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One side of an identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Side<T> {
    Poly(EnumeratorPoly<T>),
    Scalar(CycInt<T>),
}

impl<T: Coeff> Side<T> {
    pub fn to_json(&self) -> Value {
        match self {
            Side::Poly(p) => p.to_json(),
            Side::Scalar(z) => json!({
                "order": z.order(),
                "coeffs": z.coeffs().iter().map(integer_json).collect::<Vec<_>>(),
            }),
        }
    }
}

impl<T: Coeff> fmt::Display for Side<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::Poly(p) => write!(f, "{p}"),
            Side::Scalar(z) => write!(f, "{z}"),
        }
    }
}

/// What an identity was evaluated on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub ring: RingKind,
    pub levels: Option<Vec<usize>>,
    pub generators: Vec<Word>,
    pub t: Option<Vec<usize>>,
    pub seed: Option<u64>,
}

impl Instance {
    pub fn of_code(code: &LinearCode) -> Self {
        Instance {
            ring: code.ring().kind().clone(),
            levels: None,
            generators: code.generators().to_vec(),
            t: None,
            seed: None,
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "ring": self.ring,
            "poset": self.levels.as_ref().map(|l| json!({"kind": "leveled", "levels": l})),
            "generators": self.generators,
            "t": self.t,
            "seed": self.seed,
        })
    }
}

/// Outcome of comparing a transform (`lhs`) with direct enumeration of the
/// dual (`rhs`).
#[derive(Clone, Debug)]
pub struct IdentityReport<T> {
    pub kind: IdentityKind,
    pub lhs: Side<T>,
    pub rhs: Side<T>,
    pub equal: bool,
    pub instance: Instance,
}

impl<T: Coeff> IdentityReport<T> {
    fn new(kind: IdentityKind, lhs: Side<T>, rhs: Side<T>, instance: Instance) -> Self {
        let equal = lhs == rhs;
        IdentityReport {
            kind,
            lhs,
            rhs,
            equal,
            instance,
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "kind": self.kind.name(),
            "equal": self.equal,
            "lhs": self.lhs.to_json(),
            "rhs": self.rhs.to_json(),
            "instance": self.instance.to_json(),
        })
    }
}

/// Checks `Σ_{v∈C⊥} f(v) = (1/|C|) Σ_{u∈C} f̃(u)` with
/// `f̃(u) = Σ_{v∈R^N} χ(⟨u,v⟩) f(v)`, both sides exact.
pub fn hadamard_check<T, F>(
    chi: &Character,
    code: &LinearCode,
    f: F,
    cap: u64,
) -> Result<IdentityReport<T>>
where
    T: Coeff,
    F: Fn(&[Elem]) -> CycInt<T>,
{
    let ring = chi.ring();
    if ring != code.ring() {
        return Err(Error::input("character and code are over different rings"));
    }
    let q = ring.size();
    let n = code.length();
    check_cap(saturating_pow(q, n), cap)?;
    let e = chi.order();
    let values: Vec<(Word, CycInt<T>)> = AmbientWords::new(q, n)
        .map(|v| {
            let fv = f(&v);
            (v, fv)
        })
        .collect();
    if let Some((_, bad)) = values.iter().find(|(_, fv)| fv.order() != e) {
        return Err(Error::OrderMismatch(bad.order(), e));
    }

    let dual = code.dual_with_cap(cap)?;
    let mut lhs = CycInt::zero(e)?;
    for (v, fv) in &values {
        if dual.contains(v) {
            lhs = &lhs + fv;
        }
    }

    let roots: Vec<CycInt<T>> = (0..e)
        .map(|k| CycInt::root_power(e, i64::from(k)))
        .collect::<Result<_>>()?;
    let mut total = CycInt::zero(e)?;
    for u in code.codewords() {
        for (v, fv) in &values {
            let k = chi.exponent(dot(ring, u, v));
            total = &total + &(&roots[k as usize] * fv);
        }
    }
    let size = T::from_usize(code.size()).unwrap();
    let rhs = total.div_exact(&size).ok_or_else(|| {
        Error::integrity(format!(
            "Hadamard sum {total} is not divisible by |C| = {size}"
        ))
    })?;
    Ok(IdentityReport::new(
        IdentityKind::Hadamard,
        Side::Scalar(lhs),
        Side::Scalar(rhs),
        Instance::of_code(code),
    ))
}

/// `B_W(C⊥) = (1/|C|) Σ_{u∈C} Π_S ( Σ_{β∈R^{n_S}} χ(⟨β,u^S⟩) z_{S:β} )`.
///
/// The expansion of the product has one monomial per `β = (β^1, …, β^s)`,
/// whose coefficient is `Σ_u ζ^{ε(⟨β,u⟩)}`. Those sums are accumulated as
/// exponent multiplicities, reduced to canonical cyclotomic form, and must
/// come out as rational integers divisible by `|C|`; anything else is an
/// integrity error.
pub fn byte_transform<T: Coeff>(
    code: &LinearCode,
    levels: &LevelStructure,
    chi: &Character,
    cap: u64,
) -> Result<EnumeratorPoly<T>> {
    levels.check_length(code.length())?;
    let ring = chi.ring();
    if ring != code.ring() {
        return Err(Error::input("character and code are over different rings"));
    }
    let q = ring.size();
    let e = chi.order() as usize;
    let space = saturating_pow(q, code.length());
    check_cap(space.saturating_mul(e as u128), cap)?;
    let space = space as usize;

    let patterns: Vec<Vec<Word>> = levels
        .sizes()
        .iter()
        .map(|&n| AmbientWords::new(q, n).collect())
        .collect();

    let mut counts = vec![0i64; space * e];
    let mut exps: Vec<usize> = Vec::with_capacity(space);
    let mut next: Vec<usize> = Vec::with_capacity(space);
    for u in code.codewords() {
        exps.clear();
        exps.push(0);
        for (range, level_patterns) in levels.ranges().zip(&patterns) {
            let slice = &u[range];
            next.clear();
            for &a in &exps {
                for beta in level_patterns {
                    let k = chi.exponent(dot(ring, beta, slice)) as usize;
                    next.push((a + k) % e);
                }
            }
            std::mem::swap(&mut exps, &mut next);
        }
        for (i, &k) in exps.iter().enumerate() {
            counts[i * e + k] += 1;
        }
    }

    let size = T::from_usize(code.size()).unwrap();
    let mut out = EnumeratorPoly::zero();
    for i in 0..space {
        let chunk = &counts[i * e..(i + 1) * e];
        if chunk.iter().all(|&c| c == 0) {
            continue;
        }
        let sum: CycInt<T> = CycInt::from_root_counts(e as u32, chunk)?;
        let value = sum.to_integer().ok_or_else(|| {
            Error::integrity(format!(
                "byte transform coefficient {sum} is not a rational integer"
            ))
        })?;
        let (coeff, rem) = value.div_rem(&size);
        if !rem.is_zero() {
            return Err(Error::integrity(format!(
                "byte transform coefficient {value} is not divisible by |C| = {size}"
            )));
        }
        if coeff.is_zero() {
            continue;
        }
        // decode the mixed-radix index, level 1 most significant
        let mut rest = i;
        let mut factors = Vec::with_capacity(levels.levels());
        for (s, level_patterns) in patterns.iter().enumerate().rev() {
            let radix = level_patterns.len();
            factors.push((VarKey::byte(s + 1, level_patterns[rest % radix].clone()), 1));
            rest /= radix;
        }
        out.add_term(Monomial::from_factors(factors), coeff);
    }
    Ok(out)
}

/// `Σ_{a=0}^{p} (-1)^a (q-1)^{p-a} C(l, a) C(n-l, p-a)`.
pub fn krawtchouk_level<T: Coeff>(n: usize, l: usize, p: usize, q: usize) -> Result<T> {
    if l > n || p > n {
        return Err(Error::input(format!(
            "Krawtchouk arguments out of range: n={n}, l={l}, p={p}"
        )));
    }
    if q < 2 {
        return Err(Error::input(format!("alphabet size {q} below 2")));
    }
    let q1 = T::from_usize(q - 1).unwrap();
    let mut acc = T::zero();
    for a in 0..=p {
        let term = pow(&q1, p - a) * binomial::<T>(l, a) * binomial::<T>(n - l, p - a);
        if a % 2 == 0 {
            acc = acc + term;
        } else {
            acc = acc - term;
        }
    }
    Ok(acc)
}

/// `C_W(C⊥) = (1/|C|) Σ_l A_l Π_j Σ_{p_j} K(n_j, l_j, p_j) z_{j:p_j}`, with
/// `q = |R|`.
pub fn complete_transform<T: Coeff>(
    spectrum: &WeightSpectrum,
    q: usize,
    code_size: u64,
) -> Result<EnumeratorPoly<T>> {
    if spectrum.total() != code_size {
        return Err(Error::input(format!(
            "spectrum counts sum to {}, not |C| = {code_size}",
            spectrum.total()
        )));
    }
    let sizes = spectrum.levels().sizes();
    // factor[j][l] = Σ_p K(n_j, l, p) z_{j:p}
    let mut factors: Vec<Vec<EnumeratorPoly<T>>> = Vec::with_capacity(sizes.len());
    for (j, &n) in sizes.iter().enumerate() {
        let mut per_weight = Vec::with_capacity(n + 1);
        for l in 0..=n {
            let mut f = EnumeratorPoly::zero();
            for p in 0..=n {
                f.add_term(
                    Monomial::var(VarKey::weight(j + 1, p)),
                    krawtchouk_level::<T>(n, l, p, q)?,
                );
            }
            per_weight.push(f);
        }
        factors.push(per_weight);
    }
    let mut total = EnumeratorPoly::zero();
    for (l, count) in spectrum.iter() {
        let mut prod = EnumeratorPoly::one();
        for (j, &lj) in l.iter().enumerate() {
            prod = prod.mul(&factors[j][lj]);
        }
        total = total.add(&prod.scale(&T::from_u64_exact(count)));
    }
    let size = T::from_u64_exact(code_size);
    let out = total.div_exact(&size).ok_or_else(|| {
        Error::integrity(format!(
            "complete transform not divisible by |C| = {code_size}"
        ))
    })?;
    if !out.all_nonnegative() {
        return Err(Error::integrity(
            "complete transform has a negative coefficient",
        ));
    }
    Ok(out)
}

/// `P_W(C⊥)`, via `z_{j:p} ↦ z_j^p` in [`complete_transform`].
pub fn level_transform<T: Coeff>(
    spectrum: &WeightSpectrum,
    q: usize,
    code_size: u64,
) -> Result<EnumeratorPoly<T>> {
    substitute(
        &complete_transform(spectrum, q, code_size)?,
        &Substitution::CompleteToLevel,
    )
}

/// `M_W(C⊥)`, via `z_{j:p} ↦ z_j^{⌈p/t_j⌉}` in [`complete_transform`].
pub fn mspotty_transform<T: Coeff>(
    spectrum: &WeightSpectrum,
    t: &[usize],
    q: usize,
    code_size: u64,
) -> Result<EnumeratorPoly<T>> {
    check_spotty_bounds(spectrum.levels(), t)?;
    substitute(
        &complete_transform(spectrum, q, code_size)?,
        &Substitution::CompleteToSpotty(t.to_vec()),
    )
}

/// Computes the enumerator of `C⊥` both through the transform and by
/// enumerating `C⊥` directly.
pub fn verify_identity<T: Coeff>(
    kind: IdentityKind,
    code: &LinearCode,
    levels: &LevelStructure,
    chi: &Character,
    t: Option<&[usize]>,
    cap: u64,
) -> Result<IdentityReport<T>> {
    levels.check_length(code.length())?;
    let dual = code.dual_with_cap(cap)?;
    let q = code.ring().size();
    let size = code.size() as u64;
    let spectrum = || WeightSpectrum::of_code(code, levels);
    let (lhs, rhs) = match kind {
        IdentityKind::Byte => (
            byte_transform(code, levels, chi, cap)?,
            byte_enumerator(&dual, levels)?,
        ),
        IdentityKind::Complete => (
            complete_transform(&spectrum()?, q, size)?,
            complete_level_enumerator(&dual, levels)?,
        ),
        IdentityKind::Level => (
            level_transform(&spectrum()?, q, size)?,
            level_enumerator(&dual, levels)?,
        ),
        IdentityKind::Mspotty => {
            let t = t.ok_or_else(|| Error::input("m-spotty identity needs spotty bounds t"))?;
            (
                mspotty_transform(&spectrum()?, t, q, size)?,
                mspotty_enumerator(&dual, levels, t)?,
            )
        }
        IdentityKind::Hadamard => {
            return Err(Error::input(
                "the Hadamard identity needs a test function; use hadamard_check",
            ))
        }
    };
    let mut instance = Instance::of_code(code);
    instance.levels = Some(levels.sizes().to_vec());
    instance.t = t.map(<[usize]>::to_vec);
    Ok(IdentityReport::new(
        kind,
        Side::Poly(lhs),
        Side::Poly(rhs),
        instance,
    ))
}

/// Two codes with equal plain poset enumerators whose duals' enumerators
/// differ: no transform of `W_{C,P}` alone can produce `W_{C⊥,P}`.
#[derive(Clone, Debug)]
pub struct NegativeControl<T> {
    pub primal: [EnumeratorPoly<T>; 2],
    pub dual: [EnumeratorPoly<T>; 2],
}

impl<T: Coeff> NegativeControl<T> {
    pub fn primal_equal(&self) -> bool {
        self.primal[0] == self.primal[1]
    }

    pub fn dual_equal(&self) -> bool {
        self.dual[0] == self.dual[1]
    }

    /// True when the pair witnesses the absence of an identity.
    pub fn is_witness(&self) -> bool {
        self.primal_equal() && !self.dual_equal()
    }
}

pub fn poset_negative_control<T: Coeff>(
    first: &LinearCode,
    second: &LinearCode,
    poset: &Poset,
    cap: u64,
) -> Result<NegativeControl<T>> {
    let w = |c: &LinearCode| poset_weight_enumerator::<T>(c, poset);
    Ok(NegativeControl {
        primal: [w(first)?, w(second)?],
        dual: [
            w(&first.dual_with_cap(cap)?)?,
            w(&second.dual_with_cap(cap)?)?,
        ],
    })
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use num_bigint::BigInt;

    use super::*;
    use crate::error::DEFAULT_CAP;
    use crate::poly::{parse_poly, VarStyle};
    use crate::ring::RingSpec;

    type P = EnumeratorPoly<i64>;

    fn ring(kind: RingKind) -> Arc<RingSpec> {
        Arc::new(RingSpec::new(kind).unwrap())
    }

    fn f2() -> Arc<RingSpec> {
        ring(RingKind::Zm { m: 2 })
    }

    fn example_code() -> LinearCode {
        LinearCode::span(f2(), 4, vec![vec![1, 0, 1, 0], vec![0, 1, 1, 1]]).unwrap()
    }

    fn levels(sizes: &[usize]) -> LevelStructure {
        LevelStructure::new(sizes.to_vec()).unwrap()
    }

    #[test]
    fn krawtchouk_values() {
        assert_eq!(krawtchouk_level::<i64>(2, 0, 1, 2).unwrap(), 2);
        assert_eq!(krawtchouk_level::<i64>(2, 1, 1, 2).unwrap(), 0);
        for n in 0..5 {
            for l in 0..=n {
                assert_eq!(krawtchouk_level::<i64>(n, l, 0, 3).unwrap(), 1);
            }
        }
        assert!(krawtchouk_level::<i64>(2, 3, 0, 2).is_err());
        assert!(krawtchouk_level::<i64>(2, 0, 3, 2).is_err());
        assert!(krawtchouk_level::<i64>(2, 0, 1, 1).is_err());
    }

    #[test]
    fn krawtchouk_matches_character_sums() {
        // K(n, l, p) = Σ_{v : w(v) = p} χ(⟨u, v⟩) for any u of weight l
        for kind in [RingKind::Zm { m: 4 }, RingKind::F2v, RingKind::Zm { m: 3 }] {
            let r = ring(kind);
            let chi = Character::default_for(r.clone()).unwrap();
            let n = 3;
            for u in AmbientWords::new(r.size(), n) {
                let l = u.iter().filter(|&&x| x != 0).count();
                for p in 0..=n {
                    let mut sum = CycInt::<i64>::zero(chi.order()).unwrap();
                    for v in AmbientWords::new(r.size(), n) {
                        if v.iter().filter(|&&x| x != 0).count() == p {
                            sum = &sum + &chi.value(dot(&r, &u, &v));
                        }
                    }
                    assert_eq!(
                        sum.to_integer(),
                        Some(krawtchouk_level::<i64>(n, l, p, r.size()).unwrap()),
                        "u={u:?} p={p}"
                    );
                }
            }
        }
    }

    #[test]
    fn byte_transform_of_the_example() {
        let c = example_code();
        let chi = Character::default_for(f2()).unwrap();
        let got: P = byte_transform(&c, &levels(&[2, 1, 1]), &chi, DEFAULT_CAP).unwrap();
        let expected: P = parse_poly(
            "z_{1:00}z_{2:0}z_{3:0}+z_{1:10}z_{2:1}z_{3:1}+z_{1:01}z_{2:0}z_{3:1}+z_{1:11}z_{2:1}z_{3:0}",
            VarStyle::Byte,
        )
        .unwrap();
        assert_eq!(got, expected);
    }

    #[test]
    fn byte_transform_of_zero_code_is_full_space() {
        let r = ring(RingKind::Zm { m: 3 });
        let chi = Character::default_for(r.clone()).unwrap();
        let zero = LinearCode::span(r, 3, vec![]).unwrap();
        let got: P = byte_transform(&zero, &levels(&[2, 1]), &chi, DEFAULT_CAP).unwrap();
        assert_eq!(got.len(), 27);
        assert!(got.terms().all(|(_, c)| *c == 1));
    }

    #[test]
    fn byte_transform_over_z4() {
        let r = ring(RingKind::Zm { m: 4 });
        let chi = Character::default_for(r.clone()).unwrap();
        let c = LinearCode::span(r, 3, vec![vec![1, 2, 3], vec![0, 2, 2]]).unwrap();
        let l = levels(&[2, 1]);
        let got: EnumeratorPoly<BigInt> = byte_transform(&c, &l, &chi, DEFAULT_CAP).unwrap();
        assert_eq!(got, byte_enumerator(&c.dual().unwrap(), &l).unwrap());
    }

    #[test]
    fn bad_characters() {
        let r = ring(RingKind::Zm { m: 4 });
        let l = levels(&[1]);
        // additive but not generating: integral, and wrong
        let chi = Character::new(r.clone(), vec![0, 2, 0, 2]).unwrap();
        let c = LinearCode::span(r.clone(), 1, vec![vec![2]]).unwrap();
        let got: P = byte_transform(&c, &l, &chi, DEFAULT_CAP).unwrap();
        assert_ne!(got, byte_enumerator(&c.dual().unwrap(), &l).unwrap());
        // not additive: the sums leave the integers
        let broken = Character::new(r.clone(), vec![0, 1, 0, 0]).unwrap();
        let full = LinearCode::span(r, 1, vec![vec![1]]).unwrap();
        let err = byte_transform::<i64>(&full, &l, &broken, DEFAULT_CAP).unwrap_err();
        assert!(matches!(err, Error::Integrity(_)), "{err}");
    }

    #[test]
    fn complete_transform_of_the_example() {
        let c = example_code();
        let l = levels(&[2, 1, 1]);
        let spectrum = WeightSpectrum::of_code(&c, &l).unwrap();
        let got: P = complete_transform(&spectrum, 2, 4).unwrap();
        let expected: P = parse_poly(
            "z_{1:0}z_{2:0}z_{3:0}+z_{1:1}z_{2:1}z_{3:1}+z_{1:1}z_{2:0}z_{3:1}+z_{1:2}z_{2:1}z_{3:0}",
            VarStyle::Weight,
        )
        .unwrap();
        assert_eq!(got, expected);
        assert!(complete_transform::<i64>(&spectrum, 2, 5).is_err());
        let level: P = level_transform(&spectrum, 2, 4).unwrap();
        assert_eq!(level.to_string(), "1 + z_1z_2z_3 + z_1z_3 + z_1^2z_2");
        let spotty: P = mspotty_transform(&spectrum, &[2, 1, 1], 2, 4).unwrap();
        assert_eq!(spotty.to_string(), "1 + z_1z_2 + z_1z_2z_3 + z_1z_3");
        assert!(mspotty_transform::<i64>(&spectrum, &[3, 1, 1], 2, 4).is_err());
        let plain: P = mspotty_transform(&spectrum, &[1, 1, 1], 2, 4).unwrap();
        assert_eq!(plain, level);
    }

    #[test]
    fn complete_transform_of_zero_code() {
        let l = levels(&[2, 1]);
        let zero = LinearCode::span(ring(RingKind::Zm { m: 3 }), 3, vec![]).unwrap();
        let spectrum = WeightSpectrum::of_code(&zero, &l).unwrap();
        let got: P = complete_transform(&spectrum, 3, 1).unwrap();
        // Π_j Σ_p (q-1)^p C(n_j, p) z_{j:p}
        let expected: P = parse_poly("z_{1:0} + 4z_{1:1} + 4z_{1:2}", VarStyle::Weight)
            .unwrap()
            .mul(&parse_poly("z_{2:0} + 2z_{2:1}", VarStyle::Weight).unwrap());
        assert_eq!(got, expected);
        let lz = LevelStructure::new(vec![1]).unwrap();
        let z1 = LinearCode::span(f2(), 1, vec![]).unwrap();
        let lp: P = level_transform(&WeightSpectrum::of_code(&z1, &lz).unwrap(), 2, 1).unwrap();
        assert_eq!(lp.to_string(), "1 + z_1");
    }

    #[test]
    fn chain_level_transform() {
        let c1 = LinearCode::span(f2(), 3, vec![vec![0, 0, 1]]).unwrap();
        let l = levels(&[1, 1, 1]);
        let spectrum = WeightSpectrum::of_code(&c1, &l).unwrap();
        let got: P = level_transform(&spectrum, 2, 2).unwrap();
        assert_eq!(
            got,
            parse_poly("1+z_1+z_2+z_1z_2", VarStyle::Weight).unwrap()
        );
    }

    #[test]
    fn verify_identity_examples() {
        let c = example_code();
        let chi = Character::default_for(f2()).unwrap();
        let l = levels(&[2, 1, 1]);
        for kind in IdentityKind::ENUMERATORS {
            let report: IdentityReport<BigInt> =
                verify_identity(kind, &c, &l, &chi, Some(&[2, 1, 1]), DEFAULT_CAP).unwrap();
            assert!(report.equal, "{kind}: {} vs {}", report.lhs, report.rhs);
        }
        assert!(
            verify_identity::<i64>(IdentityKind::Mspotty, &c, &l, &chi, None, DEFAULT_CAP).is_err()
        );
        assert!(
            verify_identity::<i64>(IdentityKind::Hadamard, &c, &l, &chi, None, DEFAULT_CAP)
                .is_err()
        );
        let json =
            verify_identity::<BigInt>(IdentityKind::Complete, &c, &l, &chi, None, DEFAULT_CAP)
                .unwrap()
                .to_json();
        assert_eq!(json["kind"], "complete");
        assert_eq!(json["equal"], true);
        assert_eq!(json["instance"]["ring"]["kind"], "Zm");
        assert_eq!(json["instance"]["poset"]["levels"], json!([2, 1, 1]));
    }

    #[test]
    fn negative_control() {
        let c1 = LinearCode::span(f2(), 3, vec![vec![0, 0, 1]]).unwrap();
        let c2 = LinearCode::span(f2(), 3, vec![vec![1, 1, 1]]).unwrap();
        let nc: NegativeControl<i64> =
            poset_negative_control(&c1, &c2, &Poset::chain(3).unwrap(), DEFAULT_CAP).unwrap();
        assert!(nc.primal_equal());
        assert!(!nc.dual_equal());
        assert!(nc.is_witness());
    }

    #[test]
    fn hadamard_trivial_functions() {
        let r = ring(RingKind::Zm { m: 4 });
        let chi = Character::default_for(r.clone()).unwrap();
        let c = LinearCode::span(r.clone(), 2, vec![vec![1, 2]]).unwrap();
        let delta = |v: &[Elem]| {
            CycInt::<i64>::from_integer(4, i64::from(v.iter().all(|&x| x == 0))).unwrap()
        };
        let rep = hadamard_check(&chi, &c, delta, DEFAULT_CAP).unwrap();
        assert!(rep.equal);
        assert_eq!(rep.lhs, Side::Scalar(CycInt::one(4).unwrap()));
        let ones = |_: &[Elem]| CycInt::<i64>::one(4).unwrap();
        let rep = hadamard_check(&chi, &c, ones, DEFAULT_CAP).unwrap();
        assert!(rep.equal);
        let dual_size = c.dual().unwrap().size() as i64;
        assert_eq!(
            rep.rhs,
            Side::Scalar(CycInt::from_integer(4, dual_size).unwrap())
        );
        assert_eq!(dual_size, 16 / c.size() as i64);
        let wrong_order = |_: &[Elem]| CycInt::<i64>::one(3).unwrap();
        assert!(hadamard_check(&chi, &c, wrong_order, DEFAULT_CAP).is_err());
    }
}
