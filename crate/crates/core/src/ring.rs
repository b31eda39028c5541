//! Finite commutative Frobenius rings given by operation tables, their
//! ideals, and generating characters.
//!
//! Elements are canonical indices `0..q`, with `0` the additive identity and
//! `1` the multiplicative identity. The index layout per kind:
//!
//! * `Z_m`: the residue itself.
//! * `GF(p^k)`: `Σ c_i p^i` for the polynomial `Σ c_i a^i` modulo the
//!   defining polynomial.
//! * `F2+uF2` (`u² = 0`) and `F2+vF2` (`v² = v`): `x + y·u ↦ x + 2y`, so the
//!   order is `0, 1, u, 1+u`.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::cyclotomic::{CycInt, MAX_ORDER};
use crate::error::{Error, Result};
use crate::scalar::Coeff;

/// A ring element, as its canonical index.
pub type Elem = u8;

/// Largest supported ring.
pub const MAX_RING_SIZE: usize = 64;

/// The catalog of supported rings, also the JSON ring schema.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum RingKind {
    #[serde(rename = "Zm")]
    Zm { m: usize },
    /// `GF(p^k)`; `modulus` holds the defining polynomial's coefficients
    /// low to high. When absent the smallest monic irreducible is used.
    #[serde(rename = "GF")]
    Gf {
        p: usize,
        k: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        modulus: Option<Vec<usize>>,
    },
    #[serde(rename = "F2u")]
    F2u,
    #[serde(rename = "F2v")]
    F2v,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RingOp {
    Add,
    Mul,
    Neg,
}

/// A finite commutative ring with full operation tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingSpec {
    kind: RingKind,
    q: usize,
    add: Vec<Elem>,
    mul: Vec<Elem>,
    neg: Vec<Elem>,
    exponent: u32,
    names: Vec<String>,
}

fn is_prime(n: usize) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

// Polynomials over GF(p), coefficients low to high.

fn poly_rem(num: &[usize], modulus: &[usize], p: usize) -> Vec<usize> {
    let mut rem = num.to_vec();
    let d = modulus.len() - 1;
    let lead_inv = mod_inverse(modulus[d], p);
    while rem.len() > d {
        let top = rem.pop().unwrap();
        if top == 0 {
            continue;
        }
        let factor = top * lead_inv % p;
        let shift = rem.len() - d;
        for (j, m) in modulus[..d].iter().enumerate() {
            rem[shift + j] = (rem[shift + j] + p * p - factor * m % p) % p;
        }
    }
    rem.resize(d, 0);
    rem
}

fn mod_inverse(a: usize, p: usize) -> usize {
    (1..p).find(|x| a * x % p == 1).expect("no inverse mod p")
}

fn is_irreducible(modulus: &[usize], p: usize) -> bool {
    let k = modulus.len() - 1;
    // every monic candidate divisor of degree 1..=k/2
    for deg in 1..=k / 2 {
        let count = p.pow(deg as u32);
        for low in 0..count {
            let mut divisor: Vec<usize> = (0..deg).map(|i| low / p.pow(i as u32) % p).collect();
            divisor.push(1);
            if poly_rem(modulus, &divisor, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

/// Smallest monic irreducible polynomial of degree `k` over `GF(p)`, in
/// index order of its lower coefficients.
pub fn find_irreducible(p: usize, k: usize) -> Result<Vec<usize>> {
    if !is_prime(p) || k == 0 {
        return Err(Error::input(format!("GF({p},{k}) is not a field")));
    }
    let q = p.checked_pow(k as u32).unwrap_or(usize::MAX);
    if q > MAX_RING_SIZE {
        return Err(Error::input(format!(
            "ring size {q} exceeds {MAX_RING_SIZE}"
        )));
    }
    for low in 0..q {
        let mut m: Vec<usize> = (0..k).map(|i| low / p.pow(i as u32) % p).collect();
        m.push(1);
        if is_irreducible(&m, p) {
            return Ok(m);
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

fn gf_name(idx: usize, p: usize, k: usize) -> String {
    let coeffs: Vec<usize> = (0..k).map(|i| idx / p.pow(i as u32) % p).collect();
    let mut parts = Vec::new();
    for (i, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let mono = match i {
            0 => String::new(),
            1 => "a".to_string(),
            _ => format!("a^{i}"),
        };
        parts.push(match (c, i) {
            (_, 0) => c.to_string(),
            (1, _) => mono,
            _ => format!("{c}{mono}"),
        });
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join("+")
    }
}

impl RingSpec {
    /// Builds the tables for a catalog ring and checks the ring axioms
    /// exhaustively.
    pub fn new(kind: RingKind) -> Result<Self> {
        let (kind, q, add, mul, names) = match kind {
            RingKind::Zm { m } => {
                if m < 2 {
                    return Err(Error::input(format!("Z_m needs m >= 2, got {m}")));
                }
                if m > MAX_RING_SIZE {
                    return Err(Error::input(format!(
                        "ring size {m} exceeds {MAX_RING_SIZE}"
                    )));
                }
                let add = table(m, |a, b| (a + b) % m);
                let mul = table(m, |a, b| a * b % m);
                let names = (0..m).map(|a| a.to_string()).collect();
                (RingKind::Zm { m }, m, add, mul, names)
            }
            RingKind::Gf { p, k, modulus } => {
                if !is_prime(p) {
                    return Err(Error::input(format!("GF characteristic {p} is not prime")));
                }
                if k == 0 {
                    return Err(Error::input("GF degree must be positive"));
                }
                let q = p.checked_pow(k as u32).unwrap_or(usize::MAX);
                if q > MAX_RING_SIZE {
                    return Err(Error::input(format!(
                        "ring size {q} exceeds {MAX_RING_SIZE}"
                    )));
                }
                let modulus = match modulus {
                    Some(m) => m,
                    None => find_irreducible(p, k)?,
                };
                if modulus.len() != k + 1 {
                    return Err(Error::input(format!(
                        "GF({p},{k}) modulus needs {} coefficients, got {}",
                        k + 1,
                        modulus.len()
                    )));
                }
                if modulus.iter().any(|&c| c >= p) {
                    return Err(Error::input("modulus coefficient out of range"));
                }
                if modulus[k] != 1 {
                    return Err(Error::input("GF modulus must be monic"));
                }
                if !is_irreducible(&modulus, p) {
                    return Err(Error::input(format!(
                        "modulus {modulus:?} is reducible over GF({p})"
                    )));
                }
                let digits =
                    |x: usize| -> Vec<usize> { (0..k).map(|i| x / p.pow(i as u32) % p).collect() };
                let index =
                    |c: &[usize]| -> usize { c.iter().rev().fold(0, |acc, &d| acc * p + d) };
                let add = table(q, |a, b| {
                    let s: Vec<usize> = digits(a)
                        .iter()
                        .zip(digits(b))
                        .map(|(x, y)| (x + y) % p)
                        .collect();
                    index(&s)
                });
                let mul = table(q, |a, b| {
                    let (da, db) = (digits(a), digits(b));
                    let mut prod = vec![0usize; 2 * k - 1];
                    for (i, x) in da.iter().enumerate() {
                        for (j, y) in db.iter().enumerate() {
                            prod[i + j] = (prod[i + j] + x * y) % p;
                        }
                    }
                    index(&poly_rem(&prod, &modulus, p))
                });
                let names = (0..q).map(|x| gf_name(x, p, k)).collect();
                (
                    RingKind::Gf {
                        p,
                        k,
                        modulus: Some(modulus),
                    },
                    q,
                    add,
                    mul,
                    names,
                )
            }
            RingKind::F2u | RingKind::F2v => {
                let idempotent = matches!(kind, RingKind::F2v);
                let split = |x: usize| (x & 1, x >> 1);
                let add = table(4, |a, b| a ^ b);
                let mul = table(4, |a, b| {
                    let ((a0, a1), (b0, b1)) = (split(a), split(b));
                    // (a0 + a1 t)(b0 + b1 t) with t² = 0 or t² = t
                    let c0 = a0 & b0;
                    let mut c1 = (a0 & b1) ^ (a1 & b0);
                    if idempotent {
                        c1 ^= a1 & b1;
                    }
                    c0 | (c1 << 1)
                });
                let t = if idempotent { "v" } else { "u" };
                let names = vec!["0".into(), "1".into(), t.to_string(), format!("1+{t}")];
                (kind, 4, add, mul, names)
            }
        };
        let neg = (0..q)
            .map(|a| {
                (0..q)
                    .find(|&b| add[a * q + b] as usize == 0)
                    .expect("additive inverse") as Elem
            })
            .collect();
        let mut ring = RingSpec {
            kind,
            q,
            add,
            mul,
            neg,
            exponent: 0,
            names,
        };
        ring.exponent = ring.compute_exponent();
        ring.check_axioms()?;
        Ok(ring)
    }

    fn compute_exponent(&self) -> u32 {
        let mut e = 1usize;
        for a in 0..self.q as Elem {
            let mut order = 1usize;
            let mut acc = a;
            while acc != 0 {
                acc = self.add(acc, a);
                order += 1;
            }
            e = num_integer::lcm(e, order);
        }
        e as u32
    }

    fn check_axioms(&self) -> Result<()> {
        let q = self.q as Elem;
        let fail = |what: &str| Err(Error::integrity(format!("ring table violates {what}")));
        if self.exponent > MAX_ORDER || !self.q.is_multiple_of(self.exponent as usize) {
            return fail("additive exponent bound");
        }
        for a in 0..q {
            if self.add(a, 0) != a || self.mul(a, 1) != a {
                return fail("identity laws");
            }
            for b in 0..q {
                if self.add(a, b) != self.add(b, a) || self.mul(a, b) != self.mul(b, a) {
                    return fail("commutativity");
                }
                for c in 0..q {
                    if self.add(self.add(a, b), c) != self.add(a, self.add(b, c)) {
                        return fail("additive associativity");
                    }
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                        return fail("multiplicative associativity");
                    }
                    if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)) {
                        return fail("distributivity");
                    }
                }
            }
        }
        Ok(())
    }

    pub fn kind(&self) -> &RingKind {
        &self.kind
    }

    /// Number of elements.
    pub fn size(&self) -> usize {
        self.q
    }

    /// Smallest `e` with `e·a = 0` for every `a`.
    pub fn additive_exponent(&self) -> u32 {
        self.exponent
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.q as Elem
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        self.add[a as usize * self.q + b as usize]
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.mul[a as usize * self.q + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        self.neg[a as usize]
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    /// Range-checked table lookup. `Neg` ignores `b`.
    pub fn apply(&self, op: RingOp, a: usize, b: Option<usize>) -> Result<Elem> {
        let check = |x: usize| -> Result<Elem> {
            if x < self.q {
                Ok(x as Elem)
            } else {
                Err(Error::input(format!(
                    "element {x} out of range 0..{}",
                    self.q
                )))
            }
        };
        let a = check(a)?;
        match op {
            RingOp::Neg => Ok(self.neg(a)),
            RingOp::Add | RingOp::Mul => {
                let b = check(b.ok_or_else(|| Error::input("binary op needs two operands"))?)?;
                Ok(if op == RingOp::Add {
                    self.add(a, b)
                } else {
                    self.mul(a, b)
                })
            }
        }
    }

    /// Display name of an element (`u`, `1+v`, `a+1`, `3`, …).
    pub fn name(&self, a: Elem) -> &str {
        &self.names[a as usize]
    }

    /// Inverse of [`RingSpec::name`]; also accepts a plain index.
    pub fn parse_element(&self, s: &str) -> Option<Elem> {
        let s = s.trim();
        if let Some(i) = self.names.iter().position(|n| n == s) {
            return Some(i as Elem);
        }
        s.parse::<usize>()
            .ok()
            .filter(|&i| i < self.q)
            .map(|i| i as Elem)
    }

    /// The principal ideal `R·a`.
    pub fn principal_ideal(&self, a: Elem) -> Ideal {
        let mut mask = 0u64;
        for r in self.elements() {
            mask |= 1 << self.mul(r, a);
        }
        Ideal { mask }
    }

    /// Whether `set` contains zero and is closed under addition and
    /// multiplication by ring elements.
    pub fn is_ideal(&self, set: &[Elem]) -> bool {
        if set.iter().any(|&a| a as usize >= self.q) {
            return false;
        }
        let mask = set.iter().fold(0u64, |m, &a| m | 1 << a);
        if mask & 1 == 0 {
            return false;
        }
        set.iter().all(|&a| {
            set.iter().all(|&b| mask >> self.add(a, b) & 1 == 1)
                && self.elements().all(|r| mask >> self.mul(r, a) & 1 == 1)
        })
    }

    /// All ideals, smallest first.
    ///
    /// Every ideal of a finite ring is a finite sum of principal ideals, so
    /// closing the principal ideals under pairwise sums finds them all.
    pub fn ideals(&self) -> Vec<Ideal> {
        let mut found: Vec<Ideal> = Vec::new();
        for a in self.elements() {
            let i = self.principal_ideal(a);
            if !found.contains(&i) {
                found.push(i);
            }
        }
        let mut frontier = found.clone();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for i in &frontier {
                for j in found.clone() {
                    let s = self.ideal_sum(*i, j);
                    if !found.contains(&s) {
                        found.push(s);
                        next.push(s);
                    }
                }
            }
            frontier = next;
        }
        found.sort_by_key(|i| (i.len(), i.mask));
        found
    }

    fn ideal_sum(&self, i: Ideal, j: Ideal) -> Ideal {
        let mut mask = 0u64;
        for a in i.iter() {
            for b in j.iter() {
                mask |= 1 << self.add(a, b);
            }
        }
        Ideal { mask }
    }
}

fn table(q: usize, f: impl Fn(usize, usize) -> usize) -> Vec<Elem> {
    let mut t = Vec::with_capacity(q * q);
    for a in 0..q {
        for b in 0..q {
            t.push(f(a, b) as Elem);
        }
    }
    t
}

/// A subset of a ring of at most 64 elements, as a bitmask.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Ideal {
    mask: u64,
}

impl Ideal {
    pub fn from_elements(elems: &[Elem]) -> Self {
        Ideal {
            mask: elems.iter().fold(0, |m, &a| m | 1 << a),
        }
    }

    pub fn contains(&self, a: Elem) -> bool {
        self.mask >> a & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn is_zero(&self) -> bool {
        self.mask == 1
    }

    pub fn iter(&self) -> impl Iterator<Item = Elem> + '_ {
        (0..64).filter(|&a| self.contains(a)).map(|a| a as Elem)
    }

    pub fn elements(&self) -> Vec<Elem> {
        self.iter().collect()
    }
}

/// An additive character `χ(a) = ζ_e^{ε(a)}`, with `e` the ring's additive
/// exponent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Character {
    ring: Arc<RingSpec>,
    exponents: Vec<u32>,
}

impl Character {
    /// Wraps an exponent map. Only shape is checked here; additivity is
    /// checked by [`Character::verify_generating`].
    pub fn new(ring: Arc<RingSpec>, exponents: Vec<u32>) -> Result<Self> {
        if exponents.len() != ring.size() {
            return Err(Error::input(format!(
                "character needs {} exponents, got {}",
                ring.size(),
                exponents.len()
            )));
        }
        let e = ring.additive_exponent();
        if let Some(bad) = exponents.iter().find(|&&x| x >= e) {
            return Err(Error::input(format!(
                "character exponent {bad} not below {e}"
            )));
        }
        Ok(Character { ring, exponents })
    }

    /// The catalog character of each ring kind:
    /// `Z_m`: `ε(a) = a`; `GF(p^k)`: the absolute trace;
    /// `F2+uF2`, `F2+vF2`: the coefficient of `u` (resp. `v`).
    pub fn default_for(ring: Arc<RingSpec>) -> Result<Self> {
        let exponents: Vec<u32> = match ring.kind() {
            RingKind::Zm { .. } => ring.elements().map(u32::from).collect(),
            RingKind::Gf { p, k, .. } => {
                let (p, k) = (*p, *k);
                let mut out = Vec::with_capacity(ring.size());
                for a in ring.elements() {
                    // Tr(a) = a + a^p + … + a^{p^{k-1}}
                    let mut tr = 0;
                    let mut frob = a;
                    for _ in 0..k {
                        tr = ring.add(tr, frob);
                        let mut next = 1;
                        for _ in 0..p {
                            next = ring.mul(next, frob);
                        }
                        frob = next;
                    }
                    if tr as usize >= p {
                        return Err(Error::integrity("trace left the prime field"));
                    }
                    out.push(u32::from(tr));
                }
                out
            }
            RingKind::F2u | RingKind::F2v => ring.elements().map(|a| u32::from(a >> 1)).collect(),
        };
        let chi = Character::new(ring, exponents)?;
        if !chi.verify_generating()? {
            return Err(Error::integrity("catalog character is not generating"));
        }
        Ok(chi)
    }

    pub fn ring(&self) -> &Arc<RingSpec> {
        &self.ring
    }

    pub fn order(&self) -> u32 {
        self.ring.additive_exponent()
    }

    /// `ε(a)`.
    #[inline]
    pub fn exponent(&self, a: Elem) -> u32 {
        self.exponents[a as usize]
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    /// `χ(a)` as an exact cyclotomic integer.
    pub fn value<T: Coeff>(&self, a: Elem) -> CycInt<T> {
        CycInt::root_power(self.order(), i64::from(self.exponent(a))).expect("order in range")
    }

    pub fn is_additive(&self) -> bool {
        let e = self.order();
        self.exponents[0] == 0
            && self.ring.elements().all(|a| {
                self.ring.elements().all(|b| {
                    self.exponent(self.ring.add(a, b)) == (self.exponent(a) + self.exponent(b)) % e
                })
            })
    }

    /// True iff no nonzero ideal lies in the kernel. It suffices to test
    /// principal ideals: for each `a ≠ 0` some `r` has `χ(r·a) ≠ 1`.
    pub fn verify_generating(&self) -> Result<bool> {
        if !self.is_additive() {
            return Err(Error::input("exponent map is not additive"));
        }
        let r = &self.ring;
        Ok(r.elements()
            .skip(1)
            .all(|a| r.elements().any(|x| self.exponent(r.mul(x, a)) != 0)))
    }

    /// `Σ_{a∈I} χ(a)` exactly.
    pub fn ideal_sum<T: Coeff>(&self, ideal: &[Elem]) -> Result<CycInt<T>> {
        if !self.ring.is_ideal(ideal) {
            return Err(Error::input(format!("{ideal:?} is not an ideal")));
        }
        let mut counts = vec![0i64; self.order() as usize];
        let mut seen = 0u64;
        for &a in ideal {
            if seen >> a & 1 == 0 {
                seen |= 1 << a;
                counts[self.exponent(a) as usize] += 1;
            }
        }
        CycInt::from_root_counts(self.order(), &counts)
    }
}
