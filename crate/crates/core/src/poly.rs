//! Sparse multivariate polynomials with exact integer coefficients over the
//! enumerator variables.
//!
//! Three variable families appear:
//!
//! * byte variables `z_{S:pattern}`, one per level and level word;
//! * weight variables `z_{S:w}`, one per level and Hamming weight;
//! * plain variables `z_S` carrying ordinary exponents.
//!
//! A plain variable at level 0 is the univariate `x` of the classical
//! enumerators. Monomials and terms are kept in a canonical order, so two
//! polynomials are equal exactly when their term maps are.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};
use std::str::FromStr;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::ring::Elem;
use crate::scalar::Coeff;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VarKind {
    Byte(Vec<Elem>),
    Weight(usize),
    Plain,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VarKey {
    pub level: usize,
    pub kind: VarKind,
}

impl VarKey {
    pub fn byte(level: usize, pattern: Vec<Elem>) -> Self {
        VarKey {
            level,
            kind: VarKind::Byte(pattern),
        }
    }

    pub fn weight(level: usize, w: usize) -> Self {
        VarKey {
            level,
            kind: VarKind::Weight(w),
        }
    }

    pub fn plain(level: usize) -> Self {
        VarKey {
            level,
            kind: VarKind::Plain,
        }
    }

    /// The univariate `x`.
    pub fn x() -> Self {
        Self::plain(0)
    }
}

fn write_index(f: &mut impl fmt::Write, level: usize) -> fmt::Result {
    if level < 10 {
        write!(f, "{level}")
    } else {
        write!(f, "{{{level}}}")
    }
}

fn write_pattern(f: &mut impl fmt::Write, pattern: &[Elem]) -> fmt::Result {
    if pattern.iter().all(|&a| a < 10) {
        for a in pattern {
            write!(f, "{a}")?;
        }
        Ok(())
    } else {
        let parts: Vec<String> = pattern.iter().map(|a| a.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl fmt::Display for VarKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            VarKind::Plain if self.level == 0 => write!(f, "x"),
            VarKind::Plain => {
                write!(f, "z_")?;
                write_index(f, self.level)
            }
            VarKind::Weight(w) => write!(f, "z_{{{}:{w}}}", self.level),
            VarKind::Byte(p) => {
                write!(f, "z_{{{}:", self.level)?;
                write_pattern(f, p)?;
                write!(f, "}}")
            }
        }
    }
}

/// A product of variable powers, sorted by variable, no zero exponents.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(Vec<(VarKey, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(key: VarKey) -> Self {
        Self::power(key, 1)
    }

    pub fn power(key: VarKey, exp: u32) -> Self {
        if exp == 0 {
            Self::one()
        } else {
            Monomial(vec![(key, exp)])
        }
    }

    /// Builds from arbitrary factors, merging repeats.
    pub fn from_factors(factors: impl IntoIterator<Item = (VarKey, u32)>) -> Self {
        let mut map: BTreeMap<VarKey, u32> = BTreeMap::new();
        for (k, e) in factors {
            if e > 0 {
                *map.entry(k).or_default() += e;
            }
        }
        Monomial(map.into_iter().collect())
    }

    pub fn factors(&self) -> &[(VarKey, u32)] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    pub fn exponent_of(&self, key: &VarKey) -> u32 {
        self.0.iter().find(|(k, _)| k == key).map_or(0, |(_, e)| *e)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial::from_factors(self.0.iter().chain(&other.0).cloned())
    }

    pub fn pow(&self, exp: u32) -> Monomial {
        Monomial(
            self.0
                .iter()
                .filter(|_| exp > 0)
                .map(|(k, e)| (k.clone(), e * exp))
                .collect(),
        )
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        for (k, e) in &self.0 {
            write!(f, "{k}")?;
            if *e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// A polynomial in the enumerator variables with coefficients in `T`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EnumeratorPoly<T> {
    terms: BTreeMap<Monomial, T>,
}

impl<T> Default for EnumeratorPoly<T> {
    fn default() -> Self {
        EnumeratorPoly {
            terms: BTreeMap::new(),
        }
    }
}

impl<T: Coeff> EnumeratorPoly<T> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::term(Monomial::one(), T::one())
    }

    pub fn term(m: Monomial, c: T) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    /// Adds `c·m` in place, dropping the term if it cancels.
    pub fn add_term(&mut self, m: Monomial, c: T) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().clone() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &T)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> T {
        self.terms.get(m).cloned().unwrap_or_else(T::zero)
    }

    /// Value at all variables equal to one.
    pub fn coefficient_sum(&self) -> T {
        self.terms.values().fold(T::zero(), |a, c| a + c.clone())
    }

    pub fn all_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1.clone() * c2.clone());
            }
        }
        out
    }

    pub fn scale(&self, k: &T) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c.clone() * k.clone());
        }
        out
    }

    /// Divides every coefficient by `d`; `None` if any division leaves a
    /// remainder.
    pub fn div_exact(&self, d: &T) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let (q, r) = c.div_rem(d);
            if !r.is_zero() {
                return None;
            }
            out.add_term(m.clone(), q);
        }
        Some(out)
    }

    /// Replaces every variable `v` by the monomial `f(v)` and collects like
    /// terms.
    pub fn substitute<F>(&self, mut f: F) -> Result<Self>
    where
        F: FnMut(&VarKey) -> Result<Monomial>,
    {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let mut image = Monomial::one();
            for (k, e) in m.factors() {
                image = image.mul(&f(k)?.pow(*e));
            }
            out.add_term(image, c.clone());
        }
        Ok(out)
    }

    /// Coefficients of a polynomial in `x` alone, indexed by degree.
    pub fn univariate_coeffs(&self) -> Option<Vec<T>> {
        let mut out: Vec<T> = Vec::new();
        for (m, c) in &self.terms {
            let deg = match m.factors() {
                [] => 0,
                [(k, e)] if *k == VarKey::x() => *e as usize,
                _ => return None,
            };
            if out.len() <= deg {
                out.resize(deg + 1, T::zero());
            }
            out[deg] = c.clone();
        }
        Some(out)
    }

    /// JSON term list: `[{"coeff": c, "vars": [...]}, …]` in canonical order.
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(m, c)| {
                let vars: Vec<Value> = m
                    .factors()
                    .iter()
                    .map(|(k, e)| {
                        let mut v = match &k.kind {
                            VarKind::Byte(p) => {
                                json!({"level": k.level, "kind": "byte", "pattern": p})
                            }
                            VarKind::Weight(w) => {
                                json!({"level": k.level, "kind": "weight", "w": w})
                            }
                            VarKind::Plain => {
                                json!({"level": k.level, "kind": "plain", "exp": e})
                            }
                        };
                        if *e > 1 && !matches!(k.kind, VarKind::Plain) {
                            v["exp"] = json!(e);
                        }
                        v
                    })
                    .collect();
                json!({"coeff": integer_json(c), "vars": vars})
            })
            .collect();
        Value::Array(terms)
    }
}

/// An exact integer as a JSON number, at any size.
pub fn integer_json<T: Coeff>(c: &T) -> Value {
    let n = serde_json::Number::from_str(&c.to_string()).expect("integer literal");
    Value::Number(n)
}

impl<T: Coeff> fmt::Display for EnumeratorPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mag = c.abs();
            if m.is_one() {
                write!(out, "{mag}")?;
            } else {
                if mag != T::one() {
                    write!(out, "{mag}")?;
                }
                write!(out, "{m}")?;
            }
        }
        f.write_str(&out)
    }
}

/// How to read `z_{a:b}`: as a byte variable (pattern `b`) or a weight
/// variable (weight `b`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VarStyle {
    Byte,
    Weight,
}

/// Parses the text form produced by `Display`, spaces optional:
/// `1 + z_3`, `z_{1:00}z_{2:0}`, `1+x+2x^2`, `z_1^2z_2`.
pub fn parse_poly<T: Coeff>(text: &str, style: VarStyle) -> Result<EnumeratorPoly<T>> {
    let chars: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
    let mut p = Parser { s: &chars, i: 0 };
    let mut out = EnumeratorPoly::zero();
    if p.s.is_empty() {
        return Err(Error::input("empty polynomial"));
    }
    if p.s == ['0'] {
        return Ok(out);
    }
    let mut sign = T::one();
    if p.eat('-') {
        sign = -sign;
    }
    loop {
        let (m, c) = p.term::<T>(style)?;
        out.add_term(m, c * sign.clone());
        if p.eat('+') {
            sign = T::one();
        } else if p.eat('-') {
            sign = -T::one();
        } else if p.i == p.s.len() {
            return Ok(out);
        } else {
            return Err(p.error("expected '+' or '-'"));
        }
    }
}

struct Parser<'a> {
    s: &'a [char],
    i: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<char> {
        self.s.get(self.i).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.i += 1;
            true
        } else {
            false
        }
    }

    fn error(&self, msg: &str) -> Error {
        let rest: String = self.s[self.i.min(self.s.len())..].iter().collect();
        Error::input(format!(
            "polynomial parse error at {}: {msg} (near {rest:?})",
            self.i
        ))
    }

    fn digits(&mut self) -> Option<String> {
        let start = self.i;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.i += 1;
        }
        (self.i > start).then(|| self.s[start..self.i].iter().collect())
    }

    fn number(&mut self) -> Result<usize> {
        self.digits()
            .ok_or_else(|| self.error("expected a number"))?
            .parse()
            .map_err(|_| self.error("number too large"))
    }

    fn exponent(&mut self) -> Result<u32> {
        if self.eat('^') {
            Ok(self.number()? as u32)
        } else {
            Ok(1)
        }
    }

    fn term<T: Coeff>(&mut self, style: VarStyle) -> Result<(Monomial, T)> {
        let coeff = match self.digits() {
            Some(d) => T::from_str_radix(&d, 10).map_err(|_| self.error("bad coefficient"))?,
            None => T::one(),
        };
        let had_coeff = self.i > 0 && self.s[self.i - 1].is_ascii_digit();
        let mut factors = Vec::new();
        loop {
            match self.peek() {
                Some('x') => {
                    self.i += 1;
                    factors.push((VarKey::x(), self.exponent()?));
                }
                Some('z') => {
                    self.i += 1;
                    if !self.eat('_') {
                        return Err(self.error("expected '_' after 'z'"));
                    }
                    let key = self.z_body(style)?;
                    factors.push((key, self.exponent()?));
                }
                Some('*') => {
                    self.i += 1;
                }
                _ => break,
            }
        }
        if factors.is_empty() && !had_coeff {
            return Err(self.error("expected a term"));
        }
        Ok((Monomial::from_factors(factors), coeff))
    }

    fn z_body(&mut self, style: VarStyle) -> Result<VarKey> {
        if !self.eat('{') {
            let c = self.peek().filter(char::is_ascii_digit);
            let c = c.ok_or_else(|| self.error("expected a level digit"))?;
            self.i += 1;
            return Ok(VarKey::plain(c.to_digit(10).unwrap() as usize));
        }
        let level = self.number()?;
        if self.eat('}') {
            return Ok(VarKey::plain(level));
        }
        if !self.eat(':') {
            return Err(self.error("expected ':' or '}'"));
        }
        let start = self.i;
        while self.peek().is_some_and(|c| c != '}') {
            self.i += 1;
        }
        let body: String = self.s[start..self.i].iter().collect();
        if !self.eat('}') {
            return Err(self.error("unterminated variable"));
        }
        let bad = || Error::input(format!("bad variable body {body:?}"));
        match style {
            VarStyle::Weight => Ok(VarKey::weight(level, body.parse().map_err(|_| bad())?)),
            VarStyle::Byte => {
                let pattern: Option<Vec<Elem>> = if body.contains(',') {
                    body.split(',').map(|s| s.parse().ok()).collect()
                } else {
                    body.chars()
                        .map(|c| c.to_digit(10).map(|d| d as Elem))
                        .collect()
                };
                let pattern = pattern.filter(|p| !p.is_empty()).ok_or_else(bad)?;
                Ok(VarKey::byte(level, pattern))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type P = EnumeratorPoly<i64>;

    fn z(level: usize) -> Monomial {
        Monomial::var(VarKey::plain(level))
    }

    #[test]
    fn canonical_rendering() {
        let mut p = P::one();
        p.add_term(z(1).mul(&z(1)).mul(&z(2)), 1);
        p.add_term(z(1).mul(&z(3)), 1);
        p.add_term(z(1).mul(&z(2)).mul(&z(3)), 1);
        assert_eq!(p.to_string(), "1 + z_1z_2z_3 + z_1z_3 + z_1^2z_2");
        let mut q = P::one();
        q.add_term(Monomial::var(VarKey::x()), 1);
        q.add_term(Monomial::power(VarKey::x(), 2), 2);
        assert_eq!(q.to_string(), "1 + x + 2x^2");
        assert_eq!(P::zero().to_string(), "0");
        assert_eq!(P::term(z(1), -3).to_string(), "-3z_1");
    }

    #[test]
    fn byte_and_weight_variables() {
        let m = Monomial::from_factors([
            (VarKey::byte(2, vec![1]), 1),
            (VarKey::byte(1, vec![1, 0]), 1),
        ]);
        assert_eq!(m.to_string(), "z_{1:10}z_{2:1}");
        let w = Monomial::var(VarKey::weight(3, 2));
        assert_eq!(w.to_string(), "z_{3:2}");
        let wide = Monomial::var(VarKey::byte(1, vec![12, 3]));
        assert_eq!(wide.to_string(), "z_{1:12,3}");
    }

    #[test]
    fn parse_examples() {
        let p: P = parse_poly("1+z_1z_2z_3+z_1z_3+z_1^2z_2", VarStyle::Weight).unwrap();
        assert_eq!(p.to_string(), "1 + z_1z_2z_3 + z_1z_3 + z_1^2z_2");
        let b: P = parse_poly(
            "z_{1:00}z_{2:0}z_{3:0}+z_{1:10}z_{2:1}z_{3:1}",
            VarStyle::Byte,
        )
        .unwrap();
        assert_eq!(b.len(), 2);
        assert!(b
            .terms()
            .any(|(m, _)| m.exponent_of(&VarKey::byte(1, vec![1, 0])) == 1));
        let c: P = parse_poly("z_{1:2}z_{2:1}", VarStyle::Weight).unwrap();
        assert_eq!(c.to_string(), "z_{1:2}z_{2:1}");
        let x: P = parse_poly("1 + x^3", VarStyle::Weight).unwrap();
        assert_eq!(x.univariate_coeffs().unwrap(), vec![1, 0, 0, 1]);
        let neg: P = parse_poly("-2 + 3z_1 - z_1", VarStyle::Weight).unwrap();
        assert_eq!(neg.to_string(), "-2 + 2z_1");
        assert!(parse_poly::<i64>("1 + ", VarStyle::Weight).is_err());
        assert!(parse_poly::<i64>("", VarStyle::Weight).is_err());
        assert!(parse_poly::<i64>("z_{1:a}", VarStyle::Byte).is_err());
        assert!(parse_poly::<i64>("y", VarStyle::Byte).is_err());
    }

    #[test]
    fn arithmetic_and_division() {
        let a: P = parse_poly("1 + z_1", VarStyle::Weight).unwrap();
        let sq = a.mul(&a);
        assert_eq!(sq.to_string(), "1 + 2z_1 + z_1^2");
        assert_eq!(sq.coefficient_sum(), 4);
        assert!(sq.div_exact(&2).is_none());
        let doubled = sq.scale(&2);
        assert_eq!(doubled.div_exact(&2).unwrap(), sq);
        assert!(a.add(&a.scale(&-1)).is_zero());
    }

    #[test]
    fn substitution_collects_terms() {
        let p: P = parse_poly("z_{1:0}z_{2:1} + z_{1:1}z_{2:0}", VarStyle::Weight).unwrap();
        let q = p
            .substitute(|k| {
                Ok(match k.kind {
                    VarKind::Weight(w) => Monomial::power(VarKey::x(), w as u32),
                    _ => unreachable!(),
                })
            })
            .unwrap();
        assert_eq!(q.to_string(), "2x");
    }

    #[test]
    fn json_shape() {
        let p: EnumeratorPoly<BigInt> = parse_poly("2z_{1:10}z_{2:1} + 1", VarStyle::Byte).unwrap();
        let j = p.to_json();
        assert_eq!(
            j,
            json!([
                {"coeff": 1, "vars": []},
                {"coeff": 2, "vars": [
                    {"level": 1, "kind": "byte", "pattern": [1, 0]},
                    {"level": 2, "kind": "byte", "pattern": [1]}
                ]}
            ])
        );
        let big: EnumeratorPoly<BigInt> = EnumeratorPoly::term(
            z(2).pow(3),
            "123456789012345678901234567890".parse().unwrap(),
        );
        assert_eq!(
            big.to_json().to_string(),
            r#"[{"coeff":123456789012345678901234567890,"vars":[{"exp":3,"kind":"plain","level":2}]}]"#
        );
    }
}
