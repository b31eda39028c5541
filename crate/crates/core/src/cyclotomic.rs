//! Exact arithmetic in the cyclotomic integers `Z[ζ_e]`.
//!
//! Elements are stored in the power basis `1, ζ, …, ζ^{φ(e)-1}` after
//! reduction modulo the cyclotomic polynomial `Φ_e`. That basis is a
//! Z-basis of `Z[ζ_e]`, so two elements are equal exactly when their
//! coefficient vectors are, which is what the identity checks rely on.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::OnceLock;

use num_traits::{Float, FloatConst, Zero};

use crate::error::{Error, Result};
use crate::scalar::Coeff;

/// Largest supported root-of-unity order.
pub const MAX_ORDER: u32 = 64;

fn phi_table() -> &'static [Vec<i64>] {
    static TABLE: OnceLock<Vec<Vec<i64>>> = OnceLock::new();
    TABLE.get_or_init(|| {
        // index 0 unused
        let mut table: Vec<Vec<i64>> = vec![Vec::new()];
        for e in 1..=MAX_ORDER as usize {
            // x^e - 1
            let mut num = vec![0i64; e + 1];
            num[0] = -1;
            num[e] = 1;
            for d in (1..e).filter(|d| e % d == 0) {
                num = exact_divide_monic(&num, &table[d]);
            }
            table.push(num);
        }
        table
    })
}

/// Exact division by a monic polynomial; panics on a nonzero remainder.
fn exact_divide_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dn = den.len() - 1;
    let mut rem = num.to_vec();
    let mut quot = vec![0i64; num.len() - dn];
    for i in (dn..num.len()).rev() {
        let c = rem[i];
        if c == 0 {
            continue;
        }
        quot[i - dn] = c;
        for (j, d) in den.iter().enumerate() {
            rem[i - dn + j] -= c * d;
        }
    }
    assert!(rem.iter().all(|&r| r == 0), "division not exact");
    quot
}

/// The `e`-th cyclotomic polynomial, coefficients low to high.
pub fn cyclotomic_poly(e: u32) -> Result<Vec<i64>> {
    check_order(e)?;
    Ok(phi_table()[e as usize].clone())
}

/// Euler's totient, which is also `deg Φ_e`.
pub fn totient(e: u32) -> usize {
    if (1..=MAX_ORDER).contains(&e) {
        phi_table()[e as usize].len() - 1
    } else {
        (1..=e).filter(|k| num_integer::gcd(*k, e) == 1).count()
    }
}

fn check_order(e: u32) -> Result<()> {
    if e == 0 || e > MAX_ORDER {
        Err(Error::input(format!(
            "root of unity order {e} outside 1..={MAX_ORDER}"
        )))
    } else {
        Ok(())
    }
}

/// An element of `Z[ζ_e]` in canonical power-basis form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CycInt<T> {
    order: u32,
    coeffs: Vec<T>,
}

impl<T: Coeff> CycInt<T> {
    pub fn zero(order: u32) -> Result<Self> {
        check_order(order)?;
        Ok(CycInt {
            order,
            coeffs: vec![T::zero(); totient(order)],
        })
    }

    pub fn from_integer(order: u32, n: T) -> Result<Self> {
        let mut z = Self::zero(order)?;
        z.coeffs[0] = n;
        Ok(z)
    }

    pub fn one(order: u32) -> Result<Self> {
        Self::from_integer(order, T::one())
    }

    /// `ζ_e^k`, for any integer `k`.
    pub fn root_power(order: u32, k: i64) -> Result<Self> {
        check_order(order)?;
        let k = k.rem_euclid(order as i64) as usize;
        let mut raw = vec![T::zero(); k + 1];
        raw[k] = T::one();
        Ok(Self::reduce(order, raw))
    }

    /// `Σ_k counts[k] ζ_e^k`, where `counts` may have any length.
    pub fn from_root_counts(order: u32, counts: &[i64]) -> Result<Self> {
        check_order(order)?;
        let e = order as usize;
        let mut raw = vec![T::zero(); e.max(1)];
        for (k, c) in counts.iter().enumerate() {
            if *c != 0 {
                raw[k % e] = raw[k % e].clone() + T::from_i64_exact(*c);
            }
        }
        Ok(Self::reduce(order, raw))
    }

    /// Builds an element from arbitrary-length power coefficients,
    /// reducing modulo `Φ_e`.
    pub fn from_power_coeffs(order: u32, coeffs: Vec<T>) -> Result<Self> {
        check_order(order)?;
        Ok(Self::reduce(order, coeffs))
    }

    fn reduce(order: u32, mut raw: Vec<T>) -> Self {
        let phi = &phi_table()[order as usize];
        let d = phi.len() - 1;
        if raw.len() > d {
            for i in (d..raw.len()).rev() {
                let c = raw[i].clone();
                if c.is_zero() {
                    continue;
                }
                for (j, p) in phi.iter().enumerate() {
                    if *p != 0 {
                        let idx = i - d + j;
                        raw[idx] = raw[idx].clone() - c.clone() * T::from_i64_exact(*p);
                    }
                }
            }
        }
        raw.resize(d, T::zero());
        CycInt { order, coeffs: raw }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Power-basis coordinates, length `φ(e)`.
    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_integer(&self) -> bool {
        self.coeffs.iter().skip(1).all(Zero::is_zero)
    }

    pub fn to_integer(&self) -> Option<T> {
        self.is_integer().then(|| self.coeffs[0].clone())
    }

    fn same_order(&self, other: &Self) -> Result<()> {
        if self.order == other.order {
            Ok(())
        } else {
            Err(Error::OrderMismatch(self.order, other.order))
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.same_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.clone() + b.clone())
            .collect();
        Ok(CycInt {
            order: self.order,
            coeffs,
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&-other.clone())
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.same_order(other)?;
        let n = self.coeffs.len();
        let mut raw = vec![T::zero(); 2 * n - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    raw[i + j] = raw[i + j].clone() + a.clone() * b.clone();
                }
            }
        }
        Ok(Self::reduce(self.order, raw))
    }

    pub fn scale(&self, k: &T) -> Self {
        CycInt {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c.clone() * k.clone()).collect(),
        }
    }

    /// Division by a rational integer, `None` unless every coordinate is
    /// divisible.
    pub fn div_exact(&self, d: &T) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            let (q, r) = c.div_rem(d);
            if !r.is_zero() {
                return None;
            }
            coeffs.push(q);
        }
        Some(CycInt {
            order: self.order,
            coeffs,
        })
    }

    /// Numeric value at `ζ_e = exp(2πi/e)`, as `(re, im)`.
    pub fn eval<F: Float + FloatConst>(&self) -> (F, F) {
        let e = F::from(self.order).unwrap();
        let mut re = F::zero();
        let mut im = F::zero();
        for (k, c) in self.coeffs.iter().enumerate() {
            let c = F::from(c.clone()).unwrap();
            let angle = F::TAU() * F::from(k).unwrap() / e;
            re = re + c * angle.cos();
            im = im + c * angle.sin();
        }
        (re, im)
    }
}

impl<T: Coeff> Neg for CycInt<T> {
    type Output = Self;
    fn neg(self) -> Self {
        CycInt {
            order: self.order,
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl<T: Coeff> $trait<&CycInt<T>> for &CycInt<T> {
            type Output = CycInt<T>;
            /// Panics when the orders differ; use the `checked_` form to
            /// get an error instead.
            fn $method(self, rhs: &CycInt<T>) -> CycInt<T> {
                self.$checked(rhs).expect("cyclotomic order mismatch")
            }
        }

        impl<T: Coeff> $trait for CycInt<T> {
            type Output = CycInt<T>;
            fn $method(self, rhs: CycInt<T>) -> CycInt<T> {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl<T: Coeff> fmt::Display for CycInt<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if mag != T::one() {
                        write!(f, "{mag}")?;
                    }
                    write!(f, "ζ{}", self.order)?;
                    if k > 1 {
                        write!(f, "^{k}")?;
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
