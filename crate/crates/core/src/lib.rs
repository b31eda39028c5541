//! Poset level weight enumerators of linear codes over finite commutative
//! Frobenius rings, their MacWilliams-type transforms, and a harness that
//! checks every transform against brute-force enumeration of the dual code.
//!
//! Everything is exact: character values live in the cyclotomic integers
//! and enumerators are polynomials with integer coefficients. The numeric
//! types are generic over the coefficient scalar (see [`scalar::Coeff`]);
//! the aliases below fix it to arbitrary-precision integers.

pub mod code;
pub mod corpus;
pub mod cyclotomic;
pub mod enumerators;
pub mod error;
pub mod fuzz;
pub mod io;
pub mod macwilliams;
pub mod poly;
pub mod poset;
pub mod ring;
pub mod scalar;

pub use code::{inner_product, LinearCode, Word};
pub use cyclotomic::{cyclotomic_poly, CycInt};
pub use error::{Error, Result, DEFAULT_CAP};
pub use macwilliams::{IdentityKind, IdentityReport};
pub use poly::{EnumeratorPoly, Monomial, VarKey, VarKind, VarStyle};
pub use poset::{LevelStructure, Poset, PosetKind};
pub use ring::{Character, Elem, Ideal, RingKind, RingOp, RingSpec};
pub use scalar::Coeff;

/// Default exact integer.
pub type Int = num_bigint::BigInt;
/// Cyclotomic integer with arbitrary-precision coordinates.
pub type Cyc = CycInt<Int>;
/// Enumerator polynomial with arbitrary-precision coefficients.
pub type Poly = EnumeratorPoly<Int>;
