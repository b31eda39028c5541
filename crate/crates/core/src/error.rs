use thiserror::Error;

/// Everything that can go wrong in the library.
///
/// The variants are grouped by how a caller should react: bad input is the
/// caller's fault, a resource error means the instance is too large for
/// exhaustive enumeration, and an integrity error means an exact identity
/// produced a remainder or a non-integer where none is possible.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    Input(String),

    #[error("enumeration of {needed} items exceeds cap {cap}")]
    Resource { needed: u128, cap: u64 },

    #[error("integrity failure: {0}")]
    Integrity(String),

    #[error("cyclotomic order mismatch: {0} vs {1}")]
    OrderMismatch(u32, u32),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn integrity(msg: impl Into<String>) -> Self {
        Error::Integrity(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;

/// Default bound on the number of words any exhaustive loop may visit.
pub const DEFAULT_CAP: u64 = 1 << 24;

pub(crate) fn check_cap(needed: u128, cap: u64) -> Result<()> {
    if needed > cap as u128 {
        Err(Error::Resource { needed, cap })
    } else {
        Ok(())
    }
}

/// `base^exp` without overflow, saturating at `u128::MAX`.
pub(crate) fn saturating_pow(base: usize, exp: usize) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.saturating_mul(base as u128);
    }
    acc
}
