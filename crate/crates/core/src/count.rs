use std::fmt;

use rug::Integer;

use crate::certify::CertifiedInteger;
use crate::error::{Error, Result};
use crate::graph::ZeroReason;

/// Exact number of spanning trees (or converging arborescences).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TreeCount(Integer);

impl TreeCount {
    pub fn new(value: Integer) -> Result<Self> {
        if value < 0 {
            return Err(Error::Inconsistent(format!("negative tree count {value}")));
        }
        Ok(Self(value))
    }

    pub fn zero() -> Self {
        Self(Integer::new())
    }

    pub fn value(&self) -> &Integer {
        &self.0
    }

    pub fn into_inner(self) -> Integer {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl From<u64> for TreeCount {
    fn from(value: u64) -> Self {
        Self(Integer::from(value))
    }
}

impl PartialEq<u64> for TreeCount {
    fn eq(&self, other: &u64) -> bool {
        self.0 == *other
    }
}

impl fmt::Display for TreeCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A count together with how it was obtained.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountResult {
    pub count: TreeCount,
    /// Working precision of the certifying enclosure; 0 for exact paths.
    pub bits_used: u32,
    /// Set when the count was short-circuited by a structural zero test.
    pub zero_reason: Option<ZeroReason>,
}

impl CountResult {
    pub fn exact(count: TreeCount) -> Self {
        Self {
            count,
            bits_used: 0,
            zero_reason: None,
        }
    }

    pub fn structural_zero(reason: ZeroReason) -> Self {
        Self {
            count: TreeCount::zero(),
            bits_used: 0,
            zero_reason: Some(reason),
        }
    }

    pub(crate) fn from_certified(certified: CertifiedInteger) -> Result<Self> {
        Ok(Self {
            count: TreeCount::new(certified.value)?,
            bits_used: certified.bits_used,
            zero_reason: None,
        })
    }
}
