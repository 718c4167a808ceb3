use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A subset of `[n-1]` for a declared ambient `n`.
///
/// Member `i` is stored as bit `i - 1`, so the sets of a given ambient
/// `n` are exactly the integers `0..2^(n-1)`. The ambient is capped at 64.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RankSet {
    ambient: usize,
    bits: u64,
}

pub const MAX_AMBIENT: usize = 64;

impl RankSet {
    pub fn empty(ambient: usize) -> Self {
        RankSet { ambient, bits: 0 }
    }

    pub fn new(ambient: usize, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        if ambient > MAX_AMBIENT {
            return Err(Error::guard("rank set ambient", MAX_AMBIENT, ambient));
        }
        let mut bits = 0u64;
        for i in members {
            if i == 0 || i >= ambient.max(1) {
                return Err(Error::InvalidArgument(format!(
                    "rank {i} outside [1, {}]",
                    ambient.saturating_sub(1)
                )));
            }
            bits |= 1 << (i - 1);
        }
        Ok(RankSet { ambient, bits })
    }

    /// Builds a set from its bit mask; bits beyond `ambient - 1` are an error.
    pub fn from_bits(ambient: usize, bits: u64) -> Result<Self> {
        let width = ambient.saturating_sub(1);
        if width < 64 && bits >> width != 0 {
            return Err(Error::InvalidArgument(format!(
                "mask {bits:#b} exceeds [1, {width}]"
            )));
        }
        Ok(RankSet { ambient, bits })
    }

    pub(crate) fn from_bits_unchecked(ambient: usize, bits: u64) -> Self {
        RankSet { ambient, bits }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn contains(&self, i: usize) -> bool {
        (1..=64).contains(&i) && self.bits >> (i - 1) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (1..self.ambient.max(1)).filter(move |&i| self.contains(i))
    }

    /// No two consecutive integers.
    pub fn is_sparse(&self) -> bool {
        self.bits & (self.bits >> 1) == 0
    }

    /// Every subset of `[ambient-1]`, in increasing mask order.
    pub fn all(ambient: usize) -> impl Iterator<Item = RankSet> {
        let width = ambient.saturating_sub(1);
        assert!(width < 64, "ambient too large to enumerate");
        (0..1u64 << width).map(move |bits| RankSet { ambient, bits })
    }
}

impl fmt::Display for RankSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.iter().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

impl Serialize for RankSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

/// Deserialises from a list of members; the ambient is taken as one more than
/// the largest member, which callers may widen with [`RankSet::with_ambient`].
impl<'de> Deserialize<'de> for RankSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let members = Vec::<usize>::deserialize(d)?;
        let ambient = members.iter().max().map_or(0, |m| m + 1);
        RankSet::new(ambient, members).map_err(serde::de::Error::custom)
    }
}

impl RankSet {
    pub fn with_ambient(self, ambient: usize) -> Result<Self> {
        RankSet::from_bits(ambient, self.bits)
    }
}
