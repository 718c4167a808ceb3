use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::perm::Word;

pub const MAX_NATURAL: usize = 64;

/// A partial order on `[n]` refining the integer order: `i < j` in the poset
/// implies `i < j` as integers. Labels are 1-based in the public API.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NaturalPoset {
    n: usize,
    // below[j] = mask of i (0-based) with i < j in the poset
    below: Vec<u64>,
}

impl NaturalPoset {
    /// The order generated by `pairs` (`(a, b)` meaning `a < b`), transitively closed.
    pub fn from_relations(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        if n > MAX_NATURAL {
            return Err(Error::guard("natural poset size", MAX_NATURAL, n));
        }
        let mut below = vec![0u64; n];
        for &(a, b) in pairs {
            if a == 0 || b == 0 || a > n || b > n {
                return Err(Error::InvalidPoset(format!(
                    "relation {a} < {b} outside [1, {n}]"
                )));
            }
            if a >= b {
                return Err(Error::InvalidPoset(format!(
                    "relation {a} < {b} is not natural"
                )));
            }
            below[b - 1] |= 1 << (a - 1);
        }
        // increasing order is a linear extension, so one pass closes transitively
        for j in 0..n {
            let mut acc = below[j];
            let mut rest = below[j];
            while rest != 0 {
                let i = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                acc |= below[i];
            }
            below[j] = acc;
        }
        Ok(NaturalPoset { n, below })
    }

    /// Relabels an arbitrary acyclic relation on `[n]` along a linear extension.
    /// Returns the natural poset and `label[old - 1] = new`.
    pub fn naturalize(n: usize, pairs: &[(usize, usize)]) -> Result<(Self, Vec<usize>)> {
        let mut indeg = vec![0usize; n];
        let mut succ = vec![Vec::new(); n];
        for &(a, b) in pairs {
            if a == 0 || b == 0 || a > n || b > n || a == b {
                return Err(Error::InvalidPoset(format!("bad relation {a} < {b}")));
            }
            succ[a - 1].push(b - 1);
            indeg[b - 1] += 1;
        }
        let mut label = vec![0usize; n];
        let mut next = 1;
        let mut ready: std::collections::BTreeSet<usize> =
            (0..n).filter(|&i| indeg[i] == 0).collect();
        while let Some(i) = ready.pop_first() {
            label[i] = next;
            next += 1;
            for &j in &succ[i] {
                indeg[j] -= 1;
                if indeg[j] == 0 {
                    ready.insert(j);
                }
            }
        }
        if next != n + 1 {
            return Err(Error::InvalidPoset("relation has a cycle".into()));
        }
        let relabeled: Vec<(usize, usize)> = pairs
            .iter()
            .map(|&(a, b)| (label[a - 1], label[b - 1]))
            .collect();
        Ok((Self::from_relations(n, &relabeled)?, label))
    }

    pub(crate) fn from_masks(below: Vec<u64>) -> Self {
        NaturalPoset {
            n: below.len(),
            below,
        }
    }

    pub fn chain(n: usize) -> Self {
        let pairs: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
        Self::from_relations(n, &pairs).expect("chain is natural")
    }

    pub fn antichain(n: usize) -> Self {
        Self::from_relations(n, &[]).expect("antichain is natural")
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// `a < b` in the poset (1-based labels).
    pub fn lt(&self, a: usize, b: usize) -> bool {
        a >= 1 && b >= 1 && a <= self.n && b <= self.n && self.below[b - 1] >> (a - 1) & 1 == 1
    }

    pub(crate) fn below_mask(&self, j: usize) -> u64 {
        self.below[j]
    }

    pub(crate) fn lt0(&self, i: usize, j: usize) -> bool {
        self.below[j] >> i & 1 == 1
    }

    pub(crate) fn comparable0(&self, i: usize, j: usize) -> bool {
        self.lt0(i, j) || self.lt0(j, i)
    }

    /// All relations `a < b`, 1-based, in lexicographic order.
    pub fn relations(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.n {
            for b in a + 1..self.n {
                if self.lt0(a, b) {
                    out.push((a + 1, b + 1));
                }
            }
        }
        out
    }

    /// Cover relations `a < b` with nothing strictly between.
    pub fn cover_relations(&self) -> Vec<(usize, usize)> {
        self.relations()
            .into_iter()
            .filter(|&(a, b)| !(a + 1..b).any(|c| self.lt(a, c) && self.lt(c, b)))
            .collect()
    }

    /// Every element of `self` below every element of `other`; `other` is relabeled `n+1..`.
    pub fn ordinal_sum(&self, other: &NaturalPoset) -> Result<NaturalPoset> {
        let n = self.n + other.n;
        if n > MAX_NATURAL {
            return Err(Error::guard("natural poset size", MAX_NATURAL, n));
        }
        let all_self = if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        };
        let mut below = self.below.clone();
        below.extend(other.below.iter().map(|m| m << self.n | all_self));
        Ok(NaturalPoset { n, below })
    }

    /// Side-by-side union; `other` is relabeled `n+1..`.
    pub fn disjoint_union(&self, other: &NaturalPoset) -> Result<NaturalPoset> {
        let n = self.n + other.n;
        if n > MAX_NATURAL {
            return Err(Error::guard("natural poset size", MAX_NATURAL, n));
        }
        let mut below = self.below.clone();
        below.extend(other.below.iter().map(|m| m << self.n));
        Ok(NaturalPoset { n, below })
    }

    /// No induced subposet formed by two disjoint incomparable 2-element chains.
    pub fn is_two_plus_two_free(&self) -> bool {
        let pairs: Vec<(usize, usize)> = (0..self.n)
            .flat_map(|a| (0..self.n).filter(move |&b| a != b).map(move |b| (a, b)))
            .filter(|&(a, b)| self.lt0(a, b))
            .collect();
        for (i, &(a, b)) in pairs.iter().enumerate() {
            for &(c, d) in &pairs[i + 1..] {
                if [c, d].contains(&a) || [c, d].contains(&b) {
                    continue;
                }
                let cross = self.comparable0(a, c)
                    || self.comparable0(a, d)
                    || self.comparable0(b, c)
                    || self.comparable0(b, d);
                if !cross {
                    return false;
                }
            }
        }
        true
    }

    /// No 3-element antichain.
    pub fn is_width_le_two(&self) -> bool {
        for a in 0..self.n {
            for b in a + 1..self.n {
                if self.comparable0(a, b) {
                    continue;
                }
                for c in b + 1..self.n {
                    if !self.comparable0(a, c) && !self.comparable0(b, c) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Whether `w` (a permutation of `[n]`) lists every `a < b` with `a` first.
    pub fn is_linear_extension(&self, w: &Word) -> bool {
        if w.len() != self.n || !w.is_permutation() {
            return false;
        }
        let mut placed = 0u64;
        for &a in w.letters() {
            let i = a as usize - 1;
            if self.below[i] & !placed != 0 {
                return false;
            }
            placed |= 1 << i;
        }
        true
    }
}

/// Partially commutative word poset: positions `1..=r` of `word`, with `a < b`
/// whenever `a < b` as positions and the letters at `a` and `b` are equal or
/// do not commute. Its linear extensions are the rearrangements of `word`
/// reachable by commuting neighbours.
pub fn trace_poset(word: &Word, commute: impl Fn(u32, u32) -> bool) -> Result<NaturalPoset> {
    let g = word.letters();
    let mut pairs = Vec::new();
    for a in 0..g.len() {
        for b in a + 1..g.len() {
            if g[a] == g[b] || !commute(g[a], g[b]) {
                pairs.push((a + 1, b + 1));
            }
        }
    }
    NaturalPoset::from_relations(g.len(), &pairs)
}

/// The poset on `[n]` whose linear extensions are the class of `12...n`:
/// `a < b` exactly when `a < b` and `|a - b| != 1`.
pub fn q_from_commuting_word(n: usize) -> Result<NaturalPoset> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    trace_poset(&Word::identity(n), |a, b| a.abs_diff(b) == 1)
}

#[derive(Serialize, Deserialize)]
struct NaturalJson {
    n: usize,
    relations: Vec<(usize, usize)>,
}

impl Serialize for NaturalPoset {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        NaturalJson {
            n: self.n,
            relations: self.cover_relations(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for NaturalPoset {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = NaturalJson::deserialize(d)?;
        NaturalPoset::from_relations(raw.n, &raw.relations).map_err(serde::de::Error::custom)
    }
}
