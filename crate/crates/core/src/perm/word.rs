use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A finite word over the positive integers.
///
/// Words order lexicographically by letters, which is the tie-breaker used
/// for canonical representatives.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(Vec<u32>);

impl Word {
    pub fn new(letters: Vec<u32>) -> Result<Self> {
        if letters.contains(&0) {
            return Err(Error::InvalidArgument("letters must be positive".into()));
        }
        Ok(Word(letters))
    }

    /// `1 2 ... n`.
    pub fn identity(n: usize) -> Self {
        Word((1..=n as u32).collect())
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<u32> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    /// True when the word contains each of `1..=n` exactly once.
    pub fn is_permutation(&self) -> bool {
        let n = self.0.len();
        let mut seen = vec![false; n];
        for &a in &self.0 {
            let a = a as usize;
            if a == 0 || a > n || seen[a - 1] {
                return false;
            }
            seen[a - 1] = true;
        }
        true
    }

    pub(crate) fn require_permutation(&self) -> Result<()> {
        if self.is_permutation() {
            Ok(())
        } else {
            Err(Error::NotAPermutation(self.to_string()))
        }
    }

    /// Multiplicities of the letters of this word.
    pub fn content(&self) -> MultisetSpec {
        let mut counts = BTreeMap::new();
        for &a in &self.0 {
            *counts.entry(a).or_insert(0) += 1;
        }
        MultisetSpec { counts }
    }

    pub(crate) fn from_raw(letters: Vec<u32>) -> Self {
        debug_assert!(!letters.contains(&0));
        Word(letters)
    }

    pub(crate) fn swapped(&self, i: usize) -> Word {
        let mut v = self.0.clone();
        v.swap(i, i + 1);
        Word(v)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.iter().all(|&a| a <= 9) {
            for a in &self.0 {
                write!(f, "{a}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
            f.write_str(&parts.join(","))
        }
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let letters: Vec<u32> = if s.contains(',') {
            s.split(',')
                .map(|p| {
                    p.trim()
                        .parse::<u32>()
                        .map_err(|e| Error::Parse(format!("{p:?}: {e}")))
                })
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .ok_or_else(|| Error::Parse(format!("bad letter {c:?}")))
                })
                .collect::<Result<_>>()?
        };
        Word::new(letters).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// The multiset `{1^{r_1}, ..., n^{r_n}}`, stored as value -> multiplicity.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct MultisetSpec {
    counts: BTreeMap<u32, usize>,
}

impl MultisetSpec {
    pub fn new(pairs: impl IntoIterator<Item = (u32, usize)>) -> Result<Self> {
        let mut counts = BTreeMap::new();
        for (v, c) in pairs {
            if v == 0 {
                return Err(Error::InvalidArgument(
                    "multiset values must be positive".into(),
                ));
            }
            if c > 0 {
                *counts.entry(v).or_insert(0) += c;
            }
        }
        Ok(MultisetSpec { counts })
    }

    /// Multiplicities `r_1, ..., r_n` for values `1..=n`.
    pub fn from_multiplicities(rs: &[usize]) -> Self {
        MultisetSpec {
            counts: rs
                .iter()
                .enumerate()
                .filter(|(_, &c)| c > 0)
                .map(|(i, &c)| (i as u32 + 1, c))
                .collect(),
        }
    }

    /// `{1^k, 2^k, ..., n^k}`.
    pub fn uniform(n: usize, k: usize) -> Self {
        Self::from_multiplicities(&vec![k; n])
    }

    pub fn total(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn max_value(&self) -> u32 {
        self.counts.keys().next_back().copied().unwrap_or(0)
    }

    pub fn multiplicity(&self, v: u32) -> usize {
        self.counts.get(&v).copied().unwrap_or(0)
    }

    /// Dense multiplicity vector indexed by `value - 1`, up to the largest value.
    pub fn multiplicities(&self) -> Vec<usize> {
        (1..=self.max_value())
            .map(|v| self.multiplicity(v))
            .collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, usize)> + '_ {
        self.counts.iter().map(|(&v, &c)| (v, c))
    }

    /// The lexicographically least word with this content.
    pub fn sorted_word(&self) -> Word {
        Word(
            self.counts
                .iter()
                .flat_map(|(&v, &c)| std::iter::repeat_n(v, c))
                .collect(),
        )
    }
}

impl fmt::Display for MultisetSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .counts
            .iter()
            .map(|(v, c)| format!("{v}:{c}"))
            .collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for MultisetSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(MultisetSpec::default());
        }
        let mut pairs = Vec::new();
        for part in s.split(',') {
            let (v, c) = part
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("expected v:count, got {part:?}")))?;
            let v: u32 = v
                .trim()
                .parse()
                .map_err(|e| Error::Parse(format!("{v:?}: {e}")))?;
            let c: usize = c
                .trim()
                .parse()
                .map_err(|e| Error::Parse(format!("{c:?}: {e}")))?;
            pairs.push((v, c));
        }
        MultisetSpec::new(pairs).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// Rearranges `v` into the next lexicographically larger arrangement.
/// Returns `false` (leaving `v` sorted) after the last one. Repeated letters are
/// handled, so iterating from the sorted word visits each distinct arrangement once.
pub fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        v.reverse();
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// All distinct arrangements of a starting word's letters, in lexicographic order.
pub struct Arrangements {
    current: Option<Vec<u32>>,
}

impl Iterator for Arrangements {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        let cur = self.current.take()?;
        let mut next = cur.clone();
        if next_permutation(&mut next) {
            self.current = Some(next);
        }
        Some(Word(cur))
    }
}

/// All permutations of `[n]` in lexicographic order (one empty word for `n = 0`).
pub fn permutations(n: usize) -> Arrangements {
    Arrangements {
        current: Some(Word::identity(n).0),
    }
}

/// All words with the given content, in lexicographic order.
pub fn multiset_words(spec: &MultisetSpec) -> Arrangements {
    Arrangements {
        current: Some(spec.sorted_word().0),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn word_text_forms() {
        let w: Word = "13254".parse().unwrap();
        assert_eq!(w.letters(), &[1, 3, 2, 5, 4]);
        assert_eq!(w.to_string(), "13254");
        let w: Word = "10,2,1".parse().unwrap();
        assert_eq!(w.letters(), &[10, 2, 1]);
        assert_eq!(w.to_string(), "10,2,1");
        assert!("102".parse::<Word>().is_err());
        assert!("1,0".parse::<Word>().is_err());
        assert_eq!("".parse::<Word>().unwrap(), Word::identity(0));
    }

    #[test]
    fn multiset_text_form() {
        let m: MultisetSpec = "1:2,2:1,3:2".parse().unwrap();
        assert_eq!(m.total(), 5);
        assert_eq!(m.multiplicities(), vec![2, 1, 2]);
        assert_eq!(m.to_string(), "1:2,2:1,3:2");
        assert!("1-2".parse::<MultisetSpec>().is_err());
    }

    #[test]
    fn arrangements_are_counted_once() {
        assert_eq!(permutations(0).count(), 1);
        assert_eq!(permutations(4).count(), 24);
        let spec = MultisetSpec::from_multiplicities(&[2, 1, 2]);
        let words: Vec<Word> = multiset_words(&spec).collect();
        assert_eq!(words.len(), 30);
        assert!(words.windows(2).all(|p| p[0] < p[1]));
    }

    #[test]
    fn permutation_check() {
        assert!(Word::identity(0).is_permutation());
        assert!(Word::new(vec![2, 1, 3]).unwrap().is_permutation());
        assert!(!Word::new(vec![2, 2, 3]).unwrap().is_permutation());
        assert!(!Word::new(vec![1, 4]).unwrap().is_permutation());
    }
}
