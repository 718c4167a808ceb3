use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::bits::Bits;
use crate::error::{Error, Result};

/// A finite graded poset given by its cover relations and rank function.
///
/// Every cover raises the rank by exactly one, minimal elements have rank 0
/// and maximal elements have the top rank, so all maximal chains have the
/// same length.
#[derive(Clone, Debug)]
pub struct GradedPoset {
    names: Vec<String>,
    rank: Vec<usize>,
    covers: Vec<(usize, usize)>,
    up: Vec<Vec<usize>>,
    down: Vec<Vec<usize>>,
    // above[x] = { y : x <= y }
    above: Vec<Bits>,
    by_rank: Vec<Vec<usize>>,
}

impl GradedPoset {
    pub fn new(
        names: Vec<String>,
        rank: Vec<usize>,
        mut covers: Vec<(usize, usize)>,
    ) -> Result<Self> {
        let n = names.len();
        if rank.len() != n {
            return Err(Error::InvalidPoset("one rank per element".into()));
        }
        if n == 0 {
            return Err(Error::InvalidPoset("empty poset".into()));
        }
        let mut seen_names = std::collections::HashSet::new();
        for name in &names {
            if !seen_names.insert(name) {
                return Err(Error::InvalidPoset(format!("duplicate element {name:?}")));
            }
        }
        covers.sort_unstable();
        covers.dedup();
        let mut up = vec![Vec::new(); n];
        let mut down = vec![Vec::new(); n];
        for &(lo, hi) in &covers {
            if lo >= n || hi >= n {
                return Err(Error::InvalidPoset(format!(
                    "cover ({lo}, {hi}) out of range"
                )));
            }
            if rank[hi] != rank[lo] + 1 {
                return Err(Error::InvalidPoset(format!(
                    "cover {} < {} does not raise the rank by one",
                    names[lo], names[hi]
                )));
            }
            up[lo].push(hi);
            down[hi].push(lo);
        }
        let top_rank = *rank.iter().max().expect("nonempty");
        for x in 0..n {
            if down[x].is_empty() && rank[x] != 0 {
                return Err(Error::InvalidPoset(format!(
                    "minimal element {} has rank {}",
                    names[x], rank[x]
                )));
            }
            if up[x].is_empty() && rank[x] != top_rank {
                return Err(Error::InvalidPoset(format!(
                    "maximal element {} has rank {} below the top rank {top_rank}",
                    names[x], rank[x]
                )));
            }
        }
        let mut by_rank = vec![Vec::new(); top_rank + 1];
        for x in 0..n {
            by_rank[rank[x]].push(x);
        }
        let mut above: Vec<Bits> = (0..n).map(|_| Bits::new(n)).collect();
        for r in (0..=top_rank).rev() {
            for &x in &by_rank[r] {
                let mut set = Bits::new(n);
                set.set(x);
                for &u in &up[x] {
                    set.union_with(&above[u]);
                }
                above[x] = set;
            }
        }
        Ok(GradedPoset {
            names,
            rank,
            covers,
            up,
            down,
            above,
            by_rank,
        })
    }

    /// Like [`GradedPoset::new`] with elements named `0, 1, ...`.
    pub fn from_levels(rank: Vec<usize>, covers: Vec<(usize, usize)>) -> Result<Self> {
        let names = (0..rank.len()).map(|i| i.to_string()).collect();
        Self::new(names, rank, covers)
    }

    /// The chain `0 < 1 < ... < n`, of rank `n`.
    pub fn chain(n: usize) -> Self {
        Self::from_levels((0..=n).collect(), (0..n).map(|i| (i, i + 1)).collect())
            .expect("chain is graded")
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, x: usize) -> &str {
        &self.names[x]
    }

    pub fn rank_of(&self, x: usize) -> usize {
        self.rank[x]
    }

    pub fn ranks(&self) -> &[usize] {
        &self.rank
    }

    /// The rank of the poset (length of its maximal chains).
    pub fn rank(&self) -> usize {
        self.by_rank.len() - 1
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn upper_covers(&self, x: usize) -> &[usize] {
        &self.up[x]
    }

    pub fn lower_covers(&self, x: usize) -> &[usize] {
        &self.down[x]
    }

    pub fn elements_of_rank(&self, r: usize) -> &[usize] {
        self.by_rank.get(r).map_or(&[], Vec::as_slice)
    }

    pub fn rank_sizes(&self) -> Vec<usize> {
        self.by_rank.iter().map(Vec::len).collect()
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.above[x].get(y)
    }

    pub fn has_bottom(&self) -> bool {
        self.by_rank[0].len() == 1 && self.above[self.by_rank[0][0]].count() == self.len()
    }

    pub fn has_top(&self) -> bool {
        let top = &self.by_rank[self.rank()];
        top.len() == 1 && (0..self.len()).all(|x| self.leq(x, top[0]))
    }

    pub(crate) fn require_bounded(&self) -> Result<()> {
        if self.has_bottom() && self.has_top() {
            Ok(())
        } else {
            Err(Error::InvalidPoset(
                "needs a least and a greatest element".into(),
            ))
        }
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// At most two elements of every rank.
    pub fn at_most_two_per_rank(&self) -> bool {
        self.by_rank.iter().all(|r| r.len() <= 2)
    }

    /// The closed interval `[lo, hi]`, re-ranked from zero.
    pub fn interval(&self, lo: usize, hi: usize) -> Result<GradedPoset> {
        if !self.leq(lo, hi) {
            return Err(Error::InvalidArgument(format!(
                "{} is not below {}",
                self.names[lo], self.names[hi]
            )));
        }
        let keep: Vec<usize> = (0..self.len())
            .filter(|&x| self.leq(lo, x) && self.leq(x, hi))
            .collect();
        self.induced(&keep, self.rank[lo])
    }

    /// Sub-poset on `keep` (which must be convex and graded), ranks shifted down by `base`.
    pub(crate) fn induced(&self, keep: &[usize], base: usize) -> Result<GradedPoset> {
        let index: HashMap<usize, usize> = keep.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        let names = keep.iter().map(|&x| self.names[x].clone()).collect();
        let rank = keep.iter().map(|&x| self.rank[x] - base).collect();
        let covers = self
            .covers
            .iter()
            .filter_map(|(a, b)| Some((*index.get(a)?, *index.get(b)?)))
            .collect();
        GradedPoset::new(names, rank, covers)
    }
}

impl PartialEq for GradedPoset {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names && self.rank == other.rank && self.covers == other.covers
    }
}

impl Eq for GradedPoset {}

#[derive(Serialize, Deserialize)]
struct PosetJson {
    elements: Vec<String>,
    ranks: BTreeMap<String, usize>,
    covers: Vec<[String; 2]>,
}

impl Serialize for GradedPoset {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PosetJson {
            elements: self.names.clone(),
            ranks: self
                .names
                .iter()
                .cloned()
                .zip(self.rank.iter().copied())
                .collect(),
            covers: self
                .covers
                .iter()
                .map(|&(a, b)| [self.names[a].clone(), self.names[b].clone()])
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for GradedPoset {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = PosetJson::deserialize(d)?;
        let index: HashMap<&str, usize> = raw
            .elements
            .iter()
            .enumerate()
            .map(|(i, n)| (n.as_str(), i))
            .collect();
        let rank = raw
            .elements
            .iter()
            .map(|n| {
                raw.ranks
                    .get(n)
                    .copied()
                    .ok_or_else(|| D::Error::custom(format!("no rank for {n:?}")))
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        let covers = raw
            .covers
            .iter()
            .map(
                |[a, b]| match (index.get(a.as_str()), index.get(b.as_str())) {
                    (Some(&x), Some(&y)) => Ok((x, y)),
                    _ => Err(D::Error::custom(format!(
                        "unknown element in cover [{a:?}, {b:?}]"
                    ))),
                },
            )
            .collect::<std::result::Result<Vec<_>, _>>()?;
        GradedPoset::new(raw.elements, rank, covers).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diamond() -> GradedPoset {
        GradedPoset::from_levels(vec![0, 1, 1, 2], vec![(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn validation() {
        assert!(GradedPoset::from_levels(vec![0, 2], vec![(0, 1)]).is_err());
        assert!(GradedPoset::from_levels(vec![0, 1, 1], vec![(0, 1)]).is_err());
        assert!(GradedPoset::from_levels(vec![0, 1, 2, 1], vec![(0, 1), (1, 2)]).is_err());
        let d = diamond();
        assert!(d.has_bottom() && d.has_top());
        assert_eq!(d.rank(), 2);
        assert!(d.leq(0, 3) && !d.leq(1, 2));
    }

    #[test]
    fn json_schema() {
        let d = diamond();
        let text = serde_json::to_string(&d).unwrap();
        assert_eq!(
            text,
            r#"{"elements":["0","1","2","3"],"ranks":{"0":0,"1":1,"2":1,"3":2},"covers":[["0","1"],["0","2"],["1","3"],["2","3"]]}"#
        );
        let back: GradedPoset = serde_json::from_str(&text).unwrap();
        assert_eq!(back, d);
        let bad = r#"{"elements":["a","b"],"ranks":{"a":0,"b":2},"covers":[["a","b"]]}"#;
        assert!(serde_json::from_str::<GradedPoset>(bad).is_err());
    }

    #[test]
    fn intervals() {
        let c = GradedPoset::chain(4);
        let i = c.interval(1, 3).unwrap();
        assert_eq!(i.rank(), 2);
        assert_eq!(i.names(), ["1", "2", "3"]);
        assert!(c.interval(3, 1).is_err());
    }
}
