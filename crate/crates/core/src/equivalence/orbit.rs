use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::perm::{is_salient_unchecked, multiset_words, MultisetSpec, Word};

/// The adjacent-swap relation generating an equivalence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Relation {
    /// Swap neighbours whose values differ by exactly one.
    Consecutive,
    /// Swap neighbours whose values differ by at least `j` (`j >= 2`).
    AtLeast(u32),
}

impl Relation {
    fn swappable(self, a: u32, b: u32) -> bool {
        match self {
            Relation::Consecutive => a.abs_diff(b) == 1,
            Relation::AtLeast(j) => a.abs_diff(b) >= j,
        }
    }

    fn validate(self, w: &Word) -> Result<()> {
        if let Relation::AtLeast(j) = self {
            if j < 2 {
                return Err(Error::InvalidArgument(format!(
                    "j must be at least 2, got {j}"
                )));
            }
            w.require_permutation()?;
        }
        Ok(())
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Relation::Consecutive => f.write_str("consecutive"),
            Relation::AtLeast(j) => write!(f, "geq:{j}"),
        }
    }
}

impl FromStr for Relation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "consecutive" => Ok(Relation::Consecutive),
            other => {
                let j = other
                    .strip_prefix("geq:")
                    .and_then(|j| j.parse::<u32>().ok())
                    .ok_or_else(|| Error::Parse(format!("unknown relation {other:?}")))?;
                if j < 2 {
                    return Err(Error::InvalidArgument(format!(
                        "j must be at least 2, got {j}"
                    )));
                }
                Ok(Relation::AtLeast(j))
            }
        }
    }
}

/// One equivalence class. Members are sorted lexicographically and the
/// representative is the least of them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquivalenceClass {
    pub representative: Word,
    #[serde(with = "crate::serde_big::biguint")]
    pub size: BigUint,
    pub members: Vec<Word>,
}

impl EquivalenceClass {
    fn from_members(mut members: Vec<Word>) -> Self {
        members.sort_unstable();
        EquivalenceClass {
            representative: members[0].clone(),
            size: BigUint::from(members.len()),
            members,
        }
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.members.binary_search(w).is_ok()
    }
}

/// Breadth-first closure of `start` under `relation`, unsorted.
pub(crate) fn orbit_raw(start: &[u32], relation: Relation, cap: usize) -> Result<Vec<Vec<u32>>> {
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    let mut order = Vec::new();
    let mut queue = VecDeque::new();
    seen.insert(start.to_vec());
    queue.push_back(start.to_vec());
    while let Some(cur) = queue.pop_front() {
        for i in 0..cur.len().saturating_sub(1) {
            if relation.swappable(cur[i], cur[i + 1]) {
                let mut next = cur.clone();
                next.swap(i, i + 1);
                if !seen.contains(&next) {
                    if seen.len() >= cap {
                        return Err(Error::guard("orbit size", cap, seen.len() + 1));
                    }
                    seen.insert(next.clone());
                    queue.push_back(next);
                }
            }
        }
        order.push(cur);
    }
    Ok(order)
}

/// The class of `w` under `relation`.
pub fn class_of(w: &Word, relation: Relation, limits: &Limits) -> Result<EquivalenceClass> {
    relation.validate(w)?;
    let members = orbit_raw(w.letters(), relation, limits.orbit_cap)?
        .into_iter()
        .map(Word::from_raw)
        .collect();
    Ok(EquivalenceClass::from_members(members))
}

/// The unique salient member of the consecutive-swap class of `w`.
pub fn salient_representative(w: &Word, limits: &Limits) -> Result<Word> {
    w.require_permutation()?;
    let orbit = orbit_raw(w.letters(), Relation::Consecutive, limits.orbit_cap)?;
    let mut salient = orbit.into_iter().filter(|a| is_salient_unchecked(a));
    match (salient.next(), salient.next()) {
        (Some(a), None) => Ok(Word::from_raw(a)),
        (None, _) => Err(Error::Inconsistent(format!(
            "class of {w} has no salient member"
        ))),
        (Some(_), Some(_)) => Err(Error::Inconsistent(format!(
            "class of {w} has several salient members"
        ))),
    }
}

/// Partitions `words` into classes, sorted by representative.
pub fn partition(
    words: impl IntoIterator<Item = Word>,
    relation: Relation,
    limits: &Limits,
) -> Result<Vec<EquivalenceClass>> {
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    let mut classes = Vec::new();
    for w in words {
        if seen.contains(w.letters()) {
            continue;
        }
        relation.validate(&w)?;
        let orbit = orbit_raw(w.letters(), relation, limits.orbit_cap)?;
        let members = orbit
            .into_iter()
            .map(|a| {
                seen.insert(a.clone());
                Word::from_raw(a)
            })
            .collect();
        classes.push(EquivalenceClass::from_members(members));
    }
    classes.sort_unstable_by(|a, b| a.representative.cmp(&b.representative));
    Ok(classes)
}

/// Classes of `S_n` under `relation`.
pub fn classes_of_sn(
    n: usize,
    relation: Relation,
    limits: &Limits,
) -> Result<Vec<EquivalenceClass>> {
    if n > limits.brute_n {
        return Err(Error::guard("n for class enumeration", limits.brute_n, n));
    }
    partition(crate::perm::permutations(n), relation, limits)
}

/// Classes of all words with content `spec` under the consecutive relation.
pub fn multiset_class_partition(
    spec: &MultisetSpec,
    limits: &Limits,
) -> Result<Vec<EquivalenceClass>> {
    let total = spec.total();
    if total > limits.multiset_total {
        return Err(Error::guard("multiset size", limits.multiset_total, total));
    }
    partition(multiset_words(spec), Relation::Consecutive, limits)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn strings(c: &EquivalenceClass) -> Vec<String> {
        c.members.iter().map(|m| m.to_string()).collect()
    }

    #[test]
    fn class_examples() {
        let l = Limits::default();
        let c = class_of(&w("123"), Relation::Consecutive, &l).unwrap();
        assert_eq!(strings(&c), ["123", "132", "213"]);
        let c = class_of(&w("321"), Relation::Consecutive, &l).unwrap();
        assert_eq!(strings(&c), ["231", "312", "321"]);
        assert_eq!(c.representative, w("231"));
        let c = class_of(&w("321654"), Relation::Consecutive, &l).unwrap();
        assert_eq!(c.size, BigUint::from(9u32));
    }

    #[test]
    fn orbit_cap_is_reported() {
        let l = Limits {
            orbit_cap: 5,
            ..Limits::default()
        };
        let err = class_of(&Word::identity(6), Relation::Consecutive, &l).unwrap_err();
        assert!(err.is_guard());
    }

    #[test]
    fn salient_examples() {
        let l = Limits::default();
        assert_eq!(salient_representative(&w("213"), &l).unwrap(), w("123"));
        assert_eq!(salient_representative(&w("4123"), &l).unwrap(), w("4123"));
        assert_eq!(salient_representative(&w("4321"), &l).unwrap(), w("3412"));
        assert!(salient_representative(&w("113"), &l).is_err());
    }

    #[test]
    fn multiset_examples() {
        let l = Limits::default();
        let classes = multiset_class_partition(&"1:2,2:1,3:2".parse().unwrap(), &l).unwrap();
        assert_eq!(classes.len(), 6);
        assert!(classes.iter().all(|c| c.members.len() == 5));
        let classes = multiset_class_partition(&"1:3".parse().unwrap(), &l).unwrap();
        assert_eq!(classes.len(), 1);
        assert_eq!(classes[0].members, vec![w("111")]);
        let classes = multiset_class_partition(&"1:1,2:1,3:1,4:1".parse().unwrap(), &l).unwrap();
        assert_eq!(classes.len(), 8);
        let big: MultisetSpec = "1:6,2:5".parse().unwrap();
        assert!(multiset_class_partition(&big, &l).unwrap_err().is_guard());
    }

    #[test]
    fn relation_text() {
        assert_eq!(
            "consecutive".parse::<Relation>().unwrap(),
            Relation::Consecutive
        );
        assert_eq!("geq:3".parse::<Relation>().unwrap(), Relation::AtLeast(3));
        assert!("geq:1".parse::<Relation>().is_err());
        assert!("near".parse::<Relation>().is_err());
        assert_eq!(Relation::AtLeast(4).to_string(), "geq:4");
    }

    #[test]
    fn class_json_round_trip() {
        let c = class_of(&w("2143"), Relation::Consecutive, &Limits::default()).unwrap();
        let text = serde_json::to_string(&c).unwrap();
        let back: EquivalenceClass = serde_json::from_str(&text).unwrap();
        assert_eq!(back, c);
    }
}
