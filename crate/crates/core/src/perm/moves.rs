use std::collections::BTreeSet;

use super::{RankSet, Word};
use crate::error::{Error, Result};

/// Positions `i` with `a_i > a_{i+1}`.
pub fn descent_set(w: &Word) -> RankSet {
    let a = w.letters();
    let bits = a
        .windows(2)
        .enumerate()
        .filter(|(_, p)| p[0] > p[1])
        .fold(0u64, |acc, (i, _)| acc | 1 << i);
    RankSet::from_bits_unchecked(a.len(), bits)
}

/// Salient: no factor `i+1, i` and no factor `i+2, i, i+1`.
pub fn is_salient(w: &Word) -> Result<bool> {
    w.require_permutation()?;
    Ok(is_salient_unchecked(w.letters()))
}

pub(crate) fn is_salient_unchecked(a: &[u32]) -> bool {
    let drop_by_one = a.windows(2).any(|p| p[0] == p[1] + 1);
    let pattern = a
        .windows(3)
        .any(|p| p[0] == p[1] + 2 && p[1] + 2 == p[2] + 1);
    !(drop_by_one || pattern)
}

fn moves_where(w: &Word, swappable: impl Fn(u32, u32) -> bool) -> BTreeSet<Word> {
    w.letters()
        .windows(2)
        .enumerate()
        .filter(|(_, p)| swappable(p[0], p[1]))
        .map(|(i, _)| w.swapped(i))
        .collect()
}

/// Words reached by swapping one adjacent pair whose values differ by exactly one.
pub fn consecutive_moves(w: &Word) -> BTreeSet<Word> {
    moves_where(w, |a, b| a.abs_diff(b) == 1)
}

/// Words reached by swapping one adjacent pair whose values differ by at least `j`.
pub fn geq_j_moves(w: &Word, j: u32) -> Result<BTreeSet<Word>> {
    if j < 2 {
        return Err(Error::InvalidArgument(format!(
            "j must be at least 2, got {j}"
        )));
    }
    w.require_permutation()?;
    Ok(moves_where(w, |a, b| a.abs_diff(b) >= j))
}

/// Sparse subsets of `[n-1]`, in increasing mask order. There are `F(n+1)` of them.
pub fn sparse_subsets(n: usize) -> Result<Vec<RankSet>> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    if n > super::rankset::MAX_AMBIENT {
        return Err(Error::guard(
            "sparse subsets ambient",
            super::rankset::MAX_AMBIENT,
            n,
        ));
    }
    // Grow sparse masks one bit position at a time.
    let mut sets = vec![0u64];
    for bit in 0..n - 1 {
        let extra: Vec<u64> = sets
            .iter()
            .filter(|&&m| bit == 0 || m >> (bit - 1) & 1 == 0)
            .map(|&m| m | 1 << bit)
            .collect();
        sets.extend(extra);
    }
    sets.sort_unstable();
    Ok(sets
        .into_iter()
        .map(|b| RankSet::from_bits_unchecked(n, b))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::permutations;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn set(n: usize, m: &[usize]) -> RankSet {
        RankSet::new(n, m.iter().copied()).unwrap()
    }

    #[test]
    fn descent_examples() {
        assert_eq!(descent_set(&w("12345")), set(5, &[]));
        assert_eq!(descent_set(&w("321")), set(3, &[1, 2]));
        assert_eq!(descent_set(&w("21354")), set(5, &[1, 4]));
        assert_eq!(descent_set(&Word::identity(0)), RankSet::empty(0));
    }

    #[test]
    fn salient_examples() {
        assert!(is_salient(&w("1234")).unwrap());
        assert!(!is_salient(&w("2134")).unwrap());
        assert!(!is_salient(&w("312")).unwrap());
        assert!(is_salient(&w("1224")).is_err());
    }

    #[test]
    fn salient_in_s4() {
        let salient: Vec<String> = permutations(4)
            .filter(|p| is_salient(p).unwrap())
            .map(|p| p.to_string())
            .collect();
        assert_eq!(
            salient,
            ["1234", "1342", "2314", "2341", "2413", "3142", "3412", "4123"]
        );
    }

    #[test]
    fn move_examples() {
        let got: Vec<String> = consecutive_moves(&w("123"))
            .iter()
            .map(|x| x.to_string())
            .collect();
        assert_eq!(got, ["132", "213"]);
        assert!(consecutive_moves(&w("1")).is_empty());
        let got: BTreeSet<Word> = consecutive_moves(&w("13254"));
        // only the (3,2) and (5,4) neighbours differ by one
        let want: BTreeSet<Word> = ["12354", "13245"].iter().map(|s| w(s)).collect();
        assert_eq!(got, want);

        let got: Vec<String> = geq_j_moves(&w("132"), 2)
            .unwrap()
            .iter()
            .map(|x| x.to_string())
            .collect();
        assert_eq!(got, ["312"]);
        assert!(geq_j_moves(&w("123"), 2).unwrap().is_empty());
        let got: Vec<String> = geq_j_moves(&w("1432"), 3)
            .unwrap()
            .iter()
            .map(|x| x.to_string())
            .collect();
        assert_eq!(got, ["4132"]);
        assert!(geq_j_moves(&w("123"), 1).is_err());
    }

    #[test]
    fn sparse_examples() {
        let s3 = sparse_subsets(3).unwrap();
        assert_eq!(s3, vec![set(3, &[]), set(3, &[1]), set(3, &[2])]);
        assert_eq!(sparse_subsets(1).unwrap(), vec![RankSet::empty(1)]);
        assert_eq!(sparse_subsets(5).unwrap().len(), 8);
        assert!(sparse_subsets(6).unwrap().iter().all(|s| s.is_sparse()));
    }

    #[test]
    fn sparse_counts_follow_fibonacci() {
        let counts: Vec<usize> = (1..=25).map(|n| sparse_subsets(n).unwrap().len()).collect();
        assert_eq!(counts[0], 1);
        assert_eq!(counts[1], 2);
        for n in 2..counts.len() {
            assert_eq!(counts[n], counts[n - 1] + counts[n - 2]);
        }
    }

    #[test]
    fn reversal_complements_descents() {
        for n in 1..=8 {
            for p in permutations(n) {
                let d = descent_set(&p);
                assert!(d.len() < n.max(1));
                let r = descent_set(&p.reversed());
                let want = RankSet::new(n, (1..n).filter(|&i| !d.contains(n - i))).unwrap();
                assert_eq!(r, want);
            }
        }
    }

    #[test]
    fn consecutive_moves_are_symmetric() {
        for n in 0..=7 {
            for p in permutations(n) {
                for q in consecutive_moves(&p) {
                    assert!(consecutive_moves(&q).contains(&p));
                }
            }
        }
    }
}
