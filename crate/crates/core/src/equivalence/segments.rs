use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use super::orbit::{orbit_raw, Relation};
use crate::combinat::fibonacci;
use crate::error::Result;
use crate::limits::Limits;
use crate::perm::Word;

/// A member of a class written as a concatenation of runs of consecutive
/// integers, such that every member of the class is a concatenation of
/// rearrangements of those runs in the same order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SegmentDecomposition {
    pub segments: Vec<Word>,
    pub lengths: Vec<usize>,
}

impl SegmentDecomposition {
    pub fn concatenation(&self) -> Word {
        Word::from_raw(
            self.segments
                .iter()
                .flat_map(|s| s.letters().iter().copied())
                .collect(),
        )
    }

    /// `prod F(m_i + 1)`.
    pub fn class_size(&self) -> BigUint {
        self.lengths
            .iter()
            .map(|&m| fibonacci(m as u64 + 1))
            .product()
    }
}

/// Length of the longest prefix that increases or decreases by one at each step.
pub(crate) fn leading_run(a: &[u32]) -> usize {
    if a.len() < 2 {
        return a.len();
    }
    let step = |x: u32, y: u32| -> Option<bool> {
        if y == x + 1 {
            Some(true)
        } else if x == y + 1 {
            Some(false)
        } else {
            None
        }
    };
    let Some(up) = step(a[0], a[1]) else { return 1 };
    1 + a
        .windows(2)
        .take_while(|p| step(p[0], p[1]) == Some(up))
        .count()
}

fn decompose(a: &[u32], limits: &Limits, out: &mut SegmentDecomposition) -> Result<()> {
    if a.is_empty() {
        return Ok(());
    }
    let orbit = orbit_raw(a, Relation::Consecutive, limits.orbit_cap)?;
    let best = orbit
        .iter()
        .max_by(|x, y| leading_run(x).cmp(&leading_run(y)).then_with(|| y.cmp(x)))
        .expect("orbit contains its seed");
    let j = leading_run(best);
    let mut head = best[..j].to_vec();
    if j == 2 {
        head.sort_unstable();
    }
    out.segments.push(Word::from_raw(head));
    out.lengths.push(j);
    decompose(&best[j..], limits, out)
}

/// The run decomposition of the class of `w`, found by searching the class
/// for the member with the longest leading run and recursing on the rest.
/// Runs of length two are written increasing.
pub fn segment_decomposition(w: &Word, limits: &Limits) -> Result<SegmentDecomposition> {
    w.require_permutation()?;
    let mut out = SegmentDecomposition {
        segments: Vec::new(),
        lengths: Vec::new(),
    };
    decompose(w.letters(), limits, &mut out)?;
    Ok(out)
}

/// Size of the class of `w` as a product of Fibonacci numbers.
pub fn class_size(w: &Word, limits: &Limits) -> Result<BigUint> {
    Ok(segment_decomposition(w, limits)?.class_size())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::equivalence::class_of;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn leading_runs() {
        assert_eq!(leading_run(&[]), 0);
        assert_eq!(leading_run(&[4]), 1);
        assert_eq!(leading_run(&[3, 2, 1, 5]), 3);
        assert_eq!(leading_run(&[1, 2, 1]), 2);
        assert_eq!(leading_run(&[1, 3]), 1);
    }

    #[test]
    fn decomposition_examples() {
        let l = Limits::default();
        let d = segment_decomposition(&w("12345"), &l).unwrap();
        assert_eq!(d.lengths, [5]);
        let d = segment_decomposition(&w("321654"), &l).unwrap();
        assert_eq!(d.segments, [w("321"), w("654")]);
        assert_eq!(d.lengths, [3, 3]);
        let d = segment_decomposition(&w("2143"), &l).unwrap();
        assert_eq!(d.segments, [w("1234")]);
        let d = segment_decomposition(&w("21"), &l).unwrap();
        assert_eq!(d.segments, [w("12")]);
    }

    #[test]
    fn size_examples() {
        let l = Limits::default();
        assert_eq!(
            class_size(&Word::identity(5), &l).unwrap(),
            BigUint::from(8u32)
        );
        assert_eq!(class_size(&w("321654"), &l).unwrap(), BigUint::from(9u32));
        assert_eq!(
            class_size(&Word::identity(1), &l).unwrap(),
            BigUint::from(1u32)
        );
        assert_eq!(
            class_size(&Word::identity(0), &l).unwrap(),
            BigUint::from(1u32)
        );
    }

    #[test]
    fn concatenation_is_a_member() {
        let l = Limits::default();
        for p in crate::perm::permutations(6) {
            let d = segment_decomposition(&p, &l).unwrap();
            let class = class_of(&p, Relation::Consecutive, &l).unwrap();
            assert!(class.contains(&d.concatenation()), "{p}");
            assert_eq!(d.lengths.iter().sum::<usize>(), 6);
        }
    }
}
