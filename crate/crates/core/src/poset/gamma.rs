use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::graded::GradedPoset;
use super::natural::NaturalPoset;
use crate::error::{Error, Result};
use crate::perm::RankSet;

/// The left/right word `g_1 ... g_{n-1}` describing a rank-`n` distributive
/// lattice with two elements at every interior rank. Normalised so that
/// `g_1 = 0` and `g_2 = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GammaWord(Vec<bool>);

impl GammaWord {
    pub fn new(bits: Vec<bool>) -> Result<Self> {
        if bits.first() == Some(&true) {
            return Err(Error::InvalidArgument(
                "gamma word must start with 0".into(),
            ));
        }
        if bits.get(1) == Some(&false) {
            return Err(Error::InvalidArgument(
                "second letter of a gamma word must be 1".into(),
            ));
        }
        Ok(GammaWord(bits))
    }

    /// The alternating word `0101...` of length `n - 1`.
    pub fn alternating(n: usize) -> Self {
        GammaWord((0..n.saturating_sub(1)).map(|i| i % 2 == 1).collect())
    }

    /// Every normalised word for rank `n`: one for `n <= 2`, `2^(n-3)` after that.
    pub fn all(n: usize) -> Vec<GammaWord> {
        if n == 0 {
            return Vec::new();
        }
        let len = n - 1;
        if len <= 2 {
            return vec![GammaWord::alternating(n)];
        }
        (0..1u64 << (len - 2))
            .map(|tail| {
                let mut bits = vec![false, true];
                bits.extend((0..len - 2).rev().map(|i| tail >> i & 1 == 1));
                GammaWord(bits)
            })
            .collect()
    }

    pub fn bits(&self) -> &[bool] {
        &self.0
    }

    /// Rank of `L(gamma)`.
    pub fn rank(&self) -> usize {
        self.0.len() + 1
    }

    pub fn prefix(&self, len: usize) -> GammaWord {
        GammaWord(self.0[..len].to_vec())
    }
}

impl fmt::Display for GammaWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for GammaWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bits = s
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(Error::Parse(format!(
                    "gamma word {s:?} may only contain 0 and 1"
                ))),
            })
            .collect::<Result<Vec<_>>>()?;
        GammaWord::new(bits)
    }
}

impl Serialize for GammaWord {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for GammaWord {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

/// `L(gamma)`. Start from the 2-chain, whose bottom counts as the left
/// coatom. Step `i` adjoins `z` covering the left (`0`) or right (`1`)
/// coatom, plus a new top covering the old top and `z`. Afterwards `z` sits
/// on the side it was attached to and the old top on the other.
///
/// Elements are named `0` (bottom), `top`, and `r.a` / `r.b` for the
/// two elements of interior rank `r`, `a` being the one that arrived first.
pub fn lattice_from_gamma(gamma: &GammaWord) -> Result<GradedPoset> {
    let n = gamma.rank();
    let mut names = vec!["0".to_string(), "1.a".to_string()];
    let mut rank = vec![0, 1];
    let mut covers = vec![(0usize, 1usize)];
    let (mut left, mut right, mut top) = (0usize, usize::MAX, 1usize);
    for (i, &g) in gamma.bits().iter().enumerate() {
        let r = i + 1;
        let target = if g { right } else { left };
        if target == usize::MAX {
            return Err(Error::InvalidArgument(format!(
                "gamma word {gamma} has no right coatom at rank {r}"
            )));
        }
        let z = names.len();
        names.push(format!("{r}.b"));
        rank.push(r);
        covers.push((target, z));
        let new_top = names.len();
        names.push(format!("{}.a", r + 1));
        rank.push(r + 1);
        covers.push((top, new_top));
        covers.push((z, new_top));
        if g {
            left = top;
            right = z;
        } else {
            left = z;
            right = top;
        }
        top = new_top;
    }
    names[top] = "top".to_string();
    debug_assert_eq!(rank[top], n);
    GradedPoset::new(names, rank, covers)
}

/// Join-irreducible elements (exactly one lower cover) of a lattice, in
/// order of rank then index.
pub(crate) fn join_irreducibles(l: &GradedPoset) -> Vec<usize> {
    let mut out: Vec<usize> = (0..l.len())
        .filter(|&x| l.lower_covers(x).len() == 1)
        .collect();
    out.sort_by_key(|&x| (l.rank_of(x), x));
    out
}

/// The poset of join-irreducibles of a distributive lattice, naturally
/// labelled along rank order.
pub fn join_irreducible_poset(l: &GradedPoset) -> Result<NaturalPoset> {
    let ji = join_irreducibles(l);
    let mut pairs = Vec::new();
    for (a, &x) in ji.iter().enumerate() {
        for (b, &y) in ji.iter().enumerate() {
            if a != b && l.leq(x, y) {
                pairs.push((a + 1, b + 1));
            }
        }
    }
    NaturalPoset::from_relations(ji.len(), &pairs)
}

/// `Q(gamma)`, so that `J(Q(gamma))` is isomorphic to `L(gamma)`.
pub fn q_from_gamma(gamma: &GammaWord) -> Result<NaturalPoset> {
    join_irreducible_poset(&lattice_from_gamma(gamma)?)
}

/// `beta_{L(gamma)}(S)` from the last-letter recurrence rather than by
/// counting chains. Writing `gamma = delta j i^r` (`j != i`, `n` the rank):
/// if `n-1` is not in `S` the value is that of `delta j i^(r-1)`;
/// otherwise it is `beta_{L(delta)}(S - {n-1})` when that set lies below
/// the rank of `L(delta)`, and zero when it does not.
pub fn beta_by_recurrence(gamma: &GammaWord, s: &RankSet) -> Result<BigInt> {
    let n = gamma.rank();
    if s.ambient() != n {
        return Err(Error::InvalidArgument(format!(
            "rank set {s} does not match rank {n}"
        )));
    }
    Ok(recurrence(gamma.bits(), s.bits()))
}

fn recurrence(g: &[bool], s: u64) -> BigInt {
    let n = g.len() + 1;
    match n {
        1 | 2 => return BigInt::one(),
        _ => {}
    }
    let last = g[n - 2];
    let run = g.iter().rev().take_while(|&&b| b == last).count();
    // position where the run of equal letters starts; the letter before it is j
    let start = g.len() - run;
    let top_bit = 1u64 << (n - 2);
    if s & top_bit == 0 {
        return recurrence(&g[..g.len() - 1], s);
    }
    let rest = s & !top_bit;
    let delta = &g[..start.saturating_sub(1)];
    let delta_rank = delta.len() + 1;
    if rest >> (delta_rank - 1) != 0 {
        return BigInt::zero();
    }
    recurrence(delta, rest)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::{flag_vector, ideals_lattice, is_multiplicity_free};
    use crate::Limits;

    #[test]
    fn words() {
        assert_eq!(GammaWord::all(1), vec![GammaWord(vec![])]);
        assert_eq!(GammaWord::all(3).len(), 1);
        for n in 3..10 {
            assert_eq!(GammaWord::all(n).len(), 1 << (n - 3));
        }
        assert!("10".parse::<GammaWord>().is_err());
        assert!("00".parse::<GammaWord>().is_err());
        assert!("0a".parse::<GammaWord>().is_err());
        assert_eq!("01001".parse::<GammaWord>().unwrap().to_string(), "01001");
        assert_eq!(GammaWord::alternating(6).to_string(), "01010");
    }

    #[test]
    fn small_lattices() {
        let two = lattice_from_gamma(&"".parse().unwrap()).unwrap();
        assert_eq!(two.rank_sizes(), vec![1, 1]);
        let l3 = lattice_from_gamma(&"01".parse().unwrap()).unwrap();
        assert_eq!(l3.rank_sizes(), vec![1, 2, 2, 1]);
        let j3 = ideals_lattice(
            &crate::poset::q_from_commuting_word(3).unwrap(),
            &Limits::default(),
        )
        .unwrap();
        assert!(crate::poset::are_isomorphic(&l3, &j3, &Limits::default()).unwrap());
        let l = lattice_from_gamma(&"01001".parse().unwrap()).unwrap();
        assert_eq!(l.rank_sizes(), vec![1, 2, 2, 2, 2, 2, 1]);
        assert!(is_multiplicity_free(&l).unwrap());
    }

    #[test]
    fn join_irreducibles_recover_the_lattice() {
        let limits = Limits::default();
        for n in 1..9 {
            for g in GammaWord::all(n) {
                let l = lattice_from_gamma(&g).unwrap();
                let q = q_from_gamma(&g).unwrap();
                assert_eq!(q.len(), n);
                let j = ideals_lattice(&q, &limits).unwrap();
                assert!(
                    crate::poset::are_isomorphic(&l, &j, &limits).unwrap(),
                    "{g}"
                );
            }
        }
    }

    #[test]
    fn recurrence_matches_chain_counts() {
        for n in 1..10 {
            for g in GammaWord::all(n) {
                let fv = flag_vector(&lattice_from_gamma(&g).unwrap()).unwrap();
                for (s, _, b) in fv.rows() {
                    assert_eq!(&beta_by_recurrence(&g, &s).unwrap(), b, "gamma {g}, S {s}");
                    assert!(b.is_zero() || (b == &BigInt::one() && s.is_sparse()));
                }
            }
        }
    }
}
