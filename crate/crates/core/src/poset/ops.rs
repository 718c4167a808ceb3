use std::collections::HashSet;

use rand::Rng;

use super::graded::GradedPoset;
use crate::error::{Error, Result};
use crate::perm::RankSet;

fn fresh(taken: &mut HashSet<String>, base: &str) -> String {
    let mut name = format!("{base}'");
    while taken.contains(&name) {
        name.push('\'');
    }
    taken.insert(name.clone());
    name
}

fn interior_rank(p: &GradedPoset, i: usize) -> Result<()> {
    p.require_bounded()?;
    if i == 0 || i >= p.rank() {
        return Err(Error::InvalidArgument(format!(
            "rank {i} is not interior to a poset of rank {}",
            p.rank()
        )));
    }
    Ok(())
}

type Cover = (usize, usize);

/// Copies of the rank-`i` elements, ranked `i + 1`, with everything above
/// rank `i` shifted up. Returns the skeleton (names, ranks, old covers not
/// leaving rank `i`) and the index of each copy.
fn with_copied_level(
    p: &GradedPoset,
    i: usize,
) -> (Vec<String>, Vec<usize>, Vec<Cover>, Vec<Cover>) {
    let mut taken: HashSet<String> = p.names().iter().cloned().collect();
    let mut names = p.names().to_vec();
    let mut rank: Vec<usize> = p
        .ranks()
        .iter()
        .map(|&r| if r > i { r + 1 } else { r })
        .collect();
    let mut copy = Vec::new();
    for &t in p.elements_of_rank(i) {
        copy.push((t, names.len()));
        names.push(fresh(&mut taken, p.name(t)));
        rank.push(i + 1);
    }
    let mut covers = Vec::new();
    for &(a, b) in p.covers() {
        if p.rank_of(a) == i {
            let a2 = copy.iter().find(|(t, _)| *t == a).expect("copied").1;
            covers.push((a2, b));
        } else {
            covers.push((a, b));
        }
    }
    (names, rank, covers, copy)
}

/// `R[i]`: every element `t` of rank `i` gets a new element `t'` covering
/// it and taking over the upper covers of `t`.
pub fn stretch(p: &GradedPoset, i: usize) -> Result<GradedPoset> {
    interior_rank(p, i)?;
    let (names, rank, mut covers, copy) = with_copied_level(p, i);
    covers.extend(copy.iter().copied());
    GradedPoset::new(names, rank, covers)
}

/// `R<i>`: a copy of the rank-`i` level placed above it, every copy
/// covering every original, each copy taking over the upper covers of its
/// original.
pub fn proliferate(p: &GradedPoset, i: usize) -> Result<GradedPoset> {
    interior_rank(p, i)?;
    let (names, rank, mut covers, copy) = with_copied_level(p, i);
    for &s in p.elements_of_rank(i) {
        covers.extend(copy.iter().map(|&(_, t2)| (s, t2)));
    }
    GradedPoset::new(names, rank, covers)
}

/// `S°` and its sign for the stretch at rank `i`: a rank set of `R[i]`
/// (rank `n + 1`) mapped to one of `R` (rank `n`).
pub fn stretch_reduce(s: &RankSet, i: usize) -> Result<(RankSet, i32)> {
    let n = s
        .ambient()
        .checked_sub(1)
        .filter(|&n| n >= 1 && i >= 1 && i < n)
        .ok_or_else(|| {
            Error::InvalidArgument(format!(
                "rank {i} is not interior for a rank set over [{}]",
                s.ambient().saturating_sub(1)
            ))
        })?;
    let both = s.contains(i) && s.contains(i + 1);
    let members = s
        .iter()
        .filter(|&j| !(both && j == i + 1))
        .map(|j| if j > i { j - 1 } else { j });
    Ok((RankSet::new(n, members)?, if both { -1 } else { 1 }))
}

/// Every maximal element of `p` covered by every minimal element of `q`.
pub fn graded_ordinal_sum(p: &GradedPoset, q: &GradedPoset) -> Result<GradedPoset> {
    let mut taken: HashSet<String> = p.names().iter().cloned().collect();
    let mut names = p.names().to_vec();
    for name in q.names() {
        if taken.contains(name) {
            names.push(fresh(&mut taken, name));
        } else {
            taken.insert(name.clone());
            names.push(name.clone());
        }
    }
    let off = p.len();
    let shift = p.rank() + 1;
    let mut rank = p.ranks().to_vec();
    rank.extend(q.ranks().iter().map(|r| r + shift));
    let mut covers = p.covers().to_vec();
    covers.extend(q.covers().iter().map(|&(a, b)| (a + off, b + off)));
    for &a in p.elements_of_rank(p.rank()) {
        for &b in q.elements_of_rank(0) {
            covers.push((a, b + off));
        }
    }
    GradedPoset::new(names, rank, covers)
}

/// Ranks `0..=i` of `p` with a new top adjoined.
pub fn truncate_above(p: &GradedPoset, i: usize) -> Result<GradedPoset> {
    interior_rank(p, i)?;
    let keep: Vec<usize> = (0..p.len()).filter(|&x| p.rank_of(x) <= i).collect();
    let base = p.induced(&keep, 0)?;
    let mut taken: HashSet<String> = base.names().iter().cloned().collect();
    let mut names = base.names().to_vec();
    let mut rank = base.ranks().to_vec();
    let mut covers = base.covers().to_vec();
    let top = names.len();
    names.push(fresh(&mut taken, "top"));
    rank.push(i + 1);
    covers.extend(base.elements_of_rank(i).iter().map(|&x| (x, top)));
    GradedPoset::new(names, rank, covers)
}

/// A new bottom below ranks `i..` of `p`, which are re-ranked from 1.
pub fn truncate_below(p: &GradedPoset, i: usize) -> Result<GradedPoset> {
    interior_rank(p, i)?;
    let keep: Vec<usize> = (0..p.len()).filter(|&x| p.rank_of(x) >= i).collect();
    let mut taken: HashSet<String> = keep.iter().map(|&x| p.name(x).to_string()).collect();
    let mut names = vec![fresh(&mut taken, "0")];
    let mut rank = vec![0];
    let mut covers = Vec::new();
    let index = |x: usize| keep.iter().position(|&k| k == x).expect("kept") + 1;
    for &x in &keep {
        names.push(p.name(x).to_string());
        rank.push(p.rank_of(x) - i + 1);
        if p.rank_of(x) == i {
            covers.push((0, index(x)));
        }
    }
    for &(a, b) in p.covers() {
        if p.rank_of(a) >= i {
            covers.push((index(a), index(b)));
        }
    }
    GradedPoset::new(names, rank, covers)
}

/// A random bounded graded poset of rank `2..=max_rank` with at most
/// `max_elements` elements. Consecutive interior levels are joined by a
/// random bipartite cover graph without isolated vertices.
pub fn random_graded_poset<R: Rng + ?Sized>(
    rng: &mut R,
    max_rank: usize,
    max_elements: usize,
) -> Result<GradedPoset> {
    if max_rank < 2 || max_elements < max_rank + 1 {
        return Err(Error::InvalidArgument(format!(
            "need rank at least 2 and room for a chain (got rank {max_rank}, {max_elements} elements)"
        )));
    }
    let n = rng.gen_range(2..=max_rank);
    let mut budget = max_elements - (n + 1);
    let mut sizes = vec![1usize];
    for _ in 1..n {
        let extra = rng.gen_range(0..=budget.min(2));
        budget -= extra;
        sizes.push(1 + extra);
    }
    sizes.push(1);
    let mut levels: Vec<Vec<usize>> = Vec::new();
    let mut rank = Vec::new();
    for (r, &k) in sizes.iter().enumerate() {
        levels.push((rank.len()..rank.len() + k).collect());
        rank.extend(std::iter::repeat_n(r, k));
    }
    let mut covers = Vec::new();
    for r in 0..n {
        let (lo, hi) = (&levels[r], &levels[r + 1]);
        let mut edges = HashSet::new();
        for (a, &x) in lo.iter().enumerate() {
            for &y in hi {
                if rng.gen_bool(0.5) {
                    edges.insert((x, y));
                }
            }
            // every element needs an upper cover
            if !hi.iter().any(|&y| edges.contains(&(x, y))) {
                edges.insert((x, hi[a % hi.len()]));
            }
        }
        for &y in hi {
            if !lo.iter().any(|&x| edges.contains(&(x, y))) {
                edges.insert((lo[rng.gen_range(0..lo.len())], y));
            }
        }
        covers.extend(edges);
    }
    GradedPoset::from_levels(rank, covers)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::flag_vector;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn b2() -> GradedPoset {
        GradedPoset::from_levels(vec![0, 1, 1, 2], vec![(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn stretch_examples() {
        let s = stretch(&b2(), 1).unwrap();
        assert_eq!(s.rank_sizes(), vec![1, 2, 2, 1]);
        let middle: Vec<_> = s
            .covers()
            .iter()
            .filter(|&&(a, _)| s.rank_of(a) == 1)
            .collect();
        assert_eq!(middle.len(), 2);
        let c = stretch(&GradedPoset::chain(2), 1).unwrap();
        assert_eq!(c.rank_sizes(), vec![1; 4]);
        assert!(stretch(&b2(), 2).is_err());
    }

    #[test]
    fn proliferate_examples() {
        let p = proliferate(&b2(), 1).unwrap();
        assert_eq!(p.rank_sizes(), vec![1, 2, 2, 1]);
        let middle = p
            .covers()
            .iter()
            .filter(|&&(a, _)| p.rank_of(a) == 1)
            .count();
        assert_eq!(middle, 4);
        assert_eq!(
            proliferate(&GradedPoset::chain(3), 2).unwrap().rank_sizes(),
            vec![1; 5]
        );
    }

    #[test]
    fn reduce_rank_sets() {
        let s = RankSet::new(5, [2, 3, 4]).unwrap();
        let (r, sign) = stretch_reduce(&s, 2).unwrap();
        assert_eq!((r.iter().collect::<Vec<_>>(), sign), (vec![2, 3], -1));
        let (r, sign) = stretch_reduce(&RankSet::new(5, [3]).unwrap(), 2).unwrap();
        assert_eq!((r.iter().collect::<Vec<_>>(), sign), (vec![2], 1));
    }

    #[test]
    fn sums_and_truncations() {
        let s = graded_ordinal_sum(&GradedPoset::chain(1), &GradedPoset::chain(2)).unwrap();
        assert_eq!(s.rank_sizes(), vec![1; 5]);
        let p = proliferate(&b2(), 1).unwrap();
        let lower = truncate_above(&p, 1).unwrap();
        let upper = truncate_below(&p, 2).unwrap();
        assert_eq!(lower.rank_sizes(), vec![1, 2, 1]);
        assert_eq!(upper.rank_sizes(), vec![1, 2, 1]);
        assert_eq!(flag_vector(&p).unwrap().support().len(), 4);
    }

    #[test]
    fn random_posets_are_bounded() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let p = random_graded_poset(&mut rng, 5, 10).unwrap();
            assert!(p.len() <= 10 && p.rank() <= 5 && p.rank() >= 2);
            assert!(p.has_bottom() && p.has_top());
        }
    }
}
