use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Pow};

use super::canon::Canonical;
use super::gamma::{lattice_from_gamma, q_from_gamma, GammaWord};
use super::graded::GradedPoset;
use super::ideals::ideals_by_size;
use super::natural::NaturalPoset;
use super::ops::{graded_ordinal_sum, stretch};
use crate::error::{Error, Result};
use crate::limits::Limits;

/// Cover relations between two adjacent levels, as index pairs.
type CoverSet = Vec<(usize, usize)>;

/// Largest ground set for listing every naturally labelled poset.
pub const MAX_LABELED: usize = 7;
/// Largest ground set for listing posets up to isomorphism.
pub const MAX_UNLABELED: usize = 8;

fn extend_by_maximal(q: &NaturalPoset, limits: &Limits) -> Result<Vec<NaturalPoset>> {
    let mut out = Vec::new();
    for level in ideals_by_size(q, limits)? {
        for ideal in level {
            let mut below: Vec<u64> = (0..q.len()).map(|j| q.below_mask(j)).collect();
            below.push(ideal);
            out.push(NaturalPoset::from_masks(below));
        }
    }
    Ok(out)
}

/// Every naturally labelled poset on `[n]`: each arises once by adding `n`
/// as a maximal element over an order ideal of a poset on `[n - 1]`.
pub fn natural_posets(n: usize, limits: &Limits) -> Result<Vec<NaturalPoset>> {
    if n > MAX_LABELED {
        return Err(Error::guard("labelled poset size", MAX_LABELED, n));
    }
    let mut current = vec![NaturalPoset::antichain(0)];
    for _ in 0..n {
        let mut next = Vec::new();
        for q in &current {
            next.extend(extend_by_maximal(q, limits)?);
        }
        current = next;
    }
    Ok(current)
}

fn dedup_iso<P: Canonical>(items: impl IntoIterator<Item = P>, limits: &Limits) -> Result<Vec<P>> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for p in items {
        if seen.insert(p.canonical_form(limits)?) {
            out.push(p);
        }
    }
    Ok(out)
}

/// One naturally labelled representative of every `n`-element poset up to
/// isomorphism.
pub fn all_posets(n: usize, limits: &Limits) -> Result<Vec<NaturalPoset>> {
    if n > MAX_UNLABELED {
        return Err(Error::guard("unlabelled poset size", MAX_UNLABELED, n));
    }
    let mut current = vec![NaturalPoset::antichain(0)];
    for _ in 0..n {
        let mut next = Vec::new();
        for q in &current {
            next.extend(extend_by_maximal(q, limits)?);
        }
        current = dedup_iso(next, limits)?;
    }
    Ok(current)
}

/// Number of ordinal-sum-indecomposable posets whose ideal lattice has two
/// elements at every interior rank: 1, 1, then `2^(n-3)`.
pub fn g_blocks(n: usize) -> BigUint {
    match n {
        0 => BigUint::from(0u32),
        1 | 2 => BigUint::one(),
        _ => BigUint::from(2u32).pow(n as u32 - 3),
    }
}

/// The indecomposable blocks of size `n`, as `Q(gamma)`.
pub fn block_posets(n: usize) -> Result<Vec<NaturalPoset>> {
    GammaWord::all(n).iter().map(q_from_gamma).collect()
}

fn compositions(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for mut rest in compositions(n - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// All `n`-element posets whose ideal lattice is multiplicity-free, built as
/// ordinal sums of `Q(gamma)` blocks and deduplicated up to isomorphism.
pub fn distributive_mf_posets(n: usize, limits: &Limits) -> Result<Vec<NaturalPoset>> {
    if n > super::natural::MAX_NATURAL {
        return Err(Error::guard(
            "natural poset size",
            super::natural::MAX_NATURAL,
            n,
        ));
    }
    let mut all = Vec::new();
    for comp in compositions(n) {
        let mut partial = vec![NaturalPoset::antichain(0)];
        for &size in &comp {
            let blocks = block_posets(size)?;
            let mut next = Vec::new();
            for p in &partial {
                for b in &blocks {
                    next.push(p.ordinal_sum(b)?);
                }
            }
            partial = next;
        }
        all.extend(partial);
    }
    dedup_iso(all, limits)
}

pub fn count_distributive_mf(n: usize, limits: &Limits) -> Result<BigUint> {
    Ok(BigUint::from(distributive_mf_posets(n, limits)?.len()))
}

/// Bound for enumerating bounded graded posets with at most two elements
/// per rank.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MfBound {
    /// Ranks `1..=max`.
    ByRank(usize),
    /// Element counts `2..=max`.
    ByElements(usize),
}

impl MfBound {
    /// Whether a poset whose interior has `levels` levels and `elements`
    /// elements fits.
    fn admits(self, levels: usize, elements: usize) -> bool {
        match self {
            MfBound::ByRank(max) => levels < max,
            MfBound::ByElements(max) => elements + 2 <= max,
        }
    }

    fn max_levels(self) -> usize {
        match self {
            MfBound::ByRank(max) => max.saturating_sub(1),
            MfBound::ByElements(max) => max.saturating_sub(2),
        }
    }

    fn key(self, p: &GradedPoset) -> usize {
        match self {
            MfBound::ByRank(_) => p.rank(),
            MfBound::ByElements(_) => p.len(),
        }
    }

    /// Counts indexed from the smallest value (rank 1, or 2 elements).
    pub fn tally(self, posets: &[GradedPoset]) -> Vec<usize> {
        let (lo, hi) = match self {
            MfBound::ByRank(max) => (1, max),
            MfBound::ByElements(max) => (2, max),
        };
        let mut counts = vec![0; (hi + 1).saturating_sub(lo)];
        for p in posets {
            counts[self.key(p) - lo] += 1;
        }
        counts
    }
}

impl fmt::Display for MfBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MfBound::ByRank(m) => write!(f, "rank:{m}"),
            MfBound::ByElements(m) => write!(f, "elements:{m}"),
        }
    }
}

impl FromStr for MfBound {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (kind, max) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("expected rank:M or elements:M, got {s:?}")))?;
        let max = max
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad bound {max:?}")))?;
        match kind.trim() {
            "rank" => Ok(MfBound::ByRank(max)),
            "elements" => Ok(MfBound::ByElements(max)),
            other => Err(Error::Parse(format!("unknown bound kind {other:?}"))),
        }
    }
}

fn interior(p: &GradedPoset) -> Result<GradedPoset> {
    let keep: Vec<usize> = (0..p.len())
        .filter(|&x| p.rank_of(x) != 0 && p.rank_of(x) != p.rank())
        .collect();
    p.induced(&keep, 1)
}

fn weak_compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if total == 0 {
            vec![Vec::new()]
        } else {
            Vec::new()
        };
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for mut rest in weak_compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Indecomposable interiors with `levels` levels: the single point, or a
/// two-wide `L(gamma)` interior stretched level by level.
fn pieces(levels: usize) -> Result<Vec<GradedPoset>> {
    let mut out = Vec::new();
    if levels == 1 {
        out.push(GradedPoset::chain(0));
    }
    for m in 1..=levels {
        for gamma in GammaWord::all(m + 1) {
            let base = lattice_from_gamma(&gamma)?;
            for js in weak_compositions(levels - m, m) {
                let mut p = base.clone();
                for (i, &j) in js.iter().enumerate().rev() {
                    for _ in 0..j {
                        p = stretch(&p, i + 1)?;
                    }
                }
                out.push(interior(&p)?);
            }
        }
    }
    Ok(out)
}

/// Bounded graded posets with at most two elements per rank, generated as
/// `0 + P_1 + ... + P_k + 1` (ordinal sums) over indecomposable pieces and
/// deduplicated up to isomorphism.
pub fn generate_mf_posets(bound: MfBound, limits: &Limits) -> Result<Vec<GradedPoset>> {
    let max_levels = bound.max_levels();
    let by_levels: Vec<Vec<GradedPoset>> = (0..=max_levels)
        .map(|l| if l == 0 { Ok(Vec::new()) } else { pieces(l) })
        .collect::<Result<_>>()?;
    let point = GradedPoset::chain(0);
    let mut out = Vec::new();
    // (interior so far, levels, elements)
    let mut stack: Vec<(Option<GradedPoset>, usize, usize)> = vec![(None, 0, 0)];
    while let Some((acc, levels, elements)) = stack.pop() {
        let closed = match &acc {
            None => GradedPoset::chain(1),
            Some(a) => graded_ordinal_sum(&graded_ordinal_sum(&point, a)?, &point)?,
        };
        out.push(closed);
        for (l, group) in by_levels.iter().enumerate().skip(1) {
            for piece in group {
                let (nl, ne) = (levels + l, elements + piece.len());
                if !bound.admits(nl, ne) {
                    continue;
                }
                let next = match &acc {
                    None => piece.clone(),
                    Some(a) => graded_ordinal_sum(a, piece)?,
                };
                stack.push((Some(next), nl, ne));
            }
        }
    }
    out.retain(|p| bound.admits(p.rank() - 1, p.len() - 2));
    let mut out = dedup_iso(out, limits)?;
    out.sort_by_key(|p| (p.rank(), p.len()));
    Ok(out)
}

// 2x2 cover patterns between two-element levels, bit (2a + b) for lower a, upper b.
fn two_by_two_patterns() -> Vec<u8> {
    (1u8..16)
        .filter(|&m| {
            let row = |a: u8| m >> (2 * a) & 3 != 0;
            let col = |b: u8| (m >> b & 1) | (m >> (2 + b) & 1) != 0;
            row(0) && row(1) && col(0) && col(1)
        })
        .collect()
}

fn swap_lower(m: u8) -> u8 {
    (m >> 2 & 3) | (m & 3) << 2
}

fn swap_upper(m: u8) -> u8 {
    let bit = |a: u8, b: u8| m >> (2 * a + b) & 1;
    bit(0, 1) | bit(0, 0) << 1 | bit(1, 1) << 2 | bit(1, 0) << 3
}

/// Canonical key of a level structure: sizes plus 2x2 patterns, minimised
/// over swapping the two elements of each two-element level (the only
/// rank-preserving relabellings).
fn level_key(sizes: &[usize], patterns: &[u8]) -> Vec<u8> {
    let wide: Vec<usize> = (0..sizes.len()).filter(|&i| sizes[i] == 2).collect();
    let mut best: Option<Vec<u8>> = None;
    for flips in 0..1u32 << wide.len() {
        let flipped = |i: usize| {
            wide.iter()
                .position(|&w| w == i)
                .is_some_and(|k| flips >> k & 1 == 1)
        };
        let mut key: Vec<u8> = sizes.iter().map(|&s| s as u8).collect();
        for (i, &m) in patterns.iter().enumerate() {
            let mut m = m;
            if flipped(i) {
                m = swap_lower(m);
            }
            if flipped(i + 1) {
                m = swap_upper(m);
            }
            key.push(m);
        }
        if best.as_ref().is_none_or(|b| key < *b) {
            best = Some(key);
        }
    }
    best.unwrap_or_default()
}

fn poset_from_levels(sizes: &[usize], patterns: &[u8]) -> Result<GradedPoset> {
    let mut rank = vec![0];
    let mut levels: Vec<Vec<usize>> = vec![vec![0]];
    for (r, &s) in sizes.iter().enumerate() {
        levels.push((rank.len()..rank.len() + s).collect());
        rank.extend(std::iter::repeat_n(r + 1, s));
    }
    levels.push(vec![rank.len()]);
    rank.push(sizes.len() + 1);
    let mut covers = Vec::new();
    for r in 0..levels.len() - 1 {
        let (lo, hi) = (&levels[r], &levels[r + 1]);
        let pattern = (r >= 1 && r < sizes.len()).then(|| patterns[r - 1]);
        for (a, &x) in lo.iter().enumerate() {
            for (b, &y) in hi.iter().enumerate() {
                let edge = match pattern {
                    Some(m) if lo.len() == 2 && hi.len() == 2 => m >> (2 * a + b) & 1 == 1,
                    _ => true,
                };
                if edge {
                    covers.push((x, y));
                }
            }
        }
    }
    GradedPoset::from_levels(rank, covers)
}

/// Exhaustive oracle for [`generate_mf_posets`]: every sequence of interior
/// level sizes in {1, 2} and every choice of cover pattern between adjacent
/// two-element levels, up to isomorphism.
pub fn mf_posets_by_levels(bound: MfBound) -> Result<Vec<GradedPoset>> {
    let patterns = two_by_two_patterns();
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    let max_levels = bound.max_levels();
    let mut sizes_stack: Vec<Vec<usize>> = vec![Vec::new()];
    while let Some(sizes) = sizes_stack.pop() {
        let elements: usize = sizes.iter().sum();
        if !bound.admits(sizes.len(), elements) {
            continue;
        }
        if sizes.len() < max_levels {
            for s in [1, 2] {
                let mut next = sizes.clone();
                next.push(s);
                sizes_stack.push(next);
            }
        }
        let slots = sizes.len().saturating_sub(1);
        let mut choice = vec![0usize; slots];
        loop {
            let chosen: Vec<u8> = (0..slots)
                .map(|i| {
                    if sizes[i] == 2 && sizes[i + 1] == 2 {
                        patterns[choice[i]]
                    } else {
                        0
                    }
                })
                .collect();
            if seen.insert(level_key(&sizes, &chosen)) {
                out.push(poset_from_levels(&sizes, &chosen)?);
            }
            // odometer over the wide-wide slots
            let mut i = 0;
            loop {
                if i == slots {
                    break;
                }
                if sizes[i] == 2 && sizes[i + 1] == 2 && choice[i] + 1 < patterns.len() {
                    choice[i] += 1;
                    break;
                }
                choice[i] = 0;
                i += 1;
            }
            if i == slots {
                break;
            }
        }
    }
    out.sort_by_key(|p| (p.rank(), p.len()));
    Ok(out)
}

fn bipartite_without_isolated(lo: usize, hi: usize) -> Vec<Vec<(usize, usize)>> {
    let cells: Vec<(usize, usize)> = (0..lo).flat_map(|a| (0..hi).map(move |b| (a, b))).collect();
    (0u64..1 << cells.len())
        .filter_map(|mask| {
            let edges: Vec<(usize, usize)> = cells
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let ok = (0..lo).all(|a| edges.iter().any(|e| e.0 == a))
                && (0..hi).all(|b| edges.iter().any(|e| e.1 == b));
            ok.then_some(edges)
        })
        .collect()
}

/// Every bounded graded poset of rank `1..=max_rank` with at most
/// `max_elements` elements, up to isomorphism.
pub fn all_bounded_graded_posets(
    max_rank: usize,
    max_elements: usize,
    limits: &Limits,
) -> Result<Vec<GradedPoset>> {
    if max_elements > limits.iso_n {
        return Err(Error::guard(
            "isomorphism test size",
            limits.iso_n,
            max_elements,
        ));
    }
    let mut out = Vec::new();
    let mut edge_cache: BTreeMap<(usize, usize), Vec<CoverSet>> = BTreeMap::new();
    for rank in 1..=max_rank {
        if rank + 1 > max_elements {
            break;
        }
        let budget = max_elements - 2;
        // interior level sizes, each at least one
        let mut size_lists = vec![Vec::new()];
        for _ in 1..rank {
            size_lists = size_lists
                .into_iter()
                .flat_map(|s: Vec<usize>| {
                    let used: usize = s.iter().sum();
                    (1..=budget.saturating_sub(used)).map(move |k| {
                        let mut t = s.clone();
                        t.push(k);
                        t
                    })
                })
                .collect();
        }
        for sizes in size_lists {
            if sizes.iter().sum::<usize>() > budget {
                continue;
            }
            let mut rank_of = vec![0];
            let mut levels = vec![vec![0usize]];
            for (r, &s) in sizes.iter().enumerate() {
                levels.push((rank_of.len()..rank_of.len() + s).collect());
                rank_of.extend(std::iter::repeat_n(r + 1, s));
            }
            levels.push(vec![rank_of.len()]);
            rank_of.push(rank);
            let mut fixed = Vec::new();
            for &x in &levels[1] {
                fixed.push((0, x));
            }
            if rank >= 2 {
                for &x in &levels[rank - 1] {
                    fixed.push((x, rank_of.len() - 1));
                }
            } else {
                fixed = vec![(0, 1)];
            }
            let mut layers: Vec<&Vec<Vec<(usize, usize)>>> = Vec::new();
            for r in 1..rank.saturating_sub(1) {
                let key = (levels[r].len(), levels[r + 1].len());
                edge_cache
                    .entry(key)
                    .or_insert_with(|| bipartite_without_isolated(key.0, key.1));
            }
            for r in 1..rank.saturating_sub(1) {
                layers.push(&edge_cache[&(levels[r].len(), levels[r + 1].len())]);
            }
            let mut found = Vec::new();
            let mut choice = vec![0usize; layers.len()];
            loop {
                let mut covers = fixed.clone();
                for (k, layer) in layers.iter().enumerate() {
                    let (lo, hi) = (&levels[k + 1], &levels[k + 2]);
                    covers.extend(layer[choice[k]].iter().map(|&(a, b)| (lo[a], hi[b])));
                }
                found.push(GradedPoset::from_levels(rank_of.clone(), covers)?);
                let mut k = 0;
                while k < layers.len() {
                    choice[k] += 1;
                    if choice[k] < layers[k].len() {
                        break;
                    }
                    choice[k] = 0;
                    k += 1;
                }
                if k == layers.len() {
                    break;
                }
            }
            out.extend(dedup_iso(found, limits)?);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::{ideal_counts, is_multiplicity_free};

    #[test]
    fn poset_counts() {
        let l = Limits::default();
        let want = [1, 1, 2, 5, 16, 63];
        for (n, &w) in want.iter().enumerate() {
            assert_eq!(all_posets(n, &l).unwrap().len(), w, "n = {n}");
        }
        let labeled = [1, 1, 2, 7, 40, 357];
        for (n, &w) in labeled.iter().enumerate() {
            assert_eq!(natural_posets(n, &l).unwrap().len(), w, "n = {n}");
        }
    }

    #[test]
    fn distributive_family() {
        let l = Limits::default();
        let counts: Vec<usize> = (1..=5)
            .map(|n| distributive_mf_posets(n, &l).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 2, 4, 9, 21]);
        for n in 1..=5 {
            let oracle = all_posets(n, &l)
                .unwrap()
                .into_iter()
                .filter(|q| ideal_counts(q, &l).unwrap().iter().all(|&c| c <= 2))
                .count();
            assert_eq!(oracle, counts[n - 1]);
        }
        assert_eq!(g_blocks(5), BigUint::from(4u32));
        for n in 1..8 {
            let blocks = dedup_iso(block_posets(n).unwrap(), &l).unwrap();
            assert_eq!(BigUint::from(blocks.len()), g_blocks(n));
        }
    }

    #[test]
    fn mf_enumeration_small() {
        let l = Limits::default();
        let by_rank = generate_mf_posets(MfBound::ByRank(5), &l).unwrap();
        assert_eq!(MfBound::ByRank(5).tally(&by_rank), vec![1, 2, 6, 21, 78]);
        assert!(by_rank.iter().all(|p| is_multiplicity_free(p).unwrap()));
        let oracle = mf_posets_by_levels(MfBound::ByRank(5)).unwrap();
        assert_eq!(MfBound::ByRank(5).tally(&oracle), vec![1, 2, 6, 21, 78]);
        let by_elements = generate_mf_posets(MfBound::ByElements(7), &l).unwrap();
        assert_eq!(
            MfBound::ByElements(7).tally(&by_elements),
            vec![1, 1, 2, 3, 7, 12]
        );
        let oracle = mf_posets_by_levels(MfBound::ByElements(7)).unwrap();
        assert_eq!(
            MfBound::ByElements(7).tally(&oracle),
            vec![1, 1, 2, 3, 7, 12]
        );
        assert_eq!("rank:4".parse::<MfBound>().unwrap(), MfBound::ByRank(4));
    }

    #[test]
    fn graded_exhaustive_small() {
        let l = Limits::default();
        let all = all_bounded_graded_posets(3, 6, &l).unwrap();
        // rank 1: 1; rank 2: interior antichains of size 1..4
        assert_eq!(all.iter().filter(|p| p.rank() <= 2).count(), 5);
        for p in &all {
            assert_eq!(is_multiplicity_free(p).unwrap(), p.at_most_two_per_rank());
        }
    }
}
