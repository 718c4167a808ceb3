use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::graded::GradedPoset;
use super::natural::NaturalPoset;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::perm::Word;

/// Order ideals of `q` as bit masks, grouped by size.
pub(crate) fn ideals_by_size(q: &NaturalPoset, limits: &Limits) -> Result<Vec<Vec<u64>>> {
    let n = q.len();
    let mut levels: Vec<Vec<u64>> = vec![vec![0]];
    let mut total = 1usize;
    for _ in 0..n {
        let mut next: Vec<u64> = Vec::new();
        for &ideal in levels.last().expect("nonempty") {
            for x in 0..n {
                if ideal >> x & 1 == 0 && q.below_mask(x) & !ideal == 0 {
                    next.push(ideal | 1 << x);
                }
            }
        }
        next.sort_unstable();
        next.dedup();
        total += next.len();
        if total > limits.ideal_cap {
            return Err(Error::guard("order ideal count", limits.ideal_cap, total));
        }
        levels.push(next);
    }
    Ok(levels)
}

fn ideal_name(mask: u64) -> String {
    let members: Vec<String> = (0..64)
        .filter(|i| mask >> i & 1 == 1)
        .map(|i| (i + 1).to_string())
        .collect();
    format!("{{{}}}", members.join(","))
}

/// `J(Q)`: order ideals ordered by inclusion and ranked by size. Elements are
/// named by their members, e.g. `{1,3}`.
pub fn ideals_lattice(q: &NaturalPoset, limits: &Limits) -> Result<GradedPoset> {
    let levels = ideals_by_size(q, limits)?;
    let mut index = HashMap::new();
    let mut names = Vec::new();
    let mut rank = Vec::new();
    for (r, level) in levels.iter().enumerate() {
        for &mask in level {
            index.insert(mask, names.len());
            names.push(ideal_name(mask));
            rank.push(r);
        }
    }
    let mut covers = Vec::new();
    for level in &levels {
        for &mask in level {
            for x in 0..q.len() {
                if mask >> x & 1 == 0 {
                    if let Some(&hi) = index.get(&(mask | 1 << x)) {
                        covers.push((index[&mask], hi));
                    }
                }
            }
        }
    }
    GradedPoset::new(names, rank, covers)
}

/// Number of order ideals of each size.
pub fn ideal_counts(q: &NaturalPoset, limits: &Limits) -> Result<Vec<usize>> {
    Ok(ideals_by_size(q, limits)?.iter().map(Vec::len).collect())
}

/// All linear extensions of `q` as permutations, in lexicographic order.
pub fn linear_extensions(q: &NaturalPoset, limits: &Limits) -> Result<Vec<Word>> {
    if q.len() > limits.extensions_n {
        return Err(Error::guard(
            "linear extension ground set",
            limits.extensions_n,
            q.len(),
        ));
    }
    fn go(q: &NaturalPoset, placed: u64, prefix: &mut Vec<u32>, out: &mut Vec<Word>) {
        if prefix.len() == q.len() {
            out.push(Word::from_raw(prefix.clone()));
            return;
        }
        for x in 0..q.len() {
            if placed >> x & 1 == 0 && q.below_mask(x) & !placed == 0 {
                prefix.push(x as u32 + 1);
                go(q, placed | 1 << x, prefix, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(q, 0, &mut Vec::with_capacity(q.len()), &mut out);
    Ok(out)
}

/// `e(Q)`, the number of linear extensions, by counting maximal chains of `J(Q)`.
pub fn extension_count(q: &NaturalPoset, limits: &Limits) -> Result<BigUint> {
    if q.len() > limits.extension_count_n {
        return Err(Error::guard(
            "extension count ground set",
            limits.extension_count_n,
            q.len(),
        ));
    }
    let levels = ideals_by_size(q, limits)?;
    let mut ways: HashMap<u64, BigUint> = HashMap::from([(0, BigUint::one())]);
    for level in &levels[..q.len()] {
        let mut next: HashMap<u64, BigUint> = HashMap::new();
        for &mask in level {
            let w = &ways[&mask];
            for x in 0..q.len() {
                if mask >> x & 1 == 0 && q.below_mask(x) & !mask == 0 {
                    *next.entry(mask | 1 << x).or_insert_with(BigUint::zero) += w;
                }
            }
        }
        ways = next;
    }
    Ok(ways.into_values().next().unwrap_or_else(BigUint::one))
}
