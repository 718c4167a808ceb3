use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use super::graded::GradedPoset;
use super::ideals::linear_extensions;
use super::natural::NaturalPoset;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::perm::{descent_set, RankSet};

/// Largest rank for which whole flag vectors (2^(rank-1) entries) are built.
pub const MAX_FLAG_RANK: usize = 24;

fn check_ranks(p: &GradedPoset, s: &RankSet) -> Result<()> {
    p.require_bounded()?;
    if s.ambient() != p.rank() {
        return Err(Error::InvalidArgument(format!(
            "rank set {s} is over [{}] but the poset has rank {}",
            s.ambient().saturating_sub(1),
            p.rank()
        )));
    }
    Ok(())
}

/// `alpha_P(S)`: the number of chains of `P` whose ranks are exactly `S`.
pub fn alpha(p: &GradedPoset, s: &RankSet) -> Result<BigUint> {
    check_ranks(p, s)?;
    let mut current: Vec<(usize, BigUint)> = p
        .elements_of_rank(0)
        .iter()
        .map(|&x| (x, BigUint::one()))
        .collect();
    for r in s.iter().chain(std::iter::once(p.rank())) {
        current = p
            .elements_of_rank(r)
            .iter()
            .map(|&y| {
                let ways = current
                    .iter()
                    .filter(|(x, _)| p.leq(*x, y))
                    .fold(BigUint::zero(), |acc, (_, w)| acc + w);
                (y, ways)
            })
            .collect();
    }
    Ok(current.into_iter().map(|(_, w)| w).sum())
}

/// `beta_P(S) = sum over T in S of (-1)^|S - T| alpha_P(T)`.
pub fn beta(p: &GradedPoset, s: &RankSet) -> Result<BigInt> {
    check_ranks(p, s)?;
    let bits = s.bits();
    let mut total = BigInt::zero();
    // walk the submasks of S
    let mut t = bits;
    loop {
        let a = BigInt::from(alpha(p, &RankSet::from_bits_unchecked(s.ambient(), t))?);
        if (bits & !t).count_ones().is_multiple_of(2) {
            total += a;
        } else {
            total -= a;
        }
        if t == 0 {
            break;
        }
        t = (t - 1) & bits;
    }
    Ok(total)
}

/// The flag f- and h-vectors of a bounded graded poset, indexed by rank sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlagVector {
    rank: usize,
    alpha: Vec<BigUint>,
    beta: Vec<BigInt>,
}

impl FlagVector {
    pub fn rank(&self) -> usize {
        self.rank
    }

    fn index(&self, s: &RankSet) -> Result<usize> {
        if s.ambient() != self.rank {
            return Err(Error::InvalidArgument(format!(
                "rank set {s} does not match rank {}",
                self.rank
            )));
        }
        Ok(s.bits() as usize)
    }

    pub fn alpha(&self, s: &RankSet) -> Result<&BigUint> {
        Ok(&self.alpha[self.index(s)?])
    }

    pub fn beta(&self, s: &RankSet) -> Result<&BigInt> {
        Ok(&self.beta[self.index(s)?])
    }

    /// `(S, alpha(S), beta(S))` for every `S`, ordered by bit pattern.
    pub fn rows(&self) -> impl Iterator<Item = (RankSet, &BigUint, &BigInt)> + '_ {
        (0..self.alpha.len()).map(move |b| {
            (
                RankSet::from_bits_unchecked(self.rank, b as u64),
                &self.alpha[b],
                &self.beta[b],
            )
        })
    }

    /// `beta` values indexed by the bit pattern of `S` (member `i` is bit `i - 1`).
    pub fn beta_values(&self) -> &[BigInt] {
        &self.beta
    }

    /// Rank sets with nonzero `beta`.
    pub fn support(&self) -> Vec<RankSet> {
        self.rows()
            .filter(|(_, _, b)| !b.is_zero())
            .map(|(s, _, _)| s)
            .collect()
    }

    pub fn is_multiplicity_free(&self) -> bool {
        self.beta.iter().all(|b| b.abs() <= BigInt::one())
    }

    /// Checks `alpha(S) = sum over T in S of beta(T)` everywhere.
    pub fn mobius_consistent(&self) -> bool {
        (0..self.alpha.len()).all(|s| {
            let mut sum = BigInt::zero();
            let mut t = s;
            loop {
                sum += &self.beta[t];
                if t == 0 {
                    break;
                }
                t = (t - 1) & s;
            }
            sum == BigInt::from(self.alpha[s].clone())
        })
    }
}

#[derive(Serialize)]
struct FlagRow {
    #[serde(rename = "S")]
    s: Vec<usize>,
    #[serde(with = "crate::serde_big::biguint")]
    alpha: BigUint,
    #[serde(with = "crate::serde_big::bigint")]
    beta: BigInt,
}

impl Serialize for FlagVector {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<FlagRow> = self
            .rows()
            .map(|(s, a, b)| FlagRow {
                s: s.iter().collect(),
                alpha: a.clone(),
                beta: b.clone(),
            })
            .collect();
        rows.serialize(ser)
    }
}

fn require_flag_rank(rank: usize) -> Result<()> {
    if rank > MAX_FLAG_RANK {
        return Err(Error::guard("flag vector rank", MAX_FLAG_RANK, rank));
    }
    Ok(())
}

/// Inverse subset-sum (Mobius) transform over `width` bits.
fn mobius(alpha: &[BigUint], width: usize) -> Vec<BigInt> {
    let mut beta: Vec<BigInt> = alpha.iter().cloned().map(BigInt::from).collect();
    for bit in 0..width {
        for s in 0..beta.len() {
            if s >> bit & 1 == 1 {
                let lower = beta[s ^ 1 << bit].clone();
                beta[s] -= lower;
            }
        }
    }
    beta
}

/// Both flag vectors at once. Chains are counted per top element and
/// rank set below it, so the cost is about `|P| * 2^rank`.
pub fn flag_vector(p: &GradedPoset) -> Result<FlagVector> {
    p.require_bounded()?;
    let n = p.rank();
    require_flag_rank(n)?;
    let width = n.saturating_sub(1);
    // chains[x][T]: chains 0 < ... < x whose interior ranks form T (T inside [rank x - 1])
    let mut chains: Vec<Vec<BigUint>> = vec![Vec::new(); p.len()];
    for r in 0..=n {
        for &x in p.elements_of_rank(r) {
            if r == 0 {
                chains[x] = vec![BigUint::one()];
                continue;
            }
            let mut row = vec![BigUint::zero(); 1 << (r - 1)];
            row[0] = BigUint::one();
            for q in 1..r {
                let below: Vec<usize> = p
                    .elements_of_rank(q)
                    .iter()
                    .copied()
                    .filter(|&y| p.leq(y, x))
                    .collect();
                // T with maximum q: T = T' + {q}, T' inside [q - 1]
                for t in 0..1usize << (q - 1) {
                    let sum = below
                        .iter()
                        .fold(BigUint::zero(), |acc, &y| acc + &chains[y][t]);
                    row[t | 1 << (q - 1)] = sum;
                }
            }
            chains[x] = row;
        }
    }
    let top = p.elements_of_rank(n)[0];
    let alpha = if n == 0 {
        vec![BigUint::one()]
    } else {
        std::mem::take(&mut chains[top])
    };
    let beta = mobius(&alpha, width);
    Ok(FlagVector {
        rank: n,
        alpha,
        beta,
    })
}

pub fn is_multiplicity_free(p: &GradedPoset) -> Result<bool> {
    Ok(flag_vector(p)?.is_multiplicity_free())
}

/// `beta_{J(Q)}` computed as descent-set counts of linear extensions.
pub fn beta_by_descents(q: &NaturalPoset, limits: &Limits) -> Result<Vec<BigInt>> {
    require_flag_rank(q.len())?;
    let width = q.len().saturating_sub(1);
    let mut counts = vec![BigInt::zero(); 1 << width];
    for w in linear_extensions(q, limits)? {
        counts[descent_set(&w).bits() as usize] += 1;
    }
    Ok(counts)
}
