//! Class counts for `{1^k, ..., n^k}` through umbral weights of connected
//! loop-and-path graphs.
//!
//! A term of `(sum x_i - sum x_i x_{i+1})^r` is a multigraph on `[n]` with a
//! loop at `i` for each `x_i` chosen and an edge `i -- i+1` for each
//! `-x_i x_{i+1}`. Restricting to `k`-regular graphs and replacing the
//! multinomial numerator `r!` by `t^r` gives a weight whose connected pieces
//! multiply. Summing connected weights into `F(x, t)`, inverting `1 - F` and
//! applying `t^m -> m!` recovers the class counts.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use serde::{Deserialize, Serialize};

use super::{phi, TPoly, TruncatedSeries};
use crate::combinat::factorial;
use crate::error::{Error, Result};
use crate::limits::Limits;

/// A connected `k`-regular graph on `[m]` whose edges are loops or join
/// neighbours, described by its edge and loop multiplicities.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelProfile {
    pub k: u32,
    /// Multiplicity of `i -- i+1`, for `i = 1..m-1`; all at least one.
    pub edges: Vec<u32>,
    /// Loops at each vertex.
    pub loops: Vec<u32>,
}

impl LevelProfile {
    pub fn vertices(&self) -> usize {
        self.loops.len()
    }

    /// Number of non-loop edges.
    pub fn nu(&self) -> u32 {
        self.edges.iter().sum()
    }

    /// Total number of edges, loops included.
    pub fn r(&self) -> u32 {
        self.loops.iter().sum::<u32>() + self.nu()
    }

    /// `(-1)^nu t^r / (prod loops! * prod edges!)`.
    pub fn weight(&self) -> TPoly {
        let den: BigUint = self
            .loops
            .iter()
            .chain(&self.edges)
            .map(|&c| factorial(c as u64))
            .product();
        let sign = if self.nu().is_multiple_of(2) { 1 } else { -1 };
        TPoly::monomial(
            BigRational::new(BigInt::from(sign), den.into()),
            self.r() as usize,
        )
    }
}

/// Every level profile with `m` vertices and degree `k`.
pub fn level_profiles(m: usize, k: u32) -> Vec<LevelProfile> {
    let mut out = Vec::new();
    if m == 0 {
        return out;
    }
    let mut edges = Vec::with_capacity(m - 1);
    fn go(m: usize, k: u32, edges: &mut Vec<u32>, out: &mut Vec<LevelProfile>) {
        if edges.len() == m - 1 {
            let loops = (0..m)
                .map(|i| {
                    let left = if i > 0 { edges[i - 1] } else { 0 };
                    let right = edges.get(i).copied().unwrap_or(0);
                    k - left - right
                })
                .collect();
            out.push(LevelProfile {
                k,
                edges: edges.clone(),
                loops,
            });
            return;
        }
        let prev = edges.last().copied().unwrap_or(0);
        for e in 1..=k.saturating_sub(prev) {
            edges.push(e);
            go(m, k, edges, out);
            edges.pop();
        }
    }
    go(m, k, &mut edges, &mut out);
    out
}

/// Sum of connected weights by listing every profile.
pub fn c_poly_by_profiles(m: usize, k: u32) -> TPoly {
    level_profiles(m, k)
        .iter()
        .fold(TPoly::zero(), |acc, p| acc + p.weight())
}

fn vertex_factor(mu: u32, e: u32) -> TPoly {
    let den = factorial(mu as u64) * factorial(e as u64);
    let sign = if e.is_multiple_of(2) { 1 } else { -1 };
    TPoly::monomial(
        BigRational::new(BigInt::from(sign), den.into()),
        (mu + e) as usize,
    )
}

/// Sum of connected weights with `m` vertices, by a transfer matrix over the
/// multiplicity of the edge leaving each vertex.
pub fn c_poly(m: usize, k: u32, limits: &Limits) -> Result<TPoly> {
    if m == 0 || k == 0 {
        return Err(Error::InvalidArgument("m and k must be at least 1".into()));
    }
    let mk = m.saturating_mul(k as usize);
    if mk > limits.umbral_mk {
        return Err(Error::guard("m*k", limits.umbral_mk, mk));
    }
    let k_us = k as usize;
    // state[e] = total weight of the vertices so far, with e edges to the next vertex
    let mut state = vec![TPoly::zero(); k_us + 1];
    state[0] = TPoly::one();
    for vertex in 1..=m {
        let last = vertex == m;
        let mut next = vec![TPoly::zero(); k_us + 1];
        for (e_in, w) in state.iter().enumerate() {
            if w.is_zero() {
                continue;
            }
            let budget = k - e_in as u32;
            let outs = if last { 0..=0 } else { 1..=budget };
            for e_out in outs {
                if e_out > budget {
                    continue;
                }
                let mu = budget - e_out;
                let contrib = w * &vertex_factor(mu, e_out);
                next[e_out as usize] = std::mem::take(&mut next[e_out as usize]) + contrib;
            }
        }
        state = next;
    }
    Ok(std::mem::take(&mut state[0]))
}

/// `F(x, t) = sum_{m=1}^{order} c(m) x^m` as a series in `x` over `t`-polynomials.
pub fn connected_series(k: u32, order: usize, limits: &Limits) -> Result<TruncatedSeries<TPoly>> {
    let mut f = TruncatedSeries::zero(&["x"], &[order as u32]);
    for m in 1..=order {
        f.add_term(vec![m as u32], c_poly(m, k, limits)?);
    }
    Ok(f)
}

/// `G(x, t) = 1 / (1 - F(x, t))`.
pub fn all_graphs_series(k: u32, order: usize, limits: &Limits) -> Result<TruncatedSeries<TPoly>> {
    TruncatedSeries::geometric_inverse(&connected_series(k, order, limits)?)
}

/// Number of classes of words with content `{1^k, ..., n^k}` for `n = 0..=order`.
pub fn g_umbral_series(k: u32, order: usize, limits: &Limits) -> Result<Vec<BigUint>> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be at least 1".into()));
    }
    if order > limits.umbral_order {
        return Err(Error::guard(
            "umbral truncation order",
            limits.umbral_order,
            order,
        ));
    }
    let g = all_graphs_series(k, order, limits)?;
    g.to_vec()
        .iter()
        .enumerate()
        .map(|(n, p)| {
            let v = phi(p);
            if !v.is_integer() || v.is_negative() {
                return Err(Error::Inconsistent(format!(
                    "umbral coefficient of x^{n} is {v}, not a nonnegative integer"
                )));
            }
            Ok(v.to_integer().to_biguint().expect("checked nonnegative"))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn tp(terms: &[(i64, i64, usize)]) -> TPoly {
        terms.iter().fold(TPoly::zero(), |acc, &(n, d, p)| {
            acc + TPoly::monomial(q(n, d), p)
        })
    }

    #[test]
    fn c_poly_examples() {
        let l = Limits::default();
        assert_eq!(c_poly(1, 2, &l).unwrap(), tp(&[(1, 2, 2)]));
        assert_eq!(c_poly(2, 2, &l).unwrap(), tp(&[(1, 2, 2), (-1, 1, 3)]));
        assert_eq!(c_poly(3, 2, &l).unwrap(), tp(&[(1, 1, 4)]));
        assert_eq!(c_poly(4, 2, &l).unwrap(), tp(&[(-1, 1, 5)]));
        assert!(c_poly(3, 1, &l).unwrap().is_zero());
        assert!(c_poly(101, 2, &l).unwrap_err().is_guard());
    }

    #[test]
    fn transfer_matrix_matches_profile_listing() {
        let l = Limits::default();
        for k in 1..=4 {
            for m in 1..=7 {
                assert_eq!(
                    c_poly(m, k, &l).unwrap(),
                    c_poly_by_profiles(m, k),
                    "m={m} k={k}"
                );
            }
        }
    }

    #[test]
    fn profiles_are_regular_and_connected() {
        for p in level_profiles(5, 3) {
            assert!(p.edges.iter().all(|&e| e >= 1));
            for i in 0..p.vertices() {
                let left = if i > 0 { p.edges[i - 1] } else { 0 };
                let right = p.edges.get(i).copied().unwrap_or(0);
                assert_eq!(p.loops[i] + left + right, 3);
            }
            assert_eq!(p.r(), 3 * 5 - p.nu());
        }
    }

    #[test]
    fn k1_reproduces_class_counts() {
        let got = g_umbral_series(1, 8, &Limits::default()).unwrap();
        let want: Vec<BigUint> = [1u32, 1, 1, 2, 8, 42, 258, 1824, 14664]
            .map(BigUint::from)
            .to_vec();
        assert_eq!(got, want);
    }

    #[test]
    fn k2_small_values() {
        let got = g_umbral_series(2, 3, &Limits::default()).unwrap();
        assert_eq!(got[0], BigUint::one());
        assert_eq!(got[1], BigUint::one());
        // all six words of {1,1,2,2} are connected by 1-2 swaps
        assert_eq!(got[2], BigUint::one());
        assert_eq!(got[3], BigUint::from(6u32));
    }
}
