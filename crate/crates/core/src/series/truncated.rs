use std::collections::BTreeMap;
use std::fmt::Display;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::Coefficient;
use crate::error::{Error, Result};

/// A multivariate power series truncated by per-variable exponent caps.
///
/// Only nonzero coefficients are stored and no stored exponent exceeds its
/// cap. Products drop over-cap terms, so every coefficient within the caps is
/// exact.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedSeries<C> {
    vars: Vec<String>,
    caps: Vec<u32>,
    terms: BTreeMap<Vec<u32>, C>,
}

impl<C: Coefficient> TruncatedSeries<C> {
    pub fn zero(vars: &[&str], caps: &[u32]) -> Self {
        assert_eq!(vars.len(), caps.len(), "one cap per variable");
        TruncatedSeries {
            vars: vars.iter().map(|s| s.to_string()).collect(),
            caps: caps.to_vec(),
            terms: BTreeMap::new(),
        }
    }

    /// Same variables and caps as `self`, no terms.
    pub fn zero_like(&self) -> Self {
        TruncatedSeries {
            vars: self.vars.clone(),
            caps: self.caps.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant_like(&self, c: C) -> Self {
        let mut s = self.zero_like();
        s.add_term(vec![0; self.caps.len()], c);
        s
    }

    pub fn one_like(&self) -> Self {
        self.constant_like(C::one())
    }

    /// A univariate series from its leading coefficients (extra ones are dropped).
    pub fn univariate(var: &str, cap: u32, coeffs: impl IntoIterator<Item = C>) -> Self {
        let mut s = Self::zero(&[var], &[cap]);
        for (e, c) in coeffs.into_iter().enumerate() {
            s.add_term(vec![e as u32], c);
        }
        s
    }

    /// A series from explicit `(exponents, coefficient)` terms.
    pub fn from_terms(
        vars: &[&str],
        caps: &[u32],
        terms: impl IntoIterator<Item = (Vec<u32>, C)>,
    ) -> Self {
        let mut s = Self::zero(vars, caps);
        for (e, c) in terms {
            assert_eq!(e.len(), caps.len(), "exponent vector length");
            s.add_term(e, c);
        }
        s
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn caps(&self) -> &[u32] {
        &self.caps
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &C)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn within_caps(&self, e: &[u32]) -> bool {
        e.iter().zip(&self.caps).all(|(a, c)| a <= c)
    }

    /// Adds `c * x^e`, ignoring terms beyond the caps.
    pub fn add_term(&mut self, e: Vec<u32>, c: C) {
        if c.is_zero() || !self.within_caps(&e) {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().clone() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn coefficient(&self, e: &[u32]) -> C {
        self.terms.get(e).cloned().unwrap_or_else(C::zero)
    }

    /// Coefficients of a univariate series for exponents `0..=cap`.
    pub fn to_vec(&self) -> Vec<C> {
        assert_eq!(self.caps.len(), 1, "to_vec needs a univariate series");
        (0..=self.caps[0]).map(|e| self.coefficient(&[e])).collect()
    }

    fn check_compatible(&self, other: &Self) {
        assert_eq!(self.vars, other.vars, "series over different variables");
        assert_eq!(self.caps, other.caps, "series with different caps");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_compatible(other);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = self.zero_like();
        out.terms = self
            .terms
            .iter()
            .map(|(e, c)| (e.clone(), -c.clone()))
            .collect();
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, k: &C) -> Self {
        let mut out = self.zero_like();
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c.clone() * k.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_compatible(other);
        let mut out = self.zero_like();
        let mut buf = vec![0u32; self.caps.len()];
        for (ea, ca) in &self.terms {
            'inner: for (eb, cb) in &other.terms {
                for (k, slot) in buf.iter_mut().enumerate() {
                    *slot = ea[k] + eb[k];
                    if *slot > self.caps[k] {
                        continue 'inner;
                    }
                }
                out.add_term(buf.clone(), ca.clone() * cb.clone());
            }
        }
        out
    }

    pub fn pow(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = self.one_like();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Largest total degree representable under the caps.
    pub fn max_total_degree(&self) -> u64 {
        self.caps.iter().map(|&c| c as u64).sum()
    }

    /// `1 / (1 - a)` for a series `a` with zero constant term, by iterated
    /// geometric summation `s <- 1 + a s` up to the total-degree cap.
    pub fn geometric_inverse(a: &Self) -> Result<Self> {
        let zero = vec![0u32; a.caps.len()];
        if !a.coefficient(&zero).is_zero() {
            return Err(Error::InvalidArgument(
                "geometric sum needs a zero constant term".into(),
            ));
        }
        let one = a.one_like();
        let mut s = one.clone();
        for _ in 0..a.max_total_degree() {
            let next = one.add(&a.mul(&s));
            if next == s {
                break;
            }
            s = next;
        }
        Ok(s)
    }

    /// Multiplicative inverse; the constant term must be a unit.
    pub fn inverse(&self) -> Result<Self> {
        let zero = vec![0u32; self.caps.len()];
        let c0 = self.coefficient(&zero);
        let c0_inv = c0.try_inverse().ok_or_else(|| {
            Error::InvalidArgument(format!("constant term {c0:?} is not invertible"))
        })?;
        // 1/B = c^{-1} / (1 - (1 - c^{-1} B))
        let a = self.one_like().sub(&self.scale(&c0_inv));
        Ok(Self::geometric_inverse(&a)?.scale(&c0_inv))
    }

    /// `self / den`; the constant term of `den` must be a unit.
    pub fn div(&self, den: &Self) -> Result<Self> {
        Ok(self.mul(&den.inverse()?))
    }

    /// Applies `f` to every coefficient, dropping those that become zero.
    pub fn map<D: Coefficient>(&self, mut f: impl FnMut(&C) -> D) -> TruncatedSeries<D> {
        let mut out = TruncatedSeries::<D> {
            vars: self.vars.clone(),
            caps: self.caps.clone(),
            terms: BTreeMap::new(),
        };
        for (e, c) in &self.terms {
            out.add_term(e.clone(), f(c));
        }
        out
    }

    pub fn try_map<D: Coefficient>(
        &self,
        mut f: impl FnMut(&C) -> Result<D>,
    ) -> Result<TruncatedSeries<D>> {
        let mut out = TruncatedSeries::<D> {
            vars: self.vars.clone(),
            caps: self.caps.clone(),
            terms: BTreeMap::new(),
        };
        for (e, c) in &self.terms {
            out.add_term(e.clone(), f(c)?);
        }
        Ok(out)
    }
}

/// One nonzero term, with the coefficient as a decimal string.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesRecord {
    pub exponents: Vec<u32>,
    pub coefficient: String,
}

#[derive(Serialize, Deserialize)]
struct SeriesJson {
    variables: Vec<String>,
    caps: Vec<u32>,
    terms: Vec<SeriesRecord>,
}

impl<C: Coefficient + Display> TruncatedSeries<C> {
    pub fn records(&self) -> Vec<SeriesRecord> {
        self.terms
            .iter()
            .map(|(e, c)| SeriesRecord {
                exponents: e.clone(),
                coefficient: c.to_string(),
            })
            .collect()
    }
}

impl<C: Coefficient + Display> Serialize for TruncatedSeries<C> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SeriesJson {
            variables: self.vars.clone(),
            caps: self.caps.clone(),
            terms: self.records(),
        }
        .serialize(s)
    }
}

impl<'de, C> Deserialize<'de> for TruncatedSeries<C>
where
    C: Coefficient + FromStr,
    C::Err: Display,
{
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = SeriesJson::deserialize(d)?;
        if raw.variables.len() != raw.caps.len() {
            return Err(D::Error::custom("one cap per variable"));
        }
        let mut s = TruncatedSeries {
            vars: raw.variables,
            caps: raw.caps,
            terms: BTreeMap::new(),
        };
        for r in raw.terms {
            if r.exponents.len() != s.caps.len() || !s.within_caps(&r.exponents) {
                return Err(D::Error::custom("term outside the declared caps"));
            }
            let c = r.coefficient.parse::<C>().map_err(D::Error::custom)?;
            s.add_term(r.exponents, c);
        }
        Ok(s)
    }
}
