use num_bigint::BigInt;
use num_rational::BigRational;

use super::TruncatedSeries;
use crate::error::{Error, Result};

fn rat(c: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(c))
}

/// Expands `numerator / denominator` through `x^order`. Both are given by
/// coefficient lists, lowest degree first.
pub fn expand_rational(
    numerator: &[i64],
    denominator: &[i64],
    order: u32,
) -> Result<Vec<BigRational>> {
    let num = TruncatedSeries::univariate("x", order, numerator.iter().map(|&c| rat(c)));
    let den = TruncatedSeries::univariate("x", order, denominator.iter().map(|&c| rat(c)));
    Ok(expand_series(&num, &den)?.to_vec())
}

/// Bivariate version; terms are `((a, b), coefficient)` for `x^a y^b`.
pub fn expand_rational_bivariate(
    numerator: &[((u32, u32), i64)],
    denominator: &[((u32, u32), i64)],
    caps: (u32, u32),
) -> Result<TruncatedSeries<BigRational>> {
    let build = |terms: &[((u32, u32), i64)]| {
        TruncatedSeries::from_terms(
            &["x", "y"],
            &[caps.0, caps.1],
            terms.iter().map(|&((a, b), c)| (vec![a, b], rat(c))),
        )
    };
    expand_series(&build(numerator), &build(denominator))
}

pub fn expand_series(
    num: &TruncatedSeries<BigRational>,
    den: &TruncatedSeries<BigRational>,
) -> Result<TruncatedSeries<BigRational>> {
    let zero = vec![0; den.caps().len()];
    if num_traits::Zero::is_zero(&den.coefficient(&zero)) {
        return Err(Error::InvalidArgument(
            "denominator has zero constant term".into(),
        ));
    }
    num.div(den)
}

/// Multiplies out a product of univariate polynomials given as coefficient lists.
pub fn poly_product(factors: &[&[i64]]) -> Vec<i64> {
    factors.iter().fold(vec![1], |acc, f| {
        let mut out = vec![0; acc.len() + f.len() - 1];
        for (i, a) in acc.iter().enumerate() {
            for (j, b) in f.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        out
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[BigRational]) -> Vec<i64> {
        v.iter()
            .map(|c| {
                assert!(c.is_integer());
                i64::try_from(c.to_integer()).unwrap()
            })
            .collect()
    }

    #[test]
    fn examples() {
        let den = poly_product(&[&[1, -1], &[1, -2, -1]]);
        assert_eq!(
            ints(&expand_rational(&[1, -2], &den, 5).unwrap()),
            [1, 1, 2, 4, 9, 21]
        );
        assert_eq!(
            ints(&expand_rational(&[1], &[1, -1], 3).unwrap()),
            [1, 1, 1, 1]
        );
        let num = poly_product(&[&[0, 1], &[1, -1], &[1, -3]]);
        assert_eq!(
            ints(&expand_rational(&num, &[1, -6, 9, -3], 8).unwrap()),
            [0, 1, 2, 6, 21, 78, 297, 1143, 4419]
        );
        assert!(expand_rational(&[1], &[0, 1], 3).is_err());
    }
}
