//! Exact truncated power series and the generating functions built on them.

mod cartier_foata;
mod coeff;
mod rational;
mod tpoly;
mod truncated;
mod umbral;

pub use cartier_foata::{
    cartier_foata_series, cf_series, clique_polynomial, f4_coefficient, f4_t_coefficient,
    multiset_count_cf,
};
pub use coeff::Coefficient;
pub use rational::{expand_rational, expand_rational_bivariate, expand_series, poly_product};
pub use tpoly::{phi, TPoly};
pub use truncated::{SeriesRecord, TruncatedSeries};
pub use umbral::{
    all_graphs_series, c_poly, c_poly_by_profiles, connected_series, g_umbral_series,
    level_profiles, LevelProfile,
};
