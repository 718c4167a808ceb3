//! Browser bindings. Every export returns a JSON (or SVG) string, or an
//! error message the page shows as is.

use std::fmt::Write as _;

use serde_json::json;
use wasm_bindgen::prelude::*;

use salient::equivalence::{classes_of_sn, f_inclusion_exclusion, Relation};
use salient::poset::{
    extension_count, flag_vector, lattice_from_gamma, q_from_gamma, GammaWord, GradedPoset,
};
use salient::series::g_umbral_series;
use salient::Limits;

/// Largest `n` the page will partition; 7! words is still instant.
const MAX_DEMO_N: usize = 7;
const MAX_DEMO_GAMMA: usize = 14;
const MAX_DEMO_ORDER: usize = 12;

fn err(e: impl ToString) -> String {
    e.to_string()
}

/// Classes of `S_n` under swaps of neighbours differing by one (or by at
/// least `j` when `j >= 2`), with members for classes of size at most 24.
#[wasm_bindgen]
pub fn sn_classes(n: usize, j: u32) -> Result<String, String> {
    if n > MAX_DEMO_N {
        return Err(format!("n is capped at {MAX_DEMO_N} in the browser"));
    }
    let relation = if j >= 2 {
        Relation::AtLeast(j)
    } else {
        Relation::Consecutive
    };
    let classes = classes_of_sn(n, relation, &Limits::default()).map_err(err)?;
    let list: Vec<_> = classes
        .iter()
        .map(|c| {
            let mut v = json!({ "representative": c.representative, "size": c.size.to_string() });
            if c.members.len() <= 24 {
                v["members"] = json!(c.members);
            }
            v
        })
        .collect();
    let formula = (relation == Relation::Consecutive).then(|| f_inclusion_exclusion(n).to_string());
    Ok(json!({ "n": n, "relation": relation.to_string(), "count": classes.len(), "formula": formula, "classes": list })
        .to_string())
}

/// The lattice `L(gamma)`: Hasse diagram, flag h-vector and extension count.
#[wasm_bindgen]
pub fn gamma_lattice(gamma: &str) -> Result<String, String> {
    let g: GammaWord = gamma.parse().map_err(err)?;
    if g.rank() > MAX_DEMO_GAMMA {
        return Err(format!(
            "gamma words are capped at {MAX_DEMO_GAMMA} letters in the browser"
        ));
    }
    let l = lattice_from_gamma(&g).map_err(err)?;
    let fv = flag_vector(&l).map_err(err)?;
    let support: Vec<_> = fv
        .support()
        .into_iter()
        .map(|s| s.iter().collect::<Vec<_>>())
        .collect();
    let extensions =
        extension_count(&q_from_gamma(&g).map_err(err)?, &Limits::default()).map_err(err)?;
    Ok(json!({
        "gamma": g,
        "rank": l.rank(),
        "elements": l.len(),
        "multiplicity_free": fv.is_multiplicity_free(),
        "support": support,
        "extensions": extensions.to_string(),
        "svg": hasse_svg(&l),
    })
    .to_string())
}

/// Class counts of the words `1^k 2^k ... n^k` for `n = 0..=upto`.
#[wasm_bindgen]
pub fn umbral_counts(k: u32, upto: usize) -> Result<String, String> {
    if upto > MAX_DEMO_ORDER {
        return Err(format!("the browser stops at n = {MAX_DEMO_ORDER}"));
    }
    let counts = g_umbral_series(k, upto, &Limits::default()).map_err(err)?;
    let strings: Vec<String> = counts.iter().map(ToString::to_string).collect();
    Ok(json!(strings).to_string())
}

/// Hasse diagram with rank 0 at the bottom; elements of a rank spread evenly.
pub fn hasse_svg(p: &GradedPoset) -> String {
    const DX: f64 = 70.0;
    const DY: f64 = 56.0;
    const PAD: f64 = 28.0;
    let widest = (0..=p.rank())
        .map(|r| p.elements_of_rank(r).len())
        .max()
        .unwrap_or(1);
    let width = PAD * 2.0 + DX * (widest.max(1) - 1) as f64;
    let height = PAD * 2.0 + DY * p.rank() as f64;
    let pos = |x: usize| {
        let level = p.elements_of_rank(p.rank_of(x));
        let i = level
            .iter()
            .position(|&y| y == x)
            .expect("element is in its rank");
        let offset = (width - DX * (level.len() - 1) as f64) / 2.0;
        (
            offset + DX * i as f64,
            height - PAD - DY * p.rank_of(x) as f64,
        )
    };
    let mut s = format!(
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {width} {height}" width="{width}" height="{height}">"#
    );
    for &(a, b) in p.covers() {
        let ((x1, y1), (x2, y2)) = (pos(a), pos(b));
        let _ = write!(
            s,
            r##"<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="#555"/>"##
        );
    }
    for x in 0..p.len() {
        let (cx, cy) = pos(x);
        let _ = write!(
            s,
            r##"<circle cx="{cx}" cy="{cy}" r="5" fill="#2a6fdb"><title>{}</title></circle>"##,
            p.name(x)
        );
    }
    s.push_str("</svg>");
    s
}
