//! Named verification suites. Each check recomputes a claim from scratch by
//! at least two independent routes and compares against frozen sequences.
//! The CLI `verify` subcommand and the `acceptance` test target both run
//! these.

use std::collections::{BTreeSet, HashSet};
use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::combinat::fibonacci;
use crate::equivalence::{
    class_of, class_size, classes_of_sn, count_classes_brute, count_singletons,
    f_inclusion_exclusion, f_j_count, f_series, multiset_class_partition, singleton_series,
    CountMethod, Relation,
};
use crate::perm::{descent_set, is_salient, sparse_subsets, MultisetSpec, RankSet, Word};
use crate::poset::{
    all_bounded_graded_posets, all_posets, are_isomorphic, beta_by_descents,
    distributive_mf_posets, extension_count, flag_vector, generate_mf_posets, ideal_counts,
    ideals_lattice, linear_extensions, mf_posets_by_levels, natural_posets, proliferate,
    q_from_commuting_word, q_from_gamma, random_graded_poset, stretch, stretch_reduce,
    truncate_above, truncate_below, FlagVector, GammaWord, MfBound, NaturalPoset,
};
use crate::series::{
    cf_series, connected_series, expand_rational, expand_rational_bivariate, f4_coefficient,
    f4_t_coefficient, g_umbral_series, multiset_count_cf, poly_product, TPoly,
};
use crate::{Error, Limits, Result};

/// Outcome of one check.
#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub id: u32,
    pub name: &'static str,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    pub seconds: f64,
}

impl std::fmt::Display for CheckReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "[{}] {:>2} {:<22} {:.2}s  {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.seconds,
            self.detail
        )
    }
}

type Outcome = std::result::Result<String, String>;

/// A named check with an optional time budget.
pub struct Check {
    pub id: u32,
    pub name: &'static str,
    pub title: &'static str,
    budget: Option<Duration>,
    run: fn(&Limits) -> Outcome,
}

impl Check {
    pub fn run(&self, limits: &Limits) -> CheckReport {
        let start = Instant::now();
        let outcome = (self.run)(limits);
        let elapsed = start.elapsed();
        let (mut passed, mut detail) = match outcome {
            Ok(d) => (true, d),
            Err(d) => (false, d),
        };
        if let Some(budget) = self.budget {
            if elapsed > budget {
                passed = false;
                detail = format!(
                    "{detail}; took {:.1}s, budget {}s",
                    elapsed.as_secs_f64(),
                    budget.as_secs()
                );
            }
        }
        CheckReport {
            id: self.id,
            name: self.name,
            title: self.title,
            passed,
            detail,
            seconds: elapsed.as_secs_f64(),
        }
    }
}

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn e2s(e: Error) -> String {
    e.to_string()
}

fn big(v: &[u64]) -> Vec<BigUint> {
    v.iter().map(|&x| BigUint::from(x)).collect()
}

fn join<T: std::fmt::Display>(v: &[T]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

const F_SEQUENCE: [u64; 9] = [1, 1, 1, 2, 8, 42, 258, 1824, 14664];
const SINGLETONS: [u64; 9] = [1, 1, 0, 0, 2, 14, 90, 646, 5242];
const DISTRIBUTIVE_MF: [u64; 5] = [1, 2, 4, 9, 21];
const MF_BY_RANK: [u64; 8] = [1, 2, 6, 21, 78, 297, 1143, 4419];
const MF_BY_ELEMENTS: [u64; 9] = [1, 1, 2, 3, 7, 12, 28, 51, 117];

fn class_count_agreement(limits: &Limits) -> Outcome {
    let series = f_series(8);
    for n in 0..=8 {
        let brute = count_classes_brute(n, limits).map_err(e2s)?;
        let ie = f_inclusion_exclusion(n);
        let want = BigUint::from(F_SEQUENCE[n]);
        ensure!(
            brute == want && ie == want && series[n] == want,
            "n={n}: brute {brute}, inclusion-exclusion {ie}, series {}, expected {want}",
            series[n]
        );
    }
    Ok(format!("f(0..8) = {}", join(&F_SEQUENCE)))
}

fn salient_canonical(limits: &Limits) -> Outcome {
    let mut classes = 0;
    for n in 0..=7 {
        for class in classes_of_sn(n, Relation::Consecutive, limits).map_err(e2s)? {
            let salient: Vec<&Word> = class
                .members
                .iter()
                .filter(|w| is_salient(w).unwrap_or(false))
                .collect();
            ensure!(
                salient.len() == 1,
                "class of {} has {} salient members",
                class.representative,
                salient.len()
            );
            ensure!(
                *salient[0] == class.members[0],
                "salient member {} of a class is not its minimum {}",
                salient[0],
                class.members[0]
            );
            classes += 1;
        }
    }
    Ok(format!(
        "{classes} classes for n <= 7, each with one salient member = its minimum"
    ))
}

fn fibonacci_sizes(limits: &Limits) -> Outcome {
    let mut words = 0;
    for n in 0..=7 {
        for class in classes_of_sn(n, Relation::Consecutive, limits).map_err(e2s)? {
            for w in &class.members {
                let by_product = class_size(w, limits).map_err(e2s)?;
                ensure!(
                    by_product == class.size,
                    "class_size({w}) = {by_product}, orbit has {}",
                    class.size
                );
                words += 1;
            }
        }
    }
    for n in 1..=12 {
        let id = Word::identity(n);
        let want = fibonacci(n as u64 + 1);
        let by_product = class_size(&id, limits).map_err(e2s)?;
        ensure!(
            by_product == want,
            "product formula for id_{n} gives {by_product}, want F_{} = {want}",
            n + 1
        );
        if n <= 10 {
            let bfs = class_of(&id, Relation::Consecutive, limits)
                .map_err(e2s)?
                .size;
            ensure!(
                bfs == want,
                "BFS class of id_{n} has {bfs} members, want {want}"
            );
        }
    }
    Ok(format!(
        "{words} words for n <= 7; |<id_n>| = F_(n+1) for n <= 12 (BFS to 10)"
    ))
}

fn singletons(limits: &Limits) -> Outcome {
    let series = singleton_series(8);
    for n in 0..=8 {
        let brute = count_singletons(n, limits).map_err(e2s)?;
        let want = BigUint::from(SINGLETONS[n]);
        ensure!(
            brute == want && series[n] == want,
            "n={n}: brute {brute}, series {}, expected {want}",
            series[n]
        );
    }
    Ok(format!("singletons(0..8) = {}", join(&SINGLETONS)))
}

fn at_least_j(limits: &Limits) -> Outcome {
    for n in 0..=7 {
        for j in 2..=5 {
            let formula = f_j_count(n, j, CountMethod::Formula, limits).map_err(e2s)?;
            let brute = f_j_count(n, j, CountMethod::Brute, limits).map_err(e2s)?;
            ensure!(
                formula == brute,
                "n={n}, j={j}: formula {formula}, brute {brute}"
            );
        }
    }
    let classes = classes_of_sn(3, Relation::AtLeast(2), limits).map_err(e2s)?;
    let got: BTreeSet<Vec<String>> = classes
        .iter()
        .map(|c| c.members.iter().map(|w| w.to_string()).collect())
        .collect();
    let want: BTreeSet<Vec<String>> = [
        vec!["123"],
        vec!["321"],
        vec!["132", "312"],
        vec!["213", "231"],
    ]
    .iter()
    .map(|c| c.iter().map(|s| s.to_string()).collect())
    .collect();
    ensure!(got == want, "orbits of S_3 for j=2: {got:?}");
    Ok("formula = brute for n <= 7, j = 2..5; S_3 orbits {123} {321} {132,312} {213,231}".into())
}

fn multiset_cartier_foata(limits: &Limits) -> Outcome {
    let mut specs = 0;
    let mut stack: Vec<Vec<usize>> = vec![Vec::new()];
    while let Some(rs) = stack.pop() {
        let total: usize = rs.iter().sum();
        if rs.len() < 5 {
            for r in 0..=8 - total {
                let mut next = rs.clone();
                next.push(r);
                stack.push(next);
            }
            continue;
        }
        let spec = MultisetSpec::from_multiplicities(&rs);
        let by_series = multiset_count_cf(&spec, limits).map_err(e2s)?;
        let classes = multiset_class_partition(&spec, limits).map_err(e2s)?;
        ensure!(
            by_series == BigUint::from(classes.len()),
            "{spec}: series gives {by_series}, BFS gives {} classes",
            classes.len()
        );
        specs += 1;
    }
    let spec: MultisetSpec = "1:2,2:1,3:2".parse().map_err(e2s)?;
    let classes = multiset_class_partition(&spec, limits).map_err(e2s)?;
    ensure!(
        classes.len() == 6 && classes.iter().all(|c| c.size == BigUint::from(5u32)),
        "{{1^2,2,3^2}}: sizes {:?}",
        classes
            .iter()
            .map(|c| c.size.to_string())
            .collect::<Vec<_>>()
    );
    Ok(format!(
        "{specs} multiplicity vectors over 5 letters, total <= 8; {{1^2,2,3^2}} has 6 classes of 5"
    ))
}

fn exponent_vectors(max_sum: u32) -> Vec<[u32; 4]> {
    let mut out = Vec::new();
    for h in 0..=max_sum {
        for i in 0..=max_sum - h {
            for j in 0..=max_sum - h - i {
                for k in 0..=max_sum - h - i - j {
                    out.push([h, i, j, k]);
                }
            }
        }
    }
    out
}

fn four_letter_closed_forms(_: &Limits) -> Outcome {
    let vectors = exponent_vectors(8);
    for e in &vectors {
        let series = cf_series(4, e).map_err(e2s)?;
        let c = series.coefficient(e);
        let closed = BigInt::from(f4_coefficient(
            e[0] as u64,
            e[1] as u64,
            e[2] as u64,
            e[3] as u64,
        ));
        ensure!(
            c == closed,
            "exponents {e:?}: series {c}, closed form {closed}"
        );
    }
    let small = exponent_vectors(6);
    for e in &small {
        let series = cf_series(4, e).map_err(e2s)?;
        for t in 0..=3u32 {
            let powered = BigRational::from_integer(series.pow(t).coefficient(e));
            let closed =
                f4_t_coefficient(e[0] as u64, e[1] as u64, e[2] as u64, e[3] as u64, t as u64);
            ensure!(
                powered == closed,
                "exponents {e:?}, t={t}: power {powered}, closed form {closed}"
            );
        }
    }
    Ok(format!(
        "{} vectors with sum <= 8; {} vectors x t=0..3 with sum <= 6",
        vectors.len(),
        small.len()
    ))
}

fn umbral(limits: &Limits) -> Outcome {
    let g1 = g_umbral_series(1, 8, limits).map_err(e2s)?;
    ensure!(g1 == big(&F_SEQUENCE), "k=1: {}", join(&g1));
    let g2 = g_umbral_series(2, 4, limits).map_err(e2s)?;
    for (n, value) in g2.iter().enumerate() {
        let spec = MultisetSpec::uniform(n, 2);
        let brute = BigUint::from(multiset_class_partition(&spec, limits).map_err(e2s)?.len());
        let cf = multiset_count_cf(&spec, limits).map_err(e2s)?;
        ensure!(
            *value == brute && brute == cf,
            "k=2, n={n}: umbral {value}, BFS {brute}, series {cf}"
        );
    }
    ensure!(
        g2 == big(&[1, 1, 1, 6, 216]),
        "k=2 values {} differ from the frozen oracle 1,1,1,6,216",
        join(&g2)
    );
    let f = connected_series(2, 4, limits).map_err(e2s)?;
    let q = |n: i64, d: i64| BigRational::new(n.into(), d.into());
    let want = [
        TPoly::monomial(q(1, 2), 2),
        TPoly::monomial(q(1, 2), 2) + TPoly::monomial(q(-1, 1), 3),
        TPoly::monomial(q(1, 1), 4),
        TPoly::monomial(q(-1, 1), 5),
    ];
    for (m, w) in want.iter().enumerate() {
        let got = f.coefficient(&[m as u32 + 1]);
        ensure!(
            got == *w,
            "k=2: coefficient of x^{} is {got}, expected {w}",
            m + 1
        );
    }
    Ok(format!(
        "k=1 gives {}; k=2 gives {} (= BFS = series); F(x,t) = 1/2 t^2 x + (1/2 t^2 - t^3) x^2 + t^4 x^3 - t^5 x^4",
        join(&g1),
        join(&g2)
    ))
}

fn check_flag(q: &NaturalPoset, limits: &Limits) -> Outcome {
    let j = ideals_lattice(q, limits).map_err(e2s)?;
    let fv = flag_vector(&j).map_err(e2s)?;
    ensure!(
        fv.mobius_consistent(),
        "Mobius inversion fails for {:?}",
        q.relations()
    );
    let by_descents = beta_by_descents(q, limits).map_err(e2s)?;
    ensure!(
        fv.beta_values() == by_descents.as_slice(),
        "descent counts differ from beta for {:?}",
        q.relations()
    );
    Ok(String::new())
}

fn flag_core(limits: &Limits) -> Outcome {
    let mut count = 0;
    for n in 0..=7 {
        for q in natural_posets(n, limits).map_err(e2s)? {
            check_flag(&q, limits)?;
            count += 1;
        }
    }
    for n in 1..=8 {
        check_flag(&q_from_commuting_word(n).map_err(e2s)?, limits)?;
    }
    Ok(format!(
        "{count} naturally labelled posets (n <= 7) and Q_1..Q_8"
    ))
}

fn distributive(limits: &Limits) -> Outcome {
    let mut counts = Vec::new();
    for n in 1..=7 {
        let mut qualifying = 0u64;
        for q in all_posets(n, limits).map_err(e2s)? {
            let a = flag_vector(&ideals_lattice(&q, limits).map_err(e2s)?)
                .map_err(e2s)?
                .is_multiplicity_free();
            let b = ideal_counts(&q, limits)
                .map_err(e2s)?
                .iter()
                .all(|&c| c <= 2);
            let c = q.is_two_plus_two_free() && q.is_width_le_two();
            ensure!(
                a == b && b == c,
                "conditions disagree on {:?}: mf {a}, ideals {b}, forbidden {c}",
                q.relations()
            );
            qualifying += a as u64;
        }
        let structural = distributive_mf_posets(n, limits).map_err(e2s)?.len() as u64;
        ensure!(
            structural == qualifying,
            "n={n}: structural family {structural}, exhaustive {qualifying}"
        );
        counts.push(qualifying);
    }
    let expansion =
        expand_rational(&[1, -2], &poly_product(&[&[1, -1], &[1, -2, -1]]), 7).map_err(e2s)?;
    for (n, &c) in counts.iter().enumerate() {
        ensure!(
            expansion[n + 1] == BigRational::from_integer(c.into()),
            "n={}: count {c}, generating function {}",
            n + 1,
            expansion[n + 1]
        );
    }
    ensure!(counts[..5] == DISTRIBUTIVE_MF, "counts {}", join(&counts));
    Ok(format!(
        "three conditions agree on all posets with <= 7 elements; counts {}",
        join(&counts)
    ))
}

fn graded_mf(limits: &Limits) -> Outcome {
    let posets = all_bounded_graded_posets(4, 9, limits).map_err(e2s)?;
    let mut mf = 0;
    for p in &posets {
        let a = flag_vector(p).map_err(e2s)?.is_multiplicity_free();
        ensure!(
            a == p.at_most_two_per_rank(),
            "rank sizes {:?}: multiplicity-free is {a}",
            p.rank_sizes()
        );
        mf += a as usize;
    }
    Ok(format!(
        "{} posets (rank <= 4, <= 9 elements), {mf} multiplicity-free",
        posets.len()
    ))
}

/// `x y^2 (1 - x y^2)(1 - c x y^e) / (1 - xy - 5xy^2 + 4x^2y^3 + 5x^2y^4 - 3x^3y^5)`.
fn mf_generating_function(
    third_y: u32,
    caps: (u32, u32),
) -> Result<crate::series::TruncatedSeries<BigRational>> {
    // (1 - x y^2)(1 - 3 x y^e), then times x y^2
    let numerator = [
        ((1, 2), 1),
        ((2, 4), -1),
        ((2, 2 + third_y), -3),
        ((3, 4 + third_y), 3),
    ];
    let denominator = [
        ((0, 0), 1),
        ((1, 1), -1),
        ((1, 2), -5),
        ((2, 3), 4),
        ((2, 4), 5),
        ((3, 5), -3),
    ];
    expand_rational_bivariate(&numerator, &denominator, caps)
}

fn marginals(
    series: &crate::series::TruncatedSeries<BigRational>,
) -> (Vec<BigRational>, Vec<BigRational>) {
    let caps = series.caps();
    let mut by_x = vec![BigRational::zero(); caps[0] as usize + 1];
    let mut by_y = vec![BigRational::zero(); caps[1] as usize + 1];
    for (e, c) in series.terms() {
        by_x[e[0] as usize] += c;
        by_y[e[1] as usize] += c;
    }
    (by_x, by_y)
}

fn as_rationals(v: &[u64]) -> Vec<BigRational> {
    v.iter()
        .map(|&c| BigRational::from_integer(c.into()))
        .collect()
}

fn mf_enumeration(limits: &Limits) -> Outcome {
    let rank_bound = MfBound::ByRank(8);
    let by_rank = generate_mf_posets(rank_bound, limits).map_err(e2s)?;
    let rank_counts: Vec<u64> = rank_bound
        .tally(&by_rank)
        .iter()
        .map(|&c| c as u64)
        .collect();
    ensure!(
        rank_counts == MF_BY_RANK,
        "structural counts by rank {}",
        join(&rank_counts)
    );
    let oracle: Vec<u64> = rank_bound
        .tally(&mf_posets_by_levels(rank_bound).map_err(e2s)?)
        .iter()
        .map(|&c| c as u64)
        .collect();
    ensure!(
        oracle == MF_BY_RANK,
        "level-structure counts by rank {}",
        join(&oracle)
    );
    for p in by_rank.iter().filter(|p| p.rank() <= 6) {
        ensure!(
            flag_vector(p).map_err(e2s)?.is_multiplicity_free(),
            "generated poset {:?} is not multiplicity-free",
            p.rank_sizes()
        );
    }

    let elem_bound = MfBound::ByElements(10);
    let by_elements = generate_mf_posets(elem_bound, limits).map_err(e2s)?;
    let elem_counts: Vec<u64> = elem_bound
        .tally(&by_elements)
        .iter()
        .map(|&c| c as u64)
        .collect();
    ensure!(
        elem_counts == MF_BY_ELEMENTS,
        "structural counts by elements {}",
        join(&elem_counts)
    );
    let oracle: Vec<u64> = elem_bound
        .tally(&mf_posets_by_levels(elem_bound).map_err(e2s)?)
        .iter()
        .map(|&c| c as u64)
        .collect();
    ensure!(
        oracle == MF_BY_ELEMENTS,
        "level-structure counts by elements {}",
        join(&oracle)
    );

    // rank n has at most 2n elements, so y^16 completes every rank <= 8
    let caps = (10, 16);
    let good = mf_generating_function(2, caps).map_err(e2s)?;
    let mut table = std::collections::BTreeMap::new();
    for p in &by_rank {
        *table
            .entry((p.rank() as u32, p.len() as u32))
            .or_insert(0u64) += 1;
    }
    for n in 1..=8u32 {
        for k in 0..=16u32 {
            let c = good.coefficient(&[n, k]);
            let want = BigRational::from_integer(table.get(&(n, k)).copied().unwrap_or(0).into());
            ensure!(
                c == want,
                "coefficient of x^{n} y^{k} is {c}, generated {want}"
            );
        }
    }
    let (gx, gy) = marginals(&good);
    ensure!(
        gx[1..=8] == as_rationals(&MF_BY_RANK)[..],
        "numerator (1-3xy^2): rank marginal differs"
    );
    ensure!(
        gy[2..=10] == as_rationals(&MF_BY_ELEMENTS)[..],
        "numerator (1-3xy^2): element marginal differs"
    );

    let bad = mf_generating_function(3, caps).map_err(e2s)?;
    let (bx, by) = marginals(&bad);
    let rank_mismatch = (1..=8).find(|&n| bx[n] != gx[n]);
    let elem_mismatch = (2..=10).find(|&k| by[k] != gy[k]);
    ensure!(
        rank_mismatch.is_some() && elem_mismatch.is_some(),
        "the (1-3xy^3) numerator was expected to fail"
    );
    let (rn, ek) = (rank_mismatch.unwrap_or(0), elem_mismatch.unwrap_or(0));
    Ok(format!(
        "by rank {}; by elements {}; (1-3xy^2) matches every h(n,k) with n <= 8; (1-3xy^3) fails (rank {rn}: {} vs {}, {ek} elements: {} vs {})",
        join(&rank_counts),
        join(&elem_counts),
        bx[rn],
        gx[rn],
        by[ek],
        gy[ek]
    ))
}

fn extremality(limits: &Limits) -> Outcome {
    for n in 1..=8usize {
        let fib = fibonacci(n as u64 + 1);
        let alternating = q_from_gamma(&GammaWord::alternating(n)).map_err(e2s)?;
        let family = distributive_mf_posets(n, limits).map_err(e2s)?;
        let mut best = BigUint::zero();
        let mut attaining = Vec::new();
        for q in &family {
            let e = extension_count(q, limits).map_err(e2s)?;
            if e > best {
                best = e.clone();
                attaining.clear();
            }
            if e == best {
                attaining.push(q);
            }
        }
        ensure!(best == fib, "n={n}: max e(Q) = {best}, F_(n+1) = {fib}");
        ensure!(
            attaining.len() == 1,
            "n={n}: {} posets attain the maximum",
            attaining.len()
        );
        ensure!(
            are_isomorphic(attaining[0], &alternating, limits).map_err(e2s)?,
            "n={n}: maximiser is not Q(0101...)"
        );
        let qn = q_from_commuting_word(n).map_err(e2s)?;
        ensure!(
            are_isomorphic(&alternating, &qn, limits).map_err(e2s)?,
            "n={n}: Q(0101...) is not Q_n"
        );
    }
    for n in 1..=10usize {
        let qn = q_from_commuting_word(n).map_err(e2s)?;
        let ext: Vec<Word> = linear_extensions(&qn, limits).map_err(e2s)?;
        let class = class_of(&Word::identity(n), Relation::Consecutive, limits).map_err(e2s)?;
        ensure!(
            ext == class.members,
            "n={n}: linear extensions of Q_n differ from <id_n>"
        );
        let descents: Vec<RankSet> = class.members.iter().map(descent_set).collect();
        let distinct: HashSet<u64> = descents.iter().map(|s| s.bits()).collect();
        ensure!(
            distinct.len() == descents.len(),
            "n={n}: repeated descent set in <id_n>"
        );
        let sparse: HashSet<u64> = sparse_subsets(n)
            .map_err(e2s)?
            .iter()
            .map(|s| s.bits())
            .collect();
        ensure!(
            distinct == sparse,
            "n={n}: descent sets of <id_n> are not the sparse sets"
        );
    }
    Ok("max e(Q) = F_(n+1) only at Q(0101...) = Q_n for n <= 8; L(Q_n) = <id_n> with sparse descent sets for n <= 10".into())
}

fn beta_table(fv: &FlagVector) -> &[BigInt] {
    fv.beta_values()
}

fn stretch_and_proliferate(_: &Limits) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut stretch_cases = 0;
    for _ in 0..50 {
        let r = random_graded_poset(&mut rng, 5, 10).map_err(e2s)?;
        let base = flag_vector(&r).map_err(e2s)?;
        for i in 1..r.rank() {
            let s = stretch(&r, i).map_err(e2s)?;
            let fv = flag_vector(&s).map_err(e2s)?;
            for (set, _, b) in fv.rows() {
                let (reduced, sign) = stretch_reduce(&set, i).map_err(e2s)?;
                let want = base.beta(&reduced).map_err(e2s)? * BigInt::from(sign);
                ensure!(
                    *b == want,
                    "stretch at {i} of {:?}: beta({set}) = {b}, rule gives {want}",
                    r.rank_sizes()
                );
            }
            stretch_cases += 1;
        }
    }
    let mut prolif_cases = 0;
    for _ in 0..50 {
        let r = random_graded_poset(&mut rng, 5, 10).map_err(e2s)?;
        for i in 1..r.rank() {
            let p = proliferate(&r, i).map_err(e2s)?;
            let fv = flag_vector(&p).map_err(e2s)?;
            let lower = flag_vector(&truncate_above(&r, i).map_err(e2s)?).map_err(e2s)?;
            let upper = flag_vector(&truncate_below(&r, i).map_err(e2s)?).map_err(e2s)?;
            let (lo, hi) = (beta_table(&lower), beta_table(&upper));
            for (set, _, b) in fv.rows() {
                let bits = set.bits();
                let low_part = bits & ((1u64 << i) - 1);
                let high_part = bits >> i;
                let want = &lo[low_part as usize] * &hi[high_part as usize];
                ensure!(
                    *b == want,
                    "proliferation at {i} of {:?}: beta({set}) = {b}, product {want}",
                    r.rank_sizes()
                );
            }
            prolif_cases += 1;
        }
    }
    Ok(format!(
        "50 + 50 random posets: {stretch_cases} stretches, {prolif_cases} proliferations"
    ))
}

/// Every check, in order.
pub fn checks() -> Vec<Check> {
    let secs = |s| Some(Duration::from_secs(s));
    vec![
        Check {
            id: 1,
            name: "class-count",
            title: "class count: brute = inclusion-exclusion = series",
            budget: secs(60),
            run: class_count_agreement,
        },
        Check {
            id: 2,
            name: "salient",
            title: "one salient member per class, the minimum",
            budget: secs(120),
            run: salient_canonical,
        },
        Check {
            id: 3,
            name: "fibonacci",
            title: "class sizes are Fibonacci products",
            budget: None,
            run: fibonacci_sizes,
        },
        Check {
            id: 4,
            name: "singletons",
            title: "one-element classes",
            budget: None,
            run: singletons,
        },
        Check {
            id: 5,
            name: "at-least-j",
            title: "swaps of letters differing by at least j",
            budget: None,
            run: at_least_j,
        },
        Check {
            id: 6,
            name: "multiset",
            title: "multiset classes: series = BFS",
            budget: None,
            run: multiset_cartier_foata,
        },
        Check {
            id: 7,
            name: "four-letter",
            title: "four-letter closed forms",
            budget: None,
            run: four_letter_closed_forms,
        },
        Check {
            id: 8,
            name: "umbral",
            title: "umbral class counts",
            budget: secs(120),
            run: umbral,
        },
        Check {
            id: 9,
            name: "flag",
            title: "Mobius inversion and descent counts",
            budget: None,
            run: flag_core,
        },
        Check {
            id: 10,
            name: "distributive",
            title: "multiplicity-free ideal lattices",
            budget: None,
            run: distributive,
        },
        Check {
            id: 11,
            name: "graded",
            title: "multiplicity-free iff two per rank",
            budget: None,
            run: graded_mf,
        },
        Check {
            id: 12,
            name: "mf-enumeration",
            title: "multiplicity-free enumeration",
            budget: None,
            run: mf_enumeration,
        },
        Check {
            id: 13,
            name: "extremal",
            title: "extension count maximum",
            budget: None,
            run: extremality,
        },
        Check {
            id: 14,
            name: "stretch",
            title: "stretch and proliferation",
            budget: None,
            run: stretch_and_proliferate,
        },
    ]
}

/// Checks selected by `name`: `all`, a number, or a check name.
pub fn select(name: &str) -> Result<Vec<Check>> {
    let all = checks();
    if name == "all" {
        return Ok(all);
    }
    let picked: Vec<Check> = all
        .into_iter()
        .filter(|c| c.name == name || c.id.to_string() == name)
        .collect();
    if picked.is_empty() {
        let names: Vec<&str> = checks().iter().map(|c| c.name).collect();
        return Err(Error::InvalidArgument(format!(
            "unknown suite {name:?}; choose all, 1-14 or one of {}",
            names.join(", ")
        )));
    }
    Ok(picked)
}

pub fn run_suite(name: &str, limits: &Limits) -> Result<Vec<CheckReport>> {
    Ok(select(name)?.iter().map(|c| c.run(limits)).collect())
}
