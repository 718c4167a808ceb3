use std::fmt::Write as _;
use std::path::Path;

use num_bigint::BigUint;
use num_rational::BigRational;
use serde::Serialize;
use serde_json::{json, Value};

use salient::equivalence::{
    class_of, class_size, classes_of_sn, count_classes_brute, count_orbits, count_singletons,
    f_inclusion_exclusion, f_j_count, f_series, multiset_class_partition, salient_representative,
    segment_decomposition, singleton_series, CountMethod, EquivalenceClass, Relation,
};
use salient::perm::{
    consecutive_moves, descent_set, geq_j_moves, is_salient, permutations, sparse_subsets,
    MultisetSpec, RankSet, Word,
};
use salient::poset::{
    alpha, are_isomorphic, beta, count_distributive_mf, extension_count, flag_vector, g_blocks,
    generate_mf_posets, graded_ordinal_sum, ideal_counts, ideals_lattice, join_irreducible_poset,
    lattice_from_gamma, linear_extensions, mf_posets_by_levels, proliferate, q_from_commuting_word,
    q_from_gamma, stretch, to_dot, GammaWord, GradedPoset, MfBound, NaturalPoset,
};
use salient::series::{
    c_poly, cf_series, expand_rational, f4_coefficient, f4_t_coefficient, g_umbral_series,
    multiset_count_cf, phi, poly_product, TPoly,
};
use salient::verify::run_suite;
use salient::Limits;

use crate::args::{
    Cli, Command, CountBy, EnumerateBy, Format, Method, PosetCommand, Source, Transform,
};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] salient::Error),
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{path}: {message}")]
    File { path: String, message: String },
    /// Completed, but reported a failure; the output goes to stdout as usual.
    #[error("checks failed")]
    Failed(String),
}

impl CliError {
    pub fn is_guard(&self) -> bool {
        matches!(self, CliError::Core(e) if e.is_guard())
    }
}

type Result<T> = std::result::Result<T, CliError>;

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn guard(what: &'static str, limit: usize, actual: usize) -> CliError {
    salient::Error::Guard {
        what,
        limit: limit as u64,
        actual: actual as u64,
    }
    .into()
}

pub fn run(cli: &Cli) -> Result<String> {
    let limits = limits(&cli.limits)?;
    let fmt = cli.format;
    if fmt == Format::Dot
        && !matches!(
            cli.command,
            Command::Poset {
                command: PosetCommand::Show { .. }
            }
        )
    {
        return Err(usage("--format dot is only available for `poset show`"));
    }
    match &cli.command {
        Command::Classes {
            n,
            relation,
            members_up_to,
        } => classes(*n, relation, *members_up_to, fmt, &limits),
        Command::Count {
            n,
            method,
            relation,
            sequence,
        } => {
            if *sequence {
                let counts = (0..=*n)
                    .map(|m| count(m, *method, relation, &limits))
                    .collect::<Result<Vec<_>>>()?;
                return numbers(&counts, fmt);
            }
            scalar(count(*n, *method, relation, &limits)?, fmt)
        }
        Command::Class {
            word,
            relation,
            size_only,
            product,
        } => class(
            &parse_word(word)?,
            relation,
            *size_only,
            *product,
            fmt,
            &limits,
        ),
        Command::Salient { word, check } => {
            let w = parse_word(word)?;
            if *check {
                return scalar(is_salient(&w)?, fmt);
            }
            scalar(salient_representative(&w, &limits)?, fmt)
        }
        Command::Segments { word } => {
            let d = segment_decomposition(&parse_word(word)?, &limits)?;
            match fmt {
                Format::Json => to_json(&json!({
                    "segments": d.segments,
                    "lengths": d.lengths,
                    "class_size": d.class_size().to_string(),
                })),
                _ => {
                    let parts: Vec<String> = d.segments.iter().map(Word::to_string).collect();
                    Ok(format!(
                        "{}\nclass size {}",
                        parts.join(" | "),
                        d.class_size()
                    ))
                }
            }
        }
        Command::Descents { word } => scalar_json(descent_set(&parse_word(word)?), fmt),
        Command::Moves { word, geq } => {
            let w = parse_word(word)?;
            let moves = match geq {
                Some(j) => geq_j_moves(&w, *j)?,
                None => consecutive_moves(&w),
            };
            list(moves.iter(), fmt)
        }
        Command::Sparse { n, count_only } => {
            let sets = sparse_subsets(*n)?;
            if *count_only {
                return scalar(sets.len(), fmt);
            }
            list(sets.iter(), fmt)
        }
        Command::Singletons {
            n,
            method,
            sequence,
        } => {
            let counts = match method {
                Method::Brute if *sequence => (0..=*n)
                    .map(|m| count_singletons(m, &limits))
                    .collect::<salient::Result<Vec<_>>>()?,
                Method::Brute => vec![count_singletons(*n, &limits)?],
                Method::Series if *sequence => singleton_series(*n),
                Method::Series => vec![singleton_series(*n).swap_remove(*n)],
            };
            if *sequence {
                numbers(&counts, fmt)
            } else {
                scalar(&counts[0], fmt)
            }
        }
        Command::Multiset {
            spec,
            count_only,
            method,
        } => multiset(spec, *count_only, *method, fmt, &limits),
        Command::Cf { n, caps, at } => {
            let caps: Vec<u32> = parse_list(caps)?;
            let series = cf_series(*n, &caps)?;
            if let Some(at) = at {
                let e: Vec<u32> = parse_list(at)?;
                if e.len() != *n {
                    return Err(usage(format!("--at needs {n} exponents, got {}", e.len())));
                }
                return scalar(series.coefficient(&e), fmt);
            }
            match fmt {
                Format::Json => to_json(&series.records()),
                _ => Ok(series
                    .records()
                    .iter()
                    .map(|r| format!("{:?} {}\n", r.exponents, r.coefficient))
                    .collect()),
            }
        }
        Command::F4 { exps, t, series } => f4(exps, *t, *series, fmt, &limits),
        Command::Umbral { k, upto, connected } => {
            if *connected {
                let polys = (1..=*upto)
                    .map(|m| c_poly(m, *k, &limits))
                    .collect::<salient::Result<Vec<TPoly>>>()?;
                return match fmt {
                    Format::Json => {
                        to_json(&polys.iter().map(TPoly::to_string).collect::<Vec<_>>())
                    }
                    _ => Ok(polys
                        .iter()
                        .enumerate()
                        .map(|(i, p)| format!("c({}) = {p}\n", i + 1))
                        .collect()),
                };
            }
            numbers(&g_umbral_series(*k, *upto, &limits)?, fmt)
        }
        Command::Phi { coeffs } => {
            let coeffs = coeffs
                .split(',')
                .map(|c| {
                    c.trim()
                        .parse::<BigRational>()
                        .map_err(|e| usage(format!("bad coefficient {c:?}: {e}")))
                })
                .collect::<Result<Vec<_>>>()?;
            scalar(phi(&TPoly::from_coeffs(coeffs)), fmt)
        }
        Command::Expand { num, den, order } => {
            let num: Vec<i64> = parse_list(num)?;
            let dens = den
                .iter()
                .map(|d| parse_list::<i64>(d))
                .collect::<Result<Vec<_>>>()?;
            let refs: Vec<&[i64]> = dens.iter().map(Vec::as_slice).collect();
            numbers(&expand_rational(&num, &poly_product(&refs), *order)?, fmt)
        }
        Command::Poset { command } => poset(command, fmt, &limits),
        Command::Enumerate {
            by,
            max,
            exhaustive,
        } => {
            let counts: Vec<BigUint> = match by {
                EnumerateBy::Distributive => (1..=*max)
                    .map(|n| count_distributive_mf(n, &limits))
                    .collect::<salient::Result<_>>()?,
                EnumerateBy::Rank | EnumerateBy::Elements => {
                    let bound = if *by == EnumerateBy::Rank {
                        MfBound::ByRank(*max)
                    } else {
                        MfBound::ByElements(*max)
                    };
                    let posets = if *exhaustive {
                        mf_posets_by_levels(bound)?
                    } else {
                        generate_mf_posets(bound, &limits)?
                    };
                    bound
                        .tally(&posets)
                        .into_iter()
                        .map(BigUint::from)
                        .collect()
                }
            };
            numbers(&counts, fmt)
        }
        Command::Verify { suite } => {
            let reports = run_suite(suite, &limits)?;
            let failed = reports.iter().filter(|r| !r.passed).count();
            let out = match fmt {
                Format::Json => to_json(&reports)?,
                _ => {
                    let mut s: String = reports.iter().map(|r| format!("{r}\n")).collect();
                    let _ = writeln!(s, "{} passed, {failed} failed", reports.len() - failed);
                    s
                }
            };
            if failed > 0 {
                Err(CliError::Failed(out))
            } else {
                Ok(out)
            }
        }
    }
}

/// Defaults from the environment, then `--limit` overrides by field name.
fn limits(overrides: &[String]) -> Result<Limits> {
    let mut value = serde_json::to_value(Limits::from_env()).expect("limits serialise");
    let fields = value.as_object_mut().expect("limits is a struct");
    for o in overrides {
        let (name, v) = o
            .split_once('=')
            .ok_or_else(|| usage(format!("expected NAME=VALUE, got {o:?}")))?;
        let name = name.trim().replace('-', "_");
        if !fields.contains_key(&name) {
            let known: Vec<&str> = fields.keys().map(String::as_str).collect();
            return Err(usage(format!(
                "unknown limit {name:?}; known: {}",
                known.join(", ")
            )));
        }
        let n: u64 = v
            .trim()
            .parse()
            .map_err(|_| usage(format!("limit {name} needs a number, got {v:?}")))?;
        fields.insert(name, Value::from(n));
    }
    serde_json::from_value(value).map_err(|e| usage(e.to_string()))
}

fn parse_word(s: &str) -> Result<Word> {
    Ok(s.parse()?)
}

fn parse_list<T: std::str::FromStr>(s: &str) -> Result<Vec<T>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|p| {
            p.trim()
                .parse::<T>()
                .map_err(|_| usage(format!("bad list entry {p:?} in {s:?}")))
        })
        .collect()
}

fn to_json<T: Serialize + ?Sized>(v: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(v).expect("output serialises"))
}

/// A single value: plain text, or a JSON string so big numbers survive.
fn scalar(v: impl std::fmt::Display, fmt: Format) -> Result<String> {
    match fmt {
        Format::Json => to_json(&v.to_string()),
        _ => Ok(v.to_string()),
    }
}

fn scalar_json<T: Serialize + std::fmt::Display>(v: T, fmt: Format) -> Result<String> {
    match fmt {
        Format::Json => to_json(&v),
        _ => Ok(v.to_string()),
    }
}

fn list<T: Serialize + std::fmt::Display>(
    items: impl Iterator<Item = T>,
    fmt: Format,
) -> Result<String> {
    let items: Vec<T> = items.collect();
    match fmt {
        Format::Json => to_json(&items),
        _ => Ok(items.iter().map(|i| format!("{i}\n")).collect()),
    }
}

/// A sequence on one line, or a JSON array of decimal strings.
fn numbers<T: std::fmt::Display>(xs: &[T], fmt: Format) -> Result<String> {
    let strings: Vec<String> = xs.iter().map(T::to_string).collect();
    match fmt {
        Format::Json => to_json(&strings),
        _ => Ok(strings.join(" ")),
    }
}

fn class_json(c: &EquivalenceClass, members_up_to: usize) -> Value {
    let mut v = json!({ "representative": c.representative, "size": c.size.to_string() });
    if c.members.len() <= members_up_to {
        v["members"] = json!(c.members);
    }
    v
}

fn classes(
    n: usize,
    relation: &str,
    members_up_to: usize,
    fmt: Format,
    limits: &Limits,
) -> Result<String> {
    let relation: Relation = relation.parse()?;
    let cs = classes_of_sn(n, relation, limits)?;
    match fmt {
        Format::Json => {
            let list: Vec<Value> = cs.iter().map(|c| class_json(c, members_up_to)).collect();
            to_json(&json!({ "n": n, "classes": list }))
        }
        _ => {
            let mut s = String::new();
            for c in &cs {
                let _ = write!(s, "{} {}", c.representative, c.size);
                if c.members.len() <= members_up_to {
                    let ms: Vec<String> = c.members.iter().map(Word::to_string).collect();
                    let _ = write!(s, " {{{}}}", ms.join(","));
                }
                s.push('\n');
            }
            let _ = write!(s, "{} classes", cs.len());
            Ok(s)
        }
    }
}

fn count(n: usize, method: CountBy, relation: &str, limits: &Limits) -> Result<BigUint> {
    let relation: Relation = relation.parse()?;
    let c = match (relation, method) {
        (Relation::Consecutive, CountBy::Bfs) => count_classes_brute(n, limits)?,
        (Relation::Consecutive, CountBy::Formula) => f_inclusion_exclusion(n),
        (Relation::Consecutive, CountBy::Series) => f_series(n).swap_remove(n),
        (Relation::Consecutive, CountBy::Salient) => {
            if n > limits.brute_n {
                return Err(guard("n for salient counting", limits.brute_n, n));
            }
            let mut total = 0u64;
            for w in permutations(n) {
                total += is_salient(&w)? as u64;
            }
            BigUint::from(total)
        }
        (Relation::AtLeast(_), CountBy::Bfs) => count_orbits(n, relation, limits)?,
        (Relation::AtLeast(j), CountBy::Formula) => f_j_count(n, j, CountMethod::Formula, limits)?,
        (Relation::AtLeast(j), _) => {
            return Err(usage(format!(
                "method {method:?} is not available for geq:{j}; use bfs or formula"
            )))
        }
    };
    Ok(c)
}

fn class(
    w: &Word,
    relation: &str,
    size_only: bool,
    product: bool,
    fmt: Format,
    limits: &Limits,
) -> Result<String> {
    let relation: Relation = relation.parse()?;
    if product {
        if relation != Relation::Consecutive {
            return Err(usage("--product applies to the consecutive relation only"));
        }
        return scalar(class_size(w, limits)?, fmt);
    }
    let c = class_of(w, relation, limits)?;
    if size_only {
        return scalar(&c.size, fmt);
    }
    match fmt {
        Format::Json => to_json(&c),
        _ => {
            let ms: Vec<String> = c.members.iter().map(Word::to_string).collect();
            Ok(ms.join(" "))
        }
    }
}

fn multiset(
    spec: &str,
    count_only: bool,
    method: Method,
    fmt: Format,
    limits: &Limits,
) -> Result<String> {
    let spec: MultisetSpec = spec.parse()?;
    if method == Method::Series {
        if !count_only {
            return Err(usage("--method series only counts; add --count-only"));
        }
        return scalar(multiset_count_cf(&spec, limits)?, fmt);
    }
    let cs = multiset_class_partition(&spec, limits)?;
    if count_only {
        return scalar(cs.len(), fmt);
    }
    match fmt {
        Format::Json => to_json(&json!({ "spec": spec.to_string(), "classes": cs })),
        _ => {
            let mut s: String = cs
                .iter()
                .map(|c| format!("{} {}\n", c.representative, c.size))
                .collect();
            let _ = write!(s, "{} classes", cs.len());
            Ok(s)
        }
    }
}

fn f4(exps: &str, t: Option<u64>, series: bool, fmt: Format, limits: &Limits) -> Result<String> {
    let e: Vec<u64> = parse_list(exps)?;
    let [h, i, j, k] = e[..] else {
        return Err(usage(format!(
            "--exps needs four exponents, got {}",
            e.len()
        )));
    };
    if series {
        let total = (h + i + j + k) as usize;
        if total > limits.cf_total {
            return Err(guard("multiset size", limits.cf_total, total));
        }
        let caps = [h as u32, i as u32, j as u32, k as u32];
        let s = cf_series(4, &caps)?;
        let s = match t {
            Some(t) => s.pow(u32::try_from(t).map_err(|_| usage("--t is too large"))?),
            None => s,
        };
        return scalar(s.coefficient(&caps), fmt);
    }
    match t {
        Some(t) => scalar(f4_t_coefficient(h, i, j, k, t), fmt),
        None => scalar(f4_coefficient(h, i, j, k), fmt),
    }
}

fn read_file(path: &Path) -> Result<Value> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    serde_json::from_str(&text).map_err(|e| CliError::File {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

/// A poset file holds either a graded poset or a natural one.
enum PosetFile {
    Graded(GradedPoset),
    Natural(NaturalPoset),
}

fn load(path: &Path) -> Result<PosetFile> {
    let value = read_file(path)?;
    let err = |e: serde_json::Error| CliError::File {
        path: path.display().to_string(),
        message: e.to_string(),
    };
    if value.get("elements").is_some() {
        serde_json::from_value(value)
            .map(PosetFile::Graded)
            .map_err(err)
    } else {
        serde_json::from_value(value)
            .map(PosetFile::Natural)
            .map_err(err)
    }
}

/// Graded reading of a source; natural posets become their ideal lattices.
fn graded(src: &Source, limits: &Limits) -> Result<GradedPoset> {
    if let Some(g) = &src.gamma {
        return Ok(lattice_from_gamma(&g.parse::<GammaWord>()?)?);
    }
    if let Some(n) = src.chain {
        return Ok(GradedPoset::chain(n));
    }
    if let Some(PosetFile::Graded(p)) = src.file.as_deref().map(load).transpose()? {
        return Ok(p);
    }
    Ok(ideals_lattice(&natural(src)?, limits)?)
}

/// Natural reading of a source; lattices become their join-irreducibles.
fn natural(src: &Source) -> Result<NaturalPoset> {
    if let Some(g) = &src.gamma {
        return Ok(q_from_gamma(&g.parse::<GammaWord>()?)?);
    }
    if let Some(n) = src.qn {
        return Ok(q_from_commuting_word(n)?);
    }
    if let Some(n) = src.chain {
        return Ok(NaturalPoset::chain(n));
    }
    if let Some(n) = src.boolean {
        return Ok(NaturalPoset::antichain(n));
    }
    if let Some(r) = &src.relations {
        return parse_relations(r);
    }
    let path = src.file.as_deref().ok_or_else(|| usage("no poset given"))?;
    match load(path)? {
        PosetFile::Natural(q) => Ok(q),
        PosetFile::Graded(p) => Ok(join_irreducible_poset(&p)?),
    }
}

/// `n:a<b,c<d`, or just `n` for an antichain.
fn parse_relations(s: &str) -> Result<NaturalPoset> {
    let bad = || usage(format!("expected n:a<b,c<d, got {s:?}"));
    let (n, rest) = s.split_once(':').unwrap_or((s, ""));
    let n: usize = n.trim().parse().map_err(|_| bad())?;
    let mut pairs = Vec::new();
    for part in rest.split(',').filter(|p| !p.trim().is_empty()) {
        let (a, b) = part.split_once('<').ok_or_else(bad)?;
        pairs.push((
            a.trim().parse().map_err(|_| bad())?,
            b.trim().parse().map_err(|_| bad())?,
        ));
    }
    Ok(NaturalPoset::naturalize(n, &pairs)?.0)
}

/// `KIND:VALUE` as a [`Source`]; anything without a known kind is a file path.
fn parse_source(spec: &str) -> Result<Source> {
    let mut src = Source {
        gamma: None,
        qn: None,
        file: None,
        chain: None,
        boolean: None,
        relations: None,
    };
    let number = |v: &str| {
        v.trim()
            .parse::<usize>()
            .map_err(|_| usage(format!("bad size in {spec:?}")))
    };
    match spec.split_once(':') {
        Some(("gamma", v)) => src.gamma = Some(v.to_string()),
        Some(("qn", v)) => src.qn = Some(number(v)?),
        Some(("chain", v)) => src.chain = Some(number(v)?),
        Some(("boolean", v)) => src.boolean = Some(number(v)?),
        Some(("relations", v)) => src.relations = Some(v.to_string()),
        Some(("file", v)) => src.file = Some(v.into()),
        _ => src.file = Some(spec.into()),
    }
    Ok(src)
}

fn graded_text(p: &GradedPoset) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "rank {}, {} elements, rank sizes {:?}",
        p.rank(),
        p.len(),
        p.rank_sizes()
    );
    for r in 0..=p.rank() {
        let names: Vec<&str> = p.elements_of_rank(r).iter().map(|&x| p.name(x)).collect();
        let _ = writeln!(s, "{r}: {}", names.join(" "));
    }
    for &(a, b) in p.covers() {
        let _ = writeln!(s, "{} < {}", p.name(a), p.name(b));
    }
    s
}

fn natural_text(q: &NaturalPoset) -> String {
    let mut s = format!("{} elements\n", q.len());
    for (a, b) in q.cover_relations() {
        let _ = writeln!(s, "{a} < {b}");
    }
    s
}

fn poset(cmd: &PosetCommand, fmt: Format, limits: &Limits) -> Result<String> {
    match cmd {
        PosetCommand::Beta { source, set } => {
            let p = graded(source, limits)?;
            if let Some(set) = set {
                let s = RankSet::new(p.rank(), parse_list::<usize>(set)?)?;
                return scalar(beta(&p, &s)?, fmt);
            }
            let fv = flag_vector(&p)?;
            match fmt {
                Format::Json => to_json(&fv),
                _ => Ok(fv
                    .rows()
                    .map(|(s, a, b)| format!("{s} {a} {b}\n"))
                    .collect()),
            }
        }
        PosetCommand::Extensions { source, count_only } => {
            let q = natural(source)?;
            if *count_only {
                return scalar(extension_count(&q, limits)?, fmt);
            }
            list(linear_extensions(&q, limits)?.into_iter(), fmt)
        }
        PosetCommand::Show {
            source,
            natural: want_natural,
        } => {
            if *want_natural {
                let q = natural(source)?;
                return match fmt {
                    Format::Json => to_json(&q),
                    Format::Text => Ok(natural_text(&q)),
                    Format::Dot => Err(usage("DOT output is for graded posets; drop --natural")),
                };
            }
            let p = graded(source, limits)?;
            match fmt {
                Format::Json => to_json(&p),
                Format::Text => Ok(graded_text(&p)),
                Format::Dot => Ok(to_dot(&p)),
            }
        }
        PosetCommand::Mf { source } => scalar(
            flag_vector(&graded(source, limits)?)?.is_multiplicity_free(),
            fmt,
        ),
        PosetCommand::Classify { source } => {
            let q = natural(source)?;
            let ideals = ideal_counts(&q, limits)?;
            let lattice_mf = flag_vector(&ideals_lattice(&q, limits)?)?.is_multiplicity_free();
            let v = json!({
                "elements": q.len(),
                "two_plus_two_free": q.is_two_plus_two_free(),
                "width_at_most_two": q.is_width_le_two(),
                "ideals_by_size": ideals,
                "ideal_lattice_multiplicity_free": lattice_mf,
            });
            match fmt {
                Format::Json => to_json(&v),
                _ => Ok(v
                    .as_object()
                    .expect("object")
                    .iter()
                    .map(|(k, v)| format!("{k}: {v}\n"))
                    .collect()),
            }
        }
        PosetCommand::Transform { source, op, rank } => {
            let p = graded(source, limits)?;
            let out = match op {
                Transform::Stretch => stretch(&p, *rank)?,
                Transform::Proliferate => proliferate(&p, *rank)?,
            };
            match fmt {
                Format::Json => to_json(&out),
                _ => Ok(graded_text(&out)),
            }
        }
        PosetCommand::Alpha { source, set } => {
            let p = graded(source, limits)?;
            let s = RankSet::new(p.rank(), parse_list::<usize>(set)?)?;
            scalar(alpha(&p, &s)?, fmt)
        }
        PosetCommand::Iso { a, b, natural: n } => {
            let (a, b) = (parse_source(a)?, parse_source(b)?);
            let same = if *n {
                are_isomorphic(&natural(&a)?, &natural(&b)?, limits)?
            } else {
                are_isomorphic(&graded(&a, limits)?, &graded(&b, limits)?, limits)?
            };
            scalar(same, fmt)
        }
        PosetCommand::Sum { a, b, natural: n } => {
            let (a, b) = (parse_source(a)?, parse_source(b)?);
            if *n {
                let q = natural(&a)?.ordinal_sum(&natural(&b)?)?;
                return match fmt {
                    Format::Json => to_json(&q),
                    _ => Ok(natural_text(&q)),
                };
            }
            let p = graded_ordinal_sum(&graded(&a, limits)?, &graded(&b, limits)?)?;
            match fmt {
                Format::Json => to_json(&p),
                _ => Ok(graded_text(&p)),
            }
        }
        PosetCommand::Blocks { n } => scalar(g_blocks(*n), fmt),
    }
}
