use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use minorrel_core::multilinear::ExtIndex;
use minorrel_core::partitions::{
    classify_tshape, is_single_type, predecessors, shape_relations_deg3, successors, tensor_multiplicity, BiShape,
    BiWeight, Partition,
};
use minorrel_core::regbounds::{degree_bound, duality_check, hilbert_at, regularity, RegCase};
use minorrel_core::relations::{
    determinantal_relation, even_cubic, mirror, odd_cubic, quadratic_relation, InitialSegment, MinorPolynomial,
};
use minorrel_core::symfunc::SymFunc;
use minorrel_core::verify::{
    brute_dim_at, export_generators, is_relation, minimality_check, random_probe, weight_monomials,
    MinimalityOptions, BRUTE_MONOMIAL_CAP,
};
use minorrel_core::Error;

use crate::cache::{resolve_dir, PlethysmCache};
use crate::json::{self, BiShapeJson, RegularityJson, TermJson, VerdictJson};
use crate::text::parse_polynomial;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_DOMAIN: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

/// Engine cap on `t·d` for character computations, and the raised value.
const SYMFUNC_CAP_LARGE: u32 = 16;
/// Term products allowed in an exact expansion before `--confirm-large`.
const VERIFY_COST_CAP: u128 = 5_000_000;
/// Monomials in the target weight space before `--confirm-large`.
const MINIMALITY_COST_CAP: usize = 100_000;

#[derive(Parser, Debug)]
#[command(name = "minorrel", version, about = "Relations between the t-minors of a generic matrix")]
struct Cli {
    /// Output format; each subcommand has its own default.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Directory for memo tables (overrides MINORREL_CACHE_DIR).
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum Format {
    Json,
    Text,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Bi-shapes of the degree-d part of the symmetric algebra on minors, or
    /// data on one shape or bi-shape.
    Decompose(DecomposeArgs),
    /// Decompose L_mu applied to the t-th exterior power.
    Plethysm(PlethysmArgs),
    /// Build an explicit relation.
    Relation(RelationArgs),
    /// Check that polynomials in minors vanish on the generic m x n matrix.
    Verify(VerifyArgs),
    /// Decide whether a kernel component contains a minimal relation.
    Minimality(MinimalityArgs),
    /// Castelnuovo-Mumford regularity of the algebra of minors.
    Regularity(RegularityArgs),
    /// Hilbert function of the algebra of minors.
    Hilbert(HilbertArgs),
    /// The known generators of the ideal of relations that fit an m x n matrix.
    Export(ExportArgs),
    /// Bi-shapes all of whose predecessors are symmetric of multiplicity one.
    Tshape(TshapeArgs),
}

#[derive(Args, Debug)]
struct DecomposeArgs {
    #[arg(long)]
    t: u32,
    #[arg(long)]
    d: Option<u32>,
    /// A shape `4,2` or a bi-shape `4,2|6`.
    #[arg(long)]
    shape: Option<String>,
    #[arg(long)]
    confirm_large: bool,
}

#[derive(Args, Debug)]
struct PlethysmArgs {
    #[arg(long)]
    mu: String,
    #[arg(long)]
    t: u32,
    #[arg(long)]
    confirm_large: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum Kind {
    F,
    G,
    H,
    Det,
}

#[derive(Args, Debug)]
struct RelationArgs {
    #[arg(long, value_enum)]
    kind: Kind,
    #[arg(long)]
    t: u32,
    #[arg(long)]
    u: Option<u32>,
    #[arg(long)]
    v: Option<u32>,
    /// Swap the roles of rows and columns.
    #[arg(long)]
    mirror: bool,
    /// Row initial segment for `det`, e.g. `1,2;1,3;2,3`.
    #[arg(long)]
    rows: Option<String>,
    #[arg(long)]
    cols: Option<String>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long)]
    m: u32,
    #[arg(long)]
    n: u32,
    #[arg(long, conflicts_with = "file")]
    poly: Option<String>,
    /// One polynomial per non-empty line.
    #[arg(long)]
    file: Option<PathBuf>,
    /// Evaluate at random matrices modulo a prime instead of expanding.
    #[arg(long)]
    probe: bool,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, default_value_t = 8)]
    trials: u32,
    #[arg(long)]
    confirm_large: bool,
}

#[derive(Args, Debug)]
struct MinimalityArgs {
    #[arg(long)]
    t: u32,
    /// A bi-shape such as `6,2|7,1`.
    #[arg(long)]
    shape: String,
    /// Matrix format for the exhaustive count.
    #[arg(long, requires = "n")]
    m: Option<u32>,
    #[arg(long, requires = "m")]
    n: Option<u32>,
    /// Tableaux tried per side and source shape.
    #[arg(long, default_value_t = 6)]
    tableaux: usize,
    /// Shuffle the derivation attempts; the verdict does not depend on it.
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    no_exhaustive: bool,
    /// Raise the exhaustive limits and the weight-space cap.
    #[arg(long)]
    confirm_large: bool,
}

#[derive(Args, Debug)]
struct RegularityArgs {
    #[arg(long)]
    t: u32,
    #[arg(long)]
    m: u32,
    #[arg(long)]
    n: u32,
    /// Also report the bound on the degree of a minimal relation.
    #[arg(long)]
    bound: bool,
}

#[derive(Args, Debug)]
struct HilbertArgs {
    #[arg(long)]
    t: u32,
    #[arg(long)]
    m: u32,
    #[arg(long)]
    n: u32,
    /// Largest degree reported.
    #[arg(long)]
    d: u32,
    /// Also compute every value by expanding all monomials in minors.
    #[arg(long)]
    brute: bool,
    /// Compare with the complementary minors of a square matrix.
    #[arg(long)]
    dual: bool,
    #[arg(long)]
    confirm_large: bool,
}

#[derive(Args, Debug)]
struct ExportArgs {
    #[arg(long)]
    t: u32,
    #[arg(long)]
    m: u32,
    #[arg(long)]
    n: u32,
    /// Largest degree exported.
    #[arg(long)]
    d: u32,
}

#[derive(Args, Debug)]
struct TshapeArgs {
    #[arg(long)]
    t: u32,
    #[arg(long)]
    d: u32,
    /// With --n and --d 3: also list the degree-3 shapes fitting m x n that
    /// carry a minimal relation by the shape criterion.
    #[arg(long, requires = "n")]
    m: Option<u32>,
    #[arg(long, requires = "m")]
    n: Option<u32>,
    #[arg(long)]
    confirm_large: bool,
}

enum Fail {
    Usage(String),
    Core(Error),
    Io(String),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail::Core(e)
    }
}

type Out = Result<String, Fail>;

fn usage(msg: impl Into<String>) -> Fail {
    Fail::Usage(msg.into())
}

fn pick(format: Option<Format>, default: Format, allowed: &[Format]) -> Result<Format, Fail> {
    let f = format.unwrap_or(default);
    if !allowed.contains(&f) {
        let names: Vec<&str> = allowed.iter().map(|f| format_name(*f)).collect();
        return Err(usage(format!("--format {} is not supported here (use {})", format_name(f), names.join(", "))));
    }
    Ok(f)
}

fn format_name(f: Format) -> &'static str {
    match f {
        Format::Json => "json",
        Format::Text => "text",
        Format::Csv => "csv",
    }
}

fn json_line<T: Serialize>(v: &T) -> String {
    let mut s = json::line(v);
    s.push('\n');
    s
}

fn parse_partition(s: &str) -> Result<Partition, Fail> {
    Ok(s.parse()?)
}

fn parse_bishape(s: &str) -> Result<BiShape, Fail> {
    Ok(s.parse()?)
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n.saturating_sub(k));
    let mut r: u128 = 1;
    for i in 0..k {
        r = match r.checked_mul(n - i) {
            Some(x) => x / (i + 1),
            None => return u128::MAX,
        };
    }
    r
}

/// Runs the command line `args` (program name first), writing results to
/// `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(text.as_bytes());
                    EXIT_OK
                }
                _ => {
                    let _ = err.write_all(text.as_bytes());
                    EXIT_USAGE
                }
            };
        }
    };
    let mut ctx = Ctx { cache: resolve_dir(cli.cache_dir.clone()).map(PlethysmCache::new), notes: String::new() };
    let result = ctx.dispatch(&cli);
    let _ = err.write_all(ctx.notes.as_bytes());
    match result {
        Ok(s) => {
            if out.write_all(s.as_bytes()).and_then(|_| out.flush()).is_err() {
                return EXIT_INTERNAL;
            }
            EXIT_OK
        }
        Err(Fail::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}\n\nFor more information, try '--help'.");
            EXIT_USAGE
        }
        Err(Fail::Io(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_DOMAIN
        }
        Err(Fail::Core(e)) => {
            let hint = if matches!(e, Error::CapExceeded { .. }) { " (rerun with --confirm-large)" } else { "" };
            let _ = writeln!(err, "error: {e}{hint}");
            if e.is_domain() {
                EXIT_DOMAIN
            } else {
                EXIT_INTERNAL
            }
        }
    }
}

struct Ctx {
    cache: Option<PlethysmCache>,
    /// Diagnostics for stderr: cost estimates and cache warnings.
    notes: String,
}

impl Ctx {
    fn dispatch(&mut self, cli: &Cli) -> Out {
        let f = cli.format;
        match &cli.cmd {
            Cmd::Decompose(a) => self.decompose(a, f),
            Cmd::Plethysm(a) => self.plethysm(a, f),
            Cmd::Relation(a) => relation(a, f),
            Cmd::Verify(a) => self.verify(a, f),
            Cmd::Minimality(a) => self.minimality(a, f),
            Cmd::Regularity(a) => regularity_cmd(a, f),
            Cmd::Hilbert(a) => self.hilbert(a, f),
            Cmd::Export(a) => export(a, f),
            Cmd::Tshape(a) => self.tshape(a, f),
        }
    }

    /// A character engine seeded from the cache, if there is one.
    fn engine(&mut self, large: bool) -> SymFunc {
        let mut sf = if large { SymFunc::with_cap(SYMFUNC_CAP_LARGE) } else { SymFunc::new() };
        if let Some(c) = &mut self.cache {
            if let Err(e) = c.load_into(&mut sf) {
                let _ = writeln!(self.notes, "warning: ignoring plethysm cache {}: {e}", c.path().display());
            }
        }
        sf
    }

    fn save(&mut self, sf: &SymFunc) {
        if let Some(c) = &self.cache {
            if let Err(e) = c.store(sf) {
                let _ = writeln!(self.notes, "warning: could not write plethysm cache {}: {e}", c.path().display());
            }
        }
    }

    /// Runs `body` with an engine and stores what it learned, also on error.
    fn with_engine<T>(&mut self, large: bool, body: impl FnOnce(&mut SymFunc, &mut String) -> Result<T, Fail>) -> Result<T, Fail> {
        let mut sf = self.engine(large);
        let mut notes = String::new();
        let r = body(&mut sf, &mut notes);
        self.notes.push_str(&notes);
        self.save(&sf);
        r
    }

    fn decompose(&mut self, a: &DecomposeArgs, f: Option<Format>) -> Out {
        let t = a.t;
        match (&a.shape, a.d) {
            (Some(s), _) if s.contains('|') => {
                let fmt = pick(f, Format::Json, &[Format::Json, Format::Text])?;
                let b = parse_bishape(s)?;
                let Some(d) = b.admissible_degree(t) else {
                    return Err(Error::InvalidInput(format!("{b} is not admissible for t = {t} in a common degree")).into());
                };
                check_degree(a.d, d)?;
                let (s, j) = self.with_engine(a.confirm_large, |sf, _| Ok((sf.mult_in_s(&b, t)?, sf.mult_in_j(&b, t)?)))?;
                #[derive(Serialize)]
                struct Info {
                    bishape: BiShapeJson,
                    t: u32,
                    d: u32,
                    s: u64,
                    j: u64,
                }
                Ok(match fmt {
                    Format::Json => json_line(&Info { bishape: (&b).into(), t, d, s, j }),
                    _ => format!("{b} t={t} d={d} S={s} J={j}\n"),
                })
            }
            (Some(s), _) => {
                let fmt = pick(f, Format::Json, &[Format::Json, Format::Text])?;
                let lambda = parse_partition(s)?;
                let d = lambda
                    .admissible_degree(t)
                    .ok_or_else(|| Error::InvalidInput(format!("{lambda} is not admissible for t = {t}")))?;
                check_degree(a.d, d)?;
                let mult = tensor_multiplicity(&lambda, t)?;
                let preds = predecessors(&lambda, t)?;
                let succs = successors(&lambda, t);
                let single = self.with_engine(a.confirm_large, |sf, _| Ok(is_single_type(&lambda, t, sf)?))?;
                #[derive(Serialize)]
                struct Info {
                    shape: Vec<u32>,
                    t: u32,
                    d: u32,
                    tensor_multiplicity: u128,
                    predecessors: Vec<Vec<u32>>,
                    successors: Vec<Vec<u32>>,
                    single_type: Option<Vec<u32>>,
                }
                let info = Info {
                    shape: json::partition(&lambda),
                    t,
                    d,
                    tensor_multiplicity: mult,
                    predecessors: preds.iter().map(json::partition).collect(),
                    successors: succs.iter().map(json::partition).collect(),
                    single_type: single.as_ref().map(json::partition),
                };
                Ok(match fmt {
                    Format::Json => json_line(&info),
                    _ => {
                        let list = |v: &[Partition]| v.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" ");
                        let single = single.map_or("none".to_string(), |p| p.to_string());
                        format!(
                            "shape {lambda} t={t} d={d}\nmultiplicity {mult}\npredecessors {}\nsuccessors {}\nsingle type {single}\n",
                            list(&preds),
                            list(&succs)
                        )
                    }
                })
            }
            (None, Some(d)) => {
                let fmt = pick(f, Format::Text, &[Format::Json, Format::Text, Format::Csv])?;
                let shapes = Partition::admissible(t, d);
                let rows = self.with_engine(a.confirm_large, |sf, _| {
                    let mut rows = Vec::new();
                    for g in &shapes {
                        for l in &shapes {
                            let b = BiShape::new(g.clone(), l.clone());
                            let s = sf.mult_in_s(&b, t)?;
                            if s > 0 {
                                let j = sf.mult_in_j(&b, t)?;
                                rows.push((b, s, j));
                            }
                        }
                    }
                    Ok(rows)
                })?;
                #[derive(Serialize)]
                struct Row {
                    bishape: BiShapeJson,
                    s: u64,
                    j: u64,
                }
                #[derive(Serialize)]
                struct Table {
                    t: u32,
                    d: u32,
                    components: Vec<Row>,
                }
                Ok(match fmt {
                    Format::Json => json_line(&Table {
                        t,
                        d,
                        components: rows.iter().map(|(b, s, j)| Row { bishape: b.into(), s: *s, j: *j }).collect(),
                    }),
                    Format::Csv => {
                        let mut o = String::from("bishape,s,j\n");
                        for (b, s, j) in &rows {
                            let _ = writeln!(o, "{},{s},{j}", csv_field(&b.to_string()));
                        }
                        o
                    }
                    Format::Text => {
                        let w = rows.iter().map(|(b, _, _)| b.to_string().len()).max().unwrap_or(0).max(7);
                        let mut o = format!("{:<w$}  S  J\n", "bishape");
                        for (b, s, j) in &rows {
                            let _ = writeln!(o, "{:<w$}  {s}  {j}", b.to_string());
                        }
                        o
                    }
                })
            }
            (None, None) => Err(usage("decompose needs --d or --shape")),
        }
    }

    fn plethysm(&mut self, a: &PlethysmArgs, f: Option<Format>) -> Out {
        let fmt = pick(f, Format::Json, &[Format::Json, Format::Text, Format::Csv])?;
        let mu = parse_partition(&a.mu)?;
        let e = self.with_engine(a.confirm_large, |sf, _| Ok(sf.plethysm_exterior(&mu, a.t)?))?;
        #[derive(Serialize)]
        struct P {
            mu: Vec<u32>,
            t: u32,
            terms: Vec<TermJson>,
        }
        Ok(match fmt {
            Format::Json => json_line(&P { mu: json::partition(&mu), t: a.t, terms: json::expansion(&e) }),
            Format::Text => format!("{e}\n"),
            Format::Csv => {
                let mut o = String::from("partition,mult\n");
                for (p, m) in e.terms() {
                    let _ = writeln!(o, "{},{m}", csv_field(&p.to_string()));
                }
                o
            }
        })
    }

    fn verify(&mut self, a: &VerifyArgs, f: Option<Format>) -> Out {
        let fmt = pick(f, Format::Json, &[Format::Json, Format::Text])?;
        if a.probe && a.seed.is_none() {
            return Err(usage("--probe needs an explicit --seed"));
        }
        let source = match (&a.poly, &a.file) {
            (Some(p), None) => p.clone(),
            (None, Some(path)) => {
                std::fs::read_to_string(path).map_err(|e| Fail::Io(format!("cannot read {}: {e}", path.display())))?
            }
            _ => return Err(usage("verify needs --poly or --file")),
        };
        let polys = source
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(parse_polynomial)
            .collect::<Result<Vec<_>, _>>()?;
        if polys.is_empty() {
            return Err(Error::InvalidInput("no polynomial given".into()).into());
        }
        let mut results = Vec::new();
        if a.probe {
            let _ = writeln!(self.notes, "cost estimate: {} polynomial(s) x {} evaluation(s)", polys.len(), a.trials);
            for p in &polys {
                results.push(random_probe(p, a.m, a.n, a.trials, a.seed.unwrap_or_default())?);
            }
        } else {
            let cost: u128 = polys.iter().map(expansion_cost).fold(0u128, u128::saturating_add);
            let _ = writeln!(self.notes, "cost estimate: {cost} products of determinant terms");
            if cost > VERIFY_COST_CAP && !a.confirm_large {
                return Err(Error::CapExceeded {
                    what: "products of determinant terms",
                    needed: cost.min(u64::MAX as u128) as u64,
                    cap: VERIFY_COST_CAP as u64,
                }
                .into());
            }
            for p in &polys {
                results.push(is_relation(p, a.m, a.n)?);
            }
        }
        let method = if a.probe { "probe" } else { "exact" };
        #[derive(Serialize)]
        struct R {
            degree: usize,
            terms: usize,
            relation: bool,
        }
        #[derive(Serialize)]
        struct V {
            m: u32,
            n: u32,
            method: &'static str,
            all: bool,
            results: Vec<R>,
        }
        Ok(match fmt {
            Format::Json => json_line(&V {
                m: a.m,
                n: a.n,
                method,
                all: results.iter().all(|&x| x),
                results: polys
                    .iter()
                    .zip(&results)
                    .map(|(p, &r)| R { degree: p.degree(), terms: p.len(), relation: r })
                    .collect(),
            }),
            _ => results
                .iter()
                .map(|&r| match (r, a.probe) {
                    (true, false) => "relation\n",
                    (true, true) => "relation (probable)\n",
                    (false, _) => "not a relation\n",
                })
                .collect(),
        })
    }

    fn minimality(&mut self, a: &MinimalityArgs, f: Option<Format>) -> Out {
        let fmt = pick(f, Format::Json, &[Format::Json, Format::Text])?;
        let b = parse_bishape(&a.shape)?;
        let t = a.t;
        let d = b
            .admissible_degree(t)
            .ok_or_else(|| Error::InvalidInput(format!("{b} is not admissible for t = {t} in a common degree")))?;
        let size = weight_monomials(t, &BiWeight::highest(&b))?.len();
        let mut opts = MinimalityOptions {
            tableaux_per_side: a.tableaux,
            exhaustive: !a.no_exhaustive,
            ambient: a.m.zip(a.n),
            order_seed: a.seed,
            ..MinimalityOptions::default()
        };
        if a.confirm_large {
            opts.max_exhaustive_degree = 5;
            opts.max_exhaustive_td = 12;
        }
        let exhaustive_ok = opts.exhaustive && d <= opts.max_exhaustive_degree && t * d <= opts.max_exhaustive_td;
        let _ = writeln!(
            self.notes,
            "cost estimate: degree {d}, {size} monomials in the target weight space, exhaustive count {}",
            if exhaustive_ok { "allowed" } else { "skipped" }
        );
        if size > MINIMALITY_COST_CAP && !a.confirm_large {
            return Err(Error::CapExceeded {
                what: "monomials in the target weight space",
                needed: size as u64,
                cap: MINIMALITY_COST_CAP as u64,
            }
            .into());
        }
        let v = self.with_engine(a.confirm_large, |sf, _| Ok(minimality_check(&b, t, &opts, sf)?))?;
        Ok(match fmt {
            Format::Json => json_line(&VerdictJson::new(&v, t)),
            _ => {
                let mut o = format!(
                    "{} t={t} d={}: {} via {} (rank {} of {})\n",
                    v.bishape,
                    v.degree,
                    json::status_name(v.status),
                    json::method_name(v.method),
                    v.rank_found,
                    v.rank_needed
                );
                for w in &v.witnesses {
                    let _ = writeln!(o, "  from {} with {} | {}: {} terms", w.source, w.row_tableau, w.col_tableau, w.terms);
                }
                o
            }
        })
    }

    fn hilbert(&mut self, a: &HilbertArgs, f: Option<Format>) -> Out {
        let fmt = pick(f, Format::Json, &[Format::Json, Format::Text, Format::Csv])?;
        let (t, m, n) = (a.t, a.m, a.n);
        if t == 0 || t > m.min(n) {
            return Err(Error::OutOfRange(format!("need 1 <= t <= min(m, n); got t={t}, {m} x {n}")).into());
        }
        let values = (0..=a.d).map(|d| hilbert_at(t, m, n, d)).collect::<Result<Vec<_>, _>>()?;
        let brute = if a.brute {
            let minors = binomial(m as u128, t as u128) * binomial(n as u128, t as u128);
            let count = binomial(minors + a.d as u128 - 1, a.d as u128);
            let _ = writeln!(self.notes, "cost estimate: {count} monomials in minors at degree {}", a.d);
            let cap = if a.confirm_large { u64::MAX } else { BRUTE_MONOMIAL_CAP };
            Some((0..=a.d).map(|d| brute_dim_at(t, m, n, d, cap)).collect::<Result<Vec<_>, _>>()?)
        } else {
            None
        };
        let dual = if a.dual {
            if m != n || t >= n {
                return Err(Error::OutOfRange(format!("--dual needs a square matrix and t < n; got t={t}, {m} x {n}")).into());
            }
            Some(duality_check(t, n, a.d)?)
        } else {
            None
        };
        #[derive(Serialize)]
        struct Row {
            d: u32,
            dim: u128,
            #[serde(skip_serializing_if = "Option::is_none")]
            brute: Option<u64>,
        }
        #[derive(Serialize)]
        struct H {
            t: u32,
            m: u32,
            n: u32,
            values: Vec<Row>,
            #[serde(skip_serializing_if = "Option::is_none")]
            dual_agrees: Option<bool>,
        }
        let rows: Vec<Row> = values
            .iter()
            .enumerate()
            .map(|(d, &dim)| Row { d: d as u32, dim, brute: brute.as_ref().map(|b| b[d]) })
            .collect();
        Ok(match fmt {
            Format::Json => json_line(&H { t, m, n, values: rows, dual_agrees: dual }),
            Format::Csv | Format::Text => {
                let sep = if fmt == Format::Csv { "," } else { " " };
                let mut o = String::new();
                if fmt == Format::Csv {
                    o.push_str(if brute.is_some() { "d,dim,brute\n" } else { "d,dim\n" });
                }
                for r in &rows {
                    let _ = write!(o, "{}{sep}{}", r.d, r.dim);
                    if let Some(b) = r.brute {
                        let _ = write!(o, "{sep}{b}");
                    }
                    o.push('\n');
                }
                if let Some(ok) = dual {
                    if fmt == Format::Text {
                        let _ = writeln!(o, "dual {}", if ok { "agrees" } else { "differs" });
                    } else {
                        let _ = writeln!(self.notes, "dual {}", if ok { "agrees" } else { "differs" });
                    }
                }
                o
            }
        })
    }

    fn tshape(&mut self, a: &TshapeArgs, f: Option<Format>) -> Out {
        let fmt = pick(f, Format::Text, &[Format::Json, Format::Text])?;
        let found = classify_tshape(a.t, a.d)?;
        let extra = match a.m.zip(a.n) {
            Some((m, n)) => {
                if a.d != 3 {
                    return Err(Error::OutOfRange("the shape criterion with --m/--n is for --d 3".into()).into());
                }
                Some(self.with_engine(a.confirm_large, |sf, _| Ok(shape_relations_deg3(a.t, m, n, sf)?))?)
            }
            None => None,
        };
        #[derive(Serialize)]
        struct T {
            t: u32,
            d: u32,
            bishapes: Vec<BiShapeJson>,
            #[serde(skip_serializing_if = "Option::is_none")]
            shape_relations: Option<Vec<BiShapeJson>>,
        }
        Ok(match fmt {
            Format::Json => json_line(&T {
                t: a.t,
                d: a.d,
                bishapes: found.iter().map(Into::into).collect(),
                shape_relations: extra.as_ref().map(|v| v.iter().map(Into::into).collect()),
            }),
            _ => {
                let mut o: String = found.iter().map(|b| format!("{b}\n")).collect();
                if let Some(v) = &extra {
                    o.push_str("shape relations:\n");
                    for b in v {
                        let _ = writeln!(o, "{b}");
                    }
                }
                o
            }
        })
    }
}

fn check_degree(given: Option<u32>, actual: u32) -> Result<(), Fail> {
    match given {
        Some(d) if d != actual => Err(Error::InvalidInput(format!("the shape has degree {actual}, not {d}")).into()),
        _ => Ok(()),
    }
}

/// Products of determinant terms needed to expand `p`: `t!^deg` per term.
fn expansion_cost(p: &MinorPolynomial) -> u128 {
    p.terms()
        .keys()
        .map(|mono| {
            mono.iter().fold(1u128, |acc, s| {
                let fact = (1..=s.size() as u128).fold(1u128, |a, k| a.saturating_mul(k));
                acc.saturating_mul(fact)
            })
        })
        .fold(0u128, u128::saturating_add)
}

fn segment(s: &str) -> Result<InitialSegment, Fail> {
    let items = s
        .split(';')
        .map(|part| {
            let idx = part
                .split(',')
                .map(|x| x.trim().parse::<u8>().map_err(|_| Error::InvalidInput(format!("bad index {:?}", x.trim()))))
                .collect::<Result<Vec<_>, _>>()?;
            ExtIndex::new(idx)
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(InitialSegment::new(items)?)
}

/// `(γ|λ)` read off a highest weight: rows count `ᵗγ`, columns `-ᵗλ`.
fn shape_of(p: &MinorPolynomial) -> Result<BiShape, Fail> {
    let w = p.bi_weight()?;
    let side = |v: Vec<i64>| -> Result<Partition, Fail> {
        let mut v: Vec<u32> = v.into_iter().map(|x| x.unsigned_abs() as u32).filter(|&x| x > 0).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition::new(v)?.transpose())
    };
    Ok(BiShape::new(side(w.row.0)?, side(w.col.0)?))
}

fn relation(a: &RelationArgs, f: Option<Format>) -> Out {
    let fmt = pick(f, Format::Json, &[Format::Json, Format::Text])?;
    let need = |x: Option<u32>, name: &str| x.ok_or_else(|| usage(format!("--kind {:?} needs --{name}", a.kind).to_lowercase()));
    let t = a.t;
    let mut p = match a.kind {
        Kind::F => quadratic_relation(t, need(a.u, "u")?, need(a.v, "v")?)?,
        Kind::G => even_cubic(t, need(a.u, "u")?)?,
        Kind::H => odd_cubic(t, need(a.u, "u")?)?,
        Kind::Det => {
            let (Some(r), Some(c)) = (&a.rows, &a.cols) else {
                return Err(usage("--kind det needs --rows and --cols"));
            };
            determinantal_relation(t, &segment(r)?, &segment(c)?)?
        }
    };
    if a.mirror {
        p = mirror(&p);
    }
    let b = shape_of(&p)?;
    #[derive(Serialize)]
    struct R {
        kind: &'static str,
        t: u32,
        bishape: BiShapeJson,
        degree: usize,
        terms: usize,
        polynomial: String,
    }
    let kind = match a.kind {
        Kind::F => "f",
        Kind::G => "g",
        Kind::H => "h",
        Kind::Det => "det",
    };
    Ok(match fmt {
        Format::Json => json_line(&R {
            kind,
            t,
            bishape: (&b).into(),
            degree: p.degree(),
            terms: p.len(),
            polynomial: p.to_string(),
        }),
        _ => format!("{p}\n"),
    })
}

fn regularity_cmd(a: &RegularityArgs, f: Option<Format>) -> Out {
    let fmt = pick(f, Format::Json, &[Format::Json, Format::Text])?;
    let r = regularity(a.t, a.m, a.n)?;
    let bound = if a.bound { Some(degree_bound(a.t, a.m, a.n)?) } else { None };
    Ok(match fmt {
        Format::Json => {
            let mut j = RegularityJson::from(&r);
            j.degree_bound = bound;
            json_line(&j)
        }
        _ => {
            let mut o = match r.case {
                RegCase::Excluded if r.t == r.m && r.n > r.t + 1 => {
                    "excluded: maximal minors, the relations are the Plücker relations in degree 2\n".to_string()
                }
                RegCase::Excluded => "excluded: there are no relations among the minors\n".to_string(),
                RegCase::I => format!("case i, reg = {}\n", r.reg.unwrap_or_default()),
                RegCase::II => format!(
                    "case ii, k0 = {}, reg = {}\n",
                    r.k0.unwrap_or_default(),
                    r.reg.unwrap_or_default()
                ),
            };
            if let Some(b) = bound {
                let _ = writeln!(o, "degree bound {b}");
            }
            o
        }
    })
}

fn export(a: &ExportArgs, f: Option<Format>) -> Out {
    let fmt = pick(f, Format::Text, &[Format::Json, Format::Text])?;
    let text = export_generators(a.t, a.m, a.n, a.d)?;
    Ok(match fmt {
        Format::Json => {
            #[derive(Serialize)]
            struct E<'a> {
                t: u32,
                m: u32,
                n: u32,
                generators: Vec<&'a str>,
            }
            json_line(&E { t: a.t, m: a.m, n: a.n, generators: text.lines().collect() })
        }
        _ => text,
    })
}
