//! The `pgst` command line: argument parsing, report rendering and exit
//! codes. Vertices are 1-indexed on the command line and in every report.
//!
//! Exit codes: 0 when an analysis completes (whatever the verdict), 2 on a
//! parse or precondition error, 3 when the corpus check finds a mismatch.

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use serde::Serialize;

use crate::algebra::{factor_over_q, parse_rational, rat, UniPoly};
use crate::census::{census, DEFAULT_CENSUS_N};
use crate::corpus::{bundled_corpus, check_corpus};
use crate::document::GraphDocument;
use crate::engine::{decide_with_context, Certificate, DecideOptions, PgstVerdict};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::paths::{
    build_modified_path, classify_modified_path, classify_path, modified_path_quotients, ModifiedClause, PathReason,
    Weight,
};
use crate::simulator::{numeric_eigen, search_max_fidelity, FidelityTrace, SearchOptions};
use crate::spectra::SpectralContext;

pub const EXIT_OK: u8 = 0;
pub const EXIT_CONTRACT: u8 = 2;
pub const EXIT_MISMATCH: u8 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "pgst",
    version,
    about = "Decide, certify or refute pretty good state transfer exactly"
)]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, clap::Args)]
pub struct EngineArgs {
    /// Decimal digits for the numeric relation search.
    #[arg(long, default_value_t = 60, value_name = "D")]
    pub precision: u32,
    /// Largest coefficient accepted in a numeric relation.
    #[arg(long, default_value = "1000000", value_name = "B")]
    pub coeff_bound: BigInt,
    /// Skip the numeric relation search.
    #[arg(long)]
    pub exact: bool,
}

impl EngineArgs {
    fn options(&self) -> DecideOptions {
        DecideOptions {
            heuristic: !self.exact,
            precision: self.precision,
            coeff_bound: self.coeff_bound.clone(),
            ..DecideOptions::default()
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Analyze a graph document, for its marked pair or every pair.
    Analyze {
        file: PathBuf,
        #[arg(long, num_args = 2, value_names = ["X", "Y"])]
        pair: Option<Vec<usize>>,
        /// Corroborate with a fidelity search up to this time.
        #[arg(long, value_name = "T_MAX")]
        simulate: Option<f64>,
        #[command(flatten)]
        engine: EngineArgs,
    },
    /// Classify PGST between vertices A and B of the path on N vertices.
    Path { n: usize, a: usize, b: usize },
    /// Classify PGST between the ends of the modified path P_N^(M,w).
    Modpath {
        n: usize,
        m: usize,
        /// Also run the engine with w fixed to this rational.
        #[arg(long, value_name = "P/Q")]
        specialize: Option<String>,
        #[command(flatten)]
        engine: EngineArgs,
    },
    /// Check the bundled corpus.
    Corpus,
    /// List small connected graphs with pairs certified by irreducibility.
    Census {
        #[arg(long, default_value_t = DEFAULT_CENSUS_N, value_name = "K")]
        max_n: usize,
    },
    /// Search for the maximum fidelity between two vertices.
    Simulate {
        file: PathBuf,
        #[arg(long, num_args = 2, value_names = ["X", "Y"])]
        pair: Option<Vec<usize>>,
        #[arg(long, default_value_t = 1000.0, value_name = "T_MAX")]
        t_max: f64,
        /// Grid intervals on [0, T_MAX].
        #[arg(long, default_value_t = 1_000_000)]
        grid: usize,
        /// Write the grid samples as CSV.
        #[arg(long, value_name = "PATH")]
        csv: Option<PathBuf>,
    },
}

/// Parses the process arguments, runs, and returns the exit code.
/// `PGST_THREADS` fixes the worker count.
pub fn main_entry() -> u8 {
    if let Some(k) = std::env::var("PGST_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(k.max(1)).build_global();
    }
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match run(&cli, &mut out) {
        Ok(code) => code,
        Err(e) => {
            let _ = out.flush();
            eprintln!("error: {e}");
            EXIT_CONTRACT
        }
    }
}

pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<u8> {
    let (text, code) = match &cli.command {
        Command::Analyze {
            file,
            pair,
            simulate,
            engine,
        } => analyze(file, pair.as_deref(), *simulate, &engine.options(), cli.json)?,
        Command::Path { n, a, b } => path(*n, *a, *b, cli.json)?,
        Command::Modpath {
            n,
            m,
            specialize,
            engine,
        } => modpath(*n, *m, specialize.as_deref(), &engine.options(), cli.json)?,
        Command::Corpus => corpus(cli.json)?,
        Command::Census { max_n } => census_cmd(*max_n, cli.json)?,
        Command::Simulate {
            file,
            pair,
            t_max,
            grid,
            csv,
        } => simulate(file, pair.as_deref(), *t_max, *grid, csv.as_deref(), cli.json)?,
    };
    out.write_all(text.as_bytes())
        .map_err(|e| Error::Precondition(format!("cannot write output: {e}")))?;
    Ok(code)
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("reports serialize");
    s.push('\n');
    s
}

/// `(x - 1)(x^3 - 3x - 1)`, with the unit when it is not 1.
pub fn factored(p: &UniPoly) -> String {
    let Ok(f) = factor_over_q(p) else {
        return p.to_string();
    };
    if f.factors.len() <= 1 && f.factors.iter().all(|(_, e)| *e == 1) && f.unit == rat(1) {
        return p.to_string();
    }
    let mut s = if f.unit == rat(1) {
        String::new()
    } else {
        format!("{} ", f.unit)
    };
    for (q, e) in &f.factors {
        let q = q.to_string();
        if f.factors.len() == 1 || q.contains(' ') {
            let _ = write!(s, "({q})");
        } else {
            s.push_str(&q);
        }
        if *e > 1 {
            let _ = write!(s, "^{e}");
        }
    }
    s
}

pub fn describe_certificate(c: &Certificate) -> String {
    match c {
        Certificate::Sufficient {
            plus_trace,
            plus_degree,
            minus_trace,
            minus_degree,
        } => format!(
            "P+ and P- are irreducible with trace/degree {plus_trace}/{plus_degree} and {minus_trace}/{minus_degree}"
        ),
        Certificate::OddDegree { f_plus, f_minus } => {
            format!("odd-degree divisors f+ = {f_plus} of P+ and f- = {f_minus} of P- share the trace/degree ratio")
        }
        Certificate::ThreeFactor { side, f, g, h } => format!(
            "f = {f} and g = {g} divide {}, h = {h} divides {}; tr f and tr(f)deg(g) - tr(g)deg(f) are odd",
            side.symbol(),
            side.other().symbol()
        ),
        Certificate::FactorRelation(r) => {
            let terms: Vec<String> = r
                .terms
                .iter()
                .map(|t| format!("{} * [{}] in {}", t.coefficient, t.factor, t.side.symbol()))
                .collect();
            format!("integer relation with odd weight on P- roots: {}", terms.join(", "))
        }
    }
}

fn user_pair(pair: &[usize], n: usize) -> Result<(usize, usize)> {
    let check = |v: usize| {
        if v == 0 || v > n {
            Err(Error::Precondition(format!("vertex {v} is not in 1..={n}")))
        } else {
            Ok(v - 1)
        }
    };
    Ok((check(pair[0])?, check(pair[1])?))
}

#[derive(Serialize)]
struct PairReport {
    /// 1-indexed.
    x: usize,
    y: usize,
    p_plus_factored: String,
    p_minus_factored: String,
    verdict: PgstVerdict,
    simulation: Option<FidelityTrace>,
}

#[derive(Serialize)]
struct AnalyzeReport {
    name: String,
    n: usize,
    edges: usize,
    char_poly: String,
    char_poly_factored: String,
    pairs: Vec<PairReport>,
}

fn simulate_pair(g: &Graph, x: usize, y: usize, t_max: f64) -> Result<FidelityTrace> {
    let spec = numeric_eigen(&g.adjacency())?;
    let mut trace = search_max_fidelity(&spec, x, y, &SearchOptions::new(t_max))?;
    trace.pair = (x + 1, y + 1);
    Ok(trace)
}

fn analyze(
    file: &std::path::Path,
    pair: Option<&[usize]>,
    simulate: Option<f64>,
    options: &DecideOptions,
    json: bool,
) -> Result<(String, u8)> {
    let doc = GraphDocument::read(file)?;
    let g = &doc.graph;
    let n = g.vertex_count();
    let pairs: Vec<(usize, usize)> = match (pair, doc.pair) {
        (Some(p), _) => vec![user_pair(p, n)?],
        (None, Some(p)) => vec![p],
        (None, None) => (0..n).flat_map(|x| (x + 1..n).map(move |y| (x, y))).collect(),
    };
    if let Some(t) = simulate {
        if !(t > 0.0) {
            return Err(Error::Precondition("--simulate needs a positive horizon".into()));
        }
    }
    let ctx = SpectralContext::new(g);
    let mut reports = Vec::new();
    for (x, y) in pairs {
        let mut verdict = decide_with_context(&ctx, x, y, options)?;
        verdict.x += 1;
        verdict.y += 1;
        let simulation = match simulate {
            Some(t) => Some(simulate_pair(g, x, y, t)?),
            None => None,
        };
        reports.push(PairReport {
            x: x + 1,
            y: y + 1,
            p_plus_factored: factored(&verdict.pair.plus),
            p_minus_factored: factored(&verdict.pair.minus),
            verdict,
            simulation,
        });
    }
    let report = AnalyzeReport {
        name: doc.name.clone(),
        n,
        edges: g.edge_count(),
        char_poly: ctx.char_poly().to_string(),
        char_poly_factored: factored(ctx.char_poly()),
        pairs: reports,
    };
    if json {
        return Ok((to_json(&report), EXIT_OK));
    }
    let mut s = String::new();
    let title = if report.name.is_empty() { "graph" } else { &report.name };
    let _ = writeln!(s, "{title}: {n} vertices, {} edges", report.edges);
    let _ = writeln!(s, "phi(x) = {}", report.char_poly_factored);
    for r in &report.pairs {
        let v = &r.verdict;
        let _ = writeln!(s, "\npair ({}, {})", r.x, r.y);
        let _ = writeln!(s, "  P+(x) = {}", r.p_plus_factored);
        let _ = writeln!(s, "  P-(x) = {}", r.p_minus_factored);
        if let Some(z) = &v.pair.zero {
            let _ = writeln!(s, "  P0(x) = {}", factored(z));
        }
        let c = &v.cospectrality;
        let _ = writeln!(
            s,
            "  cospectral: {}, parallel: {}, strongly cospectral: {}",
            yes(c.cospectral),
            yes(c.parallel),
            yes(c.strongly_cospectral)
        );
        let _ = writeln!(s, "  verdict: {}", v.status);
        if let Some(rule) = v.rule {
            let _ = writeln!(s, "  rule: {rule} ({})", rule.description());
        }
        if let Some(cert) = &v.certificate {
            let _ = writeln!(s, "  certificate: {}", describe_certificate(cert));
        }
        if let Some(e) = &v.evidence {
            let ell: Vec<String> = e.ell.iter().map(|c| c.to_string()).collect();
            let m: Vec<String> = e.m.iter().map(|c| c.to_string()).collect();
            let _ = writeln!(
                s,
                "  relation: l = [{}], m = [{}], residual {:e}",
                ell.join(", "),
                m.join(", "),
                e.residual
            );
        }
        if v.search_truncated {
            let _ = writeln!(s, "  note: a factor search hit its combination cap");
        }
        for note in &v.notes {
            let _ = writeln!(s, "  note: {note}");
        }
        if let Some(t) = &r.simulation {
            let _ = writeln!(
                s,
                "  simulated: max fidelity {:.12} at t = {:.9} (evidence up to t = {})",
                t.best_fidelity, t.best_t, t.t_max
            );
        }
    }
    Ok((s, EXIT_OK))
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn describe_path_reason(r: &PathReason) -> String {
    match r {
        PathReason::PowerOfTwo { t } => format!("n = 2^{t} - 1"),
        PathReason::PrimeMinusOne { p } => format!("n = {p} - 1 with {p} an odd prime"),
        PathReason::TwoPowerPrime { t, p } => {
            format!(
                "n = 2^{t} * {p} - 1 with {p} an odd prime and a a multiple of 2^{}",
                t - 1
            )
        }
        PathReason::NotMirrorPair => "a + b differs from n + 1".into(),
        PathReason::WrongOffset { t, p } => {
            format!("n = 2^{t} * {p} - 1 but a is not a multiple of 2^{}", t - 1)
        }
        PathReason::NoClause => "n + 1 is not 2^t, an odd prime, or 2^t times an odd prime".into(),
    }
}

fn path(n: usize, a: usize, b: usize, json: bool) -> Result<(String, u8)> {
    let c = classify_path(n, a, b)?;
    if json {
        return Ok((to_json(&c), EXIT_OK));
    }
    let verdict = match c.verdict {
        crate::paths::PathVerdict::Pgst => "PGST",
        crate::paths::PathVerdict::NoPgst => "NO_PGST",
    };
    Ok((
        format!(
            "P_{n}, vertices {a} and {b}: {verdict} ({})\n",
            describe_path_reason(&c.reason)
        ),
        EXIT_OK,
    ))
}

pub fn describe_modified_clause(c: &ModifiedClause) -> String {
    match c {
        ModifiedClause::CoprimeOdd => "M odd, N even, gcd(N + 1, M) = 1".into(),
        ModifiedClause::EvenM => "M even".into(),
        ModifiedClause::PrimeThreeModFour { q } => {
            format!("M odd, N = 2 mod 4, and {q} = 3 mod 4 divides gcd(N + 1, M)")
        }
        ModifiedClause::Open => "no clause applies".into(),
    }
}

#[derive(Serialize)]
struct ModpathReport {
    classification: crate::paths::ModifiedPathClassification,
    pi_plus: String,
    pi_minus: String,
    specialized: Option<SpecializedReport>,
}

#[derive(Serialize)]
struct SpecializedReport {
    w: String,
    verdict: PgstVerdict,
}

fn modpath(n: usize, m: usize, specialize: Option<&str>, options: &DecideOptions, json: bool) -> Result<(String, u8)> {
    let classification = classify_modified_path(n, m)?;
    let (pi_plus, pi_minus) = modified_path_quotients(n, classification.m)?;
    let specialized = match specialize {
        Some(w) => {
            let w = parse_rational(w)?;
            let mp = build_modified_path(n, classification.m, Weight::Value(w.clone()))?;
            let g = mp.graph()?;
            let mut verdict = decide_with_context(&SpectralContext::new(&g), 1, n, options)?;
            verdict.x = 1;
            verdict.y = n;
            Some(SpecializedReport {
                w: crate::algebra::rational::format_rational(&w),
                verdict,
            })
        }
        None => None,
    };
    let report = ModpathReport {
        pi_plus: pi_plus.to_string(),
        pi_minus: pi_minus.to_string(),
        classification,
        specialized,
    };
    if json {
        return Ok((to_json(&report), EXIT_OK));
    }
    let c = &report.classification;
    let mut s = String::new();
    if let Some(notice) = &c.notice {
        let _ = writeln!(s, "note: {notice}");
    }
    let verdict = match c.verdict {
        crate::paths::ModifiedVerdict::Pgst => "PGST",
        crate::paths::ModifiedVerdict::NoPgst => "NO_PGST",
        crate::paths::ModifiedVerdict::Undecided => "UNDECIDED",
    };
    let _ = writeln!(
        s,
        "P_{}^({},w), vertices 1 and {}, w transcendental: {verdict} ({})",
        c.n,
        c.m,
        c.n,
        describe_modified_clause(&c.clause)
    );
    let _ = writeln!(s, "Pi+ = {}", report.pi_plus);
    let _ = writeln!(s, "Pi- = {}", report.pi_minus);
    if let Some(sp) = &report.specialized {
        let v = &sp.verdict;
        let _ = writeln!(s, "w = {}: {}", sp.w, v.status);
        let _ = writeln!(s, "  P+(x) = {}", factored(&v.pair.plus));
        let _ = writeln!(s, "  P-(x) = {}", factored(&v.pair.minus));
        if let Some(cert) = &v.certificate {
            let _ = writeln!(s, "  certificate: {}", describe_certificate(cert));
        }
    }
    Ok((s, EXIT_OK))
}

fn corpus(json: bool) -> Result<(String, u8)> {
    let outcomes = check_corpus(&bundled_corpus())?;
    let code = if outcomes.iter().all(|o| o.passed) {
        EXIT_OK
    } else {
        EXIT_MISMATCH
    };
    if json {
        return Ok((to_json(&outcomes), code));
    }
    let mut s = String::new();
    for (i, o) in outcomes.iter().enumerate() {
        let status = if o.passed { "PASS" } else { "FAIL" };
        let _ = writeln!(s, "{status} {:>2} {} (n = {})", i + 1, o.name, o.n);
        let _ = writeln!(s, "     expected P+ = {}, P- = {}", o.expected_plus, o.expected_minus);
        if !o.matching_pairs.is_empty() {
            let pairs: Vec<String> = o
                .matching_pairs
                .iter()
                .map(|(x, y)| format!("({}, {})", x + 1, y + 1))
                .collect();
            let _ = writeln!(
                s,
                "     pairs {}: {}",
                pairs.join(" "),
                o.status.map_or("-".to_string(), |st| st.to_string())
            );
        }
        if let Some((p, m)) = &o.mismatch {
            let _ = writeln!(s, "     no pair matches; computed P+ = {p}, P- = {m}");
        }
    }
    let passed = outcomes.iter().filter(|o| o.passed).count();
    let _ = writeln!(s, "{passed}/{} entries reproduced", outcomes.len());
    Ok((s, code))
}

fn census_cmd(max_n: usize, json: bool) -> Result<(String, u8)> {
    let hits = census(max_n)?;
    if json {
        return Ok((to_json(&hits), EXIT_OK));
    }
    let mut s = String::new();
    for h in &hits {
        let edges: Vec<String> = h.edges.iter().map(|(u, v)| format!("{}-{}", u + 1, v + 1)).collect();
        let _ = writeln!(
            s,
            "n={} m={} code={} edges {}",
            h.n,
            h.edge_count,
            h.code,
            edges.join(" ")
        );
        for p in &h.pairs {
            let _ = writeln!(s, "  ({}, {}) P+ = {}, P- = {}", p.x + 1, p.y + 1, p.p_plus, p.p_minus);
        }
    }
    let _ = writeln!(s, "{} graphs with certified pairs", hits.len());
    Ok((s, EXIT_OK))
}

fn simulate(
    file: &std::path::Path,
    pair: Option<&[usize]>,
    t_max: f64,
    grid: usize,
    csv: Option<&std::path::Path>,
    json: bool,
) -> Result<(String, u8)> {
    let doc = GraphDocument::read(file)?;
    let n = doc.graph.vertex_count();
    let (x, y) = match (pair, doc.pair) {
        (Some(p), _) => user_pair(p, n)?,
        (None, Some(p)) => p,
        (None, None) => return Err(Error::Precondition("no pair given and the document marks none".into())),
    };
    let spec = numeric_eigen(&doc.graph.adjacency())?;
    let mut opts = SearchOptions::new(t_max);
    opts.grid = grid;
    opts.keep_samples = csv.is_some();
    let mut trace = search_max_fidelity(&spec, x, y, &opts)?;
    trace.pair = (x + 1, y + 1);
    if let Some(path) = csv {
        std::fs::write(path, trace.to_csv())
            .map_err(|e| Error::Precondition(format!("cannot write {}: {e}", path.display())))?;
    }
    if json {
        trace.samples.clear();
        return Ok((to_json(&trace), EXIT_OK));
    }
    Ok((
        format!(
            "pair ({}, {}): max fidelity {:.12} at t = {:.9}, horizon {t_max} (evidence only)\n",
            x + 1,
            y + 1,
            trace.best_fidelity,
            trace.best_t
        ),
        EXIT_OK,
    ))
}
