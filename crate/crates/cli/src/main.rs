//! `addprod`: command-line front end.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use addprod_core::addchar::{additive_char_poly, freelike_walk_count};
use addprod_core::free::{free_convolution_right_edge, permutation_sum_experiment, SpectralMeasure};
use addprod_core::graph::{Atom, GraphDocument, Indexing, SumGraph};
use addprod_core::lift::{additive_lift, spectrum_split, LiftEncoding};
use addprod_core::poly::{certify_real_rooted, count_roots_above, fmt_rational, parse_rational, power_sums, rational_from_f64, rational_to_f64, SturmChain};
use addprod_core::presets::{auto_rho, Preset};
use addprod_core::product::{build_ball_with, specrad_bracket, specrad_lower_walks, DEFAULT_VERTEX_CAP};
use addprod_core::search::{quasi_ramanujan_pipeline, RhoProvenance, SearchOptions};
use addprod_core::selftest::{self, CRITERIA};
use addprod_core::{BigRational, Error, ExactPolynomial, VERSION};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

#[derive(Parser)]
#[command(name = "addprod", version, about = "Additive products of graphs, lifts and free-convolution radii")]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
    /// Emit one JSON document instead of line-oriented text.
    #[arg(long, global = true)]
    json: bool,
    /// Write the main artifact to this file.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Vertex numbering of input and output documents; overrides the
    /// document's own field.
    #[arg(long, global = true, value_enum)]
    indexing: Option<IndexingArg>,
}

#[derive(Clone, Copy, ValueEnum)]
enum IndexingArg {
    Zero,
    One,
}

impl From<IndexingArg> for Indexing {
    fn from(i: IndexingArg) -> Self {
        match i {
            IndexingArg::Zero => Indexing::Zero,
            IndexingArg::One => Indexing::One,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Ball of the additive product around a root word.
    Ball {
        graph: PathBuf,
        #[arg(long)]
        radius: usize,
        #[arg(long, default_value_t = 0)]
        root: usize,
    },
    /// Spectral radius bracket of the additive product.
    Specrad {
        graph: PathBuf,
        #[arg(long, default_value_t = 8)]
        radius: usize,
        /// Closed-walk lower bound with walks of length 2K.
        #[arg(long)]
        walks: Option<usize>,
        #[arg(long, default_value_t = 300)]
        iters: usize,
    },
    /// Additive characteristic polynomial.
    Poly { graph: PathBuf },
    /// Freelike walk counts against power sums.
    Walks {
        graph: PathBuf,
        #[arg(long)]
        k: usize,
    },
    /// Real-rootedness and `max |root| <= rho` for the additive polynomial.
    Certify {
        graph: PathBuf,
        #[command(flatten)]
        rho: RhoArg,
    },
    /// Additive lift from a hex encoding, with old and new spectra.
    Lift {
        graph: PathBuf,
        #[arg(long)]
        n: usize,
        /// File holding the hex encoding (or the hex string itself).
        #[arg(long)]
        encoding: String,
    },
    /// Greedy lift search with certification.
    Search {
        graph: PathBuf,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        rho: RhoArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 22)]
        budget_bits: u32,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
    /// Right edge of a free convolution of spectral measures.
    Freeconv {
        #[arg(long, conflicts_with = "preset")]
        measures: Option<PathBuf>,
        #[arg(long)]
        preset: Option<String>,
    },
    /// Random permutation sums; CSV of lambda_2 samples.
    Mcperm {
        /// JSON file `{"graphs": [{"n": .., "edges": [[u, v], ..]}, ..]}`.
        #[arg(long)]
        graphs: PathBuf,
        #[arg(long, default_value_t = 1)]
        t: usize,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Reference radius; defaults to the free convolution edge.
        #[arg(long)]
        rho: Option<f64>,
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
    },
    /// Runs the acceptance properties.
    Selftest {
        #[arg(long, default_value_t = selftest::DEFAULT_SEED)]
        seed: u64,
        /// Only these criteria.
        #[arg(long, value_delimiter = ',')]
        only: Vec<usize>,
    },
}

#[derive(Args)]
struct RhoArg {
    /// Reference radius: a number, `p/q`, or `auto`.
    #[arg(long, default_value = "auto")]
    rho: String,
}

/// Failure classes with their exit codes.
enum Fail {
    Validation(String),
    Certification(String),
    Usage(String),
    Malformed(String),
    Other(String),
}

impl Fail {
    fn code(&self) -> u8 {
        match self {
            Fail::Validation(_) => 2,
            Fail::Certification(_) => 3,
            Fail::Usage(_) => 64,
            Fail::Malformed(_) => 65,
            Fail::Other(_) => 1,
        }
    }

    fn message(&self) -> &str {
        match self {
            Fail::Validation(m) | Fail::Certification(m) | Fail::Usage(m) | Fail::Malformed(m) | Fail::Other(m) => m,
        }
    }
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        let m = e.to_string();
        match e {
            Error::Malformed(_)
            | Error::Json(_)
            | Error::SelfLoop { .. }
            | Error::DuplicateEdge { .. }
            | Error::VertexOutOfRange { .. }
            | Error::Encoding(_) => Fail::Malformed(m),
            Error::InvalidAtoms(_) => Fail::Validation(m),
            _ => Fail::Other(m),
        }
    }
}

#[derive(Serialize)]
struct RunManifest {
    subcommand: &'static str,
    inputs: Vec<(String, String)>,
    seed: Option<u64>,
    version: &'static str,
    wall_time_secs: f64,
    outputs: Vec<String>,
}

struct Ctx {
    json: bool,
    out: Option<PathBuf>,
    indexing: Option<Indexing>,
    manifest: RunManifest,
    started: Instant,
}

impl Ctx {
    fn read(&mut self, path: &Path) -> Result<String, Fail> {
        let bytes = std::fs::read(path).map_err(|e| Fail::Usage(format!("{}: {e}", path.display())))?;
        self.manifest.inputs.push((path.display().to_string(), hex::encode(Sha256::digest(&bytes))));
        String::from_utf8(bytes).map_err(|_| Fail::Malformed(format!("{}: not UTF-8", path.display())))
    }

    fn graph(&mut self, path: &Path) -> Result<SumGraph, Fail> {
        let mut doc = GraphDocument::from_json(&self.read(path)?)?;
        if let Some(i) = self.indexing {
            doc.indexing = i;
        }
        let s = SumGraph::from_document(&doc)?;
        let diag = s.validate();
        if !diag.passed() {
            return Err(Fail::Validation(diag.messages().join("\n")));
        }
        Ok(s)
    }

    fn out_indexing(&self) -> Indexing {
        self.indexing.unwrap_or_default()
    }

    /// Writes `artifact` to `--out` if given. Prints `text` (or `value` with
    /// `--json`) and the manifest.
    fn finish(mut self, text: String, value: Value, artifact: Option<String>) -> Result<(), Fail> {
        if let (Some(path), Some(a)) = (&self.out, artifact) {
            std::fs::write(path, a).map_err(|e| Fail::Other(format!("{}: {e}", path.display())))?;
            self.manifest.outputs.push(path.display().to_string());
        }
        self.manifest.wall_time_secs = self.started.elapsed().as_secs_f64();
        let mut body = String::new();
        if self.json {
            let mut v = value;
            v["manifest"] = serde_json::to_value(&self.manifest).unwrap();
            body = serde_json::to_string_pretty(&v).unwrap() + "\n";
        } else {
            body.push_str(&text);
            let m = &self.manifest;
            writeln!(body, "# version {} subcommand {} wall {:.3}s", m.version, m.subcommand, m.wall_time_secs).unwrap();
            for (p, h) in &m.inputs {
                writeln!(body, "# input {p} sha256 {h}").unwrap();
            }
            if let Some(s) = m.seed {
                writeln!(body, "# seed {s}").unwrap();
            }
            for o in &m.outputs {
                writeln!(body, "# output {o}").unwrap();
            }
        }
        // a closed pipe is not an error
        let _ = std::io::stdout().lock().write_all(body.as_bytes());
        Ok(())
    }
}

fn resolve_rho(s: &SumGraph, arg: &str) -> Result<(f64, RhoProvenance, Vec<String>), Fail> {
    if arg == "auto" {
        let a = auto_rho(s)?;
        return Ok((a.rho, a.provenance, a.warnings));
    }
    let x: f64 = match arg.parse::<f64>() {
        Ok(x) => x,
        Err(_) => parse_rational(arg)
            .ok()
            .map(|r| rational_to_f64(&r))
            .filter(|x| x.is_finite())
            .ok_or_else(|| Fail::Usage(format!("--rho {arg:?} is not a number, p/q or auto")))?,
    };
    if !x.is_finite() || x < 0.0 {
        return Err(Fail::Usage(format!("--rho must be a finite nonnegative number, got {arg}")));
    }
    Ok((x, RhoProvenance::User, Vec::new()))
}

fn coeffs_text(p: &ExactPolynomial) -> String {
    p.coeffs_desc().iter().map(fmt_rational).collect::<Vec<_>>().join(" ")
}

fn interval(iv: (BigRational, BigRational)) -> String {
    format!("({}, {}]", fmt_rational(&iv.0), fmt_rational(&iv.1))
}

fn floats(xs: &[f64]) -> String {
    xs.iter().map(|x| format!("{x:.12}")).collect::<Vec<_>>().join(" ")
}

fn run(cli: Cli) -> Result<(), Fail> {
    let name = match &cli.cmd {
        Command::Ball { .. } => "ball",
        Command::Specrad { .. } => "specrad",
        Command::Poly { .. } => "poly",
        Command::Walks { .. } => "walks",
        Command::Certify { .. } => "certify",
        Command::Lift { .. } => "lift",
        Command::Search { .. } => "search",
        Command::Freeconv { .. } => "freeconv",
        Command::Mcperm { .. } => "mcperm",
        Command::Selftest { .. } => "selftest",
    };
    let mut ctx = Ctx {
        json: cli.json,
        out: cli.out,
        indexing: cli.indexing.map(Into::into),
        manifest: RunManifest { subcommand: name, inputs: vec![], seed: None, version: VERSION, wall_time_secs: 0.0, outputs: vec![] },
        started: Instant::now(),
    };
    let mut text = String::new();
    match cli.cmd {
        Command::Ball { graph, radius, root } => {
            let s = ctx.graph(&graph)?;
            if root >= s.n() {
                return Err(Fail::Usage(format!("--root {root} out of range for n = {}", s.n())));
            }
            let ball = build_ball_with(&s, root, radius, DEFAULT_VERTEX_CAP)?;
            let off = match ctx.out_indexing() {
                Indexing::Zero => 0,
                Indexing::One => 1,
            };
            let mut atoms = vec![Vec::new(); s.c()];
            for (&(x, y), &c) in ball.graph().edges().iter().zip(ball.edge_colors()) {
                atoms[c].push([x + off, y + off]);
            }
            let doc = GraphDocument { n: ball.len(), atoms, indexing: ctx.out_indexing() };
            let words: Vec<Value> =
                (0..ball.len()).map(|i| json!({"index": i + off, "distance": ball.distance(i), "word": ball.word(i).to_string()})).collect();
            writeln!(text, "vertices {}", ball.len()).unwrap();
            writeln!(text, "edges {}", ball.graph().num_edges()).unwrap();
            writeln!(text, "document {}", doc.to_json()).unwrap();
            writeln!(text, "# index distance word").unwrap();
            for i in 0..ball.len() {
                writeln!(text, "{} {} {}", i + off, ball.distance(i), ball.word(i)).unwrap();
            }
            let value = json!({"document": doc, "words": words});
            ctx.finish(text, value, Some(doc.to_json()))
        }
        Command::Specrad { graph, radius, walks, iters } => {
            let s = ctx.graph(&graph)?;
            let br = specrad_bracket(&s, radius, iters)?;
            let walk = walks.map(|k| specrad_lower_walks(&s, k)).transpose()?;
            writeln!(text, "lower {:.12} {}", br.lower, br.lower_method).unwrap();
            writeln!(text, "upper {:.12} {}", br.upper, br.upper_method).unwrap();
            if let Some(w) = walk {
                writeln!(text, "lower_walks {w:.12}").unwrap();
            }
            if let Some(e) = br.extrapolated {
                writeln!(text, "extrapolated {e:.12} uncertified").unwrap();
            }
            for (r, size, l) in &br.per_radius {
                writeln!(text, "radius {r} size {size} rayleigh {l:.12}").unwrap();
            }
            let value = json!({"bracket": br, "lower_walks": walk});
            let artifact = serde_json::to_string_pretty(&value).unwrap();
            ctx.finish(text, value, Some(artifact))
        }
        Command::Poly { graph } => {
            let s = ctx.graph(&graph)?;
            let p = additive_char_poly(&s)?;
            let cert = certify_real_rooted(&p)?;
            writeln!(text, "degree {}", p.degree().unwrap_or(0)).unwrap();
            writeln!(text, "coefficients {}", coeffs_text(&p)).unwrap();
            writeln!(text, "real_rooted {}", cert.real_rooted).unwrap();
            let coeffs: Vec<String> = p.coeffs_desc().iter().map(fmt_rational).collect();
            let value = json!({"coefficients": coeffs, "real_rooted": cert.real_rooted});
            ctx.finish(text, value, Some(coeffs_text(&p) + "\n"))
        }
        Command::Walks { graph, k } => {
            let s = ctx.graph(&graph)?;
            let p = additive_char_poly(&s)?;
            let sums = power_sums(&p, k)?;
            let mut rows = Vec::new();
            writeln!(text, "# k walks power_sum agree").unwrap();
            for (i, ps) in sums.iter().enumerate() {
                let w = freelike_walk_count(&s, i + 1)?;
                let agree = BigRational::from_integer(w.clone()) == *ps;
                writeln!(text, "{} {} {} {}", i + 1, w, fmt_rational(ps), agree).unwrap();
                rows.push(json!({"k": i + 1, "walks": w.to_string(), "power_sum": fmt_rational(ps), "agree": agree}));
            }
            let all = rows.iter().all(|r| r["agree"] == true);
            let value = json!({"rows": rows});
            ctx.finish(text, value, None)?;
            if all {
                Ok(())
            } else {
                Err(Fail::Certification("walk counts disagree with power sums".into()))
            }
        }
        Command::Certify { graph, rho } => {
            let s = ctx.graph(&graph)?;
            let (rho, prov, warnings) = resolve_rho(&s, &rho.rho)?;
            let p = additive_char_poly(&s)?;
            let cert = certify_real_rooted(&p)?;
            let r = rational_from_f64(rho)?;
            // roots above rho, and roots below -rho as roots of p(-x) above rho
            let reflected = ExactPolynomial::from_asc(
                p.coeffs_asc().iter().enumerate().map(|(i, c)| if i % 2 == 1 { -c.clone() } else { c.clone() }).collect(),
            );
            let above = count_roots_above(&p, &r)?;
            let below = count_roots_above(&reflected, &r)?;
            let pass = cert.real_rooted && above == 0 && below == 0;
            let width = BigRational::new(1.into(), (1u64 << 40).into());
            let top = SturmChain::new(&p.squarefree_part()?)?.max_root_interval(&width);
            // the smallest root of p is minus the largest root of p(-x)
            let bottom = SturmChain::new(&reflected.squarefree_part()?)?
                .max_root_interval(&width)
                .map(|(a, b)| (-b, -a));
            writeln!(text, "{}", if pass { "PASS" } else { "FAIL" }).unwrap();
            writeln!(text, "rho {rho:.12} {}", serde_json::to_string(&prov).unwrap()).unwrap();
            writeln!(text, "real_rooted {}", cert.real_rooted).unwrap();
            if let Some(iv) = &top {
                writeln!(text, "max_root_interval {}", interval(iv.clone())).unwrap();
            }
            if let Some(iv) = &bottom {
                writeln!(text, "min_root_interval {}", interval(iv.clone())).unwrap();
            }
            writeln!(text, "roots_above {above} roots_below {below}").unwrap();
            for w in &warnings {
                writeln!(text, "warning {w}").unwrap();
            }
            let iv_json = |iv: &Option<(BigRational, BigRational)>| iv.as_ref().map(|(a, b)| [fmt_rational(a), fmt_rational(b)]);
            let value = json!({
                "verdict": if pass { "PASS" } else { "FAIL" },
                "rho": rho, "rho_provenance": prov, "real_rooted": cert.real_rooted,
                "max_root_interval": iv_json(&top), "min_root_interval": iv_json(&bottom),
                "roots_above": above, "roots_below": below, "warnings": warnings,
            });
            ctx.finish(text, value, None)?;
            if pass {
                Ok(())
            } else {
                Err(Fail::Certification("additive characteristic polynomial fails the bound".into()))
            }
        }
        Command::Lift { graph, n, encoding } => {
            let s = ctx.graph(&graph)?;
            if n == 0 {
                return Err(Fail::Usage("--n must be at least 1".into()));
            }
            let hex_text = if Path::new(&encoding).exists() { ctx.read(Path::new(&encoding))? } else { encoding };
            let enc = LiftEncoding::from_hex(s.c(), s.n(), n, &hex_text)?;
            let qs = enc.potentials();
            let lifted = additive_lift(&s, &qs, n)?;
            let split = spectrum_split(&s, &qs, n)?;
            let doc = lifted.to_document(ctx.out_indexing());
            writeln!(text, "document {}", doc.to_json()).unwrap();
            writeln!(text, "old {}", floats(&split.old)).unwrap();
            writeln!(text, "new {}", floats(&split.new)).unwrap();
            writeln!(text, "max_deviation {:e}", split.max_deviation).unwrap();
            let value = json!({"document": doc, "old_spectrum": split.old, "new_spectrum": split.new, "max_deviation": split.max_deviation});
            ctx.finish(text, value, Some(doc.to_json()))
        }
        Command::Search { graph, n, rho, seed, budget_bits, tol } => {
            let s = ctx.graph(&graph)?;
            if n == 0 {
                return Err(Fail::Usage("--n must be at least 1".into()));
            }
            ctx.manifest.seed = Some(seed);
            let (rho, prov, mut warnings) = resolve_rho(&s, &rho.rho)?;
            let opts = SearchOptions { budget_bits, seed, tol, ..SearchOptions::default() };
            let mut rep = quasi_ramanujan_pipeline(&s, n, rho, prov, &opts)?;
            warnings.append(&mut rep.warnings);
            rep.warnings = warnings;
            let c = &rep.certificate;
            writeln!(text, "{}", if c.bound_holds { "PASS" } else { "FAIL" }).unwrap();
            writeln!(text, "rho {:.12} {}", c.rho, serde_json::to_string(&c.rho_provenance).unwrap()).unwrap();
            writeln!(text, "encoding {}", c.encoding_hex).unwrap();
            if let Some((a, b)) = c.new_max_interval {
                writeln!(text, "new_max_interval ({a:.12}, {b:.12}]").unwrap();
            }
            writeln!(text, "new_above {} exact_path {} monotone {} attempts {}", c.new_above, c.exact_path, c.monotone, c.attempts).unwrap();
            writeln!(text, "new {}", floats(&c.new_spectrum)).unwrap();
            writeln!(text, "connected {} exceeding {} quasi_ok {}", rep.connected, rep.exceeding, rep.quasi_ok).unwrap();
            for w in &rep.warnings {
                writeln!(text, "warning {w}").unwrap();
            }
            let holds = c.bound_holds;
            let value = serde_json::to_value(&rep).unwrap();
            let mut artifact = value.clone();
            artifact["manifest"] = json!({"version": VERSION, "seed": seed, "inputs": ctx.manifest.inputs});
            ctx.finish(text, value, Some(serde_json::to_string_pretty(&artifact).unwrap()))?;
            if holds {
                Ok(())
            } else {
                Err(Fail::Certification("lift has new eigenvalues above rho".into()))
            }
        }
        Command::Freeconv { measures, preset } => {
            let (ms, label) = match (measures, preset) {
                (Some(path), None) => (read_measures(&ctx.read(&path)?)?, path.display().to_string()),
                (None, Some(name)) => {
                    let p: Preset = name.parse().map_err(|e: Error| Fail::Usage(e.to_string()))?;
                    match p.measures() {
                        Some(ms) => (ms, p.to_string()),
                        None => {
                            let (rho, form) = p.rho()?;
                            writeln!(text, "right_edge {rho:.12}").unwrap();
                            writeln!(text, "closed_form {form}").unwrap();
                            return ctx.finish(text, json!({"right_edge": rho, "closed_form": form}), None);
                        }
                    }
                }
                _ => return Err(Fail::Usage("give exactly one of --measures or --preset".into())),
            };
            let edge = free_convolution_right_edge(&ms)?;
            writeln!(text, "right_edge {edge:.12}").unwrap();
            writeln!(text, "measures {} from {label}", ms.len()).unwrap();
            ctx.finish(text, json!({"right_edge": edge, "measures": ms.len()}), Some(format!("{edge:.15}\n")))
        }
        Command::Mcperm { graphs, t, trials, seed, rho, tol } => {
            ctx.manifest.seed = Some(seed);
            let gs = read_graphs(&ctx.read(&graphs)?)?;
            let rho = match rho {
                Some(r) => r,
                None => {
                    let ms = gs.iter().map(SpectralMeasure::of_vertex_transitive).collect::<Result<Vec<_>, _>>()?;
                    free_convolution_right_edge(&ms)?
                }
            };
            let stats = permutation_sum_experiment(&gs, t, trials, seed, rho, tol)?;
            let mut csv = String::from("trial,lambda2,within\n");
            for (i, l) in stats.lambda2.iter().enumerate() {
                writeln!(csv, "{i},{l:.12},{}", *l <= rho + tol).unwrap();
            }
            if ctx.out.is_none() && !ctx.json {
                text.push_str(&csv);
            }
            writeln!(text, "# vertices {} rho {rho:.12} fraction_within {:.6}", stats.vertices, stats.fraction_within).unwrap();
            let value = serde_json::to_value(&stats).unwrap();
            ctx.finish(text, value, Some(csv))
        }
        Command::Selftest { seed, only } => {
            ctx.manifest.seed = Some(seed);
            let ids: Vec<usize> = if only.is_empty() { CRITERIA.iter().map(|c| c.0).collect() } else { only };
            let mut outcomes = Vec::new();
            for id in ids {
                let o = selftest::run_criterion(id, seed);
                if !ctx.json {
                    println!("{}", o.line());
                }
                outcomes.push(o);
            }
            let ok = selftest::all_passed(&outcomes);
            writeln!(text, "{}", if ok { "selftest PASS" } else { "selftest FAIL" }).unwrap();
            let value = json!({"passed": ok, "criteria": outcomes});
            let artifact = serde_json::to_string_pretty(&value).unwrap();
            ctx.finish(text, value, Some(artifact))?;
            if ok {
                Ok(())
            } else {
                Err(Fail::Certification("hard criteria failed".into()))
            }
        }
    }
}

#[derive(Deserialize)]
struct MeasureSpec {
    atoms: Vec<(f64, String)>,
}

#[derive(Deserialize)]
struct MeasureFile {
    measures: Vec<MeasureSpec>,
}

/// `{"measures": [{"atoms": [[location, "p/q"], ..]}, ..]}`.
fn read_measures(text: &str) -> Result<Vec<SpectralMeasure>, Fail> {
    let f: MeasureFile = serde_json::from_str(text).map_err(|e| Fail::Malformed(e.to_string()))?;
    f.measures
        .into_iter()
        .map(|m| {
            let atoms = m
                .atoms
                .into_iter()
                .map(|(x, p)| parse_rational(&p).map(|p| (x, p)))
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| Fail::Malformed(e.to_string()))?;
            SpectralMeasure::new(atoms).map_err(|e| Fail::Malformed(e.to_string()))
        })
        .collect()
}

#[derive(Deserialize)]
struct PlainGraph {
    n: usize,
    edges: Vec<[usize; 2]>,
}

#[derive(Deserialize)]
struct GraphsFile {
    graphs: Vec<PlainGraph>,
}

fn read_graphs(text: &str) -> Result<Vec<Atom>, Fail> {
    let f: GraphsFile = serde_json::from_str(text).map_err(|e| Fail::Malformed(e.to_string()))?;
    let gs = f
        .graphs
        .into_iter()
        .map(|g| Atom::new(g.n, &g.edges.iter().map(|e| (e[0], e[1])).collect::<Vec<_>>()))
        .collect::<Result<Vec<_>, _>>()?;
    for g in &gs {
        let nb = addprod_core::graph::neighbor_lists(g.n(), g.edges());
        if g.support().len() != g.n() || !g.underlying_connected() || !addprod_core::graph::is_vertex_transitive(&nb) {
            return Err(Fail::Validation("mcperm graphs must be connected and vertex-transitive".into()));
        }
    }
    Ok(gs)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => 0,
                _ => 64,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("addprod: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
