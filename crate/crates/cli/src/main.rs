//! `abcolor`: command-line front end for the solver, colourers, generators
//! and reductions.

mod report;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use abcolor::colorers::{color_cactus_g4, color_degenerate, color_planar, color_planar_g4, BoundCertificate};
use abcolor::gadget::{check_gadget, obstruction_profile, set_from_mask, GadgetSpec, GadgetVerdict};
use abcolor::generators as gen;
use abcolor::io::{parse_certificate, parse_gadget, parse_graph, write_certificate, write_gadget, write_graph};
use abcolor::outerplanar::color_tf_outerplanar;
use abcolor::reductions::candidates;
use abcolor::reductions::{
    parse_dimacs, reduce_3col_to_13, reduce_3col_to_3k, reduce_dd_to_12, reduce_with_gadgets, ReductionOutput,
    SatGadgets,
};
use abcolor::solver::DEFAULT_MAX_NODES;
use abcolor::{decide, verify, Budget, Graph, MixedColoring, Params, Status, VertexSet};
use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use report::{RunReport, EXIT_FAILS, EXIT_HOLDS, EXIT_INPUT, EXIT_UNKNOWN};

#[derive(Parser, Debug)]
#[command(name = "abcolor", version, about = "Mixed distance-1 / distance-2 graph colouring toolkit")]
struct Cli {
    /// Search node budget for exact decisions.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_NODES, value_parser = clap::value_parser!(u64).range(1..))]
    budget: u64,
    /// Seed for random generators.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args, Debug)]
struct ParamArgs {
    /// Number of distance-1 classes.
    #[arg(short)]
    a: usize,
    /// Number of distance-2 classes.
    #[arg(short)]
    b: usize,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Decide (a,b)-colourability exactly.
    Solve {
        #[command(flatten)]
        params: ParamArgs,
        graph: PathBuf,
        /// Write the witness as a certificate file.
        #[arg(long)]
        cert: Option<PathBuf>,
    },
    /// Check a certificate against a graph.
    Verify {
        /// Distance-1 classes; defaults to the certificate header.
        #[arg(short)]
        a: Option<usize>,
        /// Distance-2 classes; defaults to the certificate header.
        #[arg(short)]
        b: Option<usize>,
        graph: PathBuf,
        certificate: PathBuf,
    },
    /// Run a constructive colourer and report its bound certificate.
    Color {
        #[arg(long, value_enum)]
        algo: Algo,
        /// Degeneracy for `degenerate`; computed when omitted.
        #[arg(long)]
        k: Option<usize>,
        graph: PathBuf,
    },
    /// Emit a graph or gadget from a named family.
    Generate(GenerateArgs),
    /// Compile a source instance into a colouring instance.
    Reduce(ReduceArgs),
    /// Check a gadget's port property over all of its colourings.
    GadgetCheck {
        #[command(flatten)]
        params: ParamArgs,
        gadget: PathBuf,
    },
    /// Classify how colourings of G - v fail to extend to the degree-2 vertex v.
    ProfileObstructions {
        /// The removed vertex (1-based).
        #[arg(long)]
        vertex: usize,
        #[arg(long)]
        k: usize,
        graph: PathBuf,
        /// Also build the forced-vertex gadget and write it here.
        #[arg(long)]
        forced: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Algo {
    Degenerate,
    Cactus,
    TfOuterplanar,
    PlanarG4,
    Planar,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Family {
    Fig5,
    Fig6,
    Fig8,
    Fig9,
    Fig10,
    Friendship,
    Blowup,
    Grid,
    Icosahedron,
    Path,
    Cycle,
    Star,
    Complete,
    RandomDegenerate,
    RandomCactus,
    RandomTfOuterplanar,
    RandomStacked,
    RandomQuadrangulation,
    RandomTfPlanar,
    Gadget,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum GadgetName {
    H1,
    Var1k,
    Clause1k,
    Var21,
    Clause21,
}

#[derive(Args, Debug)]
struct GenerateArgs {
    #[arg(long, value_enum)]
    family: Family,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    l: Option<usize>,
    /// Order for paths, cycles, complete graphs and random families; leaves for stars.
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    w: Option<usize>,
    #[arg(long)]
    h: Option<usize>,
    /// Minimum cycle length for random cacti.
    #[arg(long, default_value_t = 4)]
    girth: usize,
    /// Source graph for `blowup`.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Candidate gadget for `gadget`.
    #[arg(long, value_enum)]
    name: Option<GadgetName>,
    /// Write the graph here instead of standard output.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SourceKind {
    Dd,
    #[value(name = "3col")]
    ThreeCol,
    Sat,
}

#[derive(Args, Debug)]
struct ReduceArgs {
    #[arg(long, value_enum)]
    from: SourceKind,
    /// Target parameters: `1,2`, `1,3`, `3,k`, `1,k` or `2,k`.
    #[arg(long)]
    to: String,
    #[arg(long)]
    k: Option<usize>,
    /// Girth parameter of the path reductions.
    #[arg(long, default_value_t = 3)]
    g: usize,
    /// Gadget override as `role=FILE`; roles are var, clause, filler, h1.
    #[arg(long)]
    gadget: Vec<String>,
    /// Write the provenance sidecar here instead of inlining it as comments.
    #[arg(long)]
    sidecar: Option<PathBuf>,
    /// Write the graph here instead of standard output.
    #[arg(short, long)]
    output: Option<PathBuf>,
    input: PathBuf,
}

struct Ctx {
    budget: Budget,
    seed: u64,
    argv: Vec<String>,
    inputs: Vec<Vec<u8>>,
}

impl Ctx {
    fn read(&mut self, path: &Path) -> Result<String> {
        let bytes = std::fs::read(path).with_context(|| format!("cannot read {}", path.display()))?;
        let text = String::from_utf8(bytes.clone()).with_context(|| format!("{} is not UTF-8", path.display()))?;
        self.inputs.push(bytes);
        Ok(text)
    }

    fn graph(&mut self, path: &Path) -> Result<Graph> {
        let text = self.read(path)?;
        parse_graph(&text).with_context(|| format!("{}", path.display()))
    }

    fn gadget(&mut self, path: &Path) -> Result<GadgetSpec> {
        let text = self.read(path)?;
        parse_gadget(&text).with_context(|| format!("{}", path.display()))
    }

    fn report(&self) -> RunReport {
        RunReport::new(self.argv.clone(), &self.inputs, self.seed)
    }
}

fn write_out(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))
}

fn certificate_body(c: &MixedColoring) -> String {
    // The certificate minus its `s COLORING` header.
    let text = write_certificate(Params::new(0, 0), c);
    text.split_once('\n').map_or(String::new(), |(_, rest)| rest.to_string())
}

fn status_exit(s: Status) -> (&'static str, i32) {
    match s {
        Status::Colorable => ("COLORABLE", EXIT_HOLDS),
        Status::NotColorable => ("NOT_COLORABLE", EXIT_FAILS),
        Status::Unknown => ("UNKNOWN", EXIT_UNKNOWN),
    }
}

fn solve(ctx: &mut Ctx, params: &ParamArgs, graph: &Path, cert: Option<&Path>) -> Result<RunReport> {
    let g = ctx.graph(graph)?;
    let p = Params::new(params.a, params.b);
    let out = decide(&g, p, ctx.budget);
    let mut r = ctx.report();
    r.counter("nodes", out.nodes_explored);
    r.counter("n", g.n());
    let (s, code) = status_exit(out.status);
    r.status(s, code);
    if let Some(w) = &out.witness {
        let (d1, d2) = w.count_classes();
        r.counter("used_d1", d1);
        r.counter("used_d2", d2);
        r.body = certificate_body(w);
        if let Some(path) = cert {
            write_out(path, &write_certificate(p, w))?;
        }
    }
    Ok(r)
}

fn verify_cmd(ctx: &mut Ctx, a: Option<usize>, b: Option<usize>, graph: &Path, cert: &Path) -> Result<RunReport> {
    let g = ctx.graph(graph)?;
    let text = ctx.read(cert)?;
    let (header, c) = parse_certificate(&text).with_context(|| format!("{}", cert.display()))?;
    let p = Params::new(a.unwrap_or(header.a), b.unwrap_or(header.b));
    let violations = verify(&g, p, &c).map_err(|e| anyhow!("{}: {e}", cert.display()))?;
    let mut r = ctx.report();
    r.counter("params", p.to_string());
    r.counter("violations", violations.len());
    for v in &violations {
        r.comment(format!("violation {v}"));
    }
    if violations.is_empty() {
        r.status("VALID", EXIT_HOLDS);
    } else {
        r.status("INVALID", EXIT_FAILS);
    }
    Ok(r)
}

fn bound_line(cert: &BoundCertificate) -> String {
    format!("BOUND n={} N={:.3} used_d2={} claim={} holds={}", cert.n, cert.threshold, cert.used_d2, cert.claim, cert.holds())
}

fn color(ctx: &mut Ctx, algo: Algo, k: Option<usize>, graph: &Path) -> Result<RunReport> {
    let g = ctx.graph(graph)?;
    let (a, c, cert) = match algo {
        Algo::Degenerate => {
            let k = k.unwrap_or_else(|| g.degeneracy()).max(1);
            let (c, cert) = color_degenerate(&g, k)?;
            (k, c, Some(cert))
        }
        Algo::Cactus => (2, color_cactus_g4(&g)?, None),
        Algo::TfOuterplanar => {
            let (c, cert) = color_tf_outerplanar(&g)?;
            (1, c, Some(cert))
        }
        Algo::PlanarG4 => {
            let (c, cert) = color_planar_g4(&g, ctx.budget)?;
            (2, c, Some(cert))
        }
        Algo::Planar => {
            let (c, cert) = color_planar(&g)?;
            (3, c, Some(cert))
        }
    };
    let (_, used_d2) = c.count_classes();
    let b = cert.as_ref().map_or(used_d2.max(1), |x| x.used_d2);
    let p = Params::new(a, b);
    let valid = verify(&g, p, &c).is_ok_and(|v| v.is_empty());
    let holds = cert.as_ref().map_or(used_d2 <= 1, |x| x.holds());
    let mut r = ctx.report();
    r.counter("valid", valid);
    match &cert {
        Some(x) => {
            r.counter("algo", x.algorithm.to_string());
            r.counter("s", x.s_size);
            r.counter("s_prime", x.s_prime_size);
            r.counter("used_d1", x.used_d1);
            r.comment(bound_line(x));
            for note in &x.notes {
                r.comment(format!("note {note}"));
            }
        }
        None => r.comment(format!("BOUND n={} used_d2={used_d2} claim=1 holds={holds}", g.n())),
    }
    r.status(&format!("COLORING a={} b={}", p.a, p.b), if valid && holds { EXIT_HOLDS } else { EXIT_FAILS });
    r.body = certificate_body(&c);
    Ok(r)
}

fn need(v: Option<usize>, flag: &str) -> Result<usize> {
    v.ok_or_else(|| anyhow!("this family needs --{flag}"))
}

fn generate(ctx: &mut Ctx, args: &GenerateArgs) -> Result<RunReport> {
    let seed = ctx.seed;
    let mut lines = vec![format!("family {}", args.family.to_possible_value().unwrap().get_name())];
    let mut param = |name: &str, v: Option<usize>| -> Result<usize> {
        let v = need(v, name)?;
        lines.push(format!("{name} {v}"));
        Ok(v)
    };
    enum Made {
        Graph(Graph),
        Gadget(GadgetSpec),
    }
    let made = match args.family {
        Family::Fig5 => Made::Graph(gen::gen_fig5(param("k", args.k)?, param("l", args.l)?)?),
        Family::Fig6 => Made::Graph(gen::gen_fig6(param("k", args.k)?)?),
        Family::Fig8 => Made::Graph(gen::gen_fig8(param("k", args.k)?)?),
        Family::Fig9 => Made::Graph(gen::gen_fig9()?),
        Family::Fig10 => Made::Graph(gen::gen_fig10()?),
        Family::Friendship => Made::Gadget(gen::gen_friendship(param("k", args.k)?)?),
        Family::Blowup => {
            let k = param("k", args.k)?;
            let path = args.input.as_ref().ok_or_else(|| anyhow!("blowup needs --input"))?;
            let g = ctx.graph(path)?;
            Made::Graph(gen::gen_blowup(&g, k)?)
        }
        Family::Grid => Made::Graph(gen::grid(param("w", args.w)?, param("h", args.h)?)?),
        Family::Icosahedron => Made::Graph(gen::icosahedron()),
        Family::Path => Made::Graph(Graph::path(param("n", args.n)?)),
        Family::Cycle => {
            let n = param("n", args.n)?;
            if n < 3 {
                bail!("a cycle needs n >= 3");
            }
            Made::Graph(Graph::cycle(n))
        }
        Family::Star => Made::Graph(Graph::star(param("n", args.n)?)),
        Family::Complete => Made::Graph(Graph::complete(param("n", args.n)?)),
        Family::RandomDegenerate => Made::Graph(gen::random_kdegenerate(param("n", args.n)?, param("k", args.k)?, seed)?),
        Family::RandomCactus => {
            let n = param("n", args.n)?;
            lines.push(format!("girth {}", args.girth));
            Made::Graph(gen::random_cactus(n, args.girth, seed)?)
        }
        Family::RandomTfOuterplanar => Made::Graph(gen::random_tf_outerplanar(param("n", args.n)?, seed)?),
        Family::RandomStacked => Made::Graph(gen::random_stacked_triangulation(param("n", args.n)?, seed)?),
        Family::RandomQuadrangulation => Made::Graph(gen::random_quadrangulation(param("n", args.n)?, seed)?),
        Family::RandomTfPlanar => Made::Graph(gen::random_tf_planar(param("n", args.n)?, seed)?),
        Family::Gadget => {
            let name = args.name.ok_or_else(|| anyhow!("gadget needs --name"))?;
            lines.push(format!("name {}", name.to_possible_value().unwrap().get_name()));
            let k = || need(args.k, "k");
            Made::Gadget(match name {
                GadgetName::H1 => candidates::h1(k()?.max(1)),
                GadgetName::Var1k if k()? >= 2 => candidates::var_1k(k()?),
                GadgetName::Clause1k if k()? >= 3 => candidates::clause_1k(k()?),
                GadgetName::Var21 => candidates::var_21(),
                GadgetName::Clause21 => candidates::clause_21(),
                _ => bail!("k is too small for this gadget"),
            })
        }
    };
    if args.family.to_possible_value().unwrap().get_name().starts_with("random") {
        lines.push(format!("seed {seed}"));
    }
    let (n, m, text) = match &made {
        Made::Graph(g) => (g.n(), g.m(), write_graph(g, &lines)),
        Made::Gadget(s) => (s.gadget.n(), s.gadget.m(), write_gadget(s, &lines)),
    };
    let mut r = ctx.report();
    r.counter("order", n);
    r.counter("size", m);
    match &args.output {
        Some(path) => {
            write_out(path, &text)?;
            r.status("WRITTEN", EXIT_HOLDS);
        }
        None => r.body = text,
    }
    Ok(r)
}

/// `1,2` → `(Some(1), Some(2))`; `3,k` → `(Some(3), None)`.
fn parse_tag(tag: &str) -> Result<(Option<usize>, Option<usize>)> {
    let t = tag.trim_matches(|c| c == '(' || c == ')');
    let (a, b) = t.split_once(',').ok_or_else(|| anyhow!("target `{tag}` is not of the form a,b"))?;
    let num = |s: &str| -> Result<Option<usize>> {
        if s.trim() == "k" { Ok(None) } else { Ok(Some(s.trim().parse().with_context(|| format!("bad target `{tag}`"))?)) }
    };
    Ok((num(a)?, num(b)?))
}

fn reduce(ctx: &mut Ctx, args: &ReduceArgs) -> Result<RunReport> {
    let (ta, tb) = parse_tag(&args.to)?;
    let k = match (tb, args.k) {
        (Some(b), Some(k)) if b != k => bail!("--k {k} contradicts target {}", args.to),
        (Some(b), _) => Some(b),
        (None, k) => Some(k.ok_or_else(|| anyhow!("target {} needs --k", args.to))?),
    };
    let mut roles = std::collections::BTreeMap::new();
    for spec in &args.gadget {
        let (role, file) = spec.split_once('=').ok_or_else(|| anyhow!("--gadget expects role=FILE, got `{spec}`"))?;
        if !["var", "clause", "filler", "h1"].contains(&role) {
            bail!("unknown gadget role `{role}`");
        }
        roles.insert(role.to_string(), ctx.gadget(Path::new(file))?);
    }
    let k = k.unwrap();
    let out: ReductionOutput = match (args.from, ta) {
        (SourceKind::Dd, Some(1)) if k == 2 => reduce_dd_to_12(&ctx.graph(&args.input)?, args.g)?,
        (SourceKind::ThreeCol, Some(1)) if k == 3 => reduce_3col_to_13(&ctx.graph(&args.input)?, args.g)?,
        (SourceKind::ThreeCol, Some(3)) => {
            let h1 = roles.remove("h1").unwrap_or_else(|| candidates::h1(k.max(1)));
            reduce_3col_to_3k(&ctx.graph(&args.input)?, k, &h1, ctx.budget)?
        }
        (SourceKind::Sat, Some(a @ (1 | 2))) => {
            let text = ctx.read(&args.input)?;
            let phi = parse_dimacs(&text).with_context(|| format!("{}", args.input.display()))?;
            let defaults = match (a, k) {
                (1, k) if k >= 3 => Some(candidates::sat_1k(k)),
                (2, 1) => Some(candidates::sat_21()),
                _ => None,
            };
            let mut take = |role: &str, d: Option<GadgetSpec>| {
                roles.remove(role).or(d).ok_or_else(|| anyhow!("({a},{k}) has no built-in {role} gadget; pass --gadget {role}=FILE"))
            };
            let gadgets = SatGadgets {
                var: take("var", defaults.as_ref().map(|d| d.var.clone()))?,
                clause: take("clause", defaults.as_ref().map(|d| d.clause.clone()))?,
                filler: roles.remove("filler").or_else(|| defaults.and_then(|d| d.filler)),
            };
            reduce_with_gadgets(&phi, k, &gadgets, Params::new(a, k), ctx.budget)?
        }
        _ => bail!("no reduction from {:?} to ({})", args.from, args.to),
    };
    if let Some(role) = roles.keys().next() {
        bail!("gadget role `{role}` is not used by this reduction");
    }
    let sidecar = out.sidecar();
    let mut lines = vec![format!("reduction {} target {}", args.from.to_possible_value().unwrap().get_name(), out.params)];
    if args.sidecar.is_none() {
        lines.extend(sidecar.lines().map(|l| l.trim_start_matches("c ").to_string()));
    }
    let text = write_graph(&out.graph, &lines);
    let mut r = ctx.report();
    r.counter("order", out.graph.n());
    r.counter("size", out.graph.m());
    r.counter("max_degree", out.graph.max_degree());
    r.counter("bipartite", out.graph.is_bipartite());
    r.counter("girth", out.graph.girth().map_or("inf".to_string(), |x| x.to_string()));
    r.counter("params", out.params.to_string());
    if let Some(path) = &args.sidecar {
        write_out(path, &sidecar)?;
    }
    match &args.output {
        Some(path) => {
            write_out(path, &text)?;
            r.status("WRITTEN", EXIT_HOLDS);
        }
        None => r.body = text,
    }
    Ok(r)
}

fn gadget_check(ctx: &mut Ctx, params: &ParamArgs, path: &Path) -> Result<RunReport> {
    let spec = ctx.gadget(path)?;
    let p = Params::new(params.a, params.b);
    let base = decide(&spec.gadget, p, ctx.budget);
    let verdict = check_gadget(&spec, p, ctx.budget);
    let mut r = ctx.report();
    r.counter("colorable", status_exit(base.status).0);
    r.counter("property", format!("{:?}", spec.property));
    match verdict {
        GadgetVerdict::Holds => r.status("HOLDS", EXIT_HOLDS),
        GadgetVerdict::FailsWithWitness(w) => {
            r.status("FAILS", EXIT_FAILS);
            r.body = certificate_body(&w);
        }
        GadgetVerdict::Unknown => r.status("UNKNOWN", EXIT_UNKNOWN),
    }
    Ok(r)
}

fn profile(ctx: &mut Ctx, vertex: usize, k: usize, path: &Path, forced: Option<&Path>) -> Result<RunReport> {
    let g = ctx.graph(path)?;
    if vertex == 0 || vertex > g.n() {
        bail!("vertex {vertex} out of range 1..={}", g.n());
    }
    if !(1..=16).contains(&k) {
        bail!("k must lie in 1..=16");
    }
    let v = vertex - 1;
    if g.degree(v) != 2 {
        bail!("vertex {vertex} has degree {}, not 2", g.degree(v));
    }
    let mut gone = VertexSet::new(g.n());
    gone.insert(v);
    let (h, map) = g.without(&gone);
    let at = |x: usize| map.iter().position(|&m| m == x).unwrap();
    let (v1, v2) = (at(g.neighbors(v)[0]), at(g.neighbors(v)[1]));
    let mut r = ctx.report();
    r.counter("neighbours", format!("{} {}", map[v1] + 1, map[v2] + 1));
    let Some(prof) = obstruction_profile(&h, v1, v2, k, ctx.budget) else {
        r.status("UNKNOWN", EXIT_UNKNOWN);
        return Ok(r);
    };
    r.counter("colorings", prof.colorings);
    r.counter("has_bc", prof.has_bc);
    r.counter("pairs", prof.pairs.len());
    let show = |m: u64| format!("{{{}}}", set_from_mask(m).iter().map(|i| i.to_string()).collect::<Vec<_>>().join(","));
    for &(s1, s2) in &prof.pairs {
        r.comment(format!("pair {} {}", show(s1), show(s2)));
    }
    if prof.all_obstructed {
        r.status("OBSTRUCTED", EXIT_HOLDS);
    } else {
        r.status("EXTENDABLE", EXIT_FAILS);
    }
    if let Some(out) = forced {
        let spec = gen::gen_forced_vertex(&g, v, k, ctx.budget)?;
        write_out(out, &write_gadget(&spec, &[format!("forced vertex at (2,{k}) from {}", path.display())]))?;
        r.counter("forced_order", spec.gadget.n());
    }
    Ok(r)
}

fn dispatch(cli: &Cli, argv: Vec<String>) -> Result<RunReport> {
    let mut ctx = Ctx { budget: Budget::nodes(cli.budget), seed: cli.seed, argv, inputs: Vec::new() };
    match &cli.cmd {
        Cmd::Solve { params, graph, cert } => solve(&mut ctx, params, graph, cert.as_deref()),
        Cmd::Verify { a, b, graph, certificate } => verify_cmd(&mut ctx, *a, *b, graph, certificate),
        Cmd::Color { algo, k, graph } => color(&mut ctx, *algo, *k, graph),
        Cmd::Generate(args) => generate(&mut ctx, args),
        Cmd::Reduce(args) => reduce(&mut ctx, args),
        Cmd::GadgetCheck { params, gadget } => gadget_check(&mut ctx, params, gadget),
        Cmd::ProfileObstructions { vertex, k, graph, forced } => profile(&mut ctx, *vertex, *k, graph, forced.as_deref()),
    }
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_HOLDS };
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    let echo = argv.iter().skip(1).cloned().collect();
    match dispatch(&cli, echo) {
        Ok(report) => {
            let text = match cli.format {
                Format::Text => report.render_text(),
                Format::Json => report.render_json(),
            };
            print!("{text}");
            ExitCode::from(report.exit_code as u8)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_INPUT as u8)
        }
    }
}
