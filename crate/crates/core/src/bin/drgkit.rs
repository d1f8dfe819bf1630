use std::fmt::Write as _;
use std::io::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use drgkit::drg::parse_array;
use drgkit::exactnum::Scalar;
use drgkit::finitegeom::FiniteGraph;
use drgkit::report::{
    analyze, analyze_text, classify, construct_report, AnalyzeOptions, BoundOutcome, Family,
    Report, ReportError, VerifyLevel,
};
use drgkit::search::{search, Hypothesis, SearchParams};

#[derive(Parser)]
#[command(name = "drgkit", version, about = "Exact analysis of distance-regular graph parameters")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Suppress diagnostics on stderr.
    #[arg(long, global = true)]
    quiet: bool,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Clone, Copy, ValueEnum)]
enum HypothesisArg {
    Thm12,
    Lt,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Hermitian,
    Hamming,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VerifyArg {
    Basic,
    Full,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExportFormat {
    Edges,
    Json,
}

#[derive(clap::Args)]
struct ArrayFlags {
    /// Treat the graph as 2-bounded (array-level assumption).
    #[arg(long = "assume-2-bounded")]
    assume_2_bounded: bool,
    /// Emit every nonzero Krein parameter instead of the θ_D row.
    #[arg(long)]
    krein_full: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Spectrum, Krein parameters, bounds and classification of one array.
    Analyze {
        /// Intersection array, e.g. "10,8;1,5".
        array: String,
        #[command(flatten)]
        flags: ArrayFlags,
    },
    /// Enumerate feasible arrays in a box, optionally filtered by a hypothesis set.
    Search {
        #[arg(long)]
        max_k: u64,
        #[arg(long = "max-D", alias = "max-d")]
        max_d: usize,
        #[arg(long, default_value_t = 3)]
        min_k: u64,
        #[arg(long)]
        a1: Option<u64>,
        #[arg(long, value_enum)]
        hypotheses: Option<HypothesisArg>,
        #[command(flatten)]
        flags: ArrayFlags,
    },
    /// Build a graph, measure it and analyze the measured array.
    Construct {
        #[arg(value_enum)]
        family: FamilyArg,
        /// Diameter.
        d: usize,
        /// r for hermitian, alphabet size for hamming.
        q: u64,
        #[arg(long, value_enum, default_value_t = VerifyArg::Basic)]
        verify: VerifyArg,
        /// Write the graph to this path.
        #[arg(long)]
        export: Option<std::path::PathBuf>,
        #[arg(long, value_enum, default_value_t = ExportFormat::Edges)]
        export_format: ExportFormat,
        #[command(flatten)]
        flags: ArrayFlags,
    },
    /// Run the classification pipelines with their step traces.
    Classify {
        array: String,
        #[arg(long = "assume-2-bounded")]
        assume_2_bounded: bool,
        /// Run the bounded-graph pipeline with this m.
        #[arg(long)]
        m_bounded: Option<usize>,
    },
}

fn opts(f: &ArrayFlags) -> AnalyzeOptions {
    AnalyzeOptions {
        assume_2_bounded: f.assume_2_bounded,
        krein_full: f.krein_full,
    }
}

fn fail(e: &ReportError, quiet: bool) -> ExitCode {
    if !quiet {
        eprintln!("drgkit: {e}");
    }
    ExitCode::from(e.exit_code() as u8)
}

fn emit(report: &Report, format: Format) {
    let s = match format {
        Format::Json => serde_json::to_string_pretty(report).unwrap(),
        Format::Table => render_table(report),
    };
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{s}");
}

fn sc(x: &Scalar) -> String {
    x.display_table()
}

fn render_table(r: &Report) -> String {
    let mut s = String::new();
    let a = &r.array.array;
    let _ = writeln!(s, "array      {a}");
    let _ = writeln!(s, "n          {}", a.vertex_count());
    let _ = writeln!(s, "k_i        {}", a.valencies().iter().map(|k| k.to_string()).collect::<Vec<_>>().join(" "));
    let _ = writeln!(s, "bipartite  {}", r.array.bipartite);
    let _ = writeln!(s, "\n{:>3}  {:<40} {:>10}", "i", "theta_i", "m_i");
    for (i, (t, m)) in r.spectral.eigenvalues.iter().zip(&r.spectral.multiplicities).enumerate() {
        let _ = writeln!(s, "{i:>3}  {:<40} {m:>10}", sc(t));
    }
    let _ = writeln!(s, "\nlight tails");
    for lt in r.krein.light_tail_scan.iter().filter(|l| l.is_light_tail) {
        let _ = writeln!(
            s,
            "  E_{} with F = E_{}  a = {}  b = {}",
            lt.eigenvalue_index,
            lt.associated_index.unwrap(),
            lt.a_coeff.as_ref().map(sc).unwrap_or_default(),
            lt.b_coeff.as_ref().map(sc).unwrap_or_default()
        );
    }
    if !r.krein.light_tail_scan.iter().any(|l| l.is_light_tail) {
        let _ = writeln!(s, "  none");
    }
    let _ = writeln!(s, "\nbounds");
    let line = |name: &str, o: &BoundOutcome<drgkit::bounds::BoundReport>| match o {
        BoundOutcome::Evaluated { report } => format!(
            "  {name:<22} {} {:?} {}\n",
            sc(&report.lhs),
            report.relation,
            sc(&report.rhs)
        ),
        BoundOutcome::NotApplicable { reasons } => format!("  {name:<22} n/a ({})\n", reasons.join("; ")),
    };
    for (i, m) in r.bounds.multiplicity.iter().enumerate() {
        s += &line(&format!("multiplicity m_{}", i + 1), m);
    }
    s += &line("theta_1 lower", &r.bounds.theta1_lower);
    s += &line("theta_1 upper", &r.bounds.theta1_upper);
    let _ = match &r.bounds.light_tail_sufficiency {
        BoundOutcome::Evaluated { report } => writeln!(s, "  {:<22} {}", "squeeze", report.holds),
        BoundOutcome::NotApplicable { reasons } => writeln!(s, "  {:<22} n/a ({})", "squeeze", reasons.join("; ")),
    };
    let _ = writeln!(s, "  {:<22} {}", "profile identity", r.bounds.profile.holds);
    let g = &r.geometric.profile;
    let _ = writeln!(s, "\ngeometric");
    let _ = writeln!(s, "  clique bound           {}", sc(&g.clique_bound));
    let _ = writeln!(s, "  theta_D = -k/(a_1+1)   {}", g.geometric_premise);
    if let Some(gamma) = &g.gamma {
        let _ = writeln!(s, "  gamma                  {}", gamma.iter().map(sc).collect::<Vec<_>>().join(" "));
    }
    let _ = writeln!(s, "  boundedness m          {}", r.geometric.boundedness.m);
    let _ = writeln!(s, "\nclassification");
    let mut verdicts = vec![("hermitian", &r.classification.hermitian), ("half-valency", &r.classification.half_valency)];
    if let Some(b) = &r.classification.bounded {
        verdicts.push(("bounded", b));
    }
    for (name, v) in verdicts {
        let _ = writeln!(s, "  {name:<14} {}", serde_json::to_string(&v.verdict).unwrap());
        for step in &v.trace {
            let _ = writeln!(s, "    [{}] {:<28} {}", if step.passed { "ok" } else { "!!" }, step.step, step.equation);
        }
        for c in &v.conditional_on {
            let _ = writeln!(s, "    conditional on: {c}");
        }
    }
    if let Some(gs) = &r.graph {
        let m = &gs.measured;
        let _ = writeln!(s, "\ngraph {} {:?}", gs.family, gs.parameters);
        let _ = writeln!(s, "  vertices {}  edges {}", gs.n, gs.edges);
        let _ = writeln!(s, "  measured array         {}", m.intersection_array);
        let _ = writeln!(s, "  measured gamma         {:?}", m.gamma_measured);
        let _ = writeln!(s, "  maximal cliques        {:?}", m.maximal_clique_sizes);
        let _ = writeln!(s, "  Delsarte complete      {}", m.delsarte_complete);
        let _ = writeln!(s, "  K_112-free             {}", m.is_k112_free);
        let _ = writeln!(s, "  locally cliques        {}", m.locally_disjoint_cliques);
        if let Some(c) = &gs.completely_regular {
            let ok = c.iter().filter(|x| x.is_completely_regular).count();
            let _ = writeln!(s, "  completely regular     {ok}/{}", c.len());
        }
        match &gs.induced_gq {
            Some(BoundOutcome::Evaluated { report }) => {
                let _ = writeln!(s, "  induced GQ({},{})        {} on {} vertices", report.s, report.t, report.is_gq, report.vertices.len());
            }
            Some(BoundOutcome::NotApplicable { reasons }) => {
                let _ = writeln!(s, "  induced GQ             n/a ({})", reasons.join("; "));
            }
            None => {}
        }
        if let Some(lt) = &gs.light_tail {
            let _ = writeln!(s, "  graph light tail       {}", lt.is_light_tail);
        }
        let _ = writeln!(s, "  all checks pass        {}", gs.all_checks_pass);
    }
    s.trim_end().to_string()
}

fn export(g: &FiniteGraph, path: &std::path::Path, fmt: ExportFormat) -> Result<(), ReportError> {
    let body = match fmt {
        ExportFormat::Edges => g.to_edge_list(),
        ExportFormat::Json => serde_json::to_string(&g.to_json()).unwrap(),
    };
    std::fs::write(path, body).map_err(|e| ReportError::Input(format!("cannot write {}: {e}", path.display())))
}

fn run(cli: &Cli) -> Result<(), ReportError> {
    match &cli.command {
        Command::Analyze { array, flags } => {
            emit(&analyze_text(array, opts(flags))?, cli.format);
        }
        Command::Classify {
            array,
            assume_2_bounded,
            m_bounded,
        } => {
            let o = AnalyzeOptions {
                assume_2_bounded: *assume_2_bounded,
                krein_full: false,
            };
            let mut r = analyze_text(array, o)?;
            let arr = parse_array(array).map_err(|e| ReportError::Input(e.to_string()))?;
            let spec = arr.spectral()?;
            r.classification = classify(&arr, &spec, *assume_2_bounded, *m_bounded)?;
            emit(&r, cli.format);
        }
        Command::Search {
            max_k,
            max_d,
            min_k,
            a1,
            hypotheses,
            flags,
        } => {
            let p = SearchParams {
                max_k: *max_k,
                max_d: *max_d,
                min_k: *min_k,
                a1: *a1,
                hypothesis: hypotheses.map(|h| match h {
                    HypothesisArg::Thm12 => Hypothesis::Thm12,
                    HypothesisArg::Lt => Hypothesis::Lt,
                }),
            };
            let out = search(&p).map_err(|e| ReportError::Input(e.to_string()))?;
            if !cli.quiet {
                eprintln!(
                    "drgkit: {} hits; {} candidates, rejected: {} multiplicity, {} Krein, {} hypothesis",
                    out.hits.len(),
                    out.stats.candidates,
                    out.stats.rejected_multiplicity,
                    out.stats.rejected_krein,
                    out.stats.rejected_hypothesis
                );
            }
            for arr in &out.hits {
                let r = analyze(arr, &arr.to_text(), opts(flags))?;
                match cli.format {
                    Format::Json => println!("{}", serde_json::to_string(&r).unwrap()),
                    Format::Table => println!("{}\n", render_table(&r)),
                }
            }
        }
        Command::Construct {
            family,
            d,
            q,
            verify,
            export: path,
            export_format,
            flags,
        } => {
            let fam = match family {
                FamilyArg::Hermitian => Family::Hermitian,
                FamilyArg::Hamming => Family::Hamming,
            };
            let level = match verify {
                VerifyArg::Basic => VerifyLevel::Basic,
                VerifyArg::Full => VerifyLevel::Full,
            };
            let (r, g) = construct_report(fam, *d, *q, level, opts(flags))?;
            if let Some(path) = path {
                export(&g, path, *export_format)?;
            }
            emit(&r, cli.format);
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(j) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(j.max(1)).build_global() {
            eprintln!("drgkit: cannot configure {j} workers: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => fail(&e, cli.quiet),
    }
}
