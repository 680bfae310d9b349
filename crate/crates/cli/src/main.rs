use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use gerbe_core::algebra::{GroupHom, GroupTable, SourceGroup};
use gerbe_core::cohomology::cohomology_group;
use gerbe_core::io::{self, GroupOrComplex};
use gerbe_core::monodromy::{
    extensions, giraud_h2, h0_crossed, h1_nonabelian, h2_constant_abelian, split_check, ExactSeqReport,
};
use gerbe_core::spaces::pi1_presentation;
use gerbe_core::verify::{self, Fault, Suite, VerifyConfig};
use gerbe_core::xmod::gr_cat_from_crossed_module;
use gerbe_core::{Caps, Error};

/// Cohomology of spaces with locally constant coefficients, from finite
/// algebraic models.
#[derive(Parser)]
#[command(name = "gerbe", version)]
struct Cli {
    #[command(flatten)]
    config: RunConfig,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct RunConfig {
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for sampled checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Largest group order for Aut(G) enumeration.
    #[arg(long, global = true)]
    cap_aut: Option<usize>,
    /// Candidate tuples in homomorphism enumeration.
    #[arg(long, global = true)]
    cap_homs: Option<u128>,
    /// Search nodes in the cochain oracles.
    #[arg(long, global = true)]
    cap_cochains: Option<u128>,
    /// Candidate monoidal data.
    #[arg(long, global = true)]
    cap_monoidal: Option<u128>,
    /// Largest cochain dimension.
    #[arg(long, global = true)]
    cap_matrix: Option<usize>,
    /// Largest group table built.
    #[arg(long, global = true)]
    cap_table: Option<usize>,
}

impl RunConfig {
    fn caps(&self) -> Caps {
        let d = Caps::default();
        Caps {
            aut_order: self.cap_aut.unwrap_or(d.aut_order),
            hom_tuples: self.cap_homs.unwrap_or(d.hom_tuples),
            cochains: self.cap_cochains.unwrap_or(d.cochains),
            monoidal: self.cap_monoidal.unwrap_or(d.monoidal),
            matrix_dim: self.cap_matrix.unwrap_or(d.matrix_dim),
            table_order: self.cap_table.unwrap_or(d.table_order),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Hⁿ(P; A) of a finite group with coefficients in a module.
    Cohomology {
        #[arg(short = 'P', long = "group")]
        group: PathBuf,
        #[arg(short = 'A', long = "module")]
        module: PathBuf,
        #[arg(short, long)]
        n: usize,
    },
    /// Classification of local systems, stacks and extensions.
    Classify {
        #[command(subcommand)]
        kind: Classify,
    },
    /// Fundamental group presentation of a simplicial 2-complex.
    Pi1 {
        #[arg(long)]
        complex: PathBuf,
        #[arg(long, default_value_t = 0)]
        basepoint: usize,
        /// Print the edge-path presentation without simplifying.
        #[arg(long)]
        raw: bool,
    },
    /// Validates a crossed module and reports its invariants.
    CheckCrossed {
        #[arg(long)]
        crossed: PathBuf,
    },
    /// Runs the verification suite.
    Verify {
        /// Restrict to these suites (default: all).
        #[arg(long = "suite", value_enum)]
        suites: Vec<SuiteArg>,
        /// Corrupt a result on purpose to exercise the checker.
        #[arg(long, value_enum)]
        inject_fault: Option<FaultArg>,
    },
}

#[derive(Subcommand)]
enum Classify {
    /// H¹(X; G) = Hom(π₁, G)/G.
    H1 {
        /// Group or complex file.
        #[arg(long)]
        pi1: PathBuf,
        #[arg(long)]
        basepoint: Option<usize>,
        #[arg(long = "G")]
        g: PathBuf,
    },
    /// H⁰(X; G⁻¹ → G⁰).
    H0Crossed {
        #[arg(long)]
        pi1: PathBuf,
        #[arg(long)]
        basepoint: Option<usize>,
        #[arg(long)]
        crossed: PathBuf,
    },
    /// H²(X; G) for abelian G with the Hopf sequence.
    H2 {
        #[arg(long)]
        twotype: PathBuf,
        #[arg(long = "G")]
        g: PathBuf,
        /// Also build and check the splitting (k must vanish).
        #[arg(long)]
        split: bool,
    },
    /// Giraud's H²(X; G → Aut(G)) with its sequence of pointed sets.
    Gerbes {
        #[arg(long)]
        twotype: PathBuf,
        #[arg(long = "G")]
        g: PathBuf,
    },
    /// Extensions of P by G.
    Extensions {
        #[arg(long = "P")]
        p: PathBuf,
        #[arg(long = "G")]
        g: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Cohomology,
    Gcd,
    Hurewicz,
    CrossedH0,
    Hopf,
    Split,
    Obstruction,
    Extensions,
    Giraud,
    Descent,
    Pi1,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::Cohomology => Suite::Cohomology,
            SuiteArg::Gcd => Suite::Gcd,
            SuiteArg::Hurewicz => Suite::Hurewicz,
            SuiteArg::CrossedH0 => Suite::CrossedH0,
            SuiteArg::Hopf => Suite::Hopf,
            SuiteArg::Split => Suite::Split,
            SuiteArg::Obstruction => Suite::Obstruction,
            SuiteArg::Extensions => Suite::Extensions,
            SuiteArg::Giraud => Suite::Giraud,
            SuiteArg::Descent => Suite::Descent,
            SuiteArg::Pi1 => Suite::Pi1,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FaultArg {
    SequenceMap,
    CohomologyOrder,
}

impl From<FaultArg> for Fault {
    fn from(f: FaultArg) -> Fault {
        match f {
            FaultArg::SequenceMap => Fault::SequenceMap,
            FaultArg::CohomologyOrder => Fault::CohomologyOrder,
        }
    }
}

/// Output of a successful command: text or JSON, plus whether it counts as
/// a pass for the exit code.
struct Output {
    text: String,
    json: Value,
    ok: bool,
}

impl Output {
    fn ok(text: String, json: Value) -> Self {
        Output { text, json, ok: true }
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn in_file<T>(path: &Path, r: gerbe_core::Result<T>) -> Result<T> {
    r.with_context(|| format!("in {}", path.display()))
}

fn table(path: &Path, caps: &Caps) -> Result<GroupTable> {
    let source = in_file(path, io::read_group(&read(path)?))?;
    in_file(path, io::table_of(&source, caps))
}

fn source_group(path: &Path, basepoint: Option<usize>) -> Result<SourceGroup> {
    match in_file(path, io::read_group_or_complex(&read(path)?))? {
        GroupOrComplex::Group(g) => Ok(g),
        GroupOrComplex::Complex(x) => {
            let p = in_file(path, pi1_presentation(&x, basepoint.unwrap_or(0)))?;
            Ok(SourceGroup::Presentation(p.simplify()))
        }
    }
}

fn show_factors(factors: &[u64]) -> String {
    if factors.is_empty() {
        "0".into()
    } else {
        factors.iter().map(|d| format!("Z/{d}")).collect::<Vec<_>>().join(" + ")
    }
}

fn show_word(w: &[i32]) -> String {
    w.iter()
        .map(|&l| if l > 0 { format!("x{l}") } else { format!("x{}^-1", -l) })
        .collect::<Vec<_>>()
        .join(" ")
}

fn plural(n: usize, noun: &str) -> String {
    match (n, noun.ends_with('s')) {
        (1, _) => format!("{n} {noun}"),
        (_, true) => format!("{n} {noun}es"),
        _ => format!("{n} {noun}s"),
    }
}

fn classes(n: usize) -> String {
    plural(n, "class")
}

fn sequence_text(r: &ExactSeqReport) -> String {
    let terms: Vec<String> = r.terms.iter().map(|t| format!("{} [{}]", t.name, t.size)).collect();
    let mut s = terms.join(" -> ");
    for e in &r.exact_at {
        s.push_str(&format!("\n  exact at {}: {}", r.terms[e.term].name, e.exact));
        if let Some(w) = &e.witness {
            s.push_str(&format!(" ({w:?})"));
        }
    }
    s
}

fn sequence_json(r: &ExactSeqReport) -> Value {
    json!({
        "terms": r.terms.iter().map(|t| json!({"name": t.name, "order": t.size})).collect::<Vec<_>>(),
        "exact": r.exact_at.iter().map(|e| e.exact).collect::<Vec<_>>(),
    })
}

fn hom_json(h: &GroupHom) -> Value {
    json!(h.images)
}

fn run(cli: &Cli) -> Result<Output> {
    let caps = cli.config.caps();
    match &cli.command {
        Command::Cohomology { group, module, n } => {
            let p = table(group, &caps)?;
            let a = in_file(module, io::read_module(&read(module)?, &p))?;
            let h = cohomology_group(&p, &a, *n, &caps)?;
            let reps: Vec<Value> = h.representatives().iter().map(|c| json!(c.entries())).collect();
            Ok(Output::ok(
                format!("H^{n} = {}", show_factors(h.invariant_factors())),
                json!({
                    "kind": "cohomology",
                    "degree": n,
                    "order": h.order().to_string().parse::<u64>().unwrap_or(u64::MAX),
                    "invariant_factors": h.invariant_factors(),
                    "representatives": reps,
                }),
            ))
        }
        Command::Classify { kind } => classify(kind, &caps),
        Command::Pi1 { complex, basepoint, raw } => {
            let x = in_file(complex, io::read_complex(&read(complex)?))?;
            let mut p = in_file(complex, pi1_presentation(&x, *basepoint))?;
            if !raw {
                p = p.simplify();
            }
            let ab = p.abelianization();
            let relators: Vec<String> = p.relators().iter().map(|w| show_word(w)).collect();
            Ok(Output::ok(
                format!(
                    "{}, {}\nrelators: {}\nabelianization: {}",
                    plural(p.n_generators(), "generator"),
                    plural(p.relators().len(), "relator"),
                    if relators.is_empty() { "none".into() } else { relators.join(", ") },
                    verify::show_abelian(&ab),
                ),
                json!({
                    "kind": "presentation",
                    "generators": p.n_generators(),
                    "relators": p.relators(),
                    "abelianization": {
                        "rank": ab.0,
                        "torsion": ab.1.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
                    },
                }),
            ))
        }
        Command::CheckCrossed { crossed } => {
            let x = in_file(crossed, io::read_crossed(&read(crossed)?, &caps))?;
            let (h, _, kc) = gr_cat_from_crossed_module(&x)?;
            let h3 = cohomology_group(&h.p, &h.a, 3, &caps)?;
            let k = h3.classify(&h.assoc)?;
            Ok(Output::ok(
                format!(
                    "valid crossed module\nker d: order {}\ncoker d: order {}\nk-invariant: {:?} in H^3 = {}",
                    kc.ker.order(),
                    kc.coker.table.order(),
                    k,
                    show_factors(h3.invariant_factors()),
                ),
                json!({
                    "kind": "crossed-module",
                    "ker_order": kc.ker.order(),
                    "coker_order": kc.coker.table.order(),
                    "pi2_factors": h.a.factors(),
                    "k_invariant": k,
                    "h3_invariant_factors": h3.invariant_factors(),
                }),
            ))
        }
        Command::Verify { suites, inject_fault } => {
            let suites: Vec<Suite> =
                if suites.is_empty() { Suite::ALL.to_vec() } else { suites.iter().map(|&s| s.into()).collect() };
            let cfg = VerifyConfig { caps, seed: cli.config.seed, fault: inject_fault.map(Fault::from) };
            let report = verify::run(&suites, &cfg);
            let checks: Vec<Value> = report
                .checks
                .iter()
                .map(|c| {
                    let (status, reason) = match &c.status {
                        verify::Status::Pass => ("pass", None),
                        verify::Status::Fail => ("fail", None),
                        verify::Status::Skipped(why) => ("skip", Some(why.clone())),
                    };
                    json!({
                        "suite": c.suite.name(),
                        "name": c.name,
                        "expected": c.expected,
                        "actual": c.actual,
                        "status": status,
                        "reason": reason,
                    })
                })
                .collect();
            Ok(Output {
                text: report.to_string().trim_end().to_string(),
                json: json!({"kind": "verify", "seed": report.seed, "passed": report.passed(), "checks": checks}),
                ok: report.passed(),
            })
        }
    }
}

fn classify(kind: &Classify, caps: &Caps) -> Result<Output> {
    match kind {
        Classify::H1 { pi1, basepoint, g } => {
            let src = source_group(pi1, *basepoint)?;
            let g = table(g, caps)?;
            let h = h1_nonabelian(&src, &g, caps)?;
            let lines: Vec<String> = h.elements.iter().map(|e| format!("  {:?}", e.images)).collect();
            Ok(Output::ok(
                format!("{}\n{}", classes(h.len()), lines.join("\n")),
                json!({
                    "kind": "h1",
                    "classes": h.len(),
                    "basepoint": h.basepoint,
                    "representatives": h.elements.iter().map(hom_json).collect::<Vec<_>>(),
                }),
            ))
        }
        Classify::H0Crossed { pi1, basepoint, crossed } => {
            let src = source_group(pi1, *basepoint)?;
            let x = in_file(crossed, io::read_crossed(&read(crossed)?, caps))?;
            let h = h0_crossed(&src, &x, caps)?;
            Ok(Output::ok(
                format!(
                    "order {} = |Hom(pi1, ker d)| {} x |coker d| {}\nabelian: {}",
                    h.order(),
                    h.homs.len(),
                    h.coker.table.order(),
                    h.table.is_abelian()
                ),
                json!({
                    "kind": "h0-crossed",
                    "order": h.order(),
                    "homs": h.homs.len(),
                    "coker_order": h.coker.table.order(),
                    "mul": h.table.rows(),
                }),
            ))
        }
        Classify::H2 { twotype, g, split } => {
            let t = in_file(twotype, io::read_two_type(&read(twotype)?, caps))?;
            let g = table(g, caps)?;
            let (m, section) = if *split {
                let (m, s) = split_check(&t, &g, caps)?;
                (m, Some(s))
            } else {
                (h2_constant_abelian(&t, &g, caps)?, None)
            };
            let factors = m.invariant_factors(caps)?;
            let mut text = format!("H^2 = {} (order {})\n{}", show_factors(&factors), m.order(), sequence_text(&m.report));
            let mut out = json!({
                "kind": "h2",
                "order": m.order(),
                "invariant_factors": factors,
                "sequence": sequence_json(&m.report),
            });
            let mut ok = m.report.is_exact();
            if let Some(s) = section {
                text.push_str(&format!(
                    "\nsplitting: section {}, homomorphism {}, product {}",
                    s.is_section, s.is_hom, s.is_product
                ));
                out["split"] = json!({"section": s.is_section, "homomorphism": s.is_hom, "product": s.is_product});
                ok &= s.is_section && s.is_hom && s.is_product;
            }
            Ok(Output { text, json: out, ok })
        }
        Classify::Gerbes { twotype, g } => {
            let t = in_file(twotype, io::read_two_type(&read(twotype)?, caps))?;
            let g = table(g, caps)?;
            let r = giraud_h2(&t, &g, caps)?;
            Ok(Output {
                text: format!("{}\n{}", classes(r.middle.len()), sequence_text(&r.report)),
                json: json!({
                    "kind": "gerbes",
                    "classes": r.middle.len(),
                    "sequence": sequence_json(&r.report),
                }),
                ok: r.report.is_exact(),
            })
        }
        Classify::Extensions { p, g } => {
            let p = table(p, caps)?;
            let g = table(g, caps)?;
            let e = extensions(&p, &g, caps)?;
            let lines: Vec<String> = e
                .classes
                .elements
                .iter()
                .map(|c| format!("  outer action {:?}, H^2 coordinate {:?}", c.outer_action, c.h2_coordinate))
                .collect();
            Ok(Output::ok(
                format!("{}\n{}", classes(e.len()), lines.join("\n")),
                json!({
                    "kind": "extensions",
                    "classes": e.len(),
                    "representatives": e.classes.elements.iter().map(|c| json!({
                        "outer_action": c.outer_action,
                        "h2_coordinate": c.h2_coordinate,
                    })).collect::<Vec<_>>(),
                }),
            ))
        }
    }
}

fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<Error>() {
        Some(e) if e.is_cap() => 3,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            if cli.config.json {
                println!("{}", serde_json::to_string_pretty(&out.json).expect("serializable"));
            } else {
                println!("{}", out.text);
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
