use std::time::{Duration, Instant};

use gerbe_core::algebra::GroupTable;
use gerbe_core::monodromy::extensions;
use gerbe_core::oracle::brute_extensions;
use gerbe_core::verify::{hopf_grid, run, Report, Status, Suite, VerifyConfig};
use gerbe_core::Caps;

struct Line {
    n: usize,
    title: &'static str,
    pass: bool,
    detail: String,
}

fn skipped(r: &Report) -> Vec<String> {
    r.checks
        .iter()
        .filter(|c| matches!(c.status, Status::Skipped(_)))
        .map(|c| c.name.clone())
        .collect()
}

fn suite(suite: Suite, cfg: &VerifyConfig) -> (Report, Duration) {
    let t = Instant::now();
    let r = run(&[suite], cfg);
    (r, t.elapsed())
}

/// Clean when nothing failed and something was actually checked.
fn clean(r: &Report) -> bool {
    r.passed() && r.checks.iter().any(|c| c.status == Status::Pass)
}

fn summary(r: &Report, elapsed: Duration) -> String {
    let failures: Vec<String> = r.failures().map(|c| format!("{}: expected {}, got {}", c.name, c.expected, c.actual)).collect();
    let passes = r.checks.iter().filter(|c| c.status == Status::Pass).count();
    let mut s = format!("{passes} checks passed in {elapsed:.1?}");
    if !failures.is_empty() {
        s.push_str(&format!("; failures: {}", failures.join("; ")));
    }
    s
}

fn by_suite(n: usize, title: &'static str, s: Suite, cfg: &VerifyConfig, budget: Option<Duration>) -> Line {
    let (r, elapsed) = suite(s, cfg);
    let mut pass = clean(&r);
    let mut detail = summary(&r, elapsed);
    if let Some(b) = budget {
        pass &= elapsed < b;
        detail.push_str(&format!(" (budget {b:?})"));
    }
    Line { n, title, pass, detail }
}

fn main() {
    let cfg = VerifyConfig::default();
    let mut lines = Vec::new();

    let deep = VerifyConfig { caps: Caps { cochains: 30_000_000, ..Caps::default() }, ..VerifyConfig::default() };
    let (r, elapsed) = suite(Suite::Cohomology, &deep);
    let skips = skipped(&r);
    lines.push(Line {
        n: 1,
        title: "cohomology matches brute-force cocycles",
        pass: clean(&r) && elapsed < Duration::from_secs(60),
        detail: format!("{}; {} cases over the oracle cap: {}", summary(&r, elapsed), skips.len(), skips.join(", ")),
    });

    lines.push(by_suite(2, "H2(Z/m; Z/n) has order gcd(m, n)", Suite::Gcd, &cfg, None));
    lines.push(by_suite(3, "H1(Z; G) counts conjugacy classes", Suite::Hurewicz, &cfg, None));
    lines.push(by_suite(4, "H0 of the adjoint crossed module is Hom(Z, Z(G)) x| Out(G)", Suite::CrossedH0, &cfg, None));

    let grid = hopf_grid(&cfg.caps).map(|g| g.len()).unwrap_or(0);
    let mut l = by_suite(5, "abelian exact sequence on the two-type grid", Suite::Hopf, &cfg, Some(Duration::from_secs(120)));
    l.pass &= grid >= 20;
    l.detail.push_str(&format!(", {grid} two-types"));
    lines.push(l);

    lines.push(by_suite(6, "split case: orders multiply and the section is a section", Suite::Split, &cfg, None));
    lines.push(by_suite(7, "nonzero k obstructs surjectivity, zero k does not", Suite::Obstruction, &cfg, None));

    let mut l = by_suite(8, "extension classes match brute-force group laws", Suite::Extensions, &cfg, None);
    for (p, g, want) in [(2, 3, 2), (2, 2, 2)] {
        let (p, g) = (GroupTable::cyclic(p), GroupTable::cyclic(g));
        let fast = extensions(&p, &g, &cfg.caps).map(|e| e.len()).ok();
        let brute = brute_extensions(&p, &g, &cfg.caps).ok();
        l.pass &= fast == Some(want) && brute == Some(want);
        l.detail.push_str(&format!(", Z{}/Z{}: {fast:?} vs {brute:?}", p.order(), g.order()));
    }
    lines.push(l);

    lines.push(by_suite(9, "non-abelian exact sequence for S3", Suite::Giraud, &cfg, Some(Duration::from_secs(120))));
    lines.push(by_suite(10, "descent coherence agrees with the cocycle condition", Suite::Descent, &cfg, None));
    lines.push(by_suite(11, "fundamental groups of small complexes", Suite::Pi1, &cfg, None));

    let a = run(&Suite::ALL, &cfg).to_string();
    let b = run(&Suite::ALL, &cfg).to_string();
    lines.push(Line {
        n: 12,
        title: "full verify report is deterministic",
        pass: a == b && !a.is_empty(),
        detail: format!("{} bytes, identical: {}", a.len(), a == b),
    });

    for l in &lines {
        println!("criterion {:>2}: {} {} ({})", l.n, if l.pass { "PASS" } else { "FAIL" }, l.title, l.detail);
    }
    let failed: Vec<usize> = lines.iter().filter(|l| !l.pass).map(|l| l.n).collect();
    if failed.is_empty() {
        println!("acceptance: all {} criteria pass", lines.len());
    } else {
        println!("acceptance: failed criteria {failed:?}");
        std::process::exit(1);
    }
}
