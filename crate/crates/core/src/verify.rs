//! The batch verification suite: formula pipelines against the naive
//! oracles and against closed-form expectations, over fixed grids of small
//! instances. Reports are deterministic for a given configuration and seed.

use std::fmt::{self, Write as _};

use num_bigint::BigInt;
use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{enumerate_homs, structure, GroupTable, Presentation, SourceGroup};
use crate::caps::Caps;
use crate::cohomology::{coboundary, cohomology_group, is_cocycle};
use crate::descent::{isomorphic, transform, validate_datum, MonoidalDatum, Target};
use crate::error::Result;
use crate::monodromy::{
    extensions, giraud_h2, h0_crossed, h1_nonabelian, h2_constant_abelian, split_check,
};
use crate::oracle::{brute_cocycles, brute_extensions, brute_monoidal};
use crate::spaces::{pi1_presentation, Cochain, Complex2, PModule, TwoType};
use crate::xmod::{adjoint_crossed_module, SkeletalGrCat};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Suite {
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

impl Suite {
    pub const ALL: [Suite; 11] = [
        Suite::Cohomology,
        Suite::Gcd,
        Suite::Hurewicz,
        Suite::CrossedH0,
        Suite::Hopf,
        Suite::Split,
        Suite::Obstruction,
        Suite::Extensions,
        Suite::Giraud,
        Suite::Descent,
        Suite::Pi1,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Cohomology => "cohomology",
            Suite::Gcd => "gcd",
            Suite::Hurewicz => "hurewicz",
            Suite::CrossedH0 => "crossed-h0",
            Suite::Hopf => "hopf",
            Suite::Split => "split",
            Suite::Obstruction => "obstruction",
            Suite::Extensions => "extensions",
            Suite::Giraud => "giraud",
            Suite::Descent => "descent",
            Suite::Pi1 => "pi1",
        }
    }

    pub fn from_name(name: &str) -> Option<Suite> {
        Suite::ALL.into_iter().find(|s| s.name() == name)
    }
}

/// Deliberate corruption of a pipeline result, to check that the suite
/// notices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fault {
    /// Sends one element of each Hopf sequence's middle term to a wrong
    /// image.
    SequenceMap,
    /// Adds one to every cohomology order before comparison.
    CohomologyOrder,
}

impl Fault {
    pub fn from_name(name: &str) -> Option<Fault> {
        match name {
            "sequence-map" => Some(Fault::SequenceMap),
            "cohomology-order" => Some(Fault::CohomologyOrder),
            _ => None,
        }
    }
}

#[derive(Clone, Debug)]
#[derive(Default)]
pub struct VerifyConfig {
    pub caps: Caps,
    pub seed: u64,
    pub fault: Option<Fault>,
}


#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skipped(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub suite: Suite,
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub status: Status,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub seed: u64,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn count(&self, suite: Suite, status: &Status) -> usize {
        self.checks
            .iter()
            .filter(|c| c.suite == suite && std::mem::discriminant(&c.status) == std::mem::discriminant(status))
            .count()
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "seed {}", self.seed)?;
        for c in &self.checks {
            match &c.status {
                Status::Pass => writeln!(f, "PASS {} {}: {}", c.suite.name(), c.name, c.actual)?,
                Status::Fail => writeln!(
                    f,
                    "FAIL {} {}: expected {}, got {}",
                    c.suite.name(),
                    c.name,
                    c.expected,
                    c.actual
                )?,
                Status::Skipped(why) => writeln!(f, "SKIP {} {}: {}", c.suite.name(), c.name, why)?,
            }
        }
        let fails = self.failures().count();
        let skips = self.checks.iter().filter(|c| matches!(c.status, Status::Skipped(_))).count();
        writeln!(f, "{} checks, {} failed, {} skipped", self.checks.len(), fails, skips)
    }
}

struct Recorder<'a> {
    suite: Suite,
    cfg: &'a VerifyConfig,
    checks: Vec<Check>,
}

impl Recorder<'_> {
    fn compare(&mut self, name: impl Into<String>, expected: impl fmt::Display, actual: impl fmt::Display) {
        let (expected, actual) = (expected.to_string(), actual.to_string());
        let status = if expected == actual { Status::Pass } else { Status::Fail };
        self.checks.push(Check { suite: self.suite, name: name.into(), expected, actual, status });
    }

    fn truth(&mut self, name: impl Into<String>, ok: bool, detail: impl fmt::Display) {
        let status = if ok { Status::Pass } else { Status::Fail };
        self.checks.push(Check {
            suite: self.suite,
            name: name.into(),
            expected: "holds".into(),
            actual: detail.to_string(),
            status,
        });
    }

    /// Runs `f`; a cap error becomes a skip, any other error a failure.
    fn guarded(&mut self, name: impl Into<String>, f: impl FnOnce(&mut Self) -> Result<()>) {
        let name = name.into();
        if let Err(e) = f(self) {
            let status = if e.is_cap() { Status::Skipped(e.to_string()) } else { Status::Fail };
            self.checks.push(Check {
                suite: self.suite,
                name,
                expected: "no error".into(),
                actual: e.to_string(),
                status,
            });
        }
    }
}

pub fn run(suites: &[Suite], cfg: &VerifyConfig) -> Report {
    let mut checks = Vec::new();
    for &suite in suites {
        let mut r = Recorder { suite, cfg, checks: Vec::new() };
        match suite {
            Suite::Cohomology => suite_cohomology(&mut r),
            Suite::Gcd => suite_gcd(&mut r),
            Suite::Hurewicz => suite_hurewicz(&mut r),
            Suite::CrossedH0 => suite_crossed_h0(&mut r),
            Suite::Hopf => suite_hopf(&mut r),
            Suite::Split => suite_split(&mut r),
            Suite::Obstruction => suite_obstruction(&mut r),
            Suite::Extensions => suite_extensions(&mut r),
            Suite::Giraud => suite_giraud(&mut r),
            Suite::Descent => suite_descent(&mut r),
            Suite::Pi1 => suite_pi1(&mut r),
        }
        checks.append(&mut r.checks);
    }
    Report { seed: cfg.seed, checks }
}

/// Named groups used across the suites.
pub fn fixture_groups() -> Vec<(&'static str, GroupTable)> {
    let z = GroupTable::cyclic;
    vec![
        ("1", GroupTable::trivial()),
        ("Z2", z(2)),
        ("Z3", z(3)),
        ("Z4", z(4)),
        ("Z2xZ2", z(2).product(&z(2))),
        ("Z5", z(5)),
        ("Z6", z(6)),
        ("S3", GroupTable::symmetric(3)),
        ("Z7", z(7)),
        ("Z8", z(8)),
        ("Z4xZ2", z(4).product(&z(2))),
        ("Z2xZ2xZ2", z(2).product(&z(2)).product(&z(2))),
        ("D4", GroupTable::dihedral(4)),
        ("Q8", GroupTable::quaternion()),
    ]
}

fn fixture(name: &str) -> GroupTable {
    fixture_groups().into_iter().find(|(n, _)| *n == name).expect("fixture").1
}

/// `Z/d` with `P` acting through its first nontrivial homomorphism to
/// `Z/2` by negation, if `P` has one and negation is not the identity.
pub fn sign_module(p: &GroupTable, d: u64, caps: &Caps) -> Result<Option<PModule>> {
    if d <= 2 {
        return Ok(None);
    }
    let homs = enumerate_homs(&SourceGroup::Table(p.clone()), &GroupTable::cyclic(2), caps)?;
    let Some(sign) = homs.get(1) else { return Ok(None) };
    let matrices: Vec<Vec<Vec<i64>>> =
        sign.images.iter().map(|&s| vec![vec![if s == 1 { -1 } else { 1 }]]).collect();
    Ok(Some(PModule::new(p, vec![d], &matrices)?))
}

/// Trivial and (where available) sign-twisted versions of `Z/d`, labelled.
fn modules(p: &GroupTable, d: u64, caps: &Caps) -> Result<Vec<(String, PModule)>> {
    let mut out = vec![(format!("Z{d}"), PModule::trivial(p.order(), vec![d])?)];
    if let Some(m) = sign_module(p, d, caps)? {
        out.push((format!("Z{d}(-)"), m));
    }
    Ok(out)
}

fn suite_cohomology(r: &mut Recorder) {
    let caps = r.cfg.caps.clone();
    for pname in ["Z2", "Z3", "Z4", "Z2xZ2", "S3", "Z6"] {
        let p = fixture(pname);
        for d in [2, 3, 4] {
            let mods = match modules(&p, d, &caps) {
                Ok(m) => m,
                Err(e) => {
                    r.truth(format!("{pname} modules"), false, e);
                    continue;
                }
            };
            for (aname, a) in mods {
                for n in 1..=3 {
                    r.guarded(format!("H{n}({pname}; {aname})"), |r| {
                        let h = cohomology_group(&p, &a, n, &caps)?;
                        let mut order = h.order();
                        if r.cfg.fault == Some(Fault::CohomologyOrder) {
                            order += 1;
                        }
                        let brute = brute_cocycles(&p, &a, n, &caps)?;
                        r.compare(format!("H{n}({pname}; {aname})"), brute.classes, order);
                        Ok(())
                    });
                }
            }
        }
    }
}

fn suite_gcd(r: &mut Recorder) {
    let caps = r.cfg.caps.clone();
    for m in 2..=6u64 {
        for n in 2..=6u64 {
            let name = format!("H2(Z{m}; Z{n})");
            r.guarded(name.clone(), |r| {
                let p = GroupTable::cyclic(m as usize);
                let a = PModule::trivial(m as usize, vec![n])?;
                let order = cohomology_group(&p, &a, 2, &caps)?.order();
                r.compare(name.clone(), m.gcd(&n), order);
                match brute_cocycles(&p, &a, 2, &caps) {
                    Ok(b) => r.compare(format!("{name} oracle"), m.gcd(&n), b.classes),
                    Err(e) if e.is_cap() => r.checks.push(Check {
                        suite: r.suite,
                        name: format!("{name} oracle"),
                        expected: m.gcd(&n).to_string(),
                        actual: String::new(),
                        status: Status::Skipped(e.to_string()),
                    }),
                    Err(e) => return Err(e),
                }
                Ok(())
            });
        }
    }
}

fn integers() -> SourceGroup {
    SourceGroup::Presentation(Presentation::free(1))
}

fn suite_hurewicz(r: &mut Recorder) {
    let caps = r.cfg.caps.clone();
    for (name, g) in fixture_groups() {
        if g.order() > 8 {
            continue;
        }
        r.guarded(format!("H1(Z; {name})"), |r| {
            let h = h1_nonabelian(&integers(), &g, &caps)?;
            r.compare(format!("H1(Z; {name})"), g.conjugacy_classes().len(), h.len());
            Ok(())
        });
    }
}

fn suite_crossed_h0(r: &mut Recorder) {
    let caps = r.cfg.caps.clone();
    for name in ["Z4", "S3", "Z2xZ2", "D4", "Q8"] {
        let g = fixture(name);
        r.guarded(format!("H0(Z; {name} -> Aut)"), |r| {
            let x = adjoint_crossed_module(&g, &caps)?;
            let h0 = h0_crossed(&integers(), &x, &caps)?;
            let s = structure(&g, &caps)?;
            // Z(G) ⋊ Out(G) with (z, o)(z', o') = (z · α_o(z'), oo')
            let (nz, no) = (s.center.len(), s.out.table.order());
            let pos = |x: usize| s.center.iter().position(|&c| c == x).expect("central");
            let direct = |a: (usize, usize), b: (usize, usize)| {
                let moved = s.apply(s.out.transversal[a.1], s.center[b.0]);
                (pos(g.mul(s.center[a.0], moved)), s.out.table.mul(a.1, b.1))
            };
            r.compare(format!("order H0(Z; {name} -> Aut)"), nz * no, h0.order());
            // (φ, c) ↦ (φ(1), c)
            let to_direct = |x: usize| {
                let (i, c) = h0.split(x);
                (pos(h0.ker_embedding[h0.homs[i].images[0]]), c)
            };
            let mut hits = vec![false; nz * no];
            let mut hom = true;
            for x in 0..h0.order() {
                let (z, c) = to_direct(x);
                hits[z * no + c] = true;
                for y in 0..h0.order() {
                    hom &= to_direct(h0.table.mul(x, y)) == direct(to_direct(x), to_direct(y));
                }
            }
            r.truth(
                format!("table H0(Z; {name} -> Aut)"),
                hom && hits.iter().all(|&b| b),
                format!("bijective {}, multiplicative {hom}", hits.iter().all(|&b| b)),
            );
            Ok(())
        });
    }
}

/// Two-types over `π₁ ∈ {1, Z2, Z3, Z2xZ2}` and `π₂ ∈ {1, Z2, Z4}` with
/// trivial and sign actions, `k` ranging over the elements of `H³`.
pub fn hopf_grid(caps: &Caps) -> Result<Vec<(String, TwoType)>> {
    let mut out = Vec::new();
    for pname in ["1", "Z2", "Z3", "Z2xZ2"] {
        let p = fixture(pname);
        let mut pi2s = vec![("1".to_string(), PModule::trivial(p.order(), vec![])?)];
        for d in [2, 4] {
            pi2s.extend(modules(&p, d, caps)?);
        }
        for (aname, a) in pi2s {
            let h3 = cohomology_group(&p, &a, 3, caps)?;
            for (i, coords) in h3.elements().iter().enumerate() {
                let t = TwoType::new(p.clone(), a.clone(), h3.element(coords))?;
                out.push((format!("({pname}, {aname}, k{i})"), t));
            }
        }
    }
    Ok(out)
}

fn suite_hopf(r: &mut Recorder) {
    let caps = r.cfg.caps.clone();
    let grid = match hopf_grid(&caps) {
        Ok(g) => g,
        Err(e) => return r.truth("grid", false, e),
    };
    for (tname, t) in &grid {
        for gname in ["Z2", "Z4"] {
            let g = fixture(gname);
            let name = format!("{tname} G={gname}");
            r.guarded(name.clone(), |r| {
                let mut m = h2_constant_abelian(t, &g, &caps)?;
                if r.cfg.fault == Some(Fault::SequenceMap) && m.order() > 1 {
                    let last = m.order() - 1;
                    m.report.maps[2][last] = (m.report.maps[2][last] + 1) % m.homs.len();
                    m.report.recheck();
                }
                let flags: Vec<bool> = m.report.exact_at.iter().map(|e| e.exact).collect();
                let witness = m.report.exact_at.iter().find_map(|e| e.witness.clone());
                r.truth(
                    format!("{name} exact"),
                    m.report.is_exact(),
                    format!("order {}, flags {flags:?}{}", m.order(), witness.map(|w| format!(", witness {w:?}")).unwrap_or_default()),
                );
                let target = Target::abelian(&g)?;
                let valid = (0..m.order()).all(|x| validate_datum(&m.source, &target, &m.datum(x)).is_ok());
                r.truth(format!("{name} data valid"), valid, format!("{} data", m.order()));
                match brute_monoidal(&m.source, &g, &caps) {
                    Ok(reps) => r.compare(format!("{name} oracle"), reps.len(), m.order()),
                    Err(e) if e.is_cap() => {}
                    Err(e) => return Err(e),
                }
                Ok(())
            });
        }
    }
}

fn random_cochain(rng: &mut ChaCha8Rng, p: &GroupTable, a: &PModule, n: usize) -> Cochain {
    let mut c = Cochain::zero(p.order(), a, n);
    for i in 0..c.len() {
        let v: Vec<u64> = a.factors().iter().map(|&d| rng.gen_range(0..d)).collect();
        c.set_index(i, &v);
    }
    c
}

fn suite_split(r: &mut Recorder) {
    let caps = r.cfg.caps.clone();
    let mut rng = ChaCha8Rng::seed_from_u64(r.cfg.seed);
    let grid = match hopf_grid(&caps) {
        Ok(g) => g,
        Err(e) => return r.truth("grid", false, e),
    };
    // k = 0 from the grid, and k = dc for a random c
    for (tname, t) in grid.iter().filter(|(_, t)| t.k.is_zero()) {
        let c = random_cochain(&mut rng, &t.pi1, &t.pi2, 2);
        let twisted = TwoType { k: coboundary(&t.pi1, &t.pi2, &c), ..t.clone() };
        for (kname, tt) in [("k=0", t), ("k=dc", &twisted)] {
            for gname in ["Z2", "Z4"] {
                let g = fixture(gname);
                let name = format!("{tname} {kname} G={gname}");
                r.guarded(name.clone(), |r| {
                    let (m, s) = split_check(tt, &g, &caps)?;
                    let h2p = m.h2.order() as usize;
                    r.compare(format!("{name} order"), h2p * m.homs.len(), m.order());
                    r.truth(
                        format!("{name} section"),
                        s.is_section && s.is_hom && s.is_product,
                        format!("section {}, hom {}, product {}", s.is_section, s.is_hom, s.is_product),
                    );
                    Ok(())
                });
            }
        }
    }
}

fn suite_obstruction(r: &mut Recorder) {
    let caps = r.cfg.caps.clone();
    r.guarded("(Z2, Z2, k) G=Z2", |r| {
        let z2 = GroupTable::cyclic(2);
        let a = PModule::trivial(2, vec![2])?;
        let h3 = cohomology_group(&z2, &a, 3, &caps)?;
        for coords in h3.elements() {
            let t = TwoType::new(z2.clone(), a.clone(), h3.element(&coords))?;
            let m = h2_constant_abelian(&t, &z2, &caps)?;
            let mut hit = vec![false; m.homs.len()];
            for &f in &m.report.maps[2] {
                hit[f] = true;
            }
            let surjective = hit.iter().all(|&b| b);
            let id = m.homs.iter().position(|f| !f.is_zero()).expect("identity");
            let delta_id = m.delta[id].clone();
            let nonzero = coords.iter().any(|&c| c != 0);
            r.truth(
                format!("k={coords:?} projection"),
                surjective != nonzero && m.report.is_exact(),
                format!("surjective {surjective}, delta(id) {delta_id:?}, order {}", m.order()),
            );
            r.compare(format!("k={coords:?} delta(id) nonzero"), nonzero, delta_id.iter().any(|&c| c != 0));
        }
        Ok(())
    });
}

fn suite_extensions(r: &mut Recorder) {
    let caps = r.cfg.caps.clone();
    let names = ["1", "Z2", "Z3", "Z4", "Z2xZ2", "Z5", "Z6", "S3"];
    for pname in names {
        for gname in names {
            let (p, g) = (fixture(pname), fixture(gname));
            if p.order() * g.order() > 12 {
                continue;
            }
            let name = format!("Ext({pname}, {gname})");
            r.guarded(name.clone(), |r| {
                let e = extensions(&p, &g, &caps)?;
                let brute = brute_extensions(&p, &g, &caps)?;
                r.compare(name.clone(), brute, e.len());
                Ok(())
            });
        }
    }
}

fn suite_giraud(r: &mut Recorder) {
    let caps = r.cfg.caps.clone();
    let s3 = fixture("S3");
    for pname in ["1", "Z2"] {
        let p = fixture(pname);
        for d in [None, Some(2u64)] {
            let a = PModule::trivial(p.order(), d.into_iter().collect()).expect("valid");
            let h3 = match cohomology_group(&p, &a, 3, &caps) {
                Ok(h) => h,
                Err(e) => return r.truth("H3", false, e),
            };
            for coords in h3.elements() {
                let aname = d.map_or("1".to_string(), |d| format!("Z{d}"));
                let name = format!("({pname}, {aname}, k={coords:?}) G=S3");
                r.guarded(name.clone(), |r| {
                    let t = TwoType::new(p.clone(), a.clone(), h3.element(&coords))?;
                    let gi = giraud_h2(&t, &s3, &caps)?;
                    r.truth(
                        format!("{name} exact"),
                        gi.report.is_exact() && gi.first_map_well_defined,
                        format!("terms {}/{}/{}", gi.first.len(), gi.middle.len(), gi.last.len()),
                    );
                    if p.order() == 1 {
                        r.compare(format!("{name} hurewicz"), gi.last.len(), gi.middle.len());
                    }
                    Ok(())
                });
            }
        }
    }
    // abelian coefficients against the abelian pipeline; Aut(Z/2) is trivial
    let z2 = fixture("Z2");
    if let Ok(grid) = hopf_grid(&caps) {
        for (tname, t) in grid.iter().filter(|(_, t)| t.pi1.order() <= 2) {
            let name = format!("{tname} G=Z2 abelian");
            r.guarded(name.clone(), |r| {
                let gi = giraud_h2(t, &z2, &caps)?;
                let m = h2_constant_abelian(t, &z2, &caps)?;
                r.compare(name.clone(), m.order(), gi.middle.len());
                Ok(())
            });
        }
    }
    // centerless stalk: classes are H¹(π₁; Out(G))
    r.guarded("(Z2, 1, 0) G=A4 centerless", |r| {
        let t = TwoType::split(GroupTable::cyclic(2), PModule::trivial(2, vec![])?);
        let gi = giraud_h2(&t, &GroupTable::alternating4(), &caps)?;
        let out = crate::monodromy::stack_classes_centerless(
            &SourceGroup::Table(GroupTable::cyclic(2)),
            &GroupTable::alternating4(),
            &caps,
        )?;
        r.compare("(Z2, 1, 0) G=A4 centerless", out.len(), gi.middle.len());
        Ok(())
    });
}

fn suite_descent(r: &mut Recorder) {
    let caps = r.cfg.caps.clone();
    let mut rng = ChaCha8Rng::seed_from_u64(r.cfg.seed ^ 0x5eed);
    for pname in ["Z2", "Z3", "Z4", "Z2xZ2", "S3"] {
        let p = fixture(pname);
        for gname in ["Z2", "Z3", "Z4"] {
            let g = fixture(gname);
            let name = format!("zero associator P={pname} G={gname}");
            r.guarded(name.clone(), |r| {
                let (gm, dec) = PModule::from_abelian(p.order(), &g)?;
                let empty = PModule::trivial(p.order(), vec![])?;
                let h = SkeletalGrCat::new(p.clone(), empty.clone(), Cochain::zero(p.order(), &empty, 3))?;
                let target = Target::abelian(&g)?;
                let n = p.order();
                let slots = (n - 1) * (n - 1);
                let total = crate::caps::sat_pow(g.order() as u128, slots);
                let exhaustive = total <= 100_000;
                let samples = if exhaustive { total as usize } else { 2_000 };
                let mut agree = true;
                let mut accepted = 0;
                for s in 0..samples {
                    let vals: Vec<usize> = if exhaustive {
                        let mut x = s;
                        (0..slots)
                            .map(|_| {
                                let v = x % g.order();
                                x /= g.order();
                                v
                            })
                            .collect()
                    } else {
                        (0..slots).map(|_| rng.gen_range(0..g.order())).collect()
                    };
                    let mut lambda = vec![0; n * n];
                    let mut c = Cochain::zero(n, &gm, 2);
                    for (i, &v) in vals.iter().enumerate() {
                        let (a, b) = (i / (n - 1) + 1, i % (n - 1) + 1);
                        lambda[a * n + b] = v;
                        c.set(&[a, b], dec.coords(v));
                    }
                    let d = MonoidalDatum { object_map: vec![0; n], morphism_map: vec![], lambda };
                    let valid = validate_datum(&h, &target, &d).is_ok();
                    accepted += valid as usize;
                    agree &= valid == is_cocycle(&p, &gm, &c);
                }
                let how = if exhaustive { "exhaustive" } else { "sampled" };
                r.truth(name.clone(), agree, format!("{samples} {how}, {accepted} accepted"));
                Ok(())
            });
        }
    }
    // isomorphic is an equivalence relation on sampled valid data
    r.guarded("isomorphism is an equivalence", |r| {
        let p = fixture("Z2xZ2");
        let g = fixture("Z4");
        let a = PModule::trivial(4, vec![2])?;
        let h = SkeletalGrCat::new(p.clone(), a.clone(), Cochain::zero(4, &a, 3))?;
        let target = Target::abelian(&g)?;
        let mut data = Vec::new();
        while data.len() < 12 {
            let mut lambda = vec![0; 16];
            for x in 1..4 {
                for y in 1..4 {
                    lambda[x * 4 + y] = rng.gen_range(0..4);
                }
            }
            let d = MonoidalDatum { object_map: vec![0; 4], morphism_map: vec![2 * rng.gen_range(0..2)], lambda };
            if validate_datum(&h, &target, &d).is_ok() {
                // also a transformed copy, so related pairs occur
                let theta: Vec<usize> = (0..4).map(|x| if x == 0 { 0 } else { rng.gen_range(0..4) }).collect();
                data.push(transform(&h, &target, &d, &theta));
                data.push(d);
            }
        }
        let mut rel = vec![vec![false; data.len()]; data.len()];
        for i in 0..data.len() {
            for j in 0..data.len() {
                rel[i][j] = isomorphic(&h, &target, &data[i], &data[j], &caps)?.is_some();
            }
        }
        let k = data.len();
        let reflexive = (0..k).all(|i| rel[i][i]);
        let symmetric = (0..k).all(|i| (0..k).all(|j| rel[i][j] == rel[j][i]));
        let transitive = (0..k).all(|i| (0..k).all(|j| (0..k).all(|l| !(rel[i][j] && rel[j][l]) || rel[i][l])));
        r.truth(
            "isomorphism is an equivalence",
            reflexive && symmetric && transitive,
            format!("{k} data, reflexive {reflexive}, symmetric {symmetric}, transitive {transitive}"),
        );
        Ok(())
    });
}

fn suite_pi1(r: &mut Recorder) {
    let cases: [(&str, Complex2, (usize, Vec<BigInt>)); 3] = [
        (
            "circle",
            Complex2::new(3, vec![(0, 1), (1, 2), (0, 2)], vec![]).expect("valid"),
            (1, vec![]),
        ),
        (
            "filled triangle",
            Complex2::new(3, vec![(0, 1), (1, 2), (0, 2)], vec![[0, 1, 2]]).expect("valid"),
            (0, vec![]),
        ),
        (
            "wedge of two circles",
            Complex2::new(5, vec![(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)], vec![]).expect("valid"),
            (2, vec![]),
        ),
    ];
    for (name, x, expected) in cases {
        r.guarded(name, |r| {
            let ab = pi1_presentation(&x, 0)?.abelianization();
            r.compare(name, show_abelian(&expected), show_abelian(&ab));
            Ok(())
        });
    }
}

/// `Z^r ⊕ Z/t₁ ⊕ …` in words.
pub fn show_abelian((rank, torsion): &(usize, Vec<BigInt>)) -> String {
    let mut parts: Vec<String> = torsion.iter().map(|t| format!("Z/{t}")).collect();
    if *rank > 0 {
        parts.insert(0, if *rank == 1 { "Z".into() } else { format!("Z^{rank}") });
    }
    if parts.is_empty() {
        return "0".into();
    }
    let mut s = String::new();
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            s.push_str(" + ");
        }
        let _ = write!(s, "{p}");
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suites_pass() {
        let cfg = VerifyConfig::default();
        let report = run(&[Suite::Pi1, Suite::Obstruction, Suite::Hurewicz], &cfg);
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn injected_fault_is_caught() {
        let cfg = VerifyConfig { fault: Some(Fault::SequenceMap), ..VerifyConfig::default() };
        let report = run(&[Suite::Hopf], &cfg);
        assert!(!report.passed());
        assert!(report.to_string().contains("witness"));
    }
}
