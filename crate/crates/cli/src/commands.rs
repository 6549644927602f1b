use std::path::{Path, PathBuf};

use clap::Args;
use tiltglue::bundled::ExampleData;
use tiltglue::format::{
    load_algebra, load_module, load_universe, parse_algebra, print_algebra, AlgebraOptions,
};
use tiltglue::glue::{diff_support, glue_cotilting, glue_tilting, GlueOutcome};
use tiltglue::homology::{ext_dim, ext_dim_via_cosyzygy, global_dimension, DEFAULT_DIM_CAP};
use tiltglue::modcat::{projective, QModule, Universe};
use tiltglue::recollement::{audit, Recollement};
use tiltglue::tilting::{
    cotorsion_pair_from_cotilting, cotorsion_pair_from_tilting, find_cotilting_degree,
    find_tilting_degree, is_cotilting_cotorsion_pair, is_tilting_cotorsion_pair, verify_cotilting,
    verify_tilting, PairRecognition, TiltingDatum, Verdict,
};

use crate::failure::{Failure, Outcome};
use crate::setup::{self, Setup, SetupArgs};

/// The two modules being glued and their degrees.
#[derive(Args, Debug, Clone)]
pub struct InputArgs {
    /// Module over the sub side; defaults to the bundled input
    #[arg(long)]
    pub t1: Option<PathBuf>,
    #[arg(long, default_value_t = 1)]
    pub n1: usize,
    /// Module over the quotient side; defaults to the bundled input
    #[arg(long)]
    pub t3: Option<PathBuf>,
    #[arg(long, default_value_t = 2)]
    pub n3: usize,
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn name_in(u: &Universe, m: &QModule) -> Result<String, Failure> {
    Ok(u.describe(&u.multiplicities(m)?))
}

fn mismatches(problems: Vec<String>) -> Outcome {
    if problems.is_empty() {
        Ok(())
    } else {
        Err(Failure::Mismatch(problems.join("; ")))
    }
}

pub fn check_algebra(file: &Path, opts: &AlgebraOptions) -> Outcome {
    let a = load_algebra(file, opts)?;
    let q = a.quiver();
    println!("algebra {}", a.name());
    println!("field F_{}", a.field().p());
    println!("vertices {}", q.vertices().join(" "));
    println!("arrows {}", q.arrows().len());
    println!("relations {}", a.relations().len());
    println!("dimension {}", a.dim());
    for v in 0..a.vertex_count() {
        println!(
            "dim P({}) = {}",
            q.vertices()[v],
            projective(&a, v)?.dim_vector_string()
        );
    }
    match global_dimension(&a, DEFAULT_DIM_CAP) {
        Some(d) => println!("global dimension {d}"),
        None => println!("global dimension > {DEFAULT_DIM_CAP}"),
    }
    let again = parse_algebra(&print_algebra(&a), a.name(), opts)?;
    println!("round trip {}", yes(again.same_as(&a)));
    if again.same_as(&a) {
        Ok(())
    } else {
        Err(Failure::Mismatch(
            "printing and re-parsing changed the algebra".into(),
        ))
    }
}

pub fn ext(
    algebra: &Path,
    m: &Path,
    n: &Path,
    max_degree: usize,
    opts: &AlgebraOptions,
) -> Outcome {
    let a = load_algebra(algebra, opts)?;
    let (mn, m) = load_module(m, &a)?;
    let (nn, n) = load_module(n, &a)?;
    let mut problems = Vec::new();
    for i in 1..=max_degree {
        let d = ext_dim(&m, &n, i)?;
        let e = ext_dim_via_cosyzygy(&m, &n, i)?;
        println!("Ext^{i}({mn}, {nn}) = {d}");
        if d != e {
            problems.push(format!("degree {i}: {d} via syzygies, {e} via cosyzygies"));
        }
    }
    mismatches(problems)
}

fn print_datum(d: &TiltingDatum, cotilting: bool) {
    let (dim, kind, res) = if cotilting {
        ("id", "cotilting", "resolutions of injectives")
    } else {
        ("pd", "tilting", "coresolutions of projectives")
    };
    println!("{dim} = {}", d.dimension);
    let ext: Vec<String> = d.self_ext.iter().map(|e| e.to_string()).collect();
    println!("self-extensions by degree [{}]", ext.join(", "));
    let lens: Vec<String> = d.witnesses.iter().map(|w| w.length().to_string()).collect();
    println!("{res} of length [{}]", lens.join(", "));
    println!("accepted as {}-{kind}", d.n);
}

pub fn check_tilting(
    algebra: &Path,
    module: &Path,
    n: Option<usize>,
    cotilting: bool,
    opts: &AlgebraOptions,
) -> Outcome {
    let a = load_algebra(algebra, opts)?;
    let (name, t) = load_module(module, &a)?;
    let kind = if cotilting { "cotilting" } else { "tilting" };
    println!("module {name} {}", t.dim_vector_string());
    let datum = match n {
        Some(n) => {
            let v = if cotilting {
                verify_cotilting(&t, n)?
            } else {
                verify_tilting(&t, n)?
            };
            match v {
                Verdict::Accepted(d) => d,
                Verdict::Refuted(r) => {
                    println!("refuted: {r}");
                    return Err(Failure::Mismatch(format!("{name} is not {n}-{kind}")));
                }
            }
        }
        None => {
            let found = if cotilting {
                find_cotilting_degree(&t, DEFAULT_DIM_CAP)?
            } else {
                find_tilting_degree(&t, DEFAULT_DIM_CAP)?
            };
            found.ok_or_else(|| {
                Failure::Mismatch(format!(
                    "{name} is not n-{kind} for any n ≤ {DEFAULT_DIM_CAP}"
                ))
            })?
        }
    };
    print_datum(&datum, cotilting);
    Ok(())
}

pub fn cotorsion(
    algebra: &Path,
    universe: &Path,
    module: &Path,
    n: usize,
    cotilting: bool,
    opts: &AlgebraOptions,
) -> Outcome {
    let a = load_algebra(algebra, opts)?;
    let u = load_universe(universe, &a)?;
    let (name, t) = load_module(module, &a)?;
    let pair = if cotilting {
        cotorsion_pair_from_cotilting(&t, n, &u)?
    } else {
        cotorsion_pair_from_tilting(&t, n, &u)?
    };
    println!("module {name} = {}", name_in(&u, &t)?);
    println!("U = {{{}}}", pair.u_names().join(", "));
    println!("V = {{{}}}", pair.v_names().join(", "));
    let core: Vec<&str> = pair.core().iter().map(|&k| u.name(k)).collect();
    println!("U ∩ V = {{{}}}", core.join(", "));
    println!("hereditary {}", yes(pair.hereditary));
    let mut problems = pair.check()?;
    let report = pair.hereditary_report(DEFAULT_DIM_CAP)?;
    if !report.consistent() {
        problems.push(format!("hereditary characterizations disagree: {report:?}"));
    }
    if pair.hereditary {
        let rec = if cotilting {
            is_cotilting_cotorsion_pair(&pair, DEFAULT_DIM_CAP)?
        } else {
            is_tilting_cotorsion_pair(&pair, DEFAULT_DIM_CAP)?
        };
        match rec {
            PairRecognition::Recognized { t: core_t, n, .. } => {
                println!("recognized with n = {n}");
                if u.support(&core_t)? != u.support(&t)? {
                    problems.push("U ∩ V differs from add T".into());
                }
            }
            PairRecognition::Unbounded => problems.push("the pair has unbounded dimension".into()),
            PairRecognition::CoreRejected { n, refutation } => {
                problems.push(format!("U ∩ V is rejected at n = {n}: {refutation}"))
            }
        }
    }
    for p in &problems {
        println!("problem: {p}");
    }
    mismatches(problems)
}

fn print_exactness(r: &Recollement) {
    let e = r.exactness();
    println!("i^* exact {}", yes(e.i_upper_star()));
    println!("i^! exact {}", yes(e.i_shriek()));
    println!("j_! exact {}", yes(e.j_lower_shriek()));
    println!("j_* exact {}", yes(e.j_star()));
}

fn side_names(a: &tiltglue::algebra::BoundQuiverAlgebra) -> String {
    format!("{{{}}}", a.quiver().vertices().join(", "))
}

pub fn recollement(args: &SetupArgs, opts: &AlgebraOptions) -> Outcome {
    let Setup {
        r, universes: us, ..
    } = setup::load(args, opts)?;
    println!(
        "sub side {} on {}",
        r.a_algebra().name(),
        side_names(r.a_algebra())
    );
    println!(
        "quotient side {} on {}",
        r.c_algebra().name(),
        side_names(r.c_algebra())
    );
    print_exactness(&r);
    for (k, x) in us.a.members().iter().enumerate() {
        println!(
            "i_*{} = {}",
            us.a.name(k),
            name_in(&us.total, &r.i_star(x)?)?
        );
    }
    for (k, y) in us.c.members().iter().enumerate() {
        let name = us.c.name(k);
        println!("j_!{name} = {}", name_in(&us.total, &r.j_lower_shriek(y)?)?);
        println!("j_*{name} = {}", name_in(&us.total, &r.j_star(y)?)?);
    }
    let mut problems = Vec::new();
    for line in audit(&r, &us.a, &us.total, &us.c)? {
        println!(
            "audit {}: {} checked, {} failed",
            line.name,
            line.checked,
            line.failures.len()
        );
        problems.extend(line.failures.iter().map(|f| format!("{}: {f}", line.name)));
    }
    mismatches(problems)
}

/// Report lines of a gluing and the problems found in it.
fn glue_report(s: &Setup, o: &GlueOutcome, cotilting: bool) -> Result<Vec<String>, Failure> {
    let u = &s.universes.total;
    let mut problems = Vec::new();
    for kc in &o.k_constructions {
        println!(
            "K for {} = {}",
            name_in(&s.universes.c, &kc.t_dd)?,
            name_in(u, kc.module())?
        );
    }
    println!("T₂ = {}", o.describe());
    println!("n₂ = {}", o.n2);
    let kind = if cotilting { "cotilting" } else { "tilting" };
    match &o.verdict {
        Verdict::Accepted(_) => println!("T₂ is {}-{kind}", o.n2),
        Verdict::Refuted(r) => {
            println!("T₂ is not {}-{kind}: {r}", o.n2);
            problems.push(format!("T₂ is not {}-{kind}", o.n2));
        }
    }
    let core: Vec<&str> = o.glued.t2().iter().map(|&k| u.name(k)).collect();
    println!("U₂ ∩ V₂ = {{{}}}", core.join(", "));
    if !o.matches_core {
        problems.push("add T₂ differs from U₂ ∩ V₂".into());
    }
    println!("add T₂ = U₂ ∩ V₂ {}", yes(o.matches_core));
    for b in &o.bounds {
        let value = b
            .value
            .map_or_else(|| "unbounded".to_string(), |v| v.to_string());
        println!("{} = {value} ≤ {} {}", b.what, b.bound, yes(b.holds()));
        if !b.holds() {
            problems.push(format!("{} exceeds {}", b.what, b.bound));
        }
    }
    if let Some(split) = o.split_check {
        println!("i^* of the glued pair splits {}", yes(split));
    }
    Ok(problems)
}

type Pick = fn(&ExampleData) -> &QModule;

fn run_glue(s: &Setup, inputs: &InputArgs, cotilting: bool) -> Result<GlueOutcome, Failure> {
    let (p1, p3): (Pick, Pick) = if cotilting {
        (|d| &d.cotilting_t1, |d| &d.cotilting_t3)
    } else {
        (|d| &d.tilting_t1, |d| &d.tilting_t3)
    };
    let t1 = setup::input(&inputs.t1, s.r.a_algebra(), &s.example, p1, "--t1")?;
    let t3 = setup::input(&inputs.t3, s.r.c_algebra(), &s.example, p3, "--t3")?;
    println!(
        "T₁ = {} over {}",
        name_in(&s.universes.a, &t1)?,
        s.r.a_algebra().name()
    );
    println!(
        "T₃ = {} over {}",
        name_in(&s.universes.c, &t3)?,
        s.r.c_algebra().name()
    );
    let glue = if cotilting {
        glue_cotilting
    } else {
        glue_tilting
    };
    Ok(glue(&s.r, &t1, inputs.n1, &t3, inputs.n3, &s.universes)?)
}

pub fn glue(
    args: &SetupArgs,
    inputs: &InputArgs,
    cotilting: bool,
    opts: &AlgebraOptions,
) -> Outcome {
    let s = setup::load(args, opts)?;
    let o = run_glue(&s, inputs, cotilting)?;
    mismatches(glue_report(&s, &o, cotilting)?)
}

const EXPECTED_5_1: [&str; 5] = [
    "(0|P(5))",
    "(S(1)|0)",
    "(P(1)|P(3))",
    "(P(1)|P(4))",
    "(P(1)|0)",
];
const EXPECTED_5_2: [&str; 5] = [
    "(S(2)|0)",
    "(S(2)|P(4))",
    "(P(1)|0)",
    "(P(1)|P(3))",
    "(S(1)|S(3))",
];
const SPOT_I_STAR: [(&str, &str); 2] = [("P(1)", "(P(1)|0)"), ("S(2)", "(S(2)|0)")];
const SPOT_J_SHRIEK: [(&str, &str); 3] = [
    ("P(3)", "(P(1)|P(3))"),
    ("P(4)", "(S(2)|P(4))"),
    ("S(3)", "(S(1)|S(3))"),
];

fn lookup<'a>(u: &'a Universe, name: &str) -> Result<&'a QModule, Failure> {
    u.index_of(name)
        .map(|k| u.member(k))
        .ok_or_else(|| Failure::Mismatch(format!("missing member {name}")))
}

pub fn reproduce(example: &str, data_dir: Option<&Path>, opts: &AlgebraOptions) -> Outcome {
    let d = setup::example_data(data_dir, opts.prime)?;
    let cotilting = example == "5-1";
    let expected: &[&str] = if cotilting {
        &EXPECTED_5_1
    } else {
        &EXPECTED_5_2
    };
    println!(
        "example {example}: gluing {} modules",
        if cotilting { "cotilting" } else { "tilting" }
    );

    let mut needed: Vec<&str> = expected.to_vec();
    if !cotilting {
        needed.extend(SPOT_I_STAR.iter().chain(&SPOT_J_SHRIEK).map(|(_, x)| *x));
    }
    let absent: Vec<&str> = needed
        .into_iter()
        .filter(|n| d.universe.index_of(n).is_none())
        .collect();
    if !absent.is_empty() {
        for n in &absent {
            println!("missing member {n}");
        }
        return Err(Failure::Mismatch(format!(
            "universe lacks {}",
            absent.join(", ")
        )));
    }
    let mut problems = Vec::new();
    for (u, what) in [
        (&d.universe, "total"),
        (&d.universe_prime, "sub"),
        (&d.universe_dprime, "quotient"),
    ] {
        let issues = u.verify()?;
        println!(
            "{what} universe: {} members, {} issues",
            u.len(),
            issues.len()
        );
        problems.extend(issues.iter().map(|i| format!("{what} universe: {i}")));
    }
    mismatches(std::mem::take(&mut problems))?;

    let s = setup::from_example(d)?;
    print_exactness(&s.r);
    if !cotilting {
        for (x, want) in SPOT_I_STAR {
            let got = name_in(&s.universes.total, &s.r.i_star(lookup(&s.universes.a, x)?)?)?;
            println!("i_*{x} = {got}");
            if got != format!("{{{want}}}") {
                problems.push(format!("i_*{x} is {got}, expected {want}"));
            }
        }
        for (y, want) in SPOT_J_SHRIEK {
            let got = name_in(
                &s.universes.total,
                &s.r.j_lower_shriek(lookup(&s.universes.c, y)?)?,
            )?;
            println!("j_!{y} = {got}");
            if got != format!("{{{want}}}") {
                problems.push(format!("j_!{y} is {got}, expected {want}"));
            }
        }
    }
    let inputs = InputArgs {
        t1: None,
        n1: 1,
        t3: None,
        n3: 2,
    };
    let o = run_glue(&s, &inputs, cotilting)?;
    problems.extend(glue_report(&s, &o, cotilting)?);

    let (missing, extra) = diff_support(&s.universes.total, expected, &o.t2)?;
    let repeated = o.multiplicities.iter().any(|&m| m > 1);
    println!("expected {{{}}}", expected.join(", "));
    for m in &missing {
        println!("- {m}");
    }
    for e in &extra {
        println!("+ {e}");
    }
    if !missing.is_empty() || !extra.is_empty() || repeated {
        problems.push("T₂ differs from the expected decomposition".into());
    }
    if !cotilting && o.n2 != 2 {
        problems.push(format!("n₂ is {}, expected 2", o.n2));
    }
    println!(
        "{}",
        if problems.is_empty() {
            "result: match"
        } else {
            "result: MISMATCH"
        }
    );
    mismatches(problems)
}

pub fn verify_universe(
    algebra: Option<&Path>,
    universe: Option<&Path>,
    data_dir: Option<&Path>,
    opts: &AlgebraOptions,
) -> Outcome {
    let universes: Vec<Universe> = match (algebra, universe) {
        (Some(a), Some(m)) => vec![load_universe(m, &load_algebra(a, opts)?)?],
        _ => {
            let d = setup::example_data(data_dir, opts.prime)?;
            vec![d.universe, d.universe_prime, d.universe_dprime]
        }
    };
    let mut problems = Vec::new();
    for u in &universes {
        let issues = u.verify()?;
        println!(
            "{}: {} members, {} issues",
            u.algebra().name(),
            u.len(),
            issues.len()
        );
        for (k, m) in u.members().iter().enumerate() {
            println!("  {} {}", u.name(k), m.dim_vector_string());
        }
        for i in &issues {
            println!("  problem: {i}");
        }
        problems.extend(
            issues
                .iter()
                .map(|i| format!("{}: {i}", u.algebra().name())),
        );
    }
    mismatches(problems)
}
