use std::io::Read;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use matroid_flat::document::MatroidDocument;
use matroid_flat::flatness::{
    self, binomial_identity_check, Degree, FlatCollection, FlatnessWitness, SearchLimits,
    SearchScope, DEFAULT_BUDGET,
};
use matroid_flat::pseudomod::{self, PseudomodularityWitness};
use matroid_flat::verify::{self, corpus, Status};
use matroid_flat::{AxiomCheck, Error, Matroid, Subset, DEFAULT_CAP};

/// Exact analyses of finite matroids: flats, Δ, flatness degree and pseudomodularity.
#[derive(Parser, Debug)]
#[command(name = "matroid-flat", version)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Global {
    /// Matroid JSON document, or `-` for stdin.
    #[arg(long, global = true)]
    input: Option<String>,
    /// Emit the JSON result document instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Largest ground set accepted for enumeration.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    cap: usize,
    /// Evaluation budget for searches.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Seed for the random corpus entries.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    /// Omit the timing field.
    #[arg(long, global = true)]
    no_timing: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Rank of a subset.
    Rank(SetArg),
    /// Closure of a subset.
    Closure(SetArg),
    /// All flats in canonical order.
    Flats,
    /// All cyclic flats in canonical order.
    CyclicFlats,
    /// Δ of a collection of flats.
    Delta {
        /// A member, as comma-separated labels; repeat for each member.
        #[arg(long = "flat", required = true)]
        flats: Vec<String>,
    },
    /// Whether every collection of at most N flats has Δ <= 0.
    NFlat { n: usize },
    /// The flatness degree, with a witness when finite.
    FlatnessDegree {
        /// Largest collection size to search.
        #[arg(long)]
        max_size: Option<usize>,
    },
    /// Whether every collection of flats has Δ <= 0.
    TotallyFlat,
    /// Whether every pair of flats has a pseudointersection; exits 1 with a witness if not.
    Pseudomodular,
    /// Whether r(A) + r(B) = r(A∪B) + r(A∩B) for all flats A, B.
    Modular,
    /// Exhaustive check of the rank axioms.
    Axioms,
    /// The dual as a rank-table document.
    Dual,
    /// Delete a subset; prints the minor as a rank-table document.
    Restrict(SetArg),
    /// Contract a subset; prints the minor as a rank-table document.
    Contract(SetArg),
    /// Runs or lists the built-in corpus with its expected values.
    #[command(subcommand)]
    Corpus(CorpusCommand),
    /// Checks the alternating binomial identity on a range of parameters.
    IdentityCheck {
        /// Checks every 1 <= l, m < n <= MAX_N.
        #[arg(long, default_value_t = 12)]
        max_n: i64,
    },
}

#[derive(Args, Debug)]
struct SetArg {
    /// Comma-separated labels; empty for ∅, `*` for the ground set.
    #[arg(long, allow_hyphen_values = true)]
    set: String,
}

#[derive(Subcommand, Debug)]
enum CorpusCommand {
    /// Builds every corpus entry and checks its expected values.
    Run,
    /// Names accepted by `{"construction": {"corpus": {"name": ...}}}`.
    List,
}

#[derive(Serialize)]
struct Summary {
    elements: usize,
    rank: usize,
    flats: usize,
    cyclic_flats: usize,
}

#[derive(Serialize)]
struct ResultDocument {
    command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    matroid: Option<Summary>,
    result: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    certificate: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    timing_us: Option<u64>,
}

/// Outcome of a command before rendering.
struct Outcome {
    exit: u8,
    text: String,
    result: Value,
    witness: Option<Value>,
    certificate: Option<Value>,
    matroid: Option<Matroid>,
}

impl Outcome {
    fn new(text: String, result: Value) -> Self {
        Outcome {
            exit: 0,
            text,
            result,
            witness: None,
            certificate: None,
            matroid: None,
        }
    }

    fn on(mut self, m: &Matroid) -> Self {
        self.matroid = Some(m.clone());
        self
    }

    fn failing(mut self, fails: bool) -> Self {
        self.exit = u8::from(fails);
        self
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::GuardExceeded(_) => 3,
        Error::Internal(_) => 1,
        _ => 2,
    }
}

fn read_input(path: &Option<String>) -> Result<String, Error> {
    let path = path
        .as_deref()
        .ok_or_else(|| Error::InvalidArgument("--input <file|-> is required".into()))?;
    let mut text = String::new();
    let res = if path == "-" {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    res.map_err(|e| Error::InvalidArgument(format!("reading {path}: {e}")))?;
    Ok(text)
}

fn load(g: &Global) -> Result<Matroid, Error> {
    MatroidDocument::from_json(&read_input(&g.input)?)?.build(g.cap)
}

fn parse_set(m: &Matroid, spec: &str) -> Result<Subset, Error> {
    match spec.trim() {
        "*" => Ok(m.full()),
        "" => Ok(Subset::EMPTY),
        s => m.ground().subset(s.split(',').map(str::trim)),
    }
}

fn labels(m: &Matroid, s: Subset) -> Value {
    json!(m.ground().labels_of(s))
}

fn flat_list(m: &Matroid, fs: &[Subset]) -> (String, Value) {
    let text = fs
        .iter()
        .map(|&f| format!("{}  rank {}", m.ground().format(f), m.rank(f).expect("in range")))
        .collect::<Vec<_>>()
        .join("\n");
    let v = fs
        .iter()
        .map(|&f| json!({"set": labels(m, f), "rank": m.rank(f).expect("in range")}))
        .collect();
    (text, Value::Array(v))
}

fn flatness_witness(m: &Matroid, w: &FlatnessWitness) -> (String, Value) {
    let members: Vec<String> = w.members.iter().map(|&f| m.ground().format(f)).collect();
    (
        format!("witness ({} flats, Δ = {}): {}", w.members.len(), w.delta, members.join(" ")),
        json!({
            "members": w.members.iter().map(|&f| labels(m, f)).collect::<Vec<_>>(),
            "delta": w.delta,
        }),
    )
}

fn scope(s: &SearchScope) -> Value {
    json!({
        "cyclic_flats": s.cyclic_flats,
        "searched_up_to": s.searched_up_to,
        "evaluations": s.evaluations,
        "budget": s.budget,
        "complete": s.complete,
    })
}

fn degree_value(d: Degree) -> Value {
    match d {
        Degree::Finite(n) => json!({"finite": n}),
        Degree::Omega => json!("omega"),
        Degree::AtLeast(n) => json!({"at_least": n}),
    }
}

fn pseudo_witness(m: &Matroid, w: &PseudomodularityWitness) -> (String, Value) {
    let g = m.ground();
    let [rb, r1, r2, rm] = w.ranks;
    (
        format!(
            "witness: A = {}, B = {}, B1 = {}, B2 = {}\n  r(A/B) = {rb}, r(A/B1) = {r1}, r(A/B2) = {r2}, r(A/B1∩B2) = {rm}",
            g.format(w.a),
            g.format(w.b),
            g.format(w.b1),
            g.format(w.b2)
        ),
        json!({
            "a": labels(m, w.a),
            "b": labels(m, w.b),
            "b1": labels(m, w.b1),
            "b2": labels(m, w.b2),
            "ranks": {
                "a_over_b": rb,
                "a_over_b1": r1,
                "a_over_b2": r2,
                "a_over_b1_meet_b2": rm,
            },
        }),
    )
}

fn minor_output(name: &str, m: &Matroid) -> Result<Outcome, Error> {
    let doc = MatroidDocument::rank_table(m)?;
    let value = serde_json::to_value(&doc).expect("plain data");
    Ok(Outcome::new(doc.to_json(), json!({ name: value })).on(m))
}

fn run(cmd: &Command, g: &Global) -> Result<Outcome, Error> {
    Ok(match cmd {
        Command::Rank(a) => {
            let m = load(g)?;
            let s = parse_set(&m, &a.set)?;
            let r = m.rank(s)?;
            Outcome::new(format!("r({}) = {r}", m.ground().format(s)), json!({"set": labels(&m, s), "rank": r})).on(&m)
        }
        Command::Closure(a) => {
            let m = load(g)?;
            let s = parse_set(&m, &a.set)?;
            let c = m.closure(s)?;
            Outcome::new(
                format!("cl({}) = {}", m.ground().format(s), m.ground().format(c)),
                json!({"set": labels(&m, s), "closure": labels(&m, c)}),
            )
            .on(&m)
        }
        Command::Flats => {
            let m = load(g)?;
            let (text, v) = flat_list(&m, m.flats());
            Outcome::new(format!("{text}\n{} flats", m.flats().len()), json!({"count": m.flats().len(), "flats": v})).on(&m)
        }
        Command::CyclicFlats => {
            let m = load(g)?;
            let cf = m.cyclic_flats();
            let (text, v) = flat_list(&m, cf);
            Outcome::new(format!("{text}\n{} cyclic flats", cf.len()), json!({"count": cf.len(), "cyclic_flats": v})).on(&m)
        }
        Command::Delta { flats } => {
            let m = load(g)?;
            let members = flats.iter().map(|f| parse_set(&m, f)).collect::<Result<Vec<_>, _>>()?;
            let c = FlatCollection::new(&m, members)?;
            let d = flatness::delta(&c)?;
            Outcome::new(format!("Δ = {d}"), json!({"delta": d})).on(&m)
        }
        Command::NFlat { n } => {
            let m = load(g)?;
            let r = flatness::is_n_flat_with(&m, *n, g.budget)?;
            let mut o = Outcome::new(
                format!("{}-flat: {}", n, if r.holds { "yes" } else { "no" }),
                json!({"n": n, "holds": r.holds}),
            )
            .on(&m)
            .failing(!r.holds);
            if let Some(w) = &r.witness {
                let (t, v) = flatness_witness(&m, w);
                o.text = format!("{}\n{t}", o.text);
                o.witness = Some(v);
            }
            o.certificate = Some(scope(&r.scope));
            o
        }
        Command::FlatnessDegree { max_size } => {
            let m = load(g)?;
            let limits = SearchLimits {
                max_size: *max_size,
                budget: g.budget,
            };
            let r = flatness::flatness_degree_with(&m, limits)?;
            let mut o = Outcome::new(format!("flatness degree: {}", r.degree), json!({"degree": degree_value(r.degree)})).on(&m);
            if let Some(w) = &r.witness {
                let (t, v) = flatness_witness(&m, w);
                o.text = format!("{}\n{t}", o.text);
                o.witness = Some(v);
            }
            o.certificate = Some(scope(&r.scope));
            o
        }
        Command::TotallyFlat => {
            let m = load(g)?;
            let r = flatness::flatness_degree_with(&m, SearchLimits { max_size: None, budget: g.budget })?;
            let holds = match r.degree {
                Degree::Omega => true,
                Degree::Finite(_) => false,
                Degree::AtLeast(d) => {
                    return Err(Error::GuardExceeded(format!(
                        "undecided: {d}-flat when the budget of {} ran out",
                        g.budget
                    )))
                }
            };
            let mut o = Outcome::new(
                format!("totally flat: {}", if holds { "yes" } else { "no" }),
                json!({"holds": holds}),
            )
            .on(&m)
            .failing(!holds);
            if let Some(w) = &r.witness {
                let (t, v) = flatness_witness(&m, w);
                o.text = format!("{}\n{t}", o.text);
                o.witness = Some(v);
            }
            o.certificate = Some(scope(&r.scope));
            o
        }
        Command::Pseudomodular => {
            let m = load(g)?;
            let r = pseudomod::is_pseudomodular(&m);
            let mut o = Outcome::new(
                format!("pseudomodular: {}", if r.pseudomodular { "yes" } else { "no" }),
                json!({"holds": r.pseudomodular}),
            )
            .on(&m)
            .failing(!r.pseudomodular);
            if let Some(w) = &r.witness {
                let (t, v) = pseudo_witness(&m, w);
                o.text = format!("{}\n{t}", o.text);
                o.witness = Some(v);
            }
            o
        }
        Command::Modular => {
            let m = load(g)?;
            let r = pseudomod::is_modular(&m);
            let mut o = Outcome::new(
                format!("modular: {}", if r.modular { "yes" } else { "no" }),
                json!({"holds": r.modular}),
            )
            .on(&m)
            .failing(!r.modular);
            if let Some((a, b)) = r.witness {
                let rk = |s| m.rank(s).expect("in range");
                o.text = format!(
                    "{}\nwitness: A = {}, B = {}: r(A) + r(B) = {} > r(A∪B) + r(A∩B) = {}",
                    o.text,
                    m.ground().format(a),
                    m.ground().format(b),
                    rk(a) + rk(b),
                    rk(a.union(b)) + rk(a.intersection(b))
                );
                o.witness = Some(json!({"a": labels(&m, a), "b": labels(&m, b)}));
            }
            o
        }
        Command::Axioms => {
            let doc = MatroidDocument::from_json(&read_input(&g.input)?)?;
            let check = match doc.build(g.cap) {
                Ok(m) => m.check_axioms()?,
                Err(Error::AxiomViolation { axiom, detail }) => {
                    let mut o = Outcome::new(
                        format!("axioms: {axiom} violated\n{detail}"),
                        json!({"holds": false, "axiom": axiom}),
                    )
                    .failing(true);
                    o.witness = Some(json!({"detail": detail}));
                    return Ok(o);
                }
                Err(e) => return Err(e),
            };
            let m = doc.build(g.cap)?;
            match check {
                AxiomCheck::Pass => Outcome::new("axioms: R1 R2 R3 hold".into(), json!({"holds": true})).on(&m),
                AxiomCheck::Violation(v) => {
                    let mut o = Outcome::new(
                        format!("axioms: {} violated\n{}", v.axiom, v.describe()),
                        json!({"holds": false, "axiom": v.axiom}),
                    )
                    .on(&m)
                    .failing(true);
                    o.witness = Some(json!({
                        "a": labels(&m, v.a),
                        "b": labels(&m, v.b),
                        "rank_a": v.rank_a,
                        "rank_b": v.rank_b,
                        "rank_union": v.rank_union,
                        "rank_intersection": v.rank_intersection,
                    }));
                    o
                }
            }
        }
        Command::Dual => minor_output("dual", &load(g)?.dual())?,
        Command::Restrict(a) => {
            let m = load(g)?;
            minor_output("restriction", &m.restrict(parse_set(&m, &a.set)?)?)?
        }
        Command::Contract(a) => {
            let m = load(g)?;
            minor_output("contraction", &m.contract(parse_set(&m, &a.set)?)?)?
        }
        Command::Corpus(CorpusCommand::List) => {
            let names = corpus::names();
            Outcome::new(names.join("\n"), json!({ "names": names }))
        }
        Command::Corpus(CorpusCommand::Run) => {
            let report = verify::run_corpus(g.seed);
            let mut lines = vec![format!("seed {}", report.seed)];
            for e in &report.entries {
                lines.push(format!("{} ({} elements, rank {}, {} flats)", e.name, e.elements, e.rank, e.flats));
                for c in &e.fields {
                    let tag = match c.status {
                        Status::Pass => "pass",
                        Status::Fail => "FAIL",
                        Status::Skipped => "skip",
                    };
                    lines.push(format!("  {tag:4}  {:28} expected {:10} got {}", c.field, c.expected, c.actual));
                }
            }
            lines.push(format!(
                "{} passed, {} failed, {} skipped",
                report.passed, report.failed, report.skipped
            ));
            let all = report.all_passed();
            Outcome::new(lines.join("\n"), serde_json::to_value(&report).expect("plain data")).failing(!all)
        }
        Command::IdentityCheck { max_n } => {
            let mut checked = 0u64;
            let mut failures = Vec::new();
            for n in 2..=*max_n {
                for l in 1..n {
                    for mm in 1..n {
                        let c = binomial_identity_check(n, l, mm)?;
                        checked += 1;
                        if !c.holds {
                            failures.push(c);
                        }
                    }
                }
            }
            let holds = failures.is_empty();
            Outcome::new(
                format!("identity checked for {checked} (n, l, m) with 1 <= l, m < n <= {max_n}: {}", if holds { "all hold" } else { "FAILURES" }),
                json!({"checked": checked, "holds": holds, "failures": failures}),
            )
            .failing(!holds)
        }
    })
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Rank(_) => "rank",
        Command::Closure(_) => "closure",
        Command::Flats => "flats",
        Command::CyclicFlats => "cyclic-flats",
        Command::Delta { .. } => "delta",
        Command::NFlat { .. } => "n-flat",
        Command::FlatnessDegree { .. } => "flatness-degree",
        Command::TotallyFlat => "totally-flat",
        Command::Pseudomodular => "pseudomodular",
        Command::Modular => "modular",
        Command::Axioms => "axioms",
        Command::Dual => "dual",
        Command::Restrict(_) => "restrict",
        Command::Contract(_) => "contract",
        Command::Corpus(CorpusCommand::Run) => "corpus run",
        Command::Corpus(CorpusCommand::List) => "corpus list",
        Command::IdentityCheck { .. } => "identity-check",
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let g = &cli.global;
    let start = Instant::now();
    let outcome = run(&cli.command, g);
    let timing = (!g.no_timing).then(|| start.elapsed().as_micros() as u64);
    match outcome {
        Ok(o) => {
            if g.json {
                let doc = ResultDocument {
                    command: command_name(&cli.command).into(),
                    matroid: o.matroid.as_ref().map(|m| Summary {
                        elements: m.size(),
                        rank: m.full_rank(),
                        flats: m.flats().len(),
                        cyclic_flats: m.cyclic_flats().len(),
                    }),
                    result: o.result,
                    witness: o.witness,
                    certificate: o.certificate,
                    timing_us: timing,
                };
                println!("{}", serde_json::to_string_pretty(&doc).expect("plain data"));
            } else {
                println!("{}", o.text);
                if let Some(t) = timing {
                    eprintln!("({} ms)", t / 1000);
                }
            }
            ExitCode::from(o.exit)
        }
        Err(e) => {
            let code = exit_code(&e);
            if g.json {
                let doc = json!({
                    "command": command_name(&cli.command),
                    "error": { "kind": error_kind(&e), "message": e.to_string(), "exit_code": code },
                });
                println!("{}", serde_json::to_string_pretty(&doc).expect("plain data"));
            } else {
                eprintln!("error: {e}");
            }
            ExitCode::from(code)
        }
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::InvalidArgument(_) => "invalid_argument",
        Error::Validation(_) => "validation",
        Error::AxiomViolation { .. } => "axiom_violation",
        Error::GuardExceeded(_) => "guard_exceeded",
        Error::Unsupported(_) => "unsupported",
        Error::Internal(_) => "internal",
    }
}
