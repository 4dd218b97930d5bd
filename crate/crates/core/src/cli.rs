//! The `pe` command line: every verb parses its input, runs one pipeline
//! and prints JSON on standard output.
//!
//! Exit codes: 0 for success or a true verdict, 1 for a failed
//! verification or a false verdict (diagnostics on standard output), 2 for
//! malformed input or usage errors (message on standard error).

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Deserialize;
use serde_json::{json, Value};

use crate::clifford::{glue_e_fixed, invariance_flags, Epsilon};
use crate::constructions::{
    check_matched_quadruple, endo_solution, exact_factorization_solutions, group_quotient_solution, kashaev_sergeev,
    left_zero_group_solution, lyubashenko, matched_product, worked_example_quadruple, GroupSolutionData, MatchedQuadruple,
};
use crate::enumeration::{
    census, enumerate_semigroups, enumerate_semigroups_long, parallel_partition, write_catalog, Dedupe, EnumerationError,
    SearchFilter,
};
use crate::io::{params, read_json, solution_parts, table_at, to_pretty, InputError};
use crate::semigroup::{analyze, CayleyTable, ElementMap, Group, SemigroupError};
use crate::solution::{
    classify_properties, opposite, pentagon_witness, qybe_check, solution_key, solutions_isomorphic, verify_solution,
    PeError, PeSolution, QybeConvention,
};
use crate::special::{
    commutativity_characterizations, construct_idempotent_central, decompose_involutive, ext_sigma, retract_with_classes,
    t_a, IdempotentClassificationData,
};

#[derive(Parser, Debug)]
#[command(name = "pe", version, about = "Pentagon-equation solutions on finite semigroups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check both axioms and the pentagon identity on a solution file.
    Verify { file: PathBuf },
    /// Report every property flag of a solution.
    Properties {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Convention::QybeA)]
        convention: Convention,
    },
    /// List semigroups of an order, or solutions on a given semigroup.
    Enumerate {
        /// List all semigroups of this order.
        #[arg(long, conflicts_with = "semigroup")]
        order: Option<usize>,
        /// List solutions on the semigroup in this file.
        #[arg(long)]
        semigroup: Option<PathBuf>,
        #[arg(long, value_name = "NAME")]
        filter: Vec<String>,
        #[arg(long)]
        up_to_iso: bool,
        /// Allow order 5 for semigroups (slow).
        #[arg(long)]
        long: bool,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Count solutions of an order up to isomorphism and write a catalog.
    Census {
        #[arg(long)]
        order: usize,
        #[arg(long, value_name = "NAME")]
        filter: Vec<String>,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build a solution from a parameter file.
    Construct {
        #[arg(long, value_enum)]
        kind: Kind,
        params: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The retract of an involutive solution.
    Retract { file: PathBuf },
    /// Split an involutive solution as an extension times a group part.
    Decompose { file: PathBuf },
    /// The opposite of a bijective solution.
    Opposite { file: PathBuf },
    /// Decide whether two solutions are isomorphic.
    Iso { first: PathBuf, second: PathBuf },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Convention {
    QybeA,
    QybeB,
}

impl From<Convention> for QybeConvention {
    fn from(c: Convention) -> Self {
        match c {
            Convention::QybeA => QybeConvention::QybeA,
            Convention::QybeB => QybeConvention::QybeB,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Kind {
    Lyubashenko,
    Endo,
    LeftzeroGroup,
    Factorization,
    KashaevSergeev,
    GroupQuotient,
    Matched,
    ExtSigma,
    #[value(name = "t-a")]
    TA,
    CliffordGlue,
    IdempotentCentral,
}

/// What a verb produced.
enum Outcome {
    Ok(Value),
    /// A failed check or a false verdict, with diagnostics.
    Fail(Value),
}

/// Malformed input or arguments.
struct Usage(String);

impl From<InputError> for Usage {
    fn from(e: InputError) -> Self {
        Usage(e.to_string())
    }
}

impl From<EnumerationError> for Usage {
    fn from(e: EnumerationError) -> Self {
        Usage(e.to_string())
    }
}

type Verb = Result<Outcome, Usage>;

/// Runs `pe` with `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok(Outcome::Ok(v)) => {
            let _ = write!(out, "{}", to_pretty(&v));
            0
        }
        Ok(Outcome::Fail(v)) => {
            let _ = write!(out, "{}", to_pretty(&v));
            1
        }
        Err(Usage(m)) => {
            let _ = writeln!(err, "error: {m}");
            2
        }
    }
}

fn dispatch(cmd: Command) -> Verb {
    match cmd {
        Command::Verify { file } => verify(&file),
        Command::Properties { file, convention } => properties(&file, convention.into()),
        Command::Enumerate { order, semigroup, filter, up_to_iso, long, workers, out } => {
            enumerate(order, semigroup.as_deref(), &filter, up_to_iso, long, workers, out.as_deref())
        }
        Command::Census { order, filter, workers, out } => run_census(order, &filter, workers, out.as_deref()),
        Command::Construct { kind, params, out } => {
            let outcome = construct(kind, &params)?;
            if let (Some(dir), Outcome::Ok(v)) = (&out, &outcome) {
                write_file(&dir.join("construction.json"), v)?;
            }
            Ok(outcome)
        }
        Command::Retract { file } => {
            let s = load_solution(&file)?;
            Ok(match retract_with_classes(&s) {
                Ok((r, classes)) => Outcome::Ok(json!({ "classes": classes.blocks(), "retract": r })),
                Err(e) => fail(e),
            })
        }
        Command::Decompose { file } => {
            let s = load_solution(&file)?;
            Ok(match decompose_involutive(&s) {
                Ok(d) => Outcome::Ok(serde_json::to_value(d).expect("serializable")),
                Err(e) => fail(e),
            })
        }
        Command::Opposite { file } => {
            let s = load_solution(&file)?;
            Ok(match opposite(&s) {
                Ok(op) => Outcome::Ok(serde_json::to_value(op).expect("serializable")),
                Err(e) => fail(e),
            })
        }
        Command::Iso { first, second } => {
            let (a, b) = (load_solution(&first)?, load_solution(&second)?);
            Ok(match solutions_isomorphic(&a, &b) {
                Some(psi) => Outcome::Ok(json!({ "isomorphic": true, "psi": psi })),
                None => Outcome::Fail(json!({ "isomorphic": false })),
            })
        }
    }
}

fn fail(e: impl std::fmt::Display) -> Outcome {
    Outcome::Fail(json!({ "error": e.to_string() }))
}

fn write_file(path: &Path, v: &Value) -> Result<(), Usage> {
    if let Some(dir) = path.parent() {
        std::fs::create_dir_all(dir).map_err(|e| Usage(format!("cannot create {}: {e}", dir.display())))?;
    }
    std::fs::write(path, to_pretty(v)).map_err(|e| Usage(format!("cannot write {}: {e}", path.display())))
}

/// A solution file that must satisfy the axioms.
fn load_solution(file: &Path) -> Result<PeSolution, Usage> {
    let (table, theta) = solution_parts(&read_json(file)?)?;
    verify_solution(&table, &theta).map_err(|e| Usage(format!("{}: {e}", file.display())))
}

fn verify(file: &Path) -> Verb {
    let (table, theta) = match solution_parts(&read_json(file)?) {
        Ok(parts) => parts,
        Err(InputError::Semigroup(SemigroupError::NotAssociative(x, y, z))) => {
            return Ok(Outcome::Fail(json!({
                "valid": false,
                "axiom": "associativity",
                "witness": [x, y, z],
                "message": SemigroupError::NotAssociative(x, y, z).to_string(),
            })))
        }
        Err(e) => return Err(e.into()),
    };
    let direct = pentagon_witness(&crate::solution::PairMap::from_fn(table.order(), |x, y| {
        (table.mul(x, y), theta.at(x, y))
    }));
    Ok(match verify_solution(&table, &theta) {
        Ok(s) => Outcome::Ok(json!({
            "valid": true,
            "order": s.order(),
            "pentagon_direct": direct.is_none(),
        })),
        Err(e) => {
            let (axiom, witness) = match &e {
                PeError::P1Violation(x, y, z) => ("P1", vec![*x, *y, *z]),
                PeError::P2Violation(x, y, w) => ("P2", vec![*x, *y, *w]),
                _ => ("other", vec![]),
            };
            Outcome::Fail(json!({
                "valid": false,
                "axiom": axiom,
                "witness": witness,
                "message": e.to_string(),
                "pentagon_direct": direct.is_none(),
                "pentagon_witness": direct.map(|(a, b, c)| vec![a, b, c]),
            }))
        }
    })
}

fn properties(file: &Path, convention: QybeConvention) -> Verb {
    let s = load_solution(file)?;
    let props = classify_properties(&s).map_err(|e| Usage(e.to_string()))?;
    let comm = commutativity_characterizations(&s).map_err(|e| Usage(e.to_string()))?;
    let mut v = json!({
        "properties": props,
        "convention": convention,
        "qybe": qybe_check(&s, convention),
        "commutativity": comm,
    });
    if analyze(s.semigroup()).is_clifford {
        v["invariance"] = serde_json::to_value(invariance_flags(&s)).expect("serializable");
    }
    Ok(Outcome::Ok(v))
}

fn parse_filter(names: &[String], up_to_iso: bool) -> Result<SearchFilter, Usage> {
    let mut f = SearchFilter::none();
    for n in names {
        f = f.with_name(n)?;
    }
    f.up_to_iso = up_to_iso;
    Ok(f)
}

fn enumerate(
    order: Option<usize>,
    semigroup: Option<&Path>,
    filter: &[String],
    up_to_iso: bool,
    long: bool,
    workers: usize,
    out: Option<&Path>,
) -> Verb {
    let (key, items): (&str, Vec<Value>) = match (order, semigroup) {
        (Some(n), None) => {
            if !filter.is_empty() {
                return Err(Usage("--filter applies to solution enumeration (--semigroup)".into()));
            }
            let tables = if long {
                let mode = if up_to_iso { Dedupe::Iso } else { Dedupe::Labeled };
                enumerate_semigroups_long(n, mode)?
            } else {
                enumerate_semigroups(n, up_to_iso)?
            };
            ("semigroups", tables.iter().map(|t| serde_json::to_value(t).expect("serializable")).collect())
        }
        (None, Some(file)) => {
            let table = table_at(&read_json(file)?, "")?;
            let f = parse_filter(filter, up_to_iso)?;
            let thetas = parallel_partition(&table, &f, workers)?;
            let mut sols: Vec<PeSolution> = thetas
                .iter()
                .map(|th| verify_solution(&table, th).expect("search results satisfy the axioms"))
                .collect();
            if up_to_iso {
                let mut seen = std::collections::BTreeSet::new();
                sols.retain(|s| seen.insert(solution_key(s).expect("small order")));
            }
            ("solutions", sols.iter().map(|s| serde_json::to_value(s).expect("serializable")).collect())
        }
        _ => return Err(Usage("give exactly one of --order or --semigroup".into())),
    };
    if let Some(dir) = out {
        let stem = &key[..key.len() - 1];
        for (i, v) in items.iter().enumerate() {
            write_file(&dir.join(format!("{stem}_{i:04}.json")), v)?;
        }
    }
    Ok(Outcome::Ok(json!({ "count": items.len(), key: items })))
}

fn run_census(order: usize, filter: &[String], workers: usize, out: Option<&Path>) -> Verb {
    let f = parse_filter(filter, false)?;
    let report = census(order, &f, workers)?;
    let mut v = serde_json::to_value(&report).expect("serializable");
    if let Some(dir) = out {
        let files = write_catalog(&report, dir).map_err(|e| Usage(format!("cannot write catalog: {e}")))?;
        v["catalog"] = json!({ "dir": dir.display().to_string(), "files": files.len() });
    }
    Ok(Outcome::Ok(v))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct LyubashenkoParams {
    n: usize,
    f: ElementMap,
    g: ElementMap,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct EndoParams {
    semigroup: CayleyTable,
    gamma: ElementMap,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct LeftZeroGroupParams {
    group: CayleyTable,
    sigma: ElementMap,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FactorizationParams {
    group: CayleyTable,
    h: Vec<usize>,
    k: Vec<usize>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct KashaevSergeevParams {
    group: CayleyTable,
    carrier: Vec<usize>,
    lambda: Vec<usize>,
    mu: Vec<usize>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GroupQuotientParams {
    group: CayleyTable,
    #[serde(flatten)]
    data: GroupSolutionData,
}

/// Either a full quadruple or `γ` for the worked example.
#[derive(Deserialize)]
#[serde(untagged)]
enum MatchedParams {
    Example { gamma: ElementMap },
    Full { s: PeSolution, t: PeSolution, alpha: Vec<ElementMap>, beta: Vec<ElementMap> },
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ExtSigmaParams {
    a: CayleyTable,
    x_size: usize,
    sigma: Vec<ElementMap>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct TaParams {
    a: CayleyTable,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GlueParams {
    semigroup: CayleyTable,
    components: Vec<PeSolution>,
    #[serde(default)]
    epsilon: Epsilon,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct IdempotentCentralParams {
    monoid: CayleyTable,
    mu: ElementMap,
    thetas: BTreeMap<usize, ElementMap>,
}

fn group(t: CayleyTable) -> Result<Group, Usage> {
    Group::new(t).map_err(|e| Usage(format!("\"group\": {e}")))
}

fn solution_outcome<E: std::fmt::Display>(r: Result<PeSolution, E>) -> Outcome {
    match r {
        Ok(s) => Outcome::Ok(serde_json::to_value(s).expect("serializable")),
        Err(e) => fail(e),
    }
}

fn construct(kind: Kind, file: &Path) -> Verb {
    let v = read_json(file)?;
    Ok(match kind {
        Kind::Lyubashenko => {
            let p: LyubashenkoParams = params(&v)?;
            solution_outcome(lyubashenko(p.n, &p.f, &p.g))
        }
        Kind::Endo => {
            let p: EndoParams = params(&v)?;
            solution_outcome(endo_solution(&p.semigroup, &p.gamma))
        }
        Kind::LeftzeroGroup => {
            let p: LeftZeroGroupParams = params(&v)?;
            solution_outcome(left_zero_group_solution(&group(p.group)?, &p.sigma))
        }
        Kind::Factorization => {
            let p: FactorizationParams = params(&v)?;
            match exact_factorization_solutions(&group(p.group)?, &p.h, &p.k) {
                Ok(f) => Outcome::Ok(json!({ "s": f.s, "r": f.r, "r_equals_flip_s": f.r_equals_flip_s })),
                Err(e) => fail(e),
            }
        }
        Kind::KashaevSergeev => {
            let p: KashaevSergeevParams = params(&v)?;
            solution_outcome(kashaev_sergeev(&group(p.group)?, &p.carrier, &p.lambda, &p.mu))
        }
        Kind::GroupQuotient => {
            let p: GroupQuotientParams = params(&v)?;
            solution_outcome(group_quotient_solution(&group(p.group)?, &p.data))
        }
        Kind::Matched => {
            let q = match params::<MatchedParams>(&v)? {
                MatchedParams::Example { gamma } => match worked_example_quadruple(&gamma) {
                    Ok(q) => q,
                    Err(e) => return Ok(fail(e)),
                },
                MatchedParams::Full { s, t, alpha, beta } => MatchedQuadruple { s, t, alpha, beta },
            };
            let verdict = check_matched_quadruple(&q);
            match matched_product(&q) {
                Ok(p) => Outcome::Ok(json!({ "verdict": verdict, "product": p })),
                Err(e) => Outcome::Fail(json!({ "verdict": verdict, "error": e.to_string() })),
            }
        }
        Kind::ExtSigma => {
            let p: ExtSigmaParams = params(&v)?;
            solution_outcome(ext_sigma(&p.a, p.x_size, &p.sigma))
        }
        Kind::TA => {
            let p: TaParams = params(&v)?;
            solution_outcome(t_a(&p.a))
        }
        Kind::CliffordGlue => {
            let p: GlueParams = params(&v)?;
            solution_outcome(glue_e_fixed(&p.semigroup, &p.components, &p.epsilon).map(|g| g.solution))
        }
        Kind::IdempotentCentral => {
            let p: IdempotentCentralParams = params(&v)?;
            let data = IdempotentClassificationData { mu: p.mu, thetas: p.thetas };
            solution_outcome(construct_idempotent_central(&p.monoid, &data))
        }
    })
}
