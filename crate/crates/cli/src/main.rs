//! Command-line surface over the exact superposition-counting library.
//!
//! Exit codes: 0 success, 1 validation or hypothesis failure (one-line
//! diagnostic on stderr), 2 resource-bound refusal.

mod render;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use superpose_core::character::{make_character, Character, CharacterSpec};
use superpose_core::graph::{count_with_character_groups, superposition_count_groups};
use superpose_core::monomial::ProductSpec;
use superpose_core::oracle::t_similarity_count;
use superpose_core::zpoly::{coefficient_sum, cycle_index, internal_product_multi};
use superpose_core::{Error, Limits, Multigraph, PermGroup};

#[derive(Parser)]
#[command(
    name = "superpose",
    about = "Exact cycle-index algebra and graph superposition counting",
    version
)]
struct Cli {
    #[command(flatten)]
    global: GlobalOpts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GlobalOpts {
    /// Emit JSON instead of text (stable: sorted keys, canonical term order)
    #[arg(long, global = true)]
    json: bool,
    /// Largest permutation degree accepted
    #[arg(long, global = true, value_name = "D")]
    max_degree: Option<usize>,
    /// Largest orbit/tuple space swept before refusing
    #[arg(long, global = true, value_name = "N")]
    max_orbit_space: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Automorphism group of a multigraph: generators and order
    Aut {
        /// Graph file: first line the vertex count, then edge lines "u v" or "u v mult"
        graph: PathBuf,
    },
    /// Generalized cycle index of a character on a group
    Zindex {
        /// Group file: first line "degree d", then one generator per line
        #[arg(long)]
        group: PathBuf,
        /// Character spec: trivial | sign | cyclic:a | dihedral | kernel:<group-file>
        #[arg(long = "char")]
        character: String,
    },
    /// Internal product of cycle indices and its coefficient sum
    Product {
        /// Factor as <group-file>:<char-spec>; repeat for each factor
        #[arg(long = "factor", required = true)]
        factors: Vec<String>,
    },
    /// Superposition count of graphs (or groups), optionally constrained
    /// by a character on the first factor
    Count {
        /// Graph files, all on the same vertex count
        #[arg(long, num_args = 1.., value_name = "FILE")]
        graphs: Vec<PathBuf>,
        /// Group files (alternative to --graphs)
        #[arg(long, num_args = 1.., value_name = "FILE")]
        groups: Vec<PathBuf>,
        /// Character spec applied to the first factor
        #[arg(long)]
        first_char: Option<String>,
    },
    /// Orbit decomposition of a tensor product of induced monomial
    /// representations, with the master-identity verdict
    Decompose {
        /// Factor as <group-file>:<char-spec>; repeat for each factor
        #[arg(long = "factor", required = true)]
        factors: Vec<String>,
    },
    /// Brute-force tuple-similarity report over the given groups
    Oracle {
        /// Group files
        #[arg(long, num_args = 1.., required = true, value_name = "FILE")]
        groups: Vec<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap help/version output is a success path
            if e.use_stderr() {
                eprintln!("{e}");
                return ExitCode::from(1);
            }
            print!("{e}");
            return ExitCode::SUCCESS;
        }
    };
    let mut limits = Limits::default();
    if let Some(d) = cli.global.max_degree {
        limits.max_degree = d;
    }
    if let Some(n) = cli.global.max_orbit_space {
        limits.max_orbit_space = n;
        limits.max_tuple_space = n;
    }
    match run(cli.command, cli.global.json, &limits) {
        Ok(output) => {
            print!("{output}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            if e.is_resource_bound() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}

fn run(command: Command, json: bool, limits: &Limits) -> Result<String, CliError> {
    match command {
        Command::Aut { graph } => {
            let g = load_graph(&graph)?;
            let aut = g.automorphism_group(limits)?;
            if json {
                Ok(json_line(render::group_json(&aut)))
            } else {
                Ok(render::group_text(&aut))
            }
        }
        Command::Zindex { group, character } => {
            let w = load_group(&group, limits)?;
            let chi = parse_char_spec(&character, &w, limits)?;
            let z = cycle_index(&w, &chi)?;
            if json {
                Ok(json_line(render::poly_json(&z)))
            } else {
                Ok(format!("{z}\n"))
            }
        }
        Command::Product { factors } => {
            let chars = parse_factors(&factors, limits)?;
            let degree = chars[0].group().degree();
            let refs: Vec<&Character> = chars.iter().collect();
            let prod = internal_product_multi(degree, &refs)?;
            let n = coefficient_sum(&prod)?;
            if json {
                let mut value = render::poly_json(&prod);
                value["coefficient_sum"] = serde_json::Value::String(n.to_string());
                Ok(json_line(value))
            } else {
                Ok(format!("{prod}\nN = {n}\n"))
            }
        }
        Command::Count {
            graphs,
            groups,
            first_char,
        } => {
            let groups = match (graphs.is_empty(), groups.is_empty()) {
                (false, true) => graphs
                    .iter()
                    .map(|path| Ok(load_graph(path)?.automorphism_group(limits)?))
                    .collect::<Result<Vec<PermGroup>, CliError>>()?,
                (true, false) => groups
                    .iter()
                    .map(|path| load_group(path, limits))
                    .collect::<Result<Vec<PermGroup>, CliError>>()?,
                _ => {
                    return Err(CliError::Usage(
                        "pass exactly one of --graphs or --groups".into(),
                    ))
                }
            };
            let count = match first_char {
                None => superposition_count_groups(&groups, limits)?,
                Some(spec_text) => {
                    let spec = parse_char_spec_raw(&spec_text, limits)?;
                    count_with_character_groups(&groups, &spec, limits)?
                }
            };
            if json {
                Ok(json_line(serde_json::json!({ "count": count })))
            } else {
                Ok(format!("{count}\n"))
            }
        }
        Command::Decompose { factors } => {
            let chars = parse_factors(&factors, limits)?;
            let spec = ProductSpec::new(chars)?;
            let summands = spec.decompose(limits)?;
            let check = spec.verify_master_identity(limits)?;
            let verdict = if check.equal { "EQUAL" } else { "NOT EQUAL" };
            if json {
                let value = serde_json::json!({
                    "master_identity_equal": check.equal,
                    "summands": summands
                        .iter()
                        .map(render::summand_json)
                        .collect::<Vec<serde_json::Value>>(),
                });
                Ok(json_line(value))
            } else {
                let mut out = String::new();
                for (i, s) in summands.iter().enumerate() {
                    out.push_str(&render::summand_text(i, s));
                    out.push('\n');
                }
                out.push_str(&format!("master identity: {verdict}\n"));
                Ok(out)
            }
        }
        Command::Oracle { groups } => {
            let groups = groups
                .iter()
                .map(|path| load_group(path, limits))
                .collect::<Result<Vec<PermGroup>, CliError>>()?;
            let report = t_similarity_count(&groups, limits)?;
            // agreement check against the orbit decomposition with trivial
            // characters, skipped only if that side exceeds its bound
            let orbit_count = {
                let chars = groups
                    .iter()
                    .map(|w| make_character(w, &CharacterSpec::Trivial))
                    .collect::<Result<Vec<Character>, Error>>()?;
                match ProductSpec::new(chars)?.decompose(limits) {
                    Ok(summands) => Some(summands.len()),
                    Err(e) if e.is_resource_bound() => None,
                    Err(e) => return Err(e.into()),
                }
            };
            let agreement = match orbit_count {
                Some(n) if n == report.class_count => "ok",
                Some(_) => "MISMATCH",
                None => "skipped (orbit bound exceeded)",
            };
            if let Some(n) = orbit_count {
                if n != report.class_count {
                    return Err(Error::PathsDisagree(format!(
                        "oracle classes {} vs orbit count {n}",
                        report.class_count
                    ))
                    .into());
                }
            }
            if json {
                let mut value = render::oracle_json(&report);
                value["agreement"] = serde_json::Value::String(agreement.into());
                Ok(json_line(value))
            } else {
                let mut out = format!("classes {}\n", report.class_count);
                for (i, (rep, size)) in report
                    .class_reps
                    .iter()
                    .zip(&report.class_sizes)
                    .enumerate()
                {
                    let tuple: Vec<String> = rep.iter().map(|p| p.to_string()).collect();
                    out.push_str(&format!("class {i}: size {size} rep ({})\n", tuple.join(", ")));
                }
                out.push_str(&format!("agreement with orbit decomposition: {agreement}\n"));
                Ok(out)
            }
        }
    }
}

enum CliError {
    Core(Error),
    Usage(String),
    Io(String),
}

impl CliError {
    fn is_resource_bound(&self) -> bool {
        matches!(self, CliError::Core(e) if e.is_resource_bound())
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Usage(msg) => write!(f, "{msg}"),
            CliError::Io(msg) => write!(f, "{msg}"),
        }
    }
}

fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("cannot read {}: {e}", path.display())))
}

fn load_group(path: &Path, limits: &Limits) -> Result<PermGroup, CliError> {
    Ok(PermGroup::parse(&read_file(path)?, limits)?)
}

fn load_graph(path: &Path) -> Result<Multigraph, CliError> {
    Ok(Multigraph::parse(&read_file(path)?)?)
}

/// `trivial | sign | cyclic:a | dihedral | kernel:<group-file>`.
fn parse_char_spec_raw(text: &str, limits: &Limits) -> Result<CharacterSpec, CliError> {
    match text.split_once(':') {
        None => match text {
            "trivial" => Ok(CharacterSpec::Trivial),
            "sign" => Ok(CharacterSpec::Sign),
            "dihedral" => Ok(CharacterSpec::Dihedral),
            other => Err(CliError::Usage(format!("unknown character spec: {other}"))),
        },
        Some(("cyclic", a)) => {
            let a: usize = a
                .parse()
                .map_err(|_| CliError::Usage(format!("bad divisor in cyclic spec: {a}")))?;
            Ok(CharacterSpec::Cyclic(a))
        }
        Some(("kernel", path)) => {
            let r = load_group(Path::new(path), limits)?;
            Ok(CharacterSpec::Kernel(r))
        }
        Some((other, _)) => Err(CliError::Usage(format!("unknown character spec: {other}"))),
    }
}

fn parse_char_spec(
    text: &str,
    w: &PermGroup,
    limits: &Limits,
) -> Result<Character, CliError> {
    let spec = parse_char_spec_raw(text, limits)?;
    Ok(make_character(w, &spec)?)
}

/// `<group-file>:<char-spec>`, split at the first colon.
fn parse_factors(factors: &[String], limits: &Limits) -> Result<Vec<Character>, CliError> {
    factors
        .iter()
        .map(|f| {
            let (path, spec) = f.split_once(':').ok_or_else(|| {
                CliError::Usage(format!("factor must be <group-file>:<char-spec>: {f}"))
            })?;
            let w = load_group(Path::new(path), limits)?;
            parse_char_spec(spec, &w, limits)
        })
        .collect()
}

fn json_line(value: serde_json::Value) -> String {
    format!("{value}\n")
}
