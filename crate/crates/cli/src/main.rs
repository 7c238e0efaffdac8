use clap::{Parser, Subcommand, ValueEnum};
use dmbl::catalog;
use dmbl::decomp::{self, DecompError};
use dmbl::finalg::{AlgebraClass, FiniteAlgebra};
use dmbl::par::Strategy;
use dmbl::sums::{InvSemilatticeSystem, SumError};
use dmbl::terms::{parse_identity, Identity};
use dmbl::varieties::{self, Check, Report};
use serde_json::json;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use thiserror::Error;

/// `println!` that tolerates a closed stdout, as in `dmbl lattice | head`.
macro_rules! out {
    ($($arg:tt)*) => {{
        use std::io::Write as _;
        let _ = writeln!(std::io::stdout(), $($arg)*);
    }};
}

#[derive(Parser)]
#[command(name = "dmbl", version, about = "De Morgan bisemilattice toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum LatticeFormat {
    Text,
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Print the syntactic classes of an identity.
    Classify {
        identity: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Check an identity in an algebra given by catalog name or JSON file.
    Check {
        #[arg(long)]
        algebra: String,
        identity: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Build the De Morgan-Płonka sum of a system file.
    Sum {
        #[arg(long)]
        system: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decompose an algebra into its direct system.
    Decompose {
        #[arg(long = "in")]
        input: String,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// List or export catalog algebras.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Emit the subvariety lattice.
    Lattice {
        #[arg(long, value_enum, default_value = "text")]
        format: LatticeFormat,
    },
    /// Run the verification report; exits 3 unless it is clean.
    Verify {
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    /// List the catalog and auxiliary algebras.
    List {
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Print one algebra as JSON, or write every algebra to a directory.
    Export {
        name: Option<String>,
        #[arg(long)]
        all: bool,
        #[arg(long)]
        dir: Option<PathBuf>,
    },
}

#[derive(Debug, Error)]
enum CliError {
    /// Unreadable input or unwritable output.
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    /// The input does not parse.
    #[error("{0}")]
    Parse(String),
    /// The input parses but is not a valid object of the requested kind.
    #[error("{0}")]
    Invalid(String),
    /// The verification report has failures.
    #[error("verification failed: {0} checks did not pass")]
    Unclean(usize),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Io { .. } | CliError::Parse(_) => 1,
            CliError::Invalid(_) => 2,
            CliError::Unclean(_) => 3,
        }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn write_or_print(out: Option<&Path>, text: &str) -> Result<(), CliError> {
    match out {
        Some(p) => std::fs::write(p, format!("{text}\n")).map_err(|source| CliError::Io {
            path: p.display().to_string(),
            source,
        }),
        None => {
            out!("{text}");
            Ok(())
        }
    }
}

fn identity(text: &str) -> Result<Identity, CliError> {
    parse_identity(text).map_err(|e| CliError::Parse(e.to_string()))
}

/// A catalog name, or else a path to an algebra JSON file.
fn algebra(spec: &str) -> Result<FiniteAlgebra, CliError> {
    if let Some(a) = catalog::lookup(spec) {
        return Ok(a);
    }
    let path = Path::new(spec);
    if !path.exists() {
        return Err(CliError::Parse(format!("`{spec}` is neither a catalog algebra nor a file")));
    }
    FiniteAlgebra::from_json(&read(path)?).map_err(|e| match e {
        dmbl::finalg::AlgebraError::Json(m) => CliError::Parse(m),
        other => CliError::Invalid(other.to_string()),
    })
}

fn classify(text: &str, format: Format) -> Result<(), CliError> {
    let e = identity(text)?;
    let classes = e.classes();
    match format {
        Format::Text => out!("{classes}"),
        Format::Json => {
            let labels: Vec<&str> = classes.iter().map(|c| c.label()).collect();
            out!("{}", json!({ "identity": e.to_sugared_string(), "classes": labels }));
        }
    }
    Ok(())
}

fn check(spec: &str, text: &str, format: Format) -> Result<(), CliError> {
    let a = algebra(spec)?;
    let e = identity(text)?;
    let sat = a.satisfies(&e).map_err(|err| CliError::Invalid(err.to_string()))?;
    let cx = sat.counterexample();
    match format {
        Format::Text => match cx {
            None => out!("true"),
            Some(c) => out!(
                "false: {} gives {} on the left and {} on the right",
                c.describe(&a),
                a.element_name(c.lhs_value),
                a.element_name(c.rhs_value)
            ),
        },
        Format::Json => {
            let v = match cx {
                None => json!({ "holds": true }),
                Some(c) => {
                    let asg: serde_json::Map<String, serde_json::Value> = c
                        .assignment
                        .iter()
                        .map(|(v, x)| (v.clone(), json!(a.element_name(*x))))
                        .collect();
                    json!({
                        "holds": false,
                        "assignment": asg,
                        "lhs": a.element_name(c.lhs_value),
                        "rhs": a.element_name(c.rhs_value),
                    })
                }
            };
            out!("{v}");
        }
    }
    Ok(())
}

fn sum(system: &Path, out: Option<&Path>) -> Result<(), CliError> {
    let sys = InvSemilatticeSystem::from_json(&read(system)?).map_err(|e| match e {
        dmbl::sums::SystemJsonError::Json(m) => CliError::Parse(m),
        other => CliError::Invalid(other.to_string()),
    })?;
    let a = sys.dpl_sum().map_err(|e: SumError| CliError::Invalid(e.to_string()))?;
    write_or_print(out, &a.to_json())
}

fn decompose(input: &str, out: Option<&Path>, format: Format) -> Result<(), CliError> {
    let a = algebra(input)?;
    let sys = decomp::decompose(&a).map_err(|e: DecompError| CliError::Invalid(e.to_string()))?;
    let text = match format {
        Format::Json => sys.to_json(),
        Format::Text => {
            let mut s = format!("index {} with {} elements\n", sys.index.name(), sys.index.size());
            for (i, f) in sys.fibres.iter().enumerate() {
                s.push_str(&format!("  fibre over {}: {}\n", sys.index.element_name(i), f.elements().join(" ")));
            }
            s.trim_end().to_string()
        }
    };
    write_or_print(out, &text)
}

fn all_algebras() -> Vec<(String, FiniteAlgebra)> {
    let mut v: Vec<(String, FiniteAlgebra)> = catalog::catalog()
        .iter()
        .map(|e| (e.name.to_string(), e.algebra.clone()))
        .collect();
    for name in catalog::AUXILIARY {
        v.push((name.to_string(), catalog::lookup(name).expect("auxiliary algebras exist")));
    }
    v
}

fn file_stem(name: &str) -> String {
    name.replace('†', "dag").to_lowercase()
}

fn catalog_cmd(action: CatalogAction) -> Result<(), CliError> {
    match action {
        CatalogAction::List { format } => {
            let rows: Vec<_> = all_algebras()
                .into_iter()
                .enumerate()
                .map(|(k, (name, a))| {
                    let index = (k < 11).then_some(k + 1);
                    let classes: Vec<&str> = AlgebraClass::ALL
                        .into_iter()
                        .filter(|c| a.is_class(*c))
                        .map(|c| c.label())
                        .collect();
                    (index, name, a.size(), classes)
                })
                .collect();
            match format {
                Format::Text => {
                    for (index, name, size, classes) in rows {
                        let idx = index.map_or("  ".to_string(), |i| format!("{i:>2}"));
                        out!("{idx} {name:<5} {size:>2} elements  {}", classes.join(", "));
                    }
                }
                Format::Json => {
                    let v: Vec<_> = rows
                        .into_iter()
                        .map(|(index, name, size, classes)| {
                            json!({ "index": index, "name": name, "size": size, "classes": classes })
                        })
                        .collect();
                    out!("{}", serde_json::to_string_pretty(&v).expect("serialises"));
                }
            }
            Ok(())
        }
        CatalogAction::Export { name, all, dir } => {
            if all {
                let algebras = all_algebras();
                match dir {
                    Some(d) => {
                        std::fs::create_dir_all(&d).map_err(|source| CliError::Io {
                            path: d.display().to_string(),
                            source,
                        })?;
                        for (n, a) in algebras {
                            write_or_print(Some(&d.join(format!("{}.json", file_stem(&n)))), &a.to_json())?;
                        }
                    }
                    None => {
                        let v: Vec<_> = algebras.iter().map(|(_, a)| a).collect();
                        out!("{}", serde_json::to_string_pretty(&v).expect("serialises"));
                    }
                }
                return Ok(());
            }
            let name = name.ok_or_else(|| CliError::Parse("give an algebra name or --all".into()))?;
            let a = catalog::lookup(&name).ok_or_else(|| CliError::Parse(format!("no catalog algebra `{name}`")))?;
            match dir {
                Some(d) => write_or_print(Some(&d.join(format!("{}.json", file_stem(a.name())))), &a.to_json()),
                None => write_or_print(None, &a.to_json()),
            }
        }
    }
}

fn lattice(format: LatticeFormat) -> Result<(), CliError> {
    let lat = varieties::build_lattice().map_err(|e| CliError::Invalid(e.to_string()))?;
    let text = match format {
        LatticeFormat::Text => lat.to_text().trim_end().to_string(),
        LatticeFormat::Json => lat.to_json(),
        LatticeFormat::Dot => lat.to_dot().trim_end().to_string(),
    };
    out!("{text}");
    Ok(())
}

/// Catalog integrity, the characterisation sweep, the lattice and the
/// theorem report in one list.
fn full_report() -> Report {
    let mut checks = Vec::new();
    let entries = catalog::catalog();
    let bad: Vec<&str> = entries
        .iter()
        .filter(|e| {
            e.algebra.class_violation(AlgebraClass::DeMorganBisemilattice).is_some()
                || !e.algebra.is_subdirectly_irreducible().unwrap_or(false)
        })
        .map(|e| e.name)
        .collect();
    let iso = (0..entries.len())
        .flat_map(|i| (i + 1..entries.len()).map(move |j| (i, j)))
        .find(|&(i, j)| entries[i].algebra.is_isomorphic(&entries[j].algebra).is_some());
    checks.push(Check {
        name: "catalog integrity".into(),
        passed: bad.is_empty() && iso.is_none() && entries.len() == 11,
        detail: format!("{} algebras; {} not SI DMBLs; isomorphic pair {:?}", entries.len(), bad.len(), iso),
    });

    let space = dmbl::terms::space::TermSpace::new(varieties::SWEEP_VARS, varieties::SWEEP_NODES);
    let sweep = varieties::sweep_characterisations(&space, Strategy::default());
    checks.push(Check {
        name: "syntactic and semantic classes agree".into(),
        passed: sweep.disagreements.is_empty(),
        detail: format!("{} identities, {} disagreements", sweep.identities, sweep.disagreements.len()),
    });

    let sets = varieties::enumerate_generator_sets();
    checks.push(Check {
        name: "generator sets".into(),
        passed: sets.len() == 15,
        detail: format!("{} valid subsets", sets.len()),
    });

    let (passed, detail) = match varieties::build_lattice() {
        Ok(l) => (
            l.nodes.len() == 23 && l.edge_names() == varieties::expected_hasse_edges(),
            format!("{} nodes, {} covering pairs", l.nodes.len(), l.covers.len()),
        ),
        Err(e) => (false, e.to_string()),
    };
    checks.push(Check {
        name: "subvariety lattice".into(),
        passed,
        detail,
    });

    checks.extend(varieties::verify_theorems().checks);
    Report { checks }
}

fn verify(format: Format) -> Result<(), CliError> {
    let report = full_report();
    match format {
        Format::Text => out!("{report}"),
        Format::Json => {
            let checks: Vec<_> = report
                .checks
                .iter()
                .map(|c| json!({ "name": c.name, "passed": c.passed, "detail": c.detail }))
                .collect();
            let v = json!({ "clean": report.is_clean(), "checks": checks });
            out!("{}", serde_json::to_string_pretty(&v).expect("serialises"));
        }
    }
    match report.failures().count() {
        0 => Ok(()),
        n => Err(CliError::Unclean(n)),
    }
}

/// Honours `DMBL_THREADS` as a cap on worker threads.
fn configure_threads() {
    #[cfg(feature = "parallel")]
    if let Some(n) = std::env::var("DMBL_THREADS").ok().and_then(|s| s.trim().parse::<usize>().ok()) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Classify { identity, format } => classify(&identity, format),
        Command::Check {
            algebra,
            identity,
            format,
        } => check(&algebra, &identity, format),
        Command::Sum { system, out } => sum(&system, out.as_deref()),
        Command::Decompose { input, out, format } => decompose(&input, out.as_deref(), format),
        Command::Catalog { action } => catalog_cmd(action),
        Command::Lattice { format } => lattice(format),
        Command::Verify { format } => verify(format),
    }
}

fn main() -> ExitCode {
    configure_threads();
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("dmbl: {e}");
            ExitCode::from(e.code())
        }
    }
}
