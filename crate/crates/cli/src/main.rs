//! Batch front end: interval multiplicities, diagrams, decomposability
//! verdicts, essential-cover searches, bipath diagrams, and filtration
//! homology, all over JSON inputs.
//!
//! Exit codes: 0 success, 2 invalid input, 3 verification mismatch.

use clap::{Parser, Subcommand, ValueEnum};
use intmult::bipath::{diagram_closed_form, diagram_via_unified_cover, diagram_via_zigzag};
use intmult::cover::essentially_covers;
use intmult::field::Field;
use intmult::homology::persistent_homology;
use intmult::io::{BipathDiagramJson, DiagramJson, FiltrationJson, ModuleJson, OrderMapJson};
use intmult::module::PersistenceModule;
use intmult::multiplicity::{interval_multiplicity, is_interval_decomposable, oracle_multiplicity};
use intmult::poset::{Interval, Poset};
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "intmult",
    version,
    about = "Exact interval multiplicities of persistence modules"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BipathRoute {
    Closed,
    Zigzag,
    Unified,
}

#[derive(Subcommand)]
enum Command {
    /// Multiplicity of one interval module in a persistence module.
    Multiplicity {
        /// Module JSON file.
        module: PathBuf,
        /// Interval: element list "a,b,c" or endpoints "sc=a,b sk=c,d";
        /// tokens are labels first, indices second.
        #[arg(long)]
        interval: String,
        /// Reinterpret the module's entries over this field.
        #[arg(long)]
        field: Option<String>,
        /// Cross-check against the Hom-pairing oracle; mismatch exits 3.
        #[arg(long)]
        verify: bool,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Multiplicity of every interval, with a decomposability verdict.
    Diagram {
        module: PathBuf,
        /// Reinterpret the module's entries over this field.
        #[arg(long)]
        field: Option<String>,
        /// Worker threads for the per-interval computations.
        #[arg(long, default_value = "1")]
        jobs: usize,
        #[arg(long)]
        verify: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Interval-decomposability verdict only.
    CheckDecomposable {
        module: PathBuf,
        /// Reinterpret the module's entries over this field.
        #[arg(long)]
        field: Option<String>,
        #[arg(long, default_value = "1")]
        jobs: usize,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Search an essential-cover witness for an interval along a map.
    Cover {
        /// Order map JSON file ({"Z": ..., "P": ..., "map": [...]}).
        map: PathBuf,
        #[arg(long)]
        interval: String,
        /// Field for the redundancy-reduction search.
        #[arg(long, default_value = "GF(2)")]
        field: String,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Bipath persistence diagram.
    Bipath {
        module: PathBuf,
        /// Reinterpret the module's entries over this field.
        #[arg(long)]
        field: Option<String>,
        #[arg(long, value_enum, default_value = "closed")]
        route: BipathRoute,
        /// Also compute the other routes and fail on disagreement.
        #[arg(long)]
        verify: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Persistent homology of a simplicial filtration, as a module file.
    Homology {
        filtration: PathBuf,
        /// Homology degree.
        #[arg(short = 'q', long)]
        degree: usize,
        #[arg(long, default_value = "GF(2)")]
        field: String,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Box<dyn std::error::Error>> {
    match cli.command {
        Command::Multiplicity {
            module,
            interval,
            field,
            verify,
            output,
        } => {
            let m = load_module(&module, field.as_deref())?;
            let i = parse_interval(m.poset(), &interval)?;
            let d = interval_multiplicity(&m, &i);
            if verify {
                let oracle = oracle_multiplicity(&m, &i);
                if oracle != d {
                    eprintln!("verification failed: formula {d}, oracle {oracle}");
                    return Ok(ExitCode::from(3));
                }
            }
            emit(output.as_deref(), &format!("{d}\n"))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Diagram {
            module,
            field,
            jobs,
            verify,
            format,
            output,
        } => {
            let m = load_module(&module, field.as_deref())?;
            let report = is_interval_decomposable(&m, jobs.max(1));
            if verify {
                for i in m.poset().enumerate_intervals() {
                    let formula = report.diagram.multiplicity_of(&i);
                    let oracle = oracle_multiplicity(&m, &i);
                    if formula != oracle {
                        eprintln!(
                            "verification failed on {:?}: formula {formula}, oracle {oracle}",
                            i.members()
                        );
                        return Ok(ExitCode::from(3));
                    }
                }
            }
            let json = DiagramJson::new(&report.diagram, report.decomposable);
            let text = match format {
                Format::Json => to_pretty(&json)?,
                Format::Table => {
                    let mut t = String::new();
                    for (interval, mult) in &report.diagram.entries {
                        writeln!(t, "{}  x{}", label_list(m.poset(), interval), mult)?;
                    }
                    writeln!(t, "decomposable: {}", report.decomposable)?;
                    t
                }
            };
            emit(output.as_deref(), &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::CheckDecomposable {
            module,
            field,
            jobs,
            output,
        } => {
            let m = load_module(&module, field.as_deref())?;
            let report = is_interval_decomposable(&m, jobs.max(1));
            let verdict = if report.decomposable { "yes" } else { "no" };
            emit(output.as_deref(), &format!("{verdict}\n"))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Cover {
            map,
            interval,
            field,
            output,
        } => {
            let text = std::fs::read_to_string(&map)?;
            let json: OrderMapJson = serde_json::from_str(&text)?;
            let loader = file_loader(&map);
            let zeta = json.to_order_map(&loader)?;
            let i = parse_interval(zeta.codomain(), &interval)?;
            let f = Field::parse(&field)?;
            match essentially_covers(&zeta, &i, f) {
                None => {
                    emit(output.as_deref(), "none\n")?;
                }
                Some(cover) => {
                    let full = cover.morphism.full();
                    let payload = serde_json::json!({
                        "covered": true,
                        "column_objects": full.col_objects(),
                        "row_objects": full.row_objects(),
                        "column_lift": cover.witness.col_lift,
                        "row_lift": cover.witness.row_lift,
                    });
                    emit(output.as_deref(), &to_pretty(&payload)?)?;
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Bipath {
            module,
            field,
            route,
            verify,
            format,
            output,
        } => {
            let m = load_module(&module, field.as_deref())?;
            let diagram = match route {
                BipathRoute::Closed => diagram_closed_form(&m)?,
                BipathRoute::Zigzag => diagram_via_zigzag(&m)?,
                BipathRoute::Unified => diagram_via_unified_cover(&m)?,
            };
            if verify {
                let alternatives = [
                    diagram_closed_form(&m)?,
                    diagram_via_zigzag(&m)?,
                    diagram_via_unified_cover(&m)?,
                ];
                if alternatives.iter().any(|alt| *alt != diagram) {
                    eprintln!("verification failed: bipath routes disagree");
                    return Ok(ExitCode::from(3));
                }
            }
            let json = BipathDiagramJson::new(&diagram);
            let text = match format {
                Format::Json => to_pretty(&json)?,
                Format::Table => {
                    let mut t = String::new();
                    for e in &diagram.entries {
                        writeln!(
                            t,
                            "{:6} {}  x{}",
                            intmult::io::kind_name(e.kind),
                            label_list(m.poset(), &e.interval),
                            e.mult
                        )?;
                    }
                    t
                }
            };
            emit(output.as_deref(), &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Homology {
            filtration,
            degree,
            field,
            output,
        } => {
            let text = std::fs::read_to_string(&filtration)?;
            let json: FiltrationJson = serde_json::from_str(&text)?;
            let loader = file_loader(&filtration);
            let f = json.to_filtration(&loader)?;
            let module = persistent_homology(&f, degree, Field::parse(&field)?)?;
            let out = ModuleJson::from_module(&module);
            emit(output.as_deref(), &to_pretty(&out)?)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn load_module(
    path: &Path,
    field_override: Option<&str>,
) -> Result<PersistenceModule, Box<dyn std::error::Error>> {
    let text = std::fs::read_to_string(path)?;
    let json: ModuleJson = serde_json::from_str(&text)?;
    let loader = file_loader(path);
    Ok(match field_override {
        Some(spec) => json.to_module_in(Field::parse(spec)?, &loader)?,
        None => json.to_module(&loader)?,
    })
}

/// Resolves poset path references relative to the referencing file.
fn file_loader(base: &Path) -> impl Fn(&str) -> intmult::Result<String> {
    let dir = base.parent().map(Path::to_path_buf).unwrap_or_default();
    move |rel: &str| {
        let candidate = dir.join(rel);
        std::fs::read_to_string(&candidate)
            .map_err(|e| intmult::Error::BadInput(format!("reading {}: {e}", candidate.display())))
    }
}

/// Accepts "a,b,c" member lists and "sc=a,b sk=c,d" endpoint form; each
/// token is matched against labels first, then parsed as an index.
fn parse_interval(poset: &Poset, spec: &str) -> intmult::Result<Interval> {
    let spec = spec.trim();
    if spec.contains("sc=") || spec.contains("sk=") {
        let mut sc: Option<Vec<usize>> = None;
        let mut sk: Option<Vec<usize>> = None;
        for part in spec.split([' ', ';']).filter(|p| !p.is_empty()) {
            if let Some(rest) = part.strip_prefix("sc=") {
                sc = Some(parse_elements(poset, rest)?);
            } else if let Some(rest) = part.strip_prefix("sk=") {
                sk = Some(parse_elements(poset, rest)?);
            } else {
                return Err(intmult::Error::BadInput(format!(
                    "unexpected interval part `{part}`"
                )));
            }
        }
        let sc = sc.ok_or_else(|| intmult::Error::BadInput("missing sc=".into()))?;
        let sk = sk.ok_or_else(|| intmult::Error::BadInput("missing sk=".into()))?;
        let members: Vec<usize> = (0..poset.len())
            .filter(|&z| sc.iter().any(|&a| poset.leq(a, z)) && sk.iter().any(|&b| poset.leq(z, b)))
            .collect();
        poset.interval(&members)
    } else {
        poset.interval(&parse_elements(poset, spec)?)
    }
}

fn parse_elements(poset: &Poset, list: &str) -> intmult::Result<Vec<usize>> {
    split_outside_parens(list)
        .into_iter()
        .map(|token| {
            if let Some(idx) = poset.labels().iter().position(|l| *l == token) {
                return Ok(idx);
            }
            token
                .parse::<usize>()
                .ok()
                .filter(|&i| i < poset.len())
                .ok_or_else(|| intmult::Error::BadInput(format!("unknown element `{token}`")))
        })
        .collect()
}

/// Splits on commas at parenthesis depth zero, so labels like "(2,1)" stay
/// whole.
fn split_outside_parens(list: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut current = String::new();
    for ch in list.chars() {
        match ch {
            '(' => {
                depth += 1;
                current.push(ch);
            }
            ')' => {
                depth = depth.saturating_sub(1);
                current.push(ch);
            }
            ',' if depth == 0 => {
                let token = current.trim().to_string();
                if !token.is_empty() {
                    out.push(token);
                }
                current.clear();
            }
            _ => current.push(ch),
        }
    }
    let token = current.trim().to_string();
    if !token.is_empty() {
        out.push(token);
    }
    out
}

fn label_list(poset: &Poset, interval: &Interval) -> String {
    let labels: Vec<&str> = interval.members().iter().map(|&x| poset.label(x)).collect();
    format!("{{{}}}", labels.join(","))
}

fn to_pretty<T: serde::Serialize>(value: &T) -> Result<String, Box<dyn std::error::Error>> {
    Ok(format!("{}\n", serde_json::to_string_pretty(value)?))
}

fn emit(path: Option<&Path>, text: &str) -> std::io::Result<()> {
    match path {
        Some(p) => std::fs::write(p, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}
