//! `knowcard`: import, export, validate and query knowledge cards, check
//! constraints, and run the HTTP service.
//!
//! Exit codes: 0 success, 1 domain error (invalid card, unknown id, bad
//! constraint), 2 I/O or environment error, 3 constraint violated.

use std::io::Write;
use std::net::SocketAddr;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use knowcard_core::cardxml::parse_card;
use knowcard_core::ocl::{parse_bindings, CheckReport};
use knowcard_core::store::DEFAULT_BASE;
use knowcard_service::app::{self, CheckRequest};
use knowcard_service::config::DEFAULT_BIND;
use knowcard_service::profile::{render, Profile};
use knowcard_service::{ApiError, App, ServiceConfig};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "knowcard", version, about = "Knowledge card store operator tool")]
struct Cli {
    /// Store root directory.
    #[arg(long, global = true, env = "KNOWCARD_STORE", default_value = "knowcard-store")]
    store: PathBuf,
    /// Base IRI for concept resources.
    #[arg(long, global = true, env = "KNOWCARD_BASE", default_value = DEFAULT_BASE)]
    base: String,
    /// Property schema (RDF/XML) to use instead of the store's own.
    #[arg(long, global = true, env = "KNOWCARD_SCHEMA")]
    schema: Option<PathBuf>,
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Store a card document; creates the store if needed.
    Import {
        file: PathBuf,
        #[arg(long)]
        overwrite: bool,
    },
    /// Write a stored card in canonical form, to a file or stdout.
    Export { id: String, out: Option<PathBuf> },
    /// Validate a card document without storing it.
    Validate { file: PathBuf },
    /// Check a constraint against a bindings file.
    Check {
        constraint: PathBuf,
        bindings: PathBuf,
        #[arg(long)]
        rel_tol: Option<f64>,
        #[arg(long)]
        abs_tol: Option<f64>,
    },
    /// Resources related to ROOT through RELATION.
    Query {
        root: String,
        relation: String,
        /// Include sub-properties of RELATION.
        #[arg(long)]
        infer: bool,
    },
    /// Run the HTTP service.
    Serve {
        #[arg(long, env = "KNOWCARD_BIND", default_value = DEFAULT_BIND)]
        bind: SocketAddr,
        /// Override the port of the bind address; 0 picks a free one.
        #[arg(long)]
        port: Option<u16>,
        /// Create the store layout if the root is empty.
        #[arg(long)]
        init: bool,
    },
}

enum Done {
    Ok,
    Violated,
}

struct Failure {
    exit: u8,
    error: ApiError,
}

impl From<ApiError> for Failure {
    fn from(error: ApiError) -> Self {
        let exit = if error.status >= 500 { 2 } else { 1 };
        Failure { exit, error }
    }
}

fn io_failure(what: &str, path: &Path, e: std::io::Error) -> Failure {
    Failure {
        exit: 2,
        error: ApiError::new(500, "IO_ERROR", format!("{what} {}: {e}", path.display())),
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| io_failure("reading", path, e))
}

impl Cli {
    fn config(&self, init: bool) -> ServiceConfig {
        ServiceConfig {
            store_root: self.store.clone(),
            base: self.base.clone(),
            schema_path: self.schema.clone(),
            init,
            ..ServiceConfig::default()
        }
    }

    fn open(&self, init: bool) -> Result<App, Failure> {
        App::open(&self.config(init)).map_err(|e| Failure {
            exit: 2,
            error: ApiError::from(e),
        })
    }

    fn print(&self, text: impl std::fmt::Display, value: Value) {
        if self.json {
            println!("{value}");
        } else {
            println!("{text}");
        }
    }
}

fn report_failure(cli: &Cli, failure: &Failure) {
    let e = &failure.error;
    if cli.json {
        eprintln!("{}", serde_json::to_string(e).unwrap_or_default());
        return;
    }
    eprintln!("error: {}: {}", e.code, e.message);
    if let Some(Value::Array(issues)) = &e.detail {
        for issue in issues {
            eprintln!("  {} at {}: {}", issue["code"].as_str().unwrap_or("?"), issue["path"].as_str().unwrap_or("?"), issue["message"].as_str().unwrap_or(""));
        }
    } else if let Some(offset) = e.detail.as_ref().and_then(|d| d.get("offset")) {
        eprintln!("  at offset {offset}");
    }
}

fn short(x: f64) -> String {
    let s = format!("{x:.12}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" { "0".into() } else { s.into() }
}

fn show_check(cli: &Cli, report: &CheckReport) {
    if cli.json {
        println!("{}", json!(report));
        return;
    }
    println!("holds: {}", report.holds);
    for (name, v) in [("lhs", report.lhs_value), ("rhs", report.rhs_value), ("residual", report.residual)] {
        if let Some(v) = v {
            println!("{name}: {}", short(v));
        }
    }
    for span in &report.violated_subterms {
        println!("violated: {}..{}", span.start, span.end);
    }
}

async fn run(cli: &Cli) -> Result<Done, Failure> {
    match &cli.command {
        Command::Import { file, overwrite } => {
            let document = read(file)?;
            let id = cli.open(true)?.create_card(document, *overwrite).await?;
            cli.print(&id, json!({ "id": id }));
        }
        Command::Export { id, out } => {
            let card = cli.open(false)?.card(id.clone()).await?;
            let xml = render(&card, Profile::RawXml)?;
            match out {
                Some(path) => std::fs::write(path, &xml).map_err(|e| io_failure("writing", path, e))?,
                None => {
                    let mut stdout = std::io::stdout().lock();
                    stdout
                        .write_all(xml.as_bytes())
                        .map_err(|e| io_failure("writing", Path::new("stdout"), e))?;
                }
            }
        }
        Command::Validate { file } => {
            let document = read(file)?;
            match parse_card(&document) {
                Ok(card) => cli.print(format!("{}: valid", card.id), json!({ "valid": true, "issues": [] })),
                Err(e) => {
                    let text: Vec<String> = e.report().iter().map(|i| i.to_string()).collect();
                    cli.print(text.join("\n"), json!({ "valid": false, "issues": e.report() }));
                    return Err(Failure {
                        exit: 1,
                        error: ApiError::from(e),
                    });
                }
            }
        }
        Command::Check {
            constraint,
            bindings,
            rel_tol,
            abs_tol,
        } => {
            let env = parse_bindings(&read(bindings)?).map_err(ApiError::from)?;
            let report = app::check(CheckRequest {
                constraint: read(constraint)?,
                bindings: env.bindings().clone(),
                angle_unit: Some(env.angle_unit),
                rel_tol: *rel_tol,
                abs_tol: *abs_tol,
            })?;
            show_check(cli, &report);
            if !report.holds {
                return Ok(Done::Violated);
            }
        }
        Command::Query { root, relation, infer } => {
            let found = cli
                .open(false)?
                .related_to_resource(root.clone(), relation.clone(), *infer)
                .await?;
            if cli.json {
                println!("{}", json!(found));
            } else {
                for r in found {
                    println!("{}", r.resource);
                }
            }
        }
        Command::Serve { bind, port, init } => {
            let app = cli.open(*init)?;
            let mut addr = *bind;
            if let Some(port) = port {
                addr.set_port(*port);
            }
            let listener = tokio::net::TcpListener::bind(addr).await.map_err(|e| Failure {
                exit: 2,
                error: ApiError::new(500, "BIND_FAILED", format!("binding {addr}: {e}")),
            })?;
            let local = listener.local_addr().map_err(|e| io_failure("reading address of", Path::new("listener"), e))?;
            cli.print(format!("listening on http://{local}"), json!({ "listening": local.to_string() }));
            std::io::stdout().flush().ok();
            knowcard_service::serve(listener, app, shutdown_signal())
                .await
                .map_err(|e| io_failure("serving on", Path::new(&local.to_string()), e))?;
        }
    }
    Ok(Done::Ok)
}

async fn shutdown_signal() {
    let interrupt = async {
        tokio::signal::ctrl_c().await.ok();
    };
    #[cfg(unix)]
    let terminate = async {
        match tokio::signal::unix::signal(tokio::signal::unix::SignalKind::terminate()) {
            Ok(mut s) => {
                s.recv().await;
            }
            Err(_) => std::future::pending().await,
        }
    };
    #[cfg(not(unix))]
    let terminate = std::future::pending::<()>();
    tokio::select! {
        _ = interrupt => {}
        _ = terminate => {}
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let runtime = match tokio::runtime::Runtime::new() {
        Ok(rt) => rt,
        Err(e) => {
            eprintln!("error: starting runtime: {e}");
            return ExitCode::from(2);
        }
    };
    match runtime.block_on(run(&cli)) {
        Ok(Done::Ok) => ExitCode::SUCCESS,
        Ok(Done::Violated) => ExitCode::from(3),
        Err(failure) => {
            report_failure(&cli, &failure);
            ExitCode::from(failure.exit)
        }
    }
}
