//! Library side of the `zll` command: argument and config parsing, the
//! subcommand bodies and artifact emission.

pub mod args;
pub mod commands;
pub mod config;
pub mod error;
pub mod numbers;
pub mod output;

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::time::Instant;

use sha2::{Digest, Sha256};

pub use args::{parse_cli, Cli, Command};
pub use error::CliError;

const THREADS_ENV: &str = "ZLL_THREADS";

fn worker_count(flag: Option<usize>) -> Result<Option<usize>, CliError> {
    if let Some(n) = flag {
        return Ok(Some(n));
    }
    match std::env::var(THREADS_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| CliError::Input(format!("{THREADS_ENV}={v:?} is not a worker count"))),
        Err(_) => Ok(None),
    }
}

fn dispatch(argv: Vec<String>) -> Result<(), CliError> {
    let started = Instant::now();
    let config_text = match args::config_path(&argv) {
        Some(path) => Some(fs::read_to_string(&path).map_err(|e| CliError::io(path, e))?),
        None => None,
    };
    let config = config_text.as_deref().map(config::parse_config).transpose()?;
    let cli = parse_cli(&argv, config.as_ref())?;
    let cfg = cli.global.evaluator()?;
    let spec = cli.global.quadrature()?;
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(n) = worker_count(cli.global.threads)? {
        if n == 0 {
            return Err(CliError::Input("worker count must be positive".into()));
        }
        pool = pool.num_threads(n);
    }
    let pool = pool
        .build()
        .map_err(|e| CliError::Input(format!("cannot start worker pool: {e}")))?;
    let artifact = pool.install(|| commands::execute(&cli.command, &cfg, &spec))?;

    match &cli.global.out {
        Some(path) => output::write(path, &artifact.body)?,
        None => std::io::stdout()
            .write_all(artifact.body.as_bytes())
            .map_err(|e| CliError::io("<stdout>", e))?,
    }
    if let Some((path, text)) = &artifact.side_csv {
        output::write(path, text)?;
    }
    if let Some(path) = &cli.global.plot {
        output::emit_plotdata(&artifact.series, path)?;
    }

    let manifest = output::RunManifest {
        schema_version: output::SCHEMA_VERSION,
        command: cli.command.name().to_string(),
        parameters: serde_json::json!({
            "arguments": argv[1..],
            "evaluator": cfg,
            "quadrature": spec,
        }),
        tool_version: env!("CARGO_PKG_VERSION").to_string(),
        config_hash: hex::encode(Sha256::digest(config_text.unwrap_or_default().as_bytes())),
        wall_time_s: started.elapsed().as_secs_f64(),
        workers: pool.current_num_threads(),
    };
    let text = serde_json::to_string_pretty(&manifest).expect("manifest serializes") + "\n";
    match &cli.global.out {
        Some(path) => {
            let mut name = path.as_os_str().to_owned();
            name.push(".manifest.json");
            output::write(name.as_ref(), &text)?;
        }
        None => eprint!("{text}"),
    }
    Ok(())
}

/// Run the command line `args` (program name first) and return the exit code.
pub fn run<I, S>(args: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<OsString>,
{
    let argv: Result<Vec<String>, OsString> = args.into_iter().map(|a| a.into().into_string()).collect();
    let result = match argv {
        Ok(argv) => dispatch(argv),
        Err(bad) => Err(CliError::Input(format!("argument {bad:?} is not valid UTF-8"))),
    };
    match result {
        Ok(()) => 0,
        Err(CliError::Usage(e)) => {
            let _ = e.print();
            CliError::Usage(e).exit_code()
        }
        Err(e) => {
            eprintln!("zll: {e}");
            e.exit_code()
        }
    }
}
