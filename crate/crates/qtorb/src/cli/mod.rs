//! Command line interface: model files in, invariant reports out.
//!
//! ```text
//! qtorb <subcommand> <file> [--format text|json] [--max-degree D]
//!       [--orientation +1|-1] [--allow-sign-flips]
//! ```
//!
//! Subcommands: `validate`, `pi1`, `cover`, `quotient`, `betti`,
//! `ring`, `chern`, `chen-ruan`, `report`, and `equiv <file1> <file2>`.
//!
//! Exit codes: `0` success; `2` any input problem (I/O, JSON syntax,
//! schema violation, validation failure — the error class is named in the
//! message); `3` a `chern` request on a file without a realization; `4` an
//! internal consistency failure (e.g. ring dimensions disagreeing with the
//! h-vector).
//!
//! The `--orientation` flag overrides the file's `orientation` field when
//! given.  Output on stdout is deterministic; errors go to stderr as
//! `error[<class>]: <message>`.

mod file;
mod render;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

pub use file::{load_model, parse_model, LoadedModel};

use render::JsonMap;

/// CLI failure modes, each mapping to an exit code and message class.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Io(String),
    #[error("{0}")]
    Syntax(String),
    #[error("{0}")]
    Schema(String),
    #[error("{0}")]
    Validation(String),
    #[error("this command needs vertex coordinates: add a \"realization\" to the model file")]
    MissingRealization,
    #[error("{0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io(_)
            | CliError::Syntax(_)
            | CliError::Schema(_)
            | CliError::Validation(_) => 2,
            CliError::MissingRealization => 3,
            CliError::Internal(_) => 4,
        }
    }

    pub fn class(&self) -> &'static str {
        match self {
            CliError::Io(_) => "io",
            CliError::Syntax(_) => "syntax",
            CliError::Schema(_) => "schema",
            CliError::Validation(_) => "validation",
            CliError::MissingRealization => "missing-realization",
            CliError::Internal(_) => "internal",
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Args, Debug)]
struct CommonArgs {
    /// Model file (JSON).
    file: PathBuf,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Orientation override: +1 or -1 (defaults to the file's value).
    #[arg(long, allow_hyphen_values = true)]
    orientation: Option<String>,
}

#[derive(Parser, Debug)]
#[command(
    name = "qtorb",
    version,
    about = "Exact topological invariants of quasitoric orbifolds"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Validate the model file and list singular faces.
    Validate(CommonArgs),
    /// Orbifold fundamental group.
    Pi1(CommonArgs),
    /// Universal orbifold cover.
    Cover(CommonArgs),
    /// Manifold and global-quotient verdicts.
    Quotient(CommonArgs),
    /// Rational Betti numbers.
    Betti(CommonArgs),
    /// Rational cohomology ring.
    Ring {
        #[command(flatten)]
        common: CommonArgs,
        /// Highest degree whose standard basis is listed.
        #[arg(long)]
        max_degree: Option<usize>,
    },
    /// Vertex signs, top Chern number, almost complex check (needs a
    /// realization).
    Chern(CommonArgs),
    /// Chen-Ruan Betti table and twisted sectors.
    #[command(name = "chen-ruan")]
    ChenRuan(CommonArgs),
    /// Everything at once.
    Report(CommonArgs),
    /// Decide whether two model files are related by a lattice
    /// isomorphism.
    Equiv {
        first: PathBuf,
        second: PathBuf,
        /// Also allow negating individual characteristic vectors.
        #[arg(long)]
        allow_sign_flips: bool,
        /// Output format.
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

/// Entry point for the `qtorb` binary: parses arguments from the
/// environment, prints the report or error, and returns the exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(cli) {
        Ok(output) => {
            print!("{output}");
            0
        }
        Err(e) => {
            eprintln!("error[{}]: {}", e.class(), e);
            e.exit_code()
        }
    }
}

fn parse_orientation(flag: &Option<String>, fallback: i8) -> Result<i8, CliError> {
    match flag.as_deref() {
        None => Ok(fallback),
        Some("+1") | Some("1") => Ok(1),
        Some("-1") => Ok(-1),
        Some(other) => Err(CliError::Schema(format!(
            "orientation must be +1 or -1, got {other:?}"
        ))),
    }
}

fn execute(cli: Cli) -> Result<String, CliError> {
    match cli.command {
        Command::Validate(args) => simple_command(&args, |loaded, json, text| {
            render::section_validate(loaded, json, text);
            Ok(())
        }),
        Command::Pi1(args) => simple_command(&args, |loaded, json, text| {
            render::section_pi1(loaded, json, text);
            Ok(())
        }),
        Command::Cover(args) => simple_command(&args, |loaded, json, text| {
            render::section_cover(loaded, json, text);
            Ok(())
        }),
        Command::Quotient(args) => simple_command(&args, |loaded, json, text| {
            render::section_quotient(loaded, json, text);
            Ok(())
        }),
        Command::Betti(args) => simple_command(&args, render::section_betti),
        Command::Ring { common, max_degree } => simple_command(&common, |loaded, json, text| {
            render::section_ring(loaded, max_degree, json, text).map(|_| ())
        }),
        Command::Chern(args) => {
            let loaded = load_model(&args.file)?;
            let orientation = parse_orientation(&args.orientation, loaded.orientation)?;
            let mut json = JsonMap::new();
            let mut text = String::new();
            render::section_meta(&loaded, &mut json, &mut text);
            render::section_chern(&loaded, orientation, &mut json, &mut text)?;
            Ok(render::finish(json, text, args.format == Format::Json))
        }
        Command::ChenRuan(args) => simple_command(&args, |loaded, json, text| {
            render::section_chenruan(loaded, true, json, text);
            Ok(())
        }),
        Command::Report(args) => {
            let loaded = load_model(&args.file)?;
            let orientation = parse_orientation(&args.orientation, loaded.orientation)?;
            report(&loaded, orientation, args.format == Format::Json)
        }
        Command::Equiv {
            first,
            second,
            allow_sign_flips,
            format,
        } => {
            let a = load_model(&first)?;
            let b = load_model(&second)?;
            render::render_equiv(&a, &b, allow_sign_flips, format == Format::Json)
        }
    }
}

/// Renders the complete report for an already-loaded model: validation
/// facts, fundamental group, universal cover, quotient decisions, Betti
/// numbers, cohomology ring, Chern data (when a realization is present),
/// and the Chen-Ruan table. With `json` set, the result is pretty-printed
/// JSON; otherwise plain text. This is the programmatic equivalent of the
/// `report` subcommand.
pub fn report(loaded: &LoadedModel, orientation: i8, json_output: bool) -> Result<String, CliError> {
    let mut json = JsonMap::new();
    let mut text = String::new();
    render::section_meta(loaded, &mut json, &mut text);
    render::section_validate(loaded, &mut json, &mut text);
    render::section_pi1(loaded, &mut json, &mut text);
    render::section_cover(loaded, &mut json, &mut text);
    render::section_quotient(loaded, &mut json, &mut text);
    render::section_betti(loaded, &mut json, &mut text)?;
    render::section_ring(loaded, None, &mut json, &mut text)?;
    if loaded.realization.is_some() {
        render::section_chern(loaded, orientation, &mut json, &mut text)?;
    } else {
        json.insert("chern".into(), serde_json::Value::Null);
        text.push_str("chern data: skipped (no realization in the model file)\n");
    }
    render::section_chenruan(loaded, true, &mut json, &mut text);
    Ok(render::finish(json, text, json_output))
}

/// Loads the model, renders the meta header plus one section, and formats.
fn simple_command(
    args: &CommonArgs,
    section: impl FnOnce(&LoadedModel, &mut JsonMap, &mut String) -> Result<(), CliError>,
) -> Result<String, CliError> {
    let loaded = load_model(&args.file)?;
    // The orientation flag is validated even where unused, so mistakes
    // surface regardless of subcommand.
    let _ = parse_orientation(&args.orientation, loaded.orientation)?;
    let mut json = JsonMap::new();
    let mut text = String::new();
    render::section_meta(&loaded, &mut json, &mut text);
    section(&loaded, &mut json, &mut text)?;
    Ok(render::finish(json, text, args.format == Format::Json))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p112_file() -> tempfile::NamedTempFile {
        write_file(
            r#"{
            "name": "p112",
            "dimension": 2,
            "facets": 3,
            "vertices": [[0, 1], [0, 2], [1, 2]],
            "lambda": [[1, 1], [1, -1], [-1, 0]],
            "realization": [[0, 0], [1, 0], [0, 1]],
            "functional": [1, 2]
        }"#,
        )
    }

    fn write_file(text: &str) -> tempfile::NamedTempFile {
        use std::io::Write;
        let mut f = tempfile::NamedTempFile::new().unwrap();
        f.write_all(text.as_bytes()).unwrap();
        f
    }

    fn run_args(args: &[&str]) -> Result<String, CliError> {
        let cli = Cli::try_parse_from(args).unwrap();
        execute(cli)
    }

    #[test]
    fn report_json_has_the_expected_values() {
        let f = p112_file();
        let out = run_args(&["qtorb", "report", f.path().to_str().unwrap(), "--format", "json"])
            .unwrap();
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["name"], "p112");
        assert_eq!(v["pi1"]["trivial"], true);
        assert_eq!(v["global_quotient"], false);
        assert_eq!(v["betti"], serde_json::json!([1, 1, 1]));
        assert_eq!(v["chern"]["top_chern"], "5/2");
        assert_eq!(v["chen_ruan"]["0"], 1);
        assert_eq!(v["chen_ruan"]["2"], 2);
        assert_eq!(v["chen_ruan"]["4"], 1);
    }

    #[test]
    fn chern_without_realization_is_exit_3() {
        let f = write_file(
            r#"{
            "name": "bare",
            "dimension": 2,
            "facets": 3,
            "vertices": [[0, 1], [0, 2], [1, 2]],
            "lambda": [[1, 1], [1, -1], [-1, 0]]
        }"#,
        );
        let err = run_args(&["qtorb", "chern", f.path().to_str().unwrap()]).unwrap_err();
        assert_eq!(err.exit_code(), 3);
    }

    #[test]
    fn validation_failure_is_exit_2() {
        let f = write_file(
            r#"{
            "name": "bad",
            "dimension": 2,
            "facets": 3,
            "vertices": [[0, 1], [0, 2], [1, 2]],
            "lambda": [[1, 0], [2, 0], [0, 1]]
        }"#,
        );
        let err = run_args(&["qtorb", "validate", f.path().to_str().unwrap()]).unwrap_err();
        assert_eq!(err.exit_code(), 2);
        assert_eq!(err.class(), "validation");
    }

    #[test]
    fn report_is_deterministic() {
        let f = p112_file();
        let path = f.path().to_str().unwrap().to_string();
        let a = run_args(&["qtorb", "report", &path, "--format", "json"]).unwrap();
        let b = run_args(&["qtorb", "report", &path, "--format", "json"]).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn orientation_flag_overrides_the_file() {
        let f = p112_file();
        let path = f.path().to_str().unwrap().to_string();
        let out = run_args(&[
            "qtorb",
            "chern",
            &path,
            "--orientation",
            "-1",
            "--format",
            "json",
        ])
        .unwrap();
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["chern"]["top_chern"], "-5/2");
        assert_eq!(v["chern"]["almost_complex"]["satisfied"], true);
        assert_eq!(v["chern"]["almost_complex"]["orientation"], 1);
    }

    #[test]
    fn nongeneric_functional_fails_only_index_commands() {
        let f = write_file(
            r#"{
            "name": "tie",
            "dimension": 2,
            "facets": 3,
            "vertices": [[0, 1], [0, 2], [1, 2]],
            "lambda": [[1, 1], [1, -1], [-1, 0]],
            "realization": [[0, 0], [1, 0], [0, 1]],
            "functional": [0, 3]
        }"#,
        );
        let path = f.path().to_str().unwrap().to_string();
        assert!(run_args(&["qtorb", "validate", &path]).is_ok());
        assert!(run_args(&["qtorb", "pi1", &path]).is_ok());
        let err = run_args(&["qtorb", "betti", &path]).unwrap_err();
        assert_eq!(err.class(), "validation");
    }
}
