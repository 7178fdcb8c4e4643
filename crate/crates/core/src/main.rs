use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use wilddiag::congruence::congruent;
use wilddiag::io::{
    catalog, read_matrix_json, render_dot, render_json, render_text, InputDocument,
};
use wilddiag::{compile, dim_oracle, Compiled, Error};

#[derive(Parser)]
#[command(
    name = "wilddiag",
    version,
    about = "Diagrams and Cartan matrices of connections on the affine line"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Build the diagram of one or more input files.
    Build {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Cross-check the dimension against the direct count.
        #[arg(long)]
        check: bool,
    },
    /// Build a built-in example.
    Example {
        name: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        check: bool,
    },
    /// List the built-in examples.
    ListExamples,
    /// Test whether gᵀ·A·g = B for integer matrices given as JSON.
    Congruent { a: PathBuf, b: PathBuf, g: PathBuf },
}

fn read(path: &PathBuf) -> Result<String, Error> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn render(c: &Compiled, format: Format) -> String {
    match format {
        Format::Text => render_text(c),
        Format::Json => render_json(c),
        Format::Dot => render_dot(c),
    }
}

fn run_document(doc: &InputDocument, format: Format, check: bool) -> Result<String, Error> {
    let compiled = compile(&doc.input)?;
    let mut out = render(&compiled, format);
    if check {
        let oracle = dim_oracle(&doc.input)?;
        if oracle != compiled.cartan.dim_b {
            return Err(Error::Invariant(format!(
                "direct dimension count {oracle} differs from 2 - (d,d) = {}",
                compiled.cartan.dim_b
            )));
        }
        if matches!(format, Format::Text) {
            out.push_str(&format!("check: direct count agrees ({oracle})\n"));
        }
    }
    Ok(out)
}

fn build_file(path: &PathBuf, format: Format, check: bool) -> Result<String, Error> {
    let text = read(path)?;
    run_document(&InputDocument::parse(&text)?, format, check)
}

fn run(cli: Cli) -> Result<(), Error> {
    match cli.command {
        Command::Build {
            files,
            format,
            check,
        } => {
            let results: Vec<_> = files
                .par_iter()
                .map(|f| (f, build_file(f, format, check)))
                .collect();
            let mut first_err = None;
            for (f, r) in results {
                match r {
                    Ok(out) => print!("{out}"),
                    Err(e) => {
                        eprintln!("{}: {e}", f.display());
                        first_err.get_or_insert(e);
                    }
                }
            }
            first_err.map_or(Ok(()), Err)
        }
        Command::Example {
            name,
            format,
            check,
        } => {
            print!(
                "{}",
                run_document(&catalog::catalog(&name)?, format, check)?
            );
            Ok(())
        }
        Command::ListExamples => {
            for e in catalog::CATALOG {
                println!("{:<16} {}", e.name, e.title);
            }
            Ok(())
        }
        Command::Congruent { a, b, g } => {
            let (a, b, g) = (
                read_matrix_json(&read(&a)?)?,
                read_matrix_json(&read(&b)?)?,
                read_matrix_json(&read(&g)?)?,
            );
            println!("{}", congruent(&a, &b, &g)?);
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
