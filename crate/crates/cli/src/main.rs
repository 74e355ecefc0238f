use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use nodal_k3_cli::{
    cmd_classify, cmd_descent, cmd_pell, cmd_search, cmd_walls, parse_rational, render_text,
    CliError, InstanceArgs, SearchArgs,
};
use serde_json::Value;

#[derive(Parser)]
#[command(
    name = "nodal-k3",
    version,
    about = "Exact classification of spherical moduli on nodal K3 surfaces"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(clap::Args)]
struct Output {
    /// Write the document here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether the moduli space is empty or a single locally free sheaf.
    Classify {
        #[command(flatten)]
        instance: InstanceArgs,
        #[command(flatten)]
        output: Output,
    },
    /// Run the destabilizer search, optionally with a full audit trail.
    Search {
        #[command(flatten)]
        search: SearchArgs,
        #[command(flatten)]
        output: Output,
    },
    /// Draw the walls W_m at a numeric (eps, epsp) as SVG plus a JSON sidecar.
    Walls {
        #[command(flatten)]
        instance: InstanceArgs,
        /// eps as an exact rational, e.g. 1/100.
        #[arg(long)]
        eps: String,
        /// epsp as an exact rational, must be below eps.
        #[arg(long)]
        epsp: String,
        #[arg(long, default_value_t = -3, allow_hyphen_values = true)]
        m_min: i64,
        #[arg(long, default_value_t = 3, allow_hyphen_values = true)]
        m_max: i64,
        /// SVG path; the sidecar goes next to it with a .json extension.
        #[arg(long)]
        out: PathBuf,
    },
    /// Solutions of x^2 - r*x*y + y^2 = 1 in a box.
    Pell {
        #[arg(long, allow_hyphen_values = true)]
        r: i64,
        #[arg(long, default_value_t = 10)]
        bound: i64,
        #[command(flatten)]
        output: Output,
    },
    /// Descent check for a splitting type on the exceptional curve.
    Descent {
        /// Comma separated degrees, e.g. 2,-2.
        #[arg(long, allow_hyphen_values = true)]
        splitting: String,
        #[arg(long, default_value_t = false)]
        require_zero_sum: bool,
        #[command(flatten)]
        output: Output,
    },
}

fn emit(value: &Value, output: &Output) -> anyhow::Result<()> {
    let body = match output.format {
        Format::Json => format!("{}\n", serde_json::to_string_pretty(value)?),
        Format::Text => render_text(value),
    };
    match &output.out {
        Some(path) => {
            fs::write(path, body).with_context(|| format!("writing {}", path.display()))?
        }
        None => print!("{body}"),
    }
    Ok(())
}

fn sidecar_path(svg: &Path) -> PathBuf {
    svg.with_extension("json")
}

fn run(cli: Cli) -> anyhow::Result<()> {
    match cli.command {
        Command::Classify { instance, output } => emit(&cmd_classify(&instance)?, &output),
        Command::Search { search, output } => emit(&cmd_search(&search)?, &output),
        Command::Walls {
            instance,
            eps,
            epsp,
            m_min,
            m_max,
            out,
        } => {
            let (eps, epsp) = (parse_rational(&eps)?, parse_rational(&epsp)?);
            let drawn = cmd_walls(&instance, &eps, &epsp, m_min..=m_max)?;
            fs::write(&out, &drawn.svg).with_context(|| format!("writing {}", out.display()))?;
            let sidecar = sidecar_path(&out);
            let body = format!("{}\n", serde_json::to_string_pretty(&drawn.sidecar)?);
            fs::write(&sidecar, body).with_context(|| format!("writing {}", sidecar.display()))?;
            Ok(())
        }
        Command::Pell { r, bound, output } => emit(&cmd_pell(r, bound)?, &output),
        Command::Descent {
            splitting,
            require_zero_sum,
            output,
        } => emit(&cmd_descent(&splitting, require_zero_sum)?, &output),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err:#}");
            // I/O trouble counts as bad input; only a breach reports 3.
            let code = err
                .downcast_ref::<CliError>()
                .map_or(2, CliError::exit_code);
            ExitCode::from(code)
        }
    }
}
