use std::io::{Read, Write};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};

use bezsyz::domain::DomainDescriptor;
use bezsyz::Error;
use bezsyz_cli::{
    emit_report, error_json, inputs_from_text, parse_names, parse_u64_list, run, Command, Config, Format, Options,
    Request,
};

/// Syzygies, ideal membership and parametric families over Z, Q, F_p and Z_(p).
#[derive(Parser)]
#[command(name = "bezsyz", version)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
    /// Coefficient domain: Z, Q, Fp:<p> or Zloc:<p>.
    #[arg(long, global = true, default_value = "Z")]
    ring: String,
    /// Comma-separated variable names.
    #[arg(long, global = true, default_value = "X")]
    vars: String,
    /// Comma-separated parameter names (paramsyz, evalparam).
    #[arg(long, global = true, default_value = "")]
    params: String,
    /// Fixed degree cap.
    #[arg(long, global = true)]
    cap: Option<usize>,
    /// Ceiling for escalating caps (default 32).
    #[arg(long, global = true)]
    max_cap: Option<usize>,
    /// Comma-separated primes for modular falsification.
    #[arg(long, global = true)]
    primes: Option<String>,
    /// JSON output (the default).
    #[arg(long, global = true, conflicts_with = "text")]
    json: bool,
    /// Human-readable output.
    #[arg(long, global = true)]
    text: bool,
    /// TOML file with `cap`, `max_cap` and `primes`; flags take precedence.
    #[arg(long, global = true)]
    config: Option<String>,
}

#[derive(Args)]
struct Inputs {
    /// Inputs, or `-` to read one per line from standard input.
    #[arg(allow_negative_numbers = true)]
    inputs: Vec<String>,
}

#[derive(Args)]
struct ParamInputs {
    #[command(flatten)]
    inputs: Inputs,
    /// Degree cap in the variables (default: the field bound).
    #[arg(long)]
    beta: Option<usize>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Syzygies of f1, …, fn.
    Syz(Inputs),
    /// Solutions of A y = 0; one row per input, entries separated by commas.
    Syzmat(Inputs),
    /// Solve A y = b; rows written `a1, a2 | b`.
    Solve(Inputs),
    /// Whether f0 lies in (f1, …, fn).
    Member(Inputs),
    /// Membership for homogeneous inputs by exact degrees.
    Memberhom(Inputs),
    /// Whether f0 lies in the radical of (f1, …, fn), over a field.
    Radmember(Inputs),
    /// Whether r0 lies in the radical of (r1, …, rn) in the coefficient domain.
    Radconst(Inputs),
    /// Intersection of two modules; generators separated by `;`, entries by `,`.
    Intersect(Inputs),
    /// The ideal M' : M for modules M' (first) and M (second).
    Colon(Inputs),
    /// Parametric family of syzygy generators over Z[C].
    Paramsyz(ParamInputs),
    /// Instantiate and check a parametric family at parameter values.
    Evalparam {
        #[command(flatten)]
        inputs: ParamInputs,
        /// Comma-separated parameter values.
        #[arg(long)]
        at: String,
    },
    /// Degree bounds for N variables and degree d.
    Bounds {
        #[arg(long)]
        nvars: u32,
        #[arg(long)]
        degree: u64,
        /// Number of unknowns.
        #[arg(long)]
        n: Option<u64>,
        /// Number of equations.
        #[arg(long)]
        rows: Option<u32>,
        /// Target degree for the membership bound.
        #[arg(long)]
        target: Option<u64>,
    },
}

fn request(cli: Cli) -> Result<Request, Error> {
    let domain: DomainDescriptor = cli.ring.parse()?;
    let mut options = Options {
        cap: cli.cap,
        max_cap: cli.max_cap,
        primes: cli.primes.as_deref().map(parse_u64_list).transpose()?,
        format: if cli.text { Format::Text } else { Format::Json },
        ..Options::default()
    };
    let config = match &cli.config {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::Precondition(format!("cannot read config {path}: {e}")))?;
            toml::from_str::<Config>(&text).map_err(|e| Error::Precondition(format!("config {path}: {e}")))?
        }
        None => Config::default(),
    };
    let (command, inputs) = match cli.command {
        Cmd::Syz(i) => (Command::Syz, i.inputs),
        Cmd::Syzmat(i) => (Command::Syzmat, i.inputs),
        Cmd::Solve(i) => (Command::Solve, i.inputs),
        Cmd::Member(i) => (Command::Member, i.inputs),
        Cmd::Memberhom(i) => (Command::Memberhom, i.inputs),
        Cmd::Radmember(i) => (Command::Radmember, i.inputs),
        Cmd::Radconst(i) => (Command::Radconst, i.inputs),
        Cmd::Intersect(i) => (Command::Intersect, i.inputs),
        Cmd::Colon(i) => (Command::Colon, i.inputs),
        Cmd::Paramsyz(p) => {
            options.beta = p.beta;
            (Command::Paramsyz, p.inputs.inputs)
        }
        Cmd::Evalparam { inputs, at } => {
            options.beta = inputs.beta;
            options.at = parse_names(&at);
            (Command::Evalparam, inputs.inputs.inputs)
        }
        Cmd::Bounds { nvars, degree, n, rows, target } => {
            options.nvars = Some(nvars);
            options.degree = Some(degree);
            options.n = n;
            options.rows = rows;
            options.target = target;
            (Command::Bounds, Vec::new())
        }
    };
    let inputs = if inputs.len() == 1 && inputs[0] == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Error::Precondition(format!("cannot read standard input: {e}")))?;
        inputs_from_text(&text)
    } else {
        inputs
    };
    Ok(Request {
        command,
        domain,
        vars: parse_names(&cli.vars),
        params: parse_names(&cli.params),
        inputs,
        options,
        config,
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let err = Error::Precondition(e.render().to_string().lines().next().unwrap_or("invalid arguments").to_string());
            eprintln!("{}", error_json(&err));
            return ExitCode::from(1);
        }
    };
    let result = request(cli).and_then(|req| Ok((run(&req)?, req.options.format)));
    match result {
        Ok((resp, format)) => {
            let text = match format {
                Format::Json => serde_json::to_string_pretty(&resp.json).expect("JSON values serialize") + "\n",
                Format::Text => emit_report(&resp),
            };
            // a closed pipe is not an error worth reporting
            let _ = std::io::stdout().write_all(text.as_bytes());
            ExitCode::from(resp.exit_code as u8)
        }
        Err(e) => {
            eprintln!("{}", error_json(&e));
            ExitCode::from(1)
        }
    }
}
