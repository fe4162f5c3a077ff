//! `eaqcc`: command-line front end for the code design pipeline.
//!
//! Exit codes: 0 pass, 1 verification failure, 2 no convergence within
//! `--lmax`, 3 parse, IO or configuration error.

mod artifact;
mod commands;
mod failure;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use artifact::InputKind;

#[derive(Parser, Debug)]
#[command(
    name = "eaqcc",
    version,
    about = "Entanglement-assisted quantum convolutional code design"
)]
struct Cli {
    /// Emit JSON instead of the plain text formats.
    #[arg(long, global = true)]
    json: bool,

    /// Log stage progress to stderr; repeat for more detail.
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    verbose: u8,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Input {
    /// Code file: Pauli sequences, a check matrix or a GF(4) code.
    input: PathBuf,

    /// Input format; detected from the header when omitted.
    #[arg(long, value_enum)]
    kind: Option<InputKind>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SReading {
    Cz,
    Swap,
}

impl SReading {
    fn gate(self) -> &'static str {
        match self {
            SReading::Cz => "CZ",
            SReading::Swap => "SWAP",
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Convert a code to the check matrix text format.
    Import {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the shifted symplectic product matrix of a code.
    Omega {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Expand a code by grouping `l` frames into one.
    Expand {
        #[command(flatten)]
        input: Input,
        #[arg(short = 'l', value_parser = clap::value_parser!(u32).range(1..))]
        l: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Reduce a code to ebit/ancilla standard form.
    Gs {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u32).range(1..))]
        lmax: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Synthesize and check the encoder and decoder for a standard form.
    Encode {
        /// Standard-form file written by `gs`.
        gs: PathBuf,
        /// Directory for `encoder.txt` and `decoder.txt`.
        #[arg(long)]
        out: PathBuf,
    },
    /// Check circuits against a target standard form.
    Verify {
        #[arg(long)]
        encoder: PathBuf,
        /// Standard-form file from `gs`, or a plain check matrix.
        #[arg(long)]
        target: PathBuf,
        /// Also decode after encoding and check the information qubits.
        #[arg(long, requires = "decoder")]
        roundtrip: bool,
        #[arg(long, requires = "roundtrip")]
        decoder: Option<PathBuf>,
        /// Meaning of an undefined `S a b` line; both are tried when omitted.
        #[arg(long, value_enum)]
        s_reading: Option<SReading>,
    },
    /// Run every stage and write all intermediate artifacts.
    Pipeline {
        #[arg(required_unless_present = "batch", conflicts_with = "batch")]
        input: Option<PathBuf>,
        #[arg(long, value_enum)]
        kind: Option<InputKind>,
        /// Run every file in this directory, each in isolation.
        #[arg(long)]
        batch: Option<PathBuf>,
        #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u32).range(1..))]
        lmax: u32,
        #[arg(long)]
        out: PathBuf,
    },
    /// Summarize a standard form: parameters, rate pair and Pauli rows.
    Report { gs: PathBuf },
}

fn main() -> ExitCode {
    // clap exits with 2 on usage errors, which the exit-code contract
    // reserves for non-convergence.
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(3)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let ctx = commands::Context {
        json: cli.json,
        verbose: cli.verbose,
    };
    let outcome = match cli.command {
        Command::Import { input, out } => ctx.import(&input.input, input.kind, out.as_deref()),
        Command::Omega { input, out } => ctx.omega(&input.input, input.kind, out.as_deref()),
        Command::Expand { input, l, out } => ctx.expand(&input.input, input.kind, l as usize, out.as_deref()),
        Command::Gs { input, lmax, out } => ctx.gs(&input.input, input.kind, lmax as usize, out.as_deref()),
        Command::Encode { gs, out } => ctx.encode(&gs, &out),
        Command::Verify {
            encoder,
            target,
            decoder,
            s_reading,
            ..
        } => ctx.verify(&encoder, &target, decoder.as_deref(), s_reading.map(SReading::gate)),
        Command::Pipeline {
            input,
            kind,
            batch,
            lmax,
            out,
        } => match (input, batch) {
            (_, Some(dir)) => ctx.batch(&dir, kind, lmax as usize, &out),
            (Some(file), None) => ctx.pipeline(&file, kind, lmax as usize, &out),
            (None, None) => unreachable!("clap requires an input or --batch"),
        },
        Command::Report { gs } => ctx.report(&gs),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {f}");
            ExitCode::from(f.code())
        }
    }
}
