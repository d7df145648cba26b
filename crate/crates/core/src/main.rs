use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use gwa_core::cli::{execute, Command, Format, Session};
use gwa_core::picard::Closure;
use gwa_core::selftest;

#[derive(Parser)]
#[command(name = "gwa", version, about = "Graded modules over quadratic generalized Weyl algebras")]
struct Args {
    /// Session file with the parameter, modules and named elements.
    #[arg(long, global = true)]
    session: Option<std::path::PathBuf>,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Ascii,
    Svg,
}

#[derive(Subcommand)]
enum Verb {
    /// Print the session in canonical form.
    Show,
    /// Whether a module is projective.
    #[command(name = "projective?", alias = "projective")]
    Projective { module: String },
    /// Simple factor at every lattice point.
    Factors { module: String },
    /// Apply a Picard expression to a module; the module comes last.
    Apply {
        #[arg(required = true, num_args = 2.., allow_hyphen_values = true)]
        words: Vec<String>,
    },
    /// Generator of the maximal embedding of P into Q.
    Theta { p: String, q: String },
    /// Kernel of the surjection from P onto a simple.
    Kernel { module: String, simple: String },
    /// Graded dimensions of Q / theta P.
    #[command(alias = "coker-hilbert")]
    Coker { p: String, q: String },
    /// Graded Ext^1 between two simples.
    Ext { s: String, t: String },
    /// Zfin positions modulo the iota action.
    Orbit { module: String },
    /// An iota word carrying P to Q.
    Connect { p: String, q: String },
    /// Whether the modules and their images generate.
    Coverage {
        #[arg(required = true)]
        modules: Vec<String>,
        #[arg(long, default_value = "both", value_parser = parse_closure)]
        closure: Closure,
        #[arg(long, default_value = "-5..5", allow_hyphen_values = true, value_parser = parse_window)]
        window: (i64, i64),
    },
    /// Normal form of a Picard expression.
    Compose {
        #[arg(required = true, num_args = 1.., allow_hyphen_values = true)]
        words: Vec<String>,
    },
    /// Picture of the simples, optionally with an action.
    Render {
        #[arg(long, value_enum, default_value = "ascii")]
        format: FormatArg,
        #[arg(long, default_value = "-3..4", allow_hyphen_values = true, value_parser = parse_window)]
        window: (i64, i64),
        #[arg(long)]
        apply: Option<String>,
    },
    /// Randomized consistency checks over every case.
    Selftest {
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
}

fn parse_closure(text: &str) -> Result<Closure, String> {
    Closure::parse(text).ok_or_else(|| format!("expected none, iotas, shifts or both, got `{text}`"))
}

fn parse_window(text: &str) -> Result<(i64, i64), String> {
    let (lo, hi) = text.split_once("..").ok_or("expected lo..hi")?;
    let lo: i64 = lo.trim().parse().map_err(|_| format!("bad bound `{lo}`"))?;
    let hi: i64 = hi.trim().parse().map_err(|_| format!("bad bound `{hi}`"))?;
    if lo >= hi {
        return Err(format!("empty window {lo}..{hi}"));
    }
    Ok((lo, hi))
}

fn command(verb: Verb) -> Command {
    match verb {
        Verb::Show => Command::Show,
        Verb::Projective { module } => Command::Projective { module },
        Verb::Factors { module } => Command::Factors { module },
        Verb::Apply { mut words } => {
            let module = words.pop().unwrap_or_default();
            Command::Apply { expr: words.join(" "), module }
        }
        Verb::Theta { p, q } => Command::Theta { p, q },
        Verb::Kernel { module, simple } => Command::Kernel { module, simple },
        Verb::Coker { p, q } => Command::Coker { p, q },
        Verb::Ext { s, t } => Command::Ext { s, t },
        Verb::Orbit { module } => Command::Orbit { module },
        Verb::Connect { p, q } => Command::Connect { p, q },
        Verb::Coverage { modules, closure, window } => Command::Coverage { modules, closure, window },
        Verb::Compose { words } => Command::Compose { expr: words.join(" ") },
        Verb::Render { format, window, apply } => {
            let format = match format {
                FormatArg::Ascii => Format::Ascii,
                FormatArg::Svg => Format::Svg,
            };
            Command::Render { format, apply, window }
        }
        Verb::Selftest { .. } => unreachable!("handled before dispatch"),
    }
}

fn run_selftest(seed: u64, samples: usize) -> ExitCode {
    let checks = selftest::run(seed, samples);
    for check in &checks {
        let status = if check.passed() { "PASS" } else { "FAIL" };
        println!("{status} [{}] {} ({}/{})", check.params, check.name, check.failures, check.samples);
        if let Some(msg) = &check.first_failure {
            println!("    {msg}");
        }
    }
    if checks.iter().all(|c| c.passed()) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn main() -> ExitCode {
    let args = Args::parse();
    if let Verb::Selftest { seed, samples } = args.verb {
        return run_selftest(seed, samples);
    }
    let Some(path) = args.session else {
        eprintln!("error: --session <file> is required");
        return ExitCode::from(2);
    };
    let text = match std::fs::read_to_string(&path) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", path.display());
            return ExitCode::from(2);
        }
    };
    let result = Session::parse(&text).and_then(|s| execute(&s, &command(args.verb)));
    match result {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
