use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use mindist::{example, list_examples, parse_code_file, parse_methods, run_report, AnyCode, Budget, FieldCtx, Method,
    ReportOptions};

#[derive(Parser)]
#[command(name = "mindist", version, about = "Minimum distance of linear codes, computed several ways")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact distance from the chosen methods (default brute,tutte,afold)
    Distance(Run),
    /// Tutte polynomial and the distance read off it
    Tutte(Run),
    /// Initial degree of m*Fitt(C)
    AlphaFitt(Run),
    /// Apolar Hilbert function of the Chow form and the resulting bound
    Inverse(Run),
    /// Graded pieces of the Boolean filtration (binary codes)
    Binary(Run),
    /// Orlik-Terao ideal, Betti screen and distance bound
    Ot(Run),
    /// MDS test and star-configuration Hilbert series check
    Mds(Run),
    /// Every method, cross-checked (default --method all)
    Report(Run),
    /// Built-in examples
    ListExamples,
}

#[derive(Args)]
struct Run {
    /// Code file to read
    #[arg(long, value_name = "FILE", conflicts_with = "example", required_unless_present = "example")]
    input: Option<PathBuf>,
    /// Built-in example (see list-examples)
    #[arg(long, value_name = "NAME")]
    example: Option<String>,
    /// Field for a built-in example: F<p> or Q
    #[arg(long, value_name = "FIELD", requires = "example")]
    field: Option<FieldCtx>,
    /// Comma-separated methods, or `all`
    #[arg(long, value_name = "LIST")]
    method: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Budget override KEY=VALUE (enumeration, subset_n, rows, t_max, boolean_n, betti_vars, betti_degree)
    #[arg(long, value_name = "KEY=VALUE", value_parser = parse_budget_entry)]
    budget: Vec<(String, u64)>,
    /// Prime field for Betti numbers of rational ideals
    #[arg(long, value_name = "P")]
    prime: Option<u64>,
    /// Top degree for degreewise checks
    #[arg(long, value_name = "T", default_value_t = 8)]
    tmax: usize,
    /// Leave timings out of the output
    #[arg(long)]
    no_timings: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

fn parse_budget_entry(s: &str) -> Result<(String, u64), String> {
    let (k, v) = s.split_once('=').ok_or("expected KEY=VALUE")?;
    let v = v.parse().map_err(|_| format!("bad value {v:?}"))?;
    Ok((k.to_string(), v))
}

fn apply_budget(entries: &[(String, u64)]) -> Result<Budget, String> {
    let mut b = Budget::default();
    for (k, v) in entries {
        let u = *v as usize;
        match k.as_str() {
            "enumeration" => b.enumeration = *v,
            "subset_n" => b.subset_n = u,
            "rows" => b.rows = *v,
            "t_max" => b.t_max = u,
            "boolean_n" => b.boolean_n = u,
            "betti_vars" => b.betti_vars = u,
            "betti_degree" => b.betti_degree = u,
            _ => return Err(format!("unknown budget key {k:?}")),
        }
    }
    Ok(b)
}

fn execute(run: &Run, default_methods: &str) -> Result<u8, String> {
    let mut opts = ReportOptions {
        budget: apply_budget(&run.budget)?,
        prime: run.prime,
        t_max: run.tmax,
        rational_model: None,
    };
    let code: AnyCode = match (&run.input, &run.example) {
        (Some(path), _) => {
            let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
            parse_code_file(&text).map_err(|e| format!("{}: {e}", path.display()))?
        }
        (None, Some(name)) => {
            let e = example(name).map_err(|e| e.to_string())?;
            opts.rational_model = Some(e.rational().map_err(|e| e.to_string())?);
            e.code_over(run.field.unwrap_or(e.default_field)).map_err(|e| e.to_string())?
        }
        (None, None) => unreachable!("clap requires a source"),
    };
    let methods: Vec<Method> =
        parse_methods(run.method.as_deref().unwrap_or(default_methods)).map_err(|e| e.to_string())?;

    let mut report = run_report(&code, &methods, &opts);
    if run.no_timings {
        report = report.without_timings();
    }
    match run.format {
        Format::Text => print!("{}", report.to_text()),
        Format::Json => println!("{}", report.to_json()),
    }
    Ok(report.exit_code() as u8)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let (run, methods) = match &cli.command {
        Command::ListExamples => {
            for (name, description) in list_examples() {
                println!("{name:<18} {description}");
            }
            return ExitCode::SUCCESS;
        }
        Command::Distance(r) => (r, "brute,tutte,afold"),
        Command::Tutte(r) => (r, "tutte"),
        Command::AlphaFitt(r) => (r, "alpha-fitt"),
        Command::Inverse(r) => (r, "inverse"),
        Command::Binary(r) => (r, "binary"),
        Command::Ot(r) => (r, "ot"),
        Command::Mds(r) => (r, "mds"),
        Command::Report(r) => (r, "all"),
    };
    match execute(run, methods) {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
