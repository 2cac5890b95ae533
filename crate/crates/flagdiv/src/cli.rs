use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use flagdiv_core::divisor::{anticanonical_divisor, theorem_equation};
use flagdiv_core::verify::{pi1_prediction, pi1_table, McConfig};
use flagdiv_core::weyl::{bruhat_leq, gamma, p_bruhat_leq, parse_steps, w0_wp, FlagType, Permutation};
use serde_json::{json, Value};

use crate::suites::{run_suite, SuiteName};
use crate::{json as j, CliError};

#[derive(Debug, Parser)]
#[command(
    name = "flagdiv",
    version,
    about = "Equations of the anti-canonical divisor of type-A partial flag varieties"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the output to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Equation of the divisor component for one simple root, or for all.
    Equations {
        #[arg(long)]
        n: usize,
        /// Steps of the flag, comma separated.
        #[arg(long)]
        flag: String,
        #[arg(long)]
        i: Option<usize>,
    },
    /// Every component of the anti-canonical divisor, with case tags.
    Divisor {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        flag: String,
    },
    /// Run a verification sweep; exits 1 unless every item passes.
    Verify {
        /// irr, case5, boundary, gamma or blockdet.
        #[arg(long)]
        suite: SuiteName,
        /// Largest n (or matrix size N for blockdet) in the sweep.
        #[arg(long)]
        max_n: usize,
        #[arg(long)]
        seed: u64,
        /// Random lines per verdict.
        #[arg(long, default_value_t = McConfig::DEFAULT_TRIALS)]
        trials: u32,
        /// Line coordinates are drawn from [-B, B].
        #[arg(long, default_value_t = McConfig::DEFAULT_SAMPLE_BOUND)]
        sample_bound: u64,
    },
    /// Γ(v) and predicted ranks for all of S_n, or the prediction for one flag.
    Pi1Table {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        flag: Option<String>,
    },
    /// Compare two permutations in Bruhat order, and in P-Bruhat order when
    /// a flag is given.
    Bruhat {
        #[arg(long)]
        n: usize,
        /// One-line notation, e.g. 3,1,4,2.
        #[arg(long)]
        u: String,
        #[arg(long)]
        v: String,
        #[arg(long)]
        flag: Option<String>,
    },
}

/// What a run produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `args` (including the program name) and executes the command.
pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let code = e.exit_code();
            return if code == 0 {
                Output { code, stdout: text, stderr: String::new() }
            } else {
                Output { code: 2, stdout: String::new(), stderr: text }
            };
        }
    };
    let (format, out) = (cli.format, cli.out.clone());
    match execute(cli.command, format) {
        Ok((body, passed)) => {
            let code = if passed { 0 } else { 1 };
            match out {
                Some(path) => match std::fs::write(&path, &body) {
                    Ok(()) => Output { code, stdout: String::new(), stderr: String::new() },
                    Err(e) => Output {
                        code: 2,
                        stdout: String::new(),
                        stderr: format!("error: cannot write {}: {e}\n", path.display()),
                    },
                },
                None => Output { code, stdout: body, stderr: String::new() },
            }
        }
        Err(e) => Output {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn flag_arg(n: usize, steps: &str) -> Result<FlagType, CliError> {
    Ok(FlagType::new(n, parse_steps(steps)?)?)
}

fn perm_arg(n: usize, s: &str) -> Result<Permutation, CliError> {
    let p: Permutation = s.parse()?;
    if p.n() != n {
        return Err(CliError::Usage(format!("{s} is not a permutation of 1..{n}")));
    }
    Ok(p)
}

fn render(format: Format, text: String, value: Value) -> String {
    match format {
        Format::Text => text,
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&value).expect("JSON values serialize");
            s.push('\n');
            s
        }
    }
}

fn execute(command: Command, format: Format) -> Result<(String, bool), CliError> {
    Ok(match command {
        Command::Equations { n, flag, i } => {
            let f = flag_arg(n, &flag)?;
            let wide = n > 9;
            let comps = match i {
                Some(i) => vec![theorem_equation(&f, i)?],
                None => (1..n).map(|i| theorem_equation(&f, i)).collect::<Result<_, _>>()?,
            };
            let text: String = comps
                .iter()
                .map(|c| format!("{}\n", c.equation.to_text(wide)))
                .collect();
            (render(format, text, j::divisor(&f, &comps)), true)
        }
        Command::Divisor { n, flag } => {
            let f = flag_arg(n, &flag)?;
            let wide = n > 9;
            let comps = anticanonical_divisor(&f)?;
            let text: String = comps
                .iter()
                .map(|c| {
                    format!(
                        "{}  [case {}, i={}]\n",
                        c.equation.to_text(wide),
                        c.case.number(),
                        c.i
                    )
                })
                .collect();
            (render(format, text, j::divisor(&f, &comps)), true)
        }
        Command::Verify { suite, max_n, seed, trials, sample_bound } => {
            let cfg = McConfig::new(trials, seed, sample_bound)?;
            let result = run_suite(suite, max_n, &cfg)?;
            let passed = result.all_pass();
            (render(format, result.text(), result.to_json()), passed)
        }
        Command::Pi1Table { n, flag: Some(steps) } => {
            let f = flag_arg(n, &steps)?;
            let top = w0_wp(&f);
            let g: Vec<usize> = gamma(&top).into_iter().collect();
            let rank = pi1_prediction(&f);
            let text = format!("flag {f}: w0wP = {top}, Γ = {g:?}, predicted rank {rank}\n");
            let value = json!({ "flag": j::flag(&f), "w0wp": top.to_string(), "gamma": g, "rank": rank });
            (render(format, text, value), true)
        }
        Command::Pi1Table { n, flag: None } => {
            if n == 0 {
                return Err(CliError::Usage("n must be positive".into()));
            }
            let rows = pi1_table(n);
            let word = |w: &[usize]| {
                if w.is_empty() {
                    "e".to_string()
                } else {
                    w.iter().map(|i| format!("s{i}")).collect::<Vec<_>>().join(" ")
                }
            };
            let mut text = format!("{:<w$}  {:<x$}  {:<y$}  rank\n", "v", "word", "Γ(v)", w = 2 * n, x = 3 * n * (n - 1) / 2 + 1, y = 3 * n);
            for r in &rows {
                let g = format!("{:?}", r.gamma.iter().collect::<Vec<_>>());
                text.push_str(&format!(
                    "{:<w$}  {:<x$}  {:<y$}  {}\n",
                    r.v.to_string(),
                    word(&r.word),
                    g,
                    r.rank,
                    w = 2 * n,
                    x = 3 * n * (n - 1) / 2 + 1,
                    y = 3 * n,
                ));
            }
            let value = json!({
                "n": n,
                "rows": rows.iter().map(|r| json!({
                    "v": r.v.to_string(),
                    "word": r.word,
                    "gamma": r.gamma.iter().collect::<Vec<_>>(),
                    "rank": r.rank,
                })).collect::<Vec<_>>(),
            });
            (render(format, text, value), true)
        }
        Command::Bruhat { n, u, v, flag } => {
            let (u, v) = (perm_arg(n, &u)?, perm_arg(n, &v)?);
            let leq = bruhat_leq(&u, &v)?;
            let mut text = format!("{u} <= {v}: {leq}\n");
            let mut value = json!({ "u": u.to_string(), "v": v.to_string(), "bruhat_leq": leq });
            if let Some(steps) = flag {
                let f = flag_arg(n, &steps)?;
                let p = p_bruhat_leq(&u, &v, &f)?;
                text.push_str(&format!("{u} <=_P {v} for {f}: {p}\n"));
                value["flag"] = j::flag(&f);
                value["p_bruhat_leq"] = json!(p);
            }
            (render(format, text, value), true)
        }
    })
}
