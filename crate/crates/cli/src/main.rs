use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand};
use surface_bundles::bundles::{
    fiber_sum, generate_torus_bundle, generate_xn_with, h1_mod_n, h1_total_space,
    homotopy_separation, indecomposability_report_with, restore_raag_lift, section_sum, signature,
    torus_bundle_report, verify_factorization, KimWord, Level, MonodromyFactorization, XnOptions,
};
use surface_bundles::dissection::Dissection;
use surface_bundles::mcg::{TwistOrder, TwistWord};
use surface_bundles::{Error, ErrorKind};

/// Surface bundles over surfaces from explicit monodromy factorizations.
#[derive(Parser, Debug)]
#[command(name = "sbundle", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build X_n(g, h), or the torus bundle for phi_k when --k is given.
    Generate {
        #[arg(long)]
        g: usize,
        #[arg(long, conflicts_with = "k")]
        h: Option<usize>,
        #[arg(long, conflicts_with = "k")]
        n: Option<u64>,
        #[arg(long)]
        k: Option<i64>,
        /// Use w = v4^2 at g = 2.
        #[arg(long)]
        kim_square: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check the relator at one level.
    Verify {
        #[arg(long)]
        level: Level,
        file: PathBuf,
    },
    /// H1 of the total space, optionally mod N and the signature.
    Invariants {
        file: PathBuf,
        #[arg(long = "mod")]
        modulus: Option<u64>,
        #[arg(long)]
        signature: bool,
    },
    /// Fiber sum or section sum of two factorizations.
    #[command(group(ArgGroup::new("kind").required(true).args(["fiber", "section"])))]
    Sum {
        #[arg(long)]
        fiber: bool,
        #[arg(long, requires = "lift")]
        section: bool,
        first: PathBuf,
        second: PathBuf,
        /// Gluing twist word, e.g. "T1 T3^-2".
        #[arg(long)]
        glue: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        lift: Option<i64>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Indecomposability certificate for X_n(g, h), or for phi_k with --k.
    Certify {
        #[arg(long)]
        g: usize,
        #[arg(long, conflicts_with = "k")]
        h: Option<usize>,
        #[arg(long, conflicts_with = "k")]
        n: Option<u64>,
        #[arg(long)]
        k: Option<i64>,
        /// Dissection file whose link condition is checked.
        #[arg(long)]
        dissection: Option<PathBuf>,
    },
    /// Pairwise comparison of H1 of total spaces.
    Separate {
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
}

struct Failure {
    code: u8,
    message: String,
    /// Report printed to stdout before the error.
    report: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e.kind() {
            ErrorKind::Parse => 2,
            ErrorKind::Precondition => 3,
            ErrorKind::Verification => 4,
        };
        Failure {
            code,
            message: e.to_string(),
            report: String::new(),
        }
    }
}

fn io_failure(path: &Path, e: std::io::Error) -> Failure {
    Failure {
        code: 1,
        message: format!("{}: {e}", path.display()),
        report: String::new(),
    }
}

fn read_bundle(path: &Path) -> Result<MonodromyFactorization, Failure> {
    let text = fs::read_to_string(path).map_err(|e| io_failure(path, e))?;
    text.parse::<MonodromyFactorization>()
        .map_err(|e| Failure::from(e).with_context(path))
}

impl Failure {
    fn with_context(mut self, path: &Path) -> Self {
        self.message = format!("{}: {}", path.display(), self.message);
        self
    }
}

fn emit(f: &MonodromyFactorization, output: Option<&Path>) -> Result<String, Failure> {
    match output {
        Some(p) => {
            fs::write(p, f.to_string()).map_err(|e| io_failure(p, e))?;
            Ok(String::new())
        }
        None => Ok(f.to_string()),
    }
}

fn missing(flag: &str) -> Failure {
    Failure {
        code: 2,
        message: format!("missing --{flag}"),
        report: String::new(),
    }
}

fn glue_word(genus: usize, glue: Option<&str>) -> Result<TwistWord, Failure> {
    Ok(match glue {
        Some(s) => TwistWord::parse_letters(genus, TwistOrder::Left, s)?,
        None => TwistWord::identity(genus, TwistOrder::Left),
    })
}

fn run(cli: Cli) -> Result<String, Failure> {
    match cli.command {
        Command::Generate {
            g,
            h,
            n,
            k,
            kim_square,
            output,
        } => {
            let f = match k {
                Some(k) => generate_torus_bundle(g, k)?,
                None => {
                    let opts = XnOptions {
                        kim_word: if kim_square {
                            KimWord::Square
                        } else {
                            KimWord::Palindrome
                        },
                        ..XnOptions::default()
                    };
                    generate_xn_with(
                        g,
                        h.ok_or_else(|| missing("h"))?,
                        n.ok_or_else(|| missing("n"))?,
                        &opts,
                    )?
                }
            };
            emit(&f, output.as_deref())
        }
        Command::Verify { level, file } => {
            let mut f = read_bundle(&file)?;
            if level == Level::Raag {
                f = restore_raag_lift(&f)?;
            }
            let r = verify_factorization(&f, level)?;
            if r.passed {
                Ok(format!("{}: PASS\n", r.level))
            } else {
                Err(Failure {
                    code: 4,
                    message: format!("relator is not trivial at the {} level", r.level),
                    report: format!("{}: FAIL\n{}\n", r.level, r.detail),
                })
            }
        }
        Command::Invariants {
            file,
            modulus,
            signature: want_signature,
        } => {
            let f = read_bundle(&file)?;
            let mut out = format!("H1 = {}\n", h1_total_space(&f)?);
            if let Some(m) = modulus {
                out.push_str(&format!("H1 mod {m} rank = {}\n", h1_mod_n(&f, m)?));
            }
            if want_signature {
                out.push_str(&format!("signature = {}\n", signature(&f)?));
            }
            Ok(out)
        }
        Command::Sum {
            fiber,
            first,
            second,
            glue,
            lift,
            output,
            ..
        } => {
            let f1 = read_bundle(&first)?;
            let f2 = read_bundle(&second)?;
            let phi = glue_word(f1.fiber_genus(), glue.as_deref())?;
            let f = if fiber {
                fiber_sum(&f1, &f2, &phi)?
            } else {
                section_sum(&f1, &f2, lift.ok_or_else(|| missing("lift"))?, &phi)?
            };
            emit(&f, output.as_deref())
        }
        Command::Certify {
            g,
            h,
            n,
            k,
            dissection,
        } => {
            let report = match k {
                Some(k) => torus_bundle_report(g, k)?,
                None => {
                    let d = match &dissection {
                        Some(p) => {
                            let text = fs::read_to_string(p).map_err(|e| io_failure(p, e))?;
                            Some(
                                text.parse::<Dissection>()
                                    .map_err(|e| Failure::from(e).with_context(p))?,
                            )
                        }
                        None => None,
                    };
                    indecomposability_report_with(
                        g,
                        h.ok_or_else(|| missing("h"))?,
                        n.ok_or_else(|| missing("n"))?,
                        d.as_ref(),
                    )?
                }
            };
            Ok(report.to_string())
        }
        Command::Separate { files } => {
            let fs = files
                .iter()
                .map(|p| read_bundle(p))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(homotopy_separation(&fs)?.to_string())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            print!("{}", f.report);
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
