//! Command-line front end. Every subcommand prints exact rationals or
//! integers; output is deterministic for a given invocation, including under
//! `--threads`.
//!
//! Exit codes: `0` success, `1` verification failure (or unexpected internal
//! error), `2` usage error, `3` refusal because a brute-force search space
//! exceeds the built-in ceiling (pass `--force` to proceed anyway).

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::Zero;

use quadcover::covers::EnumerationOptions;
use quadcover::exactnum::{rat, Rational};
use quadcover::{combinatorics, covers, output, quadrature, triangle, Error, Result};

#[derive(Parser)]
#[command(
    name = "quadcover",
    version,
    about = "Exact dyadic exhaustion of y = x^s and the minimal-cover triangle of rationals",
    propagate_version = true
)]
struct Cli {
    /// Worker threads for brute-force cover enumeration.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Csv,
    Json,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Part {
    Numerators,
    Denominators,
}

#[derive(Subcommand)]
enum Command {
    /// Print rows 2..=max_s of the triangle of rationals R(s, j).
    Triangle {
        /// Largest row to compute.
        #[arg(long, value_parser = clap::value_parser!(u32).range(2..=64))]
        max_s: u32,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },

    /// Print one entry R(s, j), optionally with exact truncation diagnostics.
    Entry {
        #[arg(long, value_parser = clap::value_parser!(u32).range(2..=64))]
        s: u32,
        /// Column, 1 <= j <= s.
        #[arg(long)]
        j: u32,
        /// Also print the exact partial sum and tail after this many
        /// iterations (they recombine to the entry exactly).
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        partial: Option<u32>,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },

    /// Count minimal j-covers of an s-set, grouped by the number of uniquely
    /// covered elements.
    Covers {
        /// Ground-set size (capped so bitmask enumeration stays feasible).
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=20))]
        s: u32,
        /// Number of members in each family.
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        j: u32,
        /// Enumerate families exhaustively instead of using the closed form.
        #[arg(long)]
        brute_force: bool,
        /// Enumerate even when the search space exceeds the built-in ceiling.
        #[arg(long)]
        force: bool,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },

    /// Print the Gaussian binomial [n choose m]_q.
    Qbinom {
        #[arg(long)]
        n: u32,
        /// May lie outside 0..=n (negatives included); the value is then 0.
        #[arg(long, allow_hyphen_values = true)]
        m: i64,
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u64).range(2..))]
        q: u64,
    },

    /// Relate each entry's reduced denominator to the Gaussian binomials
    /// [s choose m]_2 of its row.
    Conjecture {
        #[arg(long, value_parser = clap::value_parser!(u32).range(2..=64))]
        max_s: u32,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },

    /// Integral lower bound for a row sum, with the comparison.
    LowerBound {
        #[arg(long, value_parser = clap::value_parser!(u32).range(2..=64))]
        s: u32,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },

    /// Write the numerators or denominators of rows 2..=max_s as OEIS
    /// b-file lines (empty output when max_s < 2).
    Export {
        #[arg(long, value_enum)]
        which: Part,
        #[arg(long, value_parser = clap::value_parser!(u32).range(0..=64))]
        max_s: u32,
        /// Index of the first line.
        #[arg(long, default_value_t = 1)]
        offset: u64,
    },

    /// Re-derive a family of claims from scratch and report pass/fail.
    Verify {
        #[command(subcommand)]
        what: VerifyCommand,
    },
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// Exhaustion of y = x^s: closed-form iteration areas vs direct
    /// summation, exact tails, and the limit 1/2 - 1/(s+1).
    Archimedes {
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u32).range(2..=16))]
        s: u32,
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u32).range(1..=64))]
        iterations: u32,
    },

    /// Enumerated minimal-cover counts vs the closed-form counts M(s, j, k).
    Covers {
        #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u32).range(1..=20))]
        max_s: u32,
        /// Largest family size per ground set (default: the ground-set size).
        #[arg(long)]
        max_j: Option<u32>,
        /// Enumerate even when a search space exceeds the built-in ceiling.
        #[arg(long)]
        force: bool,
    },

    /// Generating polynomial of the cover counts: direct assembly vs the
    /// inclusion-exclusion form, plus the triangle-polynomial factorization.
    Genfunc {
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u32).range(1..=24))]
        max_s: u32,
    },

    /// Triangle entries recomputed from scratch vs the stored reference rows.
    Table {
        #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u32).range(2..=8))]
        max_s: u32,
    },
}

fn usage_error(message: &str) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::SearchSpaceExceeded { .. } => ExitCode::from(3),
                _ => ExitCode::FAILURE,
            }
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Triangle { max_s, format } => {
            let rows = triangle::rows(max_s);
            let rendered = match format {
                Format::Table => output::triangle_table(&rows),
                Format::Csv => output::triangle_csv(&rows),
                Format::Json => output::triangle_json(&rows),
            };
            print!("{rendered}");
        }

        Command::Entry { s, j, partial, format } => {
            if !(1..=s).contains(&j) {
                return Ok(usage_error(&format!(
                    "j must satisfy 1 <= j <= s, got j={j} with s={s}"
                )));
            }
            let entry = triangle::entry(s, j);
            let rendered = match partial {
                None => match format {
                    Format::Table => output::entry_table(&entry),
                    Format::Csv => output::entry_csv(&entry),
                    Format::Json => output::entry_json(&entry),
                },
                Some(n) => {
                    let t = output::Truncation {
                        partial: triangle::entry_partial(s, j, n),
                        tail: triangle::entry_tail(s, j, n),
                        entry: &entry,
                        iterations: n,
                    };
                    match format {
                        Format::Table => output::truncation_table(&t),
                        Format::Csv => output::truncation_csv(&t),
                        Format::Json => output::truncation_json(&t),
                    }
                }
            };
            print!("{rendered}");
        }

        Command::Covers { s, j, brute_force, force, format } => {
            let (counts, source) = if brute_force {
                let opts = EnumerationOptions { threads: cli.threads, ignore_ceiling: force };
                (covers::count_by_unique_with(s, j, &opts)?, "enumeration")
            } else {
                (combinatorics::min_cover_counts(s, j), "formula")
            };
            let c = output::CoverCounts { s, j, source, counts: &counts };
            let rendered = match format {
                Format::Table => output::covers_table(&c),
                Format::Csv => output::covers_csv(&c),
                Format::Json => output::covers_json(&c),
            };
            print!("{rendered}");
        }

        Command::Qbinom { n, m, q } => {
            println!("{}", combinatorics::q_binomial(n, m, q));
        }

        Command::Conjecture { max_s, format } => {
            let report = triangle::conjecture_report(max_s);
            let rendered = match format {
                Format::Table => output::conjecture_table(&report),
                Format::Csv => output::conjecture_csv(&report),
                Format::Json => output::conjecture_json(&report),
            };
            print!("{rendered}");
        }

        Command::LowerBound { s, format } => {
            let result = triangle::lower_bound(s);
            let rendered = match format {
                Format::Table => output::lower_bound_table(&result),
                Format::Csv => output::lower_bound_csv(&result),
                Format::Json => output::lower_bound_json(&result),
            };
            print!("{rendered}");
        }

        Command::Export { which, max_s, offset } => {
            let part = match which {
                Part::Numerators => triangle::SequencePart::Numerators,
                Part::Denominators => triangle::SequencePart::Denominators,
            };
            print!("{}", triangle::oeis_export(part, max_s, offset));
        }

        Command::Verify { what } => {
            let ok = match what {
                VerifyCommand::Archimedes { s, iterations } => verify_archimedes(s, iterations),
                VerifyCommand::Covers { max_s, max_j, force } => {
                    let opts = EnumerationOptions { threads: cli.threads, ignore_ceiling: force };
                    verify_covers(max_s, max_j, &opts)?
                }
                VerifyCommand::Genfunc { max_s } => verify_genfunc(max_s),
                VerifyCommand::Table { max_s } => verify_table(max_s),
            };
            if !ok {
                return Ok(ExitCode::FAILURE);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn verdict(name: &str, ok: bool) -> bool {
    if ok {
        println!("verify {name}: OK");
    } else {
        println!("verify {name}: FAILED");
    }
    ok
}

fn verify_archimedes(s: u32, iterations: u32) -> bool {
    let mut ok = true;
    let limit = quadrature::exhaustion_limit(s);
    let mut cumulative = Rational::zero();
    for n in 1..=iterations {
        let area = quadrature::iteration_area(s, n);
        if n <= 12 && area != quadrature::iteration_area_direct(s, n) {
            println!("n={n}: closed form disagrees with direct summation");
            ok = false;
        }
        cumulative += &area;
        let tail = quadrature::exhaustion_tail(s, n);
        if &cumulative + &tail != limit {
            println!("n={n}: cumulative + tail misses the limit");
            ok = false;
        }
        if cumulative >= limit {
            println!("n={n}: cumulative area reached the limit early");
            ok = false;
        }
        println!("n={n} area={area} cumulative={cumulative} tail={tail}");
    }
    if limit != rat(1, 2) - rat(1, s as i64 + 1) {
        println!("limit differs from 1/2 - 1/(s+1)");
        ok = false;
    }
    println!("limit {limit} = 1/2 - 1/({s}+1)");
    println!("integral of x^{s} over [0,1] = {}", quadrature::unit_power_integral(s));
    verdict("archimedes", ok)
}

fn verify_covers(max_s: u32, max_j: Option<u32>, opts: &EnumerationOptions) -> Result<bool> {
    let mut ok = true;
    for s in 1..=max_s {
        // a minimal cover gives each member a private element, so j <= s
        let top = max_j.unwrap_or(s).min(s);
        for j in 1..=top {
            let enumerated = covers::count_by_unique_with(s, j, opts)?;
            let formula = combinatorics::min_cover_counts(s, j);
            let total: num_bigint::BigInt = enumerated.values().sum();
            if enumerated == formula {
                println!("s={s} j={j}: {total} minimal covers, enumeration matches formula");
            } else {
                println!(
                    "s={s} j={j}: MISMATCH enumeration={enumerated:?} formula={formula:?}"
                );
                ok = false;
            }
        }
    }
    Ok(verdict("covers", ok))
}

fn verify_genfunc(max_s: u32) -> bool {
    let mut ok = true;
    for s in 1..=max_s {
        let direct = combinatorics::gen_poly_direct(s);
        let hw = combinatorics::gen_poly_hw(s);
        if direct != hw {
            println!("s={s}: direct and inclusion-exclusion polynomials differ");
            ok = false;
            continue;
        }
        let mut factored = true;
        if s >= 2 {
            let t = quadrature::triangle_poly(s);
            for k in 2..=s {
                let weight = Rational::from_integer(
                    combinatorics::min_cover_count(s, 2, k)
                        * (num_bigint::BigInt::from(1u32) << (s - k + 1)),
                );
                if t.coeff((s - k) as usize) != weight {
                    println!("s={s} k={k}: triangle coefficient does not factor through M(s,2,k)");
                    ok = false;
                    factored = false;
                }
            }
        }
        if factored {
            println!(
                "s={s}: direct == inclusion-exclusion (degree {}), triangle coefficients factor through M({s},2,k)",
                s
            );
        }
    }
    verdict("genfunc", ok)
}

fn verify_table(max_s: u32) -> bool {
    let reference: Vec<_> =
        triangle::reference_entries().into_iter().filter(|e| e.s <= max_s).collect();
    let total = reference.len();
    let mut matched = 0;
    for want in &reference {
        let got = triangle::entry(want.s, want.j);
        if &got == want {
            matched += 1;
        } else {
            println!(
                "s={} j={}: computed {} but the reference row says {}",
                want.s,
                want.j,
                output::rational_str(&got.value),
                output::rational_str(&want.value)
            );
        }
    }
    println!("{matched}/{total} entries match");
    verdict("table", matched == total)
}
