//! Command-line front end.  Parsing and dispatch only; every subcommand is a
//! thin wrapper over the library and all output formats are the library's
//! own serializations, so anything printed here re-parses losslessly.
//!
//! Exit status: 0 on success (including "NOT-LP" verdicts and empty
//! searches), 1 when `group-check` finds a failing claim, 2 for malformed
//! input of any kind.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::modring::Modulus;
use crate::orbits::{self, DEFAULT_MEMBER_CAP};
use crate::search::{self, SearchConfig, SearchMode};
use crate::seqops::{check_legendre_pair, LpVerdict, Sequence, SequencePair};
use crate::verifier::{self, ClaimId};
use crate::{Error, DEFAULT_SEED};

#[derive(Parser)]
#[command(
    name = "lp",
    version,
    about = "Legendre pairs: verification, symmetry orbits, and exhaustive search",
    long_about = "Legendre pairs: verification, symmetry orbits, and exhaustive search.\n\n\
        ±1 sequences are written as strings over '+'/'-' with index 0 leftmost;\n\
        pairs as \"u:v\". Canonical representatives are the lexicographic minimum\n\
        of an orbit, comparing the concatenation u‖v entrywise with '-' < '+'."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check whether a ±1 pair "u:v" is a Legendre pair
    Verify {
        /// The pair to check, e.g. "-+-:-+-"
        #[arg(long, allow_hyphen_values = true)]
        pair: String,
    },
    /// Print a sequence's periodic autocorrelation values, comma-separated
    Paf {
        /// Sequence: sign form ("-++") or comma-separated integers ("3,-1,-1")
        #[arg(long, allow_hyphen_values = true)]
        seq: String,
        /// Use the FFT power-spectrum path (exactness-checked)
        #[arg(long)]
        fast: bool,
    },
    /// Cyclically shift a sequence
    Shift {
        #[arg(long, allow_hyphen_values = true)]
        seq: String,
        /// Shift amount (taken mod the length)
        #[arg(long, allow_hyphen_values = true)]
        by: i64,
    },
    /// Decimate a sequence by a unit
    Decimate {
        #[arg(long, allow_hyphen_values = true)]
        seq: String,
        /// Decimation index; must be coprime to the length
        #[arg(long, allow_hyphen_values = true)]
        by: i64,
    },
    /// Summarize a pair's orbit under the full symmetry group
    Orbit {
        #[arg(long, allow_hyphen_values = true)]
        pair: String,
        /// Also list the orbit members, one per line
        #[arg(long)]
        members: bool,
        /// Largest orbit for which members are materialized
        #[arg(long, default_value_t = DEFAULT_MEMBER_CAP)]
        member_cap: usize,
    },
    /// Print the canonical representative of a pair's orbit
    Canon {
        #[arg(long, allow_hyphen_values = true)]
        pair: String,
    },
    /// Decide whether two pairs are equivalent (same orbit)
    Equiv {
        /// Given twice: the two pairs to compare
        #[arg(long = "pair", allow_hyphen_values = true)]
        pairs: Vec<String>,
    },
    /// Exhaustively enumerate the Legendre pairs of one length
    Search {
        #[arg(long)]
        ell: usize,
        /// Print only the number of pairs
        #[arg(long)]
        count_only: bool,
        /// Print only canonical representatives
        #[arg(long, conflicts_with = "count_only")]
        canonical_only: bool,
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
    /// Partition all Legendre pairs of one length into equivalence classes
    Classify {
        #[arg(long)]
        ell: usize,
        /// Write the report to a file instead of standard output
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
    /// Verify the group-structure claims at one length
    GroupCheck {
        #[arg(long)]
        ell: usize,
        /// Comma-separated claim ids (e.g. "D-ISO,RELATIONS"); default all
        #[arg(long)]
        claims: Option<String>,
        /// Seed for the randomized action-law probes
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

/// Run the CLI against explicit argument and output streams.
/// `args` includes the program name, mirroring `std::env::args`.
pub fn run<I, O, E>(args: I, out: &mut O, err: &mut E) -> i32
where
    I: IntoIterator<Item = String>,
    O: Write,
    E: Write,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(parse_err) => {
            // clap uses exit code 0 for --help/--version and 2 otherwise
            let code = parse_err.exit_code();
            let rendered = parse_err.render();
            if code == 0 {
                let _ = write!(out, "{rendered}");
            } else {
                let _ = write!(err, "{rendered}");
            }
            return code;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(error) => {
            let _ = writeln!(err, "error: {error}");
            2
        }
    }
}

fn dispatch<O: Write, E: Write>(command: Command, out: &mut O, err: &mut E) -> Result<i32, Error> {
    match command {
        Command::Verify { pair } => {
            let pair = SequencePair::parse(&pair)?;
            match check_legendre_pair(&pair)? {
                LpVerdict::LegendrePair => {
                    let _ = writeln!(out, "LP");
                }
                verdict => {
                    let _ = writeln!(out, "NOT-LP: {verdict}");
                }
            }
            Ok(0)
        }
        Command::Paf { seq, fast } => {
            let sequence = Sequence::parse_text(&seq)?;
            let values = if fast {
                let spectrum = sequence.paf_spectrum_fast();
                if spectrum.fell_back {
                    let _ = writeln!(
                        err,
                        "note: FFT deviation {:.3e} tripped the guard; used direct summation",
                        spectrum.max_deviation
                    );
                }
                spectrum.values
            } else {
                sequence.paf_spectrum()
            };
            let rendered: Vec<String> = values.iter().map(|v| v.to_string()).collect();
            let _ = writeln!(out, "{}", rendered.join(","));
            Ok(0)
        }
        Command::Shift { seq, by } => {
            let sequence = Sequence::parse_text(&seq)?;
            let shifted = sequence.cyclic_shift(sequence.modulus().residue(by));
            let _ = writeln!(out, "{}", render_like_input(&seq, &shifted)?);
            Ok(0)
        }
        Command::Decimate { seq, by } => {
            let sequence = Sequence::parse_text(&seq)?;
            let unit = sequence.modulus().unit(by)?;
            let decimated = sequence.decimate(unit);
            let _ = writeln!(out, "{}", render_like_input(&seq, &decimated)?);
            Ok(0)
        }
        Command::Orbit {
            pair,
            members,
            member_cap,
        } => {
            let pair = SequencePair::parse(&pair)?;
            let cap = if members { member_cap } else { 0 };
            let report = orbits::pair_orbit(&pair, cap)?;
            let _ = writeln!(out, "{}", report.to_tsv_line());
            if members {
                match &report.members {
                    Some(list) => {
                        for member in list {
                            let _ = writeln!(out, "{member}");
                        }
                    }
                    None => {
                        let _ = writeln!(
                            err,
                            "note: orbit size {} exceeds member cap {member_cap}; members omitted",
                            report.size
                        );
                    }
                }
            }
            Ok(0)
        }
        Command::Canon { pair } => {
            let pair = SequencePair::parse(&pair)?;
            let _ = writeln!(out, "{}", orbits::canonical_pair(&pair)?);
            Ok(0)
        }
        Command::Equiv { pairs } => {
            if pairs.len() != 2 {
                return Err(Error::Parse(format!(
                    "equiv needs --pair exactly twice, got {}",
                    pairs.len()
                )));
            }
            let first = SequencePair::parse(&pairs[0])?;
            let second = SequencePair::parse(&pairs[1])?;
            let verdict = if orbits::are_equivalent(&first, &second)? {
                "EQUIVALENT"
            } else {
                "INEQUIVALENT"
            };
            let _ = writeln!(out, "{verdict}");
            Ok(0)
        }
        Command::Search {
            ell,
            count_only,
            canonical_only,
            workers,
        } => {
            let cfg = search_config(ell, workers, err)?
                .with_mode(if count_only {
                    SearchMode::CountOnly
                } else if canonical_only {
                    SearchMode::Representatives
                } else {
                    SearchMode::Full
                });
            match cfg.mode {
                SearchMode::CountOnly => {
                    let _ = writeln!(out, "{}", search::enumerate_lps(&cfg)?.len());
                }
                SearchMode::Representatives => {
                    for rep in search::search_canonical_only(&cfg)? {
                        let _ = writeln!(out, "{rep}");
                    }
                }
                SearchMode::Full => {
                    for pair in search::enumerate_lps(&cfg)? {
                        let _ = writeln!(out, "{pair}");
                    }
                }
            }
            Ok(0)
        }
        Command::Classify { ell, out: path, workers } => {
            let cfg = search_config(ell, workers, err)?;
            let report = search::classify_lps(&cfg)?;
            match path {
                Some(path) => {
                    if let Err(io_err) = std::fs::write(&path, report.render()) {
                        let _ = writeln!(err, "error: cannot write {}: {io_err}", path.display());
                        return Ok(2);
                    }
                }
                None => {
                    let _ = write!(out, "{}", report.render());
                }
            }
            Ok(0)
        }
        Command::GroupCheck { ell, claims, seed } => {
            let m = Modulus::new(ell)?;
            let claim_list = claims
                .map(|text| {
                    text.split(',')
                        .map(|part| part.trim().parse::<ClaimId>())
                        .collect::<Result<Vec<ClaimId>, Error>>()
                })
                .transpose()?;
            let certificates = verifier::run_checks(m, claim_list.as_deref(), seed)?;
            let mut any_failed = false;
            for certificate in &certificates {
                any_failed |= !certificate.passed;
                let _ = writeln!(out, "{}", certificate.to_tsv_line());
            }
            Ok(if any_failed { 1 } else { 0 })
        }
    }
}

fn search_config<E: Write>(ell: usize, workers: usize, err: &mut E) -> Result<SearchConfig, Error> {
    let m = Modulus::new(ell)?;
    if !m.is_lp_length() && ell != 1 {
        let _ = writeln!(
            err,
            "warning: no Legendre pairs exist at even length {ell}; output will be empty"
        );
    }
    if ell > 13 {
        let _ = writeln!(
            err,
            "note: exhaustive search above length 13 can run for a very long time"
        );
    }
    Ok(SearchConfig::new(m).with_workers(workers))
}

fn render_like_input(input: &str, sequence: &Sequence) -> Result<String, Error> {
    if input.chars().all(|c| c == '+' || c == '-') {
        sequence.sign_string()
    } else {
        Ok(sequence.csv_string())
    }
}
