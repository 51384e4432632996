use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde_json::json;

use hecke_core::congruence::{bfs_cap, image_group, standard_generators};
use hecke_core::farey::{
    cusp_data, invariants, parse_hfs, side_pairing_generators, HeckeFareySymbol,
};
use hecke_core::fpenum::{
    kurosh_signature, low_index_subgroups, todd_coxeter, FpWord, Presentation, DEFAULT_COSET_CAP,
};
use hecke_core::group::{decompose, GroupElement, Word};
use hecke_core::report::{self, VerificationReport};
use hecke_core::ring::{quotient_ring, RingElement};

#[derive(Parser)]
#[command(
    name = "hecke",
    version,
    about = "Exact computations in Hecke groups G_q"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run every check (`all`) or one named check.
    Verify {
        name: String,
        #[command(flatten)]
        format: Format,
    },
    /// Show a check's anchor and computed witnesses.
    Explain { name: String },
    /// The non-congruence pipeline for G_5^5 and G_5'.
    Prop52 {
        #[arg(long)]
        json: bool,
    },
    /// Hecke-Farey symbol files.
    Hfs {
        #[command(subcommand)]
        command: HfsCommand,
    },
    /// Coset enumeration in <x, y | x^2, y^q>.
    Fp {
        #[command(subcommand)]
        command: FpCommand,
    },
    /// Finite quotients of G_q.
    Quotient {
        #[command(subcommand)]
        command: QuotientCommand,
    },
    /// Write a matrix of G_q as a word in S, T, t = T^-1.
    Decompose {
        #[arg(long)]
        matrix: String,
        #[arg(long, default_value_t = 5)]
        q: u32,
    },
}

#[derive(Args)]
#[group(multiple = false)]
struct Format {
    #[arg(long)]
    json: bool,
    #[arg(long)]
    text: bool,
}

#[derive(Subcommand)]
enum HfsCommand {
    /// Parse and validate a symbol.
    Validate { file: PathBuf },
    /// Index, elliptic and cusp counts, genus and cusp widths.
    Invariants {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Side-pairing generators and their words.
    Generators {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum FpCommand {
    /// Index of the subgroup generated by the words in a file, one per line,
    /// over `x X y Y` or over `S T t`.
    Index {
        #[arg(long)]
        subgroup_words: PathBuf,
        #[arg(long, default_value_t = 5)]
        q: u32,
    },
    /// Conjugacy classes of subgroups up to a given index.
    LowIndex {
        #[arg(long)]
        max: usize,
        #[arg(long, default_value_t = 5)]
        q: u32,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum QuotientCommand {
    /// Order of the image of G_q in PSL_2(Z[λ]/(α)).
    Order {
        #[arg(long)]
        modulus: String,
        #[arg(long, default_value_t = 5)]
        q: u32,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Verify { name, format } => {
            let rep = if name == "all" {
                report::run_all()
            } else {
                report::run_one(&name)?
            };
            Ok(emit(&rep, format.json))
        }
        Command::Explain { name } => {
            print!("{}", report::explain(&name)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Prop52 { json } => Ok(emit(&report::prop52_report(), json)),
        Command::Hfs { command } => hfs(command),
        Command::Fp { command } => fp(command),
        Command::Quotient {
            command: QuotientCommand::Order { modulus, q },
        } => {
            let alpha = RingElement::parse(q, &modulus)?;
            let ring = quotient_ring(&alpha)?;
            let group = image_group(&standard_generators(q)?, &alpha, bfs_cap())?;
            println!("modulus: {alpha}");
            println!("ring cardinality: {}", ring.cardinality());
            println!("order: {}", group.order());
            Ok(ExitCode::SUCCESS)
        }
        Command::Decompose { matrix, q } => {
            let g = GroupElement::parse(q, &matrix)?;
            let w = decompose(&g)?;
            if w.eval(q)? != g {
                bail!("decomposition {w} does not evaluate back to {g}");
            }
            println!("{w}");
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn emit(rep: &VerificationReport, json: bool) -> ExitCode {
    if json {
        println!("{}", rep.to_json());
    } else {
        print!("{}", rep.to_text());
    }
    if rep.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn read_symbol(path: &Path) -> Result<HeckeFareySymbol> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_hfs(&text).with_context(|| format!("in {}", path.display()))
}

fn hfs(command: HfsCommand) -> Result<ExitCode> {
    match command {
        HfsCommand::Validate { file } => {
            let s = read_symbol(&file)?;
            println!("valid: q = {}, {} edges", s.q(), s.edge_count());
        }
        HfsCommand::Invariants { file, json } => {
            let s = read_symbol(&file)?;
            let inv = invariants(&s)?;
            let cusps = cusp_data(&s)?;
            if json {
                let out = json!({
                    "q": s.q(),
                    "invariants": inv,
                    "riemann_hurwitz": inv.riemann_hurwitz_holds(s.q()),
                    "cusps": cusps,
                });
                println!("{}", serde_json::to_string_pretty(&out)?);
            } else {
                println!(
                    "d = {}, v2 = {}, vq = {}, v_inf = {}, g = {}",
                    inv.d, inv.v2, inv.vq, inv.v_inf, inv.g
                );
                println!("cusp widths: {:?}", cusps.widths);
                println!("geometric width: {}", cusps.geometric_width);
            }
        }
        HfsCommand::Generators { file, json } => {
            let s = read_symbol(&file)?;
            let gens = side_pairing_generators(&s)?;
            if json {
                let out: Vec<_> = gens
                    .iter()
                    .map(|g| {
                        json!({
                            "kind": g.kind,
                            "edges": g.edges,
                            "matrix": g.generator.to_string(),
                            "word": g.word.to_string(),
                        })
                    })
                    .collect();
                println!("{}", serde_json::to_string_pretty(&out)?);
            } else {
                for g in gens {
                    println!(
                        "{:?} {:<6} {}  {}",
                        g.edges,
                        format!("{:?}", g.kind).to_lowercase(),
                        g.generator,
                        g.word
                    );
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn parse_subgroup_word(p: &Presentation, line: &str) -> Result<FpWord> {
    if let Ok(w) = line.parse::<FpWord>() {
        return Ok(w);
    }
    let w: Word = line
        .parse()
        .map_err(|e| anyhow::anyhow!("{line:?} is neither an x/y word nor an S/T word: {e}"))?;
    Ok(p.translate(&w))
}

fn fp(command: FpCommand) -> Result<ExitCode> {
    match command {
        FpCommand::Index { subgroup_words, q } => {
            let p = Presentation::new(q);
            let text = std::fs::read_to_string(&subgroup_words)
                .with_context(|| format!("reading {}", subgroup_words.display()))?;
            let words = text
                .lines()
                .map(str::trim)
                .filter(|l| !l.is_empty() && !l.starts_with('#'))
                .map(|l| parse_subgroup_word(&p, l))
                .collect::<Result<Vec<_>>>()?;
            let table = todd_coxeter(&p, &words, DEFAULT_COSET_CAP)?;
            println!("{}", table.index());
        }
        FpCommand::LowIndex { max, q, json } => {
            let subs = low_index_subgroups(&Presentation::new(q), max)?;
            let rows: Vec<_> = subs
                .iter()
                .map(|s| {
                    let (elliptic, free_rank) = kurosh_signature(&s.table, q);
                    json!({
                        "index": s.index(),
                        "normal": s.normal,
                        "elliptic_orders": elliptic,
                        "free_rank": free_rank,
                    })
                })
                .collect();
            if json {
                println!("{}", serde_json::to_string_pretty(&rows)?);
            } else {
                for n in 1..=max {
                    let here: Vec<_> = subs.iter().filter(|s| s.index() == n).collect();
                    let normal = here.iter().filter(|s| s.normal).count();
                    println!("index {n}: {} classes, {normal} normal", here.len());
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}
