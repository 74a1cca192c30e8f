use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use uptree::layout::{draw_ordered, draw_unordered, reduce_bends, Drawing};
use uptree::oracle::{
    equivalence_suite, min_nodes_for_rank, rank_bruteforce_with_cap, OracleConfig,
};
use uptree::rank::rank;
use uptree::render::{render_ascii, render_svg};
use uptree::tree::{
    gen_complete_binary, gen_hpd_family, gen_path, gen_quintary_family, gen_random_tree,
    parse_tree, Tree,
};
use uptree::verify::{check_drawing, Require};
use uptree::width::{
    heavy_path_depth, pathwidth_oracle_with_cap, rooted_pathwidth, DEFAULT_PW_ORACLE_CAP,
};

const CAP_ENV: &str = "UPTREE_ORACLE_CAP";
const DEFAULT_BRUTE_N: usize = 12;
const DEFAULT_NW_N: usize = 15;

#[derive(Parser)]
#[command(
    name = "uptree",
    version,
    about = "Minimum-width upward drawings of rooted trees"
)]
struct Cli {
    /// Tree input format; detected from the first character when omitted.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Write the result here instead of standard output.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Paren,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Emit {
    Json,
    Svg,
    Ascii,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DrawMode {
    Unordered,
    Ordered3,
    Ordered1,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Binary,
    Path,
    Quintary,
    Hpd,
    Random,
}

#[derive(Subcommand)]
enum Command {
    /// Report n, rooted pathwidth, rank, heavy-path depth and (small trees) pathwidth.
    Widths {
        /// Tree: file path, inline text, or `-` for stdin.
        input: String,
    },
    /// Draw a tree.
    Draw {
        input: String,
        #[arg(long, value_enum, default_value = "ordered3")]
        mode: DrawMode,
        #[arg(long, value_enum, default_value = "json")]
        emit: Emit,
        /// Remove bends that lie on a straight continuation.
        #[arg(long)]
        prune: bool,
    },
    /// Check a drawing against a tree; exit 1 if a required property fails.
    Verify {
        tree: String,
        /// Drawing JSON: file path, inline text, or `-` for stdin.
        drawing: String,
        /// Comma-separated: planar, upward, strictly_upward, order_preserving, straight_line.
        #[arg(long, default_value = "planar,upward")]
        require: String,
    },
    /// Generate a tree from a family.
    Gen {
        #[arg(value_enum)]
        family: Family,
        /// Height (binary), node count (path, random) or family index (quintary, hpd).
        param: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        max_degree: Option<usize>,
    },
    /// Brute-force computations for small trees.
    Oracle {
        #[command(subcommand)]
        which: OracleCommand,
    },
    /// Render a drawing given as JSON.
    Render {
        drawing: String,
        #[arg(long, value_enum, default_value = "svg")]
        emit: Emit,
    },
}

#[derive(Subcommand)]
enum OracleCommand {
    /// Rank by exhaustive witness enumeration.
    Rank { input: String },
    /// Smallest tree size with a given rank.
    Nw {
        #[arg(long = "w")]
        w: u32,
        #[arg(long, default_value_t = 12)]
        max_n: usize,
    },
    /// Cross-check the equivalent characterizations of rank.
    Equivalence {
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        #[arg(long = "max-w", default_value_t = 4)]
        max_w: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn read_source(src: &str) -> Result<String> {
    if src == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .context("reading stdin")?;
        return Ok(s);
    }
    let path = std::path::Path::new(src);
    if path.is_file() {
        return std::fs::read_to_string(path).with_context(|| format!("reading {src}"));
    }
    Ok(src.to_string())
}

fn load_tree(src: &str, format: Option<Format>) -> Result<Tree> {
    let text = read_source(src)?;
    let format = format.unwrap_or(if text.trim_start().starts_with('{') {
        Format::Json
    } else {
        Format::Paren
    });
    match format {
        Format::Paren => parse_tree(&text).context("parsing tree"),
        Format::Json => Tree::from_json_str(&text).context("parsing tree JSON"),
    }
}

fn load_drawing(src: &str) -> Result<Drawing> {
    let text = read_source(src)?;
    Drawing::from_json_str(&text).context("parsing drawing JSON")
}

fn oracle_cap(default: usize) -> Result<usize> {
    match std::env::var(CAP_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .with_context(|| format!("{CAP_ENV} must be a non-negative integer")),
        Err(_) => Ok(default),
    }
}

fn json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string(v).expect("serializable");
    s.push('\n');
    s
}

const MAX_ASCII_HEIGHT: i64 = 10_000;

fn emit_drawing(d: &Drawing, emit: Emit) -> Result<String> {
    if emit == Emit::Ascii && d.height() > MAX_ASCII_HEIGHT {
        bail!(
            "drawing is {} rows tall; use --emit svg or json",
            d.height()
        );
    }
    Ok(match emit {
        Emit::Json => {
            let mut s = d.to_json_string();
            s.push('\n');
            s
        }
        Emit::Svg => render_svg(d),
        Emit::Ascii => render_ascii(d),
    })
}

#[derive(Serialize)]
struct Widths {
    n: usize,
    rpw: u32,
    rank: u32,
    hpd: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pw: Option<u32>,
}

fn run(cli: Cli) -> Result<(String, u8)> {
    let format = cli.format;
    Ok(match cli.command {
        Command::Widths { input } => {
            let t = load_tree(&input, format)?;
            let cap = oracle_cap(DEFAULT_PW_ORACLE_CAP)?;
            let out = Widths {
                n: t.len(),
                rpw: rooted_pathwidth(&t).root(),
                rank: rank(&t).root(),
                hpd: heavy_path_depth(&t),
                pw: pathwidth_oracle_with_cap(&t, cap).ok(),
            };
            (json(&out), 0)
        }
        Command::Draw {
            input,
            mode,
            emit,
            prune,
        } => {
            let t = load_tree(&input, format)?;
            let mut d = match mode {
                DrawMode::Unordered => draw_unordered(&t, &rooted_pathwidth(&t)),
                DrawMode::Ordered3 => draw_ordered(&t, &rank(&t)),
                DrawMode::Ordered1 => reduce_bends(&draw_ordered(&t, &rank(&t)), &t)?,
            };
            if prune {
                d = d.pruned();
            }
            (emit_drawing(&d, emit)?, 0)
        }
        Command::Verify {
            tree,
            drawing,
            require,
        } => {
            let t = load_tree(&tree, format)?;
            let d = load_drawing(&drawing)?;
            let req: Require = require.parse().map_err(anyhow::Error::msg)?;
            let report = check_drawing(&t, &d, req)?;
            let code = if report.satisfies(req) { 0 } else { 1 };
            (json(&report), code)
        }
        Command::Gen {
            family,
            param,
            seed,
            max_degree,
        } => {
            let small = |p: u64| u32::try_from(p).context("parameter out of range");
            let t = match family {
                Family::Binary => gen_complete_binary(small(param)?)?,
                Family::Path => gen_path(param as usize)?,
                Family::Quintary => gen_quintary_family(small(param)?)?,
                Family::Hpd => gen_hpd_family(small(param)?)?,
                Family::Random => gen_random_tree(param as usize, seed, max_degree)?,
            };
            (format!("{}\n", t.to_paren()), 0)
        }
        Command::Oracle { which } => {
            match which {
                OracleCommand::Rank { input } => {
                    let t = load_tree(&input, format)?;
                    let cap = oracle_cap(DEFAULT_BRUTE_N)?;
                    let r = rank_bruteforce_with_cap(&t, cap)?;
                    #[derive(Serialize)]
                    struct Out {
                        n: usize,
                        rank: u32,
                    }
                    (
                        json(&Out {
                            n: t.len(),
                            rank: r,
                        }),
                        0,
                    )
                }
                OracleCommand::Nw { w, max_n } => {
                    let cap = oracle_cap(DEFAULT_NW_N)?;
                    if max_n > cap {
                        bail!("--max-n {max_n} exceeds the oracle cap {cap} (set {CAP_ENV} to raise it)");
                    }
                    (json(&min_nodes_for_rank(w, max_n)), 0)
                }
                OracleCommand::Equivalence { max_n, max_w, seed } => {
                    let cap = oracle_cap(DEFAULT_BRUTE_N)?;
                    if max_n > cap {
                        bail!("--max-n {max_n} exceeds the oracle cap {cap} (set {CAP_ENV} to raise it)");
                    }
                    let report = equivalence_suite(&OracleConfig { max_n, max_w, seed });
                    let code = if report.disagreements == 0 { 0 } else { 1 };
                    (json(&report), code)
                }
            }
        }
        Command::Render { drawing, emit } => {
            let d = load_drawing(&drawing)?;
            if d.positions.is_empty() {
                bail!("drawing has no nodes");
            }
            (emit_drawing(&d, emit)?, 0)
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let output = cli.output.clone();
    let (text, code) = match run(cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
    };
    let written = match output {
        Some(path) => std::fs::write(&path, text).map_err(|e| e.to_string()),
        None => io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| e.to_string()),
    };
    if let Err(e) = written {
        eprintln!("error: writing output: {e}");
        return ExitCode::from(2);
    }
    ExitCode::from(code)
}
