//! Command-line front end.
//!
//! Exit codes: 0 success, 1 usage error, 2 validation error, 3 resource
//! budget exceeded. Diagnostics go to standard error only.

use std::fs::File;
use std::io::{self, BufRead, Read, Write};
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::{Deserialize, Serialize};

use crate::arch::{arch_factorize, ArchFactorization};
use crate::error::Error;
use crate::measures::{h, measure, rho};
use crate::oracle::{BoundedDistance, Oracle};
use crate::periodic::{arch_period, pow_measures};
use crate::side::{l_table, l_vector, r_table, r_vector};
use crate::word::{make_word, Alphabet, Letter, Word, DEFAULT_BUDGET};

#[derive(Parser, Debug)]
#[command(
    name = "piecewise",
    version,
    about = "Piecewise complexity, minimality index and arch factorizations of words"
)]
struct Args {
    /// Alphabet letters in order; defaults to the word's letters by first occurrence
    #[arg(long, global = true)]
    alphabet: Option<String>,

    /// One JSON object per input word
    #[arg(long, global = true)]
    json: bool,

    /// Read words from a file, one per line; `-` reads standard input
    #[arg(long, global = true)]
    input: Option<PathBuf>,

    /// Compute with the brute-force oracle instead of the fast algorithms
    #[arg(long, global = true)]
    oracle: bool,

    /// Report elapsed time per word
    #[arg(long, global = true)]
    timing: bool,

    /// Maximum number of subwords the oracle may store per downset
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// h, ρ and their witnesses
    Measure { word: Option<String> },
    /// r-table and ℓ-table
    Rtable { word: Option<String> },
    /// r-vector and ℓ-vector
    Rvector { word: Option<String> },
    /// Arch factorization
    Arch {
        word: Option<String>,
        /// Emit an SVG drawing of the arches instead of text
        #[arg(long)]
        svg: bool,
    },
    /// Arch-period data of the word's infinite power
    Period { word: Option<String> },
    /// h and ρ of WORD^N
    Pow {
        word: String,
        #[arg(value_parser = clap::value_parser!(u64).range(0..=i64::MAX as u64))]
        n: u64,
        /// Also compute directly on the materialised power (n ≤ 64)
        #[arg(long)]
        verify: bool,
    },
    /// Subword distance δ(U, V) by brute force
    Delta {
        u: String,
        v: String,
        #[arg(long)]
        kmax: usize,
    },
    /// Timing harness on random words
    Bench {
        #[arg(long, default_value_t = 1_000_000)]
        max_len: usize,
        #[arg(long, default_value_t = 26)]
        alphabet_size: usize,
        #[arg(long, default_value_t = 3)]
        repeats: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

/// Witness of `h` as rendered in JSON.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CutLetter {
    pub cut: usize,
    pub letter: char,
}

/// Distance as rendered in JSON: a number, `"inf"`, or `">K"`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum DistanceField {
    Finite(usize),
    Other(String),
}

/// One line of JSON output. Fields are present only when the command
/// computes them, always in this order.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub word: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub other: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alphabet: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub h: Option<u128>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rho: Option<u128>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub h_witness: Option<CutLetter>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rho_witness: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cuts: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rest: Option<String>,
    #[serde(rename = "K", skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(rename = "T", skip_serializing_if = "Option::is_none")]
    pub t: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub span: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub delta: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub slope_num: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub slope_den: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub h_direct: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rho_direct: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rtable: Option<Vec<Vec<u32>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ltable: Option<Vec<Vec<u32>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rvector: Option<Vec<u32>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lvector: Option<Vec<u32>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub distance: Option<DistanceField>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_us: Option<u64>,
}

#[derive(Debug, Serialize)]
struct BenchRecord {
    op: &'static str,
    len: usize,
    alphabet_size: usize,
    elapsed_us: u64,
}

enum Failure {
    Usage(String),
    Lib(Error),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Lib(e) if e.is_resource() => 3,
            Failure::Lib(_) => 2,
            Failure::Io(_) => 2,
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Usage(m) => m.clone(),
            Failure::Lib(e) => e.to_string(),
            Failure::Io(e) => e.to_string(),
        }
    }
}

/// Entry point for the binary.
pub fn main() -> i32 {
    let stdin = io::stdin();
    let mut stdin = stdin.lock();
    let stdout = io::stdout();
    let mut stdout = stdout.lock();
    let stderr = io::stderr();
    let mut stderr = stderr.lock();
    run(std::env::args_os(), &mut stdin, &mut stdout, &mut stderr)
}

/// Runs the CLI on explicit streams and returns the exit code.
pub fn run<I, T>(argv: I, stdin: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args = match Args::try_parse_from(argv) {
        Ok(a) => a,
        Err(e) => {
            let code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    return 0;
                }
                _ => 1,
            };
            let _ = write!(err, "{e}");
            return code;
        }
    };
    match dispatch(&args, stdin, out, err) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message());
            f.code()
        }
    }
}

fn dispatch(
    args: &Args,
    stdin: &mut dyn BufRead,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32, Failure> {
    let alphabet = match &args.alphabet {
        Some(text) => {
            check_ascii(text)?;
            Some(Alphabet::new(text.chars())?)
        }
        None => None,
    };
    let single = match &args.command {
        Command::Measure { word }
        | Command::Rtable { word }
        | Command::Rvector { word }
        | Command::Period { word }
        | Command::Arch { word, .. } => word.clone(),
        Command::Pow {
            word, n, verify, ..
        } => {
            if args.input.is_some() {
                return Err(Failure::Usage("pow does not take --input".into()));
            }
            let u = parse_word(word, alphabet.as_ref())?;
            let rec = pow_record(&u, *n, *verify, args.timing, err)?;
            emit(args, out, &rec, || pow_text(&u, &rec))?;
            return Ok(0);
        }
        Command::Delta { u, v, kmax } => {
            if args.input.is_some() {
                return Err(Failure::Usage("delta does not take --input".into()));
            }
            let alphabet = match alphabet {
                Some(a) => a,
                None => {
                    check_ascii(u)?;
                    check_ascii(v)?;
                    Alphabet::of_text(&format!("{u}{v}"))?
                }
            };
            let (u, v) = (
                parse_word(u, Some(&alphabet))?,
                parse_word(v, Some(&alphabet))?,
            );
            let start = Instant::now();
            let d = Oracle::with_budget(args.budget).delta(&u, &v, *kmax)?;
            let rec = OutputRecord {
                word: Some(u.to_string()),
                other: Some(v.to_string()),
                alphabet: Some(alphabet.to_string()),
                distance: Some(match d {
                    BoundedDistance::Finite(k) => DistanceField::Finite(k),
                    other => DistanceField::Other(other.to_string()),
                }),
                elapsed_us: args.timing.then(|| start.elapsed().as_micros() as u64),
                ..Default::default()
            };
            emit(args, out, &rec, || {
                format!("delta={d}{}", timing_suffix(&rec))
            })?;
            return Ok(0);
        }
        Command::Bench {
            max_len,
            alphabet_size,
            repeats,
            seed,
        } => {
            bench(args.json, *max_len, *alphabet_size, *repeats, *seed, out)?;
            return Ok(0);
        }
    };

    let words: Vec<(Option<usize>, String)> = match (&single, &args.input) {
        (Some(_), Some(_)) => {
            return Err(Failure::Usage(
                "give either a word or --input, not both".into(),
            ))
        }
        (None, None) => return Err(Failure::Usage("missing word (or --input)".into())),
        (Some(w), None) => vec![(None, w.clone())],
        (None, Some(path)) => read_lines(path, stdin)?,
    };

    let mut code = 0;
    for (line, text) in words {
        match one_word(args, &text, alphabet.as_ref(), out) {
            Ok(()) => {}
            Err(Failure::Io(e)) => return Err(Failure::Io(e)),
            Err(f) => {
                match line {
                    Some(n) => writeln!(err, "line {n}: error: {}", f.message())?,
                    None => writeln!(err, "error: {}", f.message())?,
                }
                code = code.max(f.code());
            }
        }
    }
    Ok(code)
}

fn read_lines(
    path: &PathBuf,
    stdin: &mut dyn BufRead,
) -> Result<Vec<(Option<usize>, String)>, Failure> {
    let mut text = String::new();
    if path.as_os_str() == "-" {
        stdin.read_to_string(&mut text)?;
    } else {
        File::open(path)?.read_to_string(&mut text)?;
    }
    Ok(text
        .lines()
        .enumerate()
        .map(|(i, l)| (Some(i + 1), l.trim_end_matches('\r').to_string()))
        .filter(|(_, l)| !l.is_empty())
        .collect())
}

fn check_ascii(text: &str) -> Result<(), Failure> {
    match text
        .chars()
        .enumerate()
        .find(|(_, c)| !c.is_ascii_graphic())
    {
        Some((i, c)) => Err(Failure::Lib(Error::UnknownSymbol {
            symbol: c,
            position: i + 1,
        })),
        None => Ok(()),
    }
}

fn parse_word(text: &str, alphabet: Option<&Alphabet>) -> Result<Word, Failure> {
    check_ascii(text)?;
    Ok(make_word(text, alphabet)?)
}

fn one_word(
    args: &Args,
    text: &str,
    alphabet: Option<&Alphabet>,
    out: &mut dyn Write,
) -> Result<(), Failure> {
    let u = parse_word(text, alphabet)?;
    let start = Instant::now();
    let mut rec = OutputRecord {
        word: Some(u.to_string()),
        alphabet: Some(u.alphabet().to_string()),
        ..Default::default()
    };
    let text_form: String = match &args.command {
        Command::Measure { .. } => {
            if args.oracle {
                let oracle = Oracle::with_budget(args.budget);
                rec.h = Some(oracle.h(&u)? as u128);
                rec.rho = Some(oracle.rho(&u)? as u128);
            } else {
                let m = measure(&u);
                rec.h = Some(m.h as u128);
                rec.rho = Some(m.rho as u128);
                rec.h_witness = m.h_witness.map(|w| CutLetter {
                    cut: w.cut,
                    letter: u.alphabet().symbol(w.letter),
                });
                rec.rho_witness = m.rho_witness;
            }
            rec.elapsed_us = elapsed(args, start);
            measure_text(&rec)
        }
        Command::Rtable { .. } => {
            let (rt, lt) = (r_table(&u), l_table(&u));
            let letters = 0..u.alphabet().size() as Letter;
            rec.rtable = Some(letters.clone().map(|a| rt.column(a)).collect());
            rec.ltable = Some(letters.map(|a| lt.column(a)).collect());
            rec.elapsed_us = elapsed(args, start);
            let mut s = u.to_string();
            for (prefix, table) in [("r", &rec.rtable), ("l", &rec.ltable)] {
                for (a, col) in table.as_ref().unwrap().iter().enumerate() {
                    let sym = u.alphabet().symbol(a as Letter);
                    s.push_str(&format!("\n{prefix}({sym}) {}", join(col)));
                }
            }
            s.push_str(&timing_suffix(&rec));
            s
        }
        Command::Rvector { .. } => {
            rec.rvector = Some(r_vector(&u).entries().to_vec());
            rec.lvector = Some(l_vector(&u).entries().to_vec());
            rec.elapsed_us = elapsed(args, start);
            format!(
                "{}\nr: {}\nl: {}{}",
                u,
                join(rec.rvector.as_ref().unwrap()),
                join(rec.lvector.as_ref().unwrap()),
                timing_suffix(&rec)
            )
        }
        Command::Arch { svg, .. } => {
            let f = arch_factorize(&u);
            rec.cuts = Some(f.cuts().to_vec());
            rec.rest = Some(f.rest().to_string());
            rec.elapsed_us = elapsed(args, start);
            if *svg && !args.json {
                let s = arch_svg(&f);
                out.write_all(s.as_bytes())?;
                return Ok(());
            }
            format!("{}{}", f.render(), timing_suffix(&rec))
        }
        Command::Period { .. } => {
            let pd = arch_period(&u)?;
            rec.k = Some(pd.transient_arches);
            rec.t = Some(pd.transient);
            rec.p = Some(pd.period);
            rec.span = Some(pd.span);
            rec.delta = Some(pd.copies);
            rec.slope_num = Some(pd.slope_num);
            rec.slope_den = Some(pd.slope_den);
            rec.elapsed_us = elapsed(args, start);
            format!(
                "{} K={} T={} p={} span={} delta={} slope={}/{}{}",
                u,
                pd.transient_arches,
                pd.transient,
                pd.period,
                pd.span,
                pd.copies,
                pd.slope_num,
                pd.slope_den,
                timing_suffix(&rec)
            )
        }
        Command::Pow { .. } | Command::Delta { .. } | Command::Bench { .. } => {
            unreachable!("handled in dispatch")
        }
    };
    emit(args, out, &rec, || text_form)
}

fn elapsed(args: &Args, start: Instant) -> Option<u64> {
    args.timing.then(|| start.elapsed().as_micros() as u64)
}

fn timing_suffix(rec: &OutputRecord) -> String {
    rec.elapsed_us
        .map(|us| format!(" elapsed_us={us}"))
        .unwrap_or_default()
}

fn join(xs: &[u32]) -> String {
    xs.iter().map(u32::to_string).collect::<Vec<_>>().join(" ")
}

fn measure_text(rec: &OutputRecord) -> String {
    let mut s = format!(
        "{} h={} rho={}",
        rec.word.as_deref().unwrap_or(""),
        rec.h.unwrap(),
        rec.rho.unwrap()
    );
    if let Some(w) = &rec.h_witness {
        s.push_str(&format!(" h_witness={}:{}", w.cut, w.letter));
    }
    if let Some(i) = rec.rho_witness {
        s.push_str(&format!(" rho_witness={i}"));
    }
    s.push_str(&timing_suffix(rec));
    s
}

fn pow_record(
    u: &Word,
    n: u64,
    verify: bool,
    timing: bool,
    err: &mut dyn Write,
) -> Result<OutputRecord, Failure> {
    let start = Instant::now();
    let rep = pow_measures(u, n)?;
    let elapsed_us = timing.then(|| start.elapsed().as_micros() as u64);
    let mut rec = OutputRecord {
        word: Some(u.to_string()),
        alphabet: Some(u.alphabet().to_string()),
        h: Some(rep.h),
        rho: Some(rep.rho),
        n: Some(n),
        elapsed_us,
        ..Default::default()
    };
    if verify {
        if n <= 64 {
            let direct = u.pow(n as usize);
            rec.h_direct = Some(h(&direct));
            rec.rho_direct = Some(rho(&direct));
        } else {
            writeln!(err, "note: --verify skipped, n = {n} exceeds 64")?;
        }
    }
    Ok(rec)
}

fn pow_text(u: &Word, rec: &OutputRecord) -> String {
    let mut s = format!(
        "{}^{} h={} rho={}",
        u,
        rec.n.unwrap(),
        rec.h.unwrap(),
        rec.rho.unwrap()
    );
    if let (Some(h), Some(r)) = (rec.h_direct, rec.rho_direct) {
        s.push_str(&format!(" h_direct={h} rho_direct={r}"));
    }
    s.push_str(&timing_suffix(rec));
    s
}

fn emit(
    args: &Args,
    out: &mut dyn Write,
    rec: &OutputRecord,
    text: impl FnOnce() -> String,
) -> Result<(), Failure> {
    if args.json {
        let line = serde_json::to_string(rec).map_err(io::Error::other)?;
        writeln!(out, "{line}")?;
    } else {
        writeln!(out, "{}", text())?;
    }
    Ok(())
}

/// Letters in cells with an arc over each arch.
fn arch_svg(f: &ArchFactorization) -> String {
    const CELL: usize = 20;
    let word = f.word().to_string();
    let n = word.chars().count();
    let width = CELL * n.max(1) + 2 * CELL;
    let height = 5 * CELL;
    let base = 4 * CELL;
    let mut s = format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" \
         font-family=\"monospace\" font-size=\"14\">\n"
    );
    for (i, c) in word.chars().enumerate() {
        let x = CELL + i * CELL;
        s.push_str(&format!(
            "  <rect x=\"{x}\" y=\"{}\" width=\"{CELL}\" height=\"{CELL}\" fill=\"none\" stroke=\"black\"/>\n",
            base - CELL
        ));
        let glyph = match c {
            '<' => "&lt;".to_string(),
            '>' => "&gt;".to_string(),
            '&' => "&amp;".to_string(),
            c => c.to_string(),
        };
        s.push_str(&format!(
            "  <text x=\"{}\" y=\"{}\" text-anchor=\"middle\">{glyph}</text>\n",
            x + CELL / 2,
            base - 5
        ));
    }
    for c in f.cuts().windows(2) {
        let (x0, x1) = (CELL + c[0] * CELL, CELL + c[1] * CELL);
        let y = base - CELL;
        s.push_str(&format!(
            "  <path d=\"M {x0} {y} Q {} {} {x1} {y}\" fill=\"none\" stroke=\"steelblue\"/>\n",
            (x0 + x1) / 2,
            CELL / 2
        ));
    }
    s.push_str("</svg>\n");
    s
}

const BENCH_SYMBOLS: &str = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789";

fn random_word(rng: &mut StdRng, len: usize, alphabet: &Alphabet) -> Word {
    let size = alphabet.size();
    let letters: Vec<Letter> = (0..len)
        .map(|_| rng.random_range(0..size) as Letter)
        .collect();
    Word::from_letters(alphabet, letters).expect("letters drawn from the alphabet")
}

fn best_of<T>(repeats: usize, mut f: impl FnMut() -> T) -> u64 {
    (0..repeats.max(1))
        .map(|_| {
            let start = Instant::now();
            std::hint::black_box(f());
            start.elapsed().as_micros() as u64
        })
        .min()
        .unwrap()
}

fn bench(
    json: bool,
    max_len: usize,
    alphabet_size: usize,
    repeats: usize,
    seed: u64,
    out: &mut dyn Write,
) -> Result<(), Failure> {
    if alphabet_size == 0 || alphabet_size > BENCH_SYMBOLS.len() {
        return Err(Failure::Usage(format!(
            "--alphabet-size must be in 1..={}",
            BENCH_SYMBOLS.len()
        )));
    }
    let alphabet = Alphabet::new(BENCH_SYMBOLS.chars().take(alphabet_size))?;
    let mut rng = StdRng::seed_from_u64(seed);
    let mut records = Vec::new();
    for len in [max_len / 4, max_len / 2, max_len] {
        let u = random_word(&mut rng, len, &alphabet);
        records.push(BenchRecord {
            op: "h",
            len,
            alphabet_size,
            elapsed_us: best_of(repeats, || h(&u)),
        });
        records.push(BenchRecord {
            op: "rho",
            len,
            alphabet_size,
            elapsed_us: best_of(repeats, || rho(&u)),
        });
    }
    let pow_alphabet = Alphabet::new(BENCH_SYMBOLS.chars().take(alphabet_size.min(10)))?;
    let u = loop {
        let u = random_word(&mut rng, 10_000, &pow_alphabet);
        if u.missing_letters().is_empty() {
            break u;
        }
    };
    records.push(BenchRecord {
        op: "pow(n=1e18)",
        len: u.len(),
        alphabet_size: pow_alphabet.size(),
        elapsed_us: best_of(repeats, || pow_measures(&u, 1_000_000_000_000_000_000)),
    });
    for r in &records {
        if json {
            writeln!(
                out,
                "{}",
                serde_json::to_string(r).map_err(io::Error::other)?
            )?;
        } else {
            writeln!(
                out,
                "{:<12} len={:<9} |A|={:<3} {:>10} us",
                r.op, r.len, r.alphabet_size, r.elapsed_us
            )?;
        }
    }
    Ok(())
}
