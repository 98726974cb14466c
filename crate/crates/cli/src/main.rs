//! `vntn`: normalize Vietnamese text line by line.
//!
//! Plain mode reads one utterance per line and writes one normalized line per
//! input line. `--jsonl` reads `{"id": .., "text": ..}` objects and writes
//! them back with a `normalized` field (and `trace` with `--trace`).

use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;
use rayon::prelude::*;
use serde_json::{json, Map, Value};
use vntn_core::dict::{ACRONYMS_FILE, LOANWORDS_FILE};
use vntn_core::{Normalizer, NormalizerConfig, TraceRecord};

const DICT_DIR_ENV: &str = "VNTN_DICT_DIR";
/// Lines handed to the thread pool at a time when `--threads` > 1.
const CHUNK_LINES: usize = 4096;

#[derive(Debug, Parser)]
#[command(name = "vntn", version, about = "Vietnamese text normalizer for TTS corpora")]
struct Args {
    /// Read from FILE instead of stdin.
    #[arg(long, value_name = "FILE")]
    input: Option<PathBuf>,

    /// Write to FILE instead of stdout.
    #[arg(long, value_name = "FILE")]
    output: Option<PathBuf>,

    /// JSON-lines mode: {"id","text"} in, {"id","text","normalized"} out.
    #[arg(long)]
    jsonl: bool,

    /// Include trace records in JSON-lines output.
    #[arg(long, requires = "jsonl")]
    trace: bool,

    /// Run only the cleanup and dictionary passes.
    #[arg(long)]
    no_preprocess: bool,

    /// Acronym dictionary CSV.
    #[arg(long, value_name = "CSV")]
    acronyms: Option<PathBuf>,

    /// Loanword dictionary CSV.
    #[arg(long, value_name = "CSV")]
    loanwords: Option<PathBuf>,

    /// Normalize the whole input N times and report utterances per minute
    /// instead of writing output.
    #[arg(long, value_name = "N", value_parser = clap::value_parser!(u32).range(1..))]
    bench: Option<u32>,

    /// Worker threads; output order is preserved.
    #[arg(long, value_name = "N", default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
    threads: u16,
}

#[derive(Debug)]
enum CliError {
    Io(String, io::Error),
    Config(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Io(..) => 1,
            CliError::Config(_) => 2,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Io(what, e) => write!(f, "{what}: {e}"),
            CliError::Config(msg) => f.write_str(msg),
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let args = Args::parse();
    match run(&args) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("vntn: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

/// Explicit flags win over `VNTN_DICT_DIR`, which wins over the shipped
/// dictionaries. A file missing from the directory falls back to the shipped
/// one.
fn build_config(args: &Args) -> Result<NormalizerConfig, CliError> {
    let mut config = NormalizerConfig::default();
    let dir = std::env::var_os(DICT_DIR_ENV).map(PathBuf::from);
    if let Some(dir) = &dir {
        if !dir.is_dir() {
            return Err(CliError::Config(format!(
                "{DICT_DIR_ENV}={} is not a directory",
                dir.display()
            )));
        }
    }
    let from_dir = |name: &str| {
        let path = dir.as_ref()?.join(name);
        if path.is_file() {
            Some(path)
        } else {
            log::warn!("{} not found, using the shipped {name}", path.display());
            None
        }
    };
    if let Some(path) = args.acronyms.clone().or_else(|| from_dir(ACRONYMS_FILE)) {
        config = config.with_acronyms(path);
    }
    if let Some(path) = args.loanwords.clone().or_else(|| from_dir(LOANWORDS_FILE)) {
        config = config.with_loanwords(path);
    }
    Ok(config)
}

fn run(args: &Args) -> Result<(), CliError> {
    let config = build_config(args)?;
    let normalizer = Normalizer::new(config).map_err(|e| CliError::Config(e.to_string()))?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(usize::from(args.threads))
        .build()
        .map_err(|e| CliError::Config(format!("thread pool: {e}")))?;

    let input: Box<dyn BufRead> = match &args.input {
        Some(path) => Box::new(BufReader::new(
            File::open(path).map_err(|e| CliError::Io(path.display().to_string(), e))?,
        )),
        None => Box::new(io::stdin().lock()),
    };
    let output: Box<dyn Write> = match &args.output {
        Some(path) => Box::new(
            File::create(path).map_err(|e| CliError::Io(path.display().to_string(), e))?,
        ),
        None => Box::new(io::stdout().lock()),
    };
    let mut output = BufWriter::new(output);

    let processor = Processor {
        normalizer: &normalizer,
        jsonl: args.jsonl,
        trace: args.trace,
        preprocess: !args.no_preprocess,
    };
    let io_err = |e| CliError::Io("output".to_string(), e);
    if let Some(runs) = args.bench {
        let lines = read_all(input, args.input.as_deref())?;
        let report = bench(&processor, &pool, &lines, runs);
        writeln!(output, "{report}").map_err(io_err)?;
    } else if args.threads > 1 {
        stream_chunked(&processor, &pool, input, &mut output, args.input.as_deref())?;
    } else {
        stream(&processor, input, &mut output, args.input.as_deref())?;
    }
    output.flush().map_err(io_err)
}

struct Processor<'a> {
    normalizer: &'a Normalizer,
    jsonl: bool,
    trace: bool,
    preprocess: bool,
}

struct Processed {
    line: String,
    error: Option<String>,
}

impl Processor<'_> {
    fn process(&self, line_no: u64, line: &str) -> Processed {
        if !self.jsonl {
            let line = if self.preprocess {
                self.normalizer.normalize_text(line)
            } else {
                self.normalizer.normalize(line, false).text
            };
            return Processed { line, error: None };
        }
        match self.process_json(line) {
            Ok(line) => Processed { line, error: None },
            Err(reason) => Processed {
                line: json!({ "id": Value::Null, "line": line_no, "error": reason }).to_string(),
                error: Some(format!("line {line_no}: {reason}")),
            },
        }
    }

    fn process_json(&self, line: &str) -> Result<String, String> {
        let value: Value = serde_json::from_str(line).map_err(|e| format!("invalid JSON: {e}"))?;
        let Value::Object(mut object) = value else {
            return Err("expected a JSON object".to_string());
        };
        let text = match object.get("text") {
            Some(Value::String(text)) => text.clone(),
            Some(_) => return Err("\"text\" must be a string".to_string()),
            None => return Err("missing \"text\"".to_string()),
        };
        let result = self.normalizer.normalize(&text, self.preprocess);

        let mut out = Map::new();
        out.insert("id".to_string(), object.remove("id").unwrap_or(Value::Null));
        out.insert("text".to_string(), Value::String(text));
        out.insert("normalized".to_string(), Value::String(result.text));
        if self.trace {
            let records = result.trace.iter().map(trace_json).collect();
            out.insert("trace".to_string(), Value::Array(records));
        }
        Ok(Value::Object(out).to_string())
    }
}

fn trace_json(record: &TraceRecord) -> Value {
    json!({
        "pass": record.pass.as_str(),
        "start": record.span.start,
        "end": record.span.end,
        "original": record.original,
        "replacement": record.replacement,
    })
}

/// Reads one line without its terminator. Invalid UTF-8 is replaced rather
/// than aborting the batch.
fn read_line(
    input: &mut dyn BufRead,
    buf: &mut Vec<u8>,
    source: Option<&Path>,
) -> Result<Option<String>, CliError> {
    buf.clear();
    let n = input.read_until(b'\n', buf).map_err(|e| {
        let what = source.map_or_else(|| "stdin".to_string(), |p| p.display().to_string());
        CliError::Io(what, e)
    })?;
    if n == 0 {
        return Ok(None);
    }
    if buf.last() == Some(&b'\n') {
        buf.pop();
        if buf.last() == Some(&b'\r') {
            buf.pop();
        }
    }
    Ok(Some(String::from_utf8_lossy(buf).into_owned()))
}

fn emit(output: &mut dyn Write, processed: Processed) -> Result<(), CliError> {
    if let Some(err) = processed.error {
        eprintln!("vntn: {err}");
    }
    writeln!(output, "{}", processed.line).map_err(|e| CliError::Io("output".to_string(), e))
}

fn stream(
    processor: &Processor<'_>,
    mut input: Box<dyn BufRead>,
    output: &mut dyn Write,
    source: Option<&Path>,
) -> Result<(), CliError> {
    let mut buf = Vec::new();
    let mut line_no = 0;
    while let Some(line) = read_line(&mut *input, &mut buf, source)? {
        line_no += 1;
        emit(output, processor.process(line_no, &line))?;
    }
    Ok(())
}

fn stream_chunked(
    processor: &Processor<'_>,
    pool: &rayon::ThreadPool,
    mut input: Box<dyn BufRead>,
    output: &mut dyn Write,
    source: Option<&Path>,
) -> Result<(), CliError> {
    let mut buf = Vec::new();
    let mut first_line_no = 1;
    let mut chunk = Vec::with_capacity(CHUNK_LINES);
    loop {
        chunk.clear();
        while chunk.len() < CHUNK_LINES {
            match read_line(&mut *input, &mut buf, source)? {
                Some(line) => chunk.push(line),
                None => break,
            }
        }
        if chunk.is_empty() {
            return Ok(());
        }
        let processed: Vec<Processed> = pool.install(|| {
            chunk
                .par_iter()
                .enumerate()
                .map(|(i, line)| processor.process(first_line_no + i as u64, line))
                .collect()
        });
        for p in processed {
            emit(output, p)?;
        }
        first_line_no += chunk.len() as u64;
    }
}

fn read_all(mut input: Box<dyn BufRead>, source: Option<&Path>) -> Result<Vec<String>, CliError> {
    let mut buf = Vec::new();
    let mut lines = Vec::new();
    while let Some(line) = read_line(&mut *input, &mut buf, source)? {
        lines.push(line);
    }
    Ok(lines)
}

fn bench(processor: &Processor<'_>, pool: &rayon::ThreadPool, lines: &[String], runs: u32) -> String {
    let start = Instant::now();
    let mut bytes = 0usize;
    for _ in 0..runs {
        bytes += if pool.current_num_threads() > 1 {
            pool.install(|| {
                lines
                    .par_iter()
                    .enumerate()
                    .map(|(i, l)| processor.process(i as u64 + 1, l).line.len())
                    .sum::<usize>()
            })
        } else {
            lines
                .iter()
                .enumerate()
                .map(|(i, l)| processor.process(i as u64 + 1, l).line.len())
                .sum::<usize>()
        };
    }
    let elapsed = start.elapsed().as_secs_f64();
    let utterances = lines.len() as u64 * u64::from(runs);
    let per_minute = if elapsed > 0.0 {
        utterances as f64 * 60.0 / elapsed
    } else {
        f64::INFINITY
    };
    std::hint::black_box(bytes);
    format!(
        "utterances={utterances} runs={runs} threads={} seconds={elapsed:.6} utterances_per_minute={per_minute:.0}",
        pool.current_num_threads()
    )
}
