//! The `nca` command line: every pipeline stage as a subcommand reading
//! standard input and writing standard output.
//!
//! ```text
//! nca segment --lexicon lex.tsv < raw.txt \
//!   | nca tag --lexicon lex.tsv \
//!   | nca extract \
//!   | nca build-table > table.tsv
//! nca resolve --table table.tsv < queries.tsv
//! ```

use std::fs::File;
use std::io::{self, BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::concord::{extract_fragments_at, render_fragment, WindowConfig};
use crate::corpus::{parse_tagged_line, render_tagged_line, ClassifierType, PosTag, TaggedToken};
use crate::error::Error;
use crate::hierarchy::{load_labels, Labels};
use crate::lexicon::{load_lexicon, Lexicon};
use crate::matcher::{events_for_line, ExtractConfig, GapSearchConfig, LinkerSet, MatcherConfig, PatternId};
use crate::resolver::resolve_batch;
use crate::segment::Segmenter;
use crate::table::{parse_event_line, NcaTable};
use crate::tagger::{tag_surfaces, TaggerConfig};

/// Process exit status.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitStatus {
    Success = 0,
    DataError = 1,
    UsageError = 2,
}

impl ExitStatus {
    pub fn code(self) -> i32 {
        self as i32
    }
}

#[derive(Debug, Parser)]
#[command(name = "nca", version, about = "Noun classifier association extraction and resolution")]
struct Cli {
    /// Word lexicon TSV (surface, pos, sem, freq, cltype).
    #[arg(long, global = true, env = "NCA_LEXICON")]
    lexicon: Option<PathBuf>,

    /// Abort with status 1 on the first malformed input line.
    #[arg(long, global = true)]
    strict: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Segment raw text into lexicon words.
    Segment {
        /// Suffix unknown pieces with `?`.
        #[arg(long)]
        mark_unknown: bool,
    },
    /// Tag segmented lines by lexicon lookup.
    Tag {
        /// Tag for words missing from the lexicon.
        #[arg(long, default_value = "UNK")]
        unknown_tag: String,
    },
    /// Print one fragment per classifier occurrence.
    Concord {
        #[command(flatten)]
        window: WindowArg,
    },
    /// Match classifier patterns and print one event per line.
    Extract(ExtractArgs),
    /// Aggregate events into the NCA table.
    BuildTable,
    /// Per-class summary of an NCA table read from standard input.
    Stats {
        #[arg(long)]
        labels: Option<PathBuf>,
    },
    /// Resolve classifiers for `noun<TAB>class<TAB>cltype` queries.
    Resolve {
        #[arg(long)]
        table: PathBuf,
        #[arg(long)]
        labels: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
struct WindowArg {
    /// Tokens kept before and after each classifier, as `BEFORE,AFTER`.
    #[arg(long, default_value = "10,2", value_parser = parse_window)]
    window: WindowConfig,
}

#[derive(Debug, Args)]
struct ExtractArgs {
    /// Linker words; the first one is the ordinal marker.
    #[arg(long, default_value = "tii,sung,nai", value_delimiter = ',')]
    linkers: Vec<String>,
    /// Tokens left of the classifier searched for a relative pronoun.
    #[arg(long, default_value_t = 5)]
    rel_span: usize,
    /// Count verbs as the head of enumerations.
    #[arg(long)]
    include_verbs: bool,
    /// Patterns to match.
    #[arg(
        long,
        default_value = "enum,ord,ref,indef,attr,mod,pron",
        value_delimiter = ',',
        value_parser = parse_pattern
    )]
    patterns: Vec<PatternId>,
    /// POS labels treated as nouns.
    #[arg(long, default_value = "NCMN", value_delimiter = ',')]
    noun_tags: Vec<String>,
    #[command(flatten)]
    window: WindowArg,
}

fn parse_window(s: &str) -> Result<WindowConfig, String> {
    let (b, a) = s.split_once(',').ok_or("expected BEFORE,AFTER")?;
    let before = b.trim().parse().map_err(|_| format!("invalid count `{b}`"))?;
    let after = a.trim().parse().map_err(|_| format!("invalid count `{a}`"))?;
    WindowConfig::new(before, after).map_err(|e| e.to_string())
}

fn parse_pattern(s: &str) -> Result<PatternId, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Failure that ends a run early.
enum Abort {
    Usage(String),
    Data(String),
}

impl From<Error> for Abort {
    fn from(e: Error) -> Self {
        Abort::Data(e.to_string())
    }
}

impl From<io::Error> for Abort {
    fn from(e: io::Error) -> Self {
        Abort::Data(e.to_string())
    }
}

struct Io<'a> {
    input: &'a mut dyn BufRead,
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
    strict: bool,
}

impl Io<'_> {
    /// Report a bad line: abort under `--strict`, warn otherwise.
    fn bad_line(&mut self, e: Error) -> Result<(), Abort> {
        if self.strict {
            self.out.flush()?;
            return Err(Abort::Data(e.to_string()));
        }
        writeln!(self.err, "warning: {e}")?;
        Ok(())
    }
}

/// Run with the process's standard streams.
pub fn run<I, T>(argv: I) -> ExitStatus
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let stdin = io::stdin();
    let mut input = stdin.lock();
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let mut err = io::stderr();
    let status = run_with_io(argv, &mut input, &mut out, &mut err);
    let _ = out.flush();
    status
}

/// Run against arbitrary streams; `argv[0]` is the program name.
pub fn run_with_io<I, T>(
    argv: I,
    input: &mut dyn BufRead,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> ExitStatus
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    ExitStatus::Success
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    ExitStatus::UsageError
                }
            };
        }
    };
    let mut io = Io {
        input,
        out,
        err,
        strict: cli.strict,
    };
    let result = dispatch(cli, &mut io).and_then(|()| Ok(io.out.flush()?));
    match result {
        Ok(()) => ExitStatus::Success,
        Err(Abort::Usage(msg)) => {
            let _ = writeln!(io.err, "error: {msg}");
            ExitStatus::UsageError
        }
        Err(Abort::Data(msg)) => {
            let _ = io.out.flush();
            let _ = writeln!(io.err, "error: {msg}");
            ExitStatus::DataError
        }
    }
}

fn open(path: &Path) -> Result<BufReader<File>, Abort> {
    File::open(path)
        .map(BufReader::new)
        .map_err(|e| Abort::Data(format!("{}: {e}", path.display())))
}

fn read_lexicon(path: &Path) -> Result<Lexicon, Abort> {
    load_lexicon(open(path)?).map_err(|e| Abort::Data(format!("{}: {e}", path.display())))
}

fn require_lexicon(path: Option<&Path>, cmd: &str) -> Result<Lexicon, Abort> {
    match path {
        Some(p) => read_lexicon(p),
        None => Err(Abort::Usage(format!(
            "`{cmd}` needs --lexicon <path> (or NCA_LEXICON)"
        ))),
    }
}

fn read_labels(path: Option<&Path>) -> Result<Option<Labels>, Abort> {
    path.map(|p| load_labels(open(p)?).map_err(|e| Abort::Data(format!("{}: {e}", p.display()))))
        .transpose()
}

fn dispatch(cli: Cli, io: &mut Io<'_>) -> Result<(), Abort> {
    let lexicon_path = cli.lexicon.as_deref();
    match cli.command {
        Command::Segment { mark_unknown } => {
            let lexicon = require_lexicon(lexicon_path, "segment")?;
            cmd_segment(&lexicon, mark_unknown, io)
        }
        Command::Tag { unknown_tag } => {
            let lexicon = require_lexicon(lexicon_path, "tag")?;
            let config = TaggerConfig::new(PosTag::from_label(&unknown_tag))
                .map_err(|e| Abort::Usage(e.to_string()))?;
            cmd_tag(&lexicon, &config, io)
        }
        Command::Concord { window } => cmd_concord(&window.window, io),
        Command::Extract(args) => {
            let lexicon = lexicon_path.map(read_lexicon).transpose()?;
            let config = ExtractConfig {
                window: args.window.window,
                matcher: MatcherConfig {
                    linkers: LinkerSet::new(args.linkers).map_err(|e| Abort::Usage(e.to_string()))?,
                    gaps: GapSearchConfig {
                        rel_span: args.rel_span,
                    },
                    noun_tags: args.noun_tags.iter().map(|t| PosTag::from_label(t)).collect(),
                    include_verbs: args.include_verbs,
                    patterns: args.patterns.into_iter().collect(),
                },
            };
            cmd_extract(lexicon.as_ref(), &config, io)
        }
        Command::BuildTable => cmd_build_table(io),
        Command::Stats { labels } => {
            let labels = read_labels(labels.as_deref())?;
            cmd_stats(labels.as_ref(), io)
        }
        Command::Resolve { table, labels } => {
            let table = NcaTable::load(open(&table)?)
                .map_err(|e| Abort::Data(format!("{}: {e}", table.display())))?;
            let labels = read_labels(labels.as_deref())?;
            cmd_resolve(&table, labels.as_ref(), io)
        }
    }
}

fn cmd_segment(lexicon: &Lexicon, mark_unknown: bool, io: &mut Io<'_>) -> Result<(), Abort> {
    let segmenter = Segmenter::new(lexicon);
    let mut line = String::new();
    while read_line(io.input, &mut line)? {
        writeln!(io.out, "{}", segmenter.segment(&line).render(mark_unknown))?;
    }
    Ok(())
}

fn cmd_tag(lexicon: &Lexicon, config: &TaggerConfig, io: &mut Io<'_>) -> Result<(), Abort> {
    let mut line = String::new();
    let mut n = 0;
    while read_line(io.input, &mut line)? {
        n += 1;
        let tokens = tag_surfaces(line.split_whitespace(), lexicon, config);
        if let Some((i, bad)) = tokens.iter().enumerate().find(|(_, t)| !t.is_valid()) {
            io.bad_line(Error::MalformedToken {
                line: n,
                column: i + 1,
                token: bad.surface.clone(),
                reason: "surface contains `/`".into(),
            })?;
            continue;
        }
        writeln!(io.out, "{}", render_tagged_line(&tokens))?;
    }
    Ok(())
}

/// Parse tagged lines, handing each good line to `f` with its line number.
fn for_each_tagged_line(
    io: &mut Io<'_>,
    mut f: impl FnMut(&mut Io<'_>, usize, Vec<TaggedToken>) -> Result<(), Abort>,
) -> Result<(), Abort> {
    let mut line = String::new();
    let mut n = 0;
    while read_line(io.input, &mut line)? {
        n += 1;
        match parse_tagged_line(&line) {
            Ok(tokens) => f(io, n, tokens)?,
            Err(e) => io.bad_line(e.at_line(n))?,
        }
    }
    Ok(())
}

fn cmd_concord(window: &WindowConfig, io: &mut Io<'_>) -> Result<(), Abort> {
    for_each_tagged_line(io, |io, n, tokens| {
        for f in extract_fragments_at(&tokens, n, window) {
            writeln!(io.out, "{}\t{}", f.origin, render_fragment(&f))?;
        }
        Ok(())
    })
}

/// Fill missing semantic classes and classifier types from the lexicon,
/// using the best entry with the same surface and POS.
fn enrich(tokens: &mut [TaggedToken], lexicon: &Lexicon) {
    for tok in tokens {
        if tok.sem.is_some() && (tok.cltype.is_some() || tok.pos != PosTag::Cl) {
            continue;
        }
        let mut same_pos = lexicon.lookup(&tok.surface).iter().filter(|e| e.pos == tok.pos);
        if let Some(entry) = same_pos.next() {
            if tok.sem.is_none() {
                tok.sem = entry.sem.clone();
            }
            if tok.cltype.is_none() {
                tok.cltype = entry.cltype;
            }
        }
    }
}

fn cmd_extract(lexicon: Option<&Lexicon>, config: &ExtractConfig, io: &mut Io<'_>) -> Result<(), Abort> {
    for_each_tagged_line(io, |io, n, mut tokens| {
        if let Some(lexicon) = lexicon {
            enrich(&mut tokens, lexicon);
        }
        for event in events_for_line(&tokens, n, config) {
            writeln!(io.out, "{}", event.to_tsv())?;
        }
        Ok(())
    })
}

fn cmd_build_table(io: &mut Io<'_>) -> Result<(), Abort> {
    let mut table = NcaTable::new();
    let mut line = String::new();
    let mut n = 0;
    while read_line(io.input, &mut line)? {
        n += 1;
        if line.trim().is_empty() {
            continue;
        }
        match parse_event_line(&line) {
            Ok(key) => table.record(key),
            Err(reason) => io.bad_line(Error::MalformedEventLine { line: n, reason })?,
        }
    }
    table.save(&mut *io.out)?;
    Ok(())
}

fn cmd_stats(labels: Option<&Labels>, io: &mut Io<'_>) -> Result<(), Abort> {
    let mut buf = Vec::new();
    io.input.read_to_end(&mut buf)?;
    let table = NcaTable::load(buf.as_slice())?;
    for class in table.classes() {
        let total: u64 = ClassifierType::ALL
            .iter()
            .filter_map(|&t| table.class_counts(&class, t))
            .flat_map(|m| m.values())
            .sum();
        let rep = |t| table.representative_for_class(&class, t).unwrap_or_else(|| "-".into());
        writeln!(
            io.out,
            "{}\t{}\t{}\t{}\t{}",
            class,
            labels.and_then(|l| l.get(&class)).unwrap_or("-"),
            total,
            rep(ClassifierType::Unit),
            rep(ClassifierType::Collective),
        )?;
    }
    Ok(())
}

fn cmd_resolve(table: &NcaTable, labels: Option<&Labels>, io: &mut Io<'_>) -> Result<(), Abort> {
    let mut buf = Vec::new();
    io.input.read_to_end(&mut buf)?;
    for result in resolve_batch(buf.as_slice(), table) {
        match result {
            Ok((q, r)) => writeln!(
                io.out,
                "{}\t{}\t{}",
                q.noun,
                r.classifier.as_deref().unwrap_or("-"),
                r.provenance_text(&q.noun_class, labels)
            )?,
            Err(e) => io.bad_line(e)?,
        }
    }
    Ok(())
}

/// Read one line without its terminator. Returns false at end of input.
fn read_line(input: &mut dyn BufRead, buf: &mut String) -> io::Result<bool> {
    buf.clear();
    if input.read_line(buf)? == 0 {
        return Ok(false);
    }
    if buf.ends_with('\n') {
        buf.pop();
        if buf.ends_with('\r') {
            buf.pop();
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str], stdin: &str) -> (ExitStatus, String, String) {
        let mut input = stdin.as_bytes();
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let mut argv = vec!["nca"];
        argv.extend_from_slice(args);
        let status = run_with_io(argv, &mut input, &mut out, &mut err);
        (
            status,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn unknown_subcommand_is_usage_error() {
        let (status, out, err) = run_str(&["frobnicate"], "");
        assert_eq!(status, ExitStatus::UsageError);
        assert!(out.is_empty());
        assert!(err.contains("Usage"), "{err}");
    }

    #[test]
    fn bad_window_is_usage_error() {
        assert_eq!(run_str(&["concord", "--window", "60,10"], "").0, ExitStatus::UsageError);
        assert_eq!(run_str(&["concord", "--window", "3"], "").0, ExitStatus::UsageError);
        assert_eq!(run_str(&["extract", "--patterns", "enum,zzz"], "").0, ExitStatus::UsageError);
    }

    #[test]
    fn segment_without_lexicon_is_usage_error() {
        if std::env::var_os("NCA_LEXICON").is_none() {
            assert_eq!(run_str(&["segment"], "abc").0, ExitStatus::UsageError);
        }
    }

    #[test]
    fn extract_warns_and_continues() {
        let corpus = "nok/NCMN/13111 2/NCNM tua/CL//1\nbroken\nmaa/NCMN 3/NCNM tua/CL//1\n";
        let (status, out, err) = run_str(&["extract"], corpus);
        assert_eq!(status, ExitStatus::Success);
        assert_eq!(out, "nok\t13111\ttua\t1\tenum\t1:2\nmaa\t0\ttua\t1\tenum\t3:2\n");
        assert!(err.contains("line 2"), "{err}");
    }

    #[test]
    fn strict_extract_aborts_after_flushing() {
        let corpus = "nok/NCMN/13111 2/NCNM tua/CL//1\nbroken\nmaa/NCMN 3/NCNM tua/CL//1\n";
        let (status, out, err) = run_str(&["--strict", "extract"], corpus);
        assert_eq!(status, ExitStatus::DataError);
        assert_eq!(out, "nok\t13111\ttua\t1\tenum\t1:2\n");
        assert!(err.contains("error"), "{err}");
    }

    #[test]
    fn concord_marks_anchor() {
        let (status, out, _) = run_str(&["concord", "--window", "1,0"], "a/NCMN b/NCMN c/CL//1\n");
        assert_eq!(status, ExitStatus::Success);
        assert_eq!(out, "1:2\tb/NCMN [c/CL//1]\n");
    }

    #[test]
    fn build_table_then_stats() {
        let events = "nok\t13111\ttua\t1\tenum\t1:2\nnok\t13111\ttua\t1\tref\t1:2\nmaa\t13111\tfuung\t2\tenum\t2:1\n";
        let (status, table, _) = run_str(&["build-table"], events);
        assert_eq!(status, ExitStatus::Success);
        assert_eq!(table, "maa\t13111\tfuung\t2\t1\nnok\t13111\ttua\t1\t2\n");
        let (status, stats, _) = run_str(&["stats"], &table);
        assert_eq!(status, ExitStatus::Success);
        assert_eq!(stats, "13111\t-\t3\ttua\tfuung\n");
    }

    #[test]
    fn stats_rejects_bad_table() {
        assert_eq!(run_str(&["stats"], "a\t1\tb\t1\t0\n").0, ExitStatus::DataError);
    }

    #[test]
    fn missing_table_file_is_data_error() {
        let (status, _, err) = run_str(&["resolve", "--table", "/nonexistent/t.tsv"], "");
        assert_eq!(status, ExitStatus::DataError);
        assert!(err.contains("/nonexistent/t.tsv"));
    }
}
