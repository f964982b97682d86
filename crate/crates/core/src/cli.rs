//! The `gsf` command line.

use std::ffi::OsString;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::analysis::{wilf_check, wilf_scan};
use crate::enumeration::{audit_mode, count_by_genus, AuditLimits, EnumOptions};
use crate::error::{Error, Result};
use crate::metrics::metrics_report;
use crate::semigroup::{parse_semigroup, GoodSemigroup};
use crate::tracks::{beyond_tracks, favored_tracks, remove_track, special_parents, tracks, Track};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(name = "gsf", version, about = "Good semigroups of N^d: metrics, tracks, the genus tree and Wilf checks")]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
    /// Output format.
    #[arg(long, value_enum, default_value_t, global = true)]
    format: Format,
    /// Omit the leading banner line of text output.
    #[arg(long, global = true)]
    no_banner: bool,
}

#[derive(Debug, Args)]
struct Input {
    /// Small-element file, text or JSON; `-` reads stdin.
    file: Option<PathBuf>,
    /// Inline small set, points separated by `;`, e.g. "0 0; 1 2".
    #[arg(short = 'e', long, conflicts_with = "file")]
    small: Option<String>,
}

#[derive(Debug, Args)]
struct Tree {
    #[arg(long, default_value_t = 8)]
    max_genus: u64,
    /// Worker threads; 0 uses every core.
    #[arg(long, default_value_t = 0)]
    threads: usize,
}

#[derive(Debug, Subcommand)]
enum Verb {
    /// Validate a small set.
    Verify(Input),
    /// Length, genus, type and per-axis contributions.
    Metrics(Input),
    /// All tracks, flagged beyond/favored.
    Tracks(Input),
    /// Sons along favored tracks.
    Sons(Input),
    /// Special parents with the tracks leading back.
    Parents(Input),
    /// Count semigroups by genus.
    Enumerate {
        #[command(flatten)]
        tree: Tree,
        #[arg(long)]
        count_only: bool,
        /// Also run the property audit up to the same genus.
        #[arg(long)]
        audit: bool,
        #[arg(long)]
        checkpoint: Option<PathBuf>,
        #[arg(long, requires = "checkpoint")]
        resume: bool,
    },
    /// Check the Wilf inequality.
    Wilf(Input),
    /// Report every Wilf violation up to a genus.
    WilfScan {
        #[command(flatten)]
        tree: Tree,
    },
    /// Cross-check invariants over the tree.
    Audit {
        #[command(flatten)]
        tree: Tree,
    },
}

struct Usage(String);

enum Failure {
    Usage(Usage),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Domain(Error::Io(e))
    }
}

/// Rendered output plus whether the verb itself reported a failure.
struct Output {
    text: String,
    ok: bool,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, ok: true }
    }
}

fn load(input: &Input) -> std::result::Result<GoodSemigroup, Failure> {
    let text = match (&input.file, &input.small) {
        (_, Some(inline)) => inline.replace(';', "\n"),
        (Some(p), None) if p.as_os_str() == "-" => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            s
        }
        (Some(p), None) => std::fs::read_to_string(p)
            .map_err(|e| Error::Unsupported(format!("{}: {e}", p.display())))?,
        (None, None) => {
            return Err(Failure::Usage(Usage(
                "an input FILE or --small is required".into(),
            )))
        }
    };
    Ok(parse_semigroup(&text)?)
}

fn to_json(v: &impl Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn no_csv(verb: &str) -> Failure {
    Failure::Usage(Usage(format!("csv output is not available for {verb}")))
}

fn verify(input: &Input, fmt: Format) -> std::result::Result<Output, Failure> {
    let s = match load(input) {
        Err(Failure::Domain(Error::Invalid(v))) => {
            let text = match fmt {
                Format::Json => to_json(&json!({
                    "valid": false,
                    "code": v.code(),
                    "message": v.to_string(),
                })),
                Format::Text => format!("invalid [{}]: {v}\n", v.code()),
                Format::Csv => return Err(no_csv("verify")),
            };
            return Ok(Output { text, ok: false });
        }
        other => other?,
    };
    let c = crate::point::Point::new(s.conductor().to_vec());
    Ok(Output::ok(match fmt {
        Format::Json => to_json(&json!({
            "valid": true,
            "small": s,
            "conductor": c,
            "warning": s.warning(),
        })),
        Format::Text => {
            let mut t = format!("valid {s}\nconductor {c}\n");
            if let Some(w) = s.warning() {
                t.push_str(&format!("warning: {w}\n"));
            }
            t
        }
        Format::Csv => return Err(no_csv("verify")),
    }))
}

fn metrics(input: &Input, fmt: Format) -> std::result::Result<Output, Failure> {
    let s = load(input)?;
    let r = metrics_report(&s)?;
    Ok(Output::ok(match fmt {
        Format::Json => to_json(&r),
        Format::Csv => {
            let mut t = String::from("axis,length,genus\n");
            for a in &r.axis_contributions {
                t.push_str(&format!("{},{},{}\n", a.axis, a.length, a.genus));
            }
            t
        }
        Format::Text => {
            let mut t = format!(
                "length={}\ngenus={}\nc_S={}\n",
                r.length, r.genus, r.conductor_sum
            );
            if let Some(ty) = r.type_ {
                t.push_str(&format!("type={ty}\n"));
            }
            t.push_str("axis  length  genus\n");
            for a in &r.axis_contributions {
                t.push_str(&format!("{:>4}  {:>6}  {:>5}\n", a.axis, a.length, a.genus));
            }
            t
        }
    }))
}

#[derive(Serialize)]
struct TrackRow {
    #[serde(flatten)]
    track: Track,
    beyond: bool,
    favored: bool,
}

fn list_tracks(input: &Input, fmt: Format) -> std::result::Result<Output, Failure> {
    let s = load(input)?;
    let beyond = beyond_tracks(&s)?;
    let favored = favored_tracks(&s)?;
    let rows: Vec<TrackRow> = tracks(&s)?
        .into_iter()
        .map(|t| TrackRow {
            beyond: beyond.contains(&t),
            favored: favored.contains(&t),
            track: t,
        })
        .collect();
    Ok(Output::ok(match fmt {
        Format::Json => to_json(&rows),
        Format::Csv => return Err(no_csv("tracks")),
        Format::Text => rows
            .iter()
            .map(|r| {
                let mut flags = String::new();
                if r.beyond {
                    flags.push_str(" beyond");
                }
                if r.favored {
                    flags.push_str(" favored");
                }
                format!("{}{flags}\n", r.track)
            })
            .collect(),
    }))
}

#[derive(Serialize)]
struct Relative {
    track: Track,
    semigroup: GoodSemigroup,
}

fn render_relatives(rows: &[Relative], fmt: Format, verb: &str) -> std::result::Result<String, Failure> {
    Ok(match fmt {
        Format::Json => to_json(&rows),
        Format::Csv => return Err(no_csv(verb)),
        Format::Text => rows
            .iter()
            .map(|r| format!("{}  {}\n", r.track, r.semigroup))
            .collect(),
    })
}

fn sons(input: &Input, fmt: Format) -> std::result::Result<Output, Failure> {
    let s = load(input)?;
    let rows = favored_tracks(&s)?
        .into_iter()
        .map(|t| {
            Ok(Relative {
                semigroup: remove_track(&s, &t)?,
                track: t,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Output::ok(render_relatives(&rows, fmt, "sons")?))
}

fn parents(input: &Input, fmt: Format) -> std::result::Result<Output, Failure> {
    let s = load(input)?;
    let rows: Vec<Relative> = special_parents(&s)?
        .into_iter()
        .map(|(semigroup, track)| Relative { track, semigroup })
        .collect();
    Ok(Output::ok(render_relatives(&rows, fmt, "parents")?))
}

fn audit_text(tree: &Tree, fmt: Format) -> std::result::Result<Output, Failure> {
    let r = audit_mode(tree.max_genus, tree.threads, &AuditLimits::default())?;
    let text = match fmt {
        Format::Json => to_json(&r),
        Format::Csv => return Err(no_csv("audit")),
        Format::Text => r.to_text(),
    };
    Ok(Output {
        text,
        ok: r.passed(),
    })
}

fn dispatch(cli: &Cli) -> std::result::Result<Output, Failure> {
    let fmt = cli.format;
    match &cli.verb {
        Verb::Verify(i) => verify(i, fmt),
        Verb::Metrics(i) => metrics(i, fmt),
        Verb::Tracks(i) => list_tracks(i, fmt),
        Verb::Sons(i) => sons(i, fmt),
        Verb::Parents(i) => parents(i, fmt),
        Verb::Enumerate {
            tree,
            count_only,
            audit,
            checkpoint,
            resume,
        } => {
            let opts = EnumOptions {
                threads: tree.threads,
                count_only: *count_only,
                checkpoint: checkpoint.clone(),
                resume: *resume,
            };
            let table = count_by_genus(tree.max_genus, &opts)?;
            let mut out = Output::ok(match fmt {
                Format::Json => table.to_json(),
                Format::Csv => table.to_csv(),
                Format::Text => table.to_text(),
            });
            if *audit {
                if fmt == Format::Csv {
                    return Err(no_csv("audit"));
                }
                let a = audit_text(tree, fmt)?;
                out.text.push_str(&a.text);
                out.ok = a.ok;
            }
            Ok(out)
        }
        Verb::Wilf(i) => {
            let s = load(i)?;
            let r = wilf_check(&s)?;
            Ok(Output::ok(match fmt {
                Format::Json => to_json(&r),
                Format::Csv => return Err(no_csv("wilf")),
                Format::Text => format!(
                    "edim={}\nc_S={}\ngenus={}\nwitness {}\n{r} ({})\n",
                    r.edim,
                    r.c_s,
                    r.genus,
                    r.witness.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" "),
                    if r.holds { "holds" } else { "violated" }
                ),
            }))
        }
        Verb::WilfScan { tree } => {
            let v = wilf_scan(tree.max_genus, tree.threads)?;
            Ok(Output::ok(match fmt {
                Format::Json => to_json(
                    &v.iter()
                        .map(|(s, r)| json!({"semigroup": s, "report": r}))
                        .collect::<Vec<_>>(),
                ),
                Format::Csv => {
                    let mut t = String::from("small,edim,c_s,genus,rhs\n");
                    for (s, r) in &v {
                        t.push_str(&format!("{},{},{},{},{}\n", s.to_line(), r.edim, r.c_s, r.genus, r.rhs));
                    }
                    t
                }
                Format::Text if v.is_empty() => {
                    format!("no violations up to genus {}\n", tree.max_genus)
                }
                Format::Text => v.iter().map(|(s, r)| format!("{s}  {r}\n")).collect(),
            }))
        }
        Verb::Audit { tree } => audit_text(tree, fmt),
    }
}

fn banner() -> String {
    let t = std::time::SystemTime::now()
        .duration_since(std::time::UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0);
    format!("# gsf {} at unix time {t}\n", env!("CARGO_PKG_VERSION"))
}

/// Runs one command; returns the exit code (0 ok, 1 domain error, 2 usage).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if code == 0 { out } else { err };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    match dispatch(&cli) {
        Ok(o) => {
            if cli.format == Format::Text && !cli.no_banner {
                let _ = out.write_all(banner().as_bytes());
            }
            let _ = out.write_all(o.text.as_bytes());
            if o.ok {
                0
            } else {
                1
            }
        }
        Err(Failure::Usage(Usage(m))) => {
            let _ = writeln!(err, "error: {m}\n\nUsage: gsf <verb> [FILE] [--format text|json|csv] [--max-genus G] [--threads N] [--checkpoint DIR] [--resume] [--audit] [--no-banner]");
            2
        }
        Err(Failure::Domain(e)) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}
