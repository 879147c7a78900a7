//! Command-line interface.
//!
//! Every invocation reads presentations from `.pres` files in the language
//! of the [`parse`](crate::parse) module and writes one JSON document to
//! stdout (compact by default, indented with `--pretty`); keys appear in a
//! fixed order so outputs are byte-for-byte reproducible. Errors go to
//! stderr as `{"error": kind, "message": ...}`. The exit status is 0 on
//! success, 2 when a coset enumeration exceeds its limit, and 1 for every
//! other failure.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::complexes::{presentation_complex, TwoComplex};
use crate::cosets::{low_index_subgroups, todd_coxeter, CosetTable, SubgroupSpec};
use crate::covers::{build_cover, fiber_size, simplify, subgroup_presentation, Covering};
use crate::error::{Error, Result};
use crate::homology::{abelianization, homology, schur_multiplier_finite, AbelianGroup};
use crate::parse::{parse_generator_map, parse_presentation, parse_words};
use crate::words::Presentation;

/// An ordered JSON document; kept minimal so output bytes are fully under
/// our control (stable key order, arbitrary-precision integers unquoted).
enum Json {
    Num(String),
    Str(String),
    Arr(Vec<Json>),
    Obj(Vec<(&'static str, Json)>),
}

impl Json {
    fn num(n: impl ToString) -> Json {
        Json::Num(n.to_string())
    }

    fn write(&self, out: &mut String, pretty: bool, depth: usize) {
        match self {
            Json::Num(n) => out.push_str(n),
            Json::Str(s) => {
                out.push('"');
                for c in s.chars() {
                    match c {
                        '"' => out.push_str("\\\""),
                        '\\' => out.push_str("\\\\"),
                        '\n' => out.push_str("\\n"),
                        '\t' => out.push_str("\\t"),
                        '\r' => out.push_str("\\r"),
                        c if (c as u32) < 0x20 => {
                            let _ = write!(out, "\\u{:04x}", c as u32);
                        }
                        c => out.push(c),
                    }
                }
                out.push('"');
            }
            Json::Arr(items) => {
                if items.is_empty() {
                    out.push_str("[]");
                    return;
                }
                out.push('[');
                for (i, item) in items.iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    if pretty {
                        out.push('\n');
                        out.push_str(&"  ".repeat(depth + 1));
                    }
                    item.write(out, pretty, depth + 1);
                }
                if pretty {
                    out.push('\n');
                    out.push_str(&"  ".repeat(depth));
                }
                out.push(']');
            }
            Json::Obj(fields) => {
                if fields.is_empty() {
                    out.push_str("{}");
                    return;
                }
                out.push('{');
                for (i, (key, value)) in fields.iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    if pretty {
                        out.push('\n');
                        out.push_str(&"  ".repeat(depth + 1));
                    }
                    Json::Str(key.to_string()).write(out, pretty, depth + 1);
                    out.push(':');
                    if pretty {
                        out.push(' ');
                    }
                    value.write(out, pretty, depth + 1);
                }
                if pretty {
                    out.push('\n');
                    out.push_str(&"  ".repeat(depth));
                }
                out.push('}');
            }
        }
    }

    fn render(&self, pretty: bool) -> String {
        let mut out = String::new();
        self.write(&mut out, pretty, 0);
        out
    }
}

#[derive(Parser)]
#[command(
    name = "fpgroups",
    version,
    about = "Finitely presented groups through combinatorial 2-complexes"
)]
struct Cli {
    /// Indent the JSON output for human readers
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Summarize a presentation and its presentation complex
    Info {
        /// Presentation file (.pres)
        file: PathBuf,
    },
    /// Serialize the presentation complex
    Complex { file: PathBuf },
    /// Abelianization of the presented group
    Abelianize { file: PathBuf },
    /// Integral homology of the presentation complex
    Homology { file: PathBuf },
    /// Enumerate the cosets of a subgroup and present it
    Subgroup {
        file: PathBuf,
        /// Subgroup generators, semicolon-separated ("w1;w2;...")
        #[arg(short, long)]
        words: String,
        /// Abort the enumeration beyond this many live cosets
        #[arg(long, default_value_t = 1_000_000)]
        max_cosets: usize,
        /// Tidy the subgroup presentation by elementary moves
        #[arg(long)]
        simplify: bool,
    },
    /// Build the covering complex a subgroup determines
    Cover {
        file: PathBuf,
        /// Subgroup generators, semicolon-separated ("w1;w2;...")
        #[arg(short, long)]
        words: String,
        /// Abort the enumeration beyond this many live cosets
        #[arg(long, default_value_t = 1_000_000)]
        max_cosets: usize,
    },
    /// Schur multiplier of a finite group
    Multiplier {
        file: PathBuf,
        /// Abort the enumeration beyond this many live cosets
        #[arg(long, default_value_t = 1_000_000)]
        max_cosets: usize,
    },
    /// Conjugacy classes of subgroups up to an index bound
    LowIndex {
        file: PathBuf,
        /// Largest index to search
        #[arg(short = 'n', long)]
        max_index: usize,
    },
    /// Free product of two presented groups
    FreeProduct { file1: PathBuf, file2: PathBuf },
    /// Direct product of two presented groups
    DirectProduct { file1: PathBuf, file2: PathBuf },
    /// Amalgamated product of two groups over a common subgroup
    Amalgam {
        file1: PathBuf,
        file2: PathBuf,
        /// Presentation of the amalgamated subgroup
        fileh: PathBuf,
        /// Images of the subgroup generators in the first group ("h=w;...")
        #[arg(long)]
        map1: String,
        /// Images of the subgroup generators in the second group ("h=w;...")
        #[arg(long)]
        map2: String,
    },
}

/// Runs the command line and returns the process exit status.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    // tolerate closed pipes instead of panicking mid-print
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(std::io::stdout(), "{e}");
                return 0;
            }
            let _ = write!(std::io::stderr(), "{e}");
            return 1;
        }
    };
    match execute(&cli.command) {
        Ok(doc) => {
            let _ = writeln!(std::io::stdout(), "{}", doc.render(cli.pretty));
            0
        }
        Err(err) => {
            let doc = Json::Obj(vec![
                ("error", Json::Str(err.kind().to_string())),
                ("message", Json::Str(err.to_string())),
            ]);
            let _ = writeln!(std::io::stderr(), "{}", doc.render(false));
            match err {
                Error::CosetLimitExceeded { .. } => 2,
                _ => 1,
            }
        }
    }
}

fn load(path: &Path) -> Result<Presentation> {
    parse_presentation(&std::fs::read_to_string(path)?)
}

fn group_json(g: &AbelianGroup) -> Json {
    Json::Obj(vec![
        ("free_rank", Json::num(g.free_rank())),
        (
            "torsion",
            Json::Arr(g.torsion().iter().map(Json::num).collect()),
        ),
    ])
}

fn complex_json(k: &TwoComplex) -> Json {
    Json::Obj(vec![
        ("vertices", Json::num(k.vertex_count())),
        (
            "edges",
            Json::Arr(
                k.edges()
                    .iter()
                    .map(|e| Json::Arr(vec![Json::num(e.tail), Json::num(e.head)]))
                    .collect(),
            ),
        ),
        (
            "faces",
            Json::Arr(
                k.faces()
                    .iter()
                    .map(|f| {
                        Json::Arr(
                            f.steps
                                .iter()
                                .map(|s| {
                                    Json::Arr(vec![Json::num(s.edge), Json::num(s.dir.sign())])
                                })
                                .collect(),
                        )
                    })
                    .collect(),
            ),
        ),
    ])
}

fn cell_counts_json(k: &TwoComplex) -> Json {
    Json::Obj(vec![
        ("vertices", Json::num(k.vertex_count())),
        ("edges", Json::num(k.edge_count())),
        ("faces", Json::num(k.face_count())),
        ("euler_characteristic", Json::num(k.euler_characteristic())),
    ])
}

fn cover_json(c: &Covering) -> Json {
    let nums = |v: &[usize]| Json::Arr(v.iter().map(Json::num).collect());
    Json::Obj(vec![
        ("degree", Json::num(c.degree())),
        ("fiber_size", Json::num(fiber_size(c))),
        ("base", complex_json(c.base())),
        ("total", complex_json(c.total())),
        (
            "projections",
            Json::Obj(vec![
                ("vertices", nums(c.vertex_projection())),
                ("edges", nums(c.edge_projection())),
                ("faces", nums(c.face_projection())),
            ]),
        ),
    ])
}

fn table_json(t: &CosetTable) -> Json {
    Json::Obj(vec![
        ("index", Json::num(t.coset_count())),
        (
            "table",
            Json::Arr(
                t.rows()
                    .iter()
                    .map(|row| Json::Arr(row.iter().map(Json::num).collect()))
                    .collect(),
            ),
        ),
    ])
}

fn enumerate(
    p: &Presentation,
    words: &str,
    max_cosets: usize,
) -> Result<(SubgroupSpec, CosetTable)> {
    let spec = SubgroupSpec::new(parse_words(words, p)?);
    let table = todd_coxeter(p, &spec, max_cosets)?;
    Ok((spec, table))
}

fn execute(command: &Command) -> Result<Json> {
    match command {
        Command::Info { file } => {
            let p = load(file)?;
            let k = presentation_complex(&p);
            Ok(Json::Obj(vec![
                ("generators", Json::num(p.generator_count())),
                ("relators", Json::num(p.relator_count())),
                (
                    "generator_names",
                    Json::Arr(
                        p.generator_names()
                            .iter()
                            .map(|n| Json::Str(n.clone()))
                            .collect(),
                    ),
                ),
                ("complex", cell_counts_json(&k)),
            ]))
        }
        Command::Complex { file } => Ok(complex_json(&presentation_complex(&load(file)?))),
        Command::Abelianize { file } => Ok(group_json(&abelianization(&load(file)?))),
        Command::Homology { file } => {
            let h = homology(&presentation_complex(&load(file)?));
            Ok(Json::Obj(vec![
                ("h0", group_json(&h.h0)),
                ("h1", group_json(&h.h1)),
                ("h2", group_json(&h.h2)),
            ]))
        }
        Command::Subgroup {
            file,
            words,
            max_cosets,
            simplify: tidy,
        } => {
            let p = load(file)?;
            let (_, table) = enumerate(&p, words, *max_cosets)?;
            let cover = build_cover(&p, &table)?;
            let mut sub = subgroup_presentation(&cover)?;
            if *tidy {
                sub = simplify(&sub);
            }
            Ok(Json::Obj(vec![
                ("index", Json::num(table.coset_count())),
                ("cover_cells", cell_counts_json(cover.total())),
                ("presentation", Json::Str(sub.to_string())),
            ]))
        }
        Command::Cover {
            file,
            words,
            max_cosets,
        } => {
            let p = load(file)?;
            let (_, table) = enumerate(&p, words, *max_cosets)?;
            Ok(cover_json(&build_cover(&p, &table)?))
        }
        Command::Multiplier { file, max_cosets } => Ok(group_json(&schur_multiplier_finite(
            &load(file)?,
            *max_cosets,
        )?)),
        Command::LowIndex { file, max_index } => {
            let p = load(file)?;
            let tables = low_index_subgroups(&p, *max_index);
            let mut per_index = vec![0usize; *max_index];
            for t in &tables {
                per_index[t.coset_count() - 1] += 1;
            }
            Ok(Json::Obj(vec![
                ("max_index", Json::num(max_index)),
                ("class_count", Json::num(tables.len())),
                (
                    "classes_per_index",
                    Json::Arr(per_index.iter().map(Json::num).collect()),
                ),
                ("tables", Json::Arr(tables.iter().map(table_json).collect())),
            ]))
        }
        Command::FreeProduct { file1, file2 } => {
            let p = load(file1)?.free_product(&load(file2)?);
            Ok(Json::Obj(vec![("presentation", Json::Str(p.to_string()))]))
        }
        Command::DirectProduct { file1, file2 } => {
            let p = load(file1)?.direct_product(&load(file2)?);
            Ok(Json::Obj(vec![("presentation", Json::Str(p.to_string()))]))
        }
        Command::Amalgam {
            file1,
            file2,
            fileh,
            map1,
            map2,
        } => {
            let p1 = load(file1)?;
            let p2 = load(file2)?;
            let ph = load(fileh)?;
            let f1 = parse_generator_map(map1, &ph, &p1)?;
            let f2 = parse_generator_map(map2, &ph, &p2)?;
            let p = p1.amalgamated_product(&p2, &ph, &f1, &f2)?;
            Ok(Json::Obj(vec![("presentation", Json::Str(p.to_string()))]))
        }
    }
}
