//! The `polystoch` command line.
//!
//! Exit codes: 0 success or predicate true, 1 predicate false, 2 usage
//! error, 3 invalid input data. Results go to standard output and
//! diagnostics to standard error.

use std::ffi::OsString;
use std::fs;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{ArgGroup, Parser, Subcommand};
use polystoch::{
    are_equivalent, bound_report, canonical_form, catalog, classify, dot, enumerate_vertices_with,
    is_vertex, kronecker, non_vertex_certificate, parse_matrix, sample_survey, sample_vertex,
    serialize_matrix, EnumerateOptions, Error, MultiMatrix,
};

pub const EXIT_OK: u8 = 0;
pub const EXIT_FALSE: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_DATA: u8 = 3;

#[derive(Parser, Debug)]
#[command(name = "polystoch", version, about = "Exact tools for vertices of polystochastic matrix polytopes")]
struct Cli {
    /// Emit JSON instead of line-oriented text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check polystochasticity and, with --vertex, vertexhood.
    Verify {
        #[arg(long)]
        vertex: bool,
        /// Where to write a non-vertex certificate (implies --vertex).
        #[arg(long, value_name = "PATH")]
        certificate: Option<PathBuf>,
        file: PathBuf,
    },
    /// Kronecker or dot product of two matrix files.
    #[command(group(ArgGroup::new("kind").required(true).args(["kron", "dot"])))]
    Product {
        #[arg(long)]
        kron: bool,
        #[arg(long)]
        dot: bool,
        a: PathBuf,
        b: PathBuf,
        #[arg(short, long, value_name = "OUT")]
        output: Option<PathBuf>,
    },
    /// List every vertex of Ω_n^d.
    Enumerate {
        #[arg(short)]
        n: usize,
        #[arg(short)]
        d: usize,
        /// Also group the vertices into equivalence classes.
        #[arg(long)]
        classes: bool,
        /// Directory for one file per vertex plus index.json.
        #[arg(short, long, value_name = "DIR")]
        output: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
    /// Vertices maximizing seeded random objectives, one JSON line each.
    Sample {
        #[arg(short)]
        n: usize,
        #[arg(short)]
        d: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        count: u64,
    },
    /// Sample vertices and group them into equivalence classes.
    Survey {
        #[arg(short)]
        n: usize,
        #[arg(short)]
        d: usize,
        #[arg(long)]
        seeds: usize,
        #[arg(long)]
        seed0: u64,
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
    /// Canonical representative of a matrix's equivalence class.
    Canon {
        /// Matrix file, or `-` for standard input.
        #[arg(default_value = "-")]
        file: PathBuf,
    },
    /// Whether two matrices are equivalent.
    Equiv { a: PathBuf, b: PathBuf },
    /// Counting bounds for the number of vertices.
    Bounds {
        #[arg(short)]
        n: usize,
        #[arg(short)]
        d: usize,
    },
    /// Print a named matrix.
    Catalog {
        name: String,
        #[arg(short, long, value_name = "OUT")]
        output: Option<PathBuf>,
    },
}

/// A failed command: exit code plus message for the error stream.
#[derive(Debug)]
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn data(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_DATA,
            message: message.into(),
        }
    }

    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::UnknownCatalog(_) => Failure::usage(e.to_string()),
            _ => Failure::data(e.to_string()),
        }
    }
}

type Outcome = Result<u8, Failure>;

/// Runs one command line and returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return if e.use_stderr() { EXIT_USAGE } else {
                let _ = write!(out, "{}", e.render());
                EXIT_OK
            };
        }
    };
    match dispatch(&cli, out, err) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn read_input(path: &Path) -> Result<Vec<u8>, Failure> {
    if path == Path::new("-") {
        let mut buf = Vec::new();
        std::io::stdin()
            .read_to_end(&mut buf)
            .map_err(|e| Failure::data(format!("standard input: {e}")))?;
        return Ok(buf);
    }
    fs::read(path).map_err(|e| Failure::data(format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<MultiMatrix, Failure> {
    parse_matrix(&read_input(path)?).map_err(|e| Failure::data(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::data(format!("{}: {e}", path.display())))
}

fn emit(out: &mut dyn Write, text: &str) -> Result<(), Failure> {
    out.write_all(text.as_bytes())
        .map_err(|e| Failure::data(format!("standard output: {e}")))
}

fn matrix_line(m: &MultiMatrix) -> String {
    format!("{}\n", serialize_matrix(m))
}

/// Writes a matrix to `output`, or to standard output when absent.
fn deliver(m: &MultiMatrix, output: &Option<PathBuf>, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    match output {
        Some(path) => {
            write_file(path, &matrix_line(m))?;
            let _ = writeln!(err, "wrote {}", path.display());
        }
        None => emit(out, &matrix_line(m))?,
    }
    Ok(EXIT_OK)
}

fn dispatch(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let json = cli.json;
    match &cli.command {
        Command::Verify {
            vertex,
            certificate,
            file,
        } => verify(&load(file)?, *vertex || certificate.is_some(), certificate, json, out, err),
        Command::Product {
            kron,
            a,
            b,
            output,
            ..
        } => {
            let (a, b) = (load(a)?, load(b)?);
            let c = if *kron { kronecker(&a, &b)? } else { dot(&a, &b)? };
            deliver(&c, output, out, err)
        }
        Command::Enumerate {
            n,
            d,
            classes,
            output,
            threads,
        } => enumerate(*n, *d, *classes, output, *threads, json, out, err),
        Command::Sample { n, d, seed, count } => {
            check_shape(*n, *d)?;
            for k in 0..*count {
                emit(out, &matrix_line(&sample_vertex(*n, *d, seed.wrapping_add(k))))?;
            }
            Ok(EXIT_OK)
        }
        Command::Survey {
            n,
            d,
            seeds,
            seed0,
            threads,
        } => {
            check_shape(*n, *d)?;
            let report = sample_survey(*n, *d, *seeds, *seed0, *threads)?;
            let text = if json {
                format!("{}\n", report.to_json())
            } else {
                report.to_text()
            };
            emit(out, &text)?;
            Ok(EXIT_OK)
        }
        Command::Canon { file } => {
            emit(out, &matrix_line(&canonical_form(&load(file)?)?))?;
            Ok(EXIT_OK)
        }
        Command::Equiv { a, b } => {
            let (a, b) = (load(a)?, load(b)?);
            let same = a.shape() == b.shape() && are_equivalent(&a, &b)?;
            let text = if json {
                format!("{{\"equivalent\":{same}}}\n")
            } else {
                format!("equivalent: {same}\n")
            };
            emit(out, &text)?;
            Ok(if same { EXIT_OK } else { EXIT_FALSE })
        }
        Command::Bounds { n, d } => {
            if *n < 2 || *d < 1 {
                return Err(Failure::data("bounds need n >= 2 and d >= 1"));
            }
            let report = bound_report(*n, *d);
            let text = if json {
                format!("{}\n", report.to_json())
            } else {
                report.to_text()
            };
            emit(out, &text)?;
            Ok(EXIT_OK)
        }
        Command::Catalog { name, output } => deliver(&catalog(name)?, output, out, err),
    }
}

fn check_shape(n: usize, d: usize) -> Result<(), Failure> {
    if n < 1 || d < 1 {
        return Err(Failure::data("order and dimension must be at least 1"));
    }
    Ok(())
}

fn verify(
    m: &MultiMatrix,
    want_vertex: bool,
    certificate: &Option<PathBuf>,
    json: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Outcome {
    let poly = m.is_polystochastic();
    let vertex = if want_vertex && poly {
        Some(is_vertex(m)?)
    } else if want_vertex {
        Some(false)
    } else {
        None
    };
    if let (Some(false), Some(path), true) = (vertex, certificate, poly) {
        let cert = non_vertex_certificate(m)?.expect("dependent incidence columns");
        write_file(path, &format!("{}\n", cert.to_json()))?;
        let _ = writeln!(err, "wrote {}", path.display());
    }
    let text = if json {
        match vertex {
            Some(v) => format!("{{\"polystochastic\":{poly},\"vertex\":{v}}}\n"),
            None => format!("{{\"polystochastic\":{poly}}}\n"),
        }
    } else {
        let mut t = format!("polystochastic: {poly}\n");
        if let Some(v) = vertex {
            t.push_str(&format!("vertex: {v}\n"));
        }
        t
    };
    emit(out, &text)?;
    Ok(if poly && vertex != Some(false) { EXIT_OK } else { EXIT_FALSE })
}

#[allow(clippy::too_many_arguments)]
fn enumerate(
    n: usize,
    d: usize,
    with_classes: bool,
    output: &Option<PathBuf>,
    threads: usize,
    json: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Outcome {
    let opts = EnumerateOptions {
        threads,
        cell_order: None,
    };
    let vertices = enumerate_vertices_with(n, d, &opts)?;
    let classes = if with_classes || output.is_some() {
        Some(classify(&vertices)?)
    } else {
        None
    };
    // class number of each vertex, 1-based
    let mut class_of = vec![0usize; vertices.len()];
    if let Some(cs) = &classes {
        for (k, c) in cs.iter().enumerate() {
            c.members.iter().for_each(|&i| class_of[i] = k + 1);
        }
    }

    if let Some(dir) = output {
        fs::create_dir_all(dir).map_err(|e| Failure::data(format!("{}: {e}", dir.display())))?;
        let mut index = Vec::new();
        for (i, v) in vertices.iter().enumerate() {
            let name = format!("vertex_{:04}.json", i + 1);
            write_file(&dir.join(&name), &matrix_line(v))?;
            index.push(format!(
                "{{\"file\":\"{name}\",\"class\":{},\"support_size\":{}}}",
                class_of[i],
                v.support_size()
            ));
        }
        write_file(
            &dir.join("index.json"),
            &format!(
                "{{\"n\":{n},\"d\":{d},\"vertices\":[{}]}}\n",
                index.join(",")
            ),
        )?;
        let _ = writeln!(err, "wrote {} vertices to {}", vertices.len(), dir.display());
    }

    let text = if json {
        let vs: Vec<String> = vertices.iter().map(serialize_matrix).collect();
        let cs = classes.as_ref().map(|cs| {
            let items: Vec<String> = cs
                .iter()
                .map(|c| {
                    format!(
                        "{{\"size\":{},\"support_size\":{},\"representative\":{}}}",
                        c.size(),
                        c.support_size(),
                        serialize_matrix(&c.representative)
                    )
                })
                .collect();
            format!(",\"classes\":[{}]", items.join(","))
        });
        format!(
            "{{\"n\":{n},\"d\":{d},\"count\":{},\"vertices\":[{}]{}}}\n",
            vertices.len(),
            vs.join(","),
            cs.filter(|_| with_classes).unwrap_or_default()
        )
    } else {
        let mut t = format!("n: {n}\nd: {d}\nvertices: {}\n", vertices.len());
        if let (true, Some(cs)) = (with_classes, &classes) {
            t.push_str(&format!("classes: {}\n", cs.len()));
            for (k, c) in cs.iter().enumerate() {
                t.push_str(&format!(
                    "class {}: size {} support {} representative {}\n",
                    k + 1,
                    c.size(),
                    c.support_size(),
                    serialize_matrix(&c.representative)
                ));
            }
        }
        t
    };
    emit(out, &text)?;
    Ok(EXIT_OK)
}
