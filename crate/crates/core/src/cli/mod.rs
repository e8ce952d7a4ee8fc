//! Command-line front end. Exit status 0 means the answer was computed and
//! is positive, 1 a negative verdict (non-member, or indecomposable when a
//! split was asked for), 2 an input error.

use std::collections::hash_map::DefaultHasher;
use std::fs;
use std::hash::{Hash, Hasher};
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::decompose::{certificate, split, Decomposition};
use crate::error::{Error, Result};
use crate::generators::{
    canonical_indecomposable, format_counts, format_table, is_indecomposable_with, minimal_generators_with, records,
    tuple_text, Enumerator, GeneratorSet, Verdict,
};
use crate::graph::{caterpillar, CaterpillarLayout, Graph};
use crate::semigroup::{violation, Labelling, Method};

#[derive(Debug, Parser)]
#[command(name = "phylosem", version, about = "Phylogenetic semigroups of multigraphs")]
struct Cli {
    /// Worker threads for enumeration (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct GraphArg {
    /// Graph file with `edge <id> <u> <v>` records.
    graph: Option<PathBuf>,
    /// Use the g-caterpillar instead of a graph file.
    #[arg(long = "g")]
    genus: Option<usize>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum MethodArg {
    Auto,
    Inequalities,
    Decompose,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Method {
        match m {
            MethodArg::Auto => Method::Auto,
            MethodArg::Inequalities => Method::Inequalities,
            MethodArg::Decompose => Method::Decompose,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum, PartialEq, Eq)]
enum Format {
    Table,
    Json,
    Counts,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// First Betti number.
    Betti {
        #[command(flatten)]
        graph: GraphArg,
    },
    /// Membership of a labelling.
    Member {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long)]
        labelling: PathBuf,
        #[arg(long, value_enum, default_value = "auto")]
        method: MethodArg,
    },
    /// Networks of the cut tree summing to the lift of a member.
    Decompose {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long)]
        labelling: PathBuf,
    },
    /// Split a member into two, or certify that it is indecomposable.
    Split {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long)]
        labelling: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "auto")]
        method: MethodArg,
        /// Split this many random members of `--degree` instead of a file.
        #[arg(long)]
        random: Option<usize>,
        #[arg(long)]
        degree: Option<u32>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Minimal generators of a graph.
    Generators {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long)]
        max_degree: Option<u32>,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
        #[arg(long, value_enum, default_value = "auto")]
        method: MethodArg,
    },
    /// Generator table of the g-caterpillar.
    Table {
        #[arg(long = "g")]
        genus: usize,
        #[arg(long)]
        max_degree: Option<u32>,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// The canonical indecomposable element of the g-caterpillar.
    Canonical {
        #[arg(long = "g")]
        genus: usize,
    },
    /// Number of members of a given degree.
    Hilbert {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long)]
        degree: u32,
    },
}

/// Any error reaching the top level is reported with exit status 2.
struct Failure {
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure { message: e.to_string() }
    }
}

type Outcome = std::result::Result<i32, Failure>;

/// Parses `args` (including the program name) and runs the command, writing
/// results to `out` and diagnostics to `err`. Returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = cli.jobs {
        builder = builder.num_threads(n);
    }
    let pool = match builder.build() {
        Ok(pool) => pool,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return 2;
        }
    };
    let mut buffer = Vec::new();
    let result = pool.install(|| dispatch(cli.command, &mut buffer));
    let _ = out.write_all(&buffer);
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            2
        }
    }
}

fn read(path: &Path) -> std::result::Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure { message: format!("{}: {e}", path.display()) })
}

fn load_graph(arg: &GraphArg) -> std::result::Result<Graph, Failure> {
    match (&arg.graph, arg.genus) {
        (Some(path), None) => {
            let text = read(path)?;
            Graph::parse(&text).map_err(|e| Failure { message: format!("{}: {e}", path.display()) })
        }
        (None, Some(g)) => Ok(caterpillar(g)?),
        _ => Err(Failure { message: "give either a graph file or --g".into() }),
    }
}

fn load_labelling(g: &Graph, path: &Path) -> std::result::Result<Labelling, Failure> {
    Labelling::parse(g, &read(path)?).map_err(|e| Failure { message: format!("{}: {e}", path.display()) })
}

fn dispatch(command: Command, out: &mut Vec<u8>) -> Outcome {
    let mut say = |text: String| {
        let _ = out.write_all(text.as_bytes());
    };
    match command {
        Command::Betti { graph } => {
            let g = load_graph(&graph)?;
            say(format!("{}\n", g.betti()));
            Ok(0)
        }
        Command::Member { graph, labelling, method } => {
            let g = load_graph(&graph)?;
            let w = load_labelling(&g, &labelling)?;
            match violation(&g, &w, method.into())? {
                None => {
                    say("member: yes\n".into());
                    Ok(0)
                }
                Some(v) => {
                    say(format!("member: no\ncondition: {}\nreason: {v}\n", v.condition()));
                    Ok(1)
                }
            }
        }
        Command::Decompose { graph, labelling } => {
            let g = load_graph(&graph)?;
            let w = load_labelling(&g, &labelling)?;
            let dec = match Decomposition::new(&g, &w) {
                Ok(dec) => dec,
                Err(Error::NotMember(v)) => {
                    say(format!("member: no\ncondition: {}\nreason: {v}\n", v.condition()));
                    return Ok(1);
                }
                Err(e) => return Err(e.into()),
            };
            let tree = &dec.context().tree;
            say(format!("# cut tree\n{}", tree.to_text()));
            say("# networks\n".into());
            for p in dec.parts() {
                say(format!("{{{}}}\n", p.edges().ids(tree).join(", ")));
            }
            say(format!("# matrix\n{}", dec.matrix()));
            Ok(0)
        }
        Command::Split { graph, labelling, method, random, degree, seed } => {
            let g = load_graph(&graph)?;
            match (labelling, random) {
                (Some(path), None) => {
                    let w = load_labelling(&g, &path)?;
                    split_one(&g, &w, method.into(), &mut say)
                }
                (None, Some(n)) => {
                    let d = degree.ok_or(Failure { message: "--random needs --degree".into() })?;
                    split_random(&g, n, d, seed, &mut say)
                }
                _ => Err(Failure { message: "give either --labelling or --random".into() }),
            }
        }
        Command::Generators { graph, max_degree, format, method } => {
            let g = load_graph(&graph)?;
            let set = cached_generators(&g, max_degree, method.into())?;
            say(render_generators(&g, &set, format)?);
            Ok(0)
        }
        Command::Table { genus, max_degree, format } => {
            let g = caterpillar(genus)?;
            let set = cached_generators(&g, max_degree, Method::Auto)?;
            say(render_generators(&g, &set, format)?);
            Ok(0)
        }
        Command::Canonical { genus } => {
            let g = caterpillar(genus)?;
            let w = canonical_indecomposable(genus)?;
            say(format!("# tuple {}\n{}", tuple_text(&w.non_loop_tuple(&g)), w.to_text(&g)));
            Ok(0)
        }
        Command::Hilbert { graph, degree } => {
            let g = load_graph(&graph)?;
            let n = Enumerator::new(&g, Method::Auto)?.count(degree);
            say(format!("{n}\n"));
            Ok(0)
        }
    }
}

fn split_one(g: &Graph, w: &Labelling, method: Method, say: &mut dyn FnMut(String)) -> Outcome {
    if let Some(v) = violation(g, w, method)? {
        say(format!("member: no\ncondition: {}\nreason: {v}\n", v.condition()));
        return Ok(1);
    }
    if w.degree() > g.betti() as u32 + 1 {
        let (a, b) = split(g, w)?;
        say(certificate(g, w, &a, &b));
        return Ok(0);
    }
    if w.degree() == 0 {
        say("indecomposable: degree 0\n".into());
        return Ok(1);
    }
    match is_indecomposable_with(g, w, method)? {
        Verdict::Decomposable(a, b) => {
            say(certificate(g, w, &a, &b));
            Ok(0)
        }
        Verdict::Indecomposable => {
            say("indecomposable: certified\n".into());
            Ok(1)
        }
    }
}

fn split_random(g: &Graph, n: usize, d: u32, seed: u64, say: &mut dyn FnMut(String)) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let enumerator = Enumerator::new(g, Method::Auto)?;
    let mut ok = 0;
    for _ in 0..n {
        let Some(w) = enumerator.sample(d, &mut rng, 100_000) else {
            return Err(Failure { message: format!("no member of degree {d} found") });
        };
        let (a, b) = split(g, &w)?;
        if (&a + &b) == w {
            ok += 1;
        }
    }
    say(format!("split: {ok}/{n} ok\n"));
    Ok(if ok == n { 0 } else { 1 })
}

fn render_generators(g: &Graph, set: &GeneratorSet, format: Format) -> std::result::Result<String, Failure> {
    let caterpillar_rows = CaterpillarLayout::detect(g).ok().map(|_| records(g, set)).transpose()?;
    Ok(match (format, caterpillar_rows) {
        (Format::Counts, _) => format_counts(set),
        (Format::Table, Some(rows)) => format_table(&rows),
        (Format::Json, Some(rows)) => json(&rows)?,
        (Format::Table, None) => {
            let header: Vec<&str> = g.edges().iter().map(|e| e.id.as_str()).collect();
            let mut s = format!("# d ({})\n", header.join(", "));
            for w in set.iter() {
                s.push_str(&format!("{} {}\n", w.degree(), tuple_text(w.labels())));
            }
            s
        }
        (Format::Json, None) => {
            let rows: Vec<JsonLabelling> = set
                .iter()
                .map(|w| JsonLabelling {
                    degree: w.degree(),
                    labels: g.edges().iter().map(|e| e.id.clone()).zip(w.labels().iter().copied()).collect(),
                })
                .collect();
            json(&rows)?
        }
    })
}

#[derive(Serialize)]
struct JsonLabelling {
    degree: u32,
    labels: Vec<(String, u32)>,
}

fn json<T: Serialize>(value: &T) -> std::result::Result<String, Failure> {
    serde_json::to_string_pretty(value)
        .map(|s| s + "\n")
        .map_err(|e| Failure { message: e.to_string() })
}

#[derive(Serialize, Deserialize)]
struct CacheEntry {
    graph: String,
    max_degree: Option<u32>,
    method: String,
    set: GeneratorSet,
}

/// Minimal generators, persisted as JSON under `PHYLOSEM_CACHE_DIR` when set.
fn cached_generators(g: &Graph, max_degree: Option<u32>, method: Method) -> Result<GeneratorSet> {
    let compute = || minimal_generators_with(g, max_degree, method, |_, _| {});
    let Some(dir) = std::env::var_os("PHYLOSEM_CACHE_DIR") else {
        return compute();
    };
    let text = g.to_text();
    let method_name = format!("{:?}", method.resolve(g));
    let mut h = DefaultHasher::new();
    (&text, max_degree, &method_name).hash(&mut h);
    let path = Path::new(&dir).join(format!("generators-{:016x}.json", h.finish()));
    if let Ok(bytes) = fs::read(&path) {
        if let Ok(entry) = serde_json::from_slice::<CacheEntry>(&bytes) {
            if entry.graph == text && entry.max_degree == max_degree && entry.method == method_name {
                return Ok(entry.set);
            }
        }
    }
    let set = compute()?;
    let entry = CacheEntry { graph: text, max_degree, method: method_name, set };
    if fs::create_dir_all(&dir).is_ok() {
        if let Ok(bytes) = serde_json::to_vec(&entry) {
            let _ = fs::write(&path, bytes);
        }
    }
    Ok(entry.set)
}
