// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! Command-line front end.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::PathBuf;

use clap::{Parser, ValueEnum};

use crate::error::Error;
use crate::graph::{generate_graph, read_edge_list, Graph, GraphFamily};
use crate::oracle::DEFAULT_MAX_SUBSETS;
use crate::supergraph::KSet;
use crate::traversal::{enumerate_driver_capped, Engine, OutputSink};
use crate::verify::{check_counterexample, verify_instance, CheckReport, Outcome};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VERIFY_FAILED: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum EngineArg {
    Dfs,
    Bfs,
    Oracle,
}

impl From<EngineArg> for Engine {
    fn from(e: EngineArg) -> Self {
        match e {
            EngineArg::Dfs => Engine::Dfs,
            EngineArg::Bfs => Engine::Bfs,
            EngineArg::Oracle => Engine::Oracle,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    List,
    Count,
    Stats,
    Verify,
}

/// Enumerate connected induced subgraphs with exactly k vertices.
#[derive(Debug, Parser)]
#[command(name = "cisgen", version)]
pub struct Args {
    /// Edge-list file to read.
    #[arg(
        long,
        value_name = "PATH",
        conflicts_with = "gen",
        required_unless_present = "gen"
    )]
    pub input: Option<PathBuf>,

    /// Graph generator, e.g. `path:6`, `grid:3:4`, `gnp:100:0.05:42`.
    #[arg(long = "gen", value_name = "SPEC")]
    pub gen: Option<String>,

    /// Number of vertices per subgraph.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub k: u64,

    #[arg(long, value_enum, default_value = "dfs")]
    pub engine: EngineArg,

    #[arg(long, value_enum, default_value = "list")]
    pub mode: Mode,

    /// Output file, or `-` for stdout.
    #[arg(long, default_value = "-")]
    pub output: String,

    /// Largest number of k-subsets the brute-force oracle may test.
    #[arg(long = "max-subsets", default_value_t = DEFAULT_MAX_SUBSETS)]
    pub max_subsets: u128,

    /// Seed for `gnp` specs that do not carry one.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Source {
    File(PathBuf),
    Generator(GraphFamily),
}

/// A validated invocation.
#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub source: Source,
    pub k: usize,
    pub engine: Engine,
    pub mode: Mode,
    pub output: Option<PathBuf>,
    pub max_subsets: u128,
}

impl RunConfig {
    pub fn from_args(args: Args) -> Result<Self, Error> {
        let source = match (args.input, args.gen) {
            (Some(p), None) => Source::File(p),
            (None, Some(spec)) => {
                Source::Generator(GraphFamily::parse_with_seed(&spec, args.seed)?)
            }
            _ => {
                return Err(Error::Contract(
                    "give exactly one of --input and --gen".into(),
                ))
            }
        };
        Ok(Self {
            source,
            k: args.k as usize,
            engine: args.engine.into(),
            mode: args.mode,
            output: (args.output != "-").then(|| PathBuf::from(args.output)),
            max_subsets: args.max_subsets,
        })
    }

    pub fn load_graph(&self) -> Result<Graph, Error> {
        match &self.source {
            Source::Generator(f) => generate_graph(f),
            Source::File(p) => {
                let file = File::open(p).map_err(|e| Error::Parse {
                    line: 0,
                    msg: format!("{}: {e}", p.display()),
                })?;
                read_edge_list(BufReader::new(file))
            }
        }
    }
}

fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Internal(_) => EXIT_INTERNAL,
        _ => EXIT_USAGE,
    }
}

fn write_set<W: Write + ?Sized>(out: &mut W, set: &KSet) -> io::Result<()> {
    let labels = set.sorted_labels();
    let mut line = String::with_capacity(labels.len() * 4);
    for (i, v) in labels.iter().enumerate() {
        if i > 0 {
            line.push(' ');
        }
        line.push_str(&v.to_string());
    }
    line.push('\n');
    out.write_all(line.as_bytes())?;
    out.flush()
}

struct LineSink<'a, W: Write + ?Sized> {
    out: &'a mut W,
    failure: Option<io::Error>,
}

impl<W: Write + ?Sized> OutputSink for &mut LineSink<'_, W> {
    fn emit(&mut self, set: &KSet) {
        if self.failure.is_none() {
            self.failure = write_set(self.out, set).err();
        }
    }

    fn is_closed(&self) -> bool {
        self.failure.is_some()
    }
}

fn print_reports<W: Write + ?Sized>(out: &mut W, reports: &[CheckReport]) -> io::Result<bool> {
    let mut all = true;
    for r in reports {
        match &r.outcome {
            Outcome::Pass => writeln!(out, "PASS {}", r.name)?,
            Outcome::Fail(msg) => {
                all = false;
                writeln!(out, "FAIL {}: {msg}", r.name)?
            }
        }
    }
    out.flush()?;
    Ok(all)
}

/// Executes `config`, writing results to `out`. Returns the process exit code.
pub fn run<W: Write + ?Sized>(config: &RunConfig, out: &mut W) -> Result<i32, Error> {
    let g = config.load_graph()?;
    let io_err = |e: io::Error| Error::Contract(format!("write failed: {e}"));
    match config.mode {
        Mode::List => {
            let mut sink = LineSink { out, failure: None };
            enumerate_driver_capped(&g, config.k, config.engine, config.max_subsets, &mut sink)?;
            match sink.failure {
                // the reader went away; nothing left to report
                Some(e) if e.kind() == io::ErrorKind::BrokenPipe => {}
                Some(e) => return Err(io_err(e)),
                None => {}
            }
        }
        Mode::Count => {
            let stats = enumerate_driver_capped(
                &g,
                config.k,
                config.engine,
                config.max_subsets,
                |_: &KSet| {},
            )?;
            writeln!(out, "{}", stats.outputs).map_err(io_err)?;
        }
        Mode::Stats => {
            let stats = enumerate_driver_capped(
                &g,
                config.k,
                config.engine,
                config.max_subsets,
                |_: &KSet| {},
            )?;
            writeln!(out, "{stats}").map_err(io_err)?;
        }
        Mode::Verify => {
            let mut reports = verify_instance(&g, config.k, config.max_subsets)?;
            if let Source::Generator(GraphFamily::CounterexamplePath { n, k }) = config.source {
                reports.push(CheckReport {
                    name: "non-dfs-counterexample",
                    outcome: check_counterexample(n, k)?,
                });
            }
            let all = print_reports(out, &reports).map_err(io_err)?;
            return Ok(if all { EXIT_OK } else { EXIT_VERIFY_FAILED });
        }
    }
    Ok(EXIT_OK)
}

/// Parses `args`, runs, and reports errors on `err`. Returns the exit code.
pub fn main_with_args<I, T>(args: I, stdout: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = match Args::try_parse_from(args) {
        Ok(a) => a,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = write!(err, "{e}");
            if !e.use_stderr() {
                let _ = write!(stdout, "{}", e.render());
            }
            return code;
        }
    };
    let config = match RunConfig::from_args(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_USAGE;
        }
    };
    let result = match &config.output {
        None => run(&config, stdout),
        Some(path) => match File::create(path) {
            Ok(f) => run(&config, &mut BufWriter::new(f)),
            Err(e) => {
                let _ = writeln!(err, "error: {}: {e}", path.display());
                return EXIT_USAGE;
            }
        },
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}
