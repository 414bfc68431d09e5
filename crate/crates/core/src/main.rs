//! `schemeforge` command-line front end.
//!
//! Exit codes: 0 success, 1 a verification or feasibility check failed, 2 usage or input error.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use schemeforge::coherent::{graph_closure, CoherentConfiguration};
use schemeforge::exact::rat;
use schemeforge::graph::{
    bipartite_double_graph, catalog_graph, catalog_names, cube_cover_incidence, nauru_double_cover_voltages,
    t_walk_regular_order, voltage_derived, Graph, VoltageAssignment,
};
use schemeforge::report::{analyze_scheme, diagram_report, spectral_report, ConfigurationSummary, Status, Verdict};
use schemeforge::scheme::{
    bipartite_double_scheme, catalog_scheme, direct_product, partially_metric_order, quotient_scheme,
    relation_distribution_diagram, scheme_of_graph, AssociationScheme, Diagram,
};
use schemeforge::suite::{cube_cover_nullity, run_suite, SUITES};
use schemeforge::Error;

/// Name under which the putative diagram of a 2-cover of the Mobius-Kantor scheme is available.
const PUTATIVE: &str = "putative-mk-cover";

#[derive(Parser)]
#[command(name = "schemeforge", version, about = "Exact association schemes and spectral feasibility checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Default)]
struct Input {
    /// Input file: edge list, scheme (`rel` blocks) or diagram (`base` line).
    path: Option<PathBuf>,
    /// Catalog object (see `catalog`); may be repeated for `product`.
    #[arg(long)]
    catalog: Vec<String>,
    /// Input file; may be repeated for `product`.
    #[arg(long)]
    file: Vec<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Closure, spectral data, feasibility verdicts and the diagram of R_1.
    Analyze {
        #[command(flatten)]
        input: Input,
        /// Use this relation as the scheme graph.
        #[arg(long)]
        relation: Option<usize>,
        /// Append the relation-distribution diagram in DOT.
        #[arg(long)]
        dot: bool,
        #[arg(long)]
        json: bool,
    },
    /// Coherent closure of a graph.
    Closure {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        json: bool,
    },
    /// Eigenmatrices, multiplicities, Krein parameters and cosines.
    Spectral {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        relation: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Bipartite double scheme, or graph with `--graph`.
    Double {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        graph: bool,
    },
    /// Direct product of two schemes.
    Product {
        #[command(flatten)]
        input: Input,
    },
    /// Quotient by the equivalence R_0 and the given relations.
    Quotient {
        #[command(flatten)]
        input: Input,
        #[arg(long, required = true)]
        relation: Vec<usize>,
    },
    /// Derived graph of a voltage assignment (`--catalog nauru-double` or a voltage file).
    Cover {
        #[command(flatten)]
        input: Input,
    },
    /// Cube cover with parameters n and k.
    CubeCover {
        n: usize,
        k: usize,
        /// Print the edge list instead of the summary.
        #[arg(long)]
        graph: bool,
        #[arg(long)]
        json: bool,
    },
    /// Runs a verification suite.
    Verify {
        /// classification, feasibility, covers, products or all.
        suite: Option<String>,
        #[arg(long = "suite")]
        suite_flag: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Writes a graph, scheme, diagram or spectral report.
    Export {
        #[command(flatten)]
        input: Input,
        /// Cube cover `N K` as the object.
        #[arg(long, num_args = 2, value_names = ["N", "K"])]
        cube_cover: Option<Vec<usize>>,
        #[arg(long)]
        graph: bool,
        #[arg(long)]
        diagram: bool,
        #[arg(long)]
        spectral: bool,
        #[arg(long)]
        dot: bool,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        relation: Option<usize>,
    },
    /// Lists catalog names.
    Catalog {
        #[arg(long)]
        json: bool,
    },
}

/// A failed run: exit code and message.
struct Failure(u8, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. } | Error::UnknownCatalog(_) | Error::InvalidParameters(_) => 2,
            _ => 1,
        };
        Failure(code, e.to_string())
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure(2, msg.into())
}

type Run = Result<bool, Failure>;

enum Object {
    Catalog(String),
    Graph(Graph),
    Scheme(AssociationScheme),
    Diagram(Diagram),
}

fn read(path: &PathBuf) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))
}

fn parse_text(text: &str) -> Result<Object, Failure> {
    let first = |p: &str| text.lines().map(str::trim).any(|l| l.starts_with(p));
    Ok(if first("rel") {
        Object::Scheme(AssociationScheme::parse(text)?)
    } else if first("base") {
        Object::Diagram(Diagram::parse(text)?)
    } else {
        Object::Graph(Graph::parse(text)?)
    })
}

impl Input {
    fn objects(&self) -> Result<Vec<Object>, Failure> {
        let mut out = Vec::new();
        for name in &self.catalog {
            out.push(if name == PUTATIVE {
                Object::Diagram(Diagram::putative_mobius_kantor_cover())
            } else {
                catalog_graph(name)?;
                Object::Catalog(name.clone())
            });
        }
        for p in self.path.iter().chain(&self.file) {
            out.push(parse_text(&read(p)?)?);
        }
        Ok(out)
    }

    fn single(&self) -> Result<Object, Failure> {
        let mut v = self.objects()?;
        match v.len() {
            1 => Ok(v.pop().unwrap()),
            0 => Err(usage("no input: give a path, --file or --catalog")),
            _ => Err(usage("expected a single input")),
        }
    }
}

impl Object {
    fn graph(&self) -> Result<Graph, Failure> {
        match self {
            Object::Catalog(name) => Ok(catalog_graph(name)?),
            Object::Graph(g) => Ok(g.clone()),
            Object::Scheme(s) if s.rank() >= 2 => Ok(s.graph(1)),
            _ => Err(usage("this input has no graph")),
        }
    }

    fn configuration(&self) -> Result<CoherentConfiguration, Failure> {
        match self {
            Object::Catalog(name) if name.starts_with("bd-") => {
                let s = catalog_scheme(name)?;
                Ok(CoherentConfiguration::from_colors(s.n(), s.labels())?)
            }
            Object::Scheme(s) => Ok(CoherentConfiguration::from_colors(s.n(), s.labels())?),
            _ => Ok(graph_closure(&self.graph()?)?),
        }
    }

    /// The scheme, or `None` when the closure is not a symmetric association scheme.
    fn scheme(&self, relation: Option<usize>) -> Result<Option<AssociationScheme>, Failure> {
        let s = match self {
            Object::Catalog(name) if name.starts_with("bd-") => catalog_scheme(name)?,
            Object::Scheme(s) => s.clone(),
            Object::Diagram(_) => return Err(usage("a diagram is not a scheme")),
            _ => {
                let g = self.graph()?;
                let p = graph_closure(&g)?.classify_properties();
                if !(p.homogeneous && p.symmetric) {
                    return Ok(None);
                }
                scheme_of_graph(&g)?
            }
        };
        Ok(Some(match relation {
            Some(r) => partially_metric_order(&s, r)?.scheme,
            None => s,
        }))
    }

    fn require_scheme(&self, relation: Option<usize>) -> Result<AssociationScheme, Failure> {
        self.scheme(relation)?.ok_or_else(|| Failure(1, "the closure is not a symmetric association scheme".into()))
    }
}

fn emit<T: Serialize>(json: bool, value: &T, text: impl FnOnce() -> String) {
    if json {
        println!("{}", serde_json::to_string_pretty(value).expect("serializable report"));
    } else {
        print!("{}", text());
    }
}

fn analyze(input: &Input, relation: Option<usize>, dot: bool, json: bool) -> Run {
    let obj = input.single()?;
    if let Object::Diagram(dg) = &obj {
        let r = diagram_report(dg)?;
        emit(json, &r, || r.to_text());
        if dot && !json {
            print!("{}", dg.to_dot());
        }
        return Ok(r.feasible);
    }
    let cc = obj.configuration()?;
    let s = obj.scheme(relation)?;
    let r = analyze_scheme(&cc, s.as_ref(), true)?;
    emit(json, &r, || r.to_text());
    if dot && !json {
        if let Some(s) = s.as_ref().filter(|s| s.rank() >= 2) {
            print!("{}", relation_distribution_diagram(s, 1)?.to_dot());
        }
    }
    Ok(r.passed())
}

fn spectral(input: &Input, relation: Option<usize>, json: bool) -> Run {
    let obj = input.single()?;
    if let Object::Diagram(dg) = &obj {
        let r = diagram_report(dg)?;
        emit(json, &r, || r.to_text());
        return Ok(r.feasible);
    }
    let r = spectral_report(&obj.require_scheme(relation)?)?;
    emit(json, &r, || r.to_text());
    Ok(r.passed())
}

fn closure(input: &Input, json: bool) -> Run {
    let cc = input.single()?.configuration()?;
    let sum = ConfigurationSummary::of(&cc);
    emit(json, &sum, || format!("{}{}", sum.to_text(), cc.to_text()));
    Ok(true)
}

#[derive(Serialize)]
struct CubeCoverSummary {
    n: usize,
    k: usize,
    vertices: usize,
    edges: usize,
    nullity: usize,
    walk_regular_order: usize,
    multiplicity_of_one: usize,
}

fn cube_cover(n: usize, k: usize, graph: bool, json: bool) -> Run {
    let (_, g) = cube_cover_incidence(n, k)?;
    if graph {
        print!("{}", g.to_text());
        return Ok(true);
    }
    let w = t_walk_regular_order(&g)?;
    let sum = CubeCoverSummary {
        n,
        k,
        vertices: g.n(),
        edges: g.edge_count(),
        nullity: cube_cover_nullity(n, k)?,
        walk_regular_order: w.order,
        multiplicity_of_one: w.multiplicity_of(&rat(1)),
    };
    emit(json, &sum, || {
        format!(
            "cube cover ({n},{k}): {} vertices, {} edges\nnullity of NN^T - I: {}\n{}-walk-regular, eigenvalue 1 has multiplicity {}\n",
            sum.vertices, sum.edges, sum.nullity, sum.walk_regular_order, sum.multiplicity_of_one
        )
    });
    Ok(true)
}

#[derive(Serialize)]
struct SuiteResult<'a> {
    suite: &'a str,
    passed: usize,
    failed: usize,
    checks: &'a [Verdict],
}

fn verify(suite: &str, json: bool) -> Run {
    let checks = run_suite(suite)?;
    let failed = checks.iter().filter(|v| v.status == Status::Fail).count();
    let res = SuiteResult { suite, passed: checks.len() - failed, failed, checks: &checks };
    emit(json, &res, || {
        let mut s: String = checks.iter().map(|v| v.line() + "\n").collect();
        s.push_str(&format!("{suite}: {} passed, {failed} failed\n", res.passed));
        s
    });
    Ok(failed == 0)
}

struct ExportOpts {
    graph: bool,
    diagram: bool,
    spectral: bool,
    dot: bool,
    json: bool,
    relation: Option<usize>,
}

fn export(input: &Input, cover: Option<&[usize]>, o: &ExportOpts) -> Run {
    let obj = match cover {
        Some([n, k]) => Object::Graph(cube_cover_incidence(*n, *k)?.1),
        Some(_) => return Err(usage("--cube-cover takes N and K")),
        None => input.single()?,
    };
    if o.graph {
        print!("{}", obj.graph()?.to_text());
    } else if o.diagram {
        let dg = match &obj {
            Object::Diagram(dg) => dg.clone(),
            _ => relation_distribution_diagram(&obj.require_scheme(o.relation)?, 1)?,
        };
        print!("{}", if o.dot { dg.to_dot() } else { dg.to_text() });
    } else if o.spectral {
        let r = spectral_report(&obj.require_scheme(o.relation)?)?;
        emit(o.json, &r, || r.to_text());
    } else {
        print!("{}", obj.require_scheme(o.relation)?.to_text());
    }
    Ok(true)
}

fn cover(input: &Input) -> Run {
    let va = match (input.catalog.as_slice(), input.path.iter().chain(&input.file).next()) {
        ([name], None) if name == "nauru-double" => nauru_double_cover_voltages()?,
        ([], Some(p)) => VoltageAssignment::parse(&read(p)?)?,
        _ => return Err(usage("cover needs a voltage file or --catalog nauru-double")),
    };
    print!("{}", voltage_derived(&va)?.to_text());
    Ok(true)
}

fn catalog(json: bool) -> Run {
    let mut names: Vec<&str> = catalog_names();
    names.push(PUTATIVE);
    emit(json, &names, || {
        let mut s = String::from("graphs (schemes are their closures; bd-NAME is the bipartite double scheme):\n");
        for n in catalog_names() {
            s.push_str(&format!("  {n}\n"));
        }
        s.push_str(&format!("diagrams:\n  {PUTATIVE}\nvoltage assignments (cover):\n  nauru-double\n"));
        s
    });
    Ok(true)
}

fn run(cli: Cli) -> Run {
    match cli.command {
        Command::Analyze { input, relation, dot, json } => analyze(&input, relation, dot, json),
        Command::Closure { input, json } => closure(&input, json),
        Command::Spectral { input, relation, json } => spectral(&input, relation, json),
        Command::Double { input, graph } => {
            let obj = input.single()?;
            if graph {
                print!("{}", bipartite_double_graph(&obj.graph()?).to_text());
            } else {
                print!("{}", bipartite_double_scheme(&obj.require_scheme(None)?)?.to_text());
            }
            Ok(true)
        }
        Command::Product { input } => {
            let objs = input.objects()?;
            let [a, b] = objs.as_slice() else {
                return Err(usage("product needs exactly two inputs"));
            };
            print!("{}", direct_product(&a.require_scheme(None)?, &b.require_scheme(None)?)?.to_text());
            Ok(true)
        }
        Command::Quotient { input, relation } => {
            let q = quotient_scheme(&input.single()?.require_scheme(None)?, &relation)?;
            for (c, class) in q.classes.iter().enumerate() {
                let pts: Vec<String> = class.iter().map(ToString::to_string).collect();
                println!("# class {c}: {}", pts.join(" "));
            }
            print!("{}", q.scheme.to_text());
            Ok(true)
        }
        Command::Cover { input } => cover(&input),
        Command::CubeCover { n, k, graph, json } => cube_cover(n, k, graph, json),
        Command::Verify { suite, suite_flag, json } => {
            let name = suite.or(suite_flag).unwrap_or_else(|| "all".into());
            if !SUITES.contains(&name.as_str()) {
                return Err(usage(format!("unknown suite `{name}` (expected one of {})", SUITES.join(", "))));
            }
            verify(&name, json)
        }
        Command::Export { input, cube_cover, graph, diagram, spectral, dot, json, relation } => {
            export(&input, cube_cover.as_deref(), &ExportOpts { graph, diagram, spectral, dot, json, relation })
        }
        Command::Catalog { json } => catalog(json),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
