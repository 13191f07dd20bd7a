//! Command-line front end: polynomial and value computation, structural
//! profiles, family construction, the verification suites, and the
//! `(nu, q)` search harness.

use clap::{Parser, Subcommand, ValueEnum};
use indpoly::analysis::GraphProfile;
use indpoly::engine::{brute_force_poly, independence_poly, Strategy};
use indpoly::enumerate::{connected_graphs, connected_graphs_with_nu, free_trees};
use indpoly::io::{parse_edge_list, parse_family_spec, parse_graph6, write_edge_list, write_graph6};
use indpoly::search::{coverage_table, search, SearchBudget, SearchResult, SearchStatus, Witness};
use indpoly::verify::{
    suite_cyclomatic_bound, suite_families, suite_lemma1, suite_theorem6, suite_well_covered,
    SuiteReport,
};
use indpoly::{Graph, Int};
use std::io::Read;
use std::path::Path;
use std::process::ExitCode;
use std::str::FromStr;

#[derive(Parser)]
#[command(name = "indpoly", version, about = "Exact independence polynomials and their values at -1")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compute I(G;x) with the recursion engine.
    Poly {
        /// File path, literal graph6, or '-' for stdin.
        input: String,
        #[arg(long, default_value = "auto", value_parser = Strategy::from_str)]
        strategy: Strategy,
        /// Also print recursion statistics.
        #[arg(long)]
        stats: bool,
    },
    /// Evaluate I(G;t) at an integer point (default -1).
    Eval {
        input: String,
        #[arg(long, default_value = "-1", allow_hyphen_values = true)]
        at: String,
    },
    /// Brute-force oracle polynomial (guarded to 28 vertices).
    Oracle { input: String },
    /// Structural profile: order, size, cyclomatic number, girth, alpha,
    /// well-coveredness, corona base.
    Props { input: String },
    /// Build a graph from a family spec, e.g. "corona(path(5))".
    Construct {
        spec: String,
        #[arg(long, value_enum, default_value_t = OutFormat::G6)]
        out: OutFormat,
    },
    /// Run a verification suite; exit code 1 on failures.
    Verify {
        #[arg(value_enum)]
        suite: SuiteName,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long, default_value_t = 0x5EED)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Write line-delimited JSON records to this file.
        #[arg(long)]
        report: Option<String>,
        /// Run the cyclomatic sweep over the graph6 lines in this file
        /// instead of the built-in generator.
        #[arg(long)]
        graphs: Option<String>,
    },
    /// Search for a connected graph with the given cyclomatic number and
    /// value at -1.
    Search {
        #[arg(long)]
        nu: usize,
        #[arg(long, allow_hyphen_values = true)]
        target: i64,
        /// Budget in recursion-node units.
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Run the search for every |q| <= 2^nu and print the coverage table.
    Coverage {
        #[arg(long)]
        nu: usize,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Stream generated graphs as graph6 lines.
    Enumerate {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        n: usize,
        /// Keep only graphs with this cyclomatic number.
        #[arg(long)]
        nu: Option<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    G6,
    Edges,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Trees,
    Connected,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteName {
    Lemma1,
    Theorem6,
    Cyclomatic,
    Wellcovered,
    Families,
    All,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> indpoly::Result<ExitCode> {
    match cli.cmd {
        Cmd::Poly { input, strategy, stats } => {
            let g = read_graph(&input)?;
            let (poly, st) = independence_poly(&g, strategy);
            println!("{poly}");
            println!("coeffs: {}", poly.coeff_list_string());
            if stats {
                println!("strategy: {}", st.strategy);
                println!("nodes: {}", st.recursion_nodes);
                println!("memo_hits: {}", st.memo_hits);
                println!("closed_form_hits: {}", st.closed_form_hits);
                println!("max_depth: {}", st.max_depth);
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Eval { input, at } => {
            let g = read_graph(&input)?;
            let t = Int::from_str(at.trim())
                .map_err(|_| indpoly::Error::Precondition(format!("bad integer `{at}`")))?;
            let (poly, _) = independence_poly(&g, Strategy::Auto);
            println!("{}", poly.eval(&t));
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Oracle { input } => {
            let g = read_graph(&input)?;
            let poly = brute_force_poly(&g)?;
            println!("{poly}");
            println!("coeffs: {}", poly.coeff_list_string());
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Props { input } => {
            let g = read_graph(&input)?;
            print!("{}", GraphProfile::compute(&g));
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Construct { spec, out } => {
            let spec = parse_family_spec(&spec)?;
            let g = spec.build()?;
            match out {
                OutFormat::G6 => println!("{}", write_graph6(&g)),
                OutFormat::Edges => print!("{}", write_edge_list(&g)),
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Verify { suite, max_n, seed, jobs, report, graphs } => {
            run_verify(suite, max_n, seed, jobs, report, graphs)
        }
        Cmd::Search { nu, target, budget, seed } => {
            let mut b = SearchBudget::default();
            if let Some(nodes) = budget {
                b.max_nodes = nodes;
            }
            if let Some(s) = seed {
                b.seed = s;
            }
            let result = search(nu, target, &b)?;
            print_search_result(&result);
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Coverage { nu, budget } => {
            let mut b = SearchBudget::default();
            if let Some(nodes) = budget {
                b.max_nodes = nodes;
            }
            let table = coverage_table(nu, &b)?;
            let found = table
                .iter()
                .filter(|r| !matches!(r.status, SearchStatus::NotFoundWithinBudget))
                .count();
            for r in &table {
                print_coverage_line(r);
            }
            println!("covered: {found}/{}", table.len());
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Enumerate { kind, n, nu } => {
            let graphs: Box<dyn Iterator<Item = Graph>> = match kind {
                Kind::Trees => Box::new(free_trees(n)?),
                Kind::Connected => match nu {
                    Some(nu) => Box::new(connected_graphs_with_nu(n, nu)?),
                    None => connected_graphs(n)?,
                },
            };
            for g in graphs {
                if matches!(kind, Kind::Trees) && nu.is_some_and(|want| want != 0) {
                    continue;
                }
                println!("{}", write_graph6(&g));
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn run_verify(
    suite: SuiteName,
    max_n: Option<usize>,
    seed: u64,
    jobs: usize,
    report_path: Option<String>,
    graphs_path: Option<String>,
) -> indpoly::Result<ExitCode> {
    let external: Option<Vec<Graph>> = match &graphs_path {
        Some(path) => {
            if !matches!(suite, SuiteName::Cyclomatic) {
                return Err(indpoly::Error::Precondition(
                    "--graphs applies to the cyclomatic suite only".into(),
                ));
            }
            let text = std::fs::read_to_string(path)
                .map_err(|e| indpoly::Error::Graph6(format!("cannot read {path}: {e}")))?;
            Some(indpoly::io::parse_graph6_lines(&text)?)
        }
        None => None,
    };

    let mut reports: Vec<SuiteReport> = Vec::new();
    let run_one = |name: SuiteName, reports: &mut Vec<SuiteReport>| {
        match name {
            SuiteName::Lemma1 => reports.push(suite_lemma1(max_n.unwrap_or(1_000_000))),
            SuiteName::Theorem6 => reports.push(suite_theorem6(max_n.unwrap_or(12), jobs)),
            SuiteName::Cyclomatic => {
                let r = match &external {
                    Some(graphs) => {
                        indpoly::verify::suite_cyclomatic_bound_over(graphs.clone(), jobs)
                    }
                    None => suite_cyclomatic_bound(max_n.unwrap_or(8), jobs),
                };
                for (nu, witnesses) in &r.tight_by_nu {
                    let shown: Vec<&str> = witnesses.iter().take(3).map(String::as_str).collect();
                    println!(
                        "tight nu={nu}: {} witnesses, e.g. {}",
                        witnesses.len(),
                        shown.join(" ")
                    );
                }
                reports.push(r.report);
            }
            SuiteName::Wellcovered => {
                reports.push(suite_well_covered(max_n.unwrap_or(14), seed, jobs))
            }
            SuiteName::Families => reports.push(suite_families(seed, jobs)),
            SuiteName::All => unreachable!("expanded by caller"),
        }
    };
    match suite {
        SuiteName::All => {
            for name in [
                SuiteName::Lemma1,
                SuiteName::Theorem6,
                SuiteName::Cyclomatic,
                SuiteName::Wellcovered,
                SuiteName::Families,
            ] {
                run_one(name, &mut reports);
            }
        }
        other => run_one(other, &mut reports),
    }

    let mut all_passed = true;
    let mut records = String::new();
    for r in &reports {
        print!("{}", r.render_text());
        records.push_str(&r.to_records());
        all_passed &= r.passed();
    }
    if let Some(path) = report_path {
        std::fs::write(&path, records)
            .map_err(|e| indpoly::Error::Report(format!("cannot write {path}: {e}")))?;
    }
    Ok(if all_passed { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn print_search_result(r: &SearchResult) {
    println!("target: nu={} q={}", r.nu, r.q);
    println!("status: {}", r.status);
    match &r.witness {
        Some(Witness::Graph(g)) => {
            println!("witness: {}", write_graph6(g));
            println!("n: {}", g.n());
        }
        Some(Witness::Family { spec, graph }) => {
            if let Some(g) = graph {
                println!("witness: {}", write_graph6(g));
                println!("n: {}", g.n());
            }
            println!("via: {spec}");
        }
        None => {}
    }
    println!("budget_spent: {}", r.budget_spent);
}

fn print_coverage_line(r: &SearchResult) {
    let mut line = format!("q={}: {}", r.q, r.status);
    match &r.witness {
        Some(Witness::Graph(g)) => {
            line.push_str(&format!(" {}", write_graph6(g)));
        }
        Some(Witness::Family { spec, graph }) => {
            if let Some(g) = graph {
                line.push_str(&format!(" {}", write_graph6(g)));
            }
            line.push_str(&format!(" via {spec}"));
        }
        None => {}
    }
    println!("{line}");
}

/// Reads a graph from a file path, a literal graph6 string, or stdin.
fn read_graph(input: &str) -> indpoly::Result<Graph> {
    let text = if input == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| indpoly::Error::Graph6(format!("cannot read stdin: {e}")))?;
        buf
    } else if Path::new(input).is_file() {
        std::fs::read_to_string(input)
            .map_err(|e| indpoly::Error::Graph6(format!("cannot read {input}: {e}")))?
    } else {
        input.to_string()
    };
    parse_graph_text(&text)
}

fn parse_graph_text(text: &str) -> indpoly::Result<Graph> {
    let first = text
        .lines()
        .find(|l| !l.trim().is_empty())
        .ok_or_else(|| indpoly::Error::Graph6("empty input".into()))?;
    if first.trim_start().starts_with("n ") {
        parse_edge_list(text)
    } else {
        parse_graph6(first.trim())
    }
}
