//! Command-line front end: analyze graphs, build and verify strong
//! orientations and rainbow colorings, generate the example families, and
//! run the exhaustive oracles and the theorem report.
//!
//! Exit codes: 0 on success or pass, 1 on a verified bound or property
//! violation, 2 on input or usage errors. `-` names stdin/stdout.

use clap::{Parser, Subcommand};
use earspan::cycles;
use earspan::error::Error;
use earspan::generate::{self, FamilySpec};
use earspan::graph::{
    Graph, parse_coloring, parse_graph, parse_orientation, serialize_coloring, serialize_graph,
    serialize_orientation,
};
use earspan::harness;
use earspan::metrics::{self, INF, fmt_dist};
use earspan::oracles;
use earspan::orient;
use earspan::rainbow;
use std::io::Read;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "earspan",
    version,
    about = "Strong orientations and rainbow colorings of bridgeless graphs"
)]
struct Cli {
    /// Worker threads for parallel sweeps; results are canonical either way.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print structural metrics (n, m, radius, diameter, centers, girth,
    /// eta, bridges, zeta when feasible).
    Analyze {
        input: String,
        /// Also write the metrics as JSON to this path.
        #[arg(long)]
        json: Option<String>,
    },
    /// Build a strong orientation within the layered bounds.
    Orient {
        input: String,
        /// Write the orientation (one `u v` arc per line) here.
        #[arg(short, long)]
        output: Option<String>,
        /// Write the construction trace as JSON here.
        #[arg(long)]
        trace: Option<String>,
    },
    /// Build a rainbow edge-coloring within the layered color bound.
    Rainbow {
        input: String,
        /// Write the coloring (one `u v color` per line) here.
        #[arg(short, long)]
        output: Option<String>,
        /// Write the construction trace as JSON here.
        #[arg(long)]
        trace: Option<String>,
        /// Verification mode: none, exact (subset-search oracle, needs at
        /// most 18 colors), or certificate (per-pair trace extraction).
        #[arg(long, default_value = "none")]
        verify: String,
        /// Write one JSON line per vertex pair with its rainbow path.
        #[arg(long)]
        certificates: Option<String>,
    },
    /// Generate a named graph family.
    Generate {
        /// One of: triangle_tree, extremal_rc, wheel_example,
        /// random_bridgeless, bipartite_dense, disconnected_counterexample.
        family: String,
        #[arg(long)]
        depth: Option<u32>,
        #[arg(long)]
        r: Option<u32>,
        #[arg(long)]
        eta: Option<u32>,
        #[arg(long)]
        copies: Option<u64>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        extra_ears: Option<usize>,
        #[arg(long)]
        k: Option<u32>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        output: Option<String>,
    },
    /// Check an orientation file: strongness and the layered bounds.
    VerifyOrientation {
        graph: String,
        orientation: String,
        /// Construction trace for the full per-layer audit.
        #[arg(long)]
        trace: Option<String>,
    },
    /// Check a coloring file for rainbow connectivity.
    VerifyColoring {
        graph: String,
        coloring: String,
        /// Verification mode: exact or certificate (needs --trace).
        #[arg(long, default_value = "exact")]
        verify: String,
        #[arg(long)]
        trace: Option<String>,
    },
    /// Exhaustive minimum oriented diameter over all orientations.
    Exhaustive {
        input: String,
        #[arg(long, default_value_t = 20)]
        max_edges: usize,
    },
    /// Exact rainbow connection number for tiny graphs.
    ExactRc {
        input: String,
        #[arg(long, default_value_t = 8)]
        max_edges: usize,
    },
    /// Run every theorem check whose hypotheses hold.
    Report {
        input: String,
        /// Assert that every face of a plane embedding has at most this
        /// boundary length (not verified).
        #[arg(long)]
        face_len: Option<u32>,
        /// Assert edge-transitivity (not verified).
        #[arg(long)]
        edge_transitive: bool,
        #[arg(long)]
        json: Option<String>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global();
    }
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn read_input(path: &str) -> Result<String, Error> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Error::InvalidParam(format!("stdin: {e}")))?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path).map_err(|e| Error::InvalidParam(format!("{path}: {e}")))
    }
}

fn write_output(path: Option<&str>, content: &str) -> Result<(), Error> {
    match path {
        None | Some("-") => {
            print!("{content}");
            Ok(())
        }
        Some(p) => std::fs::write(p, content).map_err(|e| Error::InvalidParam(format!("{p}: {e}"))),
    }
}

fn load_graph(path: &str) -> Result<Graph, Error> {
    parse_graph(&read_input(path)?)
}

fn run(cmd: Command) -> Result<u8, Error> {
    match cmd {
        Command::Analyze { input, json } => analyze(&input, json.as_deref()),
        Command::Orient {
            input,
            output,
            trace,
        } => cmd_orient(&input, output.as_deref(), trace.as_deref()),
        Command::Rainbow {
            input,
            output,
            trace,
            verify,
            certificates,
        } => cmd_rainbow(
            &input,
            output.as_deref(),
            trace.as_deref(),
            &verify,
            certificates.as_deref(),
        ),
        Command::Generate {
            family,
            depth,
            r,
            eta,
            copies,
            n,
            m,
            extra_ears,
            k,
            seed,
            output,
        } => {
            let spec = build_spec(&family, depth, r, eta, copies, n, m, extra_ears, k, seed)?;
            let g = generate::generate(&spec)?;
            write_output(output.as_deref(), &serialize_graph(&g))?;
            Ok(0)
        }
        Command::VerifyOrientation {
            graph,
            orientation,
            trace,
        } => cmd_verify_orientation(&graph, &orientation, trace.as_deref()),
        Command::VerifyColoring {
            graph,
            coloring,
            verify,
            trace,
        } => cmd_verify_coloring(&graph, &coloring, &verify, trace.as_deref()),
        Command::Exhaustive { input, max_edges } => {
            let g = load_graph(&input)?;
            let res = oracles::optimal_oriented_diameter(&g, max_edges)?;
            println!("enumerated: {}", res.enumerated);
            println!("strong: {}", res.strong_count);
            println!("best oriented radius: {}", res.best_rad);
            println!("best oriented diameter: {}", res.best_diam);
            print!(
                "best orientation:\n{}",
                serialize_orientation(&g, &res.best_orientation)
            );
            Ok(0)
        }
        Command::ExactRc { input, max_edges } => {
            let g = load_graph(&input)?;
            let rc = oracles::exact_rc(&g, max_edges)?;
            println!("exact rainbow connection number: {rc}");
            Ok(0)
        }
        Command::Report {
            input,
            face_len,
            edge_transitive,
            json,
        } => {
            let g = load_graph(&input)?;
            let report = harness::full_report(&g, face_len, edge_transitive)?;
            print!("{report}");
            if let Some(path) = json {
                let text = serde_json::to_string_pretty(&report)
                    .map_err(|e| Error::Internal(e.to_string()))?;
                write_output(Some(&path), &text)?;
            }
            let failed = report
                .theorems
                .iter()
                .any(|e| e.status == harness::Status::Fail);
            Ok(if failed { 1 } else { 0 })
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn build_spec(
    family: &str,
    depth: Option<u32>,
    r: Option<u32>,
    eta: Option<u32>,
    copies: Option<u64>,
    n: Option<usize>,
    m: Option<usize>,
    extra_ears: Option<usize>,
    k: Option<u32>,
    seed: u64,
) -> Result<FamilySpec, Error> {
    let need = |name: &str| Error::InvalidParam(format!("{family} requires --{name}"));
    Ok(match family {
        "triangle_tree" => FamilySpec::TriangleTree {
            depth: depth.ok_or_else(|| need("depth"))?,
        },
        "extremal_rc" => FamilySpec::ExtremalRc {
            r: r.ok_or_else(|| need("r"))?,
            eta: eta.ok_or_else(|| need("eta"))?,
            copies,
        },
        "wheel_example" => FamilySpec::WheelExample {
            r: r.ok_or_else(|| need("r"))?,
            k: k.ok_or_else(|| need("k"))?,
        },
        "random_bridgeless" => FamilySpec::RandomBridgeless {
            n: n.ok_or_else(|| need("n"))?,
            extra_ears: extra_ears.unwrap_or(0),
            seed,
        },
        "bipartite_dense" => FamilySpec::BipartiteDense {
            n: n.ok_or_else(|| need("n"))?,
            m: m.ok_or_else(|| need("m"))?,
            seed,
        },
        "disconnected_counterexample" => FamilySpec::DisconnectedCounterexample {
            n: n.ok_or_else(|| need("n"))?,
            m: m.ok_or_else(|| need("m"))?,
        },
        other => {
            return Err(Error::InvalidParam(format!("unknown family {other:?}")));
        }
    })
}

fn analyze(input: &str, json: Option<&str>) -> Result<u8, Error> {
    let g = load_graph(input)?;
    println!("n: {}", g.n());
    println!("m: {}", g.m());
    let (rad, diam, centers) = match metrics::radius_diameter_centers(&g) {
        Ok(v) => v,
        Err(Error::NotConnected) => (INF, INF, Vec::new()),
        Err(e) => return Err(e),
    };
    println!("rad: {}", fmt_dist(rad));
    println!("diam: {}", fmt_dist(diam));
    println!(
        "centers: {}",
        centers
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    );
    println!("girth: {}", fmt_dist(metrics::girth(&g)));
    let eta = if g.m() > 0 { cycles::eta(&g) } else { INF };
    println!("eta: {}", fmt_dist(eta));
    let bridges = metrics::bridges(&g);
    println!(
        "bridges: {}",
        if bridges.is_empty() {
            "(none)".to_string()
        } else {
            bridges
                .iter()
                .map(|e| e.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        }
    );
    let zeta = if bridges.is_empty() && rad != INF && g.n() >= 3 {
        match cycles::zeta_bruteforce(&g, 14) {
            Ok(z) => z.to_string(),
            Err(Error::TooLargeForZeta { n, max_n }) => {
                format!("skipped (n = {n} > {max_n})")
            }
            Err(e) => return Err(e),
        }
    } else {
        "skipped (needs a connected bridgeless graph)".to_string()
    };
    println!("zeta: {zeta}");
    if let Some(path) = json {
        let obj = serde_json::json!({
            "n": g.n(),
            "m": g.m(),
            "rad": if rad == INF { None } else { Some(rad) },
            "diam": if diam == INF { None } else { Some(diam) },
            "centers": centers,
            "girth": if metrics::girth(&g) == INF { None } else { Some(metrics::girth(&g)) },
            "eta": if eta == INF { None } else { Some(eta) },
            "bridges": bridges,
        });
        write_output(
            Some(path),
            &format!("{}\n", serde_json::to_string_pretty(&obj).unwrap()),
        )?;
    }
    Ok(0)
}

fn cmd_orient(input: &str, output: Option<&str>, trace_path: Option<&str>) -> Result<u8, Error> {
    let g = load_graph(input)?;
    let (o, trace) = orient::orient(&g)?;
    let report = orient::verify_orientation_bounds(&g, &o, &trace)?;
    println!("center: {}", trace.center);
    println!("radius: {}", trace.radius);
    println!("eta: {}", fmt_dist(trace.eta));
    println!(
        "oriented radius: {} (bound {})",
        report.rad.map_or("inf".into(), |v| v.to_string()),
        trace.bounds.rad
    );
    println!(
        "oriented diameter: {} (bound {})",
        report.diam.map_or("inf".into(), |v| v.to_string()),
        trace.bounds.diam
    );
    println!("strong: {}", report.strong);
    if let Some(path) = output {
        write_output(Some(path), &serialize_orientation(&g, &o))?;
    }
    if let Some(path) = trace_path {
        let text =
            serde_json::to_string_pretty(&trace).map_err(|e| Error::Internal(e.to_string()))?;
        write_output(Some(path), &format!("{text}\n"))?;
    }
    if report.pass {
        println!("result: PASS");
        Ok(0)
    } else {
        println!("result: FAIL");
        Ok(1)
    }
}

fn cmd_rainbow(
    input: &str,
    output: Option<&str>,
    trace_path: Option<&str>,
    verify: &str,
    certificates: Option<&str>,
) -> Result<u8, Error> {
    let g = load_graph(input)?;
    let (coloring, trace) = rainbow::rainbow_color(&g)?;
    let bound = rainbow::color_bound(trace.radius, trace.eta.max(3));
    println!("center: {}", trace.center);
    println!("radius: {}", trace.radius);
    println!("eta: {}", fmt_dist(trace.eta));
    println!("colors: {} (bound {})", trace.total_colors, bound);
    if let Some(path) = output {
        write_output(Some(path), &serialize_coloring(&g, &coloring))?;
    }
    if let Some(path) = trace_path {
        let text =
            serde_json::to_string_pretty(&trace).map_err(|e| Error::Internal(e.to_string()))?;
        write_output(Some(path), &format!("{text}\n"))?;
    }
    if let Some(path) = certificates {
        let mut lines = String::new();
        for x in 0..g.n() {
            for y in x + 1..g.n() {
                let cert = rainbow::extract_certificate(&g, &trace, x, y)?;
                let line =
                    serde_json::to_string(&cert).map_err(|e| Error::Internal(e.to_string()))?;
                lines.push_str(&line);
                lines.push('\n');
            }
        }
        write_output(Some(path), &lines)?;
    }
    match verify {
        "none" => Ok(0),
        "exact" => {
            if coloring.color_count() > 18 {
                return Err(Error::TooManyColors {
                    count: coloring.color_count(),
                    max: 18,
                });
            }
            let check = oracles::is_rainbow_connected(&g, &coloring, 18)?;
            if check.connected {
                println!("verify exact: PASS");
                Ok(0)
            } else {
                println!("verify exact: FAIL at pair {:?}", check.failing_pair);
                Ok(1)
            }
        }
        "certificate" => {
            for x in 0..g.n() {
                for y in x + 1..g.n() {
                    if let Err(e) = rainbow::extract_certificate(&g, &trace, x, y) {
                        println!("verify certificate: FAIL at pair ({x}, {y}): {e}");
                        return Ok(1);
                    }
                }
            }
            println!("verify certificate: PASS");
            Ok(0)
        }
        other => Err(Error::InvalidParam(format!(
            "unknown verify mode {other:?}; use none, exact, or certificate"
        ))),
    }
}

fn cmd_verify_orientation(
    graph: &str,
    orientation: &str,
    trace_path: Option<&str>,
) -> Result<u8, Error> {
    let g = load_graph(graph)?;
    let o = parse_orientation(&g, &read_input(orientation)?)?;
    if let Some(path) = trace_path {
        let trace: orient::OrientTrace = serde_json::from_str(&read_input(path)?)
            .map_err(|e| Error::TraceMismatch(e.to_string()))?;
        let report = orient::verify_orientation_bounds(&g, &o, &trace)?;
        println!(
            "strong: {} | oriented rad: {} (bound {}) | oriented diam: {} (bound {})",
            report.strong,
            report.rad.map_or("inf".into(), |v| v.to_string()),
            report.rad_bound,
            report.diam.map_or("inf".into(), |v| v.to_string()),
            report.diam_bound
        );
        println!("result: {}", if report.pass { "PASS" } else { "FAIL" });
        return Ok(if report.pass { 0 } else { 1 });
    }
    let strong = oracles::is_strongly_connected(&g, &o);
    let (rad, eta) = {
        let (rad, _, _) = metrics::radius_diameter_centers(&g)?;
        (rad, cycles::eta(&g))
    };
    if eta == INF {
        return Err(Error::Bridged(metrics::bridges(&g)));
    }
    let (rad_bound, diam_bound) = orient::orientation_bounds(rad, eta.max(3));
    let measured = oracles::directed_rad_diam(&g, &o);
    let pass = strong && measured.is_some_and(|(r, d)| r <= rad_bound && d <= diam_bound);
    match measured {
        Some((r, d)) => println!(
            "strong: {strong} | oriented rad: {r} (bound {rad_bound}) | oriented diam: {d} (bound {diam_bound})"
        ),
        None => println!("strong: false"),
    }
    println!("result: {}", if pass { "PASS" } else { "FAIL" });
    Ok(if pass { 0 } else { 1 })
}

fn cmd_verify_coloring(
    graph: &str,
    coloring: &str,
    verify: &str,
    trace_path: Option<&str>,
) -> Result<u8, Error> {
    let g = load_graph(graph)?;
    let c = parse_coloring(&g, &read_input(coloring)?)?;
    match verify {
        "exact" => {
            if c.color_count() > 18 {
                eprintln!(
                    "error: {} colors exceed the exact cap 18; use --verify certificate with the construction trace",
                    c.color_count()
                );
                return Ok(2);
            }
            let check = oracles::is_rainbow_connected(&g, &c, 18)?;
            match check.failing_pair {
                None => {
                    println!("rainbow connected: true");
                    Ok(0)
                }
                Some((x, y)) => {
                    println!("rainbow connected: false (pair {x} {y})");
                    Ok(1)
                }
            }
        }
        "certificate" => {
            let path = trace_path
                .ok_or_else(|| Error::InvalidParam("--verify certificate needs --trace".into()))?;
            let trace: rainbow::ColorTrace = serde_json::from_str(&read_input(path)?)
                .map_err(|e| Error::TraceMismatch(e.to_string()))?;
            for x in 0..g.n() {
                for y in x + 1..g.n() {
                    let cert = rainbow::extract_certificate(&g, &trace, x, y)?;
                    // The certificate must agree with the coloring file.
                    for (w, &col) in cert.path.windows(2).zip(&cert.colors) {
                        let e = g.edge_between(w[0], w[1]).unwrap();
                        if c.color(e) != col {
                            println!("rainbow connected: false (trace mismatch at edge {e})");
                            return Ok(1);
                        }
                    }
                }
            }
            println!("rainbow connected: true (certificates)");
            Ok(0)
        }
        other => Err(Error::InvalidParam(format!(
            "unknown verify mode {other:?}; use exact or certificate"
        ))),
    }
}
