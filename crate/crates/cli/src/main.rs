use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use circdiam::geometry::find_vertex;
use circdiam::scalar::{format_compact, format_rational};
use circdiam::walks::circuit_diameter_of;
use circdiam::{
    build_report, build_skeleton, builtin, enumerate_circuits, parse_hrep, perturb_check,
    verify_walk, HPolyhedron, Scalar, WalkCertificate, WalkSpace,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

/// Exact circuit walks and circuit diameters of rational polyhedra.
///
/// INSTANCE is `@name` for a built-in (u4, q4_sym, q4_pert, cube(d), simplex(d))
/// or a path to an H-representation file.
#[derive(Parser)]
#[command(name = "circdiam", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sizes, diameters and Hirsch-bound flags.
    Report {
        instance: String,
        #[command(flatten)]
        depth: Depth,
        #[command(flatten)]
        out: Output,
    },
    /// Vertices with their tight facets.
    Vertices {
        instance: String,
        #[command(flatten)]
        out: Output,
    },
    /// Canonical circuits.
    Circuits {
        instance: String,
        #[command(flatten)]
        out: Output,
    },
    /// The vertex-edge graph.
    Skeleton {
        instance: String,
        #[command(flatten)]
        out: Output,
    },
    /// Distance between two vertices given by label.
    Distance {
        instance: String,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        #[arg(long, value_enum, default_value_t = Mode::Circuit)]
        mode: Mode,
        #[command(flatten)]
        depth: Depth,
        /// Write a walk certificate (circuit mode only).
        #[arg(long, value_name = "PATH")]
        emit_cert: Option<PathBuf>,
        #[command(flatten)]
        out: Output,
    },
    /// Largest distance over ordered vertex pairs.
    Diameter {
        instance: String,
        #[arg(long, value_enum, default_value_t = Mode::Circuit)]
        mode: Mode,
        #[command(flatten)]
        depth: Depth,
        /// Write a certificate for the witnessing pair (circuit mode only).
        #[arg(long, value_name = "PATH")]
        emit_cert: Option<PathBuf>,
        #[command(flatten)]
        out: Output,
    },
    /// Re-check a walk certificate.
    VerifyWalk {
        certificate: PathBuf,
        /// Polyhedron to check against, instead of the one named in the certificate.
        #[arg(long)]
        instance: Option<String>,
        #[command(flatten)]
        out: Output,
    },
    /// Compare the combinatorial type and circuit diameters of two realizations.
    PerturbCheck {
        first: String,
        second: String,
        #[command(flatten)]
        depth: Depth,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Args)]
struct Depth {
    /// Longest circuit walk searched.
    #[arg(long, default_value_t = 5)]
    max_depth: usize,
}

#[derive(Args)]
struct Output {
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Graph,
    Circuit,
}

impl Mode {
    fn name(self) -> &'static str {
        match self {
            Mode::Graph => "graph",
            Mode::Circuit => "circuit",
        }
    }
}

fn load(instance: &str) -> Result<HPolyhedron> {
    if let Some(name) = instance.strip_prefix('@') {
        return Ok(builtin(name)?);
    }
    let text = fs::read_to_string(instance).with_context(|| format!("cannot read {instance}"))?;
    parse_hrep(&text).with_context(|| format!("in {instance}"))
}

fn rationals<S: Scalar>(x: &[S]) -> Vec<String> {
    x.iter().map(|v| format_rational(&v.to_ratio())).collect()
}

fn compact<S: Scalar>(x: &[S]) -> String {
    let parts: Vec<String> = x.iter().map(|v| format_compact(&v.to_ratio())).collect();
    format!("({})", parts.join(", "))
}

fn print_json(value: &Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("json values serialize")
    );
}

fn depth_text(d: Option<usize>, max_depth: usize) -> String {
    d.map_or_else(|| format!("> {max_depth}"), |d| d.to_string())
}

fn write_certificate(path: &Path, cert: &WalkCertificate) -> Result<()> {
    fs::write(path, cert.to_json() + "\n")
        .with_context(|| format!("cannot write {}", path.display()))
}

fn report(instance: &str, max_depth: usize, json: bool) -> Result<ExitCode> {
    let p = load(instance)?;
    let r = build_report(instance, &p, max_depth)?;
    if json {
        print_json(&serde_json::to_value(&r)?);
    } else {
        println!("{r}");
    }
    Ok(ExitCode::SUCCESS)
}

fn vertices(instance: &str, json: bool) -> Result<ExitCode> {
    let p = load(instance)?;
    let vs = circdiam::enumerate_vertices(&p);
    if json {
        let list: Vec<Value> = vs
            .iter()
            .map(|v| json!({ "label": v.label, "coords": rationals(&v.coords), "tight": v.tight.to_vec() }))
            .collect();
        print_json(&Value::Array(list));
    } else {
        for v in &vs {
            println!("{}  {}  tight {}", v.label, compact(&v.coords), v.tight);
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn circuits(instance: &str, json: bool) -> Result<ExitCode> {
    let p = load(instance)?;
    let cs = enumerate_circuits(&p);
    if json {
        let list: Vec<Value> = cs
            .iter()
            .map(|c| {
                json!({
                    "direction": c.direction.components().iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                    "support": c.image_support.to_vec(),
                    "zero_rows": c.zero_rows.to_vec(),
                })
            })
            .collect();
        print_json(&Value::Array(list));
    } else {
        for c in cs.iter() {
            println!("{}  support {}", c.direction, c.image_support);
        }
        println!("{} circuits, {} signed", cs.len(), cs.signed_len());
    }
    Ok(ExitCode::SUCCESS)
}

fn skeleton(instance: &str, json: bool) -> Result<ExitCode> {
    let p = load(instance)?;
    let s = build_skeleton(&p);
    let label = |i: usize| s.vertices[i].label.clone();
    if json {
        let edges: Vec<Value> = s
            .edges
            .iter()
            .map(|&(u, v)| json!([label(u), label(v)]))
            .collect();
        print_json(&json!({
            "vertices": s.vertices.iter().map(|v| v.label.clone()).collect::<Vec<_>>(),
            "edges": edges,
        }));
    } else {
        for &(u, v) in &s.edges {
            println!("{} -- {}", label(u), label(v));
        }
        println!("{} vertices, {} edges", s.vertex_count(), s.edge_count());
    }
    Ok(ExitCode::SUCCESS)
}

fn distance(
    instance: &str,
    from: &str,
    to: &str,
    mode: Mode,
    max_depth: usize,
    emit_cert: Option<&Path>,
    json: bool,
) -> Result<ExitCode> {
    let p = load(instance)?;
    if emit_cert.is_some() && mode == Mode::Graph {
        bail!("--emit-cert needs --mode circuit");
    }
    let s = build_skeleton(&p);
    let u = find_vertex(&s.vertices, from)?;
    let v = find_vertex(&s.vertices, to)?;
    let d = match mode {
        Mode::Graph => s.graph_distance(u, v)?,
        Mode::Circuit => {
            let space = WalkSpace::new(&p);
            let search = space.search(
                &s.vertices[u].coords,
                &[s.vertices[v].coords.clone()],
                max_depth,
            );
            if let (Some(path), Some(_)) = (emit_cert, search.distances()[0]) {
                write_certificate(path, &search.certificate(0, instance)?)?;
            }
            search.distances()[0]
        }
    };
    if json {
        print_json(&json!({
            "instance": instance,
            "mode": mode.name(),
            "from": from,
            "to": to,
            "max_depth": max_depth,
            "distance": d,
        }));
    } else {
        let d = match mode {
            Mode::Graph => d.map_or_else(|| "unreachable".to_string(), |d| d.to_string()),
            Mode::Circuit => depth_text(d, max_depth),
        };
        println!("{d}");
    }
    Ok(ExitCode::SUCCESS)
}

fn diameter(
    instance: &str,
    mode: Mode,
    max_depth: usize,
    emit_cert: Option<&Path>,
    json: bool,
) -> Result<ExitCode> {
    let p = load(instance)?;
    if emit_cert.is_some() && mode == Mode::Graph {
        bail!("--emit-cert needs --mode circuit");
    }
    let s = build_skeleton(&p);
    if s.vertex_count() < 2 {
        bail!("{instance} has fewer than two vertices");
    }
    let (value, witness) = match mode {
        Mode::Graph => {
            let all = s.all_distances();
            let value = s.graph_diameter();
            let witness = value.and_then(|best| {
                (0..all.len())
                    .flat_map(|u| (0..all.len()).map(move |v| (u, v)))
                    .find(|&(u, v)| u != v && all[u][v] == Some(best))
            });
            (value, witness)
        }
        Mode::Circuit => {
            let space = WalkSpace::new(&p);
            let d = circuit_diameter_of(&space, &s.vertices, max_depth)?;
            if let (Some(path), Some((u, v))) = (emit_cert, d.witness) {
                let target = s.vertices[v].coords.clone();
                let search = space.search(&s.vertices[u].coords, &[target], max_depth);
                write_certificate(path, &search.certificate(0, instance)?)?;
            }
            (d.value, d.witness)
        }
    };
    let witness = witness.map(|(u, v)| (s.vertices[u].label.clone(), s.vertices[v].label.clone()));
    if json {
        print_json(&json!({
            "instance": instance,
            "mode": mode.name(),
            "max_depth": max_depth,
            "diameter": value,
            "witness": witness.as_ref().map(|(u, v)| json!({ "from": u, "to": v })),
        }));
    } else {
        let text = match mode {
            Mode::Graph => value.map_or_else(|| "undefined".to_string(), |d| d.to_string()),
            Mode::Circuit => depth_text(value, max_depth),
        };
        match witness {
            Some((u, v)) => println!("{text}  ({u} -> {v})"),
            None => println!("{text}"),
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn verify(path: &Path, instance: Option<&str>, json: bool) -> Result<ExitCode> {
    let text =
        fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    let cert =
        WalkCertificate::from_json(&text).with_context(|| format!("in {}", path.display()))?;
    let instance = instance.unwrap_or(&cert.instance);
    let p = load(instance)?;
    let outcome = verify_walk(&p, &cert);
    if json {
        print_json(&json!({
            "instance": instance,
            "steps": cert.len(),
            "valid": outcome.is_ok(),
            "violation": outcome.as_ref().err().map(|e| e.to_string()),
        }));
    } else {
        match &outcome {
            Ok(()) => println!("ok: valid circuit walk of length {}", cert.len()),
            Err(e) => println!("violation: {e}"),
        }
    }
    Ok(if outcome.is_ok() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn perturb(first: &str, second: &str, max_depth: usize, json: bool) -> Result<ExitCode> {
    let a = load(first)?;
    let b = load(second)?;
    let check = perturb_check((first, &a), (second, &b), max_depth)?;
    if json {
        print_json(&json!({
            "equivalent": check.equivalent,
            "max_depth": max_depth,
            "first": { "instance": first, "circuit_diameter": check.first.circuit_diameter },
            "second": { "instance": second, "circuit_diameter": check.second.circuit_diameter },
        }));
    } else {
        println!(
            "{}",
            if check.equivalent {
                "combinatorially equivalent"
            } else {
                "not combinatorially equivalent"
            }
        );
        println!(
            "{first}: circuit diameter {}",
            depth_text(check.first.circuit_diameter, max_depth)
        );
        println!(
            "{second}: circuit diameter {}",
            depth_text(check.second.circuit_diameter, max_depth)
        );
    }
    Ok(if check.equivalent {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Report {
            instance,
            depth,
            out,
        } => report(&instance, depth.max_depth, out.json),
        Command::Vertices { instance, out } => vertices(&instance, out.json),
        Command::Circuits { instance, out } => circuits(&instance, out.json),
        Command::Skeleton { instance, out } => skeleton(&instance, out.json),
        Command::Distance {
            instance,
            from,
            to,
            mode,
            depth,
            emit_cert,
            out,
        } => distance(
            &instance,
            &from,
            &to,
            mode,
            depth.max_depth,
            emit_cert.as_deref(),
            out.json,
        ),
        Command::Diameter {
            instance,
            mode,
            depth,
            emit_cert,
            out,
        } => diameter(
            &instance,
            mode,
            depth.max_depth,
            emit_cert.as_deref(),
            out.json,
        ),
        Command::VerifyWalk {
            certificate,
            instance,
            out,
        } => verify(&certificate, instance.as_deref(), out.json),
        Command::PerturbCheck {
            first,
            second,
            depth,
            out,
        } => perturb(&first, &second, depth.max_depth, out.json),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
