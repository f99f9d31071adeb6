//! Command-line front-end. Every subcommand reads weights as `p1,p2,p3`,
//! elements in the shared text grammar, and emits either a plain table or
//! JSON (`--format json` / `--json`). Exit codes: 0 success, 1 usage or
//! domain error (including tubular preconditions), 2 when a verification
//! subcommand finds a mismatch.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use extbundle::k0::{self, K0Basis};
use extbundle::orbits::{self, OrbitMethods, OrbitReport};
use extbundle::selftest::{self, SelftestConfig};
use extbundle::stable::{self, TiltingKind};
use extbundle::{bundles, Error, ExtensionBundle, Result, WeightTriple};

#[derive(Parser)]
#[command(
    name = "extbundle",
    version,
    about = "Exact arithmetic for extension bundles on weighted projective lines"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Shorthand for --format json.
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
}

impl Cli {
    fn format(&self) -> Format {
        if self.json {
            Format::Json
        } else {
            self.format
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Weight type summary: class, degree map, omega, K0 rank, group index.
    Info {
        /// Weight triple, e.g. 2,3,7.
        weights: String,
    },
    /// Normal form and invariants of one element.
    Normalize {
        weights: String,
        /// Element, e.g. "2x2+4x3-c" or "(0,2,4,-1)".
        element: String,
    },
    /// Grothendieck-group basis, or the class of the line bundle O(x).
    K0 {
        weights: String,
        /// Optional element x for the class of O(x).
        element: Option<String>,
    },
    /// Isomorphism test: is E<x> isomorphic to E<y>(z)?
    Iso {
        weights: String,
        /// Interior point x.
        x: String,
        /// Interior point y.
        y: String,
        /// Twist z.
        z: String,
    },
    /// Full report for one extension bundle E<x>(t).
    Bundle {
        weights: String,
        /// Interior point x.
        interior: String,
        /// Line-bundle twist t.
        #[arg(long, default_value = "0")]
        twist: String,
    },
    /// Klein four-group orbit count on interior points, three ways.
    Orbits {
        weights: String,
        /// Emit the orbit blocks as element lists.
        #[arg(long)]
        list: bool,
    },
    /// Orbit count up to twist and translate together (non-tubular only).
    TauOrbits {
        weights: String,
        /// Emit the orbit blocks as bundle lists.
        #[arg(long)]
        list: bool,
    },
    /// Build a tilting object; for the t1/t2 ladders also the quiver.
    Tilting {
        weights: String,
        /// Which tilting object.
        #[arg(long, value_enum, default_value_t = TiltingKind::Cub)]
        kind: TiltingKind,
        /// Write the endomorphism quiver in DOT format to this path.
        #[arg(long)]
        dot: Option<PathBuf>,
        /// List the summands.
        #[arg(long)]
        list: bool,
    },
    /// Run every cross-checking suite over a weight sweep.
    Selftest {
        /// Largest weight in the sweep (at least 2).
        #[arg(long, default_value_t = 6)]
        max_weight: i64,
        /// Miswire the flip action to demonstrate failure detection.
        #[arg(long, hide = true)]
        corrupt_sigma: bool,
    },
}

fn parse_weights(s: &str) -> Result<WeightTriple> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != 3 {
        return Err(Error::Parse(format!(
            "expected weights as p1,p2,p3, got {s:?}"
        )));
    }
    let mut p = [0i64; 3];
    for (slot, part) in p.iter_mut().zip(&parts) {
        *slot = part
            .parse()
            .map_err(|_| Error::Parse(format!("invalid weight {part:?}")))?;
    }
    WeightTriple::new(p[0], p[1], p[2])
}

fn emit(format: Format, table: &[String], value: Value) {
    match format {
        Format::Table => {
            for line in table {
                println!("{line}");
            }
        }
        Format::Json => {
            println!("{}", serde_json::to_string_pretty(&value).unwrap());
        }
    }
}

fn cmd_info(format: Format, weights: &str) -> Result<i32> {
    let w = parse_weights(weights)?;
    let basis = K0Basis::new(w);
    let index: Option<i64> = w.index_mod_omega().ok();
    let table = vec![
        format!("weights: ({},{},{})", w.weight(0), w.weight(1), w.weight(2)),
        format!("class: {}", w.classify()),
        format!("lcm: {}", w.lcm()),
        format!(
            "delta: x1 -> {}, x2 -> {}, x3 -> {}, c -> {}",
            w.delta_gen(0),
            w.delta_gen(1),
            w.delta_gen(2),
            w.lcm()
        ),
        format!("omega: {}", w.omega()),
        format!("delta(omega): {}", w.delta_omega()),
        format!("k0 rank: {}", basis.size()),
        format!(
            "index [L : Z*omega]: {}",
            index.map_or_else(|| "infinite".to_string(), |n| n.to_string())
        ),
    ];
    let value = json!({
        "weights": w.weights(),
        "class": w.classify(),
        "lcm": w.lcm(),
        "delta_gen": [w.delta_gen(0), w.delta_gen(1), w.delta_gen(2)],
        "delta_c": w.lcm(),
        "omega": w.omega().to_string(),
        "delta_omega": w.delta_omega(),
        "k0_rank": basis.size(),
        "index_mod_omega": index,
    });
    emit(format, &table, value);
    Ok(0)
}

fn cmd_normalize(format: Format, weights: &str, element: &str) -> Result<i32> {
    let w = parse_weights(weights)?;
    let x = w.parse(element)?;
    let [l1, l2, l3] = x.coords();
    let mut table = vec![
        format!("input: {element}"),
        format!("normal: {x}"),
        format!("coords: ({l1},{l2},{l3}) + {}c", x.c_coeff()),
        format!("delta: {}", x.delta()),
        format!("nonneg: {}", x.is_nonneg()),
    ];
    let mut value = serde_json::Map::new();
    value.insert("input".into(), json!(element));
    value.insert("normal".into(), json!(x.to_string()));
    value.insert("coords".into(), json!([l1, l2, l3]));
    value.insert("c".into(), json!(x.c_coeff()));
    value.insert("delta".into(), json!(x.delta()));
    value.insert("nonneg".into(), json!(x.is_nonneg()));
    if let Ok(multiple) = x.in_z_omega() {
        table.push(format!(
            "omega multiple: {}",
            multiple.map_or_else(|| "no".to_string(), |n| format!("{n}"))
        ));
        value.insert("omega_multiple".into(), json!(multiple));
    }
    emit(format, &table, Value::Object(value));
    Ok(0)
}

fn cmd_k0(format: Format, weights: &str, element: Option<&str>) -> Result<i32> {
    let w = parse_weights(weights)?;
    let basis = K0Basis::new(w);
    match element {
        None => {
            let mut table = vec![format!("size: {}", basis.size())];
            for (i, label) in basis.labels().iter().enumerate() {
                table.push(format!("basis[{i}]: [{label}]"));
            }
            let value = json!({
                "weights": w.weights(),
                "size": basis.size(),
                "basis": basis.labels(),
            });
            emit(format, &table, value);
        }
        Some(text) => {
            let x = w.parse(text)?;
            let class = k0::line_bundle_class(&x);
            let table = vec![
                format!("element: {x}"),
                format!("class: {class}"),
                format!("rank: {}", class.rank()),
                format!("degree: {}", class.degree()),
                format!("determinant: {}", class.determinant()),
            ];
            let value = json!({
                "weights": w.weights(),
                "element": x.to_string(),
                "class": class,
                "rank": class.rank(),
                "degree": class.degree(),
                "determinant": class.determinant().to_string(),
            });
            emit(format, &table, value);
        }
    }
    Ok(0)
}

fn cmd_iso(format: Format, weights: &str, x: &str, y: &str, z: &str) -> Result<i32> {
    let w = parse_weights(weights)?;
    let x = w.parse(x)?;
    let y = w.parse(y)?;
    let z = w.parse(z)?;
    let e = ExtensionBundle::of_interior(x.clone())?;
    let f = ExtensionBundle::new(z.clone(), y.clone())?;
    let isomorphic = bundles::iso_test_general(&e, &f);
    let table = vec![
        format!("E<{x}> vs E<{y}>({z})"),
        format!("isomorphic: {}", if isomorphic { "yes" } else { "no" }),
    ];
    let value = json!({
        "weights": w.weights(),
        "x": x.to_string(),
        "y": y.to_string(),
        "z": z.to_string(),
        "isomorphic": isomorphic,
    });
    emit(format, &table, value);
    Ok(0)
}

fn cmd_bundle(format: Format, weights: &str, interior: &str, twist: &str) -> Result<i32> {
    let w = parse_weights(weights)?;
    let x = w.parse(interior)?;
    let t = w.parse(twist)?;
    let e = ExtensionBundle::new(t, x)?;
    let report = e.report();
    let table = vec![
        format!("bundle: E<{}>({})", report.interior, report.twist),
        format!("auslander: {}", report.auslander),
        format!("canonical interior: {}", report.canonical_interior),
        format!("slope: {}", report.slope),
        format!("stability: {}", e.stability()),
        format!("cover: {}", report.cover.join(", ")),
        format!("hull: {}", report.hull.join(", ")),
        format!("class: {}", e.k0_class()),
    ];
    emit(format, &table, serde_json::to_value(&report).unwrap());
    Ok(0)
}

fn orbit_tables(w: &WeightTriple, report: &OrbitReport) -> Vec<String> {
    let mut table = vec![
        format!("weights: ({},{},{})", w.weight(0), w.weight(1), w.weight(2)),
        format!("count: {}", report.count),
        format!("formula: {}", report.method.formula),
    ];
    if let Some(b) = report.method.burnside {
        table.push(format!("burnside: {b}"));
    }
    table.push(format!("brute: {}", report.method.brute));
    if let Some(blocks) = &report.blocks {
        for (i, block) in blocks.iter().enumerate() {
            table.push(format!("block[{i}]: {}", block.join(", ")));
        }
    }
    table
}

fn cmd_orbits(format: Format, weights: &str, list: bool) -> Result<i32> {
    let w = parse_weights(weights)?;
    let formula = orbits::pic_orbit_count_formula(&w);
    let burnside = orbits::pic_orbit_count_burnside(&w);
    let partition = orbits::pic_orbit_partition(&w);
    let brute = partition.count();
    let blocks = list.then(|| {
        let items = orbits::interiors(&w);
        partition
            .blocks
            .iter()
            .map(|b| b.iter().map(|&i| items[i].to_string()).collect())
            .collect()
    });
    let report = OrbitReport {
        count: formula,
        method: OrbitMethods {
            formula,
            burnside: Some(burnside),
            brute,
        },
        blocks,
    };
    emit(
        format,
        &orbit_tables(&w, &report),
        serde_json::to_value(&report).unwrap(),
    );
    if formula != burnside || formula != brute {
        eprintln!("error: orbit-count methods disagree");
        return Ok(2);
    }
    Ok(0)
}

fn cmd_tau_orbits(format: Format, weights: &str, list: bool) -> Result<i32> {
    let w = parse_weights(weights)?;
    let formula = orbits::tau_orbit_count_formula(&w)?;
    let data = orbits::tau_orbit_partition(&w)?;
    let brute = data.count();
    let blocks = list.then(|| {
        data.blocks
            .iter()
            .map(|b| {
                b.iter()
                    .map(|&i| {
                        let (rep, x) = data.pair(i);
                        format!("E<{x}>({rep})")
                    })
                    .collect()
            })
            .collect()
    });
    let report = OrbitReport {
        count: formula,
        method: OrbitMethods {
            formula,
            burnside: None,
            brute,
        },
        blocks,
    };
    emit(
        format,
        &orbit_tables(&w, &report),
        serde_json::to_value(&report).unwrap(),
    );
    if formula != brute || !data.free {
        eprintln!("error: tau-orbit methods disagree");
        return Ok(2);
    }
    Ok(0)
}

fn cmd_tilting(
    format: Format,
    weights: &str,
    kind: TiltingKind,
    dot: Option<&PathBuf>,
    list: bool,
) -> Result<i32> {
    let w = parse_weights(weights)?;
    let obj = stable::build_tilting(&w, kind)?;
    if kind == TiltingKind::Cub {
        if dot.is_some() {
            return Err(Error::CubNotSupported);
        }
        let distinct = obj.pairwise_nonisomorphic();
        let mut table = vec![
            format!("kind: {kind}"),
            format!("summands: {}", obj.summands().len()),
            format!("pairwise nonisomorphic: {distinct}"),
        ];
        if list {
            for s in obj.summand_labels() {
                table.push(format!("  {s}"));
            }
        }
        let value = json!({
            "weights": w.weights(),
            "kind": kind,
            "summands": obj.summand_labels(),
            "pairwise_nonisomorphic": distinct,
        });
        emit(format, &table, value);
        return Ok(0);
    }
    let extension_free = stable::check_extension_free(&obj)?.is_empty();
    let quiver = stable::build_quiver(&obj)?;
    let end_dim = stable::end_dimension(&obj)?;
    if let Some(path) = dot {
        std::fs::write(path, quiver.to_dot())
            .map_err(|e| Error::Parse(format!("cannot write {}: {e}", path.display())))?;
    }
    let mut table = vec![
        format!("kind: {kind}"),
        format!("vertices: {}", quiver.vertices.len()),
        format!(
            "arrows: {} (x: {}, y: {}, z: {})",
            quiver.arrows.len(),
            quiver.arrow_count('x'),
            quiver.arrow_count('y'),
            quiver.arrow_count('z')
        ),
        format!("relations: {}", quiver.relations.len()),
        format!("end dim: {end_dim}"),
        format!("extension free: {extension_free}"),
    ];
    if list {
        for s in obj.summand_labels() {
            table.push(format!("  {s}"));
        }
    }
    if let Some(path) = dot {
        table.push(format!("dot written: {}", path.display()));
    }
    let arrows: Vec<Value> = quiver
        .arrows
        .iter()
        .map(|a| {
            json!({
                "from": quiver.vertices[a.from].name,
                "to": quiver.vertices[a.to].name,
                "label": a.label.to_string(),
            })
        })
        .collect();
    let value = json!({
        "weights": w.weights(),
        "kind": kind,
        "vertices": quiver.vertices.iter().map(|v| v.name.clone()).collect::<Vec<_>>(),
        "arrows": arrows,
        "relations": quiver.relation_strings(),
        "end_dim": end_dim,
        "extension_free": extension_free,
    });
    emit(format, &table, value);
    Ok(0)
}

fn cmd_selftest(format: Format, max_weight: i64, corrupt_sigma: bool) -> Result<i32> {
    if max_weight < 2 {
        return Err(Error::Parse(format!(
            "max weight must be at least 2, got {max_weight}"
        )));
    }
    let cfg = SelftestConfig {
        max_weight,
        corrupt_sigma,
    };
    let reports = selftest::run_selftest(&cfg);
    let passed = reports.iter().all(|r| r.passed());
    let mut table = Vec::new();
    for r in &reports {
        if r.passed() {
            table.push(format!("{}: PASS ({} checks)", r.name, r.checks));
        } else {
            table.push(format!(
                "{}: FAIL ({} of {} checks)",
                r.name, r.failure_count, r.checks
            ));
            for f in &r.failures {
                table.push(format!("  {f}"));
            }
        }
    }
    table.push(format!("selftest: {}", if passed { "PASS" } else { "FAIL" }));
    let suites: Vec<Value> = reports
        .iter()
        .map(|r| {
            json!({
                "name": r.name,
                "checks": r.checks,
                "failure_count": r.failure_count,
                "failures": r.failures,
                "passed": r.passed(),
            })
        })
        .collect();
    let value = json!({
        "max_weight": max_weight,
        "corrupt_sigma": corrupt_sigma,
        "suites": suites,
        "passed": passed,
    });
    emit(format, &table, value);
    Ok(if passed { 0 } else { 2 })
}

fn execute(cli: &Cli) -> Result<i32> {
    let format = cli.format();
    match &cli.command {
        Command::Info { weights } => cmd_info(format, weights),
        Command::Normalize { weights, element } => cmd_normalize(format, weights, element),
        Command::K0 { weights, element } => cmd_k0(format, weights, element.as_deref()),
        Command::Iso { weights, x, y, z } => cmd_iso(format, weights, x, y, z),
        Command::Bundle {
            weights,
            interior,
            twist,
        } => cmd_bundle(format, weights, interior, twist),
        Command::Orbits { weights, list } => cmd_orbits(format, weights, *list),
        Command::TauOrbits { weights, list } => cmd_tau_orbits(format, weights, *list),
        Command::Tilting {
            weights,
            kind,
            dot,
            list,
        } => cmd_tilting(format, weights, *kind, dot.as_ref(), *list),
        Command::Selftest {
            max_weight,
            corrupt_sigma,
        } => cmd_selftest(format, *max_weight, *corrupt_sigma),
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    match execute(&cli) {
        Ok(code) => std::process::exit(code),
        Err(err) => {
            eprintln!("error: {err}");
            std::process::exit(1);
        }
    }
}
