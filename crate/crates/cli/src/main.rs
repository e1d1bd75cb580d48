//! `vpoly`: command-line front end for the exact virtual-polytope toolkit.
//!
//! Every subcommand reads one JSON document (from `--in`, inline `--json`,
//! or stdin), writes one JSON result to stdout (and `--out` when given),
//! and optionally emits an SVG rendering with `--svg`. Exit status 0 means
//! success, 2 means a verification check computed a falsifying verdict,
//! and 1 means the input was unusable (with a machine-readable error
//! object on stdout).

use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Deserialize;
use serde_json::{json, Value};

use vpoly::bkk::{
    bkk_number, count_torus_roots_2d, sample_system, verify_bkk_pair, Certificate, Tolerances,
};
use vpoly::chain::{chains_equal, inverse, Chain};
use vpoly::error::Error;
use vpoly::fan::{analogous, normal_fan};
use vpoly::json::{
    ArrangementJson, ChainJson, CycleJson, PolynomialJson, PolytopeJson, SupportFunctionJson,
    SystemJson,
};
use vpoly::measures::{
    dilate_chain, lattice_measure, minkowski_polynomiality_check, mixed_volume,
};
use vpoly::nerve::{compatible_map, nerve, wedge_check};
use vpoly::simplicial::{homology_ranks, SimplicialComplex};
use vpoly::suite::run_all;
use vpoly::svg::{svg_polytopes, svg_segments, svg_winding_chain};
use vpoly::vector::Vector;
use vpoly::winding::{
    chain_winding_check, gauss_type_map, smooth_support_demo, virtual_volume_from_support,
    winding_chain, winding_number,
};
use vpoly::{format_rat, parse_rat};

#[derive(Parser)]
#[command(name = "vpoly", version, about = "Exact virtual-polytope toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Input JSON file (`-` for stdin).
    #[arg(long, global = true)]
    r#in: Option<String>,
    /// Inline input JSON (alternative to --in).
    #[arg(long, global = true)]
    json: Option<String>,
    /// Write the result JSON here as well as to stdout.
    #[arg(long, global = true)]
    out: Option<String>,
    /// Write an SVG rendering here (supported by the planar subcommands).
    #[arg(long, global = true)]
    svg: Option<String>,
    /// Seed for randomized subcommands.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Maximum relative residual accepted at a claimed root.
    #[arg(long, global = true)]
    tol_residual: Option<f64>,
    /// Tolerance for membership of a coordinate in the complex torus.
    #[arg(long, global = true)]
    tol_torus: Option<f64>,
    /// Clustering radius when grouping nearby numeric roots.
    #[arg(long, global = true)]
    tol_cluster: Option<f64>,
}

#[derive(Subcommand)]
enum Command {
    /// Convex hull of a point set.
    Hull,
    /// Minkowski sum of two polytopes.
    MinkowskiSum,
    /// Support value of a polytope in a direction.
    SupportValue,
    /// Normal fan of a polytope.
    NormalFan,
    /// Whether two polytopes have the same normal fan.
    Analogous,
    /// Integer points of a polytope.
    LatticePoints,
    /// Euclidean volume of a polytope.
    Volume,
    /// Mixed volume of a tuple of polytopes.
    MixedVolume,
    /// Inverse chain of a polytope, verified against the unit chain.
    InvertCheck,
    /// Weighted lattice-point count of a convex chain.
    LatticeMeasure,
    /// Dilation chain of integer (possibly negative) Minkowski powers.
    DilateChain,
    /// Fit Vol(lambda A + mu B) as an exact homogeneous polynomial.
    MinkowskiCheck,
    /// Winding number of a cycle around a point.
    WindingNumber,
    /// Winding-number chain of a closed planar cycle.
    WindingChain,
    /// Canonical Gauss-type map of piecewise-linear support data.
    GaussMap,
    /// Signed volume of the winding chain of support data.
    SupportVolume,
    /// Compare the truncated chain-algebra product with the winding chain.
    ChainWindingCheck,
    /// Numeric volume demo for a smoothly supported disk.
    SmoothDemo,
    /// Nerve complex of a union of affine subspaces.
    Nerve,
    /// Rational Betti numbers of a simplicial complex.
    Homology,
    /// Check that the nerve of a line family is a wedge of circles.
    WedgeCheck,
    /// Compatible map from a subcomplex into an arrangement, if one exists.
    CompatibleMap,
    /// BKK number of a polytope tuple.
    Bkk,
    /// Random Laurent system with prescribed Newton polytopes.
    SampleSystem,
    /// Count torus roots of a 2x2 Laurent system numerically.
    CountRoots,
    /// End-to-end check: numeric root count against the BKK prediction.
    Harness,
    /// Run every acceptance criterion and print a pass/fail table.
    Suite,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut tol = Tolerances::default();
    if let Some(t) = cli.tol_residual {
        tol.residual = t;
    }
    if let Some(t) = cli.tol_torus {
        tol.torus = t;
    }
    if let Some(t) = cli.tol_cluster {
        tol.cluster = t;
    }
    match run(&cli, &tol) {
        Ok(Outcome { result, verified, svg }) => {
            if let (Some(path), Some(body)) = (&cli.svg, &svg) {
                if let Err(e) = std::fs::write(path, body) {
                    return fail(&cli, "io", &format!("cannot write {path}: {e}"));
                }
            }
            let text = serde_json::to_string_pretty(&result).expect("serializable result");
            println!("{text}");
            if let Some(path) = &cli.out {
                if let Err(e) = std::fs::write(path, text + "\n") {
                    return fail(&cli, "io", &format!("cannot write {path}: {e}"));
                }
            }
            if verified {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            }
        }
        Err(e) => fail(&cli, e.kind, &e.message),
    }
}

fn fail(cli: &Cli, kind: &str, message: &str) -> ExitCode {
    let obj = json!({"error": {"kind": kind, "message": message}});
    let text = serde_json::to_string_pretty(&obj).expect("serializable error");
    println!("{text}");
    if let Some(path) = &cli.out {
        let _ = std::fs::write(path, text + "\n");
    }
    ExitCode::FAILURE
}

struct Outcome {
    result: Value,
    /// `false` turns into exit status 2: the computation ran but the
    /// checked claim is falsified.
    verified: bool,
    svg: Option<String>,
}

impl Outcome {
    fn ok(result: Value) -> Outcome {
        Outcome {
            result,
            verified: true,
            svg: None,
        }
    }
}

struct CliError {
    kind: &'static str,
    message: String,
}

impl From<Error> for CliError {
    fn from(e: Error) -> CliError {
        CliError {
            kind: "domain",
            message: e.to_string(),
        }
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> CliError {
        CliError {
            kind: "parse",
            message: e.to_string(),
        }
    }
}

fn input_text(cli: &Cli) -> Result<String, CliError> {
    match (&cli.r#in, &cli.json) {
        (Some(_), Some(_)) => Err(CliError {
            kind: "usage",
            message: "--in and --json are mutually exclusive".into(),
        }),
        (None, Some(inline)) => Ok(inline.clone()),
        (Some(path), None) if path == "-" => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| CliError {
                    kind: "io",
                    message: e.to_string(),
                })?;
            Ok(buf)
        }
        (Some(path), None) => std::fs::read_to_string(path).map_err(|e| CliError {
            kind: "io",
            message: format!("cannot read {path}: {e}"),
        }),
        (None, None) => Err(CliError {
            kind: "usage",
            message: "this subcommand needs --in <path> or --json <inline>".into(),
        }),
    }
}

fn read<T: for<'de> Deserialize<'de>>(cli: &Cli) -> Result<T, CliError> {
    Ok(serde_json::from_str(&input_text(cli)?)?)
}

fn vec_json(v: &vpoly::vector::QVec) -> Vec<String> {
    v.0.iter().map(format_rat).collect()
}

fn parse_vec(v: &[String]) -> Result<vpoly::vector::QVec, CliError> {
    Ok(Vector::new(
        v.iter().map(|s| parse_rat(s)).collect::<Result<_, _>>()?,
    ))
}

fn certificate_json(c: &Certificate) -> Value {
    json!({
        "resultant_degree": c.resultant_degree,
        "max_residual": c.max_residual,
        "flags": c.flags,
        "reliable": c.reliable,
    })
}

#[derive(Deserialize)]
struct PairIn {
    a: PolytopeJson,
    b: PolytopeJson,
}

#[derive(Deserialize)]
struct BodiesIn {
    bodies: Vec<PolytopeJson>,
}

#[derive(Deserialize)]
struct ComplexIn {
    faces: Vec<Vec<usize>>,
}

fn run(cli: &Cli, tol: &Tolerances) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Hull => {
            let p = read::<PolytopeJson>(cli)?.to_polytope()?;
            Ok(Outcome {
                result: serde_json::to_value(PolytopeJson::from_polytope(&p))?,
                verified: true,
                svg: Some(svg_polytopes(&[p])),
            })
        }
        Command::MinkowskiSum => {
            let input: PairIn = read(cli)?;
            let sum = input.a.to_polytope()?.minkowski_sum(&input.b.to_polytope()?)?;
            Ok(Outcome {
                result: serde_json::to_value(PolytopeJson::from_polytope(&sum))?,
                verified: true,
                svg: Some(svg_polytopes(&[sum])),
            })
        }
        Command::SupportValue => {
            #[derive(Deserialize)]
            struct In {
                polytope: PolytopeJson,
                xi: Vec<String>,
            }
            let input: In = read(cli)?;
            let h = input.polytope.to_polytope()?.support_value(&parse_vec(&input.xi)?)?;
            Ok(Outcome::ok(json!({"h": format_rat(&h)})))
        }
        Command::NormalFan => {
            let fan = normal_fan(&read::<PolytopeJson>(cli)?.to_polytope()?)?;
            let cones: Vec<Value> = fan
                .cones
                .iter()
                .map(|c| {
                    json!({
                        "dim": c.dim,
                        "rays": c.rays.iter().map(vec_json).collect::<Vec<_>>(),
                    })
                })
                .collect();
            Ok(Outcome::ok(json!({"ambient": fan.ambient, "cones": cones})))
        }
        Command::Analogous => {
            let input: PairIn = read(cli)?;
            let ok = analogous(&input.a.to_polytope()?, &input.b.to_polytope()?)?;
            Ok(Outcome::ok(json!({"analogous": ok})))
        }
        Command::LatticePoints => {
            let pts = read::<PolytopeJson>(cli)?.to_polytope()?.lattice_points()?;
            Ok(Outcome::ok(
                json!({"points": pts.iter().map(vec_json).collect::<Vec<_>>()}),
            ))
        }
        Command::Volume => {
            let v = vpoly::measures::volume(&read::<PolytopeJson>(cli)?.to_polytope()?)?;
            Ok(Outcome::ok(json!({"volume": format_rat(&v)})))
        }
        Command::MixedVolume => {
            let input: BodiesIn = read(cli)?;
            let bodies: Vec<_> = input
                .bodies
                .iter()
                .map(|b| b.to_polytope())
                .collect::<Result<_, _>>()?;
            let mv = mixed_volume(&bodies)?;
            Ok(Outcome::ok(json!({"mv": format_rat(&mv)})))
        }
        Command::InvertCheck => {
            let p = read::<PolytopeJson>(cli)?.to_polytope()?;
            let inv = inverse(&p)?;
            let prod = Chain::of_polytope(&p).product(&inv)?;
            let v = chains_equal(&prod, &Chain::one(p.ambient()))?;
            let ok = v.equal && v.exact;
            Ok(Outcome {
                result: json!({
                    "ok": ok,
                    "inverse": serde_json::to_value(ChainJson::from_chain(&inv))?,
                }),
                verified: ok,
                svg: None,
            })
        }
        Command::LatticeMeasure => {
            #[derive(Deserialize)]
            struct In {
                weight: PolynomialJson,
                chain: ChainJson,
            }
            let input: In = read(cli)?;
            let v = lattice_measure(&input.weight.to_poly()?, &input.chain.to_chain()?)?;
            Ok(Outcome::ok(json!({"value": format_rat(&v)})))
        }
        Command::DilateChain => {
            #[derive(Deserialize)]
            struct In {
                bases: Vec<PolytopeJson>,
                exponents: Vec<i64>,
            }
            let input: In = read(cli)?;
            let bases: Vec<_> = input
                .bases
                .iter()
                .map(|b| b.to_polytope())
                .collect::<Result<_, _>>()?;
            let chain = dilate_chain(&bases, &input.exponents)?;
            Ok(Outcome::ok(serde_json::to_value(ChainJson::from_chain(
                &chain,
            ))?))
        }
        Command::MinkowskiCheck => {
            #[derive(Deserialize)]
            struct In {
                a: PolytopeJson,
                b: PolytopeJson,
                grid: Option<usize>,
            }
            let input: In = read(cli)?;
            let report = minkowski_polynomiality_check(
                &input.a.to_polytope()?,
                &input.b.to_polytope()?,
                input.grid.unwrap_or(5),
            )?;
            let ok = report.exact;
            Ok(Outcome {
                result: json!({
                    "ok": ok,
                    "exact": report.exact,
                    "polynomial": serde_json::to_value(PolynomialJson::from_poly(&report.polynomial))?,
                }),
                verified: ok,
                svg: None,
            })
        }
        Command::WindingNumber => {
            #[derive(Deserialize)]
            struct In {
                cycle: CycleJson,
                point: Vec<String>,
            }
            let input: In = read(cli)?;
            let w = winding_number(&input.cycle.to_cycle()?, &parse_vec(&input.point)?)?;
            Ok(Outcome::ok(json!({"w": w})))
        }
        Command::WindingChain => {
            let gamma = read::<CycleJson>(cli)?.to_cycle()?;
            let chain = winding_chain(&gamma)?;
            let regions: Vec<Value> = chain
                .regions
                .iter()
                .map(|(w, r)| {
                    json!({
                        "weight": w,
                        "outer": r.outer.iter().map(vec_json).collect::<Vec<_>>(),
                        "holes": r
                            .holes
                            .iter()
                            .map(|h| h.iter().map(vec_json).collect::<Vec<_>>())
                            .collect::<Vec<_>>(),
                        "sample": vec_json(&r.sample),
                    })
                })
                .collect();
            Ok(Outcome {
                result: json!({"regions": regions}),
                verified: true,
                svg: Some(svg_winding_chain(&chain)),
            })
        }
        Command::GaussMap => {
            let h = read::<SupportFunctionJson>(cli)?.to_support()?;
            let gamma = gauss_type_map(&h)?;
            Ok(Outcome {
                result: serde_json::to_value(CycleJson::from_cycle(&gamma))?,
                verified: true,
                svg: Some(svg_segments(&gamma.segments())),
            })
        }
        Command::SupportVolume => {
            let h = read::<SupportFunctionJson>(cli)?.to_support()?;
            let v = virtual_volume_from_support(&h)?;
            Ok(Outcome::ok(json!({"volume": format_rat(&v)})))
        }
        Command::ChainWindingCheck => {
            #[derive(Deserialize)]
            struct In {
                support: SupportFunctionJson,
                delta1: PolytopeJson,
                delta2: PolytopeJson,
            }
            let input: In = read(cli)?;
            let h = input.support.to_support()?;
            let ok =
                chain_winding_check(&h, &input.delta1.to_polytope()?, &input.delta2.to_polytope()?)?;
            Ok(Outcome {
                result: json!({"ok": ok}),
                verified: ok,
                svg: Some(svg_winding_chain(&winding_chain(&gauss_type_map(&h)?)?)),
            })
        }
        Command::SmoothDemo => {
            #[derive(Deserialize)]
            struct In {
                n: usize,
                radius: f64,
            }
            let input: In = read(cli)?;
            let r = input.radius;
            let area = smooth_support_demo(|x, y| (r * x, r * y), input.n)?;
            let exact = std::f64::consts::PI * r * r;
            Ok(Outcome::ok(json!({
                "area": area,
                "exact": exact,
                "rel_error": (area - exact).abs() / exact,
            })))
        }
        Command::Nerve => {
            let x = read::<ArrangementJson>(cli)?.to_arrangement()?;
            let k = nerve(&x)?;
            Ok(Outcome::ok(
                json!({"faces": k.faces().collect::<Vec<_>>()}),
            ))
        }
        Command::Homology => {
            let input: ComplexIn = read(cli)?;
            let k = SimplicialComplex::new(input.faces)?;
            Ok(Outcome::ok(json!({"betti": homology_ranks(&k)})))
        }
        Command::WedgeCheck => {
            let x = read::<ArrangementJson>(cli)?.to_arrangement()?;
            let report = wedge_check(x.subspaces())?;
            Ok(Outcome {
                result: json!({
                    "b1": report.betti.get(1).copied().unwrap_or(0),
                    "bounded": report.bounded_regions,
                    "betti": report.betti,
                    "core_dim": report.core_dim,
                    "ok": report.consistent,
                }),
                verified: report.consistent,
                svg: None,
            })
        }
        Command::CompatibleMap => {
            #[derive(Deserialize)]
            struct In {
                complex: ComplexIn,
                arrangement: ArrangementJson,
            }
            let input: In = read(cli)?;
            let k = SimplicialComplex::new(input.complex.faces)?;
            let x = input.arrangement.to_arrangement()?;
            match compatible_map(&k, &x) {
                Ok(g) => {
                    let barycenters: Vec<Value> = g
                        .barycenters
                        .iter()
                        .map(|(face, p)| json!({"face": face, "point": vec_json(p)}))
                        .collect();
                    Ok(Outcome::ok(
                        json!({"ok": true, "barycenters": barycenters}),
                    ))
                }
                // nonexistence is an answer, not a failure
                Err(Error::NotSubcomplex) => Ok(Outcome::ok(json!({"ok": false}))),
                Err(e) => Err(e.into()),
            }
        }
        Command::Bkk => {
            let input: BodiesIn = read(cli)?;
            let bodies: Vec<_> = input
                .bodies
                .iter()
                .map(|b| b.to_polytope())
                .collect::<Result<_, _>>()?;
            let n = bkk_number(&bodies)?;
            Ok(Outcome::ok(json!({"bkk": format_rat(&n)})))
        }
        Command::SampleSystem => {
            let input: BodiesIn = read(cli)?;
            let bodies: Vec<_> = input
                .bodies
                .iter()
                .map(|b| b.to_polytope())
                .collect::<Result<_, _>>()?;
            let sys = sample_system(&bodies, cli.seed)?;
            Ok(Outcome::ok(serde_json::to_value(SystemJson::from_system(
                &sys,
            ))?))
        }
        Command::CountRoots => {
            let sys = read::<SystemJson>(cli)?.to_system()?;
            if sys.len() != 2 {
                return Err(Error::WrongBodyCount {
                    expected: 2,
                    got: sys.len(),
                }
                .into());
            }
            let tc = count_torus_roots_2d(&sys[0], &sys[1], tol)?;
            Ok(Outcome::ok(json!({
                "count": tc.count,
                "certificate": certificate_json(&tc.certificate),
            })))
        }
        Command::Harness => {
            let input: PairIn = read(cli)?;
            let run = verify_bkk_pair(
                &input.a.to_polytope()?,
                &input.b.to_polytope()?,
                cli.seed,
                tol,
            )?;
            Ok(Outcome {
                result: json!({
                    "predicted": format_rat(&run.predicted),
                    "counted": run.counted,
                    "matched": run.matched,
                    "seed_used": run.seed_used,
                    "resamples": run.resamples,
                    "certificate": certificate_json(&run.certificate),
                }),
                verified: run.matched,
                svg: None,
            })
        }
        Command::Suite => {
            let results = run_all(cli.seed, tol);
            let mut all_pass = true;
            for r in &results {
                eprintln!(
                    "[{}] criterion {:2} {:<35} {}",
                    if r.passed { "PASS" } else { "FAIL" },
                    r.id,
                    r.name,
                    r.detail
                );
                all_pass &= r.passed;
            }
            let rows: Vec<Value> = results
                .iter()
                .map(|r| {
                    json!({
                        "id": r.id,
                        "name": r.name,
                        "passed": r.passed,
                        "detail": r.detail,
                    })
                })
                .collect();
            Ok(Outcome {
                result: json!({"ok": all_pass, "criteria": rows}),
                verified: all_pass,
                svg: None,
            })
        }
    }
}
