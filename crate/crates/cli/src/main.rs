//! Command-line front end: Schubert products, variety-of-lines invariants,
//! lattice signatures and pairings, blow-up verification, cone duality, the
//! class catalog and the reproduction report.
//!
//! Exit codes: 0 on success, 2 on usage/parse errors (including malformed
//! input files), 3 on internal invariant violations.

use clap::{Parser, Subcommand};
use cyclecone_core::blowup::BlowupModel;
use cyclecone_core::catalog;
use cyclecone_core::cone::{contains, dual_cone, gap_report, Cone2, Pairing2, Ray2};
use cyclecone_core::error::Error;
use cyclecone_core::expr;
use cyclecone_core::fano::FanoModel;
use cyclecone_core::lattice::{rank_checks, Lattice};
use cyclecone_core::rational::{format_rational, parse_rational, rat, rat_int, Rational};
use cyclecone_core::report;
use cyclecone_core::schubert::{parse_class, GrassmannianSpec};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "cyclecone",
    version,
    about = "Exact intersection theory for cycle cones on hyperkähler fourfolds"
)]
struct Cli {
    /// Emit machine-readable JSON instead of plain text
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Schubert calculus on Gr(k, n)
    Schubert {
        #[command(subcommand)]
        cmd: SchubertCmd,
    },
    /// Invariants of the variety of lines on a cubic fourfold
    Fano {
        #[command(subcommand)]
        cmd: FanoCmd,
    },
    /// Quadratic lattices and the Beauville-Bogomolov pairing
    Bb {
        #[command(subcommand)]
        cmd: BbCmd,
    },
    /// Blow-up of S x S along the diagonal: independent pairing checks
    Blowup {
        #[command(subcommand)]
        cmd: BlowupCmd,
    },
    /// Rational cone duality in the (g2, c) plane
    Cone {
        #[command(subcommand)]
        cmd: ConeCmd,
    },
    /// The curated class registry
    Catalog {
        #[command(subcommand)]
        cmd: CatalogCmd,
    },
    /// Deterministic reproduction reports
    Report {
        #[command(subcommand)]
        cmd: ReportCmd,
    },
}

#[derive(Subcommand)]
enum SchubertCmd {
    /// Multiply two classes written as "a*s[2,1] + b*s[1]"
    Mult {
        a: String,
        b: String,
        /// Ambient Grassmannian as "k,n"
        #[arg(long, default_value = "2,6")]
        grassmannian: String,
    },
    /// Integrate a class (coefficient of the full-box point class)
    Integrate {
        a: String,
        #[arg(long, default_value = "2,6")]
        grassmannian: String,
    },
}

#[derive(Subcommand)]
enum FanoCmd {
    /// Pairing matrix, Chern classes and fundamental class
    Invariants,
    /// Exact pairing of two classes in the grammar "a*g2 + b*c"
    Pair { x: String, y: String },
}

#[derive(Subcommand)]
enum BbCmd {
    /// Exact Sylvester signature of a Gram matrix
    Signature {
        /// Lattice JSON file; defaults to the built-in K3 lattice
        #[arg(long)]
        gram: Option<String>,
    },
    /// Beauville-Bogomolov pairing on the Hilbert square model
    Qpair {
        /// K3-part Gram matrix (JSON)
        #[arg(long)]
        gram: String,
        /// Vector "a1,a2,...,m" with the delta coordinate last
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
    },
    /// Dimension bookkeeping for both deformation families
    RankChecks,
    /// Print the built-in K3 lattice (U^3 plus two negative E8 blocks)
    K3Gram,
}

#[derive(Subcommand)]
enum BlowupCmd {
    /// Compare the blow-up evaluation of the c2 pairing with 30q
    Verify30q {
        #[arg(long)]
        gram: String,
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
    },
    /// Derive q(delta, delta) from the blow-up evaluation rules
    DeltaSquare,
}

#[derive(Subcommand)]
enum ConeCmd {
    /// Dual cone with respect to a pairing
    Dual {
        /// Rays as "x,y;x,y" in the (g2, c) basis
        #[arg(long, conflicts_with = "cone")]
        rays: Option<String>,
        /// Cone JSON file {"basis": ["g2","c"], "rays": [[..],[..]]}
        #[arg(long)]
        cone: Option<String>,
        /// Pairing JSON file; defaults to the computed fano-lines matrix
        #[arg(long)]
        pairing: Option<String>,
    },
    /// Containment verdict for two cones
    Contains {
        #[arg(long)]
        outer: String,
        #[arg(long)]
        inner: String,
    },
    /// Two-endpoint nef/effective gap analysis with interval certificate
    GapReport {
        /// Interval endpoint as "p/q" (give twice; defaults 1 and 8/5)
        #[arg(long = "lambda")]
        lambdas: Vec<String>,
    },
}

#[derive(Subcommand)]
enum CatalogCmd {
    /// All entries of a variety
    List { variety: String },
    /// One entry by object name
    Show { variety: String, object: String },
    /// Evaluate an expression like "pair(3*g2-5*c, c)" in a variety context
    Eval { variety: String, expr: String },
}

#[derive(Subcommand)]
enum ReportCmd {
    /// The full fano-lines reproduction report (deterministic JSON)
    FanoLines,
}

enum CliError {
    Usage(String),
    Internal(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        if e.is_internal() {
            CliError::Internal(e.to_string())
        } else {
            CliError::Usage(e.to_string())
        }
    }
}

fn main() {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => {}
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            std::process::exit(2);
        }
        Err(CliError::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            std::process::exit(3);
        }
    }
}

fn read_file(path: &str) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {path:?}: {e}")))
}

fn parse_vector(s: &str) -> Result<Vec<Rational>, CliError> {
    s.split(',')
        .map(|t| parse_rational(t).map_err(CliError::from))
        .collect()
}

fn parse_spec(s: &str) -> Result<GrassmannianSpec, CliError> {
    let (k, n) = s
        .split_once(',')
        .ok_or_else(|| CliError::Usage(format!("expected \"k,n\", got {s:?}")))?;
    let k: usize = k
        .trim()
        .parse()
        .map_err(|_| CliError::Usage(format!("bad k in {s:?}")))?;
    let n: usize = n
        .trim()
        .parse()
        .map_err(|_| CliError::Usage(format!("bad n in {s:?}")))?;
    Ok(GrassmannianSpec::new(k, n)?)
}

fn parse_ray_pair(s: &str) -> Result<Cone2, CliError> {
    let mut rays = Vec::new();
    for part in s.split(';') {
        let coords = parse_vector(part)?;
        if coords.len() != 2 {
            return Err(CliError::Usage(format!(
                "ray needs two coordinates, got {part:?}"
            )));
        }
        rays.push(Ray2::from_rational(&coords[0], &coords[1])?);
    }
    match rays.len() {
        1 => Ok(Cone2::ray(rays.remove(0))),
        2 => {
            let b = rays.pop().expect("two rays");
            let a = rays.pop().expect("two rays");
            Ok(Cone2::from_rays(a, b)?)
        }
        n => Err(CliError::Usage(format!("expected 1 or 2 rays, got {n}"))),
    }
}

fn ray_value(v: &Value) -> Result<Rational, CliError> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(rat_int)
            .ok_or_else(|| CliError::Usage(format!("non-integer ray coordinate {n}"))),
        Value::String(s) => Ok(parse_rational(s)?),
        other => Err(CliError::Usage(format!("bad ray coordinate {other}"))),
    }
}

fn cone_from_json(text: &str) -> Result<Cone2, CliError> {
    let v: Value =
        serde_json::from_str(text).map_err(|e| CliError::Usage(format!("bad cone JSON: {e}")))?;
    let rays = v["rays"]
        .as_array()
        .ok_or_else(|| CliError::Usage("cone JSON needs a \"rays\" array".into()))?;
    let mut parsed = Vec::new();
    for r in rays {
        let coords = r
            .as_array()
            .ok_or_else(|| CliError::Usage("each ray must be an array".into()))?;
        if coords.len() != 2 {
            return Err(CliError::Usage("each ray needs two coordinates".into()));
        }
        parsed.push(Ray2::from_rational(
            &ray_value(&coords[0])?,
            &ray_value(&coords[1])?,
        )?);
    }
    match parsed.len() {
        0 => Ok(Cone2::zero()),
        1 => Ok(Cone2::ray(parsed.remove(0))),
        2 => {
            let b = parsed.pop().expect("two rays");
            let a = parsed.pop().expect("two rays");
            Ok(Cone2::from_rays(a, b)?)
        }
        n => Err(CliError::Usage(format!("expected at most 2 rays, got {n}"))),
    }
}

fn cone_to_json(c: &Cone2) -> Value {
    json!({
        "basis": ["g2", "c"],
        "rays": c
            .rays()
            .iter()
            .map(|r| json!([r.x().to_string(), r.y().to_string()]))
            .collect::<Vec<_>>(),
    })
}

fn pairing_from_json(text: &str) -> Result<Pairing2, CliError> {
    let v: Value = serde_json::from_str(text)
        .map_err(|e| CliError::Usage(format!("bad pairing JSON: {e}")))?;
    let m = v["m"]
        .as_array()
        .ok_or_else(|| CliError::Usage("pairing JSON needs an \"m\" matrix".into()))?;
    if m.len() != 2 {
        return Err(CliError::Usage("pairing matrix must be 2x2".into()));
    }
    let mut rows = Vec::new();
    for row in m {
        let cols = row
            .as_array()
            .ok_or_else(|| CliError::Usage("pairing rows must be arrays".into()))?;
        if cols.len() != 2 {
            return Err(CliError::Usage("pairing matrix must be 2x2".into()));
        }
        rows.push([ray_value(&cols[0])?, ray_value(&cols[1])?]);
    }
    let second = rows.pop().expect("two rows");
    let first = rows.pop().expect("two rows");
    Ok(Pairing2::new([first, second])?)
}

fn fano_pairing() -> Result<Pairing2, CliError> {
    let model = FanoModel::new()?;
    Ok(Pairing2::new(model.pairing_matrix().clone())?)
}

fn emit(json_mode: bool, value: Value, text: impl FnOnce() -> String) {
    if json_mode {
        println!(
            "{}",
            serde_json::to_string_pretty(&value).expect("JSON value serializes")
        );
    } else {
        println!("{}", text());
    }
}

fn run(cli: &Cli) -> Result<(), CliError> {
    match &cli.command {
        Command::Schubert { cmd } => run_schubert(cli.json, cmd),
        Command::Fano { cmd } => run_fano(cli.json, cmd),
        Command::Bb { cmd } => run_bb(cli.json, cmd),
        Command::Blowup { cmd } => run_blowup(cli.json, cmd),
        Command::Cone { cmd } => run_cone(cli.json, cmd),
        Command::Catalog { cmd } => run_catalog(cli.json, cmd),
        Command::Report { cmd } => run_report(cli.json, cmd),
    }
}

fn run_schubert(json_mode: bool, cmd: &SchubertCmd) -> Result<(), CliError> {
    match cmd {
        SchubertCmd::Mult { a, b, grassmannian } => {
            let spec = parse_spec(grassmannian)?;
            let product = parse_class(a, spec)?.multiply(&parse_class(b, spec)?)?;
            emit(
                json_mode,
                json!({
                    "grassmannian": [spec.k(), spec.n()],
                    "product": product.to_string(),
                }),
                || product.to_string(),
            );
        }
        SchubertCmd::Integrate { a, grassmannian } => {
            let spec = parse_spec(grassmannian)?;
            let value = parse_class(a, spec)?.integrate();
            emit(
                json_mode,
                json!({
                    "grassmannian": [spec.k(), spec.n()],
                    "integral": format_rational(&value),
                }),
                || format_rational(&value),
            );
        }
    }
    Ok(())
}

fn run_fano(json_mode: bool, cmd: &FanoCmd) -> Result<(), CliError> {
    let model = FanoModel::new()?;
    match cmd {
        FanoCmd::Invariants => {
            let m = model.pairing_matrix();
            let chern = model.chern_classes_of_x();
            emit(
                json_mode,
                json!({
                    "c1_g": format_rational(&chern.c1_g),
                    "c2": [format_rational(&chern.c2.g2), format_rational(&chern.c2.c)],
                    "fundamental_class": model.fundamental_class().to_string(),
                    "pairing_matrix": [
                        [format_rational(&m[0][0]), format_rational(&m[0][1])],
                        [format_rational(&m[1][0]), format_rational(&m[1][1])],
                    ],
                }),
                || {
                    format!(
                        "pairing matrix [[{}, {}], [{}, {}]]\nc1 = {}*g\nc2 = {}\nfundamental class = {}",
                        format_rational(&m[0][0]),
                        format_rational(&m[0][1]),
                        format_rational(&m[1][0]),
                        format_rational(&m[1][1]),
                        format_rational(&chern.c1_g),
                        chern.c2,
                        model.fundamental_class()
                    )
                },
            );
        }
        FanoCmd::Pair { x, y } => {
            let xv = expr::parse_class_expr(x, &model)?;
            let yv = expr::parse_class_expr(y, &model)?;
            let value = model.pair(&xv, &yv);
            emit(
                json_mode,
                json!({
                    "value": format_rational(&value),
                    "x": xv.to_string(),
                    "y": yv.to_string(),
                }),
                || format_rational(&value),
            );
        }
    }
    Ok(())
}

fn run_bb(json_mode: bool, cmd: &BbCmd) -> Result<(), CliError> {
    match cmd {
        BbCmd::Signature { gram } => {
            let lattice = match gram {
                Some(path) => Lattice::from_json_str(&read_file(path)?)?,
                None => Lattice::k3(),
            };
            let sig = lattice.signature();
            emit(
                json_mode,
                json!({
                    "negative": sig.negative,
                    "positive": sig.positive,
                    "rank": lattice.rank(),
                    "zero": sig.zero,
                }),
                || {
                    format!(
                        "signature ({}, {}) with {} zero(s) on rank {}",
                        sig.positive,
                        sig.negative,
                        sig.zero,
                        lattice.rank()
                    )
                },
            );
        }
        BbCmd::Qpair { gram, x, y } => {
            let lattice = Lattice::from_json_str(&read_file(gram)?)?;
            let h2 = BlowupModel::new(lattice).hilb_square_h2();
            let xv = parse_vector(x)?;
            let yv = parse_vector(y)?;
            let q = h2.q_pair(&xv, &yv)?;
            let c2 = h2.c2_pairing(&xv, &yv)?;
            emit(
                json_mode,
                json!({
                    "c2_pairing": format_rational(&c2),
                    "delta_square": format_rational(h2.delta_square()),
                    "q": format_rational(&q),
                }),
                || {
                    format!(
                        "q(x, y) = {}   c2.x.y = {}   (q(delta,delta) = {})",
                        format_rational(&q),
                        format_rational(&c2),
                        format_rational(h2.delta_square())
                    )
                },
            );
        }
        BbCmd::RankChecks => {
            let r = rank_checks();
            emit(
                json_mode,
                serde_json::to_value(&r)
                    .map_err(|e| CliError::Internal(format!("serialization failed: {e}")))?,
                || {
                    format!(
                        "hilbert-square family: b2 = {}, dim Sym^2 = {}\n\
                         kummer family: b2 = {}, dim Sym^2 = {}, H^4 = {} + {} = {}\n\
                         3-torsion points: {}",
                        r.k3_hilb_b2,
                        r.k3_hilb_sym2_dim,
                        r.kummer_b2,
                        r.kummer_sym2_dim,
                        r.kummer_sym2_dim,
                        r.kummer_unit_rank,
                        r.kummer_h4_dim,
                        r.three_torsion_count
                    )
                },
            );
        }
        BbCmd::K3Gram => {
            println!("{}", Lattice::k3().to_json_string());
        }
    }
    Ok(())
}

fn run_blowup(json_mode: bool, cmd: &BlowupCmd) -> Result<(), CliError> {
    match cmd {
        BlowupCmd::Verify30q { gram, x, y } => {
            let lattice = Lattice::from_json_str(&read_file(gram)?)?;
            let model = BlowupModel::new(lattice);
            let v = model.verify_30q(&parse_vector(x)?, &parse_vector(y)?)?;
            emit(
                json_mode,
                json!({
                    "equal": v.equal,
                    "lhs": format_rational(&v.lhs),
                    "rhs": format_rational(&v.rhs),
                }),
                || {
                    format!(
                        "lhs = {}   rhs = {}   equal = {}",
                        format_rational(&v.lhs),
                        format_rational(&v.rhs),
                        v.equal
                    )
                },
            );
        }
        BlowupCmd::DeltaSquare => {
            let model = BlowupModel::new(Lattice::hyperbolic_plane());
            let d = model.derive_delta_square();
            let e4 = model
                .e4_via_projective_bundle()
                .map_err(|e| CliError::Internal(e.to_string()))?;
            emit(
                json_mode,
                json!({
                    "delta_square": format_rational(&d),
                    "e4_check": format_rational(&e4),
                }),
                || {
                    format!(
                        "q(delta, delta) = {}   (E^4 = {} by both routes)",
                        format_rational(&d),
                        format_rational(&e4)
                    )
                },
            );
        }
    }
    Ok(())
}

fn run_cone(json_mode: bool, cmd: &ConeCmd) -> Result<(), CliError> {
    match cmd {
        ConeCmd::Dual {
            rays,
            cone,
            pairing,
        } => {
            let input = match (rays, cone) {
                (Some(r), None) => parse_ray_pair(r)?,
                (None, Some(path)) => cone_from_json(&read_file(path)?)?,
                _ => return Err(CliError::Usage("provide either --rays or --cone".into())),
            };
            let p = match pairing {
                Some(path) => pairing_from_json(&read_file(path)?)?,
                None => fano_pairing()?,
            };
            let dual = dual_cone(&input, &p)?;
            emit(
                json_mode,
                json!({
                    "cone": cone_to_json(&input),
                    "dual": cone_to_json(&dual),
                }),
                || format!("{input} has dual {dual}"),
            );
        }
        ConeCmd::Contains { outer, inner } => {
            let outer_cone = parse_ray_pair(outer)?;
            let inner_cone = parse_ray_pair(inner)?;
            let verdict = contains(&outer_cone, &inner_cone);
            emit(
                json_mode,
                json!({
                    "inner": cone_to_json(&inner_cone),
                    "outer": cone_to_json(&outer_cone),
                    "verdict": verdict.as_str(),
                }),
                || verdict.as_str().to_string(),
            );
        }
        ConeCmd::GapReport { lambdas } => {
            let (lo, hi) = match lambdas.len() {
                0 => (rat_int(1), rat(8, 5)),
                2 => (parse_rational(&lambdas[0])?, parse_rational(&lambdas[1])?),
                n => {
                    return Err(CliError::Usage(format!(
                        "--lambda must appear exactly twice (or not at all), got {n}"
                    )))
                }
            };
            let model = FanoModel::new()?;
            let p = Pairing2::new(model.pairing_matrix().clone())?;
            let c2 = model.c2();
            let gap = gap_report(&p, (&lo, &hi), &(c2.g2.clone(), c2.c.clone()))?;
            emit(
                json_mode,
                json!({
                    "endpoints": gap
                        .endpoints
                        .iter()
                        .map(|e| json!({
                            "containment": e.containment.as_str(),
                            "dual": cone_to_json(&e.dual),
                            "eff": cone_to_json(&e.eff),
                            "lambda": format_rational(&e.lambda),
                        }))
                        .collect::<Vec<_>>(),
                    "interval_certified": gap.certificate.interval_certified,
                    "lambda_endpoints": [
                        format_rational(&gap.lambda_lo),
                        format_rational(&gap.lambda_hi),
                    ],
                    "nef_strictly_exceeds_eff": gap.nef_strictly_exceeds_eff,
                }),
                || {
                    let mut lines = Vec::new();
                    for e in &gap.endpoints {
                        lines.push(format!(
                            "lambda = {}: eff {} dual {} -> {}",
                            format_rational(&e.lambda),
                            e.eff,
                            e.dual,
                            e.containment.as_str()
                        ));
                    }
                    lines.push(format!(
                        "interval certified: {}; nef strictly exceeds eff: {}",
                        gap.certificate.interval_certified, gap.nef_strictly_exceeds_eff
                    ));
                    lines.join("\n")
                },
            );
        }
    }
    Ok(())
}

fn run_catalog(json_mode: bool, cmd: &CatalogCmd) -> Result<(), CliError> {
    match cmd {
        CatalogCmd::List { variety } => {
            let entries = catalog::list_entries(variety)?;
            emit(
                json_mode,
                Value::Array(entries.iter().map(|e| e.to_json()).collect()),
                || {
                    entries
                        .iter()
                        .map(|e| {
                            let flags: Vec<&str> =
                                e.flags.iter().map(|f| f.kind.as_str()).collect();
                            format!("{:<28} [{}]", e.object, flags.join(", "))
                        })
                        .collect::<Vec<_>>()
                        .join("\n")
                },
            );
        }
        CatalogCmd::Show { variety, object } => {
            let entry = catalog::show_entry(variety, object)?;
            emit(json_mode, entry.to_json(), || {
                format!(
                    "{}\n  class: {:?}\n  provenance: {}",
                    entry.object,
                    entry.class_expr,
                    catalog::provenance_statement(entry.provenance).unwrap_or("")
                )
            });
        }
        CatalogCmd::Eval { variety, expr } => {
            if variety != "fano-lines" {
                return Err(CliError::Usage(format!(
                    "evaluation is only available for \"fano-lines\", got {variety:?}"
                )));
            }
            let model = FanoModel::new()?;
            let value = expr::evaluate(expr, &model)?;
            match value {
                expr::Value::Scalar(s) => emit(
                    json_mode,
                    json!({ "scalar": format_rational(&s) }),
                    || format_rational(&s),
                ),
                expr::Value::Class(c) => emit(
                    json_mode,
                    json!({
                        "class": [format_rational(&c.g2), format_rational(&c.c)],
                    }),
                    || c.to_string(),
                ),
            }
        }
    }
    Ok(())
}

fn run_report(json_mode: bool, cmd: &ReportCmd) -> Result<(), CliError> {
    match cmd {
        ReportCmd::FanoLines => {
            if json_mode {
                // byte-exact deterministic output, golden-file tested
                print!("{}", report::fano_lines_report_string()?);
            } else {
                let value = report::fano_lines_report()?;
                let computed = &value["computed"];
                println!(
                    "pairing matrix: {}\nc2 = [{}, {}] in (g2, c)\nnef strictly exceeds eff: {}",
                    computed["pairing_matrix"],
                    computed["c2"][0].as_str().unwrap_or("?"),
                    computed["c2"][1].as_str().unwrap_or("?"),
                    computed["gap"]["nef_strictly_exceeds_eff"]
                );
            }
        }
    }
    Ok(())
}
