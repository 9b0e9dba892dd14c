//! Command-line surface and dispatch.

use std::io::Read;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use tamarkin_core::metrics::{bottleneck_with_witness, brute_interleave, cone_of_morphism, MorphismPlan};
use tamarkin_core::microlocal::ss_text;
use tamarkin_core::morse::{c0_two_critical_bound, sheaf_route_barcode, sublevel_barcode, superlevel_barcode};
use tamarkin_core::ops;
use tamarkin_core::symplectic::{
    domain_barcode, eigen_count_sq, nonsqueeze_check, sheaf_invariant, transfer_is_iso, DomainSpec,
};
use tamarkin_core::value::BigRational;
use tamarkin_core::{Convention, Ext, Field, GradedBarcode, HomSpace, PiRational};

use crate::complex_io::parse_complex;
use crate::error::{Failure, Result};
use crate::json::{emit_barcode, ext_json, homspace_json, parse_barcode, parse_domain, parse_ext, parse_radius, parse_value, to_text};
use crate::plot::{self, TickUnit};

#[derive(Parser, Debug)]
#[command(name = "tamarkin", version, about = "Exact barcode calculus for sheaves on the real line")]
pub struct Cli {
    /// Prime characteristic of the coefficient field.
    #[arg(long, global = true, env = "TAMARKIN_FIELD", default_value_t = 2)]
    pub field: u64,
    /// Write the result here instead of stdout.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Svg,
    Text,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Canonicalize a barcode, or query it.
    Barcode {
        /// Barcode JSON, `-` for stdin.
        input: PathBuf,
        /// Re-express in another convention: left-closed or right-closed.
        #[arg(long)]
        convert: Option<String>,
        /// Graded stalk at a point.
        #[arg(long)]
        stalk: Option<String>,
        /// Sections over the ray (−∞, c).
        #[arg(long)]
        ray_sections: Option<String>,
        /// The event set: all finite endpoints.
        #[arg(long)]
        spec: bool,
        /// Singular support of each bar.
        #[arg(long)]
        ss: bool,
    },
    /// Sheaf operations on barcodes.
    Ops {
        #[command(subcommand)]
        op: Op,
    },
    /// Bottleneck distance, which equals the interleaving distance.
    Dist {
        first: PathBuf,
        /// Second barcode; without it FIRST holds `{"b1": …, "b2": …}`.
        second: Option<PathBuf>,
        /// Also decide by exhaustive search whether the barcodes are
        /// interleaved at this shift.
        #[arg(long)]
        check: Option<String>,
    },
    /// Barcodes of a function on a simplicial complex.
    Morse {
        /// Complex in OFF-like text or JSON, `-` for stdin.
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Route::Sublevel)]
        route: Route,
        /// Report the C⁰ bound to a function with two critical points.
        #[arg(long)]
        c0_bound: bool,
    },
    /// Projector barcodes and invariants of balls and ellipsoids.
    Domain {
        #[command(subcommand)]
        shape: Shape,
        /// Truncate the barcode at this action.
        #[arg(long, global = true)]
        tmax: Option<String>,
        /// The invariant S_T at this T.
        #[arg(long, global = true)]
        invariant: Option<String>,
        /// Whether S_{T1} → S_{T2} is an isomorphism.
        #[arg(long, global = true, num_args = 2, value_names = ["T1", "T2"])]
        transfer: Option<Vec<String>>,
        /// Count positive eigenvalues of the discretized quadratic form at T.
        #[arg(long, global = true)]
        eigen: Option<String>,
        /// Discretization steps for --eigen.
        #[arg(long, global = true, default_value_t = 32)]
        steps: usize,
    },
    /// Whether the invariant obstructs B(r1) → E(r2, R, …, R) in ℝ^{2n}.
    Nonsqueeze {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        r1: String,
        #[arg(long)]
        r2: String,
        #[arg(long = "R")]
        big_r: String,
    },
    /// Render a barcode as SVG (default) or text.
    Plot { input: PathBuf },
}

#[derive(Subcommand, Debug)]
pub enum Op {
    /// Proper convolution A ∗ B.
    Convolve { a: PathBuf, b: PathBuf },
    /// Non-proper convolution.
    ConvolveNp { a: PathBuf, b: PathBuf },
    /// Internal hom Hom*(A, B).
    HomStar { a: PathBuf, b: PathBuf },
    /// The reflected barcode A^a.
    Adjoint { a: PathBuf },
    /// Graded dimensions of RHom(A, B).
    Rhom { a: PathBuf, b: PathBuf },
    /// The sheaf RHom(A, B) as a barcode.
    RhomSheaf { a: PathBuf, b: PathBuf },
    /// Length of the longest bar.
    Torsion { a: PathBuf },
    /// Torsion of Hom*(A, A).
    Capacity { a: PathBuf },
    /// Capacity read off the bars through 0 of Hom*(A, A).
    CapacityPrime { a: PathBuf },
    /// Number of bars longer than c, per degree.
    TauRank {
        a: PathBuf,
        #[arg(long)]
        c: String,
    },
    /// Translate by --by and shift degrees by --deg.
    Shift {
        a: PathBuf,
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        by: String,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        deg: i64,
    },
    /// Cone of the morphism A → B matching bars as listed in --plan.
    Cone {
        a: PathBuf,
        b: PathBuf,
        /// Pairs `i:j` of indices into the expanded bar lists.
        #[arg(long, value_delimiter = ',')]
        plan: Vec<String>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Route {
    Sublevel,
    Superlevel,
    Sheaf,
}

#[derive(Subcommand, Debug)]
pub enum Shape {
    /// Ball of radius r in ℝ^{2n}.
    Ball {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        r: String,
    },
    /// Ellipsoid E(r, R, …, R) in ℝ^{2n}.
    Ellipsoid {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        r: String,
        #[arg(long = "R")]
        big_r: String,
    },
    /// The ball of radius r rescaled by c.
    ScaledBall {
        #[arg(long)]
        c: String,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        r: String,
    },
    /// A domain described in a JSON file.
    File { input: PathBuf },
}

/// What a command produced; rendering depends on `--format`.
pub enum Output {
    Barcode(GradedBarcode, Option<TickUnit>),
    Value { json: Value, text: String },
}

impl Output {
    fn value(json: Value) -> Self {
        let text = render_plain(&json);
        Self::Value { json, text }
    }

    fn hom(h: &HomSpace) -> Self {
        Self::Value { json: homspace_json(h), text: format!("{h}\n") }
    }

    pub fn render(&self, format: Format) -> Result<String> {
        match (self, format) {
            (Self::Barcode(b, _), Format::Json) => Ok(emit_barcode(b)),
            (Self::Barcode(b, u), Format::Svg) => Ok(plot::svg(b, u.as_ref())),
            (Self::Barcode(b, u), Format::Text) => Ok(plot::text(b, u.as_ref())),
            (Self::Value { json, .. }, Format::Json) => Ok(to_text(json)),
            (Self::Value { text, .. }, Format::Text) => Ok(text.clone()),
            (Self::Value { .. }, Format::Svg) => Err(Failure::input("svg output needs a barcode result")),
        }
    }
}

fn render_plain(v: &Value) -> String {
    match v {
        Value::Object(map) => map
            .iter()
            .map(|(k, v)| format!("{k}: {}\n", compact(v)))
            .collect(),
        other => format!("{}\n", compact(other)),
    }
}

fn compact(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

pub fn read_input(path: &Path) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::input(format!("stdin: {e}")))?;
        return Ok(s);
    }
    std::fs::read_to_string(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<GradedBarcode> {
    parse_barcode(&read_input(path)?).map_err(|e| match e {
        Failure::Input(m) => Failure::Input(format!("{}: {m}", path.display())),
        other => other,
    })
}

pub fn run(cli: &Cli) -> Result<Output> {
    let field = Field::new(cli.field)?;
    match &cli.command {
        Command::Barcode { input, convert, stalk, ray_sections, spec, ss } => {
            barcode_cmd(&load(input)?, convert, stalk, ray_sections, *spec, *ss)
        }
        Command::Ops { op } => ops_cmd(op),
        Command::Dist { first, second, check } => dist_cmd(first, second.as_deref(), check.as_deref()),
        Command::Morse { input, route, c0_bound } => {
            let (k, f) = parse_complex(&read_input(input)?)?;
            let b = match route {
                Route::Sublevel => sublevel_barcode(&k, &f, field)?,
                Route::Superlevel => superlevel_barcode(&k, &f, field)?,
                Route::Sheaf => sheaf_route_barcode(&k, &f, field)?,
            };
            if *c0_bound {
                return Ok(Output::value(json!({ "c0_bound": ext_json(&Ext::Fin(c0_two_critical_bound(&b))) })));
            }
            Ok(Output::Barcode(b, None))
        }
        Command::Domain { shape, tmax, invariant, transfer, eigen, steps } => {
            domain_cmd(shape, tmax.as_deref(), invariant.as_deref(), transfer.as_deref(), eigen.as_deref(), *steps)
        }
        Command::Nonsqueeze { n, r1, r2, big_r } => {
            let v = nonsqueeze_check(*n, &parse_radius(r1)?, &parse_radius(r2)?, &parse_radius(big_r)?)?;
            let opt_hom = |h: &Option<HomSpace>| h.as_ref().map_or(Value::Null, homspace_json);
            Ok(Output::value(json!({
                "verdict": v.label(),
                "T": v.witness.as_ref().map_or(Value::Null, |t| ext_json(&Ext::Fin(t.clone()))),
                "ball_invariant": opt_hom(&v.ball_invariant),
                "ellipsoid_invariant": opt_hom(&v.ellipsoid_invariant),
                "trace": v.trace,
            })))
        }
        Command::Plot { input } => Ok(Output::Barcode(load(input)?, None)),
    }
}

fn barcode_cmd(
    b: &GradedBarcode,
    convert: &Option<String>,
    stalk: &Option<String>,
    ray_sections: &Option<String>,
    spec: bool,
    ss: bool,
) -> Result<Output> {
    if let Some(t) = stalk {
        return Ok(Output::hom(&b.stalk(&parse_value(t)?)));
    }
    if let Some(c) = ray_sections {
        return Ok(Output::hom(&b.ray_sections(&parse_value(c)?)?));
    }
    if spec {
        let ends: Vec<Value> = b.spec().into_iter().map(|v| ext_json(&Ext::Fin(v))).collect();
        return Ok(Output::value(json!({ "spec": ends })));
    }
    if ss {
        let rows: Vec<Value> = b
            .bars()
            .iter()
            .map(|bar| json!({ "bar": bar.interval.notation(), "deg": bar.degree, "ss": ss_text(&bar.interval) }))
            .collect();
        let text = b
            .bars()
            .iter()
            .map(|bar| format!("{} [{}]: {}\n", bar.interval.notation(), bar.degree, ss_text(&bar.interval)))
            .collect();
        return Ok(Output::Value { json: json!({ "singular_support": rows }), text });
    }
    match convert {
        Some(c) => Ok(Output::Barcode(b.convert_convention(Convention::parse(c)?)?, None)),
        None => Ok(Output::Barcode(b.clone(), None)),
    }
}

fn ops_cmd(op: &Op) -> Result<Output> {
    let bar = |b: GradedBarcode| Ok(Output::Barcode(b, None));
    let len = |e: Ext| Ok(Output::value(json!({ "value": ext_json(&e) })));
    match op {
        Op::Convolve { a, b } => bar(ops::convolve(&load(a)?, &load(b)?)?),
        Op::ConvolveNp { a, b } => bar(ops::convolve_np(&load(a)?, &load(b)?)?),
        Op::HomStar { a, b } => bar(ops::hom_star(&load(a)?, &load(b)?)?),
        Op::Adjoint { a } => bar(ops::adjoint(&load(a)?)?),
        Op::Rhom { a, b } => Ok(Output::hom(&ops::rhom_total(&load(a)?, &load(b)?)?)),
        Op::RhomSheaf { a, b } => bar(ops::rhom_sheaf(&load(a)?, &load(b)?)?),
        Op::Torsion { a } => len(ops::torsion(&load(a)?)),
        Op::Capacity { a } => len(ops::capacity(&load(a)?)?),
        Op::CapacityPrime { a } => len(ops::capacity_prime(&load(a)?)?),
        Op::TauRank { a, c } => Ok(Output::hom(&ops::tau_rank(&load(a)?, &parse_value(c)?))),
        Op::Shift { a, by, deg } => bar(ops::shift_deg(&ops::shift_t(&load(a)?, &parse_value(by)?), *deg)),
        Op::Cone { a, b, plan } => {
            let pairs = plan
                .iter()
                .map(|p| {
                    let (i, j) = p
                        .split_once(':')
                        .ok_or_else(|| Failure::input(format!("plan entry {p:?} is not i:j")))?;
                    let idx = |s: &str| {
                        s.trim()
                            .parse::<usize>()
                            .map_err(|_| Failure::input(format!("bad index {s:?} in plan")))
                    };
                    Ok((idx(i)?, idx(j)?))
                })
                .collect::<Result<Vec<_>>>()?;
            bar(cone_of_morphism(&load(a)?, &load(b)?, &MorphismPlan::new(pairs))?)
        }
    }
}

fn dist_cmd(first: &Path, second: Option<&Path>, check: Option<&str>) -> Result<Output> {
    let (b1, b2) = match second {
        Some(second) => (load(first)?, load(second)?),
        None => {
            let pair: Value = serde_json::from_str(&read_input(first)?)
                .map_err(|e| Failure::input(format!("{}: {e}", first.display())))?;
            let part = |key: &str| -> Result<GradedBarcode> {
                let v = pair
                    .get(key)
                    .ok_or_else(|| Failure::input(format!("{}: missing \"{key}\"", first.display())))?;
                parse_barcode(&v.to_string())
            };
            (part("b1")?, part("b2")?)
        }
    };
    let (d, witness) = bottleneck_with_witness(&b1, &b2);
    let mut out = json!({ "bottleneck": ext_json(&d) });
    if let Some(m) = witness {
        out["witness"] = json!({
            "pairs": m.pairs,
            "erased_left": m.erased_left,
            "erased_right": m.erased_right,
        });
    }
    if let Some(delta) = check {
        let delta = parse_value(delta)?;
        let holds = brute_interleave(&b1, &b2, &delta)?;
        out["interleaved_at"] = json!({ "delta": ext_json(&Ext::Fin(delta)), "brute_force": holds });
    }
    Ok(Output::value(out))
}

fn domain_spec(shape: &Shape) -> Result<DomainSpec> {
    let d = match shape {
        Shape::Ball { n, r } => DomainSpec::Ball { n: *n, r: parse_radius(r)? },
        Shape::Ellipsoid { n, r, big_r } => DomainSpec::Ellipsoid {
            n: *n,
            r: parse_radius(r)?,
            big_r: parse_radius(big_r)?,
        },
        Shape::ScaledBall { c, n, r } => DomainSpec::ScaledBall {
            c: parse_radius(c)?,
            n: *n,
            r: parse_radius(r)?,
        },
        Shape::File { input } => return parse_domain(&read_input(input)?),
    };
    d.validate()?;
    Ok(d)
}

/// Ticks for a ball of radius `r ≠ 1` read as multiples of `πr²`.
fn tick_unit(d: &DomainSpec) -> Option<TickUnit> {
    let one = BigRational::from_integer(1.into());
    match d {
        DomainSpec::Ball { r, .. } if *r != one => Some(TickUnit {
            unit: PiRational::pi_multiple(r * r),
            name: "πr²".into(),
        }),
        _ => None,
    }
}

fn domain_cmd(
    shape: &Shape,
    tmax: Option<&str>,
    invariant: Option<&str>,
    transfer: Option<&[String]>,
    eigen: Option<&str>,
    steps: usize,
) -> Result<Output> {
    let d = domain_spec(shape)?;
    if let Some(t) = invariant {
        return Ok(Output::hom(&sheaf_invariant(&d, &parse_value(t)?)?));
    }
    if let Some([t1, t2]) = transfer {
        let iso = transfer_is_iso(&d, &parse_value(t1)?, &parse_value(t2)?)?;
        return Ok(Output::value(json!({ "transfer_is_iso": iso })));
    }
    if let Some(t) = eigen {
        let r_sq = match &d {
            DomainSpec::Ball { r, .. } => r * r,
            DomainSpec::ScaledBall { c, r, .. } => c * r * r,
            DomainSpec::Ellipsoid { .. } => {
                return Err(Failure::input("--eigen applies to balls only"));
            }
        };
        let t = parse_value(t)?;
        let count = eigen_count_sq(&t, &r_sq, steps)?;
        return Ok(Output::value(json!({ "eigen_count": count, "steps": steps })));
    }
    let tmax = tmax.ok_or_else(|| {
        Failure::input("domain needs one of --tmax, --invariant, --transfer, --eigen")
    })?;
    match parse_ext(tmax)? {
        Ext::Fin(t) => Ok(Output::Barcode(domain_barcode(&d, &t)?, tick_unit(&d))),
        _ => Err(Failure::input("--tmax must be finite")),
    }
}
