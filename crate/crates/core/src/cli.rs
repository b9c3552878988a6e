//! The `tileforce` command line.
//!
//! Every command prints one JSON document (or a picture for `render`) on
//! standard output and diagnostics on standard error. Exit codes follow
//! [`Error::exit_code`].

use std::ffi::OsString;
use std::io::Read;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::error::{Error, Result, UntileableReason};
use crate::forcing::{
    count_tilings, enumerate_tilings, forcing_number, forcing_upper_bound, greedy_forcing_set, min_max_excess, Limits,
};
use crate::height::{
    boundary_criterion, boundary_heights, c_profile, extend_heights, extremal_heights, height_from_tiling,
    tiling_from_height, validate_height, GProfile, HeightField,
};
use crate::lattice::format::cell_to_json;
use crate::lattice::{
    generate, parse_region, random_region, serialize_region_ascii, serialize_region_json, HexSides, Lattice, Region,
    Shape, Tile, Tiling, Vertex,
};
use crate::render::{render, Payloads, RenderSpec, Target};

#[derive(Debug, Parser)]
#[command(name = "tileforce", version, about = "Height functions and forcing numbers of domino and lozenge tilings")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a region file.
    Gen(GenArgs),
    /// Decide tileability and summarise the extremal tilings.
    Check(RegionArg),
    /// Extremal heights, g and the forcing lower bound.
    #[command(visible_alias = "bound")]
    Heights(RegionArg),
    /// Forcing number: exact search or constructive upper bound.
    Force(ForceArgs),
    /// Minimum maximum excess of the black cells.
    Excess(ExcessArgs),
    /// Draw a region with overlays.
    Render(RenderArgs),
    /// Run the consistency checks on one region.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ShapeKind {
    Square,
    Rectangle,
    Hexagon,
    Random,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum LatticeArg {
    Square,
    Triangular,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RegionFormat {
    Json,
    Ascii,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(long, value_enum)]
    pub shape: ShapeKind,
    #[arg(long)]
    pub n: Option<i32>,
    #[arg(long)]
    pub m: Option<i32>,
    #[arg(long)]
    pub a: Option<i32>,
    #[arg(long)]
    pub b: Option<i32>,
    #[arg(long)]
    pub c: Option<i32>,
    /// Asymmetry of a hexagon: sides a, b, c, a+t, b-t, c+t.
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    pub t: i32,
    /// Lattice for random regions.
    #[arg(long, value_enum, default_value = "square")]
    pub lattice: LatticeArg,
    /// Cell count for random regions.
    #[arg(long)]
    pub size: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value = "json")]
    pub format: RegionFormat,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct RegionArg {
    /// Region file (JSON or ASCII); `-` reads standard input.
    pub region: PathBuf,
}

#[derive(Debug, Clone, Copy, Args)]
pub struct Guards {
    #[arg(long, default_value_t = 10_000_000)]
    pub max_tilings: u64,
    #[arg(long, default_value_t = 28)]
    pub max_matching: usize,
    #[arg(long, default_value_t = 24)]
    pub max_black: usize,
}

impl Guards {
    fn limits(&self) -> Limits {
        Limits {
            max_tilings: self.max_tilings,
            max_matching: self.max_matching,
            max_black: self.max_black,
        }
    }
}

#[derive(Debug, Args)]
#[group(id = "mode", required = true, multiple = false, args = ["exact", "upper"])]
pub struct ForceArgs {
    pub region: PathBuf,
    /// Exhaustive search over tilings.
    #[arg(long)]
    pub exact: bool,
    /// Constructive upper bound, no enumeration.
    #[arg(long)]
    pub upper: bool,
    #[command(flatten)]
    pub guards: Guards,
}

#[derive(Debug, Args)]
pub struct ExcessArgs {
    pub region: PathBuf,
    #[arg(long, default_value_t = 24)]
    pub max_black: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TargetArg {
    Ascii,
    Svg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TilingChoice {
    /// Tiling of the minimal height function.
    Min,
    /// Tiling of the maximal height function.
    Max,
    /// The tiling of the constructive upper bound.
    Upper,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Extreme {
    Min,
    Max,
}

#[derive(Debug, Args)]
pub struct RenderArgs {
    pub region: PathBuf,
    #[arg(long, value_enum, default_value = "svg")]
    pub target: TargetArg,
    #[arg(long, value_enum)]
    pub tiling: Option<TilingChoice>,
    /// Highlight a forcing set of the drawn tiling.
    #[arg(long, requires = "tiling")]
    pub forcing_set: bool,
    #[arg(long, value_enum)]
    pub heights: Option<Extreme>,
    /// Annotate vertices with `h_max - h_min`.
    #[arg(long)]
    pub g: bool,
    #[arg(long)]
    pub cell_colors: bool,
    #[arg(long, default_value_t = 40, value_parser = clap::value_parser!(u32).range(1..))]
    pub scale: u32,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub region: PathBuf,
    #[command(flatten)]
    pub guards: Guards,
}

/// What a finished command produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn failed(e: &Error) -> Self {
        Outcome {
            code: e.exit_code(),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        }
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome::ok(text)
            };
        }
    };
    execute(&cli)
}

pub fn execute(cli: &Cli) -> Outcome {
    let result = match &cli.command {
        Command::Gen(a) => cmd_gen(a).map(Outcome::ok),
        Command::Check(a) => cmd_check(&a.region),
        Command::Heights(a) => read_region(&a.region).and_then(|r| heights_json(&r)).map(Outcome::ok),
        Command::Force(a) => cmd_force(a).map(Outcome::ok),
        Command::Excess(a) => read_region(&a.region)
            .and_then(|r| min_max_excess(&r, a.max_black))
            .map(|rep| Outcome::ok(rep.to_json())),
        Command::Render(a) => cmd_render(a).map(Outcome::ok),
        Command::Verify(a) => cmd_verify(a),
    };
    result.unwrap_or_else(|e| Outcome::failed(&e))
}

/// Caps rayon's global pool from `TILEFORCE_THREADS`, if set.
pub fn configure_threads() -> Result<()> {
    let Ok(raw) = std::env::var("TILEFORCE_THREADS") else {
        return Ok(());
    };
    let n: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&n| n >= 1)
        .ok_or_else(|| Error::InvalidParameter(format!("TILEFORCE_THREADS must be a positive integer, got {raw:?}")))?;
    // a second call in the same process keeps the first pool
    let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    Ok(())
}

pub fn read_region(path: &PathBuf) -> Result<Region> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?
    };
    parse_region(&text)
}

fn write_or_return(out: &Option<PathBuf>, body: String) -> Result<String> {
    match out {
        Some(p) => {
            std::fs::write(p, body).map_err(|e| Error::Io(format!("{}: {e}", p.display())))?;
            Ok(String::new())
        }
        None => Ok(body),
    }
}

fn need(v: Option<i32>, flag: &str) -> Result<i32> {
    v.ok_or_else(|| Error::InvalidParameter(format!("--{flag} is required for this shape")))
}

fn cmd_gen(a: &GenArgs) -> Result<String> {
    let region = match a.shape {
        ShapeKind::Square => generate(Shape::Square(need(a.n, "n")?))?,
        ShapeKind::Rectangle => generate(Shape::Rectangle {
            m: need(a.m, "m")?,
            n: need(a.n, "n")?,
        })?,
        ShapeKind::Hexagon => HexSides {
            a: need(a.a, "a")?,
            b: need(a.b, "b")?,
            c: need(a.c, "c")?,
            t: a.t,
        }
        .region()?,
        ShapeKind::Random => {
            let lattice = match a.lattice {
                LatticeArg::Square => Lattice::Square,
                LatticeArg::Triangular => Lattice::Triangular,
            };
            let size = a
                .size
                .ok_or_else(|| Error::InvalidParameter("--size is required for random regions".into()))?;
            random_region(lattice, size, a.seed)?
        }
    };
    let body = match a.format {
        RegionFormat::Json => serialize_region_json(&region),
        RegionFormat::Ascii => serialize_region_ascii(&region)?,
    };
    write_or_return(&a.out, body)
}

fn vertex_json(v: Vertex) -> Value {
    json!([v.x, v.y])
}

fn tiles_json(tiles: &[Tile]) -> Value {
    let text: Vec<String> = tiles
        .iter()
        .map(|t| format!("[{},{}]", cell_to_json(&t.0), cell_to_json(&t.1)))
        .collect();
    serde_json::from_str(&format!("[{}]", text.join(","))).expect("cells serialise to JSON")
}

fn field_json<'a>(values: impl Iterator<Item = (&'a Vertex, i64)>) -> Value {
    let mut m = Map::new();
    for (v, h) in values {
        m.insert(format!("{},{}", v.x, v.y), json!(h));
    }
    Value::Object(m)
}

fn line(v: Value) -> String {
    let mut s = v.to_string();
    s.push('\n');
    s
}

fn untileable_json(e: &Error) -> Option<Value> {
    match e {
        Error::BoundaryMismatch { net } | Error::Untileable(UntileableReason::BoundaryMismatch { net }) => {
            Some(json!({"tileable": false, "reason": "boundary-mismatch", "net": net}))
        }
        Error::Untileable(UntileableReason::BoundaryViolated { vertex, fixed, relaxed }) => Some(json!({
            "tileable": false,
            "reason": "boundary-violated",
            "vertex": vertex_json(*vertex),
            "fixed": fixed,
            "relaxed": relaxed,
        })),
        Error::Untileable(UntileableReason::Inconsistent) => Some(json!({"tileable": false, "reason": "inconsistent"})),
        _ => None,
    }
}

fn cmd_check(path: &PathBuf) -> Result<Outcome> {
    let region = read_region(path)?;
    let ex = match extremal_heights(&region) {
        Ok(ex) => ex,
        Err(e) => {
            return match untileable_json(&e) {
                Some(body) => Ok(Outcome {
                    code: 1,
                    stdout: line(body),
                    stderr: format!("untileable: {e}\n"),
                }),
                None => Err(e),
            }
        }
    };
    let min = tiling_from_height(&region, &ex.hmin)?;
    let max = tiling_from_height(&region, &ex.hmax)?;
    let g = GProfile::from_extremes(&ex);
    Ok(Outcome::ok(line(json!({
        "tileable": true,
        "lattice": region.lattice().name(),
        "cells": region.len(),
        "tiles": region.len() / 2,
        "base": vertex_json(ex.hmin.base),
        "max_g": g.max,
        "min_tiling": tiles_json(min.tiles()),
        "max_tiling": tiles_json(max.tiles()),
    }))))
}

fn heights_json(region: &Region) -> Result<String> {
    let ex = extremal_heights(region)?;
    let g = GProfile::from_extremes(&ex);
    Ok(line(json!({
        "base": vertex_json(ex.hmin.base),
        "hmin": field_json(ex.hmin.values.iter().map(|(v, h)| (v, *h))),
        "hmax": field_json(ex.hmax.values.iter().map(|(v, h)| (v, *h))),
        "g": field_json(g.g.iter().map(|(v, h)| (v, *h))),
        "max_g": g.max,
        "argmax": vertex_json(g.argmax),
        "lower_bound": g.lower_bound(region.lattice()),
    })))
}

fn cmd_force(a: &ForceArgs) -> Result<String> {
    let region = read_region(&a.region)?;
    let cert = if a.exact {
        forcing_number(&region, &a.guards.limits())?
    } else {
        forcing_upper_bound(&region)?
    };
    Ok(cert.to_json())
}

fn cmd_render(a: &RenderArgs) -> Result<String> {
    let region = read_region(&a.region)?;
    let needs_heights = a.tiling.is_some() || a.heights.is_some() || a.g;
    let ex = if needs_heights { Some(extremal_heights(&region)?) } else { None };
    let ex = ex.as_ref();
    let mut forcing: Option<Vec<Tile>> = None;
    let tiling: Option<Tiling> = match a.tiling {
        None => None,
        Some(TilingChoice::Min) => Some(tiling_from_height(&region, &ex.expect("computed").hmin)?),
        Some(TilingChoice::Max) => Some(tiling_from_height(&region, &ex.expect("computed").hmax)?),
        Some(TilingChoice::Upper) => {
            let cert = forcing_upper_bound(&region)?;
            forcing = Some(cert.forcing_set);
            Some(cert.tiling)
        }
    };
    if a.forcing_set && forcing.is_none() {
        forcing = Some(greedy_forcing_set(&region, tiling.as_ref().expect("clap requires --tiling"))?);
    }
    let heights: Option<&HeightField> = match a.heights {
        None => None,
        Some(Extreme::Min) => Some(&ex.expect("computed").hmin),
        Some(Extreme::Max) => Some(&ex.expect("computed").hmax),
    };
    let g_field = ex.filter(|_| a.g).map(|ex| {
        let g = GProfile::from_extremes(ex);
        let mut f = HeightField::new(ex.hmin.base);
        for (v, x) in g.g {
            f.set(v, x);
        }
        f
    });
    let spec = RenderSpec {
        target: match a.target {
            TargetArg::Ascii => Target::Ascii,
            TargetArg::Svg => Target::Svg,
        },
        scale: a.scale,
        ..RenderSpec::new(Target::Svg)
    }
    .with(|o| {
        o.tiling = tiling.is_some();
        o.forcing_set = a.forcing_set;
        o.heights = heights.is_some();
        o.g = a.g;
        o.cell_colors = a.cell_colors;
    });
    let payloads = Payloads {
        tiling: tiling.as_ref(),
        heights,
        g: g_field.as_ref(),
        forcing_set: forcing.as_deref(),
    };
    let mut body = render(&region, &spec, &payloads)?;
    if !body.ends_with('\n') {
        body.push('\n');
    }
    write_or_return(&a.out, body)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Status {
    Pass,
    Fail,
    Skipped,
}

struct Check {
    name: &'static str,
    status: Status,
    detail: String,
}

fn check(name: &'static str, ok: bool, detail: impl Into<String>) -> Check {
    Check {
        name,
        status: if ok { Status::Pass } else { Status::Fail },
        detail: detail.into(),
    }
}

fn skipped(name: &'static str, detail: impl Into<String>) -> Check {
    Check {
        name,
        status: Status::Skipped,
        detail: detail.into(),
    }
}

// tiling enumeration in `verify` stops here; the sandwich check is skipped beyond it
const VERIFY_TILINGS: u64 = 20_000;
// the exact forcing number is only attempted up to this many tiles
const VERIFY_EXACT_TILES: usize = 18;
// g = 2c or 3c is checked up to this many vertices
const VERIFY_PROFILE_VERTICES: usize = 400;

fn cmd_verify(a: &VerifyArgs) -> Result<Outcome> {
    let region = read_region(&a.region)?;
    let limits = a.guards.limits();
    let lattice = region.lattice();
    let ex = extremal_heights(&region)?;
    let mut checks = Vec::new();

    let vmin = validate_height(&region, &ex.hmin);
    let vmax = validate_height(&region, &ex.hmax);
    checks.push(check(
        "extremal-heights-valid",
        vmin.is_valid() && vmax.is_valid(),
        format!("h_min: {vmin}; h_max: {vmax}"),
    ));

    let mut round = true;
    for h in [&ex.hmin, &ex.hmax] {
        let t = tiling_from_height(&region, h)?;
        round &= height_from_tiling(&region, &t, h.base)? == *h;
    }
    checks.push(check("round-trip", round, "h_min and h_max through their tilings"));

    match enumerate_tilings(region.patch(), VERIFY_TILINGS.min(limits.max_tilings)) {
        Ok(all) => {
            let mut ok = true;
            for t in &all {
                let h = height_from_tiling(&region, t, ex.hmin.base)?;
                ok &= validate_height(&region, &h).is_valid();
                ok &= h.iter().all(|(v, x)| ex.hmin.get(&v) <= Some(x) && Some(x) <= ex.hmax.get(&v));
                ok &= tiling_from_height(&region, &h)? == *t;
            }
            checks.push(check("sandwich", ok, format!("{} tilings", all.len())));
        }
        Err(Error::Overflow { limit }) => checks.push(skipped("sandwich", format!("more than {limit} tilings"))),
        Err(e) => return Err(e),
    }

    let g = GProfile::from_extremes(&ex);
    if region.vertices().len() <= VERIFY_PROFILE_VERTICES {
        let c = c_profile(&region);
        let factor = match lattice {
            Lattice::Square => 2,
            Lattice::Triangular => 3,
        };
        let bad = g
            .g
            .iter()
            .find(|(v, x)| **x != factor * c[*v])
            .map(|(v, x)| format!("g({v}) = {x}, c = {}", c[v]));
        let detail = bad.clone().unwrap_or_else(|| format!("{} vertices", g.g.len()));
        checks.push(check("g-versus-c", bad.is_none(), detail));
    } else {
        checks.push(skipped("g-versus-c", format!("more than {VERIFY_PROFILE_VERTICES} vertices")));
    }

    let ext = extend_heights(&region, &boundary_heights(&region)?)?;
    checks.push(check("boundary-extension", ext == ex.hmax, "extension of the boundary values equals h_max"));
    checks.push(check("boundary-criterion", boundary_criterion(&region), "boundary pairs within alpha"));

    let lower = g.lower_bound(lattice);
    let upper = forcing_upper_bound(&region)?.f() as i64;
    let mut chain = vec![("lower_bound", lower)];
    match min_max_excess(&region, limits.max_black) {
        Ok(rep) => chain.push(("min_max_excess", rep.min_max_excess)),
        Err(Error::GuardExceeded { .. }) => {}
        Err(e) => return Err(e),
    }
    let tiles = region.len() / 2;
    if tiles <= VERIFY_EXACT_TILES.min(limits.max_matching)
        && count_tilings(region.patch(), limits.max_tilings).is_ok()
    {
        chain.push(("forcing_number", forcing_number(&region, &limits)?.f() as i64));
    }
    chain.push(("upper_bound", upper));
    let ok = chain.windows(2).all(|w| w[0].1 <= w[1].1);
    let detail = chain.iter().map(|(k, v)| format!("{k} {v}")).collect::<Vec<_>>().join(" <= ");
    checks.push(check("bound-chain", ok, detail));

    let pass = checks.iter().all(|c| c.status != Status::Fail);
    let body = json!({
        "lattice": lattice.name(),
        "cells": region.len(),
        "checks": checks.iter().map(|c| json!({
            "name": c.name,
            "status": match c.status {
                Status::Pass => "pass",
                Status::Fail => "fail",
                Status::Skipped => "skipped",
            },
            "detail": c.detail,
        })).collect::<Vec<_>>(),
        "pass": pass,
    });
    Ok(Outcome {
        code: if pass { 0 } else { 1 },
        stdout: line(body),
        stderr: String::new(),
    })
}
