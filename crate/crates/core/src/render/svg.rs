use std::fmt::Write;

use super::{missing, Payloads, RenderSpec};
use crate::error::Result;
use crate::height::HeightField;
use crate::lattice::{cartesian, Color, Lattice, Region, Tile, Vertex};

const MARGIN: f64 = 0.5;
const FORCED_FILL: &str = "#808080";

// screen placement of lattice vertices, y pointing down
struct Frame {
    lattice: Lattice,
    scale: f64,
    min_x: f64,
    max_y: f64,
    width: f64,
    height: f64,
}

impl Frame {
    fn of(region: &Region, scale: u32) -> Frame {
        let lattice = region.lattice();
        let pts: Vec<(f64, f64)> = region.vertices().iter().map(|&v| cartesian(lattice, v)).collect();
        let fold = |f: fn(f64, f64) -> f64, init: f64, pick: fn(&(f64, f64)) -> f64| pts.iter().map(pick).fold(init, f);
        let min_x = fold(f64::min, f64::INFINITY, |p| p.0);
        let max_x = fold(f64::max, f64::NEG_INFINITY, |p| p.0);
        let min_y = fold(f64::min, f64::INFINITY, |p| p.1);
        let max_y = fold(f64::max, f64::NEG_INFINITY, |p| p.1);
        let scale = scale as f64;
        Frame {
            lattice,
            scale,
            min_x,
            max_y,
            width: (max_x - min_x + 2.0 * MARGIN) * scale,
            height: (max_y - min_y + 2.0 * MARGIN) * scale,
        }
    }

    fn point(&self, v: Vertex) -> (f64, f64) {
        let (x, y) = cartesian(self.lattice, v);
        ((x - self.min_x + MARGIN) * self.scale, (self.max_y - y + MARGIN) * self.scale)
    }

    fn points(&self, vs: &[Vertex]) -> String {
        vs.iter()
            .map(|&v| {
                let (x, y) = self.point(v);
                format!("{},{}", num(x), num(y))
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

// One element per line, two-space indent. Attribute values are numbers
// or fixed strings, so nothing needs escaping.
struct Doc {
    out: String,
}

impl Doc {
    fn element(&mut self, name: &str, attrs: &[(&str, &str)], text: Option<&str>) {
        self.out.push_str("  <");
        self.out.push_str(name);
        for (k, v) in attrs {
            write!(self.out, " {k}=\"{v}\"").unwrap();
        }
        match text {
            Some(t) => writeln!(self.out, ">{t}</{name}>").unwrap(),
            None => self.out.push_str("/>\n"),
        }
    }
}

// fixed three decimals; adding 0.0 turns -0 into 0
fn num(x: f64) -> String {
    format!("{:.3}", x + 0.0)
}

// boundary walk of the tile without the repeated start vertex
fn tile_outline(tile: &Tile) -> Result<Vec<Vertex>> {
    let mut cycle = Region::new(tile.cells())?.boundary_cycle().to_vec();
    if cycle.len() > 1 && cycle.first() == cycle.last() {
        cycle.pop();
    }
    Ok(cycle)
}

/// SVG 1.1 picture using only `rect`, `polygon`, `line` and `text`.
///
/// Each tile is one polygon; each forcing-set tile gets an extra gray
/// polygon underneath. Without the tiling overlay the lattice edges of the
/// region are drawn as lines.
pub fn render_svg(region: &Region, spec: &RenderSpec, payloads: &Payloads) -> Result<String> {
    let ov = spec.overlays;
    let frame = Frame::of(region, spec.scale.max(1));
    let (width, height) = (num(frame.width), num(frame.height));
    let mut doc = Doc {
        out: format!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\">\n"
        ),
    };
    doc.element("rect", &[("width", &width), ("height", &height), ("fill", "#ffffff")], None);

    if ov.cell_colors {
        for cell in region.cells() {
            let fill = match cell.color() {
                Color::White => "#ffffff",
                Color::Black => "#d0d0d0",
            };
            let pts = frame.points(&cell.corners());
            doc.element(
                "polygon",
                &[("class", "cell"), ("points", &pts), ("fill", fill), ("stroke", "none")],
                None,
            );
        }
    }

    if ov.tiling {
        let tiling = payloads.tiling.ok_or_else(|| missing("tiling"))?;
        if ov.forcing_set {
            let mut set = payloads.forcing_set.ok_or_else(|| missing("forcing set"))?.to_vec();
            set.sort();
            for t in &set {
                let pts = frame.points(&tile_outline(t)?);
                doc.element(
                    "polygon",
                    &[("class", "forced"), ("points", &pts), ("fill", FORCED_FILL), ("stroke", "none")],
                    None,
                );
            }
        }
        for t in tiling.tiles() {
            let pts = frame.points(&tile_outline(t)?);
            doc.element(
                "polygon",
                &[
                    ("class", "tile"),
                    ("points", &pts),
                    ("fill", "none"),
                    ("stroke", "#000000"),
                    ("stroke-width", "2"),
                ],
                None,
            );
        }
    } else {
        let patch = region.patch();
        for e in patch.edges() {
            let (a, b) = (patch.vertices()[e.a], patch.vertices()[e.b]);
            let ((x1, y1), (x2, y2)) = (frame.point(a), frame.point(b));
            doc.element(
                "line",
                &[
                    ("x1", &num(x1)),
                    ("y1", &num(y1)),
                    ("x2", &num(x2)),
                    ("y2", &num(y2)),
                    ("stroke", "#000000"),
                    ("stroke-width", if e.is_boundary() { "2" } else { "1" }),
                ],
                None,
            );
        }
    }

    let size = num((frame.scale * 0.3).max(6.0));
    if ov.heights {
        let h = payloads.heights.ok_or_else(|| missing("heights"))?;
        labels(&mut doc, region, &frame, h, "height", -0.15 * frame.scale, &size);
    }
    if ov.g {
        let g = payloads.g.ok_or_else(|| missing("g"))?;
        let dy = if ov.heights { 0.3 } else { -0.15 };
        labels(&mut doc, region, &frame, g, "g", dy * frame.scale, &size);
    }

    doc.out.push_str("</svg>\n");
    Ok(doc.out)
}

fn labels(doc: &mut Doc, region: &Region, frame: &Frame, field: &HeightField, class: &str, dy: f64, size: &str) {
    for &v in region.vertices() {
        let Some(value) = field.get(&v) else { continue };
        let (x, y) = frame.point(v);
        doc.element(
            "text",
            &[
                ("class", class),
                ("x", &num(x)),
                ("y", &num(y + dy)),
                ("font-size", size),
                ("text-anchor", "middle"),
            ],
            Some(&value.to_string()),
        );
    }
}
