use std::collections::HashMap;

use super::{missing, Payloads, RenderSpec};
use crate::error::{Error, Result};
use crate::height::HeightField;
use crate::lattice::{Cell, Lattice, Region, Tile, Vertex};

/// Text picture of a square-lattice region, top row first.
///
/// Cells show `#`, or with the tiling overlay the letter of their tile,
/// upper case for tiles of the forcing set. Letters `a`, `b`, ... (wrapping
/// after `z`) are handed out in reading order of the picture. Height and `g` overlays follow as
/// blank-line separated blocks of vertex values. There is no trailing newline.
pub fn render_ascii(region: &Region, spec: &RenderSpec, payloads: &Payloads) -> Result<String> {
    if region.lattice() != Lattice::Square {
        return Err(Error::UnsupportedTarget("ascii output needs a square-lattice region".into()));
    }
    let ov = spec.overlays;
    if ov.cell_colors {
        return Err(Error::UnsupportedTarget("ascii output has no cell-colour overlay".into()));
    }
    let cells = region.cells();
    let x0 = cells.iter().map(|c| c.anchor.x).min().unwrap_or(0);
    let x1 = cells.iter().map(|c| c.anchor.x).max().unwrap_or(0);
    let y0 = cells.iter().map(|c| c.anchor.y).min().unwrap_or(0);
    let y1 = cells.iter().map(|c| c.anchor.y).max().unwrap_or(0);

    let forced = payloads.forced(ov.forcing_set);
    let mut label: HashMap<Cell, char> = HashMap::new();
    if ov.tiling {
        let tiling = payloads.tiling.ok_or_else(|| missing("tiling"))?;
        let mut tile_of: HashMap<Cell, Tile> = HashMap::new();
        for t in tiling.tiles() {
            tile_of.insert(t.0, *t);
            tile_of.insert(t.1, *t);
        }
        let mut next = 0usize;
        for y in (y0..=y1).rev() {
            for x in x0..=x1 {
                let c = Cell::square(x, y);
                let Some(t) = tile_of.get(&c) else { continue };
                if label.contains_key(&c) {
                    continue;
                }
                let mut ch = (b'a' + (next % 26) as u8) as char;
                next += 1;
                if forced.contains(t) {
                    ch = ch.to_ascii_uppercase();
                }
                label.insert(t.0, ch);
                label.insert(t.1, ch);
            }
        }
    }
    let rows: Vec<String> = (y0..=y1)
        .rev()
        .map(|y| {
            (x0..=x1)
                .map(|x| {
                    let c = Cell::square(x, y);
                    match label.get(&c) {
                        Some(&ch) => ch,
                        None if region.contains(&c) => '#',
                        None => '.',
                    }
                })
                .collect()
        })
        .collect();
    let mut blocks = vec![rows.join("\n")];
    if ov.heights {
        blocks.push(vertex_block(region, payloads.heights.ok_or_else(|| missing("heights"))?));
    }
    if ov.g {
        blocks.push(vertex_block(region, payloads.g.ok_or_else(|| missing("g"))?));
    }
    Ok(blocks.join("\n\n"))
}

fn vertex_block(region: &Region, field: &HeightField) -> String {
    let verts = region.vertices();
    let x0 = verts.iter().map(|v| v.x).min().unwrap_or(0);
    let x1 = verts.iter().map(|v| v.x).max().unwrap_or(0);
    let y0 = verts.iter().map(|v| v.y).min().unwrap_or(0);
    let y1 = verts.iter().map(|v| v.y).max().unwrap_or(0);
    let width = verts
        .iter()
        .filter_map(|v| field.get(v))
        .map(|h| h.to_string().len())
        .max()
        .unwrap_or(1);
    (y0..=y1)
        .rev()
        .map(|y| {
            let cols: Vec<String> = (x0..=x1)
                .map(|x| match field.get(&Vertex::new(x, y)) {
                    Some(h) if region.contains_vertex(&Vertex::new(x, y)) => format!("{h:>width$}"),
                    _ => format!("{:>width$}", "."),
                })
                .collect();
            cols.join(" ").trim_end().to_string()
        })
        .collect::<Vec<_>>()
        .join("\n")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::height::extremal_heights;
    use crate::lattice::{generate, Shape, Tiling};
    use crate::render::Target;

    fn phases() -> (Tiling, Tiling) {
        let s = Cell::square;
        (
            Tiling::from_tiles([Tile::new(s(0, 0), s(0, 1)), Tile::new(s(1, 0), s(1, 1))]),
            Tiling::from_tiles([Tile::new(s(0, 0), s(1, 0)), Tile::new(s(0, 1), s(1, 1))]),
        )
    }

    #[test]
    fn square2_letters() {
        let r = generate(Shape::Square(2)).unwrap();
        let spec = RenderSpec::new(Target::Ascii).with(|o| o.tiling = true);
        let (vertical, horizontal) = phases();
        let p = Payloads {
            tiling: Some(&vertical),
            ..Default::default()
        };
        assert_eq!(render_ascii(&r, &spec, &p).unwrap(), "ab\nab");
        let p = Payloads {
            tiling: Some(&horizontal),
            ..Default::default()
        };
        assert_eq!(render_ascii(&r, &spec, &p).unwrap(), "aa\nbb");
    }

    #[test]
    fn heights_block() {
        let r = generate(Shape::Square(2)).unwrap();
        let h = extremal_heights(&r).unwrap().hmax;
        let spec = RenderSpec::new(Target::Ascii).with(|o| o.heights = true);
        let p = Payloads {
            heights: Some(&h),
            ..Default::default()
        };
        assert_eq!(render_ascii(&r, &spec, &p).unwrap(), "##\n##\n\n 0 -1  0\n 1  2  1\n 0 -1  0");
    }

    #[test]
    fn triangular_is_unsupported() {
        let r = generate(Shape::Hexagon { a: 1, b: 1, c: 1 }).unwrap();
        let spec = RenderSpec::new(Target::Ascii);
        assert!(matches!(
            render_ascii(&r, &spec, &Payloads::default()),
            Err(Error::UnsupportedTarget(_))
        ));
    }
}
