//! Region text formats.
//!
//! ASCII (square lattice only): one line per row, top line is the largest
//! `y`; `'#'` at column `x` marks cell `(x, y)`, `'.'` is empty.
//!
//! JSON: `{"lattice":"square","cells":[[x,y],...]}` or
//! `{"lattice":"triangular","cells":[[u,v,"U"],...]}`, cells in canonical order.

use std::fmt::Write;

use serde_json::Value;

use super::{Cell, CellShape, Lattice, Region};
use crate::error::{Error, Result};

/// Parses either format, choosing JSON when the first non-blank character is `{`.
pub fn parse_region(text: &str) -> Result<Region> {
    if text.trim_start().starts_with('{') {
        parse_region_json(text)
    } else {
        parse_region_ascii(text)
    }
}

pub fn parse_region_ascii(text: &str) -> Result<Region> {
    let lines: Vec<&str> = text.trim_end_matches(['\n', '\r']).split('\n').map(|l| l.trim_end_matches('\r')).collect();
    let rows = lines.len() as i32;
    let mut cells = Vec::new();
    for (i, line) in lines.iter().enumerate() {
        let y = rows - 1 - i as i32;
        for (x, ch) in line.chars().enumerate() {
            match ch {
                '#' => cells.push(Cell::square(x as i32, y)),
                '.' | ' ' => {}
                other => {
                    return Err(Error::Parse {
                        line: i + 1,
                        column: x + 1,
                        message: format!("unexpected character {other:?}"),
                    })
                }
            }
        }
    }
    Region::new(cells)
}

pub fn serialize_region_ascii(region: &Region) -> Result<String> {
    if region.lattice() != Lattice::Square {
        return Err(Error::UnsupportedTarget("ascii regions are square-lattice only".into()));
    }
    let cells = region.cells();
    if cells.iter().any(|c| c.anchor.x < 0 || c.anchor.y < 0) {
        return Err(Error::InvalidParameter("ascii format needs nonnegative coordinates".into()));
    }
    let xmax = cells.iter().map(|c| c.anchor.x).max().unwrap_or(0);
    let ymax = cells.iter().map(|c| c.anchor.y).max().unwrap_or(0);
    let mut out = String::new();
    for y in (0..=ymax).rev() {
        let mut line: String = (0..=xmax)
            .map(|x| if region.contains(&Cell::square(x, y)) { '#' } else { '.' })
            .collect();
        let trimmed = line.trim_end_matches('.').len();
        line.truncate(trimmed);
        out.push_str(&line);
        out.push('\n');
    }
    Ok(out)
}

fn malformed(msg: impl Into<String>) -> Error {
    Error::Malformed(msg.into())
}

/// Parses one cell of the JSON format.
pub(crate) fn cell_from_json(value: &Value) -> Result<Cell> {
    let arr = value.as_array().ok_or_else(|| malformed(format!("cell {value} is not an array")))?;
    let coord = |i: usize| -> Result<i32> {
        arr[i]
            .as_i64()
            .and_then(|n| i32::try_from(n).ok())
            .ok_or_else(|| malformed(format!("cell {value}: coordinate {} is not an integer", i + 1)))
    };
    match arr.len() {
        2 => Ok(Cell::square(coord(0)?, coord(1)?)),
        3 => match arr[2].as_str() {
            Some("U") => Ok(Cell::up(coord(0)?, coord(1)?)),
            Some("D") => Ok(Cell::down(coord(0)?, coord(1)?)),
            _ => Err(malformed(format!("cell {value}: orientation must be \"U\" or \"D\""))),
        },
        _ => Err(malformed(format!("cell {value} must have 2 or 3 entries"))),
    }
}

pub(crate) fn cell_to_json(cell: &Cell) -> String {
    let (x, y) = (cell.anchor.x, cell.anchor.y);
    match cell.shape {
        CellShape::Square => format!("[{x},{y}]"),
        CellShape::Up => format!("[{x},{y},\"U\"]"),
        CellShape::Down => format!("[{x},{y},\"D\"]"),
    }
}

pub fn parse_region_json(text: &str) -> Result<Region> {
    let doc: Value = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let lattice = match doc.get("lattice").and_then(Value::as_str) {
        Some("square") => Lattice::Square,
        Some("triangular") => Lattice::Triangular,
        _ => return Err(malformed("\"lattice\" must be \"square\" or \"triangular\"")),
    };
    let cells = doc
        .get("cells")
        .and_then(Value::as_array)
        .ok_or_else(|| malformed("\"cells\" must be an array"))?
        .iter()
        .map(cell_from_json)
        .collect::<Result<Vec<_>>>()?;
    if let Some(c) = cells.iter().find(|c| c.lattice() != lattice) {
        return Err(Error::MixedLattice(*c));
    }
    Region::new(cells)
}

pub fn serialize_region_json(region: &Region) -> String {
    let mut out = String::new();
    write!(out, "{{\"lattice\":\"{}\",\"cells\":[", region.lattice()).unwrap();
    for (i, c) in region.cells().iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        out.push_str(&cell_to_json(c));
    }
    out.push_str("]}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{generate, Shape};

    #[test]
    fn ascii_square() {
        let r = parse_region("##\n##").unwrap();
        assert_eq!(r, generate(Shape::Square(2)).unwrap());
        assert_eq!(serialize_region_ascii(&r).unwrap(), "##\n##\n");
    }

    #[test]
    fn ascii_top_line_is_largest_y() {
        let r = parse_region("#.\n##\n").unwrap();
        assert!(r.contains(&Cell::square(0, 1)));
        assert!(!r.contains(&Cell::square(1, 1)));
        assert_eq!(serialize_region_ascii(&r).unwrap(), "#\n##\n");
    }

    #[test]
    fn ascii_ring_is_rejected() {
        assert_eq!(parse_region("###\n#.#\n###"), Err(Error::NotSimplyConnected(Cell::square(1, 1))));
    }

    #[test]
    fn ascii_bad_char() {
        assert!(matches!(parse_region("#x"), Err(Error::Parse { line: 1, column: 2, .. })));
    }

    #[test]
    fn json_round_trip_hexagon() {
        let r = generate(Shape::Hexagon { a: 1, b: 1, c: 1 }).unwrap();
        let text = serialize_region_json(&r);
        assert_eq!(
            text,
            "{\"lattice\":\"triangular\",\"cells\":[[0,0,\"D\"],[1,0,\"U\"],[1,0,\"D\"],[0,1,\"U\"],[0,1,\"D\"],[1,1,\"U\"]]}\n"
        );
        let back = parse_region_json(&text).unwrap();
        assert_eq!(back, r);
        assert_eq!(serialize_region_json(&back), text);
    }

    #[test]
    fn json_errors() {
        assert!(matches!(
            parse_region_json(r#"{"lattice":"square","cells":[[0,0],[1,0,"U"]]}"#),
            Err(Error::MixedLattice(_))
        ));
        assert!(matches!(parse_region_json(r#"{"lattice":"hex","cells":[]}"#), Err(Error::Malformed(_))));
        assert!(matches!(parse_region_json("{"), Err(Error::Parse { .. })));
        assert!(matches!(
            parse_region_json(r#"{"lattice":"square","cells":[[0,0],[0,0]]}"#),
            Err(Error::DuplicateCell(_))
        ));
    }
}
