//! Lattice coordinates, cells and regions.
//!
//! Both lattices use integer coordinates only. On the square lattice a
//! vertex is a point of Z² and a cell is named by its lower-left corner. On
//! the triangular lattice vertices use axial coordinates `(u, v)` over the
//! basis `(1, 0)` and `(1/2, √3/2)`; the up-triangle `(u, v)` has corners
//! `(u, v), (u+1, v), (u, v+1)` and the down-triangle `(u, v)` has corners
//! `(u+1, v), (u+1, v+1), (u, v+1)`.
//!
//! Cartesian geometry is only ever derived (for rendering), never stored.

use std::cmp::Ordering;
use std::fmt;

mod dual;
pub(crate) mod format;
mod generate;
mod region;
mod tiling;

pub use dual::DualGraph;
pub use format::{parse_region, parse_region_ascii, parse_region_json, serialize_region_ascii, serialize_region_json};
pub use generate::{enumerate_fixed, generate, random_region, HexSides, Shape};
pub use region::{EdgeInfo, Patch, Region};
pub use tiling::{Tile, Tiling};

/// The two lattices supported throughout the crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Lattice {
    Square,
    Triangular,
}

impl Lattice {
    /// Period of the height function: every valid height function is fixed
    /// modulo this number by its value at one vertex.
    pub fn modulus(self) -> i64 {
        match self {
            Lattice::Square => 4,
            Lattice::Triangular => 3,
        }
    }

    /// Unit lattice steps, counterclockwise starting east.
    pub fn unit_steps(self) -> &'static [(i32, i32)] {
        match self {
            Lattice::Square => &[(1, 0), (0, 1), (-1, 0), (0, -1)],
            Lattice::Triangular => &[(1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Lattice::Square => "square",
            Lattice::Triangular => "triangular",
        }
    }
}

impl fmt::Display for Lattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A lattice point. Ordered row-major: by `y`, then by `x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Vertex {
    pub x: i32,
    pub y: i32,
}

impl Vertex {
    pub const fn new(x: i32, y: i32) -> Self {
        Vertex { x, y }
    }

    pub fn offset(self, dx: i32, dy: i32) -> Self {
        Vertex::new(self.x + dx, self.y + dy)
    }

    /// Chebyshev norm of the displacement `other - self`.
    pub fn chebyshev(self, other: Vertex) -> i64 {
        let dx = (other.x - self.x).abs();
        let dy = (other.y - self.y).abs();
        dx.max(dy) as i64
    }

    /// Graph distance on the triangular lattice (axial coordinates).
    pub fn hex_distance(self, other: Vertex) -> i64 {
        let i = (other.x - self.x) as i64;
        let j = (other.y - self.y) as i64;
        (i.abs() + j.abs() + (i + j).abs()) / 2
    }
}

impl Ord for Vertex {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.y, self.x).cmp(&(other.y, other.x))
    }
}

impl PartialOrd for Vertex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Which kind of face a cell is. Determines the lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CellShape {
    Square,
    Up,
    Down,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Color {
    Black,
    White,
}

/// A unit square or unit triangle of the lattice.
///
/// Canonical order is row-major on the anchor, then up before down.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Cell {
    pub anchor: Vertex,
    pub shape: CellShape,
}

impl Cell {
    pub const fn square(x: i32, y: i32) -> Self {
        Cell {
            anchor: Vertex::new(x, y),
            shape: CellShape::Square,
        }
    }

    pub const fn up(u: i32, v: i32) -> Self {
        Cell {
            anchor: Vertex::new(u, v),
            shape: CellShape::Up,
        }
    }

    pub const fn down(u: i32, v: i32) -> Self {
        Cell {
            anchor: Vertex::new(u, v),
            shape: CellShape::Down,
        }
    }

    pub fn lattice(&self) -> Lattice {
        match self.shape {
            CellShape::Square => Lattice::Square,
            CellShape::Up | CellShape::Down => Lattice::Triangular,
        }
    }

    pub fn color(&self) -> Color {
        cell_color(*self)
    }

    pub fn translate(&self, dx: i32, dy: i32) -> Cell {
        Cell {
            anchor: self.anchor.offset(dx, dy),
            shape: self.shape,
        }
    }

    /// Corners in counterclockwise order.
    pub fn corners(&self) -> Vec<Vertex> {
        let Vertex { x, y } = self.anchor;
        match self.shape {
            CellShape::Square => vec![
                Vertex::new(x, y),
                Vertex::new(x + 1, y),
                Vertex::new(x + 1, y + 1),
                Vertex::new(x, y + 1),
            ],
            CellShape::Up => vec![Vertex::new(x, y), Vertex::new(x + 1, y), Vertex::new(x, y + 1)],
            CellShape::Down => vec![
                Vertex::new(x + 1, y),
                Vertex::new(x + 1, y + 1),
                Vertex::new(x, y + 1),
            ],
        }
    }

    /// Directed edges of the counterclockwise boundary of the cell; the cell
    /// lies to the left of each.
    pub fn ccw_edges(&self) -> Vec<(Vertex, Vertex)> {
        let c = self.corners();
        (0..c.len()).map(|i| (c[i], c[(i + 1) % c.len()])).collect()
    }

    /// Cells sharing an edge with this one, in canonical order.
    pub fn edge_neighbors(&self) -> Vec<Cell> {
        let Vertex { x, y } = self.anchor;
        let mut out = match self.shape {
            CellShape::Square => vec![
                Cell::square(x, y - 1),
                Cell::square(x - 1, y),
                Cell::square(x + 1, y),
                Cell::square(x, y + 1),
            ],
            CellShape::Up => vec![Cell::down(x, y - 1), Cell::down(x - 1, y), Cell::down(x, y)],
            CellShape::Down => vec![Cell::up(x, y), Cell::up(x + 1, y), Cell::up(x, y + 1)],
        };
        out.sort();
        out
    }
}

impl Ord for Cell {
    fn cmp(&self, other: &Self) -> Ordering {
        self.anchor
            .cmp(&other.anchor)
            .then(self.shape.cmp(&other.shape))
    }
}

impl PartialOrd for Cell {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.shape {
            CellShape::Square => write!(f, "[{}, {}]", self.anchor.x, self.anchor.y),
            CellShape::Up => write!(f, "[{}, {}, U]", self.anchor.x, self.anchor.y),
            CellShape::Down => write!(f, "[{}, {}, D]", self.anchor.x, self.anchor.y),
        }
    }
}

/// Color of a cell under the fixed plane coloring.
///
/// Squares whose lower-left corner `(a, b)` has `a + b` even are white, the
/// rest black. Up-triangles are black, down-triangles white.
pub fn cell_color(cell: Cell) -> Color {
    match cell.shape {
        CellShape::Square => {
            if (cell.anchor.x + cell.anchor.y).rem_euclid(2) == 0 {
                Color::White
            } else {
                Color::Black
            }
        }
        CellShape::Up => Color::Black,
        CellShape::Down => Color::White,
    }
}

/// The plane cell to the left of the unit edge `from -> to`.
///
/// # Panics
///
/// Panics if `from -> to` is not a unit step of `lattice`.
pub fn left_cell(lattice: Lattice, from: Vertex, to: Vertex) -> Cell {
    let (dx, dy) = (to.x - from.x, to.y - from.y);
    let Vertex { x, y } = from;
    match (lattice, dx, dy) {
        (Lattice::Square, 1, 0) => Cell::square(x, y),
        (Lattice::Square, 0, 1) => Cell::square(x - 1, y),
        (Lattice::Square, -1, 0) => Cell::square(x - 1, y - 1),
        (Lattice::Square, 0, -1) => Cell::square(x, y - 1),
        (Lattice::Triangular, 1, 0) => Cell::up(x, y),
        (Lattice::Triangular, 0, 1) => Cell::down(x - 1, y),
        (Lattice::Triangular, -1, 1) => Cell::up(x - 1, y),
        (Lattice::Triangular, -1, 0) => Cell::down(x - 1, y - 1),
        (Lattice::Triangular, 0, -1) => Cell::up(x, y - 1),
        (Lattice::Triangular, 1, -1) => Cell::down(x, y - 1),
        _ => panic!("{from} -> {to} is not a unit step of the {lattice} lattice"),
    }
}

/// The plane cell to the right of the unit edge `from -> to`.
pub fn right_cell(lattice: Lattice, from: Vertex, to: Vertex) -> Cell {
    left_cell(lattice, to, from)
}

pub fn is_unit_step(lattice: Lattice, from: Vertex, to: Vertex) -> bool {
    let d = (to.x - from.x, to.y - from.y);
    lattice.unit_steps().contains(&d)
}

/// Height change along a tile edge `from -> to`: `-1` with white on the
/// left, `+1` with black on the left.
pub fn boundary_step(lattice: Lattice, from: Vertex, to: Vertex) -> i64 {
    match left_cell(lattice, from, to).color() {
        Color::White => -1,
        Color::Black => 1,
    }
}

/// Residue of the height function at `v`, modulo [`Lattice::modulus`], for the
/// normalisation where the origin has residue 0.
///
/// Every tiling's height function satisfies `h(v) - h(w) ≡ reference_residue(v)
/// - reference_residue(w)`.
pub fn reference_residue(lattice: Lattice, v: Vertex) -> i64 {
    match lattice {
        Lattice::Square => match (v.x.rem_euclid(2), v.y.rem_euclid(2)) {
            (0, 0) => 0,
            (1, 0) => 3,
            (0, 1) => 1,
            _ => 2,
        },
        Lattice::Triangular => ((v.x - v.y) as i64).rem_euclid(3),
    }
}

/// Cartesian position of a vertex (rendering only).
pub fn cartesian(lattice: Lattice, v: Vertex) -> (f64, f64) {
    match lattice {
        Lattice::Square => (v.x as f64, v.y as f64),
        Lattice::Triangular => (
            v.x as f64 + 0.5 * v.y as f64,
            v.y as f64 * (3f64.sqrt() / 2.0),
        ),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn colors() {
        assert_eq!(cell_color(Cell::square(0, 0)), Color::White);
        assert_eq!(cell_color(Cell::square(1, 0)), Color::Black);
        assert_eq!(cell_color(Cell::square(-1, 0)), Color::Black);
        assert_eq!(cell_color(Cell::up(2, 5)), Color::Black);
        assert_eq!(cell_color(Cell::down(2, 5)), Color::White);
    }

    #[test]
    fn ccw_edges_keep_cell_on_left() {
        for cell in [Cell::square(3, -2), Cell::up(1, 4), Cell::down(-2, 0)] {
            for (p, q) in cell.ccw_edges() {
                assert_eq!(left_cell(cell.lattice(), p, q), cell);
                assert_ne!(right_cell(cell.lattice(), p, q), cell);
            }
        }
    }

    #[test]
    fn neighbors_share_an_edge() {
        for cell in [Cell::square(0, 0), Cell::up(0, 0), Cell::down(0, 0)] {
            for n in cell.edge_neighbors() {
                let shared = cell
                    .ccw_edges()
                    .into_iter()
                    .filter(|&(p, q)| right_cell(cell.lattice(), p, q) == n)
                    .count();
                assert_eq!(shared, 1, "{cell} / {n}");
                assert_ne!(cell.color(), n.color());
            }
        }
    }

    #[test]
    fn residues_follow_boundary_steps() {
        for lattice in [Lattice::Square, Lattice::Triangular] {
            let m = lattice.modulus();
            for x in -3..4 {
                for y in -3..4 {
                    let p = Vertex::new(x, y);
                    for &(dx, dy) in lattice.unit_steps() {
                        let q = p.offset(dx, dy);
                        let d = reference_residue(lattice, q) - reference_residue(lattice, p);
                        assert_eq!((d - boundary_step(lattice, p, q)).rem_euclid(m), 0);
                    }
                }
            }
        }
    }

    #[test]
    fn canonical_order_is_row_major() {
        let mut cells = vec![Cell::down(0, 0), Cell::up(1, 0), Cell::up(0, 1), Cell::up(0, 0)];
        cells.sort();
        assert_eq!(cells, vec![Cell::up(0, 0), Cell::down(0, 0), Cell::up(1, 0), Cell::up(0, 1)]);
    }
}
