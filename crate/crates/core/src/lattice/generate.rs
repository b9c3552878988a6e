use std::collections::{BTreeSet, HashSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Cell, Lattice, Region, Vertex};
use crate::error::{Error, Result};

/// Shapes produced by [`generate`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Shape {
    /// `m` columns by `n` rows of squares.
    Rectangle { m: i32, n: i32 },
    /// `n` by `n` squares.
    Square(i32),
    /// The centrally symmetric lozenge hexagon with sides `a, b, c, a, b, c`.
    Hexagon { a: i32, b: i32, c: i32 },
}

/// Side lengths of a lattice hexagon: counterclockwise `a, b, c, a+t, b-t, c+t`.
///
/// The first side runs in direction `(0, 1)` from the right end of the
/// bottom side, so sides alternate white-left / black-left starting with a
/// white-left side. The boundary height walk then accumulates `3t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HexSides {
    pub a: i32,
    pub b: i32,
    pub c: i32,
    pub t: i32,
}

impl HexSides {
    pub fn symmetric(a: i32, b: i32, c: i32) -> HexSides {
        HexSides { a, b, c, t: 0 }
    }

    /// The six side lengths in counterclockwise order.
    pub fn sides(&self) -> [i32; 6] {
        [self.a, self.b, self.c, self.a + self.t, self.b - self.t, self.c + self.t]
    }

    /// Direction of side `k` (0-based) as an axial unit step.
    pub const SIDE_DIRECTIONS: [(i32, i32); 6] = [(0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1), (1, 0)];

    /// Polygon corners: `corners()[k]` is where side `k` starts, in the
    /// coordinates used by [`HexSides::cells`].
    pub fn corners(&self) -> [Vertex; 6] {
        let s = self.sides();
        let mut out = [Vertex::new(0, 0); 6];
        let mut cur = Vertex::new(s[4] + s[5], 0);
        for k in 0..6 {
            out[k] = cur;
            let (dx, dy) = Self::SIDE_DIRECTIONS[k];
            cur = cur.offset(dx * s[k], dy * s[k]);
        }
        out
    }

    /// Cells of the hexagon.
    pub fn cells(&self) -> Result<Vec<Cell>> {
        let s = self.sides();
        if s.iter().any(|&x| x < 1) {
            return Err(Error::InvalidParameter(format!("hexagon sides must be positive, got {s:?}")));
        }
        // 0 <= v <= s1+s2, 0 <= u <= s5+s6, s5 <= u+v <= s5+s6+s1
        let (vmax, umax) = (s[0] + s[1], s[4] + s[5]);
        let (wmin, wmax) = (s[4], s[4] + s[5] + s[0]);
        let inside = |p: Vertex| (0..=vmax).contains(&p.y) && (0..=umax).contains(&p.x) && (wmin..=wmax).contains(&(p.x + p.y));
        let mut cells = Vec::new();
        for v in 0..=vmax {
            for u in 0..=umax {
                for cell in [Cell::up(u, v), Cell::down(u, v)] {
                    if cell.corners().into_iter().all(inside) {
                        cells.push(cell);
                    }
                }
            }
        }
        Ok(cells)
    }

    pub fn region(&self) -> Result<Region> {
        Region::new(self.cells()?)
    }
}

/// Generates a rectangle, square or symmetric hexagon region.
pub fn generate(shape: Shape) -> Result<Region> {
    match shape {
        Shape::Rectangle { m, n } => {
            if m < 1 || n < 1 {
                return Err(Error::InvalidParameter(format!("rectangle dimensions must be >= 1, got {m}x{n}")));
            }
            Region::new((0..n).flat_map(|y| (0..m).map(move |x| Cell::square(x, y))))
        }
        Shape::Square(n) => {
            if n < 1 {
                return Err(Error::InvalidParameter(format!("square side must be >= 1, got {n}")));
            }
            generate(Shape::Rectangle { m: n, n })
        }
        Shape::Hexagon { a, b, c } => {
            if a < 1 || b < 1 || c < 1 {
                return Err(Error::InvalidParameter(format!("hexagon sides must be >= 1, got ({a}, {b}, {c})")));
            }
            HexSides::symmetric(a, b, c).region()
        }
    }
}

fn seed_cell(lattice: Lattice) -> Cell {
    match lattice {
        Lattice::Square => Cell::square(0, 0),
        Lattice::Triangular => Cell::up(0, 0),
    }
}

/// A simply connected region of `size` cells grown from a single cell.
///
/// Growth picks a uniformly random frontier cell (frontier kept in canonical
/// order) and rejects additions that would enclose a hole. Deterministic in
/// `seed`.
pub fn random_region(lattice: Lattice, size: usize, seed: u64) -> Result<Region> {
    if size == 0 {
        return Err(Error::InvalidParameter("region size must be >= 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cells: BTreeSet<Cell> = BTreeSet::from([seed_cell(lattice)]);
    while cells.len() < size {
        let mut frontier: Vec<Cell> = cells
            .iter()
            .flat_map(|c| c.edge_neighbors())
            .filter(|n| !cells.contains(n))
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        loop {
            if frontier.is_empty() {
                return Err(Error::InvalidParameter("growth got stuck".into()));
            }
            let pick = frontier.remove(rng.gen_range(0..frontier.len()));
            let mut candidate = cells.clone();
            candidate.insert(pick);
            if Region::new(candidate.iter().copied()).is_ok() {
                cells = candidate;
                break;
            }
        }
    }
    Region::new(cells)
}

fn normalize(cells: &mut [Cell]) {
    let x0 = cells.iter().map(|c| c.anchor.x).min().unwrap_or(0);
    let y0 = cells.iter().map(|c| c.anchor.y).min().unwrap_or(0);
    for c in cells.iter_mut() {
        *c = c.translate(-x0, -y0);
    }
    cells.sort();
}

/// Every simply connected region of exactly `size` cells up to translation.
pub fn enumerate_fixed(lattice: Lattice, size: usize) -> Vec<Region> {
    if size == 0 {
        return Vec::new();
    }
    let seeds: Vec<Vec<Cell>> = match lattice {
        Lattice::Square => vec![vec![Cell::square(0, 0)]],
        Lattice::Triangular => vec![vec![Cell::up(0, 0)], vec![Cell::down(0, 0)]],
    };
    let mut level: HashSet<Vec<Cell>> = seeds.into_iter().collect();
    for _ in 1..size {
        let mut next = HashSet::new();
        for shape in &level {
            let present: HashSet<Cell> = shape.iter().copied().collect();
            for c in shape {
                for n in c.edge_neighbors() {
                    if !present.contains(&n) {
                        let mut grown = shape.clone();
                        grown.push(n);
                        normalize(&mut grown);
                        next.insert(grown);
                    }
                }
            }
        }
        level = next;
    }
    let mut shapes: Vec<Vec<Cell>> = level.into_iter().collect();
    shapes.sort();
    shapes.into_iter().filter_map(|s| Region::new(s).ok()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        let r = generate(Shape::Square(6)).unwrap();
        assert_eq!(r.len(), 36);
        assert_eq!(r.color_counts(), (18, 18));
        assert_eq!(generate(Shape::Rectangle { m: 2, n: 7 }).unwrap().len(), 14);
        let h = generate(Shape::Hexagon { a: 1, b: 1, c: 1 }).unwrap();
        assert_eq!(h.len(), 6);
        assert_eq!(h.color_counts(), (3, 3));
    }

    #[test]
    fn hexagon_cell_count_matches_area_formula() {
        for a in 1..6 {
            for b in 1..6 {
                for c in 1..6 {
                    let r = generate(Shape::Hexagon { a, b, c }).unwrap();
                    assert_eq!(r.len() as i32, 2 * (a * b + b * c + c * a));
                    let (up, down) = r.color_counts();
                    assert_eq!(up, down);
                    assert_eq!(r.boundary_cycle().len() as i32 - 1, 2 * (a + b + c));
                }
            }
        }
        assert_eq!(generate(Shape::Hexagon { a: 3, b: 4, c: 6 }).unwrap().len(), 108);
    }

    #[test]
    fn hexagon_corners_lie_on_region() {
        let h = HexSides::symmetric(3, 4, 6);
        let r = h.region().unwrap();
        for v in h.corners() {
            assert!(r.contains_vertex(&v), "{v}");
        }
    }

    #[test]
    fn asymmetric_hexagon_is_unbalanced() {
        let r = HexSides { a: 2, b: 2, c: 2, t: 1 }.region().unwrap();
        let (up, down) = r.color_counts();
        assert_eq!(up as i64 - down as i64, 1);
    }

    #[test]
    fn bad_dimensions() {
        assert!(matches!(generate(Shape::Square(0)), Err(Error::InvalidParameter(_))));
        assert!(matches!(generate(Shape::Rectangle { m: 3, n: -1 }), Err(Error::InvalidParameter(_))));
        assert!(matches!(generate(Shape::Hexagon { a: 1, b: 0, c: 1 }), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn random_regions_are_deterministic() {
        for lattice in [Lattice::Square, Lattice::Triangular] {
            let a = random_region(lattice, 12, 7).unwrap();
            let b = random_region(lattice, 12, 7).unwrap();
            assert_eq!(a, b);
            assert_eq!(a.len(), 12);
        }
    }

    #[test]
    fn fixed_polyomino_counts() {
        // fixed polyominoes: 1, 2, 6, 19, 63, 216, 760; four of the heptominoes have a hole
        let counts: Vec<usize> = (1..=7).map(|n| enumerate_fixed(Lattice::Square, n).len()).collect();
        assert_eq!(counts, vec![1, 2, 6, 19, 63, 216, 756]);
        // fixed polyiamonds: 2, 3, 6, 14, 36, 94
        let counts: Vec<usize> = (1..=6).map(|n| enumerate_fixed(Lattice::Triangular, n).len()).collect();
        assert_eq!(counts, vec![2, 3, 6, 14, 36, 94]);
    }
}
