use std::collections::HashSet;

use super::peel::{peel_unique_extension, PeelOutcome};
use crate::error::{Error, Result};
use crate::height::{extremal_heights, tiling_from_height};
use crate::lattice::{generate, Cell, DualGraph, HexSides, Region, Shape, Tile, Tiling, Vertex};

/// A tiling together with a small set of its tiles that forces it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Construction {
    pub region: Region,
    pub tiling: Tiling,
    pub forcing_set: Vec<Tile>,
}

/// Completes `set` by peeling; `None` unless the completion is unique.
fn complete(region: &Region, set: &[Tile]) -> Result<Option<Tiling>> {
    let patch = region.patch();
    let mut arcs = Vec::with_capacity(set.len());
    for t in set {
        match (patch.cell_index(&t.0), patch.cell_index(&t.1)) {
            (Some(a), Some(b)) => arcs.push((a, b)),
            _ => return Ok(None),
        }
    }
    match peel_unique_extension(&DualGraph::of(patch), &arcs)? {
        PeelOutcome::Unique(partner) => Ok(Some(Tiling::from_partners(patch, &partner))),
        _ => Ok(None),
    }
}

/// The `2n x 2n` square with the diagonal of horizontal dominoes
/// `(i, i)-(i+1, i)`, `i < n`, and the unique tiling they force.
pub fn staircase_square(n: i32) -> Result<Construction> {
    let region = generate(Shape::Square(2 * n))?;
    let forcing_set: Vec<Tile> = (0..n)
        .map(|i| Tile::new(Cell::square(i, i), Cell::square(i + 1, i)))
        .collect();
    let tiling = complete(&region, &forcing_set)?
        .ok_or_else(|| Error::InvalidParameter(format!("staircase does not force square({})", 2 * n)))?;
    Ok(Construction {
        region,
        tiling,
        forcing_set,
    })
}

// the triangle whose corners are exactly these three vertices
fn triangle(p: [Vertex; 3]) -> Cell {
    let u = p.iter().map(|v| v.x).min().unwrap_or(0);
    let v = p.iter().map(|v| v.y).min().unwrap_or(0);
    let want: HashSet<Vertex> = p.into_iter().collect();
    let up = Cell::up(u, v);
    if up.corners().into_iter().collect::<HashSet<_>>() == want {
        up
    } else {
        Cell::down(u, v)
    }
}

/// Lozenges stacked from `corner` along `d1 + d2`, each spanned by `d1` and `d1 + d2`.
fn diagonal(corner: Vertex, d1: (i32, i32), d2: (i32, i32), count: i32) -> Vec<Tile> {
    let bis = (d1.0 + d2.0, d1.1 + d2.1);
    (0..count)
        .map(|i| {
            let q = corner.offset(i * bis.0, i * bis.1);
            let a = q.offset(d1.0, d1.1);
            let c = q.offset(bis.0, bis.1);
            let b = a.offset(bis.0, bis.1);
            Tile::new(triangle([q, a, c]), triangle([a, b, c]))
        })
        .collect()
}

/// The hexagon with sides `a, b, c`, its minimal tiling, and a diagonal of
/// `min(a, b, c)` lozenges of that tiling which forces it.
///
/// The diagonal starts at a corner between the two sides other than a
/// shortest one and runs inward along the corner's bisector.
pub fn staircase_hexagon(a: i32, b: i32, c: i32) -> Result<Construction> {
    let sides = HexSides::symmetric(a, b, c);
    let region = sides.region()?;
    let ex = extremal_heights(&region)?;
    let minimal = tiling_from_height(&region, &ex.hmin)?;
    let len = sides.sides();
    let corners = sides.corners();
    let k = a.min(b).min(c);
    // corner j sits between side j-1 and side j; prefer corners away from a shortest side
    let mut order: Vec<usize> = (0..6).collect();
    order.sort_by_key(|&j| (len[(j + 5) % 6] == k || len[j] == k, j));
    for j in order {
        let back = HexSides::SIDE_DIRECTIONS[(j + 5) % 6];
        let back = (-back.0, -back.1);
        let fwd = HexSides::SIDE_DIRECTIONS[j];
        for (d1, d2) in [(fwd, back), (back, fwd)] {
            let set = diagonal(corners[j], d1, d2, k);
            if !set.iter().all(|t| minimal.contains(t)) {
                continue;
            }
            if complete(&region, &set)?.as_ref() == Some(&minimal) {
                return Ok(Construction {
                    region,
                    tiling: minimal,
                    forcing_set: set,
                });
            }
        }
    }
    Err(Error::InvalidParameter(format!("no diagonal forcing set found for hexagon({a},{b},{c})")))
}
