use std::collections::{BTreeMap, HashSet};

use rayon::prelude::*;

use super::{admits_height, extremal_heights, ExtremalHeights};
use crate::error::Result;
use crate::lattice::{Cell, Lattice, Region, Vertex};

/// `g = h_max - h_min` over all region vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GProfile {
    pub g: BTreeMap<Vertex, i64>,
    /// First vertex in canonical order where `g` is largest.
    pub argmax: Vertex,
    pub max: i64,
}

impl GProfile {
    pub fn from_extremes(ex: &ExtremalHeights) -> GProfile {
        let g: BTreeMap<Vertex, i64> = ex
            .hmax
            .iter()
            .map(|(v, hi)| (v, hi - ex.hmin.get(&v).expect("same vertex set")))
            .collect();
        let (mut argmax, mut max) = (ex.hmax.base, i64::MIN);
        for (v, d) in &g {
            if *d > max {
                argmax = *v;
                max = *d;
            }
        }
        GProfile { g, argmax, max }
    }

    pub fn get(&self, v: &Vertex) -> Option<i64> {
        self.g.get(v).copied()
    }

    /// `max g / M`; the division is exact.
    pub fn lower_bound(&self, lattice: Lattice) -> i64 {
        (self.max + lattice.modulus() - 1) / lattice.modulus()
    }
}

pub fn g_profile(region: &Region) -> Result<GProfile> {
    Ok(GProfile::from_extremes(&extremal_heights(region)?))
}

/// The height-difference lower bound on the forcing number.
pub fn forcing_lower_bound(region: &Region) -> Result<i64> {
    Ok(g_profile(region)?.lower_bound(region.lattice()))
}

/// Cells of the block of size `k` centred at vertex `x`: the `2k x 2k`
/// square of cells with `x` at its centre, or the regular hexagon of side
/// `k` (all triangles whose corners lie within hexagonal distance `k`).
pub fn centered_block(lattice: Lattice, x: Vertex, k: i32) -> Vec<Cell> {
    let mut out = Vec::new();
    match lattice {
        Lattice::Square => {
            for b in x.y - k..x.y + k {
                for a in x.x - k..x.x + k {
                    out.push(Cell::square(a, b));
                }
            }
        }
        Lattice::Triangular => {
            for v in x.y - k..x.y + k {
                for u in x.x - k..x.x + k {
                    for c in [Cell::up(u, v), Cell::down(u, v)] {
                        if c.corners().iter().all(|p| p.hex_distance(x) <= k as i64) {
                            out.push(c);
                        }
                    }
                }
            }
        }
    }
    out.sort();
    out
}

/// Size of the largest centred block whose removal leaves something
/// tileable: the side length `2k` on the square lattice, the hexagon side
/// `k` on the triangular lattice. Every block that fits inside the region
/// is tried.
pub fn c_radius(region: &Region, x: Vertex) -> i64 {
    let lattice = region.lattice();
    let mut best = 0;
    for k in 1.. {
        let block = centered_block(lattice, x, k);
        if block.is_empty() || !block.iter().all(|c| region.contains(c)) {
            break;
        }
        let removed: HashSet<Cell> = block.into_iter().collect();
        if admits_height(&region.patch().without(&removed)) {
            best = k as i64;
        }
    }
    match lattice {
        Lattice::Square => 2 * best,
        Lattice::Triangular => best,
    }
}

/// [`c_radius`] at every vertex, evaluated in parallel.
pub fn c_profile(region: &Region) -> BTreeMap<Vertex, i64> {
    region
        .vertices()
        .par_iter()
        .map(|&v| (v, c_radius(region, v)))
        .collect::<Vec<_>>()
        .into_iter()
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{generate, Shape};

    #[test]
    fn square2_profile() {
        let r = generate(Shape::Square(2)).unwrap();
        let p = g_profile(&r).unwrap();
        assert_eq!(p.max, 4);
        assert_eq!(p.argmax, Vertex::new(1, 1));
        assert_eq!(p.get(&Vertex::new(0, 0)), Some(0));
        assert_eq!(c_radius(&r, Vertex::new(1, 1)), 2);
        assert_eq!(c_radius(&r, Vertex::new(0, 0)), 0);
        assert_eq!(forcing_lower_bound(&r).unwrap(), 1);
    }

    #[test]
    fn block_sizes() {
        let o = Vertex::new(0, 0);
        assert_eq!(centered_block(Lattice::Square, o, 3).len(), 36);
        for k in 1..5 {
            assert_eq!(centered_block(Lattice::Triangular, o, k).len(), 6 * (k * k) as usize);
        }
    }

    #[test]
    fn rectangle_bound() {
        let r = generate(Shape::Rectangle { m: 2, n: 5 }).unwrap();
        assert_eq!(g_profile(&r).unwrap().max, 4);
        assert_eq!(forcing_lower_bound(&r).unwrap(), 1);
    }
}
