use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap};

use crate::error::{Error, Result};
use crate::lattice::{left_cell, Color, Lattice, Vertex};

/// Largest possible height increase along the unit edge `from -> to`:
/// `modulus - 1` with the white cell on the left, otherwise 1.
///
/// The smallest possible change is `edge_weight - modulus`.
pub fn edge_weight(lattice: Lattice, from: Vertex, to: Vertex) -> i64 {
    match left_cell(lattice, from, to).color() {
        Color::White => lattice.modulus() - 1,
        Color::Black => 1,
    }
}

/// One evaluation of the plane metric.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MetricSample {
    pub lattice: Lattice,
    pub x: Vertex,
    pub y: Vertex,
    pub alpha: i64,
}

/// `α(x, y)` on the infinite lattice: the largest value at `y` of a plane
/// height function vanishing at `x`, equivalently the cheapest
/// [`edge_weight`] path from `x` to `y`.
pub fn alpha(lattice: Lattice, x: Vertex, y: Vertex) -> i64 {
    let i = (y.x - x.x) as i64;
    let j = (y.y - x.y) as i64;
    match lattice {
        Lattice::Square => {
            let cheb = i.abs().max(j.abs());
            let delta = (i - j).rem_euclid(2);
            // when i - j is odd, |i| != |j|, so the comparison is never a tie
            let even_base = (x.x + x.y).rem_euclid(2) == 0;
            if even_base == (i.abs() >= j.abs()) {
                2 * cheb + delta
            } else {
                2 * cheb - delta
            }
        }
        // (1,0), (-1,1), (0,-1) cost 1 each and sum to zero
        Lattice::Triangular => i - j + 3 * 0.max(-i).max(j),
    }
}

pub fn alpha_plane(lattice: Lattice, x: Vertex, y: Vertex) -> MetricSample {
    MetricSample {
        lattice,
        x,
        y,
        alpha: alpha(lattice, x, y),
    }
}

/// Inclusive rectangle of vertex coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Window {
    pub x0: i32,
    pub y0: i32,
    pub x1: i32,
    pub y1: i32,
}

impl Window {
    /// The window around `x` and `y` with the smallest margin the oracle accepts.
    pub fn around(x: Vertex, y: Vertex) -> Window {
        let m = x.chebyshev(y) as i32 + 2;
        Window {
            x0: x.x.min(y.x) - m,
            y0: x.y.min(y.y) - m,
            x1: x.x.max(y.x) + m,
            y1: x.y.max(y.y) + m,
        }
    }

    fn contains(&self, v: Vertex) -> bool {
        v.x >= self.x0 && v.x <= self.x1 && v.y >= self.y0 && v.y <= self.y1
    }

    fn margin(&self, v: Vertex) -> i64 {
        [v.x - self.x0, self.x1 - v.x, v.y - self.y0, self.y1 - v.y]
            .into_iter()
            .min()
            .unwrap_or(0) as i64
    }
}

/// Label-correcting shortest path over a finite window using
/// [`edge_weight`]; an independent check of [`alpha`].
pub fn alpha_oracle(lattice: Lattice, x: Vertex, y: Vertex, window: Window) -> Result<i64> {
    let need = x.chebyshev(y) + 2;
    if window.margin(x) < need || window.margin(y) < need {
        return Err(Error::InvalidParameter(format!(
            "window {window:?} leaves less than {need} margin around {x} and {y}"
        )));
    }
    let mut dist: HashMap<Vertex, i64> = HashMap::from([(x, 0)]);
    let mut heap = BinaryHeap::from([Reverse((0i64, x.y, x.x))]);
    while let Some(Reverse((d, py, px))) = heap.pop() {
        let p = Vertex::new(px, py);
        if d > dist[&p] {
            continue;
        }
        for &(dx, dy) in lattice.unit_steps() {
            let q = p.offset(dx, dy);
            if !window.contains(q) {
                continue;
            }
            let nd = d + edge_weight(lattice, p, q);
            if dist.get(&q).is_none_or(|&old| nd < old) {
                dist.insert(q, nd);
                heap.push(Reverse((nd, q.y, q.x)));
            }
        }
    }
    Ok(dist[&y])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_edge_weights() {
        let o = Vertex::new(0, 0);
        assert_eq!(edge_weight(Lattice::Square, o, Vertex::new(1, 0)), 3);
        assert_eq!(edge_weight(Lattice::Square, Vertex::new(1, 0), o), 1);
    }

    #[test]
    fn triangular_weights_are_complementary() {
        let p = Vertex::new(2, -1);
        for &(dx, dy) in Lattice::Triangular.unit_steps() {
            let q = p.offset(dx, dy);
            let (f, b) = (edge_weight(Lattice::Triangular, p, q), edge_weight(Lattice::Triangular, q, p));
            assert!(f == 1 || f == 2);
            assert_eq!(f + b, 3);
        }
    }

    #[test]
    fn small_alpha_values() {
        let o = Vertex::new(0, 0);
        assert_eq!(alpha(Lattice::Square, o, o), 0);
        assert_eq!(alpha(Lattice::Square, o, Vertex::new(1, 0)), 3);
        assert_eq!(alpha(Lattice::Square, Vertex::new(1, 0), o), 1);
        assert_eq!(alpha(Lattice::Square, o, Vertex::new(1, 1)), 2);
        assert_eq!(alpha(Lattice::Square, o, Vertex::new(2, 0)), 4);
        let w = Window::around(o, Vertex::new(2, 0));
        assert_eq!(alpha_oracle(Lattice::Square, o, Vertex::new(2, 0), w).unwrap(), 4);
    }

    #[test]
    fn oracle_rejects_small_window() {
        let o = Vertex::new(0, 0);
        let w = Window { x0: -1, y0: -1, x1: 3, y1: 1 };
        assert!(alpha_oracle(Lattice::Square, o, Vertex::new(2, 0), w).is_err());
    }
}
