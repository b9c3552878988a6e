use std::cmp::Reverse;
use std::collections::{BinaryHeap, VecDeque};

use super::{alpha, boundary_heights, edge_weight, HeightField};
use crate::error::{Error, Result};
use crate::lattice::{reference_residue, Cell, Lattice, Region, Vertex};

/// Answers `x ~ y` queries: is there a geodesic path from `x` to `y`
/// inside the region?
///
/// On the square lattice a geodesic path moves between corners of a common
/// region cell and gains one unit of Chebyshev distance from its start at
/// every step. On the triangular lattice it is a path of region edges along
/// which `α` from the start is additive, i.e. a path of total
/// [`edge_weight`] equal to `α(x, y)`.
pub struct GeodesicOracle<'a> {
    region: &'a Region,
}

impl<'a> GeodesicOracle<'a> {
    pub fn new(region: &'a Region) -> Self {
        GeodesicOracle { region }
    }

    /// Flags over the region's vertices (canonical order): which `y` satisfy `x ~ y`.
    pub fn related_from(&self, x: Vertex) -> Vec<bool> {
        let patch = self.region.patch();
        let n = patch.vertices().len();
        let Some(start) = patch.vertex_index(&x) else {
            return vec![false; n];
        };
        match self.region.lattice() {
            Lattice::Square => self.square_reach(start),
            Lattice::Triangular => {
                let verts = patch.vertices();
                let dist = self.weighted_distances(start);
                (0..n)
                    .map(|i| dist[i] == alpha(Lattice::Triangular, x, verts[i]))
                    .collect()
            }
        }
    }

    pub fn related(&self, x: Vertex, y: Vertex) -> bool {
        match self.region.patch().vertex_index(&y) {
            Some(j) => self.related_from(x)[j],
            None => false,
        }
    }

    fn square_reach(&self, start: usize) -> Vec<bool> {
        let patch = self.region.patch();
        let verts = patch.vertices();
        let x = verts[start];
        let mut seen = vec![false; verts.len()];
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(i) = queue.pop_front() {
            let p = verts[i];
            let d = p.chebyshev(x);
            for dy in -1..=1 {
                for dx in -1..=1 {
                    let q = p.offset(dx, dy);
                    if q.chebyshev(x) != d + 1 || !self.share_cell(p, q) {
                        continue;
                    }
                    let j = patch.vertex_index(&q).expect("corner of a region cell");
                    if !seen[j] {
                        seen[j] = true;
                        queue.push_back(j);
                    }
                }
            }
        }
        seen
    }

    // p and q differ by a king step; is some region cell incident to both?
    fn share_cell(&self, p: Vertex, q: Vertex) -> bool {
        let (x0, y0) = (p.x.min(q.x), p.y.min(q.y));
        let xs: &[i32] = if p.x == q.x { &[x0 - 1, x0] } else { &[x0] };
        let ys: &[i32] = if p.y == q.y { &[y0 - 1, y0] } else { &[y0] };
        xs.iter()
            .any(|&a| ys.iter().any(|&b| self.region.contains(&Cell::square(a, b))))
    }

    fn weighted_distances(&self, start: usize) -> Vec<i64> {
        let patch = self.region.patch();
        let lattice = self.region.lattice();
        let verts = patch.vertices();
        let mut dist = vec![i64::MAX; verts.len()];
        dist[start] = 0;
        let mut heap = BinaryHeap::from([Reverse((0i64, start))]);
        while let Some(Reverse((d, u))) = heap.pop() {
            if d > dist[u] {
                continue;
            }
            for &(n, _) in patch.incident(u) {
                let nd = d + edge_weight(lattice, verts[u], verts[n]);
                if nd < dist[n] {
                    dist[n] = nd;
                    heap.push(Reverse((nd, n)));
                }
            }
        }
        dist
    }
}

pub fn geodesic_related(region: &Region, x: Vertex, y: Vertex) -> bool {
    GeodesicOracle::new(region).related(x, y)
}

/// Extends heights given on `U ⊇ ∂R` to the whole region by
/// `h(y) = min { h'(x) + α(x, y) : x ∈ U, x ~ y }`.
///
/// `partial` must agree with [`boundary_heights`] on the boundary and have
/// the right residues; otherwise the call fails with
/// [`Error::InvalidParameter`]. If some related pair has
/// `h'(y) - h'(x) > α(x, y)` the result is [`Error::NoExtension`].
pub fn extend_heights(region: &Region, partial: &HeightField) -> Result<HeightField> {
    let lattice = region.lattice();
    let m = lattice.modulus();
    let fixed = boundary_heights(region)?;
    for (v, h) in fixed.iter() {
        match partial.get(&v) {
            Some(p) if p == h => {}
            Some(p) => {
                return Err(Error::InvalidParameter(format!(
                    "value {p} at boundary vertex {v} differs from the forced value {h}"
                )))
            }
            None => return Err(Error::InvalidParameter(format!("no value at boundary vertex {v}"))),
        }
    }
    let base = fixed.base;
    let shift = (fixed.get(&base).unwrap_or(0) - reference_residue(lattice, base)).rem_euclid(m);
    for (v, h) in partial.iter() {
        if !region.contains_vertex(&v) {
            return Err(Error::InvalidParameter(format!("{v} is not a vertex of the region")));
        }
        if (h - reference_residue(lattice, v)).rem_euclid(m) != shift {
            return Err(Error::InvalidParameter(format!("value {h} at {v} has the wrong residue mod {m}")));
        }
    }

    let oracle = GeodesicOracle::new(region);
    let verts = region.vertices();
    let mut best: Vec<Option<i64>> = vec![None; verts.len()];
    for (x, hx) in partial.iter() {
        let related = oracle.related_from(x);
        for (j, &y) in verts.iter().enumerate() {
            if !related[j] {
                continue;
            }
            let a = alpha(lattice, x, y);
            if let Some(hy) = partial.get(&y) {
                if hy - hx > a {
                    return Err(Error::NoExtension {
                        x,
                        y,
                        diff: hy - hx,
                        alpha: a,
                    });
                }
            }
            let cand = hx + a;
            if best[j].is_none_or(|b| cand < b) {
                best[j] = Some(cand);
            }
        }
    }
    let mut out = HeightField::new(base);
    for (j, v) in verts.iter().enumerate() {
        let h = best[j].ok_or_else(|| Error::InvalidParameter(format!("{v} is not related to any vertex of U")))?;
        out.set(*v, h);
    }
    Ok(out)
}

/// Tileability test on boundary data alone: the boundary walk closes and
/// `h(y) - h(x) <= α(x, y)` for every pair of boundary vertices with `x ~ y`.
pub fn boundary_criterion(region: &Region) -> bool {
    let Ok(fixed) = boundary_heights(region) else {
        return false;
    };
    let lattice = region.lattice();
    let oracle = GeodesicOracle::new(region);
    let verts = region.vertices();
    let ok = fixed.iter().all(|(x, hx)| {
        let related = oracle.related_from(x);
        verts.iter().enumerate().all(|(j, y)| match fixed.get(y) {
            Some(hy) if related[j] => hy - hx <= alpha(lattice, x, *y),
            _ => true,
        })
    });
    ok
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::height::extremal_heights;
    use crate::lattice::{generate, Shape};

    #[test]
    fn rectangle_pairs_are_related() {
        let r = generate(Shape::Rectangle { m: 3, n: 4 }).unwrap();
        let o = GeodesicOracle::new(&r);
        for &x in r.vertices() {
            assert!(o.related_from(x).iter().all(|&b| b));
        }
    }

    #[test]
    fn u_shape_tips() {
        // columns x = 0 and x = 2 joined along the bottom row
        let mut cells = vec![Cell::square(1, 0)];
        for y in 0..5 {
            cells.push(Cell::square(0, y));
            cells.push(Cell::square(2, y));
        }
        let r = Region::new(cells).unwrap();
        assert!(!geodesic_related(&r, Vertex::new(1, 5), Vertex::new(2, 5)));
        assert!(geodesic_related(&r, Vertex::new(0, 0), Vertex::new(3, 1)));
        assert!(geodesic_related(&r, Vertex::new(1, 5), Vertex::new(1, 5)));
    }

    #[test]
    fn square2_extensions() {
        let r = generate(Shape::Square(2)).unwrap();
        let ex = extremal_heights(&r).unwrap();
        let b = boundary_heights(&r).unwrap();
        assert_eq!(extend_heights(&r, &b).unwrap(), ex.hmax);
        let mut pinned = b.clone();
        pinned.set(Vertex::new(1, 1), -2);
        assert_eq!(extend_heights(&r, &pinned).unwrap(), ex.hmin);
        pinned.set(Vertex::new(1, 1), 6);
        assert!(matches!(extend_heights(&r, &pinned), Err(Error::NoExtension { .. })));
        pinned.set(Vertex::new(1, 1), 1);
        assert!(matches!(extend_heights(&r, &pinned), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn criterion_on_small_cases() {
        assert!(boundary_criterion(&generate(Shape::Square(4)).unwrap()));
        assert!(!boundary_criterion(&generate(Shape::Rectangle { m: 1, n: 3 }).unwrap()));
    }
}
