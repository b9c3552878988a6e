use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::fmt;

use super::{boundary_heights_from, edge_weight, HeightField};
use crate::error::{Error, Result, UntileableReason};
use crate::lattice::{boundary_step, reference_residue, Patch, Region, Vertex};

/// Pointwise minimal and maximal height functions with the forced boundary values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtremalHeights {
    pub hmin: HeightField,
    pub hmax: HeightField,
}

/// Multi-source shortest paths over the patch's edges with [`edge_weight`]s.
/// With `reversed` the distance is measured *to* the sources instead of from them.
fn relax(patch: &Patch, sources: &[(usize, i64)], reversed: bool) -> Vec<i64> {
    let lattice = patch.lattice();
    let verts = patch.vertices();
    let mut dist = vec![i64::MAX; verts.len()];
    let mut heap = BinaryHeap::new();
    for &(v, d) in sources {
        if d < dist[v] {
            dist[v] = d;
            heap.push(Reverse((d, v)));
        }
    }
    while let Some(Reverse((d, u))) = heap.pop() {
        if d > dist[u] {
            continue;
        }
        for &(n, _) in patch.incident(u) {
            let w = if reversed {
                edge_weight(lattice, verts[n], verts[u])
            } else {
                edge_weight(lattice, verts[u], verts[n])
            };
            if d + w < dist[n] {
                dist[n] = d + w;
                heap.push(Reverse((d + w, n)));
            }
        }
    }
    dist
}

/// Extremal heights anchored at the region's base vertex, or an untileability verdict.
pub fn extremal_heights(region: &Region) -> Result<ExtremalHeights> {
    extremal_heights_from(region, region.base())
}

/// As [`extremal_heights`] with another boundary vertex as anchor.
pub fn extremal_heights_from(region: &Region, base: Vertex) -> Result<ExtremalHeights> {
    let fixed = boundary_heights_from(region, base)?;
    let patch = region.patch();
    let sources: Vec<(usize, i64)> = fixed
        .iter()
        .map(|(v, h)| (patch.vertex_index(&v).expect("boundary vertex"), h))
        .collect();
    let up = relax(patch, &sources, false);
    let negated: Vec<(usize, i64)> = sources.iter().map(|&(v, h)| (v, -h)).collect();
    let down = relax(patch, &negated, true);
    for &(v, h) in &sources {
        let (hi, lo) = (up[v], -down[v]);
        if hi != h || lo != h {
            return Err(Error::Untileable(UntileableReason::BoundaryViolated {
                vertex: patch.vertices()[v],
                fixed: h,
                relaxed: if hi != h { hi } else { lo },
            }));
        }
    }
    let mut hmax = HeightField::new(base);
    let mut hmin = HeightField::new(base);
    for (i, &v) in patch.vertices().iter().enumerate() {
        hmax.set(v, up[i]);
        hmin.set(v, -down[i]);
    }
    Ok(ExtremalHeights { hmin, hmax })
}

/// Whether some height function exists on an arbitrary patch (holes and
/// several components allowed): boundary edges take their forced step,
/// interior edges are bounded by [`edge_weight`] in both directions, and
/// heights follow the reference residues up to a per-component shift.
///
/// Writing `h = r + M k` turns this into integer difference constraints on
/// `k`; a negative cycle means no solution.
pub fn admits_height(patch: &Patch) -> bool {
    if patch.is_empty() {
        return true;
    }
    let lattice = patch.lattice();
    let m = lattice.modulus();
    let verts = patch.vertices();
    let r: Vec<i64> = verts.iter().map(|&v| reference_residue(lattice, v)).collect();
    // constraint k[to] - k[from] <= w
    let mut arcs: Vec<(usize, usize, i64)> = Vec::with_capacity(2 * patch.edges().len());
    for e in patch.edges() {
        for (from, to) in [(e.a, e.b), (e.b, e.a)] {
            let cap = if e.is_boundary() {
                boundary_step(lattice, verts[from], verts[to])
            } else {
                edge_weight(lattice, verts[from], verts[to])
            };
            let slack = cap - (r[to] - r[from]);
            debug_assert_eq!(slack.rem_euclid(m), 0);
            arcs.push((from, to, slack.div_euclid(m)));
        }
    }
    let mut k = vec![0i64; verts.len()];
    for _ in 0..=verts.len() {
        let mut changed = false;
        for &(from, to, w) in &arcs {
            if k[from] + w < k[to] {
                k[to] = k[from] + w;
                changed = true;
            }
        }
        if !changed {
            return true;
        }
    }
    false
}

/// Outcome of [`validate_height`]. Conditions are checked in order
/// (residues, boundary steps, edge bounds) and the first failure is reported.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HeightVerdict {
    Valid,
    /// The field has no value at this region vertex.
    Incomplete { vertex: Vertex },
    /// `h(vertex)` is in the wrong residue class relative to `h(reference)`.
    Residue {
        vertex: Vertex,
        reference: Vertex,
        modulus: i64,
    },
    /// A boundary edge does not carry its forced step.
    Boundary {
        from: Vertex,
        to: Vertex,
        expected: i64,
        found: i64,
    },
    /// An edge changes by more than the lattice allows.
    Step { from: Vertex, to: Vertex, diff: i64 },
}

impl HeightVerdict {
    pub fn is_valid(&self) -> bool {
        *self == HeightVerdict::Valid
    }

    /// Number of the violated condition (1 residues, 2 boundary, 3 edge bound).
    pub fn condition(&self) -> Option<u8> {
        match self {
            HeightVerdict::Valid | HeightVerdict::Incomplete { .. } => None,
            HeightVerdict::Residue { .. } => Some(1),
            HeightVerdict::Boundary { .. } => Some(2),
            HeightVerdict::Step { .. } => Some(3),
        }
    }
}

impl fmt::Display for HeightVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HeightVerdict::Valid => write!(f, "valid"),
            HeightVerdict::Incomplete { vertex } => write!(f, "no value at {vertex}"),
            HeightVerdict::Residue {
                vertex,
                reference,
                modulus,
            } => write!(f, "h{vertex} has the wrong residue mod {modulus} relative to h{reference}"),
            HeightVerdict::Boundary {
                from,
                to,
                expected,
                found,
            } => write!(f, "boundary edge {from} -> {to} changes by {found}, expected {expected}"),
            HeightVerdict::Step { from, to, diff } => write!(f, "edge {from} -> {to} changes by {diff}"),
        }
    }
}

/// Checks that `h` is the height function of some tiling of `region`.
///
/// The residue test is global: `h - r` must be constant mod `M` over all
/// vertices, where `r` is the reference residue. This also covers vertex
/// classes that contain a single vertex.
pub fn validate_height(region: &Region, h: &HeightField) -> HeightVerdict {
    let lattice = region.lattice();
    let m = lattice.modulus();
    let verts = region.vertices();
    for &v in verts {
        if h.get(&v).is_none() {
            return HeightVerdict::Incomplete { vertex: v };
        }
    }
    let val = |v: &Vertex| h.get(v).expect("checked above");
    let reference = verts[0];
    let shift = (val(&reference) - reference_residue(lattice, reference)).rem_euclid(m);
    for v in verts {
        if (val(v) - reference_residue(lattice, *v)).rem_euclid(m) != shift {
            return HeightVerdict::Residue {
                vertex: *v,
                reference,
                modulus: m,
            };
        }
    }
    let patch = region.patch();
    for e in patch.edges().iter().filter(|e| e.is_boundary()) {
        let (p, q) = (verts[e.a], verts[e.b]);
        let expected = boundary_step(lattice, p, q);
        let found = val(&q) - val(&p);
        if found != expected {
            return HeightVerdict::Boundary {
                from: p,
                to: q,
                expected,
                found,
            };
        }
    }
    for e in patch.edges() {
        let (p, q) = (verts[e.a], verts[e.b]);
        let diff = val(&q) - val(&p);
        if diff.abs() > m - 1 {
            return HeightVerdict::Step { from: p, to: q, diff };
        }
    }
    HeightVerdict::Valid
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{generate, Shape};

    #[test]
    fn square2_extremes() {
        let r = generate(Shape::Square(2)).unwrap();
        let ex = extremal_heights(&r).unwrap();
        let c = Vertex::new(1, 1);
        assert_eq!(ex.hmax.get(&c), Some(2));
        assert_eq!(ex.hmin.get(&c), Some(-2));
        assert!(validate_height(&r, &ex.hmax).is_valid());
        assert!(validate_height(&r, &ex.hmin).is_valid());
    }

    #[test]
    fn perturbed_center_breaks_residue() {
        let r = generate(Shape::Square(2)).unwrap();
        let mut h = extremal_heights(&r).unwrap().hmax;
        h.set(Vertex::new(1, 1), 3);
        assert_eq!(validate_height(&r, &h).condition(), Some(1));
        h.values.remove(&Vertex::new(1, 1));
        assert_eq!(validate_height(&r, &h), HeightVerdict::Incomplete { vertex: Vertex::new(1, 1) });
    }

    #[test]
    fn boundary_and_step_violations() {
        let r = generate(Shape::Square(2)).unwrap();
        let mut h = extremal_heights(&r).unwrap().hmax;
        h.set(Vertex::new(1, 1), 6);
        assert_eq!(validate_height(&r, &h).condition(), Some(3));
        let mut h = extremal_heights(&r).unwrap().hmax;
        h.set(Vertex::new(1, 0), 3);
        assert_eq!(validate_height(&r, &h).condition(), Some(2));
    }

    #[test]
    fn odd_rectangle_is_untileable() {
        let r = generate(Shape::Rectangle { m: 1, n: 3 }).unwrap();
        assert!(extremal_heights(&r).unwrap_err().is_untileable());
        assert!(!admits_height(r.patch()));
    }

    #[test]
    fn balanced_but_untileable() {
        // two white leaves hang off the same black cell
        let cells = [(0, 0), (1, 0), (2, 0), (1, 1), (1, 2), (1, 3), (1, 4), (2, 3)];
        let r = Region::new(cells.map(|(x, y)| crate::lattice::Cell::square(x, y))).unwrap();
        assert_eq!(r.color_counts(), (4, 4));
        assert!(matches!(
            extremal_heights(&r),
            Err(Error::Untileable(UntileableReason::BoundaryViolated { .. }))
        ));
        assert!(!admits_height(r.patch()));
    }

    #[test]
    fn patch_with_hole() {
        let sq = generate(Shape::Square(4)).unwrap();
        let mut hole = std::collections::HashSet::new();
        for (x, y) in [(1, 1), (2, 1), (1, 2), (2, 2)] {
            hole.insert(crate::lattice::Cell::square(x, y));
        }
        assert!(admits_height(&sq.patch().without(&hole)));
        let mut cut: std::collections::HashSet<_> = (0..4).map(|y| crate::lattice::Cell::square(1, y)).collect();
        assert!(admits_height(&sq.patch().without(&cut)));
        cut.insert(crate::lattice::Cell::square(0, 0));
        assert!(!admits_height(&sq.patch().without(&cut)));
    }
}
