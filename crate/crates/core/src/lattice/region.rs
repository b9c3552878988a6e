use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use super::{is_unit_step, left_cell, Cell, CellShape, Color, Lattice, Vertex};
use crate::error::{Error, Result};

/// An undirected lattice edge of a patch, stored with `a < b` in canonical
/// vertex order. `left`/`right` are the patch cells on either side of the
/// direction `a -> b`, if present.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EdgeInfo {
    pub a: usize,
    pub b: usize,
    pub left: Option<usize>,
    pub right: Option<usize>,
}

impl EdgeInfo {
    pub fn is_boundary(&self) -> bool {
        self.left.is_none() || self.right.is_none()
    }
}

/// An arbitrary finite set of cells of one lattice together with its derived
/// vertex and edge structure. No topological assumptions.
#[derive(Debug, Clone)]
pub struct Patch {
    lattice: Lattice,
    cells: Vec<Cell>,
    cell_index: HashMap<Cell, usize>,
    vertices: Vec<Vertex>,
    vertex_index: HashMap<Vertex, usize>,
    edges: Vec<EdgeInfo>,
    // vertex -> (neighbour vertex, edge id), neighbours in canonical order
    incident: Vec<Vec<(usize, usize)>>,
}

impl Patch {
    /// Builds a patch, rejecting empty input, duplicates and mixed lattices.
    pub fn new(cells: impl IntoIterator<Item = Cell>) -> Result<Patch> {
        let mut cells: Vec<Cell> = cells.into_iter().collect();
        let first = *cells.first().ok_or(Error::EmptyRegion)?;
        Self::from_cells(first.lattice(), std::mem::take(&mut cells))
    }

    /// Like [`Patch::new`] but accepts an empty set for the given lattice.
    pub fn from_cells(lattice: Lattice, mut cells: Vec<Cell>) -> Result<Patch> {
        cells.sort();
        for w in cells.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateCell(w[0]));
            }
        }
        if let Some(c) = cells.iter().find(|c| c.lattice() != lattice) {
            return Err(Error::MixedLattice(*c));
        }
        let cell_index: HashMap<Cell, usize> = cells.iter().enumerate().map(|(i, c)| (*c, i)).collect();

        let vertex_set: BTreeSet<Vertex> = cells.iter().flat_map(|c| c.corners()).collect();
        let vertices: Vec<Vertex> = vertex_set.into_iter().collect();
        let vertex_index: HashMap<Vertex, usize> =
            vertices.iter().enumerate().map(|(i, v)| (*v, i)).collect();

        let mut edge_map: HashMap<(usize, usize), usize> = HashMap::new();
        let mut edges: Vec<EdgeInfo> = Vec::new();
        for (ci, cell) in cells.iter().enumerate() {
            for (p, q) in cell.ccw_edges() {
                let (pi, qi) = (vertex_index[&p], vertex_index[&q]);
                let key = (pi.min(qi), pi.max(qi));
                let id = *edge_map.entry(key).or_insert_with(|| {
                    edges.push(EdgeInfo {
                        a: key.0,
                        b: key.1,
                        left: None,
                        right: None,
                    });
                    edges.len() - 1
                });
                // the cell is left of p -> q
                if pi < qi {
                    edges[id].left = Some(ci);
                } else {
                    edges[id].right = Some(ci);
                }
            }
        }
        edges.sort_by_key(|e| (e.a, e.b));
        let mut incident = vec![Vec::new(); vertices.len()];
        for (id, e) in edges.iter().enumerate() {
            incident[e.a].push((e.b, id));
            incident[e.b].push((e.a, id));
        }
        for list in &mut incident {
            list.sort();
        }
        Ok(Patch {
            lattice,
            cells,
            cell_index,
            vertices,
            vertex_index,
            edges,
            incident,
        })
    }

    pub fn lattice(&self) -> Lattice {
        self.lattice
    }

    /// Cells in canonical order.
    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn cell_index(&self, cell: &Cell) -> Option<usize> {
        self.cell_index.get(cell).copied()
    }

    pub fn contains(&self, cell: &Cell) -> bool {
        self.cell_index.contains_key(cell)
    }

    /// Vertices in canonical order.
    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn vertex_index(&self, v: &Vertex) -> Option<usize> {
        self.vertex_index.get(v).copied()
    }

    pub fn edges(&self) -> &[EdgeInfo] {
        &self.edges
    }

    /// `(neighbour, edge id)` pairs at vertex index `v`.
    pub fn incident(&self, v: usize) -> &[(usize, usize)] {
        &self.incident[v]
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn color_counts(&self) -> (usize, usize) {
        let black = self.cells.iter().filter(|c| c.color() == Color::Black).count();
        (black, self.cells.len() - black)
    }

    /// Vertex indices that lie on at least one boundary edge.
    pub fn boundary_vertices(&self) -> Vec<usize> {
        let mut on = vec![false; self.vertices.len()];
        for e in self.edges.iter().filter(|e| e.is_boundary()) {
            on[e.a] = true;
            on[e.b] = true;
        }
        (0..on.len()).filter(|&i| on[i]).collect()
    }

    pub fn boundary_edge_count(&self) -> usize {
        self.edges.iter().filter(|e| e.is_boundary()).count()
    }

    /// The patch minus the given cells (cells not in the patch are ignored).
    pub fn without(&self, removed: &HashSet<Cell>) -> Patch {
        let cells = self.cells.iter().filter(|c| !removed.contains(c)).copied().collect();
        Patch::from_cells(self.lattice, cells).expect("subset of a valid patch")
    }

    /// Edge-connected components, each as sorted cell indices.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.cells.len()];
        let mut out = Vec::new();
        for start in 0..self.cells.len() {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(i) = queue.pop_front() {
                for n in self.cells[i].edge_neighbors() {
                    if let Some(j) = self.cell_index(&n) {
                        if !seen[j] {
                            seen[j] = true;
                            comp.push(j);
                            queue.push_back(j);
                        }
                    }
                }
            }
            comp.sort();
            out.push(comp);
        }
        out
    }

    /// First cell of the padded bounding box that is outside the patch and
    /// cannot reach the box border through outside cells, if any.
    fn find_hole(&self) -> Option<Cell> {
        let (mut x0, mut y0, mut x1, mut y1) = (i32::MAX, i32::MAX, i32::MIN, i32::MIN);
        for c in &self.cells {
            x0 = x0.min(c.anchor.x);
            y0 = y0.min(c.anchor.y);
            x1 = x1.max(c.anchor.x);
            y1 = y1.max(c.anchor.y);
        }
        let (x0, y0, x1, y1) = (x0 - 1, y0 - 1, x1 + 1, y1 + 1);
        let shapes: &[CellShape] = match self.lattice {
            Lattice::Square => &[CellShape::Square],
            Lattice::Triangular => &[CellShape::Up, CellShape::Down],
        };
        let in_box = |c: &Cell| c.anchor.x >= x0 && c.anchor.x <= x1 && c.anchor.y >= y0 && c.anchor.y <= y1;
        let start = Cell {
            anchor: Vertex::new(x0, y0),
            shape: shapes[0],
        };
        let mut seen: HashSet<Cell> = HashSet::from([start]);
        let mut queue = VecDeque::from([start]);
        while let Some(c) = queue.pop_front() {
            for n in c.edge_neighbors() {
                if in_box(&n) && !self.contains(&n) && seen.insert(n) {
                    queue.push_back(n);
                }
            }
        }
        for y in y0..=y1 {
            for x in x0..=x1 {
                for &shape in shapes {
                    let c = Cell {
                        anchor: Vertex::new(x, y),
                        shape,
                    };
                    if !self.contains(&c) && !seen.contains(&c) {
                        return Some(c);
                    }
                }
            }
        }
        None
    }
}

/// A nonempty, edge-connected, simply connected set of cells of one lattice.
#[derive(Debug, Clone)]
pub struct Region {
    patch: Patch,
    boundary: Vec<Vertex>,
}

impl PartialEq for Region {
    fn eq(&self, other: &Self) -> bool {
        self.patch.lattice == other.patch.lattice && self.patch.cells == other.patch.cells
    }
}

impl Eq for Region {}

impl Region {
    /// Validates a cell set and derives its structure.
    pub fn new(cells: impl IntoIterator<Item = Cell>) -> Result<Region> {
        let patch = Patch::new(cells)?;
        let comps = patch.components();
        if comps.len() > 1 {
            return Err(Error::Disconnected(patch.cells[comps[1][0]]));
        }
        if let Some(hole) = patch.find_hole() {
            return Err(Error::NotSimplyConnected(hole));
        }
        let boundary = trace_boundary(&patch)?;
        Ok(Region { patch, boundary })
    }

    pub fn patch(&self) -> &Patch {
        &self.patch
    }

    pub fn lattice(&self) -> Lattice {
        self.patch.lattice
    }

    pub fn cells(&self) -> &[Cell] {
        &self.patch.cells
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.patch.vertices
    }

    pub fn len(&self) -> usize {
        self.patch.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, cell: &Cell) -> bool {
        self.patch.contains(cell)
    }

    pub fn contains_vertex(&self, v: &Vertex) -> bool {
        self.patch.vertex_index.contains_key(v)
    }

    /// `(black, white)` cell counts.
    pub fn color_counts(&self) -> (usize, usize) {
        self.patch.color_counts()
    }

    /// Closed counterclockwise boundary walk starting (and ending) at the
    /// smallest boundary vertex in canonical order.
    pub fn boundary_cycle(&self) -> &[Vertex] {
        &self.boundary
    }

    /// The anchor vertex for height functions: the first vertex of the
    /// boundary cycle.
    pub fn base(&self) -> Vertex {
        self.boundary[0]
    }

    /// Region translated by a lattice vector.
    pub fn translate(&self, dx: i32, dy: i32) -> Region {
        Region::new(self.cells().iter().map(|c| c.translate(dx, dy))).expect("translation preserves validity")
    }
}

fn trace_boundary(patch: &Patch) -> Result<Vec<Vertex>> {
    let mut next: HashMap<Vertex, Vertex> = HashMap::new();
    let mut count = 0;
    for e in patch.edges.iter().filter(|e| e.is_boundary()) {
        let (p, q) = (patch.vertices[e.a], patch.vertices[e.b]);
        let (from, to) = if e.left.is_some() { (p, q) } else { (q, p) };
        debug_assert!(is_unit_step(patch.lattice, from, to));
        debug_assert!(patch.contains(&left_cell(patch.lattice, from, to)));
        if next.insert(from, to).is_some() {
            return Err(Error::BoundaryPinch(from));
        }
        count += 1;
    }
    let start = *next.keys().min().expect("nonempty region has a boundary");
    let mut cycle = vec![start];
    let mut cur = start;
    loop {
        cur = next[&cur];
        cycle.push(cur);
        if cur == start {
            break;
        }
    }
    if cycle.len() - 1 != count {
        return Err(Error::BoundaryPinch(start));
    }
    Ok(cycle)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rect(m: i32, n: i32) -> Vec<Cell> {
        (0..n).flat_map(|y| (0..m).map(move |x| Cell::square(x, y))).collect()
    }

    #[test]
    fn rectangle_boundary() {
        let r = Region::new(rect(2, 2)).unwrap();
        let b = r.boundary_cycle();
        assert_eq!(b.len(), 9);
        assert_eq!(b[0], Vertex::new(0, 0));
        assert_eq!(b[1], Vertex::new(1, 0));
        assert_eq!(b[8], Vertex::new(0, 0));
        let r = Region::new(rect(1, 2)).unwrap();
        assert_eq!(r.boundary_cycle().len() - 1, 6);
    }

    #[test]
    fn unit_hexagon_boundary() {
        let cells = vec![
            // the six triangles around the origin
            Cell::up(0, 0),
            Cell::up(-1, 0),
            Cell::up(0, -1),
            Cell::down(-1, -1),
            Cell::down(-1, 0),
            Cell::down(0, -1),
        ];
        let r = Region::new(cells).unwrap();
        assert_eq!(r.boundary_cycle().len() - 1, 6);
        assert_eq!(r.patch().boundary_edge_count(), 6);
        assert_eq!(r.vertices().len(), 7);
    }

    #[test]
    fn ring_is_rejected() {
        let cells: Vec<Cell> = rect(3, 3).into_iter().filter(|c| *c != Cell::square(1, 1)).collect();
        assert_eq!(Region::new(cells), Err(Error::NotSimplyConnected(Cell::square(1, 1))));
    }

    #[test]
    fn pinch_is_rejected() {
        // two cells meeting only at a corner, joined around the back
        let cells = vec![
            Cell::square(0, 0),
            Cell::square(1, 1),
            Cell::square(0, 2),
            Cell::square(1, 2),
            Cell::square(-1, 0),
            Cell::square(-1, 1),
            Cell::square(-1, 2),
        ];
        assert!(matches!(Region::new(cells), Err(Error::NotSimplyConnected(_))));
    }

    #[test]
    fn disconnected_and_mixed() {
        assert_eq!(
            Region::new(vec![Cell::square(0, 0), Cell::square(2, 0)]),
            Err(Error::Disconnected(Cell::square(2, 0)))
        );
        assert!(matches!(
            Region::new(vec![Cell::square(0, 0), Cell::up(1, 0)]),
            Err(Error::MixedLattice(_))
        ));
        assert_eq!(Region::new(vec![]), Err(Error::EmptyRegion));
    }

    #[test]
    fn edge_sides() {
        let p = Patch::new(rect(2, 1)).unwrap();
        let interior: Vec<_> = p.edges().iter().filter(|e| !e.is_boundary()).collect();
        assert_eq!(interior.len(), 1);
        assert_eq!(p.boundary_edge_count(), 6);
    }
}
