use std::fmt;

use super::{Cell, DualGraph, Patch};
use crate::error::{Error, Result};

/// A tile: two edge-adjacent cells, stored in canonical order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tile(pub Cell, pub Cell);

impl Tile {
    pub fn new(a: Cell, b: Cell) -> Tile {
        if a <= b {
            Tile(a, b)
        } else {
            Tile(b, a)
        }
    }

    pub fn cells(&self) -> [Cell; 2] {
        [self.0, self.1]
    }

    pub fn contains(&self, c: &Cell) -> bool {
        self.0 == *c || self.1 == *c
    }
}

impl fmt::Display for Tile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.0, self.1)
    }
}

/// A perfect matching of a patch's dual graph, i.e. a domino or lozenge
/// tiling. Tiles are kept sorted by their smaller cell.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tiling {
    tiles: Vec<Tile>,
}

impl Tiling {
    pub fn from_tiles(tiles: impl IntoIterator<Item = Tile>) -> Tiling {
        let mut tiles: Vec<Tile> = tiles.into_iter().map(|t| Tile::new(t.0, t.1)).collect();
        tiles.sort();
        Tiling { tiles }
    }

    /// Builds a tiling from a partner array over the patch's cell indices.
    pub fn from_partners(patch: &Patch, partner: &[usize]) -> Tiling {
        let cells = patch.cells();
        Tiling::from_tiles(
            (0..partner.len())
                .filter(|&i| i < partner[i])
                .map(|i| Tile(cells[i], cells[partner[i]])),
        )
    }

    pub fn tiles(&self) -> &[Tile] {
        &self.tiles
    }

    pub fn len(&self) -> usize {
        self.tiles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tiles.is_empty()
    }

    pub fn contains(&self, tile: &Tile) -> bool {
        self.tiles.binary_search(tile).is_ok()
    }

    /// Partner array over the patch's cell indices, checking that the
    /// tiling is a perfect matching of the patch's dual graph.
    pub fn partners(&self, patch: &Patch) -> Result<Vec<usize>> {
        let graph = DualGraph::of(patch);
        let mut partner = vec![usize::MAX; patch.len()];
        for t in &self.tiles {
            let (a, b) = match (patch.cell_index(&t.0), patch.cell_index(&t.1)) {
                (Some(a), Some(b)) => (a, b),
                _ => return Err(Error::InvalidParameter(format!("tile {t} leaves the region"))),
            };
            if !graph.has_arc(a, b) {
                return Err(Error::InvalidParameter(format!("tile {t} is not two adjacent cells")));
            }
            if partner[a] != usize::MAX || partner[b] != usize::MAX {
                return Err(Error::InvalidParameter(format!("tile {t} overlaps another tile")));
            }
            partner[a] = b;
            partner[b] = a;
        }
        if let Some(i) = partner.iter().position(|&p| p == usize::MAX) {
            return Err(Error::InvalidParameter(format!("cell {} is not covered", patch.cells()[i])));
        }
        Ok(partner)
    }

    /// Arcs `(a, b)`, `a < b`, over the patch's cell indices.
    pub fn arcs(&self, patch: &Patch) -> Result<Vec<(usize, usize)>> {
        let partner = self.partners(patch)?;
        Ok((0..partner.len()).filter(|&i| i < partner[i]).map(|i| (i, partner[i])).collect())
    }
}
