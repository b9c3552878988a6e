//! Height functions and everything computed from them.
//!
//! Convention: along a directed lattice edge that is part of a tile's
//! boundary the height drops by one when the white cell is on the left and
//! rises by one when the black cell is on the left. Crossing the inside of a
//! tile changes the height by `±3` (dominoes) or `±2` (lozenges). The largest
//! possible increase along an edge is its [`edge_weight`].

use std::collections::BTreeMap;

use crate::lattice::Vertex;

mod boundary;
mod convert;
mod extremal;
mod geodesic;
mod metric;
mod profile;

pub use boundary::{boundary_heights, boundary_heights_from};
pub use convert::{height_from_tiling, tiling_from_height};
pub use extremal::{
    admits_height, extremal_heights, extremal_heights_from, validate_height, ExtremalHeights, HeightVerdict,
};
pub use geodesic::{boundary_criterion, extend_heights, geodesic_related, GeodesicOracle};
pub use metric::{alpha, alpha_oracle, alpha_plane, edge_weight, MetricSample, Window};
pub use profile::{c_profile, c_radius, centered_block, forcing_lower_bound, g_profile, GProfile};

/// Integer heights on (a subset of) a region's vertices, anchored at `base`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeightField {
    pub base: Vertex,
    pub values: BTreeMap<Vertex, i64>,
}

impl HeightField {
    pub fn new(base: Vertex) -> Self {
        HeightField {
            base,
            values: BTreeMap::new(),
        }
    }

    pub fn get(&self, v: &Vertex) -> Option<i64> {
        self.values.get(v).copied()
    }

    pub fn set(&mut self, v: Vertex, h: i64) {
        self.values.insert(v, h);
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Vertex, i64)> + '_ {
        self.values.iter().map(|(v, h)| (*v, *h))
    }

    /// The same field shifted so that `base` has height 0.
    pub fn rebased(&self, base: Vertex) -> Option<HeightField> {
        let offset = self.get(&base)?;
        Some(HeightField {
            base,
            values: self.values.iter().map(|(v, h)| (*v, h - offset)).collect(),
        })
    }
}
