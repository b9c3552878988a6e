//! Deterministic text and SVG pictures of regions, tilings and height data.

mod ascii;
mod svg;

use std::collections::HashSet;

pub use ascii::render_ascii;
pub use svg::render_svg;

use crate::error::Result;
use crate::height::HeightField;
use crate::lattice::{Region, Tile, Tiling};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Target {
    Ascii,
    Svg,
}

/// Which layers to draw.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Overlays {
    pub tiling: bool,
    pub heights: bool,
    pub g: bool,
    pub forcing_set: bool,
    pub cell_colors: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RenderSpec {
    pub target: Target,
    pub overlays: Overlays,
    /// SVG pixels per lattice unit.
    pub scale: u32,
}

impl RenderSpec {
    pub fn new(target: Target) -> Self {
        RenderSpec {
            target,
            overlays: Overlays::default(),
            scale: 40,
        }
    }

    pub fn with(mut self, f: impl FnOnce(&mut Overlays)) -> Self {
        f(&mut self.overlays);
        self
    }
}

/// Data for the requested overlays. `g` values are given as a height field.
#[derive(Debug, Clone, Copy, Default)]
pub struct Payloads<'a> {
    pub tiling: Option<&'a Tiling>,
    pub heights: Option<&'a HeightField>,
    pub g: Option<&'a HeightField>,
    pub forcing_set: Option<&'a [Tile]>,
}

impl Payloads<'_> {
    fn forced(&self, on: bool) -> HashSet<Tile> {
        match self.forcing_set {
            Some(s) if on => s.iter().copied().collect(),
            _ => HashSet::new(),
        }
    }
}

/// Dispatches on the requested target.
pub fn render(region: &Region, spec: &RenderSpec, payloads: &Payloads) -> Result<String> {
    match spec.target {
        Target::Ascii => render_ascii(region, spec, payloads),
        Target::Svg => render_svg(region, spec, payloads),
    }
}

fn missing(what: &str) -> crate::error::Error {
    crate::error::Error::InvalidParameter(format!("overlay {what} requested without data"))
}
