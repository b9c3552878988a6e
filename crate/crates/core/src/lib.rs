//! Height functions, extremal tilings and forcing numbers for domino and
//! lozenge tilings of lattice regions. See the guide in `book/`.

pub mod cli;
pub mod error;
pub mod forcing;
pub mod height;
pub mod lattice;
pub mod render;

pub use error::{Error, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub struct Introduction;
    #[doc = include_str!("../../../book/src/regions.md")]
    pub struct Regions;
    #[doc = include_str!("../../../book/src/heights.md")]
    pub struct Heights;
    #[doc = include_str!("../../../book/src/metric.md")]
    pub struct Metric;
    #[doc = include_str!("../../../book/src/forcing.md")]
    pub struct Forcing;
    #[doc = include_str!("../../../book/src/excess.md")]
    pub struct Excess;
    #[doc = include_str!("../../../book/src/rendering.md")]
    pub struct Rendering;
    #[doc = include_str!("../../../book/src/cli.md")]
    pub struct Cli;
}
