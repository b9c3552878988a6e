use super::HeightField;
use crate::error::{Error, Result};
use crate::lattice::{boundary_step, Region, Vertex};

/// Heights forced on the boundary, anchored at the region's base vertex.
///
/// Walks the counterclockwise boundary applying `-1` for white-on-the-left
/// steps and `+1` for black-on-the-left steps. Fails with
/// [`Error::BoundaryMismatch`] when the walk does not close.
pub fn boundary_heights(region: &Region) -> Result<HeightField> {
    boundary_heights_from(region, region.base())
}

/// As [`boundary_heights`], anchored at another boundary vertex.
pub fn boundary_heights_from(region: &Region, base: Vertex) -> Result<HeightField> {
    let cycle = region.boundary_cycle();
    let n = cycle.len() - 1;
    let start = cycle[..n]
        .iter()
        .position(|v| *v == base)
        .ok_or_else(|| Error::InvalidParameter(format!("{base} is not a boundary vertex")))?;
    let lattice = region.lattice();
    let mut field = HeightField::new(base);
    let mut h = 0;
    field.set(base, 0);
    for k in 0..n {
        let p = cycle[(start + k) % n];
        let q = cycle[(start + k + 1) % n];
        h += boundary_step(lattice, p, q);
        if k + 1 < n {
            field.set(q, h);
        }
    }
    if h != 0 {
        return Err(Error::BoundaryMismatch { net: h });
    }
    Ok(field)
}
