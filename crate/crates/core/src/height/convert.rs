use std::collections::VecDeque;

use super::{validate_height, HeightField};
use crate::error::{Error, Result};
use crate::lattice::{boundary_step, Region, Tile, Tiling, Vertex};

/// The height function of a tiling, with `h(base) = 0`.
///
/// Tile edges step by `-1`/`+1` (white/black on the left); an edge crossed
/// by a tile steps by `+(M-1)`/`-(M-1)`.
pub fn height_from_tiling(region: &Region, tiling: &Tiling, base: Vertex) -> Result<HeightField> {
    let patch = region.patch();
    let partner = tiling.partners(patch)?;
    let start = patch
        .vertex_index(&base)
        .ok_or_else(|| Error::InvalidParameter(format!("{base} is not a vertex of the region")))?;
    let lattice = region.lattice();
    let m = lattice.modulus();
    let verts = patch.vertices();
    let edges = patch.edges();
    let step = |from: usize, to: usize, edge: usize| -> i64 {
        let e = &edges[edge];
        let bs = boundary_step(lattice, verts[from], verts[to]);
        match (e.left, e.right) {
            (Some(l), Some(r)) if partner[l] == r => -(m - 1) * bs,
            _ => bs,
        }
    };
    let mut h: Vec<Option<i64>> = vec![None; verts.len()];
    h[start] = Some(0);
    let mut queue = VecDeque::from([start]);
    while let Some(u) = queue.pop_front() {
        let hu = h[u].expect("queued vertices are labelled");
        for &(n, id) in patch.incident(u) {
            let hn = hu + step(u, n, id);
            match h[n] {
                None => {
                    h[n] = Some(hn);
                    queue.push_back(n);
                }
                Some(old) if old != hn => {
                    return Err(Error::InvalidParameter(format!(
                        "tiling heights disagree at {}",
                        verts[n]
                    )))
                }
                Some(_) => {}
            }
        }
    }
    let mut field = HeightField::new(base);
    for (i, v) in verts.iter().enumerate() {
        field.set(*v, h[i].expect("regions are connected"));
    }
    Ok(field)
}

/// The tiling whose height function is `h`: a tile crosses exactly the
/// edges along which `|Δh| = M - 1`.
pub fn tiling_from_height(region: &Region, h: &HeightField) -> Result<Tiling> {
    let verdict = validate_height(region, h);
    if !verdict.is_valid() {
        return Err(Error::InvalidHeight(verdict.to_string()));
    }
    let patch = region.patch();
    let m = region.lattice().modulus();
    let verts = patch.vertices();
    let cells = patch.cells();
    let mut tiles = Vec::with_capacity(cells.len() / 2);
    for e in patch.edges() {
        if let (Some(l), Some(r)) = (e.left, e.right) {
            let diff = h.get(&verts[e.b]).unwrap_or(0) - h.get(&verts[e.a]).unwrap_or(0);
            if diff.abs() == m - 1 {
                tiles.push(Tile::new(cells[l], cells[r]));
            }
        }
    }
    let tiling = Tiling::from_tiles(tiles);
    tiling.partners(patch)?;
    Ok(tiling)
}
