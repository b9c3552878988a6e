use super::peel::Peeler;
use super::search::{ForcingCertificate, Optimality, Verdict};
use super::{staircase_hexagon, staircase_square, Construction};
use crate::error::Result;
use crate::height::{extremal_heights, forcing_lower_bound, tiling_from_height};
use crate::lattice::{generate, CellShape, DualGraph, Region, Shape, Tile, Tiling};

/// Shapes that have a diagonal construction, recognised up to translation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KnownShape {
    /// `2n x 2n` square.
    EvenSquare(i32),
    Hexagon(i32, i32, i32),
}

// offset taking `region` onto `model`, if they are translates
fn offset_onto(region: &Region, model: &Region) -> Option<(i32, i32)> {
    if region.len() != model.len() {
        return None;
    }
    let (a, b) = (region.cells()[0], model.cells()[0]);
    if a.shape != b.shape {
        return None;
    }
    let d = (b.anchor.x - a.anchor.x, b.anchor.y - a.anchor.y);
    region
        .cells()
        .iter()
        .zip(model.cells())
        .all(|(c, m)| c.translate(d.0, d.1) == *m)
        .then_some(d)
}

/// Recognises even squares and symmetric hexagons; returns the shape and
/// the offset onto the generated copy.
pub fn recognize(region: &Region) -> Option<(KnownShape, (i32, i32))> {
    let n = region.len();
    if region.cells()[0].shape == CellShape::Square {
        let side = (n as f64).sqrt().round() as i32;
        if side % 2 != 0 || (side * side) as usize != n {
            return None;
        }
        let model = generate(Shape::Square(side)).ok()?;
        return offset_onto(region, &model).map(|d| (KnownShape::EvenSquare(side / 2), d));
    }
    // a hexagon with sides a, b, c has 2(ab + bc + ca) triangles
    let n = n as i32;
    for a in 1..=n {
        for b in 1..=n {
            if 2 * (a * b) >= n {
                break;
            }
            let rest = n / 2 - a * b;
            if n % 2 != 0 || rest % (a + b) != 0 {
                continue;
            }
            let c = rest / (a + b);
            if c < 1 {
                continue;
            }
            let model = generate(Shape::Hexagon { a, b, c }).ok()?;
            if let Some(d) = offset_onto(region, &model) {
                return Some((KnownShape::Hexagon(a, b, c), d));
            }
        }
    }
    None
}

/// Greedily drops tiles of `tiling` in canonical order while the rest still
/// forces it. The result forces `tiling` and no proper subset of it does
/// by peeling.
pub fn greedy_forcing_set(region: &Region, tiling: &Tiling) -> Result<Vec<Tile>> {
    let patch = region.patch();
    let arcs = tiling.arcs(patch)?;
    let graph = DualGraph::of(patch);
    let mut peeler = Peeler::new(&graph);
    let mut keep = vec![true; arcs.len()];
    for i in 0..arcs.len() {
        keep[i] = false;
        let chosen = arcs.iter().zip(&keep).filter(|(_, &k)| k).map(|(a, _)| *a);
        if !peeler.run(chosen).is_unique() {
            keep[i] = true;
        }
    }
    Ok(tiling
        .tiles()
        .iter()
        .zip(&keep)
        .filter(|(_, &k)| k)
        .map(|(t, _)| *t)
        .collect())
}

fn shift(c: Construction, d: (i32, i32)) -> (Tiling, Vec<Tile>) {
    let back = |t: &Tile| Tile::new(t.0.translate(-d.0, -d.1), t.1.translate(-d.0, -d.1));
    (
        Tiling::from_tiles(c.tiling.tiles().iter().map(back)),
        c.forcing_set.iter().map(back).collect(),
    )
}

/// A constructive upper bound on the forcing number without enumeration.
///
/// Even squares and symmetric hexagons get their diagonal construction;
/// any other region gets [`greedy_forcing_set`] of its minimal tiling. The
/// optimality field is set when the size meets the height lower bound.
pub fn forcing_upper_bound(region: &Region) -> Result<ForcingCertificate> {
    let (tiling, forcing_set) = match recognize(region) {
        Some((KnownShape::EvenSquare(n), d)) => shift(staircase_square(n)?, d),
        Some((KnownShape::Hexagon(a, b, c), d)) => shift(staircase_hexagon(a, b, c)?, d),
        None => {
            let ex = extremal_heights(region)?;
            let t = tiling_from_height(region, &ex.hmin)?;
            let set = greedy_forcing_set(region, &t)?;
            (t, set)
        }
    };
    let bound = forcing_lower_bound(region)? as usize;
    let optimality = (forcing_set.len() <= bound).then_some(Optimality::BoundMet);
    let mut set = forcing_set;
    set.sort();
    Ok(ForcingCertificate {
        tiling,
        forcing_set: set,
        verdict: Verdict::Forces,
        optimality,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forcing::peel_unique_extension;

    #[test]
    fn recognises_translates() {
        let r = generate(Shape::Square(6)).unwrap().translate(3, -2);
        assert_eq!(recognize(&r).map(|x| x.0), Some(KnownShape::EvenSquare(3)));
        let h = generate(Shape::Hexagon { a: 3, b: 4, c: 6 }).unwrap().translate(-1, 5);
        assert_eq!(recognize(&h).map(|x| x.0), Some(KnownShape::Hexagon(3, 4, 6)));
        assert_eq!(recognize(&generate(Shape::Rectangle { m: 2, n: 8 }).unwrap()), None);
        assert_eq!(recognize(&generate(Shape::Square(3)).unwrap()), None);
    }

    #[test]
    fn upper_bounds() {
        let r = generate(Shape::Square(10)).unwrap();
        let c = forcing_upper_bound(&r).unwrap();
        assert_eq!((c.f(), c.optimality), (5, Some(Optimality::BoundMet)));
        let r = generate(Shape::Rectangle { m: 3, n: 4 }).unwrap();
        let c = forcing_upper_bound(&r).unwrap();
        let patch = r.patch();
        let fixed: Vec<_> = c
            .forcing_set
            .iter()
            .map(|t| (patch.cell_index(&t.0).unwrap(), patch.cell_index(&t.1).unwrap()))
            .collect();
        assert!(peel_unique_extension(&DualGraph::of(patch), &fixed).unwrap().is_unique());
        assert!(c.forcing_set.iter().all(|t| c.tiling.contains(t)));
    }
}
