use std::fmt::Write;
use std::ops::ControlFlow;

use itertools::Itertools;
use rayon::prelude::*;

use super::peel::{PeelOutcome, Peeler};
use super::{for_each_tiling, Limits};
use crate::error::{Error, Result};
use crate::height::forcing_lower_bound;
use crate::lattice::format::cell_to_json;
use crate::lattice::{DualGraph, Patch, Region, Tile, Tiling};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Forces,
    Ambiguous,
}

/// How the optimality of a region-level result was established.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Optimality {
    /// The value equals the height-difference lower bound.
    BoundMet,
    /// Every tiling was examined.
    Exhaustive,
}

impl Optimality {
    pub fn as_str(self) -> &'static str {
        match self {
            Optimality::BoundMet => "bound-met",
            Optimality::Exhaustive => "exhaustive",
        }
    }
}

/// A tiling together with a subset of its tiles and whether that subset forces it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForcingCertificate {
    pub tiling: Tiling,
    pub forcing_set: Vec<Tile>,
    pub verdict: Verdict,
    /// Set for region-level results from [`forcing_number`].
    pub optimality: Option<Optimality>,
}

impl ForcingCertificate {
    pub fn f(&self) -> usize {
        self.forcing_set.len()
    }

    /// `{"f":..,"tiling":[[cell,cell],..],"forcing_set":[..],"optimality":..}`
    pub fn to_json(&self) -> String {
        let tiles = |ts: &[Tile]| -> String {
            let parts: Vec<String> = ts
                .iter()
                .map(|t| format!("[{},{}]", cell_to_json(&t.0), cell_to_json(&t.1)))
                .collect();
            format!("[{}]", parts.join(","))
        };
        let mut out = String::new();
        write!(
            out,
            "{{\"f\":{},\"tiling\":{},\"forcing_set\":{}",
            self.f(),
            tiles(self.tiling.tiles()),
            tiles(&self.forcing_set)
        )
        .unwrap();
        if let Some(o) = self.optimality {
            write!(out, ",\"optimality\":\"{}\"", o.as_str()).unwrap();
        }
        out.push_str("}\n");
        out
    }
}

/// Smallest subset (by size, then canonical order) of `arcs` that peels
/// to a unique matching, trying sizes below `below` only.
fn smallest_forcing_subset(graph: &DualGraph, arcs: &[(usize, usize)], below: usize) -> Option<Vec<usize>> {
    let mut peeler = Peeler::new(graph);
    for size in 0..below.min(arcs.len() + 1) {
        for combo in (0..arcs.len()).combinations(size) {
            if peeler.run(combo.iter().map(|&i| arcs[i])).is_unique() {
                return Some(combo);
            }
        }
    }
    None
}

fn certificate(patch: &Patch, graph: &DualGraph, arcs: &[(usize, usize)], chosen: &[usize]) -> ForcingCertificate {
    let cells = patch.cells();
    let fixed: Vec<(usize, usize)> = chosen.iter().map(|&i| arcs[i]).collect();
    let tiling = Tiling::from_tiles(arcs.iter().map(|&(a, b)| Tile(cells[a], cells[b])));
    // independent re-check of the verdict
    let verdict = match super::peel_unique_extension(graph, &fixed) {
        Ok(PeelOutcome::Unique(partner)) if Tiling::from_partners(patch, &partner) == tiling => Verdict::Forces,
        _ => Verdict::Ambiguous,
    };
    ForcingCertificate {
        tiling,
        forcing_set: fixed.iter().map(|&(a, b)| Tile(cells[a], cells[b])).collect(),
        verdict,
        optimality: None,
    }
}

/// The forcing number of one tiling with a smallest forcing set.
///
/// Subsets are tried by increasing size in canonical order, so the set
/// returned is the first minimum one. Fails with [`Error::GuardExceeded`]
/// when the tiling has more than `max_matching` tiles.
pub fn forcing_number_of_tiling(region: &Region, tiling: &Tiling, max_matching: usize) -> Result<ForcingCertificate> {
    if tiling.len() > max_matching {
        return Err(Error::GuardExceeded {
            what: "tiles in the matching",
            actual: tiling.len(),
            limit: max_matching,
        });
    }
    let patch = region.patch();
    let arcs = tiling.arcs(patch)?;
    let graph = DualGraph::of(patch);
    let chosen = smallest_forcing_subset(&graph, &arcs, usize::MAX).expect("a full matching forces itself");
    Ok(certificate(patch, &graph, &arcs, &chosen))
}

const BATCH: usize = 512;

// a tiling as arcs, with the indices of its smallest forcing subset
type Best = Option<(Vec<(usize, usize)>, Vec<usize>)>;

/// The forcing number of a region with a witness: the first tiling in
/// canonical order that attains the minimum, and its first smallest
/// forcing set.
///
/// Stops as soon as the height-difference lower bound is attained.
pub fn forcing_number(region: &Region, limits: &Limits) -> Result<ForcingCertificate> {
    let bound = forcing_lower_bound(region)? as usize;
    let patch = region.patch();
    let tiles = patch.len() / 2;
    if tiles > limits.max_matching {
        return Err(Error::GuardExceeded {
            what: "tiles in the matching",
            actual: tiles,
            limit: limits.max_matching,
        });
    }
    let graph = DualGraph::of(patch);
    let mut best: Best = None;
    let mut batch: Vec<Vec<(usize, usize)>> = Vec::with_capacity(BATCH);

    // returns true once the bound is met
    let flush = |batch: &mut Vec<Vec<(usize, usize)>>, best: &mut Best| {
        let cap = best.as_ref().map_or(usize::MAX, |b| b.1.len());
        let found: Vec<Option<Vec<usize>>> = batch
            .par_iter()
            .map(|arcs| smallest_forcing_subset(&graph, arcs, cap))
            .collect();
        for (arcs, sub) in batch.drain(..).zip(found) {
            if let Some(sub) = sub {
                if best.as_ref().is_none_or(|b| sub.len() < b.1.len()) {
                    *best = Some((arcs, sub));
                }
            }
        }
        best.as_ref().is_some_and(|b| b.1.len() <= bound)
    };

    let mut met = false;
    for_each_tiling(patch, limits.max_tilings, |partner| {
        let arcs: Vec<(usize, usize)> = (0..partner.len())
            .filter(|&i| i < partner[i])
            .map(|i| (i, partner[i]))
            .collect();
        batch.push(arcs);
        if batch.len() == BATCH && flush(&mut batch, &mut best) {
            met = true;
            return ControlFlow::Break(());
        }
        ControlFlow::Continue(())
    })?;
    if !met && !batch.is_empty() {
        met = flush(&mut batch, &mut best);
    }
    let (arcs, chosen) = best.ok_or(Error::Untileable(crate::error::UntileableReason::Inconsistent))?;
    let mut cert = certificate(patch, &graph, &arcs, &chosen);
    cert.optimality = Some(if met { Optimality::BoundMet } else { Optimality::Exhaustive });
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forcing::enumerate_tilings;
    use crate::lattice::{generate, Shape};

    #[test]
    fn tiny_regions() {
        let r = generate(Shape::Rectangle { m: 1, n: 2 }).unwrap();
        let t = &enumerate_tilings(r.patch(), 10).unwrap()[0];
        let c = forcing_number_of_tiling(&r, t, 28).unwrap();
        assert_eq!((c.f(), c.verdict), (0, Verdict::Forces));
        let r = generate(Shape::Square(2)).unwrap();
        for t in enumerate_tilings(r.patch(), 10).unwrap() {
            assert_eq!(forcing_number_of_tiling(&r, &t, 28).unwrap().f(), 1);
        }
    }

    #[test]
    fn guard() {
        let s = crate::forcing::staircase_square(4).unwrap();
        assert!(matches!(
            forcing_number_of_tiling(&s.region, &s.tiling, 28),
            Err(Error::GuardExceeded { actual: 32, .. })
        ));
    }

    #[test]
    fn square4_exact() {
        let r = generate(Shape::Square(4)).unwrap();
        let c = forcing_number(&r, &Limits::default()).unwrap();
        assert_eq!(c.f(), 2);
        assert_eq!(c.verdict, Verdict::Forces);
        assert_eq!(c.optimality, Some(Optimality::BoundMet));
    }
}
