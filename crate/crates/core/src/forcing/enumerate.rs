use std::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::lattice::{DualGraph, Patch, Tiling};

/// Calls `visit` with the partner array of every perfect matching of the
/// patch's dual graph, in canonical order: the smallest uncovered cell is
/// matched to its neighbours in increasing order.
///
/// Returns the number of matchings visited. Fails with
/// [`Error::Overflow`] as soon as more than `limit` would be visited.
pub fn for_each_tiling(
    patch: &Patch,
    limit: u64,
    mut visit: impl FnMut(&[usize]) -> ControlFlow<()>,
) -> Result<u64> {
    let graph = DualGraph::of(patch);
    let mut state = Search {
        graph: &graph,
        partner: vec![usize::MAX; graph.node_count()],
        count: 0,
        limit,
    };
    if graph.node_count().is_multiple_of(2) {
        let _ = state.descend(0, &mut visit)?;
    }
    Ok(state.count)
}

struct Search<'g> {
    graph: &'g DualGraph,
    partner: Vec<usize>,
    count: u64,
    limit: u64,
}

impl Search<'_> {
    fn descend(&mut self, from: usize, visit: &mut impl FnMut(&[usize]) -> ControlFlow<()>) -> Result<ControlFlow<()>> {
        let n = self.partner.len();
        let Some(u) = (from..n).find(|&i| self.partner[i] == usize::MAX) else {
            self.count += 1;
            if self.count > self.limit {
                return Err(Error::Overflow { limit: self.limit });
            }
            return Ok(visit(&self.partner));
        };
        let graph = self.graph;
        for &v in graph.neighbors(u) {
            if self.partner[v] != usize::MAX {
                continue;
            }
            self.partner[u] = v;
            self.partner[v] = u;
            let flow = self.descend(u + 1, visit)?;
            self.partner[u] = usize::MAX;
            self.partner[v] = usize::MAX;
            if flow.is_break() {
                return Ok(flow);
            }
        }
        Ok(ControlFlow::Continue(()))
    }
}

/// All tilings in canonical order, or [`Error::Overflow`] past `limit`.
pub fn enumerate_tilings(patch: &Patch, limit: u64) -> Result<Vec<Tiling>> {
    let mut out = Vec::new();
    for_each_tiling(patch, limit, |p| {
        out.push(Tiling::from_partners(patch, p));
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

/// Number of tilings, or [`Error::Overflow`] past `limit`.
pub fn count_tilings(patch: &Patch, limit: u64) -> Result<u64> {
    for_each_tiling(patch, limit, |_| ControlFlow::Continue(()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{generate, Shape};

    fn count(shape: Shape) -> u64 {
        count_tilings(generate(shape).unwrap().patch(), u64::MAX).unwrap()
    }

    #[test]
    fn small_counts() {
        assert_eq!(count(Shape::Rectangle { m: 1, n: 2 }), 1);
        assert_eq!(count(Shape::Square(2)), 2);
        assert_eq!(count(Shape::Rectangle { m: 1, n: 3 }), 0);
        assert_eq!(count(Shape::Rectangle { m: 2, n: 3 }), 3);
        assert_eq!(count(Shape::Square(4)), 36);
        assert_eq!(count(Shape::Hexagon { a: 1, b: 1, c: 1 }), 2);
    }

    #[test]
    fn overflow_and_order() {
        let r = generate(Shape::Square(4)).unwrap();
        assert_eq!(count_tilings(r.patch(), 35), Err(Error::Overflow { limit: 35 }));
        let all = enumerate_tilings(r.patch(), 36).unwrap();
        let mut sorted = all.clone();
        sorted.sort_by(|a, b| a.tiles().cmp(b.tiles()));
        sorted.dedup();
        assert_eq!(sorted.len(), 36);
    }
}
