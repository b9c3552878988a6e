use crate::error::{Error, Result};
use crate::lattice::DualGraph;

/// Result of [`peel_unique_extension`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PeelOutcome {
    /// Exactly one perfect matching contains the fixed arcs; its partner array.
    Unique(Vec<usize>),
    /// A residual with minimum degree two remains.
    Ambiguous,
    /// Some node lost all its neighbours.
    Infeasible,
}

impl PeelOutcome {
    pub fn is_unique(&self) -> bool {
        matches!(self, PeelOutcome::Unique(_))
    }
}

/// Reusable buffers for repeated peeling on one graph.
pub(crate) struct Peeler<'g> {
    graph: &'g DualGraph,
    alive: Vec<bool>,
    degree: Vec<usize>,
    partner: Vec<usize>,
    stack: Vec<usize>,
}

impl<'g> Peeler<'g> {
    pub(crate) fn new(graph: &'g DualGraph) -> Self {
        let n = graph.node_count();
        Peeler {
            graph,
            alive: vec![true; n],
            degree: vec![0; n],
            partner: vec![usize::MAX; n],
            stack: Vec::with_capacity(n),
        }
    }

    fn remove(&mut self, u: usize) {
        self.alive[u] = false;
        for &w in self.graph.neighbors(u) {
            if self.alive[w] {
                self.degree[w] -= 1;
                if self.degree[w] <= 1 {
                    self.stack.push(w);
                }
            }
        }
    }

    /// Peels with the given arcs fixed. Arcs must be disjoint graph arcs
    /// (checked by the public wrapper).
    pub(crate) fn run(&mut self, fixed: impl IntoIterator<Item = (usize, usize)>) -> PeelOutcome {
        let g = self.graph;
        let n = g.node_count();
        self.alive.fill(true);
        self.partner.fill(usize::MAX);
        self.stack.clear();
        for u in 0..n {
            self.degree[u] = g.neighbors(u).len();
        }
        let mut left = n;
        for (a, b) in fixed {
            self.partner[a] = b;
            self.partner[b] = a;
            self.remove(a);
            self.remove(b);
            left -= 2;
        }
        for u in 0..n {
            if self.alive[u] && self.degree[u] <= 1 {
                self.stack.push(u);
            }
        }
        while let Some(u) = self.stack.pop() {
            if !self.alive[u] {
                continue;
            }
            if self.degree[u] == 0 {
                return PeelOutcome::Infeasible;
            }
            let v = *g
                .neighbors(u)
                .iter()
                .find(|&&w| self.alive[w])
                .expect("degree one means one live neighbour");
            self.partner[u] = v;
            self.partner[v] = u;
            self.remove(u);
            self.remove(v);
            left -= 2;
        }
        if left == 0 {
            PeelOutcome::Unique(self.partner.clone())
        } else {
            PeelOutcome::Ambiguous
        }
    }
}

/// Decides whether the fixed arcs extend to exactly one perfect matching.
///
/// Endpoints of fixed arcs are deleted, then every node of degree one is
/// matched to its only neighbour until nothing changes. An emptied graph
/// means a unique extension; a stranded node means none. What remains
/// otherwise has minimum degree two, so any perfect matching of it lies on
/// an alternating cycle and is not unique.
pub fn peel_unique_extension(graph: &DualGraph, fixed: &[(usize, usize)]) -> Result<PeelOutcome> {
    let mut used = vec![false; graph.node_count()];
    for &(a, b) in fixed {
        if !graph.has_arc(a, b) {
            return Err(Error::InvalidParameter(format!("({a}, {b}) is not an arc")));
        }
        if used[a] || used[b] {
            return Err(Error::InvalidParameter(format!("fixed arc ({a}, {b}) overlaps another")));
        }
        used[a] = true;
        used[b] = true;
    }
    Ok(Peeler::new(graph).run(fixed.iter().copied()))
}
