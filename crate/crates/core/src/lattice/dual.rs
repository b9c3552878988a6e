use super::{Color, Patch};

/// The cell adjacency graph of a patch: nodes are cell indices (canonical
/// order), arcs join cells sharing an edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualGraph {
    adjacency: Vec<Vec<usize>>,
    colors: Vec<Color>,
}

impl DualGraph {
    pub fn of(patch: &Patch) -> DualGraph {
        let cells = patch.cells();
        let adjacency = cells
            .iter()
            .map(|c| {
                let mut ns: Vec<usize> = c.edge_neighbors().iter().filter_map(|n| patch.cell_index(n)).collect();
                ns.sort_unstable();
                ns
            })
            .collect();
        DualGraph {
            adjacency,
            colors: cells.iter().map(|c| c.color()).collect(),
        }
    }

    pub fn node_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn neighbors(&self, node: usize) -> &[usize] {
        &self.adjacency[node]
    }

    pub fn color(&self, node: usize) -> Color {
        self.colors[node]
    }

    pub fn has_arc(&self, a: usize, b: usize) -> bool {
        a < self.adjacency.len() && self.adjacency[a].binary_search(&b).is_ok()
    }

    /// All arcs `(a, b)` with `a < b`, sorted.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (a, ns) in self.adjacency.iter().enumerate() {
            for &b in ns {
                if a < b {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn black_nodes(&self) -> Vec<usize> {
        (0..self.node_count()).filter(|&i| self.colors[i] == Color::Black).collect()
    }

    pub fn white_nodes(&self) -> Vec<usize> {
        (0..self.node_count()).filter(|&i| self.colors[i] == Color::White).collect()
    }

    /// Every arc joins a black and a white node.
    pub fn is_bipartite(&self) -> bool {
        self.arcs().iter().all(|&(a, b)| self.colors[a] != self.colors[b])
    }
}
