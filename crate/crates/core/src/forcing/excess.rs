use std::fmt::Write;

use crate::error::{Error, Result};
use crate::lattice::format::cell_to_json;
use crate::lattice::{Cell, Color, DualGraph, Region};

/// White cells of the region adjacent to at least one cell of `black`.
pub fn neighborhood(region: &Region, black: &[Cell]) -> Vec<Cell> {
    let mut out: Vec<Cell> = black
        .iter()
        .flat_map(|b| b.edge_neighbors())
        .filter(|w| region.contains(w) && w.color() == Color::White)
        .collect();
    out.sort();
    out.dedup();
    out
}

/// `|N(U)| - |U|`.
pub fn excess(region: &Region, black: &[Cell]) -> i64 {
    neighborhood(region, black).len() as i64 - black.len() as i64
}

/// An ordering of the black cells minimising the largest prefix excess.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExcessReport {
    pub min_max_excess: i64,
    pub ordering: Vec<Cell>,
    /// `e(B_1), ..., e(B_n)` for the ordering.
    pub prefix_excess: Vec<i64>,
}

impl ExcessReport {
    /// `{"min_max_excess":..,"ordering":[cell,..],"prefix_excess":[..]}`
    pub fn to_json(&self) -> String {
        let cells: Vec<String> = self.ordering.iter().map(cell_to_json).collect();
        let ex: Vec<String> = self.prefix_excess.iter().map(|e| e.to_string()).collect();
        let mut out = String::new();
        writeln!(
            out,
            "{{\"min_max_excess\":{},\"ordering\":[{}],\"prefix_excess\":[{}]}}",
            self.min_max_excess,
            cells.join(","),
            ex.join(",")
        )
        .unwrap();
        out
    }
}

/// Exact minimum over orderings `b_1..b_n` of the black cells of
/// `max_k e({b_1..b_k})`, by dynamic programming over subsets:
/// `v({b}) = e({b})`, `v(S) = max(e(S), min_{b ∈ S} v(S \ b))`. Only
/// nonempty prefixes count; with no black cells the value is 0.
///
/// Fails with [`Error::GuardExceeded`] above `max_black` black cells.
pub fn min_max_excess(region: &Region, max_black: usize) -> Result<ExcessReport> {
    let patch = region.patch();
    let graph = DualGraph::of(patch);
    let blacks = graph.black_nodes();
    let whites = graph.white_nodes();
    let n = blacks.len();
    if n > max_black {
        return Err(Error::GuardExceeded {
            what: "black cells",
            actual: n,
            limit: max_black,
        });
    }
    if whites.len() > 128 {
        return Err(Error::GuardExceeded {
            what: "white cells",
            actual: whites.len(),
            limit: 128,
        });
    }
    let mut white_bit = vec![0u32; graph.node_count()];
    for (i, &w) in whites.iter().enumerate() {
        white_bit[w] = i as u32;
    }
    let nbr: Vec<u128> = blacks
        .iter()
        .map(|&b| graph.neighbors(b).iter().fold(0u128, |m, &w| m | (1u128 << white_bit[w])))
        .collect();

    // neighbourhood of a subset = OR of two half tables
    let lo_bits = n / 2;
    let hi_bits = n - lo_bits;
    let table = |offset: usize, bits: usize| -> Vec<u128> {
        let mut t = vec![0u128; 1 << bits];
        for s in 1..(1usize << bits) {
            let low = s.trailing_zeros() as usize;
            t[s] = t[s & (s - 1)] | nbr[offset + low];
        }
        t
    };
    let lo = table(0, lo_bits);
    let hi = table(lo_bits, hi_bits);
    let lo_mask = (1usize << lo_bits) - 1;
    let e = |s: usize| -> i64 {
        let cover = lo[s & lo_mask] | hi[s >> lo_bits];
        cover.count_ones() as i64 - s.count_ones() as i64
    };

    let full = (1usize << n) - 1;
    // excesses lie in -24..=128, so i16 keeps 2^24 states at 32 MiB
    // the empty set is no prefix: MIN makes v({b}) = e({b})
    let mut value = vec![i16::MIN; full + 1];
    for s in 1..=full {
        let mut best = i16::MAX;
        let mut rest = s;
        while rest != 0 {
            let b = rest & rest.wrapping_neg();
            best = best.min(value[s ^ b]);
            rest ^= b;
        }
        value[s] = best.max(e(s) as i16);
    }

    // walk back from the full set, removing the lowest index that keeps the optimum
    let mut order_rev = Vec::with_capacity(n);
    let mut s = full;
    while s != 0 {
        let mut rest = s;
        let mut pick = 0;
        let mut pick_val = i16::MAX;
        while rest != 0 {
            let b = rest & rest.wrapping_neg();
            if value[s ^ b] < pick_val {
                pick_val = value[s ^ b];
                pick = b;
            }
            rest ^= b;
        }
        order_rev.push(pick.trailing_zeros() as usize);
        s ^= pick;
    }
    order_rev.reverse();
    let cells = patch.cells();
    let ordering: Vec<Cell> = order_rev.iter().map(|&i| cells[blacks[i]]).collect();
    let mut prefix_excess = Vec::with_capacity(n);
    let mut acc = 0usize;
    for &i in &order_rev {
        acc |= 1 << i;
        prefix_excess.push(e(acc));
    }
    Ok(ExcessReport {
        min_max_excess: if n == 0 { 0 } else { value[full] as i64 },
        ordering,
        prefix_excess,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{generate, Shape};

    #[test]
    fn square2_excesses() {
        let r = generate(Shape::Square(2)).unwrap();
        assert_eq!(excess(&r, &[]), 0);
        assert_eq!(excess(&r, &[Cell::square(1, 0)]), 1);
        assert_eq!(excess(&r, &[Cell::square(1, 0), Cell::square(0, 1)]), 0);
        assert_eq!(min_max_excess(&r, 24).unwrap().min_max_excess, 1);
    }

    #[test]
    fn domino_has_no_excess() {
        let r = generate(Shape::Rectangle { m: 1, n: 2 }).unwrap();
        let rep = min_max_excess(&r, 24).unwrap();
        assert_eq!(rep.min_max_excess, 0);
        assert_eq!(rep.prefix_excess, vec![0]);
    }

    #[test]
    fn report_is_consistent() {
        let r = generate(Shape::Square(4)).unwrap();
        let rep = min_max_excess(&r, 24).unwrap();
        assert_eq!(rep.min_max_excess, 2);
        assert_eq!(*rep.prefix_excess.iter().max().unwrap(), 2);
        for k in 1..=rep.ordering.len() {
            assert_eq!(rep.prefix_excess[k - 1], excess(&r, &rep.ordering[..k]));
        }
        assert_eq!(*rep.prefix_excess.last().unwrap(), 0);
    }

    #[test]
    fn guard() {
        let r = generate(Shape::Square(8)).unwrap();
        assert!(matches!(min_max_excess(&r, 24), Err(Error::GuardExceeded { actual: 32, .. })));
    }
}
