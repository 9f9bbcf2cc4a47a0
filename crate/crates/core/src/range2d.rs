//! Static 2D range emptiness over the back-edge point set.
//!
//! One point per back-edge: x is the descendant endpoint's DFS number,
//! y the ancestor's, in whichever numbering the index was built for.
//! The structure is a merge-sort tree: points sorted by x, and for every
//! power-of-two block of that order the block's y values kept sorted.
//! A query decomposes its x-range into O(log) blocks and binary-searches
//! each block's y list, so emptiness costs O(log^2) array probes and the
//! whole index is a handful of flat vectors.

use crate::dfs::DfsTree;
use crate::graph::Graph;

/// Back-edge points `(x, y)` with `y < x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BackEdgePoints {
    pub pts: Vec<(u32, u32)>,
}

/// Extracts the back-edges of a renumbered graph: for every non-tree edge
/// the larger endpoint is the descendant.
pub fn collect_back_edges(g: &Graph, t: &DfsTree) -> BackEdgePoints {
    let pts = g
        .edges()
        .filter(|&(a, b)| t.parent(b) != a)
        .map(|(a, b)| (b, a))
        .collect();
    BackEdgePoints { pts }
}

/// Maps both coordinates of every point through a renumbering. Ancestry is
/// preserved by the reordered traversals, so `y < x` still holds.
pub fn translate_points(pts: &BackEdgePoints, to: &[u32]) -> BackEdgePoints {
    BackEdgePoints {
        pts: pts
            .pts
            .iter()
            .map(|&(x, y)| (to[x as usize], to[y as usize]))
            .collect(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RangeIndex {
    /// Point x-coordinates, ascending.
    xs: Vec<u32>,
    /// `levels[l]` holds the y values in blocks of `2^l` points (by x
    /// order), each block sorted ascending.
    levels: Vec<Vec<u32>>,
}

fn lower_bound(a: &[u32], key: u32, probes: &mut u32) -> usize {
    let mut lo = 0;
    let mut hi = a.len();
    while lo < hi {
        *probes += 1;
        let mid = (lo + hi) / 2;
        if a[mid] < key {
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    lo
}

fn upper_bound(a: &[u32], key: u32, probes: &mut u32) -> usize {
    let mut lo = 0;
    let mut hi = a.len();
    while lo < hi {
        *probes += 1;
        let mid = (lo + hi) / 2;
        if a[mid] <= key {
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    lo
}

impl RangeIndex {
    pub fn build(points: &BackEdgePoints) -> RangeIndex {
        let mut pts = points.pts.clone();
        pts.sort_unstable();
        let len = pts.len();
        let xs: Vec<u32> = pts.iter().map(|&(x, _)| x).collect();

        let mut levels = Vec::new();
        levels.push(pts.iter().map(|&(_, y)| y).collect::<Vec<u32>>());
        let mut block = 1usize;
        while block < len {
            let prev = levels.last().unwrap();
            let mut next = vec![0u32; len];
            let mut base = 0;
            while base < len {
                let mid = (base + block).min(len);
                let end = (base + 2 * block).min(len);
                let (mut i, mut j, mut k) = (base, mid, base);
                while i < mid && j < end {
                    if prev[i] <= prev[j] {
                        next[k] = prev[i];
                        i += 1;
                    } else {
                        next[k] = prev[j];
                        j += 1;
                    }
                    k += 1;
                }
                next[k..k + (mid - i)].copy_from_slice(&prev[i..mid]);
                let k = k + (mid - i);
                next[k..k + (end - j)].copy_from_slice(&prev[j..end]);
                base = end;
            }
            levels.push(next);
            block *= 2;
        }

        RangeIndex { xs, levels }
    }

    /// Number of stored points.
    pub fn len(&self) -> usize {
        self.xs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.xs.is_empty()
    }

    /// Is there a point in `[x1, x2] x [y1, y2]`? Degenerate rectangles
    /// (`x1 > x2` or `y1 > y2`) are empty.
    pub fn is_nonempty(&self, x1: u32, x2: u32, y1: u32, y2: u32) -> bool {
        self.is_nonempty_instrumented(x1, x2, y1, y2).0
    }

    /// Emptiness plus the number of array probes the query performed.
    pub fn is_nonempty_instrumented(&self, x1: u32, x2: u32, y1: u32, y2: u32) -> (bool, u32) {
        let mut probes = 0u32;
        if self.xs.is_empty() || x1 > x2 || y1 > y2 {
            return (false, probes);
        }
        let mut l = lower_bound(&self.xs, x1, &mut probes);
        let mut r = upper_bound(&self.xs, x2, &mut probes);
        let mut level = 0usize;
        while l < r {
            if l & 1 == 1 {
                if self.block_hits(level, l, y1, y2, &mut probes) {
                    return (true, probes);
                }
                l += 1;
            }
            if r & 1 == 1 {
                r -= 1;
                if self.block_hits(level, r, y1, y2, &mut probes) {
                    return (true, probes);
                }
            }
            l >>= 1;
            r >>= 1;
            level += 1;
        }
        (false, probes)
    }

    fn block_hits(&self, level: usize, block: usize, y1: u32, y2: u32, probes: &mut u32) -> bool {
        *probes += 1;
        let start = block << level;
        let end = (start + (1 << level)).min(self.xs.len());
        let ys = &self.levels[level][start..end];
        let i = lower_bound(ys, y1, probes);
        i < ys.len() && ys[i] <= y2
    }

    pub(crate) fn parts(&self) -> (&[u32], &[Vec<u32>]) {
        (&self.xs, &self.levels)
    }

    pub(crate) fn from_parts(xs: Vec<u32>, levels: Vec<Vec<u32>>) -> RangeIndex {
        RangeIndex { xs, levels }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dfs::build_dfs;
    use crate::gen::{random_connected_graph, rng_from_seed};
    use crate::graph::{load_graph, normalize, renumber};
    use rand::Rng;

    fn g2_points() -> BackEdgePoints {
        let g = normalize(
            &load_graph("5 8\n1 2\n2 3\n3 4\n4 5\n4 1\n4 2\n5 1\n5 3").unwrap(),
        );
        let b = build_dfs(&g);
        let g = renumber(&g, &b.order);
        collect_back_edges(&g, &b.tree)
    }

    #[test]
    fn empty_index_answers_false() {
        let idx = RangeIndex::build(&BackEdgePoints { pts: vec![] });
        assert!(!idx.is_nonempty(0, u32::MAX, 0, u32::MAX));
        assert_eq!(idx.len(), 0);
    }

    #[test]
    fn single_point_cycle() {
        let g = normalize(&load_graph("4 4\n1 2\n2 3\n3 4\n4 1").unwrap());
        let b = build_dfs(&g);
        let g = renumber(&g, &b.order);
        let pts = collect_back_edges(&g, &b.tree);
        assert_eq!(pts.pts, vec![(4, 1)]);
        let idx = RangeIndex::build(&pts);
        assert!(idx.is_nonempty(4, 4, 1, 1));
        assert!(!idx.is_nonempty(4, 4, 2, 3));
    }

    #[test]
    fn g2_point_set() {
        let mut pts = g2_points().pts;
        pts.sort_unstable();
        assert_eq!(pts, vec![(4, 1), (4, 2), (5, 1), (5, 3)]);
    }

    #[test]
    fn g2_example_rectangles() {
        let idx = RangeIndex::build(&g2_points());
        assert!(idx.is_nonempty(4, 5, 1, 1));
        assert!(!idx.is_nonempty(5, 5, 2, 2));
        assert!(!idx.is_nonempty(3, 2, 1, 9));
        assert!(!idx.is_nonempty(4, 5, 9, 1));
    }

    fn scan(pts: &[(u32, u32)], x1: u32, x2: u32, y1: u32, y2: u32) -> bool {
        pts.iter()
            .any(|&(x, y)| x1 <= x && x <= x2 && y1 <= y && y <= y2)
    }

    #[test]
    fn agrees_with_linear_scan_on_random_rectangles() {
        let mut rng = rng_from_seed(17);
        for _ in 0..12 {
            let n = rng.random_range(5..80);
            let g0 = random_connected_graph(&mut rng, n, 3 * n as u64);
            let b = build_dfs(&g0);
            let g = renumber(&g0, &b.order);
            let pts = collect_back_edges(&g, &b.tree);
            let idx = RangeIndex::build(&pts);
            let log = (n as f64).log2();
            let budget = (4.0 * log * log).ceil() as u32;
            for _ in 0..10_000 {
                let x1 = rng.random_range(0..=n + 1);
                let x2 = rng.random_range(0..=n + 1);
                let y1 = rng.random_range(0..=n + 1);
                let y2 = rng.random_range(0..=n + 1);
                let (got, probes) = idx.is_nonempty_instrumented(x1, x2, y1, y2);
                assert_eq!(got, scan(&pts.pts, x1, x2, y1, y2), "n={n} [{x1},{x2}]x[{y1},{y2}]");
                assert!(probes <= budget, "probes {probes} > {budget} at n={n}");
            }
        }
    }

    #[test]
    fn translation_preserves_emptiness_answers() {
        // Identity translation must leave every answer unchanged.
        let pts = g2_points();
        let ident: Vec<u32> = (0..=5).collect();
        let moved = translate_points(&pts, &ident);
        assert_eq!(pts, moved);
    }
}
