//! Constant-time level-ancestor queries on the DFS tree.
//!
//! Default scheme: jump pointers plus ladders. The tree is cut into long
//! paths (every vertex continues through its tallest child), each path is
//! extended upward by its own length to form a ladder, and every vertex
//! stores ancestors at power-of-two distances. A query takes one jump,
//! which lands on a vertex whose height covers the remaining distance, and
//! finishes with a single ladder lookup: at most a handful of array reads.
//!
//! A plain binary-lifting scheme (logarithmic query, same answers) is kept
//! for debugging; it shares the jump table.

use crate::dfs::DfsTree;
use crate::error::{Error, Result};
use crate::NO_VERTEX;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LaScheme {
    /// Jump pointers + ladders, worst-case constant query.
    JumpLadder,
    /// Jump pointers only, logarithmic query.
    BinaryLifting,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelAncestorIndex {
    scheme: LaScheme,
    n: u32,
    depth: Vec<u32>,
    stride: usize,
    /// `jump[(v-1) * stride + j]` = ancestor of `v` at distance `2^j`.
    jump: Vec<u32>,
    /// All ladders concatenated, each ascending in depth.
    ladder_flat: Vec<u32>,
    /// Absolute index of each vertex inside its own path's ladder.
    ladder_pos: Vec<u32>,
}

fn floor_log2(x: u32) -> u32 {
    debug_assert!(x > 0);
    31 - x.leading_zeros()
}

impl LevelAncestorIndex {
    pub fn build(t: &DfsTree) -> LevelAncestorIndex {
        Self::build_with(t, LaScheme::JumpLadder)
    }

    pub fn build_with(t: &DfsTree, scheme: LaScheme) -> LevelAncestorIndex {
        let n = t.n() as usize;
        let depth: Vec<u32> = t.depth_slice().to_vec();

        let max_depth = depth.iter().copied().max().unwrap_or(1);
        let stride = if max_depth <= 1 {
            0
        } else {
            floor_log2(max_depth - 1) as usize + 1
        };

        let mut jump = vec![NO_VERTEX; n * stride];
        if stride > 0 {
            for v in 2..=n as u32 {
                jump[(v as usize - 1) * stride] = t.parent(v);
            }
            for j in 1..stride {
                for v in 1..=n as u32 {
                    let half = jump[(v as usize - 1) * stride + j - 1];
                    if half != NO_VERTEX {
                        jump[(v as usize - 1) * stride + j] =
                            jump[(half as usize - 1) * stride + j - 1];
                    }
                }
            }
        }

        let (ladder_flat, ladder_pos) = if scheme == LaScheme::JumpLadder {
            Self::build_ladders(t)
        } else {
            (Vec::new(), Vec::new())
        };

        LevelAncestorIndex {
            scheme,
            n: t.n(),
            depth,
            stride,
            jump,
            ladder_flat,
            ladder_pos,
        }
    }

    fn build_ladders(t: &DfsTree) -> (Vec<u32>, Vec<u32>) {
        let n = t.n() as usize;

        // height[v] = length of the longest downward path from v.
        let mut height = vec![0u32; n + 1];
        for v in (2..=n as u32).rev() {
            let p = t.parent(v) as usize;
            height[p] = height[p].max(height[v as usize] + 1);
        }
        // Every vertex continues its path through the tallest child
        // (smallest number on ties).
        let mut preferred = vec![NO_VERTEX; n + 1];
        for v in 2..=n as u32 {
            let p = t.parent(v) as usize;
            let cur = preferred[p];
            if cur == NO_VERTEX || height[v as usize] > height[cur as usize] {
                preferred[p] = v;
            }
        }

        let mut flat = Vec::with_capacity(2 * n);
        let mut pos = vec![0u32; n + 1];
        let mut above = Vec::new();
        for v in 1..=n as u32 {
            let head = v == DfsTree::ROOT || preferred[t.parent(v) as usize] != v;
            if !head {
                continue;
            }
            // Collect the path downward, then extend upward by its length.
            let start = flat.len();
            let mut u = v;
            while u != NO_VERTEX {
                flat.push(u);
                u = preferred[u as usize];
            }
            let path_len = flat.len() - start;
            above.clear();
            let mut a = t.parent(v);
            while a != NO_VERTEX && above.len() < path_len {
                above.push(a);
                a = t.parent(a);
            }
            above.reverse();
            // Splice the extension in front of the path segment.
            flat.splice(start..start, above.iter().copied());
            let seg = &flat[start..];
            for (i, &w) in seg.iter().enumerate() {
                // Record positions only for the path's own members.
                if i >= seg.len() - path_len {
                    pos[w as usize] = (start + i) as u32;
                }
            }
        }
        (flat, pos)
    }

    pub fn scheme(&self) -> LaScheme {
        self.scheme
    }

    /// Ancestor of `v` at depth `delta` (`1 <= delta <= depth(v)`).
    pub fn query(&self, v: u32, delta: u32) -> Result<u32> {
        if v < 1 || v > self.n {
            return Err(Error::contract(format!("vertex {v} out of range")));
        }
        if delta < 1 || delta > self.depth[v as usize] {
            return Err(Error::contract(format!(
                "target depth {delta} outside [1, {}] for vertex {v}",
                self.depth[v as usize]
            )));
        }
        Ok(self.query_unchecked(v, delta).0)
    }

    /// Like [`Self::query`], also reporting the number of array reads the
    /// lookup performed.
    pub fn query_instrumented(&self, v: u32, delta: u32) -> Result<(u32, u32)> {
        self.query(v, delta)?;
        Ok(self.query_unchecked(v, delta))
    }

    pub(crate) fn query_unchecked(&self, v: u32, delta: u32) -> (u32, u32) {
        let k = self.depth[v as usize] - delta;
        if k == 0 {
            return (v, 0);
        }
        match self.scheme {
            LaScheme::JumpLadder => {
                let j = floor_log2(k);
                let u = self.jump[(v as usize - 1) * self.stride + j as usize];
                let rest = k - (1 << j);
                if rest == 0 {
                    return (u, 1);
                }
                // One jump covers at least half of k, so u has height
                // >= rest and its own ladder reaches the target.
                let p = self.ladder_pos[u as usize];
                let ans = self.ladder_flat[p as usize - rest as usize];
                debug_assert_eq!(self.depth[ans as usize], delta);
                (ans, 3)
            }
            LaScheme::BinaryLifting => {
                let mut u = v;
                let mut reads = 0;
                let mut left = k;
                while left > 0 {
                    let j = floor_log2(left);
                    u = self.jump[(u as usize - 1) * self.stride + j as usize];
                    reads += 1;
                    left -= 1 << j;
                }
                (u, reads)
            }
        }
    }

    pub(crate) fn parts(
        &self,
    ) -> (LaScheme, u32, &[u32], usize, &[u32], &[u32], &[u32]) {
        (
            self.scheme,
            self.n,
            &self.depth,
            self.stride,
            &self.jump,
            &self.ladder_flat,
            &self.ladder_pos,
        )
    }

    #[allow(clippy::too_many_arguments)]
    pub(crate) fn from_parts(
        scheme: LaScheme,
        n: u32,
        depth: Vec<u32>,
        stride: usize,
        jump: Vec<u32>,
        ladder_flat: Vec<u32>,
        ladder_pos: Vec<u32>,
    ) -> LevelAncestorIndex {
        LevelAncestorIndex {
            scheme,
            n,
            depth,
            stride,
            jump,
            ladder_flat,
            ladder_pos,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dfs::build_dfs;
    use crate::gen::{random_connected_graph, rng_from_seed};
    use crate::graph::{load_graph, normalize, renumber};

    fn path5() -> DfsTree {
        let g = normalize(&load_graph("5 4\n1 2\n2 3\n3 4\n4 5").unwrap());
        build_dfs(&g).tree
    }

    fn walk_up(t: &DfsTree, mut v: u32, delta: u32) -> u32 {
        while t.depth(v) > delta {
            v = t.parent(v);
        }
        v
    }

    #[test]
    fn path_query() {
        let la = LevelAncestorIndex::build(&path5());
        assert_eq!(la.query(5, 2).unwrap(), 2);
        assert_eq!(la.query(5, 1).unwrap(), 1);
        assert_eq!(la.query(3, 3).unwrap(), 3);
    }

    #[test]
    fn self_depth_is_identity() {
        let t = path5();
        let la = LevelAncestorIndex::build(&t);
        for v in 1..=5 {
            assert_eq!(la.query(v, t.depth(v)).unwrap(), v);
        }
    }

    #[test]
    fn out_of_range_depth_is_rejected() {
        let la = LevelAncestorIndex::build(&path5());
        assert!(la.query(1, 2).is_err());
        assert!(la.query(3, 0).is_err());
        assert!(la.query(9, 1).is_err());
    }

    #[test]
    fn agrees_with_parent_walk_on_random_trees() {
        let mut rng = rng_from_seed(5);
        for round in 0..60 {
            let n = 2 + (round % 50) as u32;
            let g0 = random_connected_graph(&mut rng, n, 0);
            let b = build_dfs(&g0);
            let t = &b.tree;
            let la = LevelAncestorIndex::build(t);
            let bl = LevelAncestorIndex::build_with(t, LaScheme::BinaryLifting);
            for v in 1..=n {
                for delta in 1..=t.depth(v) {
                    let want = walk_up(t, v, delta);
                    assert_eq!(la.query(v, delta).unwrap(), want, "n={n} v={v} d={delta}");
                    assert_eq!(bl.query(v, delta).unwrap(), want);
                }
            }
        }
    }

    #[test]
    fn default_scheme_reads_at_most_four_cells() {
        let mut rng = rng_from_seed(9);
        for _ in 0..20 {
            let g0 = random_connected_graph(&mut rng, 200, 40);
            let b = build_dfs(&g0);
            let la = LevelAncestorIndex::build(&b.tree);
            for v in 1..=200u32 {
                for delta in 1..=b.tree.depth(v) {
                    let (_, reads) = la.query_instrumented(v, delta).unwrap();
                    assert!(reads <= 4, "v={v} delta={delta} reads={reads}");
                }
            }
        }
    }

    #[test]
    fn finds_the_child_of_an_ancestor() {
        let mut rng = rng_from_seed(13);
        let g0 = random_connected_graph(&mut rng, 80, 60);
        let b = build_dfs(&g0);
        let g = renumber(&g0, &b.order);
        let t = &b.tree;
        let la = LevelAncestorIndex::build(t);
        for f in 1..=g.n() {
            for x in 1..=g.n() {
                if x != f && t.is_ancestor(f, x) {
                    let c = la.query(x, t.depth(f) + 1).unwrap();
                    assert_eq!(t.parent(c), f);
                    assert!(t.is_ancestor(c, x));
                    assert_eq!(c, walk_up(t, x, t.depth(f) + 1));
                }
            }
        }
    }

    #[test]
    fn single_vertex_tree() {
        let g = normalize(&load_graph("1 0").unwrap());
        let t = build_dfs(&g).tree;
        let la = LevelAncestorIndex::build(&t);
        assert_eq!(la.query(1, 1).unwrap(), 1);
    }
}
