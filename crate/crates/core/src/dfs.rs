//! DFS tree, multi-level low points, and the reordered numberings.
//!
//! The base tree `T` is built once per connected component; vertices are
//! then identified with their DFS visit order, so ancestry is an interval
//! test. On top of it sit the level-`k` low points (`low_k(v)` = k-th
//! smallest distinct proper ancestor of `v` reachable by a back-edge from
//! `v`'s subtree) and, per low level, a re-run of the DFS with children
//! sorted by that level's low point. Those reordered numberings are what
//! make batched rectangle queries over runs of sibling subtrees possible.
//!
//! All traversals use explicit work stacks; input size is not limited by
//! call-stack depth.

use crate::graph::Graph;
use crate::{LOW_ABSENT, NO_VERTEX};

/// Rooted DFS tree in DFS numbering: vertex `1` is the root, `parent(v) < v`,
/// and the subtree of `v` is the interval `[v, v + nd(v) - 1]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DfsTree {
    n: u32,
    parent: Vec<u32>,
    nd: Vec<u32>,
    depth: Vec<u32>,
}

impl DfsTree {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub const ROOT: u32 = 1;

    /// Parent in DFS numbering; `NO_VERTEX` for the root.
    pub fn parent(&self, v: u32) -> u32 {
        self.parent[v as usize]
    }

    /// Subtree size of `v`.
    pub fn nd(&self, v: u32) -> u32 {
        self.nd[v as usize]
    }

    /// Depth with `depth(root) = 1`.
    pub fn depth(&self, v: u32) -> u32 {
        self.depth[v as usize]
    }

    /// Is `a` an ancestor of `v` (inclusive)?
    pub fn is_ancestor(&self, a: u32, v: u32) -> bool {
        a <= v && v < a + self.nd[a as usize]
    }

    pub(crate) fn from_parts(parent: Vec<u32>, nd: Vec<u32>, depth: Vec<u32>) -> DfsTree {
        DfsTree {
            n: parent.len() as u32 - 1,
            parent,
            nd,
            depth,
        }
    }

    pub(crate) fn parent_slice(&self) -> &[u32] {
        &self.parent
    }

    pub(crate) fn nd_slice(&self) -> &[u32] {
        &self.nd
    }

    pub(crate) fn depth_slice(&self) -> &[u32] {
        &self.depth
    }
}

/// Result of the base DFS: the tree in DFS numbering plus the permutation
/// from input ids to DFS numbers.
pub struct DfsBuild {
    pub tree: DfsTree,
    /// `order[input_id] = DFS number` (both 1-based).
    pub order: Vec<u32>,
}

/// Depth-first search from input vertex 1, exploring neighbors in
/// ascending input order. The graph must be connected.
pub fn build_dfs(g: &Graph) -> DfsBuild {
    let n = g.n() as usize;
    let mut order = vec![0u32; n + 1];
    let mut parent = vec![NO_VERTEX; n + 1];
    let mut cursor = vec![0u32; n + 1];
    let mut stack = Vec::with_capacity(64);

    let mut counter = 1u32;
    order[1] = 1;
    stack.push(1u32);
    while let Some(&v) = stack.last() {
        let nbrs = g.neighbors(v);
        let mut cur = cursor[v as usize] as usize;
        let mut next = None;
        while cur < nbrs.len() {
            let w = nbrs[cur];
            cur += 1;
            if order[w as usize] == 0 {
                next = Some(w);
                break;
            }
        }
        cursor[v as usize] = cur as u32;
        match next {
            Some(w) => {
                counter += 1;
                order[w as usize] = counter;
                parent[counter as usize] = order[v as usize];
                stack.push(w);
            }
            None => {
                stack.pop();
            }
        }
    }
    assert_eq!(counter as usize, n, "build_dfs requires a connected graph");

    let mut nd = vec![1u32; n + 1];
    nd[0] = 0;
    for v in (2..=n).rev() {
        nd[parent[v] as usize] += nd[v];
    }
    let mut depth = vec![0u32; n + 1];
    depth[1] = 1;
    for v in 2..=n {
        depth[v] = depth[parent[v] as usize] + 1;
    }

    DfsBuild {
        tree: DfsTree::from_parts(parent, nd, depth),
        order,
    }
}

/// Children of every vertex in ascending DFS order, CSR layout.
pub struct BaseChildren {
    off: Vec<u32>,
    list: Vec<u32>,
}

impl BaseChildren {
    pub fn of(&self, v: u32) -> &[u32] {
        &self.list[self.off[v as usize] as usize..self.off[v as usize + 1] as usize]
    }

    pub fn range(&self, v: u32) -> (usize, usize) {
        (self.off[v as usize] as usize, self.off[v as usize + 1] as usize)
    }

    pub fn offsets(&self) -> &[u32] {
        &self.off
    }
}

pub fn base_children(t: &DfsTree) -> BaseChildren {
    let n = t.n() as usize;
    let mut off = vec![0u32; n + 2];
    for v in 2..=n as u32 {
        off[t.parent(v) as usize + 1] += 1;
    }
    for i in 1..off.len() {
        off[i] += off[i - 1];
    }
    let mut fill = off.clone();
    let mut list = vec![0u32; n.saturating_sub(1)];
    for v in 2..=n as u32 {
        let p = t.parent(v) as usize;
        list[fill[p] as usize] = v;
        fill[p] += 1;
    }
    BaseChildren { off, list }
}

/// Per-vertex sorted arrays of low points, fixed width with `LOW_ABSENT`
/// padding so each row is ascending end to end.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LowTable {
    n: u32,
    width: usize,
    slots: Vec<u32>,
}

impl LowTable {
    pub fn new(n: u32, width: usize) -> LowTable {
        LowTable {
            n,
            width,
            slots: vec![LOW_ABSENT; n as usize * width],
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    /// `low_k(v)` for `k` in `1..=width`.
    pub fn get(&self, v: u32, k: usize) -> Option<u32> {
        let raw = self.raw(v)[k - 1];
        (raw != LOW_ABSENT).then_some(raw)
    }

    /// The full sorted row of `v`: present values ascending, then padding.
    pub fn raw(&self, v: u32) -> &[u32] {
        let base = (v as usize - 1) * self.width;
        &self.slots[base..base + self.width]
    }

    fn set(&mut self, v: u32, k: usize, value: u32) {
        self.slots[(v as usize - 1) * self.width + (k - 1)] = value;
    }

    /// Copies into a new width, truncating or padding with absent entries.
    pub fn with_width(&self, new_width: usize) -> LowTable {
        let mut out = LowTable::new(self.n, new_width);
        let keep = self.width.min(new_width);
        for v in 1..=self.n as usize {
            let src = (v - 1) * self.width;
            let dst = (v - 1) * new_width;
            out.slots[dst..dst + keep].copy_from_slice(&self.slots[src..src + keep]);
        }
        out
    }

    pub(crate) fn slots(&self) -> &[u32] {
        &self.slots
    }

    pub(crate) fn from_parts(n: u32, width: usize, slots: Vec<u32>) -> LowTable {
        LowTable { n, width, slots }
    }
}

/// Fills level `k` of the table given correct levels `1..k`.
///
/// Vertices are processed in reverse DFS order. For each one, a binary
/// search over the first `k` adjacency entries finds the smallest
/// candidate above `low_{k-1}(v)` coming from `v`'s own back-edges (valid
/// only below `p(v)`); then each child's row, restricted to its first `k`
/// entries, can tighten it. Restricting both searches to `k` entries is
/// enough: any lower end smaller than `low_k(v)` is one of the at most
/// `k - 1` earlier low points of the same vertex.
pub fn extend_low_level(g: &Graph, t: &DfsTree, kids: &BaseChildren, low: &mut LowTable, k: usize) {
    assert!(k >= 1 && k <= low.width());
    let n = t.n();
    for v in (2..=n).rev() {
        let prev = if k == 1 {
            0 // below every real vertex id
        } else {
            let p = low.raw(v)[k - 2];
            if p == LOW_ABSENT {
                continue;
            }
            p
        };

        let adj = g.neighbors(v);
        let prefix = &adj[..adj.len().min(k)];
        let pv = t.parent(v);
        let mut cand = LOW_ABSENT;
        let i = prefix.partition_point(|&y| y <= prev);
        if i < prefix.len() && prefix[i] < pv {
            cand = prefix[i];
        }

        let mut bound = if cand == LOW_ABSENT { v } else { cand };
        for &c in kids.of(v) {
            let row = &low.raw(c)[..k];
            let j = row.partition_point(|&y| y <= prev);
            if j < k && row[j] < bound {
                cand = row[j];
                bound = cand;
            }
        }
        low.set(v, k, cand);
    }
}

/// Computes `low_1..low_width`; levels past `n - 1` cannot exist and are
/// left absent.
pub fn compute_low_table(g: &Graph, t: &DfsTree, width: usize) -> LowTable {
    let mut low = LowTable::new(t.n(), width);
    let kids = base_children(t);
    let top = width.min(t.n() as usize - 1);
    for k in 1..=top {
        extend_low_level(g, t, &kids, &mut low, k);
    }
    low
}

/// One reordered DFS numbering: `to[base] = DFS_i`, `from[DFS_i] = base`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelNumbering {
    pub to: Vec<u32>,
    pub from: Vec<u32>,
}

/// The `d*` reordered numberings; ancestry and subtree sizes are shared
/// with the base tree.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ReorderedNumbering {
    pub levels: Vec<LevelNumbering>,
}

/// Children list of one level: every vertex's children sorted ascending by
/// that level's low point (absent entries last, ties by child number),
/// flat with shared offsets, plus each vertex's index in its parent's list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelChildren {
    pub child: Vec<u32>,
    pub low_key: Vec<u32>,
    pub pos: Vec<u32>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ChildrenLists {
    /// Shared CSR offsets by vertex (identical across levels).
    pub off: Vec<u32>,
    pub levels: Vec<LevelChildren>,
}

impl ChildrenLists {
    /// `(children, low keys)` of `v` in the given 0-based level.
    pub fn list(&self, level: usize, v: u32) -> (&[u32], &[u32]) {
        let s = self.off[v as usize] as usize;
        let e = self.off[v as usize + 1] as usize;
        let lc = &self.levels[level];
        (&lc.child[s..e], &lc.low_key[s..e])
    }

    /// Absolute index of `v` within its parent's list at the given level.
    pub fn position(&self, level: usize, v: u32) -> usize {
        self.levels[level].pos[v as usize] as usize
    }

    pub fn slice_bounds(&self, v: u32) -> (usize, usize) {
        (self.off[v as usize] as usize, self.off[v as usize + 1] as usize)
    }
}

/// Builds the level-`k` (1-based) children list and the DFS numbering that
/// visits children in that order.
pub fn build_level(
    t: &DfsTree,
    kids: &BaseChildren,
    low: &LowTable,
    k: usize,
) -> (LevelNumbering, LevelChildren) {
    let n = t.n() as usize;

    let mut child: Vec<u32> = kids.list.clone();
    let mut low_key = vec![0u32; child.len()];
    for v in 1..=n as u32 {
        let (s, e) = kids.range(v);
        let slice = &mut child[s..e];
        // Stable sort keeps the ascending base order on ties.
        slice.sort_by_key(|&c| low.raw(c)[k - 1]);
        for (i, &c) in slice.iter().enumerate() {
            low_key[s + i] = low.raw(c)[k - 1];
        }
    }
    let mut pos = vec![0u32; n + 1];
    for (i, &c) in child.iter().enumerate() {
        pos[c as usize] = i as u32;
    }

    // Re-run the DFS over the tree alone, children in list order.
    let mut to = vec![0u32; n + 1];
    let mut from = vec![0u32; n + 1];
    let mut cursor = vec![0u32; n + 1];
    for v in 1..=n as u32 {
        cursor[v as usize] = kids.off[v as usize];
    }
    let mut counter = 1u32;
    to[1] = 1;
    from[1] = 1;
    let mut stack = vec![1u32];
    while let Some(&v) = stack.last() {
        let cur = cursor[v as usize];
        if cur < kids.off[v as usize + 1] {
            cursor[v as usize] = cur + 1;
            let c = child[cur as usize];
            counter += 1;
            to[c as usize] = counter;
            from[counter as usize] = c;
            stack.push(c);
        } else {
            stack.pop();
        }
    }
    debug_assert_eq!(counter as usize, n);

    (LevelNumbering { to, from }, LevelChildren { child, low_key, pos })
}
