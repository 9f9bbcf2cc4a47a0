//! Naive reference oracles.
//!
//! Everything here recomputes its answer from first principles (BFS,
//! direct enumeration, linear tree scans) and shares no code with the
//! engine's query path. These are the ground truth the fast structures
//! are tested against.

use crate::dfs::DfsTree;
use crate::graph::Graph;
use crate::NO_VERTEX;

/// BFS reachability in the subgraph induced on `V \ F`.
///
/// `failed` may be in any order; `x` and `y` must not be in it.
pub fn brute_connected(g: &Graph, failed: &[u32], x: u32, y: u32) -> bool {
    debug_assert!(!failed.contains(&x) && !failed.contains(&y));
    if x == y {
        return true;
    }
    let mut blocked = vec![false; g.n() as usize + 1];
    for &f in failed {
        blocked[f as usize] = true;
    }
    let mut seen = vec![false; g.n() as usize + 1];
    let mut queue = vec![x];
    seen[x as usize] = true;
    let mut head = 0;
    while head < queue.len() {
        let u = queue[head];
        head += 1;
        for &w in g.neighbors(u) {
            if !blocked[w as usize] && !seen[w as usize] {
                if w == y {
                    return true;
                }
                seen[w as usize] = true;
                queue.push(w);
            }
        }
    }
    false
}

/// Component label of every vertex of `G \ F` (0 for failed vertices).
/// One labeling answers any number of pair queries.
pub fn brute_component_labels(g: &Graph, failed: &[u32]) -> Vec<u32> {
    let n = g.n() as usize;
    let mut label = vec![0u32; n + 1];
    let mut blocked = vec![false; n + 1];
    for &f in failed {
        blocked[f as usize] = true;
    }
    let mut next = 0u32;
    let mut queue = Vec::new();
    for s in g.vertices() {
        if blocked[s as usize] || label[s as usize] != 0 {
            continue;
        }
        next += 1;
        label[s as usize] = next;
        queue.clear();
        queue.push(s);
        let mut head = 0;
        while head < queue.len() {
            let u = queue[head];
            head += 1;
            for &w in g.neighbors(u) {
                if !blocked[w as usize] && label[w as usize] == 0 {
                    label[w as usize] = next;
                    queue.push(w);
                }
            }
        }
    }
    label
}

/// `low_k(v)` by direct enumeration: collect the distinct lower ends
/// `y < v` of back-edges `(x, y)` with `x` in the subtree of `v`, sort,
/// and take the k-th (1-based). `None` when fewer than `k` exist.
pub fn brute_low(g: &Graph, t: &DfsTree, v: u32, k: usize) -> Option<u32> {
    let mut ends = Vec::new();
    let lo = v;
    let hi = v + t.nd(v) - 1;
    for (a, b) in g.edges() {
        // a < b, so b is the descendant endpoint; a tree edge has a = p(b).
        if t.parent(b) != a && b >= lo && b <= hi && a < v {
            ends.push(a);
        }
    }
    ends.sort_unstable();
    ends.dedup();
    ends.get(k - 1).copied()
}

/// A connected component of `T \ F` as seen by a plain tree scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BruteComponent {
    pub root: u32,
    /// True when some failed vertex is a descendant of the root.
    pub internal: bool,
    /// Failed vertices whose tree parent lies in this component, ascending.
    pub boundary: Vec<u32>,
    /// All member vertices, ascending DFS numbers.
    pub verts: Vec<u32>,
}

/// Census of the components of `T \ F`, ordered by root.
pub fn brute_components(t: &DfsTree, failed: &[u32]) -> Vec<BruteComponent> {
    let n = t.n() as usize;
    let mut is_failed = vec![false; n + 1];
    for &f in failed {
        is_failed[f as usize] = true;
    }

    // Parent pointers always go to smaller DFS numbers, so one ascending
    // pass assigns every surviving vertex to the component of its parent
    // or opens a new one.
    let mut comp_of = vec![u32::MAX; n + 1];
    let mut comps: Vec<BruteComponent> = Vec::new();
    for v in 1..=n as u32 {
        if is_failed[v as usize] {
            continue;
        }
        let p = t.parent(v);
        if p == NO_VERTEX || is_failed[p as usize] {
            comp_of[v as usize] = comps.len() as u32;
            comps.push(BruteComponent {
                root: v,
                internal: false,
                boundary: Vec::new(),
                verts: vec![v],
            });
        } else {
            let c = comp_of[p as usize];
            comp_of[v as usize] = c;
            comps[c as usize].verts.push(v);
        }
    }

    for c in comps.iter_mut() {
        let lo = c.root;
        let hi = c.root + t.nd(c.root) - 1;
        c.internal = failed.iter().any(|&f| f >= lo && f <= hi);
    }
    for &f in failed {
        let p = t.parent(f);
        if p != NO_VERTEX && !is_failed[p as usize] {
            comps[comp_of[p as usize] as usize].boundary.push(f);
        }
    }
    for c in comps.iter_mut() {
        c.boundary.sort_unstable();
    }
    comps
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{load_graph, normalize};

    fn path3() -> Graph {
        normalize(&load_graph("3 2\n1 2\n2 3").unwrap())
    }

    #[test]
    fn cut_vertex_disconnects_path() {
        assert!(!brute_connected(&path3(), &[2], 1, 3));
    }

    #[test]
    fn cycle_survives_single_failure() {
        let c4 = normalize(&load_graph("4 4\n1 2\n2 3\n3 4\n4 1").unwrap());
        assert!(brute_connected(&c4, &[3], 2, 4));
    }

    #[test]
    fn empty_failure_set_matches_components() {
        let g = normalize(&load_graph("4 2\n1 2\n3 4").unwrap());
        assert!(brute_connected(&g, &[], 1, 2));
        assert!(!brute_connected(&g, &[], 1, 3));
    }

    #[test]
    fn connectivity_is_an_equivalence_on_survivors() {
        let g = normalize(
            &load_graph("6 6\n1 2\n2 3\n3 1\n4 5\n5 6\n6 4").unwrap(),
        );
        let failed = [3u32];
        let alive: Vec<u32> = (1..=6).filter(|v| !failed.contains(v)).collect();
        for &a in &alive {
            assert!(brute_connected(&g, &failed, a, a));
            for &b in &alive {
                assert_eq!(
                    brute_connected(&g, &failed, a, b),
                    brute_connected(&g, &failed, b, a)
                );
                for &c in &alive {
                    if brute_connected(&g, &failed, a, b) && brute_connected(&g, &failed, b, c) {
                        assert!(brute_connected(&g, &failed, a, c));
                    }
                }
            }
        }
    }

    #[test]
    fn labels_agree_with_pairwise_bfs() {
        let g = normalize(
            &load_graph("7 7\n1 2\n2 3\n3 4\n4 1\n5 6\n6 7\n3 5").unwrap(),
        );
        let failed = [3u32, 6];
        let labels = brute_component_labels(&g, &failed);
        for x in g.vertices() {
            for y in g.vertices() {
                if failed.contains(&x) || failed.contains(&y) {
                    continue;
                }
                assert_eq!(
                    labels[x as usize] == labels[y as usize],
                    brute_connected(&g, &failed, x, y),
                    "pair ({x}, {y})"
                );
            }
        }
    }
}
