//! Rooted pathwidth, heavy-path depth, and exhaustive oracles for rooted
//! pathwidth and (unrooted) pathwidth on small trees.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::tree::{NodeId, Tree};

pub const DEFAULT_RPW_ORACLE_CAP: usize = 16;
pub const DEFAULT_PW_ORACLE_CAP: usize = 14;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("tree has {n} nodes, oracle cap is {cap}")]
pub struct CapExceeded {
    pub n: usize,
    pub cap: usize,
}

/// Per-node rooted pathwidth together with the chosen rpw-heaviest child.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RpwAnnotation {
    pub rpw: Vec<u32>,
    pub heavy_child: Vec<Option<NodeId>>,
}

impl RpwAnnotation {
    pub fn root(&self) -> u32 {
        self.rpw[0]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamReport {
    pub n: usize,
    pub rpw: u32,
    pub hpd: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pw: Option<u32>,
}

/// Bottom-up evaluation of the rooted pathwidth.
///
/// The best heavy child is always one of maximum rpw (leftmost on ties): then
/// the node's value is `max(rpw(heavy), 1 + max over the others)`.
pub fn rooted_pathwidth(t: &Tree) -> RpwAnnotation {
    let n = t.len();
    let mut rpw = vec![1u32; n];
    let mut heavy_child = vec![None; n];
    for u in (0..n).rev() {
        let cs = t.children(u);
        if cs.is_empty() {
            continue;
        }
        let mut best = cs[0];
        for &c in &cs[1..] {
            if rpw[c] > rpw[best] {
                best = c;
            }
        }
        let others = cs
            .iter()
            .filter(|&&c| c != best)
            .map(|&c| rpw[c] + 1)
            .max()
            .unwrap_or(0);
        rpw[u] = rpw[best].max(others);
        heavy_child[u] = Some(best);
    }
    RpwAnnotation { rpw, heavy_child }
}

/// Heavy-path depth for every node; the size-heaviest child is the leftmost
/// child of maximum subtree size.
pub fn heavy_path_depths(t: &Tree) -> Vec<u32> {
    let size = t.subtree_sizes();
    let mut hpd = vec![1u32; t.len()];
    for u in (0..t.len()).rev() {
        let cs = t.children(u);
        if cs.is_empty() {
            continue;
        }
        let mut heavy = cs[0];
        for &c in &cs[1..] {
            if size[c] > size[heavy] {
                heavy = c;
            }
        }
        hpd[u] = cs
            .iter()
            .map(|&c| hpd[c] + u32::from(c != heavy))
            .max()
            .unwrap();
    }
    hpd
}

pub fn heavy_path_depth(t: &Tree) -> u32 {
    heavy_path_depths(t)[0]
}

/// Rooted pathwidth by direct minimisation over root-to-leaf paths.
pub fn rpw_path_oracle(t: &Tree) -> Result<u32, CapExceeded> {
    rpw_path_oracle_with_cap(t, DEFAULT_RPW_ORACLE_CAP)
}

pub fn rpw_path_oracle_with_cap(t: &Tree, cap: usize) -> Result<u32, CapExceeded> {
    if t.len() > cap {
        return Err(CapExceeded { n: t.len(), cap });
    }
    // the subtrees hanging off a root-to-leaf path are subtrees T_c, so the
    // memo is keyed by node
    let mut memo = vec![0u32; t.len()];
    for u in (0..t.len()).rev() {
        memo[u] = best_path_value(t, u, &memo);
    }
    Ok(memo[0])
}

fn best_path_value(t: &Tree, u: NodeId, memo: &[u32]) -> u32 {
    // enumerate root-to-leaf paths of T_u explicitly
    let mut best = u32::MAX;
    let mut stack = vec![(u, 0u32)];
    while let Some((v, hanging)) = stack.pop() {
        let cs = t.children(v);
        if cs.is_empty() {
            best = best.min(hanging.max(1));
            continue;
        }
        for &next in cs {
            let off_path = cs
                .iter()
                .filter(|&&c| c != next)
                .map(|&c| 1 + memo[c])
                .max()
                .unwrap_or(0);
            stack.push((next, hanging.max(off_path)));
        }
    }
    best
}

/// Pathwidth of the underlying unrooted tree by exhaustive path recursion.
pub fn pathwidth_oracle(t: &Tree) -> Result<u32, CapExceeded> {
    pathwidth_oracle_with_cap(t, DEFAULT_PW_ORACLE_CAP)
}

pub fn pathwidth_oracle_with_cap(t: &Tree, cap: usize) -> Result<u32, CapExceeded> {
    let n = t.len();
    if n > cap || n > 64 {
        return Err(CapExceeded {
            n,
            cap: cap.min(64),
        });
    }
    let mut adj = vec![0u64; n];
    for u in 1..n {
        let p = t.parent(u).unwrap();
        adj[u] |= 1 << p;
        adj[p] |= 1 << u;
    }
    let mut pw = Pathwidth {
        adj,
        memo: HashMap::new(),
    };
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    Ok(pw.solve(all))
}

struct Pathwidth {
    adj: Vec<u64>,
    memo: HashMap<u64, u32>,
}

impl Pathwidth {
    fn solve(&mut self, set: u64) -> u32 {
        if set.count_ones() == 1 {
            return 0;
        }
        if let Some(&v) = self.memo.get(&set) {
            return v;
        }
        let nodes: Vec<usize> = bits(set).collect();
        let mut best = u32::MAX;
        'paths: for (i, &a) in nodes.iter().enumerate() {
            'ends: for &b in &nodes[i..] {
                let path = self.path_between(set, a, b);
                let mut worst = 1;
                for comp in self.components(set & !path) {
                    worst = worst.max(1 + self.solve(comp));
                    if worst >= best {
                        continue 'ends;
                    }
                }
                best = worst;
                if best == 1 {
                    break 'paths;
                }
            }
        }
        self.memo.insert(set, best);
        best
    }

    fn path_between(&self, set: u64, a: usize, b: usize) -> u64 {
        // BFS parents inside `set`
        let mut prev = [usize::MAX; 64];
        let mut seen = 1u64 << a;
        let mut queue = vec![a];
        let mut head = 0;
        while head < queue.len() {
            let u = queue[head];
            head += 1;
            if u == b {
                break;
            }
            for v in bits(self.adj[u] & set & !seen) {
                seen |= 1 << v;
                prev[v] = u;
                queue.push(v);
            }
        }
        let mut path = 1u64 << b;
        let mut v = b;
        while v != a {
            v = prev[v];
            path |= 1 << v;
        }
        path
    }

    fn components(&self, mut rest: u64) -> Vec<u64> {
        let mut out = Vec::new();
        while rest != 0 {
            let start = rest.trailing_zeros() as usize;
            let mut comp = 1u64 << start;
            let mut frontier = comp;
            while frontier != 0 {
                let mut next = 0;
                for u in bits(frontier) {
                    next |= self.adj[u] & rest & !comp;
                }
                comp |= next;
                frontier = next;
            }
            rest &= !comp;
            out.push(comp);
        }
        out
    }
}

fn bits(mut x: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if x == 0 {
            None
        } else {
            let i = x.trailing_zeros() as usize;
            x &= x - 1;
            Some(i)
        }
    })
}

/// Rooted pathwidth, heavy-path depth, and the pathwidth oracle when the tree
/// is within `pw_cap`.
pub fn param_report(t: &Tree, pw_cap: usize) -> ParamReport {
    ParamReport {
        n: t.len(),
        rpw: rooted_pathwidth(t).root(),
        hpd: heavy_path_depth(t),
        pw: pathwidth_oracle_with_cap(t, pw_cap).ok(),
    }
}
