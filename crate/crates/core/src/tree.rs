//! Ordered rooted trees: representation, the balanced-parenthesis text
//! format, the JSON node-list format, and the generators for the tree
//! families used throughout the crate.
//!
//! Node ids are preorder indices and never change after construction, so a
//! node's children always carry larger ids than the node itself. Most
//! algorithms exploit this by walking ids in reverse for bottom-up passes,
//! which keeps everything iterative even on very deep trees.

use std::collections::HashMap;
use std::fmt;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub type NodeId = usize;

/// Upper bound on attempts when rejection-sampling random trees.
pub const MAX_REJECTION_ATTEMPTS: usize = 100_000;

pub const MAX_BINARY_HEIGHT: u32 = 24;
pub const MAX_QUINTARY_LEVEL: u32 = 9;
pub const MAX_HPD_LEVEL: u32 = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty input")]
    Empty,
    #[error("unexpected '{found}' at byte {offset}")]
    Unexpected { offset: usize, found: char },
    #[error("unbalanced parentheses: missing ')' at byte {offset}")]
    Unclosed { offset: usize },
    #[error("trailing input at byte {offset}")]
    Trailing { offset: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("tree has no nodes")]
    Empty,
    #[error("root {0} is not a node id")]
    UnknownRoot(usize),
    #[error("node id {0} appears more than once")]
    DuplicateId(usize),
    #[error("node {node} lists unknown child {child}")]
    UnknownChild { node: usize, child: usize },
    #[error("node {0} has more than one parent or is a child of itself")]
    MultipleParents(usize),
    #[error("the root {0} appears as a child")]
    RootHasParent(usize),
    #[error("node {0} is not reachable from the root")]
    Unreachable(usize),
    #[error("invalid JSON tree: {0}")]
    Json(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("{what} must be in {min}..={max}, got {got}")]
    OutOfRange {
        what: &'static str,
        min: u64,
        max: u64,
        got: u64,
    },
    #[error("no tree with {n} nodes and max degree {max_degree} found in {attempts} attempts")]
    RejectionFailed {
        n: usize,
        max_degree: usize,
        attempts: usize,
    },
}

/// An immutable ordered rooted tree. Node 0 is the root.
#[derive(Clone, PartialEq, Eq)]
pub struct Tree {
    parent: Vec<Option<NodeId>>,
    children: Vec<Vec<NodeId>>,
    labels: Vec<Option<String>>,
}

/// A borrowed view of a single node.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NodeRecord<'a> {
    pub id: NodeId,
    pub parent: Option<NodeId>,
    pub children: &'a [NodeId],
    pub label: Option<&'a str>,
}

impl Tree {
    pub fn single() -> Self {
        Tree {
            parent: vec![None],
            children: vec![Vec::new()],
            labels: vec![None],
        }
    }

    /// Builds a tree from arbitrary child lists, renumbering nodes in preorder.
    ///
    /// Returns the tree and the map from input index to new id.
    pub fn from_child_lists(
        root: usize,
        children: &[Vec<usize>],
        labels: &[Option<String>],
    ) -> Result<(Tree, Vec<NodeId>), TreeError> {
        let n = children.len();
        if n == 0 {
            return Err(TreeError::Empty);
        }
        if root >= n {
            return Err(TreeError::UnknownRoot(root));
        }
        let mut has_parent = vec![false; n];
        for (u, cs) in children.iter().enumerate() {
            for &c in cs {
                if c >= n {
                    return Err(TreeError::UnknownChild { node: u, child: c });
                }
                if c == root {
                    return Err(TreeError::RootHasParent(root));
                }
                if has_parent[c] {
                    return Err(TreeError::MultipleParents(c));
                }
                has_parent[c] = true;
            }
        }
        let mut b = Builder::with_capacity(n);
        let mut new_id = vec![usize::MAX; n];
        // (input node, new parent id)
        let mut stack = vec![(root, None)];
        while let Some((u, p)) = stack.pop() {
            let id = b.push(p, labels.get(u).cloned().flatten());
            new_id[u] = id;
            for &c in children[u].iter().rev() {
                stack.push((c, Some(id)));
            }
        }
        if let Some(u) = new_id.iter().position(|&x| x == usize::MAX) {
            return Err(TreeError::Unreachable(u));
        }
        Ok((b.finish(), new_id))
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    /// Always false; a tree has at least one node.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn root(&self) -> NodeId {
        0
    }

    pub fn children(&self, u: NodeId) -> &[NodeId] {
        &self.children[u]
    }

    pub fn parent(&self, u: NodeId) -> Option<NodeId> {
        self.parent[u]
    }

    pub fn label(&self, u: NodeId) -> Option<&str> {
        self.labels[u].as_deref()
    }

    pub fn degree(&self, u: NodeId) -> usize {
        self.children[u].len()
    }

    pub fn is_leaf(&self, u: NodeId) -> bool {
        self.children[u].is_empty()
    }

    pub fn node(&self, u: NodeId) -> NodeRecord<'_> {
        NodeRecord {
            id: u,
            parent: self.parent[u],
            children: &self.children[u],
            label: self.label(u),
        }
    }

    pub fn nodes(&self) -> impl Iterator<Item = NodeRecord<'_>> {
        (0..self.len()).map(|u| self.node(u))
    }

    /// Subtree sizes, indexed by node id.
    pub fn subtree_sizes(&self) -> Vec<usize> {
        let mut size = vec![1usize; self.len()];
        for u in (1..self.len()).rev() {
            let p = self.parent[u].expect("non-root has a parent");
            size[p] += size[u];
        }
        size
    }

    /// The subtree rooted at `u` as a standalone tree.
    pub fn subtree(&self, u: NodeId) -> Tree {
        let size = self.subtree_sizes()[u];
        // preorder ids make the subtree a contiguous id range
        let mut b = Builder::with_capacity(size);
        for v in u..u + size {
            let p = if v == u {
                None
            } else {
                self.parent[v].map(|p| p - u)
            };
            b.push(p, self.labels[v].clone());
        }
        b.finish()
    }

    /// Graph-theoretic height; a single node has height 1.
    pub fn height(&self) -> usize {
        let mut depth = vec![1usize; self.len()];
        for u in 1..self.len() {
            depth[u] = depth[self.parent[u].unwrap()] + 1;
        }
        depth.into_iter().max().unwrap_or(1)
    }

    /// Canonical label-free balanced-parenthesis form.
    pub fn to_paren(&self) -> String {
        let mut out = String::with_capacity(2 * self.len());
        // (node, next child index)
        let mut stack: Vec<(NodeId, usize)> = vec![(0, 0)];
        out.push('(');
        while let Some(top) = stack.last_mut() {
            let (u, i) = *top;
            if i < self.children[u].len() {
                top.1 += 1;
                out.push('(');
                stack.push((self.children[u][i], 0));
            } else {
                out.push(')');
                stack.pop();
            }
        }
        out
    }

    pub fn to_json(&self) -> TreeJson {
        TreeJson {
            root: 0,
            nodes: (0..self.len())
                .map(|u| NodeJson {
                    id: u,
                    children: self.children[u].clone(),
                    label: self.labels[u].clone(),
                })
                .collect(),
        }
    }

    pub fn from_json(j: &TreeJson) -> Result<Tree, TreeError> {
        let mut index = HashMap::with_capacity(j.nodes.len());
        for (i, node) in j.nodes.iter().enumerate() {
            if index.insert(node.id, i).is_some() {
                return Err(TreeError::DuplicateId(node.id));
            }
        }
        let root = *index.get(&j.root).ok_or(TreeError::UnknownRoot(j.root))?;
        let mut children = Vec::with_capacity(j.nodes.len());
        for node in &j.nodes {
            let mut cs = Vec::with_capacity(node.children.len());
            for c in &node.children {
                let ci = *index.get(c).ok_or(TreeError::UnknownChild {
                    node: node.id,
                    child: *c,
                })?;
                cs.push(ci);
            }
            children.push(cs);
        }
        let labels: Vec<_> = j.nodes.iter().map(|n| n.label.clone()).collect();
        Tree::from_child_lists(root, &children, &labels)
            .map(|(t, _)| t)
            .map_err(|e| match e {
                // report input ids rather than positions
                TreeError::MultipleParents(i) => TreeError::MultipleParents(j.nodes[i].id),
                TreeError::Unreachable(i) => TreeError::Unreachable(j.nodes[i].id),
                TreeError::RootHasParent(i) => TreeError::RootHasParent(j.nodes[i].id),
                other => other,
            })
    }

    pub fn from_json_str(s: &str) -> Result<Tree, TreeError> {
        let j: TreeJson = serde_json::from_str(s).map_err(|e| TreeError::Json(e.to_string()))?;
        Tree::from_json(&j)
    }
}

impl fmt::Debug for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tree({})", self.to_paren())
    }
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_paren())
    }
}

impl std::str::FromStr for Tree {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_tree(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeJson {
    pub root: usize,
    pub nodes: Vec<NodeJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NodeJson {
    pub id: usize,
    pub children: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

/// Appends nodes in preorder.
struct Builder {
    parent: Vec<Option<NodeId>>,
    children: Vec<Vec<NodeId>>,
    labels: Vec<Option<String>>,
}

impl Builder {
    fn with_capacity(n: usize) -> Self {
        Builder {
            parent: Vec::with_capacity(n),
            children: Vec::with_capacity(n),
            labels: Vec::with_capacity(n),
        }
    }

    fn push(&mut self, parent: Option<NodeId>, label: Option<String>) -> NodeId {
        let id = self.parent.len();
        self.parent.push(parent);
        self.children.push(Vec::new());
        self.labels.push(label);
        if let Some(p) = parent {
            self.children[p].push(id);
        }
        id
    }

    fn finish(self) -> Tree {
        Tree {
            parent: self.parent,
            children: self.children,
            labels: self.labels,
        }
    }
}

fn is_label_byte(b: u8) -> bool {
    !b.is_ascii_whitespace() && b != b'(' && b != b')'
}

/// Parses `node := label? '(' node* ')'`, ignoring whitespace.
pub fn parse_tree(text: &str) -> Result<Tree, ParseError> {
    let bytes = text.as_bytes();
    let mut pos = 0;
    let skip_ws = |pos: &mut usize| {
        while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
            *pos += 1;
        }
    };
    skip_ws(&mut pos);
    if pos == bytes.len() {
        return Err(ParseError::Empty);
    }
    let mut b = Builder::with_capacity(bytes.len() / 2);
    let mut open: Vec<(NodeId, usize)> = Vec::new();
    let mut done = false;
    while pos < bytes.len() {
        skip_ws(&mut pos);
        if pos == bytes.len() {
            break;
        }
        if done {
            return Err(ParseError::Trailing { offset: pos });
        }
        let start = pos;
        while pos < bytes.len() && is_label_byte(bytes[pos]) {
            pos += 1;
        }
        let label = (pos > start).then(|| text[start..pos].to_string());
        if label.is_some() {
            skip_ws(&mut pos);
        }
        if pos == bytes.len() {
            return Err(ParseError::Unclosed { offset: pos });
        }
        match bytes[pos] {
            b'(' => {
                let id = b.push(open.last().map(|&(u, _)| u), label);
                open.push((id, pos));
                pos += 1;
            }
            b')' if label.is_none() => {
                if open.pop().is_none() {
                    return Err(ParseError::Unexpected {
                        offset: pos,
                        found: ')',
                    });
                }
                pos += 1;
                done = open.is_empty();
            }
            _ => {
                // a label must be followed by '('
                let found = text[pos..].chars().next().unwrap_or(' ');
                return Err(ParseError::Unexpected { offset: pos, found });
            }
        }
    }
    if !open.is_empty() {
        return Err(ParseError::Unclosed {
            offset: bytes.len(),
        });
    }
    Ok(b.finish())
}

pub fn serialize_tree(t: &Tree) -> String {
    t.to_paren()
}

fn check_range(what: &'static str, got: u64, min: u64, max: u64) -> Result<(), GenError> {
    if got < min || got > max {
        Err(GenError::OutOfRange {
            what,
            min,
            max,
            got,
        })
    } else {
        Ok(())
    }
}

fn from_generated(s: &str) -> Tree {
    parse_tree(s).expect("generated text is well formed")
}

/// Complete binary tree of height `h`; a single node has height 1.
pub fn gen_complete_binary(h: u32) -> Result<Tree, GenError> {
    check_range("height", h as u64, 1, MAX_BINARY_HEIGHT as u64)?;
    let mut s = String::from("()");
    for _ in 1..h {
        s = format!("({s}{s})");
    }
    Ok(from_generated(&s))
}

pub fn gen_path(k: usize) -> Result<Tree, GenError> {
    check_range("path length", k as u64, 1, u32::MAX as u64)?;
    Ok(from_generated(&path_text(k)))
}

fn path_text(k: usize) -> String {
    let mut s = "(".repeat(k);
    s.push_str(&")".repeat(k));
    s
}

/// Degree-5 family: the root's children are `T`, `T`, `X`, `T`, `T` where
/// `T` is the previous level and `X` is a node with two copies of `T`.
pub fn gen_quintary_family(i: u32) -> Result<Tree, GenError> {
    check_range("level", i as u64, 1, MAX_QUINTARY_LEVEL as u64)?;
    let mut s = String::from("()");
    for _ in 1..i {
        s = format!("({s}{s}({s}{s}){s}{s})");
    }
    Ok(from_generated(&s))
}

/// Binary family with rooted pathwidth 2 and heavy-path depth `i`: the root
/// has the previous level on the left and a rooted path one node longer on
/// the right.
pub fn gen_hpd_family(i: u32) -> Result<Tree, GenError> {
    check_range("level", i as u64, 1, MAX_HPD_LEVEL as u64)?;
    let mut s = String::from("()");
    let mut n = 1usize;
    for _ in 1..i {
        s = format!("({s}{})", path_text(n + 1));
        n = 2 * n + 2;
    }
    Ok(from_generated(&s))
}

/// Uniformly random ordered tree with `n` nodes, deterministic per seed.
///
/// A random arrangement of `n - 1` up-steps and `n` down-steps has exactly
/// one rotation whose proper prefixes are all non-negative; dropping its
/// final down-step leaves a uniformly distributed Dyck word.
pub fn gen_random_tree(n: usize, seed: u64, max_degree: Option<usize>) -> Result<Tree, GenError> {
    check_range("node count", n as u64, 1, u32::MAX as u64)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let attempts = if max_degree.is_some() {
        MAX_REJECTION_ATTEMPTS
    } else {
        1
    };
    for _ in 0..attempts {
        let t = from_generated(&random_tree_text(n, &mut rng));
        match max_degree {
            Some(m) if (0..t.len()).any(|u| t.degree(u) > m) => continue,
            _ => return Ok(t),
        }
    }
    Err(GenError::RejectionFailed {
        n,
        max_degree: max_degree.unwrap_or(0),
        attempts,
    })
}

fn random_tree_text(n: usize, rng: &mut ChaCha8Rng) -> String {
    let mut steps: Vec<i8> = Vec::with_capacity(2 * n - 1);
    steps.extend(std::iter::repeat_n(1, n - 1));
    steps.extend(std::iter::repeat_n(-1, n));
    steps.shuffle(rng);
    // rotate to start right after the first position of the minimum prefix sum
    let mut sum = 0i64;
    let mut min = i64::MAX;
    let mut min_at = 0;
    for (i, &s) in steps.iter().enumerate() {
        sum += s as i64;
        if sum < min {
            min = sum;
            min_at = i;
        }
    }
    let start = (min_at + 1) % steps.len();
    let mut out = String::with_capacity(2 * n);
    out.push('(');
    for k in 0..steps.len() - 1 {
        out.push(if steps[(start + k) % steps.len()] > 0 {
            '('
        } else {
            ')'
        });
    }
    out.push(')');
    out
}

/// Calls `f` for every ordered tree with exactly `n` nodes, in lexicographic
/// order of the canonical text ('(' before ')').
pub fn for_each_tree<F: FnMut(&Tree)>(n: usize, mut f: F) {
    assert!(n >= 1, "trees have at least one node");
    let m = n - 1;
    let mut word = Vec::with_capacity(2 * m);
    dyck_rec(m, 0, 0, &mut word, &mut |w| {
        let mut s = String::with_capacity(2 * n);
        s.push('(');
        s.extend(w.iter().map(|&b| b as char));
        s.push(')');
        f(&from_generated(&s));
    });
}

fn dyck_rec(m: usize, opened: usize, closed: usize, word: &mut Vec<u8>, f: &mut dyn FnMut(&[u8])) {
    if closed == m {
        f(word);
        return;
    }
    if opened < m {
        word.push(b'(');
        dyck_rec(m, opened + 1, closed, word, f);
        word.pop();
    }
    if closed < opened {
        word.push(b')');
        dyck_rec(m, opened, closed + 1, word, f);
        word.pop();
    }
}

/// All ordered trees with exactly `n` nodes.
pub fn all_trees(n: usize) -> Vec<Tree> {
    let mut out = Vec::new();
    for_each_tree(n, |t| out.push(t.clone()));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_small_examples() {
        assert_eq!(parse_tree("()").unwrap().len(), 1);
        let t = parse_tree("(()())").unwrap();
        assert_eq!(t.len(), 3);
        assert_eq!(t.children(0), &[1, 2]);
        let p = parse_tree("((()))").unwrap();
        assert_eq!(p.children(0), &[1]);
        assert_eq!(p.children(1), &[2]);
    }

    #[test]
    fn parse_ignores_whitespace_and_keeps_labels() {
        let t = parse_tree(" root( a() b ( c() ) )\n").unwrap();
        assert_eq!(t.to_paren(), "(()(()))");
        assert_eq!(t.label(0), Some("root"));
        assert_eq!(t.label(2), Some("b"));
        assert_eq!(t.label(3), Some("c"));
    }

    #[test]
    fn parse_errors_carry_offsets() {
        assert_eq!(parse_tree("   "), Err(ParseError::Empty));
        assert_eq!(parse_tree("(()"), Err(ParseError::Unclosed { offset: 3 }));
        assert_eq!(parse_tree("()()"), Err(ParseError::Trailing { offset: 2 }));
        assert_eq!(
            parse_tree(")"),
            Err(ParseError::Unexpected {
                offset: 0,
                found: ')'
            })
        );
        assert!(matches!(
            parse_tree("(a)"),
            Err(ParseError::Unexpected { offset: 2, .. })
        ));
    }

    #[test]
    fn serialize_examples() {
        assert_eq!(Tree::single().to_paren(), "()");
        assert_eq!(
            gen_quintary_family(2).unwrap().to_paren(),
            "(()()(()())()())"
        );
    }

    #[test]
    fn generator_examples() {
        assert_eq!(gen_complete_binary(1).unwrap().to_paren(), "()");
        assert_eq!(gen_complete_binary(2).unwrap().to_paren(), "(()())");
        assert_eq!(gen_complete_binary(3).unwrap().to_paren(), "((()())(()()))");
        assert_eq!(gen_path(1).unwrap().to_paren(), "()");
        assert_eq!(gen_path(2).unwrap().to_paren(), "(())");
        assert_eq!(gen_path(3).unwrap().to_paren(), "((()))");
        assert_eq!(gen_hpd_family(1).unwrap().len(), 1);
        assert_eq!(gen_hpd_family(2).unwrap().len(), 4);
        assert_eq!(gen_hpd_family(4).unwrap().len(), 22);
        assert_eq!(gen_quintary_family(1).unwrap().len(), 1);
    }

    #[test]
    fn family_sizes_follow_their_recurrences() {
        let mut prev = 1;
        for i in 2..=6 {
            let n = gen_quintary_family(i).unwrap().len();
            assert_eq!(n, 6 * prev + 2);
            prev = n;
        }
        for i in 1..=14u32 {
            assert_eq!(gen_hpd_family(i).unwrap().len(), 3 * (1 << i) / 2 - 2);
        }
    }

    #[test]
    fn generator_ranges() {
        assert!(gen_complete_binary(0).is_err());
        assert!(gen_path(0).is_err());
        assert!(gen_quintary_family(0).is_err());
        assert!(gen_quintary_family(MAX_QUINTARY_LEVEL + 1).is_err());
        assert!(gen_hpd_family(MAX_HPD_LEVEL + 1).is_err());
        assert!(gen_random_tree(0, 1, None).is_err());
    }

    #[test]
    fn random_tree_is_deterministic() {
        assert_eq!(gen_random_tree(1, 99, None).unwrap().to_paren(), "()");
        let a = gen_random_tree(4, 7, None).unwrap();
        let b = gen_random_tree(4, 7, None).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.len(), 4);
        for seed in 0..50 {
            assert_eq!(gen_random_tree(37, seed, None).unwrap().len(), 37);
        }
    }

    #[test]
    fn random_tree_respects_max_degree() {
        for seed in 0..20 {
            let t = gen_random_tree(60, seed, Some(4)).unwrap();
            assert!((0..t.len()).all(|u| t.degree(u) <= 4));
            let t = gen_random_tree(12, seed, Some(2)).unwrap();
            assert!((0..t.len()).all(|u| t.degree(u) <= 2));
        }
        assert!(matches!(
            gen_random_tree(3, 0, Some(0)),
            Err(GenError::RejectionFailed { .. })
        ));
    }

    #[test]
    fn random_tree_is_uniform_over_four_node_shapes() {
        let shapes = all_trees(4);
        assert_eq!(shapes.len(), 5);
        let mut counts: HashMap<String, usize> = HashMap::new();
        let samples = 100_000;
        for seed in 0..samples {
            *counts
                .entry(gen_random_tree(4, seed, None).unwrap().to_paren())
                .or_default() += 1;
        }
        assert_eq!(counts.len(), 5);
        for s in &shapes {
            let f = counts[&s.to_paren()] as f64 / samples as f64;
            assert!((f - 0.2).abs() <= 0.01, "{s}: {f}");
        }
    }

    #[test]
    fn enumeration_counts_are_catalan() {
        let catalan = [1, 1, 2, 5, 14, 42, 132, 429, 1430];
        for (i, &c) in catalan.iter().enumerate() {
            assert_eq!(all_trees(i + 1).len(), c);
        }
        let words: Vec<String> = all_trees(4).iter().map(|t| t.to_paren()).collect();
        let mut sorted = words.clone();
        sorted.sort();
        assert_eq!(words, sorted);
    }

    #[test]
    fn json_round_trip_and_renumbering() {
        let j = TreeJson {
            root: 10,
            nodes: vec![
                NodeJson {
                    id: 3,
                    children: vec![],
                    label: None,
                },
                NodeJson {
                    id: 10,
                    children: vec![7, 3],
                    label: Some("r".into()),
                },
                NodeJson {
                    id: 7,
                    children: vec![],
                    label: None,
                },
            ],
        };
        let t = Tree::from_json(&j).unwrap();
        assert_eq!(t.to_paren(), "(()())");
        assert_eq!(t.label(0), Some("r"));
        assert_eq!(Tree::from_json(&t.to_json()).unwrap(), t);
    }

    #[test]
    fn json_rejects_malformed_trees() {
        let cycle = r#"{"root":0,"nodes":[{"id":0,"children":[1]},{"id":1,"children":[2]},{"id":2,"children":[1]}]}"#;
        assert!(Tree::from_json_str(cycle).is_err());
        let orphan = r#"{"root":0,"nodes":[{"id":0,"children":[]},{"id":1,"children":[]}]}"#;
        assert_eq!(Tree::from_json_str(orphan), Err(TreeError::Unreachable(1)));
        let dup = r#"{"root":0,"nodes":[{"id":0,"children":[]},{"id":0,"children":[]}]}"#;
        assert_eq!(Tree::from_json_str(dup), Err(TreeError::DuplicateId(0)));
        let missing = r#"{"root":0,"nodes":[{"id":0,"children":[5]}]}"#;
        assert!(matches!(
            Tree::from_json_str(missing),
            Err(TreeError::UnknownChild { .. })
        ));
    }

    #[test]
    fn subtree_extracts_contiguous_block() {
        let t = gen_quintary_family(2).unwrap();
        assert_eq!(t.subtree(3).to_paren(), "(()())");
        assert_eq!(t.subtree(0), t);
        assert_eq!(t.height(), 3);
    }

    #[test]
    fn deep_paths_do_not_recurse() {
        let t = gen_path(200_000).unwrap();
        assert_eq!(t.len(), 200_000);
        assert_eq!(t.to_paren().len(), 400_000);
        assert_eq!(t.height(), 200_000);
    }
}
