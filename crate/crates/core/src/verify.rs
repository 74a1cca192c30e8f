//! Exact verification of tree drawings and extraction of a rank-witness from
//! a valid drawing.
//!
//! All tests use integer orientation predicates on the pruned poly-lines.
//! Two segments may share a point only when it is the common bend of
//! consecutive segments of one edge, or a node where both edges end.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::layout::{prune_polyline, Drawing, Edge, Point};
use crate::rank::RankWitness;
use crate::tree::{NodeId, Tree};

/// Cap on the number of violations kept in a report.
pub const MAX_VIOLATIONS: usize = 1000;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Require {
    pub planar: bool,
    pub upward: bool,
    pub strictly_upward: bool,
    pub order_preserving: bool,
    pub straight_line: bool,
}

impl Require {
    pub const NONE: Require = Require {
        planar: false,
        upward: false,
        strictly_upward: false,
        order_preserving: false,
        straight_line: false,
    };

    fn wants(&self, kind: ViolationKind) -> bool {
        use ViolationKind::*;
        match kind {
            Crossing | NodeOnEdge | CoincidentNodes => self.planar,
            NotUpward => self.upward || self.strictly_upward,
            NotStrictlyUpward => self.strictly_upward,
            OrderViolated => self.order_preserving,
            NotStraight => self.straight_line,
        }
    }
}

impl FromStr for Require {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut r = Require::NONE;
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            match part {
                "planar" => r.planar = true,
                "upward" => r.upward = true,
                "strictly_upward" | "strict" => r.strictly_upward = true,
                "order_preserving" => r.order_preserving = true,
                "straight_line" => r.straight_line = true,
                other => return Err(format!("unknown requirement `{other}`")),
            }
        }
        Ok(r)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ViolationKind {
    Crossing,
    NodeOnEdge,
    CoincidentNodes,
    NotUpward,
    NotStrictlyUpward,
    OrderViolated,
    NotStraight,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub kind: ViolationKind,
    pub location: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub planar: bool,
    pub upward: bool,
    pub strictly_upward: bool,
    pub order_preserving: bool,
    pub straight_line: bool,
    pub width: i64,
    pub height: i64,
    pub max_bends: usize,
    pub violations: Vec<Violation>,
}

impl VerifyReport {
    pub fn satisfies(&self, req: Require) -> bool {
        (!req.planar || self.planar)
            && (!req.upward || self.upward)
            && (!req.strictly_upward || self.strictly_upward)
            && (!req.order_preserving || self.order_preserving)
            && (!req.straight_line || self.straight_line)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("drawing does not match the tree: {0}")]
    Mismatch(String),
    #[error("drawing is not planar, upward and order-preserving: {0}")]
    Precondition(String),
}

fn orient(a: Point, b: Point, c: Point) -> i128 {
    let (ax, ay) = (a[0] as i128, a[1] as i128);
    (b[0] as i128 - ax) * (c[1] as i128 - ay) - (b[1] as i128 - ay) * (c[0] as i128 - ax)
}

fn on_segment(p: Point, a: Point, b: Point) -> bool {
    orient(a, b, p) == 0
        && p[0] >= a[0].min(b[0])
        && p[0] <= a[0].max(b[0])
        && p[1] >= a[1].min(b[1])
        && p[1] <= a[1].max(b[1])
}

enum Contact {
    Disjoint,
    Point(Point),
    Crossing,
}

fn contact(a: Point, b: Point, c: Point, d: Point) -> Contact {
    let (o1, o2) = (orient(a, b, c).signum(), orient(a, b, d).signum());
    let (o3, o4) = (orient(c, d, a).signum(), orient(c, d, b).signum());
    if o1 * o2 < 0 && o3 * o4 < 0 {
        return Contact::Crossing;
    }
    if o1 == 0 && o2 == 0 {
        // collinear: compare projections on the dominant axis
        let axis = if a[0] != b[0] { 0 } else { 1 };
        let (lo1, hi1) = (a[axis].min(b[axis]), a[axis].max(b[axis]));
        let (lo2, hi2) = (c[axis].min(d[axis]), c[axis].max(d[axis]));
        let (lo, hi) = (lo1.max(lo2), hi1.min(hi2));
        return match lo.cmp(&hi) {
            Ordering::Greater => Contact::Disjoint,
            Ordering::Less => Contact::Crossing,
            Ordering::Equal => {
                let p = [a, b, c, d].into_iter().find(|p| p[axis] == lo).unwrap();
                Contact::Point(p)
            }
        };
    }
    for (p, s, t) in [(c, a, b), (d, a, b), (a, c, d), (b, c, d)] {
        if on_segment(p, s, t) {
            return Contact::Point(p);
        }
    }
    Contact::Disjoint
}

/// A segment of a pruned edge, or a node seen as a degenerate segment.
#[derive(Clone, Copy)]
struct Item {
    edge: Option<usize>,
    seg: usize,
    a: Point,
    b: Point,
    node: Option<NodeId>,
}

impl Item {
    fn ymin(&self) -> i64 {
        self.a[1].min(self.b[1])
    }
    fn ymax(&self) -> i64 {
        self.a[1].max(self.b[1])
    }
    fn xmin(&self) -> i64 {
        self.a[0].min(self.b[0])
    }
    fn xmax(&self) -> i64 {
        self.a[0].max(self.b[0])
    }
}

/// Half-plane and cross-product order of directions, starting at the
/// left-horizontal direction and turning through straight down.
fn direction_cmp(u: Point, v: Point) -> Ordering {
    let half = |p: Point| !(p[1] < 0 || (p[1] == 0 && p[0] < 0));
    match half(u).cmp(&half(v)) {
        Ordering::Equal => {
            let cross = u[0] as i128 * v[1] as i128 - u[1] as i128 * v[0] as i128;
            0.cmp(&cross)
        }
        o => o,
    }
}

fn describe(edges: &[Edge], it: &Item) -> String {
    match (it.node, it.edge) {
        (Some(v), _) => format!("node {v}"),
        (None, Some(e)) => format!("edge {}->{} segment {}", edges[e].from, edges[e].to, it.seg),
        _ => unreachable!(),
    }
}

fn check_structure(t: &Tree, d: &Drawing) -> Result<Vec<usize>, VerifyError> {
    let n = t.len();
    if d.positions.len() != n {
        return Err(VerifyError::Mismatch(format!(
            "{} positions for {n} nodes",
            d.positions.len()
        )));
    }
    if d.edges.len() != n - 1 {
        return Err(VerifyError::Mismatch(format!(
            "{} edges for {} tree edges",
            d.edges.len(),
            n - 1
        )));
    }
    let mut into = vec![usize::MAX; n];
    for (i, e) in d.edges.iter().enumerate() {
        if e.to >= n || e.to == 0 || t.parent(e.to) != Some(e.from) {
            return Err(VerifyError::Mismatch(format!(
                "edge {}->{} is not a tree edge",
                e.from, e.to
            )));
        }
        if into[e.to] != usize::MAX {
            return Err(VerifyError::Mismatch(format!(
                "edge into {} repeated",
                e.to
            )));
        }
        into[e.to] = i;
        if e.points.len() < 2
            || e.points[0] != d.positions[e.from]
            || e.points[e.points.len() - 1] != d.positions[e.to]
        {
            return Err(VerifyError::Mismatch(format!(
                "edge {}->{} does not join its endpoints",
                e.from, e.to
            )));
        }
    }
    Ok(into)
}

/// Checks all drawing properties; violations are listed only for the
/// properties in `require`.
pub fn check_drawing(t: &Tree, d: &Drawing, require: Require) -> Result<VerifyReport, VerifyError> {
    let into = check_structure(t, d)?;
    let pruned = d.pruned();
    let edges = &pruned.edges;
    let mut report = VerifyReport {
        planar: true,
        upward: true,
        strictly_upward: true,
        order_preserving: true,
        straight_line: true,
        width: d.width(),
        height: d.height(),
        max_bends: pruned.max_bends(),
        violations: Vec::new(),
    };
    let flag = |report: &mut VerifyReport, kind: ViolationKind, location: String| {
        use ViolationKind::*;
        match kind {
            Crossing | NodeOnEdge | CoincidentNodes => report.planar = false,
            NotUpward => {
                report.upward = false;
                report.strictly_upward = false;
            }
            NotStrictlyUpward => report.strictly_upward = false,
            OrderViolated => report.order_preserving = false,
            NotStraight => report.straight_line = false,
        }
        if require.wants(kind) && report.violations.len() < MAX_VIOLATIONS {
            report.violations.push(Violation { kind, location });
        }
    };

    for e in edges {
        if e.points.len() > 2 {
            flag(
                &mut report,
                ViolationKind::NotStraight,
                format!("edge {}->{} has {} bends", e.from, e.to, e.points.len() - 2),
            );
        }
        for (i, s) in e.points.windows(2).enumerate() {
            let loc = || format!("edge {}->{} segment {i}", e.from, e.to);
            if s[1][1] > s[0][1] {
                flag(&mut report, ViolationKind::NotUpward, loc());
            } else if s[1][1] == s[0][1] {
                flag(&mut report, ViolationKind::NotStrictlyUpward, loc());
            }
        }
    }

    // order of children by initial direction
    for u in 0..t.len() {
        let cs = t.children(u);
        for w in cs.windows(2) {
            let dir = |c: NodeId| {
                let p = &edges[into[c]].points;
                [p[1][0] - p[0][0], p[1][1] - p[0][1]]
            };
            if direction_cmp(dir(w[0]), dir(w[1])) != Ordering::Less {
                flag(
                    &mut report,
                    ViolationKind::OrderViolated,
                    format!("children {} and {} of node {u}", w[0], w[1]),
                );
            }
        }
    }

    // coincident nodes
    let mut sorted: Vec<(Point, NodeId)> = d.positions.iter().copied().zip(0..).collect();
    sorted.sort();
    for w in sorted.windows(2) {
        if w[0].0 == w[1].0 {
            flag(
                &mut report,
                ViolationKind::CoincidentNodes,
                format!("nodes {} and {} at {:?}", w[0].1, w[1].1, w[0].0),
            );
        }
    }

    // segment/segment and node/segment contacts, swept by decreasing y
    let mut items: Vec<Item> = Vec::new();
    for (ei, e) in edges.iter().enumerate() {
        for (si, s) in e.points.windows(2).enumerate() {
            items.push(Item {
                edge: Some(ei),
                seg: si,
                a: s[0],
                b: s[1],
                node: None,
            });
        }
    }
    for (v, &p) in d.positions.iter().enumerate() {
        items.push(Item {
            edge: None,
            seg: 0,
            a: p,
            b: p,
            node: Some(v),
        });
    }
    items.sort_by_key(|it| std::cmp::Reverse(it.ymax()));
    // whether point p is an allowed contact of segment item s: p must be the
    // edge's own end at a node
    let terminal = |s: &Item, p: Point| -> Option<NodeId> {
        let e = &edges[s.edge?];
        let last = e.points.len() - 2;
        if s.seg == 0 && p == s.a {
            Some(e.from)
        } else if s.seg == last && p == s.b {
            Some(e.to)
        } else {
            None
        }
    };
    let mut active: Vec<Item> = Vec::new();
    for it in &items {
        active.retain(|a| a.ymin() <= it.ymax());
        for other in &active {
            if other.xmax() < it.xmin() || other.xmin() > it.xmax() || other.ymin() > it.ymax() {
                continue;
            }
            match (it.node, other.node) {
                (Some(_), Some(_)) => continue,
                (Some(v), None) | (None, Some(v)) => {
                    let s = if it.node.is_some() { other } else { it };
                    let p = d.positions[v];
                    if on_segment(p, s.a, s.b) && terminal(s, p) != Some(v) {
                        flag(
                            &mut report,
                            ViolationKind::NodeOnEdge,
                            format!("node {v} lies on {}", describe(edges, s)),
                        );
                    }
                }
                (None, None) => {
                    let allowed = match contact(it.a, it.b, other.a, other.b) {
                        Contact::Disjoint => true,
                        Contact::Crossing => false,
                        Contact::Point(p) => {
                            if it.edge == other.edge {
                                it.seg.abs_diff(other.seg) == 1
                                    && (p == it.a || p == it.b)
                                    && (p == other.a || p == other.b)
                                    && terminal(it, p).is_none()
                            } else {
                                matches!(
                                    (terminal(it, p), terminal(other, p)),
                                    (Some(x), Some(y)) if x == y
                                )
                            }
                        }
                    };
                    if !allowed {
                        flag(
                            &mut report,
                            ViolationKind::Crossing,
                            format!("{} meets {}", describe(edges, it), describe(edges, other)),
                        );
                    }
                }
            }
        }
        active.push(*it);
    }
    Ok(report)
}

/// Result of witness extraction at the root.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Extraction {
    /// A single-node tree has rank 1 by definition and no witness.
    SingleNode,
    Witness(RankWitness),
}

impl fmt::Display for Extraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Extraction::SingleNode => f.write_str("single node"),
            Extraction::Witness(w) => write!(f, "{}", serde_json::to_string(w).unwrap()),
        }
    }
}

/// Exact rational `num / den` with `den > 0`.
type Frac = (i128, i128);

fn frac_lt(a: Frac, b: Frac) -> bool {
    a.0 * b.1 < b.0 * a.1
}

/// Reads a rank-witness for the root off a planar, upward, order-preserving
/// drawing: `X` is the root column and a child is big iff its subtree drawing
/// together with its root edge (root point excluded) meets column `X`.
pub fn extract_rank_witness(t: &Tree, d: &Drawing) -> Result<Extraction, VerifyError> {
    let need = Require {
        planar: true,
        upward: true,
        order_preserving: true,
        ..Require::NONE
    };
    let report = check_drawing(t, d, need)?;
    if !report.satisfies(need) {
        let first = report
            .violations
            .first()
            .map_or(String::new(), |v| v.location.clone());
        return Err(VerifyError::Precondition(first));
    }
    if t.len() == 1 {
        return Ok(Extraction::SingleNode);
    }
    let (x0, x1, _, _) = d.bounds();
    let width = (x1 - x0 + 1) as u32;
    let pruned = d.pruned();
    let into = pruned.edge_into();
    let shift = |p: Point| [p[0] - x0 + 1, p[1]];
    let mut positions: Vec<Point> = pruned.positions.iter().map(|&p| shift(p)).collect();
    let mut lines: Vec<Vec<Point>> = vec![Vec::new(); t.len()];
    for c in 1..t.len() {
        let e = &pruned.edges[into[c].expect("checked structure")];
        lines[c] = e.points.iter().map(|&p| shift(p)).collect();
    }
    let x = positions[0][0];
    let cs = t.children(0);

    let first_dir = |line: &[Point]| [line[1][0] - line[0][0], line[1][1] - line[0][1]];
    let mut v = cs.iter().position(|&c| {
        let dir = first_dir(&lines[c]);
        dir[0] == 0 && dir[1] < 0
    });
    if v.is_none() {
        // reroute one root edge to leave vertically, on a y-scaled copy
        let left = cs.iter().rposition(|&c| first_dir(&lines[c])[0] < 0);
        let i = left.unwrap_or(0);
        let c = cs[i];
        let p1 = lines[c][1];
        let dx = (x - p1[0]).abs();
        let target_col = if left.is_some() { x - 1 } else { x + 1 };
        let scale = 2 * width as i64 * dx;
        for p in positions.iter_mut() {
            p[1] *= scale;
        }
        for line in lines.iter_mut() {
            for p in line.iter_mut() {
                p[1] *= scale;
            }
        }
        let r = positions[0];
        let p1 = lines[c][1];
        let q = [target_col, r[1] + (p1[1] - r[1]) / dx];
        let mut rerouted = vec![r, [x, r[1] - 1], q];
        rerouted.extend_from_slice(&lines[c][1..]);
        lines[c] = prune_polyline(&rerouted);
        v = Some(i);
    }
    let v = v.expect("vertical child fixed above") + 1;
    let root = positions[0];

    // subtree membership: top-level child index (1-based) of every node
    let mut top = vec![0usize; t.len()];
    for u in 1..t.len() {
        let p = t.parent(u).unwrap();
        top[u] = if p == 0 {
            cs.iter().position(|&c| c == u).unwrap() + 1
        } else {
            top[p]
        };
    }
    // lowest point in column X of each child's extended drawing
    let mut lowest: Vec<Option<Frac>> = vec![None; cs.len() + 1];
    let mut note = |i: usize, f: Frac| {
        if lowest[i].is_none_or(|l| frac_lt(f, l)) {
            lowest[i] = Some(f);
        }
    };
    for u in 1..t.len() {
        let i = top[u];
        if positions[u][0] == x {
            note(i, (positions[u][1] as i128, 1));
        }
        for s in lines[u].windows(2) {
            let (a, b) = (s[0], s[1]);
            if x < a[0].min(b[0]) || x > a[0].max(b[0]) {
                continue;
            }
            if a[0] == b[0] {
                for p in [a, b] {
                    if p != root {
                        note(i, (p[1] as i128, 1));
                    }
                }
            } else {
                let dxs = (b[0] - a[0]) as i128;
                let num = a[1] as i128 * dxs + (b[1] - a[1]) as i128 * (x - a[0]) as i128;
                let f = if dxs < 0 { (-num, -dxs) } else { (num, dxs) };
                let at_root = f.0 == root[1] as i128 * f.1;
                if !at_root {
                    note(i, f);
                }
            }
        }
    }
    let big: BTreeSet<usize> = (1..=cs.len()).filter(|&i| lowest[i].is_some()).collect();
    let mut order: Vec<usize> = big.iter().copied().collect();
    order.sort_by(|&a, &b| {
        let (fa, fb) = (lowest[a].unwrap(), lowest[b].unwrap());
        (fa.0 * fb.1).cmp(&(fb.0 * fa.1))
    });
    let pi = order
        .iter()
        .enumerate()
        .map(|(k, &i)| (i, width.saturating_sub(k as u32)))
        .collect();
    Ok(Extraction::Witness(RankWitness {
        width,
        x: x as u32,
        v,
        big,
        pi,
    }))
}

/// Re-labels the children of every node in the left-to-right order realized
/// by the drawing. Returns the reordered tree and the drawing with node ids
/// renumbered to match; the drawing must already fit the tree structurally.
pub fn realized_order(t: &Tree, d: &Drawing) -> Result<(Tree, Drawing), VerifyError> {
    let into = check_structure(t, d)?;
    let pruned = d.pruned();
    let mut lists: Vec<Vec<usize>> = Vec::with_capacity(t.len());
    for u in 0..t.len() {
        let mut cs = t.children(u).to_vec();
        cs.sort_by(|&a, &b| {
            let dir = |c: NodeId| {
                let p = &pruned.edges[into[c]].points;
                [p[1][0] - p[0][0], p[1][1] - p[0][1]]
            };
            direction_cmp(dir(a), dir(b))
        });
        lists.push(cs);
    }
    let labels: Vec<Option<String>> = (0..t.len()).map(|u| t.label(u).map(String::from)).collect();
    let (nt, map) = Tree::from_child_lists(0, &lists, &labels)
        .map_err(|e| VerifyError::Mismatch(e.to_string()))?;
    let mut positions = vec![[0, 0]; t.len()];
    for (old, &new) in map.iter().enumerate() {
        positions[new] = d.positions[old];
    }
    let mut edges: Vec<Edge> = d
        .edges
        .iter()
        .map(|e| Edge {
            from: map[e.from],
            to: map[e.to],
            points: e.points.clone(),
        })
        .collect();
    edges.sort_by_key(|e| e.to);
    Ok((
        nt,
        Drawing {
            mode: d.mode,
            positions,
            edges,
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::layout::{draw_ordered, draw_unordered, Mode};
    use crate::rank::{rank, validate_rank_witness};
    use crate::tree::*;
    use crate::width::rooted_pathwidth;

    const STRICT_STRAIGHT: Require = Require {
        planar: true,
        upward: true,
        strictly_upward: true,
        order_preserving: false,
        straight_line: true,
    };
    const STRICT_ORDERED: Require = Require {
        planar: true,
        upward: true,
        strictly_upward: true,
        order_preserving: true,
        straight_line: false,
    };

    fn drawing(points: &[(NodeId, Point)], edges: &[(NodeId, NodeId, &[Point])]) -> Drawing {
        Drawing {
            mode: None,
            positions: points.iter().map(|&(_, p)| p).collect(),
            edges: edges
                .iter()
                .map(|&(from, to, pts)| Edge {
                    from,
                    to,
                    points: pts.to_vec(),
                })
                .collect(),
        }
    }

    #[test]
    fn require_parses_flag_lists() {
        let r: Require = "planar, strictly_upward".parse().unwrap();
        assert!(r.planar && r.strictly_upward && !r.upward);
        assert_eq!("".parse::<Require>().unwrap(), Require::NONE);
        assert!("planer".parse::<Require>().is_err());
    }

    #[test]
    fn unordered_binary_passes() {
        let t = gen_complete_binary(2).unwrap();
        let d = draw_unordered(&t, &rooted_pathwidth(&t));
        let r = check_drawing(&t, &d, STRICT_STRAIGHT).unwrap();
        assert!(r.planar && r.upward && r.strictly_upward && r.straight_line);
        assert!(r.order_preserving);
        assert_eq!(r.width, 2);
        assert!(r.violations.is_empty());
    }

    #[test]
    fn swapped_siblings_break_order() {
        let t = gen_complete_binary(2).unwrap();
        let mut d = draw_unordered(&t, &rooted_pathwidth(&t));
        let (a, b) = (d.positions[1], d.positions[2]);
        d.positions[1] = [b[0], a[1]];
        d.positions[2] = [a[0], b[1]];
        for e in d.edges.iter_mut() {
            let last = e.points.len() - 1;
            e.points[last] = d.positions[e.to];
        }
        let r = check_drawing(
            &t,
            &d,
            Require {
                order_preserving: true,
                ..Require::NONE
            },
        )
        .unwrap();
        assert!(!r.order_preserving);
        assert_eq!(r.violations[0].kind, ViolationKind::OrderViolated);
    }

    #[test]
    fn single_node_is_valid() {
        let t = Tree::single();
        let d = draw_unordered(&t, &rooted_pathwidth(&t));
        let r = check_drawing(&t, &d, STRICT_STRAIGHT).unwrap();
        assert!(r.planar && r.strictly_upward);
        assert_eq!((r.width, r.height), (1, 1));
        assert_eq!(
            extract_rank_witness(&t, &d).unwrap(),
            Extraction::SingleNode
        );
    }

    #[test]
    fn crossing_edges_are_detected() {
        let t = parse_tree("(()())").unwrap();
        let d = drawing(
            &[(0, [2, 3]), (1, [3, 1]), (2, [1, 1])],
            &[(0, 1, &[[2, 3], [3, 1]]), (0, 2, &[[2, 3], [1, 1]])],
        );
        let r = check_drawing(&t, &d, STRICT_ORDERED).unwrap();
        assert!(r.planar);
        assert!(!r.order_preserving);

        let t = parse_tree("((())())").unwrap();
        // edge 0->3 crosses edge 1->2
        let d = drawing(
            &[(0, [2, 4]), (1, [1, 3]), (2, [3, 1]), (3, [3, 3])],
            &[
                (0, 1, &[[2, 4], [1, 3]]),
                (1, 2, &[[1, 3], [3, 1]]),
                (0, 3, &[[2, 4], [2, 2], [3, 3]]),
            ],
        );
        let r = check_drawing(
            &t,
            &d,
            Require {
                planar: true,
                upward: true,
                ..Require::NONE
            },
        )
        .unwrap();
        assert!(!r.planar);
        assert!(!r.upward);
        assert!(r
            .violations
            .iter()
            .any(|v| v.kind == ViolationKind::Crossing));
    }

    #[test]
    fn node_on_edge_and_overlap_are_detected() {
        let t = parse_tree("(()())").unwrap();
        // child 1 sits on the vertical edge to child 2
        let d = drawing(
            &[(0, [1, 3]), (1, [1, 2]), (2, [1, 1])],
            &[(0, 1, &[[1, 3], [1, 2]]), (0, 2, &[[1, 3], [1, 1]])],
        );
        let r = check_drawing(&t, &d, STRICT_ORDERED).unwrap();
        assert!(!r.planar);
        assert!(r
            .violations
            .iter()
            .any(|v| v.kind == ViolationKind::NodeOnEdge));
        assert!(r
            .violations
            .iter()
            .any(|v| v.kind == ViolationKind::Crossing));
    }

    #[test]
    fn horizontal_segments_are_upward_but_not_strict() {
        let t = parse_tree("(())").unwrap();
        let d = drawing(
            &[(0, [1, 2]), (1, [2, 1])],
            &[(0, 1, &[[1, 2], [2, 2], [2, 1]])],
        );
        let r = check_drawing(&t, &d, STRICT_ORDERED).unwrap();
        assert!(r.upward && !r.strictly_upward && r.planar);
        assert_eq!(r.max_bends, 1);
    }

    #[test]
    fn mismatches_are_errors() {
        let t = parse_tree("(()())").unwrap();
        let d = draw_unordered(&Tree::single(), &rooted_pathwidth(&Tree::single()));
        assert!(matches!(
            check_drawing(&t, &d, Require::NONE),
            Err(VerifyError::Mismatch(_))
        ));
        let mut d = draw_unordered(&t, &rooted_pathwidth(&t));
        d.edges[0].points[0] = [5, 5];
        assert!(check_drawing(&t, &d, Require::NONE).is_err());
    }

    #[test]
    fn ordered_drawings_verify_and_certify() {
        for seed in 0..25 {
            let t = gen_random_tree(70, seed, None).unwrap();
            let ann = rank(&t);
            let d = draw_ordered(&t, &ann);
            let r = check_drawing(&t, &d, STRICT_ORDERED).unwrap();
            assert!(r.violations.is_empty(), "seed {seed}: {:?}", r.violations);
            let Extraction::Witness(w) = extract_rank_witness(&t, &d).unwrap() else {
                panic!("expected a witness");
            };
            assert!(w.x == 1 || w.x == w.width);
            assert_eq!(validate_rank_witness(&ann.child_ranks(&t, 0), &w), vec![]);
        }
    }

    #[test]
    fn extraction_with_interior_root() {
        // width 3, root in column 2, children ranks [1,1,2]
        let t = parse_tree("(()()(()()))").unwrap();
        let d = drawing(
            &[
                (0, [2, 4]),
                (1, [1, 3]),
                (2, [2, 3]),
                (3, [3, 3]),
                (4, [2, 1]),
                (5, [3, 1]),
            ],
            &[
                (0, 1, &[[2, 4], [1, 3]]),
                (0, 2, &[[2, 4], [2, 3]]),
                (0, 3, &[[2, 4], [3, 3]]),
                (3, 4, &[[3, 3], [2, 1]]),
                (3, 5, &[[3, 3], [3, 1]]),
            ],
        );
        let r = check_drawing(&t, &d, STRICT_ORDERED).unwrap();
        assert!(r.violations.is_empty(), "{:?}", r.violations);
        let Extraction::Witness(w) = extract_rank_witness(&t, &d).unwrap() else {
            panic!("expected a witness");
        };
        assert_eq!((w.width, w.x), (3, 2));
        let ranks = rank(&t).child_ranks(&t, 0);
        assert_eq!(validate_rank_witness(&ranks, &w), vec![]);
    }

    #[test]
    fn extraction_reroutes_when_no_edge_is_vertical() {
        let t = parse_tree("(()())").unwrap();
        let d = drawing(
            &[(0, [2, 2]), (1, [1, 1]), (2, [3, 1])],
            &[(0, 1, &[[2, 2], [1, 1]]), (0, 2, &[[2, 2], [3, 1]])],
        );
        let Extraction::Witness(w) = extract_rank_witness(&t, &d).unwrap() else {
            panic!("expected a witness");
        };
        assert_eq!((w.x, w.v), (2, 1));
        assert_eq!(validate_rank_witness(&[1, 1], &w), vec![]);
    }

    #[test]
    fn unordered_drawings_certify_in_realized_order() {
        for seed in 0..20 {
            let t = gen_random_tree(60, seed, None).unwrap();
            let d = draw_unordered(&t, &rooted_pathwidth(&t));
            let (rt, rd) = realized_order(&t, &d).unwrap();
            let r = check_drawing(&rt, &rd, STRICT_ORDERED).unwrap();
            assert!(r.violations.is_empty());
            assert_eq!(rd.mode, Some(Mode::Unordered));
            let Extraction::Witness(w) = extract_rank_witness(&rt, &rd).unwrap() else {
                panic!("expected a witness");
            };
            let ranks = rank(&rt).child_ranks(&rt, 0);
            assert_eq!(validate_rank_witness(&ranks, &w), vec![]);
        }
    }
}
