//! Drawing constructions: straight-line drawings of width equal to the rooted
//! pathwidth, and order-preserving poly-line drawings of width equal to the
//! rank (three bends per edge, or one bend per edge after straightening).
//!
//! Coordinates are integral. `x` is the column (1-based after
//! normalization); `y` grows upward, so the root has the largest `y`.

use std::cmp::Reverse;
use std::collections::{BTreeMap, BinaryHeap};
use std::fmt;
use std::str::FromStr;

use serde::de::Error as _;
use serde::ser::{SerializeMap, SerializeStruct};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::rank::{RankAnnotation, Side};
use crate::tree::{NodeId, Tree};
use crate::width::RpwAnnotation;

pub type Point = [i64; 2];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Unordered,
    Ordered3,
    Ordered1,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Unordered => "unordered",
            Mode::Ordered3 => "ordered3",
            Mode::Ordered1 => "ordered1",
        })
    }
}

impl FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "unordered" => Ok(Mode::Unordered),
            "ordered3" => Ok(Mode::Ordered3),
            "ordered1" => Ok(Mode::Ordered1),
            other => Err(format!("unknown drawing mode `{other}`")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Edge {
    pub from: NodeId,
    pub to: NodeId,
    pub points: Vec<Point>,
}

impl Edge {
    pub fn bends(&self) -> usize {
        prune_polyline(&self.points).len().saturating_sub(2)
    }
}

/// Node positions indexed by node id, plus one poly-line per tree edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Drawing {
    pub mode: Option<Mode>,
    pub positions: Vec<Point>,
    pub edges: Vec<Edge>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RootCorner {
    TopLeft,
    TopRight,
    Interior,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LayoutStats {
    pub width: i64,
    pub height: i64,
    pub max_bends_per_edge: usize,
    pub root_corner: RootCorner,
}

impl Drawing {
    /// Smallest and largest coordinates over nodes and bends:
    /// `(xmin, xmax, ymin, ymax)`.
    pub fn bounds(&self) -> (i64, i64, i64, i64) {
        let mut b = (i64::MAX, i64::MIN, i64::MAX, i64::MIN);
        let all = self
            .positions
            .iter()
            .chain(self.edges.iter().flat_map(|e| e.points.iter()));
        for &[x, y] in all {
            b = (b.0.min(x), b.1.max(x), b.2.min(y), b.3.max(y));
        }
        b
    }

    pub fn width(&self) -> i64 {
        let (x0, x1, _, _) = self.bounds();
        x1 - x0 + 1
    }

    pub fn height(&self) -> i64 {
        let (_, _, y0, y1) = self.bounds();
        y1 - y0 + 1
    }

    pub fn max_bends(&self) -> usize {
        self.edges.iter().map(Edge::bends).max().unwrap_or(0)
    }

    pub fn stats(&self) -> LayoutStats {
        let (x0, x1, _, _) = self.bounds();
        let rx = self.positions[0][0];
        let root_corner = if rx == x0 {
            RootCorner::TopLeft
        } else if rx == x1 {
            RootCorner::TopRight
        } else {
            RootCorner::Interior
        };
        LayoutStats {
            width: self.width(),
            height: self.height(),
            max_bends_per_edge: self.max_bends(),
            root_corner,
        }
    }

    /// Copy with duplicate and collinear interior points removed.
    pub fn pruned(&self) -> Drawing {
        Drawing {
            mode: self.mode,
            positions: self.positions.clone(),
            edges: self
                .edges
                .iter()
                .map(|e| Edge {
                    from: e.from,
                    to: e.to,
                    points: prune_polyline(&e.points),
                })
                .collect(),
        }
    }

    /// Edge ending at each node (`None` for the root or missing edges).
    pub fn edge_into(&self) -> Vec<Option<usize>> {
        let mut into = vec![None; self.positions.len()];
        for (i, e) in self.edges.iter().enumerate() {
            if e.to < into.len() {
                into[e.to] = Some(i);
            }
        }
        into
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(self).expect("drawings always serialize")
    }

    pub fn from_json_str(s: &str) -> Result<Drawing, serde_json::Error> {
        serde_json::from_str(s)
    }
}

impl Serialize for Drawing {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        struct Positions<'a>(&'a [Point]);
        impl Serialize for Positions<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
                let mut m = s.serialize_map(Some(self.0.len()))?;
                for (i, p) in self.0.iter().enumerate() {
                    m.serialize_entry(&i.to_string(), p)?;
                }
                m.end()
            }
        }
        let mut st = s.serialize_struct("Drawing", 3)?;
        match self.mode {
            Some(m) => st.serialize_field("mode", &m)?,
            None => st.skip_field("mode")?,
        }
        st.serialize_field("positions", &Positions(&self.positions))?;
        st.serialize_field("edges", &self.edges)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for Drawing {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            #[serde(default)]
            mode: Option<Mode>,
            positions: BTreeMap<String, Point>,
            edges: Vec<Edge>,
        }
        let raw = Raw::deserialize(de)?;
        let mut by_id = BTreeMap::new();
        for (k, p) in raw.positions {
            let id: usize = k
                .trim()
                .parse()
                .map_err(|_| D::Error::custom(format!("position key `{k}` is not a node id")))?;
            if by_id.insert(id, p).is_some() {
                return Err(D::Error::custom(format!("node {id} positioned twice")));
            }
        }
        if !by_id.keys().copied().eq(0..by_id.len()) {
            return Err(D::Error::custom("position ids must be 0..n-1"));
        }
        Ok(Drawing {
            mode: raw.mode,
            positions: by_id.into_values().collect(),
            edges: raw.edges,
        })
    }
}

/// Removes repeated points and interior points lying on the straight
/// continuation of their neighbours.
pub fn prune_polyline(points: &[Point]) -> Vec<Point> {
    let mut out: Vec<Point> = Vec::with_capacity(points.len());
    for &p in points {
        if out.last() == Some(&p) {
            continue;
        }
        while out.len() >= 2 {
            let a = out[out.len() - 2];
            let b = out[out.len() - 1];
            let (ux, uy) = (b[0] - a[0], b[1] - a[1]);
            let (vx, vy) = (p[0] - b[0], p[1] - b[1]);
            let cross = ux as i128 * vy as i128 - uy as i128 * vx as i128;
            let dot = ux as i128 * vx as i128 + uy as i128 * vy as i128;
            if cross == 0 && dot > 0 {
                out.pop();
            } else {
                break;
            }
        }
        out.push(p);
    }
    out
}

/// Straight-line drawing of width `rpw(T)` and height `n`: the heavy child's
/// subtree goes last (bottom) in the parent's column, all other subtrees are
/// stacked above it one column to the right.
pub fn draw_unordered(t: &Tree, ann: &RpwAnnotation) -> Drawing {
    let n = t.len();
    let mut x = vec![1i64; n];
    let mut row = vec![0i64; n];
    let mut next_row = 0;
    let mut stack = vec![0];
    while let Some(u) = stack.pop() {
        row[u] = next_row;
        next_row += 1;
        let heavy = ann.heavy_child[u];
        if let Some(h) = heavy {
            x[h] = x[u];
            stack.push(h);
        }
        for &c in t.children(u) {
            if Some(c) != heavy {
                x[c] = x[u] + 1;
                stack.push(c);
            }
        }
    }
    let positions: Vec<Point> = (0..n).map(|u| [x[u], n as i64 - row[u]]).collect();
    let edges = (1..n)
        .map(|c| {
            let p = t.parent(c).expect("non-root node has a parent");
            Edge {
                from: p,
                to: c,
                points: vec![positions[p], positions[c]],
            }
        })
        .collect();
    Drawing {
        mode: Some(Mode::Unordered),
        positions,
        edges,
    }
}

/// Order-preserving strictly-upward drawing of width `R(T)` with at most
/// three bends per edge and height at most `2n - 1`, built from the corner
/// witnesses stored in `ann`.
///
/// Every subtree is first laid out in its own frame (columns `1..=R`,
/// rows growing downward from the subtree root at row 0); frames are then
/// composed top-down.
pub fn draw_ordered(t: &Tree, ann: &RankAnnotation) -> Drawing {
    let n = t.len();
    let mut height = vec![1i64; n];
    let mut root_x = vec![1i64; n];
    let mut offset = vec![[0i64; 2]; n];
    // edge into each node, in the parent's frame as (column, row)
    let mut local: Vec<Vec<Point>> = vec![Vec::new(); n];
    for u in (0..n).rev() {
        let Some(cw) = &ann.corner[u] else { continue };
        let cs = t.children(u);
        let d = cs.len();
        let w_u = ann.rank[u] as i64;
        let right = cw.side == Side::Right;
        // a right witness is handled as a left witness in mirrored columns
        let mx = |x: i64| if right { w_u + 1 - x } else { x };
        let child = |k: usize| if right { cs[d - k] } else { cs[k - 1] };
        let mirrored = |i: usize| if right { d + 1 - i } else { i };
        let frame = |c: NodeId, left_col: i64, top: i64| -> Point {
            let r = ann.rank[c] as i64;
            let ox = if right {
                w_u - left_col - r + 1
            } else {
                left_col - 1
            };
            [ox, top]
        };
        let mut level = vec![None; d + 1];
        for (&w, &i) in &cw.sigma {
            level[mirrored(i)] = Some(w as i64);
        }
        let root_pt = [mx(1), 0];
        let mut cur = 0i64;
        for k in (2..=d).rev() {
            let c = child(k);
            let b = cur + 1;
            match level[k] {
                Some(w) => {
                    // second bend already one row down, inside the reserved ray
                    local[c] = vec![root_pt, [mx(2), b], [mx(w), b + 1]];
                    cur = b;
                }
                None => {
                    let off = frame(c, 2, b + 1);
                    offset[c] = off;
                    local[c] = vec![root_pt, [mx(2), b], [root_x[c] + off[0], b + 1]];
                    cur = b + height[c];
                }
            }
        }
        let c1 = child(1);
        if level[1].is_some() {
            local[c1] = vec![root_pt];
        } else {
            let off = frame(c1, 1, cur + 1);
            offset[c1] = off;
            local[c1] = vec![root_pt, [mx(1), cur], [root_x[c1] + off[0], cur + 1]];
            cur += height[c1];
        }
        let mut top = cur + 1;
        for (&w, &i) in &cw.sigma {
            let k = mirrored(i);
            let c = child(k);
            let off = frame(c, 1, top);
            offset[c] = off;
            let ray = if k == 1 { 1 } else { w as i64 };
            local[c].push([mx(ray), top - 1]);
            local[c].push([root_x[c] + off[0], top]);
            top += height[c];
        }
        for &c in cs {
            local[c].dedup();
        }
        height[u] = top;
        root_x[u] = mx(1);
    }

    let total = height[0];
    let mut shift = vec![[0i64; 2]; n];
    let mut positions = vec![[0i64; 2]; n];
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    let to_global = |s: Point, p: Point| [p[0] + s[0], total - (p[1] + s[1])];
    for u in 0..n {
        positions[u] = to_global(shift[u], [root_x[u], 0]);
        for &c in t.children(u) {
            shift[c] = [shift[u][0] + offset[c][0], shift[u][1] + offset[c][1]];
        }
    }
    for c in 1..n {
        let p = t.parent(c).expect("non-root node has a parent");
        let points = local[c].iter().map(|&q| to_global(shift[p], q)).collect();
        edges.push(Edge {
            from: p,
            to: c,
            points,
        });
    }
    Drawing {
        mode: Some(Mode::Ordered3),
        positions,
        edges,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LayoutError {
    #[error("bend reduction needs an ordered3 drawing, got {0}")]
    WrongMode(String),
    #[error("drawing does not match the tree: {0}")]
    Mismatch(String),
    #[error("column order constraints are cyclic; the input drawing is not planar")]
    Cyclic,
    #[error("coordinates overflow 64-bit integers")]
    Overflow,
}

/// Exact rational `num / den` with `den > 0`.
type Frac = (i128, i128);

fn frac_cmp(a: Frac, b: Frac) -> std::cmp::Ordering {
    (a.0 * b.1).cmp(&(b.0 * a.1))
}

fn normalize(num: i128, den: i128) -> Frac {
    if den < 0 {
        (-num, -den)
    } else {
        (num, den)
    }
}

/// Largest integer strictly below `f`.
fn floor_below(f: Frac) -> i128 {
    let q = f.0.div_euclid(f.1);
    if f.0.rem_euclid(f.1) == 0 {
        q - 1
    } else {
        q
    }
}

fn ck(v: Option<i128>) -> Result<i128, LayoutError> {
    v.ok_or(LayoutError::Overflow)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Elem {
    Vertex(usize),
    /// The x-monotone piece ending at the given vertex.
    Piece(usize),
}

impl Elem {
    fn owner(self) -> usize {
        match self {
            Elem::Vertex(v) | Elem::Piece(v) => v,
        }
    }
}

/// Turns an ordered3 drawing into one with at most one bend per edge while
/// keeping every x-coordinate. Each edge is cut into x-monotone pieces at its
/// turning column; pieces become straight segments and y-coordinates are
/// re-assigned top-down so that the vertical order of all elements in every
/// column is preserved.
pub fn reduce_bends(d: &Drawing, t: &Tree) -> Result<Drawing, LayoutError> {
    if d.mode != Some(Mode::Ordered3) {
        let got = d.mode.map_or("no mode".to_string(), |m| m.to_string());
        return Err(LayoutError::WrongMode(got));
    }
    let n = t.len();
    if d.positions.len() != n {
        return Err(LayoutError::Mismatch(format!(
            "{} positions for {n} nodes",
            d.positions.len()
        )));
    }
    let into = d.edge_into();

    // vertices: tree nodes followed by turning points
    let mut pos: Vec<Point> = d.positions.clone();
    let mut up: Vec<Option<usize>> = vec![None; n];
    let mut piece: Vec<Vec<Point>> = vec![Vec::new(); n];
    // vertex chain of each edge, from parent to child
    let mut chain: Vec<Vec<usize>> = vec![Vec::new(); n];
    for c in 1..n {
        let p = t.parent(c).expect("non-root node has a parent");
        let e = into[c]
            .map(|i| &d.edges[i])
            .filter(|e| e.from == p)
            .ok_or_else(|| LayoutError::Mismatch(format!("missing edge {p} -> {c}")))?;
        let pts = prune_polyline(&e.points);
        if pts.first() != Some(&pos[p]) || pts.last() != Some(&pos[c]) {
            return Err(LayoutError::Mismatch(format!(
                "edge {p} -> {c} does not join its endpoints"
            )));
        }
        let mut cuts = Vec::new();
        let mut dir = 0;
        for i in 0..pts.len() - 1 {
            let s = (pts[i + 1][0] - pts[i][0]).signum();
            if s != 0 {
                if dir != 0 && s != dir {
                    cuts.push(i);
                }
                dir = s;
            }
        }
        let mut prev_vertex = p;
        let mut start = 0;
        chain[c].push(p);
        for &cut in &cuts {
            let v = pos.len();
            pos.push(pts[cut]);
            up.push(Some(prev_vertex));
            piece.push(pts[start..=cut].to_vec());
            chain[c].push(v);
            prev_vertex = v;
            start = cut;
        }
        up[c] = Some(prev_vertex);
        piece[c] = pts[start..].to_vec();
        chain[c].push(c);
    }
    let m = pos.len();

    // vertical order of elements in every column of the input drawing
    let (x0, x1, _, _) = d.bounds();
    let width = (x1 - x0 + 1) as usize;
    let mut columns: Vec<Vec<(Elem, Frac, Frac)>> = vec![Vec::new(); width];
    for (v, p) in pos.iter().enumerate() {
        let y = (p[1] as i128, 1);
        columns[(p[0] - x0) as usize].push((Elem::Vertex(v), y, y));
    }
    for v in 1..m {
        let pts = &piece[v];
        let (a, b) = (pts[0][0], pts[pts.len() - 1][0]);
        for k in a.min(b) + 1..a.max(b) {
            let mut lo: Option<Frac> = None;
            let mut hi: Option<Frac> = None;
            let mut add = |f: Frac| {
                if lo.is_none_or(|l| frac_cmp(f, l).is_lt()) {
                    lo = Some(f);
                }
                if hi.is_none_or(|h| frac_cmp(f, h).is_gt()) {
                    hi = Some(f);
                }
            };
            for s in pts.windows(2) {
                let ([xa, ya], [xb, yb]) = (s[0], s[1]);
                if k < xa.min(xb) || k > xa.max(xb) {
                    continue;
                }
                if xa == xb {
                    add((ya as i128, 1));
                    add((yb as i128, 1));
                } else {
                    let dx = (xb - xa) as i128;
                    let num = ya as i128 * dx + (yb - ya) as i128 * (k - xa) as i128;
                    add(normalize(num, dx));
                }
            }
            let (lo, hi) = (lo.expect("piece crosses column"), hi.unwrap());
            columns[(k - x0) as usize].push((Elem::Piece(v), lo, hi));
        }
    }

    let mut succ: Vec<Vec<usize>> = vec![Vec::new(); m];
    let mut indeg = vec![0usize; m];
    let mut link = |a: usize, b: usize, succ: &mut Vec<Vec<usize>>| {
        if a != b {
            succ[a].push(b);
            indeg[b] += 1;
        }
    };
    for v in 1..m {
        link(up[v].expect("non-root vertex"), v, &mut succ);
    }
    // element directly above each piece in each column it crosses, and above each vertex
    let mut above_piece: Vec<Vec<(i64, Option<Elem>)>> = vec![Vec::new(); m];
    let mut above_vertex: Vec<Option<Elem>> = vec![None; m];
    for (ci, col) in columns.iter_mut().enumerate() {
        col.sort_by(|a, b| frac_cmp(b.2, a.2).then(frac_cmp(b.1, a.1)));
        let k = x0 + ci as i64;
        for i in 0..col.len() {
            let above = (i > 0).then(|| col[i - 1].0);
            match col[i].0 {
                Elem::Vertex(v) => above_vertex[v] = above,
                Elem::Piece(v) => above_piece[v].push((k, above)),
            }
            if let Some(a) = above {
                link(a.owner(), col[i].0.owner(), &mut succ);
            }
        }
    }

    let mut y: Vec<Option<i128>> = vec![None; m];
    let value = |e: Elem, k: i64, y: &[Option<i128>]| -> Result<Frac, LayoutError> {
        match e {
            Elem::Vertex(w) => Ok((y[w].expect("placed before"), 1)),
            Elem::Piece(w) => {
                let u = up[w].expect("piece has an upper end");
                let (yu, yw) = (y[u].expect("placed before"), y[w].expect("placed before"));
                let dx = (pos[w][0] - pos[u][0]) as i128;
                let num = ck(ck(yu.checked_mul(dx))?
                    .checked_add(ck((yw - yu).checked_mul((k - pos[u][0]) as i128))?))?;
                Ok(normalize(num, dx))
            }
        }
    };
    let mut heap: BinaryHeap<Reverse<usize>> =
        (0..m).filter(|&v| indeg[v] == 0).map(Reverse).collect();
    let mut placed = 0;
    while let Some(Reverse(v)) = heap.pop() {
        placed += 1;
        match up[v] {
            None => y[v] = Some(0),
            Some(u) => {
                let yu = y[u].expect("parent placed first");
                let (xu, xv) = (pos[u][0] as i128, pos[v][0] as i128);
                let mut bound = ck(yu.checked_sub(1))?;
                if let Some(a) = above_vertex[v] {
                    bound = bound.min(floor_below(value(a, pos[v][0], &y)?));
                }
                for &(k, above) in &above_piece[v] {
                    let Some(a) = above else { continue };
                    let (an, ad) = value(a, k, &y)?;
                    // y_v < y_u + (a - y_u) (x_v - x_u) / (k - x_u)
                    let dk = k as i128 - xu;
                    let num =
                        ck(ck(ck(yu.checked_mul(ad))?.checked_mul(dk))?
                            .checked_add(ck(
                                ck(an.checked_sub(ck(yu.checked_mul(ad))?))?.checked_mul(xv - xu)
                            )?))?;
                    let den = ck(ad.checked_mul(dk))?;
                    bound = bound.min(floor_below(normalize(num, den)));
                }
                y[v] = Some(bound);
            }
        }
        for &s in &succ[v] {
            indeg[s] -= 1;
            if indeg[s] == 0 {
                heap.push(Reverse(s));
            }
        }
    }
    if placed < m {
        return Err(LayoutError::Cyclic);
    }

    let ymin = y.iter().map(|v| v.unwrap()).min().unwrap_or(0);
    let mut new_pos = Vec::with_capacity(m);
    for v in 0..m {
        let yy = i64::try_from(y[v].unwrap() - ymin + 1).map_err(|_| LayoutError::Overflow)?;
        new_pos.push([pos[v][0], yy]);
    }
    let edges = (1..n)
        .map(|c| Edge {
            from: chain[c][0],
            to: c,
            points: prune_polyline(&chain[c].iter().map(|&v| new_pos[v]).collect::<Vec<_>>()),
        })
        .collect();
    Ok(Drawing {
        mode: Some(Mode::Ordered1),
        positions: new_pos[..n].to_vec(),
        edges,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rank::rank;
    use crate::tree::*;
    use crate::width::rooted_pathwidth;

    fn ordered(s: &str) -> (Tree, Drawing) {
        let t = parse_tree(s).unwrap();
        let d = draw_ordered(&t, &rank(&t));
        (t, d)
    }

    #[test]
    fn prune_removes_duplicates_and_straight_points() {
        let p = prune_polyline(&[[1, 5], [1, 5], [1, 4], [1, 3], [2, 2], [3, 1]]);
        assert_eq!(p, vec![[1, 5], [1, 3], [3, 1]]);
        // a reversal is kept
        let p = prune_polyline(&[[1, 3], [2, 3], [1, 3]]);
        assert_eq!(p.len(), 3);
    }

    #[test]
    fn unordered_examples() {
        let t = Tree::single();
        let d = draw_unordered(&t, &rooted_pathwidth(&t));
        assert_eq!(d.positions, vec![[1, 1]]);
        assert_eq!((d.width(), d.height()), (1, 1));

        let t = gen_path(4).unwrap();
        let d = draw_unordered(&t, &rooted_pathwidth(&t));
        assert!(d.positions.iter().all(|p| p[0] == 1));
        assert_eq!((d.width(), d.height()), (1, 4));

        let t = gen_complete_binary(2).unwrap();
        let d = draw_unordered(&t, &rooted_pathwidth(&t));
        assert_eq!((d.width(), d.height()), (2, 3));
        assert_eq!(d.stats().root_corner, RootCorner::TopLeft);
    }

    #[test]
    fn unordered_width_and_height_match_parameters() {
        for seed in 0..30 {
            let t = gen_random_tree(80, seed, None).unwrap();
            let ann = rooted_pathwidth(&t);
            let d = draw_unordered(&t, &ann);
            assert_eq!(d.width(), ann.root() as i64);
            assert_eq!(d.height(), t.len() as i64);
            assert_eq!(d.max_bends(), 0);
        }
    }

    #[test]
    fn ordered_examples() {
        let (_, d) = ordered("()");
        assert_eq!(d.width(), 1);
        let (_, d) = ordered("(()()(()()))");
        assert_eq!(d.width(), 2);
        assert_eq!(d.stats().root_corner, RootCorner::TopRight);
        let t = gen_quintary_family(3).unwrap();
        let d = draw_ordered(&t, &rank(&t));
        assert_eq!(d.width(), 5);
        assert!(d.height() < 2 * t.len() as i64);
    }

    #[test]
    fn ordered_respects_width_height_and_bends() {
        for seed in 0..30 {
            let t = gen_random_tree(90, seed, None).unwrap();
            let ann = rank(&t);
            let d = draw_ordered(&t, &ann);
            assert_eq!(d.width(), ann.root() as i64);
            assert!(d.height() < 2 * t.len() as i64);
            assert!(d.max_bends() <= 3);
            let (x0, x1, _, y1) = d.bounds();
            assert_eq!(x0, 1);
            assert!(d.positions[0][0] == 1 || d.positions[0][0] == x1);
            assert!(d.positions[1..].iter().all(|p| p[1] < y1));
        }
    }

    #[test]
    fn reduce_bends_examples() {
        let (t, d) = ordered("((((()))))");
        let r = reduce_bends(&d, &t).unwrap();
        assert_eq!(r.max_bends(), 0);
        assert_eq!(r.width(), 1);

        let (t, d) = ordered("(()())");
        let r = reduce_bends(&d, &t).unwrap();
        assert!(r.max_bends() <= 1);
        assert_eq!(r.width(), 2);

        let t = gen_quintary_family(2).unwrap();
        let d = draw_ordered(&t, &rank(&t));
        let r = reduce_bends(&d, &t).unwrap();
        assert_eq!(r.width(), 3);
        assert!(r.max_bends() <= 1);
        assert_eq!(r.mode, Some(Mode::Ordered1));
    }

    #[test]
    fn reduce_bends_rejects_other_modes() {
        let t = gen_complete_binary(2).unwrap();
        let d = draw_unordered(&t, &rooted_pathwidth(&t));
        assert!(matches!(
            reduce_bends(&d, &t),
            Err(LayoutError::WrongMode(_))
        ));
    }

    #[test]
    fn json_round_trip_keeps_numeric_key_order() {
        let t = gen_path(12).unwrap();
        let d = draw_unordered(&t, &rooted_pathwidth(&t));
        let s = d.to_json_string();
        assert!(s.starts_with(r#"{"mode":"unordered","positions":{"0":[1,12],"1":[1,11]"#));
        assert_eq!(Drawing::from_json_str(&s).unwrap(), d);
        assert!(Drawing::from_json_str(r#"{"positions":{"1":[1,1]},"edges":[]}"#).is_err());
    }
}
