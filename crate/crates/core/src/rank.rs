//! The rank of an ordered tree: linear-time computation through the
//! left/right corner tests, plus rank- and corner-witness validation and the
//! transformation that pushes a rank-witness into a corner.
//!
//! Child positions inside witnesses are 1-based (`1..=d`), matching the
//! left-to-right naming `c_1, ..., c_d` of a node's children.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::tree::Tree;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}

/// A left- or right-corner witness: the children `sigma[w]` for
/// `w in w_prime..=width` have rank exactly `w` and appear in increasing
/// (left) or decreasing (right) position order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CornerWitness {
    pub side: Side,
    #[serde(rename = "W")]
    pub width: u32,
    #[serde(rename = "Wprime")]
    pub w_prime: u32,
    pub sigma: BTreeMap<u32, usize>,
}

impl CornerWitness {
    /// Positions of the children declared big.
    pub fn big(&self) -> BTreeSet<usize> {
        self.sigma.values().copied().collect()
    }

    /// The value `w` with `sigma[w] == pos`, if `pos` is big.
    pub fn level_of(&self, pos: usize) -> Option<u32> {
        self.sigma.iter().find(|(_, &p)| p == pos).map(|(&w, _)| w)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankWitness {
    #[serde(rename = "W")]
    pub width: u32,
    #[serde(rename = "X")]
    pub x: u32,
    pub v: usize,
    pub big: BTreeSet<usize>,
    pub pi: BTreeMap<usize, u32>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FailureReason {
    /// Some child has rank above the target width.
    RankAboveTarget,
    /// The descending rank chain is blocked by a child of rank at least `w`.
    ChainBlocked,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Error)]
#[error("corner test failed at child {index} (w = {w}): {reason:?}")]
pub struct TestFailure {
    pub index: usize,
    pub w: u32,
    pub reason: FailureReason,
}

/// Ranks for every node plus the corner witness used to certify each
/// internal node's rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankAnnotation {
    pub rank: Vec<u32>,
    pub corner: Vec<Option<CornerWitness>>,
}

impl RankAnnotation {
    pub fn root(&self) -> u32 {
        self.rank[0]
    }

    pub fn child_ranks(&self, t: &Tree, u: usize) -> Vec<u32> {
        t.children(u).iter().map(|&c| self.rank[c]).collect()
    }
}

/// Scans `ranks` right to left. Returns `(w_prime, sigma)` with positions
/// relative to the given order.
fn scan_corner(ranks: &[u32], width: u32) -> Result<(u32, BTreeMap<u32, usize>), TestFailure> {
    assert!(!ranks.is_empty(), "corner tests need at least one child");
    assert!(width >= 1, "target width must be positive");
    let r = |i: usize| ranks[i - 1];
    let mut sigma = BTreeMap::new();
    let Some(mut i) = (1..=ranks.len()).rev().find(|&i| r(i) >= width) else {
        return Ok((width + 1, sigma));
    };
    if r(i) > width {
        return Err(TestFailure {
            index: i,
            w: width,
            reason: FailureReason::RankAboveTarget,
        });
    }
    sigma.insert(width, i);
    let mut w = width;
    i -= 1;
    loop {
        while i > 0 && r(i) + 2 <= w {
            i -= 1;
        }
        if i == 0 {
            return Ok((w, sigma));
        }
        if r(i) >= w {
            return Err(TestFailure {
                index: i,
                w,
                reason: FailureReason::ChainBlocked,
            });
        }
        sigma.insert(w - 1, i);
        w -= 1;
        i -= 1;
    }
}

/// Searches for a left-corner witness of the given width.
pub fn test_left(ranks: &[u32], width: u32) -> Result<CornerWitness, TestFailure> {
    let (w_prime, sigma) = scan_corner(ranks, width)?;
    Ok(CornerWitness {
        side: Side::Left,
        width,
        w_prime,
        sigma,
    })
}

/// Searches for a right-corner witness of the given width.
pub fn test_right(ranks: &[u32], width: u32) -> Result<CornerWitness, TestFailure> {
    let d = ranks.len();
    let reversed: Vec<u32> = ranks.iter().rev().copied().collect();
    match scan_corner(&reversed, width) {
        Ok((w_prime, sigma)) => Ok(CornerWitness {
            side: Side::Right,
            width,
            w_prime,
            sigma: sigma.into_iter().map(|(w, i)| (w, d + 1 - i)).collect(),
        }),
        Err(f) => Err(TestFailure {
            index: d + 1 - f.index,
            ..f
        }),
    }
}

/// Rank and corner witness of a node from its children's ranks.
pub fn rank_from_children(ranks: &[u32]) -> (u32, CornerWitness) {
    let w = *ranks.iter().max().expect("internal node has children");
    if let Ok(cw) = test_left(ranks, w) {
        return (w, cw);
    }
    if let Ok(cw) = test_right(ranks, w) {
        return (w, cw);
    }
    // every child has rank at most w, so the empty left witness works for w + 1
    (
        w + 1,
        CornerWitness {
            side: Side::Left,
            width: w + 1,
            w_prime: w + 2,
            sigma: BTreeMap::new(),
        },
    )
}

/// Ranks of all subtrees, computed bottom-up in time linear in the tree size.
pub fn rank(t: &Tree) -> RankAnnotation {
    let n = t.len();
    let mut rank = vec![1u32; n];
    let mut corner = vec![None; n];
    let mut buf = Vec::new();
    for u in (0..n).rev() {
        let cs = t.children(u);
        if cs.is_empty() {
            continue;
        }
        buf.clear();
        buf.extend(cs.iter().map(|&c| rank[c]));
        let (r, cw) = rank_from_children(&buf);
        rank[u] = r;
        corner[u] = Some(cw);
    }
    RankAnnotation { rank, corner }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RankViolation {
    #[error("X = {x} is outside 1..={width}")]
    XOutOfRange { x: u32, width: u32 },
    #[error("vertical child {v} is outside 1..={d}")]
    VerticalOutOfRange { v: usize, d: usize },
    #[error("vertical child {0} is not big")]
    VerticalNotBig(usize),
    #[error("big child {index} is outside 1..={d}")]
    BigOutOfRange { index: usize, d: usize },
    #[error("R1l: {count} big children left of the vertical child, at most {limit} allowed")]
    TooManyBigLeft { count: usize, limit: i64 },
    #[error("R1r: {count} big children right of the vertical child, at most {limit} allowed")]
    TooManyBigRight { count: usize, limit: i64 },
    #[error("R2l: small child {index} has rank {rank}, limit {limit}")]
    SmallLeftTooHigh { index: usize, rank: u32, limit: i64 },
    #[error("R2r: small child {index} has rank {rank}, limit {limit}")]
    SmallRightTooHigh { index: usize, rank: u32, limit: i64 },
    #[error("R3: big child {0} has no rank bound")]
    BoundMissing(usize),
    #[error("R3: rank bound given for small child {0}")]
    BoundForSmall(usize),
    #[error("R3: bound {bound} of child {index} outside 1..={width}")]
    BoundOutOfRange {
        index: usize,
        bound: u32,
        width: u32,
    },
    #[error("R3: bound {bound} of child {index} is below its rank {rank}")]
    BoundBelowRank { index: usize, bound: u32, rank: u32 },
    #[error("R3: bound {0} used more than once")]
    BoundRepeated(u32),
}

/// Checks every rank condition of `w` against the true child ranks.
pub fn validate_rank_witness(ranks: &[u32], w: &RankWitness) -> Vec<RankViolation> {
    use RankViolation::*;
    let d = ranks.len();
    let mut out = Vec::new();
    if w.x < 1 || w.x > w.width {
        out.push(XOutOfRange {
            x: w.x,
            width: w.width,
        });
    }
    if w.v < 1 || w.v > d {
        out.push(VerticalOutOfRange { v: w.v, d });
    } else if !w.big.contains(&w.v) {
        out.push(VerticalNotBig(w.v));
    }
    for &i in &w.big {
        if i < 1 || i > d {
            out.push(BigOutOfRange { index: i, d });
        }
    }
    if !out.is_empty() {
        return out;
    }
    let (width, x) = (w.width as i64, w.x as i64);
    let left_of_v = w.big.range(..w.v).count();
    let right_of_v = w.big.range(w.v + 1..).count();
    if left_of_v as i64 > x - 1 {
        out.push(TooManyBigLeft {
            count: left_of_v,
            limit: x - 1,
        });
    }
    if right_of_v as i64 > width - x {
        out.push(TooManyBigRight {
            count: right_of_v,
            limit: width - x,
        });
    }
    for i in (1..=d).filter(|i| !w.big.contains(i)) {
        let rank = ranks[i - 1];
        let limit = if i < w.v {
            x - 1 - w.big.range(..i).count() as i64
        } else {
            width - x - w.big.range(i + 1..).count() as i64
        };
        if rank as i64 > limit {
            out.push(if i < w.v {
                SmallLeftTooHigh {
                    index: i,
                    rank,
                    limit,
                }
            } else {
                SmallRightTooHigh {
                    index: i,
                    rank,
                    limit,
                }
            });
        }
    }
    let mut used = BTreeSet::new();
    for &i in &w.big {
        match w.pi.get(&i) {
            None => out.push(BoundMissing(i)),
            Some(&bound) => {
                if bound < 1 || bound > w.width {
                    out.push(BoundOutOfRange {
                        index: i,
                        bound,
                        width: w.width,
                    });
                }
                if bound < ranks[i - 1] {
                    out.push(BoundBelowRank {
                        index: i,
                        bound,
                        rank: ranks[i - 1],
                    });
                }
                if !used.insert(bound) {
                    out.push(BoundRepeated(bound));
                }
            }
        }
    }
    for &i in w.pi.keys() {
        if !w.big.contains(&i) {
            out.push(BoundForSmall(i));
        }
    }
    out
}

/// Greedy rank bounds: big children sorted by rank (descending, ties by
/// position) receive `width, width - 1, ...`. Returns `None` when the ranks
/// are not dominated by a permutation of `1..=width`.
pub fn greedy_rank_bounds(
    ranks: &[u32],
    big: &BTreeSet<usize>,
    width: u32,
) -> Option<BTreeMap<usize, u32>> {
    let mut order: Vec<usize> = big.iter().copied().collect();
    order.sort_by_key(|&i| std::cmp::Reverse(ranks[i - 1]));
    let mut pi = BTreeMap::new();
    for (k, &i) in order.iter().enumerate() {
        let bound = (width as i64) - k as i64;
        if bound < ranks[i - 1] as i64 {
            return None;
        }
        pi.insert(i, bound as u32);
    }
    Some(pi)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CornerViolation {
    #[error("W' = {w_prime} is outside 1..={limit}")]
    WPrimeOutOfRange { w_prime: u32, limit: u32 },
    #[error("sigma must be defined exactly on W'..=W")]
    SigmaDomain,
    #[error("sigma({w}) = {index} is outside 1..={d}")]
    IndexOutOfRange { w: u32, index: usize, d: usize },
    #[error("sigma is not monotone at w = {0}")]
    NotMonotone(u32),
    #[error("C1: child {index} has rank {rank}, expected {w}")]
    WrongRank { w: u32, index: usize, rank: u32 },
    #[error("C2: child {index} in gap {w} has rank {rank} > {limit}")]
    GapTooHigh {
        w: u32,
        index: usize,
        rank: u32,
        limit: i64,
    },
}

/// Checks monotonicity, (C1) and (C2) with the usual sentinels.
pub fn validate_corner_witness(ranks: &[u32], cw: &CornerWitness) -> Vec<CornerViolation> {
    use CornerViolation::*;
    let d = ranks.len();
    let mut out = Vec::new();
    if cw.w_prime < 1 || cw.w_prime > cw.width + 1 {
        out.push(WPrimeOutOfRange {
            w_prime: cw.w_prime,
            limit: cw.width + 1,
        });
        return out;
    }
    if !cw.sigma.keys().copied().eq(cw.w_prime..=cw.width) {
        out.push(SigmaDomain);
        return out;
    }
    for (&w, &i) in &cw.sigma {
        if i < 1 || i > d {
            out.push(IndexOutOfRange { w, index: i, d });
        }
    }
    if !out.is_empty() {
        return out;
    }
    // view a right witness as a left witness of the mirrored sequence
    let pos = |i: usize| match cw.side {
        Side::Left => i,
        Side::Right => d + 1 - i,
    };
    let rank_at = |p: usize| match cw.side {
        Side::Left => ranks[p - 1],
        Side::Right => ranks[d - p],
    };
    let sigma = |w: u32| -> usize {
        if w + 1 == cw.w_prime {
            0
        } else if w == cw.width + 1 {
            d + 1
        } else {
            pos(cw.sigma[&w])
        }
    };
    for w in cw.w_prime..cw.width {
        if sigma(w) >= sigma(w + 1) {
            out.push(NotMonotone(w));
        }
    }
    if !out.is_empty() {
        return out;
    }
    for (&w, &i) in &cw.sigma {
        if ranks[i - 1] != w {
            out.push(WrongRank {
                w,
                index: i,
                rank: ranks[i - 1],
            });
        }
    }
    for w in (cw.w_prime - 1)..=cw.width {
        let limit = w as i64 - 1;
        for p in sigma(w) + 1..sigma(w + 1) {
            let rank = rank_at(p);
            if rank as i64 > limit {
                let index = match cw.side {
                    Side::Left => p,
                    Side::Right => d + 1 - p,
                };
                out.push(GapTooHigh {
                    w,
                    index,
                    rank,
                    limit,
                });
            }
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PushError {
    #[error("corner pushing needs W >= 2, got {0}")]
    WidthTooSmall(u32),
    #[error("input witness is invalid: {0:?}")]
    InvalidWitness(Vec<RankViolation>),
}

/// Turns a valid rank-witness into one with `X = 1, v = 1` or `X = W, v = d`.
pub fn push_to_corner(ranks: &[u32], w: &RankWitness) -> Result<RankWitness, PushError> {
    if w.width < 2 {
        return Err(PushError::WidthTooSmall(w.width));
    }
    let violations = validate_rank_witness(ranks, w);
    if !violations.is_empty() {
        return Err(PushError::InvalidWitness(violations));
    }
    if w.x == 1 || w.x == w.width {
        return Ok(w.clone());
    }
    let width = w.width;
    let d = ranks.len();
    let at_corner = |x: u32, v: usize, others: &[(usize, u32)]| {
        let mut big = BTreeSet::from([v]);
        let mut pi = BTreeMap::new();
        for &(i, bound) in others {
            big.insert(i);
            pi.insert(i, bound);
        }
        pi.entry(v).or_insert(width);
        RankWitness {
            width,
            x,
            v,
            big,
            pi,
        }
    };
    let Some(m) = (1..=d).find(|&i| ranks[i - 1] == width) else {
        return Ok(at_corner(1, 1, &[]));
    };
    let s = (1..=d).find(|&i| ranks[i - 1] + 1 == width);
    let pushed = match s {
        Some(s) if s < m => {
            if m == d {
                at_corner(width, d, &[])
            } else {
                at_corner(width, d, &[(m, width), (d, width - 1)])
            }
        }
        _ => {
            if m == 1 {
                at_corner(1, 1, &[])
            } else {
                at_corner(1, 1, &[(m, width), (1, width - 1)])
            }
        }
    };
    debug_assert!(validate_rank_witness(ranks, &pushed).is_empty());
    Ok(pushed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::*;

    fn sigma(pairs: &[(u32, usize)]) -> BTreeMap<u32, usize> {
        pairs.iter().copied().collect()
    }

    #[test]
    fn test_left_examples() {
        let f = test_left(&[1, 1, 2], 2).unwrap_err();
        assert_eq!(f.reason, FailureReason::ChainBlocked);
        assert_eq!((f.index, f.w), (1, 1));

        let cw = test_left(&[1], 2).unwrap();
        assert_eq!((cw.w_prime, cw.sigma.len()), (3, 0));

        let cw = test_left(&[2, 1, 1], 2).unwrap();
        assert_eq!(cw.w_prime, 2);
        assert_eq!(cw.sigma, sigma(&[(2, 1)]));
    }

    #[test]
    fn test_right_examples() {
        let cw = test_right(&[1, 1, 2], 2).unwrap();
        assert_eq!(cw.side, Side::Right);
        assert_eq!(cw.w_prime, 2);
        assert_eq!(cw.sigma, sigma(&[(2, 3)]));

        assert!(test_right(&[2, 1, 1], 2).is_err());
        assert!(test_right(&[1, 1], 1).is_err());
    }

    #[test]
    fn rank_above_target_is_reported() {
        let f = test_left(&[1, 3, 1], 2).unwrap_err();
        assert_eq!(f.reason, FailureReason::RankAboveTarget);
        assert_eq!(f.index, 2);
        let f = test_right(&[1, 3, 1], 2).unwrap_err();
        assert_eq!(f.index, 2);
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&Tree::single()).root(), 1);
        assert_eq!(rank(&parse_tree("(()())").unwrap()).root(), 2);
        for i in 1..=5 {
            assert_eq!(rank(&gen_quintary_family(i).unwrap()).root(), 2 * i - 1);
        }
        for h in 1..=8 {
            assert_eq!(rank(&gen_complete_binary(h).unwrap()).root(), h);
        }
        assert_eq!(rank(&gen_path(50).unwrap()).root(), 1);
    }

    #[test]
    fn stored_corner_witnesses_validate() {
        for seed in 0..40 {
            let t = gen_random_tree(120, seed, None).unwrap();
            let ann = rank(&t);
            for u in 0..t.len() {
                match &ann.corner[u] {
                    None => assert!(t.is_leaf(u)),
                    Some(cw) => {
                        assert_eq!(cw.width, ann.rank[u]);
                        let ranks = ann.child_ranks(&t, u);
                        assert_eq!(validate_corner_witness(&ranks, cw), vec![]);
                        // at most one child reaches the node's rank once it is 2 or more
                        if ann.rank[u] >= 2 {
                            assert!(ranks.iter().all(|&r| r <= ann.rank[u]));
                            assert!(ranks.iter().filter(|&&r| r == ann.rank[u]).count() <= 1);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn left_is_preferred_when_both_succeed() {
        let (r, cw) = rank_from_children(&[1]);
        assert_eq!((r, cw.side), (1, Side::Left));
        let (r, cw) = rank_from_children(&[1, 2, 1]);
        assert_eq!((r, cw.side), (2, Side::Left));
        let (r, cw) = rank_from_children(&[1, 1, 2]);
        assert_eq!((r, cw.side), (2, Side::Right));
        let (r, cw) = rank_from_children(&[1, 1]);
        assert_eq!((r, cw.side, cw.w_prime), (2, Side::Left, 3));
    }

    fn witness(width: u32, x: u32, v: usize, big: &[usize], pi: &[(usize, u32)]) -> RankWitness {
        RankWitness {
            width,
            x,
            v,
            big: big.iter().copied().collect(),
            pi: pi.iter().copied().collect(),
        }
    }

    #[test]
    fn validate_rank_witness_examples() {
        assert!(validate_rank_witness(&[1], &witness(1, 1, 1, &[1], &[(1, 1)])).is_empty());
        assert!(validate_rank_witness(&[1, 1, 2], &witness(2, 2, 3, &[3], &[(3, 2)])).is_empty());
        let v = validate_rank_witness(&[1, 1, 2], &witness(2, 1, 1, &[1, 3], &[(1, 1), (3, 2)]));
        assert!(!v.is_empty());
    }

    #[test]
    fn validate_rank_witness_reports_malformed_fields() {
        let v = validate_rank_witness(&[1], &witness(2, 3, 1, &[1], &[(1, 1)]));
        assert!(v.contains(&RankViolation::XOutOfRange { x: 3, width: 2 }));
        let v = validate_rank_witness(&[1, 1], &witness(2, 1, 2, &[1], &[(1, 1)]));
        assert_eq!(v, vec![RankViolation::VerticalNotBig(2)]);
        let v = validate_rank_witness(&[2, 2], &witness(2, 1, 1, &[1, 2], &[(1, 2), (2, 2)]));
        assert!(v.contains(&RankViolation::BoundRepeated(2)));
        let v = validate_rank_witness(&[2], &witness(2, 1, 1, &[1], &[(1, 1)]));
        assert!(matches!(v[0], RankViolation::BoundBelowRank { .. }));
    }

    #[test]
    fn validate_corner_witness_examples() {
        let empty = CornerWitness {
            side: Side::Left,
            width: 2,
            w_prime: 3,
            sigma: BTreeMap::new(),
        };
        assert!(validate_corner_witness(&[1], &empty).is_empty());
        let good = CornerWitness {
            side: Side::Left,
            width: 2,
            w_prime: 2,
            sigma: sigma(&[(2, 1)]),
        };
        assert!(validate_corner_witness(&[2, 1, 1], &good).is_empty());
        let bad = CornerWitness {
            sigma: sigma(&[(2, 3)]),
            ..good.clone()
        };
        let v = validate_corner_witness(&[1, 1, 2], &bad);
        assert!(matches!(v[0], CornerViolation::GapTooHigh { w: 1, .. }));
        let right = CornerWitness {
            side: Side::Right,
            ..bad
        };
        assert!(validate_corner_witness(&[1, 1, 2], &right).is_empty());
    }

    #[test]
    fn push_to_corner_examples() {
        let w = witness(2, 2, 3, &[3], &[(3, 2)]);
        let p = push_to_corner(&[1, 1, 2], &w).unwrap();
        assert_eq!((p.x, p.v), (2, 3));
        assert!(validate_rank_witness(&[1, 1, 2], &p).is_empty());

        let w = witness(2, 1, 1, &[1], &[(1, 2)]);
        assert_eq!(push_to_corner(&[1, 1], &w).unwrap(), w);

        // no child reaches W: only c_1 stays big
        let w = witness(3, 2, 2, &[2], &[(2, 3)]);
        assert!(validate_rank_witness(&[1, 2, 1], &w).is_empty());
        let p = push_to_corner(&[1, 2, 1], &w).unwrap();
        assert_eq!((p.x, p.v), (1, 1));
        assert_eq!(p.big, BTreeSet::from([1]));
        // declaring c_2 big as well is also valid
        let alt = witness(3, 1, 1, &[1, 2], &[(1, 3), (2, 2)]);
        assert!(validate_rank_witness(&[1, 2, 1], &alt).is_empty());
        assert!(validate_rank_witness(&[1, 2, 1], &p).is_empty());
    }

    #[test]
    fn push_to_corner_picks_side_by_rank_w_minus_one() {
        // c_s (rank 2) left of c_m (rank 3): pushed to the right corner
        let ranks = [1, 2, 3, 1];
        let w = witness(3, 2, 3, &[2, 3], &[(2, 2), (3, 3)]);
        assert!(validate_rank_witness(&ranks, &w).is_empty());
        let p = push_to_corner(&ranks, &w).unwrap();
        assert_eq!((p.x, p.v), (3, 4));
        assert!(validate_rank_witness(&ranks, &p).is_empty());

        // c_s right of c_m: pushed to the left corner
        let ranks = [1, 3, 2, 1];
        let w = witness(3, 2, 2, &[2, 3], &[(2, 3), (3, 2)]);
        assert!(validate_rank_witness(&ranks, &w).is_empty());
        let p = push_to_corner(&ranks, &w).unwrap();
        assert_eq!((p.x, p.v), (1, 1));
        assert!(validate_rank_witness(&ranks, &p).is_empty());
    }

    #[test]
    fn push_to_corner_rejects_bad_input() {
        let w = witness(1, 1, 1, &[1], &[(1, 1)]);
        assert_eq!(push_to_corner(&[1], &w), Err(PushError::WidthTooSmall(1)));
        let w = witness(2, 1, 1, &[1], &[(1, 2)]);
        assert!(matches!(
            push_to_corner(&[1, 2], &w),
            Err(PushError::InvalidWitness(_))
        ));
    }

    #[test]
    fn greedy_bounds_follow_sorted_dominance() {
        let big = BTreeSet::from([1, 2, 3]);
        let pi = greedy_rank_bounds(&[1, 3, 2], &big, 3).unwrap();
        assert_eq!(pi, BTreeMap::from([(1, 1), (2, 3), (3, 2)]));
        assert!(greedy_rank_bounds(&[2, 2, 2], &big, 3).is_none());
    }

    #[test]
    fn witness_json_shape() {
        let cw = test_left(&[2, 1, 1], 2).unwrap();
        let s = serde_json::to_string(&cw).unwrap();
        assert_eq!(s, r#"{"side":"left","W":2,"Wprime":2,"sigma":{"2":1}}"#);
        let back: CornerWitness = serde_json::from_str(&s).unwrap();
        assert_eq!(back, cw);
        let w = witness(2, 2, 3, &[3], &[(3, 2)]);
        let s = serde_json::to_string(&w).unwrap();
        assert_eq!(s, r#"{"W":2,"X":2,"v":3,"big":[3],"pi":{"3":2}}"#);
    }
}
