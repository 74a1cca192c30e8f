//! Exponential-time ground truth for small trees: rank by exhaustive witness
//! enumeration, the smallest tree of a given rank, and a cross-check of the
//! equivalent characterizations of rank.
//!
//! Nothing here calls the linear-time rank computation; the corner tests are
//! only used as one of the predicates being compared.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::Serialize;
use thiserror::Error;

use crate::rank::{test_left, test_right, CornerWitness, RankWitness, Side};
use crate::tree::{for_each_tree, Tree};

/// Largest tree accepted by [`rank_bruteforce`] unless a cap is given.
pub const DEFAULT_BRUTE_CAP: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("tree has {n} nodes, oracle cap is {cap}")]
pub struct OracleCapExceeded {
    pub n: usize,
    pub cap: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct OracleConfig {
    pub max_n: usize,
    #[serde(rename = "max_W")]
    pub max_w: u32,
    pub seed: u64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            max_n: 11,
            max_w: 6,
            seed: 0,
        }
    }
}

/// Which rank-witnesses to accept during enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WitnessFilter {
    Any,
    /// Only `X = 1` or `X = W`.
    CornerColumn,
    /// Only `v = 1` or `v = d`.
    OuterVertical,
}

/// Checks the rank conditions for big set `big` (bitmask over 0-based
/// positions), column `x` and vertical child `v` (0-based).
fn conditions_hold(ranks: &[u32], width: u32, x: u32, v: usize, big: u32) -> bool {
    let d = ranks.len();
    let (w, x) = (width as i64, x as i64);
    let is_big = |i: usize| big >> i & 1 == 1;
    let big_left: i64 = (0..v).filter(|&i| is_big(i)).count() as i64;
    let big_right: i64 = (v + 1..d).filter(|&i| is_big(i)).count() as i64;
    if big_left > x - 1 || big_right > w - x {
        return false;
    }
    let mut seen_left = 0i64;
    for i in 0..v {
        if is_big(i) {
            seen_left += 1;
        } else if ranks[i] as i64 > x - 1 - seen_left {
            return false;
        }
    }
    let mut seen_right = 0i64;
    for i in (v + 1..d).rev() {
        if is_big(i) {
            seen_right += 1;
        } else if ranks[i] as i64 > w - x - seen_right {
            return false;
        }
    }
    // an injective bound assignment exists iff the k-th largest big rank is at most W - k + 1
    let mut big_ranks: Vec<u32> = (0..d).filter(|&i| is_big(i)).map(|i| ranks[i]).collect();
    big_ranks.sort_unstable_by(|a, b| b.cmp(a));
    big_ranks
        .iter()
        .enumerate()
        .all(|(k, &r)| r as i64 <= w - k as i64)
}

/// Exhaustive search for a rank-`width` witness over all `X`, `v` and big
/// sets. Positions in the result are 1-based.
pub fn brute_rank_witness(ranks: &[u32], width: u32, filter: WitnessFilter) -> Option<RankWitness> {
    let d = ranks.len();
    assert!((1..32).contains(&d), "brute force handles 1..=31 children");
    for x in 1..=width {
        if filter == WitnessFilter::CornerColumn && x != 1 && x != width {
            continue;
        }
        for v in 0..d {
            if filter == WitnessFilter::OuterVertical && v != 0 && v != d - 1 {
                continue;
            }
            let others: Vec<usize> = (0..d).filter(|&i| i != v).collect();
            for mask in 0u32..(1u32 << others.len()) {
                let mut big = 1u32 << v;
                for (b, &i) in others.iter().enumerate() {
                    if mask >> b & 1 == 1 {
                        big |= 1 << i;
                    }
                }
                if conditions_hold(ranks, width, x, v, big) {
                    let big_set: BTreeSet<usize> = (0..d)
                        .filter(|&i| big >> i & 1 == 1)
                        .map(|i| i + 1)
                        .collect();
                    let mut order: Vec<usize> = big_set.iter().copied().collect();
                    order.sort_by_key(|&i| std::cmp::Reverse(ranks[i - 1]));
                    let pi = order
                        .iter()
                        .enumerate()
                        .map(|(k, &i)| (i, width - k as u32))
                        .collect();
                    return Some(RankWitness {
                        width,
                        x,
                        v: v + 1,
                        big: big_set,
                        pi,
                    });
                }
            }
        }
    }
    None
}

fn corner_conditions_hold(ranks: &[u32], width: u32, w_prime: u32, sigma: &[usize]) -> bool {
    // sigma[k] is the 1-based position of level w_prime + k, increasing
    let d = ranks.len();
    for (k, &p) in sigma.iter().enumerate() {
        if ranks[p - 1] != w_prime + k as u32 {
            return false;
        }
    }
    // gap below level w lies strictly between sigma(w-1) and sigma(w)
    let mut prev = 0usize;
    for level in w_prime..=width + 1 {
        let next = if level <= width {
            sigma[(level - w_prime) as usize]
        } else {
            d + 1
        };
        let limit = level as i64 - 2;
        if (prev + 1..next).any(|p| ranks[p - 1] as i64 > limit) {
            return false;
        }
        prev = next;
    }
    true
}

fn for_each_increasing(d: usize, k: usize, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    fn rec(
        start: usize,
        d: usize,
        k: usize,
        cur: &mut Vec<usize>,
        f: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        if cur.len() == k {
            return f(cur);
        }
        for p in start..=d {
            if d - p + 1 < k - cur.len() {
                break;
            }
            cur.push(p);
            if rec(p + 1, d, k, cur, f) {
                return true;
            }
            cur.pop();
        }
        false
    }
    rec(1, d, k, &mut Vec::with_capacity(k), f)
}

/// Exhaustive search for a left- or right-corner witness of the given width.
pub fn brute_corner_witness(ranks: &[u32], width: u32) -> Option<CornerWitness> {
    let d = ranks.len();
    for side in [Side::Left, Side::Right] {
        let seq: Vec<u32> = match side {
            Side::Left => ranks.to_vec(),
            Side::Right => ranks.iter().rev().copied().collect(),
        };
        for w_prime in (1..=width + 1).rev() {
            let k = (width + 1 - w_prime) as usize;
            if k > d {
                continue;
            }
            let mut found = None;
            for_each_increasing(d, k, &mut |sigma| {
                if corner_conditions_hold(&seq, width, w_prime, sigma) {
                    found = Some(sigma.to_vec());
                    true
                } else {
                    false
                }
            });
            if let Some(sigma) = found {
                let sigma: BTreeMap<u32, usize> = sigma
                    .iter()
                    .enumerate()
                    .map(|(j, &p)| {
                        let pos = match side {
                            Side::Left => p,
                            Side::Right => d + 1 - p,
                        };
                        (w_prime + j as u32, pos)
                    })
                    .collect();
                return Some(CornerWitness {
                    side,
                    width,
                    w_prime,
                    sigma,
                });
            }
        }
    }
    None
}

/// Memoized brute-force rank, keyed by the sequence of child ranks.
#[derive(Debug, Default)]
pub struct BruteRank {
    memo: HashMap<Vec<u32>, u32>,
}

impl BruteRank {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_child_ranks(&mut self, ranks: &[u32]) -> u32 {
        if let Some(&r) = self.memo.get(ranks) {
            return r;
        }
        let mut w = 1;
        while brute_rank_witness(ranks, w, WitnessFilter::Any).is_none() {
            w += 1;
        }
        self.memo.insert(ranks.to_vec(), w);
        w
    }

    /// Ranks of every subtree.
    pub fn ranks(&mut self, t: &Tree) -> Vec<u32> {
        let mut rank = vec![1u32; t.len()];
        let mut buf = Vec::new();
        for u in (0..t.len()).rev() {
            if t.is_leaf(u) {
                continue;
            }
            buf.clear();
            buf.extend(t.children(u).iter().map(|&c| rank[c]));
            rank[u] = self.from_child_ranks(&buf);
        }
        rank
    }
}

pub fn rank_bruteforce(t: &Tree) -> Result<u32, OracleCapExceeded> {
    rank_bruteforce_with_cap(t, DEFAULT_BRUTE_CAP)
}

pub fn rank_bruteforce_with_cap(t: &Tree, cap: usize) -> Result<u32, OracleCapExceeded> {
    if t.len() > cap {
        return Err(OracleCapExceeded { n: t.len(), cap });
    }
    Ok(BruteRank::new().ranks(t)[0])
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NWRecord {
    #[serde(rename = "W")]
    pub w: u32,
    pub min_nodes_found: Option<usize>,
    pub search_bound: usize,
}

/// Smallest `n <= n_max` such that some ordered tree on `n` nodes has rank
/// `w`, by exhaustive enumeration.
pub fn min_nodes_for_rank(w: u32, n_max: usize) -> NWRecord {
    let mut oracle = BruteRank::new();
    for n in 1..=n_max {
        let mut hit = false;
        for_each_tree(n, |t| {
            if !hit && oracle.ranks(t)[0] == w {
                hit = true;
            }
        });
        if hit {
            return NWRecord {
                w,
                min_nodes_found: Some(n),
                search_bound: n_max,
            };
        }
    }
    NWRecord {
        w,
        min_nodes_found: None,
        search_bound: n_max,
    }
}

pub const PREDICATES: [&str; 5] = [
    "rank_witness",
    "rank_witness_corner_column",
    "rank_witness_outer_vertical",
    "corner_test",
    "corner_witness",
];

/// The five existence predicates for a node with the given child ranks.
pub fn predicates(ranks: &[u32], width: u32) -> [bool; 5] {
    [
        brute_rank_witness(ranks, width, WitnessFilter::Any).is_some(),
        brute_rank_witness(ranks, width, WitnessFilter::CornerColumn).is_some(),
        brute_rank_witness(ranks, width, WitnessFilter::OuterVertical).is_some(),
        test_left(ranks, width).is_ok() || test_right(ranks, width).is_ok(),
        brute_corner_witness(ranks, width).is_some(),
    ]
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub tree: String,
    #[serde(rename = "W")]
    pub w: u32,
    pub child_ranks: Vec<u32>,
    pub predicates: BTreeMap<&'static str, bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EquivalenceReport {
    pub config: OracleConfig,
    pub trees_checked: usize,
    pub checks: usize,
    pub disagreements: usize,
    pub counterexample: Option<Counterexample>,
}

/// Evaluates all predicates at the root of every ordered tree with 2 to
/// `cfg.max_n` nodes and every `W <= cfg.max_w`. The first disagreement in
/// order of increasing size is kept as the counterexample.
pub fn equivalence_suite(cfg: &OracleConfig) -> EquivalenceReport {
    let mut oracle = BruteRank::new();
    let mut report = EquivalenceReport {
        config: *cfg,
        trees_checked: 0,
        checks: 0,
        disagreements: 0,
        counterexample: None,
    };
    // results only depend on the child-rank sequence
    let mut seen: HashMap<Vec<u32>, [bool; 5]> = HashMap::new();
    for n in 2..=cfg.max_n {
        for_each_tree(n, |t| {
            report.trees_checked += 1;
            let ranks = oracle.ranks(t);
            let child: Vec<u32> = t.children(0).iter().map(|&c| ranks[c]).collect();
            for w in 1..=cfg.max_w {
                report.checks += 1;
                let mut key = child.clone();
                key.push(w);
                let p = *seen.entry(key).or_insert_with(|| predicates(&child, w));
                if p.iter().any(|&b| b != p[0]) {
                    report.disagreements += 1;
                    if report.counterexample.is_none() {
                        report.counterexample = Some(Counterexample {
                            tree: t.to_paren(),
                            w,
                            child_ranks: child.clone(),
                            predicates: PREDICATES.iter().copied().zip(p).collect(),
                        });
                    }
                }
            }
        });
    }
    report
}
