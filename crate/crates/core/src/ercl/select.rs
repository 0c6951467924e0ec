use std::collections::VecDeque;

use rustc_hash::FxHashMap;

use rand::Rng;

use super::{DipChoice, DipConfig, DipFilter};
use crate::analyze::ConflictGraph;
use crate::formula::Lit;
use crate::tvd::TvdResult;

/// Picks one DIP from `r` and returns its node pair, lower node first.
pub fn select_dip<R: Rng>(
    r: &TvdResult,
    choice: DipChoice,
    g: &ConflictGraph,
    activity: &[f64],
    rng: &mut R,
) -> Option<(usize, usize)> {
    if r.is_empty() {
        return None;
    }
    let pos = |v: usize| g.trail_pos[v];
    let pa: Vec<usize> = r.a_prime.iter().map(|&v| pos(v)).collect();
    let pb: Vec<usize> = r.b_prime.iter().map(|&v| pos(v)).collect();
    let closest_key = |i: usize, j: usize| (pa[i] + pb[j], pa[i].max(pb[j]));
    let (i, j) = match choice {
        DipChoice::Closest => r
            .ranges
            .iter()
            .enumerate()
            .map(|(i, &(_, n))| (i, n))
            .max_by_key(|&(i, j)| closest_key(i, j))?,
        DipChoice::Middle => middle(&pa, &pb, &r.ranges),
        DipChoice::Random => {
            let (u, v) = r.sample_pair(rng)?;
            return Some((u, v));
        }
        DipChoice::Heuristic => {
            let act = |v: usize| g.lits[v].map_or(0.0, |l| activity[l.var().index()]);
            let mut best: Option<(f64, (usize, usize), (usize, usize))> = None;
            for (i, &(m, n)) in r.ranges.iter().enumerate() {
                for j in m..=n {
                    let score = act(r.a_prime[i]) + act(r.b_prime[j]);
                    let key = closest_key(i, j);
                    let better = match best {
                        None => true,
                        Some((s, k, _)) => score > s || (score == s && key > k),
                    };
                    if better {
                        best = Some((score, key, (i, j)));
                    }
                }
            }
            best?.2
        }
    };
    let (u, v) = (r.a_prime[i], r.b_prime[j]);
    Some((u.min(v), u.max(v)))
}

/// Lower median of all pairs ordered by combined position, then by the
/// position of the `a` node. Works on the interval form directly.
fn middle(pa: &[usize], pb: &[usize], ranges: &[(usize, usize)]) -> (usize, usize) {
    let count_le = |x: usize| -> usize {
        ranges
            .iter()
            .enumerate()
            .map(|(i, &(m, n))| {
                if x < pa[i] {
                    0
                } else {
                    pb[m..=n].partition_point(|&p| p <= x - pa[i])
                }
            })
            .sum()
    };
    let total: usize = ranges.iter().map(|&(m, n)| n - m + 1).sum();
    let rank = (total - 1) / 2;
    let (mut lo, mut hi) = (0usize, pa.last().unwrap() + pb.last().unwrap());
    while lo < hi {
        let mid = (lo + hi) / 2;
        if count_le(mid) > rank {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    let sum = lo;
    let mut k = rank - if sum == 0 { 0 } else { count_le(sum - 1) };
    for (i, &(m, n)) in ranges.iter().enumerate() {
        if sum < pa[i] {
            continue;
        }
        if let Ok(off) = pb[m..=n].binary_search(&(sum - pa[i])) {
            if k == 0 {
                return (i, m + off);
            }
            k -= 1;
        }
    }
    unreachable!("median pair not found")
}

/// How often each DIP has been seen. Never reset or decayed.
#[derive(Clone, Debug, Default)]
pub struct DipOccurrenceTable {
    counts: FxHashMap<(Lit, Lit), u32>,
}

impl DipOccurrenceTable {
    /// Records a sighting of a canonical pair and returns its new count.
    pub fn bump(&mut self, pair: (Lit, Lit)) -> u32 {
        let c = self.counts.entry(pair).or_insert(0);
        *c += 1;
        *c
    }

    pub fn count(&self, pair: (Lit, Lit)) -> u32 {
        self.counts.get(&pair).copied().unwrap_or(0)
    }
}

/// Summed activities of the most recent DIPs.
#[derive(Clone, Debug, Default)]
pub struct ActivityWindow {
    recent: VecDeque<f64>,
}

impl ActivityWindow {
    pub const LEN: usize = 20;

    /// True iff `score` beats the mean of the window; `score` then joins it.
    pub fn accept(&mut self, score: f64) -> bool {
        let mean = if self.recent.is_empty() {
            0.0
        } else {
            self.recent.iter().sum::<f64>() / self.recent.len() as f64
        };
        if self.recent.len() == Self::LEN {
            self.recent.pop_front();
        }
        self.recent.push_back(score);
        score > mean
    }
}

/// Inputs the filters look at besides the pair itself.
#[derive(Clone, Copy, Debug)]
pub struct DipQuality {
    pub post_lbd: u32,
    pub activity: f64,
}

/// Decides whether a selected DIP is used for learning.
pub fn filter_dip(
    pair: (Lit, Lit),
    table: &mut DipOccurrenceTable,
    window: &mut ActivityWindow,
    quality: DipQuality,
    cfg: &DipConfig,
) -> bool {
    match cfg.filter {
        DipFilter::Occ => table.bump(pair) >= cfg.min_occ,
        DipFilter::Glue => quality.post_lbd == 2,
        DipFilter::Act => window.accept(quality.activity),
    }
}
