//! One-dimensional earth mover's distance between compositions.
//!
//! A move shifts one unit between adjacent positions. The distance is
//! computed as the symmetric difference of the Young diagrams of the two
//! words, which a breadth-first search over the literal move graph
//! confirms on every tested range. For partitions ordered by dominance the
//! distance collapses to a difference of weighted totals, and against a
//! flat partition it is exactly the generalized Gini index.

use std::collections::{HashMap, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gini::weighted_total;
use crate::partition::{Composition, Partition};

/// Hard cap on the BFS oracle's state space, C(s+n-1, n-1).
pub const MAX_ORACLE_STATES: u64 = 2_000_000;

/// Above this many states the oracle searches from both endpoints.
const BIDIRECTIONAL_THRESHOLD: u64 = 100_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EmdResult {
    pub mu: Composition,
    pub lambda: Composition,
    pub distance: u64,
}

/// Least number of adjacent single-unit moves converting `mu` into
/// `lambda`, via the diagram symmetric difference of their words.
pub fn emd(mu: &Composition, lambda: &Composition) -> Result<EmdResult> {
    check_comparable(mu, lambda)?;
    let distance = mu.word().diagram_symmetric_difference(&lambda.word())?;
    Ok(EmdResult {
        mu: mu.clone(),
        lambda: lambda.clone(),
        distance,
    })
}

fn check_comparable(mu: &Composition, lambda: &Composition) -> Result<()> {
    if mu.len() != lambda.len() {
        return Err(Error::invalid(format!(
            "equal part counts required, got {} and {}",
            mu.len(),
            lambda.len()
        )));
    }
    if mu.total() != lambda.total() {
        return Err(Error::invalid(format!(
            "equal totals required, got {} and {}",
            mu.total(),
            lambda.total()
        )));
    }
    Ok(())
}

/// The distance between partitions when `mu` dominates `lambda`:
/// b(lambda) - b(mu), the drop in weighted total.
pub fn emd_majorized(mu: &Partition, lambda: &Partition) -> Result<u64> {
    if !mu.dominates(lambda)? {
        return Err(Error::invalid(format!("{mu} does not dominate {lambda}")));
    }
    Ok(weighted_total(lambda) - weighted_total(mu))
}

/// Ground-truth distance: breadth-first search over the move graph, where
/// one move shifts one unit between adjacent positions. Refuses state
/// spaces larger than [`MAX_ORACLE_STATES`]; searches from both endpoints
/// once the space is large enough for that to matter.
pub fn emd_bfs_oracle(mu: &Composition, lambda: &Composition) -> Result<u64> {
    check_comparable(mu, lambda)?;
    let states = state_space_size(mu.total(), mu.len() as u64);
    if states > MAX_ORACLE_STATES {
        return Err(Error::ResourceLimit(format!(
            "move graph has {states} states (C({}+{}-1, {}-1)), oracle cap is {MAX_ORACLE_STATES}",
            mu.total(),
            mu.len(),
            mu.len()
        )));
    }
    let start = mu.parts().to_vec();
    let goal = lambda.parts().to_vec();
    if start == goal {
        return Ok(0);
    }
    if states > BIDIRECTIONAL_THRESHOLD {
        Ok(bfs_bidirectional(start, goal))
    } else {
        Ok(bfs(start, goal))
    }
}

/// C(s+n-1, n-1), saturating once it passes the oracle cap.
fn state_space_size(s: u64, n: u64) -> u64 {
    let mut count: u128 = 1;
    for i in 1..n {
        count = count * (s + i) as u128 / i as u128;
        if count > MAX_ORACLE_STATES as u128 {
            return u64::MAX;
        }
    }
    count as u64
}

fn neighbors(state: &[u64]) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    for i in 0..state.len() - 1 {
        if state[i] > 0 {
            let mut next = state.to_vec();
            next[i] -= 1;
            next[i + 1] += 1;
            out.push(next);
        }
        if state[i + 1] > 0 {
            let mut next = state.to_vec();
            next[i + 1] -= 1;
            next[i] += 1;
            out.push(next);
        }
    }
    out
}

fn bfs(start: Vec<u64>, goal: Vec<u64>) -> u64 {
    let mut dist: HashMap<Vec<u64>, u64> = HashMap::new();
    let mut queue = VecDeque::new();
    dist.insert(start.clone(), 0);
    queue.push_back(start);
    while let Some(state) = queue.pop_front() {
        let d = dist[&state];
        for next in neighbors(&state) {
            if next == goal {
                return d + 1;
            }
            if !dist.contains_key(&next) {
                dist.insert(next.clone(), d + 1);
                queue.push_back(next);
            }
        }
    }
    unreachable!("the move graph on a fixed total is connected");
}

/// Level-synchronized search from both endpoints; the smaller frontier is
/// expanded first, and a whole level is finished before a meeting is
/// reported so the minimum over that level is exact.
fn bfs_bidirectional(start: Vec<u64>, goal: Vec<u64>) -> u64 {
    let mut dist_a: HashMap<Vec<u64>, u64> = HashMap::from([(start.clone(), 0)]);
    let mut dist_b: HashMap<Vec<u64>, u64> = HashMap::from([(goal.clone(), 0)]);
    let mut frontier_a = vec![start];
    let mut frontier_b = vec![goal];
    let mut depth_a = 0u64;
    let mut depth_b = 0u64;

    loop {
        let expand_a = frontier_a.len() <= frontier_b.len();
        let (dist, other, frontier, depth) = if expand_a {
            (&mut dist_a, &dist_b, &mut frontier_a, &mut depth_a)
        } else {
            (&mut dist_b, &dist_a, &mut frontier_b, &mut depth_b)
        };
        let mut next_frontier = Vec::new();
        let mut best: Option<u64> = None;
        for state in frontier.iter() {
            for next in neighbors(state) {
                if let Some(&d_other) = other.get(&next) {
                    let total = *depth + 1 + d_other;
                    best = Some(best.map_or(total, |b: u64| b.min(total)));
                }
                if !dist.contains_key(&next) {
                    dist.insert(next.clone(), *depth + 1);
                    next_frontier.push(next);
                }
            }
        }
        if let Some(found) = best {
            return found;
        }
        *frontier = next_frontier;
        *depth += 1;
        assert!(!frontier.is_empty(), "move graph is connected");
    }
}
