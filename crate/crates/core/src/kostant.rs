//! Kostant's partition function and its q-analogue for the type-A root
//! system: the positive roots are e_i - e_j for 1 <= i < j <= n.
//!
//! P_q(alpha) is the generating polynomial, over all multisets of positive
//! roots summing to alpha, of q^(multiset size). It is computed by a
//! recursion over a fixed root ordering,
//!
//!   P_q(alpha; r_t..r_m) = P_q(alpha; r_{t+1}..r_m) + q * P_q(alpha - r_t; r_t..r_m),
//!
//! memoized on (alpha, t). Every positive root has non-negative prefix
//! sums and total zero, so any alpha with a negative prefix sum or nonzero
//! total contributes nothing; that pruning also bounds the recursion.

use std::collections::HashMap;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::partition::IntVector;
use crate::qpoly::QPolynomial;

/// The positive roots e_i - e_j (i < j) of type A_{n-1}, ordered
/// lexicographically by (i, j).
#[derive(Debug, Clone)]
pub struct RootSystemA {
    n: usize,
    pairs: Vec<(usize, usize)>,
}

impl RootSystemA {
    pub fn new(n: usize) -> Self {
        let pairs = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect();
        RootSystemA { n, pairs }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// n(n-1)/2 roots, each with one +1 entry, one -1 entry, and zero sum.
    pub fn positive_roots(&self) -> Vec<IntVector> {
        self.pairs
            .iter()
            .map(|&(i, j)| {
                let mut entries = vec![0i64; self.n];
                entries[i] = 1;
                entries[j] = -1;
                IntVector::new(entries)
            })
            .collect()
    }
}

/// Memoizing evaluator for P_q. The cache lives for the evaluator's
/// lifetime, so one evaluator per query batch keeps memory proportional
/// to the workload; workers running concurrently each get their own.
#[derive(Debug)]
pub struct KostantEvaluator {
    roots: RootSystemA,
    entry_bound: Option<i64>,
    memo: HashMap<(Vec<i64>, usize), QPolynomial>,
}

impl KostantEvaluator {
    pub fn new(n: usize) -> Self {
        KostantEvaluator {
            roots: RootSystemA::new(n),
            entry_bound: None,
            memo: HashMap::new(),
        }
    }

    /// Like [`KostantEvaluator::new`], but additionally prunes any argument
    /// with an entry exceeding `bound` in absolute value as unreachable.
    /// The caller must guarantee the bound: every argument it will query
    /// stays within it (entries reachable from a feasible argument never
    /// grow past the argument's largest prefix sum).
    pub fn with_entry_bound(n: usize, bound: i64) -> Self {
        KostantEvaluator {
            roots: RootSystemA::new(n),
            entry_bound: Some(bound),
            memo: HashMap::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.roots.n()
    }

    pub fn clear_cache(&mut self) {
        self.memo.clear();
    }

    /// The q-analogue P_q(alpha); the zero polynomial when alpha is not a
    /// sum of positive roots, and 1 for alpha = 0 (the empty multiset).
    pub fn partition_q(&mut self, alpha: &IntVector) -> Result<QPolynomial> {
        if alpha.len() != self.n() {
            return Err(Error::invalid(format!(
                "expected a length-{} weight, got {alpha}",
                self.n()
            )));
        }
        self.eval(alpha.entries().to_vec(), 0)
    }

    /// Kostant's partition function P(alpha) = P_q(alpha) at q = 1.
    pub fn partition_count(&mut self, alpha: &IntVector) -> Result<u64> {
        let count = self.partition_q(alpha)?.eval_at_one()?;
        Ok(count as u64)
    }

    fn eval(&mut self, alpha: Vec<i64>, root_idx: usize) -> Result<QPolynomial> {
        if alpha.iter().all(|&e| e == 0) {
            return Ok(QPolynomial::one());
        }
        if !self.feasible(&alpha) || root_idx == self.roots.pairs.len() {
            return Ok(QPolynomial::zero());
        }
        let key = (alpha, root_idx);
        if let Some(hit) = self.memo.get(&key) {
            return Ok(hit.clone());
        }
        let alpha = &key.0;

        let skip = self.eval(alpha.clone(), root_idx + 1)?;
        let (i, j) = self.roots.pairs[root_idx];
        let mut reduced = alpha.clone();
        reduced[i] -= 1;
        reduced[j] += 1;
        let taken = self.eval(reduced, root_idx)?;
        let result = skip.add(&taken.scale_shift(1, 1)?)?;

        self.memo.insert(key, result.clone());
        Ok(result)
    }

    /// A sum of positive roots has total zero and non-negative prefix sums.
    fn feasible(&self, alpha: &[i64]) -> bool {
        if let Some(bound) = self.entry_bound {
            if alpha.iter().any(|&e| e.abs() > bound) {
                return false;
            }
        }
        let mut prefix = 0i64;
        for &e in alpha {
            prefix += e;
            if prefix < 0 {
                return false;
            }
        }
        prefix == 0
    }
}

/// One-off P_q(alpha) with a throwaway cache.
pub fn kostant_partition_q(alpha: &IntVector) -> Result<QPolynomial> {
    KostantEvaluator::new(alpha.len()).partition_q(alpha)
}

/// One-off P(alpha) with a throwaway cache.
pub fn kostant_partition(alpha: &IntVector) -> Result<u64> {
    KostantEvaluator::new(alpha.len()).partition_count(alpha)
}

/// All permutations of {0, ..., n-1} in lexicographic order, each paired
/// with its sign (+1 for even, -1 for odd).
pub fn signed_permutations(n: usize) -> impl Iterator<Item = (Vec<usize>, i64)> {
    (0..n).permutations(n).map(|perm| {
        let mut inversions = 0usize;
        for i in 0..perm.len() {
            for j in i + 1..perm.len() {
                if perm[i] > perm[j] {
                    inversions += 1;
                }
            }
        }
        let sign = if inversions.is_multiple_of(2) { 1 } else { -1 };
        (perm, sign)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vector(entries: &[i64]) -> IntVector {
        IntVector::new(entries.to_vec())
    }

    fn poly(coeffs: &[i64]) -> QPolynomial {
        QPolynomial::from_coeffs(coeffs.to_vec())
    }

    /// Independent oracle: exhaust non-negative multiplicity vectors over
    /// the positive roots. Each copy of e_i - e_j consumes j - i from the
    /// height (sum of prefix sums), which caps the search.
    fn brute_force_pq(alpha: &[i64]) -> QPolynomial {
        let n = alpha.len();
        let prefixes: Vec<i64> = alpha
            .iter()
            .scan(0i64, |acc, &e| {
                *acc += e;
                Some(*acc)
            })
            .collect();
        if prefixes.iter().any(|&p| p < 0) || prefixes.last().copied().unwrap_or(0) != 0 {
            return QPolynomial::zero();
        }
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect();

        fn search(
            residual: &mut Vec<i64>,
            pairs: &[(usize, usize)],
            t: usize,
            size: usize,
            counts: &mut Vec<i64>,
        ) {
            if t == pairs.len() {
                if residual.iter().all(|&e| e == 0) {
                    if counts.len() <= size {
                        counts.resize(size + 1, 0);
                    }
                    counts[size] += 1;
                }
                return;
            }
            let (i, j) = pairs[t];
            let height: i64 = residual
                .iter()
                .scan(0i64, |acc, &e| {
                    *acc += e;
                    Some(*acc)
                })
                .sum();
            let cap = height / (j - i) as i64;
            for c in 0..=cap {
                residual[i] -= c;
                residual[j] += c;
                search(residual, pairs, t + 1, size + c as usize, counts);
                residual[i] += c;
                residual[j] -= c;
            }
        }

        let mut counts = Vec::new();
        search(&mut alpha.to_vec(), &pairs, 0, 0, &mut counts);
        QPolynomial::from_coeffs(counts)
    }

    #[test]
    fn root_system_shape() {
        let roots = RootSystemA::new(4);
        let vectors = roots.positive_roots();
        assert_eq!(vectors.len(), 6);
        for v in &vectors {
            assert_eq!(v.sum(), 0);
            assert_eq!(v.entries().iter().filter(|&&e| e == 1).count(), 1);
            assert_eq!(v.entries().iter().filter(|&&e| e == -1).count(), 1);
        }
        assert_eq!(vectors[0], vector(&[1, -1, 0, 0]));
        assert_eq!(vectors[5], vector(&[0, 0, 1, -1]));
    }

    #[test]
    fn q_analogue_examples() {
        assert_eq!(
            kostant_partition_q(&vector(&[1, 0, -1])).unwrap(),
            poly(&[0, 1, 1])
        );
        assert_eq!(
            kostant_partition_q(&vector(&[0, 0, 0])).unwrap(),
            QPolynomial::one()
        );
        assert_eq!(
            kostant_partition_q(&vector(&[2, -1, -1])).unwrap(),
            poly(&[0, 0, 1, 1])
        );
    }

    #[test]
    fn count_examples() {
        assert_eq!(kostant_partition(&vector(&[1, 0, -1])).unwrap(), 2);
        assert_eq!(kostant_partition(&vector(&[0, 0, 0])).unwrap(), 1);
        assert_eq!(kostant_partition(&vector(&[-1, 0, 1])).unwrap(), 0);
    }

    #[test]
    fn vanishes_off_the_root_lattice_cone() {
        // Nonzero total.
        assert!(kostant_partition_q(&vector(&[1, 0, 0])).unwrap().is_zero());
        // Negative prefix sum.
        assert!(kostant_partition_q(&vector(&[-1, 0, 1])).unwrap().is_zero());
        assert!(kostant_partition_q(&vector(&[2, -3, 1])).unwrap().is_zero());
    }

    #[test]
    fn matches_brute_force_on_small_weights() {
        let mut shared = KostantEvaluator::new(3);
        for a in -2i64..=2 {
            for b in -2i64..=2 {
                for c in -2i64..=2 {
                    let alpha = vector(&[a, b, c]);
                    let expected = brute_force_pq(alpha.entries());
                    // Shared cache and a fresh evaluator must agree.
                    assert_eq!(shared.partition_q(&alpha).unwrap(), expected);
                    assert_eq!(kostant_partition_q(&alpha).unwrap(), expected);
                }
            }
        }
    }

    #[test]
    fn entry_bound_prunes_only_out_of_range_arguments() {
        // Entries of (a, b, -a-b) reach 6; feasible prefix sums never grow,
        // so 6 bounds everything the recursion can visit.
        let mut bounded = KostantEvaluator::with_entry_bound(3, 6);
        let mut free = KostantEvaluator::new(3);
        for a in -3i64..=3 {
            for b in -3i64..=3 {
                let alpha = vector(&[a, b, -a - b]);
                assert_eq!(
                    bounded.partition_q(&alpha).unwrap(),
                    free.partition_q(&alpha).unwrap()
                );
            }
        }
        let mut tight = KostantEvaluator::with_entry_bound(3, 0);
        assert!(tight.partition_q(&vector(&[1, 0, -1])).unwrap().is_zero());
    }

    #[test]
    fn cache_can_be_cleared() {
        let mut eval = KostantEvaluator::new(3);
        let before = eval.partition_q(&vector(&[2, -1, -1])).unwrap();
        eval.clear_cache();
        assert_eq!(eval.partition_q(&vector(&[2, -1, -1])).unwrap(), before);
    }

    #[test]
    fn signed_permutations_of_small_ranks() {
        let one: Vec<_> = signed_permutations(1).collect();
        assert_eq!(one, vec![(vec![0], 1)]);

        let two: Vec<_> = signed_permutations(2).collect();
        assert_eq!(two, vec![(vec![0, 1], 1), (vec![1, 0], -1)]);

        let three: Vec<_> = signed_permutations(3).collect();
        assert_eq!(three.len(), 6);
        assert_eq!(three.iter().filter(|(_, s)| *s == 1).count(), 3);
        assert_eq!(three.iter().filter(|(_, s)| *s == -1).count(), 3);
        // Lexicographic and deterministic.
        let perms: Vec<_> = three.iter().map(|(p, _)| p.clone()).collect();
        let mut sorted = perms.clone();
        sorted.sort();
        assert_eq!(perms, sorted);
    }
}
