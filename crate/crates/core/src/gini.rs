//! The discrete Gini index of an integer partition and its Lorenz curve.
//!
//! All values are exact integers: the Gini index of a partition of nk with
//! at most n parts is the lattice area between the line of equality (the
//! Lorenz curve of the flat partition (k^n)) and the partition's own
//! Lorenz curve. Nothing is normalized.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::Partition;

/// n choose 2.
fn choose2(n: u64) -> u64 {
    n * (n - 1) / 2
}

/// The weighted total b(lambda) = sum_i (i-1) * lambda_i.
pub fn weighted_total(lambda: &Partition) -> u64 {
    lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| i as u64 * p)
        .sum()
}

/// Gini index of a partition of n into n parts (zero-padded):
/// C(n,2) - b(lambda).
pub fn gini(lambda: &Partition) -> Result<u64> {
    let n = lambda.len() as u64;
    if lambda.total() != n {
        return Err(Error::invalid(format!(
            "gini needs a partition of {n} with {n} parts, got {lambda} of total {}",
            lambda.total()
        )));
    }
    Ok(choose2(n) - weighted_total(lambda))
}

/// Generalized Gini index g_{nk,n}(lambda) = b((k^n)) - b(lambda) for a
/// partition of n*k with at most n parts.
pub fn gini_general(lambda: &Partition, n: usize, k: u64) -> Result<u64> {
    let lambda = check_distribution(lambda, n, k)?;
    Ok(k * choose2(n as u64) - weighted_total(&lambda))
}

fn check_distribution(lambda: &Partition, n: usize, k: u64) -> Result<Partition> {
    let lambda = lambda.padded(n)?;
    let expected = n as u64 * k;
    if lambda.total() != expected {
        return Err(Error::invalid(format!(
            "expected a partition of {n}*{k} = {expected}, got {lambda} of total {}",
            lambda.total()
        )));
    }
    Ok(lambda)
}

/// Step-function samples of the discrete Lorenz curve: the value at step j
/// is the combined wealth of the j poorest parts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct LorenzCurve {
    samples: Vec<(u64, u64)>,
}

impl LorenzCurve {
    /// The (j, value) samples for j = 0..=n.
    pub fn samples(&self) -> &[(u64, u64)] {
        &self.samples
    }

    /// One `j,value` row per sample; `header` prepends a `j,value` line.
    pub fn to_csv(&self, header: bool) -> String {
        let mut out = String::new();
        if header {
            out.push_str("j,value\n");
        }
        for (j, v) in &self.samples {
            out.push_str(&format!("{j},{v}\n"));
        }
        out
    }
}

/// The discrete Lorenz curve of a partition, sampled at j = 0..=n.
pub fn lorenz_curve(lambda: &Partition) -> LorenzCurve {
    let mut samples = Vec::with_capacity(lambda.len() + 1);
    let mut acc = 0u64;
    samples.push((0, 0));
    for (j, &part) in lambda.parts().iter().rev().enumerate() {
        acc += part;
        samples.push((j as u64 + 1, acc));
    }
    LorenzCurve { samples }
}

/// Gini index computed as the area between the line of equality and the
/// Lorenz curve, summed step by step. Agrees with [`gini_general`] on every
/// valid input; kept as an independent route.
pub fn gini_via_area(lambda: &Partition, n: usize, k: u64) -> Result<u64> {
    let lambda = check_distribution(lambda, n, k)?;
    let curve = lorenz_curve(&lambda);
    Ok(curve
        .samples()
        .iter()
        .skip(1)
        .map(|&(j, value)| j * k - value)
        .sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{partitions_of, IntVector};

    fn partition(parts: &[u64]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn weighted_totals() {
        assert_eq!(weighted_total(&partition(&[3, 1, 1, 0, 0])), 3);
        assert_eq!(weighted_total(&partition(&[3, 3, 3, 3, 3])), 30);
        assert_eq!(weighted_total(&partition(&[0, 0, 0])), 0);
    }

    #[test]
    fn gini_values() {
        assert_eq!(gini(&partition(&[3, 1, 1, 0, 0])).unwrap(), 7);
        assert_eq!(gini(&partition(&[1, 1, 1, 1, 1])).unwrap(), 0);
        assert_eq!(gini(&partition(&[5, 0, 0, 0, 0])).unwrap(), 10);
    }

    #[test]
    fn gini_rejects_total_length_mismatch() {
        assert!(gini(&partition(&[3, 1])).is_err());
    }

    #[test]
    fn gini_matches_unsimplified_form() {
        // C(n+1,2) - sum i*lambda_i gives the same index.
        for n in 1..=8u64 {
            for lambda in partitions_of(n, n as usize) {
                let direct: u64 = choose2(n + 1)
                    - lambda
                        .parts()
                        .iter()
                        .enumerate()
                        .map(|(i, &p)| (i as u64 + 1) * p)
                        .sum::<u64>();
                assert_eq!(gini(&lambda).unwrap(), direct, "lambda={lambda}");
            }
        }
    }

    #[test]
    fn gini_general_values() {
        assert_eq!(
            gini_general(&partition(&[6, 4, 3, 1, 1]), 5, 3).unwrap(),
            13
        );
        assert_eq!(gini_general(&partition(&[3, 3, 3, 3, 3]), 5, 3).unwrap(), 0);
        assert_eq!(gini_general(&partition(&[3, 1, 1, 0, 0]), 5, 1).unwrap(), 7);
    }

    #[test]
    fn gini_general_rejects_wrong_total() {
        assert!(gini_general(&partition(&[6, 4, 3, 1, 1]), 5, 2).is_err());
        assert!(gini_general(&partition(&[6, 4, 3, 1, 1, 1]), 5, 3).is_err());
    }

    #[test]
    fn lorenz_curves() {
        assert_eq!(
            lorenz_curve(&partition(&[3, 1, 1, 0, 0])).samples(),
            &[(0, 0), (1, 0), (2, 0), (3, 1), (4, 2), (5, 5)]
        );
        assert_eq!(
            lorenz_curve(&partition(&[1, 1, 1, 1, 1])).samples(),
            &[(0, 0), (1, 1), (2, 2), (3, 3), (4, 4), (5, 5)]
        );
        assert_eq!(
            lorenz_curve(&partition(&[6, 4, 3, 1, 1])).samples(),
            &[(0, 0), (1, 1), (2, 2), (3, 5), (4, 9), (5, 15)]
        );
    }

    #[test]
    fn area_route_values() {
        assert_eq!(
            gini_via_area(&partition(&[6, 4, 3, 1, 1]), 5, 3).unwrap(),
            13
        );
        assert_eq!(gini_via_area(&partition(&[2, 2, 2, 2]), 4, 2).unwrap(), 0);
        assert_eq!(
            gini_via_area(&partition(&[3, 1, 1, 0, 0]), 5, 1).unwrap(),
            7
        );
    }

    #[test]
    fn area_and_formula_agree_everywhere() {
        for n in 1..=5usize {
            for k in 0..=3u64 {
                for lambda in partitions_of(n as u64 * k, n) {
                    let formula = gini_general(&lambda, n, k).unwrap();
                    let area = gini_via_area(&lambda, n, k).unwrap();
                    assert_eq!(formula, area, "lambda={lambda} n={n} k={k}");
                    // Zero exactly on the flat partition.
                    assert_eq!(formula == 0, lambda == Partition::flat(k, n));
                }
            }
        }
    }

    #[test]
    fn lorenz_curve_stays_below_line_of_equality() {
        for n in 1..=5usize {
            for k in 1..=3u64 {
                for lambda in partitions_of(n as u64 * k, n) {
                    for &(j, value) in lorenz_curve(&lambda).samples() {
                        assert!(value <= j * k, "lambda={lambda} j={j}");
                    }
                }
            }
        }
    }

    #[test]
    fn gini_specializes_at_k_equals_one() {
        for n in 1..=7usize {
            for lambda in partitions_of(n as u64, n) {
                assert_eq!(gini(&lambda).unwrap(), gini_general(&lambda, n, 1).unwrap());
            }
        }
    }

    #[test]
    fn gini_is_independent_of_the_flat_shift() {
        let cases = [
            vec![1, 0, -1],
            vec![2, -1, -1],
            vec![3, 1, 0, -2, -2],
            vec![0, 0, 0, 0],
            vec![2, 2, -1, -3],
        ];
        for entries in cases {
            let alpha = IntVector::new(entries);
            let n = alpha.len();
            let k_min = alpha.entries().last().unwrap().unsigned_abs();
            let baseline = gini_general(&alpha.plus_flat(k_min).unwrap(), n, k_min).unwrap();
            for k in k_min + 1..=k_min + 3 {
                let lambda = alpha.plus_flat(k).unwrap();
                assert_eq!(
                    gini_general(&lambda, n, k).unwrap(),
                    baseline,
                    "alpha={alpha} k={k}"
                );
            }
        }
    }

    #[test]
    fn lorenz_csv_and_json() {
        let curve = lorenz_curve(&partition(&[3, 1, 1, 0, 0]));
        assert_eq!(curve.to_csv(false), "0,0\n1,0\n2,0\n3,1\n4,2\n5,5\n");
        assert!(curve.to_csv(true).starts_with("j,value\n"));
        assert_eq!(
            serde_json::to_string(&curve).unwrap(),
            "[[0,0],[1,0],[2,0],[3,1],[4,2],[5,5]]"
        );
    }
}
