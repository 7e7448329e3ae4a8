//! Brute-force ground truth at `λ = 0`: permutation statistics and the
//! classical Eulerian, Stirling and Bernoulli triangles.
//!
//! Nothing here touches the λ-polynomial machinery.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::algebra::{binomial, Rational};

/// Largest `n` whose `n!` permutations are enumerated.
pub const MAX_PERMUTATION_N: usize = 9;

/// Largest row of the classical triangles.
pub const MAX_CLASSICAL_N: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("permutation enumeration needs 1 <= n <= {MAX_PERMUTATION_N}, got {0}")]
    PermutationBound(usize),
    #[error("classical triangles are limited to n_max <= {MAX_CLASSICAL_N}, got {0}")]
    ClassicalBound(usize),
}

/// `counts[k]` = number of permutations of `{1..n}` with statistic `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermStatDistribution {
    pub n: usize,
    pub counts: Vec<u64>,
}

impl PermStatDistribution {
    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }
}

/// Lexicographic successor in place; `false` once `perm` is the last
/// permutation.
fn next_permutation(perm: &mut [usize]) -> bool {
    let Some(i) = perm.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = perm.iter().rposition(|&v| v > perm[i]).unwrap();
    perm.swap(i, j);
    perm[i + 1..].reverse();
    true
}

fn distribution(
    n: usize,
    stat: impl Fn(&[usize]) -> usize,
) -> Result<PermStatDistribution, OracleError> {
    if !(1..=MAX_PERMUTATION_N).contains(&n) {
        return Err(OracleError::PermutationBound(n));
    }
    let mut counts = vec![0u64; n];
    let mut perm: Vec<usize> = (1..=n).collect();
    loop {
        counts[stat(&perm)] += 1;
        if !next_permutation(&mut perm) {
            break;
        }
    }
    Ok(PermStatDistribution { n, counts })
}

/// Distribution of `d(σ) = #{i < n : σ(i) > σ(i+1)}`.
pub fn descent_distribution(n: usize) -> Result<PermStatDistribution, OracleError> {
    distribution(n, |p| p.windows(2).filter(|w| w[0] > w[1]).count())
}

/// Distribution of `#{i < n : σ(i) < σ(i+1)}`, the count of elements larger
/// than their predecessor.
pub fn ascent_distribution(n: usize) -> Result<PermStatDistribution, OracleError> {
    distribution(n, |p| p.windows(2).filter(|w| w[0] < w[1]).count())
}

/// Distribution of `e(σ) = #{i < n : σ(i) > i}` (1-based positions).
pub fn excedance_distribution(n: usize) -> Result<PermStatDistribution, OracleError> {
    distribution(n, |p| {
        p.iter()
            .take(p.len() - 1)
            .enumerate()
            .filter(|&(i, &v)| v > i + 1)
            .count()
    })
}

/// Classical (`λ = 0`) reference tables, rows `0..=n_max`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassicalTables {
    /// `A(n,k)`, `0 ≤ k ≤ n`.
    pub eulerian: Vec<Vec<BigInt>>,
    /// Signed `S_1(n,k)`, the coefficients of `(x)_n` in powers of `x`.
    pub stirling1: Vec<Vec<BigInt>>,
    /// `{n brace k}`.
    pub stirling2: Vec<Vec<BigInt>>,
    /// `B_n` with `B_1 = −1/2`.
    pub bernoulli: Vec<Rational>,
}

pub fn classical_triangles(n_max: usize) -> Result<ClassicalTables, OracleError> {
    if n_max > MAX_CLASSICAL_N {
        return Err(OracleError::ClassicalBound(n_max));
    }

    // Integer alternating sum of powers; the recursion is left for the
    // caller to check against.
    let eulerian = (0..=n_max)
        .map(|n| {
            (0..=n)
                .map(|k| {
                    (0..=k).fold(BigInt::zero(), |acc, i| {
                        let term = binomial(n as u64 + 1, i as u64)
                            * num_traits::pow(BigInt::from(k - i + 1), n);
                        if i % 2 == 0 {
                            acc + term
                        } else {
                            acc - term
                        }
                    })
                })
                .collect()
        })
        .collect();

    let mut stirling1: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
    let mut stirling2: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
    for n in 1..=n_max {
        let (p1, p2) = (&stirling1[n - 1], &stirling2[n - 1]);
        let at = |row: &Vec<BigInt>, k: usize| row.get(k).cloned().unwrap_or_default();
        let mut r1 = Vec::with_capacity(n + 1);
        let mut r2 = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let prev_left = |row| {
                if k == 0 {
                    BigInt::zero()
                } else {
                    at(row, k - 1)
                }
            };
            r1.push(prev_left(p1) - BigInt::from(n - 1) * at(p1, k));
            r2.push(prev_left(p2) + BigInt::from(k) * at(p2, k));
        }
        stirling1.push(r1);
        stirling2.push(r2);
    }

    let mut bernoulli = vec![Rational::one()];
    for n in 1..=n_max {
        let s: Rational = bernoulli
            .iter()
            .enumerate()
            .map(|(k, b)| b * &Rational::from(binomial(n as u64 + 1, k as u64)))
            .sum();
        bernoulli.push(-s / Rational::from(n + 1));
    }

    Ok(ClassicalTables {
        eulerian,
        stirling1,
        stirling2,
        bernoulli,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn descent_examples() {
        assert_eq!(descent_distribution(3).unwrap().counts, vec![1, 4, 1]);
        assert_eq!(descent_distribution(1).unwrap().counts, vec![1]);
        assert_eq!(descent_distribution(4).unwrap().counts, vec![1, 11, 11, 1]);
    }

    #[test]
    fn excedance_examples() {
        assert_eq!(excedance_distribution(3).unwrap().counts, vec![1, 4, 1]);
        assert_eq!(excedance_distribution(1).unwrap().counts, vec![1]);
        assert_eq!(excedance_distribution(2).unwrap().counts, vec![1, 1]);
    }

    #[test]
    fn statistics_are_equidistributed() {
        for n in 1..=7 {
            let d = descent_distribution(n).unwrap();
            assert_eq!(d, excedance_distribution(n).unwrap());
            assert_eq!(d, ascent_distribution(n).unwrap());
            let fact: u64 = (1..=n as u64).product();
            assert_eq!(d.total(), fact);
        }
    }

    #[test]
    fn enumeration_bounds() {
        assert_eq!(
            descent_distribution(0),
            Err(OracleError::PermutationBound(0))
        );
        assert_eq!(
            excedance_distribution(10),
            Err(OracleError::PermutationBound(10))
        );
        assert!(descent_distribution(10)
            .unwrap_err()
            .to_string()
            .contains("1 <= n <= 9"));
        assert!(classical_triangles(21).is_err());
    }

    #[test]
    fn classical_examples() {
        let t = classical_triangles(6).unwrap();
        assert_eq!(t.eulerian[3], ints(&[1, 4, 1, 0]));
        assert_eq!(t.stirling2[4], ints(&[0, 1, 7, 6, 1]));
        assert_eq!(t.stirling1[3], ints(&[0, 2, -3, 1]));
        assert_eq!(t.bernoulli[1], "-1/2".parse().unwrap());
        assert_eq!(t.bernoulli[6], "1/42".parse().unwrap());
        // Worpitzky at n = 2, x = 3: C(3,2)·1 + C(4,2)·1 = 9
        let w: BigInt = (0..=2)
            .map(|k| &t.eulerian[2][k] * binomial(3 + k as u64, 2))
            .sum();
        assert_eq!(w, BigInt::from(9));
    }

    #[test]
    fn classical_eulerian_satisfies_two_term_recursion() {
        let t = classical_triangles(15).unwrap();
        let a = |n: usize, k: i64| -> BigInt {
            usize::try_from(k)
                .ok()
                .and_then(|k| t.eulerian[n].get(k).cloned())
                .unwrap_or_default()
        };
        for n in 1..=15usize {
            for k in 0..=n as i64 {
                let expected = BigInt::from(n as i64 - k) * a(n - 1, k - 1)
                    + BigInt::from(k + 1) * a(n - 1, k);
                assert_eq!(a(n, k), expected, "A({n},{k})");
            }
        }
    }
}
