//! Stirling and Eulerian numbers and the closed-form counts built on them.
//!
//! These are the arithmetic side of the toolkit: generator counts for cut
//! ideals of cycles and trees, and degree-2 Hilbert values for claw trees,
//! all as explicit formulas.  The toric engine computes the same numbers
//! from scratch, so the two routes check each other.  Everything uses
//! arbitrary-precision integers; tables are built by the standard
//! recurrences and the closed forms are verified against them in tests.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Stirling numbers of the second kind `S(n, k)`: partitions of an n-set
/// into k nonempty blocks.  Row `n` holds `S(n, 0) ..= S(n, n)`.
#[derive(Debug, Clone)]
pub struct StirlingTable {
    rows: Vec<Vec<BigInt>>,
}

impl StirlingTable {
    /// Build rows `0..=n_max` by the recurrence
    /// `S(n, k) = k * S(n-1, k) + S(n-1, k-1)`.
    pub fn up_to(n_max: usize) -> Self {
        let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(n_max + 1);
        rows.push(vec![BigInt::one()]); // S(0, 0) = 1
        for n in 1..=n_max {
            let prev = &rows[n - 1];
            let mut row = vec![BigInt::zero(); n + 1];
            for k in 1..=n {
                let carry = if k <= n - 1 {
                    BigInt::from(k) * &prev[k]
                } else {
                    BigInt::zero()
                };
                row[k] = carry + &prev[k - 1];
            }
            rows.push(row);
        }
        StirlingTable { rows }
    }

    /// `S(n, k)`; zero outside the triangle.
    pub fn get(&self, n: usize, k: usize) -> BigInt {
        self.rows
            .get(n)
            .and_then(|row| row.get(k))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }
}

/// `S(n, k)` via a fresh table.  Convenient for one-off values.
pub fn stirling2(n: usize, k: usize) -> BigInt {
    StirlingTable::up_to(n).get(n, k)
}

/// Closed form for `S(n, 4) = (4^n - 4*3^n + 6*2^n - 4) / 24`.
///
/// Inclusion-exclusion over surjections onto 4 blocks; the division is
/// exact.  Zero for `n < 4`.
pub fn stirling2_k4_closed(n: usize) -> BigInt {
    if n < 4 {
        return BigInt::zero();
    }
    let four = BigInt::from(4u32).pow(n as u32);
    let three = BigInt::from(3u32).pow(n as u32);
    let two = BigInt::from(2u32).pow(n as u32);
    (four - 4 * three + 6 * two - 4) / 24
}

/// Eulerian numbers `A(n, k)`: permutations of `1..=n` with exactly `k - 1`
/// descents.  Row `n` is indexed `1..=n` (the classical "h-vector" indexing
/// where row `n` sums to `n!`).
#[derive(Debug, Clone)]
pub struct EulerianTable {
    rows: Vec<Vec<BigInt>>,
}

impl EulerianTable {
    /// Build rows `1..=n_max` by
    /// `A(n, k) = (n - k + 1) * A(n-1, k-1) + k * A(n-1, k)`.
    pub fn up_to(n_max: usize) -> Self {
        let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(n_max + 1);
        rows.push(Vec::new()); // row 0 unused
        if n_max >= 1 {
            rows.push(vec![BigInt::one()]); // A(1, 1) = 1
        }
        for n in 2..=n_max {
            let prev = rows[n - 1].clone();
            let at = |k: usize| -> BigInt {
                if (1..=n - 1).contains(&k) {
                    prev[k - 1].clone()
                } else {
                    BigInt::zero()
                }
            };
            let mut row = Vec::with_capacity(n);
            for k in 1..=n {
                row.push(BigInt::from(n - k + 1) * at(k - 1) + BigInt::from(k) * at(k));
            }
            rows.push(row);
        }
        EulerianTable { rows }
    }

    /// `A(n, k)` for `1 <= k <= n`; zero outside.
    pub fn get(&self, n: usize, k: usize) -> BigInt {
        if n == 0 || k == 0 {
            return BigInt::zero();
        }
        self.rows
            .get(n)
            .and_then(|row| row.get(k - 1))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    /// Row `n` as `[A(n,1), ..., A(n,n)]`.
    pub fn row(&self, n: usize) -> Vec<BigInt> {
        self.rows.get(n).cloned().unwrap_or_default()
    }
}

/// `A(n, k)` via a fresh table.
pub fn eulerian(n: usize, k: usize) -> BigInt {
    EulerianTable::up_to(n).get(n, k)
}

/// Number of minimal generators of the cut ideal of an n-cycle:
/// `3 * S(n, 4)`.  Zero for the triangle, 3 for the square, 30 for the
/// pentagon.
pub fn cycle_generator_count(cycle_len: usize) -> BigInt {
    3 * stirling2_k4_closed(cycle_len)
}

/// Number of minimal generators (all quadrics) of the cut ideal of any tree
/// with `n_edges` edges: `2*4^(n-1) + 2^(n-1) - 3^n`.
pub fn tree_generator_count(n_edges: usize) -> BigInt {
    assert!(n_edges >= 1, "a tree needs at least one edge");
    let n = n_edges as u32;
    2 * BigInt::from(4u32).pow(n - 1) + BigInt::from(2u32).pow(n - 1) - BigInt::from(3u32).pow(n)
}

/// Degree-2 Hilbert value of the claw-tree semigroup ring on `n` leaves:
/// `h_n(2) = (3 * 3^n + 1) / 2 - 2^n`.
pub fn claw_hilbert_degree2(n: usize) -> BigInt {
    let three = BigInt::from(3u32).pow(n as u32);
    let two = BigInt::from(2u32).pow(n as u32);
    (3 * three + 1) / 2 - two
}

/// The same degree-2 value by the dimension recursion
/// `h_n(2) = h_{n-1}(2) + 3^n - 2^(n-1)` with base `h_1(2) = 3`.
///
/// Independent of [`claw_hilbert_degree2`]; the two must agree.
pub fn claw_hilbert_degree2_by_recursion(n: usize) -> BigInt {
    assert!(n >= 1);
    let mut h = BigInt::from(3u32); // h_1(2): three monomials in one pair of coordinates
    for m in 2..=n {
        h += BigInt::from(3u32).pow(m as u32) - BigInt::from(2u32).pow(m as u32 - 1);
    }
    h
}

/// Hilbert function of the cut ideal of a tree with `n_edges` edges:
/// `h(i) = (i + 1)^n_edges`.
pub fn tree_hilbert(n_edges: usize, i: usize) -> BigInt {
    BigInt::from(i + 1).pow(n_edges as u32)
}

/// Binomial coefficient `C(n, k)` for nonnegative `n`.
pub fn binomial(n: &BigInt, k: usize) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= n - BigInt::from(i);
        den *= BigInt::from(i + 1);
    }
    num / den
}
