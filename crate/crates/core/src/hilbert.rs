//! Hilbert functions, Hilbert series, and regularity of semigroup quotients.
//!
//! Two independent routes to the same numbers:
//!
//! * **Enumeration** — [`semigroup_hilbert`] counts distinct degree-`d`
//!   column sums of an exponent matrix.  No Groebner basis involved.
//! * **Series** — [`HilbertSeries::from_initial_ideal`] computes the
//!   K-polynomial of the initial ideal of a Groebner basis by the standard
//!   pivot recursion `K(M) = K(M + <x>) + t K(M : x)`, then cancels powers
//!   of `1 - t` to put the series in lowest terms `h(t) / (1-t)^d`.
//!
//! Expanding the series must reproduce the enumeration in every degree;
//! the verifier leans on that agreement.  On top of the series sit the
//! Hilbert polynomial, the Hilbertian test (function equals polynomial in
//! *all* degrees, including 0), and the regularity report.

use std::collections::HashSet;

use num_bigint::BigInt;

use crate::combinatorics::binomial;
use crate::cuts::ExponentMatrix;
use crate::engine::{GroebnerBasis, Monomial};

/// Number of distinct degree-`d` elements of the column semigroup: the
/// Hilbert function of the semigroup ring, computed by pure enumeration.
///
/// Repeated columns are collapsed first, so graphs whose partitions share
/// cut sets (disconnected graphs) cost no more than their distinct cuts.
pub fn semigroup_hilbert(m: &ExponentMatrix, degree: u32) -> u64 {
    if degree == 0 {
        return 1;
    }
    let mut cols: Vec<Vec<u32>> = (0..m.cols()).map(|j| m.column(j)).collect();
    cols.sort();
    cols.dedup();

    fn walk(
        cols: &[Vec<u32>],
        from: usize,
        left: u32,
        acc: &mut [u32],
        seen: &mut HashSet<Vec<u32>>,
    ) {
        if from == cols.len() {
            if left == 0 {
                seen.insert(acc.to_vec());
            }
            return;
        }
        let mut added = 0;
        loop {
            walk(cols, from + 1, left - added, acc, seen);
            if added == left {
                break;
            }
            for (a, c) in acc.iter_mut().zip(&cols[from]) {
                *a += c;
            }
            added += 1;
        }
        for (a, c) in acc.iter_mut().zip(&cols[from]) {
            *a -= added * c;
        }
    }

    let mut seen = HashSet::new();
    let mut acc = vec![0u32; m.rows()];
    walk(&cols, 0, degree, &mut acc, &mut seen);
    seen.len() as u64
}

// --- K-polynomial of a monomial ideal -------------------------------------

/// Drop generators divisible by another generator (and duplicates).
fn minimalize(gens: &[Monomial]) -> Vec<Monomial> {
    let mut sorted = gens.to_vec();
    sorted.sort_by_key(Monomial::degree);
    let mut kept: Vec<Monomial> = Vec::new();
    for m in sorted {
        if !kept.iter().any(|k| k.divides(&m)) {
            kept.push(m);
        }
    }
    kept
}

/// Split a minimal generating set into support-connected components.
fn components(gens: Vec<Monomial>) -> Vec<Vec<Monomial>> {
    let mut comps: Vec<(u64, Vec<Monomial>)> = Vec::new();
    for g in gens {
        let mut mask = g.support();
        let mut members = vec![g];
        let mut merged = Vec::new();
        for (m, mem) in comps {
            if m & mask != 0 {
                mask |= m;
                members.extend(mem);
            } else {
                merged.push((m, mem));
            }
        }
        merged.push((mask, members));
        comps = merged;
    }
    comps.into_iter().map(|(_, mem)| mem).collect()
}

fn poly_mul(a: &[i128], b: &[i128]) -> Vec<i128> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0i128; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// `a + t^shift * b`.
fn poly_add_shifted(mut a: Vec<i128>, b: &[i128], shift: usize) -> Vec<i128> {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, 0);
    }
    for (j, &y) in b.iter().enumerate() {
        a[j + shift] += y;
    }
    a
}

/// `1 - t^d`.
fn power_poly(d: u32) -> Vec<i128> {
    let mut p = vec![0i128; d as usize + 1];
    p[0] = 1;
    p[d as usize] = -1;
    p
}

fn trim(mut p: Vec<i128>) -> Vec<i128> {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

/// Numerator `K(t)` of the Hilbert series `K(t) / (1-t)^n` of `R/M` for the
/// monomial ideal `M` generated by `gens` (not assumed minimal).
fn k_polynomial(gens: &[Monomial]) -> Vec<i128> {
    k_rec(minimalize(gens))
}

/// Core recursion; `gens` must already be minimal.
fn k_rec(gens: Vec<Monomial>) -> Vec<i128> {
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(Monomial::is_one) {
        return vec![0];
    }
    let comps = components(gens);
    let mut k = vec![1i128];
    for comp in comps {
        k = poly_mul(&k, &k_component(comp));
    }
    k
}

/// One support-connected component of a minimal generating set.
fn k_component(gens: Vec<Monomial>) -> Vec<i128> {
    if gens.len() == 1 {
        return power_poly(gens[0].degree());
    }
    // Pivot on the variable appearing in the most generators:
    //   K(M) = K(M + <x>) + t K(M : x)
    // from the exact sequence 0 -> R/(M:x) -> R/M -> R/(M+<x>) -> 0.
    let n = gens[0].num_vars();
    let mut freq = vec![0usize; n];
    for g in &gens {
        for (v, f) in freq.iter_mut().enumerate() {
            if g.exp(v) > 0 {
                *f += 1;
            }
        }
    }
    let x = (0..n).max_by_key(|&v| freq[v]).expect("nonempty ring");
    let xm = Monomial::variable(x, n);

    // M + <x>: x is coprime to the surviving generators, factor 1 - t.
    let without: Vec<Monomial> = gens.iter().filter(|g| g.exp(x) == 0).cloned().collect();
    let plus = poly_mul(&[1, -1], &k_rec(without));

    // M : x needs re-minimalization.
    let colon: Vec<Monomial> = gens
        .iter()
        .map(|g| if g.exp(x) > 0 { g.div(&xm) } else { g.clone() })
        .collect();
    let colon = k_rec(minimalize(&colon));

    poly_add_shifted(plus, &colon, 1)
}

// --- Hilbert series --------------------------------------------------------

/// A Hilbert series in lowest terms, `h(t) / (1-t)^d` with `h(1) != 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertSeries {
    numerator: Vec<i128>,
    denominator_power: usize,
}

impl HilbertSeries {
    /// Series of `R/M` where `M` is generated by the given monomials in a
    /// polynomial ring with `num_vars` variables.
    pub fn from_initial_ideal(leads: &[Monomial], num_vars: usize) -> Self {
        for m in leads {
            assert_eq!(m.num_vars(), num_vars, "mixed ambient rings");
        }
        let mut k = trim(k_polynomial(leads));
        let mut cancels = 0usize;
        while !k.is_empty() && k.iter().sum::<i128>() == 0 {
            // exact division by 1 - t: prefix sums, dropping the final 0
            let mut acc = 0i128;
            k = k[..k.len() - 1]
                .iter()
                .map(|&c| {
                    acc += c;
                    acc
                })
                .collect();
            cancels += 1;
        }
        assert!(cancels <= num_vars, "cancelled more than the ring dimension");
        HilbertSeries {
            numerator: k,
            denominator_power: num_vars - cancels,
        }
    }

    /// Series of the quotient by the initial ideal of a Groebner basis.
    pub fn from_groebner(gb: &GroebnerBasis) -> Self {
        Self::from_initial_ideal(&gb.leading_monomials(), gb.num_vars())
    }

    /// The h-vector: coefficients of the numerator, constant term first.
    pub fn numerator(&self) -> &[i128] {
        &self.numerator
    }

    /// Krull dimension of the quotient (exponent of `1 - t` in lowest terms).
    pub fn denominator_power(&self) -> usize {
        self.denominator_power
    }

    /// Degree of the numerator polynomial (0 for the zero numerator).
    pub fn numerator_degree(&self) -> usize {
        self.numerator.len().saturating_sub(1)
    }

    /// `h(1)`: the degree of the projective variety the series came from.
    pub fn degree(&self) -> i128 {
        self.numerator.iter().sum()
    }

    /// Whether the h-vector reads the same backwards (the numerical
    /// signature of a Gorenstein quotient when the ring is Cohen-Macaulay).
    pub fn is_symmetric(&self) -> bool {
        let n = &self.numerator;
        (0..n.len() / 2).all(|i| n[i] == n[n.len() - 1 - i])
    }

    /// Exact value of the Hilbert function at degree `j` (series expansion).
    pub fn value_at(&self, j: u32) -> i128 {
        let d = self.denominator_power;
        let j = j as usize;
        let mut total = 0i128;
        for (k, &c) in self.numerator.iter().enumerate() {
            if k > j {
                break;
            }
            total += c * binom_i128(j - k + d.saturating_sub(1), d.saturating_sub(1), d == 0, j == k);
        }
        total
    }

    /// Values of the Hilbert function in degrees `0..=window`.
    pub fn values(&self, window: u32) -> Vec<i128> {
        (0..=window).map(|j| self.value_at(j)).collect()
    }

    /// Value of the Hilbert *polynomial* at `j` — the binomials are read as
    /// polynomials in `j`, without the low-degree truncation the true
    /// series expansion performs.
    pub fn polynomial_value(&self, j: u32) -> BigInt {
        if self.denominator_power == 0 {
            return BigInt::from(0);
        }
        let d = self.denominator_power as i64;
        let mut total = BigInt::from(0);
        for (k, &c) in self.numerator.iter().enumerate() {
            let top = BigInt::from(i64::from(j) - k as i64 + d - 1);
            total += BigInt::from(c) * binomial(&top, (d - 1) as usize);
        }
        total
    }

    /// Default comparison window: covers the whole numerator plus slack.
    pub fn default_window(&self) -> u32 {
        (self.numerator_degree() as u32 + 2).max(4)
    }
}

/// `C(n, r)` for the series expansion.  The flags handle the dimension-zero
/// series, where the only term surviving at degree `j` is the numerator
/// coefficient itself (`k == j`).
fn binom_i128(n: usize, r: usize, dim_zero: bool, diagonal: bool) -> i128 {
    if dim_zero {
        return i128::from(diagonal);
    }
    let r = r.min(n - r);
    let mut acc = 1i128;
    for i in 0..r {
        acc = acc * (n - i) as i128 / (i + 1) as i128;
    }
    acc
}

/// Function equals polynomial in every degree `0..=window`.  Degrees past
/// the numerator always agree, so any window covering the numerator decides.
pub fn is_hilbertian(series: &HilbertSeries, window: u32) -> bool {
    (0..=window).all(|j| BigInt::from(series.value_at(j)) == series.polynomial_value(j))
}

// --- Tabulated Hilbert functions -------------------------------------------

/// Where a table of Hilbert function values came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableSource {
    /// Counting distinct column sums of the exponent matrix.
    Enumeration,
    /// Expanding a Hilbert series.
    SeriesExpansion,
}

impl TableSource {
    pub fn label(self) -> &'static str {
        match self {
            TableSource::Enumeration => "enumeration",
            TableSource::SeriesExpansion => "series",
        }
    }
}

/// Hilbert function values in degrees `0..=window`, tagged with their route.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertFunctionTable {
    source: TableSource,
    values: Vec<i128>,
}

impl HilbertFunctionTable {
    pub fn from_enumeration(m: &ExponentMatrix, window: u32) -> Self {
        HilbertFunctionTable {
            source: TableSource::Enumeration,
            values: (0..=window).map(|d| semigroup_hilbert(m, d) as i128).collect(),
        }
    }

    pub fn from_series(series: &HilbertSeries, window: u32) -> Self {
        HilbertFunctionTable {
            source: TableSource::SeriesExpansion,
            values: series.values(window),
        }
    }

    pub fn source(&self) -> TableSource {
        self.source
    }

    pub fn values(&self) -> &[i128] {
        &self.values
    }

    pub fn value(&self, degree: u32) -> i128 {
        self.values[degree as usize]
    }

    /// Same values, regardless of how either table was produced.
    pub fn matches(&self, other: &HilbertFunctionTable) -> bool {
        self.values == other.values
    }
}

// --- Regularity -------------------------------------------------------------

/// Castelnuovo-Mumford regularity read off the series, with the edge bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegularityReport {
    /// Degree of the h-vector numerator (regularity of the coordinate ring).
    pub numerator_degree: usize,
    /// Regularity of the projective variety: numerator degree plus one.
    pub regularity: usize,
    /// The bound `|E| + 1` it is checked against.
    pub edge_bound: usize,
    pub within_bound: bool,
}

/// Regularity of the variety behind `series`, checked against `|E| + 1`.
pub fn regularity(series: &HilbertSeries, edge_count: usize) -> RegularityReport {
    let numerator_degree = series.numerator_degree();
    let regularity = numerator_degree + 1;
    RegularityReport {
        numerator_degree,
        regularity,
        edge_bound: edge_count + 1,
        within_bound: regularity <= edge_count + 1,
    }
}
