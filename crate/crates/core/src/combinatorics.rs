//! Exact combinatorial kernels: factorials, binomial coefficients with
//! arbitrary integer tops, unsigned Stirling cycle numbers, higher-order
//! harmonic numbers, and integer partitions in canonical
//! (part, multiplicity) form.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::rational::Rational;

pub fn factorial(n: usize) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= k;
    }
    acc
}

/// Binomial coefficient with an arbitrary integer top, by the multiplicative
/// falling-factorial formula. Each intermediate value is itself a binomial
/// coefficient, so every division below is exact. Cost is O(bottom) big-int
/// operations regardless of the top, which matters for tops like λn+m.
pub fn binomial<T: Into<BigInt>>(top: T, bottom: usize) -> BigInt {
    let top = top.into();
    let mut acc = BigInt::one();
    for i in 1..=bottom {
        // after this step acc = C(top - bottom + i, i)
        acc = acc * (&top - BigInt::from(bottom - i)) / i;
    }
    acc
}

/// Table of unsigned Stirling cycle numbers c(n,k) (first kind), built
/// bottom-up by c(n+1,k) = n·c(n,k) + c(n,k−1) and cached. Entries are exact
/// integers; rows run 0..=nmax.
#[derive(Clone, Debug)]
pub struct StirlingTriangle {
    rows: Vec<Vec<BigInt>>,
}

impl StirlingTriangle {
    pub fn new(nmax: usize) -> Self {
        let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(nmax + 1);
        rows.push(vec![BigInt::one()]);
        for n in 1..=nmax {
            let prev = &rows[n - 1];
            let mut row = vec![BigInt::zero(); n + 1];
            for k in 1..=n {
                let mut entry = prev[k - 1].clone();
                if k < n {
                    entry += (n - 1) * &prev[k];
                }
                row[k] = entry;
            }
            rows.push(row);
        }
        StirlingTriangle { rows }
    }

    pub fn nmax(&self) -> usize {
        self.rows.len() - 1
    }

    /// c(n,k); zero when k > n. Panics when the table does not cover n.
    pub fn cycle(&self, n: usize, k: usize) -> BigInt {
        assert!(n <= self.nmax(), "Stirling table built to {}, asked for n={}", self.nmax(), n);
        if k > n {
            BigInt::zero()
        } else {
            self.rows[n][k].clone()
        }
    }

    /// Adds 1 to a stored entry, breaking the defining recurrence.
    /// Exists to exercise the verification failure paths.
    pub fn perturb(&mut self, n: usize, k: usize) {
        assert!(n <= self.nmax() && k <= n, "no entry c({n},{k}) to perturb");
        self.rows[n][k] += 1;
    }
}

/// Exact higher-order harmonic numbers H_n^{(i)} for 1 ≤ i ≤ rmax,
/// 0 ≤ n ≤ nmax, filled by H_n^{(i)} = H_{n−1}^{(i)} + 1/n^i.
#[derive(Clone, Debug)]
pub struct HarmonicTable {
    // orders[i - 1][n] = H_n^{(i)}
    orders: Vec<Vec<Rational>>,
}

impl HarmonicTable {
    pub fn new(nmax: usize, rmax: usize) -> Self {
        assert!(rmax >= 1, "harmonic table needs at least order 1");
        let mut orders = Vec::with_capacity(rmax);
        for i in 1..=rmax {
            let mut values = Vec::with_capacity(nmax + 1);
            values.push(Rational::zero());
            for n in 1..=nmax {
                let term = Rational::new(1, BigInt::from(n).pow(i as u32));
                values.push(&values[n - 1] + term);
            }
            orders.push(values);
        }
        HarmonicTable { orders }
    }

    pub fn nmax(&self) -> usize {
        self.orders[0].len() - 1
    }

    pub fn rmax(&self) -> usize {
        self.orders.len()
    }

    /// H_n^{(order)}. Panics when (n, order) lies outside the table.
    pub fn harmonic(&self, n: usize, order: usize) -> Rational {
        assert!(
            order >= 1 && order <= self.rmax(),
            "harmonic order {} outside 1..={}",
            order,
            self.rmax()
        );
        assert!(n <= self.nmax(), "harmonic table built to {}, asked for n={}", self.nmax(), n);
        self.orders[order - 1][n].clone()
    }
}

/// A partition of `target` in canonical form: strictly decreasing parts with
/// positive multiplicities, Σ multiplicity·part = target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    target: u32,
    blocks: Vec<(u32, u32)>, // (part, multiplicity)
}

impl Partition {
    /// Collapses a non-increasing part list such as [2,1,1] into blocks.
    pub fn from_parts(parts: &[u32]) -> Self {
        assert!(parts.windows(2).all(|w| w[0] >= w[1]), "parts must be non-increasing");
        assert!(parts.iter().all(|&p| p > 0), "parts must be positive");
        let mut blocks: Vec<(u32, u32)> = Vec::new();
        for &p in parts {
            match blocks.last_mut() {
                Some((part, mult)) if *part == p => *mult += 1,
                _ => blocks.push((p, 1)),
            }
        }
        Partition { target: parts.iter().sum(), blocks }
    }

    pub fn target(&self) -> u32 {
        self.target
    }

    /// Blocks (part, multiplicity) with parts strictly decreasing.
    pub fn blocks(&self) -> &[(u32, u32)] {
        &self.blocks
    }

    /// Number of parts counted with multiplicity.
    pub fn part_count(&self) -> u32 {
        self.blocks.iter().map(|&(_, m)| m).sum()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for &(part, mult) in &self.blocks {
            if !first {
                write!(f, "+")?;
            }
            write!(f, "{mult}·{part}")?;
            first = false;
        }
        Ok(())
    }
}

/// All partitions of r, each exactly once, in lexicographically decreasing
/// order of the underlying part list ([4], [3,1], [2,2], [2,1,1], [1,1,1,1]
/// for r = 4). Recursive descent with a max-part bound, emitting canonical
/// form directly.
pub fn partitions_of(r: u32) -> Vec<Partition> {
    assert!(r >= 1, "partitions_of requires r >= 1");
    let mut out = Vec::new();
    let mut current = Vec::new();
    descend(r, r, &mut current, &mut out);
    out
}

fn descend(remaining: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition::from_parts(current));
        return;
    }
    let mut part = max_part.min(remaining);
    while part >= 1 {
        current.push(part);
        descend(remaining - part, part, current, out);
        current.pop();
        part -= 1;
    }
}
