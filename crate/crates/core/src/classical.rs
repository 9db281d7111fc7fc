//! Unsigned Stirling numbers of the first kind, Stirling numbers of the
//! second kind, Lah numbers and Bell numbers.
//!
//! Triangles are built from their recurrences. The Lah explicit formula is
//! checked against a brute-force count over set partitions, and the
//! factorial polynomials used by the horizontal generating functions are
//! provided here as polynomials in `t`.

use crate::arith::{binomial, factorial, ExactInt, LaurentPoly};
use crate::error::{Error, Result};
use num_traits::{One, Zero};

/// Largest `n` accepted by [`lah_oracle`].
pub const ORACLE_LIMIT: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClassicalFamily {
    Stirling1u,
    Stirling2,
    Lah,
}

/// Lower-triangular table `rows[n][k]` for `0 <= k <= n <= n_max`.
#[derive(Debug, Clone, PartialEq)]
pub struct ClassicalTriangle {
    family: ClassicalFamily,
    rows: Vec<Vec<ExactInt>>,
}

impl ClassicalTriangle {
    pub fn build(family: ClassicalFamily, n_max: usize) -> Self {
        let mut rows: Vec<Vec<ExactInt>> = vec![vec![ExactInt::one()]];
        for n in 0..n_max {
            let prev = &rows[n];
            let at = |k: usize| prev.get(k).cloned().unwrap_or_else(ExactInt::zero);
            let row = (0..=n + 1)
                .map(|k| {
                    let left = if k == 0 { ExactInt::zero() } else { at(k - 1) };
                    let weight = match family {
                        ClassicalFamily::Stirling1u => n,
                        ClassicalFamily::Stirling2 => k,
                        ClassicalFamily::Lah => n + k,
                    };
                    left + at(k) * weight
                })
                .collect();
            rows.push(row);
        }
        Self { family, rows }
    }

    pub fn family(&self) -> ClassicalFamily {
        self.family
    }

    pub fn n_max(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn rows(&self) -> &[Vec<ExactInt>] {
        &self.rows
    }

    /// Entry at `(n, k)`, zero outside the triangle. Panics if `n > n_max`.
    pub fn get(&self, n: usize, k: usize) -> ExactInt {
        self.rows[n].get(k).cloned().unwrap_or_else(ExactInt::zero)
    }
}

fn triangle_entry(family: ClassicalFamily, n: usize, k: usize) -> ExactInt {
    if k > n {
        return ExactInt::zero();
    }
    ClassicalTriangle::build(family, n).get(n, k)
}

/// Number of permutations of an `n`-set with `k` cycles.
pub fn stirling1u(n: usize, k: usize) -> ExactInt {
    triangle_entry(ClassicalFamily::Stirling1u, n, k)
}

/// Number of partitions of an `n`-set into `k` nonempty blocks.
pub fn stirling2(n: usize, k: usize) -> ExactInt {
    triangle_entry(ClassicalFamily::Stirling2, n, k)
}

/// `L(n, k) = n!/k! * C(n-1, k-1)`, with `L(0, 0) = 1`.
pub fn lah(n: usize, k: usize) -> ExactInt {
    if n == 0 && k == 0 {
        return ExactInt::one();
    }
    if k == 0 || k > n {
        return ExactInt::zero();
    }
    factorial(n as u64) / factorial(k as u64) * binomial(n as u64 - 1, k as u64 - 1)
}

/// Calls `f` with every restricted growth string of length `n`.
///
/// A string `a` with `a[0] = 0` and `a[i] <= 1 + max(a[..i])` encodes the set
/// partition placing element `i` in block `a[i]`.
pub fn for_each_rgs(n: usize, mut f: impl FnMut(&[usize])) {
    if n == 0 {
        f(&[]);
        return;
    }
    let mut a = vec![0usize; n];
    // prefix maxima: m[i] = max(a[..=i])
    let mut m = vec![0usize; n];
    loop {
        f(&a);
        // find rightmost position that can be incremented
        let mut i = n - 1;
        while i > 0 && a[i] > m[i - 1] {
            i -= 1;
        }
        if i == 0 {
            return;
        }
        a[i] += 1;
        m[i] = m[i - 1].max(a[i]);
        for j in i + 1..n {
            a[j] = 0;
            m[j] = m[i];
        }
    }
}

/// Brute-force Lah count: enumerates partitions of `{1..n}` into `k` blocks
/// and weights each by the number of ways to order every block.
pub fn lah_oracle(n: usize, k: usize) -> Result<ExactInt> {
    if n > ORACLE_LIMIT {
        return Err(Error::ScaleExceeded {
            n,
            limit: ORACLE_LIMIT,
        });
    }
    let mut total = ExactInt::zero();
    let mut sizes = vec![0u64; n.max(1)];
    for_each_rgs(n, |a| {
        let blocks = a.iter().max().map_or(0, |m| m + 1);
        if blocks != k {
            return;
        }
        sizes.iter_mut().for_each(|s| *s = 0);
        for &b in a {
            sizes[b] += 1;
        }
        total += sizes[..blocks]
            .iter()
            .map(|&s| factorial(s))
            .product::<ExactInt>();
    });
    Ok(total)
}

/// Total number of partitions of an `n`-set.
pub fn bell(n: usize) -> ExactInt {
    ClassicalTriangle::build(ClassicalFamily::Stirling2, n).rows[n]
        .iter()
        .sum()
}

/// `t (t - α) (t - 2α) ... (t - (n-1)α)` as a polynomial in `t`.
///
/// `alpha = 1` gives the falling factorial, `alpha = -1` the rising one.
pub fn gen_factorial_poly(n: usize, alpha: i64) -> LaurentPoly {
    (0..n as i64)
        .map(|i| LaurentPoly::var() - LaurentPoly::from_int(i * alpha))
        .product()
}

/// `<t>_n = t (t+1) ... (t+n-1)`
pub fn rising_poly(n: usize) -> LaurentPoly {
    gen_factorial_poly(n, -1)
}

/// `(t)_n = t (t-1) ... (t-n+1)`
pub fn falling_poly(n: usize) -> LaurentPoly {
    gen_factorial_poly(n, 1)
}
