//! Translated Whitney numbers of both kinds, translated Whitney-Lah numbers,
//! translated Dowling numbers and the Mansour generic recurrence.
//!
//! Triangles are memoized per `(family, alpha)` in a process-wide cache. A
//! request beyond the cached size rebuilds the table under the write lock;
//! readers only ever see complete tables.

use crate::arith::{
    binomial, factorial, int_pow, int_to_rat, rat, rising_at, sign_pow, ExactInt, ExactRat,
    TruncSeries,
};
use crate::classical::lah;
use crate::error::{Error, Result};
use num_traits::{One, ToPrimitive, Zero};
use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WhitneyFamily {
    /// translated Whitney numbers of the first kind
    First,
    /// translated Whitney numbers of the second kind
    Second,
    /// translated Whitney-Lah numbers
    Lah,
}

#[derive(Debug, Clone, PartialEq)]
pub struct WhitneyTriangle {
    family: WhitneyFamily,
    alpha: u32,
    rows: Vec<Vec<ExactInt>>,
}

impl WhitneyTriangle {
    pub fn build(family: WhitneyFamily, alpha: i64, n_max: usize) -> Result<Self> {
        let a = check_alpha(alpha)?;
        let mut rows: Vec<Vec<ExactInt>> = vec![vec![ExactInt::one()]];
        for n in 1..=n_max {
            let prev = &rows[n - 1];
            let at = |k: usize| prev.get(k).cloned().unwrap_or_else(ExactInt::zero);
            let row = (0..=n)
                .map(|k| {
                    let left = if k == 0 { ExactInt::zero() } else { at(k - 1) };
                    let weight = a as u64
                        * match family {
                            WhitneyFamily::First => n as u64 - 1,
                            WhitneyFamily::Second => k as u64,
                            WhitneyFamily::Lah => (n + k) as u64 - 1,
                        };
                    left + at(k) * weight
                })
                .collect();
            rows.push(row);
        }
        Ok(Self {
            family,
            alpha: a,
            rows,
        })
    }

    pub fn family(&self) -> WhitneyFamily {
        self.family
    }

    pub fn alpha(&self) -> u32 {
        self.alpha
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

fn check_alpha(alpha: i64) -> Result<u32> {
    if alpha < 1 || alpha > u32::MAX as i64 {
        return Err(Error::InvalidAlpha(alpha));
    }
    Ok(alpha as u32)
}

type Cache = RwLock<HashMap<(WhitneyFamily, u32), Arc<WhitneyTriangle>>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Shared triangle covering at least rows `0..=n`.
pub fn triangle(family: WhitneyFamily, alpha: i64, n: usize) -> Result<Arc<WhitneyTriangle>> {
    let a = check_alpha(alpha)?;
    let key = (family, a);
    if let Some(t) = cache().read().unwrap().get(&key) {
        if t.n_max() >= n {
            return Ok(Arc::clone(t));
        }
    }
    let mut guard = cache().write().unwrap();
    if let Some(t) = guard.get(&key) {
        if t.n_max() >= n {
            return Ok(Arc::clone(t));
        }
    }
    let t = Arc::new(WhitneyTriangle::build(family, alpha, n.max(16))?);
    guard.insert(key, Arc::clone(&t));
    Ok(t)
}

fn entry(family: WhitneyFamily, alpha: i64, n: usize, k: usize) -> Result<ExactInt> {
    let t = triangle(family, alpha, n)?;
    Ok(t.get(n, k))
}

/// Translated Whitney number of the first kind, by
/// `w(n,k) = w(n-1,k-1) + α(n-1) w(n-1,k)`.
pub fn tw1(alpha: i64, n: usize, k: usize) -> Result<ExactInt> {
    entry(WhitneyFamily::First, alpha, n, k)
}

/// Translated Whitney number of the second kind, by
/// `W(n,k) = W(n-1,k-1) + αk W(n-1,k)`.
pub fn tw2(alpha: i64, n: usize, k: usize) -> Result<ExactInt> {
    entry(WhitneyFamily::Second, alpha, n, k)
}

/// `W(n,k) = 1/(α^k k!) Σ_j (-1)^(k-j) C(k,j) (αj)^n`
pub fn tw2_explicit(alpha: i64, n: usize, k: usize) -> Result<ExactInt> {
    let a = check_alpha(alpha)? as i64;
    if k > n {
        return Ok(ExactInt::zero());
    }
    let sum: ExactInt = (0..=k)
        .map(|j| {
            sign_pow((k - j) as i64)
                * binomial(k as u64, j as u64)
                * int_pow(a * j as i64, n as u32)
        })
        .sum();
    Ok(sum / (int_pow(a, k as u32) * factorial(k as u64)))
}

/// Route used to evaluate a translated Whitney-Lah number.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TwlMethod {
    /// `ŵ(n,k) = ŵ(n-1,k-1) + α(n+k-1) ŵ(n-1,k)`
    Recurrence,
    /// `α^(n-k)/k! Σ_j (-1)^(k-j) C(k,j) <j>_n`
    Explicit,
    /// `α^(n-k) n!/k! C(n-1, n-k)`
    Product,
    /// `α^(n-k) L(n,k)`
    Scaled,
}

impl TwlMethod {
    pub const ALL: [TwlMethod; 4] = [
        TwlMethod::Recurrence,
        TwlMethod::Explicit,
        TwlMethod::Product,
        TwlMethod::Scaled,
    ];
}

/// Translated Whitney-Lah number `ŵ_(α)(n, k)`.
pub fn twl(alpha: i64, n: usize, k: usize, method: TwlMethod) -> Result<ExactInt> {
    let a = check_alpha(alpha)? as i64;
    if method == TwlMethod::Recurrence {
        return entry(WhitneyFamily::Lah, alpha, n, k);
    }
    if k > n {
        return Ok(ExactInt::zero());
    }
    let scale = int_pow(a, (n - k) as u32);
    let v = match method {
        TwlMethod::Recurrence => unreachable!(),
        TwlMethod::Explicit => {
            let sum: ExactInt = (0..=k)
                .map(|j| {
                    sign_pow((k - j) as i64)
                        * binomial(k as u64, j as u64)
                        * rising_at(j as i64, n as u64)
                })
                .sum();
            scale * sum / factorial(k as u64)
        }
        TwlMethod::Product => {
            if n == 0 {
                ExactInt::one()
            } else {
                scale * factorial(n as u64) / factorial(k as u64)
                    * binomial(n as u64 - 1, (n - k) as u64)
            }
        }
        TwlMethod::Scaled => scale * lah(n, k),
    };
    Ok(v)
}

/// Sequences `(a_i)` and `(b_i)` of the generic recurrence
/// `u(n,k) = u(n-1,k-1) + (a_{n-1} + b_k) u(n-1,k)`.
#[derive(Debug, Clone, PartialEq)]
pub struct MansourSpec {
    pub a: Vec<ExactRat>,
    pub b: Vec<ExactRat>,
}

impl MansourSpec {
    pub fn from_fns(
        len: usize,
        a: impl Fn(usize) -> ExactRat,
        b: impl Fn(usize) -> ExactRat,
    ) -> Self {
        Self {
            a: (0..len).map(a).collect(),
            b: (0..len).map(b).collect(),
        }
    }

    /// `a_i = αi`, `b_j = αj`, which turns the recurrence into the
    /// Whitney-Lah one.
    pub fn whitney_lah(alpha: i64, len: usize) -> Self {
        Self::from_fns(len, |i| rat(alpha * i as i64), |j| rat(alpha * j as i64))
    }

    fn a(&self, i: usize) -> Result<&ExactRat> {
        self.a.get(i).ok_or(Error::SequenceTooShort {
            needed: i,
            len: self.a.len(),
        })
    }

    fn b(&self, i: usize) -> Result<&ExactRat> {
        self.b.get(i).ok_or(Error::SequenceTooShort {
            needed: i,
            len: self.b.len(),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MansourMethod {
    Recurrence,
    /// Divided-difference formula with denominator `∏_{i=0..k, i≠j} (b_j - b_i)`.
    Explicit,
    /// Same formula with the denominator running over `i = 0..n-1`, as it
    /// is usually quoted. Disagrees with the recurrence in general.
    ExplicitAsPrinted,
}

pub fn mansour_u(
    spec: &MansourSpec,
    n: usize,
    k: usize,
    method: MansourMethod,
) -> Result<ExactRat> {
    match method {
        MansourMethod::Recurrence => {
            if k > n {
                return Ok(ExactRat::zero());
            }
            let mut row: Vec<ExactRat> = vec![ExactRat::zero(); k + 1];
            row[0] = ExactRat::one();
            for m in 1..=n {
                let a = spec.a(m - 1)?;
                let mut next = vec![ExactRat::zero(); k + 1];
                for (j, slot) in next.iter_mut().enumerate().take(m.min(k) + 1) {
                    let left = if j == 0 {
                        ExactRat::zero()
                    } else {
                        row[j - 1].clone()
                    };
                    *slot = left + (a + spec.b(j)?) * &row[j];
                }
                row = next;
            }
            Ok(row[k].clone())
        }
        MansourMethod::Explicit | MansourMethod::ExplicitAsPrinted => {
            let den_range: Vec<usize> = if method == MansourMethod::Explicit {
                (0..=k).collect()
            } else {
                (0..n).collect()
            };
            let used: Vec<usize> = {
                let mut v: Vec<usize> = (0..=k).chain(den_range.iter().copied()).collect();
                v.sort_unstable();
                v.dedup();
                v
            };
            for (x, &i) in used.iter().enumerate() {
                for &j in &used[x + 1..] {
                    if spec.b(i)? == spec.b(j)? {
                        return Err(Error::DuplicateBValues { i, j });
                    }
                }
            }
            let mut total = ExactRat::zero();
            for j in 0..=k {
                let bj = spec.b(j)?;
                let mut num = ExactRat::one();
                for i in 0..n {
                    num *= bj + spec.a(i)?;
                }
                let mut den = ExactRat::one();
                for &i in den_range.iter().filter(|&&i| i != j) {
                    den *= bj - spec.b(i)?;
                }
                total += num / den;
            }
            Ok(total)
        }
    }
}

/// `D_(α)(n) = Σ_k W_(α)(n, k)`
pub fn dowling(alpha: i64, n: usize) -> Result<ExactInt> {
    let t = triangle(WhitneyFamily::Second, alpha, n)?;
    Ok(t.rows()[n].iter().sum())
}

/// Truncated Dobiński-type series `e^(-1/α) Σ_i (iα)^n / (i! α^i)`.
///
/// Summation stops after the first term smaller than `rel_tol` times the
/// partial sum.
pub fn dowling_dobinski(alpha: i64, n: usize, rel_tol: f64, max_terms: usize) -> Result<f64> {
    let a = check_alpha(alpha)? as f64;
    let mut weight = 1.0; // 1 / (i! α^i)
    let mut sum = 0.0;
    for i in 0..max_terms {
        if i > 0 {
            weight /= i as f64 * a;
        }
        let term = (i as f64 * a).powi(n as i32) * weight;
        sum += term;
        if term < rel_tol * sum {
            return Ok(sum * (-1.0 / a).exp());
        }
    }
    Err(Error::NoConvergence { max_terms })
}

/// `Σ_j (-1)^(n-j) (Σ_k ŵ(j,k)) W(n,j)`, which equals `D_(α)(n)`.
pub fn dowling_qi(alpha: i64, n: usize) -> Result<ExactInt> {
    let wl = triangle(WhitneyFamily::Lah, alpha, n)?;
    let w2 = triangle(WhitneyFamily::Second, alpha, n)?;
    Ok((0..=n)
        .map(|j| {
            let row_sum: ExactInt = wl.rows()[j].iter().sum();
            sign_pow((n - j) as i64) * row_sum * w2.get(n, j)
        })
        .sum())
}

/// `(t / (1 - αt))^k / k!` up to `t^order`, the exponential generating
/// function of column `k` of the Whitney-Lah triangle.
pub fn twl_egf(alpha: i64, k: usize, order: usize) -> Result<TruncSeries<ExactRat>> {
    check_alpha(alpha)?;
    let t = TruncSeries::monomial(rat(1), 1, order);
    let geometric = TruncSeries::linear(rat(1), rat(-alpha), order).inverse()?;
    let base = &t * &geometric;
    Ok(base
        .pow(k as u32)
        .scale(&int_to_rat(&factorial(k as u64)).recip()))
}

/// Convenience for float comparisons against exact values.
pub fn to_f64(x: &ExactInt) -> f64 {
    x.to_f64().unwrap_or(f64::INFINITY)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classical::{bell, stirling1u, stirling2};

    fn int(v: i64) -> ExactInt {
        ExactInt::from(v)
    }

    #[test]
    fn first_kind_examples() {
        assert_eq!(tw1(2, 3, 2).unwrap(), int(6));
        assert_eq!(tw1(1, 4, 2).unwrap(), int(11));
        for a in 1..=3 {
            for n in 0..=6 {
                assert_eq!(tw1(a, n, n).unwrap(), int(1));
            }
        }
        assert_eq!(tw1(0, 3, 2), Err(Error::InvalidAlpha(0)));
        assert_eq!(tw1(-1, 3, 2), Err(Error::InvalidAlpha(-1)));
    }

    #[test]
    fn second_kind_examples() {
        assert_eq!(tw2(2, 3, 2).unwrap(), int(6));
        assert_eq!(tw2(1, 4, 2).unwrap(), int(7));
        assert_eq!(tw2(5, 1, 1).unwrap(), int(1));
        assert_eq!(tw2(2, 3, 0).unwrap(), int(0));
        for a in 1..=3 {
            for n in 0..=10 {
                for k in 0..=n {
                    assert_eq!(tw2(a, n, k).unwrap(), tw2_explicit(a, n, k).unwrap());
                }
            }
        }
    }

    #[test]
    fn whitney_lah_examples() {
        for m in TwlMethod::ALL {
            assert_eq!(twl(2, 3, 2, m).unwrap(), int(12), "{m:?}");
            assert_eq!(twl(3, 2, 1, m).unwrap(), int(6), "{m:?}");
            assert_eq!(twl(2, 0, 0, m).unwrap(), int(1), "{m:?}");
            assert_eq!(twl(2, 3, 0, m).unwrap(), int(0), "{m:?}");
            assert_eq!(twl(2, 3, 4, m).unwrap(), int(0), "{m:?}");
            for n in 0..=5 {
                assert_eq!(twl(3, n, n, m).unwrap(), int(1));
            }
        }
    }

    #[test]
    fn scaling_laws() {
        for a in 1..=3i64 {
            for n in 0..=12 {
                for k in 0..=n {
                    let s = int_pow(a, (n - k) as u32);
                    assert_eq!(tw1(a, n, k).unwrap(), &s * stirling1u(n, k));
                    assert_eq!(tw2(a, n, k).unwrap(), &s * stirling2(n, k));
                    assert_eq!(twl(a, n, k, TwlMethod::Recurrence).unwrap(), &s * lah(n, k));
                }
            }
        }
    }

    #[test]
    fn mansour_examples() {
        let s = MansourSpec::whitney_lah(1, 10);
        for m in [MansourMethod::Recurrence, MansourMethod::Explicit] {
            assert_eq!(mansour_u(&s, 1, 1, m).unwrap(), rat(1));
            assert_eq!(mansour_u(&s, 3, 1, m).unwrap(), rat(6));
        }
        assert_eq!(
            mansour_u(&s, 3, 1, MansourMethod::ExplicitAsPrinted).unwrap(),
            rat(-6)
        );
        for a in 1..=3 {
            let s = MansourSpec::whitney_lah(a, 12);
            for n in 0..=8 {
                for k in 0..=n {
                    let w = ExactRat::from_integer(twl(a, n, k, TwlMethod::Product).unwrap());
                    assert_eq!(mansour_u(&s, n, k, MansourMethod::Recurrence).unwrap(), w);
                    assert_eq!(mansour_u(&s, n, k, MansourMethod::Explicit).unwrap(), w);
                }
            }
        }
    }

    #[test]
    fn mansour_errors() {
        let dup = MansourSpec::from_fns(6, |i| rat(i as i64), |_| rat(1));
        assert_eq!(
            mansour_u(&dup, 2, 1, MansourMethod::Explicit),
            Err(Error::DuplicateBValues { i: 0, j: 1 })
        );
        // the recurrence route does not need distinct b values
        assert!(mansour_u(&dup, 2, 1, MansourMethod::Recurrence).is_ok());
        let short = MansourSpec::whitney_lah(1, 2);
        assert!(matches!(
            mansour_u(&short, 5, 1, MansourMethod::Recurrence),
            Err(Error::SequenceTooShort { .. })
        ));
    }

    #[test]
    fn dowling_examples() {
        assert_eq!(dowling(1, 3).unwrap(), int(5));
        assert_eq!(dowling(2, 3).unwrap(), int(11));
        assert_eq!(dowling(3, 0).unwrap(), int(1));
        assert_eq!(dowling_qi(1, 2).unwrap(), int(2));
        assert_eq!(dowling_qi(2, 2).unwrap(), int(3));
        for n in 0..=12 {
            assert_eq!(dowling_qi(1, n).unwrap(), bell(n));
        }
    }

    #[test]
    fn dobinski_examples() {
        let v = dowling_dobinski(1, 3, 1e-12, 200).unwrap();
        assert!((v - 5.0).abs() < 1e-9, "{v}");
        let v = dowling_dobinski(2, 3, 1e-12, 200).unwrap();
        assert!((v - 11.0).abs() < 1e-9, "{v}");
        for a in 1..=3 {
            let v = dowling_dobinski(a, 0, 1e-12, 200).unwrap();
            assert!((v - 1.0).abs() < 1e-12, "{v}");
        }
        assert_eq!(
            dowling_dobinski(1, 10, 1e-12, 3),
            Err(Error::NoConvergence { max_terms: 3 })
        );
    }

    #[test]
    fn cache_grows_on_demand() {
        let small = triangle(WhitneyFamily::First, 7, 3).unwrap();
        let big = triangle(WhitneyFamily::First, 7, 40).unwrap();
        assert!(big.n_max() >= 40);
        assert!(small.n_max() >= 3);
        assert_eq!(small.get(3, 1), big.get(3, 1));
    }

    #[test]
    fn concurrent_readers_agree() {
        let handles: Vec<_> = (0..8)
            .map(|i| std::thread::spawn(move || tw2(3, 20 + i, 5).unwrap()))
            .collect();
        for (i, h) in handles.into_iter().enumerate() {
            assert_eq!(h.join().unwrap(), tw2_explicit(3, 20 + i, 5).unwrap());
        }
    }
}
