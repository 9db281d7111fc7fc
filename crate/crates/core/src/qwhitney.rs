//! Translated q-Whitney numbers of the first, second and third kind, the
//! Garsia-Remmel q-Lah numbers and translated q-Dowling numbers.
//!
//! The first and second kinds are only given implicitly, as connection
//! coefficients between the bases `[t]_q^k` and `[t|α]_k`. Their recurrences
//! follow from two one-line manipulations:
//!
//! * `[t - nα]_q = q^{-nα} ([t]_q - [nα]_q)`, so multiplying
//!   `[t|α]_n = Σ_k w1[n,k] [t]_q^k` by `[t - nα]_q` gives
//!   `w1[n+1,k] = q^{-nα} (w1[n,k-1] - [nα]_q w1[n,k])`;
//! * `[t]_q [t|α]_k = q^{kα} [t|α]_{k+1} + [kα]_q [t|α]_k`, so multiplying
//!   `[t]_q^n = Σ_k w2[n,k] [t|α]_k` by `[t]_q` gives
//!   `w2[n+1,k] = q^{(k-1)α} w2[n,k-1] + [kα]_q w2[n,k]`.
//!
//! For negative `α` the q-integer `[nα]_q` is taken through the reflection
//! `[-m]_q = -q^{-m} [m]_q`. The defining expansions themselves are checked
//! by point evaluation in [`crate::verify`].

use crate::arith::{sign_pow, LaurentPoly, TruncSeries};
use crate::error::{Error, Result};
use crate::qcalc::{gqf_at, qbinom, qfact, qint, qint_reflected, Increment, QBase};
use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum QFamily {
    /// `w^1_(α)[n,k]_q`
    First,
    /// `w^2_(α)[n,k]_q`
    Second,
    /// `L_(α)[n,k]_q`, the translated q-Whitney-Lah numbers
    Lah,
    /// Garsia-Remmel `L_q(n,k)`
    GarsiaRemmel,
}

#[derive(Debug, Clone, PartialEq)]
pub struct QTriangle {
    family: QFamily,
    alpha: i64,
    rows: Vec<Vec<LaurentPoly>>,
}

fn check_alpha(family: QFamily, alpha: i64) -> Result<()> {
    let ok = match family {
        QFamily::First | QFamily::Second => alpha != 0,
        QFamily::Lah => alpha >= 1,
        QFamily::GarsiaRemmel => alpha == 1,
    };
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidAlpha(alpha))
    }
}

impl QTriangle {
    pub fn build(family: QFamily, alpha: i64, n_max: usize) -> Result<Self> {
        check_alpha(family, alpha)?;
        let mut rows = vec![vec![LaurentPoly::one()]];
        for n in 0..n_max as i64 {
            let prev = &rows[n as usize];
            let at = |k: i64| -> LaurentPoly {
                if k < 0 {
                    LaurentPoly::zero()
                } else {
                    prev.get(k as usize).cloned().unwrap_or_default()
                }
            };
            let row = (0..=n + 1)
                .map(|k| match family {
                    QFamily::First => {
                        (at(k - 1) - qint_reflected(n * alpha) * at(k)).shift(-n * alpha)
                    }
                    QFamily::Second => {
                        at(k - 1).shift((k - 1) * alpha) + qint_reflected(k * alpha) * at(k)
                    }
                    QFamily::Lah | QFamily::GarsiaRemmel => {
                        at(k - 1).shift(alpha * (n + k - 1))
                            + qint((alpha * (n + k)) as u64, QBase::ONE) * at(k)
                    }
                })
                .collect();
            rows.push(row);
        }
        Ok(Self {
            family,
            alpha,
            rows,
        })
    }

    pub fn family(&self) -> QFamily {
        self.family
    }

    pub fn alpha(&self) -> i64 {
        self.alpha
    }

    pub fn n_max(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn rows(&self) -> &[Vec<LaurentPoly>] {
        &self.rows
    }

    /// Entry at `(n, k)`, zero outside the triangle. Panics if `n > n_max`.
    pub fn get(&self, n: usize, k: usize) -> LaurentPoly {
        self.rows[n].get(k).cloned().unwrap_or_default()
    }
}

type Cache = RwLock<HashMap<(QFamily, i64), Arc<QTriangle>>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Shared triangle covering at least rows `0..=n`.
pub fn q_triangle(family: QFamily, alpha: i64, n: usize) -> Result<Arc<QTriangle>> {
    check_alpha(family, alpha)?;
    let key = (family, alpha);
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
    let t = Arc::new(QTriangle::build(family, alpha, n.max(10))?);
    guard.insert(key, Arc::clone(&t));
    Ok(t)
}

fn entry(family: QFamily, alpha: i64, n: usize, k: usize) -> Result<LaurentPoly> {
    Ok(q_triangle(family, alpha, n)?.get(n, k))
}

/// `w^1_(α)[n,k]_q`, defined by `[t|α]_n = Σ_k w^1[n,k] [t]_q^k`.
pub fn qw1(alpha: i64, n: usize, k: usize) -> Result<LaurentPoly> {
    entry(QFamily::First, alpha, n, k)
}

/// `w^2_(α)[n,k]_q`, defined by `[t]_q^n = Σ_k w^2[n,k] [t|α]_k`.
pub fn qw2(alpha: i64, n: usize, k: usize) -> Result<LaurentPoly> {
    entry(QFamily::Second, alpha, n, k)
}

/// `L_(α)[n,k]_q` by its recurrence.
pub fn qwl(alpha: i64, n: usize, k: usize) -> Result<LaurentPoly> {
    entry(QFamily::Lah, alpha, n, k)
}

/// `L_(α)[n,k]_q` through the q-binomial inversion formula:
///
/// `1/([k]_{q^α}! [α]_q^k) Σ_j (-1)^(k-j) q^{α C(k-j,2)} [k j]_{q^α} [αj|-α]_n`.
pub fn qwl_explicit(alpha: i64, n: usize, k: usize) -> Result<LaurentPoly> {
    check_alpha(QFamily::Lah, alpha)?;
    let base = QBase::new(alpha as u32)?;
    let sum: LaurentPoly = (0..=k)
        .map(|j| -> Result<LaurentPoly> {
            let d = (k - j) as i64;
            let term = qbinom(k as i64, j as i64, base)
                * gqf_at(j as u64, alpha as u32, Increment::Minus, n as u64)?;
            let term = term.shift(alpha * d * (d - 1) / 2);
            Ok(if d % 2 == 0 { term } else { -term })
        })
        .sum::<Result<LaurentPoly>>()?;
    let den = qfact(k as u64, base) * qint(alpha as u64, QBase::ONE).pow(k as u32);
    sum.div_exact(&den)
}

/// Right side of the q-exponential generating function of column `k` of
/// `L_(α)[n,k]_q`, before division by `[k]_{q^α}! [α]_q^k`:
///
/// `Σ_j (-1)^(k-j) q^{α C(k-j,2)} [k j]_{q^α} ∏_{m<j} (1 - q^{αm} [α]_q t)^{-1}`.
pub fn qwl_egf_numerator(alpha: i64, k: usize, order: usize) -> Result<TruncSeries<LaurentPoly>> {
    check_alpha(QFamily::Lah, alpha)?;
    let b = QBase::new(alpha as u32)?;
    let qa = qint(alpha as u64, QBase::ONE);
    let mut total = TruncSeries::zero(order);
    let mut prod = TruncSeries::one(order);
    for j in 0..=k {
        if j > 0 {
            let m = (j - 1) as i64;
            let factor = TruncSeries::linear(LaurentPoly::one(), -(qa.shift(alpha * m)), order);
            prod = &prod * &factor.inverse()?;
        }
        let d = (k - j) as i64;
        let c = qbinom(k as i64, j as i64, b).shift(alpha * d * (d - 1) / 2)
            * LaurentPoly::from_int(sign_pow(d));
        total = &total + &prod.scale(&c);
    }
    Ok(total)
}

/// Denominator-cleared comparison of the generating function: `[n]_{q^α}!`
/// times each coefficient of the numerator series, against
/// `[k]_{q^α}! [α]_q^k L_(α)[n,k]_q`.
pub fn qwl_egf_cleared(
    alpha: i64,
    k: usize,
    order: usize,
) -> Result<(Vec<LaurentPoly>, Vec<LaurentPoly>)> {
    check_alpha(QFamily::Lah, alpha)?;
    let b = QBase::new(alpha as u32)?;
    let series = qwl_egf_numerator(alpha, k, order)?;
    let lhs = (0..=order)
        .map(|n| qfact(n as u64, b) * series.coeffs()[n].clone())
        .collect();
    let norm = qfact(k as u64, b) * qint(alpha as u64, QBase::ONE).pow(k as u32);
    let rhs = (0..=order)
        .map(|n| Ok(&norm * &qwl(alpha, n, k)?))
        .collect::<Result<_>>()?;
    Ok((lhs, rhs))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum QLahRoute {
    Recurrence,
    /// `[n k]_q [n-1]_q!/[k-1]_q! q^{k(k-1)}`
    Explicit,
}

/// Garsia-Remmel q-Lah number `L_q(n,k)`.
pub fn qlah_gr(n: usize, k: usize, route: QLahRoute) -> Result<LaurentPoly> {
    match route {
        QLahRoute::Recurrence => entry(QFamily::GarsiaRemmel, 1, n, k),
        QLahRoute::Explicit => {
            if k < 1 || k > n {
                return Err(Error::InvalidRange { n, k });
            }
            let one = QBase::ONE;
            let num = qbinom(n as i64, k as i64, one) * qfact(n as u64 - 1, one);
            Ok(num
                .div_exact(&qfact(k as u64 - 1, one))?
                .shift((k * (k - 1)) as i64))
        }
    }
}

/// `D_(α)[n]_q = Σ_k w^2_(α)[n,k]_q`
pub fn qdowling(alpha: i64, n: usize) -> Result<LaurentPoly> {
    check_alpha(QFamily::Lah, alpha)?;
    let t = q_triangle(QFamily::Second, alpha, n)?;
    Ok(t.rows()[n].iter().cloned().sum())
}

/// `Σ_j (Σ_{k<=j} L_(α)[j,k]_q) w^2_(-α)[n,j]_q`, equal to `D_(α)[n]_q`.
pub fn qdowling_qi(alpha: i64, n: usize) -> Result<LaurentPoly> {
    check_alpha(QFamily::Lah, alpha)?;
    let wl = q_triangle(QFamily::Lah, alpha, n)?;
    let w2 = q_triangle(QFamily::Second, -alpha, n)?;
    Ok((0..=n)
        .map(|j| {
            let row_sum: LaurentPoly = wl.rows()[j].iter().cloned().sum();
            row_sum * w2.get(n, j)
        })
        .sum())
}

/// `[t|α]_n = ∏_{i<n} [t - iα]_q` at an integer point `t`, reflecting
/// negative q-integers.
pub fn gen_qfactorial_at(t: i64, alpha: i64, n: usize) -> LaurentPoly {
    (0..n as i64)
        .map(|i| qint_reflected(t - i * alpha))
        .product()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn first_kind_examples() {
        assert_eq!(qw1(1, 2, 1).unwrap(), p("-q^-1"));
        assert_eq!(qw1(1, 2, 2).unwrap(), p("q^-1"));
        for a in [-2, -1, 1, 2] {
            for n in 0..=6 {
                assert_eq!(qw1(a, n, n).unwrap().eval_q1(), rat(1));
            }
        }
        assert_eq!(qw1(0, 1, 1), Err(Error::InvalidAlpha(0)));
    }

    #[test]
    fn second_kind_examples() {
        assert_eq!(qw2(1, 3, 2).unwrap(), p("2*q + q^2"));
        assert_eq!(qw2(-1, 2, 1).unwrap(), p("-q^-1"));
        for a in [-2i64, -1, 1, 2, 3] {
            for n in 0..=6usize {
                let e = a * (n * n.saturating_sub(1) / 2) as i64;
                assert_eq!(qw2(a, n, n).unwrap(), LaurentPoly::q_pow(e));
            }
        }
    }

    #[test]
    fn whitney_lah_examples() {
        assert_eq!(qwl(1, 2, 1).unwrap(), p("1 + q"));
        assert_eq!(qwl(2, 2, 1).unwrap(), p("1 + q + q^2 + q^3"));
        assert_eq!(qwl(1, 2, 2).unwrap(), p("q^2"));
        assert_eq!(qwl(-1, 2, 2), Err(Error::InvalidAlpha(-1)));
        assert_eq!(qwl_explicit(1, 2, 1).unwrap(), p("1 + q"));
        assert_eq!(qwl_explicit(2, 2, 1).unwrap(), p("1 + q + q^2 + q^3"));
        for a in 1..=3 {
            for n in 1..=5 {
                assert!(qwl_explicit(a, n, 0).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn explicit_matches_recurrence() {
        for a in 1..=2 {
            for n in 0..=7 {
                for k in 0..=n {
                    assert_eq!(qwl_explicit(a, n, k).unwrap(), qwl(a, n, k).unwrap());
                }
            }
        }
    }

    #[test]
    fn garsia_remmel_examples() {
        for route in [QLahRoute::Recurrence, QLahRoute::Explicit] {
            assert_eq!(qlah_gr(2, 1, route).unwrap(), p("1 + q"));
            assert_eq!(qlah_gr(1, 1, route).unwrap(), LaurentPoly::one());
            assert_eq!(qlah_gr(2, 2, route).unwrap(), p("q^2"));
        }
        assert_eq!(
            qlah_gr(3, 0, QLahRoute::Explicit),
            Err(Error::InvalidRange { n: 3, k: 0 })
        );
        for n in 1..=8 {
            for k in 1..=n {
                let r = qlah_gr(n, k, QLahRoute::Recurrence).unwrap();
                assert_eq!(r, qlah_gr(n, k, QLahRoute::Explicit).unwrap());
                assert_eq!(r, qwl(1, n, k).unwrap());
            }
        }
    }

    #[test]
    fn dowling_examples() {
        assert_eq!(qdowling(1, 2).unwrap(), p("1 + q"));
        assert_eq!(qdowling(2, 0).unwrap(), LaurentPoly::one());
        assert_eq!(qdowling_qi(1, 2).unwrap(), p("1 + q"));
        assert_eq!(qdowling_qi(1, 0).unwrap(), LaurentPoly::one());
        assert_eq!(qdowling_qi(2, 2).unwrap().eval_q1(), rat(3));
        let bells = [1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975];
        for (n, &b) in bells.iter().enumerate() {
            assert_eq!(qdowling(1, n).unwrap().eval_q1(), rat(b));
        }
    }

    #[test]
    fn point_values() {
        assert_eq!(gen_qfactorial_at(2, 1, 2), p("1 + q"));
        assert_eq!(gen_qfactorial_at(-1, 1, 1), p("-q^-1"));
        assert!(gen_qfactorial_at(1, 1, 3).is_zero());
    }
}
