//! q-integers, q-factorials, q-binomials and q-falling factorials.
//!
//! All values live in the single Laurent ring in `q`. A base `a` means the
//! substitution `q -> q^a`, so `[n]_{q^a}` and `[m]_q` compose directly.

use crate::arith::LaurentPoly;
use crate::error::{Error, Result};

/// Base multiplier of a q-quantity: `[n]_{q^a}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QBase(u32);

impl QBase {
    pub const ONE: QBase = QBase(1);

    pub fn new(a: u32) -> Result<Self> {
        if a == 0 {
            return Err(Error::InvalidAlpha(0));
        }
        Ok(QBase(a))
    }

    pub fn get(self) -> u32 {
        self.0
    }
}

/// `[n]_{q^a} = 1 + q^a + ... + q^{(n-1)a}`, and `[0] = 0`.
pub fn qint(n: u64, base: QBase) -> LaurentPoly {
    let a = base.0 as i64;
    LaurentPoly::from_int_terms((0..n as i64).map(|i| (i * a, 1)))
}

/// `[m]_q` for any integer `m`, using `[-m]_q = -q^{-m} [m]_q` when `m < 0`.
///
/// Kept separate from [`qint`] so that callers applying the reflection rule
/// do so visibly.
pub fn qint_reflected(m: i64) -> LaurentPoly {
    if m >= 0 {
        qint(m as u64, QBase::ONE)
    } else {
        -(qint(m.unsigned_abs(), QBase::ONE).shift(m))
    }
}

/// `[n]_{q^a}! = [1]_{q^a} [2]_{q^a} ... [n]_{q^a}`
pub fn qfact(n: u64, base: QBase) -> LaurentPoly {
    (1..=n).map(|i| qint(i, base)).product()
}

/// Gaussian binomial `[n]! / ([k]! [n-k]!)` in base `q^a`; zero outside
/// `0 <= k <= n`.
pub fn qbinom(n: i64, k: i64, base: QBase) -> LaurentPoly {
    if k < 0 || k > n {
        return LaurentPoly::zero();
    }
    let (n, k) = (n as u64, k as u64);
    let den = qfact(k, base) * qfact(n - k, base);
    qfact(n, base)
        .div_exact(&den)
        .expect("q-factorial quotient defining a q-binomial is exact")
}

/// q-falling factorial `[n]_{q^a} [n-1]_{q^a} ... [n-k+1]_{q^a}`.
pub fn qfalling(n: u64, k: u64, base: QBase) -> Result<LaurentPoly> {
    if k > n {
        return Err(Error::InvalidOrder { n, k });
    }
    Ok((0..k).map(|i| qint(n - i, base)).product())
}

/// Direction of the increment in the generalized q-factorial `[t|±α]_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Increment {
    /// `[αj | α]_n = ∏ [α(j - i)]_q`
    Plus,
    /// `[αj | -α]_n = ∏ [α(j + i)]_q`
    Minus,
}

/// Generalized q-factorial `[t|±α]_n = ∏_{i<n} [t ∓ iα]_q` at `t = αj`.
///
/// With [`Increment::Plus`] a factor of negative argument is refused rather
/// than reflected.
pub fn gqf_at(j: u64, alpha: u32, inc: Increment, n: u64) -> Result<LaurentPoly> {
    if alpha == 0 {
        return Err(Error::InvalidAlpha(0));
    }
    let a = alpha as i64;
    let j = j as i64;
    let n = n as i64;
    if inc == Increment::Plus && n > j + 1 {
        return Err(Error::NegativeArgument(a * (j - (n - 1))));
    }
    let mut acc = LaurentPoly::one();
    for i in 0..n {
        let m = match inc {
            Increment::Minus => a * (j + i),
            Increment::Plus => a * (j - i),
        };
        acc = acc * qint(m as u64, QBase::ONE);
    }
    Ok(acc)
}
