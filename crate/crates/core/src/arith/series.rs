use super::Coefficient;
use crate::error::{Error, Result};
use std::ops::{Add, Mul, Neg, Sub};

/// Power series in `t` known modulo `t^(order+1)`.
///
/// Binary operations on operands of different orders produce a result at the
/// smaller order; the `order` field always states how far the result is
/// exact.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncSeries<C> {
    order: usize,
    coeffs: Vec<C>,
}

impl<C: Coefficient> TruncSeries<C> {
    /// Coefficients beyond `order` are dropped, missing ones are zero.
    pub fn new(mut coeffs: Vec<C>, order: usize) -> Self {
        coeffs.resize(order + 1, C::zero());
        Self { order, coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::constant(C::one(), order)
    }

    pub fn constant(c: C, order: usize) -> Self {
        Self::new(vec![c], order)
    }

    /// `c * t^k`
    pub fn monomial(c: C, k: usize, order: usize) -> Self {
        let mut coeffs = vec![C::zero(); order + 1];
        if k <= order {
            coeffs[k] = c;
        }
        Self { order, coeffs }
    }

    /// `a + b t`
    pub fn linear(a: C, b: C, order: usize) -> Self {
        Self::new(vec![a, b], order)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    /// Coefficient of `t^n`; `None` beyond the known order.
    pub fn coeff(&self, n: usize) -> Option<&C> {
        self.coeffs.get(n)
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order);
        Self {
            order,
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        Self {
            order: self.order,
            coeffs: self.coeffs.iter().map(|x| x.clone() * c.clone()).collect(),
        }
    }

    pub fn mul_series(&self, rhs: &Self) -> Self {
        let order = self.order.min(rhs.order);
        let mut coeffs = vec![C::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self { order, coeffs }
    }

    fn zip_with(&self, rhs: &Self, f: impl Fn(C, C) -> C) -> Self {
        let order = self.order.min(rhs.order);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .take(order + 1)
            .map(|(a, b)| f(a.clone(), b.clone()))
            .collect();
        Self { order, coeffs }
    }

    /// Multiplicative inverse modulo `t^(order+1)`; the constant term must
    /// be a unit of the coefficient ring.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        let u = c0
            .unit_inverse()
            .ok_or_else(|| Error::NonInvertibleConstantTerm(c0.canonical()))?;
        let mut inv: Vec<C> = Vec::with_capacity(self.order + 1);
        inv.push(u.clone());
        for n in 1..=self.order {
            let mut acc = C::zero();
            for i in 1..=n {
                if !self.coeffs[i].is_zero() {
                    acc = acc + self.coeffs[i].clone() * inv[n - i].clone();
                }
            }
            inv.push(-(acc * u.clone()));
        }
        Ok(Self {
            order: self.order,
            coeffs: inv,
        })
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.order);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul_series(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul_series(&base);
            }
        }
        acc
    }

    /// Coefficients rendered in canonical text form.
    pub fn canonical_coeffs(&self) -> Vec<String> {
        self.coeffs.iter().map(C::canonical).collect()
    }
}

impl<C: Coefficient> Add for &TruncSeries<C> {
    type Output = TruncSeries<C>;
    fn add(self, rhs: Self) -> TruncSeries<C> {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl<C: Coefficient> Sub for &TruncSeries<C> {
    type Output = TruncSeries<C>;
    fn sub(self, rhs: Self) -> TruncSeries<C> {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl<C: Coefficient> Mul for &TruncSeries<C> {
    type Output = TruncSeries<C>;
    fn mul(self, rhs: Self) -> TruncSeries<C> {
        self.mul_series(rhs)
    }
}

impl<C: Coefficient> Neg for &TruncSeries<C> {
    type Output = TruncSeries<C>;
    fn neg(self) -> TruncSeries<C> {
        TruncSeries {
            order: self.order,
            coeffs: self.coeffs.iter().cloned().map(Neg::neg).collect(),
        }
    }
}
