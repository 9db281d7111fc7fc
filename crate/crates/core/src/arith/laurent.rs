use super::{rat, rat_to_string, Coefficient, ExactInt, ExactRat};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

/// Sparse Laurent polynomial in one formal variable with rational
/// coefficients.
///
/// Terms are kept in a map from exponent to coefficient and zero coefficients
/// are never stored, so structural equality is mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, ExactRat>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(rat(1), 0)
    }

    pub fn constant(c: ExactRat) -> Self {
        Self::monomial(c, 0)
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(rat(n))
    }

    pub fn from_exact_int(n: &ExactInt) -> Self {
        Self::constant(ExactRat::from_integer(n.clone()))
    }

    /// `c * q^e`
    pub fn monomial(c: ExactRat, e: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        Self { terms }
    }

    /// `q^e`
    pub fn q_pow(e: i64) -> Self {
        Self::monomial(rat(1), e)
    }

    /// The variable itself, `q^1`.
    pub fn var() -> Self {
        Self::q_pow(1)
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, combining
    /// repeated exponents.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, ExactRat)>,
    {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    /// Convenience constructor from integer coefficients.
    pub fn from_int_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, i64)>,
    {
        Self::from_terms(terms.into_iter().map(|(e, c)| (e, rat(c))))
    }

    /// Dense constructor: `coeffs[i]` multiplies `q^i`.
    pub fn from_dense(coeffs: &[ExactRat]) -> Self {
        Self::from_terms(
            coeffs
                .iter()
                .cloned()
                .enumerate()
                .map(|(i, c)| (i as i64, c)),
        )
    }

    fn add_term(&mut self, e: i64, c: ExactRat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &ExactRat)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, e: i64) -> ExactRat {
        self.terms.get(&e).cloned().unwrap_or_else(ExactRat::zero)
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// True for `c * q^e` with `c != 0`, the units of the Laurent ring.
    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// True when every coefficient is an integer.
    pub fn has_integer_coeffs(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// Multiplies by `q^e`.
    pub fn shift(&self, e: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(k, c)| (k + e, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &ExactRat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    /// Substitutes `q -> q^a`.
    pub fn subst_power(&self, a: i64) -> Self {
        if a == 0 {
            return Self::constant(self.eval_q1());
        }
        Self {
            terms: self.terms.iter().map(|(k, c)| (k * a, c.clone())).collect(),
        }
    }

    /// Value at `q = 1`: the sum of all coefficients.
    pub fn eval_q1(&self) -> ExactRat {
        self.terms.values().fold(ExactRat::zero(), |acc, c| acc + c)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Exact quotient `self / divisor` in the Laurent ring.
    ///
    /// Both operands are shifted so their lowest exponent is zero and the
    /// division proceeds from the lowest exponent upwards. A nonzero
    /// remainder is an error, never truncated.
    pub fn div_exact(&self, divisor: &LaurentPoly) -> Result<LaurentPoly> {
        let (Some(b_low), Some(b_high)) = (divisor.min_exp(), divisor.max_exp()) else {
            return Err(Error::DivisionByZero);
        };
        let (Some(a_low), Some(a_high)) = (self.min_exp(), self.max_exp()) else {
            return Ok(Self::zero());
        };
        if let (Some(a), Some(b)) = (DenseInt::from_poly(self), DenseInt::from_poly(divisor)) {
            if b.coeffs[0].magnitude().is_one() {
                return a.div_exact_unit_lead(&b).map(DenseInt::into_poly);
            }
        }
        let b = divisor.shift(-b_low);
        let lead_inv = b.coeff(0).recip();
        let max_quot_exp = (a_high - a_low) - (b_high - b_low);
        let mut rem = self.shift(-a_low);
        let mut quot = Self::zero();
        while let Some(e) = rem.min_exp() {
            if e > max_quot_exp {
                return Err(Error::NonExactDivision {
                    remainder: rem.shift(a_low).to_string(),
                });
            }
            let c = rem.coeff(e) * &lead_inv;
            for (be, bc) in b.terms() {
                rem.add_term(e + be, -(bc * &c));
            }
            quot.add_term(e, c);
        }
        Ok(quot.shift(a_low - b_low))
    }

    /// Renders with a chosen variable name; [`Display`](fmt::Display) uses `q`.
    pub fn to_string_in(&self, var: &str) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            let body = render_term(&c.abs(), *e, var);
            match (i, negative) {
                (0, false) => out.push_str(&body),
                (0, true) => {
                    out.push('-');
                    out.push_str(&body);
                }
                (_, false) => {
                    out.push_str(" + ");
                    out.push_str(&body);
                }
                (_, true) => {
                    out.push_str(" - ");
                    out.push_str(&body);
                }
            }
        }
        out
    }
}

/// Dense integer-coefficient view used by the fast multiplication and
/// division paths. `coeffs[i]` multiplies `q^(low + i)`.
struct DenseInt {
    low: i64,
    coeffs: Vec<BigInt>,
}

impl DenseInt {
    fn from_poly(p: &LaurentPoly) -> Option<Self> {
        let low = p.min_exp()?;
        let high = p.max_exp()?;
        if !p.has_integer_coeffs() {
            return None;
        }
        let mut coeffs = vec![BigInt::zero(); (high - low + 1) as usize];
        for (e, c) in p.terms() {
            coeffs[(e - low) as usize] = c.to_integer();
        }
        Some(Self { low, coeffs })
    }

    fn into_poly(self) -> LaurentPoly {
        let low = self.low;
        LaurentPoly {
            terms: self
                .coeffs
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (low + i as i64, ExactRat::from_integer(c)))
                .collect(),
        }
    }

    fn mul(&self, rhs: &Self) -> Self {
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Self {
            low: self.low + rhs.low,
            coeffs,
        }
    }

    /// Ascending long division by a divisor whose lowest coefficient is ±1.
    fn div_exact_unit_lead(mut self, rhs: &Self) -> Result<Self> {
        let flip = rhs.coeffs[0].is_negative();
        let qlen = (self.coeffs.len() + 1).saturating_sub(rhs.coeffs.len());
        let mut quot = vec![BigInt::zero(); qlen];
        for (i, slot) in quot.iter_mut().enumerate() {
            if self.coeffs[i].is_zero() {
                continue;
            }
            let c = if flip {
                -&self.coeffs[i]
            } else {
                self.coeffs[i].clone()
            };
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    self.coeffs[i + j] -= &c * b;
                }
            }
            *slot = c;
        }
        if self.coeffs.iter().any(|c| !c.is_zero()) {
            let low = self.low;
            let rem = DenseInt {
                low,
                coeffs: self.coeffs,
            };
            return Err(Error::NonExactDivision {
                remainder: rem.into_poly().to_string(),
            });
        }
        Ok(Self {
            low: self.low - rhs.low,
            coeffs: quot,
        })
    }
}

fn render_term(abs_c: &ExactRat, e: i64, var: &str) -> String {
    let var_part = match e {
        0 => return rat_to_string(abs_c),
        1 => var.to_string(),
        _ => format!("{var}^{e}"),
    };
    if abs_c.is_one() {
        var_part
    } else {
        format!("{}*{}", rat_to_string(abs_c), var_part)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_in("q"))
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cannot parse Laurent polynomial: {0}")]
pub struct ParseLaurentError(String);

fn parse_rat(s: &str) -> std::result::Result<ExactRat, ParseLaurentError> {
    let bad = || ParseLaurentError(format!("bad coefficient `{s}`"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n).map_err(|_| bad())?;
            let d = BigInt::from_str(d).map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(ExactRat::new(n, d))
        }
        None => Ok(ExactRat::from_integer(
            BigInt::from_str(s).map_err(|_| bad())?,
        )),
    }
}

fn parse_term(s: &str) -> std::result::Result<(i64, ExactRat), ParseLaurentError> {
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let (coeff, var_part) = match body.split_once('*') {
        Some((c, v)) => (parse_rat(c)?, Some(v)),
        None if body.starts_with('q') => (rat(1), Some(body)),
        None => (parse_rat(body)?, None),
    };
    let exp = match var_part {
        None => 0,
        Some("q") => 1,
        Some(v) => {
            let e = v
                .strip_prefix("q^")
                .ok_or_else(|| ParseLaurentError(format!("bad term `{s}`")))?;
            e.parse::<i64>()
                .map_err(|_| ParseLaurentError(format!("bad exponent `{e}`")))?
        }
    };
    Ok((exp, if neg { -coeff } else { coeff }))
}

impl FromStr for LaurentPoly {
    type Err = ParseLaurentError;

    /// Parses the canonical text form produced by `Display`.
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Err(ParseLaurentError("empty input".into()));
        }
        let mut terms = Vec::new();
        let mut rest = s;
        let mut negate_next = false;
        loop {
            let next_sep = [" + ", " - "]
                .iter()
                .filter_map(|sep| rest.find(sep).map(|i| (i, *sep)))
                .min_by_key(|(i, _)| *i);
            let (chunk, tail) = match next_sep {
                Some((i, sep)) => (&rest[..i], Some((&rest[i + 3..], sep == " - "))),
                None => (rest, None),
            };
            let (e, c) = parse_term(chunk)?;
            terms.push((e, if negate_next { -c } else { c }));
            match tail {
                Some((t, neg)) => {
                    rest = t;
                    negate_next = neg;
                }
                None => break,
            }
        }
        Ok(Self::from_terms(terms))
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        if let (Some(a), Some(b)) = (DenseInt::from_poly(self), DenseInt::from_poly(rhs)) {
            return a.mul(&b).into_poly();
        }
        let mut out = LaurentPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c);
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly { (&self).$m(&rhs) }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &LaurentPoly) -> LaurentPoly { (&self).$m(rhs) }
        }
        impl $tr<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly { self.$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl AddAssign<LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: LaurentPoly) {
        *self += &rhs;
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}

impl Product for LaurentPoly {
    fn product<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::one(), |acc, p| &acc * &p)
    }
}

impl Zero for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for LaurentPoly {
    fn one() -> Self {
        LaurentPoly::one()
    }
}

impl Coefficient for LaurentPoly {
    fn unit_inverse(&self) -> Option<Self> {
        if !self.is_monomial() {
            return None;
        }
        let (e, c) = self.terms().next()?;
        Some(LaurentPoly::monomial(c.recip(), -e))
    }

    fn canonical(&self) -> String {
        self.to_string()
    }
}
