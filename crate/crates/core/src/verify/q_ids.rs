//! Identities among the translated q-Whitney families.

use super::classical_ids::{list, matrix};
use super::registry::{Grid, IdentitySpec};
use super::{get_int, get_mode, get_str, get_usize, params, Mode, Params, Sides, Suite};
use crate::arith::{int_pow, rat_to_string, sign_pow, ExactInt, LaurentPoly, TruncSeries};
use crate::classical::{lah, stirling1u, stirling2};
use crate::error::{Error, Result};
use crate::qcalc::{gqf_at, qbinom, qfact, qfalling, qint, qint_reflected, Increment, QBase};
use crate::qwhitney::{
    gen_qfactorial_at, q_triangle, qdowling, qdowling_qi, qlah_gr, qw1, qw2, qwl, qwl_egf_cleared,
    qwl_explicit, QFamily, QLahRoute,
};
use crate::whitney::dowling;

fn base(alpha: i64) -> Result<QBase> {
    let a = u32::try_from(alpha).map_err(|_| Error::InvalidAlpha(alpha))?;
    QBase::new(a)
}

fn c2(n: i64) -> i64 {
    n * (n - 1) / 2
}

fn polys(v: impl IntoIterator<Item = LaurentPoly>) -> String {
    list(v)
}

fn signed_alphas(g: &Grid) -> Vec<i64> {
    let mut v: Vec<i64> = g.alphas.iter().flat_map(|&a| [-a, a]).collect();
    v.sort_unstable();
    v
}

fn alpha_nk(alphas: &[i64], n_max: usize) -> Vec<Params> {
    let mut out = Vec::new();
    for &a in alphas {
        for n in 0..=n_max {
            for k in 0..=n {
                out.push(params([
                    ("alpha", a.into()),
                    ("n", n.into()),
                    ("k", k.into()),
                ]));
            }
        }
    }
    out
}

// ---- defining expansions -------------------------------------------------

fn q_defs_grid(g: &Grid) -> Vec<Params> {
    let mut out = Vec::new();
    for def in ["def1", "def2", "def3"] {
        let alphas = if def == "def3" {
            g.alphas.clone()
        } else {
            signed_alphas(g)
        };
        for a in alphas {
            for n in 0..=g.cap(8) {
                out.push(params([
                    ("def", def.into()),
                    ("alpha", a.into()),
                    ("n", n.into()),
                ]));
            }
        }
    }
    out
}

/// Both sides at `t = 0, α, ..., nα`. Each side is a polynomial of degree at
/// most `n` in `q^t`, so agreement at these `n + 1` points is a proof.
fn q_defs_eval(p: &Params) -> Result<Sides> {
    let (def, a, n) = (get_str(p, "def")?, get_int(p, "alpha")?, get_usize(p, "n")?);
    let mut lhs = Vec::new();
    let mut rhs = Vec::new();
    for j in 0..=n as i64 {
        let t = j * a;
        let qt = qint_reflected(t);
        let (l, r): (LaurentPoly, LaurentPoly) = match def {
            "def1" => {
                let tri = q_triangle(QFamily::First, a, n)?;
                let row = &tri.rows()[n];
                (
                    gen_qfactorial_at(t, a, n),
                    row.iter()
                        .enumerate()
                        .map(|(k, w)| w * &qt.pow(k as u32))
                        .sum(),
                )
            }
            "def2" => {
                let tri = q_triangle(QFamily::Second, a, n)?;
                let row = &tri.rows()[n];
                (
                    qt.pow(n as u32),
                    row.iter()
                        .enumerate()
                        .map(|(k, w)| w * &gen_qfactorial_at(t, a, k))
                        .sum(),
                )
            }
            _ => {
                let tri = q_triangle(QFamily::Lah, a, n)?;
                let row = &tri.rows()[n];
                (
                    gen_qfactorial_at(t, -a, n),
                    row.iter()
                        .enumerate()
                        .map(|(k, w)| w * &gen_qfactorial_at(t, a, k))
                        .sum(),
                )
            }
        };
        lhs.push(l);
        rhs.push(r);
    }
    Ok(Sides::new(polys(lhs), polys(rhs)))
}

fn qw1w2_grid(g: &Grid) -> Vec<Params> {
    alpha_nk(&g.alphas, g.cap(8))
}

fn qw1w2_eval(p: &Params) -> Result<Sides> {
    let (a, n, k) = (get_int(p, "alpha")?, get_usize(p, "n")?, get_usize(p, "k")?);
    let rhs: LaurentPoly = (k..=n)
        .map(|j| Ok(qw1(-a, n, j)? * qw2(a, j, k)?))
        .sum::<Result<LaurentPoly>>()?;
    Ok(Sides::new(qwl(a, n, k)?, rhs))
}

fn qr1_eval(p: &Params) -> Result<Sides> {
    let (a, n, k) = (get_int(p, "alpha")?, get_usize(p, "n")?, get_usize(p, "k")?);
    Ok(Sides::new(qwl(a, n, k)?, qwl_explicit(a, n, k)?))
}

// ---- generating function -------------------------------------------------

fn qr1_1_grid(g: &Grid) -> Vec<Params> {
    let order = g.cap(8);
    let mut out = Vec::new();
    for &a in &g.alphas {
        for k in 0..=4.min(order) {
            out.push(params([
                ("alpha", a.into()),
                ("k", k.into()),
                ("order", order.into()),
            ]));
        }
    }
    out
}

fn qr1_1_eval(p: &Params) -> Result<Sides> {
    let (a, k, order) = (
        get_int(p, "alpha")?,
        get_usize(p, "k")?,
        get_usize(p, "order")?,
    );
    let (lhs, rhs) = qwl_egf_cleared(a, k, order)?;
    Ok(Sides::new(polys(lhs), polys(rhs)))
}

// ---- Guo-Qi type identity ------------------------------------------------

fn qr2_grid_for(alphas: &[i64], g: &Grid) -> Vec<Params> {
    let mut out = Vec::new();
    for &a in alphas {
        for k in 1..=6 {
            for n in k - 1..=g.cap(8) {
                let mut p = params([("k", k.into()), ("n", n.into())]);
                if a != 0 {
                    p.insert("alpha".into(), a.into());
                }
                out.push(p);
            }
        }
    }
    out
}

fn qr2_grid(g: &Grid) -> Vec<Params> {
    qr2_grid_for(&g.alphas, g)
}

fn qr2_1_grid(g: &Grid) -> Vec<Params> {
    qr2_grid_for(&[0], g)
}

/// Left side of the q-Guo-Qi identity, with the `q`-power exponent either
/// `-α(nj + C(j+1,2))` or, as usually typeset, `-(nj + C(j+1,2))`.
fn qr2_lhs(
    alpha: i64,
    k: usize,
    n: usize,
    mode: Mode,
    entry: impl Fn(usize) -> Result<LaurentPoly>,
) -> Result<LaurentPoly> {
    let b = base(alpha)?;
    let neg_qa = -qint(alpha as u64, QBase::ONE);
    (0..=k)
        .map(|j| {
            let (ji, ni) = (j as i64, n as i64);
            let e = ni * ji + c2(ji + 1);
            let e = if mode == Mode::Corrected {
                -alpha * e
            } else {
                -e
            };
            Ok((neg_qa.pow(j as u32) * entry(j)? * qfact((n + j) as u64, b)).shift(e))
        })
        .sum()
}

/// `(-[α]_q)^k q^{-α(k(n+1) - C(k,2))} [n]_{q^α}! [n-k+2]_{q^α} ... [n+1]_{q^α}`
fn qr2_rhs_corrected(alpha: i64, k: usize, n: usize) -> Result<LaurentPoly> {
    let b = base(alpha)?;
    let (ki, ni) = (k as i64, n as i64);
    let tail: LaurentPoly = (n + 2 - k..=n + 1).map(|i| qint(i as u64, b)).product();
    let e = -alpha * (ki * (ni + 1) - c2(ki));
    Ok(((-qint(alpha as u64, QBase::ONE)).pow(k as u32) * qfact(n as u64, b) * tail).shift(e))
}

fn qr2_eval(p: &Params) -> Result<Sides> {
    let (a, k, n) = (get_int(p, "alpha")?, get_usize(p, "k")?, get_usize(p, "n")?);
    let mode = get_mode(p)?;
    let lhs = qr2_lhs(a, k, n, mode, |j| qwl(a, k, j))?;
    let rhs = match mode {
        Mode::Corrected => qr2_rhs_corrected(a, k, n)?,
        Mode::AsPrinted => {
            let b = base(a)?;
            let num = (-qint(a as u64, QBase::ONE)).pow(k as u32)
                * qfact(n as u64, b)
                * qfact(n as u64 + 1, b);
            num.div_exact(&qfact((n + 1 - k) as u64, b))?
        }
    };
    Ok(Sides::new(lhs, rhs))
}

fn qr2_1_eval(p: &Params) -> Result<Sides> {
    let (k, n) = (get_usize(p, "k")?, get_usize(p, "n")?);
    let mode = get_mode(p)?;
    let lhs = qr2_lhs(1, k, n, mode, |j| qlah_gr(k, j, QLahRoute::Recurrence))?;
    let rhs = match mode {
        Mode::Corrected => qr2_rhs_corrected(1, k, n)?.to_string(),
        // (-1)^k [n]_q! [n+1]_q / [n-k+1]_q, read literally
        Mode::AsPrinted => {
            let one = QBase::ONE;
            let num = qfact(n as u64, one)
                * qint(n as u64 + 1, one)
                * LaurentPoly::from_int(sign_pow(k as i64));
            let den = qint((n + 1 - k) as u64, one);
            match num.div_exact(&den) {
                Ok(v) => v.to_string(),
                Err(e) => format!("({num}) / ({den}): {e}"),
            }
        }
    };
    Ok(Sides::new(lhs, rhs))
}

// ---- inversion formulas --------------------------------------------------

fn inv_qtw_grid(g: &Grid) -> Vec<Params> {
    let mut out = Vec::new();
    for a in signed_alphas(g) {
        for dim in 1..=g.cap(8) {
            for order in ["first-second", "second-first"] {
                out.push(params([
                    ("alpha", a.into()),
                    ("dim", dim.into()),
                    ("order", order.into()),
                ]));
            }
        }
    }
    out
}

fn inv_qtw_eval(p: &Params) -> Result<Sides> {
    let (a, dim, order) = (
        get_int(p, "alpha")?,
        get_usize(p, "dim")?,
        get_str(p, "order")?,
    );
    let w1 = q_triangle(QFamily::First, a, dim)?;
    let w2 = q_triangle(QFamily::Second, a, dim)?;
    let (x, y) = if order == "first-second" {
        (&w1, &w2)
    } else {
        (&w2, &w1)
    };
    let product = (0..dim)
        .map(|n| {
            (0..dim)
                .map(|m| {
                    (0..dim)
                        .map(|j| x.get(n, j) * y.get(j, m))
                        .sum::<LaurentPoly>()
                })
                .collect()
        })
        .collect();
    let identity = (0..dim)
        .map(|i| (0..dim).map(|j| u8::from(i == j)).collect())
        .collect();
    Ok(Sides::new(
        matrix::<LaurentPoly>(product),
        matrix::<u8>(identity),
    ))
}

fn qbinom_inv_grid(g: &Grid) -> Vec<Params> {
    let mut out = Vec::new();
    for &a in &g.alphas {
        for k in 0..=g.cap(8) {
            for direction in ["backward-forward", "forward-backward"] {
                out.push(params([
                    ("alpha", a.into()),
                    ("k", k.into()),
                    ("direction", direction.into()),
                ]));
            }
        }
    }
    out
}

/// Deterministic test sequence with negative exponents and varying signs.
fn sample(j: usize) -> LaurentPoly {
    let j = j as i64;
    LaurentPoly::from_int_terms([(-j, j + 1), (0, 1 - 2 * (j % 2)), (j + 1, j * j - 3)])
}

fn qbinom_forward(f: &[LaurentPoly], b: QBase) -> Vec<LaurentPoly> {
    (0..f.len())
        .map(|k| {
            (0..=k)
                .map(|j| qbinom(k as i64, j as i64, b) * f[j].clone())
                .sum()
        })
        .collect()
}

fn qbinom_backward(f: &[LaurentPoly], b: QBase) -> Vec<LaurentPoly> {
    let a = b.get() as i64;
    (0..f.len())
        .map(|k| {
            (0..=k)
                .map(|j| {
                    let d = (k - j) as i64;
                    (qbinom(k as i64, j as i64, b) * f[j].clone()).shift(a * c2(d))
                        * LaurentPoly::from_int(sign_pow(d))
                })
                .sum()
        })
        .collect()
}

fn qbinom_inv_eval(p: &Params) -> Result<Sides> {
    let (a, k, direction) = (
        get_int(p, "alpha")?,
        get_usize(p, "k")?,
        get_str(p, "direction")?,
    );
    let b = base(a)?;
    let f: Vec<LaurentPoly> = (0..=k).map(sample).collect();
    let round = if direction == "forward-backward" {
        qbinom_backward(&qbinom_forward(&f, b), b)
    } else {
        qbinom_forward(&qbinom_backward(&f, b), b)
    };
    Ok(Sides::new(polys(f), polys(round)))
}

// ---- auxiliary q-identities ----------------------------------------------

fn pe1_grid(g: &Grid) -> Vec<Params> {
    let mut out = Vec::new();
    for &a in g.alphas.iter().filter(|&&a| a <= 3) {
        for part in ["binomial", "product"] {
            for j in 0..=5usize {
                if part == "binomial" && j == 0 {
                    continue;
                }
                for n in 0..=g.cap(6) {
                    out.push(params([
                        ("alpha", a.into()),
                        ("part", part.into()),
                        ("j", j.into()),
                        ("n", n.into()),
                    ]));
                }
            }
        }
    }
    out
}

fn pe1_eval(p: &Params) -> Result<Sides> {
    let (a, j, n) = (get_int(p, "alpha")?, get_usize(p, "j")?, get_usize(p, "n")?);
    let b = base(a)?;
    match get_str(p, "part")? {
        // [αj|-α]_n = [α]_q^n [j+n-1]_{q^α} ... [j]_{q^α}
        "product" => {
            let rhs = qint(a as u64, QBase::ONE).pow(n as u32)
                * (0..n)
                    .map(|i| qint((j + i) as u64, b))
                    .product::<LaurentPoly>();
            Ok(Sides::new(
                gqf_at(j as u64, a as u32, Increment::Minus, n as u64)?,
                rhs,
            ))
        }
        _ => {
            let top = (j + n - 1) as u64;
            let lhs = qfalling(top, n as u64, b)?.div_exact(&qfact(n as u64, b))?;
            Ok(Sides::new(lhs, qbinom(top as i64, n as i64, b)))
        }
    }
}

fn pe2_grid(g: &Grid) -> Vec<Params> {
    let order = g.cap(8);
    (1..=4)
        .map(|n: usize| params([("n", n.into()), ("order", order.into())]))
        .collect()
}

fn pe2_eval(p: &Params) -> Result<Sides> {
    let (n, order) = (get_usize(p, "n")?, get_usize(p, "order")?);
    let mut prod = TruncSeries::one(order);
    for k in 0..n as i64 {
        let factor = TruncSeries::linear(LaurentPoly::one(), -LaurentPoly::q_pow(k), order);
        prod = &prod * &factor.inverse()?;
    }
    let rhs = (0..=order).map(|k| qbinom((n + k) as i64 - 1, k as i64, QBase::ONE));
    Ok(Sides::new(list(prod.canonical_coeffs()), polys(rhs)))
}

fn qgqif1_grid(g: &Grid) -> Vec<Params> {
    let mut out = Vec::new();
    for &a in &g.alphas {
        for n in 0..=g.cap(6) {
            out.push(params([("alpha", a.into()), ("n", n.into())]));
        }
    }
    out
}

fn qgqif1_eval(p: &Params) -> Result<Sides> {
    let (a, n) = (get_int(p, "alpha")?, get_usize(p, "n")?);
    Ok(Sides::new(qdowling(a, n)?, qdowling_qi(a, n)?))
}

const LIMIT_FAMILIES: [&str; 5] = ["qdowling", "qlah", "qw1", "qw2", "qwl"];

fn q_limits_grid(g: &Grid) -> Vec<Params> {
    let n_max = g.cap(8);
    let mut out = Vec::new();
    for family in LIMIT_FAMILIES {
        let alphas: &[i64] = if family == "qlah" { &[0] } else { &g.alphas };
        for &a in alphas {
            for n in 0..=n_max {
                let ks = if family == "qdowling" {
                    vec![None]
                } else {
                    (0..=n).map(Some).collect()
                };
                for k in ks {
                    let mut p = params([("family", family.into()), ("n", n.into())]);
                    if a != 0 {
                        p.insert("alpha".into(), a.into());
                    }
                    if let Some(k) = k {
                        p.insert("k".into(), k.into());
                    }
                    out.push(p);
                }
            }
        }
    }
    out
}

fn q_limits_eval(p: &Params) -> Result<Sides> {
    let family = get_str(p, "family")?;
    let n = get_usize(p, "n")?;
    if family == "qdowling" {
        let a = get_int(p, "alpha")?;
        return Ok(Sides::new(
            rat_to_string(&qdowling(a, n)?.eval_q1()),
            dowling(a, n)?,
        ));
    }
    let k = get_usize(p, "k")?;
    let (value, classical): (LaurentPoly, ExactInt) = if family == "qlah" {
        (qlah_gr(n, k, QLahRoute::Recurrence)?, lah(n, k))
    } else {
        let a = get_int(p, "alpha")?;
        let scale = int_pow(a, (n - k) as u32);
        match family {
            "qw1" => (
                qw1(a, n, k)?,
                scale * stirling1u(n, k) * sign_pow((n - k) as i64),
            ),
            "qw2" => (qw2(a, n, k)?, scale * stirling2(n, k)),
            _ => (qwl(a, n, k)?, scale * lah(n, k)),
        }
    };
    Ok(Sides::new(rat_to_string(&value.eval_q1()), classical))
}

fn entry(
    id: &'static str,
    description: &'static str,
    anchor: &'static str,
    grid_fn: fn(&Grid) -> Vec<Params>,
    eval: fn(&Params) -> Result<Sides>,
) -> IdentitySpec {
    IdentitySpec {
        id,
        description,
        anchor,
        suite: Suite::Q,
        has_as_printed: false,
        grid_fn,
        eval,
    }
}

pub(super) fn specs() -> Vec<IdentitySpec> {
    let mut qr2 = entry(
        "qr2",
        "sum_j (-[a])^j q^(-a(nj+C(j+1,2))) L[k,j] [n+j]! = (-[a])^k q^(-a(k(n+1)-C(k,2))) [n]! [n+1]!/[n-k+1]!",
        "q-analogue of the Whitney-Lah Guo-Qi identity",
        qr2_grid,
        qr2_eval,
    );
    qr2.has_as_printed = true;
    let mut qr2_1 = entry(
        "qr2_1",
        "the q-Guo-Qi identity for Garsia-Remmel q-Lah numbers",
        "q-analogue of the Guo-Qi Lah identity",
        qr2_1_grid,
        qr2_1_eval,
    );
    qr2_1.has_as_printed = true;
    vec![
        entry(
            "q_defs",
            "defining expansions of w1, w2 and L checked at t = 0, a, ..., na",
            "definitions of the translated q-Whitney numbers",
            q_defs_grid,
            q_defs_eval,
        ),
        entry(
            "qw1w2",
            "L[n,k] = sum_j w1_(-a)[n,j] w2_(a)[j,k]",
            "translated q-Whitney-Lah numbers as a sum of products",
            qw1w2_grid,
            qw1w2_eval,
        ),
        entry(
            "qr1",
            "recurrence against the q-binomial explicit formula",
            "explicit formula for translated q-Whitney-Lah numbers",
            qw1w2_grid,
            qr1_eval,
        ),
        entry(
            "qr1_1",
            "q-exponential generating function with denominators cleared",
            "generating function for translated q-Whitney-Lah numbers",
            qr1_1_grid,
            qr1_1_eval,
        ),
        qr2,
        qr2_1,
        entry(
            "inv_qtw",
            "the matrices [w1[n,k]] and [w2[n,k]] are mutual inverses",
            "inverse relation for translated q-Whitney numbers",
            inv_qtw_grid,
            inv_qtw_eval,
        ),
        entry(
            "qbinom_inv",
            "q-binomial transform followed by its inverse is the identity",
            "q-binomial inversion",
            qbinom_inv_grid,
            qbinom_inv_eval,
        ),
        entry(
            "pe1",
            "[aj|-a]_n = [a]^n [j+n-1]_(q^a,n) and [j+n-1]_(q^a,n)/[n]! = C(j+n-1,n)_(q^a)",
            "generalized q-factorial at multiples of a",
            pe1_grid,
            pe1_eval,
        ),
        entry(
            "pe2",
            "prod_(k<n) 1/(1 - q^k t) = sum_k C(n+k-1,k)_q t^k",
            "q-binomial series",
            pe2_grid,
            pe2_eval,
        ),
        entry(
            "qgqif1",
            "D[n] = sum_j (sum_k L[j,k]) w2_(-a)[n,j]",
            "Qi-type formula for translated q-Dowling numbers",
            qgqif1_grid,
            qgqif1_eval,
        ),
        entry(
            "q_limits",
            "q -> 1 limits of the q-families equal their classical counterparts",
            "classical limits of the q-analogues",
            q_limits_grid,
            q_limits_eval,
        ),
    ]
}
