//! Identities among the classical and translated Whitney families.

use super::registry::{Grid, IdentitySpec};
use super::{get_int, get_mode, get_str, get_usize, params, Mode, Params, Sides, Suite};
use crate::arith::{
    binomial_general, factorial, int_pow, int_to_rat, rat, rat_to_string, sign_pow, ExactInt,
    LaurentPoly,
};
use crate::classical::{
    bell, falling_poly, gen_factorial_poly, lah, lah_oracle, rising_poly, ClassicalFamily,
    ClassicalTriangle,
};
use crate::error::Result;
use crate::whitney::{
    dowling, dowling_dobinski, dowling_qi, mansour_u, triangle, twl, twl_egf, MansourMethod,
    MansourSpec, TwlMethod, WhitneyFamily,
};
use num_traits::{Signed, Zero};

pub(super) fn list<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    let parts: Vec<String> = items.into_iter().map(|x| x.to_string()).collect();
    format!("[{}]", parts.join(", "))
}

pub(super) fn matrix<T: ToString>(rows: Vec<Vec<T>>) -> String {
    list(rows.into_iter().map(list))
}

fn identity_matrix(dim: usize) -> String {
    matrix(
        (0..dim)
            .map(|i| (0..dim).map(|j| u8::from(i == j)).collect())
            .collect(),
    )
}

fn tpoly(p: &LaurentPoly) -> String {
    p.to_string_in("t")
}

/// `Σ_k coeffs[k] basis(k)` as a polynomial in `t`.
fn expand(
    coeffs: impl IntoIterator<Item = ExactInt>,
    basis: impl Fn(usize) -> LaurentPoly,
) -> LaurentPoly {
    coeffs
        .into_iter()
        .enumerate()
        .map(|(k, c)| basis(k).scale(&int_to_rat(&c)))
        .sum()
}

fn ctri(f: ClassicalFamily, n: usize) -> ClassicalTriangle {
    ClassicalTriangle::build(f, n)
}

fn nk_grid(max_n: usize, with_alpha: Option<&[i64]>) -> Vec<Params> {
    let mut out = Vec::new();
    let alphas: Vec<Option<i64>> = match with_alpha {
        Some(a) => a.iter().copied().map(Some).collect(),
        None => vec![None],
    };
    for a in alphas {
        for n in 0..=max_n {
            for k in 0..=n {
                let mut p = params([("n", n.into()), ("k", k.into())]);
                if let Some(a) = a {
                    p.insert("alpha".into(), a.into());
                }
                out.push(p);
            }
        }
    }
    out
}

fn alpha_n_grid(g: &Grid, n_from: usize, cap: usize) -> Vec<Params> {
    let mut out = Vec::new();
    for &a in &g.alphas {
        for n in n_from..=g.cap(cap) {
            out.push(params([("alpha", a.into()), ("n", n.into())]));
        }
    }
    out
}

// ---- Lah family ----------------------------------------------------------

fn lah_oracle_eval(p: &Params) -> Result<Sides> {
    let (n, k) = (get_usize(p, "n")?, get_usize(p, "k")?);
    Ok(Sides::new(lah(n, k), lah_oracle(n, k)?))
}

fn lah_rec_grid(g: &Grid) -> Vec<Params> {
    let mut out = Vec::new();
    for n in 0..=g.cap(12) {
        for k in 0..=n + 1 {
            out.push(params([("n", n.into()), ("k", k.into())]));
        }
    }
    out
}

fn lah_rec_eval(p: &Params) -> Result<Sides> {
    let (n, k) = (get_usize(p, "n")?, get_usize(p, "k")?);
    let left = if k == 0 {
        ExactInt::zero()
    } else {
        lah(n, k - 1)
    };
    Ok(Sides::new(lah(n + 1, k), left + lah(n, k) * (n + k)))
}

fn egf_grid(g: &Grid, alphas: &[i64]) -> Vec<Params> {
    let order = g.cap(12);
    let mut out = Vec::new();
    for &a in alphas {
        for k in 0..=6.min(order) {
            let mut p = params([("k", k.into()), ("order", order.into())]);
            if alphas.len() > 1 || a != 0 {
                p.insert("alpha".into(), a.into());
            }
            out.push(p);
        }
    }
    out
}

fn lah_egf_grid(g: &Grid) -> Vec<Params> {
    egf_grid(g, &[0])
}

fn lah_egf_eval(p: &Params) -> Result<Sides> {
    let (k, order) = (get_usize(p, "k")?, get_usize(p, "order")?);
    let lhs = twl_egf(1, k, order)?;
    let rhs = (0..=order)
        .map(|n| rat_to_string(&(int_to_rat(&lah(n, k)) / int_to_rat(&factorial(n as u64)))));
    Ok(Sides::new(list(lhs.canonical_coeffs()), list(rhs)))
}

fn upto_grid(cap: usize, from: usize) -> impl Fn(&Grid) -> Vec<Params> {
    move |g: &Grid| {
        (from..=g.cap(cap))
            .map(|n| params([("n", n.into())]))
            .collect()
    }
}

fn lah_hgf_grid(g: &Grid) -> Vec<Params> {
    upto_grid(10, 0)(g)
}

fn lah_hgf_eval(p: &Params) -> Result<Sides> {
    let n = get_usize(p, "n")?;
    let rhs = expand((0..=n).map(|k| lah(n, k)), falling_poly);
    Ok(Sides::new(tpoly(&rising_poly(n)), tpoly(&rhs)))
}

fn stirling_hgf_grid(g: &Grid) -> Vec<Params> {
    let mut out = Vec::new();
    for form in ["falling", "power", "rising"] {
        for n in 0..=g.cap(10) {
            out.push(params([("form", form.into()), ("n", n.into())]));
        }
    }
    out
}

fn stirling_hgf_eval(p: &Params) -> Result<Sides> {
    let n = get_usize(p, "n")?;
    let s1 = ctri(ClassicalFamily::Stirling1u, n);
    let s2 = ctri(ClassicalFamily::Stirling2, n);
    let power = |k: usize| LaurentPoly::var().pow(k as u32);
    let (lhs, rhs) = match get_str(p, "form")? {
        // (t)_n = Σ (-1)^(n-k) c(n,k) t^k
        "falling" => (
            falling_poly(n),
            expand(
                (0..=n).map(|k| s1.get(n, k) * sign_pow((n - k) as i64)),
                power,
            ),
        ),
        // t^n = Σ S(n,k) (t)_k
        "power" => (
            power(n),
            expand((0..=n).map(|k| s2.get(n, k)), falling_poly),
        ),
        // <t>_n = Σ c(n,k) t^k
        _ => (rising_poly(n), expand((0..=n).map(|k| s1.get(n, k)), power)),
    };
    Ok(Sides::new(tpoly(&lhs), tpoly(&rhs)))
}

fn lah_conv_grid(g: &Grid) -> Vec<Params> {
    nk_grid(g.cap(12), None)
}

fn lah_conv_eval(p: &Params) -> Result<Sides> {
    let (n, k) = (get_usize(p, "n")?, get_usize(p, "k")?);
    let s1 = ctri(ClassicalFamily::Stirling1u, n);
    let s2 = ctri(ClassicalFamily::Stirling2, n);
    let rhs: ExactInt = (k..=n).map(|j| s1.get(n, j) * s2.get(j, k)).sum();
    Ok(Sides::new(lah(n, k), rhs))
}

fn qi_bell_grid(g: &Grid) -> Vec<Params> {
    upto_grid(12, 1)(g)
}

fn qi_bell_eval(p: &Params) -> Result<Sides> {
    let n = get_usize(p, "n")?;
    let s2 = ctri(ClassicalFamily::Stirling2, n);
    let rhs: ExactInt = (1..=n)
        .map(|k| {
            let row: ExactInt = (1..=k).map(|l| lah(k, l)).sum();
            sign_pow((n - k) as i64) * row * s2.get(n, k)
        })
        .sum();
    Ok(Sides::new(bell(n), rhs))
}

fn gouqi_grid(g: &Grid) -> Vec<Params> {
    let mut out = Vec::new();
    for k in 2..=8 {
        for n in k - 1..=g.cap(12) {
            out.push(params([("k", k.into()), ("n", n.into())]));
        }
    }
    out
}

/// `Σ_{j=1}^k (-α)^j ŵ(k,j) (n+j)!` against `(-α)^k n! (n+1)! / (n-k+1)!`.
fn guo_qi_sides(alpha: i64, k: usize, n: usize, value: impl Fn(usize) -> ExactInt) -> Sides {
    let lhs: ExactInt = (1..=k)
        .map(|j| int_pow(-alpha, j as u32) * value(j) * factorial((n + j) as u64))
        .sum();
    let rhs = int_pow(-alpha, k as u32) * factorial(n as u64) * factorial(n as u64 + 1)
        / factorial((n + 1 - k) as u64);
    Sides::new(lhs, rhs)
}

fn gouqi_eval(p: &Params) -> Result<Sides> {
    let (k, n) = (get_usize(p, "k")?, get_usize(p, "n")?);
    Ok(guo_qi_sides(1, k, n, |j| lah(k, j)))
}

fn graham_grid(g: &Grid) -> Vec<Params> {
    let mut out = Vec::new();
    for l in 0..=8i64 {
        for m in -2..=2i64 {
            for n in 0..=g.cap(8) as i64 {
                for s in 0..=8i64 {
                    out.push(params([
                        ("l", l.into()),
                        ("m", m.into()),
                        ("n", n.into()),
                        ("s", s.into()),
                    ]));
                }
            }
        }
    }
    out
}

fn graham_eval(p: &Params) -> Result<Sides> {
    let (l, m, n, s) = (
        get_int(p, "l")?,
        get_int(p, "m")?,
        get_int(p, "n")?,
        get_int(p, "s")?,
    );
    // C(l, m+j) vanishes unless 0 <= m + j <= l
    let lhs: ExactInt = (-m..=l - m)
        .map(|j| binomial_general(l, m + j) * binomial_general(s + j, n) * sign_pow(j))
        .sum();
    let rhs = binomial_general(s - m, n - l) * sign_pow(l + m);
    Ok(Sides::new(lhs, rhs))
}

// ---- Whitney families ----------------------------------------------------

fn w_hgf_grid(g: &Grid) -> Vec<Params> {
    let mut out = Vec::new();
    for form in ["first", "second"] {
        for p in alpha_n_grid(g, 0, 10) {
            let mut p = p;
            p.insert("form".into(), form.into());
            out.push(p);
        }
    }
    out
}

fn w_hgf_eval(p: &Params) -> Result<Sides> {
    let (a, n) = (get_int(p, "alpha")?, get_usize(p, "n")?);
    let (lhs, rhs) = match get_str(p, "form")? {
        // (t|-α)_n = Σ w(n,k) t^k
        "first" => {
            let t = triangle(WhitneyFamily::First, a, n)?;
            (
                gen_factorial_poly(n, -a),
                expand(t.rows()[n].iter().cloned(), |k| {
                    LaurentPoly::var().pow(k as u32)
                }),
            )
        }
        // t^n = Σ W(n,k) (t|α)_k
        _ => {
            let t = triangle(WhitneyFamily::Second, a, n)?;
            (
                LaurentPoly::var().pow(n as u32),
                expand(t.rows()[n].iter().cloned(), |k| gen_factorial_poly(k, a)),
            )
        }
    };
    Ok(Sides::new(tpoly(&lhs), tpoly(&rhs)))
}

fn wl_hgf_grid(g: &Grid) -> Vec<Params> {
    alpha_n_grid(g, 0, 10)
}

fn wl_hgf_eval(p: &Params) -> Result<Sides> {
    let (a, n) = (get_int(p, "alpha")?, get_usize(p, "n")?);
    let t = triangle(WhitneyFamily::Lah, a, n)?;
    let rhs = expand(t.rows()[n].iter().cloned(), |k| gen_factorial_poly(k, a));
    Ok(Sides::new(tpoly(&gen_factorial_poly(n, -a)), tpoly(&rhs)))
}

fn alpha_nk_grid(g: &Grid, cap: usize) -> Vec<Params> {
    nk_grid(g.cap(cap), Some(&g.alphas))
}

fn wl_rec_grid(g: &Grid) -> Vec<Params> {
    alpha_nk_grid(g, 12)
        .into_iter()
        .filter(|p| get_usize(p, "n").unwrap() >= 1)
        .collect()
}

fn wl_rec_eval(p: &Params) -> Result<Sides> {
    let (a, n, k) = (get_int(p, "alpha")?, get_usize(p, "n")?, get_usize(p, "k")?);
    // values from the closed product form, independent of the recurrence table
    let w = |n: usize, k: usize| twl(a, n, k, TwlMethod::Product);
    let left = if k == 0 {
        ExactInt::zero()
    } else {
        w(n - 1, k - 1)?
    };
    let rhs = left + w(n - 1, k)? * (a * (n + k - 1) as i64);
    Ok(Sides::new(w(n, k)?, rhs))
}

fn wl_conv_grid(g: &Grid) -> Vec<Params> {
    alpha_nk_grid(g, 12)
}

fn wl_conv_eval(p: &Params) -> Result<Sides> {
    let (a, n, j) = (get_int(p, "alpha")?, get_usize(p, "n")?, get_usize(p, "k")?);
    let w1 = triangle(WhitneyFamily::First, a, n)?;
    let w2 = triangle(WhitneyFamily::Second, a, n)?;
    let rhs: ExactInt = (j..=n).map(|k| w1.get(n, k) * w2.get(k, j)).sum();
    Ok(Sides::new(twl(a, n, j, TwlMethod::Recurrence)?, rhs))
}

fn route_eval(p: &Params, method: TwlMethod) -> Result<Sides> {
    let (a, n, k) = (get_int(p, "alpha")?, get_usize(p, "n")?, get_usize(p, "k")?);
    Ok(Sides::new(
        twl(a, n, k, TwlMethod::Recurrence)?,
        twl(a, n, k, method)?,
    ))
}

fn r1_eval(p: &Params) -> Result<Sides> {
    route_eval(p, TwlMethod::Explicit)
}

fn r2_eval(p: &Params) -> Result<Sides> {
    route_eval(p, TwlMethod::Scaled)
}

fn r2_1_eval(p: &Params) -> Result<Sides> {
    route_eval(p, TwlMethod::Product)
}

fn r3_grid(g: &Grid) -> Vec<Params> {
    let alphas = g.alphas.clone();
    let mut out = egf_grid(g, &alphas);
    if alphas.len() == 1 {
        // egf_grid only tags alpha when it is ambiguous
        for p in &mut out {
            p.insert("alpha".into(), alphas[0].into());
        }
    }
    out
}

fn r3_eval(p: &Params) -> Result<Sides> {
    let (a, k, order) = (
        get_int(p, "alpha")?,
        get_usize(p, "k")?,
        get_usize(p, "order")?,
    );
    let lhs = twl_egf(a, k, order)?;
    let t = triangle(WhitneyFamily::Lah, a, order)?;
    let rhs = (0..=order)
        .map(|n| rat_to_string(&(int_to_rat(&t.get(n, k)) / int_to_rat(&factorial(n as u64)))));
    Ok(Sides::new(list(lhs.canonical_coeffs()), list(rhs)))
}

fn mansour_grid(g: &Grid) -> Vec<Params> {
    let mut out = Vec::new();
    for p in alpha_nk_grid(g, 8) {
        let mut p = p;
        p.insert("seq".into(), "whitney-lah".into());
        out.push(p);
    }
    for p in nk_grid(g.cap(8), None) {
        let mut p = p;
        p.insert("seq".into(), "generic".into());
        out.push(p);
    }
    out
}

fn mansour_eval(p: &Params) -> Result<Sides> {
    let (n, k) = (get_usize(p, "n")?, get_usize(p, "k")?);
    let len = n.max(k) + 1;
    let spec = match get_str(p, "seq")? {
        "whitney-lah" => MansourSpec::whitney_lah(get_int(p, "alpha")?, len),
        // a_i = i^2 + 1, b_j = j(j+3)/2: distinct b values, unrelated to α
        _ => MansourSpec::from_fns(
            len,
            |i| rat((i * i + 1) as i64),
            |j| rat((j * (j + 3) / 2) as i64),
        ),
    };
    let method = match get_mode(p)? {
        Mode::Corrected => MansourMethod::Explicit,
        Mode::AsPrinted => MansourMethod::ExplicitAsPrinted,
    };
    let lhs = mansour_u(&spec, n, k, MansourMethod::Recurrence)?;
    let rhs = mansour_u(&spec, n, k, method)?;
    Ok(Sides::new(rat_to_string(&lhs), rat_to_string(&rhs)))
}

fn r4_grid(g: &Grid) -> Vec<Params> {
    let mut out = Vec::new();
    for &a in &g.alphas {
        for p in gouqi_grid(g) {
            let mut p = p;
            p.insert("alpha".into(), a.into());
            out.push(p);
        }
    }
    out
}

fn r4_eval(p: &Params) -> Result<Sides> {
    let (a, k, n) = (get_int(p, "alpha")?, get_usize(p, "k")?, get_usize(p, "n")?);
    let t = triangle(WhitneyFamily::Lah, a, k)?;
    Ok(guo_qi_sides(a, k, n, |j| t.get(k, j)))
}

fn ortho_grid(g: &Grid) -> Vec<Params> {
    let mut out = Vec::new();
    for &a in &g.alphas {
        for dim in 1..=g.cap(10) {
            for order in ["second-first", "first-second"] {
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

fn ortho_eval(p: &Params) -> Result<Sides> {
    let (a, dim, order) = (
        get_int(p, "alpha")?,
        get_usize(p, "dim")?,
        get_str(p, "order")?,
    );
    let w1 = triangle(WhitneyFamily::First, a, dim)?;
    let w2 = triangle(WhitneyFamily::Second, a, dim)?;
    let product: Vec<Vec<ExactInt>> = (0..dim)
        .map(|n| {
            (0..dim)
                .map(|m| {
                    (0..dim)
                        .map(|j| match order {
                            // Σ_j (-1)^(j-m) W(n,j) w(j,m)
                            "second-first" => {
                                sign_pow(j as i64 - m as i64) * w2.get(n, j) * w1.get(j, m)
                            }
                            // Σ_j (-1)^(n-j) w(n,j) W(j,m)
                            _ => sign_pow(n as i64 - j as i64) * w1.get(n, j) * w2.get(j, m),
                        })
                        .sum()
                })
                .collect()
        })
        .collect();
    Ok(Sides::new(matrix(product), identity_matrix(dim)))
}

fn w_inv_grid(g: &Grid) -> Vec<Params> {
    alpha_nk_grid(g, 12)
}

fn w_inv_eval(p: &Params) -> Result<Sides> {
    let (a, n, k) = (get_int(p, "alpha")?, get_usize(p, "n")?, get_usize(p, "k")?);
    let w2 = triangle(WhitneyFamily::Second, a, n)?;
    let wl = triangle(WhitneyFamily::Lah, a, n)?;
    let rhs: ExactInt = (0..=n)
        .map(|j| sign_pow((n - j) as i64) * w2.get(n, j) * wl.get(j, k))
        .sum();
    Ok(Sides::new(w2.get(n, k), rhs))
}

fn gqif1_grid(g: &Grid) -> Vec<Params> {
    alpha_n_grid(g, 0, 12)
}

fn gqif1_eval(p: &Params) -> Result<Sides> {
    let (a, n) = (get_int(p, "alpha")?, get_usize(p, "n")?);
    Ok(Sides::new(dowling(a, n)?, dowling_qi(a, n)?))
}

pub(crate) const DOBINSKI_REL_TOL: f64 = 1e-9;

fn dobinski_grid(g: &Grid) -> Vec<Params> {
    alpha_n_grid(g, 0, 10)
}

fn dobinski_eval(p: &Params) -> Result<Sides> {
    let (a, n) = (get_int(p, "alpha")?, get_usize(p, "n")?);
    let exact = dowling(a, n)?;
    let approx = dowling_dobinski(a, n, 1e-12, 200)?;
    let exact_f = crate::whitney::to_f64(&exact);
    let rel = ((approx - exact_f) / exact_f).abs();
    // the float side is rendered as the exact value when within tolerance
    let rhs = if rel < DOBINSKI_REL_TOL && exact.is_positive() {
        exact.to_string()
    } else {
        format!("{approx:e}")
    };
    Ok(Sides::new(exact, rhs))
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
        suite: Suite::Classical,
        has_as_printed: false,
        grid_fn,
        eval,
    }
}

pub(super) fn specs() -> Vec<IdentitySpec> {
    let mut mansour = entry(
        "mansour",
        "generic recurrence u(n,k) against its divided-difference closed form",
        "Mansour-Mulay-Shattuck closed form for a generic triangular recurrence",
        mansour_grid,
        mansour_eval,
    );
    mansour.has_as_printed = true;
    vec![
        entry(
            "lah_oracle",
            "L(n,k) by n!/k! C(n-1,k-1) equals the count of ordered-block set partitions",
            "combinatorial definition of Lah numbers",
            |g| nk_grid(g.cap(8), None),
            lah_oracle_eval,
        ),
        entry(
            "lah_rec",
            "L(n+1,k) = L(n,k-1) + (n+k) L(n,k)",
            "Lah triangular recurrence",
            lah_rec_grid,
            lah_rec_eval,
        ),
        entry(
            "lah_egf",
            "sum_n L(n,k) t^n/n! = (t/(1-t))^k / k!",
            "Lah exponential generating function",
            lah_egf_grid,
            lah_egf_eval,
        ),
        entry(
            "lah_hgf",
            "<t>_n = sum_k L(n,k) (t)_k",
            "Lah numbers as rising-to-falling connection coefficients",
            lah_hgf_grid,
            lah_hgf_eval,
        ),
        entry(
            "stirling_hgf",
            "(t)_n, t^n and <t>_n expanded through Stirling numbers",
            "Stirling numbers as connection coefficients",
            stirling_hgf_grid,
            stirling_hgf_eval,
        ),
        entry(
            "lah_conv",
            "L(n,k) = sum_j c(n,j) S(j,k)",
            "Lah-Stirling convolution",
            lah_conv_grid,
            lah_conv_eval,
        ),
        entry(
            "qi_bell",
            "B_n = sum_k (-1)^(n-k) (sum_l L(k,l)) S(n,k)",
            "Qi's explicit formula for Bell numbers",
            qi_bell_grid,
            qi_bell_eval,
        ),
        entry(
            "w_hgf",
            "(t|-a)_n = sum_k w(n,k) t^k and t^n = sum_k W(n,k) (t|a)_k",
            "Belbachir-Bousbaa horizontal generating functions",
            w_hgf_grid,
            w_hgf_eval,
        ),
        entry(
            "wl_rec",
            "Whitney-Lah recurrence on closed-form values",
            "Belbachir-Bousbaa Whitney-Lah recurrence",
            wl_rec_grid,
            wl_rec_eval,
        ),
        entry(
            "wl_hgf",
            "(t|-a)_n = sum_k wl(n,k) (t|a)_k",
            "Belbachir-Bousbaa Whitney-Lah generating function",
            wl_hgf_grid,
            wl_hgf_eval,
        ),
        entry(
            "wl_conv",
            "wl(n,j) = sum_k w(n,k) W(k,j)",
            "Whitney-Lah numbers as a sum of products",
            wl_conv_grid,
            wl_conv_eval,
        ),
        mansour,
        entry(
            "r1",
            "recurrence against a^(n-k)/k! sum_j (-1)^(k-j) C(k,j) <j>_n",
            "Whitney-Lah explicit formula",
            |g| alpha_nk_grid(g, 12),
            r1_eval,
        ),
        entry(
            "r2",
            "recurrence against a^(n-k) L(n,k)",
            "Whitney-Lah numbers as scaled Lah numbers",
            |g| alpha_nk_grid(g, 12),
            r2_eval,
        ),
        entry(
            "r2.1",
            "recurrence against a^(n-k) n!/k! C(n-1,n-k)",
            "Whitney-Lah closed product form",
            |g| alpha_nk_grid(g, 12),
            r2_1_eval,
        ),
        entry(
            "r3",
            "sum_n wl(n,k) t^n/n! = (t/(1-a t))^k / k!",
            "Whitney-Lah exponential generating function",
            r3_grid,
            r3_eval,
        ),
        entry(
            "graham",
            "sum_j C(l,m+j) C(s+j,n) (-1)^j = (-1)^(l+m) C(s-m,n-l)",
            "alternating sum of products of binomial coefficients",
            graham_grid,
            graham_eval,
        ),
        entry(
            "r4",
            "sum_j (-a)^j wl(k,j) (n+j)! = (-a)^k n! (n+1)! / (n-k+1)!",
            "Whitney-Lah generalization of the Guo-Qi identity",
            r4_grid,
            r4_eval,
        ),
        entry(
            "gouqi",
            "sum_j (-1)^j L(k,j) (n+j)! = (-1)^k n! (n+1)! / (n-k+1)!",
            "Guo-Qi Lah identity",
            gouqi_grid,
            gouqi_eval,
        ),
        entry(
            "ortho",
            "signed products of the Whitney triangles of both kinds are identity matrices",
            "orthogonality of translated Whitney numbers",
            ortho_grid,
            ortho_eval,
        ),
        entry(
            "w_inv",
            "W(n,k) = sum_j (-1)^(n-j) W(n,j) wl(j,k)",
            "inverse relation applied to the sum-of-products formula",
            w_inv_grid,
            w_inv_eval,
        ),
        entry(
            "gqif1",
            "D(n) = sum_j (-1)^(n-j) (sum_k wl(j,k)) W(n,j)",
            "Qi-type formula for translated Dowling numbers",
            gqif1_grid,
            gqif1_eval,
        ),
        entry(
            "dobinski",
            "truncated Dobinski-type series within relative 1e-9 of D(n)",
            "Dobinski-type formula for translated Dowling numbers",
            dobinski_grid,
            dobinski_eval,
        ),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn list_rendering() {
        assert_eq!(list([1, 2, 3]), "[1, 2, 3]");
        assert_eq!(identity_matrix(2), "[[1, 0], [0, 1]]");
        assert_eq!(list(Vec::<u8>::new()), "[]");
    }

    #[test]
    fn egf_series_coefficients() {
        let s = twl_egf(2, 1, 4).unwrap();
        // t/(1-2t) = t + 2t^2 + 4t^3 + 8t^4
        assert_eq!(s.canonical_coeffs(), vec!["0", "1", "2", "4", "8"]);
    }
}
