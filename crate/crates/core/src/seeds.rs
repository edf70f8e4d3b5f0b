//! Ready-made equations: Catalan, the `f_m`/`F_m`/`G_m` families, the two
//! weighted path families with periodic chains, and the `(m, q, l)` family.

use crate::algebra::{parse_ratfun, MPoly};
use crate::fe::{fe_from_quadratic, FeError, QuadFE, QuadraticForm};

fn build(d: u32, k: u32, u: &str, v: &str, params: &[&str]) -> QuadFE {
    let rf = |s: &str| parse_ratfun(s, params).expect("built-in expression parses");
    QuadFE::new(d, k, rf(u), rf(v), params.iter().map(|s| s.to_string()).collect())
        .expect("built-in equation is valid")
}

fn reciprocal(p1: &str, p2: &str, params: &[&str]) -> QuadFE {
    let rf = |s: &str| parse_ratfun(s, params).expect("built-in expression parses");
    fe_from_quadratic(&QuadraticForm::Reciprocal { p1: rf(p1), p2: rf(p2) }, params)
        .expect("built-in equation is valid")
}

/// `C = 1/(1 - x C)`.
pub fn catalan() -> QuadFE {
    build(0, 1, "1", "-1", &[])
}

/// `(C - 1 - x)/x^2`, whose Hankel determinants are `H^{(2)}_n(C)`.
pub fn catalan_a0() -> QuadFE {
    build(0, 3, "(1 - 2*x - 2*x^2)/(x + 2)", "-1/(x + 2)", &[])
}

/// `F = 1 + x^3 F + x^2 F^2`.
pub fn prop11() -> QuadFE {
    reciprocal("x^3", "x^2", &[])
}

/// `f_m = 1 + a x f_m + b x^m f_m^2` over parameters `[a, b]`.
pub fn f_m(m: u32) -> QuadFE {
    let form = QuadraticForm::CatalanLike { m, a: MPoly::var(2, 0), b: MPoly::var(2, 1) };
    fe_from_quadratic(&form, &["a", "b"]).expect("f_m is valid")
}

/// `f_m - 1 = x (a + b x^{m-1}) / (1 - a x - 2 b x^m - b x^m (f_m - 1))`.
pub fn f_m_minus_one(m: u32) -> QuadFE {
    let unit = format!("(a + b*x^{})", m - 1);
    build(1, m, &format!("(1 - a*x - 2*b*x^{m})/{unit}"), &format!("-b/{unit}"), &["a", "b"])
}

/// `F_m = 1 + (a+t) x F_m + b x^m F_m f_m` over `[a, b, t]`.
///
/// Eliminating `f_m` gives `F = 1/(1 - (a+2t)x - (b x^m - t x + t(a+t) x^2) F)`.
pub fn big_f_m(m: u32) -> QuadFE {
    let params = ["a", "b", "t"];
    let v = format!("t - t*(a + t)*x - b*x^{}", m - 1);
    build(0, 1, "1 - (a + 2*t)*x", &v, &params)
}

/// `(G_m - 1)/x` over `[a, b]`, where `G_m = 1 + a x G_m + 2 b x^m G_m f_m`.
///
/// `G_m^2 ((1 - a x)^2 - 4 b x^m) = 1`, so `G_m` itself has no linear term
/// in the sense of the canonical form; `H = (G_m - 1)/x` satisfies
/// `H = N/(2P + x P H)` with `P = (1 - a x)^2 - 4 b x^m`, `N = (1 - P)/x`.
/// Its Hankel determinants are `H^1_n(G_m)`.
pub fn g_m_shifted(m: u32) -> QuadFE {
    let params = ["a", "b"];
    let p = format!("((1 - a*x)^2 - 4*b*x^{m})");
    let n = format!("((1 - {p})/x)");
    build(0, 1, &format!("2*{p}/{n}"), &format!("{p}/{n}"), &params)
}

/// Steps `U, D, H1 (weight t+1), H2 (weight t)`:
/// `F = 1 + (t+1) x F + t x^2 F + x^2 F^2`.
pub fn s5_ex1() -> QuadFE {
    reciprocal("(t + 1)*x + t*x^2", "x^2", &["t"])
}

/// Steps `U, D, H2 (weight t), H3 (weight t+1)`:
/// `F = 1 + t x^2 F + (t+1) x^3 F + x^2 F^2`.
pub fn s5_ex2() -> QuadFE {
    reciprocal("t*x^2 + (t + 1)*x^3", "x^2", &["t"])
}

/// `F = x^m / (1 - a x^q - b x^l F)` over `[a, b]`.
pub fn mql(m: u32, q: u32, l: u32) -> Result<QuadFE, FeError> {
    let form = QuadraticForm::Mql { m, q, l, a: MPoly::var(2, 0), b: MPoly::var(2, 1) };
    fe_from_quadratic(&form, &["a", "b"])
}

/// Look up a seed by name, e.g. `catalan`, `f3`, `F2`, `G4shift`, `s5ex1`, `mql:1,3,8`.
pub fn by_name(name: &str) -> Option<QuadFE> {
    let num = |s: &str| s.parse::<u32>().ok().filter(|&m| m >= 1);
    match name {
        "catalan" => Some(catalan()),
        "catalan-a0" => Some(catalan_a0()),
        "prop11" => Some(prop11()),
        "s5ex1" => Some(s5_ex1()),
        "s5ex2" => Some(s5_ex2()),
        _ => {
            if let Some(rest) = name.strip_prefix("mql:") {
                let v: Vec<u32> = rest.split(',').filter_map(|s| s.trim().parse().ok()).collect();
                return match v[..] {
                    [m, q, l] => mql(m, q, l).ok(),
                    _ => None,
                };
            }
            if let Some(m) = name.strip_suffix("shift").and_then(|s| s.strip_prefix('G')).and_then(num) {
                return Some(g_m_shifted(m));
            }
            if let Some(m) = name.strip_suffix("-1").and_then(|s| s.strip_prefix('f')).and_then(num) {
                return Some(f_m_minus_one(m));
            }
            if let Some(m) = name.strip_prefix('f').and_then(num) {
                return Some(f_m(m));
            }
            if let Some(m) = name.strip_prefix('F').and_then(num) {
                return Some(big_f_m(m));
            }
            None
        }
    }
}
