use hankelcf::algebra::{parse_frac, parse_ratfun, Frac, Rat};
use hankelcf::fe::{QuadFE, TauChain};
use hankelcf::period::*;
use hankelcf::seeds;

fn template(d: u32, k: u32, u: &str, v: &str, params: &[&str]) -> QuadFE {
    let rf = |s: &str| parse_ratfun(s, params).unwrap();
    QuadFE::new(d, k, rf(u), rf(v), params.iter().map(|s| s.to_string()).collect()).unwrap()
}

fn frac(s: &str, params: &[&str]) -> Frac {
    parse_frac(s, params).unwrap()
}

/// The Catalan `H^{(2)}` family, `A_p = -p^2 (x + (p+1)(p+2)) / (...)`.
fn catalan_family(p: &str, params: &[&str]) -> QuadFE {
    let (q, r) = (format!("({p} + 1)"), format!("({p} + 2)"));
    let top = format!("(-{p}^2*(x + {q}*{r}))");
    template(
        0,
        2,
        &format!("(2*{p}*{q}*x^2 + 2*{p}*{q}^3*x - {p}*{q}^3)/{top}"),
        &format!("{q}^2*(x + {q}*{p})/{top}"),
        params,
    )
}

/// `A_{4p}` for `f_m - 1`, written `x^{m-4}/(u - x^2 w A)`.
fn fm_family(m: u32, p: &str, params: &[&str]) -> QuadFE {
    let q = format!("({p} + 1)");
    let bp2 = format!("(b*{p}^2)");
    let u = format!(
        "(2*{p}*{q}*a*b*x^{m1} + 2*{p}^2*b*x^{m2} - {p}*{q}^2*a^3*x + {p}*{q}^2*a^2)/{bp2}",
        m1 = m - 1,
        m2 = m - 2
    );
    let w = format!(
        "({q}^2*a^2*b*x^{m} + 2*{p}*{q}*a*b*x^{m1} + {p}^2*b*x^{m2} + {p}*{q}^3*a^4*x^2 + {q}^2*a^3*x + {p}*{q}^2*a^2)/{bp2}",
        m1 = m - 1,
        m2 = m - 2
    );
    template(m - 4, 2, &u, &format!("-{w}"), params)
}

#[test]
fn weighted_paths_first_family_is_periodic() {
    let seed = seeds::s5_ex1();
    let r = detect_period(&seed, 20).unwrap().unwrap();
    assert_eq!((r.preperiod, r.period), (0, 5));
    assert_eq!(r.chain.states[5], r.chain.states[0]);
    let rec = closed_recursion(&r, fe_oracle(&seed), 12).unwrap();
    assert_eq!(rec.shift, 3);
    for n in 3..12 {
        let expect = frac("t + 1", &["t"]).pow(2 * n - 3).unwrap();
        assert_eq!(rec.factor.eval(n).unwrap(), expect);
    }
}

#[test]
fn weighted_paths_second_family_recursion() {
    let seed = seeds::s5_ex2();
    let r = detect_period(&seed, 30).unwrap().unwrap();
    let rec = closed_recursion(&r, fe_oracle(&seed), 12).unwrap();
    assert_eq!(rec.shift, 7);
    let t = ["t"];
    for n in 7..14 {
        assert_eq!(rec.factor.eval(n).unwrap(), -frac("t + 1", &t).pow(4 * n - 14).unwrap());
    }
    let base: Vec<Frac> =
        ["1", "1", "1 + t", "0", "0", "-(1 + t)^7", "-(1 + t)^10"].iter().map(|s| frac(s, &t)).collect();
    assert_eq!(rec.base, base);
}

#[test]
fn seven_term_sign_pattern() {
    let seed = seeds::prop11();
    let r = detect_period(&seed, 20).unwrap().unwrap();
    let rec = closed_recursion(&r, fe_oracle(&seed), 20).unwrap();
    assert_eq!(rec.shift, 7);
    assert_eq!(rec.factor.eval(30).unwrap(), Frac::from_int(0, -1));
    let h: Vec<i64> = (1..=14).map(|n| rec.eval(n).unwrap().as_constant().unwrap().numer().try_into().unwrap()).collect();
    assert_eq!(h, [1, 1, 0, 0, -1, -1, -1, -1, -1, 0, 0, 1, 1, 1]);
}

#[test]
fn linear_catalan_closed_form() {
    let seed = seeds::f_m(1);
    let r = detect_period(&seed, 10).unwrap().unwrap();
    let rec = closed_recursion(&r, fe_oracle(&seed), 10).unwrap();
    let ab = ["a", "b"];
    for n in 0..14i64 {
        let e = n * (n - 1) / 2;
        let expect = &frac("b", &ab).pow(e).unwrap() * &frac("a + b", &ab).pow(e).unwrap();
        assert_eq!(rec.eval(n as usize).unwrap(), expect, "n = {n}");
    }
}

#[test]
fn wrong_recursion_is_rejected_with_index() {
    let seed = seeds::s5_ex1();
    let r = detect_period(&seed, 20).unwrap().unwrap();
    let wrong_seed = seeds::s5_ex2();
    let other = fe_oracle(&wrong_seed);
    let err = closed_recursion(&r, other, 12).unwrap_err();
    assert!(matches!(err, PeriodError::Validation { .. }), "{err}");
}

#[test]
fn growing_chain_has_no_period() {
    assert!(detect_period(&seeds::catalan_a0(), 12).unwrap().is_none());
}

#[test]
fn catalan_second_shift_family() {
    let seed = seeds::catalan_a0();
    let r = detect_shifted_period(&seed, 4, 10).unwrap().unwrap();
    assert!(r.holdout_verified);
    assert_eq!(r.shift(), 1);
    for j in 0..(r.window + r.holdout) as i64 {
        let (fe, _) = r.instantiate(j).unwrap();
        assert_eq!(fe, catalan_family(&(j + 1).to_string(), &[]), "sample {j}");
        let g = r.step_factor(j).unwrap().eval(4).unwrap();
        let q = Rat::from_int(j + 2);
        let ratio = &(&(&q * &q) - &Rat::one()) / &(&q * &q);
        assert_eq!(g, Frac::from_rat(0, ratio.pow(4).unwrap()));
    }
    let rec = shifted_recursion(&r, fe_oracle(&seed), 12).unwrap();
    for n in 0..30 {
        assert_eq!(rec.eval(n).unwrap(), Frac::from_int(0, n as i64 + 1));
    }
}

#[test]
fn catalan_family_is_exactly_shift_periodic() {
    let a = catalan_family("p", &["p"]);
    let chain = TauChain::build(&a, 2).unwrap();
    assert_eq!(chain.states[2], catalan_family("(p + 1)", &["p"]));
    let c = chain.composite(0, 2);
    assert_eq!(c.shift, 1);
    let g = frac("((p + 1)^2 - 1)/(p + 1)^2", &["p"]);
    assert_eq!(c.eval(5).unwrap(), g.pow(5).unwrap());
}

#[test]
fn fm_minus_one_stride_four_family() {
    let seed = seeds::f_m_minus_one(5).eval_params(&[Rat::one(), Rat::one()]).unwrap();
    let r = detect_shifted_period(&seed, 12, 10).unwrap().unwrap();
    assert!(r.holdout_verified);
    assert_eq!((r.stride, r.shift()), (8, 5));
    for j in 0..(r.window + r.holdout) as i64 {
        let expect = fm_family(5, &(j + 1).to_string(), &["a", "b"]).eval_params(&[Rat::one(), Rat::one()]).unwrap();
        assert_eq!(r.instantiate(j).unwrap().0, expect, "sample {j}");
    }
    let rec = shifted_recursion(&r, fe_oracle(&seed), 14).unwrap();
    assert_eq!(rec.validated_upto, 14);
}

#[test]
fn fm_family_is_exactly_shift_periodic() {
    let params = ["a", "b", "p"];
    for m in [5, 6, 7] {
        let a = fm_family(m, "p", &params);
        let chain = TauChain::build(&a, 8).unwrap();
        assert_eq!(chain.states[8], fm_family(m, "(p + 1)", &params), "m = {m}");
        let c = chain.composite(0, 8);
        assert_eq!(c.shift, m as i64);
        // Product of the four single-step factors: -(-1)^{C(m-3,2)}.
        let sign = if ((m - 3) * (m - 4) / 2) % 2 == 0 { -1 } else { 1 };
        for n in [m as i64, m as i64 + 3] {
            let f = |s: &str, e: i64| frac(s, &params).pow(e).unwrap();
            let expect = [
                f("p", n),
                f("p + 1", -3 * n + m as i64 - 2),
                f("p + 2", 2 * n - 2 * m as i64 + 2),
                f("a", -2 * m as i64),
                f("b", 2 * n - m as i64 + 3),
            ]
            .iter()
            .fold(Frac::from_int(3, sign), |acc, x| &acc * x);
            assert_eq!(c.eval(n).unwrap(), expect, "m = {m}, n = {n}");
        }
    }
}
