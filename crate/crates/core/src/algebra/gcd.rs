//! Polynomial gcd over `Q[v0, ..., vk]` for the handful of variables this
//! crate deals with (x plus at most a few parameters).
//!
//! Recursive primitive PRS: split off monomial content, then content with
//! respect to a main variable, then a primitive pseudo-remainder sequence. A
//! specialization test at a fixed rational point short-circuits the common
//! coprime case.

use super::{MPoly, Rat};

/// Monic gcd (leading coefficient 1 in lex order). `gcd(0, 0) = 0`.
pub fn gcd(p: &MPoly, q: &MPoly) -> MPoly {
    assert_eq!(p.nvars(), q.nvars(), "arity mismatch in gcd");
    let n = p.nvars();
    if p.is_zero() {
        return q.monic();
    }
    if q.is_zero() {
        return p.monic();
    }
    if p.is_constant() || q.is_constant() {
        return MPoly::one(n);
    }
    let mp = p.monomial_content();
    let mq = q.monomial_content();
    let gm = mp.gcd(mq, n);
    let p1 = p.div_monomial(mp).expect("monomial content divides");
    let q1 = q.div_monomial(mq).expect("monomial content divides");
    let g = gcd_no_monomial(&p1, &q1);
    g.mul_term(gm, &Rat::one()).monic()
}

/// Least common multiple, monic.
pub fn lcm(p: &MPoly, q: &MPoly) -> MPoly {
    if p.is_zero() || q.is_zero() {
        return MPoly::zero(p.nvars());
    }
    let g = gcd(p, q);
    let pq = p.div_exact(&g).expect("gcd divides");
    (&pq * q).monic()
}

fn gcd_no_monomial(p: &MPoly, q: &MPoly) -> MPoly {
    let n = p.nvars();
    if p.is_constant() || q.is_constant() || p.is_monomial() || q.is_monomial() {
        return MPoly::one(n);
    }
    // Often one argument divides the other.
    let (small, big) = if p.len() <= q.len() { (p, q) } else { (q, p) };
    if big.div_exact(small).is_some() {
        return small.monic();
    }
    let sp = p.support_vars();
    let sq = q.support_vars();
    if let Some(&v) = sp.iter().find(|v| !sq.contains(v)) {
        return gcd(&content_in(p, v), q);
    }
    if let Some(&v) = sq.iter().find(|v| !sp.contains(v)) {
        return gcd(p, &content_in(q, v));
    }
    // Main variable: smallest combined degree keeps the PRS short.
    let v = *sp
        .iter()
        .min_by_key(|&&v| (p.degree_in(v) + q.degree_in(v), v))
        .expect("non-constant polynomial has a variable");
    let pu = p.to_univariate(v);
    let qu = q.to_univariate(v);
    let cp = content(&pu);
    let cq = content(&qu);
    let c = gcd(&cp, &cq);
    let pp = divide_all(&pu, &cp);
    let qq = divide_all(&qu, &cq);
    let g = primitive_prs(pp, qq, n);
    let g = MPoly::from_univariate(n, v, &g);
    &c * &g
}

/// Gcd of the coefficients of `p` viewed as a polynomial in `v`.
pub fn content_in(p: &MPoly, v: usize) -> MPoly {
    content(&p.to_univariate(v))
}

fn content(coeffs: &[MPoly]) -> MPoly {
    let mut nz: Vec<&MPoly> = coeffs.iter().filter(|c| !c.is_zero()).collect();
    let n = coeffs.first().map(|c| c.nvars()).unwrap_or(0);
    if nz.is_empty() {
        return MPoly::zero(n);
    }
    nz.sort_by_key(|c| c.len());
    let mut g = nz[0].monic();
    for c in &nz[1..] {
        if g.is_constant() {
            return MPoly::one(n);
        }
        g = gcd(&g, c);
    }
    g
}

fn divide_all(coeffs: &[MPoly], c: &MPoly) -> Vec<MPoly> {
    if c.is_one() {
        return coeffs.to_vec();
    }
    coeffs.iter().map(|x| x.div_exact(c).expect("content divides")).collect()
}

fn trim(v: &mut Vec<MPoly>) {
    while v.last().is_some_and(MPoly::is_zero) {
        v.pop();
    }
}

/// Scale a univariate polynomial to content 1 (in the coefficient ring) with
/// coprime integer coefficients.
fn primitive_part(mut coeffs: Vec<MPoly>) -> Vec<MPoly> {
    trim(&mut coeffs);
    let c = content(&coeffs);
    let mut coeffs = divide_all(&coeffs, &c);
    let mut r = Rat::content(coeffs.iter().flat_map(|p| p.terms().iter().map(|t| &t.1)));
    if coeffs.last().is_some_and(|lc| lc.leading_coeff().is_negative()) {
        r = -r;
    }
    if !r.is_one() {
        let inv = r.recip().expect("nonzero content");
        coeffs = coeffs.iter().map(|p| p.scale(&inv)).collect();
    }
    coeffs
}

fn pseudo_rem(a: &[MPoly], b: &[MPoly]) -> Vec<MPoly> {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.to_vec();
    trim(&mut r);
    while !r.is_empty() && r.len() - 1 >= db {
        let lr = r.last().unwrap().clone();
        let shift = r.len() - 1 - db;
        let mut next: Vec<MPoly> = r.iter().map(|c| c * lb).collect();
        for (i, bc) in b.iter().enumerate() {
            let t = &lr * bc;
            next[i + shift] = &next[i + shift] - &t;
        }
        trim(&mut next);
        r = next;
    }
    r
}

/// Specialize every variable except the main one; if the images are coprime
/// and the leading coefficients survive, the primitive inputs are coprime.
fn coprime_by_specialization(a: &[MPoly], b: &[MPoly]) -> bool {
    let n = a[0].nvars();
    let point: Vec<Rat> = (0..n).map(|i| Rat::frac(3 + 2 * i as i64, 7 + i as i64)).collect();
    let ev = |c: &[MPoly]| -> Vec<Rat> { c.iter().map(|p| p.eval(&point)).collect() };
    let ai = ev(a);
    let bi = ev(b);
    if ai.last().is_none_or(Rat::is_zero) || bi.last().is_none_or(Rat::is_zero) {
        return false;
    }
    univariate_rat_gcd_degree(ai, bi) == 0
}

fn univariate_rat_gcd_degree(mut a: Vec<Rat>, mut b: Vec<Rat>) -> usize {
    let trim_r = |v: &mut Vec<Rat>| {
        while v.last().is_some_and(Rat::is_zero) {
            v.pop();
        }
    };
    trim_r(&mut a);
    trim_r(&mut b);
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        // a mod b over Q.
        let lb = b.last().unwrap().clone();
        while a.len() >= b.len() && !a.is_empty() {
            let q = a.last().unwrap() / &lb;
            let shift = a.len() - b.len();
            for (i, bc) in b.iter().enumerate() {
                let t = &q * bc;
                a[i + shift] -= &t;
            }
            a.pop();
            trim_r(&mut a);
        }
        std::mem::swap(&mut a, &mut b);
    }
    a.len().saturating_sub(1)
}

fn primitive_prs(mut a: Vec<MPoly>, mut b: Vec<MPoly>, nvars: usize) -> Vec<MPoly> {
    trim(&mut a);
    trim(&mut b);
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    if a[0].nvars() > 0 && a.iter().chain(b.iter()).any(|c| !c.is_constant()) && coprime_by_specialization(&a, &b) {
        return vec![MPoly::one(nvars)];
    }
    a = primitive_part(a);
    b = primitive_part(b);
    loop {
        if b.len() <= 1 {
            return vec![MPoly::one(nvars)];
        }
        let r = pseudo_rem(&a, &b);
        if r.is_empty() {
            return b;
        }
        if r.len() == 1 {
            return vec![MPoly::one(nvars)];
        }
        a = b;
        b = primitive_part(r);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(n: usize, i: usize) -> MPoly {
        MPoly::var(n, i)
    }
    fn c(n: usize, k: i64) -> MPoly {
        MPoly::from_int(n, k)
    }

    #[test]
    fn univariate_common_factor() {
        let x = v(1, 0);
        let one = c(1, 1);
        let p = &(&one - &x) * &(&one + &x);
        let q = (&one - &x).pow(2);
        assert_eq!(gcd(&p, &q), (&x - &one));
    }

    #[test]
    fn bivariate_common_factor() {
        let (x, a) = (v(2, 0), v(2, 1));
        let f = &(&x * &a) + &c(2, 1);
        let p = &f * &(&x + &a);
        let q = &f * &(&x - &a).pow(2);
        assert_eq!(gcd(&p, &q), f.monic());
    }

    #[test]
    fn coprime_multivariate() {
        let (x, a, b) = (v(3, 0), v(3, 1), v(3, 2));
        let p = &(&x * &a) + &b;
        let q = &(&x * &b) + &a;
        assert!(gcd(&p, &q).is_one());
    }

    #[test]
    fn monomial_and_content_parts() {
        let (x, a) = (v(2, 0), v(2, 1));
        let p = &(&x.pow(2) * &a) * &(&a + &c(2, 1));
        let q = &(&x * &a.pow(3)) * &(&a + &c(2, 1));
        let g = gcd(&p, &q);
        assert_eq!(g, (&(&x * &a) * &(&a + &c(2, 1))).monic());
    }

    #[test]
    fn lcm_divisible_by_both() {
        let (x, a) = (v(2, 0), v(2, 1));
        let p = &(&x + &a) * &(&x - &c(2, 2));
        let q = &(&x + &a) * &(&a - &c(2, 3));
        let l = lcm(&p, &q);
        assert!(l.div_exact(&p).is_some());
        assert!(l.div_exact(&q).is_some());
        assert_eq!(l.total_degree(), 3);
    }
}
