use hankelcf::algebra::{parse_frac, Frac, MPoly, Rat};
use hankelcf::catalog::*;

fn idx(pairs: &[(&str, i64)]) -> Indices {
    Indices::new(pairs)
}

fn ab(s: &str) -> Frac {
    parse_frac(s, &["a", "b"]).unwrap()
}

#[test]
fn every_entry_matches_the_oracle_on_its_grid() {
    for e in catalog() {
        let r = verify_entry(&e, DEFAULT_SEED).unwrap();
        let bad = r.results.iter().find(|p| !p.pass);
        assert!(r.pass, "{} fails at {:?}", e.id, bad);
        assert!(r.checked > 0, "{} checked nothing", e.id);
    }
}

#[test]
fn stated_forms_that_need_correction() {
    let mut corrected: Vec<String> = Vec::new();
    for e in catalog().iter().filter(|e| e.erratum.is_some()) {
        let r = verify_entry(e, DEFAULT_SEED).unwrap();
        let stated = r.stated.unwrap();
        assert!(!stated.pass, "{} as stated already passes", e.id);
        assert!(stated.first_failure.is_some());
        corrected.push(e.id.to_string());
    }
    assert_eq!(corrected, ["G2.H1", "Gm.H1", "G2.H2", "F3.H2", "G3.H2", "s6.thm4.H"]);
}

#[test]
fn fibonacci() {
    let (a, b) = (MPoly::var(2, 0), MPoly::var(2, 1));
    assert!(fib(0, &a, &b).unwrap().is_zero());
    assert!(fib(1, &a, &b).unwrap().is_one());
    assert_eq!(Frac::from_poly(fib(3, &a, &-&b).unwrap()), ab("a^2 - b"));
    let one = MPoly::one(0);
    assert_eq!(fib(5, &one, &one).unwrap(), MPoly::from_int(0, 5));
    assert!(matches!(fib(-1, &a, &b), Err(CatalogError::Domain { .. })));
}

#[test]
fn closed_form_examples() {
    let v = eval_catalog("fm.H", &idx(&[("m", 3), ("n", 3)]), &None).unwrap();
    assert_eq!(v, ab("-b^2"));
    let v = eval_catalog("catalan.Hk", &idx(&[("i", 2), ("n", 5)]), &None).unwrap();
    assert_eq!(v, Frac::from_int(0, 6));
    let v = eval_catalog("prop1.seq", &idx(&[("n", 17)]), &None).unwrap();
    assert!(v.is_zero());
    let one = Some(vec![Rat::one(), Rat::one()]);
    let v = eval_catalog("G1.H", &idx(&[("n", 3)]), &one).unwrap();
    assert_eq!(v, Frac::from_int(2, 32));
}

#[test]
fn g1_determinant_at_unit_parameters() {
    let s = family_series(QPreset::G, 1, 6, &Some(vec![Rat::one(), Rat::one()])).unwrap();
    assert_eq!(hankelcf::hankel::hankel_det(&s, 3, 0).unwrap(), Frac::from_int(2, 32));
}

#[test]
fn catalan_shifted_determinants() {
    for n in 0..10 {
        let h = |i| eval_catalog("catalan.Hk", &idx(&[("i", i), ("n", n)]), &None).unwrap();
        assert!(h(0).is_one() && h(1).is_one());
        assert_eq!(h(2), Frac::from_int(0, n + 1));
    }
}

#[test]
fn domain_is_checked_before_evaluation() {
    let err = eval_catalog("fm.H", &idx(&[("m", 1), ("n", 3)]), &None).unwrap_err();
    assert_eq!(err, CatalogError::Domain { id: "fm.H".into(), predicate: "m >= 2".into() });
    let err = eval_catalog("s6.thm3.H", &idx(&[("m", 1), ("q", 3), ("l", 4), ("n", 3)]), &None).unwrap_err();
    assert!(matches!(err, CatalogError::Domain { .. }));
    assert!(matches!(eval_catalog("fm.H", &idx(&[("n", 3)]), &None), Err(CatalogError::MissingIndex(_))));
    assert!(matches!(eval_catalog("nope", &idx(&[]), &None), Err(CatalogError::UnknownId(_))));
    let err = eval_catalog("f1.H", &idx(&[("n", 2)]), &Some(vec![Rat::one()])).unwrap_err();
    assert_eq!(err, CatalogError::ParamCount { expected: 2, got: 1 });
}

#[test]
fn period_fourteen_sequence() {
    for n in 1..60 {
        let h = |n| eval_catalog("prop1.seq", &idx(&[("n", n)]), &None).unwrap();
        assert_eq!(h(n), h(n + 14));
    }
}

#[test]
fn residue_classes_are_total() {
    for e in catalog().iter().filter(|e| !e.is_identity()) {
        for fam in e.default_grid().families {
            for n in 0..40 {
                let i = fam.with("n", n);
                if e.check_domain(&i).is_ok() {
                    e.eval(&i, &None).unwrap_or_else(|err| panic!("{} {}: {err}", e.id, i.describe()));
                }
            }
        }
    }
}

// H_n H^(2)_(n-2) = H_(n-1) H^(2)_(n-1) - (H^1_(n-1))^2 among the catalog's own values.
#[test]
fn condensation_among_closed_forms() {
    for fam in ["f", "F", "G"] {
        for m in 4..=6 {
            let get = |k: &str, n: i64| {
                let id = if k.is_empty() { format!("{fam}m.H") } else { format!("{fam}m.{k}") };
                eval_catalog(&id, &idx(&[("m", m), ("n", n)]), &None).unwrap()
            };
            for n in 2..=4 * m {
                let lhs = &get("", n) * &get("H2", n - 2);
                let mid = get("H1", n - 1);
                let rhs = &(&get("", n - 1) * &get("H2", n - 1)) - &(&mid * &mid);
                assert_eq!(lhs, rhs, "{fam}_{m} at n = {n}");
            }
        }
    }
}

#[test]
fn mql_four_class_family_at_random_points() {
    let e = entry("s6.thm3.H").unwrap();
    let grid = Grid { families: vec![idx(&[("m", 1), ("q", 3), ("l", 8)])], n_max: 14, mode: Mode::Points(4) };
    let r = verify_entry_on(&e, &grid, 7).unwrap();
    assert!(r.pass);
    assert_eq!(r.checked, 4 * 15);
}

#[test]
fn reports_serialize() {
    let r = verify_entry(&entry("f2.H1").unwrap(), DEFAULT_SEED).unwrap();
    let json = serde_json::to_string(&r).unwrap();
    let back: VerificationReport = serde_json::from_str(&json).unwrap();
    assert_eq!(back, r);
    let csv = reports_to_csv(&[r]).unwrap();
    assert!(csv.starts_with("id,family,n,point,seed,pass,expected,oracle\n"));
    assert_eq!(csv.lines().count(), 14);
    let m = manifest();
    assert_eq!(m.len(), catalog().len());
    assert!(m.iter().any(|e| e.id == "lemma25.rec" && e.identity));
}
