use hankelcf::algebra::{MPoly, Rat};
use hankelcf::paths::*;
use hankelcf::seeds;
use proptest::prelude::*;

fn t_steps(list: &[(usize, i64, &str)]) -> StepSet {
    let json: Vec<StepJson> = list.iter().map(|&(dx, dy, w)| StepJson { dx: dx as i64, dy, w: w.into() }).collect();
    StepSet::from_json(&json, &["t"]).unwrap()
}

fn weighted_path_family_one() -> StepSet {
    t_steps(&[(1, 1, "1"), (1, -1, "1"), (1, 0, "t + 1"), (2, 0, "t")])
}

#[test]
fn motzkin_matches_f2_at_unit_parameters() {
    let motzkin = StepSet::unweighted(0, &[(1, 1), (1, 0), (1, -1)]).unwrap();
    let f2 = seeds::f_m(2).eval_params(&[Rat::one(), Rat::one()]).unwrap();
    assert!(coefficients_match(&motzkin, &f2, 30).unwrap());
}

#[test]
fn symbolic_f_m_families() {
    for m in 1..=4 {
        let steps = StepSet::new(vec![
            Step { dx: 1, dy: 1, weight: MPoly::one(2) },
            Step { dx: 1, dy: 0, weight: MPoly::var(2, 0) },
            Step { dx: m - 1, dy: -1, weight: MPoly::var(2, 1) },
        ]);
        if m == 1 {
            assert!(steps.is_err());
            continue;
        }
        assert!(coefficients_match(&steps.unwrap(), &seeds::f_m(m as u32), 16).unwrap());
    }
}

#[test]
fn weighted_families_match_their_equations() {
    assert!(coefficients_match(&weighted_path_family_one(), &seeds::s5_ex1(), 20).unwrap());
    let two = t_steps(&[(1, 1, "1"), (1, -1, "1"), (2, 0, "t"), (3, 0, "t + 1")]);
    assert!(coefficients_match(&two, &seeds::s5_ex2(), 30).unwrap());
}

#[test]
fn weighted_family_at_zero_is_motzkin() {
    let at0: Vec<_> = count_paths(&weighted_path_family_one(), 10)
        .iter()
        .map(|p| p.eval(&[Rat::zero()]))
        .collect();
    let motzkin = count_paths(&StepSet::unweighted(0, &[(1, 1), (1, 0), (1, -1)]).unwrap(), 10);
    assert_eq!(at0, motzkin.iter().map(|p| p.constant_term()).collect::<Vec<_>>());
}

// F = x^m / (1 - a x^q - b x^l F) against steps (1,1), (q,0) weight a, (dx,-1) weight b.
// With F = x^m P, P = 1/(1 - a x^q - b x^(l+m) P): the down step is (l+m-1, -1) and
// [x^n] F = W[n-m][0]. The down step (l-1, -1) only fits when m = 0.
#[test]
fn mql_family_offset() {
    for (m, q, l) in [(0, 1, 2), (0, 2, 3), (1, 1, 2), (1, 3, 2), (2, 2, 4), (3, 2, 3)] {
        let fe = seeds::mql(m, q, l).unwrap();
        let shifted = mql_steps(q as usize, (l + m - 1) as usize).unwrap();
        assert_eq!(find_offset(&shifted, &fe, 24).unwrap(), Some(m as usize), "({m},{q},{l})");
        let plain = mql_steps(q as usize, (l - 1) as usize).unwrap();
        let plain_offset = find_offset(&plain, &fe, 24).unwrap();
        assert_eq!(plain_offset.is_some(), m == 0, "({m},{q},{l})");
    }
}

#[test]
fn step_json_round_trip() {
    let s = weighted_path_family_one();
    assert_eq!(StepSet::from_json(&s.to_json(&["t"]), &["t"]).unwrap(), s);
}

fn step_strategy() -> impl Strategy<Value = Vec<(usize, i64, i64)>> {
    prop::collection::vec((1usize..=3, -1i64..=1, 0i64..=3), 1..=5)
}

fn build(list: &[(usize, i64, i64)]) -> StepSet {
    StepSet::new(list.iter().map(|&(dx, dy, w)| Step { dx, dy, weight: MPoly::from_int(0, w) }).collect()).unwrap()
}

proptest! {
    #[test]
    fn counts_do_not_depend_on_step_order(list in step_strategy(), seed in any::<u64>()) {
        let mut shuffled = list.clone();
        let k = shuffled.len();
        shuffled.rotate_left((seed % k as u64) as usize);
        shuffled.reverse();
        prop_assert_eq!(count_paths(&build(&list), 12), count_paths(&build(&shuffled), 12));
    }

    #[test]
    fn zero_weight_is_deletion(list in step_strategy(), pick in any::<prop::sample::Index>()) {
        prop_assume!(list.len() >= 2);
        let i = pick.index(list.len());
        let mut zeroed = list.clone();
        zeroed[i].2 = 0;
        let mut deleted = list.clone();
        deleted.remove(i);
        prop_assert_eq!(count_paths(&build(&zeroed), 12), count_paths(&build(&deleted), 12));
    }
}
