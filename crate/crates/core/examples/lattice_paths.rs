//! Weighted lattice-path counts as an independent check on series coefficients.

use hankelcf::algebra::Rat;
use hankelcf::paths::{coefficients_match, coefficients_match_at, count_paths, mql_steps, StepSet};
use hankelcf::seeds;

fn main() {
    let motzkin = StepSet::unweighted(0, &[(1, 1), (1, 0), (1, -1)]).unwrap();
    let counts: Vec<String> = count_paths(&motzkin, 10).iter().map(|p| p.to_string_with(&[])).collect();
    println!("Motzkin paths: {}", counts.join(", "));
    let f2 = seeds::f_m(2).eval_params(&[Rat::one(), Rat::one()]).unwrap();
    println!("match f2 at a = b = 1 to n = 30: {}", coefficients_match(&motzkin, &f2, 30).unwrap());

    let (steps, params) = StepSet::parse(
        r#"{"params": ["t"], "steps": [{"dx":1,"dy":1}, {"dx":1,"dy":-1}, {"dx":1,"dy":0,"w":"t + 1"}, {"dx":2,"dy":0,"w":"t"}]}"#,
    )
    .unwrap();
    let names: Vec<&str> = params.iter().map(String::as_str).collect();
    for (n, w) in count_paths(&steps, 4).iter().enumerate() {
        println!("  W[{n}][0] = {}", w.to_string_with(&names));
    }
    println!("match its equation to n = 30: {}", coefficients_match(&steps, &seeds::s5_ex1(), 30).unwrap());

    // x^m/(1 - a x^q - b x^l F) counts paths with down step (l+m-1, -1), offset by m.
    let (m, q, l) = (1, 3, 8);
    let steps = mql_steps(q, l + m - 1).unwrap();
    let fe = seeds::mql(m as u32, q as u32, l as u32).unwrap();
    println!("mql ({m},{q},{l}) to n = 30: {}", coefficients_match_at(&steps, &fe, 30, m).unwrap());
}
