//! Check closed-form catalog entries against direct determinants.

use hankelcf::catalog::{entry, eval_catalog, verify_entry, Indices, DEFAULT_SEED};
use hankelcf::algebra::Rat;

fn main() {
    let h = eval_catalog("fm.H", &Indices::new(&[("m", 3), ("n", 3)]), &None).unwrap();
    println!("fm.H at m = 3, n = 3: {}", h.to_string_with(&["a", "b"]));

    let point = Some(vec![Rat::one(), Rat::one()]);
    let h = eval_catalog("G1.H", &Indices::new(&[("n", 3)]), &point).unwrap();
    println!("G1.H at a = b = 1, n = 3: {}", h.to_string_with(&[]));

    for id in ["catalan.Hk", "s5.ex1.H", "G2.H1"] {
        let e = entry(id).unwrap();
        let r = verify_entry(&e, DEFAULT_SEED).unwrap();
        println!("{id}: {} ({} points, {})", if r.pass { "pass" } else { "FAIL" }, r.checked, e.statement);
        if let Some(stated) = &r.stated {
            println!("  as stated: {} ({})", if stated.pass { "pass" } else { "fails" }, stated.note);
        }
    }
}
