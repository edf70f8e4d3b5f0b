//! Series solutions of quadratic functional equations.

use hankelcf::fe::solve_series;
use hankelcf::input::load_equation;
use hankelcf::seeds;

fn main() {
    let catalan = seeds::catalan();
    println!("{catalan}");
    println!("  {:?}", solve_series(&catalan, 10).unwrap().to_strings(&[]));

    let f2 = seeds::f_m(2);
    println!("{f2}");
    println!("  {:?}", solve_series(&f2, 4).unwrap().to_strings(&f2.param_names()));

    let motzkin = load_equation(r#"{"seed": "f2", "at": {"a": "1", "b": "1"}}"#).unwrap();
    println!("f2 at a = b = 1: {:?}", solve_series(&motzkin, 10).unwrap().to_strings(&[]));
}
