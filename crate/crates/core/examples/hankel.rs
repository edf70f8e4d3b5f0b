//! Hankel determinants of the Catalan numbers and of a weighted path family.

use hankelcf::fe::solve_series;
use hankelcf::hankel::hankel_dets;
use hankelcf::seeds;

fn main() {
    let c = solve_series(&seeds::catalan(), 24).unwrap();
    for k in 0..=3 {
        let h: Vec<String> = hankel_dets(&c, 8, k).unwrap().iter().map(|d| d.to_string_with(&[])).collect();
        println!("H^({k})_n(C), n = 0..8: {}", h.join(", "));
    }

    let fe = seeds::s5_ex1();
    let names = fe.param_names();
    let s = solve_series(&fe, 12).unwrap();
    for (n, h) in hankel_dets(&s, 6, 0).unwrap().iter().enumerate() {
        println!("H_{n} = {}", h.to_string_with(&names));
    }
}
