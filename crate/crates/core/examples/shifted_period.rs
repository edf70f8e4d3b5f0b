//! A τ chain whose states repeat up to a shift of an index `p`.

use hankelcf::period::{detect_shifted_period, fe_oracle, shifted_recursion};
use hankelcf::seeds;

fn main() {
    // (C - 1 - x)/x^2, whose Hankel determinants are H^(2)_n of the Catalan numbers.
    let seed = seeds::catalan_a0();
    let r = detect_shifted_period(&seed, 4, 10).unwrap().expect("shifted-periodic");
    println!(
        "stride {} raw steps ({} fused), shift {}, held-out samples verified: {}",
        r.stride,
        r.fused_stride(),
        r.shift(),
        r.holdout_verified
    );
    for (slot, map) in &r.maps {
        println!("  {} = {}", slot.label(), map.to_string_with(&["p"]));
    }
    let rec = shifted_recursion(&r, fe_oracle(&seed), 12).unwrap();
    let h: Vec<String> = (0..=12).map(|n| rec.eval(n).unwrap().to_string_with(&[])).collect();
    println!("H_n, n = 0..12: {}", h.join(", "));
}
