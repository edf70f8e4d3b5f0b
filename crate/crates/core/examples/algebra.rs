//! Exact arithmetic on parameter fractions and truncated power series.

use hankelcf::algebra::{parse_frac, Series};

fn main() {
    let ab = ["a", "b"];
    let p = parse_frac("(a^2 - b^2)/(a + b)", &ab).unwrap();
    println!("(a^2 - b^2)/(a + b) = {}", p.to_string_with(&ab));

    let q = &p * &parse_frac("1/(a - b)", &ab).unwrap();
    println!("times 1/(a - b)     = {}", q.to_string_with(&ab));

    // 1/(1 - x - x^2) as a series: the Fibonacci numbers.
    let s = Series::from_ints(0, &[1, -1, -1, 0, 0, 0, 0, 0, 0, 0]);
    println!("1/(1 - x - x^2)     = {:?}", s.inverse().unwrap().to_strings(&[]));
}
