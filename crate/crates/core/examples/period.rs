//! A periodic τ chain and the closed recursion it yields.

use hankelcf::period::{closed_recursion, detect_period, fe_oracle};
use hankelcf::seeds;

fn main() {
    let seed = seeds::s5_ex2();
    let names = seed.param_names();
    let report = detect_period(&seed, 30).unwrap().expect("periodic");
    println!("preperiod {}, period {}, cases {:?}", report.preperiod, report.period, report.cases());

    let rec = closed_recursion(&report, fe_oracle(&seed), 15).unwrap();
    println!("{}", rec.factor.describe(&names));
    for (n, h) in rec.base.iter().enumerate() {
        println!("  H_{n} = {}", h.to_string_with(&names));
    }
    println!("validated for n <= {}", rec.validated_upto);
    println!("H_16 = {}", rec.eval(16).unwrap().to_string_with(&names));
}
