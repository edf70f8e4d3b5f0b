//! A few τ steps, each reducing a Hankel determinant to a smaller one.

use hankelcf::fe::TauChain;
use hankelcf::period::verify_chain;
use hankelcf::seeds;

fn main() {
    let seed = seeds::f_m(3);
    let names = seed.param_names();
    let chain = TauChain::build(&seed, 6).unwrap();
    for (i, r) in chain.relations.iter().enumerate() {
        println!(
            "step {i} ({:?}): H_n(F{i}) = {} * ({})^n * H_(n-{})(F{})",
            r.case,
            r.sign,
            r.gamma.to_string_with(&names),
            r.shift,
            i + 1
        );
        println!("  F{} : {}", i + 1, chain.states[i + 1]);
    }
    let checked = verify_chain(&chain, 8).unwrap().expect("every step agrees with direct determinants");
    println!("checked {checked} (step, n) pairs against direct determinants");
}
