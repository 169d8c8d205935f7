// Finite prime sets whose correlation approximates a chosen target,
// including negative targets reached through the witness prime of α_H.
//
//     cargo run --example construct_target

use liouville_corr::report::{decimal, parse_rational};
use liouville_corr::{construct_target, kappa_finite, ShiftSet};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let eps = parse_rational("1e-4").ok_or("bad eps")?;
    let cases = [(vec![0], "1/2", 0), (vec![0], "0.9", 50), (vec![0, 1], "-1/4", 0), (vec![0, 4, 6], "1/7", 10)];
    for (h, target, floor) in cases {
        let h = ShiftSet::new(h)?;
        let target = parse_rational(target).ok_or("bad target")?;
        let p = construct_target(&h, &target, &eps, floor)?;
        let k = kappa_finite(&p, &h)?.value;
        assert!((&k - &target) <= eps && (&target - &k) <= eps);
        println!(
            "H = {h:<8} target {:>8} floor {floor:<3} -> kappa {:<14} using {} primes {p}",
            decimal(&target, 6),
            decimal(&k, 10),
            p.len()
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
