// α_H and the spectrum interval [min(α_H, 0), 1] for a few shift sets.
//
//     cargo run --example spectrum

use liouville_corr::report::fraction;
use liouville_corr::{exceptional_primes, spectrum_describe, ShiftSet};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for h in [vec![0], vec![0, 1], vec![0, 2], vec![0, 4, 6], vec![0, 1, 2], vec![0, 6, 10, 15], vec![0, 2, 6, 8, 12]] {
        let h = ShiftSet::new(h)?;
        let s = spectrum_describe(&h)?;
        println!(
            "H = {:<14} exceptional {:<10} alpha = {:>6} at p = {:<3} interval [{}, {}]",
            h.to_string(),
            exceptional_primes(&h).to_string(),
            fraction(&s.alpha),
            s.witness_prime,
            fraction(&s.lower),
            fraction(&s.upper)
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
