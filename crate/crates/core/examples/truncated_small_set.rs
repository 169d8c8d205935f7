// A small infinite prime set handled as a finite part plus a declared
// bound on the omitted reciprocal sum. Here P is the primes ≡ 3 (mod 4)
// up to 10⁴, truncated at 100.
//
//     cargo run --release --example truncated_small_set

use liouville_corr::report::{decimal, fraction};
use liouville_corr::{kappa_truncated, running_average, PrimeSet, Rational, ShiftSet, SieveConfig};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let full = PrimeSet::up_to(10_000).filter(|p| p % 4 == 3);
    let finite = full.filter(|p| p <= 100);
    let tail: Rational = full
        .iter()
        .filter(|&p| p > 100)
        .map(|p| Rational::new(1.into(), (p + 1).into()))
        .sum();
    let h = ShiftSet::new(vec![0])?;

    let interval = kappa_truncated(&finite, &tail, &h)?;
    println!("{} primes kept, {} in the tail", finite.len(), full.len() - finite.len());
    println!("tail sum 1/(p+1) ~ {}", decimal(&tail, 8));
    println!(
        "kappa in [{}, {}]",
        decimal(&interval.lower(), 8),
        decimal(&interval.upper(), 8)
    );

    let x = 1_000_000;
    let s = running_average(&full, &h, &SieveConfig::new(x))?;
    let avg = s.last().ok_or("no samples")?.average();
    println!("S({x}) for the full set = {} ~ {}", fraction(&avg), decimal(&avg, 8));
    assert!(interval.contains(&avg));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
