// Sieved partial averages S_P(x) converging to the exact κ_P^H.
//
//     cargo run --release --example sieve_average [x]

use liouville_corr::report::{decimal, fraction};
use liouville_corr::{kappa_finite, running_average, PrimeSet, ShiftSet, SieveConfig};

fn run_with(x: u64) -> Result<(), Box<dyn std::error::Error>> {
    let cases = [(vec![2], vec![0]), (vec![3], vec![1, 2]), (vec![2, 3], vec![0, 4, 6]), (vec![3, 5, 7], vec![0])];
    for (p, h) in cases {
        let (p, h) = (PrimeSet::new(p)?, ShiftSet::new(h)?);
        let exact = kappa_finite(&p, &h)?.value;
        let cfg = SieveConfig::new(x).with_stride(x / 4);
        let series = running_average(&p, &h, &cfg)?;
        println!("P = {p}, H = {h}, kappa = {} ~ {}", fraction(&exact), decimal(&exact, 8));
        for s in &series.samples {
            println!("  S({:>10}) = {:>12}", s.x, decimal(&s.average(), 8));
        }
    }
    Ok(())
}

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    run_with(400_000)
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    let x = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(10_000_000);
    run_with(x)
}
