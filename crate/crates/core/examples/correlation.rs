// κ_P^H as an Euler-type product of local factors, and the identity
// κ = 1 − 2η_P^H.
//
//     cargo run --example correlation

use liouville_corr::report::{decimal, fraction};
use liouville_corr::{eta_set, kappa_finite, PrimeSet, Rational, ShiftSet};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let cases = [
        (vec![2, 3], vec![0, 4, 6]),
        (vec![3], vec![1, 2]),
        (vec![2, 3, 5, 7], vec![0]),
        (vec![2, 3, 5, 7, 11, 13], vec![0, 1]),
    ];
    for (p, h) in cases {
        let (p, h) = (PrimeSet::new(p)?, ShiftSet::new(h)?);
        let k = kappa_finite(&p, &h)?;
        let eta = eta_set(&p, &h)?;
        assert_eq!(k.value, Rational::from_integer(1.into()) - eta * Rational::from_integer(2.into()));
        let factors: Vec<String> = k.factors.iter().map(|(p, f)| format!("{p}:{}", fraction(f))).collect();
        println!(
            "P = {p:<16} H = {h:<10} kappa = {:>12} ~ {:<14} factors [{}]",
            fraction(&k.value),
            decimal(&k.value, 8),
            factors.join(", ")
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
