// Pointwise Ω_P, λ_P and Λ_P^H, and the symmetric-difference group law
// λ_{P₁△P₂} = λ_{P₁}·λ_{P₂}.
//
//     cargo run --example pointwise

use liouville_corr::{lambda, omega, shifted_lambda, PrimeSet, ShiftSet};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let p1 = PrimeSet::new(vec![2, 5, 11])?;
    let p2 = PrimeSet::new(vec![3, 5, 7])?;
    let sd = p1.symmetric_difference(&p2);
    println!("P1 = {p1}, P2 = {p2}, P1 xor P2 = {sd}");
    println!("{:>4} {:>8} {:>8} {:>8}", "n", "l_P1", "l_P2", "l_xor");
    for n in [12i64, 30, 77, 150, 1001, 2310] {
        let (a, b, c) = (lambda(&p1, n)?, lambda(&p2, n)?, lambda(&sd, n)?);
        assert_eq!(c, a * b);
        println!("{n:>4} {:>8} {:>8} {:>8}", a.as_i64(), b.as_i64(), c.as_i64());
    }

    let liouville = PrimeSet::up_to(1000);
    let h = ShiftSet::new(vec![0, 1])?;
    let values: Vec<i64> = (1..=20)
        .map(|n| shifted_lambda(&liouville, &h, n).map(|s| s.as_i64()))
        .collect::<Result<_, _>>()?;
    println!("Omega(720) = {}", omega(&liouville, 720)?);
    println!("lambda(n)lambda(n+1), n = 1..20: {values:?}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
