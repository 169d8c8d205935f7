// Exact local densities η_p^H, including the full derivation for
// H = {0, 4, 6} at p = 2 and p = 3.
//
//     cargo run --example local_density

use liouville_corr::{eta_local, eta_local_fast, eta_local_traced, exceptional_primes, ShiftSet};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let h = ShiftSet::new(vec![0, 4, 6])?;
    println!("H = {h}, exceptional primes {}", exceptional_primes(&h));

    for p in [2, 3] {
        let d = eta_local_traced(p, &h)?;
        println!("\n{d}");
        print!("{}", d.render_trace().unwrap_or_default());
    }

    println!("\nnon-exceptional primes use the closed form d/(p+1):");
    for p in [5u64, 7, 11, 13] {
        let exact = eta_local(p, &h)?;
        let fast = eta_local_fast(p, &h).ok_or("prime should be non-exceptional")?;
        assert_eq!(exact, fast);
        println!("  eta_{p}{h} = {exact}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
