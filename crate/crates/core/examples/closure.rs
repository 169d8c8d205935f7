// Families of shift sets closed under symmetric difference and
// translation always contain a two-element set {0, D}; this finds one.
//
//     cargo run --example closure

use liouville_corr::{closure_membership, family_from_generators, two_element_member, ShiftSet};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let families: Vec<Vec<Vec<u64>>> = vec![
        vec![vec![0, 1, 2]],
        vec![vec![0, 2]],
        vec![vec![0, 1, 2], vec![0, 3]],
        vec![vec![0, 1, 3], vec![2, 3, 5, 6]],
        vec![vec![0, 1, 4, 5, 7, 9, 13]],
    ];
    for gens in families {
        let gens = gens.into_iter().map(ShiftSet::new).collect::<Result<Vec<_>, _>>()?;
        let fam = family_from_generators(&gens)?;
        let m = two_element_member(&fam)?;
        let shown: Vec<String> = gens.iter().map(|g| g.to_string()).collect();
        println!("generators {}", shown.join(" "));
        println!("  f = {}", fam.generator);
        println!("  r = {}, m = {}, n = {}: member {m}", m.r, m.multiplicity, m.n);
        if let Some(pair) = m.to_shift_set() {
            assert!(closure_membership(&fam, &pair));
        }
        assert!(fam.contains_pair(&m.distance));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
