// Build root systems both ways and inspect them.
//
// Run with `cargo run --example build_root_systems`.

use rootkit::{CartanType, RootSystem};

fn main() -> rootkit::Result<()> {
    for name in ["A3", "B3", "C3", "D4", "G2", "F4", "E6"] {
        let t: CartanType = name.parse()?;
        let s = RootSystem::build(t);
        println!(
            "{:<3} rank {} ambient dim {:>2}  {:>3} roots  simply laced: {}",
            s.name(),
            s.rank(),
            s.ambient_dim(),
            s.roots().len(),
            s.is_simply_laced()
        );
    }

    // B3 in coordinates, and again from its Cartan matrix alone.
    let t: CartanType = "B3".parse()?;
    let coords = RootSystem::coordinate_model(t)?;
    let closure = RootSystem::from_cartan(t)?;
    println!("\nB3 simple roots in coordinates:");
    for i in 0..coords.rank() {
        println!("  α{} = {}  |α|² = {}", i, coords.simple(i), coords.squared_length(coords.simple_index(i)));
    }
    println!("B3 simple roots on the basis Δ (closure model):");
    for i in 0..closure.rank() {
        println!("  α{} = {}", i, closure.simple(i));
    }
    assert_eq!(coords.cartan_matrix(), closure.cartan_matrix());
    println!("Cartan matrices agree:\n{:?}", coords.cartan_matrix());

    let dual = coords.dual();
    println!("\ndual of {} is {} with {} roots", coords.name(), dual.name(), dual.roots().len());
    Ok(())
}
