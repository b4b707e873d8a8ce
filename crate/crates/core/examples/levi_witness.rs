// Words avoiding a simple root that carry it to a chosen long root,
// and to the dominant element of its Levi orbit.

use rootkit::weyl::replay;
use rootkit::witness::{dominant_witness, levi_conjugator};
use rootkit::RootSystem;

fn main() -> rootkit::Result<()> {
    let s = RootSystem::build("D5".parse()?);
    let i = 0;
    for &b in s.positives() {
        if s.coefficients(b)[i] == 0 {
            continue;
        }
        let w = levi_conjugator(&s, i, s.root(b))?;
        assert!(w.verify(&s));
        println!("α{i} -> {:<24} by {}", w.target.to_string(), w.word);
    }

    let s = RootSystem::build("C4".parse()?);
    let w = dominant_witness(&s, 0)?;
    println!("\nin {}: α0 reaches {} by {}", s.name(), w.target, w.word);
    for v in replay(&s, &w.word, &w.source)? {
        println!("  {v}");
    }

    match dominant_witness(&RootSystem::build("G2".parse()?), 0) {
        Ok(_) => unreachable!(),
        Err(e) => println!("\nG2: {e}"),
    }
    Ok(())
}
