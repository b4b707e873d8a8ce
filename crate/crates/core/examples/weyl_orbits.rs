// Orbits of the full Weyl group and of Levi subgroups.

use rootkit::weyl::{apply_word, orbit, replay};
use rootkit::{RootSystem, SimpleSubset, WeylWord};

fn main() -> rootkit::Result<()> {
    let s = RootSystem::build("B3".parse()?);
    let a0 = s.simple(0).clone();
    let a2 = s.simple(2).clone();

    let full = SimpleSubset::full(s.rank());
    println!("|W·α0| = {} (long roots)", orbit(&s, &a0, &full)?.len());
    println!("|W·α2| = {} (short roots)", orbit(&s, &a2, &full)?.len());

    let levi = SimpleSubset::levi(s.rank(), 0);
    let o = orbit(&s, &a0, &levi)?;
    println!("orbit of α0 under W generated by {:?}:", levi.indices());
    for v in o.elements() {
        println!("  {v}");
    }

    // words act right to left: [1, 2] means s1(s2(v))
    let w = WeylWord::new(vec![1, 2]);
    println!("{w} applied to α1 = {}", apply_word(&s, &w, s.simple(1))?);
    for (step, v) in replay(&s, &w, s.simple(1))?.iter().enumerate() {
        println!("  step {step}: {v}");
    }
    Ok(())
}
