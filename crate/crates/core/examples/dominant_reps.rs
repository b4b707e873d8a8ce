// Dominant representatives, with the word that reaches them.

use rootkit::classify::fundamental_weight;
use rootkit::weyl::{apply_word, dominant_rep, is_dominant};
use rootkit::roots::rat;
use rootkit::{RatVector, RootSystem, SimpleSubset};

fn main() -> rootkit::Result<()> {
    let s = RootSystem::build("C3".parse()?);
    let full = SimpleSubset::full(s.rank());

    for r in s.simples() {
        let (d, w) = dominant_rep(&s, r, &full)?;
        println!("dom({r}) = {d} via {w}");
        assert_eq!(apply_word(&s, &w, r)?, d);
    }

    // A weight that is not a root: -η0 + 2η2.
    let chi: RatVector = &fundamental_weight(&s, 2)?.scale(&rat(2)) - &fundamental_weight(&s, 0)?;
    for sub in [full.clone(), SimpleSubset::levi(s.rank(), 1)] {
        let (d, w) = dominant_rep(&s, &chi, &sub)?;
        println!(
            "W{:?}-dominant rep of {chi}: {d} via {w} (dominant: {})",
            sub.indices(),
            is_dominant(&s, &d, &sub)?
        );
    }
    Ok(())
}
