// Special and co-special simple roots for a handful of types.
//
// Pass type names on the command line to override the defaults:
// `cargo run --example classify_table -- E7 F4`.

use rootkit::classify::{highest_roots, verify_theorem};
use rootkit::report::ReportDocument;
use rootkit::{CartanType, RootSystem};

fn main() -> rootkit::Result<()> {
    let mut types: Vec<CartanType> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    if types.is_empty() {
        types = ["B4", "C4", "D5", "F4"].iter().map(|n| n.parse()).collect::<rootkit::Result<_>>()?;
    }
    for t in types {
        let s = RootSystem::build(t);
        let (h, h2) = highest_roots(&s);
        println!("== {}  α^h = {h}  α^h2 = {h2}", s.name());
        let report = verify_theorem(&s);
        print!("{}", ReportDocument::from_report(&s, &report)?.to_table());
        println!();
    }
    Ok(())
}
