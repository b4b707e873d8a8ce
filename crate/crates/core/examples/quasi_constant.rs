// Which fundamental weights are quasi-constant?

use rootkit::classify::{fundamental_weight, is_cospecial, is_quasi_constant, is_special};
use rootkit::{CartanType, RootSystem};

fn main() -> rootkit::Result<()> {
    for t in CartanType::all_up_to(4) {
        let s = RootSystem::build(t);
        let mut cells = Vec::new();
        for i in 0..s.rank() {
            let eta = fundamental_weight(&s, i)?;
            let qc = is_quasi_constant(&s, &eta)?;
            assert_eq!(qc, is_special(&s, i)? || is_cospecial(&s, i)?);
            cells.push(if qc { format!("η{i}") } else { "-".into() });
        }
        println!("{:<3} {}", s.name(), cells.join(" "));
    }
    Ok(())
}
