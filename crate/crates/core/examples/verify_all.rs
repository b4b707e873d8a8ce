// Run every check on all irreducible types up to a rank (default 6).

use rootkit::suite::check_all;
use rootkit::CartanType;

fn main() {
    let max_rank = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(6);
    let checks = check_all(&CartanType::all_up_to(max_rank));
    for c in &checks {
        println!(
            "{:<3} rows {} all equivalent {} witness failures {} ({:.1?})",
            c.ctype.to_string(),
            c.rows.len(),
            c.all_equivalent,
            c.witness_failures,
            c.elapsed
        );
    }
    let failed = checks.iter().filter(|c| !c.passed()).count();
    println!("{} systems, {failed} failed", checks.len());
    assert_eq!(failed, 0);
}
