// Serialize a classification report and read it back.

use rootkit::classify::verify_theorem;
use rootkit::report::{DescribeDocument, ReportDocument};
use rootkit::RootSystem;

fn main() -> rootkit::Result<()> {
    let s = RootSystem::build("B3".parse()?);
    let doc = ReportDocument::from_report(&s, &verify_theorem(&s))?;
    let json = doc.to_json();
    println!("{json}");

    let back = ReportDocument::from_json(&json)?;
    assert_eq!(back.highest_root_vector()?, doc.highest_root_vector()?);
    println!("\nCSV:\n{}", doc.to_csv());

    let describe = DescribeDocument::new(&s);
    println!("{}", describe.to_text().lines().take(6).collect::<Vec<_>>().join("\n"));
    Ok(())
}
