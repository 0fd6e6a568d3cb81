//! Walk the semantic class hierarchy encoded in class codes.

use nca::corpus::SemClassCode;
use nca::hierarchy::{ancestors, is_ancestor, load_labels};

const LABELS: &str = include_str!("../data/labels.tsv");

fn main() -> nca::Result<()> {
    let labels = load_labels(LABELS.as_bytes())?;
    for (code, label) in labels.iter() {
        println!("{}{code} {label}", "  ".repeat(code.depth() - 1));
    }

    let fruit = SemClassCode::parse("13114").unwrap();
    let path: Vec<String> = ancestors(&fruit)
        .iter()
        .map(|c| format!("{c} ({})", labels.get(c).unwrap_or("?")))
        .collect();
    println!("\nancestors of {fruit}: {}", path.join(" -> "));

    let person = SemClassCode::parse("111").unwrap();
    let thing = SemClassCode::parse("13").unwrap();
    println!("13 above 13114: {}", is_ancestor(&thing, &fruit));
    println!("13 above 111:   {}", is_ancestor(&thing, &person));
    Ok(())
}
