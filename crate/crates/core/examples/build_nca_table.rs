//! Load an association table, print per-class representatives and merge
//! in freshly extracted counts.

use nca::corpus::{ClassifierType, SemClassCode};
use nca::hierarchy::load_labels;
use nca::table::{NcaKey, NcaTable};

const TABLE: &str = include_str!("../data/association_table.tsv");
const LABELS: &str = include_str!("../data/labels.tsv");

fn main() -> nca::Result<()> {
    let mut table = NcaTable::load(TABLE.as_bytes())?;
    let labels = load_labels(LABELS.as_bytes())?;
    println!("{} entries, {} events", table.len(), table.total_freq());

    let summary = |table: &NcaTable| {
        for class in table.classes() {
            let rep = |t| table.representative_for_class(&class, t).unwrap_or_else(|| "-".into());
            println!(
                "  {:<6} {:<10} unit={:<6} collective={}",
                class.as_str(),
                labels.get(&class).unwrap_or("-"),
                rep(ClassifierType::Unit),
                rep(ClassifierType::Collective)
            );
        }
    };
    summary(&table);

    // New evidence: plants counted with `ton` and in `khong`.
    let plant = SemClassCode::parse("13113").unwrap();
    let mut more = NcaTable::new();
    more.add(NcaKey::new("mamuang", plant.clone(), "ton", ClassifierType::Unit), 4);
    more.add(NcaKey::new("mamuang", plant, "khong", ClassifierType::Collective), 2);
    table.merge(&more);
    println!("after merge:");
    summary(&table);

    print!("\n{}", table.to_tsv().lines().take(5).collect::<Vec<_>>().join("\n"));
    println!("\n...");
    Ok(())
}
