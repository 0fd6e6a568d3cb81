//! Pick classifiers for nouns, including nouns never seen in the corpus.
//!
//!     cargo run --example resolve_classifier -- appern 13114 1

use nca::corpus::{ClassifierType, SemClassCode};
use nca::hierarchy::load_labels;
use nca::resolver::resolve;
use nca::table::NcaTable;

const TABLE: &str = include_str!("../data/association_table.tsv");
const LABELS: &str = include_str!("../data/labels.tsv");

fn main() -> nca::Result<()> {
    let table = NcaTable::load(TABLE.as_bytes())?;
    let labels = load_labels(LABELS.as_bytes())?;

    let args: Vec<String> = std::env::args().skip(1).collect();
    let queries: Vec<(String, String, String)> = match &args[..] {
        [noun, class, cltype] => vec![(noun.clone(), class.clone(), cltype.clone())],
        _ => [
            ("khon", "111", "1"),
            ("appern", "13114", "1"),
            ("gangken", "13111", "2"),
            ("mamuang", "131135", "1"),
            ("rot", "2", "1"),
        ]
        .iter()
        .map(|&(n, c, t)| (n.into(), c.into(), t.into()))
        .collect(),
    };

    for (noun, class, cltype) in queries {
        let (Some(class), Some(cltype)) = (SemClassCode::parse(&class), ClassifierType::parse(&cltype)) else {
            eprintln!("bad query {noun} {class} {cltype}");
            continue;
        };
        let r = resolve(&noun, &class, cltype, &table);
        println!(
            "{noun:<10} {class:<7} type {cltype}: {:<6} {}",
            r.classifier.as_deref().unwrap_or("-"),
            r.provenance_text(&class, Some(&labels))
        );
    }
    Ok(())
}
