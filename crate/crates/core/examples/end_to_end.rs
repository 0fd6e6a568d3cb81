//! Raw text to classifier suggestions: segment, tag, extract, aggregate,
//! then resolve a noun that never occurs in the text.

use nca::corpus::{ClassifierType, SemClassCode};
use nca::lexicon::load_lexicon;
use nca::matcher::{events_for_line, ExtractConfig};
use nca::resolver::resolve;
use nca::segment::Segmenter;
use nca::table::NcaTable;
use nca::tagger::{tag, TaggerConfig};

const LEXICON: &str = include_str!("../data/sample_lexicon.tsv");

const RAW: &str = "\
nakriansaamkhon chopkinsom
maasongtuanii nokbangtua
thahansiikhon kinthuriannuengluuk
kanaklumnaktongtiew maatualek
nokfuungnii somsongluuk
";

fn main() -> nca::Result<()> {
    let lexicon = load_lexicon(LEXICON.as_bytes())?;
    let segmenter = Segmenter::new(&lexicon);
    let config = ExtractConfig::default();

    let mut events = Vec::new();
    for (i, line) in RAW.lines().enumerate() {
        let tokens = tag(&segmenter.segment(line), &lexicon, &TaggerConfig::default());
        println!("{}", nca::corpus::render_tagged_line(&tokens));
        events.extend(events_for_line(&tokens, i + 1, &config));
    }

    println!("\nevents:");
    for e in &events {
        println!("  {}", e.to_tsv());
    }

    let table = NcaTable::aggregate(&events);
    println!("\ntable:\n{}", table.to_tsv());

    let animal = SemClassCode::parse("13111").unwrap();
    let r = resolve("kwaang", &animal, ClassifierType::Unit, &table);
    println!(
        "kwaang (animal, unit) -> {} via {}",
        r.classifier.as_deref().unwrap_or("-"),
        r.provenance_text(&animal, None)
    );
    Ok(())
}
