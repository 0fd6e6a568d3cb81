//! Segment and tag a few raw lines, printing the tagged-corpus format.

use nca::corpus::PosTag;
use nca::lexicon::load_lexicon;
use nca::segment::Segmenter;
use nca::tagger::{tag, TaggerConfig};

const LEXICON: &str = include_str!("../data/sample_lexicon.tsv");

fn main() -> nca::Result<()> {
    let lexicon = load_lexicon(LEXICON.as_bytes())?;
    let segmenter = Segmenter::new(&lexicon);
    let config = TaggerConfig::default();

    let raw = ["thahansongkhon", "maatuanii", "klumnakrianyai", "kinsomsaamluuk"];
    for line in raw {
        let tokens = tag(&segmenter.segment(line), &lexicon, &config);
        println!("{}", nca::corpus::render_tagged_line(&tokens));
    }

    // Unknown words get a configurable tag.
    let foreign = TaggerConfig::new(PosTag::from_label("FOREIGN"))?;
    let tokens = tag(&segmenter.segment("maaxyztua"), &lexicon, &foreign);
    println!("{}", nca::corpus::render_tagged_line(&tokens));
    Ok(())
}
