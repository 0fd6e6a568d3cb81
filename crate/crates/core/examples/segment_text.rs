//! Segment unspaced text with the sample lexicon.
//!
//!     cargo run --example segment_text -- "nakriansongkhon"

use nca::lexicon::load_lexicon;
use nca::segment::Segmenter;

const LEXICON: &str = include_str!("../data/sample_lexicon.tsv");

fn main() -> nca::Result<()> {
    let lexicon = load_lexicon(LEXICON.as_bytes())?;
    let segmenter = Segmenter::new(&lexicon);

    let inputs: Vec<String> = std::env::args().skip(1).collect();
    let inputs = if inputs.is_empty() {
        vec![
            "nakriansongkhon".to_string(),
            "maasaamtuanii".to_string(),
            "kaewbaitiisii".to_string(),
            "nokzzfuung".to_string(),
        ]
    } else {
        inputs
    };
    for text in &inputs {
        let seg = segmenter.segment(text);
        let unknown = seg.pieces.iter().filter(|p| !p.known).count();
        println!("{text:<20} -> {}   ({} pieces, {unknown} unknown)", seg.render(true), seg.len());
    }
    Ok(())
}
