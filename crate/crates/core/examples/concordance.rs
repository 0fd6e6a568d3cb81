//! Keyword-in-context fragments around every classifier.

use nca::concord::{extract_fragments_at, render_fragment, WindowConfig};
use nca::corpus::parse_tagged_line;

const SAMPLES: &str = include_str!("../data/expression_samples.txt");

fn main() -> nca::Result<()> {
    for (before, after) in [(10, 2), (2, 1)] {
        let window = WindowConfig::new(before, after)?;
        println!("window -{before}/+{after}");
        for (i, line) in SAMPLES.lines().enumerate().take(5) {
            let tokens = parse_tagged_line(line)?;
            for f in extract_fragments_at(&tokens, i + 1, &window) {
                println!("  {}\t{}", f.origin, render_fragment(&f));
            }
        }
    }
    Ok(())
}
