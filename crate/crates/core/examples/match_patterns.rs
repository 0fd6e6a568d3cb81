//! Run the seven classifier patterns over the sample phrases and show how
//! the matcher settings change the result.

use nca::corpus::parse_tagged_line;
use nca::matcher::{events_for_line, ExtractConfig, GapSearchConfig, MatcherConfig, PatternId, PatternSet};

const SAMPLES: &str = include_str!("../data/expression_samples.txt");

fn show(title: &str, config: &ExtractConfig) -> nca::Result<()> {
    println!("{title}");
    for (i, line) in SAMPLES.lines().enumerate() {
        let tokens = parse_tagged_line(line)?;
        let events = events_for_line(&tokens, i + 1, config);
        if events.is_empty() {
            println!("  {:>2}  (no event)", i + 1);
        }
        for e in events {
            println!("  {:>2}  {:<6} {} + {}", i + 1, e.pattern, e.noun.surface, e.classifier.surface);
        }
    }
    Ok(())
}

fn main() -> nca::Result<()> {
    show("default settings", &ExtractConfig::default())?;

    let referential_only = ExtractConfig {
        matcher: MatcherConfig {
            patterns: PatternSet::empty().with(PatternId::Referential),
            ..MatcherConfig::default()
        },
        ..ExtractConfig::default()
    };
    show("\nreferential pattern only", &referential_only)?;

    // A relative clause between noun and classifier.
    let line = parse_tagged_line(
        "nakrian/NCMN/111 tii/REL_M chop/VERB thurian/NCMN/13114 song/NCNM khon/CL//1",
    )?;
    for span in [5, 0] {
        let config = ExtractConfig {
            matcher: MatcherConfig {
                gaps: GapSearchConfig { rel_span: span },
                ..MatcherConfig::default()
            },
            ..ExtractConfig::default()
        };
        for e in events_for_line(&line, 1, &config) {
            println!("\nrel_span={span}: {}", e.to_tsv());
        }
    }
    Ok(())
}
