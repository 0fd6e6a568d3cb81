//! Lexicon-lookup tagging: each segmented piece becomes a `(w, p, s)` token
//! using the most frequent lexicon reading.

use crate::corpus::{PosTag, TaggedToken};
use crate::error::{Error, Result};
use crate::lexicon::Lexicon;
use crate::segment::Segmentation;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TaggerConfig {
    unknown_pos: PosTag,
}

impl TaggerConfig {
    /// The tag given to unknown pieces. Must not be `CL`: an unknown word
    /// never anchors a concordance.
    pub fn new(unknown_pos: PosTag) -> Result<TaggerConfig> {
        if unknown_pos == PosTag::Cl {
            return Err(Error::InvalidConfig("unknown-word tag cannot be CL".into()));
        }
        Ok(TaggerConfig { unknown_pos })
    }

    pub fn unknown_pos(&self) -> &PosTag {
        &self.unknown_pos
    }
}

impl Default for TaggerConfig {
    fn default() -> Self {
        TaggerConfig {
            unknown_pos: PosTag::Unk,
        }
    }
}

pub fn tag(pieces: &Segmentation, lexicon: &Lexicon, config: &TaggerConfig) -> Vec<TaggedToken> {
    pieces
        .pieces
        .iter()
        .map(|p| {
            let best = if p.known { lexicon.lookup(&p.surface).first() } else { None };
            match best {
                Some(entry) => entry.to_token(),
                None => TaggedToken::new(p.surface.clone(), config.unknown_pos.clone()),
            }
        })
        .collect()
}

/// Tag already-segmented surfaces, deciding known/unknown by lexicon membership.
pub fn tag_surfaces<'a>(
    surfaces: impl IntoIterator<Item = &'a str>,
    lexicon: &Lexicon,
    config: &TaggerConfig,
) -> Vec<TaggedToken> {
    surfaces
        .into_iter()
        .map(|s| match lexicon.lookup(s).first() {
            Some(entry) => entry.to_token(),
            None => TaggedToken::new(s, config.unknown_pos.clone()),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{ClassifierType, SemClassCode};
    use crate::lexicon::load_lexicon;
    use crate::segment::Piece;

    fn pieces(items: &[(&str, bool)]) -> Segmentation {
        Segmentation {
            pieces: items
                .iter()
                .map(|&(s, known)| Piece {
                    surface: s.into(),
                    known,
                })
                .collect(),
        }
    }

    #[test]
    fn known_and_unknown_pieces() {
        let lex = load_lexicon("nakrian\tNCMN\t111\t20\t\n".as_bytes()).unwrap();
        let out = tag(
            &pieces(&[("nakrian", true), ("zzz", false)]),
            &lex,
            &TaggerConfig::default(),
        );
        assert_eq!(
            out,
            vec![
                TaggedToken::new("nakrian", PosTag::Ncmn).with_sem(SemClassCode::parse("111").unwrap()),
                TaggedToken::new("zzz", PosTag::Unk),
            ]
        );
    }

    #[test]
    fn most_frequent_reading_wins() {
        let lex = load_lexicon("bai\tNCMN\t\t4\t\nbai\tCL\t\t9\t1\n".as_bytes()).unwrap();
        let out = tag(&pieces(&[("bai", true)]), &lex, &TaggerConfig::default());
        assert_eq!(out[0].pos, PosTag::Cl);
        assert_eq!(out[0].cltype, Some(ClassifierType::Unit));
    }

    #[test]
    fn unknown_tag_cannot_be_classifier() {
        assert!(TaggerConfig::new(PosTag::Cl).is_err());
        let cfg = TaggerConfig::new(PosTag::Other("X".into())).unwrap();
        let out = tag_surfaces(["q"], &Lexicon::default(), &cfg);
        assert_eq!(out[0].pos, PosTag::Other("X".into()));
    }
}
