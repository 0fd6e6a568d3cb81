//! Token, tag and fragment types shared by every pipeline stage, plus the
//! tagged-corpus line format.
//!
//! A tagged line is a whitespace-separated list of tokens, each token being
//! `surface/POS[/sem][/cltype]`:
//!
//! ```text
//! nakrian/NCMN/111 3/NCNM khon/CL//1
//! ```
//!
//! The semantic field may be left empty when a classifier type follows.

use std::fmt;

use crate::error::{Error, Result};

/// Part-of-speech tag.
///
/// The named variants cover every symbol used by the classifier-phrase
/// patterns. Any other label found in the data is kept verbatim in
/// [`PosTag::Other`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PosTag {
    /// Common noun.
    Ncmn,
    /// Cardinal number.
    Ncnm,
    /// Classifier.
    Cl,
    /// Determiner.
    Det,
    /// Attributive verb.
    Vatt,
    /// Relative marker.
    RelM,
    /// Interrogative marker.
    ItrM,
    /// Ordinal numeral.
    Donm,
    /// Definite demonstrative.
    Ddac,
    Verb,
    Unk,
    Other(String),
}

impl PosTag {
    /// Map a label to a tag. Known labels always map to their named variant,
    /// so `from_label(t.label()) == t` for every tag built through here.
    pub fn from_label(label: &str) -> PosTag {
        match label {
            "NCMN" => PosTag::Ncmn,
            "NCNM" => PosTag::Ncnm,
            "CL" => PosTag::Cl,
            "DET" => PosTag::Det,
            "VATT" => PosTag::Vatt,
            "REL_M" => PosTag::RelM,
            "ITR_M" => PosTag::ItrM,
            "DONM" => PosTag::Donm,
            "DDAC" => PosTag::Ddac,
            "VERB" => PosTag::Verb,
            "UNK" => PosTag::Unk,
            other => PosTag::Other(other.to_string()),
        }
    }

    pub fn label(&self) -> &str {
        match self {
            PosTag::Ncmn => "NCMN",
            PosTag::Ncnm => "NCNM",
            PosTag::Cl => "CL",
            PosTag::Det => "DET",
            PosTag::Vatt => "VATT",
            PosTag::RelM => "REL_M",
            PosTag::ItrM => "ITR_M",
            PosTag::Donm => "DONM",
            PosTag::Ddac => "DDAC",
            PosTag::Verb => "VERB",
            PosTag::Unk => "UNK",
            PosTag::Other(label) => label,
        }
    }

    /// Markers that can follow a classifier in its pronominal use.
    pub fn is_marker(&self) -> bool {
        matches!(
            self,
            PosTag::RelM | PosTag::ItrM | PosTag::Donm | PosTag::Ddac
        )
    }
}

impl fmt::Display for PosTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Classifier type carried by classifier tokens and table entries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassifierType {
    Unit = 1,
    Collective = 2,
}

impl ClassifierType {
    pub const ALL: [ClassifierType; 2] = [ClassifierType::Unit, ClassifierType::Collective];

    pub fn parse(s: &str) -> Option<ClassifierType> {
        match s {
            "1" => Some(ClassifierType::Unit),
            "2" => Some(ClassifierType::Collective),
            _ => None,
        }
    }

    pub fn code(self) -> u8 {
        self as u8
    }
}

impl fmt::Display for ClassifierType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.code())
    }
}

/// Digit-path code into the concept hierarchy, e.g. `13111` (animal).
///
/// Every digit is in `1..=9`, so a code's ancestors are exactly its proper
/// prefixes. The single value `0` is reserved for nouns that carry no
/// semantic class; it has no ancestors and is not an ancestor of anything.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SemClassCode(String);

impl SemClassCode {
    const UNCLASSIFIED: &'static str = "0";

    /// Parse a strict hierarchy code (non-empty, digits 1-9 only).
    pub fn parse(s: &str) -> Option<SemClassCode> {
        if !s.is_empty() && s.bytes().all(|b| (b'1'..=b'9').contains(&b)) {
            Some(SemClassCode(s.to_string()))
        } else {
            None
        }
    }

    /// Like [`SemClassCode::parse`] but also accepts the reserved `0`.
    pub fn parse_or_unclassified(s: &str) -> Option<SemClassCode> {
        if s == Self::UNCLASSIFIED {
            Some(Self::unclassified())
        } else {
            Self::parse(s)
        }
    }

    pub fn unclassified() -> SemClassCode {
        SemClassCode(Self::UNCLASSIFIED.to_string())
    }

    pub fn is_unclassified(&self) -> bool {
        self.0 == Self::UNCLASSIFIED
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// Number of digits, i.e. depth in the hierarchy (root level = 1).
    pub fn depth(&self) -> usize {
        if self.is_unclassified() {
            0
        } else {
            self.0.len()
        }
    }

    /// The code with its last digit removed, or `None` at the root.
    pub fn parent(&self) -> Option<SemClassCode> {
        if self.depth() > 1 {
            Some(SemClassCode(self.0[..self.0.len() - 1].to_string()))
        } else {
            None
        }
    }
}

impl fmt::Display for SemClassCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// A word with its part of speech, optional semantic class and, for
/// classifiers, optional classifier type.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TaggedToken {
    pub surface: String,
    pub pos: PosTag,
    pub sem: Option<SemClassCode>,
    pub cltype: Option<ClassifierType>,
}

impl TaggedToken {
    pub fn new(surface: impl Into<String>, pos: PosTag) -> TaggedToken {
        TaggedToken {
            surface: surface.into(),
            pos,
            sem: None,
            cltype: None,
        }
    }

    pub fn with_sem(mut self, sem: SemClassCode) -> TaggedToken {
        self.sem = Some(sem);
        self
    }

    pub fn with_cltype(mut self, cltype: ClassifierType) -> TaggedToken {
        self.cltype = Some(cltype);
        self
    }

    /// Check the token invariants: a surface usable in the line format, a
    /// label free of delimiters, and a classifier type only on `CL` tokens.
    pub fn is_valid(&self) -> bool {
        is_valid_field(&self.surface)
            && is_valid_field(self.pos.label())
            && (self.cltype.is_none() || self.pos == PosTag::Cl)
    }
}

impl fmt::Display for TaggedToken {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.surface, self.pos)?;
        if self.sem.is_some() || self.cltype.is_some() {
            f.write_str("/")?;
            if let Some(sem) = &self.sem {
                write!(f, "{sem}")?;
            }
        }
        if let Some(cltype) = self.cltype {
            write!(f, "/{cltype}")?;
        }
        Ok(())
    }
}

/// True when `s` can be used as a token field (non-empty, no `/`, no whitespace).
pub fn is_valid_field(s: &str) -> bool {
    !s.is_empty() && !s.chars().any(|c| c == '/' || c.is_whitespace())
}

/// Position of a fragment in the source corpus: 1-based line number and
/// 0-based token offset of the anchor classifier within that line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Origin {
    pub line: usize,
    pub offset: usize,
}

impl fmt::Display for Origin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.offset)
    }
}

/// Window of tagged tokens around one classifier occurrence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fragment {
    pub tokens: Vec<TaggedToken>,
    pub cl_index: usize,
    pub origin: Origin,
}

impl Fragment {
    pub fn anchor(&self) -> &TaggedToken {
        &self.tokens[self.cl_index]
    }
}

/// Parse one tagged-corpus line. A blank line yields no tokens.
///
/// Errors carry line number 0; callers reading files attach the real line
/// with [`Error::at_line`].
pub fn parse_tagged_line(line: &str) -> Result<Vec<TaggedToken>> {
    let mut tokens = Vec::new();
    for (column, raw) in token_spans(line) {
        tokens.push(parse_token(raw).map_err(|reason| Error::MalformedToken {
            line: 0,
            column,
            token: raw.to_string(),
            reason,
        })?);
    }
    Ok(tokens)
}

/// Render tokens in canonical form (single spaces, no trailing whitespace).
pub fn render_tagged_line(tokens: &[TaggedToken]) -> String {
    let mut out = String::new();
    for (i, tok) in tokens.iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        out.push_str(&tok.to_string());
    }
    out
}

/// Whitespace-separated tokens with their 1-based character column.
fn token_spans(line: &str) -> impl Iterator<Item = (usize, &str)> {
    let mut rest = line;
    let mut consumed_chars = 0usize;
    std::iter::from_fn(move || {
        let skip = rest.find(|c: char| !c.is_whitespace())?;
        consumed_chars += rest[..skip].chars().count();
        rest = &rest[skip..];
        let end = rest.find(char::is_whitespace).unwrap_or(rest.len());
        let token = &rest[..end];
        let column = consumed_chars + 1;
        consumed_chars += token.chars().count();
        rest = &rest[end..];
        Some((column, token))
    })
}

fn parse_token(raw: &str) -> std::result::Result<TaggedToken, String> {
    let fields: Vec<&str> = raw.split('/').collect();
    if fields.len() < 2 {
        return Err("expected surface/POS".into());
    }
    if fields.len() > 4 {
        return Err(format!("too many fields ({})", fields.len()));
    }
    if fields[0].is_empty() {
        return Err("empty surface".into());
    }
    if fields[1].is_empty() {
        return Err("empty POS".into());
    }
    let pos = PosTag::from_label(fields[1]);

    let sem = match fields.get(2).copied() {
        None => None,
        // An empty semantic field is only a placeholder before a classifier type.
        Some("") => {
            if fields.len() == 4 {
                None
            } else {
                return Err("empty semantic class field".into());
            }
        }
        Some(s) => Some(
            SemClassCode::parse(s).ok_or_else(|| format!("invalid semantic class `{s}`"))?,
        ),
    };

    let cltype = match fields.get(3).copied() {
        None => None,
        Some("") => return Err("empty classifier type field".into()),
        Some(s) => {
            Some(ClassifierType::parse(s).ok_or_else(|| format!("invalid classifier type `{s}`"))?)
        }
    };
    if cltype.is_some() && pos != PosTag::Cl {
        return Err("classifier type on a non-CL token".into());
    }

    Ok(TaggedToken {
        surface: fields[0].to_string(),
        pos,
        sem,
        cltype,
    })
}
