//! Word lexicon: surface to POS, semantic class, lexical frequency and,
//! for classifiers, classifier type.
//!
//! The TSV source has five columns, `surface pos sem freq cltype`, where
//! `sem` and `cltype` may be empty. Lines starting with `#` are comments.

use std::collections::BTreeMap;
use std::io::BufRead;
use std::ops::Bound;

use crate::corpus::{is_valid_field, ClassifierType, PosTag, SemClassCode, TaggedToken};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LexEntry {
    pub surface: String,
    pub pos: PosTag,
    pub sem: Option<SemClassCode>,
    pub freq: u64,
    pub cltype: Option<ClassifierType>,
}

impl LexEntry {
    pub fn to_token(&self) -> TaggedToken {
        TaggedToken {
            surface: self.surface.clone(),
            pos: self.pos.clone(),
            sem: self.sem.clone(),
            cltype: self.cltype,
        }
    }

    fn validate(&self) -> std::result::Result<(), String> {
        if !is_valid_field(&self.surface) {
            return Err(format!("invalid surface `{}`", self.surface));
        }
        if !is_valid_field(self.pos.label()) {
            return Err(format!("invalid POS `{}`", self.pos));
        }
        match (&self.pos, self.cltype) {
            (PosTag::Cl, None) => Err(format!("classifier `{}` has no classifier type", self.surface)),
            (PosTag::Cl, Some(_)) | (_, None) => Ok(()),
            (_, Some(_)) => Err(format!("classifier type on non-CL entry `{}`", self.surface)),
        }
    }
}

/// Ordering used by [`Lexicon::lookup`]: descending frequency, then POS
/// label, then semantic code (absent first).
fn lookup_order(a: &LexEntry, b: &LexEntry) -> std::cmp::Ordering {
    b.freq
        .cmp(&a.freq)
        .then_with(|| a.pos.label().cmp(b.pos.label()))
        .then_with(|| {
            let sa = a.sem.as_ref().map(SemClassCode::as_str);
            let sb = b.sem.as_ref().map(SemClassCode::as_str);
            sa.cmp(&sb)
        })
}

/// Immutable lexicon indexed by surface.
#[derive(Debug, Clone, Default)]
pub struct Lexicon {
    by_surface: BTreeMap<String, Vec<LexEntry>>,
}

impl Lexicon {
    /// Build a lexicon, rejecting invalid entries and duplicate
    /// `(surface, pos, sem)` triples.
    pub fn from_entries(entries: impl IntoIterator<Item = LexEntry>) -> Result<Lexicon> {
        let mut lexicon = Lexicon::default();
        for (i, entry) in entries.into_iter().enumerate() {
            entry
                .validate()
                .map_err(|reason| Error::MalformedLexLine { line: i + 1, reason })?;
            lexicon.insert(entry)?;
        }
        Ok(lexicon)
    }

    fn insert(&mut self, entry: LexEntry) -> Result<()> {
        let slot = self.by_surface.entry(entry.surface.clone()).or_default();
        if slot
            .iter()
            .any(|e| e.pos == entry.pos && e.sem == entry.sem)
        {
            return Err(Error::DuplicateEntry {
                surface: entry.surface,
            });
        }
        let at = slot
            .binary_search_by(|probe| lookup_order(probe, &entry))
            .unwrap_or_else(|i| i);
        slot.insert(at, entry);
        Ok(())
    }

    /// All entries for `surface`, best first. Empty when absent.
    pub fn lookup(&self, surface: &str) -> &[LexEntry] {
        self.by_surface
            .get(surface)
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }

    pub fn contains(&self, surface: &str) -> bool {
        self.by_surface.contains_key(surface)
    }

    /// True iff some lexicon surface begins with `text`.
    pub fn is_known_prefix(&self, text: &str) -> bool {
        self.by_surface
            .range::<str, _>((Bound::Included(text), Bound::Unbounded))
            .next()
            .is_some_and(|(surface, _)| surface.starts_with(text))
    }

    pub fn surfaces(&self) -> impl Iterator<Item = &str> {
        self.by_surface.keys().map(String::as_str)
    }

    pub fn entries(&self) -> impl Iterator<Item = &LexEntry> {
        self.by_surface.values().flatten()
    }

    /// Number of distinct surfaces.
    pub fn len(&self) -> usize {
        self.by_surface.len()
    }

    pub fn is_empty(&self) -> bool {
        self.by_surface.is_empty()
    }
}

/// Read a lexicon from its TSV form.
pub fn load_lexicon(source: impl BufRead) -> Result<Lexicon> {
    let mut lexicon = Lexicon::default();
    for (i, line) in source.lines().enumerate() {
        let line = line?;
        let n = i + 1;
        if line.starts_with('#') || line.trim().is_empty() {
            continue;
        }
        let entry = parse_lex_line(&line).map_err(|reason| Error::MalformedLexLine { line: n, reason })?;
        entry
            .validate()
            .map_err(|reason| Error::MalformedLexLine { line: n, reason })?;
        lexicon.insert(entry)?;
    }
    Ok(lexicon)
}

fn parse_lex_line(line: &str) -> std::result::Result<LexEntry, String> {
    let fields: Vec<&str> = line.split('\t').collect();
    let [surface, pos, sem, freq, cltype] = fields[..] else {
        return Err(format!("expected 5 tab-separated fields, found {}", fields.len()));
    };
    if pos.is_empty() {
        return Err("empty POS".into());
    }
    let sem = if sem.is_empty() {
        None
    } else {
        Some(SemClassCode::parse(sem).ok_or_else(|| format!("invalid semantic class `{sem}`"))?)
    };
    let freq = freq
        .parse::<u64>()
        .map_err(|_| format!("invalid frequency `{freq}`"))?;
    let cltype = if cltype.is_empty() {
        None
    } else {
        Some(ClassifierType::parse(cltype).ok_or_else(|| format!("invalid classifier type `{cltype}`"))?)
    };
    Ok(LexEntry {
        surface: surface.to_string(),
        pos: PosTag::from_label(pos),
        sem,
        freq,
        cltype,
    })
}
