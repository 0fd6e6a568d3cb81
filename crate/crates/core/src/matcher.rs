//! Classifier-phrase pattern matching over concordance fragments.
//!
//! Seven patterns are tried independently against every fragment anchor:
//!
//! | id            | shape                 | fixed part checked first        |
//! |---------------|-----------------------|---------------------------------|
//! | `enum`        | `N- -NCNM-CL`         | `NCNM` right before the anchor  |
//! | `ord`         | `N- -CL-tii-NCNM`     | ordinal marker, then `NCNM`     |
//! | `ref`         | `N- -CL-DET`          | `DET` right after the anchor    |
//! | `indef`       | `N- -DET-CL`          | `DET` right before the anchor   |
//! | `attr`        | `N- -CL-VATT`         | `VATT` right after the anchor   |
//! | `mod`         | `CL-N`                | noun right after the anchor     |
//! | `pron`        | `N- -CL-{linker}`     | linker or marker after anchor   |
//!
//! For the `N- -B` part the noun is found by [`resolve_gap`], starting from
//! the token adjacent to the fixed part (`B`): the `NCNM` for `enum`, the
//! `DET` for `indef`, the anchor otherwise.

use std::fmt;
use std::io::BufRead;
use std::str::FromStr;

use crate::concord::{extract_fragments_at, WindowConfig};
use crate::corpus::{parse_tagged_line, Fragment, Origin, PosTag, SemClassCode, TaggedToken};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PatternId {
    Enumeration,
    Ordinal,
    Referential,
    IndefDemo,
    Attributive,
    NounModifier,
    Pronoun,
}

impl PatternId {
    pub const ALL: [PatternId; 7] = [
        PatternId::Enumeration,
        PatternId::Ordinal,
        PatternId::Referential,
        PatternId::IndefDemo,
        PatternId::Attributive,
        PatternId::NounModifier,
        PatternId::Pronoun,
    ];

    pub fn short_name(self) -> &'static str {
        match self {
            PatternId::Enumeration => "enum",
            PatternId::Ordinal => "ord",
            PatternId::Referential => "ref",
            PatternId::IndefDemo => "indef",
            PatternId::Attributive => "attr",
            PatternId::NounModifier => "mod",
            PatternId::Pronoun => "pron",
        }
    }
}

impl fmt::Display for PatternId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.short_name())
    }
}

impl FromStr for PatternId {
    type Err = Error;

    fn from_str(s: &str) -> Result<PatternId> {
        PatternId::ALL
            .into_iter()
            .find(|p| p.short_name() == s)
            .ok_or_else(|| Error::InvalidConfig(format!("unknown pattern `{s}`")))
    }
}

/// Subset of the seven patterns to scan for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PatternSet(u8);

impl PatternSet {
    pub fn all() -> PatternSet {
        PatternSet(0x7f)
    }

    pub fn empty() -> PatternSet {
        PatternSet(0)
    }

    pub fn with(mut self, p: PatternId) -> PatternSet {
        self.0 |= 1 << p as u8;
        self
    }

    pub fn without(mut self, p: PatternId) -> PatternSet {
        self.0 &= !(1 << p as u8);
        self
    }

    pub fn contains(self, p: PatternId) -> bool {
        self.0 & (1 << p as u8) != 0
    }

    pub fn iter(self) -> impl Iterator<Item = PatternId> {
        PatternId::ALL.into_iter().filter(move |&p| self.contains(p))
    }
}

impl Default for PatternSet {
    fn default() -> Self {
        PatternSet::all()
    }
}

impl FromIterator<PatternId> for PatternSet {
    fn from_iter<I: IntoIterator<Item = PatternId>>(iter: I) -> Self {
        iter.into_iter().fold(PatternSet::empty(), PatternSet::with)
    }
}

/// Linker words of the pronoun pattern. The first surface doubles as the
/// ordinal marker (`tii` by default).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkerSet {
    surfaces: Vec<String>,
}

impl LinkerSet {
    pub fn new<S: Into<String>>(surfaces: impl IntoIterator<Item = S>) -> Result<LinkerSet> {
        let mut out: Vec<String> = Vec::new();
        for s in surfaces {
            let s = s.into();
            if s.is_empty() {
                return Err(Error::InvalidConfig("empty linker surface".into()));
            }
            if !out.contains(&s) {
                out.push(s);
            }
        }
        if out.is_empty() {
            return Err(Error::InvalidConfig("linker set must not be empty".into()));
        }
        Ok(LinkerSet { surfaces: out })
    }

    pub fn contains(&self, surface: &str) -> bool {
        self.surfaces.iter().any(|s| s == surface)
    }

    pub fn ordinal_marker(&self) -> &str {
        &self.surfaces[0]
    }

    pub fn surfaces(&self) -> &[String] {
        &self.surfaces
    }
}

impl Default for LinkerSet {
    fn default() -> Self {
        LinkerSet {
            surfaces: vec!["tii".into(), "sung".into(), "nai".into()],
        }
    }
}

/// Span (in tokens immediately left of `B`) searched for a relative
/// pronoun. A span of zero disables the relative-clause rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GapSearchConfig {
    pub rel_span: usize,
}

impl Default for GapSearchConfig {
    fn default() -> Self {
        GapSearchConfig { rel_span: 5 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatcherConfig {
    pub linkers: LinkerSet,
    pub gaps: GapSearchConfig,
    pub noun_tags: Vec<PosTag>,
    /// Admit verbs as the `A` of the enumeration pattern (`N/V-NCNM-CL`).
    pub include_verbs: bool,
    pub patterns: PatternSet,
}

impl Default for MatcherConfig {
    fn default() -> Self {
        MatcherConfig {
            linkers: LinkerSet::default(),
            gaps: GapSearchConfig::default(),
            noun_tags: vec![PosTag::Ncmn],
            include_verbs: false,
            patterns: PatternSet::all(),
        }
    }
}

/// One matched (noun, classifier, pattern) occurrence.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AssociationEvent {
    pub noun: TaggedToken,
    pub classifier: TaggedToken,
    pub pattern: PatternId,
    pub origin: Origin,
}

impl AssociationEvent {
    /// The noun's semantic class, or the reserved unclassified code.
    pub fn noun_class(&self) -> SemClassCode {
        self.noun.sem.clone().unwrap_or_else(SemClassCode::unclassified)
    }

    /// `noun N1 classifier N2 pattern line:offset`, tab-separated.
    pub fn to_tsv(&self) -> String {
        format!(
            "{}\t{}\t{}\t{}\t{}\t{}",
            self.noun.surface,
            self.noun_class(),
            self.classifier.surface,
            self.classifier.cltype.map(|t| t.code()).unwrap_or(0),
            self.pattern,
            self.origin
        )
    }
}

fn is_relative_pronoun(tok: &TaggedToken, linkers: &LinkerSet) -> bool {
    tok.pos == PosTag::RelM || (linkers.contains(&tok.surface) && tok.pos.is_marker())
}

/// Locate the noun `A` of an `A- -B` pair, searching leftward from `b_index`:
///
/// 1. the nearest noun left of `B` is `A1`;
/// 2. the nearest relative pronoun among the `rel_span` tokens left of `B`
///    is `p1`; without one, `A1` is the answer;
/// 3. the nearest noun left of `p1` is `A2`, chosen when it lies farther
///    from `B` than `A1`.
pub fn resolve_gap(
    fragment: &Fragment,
    b_index: usize,
    noun_tags: &[PosTag],
    gaps: &GapSearchConfig,
    linkers: &LinkerSet,
) -> Option<usize> {
    let toks = &fragment.tokens;
    let is_noun = |i: &usize| noun_tags.contains(&toks[*i].pos);
    let a1 = (0..b_index).rev().find(is_noun);
    let span_start = b_index.saturating_sub(gaps.rel_span);
    let Some(p1) = (span_start..b_index)
        .rev()
        .find(|&i| is_relative_pronoun(&toks[i], linkers))
    else {
        return a1;
    };
    match ((0..p1).rev().find(is_noun), a1) {
        (Some(a2), Some(a1)) if a2 < a1 => Some(a2),
        (Some(a2), None) => Some(a2),
        (_, a1) => a1,
    }
}

/// All association events anchored at the fragment's classifier.
pub fn match_fragment(fragment: &Fragment, config: &MatcherConfig) -> Vec<AssociationEvent> {
    let toks = &fragment.tokens;
    let a = fragment.cl_index;
    let anchor = &toks[a];
    if anchor.pos != PosTag::Cl || anchor.cltype.is_none() {
        return Vec::new();
    }
    let prev = a.checked_sub(1).map(|i| &toks[i]);
    let next = toks.get(a + 1);
    let next2 = toks.get(a + 2);
    let ordinal_tail = next.is_some_and(|t| t.surface == config.linkers.ordinal_marker())
        && next2.is_some_and(|t| t.pos == PosTag::Ncnm);

    let mut verb_tags;
    let enum_tags: &[PosTag] = if config.include_verbs {
        verb_tags = config.noun_tags.clone();
        verb_tags.push(PosTag::Verb);
        &verb_tags
    } else {
        &config.noun_tags
    };
    let gap = |b: usize, tags: &[PosTag]| resolve_gap(fragment, b, tags, &config.gaps, &config.linkers);

    let mut events = Vec::new();
    for pattern in config.patterns.iter() {
        let noun_at = match pattern {
            PatternId::Enumeration => prev
                .filter(|t| t.pos == PosTag::Ncnm)
                .and_then(|_| gap(a - 1, enum_tags)),
            PatternId::Ordinal => ordinal_tail.then(|| gap(a, &config.noun_tags)).flatten(),
            PatternId::Referential => next
                .filter(|t| t.pos == PosTag::Det)
                .and_then(|_| gap(a, &config.noun_tags)),
            PatternId::IndefDemo => prev
                .filter(|t| t.pos == PosTag::Det)
                .and_then(|_| gap(a - 1, &config.noun_tags)),
            PatternId::Attributive => next
                .filter(|t| t.pos == PosTag::Vatt)
                .and_then(|_| gap(a, &config.noun_tags)),
            PatternId::NounModifier => next
                .filter(|t| config.noun_tags.contains(&t.pos))
                .map(|_| a + 1),
            PatternId::Pronoun => next
                .filter(|t| {
                    !ordinal_tail && (t.pos.is_marker() || config.linkers.contains(&t.surface))
                })
                .and_then(|_| gap(a, &config.noun_tags)),
        };
        if let Some(n) = noun_at {
            events.push(AssociationEvent {
                noun: toks[n].clone(),
                classifier: anchor.clone(),
                pattern,
                origin: fragment.origin,
            });
        }
    }
    events
}

#[derive(Debug, Clone, Default)]
pub struct ExtractConfig {
    pub window: WindowConfig,
    pub matcher: MatcherConfig,
}

/// Events for one parsed corpus line (1-based `line_no`), in anchor order.
pub fn events_for_line(
    tokens: &[TaggedToken],
    line_no: usize,
    config: &ExtractConfig,
) -> Vec<AssociationEvent> {
    extract_fragments_at(tokens, line_no, &config.window)
        .iter()
        .flat_map(|f| match_fragment(f, &config.matcher))
        .collect()
}

/// Fragment extraction plus matching over a whole tagged corpus, in corpus
/// order. The first malformed line aborts with its line number.
pub fn extract_events(corpus: impl BufRead, config: &ExtractConfig) -> Result<Vec<AssociationEvent>> {
    let mut events = Vec::new();
    for (i, line) in corpus.lines().enumerate() {
        let tokens = parse_tagged_line(&line?).map_err(|e| e.at_line(i + 1))?;
        events.extend(events_for_line(&tokens, i + 1, config));
    }
    Ok(events)
}
