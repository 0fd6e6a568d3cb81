//! Noun classifier association (NCA) table: co-occurrence frequencies keyed
//! by `(noun, noun class, classifier, classifier type)`, with
//! representative-classifier queries per noun and per semantic class.
//!
//! TSV form, one entry per line: `noun class classifier cltype freq`.

use std::collections::BTreeMap;
use std::fmt;
use std::io::{BufRead, Write};

use crate::corpus::{is_valid_field, ClassifierType, SemClassCode};
use crate::error::{Error, Result};
use crate::matcher::AssociationEvent;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NcaKey {
    pub noun: String,
    pub noun_class: SemClassCode,
    pub classifier: String,
    pub cltype: ClassifierType,
}

impl NcaKey {
    pub fn new(
        noun: impl Into<String>,
        noun_class: SemClassCode,
        classifier: impl Into<String>,
        cltype: ClassifierType,
    ) -> NcaKey {
        NcaKey {
            noun: noun.into(),
            noun_class,
            classifier: classifier.into(),
            cltype,
        }
    }

    /// Key of an event, or `None` when its classifier carries no type.
    pub fn from_event(event: &AssociationEvent) -> Option<NcaKey> {
        Some(NcaKey {
            noun: event.noun.surface.clone(),
            noun_class: event.noun_class(),
            classifier: event.classifier.surface.clone(),
            cltype: event.classifier.cltype?,
        })
    }
}

impl fmt::Display for NcaKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}_{}, {}_{})",
            self.noun, self.noun_class, self.classifier, self.cltype
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NcaEntry {
    pub key: NcaKey,
    pub freq: u64,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct NcaTable {
    entries: BTreeMap<NcaKey, u64>,
    // (class, cltype) -> classifier -> summed freq
    by_class: BTreeMap<(SemClassCode, ClassifierType), BTreeMap<String, u64>>,
}

fn argmax(counts: impl IntoIterator<Item = (String, u64)>) -> Option<String> {
    // Input is in ascending classifier order; keep the first maximum.
    let mut best: Option<(String, u64)> = None;
    for (classifier, freq) in counts {
        if best.as_ref().is_none_or(|(_, b)| freq > *b) {
            best = Some((classifier, freq));
        }
    }
    best.map(|(c, _)| c)
}

impl NcaTable {
    pub fn new() -> NcaTable {
        NcaTable::default()
    }

    /// Add `freq` occurrences of `key`. Adding zero is a no-op.
    pub fn add(&mut self, key: NcaKey, freq: u64) {
        if freq == 0 {
            return;
        }
        *self
            .by_class
            .entry((key.noun_class.clone(), key.cltype))
            .or_default()
            .entry(key.classifier.clone())
            .or_default() += freq;
        *self.entries.entry(key).or_default() += freq;
    }

    pub fn record(&mut self, key: NcaKey) {
        self.add(key, 1);
    }

    /// Count events by key. Events whose classifier has no type are skipped.
    pub fn aggregate<'a>(events: impl IntoIterator<Item = &'a AssociationEvent>) -> NcaTable {
        let mut table = NcaTable::new();
        for key in events.into_iter().filter_map(NcaKey::from_event) {
            table.record(key);
        }
        table
    }

    pub fn merge(&mut self, other: &NcaTable) {
        for (key, &freq) in &other.entries {
            self.add(key.clone(), freq);
        }
    }

    pub fn freq(&self, key: &NcaKey) -> u64 {
        self.entries.get(key).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> impl Iterator<Item = NcaEntry> + '_ {
        self.entries.iter().map(|(key, &freq)| NcaEntry {
            key: key.clone(),
            freq,
        })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Sum of all frequencies, i.e. the number of aggregated events.
    pub fn total_freq(&self) -> u64 {
        self.entries.values().sum()
    }

    /// Distinct noun classes present, in code order.
    pub fn classes(&self) -> Vec<SemClassCode> {
        let mut out: Vec<SemClassCode> = self.by_class.keys().map(|(c, _)| c.clone()).collect();
        out.dedup();
        out
    }

    /// Per-classifier totals for one `(class, cltype)` group.
    pub fn class_counts(
        &self,
        noun_class: &SemClassCode,
        cltype: ClassifierType,
    ) -> Option<&BTreeMap<String, u64>> {
        self.by_class.get(&(noun_class.clone(), cltype))
    }

    /// Most frequent classifier of `cltype` for this noun under this class.
    /// Ties go to the bytewise smallest classifier.
    pub fn representative_for_noun(
        &self,
        noun: &str,
        noun_class: &SemClassCode,
        cltype: ClassifierType,
    ) -> Option<String> {
        let start = NcaKey::new(noun, noun_class.clone(), "", ClassifierType::Unit);
        argmax(
            self.entries
                .range(start..)
                .take_while(|(k, _)| k.noun == noun && &k.noun_class == noun_class)
                .filter(|(k, _)| k.cltype == cltype)
                .map(|(k, &f)| (k.classifier.clone(), f)),
        )
    }

    /// Most frequent classifier of `cltype` summed over the nouns of exactly
    /// this class. The unclassified bucket has no representative.
    pub fn representative_for_class(
        &self,
        noun_class: &SemClassCode,
        cltype: ClassifierType,
    ) -> Option<String> {
        if noun_class.is_unclassified() {
            return None;
        }
        let counts = self.class_counts(noun_class, cltype)?;
        argmax(counts.iter().map(|(c, &f)| (c.clone(), f)))
    }

    pub fn save(&self, mut sink: impl Write) -> Result<()> {
        for (k, freq) in &self.entries {
            writeln!(
                sink,
                "{}\t{}\t{}\t{}\t{}",
                k.noun, k.noun_class, k.classifier, k.cltype, freq
            )?;
        }
        Ok(())
    }

    pub fn to_tsv(&self) -> String {
        let mut buf = Vec::new();
        self.save(&mut buf).expect("writing to a Vec cannot fail");
        String::from_utf8(buf).expect("table fields are UTF-8")
    }

    pub fn load(source: impl BufRead) -> Result<NcaTable> {
        let mut table = NcaTable::new();
        for (i, line) in source.lines().enumerate() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            let (key, freq) = parse_table_line(&line)
                .map_err(|reason| Error::MalformedTableLine { line: i + 1, reason })?;
            if table.entries.contains_key(&key) {
                return Err(Error::DuplicateKey {
                    line: i + 1,
                    key: key.to_string(),
                });
            }
            table.add(key, freq);
        }
        Ok(table)
    }
}

fn parse_key_fields(
    noun: &str,
    class: &str,
    classifier: &str,
    cltype: &str,
) -> std::result::Result<NcaKey, String> {
    if !is_valid_field(noun) {
        return Err(format!("invalid noun `{noun}`"));
    }
    if !is_valid_field(classifier) {
        return Err(format!("invalid classifier `{classifier}`"));
    }
    let noun_class = SemClassCode::parse_or_unclassified(class)
        .ok_or_else(|| format!("invalid noun class `{class}`"))?;
    let cltype =
        ClassifierType::parse(cltype).ok_or_else(|| format!("invalid classifier type `{cltype}`"))?;
    Ok(NcaKey::new(noun, noun_class, classifier, cltype))
}

fn parse_table_line(line: &str) -> std::result::Result<(NcaKey, u64), String> {
    let fields: Vec<&str> = line.split('\t').collect();
    let [noun, class, classifier, cltype, freq] = fields[..] else {
        return Err(format!("expected 5 tab-separated fields, found {}", fields.len()));
    };
    let key = parse_key_fields(noun, class, classifier, cltype)?;
    let freq: u64 = freq.parse().map_err(|_| format!("invalid frequency `{freq}`"))?;
    if freq == 0 {
        return Err("frequency must be positive".into());
    }
    Ok((key, freq))
}

/// Parse one line of `extract` output back into its table key.
pub fn parse_event_line(line: &str) -> std::result::Result<NcaKey, String> {
    let fields: Vec<&str> = line.split('\t').collect();
    let [noun, class, classifier, cltype, _pattern, _origin] = fields[..] else {
        return Err(format!("expected 6 tab-separated fields, found {}", fields.len()));
    };
    parse_key_fields(noun, class, classifier, cltype)
}

#[cfg(test)]
mod tests {
    use super::*;
    use ClassifierType::{Collective, Unit};

    fn code(s: &str) -> SemClassCode {
        SemClassCode::parse(s).unwrap()
    }

    fn key(n: &str, c: &str, cl: &str, t: ClassifierType) -> NcaKey {
        NcaKey::new(n, code(c), cl, t)
    }

    #[test]
    fn counts_multiplicity() {
        let mut t = NcaTable::new();
        for _ in 0..9 {
            t.record(key("nok", "13111", "tua", Unit));
        }
        for _ in 0..4 {
            t.record(key("nok", "13111", "fuung", Collective));
        }
        assert_eq!(t.freq(&key("nok", "13111", "tua", Unit)), 9);
        assert_eq!(t.freq(&key("nok", "13111", "fuung", Collective)), 4);
        assert_eq!(t.len(), 2);
        assert_eq!(t.total_freq(), 13);
        assert_eq!(t.representative_for_noun("nok", &code("13111"), Unit).as_deref(), Some("tua"));
        assert_eq!(
            t.representative_for_noun("nok", &code("13111"), Collective).as_deref(),
            Some("fuung")
        );
        assert_eq!(t.representative_for_noun("nok", &code("1311"), Unit), None);
        assert_eq!(t.representative_for_noun("kai", &code("13111"), Unit), None);
    }

    #[test]
    fn empty_aggregate() {
        let t = NcaTable::aggregate(&[]);
        assert!(t.is_empty());
        assert_eq!(t.to_tsv(), "");
        assert_eq!(NcaTable::load("".as_bytes()).unwrap(), t);
    }

    #[test]
    fn ties_go_to_smaller_classifier() {
        let mut t = NcaTable::new();
        t.add(key("x", "1", "zeta", Unit), 5);
        t.add(key("x", "1", "alpha", Unit), 5);
        t.add(key("y", "1", "beta", Unit), 2);
        assert_eq!(t.representative_for_noun("x", &code("1"), Unit).as_deref(), Some("alpha"));
        // class totals: zeta 5, alpha 5, beta 2
        assert_eq!(t.representative_for_class(&code("1"), Unit).as_deref(), Some("alpha"));
        assert_eq!(t.representative_for_class(&code("1"), Collective), None);
        assert_eq!(t.representative_for_class(&code("2"), Unit), None);
    }

    #[test]
    fn noun_prefix_does_not_leak() {
        // "nok" and "nokkrajok" share a prefix; the range scan must stop at "nok".
        let mut t = NcaTable::new();
        t.add(key("nok", "13111", "tua", Unit), 1);
        t.add(key("nokkrajok", "13111", "chueak", Unit), 50);
        assert_eq!(t.representative_for_noun("nok", &code("13111"), Unit).as_deref(), Some("tua"));
    }

    #[test]
    fn unclassified_bucket_has_no_class_representative() {
        let mut t = NcaTable::new();
        t.add(NcaKey::new("x", SemClassCode::unclassified(), "an", Unit), 3);
        assert_eq!(t.representative_for_class(&SemClassCode::unclassified(), Unit), None);
        assert_eq!(
            t.representative_for_noun("x", &SemClassCode::unclassified(), Unit).as_deref(),
            Some("an")
        );
        assert_eq!(t.to_tsv(), "x\t0\tan\t1\t3\n");
    }

    #[test]
    fn load_rejects_bad_lines() {
        for (src, want_line) in [
            ("a\t1\tb\t1\t0\n", 1),
            ("a\t1\tb\t1\t1\na\t1\tb\n", 2),
            ("a\t1\tb\t3\t1\n", 1),
            ("a\t10\tb\t1\t1\n", 1),
            ("a\t1\tb\t1\tx\n", 1),
        ] {
            match NcaTable::load(src.as_bytes()) {
                Err(Error::MalformedTableLine { line, .. }) => assert_eq!(line, want_line, "{src:?}"),
                other => panic!("{src:?}: {other:?}"),
            }
        }
        match NcaTable::load("a\t1\tb\t1\t1\na\t1\tb\t1\t4\n".as_bytes()) {
            Err(Error::DuplicateKey { line: 2, .. }) => {}
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn event_lines() {
        assert_eq!(
            parse_event_line("nok\t13111\tfuung\t2\tenum\t7:2").unwrap(),
            key("nok", "13111", "fuung", Collective)
        );
        assert!(parse_event_line("nok\t13111\tfuung\t0\tenum\t7:2").is_err());
        assert!(parse_event_line("nok\t13111\tfuung\t2").is_err());
    }
}
