//! Classifier resolution: the noun's own representative when it was seen
//! in the corpus, otherwise the representative of its semantic class, then
//! of the nearest ancestor class that has one.

use std::fmt;
use std::io::BufRead;

use crate::corpus::{is_valid_field, ClassifierType, SemClassCode};
use crate::error::Error;
use crate::hierarchy::{ancestors, Labels};
use crate::table::NcaTable;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Provenance {
    Direct,
    ClassExact,
    ClassAncestor(SemClassCode),
    None,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Resolution {
    pub classifier: Option<String>,
    pub provenance: Provenance,
    pub cltype: ClassifierType,
}

impl Resolution {
    fn found(classifier: String, provenance: Provenance, cltype: ClassifierType) -> Resolution {
        Resolution {
            classifier: Some(classifier),
            provenance,
            cltype,
        }
    }

    /// Provenance column: `direct`, `class-exact:<code>`,
    /// `class-ancestor:<code>` or `none`, with `:<label>` appended to class
    /// provenances when a label is known.
    pub fn provenance_text(&self, noun_class: &SemClassCode, labels: Option<&Labels>) -> String {
        let with_label = |kind: &str, code: &SemClassCode| {
            match labels.and_then(|l| l.get(code)) {
                Some(label) => format!("{kind}:{code}:{label}"),
                None => format!("{kind}:{code}"),
            }
        };
        match &self.provenance {
            Provenance::Direct => "direct".into(),
            Provenance::ClassExact => with_label("class-exact", noun_class),
            Provenance::ClassAncestor(code) => with_label("class-ancestor", code),
            Provenance::None => "none".into(),
        }
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::Direct => f.write_str("direct"),
            Provenance::ClassExact => f.write_str("class-exact"),
            Provenance::ClassAncestor(code) => write!(f, "class-ancestor:{code}"),
            Provenance::None => f.write_str("none"),
        }
    }
}

pub fn resolve(
    noun: &str,
    noun_class: &SemClassCode,
    cltype: ClassifierType,
    table: &NcaTable,
) -> Resolution {
    if let Some(c) = table.representative_for_noun(noun, noun_class, cltype) {
        return Resolution::found(c, Provenance::Direct, cltype);
    }
    if let Some(c) = table.representative_for_class(noun_class, cltype) {
        return Resolution::found(c, Provenance::ClassExact, cltype);
    }
    for code in ancestors(noun_class) {
        if let Some(c) = table.representative_for_class(&code, cltype) {
            return Resolution::found(c, Provenance::ClassAncestor(code), cltype);
        }
    }
    Resolution {
        classifier: None,
        provenance: Provenance::None,
        cltype,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Query {
    pub noun: String,
    pub noun_class: SemClassCode,
    pub cltype: ClassifierType,
}

/// Parse `noun<TAB>class<TAB>cltype`. Class `0` marks an unclassified noun.
pub fn parse_query(line: &str, line_no: usize) -> Result<Query, Error> {
    let bad = |reason: String| Error::MalformedQueryLine {
        line: line_no,
        reason,
    };
    let fields: Vec<&str> = line.split('\t').collect();
    let [noun, class, cltype] = fields[..] else {
        return Err(bad(format!("expected 3 tab-separated fields, found {}", fields.len())));
    };
    if !is_valid_field(noun) {
        return Err(bad(format!("invalid noun `{noun}`")));
    }
    let noun_class = SemClassCode::parse_or_unclassified(class)
        .ok_or_else(|| bad(format!("invalid noun class `{class}`")))?;
    let cltype = ClassifierType::parse(cltype)
        .ok_or_else(|| bad(format!("invalid classifier type `{cltype}`")))?;
    Ok(Query {
        noun: noun.to_string(),
        noun_class,
        cltype,
    })
}

/// Resolve every query line, in input order. Malformed lines yield an error
/// record in place and do not stop the batch. Blank lines are skipped.
pub fn resolve_batch<'a, R: BufRead + 'a>(
    queries: R,
    table: &'a NcaTable,
) -> impl Iterator<Item = Result<(Query, Resolution), Error>> + 'a {
    queries
        .lines()
        .enumerate()
        .filter(|(_, line)| line.as_ref().map_or(true, |l| !l.trim().is_empty()))
        .map(move |(i, line)| {
            let q = parse_query(&line?, i + 1)?;
            let r = resolve(&q.noun, &q.noun_class, q.cltype, table);
            Ok((q, r))
        })
}
