//! Concept hierarchy over digit-path codes. The tree is implicit: a code's
//! parent is the code minus its last digit.

use std::collections::BTreeMap;
use std::io::BufRead;

use log::warn;

use crate::corpus::SemClassCode;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConceptNode {
    pub code: SemClassCode,
    pub label: Option<String>,
}

/// Proper prefixes of `code`, nearest ancestor first.
pub fn ancestors(code: &SemClassCode) -> Vec<SemClassCode> {
    std::iter::successors(code.parent(), SemClassCode::parent).collect()
}

/// True iff `a` is a strict prefix of `b`.
pub fn is_ancestor(a: &SemClassCode, b: &SemClassCode) -> bool {
    !a.is_unclassified()
        && !b.is_unclassified()
        && a.depth() < b.depth()
        && b.as_str().starts_with(a.as_str())
}

/// Display labels keyed by code. Purely cosmetic.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Labels(BTreeMap<SemClassCode, String>);

impl Labels {
    pub fn get(&self, code: &SemClassCode) -> Option<&str> {
        self.0.get(code).map(String::as_str)
    }

    pub fn node(&self, code: &SemClassCode) -> ConceptNode {
        ConceptNode {
            code: code.clone(),
            label: self.get(code).map(str::to_string),
        }
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&SemClassCode, &str)> {
        self.0.iter().map(|(c, l)| (c, l.as_str()))
    }
}

/// Read `code<TAB>label` lines. A repeated code keeps the last label and
/// logs a warning.
pub fn load_labels(source: impl BufRead) -> Result<Labels> {
    let mut labels = BTreeMap::new();
    for (i, line) in source.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() || line.starts_with('#') {
            continue;
        }
        let n = i + 1;
        let Some((code, label)) = line.split_once('\t') else {
            return Err(Error::MalformedLabelLine {
                line: n,
                reason: "expected code<TAB>label".into(),
            });
        };
        let code = SemClassCode::parse(code).ok_or_else(|| Error::MalformedLabelLine {
            line: n,
            reason: format!("invalid code `{code}`"),
        })?;
        if label.is_empty() {
            return Err(Error::MalformedLabelLine {
                line: n,
                reason: "empty label".into(),
            });
        }
        if let Some(old) = labels.insert(code.clone(), label.to_string()) {
            warn!("label line {n}: code {code} relabelled from `{old}` to `{label}`");
        }
    }
    Ok(Labels(labels))
}
