//! Concordance fragments around classifier occurrences.

use crate::corpus::{Fragment, Origin, PosTag, TaggedToken};
use crate::error::{Error, Result};

/// Largest allowed fragment (before + anchor + after).
pub const MAX_FRAGMENT_LEN: usize = 64;

/// Tokens kept before and after the anchor classifier, anchor excluded.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WindowConfig {
    before: usize,
    after: usize,
}

impl WindowConfig {
    pub const DEFAULT_BEFORE: usize = 10;
    pub const DEFAULT_AFTER: usize = 2;

    pub fn new(before: usize, after: usize) -> Result<WindowConfig> {
        if before.saturating_add(after).saturating_add(1) > MAX_FRAGMENT_LEN {
            return Err(Error::InvalidConfig(format!(
                "window {before},{after} exceeds {MAX_FRAGMENT_LEN} tokens"
            )));
        }
        Ok(WindowConfig { before, after })
    }

    pub fn before(&self) -> usize {
        self.before
    }

    pub fn after(&self) -> usize {
        self.after
    }
}

impl Default for WindowConfig {
    fn default() -> Self {
        WindowConfig {
            before: Self::DEFAULT_BEFORE,
            after: Self::DEFAULT_AFTER,
        }
    }
}

/// One fragment per `CL` token of `line`, in anchor order. Windows are
/// clamped to the line; neighbouring fragments may overlap.
pub fn extract_fragments(line: &[TaggedToken], config: &WindowConfig) -> Vec<Fragment> {
    extract_fragments_at(line, 0, config)
}

/// As [`extract_fragments`], stamping each fragment with `line_no`.
pub fn extract_fragments_at(
    line: &[TaggedToken],
    line_no: usize,
    config: &WindowConfig,
) -> Vec<Fragment> {
    line.iter()
        .enumerate()
        .filter(|(_, tok)| tok.pos == PosTag::Cl)
        .map(|(i, _)| {
            let start = i.saturating_sub(config.before);
            let end = (i + config.after + 1).min(line.len());
            Fragment {
                tokens: line[start..end].to_vec(),
                cl_index: i - start,
                origin: Origin {
                    line: line_no,
                    offset: i,
                },
            }
        })
        .collect()
}

/// KWIC-style rendering: tokens in corpus format with the anchor in brackets.
pub fn render_fragment(fragment: &Fragment) -> String {
    let mut out = String::new();
    for (i, tok) in fragment.tokens.iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        if i == fragment.cl_index {
            out.push('[');
            out.push_str(&tok.to_string());
            out.push(']');
        } else {
            out.push_str(&tok.to_string());
        }
    }
    out
}
