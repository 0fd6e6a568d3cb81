//! Dictionary word segmentation: least word count with leftmost-longest
//! tie-breaking.
//!
//! Each whitespace-delimited chunk is decomposed into lexicon words and
//! unknown pieces. Decompositions are ranked by
//!
//! 1. the number of characters left in unknown pieces,
//! 2. the number of pieces,
//! 3. leftmost-longest: the sequence of piece lengths compared from the
//!    left, longer first.
//!
//! Two unknown pieces are never adjacent, so every unknown piece is a
//! maximal run. When the chunk can be tiled by words plus the characters no
//! word occurrence covers, those characters are exactly the unknown pieces.

use std::collections::HashMap;
use std::fmt;

use crate::lexicon::Lexicon;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Piece {
    pub surface: String,
    pub known: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Segmentation {
    pub pieces: Vec<Piece>,
}

impl Segmentation {
    pub fn len(&self) -> usize {
        self.pieces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pieces.is_empty()
    }

    pub fn surfaces(&self) -> impl Iterator<Item = &str> {
        self.pieces.iter().map(|p| p.surface.as_str())
    }

    /// Space-joined surfaces, with `?` appended to unknown pieces when
    /// `mark_unknown` is set.
    pub fn render(&self, mark_unknown: bool) -> String {
        let mut out = String::new();
        for (i, p) in self.pieces.iter().enumerate() {
            if i > 0 {
                out.push(' ');
            }
            out.push_str(&p.surface);
            if mark_unknown && !p.known {
                out.push('?');
            }
        }
        out
    }
}

impl fmt::Display for Segmentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(false))
    }
}

#[derive(Debug, Default)]
struct TrieNode {
    children: HashMap<char, usize>,
    terminal: bool,
}

/// Reusable segmenter holding a character trie over the lexicon surfaces.
#[derive(Debug)]
pub struct Segmenter {
    nodes: Vec<TrieNode>,
}

/// (unknown characters, pieces)
type Cost = (usize, usize);

impl Segmenter {
    pub fn new(lexicon: &Lexicon) -> Segmenter {
        let mut nodes = vec![TrieNode::default()];
        for surface in lexicon.surfaces() {
            let mut at = 0;
            for c in surface.chars() {
                at = match nodes[at].children.get(&c) {
                    Some(&next) => next,
                    None => {
                        nodes.push(TrieNode::default());
                        let next = nodes.len() - 1;
                        nodes[at].children.insert(c, next);
                        next
                    }
                };
            }
            nodes[at].terminal = true;
        }
        Segmenter { nodes }
    }

    pub fn segment(&self, text: &str) -> Segmentation {
        let mut pieces = Vec::new();
        for chunk in text.split_whitespace() {
            self.segment_chunk(chunk, &mut pieces);
        }
        Segmentation { pieces }
    }

    /// End positions (in chars) of every lexicon word starting at `start`.
    fn word_ends(&self, chars: &[char], start: usize) -> Vec<usize> {
        let mut ends = Vec::new();
        let mut at = 0;
        for (k, c) in chars[start..].iter().enumerate() {
            match self.nodes[at].children.get(c) {
                Some(&next) => at = next,
                None => break,
            }
            if self.nodes[at].terminal {
                ends.push(start + k + 1);
            }
        }
        ends
    }

    fn segment_chunk(&self, chunk: &str, out: &mut Vec<Piece>) {
        let chars: Vec<char> = chunk.chars().collect();
        let n = chars.len();
        let word_ends: Vec<Vec<usize>> = (0..n).map(|i| self.word_ends(&chars, i)).collect();
        let word_start = |j: usize| j < n && !word_ends[j].is_empty();

        // best[i][f]: optimal cost of chars[i..] when the previous piece was
        // unknown (f = 1) or not (f = 0). None when infeasible.
        let mut best: Vec<[Option<Cost>; 2]> = vec![[None, None]; n + 1];
        best[n] = [Some((0, 0)), Some((0, 0))];
        for i in (0..n).rev() {
            for f in 0..2 {
                let mut acc: Option<Cost> = None;
                for (j, unknown) in candidates(i, f == 1, n, &word_ends[i], &word_start) {
                    let Some(rest) = best[j][unknown as usize] else { continue };
                    let cost = (rest.0 + if unknown { j - i } else { 0 }, rest.1 + 1);
                    if acc.is_none_or(|a| cost < a) {
                        acc = Some(cost);
                    }
                }
                best[i][f] = acc;
            }
        }

        let offsets: Vec<usize> = chunk
            .char_indices()
            .map(|(b, _)| b)
            .chain(std::iter::once(chunk.len()))
            .collect();
        let (mut i, mut prev_unknown) = (0, false);
        while i < n {
            let target = best[i][prev_unknown as usize].expect("a chunk always has a segmentation");
            let (j, unknown) = candidates(i, prev_unknown, n, &word_ends[i], &word_start)
                .filter(|&(j, unknown)| {
                    best[j][unknown as usize].is_some_and(|rest| {
                        (rest.0 + if unknown { j - i } else { 0 }, rest.1 + 1) == target
                    })
                })
                .max_by_key(|&(j, unknown)| (j, !unknown))
                .expect("optimal step exists");
            out.push(Piece {
                surface: chunk[offsets[i]..offsets[j]].to_string(),
                known: !unknown,
            });
            i = j;
            prev_unknown = unknown;
        }
    }
}

/// Next-piece candidates from position `i` as `(end, is_unknown)`.
fn candidates<'a>(
    i: usize,
    prev_unknown: bool,
    n: usize,
    word_ends: &'a [usize],
    word_start: &'a dyn Fn(usize) -> bool,
) -> impl Iterator<Item = (usize, bool)> + 'a {
    let words = word_ends.iter().map(|&j| (j, false));
    // An unknown piece must be followed by a word (or end the chunk), and
    // must not itself spell a word.
    let unknowns = (i + 1..=n)
        .filter(move |&j| !prev_unknown && (j == n || word_start(j)) && !word_ends.contains(&j))
        .map(|j| (j, true));
    words.chain(unknowns)
}

/// Segment `text` against `lexicon`. Builds a fresh [`Segmenter`]; reuse one
/// when segmenting many lines.
pub fn segment(text: &str, lexicon: &Lexicon) -> Segmentation {
    Segmenter::new(lexicon).segment(text)
}
