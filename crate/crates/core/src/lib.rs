//! Corpus-based noun classifier association (NCA) extraction and classifier
//! resolution for classifier languages.
//!
//! The pipeline mirrors the stages of the `nca` command line:
//!
//! 1. [`segment`]: dictionary segmentation (least word count, then
//!    leftmost-longest).
//! 2. [`tagger`]: `(word, POS, semantic class)` tagging by lexicon lookup.
//! 3. [`concord`]: fragments of ten tokens before and two after every
//!    classifier.
//! 4. [`matcher`]: the seven classifier-phrase patterns, with relative-clause
//!    gap resolution, producing [`matcher::AssociationEvent`]s.
//! 5. [`table`]: aggregation into the NCA table and representative
//!    classifiers per noun and per semantic class.
//! 6. [`resolver`]: classifier choice for a noun, falling back through the
//!    concept [`hierarchy`] for nouns never seen in the corpus.
//!
//! ```
//! use nca::corpus::{ClassifierType, SemClassCode};
//! use nca::matcher::{extract_events, ExtractConfig};
//! use nca::resolver::{resolve, Provenance};
//! use nca::table::NcaTable;
//!
//! let corpus = "maa/NCMN/13111 2/NCNM tua/CL//1\nnok/NCMN/13111 fuung/CL//2 nii/DET\n";
//! let events = extract_events(corpus.as_bytes(), &ExtractConfig::default()).unwrap();
//! let table = NcaTable::aggregate(&events);
//!
//! let animal = SemClassCode::parse("13111").unwrap();
//! let r = resolve("kai", &animal, ClassifierType::Unit, &table);
//! assert_eq!(r.classifier.as_deref(), Some("tua"));
//! assert_eq!(r.provenance, Provenance::ClassExact);
//! ```

pub mod cli;
pub mod concord;
pub mod corpus;
pub mod error;
pub mod hierarchy;
pub mod lexicon;
pub mod matcher;
pub mod resolver;
pub mod segment;
pub mod table;
pub mod tagger;

pub use error::{Error, Result};
