use std::collections::BTreeMap;

use nca::concord::{extract_fragments, WindowConfig, MAX_FRAGMENT_LEN};
use nca::corpus::{parse_tagged_line, render_tagged_line, ClassifierType, PosTag, SemClassCode, TaggedToken};
use nca::hierarchy::{ancestors, is_ancestor};
use nca::lexicon::{LexEntry, Lexicon};
use nca::matcher::{match_fragment, resolve_gap, GapSearchConfig, LinkerSet, MatcherConfig, PatternId, PatternSet};
use nca::resolver::{resolve, resolve_batch, Provenance};
use nca::segment::Segmenter;
use nca::table::{NcaKey, NcaTable};
use proptest::prelude::*;

fn pos_tag() -> impl Strategy<Value = PosTag> {
    prop_oneof![
        3 => Just(PosTag::Ncmn),
        1 => Just(PosTag::Ncnm),
        3 => Just(PosTag::Cl),
        1 => Just(PosTag::Det),
        1 => Just(PosTag::Vatt),
        1 => Just(PosTag::RelM),
        1 => Just(PosTag::ItrM),
        1 => Just(PosTag::Donm),
        1 => Just(PosTag::Ddac),
        1 => Just(PosTag::Verb),
        1 => Just(PosTag::Unk),
        1 => "[A-Z]{2,5}".prop_map(|l| PosTag::from_label(&l)),
    ]
}

fn sem_code() -> impl Strategy<Value = SemClassCode> {
    "[1-9]{1,6}".prop_map(|s| SemClassCode::parse(&s).unwrap())
}

fn cltype() -> impl Strategy<Value = ClassifierType> {
    prop_oneof![Just(ClassifierType::Unit), Just(ClassifierType::Collective)]
}

fn token() -> impl Strategy<Value = TaggedToken> {
    (
        prop_oneof![
            "[a-z]{1,6}",
            "[ก-ฮ]{1,4}",
            Just("tii".to_string()),
            Just("sung".to_string())
        ],
        pos_tag(),
        proptest::option::of(sem_code()),
        proptest::option::of(cltype()),
    )
        .prop_map(|(surface, pos, sem, cltype)| {
            let cltype = if pos == PosTag::Cl { cltype } else { None };
            TaggedToken { surface, pos, sem, cltype }
        })
}

fn line() -> impl Strategy<Value = Vec<TaggedToken>> {
    prop::collection::vec(token(), 0..40)
}

fn lexicon_of(words: &[String]) -> Lexicon {
    Lexicon::from_entries(words.iter().map(|w| LexEntry {
        surface: w.clone(),
        pos: PosTag::Ncmn,
        sem: None,
        freq: 1,
        cltype: None,
    }))
    .unwrap()
}

fn words() -> impl Strategy<Value = Vec<String>> {
    prop::collection::btree_set("[abc]{1,4}", 0..10).prop_map(|s| s.into_iter().collect())
}

fn nca_key() -> impl Strategy<Value = NcaKey> {
    (
        prop::sample::select(vec!["nok", "maa", "som", "khon", "kai"]),
        prop::sample::select(vec!["0", "111", "13111", "13114", "1311", "13"]),
        prop::sample::select(vec!["tua", "fuung", "luuk", "khon", "khana"]),
        cltype(),
    )
        .prop_map(|(n, c, cl, t)| NcaKey::new(n, SemClassCode::parse_or_unclassified(c).unwrap(), cl, t))
}

fn table_of(keys: &[NcaKey]) -> NcaTable {
    let mut t = NcaTable::new();
    for k in keys {
        t.record(k.clone());
    }
    t
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn tagged_line_round_trip(tokens in line()) {
        let rendered = render_tagged_line(&tokens);
        prop_assert_eq!(parse_tagged_line(&rendered).unwrap(), tokens.clone());
        // extra whitespace is not significant
        let spaced = format!("  {}\t", rendered.replace(' ', " \t "));
        prop_assert_eq!(parse_tagged_line(&spaced).unwrap(), tokens);
    }
}

proptest! {
    #[test]
    fn segmentation_concatenates_to_input(ws in words(), text in "[abcx]{0,20}") {
        let seg = Segmenter::new(&lexicon_of(&ws)).segment(&text);
        let joined: String = seg.surfaces().collect();
        prop_assert_eq!(&joined, &text);
        prop_assert!(seg.pieces.iter().all(|p| !p.surface.is_empty()));
        prop_assert!(seg.pieces.windows(2).all(|w| w[0].known || w[1].known));
        for p in &seg.pieces {
            prop_assert_eq!(p.known, ws.contains(&p.surface));
        }
        prop_assert_eq!(Segmenter::new(&lexicon_of(&ws)).segment(&text), seg);
    }

    #[test]
    fn concatenated_words_segment_fully_known(ws in words(), picks in prop::collection::vec(any::<prop::sample::Index>(), 1..6)) {
        prop_assume!(!ws.is_empty());
        let text: String = picks.iter().map(|i| i.get(&ws).as_str()).collect();
        let seg = Segmenter::new(&lexicon_of(&ws)).segment(&text);
        prop_assert!(seg.pieces.iter().all(|p| p.known));
        prop_assert!(seg.len() <= picks.len());
    }

    #[test]
    fn known_prefix_agrees_with_scan(ws in words(), probe in "[abc]{0,5}") {
        let lex = lexicon_of(&ws);
        prop_assert_eq!(lex.is_known_prefix(&probe), ws.iter().any(|w| w.starts_with(&probe)));
    }

    #[test]
    fn lookup_is_order_independent(mut entries in prop::collection::vec((0u64..5, pos_tag(), proptest::option::of(sem_code())), 0..8)) {
        entries.sort_by(|a, b| (a.1.label(), &a.2).cmp(&(b.1.label(), &b.2)));
        entries.dedup_by(|a, b| a.1 == b.1 && a.2 == b.2);
        let make = |es: &[(u64, PosTag, Option<SemClassCode>)]| {
            Lexicon::from_entries(es.iter().map(|(f, p, s)| LexEntry {
                surface: "w".into(),
                pos: p.clone(),
                sem: s.clone(),
                freq: *f,
                cltype: (*p == PosTag::Cl).then_some(ClassifierType::Unit),
            }))
            .unwrap()
        };
        let forward = make(&entries);
        let reversed: Vec<_> = entries.iter().rev().cloned().collect();
        let backward = make(&reversed);
        prop_assert_eq!(forward.lookup("w"), backward.lookup("w"));
        let freqs: Vec<u64> = forward.lookup("w").iter().map(|e| e.freq).collect();
        prop_assert!(freqs.windows(2).all(|w| w[0] >= w[1]));
    }

    #[test]
    fn fragments_cover_each_classifier_once(tokens in line(), before in 0usize..12, after in 0usize..6) {
        prop_assume!(before + after < MAX_FRAGMENT_LEN);
        let cfg = WindowConfig::new(before, after).unwrap();
        let frags = extract_fragments(&tokens, &cfg);
        let cls: Vec<usize> = tokens.iter().enumerate().filter(|(_, t)| t.pos == PosTag::Cl).map(|(i, _)| i).collect();
        prop_assert_eq!(frags.len(), cls.len());
        for (f, &i) in frags.iter().zip(&cls) {
            prop_assert_eq!(f.origin.offset, i);
            prop_assert_eq!(f.anchor(), &tokens[i]);
            prop_assert!(f.cl_index <= before);
            prop_assert!(f.tokens.len() - f.cl_index - 1 <= after);
            prop_assert_eq!(f.cl_index, i.min(before));
            prop_assert_eq!(&f.tokens[..], &tokens[i - f.cl_index..i - f.cl_index + f.tokens.len()]);
        }
    }

    #[test]
    fn patterns_are_independent(tokens in line()) {
        let cfg = WindowConfig::default();
        for frag in extract_fragments(&tokens, &cfg) {
            let all = match_fragment(&frag, &MatcherConfig::default());
            let mut separate = Vec::new();
            for p in PatternId::ALL {
                let config = MatcherConfig { patterns: PatternSet::empty().with(p), ..MatcherConfig::default() };
                separate.extend(match_fragment(&frag, &config));
            }
            prop_assert_eq!(&all, &separate);
            for e in &all {
                prop_assert_eq!(&e.classifier, frag.anchor());
                prop_assert!(e.classifier.cltype.is_some());
                prop_assert_eq!(&e.noun.pos, &PosTag::Ncmn);
            }
        }
    }

    #[test]
    fn gap_resolution_stays_left_on_nouns(tokens in line(), span in 0usize..8) {
        let gaps = GapSearchConfig { rel_span: span };
        let linkers = LinkerSet::default();
        let tags = [PosTag::Ncmn];
        for frag in extract_fragments(&tokens, &WindowConfig::default()) {
            for b in 0..frag.tokens.len() {
                let nearest = (0..b).rev().find(|&i| frag.tokens[i].pos == PosTag::Ncmn);
                match resolve_gap(&frag, b, &tags, &gaps, &linkers) {
                    Some(a) => {
                        prop_assert!(a < b);
                        prop_assert_eq!(&frag.tokens[a].pos, &PosTag::Ncmn);
                        prop_assert!(a <= nearest.unwrap());
                    }
                    None => prop_assert_eq!(nearest, None),
                }
                let no_span = GapSearchConfig { rel_span: 0 };
                prop_assert_eq!(resolve_gap(&frag, b, &tags, &no_span, &linkers), nearest);
            }
        }
    }

    #[test]
    fn table_ignores_event_order(keys in prop::collection::vec(nca_key(), 0..60), seed in any::<u64>()) {
        let mut shuffled = keys.clone();
        // cheap deterministic permutation
        let n = shuffled.len();
        for i in (1..n).rev() {
            let j = (seed.wrapping_mul(i as u64 + 7) >> 7) as usize % (i + 1);
            shuffled.swap(i, j);
        }
        let a = table_of(&keys);
        let b = table_of(&shuffled);
        prop_assert_eq!(&a, &b);
        prop_assert_eq!(a.total_freq(), keys.len() as u64);
        prop_assert_eq!(a.entries().map(|e| e.freq).sum::<u64>(), keys.len() as u64);
    }

    #[test]
    fn representatives_match_naive_argmax(keys in prop::collection::vec(nca_key(), 0..60)) {
        let t = table_of(&keys);
        for class in ["111", "13111", "13114", "1311", "13", "0"] {
            let class = SemClassCode::parse_or_unclassified(class).unwrap();
            for ty in ClassifierType::ALL {
                let mut counts: BTreeMap<&str, u64> = BTreeMap::new();
                for k in keys.iter().filter(|k| k.noun_class == class && k.cltype == ty) {
                    *counts.entry(&k.classifier).or_default() += 1;
                }
                let best = counts.iter().max_by(|a, b| a.1.cmp(b.1).then(b.0.cmp(a.0))).map(|(c, _)| c.to_string());
                let want = if class.is_unclassified() { None } else { best };
                prop_assert_eq!(t.representative_for_class(&class, ty), want);
            }
        }
    }

    #[test]
    fn ancestors_are_proper_prefixes(code in sem_code()) {
        let anc = ancestors(&code);
        prop_assert_eq!(anc.len(), code.depth() - 1);
        for (i, a) in anc.iter().enumerate() {
            prop_assert_eq!(a.depth(), code.depth() - 1 - i);
            prop_assert!(code.as_str().starts_with(a.as_str()));
            prop_assert!(is_ancestor(a, &code));
        }
        prop_assert!(!is_ancestor(&code, &code));
    }

    #[test]
    fn is_ancestor_matches_ancestor_list(a in sem_code(), b in sem_code(), c in sem_code()) {
        prop_assert_eq!(is_ancestor(&a, &b), ancestors(&b).contains(&a));
        if is_ancestor(&a, &b) && is_ancestor(&b, &c) {
            prop_assert!(is_ancestor(&a, &c));
        }
    }

    #[test]
    fn resolution_prefers_direct_and_never_goes_below(keys in prop::collection::vec(nca_key(), 0..40), noun in prop::sample::select(vec!["nok", "som", "zzz"]), class in sem_code(), ty in cltype()) {
        let t = table_of(&keys);
        let r = resolve(noun, &class, ty, &t);
        let direct = t.representative_for_noun(noun, &class, ty);
        if direct.is_some() {
            prop_assert_eq!(&r.provenance, &Provenance::Direct);
            prop_assert_eq!(&r.classifier, &direct);
        }
        match &r.provenance {
            Provenance::ClassExact => prop_assert_eq!(r.classifier.clone(), t.representative_for_class(&class, ty)),
            Provenance::ClassAncestor(a) => {
                prop_assert!(is_ancestor(a, &class));
                prop_assert_eq!(t.representative_for_class(&class, ty), None);
                // nothing between the ancestor and the class has a representative
                for mid in ancestors(&class).iter().take_while(|m| *m != a) {
                    prop_assert_eq!(t.representative_for_class(mid, ty), None);
                }
                prop_assert_eq!(r.classifier.clone(), t.representative_for_class(a, ty));
            }
            Provenance::None => {
                prop_assert_eq!(&r.classifier, &None);
                for a in ancestors(&class) {
                    prop_assert_eq!(t.representative_for_class(&a, ty), None);
                }
            }
            Provenance::Direct => {}
        }
        prop_assert_eq!(r.cltype, ty);
    }

    #[test]
    fn adding_data_never_loses_a_resolution(keys in prop::collection::vec(nca_key(), 0..40), extra in nca_key(), class in sem_code(), ty in cltype()) {
        let before = table_of(&keys);
        let mut after = before.clone();
        after.record(extra);
        if resolve("q", &class, ty, &before).classifier.is_some() {
            prop_assert!(resolve("q", &class, ty, &after).classifier.is_some());
        }
    }

    #[test]
    fn batch_equals_single_queries(keys in prop::collection::vec(nca_key(), 0..40), queries in prop::collection::vec((prop::sample::select(vec!["nok", "som", "zzz"]), sem_code(), cltype()), 0..10)) {
        let t = table_of(&keys);
        let input: String = queries.iter().map(|(n, c, ty)| format!("{n}\t{c}\t{ty}\n")).collect();
        let batch: Vec<_> = resolve_batch(input.as_bytes(), &t).map(|r| r.unwrap().1).collect();
        let single: Vec<_> = queries.iter().map(|(n, c, ty)| resolve(n, c, *ty, &t)).collect();
        prop_assert_eq!(batch, single);
    }
}
