use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use shirshov::bounds::{beth2, beth3, co1_bound};
use shirshov::encoding::pair_decode;
use shirshov::verify::corpus;
use shirshov::word::{canonical_rotation, compare_letters, is_primitive, primitive_root, rotate};
use shirshov::{
    build_rauzy, is_n_divisible, max_antichain, max_divisibility, min_chain_cover, pair_encode,
    shirshov_decompose, small_selective_height, Alphabet, CompareResult, Letter, OccurrencePoset, Pairing,
    PosetElement, Word, WordFormat,
};

fn letters(l: u32, max_len: usize) -> impl Strategy<Value = Vec<Letter>> {
    prop::collection::vec(1..=l, 1..=max_len)
}

fn word(l: u32, max_len: usize) -> impl Strategy<Value = Word> {
    letters(l, max_len).prop_map(move |v| Word::new(Alphabet::new(l).unwrap(), v).unwrap())
}

/// Words made of a few high powers, where the interesting structure lives.
fn blocky(l: u32) -> impl Strategy<Value = Word> {
    prop::collection::vec((letters(l, 3), 1usize..8), 1..5).prop_map(move |blocks| {
        let v: Vec<Letter> = blocks.iter().flat_map(|(z, m)| z.repeat(*m)).collect();
        Word::new(Alphabet::new(l).unwrap(), v).unwrap()
    })
}

fn poset() -> impl Strategy<Value = OccurrencePoset> {
    prop::collection::vec((0usize..6, letters(3, 3)), 0..10).prop_map(|els| {
        OccurrencePoset::new(
            els.into_iter()
                .map(|(position, payload)| PosetElement { position, payload })
                .collect(),
        )
    })
}

proptest! {
    #[test]
    fn text_formats_round_trip(w in word(5, 30)) {
        for format in [WordFormat::latin(), WordFormat::Integers, WordFormat::chars("xyzuv").unwrap()] {
            let text = format.render(w.letters());
            prop_assert_eq!(format.parse(&text, w.alphabet()).unwrap(), w.clone());
        }
    }

    #[test]
    fn comparison_is_antisymmetric(u in letters(3, 8), v in letters(3, 8)) {
        let swapped = match compare_letters(&u, &v) {
            CompareResult::Less(p) => CompareResult::Greater(p),
            CompareResult::Greater(p) => CompareResult::Less(p),
            other => other,
        };
        prop_assert_eq!(compare_letters(&v, &u), swapped);
    }

    #[test]
    fn canonical_rotation_is_rotation_invariant(v in letters(3, 10), shift in 0usize..10) {
        let r = rotate(&v, shift % v.len());
        prop_assert_eq!(canonical_rotation(&v), canonical_rotation(&r));
        prop_assert_eq!(is_primitive(&v), is_primitive(&r));
    }

    #[test]
    fn primitive_root_reassembles(w in word(3, 24)) {
        let (root, exponent) = primitive_root(&w).unwrap();
        prop_assert!(is_primitive(root.letters()));
        prop_assert_eq!(root.pow(exponent), w);
    }

    #[test]
    fn divisibility_witnesses_and_monotonicity(w in letters(3, 16)) {
        let max = max_divisibility(&w);
        for n in 1..=max + 1 {
            let d = is_n_divisible(&w, n).unwrap();
            prop_assert_eq!(d.is_some(), n <= max);
            if let Some(d) = d {
                prop_assert!(d.validate(&w).is_ok());
                prop_assert_eq!(d.order(), n);
            }
        }
    }

    #[test]
    fn dilworth_duality(p in poset()) {
        let cover = min_chain_cover(&p);
        let anti = max_antichain(&p);
        prop_assert_eq!(cover.chains.len(), anti.len());
        prop_assert!(p.is_antichain(&anti));
        prop_assert!(cover.validate(&p).is_ok());
    }

    #[test]
    fn selective_height_witness_is_valid(w in blocky(3), t in 1usize..4, k in 1usize..4) {
        let h = small_selective_height(&w, t, k);
        prop_assert_eq!(h.witness.len(), h.height);
        prop_assert!(h.witness.validate(w.letters(), k).is_ok());
    }

    #[test]
    fn decomposition_reassembles(w in blocky(3), n in 2usize..5, k in 1usize..4) {
        let d = shirshov_decompose(&w, n, k).unwrap();
        prop_assert_eq!(d.reassemble(), w.letters().to_vec());
        for b in d.blocks() {
            prop_assert!(b.period.len() < n && b.exponent > k);
        }
    }

    #[test]
    fn rauzy_counts(w in word(3, 30), r in 1usize..4) {
        prop_assume!(w.len() >= r);
        let g = build_rauzy(&w, r).unwrap();
        prop_assert_eq!(g.walk().len(), w.len() - r + 1);
        prop_assert_eq!(g.edge_multiplicity().iter().sum::<usize>(), w.len() - r);
    }

    #[test]
    fn pair_encoding_round_trips(seed in any::<u64>(), t in prop::sample::select(vec![2usize, 4, 6])) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = corpus::random_family(&mut rng, t, 2, 5);
        let pairing = Pairing::per_cycle((0..x.len()).map(|i| (seed as usize >> i) & 1).collect());
        let y = pair_encode(&x, &pairing).unwrap();
        prop_assert_eq!(y.t(), t / 2);
        prop_assert_eq!(pair_decode(&y, 2, &pairing).unwrap(), x);
    }

    #[test]
    fn bound_relations(l in 1u64..40, n in 3u64..40) {
        let b2 = beth2(l, n).unwrap().value;
        prop_assert_eq!(beth3(l, n).unwrap().value, &b2 * 2u32);
        prop_assert_eq!(co1_bound(2, l, n).unwrap().value, b2 * (2 * (n - 1)));
    }
}
