//! Randomized invariants of the term engine.

use proptest::prelude::*;

use polycat::corpus;
use polycat::freecat::{
    canonicalize, compose_cells, engine::apply_layer, oracle_equal, parse_term, Cell, Layer,
    NormalForm, OracleVerdict, Term, Word,
};

fn arb_term() -> impl Strategy<Value = Term> {
    let leaf = prop_oneof![
        prop::sample::select(vec!["a", "mu", "eta", "f", "x"]).prop_map(Term::gen),
    ];
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(Term::id),
            (0usize..3, inner.clone(), inner).prop_map(|(i, l, r)| Term::comp(i, l, r)),
        ]
    })
}

/// A 2-cell over the pseudomonoid signature, driven by a byte seed: start
/// from a power of the endo-arrow and apply whichever applicable layer the
/// next byte selects.
fn seeded_cell(word_len: usize, seed: &[u8]) -> NormalForm {
    let sig = corpus::pseudomonoid_pol();
    let src = Word { start: "x".into(), letters: vec!["a".into(); word_len] };
    let mut nf = NormalForm::identity(src.clone());
    let mut cur = src;
    for byte in seed {
        let mut choices = Vec::new();
        for g in ["mu", "eta"] {
            for off in 0..=cur.len() {
                let l = Layer { offset: off, gen: g.into() };
                if let Ok(next) = apply_layer(&sig, &cur, &l) {
                    choices.push((l, next));
                }
            }
        }
        if choices.is_empty() {
            break;
        }
        let (l, next) = choices[*byte as usize % choices.len()].clone();
        nf.layers.push(l);
        cur = next;
    }
    nf
}

proptest! {
    #[test]
    fn printing_and_parsing_are_inverse(t in arb_term()) {
        let printed = t.to_string();
        prop_assert_eq!(parse_term(&printed).unwrap(), t);
    }

    #[test]
    fn canonicalize_is_idempotent(len in 0usize..5, seed in prop::collection::vec(any::<u8>(), 0..6)) {
        let sig = corpus::pseudomonoid_pol();
        let nf = seeded_cell(len, &seed);
        let c = canonicalize(&sig, &nf).unwrap();
        prop_assert_eq!(canonicalize(&sig, &c).unwrap(), c.clone());
        // the canonical stack denotes the same cell
        prop_assert_eq!(oracle_equal(&sig, &nf, &c, 50_000).unwrap(), OracleVerdict::Equal);
    }

    #[test]
    fn loop_composition_is_a_free_monoid(a in 0usize..8, b in 0usize..8, c in 0usize..8) {
        let sig = corpus::loop_pol();
        let pow = |n: usize| Cell::One(Word { start: "x".into(), letters: vec!["f".into(); n] });
        let ab_c = compose_cells(&sig, 0, &compose_cells(&sig, 0, &pow(a), &pow(b)).unwrap(), &pow(c)).unwrap();
        let a_bc = compose_cells(&sig, 0, &pow(a), &compose_cells(&sig, 0, &pow(b), &pow(c)).unwrap()).unwrap();
        prop_assert_eq!(&ab_c, &a_bc);
        prop_assert_eq!(&ab_c, &pow(a + b + c));
        prop_assert_eq!(compose_cells(&sig, 0, &pow(0), &pow(a)).unwrap(), pow(a));
        prop_assert_eq!(compose_cells(&sig, 0, &pow(a), &pow(0)).unwrap(), pow(a));
    }
}
