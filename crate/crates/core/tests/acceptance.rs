//! The acceptance gate: one test per criterion, each printing a single
//! pass/fail line. Run with `--nocapture` to see the lines on success.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use rand::prelude::*;
use rand::rngs::StdRng;

use polycat::corpus;
use polycat::freecat::{
    self, cell_to_term, compose_cells, decide_equal, enumerate, eval, materialize_finite,
    normalize, oracle_equal, parse_term, Cell, EnumOptions, Layer, NormalForm, OracleVerdict,
    Term, Word,
};
use polycat::polygraph::{coproduct, pushout, PolMorphism, Polygraph};
use polycat::precat::{check_condition_e, theta, theta_bar, PAxiom};
use polycat::strictcat::{Axiom, FiniteStrictCat};
use polycat::eat;

fn report(n: usize, what: &str, f: impl FnOnce()) {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(()) => println!("criterion {n} PASS: {what}"),
        Err(e) => {
            println!("criterion {n} FAIL: {what}");
            std::panic::resume_unwind(e);
        }
    }
}

fn fixture(name: &str) -> String {
    let path = format!("{}/../../fixtures/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("cannot read {path}: {e}"))
}

#[test]
fn criterion_1_loop_is_the_natural_numbers() {
    report(1, "loop endo-cells compose like natural number addition", || {
        let start = Instant::now();
        let sig = corpus::loop_pol();
        let cells = enumerate(&sig, 1, EnumOptions { max: 10 }).unwrap();
        assert_eq!(cells.len(), 11);
        // cells[k] is the k-fold power of the loop
        for (k, c) in cells.iter().enumerate() {
            match c {
                Cell::One(w) => assert_eq!(w.len(), k),
                _ => panic!("expected a 1-cell"),
            }
        }
        for k in 0..=10 {
            for l in 0..=10 - k {
                let kl = compose_cells(&sig, 0, &cells[k], &cells[l]).unwrap();
                assert_eq!(kl, cells[k + l], "{k} + {l}");
            }
        }
        assert!(start.elapsed() < Duration::from_secs(1), "took {:?}", start.elapsed());
    });
}

#[test]
fn criterion_2_pseudomonoid_triple() {
    report(2, "the three double-multiplication diagrams agree; A's faces differ", || {
        let start = Instant::now();
        let sig = corpus::pseudomonoid_pol();
        let triple = [
            "mu *0 id(a *0 a *0 a) *0 mu",
            "(mu *0 a *0 a *0 a *0 a *0 a) *1 (a *0 a *0 a *0 a *0 mu)",
            "(a *0 a *0 a *0 a *0 a *0 mu) *1 (mu *0 a *0 a *0 a *0 a)",
        ]
        .map(|s| parse_term(s).unwrap());
        for a in &triple {
            for b in &triple {
                assert!(decide_equal(&sig, a, b).unwrap());
            }
        }
        let nfs: Vec<NormalForm> = triple
            .iter()
            .map(|t| match normalize(&sig, t).unwrap() {
                Cell::Two(nf) => nf,
                _ => panic!("expected a 2-cell"),
            })
            .collect();
        assert_eq!(nfs[0].layers.len(), 2);
        assert_eq!(nfs[0], nfs[1]);
        assert_eq!(nfs[0], nfs[2]);
        for a in &nfs {
            for b in &nfs {
                assert_eq!(oracle_equal(&sig, a, b, 100_000).unwrap(), OracleVerdict::Equal);
            }
        }
        let src_a = parse_term("(mu *0 a) *1 mu").unwrap();
        let tgt_a = parse_term("(a *0 mu) *1 mu").unwrap();
        assert!(!decide_equal(&sig, &src_a, &tgt_a).unwrap());
        assert!(start.elapsed() < Duration::from_secs(1), "took {:?}", start.elapsed());
    });
}

/// Endpoints of every 1-generator, for random walks.
fn edges(sig: &Polygraph) -> Vec<(String, String, String)> {
    sig.gens(1)
        .map(|g| {
            let (s, t) = sig.boundary_terms(g).unwrap();
            match (eval(sig, s).unwrap(), eval(sig, t).unwrap()) {
                (Cell::Zero(a), Cell::Zero(b)) => (g.to_string(), a, b),
                _ => unreachable!(),
            }
        })
        .collect()
}

/// A random path of at most `max` letters from a random start point.
fn random_word(sig: &Polygraph, rng: &mut StdRng, max: usize) -> Word {
    let objects: Vec<&str> = sig.gens(0).collect();
    let edges = edges(sig);
    let start = objects[rng.gen_range(0..objects.len())];
    let mut w = Word::empty(start);
    let mut cur = start.to_string();
    for _ in 0..rng.gen_range(0..=max) {
        let out: Vec<&(String, String, String)> =
            edges.iter().filter(|(_, s, _)| *s == cur).collect();
        if out.is_empty() {
            break;
        }
        let (g, _, t) = out[rng.gen_range(0..out.len())];
        w.letters.push(g.clone());
        cur = t.clone();
    }
    w
}

/// A small random 2-polygraph with up to 3 generators per dimension; every
/// 2-generator has parallel boundary words of length at most 3.
fn random_polygraph(rng: &mut StdRng, idx: usize) -> Polygraph {
    let mut p = Polygraph::new(&format!("rnd{idx}"), 2);
    let n0 = rng.gen_range(1..=3);
    for i in 0..n0 {
        p.add_gen0(&format!("o{i}")).unwrap();
    }
    let n1 = rng.gen_range(1..=3);
    for i in 0..n1 {
        let s = rng.gen_range(0..n0);
        let t = rng.gen_range(0..n0);
        p.add_gen(1, &format!("e{i}"), Term::gen(&format!("o{s}")), Term::gen(&format!("o{t}")))
            .unwrap();
    }
    let word_term = |w: &Word| -> Term {
        let mut t: Option<Term> = None;
        for g in &w.letters {
            let gt = Term::gen(g);
            t = Some(match t {
                None => gt,
                Some(acc) => Term::comp(0, acc, gt),
            });
        }
        t.unwrap_or_else(|| Term::id(Term::gen(&w.start)))
    };
    let n2 = rng.gen_range(1..=3);
    for i in 0..n2 {
        let src = random_word(&p, rng, 3);
        let send = freecat::word_end(&p, &src).unwrap();
        // try to find a distinct parallel word; fall back to the source
        let mut tgt = src.clone();
        for _ in 0..20 {
            let cand = random_word(&p, rng, 3);
            if cand.start == src.start && freecat::word_end(&p, &cand).unwrap() == send {
                tgt = cand;
                break;
            }
        }
        p.add_gen(2, &format!("r{i}"), word_term(&src), word_term(&tgt)).unwrap();
    }
    p.validate().unwrap();
    p
}

/// Applies up to `max_layers` random applicable layers to a random word.
fn random_two_cell(sig: &Polygraph, rng: &mut StdRng, src: &Word, max_layers: usize) -> NormalForm {
    let gens2: Vec<(String, Word, Word)> = sig
        .gens(2)
        .map(|g| {
            let (s, t) = sig.boundary_terms(g).unwrap();
            match (eval(sig, s).unwrap(), eval(sig, t).unwrap()) {
                (Cell::One(a), Cell::One(b)) => (g.to_string(), a, b),
                _ => unreachable!(),
            }
        })
        .collect();
    let mut nf = NormalForm::identity(src.clone());
    let mut cur = src.clone();
    for _ in 0..rng.gen_range(0..=max_layers) {
        let mut choices = Vec::new();
        for (g, gs, _) in &gens2 {
            for off in 0..=cur.len().saturating_sub(gs.len()) {
                let l = Layer { offset: off, gen: g.clone() };
                if let Ok(next) = freecat::engine::apply_layer(sig, &cur, &l) {
                    choices.push((l, next));
                }
            }
        }
        if choices.is_empty() {
            break;
        }
        let (l, next) = choices[rng.gen_range(0..choices.len())].clone();
        nf.layers.push(l);
        cur = next;
    }
    nf
}

#[test]
fn criterion_3_word_problem_matches_oracle() {
    report(3, "decide_equal agrees with the swap-closure oracle on random pairs", || {
        let start = Instant::now();
        let mut rng = StdRng::seed_from_u64(0xC3);
        let mut polygraphs = 0usize;
        let mut determinate = 0usize;
        let mut equal_cases = 0usize;
        while polygraphs < 210 {
            let sig = random_polygraph(&mut rng, polygraphs);
            polygraphs += 1;
            for _ in 0..4 {
                let src = random_word(&sig, &mut rng, 4);
                let a = random_two_cell(&sig, &mut rng, &src, 6);
                // half the pairs share a source, half reuse the same cell
                let b = if rng.gen_bool(0.5) {
                    random_two_cell(&sig, &mut rng, &src, 6)
                } else {
                    a.clone()
                };
                let ta = cell_to_term(&sig, &Cell::Two(a.clone())).unwrap();
                let tb = cell_to_term(&sig, &Cell::Two(b.clone())).unwrap();
                let decided = decide_equal(&sig, &ta, &tb).unwrap();
                match oracle_equal(&sig, &a, &b, 50_000).unwrap() {
                    OracleVerdict::Indeterminate => continue,
                    OracleVerdict::Equal => {
                        determinate += 1;
                        equal_cases += 1;
                        assert!(decided, "oracle Equal, decide_equal false on {a} vs {b}");
                    }
                    OracleVerdict::NotEqual => {
                        determinate += 1;
                        assert!(!decided, "oracle NotEqual, decide_equal true on {a} vs {b}");
                    }
                }
            }
        }
        assert!(polygraphs >= 200);
        assert!(determinate >= 500, "only {determinate} determinate cases");
        assert!(equal_cases >= 100, "only {equal_cases} equal cases");
        assert!(start.elapsed() < Duration::from_secs(60), "took {:?}", start.elapsed());
    });
}

/// Finite strict categories exercised by criteria 4 and 5.
fn strict_corpus() -> Vec<FiniteStrictCat> {
    vec![
        corpus::terminal(2),
        corpus::terminal(3),
        corpus::z2_monoid().include(2).unwrap(),
        corpus::z3_monoid().include(2).unwrap(),
        corpus::walking_arrow().include(2).unwrap(),
        corpus::z2_monoid().coinclude(2).unwrap(),
        corpus::z3_monoid().coinclude(2).unwrap(),
        corpus::walking_arrow().coinclude(2).unwrap(),
        corpus::walking_arrow().coinclude(3).unwrap(),
        materialize_finite(&corpus::parallel_pair_pol(), 3).unwrap(),
        materialize_finite(&corpus::path_pol(), 5).unwrap(),
    ]
}

#[test]
fn criterion_4_theta_is_an_isomorphism() {
    report(4, "theta and theta_bar are mutually inverse on the strict corpus", || {
        let cats = strict_corpus();
        assert!(cats.len() >= 10);
        for c in &cats {
            let p = theta(c).unwrap();
            assert_eq!(&theta_bar(&p).unwrap(), c);
            assert_eq!(theta(&theta_bar(&p).unwrap()).unwrap(), p);
        }
    });
}

#[test]
fn criterion_5_axiom_suites() {
    report(5, "axiom checkers accept the corpus and name the fault in corrupted fixtures", || {
        for c in &strict_corpus() {
            let r = c.check_axioms();
            assert!(r.ok(), "{:?} {:?}", r.domain_errors, r.violations);
            let p = theta(c).unwrap();
            assert!(p.check_axioms().ok());
            assert!(check_condition_e(&p).is_empty());
        }

        // identity of a 1-cell with the wrong boundary
        let mut c = corpus::walking_arrow().coinclude(2).unwrap();
        c.set_identity(1, "a", "(ix,ix)");
        assert!(c.check_axioms().has_violation(Axiom::SI));

        // composite with the wrong boundary
        let mut c = corpus::walking_arrow();
        c.set_comp(0, 1, "ix", "a", "ix");
        assert!(c.check_axioms().has_violation(Axiom::SII));

        // wrong unit
        let mut c = corpus::z2_monoid();
        c.set_identity(0, "x", "one");
        assert!(c.check_axioms().has_violation(Axiom::SIII));

        // broken associativity
        let mut c = corpus::z3_monoid();
        c.set_comp(0, 1, "one", "one", "one");
        assert!(c.check_axioms().has_violation(Axiom::SIV));

        // corrupted precategory composite caught by the boundary axiom
        let mut p = theta(&corpus::z3_monoid().coinclude(2).unwrap()).unwrap();
        p.set_pcomp(2, 2, "(one,one)", "(one,one)", "(one,two)");
        assert!(p.check_axioms().has_violation(PAxiom::PII));
    });
}

/// Splits a pair name `(u,v)` at its top-level comma.
fn split_pair(name: &str) -> (&str, &str) {
    let inner = name.strip_prefix('(').and_then(|s| s.strip_suffix(')')).unwrap();
    let mut depth = 0usize;
    for (i, ch) in inner.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => return (&inner[..i], &inner[i + 1..]),
            _ => {}
        }
    }
    panic!("not a pair name: {name}");
}

#[test]
fn criterion_6_coinclusion_counts_and_case_split() {
    report(6, "co-inclusion cells count parallel pairs and compose by projection", || {
        for base in [corpus::z2_monoid(), corpus::z3_monoid(), corpus::walking_arrow()] {
            for l in [2usize, 3] {
                let d = base.coinclude(l).unwrap();
                let g = d.carrier();
                for k in 2..=l {
                    let mut pairs = 0usize;
                    let lower: Vec<String> = g.cells(k - 1).map(str::to_string).collect();
                    for u in &lower {
                        for v in &lower {
                            if g.are_parallel(k - 1, u, v).unwrap() {
                                pairs += 1;
                            }
                        }
                    }
                    assert_eq!(g.cell_count(k), pairs, "dim {k} of coinclude({}, {l})", base.dim());
                }
                // composition above the base dimension is (u, v') with v = u'
                for k in 2..=l {
                    let cells: Vec<String> = g.cells(k).map(str::to_string).collect();
                    for i in 1..k {
                        for u in &cells {
                            for v in &cells {
                                if !g.are_composable(i, &[(k, u), (k, v)]).unwrap() {
                                    continue;
                                }
                                let uv = d.compose(i, k, u, v).unwrap();
                                let (a, _) = split_pair(u);
                                let (_, b) = split_pair(v);
                                assert_eq!(uv, format!("({a},{b})"));
                            }
                        }
                    }
                }
            }
        }
    });
}

#[test]
fn criterion_7_truncation_is_compatible_with_freeness() {
    report(7, "truncating the free category on a polygraph gives the lower free category", || {
        let shipped = [
            ("loop.pol", corpus::loop_pol()),
            ("path.pol", corpus::path_pol()),
            ("parallel.pol", corpus::parallel_pair_pol()),
            ("pseudomonoid.pol", corpus::pseudomonoid_pol()),
        ];
        for (file, p) in shipped {
            assert_eq!(polycat::polygraph::parse_polygraph(&fixture(file)).unwrap(), p);
            for k in 0..p.dim() {
                let low = p.truncate(k).unwrap();
                let high = p.truncate(k + 1).unwrap();
                for d in 0..=k {
                    let a: Vec<&str> = low.gens(d).collect();
                    let b: Vec<&str> = high.gens(d).collect();
                    assert_eq!(a, b);
                    if d <= 2 {
                        let opts = EnumOptions { max: 5 };
                        assert_eq!(
                            enumerate(&low, d, opts).unwrap(),
                            enumerate(&high, d, opts).unwrap(),
                            "{file} dim {d} at truncation {k}"
                        );
                    }
                }
            }
        }
    });
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }
    fn find(&mut self, x: usize) -> usize {
        if self.0[x] != x {
            let r = self.find(self.0[x]);
            self.0[x] = r;
        }
        self.0[x]
    }
    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        self.0[a] = b;
    }
    fn classes(&mut self) -> usize {
        (0..self.0.len()).filter(|&i| self.find(i) == i).count()
    }
}

#[test]
fn criterion_8_colimits_are_dimensionwise() {
    report(8, "coproduct and pushout generator counts match set-level oracles", || {
        let mut rng = StdRng::seed_from_u64(0xC8);
        for idx in 0..50 {
            let p = random_polygraph(&mut rng, 2 * idx);
            let q = random_polygraph(&mut rng, 2 * idx + 1);
            let (c, inl, inr) = coproduct(&p, &q).unwrap();
            c.validate().unwrap();
            for d in 0..=2 {
                assert_eq!(c.gen_count(d), p.gen_count(d) + q.gen_count(d));
            }
            inl.validate(&p, &c).unwrap();
            inr.validate(&q, &c).unwrap();

            // glue random points of p and q along a discrete polygraph
            let mut r = Polygraph::new("r", 0);
            let m = rng.gen_range(1..=3);
            for i in 0..m {
                r.add_gen0(&format!("s{i}")).unwrap();
            }
            let pick = |rng: &mut StdRng, pol: &Polygraph| {
                let os: Vec<&str> = pol.gens(0).collect();
                os[rng.gen_range(0..os.len())].to_string()
            };
            let mut f = PolMorphism { maps: vec![Default::default()] };
            let mut g = PolMorphism { maps: vec![Default::default()] };
            for i in 0..m {
                f.maps[0].insert(format!("s{i}"), pick(&mut rng, &p));
                g.maps[0].insert(format!("s{i}"), pick(&mut rng, &q));
            }
            let (po, jl, jr) = pushout(&r, &p, &q, &f, &g).unwrap();
            po.validate().unwrap();
            jl.validate(&p, &po).unwrap();
            jr.validate(&q, &po).unwrap();

            // set-level oracle for the glued points
            let pn: Vec<&str> = p.gens(0).collect();
            let qn: Vec<&str> = q.gens(0).collect();
            let mut uf = UnionFind::new(pn.len() + qn.len());
            for i in 0..m {
                let a = pn.iter().position(|x| *x == f.maps[0][&format!("s{i}")]).unwrap();
                let b = qn.iter().position(|x| *x == g.maps[0][&format!("s{i}")]).unwrap();
                uf.union(a, pn.len() + b);
            }
            assert_eq!(po.gen_count(0), uf.classes());
            for d in 1..=2 {
                assert_eq!(po.gen_count(d), p.gen_count(d) + q.gen_count(d));
            }
        }
    });
}

#[test]
fn criterion_9_equational_theories() {
    report(9, "the bundled theories, models and the graph reduct behave as stated", || {
        for t in [eat::t_mon(), eat::t_gph(), eat::t_cat(), eat::t_grp()] {
            t.check().unwrap();
        }
        let mon = eat::t_mon();
        let z2 = eat::parse_model(&fixture("z2.model")).unwrap();
        assert!(eat::check_model(&mon, &z2).unwrap().ok());

        let bad = eat::parse_model(&fixture("z2bad.model")).unwrap();
        let r = eat::check_model(&mon, &bad).unwrap();
        assert!(r.structural.is_empty());
        assert!(!r.violations.is_empty());
        for v in &r.violations {
            assert!(v.contains("e()"), "non-unit violation reported: {v}");
        }

        let cat = eat::t_cat();
        let two = eat::parse_model(&fixture("cat2.model")).unwrap();
        assert!(eat::check_model(&cat, &two).unwrap().ok());
        // composition is defined on exactly the composable pairs
        let comp = &two.tables["comp"];
        let tgt = &two.tables["tgt0"];
        let src = &two.tables["src0"];
        for x in two.carriers["c1"].iter() {
            for y in two.carriers["c1"].iter() {
                let composable = tgt[&vec![x.clone()]] == src[&vec![y.clone()]];
                assert_eq!(comp.contains_key(&vec![x.clone(), y.clone()]), composable);
            }
        }

        // the reduct along gph -> cat is the underlying graph
        let m = eat::gph_to_cat();
        m.validate(&eat::t_gph(), &cat).unwrap();
        let red = eat::reduct(&m, &eat::t_gph(), &two).unwrap();
        assert!(eat::check_model(&eat::t_gph(), &red).unwrap().ok());
        assert_eq!(red.carriers["c1"], two.carriers["c1"]);
        assert_eq!(red.tables["gsrc0"], two.tables["src0"]);
        assert_eq!(red.tables["gtgt0"], two.tables["tgt0"]);
    });
}
