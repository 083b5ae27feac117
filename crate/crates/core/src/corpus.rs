//! Small finite strict categories and example polygraphs used as fixtures
//! across the test suites.

use crate::freecat::term::{parse_term, Term};
use crate::globset::GlobularSet;
use crate::polygraph::Polygraph;
use crate::strictcat::FiniteStrictCat;

/// The terminal strict n-category: one cell in every dimension.
pub fn terminal(n: usize) -> FiniteStrictCat {
    let mut g = GlobularSet::new(n);
    g.add_cell0("t0").unwrap();
    for k in 1..=n {
        let below = format!("t{}", k - 1);
        g.add_cell(k, &format!("t{k}"), &below, &below).unwrap();
    }
    let mut c = FiniteStrictCat::new(g);
    for k in 0..n {
        c.set_identity(k, &format!("t{k}"), &format!("t{}", k + 1));
    }
    for k in 1..=n {
        let t = format!("t{k}");
        for i in 0..k {
            c.set_comp(i, k, &t, &t, &t);
        }
    }
    c
}

/// A one-object category whose arrows form the given monoid. `unit` must be
/// an element of `elems` and `mul` a total associative operation on them.
pub fn monoid_cat(elems: &[&str], unit: &str, mul: impl Fn(&str, &str) -> String) -> FiniteStrictCat {
    let mut g = GlobularSet::new(1);
    g.add_cell0("x").unwrap();
    for e in elems {
        g.add_cell(1, e, "x", "x").unwrap();
    }
    let mut c = FiniteStrictCat::new(g);
    c.set_identity(0, "x", unit);
    for u in elems {
        for v in elems {
            c.set_comp(0, 1, u, v, &mul(u, v));
        }
    }
    c
}

/// The additive monoid Z/2 as a one-object category; `zero` is the identity.
pub fn z2_monoid() -> FiniteStrictCat {
    monoid_cat(&["zero", "one"], "zero", |u, v| {
        if u == v { "zero".to_string() } else { "one".to_string() }
    })
}

/// The additive monoid Z/3 as a one-object category; `zero` is the identity.
pub fn z3_monoid() -> FiniteStrictCat {
    let val = |e: &str| match e {
        "zero" => 0,
        "one" => 1,
        _ => 2,
    };
    let name = |n: usize| ["zero", "one", "two"][n % 3].to_string();
    monoid_cat(&["zero", "one", "two"], "zero", move |u, v| name(val(u) + val(v)))
}

/// The free-standing arrow: two objects and one non-identity 1-cell between
/// them.
pub fn walking_arrow() -> FiniteStrictCat {
    let mut g = GlobularSet::new(1);
    g.add_cell0("x").unwrap();
    g.add_cell0("y").unwrap();
    g.add_cell(1, "ix", "x", "x").unwrap();
    g.add_cell(1, "iy", "y", "y").unwrap();
    g.add_cell(1, "a", "x", "y").unwrap();
    let mut c = FiniteStrictCat::new(g);
    c.set_identity(0, "x", "ix");
    c.set_identity(0, "y", "iy");
    c.set_comp(0, 1, "ix", "ix", "ix");
    c.set_comp(0, 1, "iy", "iy", "iy");
    c.set_comp(0, 1, "ix", "a", "a");
    c.set_comp(0, 1, "a", "iy", "a");
    c
}

/// One point with one endo-loop; its free category is the additive monoid
/// of natural numbers.
pub fn loop_pol() -> Polygraph {
    let mut p = Polygraph::new("loop", 1);
    p.add_gen0("x").unwrap();
    p.add_gen(1, "f", Term::gen("x"), Term::gen("x")).unwrap();
    p
}

/// Three points in a row; the free category is finite.
pub fn path_pol() -> Polygraph {
    let mut p = Polygraph::new("path", 1);
    p.add_gen0("x").unwrap();
    p.add_gen0("y").unwrap();
    p.add_gen0("z").unwrap();
    p.add_gen(1, "f", Term::gen("x"), Term::gen("y")).unwrap();
    p.add_gen(1, "g", Term::gen("y"), Term::gen("z")).unwrap();
    p
}

/// Two parallel arrows with a single 2-generator between them; the free
/// 2-category is finite.
pub fn parallel_pair_pol() -> Polygraph {
    let mut p = Polygraph::new("parallel", 2);
    p.add_gen0("x").unwrap();
    p.add_gen0("y").unwrap();
    p.add_gen(1, "f", Term::gen("x"), Term::gen("y")).unwrap();
    p.add_gen(1, "g", Term::gen("x"), Term::gen("y")).unwrap();
    p.add_gen(2, "al", Term::gen("f"), Term::gen("g")).unwrap();
    p
}

/// A point, an endo-arrow, a multiplication and a unit on it, and the three
/// structural 3-generators on top.
pub fn pseudomonoid_pol() -> Polygraph {
    let mut p = Polygraph::new("pseudomonoid", 3);
    p.add_gen0("x").unwrap();
    p.add_gen(1, "a", Term::gen("x"), Term::gen("x")).unwrap();
    let t = |s: &str| parse_term(s).unwrap();
    p.add_gen(2, "mu", t("a *0 a"), t("a")).unwrap();
    p.add_gen(2, "eta", t("id(x)"), t("a")).unwrap();
    p.add_gen(3, "L", t("(eta *0 a) *1 mu"), t("id(a)")).unwrap();
    p.add_gen(3, "R", t("(a *0 eta) *1 mu"), t("id(a)")).unwrap();
    p.add_gen(3, "A", t("(mu *0 a) *1 mu"), t("(a *0 mu) *1 mu")).unwrap();
    p
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_polygraphs_validate() {
        for p in [loop_pol(), path_pol(), parallel_pair_pol(), pseudomonoid_pol()] {
            p.validate().unwrap();
        }
    }

    #[test]
    fn corpus_carriers_are_globular() {
        for c in [terminal(2), z2_monoid(), z3_monoid(), walking_arrow()] {
            assert!(c.carrier().validate_globular().ok());
        }
    }
}
