//! Bounded enumeration of the cells of a free category, and materialization
//! of a free category as an explicit finite table when the bound is large
//! enough to be exhaustive.

use indexmap::IndexSet;

use super::cell::{Cell, Layer, NormalForm, Word};
use super::engine::{
    apply_layer, canonicalize, compose_cells, gen2_lens, nf_tgt, word_end,
};
use crate::globset::GlobularSet;
use crate::polygraph::Polygraph;
use crate::strictcat::FiniteStrictCat;
use crate::{Error, Result};

/// Bounds for [`enumerate`]: `max` limits word length in dimension 1 and
/// both word length and layer count in dimension 2.
#[derive(Debug, Clone, Copy)]
pub struct EnumOptions {
    pub max: usize,
}

fn words_up_to(sig: &Polygraph, max: usize) -> Result<Vec<Word>> {
    let gens1: Vec<String> = sig.gens(1).map(str::to_string).collect();
    let mut out: Vec<Word> = sig.gens(0).map(Word::empty).collect();
    let mut frontier = out.clone();
    for _ in 0..max {
        let mut next = Vec::new();
        for w in &frontier {
            let end = word_end(sig, w)?;
            for g in &gens1 {
                let (s, _) = endpoints(sig, g)?;
                if s == end {
                    let mut letters = w.letters.clone();
                    letters.push(g.clone());
                    next.push(Word { start: w.start.clone(), letters });
                }
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    Ok(out)
}

fn endpoints(sig: &Polygraph, g: &str) -> Result<(String, String)> {
    use super::engine::{cell_src, cell_tgt, eval};
    use super::term::Term;
    let c = eval(sig, &Term::gen(g))?;
    match (cell_src(sig, &c)?, cell_tgt(sig, &c)?) {
        (Some(Cell::Zero(s)), Some(Cell::Zero(t))) => Ok((s, t)),
        _ => Err(Error::Structure(format!("`{g}` is not a 1-generator"))),
    }
}

/// Enumerates the distinct cells of the given dimension, up to the bound.
/// In dimension 1 the bound limits path length; in dimension 2 it limits
/// both the source word length and the number of layers. Cells of dimension
/// 2 are returned in canonical form, without duplicates.
pub fn enumerate(sig: &Polygraph, dim: usize, opts: EnumOptions) -> Result<Vec<Cell>> {
    match dim {
        0 => Ok(sig.gens(0).map(|g| Cell::Zero(g.to_string())).collect()),
        1 => Ok(words_up_to(sig, opts.max)?.into_iter().map(Cell::One).collect()),
        2 => {
            let gens2: Vec<String> = sig.gens(2).map(str::to_string).collect();
            let mut seen: IndexSet<NormalForm> = IndexSet::new();
            for w in words_up_to(sig, opts.max)? {
                let mut stack = vec![(w.clone(), Vec::<Layer>::new())];
                while let Some((cur, layers)) = stack.pop() {
                    let nf = NormalForm { src: w.clone(), layers: layers.clone() };
                    seen.insert(canonicalize(sig, &nf)?);
                    if layers.len() >= opts.max {
                        continue;
                    }
                    for g in &gens2 {
                        let (slen, _) = gen2_lens(sig, g)?;
                        if slen > cur.len() {
                            continue;
                        }
                        for offset in 0..=(cur.len() - slen) {
                            let layer = Layer { offset, gen: g.clone() };
                            if let Ok(next) = apply_layer(sig, &cur, &layer) {
                                let mut ls = layers.clone();
                                ls.push(layer);
                                stack.push((next, ls));
                            }
                        }
                    }
                }
            }
            Ok(seen.into_iter().map(Cell::Two).collect())
        }
        d => Err(Error::UnsupportedDimension(d)),
    }
}

/// Builds the free category on `sig` as an explicit finite strict 2-category
/// when the enumeration at the given bound is closed under composition;
/// errors out otherwise. Cells are named by their displayed form.
pub fn materialize_finite(sig: &Polygraph, bound: usize) -> Result<FiniteStrictCat> {
    let opts = EnumOptions { max: bound };
    let words: Vec<Word> = words_up_to(sig, bound)?;
    let twos: Vec<NormalForm> = enumerate(sig, 2, opts)?
        .into_iter()
        .map(|c| match c {
            Cell::Two(nf) => nf,
            _ => unreachable!(),
        })
        .collect();

    let mut carrier = GlobularSet::new(2);
    for x in sig.gens(0) {
        carrier.add_cell0(x)?;
    }
    for w in &words {
        carrier.add_cell(2 - 1, &w.to_string(), &w.start, &word_end(sig, w)?)?;
    }
    let word_names: IndexSet<String> = words.iter().map(Word::to_string).collect();
    for nf in &twos {
        let t = nf_tgt(sig, nf)?;
        if !word_names.contains(&t.to_string()) {
            return Err(Error::Structure(format!(
                "enumeration at bound {bound} is not closed: missing word `{t}`"
            )));
        }
        carrier.add_cell(2, &nf.to_string(), &nf.src.to_string(), &t.to_string())?;
    }

    let mut cat = FiniteStrictCat::new(carrier);
    for x in sig.gens(0) {
        cat.set_identity(0, x, &Word::empty(x).to_string());
    }
    for w in &words {
        cat.set_identity(1, &w.to_string(), &NormalForm::identity(w.clone()).to_string());
    }

    let missing = |cell: &Cell| {
        Error::Structure(format!("enumeration at bound {bound} is not closed: missing `{cell}`"))
    };
    // (0, 1): word concatenation.
    for u in &words {
        for v in &words {
            if word_end(sig, u)? != v.start {
                continue;
            }
            let uv = compose_cells(sig, 0, &Cell::One(u.clone()), &Cell::One(v.clone()))?;
            let name = uv.to_string();
            if !word_names.contains(&name) {
                return Err(missing(&uv));
            }
            cat.set_comp(0, 1, &u.to_string(), &v.to_string(), &name);
        }
    }
    // (0, 2) and (1, 2).
    let two_names: IndexSet<String> = twos.iter().map(NormalForm::to_string).collect();
    for u in &twos {
        for v in &twos {
            for i in [0usize, 1] {
                let composable = match i {
                    0 => word_end(sig, &u.src)? == v.src.start,
                    _ => nf_tgt(sig, u)? == v.src,
                };
                if !composable {
                    continue;
                }
                let uv = compose_cells(sig, i, &Cell::Two(u.clone()), &Cell::Two(v.clone()))?;
                let uv = match uv {
                    Cell::Two(nf) => Cell::Two(canonicalize(sig, &nf)?),
                    c => c,
                };
                let name = uv.to_string();
                if !two_names.contains(&name) {
                    return Err(missing(&uv));
                }
                cat.set_comp(i, 2, &u.to_string(), &v.to_string(), &name);
            }
        }
    }
    Ok(cat)
}
