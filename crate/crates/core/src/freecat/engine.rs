//! Evaluation of terms to cells, typing, normalization and the equality
//! decision procedure.
//!
//! Cells are computed in dimensions 0 to 2; boundaries of 3-dimensional
//! terms are computed as 2-cells, so typing covers dimension 3, while
//! equality is decided in dimension <= 2 only.

use super::cell::{Cell, Layer, NormalForm, Word};
use super::term::Term;
use crate::polygraph::Polygraph;
use crate::{Error, Result};

/// The endpoints of a 1-generator as 0-generators.
fn gen1_endpoints(sig: &Polygraph, g: &str) -> Result<(String, String)> {
    let (s, t) = sig.boundary_terms(g)?;
    match (eval(sig, s)?, eval(sig, t)?) {
        (Cell::Zero(a), Cell::Zero(b)) => Ok((a, b)),
        _ => Err(Error::Structure(format!("boundaries of 1-generator `{g}` are not points"))),
    }
}

/// The boundary words of a 2-generator.
fn gen2_boundaries(sig: &Polygraph, g: &str) -> Result<(Word, Word)> {
    let (s, t) = sig.boundary_terms(g)?;
    match (eval(sig, s)?, eval(sig, t)?) {
        (Cell::One(a), Cell::One(b)) => Ok((a, b)),
        _ => Err(Error::Structure(format!("boundaries of 2-generator `{g}` are not words"))),
    }
}

/// The end point of a word.
pub fn word_end(sig: &Polygraph, w: &Word) -> Result<String> {
    let mut cur = w.start.clone();
    for g in &w.letters {
        let (s, t) = gen1_endpoints(sig, g)?;
        if s != cur {
            return Err(Error::Structure(format!(
                "word is not a path: `{g}` starts at `{s}`, expected `{cur}`"
            )));
        }
        cur = t;
    }
    Ok(cur)
}

/// The 0-cell sitting at position `pos` of a word (0 = start).
fn point_at(sig: &Polygraph, w: &Word, pos: usize) -> Result<String> {
    let mut cur = w.start.clone();
    for g in w.letters.iter().take(pos) {
        let (_, t) = gen1_endpoints(sig, g)?;
        cur = t;
    }
    Ok(cur)
}

fn subword(sig: &Polygraph, w: &Word, from: usize, to: usize) -> Result<Word> {
    Ok(Word { start: point_at(sig, w, from)?, letters: w.letters[from..to].to_vec() })
}

/// Rewrites one block of `w` by the 2-generator of `layer`; fails if the
/// block does not match the generator's source word.
pub fn apply_layer(sig: &Polygraph, w: &Word, layer: &Layer) -> Result<Word> {
    let (src, tgt) = gen2_boundaries(sig, &layer.gen)?;
    let lo = layer.offset;
    let hi = lo + src.len();
    if hi > w.len() {
        return Err(Error::Structure(format!(
            "layer `{}`@{} does not fit in a word of length {}",
            layer.gen,
            lo,
            w.len()
        )));
    }
    if w.letters[lo..hi] != src.letters[..] {
        return Err(Error::Structure(format!(
            "layer `{}`@{} does not match the word at that offset",
            layer.gen, lo
        )));
    }
    if point_at(sig, w, lo)? != src.start {
        return Err(Error::Structure(format!(
            "layer `{}`@{} is anchored at the wrong point",
            layer.gen, lo
        )));
    }
    let mut letters = w.letters[..lo].to_vec();
    letters.extend(tgt.letters.iter().cloned());
    letters.extend(w.letters[hi..].iter().cloned());
    Ok(Word { start: w.start.clone(), letters })
}

/// The target word of a 2-cell.
pub fn nf_tgt(sig: &Polygraph, nf: &NormalForm) -> Result<Word> {
    let mut cur = nf.src.clone();
    for l in &nf.layers {
        cur = apply_layer(sig, &cur, l)?;
    }
    Ok(cur)
}

/// The identity cell one dimension up.
pub fn identity_cell(c: &Cell) -> Result<Cell> {
    match c {
        Cell::Zero(x) => Ok(Cell::One(Word::empty(x))),
        Cell::One(w) => Ok(Cell::Two(NormalForm::identity(w.clone()))),
        Cell::Two(_) => Err(Error::UnsupportedDimension(3)),
    }
}

/// The source of a cell, one dimension down; `None` in dimension 0.
pub fn cell_src(_sig: &Polygraph, c: &Cell) -> Result<Option<Cell>> {
    Ok(match c {
        Cell::Zero(_) => None,
        Cell::One(w) => Some(Cell::Zero(w.start.clone())),
        Cell::Two(nf) => Some(Cell::One(nf.src.clone())),
    })
}

pub fn cell_tgt(sig: &Polygraph, c: &Cell) -> Result<Option<Cell>> {
    Ok(match c {
        Cell::Zero(_) => None,
        Cell::One(w) => Some(Cell::Zero(word_end(sig, w)?)),
        Cell::Two(nf) => Some(Cell::One(nf_tgt(sig, nf)?)),
    })
}

fn not_composable(
    sig: &Polygraph,
    i: usize,
    a: &Cell,
    b: &Cell,
    ab: &Cell,
    bb: &Cell,
) -> Error {
    let _ = sig;
    Error::NotComposable {
        i,
        left: a.to_string(),
        left_boundary: ab.to_string(),
        right: b.to_string(),
        right_boundary: bb.to_string(),
    }
}

/// Composes two cells of the same dimension at index `i`. The layer stack of
/// a 2-cell result is not canonicalized here.
pub fn compose_cells(sig: &Polygraph, i: usize, a: &Cell, b: &Cell) -> Result<Cell> {
    match (a, b) {
        (Cell::One(u), Cell::One(v)) if i == 0 => {
            let end = word_end(sig, u)?;
            if end != v.start {
                return Err(not_composable(
                    sig,
                    i,
                    a,
                    b,
                    &Cell::Zero(end),
                    &Cell::Zero(v.start.clone()),
                ));
            }
            let mut letters = u.letters.clone();
            letters.extend(v.letters.iter().cloned());
            Ok(Cell::One(Word { start: u.start.clone(), letters }))
        }
        (Cell::Two(u), Cell::Two(v)) if i == 1 => {
            let t = nf_tgt(sig, u)?;
            if t != v.src {
                return Err(not_composable(
                    sig,
                    i,
                    a,
                    b,
                    &Cell::One(t),
                    &Cell::One(v.src.clone()),
                ));
            }
            let mut layers = u.layers.clone();
            layers.extend(v.layers.iter().cloned());
            Ok(Cell::Two(NormalForm { src: u.src.clone(), layers }))
        }
        (Cell::Two(u), Cell::Two(v)) if i == 0 => {
            let end = word_end(sig, &u.src)?;
            if end != v.src.start {
                return Err(not_composable(
                    sig,
                    i,
                    a,
                    b,
                    &Cell::Zero(end),
                    &Cell::Zero(v.src.start.clone()),
                ));
            }
            // Left layers first over the joint word, then the right layers
            // shifted past the left target.
            let tgt_u = nf_tgt(sig, u)?;
            let mut letters = u.src.letters.clone();
            letters.extend(v.src.letters.iter().cloned());
            let src = Word { start: u.src.start.clone(), letters };
            let mut layers = u.layers.clone();
            layers.extend(
                v.layers
                    .iter()
                    .map(|l| Layer { offset: l.offset + tgt_u.len(), gen: l.gen.clone() }),
            );
            Ok(Cell::Two(NormalForm { src, layers }))
        }
        _ => Err(Error::Dimension(format!(
            "cannot compose cells of dimension {} at index {i}",
            a.dim()
        ))),
    }
}

/// The dimension of a term: generators have their declared dimension,
/// `id` raises it by one, and a composite at index `i` lives in dimension
/// `max(dim l, dim r, i + 1)` after identity padding.
pub fn term_dim(sig: &Polygraph, t: &Term) -> Result<usize> {
    Ok(match t {
        Term::Gen(g) => sig.gen_dim(g).ok_or_else(|| Error::UnknownGenerator(g.clone()))?,
        Term::Id(u) => term_dim(sig, u)? + 1,
        Term::Comp(i, l, r) => term_dim(sig, l)?.max(term_dim(sig, r)?).max(i + 1),
    })
}

/// Evaluates a term of dimension <= 2 to a cell. The result is not
/// canonicalized.
pub fn eval(sig: &Polygraph, t: &Term) -> Result<Cell> {
    match t {
        Term::Gen(g) => match sig.gen_dim(g) {
            Some(0) => Ok(Cell::Zero(g.clone())),
            Some(1) => {
                let (s, _) = gen1_endpoints(sig, g)?;
                Ok(Cell::One(Word { start: s, letters: vec![g.clone()] }))
            }
            Some(2) => {
                let (src, _) = gen2_boundaries(sig, g)?;
                Ok(Cell::Two(NormalForm {
                    src,
                    layers: vec![Layer { offset: 0, gen: g.clone() }],
                }))
            }
            Some(d) => Err(Error::UnsupportedDimension(d)),
            None => Err(Error::UnknownGenerator(g.clone())),
        },
        Term::Id(u) => identity_cell(&eval(sig, u)?),
        Term::Comp(i, l, r) => {
            let m = term_dim(sig, t)?;
            if m > 2 {
                return Err(Error::UnsupportedDimension(m));
            }
            let mut cl = eval(sig, l)?;
            let mut cr = eval(sig, r)?;
            while cl.dim() < m {
                cl = identity_cell(&cl)?;
            }
            while cr.dim() < m {
                cr = identity_cell(&cr)?;
            }
            compose_cells(sig, *i, &cl, &cr)
        }
    }
}

pub(crate) fn gen2_lens(sig: &Polygraph, g: &str) -> Result<(usize, usize)> {
    let (s, t) = gen2_boundaries(sig, g)?;
    Ok((s.len(), t.len()))
}

/// Rewrites a layer stack to its canonical representative: repeatedly swaps
/// adjacent independent layers when the later one lies strictly to the left,
/// or at the same position with a lexicographically smaller footprint.
pub fn canonicalize(sig: &Polygraph, nf: &NormalForm) -> Result<NormalForm> {
    let mut layers = nf.layers.clone();
    let n = layers.len();
    let mut sweeps = 0usize;
    loop {
        let mut changed = false;
        for idx in 0..n.saturating_sub(1) {
            let (a, g) = (layers[idx].offset, layers[idx].gen.clone());
            let (b, h) = (layers[idx + 1].offset, layers[idx + 1].gen.clone());
            let (sg, _tg) = gen2_lens(sig, &g)?;
            let (sh, th) = gen2_lens(sig, &h)?;
            // The later layer is independent on the left when its support
            // ends before the earlier one's output block begins.
            if b + sh <= a && (b, b + sh, h.as_str()) < (a, a + sg, g.as_str()) {
                layers[idx] = Layer { offset: b, gen: h };
                layers[idx + 1] = Layer { offset: a - sh + th, gen: g };
                changed = true;
            }
        }
        if !changed {
            break;
        }
        sweeps += 1;
        if sweeps > 4 * n * n + 16 {
            return Err(Error::Structure("canonicalization did not terminate".into()));
        }
    }
    Ok(NormalForm { src: nf.src.clone(), layers })
}

/// Evaluates and canonicalizes a term of dimension <= 2.
pub fn normalize(sig: &Polygraph, t: &Term) -> Result<Cell> {
    Ok(match eval(sig, t)? {
        Cell::Two(nf) => Cell::Two(canonicalize(sig, &nf)?),
        c => c,
    })
}

/// Decides equality of the cells denoted by two terms. Terms of different
/// dimensions denote different cells; dimension 3 and above is not decided.
pub fn decide_equal(sig: &Polygraph, a: &Term, b: &Term) -> Result<bool> {
    let da = term_dim(sig, a)?;
    let db = term_dim(sig, b)?;
    if da > 2 || db > 2 {
        return Err(Error::UnsupportedDimension(da.max(db)));
    }
    if da != db {
        return Ok(false);
    }
    Ok(normalize(sig, a)? == normalize(sig, b)?)
}

/// The inferred type of a term: its dimension and its boundaries, one
/// dimension down (`None` in dimension 0). Boundaries of 2-cells are words,
/// boundaries of 3-dimensional terms are canonical 2-cells.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeInfo {
    pub dim: usize,
    pub src: Option<Cell>,
    pub tgt: Option<Cell>,
}

/// Pads a term of dimension <= 2 to a canonical 2-cell.
fn pad2(sig: &Polygraph, t: &Term) -> Result<NormalForm> {
    let mut c = normalize(sig, t)?;
    while c.dim() < 2 {
        c = identity_cell(&c)?;
    }
    match c {
        Cell::Two(nf) => Ok(nf),
        _ => unreachable!(),
    }
}

/// The canonical 2-cell boundaries of a term of dimension <= 3.
fn boundaries3(sig: &Polygraph, t: &Term) -> Result<(NormalForm, NormalForm)> {
    if term_dim(sig, t)? <= 2 {
        let nf = pad2(sig, t)?;
        return Ok((nf.clone(), nf));
    }
    match t {
        Term::Gen(g) => {
            let (s, tt) = sig.boundary_terms(g)?;
            Ok((pad2(sig, s)?, pad2(sig, tt)?))
        }
        Term::Id(u) => {
            let nf = pad2(sig, u)?;
            Ok((nf.clone(), nf))
        }
        Term::Comp(i, l, r) => {
            let (sl, tl) = boundaries3(sig, l)?;
            let (sr, tr) = boundaries3(sig, r)?;
            if *i == 2 {
                if tl != sr {
                    return Err(Error::NotComposable {
                        i: 2,
                        left: l.to_string(),
                        left_boundary: Cell::Two(tl).to_string(),
                        right: r.to_string(),
                        right_boundary: Cell::Two(sr).to_string(),
                    });
                }
                Ok((sl, tr))
            } else {
                let s = compose_cells(sig, *i, &Cell::Two(sl), &Cell::Two(sr))?;
                let tt = compose_cells(sig, *i, &Cell::Two(tl), &Cell::Two(tr))?;
                match (s, tt) {
                    (Cell::Two(s), Cell::Two(tt)) => {
                        Ok((canonicalize(sig, &s)?, canonicalize(sig, &tt)?))
                    }
                    _ => unreachable!(),
                }
            }
        }
    }
}

/// Infers the type of a term. Dimensions up to 3 are supported; only the
/// boundaries are computed in dimension 3.
pub fn infer_type(sig: &Polygraph, t: &Term) -> Result<TypeInfo> {
    let dim = term_dim(sig, t)?;
    match dim {
        0..=2 => {
            let c = normalize(sig, t)?;
            Ok(TypeInfo { dim, src: cell_src(sig, &c)?, tgt: cell_tgt(sig, &c)? })
        }
        3 => {
            let (s, tt) = boundaries3(sig, t)?;
            Ok(TypeInfo { dim, src: Some(Cell::Two(s)), tgt: Some(Cell::Two(tt)) })
        }
        d => Err(Error::UnsupportedDimension(d)),
    }
}

fn word_to_term(w: &Word) -> Term {
    let mut it = w.letters.iter();
    match it.next() {
        None => Term::id(Term::gen(&w.start)),
        Some(first) => it.fold(Term::gen(first), |acc, g| Term::comp(0, acc, Term::gen(g))),
    }
}

/// A term denoting the given cell, with one whiskered factor per layer.
pub fn cell_to_term(sig: &Polygraph, c: &Cell) -> Result<Term> {
    Ok(match c {
        Cell::Zero(x) => Term::gen(x),
        Cell::One(w) => word_to_term(w),
        Cell::Two(nf) => {
            if nf.layers.is_empty() {
                return Ok(Term::id(word_to_term(&nf.src)));
            }
            let mut cur = nf.src.clone();
            let mut factors = Vec::new();
            for l in &nf.layers {
                let (slen, _) = gen2_lens(sig, &l.gen)?;
                let prefix = subword(sig, &cur, 0, l.offset)?;
                let suffix = subword(sig, &cur, l.offset + slen, cur.len())?;
                let mut factor = Term::gen(&l.gen);
                if !prefix.is_empty() {
                    factor = Term::comp(0, word_to_term(&prefix), factor);
                }
                if !suffix.is_empty() {
                    factor = Term::comp(0, factor, word_to_term(&suffix));
                }
                factors.push(factor);
                cur = apply_layer(sig, &cur, l)?;
            }
            let mut it = factors.into_iter();
            let first = it.next().unwrap();
            it.fold(first, |acc, f| Term::comp(1, acc, f))
        }
    })
}
