//! Deterministic SVG string diagrams for cells of dimension <= 2.
//!
//! Wires run bottom-to-top, one vertical band per layer. All coordinates
//! are integers so repeated runs produce identical bytes. Wire pitch is 40
//! and band height 60; a node sits at the horizontal middle of the block
//! its generator rewrites.

use polycat::freecat::engine::apply_layer;
use polycat::freecat::{eval, normalize, Cell, NormalForm, Term, Word};
use polycat::polygraph::Polygraph;
use polycat::{Error, Result};

const PITCH: i64 = 40;
const BAND: i64 = 60;
const MARGIN: i64 = 20;

/// x coordinate of wire position `p` (the midpoint of the p-th letter).
fn wire_x(p: usize) -> i64 {
    MARGIN + p as i64 * PITCH + PITCH / 2
}

/// Lengths of the source and target words of a 2-generator.
fn gen2_lens(sig: &Polygraph, g: &str) -> Result<(usize, usize)> {
    let (s, t) = sig.boundary_terms(g)?;
    match (eval(sig, s)?, eval(sig, t)?) {
        (Cell::One(a), Cell::One(b)) => Ok((a.len(), b.len())),
        _ => Err(Error::Structure(format!("`{g}` is not a 2-generator"))),
    }
}

pub fn render_svg(sig: &Polygraph, t: &Term) -> Result<String> {
    let nf = match normalize(sig, t)? {
        Cell::Zero(x) => {
            return Ok(format!(
                "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"80\" height=\"80\" \
                 viewBox=\"0 0 80 80\">\n<circle cx=\"40\" cy=\"40\" r=\"4\" fill=\"black\"/>\n\
                 <text x=\"48\" y=\"44\" font-size=\"14\">{x}</text>\n</svg>\n"
            ));
        }
        Cell::One(w) => NormalForm::identity(w),
        Cell::Two(nf) => nf,
    };

    // words between layers, bottom to top
    let mut stages: Vec<Word> = vec![nf.src.clone()];
    for l in &nf.layers {
        let next = apply_layer(sig, stages.last().unwrap(), l)?;
        stages.push(next);
    }
    let bands = nf.layers.len().max(1);
    let max_len = stages.iter().map(Word::len).max().unwrap_or(0).max(1);

    let width = 2 * MARGIN + max_len as i64 * PITCH;
    let height = 2 * MARGIN + bands as i64 * BAND;
    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" \
         viewBox=\"0 0 {width} {height}\">\n"
    ));

    let band_bottom = |j: usize| height - MARGIN - j as i64 * BAND;
    let line = |x1: i64, y1: i64, x2: i64, y2: i64| {
        format!(
            "<line x1=\"{x1}\" y1=\"{y1}\" x2=\"{x2}\" y2=\"{y2}\" \
             stroke=\"black\" stroke-width=\"2\"/>\n"
        )
    };

    if nf.layers.is_empty() {
        let (y0, y1) = (band_bottom(0), band_bottom(0) - BAND);
        for p in 0..stages[0].len() {
            out.push_str(&line(wire_x(p), y0, wire_x(p), y1));
        }
    }
    for (j, l) in nf.layers.iter().enumerate() {
        let below = &stages[j];
        let (slen, tlen) = gen2_lens(sig, &l.gen)?;
        let y0 = band_bottom(j);
        let y1 = y0 - BAND;
        let node_x = MARGIN + l.offset as i64 * PITCH + slen as i64 * PITCH / 2;
        let node_y = y0 - BAND / 2;
        for p in 0..below.len() {
            if p < l.offset {
                out.push_str(&line(wire_x(p), y0, wire_x(p), y1));
            } else if p < l.offset + slen {
                out.push_str(&line(wire_x(p), y0, node_x, node_y));
            } else {
                out.push_str(&line(wire_x(p), y0, wire_x(p - slen + tlen), y1));
            }
        }
        for q in l.offset..l.offset + tlen {
            out.push_str(&line(node_x, node_y, wire_x(q), y1));
        }
        out.push_str(&format!(
            "<circle cx=\"{node_x}\" cy=\"{node_y}\" r=\"6\" fill=\"black\"/>\n\
             <text x=\"{}\" y=\"{}\" font-size=\"12\">{}</text>\n",
            node_x + 10,
            node_y + 4,
            l.gen
        ));
    }

    out.push_str("<g id=\"inputs\">\n");
    for (p, g) in stages[0].letters.iter().enumerate() {
        out.push_str(&format!(
            "<text x=\"{}\" y=\"{}\" font-size=\"12\" text-anchor=\"middle\">{g}</text>\n",
            wire_x(p),
            height - 4
        ));
    }
    out.push_str("</g>\n<g id=\"outputs\">\n");
    for (p, g) in stages.last().unwrap().letters.iter().enumerate() {
        out.push_str(&format!(
            "<text x=\"{}\" y=\"{}\" font-size=\"12\" text-anchor=\"middle\">{g}</text>\n",
            wire_x(p),
            12
        ));
    }
    out.push_str("</g>\n</svg>\n");
    Ok(out)
}
