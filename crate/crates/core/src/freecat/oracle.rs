//! Reference decision procedure for 2-cell equality: breadth-first closure
//! of a layer stack under swapping adjacent independent layers, in both
//! directions. Slower than comparing canonical forms, but directly justified
//! by the exchange law; the randomized tests check the two agree.

use indexmap::IndexSet;
use std::collections::VecDeque;

use super::cell::{Cell, Layer, NormalForm};
use super::engine::gen2_lens;
use crate::polygraph::Polygraph;
use crate::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OracleVerdict {
    Equal,
    NotEqual,
    /// The state bound was hit before the closure was exhausted.
    Indeterminate,
}

/// All single-swap neighbours of a layer stack.
fn neighbours(sig: &Polygraph, layers: &[Layer]) -> Result<Vec<Vec<Layer>>> {
    let mut out = Vec::new();
    for idx in 0..layers.len().saturating_sub(1) {
        let g = &layers[idx];
        let h = &layers[idx + 1];
        let (sg, tg) = gen2_lens(sig, &g.gen)?;
        let (sh, th) = gen2_lens(sig, &h.gen)?;
        let (a, b) = (g.offset, h.offset);
        if b + sh <= a {
            // Later layer entirely to the left.
            let mut next = layers.to_vec();
            next[idx] = Layer { offset: b, gen: h.gen.clone() };
            next[idx + 1] = Layer { offset: a - sh + th, gen: g.gen.clone() };
            out.push(next);
        } else if b >= a + tg {
            // Later layer entirely to the right.
            let mut next = layers.to_vec();
            next[idx] = Layer { offset: b - tg + sg, gen: h.gen.clone() };
            next[idx + 1] = Layer { offset: a, gen: g.gen.clone() };
            out.push(next);
        }
    }
    Ok(out)
}

/// Decides equality of two 2-cells by exhausting the swap closure of the
/// first, up to `max_states` distinct stacks.
pub fn oracle_equal(
    sig: &Polygraph,
    a: &NormalForm,
    b: &NormalForm,
    max_states: usize,
) -> Result<OracleVerdict> {
    if a.src != b.src || a.layers.len() != b.layers.len() {
        return Ok(OracleVerdict::NotEqual);
    }
    let mut seen: IndexSet<Vec<Layer>> = IndexSet::new();
    let mut queue = VecDeque::new();
    seen.insert(a.layers.clone());
    queue.push_back(a.layers.clone());
    while let Some(state) = queue.pop_front() {
        if state == b.layers {
            return Ok(OracleVerdict::Equal);
        }
        for next in neighbours(sig, &state)? {
            if seen.insert(next.clone()) {
                if seen.len() > max_states {
                    return Ok(OracleVerdict::Indeterminate);
                }
                queue.push_back(next);
            }
        }
    }
    Ok(OracleVerdict::NotEqual)
}

/// Oracle equality on cells of any dimension up to 2; below dimension 2 the
/// representations are already canonical.
pub fn oracle_equal_cells(
    sig: &Polygraph,
    a: &Cell,
    b: &Cell,
    max_states: usize,
) -> Result<OracleVerdict> {
    match (a, b) {
        (Cell::Two(x), Cell::Two(y)) => oracle_equal(sig, x, y, max_states),
        _ => Ok(if a == b { OracleVerdict::Equal } else { OracleVerdict::NotEqual }),
    }
}
