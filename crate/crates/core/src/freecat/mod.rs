//! Cells of free categories on polygraphs: term syntax, evaluation to
//! positional normal forms, a decision procedure for cell equality in
//! dimension <= 2, a reference oracle, and bounded enumeration.

pub mod cell;
pub mod engine;
pub mod enumerate;
pub mod oracle;
pub mod term;

pub use cell::{Cell, Layer, NormalForm, Word};
pub use engine::{
    canonicalize, cell_src, cell_tgt, cell_to_term, compose_cells, decide_equal, eval,
    infer_type, nf_tgt, normalize, term_dim, word_end, TypeInfo,
};
pub use enumerate::{enumerate, materialize_finite, EnumOptions};
pub use oracle::{oracle_equal, oracle_equal_cells, OracleVerdict};
pub use term::{parse_term, Term};
