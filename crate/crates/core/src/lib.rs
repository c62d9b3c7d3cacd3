//! Exact computation of Gram determinants for the cell modules of the
//! Birman-Murakami-Wenzl algebra `B_n` over `Q(q, r)`, certification of the
//! seminormal representations against the defining relations, and a decision
//! procedure for semisimplicity over a specified field.
//!
//! Everything is computed with exact Laurent-polynomial arithmetic; there are
//! no floating-point values and no tolerances anywhere in the crate.

pub mod arith;
pub mod combin;
pub mod gram;
pub mod seminormal;
pub mod semisimple;

pub use arith::{
    delta_param, factorize, quantum_factorial, quantum_int, ArithError, FactorAtom, FactorUnit,
    FactoredValue, LaurentPoly, RationalFn,
};
pub use combin::{CellLabel, Content, Node, NodeKind, Partition, UpDownTableau};
pub use gram::{GramCtx, GramDeterminant};
pub use seminormal::{build_rep, certify_relations, construct_rep, central_scalar, CertifyReport, RepBlock};
pub use semisimple::{cross_check_criterion, decide_semisimple, FieldSpec, RSpec, Verdict};
