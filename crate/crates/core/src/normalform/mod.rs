//! Counting matrices, standard monomials and reduction to the basis.

mod matrix;
mod reduce;

pub use matrix::{
    counting_matrix, doubly_stochastic_matrices, doubly_stochastic_order, enumerate_basis, matrix_order_key,
    std_rep, std_word, CountingMatrix, StdExponents, SEGMENTS, SEGMENT_NAMES,
};
pub use reduce::{invariant_checks, reduce, NormalForm, Reducer, Strategy};

#[allow(unused_imports)]
pub(crate) use reduce::add_into;
