//! Exact computation of the Haar state on the quantum group O(SL_q(3)).
//!
//! Values are rational functions of `q`, represented exactly by
//! [`QRational`]. The main entry points are [`Haar::value`] for single
//! monomials and [`Haar::table`] for whole orders.

pub mod algebra;
pub mod cli;
pub mod error;
pub mod haar;
pub mod normalform;
pub mod qfield;
pub mod verify;

pub use algebra::{Generator, NCPoly, Word};
pub use error::{Error, Result};
pub use haar::{Haar, HaarTable, Method};
pub use normalform::{reduce, StdExponents};
pub use qfield::{Laurent, QRational};
