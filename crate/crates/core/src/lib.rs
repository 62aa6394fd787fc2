//! Exact symbolic verification of Darboux transformations between matrix
//! weights and their algebras of matrix differential operators.

pub mod algebra;
pub mod catalog;
pub mod darboux;
pub mod diffop;
pub mod dw;
pub mod error;
pub mod io;
pub mod mop;
pub mod report;
pub mod weights;

pub use algebra::{GaussianRational, Mat, MatC, MatP, MatR, Poly, RatFun, Q};
pub use darboux::{verify_strong, Caps, DarbouxCertificate, Direction};
pub use diffop::{DegreePreserving, MatDiffOp};
pub use dw::{eigenvalue_poly, membership_test, solve_bounded_order, EigenMatrix, SolveResult};
pub use error::{Error, Result};
pub use mop::{monic_sequence, MOPTable};
pub use weights::{Kernel, MatrixWeight};
