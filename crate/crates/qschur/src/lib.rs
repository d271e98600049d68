//! Exact symbolic computation for the Hecke–Clifford superalgebra, the queer
//! q-Schur superalgebras and the long-element realization of the quantum
//! queer supergroup `U_v(q_n)`.
//!
//! Everything is computed over `Q(v)` with `q = v^2`. The modules build on
//! each other:
//!
//! - [`ring`]: Laurent polynomials and rational functions in `v`.
//! - [`combin`]: compositions, (super)matrices, permutations, double cosets.
//! - [`hecke`]: the Hecke–Clifford superalgebra in the `T_w c^alpha` basis.
//! - [`sdp`]: the semi-direct-product condition, decided semantically.
//! - [`schur`]: structure constants of the queer q-Schur superalgebra, both
//!   brute force and closed form.
//! - [`longform`]: long elements, generators, relation checks, triangularity
//!   and PBW rank evidence.

pub mod combin;
pub mod error;
pub mod hecke;
pub mod linalg;
pub mod longform;
pub mod report;
pub mod ring;
pub mod schur;
pub mod sdp;

pub use error::{Error, Result};
