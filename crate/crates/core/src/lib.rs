//! Exact computation in the centers of the type-A Iwahori-Hecke algebras
//! `H_n` over Q(v), the quantum Frobenius map `psi` onto symmetric functions,
//! and the v-characteristic map `ch_v`.
//!
//! `H_n` is generated by `T_1, ..., T_{n-1}` subject to the braid relations and
//! `(T_k - v)(T_k + 1) = 0`; it has basis `T_w` for `w` in `S_n`.
//!
//! Conventions used throughout:
//!
//! * Permutations compose as functions: `(u w)(i) = u(w(i))`. Right
//!   multiplication by `s_i` swaps the entries in positions `i, i+1` of the
//!   one-line notation, left multiplication swaps the values `i, i+1`.
//!   `T_u T_w = T_{uw}` whenever `l(uw) = l(u) + l(w)` in this convention.
//! * Partitions of `n` are listed in decreasing lexicographic order; every
//!   matrix row/column order and every export uses that order.
//! * Only the square `T~_w^2 = v^{-l(w)} T_w^2` of the half-integer normalized
//!   basis is ever formed, so all coefficients stay in Q(v).

pub mod center;
pub mod charmap;
pub mod combinatorics;
pub mod error;
pub mod export;
pub mod hecke;
mod memo;
pub mod ratfun;
pub mod symfunc;
pub mod symgroup;

pub use center::{CentralElement, ClassPolyTable};
pub use charmap::{CharacterTable, VirtualCharacter};
pub use combinatorics::{Composition, Partition};
pub use error::{Error, Result};
pub use hecke::HeckeElement;
pub use ratfun::{LaurentPoly, RatFun};
pub use symfunc::{Basis, SymFun, TransitionMatrix};
pub use symgroup::Permutation;
