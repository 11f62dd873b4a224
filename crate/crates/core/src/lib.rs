//! Finite paraorthomodular posets and the structures around them.
//!
//! The crate works with small bounded posets stored as bitset rows.
//! [`ortho::OrthoPoset`] adds an antitone involution; the predicates for
//! (sharp) paraorthomodularity, orthomodularity and the related classes
//! live there. [`implication`] builds the set-valued implications and the
//! Sasaki operators, [`relative`] handles posets with an involution on
//! every principal filter, [`amalgam`] glues Kleene lattices along atomic
//! subalgebras, and [`adjoint`] checks adjointness conditions. [`search`]
//! enumerates all small structures and re-checks every statement on them.
//!
//! ```
//! use paraortho::fixtures;
//!
//! let o = fixtures::fig1a();
//! assert!(o.is_paraorthomodular());
//! assert!(!o.is_orthogonal_poset());
//! ```

#![allow(clippy::needless_range_loop)]

pub mod adjoint;
pub mod amalgam;
pub mod check;
pub mod fixtures;
pub mod implication;
pub mod io;
pub mod ortho;
pub mod poset;
pub mod relative;
pub mod search;
pub mod subset;
pub mod table;

pub use ortho::{OrthoPoset, Verdict};
pub use poset::{FinitePoset, SetOrder};
pub use subset::Subset;
pub use table::SetValuedTable;
