//! Structure files, Graphviz export and table rendering.

pub mod dot;
pub mod format;
pub mod render;

pub use dot::{export_dot, export_family_dot, export_ortho_dot};
pub use format::{emit, emit_json, parse, parse_with, FormatError, StructureFile, StructureKind};
pub use render::{render_cell, render_table};
