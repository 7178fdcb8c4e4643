//! Input language, example catalog and output formats.

pub mod catalog;
pub mod parse;
pub mod render;

pub use catalog::{catalog, CatalogEntry, CATALOG};
pub use parse::{parse, parse_factor, to_source, InputDocument};
pub use render::{read_matrix_json, render_dot, render_json, render_text};
