//! Hook+column coefficients of iterated plethysms: expression syntax,
//! engine drivers, verification sweeps, sequence statistics and
//! serialization on top of `plethyrs-core`.

pub mod analytics;
pub mod bench;
pub mod cache;
pub mod engine;
pub mod expr;
pub mod io;
pub mod verify;

pub use cache::SharedCharacterTable;
pub use engine::{Engine, EngineError};
pub use expr::{parse, ParseError, TypedExpression};
