//! Computational toolkit for cactus groups `J_n` and their pure subgroups.

pub mod complex;
pub mod confspace;
pub mod error;
pub mod hyp;
pub mod oracle;
pub mod perm;
pub mod presentation;
pub mod pure;
pub mod quotient;
pub mod rewrite;
pub mod series;
pub mod split;
pub mod tess;
pub mod words;

pub use error::{Error, Result};
pub use perm::Perm;
pub use presentation::Presentation;
pub use split::{split_form, SplitForm};
pub use tess::TessBall;
pub use words::{Generator, Word};
