//! Exact computations with Zinbiel 2-algebras (crossed modules of Zinbiel algebras):
//! axiom checks, unified products built from extending data, crossed and bicrossed
//! products, and classification of extending structures over finite fields.

pub mod classify;
pub mod cli;
pub mod codec;
pub mod conditions;
pub mod error;
pub mod exact_linear;
pub mod par;
pub mod random;
pub mod report;
pub mod special_products;
pub mod unified_product;
pub mod zinbiel_core;

pub use error::Error;
