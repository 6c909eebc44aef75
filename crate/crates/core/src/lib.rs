pub mod error;
pub mod functional;
pub mod ladder;
pub mod quadrature;
pub mod zeta;
pub mod zprime_lab;

pub use error::{Error, Result};
