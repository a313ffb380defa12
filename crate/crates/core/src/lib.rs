#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod error;
pub mod expolyring;
pub mod lattice;
pub mod linalg;
pub mod repthy;
pub mod ringmaps;
pub mod scalars;
pub mod weylalg;
pub mod wittalg;

pub use error::{Error, Result};
