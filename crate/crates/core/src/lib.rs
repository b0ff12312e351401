//! Exact computations for equivariant principal bundles over the 2-sphere
//! with a finite rotation group acting.

pub mod beta;
pub mod classify;
pub mod complex;
pub mod error;
pub mod export;
pub mod families;
pub mod geometry;
pub mod group;
pub mod isotropy;
pub mod lattice;
pub mod orbit;
pub mod reps;
pub mod skeleton;
pub mod target;
pub mod verify;
pub mod zmodule;

pub use error::{Error, Result};
