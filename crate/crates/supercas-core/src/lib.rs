//! Exact split Casimir operators of the Lie superalgebras `osp(M|N)` and
//! `sl(M|N)`: graded tensor algebra, defining and adjoint representations,
//! characteristic identities, invariant projectors, Yang–Baxter solutions
//! and the Vogel-parameter universal layer.
//!
//! Every scalar is a [`Rational`]; nothing is ever rounded.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod casimir_engine;
pub mod error;
pub mod lie;
pub mod osp_algebra;
pub mod rational;
pub mod sl_algebra;
pub mod superlinalg;
pub mod vogel_universal;

pub use error::{Error, Result};
pub use rational::Rational;
pub use superlinalg::{GradedSpace, StorageKind, SuperMatrix};
