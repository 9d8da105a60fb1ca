//! Command-line verifier for split Casimir identities of `osp(M|N)` and
//! `sl(M|N)`, built on [`supercas_core`].

pub use supercas_core as core;

pub mod cli;
pub mod instance;
pub mod report;
pub mod suites;
