//! Exact computations on Cayley graphs of small groups: character tables
//! over cyclotomic fields, spectra, canonical forms, and searches for
//! isomorphic Cayley graphs whose character sums differ.

#![allow(clippy::needless_range_loop)]

pub mod catalog;
pub mod chars;
pub mod cyclotomic;
pub mod engine;
pub mod graph;
pub mod group;
pub mod iso;
pub mod spectra;
