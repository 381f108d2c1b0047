//! Eccentric connectivity index of trees.
//!
//! The eccentric connectivity index of a graph is `sum over v of deg(v) * ecc(v)`,
//! where `ecc(v)` is the eccentricity of `v` (the distance to a farthest vertex).
//! This crate computes it for trees two ways: a quadratic BFS-per-vertex oracle
//! that serves as the trusted reference, and a linear-time method that roots the
//! tree at a center vertex and reuses subtree depths. On top of that sit the
//! named extremal families (paths, stars, brooms, spiders, Volkmann trees),
//! index-monotone tree surgeries, an exhaustive free-tree enumerator, and a
//! verification layer that checks every extremal claim against enumeration and
//! reports `PASS`, `FAIL`, or `ERRATUM` verdicts.
//!
//! Start with [`Tree`], [`descriptor::xi_linear`], and [`enumeration::free_trees`].
//! The `examples/` directory has one runnable program per capability.

#![forbid(unsafe_code)]

pub mod cli;
pub mod descriptor;
pub mod enumeration;
pub mod extremal;
pub mod families;
pub mod transforms;
pub mod tree;

pub use descriptor::{xi_linear, xi_oracle, XiValue};
pub use tree::{EccProfile, Tree};
