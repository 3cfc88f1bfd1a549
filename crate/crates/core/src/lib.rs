//! Exact computation of Hirzebruch genera and both cusp expansions of the
//! elliptic genus, together with the GF(2) code machinery that turns torus
//! isotropy data into vanishing bounds.

pub mod codes;
pub mod elliptic;
pub mod genus;
pub mod isotropy;
pub mod selftest;
pub mod series;
