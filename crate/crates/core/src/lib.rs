pub mod cli;
pub mod error;
pub mod params;
pub mod poly;
pub mod structure;
pub mod simples;
pub mod projectives;
pub mod picard;
pub mod random;
pub mod selftest;
