pub mod cli;
pub mod cluster;
pub mod literal;
pub mod markov;
pub mod quantum;
pub mod ring;
pub mod sp2;
pub mod suites;
