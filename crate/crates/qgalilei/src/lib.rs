//! Command-line workbench for the quantum extended Galilei algebra:
//! expression parsing, verification reports and the lattice realization of
//! the q-Casimir equation.

pub mod cli;
pub mod lattice;
pub mod parse;
pub mod report;
