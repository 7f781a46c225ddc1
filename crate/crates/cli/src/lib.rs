//! Library surface of the command-line front end: table/sweep assembly and
//! the named verification suites, kept in the library so the acceptance
//! tests drive exactly the code the binary runs.

pub mod checks;
pub mod output;
