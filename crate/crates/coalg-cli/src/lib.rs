//! Document formats, textual syntax and command implementations behind the
//! `coalg` binary, exposed as a library for integration testing.

pub mod commands;
pub mod doc;
pub mod text;
