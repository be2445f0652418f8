//! Batch evaluation harness behind the `randic` command.

pub mod compute;
pub mod dominance;
pub mod output;
pub mod registry;
pub mod source;
pub mod verify;
