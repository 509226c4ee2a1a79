//! Command-line front end and JSON service for the `qpmut` library.

pub mod commands;
pub mod config;
pub mod failure;
pub mod input;
pub mod server;
