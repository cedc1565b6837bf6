//! Command-line front end, file formats and parallel drivers for
//! [`gmd_core`].

pub use gmd_core as core;

pub mod commands;
pub mod config;
pub mod output;
pub mod parallel;
pub mod parse;
pub mod reproduce;
pub mod verify;
