//! File formats, parallel census, batch verification and the command line
//! on top of `flagsym-core`.

pub mod census_file;
pub mod cli;
pub mod parallel;
pub mod render;
pub mod verify;

pub use flagsym_core as core;
