//! Catalog files, JSON reports and the `askey` command line.

pub mod catalog_file;
pub mod cli;
pub mod report;
