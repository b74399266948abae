//! Instance file format and result records for the `degedit` binary.

pub mod format;
pub mod record;
