//! Building blocks of the `iplab` command line: run manifests, seeded
//! corpora, arc-diagram export and the parameter sweep.

pub mod bench;
pub mod corpus;
pub mod manifest;
pub mod svg;

pub use manifest::RunManifest;
