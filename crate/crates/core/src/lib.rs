pub mod characters;
pub mod cli;
pub mod chow_geometry;
pub mod combinatorics;
pub mod error;
pub mod exactla;
pub mod foulkes_howe;
pub mod hilbert_covariants;
pub mod poly;
pub mod qseries;
pub mod veronese_tor;
pub mod verify;

pub use error::{Error, Result};
