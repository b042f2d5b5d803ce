//! Homotopy groups of gauge groups of principal bundles over spheres and
//! surfaces.
//!
//! The computation is exact integer algebra: Smith normal form ([`fgab`]),
//! five-term exact sequences ([`exactseq`]) and a JSON catalog of homotopy
//! groups and Samelson products ([`catalog`]), combined in [`gaugecalc`].
//!
//! ```
//! use ghg::catalog::Catalog;
//! use ghg::gaugecalc::su2_s4_pi2;
//!
//! let catalog = Catalog::builtin();
//! assert_eq!(su2_s4_pi2(&catalog, 8).unwrap().to_string(), "Z/4");
//! ```

pub mod catalog;
pub mod cli;
pub mod exactseq;
pub mod fgab;
pub mod gaugecalc;
pub mod verify;
