//! Block sizes of uniform random rooted planar maps.
//!
//! - [`map`]: rotation systems, canonical orders, blocks and block trees.
//! - [`count`]: exact map counts, series identities and the offspring law.
//! - [`sampler`]: exact conditioned Galton-Watson sampling of block sizes.
//! - [`oracle`]: brute-force enumerations for small sizes.
//! - [`limits`]: reference limit laws and Kolmogorov-Smirnov statistics.
//! - [`cli`]: the command-line front end.

pub mod cli;
pub mod count;
pub mod error;
pub mod limits;
pub mod map;
pub mod oracle;
pub mod rng;
pub mod sampler;

pub use error::{CountError, MapError, OracleError, SampleError};
pub use map::RootedMap;
