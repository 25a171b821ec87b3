pub mod affine;
pub mod error;
pub mod grids;
pub mod io;
pub mod orbitfn;
pub mod rootdata;
pub mod system;
pub mod transforms;
pub mod weyl;

pub use error::{Error, Result};
pub use system::System;
