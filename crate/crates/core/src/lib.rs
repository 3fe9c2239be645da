//! Binary linear codes, their automorphism groups, and the grid, wreath and
//! cyclic code families.
//!
//! ```
//! use codeaut::families::c0;
//! use codeaut::perm::automorphism_group;
//!
//! let code = c0(3, 4).unwrap();
//! assert_eq!((code.length(), code.dimension()), (12, 6));
//! let aut = automorphism_group(&code).unwrap();
//! assert_eq!(aut.group.order().to_string(), "144");
//! ```

pub mod cli;
pub mod code;
pub mod cyclic;
pub mod error;
pub mod families;
pub mod gf2;
pub mod perm;
pub mod verify;

pub use code::{LinearCode, WeightSpectrum};
pub use error::{Error, Result};
pub use families::{CodeFamily, GridIndex, WreathShape};
pub use gf2::{BitMatrix, BitVector};
pub use perm::{AutReport, PermGroup, Permutation};
