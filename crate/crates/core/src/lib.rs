//! Second homology of real flag manifolds from restricted root data.
//!
//! Two independent computations are provided: an explicit cellular chain
//! complex built from Schubert cells of degree at most 3, with boundary
//! coefficients from a parity rule and signs fixed by `d2 * d3 = 0`, and a
//! closed-form classification read off the sets of simple restricted roots of
//! rank 1 and rank 2. Supporting modules cover Satake diagrams of the forms
//! with nonzero second de Rham cohomology and the dual basis of
//! characteristic 2-forms for `su(p, q)`.

#![allow(clippy::needless_range_loop)]

pub mod error;
pub mod forms;
pub mod homology;
pub mod linalg;
pub mod nodeset;
pub mod real_form;
pub mod roots;
pub mod satake;
pub mod schubert;
pub mod verify;
pub mod weyl;

pub use error::{Error, Result};
pub use nodeset::NodeSet;
pub use real_form::{real_form_lookup, Params, RankClass, RealFormDatum, RealFormLabel};
pub use roots::{CartanType, Family, Root, RootSystem};
pub use weyl::{cell_dimension, enumerate_weyl, CellDim, WeylElement, WordPolicy};
