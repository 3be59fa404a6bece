//! Involutive rings and their exact elements.

mod descriptor;
mod embed;
pub mod json;
mod positivity;
mod qpoly;
mod value;

pub use descriptor::{parse_ring_spec, DualFlavor, Ring, RingKind, SpecError};
pub use embed::{dual_extend, dual_lift, hurley_embed};
pub use positivity::{is_positive, PositivityCone};
pub use value::{Elem, LaurentElem, RingError, RingValue};
