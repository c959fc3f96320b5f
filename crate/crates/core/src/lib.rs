//! Skew constacyclic codes over `R = Z_q + uZ_q` (`u² = 0`) and over the
//! mixed alphabet `Z_q^α × R^β`, with Gray maps to Z_q and a Lee-distance
//! search harness.
//!
//! The modules build on each other roughly in order:
//!
//! * [`rings`]: Z_q and R arithmetic, automorphisms `θ_{k,d}`, mixed words.
//! * [`skewpoly`]: the skew polynomial ring `R[x; θ]`, division, centrality,
//!   divisor enumeration.
//! * [`rcodes`] and [`zqrcodes`]: codes over R and over Z_qR.
//! * [`graymaps`] and [`zqlinalg`]: images over Z_q, Howell form, Lee distance.
//! * [`search`]: divisor search and the benchmark table.
//!
//! Heavy loops take an [`Exec`] so they can run on the rayon pool (feature
//! `parallel`, on by default) or on the calling thread.

pub mod error;
pub mod exec;
pub mod graymaps;
pub mod rcodes;
pub mod rings;
pub mod search;
pub mod skewpoly;
pub mod zqlinalg;
pub mod zqpoly;
pub mod zqrcodes;

pub use error::{AutomorphismFault, Error, Result};
pub use exec::Exec;
pub use graymaps::GrayVariant;
pub use rcodes::{RCode, RCodeSpec, Twist};
pub use rings::{Automorphism, MixedWord, RingElem, RingParams};
pub use skewpoly::{SkewPoly, SkewRing};
pub use zqlinalg::{CodeType, GenMatrix};
pub use zqpoly::ZqPoly;
pub use zqrcodes::{MixedCode, MixedCodeSpec, SpanRule};
