//! Computational checks behind the dimension count of spaces of maps from
//! an elliptic curve to the ten-dimensional spinor variety `OG(5, 10)`: root
//! data and the Bott–Samelson tower, lifted cycle classes, finite-field models of the
//! isotropic geometry, and configurations of the tower over a flag.

pub mod bstower;
pub mod cycles;
pub mod isogeom;
pub mod liftconfig;
pub mod report;
pub mod rootsys;
pub mod spinor;
