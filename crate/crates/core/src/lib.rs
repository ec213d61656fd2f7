//! Circle and horocycle packings of hyperbolic surfaces and orbifolds.
//!
//! * [`hypgeom`]: hyperbolic triangles, turnover packing radii and
//!   congruent-circle packing densities.
//! * [`fpgroup`]: finitely presented groups and low-index subgroup search.
//! * [`fuchsian`]: orbifold signatures, Riemann–Hurwitz and cover surveys.
//! * [`horocycle`]: horoballs in the ideal triangle and modular-group covers.
//! * [`render`]: SVG figures of the constructed packings.

pub mod fpgroup;
pub mod fuchsian;
pub mod horocycle;
pub mod hypgeom;
pub mod quad;
pub mod render;
