//! Hyperbolic triangles, turnover packing radii and congruent-circle
//! packing densities.
//!
//! Every function here is a closed-form evaluation in `f64`.

use std::f64::consts::PI;

use serde::{Serialize, Serializer};
use thiserror::Error;

/// Limiting density `3/pi` of congruent circle packings of turnover covers.
pub const DENSITY_LIMIT: f64 = 3.0 / PI;

/// Congruent densities within this distance of 1 are rejected.
pub const DENSITY_SLACK: f64 = 1e-12;

/// Angle sums within this distance of `pi` count as Euclidean.
pub const ANGLE_SUM_SLACK: f64 = 1e-12;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GeomError {
    #[error("angle sum {0} is not less than pi")]
    NonHyperbolic(f64),
    #[error("zero angle: ideal vertices are not handled here")]
    ZeroAngle,
    #[error("angle {0} is negative or not finite")]
    BadAngle(f64),
    #[error("triangle has an ideal vertex")]
    IdealVertex,
    #[error("side lengths ({0}, {1}, {2}) violate the strict triangle inequality")]
    Degenerate(f64, f64, f64),
    #[error("negative radius {0}")]
    NegativeRadius(f64),
    #[error("p = {0} is too small; need p >= 4")]
    TooSmallP(u64),
    #[error("genus {0} is below 2")]
    BadGenus(u64),
    #[error("density {0} exceeds 1; inputs are inconsistent")]
    DensityOverflow(f64),
    #[error("x = {0} outside (0, 0.1]")]
    OutOfRange(f64),
}

/// A hyperbolic triangle: angles in radians and the opposite side lengths
/// (side `a` faces angle `alpha`, and so on).
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct HypTriangle {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

fn opposite_side(opp: f64, adj1: f64, adj2: f64) -> f64 {
    ((opp.cos() + adj1.cos() * adj2.cos()) / (adj1.sin() * adj2.sin()))
        .max(1.0)
        .acosh()
}

fn opposite_angle(opp: f64, adj1: f64, adj2: f64) -> f64 {
    let cos = (adj1.cosh() * adj2.cosh() - opp.cosh()) / (adj1.sinh() * adj2.sinh());
    cos.clamp(-1.0, 1.0).acos()
}

/// Builds the compact triangle with the given angles from the angle form of
/// the hyperbolic law of cosines.
pub fn triangle_from_angles(alpha: f64, beta: f64, gamma: f64) -> Result<HypTriangle, GeomError> {
    for angle in [alpha, beta, gamma] {
        if !angle.is_finite() || angle < 0.0 {
            return Err(GeomError::BadAngle(angle));
        }
        if angle == 0.0 {
            return Err(GeomError::ZeroAngle);
        }
    }
    let sum = alpha + beta + gamma;
    if sum >= PI - ANGLE_SUM_SLACK {
        return Err(GeomError::NonHyperbolic(sum));
    }
    Ok(HypTriangle {
        alpha,
        beta,
        gamma,
        a: opposite_side(alpha, beta, gamma),
        b: opposite_side(beta, gamma, alpha),
        c: opposite_side(gamma, alpha, beta),
    })
}

/// The `(pi/p, pi/q, pi/r)` triangle.
pub fn triangle_for_orders(p: u32, q: u32, r: u32) -> Result<HypTriangle, GeomError> {
    if p == 0 || q == 0 || r == 0 {
        return Err(GeomError::ZeroAngle);
    }
    triangle_from_angles(PI / p as f64, PI / q as f64, PI / r as f64)
}

impl HypTriangle {
    /// Builds a triangle from side lengths, recovering the angles from the
    /// side form of the law of cosines.
    pub fn from_sides(a: f64, b: f64, c: f64) -> Result<Self, GeomError> {
        check_strict_triangle(a, b, c)?;
        Ok(HypTriangle {
            alpha: opposite_angle(a, b, c),
            beta: opposite_angle(b, c, a),
            gamma: opposite_angle(c, a, b),
            a,
            b,
            c,
        })
    }

    pub fn is_compact(&self) -> bool {
        self.alpha > 0.0 && self.beta > 0.0 && self.gamma > 0.0
    }

    /// Area by Gauss–Bonnet: `pi - (alpha + beta + gamma)`.
    pub fn area(&self) -> f64 {
        PI - (self.alpha + self.beta + self.gamma)
    }

    /// Largest residual of `cosh a sin(beta) sin(gamma) - cos(beta) cos(gamma) - cos(alpha)`
    /// over the three cyclic permutations.
    pub fn law_of_cosines_residual(&self) -> f64 {
        let r = |s: f64, opp: f64, x: f64, y: f64| (s.cosh() * x.sin() * y.sin() - x.cos() * y.cos() - opp.cos()).abs();
        r(self.a, self.alpha, self.beta, self.gamma)
            .max(r(self.b, self.beta, self.gamma, self.alpha))
            .max(r(self.c, self.gamma, self.alpha, self.beta))
    }
}

fn check_strict_triangle(a: f64, b: f64, c: f64) -> Result<(), GeomError> {
    let ok = [a, b, c].iter().all(|s| s.is_finite() && *s > 0.0) && a < b + c && b < c + a && c < a + b;
    if ok {
        Ok(())
    } else {
        Err(GeomError::Degenerate(a, b, c))
    }
}

/// Radii of the three mutually tangent vertex circles of a turnover packing.
///
/// `x` sits at the `beta` vertex, `y` at the `gamma` vertex and `z` at the
/// `alpha` vertex, so `x + y = a`, `y + z = b` and `z + x = c`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct PackingRadii {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl PackingRadii {
    /// Radii listed by vertex: `(alpha, beta, gamma)`.
    pub fn by_vertex(&self) -> [f64; 3] {
        [self.z, self.x, self.y]
    }

    /// Largest deviation of the pairwise sums from the triangle's sides.
    pub fn tangency_residual(&self, t: &HypTriangle) -> f64 {
        ((self.x + self.y) - t.a)
            .abs()
            .max(((self.y + self.z) - t.b).abs())
            .max(((self.z + self.x) - t.c).abs())
    }
}

pub fn turnover_radii(t: &HypTriangle) -> Result<PackingRadii, GeomError> {
    if !t.is_compact() {
        return Err(GeomError::IdealVertex);
    }
    check_strict_triangle(t.a, t.b, t.c)?;
    Ok(PackingRadii {
        x: (t.a - t.b + t.c) / 2.0,
        y: (t.a + t.b - t.c) / 2.0,
        z: (-t.a + t.b + t.c) / 2.0,
    })
}

/// Area of a hyperbolic disk: `2 pi (cosh r - 1)`.
pub fn circle_area(r: f64) -> Result<f64, GeomError> {
    if r.is_nan() || r < 0.0 {
        return Err(GeomError::NegativeRadius(r));
    }
    // 2 sinh^2(r/2) avoids cancellation for small r.
    let s = (0.5 * r).sinh();
    Ok(4.0 * PI * s * s)
}

/// Radius of the three mutually tangent congruent circles in the
/// `(pi/p, pi/p, pi/p)` turnover: `cosh r = csc(pi/(2p)) / 2`.
pub fn spp_radius(p: u64) -> Result<f64, GeomError> {
    if p < 4 {
        return Err(GeomError::TooSmallP(p));
    }
    Ok((0.5 / (PI / (2.0 * p as f64)).sin()).acosh())
}

/// What a [`DensityReport`] was computed from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PackingParams {
    /// A cover of the `(p, p, p)` turnover packed by its three cone circles.
    Turnover { p: u64 },
    /// `count` congruent circles on a closed surface of genus `genus`.
    Congruent { count: u64, genus: u64 },
}

/// Packing parameters together with the circle radius; the density is
/// always recomputed from these fields.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DensityReport {
    pub params: PackingParams,
    pub radius: f64,
}

impl DensityReport {
    pub fn density(&self) -> f64 {
        match self.params {
            PackingParams::Turnover { p } => {
                let x = PI / (2.0 * p as f64);
                3.0 / (p as f64 - 3.0) * (0.5 / x.sin() - 1.0)
            }
            PackingParams::Congruent { count, genus } => {
                let cosh_minus_one = 2.0 * (0.5 * self.radius).sinh().powi(2);
                count as f64 / 2.0 * cosh_minus_one / (genus as f64 - 1.0)
            }
        }
    }

    /// `density - 3/pi`.
    pub fn gap_to_limit(&self) -> f64 {
        self.density() - DENSITY_LIMIT
    }

    pub fn p(&self) -> Option<u64> {
        match self.params {
            PackingParams::Turnover { p } => Some(p),
            PackingParams::Congruent { .. } => None,
        }
    }
}

impl Serialize for DensityReport {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Flat {
            #[serde(flatten)]
            params: PackingParams,
            radius: f64,
            density: f64,
            gap_to_limit: f64,
        }
        Flat {
            params: self.params,
            radius: self.radius,
            density: self.density(),
            gap_to_limit: self.gap_to_limit(),
        }
        .serialize(s)
    }
}

/// Density of the three-circle packing of a `(p, p, p)` turnover cover:
/// `3/(p-3) (csc(pi/(2p))/2 - 1)`.
pub fn density_spp(p: u64) -> Result<DensityReport, GeomError> {
    let radius = spp_radius(p)?;
    Ok(DensityReport {
        params: PackingParams::Turnover { p },
        radius,
    })
}

/// Density of `count` congruent radius-`r` circles on a closed genus-`genus`
/// surface: `count/2 (cosh r - 1)/(genus - 1)`.
pub fn density_congruent(count: u64, r: f64, genus: u64) -> Result<DensityReport, GeomError> {
    if genus < 2 {
        return Err(GeomError::BadGenus(genus));
    }
    if r.is_nan() || r <= 0.0 {
        return Err(GeomError::NegativeRadius(r));
    }
    let report = DensityReport {
        params: PackingParams::Congruent { count, genus },
        radius: r,
    };
    let d = report.density();
    // Density 1 is only reached in a degenerate limit, so it is rejected too.
    if d >= 1.0 - DENSITY_SLACK {
        return Err(GeomError::DensityOverflow(d));
    }
    Ok(report)
}

/// `csc(x) - 1/x - x/6`, the remainder after two terms of the Laurent
/// series at 0; it is `7x^3/360 + O(x^5)`.
pub fn csc_laurent_check(x: f64) -> Result<f64, GeomError> {
    if !(x > 0.0 && x <= 0.1) {
        return Err(GeomError::OutOfRange(x));
    }
    Ok(1.0 / x.sin() - 1.0 / x - x / 6.0)
}
