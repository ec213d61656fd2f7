//! Horoballs in the ideal triangle with vertices `0, 1, inf` of the upper
//! half-plane, and congruent horocycle packings of modular-group covers.
//!
//! A horoball at `inf` is `{y >= t}`; a horoball at a real cusp is a disk
//! tangent to the real axis there, described by its Euclidean diameter.

use std::f64::consts::PI;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;
use thiserror::Error;

use crate::fpgroup::{GroupPresentation, RecordJson, SubgroupRecord};
use crate::fuchsian::{rh_genus_cusped, Certificate, FuchsianError, OrbifoldSignature};
use crate::quad;

/// Slack allowed in tangency equalities.
pub const TANGENCY_SLACK: f64 = 1e-12;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum HoroError {
    #[error("horoball parameters must be positive and finite, got {0}")]
    BadParameter(f64),
    #[error("horoballs overlap: {0}")]
    Overlapping(String),
    #[error("grid step {0} outside (0, 0.01]")]
    BadStep(f64),
    #[error("record does not act on the modular presentation <b, c | b^2, c^3>")]
    NotModular,
    #[error("subgroup has torsion: {0} has a fixed point")]
    NotTorsionFree(&'static str),
    #[error(transparent)]
    Fuchsian(#[from] FuchsianError),
}

/// Three horoballs at the vertices of the standard ideal triangle.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct HoroballConfig {
    /// Height of the horoball at `inf`.
    pub t_inf: f64,
    /// Diameter of the horoball at 0.
    pub d0: f64,
    /// Diameter of the horoball at 1.
    pub d1: f64,
}

impl HoroballConfig {
    /// Checks that the three horoballs have disjoint interiors: a horoball of
    /// diameter `d` at a real cusp stays below height `d`, and two at
    /// distance 1 are disjoint iff `d0 * d1 <= 1`.
    pub fn new(t_inf: f64, d0: f64, d1: f64) -> Result<Self, HoroError> {
        for v in [t_inf, d0, d1] {
            if !(v.is_finite() && v > 0.0) {
                return Err(HoroError::BadParameter(v));
            }
        }
        let tol = |x: f64| x * (1.0 + TANGENCY_SLACK);
        if d0 > tol(t_inf) {
            return Err(HoroError::Overlapping(format!(
                "cusps inf and 0: d0 = {d0} > t = {t_inf}"
            )));
        }
        if d1 > tol(t_inf) {
            return Err(HoroError::Overlapping(format!(
                "cusps inf and 1: d1 = {d1} > t = {t_inf}"
            )));
        }
        if d0 * d1 > tol(1.0) {
            return Err(HoroError::Overlapping(format!(
                "cusps 0 and 1: d0 * d1 = {} > 1",
                d0 * d1
            )));
        }
        Ok(HoroballConfig { t_inf, d0, d1 })
    }

    /// Three pairwise tangent congruent horoballs.
    pub fn maximal() -> Self {
        HoroballConfig {
            t_inf: 1.0,
            d0: 1.0,
            d1: 1.0,
        }
    }

    /// Heights after sending each cusp to `inf` by an isometry fixing the
    /// triangle: `(t, 1/d0, 1/d1)`.
    pub fn normalized_heights(&self) -> [f64; 3] {
        [self.t_inf, 1.0 / self.d0, 1.0 / self.d1]
    }

    /// Whether every pair of horoballs is tangent.
    pub fn is_maximal(&self) -> bool {
        let close = |a: f64, b: f64| (a - b).abs() <= 1e-9 * b.max(1.0);
        close(self.d0, self.t_inf) && close(self.d1, self.t_inf) && close(self.d0 * self.d1, 1.0)
    }

    /// Whether some horoball reaches past the side opposite its cusp.
    pub fn crosses_opposite_side(&self) -> bool {
        self.normalized_heights().iter().any(|&h| h < 0.5)
    }

    /// Tangency points of the pairs `(inf, 0)`, `(inf, 1)` and `(0, 1)`,
    /// where tangent, as `(x, y)` half-plane points.
    pub fn tangency_points(&self) -> [Option<(f64, f64)>; 3] {
        let tangent = |a: f64, b: f64| (a - b).abs() <= 1e-9 * b.max(1.0);
        let p_inf0 = tangent(self.d0, self.t_inf).then_some((0.0, self.t_inf));
        let p_inf1 = tangent(self.d1, self.t_inf).then_some((1.0, self.t_inf));
        // Tangent disks of diameters d0, d1 touch at the point dividing the
        // centers in ratio d0 : d1.
        let p01 = tangent(self.d0 * self.d1, 1.0).then(|| {
            let s = self.d0 / (self.d0 + self.d1);
            (s, self.d0 / 2.0 + s * (self.d1 - self.d0) / 2.0)
        });
        [p_inf0, p_inf1, p01]
    }
}

/// Area of `{y >= t}` inside the standard ideal triangle.
///
/// For `t >= 1/2` this is `1/t`. Lower horoballs cross the side from 0 to 1
/// between `x1` and `x2`, where that side has height `sqrt(x (1 - x))`.
pub fn cusp_area_at_height(t: f64) -> f64 {
    if t >= 0.5 {
        return 1.0 / t;
    }
    let w = (1.0 - 4.0 * t * t).sqrt();
    let (x1, x2) = ((1.0 - w) / 2.0, (1.0 + w) / 2.0);
    (1.0 - w) / t + (2.0 * x2 - 1.0).asin() - (2.0 * x1 - 1.0).asin()
}

/// Area of each horoball inside the triangle: `(inf, 0, 1)`.
///
/// The cusps at 0 and 1 are moved to `inf` by `z -> -1/z` and
/// `z -> -1/(z - 1)`, which preserve the triangle and send a horoball of
/// diameter `d` to height `1/d`.
pub fn horoball_triangle_area(cfg: &HoroballConfig) -> Result<(f64, f64, f64), HoroError> {
    let cfg = HoroballConfig::new(cfg.t_inf, cfg.d0, cfg.d1)?;
    let [h_inf, h0, h1] = cfg.normalized_heights();
    Ok((
        cusp_area_at_height(h_inf),
        cusp_area_at_height(h0),
        cusp_area_at_height(h1),
    ))
}

/// Share of the triangle's area `pi` covered by the three horoballs.
///
/// At most `3/pi` when no horoball crosses its opposite side; the bound is
/// attained by the maximal configuration and also by heights `(1/2, 2, 2)`
/// up to symmetry.
pub fn ideal_density(cfg: &HoroballConfig) -> Result<f64, HoroError> {
    let (a, b, c) = horoball_triangle_area(cfg)?;
    Ok((a + b + c) / PI)
}

/// Area of the standard ideal triangle by quadrature, folded about
/// `x = 1/2` so both singular ends sit at the left endpoint.
pub fn ideal_triangle_area_quadrature(tol: f64) -> f64 {
    let f = |x: f64| 2.0 / (x * (1.0 - x)).sqrt();
    quad::integrate(f, 0.0, 0.5, tol)
}

/// Height of the side from 0 to 1 above `x`.
fn side_height(x: f64) -> f64 {
    (x * (1.0 - x)).max(0.0).sqrt()
}

/// Area of `{y >= t}` inside the triangle by quadrature of
/// `1 / max(t, side_height(x))`.
pub fn cusp_area_at_height_quadrature(t: f64, tol: f64) -> f64 {
    let f = |x: f64| 1.0 / t.max(side_height(x));
    let breaks: Vec<f64> = if t < 0.5 {
        let w = (1.0 - 4.0 * t * t).sqrt();
        vec![(1.0 - w) / 2.0, 0.5, (1.0 + w) / 2.0]
    } else {
        vec![0.5]
    };
    // Fold about 1/2; the integrand is symmetric.
    2.0 * quad::integrate_pieces(f, 0.0, 0.5, &breaks, tol)
}

/// Area of the horoball of diameter `d` at cusp 0 inside the triangle, by
/// quadrature in the original coordinates.
///
/// Over each `x` the horoball spans `[yb, yt]` with `yb, yt = d/2 -+
/// sqrt(d^2/4 - x^2)`, and the triangle requires `y >= side_height(x)`.
pub fn cusp_zero_area_quadrature(d: f64, tol: f64) -> f64 {
    let f = |x: f64| {
        let disc = (d * d / 4.0 - x * x).max(0.0).sqrt();
        let (yb, yt) = (d / 2.0 - disc, d / 2.0 + disc);
        let lo = yb.max(side_height(x));
        if lo < yt {
            1.0 / lo - 1.0 / yt
        } else {
            0.0
        }
    };
    let end = (d / 2.0).min(1.0);
    // The boundary circle meets the side where x = d^2 / (1 + d^2).
    let kink = d * d / (1.0 + d * d);
    quad::integrate_pieces(f, 0.0, end, &[kink], tol)
}

/// Grid search around the maximal configuration: every valid
/// `(t, d0, d1)` within `5 * step` of `(1, 1, 1)` has density at most
/// `3/pi + 1e-9`. A numerical check, not a proof.
pub fn maximal_config_is_local_max(step: f64) -> Result<bool, HoroError> {
    Ok(local_max_search(step)?.0)
}

/// As [`maximal_config_is_local_max`], also returning the densest grid
/// configuration and the number of valid grid points.
pub fn local_max_search(step: f64) -> Result<(bool, HoroballConfig, f64, usize), HoroError> {
    if !(step > 0.0 && step <= 0.01) {
        return Err(HoroError::BadStep(step));
    }
    let limit = 3.0 / PI + 1e-9;
    let mut best = (HoroballConfig::maximal(), ideal_density(&HoroballConfig::maximal())?);
    let mut valid = 0;
    for i in -5..=5 {
        for j in -5..=5 {
            for k in -5..=5 {
                let off = |n: i32| 1.0 + n as f64 * step;
                let Ok(cfg) = HoroballConfig::new(off(i), off(j), off(k)) else {
                    continue;
                };
                valid += 1;
                let d = ideal_density(&cfg)?;
                if d > best.1 {
                    best = (cfg, d);
                }
            }
        }
    }
    Ok((best.1 <= limit, best.0, best.1, valid))
}

/// Horocycle packing data of a torsion-free finite-index subgroup of the
/// modular group.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CuspedSurfaceReport {
    pub signature: OrbifoldSignature,
    pub index: u64,
    pub genus: u64,
    pub cusps: u64,
    /// `n pi / 3`.
    pub area: f64,
    pub density: f64,
    pub deck_order: u64,
    pub class_length: u64,
    /// Ideal triangles in the induced triangulation: `n / 3`.
    pub faces: u64,
    /// Edges of the triangulation, one per tangency point: `n / 2`.
    pub edges: u64,
    pub certificate: Certificate,
    pub action: RecordJson,
}

impl CuspedSurfaceReport {
    /// `V - E + F` of the triangulation by the packing graph.
    pub fn euler_characteristic(&self) -> i64 {
        self.cusps as i64 - self.edges as i64 + self.faces as i64
    }
}

/// The parabolic word `a = c^-1 b^-1` from `<a, b, c | abc, b^2, c^3>`.
pub fn parabolic_word(presentation: &GroupPresentation) -> crate::fpgroup::Word {
    presentation.parse_word("c^-1 b^-1").expect("modular generators")
}

/// Packs the cover `H / K` for the subgroup `K` of the modular group given
/// by `record` with congruent horocycles: lifting the maximal
/// configuration of each ideal triangle gives density exactly `3/pi`.
///
/// Cusps are the cycles of the parabolic `c^-1 b^-1`, and
/// `2 - 2g - cusps = -n/6`.
pub fn modular_cover_report(record: &SubgroupRecord) -> Result<CuspedSurfaceReport, HoroError> {
    let presentation = GroupPresentation::modular();
    if record.perms().len() != 2 {
        return Err(HoroError::NotModular);
    }
    let (b, c) = (record.generator(0), record.generator(1));
    if b.pow(2).is_identity() && c.pow(3).is_identity() {
        if b.fixed_points() > 0 {
            return Err(HoroError::NotTorsionFree("b"));
        }
        if c.fixed_points() > 0 {
            return Err(HoroError::NotTorsionFree("c"));
        }
    } else {
        return Err(HoroError::NotModular);
    }
    let n = record.index() as u64;
    let parabolic = record
        .eval(&parabolic_word(&presentation))
        .map_err(FuchsianError::from)?;
    let cusps = parabolic.cycle_count() as u64;
    let sig = OrbifoldSignature::modular();
    let inv = rh_genus_cusped(&sig, n, cusps)?;
    // Exact check of the Euler relation.
    let chi = BigRational::from_integer(BigInt::from(2 - 2 * inv.genus as i64 - cusps as i64));
    debug_assert!((chi + BigRational::new(BigInt::from(n), BigInt::from(6))).is_zero());
    let faces = n / 3;
    let area = n as f64 * PI / 3.0;
    let horoball_area = faces as f64 * PI * ideal_density(&HoroballConfig::maximal())?;
    let deck = record.deck_group_order() as u64;
    Ok(CuspedSurfaceReport {
        signature: sig,
        index: n,
        genus: inv.genus,
        cusps,
        area,
        density: horoball_area / area,
        deck_order: deck,
        class_length: n / deck,
        faces,
        edges: n / 2,
        certificate: Certificate::ModularSubgroup,
        action: record.to_json(),
    })
}
