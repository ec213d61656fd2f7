//! SVG figures: a turnover triangle with its three tangent circles in the
//! Poincaré disk, and the ideal triangle with its horoballs in the upper
//! half-plane.
//!
//! A [`Scene`] holds model coordinates; [`Scene::to_svg`] maps them to a
//! fixed `1000 x 1000` canvas. The disk model fills the canvas with a
//! margin of 20. The half-plane window is `[-0.25, 1.25] x [0, 1.5]`.

use num_complex::Complex64;
use svg::node::element::{Circle, ClipPath, Definitions, Group, Path, Rectangle, Text};
use svg::Document;
use thiserror::Error;

use crate::horocycle::{HoroError, HoroballConfig};
use crate::hypgeom::{triangle_for_orders, turnover_radii, GeomError};

pub const CANVAS: f64 = 1000.0;
const DISK_MARGIN: f64 = 20.0;
/// Half-plane window `(x_min, x_max, y_max)`; `y_min` is 0.
pub const HALF_PLANE_WINDOW: (f64, f64, f64) = (-0.25, 1.25, 1.5);

#[derive(Debug, Error, Clone, PartialEq)]
pub enum RenderError {
    #[error(transparent)]
    Geom(#[from] GeomError),
    #[error(transparent)]
    Horo(#[from] HoroError),
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Model {
    PoincareDisk,
    UpperHalfPlane,
}

/// An ideal or finite geodesic endpoint.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Endpoint {
    Point(Complex64),
    /// The point at infinity of the half-plane.
    Infinity,
}

#[derive(Clone, Debug, PartialEq)]
pub enum ElementKind {
    /// The boundary circle of the disk.
    Boundary,
    /// Geodesic segment between two endpoints.
    Geodesic {
        from: Endpoint,
        to: Endpoint,
    },
    /// Hyperbolic circle, with its Euclidean image in the model.
    Circle {
        center: Complex64,
        radius: f64,
        euclid_center: Complex64,
        euclid_radius: f64,
    },
    /// Horoball at a real cusp with Euclidean diameter `size`, or at
    /// infinity with height `size`.
    Horoball {
        cusp: Endpoint,
        size: f64,
    },
    Label {
        at: Complex64,
        text: String,
    },
}

#[derive(Clone, Debug, PartialEq)]
pub struct Style {
    pub stroke: &'static str,
    pub fill: &'static str,
    pub width: f64,
}

impl Style {
    const LINE: Style = Style {
        stroke: "#222222",
        fill: "none",
        width: 2.0,
    };
    const THIN: Style = Style {
        stroke: "#777777",
        fill: "none",
        width: 1.0,
    };
    const DISK: Style = Style {
        stroke: "#222222",
        fill: "#ffffff",
        width: 1.5,
    };
    const SHADE: Style = Style {
        stroke: "#1f4e8c",
        fill: "#c9d9ef",
        width: 1.5,
    };
    const TEXT: Style = Style {
        stroke: "none",
        fill: "#222222",
        width: 0.0,
    };
    const MARK: Style = Style {
        stroke: "none",
        fill: "#b22222",
        width: 0.0,
    };
}

#[derive(Clone, Debug, PartialEq)]
pub struct SceneElement {
    pub id: String,
    pub kind: ElementKind,
    pub style: Style,
}

/// A computed tangency: `point` lies on the boundaries of every element in
/// `on`.
#[derive(Clone, Debug, PartialEq)]
pub struct Tangency {
    pub point: Complex64,
    pub on: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Scene {
    pub model: Model,
    pub elements: Vec<SceneElement>,
    pub tangencies: Vec<Tangency>,
}

impl Scene {
    fn new(model: Model) -> Self {
        Scene {
            model,
            elements: Vec::new(),
            tangencies: Vec::new(),
        }
    }

    fn push(&mut self, id: &str, kind: ElementKind, style: Style) -> usize {
        self.elements.push(SceneElement {
            id: id.to_string(),
            kind,
            style,
        });
        self.elements.len() - 1
    }

    pub fn element(&self, id: &str) -> Option<&SceneElement> {
        self.elements.iter().find(|e| e.id == id)
    }

    /// Largest model-coordinate distance from a tangency point to the
    /// boundary of an element it should lie on.
    pub fn max_tangency_residual(&self) -> f64 {
        self.tangencies
            .iter()
            .flat_map(|t| {
                t.on.iter()
                    .map(move |&i| boundary_distance(self.model, &self.elements[i].kind, t.point))
            })
            .fold(0.0, f64::max)
    }

    /// Model point to canvas pixels.
    pub fn to_canvas(&self, z: Complex64) -> (f64, f64) {
        match self.model {
            Model::PoincareDisk => {
                let s = (CANVAS - 2.0 * DISK_MARGIN) / 2.0;
                (CANVAS / 2.0 + s * z.re, CANVAS / 2.0 - s * z.im)
            }
            Model::UpperHalfPlane => {
                let (x0, _, _) = HALF_PLANE_WINDOW;
                let s = half_plane_scale();
                ((z.re - x0) * s, CANVAS - z.im * s)
            }
        }
    }

    /// Pixels per model unit.
    pub fn scale(&self) -> f64 {
        match self.model {
            Model::PoincareDisk => (CANVAS - 2.0 * DISK_MARGIN) / 2.0,
            Model::UpperHalfPlane => half_plane_scale(),
        }
    }

    pub fn to_svg(&self) -> String {
        let mut doc = Document::new()
            .set("viewBox", "0 0 1000 1000")
            .set("width", "1000")
            .set("height", "1000");
        let mut body = Group::new().set("id", "scene");
        if self.model == Model::UpperHalfPlane {
            let clip = ClipPath::new().set("id", "window").add(
                Rectangle::new()
                    .set("x", "0")
                    .set("y", "0")
                    .set("width", "1000")
                    .set("height", "1000"),
            );
            doc = doc.add(Definitions::new().add(clip));
            body = body.set("clip-path", "url(#window)");
        }
        for e in &self.elements {
            body = self.draw(body, e);
        }
        for (i, t) in self.tangencies.iter().enumerate() {
            let (x, y) = self.to_canvas(t.point);
            let on: Vec<&str> = t.on.iter().map(|&k| self.elements[k].id.as_str()).collect();
            body = body.add(
                Circle::new()
                    .set("id", format!("tangency-{}", i + 1))
                    .set("class", "tangency")
                    .set("data-on", on.join(" "))
                    .set("cx", num(x))
                    .set("cy", num(y))
                    .set("r", "4")
                    .set("fill", Style::MARK.fill),
            );
        }
        format!("{}\n", doc.add(body))
    }

    fn draw(&self, group: Group, e: &SceneElement) -> Group {
        let s = &e.style;
        let styled = |node: Path| {
            node.set("id", e.id.clone())
                .set("stroke", s.stroke)
                .set("fill", s.fill)
                .set("stroke-width", num(s.width))
        };
        match &e.kind {
            ElementKind::Boundary => group.add(
                Circle::new()
                    .set("id", e.id.clone())
                    .set("cx", num(CANVAS / 2.0))
                    .set("cy", num(CANVAS / 2.0))
                    .set("r", num(self.scale()))
                    .set("stroke", s.stroke)
                    .set("fill", s.fill)
                    .set("stroke-width", num(s.width)),
            ),
            ElementKind::Geodesic { from, to } => {
                group.add(styled(Path::new().set("d", self.geodesic_path(*from, *to))))
            }
            ElementKind::Circle {
                euclid_center,
                euclid_radius,
                ..
            } => {
                let (cx, cy) = self.to_canvas(*euclid_center);
                group.add(
                    Circle::new()
                        .set("id", e.id.clone())
                        .set("cx", num(cx))
                        .set("cy", num(cy))
                        .set("r", num(euclid_radius * self.scale()))
                        .set("stroke", s.stroke)
                        .set("fill", s.fill)
                        .set("fill-opacity", "0.6")
                        .set("stroke-width", num(s.width)),
                )
            }
            ElementKind::Horoball {
                cusp: Endpoint::Infinity,
                size,
            } => {
                let (_, top) = self.to_canvas(Complex64::new(0.0, *size));
                group.add(
                    Rectangle::new()
                        .set("id", e.id.clone())
                        .set("x", "0")
                        .set("y", "0")
                        .set("width", num(CANVAS))
                        .set("height", num(top.max(0.0)))
                        .set("stroke", s.stroke)
                        .set("fill", s.fill)
                        .set("fill-opacity", "0.6")
                        .set("stroke-width", num(s.width)),
                )
            }
            ElementKind::Horoball {
                cusp: Endpoint::Point(c),
                size,
            } => {
                let (cx, cy) = self.to_canvas(*c + Complex64::new(0.0, size / 2.0));
                group.add(
                    Circle::new()
                        .set("id", e.id.clone())
                        .set("cx", num(cx))
                        .set("cy", num(cy))
                        .set("r", num(size / 2.0 * self.scale()))
                        .set("stroke", s.stroke)
                        .set("fill", s.fill)
                        .set("fill-opacity", "0.6")
                        .set("stroke-width", num(s.width)),
                )
            }
            ElementKind::Label { at, text } => {
                let (x, y) = self.to_canvas(*at);
                group.add(
                    Text::new(text.clone())
                        .set("id", e.id.clone())
                        .set("x", num(x))
                        .set("y", num(y))
                        .set("font-family", "serif")
                        .set("font-size", "28")
                        .set("fill", s.fill),
                )
            }
        }
    }

    fn geodesic_path(&self, from: Endpoint, to: Endpoint) -> String {
        let top = Complex64::new(0.0, HALF_PLANE_WINDOW.2 * 1.1);
        let (p, q) = match (from, to) {
            (Endpoint::Point(p), Endpoint::Point(q)) => (p, q),
            (Endpoint::Point(p), Endpoint::Infinity) => (p, Complex64::new(p.re, top.im)),
            (Endpoint::Infinity, Endpoint::Point(q)) => (Complex64::new(q.re, top.im), q),
            (Endpoint::Infinity, Endpoint::Infinity) => return String::new(),
        };
        let (px, py) = self.to_canvas(p);
        let (qx, qy) = self.to_canvas(q);
        match geodesic_circle(self.model, from, to) {
            None => format!("M {} {} L {} {}", num(px), num(py), num(qx), num(qy)),
            Some((o, r)) => {
                let cross = (p - o).re * (q - o).im - (p - o).im * (q - o).re;
                // The canvas flips y, so a clockwise turn in the model is a
                // positive-angle (sweep 1) arc in SVG coordinates. A half
                // circle only occurs in the half-plane and runs above `o`.
                let clockwise = if cross.abs() > 1e-12 * r * r {
                    cross < 0.0
                } else {
                    p.re < q.re
                };
                let sweep = u8::from(clockwise);
                let rr = num(r * self.scale());
                format!(
                    "M {} {} A {rr} {rr} 0 0 {sweep} {} {}",
                    num(px),
                    num(py),
                    num(qx),
                    num(qy)
                )
            }
        }
    }
}

fn half_plane_scale() -> f64 {
    let (x0, x1, y1) = HALF_PLANE_WINDOW;
    debug_assert!(((x1 - x0) - y1).abs() < 1e-12);
    CANVAS / y1
}

/// Fixed six-decimal formatting; negative zero prints as zero.
fn num(v: f64) -> String {
    let s = format!("{v:.6}");
    if s.trim_start_matches('-').bytes().all(|b| b == b'0' || b == b'.') {
        "0.000000".to_string()
    } else {
        s
    }
}

/// Euclidean circle `(center, radius)` carrying the geodesic, or `None`
/// for a straight line.
fn geodesic_circle(model: Model, from: Endpoint, to: Endpoint) -> Option<(Complex64, f64)> {
    match (model, from, to) {
        (Model::PoincareDisk, Endpoint::Point(p), Endpoint::Point(q)) => {
            // Straight when p, q and the origin are collinear.
            if (p.re * q.im - p.im * q.re).abs() < 1e-15 {
                return None;
            }
            // Orthogonal to the unit circle: 2 Re(o conj(z)) = |z|^2 + 1.
            let (a1, b1, c1) = (2.0 * p.re, 2.0 * p.im, p.norm_sqr() + 1.0);
            let (a2, b2, c2) = (2.0 * q.re, 2.0 * q.im, q.norm_sqr() + 1.0);
            let det = a1 * b2 - a2 * b1;
            let o = Complex64::new((c1 * b2 - c2 * b1) / det, (a1 * c2 - a2 * c1) / det);
            Some((o, (o.norm_sqr() - 1.0).sqrt()))
        }
        (Model::UpperHalfPlane, Endpoint::Point(p), Endpoint::Point(q)) => {
            if (p.re - q.re).abs() < 1e-15 {
                return None;
            }
            // Center on the real axis, equidistant from p and q.
            let x = (q.norm_sqr() - p.norm_sqr()) / (2.0 * (q.re - p.re));
            let o = Complex64::new(x, 0.0);
            Some((o, (p - o).norm()))
        }
        _ => None,
    }
}

fn boundary_distance(model: Model, kind: &ElementKind, z: Complex64) -> f64 {
    match kind {
        ElementKind::Boundary => (z.norm() - 1.0).abs(),
        ElementKind::Circle {
            euclid_center,
            euclid_radius,
            ..
        } => ((z - euclid_center).norm() - euclid_radius).abs(),
        ElementKind::Horoball {
            cusp: Endpoint::Infinity,
            size,
        } => (z.im - size).abs(),
        ElementKind::Horoball {
            cusp: Endpoint::Point(c),
            size,
        } => ((z - (c + Complex64::new(0.0, size / 2.0))).norm() - size / 2.0).abs(),
        ElementKind::Geodesic { from, to } => match (from, to, geodesic_circle(model, *from, *to)) {
            (_, _, Some((o, r))) => ((z - o).norm() - r).abs(),
            (Endpoint::Point(p), Endpoint::Point(q), None) => {
                let d = q - p;
                ((z - p).re * d.im - (z - p).im * d.re).abs() / d.norm()
            }
            (Endpoint::Point(p), Endpoint::Infinity, None) | (Endpoint::Infinity, Endpoint::Point(p), None) => {
                (z.re - p.re).abs()
            }
            _ => f64::INFINITY,
        },
        ElementKind::Label { .. } => f64::INFINITY,
    }
}

/// Point at hyperbolic distance `s` from the origin of the disk, in
/// direction `angle`.
fn disk_point(s: f64, angle: f64) -> Complex64 {
    Complex64::from_polar((s / 2.0).tanh(), angle)
}

/// Euclidean center and radius of the hyperbolic circle of radius `rho`
/// about the disk point at distance `s` in direction `angle`.
fn disk_circle(s: f64, angle: f64, rho: f64) -> (Complex64, f64) {
    let near = ((s - rho) / 2.0).tanh();
    let far = ((s + rho) / 2.0).tanh();
    (Complex64::from_polar((near + far) / 2.0, angle), (far - near) / 2.0)
}

/// Disk isometry sending `b` to the origin.
fn mobius_to_origin(b: Complex64, z: Complex64) -> Complex64 {
    (z - b) / (Complex64::new(1.0, 0.0) - b.conj() * z)
}

fn mobius_from_origin(b: Complex64, z: Complex64) -> Complex64 {
    (z + b) / (Complex64::new(1.0, 0.0) + b.conj() * z)
}

/// The `(pi/p, pi/q, pi/r)` triangle in the disk with the `pi/p` vertex at
/// the origin and the side `c` along the positive real axis, with its three
/// tangent vertex circles.
pub fn turnover_scene(p: u32, q: u32, r: u32) -> Result<Scene, RenderError> {
    let t = triangle_for_orders(p, q, r)?;
    let radii = turnover_radii(&t)?;
    let [za, xb, yc] = radii.by_vertex();
    let a = Complex64::new(0.0, 0.0);
    let b = disk_point(t.c, 0.0);
    let c = disk_point(t.b, t.alpha);

    let mut scene = Scene::new(Model::PoincareDisk);
    scene.push("boundary", ElementKind::Boundary, Style::DISK);
    let circle = |scene: &mut Scene, id: &str, center: Complex64, s: f64, angle: f64, rho: f64| {
        let (euclid_center, euclid_radius) = disk_circle(s, angle, rho);
        scene.push(
            id,
            ElementKind::Circle {
                center,
                radius: rho,
                euclid_center,
                euclid_radius,
            },
            Style::SHADE,
        )
    };
    let ca = circle(&mut scene, "circle-alpha", a, 0.0, 0.0, za);
    let cb = circle(&mut scene, "circle-beta", b, t.c, 0.0, xb);
    let cc = circle(&mut scene, "circle-gamma", c, t.b, t.alpha, yc);
    let ab = scene.push(
        "side-c",
        ElementKind::Geodesic {
            from: Endpoint::Point(a),
            to: Endpoint::Point(b),
        },
        Style::LINE,
    );
    let ac = scene.push(
        "side-b",
        ElementKind::Geodesic {
            from: Endpoint::Point(a),
            to: Endpoint::Point(c),
        },
        Style::LINE,
    );
    let bc = scene.push(
        "side-a",
        ElementKind::Geodesic {
            from: Endpoint::Point(b),
            to: Endpoint::Point(c),
        },
        Style::LINE,
    );

    // Tangency on side c at distance z from A, on side b likewise, and on
    // side a at distance x from B.
    let on_c = disk_point(za, 0.0);
    let on_b = disk_point(za, t.alpha);
    let c_from_b = mobius_to_origin(b, c);
    let on_a = mobius_from_origin(b, Complex64::from_polar((xb / 2.0).tanh(), c_from_b.arg()));
    scene.tangencies.push(Tangency {
        point: on_c,
        on: vec![ca, cb, ab],
    });
    scene.tangencies.push(Tangency {
        point: on_b,
        on: vec![ca, cc, ac],
    });
    scene.tangencies.push(Tangency {
        point: on_a,
        on: vec![cb, cc, bc],
    });

    let label = |z: Complex64, dz: Complex64| z + dz;
    scene.push(
        "label",
        ElementKind::Label {
            at: Complex64::new(-0.95, -0.95),
            text: format!("S({p},{q},{r})"),
        },
        Style::TEXT,
    );
    scene.push(
        "label-alpha",
        ElementKind::Label {
            at: label(a, Complex64::new(-0.06, -0.05)),
            text: format!("π/{p}"),
        },
        Style::TEXT,
    );
    scene.push(
        "label-beta",
        ElementKind::Label {
            at: label(b, Complex64::new(0.02, -0.05)),
            text: format!("π/{q}"),
        },
        Style::TEXT,
    );
    scene.push(
        "label-gamma",
        ElementKind::Label {
            at: label(c, Complex64::new(0.02, 0.03)),
            text: format!("π/{r}"),
        },
        Style::TEXT,
    );
    Ok(scene)
}

pub fn render_turnover(p: u32, q: u32, r: u32) -> Result<String, RenderError> {
    Ok(turnover_scene(p, q, r)?.to_svg())
}

/// The ideal triangle `(0, 1, inf)` with the horoballs of `cfg`. The
/// maximal configuration also gets the three perpendiculars from the
/// center `(1 + i sqrt 3)/2` to the tangency points.
pub fn ideal_horoball_scene(cfg: &HoroballConfig) -> Result<Scene, RenderError> {
    let cfg = HoroballConfig::new(cfg.t_inf, cfg.d0, cfg.d1)?;
    let mut scene = Scene::new(Model::UpperHalfPlane);
    let zero = Endpoint::Point(Complex64::new(0.0, 0.0));
    let one = Endpoint::Point(Complex64::new(1.0, 0.0));
    let h_inf = scene.push(
        "horoball-inf",
        ElementKind::Horoball {
            cusp: Endpoint::Infinity,
            size: cfg.t_inf,
        },
        Style::SHADE,
    );
    let h0 = scene.push(
        "horoball-0",
        ElementKind::Horoball {
            cusp: zero,
            size: cfg.d0,
        },
        Style::SHADE,
    );
    let h1 = scene.push(
        "horoball-1",
        ElementKind::Horoball {
            cusp: one,
            size: cfg.d1,
        },
        Style::SHADE,
    );
    let s0 = scene.push(
        "side-0-inf",
        ElementKind::Geodesic {
            from: zero,
            to: Endpoint::Infinity,
        },
        Style::LINE,
    );
    let s1 = scene.push(
        "side-1-inf",
        ElementKind::Geodesic {
            from: one,
            to: Endpoint::Infinity,
        },
        Style::LINE,
    );
    let s01 = scene.push("side-0-1", ElementKind::Geodesic { from: zero, to: one }, Style::LINE);
    scene.push(
        "axis",
        ElementKind::Geodesic {
            from: Endpoint::Point(Complex64::new(HALF_PLANE_WINDOW.0, 0.0)),
            to: Endpoint::Point(Complex64::new(HALF_PLANE_WINDOW.1, 0.0)),
        },
        Style::THIN,
    );

    let pts = cfg.tangency_points();
    let pairs = [(h_inf, h0, s0), (h_inf, h1, s1), (h0, h1, s01)];
    for (pt, (i, j, side)) in pts.iter().zip(pairs) {
        if let Some((x, y)) = pt {
            scene.tangencies.push(Tangency {
                point: Complex64::new(*x, *y),
                on: vec![i, j, side],
            });
        }
    }

    if cfg.is_maximal() {
        let center = Complex64::new(0.5, 3f64.sqrt() / 2.0);
        let feet = [
            Complex64::new(0.0, 1.0),
            Complex64::new(1.0, 1.0),
            Complex64::new(0.5, 0.5),
        ];
        for (k, foot) in feet.into_iter().enumerate() {
            scene.push(
                &format!("perpendicular-{}", k + 1),
                ElementKind::Geodesic {
                    from: Endpoint::Point(center),
                    to: Endpoint::Point(foot),
                },
                Style::THIN,
            );
        }
        scene.push(
            "label-center",
            ElementKind::Label {
                at: center + Complex64::new(0.02, 0.02),
                text: "O".into(),
            },
            Style::TEXT,
        );
    }
    scene.push(
        "label",
        ElementKind::Label {
            at: Complex64::new(-0.22, 0.05),
            text: format!("density {:.6}", crate::horocycle::ideal_density(&cfg)?),
        },
        Style::TEXT,
    );
    Ok(scene)
}

pub fn render_ideal_horoballs(cfg: &HoroballConfig) -> Result<String, RenderError> {
    Ok(ideal_horoball_scene(cfg)?.to_svg())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn turnover_tangencies_hold() {
        for (p, q, r) in [(2, 6, 9), (2, 3, 7), (4, 4, 4), (3, 7, 50)] {
            let scene = turnover_scene(p, q, r).unwrap();
            assert_eq!(scene.tangencies.len(), 3);
            assert!(
                scene.max_tangency_residual() < 1e-12,
                "{p},{q},{r}: {}",
                scene.max_tangency_residual()
            );
        }
        assert!(matches!(
            render_turnover(3, 3, 3),
            Err(RenderError::Geom(GeomError::NonHyperbolic(_)))
        ));
    }

    #[test]
    fn disk_circle_matches_hyperbolic_distance() {
        // Both ends of the diameter through the center sit at distance rho.
        let (s, rho) = (1.3, 0.4);
        let (c, r) = disk_circle(s, 0.7, rho);
        let d = |z: Complex64| 2.0 * z.norm().atanh();
        let dir = Complex64::from_polar(1.0, 0.7);
        assert!((d(c + dir * r) - (s + rho)).abs() < 1e-12);
        assert!((d(c - dir * r) - (s - rho)).abs() < 1e-12);
    }

    #[test]
    fn horoball_scene() {
        let scene = ideal_horoball_scene(&HoroballConfig::maximal()).unwrap();
        assert_eq!(scene.tangencies.len(), 3);
        assert!(scene.max_tangency_residual() < 1e-12);
        assert!(scene.element("perpendicular-3").is_some());
        // Perpendiculars pass through the center.
        let center = Complex64::new(0.5, 3f64.sqrt() / 2.0);
        for k in 1..=3 {
            let e = scene.element(&format!("perpendicular-{k}")).unwrap();
            assert!(boundary_distance(scene.model, &e.kind, center) < 1e-12);
        }
        let other = HoroballConfig::new(1.2, 0.8, 0.5).unwrap();
        let scene = ideal_horoball_scene(&other).unwrap();
        assert!(scene.element("perpendicular-1").is_none());
        assert!(scene.tangencies.is_empty());
        let bad = HoroballConfig {
            t_inf: 1.0,
            d0: 2.0,
            d1: 0.1,
        };
        assert!(matches!(
            render_ideal_horoballs(&bad),
            Err(RenderError::Horo(HoroError::Overlapping(_)))
        ));
    }

    #[test]
    fn output_is_deterministic() {
        assert_eq!(render_turnover(2, 6, 9).unwrap(), render_turnover(2, 6, 9).unwrap());
        let m = HoroballConfig::maximal();
        assert_eq!(render_ideal_horoballs(&m).unwrap(), render_ideal_horoballs(&m).unwrap());
        assert_eq!(num(-0.0), "0.000000");
        assert_eq!(num(-1e-9), "0.000000");
        assert_eq!(num(-0.5), "-0.500000");
    }
}
