//! Tanh–sinh (double-exponential) quadrature.
//!
//! Handles integrable endpoint singularities such as `1/sqrt(x)`. Nodes near
//! `a` are exact while nodes near `b` round onto `b`, so a singularity is
//! best placed at the left endpoint. Interior kinks should be passed as
//! breakpoints.

/// Integrates `f` over `[a, b]`, refining until successive levels agree to
/// `tol` (absolute) or the level cap is reached.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64) -> f64 {
    if a == b {
        return 0.0;
    }
    if a > b {
        return -integrate(f, b, a, tol);
    }
    let half = 0.5 * (b - a);
    let mid = 0.5 * (a + b);
    let pi_2 = std::f64::consts::FRAC_PI_2;
    // Nodes past |t| = 4 sit closer to the endpoints than f64 can resolve.
    let t_max = 4.0;
    let mut h = 1.0;
    let mut prev = f64::NAN;
    let mut sum = 0.0;
    let mut first = true;
    for level in 0..12 {
        // Level 0 uses every node at spacing h; later levels add odd nodes only.
        let step = if first { 1 } else { 2 };
        let start = if first { 0 } else { 1 };
        let mut k = start;
        let mut added = 0.0;
        loop {
            let t = k as f64 * h;
            if t > t_max {
                break;
            }
            let u = pi_2 * t.sinh();
            let w = pi_2 * t.cosh() / u.cosh().powi(2);
            // 1 - tanh(u), computed without cancellation.
            let gap = 2.0 / ((2.0 * u).exp() + 1.0);
            let term = if k == 0 {
                w * f(mid)
            } else {
                w * (finite_or_zero(f(b - half * gap)) + finite_or_zero(f(a + half * gap)))
            };
            added += term;
            k += step;
        }
        sum = if first { added } else { sum + added };
        let estimate = sum * h * half;
        if !first && (estimate - prev).abs() <= tol && level >= 3 {
            return estimate;
        }
        prev = estimate;
        first = false;
        h *= 0.5;
    }
    prev
}

fn finite_or_zero(v: f64) -> f64 {
    if v.is_finite() {
        v
    } else {
        0.0
    }
}

/// Integrates across `[a, b]` split at `breaks`.
pub fn integrate_pieces<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, breaks: &[f64], tol: f64) -> f64 {
    let mut pts = vec![a];
    pts.extend(breaks.iter().copied().filter(|&x| x > a && x < b));
    pts.push(b);
    pts.sort_by(f64::total_cmp);
    pts.windows(2)
        .map(|w| integrate(&f, w[0], w[1], tol / pts.len() as f64))
        .sum()
}
