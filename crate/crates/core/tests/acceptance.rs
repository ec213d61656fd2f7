//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Run with `cargo test -p hyperpack --test acceptance -- --nocapture`.

mod common;

use std::f64::consts::PI;
use std::time::Instant;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use hyperpack::fpgroup::{
    kernel_record, low_index_search, verify_quotient_map, FiniteQuotientMap, GroupPresentation, LowIndexOptions, Perm,
};
use hyperpack::fuchsian::{
    hurwitz_check, min_tau_non_triangle, recognize_planar, rh_genus, survey, OrbifoldSignature, SurveyOptions,
};
use hyperpack::horocycle::{
    cusp_area_at_height, cusp_area_at_height_quadrature, cusp_zero_area_quadrature, horoball_triangle_area,
    ideal_density, ideal_triangle_area_quadrature, local_max_search, HoroballConfig,
};
use hyperpack::hypgeom::{density_spp, triangle_for_orders, turnover_radii};
use hyperpack::render::{ideal_horoball_scene, render_ideal_horoballs, render_turnover, turnover_scene};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn survey_reproduction() -> Outcome {
    let sig: OrbifoldSignature = "0;2,6,9".parse().map_err(|e| format!("{e}"))?;
    let s = survey(&sig, 18, &SurveyOptions::default()).map_err(|e| e.to_string())?;
    ensure(s.total() == 335, || format!("{} classes, expected 335", s.total()))?;
    ensure(s.asymmetric() == 254, || {
        format!("{} asymmetric, expected 254", s.asymmetric())
    })?;
    let bad = s.entries.iter().filter(|e| e.invariants.genus != 3).count();
    ensure(bad == 0, || format!("{bad} classes not of genus 3"))?;
    Ok(format!("{}; all genus 3; {} search nodes", s.summary(), s.nodes))
}

fn s4_cover() -> Outcome {
    let p = GroupPresentation::parse("<a, b, c, d | a^2, b^2, c^2, d^3, a b c d^-1>").map_err(|e| e.to_string())?;
    let images = ["(2,3)", "(1,2)(3,4)", "(3,4)", "(1,2,3)"]
        .iter()
        .map(|c| Perm::parse_cycles(4, c))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| e.to_string())?;
    let map = FiniteQuotientMap::new(images).map_err(|e| e.to_string())?;
    let map = verify_quotient_map(&p, &map, 24).map_err(|e| e.to_string())?;
    let kernel = kernel_record(&map).map_err(|e| e.to_string())?;
    ensure(kernel.index() == 24, || format!("kernel index {}", kernel.index()))?;
    ensure(kernel.is_torsion_free(&p) == Ok(true), || "kernel has torsion".into())?;
    let (sig, _) = recognize_planar(&p).ok_or("presentation not recognized as planar")?;
    let genus = rh_genus(&sig, 24).map_err(|e| e.to_string())?.genus;
    ensure(genus == 3, || format!("genus {genus}"))?;
    let deck = kernel.deck_group_order();
    ensure(deck == 24, || format!("deck order {deck}"))?;
    ensure(kernel.class_length() == 1, || {
        format!("class length {}", kernel.class_length())
    })?;
    ensure(hurwitz_check(genus, deck as u64) == Ok(true), || {
        "Hurwitz check failed".into()
    })?;
    Ok(format!(
        "({sig}) index 24, torsion-free, genus 3, deck 24, class length 1, 24 <= 168"
    ))
}

fn density_limit() -> Outcome {
    let limit = 3.0 / PI;
    let mut ps: Vec<u64> = (0..40)
        .map(|i| (4f64.ln() + (1e6f64.ln() - 4f64.ln()) * i as f64 / 39.0).exp().round() as u64)
        .collect();
    ps.dedup();
    let mut prev = f64::NEG_INFINITY;
    for &p in &ps {
        let d = density_spp(p).map_err(|e| e.to_string())?.density();
        ensure(d > prev, || format!("not increasing at p = {p}: {d} <= {prev}"))?;
        ensure(d < limit, || format!("density {d} at p = {p} not below 3/pi"))?;
        if p >= 100 {
            ensure((d - limit).abs() <= 2.0 / p as f64, || {
                format!("gap {} at p = {p} exceeds 2/p", limit - d)
            })?;
        }
        prev = d;
    }
    let top = density_spp(1_000_000).map_err(|e| e.to_string())?.density();
    ensure((top - 0.954929658551).abs() < 5e-6, || {
        format!("density {top} at p = 10^6")
    })?;
    Ok(format!(
        "{} samples increasing below 3/pi; density(10^6) = {top:.12}",
        ps.len()
    ))
}

fn turnover_tangency() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x7a11);
    let mut worst: f64 = 0.0;
    let mut done = 0;
    while done < 1000 {
        let (p, q, r) = (
            rng.gen_range(2..=50u32),
            rng.gen_range(2..=50u32),
            rng.gen_range(2..=50u32),
        );
        if 1.0 / p as f64 + 1.0 / q as f64 + 1.0 / r as f64 >= 1.0 {
            continue;
        }
        let t = triangle_for_orders(p, q, r).map_err(|e| format!("({p},{q},{r}): {e}"))?;
        let radii = turnover_radii(&t).map_err(|e| format!("({p},{q},{r}): {e}"))?;
        ensure(radii.by_vertex().iter().all(|&x| x > 0.0), || {
            format!("({p},{q},{r}): {radii:?}")
        })?;
        let res = radii.tangency_residual(&t);
        ensure(res <= 1e-12, || format!("({p},{q},{r}): residual {res:e}"))?;
        worst = worst.max(res);
        done += 1;
    }
    Ok(format!("1000 triples, worst residual {worst:.1e}"))
}

fn tau_threshold() -> Outcome {
    let m = min_tau_non_triangle();
    let names: Vec<String> = m.attained_by.iter().map(ToString::to_string).collect();
    ensure(m.tau.to_string() == "1/6", || format!("minimum {}", m.tau))?;
    ensure(names == ["0;2,2,2,3"], || format!("attained by {names:?}"))?;
    Ok(format!("min tau = 1/6 attained only by (0;2,2,2,3); {} nodes", m.nodes))
}

fn horoball_density() -> Outcome {
    let area = ideal_triangle_area_quadrature(1e-12);
    ensure((area - PI).abs() <= 1e-9, || format!("triangle area {area}"))?;
    let max = HoroballConfig::maximal();
    let density = ideal_density(&max).map_err(|e| e.to_string())?;
    ensure((density - 3.0 / PI).abs() <= 1e-9, || {
        format!("maximal density {density}")
    })?;
    let (a, b, c) = horoball_triangle_area(&max).map_err(|e| e.to_string())?;
    ensure([a, b, c].iter().all(|x| (x - 1.0).abs() <= 1e-9), || {
        format!("areas {a} {b} {c}")
    })?;
    let q_inf = cusp_area_at_height_quadrature(1.0, 1e-12);
    let q_zero = cusp_zero_area_quadrature(1.0, 1e-12);
    ensure((q_inf - a).abs() <= 1e-9 && (q_zero - b).abs() <= 1e-9, || {
        format!("quadrature {q_inf} {q_zero}")
    })?;
    for t in [0.3, 0.5, 0.8, 2.0] {
        let q = cusp_area_at_height_quadrature(t, 1e-12);
        ensure((q - cusp_area_at_height(t)).abs() <= 1e-9, || {
            format!("t = {t}: quadrature {q}")
        })?;
    }
    for step in [0.005, 0.01] {
        let (ok, best, d, valid) = local_max_search(step).map_err(|e| e.to_string())?;
        ensure(ok, || format!("step {step}: {best:?} has density {d}"))?;
        ensure(valid > 1, || format!("step {step}: only {valid} valid grid points"))?;
    }
    Ok(format!(
        "area pi, density {density:.12}, each horoball area 1; grid 0.005 and 0.01 clean"
    ))
}

fn oracle_equivalence() -> Outcome {
    let tests = [
        ("modular", GroupPresentation::modular()),
        (
            "(2,3,7)",
            GroupPresentation::planar_orbifold(&[2, 3, 7]).map_err(|e| e.to_string())?,
        ),
        (
            "(2,2,2,3)",
            GroupPresentation::planar_orbifold(&[2, 2, 2, 3]).map_err(|e| e.to_string())?,
        ),
    ];
    let mut classes = Vec::new();
    for (name, p) in &tests {
        let mut total = 0;
        for n in 1..=8 {
            let records = low_index_search(p, &LowIndexOptions::up_to(n).exact())
                .map_err(|e| e.to_string())?
                .records;
            for r in &records {
                ensure(r.deck_group_order() * r.class_length() == r.index(), || {
                    format!(
                        "{name} index {n}: deck {} class {}",
                        r.deck_group_order(),
                        r.class_length()
                    )
                })?;
            }
            let ours = common::record_forms(&records);
            ensure(ours.len() == records.len(), || {
                format!("{name} index {n}: duplicate classes")
            })?;
            let oracle = common::brute_force_classes(p, n);
            ensure(ours == oracle, || {
                format!("{name} index {n}: {} classes vs oracle {}", ours.len(), oracle.len())
            })?;
            total += ours.len();
        }
        classes.push(format!("{name} {total}"));
    }
    Ok(format!("classes at indices 1..8 agree: {}", classes.join(", ")))
}

fn determinism() -> Outcome {
    let sig: OrbifoldSignature = "0;2,6,9".parse().map_err(|e| format!("{e}"))?;
    let run = |threads| {
        survey(
            &sig,
            18,
            &SurveyOptions {
                threads,
                ..SurveyOptions::default()
            },
        )
        .map(|s| s.to_json_lines())
        .map_err(|e| e.to_string())
    };
    let one = run(1)?;
    for threads in [4, 8] {
        ensure(run(threads)? == one, || format!("{threads} threads differ from 1"))?;
    }
    Ok(format!("{} bytes identical for 1, 4 and 8 threads", one.len()))
}

fn rendering() -> Outcome {
    let scene = turnover_scene(2, 6, 9).map_err(|e| e.to_string())?;
    let svg = render_turnover(2, 6, 9).map_err(|e| e.to_string())?;
    let (turn, n1) = common::svg_tangency_residual(&svg, scene.scale())?;
    let horo_scene = ideal_horoball_scene(&HoroballConfig::maximal()).map_err(|e| e.to_string())?;
    let horo = render_ideal_horoballs(&HoroballConfig::maximal()).map_err(|e| e.to_string())?;
    let (ideal, n2) = common::svg_tangency_residual(&horo, horo_scene.scale())?;
    ensure(n1 == 3 && n2 == 3, || format!("{n1} and {n2} tangency markers"))?;
    let model = scene.max_tangency_residual().max(horo_scene.max_tangency_residual());
    let worst = turn.max(ideal).max(model);
    ensure(worst <= 1e-6, || format!("tangency residual {worst:e}"))?;
    // Drawn arcs must be the geodesic ones: orthogonal to the disk boundary,
    // or centered on the real axis and running above it.
    let (ox, oy, rim) = (500.0, 500.0, scene.scale());
    for arc in common::svg_arcs(&svg)? {
        let (cx, cy) = arc.center;
        let off = ((cx - ox).powi(2) + (cy - oy).powi(2) - arc.radius.powi(2) - rim * rim).abs() / (rim * rim);
        let inside = (arc.mid.0 - ox).hypot(arc.mid.1 - oy) < rim;
        ensure(off < 1e-6 && inside, || format!("{arc:?} is not a disk geodesic"))?;
    }
    for arc in common::svg_arcs(&horo)? {
        ensure((arc.center.1 - 1000.0).abs() < 1e-6 && arc.mid.1 < 1000.0, || {
            format!("{arc:?} is not a half-plane geodesic")
        })?;
    }
    common::check_golden("turnover_2_6_9.svg", &svg)?;
    common::check_golden("ideal_horoballs_maximal.svg", &horo)?;
    ensure(render_turnover(2, 6, 9).ok().as_ref() == Some(&svg), || {
        "turnover output not stable".into()
    })?;
    Ok(format!(
        "both SVGs parse, worst tangency {worst:.1e}, golden files match"
    ))
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 9] = [
        ("survey reproduction", survey_reproduction),
        ("S4 cover", s4_cover),
        ("density limit", density_limit),
        ("turnover tangency", turnover_tangency),
        ("tau threshold", tau_threshold),
        ("horoball density", horoball_density),
        ("oracle equivalence", oracle_equivalence),
        ("determinism", determinism),
        ("rendering", rendering),
    ];
    let mut failures = Vec::new();
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {} {name}: {detail} [{secs:.2}s]", i + 1),
            Err(detail) => {
                println!("FAIL {} {name}: {detail} [{secs:.2}s]", i + 1);
                failures.push(i + 1);
            }
        }
    }
    assert!(failures.is_empty(), "failed criteria: {failures:?}");
}
