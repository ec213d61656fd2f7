//! The verification checklist behind `hyperpack verify`.

use std::f64::consts::PI;

use hyperpack::fpgroup::{kernel_record, verify_quotient_map, FiniteQuotientMap, GroupPresentation, Perm};
use hyperpack::fuchsian::{hurwitz_check, min_tau_non_triangle, packable_by_symmetry, recognize_planar, rh_genus};
use hyperpack::horocycle::{
    cusp_area_at_height_quadrature, ideal_density, ideal_triangle_area_quadrature, HoroballConfig,
};
use hyperpack::hypgeom::{triangle_for_orders, turnover_radii};

use crate::{Failure, VerifyArgs};

const PRESENTATION: &str = "<a, b, c, d | a^2, b^2, c^2, d^3, a b c d^-1>";
const IMAGES: [(&str, &str); 4] = [("a", "(2,3)"), ("b", "(1,2)(3,4)"), ("c", "(3,4)"), ("d", "(1,2,3)")];

struct Checklist {
    lines: Vec<(bool, String, String)>,
}

impl Checklist {
    fn record(&mut self, ok: bool, name: &str, detail: impl Into<String>) {
        self.lines.push((ok, name.to_string(), detail.into()));
    }

    fn numeric(&mut self, name: &str, residual: f64, tol: f64) {
        self.record(
            residual.abs() <= tol,
            name,
            format!("residual {residual:.3e} (tolerance {tol:.1e})"),
        );
    }
}

fn images(inject: Option<&str>) -> Result<Vec<Perm>, Failure> {
    let mut table: Vec<(String, String)> = IMAGES.iter().map(|(g, p)| (g.to_string(), p.to_string())).collect();
    if let Some(assignment) = inject {
        let (gen, cycles) = assignment
            .split_once('=')
            .ok_or_else(|| Failure::input(format!("--inject-image expects gen=cycles, got {assignment:?}")))?;
        let slot = table
            .iter_mut()
            .find(|(g, _)| g == gen.trim())
            .ok_or_else(|| Failure::input(format!("unknown generator {gen:?}")))?;
        slot.1 = cycles.trim().to_string();
    }
    table
        .iter()
        .map(|(_, c)| Perm::parse_cycles(4, c).map_err(|e| Failure::input(e.to_string())))
        .collect()
}

fn cover_checks(list: &mut Checklist, inject: Option<&str>) -> Result<(), Failure> {
    let p = GroupPresentation::parse(PRESENTATION).expect("fixed presentation");
    let map = FiniteQuotientMap::new(images(inject)?).map_err(|e| Failure::input(e.to_string()))?;
    let verified = match verify_quotient_map(&p, &map, 24) {
        Ok(m) => {
            list.record(true, "S4 map", "all five relators hold; image has order 24");
            m
        }
        Err(e) => {
            let variant = format!("{e:?}");
            let variant = variant.split([' ', '(', '{']).next().unwrap_or_default().to_string();
            list.record(false, "S4 map", format!("{variant}: {e}"));
            return Ok(());
        }
    };
    let kernel = match kernel_record(&verified) {
        Ok(k) => k,
        Err(e) => {
            list.record(false, "kernel", e.to_string());
            return Ok(());
        }
    };
    let torsion_free = kernel.is_torsion_free(&p).unwrap_or(false);
    list.record(
        torsion_free && kernel.index() == 24,
        "kernel torsion-free",
        format!("index {}", kernel.index()),
    );
    let (sig, _) = recognize_planar(&p).expect("planar presentation");
    let genus = rh_genus(&sig, kernel.index() as u64).map(|i| i.genus);
    let shown = match &genus {
        Ok(g) => format!("genus {g}"),
        Err(e) => e.to_string(),
    };
    list.record(genus == Ok(3), "kernel genus", format!("{shown} over ({sig})"));
    let deck = kernel.deck_group_order() as u64;
    list.record(
        deck == 24 && kernel.class_length() == 1,
        "deck group",
        format!("order {deck}, class length {}", kernel.class_length()),
    );
    let g = genus.unwrap_or(0);
    let hurwitz = hurwitz_check(g, deck).unwrap_or(false);
    list.record(
        hurwitz,
        "Hurwitz bound",
        format!("{deck} <= 84 (g - 1) = {}", 84 * g.saturating_sub(1)),
    );
    let above = packable_by_symmetry(g, deck).unwrap_or(true);
    list.record(
        !above,
        "symmetry threshold",
        format!("{deck} is not above 12 (g - 1) = {}", 12 * g.saturating_sub(1)),
    );
    Ok(())
}

pub fn cmd_verify(args: &VerifyArgs) -> Result<(), Failure> {
    let tol = |default: f64| args.tolerance.unwrap_or(default);
    let mut list = Checklist { lines: Vec::new() };

    cover_checks(&mut list, args.inject_image.as_deref())?;

    let t = triangle_for_orders(2, 6, 9).expect("hyperbolic");
    list.numeric("law of cosines (2,6,9)", t.law_of_cosines_residual(), tol(1e-12));
    let radii = turnover_radii(&t).expect("compact");
    list.numeric("turnover tangency (2,6,9)", radii.tangency_residual(&t), tol(1e-12));

    let max = HoroballConfig::maximal();
    let density = ideal_density(&max).expect("valid");
    list.numeric("maximal horoball density", density - 3.0 / PI, tol(1e-12));
    list.numeric(
        "horoball area by quadrature",
        cusp_area_at_height_quadrature(1.0, 1e-12) - 1.0,
        tol(1e-9),
    );
    list.numeric(
        "ideal triangle area",
        ideal_triangle_area_quadrature(1e-12) - PI,
        tol(1e-9),
    );

    let m = min_tau_non_triangle();
    let attained: Vec<String> = m.attained_by.iter().map(ToString::to_string).collect();
    list.record(
        m.tau.to_string() == "1/6" && attained == ["0;2,2,2,3"],
        "tau threshold",
        format!("minimum {} attained by ({})", m.tau, attained.join("), (")),
    );

    let mut failed = 0;
    let mut report = String::new();
    for (ok, name, detail) in &list.lines {
        report.push_str(&format!("[{}] {name}: {detail}\n", if *ok { "PASS" } else { "FAIL" }));
        failed += usize::from(!ok);
    }
    if failed == 0 {
        report.push_str(&format!("all {} checks passed\n", list.lines.len()));
    }
    crate::print_stdout(&report);
    if failed > 0 {
        return Err(Failure::verification(format!(
            "{failed} of {} checks failed",
            list.lines.len()
        )));
    }
    Ok(())
}
