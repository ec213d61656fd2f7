use std::f64::consts::PI;

use hyperpack::fpgroup::{low_index_search, GroupPresentation, LowIndexOptions, SubgroupRecord};
use hyperpack::fuchsian::{
    rh_genus, survey, turnover_cover_density, Certificate, FuchsianError, OrbifoldSignature, SurveyOptions,
};
use hyperpack::horocycle::{modular_cover_report, parabolic_word, HoroError};
use hyperpack::hypgeom::{circle_area, density_spp, spp_radius};

fn torsion_free(p: &GroupPresentation, n: usize) -> Vec<SubgroupRecord> {
    low_index_search(p, &LowIndexOptions::up_to(n).exact().torsion_free())
        .unwrap()
        .records
}

#[test]
fn torsion_pruning_matches_filtering() {
    for (orders, n) in [(vec![2, 2, 2, 3], 12), (vec![3, 3, 4], 12), (vec![2, 3, 8], 8)] {
        let p = GroupPresentation::planar_orbifold(&orders).unwrap();
        let pruned = torsion_free(&p, n);
        let all = low_index_search(&p, &LowIndexOptions::up_to(n).exact())
            .unwrap()
            .records;
        let filtered: Vec<_> = all.into_iter().filter(|r| r.is_torsion_free(&p).unwrap()).collect();
        assert_eq!(pruned, filtered, "{orders:?} at index {n}");
    }
}

#[test]
fn survey_pruning_matches_filtering() {
    let p = GroupPresentation::planar_orbifold(&[2, 6, 9]).unwrap();
    let all = low_index_search(&p, &LowIndexOptions::up_to(18).exact())
        .unwrap()
        .records;
    let filtered: Vec<_> = all.iter().filter(|r| r.is_torsion_free(&p).unwrap()).cloned().collect();
    assert_eq!(filtered.len(), 335);
    assert_eq!(torsion_free(&p, 18), filtered);
}

#[test]
fn modular_reports_satisfy_euler_relations() {
    let p = GroupPresentation::modular();
    let mut seen = 0;
    for n in [6, 12, 18] {
        for rec in torsion_free(&p, n) {
            let report = modular_cover_report(&rec).unwrap();
            let n = n as u64;
            // chi = -n/6 = 2 - 2g - k.
            assert_eq!(6 * (2 * report.genus + report.cusps), 12 + n);
            assert_eq!(report.euler_characteristic(), 2 - 2 * report.genus as i64);
            assert_eq!(report.faces, n / 3);
            assert_eq!(report.edges, n / 2);
            assert_eq!(report.deck_order * report.class_length, n);
            assert!((report.density - 3.0 / PI).abs() < 1e-15);
            assert!((report.area - n as f64 * PI / 3.0).abs() < 1e-12);
            // Cusps are the cycles of the parabolic element.
            let parabolic = rec.eval(&parabolic_word(&p)).unwrap();
            assert_eq!(parabolic.cycle_count() as u64, report.cusps);
            seen += 1;
        }
    }
    assert!(seen > 10);
}

#[test]
fn modular_index_six_covers() {
    let p = GroupPresentation::modular();
    let mut shapes: Vec<(u64, u64)> = torsion_free(&p, 6)
        .iter()
        .map(|r| {
            let rep = modular_cover_report(r).unwrap();
            (rep.genus, rep.cusps)
        })
        .collect();
    shapes.sort_unstable();
    assert!(shapes.contains(&(0, 3)));
    assert!(shapes.contains(&(1, 1)));
    assert!(shapes.iter().all(|&(g, k)| 2 * g + k == 3));
}

#[test]
fn modular_report_rejects_torsion() {
    let p = GroupPresentation::modular();
    let whole = low_index_search(&p, &LowIndexOptions::up_to(1)).unwrap().records;
    assert!(matches!(
        modular_cover_report(&whole[0]),
        Err(HoroError::NotTorsionFree(_))
    ));
}

#[test]
fn turnover_444_density_agrees_with_closed_form() {
    let sig = OrbifoldSignature::triangle(4, 4, 4).unwrap();
    let p = sig.presentation().unwrap();
    let records = torsion_free(&p, 8);
    assert!(!records.is_empty());
    let expected = density_spp(4).unwrap().density();
    for rec in &records {
        let report = turnover_cover_density(&sig, &p, rec).unwrap();
        assert!(
            (report.density() - expected).abs() < 1e-12,
            "{} vs {expected}",
            report.density()
        );
    }
    // Each vertex of the (pi/4)^3 triangle holds an eighth of a disk; the
    // triangle has area pi/4.
    let direct = 3.0 * circle_area(spp_radius(4).unwrap()).unwrap() / 8.0 / (PI / 4.0);
    assert!((direct - expected).abs() < 1e-12);
}

#[test]
fn survey_entries_are_consistent() {
    let sig: OrbifoldSignature = "0;2,6,9".parse().unwrap();
    let s = survey(&sig, 18, &SurveyOptions::default()).unwrap();
    for (i, e) in s.entries.iter().enumerate() {
        assert_eq!(e.record_id, i + 1);
        assert_eq!(e.record.index(), 18);
        assert_eq!(e.deck_order() * e.class_length, 18);
        assert_eq!(e.invariants.certificate, Certificate::TurnoverCover);
    }
    let lines = s.to_json_lines();
    assert_eq!(lines.lines().count(), 335);
    let first: serde_json::Value = serde_json::from_str(lines.lines().next().unwrap()).unwrap();
    assert_eq!(first["signature"], "0;2,6,9");
    assert_eq!(first["genus"], 3);
    assert_eq!(rh_genus(&sig, 18).unwrap().genus, 3);
}

#[test]
fn survey_without_covers() {
    let opts = SurveyOptions::default();
    let s = survey(&"0;2,6,9".parse().unwrap(), 17, &opts).unwrap();
    assert_eq!(s.summary(), "0 total, 0 asymmetric");
    let s = survey(&OrbifoldSignature::triangle(2, 3, 7).unwrap(), 1, &opts).unwrap();
    assert_eq!(s.total(), 0);
    assert!(matches!(
        survey(&OrbifoldSignature::triangle(2, 3, 6).unwrap(), 6, &opts),
        Err(FuchsianError::NotHyperbolic(_))
    ));
    assert!(matches!(
        survey(&OrbifoldSignature::modular(), 6, &opts),
        Err(FuchsianError::Unsupported(_))
    ));
}
