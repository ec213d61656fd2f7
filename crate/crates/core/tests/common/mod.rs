//! Independent oracles shared by the integration tests.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::path::PathBuf;

use hyperpack::fpgroup::{is_transitive, word_eval, GroupPresentation, Perm, SubgroupRecord, Word};

/// Every permutation of `0..n` in lexicographic order.
pub fn all_perms(n: usize) -> Vec<Perm> {
    fn go(prefix: &mut Vec<u32>, used: &mut [bool], out: &mut Vec<Perm>) {
        let n = used.len();
        if prefix.len() == n {
            out.push(Perm::from_images(prefix.clone()).unwrap());
            return;
        }
        for i in 0..n {
            if !used[i] {
                used[i] = true;
                prefix.push(i as u32);
                go(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Canonical relabelling of a transitive tuple: the lexicographically least
/// breadth-first numbering over all start points.
pub fn canonical_form(gens: &[Perm]) -> Vec<u32> {
    let n = gens[0].degree();
    let mut best: Option<Vec<u32>> = None;
    for start in 0..n {
        let mut label = vec![u32::MAX; n];
        let mut queue = VecDeque::from([start]);
        label[start] = 0;
        let mut next = 1;
        while let Some(pt) = queue.pop_front() {
            for g in gens {
                let im = g.apply(pt);
                if label[im] == u32::MAX {
                    label[im] = next;
                    next += 1;
                    queue.push_back(im);
                }
            }
        }
        let mut form = vec![0u32; n * gens.len()];
        for (k, g) in gens.iter().enumerate() {
            for pt in 0..n {
                form[k * n + label[pt] as usize] = label[g.apply(pt)];
            }
        }
        if best.as_ref().is_none_or(|b| form < *b) {
            best = Some(form);
        }
    }
    best.unwrap_or_default()
}

/// Conjugacy classes of transitive actions of degree `n` found by brute
/// force over generator tuples.
///
/// Each generator with a declared order ranges over all permutations of that
/// order; the first one is fixed to one representative per cycle type, and
/// when the presentation has a single product relator `x1 x2 .. xk` the last
/// generator is solved for. Every relator is then checked with `word_eval`.
pub fn brute_force_classes(p: &GroupPresentation, n: usize) -> BTreeSet<Vec<u32>> {
    let perms = all_perms(n);
    let k = p.generator_count();
    let of_order = |m: Option<u32>| -> Vec<Perm> {
        match m {
            Some(m) => perms
                .iter()
                .filter(|g| g.pow(m as i64).is_identity())
                .cloned()
                .collect(),
            None => perms.clone(),
        }
    };
    let candidates: Vec<Vec<Perm>> = p.orders().iter().map(|&m| of_order(m)).collect();
    let mut reps: BTreeMap<Vec<usize>, Perm> = BTreeMap::new();
    for g in &candidates[0] {
        let mut t = g.cycle_lengths();
        t.sort_unstable();
        reps.entry(t).or_insert_with(|| g.clone());
    }
    let product: Word = Word((0..k).map(hyperpack::fpgroup::Letter::gen).collect());
    let solve_last = k >= 2 && p.relators().contains(&product);
    let free = if solve_last { k - 1 } else { k };

    let mut found = BTreeSet::new();
    let mut tuple: Vec<Perm> = Vec::with_capacity(k);
    for rep in reps.values() {
        tuple.clear();
        tuple.push(rep.clone());
        extend(p, &candidates, free, solve_last, &mut tuple, &mut found);
    }
    found
}

fn extend(
    p: &GroupPresentation,
    candidates: &[Vec<Perm>],
    free: usize,
    solve_last: bool,
    tuple: &mut Vec<Perm>,
    found: &mut BTreeSet<Vec<u32>>,
) {
    if tuple.len() == free {
        if solve_last {
            let prefix = tuple.iter().skip(1).fold(tuple[0].clone(), |acc, g| acc.then(g));
            tuple.push(prefix.inverse());
        }
        accept(p, tuple, found);
        if solve_last {
            tuple.pop();
        }
        return;
    }
    for g in &candidates[tuple.len()] {
        tuple.push(g.clone());
        extend(p, candidates, free, solve_last, tuple, found);
        tuple.pop();
    }
}

fn accept(p: &GroupPresentation, tuple: &[Perm], found: &mut BTreeSet<Vec<u32>>) {
    let n = tuple[0].degree();
    let orders_ok = p
        .orders()
        .iter()
        .zip(tuple)
        .all(|(m, g)| m.is_none_or(|m| g.pow(m as i64).is_identity()));
    if !orders_ok {
        return;
    }
    if !p
        .relators()
        .iter()
        .all(|r| word_eval(r, tuple, n).is_ok_and(|g| g.is_identity()))
    {
        return;
    }
    if is_transitive(tuple, n) {
        found.insert(canonical_form(tuple));
    }
}

pub fn record_forms(records: &[SubgroupRecord]) -> BTreeSet<Vec<u32>> {
    records.iter().map(|r| canonical_form(r.perms())).collect()
}

/// Largest distance, in model units, from a `class="tangency"` marker of an
/// SVG document to the outline of each element named in its `data-on`.
///
/// Only the shapes the renderer emits are understood: circles, the
/// horoball rectangle at infinity (its lower edge), straight `M .. L ..`
/// paths and single circular arcs `M .. A ..`.
pub fn svg_tangency_residual(svg: &str, pixels_per_unit: f64) -> Result<(f64, usize), String> {
    let doc = roxmltree::Document::parse(svg).map_err(|e| e.to_string())?;
    let by_id: HashMap<&str, roxmltree::Node> = doc
        .descendants()
        .filter_map(|n| n.attribute("id").map(|id| (id, n)))
        .collect();
    let num = |n: &roxmltree::Node, a: &str| -> Result<f64, String> {
        n.attribute(a)
            .ok_or_else(|| format!("missing {a}"))?
            .parse::<f64>()
            .map_err(|e| e.to_string())
    };
    let mut worst: f64 = 0.0;
    let mut count = 0;
    for marker in doc.descendants().filter(|n| n.attribute("class") == Some("tangency")) {
        let (px, py) = (num(&marker, "cx")?, num(&marker, "cy")?);
        let on = marker.attribute("data-on").ok_or("tangency without data-on")?;
        for id in on.split_whitespace() {
            let el = by_id.get(id).ok_or_else(|| format!("unknown element {id}"))?;
            let d = match el.tag_name().name() {
                "circle" => {
                    let (cx, cy, r) = (num(el, "cx")?, num(el, "cy")?, num(el, "r")?);
                    (((px - cx).powi(2) + (py - cy).powi(2)).sqrt() - r).abs()
                }
                "rect" => (py - (num(el, "y")? + num(el, "height")?)).abs(),
                "path" => path_distance(el.attribute("d").unwrap_or_default(), px, py)?,
                other => return Err(format!("unexpected element {other}")),
            };
            worst = worst.max(d / pixels_per_unit);
        }
        count += 1;
    }
    Ok((worst, count))
}

fn path_distance(d: &str, px: f64, py: f64) -> Result<f64, String> {
    let tok: Vec<&str> = d.split_whitespace().collect();
    let f = |i: usize| -> Result<f64, String> {
        tok.get(i)
            .ok_or("short path")?
            .parse::<f64>()
            .map_err(|e| e.to_string())
    };
    match tok.get(3) {
        Some(&"L") => {
            let (x1, y1, x2, y2) = (f(1)?, f(2)?, f(4)?, f(5)?);
            let (dx, dy) = (x2 - x1, y2 - y1);
            Ok(((px - x1) * dy - (py - y1) * dx).abs() / dx.hypot(dy))
        }
        Some(&"A") => {
            let (x1, y1, r) = (f(1)?, f(2)?, f(4)?);
            let (large, sweep) = (f(7)? != 0.0, f(8)? != 0.0);
            let (x2, y2) = (f(9)?, f(10)?);
            // Center of the arc, as in the SVG endpoint parameterization.
            let (hx, hy) = ((x1 - x2) / 2.0, (y1 - y2) / 2.0);
            let h2 = hx * hx + hy * hy;
            let k = ((r * r - h2).max(0.0) / h2).sqrt();
            let sign = if large != sweep { 1.0 } else { -1.0 };
            let (cx, cy) = (sign * k * hy + (x1 + x2) / 2.0, -sign * k * hx + (y1 + y2) / 2.0);
            Ok((((px - cx).powi(2) + (py - cy).powi(2)).sqrt() - r).abs())
        }
        _ => Err(format!("unsupported path {d:?}")),
    }
}

/// A circular arc of an SVG path, in canvas pixels.
#[derive(Debug)]
pub struct Arc {
    pub id: String,
    pub center: (f64, f64),
    pub radius: f64,
    /// Midpoint of the drawn arc, following the large-arc and sweep flags.
    pub mid: (f64, f64),
}

/// Every single-arc path `M .. A ..` of an SVG document.
pub fn svg_arcs(svg: &str) -> Result<Vec<Arc>, String> {
    let doc = roxmltree::Document::parse(svg).map_err(|e| e.to_string())?;
    let mut out = Vec::new();
    for node in doc.descendants().filter(|n| n.tag_name().name() == "path") {
        let d = node.attribute("d").unwrap_or_default();
        let tok: Vec<f64> = d.split_whitespace().filter_map(|t| t.parse().ok()).collect();
        if !d.contains(" A ") || tok.len() != 9 {
            continue;
        }
        let (x1, y1, r, large, sweep, x2, y2) = (tok[0], tok[1], tok[2], tok[5] != 0.0, tok[6] != 0.0, tok[7], tok[8]);
        let (hx, hy) = ((x1 - x2) / 2.0, (y1 - y2) / 2.0);
        let h2 = hx * hx + hy * hy;
        let k = ((r * r - h2).max(0.0) / h2).sqrt();
        let sign = if large != sweep { 1.0 } else { -1.0 };
        let (cx, cy) = (sign * k * hy + (x1 + x2) / 2.0, -sign * k * hx + (y1 + y2) / 2.0);
        let a1 = (y1 - cy).atan2(x1 - cx);
        let a2 = (y2 - cy).atan2(x2 - cx);
        let tau = std::f64::consts::TAU;
        let mut delta = (a2 - a1).rem_euclid(tau);
        if !sweep {
            delta -= tau;
        }
        let mid = a1 + delta / 2.0;
        out.push(Arc {
            id: node.attribute("id").unwrap_or_default().to_string(),
            center: (cx, cy),
            radius: r,
            mid: (cx + r * mid.cos(), cy + r * mid.sin()),
        });
    }
    Ok(out)
}

pub fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests")
        .join("golden")
        .join(name)
}

/// Compares `actual` with the stored golden file, rewriting it instead when
/// `HYPERPACK_BLESS` is set.
pub fn check_golden(name: &str, actual: &str) -> Result<(), String> {
    let path = golden_path(name);
    if std::env::var_os("HYPERPACK_BLESS").is_some() {
        std::fs::create_dir_all(path.parent().unwrap()).map_err(|e| e.to_string())?;
        std::fs::write(&path, actual).map_err(|e| e.to_string())?;
        return Ok(());
    }
    let expected = std::fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
    if expected == actual {
        Ok(())
    } else {
        Err(format!("{name} differs from the golden file"))
    }
}
