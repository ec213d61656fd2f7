//! Orbifold signatures, Riemann–Hurwitz genus computations and surveys of
//! torsion-free covers of planar orbifolds.
//!
//! All Euler characteristics are exact rationals.

use std::cmp::Ordering;
use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::fpgroup::{
    low_index_search, GroupError, GroupPresentation, Letter, LowIndexOptions, RecordJson, SubgroupRecord,
    DEFAULT_NODE_BUDGET,
};
use crate::hypgeom::{density_congruent, spp_radius, DensityReport, GeomError};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum FuchsianError {
    #[error("cannot parse signature {0:?}: {1}")]
    Parse(String, String),
    #[error("cone order {0} is below 2")]
    OrderTooSmall(u32),
    #[error("signature {0} is not hyperbolic")]
    NotHyperbolic(String),
    #[error("genus {0} is not a nonnegative integer")]
    NonIntegralGenus(String),
    #[error("genus {0} is below 2")]
    BadGenus(u64),
    #[error("surveys need a compact signature of genus 0, got {0}")]
    Unsupported(String),
    #[error("subgroup has torsion, so the cover is an orbifold")]
    HasTorsion,
    #[error("index must be positive")]
    ZeroIndex,
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Geom(#[from] GeomError),
}

/// `(h; m_1, .., m_k)` with `c` cusps. Orders are kept sorted ascending.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrbifoldSignature {
    genus: u32,
    orders: Vec<u32>,
    cusps: u32,
}

impl OrbifoldSignature {
    pub fn new(genus: u32, mut orders: Vec<u32>, cusps: u32) -> Result<Self, FuchsianError> {
        if let Some(&m) = orders.iter().find(|&&m| m < 2) {
            return Err(FuchsianError::OrderTooSmall(m));
        }
        orders.sort_unstable();
        Ok(OrbifoldSignature { genus, orders, cusps })
    }

    pub fn compact(genus: u32, orders: &[u32]) -> Result<Self, FuchsianError> {
        Self::new(genus, orders.to_vec(), 0)
    }

    /// `(0; p, q, r)`.
    pub fn triangle(p: u32, q: u32, r: u32) -> Result<Self, FuchsianError> {
        Self::new(0, vec![p, q, r], 0)
    }

    /// The modular orbifold `(0; 2, 3)` with one cusp.
    pub fn modular() -> Self {
        OrbifoldSignature {
            genus: 0,
            orders: vec![2, 3],
            cusps: 1,
        }
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn orders(&self) -> &[u32] {
        &self.orders
    }

    pub fn cusps(&self) -> u32 {
        self.cusps
    }

    pub fn is_compact(&self) -> bool {
        self.cusps == 0
    }

    pub fn is_triangle(&self) -> bool {
        self.genus == 0 && self.cusps == 0 && self.orders.len() == 3
    }

    /// `2h - 2 + c + sum(1 - 1/m_i)`, which is `-chi`.
    pub fn tau(&self) -> BigRational {
        let mut t = BigRational::from_integer(BigInt::from(2 * self.genus as i64 - 2 + self.cusps as i64));
        for &m in &self.orders {
            t += BigRational::new(BigInt::from(m - 1), BigInt::from(m));
        }
        t
    }

    /// Orbifold Euler characteristic.
    pub fn euler_characteristic(&self) -> BigRational {
        -self.tau()
    }

    pub fn is_hyperbolic(&self) -> bool {
        self.tau().is_positive()
    }

    /// Hyperbolic area, `2 pi tau`.
    pub fn area(&self) -> f64 {
        2.0 * PI * rational_to_f64(&self.tau())
    }

    /// The canonical presentation `<x1..xk | xi^mi, x1 x2 .. xk>` for a
    /// compact genus-0 signature.
    pub fn presentation(&self) -> Result<GroupPresentation, FuchsianError> {
        if self.genus != 0 || self.cusps != 0 {
            return Err(FuchsianError::Unsupported(self.to_string()));
        }
        Ok(GroupPresentation::planar_orbifold(&self.orders)?)
    }
}

impl fmt::Display for OrbifoldSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};", self.genus)?;
        let orders: Vec<String> = self.orders.iter().map(u32::to_string).collect();
        write!(f, "{}", orders.join(","))?;
        if self.cusps > 0 {
            write!(f, "+{}", self.cusps)?;
        }
        Ok(())
    }
}

impl FromStr for OrbifoldSignature {
    type Err = FuchsianError;

    /// Parses `h;m1,m2,...` with an optional `+c` cusp suffix. Whitespace is
    /// ignored and the whole form may be wrapped in parentheses.
    fn from_str(text: &str) -> Result<Self, FuchsianError> {
        let err = |why: &str| FuchsianError::Parse(text.to_string(), why.to_string());
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let body = match compact.strip_prefix('(') {
            Some(rest) => rest.strip_suffix(')').ok_or_else(|| err("unbalanced parenthesis"))?,
            None => compact.as_str(),
        };
        let (genus, rest) = body.split_once(';').ok_or_else(|| err("missing ';'"))?;
        let number = |s: &str, what: &str| -> Result<u32, FuchsianError> {
            if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
                return Err(err(&format!("bad {what} {s:?}")));
            }
            s.parse().map_err(|_| err(&format!("{what} {s:?} out of range")))
        };
        let genus = number(genus, "genus")?;
        let (orders, cusps) = match rest.split_once('+') {
            Some((o, c)) => (o, number(c, "cusp count")?),
            None => (rest, 0),
        };
        let orders = if orders.is_empty() {
            vec![]
        } else {
            orders
                .split(',')
                .map(|m| number(m, "order"))
                .collect::<Result<Vec<_>, _>>()?
        };
        OrbifoldSignature::new(genus, orders, cusps)
    }
}

impl Serialize for OrbifoldSignature {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Evidence that a surface carries a triangulated circle packing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Certificate {
    /// Torsion-free cover of a turnover; the three vertex circles lift.
    TurnoverCover,
    /// Torsion-free finite-index subgroup of the modular group; the maximal
    /// horoball configuration lifts.
    ModularSubgroup,
    None,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SurfaceInvariants {
    pub genus: u64,
    pub cusps: u64,
    pub area: f64,
    /// `|N(K)/K|` relative to the base orbifold group, when known.
    pub deck_order: Option<u64>,
    pub certificate: Certificate,
}

pub(crate) fn rational_to_f64(q: &BigRational) -> f64 {
    q.numer().to_f64().unwrap_or(f64::NAN) / q.denom().to_f64().unwrap_or(f64::NAN)
}

fn integral_genus(twice_genus: BigRational) -> Result<u64, FuchsianError> {
    if !twice_genus.is_integer() || twice_genus.is_negative() {
        return Err(FuchsianError::NonIntegralGenus(
            (twice_genus / BigInt::from(2)).to_string(),
        ));
    }
    let t = twice_genus.to_integer();
    if (&t % 2u32) != BigInt::zero() {
        return Err(FuchsianError::NonIntegralGenus(format!("{t}/2")));
    }
    (t / 2u32)
        .to_u64()
        .ok_or_else(|| FuchsianError::NonIntegralGenus("too large".into()))
}

/// Genus of a torsion-free, degree-`index` cover of a compact orbifold:
/// `g = 1 + index * tau / 2`.
pub fn rh_genus(sig: &OrbifoldSignature, index: u64) -> Result<SurfaceInvariants, FuchsianError> {
    if !sig.is_compact() {
        return Err(FuchsianError::Unsupported(format!(
            "{sig} has cusps; use rh_genus_cusped"
        )));
    }
    rh_genus_cusped(sig, index, 0)
}

/// Genus of a torsion-free cover with `cover_cusps` cusps:
/// `2 - 2g - cover_cusps = -index * tau`.
pub fn rh_genus_cusped(
    sig: &OrbifoldSignature,
    index: u64,
    cover_cusps: u64,
) -> Result<SurfaceInvariants, FuchsianError> {
    if index == 0 {
        return Err(FuchsianError::ZeroIndex);
    }
    if !sig.is_hyperbolic() {
        return Err(FuchsianError::NotHyperbolic(sig.to_string()));
    }
    let n = BigRational::from_integer(BigInt::from(index));
    let twice = BigRational::from_integer(BigInt::from(2) - BigInt::from(cover_cusps)) + n * sig.tau();
    let genus = integral_genus(twice)?;
    Ok(SurfaceInvariants {
        genus,
        cusps: cover_cusps,
        area: index as f64 * sig.area(),
        deck_order: None,
        certificate: Certificate::None,
    })
}

/// Whether `iso_order` respects the Hurwitz bound `84 (g - 1)`.
pub fn hurwitz_check(genus: u64, iso_order: u64) -> Result<bool, FuchsianError> {
    if genus < 2 {
        return Err(FuchsianError::BadGenus(genus));
    }
    Ok(iso_order as u128 <= 84 * (genus as u128 - 1))
}

/// Sufficient condition for packability: more than `12 (g - 1)` orientation
/// preserving isometries force the quotient to be a turnover.
pub fn packable_by_symmetry(genus: u64, iso_order: u64) -> Result<bool, FuchsianError> {
    if genus < 2 {
        return Err(FuchsianError::BadGenus(genus));
    }
    Ok(iso_order as u128 > 12 * (genus as u128 - 1))
}

fn one_sixth() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(6))
}

/// All compact hyperbolic signatures with `tau < 1/6` and orders at most
/// `max_order`, sorted by signature.
///
/// Genus `h >= 1` gives `tau >= 1/2`, as do four orders unless they are
/// `(2,2,2,3)` which gives exactly `1/6`, and five or more orders give
/// `tau >= 1/2`; so only triangles remain. For `(p, q, r)` ascending `tau`
/// increases with `r`, which bounds the inner loop.
pub fn classify_small_tau(max_order: u32) -> Vec<(OrbifoldSignature, BigRational)> {
    let bound = one_sixth();
    let mut out = Vec::new();
    for p in 2..=max_order {
        // With q = r = p the smallest tau is 1 - 3/p.
        if BigRational::new(BigInt::from(p as i64 - 3), BigInt::from(p)) >= bound {
            break;
        }
        for q in p..=max_order {
            if triangle_tau(p, q, q) >= bound {
                break;
            }
            for r in q..=max_order {
                let t = triangle_tau(p, q, r);
                if t >= bound {
                    break;
                }
                if t.is_positive() {
                    out.push((
                        OrbifoldSignature {
                            genus: 0,
                            orders: vec![p, q, r],
                            cusps: 0,
                        },
                        t,
                    ));
                }
            }
        }
    }
    out
}

fn triangle_tau(p: u32, q: u32, r: u32) -> BigRational {
    let one = |m: u32| BigRational::new(BigInt::one(), BigInt::from(m));
    BigRational::one() - one(p) - one(q) - one(r)
}

/// Result of [`min_tau_non_triangle`].
#[derive(Clone, Debug, PartialEq)]
pub struct TauMinimum {
    pub tau: BigRational,
    pub attained_by: Vec<OrbifoldSignature>,
    /// Signature prefixes visited.
    pub nodes: u64,
}

/// Exhaustive branch and bound for the least `tau` over compact hyperbolic
/// signatures other than triangles.
///
/// Each cone point adds at least `1/2` and `tau` grows with every order, so
/// a prefix is abandoned once the orders so far plus `1/2` per remaining
/// cone point exceed the best value found.
pub fn min_tau_non_triangle() -> TauMinimum {
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let mut state = TauSearch {
        best: None,
        attained: Vec::new(),
        nodes: 0,
    };
    let mut h = 0u32;
    loop {
        let base = BigRational::from_integer(BigInt::from(2 * h as i64 - 2));
        if state.exceeds(&base) {
            break;
        }
        let mut k = 0usize;
        loop {
            let floor = &base + &half * BigInt::from(k);
            if state.exceeds(&floor) {
                break;
            }
            // Orders tend to 1 each, so tau < 2h - 2 + k; skip shapes that
            // never become hyperbolic, and the triangles.
            let sup = &base + BigRational::from_integer(BigInt::from(k));
            if sup.is_positive() && !(h == 0 && k == 3) {
                state.extend(h, k, &mut Vec::new(), base.clone(), &half);
            }
            k += 1;
        }
        h += 1;
    }
    let (tau, mut attained_by) = (state.best.expect("(0;2,2,2,3) is hyperbolic"), state.attained);
    attained_by.sort();
    TauMinimum {
        tau,
        attained_by,
        nodes: state.nodes,
    }
}

struct TauSearch {
    best: Option<BigRational>,
    attained: Vec<OrbifoldSignature>,
    nodes: u64,
}

impl TauSearch {
    fn exceeds(&self, lower: &BigRational) -> bool {
        self.best.as_ref().is_some_and(|b| lower > b)
    }

    fn extend(&mut self, h: u32, k: usize, orders: &mut Vec<u32>, partial: BigRational, half: &BigRational) {
        self.nodes += 1;
        if orders.len() == k {
            if !partial.is_positive() {
                return;
            }
            let sig = OrbifoldSignature {
                genus: h,
                orders: orders.clone(),
                cusps: 0,
            };
            match self.best.as_ref().map(|b| partial.cmp(b)) {
                None | Some(Ordering::Less) => {
                    self.best = Some(partial);
                    self.attained = vec![sig];
                }
                Some(Ordering::Equal) => self.attained.push(sig),
                Some(Ordering::Greater) => {}
            }
            return;
        }
        let remaining = k - orders.len() - 1;
        let mut m = orders.last().copied().unwrap_or(2);
        loop {
            let next = &partial + BigRational::new(BigInt::from(m - 1), BigInt::from(m));
            let lower = &next + half * BigInt::from(remaining);
            if self.exceeds(&lower) {
                break;
            }
            orders.push(m);
            self.extend(h, k, orders, next, half);
            orders.pop();
            m += 1;
        }
    }
}

/// Options for [`survey`].
#[derive(Clone, Debug)]
pub struct SurveyOptions {
    pub threads: usize,
    pub node_budget: u64,
}

impl Default for SurveyOptions {
    fn default() -> Self {
        SurveyOptions {
            threads: 0,
            node_budget: DEFAULT_NODE_BUDGET,
        }
    }
}

/// One torsion-free conjugacy class in a survey.
#[derive(Clone, Debug, PartialEq)]
pub struct SurveyEntry {
    /// 1-based position in the sorted survey.
    pub record_id: usize,
    pub record: SubgroupRecord,
    pub invariants: SurfaceInvariants,
    pub class_length: u64,
}

impl SurveyEntry {
    pub fn deck_order(&self) -> u64 {
        self.invariants.deck_order.unwrap_or(0)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Survey {
    pub signature: OrbifoldSignature,
    pub index: u64,
    pub entries: Vec<SurveyEntry>,
    /// Search nodes visited by the low-index search.
    pub nodes: u64,
}

/// One JSON line of survey output.
#[derive(Clone, Debug, Serialize)]
pub struct SurveyLine<'a> {
    pub signature: &'a OrbifoldSignature,
    pub index: u64,
    pub record_id: usize,
    pub genus: u64,
    pub deck_order: u64,
    pub class_length: u64,
    pub certificate: Certificate,
    pub action: RecordJson,
}

impl Survey {
    pub fn total(&self) -> usize {
        self.entries.len()
    }

    /// Entries with trivial deck group.
    pub fn asymmetric(&self) -> usize {
        self.entries.iter().filter(|e| e.deck_order() == 1).count()
    }

    pub fn lines(&self) -> impl Iterator<Item = SurveyLine<'_>> {
        self.entries.iter().map(move |e| SurveyLine {
            signature: &self.signature,
            index: self.index,
            record_id: e.record_id,
            genus: e.invariants.genus,
            deck_order: e.deck_order(),
            class_length: e.class_length,
            certificate: e.invariants.certificate,
            action: e.record.to_json(),
        })
    }

    /// Survey output as JSON lines, each terminated by a newline.
    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for line in self.lines() {
            out.push_str(&serde_json::to_string(&line).expect("survey lines serialize"));
            out.push('\n');
        }
        out
    }

    pub fn summary(&self) -> String {
        format!("{} total, {} asymmetric", self.total(), self.asymmetric())
    }
}

/// Surface invariants of a torsion-free cover given by `record`.
pub fn cover_invariants(
    sig: &OrbifoldSignature,
    presentation: &GroupPresentation,
    record: &SubgroupRecord,
) -> Result<SurfaceInvariants, FuchsianError> {
    if !record.is_torsion_free(presentation)? {
        return Err(FuchsianError::HasTorsion);
    }
    let mut inv = rh_genus(sig, record.index() as u64)?;
    inv.deck_order = Some(record.deck_group_order() as u64);
    if sig.is_triangle() {
        inv.certificate = Certificate::TurnoverCover;
    }
    Ok(inv)
}

/// Every torsion-free conjugacy class of index-`index` subgroups of the
/// orbifold group of `sig`, with genus, deck order and class length.
pub fn survey(sig: &OrbifoldSignature, index: u64, options: &SurveyOptions) -> Result<Survey, FuchsianError> {
    if sig.genus() != 0 || !sig.is_compact() {
        return Err(FuchsianError::Unsupported(sig.to_string()));
    }
    if !sig.is_hyperbolic() {
        return Err(FuchsianError::NotHyperbolic(sig.to_string()));
    }
    if index == 0 {
        return Err(FuchsianError::ZeroIndex);
    }
    let presentation = sig.presentation()?;
    let search = LowIndexOptions::up_to(index as usize)
        .exact()
        .torsion_free()
        .threads(options.threads)
        .node_budget(options.node_budget);
    let outcome = low_index_search(&presentation, &search)?;
    let entries = outcome
        .records
        .into_iter()
        .enumerate()
        .map(|(i, record)| {
            let invariants = cover_invariants(sig, &presentation, &record)?;
            Ok(SurveyEntry {
                record_id: i + 1,
                class_length: record.class_length() as u64,
                record,
                invariants,
            })
        })
        .collect::<Result<Vec<_>, FuchsianError>>()?;
    Ok(Survey {
        signature: sig.clone(),
        index,
        entries,
        nodes: outcome.nodes,
    })
}

/// Packing density of a torsion-free cover of the `(p, p, p)` turnover, from
/// its circle count, the common radius and its genus.
pub fn turnover_cover_density(
    sig: &OrbifoldSignature,
    presentation: &GroupPresentation,
    record: &SubgroupRecord,
) -> Result<DensityReport, FuchsianError> {
    let p = match sig.orders() {
        [p, q, r] if sig.is_triangle() && p == q && q == r => *p,
        _ => {
            return Err(FuchsianError::Unsupported(format!(
                "{sig} is not an equilateral turnover"
            )))
        }
    };
    let inv = cover_invariants(sig, presentation, record)?;
    // One circle per cycle of each cone generator.
    let circles: usize = record.perms().iter().map(|g| g.cycle_count()).sum();
    Ok(density_congruent(circles as u64, spp_radius(p as u64)?, inv.genus)?)
}

/// Recognizes `<x1..xk | xi^mi, x1^e1 x2^e2 .. xk^ek>` with each `ei = +-1`,
/// returning the signature and which generators are inverted relative to
/// the canonical presentation. Replacing those generators by their inverses
/// turns one form into the other.
pub fn recognize_planar(presentation: &GroupPresentation) -> Option<(OrbifoldSignature, Vec<bool>)> {
    let k = presentation.generator_count();
    let orders: Vec<u32> = presentation.orders().iter().copied().collect::<Option<_>>()?;
    let mut product: Option<Vec<bool>> = None;
    for r in presentation.relators() {
        if r.as_power()
            .is_some_and(|(g, e)| presentation.orders()[g] == Some(e.unsigned_abs() as u32))
        {
            continue;
        }
        let letters: &[Letter] = r.letters();
        let fits = letters.len() == k && letters.iter().enumerate().all(|(i, l)| l.gen == i);
        if !fits || product.is_some() {
            return None;
        }
        product = Some(letters.iter().map(|l| l.inv).collect());
    }
    let flips = product?;
    // All inverted is the inverse of the canonical relator.
    let flips = if flips.iter().all(|&f| f) && k > 0 {
        vec![false; k]
    } else {
        flips
    };
    let sig = OrbifoldSignature::new(0, orders, 0).ok()?;
    Some((sig, flips))
}
