//! Transitive permutation actions standing for conjugacy classes of
//! finite-index subgroups.

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::perm::Perm;
use super::permgroup::is_transitive;
use super::presentation::GroupPresentation;
use super::word::Word;
use super::GroupError;

/// Evaluates `word` on generator images, applying the first letter first.
pub fn word_eval(word: &Word, images: &[Perm], degree: usize) -> Result<Perm, GroupError> {
    let mut acc: Vec<u32> = (0..degree as u32).collect();
    for l in word.letters() {
        let g = images.get(l.gen).ok_or(GroupError::BadIndex(l.gen, images.len()))?;
        let step = if l.inv { g.inverse() } else { g.clone() };
        for x in acc.iter_mut() {
            *x = step.apply(*x as usize) as u32;
        }
    }
    Perm::from_images(acc)
}

/// The action of a presentation on the `n` cosets of a subgroup `K`, with
/// coset 1 (point 0) standing for `K` itself.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubgroupRecord {
    perms: Vec<Perm>,
}

impl SubgroupRecord {
    /// Checks that every relator acts trivially and that the action is transitive.
    pub fn new(presentation: &GroupPresentation, perms: Vec<Perm>) -> Result<Self, GroupError> {
        if perms.len() != presentation.generator_count() {
            return Err(GroupError::WrongImageCount {
                expected: presentation.generator_count(),
                found: perms.len(),
            });
        }
        let degree = perms.first().map_or(1, Perm::degree);
        if perms.iter().any(|p| p.degree() != degree) {
            return Err(GroupError::NotAPermutation);
        }
        for (i, r) in presentation.relators().iter().enumerate() {
            if !word_eval(r, &perms, degree)?.is_identity() {
                return Err(GroupError::RelatorViolated {
                    index: i,
                    relator: r.display(presentation.names()).to_string(),
                });
            }
        }
        if !is_transitive(&perms, degree) {
            return Err(GroupError::NotTransitive);
        }
        Ok(SubgroupRecord { perms })
    }

    pub(crate) fn from_trusted(perms: Vec<Perm>) -> Self {
        SubgroupRecord { perms }
    }

    pub fn index(&self) -> usize {
        self.perms.first().map_or(1, Perm::degree)
    }

    pub fn perms(&self) -> &[Perm] {
        &self.perms
    }

    pub fn generator(&self, gen: usize) -> &Perm {
        &self.perms[gen]
    }

    pub fn eval(&self, word: &Word) -> Result<Perm, GroupError> {
        word_eval(word, &self.perms, self.index())
    }

    /// Sort key: index, then the image tables in generator order.
    pub fn sort_key(&self) -> (usize, Vec<u32>) {
        let flat = self.perms.iter().flat_map(|p| p.images().iter().copied()).collect();
        (self.index(), flat)
    }

    /// The generator-equivariant map sending point 0 to `target`, if any.
    pub fn equivariant_map(&self, target: usize) -> Option<Vec<usize>> {
        equivariant_map(&self.perms, &self.perms, target)
    }

    /// Order of `N(K)/K`, the deck group of the cover.
    ///
    /// This is the centralizer order of the action in the symmetric group:
    /// the number of points `j` for which `0 -> j` extends to an equivariant
    /// bijection.
    pub fn deck_group_order(&self) -> usize {
        (0..self.index()).filter(|&j| self.equivariant_map(j).is_some()).count()
    }

    /// Length of the conjugacy class of `K`: `[G : N(K)]`.
    pub fn class_length(&self) -> usize {
        self.index() / self.deck_group_order()
    }

    /// Whether `self` and `other` are the same action up to relabeling points.
    pub fn is_isomorphic(&self, other: &SubgroupRecord) -> bool {
        self.index() == other.index()
            && self.perms.len() == other.perms.len()
            && (0..other.index()).any(|j| equivariant_map(&self.perms, &other.perms, j).is_some())
    }

    /// For every generator with declared order `m`, every cycle has length
    /// exactly `m`.
    ///
    /// This detects torsion only when all finite-order elements are conjugate
    /// into the cyclic subgroups of those generators, which holds for the
    /// orbifold presentations used in this crate.
    pub fn is_torsion_free(&self, presentation: &GroupPresentation) -> Result<bool, GroupError> {
        if !presentation.has_declared_orders() {
            return Err(GroupError::MissingOrders);
        }
        Ok(presentation
            .orders()
            .iter()
            .zip(&self.perms)
            .all(|(order, perm)| match order {
                Some(m) => perm.cycle_lengths().iter().all(|&l| l == *m as usize),
                None => true,
            }))
    }

    /// Canonical text form: one cycle-notation string per generator.
    pub fn to_json(&self) -> RecordJson {
        RecordJson {
            index: self.index(),
            generators: self.perms.iter().map(Perm::to_cycle_string).collect(),
        }
    }

    pub fn from_json(presentation: &GroupPresentation, json: &RecordJson) -> Result<Self, GroupError> {
        let perms = json
            .generators
            .iter()
            .map(|s| Perm::parse_cycles(json.index, s))
            .collect::<Result<Vec<_>, _>>()?;
        SubgroupRecord::new(presentation, perms)
    }
}

/// Serialized form of a [`SubgroupRecord`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecordJson {
    pub index: usize,
    pub generators: Vec<String>,
}

impl Serialize for SubgroupRecord {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for SubgroupRecord {
    /// Deserializes without a presentation, so relators are not checked;
    /// use [`SubgroupRecord::from_json`] when they should be.
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let json = RecordJson::deserialize(d)?;
        let perms = json
            .generators
            .iter()
            .map(|s| Perm::parse_cycles(json.index, s))
            .collect::<Result<Vec<_>, _>>()
            .map_err(serde::de::Error::custom)?;
        if !is_transitive(&perms, json.index) {
            return Err(serde::de::Error::custom(GroupError::NotTransitive));
        }
        Ok(SubgroupRecord { perms })
    }
}

/// Builds the map `phi` with `phi(0) = target` and `phi(x.g) = phi(x).g'`
/// for all generators, returning it if it is a well-defined bijection.
pub(crate) fn equivariant_map(from: &[Perm], to: &[Perm], target: usize) -> Option<Vec<usize>> {
    let n = from.first().map_or(1, Perm::degree);
    const UNSET: usize = usize::MAX;
    let mut phi = vec![UNSET; n];
    let mut used = vec![false; n];
    phi[0] = target;
    used[target] = true;
    let mut queue = vec![0usize];
    let mut i = 0;
    while i < queue.len() {
        let x = queue[i];
        i += 1;
        for (g, h) in from.iter().zip(to) {
            let y = g.apply(x);
            let image = h.apply(phi[x]);
            if phi[y] == UNSET {
                if used[image] {
                    return None;
                }
                phi[y] = image;
                used[image] = true;
                queue.push(y);
            } else if phi[y] != image {
                return None;
            }
        }
    }
    (queue.len() == n).then_some(phi)
}
