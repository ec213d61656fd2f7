//! Homomorphisms onto finite permutation groups and their kernels.

use std::collections::HashMap;

use super::perm::Perm;
use super::permgroup::{enumerate_elements, group_order, is_transitive};
use super::presentation::GroupPresentation;
use super::record::{word_eval, SubgroupRecord};
use super::GroupError;

/// Largest image group [`kernel_record`] will enumerate.
pub const KERNEL_ELEMENT_LIMIT: usize = 1_000_000;

/// Generator images of a homomorphism into `Sym(degree)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteQuotientMap {
    degree: usize,
    images: Vec<Perm>,
    image_order: Option<u128>,
    surjective: bool,
}

impl FiniteQuotientMap {
    /// Unverified images; see [`verify_quotient_map`].
    pub fn new(images: Vec<Perm>) -> Result<Self, GroupError> {
        let degree = images.first().map_or(1, Perm::degree);
        if images.iter().any(|p| p.degree() != degree) {
            return Err(GroupError::NotAPermutation);
        }
        Ok(FiniteQuotientMap {
            degree,
            images,
            image_order: None,
            surjective: false,
        })
    }

    /// Parses one cycle-notation image per generator on `degree` points.
    pub fn from_cycles(degree: usize, images: &[&str]) -> Result<Self, GroupError> {
        let perms = images
            .iter()
            .map(|s| Perm::parse_cycles(degree, s))
            .collect::<Result<Vec<_>, _>>()?;
        FiniteQuotientMap::new(perms)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn images(&self) -> &[Perm] {
        &self.images
    }

    /// Order of the image group, once verified.
    pub fn image_order(&self) -> Option<u128> {
        self.image_order
    }

    pub fn is_surjective(&self) -> bool {
        self.surjective
    }
}

/// Checks that every relator maps to the identity and that the images
/// generate a transitive group of order `expected_order`.
pub fn verify_quotient_map(
    presentation: &GroupPresentation,
    map: &FiniteQuotientMap,
    expected_order: u128,
) -> Result<FiniteQuotientMap, GroupError> {
    if map.images.len() != presentation.generator_count() {
        return Err(GroupError::WrongImageCount {
            expected: presentation.generator_count(),
            found: map.images.len(),
        });
    }
    for (i, r) in presentation.relators().iter().enumerate() {
        if !word_eval(r, &map.images, map.degree)?.is_identity() {
            return Err(GroupError::RelatorViolated {
                index: i,
                relator: r.display(presentation.names()).to_string(),
            });
        }
    }
    let order = group_order(&map.images, map.degree);
    if order != expected_order || !is_transitive(&map.images, map.degree) {
        return Err(GroupError::NotSurjective {
            expected: expected_order,
            found: order,
        });
    }
    Ok(FiniteQuotientMap {
        image_order: Some(order),
        surjective: true,
        ..map.clone()
    })
}

/// The regular action of the image group by right translation. Its basepoint
/// stabilizer is the kernel of the map, and the index is the image order.
pub fn kernel_record(map: &FiniteQuotientMap) -> Result<SubgroupRecord, GroupError> {
    if !map.surjective {
        return Err(GroupError::NotVerified);
    }
    let elements = enumerate_elements(&map.images, map.degree, KERNEL_ELEMENT_LIMIT)?;
    let position: HashMap<&Perm, u32> = elements.iter().enumerate().map(|(i, e)| (e, i as u32)).collect();
    let perms = map
        .images
        .iter()
        .map(|g| {
            let table = elements.iter().map(|e| position[&e.then(g)]).collect();
            Perm::from_images(table)
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(SubgroupRecord::from_trusted(perms))
}
