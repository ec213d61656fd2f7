//! Orbits, group orders and element enumeration for small permutation groups.

use std::collections::HashMap;

use super::perm::Perm;
use super::GroupError;

/// Orbit of `point` under the group generated by `gens`.
pub fn orbit(gens: &[Perm], degree: usize, point: usize) -> Vec<usize> {
    let mut seen = vec![false; degree];
    let mut out = vec![point];
    seen[point] = true;
    let mut i = 0;
    while i < out.len() {
        let x = out[i];
        for g in gens {
            let y = g.apply(x);
            if !seen[y] {
                seen[y] = true;
                out.push(y);
            }
        }
        i += 1;
    }
    out
}

pub fn is_transitive(gens: &[Perm], degree: usize) -> bool {
    degree == 0 || orbit(gens, degree, 0).len() == degree
}

struct Level {
    base: usize,
    gens: Vec<Perm>,
    // transversal[p] maps the base point to p.
    transversal: Vec<Option<Perm>>,
    orbit: Vec<usize>,
}

impl Level {
    fn new(base: usize, degree: usize) -> Self {
        Level {
            base,
            gens: Vec::new(),
            transversal: vec![None; degree],
            orbit: Vec::new(),
        }
    }

    fn rebuild(&mut self, degree: usize) {
        self.transversal = vec![None; degree];
        self.transversal[self.base] = Some(Perm::identity(degree));
        self.orbit = vec![self.base];
        let mut i = 0;
        while i < self.orbit.len() {
            let q = self.orbit[i];
            for s in &self.gens {
                let r = s.apply(q);
                if self.transversal[r].is_none() {
                    let u = self.transversal[q].as_ref().unwrap().then(s);
                    self.transversal[r] = Some(u);
                    self.orbit.push(r);
                }
            }
            i += 1;
        }
    }
}

/// Stabilizer chain built by the deterministic Schreier–Sims algorithm.
pub struct StabilizerChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabilizerChain {
    pub fn new(gens: &[Perm], degree: usize) -> Self {
        let mut chain = StabilizerChain {
            degree,
            levels: Vec::new(),
        };
        for g in gens {
            assert_eq!(g.degree(), degree, "degree mismatch");
            if !g.is_identity() {
                chain.add_generator(0, g.clone());
            }
        }
        chain
    }

    fn sift(&self, start: usize, mut g: Perm) -> (Perm, usize) {
        for (i, level) in self.levels.iter().enumerate().skip(start) {
            let x = g.apply(level.base);
            match &level.transversal[x] {
                Some(u) => g = g.then(&u.inverse()),
                None => return (g, i),
            }
        }
        (g, self.levels.len())
    }

    fn add_generator(&mut self, depth: usize, g: Perm) {
        if depth == self.levels.len() {
            let base = (0..self.degree)
                .find(|&x| g.apply(x) != x)
                .expect("non-identity generator");
            self.levels.push(Level::new(base, self.degree));
        }
        self.levels[depth].gens.push(g);
        self.levels[depth].rebuild(self.degree);
        let mut k = 0;
        while k < self.levels[depth].orbit.len() {
            let p = self.levels[depth].orbit[k];
            let mut s_idx = 0;
            while s_idx < self.levels[depth].gens.len() {
                let level = &self.levels[depth];
                let s = &level.gens[s_idx];
                let up = level.transversal[p].as_ref().unwrap();
                let target = s.apply(p);
                let schreier = up.then(s).then(&level.transversal[target].as_ref().unwrap().inverse());
                let (residue, _) = self.sift(depth + 1, schreier);
                if !residue.is_identity() {
                    self.add_generator(depth + 1, residue);
                }
                s_idx += 1;
            }
            k += 1;
        }
    }

    pub fn order(&self) -> u128 {
        self.levels.iter().map(|l| l.orbit.len() as u128).product()
    }

    pub fn contains(&self, g: &Perm) -> bool {
        self.sift(0, g.clone()).0.is_identity()
    }
}

pub fn group_order(gens: &[Perm], degree: usize) -> u128 {
    StabilizerChain::new(gens, degree).order()
}

/// All elements of the group generated by `gens`, in breadth-first order from
/// the identity (right multiplication by generators).
pub fn enumerate_elements(gens: &[Perm], degree: usize, limit: usize) -> Result<Vec<Perm>, GroupError> {
    let mut elements = vec![Perm::identity(degree)];
    let mut index: HashMap<Perm, usize> = HashMap::new();
    index.insert(elements[0].clone(), 0);
    let mut i = 0;
    while i < elements.len() {
        for g in gens {
            let h = elements[i].then(g);
            if !index.contains_key(&h) {
                if elements.len() >= limit {
                    return Err(GroupError::Overflow(limit));
                }
                index.insert(h.clone(), elements.len());
                elements.push(h);
            }
        }
        i += 1;
    }
    Ok(elements)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: usize, s: &str) -> Perm {
        Perm::parse_cycles(n, s).unwrap()
    }

    #[test]
    fn symmetric_and_alternating_orders() {
        assert_eq!(group_order(&[p(4, "(1,2)"), p(4, "(1,2,3,4)")], 4), 24);
        assert_eq!(group_order(&[p(5, "(1,2,3)"), p(5, "(1,2,3,4,5)")], 5), 60);
        assert_eq!(group_order(&[p(8, "(1,2)"), p(8, "(1,2,3,4,5,6,7,8)")], 8), 40320);
        assert_eq!(group_order(&[], 3), 1);
    }

    #[test]
    fn order_matches_enumeration() {
        let gens = [p(6, "(1,2)(3,4)"), p(6, "(2,3,5)"), p(6, "(1,6)")];
        let chain = StabilizerChain::new(&gens, 6);
        let elems = enumerate_elements(&gens, 6, 10_000).unwrap();
        assert_eq!(chain.order(), elems.len() as u128);
        assert!(elems.iter().all(|e| chain.contains(e)));
    }

    #[test]
    fn membership() {
        let chain = StabilizerChain::new(&[p(4, "(1,2,3,4)")], 4);
        assert!(chain.contains(&p(4, "(1,3)(2,4)")));
        assert!(!chain.contains(&p(4, "(1,2)")));
    }

    #[test]
    fn enumeration_limit() {
        let gens = [p(6, "(1,2)"), p(6, "(1,2,3,4,5,6)")];
        assert!(matches!(
            enumerate_elements(&gens, 6, 100),
            Err(GroupError::Overflow(100))
        ));
    }

    #[test]
    fn orbits() {
        let gens = [p(5, "(1,2)"), p(5, "(3,4)")];
        assert_eq!(orbit(&gens, 5, 0), vec![0, 1]);
        assert!(!is_transitive(&gens, 5));
    }
}
