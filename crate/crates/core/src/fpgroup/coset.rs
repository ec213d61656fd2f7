//! Todd–Coxeter coset enumeration (HLT strategy with coincidence handling).

use super::perm::Perm;
use super::presentation::GroupPresentation;
use super::record::SubgroupRecord;
use super::word::{Letter, Word};
use super::GroupError;

const NONE: u32 = u32::MAX;

struct CosetTable {
    ncols: usize,
    table: Vec<u32>,
    parent: Vec<u32>,
    max_cosets: usize,
}

#[inline]
fn col(l: Letter) -> usize {
    2 * l.gen + l.inv as usize
}

impl CosetTable {
    fn new(ngens: usize, max_cosets: usize) -> Self {
        let ncols = 2 * ngens;
        CosetTable {
            ncols,
            table: vec![NONE; ncols],
            parent: vec![0],
            max_cosets,
        }
    }

    fn len(&self) -> usize {
        self.parent.len()
    }

    #[inline]
    fn get(&self, c: u32, x: usize) -> u32 {
        self.table[c as usize * self.ncols + x]
    }

    #[inline]
    fn set(&mut self, c: u32, x: usize, d: u32) {
        self.table[c as usize * self.ncols + x] = d;
    }

    fn is_live(&self, c: u32) -> bool {
        self.parent[c as usize] == c
    }

    fn define(&mut self, c: u32, x: usize) -> Result<(), GroupError> {
        if self.len() >= self.max_cosets {
            return Err(GroupError::Overflow(self.max_cosets));
        }
        let d = self.len() as u32;
        self.parent.push(d);
        self.table.extend(std::iter::repeat_n(NONE, self.ncols));
        self.set(c, x, d);
        self.set(d, x ^ 1, c);
        Ok(())
    }

    fn rep(&mut self, c: u32) -> u32 {
        let mut root = c;
        while self.parent[root as usize] != root {
            root = self.parent[root as usize];
        }
        let mut x = c;
        while self.parent[x as usize] != root {
            let next = self.parent[x as usize];
            self.parent[x as usize] = root;
            x = next;
        }
        root
    }

    fn merge(&mut self, k: u32, l: u32, queue: &mut Vec<u32>) {
        let a = self.rep(k);
        let b = self.rep(l);
        if a != b {
            let (lo, hi) = if a < b { (a, b) } else { (b, a) };
            self.parent[hi as usize] = lo;
            queue.push(hi);
        }
    }

    fn coincidence(&mut self, a: u32, b: u32) {
        let mut queue = Vec::new();
        self.merge(a, b, &mut queue);
        let mut i = 0;
        while i < queue.len() {
            let g = queue[i];
            i += 1;
            for x in 0..self.ncols {
                let d = self.get(g, x);
                if d == NONE {
                    continue;
                }
                self.set(d, x ^ 1, NONE);
                let mu = self.rep(g);
                let nu = self.rep(d);
                if self.get(mu, x) != NONE {
                    let t = self.get(mu, x);
                    self.merge(nu, t, &mut queue);
                } else if self.get(nu, x ^ 1) != NONE {
                    let t = self.get(nu, x ^ 1);
                    self.merge(mu, t, &mut queue);
                } else {
                    self.set(mu, x, nu);
                    self.set(nu, x ^ 1, mu);
                }
            }
        }
    }

    fn scan_and_fill(&mut self, start: u32, word: &[usize]) -> Result<(), GroupError> {
        if word.is_empty() {
            return Ok(());
        }
        let mut f = start;
        let mut b = start;
        let mut i = 0usize;
        let mut j = word.len();
        loop {
            while i < j && self.get(f, word[i]) != NONE {
                f = self.get(f, word[i]);
                i += 1;
            }
            if i == j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j > i && self.get(b, word[j - 1] ^ 1) != NONE {
                b = self.get(b, word[j - 1] ^ 1);
                j -= 1;
            }
            if j < i + 1 {
                self.coincidence(f, b);
                return Ok(());
            }
            if j == i + 1 {
                self.set(f, word[i], b);
                self.set(b, word[i] ^ 1, f);
                return Ok(());
            }
            self.define(f, word[i])?;
        }
    }
}

/// Enumerates the cosets of the subgroup generated by `subgroup_gens` and
/// returns the resulting action, numbered in breadth-first order from the
/// subgroup's own coset.
///
/// `max_cosets` bounds the number of cosets ever defined, not the final index.
pub fn coset_enumerate(
    presentation: &GroupPresentation,
    subgroup_gens: &[Word],
    max_cosets: usize,
) -> Result<SubgroupRecord, GroupError> {
    if max_cosets == 0 {
        return Err(GroupError::Overflow(0));
    }
    let ngens = presentation.generator_count();
    let to_cols = |w: &Word| -> Result<Vec<usize>, GroupError> {
        w.letters()
            .iter()
            .map(|&l| {
                if l.gen >= ngens {
                    Err(GroupError::BadIndex(l.gen, ngens))
                } else {
                    Ok(col(l))
                }
            })
            .collect()
    };
    let relators = presentation
        .relators()
        .iter()
        .map(to_cols)
        .collect::<Result<Vec<_>, _>>()?;
    let subgens = subgroup_gens
        .iter()
        .map(|w| to_cols(&w.reduced()))
        .collect::<Result<Vec<_>, _>>()?;

    let mut t = CosetTable::new(ngens, max_cosets);
    for w in &subgens {
        t.scan_and_fill(0, w)?;
    }
    let mut c = 0u32;
    while (c as usize) < t.len() {
        if t.is_live(c) {
            for r in &relators {
                if !t.is_live(c) {
                    break;
                }
                t.scan_and_fill(c, r)?;
            }
            for x in 0..t.ncols {
                if !t.is_live(c) {
                    break;
                }
                if t.get(c, x) == NONE {
                    t.define(c, x)?;
                }
            }
        }
        c += 1;
    }

    // Renumber the live cosets breadth-first from the subgroup coset.
    let start = t.rep(0);
    let mut order = vec![start];
    let mut label = vec![NONE; t.len()];
    label[start as usize] = 0;
    let mut i = 0;
    while i < order.len() {
        let c = order[i];
        for x in 0..t.ncols {
            let d = t.get(c, x);
            if label[d as usize] == NONE {
                label[d as usize] = order.len() as u32;
                order.push(d);
            }
        }
        i += 1;
    }
    let perms = (0..ngens)
        .map(|g| {
            let images = order.iter().map(|&c| label[t.get(c, 2 * g) as usize]).collect();
            Perm::from_images(images)
        })
        .collect::<Result<Vec<_>, _>>()?;
    SubgroupRecord::new(presentation, perms)
}
