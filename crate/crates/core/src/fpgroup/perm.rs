//! Permutations of `{0..n}` with left-to-right composition.
//!
//! Points are stored 0-based; the textual cycle notation is 1-based, matching
//! the usual way permutations are written by hand.

use std::fmt;
use std::str::FromStr;

use super::GroupError;

/// A permutation of `{0, .., n-1}`, stored as its image table.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<u32>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm {
            images: (0..n as u32).collect(),
        }
    }

    /// Builds a permutation from an image table, checking bijectivity.
    pub fn from_images(images: Vec<u32>) -> Result<Self, GroupError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            let i = i as usize;
            if i >= n || seen[i] {
                return Err(GroupError::NotAPermutation);
            }
            seen[i] = true;
        }
        Ok(Perm { images })
    }

    /// Builds a permutation of degree `n` from 1-based cycles.
    pub fn from_cycles(n: usize, cycles: &[Vec<u32>]) -> Result<Self, GroupError> {
        let mut images: Vec<u32> = (0..n as u32).collect();
        let mut touched = vec![false; n];
        for cycle in cycles {
            for (k, &pt) in cycle.iter().enumerate() {
                if pt == 0 || pt as usize > n {
                    return Err(GroupError::PointOutOfRange(pt, n));
                }
                let from = (pt - 1) as usize;
                if touched[from] {
                    return Err(GroupError::NotAPermutation);
                }
                touched[from] = true;
                images[from] = cycle[(k + 1) % cycle.len()] - 1;
            }
        }
        Ok(Perm { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j as usize)
    }

    /// `self` followed by `other`: the point `x` goes to `other(self(x))`.
    pub fn then(&self, other: &Perm) -> Perm {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Perm {
            images: self.images.iter().map(|&i| other.images[i as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0u32; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j as usize] = i as u32;
        }
        Perm { images }
    }

    pub fn pow(&self, exp: i64) -> Perm {
        let base = if exp < 0 { self.inverse() } else { self.clone() };
        let mut acc = Perm::identity(self.degree());
        for _ in 0..exp.unsigned_abs() {
            acc = acc.then(&base);
        }
        acc
    }

    /// Cycles as 0-based point lists, each starting at its minimum, sorted by
    /// that minimum. Fixed points are included as 1-cycles.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x as u32);
                x = self.apply(x);
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_lengths(&self) -> Vec<usize> {
        self.cycles().iter().map(Vec::len).collect()
    }

    pub fn cycle_count(&self) -> usize {
        self.cycles().len()
    }

    pub fn fixed_points(&self) -> usize {
        self.images
            .iter()
            .enumerate()
            .filter(|&(i, &j)| i == j as usize)
            .count()
    }

    /// Order of the permutation (lcm of cycle lengths).
    pub fn order(&self) -> u64 {
        self.cycle_lengths().into_iter().fold(1u64, |acc, l| lcm(acc, l as u64))
    }

    /// Canonical 1-based cycle notation: cycles sorted by minimum element,
    /// fixed points omitted, identity written `()`.
    pub fn to_cycle_string(&self) -> String {
        let mut s = String::new();
        for cycle in self.cycles() {
            if cycle.len() < 2 {
                continue;
            }
            s.push('(');
            let parts: Vec<String> = cycle.iter().map(|p| (p + 1).to_string()).collect();
            s.push_str(&parts.join(","));
            s.push(')');
        }
        if s.is_empty() {
            s.push_str("()");
        }
        s
    }

    /// Parses cycle notation such as `(1,2)(3,4)` into a permutation of degree `n`.
    pub fn parse_cycles(n: usize, text: &str) -> Result<Self, GroupError> {
        let mut cycles = Vec::new();
        let mut rest = text.trim();
        while !rest.is_empty() {
            let body = rest
                .strip_prefix('(')
                .ok_or_else(|| GroupError::Parse(format!("expected '(' in {text:?}")))?;
            let close = body
                .find(')')
                .ok_or_else(|| GroupError::Parse(format!("unclosed cycle in {text:?}")))?;
            let inner = body[..close].trim();
            if !inner.is_empty() {
                let cycle = inner
                    .split([',', ' '])
                    .filter(|t| !t.is_empty())
                    .map(|t| {
                        t.trim()
                            .parse::<u32>()
                            .map_err(|_| GroupError::Parse(format!("bad point {t:?} in {text:?}")))
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                cycles.push(cycle);
            }
            rest = body[close + 1..].trim_start();
        }
        Perm::from_cycles(n, &cycles)
    }

    /// Smallest degree on which the cycle notation makes sense.
    pub fn degree_of_cycle_string(text: &str) -> usize {
        text.split(|c: char| !c.is_ascii_digit())
            .filter_map(|t| t.parse::<usize>().ok())
            .max()
            .unwrap_or(0)
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_cycle_string())
    }
}

impl FromStr for Perm {
    type Err = GroupError;

    /// Parses cycle notation, taking the degree from the largest point named.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Perm::parse_cycles(Perm::degree_of_cycle_string(s), s)
    }
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}
