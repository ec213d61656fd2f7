use std::fmt;

use super::perm::gcd;
use super::word::Word;
use super::GroupError;

/// A finitely presented group `<generators | relators>`.
///
/// Generators may carry a declared finite order `n`; the relator `g^n` is
/// then always present. Relators are stored freely reduced and nonempty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupPresentation {
    names: Vec<String>,
    relators: Vec<Word>,
    orders: Vec<Option<u32>>,
}

impl GroupPresentation {
    pub fn new(names: Vec<String>, relators: Vec<Word>, orders: Vec<Option<u32>>) -> Result<Self, GroupError> {
        if orders.len() != names.len() {
            return Err(GroupError::Parse(format!(
                "{} generators but {} declared orders",
                names.len(),
                orders.len()
            )));
        }
        let mut reduced = Vec::with_capacity(relators.len());
        for r in relators {
            if let Some(l) = r.letters().iter().find(|l| l.gen >= names.len()) {
                return Err(GroupError::BadIndex(l.gen, names.len()));
            }
            let r = r.reduced();
            if r.is_empty() {
                return Err(GroupError::EmptyRelator);
            }
            reduced.push(r);
        }
        for (g, order) in orders.iter().enumerate() {
            let Some(n) = *order else { continue };
            if n == 0 {
                return Err(GroupError::Parse("declared order 0".into()));
            }
            let present = reduced
                .iter()
                .any(|r| matches!(r.as_power(), Some((h, k)) if h == g && k.unsigned_abs() == n as u64));
            if !present {
                reduced.push(Word::power_of(g, n as i64));
            }
        }
        Ok(GroupPresentation {
            names,
            relators: reduced,
            orders,
        })
    }

    /// Parses `<a, b | a^2, b^6, (ab)^9>`.
    ///
    /// A generator's declared order is taken from its pure-power relators
    /// (the gcd of their exponents); generators without one have infinite order.
    pub fn parse(text: &str) -> Result<Self, GroupError> {
        let body = text
            .trim()
            .strip_prefix('<')
            .and_then(|t| t.strip_suffix('>'))
            .ok_or_else(|| GroupError::Parse(format!("expected <gens | rels> in {text:?}")))?;
        let (gens, rels) = body.split_once('|').unwrap_or((body, ""));
        let names: Vec<String> = gens
            .split(',')
            .map(|s| s.trim().to_string())
            .filter(|s| !s.is_empty())
            .collect();
        for name in &names {
            let mut chars = name.chars();
            let ok = chars.next().is_some_and(|c| c.is_ascii_alphabetic()) && chars.all(|c| c.is_ascii_digit());
            if !ok {
                return Err(GroupError::Parse(format!("bad generator name {name:?}")));
            }
        }
        let relators = rels
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|s| Word::parse(s, &names))
            .collect::<Result<Vec<_>, _>>()?;
        let mut orders = vec![None; names.len()];
        for r in &relators {
            if let Some((g, k)) = r.reduced().as_power() {
                let k = k.unsigned_abs();
                orders[g] = Some(match orders[g] {
                    None => k as u32,
                    Some(prev) => gcd(prev as u64, k) as u32,
                });
            }
        }
        GroupPresentation::new(names, relators, orders)
    }

    /// The orbifold group of signature `(0; m_1, .., m_k)`:
    /// `<x1, .., xk | x1^m1, .., xk^mk, x1 x2 .. xk>`.
    pub fn planar_orbifold(orders: &[u32]) -> Result<Self, GroupError> {
        let names: Vec<String> = (1..=orders.len()).map(|i| format!("x{i}")).collect();
        let product = Word((0..orders.len()).map(super::word::Letter::gen).collect());
        let relators = if orders.is_empty() { vec![] } else { vec![product] };
        GroupPresentation::new(names, relators, orders.iter().map(|&m| Some(m)).collect())
    }

    /// The modular group `PSL(2, Z) = <b, c | b^2, c^3>`.
    pub fn modular() -> Self {
        GroupPresentation::new(vec!["b".into(), "c".into()], vec![], vec![Some(2), Some(3)])
            .expect("valid presentation")
    }

    /// The same group with generator `gen` replaced by its inverse.
    ///
    /// `<a,b,c,d | .., a b c d^-1>` and `<a,b,c,d | .., a b c d>` are related
    /// this way; images of the other generators are unchanged.
    pub fn invert_generator(&self, gen: usize) -> Result<Self, GroupError> {
        if gen >= self.names.len() {
            return Err(GroupError::BadIndex(gen, self.names.len()));
        }
        let relators = self
            .relators
            .iter()
            .map(|r| {
                Word(
                    r.letters()
                        .iter()
                        .map(|&l| if l.gen == gen { l.inverse() } else { l })
                        .collect(),
                )
            })
            .collect();
        GroupPresentation::new(self.names.clone(), relators, self.orders.clone())
    }

    pub fn generator_count(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn orders(&self) -> &[Option<u32>] {
        &self.orders
    }

    pub fn has_declared_orders(&self) -> bool {
        self.orders.iter().any(Option::is_some)
    }

    pub fn generator(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn parse_word(&self, text: &str) -> Result<Word, GroupError> {
        Word::parse(text, &self.names)
    }
}

impl fmt::Display for GroupPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{} | ", self.names.join(", "))?;
        let rels: Vec<String> = self
            .relators
            .iter()
            .map(|r| r.display(&self.names).to_string())
            .collect();
        write!(f, "{}>", rels.join(", "))
    }
}
