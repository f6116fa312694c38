//! Finite semigroups stored as Cayley tables over element indices.

use std::collections::HashMap;

use crate::error::{Error, Result};

/// Default cap on the number of elements produced by transformation closure.
pub const DEFAULT_SIZE_LIMIT: usize = 100_000;

/// A finite set with an associative product on indices `0..order()`.
///
/// Implemented by [`Semigroup`] and by maximal subgroups (indexed by position),
/// so regular modules and hom-spaces can be written once.
pub trait Magma {
    fn order(&self) -> usize;
    fn product(&self, a: usize, b: usize) -> usize;
    /// Indices generating the whole structure under `product`.
    fn generators(&self) -> &[usize];
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Semigroup {
    size: usize,
    table: Vec<usize>,
    generators: Vec<usize>,
    /// Point images per element, when built from transformations.
    points: Option<Vec<Vec<usize>>>,
}

impl Semigroup {
    /// Validates a Cayley table, `table[s][t] = s*t`, including exhaustive
    /// associativity.
    pub fn from_cayley_table(table: &[Vec<usize>]) -> Result<Semigroup> {
        let n = table.len();
        if n == 0 || table.iter().any(|row| row.len() != n) {
            return Err(Error::MalformedTable);
        }
        for (s, row) in table.iter().enumerate() {
            for (t, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(Error::IndexOutOfRange {
                        row: s,
                        col: t,
                        value: v,
                        size: n,
                    });
                }
            }
        }
        let flat: Vec<usize> = table.iter().flatten().copied().collect();
        check_associative(n, &flat)?;
        let generators = greedy_generators(n, &flat);
        Ok(Semigroup {
            size: n,
            table: flat,
            generators,
            points: None,
        })
    }

    pub fn from_transformations(generators: &[Vec<usize>]) -> Result<Semigroup> {
        Semigroup::from_transformations_with_limit(generators, DEFAULT_SIZE_LIMIT)
    }

    /// Closure of a set of maps on `{0..d-1}` under composition, where `fg`
    /// means "apply `f`, then `g`". Elements are numbered breadth-first from
    /// the generators in the given order.
    pub fn from_transformations_with_limit(
        generators: &[Vec<usize>],
        limit: usize,
    ) -> Result<Semigroup> {
        let degree = generators
            .first()
            .map(Vec::len)
            .ok_or_else(|| Error::InvalidGenerators("no generators".into()))?;
        if degree == 0 {
            return Err(Error::InvalidGenerators("degree must be at least 1".into()));
        }
        for (k, g) in generators.iter().enumerate() {
            if g.len() != degree {
                return Err(Error::InvalidGenerators(format!(
                    "generator {k} has {} images, expected {degree}",
                    g.len()
                )));
            }
            if let Some(&x) = g.iter().find(|&&x| x >= degree) {
                return Err(Error::InvalidGenerators(format!(
                    "generator {k} maps to {x}, outside 0..{degree}"
                )));
            }
        }

        let compose = |f: &[usize], g: &[usize]| -> Vec<usize> { f.iter().map(|&x| g[x]).collect() };

        let mut elements: Vec<Vec<usize>> = Vec::new();
        let mut index: HashMap<Vec<usize>, usize> = HashMap::new();
        let mut gen_idx = Vec::new();
        for g in generators {
            let i = *index.entry(g.clone()).or_insert_with(|| {
                elements.push(g.clone());
                elements.len() - 1
            });
            if !gen_idx.contains(&i) {
                gen_idx.push(i);
            }
        }
        if elements.len() > limit {
            return Err(Error::SizeLimitExceeded(limit));
        }
        let mut next = 0;
        while next < elements.len() {
            for &g in &gen_idx {
                let p = compose(&elements[next], &elements[g]);
                if !index.contains_key(&p) {
                    if elements.len() == limit {
                        return Err(Error::SizeLimitExceeded(limit));
                    }
                    index.insert(p.clone(), elements.len());
                    elements.push(p);
                }
            }
            next += 1;
        }

        let n = elements.len();
        let mut table = vec![0; n * n];
        for s in 0..n {
            for t in 0..n {
                table[s * n + t] = index[&compose(&elements[s], &elements[t])];
            }
        }
        Ok(Semigroup {
            size: n,
            table,
            generators: gen_idx,
            points: Some(elements),
        })
    }

    /// `S¹`: a copy of `S` with a new identity appended at index `n`, even
    /// when `S` is already a monoid.
    pub fn adjoin_identity(&self) -> Semigroup {
        let n = self.size;
        let m = n + 1;
        let mut table = vec![0; m * m];
        for s in 0..m {
            for t in 0..m {
                table[s * m + t] = match (s == n, t == n) {
                    (true, _) => t,
                    (false, true) => s,
                    _ => self.mul(s, t),
                };
            }
        }
        let mut generators = self.generators.clone();
        generators.push(n);
        let points = self.points.as_ref().map(|pts| {
            let mut pts = pts.clone();
            let degree = pts.first().map_or(0, Vec::len);
            pts.push((0..degree).collect());
            pts
        });
        Semigroup {
            size: m,
            table,
            generators,
            points,
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn mul(&self, s: usize, t: usize) -> usize {
        self.table[s * self.size + t]
    }

    pub fn table(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.size).map(<[usize]>::to_vec).collect()
    }

    pub fn points(&self) -> Option<&[Vec<usize>]> {
        self.points.as_deref()
    }

    pub fn is_idempotent(&self, s: usize) -> bool {
        self.mul(s, s) == s
    }

    pub fn idempotents(&self) -> Vec<usize> {
        (0..self.size).filter(|&s| self.is_idempotent(s)).collect()
    }

    /// A two-sided identity, if one exists.
    pub fn identity(&self) -> Option<usize> {
        (0..self.size).find(|&e| (0..self.size).all(|s| self.mul(e, s) == s && self.mul(s, e) == s))
    }

    /// `{ s * x * t | x ∈ S }`, sorted.
    pub fn sandwich_set(&self, s: usize, t: usize) -> Vec<usize> {
        let mut out: Vec<usize> = (0..self.size).map(|x| self.mul(self.mul(s, x), t)).collect();
        out.sort_unstable();
        out.dedup();
        out
    }
}

impl Magma for Semigroup {
    fn order(&self) -> usize {
        self.size
    }

    fn product(&self, a: usize, b: usize) -> usize {
        self.mul(a, b)
    }

    fn generators(&self) -> &[usize] {
        &self.generators
    }
}

fn check_associative(n: usize, table: &[usize]) -> Result<()> {
    for s in 0..n {
        for t in 0..n {
            let st = table[s * n + t];
            for u in 0..n {
                if table[st * n + u] != table[s * n + table[t * n + u]] {
                    return Err(Error::NonAssociative(s, t, u));
                }
            }
        }
    }
    Ok(())
}

/// Walks elements in index order, keeping each one not yet generated.
pub(crate) fn greedy_generators(n: usize, table: &[usize]) -> Vec<usize> {
    let mut generated = vec![false; n];
    let mut gens = Vec::new();
    for s in 0..n {
        if generated[s] {
            continue;
        }
        gens.push(s);
        // Every word in the generators is reached by right multiplication.
        generated.iter_mut().for_each(|b| *b = false);
        let mut members = gens.clone();
        for &g in &gens {
            generated[g] = true;
        }
        let mut next = 0;
        while next < members.len() {
            let x = members[next];
            for &g in &gens {
                let p = table[x * n + g];
                if !generated[p] {
                    generated[p] = true;
                    members.push(p);
                }
            }
            next += 1;
        }
    }
    gens
}
