//! Green's relations, regular J-classes, maximal subgroups and the per-class
//! data (R- and L-class of the chosen idempotent, orbit transversals,
//! sandwich matrix) used by the representation constructions.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::semigroup::{greedy_generators, Magma, Semigroup};

/// Membership vector of a subset of `S`.
type Subset = Vec<bool>;

fn members(set: &Subset) -> Vec<usize> {
    set.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i).collect()
}

/// `S¹s`.
fn left_ideal(s: &Semigroup, x: usize) -> Subset {
    let mut out = vec![false; s.size()];
    out[x] = true;
    for t in 0..s.size() {
        out[s.mul(t, x)] = true;
    }
    out
}

/// `sS¹`.
fn right_ideal(s: &Semigroup, x: usize) -> Subset {
    let mut out = vec![false; s.size()];
    out[x] = true;
    for t in 0..s.size() {
        out[s.mul(x, t)] = true;
    }
    out
}

/// `S¹sS¹`.
fn two_sided_ideal(s: &Semigroup, x: usize) -> Subset {
    let left = left_ideal(s, x);
    let mut out = left.clone();
    for l in members(&left) {
        for t in 0..s.size() {
            out[s.mul(l, t)] = true;
        }
    }
    out
}

/// Groups elements by key; classes are ordered by their minimum element.
fn partition_by<K: std::hash::Hash + Eq>(keys: Vec<K>) -> (Vec<Vec<usize>>, Vec<usize>) {
    let mut ids: HashMap<K, usize> = HashMap::new();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut class_of = Vec::with_capacity(keys.len());
    for (x, k) in keys.into_iter().enumerate() {
        let id = *ids.entry(k).or_insert_with(|| {
            classes.push(Vec::new());
            classes.len() - 1
        });
        classes[id].push(x);
        class_of.push(id);
    }
    (classes, class_of)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GreenStructure {
    pub r_classes: Vec<Vec<usize>>,
    pub l_classes: Vec<Vec<usize>>,
    pub j_classes: Vec<Vec<usize>>,
    pub h_classes: Vec<Vec<usize>>,
    pub r_of: Vec<usize>,
    pub l_of: Vec<usize>,
    pub j_of: Vec<usize>,
    pub h_of: Vec<usize>,
    /// Covering pairs `(lower, upper)` of the J-order.
    pub j_order: Vec<(usize, usize)>,
    pub regular: Vec<bool>,
    pub idempotents: Vec<usize>,
    /// `e_J`: the minimum-index idempotent of each regular J-class.
    pub apex_transversal: Vec<Option<usize>>,
    /// Principal two-sided ideal of each J-class, as membership vectors.
    principal: Vec<Subset>,
}

/// Computes all four Green partitions from principal ideals.
pub fn green_structure(s: &Semigroup) -> Result<GreenStructure> {
    let n = s.size();
    let rights: Vec<Subset> = (0..n).map(|x| right_ideal(s, x)).collect();
    let lefts: Vec<Subset> = (0..n).map(|x| left_ideal(s, x)).collect();
    let twos: Vec<Subset> = (0..n).map(|x| two_sided_ideal(s, x)).collect();

    let (r_classes, r_of) = partition_by(rights);
    let (l_classes, l_of) = partition_by(lefts);
    let (j_classes, j_of) = partition_by(twos.clone());
    let (h_classes, h_of) = partition_by((0..n).map(|x| (r_of[x], l_of[x])).collect());

    let principal: Vec<Subset> = j_classes.iter().map(|c| twos[c[0]].clone()).collect();
    let k = j_classes.len();
    let leq = |a: usize, b: usize| principal[b][j_classes[a][0]];

    let mut j_order = Vec::new();
    for a in 0..k {
        for b in 0..k {
            if a == b || !leq(a, b) {
                continue;
            }
            let covered = (0..k).any(|c| c != a && c != b && leq(a, c) && leq(c, b));
            if !covered {
                j_order.push((a, b));
            }
        }
    }

    let idempotents = s.idempotents();
    let mut regular = vec![false; k];
    let mut apex_transversal = vec![None; k];
    for (j, class) in j_classes.iter().enumerate() {
        let first_idem = class.iter().copied().find(|&x| s.is_idempotent(x));
        let square_meets = class
            .iter()
            .any(|&x| class.iter().any(|&y| j_of[s.mul(x, y)] == j));
        if first_idem.is_some() != square_meets {
            return Err(Error::InternalInconsistency(format!(
                "J-class {j}: idempotent test and J²∩J test disagree"
            )));
        }
        regular[j] = first_idem.is_some();
        apex_transversal[j] = first_idem;
    }

    Ok(GreenStructure {
        r_classes,
        l_classes,
        j_classes,
        h_classes,
        r_of,
        l_of,
        j_of,
        h_of,
        j_order,
        regular,
        idempotents,
        apex_transversal,
        principal,
    })
}

impl GreenStructure {
    pub fn j_class_count(&self) -> usize {
        self.j_classes.len()
    }

    pub fn regular_classes(&self) -> Vec<usize> {
        (0..self.j_classes.len()).filter(|&j| self.regular[j]).collect()
    }

    /// `a ≤_J b`, from ideal containment.
    pub fn j_leq(&self, a: usize, b: usize) -> bool {
        self.principal[b][self.j_classes[a][0]]
    }

    /// Sorted principal ideal `S¹sS¹` of any element of class `j`.
    pub fn principal_ideal(&self, j: usize) -> Vec<usize> {
        members(&self.principal[j])
    }

    fn check_class(&self, j: usize) -> Result<()> {
        if j >= self.j_classes.len() {
            return Err(Error::UnknownJClass(j));
        }
        Ok(())
    }

    /// `I_J = { s | J ⊄ S¹sS¹ }`, checked to be a two-sided ideal.
    pub fn ideal_i_j(&self, s: &Semigroup, j: usize) -> Result<Vec<usize>> {
        self.check_class(j)?;
        let rep = self.j_classes[j][0];
        let inside: Vec<bool> = self.j_of.iter().map(|&jx| !self.principal[jx][rep]).collect();
        let ideal = members(&inside);
        for &x in &ideal {
            for t in 0..s.size() {
                if !inside[s.mul(x, t)] || !inside[s.mul(t, x)] {
                    return Err(Error::InternalInconsistency(format!(
                        "I_J for J-class {j} is not an ideal"
                    )));
                }
            }
        }
        Ok(ideal)
    }

    /// Idempotents of class `j`, ascending.
    pub fn idempotents_in(&self, j: usize) -> Vec<usize> {
        self.idempotents
            .iter()
            .copied()
            .filter(|&e| self.j_of[e] == j)
            .collect()
    }
}

/// The group of units of `eSe`, indexed by position in `elements`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaxSubgroup {
    identity: usize,
    elements: Vec<usize>,
    table: Vec<usize>,
    inverse: Vec<usize>,
    generators: Vec<usize>,
}

impl MaxSubgroup {
    /// The idempotent `e` (a semigroup element index).
    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn identity_pos(&self) -> usize {
        self.position(self.identity).expect("identity is a member")
    }

    /// Semigroup element indices, ascending.
    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn element(&self, pos: usize) -> usize {
        self.elements[pos]
    }

    pub fn position(&self, element: usize) -> Option<usize> {
        self.elements.binary_search(&element).ok()
    }

    pub fn inverse(&self, pos: usize) -> usize {
        self.inverse[pos]
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

impl Magma for MaxSubgroup {
    fn order(&self) -> usize {
        self.elements.len()
    }

    fn product(&self, a: usize, b: usize) -> usize {
        self.table[a * self.elements.len() + b]
    }

    fn generators(&self) -> &[usize] {
        &self.generators
    }
}

/// The maximal subgroup at `e`: units of `eSe`, cross-checked against
/// `eSe ∩ J_e`.
pub fn maximal_subgroup(s: &Semigroup, e: usize) -> Result<MaxSubgroup> {
    if e >= s.size() || !s.is_idempotent(e) {
        return Err(Error::NotIdempotent(e));
    }
    let local = s.sandwich_set(e, e);
    let units: Vec<usize> = local
        .iter()
        .copied()
        .filter(|&x| local.iter().any(|&y| s.mul(x, y) == e && s.mul(y, x) == e))
        .collect();
    let in_j: Vec<usize> = local
        .iter()
        .copied()
        .filter(|&x| two_sided_ideal(s, x)[e])
        .collect();
    if units != in_j {
        return Err(Error::InternalInconsistency(format!(
            "units of eSe differ from eSe ∩ J at e = {e}"
        )));
    }

    let k = units.len();
    let pos: HashMap<usize, usize> = units.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    let mut table = vec![0; k * k];
    for a in 0..k {
        for b in 0..k {
            let p = s.mul(units[a], units[b]);
            table[a * k + b] = *pos.get(&p).ok_or_else(|| {
                Error::InternalInconsistency(format!("maximal subgroup at {e} not closed"))
            })?;
        }
    }
    let id = pos[&e];
    let mut inverse = vec![0; k];
    for a in 0..k {
        inverse[a] = (0..k)
            .find(|&b| table[a * k + b] == id && table[b * k + a] == id)
            .ok_or_else(|| Error::InternalInconsistency(format!("no inverse in G_{e}")))?;
    }
    let generators = greedy_generators(k, &table);
    Ok(MaxSubgroup {
        identity: e,
        elements: units,
        table,
        inverse,
        generators,
    })
}

/// A pair `x ∈ eSf`, `x' ∈ fSe` with `xx' = e` and `x'x = f`, found by
/// exhaustive search.
pub fn idempotents_isomorphic(s: &Semigroup, e: usize, f: usize) -> Result<Option<(usize, usize)>> {
    for x in [e, f] {
        if x >= s.size() || !s.is_idempotent(x) {
            return Err(Error::NotIdempotent(x));
        }
    }
    if e == f {
        return Ok(Some((e, e)));
    }
    let ef = s.sandwich_set(e, f);
    let fe = s.sandwich_set(f, e);
    for &x in &ef {
        for &y in &fe {
            if s.mul(x, y) == e && s.mul(y, x) == f {
                return Ok(Some((x, y)));
            }
        }
    }
    Ok(None)
}

/// Combinatorial data of a regular J-class at a chosen idempotent `e`.
///
/// `l_transversal` holds one representative per left `G`-orbit on `R_e`
/// (these orbits correspond to the L-classes of `J`, `n` of them);
/// `r_transversal` one per right `G`-orbit on `L_e` (R-classes, `m` of them).
/// `sandwich[b][a]` is the group position of `r_a * l_b` when that product
/// lies in `J`, otherwise `None` (the zero entry).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JClassData {
    pub j_class: usize,
    pub idempotent: usize,
    pub group: MaxSubgroup,
    /// `R_e = eS ∩ J`.
    pub r_class: Vec<usize>,
    /// `L_e = Se ∩ J`.
    pub l_class: Vec<usize>,
    pub l_transversal: Vec<usize>,
    pub r_transversal: Vec<usize>,
    pub sandwich: Vec<Vec<Option<usize>>>,
    /// `I_J`.
    pub ideal: Vec<usize>,
    /// Per element of `R_e`: `(g, a)` with `r = g * t_a`.
    r_factor: Vec<Option<(usize, usize)>>,
    /// Per element of `L_e`: `(b, g)` with `l = l_b * g`.
    l_factor: Vec<Option<(usize, usize)>>,
}

impl JClassData {
    /// Number of L-classes in `J`.
    pub fn n(&self) -> usize {
        self.l_transversal.len()
    }

    /// Number of R-classes in `J`.
    pub fn m(&self) -> usize {
        self.r_transversal.len()
    }

    /// `r = g * t_a` for `r ∈ R_e`, as `(group position, transversal index)`.
    pub fn factor_right(&self, r: usize) -> Option<(usize, usize)> {
        self.r_factor.get(r).copied().flatten()
    }

    /// `l = l_b * g` for `l ∈ L_e`, as `(transversal index, group position)`.
    pub fn factor_left(&self, l: usize) -> Option<(usize, usize)> {
        self.l_factor.get(l).copied().flatten()
    }

    pub fn in_ideal(&self, x: usize) -> bool {
        self.ideal.binary_search(&x).is_ok()
    }
}

pub fn jclass_data(s: &Semigroup, green: &GreenStructure, j: usize) -> Result<JClassData> {
    green.check_class(j)?;
    let e = green.apex_transversal[j].ok_or(Error::NotRegular(j))?;
    jclass_data_at(s, green, j, e)
}

/// As [`jclass_data`] but with an arbitrary idempotent `e` of the class.
pub fn jclass_data_at(s: &Semigroup, green: &GreenStructure, j: usize, e: usize) -> Result<JClassData> {
    green.check_class(j)?;
    if !green.regular[j] {
        return Err(Error::NotRegular(j));
    }
    if e >= s.size() || !s.is_idempotent(e) || green.j_of[e] != j {
        return Err(Error::NotIdempotent(e));
    }
    let n_elems = s.size();
    let group = maximal_subgroup(s, e)?;
    let in_j = |x: usize| green.j_of[x] == j;

    let mut r_class: Vec<usize> = (0..n_elems).map(|t| s.mul(e, t)).filter(|&x| in_j(x)).collect();
    r_class.sort_unstable();
    r_class.dedup();
    let mut l_class: Vec<usize> = (0..n_elems).map(|t| s.mul(t, e)).filter(|&x| in_j(x)).collect();
    l_class.sort_unstable();
    l_class.dedup();

    // Left G-orbits on R_e.
    let mut r_factor = vec![None; n_elems];
    let mut l_transversal = Vec::new();
    for &r in &r_class {
        if r_factor[r].is_some() {
            continue;
        }
        let a = l_transversal.len();
        l_transversal.push(r);
        for g in 0..group.len() {
            let x = s.mul(group.element(g), r);
            if r_factor[x].is_some() {
                return Err(Error::InternalInconsistency(format!(
                    "left action of G on R_e is not free at {x}"
                )));
            }
            r_factor[x] = Some((g, a));
        }
    }
    if r_class.len() != group.len() * l_transversal.len() {
        return Err(Error::InternalInconsistency("|R_e| != |G|·n".into()));
    }

    // Right G-orbits on L_e.
    let mut l_factor = vec![None; n_elems];
    let mut r_transversal = Vec::new();
    for &l in &l_class {
        if l_factor[l].is_some() {
            continue;
        }
        let b = r_transversal.len();
        r_transversal.push(l);
        for g in 0..group.len() {
            let x = s.mul(l, group.element(g));
            if l_factor[x].is_some() {
                return Err(Error::InternalInconsistency(format!(
                    "right action of G on L_e is not free at {x}"
                )));
            }
            l_factor[x] = Some((b, g));
        }
    }
    if l_class.len() != group.len() * r_transversal.len() {
        return Err(Error::InternalInconsistency("|L_e| != |G|·m".into()));
    }

    let mut sandwich = Vec::with_capacity(r_transversal.len());
    for &l in &r_transversal {
        let mut row = Vec::with_capacity(l_transversal.len());
        for &r in &l_transversal {
            let p = s.mul(r, l);
            if s.mul(s.mul(e, p), e) != p {
                return Err(Error::InternalInconsistency(format!(
                    "sandwich entry {r}*{l} outside eSe"
                )));
            }
            if in_j(p) {
                let g = group.position(p).ok_or_else(|| {
                    Error::InternalInconsistency(format!("eSe ∩ J element {p} outside G_e"))
                })?;
                row.push(Some(g));
            } else {
                row.push(None);
            }
        }
        sandwich.push(row);
    }

    let ideal = green.ideal_i_j(s, j)?;
    Ok(JClassData {
        j_class: j,
        idempotent: e,
        group,
        r_class,
        l_class,
        l_transversal,
        r_transversal,
        sandwich,
        ideal,
        r_factor,
        l_factor,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn left_zero() -> Semigroup {
        Semigroup::from_cayley_table(&[vec![0, 0], vec![1, 1]]).unwrap()
    }

    fn t2() -> Semigroup {
        Semigroup::from_transformations(&[vec![1, 0], vec![0, 0]]).unwrap()
    }

    fn rect_band(rows: usize, cols: usize) -> Semigroup {
        let n = rows * cols;
        let table = (0..n)
            .map(|x| (0..n).map(|y| (x / cols) * cols + y % cols).collect())
            .collect::<Vec<Vec<usize>>>();
        Semigroup::from_cayley_table(&table).unwrap()
    }

    /// Partitions straight from the definitions: `s R t` iff each lies in
    /// the other's right ideal `sS¹`, and so on.
    fn oracle_partition(s: &Semigroup, ideal: impl Fn(usize) -> Vec<usize>) -> Vec<Vec<usize>> {
        let n = s.size();
        let ideals: Vec<Vec<usize>> = (0..n).map(&ideal).collect();
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for x in 0..n {
            match classes.iter_mut().find(|c| ideals[c[0]] == ideals[x]) {
                Some(c) => c.push(x),
                None => classes.push(vec![x]),
            }
        }
        classes
    }

    fn oracle_right(s: &Semigroup, x: usize) -> Vec<usize> {
        let mut v: Vec<usize> = std::iter::once(x).chain((0..s.size()).map(|t| s.mul(x, t))).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    fn oracle_left(s: &Semigroup, x: usize) -> Vec<usize> {
        let mut v: Vec<usize> = std::iter::once(x).chain((0..s.size()).map(|t| s.mul(t, x))).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    fn oracle_two(s: &Semigroup, x: usize) -> Vec<usize> {
        let s1 = s.adjoin_identity();
        let mut v: Vec<usize> = (0..s1.size())
            .flat_map(|a| (0..s1.size()).map(move |b| (a, b)))
            .map(|(a, b)| s1.mul(s1.mul(a, x), b))
            .collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    #[test]
    fn left_zero_partitions_match_oracle() {
        let s = left_zero();
        let g = green_structure(&s).unwrap();
        assert_eq!(g.j_classes, oracle_partition(&s, |x| oracle_two(&s, x)));
        assert_eq!(g.r_classes, oracle_partition(&s, |x| oracle_right(&s, x)));
        assert_eq!(g.l_classes, oracle_partition(&s, |x| oracle_left(&s, x)));
        // xy = x: aS¹ = {a}, S¹a = {a, b}.
        assert_eq!(g.j_classes, vec![vec![0, 1]]);
        assert_eq!(g.r_classes, vec![vec![0], vec![1]]);
        assert_eq!(g.l_classes, vec![vec![0, 1]]);
        assert!(g.regular[0]);
    }

    #[test]
    fn t2_has_two_regular_classes() {
        let s = t2();
        let g = green_structure(&s).unwrap();
        assert_eq!(g.j_classes, oracle_partition(&s, |x| oracle_two(&s, x)));
        let pts = s.points().unwrap();
        let ranks: Vec<usize> = g
            .j_classes
            .iter()
            .map(|c| {
                let mut im = pts[c[0]].clone();
                im.sort();
                im.dedup();
                im.len()
            })
            .collect();
        assert_eq!(g.j_classes.len(), 2);
        assert!(g.regular.iter().all(|&r| r));
        let top = ranks.iter().position(|&r| r == 2).unwrap();
        let bottom = 1 - top;
        assert_eq!(g.j_classes[top].len(), 2);
        assert_eq!(g.j_order, vec![(bottom, top)]);
        let ideal = g.ideal_i_j(&s, top).unwrap();
        assert_eq!(ideal, g.j_classes[bottom]);
        assert!(g.ideal_i_j(&s, bottom).unwrap().is_empty());
    }

    #[test]
    fn groups_are_one_class() {
        let c2 = Semigroup::from_cayley_table(&[vec![0, 1], vec![1, 0]]).unwrap();
        let g = green_structure(&c2).unwrap();
        assert_eq!(g.j_classes, vec![vec![0, 1]]);
        assert!(g.j_order.is_empty());
        assert!(g.ideal_i_j(&c2, 0).unwrap().is_empty());
    }

    #[test]
    fn chain_semilattice_ideal() {
        let s = Semigroup::from_cayley_table(&[vec![0, 0], vec![0, 1]]).unwrap();
        let g = green_structure(&s).unwrap();
        let top = g.j_of[1];
        assert_eq!(g.ideal_i_j(&s, top).unwrap(), vec![0]);
    }

    #[test]
    fn nonregular_class_detected() {
        // {1, a, 0} with a² = 0: the class {a} is not regular.
        let s = Semigroup::from_cayley_table(&[vec![0, 1, 2], vec![1, 2, 2], vec![2, 2, 2]]).unwrap();
        let g = green_structure(&s).unwrap();
        assert!(!g.regular[g.j_of[1]]);
        assert!(g.regular[g.j_of[0]] && g.regular[g.j_of[2]]);
        assert_eq!(
            jclass_data(&s, &g, g.j_of[1]).unwrap_err(),
            Error::NotRegular(g.j_of[1])
        );
    }

    #[test]
    fn maximal_subgroup_orders() {
        let triv = Semigroup::from_cayley_table(&[vec![0]]).unwrap();
        assert_eq!(maximal_subgroup(&triv, 0).unwrap().len(), 1);
        let s = t2();
        let id = s.identity().unwrap();
        assert_eq!(maximal_subgroup(&s, id).unwrap().len(), 2);
        let t3 = Semigroup::from_transformations(&[vec![1, 0, 2], vec![1, 2, 0], vec![0, 0, 2]]).unwrap();
        let g = maximal_subgroup(&t3, t3.identity().unwrap()).unwrap();
        assert_eq!(g.len(), 6);
        for a in 0..6 {
            assert_eq!(g.product(a, g.inverse(a)), g.identity_pos());
        }
        let swap = s.points().unwrap().iter().position(|p| p == &vec![1, 0]).unwrap();
        assert_eq!(maximal_subgroup(&s, swap).unwrap_err(), Error::NotIdempotent(swap));
    }

    #[test]
    fn isomorphic_idempotents_in_t2() {
        let s = t2();
        let pts = s.points().unwrap();
        let c0 = pts.iter().position(|p| p == &vec![0, 0]).unwrap();
        let c1 = pts.iter().position(|p| p == &vec![1, 1]).unwrap();
        let id = s.identity().unwrap();
        assert_eq!(idempotents_isomorphic(&s, id, id).unwrap(), Some((id, id)));
        let (x, y) = idempotents_isomorphic(&s, c0, c1).unwrap().unwrap();
        assert_eq!((s.mul(x, y), s.mul(y, x)), (c0, c1));
        assert_eq!(idempotents_isomorphic(&s, id, c0).unwrap(), None);
    }

    #[test]
    fn left_zero_class_data() {
        let s = left_zero();
        let g = green_structure(&s).unwrap();
        let jd = jclass_data(&s, &g, 0).unwrap();
        assert_eq!(jd.idempotent, 0);
        assert_eq!(jd.r_class, vec![0]);
        assert_eq!(jd.l_class, vec![0, 1]);
        assert_eq!((jd.m(), jd.n()), (2, 1));
        let e = jd.group.identity_pos();
        assert_eq!(jd.sandwich, vec![vec![Some(e)], vec![Some(e)]]);
    }

    #[test]
    fn group_class_data() {
        let c2 = Semigroup::from_cayley_table(&[vec![0, 1], vec![1, 0]]).unwrap();
        let g = green_structure(&c2).unwrap();
        let jd = jclass_data(&c2, &g, 0).unwrap();
        assert_eq!(jd.l_transversal, vec![0]);
        assert_eq!((jd.m(), jd.n()), (1, 1));
        assert_eq!(jd.sandwich, vec![vec![Some(0)]]);
    }

    #[test]
    fn rectangular_band_class_data() {
        let s = rect_band(2, 2);
        let g = green_structure(&s).unwrap();
        let jd = jclass_data(&s, &g, 0).unwrap();
        assert_eq!((jd.m(), jd.n()), (2, 2));
        assert!(jd.sandwich.iter().flatten().all(|c| *c == Some(0)));
        let s = rect_band(2, 3);
        let jd = jclass_data(&s, &green_structure(&s).unwrap(), 0).unwrap();
        assert_eq!((jd.m(), jd.n()), (2, 3));
    }

    #[test]
    fn unique_factorization_through_transversal() {
        let t3 = Semigroup::from_transformations(&[vec![1, 0, 2], vec![1, 2, 0], vec![0, 0, 2]]).unwrap();
        let g = green_structure(&t3).unwrap();
        for j in g.regular_classes() {
            let jd = jclass_data(&t3, &g, j).unwrap();
            for &r in &jd.r_class {
                let (gp, a) = jd.factor_right(r).unwrap();
                assert_eq!(t3.mul(jd.group.element(gp), jd.l_transversal[a]), r);
            }
            for &l in &jd.l_class {
                let (b, gp) = jd.factor_left(l).unwrap();
                assert_eq!(t3.mul(jd.r_transversal[b], jd.group.element(gp)), l);
            }
        }
    }
}
