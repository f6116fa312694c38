//! Bands and semigroups in DA, where every simple module is one-dimensional
//! and given by the characteristic function of a filter.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::green::{maximal_subgroup, GreenStructure};
use crate::matrix::Matrix;
use crate::module::Module;
use crate::semigroup::{Magma, Semigroup};

pub fn is_band(s: &Semigroup) -> bool {
    (0..s.size()).all(|x| s.is_idempotent(x))
}

/// `S \ I_J` is closed under multiplication.
pub fn complement_closed_check(s: &Semigroup, green: &GreenStructure, j: usize) -> Result<bool> {
    let ideal = green.ideal_i_j(s, j)?;
    let outside: Vec<usize> = (0..s.size()).filter(|x| ideal.binary_search(x).is_err()).collect();
    Ok(outside
        .iter()
        .all(|&a| outside.iter().all(|&b| ideal.binary_search(&s.mul(a, b)).is_err())))
}

/// Every regular J-class is a subsemigroup and every maximal subgroup is trivial.
pub fn is_in_da(s: &Semigroup, green: &GreenStructure) -> Result<bool> {
    for e in s.idempotents() {
        if maximal_subgroup(s, e)?.len() != 1 {
            return Ok(false);
        }
    }
    for j in green.regular_classes() {
        let class = &green.j_classes[j];
        let closed = class
            .iter()
            .all(|&a| class.iter().all(|&b| green.j_of[s.mul(a, b)] == j));
        if !closed {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `s ↦ 1` if `J ≤ J(s)`, else `0`.
fn characters(s: &Semigroup, green: &GreenStructure, field: Field) -> Result<Vec<(usize, Module)>> {
    let mut out = Vec::new();
    for j in green.regular_classes() {
        if !complement_closed_check(s, green, j)? {
            return Err(Error::VerificationFailure(format!(
                "complement of I_J is not a subsemigroup for J-class {j}"
            )));
        }
        let ideal = green.ideal_i_j(s, j)?;
        let actions = (0..s.size())
            .map(|x| {
                if ideal.binary_search(&x).is_ok() {
                    Matrix::zeros(field, 1, 1)
                } else {
                    Matrix::identity(field, 1)
                }
            })
            .collect();
        out.push((j, Module::new(field, 1, actions, s.generators().to_vec())?));
    }
    Ok(out)
}

/// One degree-one representation per J-class.
pub fn band_irreducibles(s: &Semigroup, green: &GreenStructure, field: Field) -> Result<Vec<(usize, Module)>> {
    if !is_band(s) {
        return Err(Error::NotABand);
    }
    characters(s, green, field)
}

/// One degree-one representation per regular J-class.
pub fn da_irreducibles(s: &Semigroup, green: &GreenStructure, field: Field) -> Result<Vec<(usize, Module)>> {
    if !is_in_da(s, green)? {
        return Err(Error::NotInDA);
    }
    characters(s, green, field)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::green::green_structure;

    fn free_band_2() -> Semigroup {
        // a, b, ab, ba, aba, bab as words
        let words = ["a", "b", "ab", "ba", "aba", "bab"];
        let reduce = |w: String| -> String {
            let content: std::collections::BTreeSet<char> = w.chars().collect();
            if content.len() == 1 {
                return w[..1].to_string();
            }
            let (first, last) = (w.chars().next().unwrap(), w.chars().last().unwrap());
            match (first, last) {
                ('a', 'a') => "aba".into(),
                ('b', 'b') => "bab".into(),
                ('a', 'b') => "ab".into(),
                _ => "ba".into(),
            }
        };
        let table: Vec<Vec<usize>> = words
            .iter()
            .map(|x| {
                words
                    .iter()
                    .map(|y| words.iter().position(|w| *w == reduce(format!("{x}{y}"))).unwrap())
                    .collect()
            })
            .collect();
        Semigroup::from_cayley_table(&table).unwrap()
    }

    #[test]
    fn band_detection() {
        assert!(is_band(&free_band_2()));
        let c2 = Semigroup::from_cayley_table(&[vec![0, 1], vec![1, 0]]).unwrap();
        assert!(!is_band(&c2));
        let g = green_structure(&c2).unwrap();
        assert_eq!(band_irreducibles(&c2, &g, Field::Rational), Err(Error::NotABand));
    }

    #[test]
    fn free_band_has_three_characters() {
        let s = free_band_2();
        let g = green_structure(&s).unwrap();
        assert_eq!(g.j_class_count(), 3);
        for field in [Field::Rational, Field::Prime(2), Field::Prime(5)] {
            let irr = band_irreducibles(&s, &g, field).unwrap();
            assert_eq!(irr.len(), 3);
            for (_, m) in &irr {
                assert_eq!(m.multiplicativity_failure(&s), None);
            }
        }
    }

    #[test]
    fn chain_characters() {
        let s = Semigroup::from_cayley_table(&[vec![0, 0], vec![0, 1]]).unwrap();
        let g = green_structure(&s).unwrap();
        let irr = band_irreducibles(&s, &g, Field::Rational).unwrap();
        let top = irr.iter().find(|(j, _)| *j == g.j_of[1]).unwrap();
        assert!(top.1.action(0).is_zero());
        assert!(!top.1.action(1).is_zero());
        let bottom = irr.iter().find(|(j, _)| *j == g.j_of[0]).unwrap();
        assert!(bottom.1.annihilator().is_empty());
    }

    #[test]
    fn nilpotent_monoid_is_da_not_band() {
        let s = Semigroup::from_cayley_table(&[vec![0, 1, 2], vec![1, 2, 2], vec![2, 2, 2]]).unwrap();
        let g = green_structure(&s).unwrap();
        assert!(!is_band(&s));
        assert!(is_in_da(&s, &g).unwrap());
        let irr = da_irreducibles(&s, &g, Field::Prime(3)).unwrap();
        assert_eq!(irr.len(), 2);
        for (_, m) in &irr {
            assert_eq!(m.multiplicativity_failure(&s), None);
        }
    }

    #[test]
    fn groups_are_not_in_da() {
        let c2 = Semigroup::from_cayley_table(&[vec![0, 1], vec![1, 0]]).unwrap();
        let g = green_structure(&c2).unwrap();
        assert!(!is_in_da(&c2, &g).unwrap());
        assert_eq!(da_irreducibles(&c2, &g, Field::Rational).unwrap_err(), Error::NotInDA);
    }
}
