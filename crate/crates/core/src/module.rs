//! Right modules given by one action matrix per element of a semigroup or
//! group, plus the subspace machinery built on them.

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::green::MaxSubgroup;
use crate::matrix::{Echelon, Matrix};
use crate::semigroup::Magma;

/// A finite-dimensional right module: `v ↦ v * actions[s]`.
///
/// The acting structure is implicit; `actions` is indexed by its elements
/// (semigroup indices, or positions in a [`MaxSubgroup`]) and `generators`
/// lists indices whose actions generate all the others.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Module {
    field: Field,
    dim: usize,
    actions: Vec<Matrix>,
    generators: Vec<usize>,
}

impl Module {
    pub fn new(field: Field, dim: usize, actions: Vec<Matrix>, generators: Vec<usize>) -> Result<Module> {
        for a in &actions {
            if a.field() != field {
                return Err(Error::FieldMismatch);
            }
            if a.rows() != dim || a.cols() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: a.rows().max(a.cols()),
                });
            }
        }
        if let Some(&g) = generators.iter().find(|&&g| g >= actions.len()) {
            return Err(Error::DimensionMismatch {
                expected: actions.len(),
                found: g,
            });
        }
        Ok(Module {
            field,
            dim,
            actions,
            generators,
        })
    }

    /// The regular module: basis indexed by elements, `x ↦ x * g`.
    pub fn regular<M: Magma + ?Sized>(structure: &M, field: Field) -> Module {
        let n = structure.order();
        let actions = (0..n)
            .map(|g| {
                let mut a = Matrix::zeros(field, n, n);
                for x in 0..n {
                    a.set(x, structure.product(x, g), field.one());
                }
                a
            })
            .collect();
        Module {
            field,
            dim: n,
            actions,
            generators: structure.generators().to_vec(),
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn action(&self, s: usize) -> &Matrix {
        &self.actions[s]
    }

    pub fn actions(&self) -> &[Matrix] {
        &self.actions
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn generator_actions(&self) -> Vec<&Matrix> {
        self.generators.iter().map(|&g| &self.actions[g]).collect()
    }

    /// `Ann M = { s | Ms = 0 }`.
    pub fn annihilator(&self) -> Vec<usize> {
        (0..self.actions.len())
            .filter(|&s| self.actions[s].is_zero())
            .collect()
    }

    /// `MA = 0`.
    pub fn is_annihilated(&self) -> bool {
        self.dim == 0 || self.actions.iter().all(Matrix::is_zero)
    }

    /// First pair `(s, t)` with `action(s) * action(t) != action(st)`.
    pub fn multiplicativity_failure<M: Magma + ?Sized>(&self, structure: &M) -> Option<(usize, usize)> {
        let n = structure.order();
        for s in 0..n {
            for t in 0..n {
                let prod = self.actions[s].mul(&self.actions[t]).expect("square actions");
                if prod != self.actions[structure.product(s, t)] {
                    return Some((s, t));
                }
            }
        }
        None
    }

    /// `Me` as a module for the maximal subgroup at `e`.
    pub fn restrict(&self, group: &MaxSubgroup) -> Result<Module> {
        let image = self.actions[group.identity()].row_space();
        let actions = act_on_subspace(self, &image, group.elements().iter().copied())?;
        Module::new(self.field, image.rows(), actions, group.generators().to_vec())
    }

    pub fn direct_sum(&self, other: &Module) -> Result<Module> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.actions.len() != other.actions.len() {
            return Err(Error::DimensionMismatch {
                expected: self.actions.len(),
                found: other.actions.len(),
            });
        }
        let d = self.dim + other.dim;
        let actions = self
            .actions
            .iter()
            .zip(&other.actions)
            .map(|(a, b)| {
                let mut m = Matrix::zeros(self.field, d, d);
                m.set_block(0, 0, a);
                m.set_block(self.dim, self.dim, b);
                m
            })
            .collect();
        Ok(Module {
            field: self.field,
            dim: d,
            actions,
            generators: self.generators.clone(),
        })
    }
}

/// Matrices of `elements` acting on the row space of `basis` (which must be
/// in reduced row-echelon form), in that basis.
fn act_on_subspace(
    module: &Module,
    basis: &Matrix,
    elements: impl Iterator<Item = usize>,
) -> Result<Vec<Matrix>> {
    let pivots = basis.rref().pivots;
    let k = basis.rows();
    let mut out = Vec::new();
    for s in elements {
        let image = basis.mul(&module.actions[s])?;
        let coords = image.select_cols(&pivots);
        if coords.mul(basis)? != image {
            return Err(Error::NotInvariant(s));
        }
        debug_assert_eq!(coords.rows(), k);
        out.push(coords);
    }
    Ok(out)
}

pub(crate) fn spin_matrices(field: Field, dim: usize, seeds: &[Vec<Scalar>], gens: &[&Matrix]) -> Echelon {
    let mut basis = Echelon::new(field, dim);
    let mut queue = std::collections::VecDeque::new();
    for v in seeds {
        if let Some(r) = basis.insert(v.clone()) {
            queue.push_back(r);
        }
    }
    while let Some(v) = queue.pop_front() {
        if basis.is_full() {
            break;
        }
        for g in gens {
            if let Some(r) = basis.insert(g.left_mul_unchecked(&v)) {
                queue.push_back(r);
                if basis.is_full() {
                    return basis;
                }
            }
        }
    }
    basis
}

/// The smallest submodule containing the rows of `vectors`, as a canonical
/// (reduced row-echelon) basis.
pub fn spin(vectors: &Matrix, module: &Module) -> Result<Matrix> {
    if vectors.cols() != module.dim {
        return Err(Error::DimensionMismatch {
            expected: module.dim,
            found: vectors.cols(),
        });
    }
    if vectors.field() != module.field {
        return Err(Error::FieldMismatch);
    }
    let seeds: Vec<Vec<Scalar>> = vectors.row_vecs().map(<[Scalar]>::to_vec).collect();
    let basis = spin_matrices(module.field, module.dim, &seeds, &module.generator_actions());
    Ok(basis.to_matrix().row_space())
}

/// The submodule spanned by `basis`, in the coordinates of `basis.row_space()`.
pub fn submodule(module: &Module, basis: &Matrix) -> Result<Module> {
    let basis = basis.row_space();
    let actions = act_on_subspace(module, &basis, 0..module.actions.len())?;
    Module::new(module.field, basis.rows(), actions, module.generators.clone())
}

/// `M / W` and the projection `P` with `action(s) * P = P * quotient_action(s)`.
///
/// The quotient basis is the images of the standard basis vectors at the
/// non-pivot columns of `W`'s reduced echelon form.
pub fn quotient_module(module: &Module, sub: &Matrix) -> Result<(Module, Matrix)> {
    let rref = sub.row_space().rref();
    let basis = rref.reduced;
    // validates invariance
    act_on_subspace(module, &basis, 0..module.actions.len())?;
    let pivots = rref.pivots;
    let d = module.dim;
    let free: Vec<usize> = (0..d).filter(|c| !pivots.contains(c)).collect();
    let mut proj = Matrix::zeros(module.field, d, free.len());
    for (k, &f) in free.iter().enumerate() {
        proj.set(f, k, module.field.one());
    }
    for (r, &p) in pivots.iter().enumerate() {
        for (k, &f) in free.iter().enumerate() {
            proj.set(p, k, -basis.get(r, f));
        }
    }
    let actions = module
        .actions
        .iter()
        .map(|a| a.select_rows(&free).mul(&proj))
        .collect::<Result<Vec<_>>>()?;
    let quotient = Module::new(module.field, free.len(), actions, module.generators.clone())?;
    Ok((quotient, proj))
}

/// Basis of `{ X | action1(s) X = X action2(s) for all s }`.
pub fn hom_space(m1: &Module, m2: &Module) -> Result<Vec<Matrix>> {
    if m1.field != m2.field {
        return Err(Error::FieldMismatch);
    }
    if m1.actions.len() != m2.actions.len() {
        return Err(Error::DimensionMismatch {
            expected: m1.actions.len(),
            found: m2.actions.len(),
        });
    }
    let (d1, d2) = (m1.dim, m2.dim);
    let unknowns = d1 * d2;
    if unknowns == 0 {
        return Ok(Vec::new());
    }
    let mut gens: Vec<usize> = m1.generators.iter().chain(&m2.generators).copied().collect();
    gens.sort_unstable();
    gens.dedup();
    let field = m1.field;
    let mut system = Matrix::zeros(field, gens.len() * unknowns, unknowns);
    for (g, &s) in gens.iter().enumerate() {
        let (a1, a2) = (&m1.actions[s], &m2.actions[s]);
        for i in 0..d1 {
            for k in 0..d2 {
                let eq = g * unknowns + i * d2 + k;
                // (A1 X)[i][k] = Σ_j A1[i][j] X[j][k]
                for j in 0..d1 {
                    let c = a1.get(i, j);
                    if !c.is_zero() {
                        let var = j * d2 + k;
                        let x = system.get(eq, var) + c;
                        system.set(eq, var, x);
                    }
                }
                // (X A2)[i][k] = Σ_j X[i][j] A2[j][k]
                for j in 0..d2 {
                    let c = a2.get(j, k);
                    if !c.is_zero() {
                        let var = i * d2 + j;
                        let x = system.get(eq, var) - c;
                        system.set(eq, var, x);
                    }
                }
            }
        }
    }
    let kernel = system.kernel();
    Ok(kernel
        .row_vecs()
        .map(|row| Matrix::from_rows(field, d2, row.chunks(d2).map(<[Scalar]>::to_vec).collect()).expect("shape"))
        .collect())
}

pub fn hom_dim(m1: &Module, m2: &Module) -> Result<usize> {
    Ok(hom_space(m1, m2)?.len())
}
