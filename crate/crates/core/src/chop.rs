//! Composition factors of modules, and the simple modules of a maximal
//! subgroup obtained by chopping its regular module.

use rand::Rng;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::green::MaxSubgroup;
use crate::matrix::Matrix;
use crate::meataxe::{find_submodule, Search, SearchConfig};
use crate::module::{hom_dim, quotient_module, submodule, Module};

/// One isomorphism class of composition factors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factor {
    pub module: Module,
    pub multiplicity: usize,
    /// One-dimensional with every element acting as zero. Such factors are
    /// not simple modules in the sense used for classification (`MA = 0`).
    pub annihilated: bool,
}

/// The regular module of a maximal subgroup, right translation `h ↦ hg`.
pub fn regular_module(group: &MaxSubgroup, field: Field) -> Module {
    Module::regular(group, field)
}

fn null_line(module: &Module) -> Module {
    let field = module.field();
    let n = module.actions().len();
    Module::new(field, 1, vec![Matrix::zeros(field, 1, 1); n], module.generators().to_vec()).expect("1x1 zero actions")
}

fn split_into_leaves<R: Rng + ?Sized>(
    module: Module,
    cfg: &SearchConfig,
    rng: &mut R,
    leaves: &mut Vec<(Module, bool)>,
) -> Result<()> {
    if module.dim() == 0 {
        return Ok(());
    }
    if module.is_annihilated() {
        let line = null_line(&module);
        for _ in 0..module.dim() {
            leaves.push((line.clone(), true));
        }
        return Ok(());
    }
    if module.dim() == 1 {
        leaves.push((module, false));
        return Ok(());
    }
    match find_submodule(&module, cfg, rng) {
        Search::Simple => {
            leaves.push((module, false));
            Ok(())
        }
        Search::Split(w) => {
            let sub = submodule(&module, &w)?;
            let (quot, _) = quotient_module(&module, &w)?;
            split_into_leaves(sub, cfg, rng, leaves)?;
            split_into_leaves(quot, cfg, rng, leaves)
        }
        Search::Inconclusive => Err(Error::ChopFailure(format!(
            "no submodule found and no simplicity certificate for a {}-dimensional module over {} after {} attempts",
            module.dim(),
            module.field(),
            cfg.attempts
        ))),
    }
}

/// Composition factors with multiplicities, isomorphism classes merged by
/// nonvanishing hom-spaces. Ordered by dimension, then by discovery.
pub fn chop<R: Rng + ?Sized>(module: &Module, cfg: &SearchConfig, rng: &mut R) -> Result<Vec<Factor>> {
    let mut leaves = Vec::new();
    split_into_leaves(module.clone(), cfg, rng, &mut leaves)?;
    let mut factors: Vec<Factor> = Vec::new();
    for (leaf, annihilated) in leaves {
        let mut matched = false;
        for f in factors.iter_mut() {
            if f.annihilated == annihilated
                && f.module.dim() == leaf.dim()
                && hom_dim(&f.module, &leaf)? > 0
            {
                f.multiplicity += 1;
                matched = true;
                break;
            }
        }
        if !matched {
            factors.push(Factor {
                module: leaf,
                multiplicity: 1,
                annihilated,
            });
        }
    }
    factors.sort_by_key(|f| f.module.dim());
    Ok(factors)
}

/// Pairwise non-isomorphic simple modules of `group` over `field`; every
/// simple module is a quotient of the regular module, so the list is complete.
pub fn irreducibles<R: Rng + ?Sized>(
    group: &MaxSubgroup,
    field: Field,
    cfg: &SearchConfig,
    rng: &mut R,
) -> Result<Vec<Module>> {
    let factors = chop(&regular_module(group, field), cfg, rng)?;
    Ok(factors.into_iter().map(|f| f.module).collect())
}
