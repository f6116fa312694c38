//! Searching for invariant subspaces and certifying simplicity.
//!
//! Three tools, cheapest first:
//! - spinning a handful of vectors (standard basis, random),
//! - spinning kernels of singular algebra elements `θ` and of `θᵀ` on the
//!   dual; a proper subspace of the dual gives a proper submodule as its
//!   annihilator,
//! - Norton's criterion: if every nonzero vector of `ker θ` spins to `M` and
//!   every nonzero vector of `ker θᵀ` spins to `M*`, then `M` is simple;
//!   for invertible `θ`, an irreducible characteristic polynomial already
//!   rules out invariant subspaces.
//!
//! Over a finite field with `p^dim` at most the exhaustive cap, every
//! projective point is spun instead.

use rand::Rng;

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::matrix::Matrix;
use crate::module::{spin_matrices, Module};
use crate::poly::{is_irreducible, krylov_charpoly};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchConfig {
    /// Candidate algebra elements tried before giving up.
    pub attempts: usize,
    /// Random vectors spun by the sampled simplicity test.
    pub samples: usize,
    /// Largest `p^dim` for exhaustive enumeration.
    pub exhaustive_cap: u64,
    /// Largest number of projective points of a kernel enumerated for Norton's test.
    pub norton_points: u64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            attempts: 400,
            samples: 64,
            exhaustive_cap: 1 << 20,
            norton_points: 4096,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SimplicityMode {
    /// Exhaustive when within the cap, sampled otherwise.
    Auto,
    Exhaustive,
    Sampled,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Simplicity {
    /// Proven, by enumeration or by Norton's criterion.
    Simple,
    /// No proper submodule found and no certificate either.
    ProbablySimple,
    /// Witness: basis of a proper nonzero submodule.
    NotSimple(Matrix),
}

impl Simplicity {
    pub fn is_not_simple(&self) -> bool {
        matches!(self, Simplicity::NotSimple(_))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Search {
    Split(Matrix),
    Simple,
    Inconclusive,
}

/// Number of projective points of `F^k`, if at most `cap`.
fn projective_points(field: Field, k: usize, cap: u64) -> Option<u64> {
    let p = field.order()?;
    let mut total: u64 = 1;
    for _ in 0..k {
        total = total.checked_mul(p)?;
        if total - 1 > cap.saturating_mul(p - 1) {
            return None;
        }
    }
    Some((total - 1) / (p - 1))
}

fn within_exhaustive_cap(module: &Module, cap: u64) -> bool {
    match module.field().order() {
        None => false,
        Some(p) => {
            let mut total: u64 = 1;
            for _ in 0..module.dim() {
                match total.checked_mul(p) {
                    Some(t) if t <= cap => total = t,
                    _ => return false,
                }
            }
            true
        }
    }
}

/// Calls `visit` on one representative of each projective point of the row
/// space of `basis` (coefficient vectors normalized to a leading 1), over a
/// finite field. Stops early when `visit` returns `false`.
fn for_each_projective_point(basis: &Matrix, mut visit: impl FnMut(Vec<Scalar>) -> bool) {
    let field = basis.field();
    let p = field.order().expect("finite field");
    let k = basis.rows();
    for lead in 0..k {
        let tail = k - lead - 1;
        let count = p.pow(tail as u32);
        for code in 0..count {
            let mut coeffs = vec![field.zero(); k];
            coeffs[lead] = field.one();
            let mut c = code;
            for slot in coeffs.iter_mut().skip(lead + 1) {
                *slot = field.from_u64(c % p);
                c /= p;
            }
            let v = basis.left_mul_unchecked(&coeffs);
            if !visit(v) {
                return;
            }
        }
    }
}

struct Spinner<'a> {
    module: &'a Module,
    gens: Vec<&'a Matrix>,
    dual_gens: Vec<Matrix>,
}

impl<'a> Spinner<'a> {
    fn new(module: &'a Module) -> Self {
        let gens = module.generator_actions();
        let dual_gens = gens.iter().map(|g| g.transpose()).collect();
        Spinner {
            module,
            gens,
            dual_gens,
        }
    }

    fn dim(&self) -> usize {
        self.module.dim()
    }

    /// Span of the spin of `v` when it is a proper nonzero subspace.
    fn proper(&self, v: Vec<Scalar>) -> Option<Matrix> {
        let e = spin_matrices(self.module.field(), self.dim(), &[v], &self.gens);
        (!e.is_empty() && !e.is_full()).then(|| e.to_matrix().row_space())
    }

    /// Submodule obtained from a proper spin of `w` in the dual.
    fn proper_dual(&self, w: Vec<Scalar>) -> Option<Matrix> {
        let dual: Vec<&Matrix> = self.dual_gens.iter().collect();
        let e = spin_matrices(self.module.field(), self.dim(), &[w], &dual);
        if e.is_empty() || e.is_full() {
            return None;
        }
        // { v | v · wᵀ = 0 for all w in the dual subspace }
        Some(e.to_matrix().transpose().nullspace().row_space())
    }

    fn spins_full(&self, v: Vec<Scalar>) -> bool {
        spin_matrices(self.module.field(), self.dim(), &[v], &self.gens).is_full()
    }

    fn dual_spins_full(&self, w: Vec<Scalar>) -> bool {
        let dual: Vec<&Matrix> = self.dual_gens.iter().collect();
        spin_matrices(self.module.field(), self.dim(), &[w], &dual).is_full()
    }
}

fn random_vector<R: Rng + ?Sized>(field: Field, dim: usize, rng: &mut R) -> Vec<Scalar> {
    (0..dim).map(|_| field.random(rng)).collect()
}

fn random_element<R: Rng + ?Sized>(module: &Module, rng: &mut R) -> Matrix {
    let field = module.field();
    let mut acc = Matrix::zeros(field, module.dim(), module.dim());
    for a in module.actions() {
        let c = field.random(rng);
        if !c.is_zero() {
            acc = acc.add(&a.scale(&c)).expect("same shape");
        }
    }
    acc
}

fn shift<R: Rng + ?Sized>(m: &Matrix, field: Field, rng: &mut R) -> Matrix {
    let lambda = match field {
        Field::Rational => field.from_i64([0, 1, -1, 2, -2][rng.gen_range(0..5)]),
        Field::Prime(_) => field.random(rng),
    };
    m.sub(&Matrix::identity(field, m.rows()).scale(&lambda))
        .expect("square")
}

/// Algebra element for attempt `k`, plus the identity shift where useful.
fn candidate<R: Rng + ?Sized>(module: &Module, k: usize, rng: &mut R) -> Matrix {
    let field = module.field();
    match k % 3 {
        0 => random_element(module, rng),
        1 => {
            let s = rng.gen_range(0..module.actions().len());
            shift(module.action(s), field, rng)
        }
        _ => shift(&random_element(module, rng), field, rng),
    }
}

fn exhaustive(spinner: &Spinner) -> Search {
    let id = Matrix::identity(spinner.module.field(), spinner.dim());
    let mut found = None;
    for_each_projective_point(&id, |v| match spinner.proper(v) {
        Some(w) => {
            found = Some(w);
            false
        }
        None => true,
    });
    match found {
        Some(w) => Search::Split(w),
        None => Search::Simple,
    }
}

/// Tries `θ`; returns a split, a certificate, or nothing.
fn try_element<R: Rng + ?Sized>(spinner: &Spinner, theta: &Matrix, cfg: &SearchConfig, rng: &mut R) -> Option<Search> {
    let field = spinner.module.field();
    let kernel = theta.nullspace();
    if kernel.rows() == 0 {
        let v = random_vector(field, spinner.dim(), rng);
        return krylov_charpoly(theta, &v)
            .filter(|chi| is_irreducible(chi))
            .map(|_| Search::Simple);
    }
    let mut seeds: Vec<Vec<Scalar>> = kernel.row_vecs().map(<[Scalar]>::to_vec).collect();
    seeds.push(kernel.left_mul_unchecked(&random_vector(field, kernel.rows(), rng)));
    for v in seeds {
        if let Some(w) = spinner.proper(v) {
            return Some(Search::Split(w));
        }
    }
    let dual_kernel = theta.transpose().nullspace();
    let mut seeds: Vec<Vec<Scalar>> = dual_kernel.row_vecs().map(<[Scalar]>::to_vec).collect();
    seeds.push(dual_kernel.left_mul_unchecked(&random_vector(field, dual_kernel.rows(), rng)));
    for w in seeds {
        if let Some(u) = spinner.proper_dual(w) {
            return Some(Search::Split(u));
        }
    }

    // Norton: every point of both kernels must spin to the whole space.
    let enumerable = |k: &Matrix| match field {
        Field::Rational => k.rows() == 1,
        Field::Prime(_) => projective_points(field, k.rows(), cfg.norton_points).is_some(),
    };
    if !enumerable(&kernel) || !enumerable(&dual_kernel) {
        return None;
    }
    let all_full = |k: &Matrix, full: &dyn Fn(Vec<Scalar>) -> bool| -> bool {
        if k.rows() == 1 {
            return full(k.row(0).to_vec());
        }
        let mut ok = true;
        for_each_projective_point(k, |v| {
            ok = full(v);
            ok
        });
        ok
    };
    if all_full(&kernel, &|v| spinner.spins_full(v)) && all_full(&dual_kernel, &|w| spinner.dual_spins_full(w)) {
        return Some(Search::Simple);
    }
    None
}

/// Looks for a proper nonzero submodule of a module with `dim >= 2`.
pub(crate) fn find_submodule<R: Rng + ?Sized>(module: &Module, cfg: &SearchConfig, rng: &mut R) -> Search {
    let spinner = Spinner::new(module);
    if within_exhaustive_cap(module, cfg.exhaustive_cap) {
        return exhaustive(&spinner);
    }
    let field = module.field();
    for i in 0..module.dim() {
        let mut v = vec![field.zero(); module.dim()];
        v[i] = field.one();
        if let Some(w) = spinner.proper(v) {
            return Search::Split(w);
        }
    }
    for k in 0..cfg.attempts {
        let theta = candidate(module, k, rng);
        if let Some(result) = try_element(&spinner, &theta, cfg, rng) {
            return result;
        }
    }
    Search::Inconclusive
}

/// Decides whether `module` has no proper nonzero submodule.
///
/// Requires `dim >= 1` and a nonzero action.
pub fn is_simple<R: Rng + ?Sized>(
    module: &Module,
    mode: SimplicityMode,
    cfg: &SearchConfig,
    rng: &mut R,
) -> Result<Simplicity> {
    if module.is_annihilated() {
        return Err(Error::ZeroAction);
    }
    if module.dim() == 1 {
        return Ok(Simplicity::Simple);
    }
    let spinner = Spinner::new(module);
    let within = within_exhaustive_cap(module, cfg.exhaustive_cap);
    let exhaustive_mode = match mode {
        SimplicityMode::Auto => within,
        SimplicityMode::Exhaustive if !within => return Err(Error::ExhaustiveCapExceeded),
        SimplicityMode::Exhaustive => true,
        SimplicityMode::Sampled => false,
    };
    if exhaustive_mode {
        return Ok(match exhaustive(&spinner) {
            Search::Split(w) => Simplicity::NotSimple(w),
            _ => Simplicity::Simple,
        });
    }

    let field = module.field();
    let mut seeds = Vec::new();
    for i in 0..module.dim() {
        let mut v = vec![field.zero(); module.dim()];
        v[i] = field.one();
        seeds.push(v);
    }
    for _ in 0..cfg.samples {
        seeds.push(random_vector(field, module.dim(), rng));
    }
    for v in seeds {
        if let Some(w) = spinner.proper(v) {
            return Ok(Simplicity::NotSimple(w));
        }
    }
    for k in 0..cfg.attempts {
        let theta = candidate(module, k, rng);
        match try_element(&spinner, &theta, cfg, rng) {
            Some(Search::Split(w)) => return Ok(Simplicity::NotSimple(w)),
            Some(Search::Simple) => return Ok(Simplicity::Simple),
            _ => {}
        }
    }
    Ok(Simplicity::ProbablySimple)
}
